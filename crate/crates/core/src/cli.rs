//! Command-line front end.
//!
//! Exit codes: 0 success (for `ks`: proved), 1 `ks` not proved, 2 bad input,
//! 3 budget exhausted (for `ks`: only inconclusive evidence), 4 internal error.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::bases::{
    enumerate_all_bases, filter_rays_by_weight, find_seed_basis, generate_translated_system,
    restrict_system, Basis, BasisSystem, SeedSearch, DEFAULT_NODE_BUDGET, GOLAY24_SEED,
};
use crate::codes::{BuiltinCode, GeneratorMatrix, MATERIALIZE_LIMIT};
use crate::error::{input, Error, Result};
use crate::kscheck::{
    generic_binary_pipeline, ks_certificate, occurrence_by_weight, OracleVerdict,
    DEFAULT_ORACLE_BUDGET,
};
use crate::rays::{build_ray_system, RaySystem};

/// Seed-search budget for codes too large to materialize, unless overridden.
pub const DEFAULT_STREAMED_SEED_BUDGET: u64 = 100_000;

#[derive(Debug, Parser)]
#[command(
    name = "golay-ks",
    version,
    about = "Kochen-Specker proofs from Golay codes"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Directory for output artifacts.
    #[arg(long, global = true, default_value = "out")]
    pub out: PathBuf,

    /// Node budget for clique enumeration and seed search.
    #[arg(long, global = true)]
    pub budget: Option<u64>,

    /// Node budget for the exact-cover oracle.
    #[arg(long, global = true, default_value_t = DEFAULT_ORACLE_BUDGET)]
    pub oracle_budget: u64,

    /// Worker threads (defaults to all cores).
    #[arg(long, global = true)]
    pub threads: Option<usize>,

    /// Allow the expensive paths (full 24-clique enumeration, large seed searches).
    #[arg(long, global = true)]
    pub override_expensive: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Code parameters, weight distribution and generator matrix.
    Code {
        #[command(flatten)]
        code: CodeArgs,
        /// Also print the generator matrix in the text format.
        #[arg(long)]
        emit_matrix: bool,
    },
    /// Ray listing and orthogonality summary.
    Rays {
        #[command(flatten)]
        code: CodeArgs,
        #[command(flatten)]
        select: SelectArgs,
    },
    /// Basis system by seed translation or exhaustive enumeration.
    Bases {
        #[command(flatten)]
        code: CodeArgs,
        #[command(flatten)]
        select: SelectArgs,
        #[command(flatten)]
        basis: BasisArgs,
    },
    /// KS certificate for a basis system.
    Ks {
        /// Code name or matrix file; omit when `--bases` is given.
        code: Option<String>,
        #[arg(long, num_args = 0..=1, default_missing_value = "last")]
        puncture: Option<String>,
        /// Read the basis system from a bases JSON file.
        #[arg(long, conflicts_with = "code")]
        bases: Option<PathBuf>,
        #[command(flatten)]
        select: SelectArgs,
        #[command(flatten)]
        basis: BasisArgs,
    },
    /// Generic binary-code construction: divisibility, seed search, certificate.
    Pipeline {
        #[command(flatten)]
        code: CodeArgs,
    },
}

#[derive(Debug, Args)]
pub struct CodeArgs {
    /// Built-in code (golay24, golay12, qr48, hamming8) or a matrix file.
    pub code: String,
    /// Delete a column (default: the last one).
    #[arg(long, num_args = 0..=1, default_missing_value = "last")]
    pub puncture: Option<String>,
}

#[derive(Debug, Args)]
pub struct SelectArgs {
    /// Keep only rays from codewords of this weight (ternary codes).
    #[arg(long)]
    pub weight: Option<usize>,
    /// Restrict to rays orthogonal to these mutually orthogonal labels.
    #[arg(long, value_delimiter = ',')]
    pub restrict: Vec<u32>,
}

#[derive(Debug, Args)]
pub struct BasisArgs {
    #[arg(long, value_enum)]
    pub mode: Option<Mode>,
    /// Seed basis labels for translate mode.
    #[arg(long, value_delimiter = ',')]
    pub seed: Vec<u32>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Translate,
    Enumerate,
}

/// Runs a parsed command and returns the process exit code.
pub fn run(cli: Cli) -> i32 {
    if let Some(n) = cli.threads {
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global();
    }
    match dispatch(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            exit_code(&e)
        }
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::BudgetExhausted { .. } => 3,
        Error::Internal(_) => 4,
        _ => 2,
    }
}

fn dispatch(cli: &Cli) -> Result<i32> {
    match &cli.command {
        Command::Code { code, emit_matrix } => cmd_code(cli, code, *emit_matrix),
        Command::Rays { code, select } => cmd_rays(cli, code, select),
        Command::Bases {
            code,
            select,
            basis,
        } => cmd_bases(cli, code, select, basis),
        Command::Ks {
            code,
            puncture,
            bases,
            select,
            basis,
        } => {
            let (bs, rs) = match (bases, code) {
                (Some(path), _) => (BasisSystem::from_json(&read(path)?)?, None),
                (None, Some(code)) => {
                    let args = CodeArgs {
                        code: code.clone(),
                        puncture: puncture.clone(),
                    };
                    let g = load_code(&args)?;
                    let rs = select_rays(&g, select)?;
                    (basis_system(cli, &g, &rs, select, basis)?, Some(rs))
                }
                (None, None) => return Err(input("ks needs a code or --bases FILE")),
            };
            cmd_ks(cli, &bs, rs.as_ref())
        }
        Command::Pipeline { code } => cmd_pipeline(cli, code),
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| input(format!("cannot read {}: {e}", path.display())))
}

fn write(cli: &Cli, name: &str, contents: &str) -> Result<()> {
    fs::create_dir_all(&cli.out)
        .map_err(|e| input(format!("cannot create {}: {e}", cli.out.display())))?;
    let path = cli.out.join(name);
    fs::write(&path, contents).map_err(|e| input(format!("cannot write {}: {e}", path.display())))
}

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("serializable") + "\n"
}

/// Resolves a built-in name or a matrix file, then applies `--puncture`.
/// A file whose matrix equals a built-in generator takes the built-in's name.
pub fn load_code(args: &CodeArgs) -> Result<GeneratorMatrix> {
    let g = match args.code.parse::<BuiltinCode>() {
        Ok(b) => b.generator(),
        Err(_) => {
            let path = Path::new(&args.code);
            if !path.is_file() {
                return Err(input(format!(
                    "unknown code or missing file `{}`",
                    args.code
                )));
            }
            let stem = path
                .file_stem()
                .and_then(|s| s.to_str())
                .unwrap_or("matrix");
            let g = GeneratorMatrix::parse_text(stem, &read(path)?)?;
            match BuiltinCode::ALL
                .into_iter()
                .find(|b| b.generator().rows() == g.rows())
            {
                Some(b) => g.renamed(b.name()),
                None => g,
            }
        }
    };
    match &args.puncture {
        None => Ok(g),
        Some(pos) => {
            let pos = match pos.as_str() {
                "last" => g.length() - 1,
                p => p
                    .parse()
                    .map_err(|_| input(format!("bad puncture position `{p}`")))?,
            };
            g.puncture(pos)
        }
    }
}

#[derive(Serialize)]
struct CodeReport {
    codewords: String,
    dimension: usize,
    field: u8,
    length: usize,
    min_distance: usize,
    name: String,
    symbol: String,
    weight_distribution: BTreeMap<usize, u64>,
}

fn cmd_code(cli: &Cli, args: &CodeArgs, emit_matrix: bool) -> Result<i32> {
    let g = load_code(args)?;
    let hist = g.weight_distribution()?;
    let spec = g.code_spec()?;
    let report = CodeReport {
        codewords: g.codeword_count().to_string(),
        dimension: spec.dimension,
        field: spec.field_order,
        length: spec.length,
        min_distance: spec.min_distance,
        name: g.name().to_string(),
        symbol: spec.to_string(),
        weight_distribution: hist,
    };
    write(cli, "generator.txt", &g.to_text())?;
    write(cli, "code.json", &to_json(&report))?;
    if emit_matrix {
        print!("{}", g.to_text());
    } else {
        println!(
            "{} {} over GF({}), {} codewords",
            g.name(),
            spec,
            spec.field_order,
            g.codeword_count()
        );
    }
    Ok(0)
}

fn select_rays(g: &GeneratorMatrix, select: &SelectArgs) -> Result<RaySystem> {
    let mut rs = build_ray_system(g)?;
    if let Some(w) = select.weight {
        rs = filter_rays_by_weight(&rs, w)?;
    }
    if !select.restrict.is_empty() {
        rs = restrict_system(&rs, &select.restrict)?;
    }
    Ok(rs)
}

#[derive(Serialize)]
struct RaySummary {
    basis_size: usize,
    degree_histogram: BTreeMap<usize, usize>,
    dimension: usize,
    orthogonal_pairs: usize,
    rays: usize,
    system: String,
}

fn cmd_rays(cli: &Cli, args: &CodeArgs, select: &SelectArgs) -> Result<i32> {
    let g = load_code(args)?;
    let rs = select_rays(&g, select)?;
    let summary = RaySummary {
        basis_size: rs.basis_size(),
        degree_histogram: rs.degree_histogram(),
        dimension: rs.dimension(),
        orthogonal_pairs: rs.orthogonal_pair_count(),
        rays: rs.len(),
        system: rs.id().to_string(),
    };
    write(cli, "rays.csv", &rs.to_csv())?;
    write(cli, "rays_summary.json", &to_json(&summary))?;
    println!(
        "{}: {} rays in dimension {}, {} orthogonal pairs",
        rs.id(),
        rs.len(),
        rs.dimension(),
        summary.orthogonal_pairs
    );
    Ok(0)
}

fn basis_system(
    cli: &Cli,
    g: &GeneratorMatrix,
    rs: &RaySystem,
    select: &SelectArgs,
    args: &BasisArgs,
) -> Result<BasisSystem> {
    let narrowed = select.weight.is_some() || !select.restrict.is_empty();
    let mode = args.mode.unwrap_or(if g.is_binary() && !narrowed {
        Mode::Translate
    } else {
        Mode::Enumerate
    });
    let budget = cli.budget.unwrap_or(DEFAULT_NODE_BUDGET);
    match mode {
        Mode::Translate => {
            if narrowed {
                return Err(input(
                    "translate mode works on the full binary ray system only",
                ));
            }
            let seed = if !args.seed.is_empty() {
                Basis::new(args.seed.clone())
            } else if g.name() == "golay24" {
                Basis::new(GOLAY24_SEED.to_vec())
            } else {
                match find_seed_basis(rs, budget) {
                    SeedSearch::Found(b) => b,
                    SeedSearch::Exhausted { .. } => return Err(Error::BudgetExhausted { budget }),
                    SeedSearch::ProvenAbsent { .. } => {
                        return Err(input(format!("{} has no basis to translate", rs.id())))
                    }
                }
            };
            generate_translated_system(&seed, rs)
        }
        Mode::Enumerate => {
            if g.is_binary() && rs.basis_size() >= 24 && !cli.override_expensive {
                return Err(input(
                    "enumerating every 24-ray basis of the binary system needs --override-expensive",
                ));
            }
            enumerate_all_bases(rs, rs.basis_size(), budget)
        }
    }
}

fn cmd_bases(cli: &Cli, args: &CodeArgs, select: &SelectArgs, basis: &BasisArgs) -> Result<i32> {
    let g = load_code(args)?;
    let rs = select_rays(&g, select)?;
    let bs = basis_system(cli, &g, &rs, select, basis)?;
    write(cli, "bases.json", &bs.to_json())?;
    println!(
        "{}: {} bases of {} rays",
        bs.ray_system,
        bs.len(),
        bs.dimension
    );
    Ok(0)
}

fn cmd_ks(cli: &Cli, bs: &BasisSystem, rs: Option<&RaySystem>) -> Result<i32> {
    let cert = ks_certificate(bs, cli.oracle_budget)?;
    write(cli, "certificate.json", &cert.to_json())?;
    if let Some(rs) = rs {
        write(
            cli,
            "classes.json",
            &to_json(&occurrence_by_weight(bs, rs)?),
        )?;
    }
    let verdict = if cert.ks_proved {
        "KS proved"
    } else {
        "not proved"
    };
    let oracle = match cert.oracle {
        OracleVerdict::Feasible => "feasible",
        OracleVerdict::Infeasible => "infeasible",
        OracleVerdict::Unknown => "unknown",
    };
    let summary =
        format!(
        "system | rays-bases | equation\n{}\ndiophantine: {}; exact cover: {oracle}; {verdict}\n",
        cert.summary_row(),
        if cert.diophantine_feasible { "solvable" } else { "no solution" },
    );
    write(cli, "summary.txt", &summary)?;
    print!("{summary}");
    Ok(match (cert.ks_proved, cert.oracle) {
        (true, _) => 0,
        (false, OracleVerdict::Unknown) => 3,
        (false, _) => 1,
    })
}

fn cmd_pipeline(cli: &Cli, args: &CodeArgs) -> Result<i32> {
    let g = load_code(args)?;
    let streamed = g.codeword_count() > MATERIALIZE_LIMIT;
    let budget = match (cli.budget, streamed) {
        (Some(b), true) if b > DEFAULT_STREAMED_SEED_BUDGET && !cli.override_expensive => {
            return Err(input(format!(
                "seed budgets above {DEFAULT_STREAMED_SEED_BUDGET} for {} need --override-expensive",
                g.name()
            )))
        }
        (Some(b), _) => b,
        (None, true) => DEFAULT_STREAMED_SEED_BUDGET,
        (None, false) => DEFAULT_NODE_BUDGET,
    };
    let report = generic_binary_pipeline(&g, budget, cli.oracle_budget)?;
    write(cli, "pipeline.json", &report.to_json())?;
    println!(
        "{} [{},{},{}]: {} rays, basis size {} {} it; seed {}; {}",
        report.code,
        report.length,
        report.dimension,
        report.min_distance,
        report.divisibility.bases,
        report.divisibility.basis_size,
        if report.divisibility.divisible {
            "divides"
        } else {
            "does not divide"
        },
        report.seed.status,
        if report.ks_proved {
            "KS proved"
        } else {
            "no proof"
        },
    );
    Ok(0)
}
