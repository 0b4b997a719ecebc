//! Kochen-Specker colourability of basis systems.
//!
//! A system is KS-uncolourable when no 0/1 assignment to its rays puts
//! exactly one 1 in every basis. Two independent deciders are provided:
//! a counting argument (the incidence symbol turned into a bounded linear
//! Diophantine equation) and an exhaustive exact-cover search. The counting
//! argument is sound but incomplete: if the equation has no solution, no
//! assignment exists. The search is complete but may run out of budget.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::bases::{
    find_seed_basis, find_seed_codewords, generate_translated_system, translated_occurrence_counts,
    BasisSystem, CodewordSeedSearch, SeedSearch,
};
use crate::codes::{GeneratorMatrix, MATERIALIZE_LIMIT};
use crate::error::{input, Error, Result};
use crate::rays::{build_ray_system, RaySystem};

/// Node budget for the exact-cover oracle.
pub const DEFAULT_ORACLE_BUDGET: u64 = 1_000_000;

/// Largest right-hand side the reachable-sum table will allocate for.
pub const MAX_DIOPHANTINE_TARGET: u64 = 1 << 28;

/// Rays grouped by how many bases they occur in.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IncidenceSymbol {
    pub bases: u64,
    /// `(ray_count, occurrence)` sorted by occurrence; only rays in at least one basis.
    pub classes: Vec<(u64, u64)>,
    pub size: usize,
    /// Rays of the system that lie in no basis.
    #[serde(default, skip_serializing_if = "is_zero")]
    pub unused_rays: u64,
}

fn is_zero(x: &u64) -> bool {
    *x == 0
}

impl IncidenceSymbol {
    pub fn ray_total(&self) -> u64 {
        self.classes.iter().map(|c| c.0).sum::<u64>() + self.unused_rays
    }

    /// `sum ray_count * occurrence == bases * size`.
    pub fn is_consistent(&self) -> bool {
        let lhs: u128 = self
            .classes
            .iter()
            .map(|&(r, o)| r as u128 * o as u128)
            .sum();
        let distinct = self.classes.windows(2).all(|w| w[0].1 < w[1].1);
        distinct && lhs == self.bases as u128 * self.size as u128
    }

    pub fn diophantine_instance(&self) -> DiophantineInstance {
        DiophantineInstance {
            bounds: self.classes.iter().map(|c| c.0).collect(),
            coeffs: self.classes.iter().map(|c| c.1).collect(),
            target: self.bases,
        }
    }
}

impl fmt::Display for IncidenceSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let left: Vec<String> = self
            .classes
            .iter()
            .map(|(r, o)| format!("{r}_{o}"))
            .collect();
        write!(f, "{} - {}_{}", left.join(" "), self.bases, self.size)
    }
}

fn symbol_from_counts(
    counts: impl IntoIterator<Item = u64>,
    bases: u64,
    size: usize,
) -> Result<IncidenceSymbol> {
    let mut by_occ: BTreeMap<u64, u64> = BTreeMap::new();
    let mut unused = 0;
    for c in counts {
        if c == 0 {
            unused += 1;
        } else {
            *by_occ.entry(c).or_insert(0) += 1;
        }
    }
    let symbol = IncidenceSymbol {
        bases,
        classes: by_occ.into_iter().map(|(o, r)| (r, o)).collect(),
        size,
        unused_rays: unused,
    };
    if !symbol.is_consistent() {
        return Err(Error::Internal(format!(
            "inconsistent incidence symbol {symbol}"
        )));
    }
    Ok(symbol)
}

pub fn incidence_symbol(bs: &BasisSystem) -> Result<IncidenceSymbol> {
    symbol_from_counts(
        bs.occurrence.values().copied(),
        bs.len() as u64,
        bs.dimension,
    )
}

/// Ray counts per occurrence and source codeword weight.
pub fn occurrence_by_weight(
    bs: &BasisSystem,
    rs: &RaySystem,
) -> Result<BTreeMap<u64, BTreeMap<usize, u64>>> {
    let mut table: BTreeMap<u64, BTreeMap<usize, u64>> = BTreeMap::new();
    for (&label, &occ) in &bs.occurrence {
        let w = rs.ray(label)?.weight();
        *table.entry(occ).or_default().entry(w).or_insert(0) += 1;
    }
    Ok(table)
}

/// `sum coeffs_j * x_j = target` with `0 <= x_j <= bounds_j`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiophantineInstance {
    pub bounds: Vec<u64>,
    pub coeffs: Vec<u64>,
    pub target: u64,
}

impl DiophantineInstance {
    pub fn new(coeffs: Vec<u64>, bounds: Vec<u64>, target: u64) -> Result<Self> {
        let inst = DiophantineInstance {
            bounds,
            coeffs,
            target,
        };
        inst.validate()?;
        Ok(inst)
    }

    fn validate(&self) -> Result<()> {
        if self.coeffs.len() != self.bounds.len() {
            return Err(input("coefficients and bounds differ in length"));
        }
        if self.coeffs.contains(&0) {
            return Err(input("coefficients must be positive"));
        }
        Ok(())
    }

    /// Checks a candidate solution by substitution.
    pub fn satisfied_by(&self, x: &[u64]) -> bool {
        x.len() == self.coeffs.len()
            && x.iter().zip(&self.bounds).all(|(v, b)| v <= b)
            && x.iter()
                .zip(&self.coeffs)
                .map(|(&v, &c)| v as u128 * c as u128)
                .sum::<u128>()
                == self.target as u128
    }
}

impl fmt::Display for DiophantineInstance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        const VARS: [&str; 3] = ["x", "y", "z"];
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(j, c)| match (self.coeffs.len() <= 3, j) {
                (true, _) => format!("{c}{}", VARS[j]),
                (false, _) => format!("{c}x{}", j + 1),
            })
            .collect();
        let lhs = if terms.is_empty() {
            "0".to_string()
        } else {
            terms.join(" + ")
        };
        write!(f, "{lhs} = {}", self.target)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Feasibility {
    pub feasible: bool,
    pub witness: Option<Vec<u64>>,
}

/// Decides a bounded linear Diophantine equation by reachable-sum dynamic
/// programming. For each variable in turn, `used[s]` is the fewest copies of
/// that variable needed to reach `s` from a sum reachable by the earlier
/// variables, which makes the bound check exact and lets a witness be read
/// back by walking the tables in reverse.
pub fn diophantine_feasible(inst: &DiophantineInstance) -> Result<Feasibility> {
    inst.validate()?;
    if inst.target > MAX_DIOPHANTINE_TARGET {
        return Err(input(format!(
            "target {} exceeds the supported maximum {MAX_DIOPHANTINE_TARGET}",
            inst.target
        )));
    }
    let t = inst.target as usize;
    const UNREACHED: u64 = u64::MAX;
    let mut reach = vec![false; t + 1];
    reach[0] = true;
    let mut tables: Vec<Vec<u64>> = Vec::with_capacity(inst.coeffs.len());
    for (&c, &bound) in inst.coeffs.iter().zip(&inst.bounds) {
        let c = c as usize;
        let mut used = vec![UNREACHED; t + 1];
        for s in 0..=t {
            if reach[s] {
                used[s] = 0;
            } else if s >= c && used[s - c] < bound {
                used[s] = used[s - c] + 1;
            }
        }
        for (r, &u) in reach.iter_mut().zip(&used) {
            *r = u != UNREACHED;
        }
        tables.push(used);
    }
    if !reach[t] {
        return Ok(Feasibility {
            feasible: false,
            witness: None,
        });
    }
    let mut x = vec![0u64; inst.coeffs.len()];
    let mut s = t;
    for j in (0..inst.coeffs.len()).rev() {
        x[j] = tables[j][s];
        s -= x[j] as usize * inst.coeffs[j] as usize;
    }
    if s != 0 || !inst.satisfied_by(&x) {
        return Err(Error::Internal(format!("witness {x:?} fails substitution")));
    }
    Ok(Feasibility {
        feasible: true,
        witness: Some(x),
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExactCover {
    /// Rays assigned 1, ascending. Rays in no basis are unconstrained and
    /// listed separately; they are assigned 0.
    Feasible {
        ones: Vec<u32>,
        unconstrained: Vec<u32>,
        nodes: u64,
    },
    Infeasible {
        nodes: u64,
    },
    Unknown {
        nodes: u64,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OracleVerdict {
    Feasible,
    Infeasible,
    Unknown,
}

impl ExactCover {
    pub fn verdict(&self) -> OracleVerdict {
        match self {
            ExactCover::Feasible { .. } => OracleVerdict::Feasible,
            ExactCover::Infeasible { .. } => OracleVerdict::Infeasible,
            ExactCover::Unknown { .. } => OracleVerdict::Unknown,
        }
    }

    pub fn nodes(&self) -> u64 {
        match *self {
            ExactCover::Feasible { nodes, .. }
            | ExactCover::Infeasible { nodes }
            | ExactCover::Unknown { nodes } => nodes,
        }
    }
}

/// Searches for a 0/1 assignment with exactly one 1 in every basis.
///
/// Algorithm X over items = bases and options = rays: branch on the
/// uncovered basis with the fewest still-selectable rays (lowest index on
/// ties), trying its rays in ascending label order. Selecting a ray covers
/// all its bases and retires every ray sharing a basis with it.
pub fn exact_cover_search(bs: &BasisSystem, budget: u64) -> ExactCover {
    let labels = bs.ray_labels();
    let index: BTreeMap<u32, usize> = labels.iter().enumerate().map(|(i, &l)| (l, i)).collect();
    let basis_rays: Vec<Vec<usize>> = bs
        .bases
        .iter()
        .map(|b| b.labels().iter().map(|l| index[l]).collect())
        .collect();
    let mut ray_bases = vec![Vec::new(); labels.len()];
    for (b, rays) in basis_rays.iter().enumerate() {
        for &r in rays {
            ray_bases[r].push(b);
        }
    }
    let mut search = CoverSearch {
        count: basis_rays.iter().map(|r| r.len() as u32).collect(),
        dense: (0..basis_rays.len()).collect(),
        slot: (0..basis_rays.len()).collect(),
        live: basis_rays.len(),
        avail: vec![true; labels.len()],
        trail: Vec::new(),
        chosen: Vec::new(),
        basis_rays,
        ray_bases,
        nodes: 0,
        budget,
    };
    let outcome = search.run();
    let nodes = search.nodes;
    match outcome {
        Some(true) => {
            let mut ones: Vec<u32> = search.chosen.iter().map(|&r| labels[r]).collect();
            ones.sort_unstable();
            let unconstrained = bs
                .occurrence
                .iter()
                .filter(|(_, &c)| c == 0)
                .map(|(&l, _)| l)
                .collect();
            ExactCover::Feasible {
                ones,
                unconstrained,
                nodes,
            }
        }
        Some(false) => ExactCover::Infeasible { nodes },
        None => ExactCover::Unknown { nodes },
    }
}

struct CoverSearch {
    basis_rays: Vec<Vec<usize>>,
    ray_bases: Vec<Vec<usize>>,
    /// Selectable rays remaining in each basis.
    count: Vec<u32>,
    /// Sparse set of uncovered bases: `dense[..live]`.
    dense: Vec<usize>,
    slot: Vec<usize>,
    live: usize,
    avail: Vec<bool>,
    trail: Vec<usize>,
    chosen: Vec<usize>,
    nodes: u64,
    budget: u64,
}

impl CoverSearch {
    fn run(&mut self) -> Option<bool> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return None;
        }
        if self.live == 0 {
            return Some(true);
        }
        let b = self.dense[..self.live]
            .iter()
            .copied()
            .min_by_key(|&b| (self.count[b], b))
            .expect("live > 0");
        if self.count[b] == 0 {
            return Some(false);
        }
        let options: Vec<usize> = self.basis_rays[b]
            .iter()
            .copied()
            .filter(|&r| self.avail[r])
            .collect();
        for r in options {
            let (trail_mark, live_mark) = (self.trail.len(), self.live);
            let ok = self.select(r);
            self.chosen.push(r);
            let res = if ok { self.run() } else { Some(false) };
            if res != Some(false) {
                return res;
            }
            self.chosen.pop();
            self.undo(trail_mark, live_mark);
        }
        Some(false)
    }

    /// Returns false if some uncovered basis is left with no selectable ray.
    fn select(&mut self, r: usize) -> bool {
        let mut ok = true;
        for i in 0..self.ray_bases[r].len() {
            let b = self.ray_bases[r][i];
            self.cover(b);
            for j in 0..self.basis_rays[b].len() {
                let s = self.basis_rays[b][j];
                if self.avail[s] {
                    self.avail[s] = false;
                    self.trail.push(s);
                    for &b3 in &self.ray_bases[s] {
                        self.count[b3] -= 1;
                        if self.count[b3] == 0 && self.slot[b3] < self.live {
                            ok = false;
                        }
                    }
                }
            }
        }
        // A basis covered after its count hit zero is fine; recheck live ones.
        ok || self.dense[..self.live].iter().all(|&b| self.count[b] > 0)
    }

    fn cover(&mut self, b: usize) {
        let i = self.slot[b];
        let last = self.live - 1;
        let other = self.dense[last];
        self.dense.swap(i, last);
        self.slot[other] = i;
        self.slot[b] = last;
        self.live -= 1;
    }

    fn undo(&mut self, trail_mark: usize, live_mark: usize) {
        while self.trail.len() > trail_mark {
            let s = self.trail.pop().expect("nonempty");
            self.avail[s] = true;
            for &b in &self.ray_bases[s] {
                self.count[b] += 1;
            }
        }
        self.live = live_mark;
    }
}

/// Class-wise counts of the rays set to 1, in symbol class order.
pub fn class_counts(bs: &BasisSystem, symbol: &IncidenceSymbol, ones: &[u32]) -> Result<Vec<u64>> {
    let mut x = vec![0u64; symbol.classes.len()];
    for l in ones {
        let occ = *bs.occurrence.get(l).ok_or(Error::UnknownLabel(*l))?;
        if occ == 0 {
            continue;
        }
        let j = symbol
            .classes
            .iter()
            .position(|c| c.1 == occ)
            .ok_or_else(|| Error::Internal(format!("no class for occurrence {occ}")))?;
        x[j] += 1;
    }
    Ok(x)
}

/// Checks that `ones` puts exactly one 1 in every basis.
pub fn is_valid_assignment(bs: &BasisSystem, ones: &[u32]) -> bool {
    bs.bases
        .iter()
        .all(|b| ones.iter().filter(|&&l| b.contains(l)).count() == 1)
}

/// Machine-checkable record of a KS argument for one basis system.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KsCertificate {
    /// Rays set to 1 by the exact-cover oracle, when it found an assignment.
    pub assignment: Option<Vec<u32>>,
    pub diophantine_feasible: bool,
    pub equation: DiophantineInstance,
    pub ks_proved: bool,
    pub oracle: OracleVerdict,
    pub symbol: IncidenceSymbol,
    pub system: String,
    pub witness: Option<Vec<u64>>,
}

impl KsCertificate {
    fn assemble(
        system: String,
        symbol: IncidenceSymbol,
        oracle: OracleVerdict,
        assignment: Option<Vec<u32>>,
    ) -> Result<Self> {
        let equation = symbol.diophantine_instance();
        let dio = diophantine_feasible(&equation)?;
        if !dio.feasible && oracle == OracleVerdict::Feasible {
            return Err(Error::Internal(format!(
                "{system}: counting says infeasible but the search found an assignment"
            )));
        }
        Ok(KsCertificate {
            assignment,
            diophantine_feasible: dio.feasible,
            equation,
            ks_proved: !dio.feasible || oracle == OracleVerdict::Infeasible,
            oracle,
            symbol,
            system,
            witness: dio.witness,
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificate serializes") + "\n"
    }

    /// One summary line: system, rays-bases symbol, equation.
    pub fn summary_row(&self) -> String {
        let mut eq = self.equation.to_string();
        if self.equation.coeffs.len() > 1 {
            let bounds: Vec<String> = self
                .equation
                .bounds
                .iter()
                .enumerate()
                .map(|(j, b)| format!("0 <= {} <= {b}", var_name(j, self.equation.coeffs.len())))
                .collect();
            eq = format!("{eq}, {}", bounds.join(", "));
        }
        format!("{} | {} | {}", self.system, self.symbol, eq)
    }
}

fn var_name(j: usize, n: usize) -> String {
    if n <= 3 {
        ["x", "y", "z"][j].to_string()
    } else {
        format!("x{}", j + 1)
    }
}

/// Runs both deciders on a basis system and records the outcome.
pub fn ks_certificate(bs: &BasisSystem, oracle_budget: u64) -> Result<KsCertificate> {
    let symbol = incidence_symbol(bs)?;
    let search = exact_cover_search(bs, oracle_budget);
    let assignment = match &search {
        ExactCover::Feasible { ones, .. } => {
            if !is_valid_assignment(bs, ones) {
                return Err(Error::Internal(
                    "exact-cover assignment fails substitution".into(),
                ));
            }
            let x = class_counts(bs, &symbol, ones)?;
            if !symbol.diophantine_instance().satisfied_by(&x) {
                return Err(Error::Internal(format!(
                    "assignment class counts {x:?} do not solve the derived equation"
                )));
            }
            Some(ones.clone())
        }
        _ => None,
    };
    KsCertificate::assemble(bs.ray_system.clone(), symbol, search.verdict(), assignment)
}

/// Outcome of the seed-basis step of the generic pipeline.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeedReport {
    /// Seed codewords as digit strings, when the seed was found without a materialized ray system.
    pub codewords: Option<Vec<String>>,
    /// Largest partial basis reached by an unsuccessful codeword search.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub deepest: Option<usize>,
    /// Seed ray labels, when a ray system was materialized.
    pub labels: Option<Vec<u32>>,
    pub nodes: u64,
    /// `found`, `exhausted`, `proven-absent` or `skipped`.
    pub status: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DivisibilityCheck {
    pub basis_size: u64,
    /// Number of rays, which is also the number of translated bases.
    pub bases: u64,
    /// True when `basis_size` divides `bases`, which rules out the counting proof.
    pub divisible: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PipelineReport {
    pub certificate: Option<KsCertificate>,
    pub code: String,
    pub contains_all_ones: bool,
    pub dimension: usize,
    pub divisibility: DivisibilityCheck,
    pub ks_proved: bool,
    pub length: usize,
    pub min_distance: usize,
    pub seed: SeedReport,
}

impl PipelineReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes") + "\n"
    }
}

/// Tries to turn an even-length binary code `[2n,k,d]` into a KS proof: a
/// basis of `2n` codewords pairwise at distance `n`, translated by every ray,
/// gives as many bases as rays with every ray in `2n` of them. When `2n`
/// does not divide the ray count no colouring exists.
pub fn generic_binary_pipeline(
    g: &GeneratorMatrix,
    budget: u64,
    oracle_budget: u64,
) -> Result<PipelineReport> {
    if !g.is_binary() {
        return Err(input("the pipeline needs a binary code"));
    }
    let len = g.length();
    if !len.is_multiple_of(2) {
        return Err(input(format!("the pipeline needs even length, got {len}")));
    }
    let k = g.dimension();
    let min_distance = g.min_distance()?;
    let all_ones = vec![1u8; len];
    let contains_all_ones = in_row_space(g, &all_ones);
    let ray_count: u64 = if contains_all_ones {
        1 << (k - 1)
    } else {
        1 << k
    };
    let divisibility = DivisibilityCheck {
        basis_size: len as u64,
        bases: ray_count,
        divisible: ray_count.is_multiple_of(len as u64),
    };
    let mut report = PipelineReport {
        certificate: None,
        code: g.name().to_string(),
        contains_all_ones,
        dimension: k,
        divisibility,
        ks_proved: false,
        length: len,
        min_distance,
        seed: SeedReport {
            codewords: None,
            deepest: None,
            labels: None,
            nodes: 0,
            status: "skipped".into(),
        },
    };
    if report.divisibility.divisible {
        return Ok(report);
    }

    if g.codeword_count() <= MATERIALIZE_LIMIT {
        let rs = build_ray_system(g)?;
        match find_seed_basis(&rs, budget) {
            SeedSearch::Found(seed) => {
                report.seed.status = "found".into();
                report.seed.labels = Some(seed.labels().to_vec());
                let bs = generate_translated_system(&seed, &rs)?;
                report.certificate = Some(ks_certificate(&bs, oracle_budget)?);
            }
            SeedSearch::Exhausted { nodes } => {
                report.seed.status = "exhausted".into();
                report.seed.nodes = nodes;
            }
            SeedSearch::ProvenAbsent { nodes } => {
                report.seed.status = "proven-absent".into();
                report.seed.nodes = nodes;
            }
        }
    } else {
        match find_seed_codewords(g, budget)? {
            CodewordSeedSearch::Found(words) => {
                report.seed.status = "found".into();
                report.seed.codewords = Some(
                    words
                        .iter()
                        .map(|w| w.iter().map(|d| char::from(b'0' + d)).collect())
                        .collect(),
                );
                let (bases, counts) = translated_occurrence_counts(g, &words)?;
                let symbol = symbol_from_counts(counts.into_values(), bases, len)?;
                // The streamed system is too large for the exact-cover oracle.
                report.certificate = Some(KsCertificate::assemble(
                    format!("{}/translated", g.name()),
                    symbol,
                    OracleVerdict::Unknown,
                    None,
                )?);
            }
            CodewordSeedSearch::Exhausted { nodes, deepest } => {
                report.seed.status = "exhausted".into();
                report.seed.nodes = nodes;
                report.seed.deepest = Some(deepest);
            }
            CodewordSeedSearch::ProvenAbsent { nodes } => {
                report.seed.status = "proven-absent".into();
                report.seed.nodes = nodes;
            }
        }
    }
    report.ks_proved = report.certificate.as_ref().is_some_and(|c| c.ks_proved);
    Ok(report)
}

/// Whether `word` lies in the row space of `g`.
fn in_row_space(g: &GeneratorMatrix, word: &[u8]) -> bool {
    let mut rows = g.rows().to_vec();
    rows.push(word.to_vec());
    GeneratorMatrix::new("probe", g.field_order(), rows).is_err()
}
