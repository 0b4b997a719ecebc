//! Linear codes over GF(2) and GF(3).
//!
//! Digits are stored as `u8` in `{0, .., q-1}`. Over GF(3) the digit `2`
//! stands for `-1`, and human-readable output renders it that way.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{input, Error, Result};

/// Default cap on the number of codewords any enumeration may visit.
pub const DEFAULT_ENUMERATION_LIMIT: u128 = 1 << 26;

/// Codes larger than this are only ever streamed.
pub const MATERIALIZE_LIMIT: u128 = 1 << 20;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorMatrix {
    name: String,
    field_order: u8,
    rows: Vec<Vec<u8>>,
}

/// The `[N, k, d]` parameters of a code together with its field order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub struct CodeSpec {
    pub length: usize,
    pub dimension: usize,
    pub min_distance: usize,
    pub field_order: u8,
}

impl fmt::Display for CodeSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{},{},{}]",
            self.length, self.dimension, self.min_distance
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Codeword {
    pub digits: Vec<u8>,
    pub coeffs: Vec<u8>,
    /// Integer label `1 + sum a_i 2^(12-i)`; only present for binary codes of dimension 12.
    pub label: Option<u32>,
}

impl Codeword {
    pub fn weight(&self) -> usize {
        self.digits.iter().filter(|&&d| d != 0).count()
    }

    pub fn len(&self) -> usize {
        self.digits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.digits.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.digits.iter().all(|&d| d == 0)
    }
}

impl GeneratorMatrix {
    /// Builds a generator matrix, checking shape, digit range and full row rank.
    pub fn new(name: impl Into<String>, field_order: u8, rows: Vec<Vec<u8>>) -> Result<Self> {
        if field_order != 2 && field_order != 3 {
            return Err(input(format!("unsupported field order {field_order}")));
        }
        let n = rows.first().map(Vec::len).unwrap_or(0);
        if rows.is_empty() || n == 0 {
            return Err(input(
                "generator matrix must have at least one non-empty row",
            ));
        }
        if rows.len() > n {
            return Err(input(format!(
                "dimension {} exceeds length {n}",
                rows.len()
            )));
        }
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(input(format!(
                    "row {} has length {}, expected {n}",
                    i + 1,
                    row.len()
                )));
            }
            if let Some(&d) = row.iter().find(|&&d| d >= field_order) {
                return Err(input(format!(
                    "row {} has digit {d} outside GF({field_order})",
                    i + 1
                )));
            }
        }
        let g = GeneratorMatrix {
            name: name.into(),
            field_order,
            rows,
        };
        let rank = g.rank();
        if rank != g.dimension() {
            return Err(input(format!(
                "rows are linearly dependent: rank {rank} < {}",
                g.dimension()
            )));
        }
        Ok(g)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn field_order(&self) -> u8 {
        self.field_order
    }

    pub fn length(&self) -> usize {
        self.rows[0].len()
    }

    pub fn dimension(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<u8>] {
        &self.rows
    }

    pub fn is_binary(&self) -> bool {
        self.field_order == 2
    }

    /// `q^k`, the number of codewords.
    pub fn codeword_count(&self) -> u128 {
        (self.field_order as u128).pow(self.dimension() as u32)
    }

    pub fn renamed(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    /// Row rank over GF(q) by Gaussian elimination.
    pub fn rank(&self) -> usize {
        let q = self.field_order;
        let mut m = self.rows.clone();
        let (k, n) = (m.len(), m[0].len());
        let mut rank = 0;
        for col in 0..n {
            let Some(p) = (rank..k).find(|&r| m[r][col] != 0) else {
                continue;
            };
            m.swap(rank, p);
            // Over GF(2) and GF(3) every nonzero element is its own inverse.
            let inv = m[rank][col];
            for d in m[rank].iter_mut() {
                *d = (*d * inv) % q;
            }
            for r in 0..k {
                if r != rank && m[r][col] != 0 {
                    let f = m[r][col];
                    let pivot = m[rank].clone();
                    for (d, p) in m[r].iter_mut().zip(&pivot) {
                        *d = (*d + (q - f) * p) % q;
                    }
                }
            }
            rank += 1;
            if rank == k {
                break;
            }
        }
        rank
    }

    /// Digitwise sum `sum coeffs_i * v_i mod q`.
    pub fn encode(&self, coeffs: &[u8]) -> Result<Codeword> {
        if coeffs.len() != self.dimension() {
            return Err(input(format!(
                "expected {} coefficients, got {}",
                self.dimension(),
                coeffs.len()
            )));
        }
        if let Some(&d) = coeffs.iter().find(|&&d| d >= self.field_order) {
            return Err(input(format!(
                "coefficient {d} outside GF({})",
                self.field_order
            )));
        }
        let q = self.field_order;
        let mut digits = vec![0u8; self.length()];
        for (&a, row) in coeffs.iter().zip(&self.rows) {
            if a == 0 {
                continue;
            }
            for (d, &v) in digits.iter_mut().zip(row) {
                *d = (*d + a * v) % q;
            }
        }
        let label = if q == 2 && coeffs.len() == 12 {
            Some(label(coeffs)?)
        } else {
            None
        };
        Ok(Codeword {
            digits,
            coeffs: coeffs.to_vec(),
            label,
        })
    }

    /// Streams every codeword in ascending coefficient order.
    pub fn codewords(&self) -> Result<Codewords<'_>> {
        self.codewords_limited(DEFAULT_ENUMERATION_LIMIT)
    }

    pub fn codewords_limited(&self, limit: u128) -> Result<Codewords<'_>> {
        self.check_limit(limit)?;
        Ok(Codewords {
            code: self,
            next: Some(vec![0; self.dimension()]),
        })
    }

    fn check_limit(&self, limit: u128) -> Result<()> {
        let count = self.codeword_count();
        if count > limit {
            return Err(Error::EnumerationLimit {
                requested: count,
                limit,
            });
        }
        Ok(())
    }

    /// Histogram of codeword weights.
    pub fn weight_distribution(&self) -> Result<BTreeMap<usize, u64>> {
        self.weight_distribution_limited(DEFAULT_ENUMERATION_LIMIT)
    }

    pub fn weight_distribution_limited(&self, limit: u128) -> Result<BTreeMap<usize, u64>> {
        self.check_limit(limit)?;
        let mut hist = BTreeMap::new();
        if self.is_binary() && self.length() <= 64 {
            let mut counts = [0u64; 65];
            for_each_packed_codeword(self, |w| counts[w.count_ones() as usize] += 1);
            for (w, &c) in counts.iter().enumerate() {
                if c > 0 {
                    hist.insert(w, c);
                }
            }
        } else {
            for c in self.codewords_limited(limit)? {
                *hist.entry(c.weight()).or_insert(0) += 1;
            }
        }
        Ok(hist)
    }

    /// Minimum weight over nonzero codewords.
    pub fn min_distance(&self) -> Result<usize> {
        self.min_distance_limited(DEFAULT_ENUMERATION_LIMIT)
    }

    pub fn min_distance_limited(&self, limit: u128) -> Result<usize> {
        let hist = self.weight_distribution_limited(limit)?;
        hist.keys()
            .copied()
            .find(|&w| w > 0)
            .ok_or_else(|| Error::Internal("code has no nonzero codeword".into()))
    }

    pub fn code_spec(&self) -> Result<CodeSpec> {
        Ok(CodeSpec {
            length: self.length(),
            dimension: self.dimension(),
            min_distance: self.min_distance()?,
            field_order: self.field_order,
        })
    }

    /// Deletes column `position`, keeping full rank.
    pub fn puncture(&self, position: usize) -> Result<GeneratorMatrix> {
        if position >= self.length() {
            return Err(input(format!(
                "puncture position {position} out of range for length {}",
                self.length()
            )));
        }
        let rows = self
            .rows
            .iter()
            .map(|r| {
                let mut r = r.clone();
                r.remove(position);
                r
            })
            .collect();
        GeneratorMatrix::new(format!("{}-p{position}", self.name), self.field_order, rows)
    }

    /// Writes the matrix in the line-oriented text format.
    pub fn to_text(&self) -> String {
        let mut s = format!(
            "field {} length {} dim {}\n",
            self.field_order,
            self.length(),
            self.dimension()
        );
        for row in &self.rows {
            let line: Vec<String> = row.iter().map(|d| d.to_string()).collect();
            s.push_str(&line.join(" "));
            s.push('\n');
        }
        s
    }

    pub fn parse_text(name: impl Into<String>, text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty());
        let (hl, header) = lines.next().ok_or(Error::Parse {
            line: 1,
            msg: "empty matrix file".into(),
        })?;
        let parse_err = |line, msg: &str| Error::Parse {
            line,
            msg: msg.to_string(),
        };
        let toks: Vec<&str> = header.split_whitespace().collect();
        if toks.len() != 6 || toks[0] != "field" || toks[2] != "length" || toks[4] != "dim" {
            return Err(parse_err(
                hl,
                "expected header `field <q> length <N> dim <k>`",
            ));
        }
        let num = |t: &str| {
            t.parse::<usize>()
                .map_err(|_| parse_err(hl, "bad header number"))
        };
        let (q, n, k) = (num(toks[1])?, num(toks[3])?, num(toks[5])?);
        if q != 2 && q != 3 {
            return Err(parse_err(hl, "field must be 2 or 3"));
        }
        let mut rows = Vec::with_capacity(k);
        for (ln, line) in lines {
            let mut row = Vec::with_capacity(n);
            for tok in line.split_whitespace() {
                let d = match tok {
                    "-1" if q == 3 => 2,
                    _ => tok
                        .parse::<u8>()
                        .ok()
                        .filter(|&d| (d as usize) < q)
                        .ok_or_else(|| parse_err(ln, &format!("bad digit `{tok}`")))?,
                };
                row.push(d);
            }
            if row.len() != n {
                return Err(parse_err(
                    ln,
                    &format!("expected {n} digits, got {}", row.len()),
                ));
            }
            rows.push(row);
        }
        if rows.len() != k {
            return Err(parse_err(
                hl,
                &format!("header declares {k} rows, found {}", rows.len()),
            ));
        }
        GeneratorMatrix::new(name, q as u8, rows)
    }
}

impl fmt::Display for GeneratorMatrix {
    /// Renders GF(3) digit 2 as `-1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.rows {
            let line: Vec<&str> = row
                .iter()
                .map(|&d| match (self.field_order, d) {
                    (3, 2) => "-1",
                    (_, 0) => "0",
                    _ => "1",
                })
                .collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

pub struct Codewords<'a> {
    code: &'a GeneratorMatrix,
    next: Option<Vec<u8>>,
}

impl Iterator for Codewords<'_> {
    type Item = Codeword;

    fn next(&mut self) -> Option<Codeword> {
        let coeffs = self.next.take()?;
        let word = self.code.encode(&coeffs).expect("coefficients in range");
        // Odometer step with the last coefficient least significant.
        let mut succ = coeffs;
        let q = self.code.field_order;
        let mut i = succ.len();
        while i > 0 {
            i -= 1;
            succ[i] += 1;
            if succ[i] < q {
                self.next = Some(succ);
                break;
            }
            succ[i] = 0;
        }
        Some(word)
    }
}

/// Label `n = 1 + sum_i a_i 2^(12-i)` of a 12-bit coefficient vector.
pub fn label(coeffs: &[u8]) -> Result<u32> {
    if coeffs.len() != 12 {
        return Err(input(format!(
            "labels need 12 coefficients, got {}",
            coeffs.len()
        )));
    }
    let mut n = 0u32;
    for &a in coeffs {
        if a > 1 {
            return Err(input(format!("non-binary coefficient {a}")));
        }
        n = (n << 1) | a as u32;
    }
    Ok(n + 1)
}

/// Inverse of [`label`].
pub fn coeffs_from_label(n: u32) -> Result<Vec<u8>> {
    if !(1..=4096).contains(&n) {
        return Err(input(format!("label {n} outside [1, 4096]")));
    }
    let v = n - 1;
    Ok((0..12).map(|i| ((v >> (11 - i)) & 1) as u8).collect())
}

pub fn hamming_distance(a: &Codeword, b: &Codeword) -> Result<usize> {
    digit_distance(&a.digits, &b.digits)
}

pub fn digit_distance(a: &[u8], b: &[u8]) -> Result<usize> {
    if a.len() != b.len() {
        return Err(input(format!(
            "length mismatch: {} vs {}",
            a.len(),
            b.len()
        )));
    }
    Ok(a.iter().zip(b).filter(|(x, y)| x != y).count())
}

/// Digitwise sum mod q.
pub fn add_digits(a: &[u8], b: &[u8], q: u8) -> Vec<u8> {
    a.iter().zip(b).map(|(&x, &y)| (x + y) % q).collect()
}

/// Packs a binary word into a `u64`, first digit in the most significant used bit.
pub(crate) fn pack_binary(digits: &[u8]) -> u64 {
    digits.iter().fold(0u64, |acc, &d| (acc << 1) | d as u64)
}

pub(crate) fn unpack_binary(word: u64, len: usize) -> Vec<u8> {
    (0..len)
        .map(|i| ((word >> (len - 1 - i)) & 1) as u8)
        .collect()
}

/// Visits every codeword of a binary code of length <= 64 in Gray-code order.
pub(crate) fn for_each_packed_codeword(g: &GeneratorMatrix, mut f: impl FnMut(u64)) {
    debug_assert!(g.is_binary() && g.length() <= 64);
    let rows: Vec<u64> = g.rows.iter().map(|r| pack_binary(r)).collect();
    let mut w = 0u64;
    f(w);
    for i in 1u64..(1u64 << rows.len()) {
        w ^= rows[i.trailing_zeros() as usize];
        f(w);
    }
}

/// Built-in codes addressable by name.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BuiltinCode {
    Golay24,
    Golay12,
    Qr48,
    Hamming8,
}

impl BuiltinCode {
    pub const ALL: [BuiltinCode; 4] = [
        BuiltinCode::Golay24,
        BuiltinCode::Golay12,
        BuiltinCode::Qr48,
        BuiltinCode::Hamming8,
    ];

    pub fn name(self) -> &'static str {
        match self {
            BuiltinCode::Golay24 => "golay24",
            BuiltinCode::Golay12 => "golay12",
            BuiltinCode::Qr48 => "qr48",
            BuiltinCode::Hamming8 => "hamming8",
        }
    }

    pub fn generator(self) -> GeneratorMatrix {
        match self {
            BuiltinCode::Golay24 => golay_binary_generator(),
            BuiltinCode::Golay12 => golay_ternary_generator(),
            BuiltinCode::Qr48 => qr48_generator(),
            BuiltinCode::Hamming8 => extended_hamming8_generator(),
        }
    }
}

impl FromStr for BuiltinCode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        BuiltinCode::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| input(format!("unknown code `{s}`")))
    }
}

fn systematic(name: &str, q: u8, parity: &[&[i8]]) -> GeneratorMatrix {
    let k = parity.len();
    let rows = parity
        .iter()
        .enumerate()
        .map(|(i, p)| {
            let mut row = vec![0u8; k];
            row[i] = 1;
            row.extend(p.iter().map(|&d| d.rem_euclid(q as i8) as u8));
            row
        })
        .collect();
    GeneratorMatrix::new(name, q, rows).expect("built-in generator is valid")
}

/// The extended binary Golay code `[24,12,8]`, identity block on the left.
pub fn golay_binary_generator() -> GeneratorMatrix {
    systematic(
        "golay24",
        2,
        &[
            &[1, 0, 1, 0, 0, 0, 1, 1, 1, 0, 1, 1],
            &[1, 1, 0, 1, 0, 0, 0, 1, 1, 1, 0, 1],
            &[0, 1, 1, 0, 1, 0, 0, 0, 1, 1, 1, 1],
            &[1, 0, 1, 1, 0, 1, 0, 0, 0, 1, 1, 1],
            &[1, 1, 0, 1, 1, 0, 1, 0, 0, 0, 1, 1],
            &[1, 1, 1, 0, 1, 1, 0, 1, 0, 0, 0, 1],
            &[0, 1, 1, 1, 0, 1, 1, 0, 1, 0, 0, 1],
            &[0, 0, 1, 1, 1, 0, 1, 1, 0, 1, 0, 1],
            &[0, 0, 0, 1, 1, 1, 0, 1, 1, 0, 1, 1],
            &[1, 0, 0, 0, 1, 1, 1, 0, 1, 1, 0, 1],
            &[0, 1, 0, 0, 0, 1, 1, 1, 0, 1, 1, 1],
            &[1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 0],
        ],
    )
}

/// The extended ternary Golay code `[12,6,6]`; `-1` is stored as digit 2.
pub fn golay_ternary_generator() -> GeneratorMatrix {
    systematic(
        "golay12",
        3,
        &[
            &[0, 1, 1, 1, 1, 1],
            &[-1, 0, 1, -1, -1, 1],
            &[-1, 1, 0, 1, -1, -1],
            &[-1, -1, 1, 0, 1, -1],
            &[-1, -1, -1, 1, 0, 1],
            &[-1, 1, -1, -1, 1, 0],
        ],
    )
}

/// Extended Hamming code `[8,4,4]`.
pub fn extended_hamming8_generator() -> GeneratorMatrix {
    systematic(
        "hamming8",
        2,
        &[&[0, 1, 1, 1], &[1, 0, 1, 1], &[1, 1, 0, 1], &[1, 1, 1, 0]],
    )
}

const QR_PRIME: u32 = 47;

/// Extended binary quadratic-residue code of length 48.
///
/// The length-47 code is cyclic; its generator polynomial is recovered as
/// `gcd(e(x), x^47 - 1)` where `e(x)` is the idempotent `1 + sum_{n non-residue} x^n`.
/// The 24 rows are the shifts `x^i g(x)` followed by an overall parity digit.
pub fn qr48_generator() -> GeneratorMatrix {
    let p = QR_PRIME;
    let residues: Vec<u32> = (1..p).filter(|&r| is_quadratic_residue(r, p)).collect();
    let non_residues: Vec<u32> = (1..p).filter(|r| !residues.contains(r)).collect();
    let modulus = (1u64 << p) | 1;

    // Of the four idempotent candidates, exactly two generate 24-dimensional
    // codes; take the first in a fixed order.
    let poly = |exps: &[u32], constant: bool| -> u64 {
        exps.iter()
            .fold(constant as u64, |acc, &e| acc | (1u64 << e))
    };
    let candidates = [
        poly(&non_residues, true),
        poly(&residues, true),
        poly(&non_residues, false),
        poly(&residues, false),
    ];
    let g = candidates
        .iter()
        .map(|&e| gf2_poly_gcd(e, modulus))
        .find(|&g| gf2_degree(g) == 23)
        .expect("a 24-dimensional QR code exists for p = 47");

    let k = (p - 23) as usize;
    let rows = (0..k)
        .map(|i| {
            let shifted = g << i;
            let mut row: Vec<u8> = (0..p).map(|j| ((shifted >> j) & 1) as u8).collect();
            let parity = row.iter().fold(0, |acc, &d| acc ^ d);
            row.push(parity);
            row
        })
        .collect();
    GeneratorMatrix::new("qr48", 2, rows).expect("QR48 generator has full rank")
}

fn is_quadratic_residue(a: u32, p: u32) -> bool {
    (1..p).any(|x| (x * x) % p == a % p)
}

fn gf2_degree(a: u64) -> i32 {
    63 - a.leading_zeros() as i32
}

fn gf2_poly_mod(mut a: u64, b: u64) -> u64 {
    let db = gf2_degree(b);
    while a != 0 && gf2_degree(a) >= db {
        a ^= b << (gf2_degree(a) - db);
    }
    a
}

fn gf2_poly_gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let r = gf2_poly_mod(a, b);
        a = b;
        b = r;
    }
    a
}

#[cfg(test)]
mod tests {
    use super::*;

    fn digits(s: &str) -> Vec<u8> {
        s.chars()
            .filter(|c| !c.is_whitespace())
            .map(|c| c.to_digit(10).unwrap() as u8)
            .collect()
    }

    #[test]
    fn binary_generator_rows() {
        let g = golay_binary_generator();
        assert_eq!((g.dimension(), g.length()), (12, 24));
        assert_eq!(g.rows()[0], digits("1000 0000 0000 1010 0011 1011"));
        assert_eq!(g.rows()[11], digits("0000 0000 0001 1111 1111 1110"));
    }

    #[test]
    fn ternary_generator_rows() {
        let g = golay_ternary_generator();
        assert_eq!((g.dimension(), g.length()), (6, 12));
        assert_eq!(g.rows()[0], digits("100000 011111"));
        assert_eq!(g.rows()[1], digits("010000 201221"));
    }

    #[test]
    fn encode_basics() {
        let g = golay_binary_generator();
        let zero = g.encode(&[0; 12]).unwrap();
        assert!(zero.is_zero());
        assert_eq!(zero.label, Some(1));
        let mut e1 = [0u8; 12];
        e1[0] = 1;
        assert_eq!(g.encode(&e1).unwrap().digits, g.rows()[0]);
        let mut e12 = e1;
        e12[1] = 1;
        let xor: Vec<u8> = g.rows()[0]
            .iter()
            .zip(&g.rows()[1])
            .map(|(a, b)| a ^ b)
            .collect();
        assert_eq!(g.encode(&e12).unwrap().digits, xor);
    }

    #[test]
    fn encode_rejects_bad_input() {
        let g = golay_binary_generator();
        assert!(matches!(g.encode(&[0; 11]), Err(Error::Input(_))));
        let mut c = [0u8; 12];
        c[3] = 2;
        assert!(matches!(g.encode(&c), Err(Error::Input(_))));
    }

    #[test]
    fn labels() {
        assert_eq!(label(&[0; 12]).unwrap(), 1);
        let mut c = [0u8; 12];
        c[11] = 1;
        assert_eq!(label(&c).unwrap(), 2);
        let mut c = [0u8; 12];
        c[0] = 1;
        assert_eq!(label(&c).unwrap(), 2049);
        c[1] = 2;
        assert!(label(&c).is_err());
        for n in [1, 2, 777, 4096] {
            assert_eq!(label(&coeffs_from_label(n).unwrap()).unwrap(), n);
        }
    }

    #[test]
    fn distances() {
        let g = golay_binary_generator();
        let r1 = g.encode(&coeffs_from_label(2049).unwrap()).unwrap();
        let r2 = g.encode(&coeffs_from_label(1025).unwrap()).unwrap();
        assert_eq!(r1.digits, g.rows()[0]);
        assert_eq!(r2.digits, g.rows()[1]);
        assert_eq!(hamming_distance(&r1, &r1).unwrap(), 0);
        assert_eq!(hamming_distance(&r1, &r2).unwrap(), 8);
        let comp = Codeword {
            digits: r1.digits.iter().map(|d| 1 - d).collect(),
            coeffs: vec![],
            label: None,
        };
        assert_eq!(hamming_distance(&r1, &comp).unwrap(), 24);
        let short = Codeword {
            digits: vec![0; 3],
            coeffs: vec![],
            label: None,
        };
        assert!(hamming_distance(&r1, &short).is_err());
    }

    #[test]
    fn enumeration_counts_and_order() {
        let g = golay_binary_generator();
        let words: Vec<_> = g.codewords().unwrap().collect();
        assert_eq!(words.len(), 4096);
        assert!(words
            .iter()
            .enumerate()
            .all(|(i, w)| w.label == Some(i as u32 + 1)));
        let t = golay_ternary_generator();
        assert_eq!(t.codewords().unwrap().count(), 729);
    }

    #[test]
    fn enumeration_limit_guard() {
        let g = golay_binary_generator();
        assert!(matches!(
            g.codewords_limited(4095),
            Err(Error::EnumerationLimit {
                requested: 4096,
                ..
            })
        ));
        assert!(g.weight_distribution_limited(1000).is_err());
    }

    #[test]
    fn weight_distributions() {
        let b = golay_binary_generator().weight_distribution().unwrap();
        assert_eq!(b.get(&12), Some(&2576));
        assert_eq!(b.get(&0), Some(&1));
        assert_eq!(b.values().sum::<u64>(), 4096);
        let t = golay_ternary_generator().weight_distribution().unwrap();
        assert_eq!(t.get(&9), Some(&440));
        assert_eq!(t.get(&0), Some(&1));
        assert_eq!(t.values().sum::<u64>(), 729);
    }

    #[test]
    fn minimum_distances() {
        assert_eq!(golay_binary_generator().min_distance().unwrap(), 8);
        assert_eq!(golay_ternary_generator().min_distance().unwrap(), 6);
        assert_eq!(extended_hamming8_generator().min_distance().unwrap(), 4);
    }

    #[test]
    fn puncturing() {
        let b = golay_binary_generator().puncture(23).unwrap();
        assert_eq!(b.length(), 23);
        assert_eq!(b.min_distance().unwrap(), 7);
        let t = golay_ternary_generator().puncture(11).unwrap();
        assert_eq!(t.length(), 11);
        assert_eq!(t.min_distance().unwrap(), 5);
        assert!(golay_binary_generator().puncture(24).is_err());
    }

    #[test]
    fn generic_weight_path_matches_packed_path() {
        let g = golay_binary_generator();
        let mut slow = BTreeMap::new();
        for c in g.codewords().unwrap() {
            *slow.entry(c.weight()).or_insert(0u64) += 1;
        }
        assert_eq!(slow, g.weight_distribution().unwrap());
    }

    #[test]
    fn qr48_shape_and_parity() {
        let g = qr48_generator();
        assert_eq!((g.dimension(), g.length()), (24, 48));
        assert!(g
            .rows()
            .iter()
            .all(|r| r.iter().filter(|&&d| d == 1).count() % 2 == 0));
    }

    #[test]
    fn text_format_round_trip() {
        for g in [golay_binary_generator(), golay_ternary_generator()] {
            let text = g.to_text();
            let back = GeneratorMatrix::parse_text(g.name(), &text).unwrap();
            assert_eq!(back, g);
        }
        let alias = "field 3 length 3 dim 1\n1 -1 0\n";
        let g = GeneratorMatrix::parse_text("t", alias).unwrap();
        assert_eq!(g.rows()[0], vec![1, 2, 0]);
    }

    #[test]
    fn text_format_errors() {
        assert!(matches!(
            GeneratorMatrix::parse_text("x", "field 2 length 3 dim 1\n1 0\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(GeneratorMatrix::parse_text("x", "field 5 length 1 dim 1\n1\n").is_err());
        assert!(GeneratorMatrix::parse_text("x", "field 2 length 2 dim 2\n1 1\n1 1\n").is_err());
        assert!(GeneratorMatrix::parse_text("x", "field 2 length 2 dim 1\n1 -1\n").is_err());
    }

    #[test]
    fn display_uses_minus_one() {
        let g = golay_ternary_generator();
        let shown = g.to_string();
        assert!(shown
            .lines()
            .nth(1)
            .unwrap()
            .starts_with("0 1 0 0 0 0 -1 0 1 -1 -1 1"));
    }
}
