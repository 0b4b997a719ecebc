//! Projective rays from codewords and their orthogonality graph.
//!
//! A binary codeword maps to a `±1` vector (`0 -> +1`, `1 -> -1`); a ternary
//! codeword maps digitwise `0 -> 0`, `1 -> +1`, `2 -> -1`. A vector and its
//! negation are the same ray, so every ray is stored with its first nonzero
//! entry equal to `+1`. All arithmetic is exact over the integers.

use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;

use rayon::prelude::*;

use crate::bitset::BitSet;
use crate::codes::{Codeword, GeneratorMatrix, MATERIALIZE_LIMIT};
use crate::error::{input, Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ray {
    pub label: u32,
    pub vector: Vec<i8>,
    /// The codeword this ray was first produced from.
    pub source: Codeword,
    pub code: String,
}

impl Ray {
    pub fn dimension(&self) -> usize {
        self.vector.len()
    }

    /// Weight of the source codeword.
    pub fn weight(&self) -> usize {
        self.source.weight()
    }
}

/// Maps codeword digits to a sign-canonical integer vector.
pub fn canonical_vector(digits: &[u8], field_order: u8) -> Vec<i8> {
    let mut v: Vec<i8> = match field_order {
        2 => digits
            .iter()
            .map(|&d| if d == 0 { 1 } else { -1 })
            .collect(),
        _ => digits
            .iter()
            .map(|&d| match d {
                0 => 0,
                1 => 1,
                _ => -1,
            })
            .collect(),
    };
    canonicalize(&mut v);
    v
}

/// Negates `v` in place if its first nonzero entry is negative.
pub fn canonicalize(v: &mut [i8]) {
    if v.iter().find(|&&x| x != 0).is_some_and(|&x| x < 0) {
        for x in v.iter_mut() {
            *x = -*x;
        }
    }
}

fn coefficient_index(c: &Codeword, q: u8) -> Result<u32> {
    c.coeffs
        .iter()
        .try_fold(0u32, |acc, &a| {
            acc.checked_mul(q as u32)?.checked_add(a as u32)
        })
        .and_then(|v| v.checked_add(1))
        .ok_or_else(|| input("coefficient vector too long for a ray label"))
}

/// Converts a binary codeword to its ray.
///
/// When the codeword carries a 12-bit label `n`, the ray label is
/// `min(n, 4097 - n)`, shared by a codeword and its complement. Other codes
/// fall back to one plus the coefficient index; [`build_ray_system`]
/// relabels rays consecutively.
pub fn binary_codeword_to_ray(c: &Codeword, code: &str) -> Result<Ray> {
    if let Some(&d) = c.digits.iter().find(|&&d| d > 1) {
        return Err(input(format!("digit {d} in a binary codeword")));
    }
    let label = match c.label {
        Some(n) => n.min(4097 - n),
        None => coefficient_index(c, 2)?,
    };
    Ok(Ray {
        label,
        vector: canonical_vector(&c.digits, 2),
        source: c.clone(),
        code: code.to_string(),
    })
}

/// Converts a nonzero ternary codeword to its ray.
pub fn ternary_codeword_to_ray(c: &Codeword, code: &str) -> Result<Ray> {
    if let Some(&d) = c.digits.iter().find(|&&d| d > 2) {
        return Err(input(format!("digit {d} in a ternary codeword")));
    }
    if c.is_zero() {
        return Err(input("the zero codeword does not define a ray"));
    }
    Ok(Ray {
        label: coefficient_index(c, 3)?,
        vector: canonical_vector(&c.digits, 3),
        source: c.clone(),
        code: code.to_string(),
    })
}

pub fn inner_product(a: &Ray, b: &Ray) -> Result<i64> {
    vector_inner_product(&a.vector, &b.vector)
}

pub fn vector_inner_product(a: &[i8], b: &[i8]) -> Result<i64> {
    if a.len() != b.len() {
        return Err(input(format!(
            "dimension mismatch: {} vs {}",
            a.len(),
            b.len()
        )));
    }
    Ok(a.iter().zip(b).map(|(&x, &y)| x as i64 * y as i64).sum())
}

/// An immutable set of rays with their orthogonality graph.
#[derive(Clone, Debug)]
pub struct RaySystem {
    id: String,
    field_order: u8,
    basis_size: usize,
    rays: Vec<Ray>,
    by_vector: HashMap<Vec<i8>, usize>,
    adjacency: Vec<BitSet>,
}

impl RaySystem {
    /// Builds a system from explicit rays; adjacency is computed from inner products.
    pub fn from_rays(
        id: impl Into<String>,
        field_order: u8,
        basis_size: usize,
        mut rays: Vec<Ray>,
    ) -> Result<Self> {
        rays.sort_by_key(|r| r.label);
        if rays.windows(2).any(|w| w[0].label == w[1].label) {
            return Err(input("duplicate ray labels"));
        }
        let dim = rays.first().map(Ray::dimension).unwrap_or(basis_size);
        if rays.iter().any(|r| r.dimension() != dim) {
            return Err(input("rays of differing dimension"));
        }
        let n = rays.len();
        let adjacency: Vec<BitSet> = (0..n)
            .into_par_iter()
            .map(|i| {
                let mut row = BitSet::new(n);
                for j in 0..n {
                    if i != j && dot(&rays[i].vector, &rays[j].vector) == 0 {
                        row.insert(j);
                    }
                }
                row
            })
            .collect();
        Self::assemble(id.into(), field_order, basis_size, rays, adjacency)
    }

    fn assemble(
        id: String,
        field_order: u8,
        basis_size: usize,
        rays: Vec<Ray>,
        adjacency: Vec<BitSet>,
    ) -> Result<Self> {
        let mut by_vector = HashMap::with_capacity(rays.len());
        for (i, r) in rays.iter().enumerate() {
            if by_vector.insert(r.vector.clone(), i).is_some() {
                return Err(input(format!("ray {} duplicates another ray", r.label)));
            }
        }
        Ok(RaySystem {
            id,
            field_order,
            basis_size,
            rays,
            by_vector,
            adjacency,
        })
    }

    pub fn id(&self) -> &str {
        &self.id
    }

    pub fn field_order(&self) -> u8 {
        self.field_order
    }

    /// Length of the ray vectors.
    pub fn dimension(&self) -> usize {
        self.rays
            .first()
            .map(Ray::dimension)
            .unwrap_or(self.basis_size)
    }

    /// Number of rays in a basis: the dimension of the space the rays span.
    pub fn basis_size(&self) -> usize {
        self.basis_size
    }

    pub fn rays(&self) -> &[Ray] {
        &self.rays
    }

    pub fn len(&self) -> usize {
        self.rays.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rays.is_empty()
    }

    pub fn labels(&self) -> Vec<u32> {
        self.rays.iter().map(|r| r.label).collect()
    }

    pub fn position(&self, label: u32) -> Option<usize> {
        self.rays.binary_search_by_key(&label, |r| r.label).ok()
    }

    pub fn ray(&self, label: u32) -> Result<&Ray> {
        self.position(label)
            .map(|i| &self.rays[i])
            .ok_or(Error::UnknownLabel(label))
    }

    pub fn ray_with_vector(&self, v: &[i8]) -> Option<&Ray> {
        self.by_vector.get(v).map(|&i| &self.rays[i])
    }

    /// Orthogonality row of the ray at `position`, indexed by position.
    pub fn neighbors(&self, position: usize) -> &BitSet {
        &self.adjacency[position]
    }

    pub(crate) fn adjacency(&self) -> &[BitSet] {
        &self.adjacency
    }

    pub fn orthogonal(&self, a: u32, b: u32) -> Result<bool> {
        let i = self.position(a).ok_or(Error::UnknownLabel(a))?;
        let j = self.position(b).ok_or(Error::UnknownLabel(b))?;
        Ok(self.adjacency[i].contains(j))
    }

    pub fn orthogonality_degree(&self, label: u32) -> Result<usize> {
        let i = self.position(label).ok_or(Error::UnknownLabel(label))?;
        Ok(self.adjacency[i].count())
    }

    pub fn orthogonal_pair_count(&self) -> usize {
        self.adjacency.iter().map(BitSet::count).sum::<usize>() / 2
    }

    /// Degree -> number of rays with that degree.
    pub fn degree_histogram(&self) -> BTreeMap<usize, usize> {
        let mut h = BTreeMap::new();
        for row in &self.adjacency {
            *h.entry(row.count()).or_insert(0) += 1;
        }
        h
    }

    /// Sub-system on the rays selected by `keep`, with adjacency restricted.
    pub fn subsystem(
        &self,
        id: impl Into<String>,
        basis_size: usize,
        keep: impl Fn(&Ray) -> bool,
    ) -> Result<RaySystem> {
        let kept: Vec<usize> = (0..self.len()).filter(|&i| keep(&self.rays[i])).collect();
        let mut new_index = vec![usize::MAX; self.len()];
        for (new, &old) in kept.iter().enumerate() {
            new_index[old] = new;
        }
        let adjacency = kept
            .iter()
            .map(|&old| {
                let mut row = BitSet::new(kept.len());
                for j in self.adjacency[old].ones() {
                    if new_index[j] != usize::MAX {
                        row.insert(new_index[j]);
                    }
                }
                row
            })
            .collect();
        let rays = kept.iter().map(|&i| self.rays[i].clone()).collect();
        Self::assemble(id.into(), self.field_order, basis_size, rays, adjacency)
    }

    /// Rays CSV: `label,dim,entries` with entries as signed digits joined by spaces.
    pub fn to_csv(&self) -> String {
        let mut s = String::from("label,dim,entries\n");
        for r in &self.rays {
            let entries: Vec<String> = r.vector.iter().map(|x| x.to_string()).collect();
            let _ = writeln!(s, "{},{},{}", r.label, r.dimension(), entries.join(" "));
        }
        s
    }
}

#[inline]
fn dot(a: &[i8], b: &[i8]) -> i32 {
    a.iter().zip(b).map(|(&x, &y)| x as i32 * y as i32).sum()
}

/// Converts every codeword to a ray and builds the orthogonality graph.
///
/// Codewords are visited in ascending coefficient order and each new ray takes
/// the next label, so for the binary Golay code ray `n` is the codeword with
/// label `n <= 2048`.
pub fn build_ray_system(g: &GeneratorMatrix) -> Result<RaySystem> {
    build_ray_system_limited(g, MATERIALIZE_LIMIT)
}

pub fn build_ray_system_limited(g: &GeneratorMatrix, limit: u128) -> Result<RaySystem> {
    let q = g.field_order();
    let mut seen: HashMap<Vec<i8>, ()> = HashMap::new();
    let mut rays = Vec::new();
    for c in g.codewords_limited(limit)? {
        if c.is_zero() && q == 3 {
            continue;
        }
        let vector = canonical_vector(&c.digits, q);
        if seen.insert(vector.clone(), ()).is_some() {
            continue;
        }
        rays.push(Ray {
            label: rays.len() as u32 + 1,
            vector,
            source: c,
            code: g.name().to_string(),
        });
    }
    RaySystem::from_rays(g.name(), q, g.length(), rays)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codes::{coeffs_from_label, golay_binary_generator, golay_ternary_generator};

    #[test]
    fn zero_codeword_is_all_plus_one() {
        let g = golay_binary_generator();
        let r = binary_codeword_to_ray(&g.encode(&[0; 12]).unwrap(), "golay24").unwrap();
        assert_eq!(r.label, 1);
        assert!(r.vector.iter().all(|&x| x == 1));
    }

    #[test]
    fn complements_share_a_ray() {
        let g = golay_binary_generator();
        for n in [1u32, 2, 5, 300, 2048] {
            let a = g.encode(&coeffs_from_label(n).unwrap()).unwrap();
            let b = g.encode(&coeffs_from_label(4097 - n).unwrap()).unwrap();
            let ra = binary_codeword_to_ray(&a, "g").unwrap();
            let rb = binary_codeword_to_ray(&b, "g").unwrap();
            assert_eq!(ra.vector, rb.vector);
            assert_eq!(ra.label, rb.label);
            assert_eq!(ra.label, n);
        }
    }

    #[test]
    fn weight_twelve_has_twelve_minus_ones() {
        let g = golay_binary_generator();
        let c = g.codewords().unwrap().find(|c| c.weight() == 12).unwrap();
        let raw: Vec<i8> = c
            .digits
            .iter()
            .map(|&d| if d == 0 { 1 } else { -1 })
            .collect();
        assert_eq!(raw.iter().filter(|&&x| x == -1).count(), 12);
    }

    #[test]
    fn ternary_row_one() {
        let g = golay_ternary_generator();
        let c = g.encode(&[1, 0, 0, 0, 0, 0]).unwrap();
        let r = ternary_codeword_to_ray(&c, "golay12").unwrap();
        assert_eq!(r.vector, vec![1, 0, 0, 0, 0, 0, 0, 1, 1, 1, 1, 1]);
        let neg = g.encode(&[2, 0, 0, 0, 0, 0]).unwrap();
        assert_eq!(
            ternary_codeword_to_ray(&neg, "golay12").unwrap().vector,
            r.vector
        );
        assert_eq!(inner_product(&r, &r).unwrap(), c.weight() as i64);
        let zero = g.encode(&[0; 6]).unwrap();
        assert!(ternary_codeword_to_ray(&zero, "golay12").is_err());
    }

    #[test]
    fn inner_product_dimension_mismatch() {
        assert!(vector_inner_product(&[1, 1], &[1]).is_err());
        assert_eq!(vector_inner_product(&[1; 24], &[1; 24]).unwrap(), 24);
    }

    #[test]
    fn canonicalization_is_idempotent_and_sign_invariant() {
        let mut v = vec![0, -1, 1, 0, -1];
        canonicalize(&mut v);
        assert_eq!(v, vec![0, 1, -1, 0, 1]);
        let once = v.clone();
        canonicalize(&mut v);
        assert_eq!(v, once);
        let mut neg: Vec<i8> = once.iter().map(|x| -x).collect();
        canonicalize(&mut neg);
        assert_eq!(neg, once);
    }

    #[test]
    fn binary_system() {
        let rs = build_ray_system(&golay_binary_generator()).unwrap();
        assert_eq!(rs.len(), 2048);
        assert_eq!(rs.labels(), (1..=2048).collect::<Vec<_>>());
        assert!(rs.rays().iter().all(|r| r.vector[0] == 1));
        assert!(rs.rays().iter().all(|r| r.source.label == Some(r.label)));
        assert_eq!(
            rs.degree_histogram().into_iter().collect::<Vec<_>>(),
            vec![(1288, 2048)]
        );
        assert_eq!(rs.orthogonality_degree(1).unwrap(), 1288);
        assert!(matches!(
            rs.orthogonality_degree(2049),
            Err(Error::UnknownLabel(2049))
        ));
    }

    #[test]
    fn ternary_system_degrees() {
        let rs = build_ray_system(&golay_ternary_generator()).unwrap();
        assert_eq!(rs.len(), 364);
        // Regression fixture from a direct adjacency count.
        let hist: Vec<_> = rs.degree_histogram().into_iter().collect();
        assert_eq!(hist, vec![(121, 12), (165, 220), (211, 132)]);
        for r in rs.rays() {
            let expected = match r.weight() {
                6 => 211,
                9 => 165,
                12 => 121,
                w => panic!("unexpected weight {w}"),
            };
            assert_eq!(rs.orthogonality_degree(r.label).unwrap(), expected);
        }
    }

    #[test]
    fn punctured_binary_has_no_orthogonal_pairs() {
        let g = golay_binary_generator().puncture(23).unwrap();
        let rs = build_ray_system(&g).unwrap();
        assert_eq!(rs.len(), 2048);
        assert_eq!(rs.orthogonal_pair_count(), 0);
    }

    #[test]
    fn subsystem_restricts_adjacency() {
        let rs = build_ray_system(&golay_ternary_generator()).unwrap();
        let sub = rs.subsystem("w9", 12, |r| r.weight() == 9).unwrap();
        assert_eq!(sub.len(), 220);
        for a in sub.rays().iter().take(20) {
            for b in sub.rays() {
                assert_eq!(
                    sub.orthogonal(a.label, b.label).unwrap(),
                    rs.orthogonal(a.label, b.label).unwrap()
                );
            }
        }
    }

    #[test]
    fn csv_layout() {
        let rs = build_ray_system(&golay_ternary_generator()).unwrap();
        let csv = rs.to_csv();
        let mut lines = csv.lines();
        assert_eq!(lines.next(), Some("label,dim,entries"));
        let first = lines.next().unwrap();
        assert!(first.starts_with("1,12,"));
        assert_eq!(csv.lines().count(), 365);
    }
}
