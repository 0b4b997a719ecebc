//! Orthogonal bases over a ray system.
//!
//! Bases come from three places: translating a seed basis by every codeword of
//! a binary code, enumerating every full-size clique of the orthogonality
//! graph, or either of those applied to a filtered or restricted sub-system.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::bitset::BitSet;
use crate::clique::{self, Search};
use crate::codes::{add_digits, pack_binary, unpack_binary, GeneratorMatrix};
use crate::error::{input, Error, Result};
use crate::rays::{canonical_vector, vector_inner_product, RaySystem};

/// Node budget for clique enumeration and seed search.
pub const DEFAULT_NODE_BUDGET: u64 = 1_000_000_000;

/// The seed basis of the binary Golay ray system.
pub const GOLAY24_SEED: [u32; 24] = [
    1, 127, 128, 136, 177, 414, 586, 788, 866, 911, 1005, 1011, 1225, 1323, 1324, 1366, 1491, 1510,
    1589, 1607, 1704, 1722, 1756, 1821,
];

/// A set of mutually orthogonal ray labels, kept sorted.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Basis(Vec<u32>);

impl Basis {
    pub fn new(mut labels: Vec<u32>) -> Self {
        labels.sort_unstable();
        Basis(labels)
    }

    pub fn labels(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, label: u32) -> bool {
        self.0.binary_search(&label).is_ok()
    }
}

/// Checks the basis invariants from the ray vectors themselves: `size`
/// distinct known labels, pairwise zero inner product.
pub fn verify_basis(rs: &RaySystem, basis: &Basis, size: usize) -> Result<()> {
    if basis.len() != size {
        return Err(input(format!(
            "basis has {} rays, expected {size}",
            basis.len()
        )));
    }
    if basis.0.windows(2).any(|w| w[0] == w[1]) {
        return Err(input("basis repeats a ray"));
    }
    let rays = basis
        .0
        .iter()
        .map(|&l| rs.ray(l))
        .collect::<Result<Vec<_>>>()?;
    for (i, a) in rays.iter().enumerate() {
        for b in &rays[i + 1..] {
            if vector_inner_product(&a.vector, &b.vector)? != 0 {
                return Err(input(format!(
                    "rays {} and {} are not orthogonal",
                    a.label, b.label
                )));
            }
        }
    }
    Ok(())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum BasisOrdering {
    /// Sorted lexicographically.
    Canonical,
    /// One row per translating ray, in label order.
    TranslationTable,
}

/// A list of bases over a ray system with per-ray occurrence counts.
///
/// `occurrence` has an entry for every ray of the underlying system,
/// including rays that lie in no basis.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasisSystem {
    pub bases: Vec<Basis>,
    pub dimension: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub matrix: Option<Vec<Vec<u32>>>,
    pub occurrence: BTreeMap<u32, u64>,
    pub ordering: BasisOrdering,
    pub ray_system: String,
}

impl BasisSystem {
    fn build(
        rs: &RaySystem,
        dimension: usize,
        bases: Vec<Basis>,
        ordering: BasisOrdering,
        matrix: Option<Vec<Vec<u32>>>,
    ) -> Result<Self> {
        let mut occurrence: BTreeMap<u32, u64> = rs.labels().into_iter().map(|l| (l, 0)).collect();
        for b in &bases {
            for l in b.labels() {
                *occurrence.get_mut(l).ok_or(Error::UnknownLabel(*l))? += 1;
            }
        }
        let bs = BasisSystem {
            bases,
            dimension,
            matrix,
            occurrence,
            ordering,
            ray_system: rs.id().to_string(),
        };
        bs.verify(rs)?;
        Ok(bs)
    }

    pub fn len(&self) -> usize {
        self.bases.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bases.is_empty()
    }

    pub fn ray_labels(&self) -> Vec<u32> {
        self.occurrence.keys().copied().collect()
    }

    /// Re-checks every basis against the ray vectors, independently of the
    /// adjacency bitsets used to generate them.
    pub fn verify(&self, rs: &RaySystem) -> Result<()> {
        for b in &self.bases {
            verify_basis(rs, b, self.dimension)?;
        }
        self.check_bookkeeping()
    }

    /// Structural checks that need no ray vectors: basis sizes, known labels,
    /// duplicate-free, and occurrence counts matching a recount.
    pub fn check_bookkeeping(&self) -> Result<()> {
        let mut recount: BTreeMap<u32, u64> = self.occurrence.keys().map(|&l| (l, 0)).collect();
        for b in &self.bases {
            if b.len() != self.dimension || b.0.windows(2).any(|w| w[0] >= w[1]) {
                return Err(input(format!("malformed basis {:?}", b.labels())));
            }
            for l in b.labels() {
                *recount.get_mut(l).ok_or(Error::UnknownLabel(*l))? += 1;
            }
        }
        if recount != self.occurrence {
            return Err(input("occurrence counts do not match the bases"));
        }
        let total: u64 = self.occurrence.values().sum();
        if total != (self.bases.len() * self.dimension) as u64 {
            return Err(Error::Internal("double count mismatch".into()));
        }
        // A translation table may list a basis more than once, when the seed
        // is fixed by a nonzero translation; canonical lists never do.
        if self.ordering == BasisOrdering::Canonical && self.bases.windows(2).any(|w| w[0] >= w[1])
        {
            return Err(input("canonical basis list is unsorted or has duplicates"));
        }
        if let Some(m) = &self.matrix {
            if m.len() != self.bases.len()
                || m.iter()
                    .zip(&self.bases)
                    .any(|(row, b)| Basis::new(row.clone()) != *b)
            {
                return Err(input("translation matrix disagrees with the basis list"));
            }
        }
        Ok(())
    }

    /// Number of distinct bases.
    pub fn distinct_count(&self) -> usize {
        let mut sorted: Vec<&Basis> = self.bases.iter().collect();
        sorted.sort_unstable();
        sorted.dedup();
        sorted.len()
    }

    /// The distinct bases in canonical order, occurrence recounted.
    pub fn distinct(&self) -> BasisSystem {
        let mut bases = self.bases.clone();
        bases.sort_unstable();
        bases.dedup();
        let mut occurrence: BTreeMap<u32, u64> = self.occurrence.keys().map(|&l| (l, 0)).collect();
        for b in &bases {
            for l in b.labels() {
                *occurrence
                    .get_mut(l)
                    .expect("label checked at construction") += 1;
            }
        }
        BasisSystem {
            bases,
            dimension: self.dimension,
            matrix: None,
            occurrence,
            ordering: BasisOrdering::Canonical,
            ray_system: format!("{}/distinct", self.ray_system),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("basis system serializes") + "\n"
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let bs: BasisSystem =
            serde_json::from_str(text).map_err(|e| input(format!("bad bases JSON: {e}")))?;
        bs.check_bookkeeping()?;
        Ok(bs)
    }
}

/// Outcome of a seed-basis search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SeedSearch {
    Found(Basis),
    /// The budget ran out first; nothing is known.
    Exhausted {
        nodes: u64,
    },
    /// The search completed: no basis exists.
    ProvenAbsent {
        nodes: u64,
    },
}

/// Backtracking search for one basis (a clique of `basis_size` rays).
pub fn find_seed_basis(rs: &RaySystem, budget: u64) -> SeedSearch {
    clique::find_clique(rs.adjacency(), rs.basis_size(), budget).into_seed(rs)
}

impl Search {
    fn into_seed(self, rs: &RaySystem) -> SeedSearch {
        match self {
            Search::Found(c) => SeedSearch::Found(Basis::new(
                c.into_iter().map(|i| rs.rays()[i].label).collect(),
            )),
            Search::Exhausted(nodes) => SeedSearch::Exhausted { nodes },
            Search::Absent(nodes) => SeedSearch::ProvenAbsent { nodes },
        }
    }
}

fn require_binary(rs: &RaySystem) -> Result<()> {
    if rs.field_order() != 2 {
        return Err(input("translation needs a binary ray system"));
    }
    Ok(())
}

/// Adds the codeword of ray `t` to the codeword of every ray in `b`.
pub fn translate_basis(b: &Basis, t: u32, rs: &RaySystem) -> Result<Basis> {
    require_binary(rs)?;
    let shift = &rs.ray(t)?.source.digits;
    translate_labels(b.labels(), shift, rs).map(Basis::new)
}

fn translate_labels(labels: &[u32], shift: &[u8], rs: &RaySystem) -> Result<Vec<u32>> {
    labels
        .iter()
        .map(|&l| {
            let sum = add_digits(&rs.ray(l)?.source.digits, shift, 2);
            rs.ray_with_vector(&canonical_vector(&sum, 2))
                .map(|r| r.label)
                .ok_or_else(|| input(format!("translating ray {l} leaves the ray system")))
        })
        .collect()
}

/// One basis per ray `t` (in label order): the seed translated by `t`.
///
/// The matrix keeps the seed's column positions.
pub fn generate_translated_system(seed: &Basis, rs: &RaySystem) -> Result<BasisSystem> {
    require_binary(rs)?;
    verify_basis(rs, seed, rs.basis_size())?;
    let mut matrix = Vec::with_capacity(rs.len());
    for t in rs.rays() {
        matrix.push(translate_labels(seed.labels(), &t.source.digits, rs)?);
    }
    let bases = matrix.iter().map(|row| Basis::new(row.clone())).collect();
    BasisSystem::build(
        rs,
        rs.basis_size(),
        bases,
        BasisOrdering::TranslationTable,
        Some(matrix),
    )
}

/// Every basis of `rs`, in canonical order.
pub fn enumerate_all_bases(rs: &RaySystem, size: usize, budget: u64) -> Result<BasisSystem> {
    // Visit high-degree rays first; the result does not depend on this order.
    let mut order = rs.labels();
    order.sort_by_key(|&l| {
        (
            std::cmp::Reverse(rs.orthogonality_degree(l).unwrap_or(0)),
            l,
        )
    });
    enumerate_all_bases_in_order(rs, size, budget, &order)
}

/// As [`enumerate_all_bases`], searching vertices in the given label order.
pub fn enumerate_all_bases_in_order(
    rs: &RaySystem,
    size: usize,
    budget: u64,
    order: &[u32],
) -> Result<BasisSystem> {
    if size != rs.basis_size() {
        return Err(input(format!(
            "basis size {size} does not match the system's {}",
            rs.basis_size()
        )));
    }
    let mut sorted = order.to_vec();
    sorted.sort_unstable();
    if sorted != rs.labels() {
        return Err(input("order must be a permutation of the system's labels"));
    }
    let pos: Vec<usize> = order
        .iter()
        .map(|&l| rs.position(l).expect("checked above"))
        .collect();
    let mut rank = vec![0; rs.len()];
    for (r, &p) in pos.iter().enumerate() {
        rank[p] = r;
    }
    let adj: Vec<BitSet> = pos
        .iter()
        .map(|&p| {
            let mut row = BitSet::new(rs.len());
            for j in rs.neighbors(p).ones() {
                row.insert(rank[j]);
            }
            row
        })
        .collect();
    let cliques =
        clique::k_cliques(&adj, size, budget).map_err(|_| Error::BudgetExhausted { budget })?;
    let mut bases: Vec<Basis> = cliques
        .into_iter()
        .map(|c| Basis::new(c.into_iter().map(|r| order[r]).collect()))
        .collect();
    bases.sort_unstable();
    BasisSystem::build(rs, size, bases, BasisOrdering::Canonical, None)
}

/// Rays whose source codeword has weight `w`.
pub fn filter_rays_by_weight(rs: &RaySystem, w: usize) -> Result<RaySystem> {
    if rs.field_order() != 3 {
        return Err(input("weight filtering needs a ternary ray system"));
    }
    rs.subsystem(format!("{}/w{w}", rs.id()), rs.basis_size(), |r| {
        r.weight() == w
    })
}

/// Rays orthogonal to every anchor; the basis size drops by the anchor count.
pub fn restrict_system(rs: &RaySystem, anchors: &[u32]) -> Result<RaySystem> {
    let mut sorted = anchors.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != anchors.len() {
        return Err(input("anchor labels must be distinct"));
    }
    if anchors.is_empty() {
        return Ok(rs.clone());
    }
    if anchors.len() > rs.basis_size() {
        return Err(input("more anchors than the basis size"));
    }
    let pos = anchors
        .iter()
        .map(|&a| rs.position(a).ok_or(Error::UnknownLabel(a)))
        .collect::<Result<Vec<_>>>()?;
    for (i, &a) in pos.iter().enumerate() {
        for &b in &pos[i + 1..] {
            if !rs.neighbors(a).contains(b) {
                return Err(input(format!(
                    "anchors {} and {} are not orthogonal",
                    rs.rays()[a].label,
                    rs.rays()[b].label
                )));
            }
        }
    }
    let mut common = BitSet::full(rs.len());
    for &a in &pos {
        common.intersect_with(rs.neighbors(a));
    }
    let tag: Vec<String> = sorted.iter().map(u32::to_string).collect();
    rs.subsystem(
        format!("{}/restrict[{}]", rs.id(), tag.join(",")),
        rs.basis_size() - anchors.len(),
        |r| common.contains(rs.position(r.label).expect("own ray")),
    )
}

/// Seed search for binary codes too large to materialize as a ray system.
///
/// Works directly on packed codewords: a basis is `2n` codewords pairwise at
/// distance `n`. By translation invariance the zero word can be fixed as the
/// first member, so the remaining members are drawn from the canonical
/// (first digit 0) codewords of weight `n`, tried in ascending order.
pub fn find_seed_codewords(g: &GeneratorMatrix, budget: u64) -> Result<CodewordSeedSearch> {
    if !g.is_binary() || !g.length().is_multiple_of(2) || g.length() > 64 {
        return Err(input(
            "codeword seed search needs an even-length binary code of length <= 64",
        ));
    }
    let len = g.length();
    let half = (len / 2) as u32;
    let top = 1u64 << (len - 1);
    let mut cand = Vec::new();
    crate::codes::for_each_packed_codeword(g, |w| {
        if w & top == 0 && w.count_ones() == half {
            cand.push(w);
        }
    });
    cand.sort_unstable();
    let mut walk = CodewordWalk {
        half,
        size: len,
        chosen: vec![0u64],
        nodes: 0,
        deepest: 1,
        budget,
    };
    let found = walk.extend(&cand);
    let (nodes, deepest) = (walk.nodes, walk.deepest);
    Ok(match found {
        Some(true) => {
            CodewordSeedSearch::Found(walk.chosen.iter().map(|&w| unpack_binary(w, len)).collect())
        }
        Some(false) => CodewordSeedSearch::ProvenAbsent { nodes },
        None => CodewordSeedSearch::Exhausted { nodes, deepest },
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CodewordSeedSearch {
    Found(Vec<Vec<u8>>),
    /// `deepest` is the size of the largest partial basis reached.
    Exhausted {
        nodes: u64,
        deepest: usize,
    },
    ProvenAbsent {
        nodes: u64,
    },
}

struct CodewordWalk {
    half: u32,
    size: usize,
    chosen: Vec<u64>,
    nodes: u64,
    deepest: usize,
    budget: u64,
}

impl CodewordWalk {
    fn extend(&mut self, cand: &[u64]) -> Option<bool> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return None;
        }
        self.deepest = self.deepest.max(self.chosen.len());
        if self.chosen.len() == self.size {
            return Some(true);
        }
        let need = self.size - self.chosen.len();
        for (i, &v) in cand.iter().enumerate() {
            if cand.len() - i < need {
                break;
            }
            let next: Vec<u64> = cand[i + 1..]
                .iter()
                .copied()
                .filter(|&u| (u ^ v).count_ones() == self.half)
                .collect();
            if next.len() + 1 < need {
                continue;
            }
            self.chosen.push(v);
            match self.extend(&next) {
                Some(false) => {}
                other => return other,
            }
            self.chosen.pop();
        }
        Some(false)
    }
}

/// Occurrence counts of the translated system of a large binary code, keyed
/// by packed canonical codeword. Streams all translations without building
/// the ray system.
pub fn translated_occurrence_counts(
    g: &GeneratorMatrix,
    seed: &[Vec<u8>],
) -> Result<(u64, BTreeMap<u64, u64>)> {
    if !g.is_binary() || g.length() > 64 {
        return Err(input(
            "streamed translation needs a binary code of length <= 64",
        ));
    }
    let len = g.length();
    let top = 1u64 << (len - 1);
    let canon = |w: u64| {
        if w & top != 0 {
            w ^ ((top << 1).wrapping_sub(1))
        } else {
            w
        }
    };
    let seed: Vec<u64> = seed.iter().map(|s| pack_binary(s)).collect();
    let mut seen = std::collections::HashSet::new();
    let mut shifts = Vec::new();
    crate::codes::for_each_packed_codeword(g, |w| {
        if seen.insert(canon(w)) {
            shifts.push(w);
        }
    });
    let mut counts: BTreeMap<u64, u64> = seen.iter().map(|&r| (r, 0)).collect();
    for &t in &shifts {
        for &s in &seed {
            *counts
                .get_mut(&canon(s ^ t))
                .ok_or_else(|| Error::Internal("translation left the code".into()))? += 1;
        }
    }
    Ok((shifts.len() as u64, counts))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codes::{golay_binary_generator, golay_ternary_generator};
    use crate::rays::build_ray_system;

    fn golay24() -> RaySystem {
        build_ray_system(&golay_binary_generator()).unwrap()
    }

    fn seed() -> Basis {
        Basis::new(GOLAY24_SEED.to_vec())
    }

    #[test]
    fn seed_is_a_basis() {
        let rs = golay24();
        verify_basis(&rs, &seed(), 24).unwrap();
    }

    #[test]
    fn translation_by_ray_two() {
        let rs = golay24();
        let row2 = translate_basis(&seed(), 2, &rs).unwrap();
        let expected = Basis::new(vec![
            2, 128, 127, 135, 178, 413, 585, 787, 865, 912, 1006, 1012, 1226, 1324, 1323, 1365,
            1492, 1509, 1590, 1608, 1703, 1721, 1755, 1822,
        ]);
        assert_eq!(row2, expected);
        assert_eq!(translate_basis(&seed(), 1, &rs).unwrap(), seed());
        assert_eq!(translate_basis(&row2, 2, &rs).unwrap(), seed());
        assert!(matches!(
            translate_basis(&seed(), 5000, &rs),
            Err(Error::UnknownLabel(5000))
        ));
    }

    #[test]
    fn translated_system_shape() {
        let rs = golay24();
        let bs = generate_translated_system(&seed(), &rs).unwrap();
        assert_eq!(bs.len(), 2048);
        assert_eq!(bs.bases[0], seed());
        assert!(bs.occurrence.values().all(|&c| c == 24));
        let m = bs.matrix.as_ref().unwrap();
        for col in 0..24 {
            let mut column: Vec<u32> = m.iter().map(|row| row[col]).collect();
            column.sort_unstable();
            assert_eq!(column, (1..=2048).collect::<Vec<_>>());
        }
        let last = Basis::new(vec![
            2048, 1922, 1921, 1913, 1872, 1635, 1463, 1261, 1183, 1138, 1044, 1038, 824, 726, 725,
            683, 558, 539, 460, 442, 345, 327, 293, 228,
        ]);
        assert_eq!(bs.bases[2047], last);
        // The seed is fixed by one nonzero translation, so every row appears twice.
        assert_eq!(bs.distinct_count(), 1024);
        let distinct = bs.distinct();
        assert!(distinct.occurrence.values().all(|&c| c == 12));
        distinct.verify(&rs).unwrap();
    }

    #[test]
    fn invalid_seed_rejected() {
        let rs = golay24();
        let mut labels = GOLAY24_SEED.to_vec();
        labels[1] = 2;
        assert!(generate_translated_system(&Basis::new(labels), &rs).is_err());
    }

    #[test]
    fn seed_search_finds_binary_basis() {
        let rs = golay24();
        match find_seed_basis(&rs, 1_000_000) {
            SeedSearch::Found(b) => verify_basis(&rs, &b, 24).unwrap(),
            other => panic!("no seed: {other:?}"),
        }
    }

    #[test]
    fn seed_search_on_punctured_code_proves_absence() {
        let rs = build_ray_system(&golay_binary_generator().puncture(23).unwrap()).unwrap();
        assert!(matches!(
            find_seed_basis(&rs, 1_000_000),
            SeedSearch::ProvenAbsent { .. }
        ));
    }

    #[test]
    fn weight_filters() {
        let rs = build_ray_system(&golay_ternary_generator()).unwrap();
        assert_eq!(filter_rays_by_weight(&rs, 9).unwrap().len(), 220);
        assert_eq!(filter_rays_by_weight(&rs, 6).unwrap().len(), 132);
        assert_eq!(filter_rays_by_weight(&rs, 12).unwrap().len(), 12);
        assert!(filter_rays_by_weight(&rs, 5).unwrap().is_empty());
        assert!(filter_rays_by_weight(&golay24(), 12).is_err());
    }

    #[test]
    fn weight_nine_bases() {
        let rs = build_ray_system(&golay_ternary_generator()).unwrap();
        let w9 = filter_rays_by_weight(&rs, 9).unwrap();
        let bs = enumerate_all_bases(&w9, 12, DEFAULT_NODE_BUDGET).unwrap();
        assert_eq!(bs.len(), 495);
        assert!(bs.occurrence.values().all(|&c| c == 27));
        assert!(matches!(
            enumerate_all_bases(&w9, 12, 10),
            Err(Error::BudgetExhausted { budget: 10 })
        ));
        assert!(enumerate_all_bases(&w9, 11, 1000).is_err());
    }

    #[test]
    fn punctured_ternary_has_no_bases() {
        let g = golay_ternary_generator().puncture(11).unwrap();
        let rs = build_ray_system(&g).unwrap();
        assert_eq!(rs.basis_size(), 11);
        let bs = enumerate_all_bases(&rs, 11, DEFAULT_NODE_BUDGET).unwrap();
        assert!(bs.is_empty());
    }

    #[test]
    fn restriction() {
        let rs = golay24();
        assert_eq!(restrict_system(&rs, &[]).unwrap().len(), 2048);
        let full = restrict_system(&rs, &GOLAY24_SEED).unwrap();
        assert!(full.is_empty());
        let four = restrict_system(&rs, &GOLAY24_SEED[..4]).unwrap();
        assert_eq!(four.basis_size(), 20);
        for r in four.rays() {
            for &a in &GOLAY24_SEED[..4] {
                assert!(rs.orthogonal(a, r.label).unwrap());
            }
        }
        assert!(restrict_system(&rs, &[1, 3]).is_err());
        assert!(restrict_system(&rs, &[1, 1]).is_err());
    }

    #[test]
    fn json_round_trip() {
        let rs = build_ray_system(&golay_ternary_generator()).unwrap();
        let w9 = filter_rays_by_weight(&rs, 9).unwrap();
        let bs = enumerate_all_bases(&w9, 12, DEFAULT_NODE_BUDGET).unwrap();
        let back = BasisSystem::from_json(&bs.to_json()).unwrap();
        assert_eq!(back, bs);
        let mut broken = bs.clone();
        *broken.occurrence.values_mut().next().unwrap() += 1;
        assert!(BasisSystem::from_json(&broken.to_json()).is_err());
    }

    #[test]
    fn codeword_seed_search_on_golay() {
        match find_seed_codewords(&golay_binary_generator(), 1_000_000).unwrap() {
            CodewordSeedSearch::Found(words) => {
                assert_eq!(words.len(), 24);
                for (i, a) in words.iter().enumerate() {
                    for b in &words[i + 1..] {
                        assert_eq!(crate::codes::digit_distance(a, b).unwrap(), 12);
                    }
                }
            }
            other => panic!("{other:?}"),
        }
    }
}
