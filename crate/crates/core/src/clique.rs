//! Fixed-size clique search on bitset adjacency.

use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};

use rayon::prelude::*;

use crate::bitset::BitSet;

const FLUSH_EVERY: u64 = 1 << 12;

struct Budget<'a> {
    used: &'a AtomicU64,
    abort: &'a AtomicBool,
    limit: u64,
    local: u64,
}

impl Budget<'_> {
    #[inline]
    fn tick(&mut self) -> bool {
        self.local += 1;
        if self.local == FLUSH_EVERY {
            self.flush();
        }
        !self.abort.load(Ordering::Relaxed)
    }

    fn flush(&mut self) {
        let total = self.used.fetch_add(self.local, Ordering::Relaxed) + self.local;
        self.local = 0;
        if total > self.limit {
            self.abort.store(true, Ordering::Relaxed);
        }
    }
}

/// Every clique of exactly `k` vertices, as ascending index lists sorted
/// lexicographically. Returns `Err(nodes)` if the search tree has more than
/// `budget` nodes. The node count, and therefore the outcome, does not depend
/// on how roots are scheduled across threads.
pub(crate) fn k_cliques(adj: &[BitSet], k: usize, budget: u64) -> Result<Vec<Vec<usize>>, u64> {
    let n = adj.len();
    if k == 0 {
        return Ok(vec![vec![]]);
    }
    let used = AtomicU64::new(0);
    let abort = AtomicBool::new(false);
    let per_root: Vec<Vec<Vec<usize>>> = (0..n)
        .into_par_iter()
        .map(|root| {
            let mut budget = Budget {
                used: &used,
                abort: &abort,
                limit: budget,
                local: 0,
            };
            let mut out = Vec::new();
            let mut cand = adj[root].clone();
            cand.clear_through(root);
            let mut clique = vec![root];
            extend(adj, k, &mut clique, &cand, &mut out, &mut budget);
            budget.flush();
            out
        })
        .collect();
    let total = used.load(Ordering::Relaxed);
    if total > budget || abort.load(Ordering::Relaxed) {
        return Err(total);
    }
    let mut all: Vec<Vec<usize>> = per_root.into_iter().flatten().collect();
    all.sort_unstable();
    Ok(all)
}

fn extend(
    adj: &[BitSet],
    k: usize,
    clique: &mut Vec<usize>,
    cand: &BitSet,
    out: &mut Vec<Vec<usize>>,
    budget: &mut Budget<'_>,
) {
    if !budget.tick() {
        return;
    }
    if clique.len() == k {
        out.push(clique.clone());
        return;
    }
    let need = k - clique.len();
    let mut remaining = cand.count();
    if remaining < need {
        return;
    }
    for v in cand.ones() {
        if remaining < need {
            break;
        }
        remaining -= 1;
        let mut next = cand.clone();
        next.clear_through(v);
        next.intersect_with(&adj[v]);
        if next.count() + 1 < need {
            continue;
        }
        clique.push(v);
        extend(adj, k, clique, &next, out, budget);
        clique.pop();
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) enum Search {
    Found(Vec<usize>),
    Exhausted(u64),
    Absent(u64),
}

/// Depth-first search for one `k`-clique. At each level the candidate with
/// the most neighbours among the remaining candidates is tried first, ties
/// going to the lower index.
pub(crate) fn find_clique(adj: &[BitSet], k: usize, budget: u64) -> Search {
    let mut nodes = 0u64;
    let mut clique = Vec::with_capacity(k);
    let cand = BitSet::full(adj.len());
    match greedy(adj, k, &mut clique, cand, &mut nodes, budget) {
        Some(true) => Search::Found(clique),
        Some(false) => Search::Absent(nodes),
        None => Search::Exhausted(nodes),
    }
}

fn greedy(
    adj: &[BitSet],
    k: usize,
    clique: &mut Vec<usize>,
    mut cand: BitSet,
    nodes: &mut u64,
    budget: u64,
) -> Option<bool> {
    *nodes += 1;
    if *nodes > budget {
        return None;
    }
    if clique.len() == k {
        return Some(true);
    }
    let need = k - clique.len();
    loop {
        if cand.count() < need {
            return Some(false);
        }
        let (v, _) = cand
            .ones()
            .map(|v| (v, adj[v].intersection_count(&cand)))
            .max_by(|a, b| a.1.cmp(&b.1).then(b.0.cmp(&a.0)))?;
        let mut next = cand.clone();
        next.intersect_with(&adj[v]);
        clique.push(v);
        match greedy(adj, k, clique, next, nodes, budget) {
            Some(true) => return Some(true),
            None => return None,
            Some(false) => {}
        }
        clique.pop();
        cand.remove(v);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph(n: usize, edges: &[(usize, usize)]) -> Vec<BitSet> {
        let mut adj = vec![BitSet::new(n); n];
        for &(a, b) in edges {
            adj[a].insert(b);
            adj[b].insert(a);
        }
        adj
    }

    #[test]
    fn triangles_of_k4() {
        let adj = graph(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        let t = k_cliques(&adj, 3, 1000).unwrap();
        assert_eq!(
            t,
            vec![vec![0, 1, 2], vec![0, 1, 3], vec![0, 2, 3], vec![1, 2, 3]]
        );
        assert_eq!(k_cliques(&adj, 4, 1000).unwrap().len(), 1);
        assert!(k_cliques(&adj, 5, 1000).unwrap().is_empty());
    }

    #[test]
    fn budget_exhaustion_is_reported() {
        let adj = graph(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        assert!(k_cliques(&adj, 3, 2).is_err());
    }

    #[test]
    fn single_search() {
        let adj = graph(5, &[(0, 1), (1, 2), (2, 0), (3, 4)]);
        assert!(matches!(find_clique(&adj, 3, 100), Search::Found(c) if c.len() == 3));
        assert!(matches!(find_clique(&adj, 4, 100), Search::Absent(_)));
        assert!(matches!(find_clique(&adj, 3, 1), Search::Exhausted(_)));
    }
}
