//! Backtracking homomorphism search with bitset forward checking.

use crate::bitset::BitSet;
use crate::graph::Target;

/// A source vertex's neighbors, each with the label of the joining edge
/// (ignored for plain targets).
pub(crate) type SourceAdjacency = Vec<Vec<(usize, usize)>>;

pub(crate) struct Search<'a> {
    adj: &'a SourceAdjacency,
    target: Target<'a>,
    order: &'a [usize],
    domains: Vec<BitSet>,
    assigned: Vec<bool>,
    map: Vec<usize>,
    // pool_rank[x] = position of x among interchangeable target values
    pool_rank: Vec<Option<usize>>,
    fresh: usize,
    trail: Vec<(usize, BitSet)>,
    pub(crate) nodes: u64,
}

impl<'a> Search<'a> {
    /// `pool` lists target values that every constraint treats
    /// interchangeably (e.g. unpinned colors of a complete graph). They are
    /// opened in order, which removes value symmetry.
    pub(crate) fn new(
        adj: &'a SourceAdjacency,
        target: Target<'a>,
        order: &'a [usize],
        domains: Vec<BitSet>,
        pool: &[usize],
    ) -> Self {
        let n = adj.len();
        let mut pool_rank = vec![None; target.vertex_count()];
        for (r, &x) in pool.iter().enumerate() {
            pool_rank[x] = Some(r);
        }
        debug_assert_eq!(order.len(), n);
        Search {
            adj,
            target,
            order,
            domains,
            assigned: vec![false; n],
            map: vec![usize::MAX; n],
            pool_rank,
            fresh: 0,
            trail: Vec::new(),
            nodes: 0,
        }
    }

    pub(crate) fn run(mut self) -> (Option<Vec<usize>>, u64) {
        if self.domains.iter().any(BitSet::is_empty) {
            return (None, 0);
        }
        let found = self.descend(0);
        let nodes = self.nodes;
        (found.then_some(self.map), nodes)
    }

    fn descend(&mut self, t: usize) -> bool {
        if t == self.order.len() {
            return true;
        }
        let u = self.order[t];
        let candidates: Vec<usize> = self.domains[u].iter().collect();
        for x in candidates {
            let rank = self.pool_rank[x];
            if rank.is_some_and(|r| r > self.fresh) {
                continue;
            }
            self.nodes += 1;
            self.map[u] = x;
            self.assigned[u] = true;
            let mark = self.trail.len();
            if self.propagate(u, x) {
                let opened = rank == Some(self.fresh);
                if opened {
                    self.fresh += 1;
                }
                if self.descend(t + 1) {
                    return true;
                }
                if opened {
                    self.fresh -= 1;
                }
            }
            while self.trail.len() > mark {
                let (w, saved) = self.trail.pop().unwrap();
                self.domains[w] = saved;
            }
            self.assigned[u] = false;
        }
        false
    }

    fn propagate(&mut self, u: usize, x: usize) -> bool {
        for &(w, label) in &self.adj[u] {
            if self.assigned[w] {
                continue;
            }
            let allowed = self.target.candidates(x, label);
            if self.domains[w].is_subset(allowed) {
                continue;
            }
            let saved = self.domains[w].clone();
            self.domains[w].intersect_with(allowed);
            self.trail.push((w, saved));
            if self.domains[w].is_empty() {
                return false;
            }
        }
        true
    }
}

/// Descending degree, ties broken by index.
pub(crate) fn degree_order(adj: &SourceAdjacency) -> Vec<usize> {
    let mut order: Vec<usize> = (0..adj.len()).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(adj[v].len()), v));
    order
}
