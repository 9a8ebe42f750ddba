use serde::{Deserialize, Serialize};

use super::hom::{labeled_adjacency, plain_adjacency};
use super::search::{degree_order, Search};
use super::{Guard, SearchStats, CHROMATIC_MAX_N};
use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::graph::{categorical_product, complete_graph, EdgeLabeledGraph, FiniteGraph, Target};

/// A vertex coloring with colors `0..num_colors`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Coloring {
    pub num_colors: usize,
    pub colors: Vec<usize>,
}

impl Coloring {
    pub fn class(&self, c: usize) -> Vec<usize> {
        (0..self.colors.len())
            .filter(|&v| self.colors[v] == c)
            .collect()
    }
}

pub fn is_proper_coloring(g: &FiniteGraph, colors: &[usize]) -> bool {
    colors.len() == g.vertex_count() && g.edges().all(|(u, v)| colors[u] != colors[v])
}

/// A large clique found greedily from every start vertex.
pub fn greedy_clique(g: &FiniteGraph) -> Vec<usize> {
    let mut best = Vec::new();
    for start in 0..g.vertex_count() {
        let mut clique = vec![start];
        let mut cand = g.neighbor_set(start).clone();
        while let Some(v) = cand
            .iter()
            .max_by_key(|&v| (g.neighbor_set(v).iter().filter(|&w| cand.contains(w)).count(), std::cmp::Reverse(v)))
        {
            clique.push(v);
            cand.intersect_with(g.neighbor_set(v));
        }
        if clique.len() > best.len() {
            best = clique;
        }
    }
    best.sort_unstable();
    best
}

fn greedy_coloring(g: &FiniteGraph) -> Vec<usize> {
    let adj = plain_adjacency(g);
    let mut colors = vec![usize::MAX; g.vertex_count()];
    for v in degree_order(&adj) {
        let used: Vec<usize> = g.neighbors(v).iter().map(|&w| colors[w]).collect();
        colors[v] = (0..).find(|c| !used.contains(c)).unwrap();
    }
    colors
}

/// A proper coloring of `g` with at most `k` colors, if one exists.
///
/// Pins the vertices of `clique` (which must be a clique) to colors
/// `0..|clique|` and treats the remaining colors as interchangeable.
pub(crate) fn k_coloring(g: &FiniteGraph, k: usize, clique: &[usize]) -> (Option<Vec<usize>>, u64) {
    let n = g.vertex_count();
    if n == 0 {
        return (Some(Vec::new()), 0);
    }
    if clique.len() > k {
        return (None, 0);
    }
    let kn = complete_graph(k);
    let adj = plain_adjacency(g);
    let mut domains = vec![BitSet::full(k); n];
    for (c, &v) in clique.iter().enumerate() {
        domains[v] = BitSet::from_iter_with_len(k, [c]);
    }
    let pool: Vec<usize> = (clique.len()..k).collect();
    // pinned vertices go first so the pool stays symmetric below them
    let mut order: Vec<usize> = clique.to_vec();
    order.extend(degree_order(&adj).into_iter().filter(|v| !clique.contains(v)));
    Search::new(&adj, Target::Plain(&kn), &order, domains, &pool).run()
}

/// Exact chromatic number with a witness coloring, refusing graphs above
/// [`CHROMATIC_MAX_N`] vertices.
pub fn chromatic_number(g: &FiniteGraph) -> Result<Coloring> {
    chromatic_number_with(g, Guard::Enforce).map(|(c, _)| c)
}

/// Iterative deepening on `k` via `g → K_k`, starting from a greedy clique
/// bound and stopping at the greedy coloring bound.
pub fn chromatic_number_with(g: &FiniteGraph, guard: Guard) -> Result<(Coloring, SearchStats)> {
    let n = g.vertex_count();
    guard.check("chromatic number input", n, CHROMATIC_MAX_N)?;
    if n == 0 {
        return Ok((
            Coloring {
                num_colors: 0,
                colors: vec![],
            },
            SearchStats::default(),
        ));
    }
    let clique = greedy_clique(g);
    let greedy = greedy_coloring(g);
    let upper = greedy.iter().max().unwrap() + 1;
    let mut nodes = 0;
    for k in clique.len()..upper {
        let (found, expanded) = k_coloring(g, k, &clique);
        nodes += expanded;
        if let Some(colors) = found {
            debug_assert!(is_proper_coloring(g, &colors));
            return Ok((Coloring { num_colors: k, colors }, SearchStats::nodes(nodes)));
        }
    }
    Ok((
        Coloring {
            num_colors: upper,
            colors: greedy,
        },
        SearchStats::nodes(nodes),
    ))
}

/// True when no class of `colors` contains edges of every label `1..=Δ`.
pub fn is_edge_labeled_coloring(h: &EdgeLabeledGraph, colors: &[usize]) -> bool {
    if colors.len() != h.vertex_count() {
        return false;
    }
    let full = full_mask(h.delta());
    let classes = colors.iter().max().map_or(0, |m| m + 1);
    let mut spans = vec![0u64; classes];
    for (u, v, l) in h.labeled_edges() {
        if colors[u] == colors[v] {
            spans[colors[u]] |= 1 << (l - 1);
        }
    }
    spans.iter().all(|&m| m != full)
}

fn full_mask(delta: usize) -> u64 {
    if delta >= 64 {
        !0
    } else {
        (1u64 << delta) - 1
    }
}

/// The least number of classes such that no class spans edges of every
/// label, with a witness.
pub fn edge_labeled_chromatic_number(h: &EdgeLabeledGraph) -> Result<Coloring> {
    edge_labeled_chromatic_number_with(h, Guard::Enforce).map(|(c, _)| c)
}

pub fn edge_labeled_chromatic_number_with(
    h: &EdgeLabeledGraph,
    guard: Guard,
) -> Result<(Coloring, SearchStats)> {
    let n = h.vertex_count();
    guard.check("edge-labeled chromatic number input", n, CHROMATIC_MAX_N)?;
    if h.delta() > 64 {
        return Err(Error::Precondition("edge-labeled coloring supports delta <= 64".into()));
    }
    if n == 0 {
        return Ok((
            Coloring {
                num_colors: 0,
                colors: vec![],
            },
            SearchStats::default(),
        ));
    }
    let full = full_mask(h.delta());
    let present = h.labeled_edges().fold(0u64, |m, (_, _, l)| m | 1 << (l - 1));
    if present != full {
        return Ok((
            Coloring {
                num_colors: 1,
                colors: vec![0; n],
            },
            SearchStats::default(),
        ));
    }
    let adj = labeled_adjacency(h);
    let order = degree_order(&adj);
    let mut nodes = 0;
    for k in 2..=n {
        let mut st = LabeledColoringSearch {
            adj: &adj,
            order: &order,
            k,
            full,
            colors: vec![usize::MAX; n],
            spans: vec![0; k],
            nodes: 0,
        };
        let found = st.descend(0, 0);
        nodes += st.nodes;
        if found {
            debug_assert!(is_edge_labeled_coloring(h, &st.colors));
            return Ok((
                Coloring {
                    num_colors: k,
                    colors: st.colors,
                },
                SearchStats::nodes(nodes),
            ));
        }
    }
    unreachable!("singleton classes span no edges")
}

struct LabeledColoringSearch<'a> {
    adj: &'a [Vec<(usize, usize)>],
    order: &'a [usize],
    k: usize,
    full: u64,
    colors: Vec<usize>,
    spans: Vec<u64>,
    nodes: u64,
}

impl LabeledColoringSearch<'_> {
    fn descend(&mut self, t: usize, used: usize) -> bool {
        if t == self.order.len() {
            return true;
        }
        let v = self.order[t];
        // a fresh class may only be the next unused one
        for c in 0..self.k.min(used + 1) {
            self.nodes += 1;
            let mut add = 0u64;
            for &(w, l) in &self.adj[v] {
                if self.colors[w] == c {
                    add |= 1 << (l - 1);
                }
            }
            let before = self.spans[c];
            if before | add == self.full {
                continue;
            }
            self.spans[c] = before | add;
            self.colors[v] = c;
            if self.descend(t + 1, used.max(c + 1)) {
                return true;
            }
            self.colors[v] = usize::MAX;
            self.spans[c] = before;
        }
        false
    }
}

/// `(χ(G), χ(H), χ(G×H))`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HedetniemiGap {
    pub chi_g: usize,
    pub chi_h: usize,
    pub chi_product: usize,
}

impl HedetniemiGap {
    pub fn gap(&self) -> isize {
        self.chi_g.min(self.chi_h) as isize - self.chi_product as isize
    }
}

pub fn hedetniemi_gap(g: &FiniteGraph, h: &FiniteGraph) -> Result<HedetniemiGap> {
    hedetniemi_gap_with(g, h, Guard::Enforce)
}

pub fn hedetniemi_gap_with(g: &FiniteGraph, h: &FiniteGraph, guard: Guard) -> Result<HedetniemiGap> {
    guard.check(
        "product vertex count",
        g.vertex_count() * h.vertex_count(),
        CHROMATIC_MAX_N,
    )?;
    let chi_g = chromatic_number_with(g, guard)?.0.num_colors;
    let chi_h = chromatic_number_with(h, guard)?.0.num_colors;
    let chi_product = chromatic_number_with(&categorical_product(g, h), guard)?.0.num_colors;
    Ok(HedetniemiGap {
        chi_g,
        chi_h,
        chi_product,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{cycle_graph, edgeless_graph, h_delta, named_graph, NamedGraph};

    #[test]
    fn small_chromatic_numbers() {
        assert_eq!(chromatic_number(&complete_graph(4)).unwrap().num_colors, 4);
        assert_eq!(chromatic_number(&edgeless_graph(5)).unwrap().num_colors, 1);
        assert_eq!(chromatic_number(&edgeless_graph(0)).unwrap().num_colors, 0);
        assert_eq!(chromatic_number(&cycle_graph(5).unwrap()).unwrap().num_colors, 3);
        assert_eq!(chromatic_number(&cycle_graph(6).unwrap()).unwrap().num_colors, 2);
        let pet = named_graph(NamedGraph::Petersen).unwrap();
        assert_eq!(chromatic_number(&pet).unwrap().num_colors, 3);
    }

    #[test]
    fn h_delta_three_is_four_chromatic() {
        let c = chromatic_number(&h_delta(3).unwrap().graph).unwrap();
        assert_eq!(c.num_colors, 4);
    }

    #[test]
    fn triangle_free_four_chromatic() {
        for name in [NamedGraph::Grotzsch, NamedGraph::Chvatal] {
            let g = named_graph(name).unwrap();
            let c = chromatic_number(&g).unwrap();
            assert_eq!(c.num_colors, 4, "{name}");
            assert!(is_proper_coloring(&g, &c.colors));
            assert!(crate::solve::find_hom(&g, &complete_graph(3)).is_none());
        }
    }

    #[test]
    fn size_guard() {
        let big = edgeless_graph(65);
        assert!(matches!(
            chromatic_number(&big),
            Err(Error::SizeGuard { limit: 64, .. })
        ));
        assert_eq!(
            chromatic_number_with(&big, Guard::Override).unwrap().0.num_colors,
            1
        );
    }

    #[test]
    fn edge_labeled_examples() {
        // fewer labels than delta
        let two = EdgeLabeledGraph::from_edges(3, 3, [(0, 1, 1), (1, 2, 2)]).unwrap();
        assert_eq!(edge_labeled_chromatic_number(&two).unwrap().num_colors, 1);
        let single = EdgeLabeledGraph::from_edges(1, 3, []).unwrap();
        assert_eq!(edge_labeled_chromatic_number(&single).unwrap().num_colors, 1);
        // Δ-star with every label
        let star = EdgeLabeledGraph::from_edges(4, 3, [(0, 1, 1), (0, 2, 2), (0, 3, 3)]).unwrap();
        let c = edge_labeled_chromatic_number(&star).unwrap();
        assert_eq!(c.num_colors, 2);
        assert!(is_edge_labeled_coloring(&star, &c.colors));
    }

    #[test]
    fn labeled_bounded_by_chromatic() {
        let g = EdgeLabeledGraph::from_edges(
            6,
            2,
            [(0, 1, 1), (1, 2, 2), (0, 2, 1), (3, 4, 2), (4, 5, 1), (3, 5, 2), (0, 3, 1), (2, 5, 2)],
        )
        .unwrap();
        let c = edge_labeled_chromatic_number(&g).unwrap();
        assert!(c.num_colors <= chromatic_number(g.graph()).unwrap().num_colors);
        assert!(is_edge_labeled_coloring(&g, &c.colors));
    }

    #[test]
    fn hedetniemi_examples() {
        let k3 = complete_graph(3);
        assert_eq!(
            hedetniemi_gap(&k3, &k3).unwrap(),
            HedetniemiGap {
                chi_g: 3,
                chi_h: 3,
                chi_product: 3
            }
        );
        let c5 = cycle_graph(5).unwrap();
        let gap = hedetniemi_gap(&complete_graph(2), &c5).unwrap();
        assert_eq!((gap.chi_g, gap.chi_h, gap.chi_product), (2, 3, 2));
        let pet = named_graph(NamedGraph::Petersen).unwrap();
        let gap = hedetniemi_gap(&pet, &complete_graph(1)).unwrap();
        assert_eq!((gap.chi_g, gap.chi_h, gap.chi_product), (3, 1, 1));
        assert!(matches!(
            hedetniemi_gap(&complete_graph(9), &complete_graph(8)),
            Err(Error::SizeGuard { .. })
        ));
    }
}
