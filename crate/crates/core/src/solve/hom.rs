use serde::{Deserialize, Serialize};

use super::search::{degree_order, Search, SourceAdjacency};
use super::SearchStats;
use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::graph::{EdgeLabeledGraph, FiniteGraph, Target};

/// A total vertex map `V(G) → V(H)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Homomorphism {
    pub map: Vec<usize>,
}

impl Homomorphism {
    pub fn image(&self, v: usize) -> usize {
        self.map[v]
    }
}

pub(crate) fn plain_adjacency(g: &FiniteGraph) -> SourceAdjacency {
    (0..g.vertex_count())
        .map(|v| g.neighbors(v).iter().map(|&w| (w, 0)).collect())
        .collect()
}

pub(crate) fn labeled_adjacency(g: &EdgeLabeledGraph) -> SourceAdjacency {
    (0..g.vertex_count())
        .map(|v| {
            g.graph()
                .neighbors(v)
                .iter()
                .map(|&w| (w, g.label(v, w).unwrap()))
                .collect()
        })
        .collect()
}

/// Searches for an edge-preserving map `g → h`.
pub fn find_hom(g: &FiniteGraph, h: &FiniteGraph) -> Option<Homomorphism> {
    find_hom_with_stats(g, h).0
}

pub fn find_hom_with_stats(g: &FiniteGraph, h: &FiniteGraph) -> (Option<Homomorphism>, SearchStats) {
    let adj = plain_adjacency(g);
    let order = degree_order(&adj);
    let domains = vec![BitSet::full(h.vertex_count()); g.vertex_count()];
    let (map, nodes) = Search::new(&adj, Target::Plain(h), &order, domains, &[]).run();
    let hom = map.map(|map| Homomorphism { map });
    if let Some(f) = &hom {
        debug_assert!(verify_hom(g, h, &f.map));
    }
    (hom, SearchStats::nodes(nodes))
}

/// Searches for an edge- and label-preserving map `g → h`.
pub fn find_hom_labeled(g: &EdgeLabeledGraph, h: &EdgeLabeledGraph) -> Result<Option<Homomorphism>> {
    Ok(find_hom_labeled_with_stats(g, h)?.0)
}

pub fn find_hom_labeled_with_stats(
    g: &EdgeLabeledGraph,
    h: &EdgeLabeledGraph,
) -> Result<(Option<Homomorphism>, SearchStats)> {
    if g.delta() != h.delta() {
        return Err(Error::DeltaMismatch(g.delta(), h.delta()));
    }
    let adj = labeled_adjacency(g);
    let order = degree_order(&adj);
    let domains = vec![BitSet::full(h.vertex_count()); g.vertex_count()];
    let (map, nodes) = Search::new(&adj, Target::Labeled(h), &order, domains, &[]).run();
    let hom = map.map(|map| Homomorphism { map });
    if let Some(f) = &hom {
        debug_assert!(verify_labeled_hom(g, h, &f.map));
    }
    Ok((hom, SearchStats::nodes(nodes)))
}

pub fn verify_hom(g: &FiniteGraph, h: &FiniteGraph, map: &[usize]) -> bool {
    map.len() == g.vertex_count()
        && map.iter().all(|&x| x < h.vertex_count())
        && g.edges().all(|(u, v)| h.has_edge(map[u], map[v]))
}

pub fn verify_labeled_hom(g: &EdgeLabeledGraph, h: &EdgeLabeledGraph, map: &[usize]) -> bool {
    verify_hom(g.graph(), h.graph(), map)
        && g
            .labeled_edges()
            .all(|(u, v, l)| h.label(map[u], map[v]) == Some(l))
}
