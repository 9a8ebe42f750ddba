//! Anti-game labelings, sinkless orientations, and edge grabbing.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{EdgeLabeledGraph, FiniteGraph};

/// A vertex labeling by generator indices `1..=Δ`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AntiGameLabeling {
    pub labels: Vec<usize>,
}

/// True iff no edge labeled `i` has both endpoints labeled `i`.
pub fn check_anti_game(g: &EdgeLabeledGraph, labels: &[usize]) -> bool {
    labels.len() == g.vertex_count()
        && g
            .labeled_edges()
            .all(|(u, v, l)| !(labels[u] == l && labels[v] == l))
}

/// One arc `(tail, head)` per edge of the graph, in `edges()` order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Orientation {
    pub arcs: Vec<(usize, usize)>,
}

impl Orientation {
    pub fn out_degrees(&self, n: usize) -> Vec<usize> {
        let mut out = vec![0; n];
        for &(t, _) in &self.arcs {
            out[t] += 1;
        }
        out
    }

    /// Covers each edge exactly once, in either direction.
    pub fn orients(&self, g: &FiniteGraph) -> bool {
        self.arcs.len() == g.edge_count()
            && g
                .edges()
                .zip(&self.arcs)
                .all(|((u, v), &(t, h))| (t, h) == (u, v) || (t, h) == (v, u))
    }

    pub fn is_sinkless(&self, g: &FiniteGraph) -> bool {
        let out = self.out_degrees(g.vertex_count());
        self.orients(g) && (0..g.vertex_count()).all(|v| g.degree(v) == 0 || out[v] > 0)
    }
}

/// Orients every edge so that each non-isolated vertex has an outgoing edge.
///
/// In each component with a cycle, the cycle is oriented cyclically and every
/// other vertex points one step closer to the cycle along a BFS tree. A
/// component that is a tree with at least one edge has no such orientation.
pub fn sinkless_orientation(g: &FiniteGraph) -> Option<Orientation> {
    let n = g.vertex_count();
    let mut succ = vec![usize::MAX; n];
    let mut dist = vec![usize::MAX; n];
    for comp in g.components() {
        if comp.len() == 1 {
            continue;
        }
        let cycle = find_cycle(g, comp[0])?;
        let mut queue = VecDeque::new();
        for (k, &v) in cycle.iter().enumerate() {
            succ[v] = cycle[(k + 1) % cycle.len()];
            dist[v] = 0;
            queue.push_back(v);
        }
        while let Some(v) = queue.pop_front() {
            for &w in g.neighbors(v) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[v] + 1;
                    succ[w] = v;
                    queue.push_back(w);
                }
            }
        }
    }
    let arcs = g
        .edges()
        .map(|(u, v)| {
            if succ[u] == v {
                (u, v)
            } else if succ[v] == u {
                (v, u)
            } else if dist[u] >= dist[v] {
                (u, v)
            } else {
                (v, u)
            }
        })
        .collect();
    let o = Orientation { arcs };
    debug_assert!(o.is_sinkless(g));
    Some(o)
}

/// A cycle (as a vertex sequence) in the component of `start`, if any.
fn find_cycle(g: &FiniteGraph, start: usize) -> Option<Vec<usize>> {
    let n = g.vertex_count();
    let mut parent = vec![usize::MAX; n];
    let mut seen = vec![false; n];
    let mut stack = vec![(start, usize::MAX)];
    while let Some((v, from)) = stack.pop() {
        if seen[v] {
            continue;
        }
        seen[v] = true;
        parent[v] = from;
        for &w in g.neighbors(v) {
            if w == from {
                continue;
            }
            if seen[w] {
                // back edge v -- w closes a cycle through the DFS tree
                let mut path = vec![v];
                let mut x = v;
                while x != w {
                    x = parent[x];
                    if x == usize::MAX {
                        break;
                    }
                    path.push(x);
                }
                if x == w {
                    return Some(path);
                }
                continue;
            }
            stack.push((w, v));
        }
    }
    None
}

/// Each vertex grabs its outgoing edge of smallest label and takes that
/// label. An edge has one tail, so it is never grabbed from both ends.
pub fn edge_grabbing_from_orientation(g: &EdgeLabeledGraph, orient: &Orientation) -> Result<AntiGameLabeling> {
    let delta = g.delta();
    let plain = g.graph();
    if let Some(v) = (0..g.vertex_count()).find(|&v| plain.degree(v) != delta) {
        return Err(Error::Precondition(format!(
            "graph is not {delta}-regular (vertex {v} has degree {})",
            plain.degree(v)
        )));
    }
    if !g.is_proper_edge_coloring() {
        return Err(Error::Precondition("edge labels are not a proper edge coloring".into()));
    }
    if !orient.is_sinkless(plain) {
        return Err(Error::Precondition("orientation is not a sinkless orientation of the graph".into()));
    }
    let mut labels = vec![usize::MAX; g.vertex_count()];
    for &(t, h) in &orient.arcs {
        let l = g.label(t, h).unwrap();
        labels[t] = labels[t].min(l);
    }
    debug_assert!(check_anti_game(g, &labels));
    Ok(AntiGameLabeling { labels })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_graph, cycle_graph};

    fn k4_colored() -> EdgeLabeledGraph {
        // three perfect matchings of K4
        EdgeLabeledGraph::from_edges(
            4,
            3,
            [(0, 1, 1), (2, 3, 1), (0, 2, 2), (1, 3, 2), (0, 3, 3), (1, 2, 3)],
        )
        .unwrap()
    }

    #[test]
    fn anti_game_patterns() {
        let e = EdgeLabeledGraph::from_edges(2, 3, [(0, 1, 1)]).unwrap();
        assert!(!check_anti_game(&e, &[1, 1]));
        assert!(check_anti_game(&e, &[1, 2]));
        assert!(check_anti_game(&e, &[3, 2]));
        assert!(!check_anti_game(&e, &[1]));
    }

    #[test]
    fn cycle_orientation() {
        let c4 = cycle_graph(4).unwrap();
        let o = sinkless_orientation(&c4).unwrap();
        assert_eq!(o.out_degrees(4), vec![1; 4]);
    }

    #[test]
    fn trees_have_no_sinkless_orientation() {
        assert!(sinkless_orientation(&complete_graph(2)).is_none());
        let path = FiniteGraph::from_edges(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        assert!(sinkless_orientation(&path).is_none());
        // isolated vertices are exempt
        let mixed = FiniteGraph::from_edges(5, [(0, 1), (1, 2), (2, 0)]).unwrap();
        assert!(sinkless_orientation(&mixed).unwrap().is_sinkless(&mixed));
    }

    #[test]
    fn k4_chain() {
        let g = k4_colored();
        let o = sinkless_orientation(g.graph()).unwrap();
        assert!(o.out_degrees(4).iter().all(|&d| d >= 1));
        let lab = edge_grabbing_from_orientation(&g, &o).unwrap();
        assert!(check_anti_game(&g, &lab.labels));
    }

    #[test]
    fn grabbing_preconditions() {
        let two = EdgeLabeledGraph::from_edges(2, 3, [(0, 1, 1)]).unwrap();
        let o = Orientation { arcs: vec![(0, 1)] };
        assert!(matches!(
            edge_grabbing_from_orientation(&two, &o),
            Err(Error::Precondition(_))
        ));
        let g = k4_colored();
        let bad = Orientation {
            arcs: g.graph().edges().map(|(u, v)| (v.max(u), v.min(u))).collect(),
        };
        // vertex 0 becomes a sink
        assert!(edge_grabbing_from_orientation(&g, &bad).is_err());
    }
}
