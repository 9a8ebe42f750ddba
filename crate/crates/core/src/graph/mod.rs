//! Finite simple graphs, edge-labeled graphs, and the constructions built on
//! top of them.
//!
//! Vertices are dense integers `0..n`. Every graph keeps its adjacency twice:
//! as sorted neighbor lists for iteration and as one [`BitSet`] per vertex for
//! the solvers, whose inner loop is set intersection.

mod constructions;
mod g0;
mod tree_ball;

pub use constructions::{
    categorical_product, complete_graph, cycle_graph, edgeless_graph, h_delta, named_graph,
    shift_graph, HDelta, NamedGraph,
};
pub use g0::{g0_truncation, g0_unrestricted, G0Truncation};
pub use tree_ball::{tree_ball, TreeBall};

use std::collections::{BTreeMap, VecDeque};

use crate::bitset::BitSet;
use crate::error::{Error, Result};

/// A simple undirected loopless graph on `0..n`.
#[derive(Clone, PartialEq, Eq)]
pub struct FiniteGraph {
    adj: Vec<Vec<usize>>,
    bits: Vec<BitSet>,
    edge_count: usize,
}

impl FiniteGraph {
    pub fn edgeless(n: usize) -> Self {
        FiniteGraph {
            adj: vec![Vec::new(); n],
            bits: vec![BitSet::new(n); n],
            edge_count: 0,
        }
    }

    /// Builds a graph from an edge list. Duplicate edges (in either
    /// orientation) collapse; loops and out-of-range endpoints are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = FiniteGraph::edgeless(n);
        for (u, v) in edges {
            g.insert_edge(u, v)?;
        }
        g.finish();
        Ok(g)
    }

    fn insert_edge(&mut self, u: usize, v: usize) -> Result<()> {
        let n = self.adj.len();
        for w in [u, v] {
            if w >= n {
                return Err(Error::VertexOutOfRange { vertex: w, n });
            }
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        if !self.bits[u].contains(v) {
            self.bits[u].insert(v);
            self.bits[v].insert(u);
            self.adj[u].push(v);
            self.adj[v].push(u);
            self.edge_count += 1;
        }
        Ok(())
    }

    fn finish(&mut self) {
        for list in &mut self.adj {
            list.sort_unstable();
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn neighbor_set(&self, v: usize) -> &BitSet {
        &self.bits[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.adj.len() && self.bits[u].contains(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, ns)| ns.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    /// The subgraph induced by `vertices`; vertex `k` of the result is
    /// `vertices[k]`.
    pub fn induced(&self, vertices: &[usize]) -> FiniteGraph {
        let mut index = vec![usize::MAX; self.vertex_count()];
        for (k, &v) in vertices.iter().enumerate() {
            index[v] = k;
        }
        let mut g = FiniteGraph::edgeless(vertices.len());
        for (k, &v) in vertices.iter().enumerate() {
            for &w in &self.adj[v] {
                let j = index[w];
                if j != usize::MAX && k < j {
                    g.insert_edge(k, j).expect("induced edge is valid");
                }
            }
        }
        g.finish();
        g
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        components_of(self.vertex_count(), |v| self.adj[v].iter().copied())
    }

    pub fn is_acyclic(&self) -> bool {
        self.edge_count + self.components().len() == self.vertex_count()
    }

    pub fn has_triangle(&self) -> bool {
        self.edges().any(|(u, v)| self.bits[u].intersects(&self.bits[v]))
    }
}

impl std::fmt::Debug for FiniteGraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("FiniteGraph")
            .field("n", &self.vertex_count())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

pub(crate) fn components_of<F, I>(n: usize, neighbors: F) -> Vec<Vec<usize>>
where
    F: Fn(usize) -> I,
    I: Iterator<Item = usize>,
{
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut comp = vec![s];
        let mut queue = VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            for w in neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    comp.push(w);
                    queue.push_back(w);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

/// A [`FiniteGraph`] with one generator label in `1..=delta` per edge.
///
/// Labels need not form a proper edge coloring.
#[derive(Clone, PartialEq, Eq)]
pub struct EdgeLabeledGraph {
    graph: FiniteGraph,
    delta: usize,
    labels: BTreeMap<(usize, usize), usize>,
    // by_label[v][l - 1]: neighbors of v across an l-labeled edge
    by_label: Vec<Vec<BitSet>>,
}

impl EdgeLabeledGraph {
    pub fn from_edges<I>(n: usize, delta: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, usize)>,
    {
        if delta < 2 {
            return Err(Error::DeltaTooSmall { min: 2, got: delta });
        }
        let mut graph = FiniteGraph::edgeless(n);
        let mut labels = BTreeMap::new();
        let mut by_label = vec![vec![BitSet::new(n); delta]; n];
        for (u, v, l) in edges {
            if !(1..=delta).contains(&l) {
                return Err(Error::LabelOutOfRange { label: l, delta });
            }
            graph.insert_edge(u, v)?;
            let key = (u.min(v), u.max(v));
            if let Some(&old) = labels.get(&key) {
                if old != l {
                    return Err(Error::ConflictingLabel {
                        u: key.0,
                        v: key.1,
                        first: old,
                        second: l,
                    });
                }
                continue;
            }
            labels.insert(key, l);
            by_label[u][l - 1].insert(v);
            by_label[v][l - 1].insert(u);
        }
        graph.finish();
        Ok(EdgeLabeledGraph {
            graph,
            delta,
            labels,
            by_label,
        })
    }

    pub fn graph(&self) -> &FiniteGraph {
        &self.graph
    }

    pub fn delta(&self) -> usize {
        self.delta
    }

    pub fn vertex_count(&self) -> usize {
        self.graph.vertex_count()
    }

    pub fn label(&self, u: usize, v: usize) -> Option<usize> {
        self.labels.get(&(u.min(v), u.max(v))).copied()
    }

    /// Neighbors of `v` across edges labeled `label` (1-based).
    pub fn labeled_neighbors(&self, v: usize, label: usize) -> &BitSet {
        &self.by_label[v][label - 1]
    }

    /// Edges `(u, v, label)` with `u < v`.
    pub fn labeled_edges(&self) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
        self.labels.iter().map(|(&(u, v), &l)| (u, v, l))
    }

    /// True when every vertex is incident to an edge of every label.
    pub fn is_label_complete(&self) -> bool {
        self.by_label
            .iter()
            .all(|per| per.iter().all(|s| !s.is_empty()))
    }

    /// True when incident edges always carry distinct labels.
    pub fn is_proper_edge_coloring(&self) -> bool {
        self.by_label
            .iter()
            .all(|per| per.iter().all(|s| s.count() <= 1))
    }

    /// The subgraph induced by `vertices`, keeping labels.
    pub fn induced(&self, vertices: &[usize]) -> EdgeLabeledGraph {
        let mut index = vec![usize::MAX; self.vertex_count()];
        for (k, &v) in vertices.iter().enumerate() {
            index[v] = k;
        }
        let edges = self
            .labeled_edges()
            .filter(|&(u, v, _)| index[u] != usize::MAX && index[v] != usize::MAX)
            .map(|(u, v, l)| (index[u], index[v], l))
            .collect::<Vec<_>>();
        EdgeLabeledGraph::from_edges(vertices.len(), self.delta, edges)
            .expect("induced labeled subgraph is valid")
    }
}

impl std::fmt::Debug for EdgeLabeledGraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("EdgeLabeledGraph")
            .field("n", &self.vertex_count())
            .field("delta", &self.delta)
            .field("edges", &self.labeled_edges().collect::<Vec<_>>())
            .finish()
    }
}

/// An owned plain-or-labeled graph.
#[derive(Clone, Debug)]
pub enum TargetGraph {
    Plain(FiniteGraph),
    Labeled(EdgeLabeledGraph),
}

impl TargetGraph {
    pub fn as_target(&self) -> Target<'_> {
        match self {
            TargetGraph::Plain(g) => Target::Plain(g),
            TargetGraph::Labeled(g) => Target::Labeled(g),
        }
    }

    pub fn plain(&self) -> &FiniteGraph {
        self.as_target().graph()
    }
}

/// The codomain of ball homomorphisms: a plain graph, or a labeled graph
/// whose labels must be preserved.
#[derive(Clone, Copy, Debug)]
pub enum Target<'a> {
    Plain(&'a FiniteGraph),
    Labeled(&'a EdgeLabeledGraph),
}

impl<'a> Target<'a> {
    pub fn graph(&self) -> &'a FiniteGraph {
        match self {
            Target::Plain(g) => g,
            Target::Labeled(g) => g.graph(),
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.graph().vertex_count()
    }

    pub fn is_labeled(&self) -> bool {
        matches!(self, Target::Labeled(_))
    }

    /// Legal images for a tree vertex whose parent maps to `parent_image`,
    /// joined to its parent by an edge labeled `label`.
    pub fn candidates(&self, parent_image: usize, label: usize) -> &'a BitSet {
        match self {
            Target::Plain(g) => g.neighbor_set(parent_image),
            Target::Labeled(g) => g.labeled_neighbors(parent_image, label),
        }
    }

    pub fn to_owned_graph(&self) -> TargetGraph {
        match self {
            Target::Plain(g) => TargetGraph::Plain((*g).clone()),
            Target::Labeled(g) => TargetGraph::Labeled((*g).clone()),
        }
    }

    /// Whether the edge `u -- v` exists, with label `label` when labeled.
    pub fn has_edge_labeled(&self, u: usize, v: usize, label: usize) -> bool {
        match self {
            Target::Plain(g) => g.has_edge(u, v),
            Target::Labeled(g) => g.label(u, v) == Some(label),
        }
    }

    pub(crate) fn check_delta(&self, delta: usize) -> Result<()> {
        match self {
            Target::Labeled(g) if g.delta() != delta => Err(Error::DeltaMismatch(g.delta(), delta)),
            _ => Ok(()),
        }
    }
}
