use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use super::FiniteGraph;
use crate::error::{Error, Result};

/// `K_n`.
pub fn complete_graph(n: usize) -> FiniteGraph {
    FiniteGraph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
        .expect("complete graph edges are valid")
}

pub fn edgeless_graph(n: usize) -> FiniteGraph {
    FiniteGraph::edgeless(n)
}

/// `C_n` for `n >= 3`, edges `k -- k+1 (mod n)`.
pub fn cycle_graph(n: usize) -> Result<FiniteGraph> {
    if n < 3 {
        return Err(Error::Precondition(format!("cycle needs n >= 3, got {n}")));
    }
    FiniteGraph::from_edges(n, (0..n).map(|k| (k, (k + 1) % n)))
}

/// The categorical (tensor) product. Vertex `(g, h)` is numbered
/// `g * |V(h)| + h`; `(g, h) ~ (g', h')` iff `g ~ g'` and `h ~ h'`.
pub fn categorical_product(g: &FiniteGraph, h: &FiniteGraph) -> FiniteGraph {
    let m = h.vertex_count();
    let mut edges = Vec::with_capacity(2 * g.edge_count() * h.edge_count());
    for (a, b) in g.edges() {
        for (c, d) in h.edges() {
            edges.push((a * m + c, b * m + d));
            edges.push((a * m + d, b * m + c));
        }
    }
    FiniteGraph::from_edges(g.vertex_count() * m, edges).expect("product edges are valid")
}

/// The maximal Δ-(*) graph together with its vertex roles.
///
/// Vertex numbering (colors `c` are 0-based, `c < Δ-1`):
/// `V0[c] = c`, `V1[c] = (Δ-1) + c`, `P[i][j] = 2(Δ-1) + i(Δ-1) + j`,
/// and the apex `† = 2(Δ-1) + (Δ-1)²`.
#[derive(Clone, Debug)]
pub struct HDelta {
    pub delta: usize,
    pub graph: FiniteGraph,
    pub v0: Vec<usize>,
    pub v1: Vec<usize>,
    pub p: Vec<Vec<usize>>,
    pub dagger: usize,
}

impl HDelta {
    pub fn roles(&self) -> BTreeMap<String, Vec<usize>> {
        BTreeMap::from([
            ("V0".to_string(), self.v0.clone()),
            ("V1".to_string(), self.v1.clone()),
            ("P".to_string(), self.p.iter().flatten().copied().collect()),
            ("dagger".to_string(), vec![self.dagger]),
        ])
    }

    /// The witness sets `R0 = V0 ∪ {†}` and `R1 = V1 ∪ {†}`.
    pub fn canonical_r0_r1(&self) -> (Vec<usize>, Vec<usize>) {
        let mut r0 = self.v0.clone();
        r0.push(self.dagger);
        let mut r1 = self.v1.clone();
        r1.push(self.dagger);
        (r0, r1)
    }
}

pub fn h_delta(delta: usize) -> Result<HDelta> {
    if delta < 3 {
        return Err(Error::DeltaTooSmall { min: 3, got: delta });
    }
    let k = delta - 1;
    let v0: Vec<usize> = (0..k).collect();
    let v1: Vec<usize> = (k..2 * k).collect();
    let p: Vec<Vec<usize>> = (0..k)
        .map(|i| (0..k).map(|j| 2 * k + i * k + j).collect())
        .collect();
    let dagger = 2 * k + k * k;

    let mut edges = Vec::new();
    for a in 0..k {
        for b in a + 1..k {
            edges.push((v0[a], v0[b]));
            edges.push((v1[a], v1[b]));
        }
    }
    for i in 0..k {
        for j in 0..k {
            edges.push((dagger, p[i][j]));
            for i2 in 0..k {
                for j2 in 0..k {
                    if i != i2 && j != j2 {
                        edges.push((p[i][j], p[i2][j2]));
                    }
                }
            }
            // V0 vertex c sees (i, j) for i != c; V1 vertex c sees (i, j) for j != c
            for c in 0..k {
                if i != c {
                    edges.push((v0[c], p[i][j]));
                }
                if j != c {
                    edges.push((v1[c], p[i][j]));
                }
            }
        }
    }
    let graph = FiniteGraph::from_edges(dagger + 1, edges)?;
    Ok(HDelta {
        delta,
        graph,
        v0,
        v1,
        p,
        dagger,
    })
}

/// Standard graphs for the test corpus.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NamedGraph {
    Chvatal,
    Grotzsch,
    Petersen,
    Cycle(usize),
}

impl FromStr for NamedGraph {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let lower = s.trim().to_ascii_lowercase();
        match lower.as_str() {
            "chvatal" => return Ok(NamedGraph::Chvatal),
            "grotzsch" | "mycielski4" => return Ok(NamedGraph::Grotzsch),
            "petersen" => return Ok(NamedGraph::Petersen),
            _ => {}
        }
        let digits = lower
            .strip_prefix("cycle(")
            .and_then(|r| r.strip_suffix(')'))
            .or_else(|| lower.strip_prefix("cycle"))
            .or_else(|| lower.strip_prefix('c'));
        match digits.and_then(|d| d.parse::<usize>().ok()) {
            Some(n) if n >= 3 => Ok(NamedGraph::Cycle(n)),
            _ => Err(Error::UnknownGraph(s.to_string())),
        }
    }
}

impl fmt::Display for NamedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NamedGraph::Chvatal => write!(f, "chvatal"),
            NamedGraph::Grotzsch => write!(f, "grotzsch"),
            NamedGraph::Petersen => write!(f, "petersen"),
            NamedGraph::Cycle(n) => write!(f, "cycle({n})"),
        }
    }
}

/// Builds a named graph.
///
/// Vertex orders:
/// * `grotzsch`: Mycielskian of `C5`; `0..5` the cycle, `5 + k` the shadow of
///   `k` (adjacent to the cycle neighbors of `k`), `10` the apex.
/// * `chvatal`: the usual 12-vertex drawing, outer 4-cycle `0..4` first.
/// * `petersen`: outer 5-cycle `0..5`, inner pentagram `5..10`, spokes `k -- k+5`.
/// * `cycle(n)`: `k -- k+1 (mod n)`.
pub fn named_graph(name: NamedGraph) -> Result<FiniteGraph> {
    match name {
        NamedGraph::Cycle(n) => cycle_graph(n),
        NamedGraph::Petersen => FiniteGraph::from_edges(
            10,
            (0..5).flat_map(|k| [(k, (k + 1) % 5), (k, k + 5), (k + 5, (k + 2) % 5 + 5)]),
        ),
        NamedGraph::Grotzsch => {
            let mut edges = Vec::new();
            for k in 0..5 {
                let next = (k + 1) % 5;
                edges.push((k, next));
                edges.push((k + 5, next));
                edges.push((next + 5, k));
                edges.push((k + 5, 10));
            }
            FiniteGraph::from_edges(11, edges)
        }
        NamedGraph::Chvatal => FiniteGraph::from_edges(
            12,
            [
                (0, 1),
                (0, 4),
                (0, 6),
                (0, 9),
                (1, 2),
                (1, 5),
                (1, 7),
                (2, 3),
                (2, 6),
                (2, 8),
                (3, 4),
                (3, 7),
                (3, 9),
                (4, 5),
                (4, 8),
                (5, 10),
                (5, 11),
                (6, 10),
                (6, 11),
                (7, 8),
                (7, 11),
                (8, 10),
                (9, 10),
                (9, 11),
            ],
        ),
    }
}

/// Finite slice of the shift graph: vertices are the `k`-subsets of
/// `{1..n}` in lexicographic order, and `x ~ y` when `y` is `x` with its
/// minimum dropped and a new element above `max x` appended.
pub fn shift_graph(n: usize, k: usize) -> Result<(FiniteGraph, Vec<Vec<usize>>)> {
    if k == 0 || k > n {
        return Err(Error::Precondition(format!(
            "shift graph needs 1 <= k <= n, got n={n}, k={k}"
        )));
    }
    let mut subsets = Vec::new();
    let mut cur: Vec<usize> = (1..=k).collect();
    loop {
        subsets.push(cur.clone());
        // next combination in lexicographic order
        let Some(pos) = (0..k).rev().find(|&p| cur[p] < n - (k - 1 - p)) else {
            break;
        };
        cur[pos] += 1;
        for q in pos + 1..k {
            cur[q] = cur[q - 1] + 1;
        }
    }
    let index: BTreeMap<&[usize], usize> = subsets
        .iter()
        .enumerate()
        .map(|(i, s)| (s.as_slice(), i))
        .collect();
    let mut edges = Vec::new();
    for (i, x) in subsets.iter().enumerate() {
        let top = *x.last().unwrap();
        for b in top + 1..=n {
            let mut y: Vec<usize> = x[1..].to_vec();
            y.push(b);
            edges.push((i, index[y.as_slice()]));
        }
    }
    let g = FiniteGraph::from_edges(subsets.len(), edges)?;
    Ok((g, subsets))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_small() {
        let k1 = complete_graph(1);
        assert_eq!((k1.vertex_count(), k1.edge_count()), (1, 0));
        assert_eq!(complete_graph(4).edge_count(), 6);
    }

    #[test]
    fn product_k2_k2_is_matching() {
        let p = categorical_product(&complete_graph(2), &complete_graph(2));
        assert_eq!(p.vertex_count(), 4);
        // (0,0)-(1,1) and (0,1)-(1,0)
        assert_eq!(p.edges().collect::<Vec<_>>(), vec![(0, 3), (1, 2)]);
    }

    #[test]
    fn product_with_k1_is_edgeless() {
        let g = named_graph(NamedGraph::Petersen).unwrap();
        let p = categorical_product(&g, &complete_graph(1));
        assert_eq!((p.vertex_count(), p.edge_count()), (10, 0));
    }

    #[test]
    fn product_k3_k3_edges() {
        let p = categorical_product(&complete_graph(3), &complete_graph(3));
        assert_eq!((p.vertex_count(), p.edge_count()), (9, 18));
    }

    #[test]
    fn h_delta_sizes() {
        let h3 = h_delta(3).unwrap();
        assert_eq!(h3.graph.vertex_count(), 9);
        assert_eq!(h3.graph.edge_count(), 16);
        let h4 = h_delta(4).unwrap();
        assert_eq!(h4.graph.vertex_count(), 16);
        assert_eq!(h4.graph.degree(h4.dagger), 9);
        assert!(matches!(h_delta(2), Err(Error::DeltaTooSmall { .. })));
    }

    #[test]
    fn h_delta_structure() {
        for delta in 3..=5 {
            let h = h_delta(delta).unwrap();
            let k = delta - 1;
            let g = &h.graph;
            assert_eq!(g.vertex_count(), 2 * k + k * k + 1);
            let p_all: Vec<usize> = h.p.iter().flatten().copied().collect();
            assert_eq!(g.neighbors(h.dagger), p_all.as_slice());
            for c in 0..k {
                for i in 0..k {
                    for j in 0..k {
                        assert_eq!(g.has_edge(h.v0[c], h.p[i][j]), i != c);
                        assert_eq!(g.has_edge(h.v1[c], h.p[i][j]), j != c);
                    }
                }
                for c2 in 0..k {
                    assert!(!g.has_edge(h.v0[c], h.v1[c2]));
                }
                assert!(!g.has_edge(h.dagger, h.v0[c]));
                assert!(!g.has_edge(h.dagger, h.v1[c]));
            }
        }
    }

    #[test]
    fn named_graph_shapes() {
        let g = named_graph(NamedGraph::Grotzsch).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (11, 20));
        assert!(!g.has_triangle());
        let c = named_graph(NamedGraph::Chvatal).unwrap();
        assert_eq!((c.vertex_count(), c.edge_count()), (12, 24));
        assert!((0..12).all(|v| c.degree(v) == 4));
        assert!(!c.has_triangle());
        let p = named_graph(NamedGraph::Petersen).unwrap();
        assert_eq!((p.edge_count(), p.max_degree()), (15, 3));
        assert!(!p.has_triangle());
    }

    #[test]
    fn named_graph_parsing() {
        assert_eq!("cycle(5)".parse::<NamedGraph>().unwrap(), NamedGraph::Cycle(5));
        assert_eq!("C7".parse::<NamedGraph>().unwrap(), NamedGraph::Cycle(7));
        assert_eq!("Chvatal".parse::<NamedGraph>().unwrap(), NamedGraph::Chvatal);
        assert!("cycle(2)".parse::<NamedGraph>().is_err());
        assert!(matches!(
            "heawood".parse::<NamedGraph>(),
            Err(Error::UnknownGraph(_))
        ));
    }

    #[test]
    fn shift_graph_small() {
        let (g, subsets) = shift_graph(4, 2).unwrap();
        assert_eq!(subsets.len(), 6);
        // {1,2} ~ {2,3}, {2,4}; {1,3} ~ {3,4}
        assert_eq!(g.edge_count(), 2 + 1 + 1);
        let (k, _) = shift_graph(4, 1).unwrap();
        assert_eq!(k.edge_count(), 6);
    }
}
