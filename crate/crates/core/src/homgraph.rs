//! Finite-depth approximations of the homomorphism graph of the `Δ`-regular
//! tree into a target, and structural analyzers for them.
//!
//! A vertex is a homomorphism `h` from the radius-`d` tree ball into the
//! target, stored as its image vector in shortlex word order. Two vertices
//! `h, h'` are joined by an `α_i`-edge when `h'` is the shift of `h` along the
//! generator `α_i`:
//!
//! * overlap: `h'(w) = h(α_i w)` for every word `w` with both `w` and `α_i w`
//!   in the ball;
//! * extension: the partial map on `B_{d+1}(e) ∪ B_{d+1}(α_i)` that agrees with
//!   `h` around the root and with `h'` (shifted) around `α_i` extends to a
//!   homomorphism.
//!
//! Uncovered vertices of that union are leaves hanging off depth-`d` words,
//! so the extension search reduces to "every such leaf has a candidate
//! image". In the plain variant this always holds; in the label-preserving
//! variant it asks for an incident edge of each missing label.

use std::collections::{BTreeMap, HashMap, VecDeque};
use std::fmt::Write as _;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{components_of, tree_ball, Target, TargetGraph, TreeBall};
use crate::solve::Guard;

/// Largest number of ball homomorphisms built without override.
pub const HOM_APPROX_MAX: u128 = 4_000_000;

/// Images of the ball vertices, indexed like [`TreeBall`].
pub type BallHom = Vec<usize>;

/// All homomorphisms from `ball` into `target`, optionally with a fixed root
/// image, in lexicographic order of their image vectors.
pub fn enumerate_ball_homs(ball: &TreeBall, target: Target, root: Option<usize>) -> Vec<BallHom> {
    let roots: Vec<usize> = match root {
        Some(x) => vec![x],
        None => (0..target.vertex_count()).collect(),
    };
    let mut out = Vec::new();
    for x in roots {
        if x >= target.vertex_count() {
            continue;
        }
        let mut img = vec![usize::MAX; ball.len()];
        img[0] = x;
        extend(ball, target, 1, &mut img, &mut out);
    }
    out
}

fn extend(ball: &TreeBall, target: Target, v: usize, img: &mut BallHom, out: &mut Vec<BallHom>) {
    if v == ball.len() {
        out.push(img.clone());
        return;
    }
    let p = ball.parent(v).expect("non-root has a parent");
    let label = ball.last_letter(v).unwrap();
    for y in target.candidates(img[p], label) {
        img[v] = y;
        extend(ball, target, v + 1, img, out);
    }
    img[v] = usize::MAX;
}

/// True iff `h` maps every ball edge onto a target edge (of the same label
/// when the target is labeled).
pub fn is_ball_hom(ball: &TreeBall, target: Target, h: &[usize]) -> bool {
    h.len() == ball.len()
        && h.iter().all(|&y| y < target.vertex_count())
        && ball
            .graph()
            .labeled_edges()
            .all(|(u, v, l)| target.has_edge_labeled(h[u], h[v], l))
}

/// The exact number of homomorphisms from `ball` into `target`, by dynamic
/// programming over (image, incoming generator, remaining depth).
pub fn count_ball_homs(ball: &TreeBall, target: Target) -> u128 {
    let n = target.vertex_count();
    let delta = ball.delta();
    // below[y][l]: homs of a subtree of height h whose root maps to y and
    // entered along generator l (0 for the ball root)
    let mut below = vec![vec![1u128; delta + 1]; n];
    for _ in 0..ball.radius() {
        let next = (0..n)
            .map(|y| {
                (0..=delta)
                    .map(|l| {
                        (1..=delta).filter(|&a| a != l).fold(1u128, |acc, a| {
                            let s = target
                                .candidates(y, a)
                                .iter()
                                .fold(0u128, |s, z| s.saturating_add(below[z][a]));
                            acc.saturating_mul(s)
                        })
                    })
                    .collect()
            })
            .collect();
        below = next;
    }
    (0..n).fold(0u128, |acc, y| acc.saturating_add(below[y][0]))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomEdge {
    pub a: usize,
    pub b: usize,
    pub generator: usize,
}

/// The depth-`d` approximation of the homomorphism graph.
#[derive(Clone, Debug)]
pub struct HomGraphApprox {
    pub delta: usize,
    pub depth: usize,
    pub label_preserving: bool,
    pub target: TargetGraph,
    pub ball: TreeBall,
    pub homs: Vec<BallHom>,
    /// Each edge once, with `a < b`; parallel edges carry distinct generators.
    pub edges: Vec<HomEdge>,
}

impl HomGraphApprox {
    pub fn vertex_count(&self) -> usize {
        self.homs.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn root_image(&self, h: usize) -> usize {
        self.homs[h][0]
    }

    pub fn root_map(&self) -> Vec<usize> {
        self.homs.iter().map(|h| h[0]).collect()
    }

    /// `(neighbor, edge id)` lists.
    pub fn adjacency(&self) -> Vec<Vec<(usize, usize)>> {
        let mut adj = vec![Vec::new(); self.homs.len()];
        for (id, e) in self.edges.iter().enumerate() {
            adj[e.a].push((e.b, id));
            adj[e.b].push((e.a, id));
        }
        adj
    }

    pub fn components(&self) -> Vec<Vec<usize>> {
        let adj = self.adjacency();
        components_of(self.homs.len(), |v| adj[v].iter().map(|&(w, _)| w))
    }

    /// Length of a shortest cycle, counting parallel edges as 2-cycles.
    pub fn shortest_cycle(&self) -> Option<usize> {
        let adj = self.adjacency();
        let n = self.homs.len();
        let mut best = usize::MAX;
        let mut dist = vec![usize::MAX; n];
        let mut via = vec![usize::MAX; n];
        let mut touched = Vec::new();
        for s in 0..n {
            for &v in &touched {
                dist[v] = usize::MAX;
                via[v] = usize::MAX;
            }
            touched.clear();
            dist[s] = 0;
            touched.push(s);
            let mut queue = VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                if 2 * dist[v] + 1 >= best {
                    break;
                }
                for &(w, id) in &adj[v] {
                    if id == via[v] {
                        continue;
                    }
                    if dist[w] == usize::MAX {
                        dist[w] = dist[v] + 1;
                        via[w] = id;
                        touched.push(w);
                        queue.push_back(w);
                    } else {
                        best = best.min(dist[v] + dist[w] + 1);
                    }
                }
            }
        }
        (best != usize::MAX).then_some(best)
    }

    /// DOT rendering; each vertex shows its root image.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph Hom {\n");
        for (h, img) in self.homs.iter().enumerate() {
            let _ = writeln!(out, "  {h} [label=\"{h}\\nroot={}\", root={}];", img[0], img[0]);
        }
        for e in &self.edges {
            let _ = writeln!(
                out,
                "  {} -- {} [label=\"a{}\", generator={}];",
                e.a, e.b, e.generator, e.generator
            );
        }
        out.push_str("}\n");
        out
    }
}

pub fn build_hom_approx(
    delta: usize,
    depth: usize,
    target: Target,
    label_preserving: bool,
) -> Result<HomGraphApprox> {
    build_hom_approx_with(delta, depth, target, label_preserving, Guard::Enforce)
}

pub fn build_hom_approx_with(
    delta: usize,
    depth: usize,
    target: Target,
    label_preserving: bool,
    guard: Guard,
) -> Result<HomGraphApprox> {
    if depth == 0 {
        return Err(Error::Precondition("depth must be at least 1".into()));
    }
    if target.vertex_count() == 0 {
        return Err(Error::Precondition("target graph is empty".into()));
    }
    let target = match (label_preserving, target) {
        (true, Target::Plain(_)) => {
            return Err(Error::Precondition(
                "label-preserving variant needs an edge-labeled target".into(),
            ))
        }
        (true, t) => {
            t.check_delta(delta)?;
            t
        }
        (false, t) => Target::Plain(t.graph()),
    };
    let ball = tree_ball(delta, depth)?;
    guard.check_wide("ball homomorphisms", count_ball_homs(&ball, target), HOM_APPROX_MAX)?;

    let homs: Vec<BallHom> = (0..target.vertex_count())
        .into_par_iter()
        .map(|x| enumerate_ball_homs(&ball, target, Some(x)))
        .collect::<Vec<_>>()
        .concat();

    let edges = shift_edges(&ball, target, &homs);
    for e in &edges {
        assert!(
            target.has_edge_labeled(homs[e.a][0], homs[e.b][0], e.generator),
            "adjacent homomorphisms must have adjacent roots"
        );
    }
    Ok(HomGraphApprox {
        delta,
        depth,
        label_preserving,
        target: target.to_owned_graph(),
        ball,
        homs,
        edges,
    })
}

fn shift_edges(ball: &TreeBall, target: Target, homs: &[BallHom]) -> Vec<HomEdge> {
    let delta = ball.delta();
    let depth = ball.radius();
    let inner = ball.level(depth).start;
    let leaves = ball.level(depth);
    // shift[i][w] = α_i w, defined for every w of length < depth
    let shift: Vec<Vec<Option<usize>>> = (0..=delta)
        .map(|i| {
            (0..ball.len())
                .map(|w| if i == 0 { None } else { ball.left_mul(i, w) })
                .collect()
        })
        .collect();

    let mut by_core: HashMap<&[usize], Vec<usize>> = HashMap::new();
    for (k, h) in homs.iter().enumerate() {
        by_core.entry(&h[..inner]).or_default().push(k);
    }

    // ext_ok[k][i]: every depth-d vertex of h off the α_i side can grow a child
    // along each missing generator
    let ext_ok: Vec<Vec<bool>> = homs
        .par_iter()
        .map(|h| {
            (0..=delta)
                .map(|i| {
                    i > 0
                        && leaves.clone().all(|p| {
                            ball.first_letter(p) == Some(i)
                                || (1..=delta).all(|a| {
                                    Some(a) == ball.last_letter(p)
                                        || !target.candidates(h[p], a).is_empty()
                                })
                        })
                })
                .collect()
        })
        .collect();

    homs.par_iter()
        .enumerate()
        .flat_map_iter(|(k, h)| {
            let mut found = Vec::new();
            for i in 1..=delta {
                if !ext_ok[k][i] {
                    continue;
                }
                let key: Vec<usize> = (0..inner).map(|w| h[shift[i][w].unwrap()]).collect();
                let Some(cands) = by_core.get(key.as_slice()) else {
                    continue;
                };
                for &j in cands {
                    if j <= k || !ext_ok[j][i] {
                        continue;
                    }
                    let hp = &homs[j];
                    let overlap = leaves.clone().all(|w| match shift[i][w] {
                        Some(s) if ball.first_letter(w) == Some(i) => hp[w] == h[s],
                        _ => true,
                    });
                    if overlap {
                        found.push(HomEdge { a: k, b: j, generator: i });
                    }
                }
            }
            found
        })
        .collect()
}

/// Structural summary of a [`HomGraphApprox`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomGraphReport {
    pub delta: usize,
    pub depth: usize,
    pub label_preserving: bool,
    pub vertices: usize,
    pub edges: usize,
    pub components: usize,
    pub distinct_root_images: usize,
    pub degree_histogram: BTreeMap<usize, usize>,
    pub shortest_cycle: Option<usize>,
    pub root_map_edge_preserving: bool,
    pub root_injective_per_component: bool,
    /// Components on which the root map repeats a value (non-free shadow).
    pub non_injective_components: usize,
    pub all_homs_injective: bool,
    /// Vertices with two or more neighbors along one generator. The shift of
    /// an infinite homomorphism is unique, so this counts finite-depth
    /// ambiguity.
    pub branching_vertices: usize,
    /// Radius beyond the ball up to which edges are certified extendable.
    pub certificate_depth: usize,
}

pub fn analyze(approx: &HomGraphApprox) -> HomGraphReport {
    let target = approx.target.as_target();
    let mut degree = vec![0usize; approx.homs.len()];
    for e in &approx.edges {
        degree[e.a] += 1;
        degree[e.b] += 1;
    }
    let mut degree_histogram = BTreeMap::new();
    for d in degree {
        *degree_histogram.entry(d).or_insert(0) += 1;
    }
    let components = approx.components();
    let non_injective_components = components
        .iter()
        .filter(|comp| {
            let mut roots: Vec<usize> = comp.iter().map(|&h| approx.root_image(h)).collect();
            roots.sort_unstable();
            roots.windows(2).any(|w| w[0] == w[1])
        })
        .count();
    let mut roots = approx.root_map();
    roots.sort_unstable();
    roots.dedup();
    let branching_vertices = approx
        .adjacency()
        .iter()
        .filter(|nbrs| {
            let mut gens: Vec<usize> = nbrs.iter().map(|&(_, id)| approx.edges[id].generator).collect();
            gens.sort_unstable();
            gens.windows(2).any(|w| w[0] == w[1])
        })
        .count();
    HomGraphReport {
        delta: approx.delta,
        depth: approx.depth,
        label_preserving: approx.label_preserving,
        vertices: approx.vertex_count(),
        edges: approx.edge_count(),
        components: components.len(),
        distinct_root_images: roots.len(),
        degree_histogram,
        shortest_cycle: approx.shortest_cycle(),
        root_map_edge_preserving: approx.edges.iter().all(|e| {
            target.has_edge_labeled(approx.root_image(e.a), approx.root_image(e.b), e.generator)
        }),
        root_injective_per_component: non_injective_components == 0,
        non_injective_components,
        all_homs_injective: approx.homs.iter().all(|h| {
            let mut s = h.clone();
            s.sort_unstable();
            s.windows(2).all(|w| w[0] != w[1])
        }),
        branching_vertices,
        certificate_depth: 1,
    }
}
