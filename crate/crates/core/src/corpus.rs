//! Seeded generators for test corpora.
//!
//! Every generator draws from [`rng`], a ChaCha8 stream seeded from a `u64`,
//! so a seed fixes the corpus on every platform.

use rand::seq::SliceRandom;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::graph::{EdgeLabeledGraph, FiniteGraph, Target, TreeBall};
use crate::games::LabelTable;
use crate::homgraph::enumerate_ball_homs;

pub type CorpusRng = ChaCha8Rng;

pub fn rng(seed: u64) -> CorpusRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// An Erdős–Rényi graph `G(n, p)`.
pub fn random_graph(n: usize, p: f64, rng: &mut CorpusRng) -> FiniteGraph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    FiniteGraph::from_edges(n, edges).expect("valid edges")
}

/// Every labeled graph on `n` vertices, one per subset of the `n(n-1)/2`
/// possible edges (no isomorphism reduction).
pub fn raw_graphs(n: usize) -> impl Iterator<Item = FiniteGraph> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let m = pairs.len();
    assert!(m < 64, "too many vertex pairs for raw enumeration");
    (0..1u64 << m).map(move |mask| {
        FiniteGraph::from_edges(
            n,
            (0..m).filter(|b| mask >> b & 1 == 1).map(|b| pairs[b]),
        )
        .expect("valid edges")
    })
}

/// A `Δ`-regular graph on `n` vertices, properly edge-colored by `Δ` pairwise
/// disjoint uniform perfect matchings (color `c` is the `c`-th matching).
/// Returns `None` for odd `n`, `n ≤ Δ`, or if rejection sampling gives up.
pub fn random_regular_colored(n: usize, delta: usize, rng: &mut CorpusRng) -> Option<EdgeLabeledGraph> {
    if n % 2 == 1 || n <= delta {
        return None;
    }
    'attempt: for _ in 0..1000 {
        let mut used = FiniteGraph::edgeless(n);
        let mut edges = Vec::with_capacity(n * delta / 2);
        for color in 1..=delta {
            let matching = (0..200).find_map(|_| {
                let mut perm: Vec<usize> = (0..n).collect();
                perm.shuffle(rng);
                let pairs: Vec<(usize, usize)> = perm.chunks(2).map(|c| (c[0], c[1])).collect();
                pairs.iter().all(|&(u, v)| !used.has_edge(u, v)).then_some(pairs)
            });
            let Some(matching) = matching else {
                continue 'attempt;
            };
            let all: Vec<(usize, usize)> = used.edges().chain(matching.iter().copied()).collect();
            used = FiniteGraph::from_edges(n, all).expect("valid edges");
            edges.extend(matching.into_iter().map(|(u, v)| (u, v, color)));
        }
        return Some(EdgeLabeledGraph::from_edges(n, delta, edges).expect("valid labels"));
    }
    None
}

/// A `𝔾₀` sequence of length `depth`: uniform binary words `s_k` of length
/// `k` and labels `e(k)` in which every label `1..=Δ` occurs (`depth ≥ Δ`).
pub fn random_g0_sequence(delta: usize, depth: usize, rng: &mut CorpusRng) -> Vec<(Vec<u8>, usize)> {
    assert!(depth >= delta, "need depth >= delta so that every label occurs");
    let mut labels: Vec<usize> = (1..=delta).collect();
    labels.extend((delta..depth).map(|_| rng.gen_range(1..=delta)));
    labels.shuffle(rng);
    labels
        .into_iter()
        .enumerate()
        .map(|(k, l)| ((0..k).map(|_| rng.gen_range(0..=1u8)).collect(), l))
        .collect()
}

/// A `𝔾₀` sequence whose words form a chain (`s_k` extends `s_{k-1}` by a
/// uniform bit) and whose labels cycle through `1..=Δ` from a uniform
/// offset. Every window of `Δ` consecutive levels carries every label, so
/// vertices near the chain see all generators.
pub fn dense_g0_sequence(delta: usize, depth: usize, rng: &mut CorpusRng) -> Vec<(Vec<u8>, usize)> {
    let offset = rng.gen_range(0..delta);
    let mut word = Vec::with_capacity(depth);
    let mut out = Vec::with_capacity(depth);
    for k in 0..depth {
        if k > 0 {
            word.push(rng.gen_range(0..=1u8));
        }
        out.push((word.clone(), 1 + (k + offset) % delta));
    }
    out
}

/// A uniform labeling `c: Hom(ball, target) → {1..=codomain}`.
pub fn random_label_table(ball: &TreeBall, target: Target, codomain: usize, rng: &mut CorpusRng) -> LabelTable {
    LabelTable {
        table: enumerate_ball_homs(ball, target, None)
            .into_iter()
            .map(|h| (h, rng.gen_range(1..=codomain)))
            .collect(),
    }
}
