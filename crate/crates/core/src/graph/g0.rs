use super::{components_of, EdgeLabeledGraph};
use crate::error::{Error, Result};

/// A depth-`n` truncation of the `𝔾₀`-style graph on binary strings.
///
/// `words[v]` is the binary string of vertex `v`, encoded big-endian in the
/// low `depth` bits (so numeric order is lexicographic order).
#[derive(Clone, Debug)]
pub struct G0Truncation {
    pub graph: EdgeLabeledGraph,
    pub depth: usize,
    pub words: Vec<u64>,
}

impl G0Truncation {
    pub fn word_string(&self, v: usize) -> String {
        (0..self.depth)
            .map(|k| {
                if self.words[v] >> (self.depth - 1 - k) & 1 == 1 {
                    '1'
                } else {
                    '0'
                }
            })
            .collect()
    }
}

fn validate(delta: usize, depth: usize, seq: &[(Vec<u8>, usize)]) -> Result<()> {
    if delta < 3 {
        return Err(Error::DeltaTooSmall { min: 3, got: delta });
    }
    if depth > 24 {
        return Err(Error::SizeGuard {
            what: "g0 truncation depth",
            size: depth as u128,
            limit: 24,
        });
    }
    if seq.len() != depth {
        return Err(Error::BadSequence(format!(
            "need one (word, label) pair per level, got {} for depth {depth}",
            seq.len()
        )));
    }
    for (k, (s, l)) in seq.iter().enumerate() {
        if s.len() != k {
            return Err(Error::BadSequence(format!(
                "word at level {k} has length {}",
                s.len()
            )));
        }
        if s.iter().any(|&b| b > 1) {
            return Err(Error::BadSequence(format!("word at level {k} is not binary")));
        }
        if !(1..=delta).contains(l) {
            return Err(Error::LabelOutOfRange { label: *l, delta });
        }
    }
    Ok(())
}

/// All binary strings of length `depth`, with the edges
/// `s_k 0 c -- s_k 1 c` labeled `e(k)` for every level `k` and every suffix
/// `c`, before any restriction.
pub fn g0_unrestricted(
    delta: usize,
    depth: usize,
    seq: &[(Vec<u8>, usize)],
) -> Result<G0Truncation> {
    validate(delta, depth, seq)?;
    let mut edges = Vec::new();
    for (k, (s, label)) in seq.iter().enumerate() {
        let prefix = s.iter().fold(0u64, |acc, &b| acc << 1 | b as u64);
        let tail = depth - k - 1;
        for c in 0..1u64 << tail {
            let zero = (prefix << 1) << tail | c;
            let one = zero | 1 << tail;
            edges.push((zero as usize, one as usize, *label));
        }
    }
    let n = 1usize << depth;
    Ok(G0Truncation {
        graph: EdgeLabeledGraph::from_edges(n, delta, edges)?,
        depth,
        words: (0..n as u64).collect(),
    })
}

/// [`g0_unrestricted`] restricted to the connected components that contain
/// at least one edge of every label in `1..=Δ`.
pub fn g0_truncation(delta: usize, depth: usize, seq: &[(Vec<u8>, usize)]) -> Result<G0Truncation> {
    let full = g0_unrestricted(delta, depth, seq)?;
    let g = &full.graph;
    let comps = components_of(g.vertex_count(), |v| g.graph().neighbors(v).iter().copied());
    let mut keep = Vec::new();
    for comp in comps {
        let mut seen = vec![false; delta];
        for &u in &comp {
            for &v in g.graph().neighbors(u) {
                seen[g.label(u, v).unwrap() - 1] = true;
            }
        }
        if seen.iter().all(|&b| b) {
            keep.extend(comp);
        }
    }
    keep.sort_unstable();
    Ok(G0Truncation {
        graph: g.induced(&keep),
        depth,
        words: keep.iter().map(|&v| full.words[v]).collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn example_seq() -> Vec<(Vec<u8>, usize)> {
        vec![(vec![], 1), (vec![0], 2), (vec![0, 0], 3)]
    }

    #[test]
    fn single_label_restricts_to_empty() {
        let g = g0_truncation(3, 1, &[(vec![], 1)]).unwrap();
        assert_eq!(g.graph.vertex_count(), 0);
    }

    #[test]
    fn depth_three_example() {
        let g = g0_unrestricted(3, 3, &example_seq()).unwrap();
        assert_eq!(g.graph.vertex_count(), 8);
        assert_eq!(g.graph.graph().edge_count(), 7);
        assert!(g.graph.graph().is_acyclic());
        assert_eq!(g.graph.label(0b000, 0b001), Some(3));
        assert_eq!(g.graph.label(0b001, 0b011), Some(2));
        assert_eq!(g.graph.label(0b011, 0b111), Some(1));
        // one component meeting all labels: nothing removed
        let r = g0_truncation(3, 3, &example_seq()).unwrap();
        assert_eq!(r.graph.vertex_count(), 8);
        assert_eq!(r.word_string(3), "011");
    }

    #[test]
    fn rejects_bad_words() {
        let bad = vec![(vec![], 1), (vec![0, 1], 2)];
        assert!(matches!(
            g0_truncation(3, 2, &bad),
            Err(Error::BadSequence(_))
        ));
        let short = vec![(vec![], 1)];
        assert!(g0_truncation(3, 2, &short).is_err());
        let label = vec![(vec![], 4)];
        assert!(matches!(
            g0_truncation(3, 1, &label),
            Err(Error::LabelOutOfRange { .. })
        ));
    }
}
