use std::collections::HashMap;

use super::EdgeLabeledGraph;
use crate::error::{Error, Result};

/// The radius-`r` ball around the identity in the Cayley graph of the free
/// product of `Δ` involutions `α_1..α_Δ`.
///
/// Vertices are reduced words (no letter repeated consecutively) listed in
/// shortlex order: by length, then lexicographically by generator index.
/// Vertex 0 is the empty word. The edge `w -- wα_a` is labeled `a`, which is a
/// proper edge `Δ`-coloring.
#[derive(Clone, Debug)]
pub struct TreeBall {
    delta: usize,
    radius: usize,
    words: Vec<Vec<u8>>,
    parent: Vec<Option<usize>>,
    level_start: Vec<usize>,
    index: HashMap<Vec<u8>, usize>,
    graph: EdgeLabeledGraph,
}

pub fn tree_ball(delta: usize, radius: usize) -> Result<TreeBall> {
    if delta < 3 {
        return Err(Error::DeltaTooSmall { min: 3, got: delta });
    }
    TreeBall::build(delta, radius)
}

impl TreeBall {
    /// Like [`tree_ball`] but also allows `Δ = 2` (a path).
    pub(crate) fn build(delta: usize, radius: usize) -> Result<TreeBall> {
        if delta < 2 || delta > u8::MAX as usize {
            return Err(Error::DeltaTooSmall { min: 2, got: delta });
        }
        let mut words: Vec<Vec<u8>> = vec![Vec::new()];
        let mut parent = vec![None];
        let mut level_start = vec![0];
        let mut edges = Vec::new();
        for _ in 0..radius {
            let (lo, hi) = (*level_start.last().unwrap(), words.len());
            level_start.push(hi);
            for v in lo..hi {
                for a in 1..=delta as u8 {
                    if words[v].last() == Some(&a) {
                        continue;
                    }
                    let mut w = words[v].clone();
                    w.push(a);
                    edges.push((v, words.len(), a as usize));
                    words.push(w);
                    parent.push(Some(v));
                }
            }
        }
        level_start.push(words.len());
        let index = words
            .iter()
            .enumerate()
            .map(|(i, w)| (w.clone(), i))
            .collect();
        let graph = EdgeLabeledGraph::from_edges(words.len(), delta, edges)?;
        Ok(TreeBall {
            delta,
            radius,
            words,
            parent,
            level_start,
            index,
            graph,
        })
    }

    pub fn delta(&self) -> usize {
        self.delta
    }

    pub fn radius(&self) -> usize {
        self.radius
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn root(&self) -> usize {
        0
    }

    pub fn word(&self, v: usize) -> &[u8] {
        &self.words[v]
    }

    pub fn word_string(&self, v: usize) -> String {
        if self.words[v].is_empty() {
            return "e".to_string();
        }
        self.words[v]
            .iter()
            .map(|a| a.to_string())
            .collect::<Vec<_>>()
            .join(".")
    }

    pub fn index_of(&self, word: &[u8]) -> Option<usize> {
        self.index.get(word).copied()
    }

    pub fn parent(&self, v: usize) -> Option<usize> {
        self.parent[v]
    }

    /// Label of the edge to the parent, i.e. the last letter.
    pub fn last_letter(&self, v: usize) -> Option<usize> {
        self.words[v].last().map(|&a| a as usize)
    }

    pub fn first_letter(&self, v: usize) -> Option<usize> {
        self.words[v].first().map(|&a| a as usize)
    }

    pub fn depth_of(&self, v: usize) -> usize {
        self.words[v].len()
    }

    /// Vertices at distance exactly `k` from the root.
    pub fn level(&self, k: usize) -> std::ops::Range<usize> {
        self.level_start[k]..self.level_start[k + 1]
    }

    pub fn child(&self, v: usize, letter: usize) -> Option<usize> {
        let mut w = self.words[v].clone();
        w.push(letter as u8);
        self.index_of(&w)
    }

    /// The reduced word `α_letter · w`, if it lies inside the ball.
    pub fn left_mul(&self, letter: usize, v: usize) -> Option<usize> {
        let w = &self.words[v];
        if w.first() == Some(&(letter as u8)) {
            self.index_of(&w[1..])
        } else {
            let mut x = Vec::with_capacity(w.len() + 1);
            x.push(letter as u8);
            x.extend_from_slice(w);
            self.index_of(&x)
        }
    }

    pub fn graph(&self) -> &EdgeLabeledGraph {
        &self.graph
    }

    /// `1 + Δ((Δ-1)^r - 1)/(Δ-2)`, the closed-form vertex count.
    pub fn expected_len(delta: usize, radius: usize) -> usize {
        if delta == 2 {
            return 1 + 2 * radius;
        }
        1 + delta * ((delta - 1).pow(radius as u32) - 1) / (delta - 2)
    }
}
