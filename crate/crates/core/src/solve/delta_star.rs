use serde::{Deserialize, Serialize};

use super::coloring::{greedy_clique, is_proper_coloring, k_coloring};
use super::hom::{verify_hom, Homomorphism};
use super::{Guard, DELTA_STAR_MAX_N};
use crate::error::{Error, Result};
use crate::graph::{h_delta, FiniteGraph};

/// Sets `R0`, `R1` with no edge between them, plus proper `(Δ-1)`-colorings
/// of `V ∖ R0` and `V ∖ R1` (colors `0..Δ-1`, `None` on the removed set).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DeltaStarWitness {
    pub r0: Vec<usize>,
    pub r1: Vec<usize>,
    pub c0: Vec<Option<usize>>,
    pub c1: Vec<Option<usize>>,
}

impl DeltaStarWitness {
    /// Completes `(R0, R1)` into a witness by coloring both complements, or
    /// explains why that is impossible.
    pub fn from_sets(h: &FiniteGraph, delta: usize, r0: &[usize], r1: &[usize]) -> Result<Self> {
        let c0 = color_complement(h, delta, r0)
            .ok_or_else(|| Error::InvalidWitness(format!("V \\ R0 is not {}-colorable", delta - 1)))?;
        let c1 = color_complement(h, delta, r1)
            .ok_or_else(|| Error::InvalidWitness(format!("V \\ R1 is not {}-colorable", delta - 1)))?;
        let mut r0 = r0.to_vec();
        let mut r1 = r1.to_vec();
        r0.sort_unstable();
        r0.dedup();
        r1.sort_unstable();
        r1.dedup();
        let w = DeltaStarWitness { r0, r1, c0, c1 };
        w.verify(h, delta)?;
        Ok(w)
    }

    pub fn verify(&self, h: &FiniteGraph, delta: usize) -> Result<()> {
        let n = h.vertex_count();
        if delta < 3 {
            return Err(Error::DeltaTooSmall { min: 3, got: delta });
        }
        let in0 = membership(n, &self.r0)?;
        let in1 = membership(n, &self.r1)?;
        for &u in &self.r0 {
            if let Some(&v) = h.neighbors(u).iter().find(|&&v| in1[v]) {
                return Err(Error::InvalidWitness(format!("edge ({u}, {v}) joins R0 and R1")));
            }
        }
        // forced by the previous check; asserted separately for the Θ map
        for (u, v) in h.edges() {
            if in0[u] && in1[u] && in0[v] && in1[v] {
                return Err(Error::InvalidWitness(format!("R0 ∩ R1 spans edge ({u}, {v})")));
            }
        }
        for (name, inside, colors) in [("c0", &in0, &self.c0), ("c1", &in1, &self.c1)] {
            if colors.len() != n {
                return Err(Error::InvalidWitness(format!("{name} has length {}", colors.len())));
            }
            for v in 0..n {
                match colors[v] {
                    None if !inside[v] => {
                        return Err(Error::InvalidWitness(format!("{name} misses vertex {v}")))
                    }
                    Some(_) if inside[v] => {
                        return Err(Error::InvalidWitness(format!("{name} colors removed vertex {v}")))
                    }
                    Some(c) if c >= delta - 1 => {
                        return Err(Error::InvalidWitness(format!("{name} uses color {c} >= Δ-1")))
                    }
                    _ => {}
                }
            }
            for (u, v) in h.edges() {
                if colors[u].is_some() && colors[u] == colors[v] {
                    return Err(Error::InvalidWitness(format!("{name} is improper on ({u}, {v})")));
                }
            }
        }
        Ok(())
    }
}

fn membership(n: usize, set: &[usize]) -> Result<Vec<bool>> {
    let mut inside = vec![false; n];
    for &v in set {
        if v >= n {
            return Err(Error::VertexOutOfRange { vertex: v, n });
        }
        inside[v] = true;
    }
    Ok(inside)
}

fn color_complement(h: &FiniteGraph, delta: usize, removed: &[usize]) -> Option<Vec<Option<usize>>> {
    let n = h.vertex_count();
    let inside = membership(n, removed).ok()?;
    let rest: Vec<usize> = (0..n).filter(|&v| !inside[v]).collect();
    let sub = h.induced(&rest);
    let clique = greedy_clique(&sub);
    let colors = k_coloring(&sub, delta - 1, &clique).0?;
    let mut out = vec![None; n];
    for (k, &v) in rest.iter().enumerate() {
        out[v] = Some(colors[k]);
    }
    Some(out)
}

/// Decides property Δ-(*) exactly.
pub fn delta_star(h: &FiniteGraph, delta: usize) -> Result<Option<DeltaStarWitness>> {
    delta_star_with(h, delta, Guard::Enforce)
}

/// If `χ(h) <= Δ` any color class serves as `R0 = R1`. Otherwise `R0` runs
/// over all subsets with `(Δ-1)`-colorable complement, and `R1` is taken as
/// the largest set with no edge to `R0` (its non-neighbors), which only
/// shrinks `V ∖ R1`.
pub fn delta_star_with(h: &FiniteGraph, delta: usize, guard: Guard) -> Result<Option<DeltaStarWitness>> {
    if delta < 3 {
        return Err(Error::DeltaTooSmall { min: 3, got: delta });
    }
    let n = h.vertex_count();
    guard.check("delta-star input", n, DELTA_STAR_MAX_N)?;
    if n > 32 {
        return Err(Error::Precondition("delta-star search supports at most 32 vertices".into()));
    }

    let clique = greedy_clique(h);
    if let (Some(colors), _) = k_coloring(h, delta, &clique) {
        let class: Vec<usize> = (0..n).filter(|&v| colors[v] == 0).collect();
        let w = DeltaStarWitness::from_sets(h, delta, &class, &class)?;
        return Ok(Some(w));
    }

    let nbr: Vec<u64> = (0..n)
        .map(|v| h.neighbors(v).iter().fold(0u64, |m, &w| m | 1 << w))
        .collect();
    let all = (1u64 << n) - 1;
    // colorable[mask of V] for the induced subgraph; 0 unknown, 1 no, 2 yes
    let mut memo = vec![0u8; 1usize << n];
    let mut colorable = |mask: u64| -> bool {
        let slot = &mut memo[mask as usize];
        if *slot == 0 {
            let verts: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
            let sub = h.induced(&verts);
            let clique = greedy_clique(&sub);
            *slot = if k_coloring(&sub, delta - 1, &clique).0.is_some() { 2 } else { 1 };
        }
        *slot == 2
    };
    for r0 in 0..=all {
        if !colorable(all & !r0) {
            continue;
        }
        let r1 = (0..n)
            .filter(|&v| nbr[v] & r0 == 0)
            .fold(0u64, |m, v| m | 1 << v);
        if colorable(all & !r1) {
            let r0v: Vec<usize> = (0..n).filter(|&v| r0 >> v & 1 == 1).collect();
            let r1v: Vec<usize> = (0..n).filter(|&v| r1 >> v & 1 == 1).collect();
            return DeltaStarWitness::from_sets(h, delta, &r0v, &r1v).map(Some);
        }
    }
    Ok(None)
}

/// The explicit homomorphism `Θ: h → H_Δ` built from a Δ-(*) witness:
/// `R0 ∩ R1 ↦ †`, `R1 ∖ R0 ↦ V0[c0]`, `R0 ∖ R1 ↦ V1[c1]`, and everything
/// else to `P[c0][c1]`.
pub fn theta_hom(h: &FiniteGraph, w: &DeltaStarWitness, delta: usize) -> Result<Homomorphism> {
    w.verify(h, delta)?;
    let target = h_delta(delta)?;
    let n = h.vertex_count();
    let in0 = membership(n, &w.r0)?;
    let in1 = membership(n, &w.r1)?;
    let map: Vec<usize> = (0..n)
        .map(|v| match (in0[v], in1[v]) {
            (true, true) => target.dagger,
            (false, true) => target.v0[w.c0[v].unwrap()],
            (true, false) => target.v1[w.c1[v].unwrap()],
            (false, false) => target.p[w.c0[v].unwrap()][w.c1[v].unwrap()],
        })
        .collect();
    if !verify_hom(h, &target.graph, &map) {
        return Err(Error::InvalidWitness("Θ is not edge-preserving".into()));
    }
    Ok(Homomorphism { map })
}

/// Checks `χ(h) <= 2Δ - 2` constructively from a witness: `R0` is
/// `(Δ-1)`-colorable because `R0 ∖ R1` inherits `c1` and `R0 ∩ R1` is
/// independent with no edges into `R0`.
pub fn coloring_from_witness(h: &FiniteGraph, w: &DeltaStarWitness, delta: usize) -> Result<Vec<usize>> {
    w.verify(h, delta)?;
    let k = delta - 1;
    let in1 = membership(h.vertex_count(), &w.r1)?;
    let colors: Vec<usize> = (0..h.vertex_count())
        .map(|v| match (w.c0[v], in1[v]) {
            (Some(c), _) => c,
            (None, false) => k + w.c1[v].unwrap(),
            (None, true) => k,
        })
        .collect();
    debug_assert!(is_proper_coloring(h, &colors));
    Ok(colors)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_graph, named_graph, NamedGraph};

    #[test]
    fn complete_graph_delta() {
        for delta in 3..=5 {
            let w = delta_star(&complete_graph(delta), delta).unwrap().unwrap();
            assert_eq!(w.r0.len(), 1);
            assert_eq!(w.r0, w.r1);
            assert!(delta_star(&complete_graph(delta + 1), delta).unwrap().is_none());
        }
    }

    #[test]
    fn h_delta_canonical_witness() {
        for delta in 3..=5 {
            let h = h_delta(delta).unwrap();
            let (r0, r1) = h.canonical_r0_r1();
            let w = DeltaStarWitness::from_sets(&h.graph, delta, &r0, &r1).unwrap();
            w.verify(&h.graph, delta).unwrap();
        }
        let h3 = h_delta(3).unwrap();
        let found = delta_star(&h3.graph, 3).unwrap().unwrap();
        found.verify(&h3.graph, 3).unwrap();
    }

    #[test]
    fn verifier_rejects_edges_between_sets() {
        let g = complete_graph(3);
        let w = DeltaStarWitness {
            r0: vec![0],
            r1: vec![1],
            c0: vec![None, Some(0), Some(1)],
            c1: vec![Some(0), None, Some(1)],
        };
        assert!(matches!(w.verify(&g, 3), Err(Error::InvalidWitness(_))));
        assert!(theta_hom(&g, &w, 3).is_err());
    }

    #[test]
    fn theta_on_complete_graph() {
        let delta = 4;
        let g = complete_graph(delta);
        let w = DeltaStarWitness::from_sets(&g, delta, &[0], &[0]).unwrap();
        let f = theta_hom(&g, &w, delta).unwrap();
        let hd = h_delta(delta).unwrap();
        assert_eq!(f.map[0], hd.dagger);
        for v in 1..delta {
            let c = w.c0[v].unwrap();
            assert_eq!(w.c1[v], Some(c));
            assert_eq!(f.map[v], hd.p[c][c]);
        }
    }

    #[test]
    fn theta_on_single_edge() {
        let g = complete_graph(2);
        let w = DeltaStarWitness::from_sets(&g, 3, &[], &[]).unwrap();
        let f = theta_hom(&g, &w, 3).unwrap();
        let hd = h_delta(3).unwrap();
        let p: Vec<usize> = hd.p.iter().flatten().copied().collect();
        assert!(p.contains(&f.map[0]) && p.contains(&f.map[1]));
        assert_ne!(f.map[0], f.map[1]);
    }

    #[test]
    fn grotzsch_and_chvatal() {
        for name in [NamedGraph::Grotzsch, NamedGraph::Chvatal] {
            let g = named_graph(name).unwrap();
            let w = delta_star(&g, 3).unwrap().expect("3-(*) holds");
            let f = theta_hom(&g, &w, 3).unwrap();
            assert!(verify_hom(&g, &h_delta(3).unwrap().graph, &f.map));
            let colors = coloring_from_witness(&g, &w, 3).unwrap();
            assert!(colors.iter().all(|&c| c < 4));
        }
    }

    #[test]
    fn guard_and_delta() {
        assert!(matches!(
            delta_star(&complete_graph(25), 3),
            Err(Error::SizeGuard { .. })
        ));
        assert!(matches!(
            delta_star(&complete_graph(2), 2),
            Err(Error::DeltaTooSmall { .. })
        ));
    }
}
