//! Acceptance criteria 1–9. Runs without the libtest harness so that every
//! criterion prints exactly one PASS/FAIL line; exits nonzero if any fails.

mod common;

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::Instant;

use rand::Rng;

use homlab::corpus::{self, dense_g0_sequence, random_graph, random_label_table, random_regular_colored, raw_graphs};
use homlab::games::{game_winner, Player, GameSpec};
use homlab::graph::{g0_truncation, h_delta, named_graph, tree_ball, FiniteGraph, NamedGraph, Target};
use homlab::homgraph::{analyze, build_hom_approx};
use homlab::solve::{
    chromatic_number, delta_star, edge_grabbing_from_orientation, find_hom, hedetniemi_gap,
    sinkless_orientation, theta_hom, DeltaStarWitness,
};

use common::*;

type Criterion = (&'static str, fn() -> Outcome);

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

fn edges_of(g: &FiniteGraph) -> Vec<(usize, usize)> {
    g.edges().collect()
}

fn chi_hdelta() -> Outcome {
    let mut got = Vec::new();
    let mut ok = true;
    for delta in [3, 4, 5] {
        let h = h_delta(delta).unwrap();
        let c = chromatic_number(&h.graph).unwrap();
        let e = edges_of(&h.graph);
        let certified = is_proper(&e, &c.colors)
            && c.colors.iter().all(|&x| x < c.num_colors)
            && !k_colorable(h.graph.vertex_count(), &e, c.num_colors - 1);
        ok &= certified && c.num_colors == 2 * delta - 2 && h.graph.vertex_count() == (delta - 1) * (delta + 1) + 1;
        got.push(c.num_colors);
    }
    outcome(ok, format!("chi(H_3), chi(H_4), chi(H_5) = {got:?}, expected [4, 6, 8]"))
}

fn canonical_witness() -> Outcome {
    let mut ok = true;
    for delta in [3, 4, 5] {
        let h = h_delta(delta).unwrap();
        let (r0, r1) = h.canonical_r0_r1();
        let w = DeltaStarWitness::from_sets(&h.graph, delta, &r0, &r1);
        ok &= w.as_ref().is_ok_and(|w| w.verify(&h.graph, delta).is_ok());
        let n = h.graph.vertex_count();
        let e = edges_of(&h.graph);
        ok &= e.iter().all(|&(u, v)| !(r0.contains(&u) && r1.contains(&v) || r1.contains(&u) && r0.contains(&v)));
        for r in [&r0, &r1] {
            let keep: Vec<usize> = (0..n).filter(|v| !r.contains(v)).collect();
            let sub = h.graph.induced(&keep);
            ok &= k_colorable(sub.vertex_count(), &edges_of(&sub), delta - 1);
        }
    }
    outcome(ok, "R0 = V0 + dagger, R1 = V1 + dagger accepted for delta 3, 4, 5")
}

fn delta_star_equivalence() -> Outcome {
    let h3 = h_delta(3).unwrap();
    let target = adjacency(h3.graph.vertex_count(), &edges_of(&h3.graph));
    let (mut checked, mut mismatches, mut bad_witness) = (0, 0, 0);
    for n in 1..=6 {
        for g in raw_graphs(n) {
            checked += 1;
            let star = delta_star(&g, 3).unwrap();
            let hom = find_hom(&g, &h3.graph);
            if star.is_some() != hom.is_some() {
                mismatches += 1;
            }
            if let Some(hm) = hom {
                bad_witness += usize::from(!is_hom(&edges_of(&g), &target, &hm.map));
            }
            if let Some(w) = star {
                bad_witness += usize::from(w.verify(&g, 3).is_err());
            }
        }
    }
    outcome(
        mismatches == 0 && bad_witness == 0,
        format!("{checked} raw graphs on <= 6 vertices, {mismatches} mismatches, {bad_witness} invalid witnesses"),
    )
}

fn sandwich() -> Outcome {
    let mut rng = corpus::rng(4);
    let (mut violations, mut lower_checked, mut upper_checked) = (0, 0, 0);
    for _ in 0..200 {
        let n = rng.gen_range(1..=10);
        let p = rng.gen_range(0.1..0.9);
        let g = random_graph(n, p, &mut rng);
        let chi = chromatic(n, &edges_of(&g));
        violations += usize::from(chromatic_number(&g).unwrap().num_colors != chi);
        for delta in [3, 4] {
            let star = delta_star(&g, delta).unwrap();
            if chi <= delta {
                lower_checked += 1;
                violations += usize::from(star.is_none());
            }
            if let Some(w) = star {
                upper_checked += 1;
                violations += usize::from(w.verify(&g, delta).is_err() || chi > 2 * delta - 2);
            }
        }
    }
    outcome(
        violations == 0,
        format!("200 graphs x delta {{3, 4}}: {lower_checked} lower and {upper_checked} upper checks, {violations} violations"),
    )
}

fn named_graphs() -> Outcome {
    let h3 = h_delta(3).unwrap();
    let target = adjacency(h3.graph.vertex_count(), &edges_of(&h3.graph));
    let mut ok = true;
    for name in [NamedGraph::Chvatal, NamedGraph::Grotzsch] {
        let g = named_graph(name).unwrap();
        ok &= match delta_star(&g, 3).unwrap() {
            Some(w) => {
                w.verify(&g, 3).is_ok()
                    && theta_hom(&g, &w, 3).is_ok_and(|t| is_hom(&edges_of(&g), &target, &t.map))
            }
            None => false,
        };
    }
    outcome(ok, "Chvatal and Grotzsch: 3-(*) witness and verified map into H_3")
}

fn homgraph_shadow() -> Outcome {
    let mut rng = corpus::rng(6);
    let (mut nonempty, mut with_edges, mut cyc, mut root_edge, mut root_inj) = (0, 0, 0, 0, 0);
    let (mut repeated, mut failing_repeated) = (0, 0);
    let count = 24;
    for _ in 0..count {
        let depth = rng.gen_range(3..=8);
        let seq = dense_g0_sequence(3, depth, &mut rng);
        let g = g0_truncation(3, depth, &seq).unwrap().graph;
        let a = build_hom_approx(3, 2, Target::Labeled(&g), true).unwrap();
        let r = analyze(&a);
        let n = a.vertex_count();
        let edges: Vec<(usize, usize)> = a.edges.iter().map(|e| (e.a, e.b)).collect();
        nonempty += usize::from(n > 0);
        with_edges += usize::from(!edges.is_empty());
        let girth = multigraph_girth(n, &edges);
        assert_eq!(girth, r.shortest_cycle, "girth oracle disagrees with the library");
        cyc += usize::from(girth.is_some_and(|c| c <= 4));
        let roots = a.root_map();
        root_edge += usize::from(
            !a.edges
                .iter()
                .all(|e| g.label(roots[e.a], roots[e.b]) == Some(e.generator)),
        );
        let comp = components(n, &edges);
        let mut seen = BTreeSet::new();
        let injective = (0..n).all(|h| seen.insert((comp[h], roots[h])));
        root_inj += usize::from(!injective);
        // a vertex with two equally labeled edges
        let rep = (0..g.vertex_count()).any(|v| {
            let labels: Vec<usize> = g.graph().neighbors(v).iter().map(|&w| g.label(v, w).unwrap()).collect();
            labels.iter().collect::<BTreeSet<_>>().len() < labels.len()
        });
        repeated += usize::from(rep);
        failing_repeated += usize::from(rep && (!injective || girth.is_some_and(|c| c <= 4)));
    }
    outcome(
        cyc + root_edge + root_inj == 0,
        format!(
            "{count} targets ({nonempty} with homomorphisms, {with_edges} with edges): \
             {cyc} with a cycle of length <= 4, {root_edge} non-edge-preserving, {root_inj} non-injective; \
             {repeated} targets repeat a label at some vertex, {failing_repeated} of the failures among them"
        ),
    )
}

fn games() -> Outcome {
    let delta = 3;
    let mut rng = corpus::rng(7);
    let (mut games_checked, mut mismatch, mut no_bob, mut mono) = (0usize, 0, 0, 0);
    let targets: Vec<FiniteGraph> = (1..=3).flat_map(raw_graphs).collect();
    for depth in 1..=2 {
        let ball = tree_ball(delta, depth).unwrap();
        let words = reduced_words(delta, depth);
        assert_eq!(words.len(), ball.len());
        assert!((0..ball.len()).all(|v| ball.word(v) == words[v].as_slice()));
        for target in &targets {
            let t = Target::Plain(target);
            let n = target.vertex_count();
            let adj = adjacency(n, &edges_of(target));
            for _ in 0..100 {
                let table = random_label_table(&ball, t, delta, &mut rng);
                for x in (0..n).filter(|&x| target.degree(x) > 0) {
                    let homs = tree_homs(&words, n, &|u, v, _| adj[u][v], x);
                    let refs: Vec<&Vec<usize>> = homs.iter().collect();
                    let mut bob_somewhere = false;
                    for i in 1..=delta {
                        let turns = game_turns(&words, depth, i);
                        let mut alice_masks = Vec::new();
                        for mask in 0u32..1 << delta {
                            let payoff: BTreeSet<usize> = (1..=delta).filter(|c| mask >> (c - 1) & 1 == 1).collect();
                            let oracle = alice_wins(&refs, &turns, 0, &|h| !payoff.contains(&table.table[h]));
                            let spec = GameSpec {
                                target: t,
                                delta,
                                x,
                                i,
                                payoff: &payoff,
                                depth,
                                labeling: &table,
                            };
                            let got = game_winner(&spec).unwrap() == Player::Alice;
                            games_checked += 1;
                            mismatch += usize::from(got != oracle);
                            if oracle {
                                alice_masks.push(mask);
                            }
                            if mask == 1 << (i - 1) && !oracle {
                                bob_somewhere = true;
                            }
                        }
                        for &big in &alice_masks {
                            for small in 0u32..1 << delta {
                                if small & big == small && !alice_masks.contains(&small) {
                                    mono += 1;
                                }
                            }
                        }
                    }
                    no_bob += usize::from(!bob_somewhere);
                }
            }
        }
    }
    outcome(
        mismatch + no_bob + mono == 0,
        format!(
            "{games_checked} games: {mismatch} oracle mismatches, {no_bob} roots without a Bob win, {mono} monotonicity violations"
        ),
    )
}

fn orientation_chain() -> Outcome {
    let mut rng = corpus::rng(8);
    let (mut checked, mut bad) = (0, 0);
    while checked < 50 {
        let n = 2 * rng.gen_range(2..=10);
        let Some(g) = random_regular_colored(n, 3, &mut rng) else {
            continue;
        };
        checked += 1;
        let Some(o) = sinkless_orientation(g.graph()) else {
            bad += 1;
            continue;
        };
        let mut out = vec![0; n];
        let mut arcs: Vec<(usize, usize)> = o.arcs.iter().map(|&(u, v)| (u.min(v), u.max(v))).collect();
        for &(u, _) in &o.arcs {
            out[u] += 1;
        }
        arcs.sort_unstable();
        let mut edges = edges_of(g.graph());
        edges.sort_unstable();
        let sinkless = arcs == edges && out.iter().all(|&d| d > 0);
        let anti = edge_grabbing_from_orientation(&g, &o).is_ok_and(|l| {
            l.labels.len() == n
                && g.labeled_edges()
                    .all(|(u, v, c)| !(l.labels[u] == c && l.labels[v] == c))
        });
        bad += usize::from(!(sinkless && anti));
    }
    outcome(bad == 0, format!("{checked} cubic edge-colored graphs, {bad} violations"))
}

fn hedetniemi() -> Outcome {
    let mut rng = corpus::rng(9);
    let mut bad = 0;
    for _ in 0..100 {
        let g = random_graph(rng.gen_range(1..=8), rng.gen_range(0.2..0.9), &mut rng);
        let h = random_graph(rng.gen_range(1..=8), rng.gen_range(0.2..0.9), &mut rng);
        let gap = hedetniemi_gap(&g, &h).unwrap();
        let (cg, ch) = (
            chromatic(g.vertex_count(), &edges_of(&g)),
            chromatic(h.vertex_count(), &edges_of(&h)),
        );
        bad += usize::from(gap.chi_g != cg || gap.chi_h != ch || gap.chi_product > cg.min(ch));
    }
    outcome(bad == 0, format!("100 pairs, {bad} violations"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("chromatic number of H_delta", chi_hdelta),
        ("canonical delta-(*) witness", canonical_witness),
        ("delta-(*) iff homomorphism into H_3", delta_star_equivalence),
        ("sandwich", sandwich),
        ("Chvatal and Grotzsch", named_graphs),
        ("label-preserving homomorphism graph shadow", homgraph_shadow),
        ("games", games),
        ("orientation chain", orientation_chain),
        ("Hedetniemi bound", hedetniemi),
    ];
    let filter: Vec<String> = std::env::args().skip(1).filter(|a| !a.starts_with('-')).collect();
    let mut failed = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        let id = (k + 1).to_string();
        if !filter.is_empty() && !filter.contains(&id) {
            continue;
        }
        let start = Instant::now();
        let o = run();
        println!(
            "{} criterion {id} ({name}): {} [{:.1}s]",
            if o.pass { "PASS" } else { "FAIL" },
            o.detail,
            start.elapsed().as_secs_f64()
        );
        failed += usize::from(!o.pass);
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
