//! Finite-depth homomorphism graphs over tree balls: the plain graph over
//! `K_3`, and the label-preserving graph over a `𝔾₀` truncation.
//!
//! cargo run --example hom_graph -- 8 3

use homlab::corpus::{dense_g0_sequence, rng};
use homlab::graph::{complete_graph, g0_truncation, Target};
use homlab::homgraph::{analyze, build_hom_approx};

fn main() -> homlab::Result<()> {
    let mut args = std::env::args().skip(1).map(|a| a.parse::<u64>().ok());
    let g0_depth = args.next().flatten().unwrap_or(8) as usize;
    let seed = args.next().flatten().unwrap_or(3);

    let k3 = complete_graph(3);
    let plain = build_hom_approx(3, 1, Target::Plain(&k3), false)?;
    let r = analyze(&plain);
    println!(
        "Hom(B_1, K3): {} vertices, {} edges, degrees {:?}, girth {:?}",
        r.vertices, r.edges, r.degree_histogram, r.shortest_cycle
    );

    let seq = dense_g0_sequence(3, g0_depth, &mut rng(seed));
    for (k, (s, l)) in seq.iter().enumerate() {
        println!("  level {k}: s = {s:?}, label {l}");
    }
    let g = g0_truncation(3, g0_depth, &seq)?;
    println!("g0 truncation: {} vertices, {} edges", g.graph.vertex_count(), g.graph.graph().edge_count());

    let approx = build_hom_approx(3, 2, Target::Labeled(&g.graph), true)?;
    let r = analyze(&approx);
    println!("{}", serde_json::to_string_pretty(&r).expect("report serializes"));

    // a target vertex with two equally labeled edges lets one homomorphism
    // shift to several neighbors at finite depth
    if let Some(c) = r.shortest_cycle {
        println!("shortest cycle {c}; {} branching homomorphisms", r.branching_vertices);
    }
    Ok(())
}
