//! Builds `H_Δ`, computes its chromatic number and checks the canonical
//! Δ-(*) witness `R0 = V0 ∪ {†}`, `R1 = V1 ∪ {†}`.
//!
//! cargo run --example hdelta -- 4

use homlab::graph::h_delta;
use homlab::io::GraphJson;
use homlab::solve::{chromatic_number, DeltaStarWitness};

fn main() -> homlab::Result<()> {
    let delta: usize = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(3);
    let h = h_delta(delta)?;
    println!(
        "H_{delta}: {} vertices, {} edges",
        h.graph.vertex_count(),
        h.graph.edge_count()
    );
    for (role, vs) in h.roles() {
        println!("  {role:>6}: {vs:?}");
    }

    let c = chromatic_number(&h.graph)?;
    println!("chi = {} (2*delta - 2 = {})", c.num_colors, 2 * delta - 2);

    let (r0, r1) = h.canonical_r0_r1();
    let w = DeltaStarWitness::from_sets(&h.graph, delta, &r0, &r1)?;
    println!("witness R0 = {:?}, R1 = {:?}", w.r0, w.r1);
    println!("c0 = {:?}", w.c0);
    println!("c1 = {:?}", w.c1);

    let json = GraphJson::from_plain(&h.graph).with_roles(h.roles());
    println!("{}", json.to_json_string());
    Ok(())
}
