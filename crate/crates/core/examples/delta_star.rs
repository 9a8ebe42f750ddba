//! Decides Δ-(*) for a few classical graphs and maps each positive instance
//! into `H_Δ` through its witness.
//!
//! cargo run --example delta_star

use homlab::graph::{h_delta, named_graph, NamedGraph};
use homlab::solve::{chromatic_number, coloring_from_witness, delta_star, theta_hom, verify_hom};

fn main() -> homlab::Result<()> {
    let delta = 3;
    let h = h_delta(delta)?;
    for name in [NamedGraph::Petersen, NamedGraph::Grotzsch, NamedGraph::Chvatal] {
        let g = named_graph(name)?;
        let chi = chromatic_number(&g)?.num_colors;
        match delta_star(&g, delta)? {
            Some(w) => {
                let theta = theta_hom(&g, &w, delta)?;
                let colors = coloring_from_witness(&g, &w, delta)?;
                println!(
                    "{name}: chi {chi}, {delta}-(*) with |R0| = {}, |R1| = {}",
                    w.r0.len(),
                    w.r1.len()
                );
                println!("  theta = {:?} (homomorphism: {})", theta.map, verify_hom(&g, &h.graph, &theta.map));
                println!("  induced coloring = {colors:?}");
            }
            None => println!("{name}: chi {chi}, no {delta}-(*) witness"),
        }
    }
    Ok(())
}
