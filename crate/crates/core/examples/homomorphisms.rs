//! Homomorphism search, exact chromatic number and the edge-labeled
//! chromatic number on small inputs.
//!
//! cargo run --example homomorphisms

use homlab::graph::{complete_graph, cycle_graph, named_graph, tree_ball, NamedGraph};
use homlab::solve::{chromatic_number, edge_labeled_chromatic_number, find_hom_with_stats};

fn main() -> homlab::Result<()> {
    let petersen = named_graph(NamedGraph::Petersen)?;
    for (name, h) in [("K2", complete_graph(2)), ("K3", complete_graph(3)), ("C5", cycle_graph(5)?)] {
        let (hom, stats) = find_hom_with_stats(&petersen, &h);
        match hom {
            Some(m) => println!("Petersen -> {name}: {:?} ({} nodes)", m.map, stats.nodes_expanded),
            None => println!("Petersen -> {name}: none ({} nodes)", stats.nodes_expanded),
        }
    }

    for name in [NamedGraph::Petersen, NamedGraph::Grotzsch, NamedGraph::Chvatal] {
        let c = chromatic_number(&named_graph(name)?)?;
        println!("chi({name}) = {}: {:?}", c.num_colors, c.colors);
    }

    // a tree ball with its generator labels: the least number of classes
    // none of which contains edges of all three labels
    let ball = tree_ball(3, 2)?;
    let c = edge_labeled_chromatic_number(ball.graph())?;
    println!("labeled chi of the radius-2 ball: {}", c.num_colors);
    Ok(())
}
