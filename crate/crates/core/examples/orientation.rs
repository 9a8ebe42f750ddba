//! Sinkless orientation of a cubic properly edge-colored graph, turned into
//! edge grabbing and an anti-game labeling.
//!
//! cargo run --example orientation -- 12 5

use homlab::corpus::{random_regular_colored, rng};
use homlab::solve::{check_anti_game, edge_grabbing_from_orientation, sinkless_orientation};

fn main() -> homlab::Result<()> {
    let mut args = std::env::args().skip(1).map(|a| a.parse::<u64>().ok());
    let n = args.next().flatten().unwrap_or(12) as usize;
    let seed = args.next().flatten().unwrap_or(5);

    let Some(g) = random_regular_colored(n, 3, &mut rng(seed)) else {
        println!("no cubic edge-colored graph on {n} vertices");
        return Ok(());
    };
    for (u, v, c) in g.labeled_edges() {
        println!("  {u} -- {v} color {c}");
    }
    let o = sinkless_orientation(g.graph()).expect("regular graphs of degree >= 2 have one");
    println!("arcs {:?}", o.arcs);
    let l = edge_grabbing_from_orientation(&g, &o)?;
    println!("grabbed colors {:?}", l.labels);
    println!("anti-game labeling: {}", check_anti_game(&g, &l.labels));
    Ok(())
}
