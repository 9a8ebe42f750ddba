//! Compares `χ(G × H)` with `min(χ(G), χ(H))` on seeded random pairs.
//!
//! cargo run --example hedetniemi -- 20 7

use rand::Rng;

use homlab::corpus::{random_graph, rng};
use homlab::graph::{categorical_product, named_graph, NamedGraph};
use homlab::solve::hedetniemi_gap;

fn main() -> homlab::Result<()> {
    let mut args = std::env::args().skip(1).map(|a| a.parse::<u64>().ok());
    let count = args.next().flatten().unwrap_or(20);
    let seed = args.next().flatten().unwrap_or(0);

    let g = named_graph(NamedGraph::Grotzsch)?;
    let p = named_graph(NamedGraph::Petersen)?;
    let prod = categorical_product(&g, &p);
    println!("Grotzsch x Petersen: {} vertices, {} edges", prod.vertex_count(), prod.edge_count());

    let mut r = rng(seed);
    let mut tight = 0;
    for k in 0..count {
        let g = random_graph(r.gen_range(2..=8), r.gen_range(0.3..0.9), &mut r);
        let h = random_graph(r.gen_range(2..=8), r.gen_range(0.3..0.9), &mut r);
        let gap = hedetniemi_gap(&g, &h)?;
        tight += usize::from(gap.gap() == 0);
        println!(
            "pair {k:>3}: chi(G) {} chi(H) {} chi(GxH) {} gap {}",
            gap.chi_g,
            gap.chi_h,
            gap.chi_product,
            gap.gap()
        );
    }
    println!("{tight}/{count} pairs with chi(GxH) = min(chi(G), chi(H))");
    Ok(())
}
