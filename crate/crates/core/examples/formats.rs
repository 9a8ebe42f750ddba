//! Writes the same graphs as DIMACS, JSON and DOT and reads them back.
//!
//! cargo run --example formats

use homlab::graph::{g0_truncation, named_graph, NamedGraph, TargetGraph};
use homlab::io::{labeled_to_dot, parse_graph, write_dimacs, write_dot, write_labeled_dimacs, GraphJson};

fn main() -> homlab::Result<()> {
    let g = named_graph(NamedGraph::Petersen)?;
    let dimacs = write_dimacs(&g, &["petersen"]);
    print!("{dimacs}");
    assert_eq!(parse_graph(&dimacs)?.plain(), &g);
    println!("{}", GraphJson::from_plain(&g).to_json_string());
    print!("{}", write_dot(&g, None, None));

    let seq = [(vec![], 1), (vec![0], 2), (vec![1, 0], 3)];
    let l = g0_truncation(3, 3, &seq)?.graph;
    let text = write_labeled_dimacs(&l, &["g0 depth 3"]);
    print!("{text}");
    match parse_graph(&text)? {
        TargetGraph::Labeled(back) => assert_eq!(back, l),
        TargetGraph::Plain(_) => unreachable!("labels are kept"),
    }
    println!("{}", GraphJson::from_labeled(&l).to_json_string());
    print!("{}", labeled_to_dot(&l));
    Ok(())
}
