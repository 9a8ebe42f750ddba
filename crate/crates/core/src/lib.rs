//! Finite graph-homomorphism workbench.
//!
//! * [`graph`]: finite and edge-labeled graphs, `H_Δ`, categorical products,
//!   balls of the Δ-regular tree, `𝔾₀` truncations and a few named graphs.
//! * [`solve`]: exact homomorphism, coloring and Δ-(*) solvers, the explicit
//!   map into `H_Δ`, and the sinkless orientation → edge grabbing chain.
//! * [`homgraph`]: finite-depth homomorphism graphs over tree balls.
//! * [`games`]: finite-depth Marks games, minimax solving and strategy
//!   composition.
//! * [`suites`]: the claim-checking harness behind `homlab verify`.
//!
//! ```
//! use homlab::graph::{h_delta, named_graph, NamedGraph};
//! use homlab::solve::{chromatic_number, delta_star, theta_hom, verify_hom};
//!
//! let h = h_delta(3)?;
//! assert_eq!(chromatic_number(&h.graph)?.num_colors, 4);
//!
//! let g = named_graph(NamedGraph::Grotzsch)?;
//! let w = delta_star(&g, 3)?.expect("the Grötzsch graph has 3-(*)");
//! let theta = theta_hom(&g, &w, 3)?;
//! assert!(verify_hom(&g, &h.graph, &theta.map));
//! # Ok::<(), homlab::Error>(())
//! ```

pub mod bitset;
pub mod corpus;
pub mod error;
pub mod games;
pub mod graph;
pub mod homgraph;
pub mod io;
pub mod solve;
pub mod suites;

pub use error::{Error, Result};
