//! Decision and witness procedures: homomorphisms, chromatic numbers,
//! property Δ-(*) and its explicit homomorphism into `H_Δ`, anti-game
//! labelings, sinkless orientations and edge grabbing.
//!
//! Every procedure is exact and deterministic. Witnesses are re-verified
//! before they are returned in debug builds.

mod coloring;
mod delta_star;
mod hom;
mod orientation;
pub(crate) mod search;

pub use coloring::{
    chromatic_number, chromatic_number_with, edge_labeled_chromatic_number,
    edge_labeled_chromatic_number_with, greedy_clique, hedetniemi_gap, hedetniemi_gap_with,
    is_edge_labeled_coloring, is_proper_coloring, Coloring, HedetniemiGap,
};
pub use delta_star::{coloring_from_witness, delta_star, delta_star_with, theta_hom, DeltaStarWitness};
pub use hom::{
    find_hom, find_hom_labeled, find_hom_labeled_with_stats, find_hom_with_stats, verify_hom,
    verify_labeled_hom, Homomorphism,
};
pub use orientation::{
    check_anti_game, edge_grabbing_from_orientation, sinkless_orientation, AntiGameLabeling,
    Orientation,
};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest input accepted by the chromatic-number procedures without override.
pub const CHROMATIC_MAX_N: usize = 64;
/// Largest input accepted by the Δ-(*) search without override.
pub const DELTA_STAR_MAX_N: usize = 24;

/// Whether exponential procedures enforce their size limits.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Guard {
    #[default]
    Enforce,
    Override,
}

impl Guard {
    pub(crate) fn check(self, what: &'static str, size: usize, limit: usize) -> Result<()> {
        self.check_wide(what, size as u128, limit as u128)
    }

    pub(crate) fn check_wide(self, what: &'static str, size: u128, limit: u128) -> Result<()> {
        if self == Guard::Enforce && size > limit {
            return Err(Error::SizeGuard { what, size, limit });
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchStats {
    pub nodes_expanded: u64,
}

impl SearchStats {
    pub(crate) fn nodes(nodes_expanded: u64) -> Self {
        SearchStats { nodes_expanded }
    }
}
