//! Exact geometric checks that are independent of the poset combinatorics:
//! edge adjacency by linear feasibility, facet counting by affine rank, and
//! volume by counting lattice points in dilations.
//!
//! Everything here is exact. Rationals are arbitrary precision and lattice
//! counting uses checked integer arithmetic.

mod edge;
mod ehrhart;
mod facets;
pub mod rational;
pub mod simplex;

pub use edge::{geometric_edges, is_geometric_edge, is_geometric_edge_with};
pub use ehrhart::{
    lattice_points_in_dilation, lattice_points_in_dilation_with, normalized_volume,
    normalized_volume_with,
};
pub use facets::{count_facets, count_facets_with};
pub use rational::RationalVector;
pub use simplex::{FeasibilityProblem, Relation};

/// Default cap on the number of vertices handed to edge and facet tests.
pub const DEFAULT_VERTEX_GUARD: usize = 512;

/// Default cap on the number of grid points a single dilation count visits.
pub const DEFAULT_ENUMERATION_BUDGET: u128 = 50_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleConfig {
    pub vertex_guard: usize,
    pub enumeration_budget: u128,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            vertex_guard: DEFAULT_VERTEX_GUARD,
            enumeration_budget: DEFAULT_ENUMERATION_BUDGET,
        }
    }
}

impl OracleConfig {
    pub(crate) fn check_vertices(&self, n: usize) -> crate::Result<()> {
        if n > self.vertex_guard {
            return Err(crate::Error::Size {
                what: "vertex count",
                got: n as u128,
                limit: self.vertex_guard as u128,
            });
        }
        Ok(())
    }
}
