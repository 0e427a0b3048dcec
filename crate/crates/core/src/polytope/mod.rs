//! Combinatorial models of the order polytope `O(P)` and the chain polytope
//! `C(P)`: vertices, 1-skeletons, the edge bijection between them and their
//! defining inequalities.

mod bijection;
mod equivalence;
mod inequality;
mod skeleton;

pub use bijection::{
    bijection_parts, enumerate_omega, enumerate_psi, normalize_antichain_pair, omega_to_psi,
    psi_to_omega, AntichainPair, IdealPair,
};
pub use equivalence::{check_equivalence, EquivalenceReport};
pub use inequality::{h_description, order_h_description_all_relations, Inequality};
pub use skeleton::{
    chain_edge, degree_sequence, order_edge, skeleton, skeleton_with, SkeletonGraph,
    SkeletonJsonError,
};

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::poset::{ElementSet, Poset};

/// Which of the two polytopes of a poset.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Order,
    Chain,
}

impl Kind {
    pub fn as_str(self) -> &'static str {
        match self {
            Kind::Order => "order",
            Kind::Chain => "chain",
        }
    }

    /// Vertex labels: ideals for the order polytope, antichains for the
    /// chain polytope, both in ascending mask order.
    pub fn vertex_sets(self, p: &Poset) -> Vec<ElementSet> {
        match self {
            Kind::Order => p.enumerate_ideals(),
            Kind::Chain => p.enumerate_antichains(),
        }
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// An integer point of `Z^d`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct LatticePoint(pub Vec<i64>);

impl LatticePoint {
    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }
}

/// The 0/1 indicator vector of `w` in `R^d`.
pub fn rho(w: ElementSet, d: usize) -> LatticePoint {
    LatticePoint((0..d).map(|i| i64::from(w.contains(i))).collect())
}

/// Vertices of the polytope of the given kind as lattice points.
pub fn vertices(p: &Poset, kind: Kind) -> Vec<LatticePoint> {
    kind.vertex_sets(p)
        .into_iter()
        .map(|w| rho(w, p.len()))
        .collect()
}
