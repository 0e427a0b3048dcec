//! The explicit correspondence between edges of `O(P)` and edges of `C(P)`.
//!
//! Order-polytope edges are pairs of ideals `I ⊊ J` with `J \ I` connected.
//! Chain-polytope edges are pairs of distinct antichains with connected
//! symmetric difference, oriented so that either `B ⊂ A`, or every
//! comparable cross pair `a ∈ A`, `b ∈ B` has `b < a`.
//!
//! The forward map sends `(I, J)` to
//! `A = max(J)`, `B = min(J \ I) ∪ (max(I) ∩ max(J))`, where `min(J \ I)`
//! is taken to be empty when `J \ I` is a single element. The inverse
//! recovers `J` as the ideal generated by `A` and `I` as the elements of `J`
//! lying above no element of `B \ A`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::par::Exec;
use crate::poset::{ElementSet, Poset};

/// An edge of `O(P)`: ideals with `lower ⊊ upper` and connected difference.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct IdealPair {
    pub lower: ElementSet,
    pub upper: ElementSet,
}

/// An edge of `C(P)` in normalized orientation: `top` plays the role of the
/// antichain generating the larger ideal, `bottom` the other one.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct AntichainPair {
    pub top: ElementSet,
    pub bottom: ElementSet,
}

impl IdealPair {
    pub fn is_valid(&self, p: &Poset) -> bool {
        p.is_ideal(self.lower)
            && p.is_ideal(self.upper)
            && self.lower.is_proper_subset(self.upper)
            && p.is_connected_subset(self.upper - self.lower)
                .unwrap_or(false)
    }
}

impl AntichainPair {
    /// Whether the pair is a chain-polytope edge in normalized orientation.
    pub fn is_valid(&self, p: &Poset) -> bool {
        matches!(
            normalize_antichain_pair(p, self.top, self.bottom),
            Ok(n) if n == *self
        )
    }
}

/// `min(J \ I)` with the singleton-difference convention.
fn min_of_difference(p: &Poset, diff: ElementSet) -> ElementSet {
    if diff.len() == 1 {
        ElementSet::EMPTY
    } else {
        p.min_of(diff)
    }
}

/// The two halves of the forward image of `(I, J)`: `min(J \ I)` under the
/// singleton convention, and `max(I) ∩ max(J)`.
pub fn bijection_parts(p: &Poset, pair: IdealPair) -> (ElementSet, ElementSet) {
    (
        min_of_difference(p, pair.upper - pair.lower),
        p.max_of(pair.lower) & p.max_of(pair.upper),
    )
}

pub fn omega_to_psi(p: &Poset, pair: IdealPair) -> Result<AntichainPair> {
    if !pair.is_valid(p) {
        return Err(Error::NotInOmega(pair.lower, pair.upper));
    }
    Ok(omega_to_psi_unchecked(p, pair))
}

pub(crate) fn omega_to_psi_unchecked(p: &Poset, pair: IdealPair) -> AntichainPair {
    let (min_diff, kept) = bijection_parts(p, pair);
    AntichainPair {
        top: p.max_of(pair.upper),
        bottom: min_diff | kept,
    }
}

pub fn psi_to_omega(p: &Poset, pair: AntichainPair) -> Result<IdealPair> {
    if !pair.is_valid(p) {
        return Err(Error::NotInPsi(pair.top, pair.bottom));
    }
    Ok(psi_to_omega_unchecked(p, pair))
}

pub(crate) fn psi_to_omega_unchecked(p: &Poset, pair: AntichainPair) -> IdealPair {
    let AntichainPair { top, bottom } = pair;
    let upper = p.down_closure(top);
    let lower = if bottom.is_proper_subset(top) {
        // a connected difference of an antichain is a single element
        upper - (top - bottom)
    } else {
        upper - p.up_closure(bottom - top)
    };
    IdealPair { lower, upper }
}

/// Orients an unordered pair of distinct antichains with connected
/// symmetric difference.
///
/// Subset orientation wins when one antichain contains the other. Otherwise
/// the orientation is read off the comparable cross pairs, which must all
/// point the same way. A pair with no comparable cross pair (impossible once
/// the difference is connected and has two or more elements) falls back to
/// ascending mask order.
pub fn normalize_antichain_pair(p: &Poset, a: ElementSet, b: ElementSet) -> Result<AntichainPair> {
    let reject = || Error::NotInPsi(a, b);
    if a == b || !p.is_antichain(a) || !p.is_antichain(b) {
        return Err(reject());
    }
    if !p.is_connected_subset(a ^ b).map_err(|_| reject())? {
        return Err(reject());
    }
    if b.is_proper_subset(a) {
        return Ok(AntichainPair { top: a, bottom: b });
    }
    if a.is_proper_subset(b) {
        return Ok(AntichainPair { top: b, bottom: a });
    }
    let (only_a, only_b) = (a - b, b - a);
    let mut b_below = false;
    let mut a_below = false;
    for x in only_a.iter() {
        let below_x = p.down_set(x) & only_b;
        let above_x = p.up_set(x) & only_b;
        b_below |= !below_x.is_empty();
        a_below |= !above_x.is_empty();
    }
    match (b_below, a_below) {
        (true, false) => Ok(AntichainPair { top: a, bottom: b }),
        (false, true) => Ok(AntichainPair { top: b, bottom: a }),
        // mixed orientations cannot occur for a connected difference
        (true, true) => Err(reject()),
        (false, false) => Ok(if a < b {
            AntichainPair { top: a, bottom: b }
        } else {
            AntichainPair { top: b, bottom: a }
        }),
    }
}

/// Every edge of `O(P)` as an oriented ideal pair, sorted.
pub fn enumerate_omega(p: &Poset, exec: Exec) -> Vec<IdealPair> {
    let ideals = p.enumerate_ideals();
    let ideals = &ideals;
    exec.flat_map_range(ideals.len(), |u| {
        ideals[u + 1..]
            .iter()
            .filter(|&&upper| super::skeleton::order_edge_unchecked(p, ideals[u], upper))
            .map(|&upper| IdealPair {
                lower: ideals[u],
                upper,
            })
            .collect()
    })
}

/// Every edge of `C(P)` as a normalized antichain pair, sorted.
pub fn enumerate_psi(p: &Poset, exec: Exec) -> Vec<AntichainPair> {
    let antichains = p.enumerate_antichains();
    let antichains = &antichains;
    let mut out = exec.flat_map_range(antichains.len(), |u| {
        antichains[u + 1..]
            .iter()
            .filter_map(|&b| normalize_antichain_pair(p, antichains[u], b).ok())
            .collect()
    });
    out.sort_unstable();
    out
}
