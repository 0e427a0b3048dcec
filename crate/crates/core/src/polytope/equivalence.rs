use serde::Serialize;

use super::{degree_sequence, h_description, skeleton, vertices, Kind};
use crate::error::Result;
use crate::oracle;
use crate::poset::{Poset, XWitness};

/// Side-by-side comparison of `O(P)` and `C(P)`.
///
/// `x_free` decides equivalence; unimodular and affine equivalence and
/// equality of f-vectors follow from it and are not recomputed. Vertex,
/// edge, degree and facet data are computed directly so the consequences
/// can be checked against the decision.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EquivalenceReport {
    pub d: usize,
    pub x_free: bool,
    pub witness: Option<XWitness>,
    pub vertex_count: usize,
    pub edge_count_order: usize,
    pub edge_count_chain: usize,
    pub degseq_order: Vec<usize>,
    pub degseq_chain: Vec<usize>,
    pub facet_count_order: Option<usize>,
    pub facet_count_chain: Option<usize>,
}

impl EquivalenceReport {
    /// Every way the report is internally inconsistent.
    pub fn violations(&self) -> Vec<String> {
        let mut out = Vec::new();
        if self.edge_count_order != self.edge_count_chain {
            out.push(format!(
                "edge counts differ: order {} vs chain {}",
                self.edge_count_order, self.edge_count_chain
            ));
        }
        let same_degrees = self.degseq_order == self.degseq_chain;
        if same_degrees != self.x_free {
            out.push(format!(
                "degree sequences {} but x_free = {}",
                if same_degrees { "agree" } else { "differ" },
                self.x_free
            ));
        }
        if let (Some(fo), Some(fc)) = (self.facet_count_order, self.facet_count_chain) {
            if (fo == fc) != self.x_free {
                out.push(format!(
                    "facet counts order {fo} vs chain {fc} but x_free = {}",
                    self.x_free
                ));
            }
        }
        if self.degseq_order.len() != self.vertex_count
            || self.degseq_chain.len() != self.vertex_count
        {
            out.push("vertex counts differ".to_owned());
        }
        out
    }

    /// Whether the polytopes are unimodularly equivalent, as implied by the
    /// absence of X.
    pub fn unimodularly_equivalent(&self) -> bool {
        self.x_free
    }
}

/// Builds the report; facet counts go through the geometric oracle and are
/// only filled in when `with_facets` is set.
pub fn check_equivalence(p: &Poset, with_facets: bool) -> Result<EquivalenceReport> {
    let witness = p.find_x_subposet();
    let order = skeleton(p, Kind::Order);
    let chain = skeleton(p, Kind::Chain);
    let (facet_count_order, facet_count_chain) = if with_facets {
        let count =
            |kind| oracle::count_facets(&vertices(p, kind), &h_description(p, kind), p.len());
        (Some(count(Kind::Order)?), Some(count(Kind::Chain)?))
    } else {
        (None, None)
    };
    Ok(EquivalenceReport {
        d: p.len(),
        x_free: witness.is_none(),
        witness,
        vertex_count: order.vertex_count(),
        edge_count_order: order.edge_count(),
        edge_count_chain: chain.edge_count(),
        degseq_order: degree_sequence(&order),
        degseq_chain: degree_sequence(&chain),
        facet_count_order,
        facet_count_chain,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn x_report() {
        let r = check_equivalence(&Poset::x_poset(), true).unwrap();
        assert!(!r.x_free);
        assert_eq!((r.edge_count_order, r.edge_count_chain), (24, 24));
        assert_eq!(r.degseq_order, vec![6; 8]);
        assert_eq!(r.degseq_chain, vec![5, 6, 6, 6, 6, 6, 6, 7]);
        assert_eq!(
            (r.facet_count_order, r.facet_count_chain),
            (Some(8), Some(9))
        );
        assert!(r.violations().is_empty());
    }

    #[test]
    fn chain_and_antichain_reports() {
        for p in [Poset::chain(4), Poset::antichain(3)] {
            let r = check_equivalence(&p, true).unwrap();
            assert!(r.x_free && r.unimodularly_equivalent());
            assert_eq!(r.degseq_order, r.degseq_chain);
            assert_eq!(r.facet_count_order, r.facet_count_chain);
            assert!(r.violations().is_empty());
        }
        let cube = check_equivalence(&Poset::antichain(3), false).unwrap();
        assert_eq!(cube.degseq_order, vec![3; 8]);
        assert_eq!(cube.facet_count_order, None);
    }

    #[test]
    fn violations_are_reported() {
        let mut r = check_equivalence(&Poset::x_poset(), true).unwrap();
        r.x_free = true;
        assert_eq!(r.violations().len(), 2);
    }
}
