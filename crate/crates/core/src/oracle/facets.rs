use std::collections::{BTreeSet, HashSet};

use super::rational::{affine_dimension, RationalVector};
use super::OracleConfig;
use crate::error::{Error, Result};
use crate::polytope::{Inequality, LatticePoint};

/// Number of facets of the full-dimensional polytope `conv(vertices)` in
/// `R^d` that appear among `candidates`.
///
/// A candidate defines a facet when the vertices it is tight at span an
/// affine space of dimension `d - 1`. Positive multiples of one inequality,
/// and distinct inequalities with the same tight set, count once.
pub fn count_facets(
    vertices: &[LatticePoint],
    candidates: &[Inequality],
    d: usize,
) -> Result<usize> {
    count_facets_with(&OracleConfig::default(), vertices, candidates, d)
}

pub fn count_facets_with(
    cfg: &OracleConfig,
    vertices: &[LatticePoint],
    candidates: &[Inequality],
    d: usize,
) -> Result<usize> {
    cfg.check_vertices(vertices.len())?;
    if let Some(v) = vertices.iter().find(|v| v.dim() != d) {
        return Err(Error::Dimension {
            expected: d,
            got: v.dim(),
        });
    }
    if let Some(q) = candidates.iter().find(|q| q.dim() != d) {
        return Err(Error::Dimension {
            expected: d,
            got: q.dim(),
        });
    }

    let mut seen = HashSet::new();
    let mut tight_sets: BTreeSet<Vec<usize>> = BTreeSet::new();
    for (index, q) in candidates.iter().enumerate() {
        let mut tight = Vec::new();
        for (k, v) in vertices.iter().enumerate() {
            let lhs = q.lhs(v);
            if lhs > *q.bound() {
                return Err(Error::NotValid {
                    vertex: k,
                    inequality: index,
                });
            }
            if lhs == *q.bound() {
                tight.push(k);
            }
        }
        if seen.insert(q.normalized()) {
            tight_sets.insert(tight);
        }
    }

    let points: Vec<RationalVector> = vertices.iter().map(RationalVector::from).collect();
    let facet_dim = d.checked_sub(1);
    Ok(tight_sets
        .iter()
        .filter(|tight| {
            let face: Vec<RationalVector> = tight.iter().map(|&k| points[k].clone()).collect();
            affine_dimension(&face) == facet_dim
        })
        .count())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polytope::{h_description, order_h_description_all_relations, vertices, Kind};
    use crate::poset::Poset;

    #[test]
    fn unit_cube() {
        let cube = Poset::antichain(3);
        let verts = vertices(&cube, Kind::Order);
        let bounds = h_description(&cube, Kind::Order);
        assert_eq!(bounds.len(), 6);
        assert_eq!(count_facets(&verts, &bounds, 3).unwrap(), 6);
    }

    #[test]
    fn x_polytopes() {
        let x = Poset::x_poset();
        let order = count_facets(
            &vertices(&x, Kind::Order),
            &h_description(&x, Kind::Order),
            5,
        );
        let chain = count_facets(
            &vertices(&x, Kind::Chain),
            &h_description(&x, Kind::Chain),
            5,
        );
        assert_eq!(order.unwrap(), 8);
        assert_eq!(chain.unwrap(), 9);
        let full = order_h_description_all_relations(&x);
        assert_eq!(
            count_facets(&vertices(&x, Kind::Order), &full, 5).unwrap(),
            8
        );
    }

    #[test]
    fn duplicates_and_invalid_candidates() {
        let sq = vertices(&Poset::antichain(2), Kind::Order);
        let mut ineqs = h_description(&Poset::antichain(2), Kind::Order);
        ineqs.push(Inequality::from_ints(&[2, 0], 2).unwrap());
        // tight only at (1,1): a vertex, not a facet
        ineqs.push(Inequality::from_ints(&[1, 1], 2).unwrap());
        assert_eq!(count_facets(&sq, &ineqs, 2).unwrap(), 4);

        let bad = vec![Inequality::from_ints(&[1, 1], 1).unwrap()];
        assert_eq!(
            count_facets(&sq, &bad, 2),
            Err(Error::NotValid {
                vertex: 3,
                inequality: 0
            })
        );
    }
}
