use num_rational::BigRational;

use super::rational::RationalVector;
use super::simplex::{FeasibilityProblem, Relation};
use super::OracleConfig;
use crate::error::Result;
use crate::par::Exec;
use crate::polytope::LatticePoint;

/// Whether the segment between `vertices[u]` and `vertices[v]` is an edge
/// of their convex hull.
///
/// All points must be vertices of the hull. The segment fails to be an edge
/// exactly when `v - u` lies in the cone spanned by `w - u` over the other
/// vertices `w`; that cone membership is decided by exact linear
/// feasibility.
pub fn is_geometric_edge(vertices: &[LatticePoint], u: usize, v: usize) -> Result<bool> {
    is_geometric_edge_with(&OracleConfig::default(), vertices, u, v)
}

pub fn is_geometric_edge_with(
    cfg: &OracleConfig,
    vertices: &[LatticePoint],
    u: usize,
    v: usize,
) -> Result<bool> {
    cfg.check_vertices(vertices.len())?;
    let points: Vec<RationalVector> = vertices.iter().map(RationalVector::from).collect();
    Ok(edge_by_feasibility(&points, u, v))
}

fn edge_by_feasibility(points: &[RationalVector], u: usize, v: usize) -> bool {
    assert_ne!(u, v, "an edge needs two distinct vertices");
    let d = points[u].dim();
    let others: Vec<RationalVector> = points
        .iter()
        .enumerate()
        .filter(|&(k, _)| k != u && k != v)
        .map(|(_, w)| w - &points[u])
        .collect();
    let target = &points[v] - &points[u];

    // sum_w lambda_w (w - u) = v - u, lambda >= 0
    let mut lp = FeasibilityProblem::new(others.len());
    for k in 0..d {
        let row: Vec<BigRational> = others.iter().map(|w| w[k].clone()).collect();
        lp.push(row, Relation::Eq, target[k].clone());
    }
    lp.solve().is_none()
}

/// Every edge of the hull as `(u, v)` with `u < v`, sorted.
pub fn geometric_edges(vertices: &[LatticePoint], exec: Exec) -> Result<Vec<(usize, usize)>> {
    let cfg = OracleConfig::default();
    cfg.check_vertices(vertices.len())?;
    let points: Vec<RationalVector> = vertices.iter().map(RationalVector::from).collect();
    let n = points.len();
    let points = &points;
    Ok(exec.flat_map_range(n, |u| {
        ((u + 1)..n)
            .filter(|&v| edge_by_feasibility(points, u, v))
            .map(|v| (u, v))
            .collect()
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Error;

    fn pts(list: &[&[i64]]) -> Vec<LatticePoint> {
        list.iter().map(|c| LatticePoint(c.to_vec())).collect()
    }

    #[test]
    fn unit_square() {
        let sq = pts(&[&[0, 0], &[0, 1], &[1, 0], &[1, 1]]);
        assert!(!is_geometric_edge(&sq, 0, 3).unwrap());
        assert!(is_geometric_edge(&sq, 0, 1).unwrap());
        assert_eq!(
            geometric_edges(&sq, Exec::Sequential).unwrap(),
            vec![(0, 1), (0, 2), (1, 3), (2, 3)]
        );
    }

    #[test]
    fn kite_diagonal_is_not_an_edge() {
        // The diagonal's midpoint (5,0) is outside conv{(1,1),(1,-1)}, yet
        // the diagonal is not an edge.
        let kite = pts(&[&[0, 0], &[10, 0], &[1, 1], &[1, -1]]);
        assert!(!is_geometric_edge(&kite, 0, 1).unwrap());
        assert!(is_geometric_edge(&kite, 0, 2).unwrap());
        assert!(is_geometric_edge(&kite, 1, 3).unwrap());
        assert!(!is_geometric_edge(&kite, 2, 3).unwrap());
    }

    #[test]
    fn simplex_is_complete() {
        let s = pts(&[&[0, 0, 0], &[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
        assert_eq!(geometric_edges(&s, Exec::Parallel).unwrap().len(), 6);
    }

    #[test]
    fn guard() {
        let many: Vec<LatticePoint> = (0..600).map(|i| LatticePoint(vec![i])).collect();
        assert!(matches!(
            is_geometric_edge(&many, 0, 1),
            Err(Error::Size { .. })
        ));
    }
}
