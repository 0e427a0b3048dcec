use std::ops::{Index, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::polytope::LatticePoint;

/// A point of `Q^d` with exact coordinates (always in lowest terms).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalVector(Vec<BigRational>);

impl RationalVector {
    pub fn new(coords: Vec<BigRational>) -> Self {
        RationalVector(coords)
    }

    pub fn zeros(d: usize) -> Self {
        RationalVector(vec![BigRational::zero(); d])
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[BigRational] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<BigRational> {
        self.0
    }

    /// `(self + other) / 2`.
    pub fn midpoint(&self, other: &RationalVector) -> RationalVector {
        let two = BigRational::from_integer(BigInt::from(2));
        RationalVector(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| (a + b) / &two)
                .collect(),
        )
    }
}

impl From<&LatticePoint> for RationalVector {
    fn from(p: &LatticePoint) -> Self {
        RationalVector(
            p.coords()
                .iter()
                .map(|&c| BigRational::from_integer(BigInt::from(c)))
                .collect(),
        )
    }
}

impl Sub for &RationalVector {
    type Output = RationalVector;

    fn sub(self, rhs: &RationalVector) -> RationalVector {
        RationalVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Index<usize> for RationalVector {
    type Output = BigRational;

    fn index(&self, i: usize) -> &BigRational {
        &self.0[i]
    }
}

/// Rank of a list of row vectors, by exact Gaussian elimination.
pub fn rank(rows: &[RationalVector]) -> usize {
    let Some(width) = rows.first().map(RationalVector::dim) else {
        return 0;
    };
    let mut m: Vec<Vec<BigRational>> = rows.iter().map(|r| r.0.clone()).collect();
    let mut rank = 0;
    for col in 0..width {
        let Some(pivot) = (rank..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, pivot);
        let pivot_row = std::mem::take(&mut m[rank]);
        for row in m.iter_mut().skip(rank + 1) {
            if row[col].is_zero() {
                continue;
            }
            let factor = &row[col] / &pivot_row[col];
            for (v, p) in row.iter_mut().zip(&pivot_row).skip(col) {
                *v -= &factor * p;
            }
        }
        m[rank] = pivot_row;
        rank += 1;
        if rank == m.len() {
            break;
        }
    }
    rank
}

/// Dimension of the affine hull of `points`; `None` for an empty list.
pub fn affine_dimension(points: &[RationalVector]) -> Option<usize> {
    let (base, rest) = points.split_first()?;
    let diffs: Vec<RationalVector> = rest.iter().map(|p| p - base).collect();
    Some(rank(&diffs))
}
