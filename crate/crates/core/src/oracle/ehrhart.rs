use num_traits::ToPrimitive;

use super::OracleConfig;
use crate::error::{Error, Result};
use crate::polytope::Inequality;

/// Integer points of `{0, .., t}^d` satisfying every inequality with its
/// bound scaled by `t`, i.e. the lattice points of the `t`-th dilation of a
/// polytope lying inside the unit cube.
pub fn lattice_points_in_dilation(ineqs: &[Inequality], d: usize, t: u32) -> Result<u128> {
    lattice_points_in_dilation_with(&OracleConfig::default(), ineqs, d, t)
}

pub fn lattice_points_in_dilation_with(
    cfg: &OracleConfig,
    ineqs: &[Inequality],
    d: usize,
    t: u32,
) -> Result<u128> {
    let grid = grid_size(d, t);
    if grid > cfg.enumeration_budget {
        return Err(Error::Size {
            what: "dilation grid size",
            got: grid,
            limit: cfg.enumeration_budget,
        });
    }
    let system = IntegerSystem::new(ineqs, d, t)?;
    Ok(system.count())
}

/// `d! * vol` of a full-dimensional lattice polytope inside `[0,1]^d`,
/// read off as the `d`-th forward difference of its Ehrhart counts at
/// `t = 0, .., d`.
pub fn normalized_volume(ineqs: &[Inequality], d: usize) -> Result<u128> {
    normalized_volume_with(&OracleConfig::default(), ineqs, d)
}

pub fn normalized_volume_with(cfg: &OracleConfig, ineqs: &[Inequality], d: usize) -> Result<u128> {
    let t_max = u32::try_from(d).map_err(|_| Error::Size {
        what: "dimension",
        got: d as u128,
        limit: u32::MAX as u128,
    })?;
    let mut diff: i128 = 0;
    let mut binom: i128 = 1;
    for t in 0..=t_max {
        let count = lattice_points_in_dilation_with(cfg, ineqs, d, t)?;
        let count = i128::try_from(count).expect("count below the enumeration budget");
        let sign = if (d as u32 - t).is_multiple_of(2) {
            1
        } else {
            -1
        };
        diff += sign * binom * count;
        // C(d, t+1) from C(d, t)
        binom = binom * (d as i128 - t as i128) / (t as i128 + 1);
    }
    u128::try_from(diff).map_err(|_| Error::NegativeVolume(diff))
}

fn grid_size(d: usize, t: u32) -> u128 {
    let base = u128::from(t) + 1;
    let mut total: u128 = 1;
    for _ in 0..d {
        total = total.saturating_mul(base);
    }
    total
}

/// Inequalities as integer rows `c · a <= t * b`, with the smallest possible
/// contribution of each coordinate suffix precomputed for pruning.
struct IntegerSystem {
    d: usize,
    t: i128,
    rows: Vec<Vec<i128>>,
    bounds: Vec<i128>,
    /// `suffix_min[k][i]`: least value of `sum_{j >= i} c_kj a_j` over the grid.
    suffix_min: Vec<Vec<i128>>,
}

impl IntegerSystem {
    fn new(ineqs: &[Inequality], d: usize, t: u32) -> Result<IntegerSystem> {
        let t = i128::from(t);
        let too_big = || Error::Size {
            what: "inequality coefficient magnitude",
            got: i128::MAX as u128,
            limit: i64::MAX as u128,
        };
        let mut rows = Vec::with_capacity(ineqs.len());
        let mut bounds = Vec::with_capacity(ineqs.len());
        let mut suffix_min = Vec::with_capacity(ineqs.len());
        for q in ineqs {
            if q.dim() != d {
                return Err(Error::Dimension {
                    expected: d,
                    got: q.dim(),
                });
            }
            let (coeffs, bound) = q.integer_form();
            let row: Vec<i128> = coeffs
                .iter()
                .map(|c| c.to_i64().map(i128::from).ok_or_else(too_big))
                .collect::<Result<_>>()?;
            let bound = bound.to_i64().map(i128::from).ok_or_else(too_big)?;
            let mut mins = vec![0i128; d + 1];
            for i in (0..d).rev() {
                mins[i] = mins[i + 1] + (row[i] * t).min(0);
            }
            rows.push(row);
            bounds.push(bound * t);
            suffix_min.push(mins);
        }
        Ok(IntegerSystem {
            d,
            t,
            rows,
            bounds,
            suffix_min,
        })
    }

    fn count(&self) -> u128 {
        let mut partial = vec![0i128; self.rows.len()];
        self.count_from(0, &mut partial)
    }

    fn count_from(&self, depth: usize, partial: &mut [i128]) -> u128 {
        let feasible =
            (0..self.rows.len()).all(|k| partial[k] + self.suffix_min[k][depth] <= self.bounds[k]);
        if !feasible {
            return 0;
        }
        if depth == self.d {
            return 1;
        }
        let mut total = 0;
        for value in 0..=self.t {
            for (k, row) in self.rows.iter().enumerate() {
                partial[k] += row[depth] * value;
            }
            total += self.count_from(depth + 1, partial);
            for (k, row) in self.rows.iter().enumerate() {
                partial[k] -= row[depth] * value;
            }
        }
        total
    }
}
