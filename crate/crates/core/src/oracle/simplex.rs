//! Exact phase-one simplex for linear feasibility over the rationals.
//!
//! Every variable is nonnegative. Pivoting follows Bland's least-index rule,
//! so the procedure terminates on degenerate problems and is reproducible.

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relation {
    Le,
    Eq,
    Ge,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Constraint {
    pub coeffs: Vec<BigRational>,
    pub relation: Relation,
    pub rhs: BigRational,
}

/// Find `x >= 0` satisfying every constraint.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FeasibilityProblem {
    variables: usize,
    constraints: Vec<Constraint>,
}

impl FeasibilityProblem {
    pub fn new(variables: usize) -> Self {
        FeasibilityProblem {
            variables,
            constraints: Vec::new(),
        }
    }

    pub fn variables(&self) -> usize {
        self.variables
    }

    pub fn constraints(&self) -> &[Constraint] {
        &self.constraints
    }

    /// Panics if `coeffs` does not have one entry per variable.
    pub fn push(&mut self, coeffs: Vec<BigRational>, relation: Relation, rhs: BigRational) {
        assert_eq!(coeffs.len(), self.variables, "constraint width");
        self.constraints.push(Constraint {
            coeffs,
            relation,
            rhs,
        });
    }

    /// Whether `x` is a nonnegative point meeting every constraint.
    pub fn is_satisfied_by(&self, x: &[BigRational]) -> bool {
        x.len() == self.variables
            && x.iter().all(|v| !v.is_negative())
            && self.constraints.iter().all(|c| {
                let lhs = c
                    .coeffs
                    .iter()
                    .zip(x)
                    .fold(BigRational::zero(), |acc, (a, v)| acc + a * v);
                match c.relation {
                    Relation::Le => lhs <= c.rhs,
                    Relation::Eq => lhs == c.rhs,
                    Relation::Ge => lhs >= c.rhs,
                }
            })
    }

    /// A feasible point, or `None` if the constraints are inconsistent.
    pub fn solve(&self) -> Option<Vec<BigRational>> {
        Tableau::phase_one(self).solve()
    }
}

struct Tableau {
    /// `rows x (cols + 1)`; the last column is the right-hand side.
    rows: Vec<Vec<BigRational>>,
    /// Reduced costs of the phase-one objective (sum of artificials).
    cost: Vec<BigRational>,
    basis: Vec<usize>,
    structural: usize,
    first_artificial: usize,
}

impl Tableau {
    fn phase_one(problem: &FeasibilityProblem) -> Tableau {
        let n = problem.variables;
        let m = problem.constraints.len();
        let slacks = problem
            .constraints
            .iter()
            .filter(|c| c.relation != Relation::Eq)
            .count();
        let first_artificial = n + slacks;
        let width = first_artificial + m + 1;

        let mut rows = Vec::with_capacity(m);
        let mut basis = Vec::with_capacity(m);
        let mut slack = n;
        for (r, c) in problem.constraints.iter().enumerate() {
            let mut row = vec![BigRational::zero(); width];
            row[..n].clone_from_slice(&c.coeffs);
            match c.relation {
                Relation::Le => {
                    row[slack] = BigRational::one();
                    slack += 1;
                }
                Relation::Ge => {
                    row[slack] = -BigRational::one();
                    slack += 1;
                }
                Relation::Eq => {}
            }
            row[width - 1] = c.rhs.clone();
            if c.rhs.is_negative() {
                for v in row.iter_mut() {
                    *v = -&*v;
                }
            }
            row[first_artificial + r] = BigRational::one();
            rows.push(row);
            basis.push(first_artificial + r);
        }

        let mut cost = vec![BigRational::zero(); width];
        for row in &rows {
            for j in (0..first_artificial).chain(std::iter::once(width - 1)) {
                if !row[j].is_zero() {
                    cost[j] -= &row[j];
                }
            }
        }
        Tableau {
            rows,
            cost,
            basis,
            structural: n,
            first_artificial,
        }
    }

    fn rhs(&self) -> usize {
        self.cost.len() - 1
    }

    fn solve(mut self) -> Option<Vec<BigRational>> {
        // Bland: lowest-index entering column
        while let Some(enter) = (0..self.first_artificial).find(|&j| self.cost[j].is_negative()) {
            let rhs = self.rhs();
            let mut leave: Option<(usize, BigRational)> = None;
            for (r, row) in self.rows.iter().enumerate() {
                if !row[enter].is_positive() {
                    continue;
                }
                let ratio = &row[rhs] / &row[enter];
                let better = match &leave {
                    None => true,
                    Some((best, best_ratio)) => {
                        ratio < *best_ratio
                            || (ratio == *best_ratio && self.basis[r] < self.basis[*best])
                    }
                };
                if better {
                    leave = Some((r, ratio));
                }
            }
            // phase one is bounded below by zero, so a ratio always exists
            let (pivot_row, _) = leave.expect("phase-one objective is bounded");
            self.pivot(pivot_row, enter);
        }

        // remaining objective value is -cost[rhs]
        if !self.cost[self.rhs()].is_zero() {
            return None;
        }
        let rhs = self.rhs();
        let mut x = vec![BigRational::zero(); self.structural];
        for (r, &b) in self.basis.iter().enumerate() {
            if b < self.structural {
                x[b] = self.rows[r][rhs].clone();
            }
        }
        Some(x)
    }

    fn pivot(&mut self, pivot_row: usize, col: usize) {
        let p = self.rows[pivot_row][col].clone();
        for v in self.rows[pivot_row].iter_mut() {
            if !v.is_zero() {
                *v /= &p;
            }
        }
        let pivot = std::mem::take(&mut self.rows[pivot_row]);
        let eliminate = |row: &mut Vec<BigRational>| {
            let factor = row[col].clone();
            if factor.is_zero() {
                return;
            }
            for (v, pv) in row.iter_mut().zip(&pivot) {
                if !pv.is_zero() {
                    *v -= &factor * pv;
                }
            }
        };
        for (r, row) in self.rows.iter_mut().enumerate() {
            if r != pivot_row {
                eliminate(row);
            }
        }
        eliminate(&mut self.cost);
        self.rows[pivot_row] = pivot;
        self.basis[pivot_row] = col;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    fn qs(v: &[i64]) -> Vec<BigRational> {
        v.iter().map(|&n| q(n)).collect()
    }

    #[test]
    fn feasible_and_infeasible() {
        // x + y = 1, x - y = 0
        let mut lp = FeasibilityProblem::new(2);
        lp.push(qs(&[1, 1]), Relation::Eq, q(1));
        lp.push(qs(&[1, -1]), Relation::Eq, q(0));
        let x = lp.solve().unwrap();
        let half = BigRational::new(1.into(), 2.into());
        assert_eq!(x, vec![half.clone(), half]);
        assert!(lp.is_satisfied_by(&x));

        // x + y <= 1, x + y >= 2
        let mut lp = FeasibilityProblem::new(2);
        lp.push(qs(&[1, 1]), Relation::Le, q(1));
        lp.push(qs(&[1, 1]), Relation::Ge, q(2));
        assert_eq!(lp.solve(), None);

        // x >= 0 forbids x = -1
        let mut lp = FeasibilityProblem::new(1);
        lp.push(qs(&[1]), Relation::Eq, q(-1));
        assert_eq!(lp.solve(), None);

        // negative right-hand side with a feasible point: -x <= -3
        let mut lp = FeasibilityProblem::new(1);
        lp.push(qs(&[-1]), Relation::Le, q(-3));
        let x = lp.solve().unwrap();
        assert!(lp.is_satisfied_by(&x));
    }

    #[test]
    fn redundant_and_empty_systems() {
        let lp = FeasibilityProblem::new(3);
        assert_eq!(lp.solve(), Some(qs(&[0, 0, 0])));

        // duplicated equality leaves an artificial basic at zero
        let mut lp = FeasibilityProblem::new(2);
        lp.push(qs(&[1, 2]), Relation::Eq, q(2));
        lp.push(qs(&[1, 2]), Relation::Eq, q(2));
        lp.push(qs(&[2, 4]), Relation::Eq, q(4));
        let x = lp.solve().unwrap();
        assert!(lp.is_satisfied_by(&x));
    }

    #[test]
    fn degenerate_problem_terminates() {
        // Beale-style cycling example turned into a feasibility problem
        let mut lp = FeasibilityProblem::new(4);
        let c = |v: [i64; 4], d: i64| -> Vec<BigRational> {
            v.iter()
                .map(|&n| BigRational::new(n.into(), d.into()))
                .collect()
        };
        lp.push(c([1, -60, -1, 9], 4), Relation::Le, q(0));
        lp.push(c([1, -90, -1, 3], 2), Relation::Le, q(0));
        lp.push(c([0, 0, 1, 0], 1), Relation::Le, q(1));
        lp.push(c([3, -150, 1, -6], 4), Relation::Ge, q(1));
        let x = lp.solve();
        if let Some(x) = x {
            assert!(lp.is_satisfied_by(&x));
        }
    }
}
