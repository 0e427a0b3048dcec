use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{Kind, LatticePoint};
use crate::error::{Error, Result};
use crate::poset::Poset;

/// An affine inequality `coeffs · a <= bound` with exact rational data.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Inequality {
    coeffs: Vec<BigRational>,
    bound: BigRational,
}

impl Inequality {
    pub fn new(coeffs: Vec<BigRational>, bound: BigRational) -> Result<Inequality> {
        if coeffs.iter().all(Zero::is_zero) {
            return Err(Error::ZeroInequality);
        }
        Ok(Inequality { coeffs, bound })
    }

    /// Integer convenience constructor.
    pub fn from_ints(coeffs: &[i64], bound: i64) -> Result<Inequality> {
        Inequality::new(coeffs.iter().map(|&c| int(c)).collect(), int(bound))
    }

    /// `a_i <= 1` style unit-vector inequality `sign * a_i <= bound`.
    fn axis(d: usize, i: usize, sign: i64, bound: i64) -> Inequality {
        let mut c = vec![0; d];
        c[i] = sign;
        Inequality::from_ints(&c, bound).expect("axis inequality is nonzero")
    }

    pub fn dim(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn bound(&self) -> &BigRational {
        &self.bound
    }

    /// `coeffs · x`.
    pub fn lhs(&self, x: &LatticePoint) -> BigRational {
        self.coeffs
            .iter()
            .zip(x.coords())
            .filter(|(_, &xi)| xi != 0)
            .fold(BigRational::zero(), |acc, (c, &xi)| acc + c * int(xi))
    }

    pub fn is_satisfied_by(&self, x: &LatticePoint) -> bool {
        self.lhs(x) <= self.bound
    }

    pub fn is_tight_at(&self, x: &LatticePoint) -> bool {
        self.lhs(x) == self.bound
    }

    /// Divides by the absolute value of the first nonzero coefficient, so
    /// positive multiples of one inequality normalize identically.
    pub fn normalized(&self) -> Inequality {
        let scale = self
            .coeffs
            .iter()
            .find(|c| !c.is_zero())
            .expect("nonzero by construction")
            .abs();
        Inequality {
            coeffs: self.coeffs.iter().map(|c| c / &scale).collect(),
            bound: &self.bound / &scale,
        }
    }

    /// Integer data for the same half-space: everything multiplied by the
    /// least common multiple of the denominators.
    pub fn integer_form(&self) -> (Vec<BigInt>, BigInt) {
        let lcm = self
            .coeffs
            .iter()
            .chain(std::iter::once(&self.bound))
            .fold(BigInt::one(), |acc, c| {
                num_integer::lcm(acc, c.denom().clone())
            });
        let scale = |c: &BigRational| (c * BigRational::from_integer(lcm.clone())).to_integer();
        (self.coeffs.iter().map(scale).collect(), scale(&self.bound))
    }
}

fn int(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

impl fmt::Display for Inequality {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            let mag = c.abs();
            if !mag.is_one() {
                write!(f, "{mag}*")?;
            }
            write!(f, "a{i}")?;
            first = false;
        }
        write!(f, " <= {}", self.bound)
    }
}

/// Defining inequalities of `O(P)` or `C(P)`.
///
/// Order: for each element `0 <= a_i` and `a_i <= 1`, then `a_i >= a_j` for
/// each cover pair `x_i < x_j`. Chain: `a_i >= 0` for each element, then one
/// sum-at-most-one inequality per maximal chain.
pub fn h_description(p: &Poset, kind: Kind) -> Vec<Inequality> {
    match kind {
        Kind::Order => order_description(p, &p.cover_pairs()),
        Kind::Chain => {
            let d = p.len();
            let mut out: Vec<Inequality> = (0..d).map(|i| Inequality::axis(d, i, -1, 0)).collect();
            for chain in p.maximal_chains() {
                let c: Vec<i64> = (0..d).map(|i| i64::from(chain.contains(i))).collect();
                out.push(Inequality::from_ints(&c, 1).expect("chains are nonempty"));
            }
            out
        }
    }
}

/// Order-polytope description with one inequality per strict relation
/// rather than per cover.
pub fn order_h_description_all_relations(p: &Poset) -> Vec<Inequality> {
    let d = p.len();
    let relations: Vec<(usize, usize)> = (0..d)
        .flat_map(|i| (0..d).filter(move |&j| p.lt(i, j)).map(move |j| (i, j)))
        .collect();
    order_description(p, &relations)
}

fn order_description(p: &Poset, relations: &[(usize, usize)]) -> Vec<Inequality> {
    let d = p.len();
    let mut out = Vec::with_capacity(2 * d + relations.len());
    for i in 0..d {
        out.push(Inequality::axis(d, i, -1, 0));
        out.push(Inequality::axis(d, i, 1, 1));
    }
    for &(i, j) in relations {
        // a_i >= a_j  <=>  -a_i + a_j <= 0
        let mut c = vec![0; d];
        c[i] = -1;
        c[j] = 1;
        out.push(Inequality::from_ints(&c, 0).expect("relation inequality is nonzero"));
    }
    out
}
