use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::poset::{Poset, MAX_ELEMENTS};

/// Largest `d` for exhaustive labeled enumeration.
pub const EXHAUSTIVE_MAX_D: usize = 5;

/// Every labeled poset on `d` elements, exactly once.
///
/// Each unordered pair `{i, j}` is assigned one of: incomparable, `i < j`,
/// `j < i`; assignments that are not transitive are skipped. The order is
/// that of the base-3 assignment code.
pub fn enumerate_labeled_posets(d: usize) -> Result<LabeledPosets> {
    if d == 0 || d > EXHAUSTIVE_MAX_D {
        return Err(Error::Size {
            what: "exhaustive poset size",
            got: d as u128,
            limit: EXHAUSTIVE_MAX_D as u128,
        });
    }
    let pairs: Vec<(usize, usize)> = (0..d)
        .flat_map(|i| ((i + 1)..d).map(move |j| (i, j)))
        .collect();
    let total = 3u64.pow(pairs.len() as u32);
    Ok(LabeledPosets {
        d,
        pairs,
        code: 0,
        total,
    })
}

pub struct LabeledPosets {
    d: usize,
    pairs: Vec<(usize, usize)>,
    code: u64,
    total: u64,
}

impl LabeledPosets {
    fn decode(&self, code: u64) -> Option<Poset> {
        let d = self.d;
        let mut strict = vec![vec![false; d]; d];
        let mut rest = code;
        for &(i, j) in &self.pairs {
            match rest % 3 {
                1 => strict[i][j] = true,
                2 => strict[j][i] = true,
                _ => {}
            }
            rest /= 3;
        }
        let p = Poset::from_relation(d, |i, j| strict[i][j]).ok()?;
        // closure must not add anything
        let closed = (0..d).all(|i| (0..d).all(|j| p.lt(i, j) == strict[i][j]));
        closed.then_some(p)
    }
}

impl Iterator for LabeledPosets {
    type Item = Poset;

    fn next(&mut self) -> Option<Poset> {
        while self.code < self.total {
            let code = self.code;
            self.code += 1;
            if let Some(p) = self.decode(code) {
                return Some(p);
            }
        }
        None
    }
}

/// Probability of relating a pair, as an exact fraction `num/den`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Density {
    num: u32,
    den: u32,
}

impl Density {
    pub fn new(num: u32, den: u32) -> Option<Density> {
        (den > 0 && num <= den).then_some(Density { num, den })
    }

    pub const ZERO: Density = Density { num: 0, den: 1 };
    pub const ONE: Density = Density { num: 1, den: 1 };
    pub const HALF: Density = Density { num: 1, den: 2 };

    fn sample(self, rng: &mut impl Rng) -> bool {
        rng.gen_range(0..self.den) < self.num
    }
}

impl fmt::Display for Density {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl FromStr for Density {
    type Err = String;

    fn from_str(s: &str) -> Result<Density, String> {
        let bad = || format!("invalid density `{s}`: expected `num/den` with 0 <= num <= den");
        let (num, den) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s.trim(), "1"),
        };
        let num = num.parse().map_err(|_| bad())?;
        let den = den.parse().map_err(|_| bad())?;
        Density::new(num, den).ok_or_else(bad)
    }
}

impl Serialize for Density {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Density {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Density, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// A random poset: shuffle the labels into a random linear order, relate
/// each pair (earlier below later) with probability `density`, then close
/// transitively. Deterministic in `seed`.
pub fn random_poset(d: usize, density: Density, seed: u64) -> Result<Poset> {
    if d == 0 || d > MAX_ELEMENTS {
        return Err(Error::Size {
            what: "random poset size",
            got: d as u128,
            limit: MAX_ELEMENTS as u128,
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut order: Vec<usize> = (0..d).collect();
    order.shuffle(&mut rng);
    let mut covers = Vec::new();
    for a in 0..d {
        for b in (a + 1)..d {
            if density.sample(&mut rng) {
                covers.push((order[a], order[b]));
            }
        }
    }
    Poset::from_covers(d, &covers)
}
