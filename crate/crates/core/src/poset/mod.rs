//! Finite posets on the labels `0..d` and the order-theoretic enumeration
//! the polytope constructions are built from.

mod set;
pub mod text;

use std::collections::HashMap;

use serde::Serialize;

pub use set::{ElementSet, Elements, MAX_ELEMENTS};

use crate::error::{Error, Result};

/// Largest poset for which [`Poset::count_linear_extensions`] runs.
pub const LINEAR_EXTENSION_MAX_D: usize = 20;

/// A finite poset with its order relation stored as transitively closed
/// bit rows: `up[i]` holds every `j` with `i <= j`, `down[i]` every `j`
/// with `j <= i`. Both rows include `i` itself.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poset {
    d: usize,
    up: Vec<ElementSet>,
    down: Vec<ElementSet>,
}

/// An induced copy of the five-element poset with `a, b < c < g, h`,
/// `a || b` and `g || h`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct XWitness {
    pub a: usize,
    pub b: usize,
    pub c: usize,
    pub g: usize,
    pub h: usize,
}

impl XWitness {
    pub fn elements(&self) -> [usize; 5] {
        [self.a, self.b, self.c, self.g, self.h]
    }
}

impl Poset {
    /// Builds the poset whose order is the reflexive-transitive closure of
    /// `covers`, where `(i, j)` means `x_i < x_j`.
    ///
    /// The pairs need not be true covers; any generating set of strict
    /// relations is accepted.
    pub fn from_covers(d: usize, covers: &[(usize, usize)]) -> Result<Poset> {
        check_size(d)?;
        let mut up: Vec<ElementSet> = (0..d).map(ElementSet::singleton).collect();
        for &(i, j) in covers {
            for index in [i, j] {
                if index >= d {
                    return Err(Error::Index { index, d });
                }
            }
            if i == j {
                return Err(Error::SelfCover(i));
            }
            up[i] = up[i].with(j);
        }
        Self::close(d, up)
    }

    /// Builds a poset from an arbitrary relation predicate, closing it
    /// transitively. `rel(i, j)` true means `x_i <= x_j`.
    pub fn from_relation(d: usize, rel: impl Fn(usize, usize) -> bool) -> Result<Poset> {
        check_size(d)?;
        let up = (0..d)
            .map(|i| {
                (0..d)
                    .filter(|&j| i == j || rel(i, j))
                    .collect::<ElementSet>()
            })
            .collect();
        Self::close(d, up)
    }

    fn close(d: usize, mut up: Vec<ElementSet>) -> Result<Poset> {
        // Warshall over bit rows.
        for k in 0..d {
            let row_k = up[k];
            for row in up.iter_mut() {
                if row.contains(k) {
                    *row = *row | row_k;
                }
            }
        }
        let mut down = vec![ElementSet::EMPTY; d];
        for (i, row) in up.iter().enumerate() {
            for j in row.iter() {
                down[j] = down[j].with(i);
            }
        }
        for i in 0..d {
            let both = up[i] & down[i];
            if let Some(j) = both.without(i).first() {
                return Err(Error::Cycle(i.min(j), i.max(j)));
            }
        }
        Ok(Poset { d, up, down })
    }

    /// The `d`-element antichain.
    pub fn antichain(d: usize) -> Poset {
        Poset::from_covers(d, &[]).expect("antichain is a valid poset")
    }

    /// The chain `0 < 1 < .. < d-1`.
    pub fn chain(d: usize) -> Poset {
        let covers: Vec<_> = (1..d).map(|j| (j - 1, j)).collect();
        Poset::from_covers(d, &covers).expect("chain is a valid poset")
    }

    /// The five-element poset `0, 1 < 2 < 3, 4`.
    pub fn x_poset() -> Poset {
        Poset::from_covers(5, &[(0, 2), (1, 2), (2, 3), (2, 4)]).expect("X is a valid poset")
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.d
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.d == 0
    }

    #[inline]
    pub fn elements(&self) -> ElementSet {
        ElementSet::full(self.d)
    }

    /// `x_i <= x_j`.
    #[inline]
    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.up[i].contains(j)
    }

    /// `x_i < x_j`.
    #[inline]
    pub fn lt(&self, i: usize, j: usize) -> bool {
        i != j && self.leq(i, j)
    }

    #[inline]
    pub fn comparable(&self, i: usize, j: usize) -> bool {
        self.leq(i, j) || self.leq(j, i)
    }

    /// Every element `>= i`, including `i`.
    #[inline]
    pub fn up_set(&self, i: usize) -> ElementSet {
        self.up[i]
    }

    /// Every element `<= i`, including `i`.
    #[inline]
    pub fn down_set(&self, i: usize) -> ElementSet {
        self.down[i]
    }

    /// Elements comparable to `i`, excluding `i`.
    #[inline]
    pub fn comparable_set(&self, i: usize) -> ElementSet {
        (self.up[i] | self.down[i]).without(i)
    }

    /// Hasse diagram: pairs `(i, j)` with `x_j` covering `x_i`, in
    /// lexicographic order.
    pub fn cover_pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.d {
            for j in self.up[i].without(i).iter() {
                let between = (self.up[i] & self.down[j]).without(i).without(j);
                if between.is_empty() {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// Elements covering `i`, ascending.
    pub fn upper_covers(&self, i: usize) -> ElementSet {
        let above = self.up[i].without(i);
        above
            .iter()
            .filter(|&j| (above & self.down[j]).without(j).is_empty())
            .collect()
    }

    pub fn is_ideal(&self, s: ElementSet) -> bool {
        s.fits(self.d) && s.iter().all(|i| self.down[i].is_subset(s))
    }

    pub fn is_antichain(&self, s: ElementSet) -> bool {
        s.fits(self.d) && s.iter().all(|i| self.comparable_set(i).is_disjoint(s))
    }

    pub fn is_chain(&self, s: ElementSet) -> bool {
        s.fits(self.d)
            && s.iter()
                .all(|i| (s.without(i)).is_subset(self.comparable_set(i)))
    }

    fn check_subset(&self, s: ElementSet) -> Result<()> {
        match (s - self.elements()).first() {
            Some(index) => Err(Error::Index { index, d: self.d }),
            None => Ok(()),
        }
    }

    /// Whether the comparability graph induced on `s` is connected.
    pub fn is_connected_subset(&self, s: ElementSet) -> Result<bool> {
        self.check_subset(s)?;
        let start = s.first().ok_or(Error::EmptySet)?;
        let mut reached = ElementSet::singleton(start);
        let mut frontier = reached;
        while let Some(x) = frontier.first() {
            frontier = frontier.without(x);
            let fresh = (self.comparable_set(x) & s) - reached;
            reached = reached | fresh;
            frontier = frontier | fresh;
        }
        Ok(reached == s)
    }

    /// Maximal elements of the subposet induced on `s`.
    pub fn max_of(&self, s: ElementSet) -> ElementSet {
        s.iter().filter(|&i| (self.up[i] & s).len() == 1).collect()
    }

    /// Minimal elements of the subposet induced on `s`.
    pub fn min_of(&self, s: ElementSet) -> ElementSet {
        s.iter()
            .filter(|&i| (self.down[i] & s).len() == 1)
            .collect()
    }

    /// Union of the down-sets of `s`, without checking that `s` is an antichain.
    pub fn down_closure(&self, s: ElementSet) -> ElementSet {
        s.iter()
            .fold(ElementSet::EMPTY, |acc, i| acc | self.down[i])
    }

    /// Union of the up-sets of `s`.
    pub fn up_closure(&self, s: ElementSet) -> ElementSet {
        s.iter().fold(ElementSet::EMPTY, |acc, i| acc | self.up[i])
    }

    /// The ideal whose maximal elements are exactly the antichain `a`.
    pub fn ideal_generated_by(&self, a: ElementSet) -> Result<ElementSet> {
        self.check_subset(a)?;
        if !self.is_antichain(a) {
            return Err(Error::NotAntichain(a));
        }
        Ok(self.down_closure(a))
    }

    /// Elements in an order compatible with the poset (smaller down-sets first).
    fn topological_order(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.d).collect();
        order.sort_by_key(|&i| (self.down[i].len(), i));
        order
    }

    /// All poset ideals, including `∅` and the whole poset, in ascending
    /// mask order. Exponential in `d`.
    pub fn enumerate_ideals(&self) -> Vec<ElementSet> {
        let order = self.topological_order();
        let mut out = Vec::new();
        let mut stack = vec![(0usize, ElementSet::EMPTY)];
        while let Some((k, current)) = stack.pop() {
            if k == order.len() {
                out.push(current);
                continue;
            }
            let x = order[k];
            stack.push((k + 1, current));
            if self.down[x].without(x).is_subset(current) {
                stack.push((k + 1, current.with(x)));
            }
        }
        out.sort_unstable();
        out
    }

    /// Number of ideals (equivalently antichains), or `None` once the count
    /// exceeds `cap`. Stops early, so it is cheap on wide posets.
    pub fn count_ideals_capped(&self, cap: usize) -> Option<usize> {
        let order = self.topological_order();
        let mut count = 0usize;
        let mut stack = vec![(0usize, ElementSet::EMPTY)];
        while let Some((k, current)) = stack.pop() {
            if k == order.len() {
                count += 1;
                if count > cap {
                    return None;
                }
                continue;
            }
            let x = order[k];
            stack.push((k + 1, current));
            if self.down[x].without(x).is_subset(current) {
                stack.push((k + 1, current.with(x)));
            }
        }
        Some(count)
    }

    /// All antichains, including `∅`, in ascending mask order.
    pub fn enumerate_antichains(&self) -> Vec<ElementSet> {
        let mut out = Vec::new();
        let mut stack = vec![(0usize, ElementSet::EMPTY)];
        while let Some((i, current)) = stack.pop() {
            if i == self.d {
                out.push(current);
                continue;
            }
            stack.push((i + 1, current));
            if self.comparable_set(i).is_disjoint(current) {
                stack.push((i + 1, current.with(i)));
            }
        }
        out.sort_unstable();
        out
    }

    /// Every inclusion-maximal chain. Each is a saturated chain from a
    /// minimal to a maximal element; chains are listed in depth-first order
    /// over ascending upper covers, starting from the minimal elements in
    /// ascending order.
    pub fn maximal_chains(&self) -> Vec<ElementSet> {
        let covers: Vec<ElementSet> = (0..self.d).map(|i| self.upper_covers(i)).collect();
        let mut out = Vec::new();
        for start in self.min_of(self.elements()).iter() {
            let mut stack = vec![(start, ElementSet::singleton(start))];
            while let Some((top, chain)) = stack.pop() {
                let next = covers[top];
                if next.is_empty() {
                    out.push(chain);
                    continue;
                }
                // reversed so the smallest cover is explored first
                let mut nexts = next.to_vec();
                nexts.reverse();
                for n in nexts {
                    stack.push((n, chain.with(n)));
                }
            }
        }
        out
    }

    /// Number of linear extensions `e(P)`, by dynamic programming over the
    /// lattice of ideals.
    pub fn count_linear_extensions(&self) -> Result<u64> {
        if self.d > LINEAR_EXTENSION_MAX_D {
            return Err(Error::Size {
                what: "poset size for linear-extension counting",
                got: self.d as u128,
                limit: LINEAR_EXTENSION_MAX_D as u128,
            });
        }
        let ideals = self.enumerate_ideals();
        let mut counts: HashMap<ElementSet, u64> = HashMap::with_capacity(ideals.len());
        for &ideal in &ideals {
            let value = if ideal.is_empty() {
                1
            } else {
                self.max_of(ideal)
                    .iter()
                    .map(|x| counts[&ideal.without(x)])
                    .sum()
            };
            counts.insert(ideal, value);
        }
        Ok(counts[&self.elements()])
    }

    /// The lexicographically first induced copy of the poset X, if any.
    pub fn find_x_subposet(&self) -> Option<XWitness> {
        let d = self.d;
        for a in 0..d {
            for b in (a + 1)..d {
                if self.comparable(a, b) {
                    continue;
                }
                let common_above = (self.up[a] & self.up[b]).without(a).without(b);
                for c in common_above.iter() {
                    let above_c = self.up[c].without(c);
                    for g in above_c.iter() {
                        let partner = (above_c - self.comparable_set(g)).without(g);
                        if let Some(h) = (partner - ElementSet::full(g + 1)).first() {
                            return Some(XWitness { a, b, c, g, h });
                        }
                    }
                }
            }
        }
        None
    }

    /// Whether X embeds order-preservingly, comparabilities between `a, b`
    /// or between `g, h` allowed. True exactly when some element has two
    /// elements strictly below it and two strictly above.
    pub fn contains_weak_x(&self) -> bool {
        (0..self.d).any(|c| self.down[c].len() >= 3 && self.up[c].len() >= 3)
    }

    /// The cover pairs rendered in the poset text format.
    pub fn to_text(&self) -> String {
        text::write_poset(self, None)
    }
}

fn check_size(d: usize) -> Result<()> {
    if d > MAX_ELEMENTS {
        return Err(Error::Size {
            what: "poset size",
            got: d as u128,
            limit: MAX_ELEMENTS as u128,
        });
    }
    Ok(())
}

impl std::fmt::Debug for Poset {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Poset")
            .field("d", &self.d)
            .field("covers", &self.cover_pairs())
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(ix: &[usize]) -> ElementSet {
        ElementSet::from_indices(ix.iter().copied())
    }

    const A: usize = 0;
    const B: usize = 1;
    const C: usize = 2;
    const G: usize = 3;
    const H: usize = 4;

    #[test]
    fn from_covers_examples() {
        let one = Poset::from_covers(1, &[]).unwrap();
        assert!(one.leq(0, 0));

        let x = Poset::x_poset();
        for (i, j) in [(0, 3), (0, 4), (1, 3), (1, 4), (0, 2), (2, 4)] {
            assert!(x.lt(i, j), "{i} < {j}");
        }
        assert!(!x.comparable(A, B));
        assert!(!x.comparable(G, H));

        assert_eq!(
            Poset::from_covers(2, &[(0, 1), (1, 0)]),
            Err(Error::Cycle(0, 1))
        );
        assert_eq!(
            Poset::from_covers(2, &[(0, 2)]),
            Err(Error::Index { index: 2, d: 2 })
        );
        assert_eq!(Poset::from_covers(2, &[(1, 1)]), Err(Error::SelfCover(1)));
        assert!(matches!(
            Poset::from_covers(65, &[]),
            Err(Error::Size { .. })
        ));
    }

    #[test]
    fn longer_cycle_detected() {
        let err = Poset::from_covers(4, &[(0, 1), (1, 2), (2, 3), (3, 1)]).unwrap_err();
        assert!(matches!(err, Error::Cycle(..)));
    }

    #[test]
    fn cover_pair_examples() {
        assert_eq!(
            Poset::x_poset().cover_pairs(),
            vec![(0, 2), (1, 2), (2, 3), (2, 4)]
        );
        assert_eq!(Poset::chain(3).cover_pairs(), vec![(0, 1), (1, 2)]);
        assert!(Poset::antichain(2).cover_pairs().is_empty());
        // redundant generators are dropped
        let p = Poset::from_covers(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(p.cover_pairs(), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn connectivity_examples() {
        let x = Poset::x_poset();
        assert!(!x.is_connected_subset(set(&[A, B])).unwrap());
        assert!(x.is_connected_subset(set(&[A, B, C])).unwrap());
        assert!(x.is_connected_subset(set(&[G])).unwrap());
        assert!(x.is_connected_subset(set(&[A, H])).unwrap());
        assert_eq!(
            x.is_connected_subset(ElementSet::EMPTY),
            Err(Error::EmptySet)
        );
        assert_eq!(
            x.is_connected_subset(set(&[7])),
            Err(Error::Index { index: 7, d: 5 })
        );
    }

    #[test]
    fn ideal_examples() {
        let x = Poset::x_poset();
        let expected: Vec<ElementSet> = vec![
            set(&[]),
            set(&[A]),
            set(&[B]),
            set(&[A, B]),
            set(&[A, B, C]),
            set(&[A, B, C, G]),
            set(&[A, B, C, H]),
            set(&[A, B, C, G, H]),
        ];
        assert_eq!(x.enumerate_ideals(), expected);
        assert_eq!(Poset::antichain(4).enumerate_ideals().len(), 16);
        assert_eq!(
            Poset::chain(3).enumerate_ideals(),
            vec![set(&[]), set(&[0]), set(&[0, 1]), set(&[0, 1, 2])]
        );
        assert_eq!(x.count_ideals_capped(8), Some(8));
        assert_eq!(x.count_ideals_capped(7), None);
        assert_eq!(Poset::antichain(64).count_ideals_capped(1000), None);
        assert_eq!(Poset::chain(64).count_ideals_capped(1000), Some(65));
    }

    #[test]
    fn antichain_examples() {
        let x = Poset::x_poset();
        let mut expected = vec![
            set(&[]),
            set(&[A]),
            set(&[B]),
            set(&[C]),
            set(&[G]),
            set(&[H]),
            set(&[A, B]),
            set(&[G, H]),
        ];
        expected.sort();
        assert_eq!(x.enumerate_antichains(), expected);
        assert_eq!(
            Poset::chain(3).enumerate_antichains(),
            vec![set(&[]), set(&[0]), set(&[1]), set(&[2])]
        );
        assert_eq!(Poset::antichain(5).enumerate_antichains().len(), 32);
    }

    #[test]
    fn max_min_examples() {
        let x = Poset::x_poset();
        assert_eq!(x.max_of(set(&[A, B, C])), set(&[C]));
        assert_eq!(x.min_of(set(&[A, B, C])), set(&[A, B]));
        assert_eq!(x.max_of(ElementSet::EMPTY), ElementSet::EMPTY);
        assert_eq!(x.min_of(ElementSet::EMPTY), ElementSet::EMPTY);
        assert_eq!(x.max_of(set(&[G, H])), set(&[G, H]));
        assert_eq!(x.min_of(set(&[G, H])), set(&[G, H]));
    }

    #[test]
    fn generated_ideal_examples() {
        let x = Poset::x_poset();
        assert_eq!(x.ideal_generated_by(set(&[C])).unwrap(), set(&[A, B, C]));
        assert_eq!(
            x.ideal_generated_by(ElementSet::EMPTY).unwrap(),
            ElementSet::EMPTY
        );
        assert_eq!(x.ideal_generated_by(set(&[G, H])).unwrap(), x.elements());
        assert_eq!(
            x.ideal_generated_by(set(&[A, C])),
            Err(Error::NotAntichain(set(&[A, C])))
        );
    }

    #[test]
    fn maximal_chain_examples() {
        let x = Poset::x_poset();
        assert_eq!(
            x.maximal_chains(),
            vec![
                set(&[A, C, G]),
                set(&[A, C, H]),
                set(&[B, C, G]),
                set(&[B, C, H])
            ]
        );
        assert_eq!(Poset::chain(3).maximal_chains(), vec![set(&[0, 1, 2])]);
        assert_eq!(
            Poset::antichain(2).maximal_chains(),
            vec![set(&[0]), set(&[1])]
        );
    }

    #[test]
    fn linear_extension_examples() {
        // X: {a,b} in either order, then c, then {g,h} in either order.
        assert_eq!(Poset::x_poset().count_linear_extensions().unwrap(), 4);
        assert_eq!(Poset::antichain(5).count_linear_extensions().unwrap(), 120);
        assert_eq!(Poset::chain(7).count_linear_extensions().unwrap(), 1);
        assert_eq!(
            Poset::antichain(20).count_linear_extensions().unwrap(),
            2_432_902_008_176_640_000
        );
        assert!(matches!(
            Poset::antichain(21).count_linear_extensions(),
            Err(Error::Size { .. })
        ));
    }

    #[test]
    fn x_detection_examples() {
        assert_eq!(
            Poset::x_poset().find_x_subposet(),
            Some(XWitness {
                a: 0,
                b: 1,
                c: 2,
                g: 3,
                h: 4
            })
        );
        assert_eq!(Poset::chain(6).find_x_subposet(), None);
        assert_eq!(Poset::antichain(4).find_x_subposet(), None);
        // X with an extra top element: still contains X
        let p = Poset::from_covers(6, &[(0, 2), (1, 2), (2, 3), (2, 4), (3, 5), (4, 5)]).unwrap();
        assert_eq!(
            p.find_x_subposet(),
            Some(XWitness {
                a: 0,
                b: 1,
                c: 2,
                g: 3,
                h: 4
            })
        );
        // weak (non-induced) copy only: 0<1 makes the bottom pair comparable
        let p = Poset::from_covers(5, &[(0, 1), (1, 2), (2, 3), (2, 4)]).unwrap();
        assert_eq!(p.find_x_subposet(), None);
        assert!(p.contains_weak_x());
        assert!(Poset::chain(5).contains_weak_x());
        assert!(!Poset::chain(4).contains_weak_x());
        assert!(Poset::x_poset().contains_weak_x());
    }
}
