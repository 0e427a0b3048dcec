//! Slow, obviously-correct reference implementations used as test oracles.
//! They read only `Poset::leq` and never call the library's enumerators.

#![allow(dead_code)]

use ocpoly::harness::{enumerate_labeled_posets, random_poset, trial_seed, Density};
use ocpoly::Poset;

pub fn relation(p: &Poset) -> Vec<Vec<bool>> {
    let d = p.len();
    (0..d)
        .map(|i| (0..d).map(|j| p.leq(i, j)).collect())
        .collect()
}

fn members(mask: u64, d: usize) -> Vec<usize> {
    (0..d).filter(|&i| mask >> i & 1 == 1).collect()
}

pub fn ideals(le: &[Vec<bool>]) -> Vec<u64> {
    let d = le.len();
    (0u64..1 << d)
        .filter(|&s| {
            members(s, d)
                .iter()
                .all(|&j| (0..d).all(|i| !le[i][j] || s >> i & 1 == 1))
        })
        .collect()
}

pub fn antichains(le: &[Vec<bool>]) -> Vec<u64> {
    let d = le.len();
    (0u64..1 << d)
        .filter(|&s| {
            let m = members(s, d);
            m.iter()
                .all(|&i| m.iter().all(|&j| i == j || (!le[i][j] && !le[j][i])))
        })
        .collect()
}

/// Connectivity of the comparability graph on `s`, by breadth-first search.
pub fn connected(le: &[Vec<bool>], s: u64) -> bool {
    let m = members(s, le.len());
    let Some(&start) = m.first() else {
        return false;
    };
    let mut seen = vec![start];
    let mut queue = vec![start];
    while let Some(x) = queue.pop() {
        for &y in &m {
            if !seen.contains(&y) && (le[x][y] || le[y][x]) {
                seen.push(y);
                queue.push(y);
            }
        }
    }
    seen.len() == m.len()
}

pub fn order_edges(le: &[Vec<bool>]) -> usize {
    let ids = ideals(le);
    let mut n = 0;
    for &i in &ids {
        for &j in &ids {
            if i != j && i & j == i && connected(le, j & !i) {
                n += 1;
            }
        }
    }
    n
}

pub fn chain_edges(le: &[Vec<bool>]) -> usize {
    let acs = antichains(le);
    let mut n = 0;
    for (k, &a) in acs.iter().enumerate() {
        for &b in &acs[k + 1..] {
            n += usize::from(connected(le, a ^ b));
        }
    }
    n
}

/// Whether some five distinct elements induce `a, b < c < g, h` with
/// `a || b` and `g || h`.
pub fn contains_x(le: &[Vec<bool>]) -> bool {
    let d = le.len();
    let lt = |i: usize, j: usize| i != j && le[i][j];
    let inc = |i: usize, j: usize| !le[i][j] && !le[j][i];
    for c in 0..d {
        for a in 0..d {
            for b in 0..d {
                for g in 0..d {
                    for h in 0..d {
                        let t = [a, b, c, g, h];
                        let distinct = (0..5).all(|x| (x + 1..5).all(|y| t[x] != t[y]));
                        if distinct
                            && lt(a, c)
                            && lt(b, c)
                            && lt(c, g)
                            && lt(c, h)
                            && inc(a, b)
                            && inc(g, h)
                        {
                            return true;
                        }
                    }
                }
            }
        }
    }
    false
}

/// Linear extensions by trying every permutation.
pub fn linear_extensions(le: &[Vec<bool>]) -> u64 {
    fn go(le: &[Vec<bool>], placed: &mut Vec<usize>) -> u64 {
        let d = le.len();
        if placed.len() == d {
            return 1;
        }
        let mut n = 0;
        for x in 0..d {
            if placed.contains(&x) {
                continue;
            }
            // every element below x must already be placed
            if (0..d).all(|y| y == x || !le[y][x] || placed.contains(&y)) {
                placed.push(x);
                n += go(le, placed);
                placed.pop();
            }
        }
        n
    }
    go(le, &mut Vec::new())
}

pub fn exhaustive(max_d: usize) -> Vec<Poset> {
    (1..=max_d)
        .flat_map(|d| enumerate_labeled_posets(d).unwrap())
        .collect()
}

/// `n` random posets with sizes cycling through `lo..=hi` and densities
/// cycling through 1/4, 1/2, 3/4.
pub fn random(n: usize, lo: usize, hi: usize, seed: u64) -> Vec<Poset> {
    let densities = [
        Density::new(1, 4).unwrap(),
        Density::HALF,
        Density::new(3, 4).unwrap(),
    ];
    (0..n)
        .map(|k| {
            let d = lo + k % (hi - lo + 1);
            random_poset(d, densities[k % 3], trial_seed(seed, k)).unwrap()
        })
        .collect()
}
