//! Brute-force growth of staircases: counting exponent vectors outside a
//! monomial ideal, and reading an eventual-polynomial degree off the counts.
//!
//! Both the commutative and the bicommutative growth oracles reduce to this:
//! a bicommutative pair `[u;v]` is counted as the exponent vector `(u, v)` in
//! twice as many variables.

use std::collections::HashMap;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::{Error, Result};

/// Counts vectors `e ∈ ℕ^k` with `|e| ≤ n` that are not componentwise above
/// any generator.
///
/// The lattice is walked one coordinate at a time, tracking which generators
/// can still divide; a branch with no live generator is closed with a
/// binomial coefficient, and a branch where a generator already divides is
/// pruned. Subproblems are memoized, so repeated queries for growing `n`
/// share work.
pub struct StaircaseCounter {
    arity: usize,
    gens: Vec<Vec<u32>>,
    memo: HashMap<(usize, u64, Vec<u32>), BigUint>,
    nodes: usize,
    budget: usize,
}

impl StaircaseCounter {
    pub fn new(arity: usize, gens: Vec<Vec<u32>>, budget: usize) -> Self {
        for g in &gens {
            assert_eq!(g.len(), arity, "generator arity mismatch");
        }
        let mut minimal: Vec<Vec<u32>> = Vec::new();
        let mut sorted = gens;
        sorted.sort_by_key(|g| g.iter().map(|&e| e as u64).sum::<u64>());
        for g in sorted {
            if !minimal.iter().any(|h| dominates(&g, h)) {
                minimal.push(g);
            }
        }
        StaircaseCounter {
            arity,
            gens: minimal,
            memo: HashMap::new(),
            nodes: 0,
            budget,
        }
    }

    /// Number of standard vectors of total degree at most `n`.
    pub fn count(&mut self, n: u64) -> Result<BigUint> {
        let all: Vec<u32> = (0..self.gens.len() as u32).collect();
        self.walk(0, n, all)
    }

    fn walk(&mut self, var: usize, rem: u64, live: Vec<u32>) -> Result<BigUint> {
        let remaining = self.arity - var;
        if live
            .iter()
            .any(|&g| self.gens[g as usize][var..].iter().all(|&e| e == 0))
        {
            return Ok(BigUint::zero());
        }
        if live.is_empty() {
            return Ok(binomial(rem + remaining as u64, remaining as u64));
        }
        let key = (var, rem, live);
        if let Some(v) = self.memo.get(&key) {
            return Ok(v.clone());
        }
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::Budget {
                what: "staircase enumeration".into(),
                limit: self.budget,
            });
        }
        let live = &key.2;
        let mut total = BigUint::zero();
        for e in 0..=rem {
            let next: Vec<u32> = live
                .iter()
                .copied()
                .filter(|&g| self.gens[g as usize][var] as u64 <= e)
                .collect();
            total += self.walk(var + 1, rem - e, next)?;
        }
        self.memo.insert(key, total.clone());
        Ok(total)
    }
}

fn dominates(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x >= y)
}

pub(crate) fn binomial(n: u64, k: u64) -> BigUint {
    let k = k.min(n.saturating_sub(k));
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// All `k`-element subsets of `0..n`, in lexicographic order.
pub(crate) fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k <= n {
        rec(0, n, k, &mut Vec::new(), &mut out);
    }
    out
}

/// Least `d` such that the `d`-th finite difference of `seq` is constant on
/// its last `window` entries.
///
/// Degrees up to `max_degree` are tried; a sequence whose differences never
/// settle inside the sample is reported as [`Error::Unstable`].
pub fn eventual_degree(seq: &[BigInt], window: usize, max_degree: usize) -> Result<usize> {
    let window = window.max(2);
    let mut diff: Vec<BigInt> = seq.to_vec();
    for d in 0..=max_degree {
        if diff.len() < window {
            break;
        }
        let tail = &diff[diff.len() - window..];
        if tail.iter().all(|x| *x == tail[0]) {
            return Ok(d);
        }
        diff = diff.windows(2).map(|w| &w[1] - &w[0]).collect();
    }
    Err(Error::Unstable(format!(
        "no difference of order <= {max_degree} is constant over the last {window} of {} samples; \
         increase the horizon",
        seq.len()
    )))
}

/// The comparison window for a horizon of `n_max`: a quarter of it, rounded up.
pub fn default_window(n_max: u64) -> usize {
    n_max.div_ceil(4) as usize
}

#[cfg(test)]
mod tests {
    use super::*;

    fn naive(arity: usize, gens: &[Vec<u32>], n: u64) -> u64 {
        fn rec(v: &mut Vec<u32>, i: usize, rem: u64, gens: &[Vec<u32>], acc: &mut u64) {
            if i == v.len() {
                if !gens.iter().any(|g| dominates(v, g)) {
                    *acc += 1;
                }
                return;
            }
            for e in 0..=rem {
                v[i] = e as u32;
                rec(v, i + 1, rem - e, gens, acc);
            }
            v[i] = 0;
        }
        let mut acc = 0;
        rec(&mut vec![0; arity], 0, n, gens, &mut acc);
        acc
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(4, 2), BigUint::from(6u32));
        assert_eq!(binomial(46, 6), BigUint::from(9366819u32));
        assert_eq!(binomial(3, 0), BigUint::one());
    }

    #[test]
    fn matches_naive_enumeration() {
        let cases: Vec<(usize, Vec<Vec<u32>>)> = vec![
            (2, vec![]),
            (2, vec![vec![1, 1]]),
            (3, vec![vec![2, 0, 1], vec![0, 3, 0], vec![1, 1, 1]]),
            (4, vec![vec![1, 0, 0, 2], vec![0, 2, 2, 0], vec![3, 0, 0, 0]]),
            (2, vec![vec![0, 0]]),
        ];
        for (arity, gens) in cases {
            let mut c = StaircaseCounter::new(arity, gens.clone(), usize::MAX);
            for n in 0..9 {
                assert_eq!(c.count(n).unwrap(), BigUint::from(naive(arity, &gens, n)), "{gens:?} n={n}");
            }
        }
    }

    #[test]
    fn combinations_are_complete() {
        assert_eq!(combinations(4, 2).len(), 6);
        assert_eq!(combinations(3, 0), vec![Vec::<usize>::new()]);
        assert!(combinations(2, 3).is_empty());
        assert_eq!(combinations(3, 2)[0], vec![0, 1]);
    }

    #[test]
    fn budget_is_enforced() {
        let mut c = StaircaseCounter::new(3, vec![vec![5, 5, 5]], 3);
        assert!(matches!(c.count(30), Err(Error::Budget { .. })));
    }

    #[test]
    fn degree_of_polynomial_sequences() {
        let cubic: Vec<BigInt> = (0..20i64).map(|n| BigInt::from(n * n * n + 2 * n + 7)).collect();
        assert_eq!(eventual_degree(&cubic, 5, 6).unwrap(), 3);
        let constant: Vec<BigInt> = (0..20).map(|n| BigInt::from(if n < 5 { n } else { 5 })).collect();
        assert_eq!(eventual_degree(&constant, 5, 6).unwrap(), 0);
        let expo: Vec<BigInt> = (0..12u32).map(|n| BigInt::from(2u64.pow(n))).collect();
        assert!(matches!(eventual_degree(&expo, 3, 4), Err(Error::Unstable(_))));
    }
}
