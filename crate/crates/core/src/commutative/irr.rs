use num_bigint::BigUint;

use super::{ComOrder, Monomial};
use crate::growth::StaircaseCounter;
use crate::Result;

/// Default node budget for staircase enumeration.
pub const DEFAULT_GROWTH_BUDGET: usize = 5_000_000;

/// `u ∈ Irr(S)`: no leading monomial of `S` divides `u`.
pub fn irr_member(leading: &[Monomial], u: &Monomial) -> bool {
    !leading.iter().any(|s| s.divides(u))
}

/// `#{u ∈ Irr(S) | ℓ(u) ≤ n}`.
pub fn growth_count(arity: usize, leading: &[Monomial], n: u64, budget: usize) -> Result<BigUint> {
    counter(arity, leading, budget).count(n)
}

/// The counts for every horizon `0..=n_max`.
pub fn growth_counts(
    arity: usize,
    leading: &[Monomial],
    n_max: u64,
    budget: usize,
) -> Result<Vec<BigUint>> {
    let mut c = counter(arity, leading, budget);
    (0..=n_max).map(|n| c.count(n)).collect()
}

fn counter(arity: usize, leading: &[Monomial], budget: usize) -> StaircaseCounter {
    StaircaseCounter::new(
        arity,
        leading.iter().map(|m| m.exponents().to_vec()).collect(),
        budget,
    )
}

/// All irreducible monomials of degree at most `max_len`, in increasing order.
pub fn irreducible_monomials(
    arity: usize,
    leading: &[Monomial],
    max_len: u32,
    order: ComOrder,
) -> Vec<Monomial> {
    let mut out = Vec::new();
    collect(&mut vec![0; arity], 0, max_len, leading, &mut out);
    out.sort_by(|a, b| order.compare(a, b));
    out
}

fn collect(e: &mut Vec<u32>, i: usize, rem: u32, leading: &[Monomial], out: &mut Vec<Monomial>) {
    if i == e.len() {
        let m = Monomial::from_exponents(e.clone());
        if irr_member(leading, &m) {
            out.push(m);
        }
        return;
    }
    for k in 0..=rem {
        e[i] = k;
        collect(e, i + 1, rem - k, leading, out);
    }
    e[i] = 0;
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::from_exponents(e.to_vec())
    }

    #[test]
    fn worked_example_membership() {
        let s = [m(&[2, 3, 0, 0, 0, 0]), m(&[0, 0, 1, 1, 0, 0])];
        assert!(irr_member(&s, &m(&[0, 4, 4, 0, 4, 4])));
        assert!(!irr_member(&s, &m(&[4, 4, 4, 0, 4, 4])));
        assert!(irr_member(&s, &Monomial::one(6)));
    }

    #[test]
    fn counts() {
        assert_eq!(growth_count(2, &[], 2, 100).unwrap(), BigUint::from(6u32));
        assert_eq!(growth_count(2, &[m(&[1, 1])], 3, 100).unwrap(), BigUint::from(7u32));
        assert_eq!(growth_count(3, &[Monomial::one(3)], 5, 100).unwrap(), BigUint::from(0u32));
    }

    #[test]
    fn listing_agrees_with_count() {
        let s = [m(&[1, 1]), m(&[0, 3])];
        let list = irreducible_monomials(2, &s, 5, ComOrder::DegLex);
        assert_eq!(BigUint::from(list.len()), growth_count(2, &s, 5, 100).unwrap());
        assert_eq!(list[0], Monomial::one(2));
    }
}
