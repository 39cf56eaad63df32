use num_bigint::{BigInt, BigUint};

use super::gsb::{gsb_check, irr_member_bc};
use super::{leading_monomials, BcPolynomial, NfMonomial, NfOrder};
use crate::commutative::Monomial;
use crate::growth::{binomial, combinations, default_window, eventual_degree, StaircaseCounter};
use crate::{Error, Result};

/// Result of a GK-dimension computation for `BC(X|S)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GkReportBc {
    pub n_s: u32,
    pub gk: usize,
    /// An irreducible pair with `Sd = gk`; absent when `gk = 0`.
    pub witness: Option<NfMonomial>,
    pub candidate_count: usize,
}

/// `N_S`: at least 1, and at least every exponent occurring in a pair-leading
/// `s̄`, i.e. the least `n ≥ 1` with every `s̄` dividing `[x_1^n⋯x_r^n; x_1^n⋯x_r^n]`.
pub fn n_constant(leading: &[NfMonomial]) -> u32 {
    leading
        .iter()
        .map(|s| match s {
            NfMonomial::Letter { .. } => 1,
            NfMonomial::Pair { left, right } => left.max_exponent().max(right.max_exponent()),
        })
        .max()
        .unwrap_or(1)
        .max(1)
}

/// `N_S` by scanning `n = 1, 2, ...` against the box monomial.
pub fn n_constant_by_scan(leading: &[NfMonomial]) -> u32 {
    let Some(first) = leading.first() else {
        return 1;
    };
    let arity = first.arity();
    (1u32..)
        .find(|&n| {
            let side = Monomial::from_exponents(vec![n; arity]);
            let corner = NfMonomial::pair_unchecked(side.clone(), side);
            leading.iter().all(|s| s.divides(&corner))
        })
        .expect("scan terminates at the largest exponent")
}

/// `Sd(μ)`: zero on letters, otherwise the number of exponents above `n` on both sides.
pub fn sd_nf(m: &NfMonomial, n: u32) -> usize {
    match m {
        NfMonomial::Letter { .. } => 0,
        NfMonomial::Pair { left, right } => left
            .exponents()
            .iter()
            .chain(right.exponents())
            .filter(|&&e| e > n)
            .count(),
    }
}

fn sides(arity: usize, size: usize, e: u32) -> Vec<Monomial> {
    if size == 0 {
        // one filler letter keeps the side nonempty without raising Sd
        (0..arity).map(|i| Monomial::var(arity, i)).collect()
    } else {
        combinations(arity, size)
            .into_iter()
            .map(|sub| {
                let mut v = vec![0; arity];
                for i in sub {
                    v[i] = e;
                }
                Monomial::from_exponents(v)
            })
            .collect()
    }
}

fn key(m: &NfMonomial) -> (Vec<u32>, Vec<u32>) {
    match m {
        NfMonomial::Pair { left, right } => (left.exponents().to_vec(), right.exponents().to_vec()),
        NfMonomial::Letter { .. } => unreachable!("candidates are pairs"),
    }
}

/// Least irreducible candidate pair whose sides together carry `k` exponents equal to `e`.
fn best_of_size(
    arity: usize,
    leading: &[NfMonomial],
    k: usize,
    e: u32,
    tested: &mut usize,
) -> Option<NfMonomial> {
    let mut best: Option<NfMonomial> = None;
    for a in k.saturating_sub(arity)..=k.min(arity) {
        let lefts = sides(arity, a, e);
        let rights = sides(arity, k - a, e);
        for u in &lefts {
            for v in &rights {
                *tested += 1;
                let m = NfMonomial::pair_unchecked(u.clone(), v.clone());
                if irr_member_bc(leading, &m) && best.as_ref().is_none_or(|b| key(&m) < key(b)) {
                    best = Some(m);
                }
            }
        }
    }
    best
}

/// GK dimension of `BC(X|S)` from the leading monomials of a Groebner-Shirshov basis.
///
/// Candidates are pairs whose exponents are `N_S + 1` on chosen supports,
/// with a single exponent-one filler letter on an otherwise empty side; they
/// are tried by decreasing support size.
pub fn gk_fast_bc_leading(arity: usize, leading: &[NfMonomial]) -> GkReportBc {
    let n_s = n_constant(leading);
    let mut tested = 0;
    for k in (1..=2 * arity).rev() {
        if let Some(w) = best_of_size(arity, leading, k, n_s + 1, &mut tested) {
            return GkReportBc {
                n_s,
                gk: k,
                witness: Some(w),
                candidate_count: tested,
            };
        }
    }
    GkReportBc {
        n_s,
        gk: 0,
        witness: None,
        candidate_count: tested,
    }
}

/// [`gk_fast_bc_leading`] for a basis, which must pass [`gsb_check`].
pub fn gk_fast_bc(basis: &[BcPolynomial], arity: usize) -> Result<GkReportBc> {
    if !gsb_check(basis, arity).is_complete {
        return Err(Error::Usage(
            "relations are not a Groebner-Shirshov basis; complete them first".into(),
        ));
    }
    Ok(gk_fast_bc_leading(arity, &leading_monomials(basis)))
}

fn sweep(arity: usize, leading: &[NfMonomial], values: &[u32]) -> usize {
    let n = n_constant(leading);
    let mut best = 0;
    let mut idx = vec![0usize; 2 * arity];
    loop {
        let (u, v): (Vec<u32>, Vec<u32>) = (
            idx[..arity].iter().map(|&i| values[i]).collect(),
            idx[arity..].iter().map(|&i| values[i]).collect(),
        );
        let (u, v) = (Monomial::from_exponents(u), Monomial::from_exponents(v));
        if !u.is_one() && !v.is_one() {
            let m = NfMonomial::pair_unchecked(u, v);
            if irr_member_bc(leading, &m) {
                best = best.max(sd_nf(&m, n));
            }
        }
        let Some(i) = idx.iter().position(|&x| x + 1 < values.len()) else {
            return best;
        };
        idx[i] += 1;
        idx[..i].iter_mut().for_each(|x| *x = 0);
    }
}

/// Oracle: maximum `Sd` over every irreducible pair with exponents in `{0, 1, N_S + 1}`.
pub fn gk_candidate_sweep_bc(arity: usize, leading: &[NfMonomial]) -> usize {
    let n = n_constant(leading);
    sweep(arity, leading, &[0, 1, n + 1])
}

/// Oracle: maximum `Sd` over every irreducible pair with exponents at most `N_S + 1`.
pub fn gk_box_sweep_bc(arity: usize, leading: &[NfMonomial]) -> usize {
    let n = n_constant(leading);
    let values: Vec<u32> = (0..=n + 1).collect();
    sweep(arity, leading, &values)
}

/// GK dimension after adjoining the pair `m` to a set of pairs whose
/// dimension `report.gk ≥ 3` is known.
///
/// A drop of more than one is possible below 3, so smaller dimensions are rejected.
pub fn gk_after_adding_bc(
    leading: &[NfMonomial],
    m: &NfMonomial,
    report: &GkReportBc,
) -> Result<GkReportBc> {
    let n = report.gk;
    if n < 3 {
        return Err(Error::Precondition(format!(
            "gk_after_adding_bc needs GK dimension at least 3, got {n}"
        )));
    }
    if leading.is_empty() || m.is_letter() || leading.iter().any(NfMonomial::is_letter) {
        return Err(Error::Precondition(
            "gk_after_adding_bc needs a nonempty set of pairs and a pair to adjoin".into(),
        ));
    }
    let arity = m.arity();
    let mut enlarged = leading.to_vec();
    enlarged.push(m.clone());
    let n_s = n_constant(&enlarged);
    let mut tested = 0;
    for k in [n, n - 1] {
        if let Some(w) = best_of_size(arity, &enlarged, k, n_s + 1, &mut tested) {
            return Ok(GkReportBc {
                n_s,
                gk: k,
                witness: Some(w),
                candidate_count: tested,
            });
        }
    }
    // not reached when the drop is at most one; recompute rather than guess
    let mut full = gk_fast_bc_leading(arity, &enlarged);
    full.candidate_count += tested;
    Ok(full)
}

fn pair_counter(arity: usize, leading: &[NfMonomial], budget: usize) -> StaircaseCounter {
    let gens = leading
        .iter()
        .filter_map(|s| match s {
            NfMonomial::Pair { left, right } => {
                Some([left.exponents(), right.exponents()].concat())
            }
            NfMonomial::Letter { .. } => None,
        })
        .collect();
    StaircaseCounter::new(2 * arity, gens, budget)
}

/// `#{μ ∈ Irr(S) | ℓ(μ) ≤ n}` for every `n` in `0..=n_max`.
///
/// Pairs `[u;v]` are counted as vectors `(u, v)` in `2r` variables; the
/// vectors with an empty side are never divisible by a pair and are removed
/// in closed form.
pub fn growth_counts_bc(
    arity: usize,
    leading: &[NfMonomial],
    n_max: u64,
    budget: usize,
) -> Result<Vec<BigUint>> {
    let mut counter = pair_counter(arity, leading, budget);
    let letters = (0..arity)
        .filter(|&i| irr_member_bc(leading, &NfMonomial::letter(arity, i)))
        .count();
    (0..=n_max)
        .map(|n| {
            let all = counter.count(n)? + BigUint::from(1u32);
            let one_sided = binomial(n + arity as u64, arity as u64) * 2u32;
            let letters = if n >= 1 { letters } else { 0 };
            Ok(all - one_sided + BigUint::from(letters))
        })
        .collect()
}

pub fn growth_count_bc(arity: usize, leading: &[NfMonomial], n: u64, budget: usize) -> Result<BigUint> {
    Ok(growth_counts_bc(arity, leading, n, budget)?.pop().expect("n + 1 entries"))
}

/// Eventual-polynomial degree of the counting function sampled on `0..=n_max`.
pub fn growth_degree_bc(
    arity: usize,
    leading: &[NfMonomial],
    n_max: u64,
    budget: usize,
) -> Result<usize> {
    let counts: Vec<BigInt> = growth_counts_bc(arity, leading, n_max, budget)?
        .into_iter()
        .map(BigInt::from)
        .collect();
    eventual_degree(&counts, default_window(n_max), 2 * arity + 1)
}

/// Every basis monomial of length at most `max_len`, in increasing order.
pub fn nf_monomials_up_to(arity: usize, max_len: u32, order: NfOrder) -> Vec<NfMonomial> {
    let mut out: Vec<NfMonomial> = if max_len >= 1 {
        (0..arity).map(|i| NfMonomial::letter(arity, i)).collect()
    } else {
        Vec::new()
    };
    let mut sides: Vec<Vec<Monomial>> = vec![Vec::new(); max_len as usize + 1];
    fn rec(e: &mut Vec<u32>, i: usize, rem: u32, used: u32, sides: &mut Vec<Vec<Monomial>>) {
        if i == e.len() {
            if used > 0 {
                sides[used as usize].push(Monomial::from_exponents(e.clone()));
            }
            return;
        }
        for k in 0..=rem {
            e[i] = k;
            rec(e, i + 1, rem - k, used + k, sides);
        }
        e[i] = 0;
    }
    rec(&mut vec![0; arity], 0, max_len.saturating_sub(1), 0, &mut sides);
    for a in 1..max_len as usize {
        for b in 1..=(max_len as usize - a) {
            for u in &sides[a] {
                for v in &sides[b] {
                    out.push(NfMonomial::pair_unchecked(u.clone(), v.clone()));
                }
            }
        }
    }
    out.sort_by(|a, b| order.compare(a, b));
    out
}

/// The irreducible basis monomials of length at most `max_len`, in increasing order.
pub fn irreducible_nf_monomials(
    arity: usize,
    leading: &[NfMonomial],
    max_len: u32,
    order: NfOrder,
) -> Vec<NfMonomial> {
    nf_monomials_up_to(arity, max_len, order)
        .into_iter()
        .filter(|m| irr_member_bc(leading, m))
        .collect()
}
