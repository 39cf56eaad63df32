use num_bigint::BigInt;

use super::irr::{growth_counts, irr_member};
use super::Monomial;
use crate::growth::{combinations, default_window, eventual_degree};
use crate::{Error, Result};

/// Result of a GK-dimension computation for `k[X|S]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GkReportCom {
    pub c_s: u32,
    pub gk: usize,
    /// An irreducible monomial with `Sd = gk`; absent when `gk = 0`.
    pub witness: Option<Monomial>,
    /// Number of box monomials tested for irreducibility.
    pub candidate_count: usize,
}

/// `C_S`: the largest exponent occurring in any leading monomial, i.e. the
/// least `n` with every `s̄ | x_1^n⋯x_r^n`.
pub fn c_constant(leading: &[Monomial]) -> u32 {
    leading.iter().map(Monomial::max_exponent).max().unwrap_or(0)
}

/// `C_S` by scanning `n = 0, 1, ...` until every leading monomial divides the box corner.
pub fn c_constant_by_scan(leading: &[Monomial]) -> u32 {
    let Some(first) = leading.first() else {
        return 0;
    };
    let arity = first.arity();
    (0u32..)
        .find(|&n| {
            let corner = Monomial::from_exponents(vec![n; arity]);
            leading.iter().all(|s| s.divides(&corner))
        })
        .expect("scan terminates at the largest exponent")
}

/// `Sd(u)`: number of exponents strictly above `c`.
pub fn sd_value(u: &Monomial, c: u32) -> usize {
    u.exponents().iter().filter(|&&e| e > c).count()
}

fn corner(arity: usize, support: &[usize], e: u32) -> Monomial {
    let mut v = vec![0; arity];
    for &i in support {
        v[i] = e;
    }
    Monomial::from_exponents(v)
}

/// Lexicographically least irreducible corner monomial with support of size `k`.
fn best_of_size(
    arity: usize,
    leading: &[Monomial],
    k: usize,
    e: u32,
    tested: &mut usize,
) -> Option<Monomial> {
    combinations(arity, k)
        .into_iter()
        .filter_map(|sub| {
            *tested += 1;
            let m = corner(arity, &sub, e);
            irr_member(leading, &m).then_some(m)
        })
        .min()
}

/// The GK dimension of `k[X|S]` from the leading monomials of a Gröbner basis,
/// testing only monomials whose exponents lie in `{0, C_S + 1}`.
pub fn gk_fast(arity: usize, leading: &[Monomial]) -> GkReportCom {
    let c_s = c_constant(leading);
    let mut tested = 0;
    for k in (1..=arity).rev() {
        if let Some(w) = best_of_size(arity, leading, k, c_s + 1, &mut tested) {
            return GkReportCom {
                c_s,
                gk: k,
                witness: Some(w),
                candidate_count: tested,
            };
        }
    }
    GkReportCom {
        c_s,
        gk: 0,
        witness: None,
        candidate_count: tested,
    }
}

/// Oracle for [`gk_fast`]: maximum `Sd` over every irreducible monomial in
/// the box `{0, ..., C_S + 1}^r`.
pub fn gk_box_sweep(arity: usize, leading: &[Monomial]) -> usize {
    let c = c_constant(leading);
    let mut best = 0;
    let mut e = vec![0u32; arity];
    loop {
        let m = Monomial::from_exponents(e.clone());
        if irr_member(leading, &m) {
            best = best.max(sd_value(&m, c));
        }
        let Some(i) = e.iter().position(|&x| x <= c) else {
            return best;
        };
        e[i] += 1;
        e[..i].iter_mut().for_each(|x| *x = 0);
    }
}

/// GK dimension after adjoining the monomial `u` to a monomial set `S` whose
/// dimension `report.gk = p ≥ 1` is known.
///
/// The answer is `p` exactly when a corner monomial on `p` variables, with
/// exponent `C_{S∪{u}} + 1`, survives in `Irr(S ∪ {u})`; otherwise it is `p - 1`.
pub fn gk_after_adding(
    leading: &[Monomial],
    u: &Monomial,
    report: &GkReportCom,
) -> Result<GkReportCom> {
    let p = report.gk;
    if p == 0 {
        return Err(Error::Precondition(
            "gk_after_adding needs a quotient of positive GK dimension".into(),
        ));
    }
    if leading.is_empty() || u.is_one() || leading.iter().any(Monomial::is_one) {
        return Err(Error::Precondition(
            "gk_after_adding needs a nonempty set of non-unit monomials and a non-unit u".into(),
        ));
    }
    let arity = u.arity();
    let mut enlarged = leading.to_vec();
    enlarged.push(u.clone());
    let c_s = c_constant(&enlarged);
    let mut tested = 0;
    let (gk, witness) = match best_of_size(arity, &enlarged, p, c_s + 1, &mut tested) {
        Some(w) => (p, Some(w)),
        None if p == 1 => (0, None),
        None => {
            let w = best_of_size(arity, &enlarged, p - 1, c_s + 1, &mut tested)
                .expect("adjoining one monomial lowers the dimension by at most one");
            (p - 1, Some(w))
        }
    };
    Ok(GkReportCom {
        c_s,
        gk,
        witness,
        candidate_count: tested,
    })
}

/// The eventual-polynomial degree of `n ↦ #{u ∈ Irr(S) | ℓ(u) ≤ n}` sampled on `0..=n_max`.
pub fn growth_degree(
    arity: usize,
    leading: &[Monomial],
    n_max: u64,
    budget: usize,
) -> Result<usize> {
    let counts: Vec<BigInt> = growth_counts(arity, leading, n_max, budget)?
        .into_iter()
        .map(BigInt::from)
        .collect();
    eventual_degree(&counts, default_window(n_max), arity + 1)
}
