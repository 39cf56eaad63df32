use super::{ComOrder, ComPolynomial, Monomial};
use crate::Rational;

/// Result of dividing `f` by a list of polynomials:
/// `f = remainder + Σ quotients[i] · basis[i]`.
#[derive(Clone, Debug)]
pub struct Division {
    pub remainder: ComPolynomial,
    pub quotients: Vec<ComPolynomial>,
}

/// Multivariate division of `f` by `basis`.
///
/// The first basis element whose leading monomial divides the current term is
/// used. With `tail` off, division stops as soon as the leading term is
/// irreducible; with `tail` on, every term of the remainder is irreducible.
pub fn reduce(f: &ComPolynomial, basis: &[ComPolynomial], tail: bool) -> Division {
    let order = f.order();
    let mut quotients = vec![ComPolynomial::zero(order); basis.len()];
    let mut p = f.clone();
    let mut done: Vec<(Monomial, Rational)> = Vec::new();

    while let Some((m, c)) = p.terms().first().cloned() {
        let hit = basis.iter().enumerate().find_map(|(i, g)| {
            let lm = g.leading_monomial()?;
            m.quotient(lm).map(|w| (i, w))
        });
        match hit {
            Some((i, w)) => {
                let g = &basis[i];
                let k = c / g.leading_coefficient().expect("nonzero divisor");
                p = p.combine(&g.mul_monomial(&w), &-k.clone());
                quotients[i] = quotients[i].add(&ComPolynomial::term(order, w, k));
            }
            None if tail => {
                p.drop_leading();
                done.push((m, c));
            }
            None => break,
        }
    }
    // every collected term is larger than everything left in p
    done.extend(p.terms().iter().cloned());
    Division {
        remainder: ComPolynomial::from_terms(order, done),
        quotients,
    }
}

pub fn s_polynomial(f: &ComPolynomial, g: &ComPolynomial) -> ComPolynomial {
    let (lf, lg) = (
        f.leading_monomial().expect("nonzero"),
        g.leading_monomial().expect("nonzero"),
    );
    let l = lf.lcm(lg);
    let a = f
        .mul_monomial(&l.quotient(lf).unwrap())
        .scale(&f.leading_coefficient().unwrap().recip());
    let b = g
        .mul_monomial(&l.quotient(lg).unwrap())
        .scale(&g.leading_coefficient().unwrap().recip());
    a.sub(&b)
}

/// Buchberger completion with the normal selection strategy.
///
/// Pairs are processed by increasing lcm of their leading monomials; pairs
/// with coprime leading monomials are skipped. The result is the reduced
/// Groebner basis of the ideal, sorted by increasing leading monomial.
/// Zero generators are ignored.
pub fn buchberger(gens: &[ComPolynomial], order: ComOrder) -> Vec<ComPolynomial> {
    let mut basis: Vec<ComPolynomial> = gens
        .iter()
        .filter(|p| !p.is_zero())
        .map(|p| p.with_order(order).monic())
        .collect();
    let mut pairs: Vec<(usize, usize, Monomial)> = Vec::new();
    for j in 0..basis.len() {
        for i in 0..j {
            pairs.push(pair_entry(&basis, i, j));
        }
    }

    while !pairs.is_empty() {
        let mut best = 0;
        for k in 1..pairs.len() {
            let ord = order.compare(&pairs[k].2, &pairs[best].2);
            if ord.is_lt() || (ord.is_eq() && (pairs[k].0, pairs[k].1) < (pairs[best].0, pairs[best].1)) {
                best = k;
            }
        }
        let (i, j, l) = pairs.swap_remove(best);
        let (li, lj) = (
            basis[i].leading_monomial().unwrap(),
            basis[j].leading_monomial().unwrap(),
        );
        if l == li.mul(lj) {
            continue;
        }
        let s = s_polynomial(&basis[i], &basis[j]);
        let rem = reduce(&s, &basis, false).remainder;
        if !rem.is_zero() {
            basis.push(rem.monic());
            let n = basis.len() - 1;
            for k in 0..n {
                pairs.push(pair_entry(&basis, k, n));
            }
        }
    }
    reduced(basis)
}

fn pair_entry(basis: &[ComPolynomial], i: usize, j: usize) -> (usize, usize, Monomial) {
    let l = basis[i]
        .leading_monomial()
        .unwrap()
        .lcm(basis[j].leading_monomial().unwrap());
    (i, j, l)
}

fn reduced(basis: Vec<ComPolynomial>) -> Vec<ComPolynomial> {
    let Some(order) = basis.first().map(|p| p.order()) else {
        return basis;
    };
    let minimal = minimal_gb(&basis, order);
    let mut out: Vec<ComPolynomial> = (0..minimal.len())
        .map(|i| {
            let others: Vec<ComPolynomial> = minimal
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, p)| p.clone())
                .collect();
            reduce(&minimal[i], &others, true).remainder.monic()
        })
        .collect();
    sort_by_leading(&mut out);
    out
}

pub(crate) fn sort_by_leading(basis: &mut [ComPolynomial]) {
    basis.sort_by(|a, b| {
        let order = a.order();
        order.compare(a.leading_monomial().unwrap(), b.leading_monomial().unwrap())
    });
}

/// Keeps one element per minimal leading monomial: after sorting by leading
/// monomial, an element survives iff no survivor's leading monomial divides
/// its own. The survivors are made monic.
pub fn minimal_gb(basis: &[ComPolynomial], order: ComOrder) -> Vec<ComPolynomial> {
    let mut sorted: Vec<ComPolynomial> = basis
        .iter()
        .filter(|p| !p.is_zero())
        .map(|p| p.with_order(order).monic())
        .collect();
    sort_by_leading(&mut sorted);
    let mut kept: Vec<ComPolynomial> = Vec::new();
    for p in sorted {
        let lm = p.leading_monomial().unwrap();
        if !kept.iter().any(|k| k.leading_monomial().unwrap().divides(lm)) {
            kept.push(p);
        }
    }
    kept
}

/// Every S-polynomial and every listed polynomial reduces to zero.
#[cfg(test)]
pub(crate) fn is_groebner(basis: &[ComPolynomial]) -> bool {
    for j in 0..basis.len() {
        for i in 0..j {
            let s = s_polynomial(&basis[i], &basis[j]);
            if !reduce(&s, basis, true).remainder.is_zero() {
                return false;
            }
        }
    }
    basis.iter().all(|p| p.is_monic())
}
