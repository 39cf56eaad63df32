use std::cmp::Ordering;
use std::fmt;

use num_traits::{One, Signed, Zero};

use super::{NfMonomial, NfOrder};
use crate::commutative::Monomial;
use crate::rational::{fmt_abs, is_unit_magnitude};
use crate::{Rational, VarSet};

/// An element of the free bicommutative algebra `BC(X)` in the `NF(X)` basis.
///
/// Terms are sorted largest first under the polynomial's order, with no zero
/// coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BcPolynomial {
    order: NfOrder,
    terms: Vec<(NfMonomial, Rational)>,
}

impl BcPolynomial {
    pub fn zero(order: NfOrder) -> Self {
        BcPolynomial {
            order,
            terms: Vec::new(),
        }
    }

    pub fn monomial(order: NfOrder, m: NfMonomial) -> Self {
        BcPolynomial {
            order,
            terms: vec![(m, Rational::one())],
        }
    }

    pub fn term(order: NfOrder, m: NfMonomial, c: Rational) -> Self {
        Self::from_terms(order, [(m, c)])
    }

    /// Collects like terms and drops zeros.
    pub fn from_terms<I>(order: NfOrder, terms: I) -> Self
    where
        I: IntoIterator<Item = (NfMonomial, Rational)>,
    {
        let mut terms: Vec<(NfMonomial, Rational)> = terms.into_iter().collect();
        terms.sort_by(|a, b| order.compare(&b.0, &a.0));
        let mut out: Vec<(NfMonomial, Rational)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => *lc += c,
                _ => out.push((m, c)),
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        BcPolynomial { order, terms: out }
    }

    pub fn order(&self) -> NfOrder {
        self.order
    }

    pub fn terms(&self) -> &[(NfMonomial, Rational)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading_monomial(&self) -> Option<&NfMonomial> {
        self.terms.first().map(|(m, _)| m)
    }

    pub fn leading_coefficient(&self) -> Option<&Rational> {
        self.terms.first().map(|(_, c)| c)
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coefficient().is_some_and(|c| c.is_one())
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1 && self.is_monic()
    }

    /// True when some letter occurs with nonzero coefficient.
    pub fn has_letter_term(&self) -> bool {
        self.terms.iter().any(|(m, _)| m.is_letter())
    }

    pub fn coefficient(&self, m: &NfMonomial) -> Rational {
        self.terms
            .iter()
            .find(|(t, _)| t == m)
            .map(|(_, c)| c.clone())
            .unwrap_or_else(Rational::zero)
    }

    pub fn monic(&self) -> Self {
        match self.leading_coefficient() {
            Some(lc) if !lc.is_one() => {
                let inv = lc.recip();
                self.scale(&inv)
            }
            _ => self.clone(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.order);
        }
        BcPolynomial {
            order: self.order,
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.combine(other, &Rational::one())
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.combine(other, &-Rational::one())
    }

    /// `self + k · other`.
    pub fn combine(&self, other: &Self, k: &Rational) -> Self {
        assert_eq!(self.order, other.order, "polynomials under different orders");
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            let (a, ca) = &self.terms[i];
            let (b, cb) = &other.terms[j];
            match self.order.compare(a, b) {
                Ordering::Greater => {
                    out.push((a.clone(), ca.clone()));
                    i += 1;
                }
                Ordering::Less => {
                    out.push((b.clone(), cb * k));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = ca + cb * k;
                    if !c.is_zero() {
                        out.push((a.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(self.terms[i..].iter().cloned());
        out.extend(other.terms[j..].iter().map(|(m, c)| (m.clone(), c * k)));
        BcPolynomial {
            order: self.order,
            terms: out,
        }
    }

    fn map_monomials(&self, f: impl Fn(&NfMonomial) -> NfMonomial) -> Self {
        Self::from_terms(self.order, self.terms.iter().map(|(m, c)| (f(m), c.clone())))
    }

    /// `(z f)` for the letter `z`.
    pub fn left_mul_letter(&self, z: usize) -> Self {
        let zl = NfMonomial::letter(self.arity_or(z + 1), z);
        self.map_monomials(|m| zl.mul(m))
    }

    /// `(f z)` for the letter `z`.
    pub fn right_mul_letter(&self, z: usize) -> Self {
        let zl = NfMonomial::letter(self.arity_or(z + 1), z);
        self.map_monomials(|m| m.mul(&zl))
    }

    /// Applies `[z_1,…,z_p,[·, y_1,…,y_q]_L]_R` to every term.
    pub fn bracket(&self, zc: &Monomial, yc: &Monomial) -> Self {
        self.map_monomials(|m| m.bracket(zc, yc))
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut terms = Vec::with_capacity(self.len() * other.len());
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                terms.push((a.mul(b), ca * cb));
            }
        }
        Self::from_terms(self.order, terms)
    }

    pub fn with_order(&self, order: NfOrder) -> Self {
        Self::from_terms(order, self.terms.iter().cloned())
    }

    fn arity_or(&self, fallback: usize) -> usize {
        self.leading_monomial().map_or(fallback, NfMonomial::arity)
    }

    pub fn display<'a>(&'a self, vars: &'a VarSet) -> impl fmt::Display + 'a {
        DisplayPoly { p: self, vars }
    }

    pub(crate) fn drop_leading(&mut self) -> Option<(NfMonomial, Rational)> {
        if self.terms.is_empty() {
            None
        } else {
            Some(self.terms.remove(0))
        }
    }
}

struct DisplayPoly<'a> {
    p: &'a BcPolynomial,
    vars: &'a VarSet,
}

impl fmt::Display for DisplayPoly<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.p.is_zero() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.p.terms.iter().enumerate() {
            match (k, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if is_unit_magnitude(c) {
                write!(f, "{}", m.display(self.vars))?;
            } else {
                write!(f, "{} {}", fmt_abs(c), m.display(self.vars))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    fn p(u: &[u32], v: &[u32]) -> NfMonomial {
        NfMonomial::pair(
            Monomial::from_exponents(u.to_vec()),
            Monomial::from_exponents(v.to_vec()),
        )
        .unwrap()
    }

    #[test]
    fn letter_multiplication() {
        let ord = NfOrder::a();
        let f = BcPolynomial::from_terms(
            ord,
            [(NfMonomial::letter(2, 1), int(1)), (NfMonomial::letter(2, 0), int(-1))],
        );
        assert_eq!(f.leading_monomial(), Some(&NfMonomial::letter(2, 0)));
        let g = f.left_mul_letter(0);
        assert_eq!(
            g,
            BcPolynomial::from_terms(ord, [(p(&[1, 0], &[0, 1]), int(1)), (p(&[1, 0], &[1, 0]), int(-1))])
        );
        let h = f.right_mul_letter(1);
        assert_eq!(h.leading_monomial(), Some(&p(&[1, 0], &[0, 1])));
    }

    #[test]
    fn display() {
        let vars = VarSet::numbered(3);
        let f = BcPolynomial::from_terms(
            NfOrder::a(),
            [
                (p(&[1, 0, 0], &[0, 1, 0]), int(1)),
                (NfMonomial::letter(3, 2), int(3)),
                (p(&[0, 2, 0], &[0, 0, 1]), int(-1) / int(2)),
            ],
        );
        assert_eq!(f.display(&vars).to_string(), "-1/2 [x2^2; x3] + [x1; x2] + 3 x3");
    }
}
