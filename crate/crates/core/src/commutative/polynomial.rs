use std::cmp::Ordering;
use std::fmt;

use num_traits::{One, Signed, Zero};

use super::{ComOrder, Monomial};
use crate::rational::{fmt_abs, is_unit_magnitude};
use crate::{Rational, VarSet};

/// A polynomial in `k[X]` with rational coefficients.
///
/// Terms are kept sorted by the polynomial's order, largest first, with no
/// zero coefficients; the zero polynomial has no terms.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ComPolynomial {
    order: ComOrder,
    terms: Vec<(Monomial, Rational)>,
}

impl ComPolynomial {
    pub fn zero(order: ComOrder) -> Self {
        ComPolynomial {
            order,
            terms: Vec::new(),
        }
    }

    pub fn monomial(order: ComOrder, m: Monomial) -> Self {
        Self::term(order, m, Rational::one())
    }

    pub fn term(order: ComOrder, m: Monomial, c: Rational) -> Self {
        Self::from_terms(order, [(m, c)])
    }

    /// Collects like terms and drops zeros.
    pub fn from_terms<I>(order: ComOrder, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, Rational)>,
    {
        let mut terms: Vec<(Monomial, Rational)> = terms.into_iter().collect();
        terms.sort_by(|a, b| order.compare(&b.0, &a.0));
        let mut out: Vec<(Monomial, Rational)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => *lc += c,
                _ => out.push((m, c)),
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        ComPolynomial { order, terms: out }
    }

    pub fn order(&self) -> ComOrder {
        self.order
    }

    pub fn terms(&self) -> &[(Monomial, Rational)] {
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

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|(m, _)| m)
    }

    pub fn leading_coefficient(&self) -> Option<&Rational> {
        self.terms.first().map(|(_, c)| c)
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coefficient().is_some_and(|c| c.is_one())
    }

    /// True when the polynomial is a single monomial with coefficient one.
    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1 && self.is_monic()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms
            .iter()
            .find(|(t, _)| t == m)
            .map(|(_, c)| c.clone())
            .unwrap_or_else(Rational::zero)
    }

    /// Scales by the inverse leading coefficient. Zero stays zero.
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
        ComPolynomial {
            order: self.order,
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, w: &Monomial) -> Self {
        // monomial orders are compatible with multiplication, so the term
        // order is preserved
        ComPolynomial {
            order: self.order,
            terms: self.terms.iter().map(|(m, a)| (m.mul(w), a.clone())).collect(),
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
        ComPolynomial {
            order: self.order,
            terms: out,
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut acc = Self::zero(self.order);
        for (m, c) in &other.terms {
            acc = acc.combine(&self.mul_monomial(m), c);
        }
        acc
    }

    /// The same polynomial re-sorted under another order.
    pub fn with_order(&self, order: ComOrder) -> Self {
        Self::from_terms(order, self.terms.iter().cloned())
    }

    pub fn display<'a>(&'a self, vars: &'a VarSet) -> impl fmt::Display + 'a {
        DisplayPoly { p: self, vars }
    }

    pub(crate) fn drop_leading(&mut self) -> Option<(Monomial, Rational)> {
        if self.terms.is_empty() {
            None
        } else {
            Some(self.terms.remove(0))
        }
    }
}

struct DisplayPoly<'a> {
    p: &'a ComPolynomial,
    vars: &'a VarSet,
}

impl fmt::Display for DisplayPoly<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.p.is_zero() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.p.terms.iter().enumerate() {
            let neg = c.is_negative();
            match (k, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if m.is_one() {
                f.write_str(&fmt_abs(c))?;
            } else if is_unit_magnitude(c) {
                write!(f, "{}", m.display(self.vars))?;
            } else {
                write!(f, "{} {}", fmt_abs(c), m.display(self.vars))?;
            }
        }
        Ok(())
    }
}
