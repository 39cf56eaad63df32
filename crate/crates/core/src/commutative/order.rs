use std::cmp::Ordering;

use super::Monomial;
use crate::{Error, Result};

/// A monomial order on `[X]`.
///
/// Both orders compare exponent vectors lexicographically with a larger
/// exponent on an earlier variable meaning "greater", so `x1 > x2 > ... > xr`.
/// `DegLex` compares total degree first.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum ComOrder {
    #[default]
    DegLex,
    Lex,
}

impl ComOrder {
    /// Panics if the monomials have different arities; see
    /// [`ComOrder::checked_compare`].
    pub fn compare(self, a: &Monomial, b: &Monomial) -> Ordering {
        assert_eq!(a.arity(), b.arity(), "monomials over different variable sets");
        match self {
            ComOrder::DegLex => a
                .degree()
                .cmp(&b.degree())
                .then_with(|| a.exponents().cmp(b.exponents())),
            ComOrder::Lex => a.exponents().cmp(b.exponents()),
        }
    }

    pub fn checked_compare(self, a: &Monomial, b: &Monomial) -> Result<Ordering> {
        if a.arity() != b.arity() {
            return Err(Error::Usage(format!(
                "cannot compare monomials of arity {} and {}",
                a.arity(),
                b.arity()
            )));
        }
        Ok(self.compare(a, b))
    }

    pub fn name(self) -> &'static str {
        match self {
            ComOrder::DegLex => "deglex",
            ComOrder::Lex => "lex",
        }
    }
}
