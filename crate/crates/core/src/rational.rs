use num_traits::{One, Signed, Zero};

/// Arbitrary-precision rational coefficient.
pub type Rational = num_rational::BigRational;

#[cfg(test)]
pub(crate) fn int(n: i64) -> Rational {
    Rational::from_integer(num_bigint::BigInt::from(n))
}

/// Writes `|c|` the way polynomial printers want it: `3`, `3/2`.
pub(crate) fn fmt_abs(c: &Rational) -> String {
    let a = c.abs();
    if a.denom().is_one() {
        a.numer().to_string()
    } else {
        format!("{}/{}", a.numer(), a.denom())
    }
}

pub(crate) fn is_unit_magnitude(c: &Rational) -> bool {
    !c.is_zero() && c.abs().is_one()
}
