use std::fmt;

use crate::VarSet;

/// An element of the free commutative monoid `[X]`, stored as its exponent
/// vector `(n_1, ..., n_r)`. The all-zero vector is the unit `ε`.
///
/// Binary operations require both operands to have the same arity and panic
/// otherwise.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn one(arity: usize) -> Self {
        Monomial(vec![0; arity])
    }

    pub fn var(arity: usize, i: usize) -> Self {
        let mut e = vec![0; arity];
        e[i] = 1;
        Monomial(e)
    }

    pub fn from_exponents(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn arity(&self) -> usize {
        self.0.len()
    }

    /// `ℓ(u)`, the total degree.
    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn max_exponent(&self) -> u32 {
        self.0.iter().copied().max().unwrap_or(0)
    }

    /// Indices of the variables that occur.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().filter(|(_, &e)| e > 0).map(|(i, _)| i)
    }

    fn check(&self, other: &Monomial) {
        assert_eq!(
            self.arity(),
            other.arity(),
            "monomials over different variable sets"
        );
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        self.check(other);
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn mul_var(&self, i: usize) -> Monomial {
        let mut e = self.0.clone();
        e[i] += 1;
        Monomial(e)
    }

    /// `self | other`.
    pub fn divides(&self, other: &Monomial) -> bool {
        self.check(other);
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// The `w` with `divisor · w = self`, if `divisor | self`.
    pub fn quotient(&self, divisor: &Monomial) -> Option<Monomial> {
        self.check(divisor);
        self.0
            .iter()
            .zip(&divisor.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(Monomial)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        self.check(other);
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    /// Expands the monomial into its letters with multiplicity, in variable
    /// order.
    pub fn letters(&self) -> Vec<usize> {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(i, &e)| std::iter::repeat(i).take(e as usize))
            .collect()
    }

    pub fn display<'a>(&'a self, vars: &'a VarSet) -> impl fmt::Display + 'a {
        DisplayMonomial { m: self, vars }
    }
}

struct DisplayMonomial<'a> {
    m: &'a Monomial,
    vars: &'a VarSet,
}

impl fmt::Display for DisplayMonomial<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.m.is_one() {
            return f.write_str("1");
        }
        let mut first = true;
        for (i, &e) in self.m.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            f.write_str(self.vars.name(i))?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}
