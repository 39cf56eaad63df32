use std::fmt;

use crate::commutative::Monomial;
use crate::{Error, Result, VarSet};

/// An element of the normal-form basis `NF(X)` of the free bicommutative
/// algebra: a letter, or a pair `[u;v]` of nonempty commutative monomials.
///
/// Pairs multiply by the table
/// `z·y = [z;y]`, `z·[u;v] = [zu;v]`, `[u;v]·z = [u;vz]`,
/// `[u;v]·[u';v'] = [uu';vv']`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum NfMonomial {
    Letter { var: usize, arity: usize },
    Pair { left: Monomial, right: Monomial },
}

impl NfMonomial {
    pub fn letter(arity: usize, var: usize) -> Self {
        assert!(var < arity, "letter index out of range");
        NfMonomial::Letter { var, arity }
    }

    /// `[u;v]`. Both sides must be nonempty.
    pub fn pair(left: Monomial, right: Monomial) -> Result<Self> {
        if left.is_one() || right.is_one() {
            return Err(Error::Usage("both sides of [u;v] must be nonempty".into()));
        }
        if left.arity() != right.arity() {
            return Err(Error::Usage("sides of [u;v] over different variable sets".into()));
        }
        Ok(NfMonomial::Pair { left, right })
    }

    pub(crate) fn pair_unchecked(left: Monomial, right: Monomial) -> Self {
        debug_assert!(!left.is_one() && !right.is_one());
        NfMonomial::Pair { left, right }
    }

    pub fn arity(&self) -> usize {
        match self {
            NfMonomial::Letter { arity, .. } => *arity,
            NfMonomial::Pair { left, .. } => left.arity(),
        }
    }

    pub fn is_letter(&self) -> bool {
        matches!(self, NfMonomial::Letter { .. })
    }

    /// `ℓ(μ)`, the number of letters.
    pub fn length(&self) -> u64 {
        match self {
            NfMonomial::Letter { .. } => 1,
            NfMonomial::Pair { left, right } => left.degree() + right.degree(),
        }
    }

    /// `cont(μ)` as a commutative monomial.
    pub fn content(&self) -> Monomial {
        match self {
            NfMonomial::Letter { var, arity } => Monomial::var(*arity, *var),
            NfMonomial::Pair { left, right } => left.mul(right),
        }
    }

    /// The product in `BC(X)`, which is again a basis element.
    pub fn mul(&self, other: &NfMonomial) -> NfMonomial {
        use NfMonomial::*;
        assert_eq!(self.arity(), other.arity(), "monomials over different variable sets");
        match (self, other) {
            (a @ Letter { .. }, b @ Letter { .. }) => Pair {
                left: a.content(),
                right: b.content(),
            },
            (z @ Letter { .. }, Pair { left, right }) => Pair {
                left: z.content().mul(left),
                right: right.clone(),
            },
            (Pair { left, right }, z @ Letter { .. }) => Pair {
                left: left.clone(),
                right: right.mul(&z.content()),
            },
            (Pair { left: u, right: v }, Pair { left: u2, right: v2 }) => Pair {
                left: u.mul(u2),
                right: v.mul(v2),
            },
        }
    }

    /// `[z_1,…,z_p,[μ, y_1,…,y_q]_L]_R` where `zc = z_1⋯z_p`, `yc = y_1⋯y_q`.
    ///
    /// Only the multisets of cofactor letters matter.
    pub fn bracket(&self, zc: &Monomial, yc: &Monomial) -> NfMonomial {
        match self {
            NfMonomial::Pair { left, right } => NfMonomial::Pair {
                left: zc.mul(left),
                right: right.mul(yc),
            },
            x @ NfMonomial::Letter { .. } => match (zc.is_one(), yc.is_one()) {
                (true, true) => x.clone(),
                (_, false) => NfMonomial::Pair {
                    left: zc.mul(&x.content()),
                    right: yc.clone(),
                },
                (false, true) => NfMonomial::Pair {
                    left: zc.clone(),
                    right: x.content(),
                },
            },
        }
    }

    /// NF divisibility: a letter divides `ν` iff it occurs in `ν`; a pair
    /// divides a pair componentwise; a pair never divides a letter.
    pub fn divides(&self, other: &NfMonomial) -> bool {
        match (self, other) {
            (NfMonomial::Letter { var, .. }, o) => o.content().exponents()[*var] > 0,
            (NfMonomial::Pair { .. }, NfMonomial::Letter { .. }) => false,
            (NfMonomial::Pair { left, right }, NfMonomial::Pair { left: u, right: v }) => {
                left.divides(u) && right.divides(v)
            }
        }
    }

    /// Cofactors `(zc, yc)` with `self.bracket(zc, yc) == other`, for pairs.
    pub fn cofactors(&self, other: &NfMonomial) -> Option<(Monomial, Monomial)> {
        match (self, other) {
            (NfMonomial::Pair { left, right }, NfMonomial::Pair { left: u, right: v }) => {
                Some((u.quotient(left)?, v.quotient(right)?))
            }
            _ => None,
        }
    }

    /// `[lcm(u,u'); lcm(v,v')]`, defined for pairs only.
    pub fn lcm(&self, other: &NfMonomial) -> Result<NfMonomial> {
        match (self, other) {
            (NfMonomial::Pair { left, right }, NfMonomial::Pair { left: u, right: v }) => {
                Ok(NfMonomial::Pair {
                    left: left.lcm(u),
                    right: right.lcm(v),
                })
            }
            _ => Err(Error::Usage("lcm is defined for pairs [u;v] only".into())),
        }
    }

    pub fn display<'a>(&'a self, vars: &'a VarSet) -> impl fmt::Display + 'a {
        DisplayNf { m: self, vars }
    }
}

struct DisplayNf<'a> {
    m: &'a NfMonomial,
    vars: &'a VarSet,
}

impl fmt::Display for DisplayNf<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.m {
            NfMonomial::Letter { var, .. } => f.write_str(self.vars.name(*var)),
            NfMonomial::Pair { left, right } => write!(
                f,
                "[{}; {}]",
                left.display(self.vars),
                right.display(self.vars)
            ),
        }
    }
}
