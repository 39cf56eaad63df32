use std::cmp::Ordering;

use super::NfMonomial;
use crate::commutative::{ComOrder, Monomial};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum NfOrderKind {
    /// Weight `(ℓ(u)+ℓ(v), ℓ(u), u, v)` on pairs and `(1, 1, x, ε)` on letters.
    #[default]
    A,
    /// Weight `(uv, u, v)` on pairs and `(x, x, x)` on letters.
    B,
}

/// A monomial order on `NF(X)`, built from a monomial order on `[X]`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct NfOrder {
    pub kind: NfOrderKind,
    pub base: ComOrder,
}

impl NfOrder {
    pub fn a() -> Self {
        NfOrder {
            kind: NfOrderKind::A,
            base: ComOrder::DegLex,
        }
    }

    pub fn b() -> Self {
        NfOrder {
            kind: NfOrderKind::B,
            base: ComOrder::DegLex,
        }
    }

    pub fn name(self) -> &'static str {
        match self.kind {
            NfOrderKind::A => "nf-A",
            NfOrderKind::B => "nf-B",
        }
    }

    pub fn compare(self, a: &NfMonomial, b: &NfMonomial) -> Ordering {
        match self.kind {
            NfOrderKind::A => self.compare_a(a, b),
            NfOrderKind::B => self.compare_b(a, b),
        }
    }

    fn compare_a(self, a: &NfMonomial, b: &NfMonomial) -> Ordering {
        match (a, b) {
            (NfMonomial::Letter { .. }, NfMonomial::Letter { .. }) => {
                self.base.compare(&a.content(), &b.content())
            }
            (NfMonomial::Letter { .. }, NfMonomial::Pair { .. }) => Ordering::Less,
            (NfMonomial::Pair { .. }, NfMonomial::Letter { .. }) => Ordering::Greater,
            (NfMonomial::Pair { left: u, right: v }, NfMonomial::Pair { left: u2, right: v2 }) => {
                (u.degree() + v.degree())
                    .cmp(&(u2.degree() + v2.degree()))
                    .then(u.degree().cmp(&u2.degree()))
                    .then_with(|| self.base.compare(u, u2))
                    .then_with(|| self.base.compare(v, v2))
            }
        }
    }

    fn compare_b(self, a: &NfMonomial, b: &NfMonomial) -> Ordering {
        let (ca, ua, va) = weight_b(a);
        let (cb, ub, vb) = weight_b(b);
        self.base
            .compare(&ca, &cb)
            .then_with(|| self.base.compare(&ua, &ub))
            .then_with(|| self.base.compare(&va, &vb))
    }
}

fn weight_b(m: &NfMonomial) -> (Monomial, Monomial, Monomial) {
    match m {
        NfMonomial::Letter { .. } => {
            let x = m.content();
            (x.clone(), x.clone(), x)
        }
        NfMonomial::Pair { left, right } => (left.mul(right), left.clone(), right.clone()),
    }
}
