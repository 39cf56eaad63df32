use std::fmt;

use super::NfMonomial;
use crate::{Result, VarSet};

/// A bracketed word over `X`: a binary tree whose leaves are letters.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum BcTerm {
    Letter(usize),
    App(Box<BcTerm>, Box<BcTerm>),
}

impl BcTerm {
    pub fn app(a: BcTerm, b: BcTerm) -> BcTerm {
        BcTerm::App(Box::new(a), Box::new(b))
    }

    /// Number of leaves.
    pub fn length(&self) -> u64 {
        match self {
            BcTerm::Letter(_) => 1,
            BcTerm::App(a, b) => a.length() + b.length(),
        }
    }

    /// The basis element equal to this term in `BC(X)`.
    pub fn normalize(&self, arity: usize) -> NfMonomial {
        match self {
            BcTerm::Letter(i) => NfMonomial::letter(arity, *i),
            BcTerm::App(a, b) => a.normalize(arity).mul(&b.normalize(arity)),
        }
    }

    pub fn display<'a>(&'a self, vars: &'a VarSet) -> impl fmt::Display + 'a {
        DisplayTerm { t: self, vars }
    }
}

/// Parses a fully parenthesized term such as `(x1 (x2 x3))`.
pub fn parse_term(text: &str, vars: &VarSet) -> Result<BcTerm> {
    crate::presentation::parse_term_text(text, vars)
}

pub fn normalize(t: &BcTerm, arity: usize) -> NfMonomial {
    t.normalize(arity)
}

struct DisplayTerm<'a> {
    t: &'a BcTerm,
    vars: &'a VarSet,
}

impl fmt::Display for DisplayTerm<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.t {
            BcTerm::Letter(i) => f.write_str(self.vars.name(*i)),
            BcTerm::App(a, b) => write!(
                f,
                "({} {})",
                a.display(self.vars),
                b.display(self.vars)
            ),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::commutative::Monomial;
    use proptest::prelude::*;

    fn l(i: usize) -> BcTerm {
        BcTerm::Letter(i)
    }

    fn p(u: &[u32], v: &[u32]) -> NfMonomial {
        NfMonomial::pair(
            Monomial::from_exponents(u.to_vec()),
            Monomial::from_exponents(v.to_vec()),
        )
        .unwrap()
    }

    #[test]
    fn parses() {
        let vars = VarSet::numbered(3);
        assert_eq!(
            parse_term("((x1 x2) x3)", &vars).unwrap(),
            BcTerm::app(BcTerm::app(l(0), l(1)), l(2))
        );
        assert_eq!(
            parse_term("(x1 (x2 x3))", &vars).unwrap(),
            BcTerm::app(l(0), BcTerm::app(l(1), l(2)))
        );
        assert!(parse_term("x1 x2 x3", &vars).is_err());
        assert!(parse_term("(x1 x2 x3)", &vars).is_err());
        assert!(parse_term("(x1 x4)", &vars).is_err());
        assert!(parse_term("((x1 x2)", &vars).is_err());
        let t = parse_term(" ( x1 ( x2 x3 ) ) ", &vars).unwrap();
        assert_eq!(t.display(&vars).to_string(), "(x1 (x2 x3))");
    }

    #[test]
    fn normal_forms() {
        assert_eq!(BcTerm::app(l(0), l(1)).normalize(3), p(&[1, 0, 0], &[0, 1, 0]));
        assert_eq!(
            BcTerm::app(l(0), BcTerm::app(l(1), l(2))).normalize(3),
            p(&[1, 1, 0], &[0, 0, 1])
        );
        assert_eq!(
            BcTerm::app(BcTerm::app(l(0), l(1)), l(2)).normalize(3),
            p(&[1, 0, 0], &[0, 1, 1])
        );
    }

    pub(crate) fn term(r: usize) -> impl Strategy<Value = BcTerm> {
        let leaf = (0..r).prop_map(BcTerm::Letter);
        leaf.prop_recursive(4, 16, 2, |inner| {
            (inner.clone(), inner).prop_map(|(a, b)| BcTerm::app(a, b))
        })
    }

    proptest! {
        #[test]
        fn bicommutative_identities(x in term(3), y in term(3), z in term(3)) {
            let n = |t: BcTerm| t.normalize(3);
            let app = BcTerm::app;
            prop_assert_eq!(
                n(app(x.clone(), app(y.clone(), z.clone()))),
                n(app(y.clone(), app(x.clone(), z.clone())))
            );
            prop_assert_eq!(
                n(app(app(x.clone(), y.clone()), z.clone())),
                n(app(app(x, z), y))
            );
        }

        #[test]
        fn four_term_identity(a in term(3), b in term(3), c in term(3), d in term(3)) {
            let app = BcTerm::app;
            let lhs = app(app(a.clone(), app(b.clone(), c.clone())), d.clone());
            let rhs = app(a, app(app(b, c), d));
            prop_assert_eq!(lhs.normalize(3), rhs.normalize(3));
        }

        #[test]
        fn length_is_additive(a in term(3), b in term(3)) {
            let (na, nb) = (a.normalize(3), b.normalize(3));
            prop_assert_eq!(na.mul(&nb).length(), na.length() + nb.length());
            prop_assert_eq!(na.length(), a.length());
        }

        #[test]
        fn bracketing_ignores_permutations(
            a in prop::collection::vec(0usize..3, 1..4),
            b in prop::collection::vec(0usize..3, 1..4),
            seed in any::<u64>(),
        ) {
            // [a_1,…,a_p,[a_0, b_1,…,b_q]_L]_R
            let build = |a: &[usize], b: &[usize]| {
                let mut t = BcTerm::Letter(a[0]);
                for &y in b {
                    t = BcTerm::app(t, BcTerm::Letter(y));
                }
                for &z in a[1..].iter().rev() {
                    t = BcTerm::app(BcTerm::Letter(z), t);
                }
                t.normalize(3)
            };
            let rot = |v: &[usize], k: u64| {
                let mut w = v.to_vec();
                let n = w.len();
                if n > 0 {
                    w.rotate_left((k as usize) % n);
                }
                w
            };
            let mut a2 = a.clone();
            let head = a2.remove(0);
            let a2 = rot(&a2, seed).into_iter();
            let a2: Vec<usize> = std::iter::once(head).chain(a2).collect();
            let mut b2 = rot(&b, seed >> 8);
            b2.reverse();
            prop_assert_eq!(build(&a, &b), build(&a2, &b2));
        }
    }
}
