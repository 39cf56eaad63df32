use bicomm_core::commutative::{
    buchberger, c_constant, gk_fast, growth_degree, irr_member, leading_monomials, minimal_gb,
    reduce, s_polynomial, ComOrder, ComPolynomial, Monomial,
};
use bicomm_core::presentation::{parse_presentation, Presentation};
use bicomm_core::quotient::ComQuotient;
use bicomm_core::Rational;
use proptest::prelude::*;

fn all_monomials(r: usize, max: u32) -> Vec<Monomial> {
    let mut out = vec![Monomial::one(r)];
    for _ in 0..max {
        let mut next = Vec::new();
        for m in &out {
            for i in 0..r {
                next.push(m.mul_var(i));
            }
        }
        out.extend(next);
        out.sort();
        out.dedup();
    }
    out
}

fn poly(r: usize) -> impl Strategy<Value = ComPolynomial> {
    prop::collection::vec((prop::collection::vec(0u32..3, r), -3i64..4), 1..4).prop_map(|ts| {
        ComPolynomial::from_terms(
            ComOrder::DegLex,
            ts.into_iter()
                .map(|(e, c)| (Monomial::from_exponents(e), Rational::from_integer(c.into()))),
        )
    })
}

#[test]
fn presentation_example_end_to_end() {
    let text = "algebra commutative\nvars x1 x2 x3 x4 x5 x6\norder deglex\nrel x1^2 x2^3\nrel x3 x4\n";
    let Presentation::Commutative(p) = parse_presentation(text).unwrap() else {
        panic!("wrong kind")
    };
    let q = ComQuotient::new(&p);
    let rep = q.gk();
    assert_eq!((rep.c_s, rep.gk), (3, 4));
    assert_eq!(q.gk_oracle(), 4);
    assert_eq!(growth_degree(6, &q.leading(), 40, 10_000_000).unwrap(), 4);
}

#[test]
fn polynomial_relations_go_through_buchberger() {
    // x2^2 = x1 and x1 x2 = x2 give a finite-dimensional quotient
    let text = "algebra commutative\nvars x1 x2\nrel x2^2 - x1\nrel x1 x2 - x2\n";
    let Presentation::Commutative(p) = parse_presentation(text).unwrap() else {
        panic!()
    };
    let q = ComQuotient::new(&p);
    assert_eq!(q.basis.len(), 3);
    assert_eq!(q.gk().gk, 0);
    assert_eq!(c_constant(&q.leading()), 2);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn minimal_gb_preserves_irr(gens in prop::collection::vec(poly(2), 1..4)) {
        let t = buchberger(&gens, ComOrder::DegLex);
        let mut padded = t.clone();
        for g in &t {
            padded.push(g.mul_monomial(&Monomial::var(2, 0)));
        }
        let m = minimal_gb(&padded, ComOrder::DegLex);
        let (lt, lm) = (leading_monomials(&padded), leading_monomials(&m));
        for (i, a) in lm.iter().enumerate() {
            for (j, b) in lm.iter().enumerate() {
                prop_assert!(i == j || !a.divides(b));
            }
        }
        for u in all_monomials(2, 8) {
            prop_assert_eq!(irr_member(&lt, &u), irr_member(&lm, &u));
        }
    }

    #[test]
    fn generators_reduce_to_zero(gens in prop::collection::vec(poly(3), 1..3)) {
        let t = buchberger(&gens, ComOrder::DegLex);
        for g in &gens {
            prop_assert!(reduce(g, &t, true).remainder.is_zero());
        }
        for i in 0..t.len() {
            for j in i + 1..t.len() {
                prop_assert!(reduce(&s_polynomial(&t[i], &t[j]), &t, true).remainder.is_zero());
            }
        }
    }

    #[test]
    fn monomial_sets_are_their_own_bases(es in prop::collection::vec(prop::collection::vec(0u32..4, 3), 1..5)) {
        let gens: Vec<ComPolynomial> = es
            .iter()
            .map(|e| ComPolynomial::monomial(ComOrder::DegLex, Monomial::from_exponents(e.clone())))
            .collect();
        let t = buchberger(&gens, ComOrder::DegLex);
        let m = minimal_gb(&gens, ComOrder::DegLex);
        prop_assert_eq!(leading_monomials(&t), leading_monomials(&m));
        prop_assert!(t.iter().all(ComPolynomial::is_monomial));
    }

    #[test]
    fn lex_and_deglex_agree_on_dimension(gens in prop::collection::vec(poly(2), 1..3)) {
        let a = buchberger(&gens, ComOrder::DegLex);
        let b = buchberger(&gens, ComOrder::Lex);
        prop_assert_eq!(gk_fast(2, &leading_monomials(&a)).gk, gk_fast(2, &leading_monomials(&b)).gk);
    }
}
