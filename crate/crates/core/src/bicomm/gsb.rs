use super::{BcPolynomial, BcTerm, NfMonomial};
use crate::commutative::Monomial;
use crate::{Error, Rational, Result};

/// `[z_1,…,z_p,[s, y_1,…,y_q]_L]_R` for the basis element `source`, with
/// `left = z_1⋯z_p` and `right = y_1⋯y_q`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NormalSPoly {
    pub source: usize,
    pub left: Monomial,
    pub right: Monomial,
}

/// Realizes a normal S-polynomial. Cofactors are only allowed when `s̄` is a pair.
pub fn normal_s_poly(s: &BcPolynomial, zc: &Monomial, yc: &Monomial) -> Result<BcPolynomial> {
    let lm = s
        .leading_monomial()
        .ok_or_else(|| Error::Usage("the zero polynomial has no normal S-polynomials".into()))?;
    if lm.is_letter() && !(zc.is_one() && yc.is_one()) {
        return Err(Error::Usage(
            "cofactors need a pair leading monomial; a letter-leading relation only rewrites itself"
                .into(),
        ));
    }
    Ok(s.bracket(zc, yc))
}

/// `f = remainder + Σ c · h` over the recorded normal S-polynomials `h`.
#[derive(Clone, Debug)]
pub struct BcDivision {
    pub remainder: BcPolynomial,
    pub witness: Vec<(NormalSPoly, Rational)>,
}

/// Every way of writing `m` as the leading monomial of a normal S-polynomial.
pub fn divisors_of(m: &NfMonomial, basis: &[BcPolynomial]) -> Vec<NormalSPoly> {
    basis
        .iter()
        .enumerate()
        .filter_map(|(i, s)| divisor(m, i, s))
        .collect()
}

fn divisor(m: &NfMonomial, i: usize, s: &BcPolynomial) -> Option<NormalSPoly> {
    let lm = s.leading_monomial()?;
    if lm.is_letter() {
        return (lm == m).then(|| NormalSPoly {
            source: i,
            left: Monomial::one(m.arity()),
            right: Monomial::one(m.arity()),
        });
    }
    let (left, right) = lm.cofactors(m)?;
    Some(NormalSPoly {
        source: i,
        left,
        right,
    })
}

fn first_divisor(m: &NfMonomial, basis: &[BcPolynomial]) -> Option<NormalSPoly> {
    basis
        .iter()
        .enumerate()
        .find_map(|(i, s)| divisor(m, i, s))
}

/// Step counter shared by a whole completion run.
pub(crate) struct Steps {
    pub used: usize,
    pub limit: usize,
}

impl Steps {
    pub fn unlimited() -> Self {
        Steps {
            used: 0,
            limit: usize::MAX,
        }
    }

    fn tick(&mut self) -> std::result::Result<(), ()> {
        self.used += 1;
        if self.used > self.limit {
            Err(())
        } else {
            Ok(())
        }
    }
}

fn reduce_core(
    f: &BcPolynomial,
    basis: &[BcPolynomial],
    tail: bool,
    steps: &mut Steps,
    pick: &mut dyn FnMut(&NfMonomial, &[BcPolynomial]) -> Option<NormalSPoly>,
    witness: Option<&mut Vec<(NormalSPoly, Rational)>>,
) -> std::result::Result<BcPolynomial, ()> {
    let order = f.order();
    let mut p = f.clone();
    let mut done: Vec<(NfMonomial, Rational)> = Vec::new();
    let mut witness = witness;
    while let Some((m, c)) = p.terms().first().cloned() {
        match pick(&m, basis) {
            Some(h) => {
                steps.tick()?;
                let s = &basis[h.source];
                let hp = s.bracket(&h.left, &h.right);
                debug_assert_eq!(hp.leading_monomial(), Some(&m));
                let k = c / hp.leading_coefficient().expect("nonzero");
                p = p.combine(&hp, &-k.clone());
                if let Some(w) = witness.as_deref_mut() {
                    w.push((h, k));
                }
            }
            None if tail => {
                p.drop_leading();
                done.push((m, c));
            }
            None => break,
        }
    }
    done.extend(p.terms().iter().cloned());
    Ok(BcPolynomial::from_terms(order, done))
}

/// Reduction by normal S-polynomials, using the first applicable basis
/// element at each step. With `tail` on every remainder term is irreducible.
pub fn reduce_bc(f: &BcPolynomial, basis: &[BcPolynomial], tail: bool) -> BcDivision {
    reduce_bc_with(f, basis, tail, |_, _| 0)
}

/// Like [`reduce_bc`], but `choose` picks which of the applicable normal
/// S-polynomials to use; it receives the monomial and the candidate list and
/// returns an index into it (taken modulo its length).
pub fn reduce_bc_with<F>(f: &BcPolynomial, basis: &[BcPolynomial], tail: bool, mut choose: F) -> BcDivision
where
    F: FnMut(&NfMonomial, &[NormalSPoly]) -> usize,
{
    let mut witness = Vec::new();
    let mut pick = |m: &NfMonomial, b: &[BcPolynomial]| {
        let cands = divisors_of(m, b);
        if cands.is_empty() {
            None
        } else {
            let k = choose(m, &cands) % cands.len();
            Some(cands[k].clone())
        }
    };
    let remainder = reduce_core(f, basis, tail, &mut Steps::unlimited(), &mut pick, Some(&mut witness))
        .expect("unlimited");
    BcDivision { remainder, witness }
}

pub(crate) fn reduce_counted(
    f: &BcPolynomial,
    basis: &[BcPolynomial],
    tail: bool,
    steps: &mut Steps,
) -> std::result::Result<BcPolynomial, ()> {
    reduce_core(f, basis, tail, steps, &mut |m, b| first_divisor(m, b), None)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CompositionKind {
    /// `(z f)` for letter-leading `f`.
    LeftMult,
    /// `(f z)` for letter-leading `f`.
    RightMult,
    /// `f - g` with `f̄ = ḡ` a letter.
    Inclusion,
    /// `(y(fz)) - ((yf)z)` for pair-leading `f` with a letter term.
    Multiplication,
    /// The two normal S-polynomials at `lcm(f̄, ḡ)` for pair-leading `f`, `g`.
    Intersection,
}

impl CompositionKind {
    pub fn name(self) -> &'static str {
        match self {
            CompositionKind::LeftMult => "left-mult",
            CompositionKind::RightMult => "right-mult",
            CompositionKind::Inclusion => "inclusion",
            CompositionKind::Multiplication => "multiplication",
            CompositionKind::Intersection => "intersection",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Composition {
    pub kind: CompositionKind,
    /// Indices into the basis the composition was built from.
    pub sources: Vec<usize>,
    /// The letters `z` (kind 1) or `y, z` (multiplication compositions).
    pub letters: Vec<usize>,
    pub value: BcPolynomial,
    /// `lm(value)` for kind 1, otherwise the monomial at which the two
    /// branches cancel.
    pub bound: NfMonomial,
}

/// All compositions of `basis`, sorted by bound, then kind, sources and letters.
pub fn enumerate_compositions(basis: &[BcPolynomial], arity: usize) -> Vec<Composition> {
    let mut out = Vec::new();
    let order = match basis.first() {
        Some(f) => f.order(),
        None => return out,
    };
    for (i, f) in basis.iter().enumerate() {
        let Some(lm) = f.leading_monomial() else {
            continue;
        };
        if lm.is_letter() {
            for z in 0..arity {
                for (kind, value) in [
                    (CompositionKind::LeftMult, f.left_mul_letter(z)),
                    (CompositionKind::RightMult, f.right_mul_letter(z)),
                ] {
                    let bound = value.leading_monomial().expect("nonzero").clone();
                    out.push(Composition {
                        kind,
                        sources: vec![i],
                        letters: vec![z],
                        value,
                        bound,
                    });
                }
            }
        } else if f.has_letter_term() {
            for y in 0..arity {
                for z in 0..arity {
                    let a = f.right_mul_letter(z).left_mul_letter(y);
                    let b = f.left_mul_letter(y).right_mul_letter(z);
                    let bound = NfMonomial::letter(arity, y)
                        .mul(&lm.mul(&NfMonomial::letter(arity, z)));
                    out.push(Composition {
                        kind: CompositionKind::Multiplication,
                        sources: vec![i],
                        letters: vec![y, z],
                        value: a.sub(&b),
                        bound,
                    });
                }
            }
        }
    }
    for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            let (f, g) = (&basis[i], &basis[j]);
            let (Some(a), Some(b)) = (f.leading_monomial(), g.leading_monomial()) else {
                continue;
            };
            match (a.is_letter(), b.is_letter()) {
                (true, true) if a == b => out.push(Composition {
                    kind: CompositionKind::Inclusion,
                    sources: vec![i, j],
                    letters: vec![],
                    value: f.sub(g),
                    bound: a.clone(),
                }),
                (false, false) => {
                    let l = a.lcm(b).expect("pairs");
                    if l.length() >= a.length() + b.length() {
                        continue;
                    }
                    let (zf, yf) = a.cofactors(&l).expect("lcm is a multiple");
                    let (zg, yg) = b.cofactors(&l).expect("lcm is a multiple");
                    out.push(Composition {
                        kind: CompositionKind::Intersection,
                        sources: vec![i, j],
                        letters: vec![],
                        value: f.bracket(&zf, &yf).sub(&g.bracket(&zg, &yg)),
                        bound: l,
                    });
                }
                _ => {}
            }
        }
    }
    out.sort_by(|x, y| {
        order
            .compare(&x.bound, &y.bound)
            .then(x.kind.cmp(&y.kind))
            .then_with(|| x.sources.cmp(&y.sources))
            .then_with(|| x.letters.cmp(&y.letters))
    });
    out
}

/// A composition that does not reduce to zero, with its remainder.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompositionFailure {
    pub composition: Composition,
    pub remainder: BcPolynomial,
}

/// Outcome of [`gsb_check`] or [`gsb_complete`].
#[derive(Clone, Debug)]
pub struct GsbReport {
    pub basis: Vec<BcPolynomial>,
    /// Reduction steps performed.
    pub steps: usize,
    pub is_complete: bool,
    pub failures: Vec<CompositionFailure>,
}

/// A composition is trivial when it reduces to zero modulo `basis`.
pub fn is_trivial(c: &Composition, basis: &[BcPolynomial]) -> bool {
    reduce_bc(&c.value, basis, false).remainder.is_zero()
}

/// Checks every composition of `basis`.
pub fn gsb_check(basis: &[BcPolynomial], arity: usize) -> GsbReport {
    let mut steps = Steps::unlimited();
    let mut failures = Vec::new();
    for c in enumerate_compositions(basis, arity) {
        let r = reduce_counted(&c.value, basis, true, &mut steps).expect("unlimited");
        if !r.is_zero() {
            failures.push(CompositionFailure {
                composition: c,
                remainder: r,
            });
        }
    }
    GsbReport {
        basis: basis.to_vec(),
        steps: steps.used,
        is_complete: failures.is_empty(),
        failures,
    }
}

pub(crate) fn sort_by_leading(basis: &mut [BcPolynomial]) {
    basis.sort_by(|a, b| {
        let order = a.order();
        order.compare(
            a.leading_monomial().expect("nonzero"),
            b.leading_monomial().expect("nonzero"),
        )
    });
}

fn inter_reduce(
    basis: Vec<BcPolynomial>,
    steps: &mut Steps,
) -> std::result::Result<Vec<BcPolynomial>, ()> {
    let mut b = basis;
    sort_by_leading(&mut b);
    loop {
        let mut changed = false;
        let mut i = 0;
        while i < b.len() {
            let f = b.remove(i);
            let r = reduce_counted(&f, &b, true, steps)?;
            if r.is_zero() {
                changed = true;
                continue;
            }
            let r = r.monic();
            if r != f {
                changed = true;
            }
            b.insert(i, r);
            i += 1;
        }
        if !changed {
            break;
        }
    }
    sort_by_leading(&mut b);
    Ok(b)
}

/// Completes `gens` to a Groebner-Shirshov basis.
///
/// Each round enumerates the compositions of the current basis in increasing
/// bound order, reduces them against the growing basis and adjoins the monic
/// remainders; the basis is then inter-reduced. The loop stops after a round
/// that adjoins nothing. The result is minimal, fully reduced and sorted by
/// increasing leading monomial.
pub fn gsb_complete(gens: &[BcPolynomial], arity: usize, max_steps: usize) -> Result<GsbReport> {
    let mut steps = Steps {
        used: 0,
        limit: max_steps,
    };
    let start: Vec<BcPolynomial> = gens
        .iter()
        .filter(|p| !p.is_zero())
        .map(BcPolynomial::monic)
        .collect();
    let budget = |partial: Vec<BcPolynomial>| Error::CompletionBudget {
        limit: max_steps,
        partial,
    };
    let mut basis = match inter_reduce(start.clone(), &mut steps) {
        Ok(b) => b,
        Err(()) => return Err(budget(start)),
    };
    loop {
        let mut added = false;
        for c in enumerate_compositions(&basis, arity) {
            let r = match reduce_counted(&c.value, &basis, true, &mut steps) {
                Ok(r) => r,
                Err(()) => return Err(budget(basis)),
            };
            if !r.is_zero() {
                basis.push(r.monic());
                added = true;
            }
        }
        if !added {
            break;
        }
        basis = match inter_reduce(basis.clone(), &mut steps) {
            Ok(b) => b,
            Err(()) => return Err(budget(basis)),
        };
    }
    let minimal = minimal_subset(&basis);
    let basis = match inter_reduce(minimal.clone(), &mut steps) {
        Ok(b) => b,
        Err(()) => return Err(budget(minimal)),
    };
    Ok(GsbReport {
        basis,
        steps: steps.used,
        is_complete: true,
        failures: Vec::new(),
    })
}

fn minimal_subset(basis: &[BcPolynomial]) -> Vec<BcPolynomial> {
    let mut sorted: Vec<BcPolynomial> = basis.iter().filter(|p| !p.is_zero()).cloned().collect();
    sort_by_leading(&mut sorted);
    let mut kept: Vec<BcPolynomial> = Vec::new();
    for s in sorted {
        let lm = s.leading_monomial().expect("nonzero");
        if irr_member_bc(&super::leading_monomials(&kept), lm) {
            kept.push(s);
        }
    }
    kept
}

/// Keeps, in increasing order, each element whose leading monomial is
/// irreducible with respect to the elements kept so far.
pub fn minimal_gsb(basis: &[BcPolynomial], arity: usize) -> Result<Vec<BcPolynomial>> {
    if !gsb_check(basis, arity).is_complete {
        return Err(Error::Usage(
            "minimal_gsb needs a Groebner-Shirshov basis; run the completion first".into(),
        ));
    }
    Ok(minimal_subset(basis))
}

/// `m ∈ Irr(S)` given the leading monomials of `S`.
///
/// A pair is reducible when a pair-leading `s̄` divides it; a letter only when
/// it is itself a leading monomial.
pub fn irr_member_bc(leading: &[NfMonomial], m: &NfMonomial) -> bool {
    if m.is_letter() {
        !leading.contains(m)
    } else {
        !leading.iter().any(|s| !s.is_letter() && s.divides(m))
    }
}

/// Decides `t1 = t2` in `BC(X | S)` for a Groebner-Shirshov basis `S`.
pub fn word_problem_eq(t1: &BcTerm, t2: &BcTerm, basis: &[BcPolynomial], arity: usize) -> bool {
    let order = basis.first().map(BcPolynomial::order).unwrap_or_default();
    let a = BcPolynomial::monomial(order, t1.normalize(arity));
    let b = BcPolynomial::monomial(order, t2.normalize(arity));
    reduce_bc(&a.sub(&b), basis, true).remainder.is_zero()
}

/// Checks a division witness: `f - remainder = Σ c · h`.
pub fn witness_holds(f: &BcPolynomial, basis: &[BcPolynomial], d: &BcDivision) -> bool {
    let mut acc = d.remainder.clone();
    for (h, c) in &d.witness {
        acc = acc.combine(&basis[h.source].bracket(&h.left, &h.right), c);
    }
    acc == *f
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bicomm::{leading_monomials, nf_monomials_up_to, NfOrder};
    use crate::presentation::{parse_bc_expr, parse_term_text};
    use crate::VarSet;

    fn bc(text: &str, r: usize) -> BcPolynomial {
        parse_bc_expr(text, &VarSet::numbered(r), NfOrder::a()).unwrap()
    }

    fn nf(text: &str, r: usize) -> NfMonomial {
        bc(text, r).leading_monomial().unwrap().clone()
    }

    fn mono(e: &[u32]) -> Monomial {
        Monomial::from_exponents(e.to_vec())
    }

    fn term(text: &str, r: usize) -> BcTerm {
        parse_term_text(text, &VarSet::numbered(r)).unwrap()
    }

    #[test]
    fn normal_s_polynomials() {
        let s = bc("[x1; x2] + x3", 4);
        let h = normal_s_poly(&s, &mono(&[0, 0, 1, 0]), &mono(&[0, 0, 0, 1])).unwrap();
        assert_eq!(h.leading_monomial(), Some(&nf("[x1 x3; x2 x4]", 4)));
        assert_eq!(normal_s_poly(&s, &Monomial::one(4), &Monomial::one(4)).unwrap(), s);
        let letter = bc("x2 - x1", 2);
        assert!(matches!(
            normal_s_poly(&letter, &mono(&[1, 0]), &Monomial::one(2)),
            Err(Error::Usage(_))
        ));
    }

    #[test]
    fn reductions() {
        let d = reduce_bc(&bc("[x1^2; x1 x2]", 2), &[bc("[x1; x1]", 2)], true);
        assert!(d.remainder.is_zero());
        assert_eq!(d.witness[0].0.left, mono(&[1, 0]));
        assert_eq!(d.witness[0].0.right, mono(&[0, 1]));

        let basis = [bc("[x2; x1] + x3", 3)];
        let f = bc("[x2^2; x1]", 3);
        let d = reduce_bc(&f, &basis, true);
        assert_eq!(d.remainder, bc("-[x2; x3]", 3));
        assert!(witness_holds(&f, &basis, &d));

        assert!(reduce_bc(&BcPolynomial::zero(NfOrder::a()), &basis, true).remainder.is_zero());
    }

    #[test]
    fn composition_examples() {
        let comps = enumerate_compositions(&[bc("[x1; x2] + x3", 3)], 3);
        let c = comps
            .iter()
            .find(|c| c.kind == CompositionKind::Multiplication && c.letters == [0, 0])
            .unwrap();
        assert_eq!(c.value, bc("[x1 x3; x1] - [x1; x3 x1]", 3));
        assert_eq!(c.bound, nf("[x1^2; x2 x1]", 3));
        assert_eq!(comps.len(), 9);

        let comps = enumerate_compositions(&[bc("[x1; x2]", 2), bc("[x2; x2]", 2)], 2);
        assert_eq!(comps.len(), 1);
        assert_eq!(comps[0].kind, CompositionKind::Intersection);
        assert_eq!(comps[0].bound, nf("[x1 x2; x2]", 2));
        assert!(comps[0].value.is_zero());

        let f = bc("x2 - x1", 2);
        let comps = enumerate_compositions(std::slice::from_ref(&f), 2);
        let c = comps
            .iter()
            .find(|c| c.kind == CompositionKind::LeftMult && c.letters == [0])
            .unwrap();
        assert_eq!(c.value, bc("[x1; x2] - [x1; x1]", 2));
        assert!(!is_trivial(c, &[f]));
    }

    #[test]
    fn compositions_sorted_by_bound() {
        let basis = [bc("x2 - x1", 2), bc("[x2; x1] + x2", 2)];
        let comps = enumerate_compositions(&basis, 2);
        for w in comps.windows(2) {
            assert_ne!(NfOrder::a().compare(&w[0].bound, &w[1].bound), std::cmp::Ordering::Greater);
        }
        for c in &comps {
            if c.kind >= CompositionKind::Inclusion {
                let lm = c.value.leading_monomial();
                assert!(lm.is_none_or(|m| NfOrder::a().compare(m, &c.bound).is_lt()));
            }
        }
    }

    #[test]
    fn duplicate_letter_relations_give_inclusion() {
        let f = bc("x1 - x2", 2);
        let comps = enumerate_compositions(&[f.clone(), f.clone()], 2);
        let inc: Vec<_> = comps.iter().filter(|c| c.kind == CompositionKind::Inclusion).collect();
        assert_eq!(inc.len(), 1);
        assert!(is_trivial(inc[0], &[f.clone(), f]));
    }

    #[test]
    fn checks() {
        let pairs = [bc("[x1; x2]", 2), bc("[x2^2; x1]", 2), bc("[x1 x2; x1 x2]", 2)];
        assert!(gsb_check(&pairs, 2).is_complete);
        assert!(gsb_check(&[], 2).is_complete);
        let r = gsb_check(&[bc("x2 - x1", 2)], 2);
        assert!(!r.is_complete);
        assert!(r.failures.iter().all(|f| matches!(
            f.composition.kind,
            CompositionKind::LeftMult | CompositionKind::RightMult
        )));
    }

    #[test]
    fn completion_of_letter_relation() {
        let r = gsb_complete(&[bc("x2 - x1", 2)], 2, 100_000).unwrap();
        assert!(r.is_complete);
        assert!(gsb_check(&r.basis, 2).is_complete);
        let lms = leading_monomials(&r.basis);
        let irr: Vec<NfMonomial> = nf_monomials_up_to(2, 2, NfOrder::a())
            .into_iter()
            .filter(|m| irr_member_bc(&lms, m))
            .collect();
        // x1 is the larger letter, so x2 survives
        assert_eq!(irr, vec![NfMonomial::letter(2, 1), nf("[x2; x2]", 2)]);
        for w in r.basis.windows(2) {
            assert!(NfOrder::a()
                .compare(w[0].leading_monomial().unwrap(), w[1].leading_monomial().unwrap())
                .is_lt());
        }
    }

    #[test]
    fn completion_fixed_points() {
        let pairs = vec![bc("[x1; x2]", 2), bc("[x2^2; x1]", 2)];
        let mut sorted = pairs.clone();
        sort_by_leading(&mut sorted);
        assert_eq!(gsb_complete(&pairs, 2, 1000).unwrap().basis, sorted);
        assert!(gsb_complete(&[], 2, 10).unwrap().basis.is_empty());
    }

    #[test]
    fn completion_budget() {
        let gens = [bc("x2 - x1", 2), bc("[x1; x2] - x2", 2)];
        match gsb_complete(&gens, 2, 3) {
            Err(Error::CompletionBudget { limit, partial }) => {
                assert_eq!(limit, 3);
                assert!(!partial.is_empty());
            }
            other => panic!("expected budget error, got {other:?}"),
        }
    }

    #[test]
    fn minimal_bases() {
        let b = minimal_gsb(&[bc("[x1; x1]", 1), bc("[x1^2; x1]", 1)], 1).unwrap();
        assert_eq!(b, vec![bc("[x1; x1]", 1)]);
        assert!(minimal_gsb(&[], 1).unwrap().is_empty());
        assert!(matches!(minimal_gsb(&[bc("x2 - x1", 2)], 2), Err(Error::Usage(_))));
        let done = gsb_complete(&[bc("x2 - x1", 2)], 2, 100_000).unwrap().basis;
        let m = minimal_gsb(&done, 2).unwrap();
        let lms = leading_monomials(&m);
        for (i, a) in lms.iter().enumerate() {
            let others: Vec<_> = lms.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, b)| b.clone()).collect();
            assert!(irr_member_bc(&others, a));
        }
    }

    #[test]
    fn word_problem() {
        assert!(!word_problem_eq(&term("((x1 x1) x1)", 1), &term("(x1 (x1 x1))", 1), &[], 1));
        assert!(word_problem_eq(&term("(x1 (x2 x3))", 3), &term("(x2 (x1 x3))", 3), &[], 3));
        let done = gsb_complete(&[bc("x2 - x1", 2)], 2, 100_000).unwrap().basis;
        assert!(word_problem_eq(&term("(x1 x1)", 2), &term("(x1 x2)", 2), &done, 2));
        assert!(!word_problem_eq(&term("(x1 x1)", 2), &term("x1", 2), &done, 2));
    }

    #[test]
    fn irreducibility() {
        let s = leading_monomials(&[bc("[x1; x1]", 2), bc("[x1; x2]", 2), bc("[x2; x1]", 2)]);
        assert!(irr_member_bc(&s, &nf("[x2^2; x2^2]", 2)));
        assert!(!irr_member_bc(&s, &nf("[x1 x2; x2]", 2)));
        let s = [NfMonomial::letter(2, 0)];
        assert!(!irr_member_bc(&s, &NfMonomial::letter(2, 0)));
        assert!(irr_member_bc(&s, &nf("[x1; x1]", 2)));
    }
}
