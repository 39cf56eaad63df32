//! Completed presentations and the queries the tools run against them.

use num_bigint::BigUint;

use crate::bicomm::{
    gk_box_sweep_bc, gk_fast_bc_leading, growth_counts_bc, gsb_check, gsb_complete,
    irreducible_nf_monomials, leading_monomials as bc_leading, reduce_bc, BcPolynomial,
    GkReportBc, NfMonomial, NfOrder,
};
use crate::commutative::{
    buchberger, gk_box_sweep, gk_fast, growth_counts, irreducible_monomials,
    leading_monomials as com_leading, reduce, ComOrder, ComPolynomial, GkReportCom, Monomial,
};
use crate::growth::{default_window, eventual_degree};
use crate::presentation::{BcPresentation, ComPresentation, Presentation};
use crate::{Result, VarSet};

/// `k[X | S]` with `S` replaced by its reduced Groebner basis.
#[derive(Clone, Debug)]
pub struct ComQuotient {
    pub vars: VarSet,
    pub order: ComOrder,
    pub basis: Vec<ComPolynomial>,
}

impl ComQuotient {
    pub fn new(p: &ComPresentation) -> Self {
        ComQuotient {
            vars: p.vars.clone(),
            order: p.order,
            basis: buchberger(&p.relations, p.order),
        }
    }

    pub fn arity(&self) -> usize {
        self.vars.len()
    }

    pub fn leading(&self) -> Vec<Monomial> {
        com_leading(&self.basis)
    }

    pub fn gk(&self) -> GkReportCom {
        gk_fast(self.arity(), &self.leading())
    }

    /// The brute-force box value that [`ComQuotient::gk`] must match.
    pub fn gk_oracle(&self) -> usize {
        gk_box_sweep(self.arity(), &self.leading())
    }

    pub fn normal_form(&self, f: &ComPolynomial) -> ComPolynomial {
        reduce(&f.with_order(self.order), &self.basis, true).remainder
    }

    pub fn equal(&self, f: &ComPolynomial, g: &ComPolynomial) -> bool {
        self.normal_form(&f.sub(g)).is_zero()
    }

    pub fn growth(&self, n_max: u64, budget: usize) -> Result<Vec<BigUint>> {
        growth_counts(self.arity(), &self.leading(), n_max, budget)
    }

    pub fn irreducible(&self, max_len: u32) -> Vec<Monomial> {
        irreducible_monomials(self.arity(), &self.leading(), max_len, self.order)
    }

    pub fn presentation(&self) -> Presentation {
        Presentation::Commutative(ComPresentation {
            vars: self.vars.clone(),
            order: self.order,
            relations: self.basis.clone(),
        })
    }
}

/// `BC(X | S)` with `S` completed to a minimal, reduced Groebner-Shirshov basis.
#[derive(Clone, Debug)]
pub struct BcQuotient {
    pub vars: VarSet,
    pub order: NfOrder,
    pub basis: Vec<BcPolynomial>,
    /// Whether the input relations already passed the composition check.
    pub input_was_gsb: bool,
    /// Reduction steps spent by the completion.
    pub steps: usize,
}

impl BcQuotient {
    pub fn new(p: &BcPresentation, max_steps: usize) -> Result<Self> {
        let arity = p.vars.len();
        let input_was_gsb = gsb_check(&p.relations, arity).is_complete;
        let report = gsb_complete(&p.relations, arity, max_steps)?;
        Ok(BcQuotient {
            vars: p.vars.clone(),
            order: p.order,
            basis: report.basis,
            input_was_gsb,
            steps: report.steps,
        })
    }

    pub fn arity(&self) -> usize {
        self.vars.len()
    }

    pub fn leading(&self) -> Vec<NfMonomial> {
        bc_leading(&self.basis)
    }

    pub fn gk(&self) -> GkReportBc {
        gk_fast_bc_leading(self.arity(), &self.leading())
    }

    pub fn gk_oracle(&self) -> usize {
        gk_box_sweep_bc(self.arity(), &self.leading())
    }

    pub fn normal_form(&self, f: &BcPolynomial) -> BcPolynomial {
        reduce_bc(&f.with_order(self.order), &self.basis, true).remainder
    }

    pub fn equal(&self, f: &BcPolynomial, g: &BcPolynomial) -> bool {
        self.normal_form(&f.sub(g)).is_zero()
    }

    pub fn growth(&self, n_max: u64, budget: usize) -> Result<Vec<BigUint>> {
        growth_counts_bc(self.arity(), &self.leading(), n_max, budget)
    }

    pub fn irreducible(&self, max_len: u32) -> Vec<NfMonomial> {
        irreducible_nf_monomials(self.arity(), &self.leading(), max_len, self.order)
    }

    pub fn presentation(&self) -> Presentation {
        Presentation::Bicommutative(BcPresentation {
            vars: self.vars.clone(),
            order: self.order,
            relations: self.basis.clone(),
        })
    }
}

/// Eventual degree of a growth table, with the default quarter window.
pub fn fitted_degree(counts: &[BigUint], max_degree: usize) -> Result<usize> {
    let seq: Vec<_> = counts.iter().cloned().map(num_bigint::BigInt::from).collect();
    let n_max = counts.len().saturating_sub(1) as u64;
    eventual_degree(&seq, default_window(n_max), max_degree)
}
