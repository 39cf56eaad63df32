//! The free bicommutative algebra in its `[u;v]` normal-form basis,
//! Groebner-Shirshov bases, and the GK dimension of `BC(X | S)`.

mod gk;
mod gsb;
mod nf;
mod order;
mod polynomial;
mod term;

pub use gk::{
    gk_after_adding_bc, gk_box_sweep_bc, gk_candidate_sweep_bc, gk_fast_bc, gk_fast_bc_leading,
    growth_count_bc, growth_counts_bc, growth_degree_bc, irreducible_nf_monomials, n_constant,
    n_constant_by_scan, nf_monomials_up_to, sd_nf, GkReportBc,
};
pub use gsb::{
    divisors_of, enumerate_compositions, gsb_check, gsb_complete, irr_member_bc, is_trivial,
    minimal_gsb, normal_s_poly, reduce_bc, reduce_bc_with, witness_holds, word_problem_eq,
    BcDivision, Composition, CompositionFailure, CompositionKind, GsbReport, NormalSPoly,
};
pub use nf::NfMonomial;
pub use order::{NfOrder, NfOrderKind};
pub use polynomial::BcPolynomial;
pub use term::{normalize, parse_term, BcTerm};

/// Leading monomials of a list of nonzero polynomials.
pub fn leading_monomials(basis: &[BcPolynomial]) -> Vec<NfMonomial> {
    basis
        .iter()
        .filter_map(|p| p.leading_monomial().cloned())
        .collect()
}
