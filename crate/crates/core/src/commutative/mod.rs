//! Commutative monomials and polynomials, Groebner bases, and the
//! box-candidate Gelfand-Kirillov dimension of `k[X | S]`.

mod gk;
mod groebner;
mod irr;
mod monomial;
mod order;
mod polynomial;

pub use gk::{
    c_constant, c_constant_by_scan, gk_after_adding, gk_box_sweep, gk_fast, growth_degree,
    sd_value, GkReportCom,
};
pub use groebner::{buchberger, minimal_gb, reduce, s_polynomial, Division};
pub use irr::{growth_count, growth_counts, irr_member, irreducible_monomials, DEFAULT_GROWTH_BUDGET};
pub use monomial::Monomial;
pub use order::ComOrder;
pub use polynomial::ComPolynomial;

/// Leading monomials of a list of nonzero polynomials.
pub fn leading_monomials(basis: &[ComPolynomial]) -> Vec<Monomial> {
    basis
        .iter()
        .filter_map(|p| p.leading_monomial().cloned())
        .collect()
}
