//! Exact computer algebra for finitely presented commutative and
//! bicommutative algebras.
//!
//! The crate is split into two halves that mirror each other:
//!
//! * [`commutative`] works in the polynomial ring `k[X]` over the rationals:
//!   monomial orders, division, Buchberger completion, and the
//!   Gelfand-Kirillov dimension read off a finite box of candidate
//!   monomials.
//! * [`bicomm`] works in the free bicommutative algebra `BC(X)`, i.e. the
//!   nonassociative algebra satisfying `x(yz) = y(xz)` and `(xy)z = (xz)y`.
//!   Elements are written in the `[u;v]` normal-form basis; Groebner-Shirshov
//!   bases are computed by completing compositions, and the GK dimension is
//!   again read off a finite candidate set.
//!
//! [`presentation`] parses the plain-text presentation format and
//! [`quotient`] bundles a completed presentation with the high-level queries
//! used by the command-line tool and the Python bindings.

pub mod bicomm;
pub mod commutative;
mod error;
pub mod growth;
pub mod presentation;
pub mod quotient;
mod rational;
mod vars;

pub use error::{Error, Result};
pub use rational::Rational;
pub use vars::VarSet;
