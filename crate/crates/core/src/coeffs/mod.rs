//! Exact scalars: rational functions over the Gaussian rationals in the commuting
//! central variables `s = q^(1/2)`, `t = p^(1/2)`, `h = hbar` and any declared
//! opaque symbols. Half powers of `q` and `p` are integer powers of `s` and `t`.

mod coefficient;
mod gauss;
mod laurent;
pub mod monomial;

pub use coefficient::{qnumber, qnumber_closed_form, Coefficient};
pub use gauss::GaussRational;
pub use laurent::LaurentPoly;
pub use monomial::CentralMonomial;

/// Names that can never be declared as opaque central symbols.
pub const RESERVED_NAMES: &[&str] = &["q", "p", "hbar", "i", monomial::S, monomial::T, monomial::H];
