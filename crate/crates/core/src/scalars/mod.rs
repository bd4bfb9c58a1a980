//! Exact scalars: Laurent polynomials in `q^(1/2)`, rational functions, and
//! cyclotomic specialisations at odd roots of unity.

mod cyclo;
mod laurent;
mod qint;
mod ratfunc;
mod ring;

pub use cyclo::{cyclotomic, specialize, Cyclo, CycloCtx, CycloField};
pub use laurent::{qint_r, Laurent, Q};
#[allow(unused_imports)]
pub(crate) use laurent::{fmt_qpow, fmt_rational};
pub use qint::{bracket, bracket_factorial, chebyshev_t, paren, paren_factorial, qbinom, qdiff, ChebyPoly};
pub use ratfunc::RatFunc;
pub use ring::{Field, Ring};

/// Alias used throughout for generic-`q` coefficients.
pub type Rf = RatFunc;

pub fn rf(x: Laurent) -> Rf {
    RatFunc::from_laurent(x)
}
