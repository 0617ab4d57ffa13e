//! Exact symbolic toolkit for exponential polynomials over a number field.
//!
//! The crate is organised around the ring of exponential polynomials
//! `f(x) = sum_i P_i(x) exp(b_i x)` with exponents and coefficients in a
//! fixed number field `K = Q(t)`:
//!
//! - [`numberfield`]: arithmetic in `K` with a distinguished complex
//!   embedding certified by root isolation.
//! - [`polyalg`]: uni/multivariate polynomial algebra over `K` (gcd,
//!   squarefree decomposition, factorization, Eisenstein certificates).
//! - [`exppoly`]: the exponential polynomial ring, Taylor expansion,
//!   normal forms and vanishing orders.
//! - [`ritt`]: exponent lattices, the polynomial model, and factorization
//!   into unit x simple parts x certified irreducibles.
//! - [`divgcd`]: divisibility, exact quotients, gcds and valuations.
//! - [`efunc`]: holonomic power series, m-th root series, operator
//!   recovery and the entire-quotient test.
//! - [`zeros`]: argument-principle winding counts, certified zero
//!   isolation and the numerical evidence harness.
//! - [`bessel`]: half-integer Bessel exponential polynomials and their
//!   irreducibility certificates.
//!
//! The polynomial and series cores are generic over the scalar type via
//! [`scalar::Scalar`]; the concrete instantiations used throughout are the
//! exact ones, [`Rat`] and [`numberfield::FieldElement`].

pub mod scalar;
pub mod dyadic;
pub mod polyalg;
pub mod numberfield;
pub mod exppoly;
pub mod ritt;
pub mod divgcd;
pub mod efunc;
pub mod zeros;
pub mod bessel;

/// Exact rational scalar used everywhere.
pub type Rat = num_rational::BigRational;
/// Arbitrary precision integer.
pub type Int = num_bigint::BigInt;

/// Univariate polynomial over the rationals.
pub type QPoly = polyalg::Poly<Rat>;
/// Univariate polynomial over the session number field.
pub type KPoly = polyalg::Poly<numberfield::FieldElement>;
/// Multivariate polynomial over the session number field.
pub type KMPoly = polyalg::MPoly<numberfield::FieldElement>;
pub use exppoly::{ExpPoly, SimpleEForm, UnitE};
pub use numberfield::{FieldDesc, FieldElement};

/// Holonomic series with rational coefficients.
pub type QSeries = efunc::HolonomicSeries<Rat>;

/// Parse a rational from `p` or `p/q` notation.
pub fn rat_from_str(s: &str) -> Option<Rat> {
    let s = s.trim();
    if let Some((p, q)) = s.split_once('/') {
        let p: Int = p.trim().parse().ok()?;
        let q: Int = q.trim().parse().ok()?;
        if num_traits::Zero::is_zero(&q) {
            return None;
        }
        Some(Rat::new(p, q))
    } else {
        let p: Int = s.parse().ok()?;
        Some(Rat::from_integer(p))
    }
}

/// Shorthand for small rational constants.
pub fn rat(p: i64, q: i64) -> Rat {
    Rat::new(Int::from(p), Int::from(q))
}

/// Shorthand for integer rationals.
pub fn rint(p: i64) -> Rat {
    Rat::from_integer(Int::from(p))
}
