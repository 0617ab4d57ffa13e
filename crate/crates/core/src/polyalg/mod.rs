//! Exact polynomial algebra over the session field: gcd, squarefree
//! decomposition, factorization, and Eisenstein irreducibility
//! certificates.

mod factor_k;
mod factor_mv;
mod factor_q;
mod mpoly;
mod poly;

pub use factor_k::{factor_univariate_k, field_of_poly, is_irreducible_k};
pub use factor_mv::factor_baseline;
pub use factor_q::{factor_rational, is_irreducible_rational};
pub use mpoly::{content_wrt, gcd as mpoly_gcd, squarefree_decomposition_wrt, MPoly};
pub use poly::{interpolate, resultant, Poly};

use crate::numberfield::FieldElement;
use crate::KMPoly;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum PolyError {
    #[error("unsupported shape for mode {mode}: {detail}")]
    UnsupportedShape {
        mode: &'static str,
        detail: String,
        /// Partial factorization gathered before giving up.
        partial: Vec<(KMPoly, u32)>,
    },
    #[error("the given prime is not irreducible")]
    NotIrreduciblePrime,
}

/// Factorization modes for [`factor`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FactorMode {
    /// Complete factorization over Q, input must have rational coefficients.
    UnivariateQ,
    /// Complete factorization over the session field K (Trager norms).
    UnivariateK,
    /// Scoped multivariate factorization; factors outside the supported
    /// class come back flagged `maybe_reducible`.
    MultivariateBaseline,
}

/// One factor from [`factor`]; `certified` is false for the
/// `maybe_reducible` flag of the multivariate baseline.
#[derive(Debug, Clone)]
pub struct MFactor {
    pub poly: KMPoly,
    pub multiplicity: u32,
    pub certified: bool,
}

/// Factorization result: `scalar * prod(poly^multiplicity)` equals the
/// input exactly.
#[derive(Debug, Clone)]
pub struct Factorization {
    pub scalar: FieldElement,
    pub factors: Vec<MFactor>,
}

impl Factorization {
    pub fn product(&self, nvars: usize) -> KMPoly {
        let mut acc = KMPoly::constant(nvars, self.scalar.clone());
        for f in &self.factors {
            acc = acc.mul(&f.poly.pow(f.multiplicity));
        }
        acc
    }
}

/// Multivariate gcd, normalized so the lexicographic leading coefficient
/// is one; divides both inputs exactly.
pub fn mp_gcd(a: &KMPoly, b: &KMPoly) -> KMPoly {
    assert!(!(a.is_zero() && b.is_zero()), "gcd of two zero polynomials");
    let g = mpoly_gcd(a, b);
    debug_assert!(a.is_zero() || g.divides(a));
    debug_assert!(b.is_zero() || g.divides(b));
    g
}

/// Squarefree decomposition with respect to `var`; see
/// [`squarefree_decomposition_wrt`].
pub fn squarefree_decomposition(a: &KMPoly, var: usize) -> Vec<(KMPoly, u32)> {
    squarefree_decomposition_wrt(a, var)
}

/// Factor `a` according to `mode`. Every returned factorization
/// remultiplies to the input exactly (checked).
pub fn factor(a: &KMPoly, mode: FactorMode) -> Result<Factorization, PolyError> {
    assert!(!a.is_zero(), "cannot factor zero");
    let result = match mode {
        FactorMode::UnivariateQ => factor_mode_q(a)?,
        FactorMode::UnivariateK => factor_mode_k(a)?,
        FactorMode::MultivariateBaseline => factor_baseline(a)?,
    };
    debug_assert_eq!(result.product(a.nvars()), *a, "factor must remultiply");
    Ok(result)
}

fn single_var(a: &KMPoly, mode: &'static str) -> Result<usize, PolyError> {
    let used = a.used_vars();
    match used.len() {
        0 => Ok(0),
        1 => Ok(used[0]),
        _ => Err(PolyError::UnsupportedShape {
            mode,
            detail: format!("{} variables present, univariate input required", used.len()),
            partial: vec![],
        }),
    }
}

fn factor_mode_q(a: &KMPoly) -> Result<Factorization, PolyError> {
    let var = single_var(a, "univariate_Q")?;
    let up = a.to_univariate(var).expect("single variable");
    let mut rat_coeffs = Vec::with_capacity(up.coeffs().len());
    for c in up.coeffs() {
        match crate::scalar::Scalar::to_rat(c) {
            Some(r) => rat_coeffs.push(r),
            None => {
                return Err(PolyError::UnsupportedShape {
                    mode: "univariate_Q",
                    detail: "coefficients are not rational".into(),
                    partial: vec![],
                })
            }
        }
    }
    let qp = Poly::from_coeffs(rat_coeffs);
    let (scalar, factors) = factor_rational(&qp);
    Ok(Factorization {
        scalar: FieldElement::from_rat_value(scalar),
        factors: factors
            .into_iter()
            .map(|(p, m)| MFactor {
                poly: KMPoly::from_univariate(
                    a.nvars(),
                    var,
                    &p.map(|r| FieldElement::from_rat_value(r.clone())),
                ),
                multiplicity: m,
                certified: true,
            })
            .collect(),
    })
}

fn factor_mode_k(a: &KMPoly) -> Result<Factorization, PolyError> {
    let var = single_var(a, "univariate_K")?;
    let up = a.to_univariate(var).expect("single variable");
    let (scalar, factors) = factor_univariate_k(&up);
    Ok(Factorization {
        scalar,
        factors: factors
            .into_iter()
            .map(|(p, m)| MFactor {
                poly: KMPoly::from_univariate(a.nvars(), var, &p),
                multiplicity: m,
                certified: true,
            })
            .collect(),
    })
}

/// Eisenstein's criterion for `a` viewed in `K[X][Y]`: `yvar` is the `Y`
/// variable, every other variable is part of the coefficient ring, and
/// `prime` is an irreducible polynomial in the remaining variable `xvar`.
///
/// Returns true iff `prime` divides every non-leading `Y`-coefficient,
/// does not divide the leading one, and its square does not divide the
/// constant one. True implies `a` is irreducible in `K(X)[Y]`.
pub fn eisenstein_certify(
    a: &KMPoly,
    yvar: usize,
    prime: &crate::KPoly,
    xvar: usize,
) -> Result<bool, PolyError> {
    if prime.is_constant() || !factor_k::is_irreducible_k(prime) {
        return Err(PolyError::NotIrreduciblePrime);
    }
    let degy = a.degree(yvar);
    assert!(degy >= 1, "Y-degree must be at least 1");
    let coeffs = a.coeffs_wrt(yvar);
    let pm = KMPoly::from_univariate(a.nvars(), xvar, prime);
    for (k, c) in &coeffs {
        if *k == degy {
            if pm.divides(c) {
                return Ok(false);
            }
        } else if !pm.divides(c) {
            return Ok(false);
        }
    }
    let constant = coeffs
        .get(&0)
        .cloned()
        .unwrap_or_else(|| KMPoly::zero(a.nvars()));
    if constant.is_zero() {
        // divisible by Y, not an Eisenstein situation
        return Ok(false);
    }
    let p2 = pm.mul(&pm);
    Ok(!p2.divides(&constant))
}
