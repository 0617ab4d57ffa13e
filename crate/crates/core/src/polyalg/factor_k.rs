//! Univariate factorization over the session field.
//!
//! Trager's method: pick a shift s so that the norm
//! `N(x) = Res_t(minpoly(t), f(x - s t))` is squarefree, factor the norm
//! over Q, and pull each rational factor back through a gcd. The norm is
//! computed by evaluation and interpolation, which sidesteps bivariate
//! resultant bookkeeping.

use super::factor_q::factor_rational;
use super::poly::{interpolate, resultant, Poly};
use crate::numberfield::{FieldDesc, FieldElement};
use crate::scalar::Scalar;
use crate::{KPoly, Rat};
use std::sync::Arc;

/// The field the coefficients live in, if any is bound.
pub fn field_of_poly(f: &KPoly) -> Option<Arc<FieldDesc>> {
    f.coeffs().iter().find_map(|c| c.field().cloned())
}

/// Monic irreducible factors over K with multiplicities; the scalar in
/// front makes the product exact.
pub fn factor_univariate_k(f: &KPoly) -> (FieldElement, Vec<(KPoly, u32)>) {
    assert!(!f.is_zero(), "cannot factor zero");
    let field = field_of_poly(f);
    let scalar = f.leading();
    let mut out = Vec::new();
    if f.is_constant() {
        return (scalar, out);
    }
    for (part, mult) in f.monic().squarefree_decomposition() {
        for g in factor_squarefree_k(&part, field.as_ref()) {
            out.push((g, mult));
        }
    }
    (scalar, out)
}

/// True when `f` is irreducible over the field bound to its coefficients
/// (over Q when none is).
pub fn is_irreducible_k(f: &KPoly) -> bool {
    if f.is_zero() || f.is_constant() {
        return false;
    }
    if f.deg() == 1 {
        return true;
    }
    if !f.gcd(&f.derivative()).is_constant() {
        return false;
    }
    factor_squarefree_k(&f.monic(), field_of_poly(f).as_ref()).len() == 1
}

fn rat_poly_of(f: &KPoly) -> Option<Poly<Rat>> {
    let mut coeffs = Vec::with_capacity(f.coeffs().len());
    for c in f.coeffs() {
        coeffs.push(c.to_rat()?);
    }
    Some(Poly::from_coeffs(coeffs))
}

fn factor_squarefree_k(f: &KPoly, field: Option<&Arc<FieldDesc>>) -> Vec<KPoly> {
    if f.deg() == 1 {
        return vec![f.monic()];
    }
    let field = match field {
        Some(d) if d.degree() > 1 => d,
        _ => {
            // the ambient field is Q
            let q = rat_poly_of(f).expect("rational coefficients");
            let (_, factors) = factor_rational(&q);
            return factors
                .into_iter()
                .map(|(p, m)| {
                    debug_assert_eq!(m, 1);
                    p.map(|r| FieldElement::from_rat_value(r.clone()))
                })
                .collect();
        }
    };

    let theta = FieldElement::generator(field);
    let minpoly = field.minpoly();
    let d = field.degree();
    let n = f.deg();

    // coefficients of f as polynomials in t
    let coeff_polys: Vec<Poly<Rat>> = f
        .coeffs()
        .iter()
        .map(|c| {
            let v = c.promote(field);
            Poly::from_coeffs(v.coords().to_vec())
        })
        .collect();

    let mut shifts = vec![0i64];
    for m in 1..50i64 {
        shifts.push(m);
        shifts.push(-m);
    }
    for s in shifts {
        {
            let norm = norm_by_interpolation(&coeff_polys, minpoly, d, n, s);
            if norm.gcd(&norm.derivative()).is_constant() {
                // good shift: factor the norm over Q
                let (_, nfactors) = factor_rational(&norm);
                let shift = theta.clone() * FieldElement::from_int_value(s);
                let shifted = f.shift(&(-shift.clone())); // g(x) = f(x - s t)
                let mut out = Vec::new();
                for (nf, m) in nfactors {
                    debug_assert_eq!(m, 1);
                    let nf_k = nf.map(|r| FieldElement::from_rat_value(r.clone()));
                    let h = shifted.gcd(&nf_k);
                    if !h.is_constant() {
                        out.push(h.shift(&shift).monic());
                    }
                }
                // the pullbacks multiply to f
                let mut prod = KPoly::one();
                for g in &out {
                    prod = prod.mul(g);
                }
                assert_eq!(prod, f.monic(), "Trager pullback must remultiply");
                return out;
            }
        }
    }
    panic!("no squarefree norm found within the shift budget");
}

/// `Res_t(minpoly(t), sum_i c_i(t) (x - s t)^i)` via evaluation at
/// `0..=d*n` and Lagrange interpolation.
fn norm_by_interpolation(
    coeff_polys: &[Poly<Rat>],
    minpoly: &Poly<Rat>,
    d: usize,
    n: usize,
    s: i64,
) -> Poly<Rat> {
    let deg_bound = d * n;
    let mut points = Vec::with_capacity(deg_bound + 1);
    for x0 in 0..=(deg_bound as i64) {
        // g(t) = sum_i c_i(t) * (x0 - s t)^i
        let lin = Poly::from_rats(&[crate::rint(x0), crate::rint(-s)]);
        let mut g = Poly::<Rat>::zero();
        let mut pw = Poly::<Rat>::one();
        for c in coeff_polys {
            g = g.add(&c.mul(&pw));
            pw = pw.mul(&lin);
        }
        let r = resultant(minpoly, &g);
        points.push((crate::rint(x0), r));
    }
    interpolate(&points)
}
