//! Divisibility, exact quotients, gcds, simple parts and valuations for
//! exponential polynomials, computed on the joint polynomial model.

use crate::exppoly::{Classification, ExpPoly, ExpPolyError, SimpleEForm, UnitE};
use crate::numberfield::FieldElement;
use crate::polyalg::{mp_gcd, Poly};
use crate::ritt::{
    polynomial_model_refined, ritt_factor, support_key, Certificate, RittError,
};
use crate::scalar::Scalar;
use crate::{KPoly, Rat};
use num_traits::{One, Zero};
use std::collections::BTreeMap;

#[derive(Debug, thiserror::Error)]
pub enum DivGcdError {
    #[error("operation undefined for the zero function")]
    ZeroFunction,
    #[error(transparent)]
    ExpPoly(#[from] ExpPolyError),
    #[error(transparent)]
    Ritt(#[from] RittError),
    #[error("simple forms have distinct supports")]
    DistinctSupports,
}

/// Exact division on the joint lattice: returns `q` with `f2 = f1 * q`
/// when the model division is exact, `None` otherwise.
pub fn ep_divides(f1: &ExpPoly, f2: &ExpPoly) -> Result<Option<ExpPoly>, DivGcdError> {
    ep_divides_refined(f1, f2, 1)
}

/// `ep_divides` on the lattice scaled by `1/refine`.
pub fn ep_divides_refined(
    f1: &ExpPoly,
    f2: &ExpPoly,
    refine: u32,
) -> Result<Option<ExpPoly>, DivGcdError> {
    if f1.is_zero() || f2.is_zero() {
        return Err(DivGcdError::ZeroFunction);
    }
    let model = polynomial_model_refined(&[f1, f2], refine)?;
    let p1 = &model.polys[0];
    let p2 = &model.polys[1];
    let (m1, p1s) = p1.strip_monomial_content();
    let (m2, p2s) = p2.strip_monomial_content();
    // x-powers are genuine factors, exponent monomials are units
    if m1[0] > m2[0] {
        return Ok(None);
    }
    let q = match p2s.exact_div(&p1s) {
        Some(q) => q,
        None => return Ok(None),
    };
    let mut quotient =
        crate::ritt::model_to_exppoly(&q, &model.lattice.basis).mul_xpow(m2[0] - m1[0]);
    // exponent-monomial difference becomes a unit shift
    let mut delta = FieldElement::zero();
    for (i, b) in model.lattice.basis.iter().enumerate() {
        let d = m2[i + 1] as i64 - m1[i + 1] as i64;
        if d != 0 {
            delta = delta + b.clone() * FieldElement::from_int_value(d);
        }
    }
    if !delta.is_zero() {
        quotient = quotient.unit_mul(&UnitE::new(FieldElement::one(), delta));
    }
    debug_assert_eq!(f1.mul(&quotient).expect("same field"), *f2);
    Ok(Some(quotient))
}

/// Gcd on the joint lattice, normalized (first nonzero Taylor coefficient
/// one, next zero). Divides both inputs; this is checked.
pub fn ep_gcd(f1: &ExpPoly, f2: &ExpPoly) -> Result<ExpPoly, DivGcdError> {
    ep_gcd_refined(f1, f2, 1)
}

pub fn ep_gcd_refined(
    f1: &ExpPoly,
    f2: &ExpPoly,
    refine: u32,
) -> Result<ExpPoly, DivGcdError> {
    if f1.is_zero() || f2.is_zero() {
        return Err(DivGcdError::ZeroFunction);
    }
    let model = polynomial_model_refined(&[f1, f2], refine)?;
    let g = mp_gcd(&model.polys[0], &model.polys[1]);
    // exponent-monomial content is a unit; normalization removes it anyway
    let (content, gs) = g.strip_monomial_content();
    let mut ge = crate::ritt::model_to_exppoly(&gs, &model.lattice.basis);
    // keep the x-content: it is a genuine common factor
    if content[0] > 0 {
        ge = ge.mul_xpow(content[0]);
    }
    let (_, normalized) = ge.normalize()?;
    debug_assert!(ep_divides(&normalized, f1)?.is_some());
    debug_assert!(ep_divides(&normalized, f2)?.is_some());
    Ok(normalized)
}

/// Gcd of two simple forms with the same support.
#[derive(Debug, Clone)]
pub enum SimpleGcd {
    /// Coprime polynomial parts: the gcd is a unit.
    Unit,
    Simple(SimpleEForm),
}

/// Rewrite both forms on a common generator (integer multiples) and take
/// the polynomial gcd there.
pub fn simple_gcd(g1: &SimpleEForm, g2: &SimpleEForm) -> Result<SimpleGcd, DivGcdError> {
    // re-canonicalize so both betas are positive multiples of each other
    let c1 = canonical_simple(g1)?;
    let c2 = canonical_simple(g2)?;
    let ratio = c1
        .beta
        .rational_ratio(&c2.beta)
        .expect("nonzero support generator")
        .ok_or(DivGcdError::DistinctSupports)?;
    // canonical betas point the same way, so the ratio is positive
    let p = ratio.numer().clone();
    let q = ratio.denom().clone();
    let beta = c1.beta.clone()
        * FieldElement::from_rat_value(Rat::new(One::one(), p.clone()));
    let n1: u32 = u32::try_from(i64::try_from(p).expect("small multiple"))
        .expect("positive multiple");
    let n2: u32 = u32::try_from(i64::try_from(q).expect("small multiple"))
        .expect("positive multiple");
    let p1 = stretch(&c1.p, n1);
    let p2 = stretch(&c2.p, n2);
    let g = p1.gcd(&p2);
    if g.is_constant() {
        return Ok(SimpleGcd::Unit);
    }
    let omega = g.order_at(&FieldElement::one());
    Ok(SimpleGcd::Simple(SimpleEForm {
        omega,
        unit: UnitE::one(),
        beta,
        p: g,
    }))
}

fn canonical_simple(g: &SimpleEForm) -> Result<SimpleEForm, DivGcdError> {
    match g.exp_poly().classify() {
        Classification::Simple(s) => Ok(s),
        _ => Err(DivGcdError::DistinctSupports),
    }
}

/// `P(X) -> P(X^n)`.
fn stretch(p: &KPoly, n: u32) -> KPoly {
    let mut coeffs = vec![FieldElement::zero(); p.deg() * n as usize + 1];
    for (k, c) in p.coeffs().iter().enumerate() {
        coeffs[k * n as usize] = c.clone();
    }
    Poly::from_coeffs(coeffs)
}

/// The factorization of `f` arranged for arithmetic: simple parts by
/// support, valuations of normalized irreducibles, and the adjusted unit.
///
/// Valuations are model-level: the entry for `x` counts the polynomial
/// content only. The order of vanishing at 0 in the sense of the
/// `x^-omega` normal forms also counts the omega of each simple part;
/// [`DecompositionView::h_valuation`] does that accounting.
#[derive(Debug, Clone)]
pub struct DecompositionView {
    pub unit: UnitE,
    pub simple_parts: BTreeMap<FieldElement, SimpleEForm>,
    pub valuations: BTreeMap<ExpPoly, u32>,
    pub certificates: Vec<(ExpPoly, Certificate)>,
}

pub fn decomposition_view(f: &ExpPoly) -> Result<DecompositionView, DivGcdError> {
    if f.is_zero() {
        return Err(DivGcdError::ZeroFunction);
    }
    let r = ritt_factor(f)?;
    let mut unit = r.unit.clone();
    let mut simple_parts = BTreeMap::new();
    for s in &r.simples {
        simple_parts.insert(support_key(&s.beta), s.clone());
    }
    let mut valuations: BTreeMap<ExpPoly, u32> = BTreeMap::new();
    let mut certificates = Vec::new();
    for h in &r.irreducibles {
        let (u, normalized) = h.factor.normalize()?;
        // factor = u^-1 * normalized, so the unit picks up u^-mult
        for _ in 0..h.multiplicity {
            unit = unit.mul(&u.inv());
        }
        *valuations.entry(normalized.clone()).or_insert(0) += h.multiplicity;
        certificates.push((normalized, h.certificate.clone()));
    }
    let view = DecompositionView {
        unit,
        simple_parts,
        valuations,
        certificates,
    };
    debug_assert_eq!(view.reconstruct(), *f);
    Ok(view)
}

impl DecompositionView {
    /// Exact product of all parts.
    pub fn reconstruct(&self) -> ExpPoly {
        let mut acc = self.unit.value();
        for s in self.simple_parts.values() {
            acc = acc.mul(&s.exp_poly()).expect("same field");
        }
        for (h, m) in &self.valuations {
            acc = acc.mul(&h.pow(*m)).expect("same field");
        }
        acc
    }

    /// Valuation at the normalized irreducible `h_x0`; for `x0 = 0` this
    /// counts the simple parts' omegas, matching the order of vanishing.
    pub fn h_valuation(&self, x0: &FieldElement) -> u32 {
        let key = ExpPoly::h_at(x0);
        let base = self.valuations.get(&key).copied().unwrap_or(0);
        if x0.is_zero() {
            base + self.simple_parts.values().map(|s| s.omega).sum::<u32>()
        } else {
            base
        }
    }

    /// Simple part for the support line of `beta` (if any).
    pub fn simple_part(&self, beta: &FieldElement) -> Option<&SimpleEForm> {
        self.simple_parts.get(&support_key(beta))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numberfield::FieldDesc;

    fn fe(n: i64) -> FieldElement {
        FieldElement::from_int_value(n)
    }

    fn exp_minus(beta: i64, c: i64) -> ExpPoly {
        ExpPoly::exp_minus_const(fe(beta), fe(c))
    }

    #[test]
    fn divides_difference_of_squares() {
        let f1 = exp_minus(1, 1);
        let f2 = exp_minus(2, 1);
        let q = ep_divides(&f1, &f2).unwrap().expect("divides");
        let expected = ExpPoly::from_terms(vec![
            (fe(1), KPoly::one()),
            (fe(0), KPoly::one()),
        ])
        .unwrap();
        assert_eq!(q, expected);

        // and not the other way around
        assert!(ep_divides(&expected, &f1).unwrap().is_none());
    }

    #[test]
    fn divides_with_h_factor() {
        // h_2 | (1 - x/2) e^{x/2} (e^x - 3), quotient e^x - 3
        let h2 = ExpPoly::h_at(&fe(2));
        let other = exp_minus(1, 3);
        let f = h2.mul(&other).unwrap();
        let q = ep_divides(&h2, &f).unwrap().expect("divides");
        assert_eq!(q, other);
    }

    #[test]
    fn divides_zero_rejected() {
        assert!(matches!(
            ep_divides(&ExpPoly::zero(), &ExpPoly::one()),
            Err(DivGcdError::ZeroFunction)
        ));
    }

    #[test]
    fn gcd_cyclotomic_pair() {
        // gcd(e^{2x}-1, e^{3x}-1) = normalized e^x - 1
        let g = ep_gcd(&exp_minus(2, 1), &exp_minus(3, 1)).unwrap();
        let (_, expected) = exp_minus(1, 1).normalize().unwrap();
        assert_eq!(g, expected);
    }

    #[test]
    fn gcd_coprime_distinct_supports() {
        let k = FieldDesc::sqrt2();
        let s2 = FieldElement::generator(&k);
        let f1 = ExpPoly::exp_minus_const(fe(1).promote(&k), fe(2).promote(&k));
        let f2 = ExpPoly::exp_minus_const(s2, fe(3).promote(&k));
        let g = ep_gcd(&f1, &f2).unwrap();
        assert_eq!(g, ExpPoly::one());
    }

    #[test]
    fn gcd_self_is_normalized_self() {
        let f = exp_minus(1, 1).mul(&ExpPoly::x()).unwrap();
        let g = ep_gcd(&f, &f).unwrap();
        let (_, n) = f.normalize().unwrap();
        assert_eq!(g, n);
    }

    #[test]
    fn gcd_symmetry_and_associativity() {
        let f1 = exp_minus(2, 1);
        let f2 = exp_minus(3, 1);
        let f3 = exp_minus(1, 1).mul(&exp_minus(1, 2)).unwrap();
        assert_eq!(ep_gcd(&f1, &f2).unwrap(), ep_gcd(&f2, &f1).unwrap());
        let left = ep_gcd(&ep_gcd(&f1, &f2).unwrap(), &f3).unwrap();
        let right = ep_gcd(&f1, &ep_gcd(&f2, &f3).unwrap()).unwrap();
        assert_eq!(left, right);
    }

    #[test]
    fn simple_gcd_cases() {
        let s1 = match exp_minus(2, 1).classify() {
            Classification::Simple(s) => s,
            _ => unreachable!(),
        };
        let s2 = match exp_minus(3, 1).classify() {
            Classification::Simple(s) => s,
            _ => unreachable!(),
        };
        match simple_gcd(&s1, &s2).unwrap() {
            SimpleGcd::Simple(g) => {
                assert_eq!(g.beta, fe(1));
                assert_eq!(g.p, Poly::from_coeffs(vec![fe(-1), fe(1)]));
                assert_eq!(g.omega, 1);
            }
            SimpleGcd::Unit => panic!("expected a simple gcd"),
        }

        // coprime polynomial parts
        let a = match exp_minus(1, 2).classify() {
            Classification::Simple(s) => s,
            _ => unreachable!(),
        };
        let b = match exp_minus(1, 3).classify() {
            Classification::Simple(s) => s,
            _ => unreachable!(),
        };
        assert!(matches!(simple_gcd(&a, &b).unwrap(), SimpleGcd::Unit));

        // gcd with itself
        match simple_gcd(&s1, &s1).unwrap() {
            SimpleGcd::Simple(g) => assert_eq!(g.p, s1.p.monic()),
            SimpleGcd::Unit => panic!("self gcd is itself"),
        }

        // distinct supports rejected
        let kk = FieldDesc::sqrt2();
        let sq = FieldElement::generator(&kk);
        let c = match ExpPoly::exp_minus_const(sq, fe(3).promote(&kk)).classify() {
            Classification::Simple(s) => s,
            _ => unreachable!(),
        };
        let d = match ExpPoly::exp_minus_const(fe(1).promote(&kk), fe(3).promote(&kk))
            .classify()
        {
            Classification::Simple(s) => s,
            _ => unreachable!(),
        };
        assert!(matches!(
            simple_gcd(&c, &d),
            Err(DivGcdError::DistinctSupports)
        ));
    }

    #[test]
    fn view_with_x_factor() {
        // f = x (e^x - 1): valuation of h_0 = x is 1, one simple part
        let f = exp_minus(1, 1).mul_xpow(1);
        let v = decomposition_view(&f).unwrap();
        assert_eq!(v.valuations.get(&ExpPoly::x()).copied(), Some(1));
        assert_eq!(v.simple_parts.len(), 1);
        // order of vanishing at 0 includes the simple part's omega
        assert_eq!(v.h_valuation(&fe(0)), 2);
        assert_eq!(f.vanishing_order_algebraic(&fe(0)).unwrap(), 2);
    }

    #[test]
    fn view_with_h2_squared() {
        // f = (1 - x/2)^2 e^x (e^x - 1): valuation of h_2 is 2
        let h2 = ExpPoly::h_at(&fe(2));
        let f = h2.pow(2).mul(&exp_minus(1, 1)).unwrap();
        let v = decomposition_view(&f).unwrap();
        assert_eq!(v.h_valuation(&fe(2)), 2);
        assert_eq!(f.vanishing_order_algebraic(&fe(2)).unwrap(), 2);
        assert_eq!(v.h_valuation(&fe(5)), 0);
    }

    #[test]
    fn view_of_unit() {
        let u = ExpPoly::exp_term(fe(3), KPoly::constant(fe(7)));
        let v = decomposition_view(&u).unwrap();
        assert!(v.simple_parts.is_empty());
        assert!(v.valuations.is_empty());
        assert_eq!(v.unit.lambda, fe(7));
    }

    #[test]
    fn proposition_5_12_on_samples() {
        // f3 | gcd(f1, f2) iff f3 | f1 and f3 | f2
        let f1 = exp_minus(2, 1).mul(&exp_minus(1, 2)).unwrap();
        let f2 = exp_minus(3, 1).mul(&exp_minus(1, 2)).unwrap();
        let g = ep_gcd(&f1, &f2).unwrap();
        for f3 in [
            exp_minus(1, 1),
            exp_minus(1, 2),
            exp_minus(2, 1),
            ExpPoly::x(),
        ] {
            let divides_gcd = ep_divides(&f3, &g).unwrap().is_some();
            let divides_both = ep_divides(&f3, &f1).unwrap().is_some()
                && ep_divides(&f3, &f2).unwrap().is_some();
            assert_eq!(divides_gcd, divides_both, "failed for {:?}", f3);
        }
    }

    #[test]
    fn proposition_5_9_on_samples() {
        // divisibility iff simple parts divide and valuations dominate
        let h = ExpPoly::from_terms(vec![
            (fe(1), KPoly::var()),
            (fe(0), KPoly::constant(fe(-2))),
        ])
        .unwrap();
        let s = exp_minus(1, 1);
        let f2 = h.pow(2).mul(&s.pow(2)).unwrap().mul_xpow(1);
        for (f1, expect) in [
            (h.clone().mul(&s).unwrap(), true),
            (h.pow(3), false),
            (s.pow(2).mul_xpow(1), true),
            (s.pow(3), false),
            (ExpPoly::x().mul_xpow(1), false),
        ] {
            let direct = ep_divides(&f1, &f2).unwrap().is_some();
            assert_eq!(direct, expect, "direct division failed for {:?}", f1);
            let v1 = decomposition_view(&f1).unwrap();
            let v2 = decomposition_view(&f2).unwrap();
            let vals_ok = v1
                .valuations
                .iter()
                .all(|(k, m)| v2.valuations.get(k).copied().unwrap_or(0) >= *m);
            let simples_ok = v1.simple_parts.iter().all(|(key, s1)| {
                match v2.simple_parts.get(key) {
                    None => false,
                    Some(s2) => match simple_gcd(s1, s2).unwrap() {
                        SimpleGcd::Unit => s1.p.is_constant(),
                        SimpleGcd::Simple(g) => g.p.deg() == s1.p.deg(),
                    },
                }
            });
            assert_eq!(direct, vals_ok && simples_ok, "parts criterion for {:?}", f1);
        }
    }
}
