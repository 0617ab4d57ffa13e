//! Half-integer Bessel exponential polynomials and their irreducibility
//! certificates.
//!
//! `T_n` denotes the entire function `sqrt(pi/2) x^|n+1/2| J_{n+1/2}(x)`
//! normalized so that `T_0 = sin x` and `T_{-1} = cos x` exactly. Each
//! `T_n` splits as `e^{-ix} (A_n(x) e^{2ix} + B_n(x))`, and for
//! `n` outside `{-1, 0}` an Eisenstein certificate at a simple unshared
//! root of `A_n` or `B_n` proves irreducibility.

use crate::exppoly::{ExpPoly, ExpPolyError};
use crate::numberfield::{FieldDesc, FieldElement};
use crate::polyalg::{self, eisenstein_certify};
use crate::ritt::Certificate;
use crate::{KMPoly, KPoly, Rat};
use num_traits::{One, Zero};
use std::sync::Arc;

#[derive(Debug, thiserror::Error)]
pub enum BesselError {
    #[error("the session field does not contain i")]
    FieldWithoutI,
    #[error("n in {{-1, 0}} gives sin or cos, which is simple, not irreducible")]
    SinCosprecondition,
    #[error("certification failed: {0}")]
    CertificationFailed(String),
    #[error(transparent)]
    ExpPoly(#[from] ExpPolyError),
}

/// A square root of -1 in the field whose embedding is +i, when the field
/// contains one.
pub fn imaginary_unit(field: &Arc<FieldDesc>) -> Option<FieldElement> {
    let one = FieldElement::one().promote(field);
    let x2p1 = KPoly::from_coeffs(vec![one.clone(), FieldElement::zero(), one]);
    let (_, factors) = polyalg::factor_univariate_k(&x2p1);
    for (p, _) in factors {
        if p.deg() == 1 {
            let root = -p.coeff(0);
            let emb = root.embed(32);
            if emb.im.is_strictly_positive() {
                return Some(root);
            }
        }
    }
    None
}

/// `cos x` as an exponential polynomial over a field containing i.
pub fn cos_exp(field: &Arc<FieldDesc>) -> Result<ExpPoly, BesselError> {
    let i = imaginary_unit(field).ok_or(BesselError::FieldWithoutI)?;
    let half = FieldElement::from_rat_value(crate::rat(1, 2)).promote(field);
    Ok(ExpPoly::from_terms(vec![
        (i.clone(), KPoly::constant(half.clone())),
        (-i, KPoly::constant(half)),
    ])?)
}

/// `sin(scale * x)` as an exponential polynomial over a field containing i.
pub fn sin_scaled(field: &Arc<FieldDesc>, scale: &Rat) -> Result<ExpPoly, BesselError> {
    let i = imaginary_unit(field).ok_or(BesselError::FieldWithoutI)?;
    let half_i = i.clone() * FieldElement::from_rat_value(crate::rat(1, 2));
    let beta = i.clone() * FieldElement::from_rat_value(scale.clone());
    Ok(ExpPoly::from_terms(vec![
        (beta.clone(), KPoly::constant(-half_i.clone())),
        (-beta, KPoly::constant(half_i)),
    ])?)
}

/// `sin x`.
pub fn sin_exp(field: &Arc<FieldDesc>) -> Result<ExpPoly, BesselError> {
    sin_scaled(field, &crate::rint(1))
}

/// The split `T_n = e^{-ix} (A_n(x) e^{2ix} + B_n(x))`.
#[derive(Debug, Clone)]
pub struct BesselSplit {
    pub n: i64,
    pub a: KPoly,
    pub b: KPoly,
    pub t: ExpPoly,
}

/// Generate `T_n` from the three-term recurrences seeded by sin and cos,
/// read off `A_n`, `B_n`, and re-verify the power series against the
/// Bessel series to order `2|n| + 10`.
pub fn bessel_split(field: &Arc<FieldDesc>, n: i64) -> Result<BesselSplit, BesselError> {
    let i = imaginary_unit(field).ok_or(BesselError::FieldWithoutI)?;
    let cos = cos_exp(field)?;
    let sin = sin_exp(field)?;
    let x2 = ExpPoly::x().mul(&ExpPoly::x())?;

    let t = if n >= 0 {
        // T_1 = T_0 - x T_{-1}; T_{k+1} = (2k+1) T_k - x^2 T_{k-1}
        let mut prev = cos.clone(); // T_{-1}
        let mut cur = sin.clone(); // T_0
        let mut k = 0i64;
        while k < n {
            let next = if k == 0 {
                cur.sub(&ExpPoly::x().mul(&prev)?)?
            } else {
                cur.scale(&FieldElement::from_int_value(2 * k + 1))
                    .sub(&x2.mul(&prev)?)?
            };
            prev = cur;
            cur = next;
            k += 1;
        }
        cur
    } else {
        // T_{-2} = -T_{-1} - x T_0; T_{-k-2} = -(2k+1) T_{-k-1} - x^2 T_{-k}
        let mut prev = sin.clone(); // T_0
        let mut cur = cos.clone(); // T_{-1}
        let mut m = -1i64;
        while m > n {
            let next = if m == -1 {
                cur.neg().sub(&ExpPoly::x().mul(&prev)?)?
            } else {
                let k = -m - 1; // so that cur = T_{-k-1}, prev = T_{-k}
                cur.scale(&FieldElement::from_int_value(-(2 * k + 1)))
                    .sub(&x2.mul(&prev)?)?
            };
            prev = cur;
            cur = next;
            m -= 1;
        }
        cur
    };

    let a = t.coeff_of(&i);
    let b = t.coeff_of(&(-i.clone()));
    debug_assert_eq!(
        t,
        ExpPoly::from_terms(vec![(i.clone(), a.clone()), (-i.clone(), b.clone())])?,
        "T_n is supported on exponents +-i"
    );

    verify_series(&t, n)?;
    Ok(BesselSplit { n, a, b, t })
}

/// `Gamma(k + 1/2) / sqrt(pi)` as an exact rational, any integer k.
fn gamma_half_ratio(k: i64) -> Rat {
    let mut acc = Rat::one();
    if k >= 0 {
        // gamma(k) = (k - 1/2)(k - 3/2)..(1/2)
        for j in 0..k {
            acc *= crate::rat(2 * j + 1, 2);
        }
    } else {
        for j in 0..(-k) {
            // gamma(k) = gamma(k+1) / (k + 1/2)
            acc /= crate::rat(-(2 * j) - 1, 2);
        }
    }
    acc
}

/// Exact Taylor comparison with the Bessel series: the coefficient of
/// `x^(2m + s)` (s = 2n+1 for n >= 0, s = 0 for n <= -1) must equal
/// `(-1)^m 2^(-2m-n-1) / (m! gamma(m+n+1))`, everything else zero.
fn verify_series(t: &ExpPoly, n: i64) -> Result<(), BesselError> {
    let order = (2 * n.unsigned_abs() + 10) as usize;
    let coeffs = t.taylor(order);
    let offset: i64 = if n >= 0 { 2 * n + 1 } else { 0 };
    let mut mfact = Rat::one();
    let mut m = 0i64;
    let mut expected = vec![Rat::zero(); order + 1];
    while (2 * m + offset) as usize <= order {
        if m > 0 {
            mfact *= crate::rint(m);
        }
        let sign = if m % 2 == 0 { Rat::one() } else { -Rat::one() };
        let pow2 = pow_rat_2(-(2 * m) - n - 1);
        let denom = &mfact * gamma_half_ratio(m + n + 1);
        expected[(2 * m + offset) as usize] = sign * pow2 / denom;
        m += 1;
    }
    for (k, c) in coeffs.iter().enumerate() {
        let want = FieldElement::from_rat_value(expected[k].clone());
        if *c != want.promote(t.field().expect("bessel field")) {
            return Err(BesselError::CertificationFailed(format!(
                "series mismatch at order {} for n = {}",
                k, n
            )));
        }
    }
    Ok(())
}

fn pow_rat_2(e: i64) -> Rat {
    if e >= 0 {
        Rat::from_integer(crate::Int::one() << e as u64)
    } else {
        Rat::new(crate::Int::one(), crate::Int::one() << (-e) as u64)
    }
}

/// Certify irreducibility of `T_n` for `n` outside `{-1, 0}`: coprime
/// `A_n, B_n`, simple roots away from 0, a simple unshared root, and
/// Eisenstein on `A_n Y^k + B_n` (or its reversal) for every `k` up to
/// the refinement bound.
pub fn bessel_certify(field: &Arc<FieldDesc>, n: i64) -> Result<Certificate, BesselError> {
    if n == -1 || n == 0 {
        return Err(BesselError::SinCosprecondition);
    }
    let split = bessel_split(field, n)?;
    let a = &split.a;
    let b = &split.b;
    if !a.gcd(b).is_constant() {
        return Err(BesselError::CertificationFailed(
            "A_n and B_n share a factor".to_string(),
        ));
    }
    for (name, side) in [("A", a), ("B", b)] {
        for (part, mult) in side.monic().squarefree_decomposition() {
            if mult > 1 && !part.coeff(0).is_zero() {
                return Err(BesselError::CertificationFailed(format!(
                    "{}_n has a repeated root away from 0",
                    name
                )));
            }
            if mult > 1 && part.deg() > 1 {
                return Err(BesselError::CertificationFailed(format!(
                    "{}_n has a repeated nonzero root",
                    name
                )));
            }
        }
    }
    let (prime, side_a) = match simple_unshared_prime(a, b) {
        Some(p) => (p, true),
        None => match simple_unshared_prime(b, a) {
            Some(p) => (p, false),
            None => {
                return Err(BesselError::CertificationFailed(
                    "no simple unshared root found".to_string(),
                ))
            }
        },
    };
    // Eisenstein for A Y^k + B (p | B side) or the reversed form
    let (low, high) = if side_a { (b, a) } else { (a, b) };
    // here p divides `high` simply and not `low`; Eisenstein applies to
    // low * Y^k + high, the reversal of high * Y^k + low
    let bound = {
        let d = a.deg().max(b.deg()) as u32 + 2;
        (d * d).max(2)
    };
    for k in 1..=bound {
        let mp = biv(low, high, k as usize);
        match eisenstein_certify(&mp, 1, &prime, 0) {
            Ok(true) => {}
            Ok(false) => {
                return Err(BesselError::CertificationFailed(format!(
                    "Eisenstein check failed at k = {}",
                    k
                )))
            }
            Err(e) => {
                return Err(BesselError::CertificationFailed(format!(
                    "Eisenstein prime rejected: {}",
                    e
                )))
            }
        }
    }
    Ok(Certificate::EisensteinSimpleRoot { prime, side_a })
}

/// `lead(x) Y^k + constant(x)` as a two-variable polynomial (x, Y).
fn biv(lead: &KPoly, constant: &KPoly, k: usize) -> KMPoly {
    let mut mp = KMPoly::zero(2);
    for (j, c) in lead.coeffs().iter().enumerate() {
        if !c.is_zero() {
            mp = mp.add(&KMPoly::term(2, vec![j as u32, k as u32], c.clone()));
        }
    }
    for (j, c) in constant.coeffs().iter().enumerate() {
        if !c.is_zero() {
            mp = mp.add(&KMPoly::term(2, vec![j as u32, 0], c.clone()));
        }
    }
    mp
}

/// Monic irreducible factor of `a` of multiplicity exactly one that does
/// not divide `other`.
fn simple_unshared_prime(a: &KPoly, other: &KPoly) -> Option<KPoly> {
    if a.is_constant() {
        return None;
    }
    for (part, mult) in a.monic().squarefree_decomposition() {
        if mult != 1 {
            continue;
        }
        let unshared = part.exact_div(&part.gcd(other)).expect("gcd divides");
        if unshared.is_constant() {
            continue;
        }
        let (_, factors) = polyalg::factor_univariate_k(&unshared);
        if let Some((p, _)) = factors.into_iter().next() {
            return Some(p);
        }
    }
    None
}
