//! Exact arithmetic in a fixed number field `K = Q(t)` with a
//! distinguished complex embedding.
//!
//! A field is described by a monic irreducible minimal polynomial plus an
//! isolating rectangle pinning down which complex root the generator maps
//! to. Elements are coordinate vectors in the power basis. Rationals are
//! represented without a field descriptor and promote on contact, so the
//! same element type doubles as the scalar for generic polynomial code.

use crate::dyadic::{winding_number, CBox, ContourError, RInt, Rectangle};
use crate::polyalg::{is_irreducible_rational, Poly};
use crate::scalar::Scalar;
use crate::Rat;
use num_traits::{One, Zero};
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::sync::{Arc, RwLock};

#[derive(Debug, thiserror::Error)]
pub enum FieldError {
    #[error("minimal polynomial is reducible over Q")]
    ReduciblePolynomial,
    #[error("minimal polynomial must be monic of degree >= 1")]
    NotMonic,
    #[error("isolating box contains no root of the minimal polynomial")]
    BoxContainsNoRoot,
    #[error("isolating box contains {0} roots of the minimal polynomial")]
    BoxContainsMultipleRoots(u32),
    #[error("division by zero field element")]
    DivisionByZero,
    #[error("operands belong to different fields")]
    MixedFields,
}

/// Description of the ambient field: minimal polynomial and the isolating
/// rectangle selecting the distinguished embedding.
pub struct FieldDesc {
    minpoly: Poly<Rat>,
    isolating_box: Rectangle,
    root: RwLock<CBox>,
}

impl fmt::Debug for FieldDesc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q(t), t root of {} near {:?}", self.minpoly, self.isolating_box.center())
    }
}

impl PartialEq for FieldDesc {
    fn eq(&self, other: &Self) -> bool {
        self.minpoly == other.minpoly && self.isolating_box == other.isolating_box
    }
}

/// Exact rational complex evaluation of a rational polynomial.
fn eval_poly_rat_complex(p: &Poly<Rat>, re: &Rat, im: &Rat) -> (Rat, Rat) {
    let mut ar = Rat::zero();
    let mut ai = Rat::zero();
    for c in p.coeffs().iter().rev() {
        let nr = &ar * re - &ai * im + c;
        let ni = &ar * im + &ai * re;
        ar = nr;
        ai = ni;
    }
    (ar, ai)
}

/// Interval Horner evaluation of a rational polynomial on a complex box.
fn eval_poly_rat_cbox(p: &Poly<Rat>, z: &CBox, prec: u32) -> CBox {
    let mut acc = CBox::zero();
    for c in p.coeffs().iter().rev() {
        let cb = CBox {
            re: RInt::from_rat(c, prec),
            im: RInt::zero(),
        };
        acc = acc.mul(z, prec).add(&cb, prec);
    }
    acc
}

/// Winding count of a rational polynomial around a rectangle boundary,
/// retrying with tiny expansions when a root sits on the boundary.
/// Segments are enclosed by the centered form to dodge the interval
/// dependency problem.
fn poly_winding(p: &Poly<Rat>, rect: &Rectangle, prec_max: u32) -> Result<i64, ContourError> {
    let dp = p.derivative();
    let mut eval = |z: &CBox, prec: u32| {
        if z.width().is_zero() {
            return eval_poly_rat_cbox(p, z, prec);
        }
        let (mr, mi) = z.mid();
        let mid = CBox::point(mr, mi);
        let fm = eval_poly_rat_cbox(p, &mid, prec);
        let dfb = eval_poly_rat_cbox(&dp, z, prec);
        fm.add(&dfb.mul(&z.sub(&mid, prec), prec), prec)
    };
    let mut last = ContourError::ZeroOnBoundary;
    for jit in 0..6 {
        let r = if jit == 0 {
            rect.clone()
        } else {
            let eps = rect.diameter() * crate::rat(1, 97 + 131 * jit as i64);
            rect.expand(&eps)
        };
        match winding_number(&mut eval, &r, 32, prec_max) {
            Ok(w) => return Ok(w),
            Err(e) => last = e,
        }
    }
    Err(last)
}

impl FieldDesc {
    /// Validate and build a field description.
    pub fn create(minpoly: Poly<Rat>, isolating_box: Rectangle) -> Result<Arc<FieldDesc>, FieldError> {
        if minpoly.is_zero() || minpoly.is_constant() || !minpoly.leading().is_one() {
            return Err(FieldError::NotMonic);
        }
        if minpoly.deg() > 1 && !is_irreducible_rational(&minpoly) {
            return Err(FieldError::ReduciblePolynomial);
        }
        let w = poly_winding(&minpoly, &isolating_box, 512)
            .map_err(|_| FieldError::BoxContainsNoRoot)?;
        match w {
            0 => return Err(FieldError::BoxContainsNoRoot),
            1 => {}
            n => return Err(FieldError::BoxContainsMultipleRoots(n as u32)),
        }
        let root = isolating_box.as_cbox(64);
        Ok(Arc::new(FieldDesc {
            minpoly,
            isolating_box,
            root: RwLock::new(root),
        }))
    }

    pub fn degree(&self) -> usize {
        self.minpoly.deg()
    }

    pub fn minpoly(&self) -> &Poly<Rat> {
        &self.minpoly
    }

    pub fn isolating_box(&self) -> &Rectangle {
        &self.isolating_box
    }

    /// The rational field Q, presented as Q(t) with t = 0.
    pub fn rationals() -> Arc<FieldDesc> {
        FieldDesc::create(
            Poly::from_i64s(&[0, 1]),
            Rectangle::from_i64(-1, 1, -1, 1),
        )
        .expect("Q is a valid field")
    }

    /// Q(i), generator isolated near +i.
    pub fn gaussian() -> Arc<FieldDesc> {
        FieldDesc::create(
            Poly::from_i64s(&[1, 0, 1]),
            Rectangle::new(crate::rat(-1, 2), crate::rat(1, 2), crate::rat(1, 2), crate::rat(3, 2)),
        )
        .expect("Q(i) is a valid field")
    }

    /// Q(sqrt2), generator isolated near +1.41.
    pub fn sqrt2() -> Arc<FieldDesc> {
        FieldDesc::create(
            Poly::from_i64s(&[-2, 0, 1]),
            Rectangle::new(crate::rint(1), crate::rint(2), crate::rat(-1, 2), crate::rat(1, 2)),
        )
        .expect("Q(sqrt2) is a valid field")
    }

    /// Q(zeta_8), generator isolated near exp(i pi/4).
    pub fn zeta8() -> Arc<FieldDesc> {
        FieldDesc::create(
            Poly::from_i64s(&[1, 0, 0, 0, 1]),
            Rectangle::new(crate::rat(1, 2), crate::rint(1), crate::rat(1, 2), crate::rint(1)),
        )
        .expect("Q(zeta8) is a valid field")
    }

    /// Q(zeta_12), generator isolated near exp(i pi/6).
    pub fn zeta12() -> Arc<FieldDesc> {
        FieldDesc::create(
            Poly::from_i64s(&[1, 0, -1, 0, 1]),
            Rectangle::new(crate::rat(1, 2), crate::rint(1), crate::rat(1, 4), crate::rat(3, 4)),
        )
        .expect("Q(zeta12) is a valid field")
    }

    /// Certified enclosure of the generator, width at most `2^-prec`.
    pub fn root_enclosure(self: &Arc<Self>, prec: u32) -> CBox {
        {
            let r = self.root.read().unwrap();
            if width_below(&r, prec) {
                return r.clone();
            }
        }
        let mut guard = self.root.write().unwrap();
        if width_below(&guard, prec) {
            return guard.clone();
        }
        let mut cur = guard.clone();
        let wp = prec + 32;
        let dp = self.minpoly.derivative();
        let mut stall = 0u32;
        while !width_below(&cur, prec) {
            // interval Newton around the exact midpoint
            let (mre, mim) = cur.mid();
            let (mre_r, mim_r) = (mre.to_rat(), mim.to_rat());
            let (fre, fim) = eval_poly_rat_complex(&self.minpoly, &mre_r, &mim_r);
            let fval = CBox::from_rat_point(&fre, &fim, wp);
            let dval = eval_poly_rat_cbox(&dp, &cur, wp);
            let mpoint = CBox::point(mre.clone(), mim.clone());
            let step = fval.div(&dval, wp);
            let next = match step {
                Some(s) => {
                    let n = mpoint.sub(&s, wp);
                    intersect(&n, &cur)
                }
                None => None,
            };
            match next {
                Some(n) if n.width().cmp(&cur.width().mul_pow2(-1)) == Ordering::Less => {
                    cur = n;
                    stall = 0;
                }
                Some(n) => {
                    cur = n;
                    stall += 1;
                }
                None => stall += 1,
            }
            if stall >= 2 {
                // fall back on one quadrisection step certified by winding
                cur = quadrisect_root(&self.minpoly, &cur).unwrap_or(cur);
                stall = 0;
            }
        }
        *guard = cur.clone();
        cur
    }
}

fn width_below(b: &CBox, prec: u32) -> bool {
    b.width().log2_bound() <= -(prec as i64)
}

fn intersect(a: &CBox, b: &CBox) -> Option<CBox> {
    let re = intersect_r(&a.re, &b.re)?;
    let im = intersect_r(&a.im, &b.im)?;
    Some(CBox { re, im })
}

fn intersect_r(a: &RInt, b: &RInt) -> Option<RInt> {
    let lo = a.lo.max(&b.lo);
    let hi = a.hi.min(&b.hi);
    (lo.cmp(&hi) != Ordering::Greater).then(|| RInt::new(lo, hi))
}

/// Replace a root enclosure by one quarter of it, chosen by winding count.
fn quadrisect_root(p: &Poly<Rat>, cur: &CBox) -> Option<CBox> {
    let rect = Rectangle::new(
        cur.re.lo.to_rat(),
        cur.re.hi.to_rat(),
        cur.im.lo.to_rat(),
        cur.im.hi.to_rat(),
    );
    // slightly off-center cuts dodge roots on the cut lines
    for denom in [2i64, 3, 5, 7] {
        let cx = &rect.re_lo + rect.width() * crate::rat(denom - 1, 2 * denom - 1);
        let cy = &rect.im_lo + rect.height() * crate::rat(denom - 1, 2 * denom - 1);
        let mut found = None;
        let mut ok = true;
        for q in rect.quadrisect_at(&(cx.clone(), cy.clone())) {
            match poly_winding(p, &q, 256) {
                Ok(1) => {
                    if found.is_none() {
                        found = Some(q);
                    }
                }
                Ok(_) => {}
                Err(_) => {
                    ok = false;
                    break;
                }
            }
        }
        if ok {
            if let Some(q) = found {
                return Some(q.as_cbox(256));
            }
        }
    }
    None
}

/// Element of the session number field (or a plain rational before any
/// field contact).
#[derive(Clone)]
pub struct FieldElement {
    desc: Option<Arc<FieldDesc>>,
    coords: Vec<Rat>,
}

impl FieldElement {
    pub fn from_rat_value(r: Rat) -> Self {
        FieldElement {
            desc: None,
            coords: vec![r],
        }
    }

    pub fn from_int_value(n: i64) -> Self {
        FieldElement::from_rat_value(crate::rint(n))
    }

    /// The generator t of the field.
    pub fn generator(desc: &Arc<FieldDesc>) -> Self {
        let d = desc.degree();
        if d == 1 {
            // t is the unique rational root of the degree-one minpoly
            let r = -desc.minpoly().coeff(0);
            return FieldElement {
                desc: Some(desc.clone()),
                coords: vec![r],
            };
        }
        let mut coords = vec![Rat::zero(); d];
        coords[1] = Rat::one();
        FieldElement {
            desc: Some(desc.clone()),
            coords,
        }
    }

    pub fn from_coords(desc: &Arc<FieldDesc>, coords: Vec<Rat>) -> Self {
        assert_eq!(coords.len(), desc.degree());
        FieldElement {
            desc: Some(desc.clone()),
            coords,
        }
    }

    pub fn field(&self) -> Option<&Arc<FieldDesc>> {
        self.desc.as_ref()
    }

    pub fn coords(&self) -> &[Rat] {
        &self.coords
    }

    pub fn promote(&self, desc: &Arc<FieldDesc>) -> Self {
        match &self.desc {
            Some(d) => {
                assert!(compatible(d, desc), "cannot promote across fields");
                self.clone()
            }
            None => {
                let mut coords = vec![Rat::zero(); desc.degree()];
                coords[0] = self.coords[0].clone();
                FieldElement {
                    desc: Some(desc.clone()),
                    coords,
                }
            }
        }
    }

    pub fn is_rational(&self) -> bool {
        self.coords.iter().skip(1).all(|c| c.is_zero())
    }

    pub fn to_rat(&self) -> Option<Rat> {
        self.is_rational().then(|| self.coords[0].clone())
    }

    fn align(a: &Self, b: &Self) -> Result<(Self, Self), FieldError> {
        match (&a.desc, &b.desc) {
            (None, None) => Ok((a.clone(), b.clone())),
            (Some(d), None) => Ok((a.clone(), b.promote(d))),
            (None, Some(d)) => Ok((a.promote(d), b.clone())),
            (Some(da), Some(db)) => {
                if compatible(da, db) {
                    Ok((a.clone(), b.clone()))
                } else {
                    Err(FieldError::MixedFields)
                }
            }
        }
    }

    pub fn checked_add(&self, rhs: &Self) -> Result<Self, FieldError> {
        let (a, b) = Self::align(self, rhs)?;
        let coords = a
            .coords
            .iter()
            .zip(&b.coords)
            .map(|(x, y)| x + y)
            .collect();
        Ok(FieldElement {
            desc: a.desc.clone(),
            coords,
        })
    }

    pub fn checked_sub(&self, rhs: &Self) -> Result<Self, FieldError> {
        self.checked_add(&rhs.clone().neg())
    }

    pub fn checked_mul(&self, rhs: &Self) -> Result<Self, FieldError> {
        let (a, b) = Self::align(self, rhs)?;
        match &a.desc {
            None => Ok(FieldElement::from_rat_value(&a.coords[0] * &b.coords[0])),
            Some(d) => {
                let pa = Poly::from_coeffs(a.coords.clone());
                let pb = Poly::from_coeffs(b.coords.clone());
                let prod = pa.mul(&pb);
                let (_, rem) = prod.div_rem(d.minpoly());
                let mut coords = vec![Rat::zero(); d.degree()];
                for (k, c) in rem.coeffs().iter().enumerate() {
                    coords[k] = c.clone();
                }
                Ok(FieldElement {
                    desc: Some(d.clone()),
                    coords,
                })
            }
        }
    }

    pub fn checked_inv(&self) -> Result<Self, FieldError> {
        if Zero::is_zero(self) {
            return Err(FieldError::DivisionByZero);
        }
        match &self.desc {
            None => Ok(FieldElement::from_rat_value(self.coords[0].recip())),
            Some(d) => {
                let pa = Poly::from_coeffs(self.coords.clone());
                let (g, s, _) = pa.extended_gcd(d.minpoly());
                assert!(g.is_constant() && !g.is_zero(), "minpoly not irreducible?");
                let ginv = g.constant_term().recip();
                let inv = s.scale(&ginv);
                let (_, rem) = inv.div_rem(d.minpoly());
                let mut coords = vec![Rat::zero(); d.degree()];
                for (k, c) in rem.coeffs().iter().enumerate() {
                    coords[k] = c.clone();
                }
                Ok(FieldElement {
                    desc: Some(d.clone()),
                    coords,
                })
            }
        }
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self, FieldError> {
        self.checked_mul(&rhs.checked_inv()?)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = FieldElement::from_rat_value(Rat::one());
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base.clone();
            }
            e >>= 1;
            if e > 0 {
                base = base.clone() * base;
            }
        }
        acc
    }

    /// Certified enclosure of the image under the distinguished embedding,
    /// width at most `2^-prec`. Exact for zero.
    pub fn embed(&self, prec: u32) -> CBox {
        if Zero::is_zero(self) {
            return CBox::zero();
        }
        match &self.desc {
            None => CBox::from_rat_point(&self.coords[0], &Rat::zero(), prec + 8),
            Some(d) => {
                if self.is_rational() {
                    return CBox::from_rat_point(&self.coords[0], &Rat::zero(), prec + 8);
                }
                let mut root_prec = prec + 16;
                loop {
                    let theta = d.root_enclosure(root_prec);
                    let wp = root_prec + 16;
                    let mut acc = CBox::zero();
                    for c in self.coords.iter().rev() {
                        let cb = CBox {
                            re: RInt::from_rat(c, wp),
                            im: RInt::zero(),
                        };
                        acc = acc.mul(&theta, wp).add(&cb, wp);
                    }
                    if acc.width().log2_bound() <= -(prec as i64) {
                        return acc;
                    }
                    root_prec *= 2;
                }
            }
        }
    }

    /// Approximate complex value, for display only.
    pub fn approx(&self) -> (f64, f64) {
        let b = self.embed(64);
        (b.re.to_f64_mid(), b.im.to_f64_mid())
    }

    /// The rational `r` with `self = r * rhs`, when one exists.
    pub fn rational_ratio(&self, rhs: &Self) -> Result<Option<Rat>, FieldError> {
        let q = self.checked_div(rhs)?;
        Ok(q.to_rat())
    }
}

fn compatible(a: &Arc<FieldDesc>, b: &Arc<FieldDesc>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

impl PartialEq for FieldElement {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for FieldElement {}

impl PartialOrd for FieldElement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for FieldElement {
    fn cmp(&self, other: &Self) -> Ordering {
        match (&self.desc, &other.desc) {
            (None, None) => self.coords[0].cmp(&other.coords[0]),
            (Some(d), None) => {
                let o = other.promote(d);
                cmp_coords(&self.coords, &o.coords)
            }
            (None, Some(d)) => {
                let s = self.promote(d);
                cmp_coords(&s.coords, &other.coords)
            }
            (Some(da), Some(db)) => {
                if compatible(da, db) {
                    cmp_coords(&self.coords, &other.coords)
                } else {
                    // arbitrary but total: order by field description
                    let ka = format!("{:?}", da);
                    let kb = format!("{:?}", db);
                    ka.cmp(&kb).then_with(|| cmp_coords(&self.coords, &other.coords))
                }
            }
        }
    }
}

fn cmp_coords(a: &[Rat], b: &[Rat]) -> Ordering {
    a.cmp(b)
}

impl Neg for FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        FieldElement {
            desc: self.desc,
            coords: self.coords.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! impl_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait for FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: FieldElement) -> FieldElement {
                self.$checked(&rhs).expect("field operation failed")
            }
        }
    };
}

impl_binop!(Add, add, checked_add);
impl_binop!(Sub, sub, checked_sub);
impl_binop!(Mul, mul, checked_mul);
impl_binop!(Div, div, checked_div);

impl Zero for FieldElement {
    fn zero() -> Self {
        FieldElement::from_rat_value(Rat::zero())
    }
    fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }
}

impl One for FieldElement {
    fn one() -> Self {
        FieldElement::from_rat_value(Rat::one())
    }
    fn is_one(&self) -> bool {
        self.coords[0].is_one() && self.coords.iter().skip(1).all(|c| c.is_zero())
    }
}

impl Scalar for FieldElement {
    fn from_rat(r: &Rat) -> Self {
        FieldElement::from_rat_value(r.clone())
    }
    fn to_rat(&self) -> Option<Rat> {
        FieldElement::to_rat(self)
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_rational() {
            return write!(f, "{}", self.coords[0]);
        }
        let mut first = true;
        for (k, c) in self.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{}", c)?,
                1 if c.is_one() => write!(f, "t")?,
                1 => write!(f, "{}*t", c)?,
                _ if c.is_one() => write!(f, "t^{}", k)?,
                _ => write!(f, "{}*t^{}", c, k)?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl serde::Serialize for FieldElement {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeSeq;
        let mut seq = s.serialize_seq(Some(self.coords.len()))?;
        for c in &self.coords {
            seq.serialize_element(&c.to_string())?;
        }
        seq.end()
    }
}

/// Spec-level operation names, thin wrappers over the methods above.
pub mod ops {
    use super::*;

    pub fn field_create(
        minpoly: Poly<Rat>,
        isolating_box: Rectangle,
    ) -> Result<Arc<FieldDesc>, FieldError> {
        FieldDesc::create(minpoly, isolating_box)
    }

    pub fn embed_numeric(a: &FieldElement, precision: u32) -> CBox {
        a.embed(precision)
    }

    pub fn rational_ratio(b1: &FieldElement, b2: &FieldElement) -> Result<Option<Rat>, FieldError> {
        b1.rational_ratio(b2)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{rat, rint};

    #[test]
    fn gaussian_field_basics() {
        let k = FieldDesc::gaussian();
        let i = FieldElement::generator(&k);
        // i^2 = -1
        let sq = i.clone() * i.clone();
        assert_eq!(sq, FieldElement::from_int_value(-1));
        // (3 + 2i) embeds near 3+2i
        let e = (FieldElement::from_int_value(3) + FieldElement::from_int_value(2) * i.clone())
            .embed(53);
        assert!((e.re.to_f64_mid() - 3.0).abs() < 1e-12);
        assert!((e.im.to_f64_mid() - 2.0).abs() < 1e-12);
    }

    #[test]
    fn sqrt2_inverse() {
        let k = FieldDesc::sqrt2();
        let s = FieldElement::generator(&k);
        // 1/sqrt2 = sqrt2/2
        let inv = s.checked_inv().unwrap();
        let expected = s.clone() * FieldElement::from_rat_value(rat(1, 2));
        assert_eq!(inv, expected);
        let emb = s.embed(64);
        // the square of the enclosure must contain 2 exactly
        let sq = emb.mul(&emb, 96);
        assert!(sq.re.lo.to_rat() <= rint(2) && rint(2) <= sq.re.hi.to_rat());
    }

    #[test]
    fn zeta8_contains_i_and_sqrt2() {
        let k = FieldDesc::zeta8();
        let z = FieldElement::generator(&k);
        // z + z^3 = i*sqrt2: embedding ~ 1.41421356 i
        let v = z.clone() + z.pow(3);
        let e = v.embed(64);
        assert!(e.re.to_f64_mid().abs() < 1e-10);
        assert!((e.im.to_f64_mid() - 1.4142135623730951).abs() < 1e-10);
        // z^2 = i
        let i = z.pow(2);
        assert_eq!(i.clone() * i.clone(), FieldElement::from_int_value(-1));
    }

    #[test]
    fn create_rejects_bad_inputs() {
        // reducible
        let e = FieldDesc::create(
            Poly::from_i64s(&[-1, 0, 1]),
            Rectangle::new(rat(1, 2), rat(3, 2), rat(-1, 2), rat(1, 2)),
        );
        assert!(matches!(e, Err(FieldError::ReduciblePolynomial)));
        // no root in box
        let e = FieldDesc::create(
            Poly::from_i64s(&[1, 0, 1]),
            Rectangle::new(rint(5), rint(6), rint(5), rint(6)),
        );
        assert!(matches!(e, Err(FieldError::BoxContainsNoRoot)));
        // two roots in box
        let e = FieldDesc::create(
            Poly::from_i64s(&[1, 0, 1]),
            Rectangle::new(rint(-1), rint(1), rint(-2), rint(2)),
        );
        assert!(matches!(e, Err(FieldError::BoxContainsMultipleRoots(2))));
        // not monic
        let e = FieldDesc::create(
            Poly::from_i64s(&[1, 0, 2]),
            Rectangle::from_i64(-1, 1, -1, 1),
        );
        assert!(matches!(e, Err(FieldError::NotMonic)));
    }

    #[test]
    fn mixed_fields_error() {
        let a = FieldElement::generator(&FieldDesc::gaussian());
        let b = FieldElement::generator(&FieldDesc::sqrt2());
        assert!(matches!(a.checked_add(&b), Err(FieldError::MixedFields)));
    }

    #[test]
    fn rational_ratio_cases() {
        let k = FieldDesc::sqrt2();
        let s = FieldElement::generator(&k);
        let two_s = s.clone() * FieldElement::from_int_value(2);
        assert_eq!(two_s.rational_ratio(&s).unwrap(), Some(rint(2)));
        assert_eq!(
            FieldElement::from_int_value(1).rational_ratio(&s).unwrap(),
            None
        );
        assert!(matches!(
            s.rational_ratio(&FieldElement::zero()),
            Err(FieldError::DivisionByZero)
        ));
        // (3t+3)/(t+1) = 3 in Q(zeta8)
        let k8 = FieldDesc::zeta8();
        let z = FieldElement::generator(&k8);
        let n = z.clone() * FieldElement::from_int_value(3) + FieldElement::from_int_value(3);
        let d = z.clone() + FieldElement::from_int_value(1);
        assert_eq!(n.rational_ratio(&d).unwrap(), Some(rint(3)));
    }

    #[test]
    fn embedding_homomorphism_within_tolerance() {
        let k = FieldDesc::zeta8();
        let z = FieldElement::generator(&k);
        let a = z.clone() + FieldElement::from_rat_value(rat(1, 3));
        let b = z.pow(2) - FieldElement::from_rat_value(rat(7, 5));
        let prod = a.clone() * b.clone();
        let ea = a.embed(80);
        let eb = b.embed(80);
        let ep = prod.embed(80);
        let eab = ea.mul(&eb, 80);
        // enclosures of the same number must intersect
        assert!(super::intersect(&ep, &eab).is_some());
    }

    #[test]
    fn high_precision_embedding() {
        let k = FieldDesc::sqrt2();
        let s = FieldElement::generator(&k);
        let e = s.embed(300);
        assert!(e.width().log2_bound() <= -300);
        // square of the enclosure must contain 2
        let sq = e.mul(&e, 320);
        assert!(sq.re.lo.to_rat() <= rint(2) && rint(2) <= sq.re.hi.to_rat());
    }
}
