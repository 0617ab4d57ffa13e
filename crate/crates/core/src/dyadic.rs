//! Certified interval arithmetic on dyadic endpoints.
//!
//! All certified numerics in the crate go through this layer: endpoints
//! are exact `m * 2^e` values, every operation rounds outward at a caller
//! chosen working precision, and the complex exponential comes with a
//! proven truncation bound. Nothing here ever rounds an enclosure inward.

use crate::{Int, Rat};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::cmp::Ordering;

/// Exact dyadic number `m * 2^e`.
#[derive(Clone, Debug)]
pub struct Dyadic {
    m: Int,
    e: i64,
}

#[derive(Clone, Copy, PartialEq, Eq)]
pub enum Round {
    Floor,
    Ceil,
}

impl Dyadic {
    pub fn zero() -> Self {
        Dyadic {
            m: Int::zero(),
            e: 0,
        }
    }

    pub fn one() -> Self {
        Dyadic {
            m: Int::one(),
            e: 0,
        }
    }

    pub fn new(m: Int, e: i64) -> Self {
        let mut d = Dyadic { m, e };
        d.normalize();
        d
    }

    pub fn from_int(n: i64) -> Self {
        Dyadic::new(Int::from(n), 0)
    }

    fn normalize(&mut self) {
        if self.m.is_zero() {
            self.e = 0;
            return;
        }
        let tz = self.m.trailing_zeros().unwrap_or(0);
        if tz > 0 {
            self.m = &self.m >> tz;
            self.e += tz as i64;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.m.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.m.is_negative()
    }

    pub fn is_positive(&self) -> bool {
        self.m.is_positive()
    }

    pub fn neg(&self) -> Self {
        Dyadic {
            m: -self.m.clone(),
            e: self.e,
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let (a, b) = if self.e <= rhs.e { (self, rhs) } else { (rhs, self) };
        let shift = (b.e - a.e) as u64;
        Dyadic::new(&a.m + (&b.m << shift), a.e)
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        Dyadic::new(&self.m * &rhs.m, self.e + rhs.e)
    }

    pub fn mul_pow2(&self, k: i64) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        Dyadic {
            m: self.m.clone(),
            e: self.e + k,
        }
    }

    /// Keep at most `prec` mantissa bits, rounding in the given direction.
    pub fn round(&self, prec: u32, dir: Round) -> Self {
        let bits = self.m.bits();
        if bits <= prec as u64 {
            return self.clone();
        }
        let shift = bits - prec as u64;
        let m = match dir {
            Round::Floor => &self.m >> shift,
            Round::Ceil => -((-&self.m) >> shift),
        };
        Dyadic::new(m, self.e + shift as i64)
    }

    /// `a / b` rounded in the given direction at `prec` mantissa bits.
    pub fn div(&self, rhs: &Self, prec: u32, dir: Round) -> Self {
        assert!(!rhs.is_zero(), "dyadic division by zero");
        if self.is_zero() {
            return Dyadic::zero();
        }
        let nbits = self.m.bits() as i64;
        let dbits = rhs.m.bits() as i64;
        let k = prec as i64 + dbits - nbits + 2;
        let (num, e) = if k >= 0 {
            (&self.m << k as u64, self.e - rhs.e - k)
        } else {
            (self.m.clone(), self.e - rhs.e - k)
        };
        let den = if k >= 0 {
            rhs.m.clone()
        } else {
            &rhs.m << (-k) as u64
        };
        let m = match dir {
            Round::Floor => num.div_floor(&den),
            Round::Ceil => num.div_ceil(&den),
        };
        Dyadic::new(m, e)
    }

    pub fn from_rat(r: &Rat, prec: u32, dir: Round) -> Self {
        if r.is_zero() {
            return Dyadic::zero();
        }
        let num = Dyadic::new(r.numer().clone(), 0);
        let den = Dyadic::new(r.denom().clone(), 0);
        // exact if the denominator is a power of two and small enough
        if r.denom().bits() <= 1 || (r.denom() & (r.denom() - Int::one())).is_zero() {
            let tz = r.denom().trailing_zeros().unwrap_or(0) as i64;
            return Dyadic::new(r.numer().clone(), -tz);
        }
        num.div(&den, prec, dir)
    }

    pub fn to_rat(&self) -> Rat {
        if self.e >= 0 {
            Rat::from_integer(&self.m << self.e as u64)
        } else {
            Rat::new(self.m.clone(), Int::one() << (-self.e) as u64)
        }
    }

    pub fn to_f64(&self) -> f64 {
        if self.m.is_zero() {
            return 0.0;
        }
        let bits = self.m.bits();
        let (head, exp) = if bits <= 53 {
            (self.m.to_f64().unwrap_or(f64::NAN), self.e)
        } else {
            let shift = bits - 53;
            (
                (&self.m >> shift).to_f64().unwrap_or(f64::NAN),
                self.e + shift as i64,
            )
        };
        // head has at most 53 bits, so scaling by a power of two is exact
        // within the normal range
        head * 2f64.powi(exp.clamp(-1100, 1100) as i32)
    }

    pub fn cmp(&self, rhs: &Self) -> Ordering {
        use num_bigint::Sign;
        let (ls, rs) = (self.m.sign(), rhs.m.sign());
        let sign_rank = |s: Sign| match s {
            Sign::Minus => 0u8,
            Sign::NoSign => 1,
            Sign::Plus => 2,
        };
        match sign_rank(ls).cmp(&sign_rank(rs)) {
            Ordering::Equal => {}
            o => return o,
        }
        if ls == Sign::NoSign {
            return Ordering::Equal;
        }
        // same nonzero sign: magnitudes differ decisively when the
        // log2 brackets are disjoint
        let (la, lb) = (self.log2_bound(), rhs.log2_bound());
        if la != lb {
            let mag = la.cmp(&lb);
            return if ls == Sign::Plus { mag } else { mag.reverse() };
        }
        self.sub(rhs).m.sign().cmp(&Sign::NoSign)
    }

    pub fn abs(&self) -> Self {
        Dyadic {
            m: self.m.abs(),
            e: self.e,
        }
    }

    pub fn min(&self, rhs: &Self) -> Self {
        if self.cmp(rhs) == Ordering::Greater {
            rhs.clone()
        } else {
            self.clone()
        }
    }

    pub fn max(&self, rhs: &Self) -> Self {
        if self.cmp(rhs) == Ordering::Less {
            rhs.clone()
        } else {
            self.clone()
        }
    }

    /// Smallest k with |self| <= 2^k (zero gives a very small k).
    pub fn log2_bound(&self) -> i64 {
        if self.is_zero() {
            return i64::MIN / 2;
        }
        self.m.bits() as i64 + self.e
    }
}

/// Closed real interval with dyadic endpoints.
#[derive(Clone, Debug)]
pub struct RInt {
    pub lo: Dyadic,
    pub hi: Dyadic,
}

impl RInt {
    pub fn point(d: Dyadic) -> Self {
        RInt {
            lo: d.clone(),
            hi: d,
        }
    }

    pub fn zero() -> Self {
        RInt::point(Dyadic::zero())
    }

    pub fn new(lo: Dyadic, hi: Dyadic) -> Self {
        debug_assert!(lo.cmp(&hi) != Ordering::Greater);
        RInt { lo, hi }
    }

    pub fn from_rat(r: &Rat, prec: u32) -> Self {
        RInt {
            lo: Dyadic::from_rat(r, prec, Round::Floor),
            hi: Dyadic::from_rat(r, prec, Round::Ceil),
        }
    }

    pub fn from_rats(lo: &Rat, hi: &Rat, prec: u32) -> Self {
        RInt {
            lo: Dyadic::from_rat(lo, prec, Round::Floor),
            hi: Dyadic::from_rat(hi, prec, Round::Ceil),
        }
    }

    pub fn add(&self, rhs: &Self, prec: u32) -> Self {
        RInt {
            lo: self.lo.add(&rhs.lo).round(prec, Round::Floor),
            hi: self.hi.add(&rhs.hi).round(prec, Round::Ceil),
        }
    }

    pub fn sub(&self, rhs: &Self, prec: u32) -> Self {
        self.add(&rhs.neg(), prec)
    }

    pub fn neg(&self) -> Self {
        RInt {
            lo: self.hi.neg(),
            hi: self.lo.neg(),
        }
    }

    pub fn mul(&self, rhs: &Self, prec: u32) -> Self {
        // sign dispatch: two products suffice unless both straddle zero
        let (lo, hi) = if !self.lo.is_negative() && !rhs.lo.is_negative() {
            (self.lo.mul(&rhs.lo), self.hi.mul(&rhs.hi))
        } else if !self.lo.is_negative() && !rhs.hi.is_positive() {
            (self.hi.mul(&rhs.lo), self.lo.mul(&rhs.hi))
        } else if !self.hi.is_positive() && !rhs.lo.is_negative() {
            (self.lo.mul(&rhs.hi), self.hi.mul(&rhs.lo))
        } else if !self.hi.is_positive() && !rhs.hi.is_positive() {
            (self.hi.mul(&rhs.hi), self.lo.mul(&rhs.lo))
        } else if !rhs.lo.is_negative() {
            // self straddles, rhs >= 0
            (self.lo.mul(&rhs.hi), self.hi.mul(&rhs.hi))
        } else if !rhs.hi.is_positive() {
            (self.hi.mul(&rhs.lo), self.lo.mul(&rhs.lo))
        } else if !self.lo.is_negative() {
            (self.hi.mul(&rhs.lo), self.hi.mul(&rhs.hi))
        } else if !self.hi.is_positive() {
            (self.lo.mul(&rhs.hi), self.lo.mul(&rhs.lo))
        } else {
            // both straddle zero
            let a = self.lo.mul(&rhs.hi);
            let b = self.hi.mul(&rhs.lo);
            let c = self.lo.mul(&rhs.lo);
            let d = self.hi.mul(&rhs.hi);
            (a.min(&b), c.max(&d))
        };
        debug_assert!(lo.cmp(&hi) != Ordering::Greater);
        RInt {
            lo: lo.round(prec, Round::Floor),
            hi: hi.round(prec, Round::Ceil),
        }
    }

    pub fn contains_zero(&self) -> bool {
        !self.lo.is_positive() && !self.hi.is_negative()
    }

    pub fn is_strictly_positive(&self) -> bool {
        self.lo.is_positive()
    }

    pub fn is_strictly_negative(&self) -> bool {
        self.hi.is_negative()
    }

    pub fn recip(&self, prec: u32) -> Option<Self> {
        if self.contains_zero() {
            return None;
        }
        let one = Dyadic::one();
        Some(RInt {
            lo: one.div(&self.hi, prec, Round::Floor),
            hi: one.div(&self.lo, prec, Round::Ceil),
        })
    }

    pub fn width(&self) -> Dyadic {
        self.hi.sub(&self.lo)
    }

    pub fn mid(&self) -> Dyadic {
        self.lo.add(&self.hi).mul_pow2(-1)
    }

    pub fn hull(&self, rhs: &Self) -> Self {
        RInt {
            lo: self.lo.min(&rhs.lo),
            hi: self.hi.max(&rhs.hi),
        }
    }

    /// Pad both ends by `2^-k`.
    pub fn pad(&self, k: i64) -> Self {
        let eps = Dyadic::new(Int::one(), -k);
        RInt {
            lo: self.lo.sub(&eps),
            hi: self.hi.add(&eps),
        }
    }

    pub fn abs_upper(&self) -> Dyadic {
        self.lo.abs().max(&self.hi.abs())
    }

    pub fn to_f64_mid(&self) -> f64 {
        self.mid().to_f64()
    }
}

/// Axis-aligned complex box.
#[derive(Clone, Debug)]
pub struct CBox {
    pub re: RInt,
    pub im: RInt,
}

impl CBox {
    pub fn zero() -> Self {
        CBox {
            re: RInt::zero(),
            im: RInt::zero(),
        }
    }

    pub fn point(re: Dyadic, im: Dyadic) -> Self {
        CBox {
            re: RInt::point(re),
            im: RInt::point(im),
        }
    }

    pub fn from_rat_point(re: &Rat, im: &Rat, prec: u32) -> Self {
        CBox {
            re: RInt::from_rat(re, prec),
            im: RInt::from_rat(im, prec),
        }
    }

    pub fn add(&self, rhs: &Self, prec: u32) -> Self {
        CBox {
            re: self.re.add(&rhs.re, prec),
            im: self.im.add(&rhs.im, prec),
        }
    }

    pub fn sub(&self, rhs: &Self, prec: u32) -> Self {
        CBox {
            re: self.re.sub(&rhs.re, prec),
            im: self.im.sub(&rhs.im, prec),
        }
    }

    pub fn neg(&self) -> Self {
        CBox {
            re: self.re.neg(),
            im: self.im.neg(),
        }
    }

    pub fn mul(&self, rhs: &Self, prec: u32) -> Self {
        let ac = self.re.mul(&rhs.re, prec);
        let bd = self.im.mul(&rhs.im, prec);
        let ad = self.re.mul(&rhs.im, prec);
        let bc = self.im.mul(&rhs.re, prec);
        CBox {
            re: ac.sub(&bd, prec),
            im: ad.add(&bc, prec),
        }
    }

    pub fn scale_re(&self, r: &RInt, prec: u32) -> Self {
        CBox {
            re: self.re.mul(r, prec),
            im: self.im.mul(r, prec),
        }
    }

    pub fn norm_sq(&self, prec: u32) -> RInt {
        let rr = self.re.mul(&self.re, prec);
        let ii = self.im.mul(&self.im, prec);
        // squares are nonnegative even if the interval straddles zero
        let rr = RInt {
            lo: if self.re.contains_zero() {
                Dyadic::zero()
            } else {
                rr.lo
            },
            hi: rr.hi,
        };
        let ii = RInt {
            lo: if self.im.contains_zero() {
                Dyadic::zero()
            } else {
                ii.lo
            },
            hi: ii.hi,
        };
        rr.add(&ii, prec)
    }

    pub fn conj(&self) -> Self {
        CBox {
            re: self.re.clone(),
            im: self.im.neg(),
        }
    }

    pub fn div(&self, rhs: &Self, prec: u32) -> Option<Self> {
        let n = rhs.norm_sq(prec);
        let r = n.recip(prec)?;
        Some(self.mul(&rhs.conj(), prec).scale_re(&r, prec))
    }

    pub fn contains_zero(&self) -> bool {
        self.re.contains_zero() && self.im.contains_zero()
    }

    pub fn width(&self) -> Dyadic {
        self.re.width().max(&self.im.width())
    }

    pub fn hull(&self, rhs: &Self) -> Self {
        CBox {
            re: self.re.hull(&rhs.re),
            im: self.im.hull(&rhs.im),
        }
    }

    pub fn mid(&self) -> (Dyadic, Dyadic) {
        (self.re.mid(), self.im.mid())
    }

    /// Exact rational corners (re, im), all four.
    pub fn corners(&self) -> [(Rat, Rat); 4] {
        let rl = self.re.lo.to_rat();
        let rh = self.re.hi.to_rat();
        let il = self.im.lo.to_rat();
        let ih = self.im.hi.to_rat();
        [
            (rl.clone(), il.clone()),
            (rh.clone(), il),
            (rl, ih.clone()),
            (rh, ih),
        ]
    }

    /// Certified enclosure of `exp(self)`.
    ///
    /// Scaling and squaring: divide by `2^k` until the box has sup-norm at
    /// most 1/4, run the Taylor series with an explicit tail bound, then
    /// square `k` times.
    pub fn exp(&self, prec: u32) -> Self {
        let bound = self.re.abs_upper().max(&self.im.abs_upper());
        let mut k: i64 = bound.log2_bound() + 2;
        if k < 0 {
            k = 0;
        }
        let wp = prec + k as u32 + 16;
        let w = CBox {
            re: RInt {
                lo: self.re.lo.mul_pow2(-k),
                hi: self.re.hi.mul_pow2(-k),
            },
            im: RInt {
                lo: self.im.lo.mul_pow2(-k),
                hi: self.im.hi.mul_pow2(-k),
            },
        };
        // Taylor sum of exp(w), |w| <= 1/4 (sup norm <= 1/4 so |w| <= sqrt(2)/4 < 1/2)
        let mut sum = CBox::point(Dyadic::one(), Dyadic::zero());
        let mut term = CBox::point(Dyadic::one(), Dyadic::zero());
        let mut n: i64 = 1;
        // choose terms so that 2 * (1/2)^n / n! < 2^-(wp+4)
        loop {
            let nn = RInt::point(Dyadic::from_int(n));
            let r = nn.recip(wp).unwrap();
            term = term.mul(&w, wp).scale_re(&r, wp);
            sum = sum.add(&term, wp);
            // crude but certified tail control: once the term magnitude bound
            // drops below the threshold, |tail| <= 2*|term| since the ratio
            // |w|/(n+1) < 1/2
            let tb = term
                .re
                .abs_upper()
                .max(&term.im.abs_upper());
            if tb.log2_bound() < -(wp as i64 + 4) {
                let pad = tb.mul_pow2(2); // 2*sqrt(2)*|term| majorant
                sum = CBox {
                    re: RInt {
                        lo: sum.re.lo.sub(&pad),
                        hi: sum.re.hi.add(&pad),
                    },
                    im: RInt {
                        lo: sum.im.lo.sub(&pad),
                        hi: sum.im.hi.add(&pad),
                    },
                };
                break;
            }
            n += 1;
        }
        // square k times
        let mut acc = sum;
        for _ in 0..k {
            acc = acc.mul(&acc, wp);
        }
        CBox {
            re: RInt {
                lo: acc.re.lo.round(prec + 8, Round::Floor),
                hi: acc.re.hi.round(prec + 8, Round::Ceil),
            },
            im: RInt {
                lo: acc.im.lo.round(prec + 8, Round::Floor),
                hi: acc.im.hi.round(prec + 8, Round::Ceil),
            },
        }
    }
}

/// Certified enclosure of pi (Machin's formula with explicit tails).
pub fn pi(prec: u32) -> RInt {
    fn atan_inv(x: i64, prec: u32) -> (Rat, Rat) {
        // atan(1/x) = sum (-1)^j / ((2j+1) x^(2j+1)), alternating, so the
        // truncation error is bounded by the first omitted term
        let mut sum = Rat::zero();
        let xi = Int::from(x);
        let mut xpow = xi.clone(); // x^(2j+1)
        let mut j = 0u32;
        loop {
            let term = Rat::new(Int::one(), Int::from(2 * j as i64 + 1) * &xpow);
            if j % 2 == 0 {
                sum += &term;
            } else {
                sum -= &term;
            }
            xpow = &xpow * &xi * &xi;
            j += 1;
            let tail = Rat::new(Int::one(), Int::from(2 * j as i64 + 1) * &xpow);
            if tail < Rat::new(Int::one(), Int::one() << (prec as u64 + 8)) {
                // alternating series: true value within (sum - tail, sum + tail)
                return (&sum - &tail, &sum + &tail);
            }
        }
    }
    let (a_lo, a_hi) = atan_inv(5, prec + 6);
    let (b_lo, b_hi) = atan_inv(239, prec + 6);
    let lo = &a_lo * crate::rint(16) - &b_hi * crate::rint(4);
    let hi = &a_hi * crate::rint(16) - &b_lo * crate::rint(4);
    RInt::from_rats(&lo, &hi, prec + 4)
}

/// Rational-endpoint rectangle in the complex plane.
#[derive(Clone, Debug, PartialEq)]
pub struct Rectangle {
    pub re_lo: Rat,
    pub re_hi: Rat,
    pub im_lo: Rat,
    pub im_hi: Rat,
}

impl serde::Serialize for Rectangle {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeSeq;
        let mut seq = s.serialize_seq(Some(4))?;
        for v in [&self.re_lo, &self.re_hi, &self.im_lo, &self.im_hi] {
            seq.serialize_element(&v.to_string())?;
        }
        seq.end()
    }
}

impl Rectangle {
    pub fn new(re_lo: Rat, re_hi: Rat, im_lo: Rat, im_hi: Rat) -> Self {
        assert!(re_lo < re_hi && im_lo < im_hi, "rectangle needs positive area");
        Rectangle {
            re_lo,
            re_hi,
            im_lo,
            im_hi,
        }
    }

    pub fn from_i64(re_lo: i64, re_hi: i64, im_lo: i64, im_hi: i64) -> Self {
        Rectangle::new(
            crate::rint(re_lo),
            crate::rint(re_hi),
            crate::rint(im_lo),
            crate::rint(im_hi),
        )
    }

    /// Counterclockwise corner cycle starting at the lower left.
    pub fn corners_ccw(&self) -> [(Rat, Rat); 4] {
        [
            (self.re_lo.clone(), self.im_lo.clone()),
            (self.re_hi.clone(), self.im_lo.clone()),
            (self.re_hi.clone(), self.im_hi.clone()),
            (self.re_lo.clone(), self.im_hi.clone()),
        ]
    }

    pub fn center(&self) -> (Rat, Rat) {
        let two = crate::rint(2);
        (
            (&self.re_lo + &self.re_hi) / &two,
            (&self.im_lo + &self.im_hi) / &two,
        )
    }

    pub fn width(&self) -> Rat {
        &self.re_hi - &self.re_lo
    }

    pub fn height(&self) -> Rat {
        &self.im_hi - &self.im_lo
    }

    pub fn diameter(&self) -> Rat {
        let w = self.width();
        let h = self.height();
        if w > h {
            w
        } else {
            h
        }
    }

    pub fn area(&self) -> Rat {
        self.width() * self.height()
    }

    pub fn quadrisect_at(&self, c: &(Rat, Rat)) -> [Rectangle; 4] {
        let (cx, cy) = c;
        [
            Rectangle::new(self.re_lo.clone(), cx.clone(), self.im_lo.clone(), cy.clone()),
            Rectangle::new(cx.clone(), self.re_hi.clone(), self.im_lo.clone(), cy.clone()),
            Rectangle::new(self.re_lo.clone(), cx.clone(), cy.clone(), self.im_hi.clone()),
            Rectangle::new(cx.clone(), self.re_hi.clone(), cy.clone(), self.im_hi.clone()),
        ]
    }

    pub fn quadrisect(&self) -> [Rectangle; 4] {
        self.quadrisect_at(&self.center())
    }

    pub fn expand(&self, eps: &Rat) -> Rectangle {
        Rectangle::new(
            &self.re_lo - eps,
            &self.re_hi + eps,
            &self.im_lo - eps,
            &self.im_hi + eps,
        )
    }

    pub fn contains(&self, p: &(Rat, Rat)) -> bool {
        self.re_lo <= p.0 && p.0 <= self.re_hi && self.im_lo <= p.1 && p.1 <= self.im_hi
    }

    pub fn as_cbox(&self, prec: u32) -> CBox {
        CBox {
            re: RInt::from_rats(&self.re_lo, &self.re_hi, prec),
            im: RInt::from_rats(&self.im_lo, &self.im_hi, prec),
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum ContourError {
    #[error("an enclosure of the function on a boundary segment contains zero after max refinement")]
    ZeroOnBoundary,
    #[error("could not certify the contour at the precision limit")]
    PrecisionExhausted,
}

/// Exact winding number of a closed rational polyline around the origin,
/// by signed crossing counts of the positive real axis.
fn polyline_winding(pts: &[(Rat, Rat)]) -> i64 {
    let mut wn = 0i64;
    let zero = Rat::zero();
    for i in 0..pts.len() {
        let u = &pts[i];
        let v = &pts[(i + 1) % pts.len()];
        let cross = || -> Rat { &u.0 * &v.1 - &u.1 * &v.0 };
        if u.1 <= zero && v.1 > zero {
            if cross() > zero {
                wn += 1;
            }
        } else if u.1 > zero && v.1 <= zero && cross() < zero {
            wn -= 1;
        }
    }
    wn
}

/// Enclosure too wide relative to its own magnitude: the argument cannot
/// be resolved at this precision no matter how finely the boundary is
/// split.
fn foggy(b: &CBox) -> bool {
    let w = b.width();
    if w.is_zero() {
        return false;
    }
    let (mr, mi) = b.mid();
    let mag = mr.abs().max(&mi.abs());
    w.mul_pow2(4).cmp(&mag) != Ordering::Less
}

/// All pairwise dot products of the four corners strictly positive. This
/// certifies that the box lies in an open cone of angle below pi/2 and in
/// particular excludes the origin.
fn corners_in_sharp_cone(b: &CBox) -> bool {
    let cs = b.corners();
    let zero = Rat::zero();
    for i in 0..4 {
        for j in i..4 {
            let dot = &cs[i].0 * &cs[j].0 + &cs[i].1 * &cs[j].1;
            if dot <= zero {
                return false;
            }
        }
    }
    true
}

/// Certified winding number of `eval`'s function along the rectangle
/// boundary, walked counterclockwise.
///
/// The boundary is subdivided until the enclosure over each segment,
/// hulled with the endpoint enclosures, sits inside an open quarter-plane
/// cone. The image curve is then homotopic in the punctured plane to the
/// polyline through the enclosure midpoints, whose winding is computed by
/// exact rational crossing counts.
pub fn winding_number(
    eval: &mut dyn FnMut(&CBox, u32) -> CBox,
    rect: &Rectangle,
    prec_start: u32,
    prec_max: u32,
) -> Result<i64, ContourError> {
    winding_number_presplit(eval, rect, prec_start, prec_max, 0.0)
}

/// Like [`winding_number`], pre-splitting each edge into
/// `ceil(length * per_unit)` pieces. Callers that know the oscillation
/// rate of their function (exponential polynomials: the largest exponent
/// magnitude) skip most of the adaptive bisection this way.
pub fn winding_number_presplit(
    eval: &mut dyn FnMut(&CBox, u32) -> CBox,
    rect: &Rectangle,
    prec_start: u32,
    prec_max: u32,
    per_unit: f64,
) -> Result<i64, ContourError> {
    let mut prec = prec_start.max(16);
    loop {
        match walk_once(eval, rect, prec, per_unit) {
            Ok(w) => return Ok(w),
            Err(e) if prec >= prec_max => return Err(e),
            Err(_) => {}
        }
        prec = (prec * 2).min(prec_max);
    }
}

fn walk_once(
    eval: &mut dyn FnMut(&CBox, u32) -> CBox,
    rect: &Rectangle,
    prec: u32,
    per_unit: f64,
) -> Result<i64, ContourError> {
    let corners = rect.corners_ccw();
    let mut nodes: Vec<(Rat, Rat)> = Vec::new();
    let mut point_cache: std::collections::HashMap<(Rat, Rat), CBox> =
        std::collections::HashMap::new();
    let mut eval_point = |p: &(Rat, Rat), ev: &mut dyn FnMut(&CBox, u32) -> CBox| -> CBox {
        if let Some(b) = point_cache.get(p) {
            return b.clone();
        }
        let b = ev(&CBox::from_rat_point(&p.0, &p.1, prec), prec);
        point_cache.insert(p.clone(), b.clone());
        b
    };

    struct Seg {
        a: (Rat, Rat),
        b: (Rat, Rat),
        depth: u32,
    }

    let start_box = eval_point(&corners[0], eval);
    if start_box.contains_zero() {
        return Err(ContourError::ZeroOnBoundary);
    }
    let m0 = start_box.mid();
    nodes.push((m0.0.to_rat(), m0.1.to_rat()));

    // when rounding fog rather than geometry blocks the cone test,
    // subdivision cannot converge; a work budget forces the precision
    // escalation instead
    let mut budget = 8192u32;

    for k in 0..4 {
        let a = corners[k].clone();
        let b = corners[(k + 1) % 4].clone();
        // pre-split by the caller's oscillation hint
        let len = if k % 2 == 0 { rect.width() } else { rect.height() };
        let pieces = ((len.numer().to_f64().unwrap_or(1.0)
            / len.denom().to_f64().unwrap_or(1.0))
            * per_unit)
            .ceil()
            .max(1.0) as u64;
        let mut stack = Vec::new();
        for j in (0..pieces).rev() {
            let t0 = Rat::new(Int::from(j), Int::from(pieces));
            let t1 = Rat::new(Int::from(j + 1), Int::from(pieces));
            let lerp = |t: &Rat| -> (Rat, Rat) {
                (
                    &a.0 + (&b.0 - &a.0) * t,
                    &a.1 + (&b.1 - &a.1) * t,
                )
            };
            stack.push(Seg {
                a: lerp(&t0),
                b: lerp(&t1),
                depth: 0,
            });
        }
        while let Some(seg) = stack.pop() {
            if budget == 0 {
                return Err(ContourError::PrecisionExhausted);
            }
            budget -= 1;
            let ea = eval_point(&seg.a, eval);
            let eb = eval_point(&seg.b, eval);
            let hull_input = CBox {
                re: RInt::from_rats(
                    &seg.a.0.clone().min(seg.b.0.clone()),
                    &seg.a.0.clone().max(seg.b.0.clone()),
                    prec,
                ),
                im: RInt::from_rats(
                    &seg.a.1.clone().min(seg.b.1.clone()),
                    &seg.a.1.clone().max(seg.b.1.clone()),
                    prec,
                ),
            };
            let eseg = eval(&hull_input, prec);
            let h = eseg.hull(&ea).hull(&eb);
            if corners_in_sharp_cone(&h) {
                let m = eb.mid();
                nodes.push((m.0.to_rat(), m.1.to_rat()));
                continue;
            }
            if foggy(&ea) || foggy(&eb) {
                // rounding, not geometry, blocks the cone test
                return Err(if h.contains_zero() {
                    ContourError::ZeroOnBoundary
                } else {
                    ContourError::PrecisionExhausted
                });
            }
            if seg.depth >= 46 {
                return Err(if h.contains_zero() {
                    ContourError::ZeroOnBoundary
                } else {
                    ContourError::PrecisionExhausted
                });
            }
            let two = crate::rint(2);
            let mid = ((&seg.a.0 + &seg.b.0) / &two, (&seg.a.1 + &seg.b.1) / &two);
            // push in reverse so the first half pops first
            stack.push(Seg {
                a: mid.clone(),
                b: seg.b,
                depth: seg.depth + 1,
            });
            stack.push(Seg {
                a: seg.a,
                b: mid,
                depth: seg.depth + 1,
            });
        }
    }
    // closure: last node equals first by the point cache
    debug_assert_eq!(nodes.first(), nodes.last());
    nodes.pop();
    Ok(polyline_winding(&nodes))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat;

    #[test]
    fn dyadic_roundtrip() {
        let d = Dyadic::from_rat(&rat(3, 4), 64, Round::Floor);
        assert_eq!(d.to_rat(), rat(3, 4));
        let lo = Dyadic::from_rat(&rat(1, 3), 64, Round::Floor);
        let hi = Dyadic::from_rat(&rat(1, 3), 64, Round::Ceil);
        assert!(lo.to_rat() <= rat(1, 3) && rat(1, 3) <= hi.to_rat());
        assert!((hi.sub(&lo)).to_rat() < rat(1, 1_000_000_000));
    }

    #[test]
    fn interval_mul_signs() {
        let a = RInt::from_rats(&rat(-2, 1), &rat(3, 1), 64);
        let b = RInt::from_rats(&rat(-1, 1), &rat(5, 1), 64);
        let p = a.mul(&b, 64);
        assert_eq!(p.lo.to_rat(), rat(-10, 1));
        assert_eq!(p.hi.to_rat(), rat(15, 1));
    }

    #[test]
    fn exp_of_zero_and_one() {
        let z = CBox::from_rat_point(&rat(0, 1), &rat(0, 1), 64);
        let e = z.exp(64);
        assert!(e.re.lo.to_rat() <= rat(1, 1) && rat(1, 1) <= e.re.hi.to_rat());
        assert!(e.im.contains_zero());

        let one = CBox::from_rat_point(&rat(1, 1), &rat(0, 1), 64);
        let e1 = one.exp(64);
        // e is between these two rationals
        let lo = Rat::new(27182818284590452353u128.into(), 10000000000000000000u128.into());
        let hi = Rat::new(27182818284590452354u128.into(), 10000000000000000000u128.into());
        assert!(e1.re.lo.to_rat() < hi && lo < e1.re.hi.to_rat());
        assert!(e1.re.width().to_f64() < 1e-12);
    }

    #[test]
    fn exp_is_periodic_imaginary() {
        // exp(i*pi) should enclose -1
        let p = pi(96);
        let z = CBox {
            re: RInt::zero(),
            im: p,
        };
        let e = z.exp(96);
        assert!(e.re.lo.to_f64() < -0.999999999 && e.re.hi.to_f64() > -1.000000001);
        assert!(e.im.contains_zero());
    }

    #[test]
    fn pi_value() {
        let p = pi(128);
        let v = std::f64::consts::PI;
        assert!(p.lo.to_f64() <= v && v <= p.hi.to_f64());
        assert!(p.width().to_f64() < 1e-25);
    }

    #[test]
    fn cbox_division() {
        // (1+2i)/(3-i) = (1/10)(1+7i)
        let a = CBox::from_rat_point(&rat(1, 1), &rat(2, 1), 96);
        let b = CBox::from_rat_point(&rat(3, 1), &rat(-1, 1), 96);
        let q = a.div(&b, 96).unwrap();
        assert!(q.re.lo.to_rat() <= rat(1, 10) && rat(1, 10) <= q.re.hi.to_rat());
        assert!(q.im.lo.to_rat() <= rat(7, 10) && rat(7, 10) <= q.im.hi.to_rat());
    }
}
