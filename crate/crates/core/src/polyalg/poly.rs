//! Dense univariate polynomials over an exact field scalar.

use crate::scalar::Scalar;
use crate::Rat;
use std::fmt;

/// Univariate polynomial, little-endian coefficients, no trailing zeros.
#[derive(Clone, PartialEq)]
pub struct Poly<T> {
    coeffs: Vec<T>,
}

impl<T: Scalar> Poly<T> {
    pub fn zero() -> Self {
        Poly { coeffs: vec![] }
    }

    pub fn one() -> Self {
        Poly::constant(T::one())
    }

    pub fn constant(c: T) -> Self {
        let mut p = Poly { coeffs: vec![c] };
        p.trim();
        p
    }

    /// The monomial `c * x^k`.
    pub fn monomial(c: T, k: usize) -> Self {
        if c.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![T::zero(); k + 1];
        coeffs[k] = c;
        Poly { coeffs }
    }

    pub fn var() -> Self {
        Poly::monomial(T::one(), 1)
    }

    pub fn from_coeffs(coeffs: Vec<T>) -> Self {
        let mut p = Poly { coeffs };
        p.trim();
        p
    }

    pub fn from_rats(rs: &[Rat]) -> Self {
        Poly::from_coeffs(rs.iter().map(T::from_rat).collect())
    }

    pub fn from_i64s(cs: &[i64]) -> Self {
        Poly::from_coeffs(cs.iter().map(|&c| T::from_i64(c)).collect())
    }

    fn trim(&mut self) {
        while self.coeffs.last().map_or(false, |c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Degree; zero polynomial reports 0 through `deg`, use `is_zero` first.
    pub fn deg(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coeff(&self, k: usize) -> T {
        self.coeffs.get(k).cloned().unwrap_or_else(T::zero)
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn leading(&self) -> T {
        self.coeffs.last().cloned().unwrap_or_else(T::zero)
    }

    pub fn constant_term(&self) -> T {
        self.coeff(0)
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for k in 0..n {
            coeffs.push(self.coeff(k) + rhs.coeff(k));
        }
        Poly::from_coeffs(coeffs)
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for k in 0..n {
            coeffs.push(self.coeff(k) - rhs.coeff(k));
        }
        Poly::from_coeffs(coeffs)
    }

    pub fn neg(&self) -> Self {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = coeffs[i + j].clone() + a.clone() * b.clone();
            }
        }
        Poly::from_coeffs(coeffs)
    }

    pub fn scale(&self, c: &T) -> Self {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly::from_coeffs(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Poly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Poly::zero();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c.clone() * T::from_i64(k as i64))
            .collect();
        Poly::from_coeffs(coeffs)
    }

    pub fn eval(&self, x: &T) -> T {
        let mut acc = T::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x.clone() + c.clone();
        }
        acc
    }

    /// Substitute `x -> x + a`.
    pub fn shift(&self, a: &T) -> Self {
        let mut acc = Poly::zero();
        let arg = Poly::from_coeffs(vec![a.clone(), T::one()]);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(&arg).add(&Poly::constant(c.clone()));
        }
        acc
    }

    /// Substitute `x -> g(x)`.
    pub fn compose(&self, g: &Self) -> Self {
        let mut acc = Poly::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(g).add(&Poly::constant(c.clone()));
        }
        acc
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return Poly::zero();
        }
        let inv = self.leading().inv();
        self.scale(&inv)
    }

    /// Division with remainder; divisor must be nonzero.
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        assert!(!d.is_zero(), "division by zero polynomial");
        let mut rem = self.clone();
        if rem.deg() < d.deg() || rem.is_zero() {
            return (Poly::zero(), rem);
        }
        let mut q = vec![T::zero(); rem.deg() - d.deg() + 1];
        let dl = d.leading();
        while !rem.is_zero() && rem.deg() >= d.deg() {
            let k = rem.deg() - d.deg();
            let c = rem.leading() / dl.clone();
            q[k] = c.clone();
            let sub = d.mul(&Poly::monomial(c, k));
            rem = rem.sub(&sub);
        }
        (Poly::from_coeffs(q), rem)
    }

    /// Exact quotient, `None` when the division leaves a remainder.
    pub fn exact_div(&self, d: &Self) -> Option<Self> {
        let (q, r) = self.div_rem(d);
        r.is_zero().then_some(q)
    }

    /// Monic gcd by the Euclidean algorithm (field coefficients).
    pub fn gcd(&self, rhs: &Self) -> Self {
        let mut a = self.clone();
        let mut b = rhs.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        if a.is_zero() {
            a
        } else {
            a.monic()
        }
    }

    /// Extended gcd: returns `(g, s, t)` with `g = s*self + t*rhs`, g monic.
    pub fn extended_gcd(&self, rhs: &Self) -> (Self, Self, Self) {
        let mut r0 = self.clone();
        let mut r1 = rhs.clone();
        let mut s0 = Poly::one();
        let mut s1 = Poly::zero();
        let mut t0 = Poly::zero();
        let mut t1 = Poly::one();
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            let s = s0.sub(&q.mul(&s1));
            let t = t0.sub(&q.mul(&t1));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s;
            t0 = t1;
            t1 = t;
        }
        if r0.is_zero() {
            return (r0, s0, t0);
        }
        let linv = r0.leading().inv();
        (r0.scale(&linv), s0.scale(&linv), t0.scale(&linv))
    }

    /// Squarefree part: `self / gcd(self, self')`, monic.
    pub fn squarefree_part(&self) -> Self {
        let g = self.gcd(&self.derivative());
        self.exact_div(&g).expect("gcd divides").monic()
    }

    /// Yun's squarefree decomposition: pairwise coprime squarefree factors
    /// with multiplicities, product matching `self` up to a scalar.
    pub fn squarefree_decomposition(&self) -> Vec<(Self, u32)> {
        assert!(!self.is_zero());
        let mut out = Vec::new();
        let f = self.monic();
        if f.is_constant() {
            return out;
        }
        let df = f.derivative();
        let mut a = f.gcd(&df);
        let mut b = f.exact_div(&a).unwrap();
        let mut c = df.exact_div(&a).unwrap();
        let mut d = c.sub(&b.derivative());
        let mut i = 1u32;
        loop {
            if b.is_constant() {
                break;
            }
            a = b.gcd(&d);
            if !a.is_constant() {
                out.push((a.monic(), i));
            }
            b = b.exact_div(&a).unwrap();
            c = d.exact_div(&a).unwrap();
            d = c.sub(&b.derivative());
            i += 1;
        }
        out
    }

    /// Multiplicity of `root` as a zero of `self`.
    pub fn order_at(&self, root: &T) -> u32 {
        assert!(!self.is_zero());
        let mut p = self.clone();
        let lin = Poly::from_coeffs(vec![-root.clone(), T::one()]);
        let mut k = 0;
        while let Some(q) = p.exact_div(&lin) {
            p = q;
            k += 1;
        }
        k
    }

    /// Reverse the coefficient vector (degree `n` reciprocal transform).
    pub fn reversed(&self) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        Poly::from_coeffs(coeffs)
    }

    /// Map coefficients to another scalar type.
    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> Poly<U> {
        Poly::from_coeffs(self.coeffs.iter().map(f).collect())
    }
}

impl<T: Scalar> fmt::Display for Poly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if k == 0 {
                write!(f, "({})", c)?;
            } else if c.is_one() {
                write!(f, "x^{}", k)?;
            } else {
                write!(f, "({})*x^{}", c, k)?;
            }
        }
        Ok(())
    }
}

impl<T: Scalar> fmt::Debug for Poly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl<T: Scalar + serde::Serialize> serde::Serialize for Poly<T> {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeSeq;
        let mut seq = s.serialize_seq(Some(self.coeffs.len()))?;
        for c in &self.coeffs {
            seq.serialize_element(c)?;
        }
        seq.end()
    }
}

impl<T: Scalar + Eq> Eq for Poly<T> {}

impl<T: Scalar + Ord> PartialOrd for Poly<T> {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl<T: Scalar + Ord> Ord for Poly<T> {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.coeffs.cmp(&other.coeffs)
    }
}

/// Resultant of two polynomials over a field, by the PRS recursion.
pub fn resultant<T: Scalar>(a: &Poly<T>, b: &Poly<T>) -> T {
    if a.is_zero() || b.is_zero() {
        return T::zero();
    }
    if b.is_constant() {
        return pow_scalar(b.constant_term(), a.deg() as u32);
    }
    if a.is_constant() {
        return pow_scalar(a.constant_term(), b.deg() as u32);
    }
    let (_, r) = a.div_rem(b);
    if r.is_zero() {
        return T::zero();
    }
    let sign = if (a.deg() * b.deg()) % 2 == 1 {
        -T::one()
    } else {
        T::one()
    };
    let lc = pow_scalar(b.leading(), (a.deg() - r.deg()) as u32);
    sign * lc * resultant(b, &r)
}

fn pow_scalar<T: Scalar>(base: T, mut e: u32) -> T {
    let mut b = base;
    let mut acc = T::one();
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b.clone();
        }
        e >>= 1;
        if e > 0 {
            b = b.clone() * b;
        }
    }
    acc
}

/// Lagrange interpolation through `(x_i, y_i)` with distinct nodes.
pub fn interpolate<T: Scalar>(points: &[(T, T)]) -> Poly<T> {
    let mut acc = Poly::zero();
    for (i, (xi, yi)) in points.iter().enumerate() {
        if yi.is_zero() {
            continue;
        }
        let mut num = Poly::constant(T::one());
        let mut den = T::one();
        for (j, (xj, _)) in points.iter().enumerate() {
            if i == j {
                continue;
            }
            num = num.mul(&Poly::from_coeffs(vec![-xj.clone(), T::one()]));
            den = den * (xi.clone() - xj.clone());
        }
        acc = acc.add(&num.scale(&(yi.clone() / den)));
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{rat, rint, Rat};

    fn p(cs: &[i64]) -> Poly<Rat> {
        Poly::from_i64s(cs)
    }

    #[test]
    fn div_rem_roundtrip() {
        let a = p(&[-1, 0, 0, 1]); // x^3 - 1
        let b = p(&[-1, 1]); // x - 1
        let (q, r) = a.div_rem(&b);
        assert!(r.is_zero());
        assert_eq!(q, p(&[1, 1, 1]));
    }

    #[test]
    fn gcd_basic() {
        let a = p(&[-1, 0, 1]); // x^2-1
        let b = p(&[-1, 0, 0, 1]); // x^3-1
        assert_eq!(a.gcd(&b), p(&[-1, 1]));
        let c = p(&[1, 0, 1]);
        assert_eq!(a.gcd(&c), p(&[1]));
    }

    #[test]
    fn extended_gcd_identity() {
        let a = p(&[2, 3, 1]);
        let b = p(&[-6, 1, 1]);
        let (g, s, t) = a.extended_gcd(&b);
        assert_eq!(s.mul(&a).add(&t.mul(&b)), g);
    }

    #[test]
    fn squarefree_decomposition_example() {
        // (x-1)^2 (x+3)
        let f = p(&[-1, 1]).pow(2).mul(&p(&[3, 1]));
        let dec = f.squarefree_decomposition();
        assert_eq!(dec, vec![(p(&[3, 1]), 1), (p(&[-1, 1]), 2)]);
    }

    #[test]
    fn shift_and_eval() {
        let f = p(&[0, 0, 1]); // x^2
        let g = f.shift(&rint(3)); // (x+3)^2
        assert_eq!(g, p(&[9, 6, 1]));
        assert_eq!(g.eval(&rint(-3)), rint(0));
    }

    #[test]
    fn resultant_linear_pair() {
        // res(x-2, x-3) = (2-3)... = value of x-3 at 2 up to sign convention
        let r = resultant(&p(&[-2, 1]), &p(&[-3, 1]));
        assert_eq!(r, rint(-1));
        // res(x^2+1, x^2-1) = 4
        let r2 = resultant(&p(&[1, 0, 1]), &p(&[-1, 0, 1]));
        assert_eq!(r2, rint(4));
    }

    #[test]
    fn interpolate_parabola() {
        let pts: Vec<(Rat, Rat)> = (0..4)
            .map(|k| (rint(k), rint(k * k) + rat(1, 2)))
            .collect();
        let f = interpolate(&pts);
        assert_eq!(f, Poly::from_rats(&[rat(1, 2), rint(0), rint(1)]));
    }

    #[test]
    fn order_at_root() {
        let f = p(&[-1, 1]).pow(3).mul(&p(&[5, 1]));
        assert_eq!(f.order_at(&rint(1)), 3);
        assert_eq!(f.order_at(&rint(-5)), 1);
        assert_eq!(f.order_at(&rint(2)), 0);
    }
}
