//! Sparse multivariate polynomials over an exact field scalar.
//!
//! Terms are kept in a BTreeMap keyed by exponent vectors; the Ord on
//! `Vec<u32>` is lexicographic with variable 0 most significant, which is
//! the monomial order used for leading terms and exact division.

use super::poly::Poly;
use crate::scalar::Scalar;
use std::collections::BTreeMap;
use std::fmt;

#[derive(Clone, PartialEq)]
pub struct MPoly<T> {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, T>,
}

impl<T: Scalar> MPoly<T> {
    pub fn zero(nvars: usize) -> Self {
        MPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: T) -> Self {
        let mut p = MPoly::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(vec![0; nvars], c);
        }
        p
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        assert!(i < nvars);
        let mut e = vec![0; nvars];
        e[i] = 1;
        MPoly::term(nvars, e, T::one())
    }

    pub fn term(nvars: usize, exps: Vec<u32>, c: T) -> Self {
        assert_eq!(exps.len(), nvars);
        let mut p = MPoly::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(exps, c);
        }
        p
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Vec<u32>, T)>) -> Self {
        let mut p = MPoly::zero(nvars);
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    fn add_term(&mut self, e: Vec<u32>, c: T) {
        assert_eq!(e.len(), self.nvars);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get().clone() + c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms.keys().next().unwrap().iter().all(|&e| e == 0))
    }

    pub fn constant_value(&self) -> Option<T> {
        if self.is_zero() {
            return Some(T::zero());
        }
        if self.is_constant() {
            return Some(self.terms.values().next().unwrap().clone());
        }
        None
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &T)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn degree(&self, var: usize) -> u32 {
        self.terms.keys().map(|e| e[var]).max().unwrap_or(0)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms
            .keys()
            .map(|e| e.iter().sum::<u32>())
            .max()
            .unwrap_or(0)
    }

    pub fn involves(&self, var: usize) -> bool {
        self.terms.keys().any(|e| e[var] > 0)
    }

    /// Variables actually appearing.
    pub fn used_vars(&self) -> Vec<usize> {
        (0..self.nvars).filter(|&v| self.involves(v)).collect()
    }

    /// Leading term in the lex order.
    pub fn leading_term(&self) -> Option<(&Vec<u32>, &T)> {
        self.terms.iter().next_back()
    }

    /// Leading coefficient in the lex order.
    pub fn leading_coeff(&self) -> T {
        self.leading_term()
            .map(|(_, c)| c.clone())
            .unwrap_or_else(T::zero)
    }

    /// Scale so the lex-leading coefficient is one.
    pub fn normalized(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(&self.leading_coeff().inv())
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!(self.nvars, rhs.nvars);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        MPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.clone(), -c.clone()))
                .collect(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.nvars, rhs.nvars);
        let mut out = MPoly::zero(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let e: Vec<u32> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, ca.clone() * cb.clone());
            }
        }
        out
    }

    pub fn scale(&self, c: &T) -> Self {
        if c.is_zero() {
            return MPoly::zero(self.nvars);
        }
        MPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, a)| (e.clone(), a.clone() * c.clone()))
                .collect(),
        }
    }

    pub fn mul_monomial(&self, exps: &[u32]) -> Self {
        MPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    (
                        e.iter().zip(exps).map(|(a, b)| a + b).collect(),
                        c.clone(),
                    )
                })
                .collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = MPoly::constant(self.nvars, T::one());
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

    pub fn derivative(&self, var: usize) -> Self {
        let mut out = MPoly::zero(self.nvars);
        for (e, c) in &self.terms {
            if e[var] == 0 {
                continue;
            }
            let mut e2 = e.clone();
            e2[var] -= 1;
            out.add_term(e2, c.clone() * T::from_i64(e[var] as i64));
        }
        out
    }

    /// Exact division; `None` when `d` does not divide `self`.
    pub fn exact_div(&self, d: &Self) -> Option<Self> {
        assert!(!d.is_zero(), "division by zero");
        assert_eq!(self.nvars, d.nvars);
        let mut rem = self.clone();
        let mut q = MPoly::zero(self.nvars);
        let (dle, dlc) = {
            let (e, c) = d.leading_term().unwrap();
            (e.clone(), c.clone())
        };
        while !rem.is_zero() {
            let (rle, rlc) = {
                let (e, c) = rem.leading_term().unwrap();
                (e.clone(), c.clone())
            };
            if rle.iter().zip(&dle).any(|(a, b)| a < b) {
                return None;
            }
            let me: Vec<u32> = rle.iter().zip(&dle).map(|(a, b)| a - b).collect();
            let mc = rlc / dlc.clone();
            let mono = MPoly::term(self.nvars, me, mc);
            q = q.add(&mono);
            rem = rem.sub(&d.mul(&mono));
        }
        Some(q)
    }

    pub fn divides(&self, other: &Self) -> bool {
        other.exact_div(self).is_some()
    }

    /// Coefficients with respect to `var`: exponent of `var` -> coefficient
    /// polynomial (with `var`'s exponent zeroed, same variable list).
    pub fn coeffs_wrt(&self, var: usize) -> BTreeMap<u32, MPoly<T>> {
        let mut out: BTreeMap<u32, MPoly<T>> = BTreeMap::new();
        for (e, c) in &self.terms {
            let k = e[var];
            let mut e2 = e.clone();
            e2[var] = 0;
            out.entry(k)
                .or_insert_with(|| MPoly::zero(self.nvars))
                .add_term(e2, c.clone());
        }
        out
    }

    pub fn from_coeffs_wrt(
        nvars: usize,
        var: usize,
        coeffs: impl IntoIterator<Item = (u32, MPoly<T>)>,
    ) -> Self {
        let mut out = MPoly::zero(nvars);
        for (k, p) in coeffs {
            for (e, c) in &p.terms {
                let mut e2 = e.clone();
                e2[var] += k;
                out.add_term(e2, c.clone());
            }
        }
        out
    }

    /// Substitute a scalar for `var`.
    pub fn subst_scalar(&self, var: usize, value: &T) -> Self {
        let mut out = MPoly::zero(self.nvars);
        for (e, c) in &self.terms {
            let mut e2 = e.clone();
            let k = e2[var];
            e2[var] = 0;
            let mut coeff = c.clone();
            for _ in 0..k {
                coeff = coeff * value.clone();
            }
            out.add_term(e2, coeff);
        }
        out
    }

    /// Substitute `var -> var^t`.
    pub fn subst_power(&self, var: usize, t: u32) -> Self {
        MPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let mut e2 = e.clone();
                    e2[var] *= t;
                    (e2, c.clone())
                })
                .collect(),
        }
    }

    /// The polynomial as univariate in `var`, if no other variable occurs.
    pub fn to_univariate(&self, var: usize) -> Option<Poly<T>> {
        let mut coeffs = vec![T::zero(); self.degree(var) as usize + 1];
        for (e, c) in &self.terms {
            for (v, &k) in e.iter().enumerate() {
                if v != var && k > 0 {
                    return None;
                }
            }
            coeffs[e[var] as usize] = c.clone();
        }
        Some(Poly::from_coeffs(coeffs))
    }

    /// Embed a univariate polynomial in `var`.
    pub fn from_univariate(nvars: usize, var: usize, p: &Poly<T>) -> Self {
        let mut out = MPoly::zero(nvars);
        for (k, c) in p.coeffs().iter().enumerate() {
            let mut e = vec![0; nvars];
            e[var] = k as u32;
            out.add_term(e, c.clone());
        }
        out
    }

    /// Componentwise minimum of all exponent vectors (the monomial content).
    pub fn min_exponents(&self) -> Vec<u32> {
        let mut min = vec![u32::MAX; self.nvars];
        for e in self.terms.keys() {
            for (m, &x) in min.iter_mut().zip(e) {
                *m = (*m).min(x);
            }
        }
        if self.is_zero() {
            min.fill(0);
        }
        min
    }

    /// Divide out the monomial content, returning `(content, primitive)`.
    pub fn strip_monomial_content(&self) -> (Vec<u32>, Self) {
        let min = self.min_exponents();
        if min.iter().all(|&m| m == 0) {
            return (min, self.clone());
        }
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| {
                (
                    e.iter().zip(&min).map(|(a, b)| a - b).collect(),
                    c.clone(),
                )
            })
            .collect();
        (
            min,
            MPoly {
                nvars: self.nvars,
                terms,
            },
        )
    }

    pub fn map_coeffs<U: Scalar>(&self, f: impl Fn(&T) -> U) -> MPoly<U> {
        let mut out = MPoly::zero(self.nvars);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), f(c));
        }
        out
    }

    /// Render with the given variable names.
    pub fn display_with<'a>(&'a self, names: &'a [String]) -> MPolyDisplay<'a, T> {
        MPolyDisplay { poly: self, names }
    }
}

pub struct MPolyDisplay<'a, T> {
    poly: &'a MPoly<T>,
    names: &'a [String],
}

impl<T: Scalar> fmt::Display for MPolyDisplay<'_, T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_mpoly(self.poly, f, |i| self.names[i].clone())
    }
}

fn fmt_mpoly<T: Scalar>(
    p: &MPoly<T>,
    f: &mut fmt::Formatter<'_>,
    name: impl Fn(usize) -> String,
) -> fmt::Result {
    if p.is_zero() {
        return write!(f, "0");
    }
    let mut first = true;
    for (e, c) in p.terms.iter().rev() {
        if !first {
            write!(f, " + ")?;
        }
        first = false;
        write!(f, "({})", c)?;
        for (v, &k) in e.iter().enumerate() {
            if k == 1 {
                write!(f, "*{}", name(v))?;
            } else if k > 1 {
                write!(f, "*{}^{}", name(v), k)?;
            }
        }
    }
    Ok(())
}

impl<T: Scalar> fmt::Display for MPoly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_mpoly(self, f, |i| format!("v{}", i))
    }
}

impl<T: Scalar> fmt::Debug for MPoly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

/// Pseudo-remainder of `a` by `b` with respect to `var`.
fn pseudo_rem<T: Scalar>(a: &MPoly<T>, b: &MPoly<T>, var: usize) -> MPoly<T> {
    let db = b.degree(var);
    let bc = b.coeffs_wrt(var);
    let blc = bc.get(&db).unwrap().clone();
    let mut r = a.clone();
    while !r.is_zero() && r.degree(var) >= db {
        let dr = r.degree(var);
        let rc = r.coeffs_wrt(var);
        let rlc = rc.get(&dr).unwrap().clone();
        // r <- blc*r - rlc*x^(dr-db)*b
        let mut shift = vec![0u32; a.nvars()];
        shift[var] = dr - db;
        r = r.mul(&blc).sub(&b.mul(&rlc).mul_monomial(&shift));
        if !r.is_zero() && r.degree(var) == dr {
            // leading term must cancel
            unreachable!("pseudo-remainder failed to reduce degree");
        }
    }
    r
}

/// Content of `a` with respect to `var`: gcd of its `var`-coefficients.
pub fn content_wrt<T: Scalar>(a: &MPoly<T>, var: usize) -> MPoly<T> {
    let mut g = MPoly::zero(a.nvars());
    for (_, c) in a.coeffs_wrt(var) {
        g = gcd(&g, &c);
        if g.is_constant() && !g.is_zero() {
            break;
        }
    }
    g
}

/// Multivariate gcd by primitive PRS, normalized so the lex-leading
/// coefficient is one. Both zero is rejected by the caller.
pub fn gcd<T: Scalar>(a: &MPoly<T>, b: &MPoly<T>) -> MPoly<T> {
    assert_eq!(a.nvars(), b.nvars());
    if a.is_zero() {
        return b.normalized();
    }
    if b.is_zero() {
        return a.normalized();
    }
    if a.is_constant() || b.is_constant() {
        return MPoly::constant(a.nvars(), T::one());
    }
    // main variable: one appearing in both, else the factors share no
    // variable and the gcd is constant
    let va = a.used_vars();
    let vb = b.used_vars();
    let var = match va.iter().find(|v| vb.contains(v)) {
        Some(&v) => v,
        None => return MPoly::constant(a.nvars(), T::one()),
    };

    let ca = content_wrt(a, var);
    let cb = content_wrt(b, var);
    let pa = a.exact_div(&ca).expect("content divides");
    let pb = b.exact_div(&cb).expect("content divides");
    let cg = gcd(&ca, &cb);

    let (mut f0, mut f1) = if pa.degree(var) >= pb.degree(var) {
        (pa, pb)
    } else {
        (pb, pa)
    };
    loop {
        let r = pseudo_rem(&f0, &f1, var);
        if r.is_zero() {
            break;
        }
        let rc = content_wrt(&r, var);
        let rp = r.exact_div(&rc).expect("content divides");
        f0 = f1;
        f1 = rp;
    }
    cg.mul(&f1).normalized()
}

/// Squarefree decomposition with respect to `var` (Yun's algorithm over a
/// field of characteristic zero). Factors are pairwise coprime and
/// squarefree in `var`; the product of `factor^mult` equals the input up
/// to a factor not involving `var` (its `var`-content times a scalar).
pub fn squarefree_decomposition_wrt<T: Scalar>(
    a: &MPoly<T>,
    var: usize,
) -> Vec<(MPoly<T>, u32)> {
    assert!(!a.is_zero());
    let mut out = Vec::new();
    if a.degree(var) == 0 {
        return out;
    }
    let da = a.derivative(var);
    let mut g = gcd(a, &da);
    let mut b = a.exact_div(&g).unwrap();
    let mut c = da.exact_div(&g).unwrap();
    let mut d = c.sub(&b.derivative(var));
    let mut i = 1u32;
    loop {
        if b.degree(var) == 0 {
            break;
        }
        g = gcd(&b, &d);
        if g.degree(var) > 0 {
            out.push((g.normalized(), i));
        }
        b = b.exact_div(&g).unwrap();
        c = d.exact_div(&g).unwrap();
        d = c.sub(&b.derivative(var));
        i += 1;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{rint, Rat};

    fn x(n: usize, i: usize) -> MPoly<Rat> {
        MPoly::var(n, i)
    }

    fn c(n: usize, v: i64) -> MPoly<Rat> {
        MPoly::constant(n, rint(v))
    }

    #[test]
    fn mul_and_exact_div() {
        // (X-1)(X+1) = X^2-1 in 2 vars
        let a = x(2, 0).sub(&c(2, 1));
        let b = x(2, 0).add(&c(2, 1));
        let p = a.mul(&b);
        assert_eq!(p.exact_div(&a).unwrap(), b);
        assert!(p.exact_div(&x(2, 1).add(&c(2, 1))).is_none());
    }

    #[test]
    fn gcd_univariate_case() {
        // gcd(X^2-1, X^3-1) = X-1
        let xv = x(1, 0);
        let a = xv.pow(2).sub(&c(1, 1));
        let b = xv.pow(3).sub(&c(1, 1));
        assert_eq!(gcd(&a, &b), xv.sub(&c(1, 1)));
    }

    #[test]
    fn gcd_coprime() {
        let xv = x(1, 0);
        let a = xv.pow(2).add(&c(1, 1));
        let b = xv.pow(2).sub(&c(1, 1));
        assert_eq!(gcd(&a, &b), c(1, 1));
    }

    #[test]
    fn gcd_mixed_vars() {
        // gcd((x-1)(X-2)^2, (X-2)(x+1)) = X-2, vars (x, X)
        let xv = x(2, 0);
        let big = x(2, 1);
        let a = xv.sub(&c(2, 1)).mul(&big.sub(&c(2, 2)).pow(2));
        let b = big.sub(&c(2, 2)).mul(&xv.add(&c(2, 1)));
        assert_eq!(gcd(&a, &b), big.sub(&c(2, 2)));
    }

    #[test]
    fn gcd_disjoint_vars_is_one() {
        let a = x(2, 0).sub(&c(2, 2));
        let b = x(2, 1).sub(&c(2, 3));
        assert_eq!(gcd(&a, &b), c(2, 1));
    }

    #[test]
    fn squarefree_wrt_var() {
        // (X-1)^2 (X+3) in var 1 of 2
        let big = x(2, 1);
        let f = big.sub(&c(2, 1)).pow(2).mul(&big.add(&c(2, 3)));
        let dec = squarefree_decomposition_wrt(&f, 1);
        assert_eq!(
            dec,
            vec![(big.add(&c(2, 3)), 1), (big.sub(&c(2, 1)), 2)]
        );
    }

    #[test]
    fn monomial_content_strip() {
        // X1^2 X2 - X2^2 -> content (0,1), primitive X1^2 - X2
        let p = x(2, 0).pow(2).mul(&x(2, 1)).sub(&x(2, 1).pow(2));
        let (m, pp) = p.strip_monomial_content();
        assert_eq!(m, vec![0, 1]);
        assert_eq!(pp, x(2, 0).pow(2).sub(&x(2, 1)));
    }
}
