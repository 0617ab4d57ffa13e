//! The ring of exponential polynomials `sum_i P_i(x) exp(b_i x)` over the
//! session field, with Taylor expansion, normal forms, certified
//! evaluation and exact vanishing orders at algebraic points.

use crate::dyadic::CBox;
use crate::numberfield::{FieldDesc, FieldElement};
use crate::polyalg::Poly;
use crate::scalar::Scalar;
use crate::{KPoly, Rat};
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

#[derive(Debug, thiserror::Error, PartialEq)]
pub enum ExpPolyError {
    #[error("operands belong to different fields")]
    MixedFields,
    #[error("operation undefined for the zero function")]
    ZeroFunction,
    #[error("supports are distinct")]
    DistinctSupports,
}

/// A unit `lambda * exp(alpha x)`.
#[derive(Clone, Debug, PartialEq, serde::Serialize)]
pub struct UnitE {
    pub lambda: FieldElement,
    pub alpha: FieldElement,
}

impl UnitE {
    pub fn new(lambda: FieldElement, alpha: FieldElement) -> Self {
        assert!(!lambda.is_zero(), "unit scalar must be nonzero");
        UnitE { lambda, alpha }
    }

    pub fn one() -> Self {
        UnitE {
            lambda: FieldElement::one(),
            alpha: FieldElement::zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        self.lambda.is_one() && self.alpha.is_zero()
    }

    pub fn mul(&self, rhs: &UnitE) -> UnitE {
        UnitE {
            lambda: self.lambda.clone() * rhs.lambda.clone(),
            alpha: self.alpha.clone() + rhs.alpha.clone(),
        }
    }

    pub fn inv(&self) -> UnitE {
        UnitE {
            lambda: self.lambda.checked_inv().expect("nonzero"),
            alpha: -self.alpha.clone(),
        }
    }

    pub fn value(&self) -> ExpPoly {
        ExpPoly::from_terms(vec![(
            self.alpha.clone(),
            KPoly::constant(self.lambda.clone()),
        )])
        .expect("unit is well formed")
    }
}

/// Normal form of a simple element: `x^-omega * lambda e^(alpha x) *
/// P(e^(beta x))` with `P(0) != 0` and `omega` the multiplicity of 1 as a
/// root of `P`. As an exponential polynomial the value is `x^omega` times
/// that, i.e. `lambda e^(alpha x) P(e^(beta x))`.
#[derive(Clone, Debug, PartialEq, serde::Serialize)]
pub struct SimpleEForm {
    pub omega: u32,
    pub unit: UnitE,
    pub beta: FieldElement,
    pub p: KPoly,
}

impl SimpleEForm {
    /// The exponential polynomial `unit * P(exp(beta x))`.
    pub fn exp_poly(&self) -> ExpPoly {
        let mut terms = Vec::new();
        for (k, c) in self.p.coeffs().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let exponent = self.unit.alpha.clone()
                + self.beta.clone() * FieldElement::from_int_value(k as i64);
            terms.push((
                exponent,
                KPoly::constant(self.unit.lambda.clone() * c.clone()),
            ));
        }
        ExpPoly::from_terms(terms).expect("simple form is well formed")
    }

    /// The support is determined by `beta` up to rational scaling.
    pub fn support(&self) -> FieldElement {
        self.beta.clone()
    }
}

/// Classification of an exponential polynomial.
#[derive(Clone, Debug)]
pub enum Classification {
    Zero,
    Unit(UnitE),
    Simple(SimpleEForm),
    General,
}

/// Exponential polynomial: finite map from exponents to nonzero
/// coefficient polynomials in x. Everything is promoted to one field.
#[derive(Clone)]
pub struct ExpPoly {
    field: Option<Arc<FieldDesc>>,
    terms: BTreeMap<FieldElement, KPoly>,
}

impl ExpPoly {
    pub fn zero() -> Self {
        ExpPoly {
            field: None,
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        ExpPoly::constant(FieldElement::one())
    }

    pub fn constant(c: FieldElement) -> Self {
        ExpPoly::from_terms(vec![(FieldElement::zero(), KPoly::constant(c))])
            .expect("constant is well formed")
    }

    /// The polynomial x.
    pub fn x() -> Self {
        ExpPoly::from_terms(vec![(FieldElement::zero(), KPoly::var())])
            .expect("x is well formed")
    }

    /// `P(x) * exp(beta x)`.
    pub fn exp_term(beta: FieldElement, p: KPoly) -> Self {
        ExpPoly::from_terms(vec![(beta, p)]).expect("single term is well formed")
    }

    /// `exp(beta x) - c`.
    pub fn exp_minus_const(beta: FieldElement, c: FieldElement) -> Self {
        ExpPoly::from_terms(vec![
            (beta, KPoly::one()),
            (FieldElement::zero(), KPoly::constant(-c)),
        ])
        .expect("well formed")
    }

    /// The normalized irreducible with valuation = vanishing order at x0:
    /// `x` when `x0 = 0`, else `(1 - x/x0) exp(x/x0)`.
    pub fn h_at(x0: &FieldElement) -> Self {
        if x0.is_zero() {
            return ExpPoly::x();
        }
        let inv = x0.checked_inv().expect("nonzero");
        ExpPoly::exp_term(
            inv.clone(),
            Poly::from_coeffs(vec![FieldElement::one(), -inv]),
        )
    }

    /// Merge a term list into canonical form, promoting all scalars into a
    /// common field. Duplicate exponents are added; zero results dropped.
    pub fn from_terms(
        terms: Vec<(FieldElement, KPoly)>,
    ) -> Result<ExpPoly, ExpPolyError> {
        let mut field: Option<Arc<FieldDesc>> = None;
        {
            let mut note = |d: Option<&Arc<FieldDesc>>| -> Result<(), ExpPolyError> {
                if let Some(d) = d {
                    match &field {
                        None => field = Some(d.clone()),
                        Some(f) => {
                            if !(Arc::ptr_eq(f, d) || **f == **d) {
                                return Err(ExpPolyError::MixedFields);
                            }
                        }
                    }
                }
                Ok(())
            };
            for (b, p) in &terms {
                note(b.field())?;
                for c in p.coeffs() {
                    note(c.field())?;
                }
            }
        }
        let mut map: BTreeMap<FieldElement, KPoly> = BTreeMap::new();
        for (b, p) in terms {
            let (b, p) = match &field {
                Some(d) => (b.promote(d), p.map(|c| c.promote(d))),
                None => (b, p),
            };
            if p.is_zero() {
                continue;
            }
            match map.entry(b) {
                std::collections::btree_map::Entry::Vacant(v) => {
                    v.insert(p);
                }
                std::collections::btree_map::Entry::Occupied(mut o) => {
                    let s = o.get().add(&p);
                    if s.is_zero() {
                        o.remove();
                    } else {
                        *o.get_mut() = s;
                    }
                }
            }
        }
        Ok(ExpPoly { field, terms: map })
    }

    pub fn field(&self) -> Option<&Arc<FieldDesc>> {
        self.field.as_ref()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&FieldElement, &KPoly)> {
        self.terms.iter()
    }

    pub fn exponents(&self) -> Vec<FieldElement> {
        self.terms.keys().cloned().collect()
    }

    pub fn coeff_of(&self, beta: &FieldElement) -> KPoly {
        self.terms.get(beta).cloned().unwrap_or_else(KPoly::zero)
    }

    fn merge_field(
        &self,
        rhs: &ExpPoly,
    ) -> Result<Option<Arc<FieldDesc>>, ExpPolyError> {
        match (&self.field, &rhs.field) {
            (None, None) => Ok(None),
            (Some(d), None) | (None, Some(d)) => Ok(Some(d.clone())),
            (Some(a), Some(b)) => {
                if Arc::ptr_eq(a, b) || **a == **b {
                    Ok(Some(a.clone()))
                } else {
                    Err(ExpPolyError::MixedFields)
                }
            }
        }
    }

    pub fn add(&self, rhs: &ExpPoly) -> Result<ExpPoly, ExpPolyError> {
        self.merge_field(rhs)?;
        let mut terms: Vec<(FieldElement, KPoly)> = Vec::new();
        for (b, p) in &self.terms {
            terms.push((b.clone(), p.clone()));
        }
        for (b, p) in &rhs.terms {
            terms.push((b.clone(), p.clone()));
        }
        ExpPoly::from_terms(terms)
    }

    pub fn neg(&self) -> ExpPoly {
        ExpPoly {
            field: self.field.clone(),
            terms: self
                .terms
                .iter()
                .map(|(b, p)| (b.clone(), p.neg()))
                .collect(),
        }
    }

    pub fn sub(&self, rhs: &ExpPoly) -> Result<ExpPoly, ExpPolyError> {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &ExpPoly) -> Result<ExpPoly, ExpPolyError> {
        self.merge_field(rhs)?;
        let mut terms = Vec::new();
        for (b1, p1) in &self.terms {
            for (b2, p2) in &rhs.terms {
                terms.push((b1.clone() + b2.clone(), p1.mul(p2)));
            }
        }
        ExpPoly::from_terms(terms)
    }

    pub fn pow(&self, e: u32) -> ExpPoly {
        let mut acc = ExpPoly::one();
        for _ in 0..e {
            acc = acc.mul(self).expect("same field");
        }
        acc
    }

    pub fn scale(&self, c: &FieldElement) -> ExpPoly {
        if c.is_zero() {
            return ExpPoly::zero();
        }
        let mut terms = Vec::new();
        for (b, p) in &self.terms {
            terms.push((b.clone(), p.scale(c)));
        }
        ExpPoly::from_terms(terms).expect("scaling preserves the field")
    }

    /// Multiply by `x^k`.
    pub fn mul_xpow(&self, k: u32) -> ExpPoly {
        let xk = KPoly::monomial(FieldElement::one(), k as usize);
        ExpPoly {
            field: self.field.clone(),
            terms: self
                .terms
                .iter()
                .map(|(b, p)| (b.clone(), p.mul(&xk)))
                .collect(),
        }
    }

    /// Multiply by a unit: scales coefficients and shifts every exponent.
    pub fn unit_mul(&self, u: &UnitE) -> ExpPoly {
        let mut terms = Vec::new();
        for (b, p) in &self.terms {
            terms.push((b.clone() + u.alpha.clone(), p.scale(&u.lambda)));
        }
        ExpPoly::from_terms(terms).expect("unit multiplication preserves the field")
    }

    /// Derivative: maps `(b, P)` to `(b, P' + b P)`.
    pub fn derive(&self) -> ExpPoly {
        let mut terms = Vec::new();
        for (b, p) in &self.terms {
            let dp = p.derivative().add(&p.scale(b));
            terms.push((b.clone(), dp));
        }
        ExpPoly::from_terms(terms).expect("derivative preserves the field")
    }

    /// A nonzero exponential polynomial with total monomial count N
    /// vanishes to order at most N-1 at any point.
    fn dimension(&self) -> usize {
        self.terms.values().map(|p| p.deg() + 1).sum()
    }

    /// Exact Taylor coefficients `a_0..a_n` at the origin, plain power
    /// series convention (no 1/n!).
    pub fn taylor(&self, n: usize) -> Vec<FieldElement> {
        let mut out = vec![FieldElement::zero(); n + 1];
        for (b, p) in &self.terms {
            // P(x) e^{bx}: coefficient of x^k is sum_j p_j b^(k-j)/(k-j)!
            let mut bpow: Vec<FieldElement> = Vec::with_capacity(n + 1);
            let mut fact: Vec<Rat> = Vec::with_capacity(n + 1);
            let mut cur = FieldElement::one();
            let mut f = Rat::one();
            for m in 0..=n {
                bpow.push(cur.clone());
                fact.push(f.clone());
                cur = cur * b.clone();
                f *= crate::rint(m as i64 + 1);
            }
            for (j, pj) in p.coeffs().iter().enumerate() {
                if pj.is_zero() {
                    continue;
                }
                for k in j..=n {
                    let m = k - j;
                    let term = pj.clone()
                        * bpow[m].clone()
                        * FieldElement::from_rat_value(fact[m].recip());
                    out[k] = out[k].clone() + term;
                }
            }
        }
        out
    }

    /// Vanishing order at the origin.
    pub fn order_at_zero(&self) -> Result<u32, ExpPolyError> {
        if self.is_zero() {
            return Err(ExpPolyError::ZeroFunction);
        }
        let bound = self.dimension();
        let coeffs = self.taylor(bound);
        for (k, c) in coeffs.iter().enumerate() {
            if !c.is_zero() {
                return Ok(k as u32);
            }
        }
        unreachable!("nonzero exponential polynomial vanishing beyond its dimension bound");
    }

    /// Exact vanishing order at an algebraic point. At a nonzero algebraic
    /// point distinct exponentials are linearly independent over the
    /// algebraic numbers, so a derivative vanishes there iff every one of
    /// its coefficient polynomials does.
    pub fn vanishing_order_algebraic(
        &self,
        x0: &FieldElement,
    ) -> Result<u32, ExpPolyError> {
        if self.is_zero() {
            return Err(ExpPolyError::ZeroFunction);
        }
        if x0.is_zero() {
            return self.order_at_zero();
        }
        let bound = self.dimension() as u32;
        let mut cur = self.clone();
        for k in 0..=bound {
            let vanishes = cur.terms.values().all(|p| p.eval(x0).is_zero());
            if !vanishes {
                return Ok(k);
            }
            cur = cur.derive();
        }
        unreachable!("vanishing order beyond the dimension bound");
    }

    /// Unique unit making `u * f` normalized: leading Taylor coefficient
    /// one, next coefficient zero. Returns `(u, u*f)`.
    pub fn normalize(&self) -> Result<(UnitE, ExpPoly), ExpPolyError> {
        if self.is_zero() {
            return Err(ExpPolyError::ZeroFunction);
        }
        let p = self.order_at_zero()? as usize;
        let coeffs = self.taylor(p + 1);
        let ap = coeffs[p].clone();
        let ap1 = coeffs[p + 1].clone();
        let lambda = ap.checked_inv().expect("leading coefficient nonzero");
        let alpha = -(ap1 * lambda.clone());
        let unit = UnitE::new(lambda, alpha);
        let g = self.unit_mul(&unit);
        Ok((unit, g))
    }

    /// True when the first nonzero Taylor coefficient is 1 and the next
    /// one is 0.
    pub fn is_normalized(&self) -> bool {
        match self.order_at_zero() {
            Err(_) => false,
            Ok(p) => {
                let c = self.taylor(p as usize + 1);
                c[p as usize].is_one() && c[p as usize + 1].is_zero()
            }
        }
    }

    /// Classify as zero, unit, simple (with canonical normal form) or
    /// general.
    pub fn classify(&self) -> Classification {
        if self.is_zero() {
            return Classification::Zero;
        }
        if self.terms.len() == 1 {
            let (b, p) = self.terms.iter().next().unwrap();
            if p.is_constant() {
                return Classification::Unit(UnitE::new(p.constant_term(), b.clone()));
            }
            return Classification::General;
        }
        if !self.terms.values().all(|p| p.is_constant()) {
            return Classification::General;
        }
        // constant coefficients, at least two exponents: simple iff the
        // exponent differences all have rational ratios. The canonical
        // support representative is the gcd-one lattice generator of the
        // exponents themselves when they are rationally related, else of
        // the differences.
        let exps: Vec<FieldElement> = self.terms.keys().cloned().collect();
        let pivot = exps
            .iter()
            .find(|e| !e.is_zero())
            .cloned()
            .expect("two distinct exponents");
        let on_line = exps
            .iter()
            .all(|e| e.rational_ratio(&pivot).expect("pivot nonzero").is_some());
        let (base, rel): (FieldElement, Vec<FieldElement>) = if on_line {
            (FieldElement::zero(), exps.clone())
        } else {
            let base = exps[0].clone();
            (
                base.clone(),
                exps.iter().map(|b| b.clone() - base.clone()).collect(),
            )
        };
        let delta = rel
            .iter()
            .find(|d| !d.is_zero())
            .cloned()
            .expect("distinct exponents give a nonzero difference");
        let mut qs: Vec<Rat> = Vec::with_capacity(rel.len());
        for d in &rel {
            match d.rational_ratio(&delta).expect("delta nonzero") {
                Some(q) => qs.push(q),
                None => return Classification::General,
            }
        }
        // all class elements as integer multiples of one beta with gcd 1
        let mut denom_lcm = crate::Int::one();
        for q in &qs {
            denom_lcm = num_integer::Integer::lcm(&denom_lcm, q.denom());
        }
        let mut ks: Vec<crate::Int> = qs
            .iter()
            .map(|q| q.numer() * (&denom_lcm / q.denom()))
            .collect();
        let mut g = crate::Int::zero();
        for k in &ks {
            g = num_integer::Integer::gcd(&g, k);
        }
        if g.is_zero() {
            g = crate::Int::one();
        }
        let mut beta =
            delta * FieldElement::from_rat_value(Rat::new(g.clone(), denom_lcm.clone()));
        for k in ks.iter_mut() {
            *k = &*k / &g;
        }
        // canonical sign: first nonzero coordinate positive
        let flip = beta
            .coords()
            .iter()
            .find(|c| !c.is_zero())
            .map(|c| *c < Rat::zero())
            .unwrap_or(false);
        if flip {
            beta = -beta;
            for k in ks.iter_mut() {
                *k = -k.clone();
            }
        }
        let kmin = ks.iter().min().unwrap().clone();
        let shifted: Vec<i64> = ks
            .iter()
            .map(|k| {
                use num_traits::ToPrimitive;
                (k - &kmin).to_i64().expect("small exponent multiple")
            })
            .collect();
        let alpha = base
            + beta.clone() * FieldElement::from_rat_value(Rat::from_integer(kmin));
        let degree = *shifted.iter().max().unwrap() as usize;
        let mut pc = vec![FieldElement::zero(); degree + 1];
        for (i, (_, coeff)) in self.terms.iter().enumerate() {
            pc[shifted[i] as usize] = coeff.constant_term();
        }
        let p = Poly::from_coeffs(pc);
        debug_assert!(!p.constant_term().is_zero());
        let omega = p.order_at(&FieldElement::one());
        Classification::Simple(SimpleEForm {
            omega,
            unit: UnitE::new(FieldElement::one(), alpha),
            beta,
            p,
        })
    }

    /// Certified enclosure of `f(z)`.
    pub fn eval(&self, z: &CBox, prec: u32) -> CBox {
        self.evaluator(prec).eval(z)
    }

    /// Precompute the embedded exponents and coefficients once; repeated
    /// evaluation (contour walking) then skips all field embedding work.
    pub fn evaluator(&self, prec: u32) -> EpEvaluator {
        let wp = prec + 16;
        let terms = self
            .terms
            .iter()
            .map(|(b, p)| {
                let beta = (!b.is_zero()).then(|| b.embed(wp));
                let coeffs: Vec<CBox> = p.coeffs().iter().map(|c| c.embed(wp)).collect();
                (beta, coeffs)
            })
            .collect();
        EpEvaluator { terms, wp }
    }

    /// Evaluation at a rational point on the real axis.
    pub fn eval_rational(&self, x: &Rat, prec: u32) -> CBox {
        self.eval(&CBox::from_rat_point(x, &Rat::zero(), prec + 8), prec)
    }

    /// Grammar-compatible rendering that re-parses to the same function.
    pub fn to_expr_string(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut parts = Vec::new();
        for (b, p) in &self.terms {
            let poly = poly_expr_string(p);
            if b.is_zero() {
                parts.push(poly);
            } else {
                parts.push(format!("{} * exp(({}) * x)", poly, scalar_expr_string(b)));
            }
        }
        parts.join(" + ")
    }
}

/// Evaluation plan with embedded scalars, reusable across many points.
pub struct EpEvaluator {
    terms: Vec<(Option<CBox>, Vec<CBox>)>,
    wp: u32,
}

impl EpEvaluator {
    pub fn eval(&self, z: &CBox) -> CBox {
        let wp = self.wp;
        let mut acc = CBox::zero();
        for (beta, coeffs) in &self.terms {
            let mut pv = CBox::zero();
            for c in coeffs.iter().rev() {
                pv = pv.mul(z, wp).add(c, wp);
            }
            let term = match beta {
                None => pv,
                Some(b) => pv.mul(&b.mul(z, wp).exp(wp), wp),
            };
            acc = acc.add(&term, wp);
        }
        acc
    }
}

fn scalar_expr_string(c: &FieldElement) -> String {
    if let Some(r) = c.to_rat() {
        return rat_expr(&r);
    }
    let mut parts = Vec::new();
    for (k, coord) in c.coords().iter().enumerate() {
        if coord.is_zero() {
            continue;
        }
        let base = rat_expr(coord);
        match k {
            0 => parts.push(base),
            1 => parts.push(format!("{} * t", base)),
            _ => parts.push(format!("{} * t^{}", base, k)),
        }
    }
    if parts.is_empty() {
        "0".to_string()
    } else {
        parts.join(" + ")
    }
}

fn rat_expr(r: &Rat) -> String {
    if r < &Rat::zero() {
        format!("(0 - {})", -r.clone())
    } else {
        format!("{}", r)
    }
}

fn poly_expr_string(p: &KPoly) -> String {
    let mut parts = Vec::new();
    for (k, c) in p.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let cs = format!("({})", scalar_expr_string(c));
        match k {
            0 => parts.push(cs),
            1 => parts.push(format!("{} * x", cs)),
            _ => parts.push(format!("{} * x^{}", cs, k)),
        }
    }
    format!("({})", parts.join(" + "))
}

impl PartialEq for ExpPoly {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms
    }
}

impl Eq for ExpPoly {}

impl PartialOrd for ExpPoly {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ExpPoly {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        let a: Vec<_> = self.terms.iter().collect();
        let b: Vec<_> = other.terms.iter().collect();
        a.cmp(&b)
    }
}

impl fmt::Display for ExpPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (b, p) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if b.is_zero() {
                write!(f, "({})", p)?;
            } else {
                write!(f, "({})*exp(({})x)", p, b)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for ExpPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl serde::Serialize for ExpPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeSeq;
        #[derive(serde::Serialize)]
        struct Term<'a> {
            exponent: &'a FieldElement,
            coeff: Vec<&'a FieldElement>,
        }
        let mut seq = s.serialize_seq(Some(self.terms.len()))?;
        for (b, p) in &self.terms {
            seq.serialize_element(&Term {
                exponent: b,
                coeff: p.coeffs().iter().collect(),
            })?;
        }
        seq.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numberfield::FieldDesc;
    use crate::{rat, rint};

    fn fe(n: i64) -> FieldElement {
        FieldElement::from_int_value(n)
    }

    fn e_x_minus_1() -> ExpPoly {
        ExpPoly::exp_minus_const(fe(1), fe(1))
    }

    #[test]
    fn build_cancellation() {
        let f = ExpPoly::from_terms(vec![
            (fe(1), KPoly::one()),
            (fe(1), KPoly::constant(fe(-1))),
        ])
        .unwrap();
        assert!(f.is_zero());
    }

    #[test]
    fn build_two_terms() {
        let f = ExpPoly::from_terms(vec![(fe(0), KPoly::var()), (fe(1), KPoly::one())])
            .unwrap();
        assert_eq!(f.num_terms(), 2);
    }

    #[test]
    fn product_difference_of_squares() {
        let a = e_x_minus_1();
        let b =
            ExpPoly::from_terms(vec![(fe(1), KPoly::one()), (fe(0), KPoly::one())]).unwrap();
        let p = a.mul(&b).unwrap();
        assert_eq!(p, ExpPoly::exp_minus_const(fe(2), fe(1)));
    }

    #[test]
    fn derive_product_rule_example() {
        // (x e^x - 2)' = (x+1) e^x
        let f = ExpPoly::from_terms(vec![
            (fe(1), KPoly::var()),
            (fe(0), KPoly::constant(fe(-2))),
        ])
        .unwrap();
        let expected = ExpPoly::from_terms(vec![(
            fe(1),
            Poly::from_coeffs(vec![fe(1), fe(1)]),
        )])
        .unwrap();
        assert_eq!(f.derive(), expected);
    }

    #[test]
    fn taylor_coefficients() {
        let t = e_x_minus_1().taylor(3);
        assert_eq!(t[0], fe(0));
        assert_eq!(t[1], fe(1));
        assert_eq!(t[2], FieldElement::from_rat_value(rat(1, 2)));
        assert_eq!(t[3], FieldElement::from_rat_value(rat(1, 6)));

        let g = ExpPoly::from_terms(vec![
            (fe(1), KPoly::var()),
            (fe(0), KPoly::constant(fe(-2))),
        ])
        .unwrap();
        let tg = g.taylor(3);
        assert_eq!(tg[0], fe(-2));
        assert_eq!(tg[1], fe(1));
        assert_eq!(tg[2], fe(1));
        assert_eq!(tg[3], FieldElement::from_rat_value(rat(1, 2)));

        assert!(ExpPoly::zero().taylor(4).iter().all(|c| c.is_zero()));
    }

    #[test]
    fn normalize_simple_cases() {
        // f = 2x: unit 1/2, g = x
        let f = ExpPoly::from_terms(vec![(fe(0), KPoly::monomial(fe(2), 1))]).unwrap();
        let (u, g) = f.normalize().unwrap();
        assert_eq!(u.lambda, FieldElement::from_rat_value(rat(1, 2)));
        assert!(u.alpha.is_zero());
        assert_eq!(g, ExpPoly::x());

        // f = e^x - 1: unit e^{-x/2}, g with Taylor x + x^3/24
        let (u, g) = e_x_minus_1().normalize().unwrap();
        assert!(u.lambda.is_one());
        assert_eq!(u.alpha, FieldElement::from_rat_value(rat(-1, 2)));
        let t = g.taylor(3);
        assert_eq!(t[1], fe(1));
        assert!(t[2].is_zero());
        assert_eq!(t[3], FieldElement::from_rat_value(rat(1, 24)));

        // h_{x0} is already normalized
        let h = ExpPoly::h_at(&fe(2));
        let (u, g) = h.normalize().unwrap();
        assert!(u.is_one());
        assert_eq!(g, h);
    }

    #[test]
    fn normalize_rejects_zero() {
        assert_eq!(
            ExpPoly::zero().normalize().unwrap_err(),
            ExpPolyError::ZeroFunction
        );
    }

    #[test]
    fn normalize_unit_invariance() {
        let f = e_x_minus_1();
        let (_, g) = f.normalize().unwrap();
        let u = UnitE::new(fe(7), FieldElement::from_rat_value(rat(3, 2)));
        let (_, g2) = f.unit_mul(&u).normalize().unwrap();
        assert_eq!(g, g2);
    }

    #[test]
    fn product_of_normalized_is_normalized() {
        let (_, g1) = e_x_minus_1().normalize().unwrap();
        let (_, g2) = ExpPoly::from_terms(vec![
            (fe(2), KPoly::one()),
            (fe(0), KPoly::constant(fe(-3))),
        ])
        .unwrap()
        .normalize()
        .unwrap();
        let p = g1.mul(&g2).unwrap();
        assert!(p.is_normalized());
    }

    #[test]
    fn classify_cases() {
        let u = ExpPoly::exp_term(fe(3), KPoly::constant(fe(5)));
        assert!(matches!(u.classify(), Classification::Unit(_)));

        // e^{2x} + 3 e^{-x}: simple with unit exp(-x) and P = X^3 + 3
        let f = ExpPoly::from_terms(vec![
            (fe(2), KPoly::one()),
            (fe(-1), KPoly::constant(fe(3))),
        ])
        .unwrap();
        match f.classify() {
            Classification::Simple(s) => {
                assert_eq!(s.beta, fe(1));
                assert_eq!(s.unit.alpha, fe(-1));
                assert_eq!(s.p, Poly::from_coeffs(vec![fe(3), fe(0), fe(0), fe(1)]));
                assert_eq!(s.omega, 0);
                assert_eq!(s.exp_poly(), f);
            }
            c => panic!("expected simple, got {:?}", c),
        }

        // x e^x - c is general
        let g = ExpPoly::from_terms(vec![
            (fe(1), KPoly::var()),
            (fe(0), KPoly::constant(fe(-5))),
        ])
        .unwrap();
        assert!(matches!(g.classify(), Classification::General));

        // e^x + e^{sqrt2 x} is simple with support spanned by sqrt2 - 1
        let k = FieldDesc::sqrt2();
        let s2 = FieldElement::generator(&k);
        let h = ExpPoly::from_terms(vec![
            (fe(1).promote(&k), KPoly::one()),
            (s2.clone(), KPoly::one()),
        ])
        .unwrap();
        match h.classify() {
            Classification::Simple(s) => {
                // sign-canonical representative of the difference lattice
                assert_eq!(s.beta, fe(1).promote(&k) - s2);
                assert_eq!(s.exp_poly(), h);
            }
            c => panic!("expected simple, got {:?}", c),
        }

        // omega = ord_1 P
        match e_x_minus_1().classify() {
            Classification::Simple(s) => {
                assert_eq!(s.omega, 1);
                assert_eq!(s.beta, fe(1));
            }
            c => panic!("expected simple, got {:?}", c),
        }

        assert!(matches!(ExpPoly::zero().classify(), Classification::Zero));
    }

    #[test]
    fn eval_cases() {
        // (e^x - 1)(0) = 0 exactly
        let v = e_x_minus_1().eval_rational(&rint(0), 64);
        assert!(v.re.lo.to_rat().is_zero() && v.re.hi.to_rat().is_zero());

        // x e^x at 1 is e
        let g = ExpPoly::exp_term(fe(1), KPoly::var());
        let v = g.eval_rational(&rint(1), 64);
        let e_lo = rat(27182818284, 10000000000);
        let e_hi = rat(27182818285, 10000000000);
        assert!(v.re.lo.to_rat() < e_hi && e_lo < v.re.hi.to_rat());
        assert!(v.im.contains_zero());
    }

    #[test]
    fn sin_as_exppoly_evaluates() {
        // sin x = (-i/2) e^{ix} + (i/2) e^{-ix} over Q(i)
        let k = FieldDesc::gaussian();
        let i = FieldElement::generator(&k);
        let half_i = i.clone() * FieldElement::from_rat_value(rat(1, 2));
        let f = ExpPoly::from_terms(vec![
            (i.clone(), KPoly::constant(-half_i.clone())),
            (-i.clone(), KPoly::constant(half_i)),
        ])
        .unwrap();
        let x = rat(15707963267948966, 10000000000000000); // ~ pi/2
        let v = f.eval_rational(&x, 96);
        assert!((v.re.to_f64_mid() - 1.0).abs() < 1e-12);
        assert!(v.im.contains_zero());
    }

    #[test]
    fn vanishing_orders() {
        let f = e_x_minus_1();
        assert_eq!(f.vanishing_order_algebraic(&fe(0)).unwrap(), 1);
        assert_eq!(f.pow(2).vanishing_order_algebraic(&fe(0)).unwrap(), 2);

        // x e^x - c never vanishes at algebraic points
        let g = ExpPoly::from_terms(vec![
            (fe(1), KPoly::var()),
            (fe(0), KPoly::constant(fe(-5))),
        ])
        .unwrap();
        assert_eq!(g.vanishing_order_algebraic(&fe(3)).unwrap(), 0);

        // h_{x0} vanishes to order exactly 1 at x0
        let h = ExpPoly::h_at(&fe(2));
        assert_eq!(h.vanishing_order_algebraic(&fe(2)).unwrap(), 1);
        assert_eq!(h.vanishing_order_algebraic(&fe(1)).unwrap(), 0);

        assert_eq!(
            ExpPoly::zero()
                .vanishing_order_algebraic(&fe(0))
                .unwrap_err(),
            ExpPolyError::ZeroFunction
        );
    }

    #[test]
    fn leibniz_rule_holds() {
        let f = ExpPoly::from_terms(vec![
            (fe(1), KPoly::var()),
            (fe(0), Poly::from_coeffs(vec![fe(1), fe(2)])),
        ])
        .unwrap();
        let g = ExpPoly::from_terms(vec![(fe(2), KPoly::one()), (fe(-1), KPoly::var())])
            .unwrap();
        let lhs = f.mul(&g).unwrap().derive();
        let rhs = f
            .derive()
            .mul(&g)
            .unwrap()
            .add(&f.mul(&g.derive()).unwrap())
            .unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn mixed_fields_rejected() {
        let a = ExpPoly::exp_minus_const(
            FieldElement::generator(&FieldDesc::gaussian()),
            fe(1),
        );
        let b = ExpPoly::exp_minus_const(
            FieldElement::generator(&FieldDesc::sqrt2()),
            fe(1),
        );
        assert_eq!(a.mul(&b).unwrap_err(), ExpPolyError::MixedFields);
    }
}
