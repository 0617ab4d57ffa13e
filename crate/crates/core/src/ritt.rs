//! Exponent lattices, the polynomial model, and factorization of an
//! exponential polynomial into unit x simple parts x certified
//! irreducible factors.
//!
//! The pipeline: collect all exponents, compute a Z-basis of the lattice
//! they generate (integer Hermite normal form after clearing
//! denominators), shift by a suitable `gamma` so every coordinate is
//! nonnegative, rewrite the function as a polynomial in
//! `x, exp(a_1 x), .., exp(a_p x)`, factor that polynomial, and sort the
//! factors into simple parts (merged by support, never split further) and
//! irreducible candidates with explicit certificates.

use crate::exppoly::{Classification, ExpPoly, ExpPolyError, SimpleEForm, UnitE};
use crate::numberfield::{FieldDesc, FieldElement};
use crate::polyalg::{self, PolyError};
use crate::{Int, KMPoly, KPoly, Rat};
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::collections::BTreeMap;
use std::sync::Arc;

#[derive(Debug, thiserror::Error)]
pub enum RittError {
    #[error("operation undefined for the zero function")]
    ZeroFunction,
    #[error(transparent)]
    ExpPoly(#[from] ExpPolyError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error("candidate splits as an exponential polynomial at refinement {t}")]
    FactorSplit { t: u32, factors: Vec<KMPoly> },
    #[error("refinement limit reached without a stable factorization")]
    RefinementLimit,
}

/// Z-basis of the additive group generated by a set of exponents,
/// together with the integer coordinates of each input exponent.
#[derive(Debug, Clone)]
pub struct ExponentLattice {
    pub basis: Vec<FieldElement>,
    pub coords: BTreeMap<FieldElement, Vec<i64>>,
}

impl ExponentLattice {
    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    /// The lattice scaled by `1/n`; coordinates multiply by `n`.
    pub fn refined(&self, n: u32) -> ExponentLattice {
        assert!(n >= 1);
        let scale = FieldElement::from_rat_value(Rat::new(Int::one(), Int::from(n)));
        ExponentLattice {
            basis: self
                .basis
                .iter()
                .map(|b| b.clone() * scale.clone())
                .collect(),
            coords: self
                .coords
                .iter()
                .map(|(k, v)| (k.clone(), v.iter().map(|c| c * n as i64).collect()))
                .collect(),
        }
    }

    pub fn exponent_of(&self, coords: &[i64]) -> FieldElement {
        let mut acc = FieldElement::zero();
        for (b, &c) in self.basis.iter().zip(coords) {
            acc = acc + b.clone() * FieldElement::from_int_value(c);
        }
        acc
    }
}

/// Row-style Hermite normal form of an integer matrix; returns the
/// nonzero rows (a Z-basis of the row space) with positive pivots and
/// entries above each pivot reduced.
fn hnf(mut rows: Vec<Vec<Int>>) -> Vec<Vec<Int>> {
    if rows.is_empty() {
        return rows;
    }
    let ncols = rows[0].len();
    let mut row = 0usize;
    for col in 0..ncols {
        if row >= rows.len() {
            break;
        }
        loop {
            // the row with the smallest nonzero entry in this column
            let mut best: Option<usize> = None;
            for (i, r) in rows.iter().enumerate().skip(row) {
                if !r[col].is_zero()
                    && best.map_or(true, |b: usize| r[col].abs() < rows[b][col].abs())
                {
                    best = Some(i);
                }
            }
            let Some(b) = best else { break };
            rows.swap(row, b);
            let mut done = true;
            let pivot = rows[row][col].clone();
            for i in row + 1..rows.len() {
                if rows[i][col].is_zero() {
                    continue;
                }
                let q = num_integer::Integer::div_floor(&rows[i][col], &pivot);
                for j in 0..ncols {
                    let s = &rows[row][j] * &q;
                    rows[i][j] -= s;
                }
                if !rows[i][col].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if !rows[row][col].is_zero() {
            if rows[row][col].is_negative() {
                for j in 0..ncols {
                    rows[row][j] = -rows[row][j].clone();
                }
            }
            // reduce the entries above the pivot
            let pivot = rows[row][col].clone();
            for i in 0..row {
                let q = num_integer::Integer::div_floor(&rows[i][col], &pivot);
                if q.is_zero() {
                    continue;
                }
                for j in 0..ncols {
                    let s = &rows[row][j] * &q;
                    rows[i][j] -= s;
                }
            }
            row += 1;
        }
    }
    rows.truncate(row);
    rows
}

/// Express `v` as an integer combination of HNF basis rows.
fn solve_in_hnf(basis: &[Vec<Int>], v: &[Int]) -> Option<Vec<Int>> {
    let mut residual = v.to_vec();
    let mut coeffs = vec![Int::zero(); basis.len()];
    for (k, row) in basis.iter().enumerate() {
        let pcol = row.iter().position(|x| !x.is_zero())?;
        let (q, r) = num_integer::Integer::div_rem(&residual[pcol], &row[pcol]);
        if !r.is_zero() {
            return None;
        }
        coeffs[k] = q.clone();
        for j in 0..residual.len() {
            let s = &row[j] * &q;
            residual[j] -= s;
        }
    }
    residual.iter().all(|x| x.is_zero()).then_some(coeffs)
}

/// Z-basis of the module generated by the exponents, by clearing
/// denominators and running an integer HNF; zero exponents are recorded
/// with zero coordinates.
pub fn exponent_lattice(exponents: &[FieldElement]) -> ExponentLattice {
    assert!(!exponents.is_empty(), "need at least one exponent");
    let dim = exponents
        .iter()
        .map(|e| e.coords().len())
        .max()
        .unwrap_or(1);
    let pad = |e: &FieldElement| -> Vec<Rat> {
        let mut v = e.coords().to_vec();
        v.resize(dim, Rat::zero());
        v
    };
    let mut den = Int::one();
    for e in exponents {
        for c in pad(e) {
            den = num_integer::Integer::lcm(&den, c.denom());
        }
    }
    let rows: Vec<Vec<Int>> = exponents
        .iter()
        .filter(|e| !e.is_zero())
        .map(|e| {
            pad(e)
                .iter()
                .map(|c| c.numer() * (&den / c.denom()))
                .collect()
        })
        .collect();
    let basis_rows = hnf(rows);
    let field = exponents.iter().find_map(|e| e.field().cloned());
    let basis: Vec<FieldElement> = basis_rows
        .iter()
        .map(|r| {
            let coords: Vec<Rat> = r
                .iter()
                .map(|c| Rat::new(c.clone(), den.clone()))
                .collect();
            match &field {
                Some(d) => FieldElement::from_coords(d, coords),
                None => FieldElement::from_rat_value(coords[0].clone()),
            }
        })
        .collect();
    let mut coords = BTreeMap::new();
    for e in exponents {
        if e.is_zero() {
            coords.insert(e.clone(), vec![0i64; basis.len()]);
            continue;
        }
        let iv: Vec<Int> = pad(e)
            .iter()
            .map(|c| c.numer() * (&den / c.denom()))
            .collect();
        let sol =
            solve_in_hnf(&basis_rows, &iv).expect("generators lie in their own lattice");
        coords.insert(
            e.clone(),
            sol.iter()
                .map(|c| c.to_i64().expect("small lattice coordinate"))
                .collect(),
        );
    }
    ExponentLattice { basis, coords }
}

/// The polynomial model: `gamma` plus polynomials `P_i` with
/// `f_i(x) exp(gamma x) = P_i(x, exp(a_1 x), .., exp(a_p x))`.
#[derive(Debug, Clone)]
pub struct PolynomialModel {
    pub gamma: FieldElement,
    pub lattice: ExponentLattice,
    pub polys: Vec<KMPoly>,
}

pub fn polynomial_model(fs: &[&ExpPoly]) -> Result<PolynomialModel, RittError> {
    polynomial_model_refined(fs, 1)
}

/// Polynomial model over the joint lattice scaled by `1/refine`.
pub fn polynomial_model_refined(
    fs: &[&ExpPoly],
    refine: u32,
) -> Result<PolynomialModel, RittError> {
    assert!(!fs.is_empty());
    if fs.iter().any(|f| f.is_zero()) {
        return Err(RittError::ZeroFunction);
    }
    let mut field: Option<Arc<FieldDesc>> = None;
    for f in fs {
        if let Some(d) = f.field() {
            match &field {
                None => field = Some(d.clone()),
                Some(e) => {
                    if !(Arc::ptr_eq(e, d) || **e == **d) {
                        return Err(RittError::ExpPoly(ExpPolyError::MixedFields));
                    }
                }
            }
        }
    }
    let mut all_exponents = Vec::new();
    for f in fs {
        all_exponents.extend(f.exponents());
    }
    let lattice = exponent_lattice(&all_exponents).refined(refine);
    let p = lattice.rank();

    // gamma shifts every coordinate vector componentwise nonnegative
    let mut mins = vec![0i64; p];
    for v in lattice.coords.values() {
        for (m, &c) in mins.iter_mut().zip(v) {
            *m = (*m).min(c);
        }
    }
    let shift: Vec<i64> = mins.iter().map(|&m| -m).collect();
    let gamma = lattice.exponent_of(&shift);

    let nvars = 1 + p;
    let mut polys = Vec::with_capacity(fs.len());
    for f in fs {
        let mut terms = Vec::new();
        for (beta, poly) in f.terms() {
            let c = lattice.coords.get(beta).expect("exponent in lattice");
            for (j, coeff) in poly.coeffs().iter().enumerate() {
                if coeff.is_zero() {
                    continue;
                }
                let mut e = vec![0u32; nvars];
                e[0] = j as u32;
                for (i, (&ci, &si)) in c.iter().zip(&shift).enumerate() {
                    e[i + 1] = (ci + si) as u32;
                }
                let coeff = match &field {
                    Some(d) => coeff.promote(d),
                    None => coeff.clone(),
                };
                terms.push((e, coeff));
            }
        }
        polys.push(KMPoly::from_terms(nvars, terms));
    }
    Ok(PolynomialModel {
        gamma,
        lattice,
        polys,
    })
}

/// Map a model polynomial back to an exponential polynomial.
pub fn model_to_exppoly(mp: &KMPoly, basis: &[FieldElement]) -> ExpPoly {
    let mut terms = Vec::new();
    for (e, c) in mp.terms() {
        let mut exponent = FieldElement::zero();
        for (i, b) in basis.iter().enumerate() {
            exponent = exponent + b.clone() * FieldElement::from_int_value(e[i + 1] as i64);
        }
        terms.push((exponent, KPoly::monomial(c.clone(), e[0] as usize)));
    }
    ExpPoly::from_terms(terms).expect("model carries one field")
}

/// Canonical representative of the support line of `beta`: scaled so the
/// first nonzero rational coordinate is one.
pub fn support_key(beta: &FieldElement) -> FieldElement {
    let first = beta
        .coords()
        .iter()
        .find(|c| !c.is_zero())
        .expect("nonzero support generator");
    beta.clone() * FieldElement::from_rat_value(first.recip())
}

/// Irreducibility certificate for a factor.
#[derive(Debug, Clone, PartialEq, serde::Serialize)]
#[serde(tag = "kind")]
pub enum Certificate {
    /// Degree-one polynomial in x alone.
    LinearInX { root: FieldElement },
    /// The `x X^u - c` family, Eisenstein at the prime x on the reversed
    /// polynomial; stable under all lattice refinements.
    EisensteinBinomial,
    /// `A(x) Y^k + B(x)` with a simple root of one side not shared by the
    /// other; Eisenstein at `prime`, stable under refinements.
    EisensteinSimpleRoot { prime: KPoly, side_a: bool },
    /// Verified irreducible over the session field under all lattice
    /// refinements of index up to the bound, and nothing more.
    RefinementBounded { bound: u32 },
    /// Irreducible over the session field but possibly reducible over an
    /// extension, or outside the class the baseline factorizer covers.
    MaybeReducible { reason: String },
}

/// One irreducible factor with its multiplicity and certificate.
#[derive(Debug, Clone, serde::Serialize)]
pub struct IrreducibleFactor {
    #[serde(rename = "terms")]
    pub factor: ExpPoly,
    #[serde(rename = "mult")]
    pub multiplicity: u32,
    pub certificate: Certificate,
}

/// Ritt factorization: unit x simple parts (pairwise distinct supports,
/// stored whole) x certified irreducibles. The product reconstructs the
/// input exactly; this is asserted on every call.
#[derive(Debug, Clone, serde::Serialize)]
pub struct RittFactorization {
    pub unit: UnitE,
    pub simples: Vec<SimpleEForm>,
    pub irreducibles: Vec<IrreducibleFactor>,
}

impl RittFactorization {
    /// Exact product of all parts.
    pub fn product(&self) -> ExpPoly {
        let mut acc = self.unit.value();
        for s in &self.simples {
            acc = acc.mul(&s.exp_poly()).expect("same field");
        }
        for h in &self.irreducibles {
            acc = acc
                .mul(&h.factor.pow(h.multiplicity))
                .expect("same field");
        }
        acc
    }
}

/// Default refinement bound for certification.
pub fn default_refinement_bound(candidate: &KMPoly) -> u32 {
    let d = candidate.total_degree();
    (d * d).max(2)
}

/// Try to certify a model factor as irreducible as an exponential
/// polynomial. `FactorSplit` reports a refinement at which it splits.
pub fn certify_irreducible(candidate: &KMPoly, bound: u32) -> Result<Certificate, RittError> {
    let nvars = candidate.nvars();
    // re-factor at refinement 1: misuse guard
    let f1 = polyalg::factor_baseline(candidate)?;
    let nontrivial: Vec<&polyalg::MFactor> = f1
        .factors
        .iter()
        .filter(|m| !m.poly.is_constant())
        .collect();
    if nontrivial.len() > 1 || nontrivial.iter().any(|m| m.multiplicity > 1) {
        return Err(RittError::FactorSplit {
            t: 1,
            factors: f1.factors.iter().map(|m| m.poly.clone()).collect(),
        });
    }

    // linear in x alone
    if candidate.used_vars() == vec![0] && candidate.degree(0) == 1 {
        let up = candidate.to_univariate(0).expect("x only");
        let root = -(up.coeff(0) / up.coeff(1));
        return Ok(Certificate::LinearInX { root });
    }

    // binomial family x * X^u - c
    if candidate.num_terms() == 2 {
        let terms: Vec<(Vec<u32>, FieldElement)> = candidate
            .terms()
            .map(|(e, c)| (e.clone(), c.clone()))
            .collect();
        let (zero_idx, other_idx) = if terms[0].0.iter().all(|&x| x == 0) {
            (0, 1)
        } else {
            (1, 0)
        };
        let ze = &terms[zero_idx].0;
        let oe = &terms[other_idx].0;
        if ze.iter().all(|&x| x == 0) && oe[0] == 1 && oe[1..].iter().any(|&x| x > 0) {
            return Ok(Certificate::EisensteinBinomial);
        }
    }

    // A(x) Y^k + B(x) on a single X-ray
    if let Some((a, b)) = two_level_split(candidate) {
        if !a.is_zero() && !b.is_zero() && a.gcd(&b).is_constant() {
            if let Some(prime) = simple_unshared_prime(&a, &b) {
                return Ok(Certificate::EisensteinSimpleRoot {
                    prime,
                    side_a: true,
                });
            }
            if let Some(prime) = simple_unshared_prime(&b, &a) {
                return Ok(Certificate::EisensteinSimpleRoot {
                    prime,
                    side_a: false,
                });
            }
        }
    }

    // substitution check: X_i -> X_i^t stays irreducible for t <= bound
    let mut inconclusive = false;
    for t in 2..=bound {
        let mut cand_t = candidate.clone();
        for v in 1..nvars {
            cand_t = cand_t.subst_power(v, t);
        }
        let ft = polyalg::factor_baseline(&cand_t)?;
        let nontrivial: Vec<&polyalg::MFactor> = ft
            .factors
            .iter()
            .filter(|m| !m.poly.is_constant() && m.poly.num_terms() > 1)
            .collect();
        if nontrivial.len() > 1 || nontrivial.iter().any(|m| m.multiplicity > 1) {
            return Err(RittError::FactorSplit {
                t,
                factors: ft.factors.iter().map(|m| m.poly.clone()).collect(),
            });
        }
        if nontrivial.iter().any(|m| !m.certified) {
            inconclusive = true;
        }
    }
    if inconclusive {
        Ok(Certificate::MaybeReducible {
            reason: "outside the certified factorization class".to_string(),
        })
    } else {
        Ok(Certificate::RefinementBounded { bound })
    }
}

/// Write the candidate as `A(x) Y^k + B(x)` over a single X-ray, when it
/// has that shape.
fn two_level_split(candidate: &KMPoly) -> Option<(KPoly, KPoly)> {
    let mut w: Option<Vec<i64>> = None;
    let mut levels = Vec::new();
    for (e, c) in candidate.terms() {
        let xpart: Vec<i64> = e[1..].iter().map(|&x| x as i64).collect();
        if xpart.iter().all(|&x| x == 0) {
            levels.push((e[0], 0i64, c.clone()));
            continue;
        }
        let k = match &w {
            None => {
                let p = primitive_dir(&xpart)?;
                let k = ratio_dir(&xpart, &p)?;
                w = Some(p);
                k
            }
            Some(w) => ratio_dir(&xpart, w)?,
        };
        if k < 1 {
            return None;
        }
        levels.push((e[0], k, c.clone()));
    }
    w.as_ref()?;
    let top = levels.iter().map(|(_, k, _)| *k).max().unwrap_or(0);
    if top == 0 {
        return None;
    }
    let mut a = KPoly::zero();
    let mut b = KPoly::zero();
    for (xe, k, c) in levels {
        if k == 0 {
            b = b.add(&KPoly::monomial(c, xe as usize));
        } else if k == top {
            a = a.add(&KPoly::monomial(c, xe as usize));
        } else {
            return None; // a middle level is present
        }
    }
    Some((a, b))
}

fn primitive_dir(d: &[i64]) -> Option<Vec<i64>> {
    let mut g = 0i64;
    for &x in d {
        g = gcd_i64(g, x.abs());
    }
    if g == 0 {
        return None;
    }
    Some(d.iter().map(|&x| x / g).collect())
}

fn ratio_dir(d: &[i64], g: &[i64]) -> Option<i64> {
    let pivot = g.iter().position(|&x| x != 0)?;
    if d[pivot] % g[pivot] != 0 {
        return None;
    }
    let k = d[pivot] / g[pivot];
    d.iter().zip(g).all(|(a, b)| *a == k * *b).then_some(k)
}

fn gcd_i64(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

/// Irreducible factor of `a` of multiplicity exactly one that does not
/// divide `other`; this is the Eisenstein witness.
fn simple_unshared_prime(a: &KPoly, other: &KPoly) -> Option<KPoly> {
    if a.is_constant() {
        return None;
    }
    for (part, mult) in a.monic().squarefree_decomposition() {
        if mult != 1 {
            continue;
        }
        let candidates = part.exact_div(&part.gcd(other)).expect("gcd divides");
        if candidates.is_constant() {
            continue;
        }
        let (_, factors) = polyalg::factor_univariate_k(&candidates);
        if let Some((p, _)) = factors.into_iter().next() {
            return Some(p);
        }
    }
    None
}

/// Options for [`ritt_factor_with`].
#[derive(Debug, Clone, Copy, Default)]
pub struct RittOptions {
    /// Refinement bound for certificates; `None` picks the default per
    /// candidate.
    pub refinement_bound: Option<u32>,
}

pub fn ritt_factor(f: &ExpPoly) -> Result<RittFactorization, RittError> {
    ritt_factor_with(f, RittOptions::default())
}

pub fn ritt_factor_with(
    f: &ExpPoly,
    options: RittOptions,
) -> Result<RittFactorization, RittError> {
    if f.is_zero() {
        return Err(RittError::ZeroFunction);
    }
    let mut refine = 1u32;
    for _attempt in 0..8 {
        match ritt_factor_once(f, refine, options) {
            Err(RittError::FactorSplit { t, .. }) => {
                refine = refine.saturating_mul(t.max(2));
            }
            other => return other,
        }
    }
    Err(RittError::RefinementLimit)
}

fn ritt_factor_once(
    f: &ExpPoly,
    refine: u32,
    options: RittOptions,
) -> Result<RittFactorization, RittError> {
    let model = polynomial_model_refined(&[f], refine)?;
    let mp = &model.polys[0];
    let basis = &model.lattice.basis;
    let factorization = polyalg::factor_baseline(mp)?;

    let mut simple_buckets: BTreeMap<FieldElement, ExpPoly> = BTreeMap::new();
    let mut irreducibles: Vec<IrreducibleFactor> = Vec::new();

    for mf in &factorization.factors {
        let used = mf.poly.used_vars();
        if used.is_empty() {
            continue; // constant, absorbed by the unit
        }
        // monomial in X variables only: a unit contribution
        if mf.poly.num_terms() == 1 && !mf.poly.involves(0) {
            continue;
        }
        if used == vec![0] {
            // pure-x factor, irreducible over K by the baseline contract
            let up = mf.poly.to_univariate(0).expect("x only");
            let monic = up.monic();
            let factor = ExpPoly::exp_term(FieldElement::zero(), monic.clone());
            let certificate = if monic.deg() == 1 {
                Certificate::LinearInX {
                    root: -monic.coeff(0),
                }
            } else {
                Certificate::MaybeReducible {
                    reason:
                        "irreducible over the session field; may factor over an extension"
                            .to_string(),
                }
            };
            irreducibles.push(IrreducibleFactor {
                factor,
                multiplicity: mf.multiplicity,
                certificate,
            });
            continue;
        }
        if !mf.poly.involves(0) && x_free_rank_one(&mf.poly) {
            // merge into the simple part of its support
            let ep = model_to_exppoly(&mf.poly, basis);
            let beta = match ep.classify() {
                Classification::Simple(s) => s.beta,
                _ => unreachable!("rank-one x-free factor is simple"),
            };
            let key = support_key(&beta);
            let entry = simple_buckets.entry(key).or_insert_with(ExpPoly::one);
            let powered = ep.pow(mf.multiplicity);
            *entry = entry.mul(&powered).expect("same field");
            continue;
        }
        // irreducible candidate
        let bound = options
            .refinement_bound
            .unwrap_or_else(|| default_refinement_bound(&mf.poly));
        let certificate = if mf.certified {
            certify_irreducible(&mf.poly, bound)?
        } else {
            // outside the baseline class: try the shape certificates but
            // never report a split that was not proven
            match certify_irreducible(&mf.poly, 1) {
                Ok(Certificate::RefinementBounded { .. }) | Err(_) => {
                    Certificate::MaybeReducible {
                        reason: "outside the certified factorization class".to_string(),
                    }
                }
                Ok(c) => c,
            }
        };
        irreducibles.push(IrreducibleFactor {
            factor: model_to_exppoly(&mf.poly, basis),
            multiplicity: mf.multiplicity,
            certificate,
        });
    }

    let mut simples: Vec<SimpleEForm> = Vec::new();
    for (_, product) in simple_buckets {
        match product.classify() {
            Classification::Simple(s) => simples.push(s),
            _ => unreachable!("bucket of same-support simples is simple"),
        }
    }

    // the unit is whatever exact division leaves over
    let mut parts = ExpPoly::one();
    for s in &simples {
        parts = parts.mul(&s.exp_poly()).expect("same field");
    }
    for h in &irreducibles {
        parts = parts
            .mul(&h.factor.pow(h.multiplicity))
            .expect("same field");
    }
    let unit = unit_quotient(f, &parts);
    let result = RittFactorization {
        unit,
        simples,
        irreducibles,
    };
    assert_eq!(
        result.product(),
        *f,
        "factorization must reconstruct the input"
    );
    Ok(result)
}

/// `f / parts` when the quotient is a unit; the reconstruction assert in
/// the caller catches anything else.
fn unit_quotient(f: &ExpPoly, parts: &ExpPoly) -> UnitE {
    let (bf, pf) = f.terms().next().expect("nonzero");
    let (bp, pp) = parts.terms().next().expect("nonzero");
    let alpha = bf.clone() - bp.clone();
    let lambda = pf.leading() / pp.leading();
    UnitE::new(lambda, alpha)
}

/// All exponent-vector differences collinear (rank one), for x-free
/// factors.
fn x_free_rank_one(mp: &KMPoly) -> bool {
    let pts: Vec<Vec<i64>> = mp
        .terms()
        .map(|(e, _)| e[1..].iter().map(|&x| x as i64).collect())
        .collect();
    if pts.len() < 2 {
        return false;
    }
    let base = &pts[0];
    let mut dir: Option<Vec<i64>> = None;
    for p in &pts[1..] {
        let d: Vec<i64> = p.iter().zip(base).map(|(a, b)| a - b).collect();
        match &dir {
            None => dir = primitive_dir(&d),
            Some(g) => {
                if ratio_dir(&d, g).is_none() {
                    return false;
                }
            }
        }
    }
    true
}
