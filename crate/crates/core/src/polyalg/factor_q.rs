//! Complete univariate factorization over the rationals.
//!
//! Classic Zassenhaus pipeline: squarefree decomposition, Cantor-Zassenhaus
//! factorization modulo a good small prime, quadratic Hensel lifting past
//! the Mignotte bound, then subset recombination.

use super::poly::Poly;
use crate::{Int, Rat};
use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Monic irreducible factors with multiplicities and the scalar in front.
///
/// The product of `factor^mult` times the scalar reproduces the input
/// exactly: the squarefree parts are monic and each integer irreducible is
/// re-normalized to monic, so the scalar is just the leading coefficient.
pub fn factor_rational(f: &Poly<Rat>) -> (Rat, Vec<(Poly<Rat>, u32)>) {
    assert!(!f.is_zero(), "cannot factor the zero polynomial");
    let scalar = f.leading();
    let mut out: Vec<(Poly<Rat>, u32)> = Vec::new();
    if f.is_constant() {
        return (scalar, out);
    }
    for (part, mult) in f.monic().squarefree_decomposition() {
        let zpart = to_primitive_int(&part).1;
        for zf in factor_squarefree_int(&zpart) {
            out.push((int_to_rat_poly(&zf).monic(), mult));
        }
    }
    (scalar, out)
}

/// True when `f` is irreducible over the rationals.
pub fn is_irreducible_rational(f: &Poly<Rat>) -> bool {
    if f.is_zero() || f.is_constant() {
        return false;
    }
    if f.deg() == 1 {
        return true;
    }
    if !f.gcd(&f.derivative()).is_constant() {
        return false;
    }
    let z = to_primitive_int(f).1;
    factor_squarefree_int(&z).len() == 1
}

/// Clear denominators and integer content: `f = scalar * primitive`.
fn to_primitive_int(f: &Poly<Rat>) -> (Rat, Vec<Int>) {
    let mut den = Int::one();
    for c in f.coeffs() {
        den = den.lcm(c.denom());
    }
    let ints: Vec<Int> = f
        .coeffs()
        .iter()
        .map(|c| c.numer() * (&den / c.denom()))
        .collect();
    let mut content = Int::zero();
    for c in &ints {
        content = content.gcd(c);
    }
    if content.is_zero() {
        content = Int::one();
    }
    if ints.last().map_or(false, |c| c.is_negative()) {
        content = -content;
    }
    let prim: Vec<Int> = ints.iter().map(|c| c / &content).collect();
    (Rat::new(content, den), prim)
}

fn int_to_rat_poly(z: &[Int]) -> Poly<Rat> {
    Poly::from_coeffs(z.iter().map(|c| Rat::from_integer(c.clone())).collect())
}

/// Factor a primitive squarefree integer polynomial into primitive
/// irreducible integer polynomials with positive leading coefficients.
fn factor_squarefree_int(f: &[Int]) -> Vec<Vec<Int>> {
    let n = f.len() - 1;
    if n <= 1 {
        return vec![f.to_vec()];
    }
    let lc = f.last().unwrap().clone();

    // monicize: F(x) = lc^(n-1) f(x/lc), monic over Z
    let mut fm: Vec<Int> = Vec::with_capacity(n + 1);
    for (k, c) in f.iter().enumerate() {
        // coefficient of x^k in F is c * lc^(n-1-k)
        fm.push(c * pow_int(&lc, (n - 1).saturating_sub(k) as u32));
    }
    if n >= 1 {
        // fix k = n: c * lc^(n-1-n) would underflow; lc^(n-1)/lc^n = 1/lc
        fm[n] = Int::one();
    }

    let p = choose_prime(&fm);
    let fp = reduce_mod_p(&fm, p);
    let modular = cz_factor(&fp, p);
    if modular.len() == 1 {
        return vec![f.to_vec()];
    }

    // Mignotte-style bound for coefficients of monic factors of fm
    let maxc = fm.iter().map(|c| c.abs()).max().unwrap();
    let bound: Int = (Int::one() << (n + 2)) * Int::from(n as u64 + 1) * maxc;
    let mut pk = Int::from(p);
    let mut k = 1u32;
    while pk <= &bound * 2 {
        pk = &pk * Int::from(p);
        k += 1;
    }

    let lifted = hensel_lift_tree(&fm, &modular, p, k);
    let factors_monic = recombine(&fm, lifted, &pk);

    // undo the monicization: g(x) = primitive part of g_monic(lc * x)
    factors_monic
        .into_iter()
        .map(|g| {
            let d = g.len() - 1;
            let mut h: Vec<Int> = g
                .iter()
                .enumerate()
                .map(|(i, c)| c * pow_int(&lc, i as u32))
                .collect();
            let mut content = Int::zero();
            for c in &h {
                content = content.gcd(c);
            }
            if h.last().unwrap().is_negative() {
                content = -content;
            }
            for c in h.iter_mut() {
                *c = &*c / &content;
            }
            debug_assert_eq!(h.len() - 1, d);
            h
        })
        .collect()
}

fn pow_int(b: &Int, e: u32) -> Int {
    let mut acc = Int::one();
    for _ in 0..e {
        acc = acc * b;
    }
    acc
}

fn small_primes() -> Vec<u64> {
    // odd primes, enough choice for desk-scale inputs
    let mut sieve = vec![true; 20_000];
    let mut out = Vec::new();
    for i in 2..sieve.len() {
        if sieve[i] {
            if i > 2 {
                out.push(i as u64);
            }
            let mut j = i * i;
            while j < sieve.len() {
                sieve[j] = false;
                j += i;
            }
        }
    }
    out
}

fn choose_prime(fm: &[Int]) -> u64 {
    for p in small_primes() {
        let fp = reduce_mod_p(fm, p);
        if fp.len() != fm.len() {
            continue; // lc vanished (cannot happen for monic, kept for safety)
        }
        let dfp = zp_derivative(&fp, p);
        if zp_gcd(&fp, &dfp, p).len() == 1 {
            return p;
        }
    }
    panic!("no good prime found for {:?}", fm);
}

fn reduce_mod_p(f: &[Int], p: u64) -> Vec<u64> {
    let pi = Int::from(p);
    let mut out: Vec<u64> = f
        .iter()
        .map(|c| {
            let r = c.mod_floor(&pi);
            r.to_u64().unwrap()
        })
        .collect();
    while out.last().map_or(false, |&c| c == 0) {
        out.pop();
    }
    out
}

// ---- arithmetic mod a small odd prime (coefficients as u64) ----

fn mulp(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn invp(a: u64, p: u64) -> u64 {
    // extended euclid
    let (mut t, mut new_t) = (0i128, 1i128);
    let (mut r, mut new_r) = (p as i128, a as i128);
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    assert_eq!(r, 1, "not invertible");
    (t.rem_euclid(p as i128)) as u64
}

fn zp_trim(a: &mut Vec<u64>) {
    while a.last() == Some(&0) {
        a.pop();
    }
}

fn zp_mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + mulp(x, y, p)) % p;
        }
    }
    zp_trim(&mut out);
    out
}

fn zp_sub(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let n = a.len().max(b.len());
    let mut out = vec![0u64; n];
    for k in 0..n {
        let x = a.get(k).copied().unwrap_or(0);
        let y = b.get(k).copied().unwrap_or(0);
        out[k] = (x + p - y) % p;
    }
    zp_trim(&mut out);
    out
}

fn zp_divrem(a: &[u64], b: &[u64], p: u64) -> (Vec<u64>, Vec<u64>) {
    assert!(!b.is_empty());
    let mut rem = a.to_vec();
    zp_trim(&mut rem);
    if rem.len() < b.len() {
        return (vec![], rem);
    }
    let mut q = vec![0u64; rem.len() - b.len() + 1];
    let binv = invp(*b.last().unwrap(), p);
    while rem.len() >= b.len() && !rem.is_empty() {
        let k = rem.len() - b.len();
        let c = mulp(*rem.last().unwrap(), binv, p);
        q[k] = c;
        for (j, &bc) in b.iter().enumerate() {
            let idx = k + j;
            rem[idx] = (rem[idx] + p - mulp(c, bc, p)) % p;
        }
        zp_trim(&mut rem);
    }
    (q, rem)
}

fn zp_rem(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    zp_divrem(a, b, p).1
}

fn zp_monic(a: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() {
        return vec![];
    }
    let inv = invp(*a.last().unwrap(), p);
    a.iter().map(|&c| mulp(c, inv, p)).collect()
}

fn zp_gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    zp_trim(&mut x);
    zp_trim(&mut y);
    while !y.is_empty() {
        let r = zp_rem(&x, &y, p);
        x = y;
        y = r;
    }
    if x.is_empty() {
        x
    } else {
        zp_monic(&x, p)
    }
}

fn zp_derivative(a: &[u64], p: u64) -> Vec<u64> {
    if a.len() <= 1 {
        return vec![];
    }
    let mut out: Vec<u64> = a
        .iter()
        .enumerate()
        .skip(1)
        .map(|(k, &c)| mulp(c, (k as u64) % p, p))
        .collect();
    zp_trim(&mut out);
    out
}

/// Extended gcd mod p: returns (g, s, t) monic with s*a + t*b = g.
fn zp_egcd(a: &[u64], b: &[u64], p: u64) -> (Vec<u64>, Vec<u64>, Vec<u64>) {
    let (mut r0, mut r1) = (a.to_vec(), b.to_vec());
    let (mut s0, mut s1) = (vec![1u64], vec![]);
    let (mut t0, mut t1) = (vec![], vec![1u64]);
    zp_trim(&mut r0);
    zp_trim(&mut r1);
    while !r1.is_empty() {
        let (q, r) = zp_divrem(&r0, &r1, p);
        let s = zp_sub(&s0, &zp_mul(&q, &s1, p), p);
        let t = zp_sub(&t0, &zp_mul(&q, &t1, p), p);
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s;
        t0 = t1;
        t1 = t;
    }
    let inv = invp(*r0.last().unwrap(), p);
    let scale = |v: &[u64]| v.iter().map(|&c| mulp(c, inv, p)).collect::<Vec<_>>();
    (scale(&r0), scale(&s0), scale(&t0))
}

fn zp_pow_mod(base: &[u64], e: &BigUint, m: &[u64], p: u64) -> Vec<u64> {
    let mut acc = vec![1u64];
    let mut b = zp_rem(base, m, p);
    for i in 0..e.bits() {
        if e.bit(i) {
            acc = zp_rem(&zp_mul(&acc, &b, p), m, p);
        }
        b = zp_rem(&zp_mul(&b, &b, p), m, p);
    }
    acc
}

// ---- Cantor-Zassenhaus ----

struct Lcg(u64);
impl Lcg {
    fn next(&mut self) -> u64 {
        self.0 = self
            .0
            .wrapping_mul(6364136223846793005)
            .wrapping_add(1442695040888963407);
        self.0 >> 16
    }
}

/// Factor a monic squarefree polynomial mod p into monic irreducibles.
fn cz_factor(f: &[u64], p: u64) -> Vec<Vec<u64>> {
    let f = zp_monic(f, p);
    let mut out = Vec::new();
    // distinct degree
    let mut rem = f.clone();
    let mut w = vec![0u64, 1]; // x
    let mut d = 1usize;
    let mut stages: Vec<(Vec<u64>, usize)> = Vec::new();
    while rem.len() > 1 && 2 * d <= rem.len() - 1 {
        w = zp_pow_mod(&w, &BigUint::from(p), &rem, p);
        let wx = zp_sub(&w, &[0, 1], p);
        let g = zp_gcd(&rem, &wx, p);
        if g.len() > 1 {
            stages.push((g.clone(), d));
            rem = zp_divrem(&rem, &g, p).0;
            w = zp_rem(&w, &rem, p);
        }
        d += 1;
    }
    if rem.len() > 1 {
        stages.push((rem.clone(), rem.len() - 1));
    }
    // equal degree
    let mut rng = Lcg(0x5eed_1234_abcd_9876);
    for (g, d) in stages {
        edf(&g, d, p, &mut rng, &mut out);
    }
    out.sort();
    out
}

fn edf(g: &[u64], d: usize, p: u64, rng: &mut Lcg, out: &mut Vec<Vec<u64>>) {
    let r = (g.len() - 1) / d;
    if r == 1 {
        out.push(zp_monic(g, p));
        return;
    }
    let e = (BigUint::from(p).pow(d as u32) - BigUint::one()) / BigUint::from(2u32);
    loop {
        let deg = g.len() - 2;
        let mut a: Vec<u64> = (0..=deg).map(|_| rng.next() % p).collect();
        zp_trim(&mut a);
        if a.len() <= 1 {
            continue;
        }
        let b = zp_pow_mod(&a, &e, g, p);
        let bm1 = zp_sub(&b, &[1], p);
        let h = zp_gcd(g, &bm1, p);
        if h.len() > 1 && h.len() < g.len() {
            let q = zp_divrem(g, &h, p).0;
            edf(&h, d, p, rng, out);
            edf(&q, d, p, rng, out);
            return;
        }
    }
}

// ---- Hensel lifting (coefficients as BigInt mod m) ----

fn zm_norm(a: &mut Vec<Int>, m: &Int) {
    for c in a.iter_mut() {
        *c = c.mod_floor(m);
    }
    while a.last().map_or(false, |c| c.is_zero()) {
        a.pop();
    }
}

fn zm_mul(a: &[Int], b: &[Int], m: &Int) -> Vec<Int> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![Int::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    zm_norm(&mut out, m);
    out
}

fn zm_add(a: &[Int], b: &[Int], m: &Int) -> Vec<Int> {
    let n = a.len().max(b.len());
    let mut out = vec![Int::zero(); n];
    for k in 0..n {
        out[k] = a.get(k).cloned().unwrap_or_default() + b.get(k).cloned().unwrap_or_default();
    }
    zm_norm(&mut out, m);
    out
}

fn zm_sub(a: &[Int], b: &[Int], m: &Int) -> Vec<Int> {
    let n = a.len().max(b.len());
    let mut out = vec![Int::zero(); n];
    for k in 0..n {
        out[k] = a.get(k).cloned().unwrap_or_default() - b.get(k).cloned().unwrap_or_default();
    }
    zm_norm(&mut out, m);
    out
}

/// Division by a monic polynomial, coefficients mod m.
fn zm_divrem_monic(a: &[Int], b: &[Int], m: &Int) -> (Vec<Int>, Vec<Int>) {
    assert!(b.last().map_or(false, |c| c.is_one()));
    let mut rem = a.to_vec();
    zm_norm(&mut rem, m);
    if rem.len() < b.len() {
        return (vec![], rem);
    }
    let mut q = vec![Int::zero(); rem.len() - b.len() + 1];
    while rem.len() >= b.len() && !rem.is_empty() {
        let k = rem.len() - b.len();
        let c = rem.last().unwrap().clone();
        q[k] = c.clone();
        for (j, bc) in b.iter().enumerate() {
            rem[k + j] -= &c * bc;
        }
        zm_norm(&mut rem, m);
    }
    zm_norm(&mut q, m);
    (q, rem)
}

fn u64s_to_ints(a: &[u64]) -> Vec<Int> {
    a.iter().map(|&c| Int::from(c)).collect()
}

/// Quadratic two-factor lift: from f = g*h and s*g + t*h = 1 (mod m) to the
/// same congruences mod m^2. f and h monic.
#[allow(clippy::too_many_arguments)]
fn hensel_step(
    f: &[Int],
    g: &[Int],
    h: &[Int],
    s: &[Int],
    t: &[Int],
    m: &Int,
) -> (Vec<Int>, Vec<Int>, Vec<Int>, Vec<Int>) {
    let m2 = m * m;
    let e = zm_sub(f, &zm_mul(g, h, &m2), &m2);
    let se = zm_mul(s, &e, &m2);
    let (q, r) = zm_divrem_monic(&se, h, &m2);
    let gg = zm_add(&zm_add(g, &zm_mul(t, &e, &m2), &m2), &zm_mul(&q, g, &m2), &m2);
    let hh = zm_add(h, &r, &m2);
    let b = zm_sub(
        &zm_add(&zm_mul(s, &gg, &m2), &zm_mul(t, &hh, &m2), &m2),
        &[Int::one()],
        &m2,
    );
    let sb = zm_mul(s, &b, &m2);
    let (c, d) = zm_divrem_monic(&sb, &hh, &m2);
    let ss = zm_sub(s, &d, &m2);
    let tt = zm_sub(&zm_sub(t, &zm_mul(t, &b, &m2), &m2), &zm_mul(&c, &gg, &m2), &m2);
    (gg, hh, ss, tt)
}

/// Lift the factorization of a monic f from mod p to mod p^k by splitting
/// the factor list in halves and lifting each pair quadratically.
fn hensel_lift_tree(f: &[Int], factors: &[Vec<u64>], p: u64, k: u32) -> Vec<Vec<Int>> {
    if factors.len() == 1 {
        let pk = pow_int(&Int::from(p), k);
        let mut out = f.to_vec();
        zm_norm(&mut out, &pk);
        return vec![out];
    }
    let mid = factors.len() / 2;
    let (left, right) = factors.split_at(mid);
    let mut g0 = vec![1u64];
    for fac in left {
        g0 = zp_mul(&g0, fac, p);
    }
    let mut h0 = vec![1u64];
    for fac in right {
        h0 = zp_mul(&h0, fac, p);
    }
    let (one, s0, t0) = zp_egcd(&g0, &h0, p);
    assert_eq!(one, vec![1], "modular factors not coprime");

    let mut g = u64s_to_ints(&g0);
    let mut h = u64s_to_ints(&h0);
    let mut s = u64s_to_ints(&s0);
    let mut t = u64s_to_ints(&t0);
    let mut m = Int::from(p);
    let target = pow_int(&Int::from(p), k);
    while m < target {
        let (gg, hh, ss, tt) = hensel_step(f, &g, &h, &s, &t, &m);
        g = gg;
        h = hh;
        s = ss;
        t = tt;
        m = &m * &m;
    }
    zm_norm(&mut g, &target);
    zm_norm(&mut h, &target);
    let mut out = hensel_lift_tree(&g, left, p, k);
    out.extend(hensel_lift_tree(&h, right, p, k));
    out
}

fn symmetric(a: &[Int], m: &Int) -> Vec<Int> {
    let half = m / 2;
    a.iter()
        .map(|c| {
            let r = c.mod_floor(m);
            if r > half {
                r - m
            } else {
                r
            }
        })
        .collect()
}

/// Exact division of integer polynomials (monic divisor), `None` on failure.
fn z_exact_div_monic(a: &[Int], b: &[Int]) -> Option<Vec<Int>> {
    assert!(b.last().map_or(false, |c| c.is_one()));
    let mut rem = a.to_vec();
    if rem.len() < b.len() {
        return None;
    }
    let mut q = vec![Int::zero(); rem.len() - b.len() + 1];
    while rem.len() >= b.len() {
        let k = rem.len() - b.len();
        let c = rem.last().unwrap().clone();
        q[k] = c.clone();
        for (j, bc) in b.iter().enumerate() {
            rem[k + j] -= &c * bc;
        }
        while rem.last().map_or(false, |x| x.is_zero()) {
            rem.pop();
        }
    }
    rem.is_empty().then_some(q)
}

/// Subset recombination of lifted monic factors into true monic factors.
fn recombine(f: &[Int], lifted: Vec<Vec<Int>>, pk: &Int) -> Vec<Vec<Int>> {
    let mut remaining = lifted;
    let mut current = f.to_vec();
    let mut out = Vec::new();
    let mut size = 1usize;
    'outer: while 2 * size <= remaining.len() {
        let idxs: Vec<usize> = (0..remaining.len()).collect();
        for combo in combinations(&idxs, size) {
            let mut prod = vec![Int::one()];
            for &i in &combo {
                prod = zm_mul(&prod, &remaining[i], pk);
            }
            let cand = symmetric(&prod, pk);
            if cand.last().map_or(true, |c| !c.is_one()) {
                continue;
            }
            if let Some(q) = z_exact_div_monic(&current, &cand) {
                out.push(cand);
                current = q;
                let keep: Vec<Vec<Int>> = remaining
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| !combo.contains(i))
                    .map(|(_, v)| v.clone())
                    .collect();
                remaining = keep;
                continue 'outer;
            }
        }
        size += 1;
    }
    if current.len() > 1 {
        out.push(current);
    }
    out
}

pub(super) fn combinations(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    let n = items.len();
    let mut out = Vec::new();
    if k == 0 || k > n {
        return out;
    }
    let mut c: Vec<usize> = (0..k).collect();
    loop {
        out.push(c.iter().map(|&i| items[i]).collect());
        // rightmost index that can still advance
        let mut i = k;
        while i > 0 && c[i - 1] == n - k + (i - 1) {
            i -= 1;
        }
        if i == 0 {
            return out;
        }
        c[i - 1] += 1;
        for j in i..k {
            c[j] = c[j - 1] + 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rint;

    fn p(cs: &[i64]) -> Poly<Rat> {
        Poly::from_i64s(cs)
    }

    fn check_product(f: &Poly<Rat>) {
        let (scalar, factors) = factor_rational(f);
        let mut prod = Poly::constant(scalar);
        for (g, m) in &factors {
            prod = prod.mul(&g.pow(*m));
        }
        assert_eq!(&prod, f, "factorization must remultiply");
        for (g, _) in &factors {
            assert!(is_irreducible_rational(g), "{} not irreducible", g);
        }
    }

    #[test]
    fn factor_products_of_linears() {
        check_product(&p(&[-1, 0, 0, 0, 1])); // x^4-1 = (x-1)(x+1)(x^2+1)
        let (_, fs) = factor_rational(&p(&[-1, 0, 0, 0, 1]));
        assert_eq!(fs.len(), 3);
    }

    #[test]
    fn factor_with_multiplicity() {
        // (x-1)^2 (x^2+x+1)
        let f = p(&[-1, 1]).pow(2).mul(&p(&[1, 1, 1]));
        check_product(&f);
        let (_, fs) = factor_rational(&f);
        assert_eq!(fs.iter().map(|(_, m)| m).sum::<u32>(), 3);
    }

    #[test]
    fn factor_nonmonic() {
        // 6x^2 + 5x + 1 = (2x+1)(3x+1)
        let f = p(&[1, 5, 6]);
        check_product(&f);
        let (_, fs) = factor_rational(&f);
        assert_eq!(fs.len(), 2);
    }

    #[test]
    fn irreducibles_detected() {
        assert!(is_irreducible_rational(&p(&[1, 0, 1])));
        assert!(is_irreducible_rational(&p(&[-2, 0, 1])));
        assert!(is_irreducible_rational(&p(&[1, -1, 0, 0, 1]))); // x^4 - x + 1
        assert!(!is_irreducible_rational(&p(&[-1, 0, 1])));
        // cyclotomic Phi_12 = x^4 - x^2 + 1
        assert!(is_irreducible_rational(&p(&[1, 0, -1, 0, 1])));
    }

    #[test]
    fn factor_larger_product() {
        // (x^2-2)(x^2-3)(x^2+x+1)(x-5)
        let f = p(&[-2, 0, 1])
            .mul(&p(&[-3, 0, 1]))
            .mul(&p(&[1, 1, 1]))
            .mul(&p(&[-5, 1]));
        check_product(&f);
        let (_, fs) = factor_rational(&f);
        assert_eq!(fs.len(), 4);
    }

    #[test]
    fn factor_rational_coefficients() {
        // (x/2 - 1/3)(x + 3/4)
        let f = Poly::from_rats(&[crate::rat(-1, 3), crate::rat(1, 2)])
            .mul(&Poly::from_rats(&[crate::rat(3, 4), rint(1)]));
        check_product(&f);
    }
}
