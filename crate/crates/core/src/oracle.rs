//! Ground truth by brute force, independent of the classification theory.
//!
//! Elements of `O_L = Z_p[pi]/(f(pi))` are stored as `sum c_k pi^k`,
//! `k < e`, with each `c_k` reduced modulo `p^N`. Isomorphism of `L_f` and
//! `L_g` is decided by searching for a root of `g` in `O_{L_f}` digit by
//! digit in base `pi`.
//!
//! Pruning. Let `r` be a root of `g` in `L_f` and `c` the truncation of its
//! `pi`-adic expansion after `k` digits, so `v(c - r) >= k + 1`. Every
//! other root `r'` of `g` satisfies `v(r - r') = delta` for one of the
//! root gaps `delta_j` of `g` (read off the Newton polygon of
//! `g(x + pi_g)`), hence
//!
//! ```text
//! v(g(c)) >= (k + 1) + sum_j min(k + 1, delta_j).
//! ```
//!
//! A prefix violating this bound cannot extend to a root, so when every
//! prefix dies, no root exists. A prefix `c` with `v(g(c)) > 2 v(g'(c))`
//! converges to a root by Hensel's lemma.

use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::eisenstein::{quad_shift, EisensteinPoly};
use crate::error::{Error, Result};
use crate::padic::{modulo, vp_int, Prime, ValQ};
use crate::poly::Poly;

/// Largest precision the automatic doubling will try.
const MAX_PRECISION: u32 = 1024;

/// Default coefficient precision `N` for a prime.
pub fn default_precision(p: Prime) -> u32 {
    if p.get() == 3 {
        8
    } else {
        6
    }
}

/// `O_L / p^N` for `L = Q_p[X]/(f)`.
#[derive(Debug, PartialEq, Eq)]
pub struct OLRing {
    f: EisensteinPoly,
    precision: u32,
    modulus: BigInt,
}

impl OLRing {
    pub fn new(f: &EisensteinPoly, precision: u32) -> Arc<Self> {
        assert!(precision >= 1);
        Arc::new(OLRing {
            f: f.clone(),
            precision,
            modulus: f.prime().pow(precision),
        })
    }

    pub fn degree(&self) -> usize {
        self.f.degree()
    }

    pub fn precision(&self) -> u32 {
        self.precision
    }

    pub fn prime(&self) -> Prime {
        self.f.prime()
    }

    pub fn defining_poly(&self) -> &EisensteinPoly {
        &self.f
    }

    /// `e * N`: valuations below this are exact.
    pub fn guard(&self) -> u64 {
        self.degree() as u64 * self.precision as u64
    }

    fn reduce(&self, mut c: Vec<BigInt>) -> Vec<BigInt> {
        let e = self.degree();
        for k in (e..c.len()).rev() {
            let top = std::mem::take(&mut c[k]);
            if top.is_zero() {
                continue;
            }
            // pi^e = -(a_0 + a_1 pi + ... + a_{e-1} pi^{e-1})
            for (i, a) in self.f.coeffs().iter().enumerate() {
                if !a.is_zero() {
                    c[k - e + i] -= &top * a;
                }
            }
        }
        c.truncate(e);
        c.resize(e, BigInt::zero());
        c.iter().map(|x| modulo(x, &self.modulus)).collect()
    }

    fn add_raw(&self, a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
        a.iter()
            .zip(b)
            .map(|(x, y)| {
                let s = x + y;
                if s >= self.modulus {
                    s - &self.modulus
                } else {
                    s
                }
            })
            .collect()
    }

    fn mul_raw(&self, a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
        let e = self.degree();
        let mut prod = vec![BigInt::zero(); 2 * e - 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if !y.is_zero() {
                    prod[i + j] += x * y;
                }
            }
        }
        self.reduce(prod)
    }

    fn eval_raw(&self, h: &[BigInt], x: &[BigInt]) -> Vec<BigInt> {
        let e = self.degree();
        let mut acc = vec![BigInt::zero(); e];
        for c in h.iter().rev() {
            acc = self.mul_raw(&acc, x);
            acc[0] = modulo(&(&acc[0] + c), &self.modulus);
        }
        acc
    }

    fn valuation_raw(&self, c: &[BigInt]) -> Option<u64> {
        let e = self.degree() as u64;
        let p = self.prime();
        c.iter()
            .enumerate()
            .filter_map(|(k, x)| vp_int(x, p).map(|v| e * v + k as u64))
            .min()
            .filter(|&v| v < self.guard())
    }

    fn from_raw(self: &Arc<Self>, coeffs: Vec<BigInt>) -> OLElement {
        OLElement {
            ring: Arc::clone(self),
            coeffs,
        }
    }

    pub fn from_int(self: &Arc<Self>, n: &BigInt) -> OLElement {
        let mut c = vec![BigInt::zero(); self.degree()];
        c[0] = modulo(n, &self.modulus);
        self.from_raw(c)
    }

    pub fn zero(self: &Arc<Self>) -> OLElement {
        self.from_int(&BigInt::zero())
    }

    pub fn one(self: &Arc<Self>) -> OLElement {
        self.from_int(&BigInt::one())
    }

    /// The generator `pi`, a root of `f`.
    pub fn pi(self: &Arc<Self>) -> OLElement {
        let mut c = vec![BigInt::zero(); self.degree()];
        c[1] = BigInt::one();
        self.from_raw(self.reduce(c))
    }

    /// `sum_k coeffs[k] pi^k` for any number of coefficients.
    pub fn element(self: &Arc<Self>, coeffs: &[BigInt]) -> OLElement {
        let mut c = coeffs.to_vec();
        if c.len() < self.degree() {
            c.resize(self.degree(), BigInt::zero());
        }
        self.from_raw(self.reduce(c))
    }
}

/// A truncated element of `O_L`.
#[derive(Clone, Debug)]
pub struct OLElement {
    ring: Arc<OLRing>,
    coeffs: Vec<BigInt>,
}

impl PartialEq for OLElement {
    fn eq(&self, other: &Self) -> bool {
        self.same_ring(other) && self.coeffs == other.coeffs
    }
}

impl OLElement {
    fn same_ring(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.ring, &other.ring) || *self.ring == *other.ring
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.same_ring(other) {
            Ok(())
        } else {
            Err(Error::Mismatch)
        }
    }

    pub fn ring(&self) -> &Arc<OLRing> {
        &self.ring
    }

    /// Coefficients `c_0..c_{e-1}` in `[0, p^N)`.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.ring.from_raw(self.ring.add_raw(&self.coeffs, &other.coeffs)))
    }

    pub fn neg(&self) -> Self {
        let m = &self.ring.modulus;
        self.ring
            .from_raw(self.coeffs.iter().map(|c| modulo(&-c, m)).collect())
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.ring.from_raw(self.ring.mul_raw(&self.coeffs, &other.coeffs)))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// `h(self)` for an integer polynomial `h` (low degree first).
    pub fn eval_poly(&self, h: &[BigInt]) -> Self {
        self.ring.from_raw(self.ring.eval_raw(h, &self.coeffs))
    }

    /// `v_L(self)` with `v_L(pi) = 1`, or `None` once it reaches the
    /// precision guard `e * N`.
    pub fn valuation(&self) -> Option<u64> {
        self.ring.valuation_raw(&self.coeffs)
    }
}

fn full_coeffs(f: &EisensteinPoly) -> Vec<BigInt> {
    f.to_poly().into_coeffs()
}

fn derivative(h: &[BigInt]) -> Vec<BigInt> {
    h.iter()
        .enumerate()
        .skip(1)
        .map(|(k, c)| c * BigInt::from(k))
        .collect()
}

/// `v_L` of the coefficients of `h(x + pi_f)` at indices `0..=deg h`,
/// computed by Horner expansion in `O_{L_f}`. Precision grows until every
/// nonzero coefficient is measured exactly; a coefficient still below the
/// guard at the precision cap is reported as infinite.
pub fn translated_valuations(h: &EisensteinPoly, f: &EisensteinPoly, precision: u32) -> Result<Vec<ValQ>> {
    if h.prime() != f.prime() {
        return Err(Error::Mismatch);
    }
    let hc = full_coeffs(h);
    let mut n = precision.max(1);
    loop {
        let ring = OLRing::new(f, n);
        let pi = ring.pi().coeffs;
        // polynomial in x with O_L coefficients, low degree first
        let mut acc: Vec<Vec<BigInt>> = Vec::new();
        for c in hc.iter().rev() {
            // acc = acc * (x + pi) + c
            let mut next = vec![vec![BigInt::zero(); ring.degree()]; acc.len() + 1];
            for (k, a) in acc.iter().enumerate() {
                next[k + 1] = ring.add_raw(&next[k + 1], a);
                next[k] = ring.add_raw(&next[k], &ring.mul_raw(a, &pi));
            }
            let mut cst = vec![BigInt::zero(); ring.degree()];
            cst[0] = modulo(c, &ring.modulus);
            next[0] = ring.add_raw(&next[0], &cst);
            acc = next;
        }
        let vals: Vec<Option<u64>> = acc.iter().map(|c| ring.valuation_raw(c)).collect();
        // h(pi_f) = 0 exactly when h = f
        let settled = vals
            .iter()
            .enumerate()
            .all(|(i, v)| v.is_some() || (i == 0 && h == f));
        if settled || n >= MAX_PRECISION {
            return Ok(vals
                .into_iter()
                .map(|v| v.map_or(ValQ::Infinite, |v| ValQ::int(v as i64)))
                .collect());
        }
        n *= 2;
    }
}

/// Exact `v_L(b_i)` for `f(x + pi) = sum b_i x^i`, `i = 1..=e`.
pub fn exact_shift_valuations(f: &EisensteinPoly, precision: u32) -> Vec<ValQ> {
    let mut v = translated_valuations(f, f, precision).expect("same prime");
    v.remove(0);
    v
}

/// Root gaps `v(r - r')` between a root `r` of `g` and its other
/// conjugates, with multiplicity, from a gift-wrapping lower hull of
/// `(i, v(b_i))`, `i = 1..=e`.
fn root_gaps(g: &EisensteinPoly, precision: u32) -> Vec<BigRational> {
    let vals: Vec<BigRational> = exact_shift_valuations(g, precision)
        .into_iter()
        .map(|v| v.finite().cloned().expect("b_i != 0 for i >= 1"))
        .collect();
    let e = vals.len();
    let mut gaps = Vec::with_capacity(e - 1);
    let mut x0 = 0usize;
    while x0 + 1 < e {
        let mut best: Option<(usize, BigRational)> = None;
        for x in x0 + 1..e {
            let s = (&vals[x] - &vals[x0]) / BigRational::from_integer(BigInt::from((x - x0) as i64));
            if best.as_ref().is_none_or(|(_, b)| s <= *b) {
                best = Some((x, s));
            }
        }
        let (x1, s) = best.expect("nonempty range");
        for _ in x0..x1 {
            gaps.push(-s.clone());
        }
        x0 = x1;
    }
    gaps
}

enum Mode {
    First,
    All,
}

enum Attempt {
    Done(Vec<OLElement>),
    NeedPrecision,
    /// Survivors remain at the depth limit without settling.
    Exhausted,
}

struct Search<'a> {
    g: &'a EisensteinPoly,
    g_coeffs: Vec<BigInt>,
    dg_coeffs: Vec<BigInt>,
    gaps: Vec<BigRational>,
    max_gap: BigRational,
    depth_limit: u64,
}

impl Search<'_> {
    /// `ceil((k + 1) + sum_j min(k + 1, delta_j))`
    fn bound(&self, k: u64) -> u64 {
        let r = BigRational::from_integer(BigInt::from(k + 1));
        let total = self
            .gaps
            .iter()
            .fold(r.clone(), |acc, d| acc + std::cmp::min(d, &r).clone());
        u64::try_from(total.ceil().to_integer()).expect("small bound")
    }

    fn attempt(&self, f: &EisensteinPoly, n: u32, mode: &Mode) -> Attempt {
        let ring = OLRing::new(f, n);
        let p = f.prime().get();
        let guard = ring.guard();
        let pi = ring.pi();
        let mut pow = pi.coeffs.clone();
        let mut level: Vec<Vec<BigInt>> = (1..p)
            .map(|d| pow.iter().map(|c| modulo(&(c * BigInt::from(d)), &ring.modulus)).collect())
            .collect();

        for k in 1..=self.depth_limit {
            let need = self.bound(k);
            let mut survivors = Vec::new();
            for c in level {
                let gc = ring.eval_raw(&self.g_coeffs, &c);
                match ring.valuation_raw(&gc) {
                    Some(v) if v >= need => survivors.push((c, Some(v))),
                    Some(_) => {}
                    None if need <= guard => survivors.push((c, None)),
                    None => return Attempt::NeedPrecision,
                }
            }
            if survivors.is_empty() {
                return Attempt::Done(Vec::new());
            }

            let mut isolated = true;
            for (c, vg) in &survivors {
                let Some(vd) = ring.valuation_raw(&ring.eval_raw(&self.dg_coeffs, c)) else {
                    return Attempt::NeedPrecision;
                };
                if 2 * vd >= guard {
                    return Attempt::NeedPrecision;
                }
                let vg = vg.unwrap_or(guard);
                let hensel = vg > 2 * vd;
                match mode {
                    Mode::First if hensel => {
                        return Attempt::Done(vec![ring.from_raw(c.clone())]);
                    }
                    Mode::First => {}
                    Mode::All => {
                        let sep = BigRational::from_integer(BigInt::from(k + 1)) > self.max_gap;
                        if !(hensel && vg - vd > k && sep) {
                            isolated = false;
                        }
                    }
                }
            }
            if matches!(mode, Mode::All) && isolated {
                return Attempt::Done(
                    survivors.into_iter().map(|(c, _)| ring.from_raw(c)).collect(),
                );
            }

            pow = ring.mul_raw(&pow, &pi.coeffs);
            level = Vec::with_capacity(survivors.len() * p as usize);
            for (c, _) in survivors {
                for d in 0..p {
                    let step: Vec<BigInt> = pow.iter().map(|x| x * BigInt::from(d)).collect();
                    level.push(ring.add_raw(&c, &ring.reduce(step)));
                }
            }
        }
        Attempt::Exhausted
    }
}

fn search(g: &EisensteinPoly, f: &EisensteinPoly, precision: u32, mode: Mode) -> Result<Vec<OLElement>> {
    if g.prime() != f.prime() || g.degree() != f.degree() {
        return Err(Error::Mismatch);
    }
    let gaps = root_gaps(g, precision);
    let diff: BigRational = gaps.iter().sum();
    let e_dg = u64::try_from(diff.to_integer()).expect("integral different");
    debug_assert!(diff.is_integer());
    let max_gap = gaps.iter().max().cloned().unwrap_or_else(BigRational::zero);
    let g_coeffs = full_coeffs(g);
    let s = Search {
        g,
        dg_coeffs: derivative(&g_coeffs),
        g_coeffs,
        gaps,
        max_gap,
        depth_limit: 2 * e_dg + 2,
    };
    let mut n = precision.max(1);
    loop {
        match s.attempt(f, n, &mode) {
            Attempt::Done(found) => return Ok(found),
            Attempt::NeedPrecision if n < MAX_PRECISION => n *= 2,
            Attempt::Exhausted => {
                return Err(Error::Inconclusive(format!(
                    "prefixes for {} survive past depth {}",
                    s.g, s.depth_limit
                )))
            }
            Attempt::NeedPrecision => {
                return Err(Error::Inconclusive(format!(
                    "root search for {} in Q_p[x]/({f}) did not settle",
                    s.g
                )))
            }
        }
    }
}

/// An approximate root of `g` in `O_{L_f}` satisfying Hensel's criterion,
/// or `None` when `g` has no root in `L_f`.
///
/// The returned element is the first successful prefix in lexicographic
/// digit order at the shallowest depth where any prefix succeeds.
pub fn root_in_field(g: &EisensteinPoly, f: &EisensteinPoly, precision: u32) -> Result<Option<OLElement>> {
    Ok(search(g, f, precision, Mode::First)?.into_iter().next())
}

/// One isolating approximation per root of `g` in `L_f`.
pub fn roots_in_field(g: &EisensteinPoly, f: &EisensteinPoly, precision: u32) -> Result<Vec<OLElement>> {
    search(g, f, precision, Mode::All)
}

/// `L_f ≅ L_g`, decided by looking for a root of `g` in `L_f`.
pub fn oracle_equiv(f: &EisensteinPoly, g: &EisensteinPoly, precision: u32) -> Result<bool> {
    Ok(root_in_field(g, f, precision)?.is_some())
}

/// `(v(g(c)), v(g'(c)))`, `None` meaning "at least the precision guard".
pub fn hensel_valuations(g: &EisensteinPoly, c: &OLElement) -> (Option<u64>, Option<u64>) {
    let gc = full_coeffs(g);
    let dg = derivative(&gc);
    (c.eval_poly(&gc).valuation(), c.eval_poly(&dg).valuation())
}

fn rational_poly(f: &EisensteinPoly) -> Poly<BigRational> {
    Poly::new(
        full_coeffs(f)
            .into_iter()
            .map(BigRational::from_integer)
            .collect(),
    )
}

/// Check `g(u x^2 + x) = -u^p f(x) f(-x - 1/u)` over `Q[x]` for a given `g`.
pub fn verify_quad_identity_with(f: &EisensteinPoly, u: &BigInt, g: &EisensteinPoly) -> bool {
    if u.is_zero() {
        return false;
    }
    let e = f.degree();
    let ur = BigRational::from_integer(u.clone());
    let fq = rational_poly(f);
    let inner = Poly::new(vec![BigRational::zero(), BigRational::one(), ur.clone()]);
    let lhs = rational_poly(g).compose(&inner);
    let refl = Poly::new(vec![-ur.recip(), -BigRational::one()]);
    let scale = -num_traits::pow(ur, e);
    let rhs = (&fq * &fq.compose(&refl)).scale(&scale);
    lhs == rhs
}

/// Compute `quad_shift(f, u)` and check the defining identity exactly.
pub fn verify_quad_identity(f: &EisensteinPoly, u: &BigInt) -> Result<bool> {
    let g = quad_shift(f, u)?;
    Ok(verify_quad_identity_with(f, u, &g))
}

/// Largest `v_K(s(pi_f) - pi_g)` over the embeddings `s` of `L_f`, from the
/// Newton polygon of `f(x + pi_g)` over `L_g`.
pub fn max_root_proximity(f: &EisensteinPoly, g: &EisensteinPoly, precision: u32) -> Result<ValQ> {
    let vals = translated_valuations(f, g, precision)?;
    let e = f.degree() as i64;
    let Some(v0) = vals[0].finite().cloned() else {
        return Ok(ValQ::Infinite);
    };
    let best = vals
        .iter()
        .enumerate()
        .skip(1)
        .filter_map(|(i, v)| v.finite().map(|v| (&v0 - v) / BigRational::from_integer(BigInt::from(i as i64))))
        .max()
        .expect("leading coefficient is finite");
    Ok(ValQ::from(best).div_int(e))
}

/// `v_L(f(pi_g))` computed in `O_{L_g}`.
pub fn eval_valuation(f: &EisensteinPoly, g: &EisensteinPoly, precision: u32) -> Result<ValQ> {
    Ok(translated_valuations(f, g, precision)?.swap_remove(0))
}
