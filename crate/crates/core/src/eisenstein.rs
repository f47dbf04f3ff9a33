//! Eisenstein polynomials over `Q_p`, the Krasner ultrametric on them, and
//! the degree-`p` equivalence machinery: type classification, root
//! transforms, sufficient criteria and the canonical-form classifier.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::padic::{canon_residue, inverse_mod, modulo, residue_mod_p, vp, vp_int, Prime, ValQ};
use crate::poly::Poly;
use crate::ramification;

/// A monic Eisenstein polynomial `X^e + a_{e-1} X^{e-1} + ... + a_0`.
///
/// Only the non-leading coefficients are stored, low degree first.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EisensteinPoly {
    p: Prime,
    coeffs: Vec<BigInt>,
}

impl EisensteinPoly {
    /// Validate `a_0..a_{e-1}` (leading 1 implicit) as an Eisenstein
    /// polynomial at `p`.
    pub fn new(p: Prime, coeffs: Vec<BigInt>) -> Result<Self> {
        if coeffs.len() < 2 {
            return Err(Error::BadDegree(format!(
                "need degree >= 2, got {}",
                coeffs.len()
            )));
        }
        if vp_int(&coeffs[0], p) != Some(1) {
            return Err(Error::NotEisenstein(format!(
                "v_{p}(a_0) = {} but must be 1",
                vp(&coeffs[0], p)
            )));
        }
        if let Some((i, c)) = coeffs
            .iter()
            .enumerate()
            .skip(1)
            .find(|(_, c)| vp(c, p) < 1)
        {
            return Err(Error::NotEisenstein(format!(
                "v_{p}(a_{i}) = {} but must be >= 1",
                vp(c, p)
            )));
        }
        Ok(EisensteinPoly { p, coeffs })
    }

    pub fn from_i64(p: u64, coeffs: &[i64]) -> Result<Self> {
        EisensteinPoly::new(
            Prime::new(p)?,
            coeffs.iter().map(|&c| BigInt::from(c)).collect(),
        )
    }

    /// Build from a full coefficient list `a_0..a_e` whose last entry must
    /// be 1.
    pub fn from_monic(p: Prime, mut full: Vec<BigInt>) -> Result<Self> {
        match full.pop() {
            Some(lead) if lead.is_one() => EisensteinPoly::new(p, full),
            Some(lead) => Err(Error::NotEisenstein(format!(
                "leading coefficient {lead} is not 1"
            ))),
            None => Err(Error::BadDegree("empty coefficient list".into())),
        }
    }

    pub fn prime(&self) -> Prime {
        self.p
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len()
    }

    /// Non-leading coefficients `a_0..a_{e-1}`.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// `a_i` for `0 <= i <= e` (with `a_e = 1`).
    pub fn coeff(&self, i: usize) -> BigInt {
        match i.cmp(&self.degree()) {
            std::cmp::Ordering::Less => self.coeffs[i].clone(),
            std::cmp::Ordering::Equal => BigInt::one(),
            std::cmp::Ordering::Greater => BigInt::zero(),
        }
    }

    /// Full coefficient list including the leading 1.
    pub fn to_poly(&self) -> Poly<BigInt> {
        let mut c = self.coeffs.clone();
        c.push(BigInt::one());
        Poly::new(c)
    }

    pub fn to_text(&self) -> String {
        self.to_poly().to_text("x")
    }

    fn same_space(&self, other: &Self) -> Result<()> {
        if self.p != other.p || self.degree() != other.degree() {
            return Err(Error::Mismatch);
        }
        Ok(())
    }

    /// Copy with every coefficient reduced into `[0, p^k)`. Valid only for
    /// `k >= 2` (the constant term keeps valuation 1).
    pub fn reduce_mod(&self, k: u32) -> Self {
        assert!(k >= 2);
        let m = self.p.pow(k);
        EisensteinPoly {
            p: self.p,
            coeffs: self.coeffs.iter().map(|c| modulo(c, &m)).collect(),
        }
    }

    /// Degree-`p` classifier scope: `e = p` and `p` odd.
    fn require_degree_p(&self) -> Result<()> {
        if !self.p.is_odd() {
            return Err(Error::EvenPrime);
        }
        if self.degree() as u64 != self.p.get() {
            return Err(Error::DegreeNotP);
        }
        Ok(())
    }
}

impl fmt::Display for EisensteinPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// Krasner distance `min_i { v_p(a_i - b_i) + i/e }`; infinite iff `f = g`.
pub fn distance(f: &EisensteinPoly, g: &EisensteinPoly) -> Result<ValQ> {
    f.same_space(g)?;
    let e = f.degree() as i64;
    Ok(f.coeffs
        .iter()
        .zip(&g.coeffs)
        .enumerate()
        .map(|(i, (a, b))| vp(&(a - b), f.p) + ValQ::frac(i as i64, e))
        .min()
        .expect("degree >= 2"))
}

/// Type `<lambda>` or `<0>` of a degree-`p` Eisenstein polynomial.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TypeTag {
    Lambda(u64),
    Zero,
}

impl fmt::Display for TypeTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TypeTag::Lambda(l) => write!(f, "<{l}>"),
            TypeTag::Zero => f.write_str("<0>"),
        }
    }
}

/// Smallest `1 <= i <= p-1` with `v_p(a_i) = 1`, or `Zero` when every
/// such coefficient has valuation at least 2.
pub fn classify_type(f: &EisensteinPoly) -> Result<TypeTag> {
    f.require_degree_p()?;
    Ok((1..f.degree())
        .find(|&i| vp_int(&f.coeffs[i], f.p) == Some(1))
        .map_or(TypeTag::Zero, |i| TypeTag::Lambda(i as u64)))
}

/// Different exponent and largest upper break `(d_f, u_f)` for a type,
/// in the shifted numbering.
pub fn df_uf_for_type(p: Prime, t: TypeTag) -> (ValQ, ValQ) {
    let p = p.get() as i64;
    match t {
        TypeTag::Lambda(l) => {
            let l = l as i64;
            (
                ValQ::int(1) + ValQ::frac(l - 1, p),
                ValQ::int(1) + ValQ::frac(l, p - 1),
            )
        }
        TypeTag::Zero => (
            ValQ::int(1) + ValQ::frac(p - 1, p),
            ValQ::int(2) + ValQ::frac(1, p - 1),
        ),
    }
}

/// `(d_f, u_f)` of a degree-`p` polynomial from its type.
pub fn df_uf(f: &EisensteinPoly) -> Result<(ValQ, ValQ)> {
    Ok(df_uf_for_type(f.p, classify_type(f)?))
}

/// `u_f` for any degree: closed form when `e = p` is odd, otherwise read
/// off the Newton-polygon ramification profile.
pub fn upper_bound_uf(f: &EisensteinPoly) -> Result<ValQ> {
    if f.require_degree_p().is_ok() {
        Ok(df_uf(f)?.1)
    } else {
        Ok(ramification::profile(f)?.u_shifted)
    }
}

fn require_unit(u: &BigInt, p: Prime) -> Result<()> {
    if u.is_zero() || vp_int(u, p) != Some(0) {
        return Err(Error::NotUnit(u.clone()));
    }
    Ok(())
}

/// Minimal polynomial of `u * pi` for a root `pi` of `f`: the coefficient
/// of `X^{e-i}` is multiplied by `u^i`.
pub fn scale_root(f: &EisensteinPoly, u: &BigInt) -> Result<EisensteinPoly> {
    require_unit(u, f.p)?;
    let e = f.degree();
    let coeffs = f
        .coeffs
        .iter()
        .enumerate()
        .map(|(k, a)| a * num_traits::pow(u.clone(), e - k))
        .collect();
    EisensteinPoly::new(f.p, coeffs)
}

/// Minimal polynomial `g` of `pi + u*pi^2` for a root `pi` of `f`.
///
/// `g` is the unique monic polynomial with
/// `g(u x^2 + x) = -u^p f(x) f(-x - 1/u)`. The right-hand side is
/// computed over the integers as `-f(x) * sum_j a_j (-1)^j u^{p-j} (ux+1)^j`,
/// then `g` is peeled off from the top degree down.
pub fn quad_shift(f: &EisensteinPoly, u: &BigInt) -> Result<EisensteinPoly> {
    f.require_degree_p()?;
    require_unit(u, f.p)?;
    let e = f.degree();
    let fx = f.to_poly();
    let lin = Poly::new(vec![BigInt::one(), u.clone()]);
    let mut reflected = Poly::zero();
    let mut lin_pow = Poly::constant(BigInt::one());
    for j in 0..=e {
        let mut c = f.coeff(j) * num_traits::pow(u.clone(), e - j);
        if j % 2 == 1 {
            c = -c;
        }
        reflected = &reflected + &lin_pow.scale(&c);
        lin_pow = &lin_pow * &lin;
    }
    let mut rest = -(&(&fx * &reflected));

    let y = Poly::new(vec![BigInt::zero(), BigInt::one(), u.clone()]);
    let y_pows: Vec<Poly<BigInt>> = (0..=e).map(|k| y.pow(k)).collect();
    let mut g = vec![BigInt::zero(); e + 1];
    for k in (0..=e).rev() {
        let top = rest.coeff(2 * k);
        let uk = num_traits::pow(u.clone(), k);
        if !(&top % &uk).is_zero() {
            return Err(Error::Inconsistent(format!(
                "quad_shift: coefficient {top} of x^{} not divisible by u^{k}",
                2 * k
            )));
        }
        g[k] = top / uk;
        rest = &rest - &y_pows[k].scale(&g[k]);
    }
    if !rest.is_zero() {
        return Err(Error::Inconsistent(
            "quad_shift: residual after peeling is nonzero".into(),
        ));
    }
    EisensteinPoly::from_monic(f.p, g)
}

/// Reduce a type `<0>` polynomial with `v_p(a_1) = 2` to
/// `X^p + a_0 (1 - u^p a_0)`, `u = -a_1 / (p a_0)`.
///
/// `u` is only needed modulo `p^3`; the returned constant term is the
/// bracket representative modulo `p^3`.
pub fn type0_reduce(f: &EisensteinPoly) -> Result<EisensteinPoly> {
    let guard = || Error::Precondition("requires type <0> with v_p(a_1) = 2".into());
    if classify_type(f)? != TypeTag::Zero || vp_int(&f.coeffs[1], f.p) != Some(2) {
        return Err(guard());
    }
    let p = f.p;
    let n = p.get() as usize;
    let a0 = &f.coeffs[0];
    let u0 = a0 / p.big();
    let u1 = &f.coeffs[1] / p.pow(2);
    let u = modulo(&(-(u1 * inverse_mod(&u0, p, 3)?)), &p.pow(3));
    let c = a0 * (BigInt::one() - num_traits::pow(u, n) * a0);
    let mut coeffs = vec![BigInt::zero(); n];
    coeffs[0] = canon_residue(&c, p, 3)?;
    EisensteinPoly::new(p, coeffs)
}

/// Row of the table of representatives.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    /// `X^p + a p X^lambda + p`
    F1,
    /// `X^p - p X^{p-1} + (1 + a p) p`
    F2,
    /// `X^p + (1 + a p) p`
    F3,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::F1 => "F1",
            Family::F2 => "F2",
            Family::F3 => "F3",
        })
    }
}

/// A canonical representative of an isomorphism class of totally
/// ramified degree-`p` extensions of `Q_p`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CanonicalRep {
    pub family: Family,
    pub lambda: Option<u64>,
    pub a: u64,
    pub poly: EisensteinPoly,
    pub d_f: ValQ,
    pub u_f: ValQ,
}

impl CanonicalRep {
    /// `X^p + a p X^lambda + p`, `1 <= a, lambda <= p-1`,
    /// `(lambda, a) != (p-1, p-1)`.
    pub fn f1(p: Prime, lambda: u64, a: u64) -> Result<Self> {
        let q = p.get();
        if !p.is_odd() {
            return Err(Error::EvenPrime);
        }
        if !(1..q).contains(&lambda) || !(1..q).contains(&a) || (lambda, a) == (q - 1, q - 1) {
            return Err(Error::Precondition(format!(
                "F1 parameters (lambda, a) = ({lambda}, {a}) out of range for p = {q}"
            )));
        }
        let mut coeffs = vec![BigInt::zero(); q as usize];
        coeffs[0] = p.big();
        coeffs[lambda as usize] = BigInt::from(a) * p.big();
        let (d_f, u_f) = df_uf_for_type(p, TypeTag::Lambda(lambda));
        Ok(CanonicalRep {
            family: Family::F1,
            lambda: Some(lambda),
            a,
            poly: EisensteinPoly::new(p, coeffs)?,
            d_f,
            u_f,
        })
    }

    /// `X^p - p X^{p-1} + (1 + a p) p`, `0 <= a <= p-1`.
    pub fn f2(p: Prime, a: u64) -> Result<Self> {
        let q = p.get();
        Self::check_a(p, a)?;
        let mut coeffs = vec![BigInt::zero(); q as usize];
        coeffs[0] = (BigInt::one() + BigInt::from(a) * p.big()) * p.big();
        coeffs[q as usize - 1] = -p.big();
        let (d_f, u_f) = df_uf_for_type(p, TypeTag::Lambda(q - 1));
        Ok(CanonicalRep {
            family: Family::F2,
            lambda: None,
            a,
            poly: EisensteinPoly::new(p, coeffs)?,
            d_f,
            u_f,
        })
    }

    /// `X^p + (1 + a p) p`, `0 <= a <= p-1`.
    pub fn f3(p: Prime, a: u64) -> Result<Self> {
        Self::check_a(p, a)?;
        let mut coeffs = vec![BigInt::zero(); p.get() as usize];
        coeffs[0] = (BigInt::one() + BigInt::from(a) * p.big()) * p.big();
        let (d_f, u_f) = df_uf_for_type(p, TypeTag::Zero);
        Ok(CanonicalRep {
            family: Family::F3,
            lambda: None,
            a,
            poly: EisensteinPoly::new(p, coeffs)?,
            d_f,
            u_f,
        })
    }

    fn check_a(p: Prime, a: u64) -> Result<()> {
        if !p.is_odd() {
            return Err(Error::EvenPrime);
        }
        if a >= p.get() {
            return Err(Error::Precondition(format!(
                "parameter a = {a} out of range for p = {p}"
            )));
        }
        Ok(())
    }

    /// Parameter `a` from a constant term `<c mod p^3> = (1 + a p) p`.
    fn a_from_constant(p: Prime, bracket: &BigInt) -> Result<u64> {
        let pb = p.big();
        let t = bracket / &pb;
        if !(bracket % &pb).is_zero() || residue_mod_p(&t, p) != 1 {
            return Err(Error::Inconsistent(format!(
                "constant {bracket} is not of the form (1 + a p) p"
            )));
        }
        let a = (t - BigInt::one()) / pb;
        Ok(u64::try_from(a).expect("a < p"))
    }
}

/// Reduce a degree-`p` Eisenstein polynomial to its canonical
/// representative.
///
/// With `u_i` the unit part of `a_i` and `u = <u_0^{-1} mod p>`:
///
/// * type `<lambda>`, with `u'_lambda = u^{p-lambda} u_lambda`:
///   `F1(lambda, <u'_lambda mod p>)`, unless `lambda = p-1` and
///   `u'_lambda ≡ -1`, which gives `F2` with constant `<u^p a_0 mod p^3>`;
/// * type `<0>`, `v_p(a_1) != 2`: `F3` with constant `<u^p a_0 mod p^3>`;
/// * type `<0>`, `v_p(a_1) = 2`: first pass to
///   `a''_0 = a_0 (1 + (u_0^{-1} u_1)^p a_0)`, then scale the root by `u`
///   so the constant lands in `(1 + a p) p`.
pub fn canonical_form(f: &EisensteinPoly) -> Result<CanonicalRep> {
    canonical_form_impl(f, false)
}

/// `canonical_form` with the `v_p(a_1) = 2` correction in the `<0>` branch
/// dropped. Exists so that cross-checking harnesses can prove they notice.
#[doc(hidden)]
pub fn canonical_form_faulty(f: &EisensteinPoly) -> Result<CanonicalRep> {
    canonical_form_impl(f, true)
}

fn canonical_form_impl(f: &EisensteinPoly, fault: bool) -> Result<CanonicalRep> {
    let t = classify_type(f)?;
    let p = f.p;
    let n = p.get() as usize;
    let f = f.reduce_mod(3);
    let a0 = &f.coeffs[0];
    let u0 = a0 / p.big();
    let u = inverse_mod(&u0, p, 1)?;
    let u_pow_p = num_traits::pow(u.clone(), n);

    match t {
        TypeTag::Lambda(l) => {
            let u_l = &f.coeffs[l as usize] / p.big();
            let u_l_prime = num_traits::pow(u, n - l as usize) * u_l;
            let r = residue_mod_p(&u_l_prime, p);
            if l != p.get() - 1 || r != p.get() - 1 {
                CanonicalRep::f1(p, l, r)
            } else {
                let c = canon_residue(&(u_pow_p * a0), p, 3)?;
                CanonicalRep::f2(p, CanonicalRep::a_from_constant(p, &c)?)
            }
        }
        TypeTag::Zero => {
            let c = if !fault && vp_int(&f.coeffs[1], p) == Some(2) {
                let u1 = &f.coeffs[1] / p.pow(2);
                let w = inverse_mod(&u0, p, 3)? * u1;
                let a0_second = a0 * (BigInt::one() + num_traits::pow(w, n) * a0);
                canon_residue(&(u_pow_p * a0_second), p, 3)?
            } else {
                canon_residue(&(u_pow_p * a0), p, 3)?
            };
            CanonicalRep::f3(p, CanonicalRep::a_from_constant(p, &c)?)
        }
    }
}

/// Krasner certificate: `distance(f, g) > u_f` proves `f ~ g`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub distance: ValQ,
    pub u_f: ValQ,
    pub holds: bool,
}

pub fn krasner_certificate(f: &EisensteinPoly, g: &EisensteinPoly) -> Result<Certificate> {
    let distance = distance(f, g)?;
    let u_f = upper_bound_uf(f)?;
    let holds = distance > u_f;
    Ok(Certificate { distance, u_f, holds })
}

/// `true` certifies `f ~ g`; `false` only means there is no certificate.
pub fn sufficient_equiv(f: &EisensteinPoly, g: &EisensteinPoly) -> Result<bool> {
    Ok(krasner_certificate(f, g)?.holds)
}

fn diff_at_least(f: &EisensteinPoly, g: &EisensteinPoly, idx: &[usize], k: i64) -> bool {
    idx.iter()
        .all(|&i| vp(&(&f.coeffs[i] - &g.coeffs[i]), f.p) >= k)
}

/// Coefficient-congruence criteria for degree `p`:
/// both `<lambda>` with `lambda < p-1` and `a_0, a_lambda` agreeing mod `p^2`;
/// both `<p-1>` with `a_0, a_{p-1}` agreeing mod `p^3`;
/// both `<0>` with `a_0, a_1` agreeing mod `p^3`.
pub fn prop111_equiv(f: &EisensteinPoly, g: &EisensteinPoly) -> Result<bool> {
    f.same_space(g)?;
    let (tf, tg) = (classify_type(f)?, classify_type(g)?);
    if tf != tg {
        return Ok(false);
    }
    let last = f.p.get() - 1;
    Ok(match tf {
        TypeTag::Lambda(l) if l < last => diff_at_least(f, g, &[0, l as usize], 2),
        TypeTag::Lambda(l) => diff_at_least(f, g, &[0, l as usize], 3),
        TypeTag::Zero => diff_at_least(f, g, &[0, 1], 3),
    })
}

/// Certificate checker for the pair `x^p + s p^m x^{p-1} + t p` and
/// `x^p + s p^m x^{p-1} + t' p`: true iff the shapes match, `t ≡ t' ≡ 1`,
/// `v_p(t - t') = u_f - 1` and `s ≢ -1 (mod p)`.
pub fn prop117_equiv(f: &EisensteinPoly, g: &EisensteinPoly) -> Result<bool> {
    f.same_space(g)?;
    f.require_degree_p()?;
    let p = f.p;
    let last = f.degree() - 1;
    let middle_zero = |h: &EisensteinPoly| h.coeffs[1..last].iter().all(Zero::is_zero);
    if !middle_zero(f) || !middle_zero(g) || f.coeffs[last] != g.coeffs[last] {
        return Ok(false);
    }
    let top = &f.coeffs[last];
    if top.is_zero() {
        return Ok(false);
    }
    let s = crate::padic::unit_part(top, p);
    let t = &f.coeffs[0] / p.big();
    let t2 = &g.coeffs[0] / p.big();
    if residue_mod_p(&t, p) != 1 || residue_mod_p(&t2, p) != 1 {
        return Ok(false);
    }
    if residue_mod_p(&s, p) == p.get() - 1 {
        return Ok(false);
    }
    let u_f = df_uf(f)?.1;
    Ok(vp(&(t - t2), p) == u_f - ValQ::int(1))
}

/// Complete decision for degree `p` over `Q_p`: equal canonical forms.
pub fn equivalent(f: &EisensteinPoly, g: &EisensteinPoly) -> Result<bool> {
    f.same_space(g)?;
    Ok(canonical_form(f)? == canonical_form(g)?)
}
