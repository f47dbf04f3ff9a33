//! Exact p-adic valuation arithmetic on integers and rationals.
//!
//! Everything here is exact: integers are [`BigInt`], valuations are
//! [`ValQ`] fractions (or infinity). No floating point is involved.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// An extended rational valuation value: an exact fraction or `+inf`.
///
/// Variant order matters: the derived `Ord` places every finite value
/// below `Infinite`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ValQ {
    Finite(BigRational),
    Infinite,
}

impl ValQ {
    pub fn int(n: i64) -> Self {
        ValQ::Finite(BigRational::from_integer(BigInt::from(n)))
    }

    /// `num/den`, reduced to lowest terms. Panics on a zero denominator.
    pub fn frac(num: i64, den: i64) -> Self {
        ValQ::Finite(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn from_ratio(r: BigRational) -> Self {
        ValQ::Finite(r)
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, ValQ::Infinite)
    }

    pub fn finite(&self) -> Option<&BigRational> {
        match self {
            ValQ::Finite(r) => Some(r),
            ValQ::Infinite => None,
        }
    }

    /// The value as an integer, if it is a finite integer.
    pub fn to_integer(&self) -> Option<BigInt> {
        match self {
            ValQ::Finite(r) if r.is_integer() => Some(r.to_integer()),
            _ => None,
        }
    }

    /// Multiply a finite value by an integer; infinity stays infinite
    /// for positive factors.
    pub fn scale(&self, k: i64) -> ValQ {
        match self {
            ValQ::Finite(r) => ValQ::Finite(r * BigRational::from_integer(BigInt::from(k))),
            ValQ::Infinite => {
                assert!(k > 0, "cannot scale infinity by a non-positive factor");
                ValQ::Infinite
            }
        }
    }

    /// Divide a finite value by a positive integer.
    pub fn div_int(&self, k: i64) -> ValQ {
        assert!(k > 0);
        match self {
            ValQ::Finite(r) => ValQ::Finite(r / BigRational::from_integer(BigInt::from(k))),
            ValQ::Infinite => ValQ::Infinite,
        }
    }

    /// Parse `"inf"`, `"n"` or `"n/d"`.
    pub fn parse(s: &str) -> Option<ValQ> {
        let s = s.trim();
        if s == "inf" {
            return Some(ValQ::Infinite);
        }
        match s.split_once('/') {
            Some((n, d)) => {
                let n: BigInt = n.trim().parse().ok()?;
                let d: BigInt = d.trim().parse().ok()?;
                if d.is_zero() {
                    return None;
                }
                Some(ValQ::Finite(BigRational::new(n, d)))
            }
            None => Some(ValQ::Finite(BigRational::from_integer(s.parse().ok()?))),
        }
    }
}

impl From<i64> for ValQ {
    fn from(n: i64) -> Self {
        ValQ::int(n)
    }
}

impl From<BigRational> for ValQ {
    fn from(r: BigRational) -> Self {
        ValQ::Finite(r)
    }
}

impl Add for &ValQ {
    type Output = ValQ;

    fn add(self, rhs: &ValQ) -> ValQ {
        match (self, rhs) {
            (ValQ::Finite(a), ValQ::Finite(b)) => ValQ::Finite(a + b),
            _ => ValQ::Infinite,
        }
    }
}

impl Add for ValQ {
    type Output = ValQ;

    fn add(self, rhs: ValQ) -> ValQ {
        &self + &rhs
    }
}

impl Sub for &ValQ {
    type Output = ValQ;

    /// Only defined when the right-hand side is finite.
    fn sub(self, rhs: &ValQ) -> ValQ {
        match (self, rhs) {
            (ValQ::Finite(a), ValQ::Finite(b)) => ValQ::Finite(a - b),
            (ValQ::Infinite, ValQ::Finite(_)) => ValQ::Infinite,
            (_, ValQ::Infinite) => panic!("subtracting an infinite valuation"),
        }
    }
}

impl Sub for ValQ {
    type Output = ValQ;

    fn sub(self, rhs: ValQ) -> ValQ {
        &self - &rhs
    }
}

impl PartialEq<i64> for ValQ {
    fn eq(&self, other: &i64) -> bool {
        *self == ValQ::int(*other)
    }
}

impl PartialOrd<i64> for ValQ {
    fn partial_cmp(&self, other: &i64) -> Option<Ordering> {
        Some(self.cmp(&ValQ::int(*other)))
    }
}

impl fmt::Display for ValQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ValQ::Infinite => f.write_str("inf"),
            ValQ::Finite(r) if r.is_integer() => write!(f, "{}", r.numer()),
            ValQ::Finite(r) => write!(f, "{}/{}", r.numer(), r.denom()),
        }
    }
}

/// A rational prime.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Prime(u64);

impl Prime {
    /// Accepts any prime, including 2. Operations that need an odd prime
    /// check that themselves.
    pub fn new(p: u64) -> Result<Self> {
        if is_prime(p) {
            Ok(Prime(p))
        } else {
            Err(Error::NotPrime(p))
        }
    }

    pub fn get(self) -> u64 {
        self.0
    }

    pub fn big(self) -> BigInt {
        BigInt::from(self.0)
    }

    pub fn is_odd(self) -> bool {
        self.0 != 2
    }

    /// `p^k` as a big integer.
    pub fn pow(self, k: u32) -> BigInt {
        num_traits::pow(self.big(), k as usize)
    }
}

impl fmt::Display for Prime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n.is_multiple_of(2) {
        return false;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Exponent of `p` in a nonzero integer; `None` for zero.
pub fn vp_int(n: &BigInt, p: Prime) -> Option<u64> {
    if n.is_zero() {
        return None;
    }
    let pb = p.big();
    let mut m = n.abs();
    let mut k = 0;
    loop {
        let (q, r) = m.div_rem(&pb);
        if !r.is_zero() {
            return Some(k);
        }
        m = q;
        k += 1;
    }
}

/// The p-adic valuation of an integer; `vp(0) = inf`.
pub fn vp(n: &BigInt, p: Prime) -> ValQ {
    match vp_int(n, p) {
        Some(k) => ValQ::int(k as i64),
        None => ValQ::Infinite,
    }
}

/// The p-adic valuation of a rational number.
pub fn vp_rational(r: &BigRational, p: Prime) -> ValQ {
    match vp_int(r.numer(), p) {
        None => ValQ::Infinite,
        Some(a) => {
            let b = vp_int(r.denom(), p).expect("denominator is nonzero");
            ValQ::int(a as i64 - b as i64)
        }
    }
}

fn digit_sum(mut n: u64, p: u64) -> u64 {
    let mut s = 0;
    while n > 0 {
        s += n % p;
        n /= p;
    }
    s
}

/// Valuation of the binomial coefficient `C(j, i)` by Kummer's theorem:
/// the number of carries when adding `i` and `j - i` in base `p`.
pub fn binom_vp(j: u64, i: u64, p: Prime) -> u64 {
    assert!(i <= j, "binom_vp requires i <= j");
    let p = p.get();
    (digit_sum(i, p) + digit_sum(j - i, p) - digit_sum(j, p)) / (p - 1)
}

/// `n mod m` in `[0, m)`.
pub fn modulo(n: &BigInt, m: &BigInt) -> BigInt {
    n.mod_floor(m)
}

/// The bracket `<n mod p^k>`: the unique `r` in `[1, p^k - 1]` congruent
/// to `n`. Undefined when `n ≡ 0 (mod p^k)`.
pub fn canon_residue(n: &BigInt, p: Prime, k: u32) -> Result<BigInt> {
    let r = modulo(n, &p.pow(k));
    if r.is_zero() {
        return Err(Error::ZeroResidue);
    }
    Ok(r)
}

/// Inverse of the unit `u` modulo `p^k`, as a bracket representative.
pub fn inverse_mod(u: &BigInt, p: Prime, k: u32) -> Result<BigInt> {
    let m = p.pow(k);
    let a = modulo(u, &m);
    let ext = a.extended_gcd(&m);
    if !ext.gcd.is_one() {
        return Err(Error::NotUnit(u.clone()));
    }
    canon_residue(&ext.x, p, k)
}

/// Multiplicative order of `a` modulo the prime `p`. `a` must be a unit.
pub fn multiplicative_order(a: u64, p: Prime) -> u64 {
    let p = p.get();
    let a = a % p;
    assert!(a != 0, "order of zero is undefined");
    let mut x = a;
    let mut k = 1;
    while x != 1 {
        x = ((x as u128 * a as u128) % p as u128) as u64;
        k += 1;
    }
    k
}

/// Integer `n / p^{vp(n)}`, the unit part of a nonzero integer.
pub fn unit_part(n: &BigInt, p: Prime) -> BigInt {
    let k = vp_int(n, p).expect("unit part of zero");
    n / p.pow(k as u32)
}

/// Small helper: a `u64` residue of a big integer modulo `p`.
pub fn residue_mod_p(n: &BigInt, p: Prime) -> u64 {
    modulo(n, &p.big()).to_u64().expect("residue fits in u64")
}
