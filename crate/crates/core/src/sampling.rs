//! Seeded random Eisenstein polynomials for cross-validation runs.

use num_bigint::BigInt;
use rand::Rng;

use crate::eisenstein::EisensteinPoly;
use crate::padic::Prime;

/// `X^e + sum a_i X^i` with every `a_i = p k_i`, `k_i` uniform in
/// `[1, p^max_exp]` and `p ∤ k_0`.
pub fn random_eisenstein<R: Rng + ?Sized>(p: Prime, e: usize, max_exp: u32, rng: &mut R) -> EisensteinPoly {
    let q = p.get();
    let hi = q.checked_pow(max_exp).expect("sampling range fits in u64");
    let coeffs = (0..e)
        .map(|i| loop {
            let k = rng.gen_range(1..=hi);
            if i > 0 || k % q != 0 {
                break BigInt::from(k) * p.big();
            }
        })
        .collect();
    EisensteinPoly::new(p, coeffs).expect("constructed Eisenstein")
}

/// A p-adic unit in `[-bound, bound]`.
pub fn random_unit<R: Rng + ?Sized>(p: Prime, bound: i64, rng: &mut R) -> BigInt {
    loop {
        let u = rng.gen_range(-bound..=bound);
        if u.rem_euclid(p.get() as i64) != 0 {
            return BigInt::from(u);
        }
    }
}
