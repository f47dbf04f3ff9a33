//! Ramification breaks of `L_f = Q_p[X]/(f)` from the Newton polygon of
//! `f(x + pi_f)`.
//!
//! Two numberings are in play. The break lists ([`lower_breaks`],
//! [`upper_breaks`]) use the classical numbering, normalized by `v_L`
//! (`v_L(pi_f) = 1`). The profile additionally reports the shifted
//! numbering normalized by `v_K`, where lower sets are
//! `H_(t) = { s : v_K(s(pi) - pi) >= t }` and `phi(i) = int_0^i #H_(t) dt`:
//!
//! ```text
//! u_shifted = u_classical + 1
//! i_shifted = (i_classical + 1) / e
//! ```

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::eisenstein::EisensteinPoly;
use crate::error::{Error, Result};
use crate::padic::{binom_vp, vp_int, ValQ};

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// `v_L` of the coefficients `b_1..b_e` of `f(x + pi_f)`.
///
/// `b_i = sum_{j >= i} a_j C(j, i) pi^{j-i}` with `j - i < e`, so the terms
/// have pairwise distinct valuations modulo `e` and the minimum is exact.
pub fn shifted_coeff_valuations(f: &EisensteinPoly) -> Vec<ValQ> {
    let e = f.degree() as u64;
    let p = f.prime();
    (1..=e)
        .map(|i| {
            (i..=e)
                .filter_map(|j| {
                    let vj = vp_int(&f.coeff(j as usize), p)?;
                    Some((e * vj + e * binom_vp(j, i, p) + (j - i)) as i64)
                })
                .min()
                .map_or(ValQ::Infinite, ValQ::int)
        })
        .collect()
}

/// Lower convex hull of a finite point set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NewtonPolygon {
    pub points: Vec<(u64, ValQ)>,
    pub vertices: Vec<(u64, BigRational)>,
    /// One per edge, strictly increasing.
    pub slopes: Vec<BigRational>,
}

impl NewtonPolygon {
    /// `(x_start, x_end, slope)` for every edge.
    pub fn edges(&self) -> impl Iterator<Item = (u64, u64, &BigRational)> {
        self.vertices
            .windows(2)
            .zip(&self.slopes)
            .map(|(w, s)| (w[0].0, w[1].0, s))
    }
}

/// Monotone-chain lower hull. Points at infinity are skipped; collinear
/// interior points are not vertices.
pub fn lower_hull(points: &[(u64, ValQ)]) -> NewtonPolygon {
    assert!(
        points.windows(2).all(|w| w[0].0 < w[1].0),
        "x-coordinates must be strictly increasing"
    );
    let mut hull: Vec<(u64, BigRational)> = Vec::new();
    for (x, y) in points {
        let Some(y) = y.finite() else { continue };
        while hull.len() >= 2 {
            let (x1, y1) = &hull[hull.len() - 2];
            let (x2, y2) = &hull[hull.len() - 1];
            // drop the middle point unless it lies strictly below the chord
            let cross = (y2 - y1) * rat((x - x1) as i64) - (y - y1) * rat((x2 - x1) as i64);
            if cross.is_negative() {
                break;
            }
            hull.pop();
        }
        hull.push((*x, y.clone()));
    }
    let slopes = hull
        .windows(2)
        .map(|w| (&w[1].1 - &w[0].1) / rat((w[1].0 - w[0].0) as i64))
        .collect();
    NewtonPolygon {
        points: points.to_vec(),
        vertices: hull,
        slopes,
    }
}

/// A classical lower break together with the size of its ramification set.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LowerBreak {
    pub at: ValQ,
    pub card: u64,
}

impl LowerBreak {
    pub fn new(at: ValQ, card: u64) -> Self {
        LowerBreak { at, card }
    }
}

/// Classical lower breaks of `L_f`, increasing.
///
/// An edge of slope `s` ending at abscissa `x` carries the embeddings
/// with `v_L(s(pi) - pi) = -s`; its break is `-s - 1` and the ramification
/// set at that break has `x` elements (the identity included).
pub fn lower_breaks(f: &EisensteinPoly) -> Vec<LowerBreak> {
    lower_breaks_from_valuations(&shifted_coeff_valuations(f))
}

/// Same as [`lower_breaks`], from precomputed `v_L(b_1), ..., v_L(b_e)`.
pub fn lower_breaks_from_valuations(vals: &[ValQ]) -> Vec<LowerBreak> {
    let points: Vec<(u64, ValQ)> = vals
        .iter()
        .enumerate()
        .map(|(k, v)| (k as u64 + 1, v.clone()))
        .collect();
    let np = lower_hull(&points);
    let mut out: Vec<LowerBreak> = np
        .edges()
        .map(|(_, x_end, s)| LowerBreak::new(ValQ::from(-s - BigRational::one()), x_end))
        .collect();
    out.reverse();
    out
}

/// Classical upper breaks via the Herbrand recurrence
/// `u_1 = i_1`, `u_s = u_{s-1} + (i_s - i_{s-1}) #H_{i_s} / #H_{i_1}`.
pub fn upper_breaks(lower: &[LowerBreak]) -> Result<Vec<ValQ>> {
    let first = lower
        .first()
        .ok_or_else(|| Error::MalformedBreaks("empty break list".into()))?;
    if first.at.is_infinite() || first.card == 0 {
        return Err(Error::MalformedBreaks("breaks must be finite with nonzero cardinality".into()));
    }
    for w in lower.windows(2) {
        if w[1].at <= w[0].at || w[1].at.is_infinite() {
            return Err(Error::MalformedBreaks("breaks must strictly increase".into()));
        }
        if w[1].card >= w[0].card {
            return Err(Error::MalformedBreaks("cardinalities must strictly decrease".into()));
        }
    }
    let mut out = vec![first.at.clone()];
    for w in lower.windows(2) {
        let step = (&w[1].at - &w[0].at).scale(w[1].card as i64).div_int(first.card as i64);
        let next = out.last().expect("nonempty") + &step;
        out.push(next);
    }
    Ok(out)
}

/// Ramification data of `L_f / Q_p` in both numberings.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RamificationProfile {
    pub e: u64,
    pub lower_breaks: Vec<LowerBreak>,
    pub upper_breaks: Vec<ValQ>,
    /// `v_K` of the different.
    pub d_f: ValQ,
    pub u_shifted: ValQ,
    pub i_shifted: ValQ,
}

impl RamificationProfile {
    /// Breakpoints of `t -> #H_(t)` in the shifted numbering:
    /// `#H_(t) = card_k` on `(t_{k-1}, t_k]`, and 1 beyond the last.
    fn steps(&self) -> Vec<(BigRational, u64)> {
        let e = rat(self.e as i64);
        self.lower_breaks
            .iter()
            .map(|b| {
                let i = b.at.finite().expect("finite break");
                ((i + BigRational::one()) / &e, b.card)
            })
            .collect()
    }

    /// `phi(i) = int_0^i #H_(t) dt`, shifted numbering.
    pub fn transition(&self, i: &ValQ) -> ValQ {
        let Some(i) = i.finite() else { return ValQ::Infinite };
        assert!(!i.is_negative(), "transition is defined on [0, inf)");
        let mut acc = BigRational::zero();
        let mut prev = BigRational::zero();
        for (t, card) in self.steps() {
            if *i <= t {
                return ValQ::from(acc + (i - &prev) * rat(card as i64));
            }
            acc += (&t - &prev) * rat(card as i64);
            prev = t;
        }
        ValQ::from(acc + (i - prev))
    }

    /// Inverse of [`transition`](Self::transition).
    pub fn transition_inverse(&self, u: &ValQ) -> ValQ {
        let Some(u) = u.finite() else { return ValQ::Infinite };
        assert!(!u.is_negative(), "inverse transition is defined on [0, inf)");
        let mut acc = BigRational::zero();
        let mut prev = BigRational::zero();
        for (t, card) in self.steps() {
            let c = rat(card as i64);
            let next = &acc + (&t - &prev) * &c;
            if *u <= next {
                return ValQ::from(&prev + (u - &acc) / c);
            }
            acc = next;
            prev = t;
        }
        ValQ::from(prev + (u - acc))
    }
}

/// Full profile with internal consistency checks.
///
/// `d_f = v_L(f'(pi)) / e` is taken from `b_1 = f'(pi)` independently of
/// the breaks, and `u_shifted = i_shifted + d_f` must hold. When `e` is
/// prime there must be exactly one break, and then
/// `u = e * i = e/(e-1) * d`.
pub fn profile(f: &EisensteinPoly) -> Result<RamificationProfile> {
    let e = f.degree() as u64;
    let vals = shifted_coeff_valuations(f);
    let lower = lower_breaks_from_valuations(&vals);
    let upper = upper_breaks(&lower)?;
    let d_f = vals[0].div_int(e as i64);
    let i_max = &lower.last().expect("at least one break").at;
    let u_max = upper.last().expect("at least one break");
    let u_shifted = u_max + &ValQ::int(1);
    let i_shifted = (i_max + &ValQ::int(1)).div_int(e as i64);

    if u_shifted != &i_shifted + &d_f {
        return Err(Error::Inconsistent(format!(
            "u = {u_shifted} but i + d = {i_shifted} + {d_f}"
        )));
    }
    if crate::padic::Prime::new(e).is_ok() {
        if lower.len() != 1 {
            return Err(Error::Inconsistent(format!(
                "prime degree {e} with {} breaks",
                lower.len()
            )));
        }
        let by_i = i_shifted.scale(e as i64);
        let by_d = d_f.scale(e as i64).div_int(e as i64 - 1);
        if u_shifted != by_i || u_shifted != by_d {
            return Err(Error::Inconsistent(format!(
                "single-break identities fail: u = {u_shifted}, e i = {by_i}, e/(e-1) d = {by_d}"
            )));
        }
    }
    Ok(RamificationProfile {
        e,
        lower_breaks: lower,
        upper_breaks: upper,
        d_f,
        u_shifted,
        i_shifted,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ep(p: u64, c: &[i64]) -> EisensteinPoly {
        EisensteinPoly::from_i64(p, c).unwrap()
    }

    fn pts(v: &[(u64, i64)]) -> Vec<(u64, ValQ)> {
        v.iter().map(|&(x, y)| (x, ValQ::int(y))).collect()
    }

    #[test]
    fn shifted_valuations_x3_plus_3() {
        let v = shifted_coeff_valuations(&ep(3, &[3, 0, 0]));
        assert_eq!(v, vec![ValQ::int(5), ValQ::int(4), ValQ::int(0)]);
        // x^3 + 3x + 3: b_1 = 3 + 3 pi^2, b_2 = 3 pi
        let v = shifted_coeff_valuations(&ep(3, &[3, 3, 0]));
        assert_eq!(v, vec![ValQ::int(3), ValQ::int(4), ValQ::int(0)]);
    }

    #[test]
    fn hull_examples() {
        let np = lower_hull(&pts(&[(1, 5), (2, 4), (3, 0)]));
        assert_eq!(np.vertices.iter().map(|v| v.0).collect::<Vec<_>>(), vec![1, 3]);
        assert_eq!(np.slopes, vec![BigRational::new((-5).into(), 2.into())]);

        let np = lower_hull(&pts(&[(1, 3), (2, 2), (3, 1), (4, 0)]));
        assert_eq!(np.vertices.len(), 2, "collinear points are not vertices");

        let np = lower_hull(&pts(&[(1, 2), (4, 0)]));
        assert_eq!(np.vertices.len(), 2);
        assert_eq!(np.slopes.len(), 1);

        let np = lower_hull(&pts(&[(1, 10), (2, 4), (3, 1), (4, 0)]));
        assert_eq!(np.vertices.iter().map(|v| v.0).collect::<Vec<_>>(), vec![1, 2, 3, 4]);
        assert!(np.slopes.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn breaks_x3_plus_3() {
        let f = ep(3, &[3, 0, 0]);
        let lower = lower_breaks(&f);
        assert_eq!(lower, vec![LowerBreak::new(ValQ::frac(3, 2), 3)]);
        assert_eq!(upper_breaks(&lower).unwrap(), vec![ValQ::frac(3, 2)]);
        let prof = profile(&f).unwrap();
        assert_eq!(prof.u_shifted, ValQ::frac(5, 2));
        assert_eq!(prof.i_shifted, ValQ::frac(5, 6));
        assert_eq!(prof.d_f, ValQ::frac(5, 3));
    }

    #[test]
    fn breaks_x3_plus_3x_plus_3() {
        let f = ep(3, &[3, 3, 0]);
        assert_eq!(lower_breaks(&f), vec![LowerBreak::new(ValQ::frac(1, 2), 3)]);
        let prof = profile(&f).unwrap();
        assert_eq!(prof.u_shifted, ValQ::frac(3, 2));
        assert_eq!(prof.d_f, ValQ::int(1));
    }

    #[test]
    fn breaks_degree5() {
        let prof = profile(&ep(5, &[5, 0, 10, 0, 0])).unwrap();
        assert_eq!(prof.u_shifted, ValQ::frac(3, 2));
        assert_eq!(prof.d_f, ValQ::frac(6, 5));
    }

    #[test]
    fn upper_breaks_recurrence() {
        let lower = vec![LowerBreak::new(ValQ::int(1), 4), LowerBreak::new(ValQ::int(3), 2)];
        assert_eq!(upper_breaks(&lower).unwrap(), vec![ValQ::int(1), ValQ::int(2)]);
        assert_eq!(
            upper_breaks(&[LowerBreak::new(ValQ::frac(7, 3), 9)]).unwrap(),
            vec![ValQ::frac(7, 3)]
        );
        assert!(upper_breaks(&[]).is_err());
        let bad = vec![LowerBreak::new(ValQ::int(3), 4), LowerBreak::new(ValQ::int(1), 2)];
        assert!(matches!(upper_breaks(&bad), Err(Error::MalformedBreaks(_))));
        let bad = vec![LowerBreak::new(ValQ::int(1), 2), LowerBreak::new(ValQ::int(3), 2)];
        assert!(matches!(upper_breaks(&bad), Err(Error::MalformedBreaks(_))));
    }

    #[test]
    fn multi_break_degree_9() {
        // x^9 + 3x^3 + 3 over Q_3 has a wild tower with two breaks
        let f = ep(3, &[3, 0, 0, 3, 0, 0, 0, 0, 0]);
        let prof = profile(&f).unwrap();
        assert!(prof.lower_breaks.len() >= 2, "{prof:?}");
        assert_eq!(prof.lower_breaks[0].card, 9);
    }

    #[test]
    fn transition_examples() {
        let prof = profile(&ep(3, &[3, 0, 0])).unwrap();
        assert_eq!(prof.transition(&ValQ::frac(5, 6)), ValQ::frac(5, 2));
        assert_eq!(prof.transition(&ValQ::int(0)), ValQ::int(0));
        assert_eq!(prof.transition(&ValQ::int(1)), ValQ::frac(5, 2) + ValQ::frac(1, 6));
        for k in 0..40 {
            let t = ValQ::frac(k, 7);
            assert_eq!(prof.transition_inverse(&prof.transition(&t)), t);
        }
        assert_eq!(prof.transition(&prof.i_shifted), prof.u_shifted);
    }

    #[test]
    fn tame_degree_has_break_zero() {
        let prof = profile(&ep(3, &[3, 0, 0, 0])).unwrap();
        assert_eq!(prof.lower_breaks, vec![LowerBreak::new(ValQ::int(0), 4)]);
        assert_eq!(prof.u_shifted, ValQ::int(1));
        assert_eq!(prof.d_f, ValQ::frac(3, 4));
    }

    #[test]
    fn quartic_over_q2() {
        let prof = profile(&ep(2, &[2, 0, 0, 0])).unwrap();
        assert_eq!(prof.lower_breaks.first().unwrap().card, 4);
        assert_eq!(prof.u_shifted, &prof.i_shifted + &prof.d_f);
    }
}
