//! Seeded self-check: random polynomials are pushed through every invariant
//! that can be decided independently, with the brute-force oracle as ground
//! truth. The first violation is shrunk to a small witness.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use padic_eisen::eisenstein::{canonical_form_faulty, krasner_certificate};
use padic_eisen::oracle::{exact_shift_valuations, oracle_equiv, verify_quad_identity};
use padic_eisen::ramification::shifted_coeff_valuations;
use padic_eisen::sampling::random_eisenstein;
use padic_eisen::{
    canonical_form, df_uf, distance, equivalent, profile, representatives, CanonicalRep,
    EisensteinPoly, Prime, Result,
};

/// Coefficients are drawn from `p * [1, p^MAX_EXP]`.
const MAX_EXP: u32 = 5;
const SHRINK_ROUNDS: usize = 200;
const QUAD_UNITS: [i64; 4] = [1, -1, 2, 7];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Classifier,
    Equivalence,
    Krasner,
    Ultrametric,
    Ramification,
    QuadShift,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::Classifier => "classifier-vs-oracle",
            Suite::Equivalence => "equivalence-vs-oracle",
            Suite::Krasner => "krasner-soundness",
            Suite::Ultrametric => "ultrametric",
            Suite::Ramification => "ramification",
            Suite::QuadShift => "quadratic-shift",
        }
    }

    fn arity(self) -> usize {
        match self {
            Suite::Classifier | Suite::Ramification | Suite::QuadShift => 1,
            Suite::Equivalence | Suite::Krasner => 2,
            Suite::Ultrametric => 3,
        }
    }
}

#[derive(Clone, Debug)]
pub struct Config {
    pub p: Prime,
    pub degree: usize,
    pub samples: usize,
    pub seed: u64,
    pub precision: u32,
    pub inject_fault: bool,
}

impl Config {
    /// The degree-`p` suites only make sense for odd `p` at degree `p`.
    fn classifies(&self) -> bool {
        self.p.is_odd() && self.degree == self.p.get() as usize
    }

    pub fn suites(&self) -> Vec<Suite> {
        let mut s = Vec::new();
        if self.classifies() {
            s.extend([Suite::Classifier, Suite::Equivalence]);
        }
        s.extend([Suite::Krasner, Suite::Ultrametric, Suite::Ramification]);
        if self.classifies() {
            s.push(Suite::QuadShift);
        }
        s
    }

    fn classify(&self, f: &EisensteinPoly) -> Result<CanonicalRep> {
        if self.inject_fault {
            canonical_form_faulty(f)
        } else {
            canonical_form(f)
        }
    }

    /// `Some(reason)` when `polys` violates the suite's invariant.
    fn violation(&self, suite: Suite, polys: &[EisensteinPoly]) -> Result<Option<String>> {
        let n = self.precision;
        Ok(match suite {
            Suite::Classifier => {
                let f = &polys[0];
                let rep = self.classify(f)?;
                if !representatives(self.p)?.contains(&rep) {
                    Some(format!("{} is not a table entry", rep.poly))
                } else if !oracle_equiv(f, &rep.poly, n)? {
                    Some(format!("oracle finds {f} not equivalent to its class {}", rep.poly))
                } else {
                    None
                }
            }
            Suite::Equivalence => {
                let (f, g) = (&polys[0], &polys[1]);
                let claimed = if self.inject_fault {
                    self.classify(f)? == self.classify(g)?
                } else {
                    equivalent(f, g)?
                };
                let truth = oracle_equiv(f, g, n)?;
                (claimed != truth).then(|| format!("classifier says {claimed}, oracle says {truth}"))
            }
            Suite::Krasner => {
                let c = krasner_certificate(&polys[0], &polys[1])?;
                (c.holds && !oracle_equiv(&polys[0], &polys[1], n)?).then(|| {
                    format!("distance {} > bound {} but oracle finds no root", c.distance, c.u_f)
                })
            }
            Suite::Ultrametric => {
                let (f, g, h) = (&polys[0], &polys[1], &polys[2]);
                let fg = distance(f, g)?;
                let bound = distance(f, h)?.min(distance(h, g)?);
                if fg < bound {
                    Some(format!("d(f,g) = {fg} < min(d(f,h), d(h,g)) = {bound}"))
                } else if fg != distance(g, f)? {
                    Some("distance is not symmetric".into())
                } else if fg.is_infinite() != (f == g) {
                    Some(format!("d(f,g) = {fg} for f != g, or finite for f == g"))
                } else {
                    None
                }
            }
            Suite::Ramification => {
                let f = &polys[0];
                // profile() refuses to return when u = i + d fails
                let prof = match profile(f) {
                    Ok(prof) => prof,
                    Err(e) => return Ok(Some(e.to_string())),
                };
                let fast = shifted_coeff_valuations(f);
                let exact = exact_shift_valuations(f, n);
                if fast != exact {
                    Some(format!("coefficient formula {fast:?} but expansion gives {exact:?}"))
                } else if self.classifies() && df_uf(f)? != (prof.d_f.clone(), prof.u_shifted.clone()) {
                    Some(format!("closed form disagrees with polygon: d = {}, u = {}", prof.d_f, prof.u_shifted))
                } else {
                    None
                }
            }
            Suite::QuadShift => {
                let f = &polys[0];
                let mut bad = None;
                for u in QUAD_UNITS.iter().map(|&u| BigInt::from(u)).filter(|u| !u.is_multiple_of(&self.p.big())) {
                    if !verify_quad_identity(f, &u)? {
                        bad = Some(format!("identity fails for u = {u}"));
                        break;
                    }
                }
                bad
            }
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Counterexample {
    pub suite: String,
    pub detail: String,
    pub polys: Vec<String>,
    pub original: Vec<String>,
}

#[derive(Clone, Debug)]
pub struct Report {
    pub text: String,
    pub counterexample: Option<Counterexample>,
}

pub fn run(cfg: &Config) -> Result<Report> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let suites = cfg.suites();
    let mut passed = vec![0usize; suites.len()];
    let mut text = String::new();
    writeln!(
        text,
        "check p={} degree={} samples={} seed={} precision={}",
        cfg.p, cfg.degree, cfg.samples, cfg.seed, cfg.precision
    )
    .unwrap();
    for _ in 0..cfg.samples {
        let draw = sample(cfg, &mut rng);
        for (k, &suite) in suites.iter().enumerate() {
            let polys = &draw[..suite.arity()];
            if let Some(detail) = cfg.violation(suite, polys)? {
                let (polys_min, detail_min) = shrink(cfg, suite, polys.to_vec(), detail)?;
                write_tally(&mut text, &suites, &passed);
                writeln!(text, "violation in {}: {detail_min}", suite.name()).unwrap();
                return Ok(Report {
                    text,
                    counterexample: Some(Counterexample {
                        suite: suite.name().into(),
                        detail: detail_min,
                        polys: polys_min.iter().map(EisensteinPoly::to_text).collect(),
                        original: polys.iter().map(EisensteinPoly::to_text).collect(),
                    }),
                });
            }
            passed[k] += 1;
        }
    }
    write_tally(&mut text, &suites, &passed);
    writeln!(text, "ok").unwrap();
    Ok(Report { text, counterexample: None })
}

fn write_tally(text: &mut String, suites: &[Suite], passed: &[usize]) {
    for (s, n) in suites.iter().zip(passed) {
        writeln!(text, "  {:<24}{n} passed", s.name()).unwrap();
    }
}

/// `[f, g, h]`: `g` is half the time a small perturbation of `f`, so that
/// equivalent pairs and certified pairs both occur.
fn sample(cfg: &Config, rng: &mut ChaCha8Rng) -> [EisensteinPoly; 3] {
    let f = random_eisenstein(cfg.p, cfg.degree, MAX_EXP, rng);
    let g = if rng.gen_bool(0.5) {
        random_eisenstein(cfg.p, cfg.degree, MAX_EXP, rng)
    } else {
        let k = rng.gen_range(2..=5u32);
        let coeffs = f
            .coeffs()
            .iter()
            .map(|c| c + BigInt::from(rng.gen_range(0..cfg.p.get())) * cfg.p.pow(k))
            .collect();
        EisensteinPoly::new(cfg.p, coeffs).expect("perturbation above p^2 keeps the shape")
    };
    let h = random_eisenstein(cfg.p, cfg.degree, MAX_EXP, rng);
    [f, g, h]
}

fn size(polys: &[EisensteinPoly]) -> BigInt {
    polys.iter().flat_map(|f| f.coeffs()).map(|c| c.abs()).sum()
}

/// Smaller replacements for one coefficient: zero, `+-p`, and balanced
/// residues mod `p^k`.
fn candidates(p: Prime, c: &BigInt) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(), p.big(), -p.big()];
    for k in 1..=6 {
        let m = p.pow(k);
        let mut r = c.mod_floor(&m);
        if &r + &r > m {
            r -= &m;
        }
        out.push(r);
    }
    out.retain(|x| x.abs() < c.abs());
    out
}

fn shrink(
    cfg: &Config,
    suite: Suite,
    mut polys: Vec<EisensteinPoly>,
    mut detail: String,
) -> Result<(Vec<EisensteinPoly>, String)> {
    for _ in 0..SHRINK_ROUNDS {
        let mut improved = false;
        'search: for j in 0..polys.len() {
            for i in 0..polys[j].degree() {
                for c in candidates(cfg.p, &polys[j].coeffs()[i]) {
                    let mut coeffs = polys[j].coeffs().to_vec();
                    coeffs[i] = c;
                    let Ok(smaller) = EisensteinPoly::new(cfg.p, coeffs) else { continue };
                    let mut trial = polys.clone();
                    trial[j] = smaller;
                    debug_assert!(size(&trial) < size(&polys));
                    // an oracle that gives up on a candidate just rules it out
                    if let Ok(Some(d)) = cfg.violation(suite, &trial) {
                        polys = trial;
                        detail = d;
                        improved = true;
                        break 'search;
                    }
                }
            }
        }
        if !improved {
            break;
        }
    }
    Ok((polys, detail))
}
