//! Cross-checks of the theory against the brute-force oracle.

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use padic_eisen::eisenstein::{
    canonical_form, distance, equivalent, prop111_equiv, prop117_equiv, quad_shift, scale_root,
    sufficient_equiv, type0_reduce,
};
use padic_eisen::oracle::{
    default_precision, eval_valuation, exact_shift_valuations, hensel_valuations,
    max_root_proximity, oracle_equiv, root_in_field, roots_in_field,
};
use padic_eisen::ramification::{profile, shifted_coeff_valuations};
use padic_eisen::sampling::{random_eisenstein, random_unit};
use padic_eisen::{representatives, EisensteinPoly, Family, Prime, ValQ};

fn prime(p: u64) -> Prime {
    Prime::new(p).unwrap()
}

fn ep(p: u64, c: &[i64]) -> EisensteinPoly {
    EisensteinPoly::from_i64(p, c).unwrap()
}

#[test]
fn worked_examples_hold_in_the_oracle() {
    assert!(oracle_equiv(&ep(3, &[6, 0, 0]), &ep(3, &[21, 0, 0]), 8).unwrap());
    assert!(oracle_equiv(&ep(3, &[3, 0, 6]), &ep(3, &[3, 0, -3]), 8).unwrap());
    assert!(oracle_equiv(&ep(3, &[3, 9, 0]), &ep(3, &[12, 0, 0]), 8).unwrap());
    assert!(!oracle_equiv(&ep(3, &[3, 0, 0]), &ep(3, &[6, 0, 0]), 8).unwrap());
    assert!(oracle_equiv(&ep(3, &[3, 0, 3]), &ep(3, &[12, 0, 3]), 8).unwrap());
    let f = ep(3, &[6, 9, 0]);
    assert!(oracle_equiv(&f, &type0_reduce(&f).unwrap(), 8).unwrap());
}

#[test]
fn oracle_is_reflexive_symmetric_and_scale_invariant() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for p in [3u64, 5] {
        let q = prime(p);
        let n = default_precision(q);
        for _ in 0..40 {
            let f = random_eisenstein(q, p as usize, 5, &mut rng);
            let g = random_eisenstein(q, p as usize, 5, &mut rng);
            assert!(oracle_equiv(&f, &f, n).unwrap());
            assert_eq!(oracle_equiv(&f, &g, n).unwrap(), oracle_equiv(&g, &f, n).unwrap(), "{f} vs {g}");
            let u = random_unit(q, 100, &mut rng);
            assert!(oracle_equiv(&f, &scale_root(&f, &u).unwrap(), n).unwrap());
            assert!(oracle_equiv(&f, &quad_shift(&f, &u).unwrap(), n).unwrap());
        }
    }
}

#[test]
fn oracle_is_stable_under_more_precision() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for p in [3u64, 5] {
        let q = prime(p);
        let n = default_precision(q);
        for _ in 0..40 {
            let f = random_eisenstein(q, p as usize, 5, &mut rng);
            let g = random_eisenstein(q, p as usize, 5, &mut rng);
            assert_eq!(oracle_equiv(&f, &g, n).unwrap(), oracle_equiv(&f, &g, n + 2).unwrap());
        }
    }
}

#[test]
fn found_roots_pass_the_hensel_recheck() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..60 {
        let f = random_eisenstein(prime(3), 3, 5, &mut rng);
        let rep = canonical_form(&f).unwrap();
        let r = root_in_field(&rep.poly, &f, 8).unwrap().expect("classifier output is equivalent");
        let (vg, vd) = hensel_valuations(&rep.poly, &r);
        let vd = vd.expect("derivative valuation below guard");
        assert!(vg.is_none_or(|vg| vg > 2 * vd));
        assert_eq!(r.valuation(), Some(1), "roots are uniformizers");
    }
}

#[test]
fn representatives_pairwise_distinct_p5() {
    let reps = representatives(prime(5)).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for _ in 0..100 {
        let i = rng.gen_range(0..reps.len());
        let j = rng.gen_range(0..reps.len());
        assert_eq!(oracle_equiv(&reps[i].poly, &reps[j].poly, 6).unwrap(), i == j);
    }
}

#[test]
fn galois_case_matches_root_count() {
    for p in [3u64, 5] {
        for rep in representatives(prime(p)).unwrap() {
            let n = default_precision(prime(p));
            let roots = roots_in_field(&rep.poly, &rep.poly, n).unwrap();
            let expect = if rep.family == Family::F2 { p as usize } else { 1 };
            assert_eq!(roots.len(), expect, "{}", rep.poly);
        }
    }
}

#[test]
fn sufficient_criteria_are_sound() {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut hits = [0usize; 3];
    for p in [3u64, 5] {
        let q = prime(p);
        let n = default_precision(q);
        for _ in 0..150 {
            let f = random_eisenstein(q, p as usize, 5, &mut rng);
            let k = rng.gen_range(1..=3u32);
            let idx = rng.gen_range(0..p as usize);
            let mut c = f.coeffs().to_vec();
            c[idx] += BigInt::from(rng.gen_range(1..p as i64)) * q.pow(k);
            let Ok(g) = EisensteinPoly::new(q, c) else { continue };
            let truth = oracle_equiv(&f, &g, n).unwrap();
            if sufficient_equiv(&f, &g).unwrap() {
                hits[0] += 1;
                assert!(truth, "Krasner bound: {f} vs {g}");
            }
            if prop111_equiv(&f, &g).unwrap() {
                hits[1] += 1;
                assert!(truth, "congruence criterion: {f} vs {g}");
            }
            assert_eq!(equivalent(&f, &g).unwrap(), truth, "{f} vs {g}");
        }
        // x^p + s p^m x^{p-1} + t p pairs
        for _ in 0..60 {
            let m = rng.gen_range(1..=2u32);
            let s = random_unit(q, 20, &mut rng);
            let t = 1 + p as i64 * rng.gen_range(-20i64..20);
            let t2 = 1 + p as i64 * rng.gen_range(-20i64..20);
            let mk = |t: i64| {
                let mut c = vec![BigInt::from(0); p as usize];
                c[0] = BigInt::from(t) * q.big();
                c[p as usize - 1] = &s * q.pow(m);
                EisensteinPoly::new(q, c).unwrap()
            };
            let (f, g) = (mk(t), mk(t2));
            if prop117_equiv(&f, &g).unwrap() {
                hits[2] += 1;
                assert!(oracle_equiv(&f, &g, n).unwrap(), "shape criterion: {f} vs {g}");
            }
        }
    }
    assert!(hits.iter().all(|&h| h > 0), "criteria never fired: {hits:?}");
}

#[test]
fn distance_equals_valuation_at_the_other_root() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for p in [3u64, 5] {
        let q = prime(p);
        for _ in 0..50 {
            let f = random_eisenstein(q, p as usize, 4, &mut rng);
            let g = random_eisenstein(q, p as usize, 4, &mut rng);
            let d = distance(&f, &g).unwrap();
            let v = eval_valuation(&f, &g, default_precision(q)).unwrap();
            assert_eq!(d.scale(p as i64), v, "{f} at a root of {g}");
        }
    }
}

/// `psi_f(v_K(f(pi_g))) = max_s v_K(s(pi_f) - pi_g)`.
#[test]
fn transition_inverse_measures_root_proximity() {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for e in [3usize, 6] {
        for _ in 0..40 {
            let f = random_eisenstein(prime(3), e, 4, &mut rng);
            let g = if rng.gen_bool(0.5) {
                random_eisenstein(prime(3), e, 4, &mut rng)
            } else {
                let mut c = f.coeffs().to_vec();
                c[rng.gen_range(0..e)] += prime(3).pow(rng.gen_range(2..5));
                EisensteinPoly::new(prime(3), c).unwrap()
            };
            let prox = max_root_proximity(&f, &g, 8).unwrap();
            let psi = profile(&f).unwrap().transition_inverse(&distance(&f, &g).unwrap());
            assert_eq!(psi, prox, "{f} vs {g}");
        }
    }
}

#[test]
fn coefficient_formula_matches_expansion_across_degrees() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for (p, e) in [(3u64, 3usize), (5, 5), (3, 9), (2, 4), (2, 8), (5, 10)] {
        for _ in 0..25 {
            let f = random_eisenstein(prime(p), e, 4, &mut rng);
            assert_eq!(shifted_coeff_valuations(&f), exact_shift_valuations(&f, 4), "{f}");
        }
    }
    assert_eq!(
        exact_shift_valuations(&ep(3, &[3, 0, 0]), 8),
        vec![ValQ::int(5), ValQ::int(4), ValQ::int(0)]
    );
}
