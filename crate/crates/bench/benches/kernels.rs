use criterion::{black_box, criterion_group, criterion_main, Criterion};

use padic_eisen::{canonical_form, oracle, profile, tables};
use padic_eisen_bench::{fixtures, prime};

fn bench_canonical_form(c: &mut Criterion) {
    let mut group = c.benchmark_group("canonical_form");
    for (name, f) in fixtures().into_iter().filter(|(_, f)| f.degree() as u64 == f.prime().get()) {
        group.bench_function(name, |b| b.iter(|| canonical_form(black_box(&f)).unwrap()));
    }
    group.finish();
}

fn bench_profile(c: &mut Criterion) {
    let mut group = c.benchmark_group("profile");
    for (name, f) in fixtures() {
        group.bench_function(name, |b| b.iter(|| profile(black_box(&f)).unwrap()));
    }
    group.finish();
}

fn bench_table(c: &mut Criterion) {
    c.bench_function("representatives_p11", |b| {
        b.iter(|| tables::representatives(black_box(prime(11))).unwrap())
    });
}

fn bench_oracle(c: &mut Criterion) {
    let mut group = c.benchmark_group("oracle_equiv");
    group.sample_size(20);
    let reps = tables::representatives(prime(3)).unwrap();
    group.bench_function("p3_all_pairs", |b| {
        b.iter(|| {
            for f in &reps {
                for g in &reps {
                    black_box(oracle::oracle_equiv(&f.poly, &g.poly, 8).unwrap());
                }
            }
        })
    });
    let (_, f) = fixtures().swap_remove(2);
    let rep = canonical_form(&f).unwrap();
    group.bench_function("p5_canonical_check", |b| {
        b.iter(|| oracle::oracle_equiv(black_box(&f), &rep.poly, 6).unwrap())
    });
    group.finish();
}

criterion_group!(benches, bench_canonical_form, bench_profile, bench_table, bench_oracle);
criterion_main!(benches);
