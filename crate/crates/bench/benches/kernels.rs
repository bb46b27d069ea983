use std::hint::black_box;
use std::sync::Arc;

use asym_core::convertibility::{build_interpolator, is_positive_definite};
use asym_core::exact_rate::exact_rate;
use asym_core::lie::{self, GeneratorSet, Qfim};
use asym_core::{random, CharFunction, FiniteGroup, ProjectiveRep, Tolerances};
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn char_pair(name: &str, seed: u64) -> (CharFunction, CharFunction) {
    let rep = ProjectiveRep::regular(Arc::new(FiniteGroup::named(name).unwrap()));
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let psi = CharFunction::new(&rep, &random::state(&mut rng, rep.dim())).unwrap();
    let phi = CharFunction::new(&rep, &random::state(&mut rng, rep.dim())).unwrap();
    (psi, phi)
}

fn gram_test(c: &mut Criterion) {
    let tol = Tolerances::default();
    let mut group = c.benchmark_group("gram_psd");
    for name in ["Z_8", "Z_32", "Z_64", "Z_128", "Z_16xZ_16"] {
        let (psi, phi) = char_pair(name, 1);
        let f = build_interpolator(&psi.power(4), &phi, &tol).unwrap();
        group.bench_with_input(BenchmarkId::from_parameter(psi.group().order()), &f, |b, f| {
            b.iter(|| is_positive_definite(black_box(f), &tol).unwrap())
        });
    }
    group.finish();
}

fn rate(c: &mut Criterion) {
    let tol = Tolerances::default();
    let mut group = c.benchmark_group("exact_rate");
    for name in ["S_3", "Q_8", "Z_64"] {
        let (psi, phi) = char_pair(name, 2);
        group.bench_function(name, |b| b.iter(|| exact_rate(black_box(&psi), black_box(&phi), false, &tol).unwrap()));
    }
    group.finish();
}

fn qfim(c: &mut Criterion) {
    let tol = Tolerances::default();
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut group = c.benchmark_group("qfim");
    for d in [4usize, 16, 32] {
        let gens = GeneratorSet::new((0..3).map(|_| random::hermitian(&mut rng, d)).collect(), &tol).unwrap();
        let rho = random::state(&mut rng, d).density();
        group.bench_with_input(BenchmarkId::from_parameter(d), &rho, |b, rho| {
            b.iter(|| lie::qfim(black_box(rho), &gens, &tol).unwrap())
        });
    }
    group.finish();
    let fa = Qfim::new(random::spd(&mut rng, 6, 0.1)).unwrap();
    let fb = Qfim::new(random::spd(&mut rng, 6, 0.1)).unwrap();
    c.bench_function("rf_ratio/6", |b| b.iter(|| lie::rf_ratio(black_box(&fa), black_box(&fb)).unwrap()));
}

criterion_group!(benches, gram_test, rate, qfim);
criterion_main!(benches);
