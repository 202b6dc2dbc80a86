//! End-to-end benchmarks: normal forms, face enumeration, structure
//! enumeration, the component census, and the orbit fan construction.

use cayley_core::cayley::enumerate_cayley_structures;
use cayley_core::fixtures;
use cayley_core::matrix::{int, IntMatrix};
use cayley_core::orbits::build_sigma_pi;
use cayley_core::order::hilbert_census;
use cayley_core::polytope::{enumerate_faces, Face};
use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;
use std::sync::Arc;

fn bench_normal_forms(c: &mut Criterion) {
    let m = IntMatrix::from_i64(&[
        &[6, 4, -2, 9],
        &[3, -7, 5, 1],
        &[0, 2, 8, -5],
        &[4, 4, 4, 4],
    ]);
    c.bench_function("hermite_normal_form_4x4", |b| {
        b.iter(|| black_box(&m).hermite_normal_form())
    });
    c.bench_function("smith_normal_form_4x4", |b| {
        b.iter(|| black_box(&m).smith_normal_form())
    });
}

fn bench_faces(c: &mut Criterion) {
    let cfg = Arc::new(fixtures::fano_configuration());
    c.bench_function("enumerate_faces_fano", |b| {
        b.iter(|| enumerate_faces(black_box(&cfg)))
    });
}

fn bench_enumeration(c: &mut Criterion) {
    let cfg = Arc::new(fixtures::fano_configuration());
    let face = Face::full(&cfg);
    c.bench_function("enumerate_structures_fano_d2", |b| {
        b.iter(|| enumerate_cayley_structures(black_box(&face), &int(2)))
    });
}

fn bench_census(c: &mut Criterion) {
    let cfg = Arc::new(fixtures::fano_configuration());
    let mut group = c.benchmark_group("census");
    group.sample_size(10);
    group.bench_function("hilbert_census_fano_d2", |b| {
        b.iter(|| hilbert_census(black_box(&cfg), &int(2)))
    });
    group.finish();
}

fn bench_orbit_fan(c: &mut Criterion) {
    let cfg = Arc::new(fixtures::fano_configuration());
    let pi = fixtures::fano_pi_prime(&cfg);
    let mut group = c.benchmark_group("orbit_fan");
    group.sample_size(10);
    group.bench_function("sigma_pi_prime", |b| b.iter(|| build_sigma_pi(black_box(&pi))));
    group.finish();
}

criterion_group!(
    benches,
    bench_normal_forms,
    bench_faces,
    bench_enumeration,
    bench_census,
    bench_orbit_fan
);
criterion_main!(benches);
