//! Benchmarks for the hot paths: reduced-word enumeration, the Stanley
//! polynomial routes, insertion, conversion, and crystal traversal.

use criterion::{black_box, criterion_group, criterion_main, Criterion};
use stanley_core::conjectures::enumerate_signed_eg;
use stanley_core::conversion::{primed_to_signed, signed_to_primed};
use stanley_core::crystal::crystal_component;
use stanley_core::insertion::primed_recording;
use stanley_core::stanley::{double, double_via_crystal, type_c, DEFAULT_LENGTH_CAP};
use stanley_core::symfunc::expand_in_schur;
use stanley_core::tableau::enumerate_primed;
use stanley_core::{Factorization, Partition, SignedPermutation, Tableau};

const CAP: usize = DEFAULT_LENGTH_CAP;

fn window(spec: &[i32]) -> SignedPermutation {
    SignedPermutation::from_window(spec.to_vec()).unwrap()
}

fn bench_reduced_words(c: &mut Criterion) {
    let w0 = window(&[4, 3, 2, 1]);
    c.bench_function("reduced_words w0(A3)", |b| {
        b.iter(|| black_box(&w0).reduced_words(CAP).unwrap())
    });
}

fn bench_double_routes(c: &mut Criterion) {
    let w = window(&[3, 2, 1]);
    c.bench_function("double 321 k=3 via factorizations", |b| {
        b.iter(|| double(black_box(&w), 3, CAP).unwrap())
    });
    c.bench_function("double 321 k=3 via crystal", |b| {
        b.iter(|| double_via_crystal(black_box(&w), 3).unwrap())
    });
}

fn bench_type_c(c: &mut Criterion) {
    let w = window(&[-1, -2, 4, 3]);
    c.bench_function("type_c [-1,-2,4,3] k=2", |b| {
        b.iter(|| type_c(black_box(&w), 2, CAP).unwrap())
    });
}

fn bench_schur_expansion(c: &mut Criterion) {
    let w = window(&[3, 2, 1]);
    let poly = double(&w, 3, CAP).unwrap();
    c.bench_function("expand_in_schur double(321)", |b| {
        b.iter(|| expand_in_schur(black_box(&poly)).unwrap())
    });
}

fn bench_insertion(c: &mut Criterion) {
    let v: Factorization = "(-3,-2,1,4)(-3,-2)(-4,1,3)".parse().unwrap();
    c.bench_function("primed_recording nine-cell factorization", |b| {
        b.iter(|| primed_recording(black_box(&v)).unwrap())
    });
    let w = window(&[-1, -2, 4, 3]);
    c.bench_function("enumerate_signed_eg [-1,-2,4,3]", |b| {
        b.iter(|| enumerate_signed_eg(black_box(&w), CAP).unwrap())
    });
}

fn bench_conversion(c: &mut Criterion) {
    let shape = Partition::new(vec![3, 2, 1]).unwrap();
    let empty = Partition::new(vec![]).unwrap();
    let primed = enumerate_primed(&shape, &empty, 3).unwrap();
    let t = primed.last().cloned().unwrap();
    c.bench_function("conversion round trip (3,2,1) k=3", |b| {
        b.iter(|| {
            let signed = primed_to_signed(black_box(&t), 3).unwrap();
            signed_to_primed(&signed, 3).unwrap()
        })
    });
}

fn bench_crystal(c: &mut Criterion) {
    let start: Tableau = "1' 1 / 1 2'".parse().unwrap();
    c.bench_function("crystal_component 18-node graph", |b| {
        b.iter(|| crystal_component(black_box(&start), 3).unwrap())
    });
}

criterion_group!(
    benches,
    bench_reduced_words,
    bench_double_routes,
    bench_type_c,
    bench_schur_expansion,
    bench_insertion,
    bench_conversion,
    bench_crystal
);
criterion_main!(benches);
