use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use ncshuffle_bench::{character, pair};
use ncshuffle_core::combinatorics::{enumerate, Family};
use ncshuffle_core::convolutions::{cmonotone_convolve, orthogonal};
use ncshuffle_core::cumulants::{cfree_cumulants, cmonotone_cumulants, cumulants_of, CumulantKind};
use ncshuffle_core::shuffle::{convolve, log_map, Mode};

fn shuffle(c: &mut Criterion) {
    let mut g = c.benchmark_group("shuffle");
    for n in [4, 6, 8] {
        let (a, b) = (character(1, n, 1), character(1, n, 2));
        g.bench_with_input(BenchmarkId::new("convolve", n), &n, |bch, _| bch.iter(|| convolve(&a, &b).unwrap()));
        g.bench_with_input(BenchmarkId::new("log-left", n), &n, |bch, _| bch.iter(|| log_map(Mode::Left, &a).unwrap()));
    }
    let a = character(2, 5, 3);
    g.bench_function("log-star/2 letters/5", |bch| bch.iter(|| log_map(Mode::Star, &a).unwrap()));
    g.finish();
}

fn cumulants(c: &mut Criterion) {
    let mut g = c.benchmark_group("cumulants");
    let phi = character(1, 6, 4);
    for kind in [CumulantKind::Free, CumulantKind::Boolean, CumulantKind::Monotone] {
        g.bench_function(kind.to_string(), |b| b.iter(|| cumulants_of(&phi, kind.clone()).unwrap()));
    }
    let p = pair(1, 6, 5);
    g.bench_function("cfree", |b| b.iter(|| cfree_cumulants(&p).unwrap()));
    g.bench_function("cmonotone", |b| b.iter(|| cmonotone_cumulants(&p).unwrap()));
    g.finish();
}

fn convolutions(c: &mut Criterion) {
    let mut g = c.benchmark_group("convolutions");
    let (p1, p2) = (pair(1, 6, 6), pair(1, 6, 8));
    g.bench_function("cmonotone", |b| b.iter(|| cmonotone_convolve(&p1, &p2).unwrap()));
    g.bench_function("orthogonal", |b| b.iter(|| orthogonal(&p1.phi, &p2.phi).unwrap()));
    g.finish();
}

fn partitions(c: &mut Criterion) {
    let mut g = c.benchmark_group("partitions");
    g.bench_function("nc/10", |b| b.iter(|| enumerate(10, Family::Nc).unwrap().len()));
    g.bench_function("monotone/7", |b| b.iter(|| enumerate(7, Family::Monotone).unwrap().len()));
    g.finish();
}

criterion_group!(benches, shuffle, cumulants, convolutions, partitions);
criterion_main!(benches);
