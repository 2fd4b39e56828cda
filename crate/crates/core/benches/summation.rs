//! Parallel vs sequential divide-and-conquer summation on the workloads
//! that dominate real runs: exact harmonic numbers and termwise partial
//! sums. Both routes share one reduction tree, so the comparison is purely
//! about work scheduling — the results are asserted identical first.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use gamma_audit::exact::{harmonic, harmonic_seq};
use gamma_audit::series::{partial_termwise, partial_termwise_seq, SeriesId};

fn bench_harmonic(c: &mut Criterion) {
    let mut group = c.benchmark_group("harmonic");
    group.sample_size(10);
    for n in [10_000u64, 100_000] {
        assert_eq!(harmonic(n).unwrap(), harmonic_seq(n).unwrap());
        group.bench_with_input(BenchmarkId::new("parallel", n), &n, |b, &n| {
            b.iter(|| harmonic(n).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("sequential", n), &n, |b, &n| {
            b.iter(|| harmonic_seq(n).unwrap())
        });
    }
    group.finish();
}

fn bench_partial_termwise(c: &mut Criterion) {
    let mut group = c.benchmark_group("alpha_partial");
    group.sample_size(10);
    for n in [10_000u64, 50_000] {
        assert_eq!(
            partial_termwise(SeriesId::Alpha, n).unwrap(),
            partial_termwise_seq(SeriesId::Alpha, n).unwrap()
        );
        group.bench_with_input(BenchmarkId::new("parallel", n), &n, |b, &n| {
            b.iter(|| partial_termwise(SeriesId::Alpha, n).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("sequential", n), &n, |b, &n| {
            b.iter(|| partial_termwise_seq(SeriesId::Alpha, n).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, bench_harmonic, bench_partial_termwise);
criterion_main!(benches);
