use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use monoglue::basis::standard_basis;
use monoglue::hilbert::{hilbert_numerator_with, Pivot};
use monoglue::tangentcone::tangent_cone;
use monoglue::{defining_ideal, MonomialCurve, MonomialOrder};
use std::hint::black_box;

const CURVES: &[&[u64]] = &[
    &[6, 7, 15],
    &[5, 12, 7, 8],
    &[105, 252, 119, 136],
    &[16, 18, 21, 27],
];

fn label(gens: &[u64]) -> String {
    gens.iter()
        .map(u64::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

fn bench_defining_ideal(c: &mut Criterion) {
    let mut group = c.benchmark_group("defining_ideal");
    for gens in CURVES {
        let curve = MonomialCurve::from_generators(gens).unwrap();
        group.bench_with_input(
            BenchmarkId::from_parameter(label(gens)),
            &curve,
            |b, curve| b.iter(|| defining_ideal(black_box(curve))),
        );
    }
    group.finish();
}

fn bench_standard_basis(c: &mut Criterion) {
    let mut group = c.benchmark_group("standard_basis");
    for gens in CURVES {
        let curve = MonomialCurve::from_generators(gens).unwrap();
        let ideal = defining_ideal(&curve);
        let order = MonomialOrder::local_with_priority(curve.canonical_priority()).unwrap();
        group.bench_with_input(
            BenchmarkId::from_parameter(label(gens)),
            &ideal,
            |b, ideal| b.iter(|| standard_basis(black_box(ideal), &order).unwrap()),
        );
    }
    group.finish();
}

fn bench_hilbert_numerator(c: &mut Criterion) {
    let mut group = c.benchmark_group("hilbert_numerator");
    for gens in CURVES {
        let curve = MonomialCurve::from_generators(gens).unwrap();
        let lms = tangent_cone(&curve).leading_monomials;
        for (name, pivot) in [
            ("most_frequent", Pivot::MostFrequent),
            ("first_shared", Pivot::FirstSharedLargest),
        ] {
            group.bench_with_input(BenchmarkId::new(name, label(gens)), &lms, |b, lms| {
                b.iter(|| hilbert_numerator_with(black_box(lms), curve.nvars(), pivot))
            });
        }
    }
    group.finish();
}

criterion_group!(
    benches,
    bench_defining_ideal,
    bench_standard_basis,
    bench_hilbert_numerator
);
criterion_main!(benches);
