use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

use kseg_core::analysis::is_categorical_at_zero;
use kseg_core::construct::random::{random_category, random_sandwich, seeded};
use kseg_core::construct::semigroup_of_category;
use kseg_core::enumeration::{enumerate, verify_corpus, EnumerationTask};
use kseg_core::{decompose, enumerate_congruences, find_isomorphism, FiniteSemigroup};

fn enumeration(c: &mut Criterion) {
    let mut group = c.benchmark_group("enumerate_order_4");
    for jobs in [1, 4] {
        group.bench_with_input(BenchmarkId::from_parameter(jobs), &jobs, |b, &jobs| {
            b.iter(|| {
                enumerate(&EnumerationTask {
                    jobs,
                    ..EnumerationTask::exhaustive(4)
                })
                .unwrap()
            })
        });
    }
    group.finish();
    c.bench_function("verify_corpus_4", |b| {
        b.iter(|| verify_corpus(4, 4).unwrap())
    });
}

fn order_four_k_semigroups() -> Vec<FiniteSemigroup> {
    enumerate(&EnumerationTask {
        k_only: true,
        ..EnumerationTask::exhaustive(4)
    })
    .unwrap()
    .semigroups
}

fn per_semigroup(c: &mut Criterion) {
    let corpus = order_four_k_semigroups();
    c.bench_function("categoricity_scan_order_4", |b| {
        b.iter(|| {
            corpus
                .iter()
                .filter(|s| is_categorical_at_zero(s).is_ok())
                .count()
        })
    });
    c.bench_function("decompose_order_4", |b| {
        b.iter(|| {
            corpus
                .iter()
                .filter(|s| decompose(s).unwrap().all_verified())
                .count()
        })
    });
    c.bench_function("congruences_order_4", |b| {
        b.iter(|| {
            corpus
                .iter()
                .map(|s| enumerate_congruences(s, 8).unwrap().len())
                .sum::<usize>()
        })
    });

    let rees = random_sandwich(&mut seeded(11), 2).materialize();
    c.bench_function("isomorphism_self", |b| {
        b.iter(|| find_isomorphism(black_box(&rees), &rees, 8).unwrap())
    });

    let cat = random_category(5, 3, 5).unwrap();
    let s = semigroup_of_category(&cat).unwrap();
    c.bench_function("decompose_category_semigroup", |b| {
        b.iter(|| decompose(black_box(&s)).unwrap())
    });
}

criterion_group!(benches, enumeration, per_semigroup);
criterion_main!(benches);
