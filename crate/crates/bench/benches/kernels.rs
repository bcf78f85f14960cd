use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

use lapmult_core::{all_graphs, canonical_form, charpoly, family, laplacian, FamilyId};

fn kernels(c: &mut Criterion) {
    let gnr = family(FamilyId::Gnr, &[10, 3]).unwrap();
    let l = laplacian(&gnr);
    c.bench_function("charpoly_gnr_10_3", |b| b.iter(|| charpoly(black_box(&l))));

    let petersen = lapmult_core::from_graph6("IheA@GUAo").unwrap();
    c.bench_function("canonical_form_petersen", |b| {
        b.iter(|| canonical_form(black_box(&petersen)).unwrap())
    });

    let mut group = c.benchmark_group("enumeration");
    group.sample_size(10);
    group.bench_function("all_graphs_7", |b| {
        b.iter(|| all_graphs(black_box(7)).unwrap())
    });
    group.finish();
}

criterion_group!(benches, kernels);
criterion_main!(benches);
