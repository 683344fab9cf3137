use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use orbinv_bench::squarefree_range;
use orbinv_core::field_invariants::{
    analytic_class_number_oracle, fundamental_unit, narrow_class_number,
};
use orbinv_core::{restricted_class_number, TotallyRealField};

fn units(c: &mut Criterion) {
    let mut group = c.benchmark_group("fundamental_unit");
    // 94 and 661 have long continued fraction periods.
    for d in [5u64, 94, 661, 9949] {
        group.bench_with_input(BenchmarkId::from_parameter(d), &d, |b, &d| {
            b.iter(|| fundamental_unit(black_box(d)).unwrap())
        });
    }
    group.finish();
}

fn class_numbers(c: &mut Criterion) {
    let mut group = c.benchmark_group("class_number");
    for d in [10u64, 79, 2 * 3 * 5 * 7 * 11] {
        group.bench_with_input(BenchmarkId::new("form_cycles", d), &d, |b, &d| {
            b.iter(|| narrow_class_number(black_box(d)).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("analytic", d), &d, |b, &d| {
            b.iter(|| analytic_class_number_oracle(black_box(d)).unwrap())
        });
    }
    group.finish();
}

fn sweep(c: &mut Criterion) {
    let ds = squarefree_range(2, 100);
    c.bench_function("sweep_d_le_100", |b| {
        b.iter(|| {
            for &d in &ds {
                let k = TotallyRealField::real_quadratic(d).unwrap();
                black_box(restricted_class_number(&k).unwrap());
            }
        })
    });
}

criterion_group!(benches, units, class_numbers, sweep);
criterion_main!(benches);
