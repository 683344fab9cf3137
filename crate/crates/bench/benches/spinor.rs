use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use orbinv_bench::{admissible_form, sample_isometries};
use orbinv_core::spinor::{cartan_dieudonne_decompose, normalizer_index_check, spinor_norm};
use orbinv_core::TotallyRealField;

fn decomposition(c: &mut Criterion) {
    let mut group = c.benchmark_group("decompose");
    for (label, over_q5) in [("Q", false), ("Q(sqrt 5)", true)] {
        for n in [2, 4] {
            let form = admissible_form(over_q5, n);
            let gs = sample_isometries(&form, 16, 42);
            let id = BenchmarkId::new(label, form.dim());
            group.bench_with_input(id, &gs, |b, gs| {
                b.iter(|| {
                    for g in gs {
                        black_box(cartan_dieudonne_decompose(g));
                    }
                })
            });
        }
    }
    group.finish();
}

fn norms(c: &mut Criterion) {
    let form = admissible_form(true, 4);
    let gs = sample_isometries(&form, 16, 7);
    c.bench_function("spinor_norm_q5_dim5", |b| {
        b.iter(|| {
            for g in &gs {
                black_box(spinor_norm(g));
            }
        })
    });
    let k = TotallyRealField::real_quadratic(5).unwrap();
    c.bench_function("normalizer_check_q5_n8", |b| {
        b.iter(|| normalizer_index_check(black_box(&k), 8).unwrap())
    });
}

criterion_group!(benches, decomposition, norms);
criterion_main!(benches);
