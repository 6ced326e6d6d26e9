//! Benchmarks for the hot paths: rank normal forms, the canonical
//! solvers, a representative unit formula, and the exhaustive oracle.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use coreinv::geninv::{self, apply_formula, mp_inverse, FormulaId, InverseKind};
use coreinv::lab::{build_oracle, gen_with_rank};
use coreinv::{FieldSpec, StarMatrix};

fn fixtures(field: FieldSpec, n: usize) -> StarMatrix {
    // fixed seed so runs are comparable
    gen_with_rank(field, n, n.div_ceil(2), 0xBE7C)
}

fn bench_rank_form(c: &mut Criterion) {
    let mut group = c.benchmark_group("rank_form");
    for field in [FieldSpec::Q, FieldSpec::Qi, FieldSpec::fp(101).unwrap()] {
        for n in [4usize, 8] {
            let a = fixtures(field, n);
            group.bench_with_input(
                BenchmarkId::new(field.to_string(), n),
                &a,
                |b, a| b.iter(|| a.rank_form()),
            );
        }
    }
    group.finish();
}

fn bench_solvers(c: &mut Criterion) {
    let mut group = c.benchmark_group("solve");
    let a = fixtures(FieldSpec::Q, 6);
    for kind in [
        InverseKind::Group,
        InverseKind::MoorePenrose,
        InverseKind::Core,
        InverseKind::DualCore,
    ] {
        group.bench_with_input(
            BenchmarkId::from_parameter(kind),
            &a,
            |b, a| b.iter(|| geninv::solve(kind, a)),
        );
    }
    group.finish();
}

fn bench_formula(c: &mut Criterion) {
    let a = fixtures(FieldSpec::Q, 5);
    let g = mp_inverse(&a).unwrap().value;
    c.bench_function("formula/C10", |b| {
        b.iter(|| apply_formula(FormulaId::C10, &a, Some(&g), 1))
    });
}

fn bench_oracle(c: &mut Criterion) {
    let mut group = c.benchmark_group("oracle");
    group.sample_size(10);
    group.bench_function("build/F2", |b| b.iter(|| build_oracle(2, 2)));
    group.finish();
}

criterion_group!(benches, bench_rank_form, bench_solvers, bench_formula, bench_oracle);
criterion_main!(benches);
