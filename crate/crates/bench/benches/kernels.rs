//! Timings for the hot kernels: symplectic products, dense-matrix assembly,
//! the eigensolver, exhaustive code enumeration, and one dissipator
//! evaluation.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use stabgap::{
    diagonalize, distance, encode, evolve_closed, five_qubit_code, four_qubit_code, lindblad_rhs,
    verify_no_3qubit_code, NoiseModel, PauliSum, Schedule, SpectralDensity,
};
use stabgap_bench::{dense_two_local, striped_string};
use std::hint::black_box;

fn pauli_products(c: &mut Criterion) {
    let a = striped_string(32);
    let b = striped_string(32).multiply(&a).unwrap();
    c.bench_function("string_multiply_32q", |bench| {
        bench.iter(|| black_box(&a).multiply(black_box(&b)).unwrap())
    });

    let left = dense_two_local(8);
    let right = dense_two_local(8);
    c.bench_function("sum_multiply_8q_dense", |bench| {
        bench.iter(|| stabgap::pauli::multiply_sums(black_box(&left), black_box(&right)).unwrap())
    });
}

fn matrix_assembly(c: &mut Criterion) {
    let mut group = c.benchmark_group("to_matrix");
    for n in [6usize, 8, 10] {
        let sum = dense_two_local(n);
        group.bench_with_input(BenchmarkId::from_parameter(n), &sum, |bench, sum| {
            bench.iter(|| sum.to_matrix().unwrap())
        });
    }
    group.finish();
}

fn eigensolver(c: &mut Criterion) {
    let mut group = c.benchmark_group("diagonalize");
    group.sample_size(20);
    for n in [6usize, 8] {
        let matrix = dense_two_local(n).to_matrix().unwrap();
        group.bench_with_input(BenchmarkId::from_parameter(n), &matrix, |bench, m| {
            bench.iter(|| diagonalize(black_box(m)).unwrap())
        });
    }
    group.finish();
}

fn code_enumeration(c: &mut Criterion) {
    c.bench_function("distance_five_qubit", |bench| {
        let code = five_qubit_code();
        bench.iter(|| distance(black_box(&code)).unwrap())
    });
    c.bench_function("no_3qubit_code_search", |bench| {
        bench.iter(verify_no_3qubit_code)
    });
}

fn dissipator(c: &mut Criterion) {
    let field: PauliSum = PauliSum::parse("1 Z").unwrap();
    let encoded = encode(&field, &four_qubit_code(), 2.0).unwrap();
    let h = encoded.total().to_matrix().unwrap();
    let rho = encoded.codespace_projector().unwrap().mapv(|v| v / 2.0);
    let noise = NoiseModel::new(2.0, 0.1, SpectralDensity::Constant, 1.0).unwrap();
    c.bench_function("lindblad_rhs_16dim", |bench| {
        bench.iter(|| lindblad_rhs(black_box(&h), black_box(&rho), &noise).unwrap())
    });
}

fn closed_sweep(c: &mut Criterion) {
    let h0 = PauliSum::parse("-1 X").unwrap();
    let h1 = PauliSum::parse("-1 Z").unwrap();
    let schedule = Schedule::new(h0, h1, 5.0).unwrap();
    let mut group = c.benchmark_group("evolve_closed");
    group.sample_size(20);
    group.bench_function("bare_T5", |bench| {
        bench.iter(|| evolve_closed(black_box(&schedule), Some(0.01), None, 14).unwrap())
    });
    group.finish();
}

criterion_group!(
    kernels,
    pauli_products,
    matrix_assembly,
    eigensolver,
    code_enumeration,
    dissipator,
    closed_sweep
);
criterion_main!(kernels);
