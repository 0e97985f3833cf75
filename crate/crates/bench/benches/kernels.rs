use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

use lcd_core::covers::count_disordered_covers;
use lcd_core::{canonical_form, LinearCode};

fn simplex(r: usize) -> LinearCode {
    let n = (1 << r) - 1;
    let rows = (0..r)
        .map(|i| (1..=n as u64).enumerate().fold(0u64, |acc, (j, v)| acc | (((v >> i) & 1) << j)))
        .collect();
    LinearCode::from_rows(n, rows).unwrap()
}

fn kernels(c: &mut Criterion) {
    let s4 = simplex(4);
    let mixed = LinearCode::parse(&["1000110111011", "0100101101110", "0010011110101", "0001111000111"]).unwrap();
    let wide = simplex(4).dual();

    c.bench_function("canonical_form simplex [15,4]", |b| b.iter(|| canonical_form(black_box(&s4))));
    c.bench_function("canonical_form [13,4]", |b| b.iter(|| canonical_form(black_box(&mixed))));
    c.bench_function("min_weight [15,11]", |b| b.iter(|| black_box(&wide).min_weight()));
    c.bench_function("is_lcd [13,4]", |b| b.iter(|| black_box(&mixed).is_lcd()));
    c.bench_function("disordered 3-covers m=6", |b| b.iter(|| count_disordered_covers(black_box(6), 3)));
}

criterion_group!(benches, kernels);
criterion_main!(benches);
