use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

use lcd_core::{classify_lcd, Strategy};

fn cells(c: &mut Criterion) {
    let mut g = c.benchmark_group("classify");
    g.sample_size(10);
    for &(n, k, d) in &[(10, 5, 3), (10, 7, 2), (11, 4, 4)] {
        for (name, s) in [("columns", Strategy::ColumnAugmentation), ("rows", Strategy::OrderedRows)] {
            g.bench_function(format!("[{n},{k},{d}] {name}"), |b| {
                b.iter(|| classify_lcd(black_box(n), k, d, s).unwrap().count())
            });
        }
    }
    g.finish();
}

criterion_group!(benches, cells);
criterion_main!(benches);
