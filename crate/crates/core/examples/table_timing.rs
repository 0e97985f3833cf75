//! Recompute the classification table cell by cell and print timings.
//!
//! Usage: `cargo run --release -p lcd-core --example table_timing -- [n_max] [rows]`

use lcd_core::classify::verify_table_with;
use lcd_core::Strategy;

fn main() {
    let mut args = std::env::args().skip(1);
    let n_max = args.next().and_then(|a| a.parse().ok()).unwrap_or(12);
    let strategy = match args.next().as_deref() {
        Some("rows") => Strategy::OrderedRows,
        _ => Strategy::ColumnAugmentation,
    };
    let report = verify_table_with(n_max, strategy, |c| {
        println!(
            "n={:2} k={:2} expected={:?} computed={:?} {:>9.3}s {}",
            c.n,
            c.k,
            c.expected,
            c.computed,
            c.elapsed.as_secs_f64(),
            if c.pass() { "ok" } else { "MISMATCH" }
        );
    })
    .expect("valid n_max");
    println!("total {:.1}s, all pass: {}", report.elapsed.as_secs_f64(), report.all_pass());
}
