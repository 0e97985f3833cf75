//! Closed forms for the largest minimum weight `d(n, k)` of LCD codes.

use super::table;

/// Where a value of `d(n, k)` comes from.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum DSource {
    Formula,
    Table,
}

/// `d(n, 2)` for `n >= 2`.
pub fn d_dim2(n: usize) -> usize {
    assert!(n >= 2);
    let base = 2 * n / 3;
    if matches!(n % 6, 1..=4) {
        base
    } else {
        base - 1
    }
}

/// `d(n, 3)` for `n >= 3`.
pub fn d_dim3(n: usize) -> usize {
    assert!(n >= 3);
    let base = 4 * n / 7;
    if matches!(n % 7, 3 | 5) {
        base
    } else {
        base - 1
    }
}

/// `d(n, k)` from a closed form (k in {1, 2, 3, n-1, n}) or the embedded
/// classification table (n <= 16); `None` when neither applies.
pub fn d_formula(n: usize, k: usize) -> Option<(usize, DSource)> {
    assert!(k >= 1 && k <= n, "need 1 <= k <= n");
    let odd = n % 2 == 1;
    let closed = match k {
        _ if k == n => Some(1),
        1 => Some(if odd { n } else { n - 1 }),
        _ if k == n - 1 => Some(if odd { 2 } else { 1 }),
        2 => Some(d_dim2(n)),
        3 => Some(d_dim3(n)),
        _ => None,
    };
    closed
        .map(|d| (d, DSource::Formula))
        .or_else(|| table::lookup(n, k).map(|(d, _)| (d, DSource::Table)))
}
