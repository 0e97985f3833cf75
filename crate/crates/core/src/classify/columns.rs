//! Classification by growing parity-check matrices one column at a time.
//!
//! With the redundancy `r = n - k` fixed, every `[n, k, >= d]` code has an
//! `r x n` parity-check matrix `H` of rank `r` in which any `d - 1` columns
//! are independent. Deleting a column outside some information set of the
//! row space of `H` keeps rank `r` and the independence property, so every
//! such `H` is reached from an `r x (r + 1)` seed by appending columns. The
//! seeds are the parity checks of the `[r + 1, 1, w]` codes with `w >= d`.

use rayon::prelude::*;

use crate::code::LinearCode;
use crate::equivalence::canonical_rows;
use crate::gf2::{self, parity};

use super::SearchStats;

/// Parity-check matrix of the repetition-like `[r + 1, 1, w]` code.
fn seed(r: usize, w: usize) -> Vec<u64> {
    let gen = LinearCode::from_rows_unchecked(r + 1, vec![gf2::mask(w)]);
    gen.dual().rref_rows()
}

/// Bitset over `GF(2)^r` of the sums of at most `depth` columns.
fn reachable(cols: &[u64], r: usize, depth: usize) -> Vec<bool> {
    let mut seen = vec![false; 1 << r];
    seen[0] = true;
    let mut frontier = vec![0u64];
    for _ in 0..depth {
        let mut next = Vec::new();
        for &v in &frontier {
            for &c in cols {
                let w = (v ^ c) as usize;
                if !seen[w] {
                    seen[w] = true;
                    next.push(w as u64);
                }
            }
        }
        if next.is_empty() {
            break;
        }
        frontier = next;
    }
    seen
}

fn columns_of(rows: &[u64], len: usize) -> Vec<u64> {
    (0..len)
        .map(|j| rows.iter().enumerate().fold(0u64, |acc, (i, &h)| acc | (((h >> j) & 1) << i)))
        .collect()
}

fn gram_rank(rows: &[u64]) -> usize {
    let gram: Vec<u64> = rows
        .iter()
        .map(|&a| rows.iter().enumerate().fold(0u64, |acc, (j, &b)| acc | ((parity(a & b) as u64) << j)))
        .collect();
    gf2::rank_of(&gram)
}

/// Children of `h` (an `r x len` matrix) obtained by appending a column that
/// keeps every `d - 1` columns independent.
fn extend(h: &[u64], r: usize, len: usize, d: usize) -> Vec<Vec<u64>> {
    let blocked = if d <= 1 {
        vec![false; 1 << r]
    } else {
        reachable(&columns_of(h, len), r, d - 2)
    };
    (0..1u64 << r)
        .filter(|&c| !blocked[c as usize])
        .map(|c| {
            h.iter()
                .enumerate()
                .map(|(i, &row)| row | (((c >> i) & 1) << len))
                .collect()
        })
        .collect()
}

/// All LCD `[n, n - r, >= d]` codes up to equivalence, as canonical generators.
pub(crate) fn classify(n: usize, k: usize, d: usize, stats: &mut SearchStats) -> Vec<LinearCode> {
    let r = n - k;
    if r == 0 {
        return if d <= 1 { vec![LinearCode::full_space(n).expect("n <= 64")] } else { Vec::new() };
    }
    if d > r + 1 {
        return Vec::new();
    }

    let mut level: Vec<Vec<u64>> = (d.max(1)..=r + 1).map(|w| canonical_rows(r + 1, &seed(r, w))).collect();
    level.sort_unstable();
    level.dedup();
    stats.level_sizes.push(level.len());

    for len in r + 1..n {
        let last = len + 1 == n;
        let (children, nodes): (Vec<Vec<Vec<u64>>>, Vec<u64>) = level
            .par_iter()
            .map(|h| {
                let kids = extend(h, r, len, d);
                let count = kids.len() as u64;
                // The LCD property is an invariant, so at the last step it
                // can be tested before canonicalisation.
                let kept: Vec<Vec<u64>> = kids
                    .into_iter()
                    .filter(|c| !last || gram_rank(c) == r)
                    .map(|c| canonical_rows(len + 1, &c))
                    .collect();
                (kept, count)
            })
            .unzip();
        stats.nodes += nodes.iter().sum::<u64>();
        let mut next: Vec<Vec<u64>> = children.into_iter().flatten().collect();
        stats.canonical_forms += next.len() as u64;
        next.par_sort_unstable();
        next.dedup();
        stats.level_sizes.push(next.len());
        level = next;
    }

    if n == r + 1 {
        level.retain(|h| gram_rank(h) == r);
    }
    level
        .par_iter()
        .map(|h| LinearCode::from_rows_unchecked(n, h.clone()).dual())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seeds_have_rank_r() {
        for r in 1..6 {
            for w in 1..=r + 1 {
                let h = seed(r, w);
                assert_eq!(h.len(), r);
                assert_eq!(gf2::rank_of(&h), r);
            }
        }
    }

    #[test]
    fn reachable_counts_small_sums() {
        let cols = [0b001, 0b010, 0b100];
        let one = reachable(&cols, 3, 1);
        assert_eq!(one.iter().filter(|&&b| b).count(), 4);
        let two = reachable(&cols, 3, 2);
        assert_eq!(two.iter().filter(|&&b| b).count(), 7);
    }
}
