//! Classification by enumerating systematic generators `(I_k | A)` with the
//! rows of `A` in nondecreasing order.
//!
//! Rows of `A` are `r`-bit integers whose most significant bit is the first
//! column of `A`. Permuting rows of `A` together with the identity part gives
//! an equivalent code, so sorted row sequences suffice; equal rows give a
//! weight-2 codeword and are excluded when `d >= 3`.

use rayon::prelude::*;

use crate::code::LinearCode;
use crate::equivalence::canonical_rows;
use crate::gf2::{self, parity};

use super::SearchStats;

struct Search {
    n: usize,
    k: usize,
    r: usize,
    d: usize,
    strict: bool,
    cands: Vec<u64>,
}

impl Search {
    fn row_word(&self, i: usize, a: u64) -> u64 {
        let rev = a.reverse_bits() >> (64 - self.r);
        (1u64 << i) | (rev << self.k)
    }

    fn is_lcd(&self, rows: &[u64]) -> bool {
        let gram: Vec<u64> = rows
            .iter()
            .map(|&a| rows.iter().enumerate().fold(0u64, |acc, (j, &b)| acc | ((parity(a & b) as u64) << j)))
            .collect();
        gf2::rank_of(&gram) == rows.len()
    }

    /// `sums` holds `(xor of A rows, subset size)` for subsets of size <= d - 2.
    fn go(&self, chosen: &mut Vec<u64>, start: usize, sums: &[(u64, usize)], out: &mut Vec<Vec<u64>>, nodes: &mut u64) {
        *nodes += 1;
        if chosen.len() == self.k {
            let rows: Vec<u64> = chosen.iter().enumerate().map(|(i, &a)| self.row_word(i, a)).collect();
            if self.is_lcd(&rows) {
                out.push(canonical_rows(self.n, &rows));
            }
            return;
        }
        let limit = self.d.saturating_sub(2);
        for idx in start..self.cands.len() {
            let x = self.cands[idx];
            if !sums.iter().all(|&(s, sz)| sz + 1 + ((s ^ x).count_ones() as usize) >= self.d) {
                continue;
            }
            let mut next = sums.to_vec();
            next.extend(sums.iter().filter(|&&(_, sz)| sz < limit).map(|&(s, sz)| (s ^ x, sz + 1)));
            chosen.push(x);
            self.go(chosen, if self.strict { idx + 1 } else { idx }, &next, out, nodes);
            chosen.pop();
        }
    }
}

pub(crate) fn classify(n: usize, k: usize, d: usize, stats: &mut SearchStats) -> Vec<LinearCode> {
    let r = n - k;
    if r == 0 {
        return if d <= 1 { vec![LinearCode::full_space(n).expect("n <= 64")] } else { Vec::new() };
    }
    let search = Search {
        n,
        k,
        r,
        d,
        strict: d >= 3,
        cands: (0..1u64 << r).filter(|a| a.count_ones() as usize + 1 >= d).collect(),
    };
    let results: Vec<(Vec<Vec<u64>>, u64)> = (0..search.cands.len())
        .into_par_iter()
        .map(|first| {
            let mut out = Vec::new();
            let mut nodes = 0;
            let x = search.cands[first];
            let limit = d.saturating_sub(2);
            let mut sums = vec![(0u64, 0usize)];
            if limit >= 1 {
                sums.push((x, 1));
            }
            let mut chosen = vec![x];
            let start = if search.strict { first + 1 } else { first };
            search.go(&mut chosen, start, &sums, &mut out, &mut nodes);
            (out, nodes)
        })
        .collect();
    let mut all = Vec::new();
    for (out, nodes) in results {
        stats.nodes += nodes;
        stats.canonical_forms += out.len() as u64;
        all.extend(out);
    }
    all.par_sort_unstable();
    all.dedup();
    stats.level_sizes.push(all.len());
    all.into_iter().map(|rows| LinearCode::from_rows_unchecked(n, rows)).collect()
}
