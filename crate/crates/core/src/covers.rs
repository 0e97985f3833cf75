//! LCD codes from k-covers, and the parameterised families of dimensions 2 and 3.
//!
//! A k-cover of `{1, ..., m}` is an ordered sequence of k subsets whose union
//! is the whole set. Repeating the incidence block of a cover an even number of
//! times beside an identity block gives a generator `G` with `G G^T = I_k`.

use std::fmt;

use crate::classify::formula::d_dim2;
use crate::code::{LinearCode, WeightEnumerator};
use crate::error::{Error, Result};
use crate::gf2::{BinaryMatrix, MAX_LEN};

/// An ordered k-cover of an m-set. Points are numbered from 1.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct KCover {
    m: usize,
    /// Subset `i` as a bitmask, point `p` at bit `p - 1`.
    sets: Vec<u64>,
}

impl KCover {
    /// Builds a cover from subsets given as lists of points in `1..=m`.
    pub fn new(m: usize, sets: &[&[usize]]) -> Result<Self> {
        if m == 0 || m > MAX_LEN {
            return Err(Error::InvalidParameter(format!("ground set size {m} out of range")));
        }
        let mut masks = Vec::with_capacity(sets.len());
        for set in sets {
            let mut mask = 0u64;
            for &p in *set {
                if p == 0 || p > m {
                    return Err(Error::InvalidParameter(format!("point {p} not in 1..={m}")));
                }
                mask |= 1 << (p - 1);
            }
            masks.push(mask);
        }
        Self::from_masks(m, masks)
    }

    pub fn from_masks(m: usize, sets: Vec<u64>) -> Result<Self> {
        let full = crate::gf2::mask(m);
        if sets.is_empty() {
            return Err(Error::InvalidParameter("a cover needs at least one set".into()));
        }
        if sets.iter().any(|s| s & !full != 0) {
            return Err(Error::InvalidParameter("subset contains points beyond m".into()));
        }
        if sets.iter().fold(0, |acc, s| acc | s) != full {
            return Err(Error::InvalidParameter("subsets do not cover the ground set".into()));
        }
        Ok(Self { m, sets })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn k(&self) -> usize {
        self.sets.len()
    }

    pub fn set_masks(&self) -> &[u64] {
        &self.sets
    }

    /// Subset `i` (zero-based) as sorted 1-based points.
    pub fn set(&self, i: usize) -> Vec<usize> {
        (0..self.m).filter(|p| self.sets[i] >> p & 1 == 1).map(|p| p + 1).collect()
    }
}

impl fmt::Display for KCover {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for i in 0..self.k() {
            if i > 0 {
                f.write_str(", ")?;
            }
            let pts: Vec<String> = self.set(i).iter().map(ToString::to_string).collect();
            write!(f, "{{{}}}", pts.join(","))?;
        }
        f.write_str(")")
    }
}

fn cover_generator(y: &KCover, ell: usize) -> Result<BinaryMatrix> {
    let k = y.k();
    let n = k + ell * y.m;
    if n > MAX_LEN {
        return Err(Error::TooLong { len: n, max: MAX_LEN });
    }
    let rows = y
        .sets
        .iter()
        .enumerate()
        .map(|(i, &set)| (0..ell).fold(1u64 << i, |acc, b| acc | set << (k + b * y.m)))
        .collect();
    BinaryMatrix::from_rows(n, rows)
}

/// The `[ell*m + k, k]` code whose row `i` is `e_i` followed by `ell` copies
/// of the characteristic vector of `Y_i`.
pub fn cover_code(y: &KCover, ell: usize) -> Result<LinearCode> {
    if ell == 0 || ell % 2 == 1 {
        return Err(Error::InvalidParameter(format!("ell must be even and positive, got {ell}")));
    }
    LinearCode::new(cover_generator(y, ell)?)
}

/// `cover_code(y, 2)` with one extra column: `(1,1)^T` for k = 2 and
/// `(0,1,1)^T` for k = 3.
pub fn cover_code_extended(y: &KCover) -> Result<LinearCode> {
    let extra: u64 = match y.k() {
        2 => 0b11,
        3 => 0b110,
        k => return Err(Error::InvalidParameter(format!("extension needs k in {{2,3}}, got {k}"))),
    };
    let g = cover_generator(y, 2)?;
    let col = BinaryMatrix::from_rows(1, (0..y.k()).map(|i| extra >> i & 1).collect())?;
    LinearCode::new(g.hstack(&col)?)
}

/// Permutations of `0..k` in lexicographic order.
fn permutations(k: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                prefix.push(i);
                go(prefix, used, out);
                prefix.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; k], &mut out);
    out
}

/// One representative per orbit of k-covers of an m-set under permuting the k
/// sets and the m points.
///
/// A cover up to point permutations is the sorted multiset of its point
/// incidence vectors (nonzero k-bit words). A multiset is emitted when no
/// permutation of the k sets maps it to a smaller sorted multiset.
pub fn enumerate_disordered_covers(m: usize, k: usize) -> Vec<KCover> {
    let mut out = Vec::new();
    for_each_disordered_cover(m, k, |cols| {
        let sets = (0..k)
            .map(|i| cols.iter().enumerate().fold(0u64, |acc, (p, c)| acc | (((c >> i & 1) as u64) << p)))
            .collect();
        out.push(KCover { m, sets });
    });
    out
}

pub fn count_disordered_covers(m: usize, k: usize) -> u64 {
    let mut count = 0;
    for_each_disordered_cover(m, k, |_| count += 1);
    count
}

fn for_each_disordered_cover(m: usize, k: usize, mut emit: impl FnMut(&[u32])) {
    assert!(m >= 1 && (1..=8).contains(&k), "need m >= 1 and 1 <= k <= 8");
    let top = (1u32 << k) - 1;
    // image of every incidence word under every set permutation, identity excluded
    let images: Vec<Vec<u32>> = permutations(k)
        .into_iter()
        .skip(1)
        .map(|p| {
            (0..=top)
                .map(|w| (0..k).fold(0u32, |acc, i| acc | ((w >> i & 1) << p[i])))
                .collect()
        })
        .collect();
    let mut cols = vec![1u32; m];
    let mut mapped = vec![0u32; m];
    loop {
        let canonical = images.iter().all(|img| {
            for (dst, &c) in mapped.iter_mut().zip(&cols) {
                *dst = img[c as usize];
            }
            mapped.sort_unstable();
            mapped >= cols
        });
        if canonical {
            emit(&cols);
        }
        // next nondecreasing sequence over 1..=top
        let Some(i) = (0..m).rev().find(|&i| cols[i] < top) else {
            return;
        };
        let v = cols[i] + 1;
        cols[i..].iter_mut().for_each(|c| *c = v);
    }
}

/// Parameters of the dimension-2 family `C^delta(a, b, c)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Dim2Params {
    pub a: usize,
    pub b: usize,
    pub c: usize,
    pub delta: u8,
}

impl Dim2Params {
    pub fn new(a: usize, b: usize, c: usize, delta: u8) -> Self {
        assert!(delta <= 1);
        Self { a, b, c, delta }
    }

    pub fn length(&self) -> usize {
        2 * (self.a + self.b + self.c) + 2 + self.delta as usize
    }
}

/// Columns of `M(a,b,c)` as 2-bit words, row 1 at bit 0.
fn dim2_block(p: &Dim2Params) -> Vec<u64> {
    let mut cols = vec![0b11; p.a];
    cols.extend(std::iter::repeat_n(0b01, p.b));
    cols.extend(std::iter::repeat_n(0b10, p.c));
    cols
}

fn from_columns(k: usize, cols: &[u64]) -> Result<BinaryMatrix> {
    if cols.len() > MAX_LEN {
        return Err(Error::TooLong { len: cols.len(), max: MAX_LEN });
    }
    let rows = (0..k)
        .map(|i| cols.iter().enumerate().fold(0u64, |acc, (j, c)| acc | ((c >> i & 1) << j)))
        .collect();
    BinaryMatrix::from_rows(cols.len(), rows)
}

fn identity_then(k: usize, block: &[u64], extra: Option<u64>) -> Vec<u64> {
    let mut cols: Vec<u64> = (0..k).map(|i| 1 << i).collect();
    cols.extend_from_slice(block);
    cols.extend_from_slice(block);
    cols.extend(extra);
    cols
}

/// `C^delta(a,b,c)` with generator `(I_2 | M | M)` plus `(1,1)^T` when `delta = 1`.
pub fn code_dim2(p: &Dim2Params) -> Result<LinearCode> {
    let cols = identity_then(2, &dim2_block(p), (p.delta == 1).then_some(0b11));
    LinearCode::new(from_columns(2, &cols)?)
}

pub fn we_formula_dim2(p: &Dim2Params) -> WeightEnumerator {
    let (a, b, c, d) = (p.a, p.b, p.c, p.delta as usize);
    WeightEnumerator::from_terms(
        p.length(),
        [(0, 1), (1 + 2 * (a + b) + d, 1), (1 + 2 * (a + c) + d, 1), (2 + 2 * (b + c), 1)],
    )
    .expect("exponents never exceed the length")
}

/// Parameters of the dimension-3 family `C^delta(a, b, c, d, e, f, g)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Dim3Params {
    pub a: usize,
    pub b: usize,
    pub c: usize,
    pub d: usize,
    pub e: usize,
    pub f: usize,
    pub g: usize,
    pub delta: u8,
}

impl Dim3Params {
    pub fn new(t: [usize; 7], delta: u8) -> Self {
        assert!(delta <= 1);
        let [a, b, c, d, e, f, g] = t;
        Self { a, b, c, d, e, f, g, delta }
    }

    pub fn tuple(&self) -> [usize; 7] {
        [self.a, self.b, self.c, self.d, self.e, self.f, self.g]
    }

    pub fn block_len(&self) -> usize {
        self.tuple().iter().sum()
    }

    pub fn length(&self) -> usize {
        2 * self.block_len() + 3 + self.delta as usize
    }

    /// Exponents of the seven nonzero codewords, in the order
    /// r1, r2, r3, r1+r2, r1+r3, r2+r3, r1+r2+r3.
    fn weights(&self) -> [usize; 7] {
        let [a, b, c, d, e, f, g] = self.tuple();
        let dl = self.delta as usize;
        [
            1 + 2 * (a + b + f + g),
            1 + 2 * (a + c + e + g) + dl,
            1 + 2 * (a + d + e + f) + dl,
            2 + 2 * (b + c + e + f) + dl,
            2 + 2 * (b + d + e + g) + dl,
            2 + 2 * (c + d + f + g),
            3 + 2 * (a + b + c + d),
        ]
    }
}

/// Columns of `M(a,...,g)` as 3-bit words, row 1 at bit 0.
fn dim3_block(p: &Dim3Params) -> Vec<u64> {
    const PATTERNS: [u64; 7] = [0b111, 0b001, 0b010, 0b100, 0b110, 0b101, 0b011];
    p.tuple()
        .iter()
        .zip(PATTERNS)
        .flat_map(|(&count, pat)| std::iter::repeat_n(pat, count))
        .collect()
}

/// `C^delta(a,...,g)` with generator `(I_3 | M | M)` plus `(0,1,1)^T` when `delta = 1`.
pub fn code_dim3(p: &Dim3Params) -> Result<LinearCode> {
    let cols = identity_then(3, &dim3_block(p), (p.delta == 1).then_some(0b110));
    LinearCode::new(from_columns(3, &cols)?)
}

/// `D(a,...,g)`, the code generated by `M(a,...,g)` alone. `delta` is ignored.
pub fn code_dim3_raw(p: &Dim3Params) -> Result<LinearCode> {
    LinearCode::new(from_columns(3, &dim3_block(p))?)
}

pub fn we_formula_dim3(p: &Dim3Params) -> WeightEnumerator {
    WeightEnumerator::from_terms(
        p.length(),
        std::iter::once((0, 1)).chain(p.weights().into_iter().map(|w| (w, 1))),
    )
    .expect("exponents never exceed the length")
}

/// All `(a, b, c, delta)` with `b <= c` whose code has length `n` and
/// minimum weight at least `d(n, 2)`.
pub fn solve_params_dim2(n: usize) -> Vec<Dim2Params> {
    assert!(n >= 4, "need n >= 4");
    let target = d_dim2(n);
    let delta = (n % 2) as u8;
    let m = (n - 2 - delta as usize) / 2;
    let mut out = Vec::new();
    for a in 0..=m {
        for b in 0..=m - a {
            let c = m - a - b;
            let p = Dim2Params::new(a, b, c, delta);
            let dl = delta as usize;
            if b <= c
                && target <= 1 + 2 * (a + b) + dl
                && target <= 1 + 2 * (a + c) + dl
                && target <= 2 + 2 * (b + c)
            {
                out.push(p);
            }
        }
    }
    out
}

/// Integer interval `[lo, hi]` clipped at zero; empty when `lo > hi`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Interval {
    pub lo: i64,
    pub hi: i64,
}

impl Interval {
    fn contains(&self, x: usize) -> bool {
        (self.lo..=self.hi).contains(&(x as i64))
    }
}

/// The bounding intervals `(R1, R2)` that any solution of the dimension-3
/// weight conditions must respect, for block size `m`, target `alpha`.
pub fn dim3_bounds(m: usize, alpha: usize, delta: u8) -> (Interval, Interval) {
    let (m, alpha, dl) = (m as i64, alpha as i64, i64::from(delta));
    // bounds scaled by 4 to stay in integers
    let r1 = Interval {
        lo: (4 * alpha - 4 * m - 2 * (3 + dl)).div_euclid(4)
            + i64::from((4 * alpha - 4 * m - 2 * (3 + dl)).rem_euclid(4) != 0),
        hi: (4 * m - 3 * alpha + 2 * (3 + dl)).div_euclid(4),
    };
    let r2 = Interval {
        lo: (4 * alpha - 4 * m - 2 * (4 + dl)).div_euclid(4)
            + i64::from((4 * alpha - 4 * m - 2 * (4 + dl)).rem_euclid(4) != 0),
        hi: (4 * m - 3 * alpha + 2 * (2 + dl)).div_euclid(4),
    };
    (Interval { lo: r1.lo.max(0), ..r1 }, Interval { lo: r2.lo.max(0), ..r2 })
}

fn dim3_ordered(p: &Dim3Params) -> bool {
    if p.delta == 0 {
        p.b <= p.c && p.c <= p.d
    } else {
        p.c <= p.d
    }
}

fn dim3_meets(p: &Dim3Params, alpha: usize) -> bool {
    p.weights().iter().all(|&w| alpha <= w)
}

/// All 7-tuples with `delta` fixed by the parity of `n`, length `n`, every
/// nonzero codeword of weight at least `alpha`, and the normalising order
/// (`b <= c <= d` when `delta = 0`, `c <= d` when `delta = 1`).
pub fn solve_params_dim3(n: usize, alpha: usize) -> Vec<Dim3Params> {
    assert!(n >= 5 && alpha >= 1, "need n >= 5 and alpha >= 1");
    let delta = ((n - 3) % 2) as u8;
    let m = (n - 3 - delta as usize) / 2;
    let (r1, r2) = dim3_bounds(m, alpha, delta);
    // which variables (a..g) lie in R1; the rest lie in R2
    let in_r1: [bool; 7] = if delta == 0 {
        [true, false, false, false, true, true, true]
    } else {
        [true, false, false, false, false, true, true]
    };
    let range: Vec<Interval> = in_r1.iter().map(|&r| if r { r1 } else { r2 }).collect();
    if range.iter().any(|r| r.lo > r.hi) {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut t = [0usize; 7];
    fn go(
        idx: usize,
        left: usize,
        t: &mut [usize; 7],
        range: &[Interval],
        delta: u8,
        alpha: usize,
        out: &mut Vec<Dim3Params>,
    ) {
        if idx == 6 {
            if range[6].contains(left) {
                t[6] = left;
                let p = Dim3Params::new(*t, delta);
                if dim3_ordered(&p) && dim3_meets(&p, alpha) {
                    out.push(p);
                }
            }
            return;
        }
        let hi = range[idx].hi.min(left as i64);
        for x in range[idx].lo..=hi {
            t[idx] = x as usize;
            go(idx + 1, left - x as usize, t, range, delta, alpha, out);
        }
    }
    go(0, m, &mut t, &range, delta, alpha, &mut out);
    out
}

/// Same set as [`solve_params_dim3`] without the interval pruning.
pub fn solve_params_dim3_exhaustive(n: usize, alpha: usize) -> Vec<Dim3Params> {
    let delta = ((n - 3) % 2) as u8;
    let m = (n - 3 - delta as usize) / 2;
    let mut out = Vec::new();
    let mut t = [0usize; 7];
    fn go(idx: usize, left: usize, t: &mut [usize; 7], delta: u8, alpha: usize, out: &mut Vec<Dim3Params>) {
        if idx == 6 {
            t[6] = left;
            let p = Dim3Params::new(*t, delta);
            if dim3_ordered(&p) && dim3_meets(&p, alpha) {
                out.push(p);
            }
            return;
        }
        for x in 0..=left {
            t[idx] = x;
            go(idx + 1, left - x, t, delta, alpha, out);
        }
    }
    go(0, m, &mut t, delta, alpha, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rows(c: &LinearCode) -> Vec<String> {
        (0..c.k()).map(|i| c.generator().row(i).to_string()).collect()
    }

    #[test]
    fn small_cover_codes() {
        let y = KCover::new(1, &[&[1], &[1]]).unwrap();
        let c = cover_code(&y, 2).unwrap();
        assert_eq!(rows(&c), ["1011", "0111"]);

        let y = KCover::new(3, &[&[1, 2, 3], &[1, 3], &[1, 2]]).unwrap();
        let c = cover_code(&y, 2).unwrap();
        assert_eq!(rows(&c), ["100111111", "010101101", "001110110"]);
        assert!(c.is_lcd());
        assert!(cover_code(&y, 3).is_err());
        assert!(cover_code(&y, 0).is_err());
    }

    #[test]
    fn longer_repetitions() {
        let y = KCover::new(3, &[&[1, 2], &[2, 3], &[3]]).unwrap();
        for ell in [2, 4, 6] {
            let c = cover_code(&y, ell).unwrap();
            assert_eq!((c.n(), c.k()), (3 * ell + 3, 3));
            assert!(c.is_lcd());
            assert_eq!(c.generator().gram(), BinaryMatrix::identity(3).unwrap());
            assert!(c.dual_min_weight_at_least(2) && !c.dual_min_weight_at_least(3));
        }
    }

    #[test]
    fn cover_validation() {
        assert!(KCover::new(2, &[&[1], &[]]).is_err());
        assert!(KCover::new(2, &[&[1, 3], &[2]]).is_err());
        assert!(KCover::new(2, &[&[], &[1, 2]]).is_ok());
    }

    #[test]
    fn extended_cover_codes() {
        let y = KCover::new(1, &[&[1], &[1]]).unwrap();
        let c = cover_code_extended(&y).unwrap();
        assert_eq!(rows(&c), ["10111", "01111"]);
        assert!(c.is_lcd());

        let y = KCover::new(2, &[&[1, 2], &[1, 2], &[1]]).unwrap();
        let c = cover_code_extended(&y).unwrap();
        assert_eq!(rows(&c), ["10011110", "01011111", "00110101"]);
        let g = c.generator();
        assert_eq!(g.gram(), BinaryMatrix::parse_rows(&["100", "001", "010"]).unwrap());

        let y4 = KCover::new(1, &[&[1], &[1], &[1], &[1]]).unwrap();
        assert!(cover_code_extended(&y4).is_err());
    }

    #[test]
    fn extended_gram_matrices() {
        let y = KCover::new(2, &[&[1], &[2]]).unwrap();
        let g = cover_code_extended(&y).unwrap();
        assert_eq!(g.generator().gram(), BinaryMatrix::parse_rows(&["01", "10"]).unwrap());
    }

    #[test]
    fn disordered_cover_counts() {
        assert_eq!(count_disordered_covers(1, 1), 1);
        assert_eq!(count_disordered_covers(1, 3), 3);
        assert_eq!(count_disordered_covers(1, 4), 4);
        assert_eq!(count_disordered_covers(2, 3), 9);
        assert_eq!(count_disordered_covers(3, 3), 23);
        assert_eq!(count_disordered_covers(5, 3), 103);
        assert_eq!(enumerate_disordered_covers(3, 3).len(), 23);
    }

    #[test]
    fn dim2_examples() {
        let c = code_dim2(&Dim2Params::new(1, 0, 1, 1)).unwrap();
        assert_eq!((c.n(), c.k(), c.min_weight().unwrap()), (7, 2, 4));
        let i2 = code_dim2(&Dim2Params::new(0, 0, 0, 0)).unwrap();
        assert_eq!(i2, LinearCode::full_space(2).unwrap());
        assert_eq!(we_formula_dim2(&Dim2Params::new(0, 0, 0, 0)).to_string(), "1 + 2y + y^2");
        for t in 1..4 {
            let we = we_formula_dim2(&Dim2Params::new(t - 1, t, t, 0));
            let want = WeightEnumerator::from_terms(6 * t, [(0, 1), (4 * t - 1, 2), (4 * t + 2, 1)]).unwrap();
            assert_eq!(we, want);
            let we = we_formula_dim2(&Dim2Params::new(t, t, t + 1, 1));
            let want = WeightEnumerator::from_terms(6 * t + 5, [(0, 1), (4 * t + 2, 1), (4 * t + 4, 2)]).unwrap();
            assert_eq!(we, want);
        }
    }

    #[test]
    fn dim3_examples() {
        let p = Dim3Params::new([1, 0, 0, 0, 0, 0, 0], 1);
        let c = code_dim3(&p).unwrap();
        assert_eq!(c.n(), 6);
        assert_eq!(c.weight_enumerator().to_string(), "1 + y^2 + 3y^3 + 2y^4 + y^5");
        assert_eq!(we_formula_dim3(&p), c.weight_enumerator());

        let p = Dim3Params::new([1, 0, 0, 0, 1, 1, 1], 0);
        let c = code_dim3(&p).unwrap();
        assert_eq!(c.n(), 11);
        assert_eq!(c.weight_enumerator().to_string(), "1 + y^5 + 3y^6 + 3y^7");

        let z = Dim3Params::new([0; 7], 0);
        assert_eq!(code_dim3(&z).unwrap(), LinearCode::full_space(3).unwrap());
        assert_eq!(we_formula_dim3(&z).to_string(), "1 + 3y + 3y^2 + y^3");
        assert!(code_dim3_raw(&z).is_err());
    }

    #[test]
    fn dim2_parameter_sets() {
        for t in 1..=3 {
            assert_eq!(solve_params_dim2(6 * t + 3), vec![Dim2Params::new(t, t, t, 1)]);
            let mut s = solve_params_dim2(6 * t);
            s.sort();
            let mut want = vec![Dim2Params::new(t - 1, t, t, 0), Dim2Params::new(t, t - 1, t, 0)];
            want.sort();
            assert_eq!(s, want);
            assert_eq!(solve_params_dim2(6 * t + 5).len(), 4);
        }
    }

    #[test]
    fn dim3_parameter_sets() {
        for t in 1..=3 {
            assert_eq!(solve_params_dim3(14 * t + 3, 8 * t + 1), vec![Dim3Params::new([t; 7], 0)]);
            assert!(solve_params_dim3(14 * t, 8 * t).is_empty());
            assert_eq!(solve_params_dim3(14 * t, 8 * t - 1).len(), 2);
        }
    }
}
