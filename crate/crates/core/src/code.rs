//! Binary linear codes given by a full-rank generator matrix.

use std::fmt;
use std::hash::{Hash, Hasher};

use crate::error::{Error, Result};
use crate::gf2::{self, BinaryMatrix, BitVector};

/// Calls `f` on every codeword spanned by `rows`, including zero, in Gray-code order.
#[inline]
pub(crate) fn for_each_codeword(rows: &[u64], mut f: impl FnMut(u64)) {
    assert!(rows.len() < 40, "too many rows to enumerate codewords");
    let mut word = 0u64;
    f(word);
    for i in 1u64..1 << rows.len() {
        word ^= rows[i.trailing_zeros() as usize];
        f(word);
    }
}

/// Weight distribution `A_0..A_n` of a code.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct WeightEnumerator {
    coeffs: Vec<u64>,
}

impl WeightEnumerator {
    pub fn new(coeffs: Vec<u64>) -> Self {
        Self { coeffs }
    }

    /// Sums `(exponent, coefficient)` terms into a distribution of length `n + 1`.
    pub fn from_terms(n: usize, terms: impl IntoIterator<Item = (usize, u64)>) -> Result<Self> {
        let mut coeffs = vec![0; n + 1];
        for (e, c) in terms {
            if e > n {
                return Err(Error::InvalidParameter(format!("exponent {e} exceeds length {n}")));
            }
            coeffs[e] += c;
        }
        Ok(Self { coeffs })
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    /// Length of the code, i.e. the largest possible exponent.
    pub fn length(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    /// Number of codewords.
    pub fn total(&self) -> u64 {
        self.coeffs.iter().sum()
    }

    /// Smallest nonzero exponent with a nonzero coefficient.
    pub fn min_weight(&self) -> Option<usize> {
        self.coeffs.iter().skip(1).position(|&a| a > 0).map(|i| i + 1)
    }
}

impl fmt::Display for WeightEnumerator {
    /// Ascending exponents, e.g. `1 + 3y + 3y^2 + y^3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (e, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match (e, a) {
                (0, a) => write!(f, "{a}")?,
                (1, 1) => f.write_str("y")?,
                (1, a) => write!(f, "{a}y")?,
                (e, 1) => write!(f, "y^{e}")?,
                (e, a) => write!(f, "{a}y^{e}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// An `[n, k]` binary linear code.
///
/// Equality and hashing compare row spaces, not generator matrices.
#[derive(Clone, Debug)]
pub struct LinearCode {
    gen: BinaryMatrix,
}

impl LinearCode {
    /// Wraps a generator matrix whose rows must be linearly independent.
    pub fn new(gen: BinaryMatrix) -> Result<Self> {
        let rank = gen.rank();
        if rank != gen.nrows() {
            return Err(Error::NotFullRank { rows: gen.nrows(), rank });
        }
        Ok(Self { gen })
    }

    pub fn from_rows(n: usize, rows: Vec<u64>) -> Result<Self> {
        Self::new(BinaryMatrix::from_rows(n, rows)?)
    }

    pub fn parse<S: AsRef<str>>(lines: &[S]) -> Result<Self> {
        Self::new(BinaryMatrix::parse_rows(lines)?)
    }

    /// The code spanned by the rows of `m`, whatever their rank.
    pub fn from_spanning(m: &BinaryMatrix) -> Self {
        let e = m.rref();
        let rows = e.matrix.rows()[..e.rank()].to_vec();
        Self { gen: BinaryMatrix::from_rows_unchecked(m.ncols(), rows) }
    }

    pub(crate) fn from_rows_unchecked(n: usize, rows: Vec<u64>) -> Self {
        debug_assert_eq!(gf2::rank_of(&rows), rows.len());
        Self { gen: BinaryMatrix::from_rows_unchecked(n, rows) }
    }

    /// The `[n, 0]` code `{0}`.
    pub fn zero(n: usize) -> Result<Self> {
        Ok(Self { gen: BinaryMatrix::zeros(0, n)? })
    }

    /// The `[n, n]` code `GF(2)^n`.
    pub fn full_space(n: usize) -> Result<Self> {
        Ok(Self { gen: BinaryMatrix::identity(n)? })
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.gen.ncols()
    }

    #[inline]
    pub fn k(&self) -> usize {
        self.gen.nrows()
    }

    pub fn generator(&self) -> &BinaryMatrix {
        &self.gen
    }

    pub(crate) fn rows(&self) -> &[u64] {
        self.gen.rows()
    }

    /// Same code with its generator in reduced row echelon form.
    pub fn rref(&self) -> LinearCode {
        Self { gen: self.gen.rref().matrix }
    }

    pub(crate) fn rref_rows(&self) -> Vec<u64> {
        let mut rows = self.gen.rows().to_vec();
        gf2::rref_in_place(&mut rows, self.n());
        rows
    }

    pub fn contains(&self, word: &BitVector) -> bool {
        if word.len() != self.n() {
            return false;
        }
        let mut rows = self.gen.rows().to_vec();
        rows.push(word.word());
        gf2::rank_of(&rows) == self.k()
    }

    /// Calls `f` on every codeword, zero included.
    pub fn for_each_codeword(&self, f: impl FnMut(u64)) {
        for_each_codeword(self.gen.rows(), f)
    }

    pub fn weight_enumerator(&self) -> WeightEnumerator {
        let mut coeffs = vec![0u64; self.n() + 1];
        self.for_each_codeword(|w| coeffs[w.count_ones() as usize] += 1);
        WeightEnumerator { coeffs }
    }

    /// Minimum weight of a nonzero codeword, by exhaustive sweep.
    pub fn min_weight(&self) -> Result<usize> {
        if self.k() == 0 {
            return Err(Error::ZeroCode);
        }
        let mut best = u32::MAX;
        self.for_each_codeword(|w| {
            if w != 0 {
                best = best.min(w.count_ones());
            }
        });
        Ok(best as usize)
    }

    /// The `[n, n - k]` dual code.
    pub fn dual(&self) -> LinearCode {
        Self { gen: self.gen.null_space_basis() }
    }

    /// True iff `G G^T` is nonsingular.
    pub fn is_lcd(&self) -> bool {
        gf2::rank_of(self.gen.gram().rows()) == self.k()
    }

    /// Whether the dual code has minimum weight at least `t`, i.e. every
    /// `t - 1` columns of the generator are linearly independent.
    pub fn dual_min_weight_at_least(&self, t: usize) -> bool {
        let cols: Vec<u64> = (0..self.n()).map(|j| self.gen.column_word(j)).collect();
        match t {
            0 | 1 => true,
            2 => cols.iter().all(|&c| c != 0),
            3 => {
                let mut sorted = cols.clone();
                sorted.sort_unstable();
                sorted.dedup();
                sorted.len() == cols.len() && sorted[0] != 0
            }
            _ => {
                let d = self.dual();
                d.k() == 0 || d.min_weight().is_ok_and(|w| w >= t)
            }
        }
    }

    /// Generator of the form `(I_k | M)` for an equivalent code.
    ///
    /// Returns the code and the permutation applied: column `i` of the result
    /// is column `perm[i]` of `self`.
    pub fn standard_form(&self) -> (LinearCode, Vec<usize>) {
        let e = self.gen.rref();
        let mut perm = e.pivots.clone();
        perm.extend((0..self.n()).filter(|j| !e.pivots.contains(j)));
        let gen = e.matrix.select_columns(&perm);
        (Self { gen }, perm)
    }

    /// Column `i` of the result is column `perm[i]` of `self`.
    pub fn permute_columns(&self, perm: &[usize]) -> LinearCode {
        assert_eq!(perm.len(), self.n(), "permutation length");
        Self { gen: self.gen.select_columns(perm) }
    }

    /// Removes both columns of the leftmost pair of identical columns outside
    /// the identity block of the standard form. `G G^T` is unchanged, so an
    /// LCD input stays LCD.
    pub fn delete_identical_column_pair(&self) -> Result<LinearCode> {
        let (std, _) = self.standard_form();
        let k = self.k();
        let cols: Vec<u64> = (0..self.n()).map(|j| std.gen.column_word(j)).collect();
        for i in k..cols.len() {
            if let Some(j) = (i + 1..cols.len()).find(|&j| cols[j] == cols[i]) {
                return LinearCode::new(std.gen.remove_columns(&[i, j]));
            }
        }
        Err(Error::NoIdenticalColumnPair)
    }
}

impl PartialEq for LinearCode {
    fn eq(&self, other: &Self) -> bool {
        self.n() == other.n() && self.k() == other.k() && self.rref_rows() == other.rref_rows()
    }
}

impl Eq for LinearCode {}

impl Hash for LinearCode {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.n().hash(state);
        self.rref_rows().hash(state);
    }
}

impl fmt::Display for LinearCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.gen.fmt(f)
    }
}

/// Largest `d` with `sum_{i<k} ceil(d / 2^i) <= n`.
pub fn griesmer_max_d(n: usize, k: usize) -> usize {
    assert!(k >= 1 && k <= n, "need 1 <= k <= n");
    let length = |d: usize| (0..k).map(|i| d.div_ceil(1 << i.min(63))).sum::<usize>();
    (1..=n).rev().find(|&d| length(d) <= n).unwrap_or(0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn code(lines: &[&str]) -> LinearCode {
        LinearCode::parse(lines).unwrap()
    }

    #[test]
    fn dual_examples() {
        let full = LinearCode::full_space(4).unwrap();
        let d = full.dual();
        assert_eq!((d.n(), d.k()), (4, 0));
        assert_eq!(d.dual(), full);

        let rep = code(&["11"]);
        assert_eq!(rep.dual(), rep);
    }

    #[test]
    fn lcd_examples() {
        assert!(LinearCode::full_space(5).unwrap().is_lcd());
        assert!(!code(&["11"]).is_lcd());
        assert!(code(&["1011", "0111"]).is_lcd());
    }

    #[test]
    fn min_weight_examples() {
        assert_eq!(LinearCode::full_space(6).unwrap().min_weight().unwrap(), 1);
        assert_eq!(LinearCode::zero(3).unwrap().min_weight(), Err(Error::ZeroCode));
        // D_{6,5}
        let d65 = code(&["100010", "010010", "001001", "000101"]);
        assert_eq!(d65.min_weight().unwrap(), 2);
    }

    #[test]
    fn weight_enumerator_examples() {
        let d65 = code(&["100010", "010010", "001001", "000101"]);
        assert_eq!(d65.weight_enumerator().to_string(), "1 + 6y^2 + 9y^4");
        let d61 = code(&["100011", "010000", "001000", "000100"]);
        assert_eq!(
            d61.weight_enumerator().to_string(),
            "1 + 3y + 3y^2 + 2y^3 + 3y^4 + 3y^5 + y^6"
        );
        assert_eq!(LinearCode::full_space(1).unwrap().weight_enumerator().to_string(), "1 + y");
    }

    #[test]
    fn from_terms_sums_collisions() {
        let we = WeightEnumerator::from_terms(4, [(0, 1), (2, 1), (2, 1), (4, 1)]).unwrap();
        assert_eq!(we.coeffs(), &[1, 0, 2, 0, 1]);
        assert!(WeightEnumerator::from_terms(2, [(3, 1)]).is_err());
    }

    #[test]
    fn dual_distance_checks() {
        let c = code(&["1011", "0111"]);
        assert!(c.dual_min_weight_at_least(2));
        assert!(!c.dual_min_weight_at_least(3));
        assert!(!code(&["1010", "0110"]).dual_min_weight_at_least(2));
        let i3 = LinearCode::full_space(3).unwrap();
        assert!(i3.dual_min_weight_at_least(2));
        assert!(i3.dual_min_weight_at_least(3));
    }

    #[test]
    fn delete_pair_examples() {
        // (I_2 | M M), M with columns (1,0) and (1,1)
        let c = code(&["101111", "010101"]);
        assert!(c.is_lcd());
        let d = c.delete_identical_column_pair().unwrap();
        assert_eq!(d.generator(), &BinaryMatrix::parse_rows(&["1011", "0111"]).unwrap());
        assert!(d.is_lcd());

        let distinct = code(&["1001", "0101"]);
        assert_eq!(distinct.delete_identical_column_pair(), Err(Error::NoIdenticalColumnPair));
    }

    #[test]
    fn standard_form_moves_pivots_left() {
        let c = code(&["0110", "0011"]);
        let (s, perm) = c.standard_form();
        assert_eq!(perm, vec![1, 2, 0, 3]);
        assert_eq!(s.generator(), &BinaryMatrix::parse_rows(&["1001", "0101"]).unwrap());
        assert_eq!(c.permute_columns(&perm), s);
    }

    #[test]
    fn griesmer_examples() {
        assert_eq!(griesmer_max_d(7, 3), 4);
        assert_eq!(griesmer_max_d(4, 3), 2);
        for t in 1..6 {
            let n = 7 * t + 2;
            assert_eq!(griesmer_max_d(n, 3), 4 * n / 7 - 1);
        }
        assert_eq!(griesmer_max_d(9, 1), 9);
    }

    fn random_code(max_n: usize) -> impl Strategy<Value = LinearCode> {
        (1..=max_n).prop_flat_map(|n| {
            proptest::collection::vec(0..=gf2::mask(n), 1..=n)
                .prop_map(move |rows| LinearCode::from_spanning(&BinaryMatrix::from_rows(n, rows).unwrap()))
        })
    }

    fn codeword_set(c: &LinearCode) -> std::collections::HashSet<u64> {
        let mut s = std::collections::HashSet::new();
        c.for_each_codeword(|w| {
            s.insert(w);
        });
        s
    }

    proptest! {
        #[test]
        fn lcd_iff_dual_lcd(c in random_code(16)) {
            prop_assume!(c.k() >= 1 && c.k() < c.n());
            prop_assert_eq!(c.is_lcd(), c.dual().is_lcd());
        }

        #[test]
        fn lcd_iff_trivial_hull(c in random_code(8)) {
            prop_assume!(c.k() >= 1);
            let mine = codeword_set(&c);
            let theirs = codeword_set(&c.dual());
            prop_assert_eq!(c.is_lcd(), mine.intersection(&theirs).count() == 1);
        }

        #[test]
        fn enumerator_consistent_with_min_weight(c in random_code(14)) {
            prop_assume!(c.k() >= 1);
            let we = c.weight_enumerator();
            let d = c.min_weight().unwrap();
            prop_assert_eq!(we.coeffs()[0], 1);
            prop_assert_eq!(we.total(), 1u64 << c.k());
            prop_assert!(we.coeffs()[d] >= 1);
            prop_assert!(we.coeffs()[1..d].iter().all(|&a| a == 0));
            prop_assert!(d <= griesmer_max_d(c.n(), c.k()));
        }

        #[test]
        fn dual_is_involution(c in random_code(16)) {
            let d = c.dual();
            prop_assert_eq!(d.k(), c.n() - c.k());
            prop_assert_eq!(d.dual(), c);
        }

        #[test]
        fn dual_distance_shortcuts_match_sweep(c in random_code(10)) {
            prop_assume!(c.k() >= 1 && c.k() < c.n());
            let dual_d = c.dual().min_weight().unwrap();
            prop_assert_eq!(c.dual_min_weight_at_least(2), dual_d >= 2);
            prop_assert_eq!(c.dual_min_weight_at_least(3), dual_d >= 3);
        }

        #[test]
        fn deleting_identical_pair_keeps_lcd(c in random_code(12)) {
            prop_assume!(c.k() >= 1 && c.is_lcd());
            if let Ok(d) = c.delete_identical_column_pair() {
                prop_assert_eq!(d.n(), c.n() - 2);
                prop_assert!(d.is_lcd());
            }
        }
    }
}
