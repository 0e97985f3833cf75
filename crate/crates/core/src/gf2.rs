//! Dense linear algebra over GF(2) for up to 64 coordinates.
//!
//! Every row is a single `u64` word with coordinate `j` stored at bit `j`.
//! Elimination pivots left to right and only swaps rows, so reduced forms are
//! reproducible.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Largest supported vector length / number of matrix columns.
pub const MAX_LEN: usize = 64;

#[inline]
pub(crate) fn mask(len: usize) -> u64 {
    if len >= 64 {
        u64::MAX
    } else {
        (1u64 << len) - 1
    }
}

#[inline]
pub(crate) fn parity(x: u64) -> bool {
    x.count_ones() & 1 == 1
}

fn check_len(len: usize) -> Result<()> {
    if len > MAX_LEN {
        return Err(Error::TooLong { len, max: MAX_LEN });
    }
    Ok(())
}

/// A vector in GF(2)^len, `len <= 64`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct BitVector {
    bits: u64,
    len: u8,
}

impl BitVector {
    pub fn zeros(len: usize) -> Result<Self> {
        check_len(len)?;
        Ok(Self { bits: 0, len: len as u8 })
    }

    pub fn ones(len: usize) -> Result<Self> {
        check_len(len)?;
        Ok(Self { bits: mask(len), len: len as u8 })
    }

    /// Builds a vector from a word; bits at or above `len` must be clear.
    pub fn from_word(len: usize, bits: u64) -> Result<Self> {
        check_len(len)?;
        if bits & !mask(len) != 0 {
            return Err(Error::InvalidParameter(format!(
                "word {bits:#x} has bits beyond length {len}"
            )));
        }
        Ok(Self { bits, len: len as u8 })
    }

    /// Characteristic vector of a set of zero-based coordinates.
    pub fn from_support(len: usize, support: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut v = Self::zeros(len)?;
        for i in support {
            if i >= len {
                return Err(Error::InvalidParameter(format!(
                    "coordinate {i} out of range for length {len}"
                )));
            }
            v.bits |= 1 << i;
        }
        Ok(v)
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.len as usize
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn word(&self) -> u64 {
        self.bits
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.len(), "coordinate {i} out of range");
        self.bits >> i & 1 == 1
    }

    pub fn set(&mut self, i: usize, value: bool) {
        assert!(i < self.len(), "coordinate {i} out of range");
        if value {
            self.bits |= 1 << i;
        } else {
            self.bits &= !(1 << i);
        }
    }

    /// Hamming weight.
    #[inline]
    pub fn weight(&self) -> usize {
        self.bits.count_ones() as usize
    }

    /// Standard inner product over GF(2).
    pub fn dot(&self, other: &BitVector) -> bool {
        debug_assert_eq!(self.len, other.len);
        parity(self.bits & other.bits)
    }

    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len()).filter(move |&i| self.bits >> i & 1 == 1)
    }
}

impl std::ops::BitXor for BitVector {
    type Output = BitVector;

    fn bitxor(self, rhs: BitVector) -> BitVector {
        assert_eq!(self.len, rhs.len, "length mismatch");
        BitVector { bits: self.bits ^ rhs.bits, len: self.len }
    }
}

impl fmt::Display for BitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len() {
            f.write_str(if self.bits >> i & 1 == 1 { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl FromStr for BitVector {
    type Err = Error;

    /// Parses a string of `0`/`1` characters, coordinate 0 first.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        check_len(s.len())?;
        let mut bits = 0u64;
        for (i, ch) in s.chars().enumerate() {
            match ch {
                '0' => {}
                '1' => bits |= 1 << i,
                other => {
                    return Err(Error::Parse {
                        line: 1,
                        message: format!("unexpected character {other:?}"),
                    })
                }
            }
        }
        Ok(Self { bits, len: s.len() as u8 })
    }
}

/// A dense matrix over GF(2) with at most 64 columns.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct BinaryMatrix {
    nrows: usize,
    ncols: usize,
    rows: Vec<u64>,
}

/// Reduced row echelon form together with its pivot columns.
#[derive(Clone, Debug)]
pub struct Echelon {
    pub matrix: BinaryMatrix,
    /// Pivot column of each nonzero row, increasing.
    pub pivots: Vec<usize>,
}

impl Echelon {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

impl BinaryMatrix {
    pub fn zeros(nrows: usize, ncols: usize) -> Result<Self> {
        check_len(ncols)?;
        Ok(Self { nrows, ncols, rows: vec![0; nrows] })
    }

    pub fn identity(n: usize) -> Result<Self> {
        check_len(n)?;
        Ok(Self { nrows: n, ncols: n, rows: (0..n).map(|i| 1u64 << i).collect() })
    }

    /// Builds a matrix from row words; bits at or above `ncols` must be clear.
    pub fn from_rows(ncols: usize, rows: Vec<u64>) -> Result<Self> {
        check_len(ncols)?;
        let m = mask(ncols);
        if let Some(bad) = rows.iter().position(|r| r & !m != 0) {
            return Err(Error::InvalidParameter(format!(
                "row {bad} has bits beyond column {ncols}"
            )));
        }
        Ok(Self { nrows: rows.len(), ncols, rows })
    }

    pub(crate) fn from_rows_unchecked(ncols: usize, rows: Vec<u64>) -> Self {
        debug_assert!(ncols <= MAX_LEN);
        debug_assert!(rows.iter().all(|r| r & !mask(ncols) == 0));
        Self { nrows: rows.len(), ncols, rows }
    }

    pub fn from_bit_vectors(ncols: usize, rows: &[BitVector]) -> Result<Self> {
        if let Some(bad) = rows.iter().position(|r| r.len() != ncols) {
            return Err(Error::DimensionMismatch(format!(
                "row {bad} has length {} but expected {ncols}",
                rows[bad].len()
            )));
        }
        Self::from_rows(ncols, rows.iter().map(BitVector::word).collect())
    }

    /// Parses one row per string of `0`/`1` characters.
    pub fn parse_rows<S: AsRef<str>>(lines: &[S]) -> Result<Self> {
        let mut ncols = None;
        let mut rows = Vec::with_capacity(lines.len());
        for (i, line) in lines.iter().enumerate() {
            let line = line.as_ref().trim();
            let v: BitVector = line.parse().map_err(|e| match e {
                Error::Parse { message, .. } => Error::Parse { line: i + 1, message },
                other => other,
            })?;
            match ncols {
                None => ncols = Some(v.len()),
                Some(c) if c != v.len() => {
                    return Err(Error::Parse {
                        line: i + 1,
                        message: format!("row has {} entries, expected {c}", v.len()),
                    })
                }
                _ => {}
            }
            rows.push(v.word());
        }
        Self::from_rows(ncols.unwrap_or(0), rows)
    }

    #[inline]
    pub fn nrows(&self) -> usize {
        self.nrows
    }

    #[inline]
    pub fn ncols(&self) -> usize {
        self.ncols
    }

    #[inline]
    pub fn rows(&self) -> &[u64] {
        &self.rows
    }

    pub fn into_rows(self) -> Vec<u64> {
        self.rows
    }

    pub fn row(&self, i: usize) -> BitVector {
        BitVector { bits: self.rows[i], len: self.ncols as u8 }
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> bool {
        assert!(j < self.ncols);
        self.rows[i] >> j & 1 == 1
    }

    pub fn set(&mut self, i: usize, j: usize, value: bool) {
        assert!(j < self.ncols);
        if value {
            self.rows[i] |= 1 << j;
        } else {
            self.rows[i] &= !(1 << j);
        }
    }

    /// Column `j` packed as a word with row `i` at bit `i`; needs `nrows <= 64`.
    pub fn column_word(&self, j: usize) -> u64 {
        debug_assert!(self.nrows <= 64);
        self.rows
            .iter()
            .enumerate()
            .fold(0, |acc, (i, r)| acc | ((r >> j & 1) << i))
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(|&r| r == 0)
    }

    pub fn transpose(&self) -> BinaryMatrix {
        assert!(self.nrows <= MAX_LEN, "transpose needs at most 64 rows");
        let rows = (0..self.ncols).map(|j| self.column_word(j)).collect();
        BinaryMatrix { nrows: self.ncols, ncols: self.nrows, rows }
    }

    /// Matrix product over GF(2).
    pub fn mat_mul(&self, other: &BinaryMatrix) -> Result<BinaryMatrix> {
        if self.ncols != other.nrows {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.nrows, self.ncols, other.nrows, other.ncols
            )));
        }
        let bt = other.transpose();
        let rows = self
            .rows
            .iter()
            .map(|&a| {
                bt.rows
                    .iter()
                    .enumerate()
                    .fold(0u64, |acc, (j, &b)| acc | (u64::from(parity(a & b)) << j))
            })
            .collect();
        Ok(BinaryMatrix { nrows: self.nrows, ncols: other.ncols, rows })
    }

    /// `self * self^T`, the Gram matrix of the rows.
    pub fn gram(&self) -> BinaryMatrix {
        let rows = self
            .rows
            .iter()
            .map(|&a| {
                self.rows
                    .iter()
                    .enumerate()
                    .fold(0u64, |acc, (j, &b)| acc | (u64::from(parity(a & b)) << j))
            })
            .collect();
        BinaryMatrix { nrows: self.nrows, ncols: self.nrows, rows }
    }

    pub fn rref(&self) -> Echelon {
        let mut rows = self.rows.clone();
        let pivots = rref_in_place(&mut rows, self.ncols);
        Echelon {
            matrix: BinaryMatrix { nrows: self.nrows, ncols: self.ncols, rows },
            pivots,
        }
    }

    pub fn rank(&self) -> usize {
        rank_of(&self.rows)
    }

    pub fn is_nonsingular(&self) -> Result<bool> {
        if self.nrows != self.ncols {
            return Err(Error::NotSquare { nrows: self.nrows, ncols: self.ncols });
        }
        Ok(self.rank() == self.nrows)
    }

    /// A basis of `{x : self * x^T = 0}` as the rows of a full-rank matrix.
    pub fn null_space_basis(&self) -> BinaryMatrix {
        let mut rows = self.rows.clone();
        let pivots = rref_in_place(&mut rows, self.ncols);
        let rows = null_space_from_rref(&rows[..pivots.len()], &pivots, self.ncols);
        BinaryMatrix { nrows: rows.len(), ncols: self.ncols, rows }
    }

    /// Concatenates `other` to the right of `self`.
    pub fn hstack(&self, other: &BinaryMatrix) -> Result<BinaryMatrix> {
        if self.nrows != other.nrows {
            return Err(Error::DimensionMismatch(format!(
                "cannot stack {} rows beside {} rows",
                self.nrows, other.nrows
            )));
        }
        let ncols = self.ncols + other.ncols;
        check_len(ncols)?;
        let rows = self
            .rows
            .iter()
            .zip(&other.rows)
            .map(|(&a, &b)| a | b << self.ncols)
            .collect();
        Ok(BinaryMatrix { nrows: self.nrows, ncols, rows })
    }

    /// Column `i` of the result is column `perm[i]` of `self`.
    pub fn select_columns(&self, perm: &[usize]) -> BinaryMatrix {
        let rows = self.rows.iter().map(|&r| gather_bits(r, perm)).collect();
        BinaryMatrix { nrows: self.nrows, ncols: perm.len(), rows }
    }

    pub fn remove_columns(&self, drop: &[usize]) -> BinaryMatrix {
        let keep: Vec<usize> = (0..self.ncols).filter(|j| !drop.contains(j)).collect();
        self.select_columns(&keep)
    }
}

impl fmt::Display for BinaryMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, _) in self.rows.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{}", self.row(i))?;
        }
        Ok(())
    }
}

#[inline]
pub(crate) fn gather_bits(word: u64, perm: &[usize]) -> u64 {
    perm.iter()
        .enumerate()
        .fold(0u64, |acc, (i, &src)| acc | ((word >> src & 1) << i))
}

/// Reduces `rows` to RREF, moving zero rows to the bottom. Returns pivot columns.
pub(crate) fn rref_in_place(rows: &mut [u64], ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut top = 0;
    for col in 0..ncols {
        if top == rows.len() {
            break;
        }
        let bit = 1u64 << col;
        let Some(p) = (top..rows.len()).find(|&i| rows[i] & bit != 0) else {
            continue;
        };
        rows.swap(top, p);
        let pivot_row = rows[top];
        for (i, r) in rows.iter_mut().enumerate() {
            if i != top && *r & bit != 0 {
                *r ^= pivot_row;
            }
        }
        pivots.push(col);
        top += 1;
    }
    pivots
}

pub(crate) fn rank_of(rows: &[u64]) -> usize {
    // xor basis keyed by highest set bit
    let mut basis = [0u64; 64];
    let mut rank = 0;
    for &r in rows {
        let mut x = r;
        while x != 0 {
            let h = 63 - x.leading_zeros() as usize;
            if basis[h] == 0 {
                basis[h] = x;
                rank += 1;
                break;
            }
            x ^= basis[h];
        }
    }
    rank
}

pub(crate) fn null_space_from_rref(rref: &[u64], pivots: &[usize], ncols: usize) -> Vec<u64> {
    let pivot_mask = pivots.iter().fold(0u64, |acc, &p| acc | 1 << p);
    (0..ncols)
        .filter(|&f| pivot_mask >> f & 1 == 0)
        .map(|f| {
            let mut v = 1u64 << f;
            for (row, &p) in rref.iter().zip(pivots) {
                if row >> f & 1 == 1 {
                    v |= 1 << p;
                }
            }
            v
        })
        .collect()
}
