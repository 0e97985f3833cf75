//! Largest minimum weights and isomorph-free classification of LCD codes.

mod columns;
pub(crate) mod formula;
mod rows;
pub mod table;

use std::time::{Duration, Instant};

use crate::code::{griesmer_max_d, LinearCode, WeightEnumerator};
use crate::covers::count_disordered_covers;
use crate::equivalence::canonical_form;
use crate::error::{Error, Result};

pub use formula::{d_dim2, d_dim3, d_formula, DSource};

/// Largest length the classifier accepts.
pub const MAX_CLASSIFY_LEN: usize = 16;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum Strategy {
    /// Grow parity-check matrices column by column.
    #[default]
    ColumnAugmentation,
    /// Enumerate sorted rows of `A` in generators `(I_k | A)`.
    OrderedRows,
}

#[derive(Clone, Debug, Default)]
pub struct SearchStats {
    /// Candidate extensions examined.
    pub nodes: u64,
    /// Canonical labelings computed.
    pub canonical_forms: u64,
    /// Number of classes after each augmentation step.
    pub level_sizes: Vec<usize>,
    pub elapsed: Duration,
}

#[derive(Clone, Debug)]
pub struct ClassificationResult {
    pub n: usize,
    pub k: usize,
    /// Lower bound on the minimum weight used in the search.
    pub d: usize,
    pub strategy: Strategy,
    /// One canonical generator per class, sorted by weight enumerator and
    /// then by generator rows.
    pub codes: Vec<LinearCode>,
    pub stats: SearchStats,
}

impl ClassificationResult {
    pub fn count(&self) -> usize {
        self.codes.len()
    }

    /// Number of classes whose minimum weight is exactly `w`.
    pub fn count_with_min_weight(&self, w: usize) -> usize {
        self.codes.iter().filter(|c| c.min_weight().ok() == Some(w)).count()
    }
}

fn check_dims(n: usize, k: usize) -> Result<()> {
    if k == 0 || k > n {
        return Err(Error::InvalidParameter(format!("need 1 <= k <= n, got n = {n}, k = {k}")));
    }
    if n > MAX_CLASSIFY_LEN {
        return Err(Error::TooLong { len: n, max: MAX_CLASSIFY_LEN });
    }
    Ok(())
}

/// All LCD `[n, k]` codes with minimum weight at least `d`, one per
/// equivalence class.
pub fn classify_lcd(n: usize, k: usize, d: usize, strategy: Strategy) -> Result<ClassificationResult> {
    check_dims(n, k)?;
    if d == 0 {
        return Err(Error::InvalidParameter("d must be at least 1".into()));
    }
    let start = Instant::now();
    let mut stats = SearchStats::default();
    let raw = match strategy {
        Strategy::ColumnAugmentation => columns::classify(n, k, d, &mut stats),
        Strategy::OrderedRows => rows::classify(n, k, d, &mut stats),
    };
    let mut codes: Vec<(WeightEnumerator, LinearCode)> = {
        use rayon::prelude::*;
        raw.par_iter()
            .map(|c| {
                let code = canonical_form(c).code;
                (code.weight_enumerator(), code)
            })
            .collect()
    };
    codes.sort_by(|a, b| a.0.cmp(&b.0).then_with(|| a.1.generator().rows().cmp(b.1.generator().rows())));
    stats.elapsed = start.elapsed();
    Ok(ClassificationResult { n, k, d, strategy, codes: codes.into_iter().map(|(_, c)| c).collect(), stats })
}

/// `d(n, k)` by search: the largest `d` for which an LCD `[n, k, d]` code
/// exists, together with the classification at that `d`.
pub fn largest_d(n: usize, k: usize) -> Result<(usize, ClassificationResult)> {
    largest_d_with(n, k, Strategy::default())
}

pub fn largest_d_with(n: usize, k: usize, strategy: Strategy) -> Result<(usize, ClassificationResult)> {
    check_dims(n, k)?;
    let mut d = griesmer_max_d(n, k).max(1);
    loop {
        let res = classify_lcd(n, k, d, strategy)?;
        if res.count() > 0 || d == 1 {
            return Ok((d, res));
        }
        d -= 1;
    }
}

#[derive(Clone, Debug)]
pub struct CellReport {
    pub n: usize,
    pub k: usize,
    /// `(d, N)` from the published table.
    pub expected: (usize, usize),
    /// `(d, N)` found by search.
    pub computed: (usize, usize),
    pub elapsed: Duration,
    /// The cell took longer than the per-cell budget.
    pub overrun: bool,
}

impl CellReport {
    pub fn pass(&self) -> bool {
        self.expected == self.computed
    }
}

#[derive(Clone, Debug)]
pub struct TableReport {
    pub cells: Vec<CellReport>,
    pub elapsed: Duration,
}

impl TableReport {
    pub fn all_pass(&self) -> bool {
        self.cells.iter().all(CellReport::pass)
    }

    pub fn mismatches(&self) -> impl Iterator<Item = &CellReport> {
        self.cells.iter().filter(|c| !c.pass())
    }
}

/// Budget after which a table cell is flagged as an overrun.
pub const CELL_BUDGET: Duration = Duration::from_secs(600);

/// Recompute every table cell with `n <= n_max` and compare.
pub fn verify_table(n_max: usize) -> Result<TableReport> {
    verify_table_with(n_max, Strategy::default(), |_| {})
}

pub fn verify_table_with(
    n_max: usize,
    strategy: Strategy,
    mut on_cell: impl FnMut(&CellReport),
) -> Result<TableReport> {
    if n_max > MAX_CLASSIFY_LEN {
        return Err(Error::TooLong { len: n_max, max: MAX_CLASSIFY_LEN });
    }
    let start = Instant::now();
    let mut cells = Vec::new();
    for &(n, k, d, count) in table::TABLE.iter().filter(|e| e.0 <= n_max) {
        let t = Instant::now();
        let (found, res) = largest_d_with(n, k, strategy)?;
        let elapsed = t.elapsed();
        let cell = CellReport {
            n,
            k,
            expected: (d, count),
            computed: (found, res.count()),
            elapsed,
            overrun: elapsed > CELL_BUDGET,
        };
        on_cell(&cell);
        cells.push(cell);
    }
    Ok(TableReport { cells, elapsed: start.elapsed() })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverIdentityRow {
    pub m: usize,
    /// Inequivalent LCD `[2m + 3, 2m, 2]` codes.
    pub short: usize,
    /// Inequivalent LCD `[2m + 4, 2m + 1, 2]` codes.
    pub extended: usize,
    /// Disordered 3-covers of an `m`-set.
    pub covers: u64,
}

impl CoverIdentityRow {
    pub fn pass(&self) -> bool {
        self.short as u64 == self.covers && self.extended as u64 == self.covers
    }
}

#[derive(Clone, Debug)]
pub struct CoverIdentityReport {
    pub rows: Vec<CoverIdentityRow>,
}

impl CoverIdentityReport {
    pub fn all_pass(&self) -> bool {
        self.rows.iter().all(CoverIdentityRow::pass)
    }
}

/// Check that LCD codes of minimum weight 2 with redundancy 3 are counted by
/// disordered 3-covers, for `1 <= m <= m_max`.
pub fn verify_cover_count_identity(m_max: usize) -> Result<CoverIdentityReport> {
    if 2 * m_max + 4 > MAX_CLASSIFY_LEN {
        return Err(Error::TooLong { len: 2 * m_max + 4, max: MAX_CLASSIFY_LEN });
    }
    let mut rows = Vec::new();
    for m in 1..=m_max {
        let short = classify_lcd(2 * m + 3, 2 * m, 2, Strategy::default())?.count_with_min_weight(2);
        let extended = classify_lcd(2 * m + 4, 2 * m + 1, 2, Strategy::default())?.count_with_min_weight(2);
        rows.push(CoverIdentityRow { m, short, extended, covers: count_disordered_covers(m, 3) });
    }
    Ok(CoverIdentityReport { rows })
}
