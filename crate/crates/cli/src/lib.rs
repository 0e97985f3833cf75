//! Commands behind the `lcd` binary and the code export format.
//!
//! Text exports are blocks separated by blank lines. Each block is a header
//! line `n k d` followed by `k` generator rows of `0`/`1` characters, with
//! coordinate 0 first. The JSON export is an array of [`ExportRecord`].

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use lcd_core::classify::{self, verify_table_with, CellReport};
use lcd_core::covers::{count_disordered_covers, cover_code, enumerate_disordered_covers};
use lcd_core::{BinaryMatrix, DSource, LinearCode, Strategy};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Code(#[from] lcd_core::Error),
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: io::Error },
    #[error(transparent)]
    Stdout(#[from] io::Error),
    #[error("invalid JSON export: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, CliError>;

/// Exit code when `table --compare` finds a mismatch.
pub const EXIT_MISMATCH: i32 = 2;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExportRecord {
    pub n: usize,
    pub k: usize,
    /// Minimum weight of the code (0 for the zero code).
    pub d: usize,
    pub generator: Vec<String>,
    /// Coefficients `A_0, ..., A_n`.
    pub weight_enumerator: Vec<u64>,
}

impl ExportRecord {
    pub fn from_code(c: &LinearCode) -> Self {
        let g = c.generator();
        Self {
            n: c.n(),
            k: c.k(),
            d: c.min_weight().unwrap_or(0),
            generator: (0..g.nrows()).map(|i| g.row(i).to_string()).collect(),
            weight_enumerator: c.weight_enumerator().coeffs().to_vec(),
        }
    }

    pub fn to_code(&self) -> Result<LinearCode> {
        if self.generator.is_empty() {
            return Ok(LinearCode::zero(self.n)?);
        }
        let c = LinearCode::parse(&self.generator)?;
        if c.n() != self.n || c.k() != self.k {
            return Err(CliError::Usage(format!(
                "record header says [{}, {}] but generator is [{}, {}]",
                self.n,
                self.k,
                c.n(),
                c.k()
            )));
        }
        Ok(c)
    }
}

pub fn write_text(records: &[ExportRecord]) -> String {
    let mut s = String::new();
    for (i, r) in records.iter().enumerate() {
        if i > 0 {
            s.push('\n');
        }
        writeln!(s, "{} {} {}", r.n, r.k, r.d).unwrap();
        for row in &r.generator {
            s.push_str(row);
            s.push('\n');
        }
    }
    s
}

pub fn write_json(records: &[ExportRecord]) -> String {
    let mut s = serde_json::to_string_pretty(records).expect("records serialise");
    s.push('\n');
    s
}

/// Parses the text export format. Weight enumerators are recomputed.
pub fn parse_text(text: &str) -> Result<Vec<ExportRecord>> {
    let mut out = Vec::new();
    let mut lines = text.lines().enumerate().peekable();
    loop {
        while lines.peek().is_some_and(|(_, l)| l.trim().is_empty()) {
            lines.next();
        }
        let Some((lineno, header)) = lines.next() else {
            break;
        };
        let bad = |message: String| CliError::Code(lcd_core::Error::Parse { line: lineno + 1, message });
        let nums: Vec<usize> = header
            .split_whitespace()
            .map(|t| t.parse::<usize>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|e| bad(format!("bad header {header:?}: {e}")))?;
        let &[n, k, d] = nums.as_slice() else {
            return Err(bad(format!("header must be `n k d`, got {header:?}")));
        };
        let mut rows = Vec::with_capacity(k);
        for _ in 0..k {
            match lines.next() {
                Some((_, l)) if !l.trim().is_empty() => rows.push(l.trim().to_string()),
                _ => return Err(bad(format!("expected {k} generator rows"))),
            }
        }
        let code = ExportRecord { n, k, d, generator: rows, weight_enumerator: Vec::new() }.to_code()?;
        out.push(ExportRecord { d, ..ExportRecord::from_code(&code) });
    }
    Ok(out)
}

pub fn parse_json(text: &str) -> Result<Vec<ExportRecord>> {
    Ok(serde_json::from_str(text)?)
}

/// Output sink: stdout or a file written in one go.
pub enum Sink {
    Stdout,
    File(PathBuf),
}

impl Sink {
    pub fn new(path: Option<PathBuf>) -> Self {
        path.map_or(Sink::Stdout, Sink::File)
    }

    fn emit(&self, out: &mut dyn Write, text: &str) -> Result<()> {
        match self {
            Sink::Stdout => Ok(out.write_all(text.as_bytes())?),
            Sink::File(p) => std::fs::write(p, text).map_err(|source| CliError::Io { path: p.clone(), source }),
        }
    }
}

fn export(codes: &[LinearCode], json: bool) -> String {
    let recs: Vec<ExportRecord> = codes.iter().map(ExportRecord::from_code).collect();
    if json {
        write_json(&recs)
    } else {
        write_text(&recs)
    }
}

fn check_range(n: usize, k: usize, max_n: usize) -> Result<()> {
    if k == 0 || k > n {
        return Err(CliError::Usage(format!("need 1 <= k <= n, got n = {n}, k = {k}")));
    }
    if n > max_n {
        return Err(CliError::Usage(format!("n = {n} is out of range (at most {max_n})")));
    }
    Ok(())
}

fn plural(count: usize) -> &'static str {
    if count == 1 {
        "code"
    } else {
        "codes"
    }
}

pub fn cmd_dmax(out: &mut dyn Write, n: usize, k: usize, with_classification: bool, strategy: Strategy) -> Result<()> {
    check_range(n, k, classify::MAX_CLASSIFY_LEN)?;
    if with_classification {
        let (d, res) = classify::largest_d_with(n, k, strategy)?;
        writeln!(out, "{d}, {} {}", res.count(), plural(res.count()))?;
        if res.count() > 0 {
            writeln!(out)?;
            out.write_all(export(&res.codes, false).as_bytes())?;
        }
        return Ok(());
    }
    match lcd_core::d_formula(n, k) {
        Some((d, DSource::Formula)) => writeln!(out, "{d} (formula)")?,
        Some((d, DSource::Table)) => writeln!(out, "{d} (table)")?,
        None => {
            let (d, _) = classify::largest_d_with(n, k, strategy)?;
            writeln!(out, "{d} (computed)")?;
        }
    }
    Ok(())
}

pub struct ClassifyArgs {
    pub n: usize,
    pub k: usize,
    pub d: Option<usize>,
    pub strategy: Strategy,
    pub json: bool,
    pub sink: Sink,
}

pub fn cmd_classify(out: &mut dyn Write, err: &mut dyn Write, a: &ClassifyArgs) -> Result<()> {
    check_range(a.n, a.k, classify::MAX_CLASSIFY_LEN)?;
    let res = match a.d {
        Some(d) => classify::classify_lcd(a.n, a.k, d, a.strategy)?,
        None => classify::largest_d_with(a.n, a.k, a.strategy)?.1,
    };
    a.sink.emit(out, &export(&res.codes, a.json))?;
    writeln!(
        err,
        "{} LCD [{}, {}, >={}] {} ({} nodes, {:.3}s)",
        res.count(),
        a.n,
        a.k,
        res.d,
        plural(res.count()),
        res.stats.nodes,
        res.stats.elapsed.as_secs_f64()
    )?;
    Ok(())
}

fn cell_text(d: usize, count: usize) -> String {
    format!("({d},{count})")
}

/// Prints the reproduced table one row per `n`. Returns whether every cell
/// matched the embedded values.
pub fn cmd_table(out: &mut dyn Write, nmax: usize, compare: bool, strategy: Strategy) -> Result<bool> {
    if !(3..=classify::MAX_CLASSIFY_LEN).contains(&nmax) {
        return Err(CliError::Usage(format!("--nmax must be in 3..={}", classify::MAX_CLASSIFY_LEN)));
    }
    let kmax = nmax - 1;
    let width = 11;
    let mut header = format!("{:>4} ", "n\\k");
    for k in 2..=kmax {
        write!(header, "{k:>width$}").unwrap();
    }
    writeln!(out, "{}", header.trim_end())?;

    let mut rows: BTreeMap<usize, Vec<CellReport>> = BTreeMap::new();
    let mut io_err = None;
    let report = verify_table_with(nmax, strategy, |cell| {
        let n = cell.n;
        rows.entry(n).or_default().push(cell.clone());
        // a row is complete once its k = n - 1 cell arrives
        if cell.k + 1 == n {
            let mut line = format!("{n:>4} ");
            for c in &rows[&n] {
                let mut s = cell_text(c.computed.0, c.computed.1);
                if compare {
                    s.push(if c.pass() { '✓' } else { '✗' });
                }
                write!(line, "{s:>width$}").unwrap();
            }
            if let Err(e) = writeln!(out, "{line}").and_then(|_| out.flush()) {
                io_err.get_or_insert(e);
            }
        }
    })?;
    if let Some(e) = io_err {
        return Err(e.into());
    }

    let overruns: Vec<&CellReport> = report.cells.iter().filter(|c| c.overrun).collect();
    for c in &overruns {
        writeln!(out, "overrun: ({}, {}) took {:.1}s", c.n, c.k, c.elapsed.as_secs_f64())?;
    }
    if compare {
        let bad: Vec<&CellReport> = report.mismatches().collect();
        for c in &bad {
            writeln!(
                out,
                "mismatch at n={} k={}: expected {} computed {}",
                c.n,
                c.k,
                cell_text(c.expected.0, c.expected.1),
                cell_text(c.computed.0, c.computed.1)
            )?;
        }
        if bad.is_empty() {
            writeln!(out, "all {} cells match", report.cells.len())?;
        } else {
            writeln!(out, "{} of {} cells differ", bad.len(), report.cells.len())?;
        }
        return Ok(bad.is_empty());
    }
    Ok(true)
}

pub fn cmd_covers(out: &mut dyn Write, m: usize, k: usize, emit_codes: bool, json: bool, sink: &Sink) -> Result<()> {
    if m == 0 || m > 12 || k == 0 || k > 8 {
        return Err(CliError::Usage(format!("need 1 <= m <= 12 and 1 <= k <= 8, got m = {m}, k = {k}")));
    }
    if !emit_codes {
        writeln!(out, "{}", count_disordered_covers(m, k))?;
        return Ok(());
    }
    let covers = enumerate_disordered_covers(m, k);
    writeln!(out, "{}", covers.len())?;
    let codes = covers.iter().map(|y| cover_code(y, 2)).collect::<std::result::Result<Vec<_>, _>>()?;
    let text = export(&codes, json);
    match sink {
        Sink::Stdout => {
            writeln!(out)?;
            out.write_all(text.as_bytes())?;
        }
        Sink::File(_) => sink.emit(out, &text)?,
    }
    Ok(())
}

/// Reads generator rows from a file (one row per line, `#` comments and
/// blank lines ignored) or takes them inline.
pub fn read_rows(input: &[String]) -> Result<BinaryMatrix> {
    let numbered: Vec<(usize, String)> = match input {
        [one] if Path::new(one).is_file() => {
            let text = std::fs::read_to_string(one).map_err(|source| CliError::Io { path: one.into(), source })?;
            text.lines()
                .enumerate()
                .filter(|(_, l)| !l.trim().is_empty() && !l.trim_start().starts_with('#'))
                .map(|(i, l)| (i + 1, l.trim().to_string()))
                .collect()
        }
        rows => rows.iter().enumerate().map(|(i, r)| (i + 1, r.trim().to_string())).collect(),
    };
    if numbered.is_empty() {
        return Err(CliError::Usage("no generator rows given".into()));
    }
    let lines: Vec<&str> = numbered.iter().map(|(_, l)| l.as_str()).collect();
    BinaryMatrix::parse_rows(&lines).map_err(|e| match e {
        lcd_core::Error::Parse { line, message } => {
            CliError::Code(lcd_core::Error::Parse { line: numbered[line - 1].0, message })
        }
        other => other.into(),
    })
}

pub fn cmd_we(out: &mut dyn Write, input: &[String]) -> Result<()> {
    let m = read_rows(input)?;
    let c = LinearCode::from_spanning(&m);
    let we = c.weight_enumerator();
    match we.min_weight() {
        Some(d) => writeln!(out, "[{}, {}, {}]", c.n(), c.k(), d)?,
        None => writeln!(out, "[{}, {}]", c.n(), c.k())?,
    }
    if c.k() < m.nrows() {
        writeln!(out, "note: rows have rank {} < {}", c.k(), m.nrows())?;
    }
    writeln!(out, "{we}")?;
    writeln!(out, "LCD: {}", if c.is_lcd() { "yes" } else { "no" })?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn codes() -> Vec<LinearCode> {
        vec![
            LinearCode::parse(&["1001111", "0101111", "0011010"]).unwrap(),
            LinearCode::parse(&["1000", "0111"]).unwrap(),
            LinearCode::full_space(3).unwrap(),
        ]
    }

    #[test]
    fn text_round_trip() {
        let recs: Vec<ExportRecord> = codes().iter().map(ExportRecord::from_code).collect();
        let text = write_text(&recs);
        assert!(text.starts_with("7 3 2\n1001111\n"));
        assert_eq!(parse_text(&text).unwrap(), recs);
    }

    #[test]
    fn json_round_trip() {
        let recs: Vec<ExportRecord> = codes().iter().map(ExportRecord::from_code).collect();
        assert_eq!(parse_json(&write_json(&recs)).unwrap(), recs);
    }

    #[test]
    fn parse_text_errors() {
        assert!(parse_text("4 2 1\n1000\n").is_err());
        assert!(parse_text("4 2\n1000\n0100\n").is_err());
        assert!(parse_text("4 2 1\n1000\n012\n").is_err());
    }

    #[test]
    fn dmax_lines() {
        let mut out = Vec::new();
        cmd_dmax(&mut out, 7, 2, false, Strategy::default()).unwrap();
        assert_eq!(String::from_utf8(out).unwrap(), "4 (formula)\n");
        let mut out = Vec::new();
        cmd_dmax(&mut out, 12, 6, false, Strategy::default()).unwrap();
        assert_eq!(String::from_utf8(out).unwrap(), "4 (table)\n");
        assert!(cmd_dmax(&mut Vec::new(), 3, 4, false, Strategy::default()).is_err());
    }

    #[test]
    fn we_reports_line_numbers() {
        let err = read_rows(&["1010".into(), "10a0".into()]).unwrap_err();
        assert!(err.to_string().contains("line 2"), "{err}");
        let err = read_rows(&["1010".into(), "101".into()]).unwrap_err();
        assert!(err.to_string().contains("line 2"), "{err}");
    }
}
