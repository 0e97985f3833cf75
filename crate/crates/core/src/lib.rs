//! Binary linear complementary dual (LCD) codes.
//!
//! The crate is organised bottom-up:
//!
//! - [`gf2`]: bit-packed matrices over GF(2) with at most 64 columns.
//! - [`code`]: `[n, k]` codes, duality, the LCD test, weight enumerators.
//! - [`equivalence`]: canonical forms under coordinate permutation.
//! - [`covers`]: codes built from k-covers of finite sets and the closed-form
//!   families of dimensions 2 and 3.
//! - [`classify`]: largest minimum weights `d(n, k)` and isomorph-free
//!   classification of LCD `[n, k, d(n, k)]` codes for `n <= 16`.

pub mod classify;
pub mod code;
pub mod covers;
pub mod equivalence;
pub mod error;
pub mod gf2;

pub use classify::{
    classify_lcd, d_formula, largest_d, verify_cover_count_identity, verify_table,
    ClassificationResult, CoverIdentityReport, DSource, SearchStats, Strategy, TableReport,
};
pub use code::{griesmer_max_d, LinearCode, WeightEnumerator};
pub use covers::{Dim2Params, Dim3Params, KCover};
pub use equivalence::{are_equivalent, canonical_form, deduplicate, CanonicalForm};
pub use error::{Error, Result};
pub use gf2::{BinaryMatrix, BitVector};
