//! Brute-force searchers used to check every theorem-backed answer.
//!
//! Each scan splits its range across worker threads and merges the results
//! in a canonical order, so reports are identical for every worker count.

mod box_search;
mod norm;
mod parallel;
mod quotients;
mod repr;

pub use box_search::box_search;
pub use norm::{norm_scan, norm_scan_to_height, pell_fundamental, NormEntry};
pub use parallel::Workers;
pub use quotients::{imo_scan, verify_final_prop, QuotientHit};
pub use repr::{factorize, rep_c2_plus_3d2, two_square_rep, FACTOR_LIMIT};

/// Result of an exhaustive scan.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanReport<H> {
    pub parameters: Vec<(String, String)>,
    /// Sorted, deduplicated.
    pub hits: Vec<H>,
    /// Hits that contradict the statement being checked.
    pub counterexamples: Vec<H>,
    /// Why the bounded scan is complete.
    pub exhaustiveness: String,
}
