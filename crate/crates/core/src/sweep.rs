//! Family sweep: solve C5,q for ascending q and record node counts
//! against the 2^q lower bound, CSV-ready.

use std::time::Instant;

use crate::batch::run_batch;
use crate::construct::{c5q, FamilyParams};
use crate::search::{solve, SearchLimits, SearchStatus};

/// One sweep record. Node counts are raw; scaling them by thousands
/// would round the small rows away and hide the exact 2^q comparison.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FamilyRow {
    pub q: usize,
    pub n: usize,
    /// 2^q.
    pub lower_bound_nodes: u64,
    pub measured_calls: u64,
    pub wall_seconds: f64,
    pub status: SearchStatus,
}

pub const CSV_HEADER: &str = "q,n,lower_bound_nodes,measured_calls,wall_seconds,status";

impl FamilyRow {
    /// CSV rendering; rows that hit a limit carry "-" in the status
    /// column, mirroring the usual benchmark-table convention.
    pub fn to_csv_row(&self) -> String {
        let status = match self.status {
            SearchStatus::Completed => "completed",
            SearchStatus::NodeLimitHit | SearchStatus::TimeLimitHit => "-",
        };
        format!(
            "{},{},{},{},{:.6},{}",
            self.q, self.n, self.lower_bound_nodes, self.measured_calls, self.wall_seconds, status
        )
    }
}

/// Solves one family member under the given limits.
pub fn sweep_row(q: usize, limits: &SearchLimits) -> FamilyRow {
    assert!((1..64).contains(&q), "q must be in 1..64");
    let g = c5q(FamilyParams::new(q).expect("q >= 1"));
    let start = Instant::now();
    let result = solve(&g, limits, false);
    FamilyRow {
        q,
        n: g.order(),
        lower_bound_nodes: 1u64 << q,
        measured_calls: result.calls,
        wall_seconds: start.elapsed().as_secs_f64(),
        status: result.status,
    }
}

/// Rows for q = 1..=q_max in ascending order. Instances are independent,
/// so the batch may run in parallel; ordering of the output is fixed.
pub fn sweep_family(q_max: usize, limits: &SearchLimits) -> Vec<FamilyRow> {
    run_batch(q_max, |i| sweep_row(i + 1, limits))
}
