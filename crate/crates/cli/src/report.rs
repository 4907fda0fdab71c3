//! Benchmark report written as json.

use serde::Serialize;

use crate::cli::BenchKind;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BenchRecord {
    pub n: usize,
    pub log2: u32,
    pub kind: BenchKind,
    pub reps: u32,
    pub median_ns: u64,
    pub min_ns: u64,
    pub multiplications: u64,
    pub additions: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BenchReport {
    pub reps: u32,
    pub seed: u64,
    pub records: Vec<BenchRecord>,
}

impl BenchReport {
    pub fn find(&self, kind: BenchKind, n: usize) -> Option<&BenchRecord> {
        self.records.iter().find(|r| r.kind == kind && r.n == n)
    }

    /// Sizes per kind strictly increase and every record has at least 3 repetitions.
    pub fn is_well_formed(&self) -> bool {
        self.reps >= 3
            && self.records.iter().all(|r| r.reps >= 3 && r.n == 1 << r.log2)
            && self.records.windows(2).all(|w| w[0].kind != w[1].kind || w[0].n < w[1].n)
    }
}

/// Median of an already sorted, non-empty sample (lower median for even counts).
pub fn median_sorted(sorted: &[u64]) -> u64 {
    sorted[(sorted.len() - 1) / 2]
}
