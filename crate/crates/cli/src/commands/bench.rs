use std::hint::black_box;
use std::io::Write;
use std::time::Instant;

use hforge::{
    counted_dft_via_fht, counted_dht_naive, counted_fht, counted_fwht, dft_via_fht, dht_naive, fht,
    fwht, CountingMode, FhtPlan, OpCount, TransformError,
};

use super::seeded_signal;
use crate::cli::{BenchArgs, BenchKind};
use crate::report::{median_sorted, BenchRecord, BenchReport};
use crate::Exit;

/// Parses an inclusive `A..B` exponent range.
pub fn parse_log2_range(s: &str) -> Result<(u32, u32), String> {
    let (a, b) = s
        .split_once("..")
        .ok_or_else(|| format!("range `{s}` is not of the form A..B"))?;
    let a: u32 = a.trim().parse().map_err(|_| format!("bad range start `{a}`"))?;
    let b: u32 = b.trim().parse().map_err(|_| format!("bad range end `{b}`"))?;
    if a > b {
        return Err(format!("empty range {a}..{b}"));
    }
    if b > 26 {
        return Err(format!("range end {b} exceeds 26"));
    }
    Ok((a, b))
}

fn op_count(kind: BenchKind, v: &[f64]) -> Result<OpCount, TransformError> {
    Ok(match kind {
        BenchKind::DhtNaive => counted_dht_naive(v)?.1,
        BenchKind::Fht | BenchKind::FhtPlan => counted_fht(v, CountingMode::PaperModel)?.1,
        BenchKind::Fwht => counted_fwht(v)?.1,
        BenchKind::Dft => counted_dft_via_fht(v, CountingMode::PaperModel)?.1,
    })
}

fn run_once(kind: BenchKind, v: &[f64], plan: &FhtPlan<f64>) -> Result<(), TransformError> {
    match kind {
        BenchKind::DhtNaive => {
            black_box(dht_naive(v)?);
        }
        BenchKind::Fht => {
            black_box(fht(v)?);
        }
        BenchKind::FhtPlan => {
            black_box(plan.process(v)?);
        }
        BenchKind::Fwht => {
            black_box(fwht(v)?);
        }
        BenchKind::Dft => {
            black_box(dft_via_fht(v)?);
        }
    }
    Ok(())
}

/// Times one (kind, size) pair: one warm-up call, then `reps` measured calls.
pub fn measure(kind: BenchKind, log2: u32, reps: u32, seed: u64) -> Result<BenchRecord, TransformError> {
    let n = 1usize << log2;
    let v = seeded_signal(seed ^ u64::from(log2), n);
    let plan = FhtPlan::new(n)?;
    run_once(kind, &v, &plan)?;
    let mut times = Vec::with_capacity(reps as usize);
    for _ in 0..reps {
        let start = Instant::now();
        run_once(kind, black_box(&v), &plan)?;
        times.push(start.elapsed().as_nanos() as u64);
    }
    times.sort_unstable();
    let count = op_count(kind, &v)?;
    Ok(BenchRecord {
        n,
        log2,
        kind,
        reps,
        median_ns: median_sorted(&times),
        min_ns: times[0],
        multiplications: count.multiplications,
        additions: count.additions,
    })
}

pub fn bench(
    kinds: &[BenchKind],
    (lo, hi): (u32, u32),
    reps: u32,
    seed: u64,
    parallel: bool,
) -> Result<BenchReport, TransformError> {
    let mut kinds = kinds.to_vec();
    kinds.dedup();
    let per_size = |log2: u32| -> Result<Vec<BenchRecord>, TransformError> {
        kinds.iter().map(|&k| measure(k, log2, reps, seed)).collect()
    };
    let by_size: Vec<Vec<BenchRecord>> = if parallel {
        std::thread::scope(|s| {
            let handles: Vec<_> = (lo..=hi).map(|m| s.spawn(move || per_size(m))).collect();
            handles
                .into_iter()
                .map(|h| h.join().expect("bench thread panicked"))
                .collect::<Result<_, _>>()
        })?
    } else {
        (lo..=hi).map(per_size).collect::<Result<_, _>>()?
    };
    let mut records: Vec<BenchRecord> = by_size.into_iter().flatten().collect();
    // group by kind (in the order requested), sizes ascending within a kind
    records.sort_by_key(|r| (kinds.iter().position(|&k| k == r.kind), r.n));
    Ok(BenchReport { reps, seed, records })
}

pub fn run(args: &BenchArgs, out: &mut dyn Write, diag: &mut dyn Write) -> Exit {
    let range = match parse_log2_range(&args.log2_range) {
        Ok(r) => r,
        Err(e) => {
            let _ = writeln!(diag, "error: --log2-range: {e}");
            return Exit::Usage;
        }
    };
    if args.reps < 3 {
        let _ = writeln!(diag, "error: --reps must be at least 3");
        return Exit::Usage;
    }
    if args.kinds.is_empty() {
        let _ = writeln!(diag, "error: --kinds is empty");
        return Exit::Usage;
    }
    let report = match bench(&args.kinds, range, args.reps, args.seed, args.parallel) {
        Ok(r) => r,
        Err(e) => {
            let _ = writeln!(diag, "internal error: {e}");
            return Exit::Internal;
        }
    };
    let json = serde_json::to_string_pretty(&report).expect("report serializes");
    match &args.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, json + "\n") {
                let _ = writeln!(diag, "error: writing {}: {e}", path.display());
                return Exit::Usage;
            }
        }
        None => {
            let _ = writeln!(out, "{json}");
        }
    }
    Exit::Ok
}
