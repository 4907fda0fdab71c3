use std::io::Write;

use hforge::instrumentation::radix2_multiplication_bound;
use hforge::{
    counted_dft_via_fht, counted_dht_naive, counted_fht, counted_fwht, require_pow2, CountingMode,
    OpCount, TransformError,
};

use crate::cli::{ModeArg, OpcountArgs, OpcountKind};
use crate::Exit;

pub fn count(kind: OpcountKind, n: usize, mode: CountingMode) -> Result<OpCount, TransformError> {
    // counts do not depend on sample values
    let v: Vec<f64> = (0..n).map(|i| (i % 7) as f64 - 3.0).collect();
    Ok(match kind {
        OpcountKind::Fht => counted_fht(&v, mode)?.1,
        OpcountKind::Fwht => counted_fwht(&v)?.1,
        OpcountKind::DhtNaive => counted_dht_naive(&v)?.1,
        OpcountKind::Dft => counted_dft_via_fht(&v, mode)?.1,
    })
}

pub fn run(args: &OpcountArgs, out: &mut dyn Write, diag: &mut dyn Write) -> Exit {
    if let Err(e) = require_pow2(args.size) {
        let _ = writeln!(diag, "error: --size {}: {e}", args.size);
        return Exit::Usage;
    }
    let mode = match args.mode {
        ModeArg::Paper => CountingMode::PaperModel,
        ModeArg::Optimized => CountingMode::Optimized,
    };
    let c = match count(args.kind, args.size, mode) {
        Ok(c) => c,
        Err(e) => {
            let _ = writeln!(diag, "internal error: {e}");
            return Exit::Internal;
        }
    };
    let bound = radix2_multiplication_bound(args.size);
    let satisfied = c.multiplications <= bound;
    let _ = writeln!(out, "{:>10}  {:>12}  {:>12}  {:>14}  satisfied", "N", "mult", "add", "bound 2NlogN");
    let _ = writeln!(
        out,
        "{:>10}  {:>12}  {:>12}  {:>14}  {}",
        args.size,
        c.multiplications,
        c.additions,
        bound,
        if satisfied { "yes" } else { "no" }
    );
    Exit::Ok
}
