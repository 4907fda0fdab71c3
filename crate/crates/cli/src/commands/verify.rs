//! Oracle-equivalence sweep over `N = 2^0 .. 2^max_log2`.

use std::fmt;
use std::io::Write;
use std::time::Instant;

use hforge::instrumentation::{fht_paper_multiplications, radix2_multiplication_bound};
use hforge::kernel::{max_abs, max_abs_diff};
use hforge::oracle::MAX_HADAMARD_ORDER;
use hforge::{
    counted_fht, counted_fwht, dft_naive, dft_via_fht, dht_naive, fht, fht_with_plan, fwht,
    half_wave_split, reconstruct_from_halfwaves, twiddle_odd, CountingMode, FhtPlan,
    HadamardMatrix, TransformError,
};

use super::{seeded_signal, trial_seed};
use crate::cli::VerifyArgs;
use crate::Exit;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Property {
    /// fht against the direct DHT, relative max-norm.
    FhtOracle,
    /// plan path bit-identical to the recursive path.
    PlanBitwise,
    /// even/odd output lines equal the half-size transforms of the split parts.
    SplitIdentities,
    HalfwaveReconstruct,
    FhtInvolution,
    FhtParseval,
    FwhtOracle,
    FwhtInvolution,
    FwhtParseval,
    /// fwht(v) == fwht(u_e) ++ fwht(u_o), bitwise.
    Skeleton,
    DftBridge,
    OpCount,
}

impl Property {
    pub const ALL: [Property; 12] = [
        Property::FhtOracle,
        Property::PlanBitwise,
        Property::SplitIdentities,
        Property::HalfwaveReconstruct,
        Property::FhtInvolution,
        Property::FhtParseval,
        Property::FwhtOracle,
        Property::FwhtInvolution,
        Property::FwhtParseval,
        Property::Skeleton,
        Property::DftBridge,
        Property::OpCount,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Property::FhtOracle => "fht-oracle",
            Property::PlanBitwise => "plan-bitwise",
            Property::SplitIdentities => "split-identities",
            Property::HalfwaveReconstruct => "halfwave-reconstruct",
            Property::FhtInvolution => "fht-involution",
            Property::FhtParseval => "fht-parseval",
            Property::FwhtOracle => "fwht-oracle",
            Property::FwhtInvolution => "fwht-involution",
            Property::FwhtParseval => "fwht-parseval",
            Property::Skeleton => "skeleton",
            Property::DftBridge => "dft-bridge",
            Property::OpCount => "opcount",
        }
    }

    /// Exact properties ignore `--tol`.
    fn exact(self) -> bool {
        matches!(
            self,
            Property::PlanBitwise | Property::SplitIdentities | Property::Skeleton | Property::OpCount
        )
    }
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Row {
    pub n: usize,
    pub property: Property,
    pub trials: u32,
    /// Worst relative error (0 for exact properties that held).
    pub max_err: f64,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Failure {
    pub n: usize,
    pub seed: u64,
    pub property: Property,
}

#[derive(Debug, Clone, Default)]
pub struct Outcome {
    pub rows: Vec<Row>,
    pub failures: Vec<Failure>,
}

impl Outcome {
    pub fn all_passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// The pass/fail table; byte-identical for identical arguments.
    pub fn table(&self) -> String {
        let mut s = format!("{:>6}  {:<22}{:>7}  {:>10}  {}\n", "N", "property", "trials", "max_err", "status");
        for r in &self.rows {
            s.push_str(&format!(
                "{:>6}  {:<22}{:>7}  {:>10.3e}  {}\n",
                r.n,
                r.property.name(),
                r.trials,
                r.max_err,
                if r.passed { "pass" } else { "FAIL" }
            ));
        }
        s
    }
}

fn rel_err(got: &[f64], want: &[f64]) -> f64 {
    match max_abs_diff(got, want) {
        Ok(d) => d / max_abs(want).max(1e-300),
        Err(_) => f64::INFINITY,
    }
}

fn bitwise_eq(a: &[f64], b: &[f64]) -> bool {
    a.len() == b.len() && a.iter().zip(b).all(|(x, y)| x.to_bits() == y.to_bits())
}

fn flatten(c: &[hforge::Complex<f64>]) -> Vec<f64> {
    c.iter().flat_map(|z| [z.re, z.im]).collect()
}

struct SizeCheck<'a> {
    n: usize,
    log2: u32,
    plan: FhtPlan<f64>,
    hadamard: Option<HadamardMatrix>,
    tol: f64,
    stats: Vec<(Property, f64, bool)>,
    failures: &'a mut Vec<Failure>,
}

impl SizeCheck<'_> {
    fn record(&mut self, property: Property, seed: u64, err: f64, exact_ok: Option<bool>) {
        let ok = match exact_ok {
            Some(ok) => ok,
            None => err <= self.tol,
        };
        let slot = self
            .stats
            .iter_mut()
            .find(|(p, _, _)| *p == property)
            .expect("every property has a slot");
        // NaN errors count as the worst possible
        slot.1 = if err.is_nan() { f64::INFINITY } else { slot.1.max(err) };
        if !ok {
            if slot.2 {
                self.failures.push(Failure {
                    n: self.n,
                    seed,
                    property,
                });
            }
            slot.2 = false;
        }
    }

    fn trial(&mut self, seed: u64) -> Result<(), TransformError> {
        let n = self.n;
        let nf = n as f64;
        let v = seeded_signal(seed, n);

        let spec = fht(&v)?;
        let naive = dht_naive(&v)?;
        self.record(Property::FhtOracle, seed, rel_err(&spec, &naive), None);

        let planned = fht_with_plan(&self.plan, &v)?;
        self.record(Property::PlanBitwise, seed, rel_err(&planned, &spec), Some(bitwise_eq(&planned, &spec)));

        if n >= 2 {
            let parts = half_wave_split(&v)?;
            let even = fht(parts.even())?;
            let odd = fht(&twiddle_odd(parts.odd(), n)?)?;
            let interleaved: Vec<f64> = even.iter().zip(odd.iter()).flat_map(|(&e, &o)| [e, o]).collect();
            self.record(
                Property::SplitIdentities,
                seed,
                rel_err(&interleaved, &spec),
                Some(bitwise_eq(&interleaved, &spec)),
            );

            let back = reconstruct_from_halfwaves(&parts);
            self.record(Property::HalfwaveReconstruct, seed, rel_err(&back, &v), None);

            let mut joined = fwht(parts.even())?.into_vec();
            joined.extend(fwht(parts.odd())?.into_vec());
            let whole = fwht(&v)?;
            self.record(Property::Skeleton, seed, rel_err(&joined, &whole), Some(bitwise_eq(&joined, &whole)));
        }

        let scaled: Vec<f64> = v.iter().map(|x| x * nf).collect();
        self.record(Property::FhtInvolution, seed, rel_err(&fht(&spec)?, &scaled), None);

        let energy: f64 = v.iter().map(|x| x * x).sum();
        let spec_energy: f64 = spec.iter().map(|x| x * x).sum();
        let parseval_err = |e: f64| (e - nf * energy).abs() / (nf * energy).max(1e-300);
        self.record(Property::FhtParseval, seed, parseval_err(spec_energy), None);

        let had = fwht(&v)?;
        if let Some(matrix) = &self.hadamard {
            let want = matrix.apply(&v)?;
            self.record(Property::FwhtOracle, seed, rel_err(&had, &want), None);
        }
        self.record(Property::FwhtInvolution, seed, rel_err(&fwht(&had)?, &scaled), None);
        let had_energy: f64 = had.iter().map(|x| x * x).sum();
        self.record(Property::FwhtParseval, seed, parseval_err(had_energy), None);

        let fast = flatten(&dft_via_fht(&v)?);
        let slow = flatten(&dft_naive(&v)?);
        self.record(Property::DftBridge, seed, rel_err(&fast, &slow), None);

        let (counted, paper) = counted_fht(&v, CountingMode::PaperModel)?;
        let (_, had_count) = counted_fwht(&v)?;
        let counts_ok = counted == spec
            && paper.multiplications == fht_paper_multiplications(n)
            && (n < 2 || paper.multiplications <= radix2_multiplication_bound(n))
            && had_count.multiplications == 0
            && had_count.additions == n as u64 * u64::from(self.log2);
        self.record(Property::OpCount, seed, if counts_ok { 0.0 } else { 1.0 }, Some(counts_ok));
        Ok(())
    }
}

/// Runs every property for `N = 2^0 .. 2^max_log2`, `trials` signals each.
pub fn sweep(max_log2: u32, trials: u32, seed: u64, tol: f64) -> Result<Outcome, TransformError> {
    let mut outcome = Outcome::default();
    for log2 in 0..=max_log2 {
        let n = 1usize << log2;
        let hadamard = (n <= MAX_HADAMARD_ORDER).then(|| HadamardMatrix::sylvester(n)).transpose()?;
        let mut check = SizeCheck {
            n,
            log2,
            plan: FhtPlan::new(n)?,
            hadamard,
            tol,
            stats: Property::ALL.iter().map(|&p| (p, 0.0, true)).collect(),
            failures: &mut outcome.failures,
        };
        for trial in 0..trials {
            check.trial(trial_seed(seed, log2, trial))?;
        }
        let applicable = |p: Property| match p {
            Property::SplitIdentities | Property::HalfwaveReconstruct | Property::Skeleton => n >= 2,
            Property::FwhtOracle => n <= MAX_HADAMARD_ORDER,
            _ => true,
        };
        for (property, max_err, passed) in check.stats {
            if applicable(property) {
                outcome.rows.push(Row {
                    n,
                    property,
                    trials,
                    max_err: if property.exact() && passed { 0.0 } else { max_err },
                    passed,
                });
            }
        }
    }
    Ok(outcome)
}

pub fn run(args: &VerifyArgs, out: &mut dyn Write, diag: &mut dyn Write) -> Exit {
    if args.tol.is_nan() || args.tol < 0.0 || args.max_log2 > 24 || args.trials == 0 {
        let _ = writeln!(diag, "error: need --tol >= 0, --max-log2 <= 24 and --trials >= 1");
        return Exit::Usage;
    }
    let started = Instant::now();
    let outcome = match sweep(args.max_log2, args.trials, args.seed, args.tol) {
        Ok(o) => o,
        Err(e) => {
            let _ = writeln!(diag, "internal error: {e}");
            return Exit::Internal;
        }
    };
    let _ = out.write_all(outcome.table().as_bytes());
    for f in &outcome.failures {
        let _ = writeln!(out, "failed: n={} seed={} property={}", f.n, f.seed, f.property);
    }
    let failed_rows = outcome.rows.iter().filter(|r| !r.passed).count();
    let _ = writeln!(
        out,
        "{} of {} checks passed",
        outcome.rows.len() - failed_rows,
        outcome.rows.len()
    );
    let _ = writeln!(diag, "verify finished in {:.2} s", started.elapsed().as_secs_f64());
    if outcome.all_passed() {
        Exit::Ok
    } else {
        Exit::Failed
    }
}
