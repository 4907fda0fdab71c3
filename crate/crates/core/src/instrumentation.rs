//! Exact tallies of the real multiplications and additions a transform performs.
//!
//! The kernels are written against [`Arithmetic`]; the plain path uses the
//! zero-sized [`Exact`] context, the counted path a [`Counter`] owned by the
//! call. Both contexts perform the same floating-point operations in the same
//! order, so counting never perturbs results.

use std::fmt;
use std::ops::Add;

use crate::bridge::fourier_from_hartley_with;
use crate::error::TransformError;
use crate::fht::{fht_recursive, FhtPlan};
use crate::fwht::fwht_recursive;
use crate::kernel::require_pow2;
use crate::oracle::dht_naive_with;
use crate::scalar::Real;
use crate::signal::{nonempty, ComplexSpectrum, HadamardSpectrum, HartleySpectrum};

/// Real arithmetic as seen by a transform kernel.
pub trait Arithmetic<T> {
    fn add(&mut self, a: T, b: T) -> T;
    fn sub(&mut self, a: T, b: T) -> T;
    fn mul(&mut self, a: T, b: T) -> T;
    /// Product with a twiddle-table factor; may be skipped by the tally when trivial.
    fn scale(&mut self, a: T, factor: T) -> T;
}

/// Uninstrumented arithmetic.
#[derive(Debug, Clone, Copy, Default)]
pub struct Exact;

impl<T: Real> Arithmetic<T> for Exact {
    #[inline(always)]
    fn add(&mut self, a: T, b: T) -> T {
        a + b
    }

    #[inline(always)]
    fn sub(&mut self, a: T, b: T) -> T {
        a - b
    }

    #[inline(always)]
    fn mul(&mut self, a: T, b: T) -> T {
        a * b
    }

    #[inline(always)]
    fn scale(&mut self, a: T, factor: T) -> T {
        a * factor
    }
}

/// Real operation tally; subtractions count as additions.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct OpCount {
    pub multiplications: u64,
    pub additions: u64,
}

impl Add for OpCount {
    type Output = OpCount;

    fn add(self, rhs: OpCount) -> OpCount {
        OpCount {
            multiplications: self.multiplications + rhs.multiplications,
            additions: self.additions + rhs.additions,
        }
    }
}

impl fmt::Display for OpCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} mult, {} add", self.multiplications, self.additions)
    }
}

/// Whether products with a trivial table factor are tallied.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub enum CountingMode {
    /// Every twiddle product counts, including factors `0` and `±1`.
    #[default]
    PaperModel,
    /// Twiddle products whose factor is exactly `0`, `1` or `-1` are not counted.
    Optimized,
}

/// Counting arithmetic context.
#[derive(Debug, Clone, Copy, Default)]
pub struct Counter {
    mode: CountingMode,
    count: OpCount,
}

impl Counter {
    pub fn new(mode: CountingMode) -> Self {
        Self {
            mode,
            count: OpCount::default(),
        }
    }

    pub fn count(&self) -> OpCount {
        self.count
    }
}

impl<T: Real> Arithmetic<T> for Counter {
    fn add(&mut self, a: T, b: T) -> T {
        self.count.additions += 1;
        a + b
    }

    fn sub(&mut self, a: T, b: T) -> T {
        self.count.additions += 1;
        a - b
    }

    fn mul(&mut self, a: T, b: T) -> T {
        self.count.multiplications += 1;
        a * b
    }

    fn scale(&mut self, a: T, factor: T) -> T {
        let trivial = factor == T::zero() || factor.abs() == T::one();
        if self.mode == CountingMode::PaperModel || !trivial {
            self.count.multiplications += 1;
        }
        a * factor
    }
}

/// Upper bound `2 N log2 N` quoted for radix-2 fast transforms.
pub fn radix2_multiplication_bound(n: usize) -> u64 {
    let log2 = u64::from(n.max(1).trailing_zeros());
    2 * n as u64 * log2
}

/// Closed-form `PaperModel` multiplication count of [`counted_fht`]:
/// `N (log2 N - 1)` for `N >= 2`, zero for `N = 1`.
pub fn fht_paper_multiplications(n: usize) -> u64 {
    let log2 = u64::from(n.max(1).trailing_zeros());
    if log2 == 0 {
        0
    } else {
        n as u64 * (log2 - 1)
    }
}

/// Radix-2 FHT with its operation tally; the spectrum is bit-identical to [`crate::fht`].
pub fn counted_fht<T: Real>(
    v: &[T],
    mode: CountingMode,
) -> Result<(HartleySpectrum<T>, OpCount), TransformError> {
    let plan = FhtPlan::new(v.len())?;
    let mut counter = Counter::new(mode);
    let out = fht_recursive(v, &plan, &mut counter);
    Ok((HartleySpectrum::from_vec(out), counter.count()))
}

/// Fast Walsh-Hadamard transform with its tally: zero multiplications,
/// `N log2 N` additions.
pub fn counted_fwht<T: Real>(v: &[T]) -> Result<(HadamardSpectrum<T>, OpCount), TransformError> {
    require_pow2(v.len())?;
    let mut counter = Counter::new(CountingMode::PaperModel);
    let out = fwht_recursive(v, &mut counter);
    Ok((HadamardSpectrum::from_vec(out), counter.count()))
}

/// Direct DHT with its tally: `N^2` multiplications, `N (N - 1)` additions.
pub fn counted_dht_naive<T: Real>(v: &[T]) -> Result<(HartleySpectrum<T>, OpCount), TransformError> {
    nonempty(v)?;
    let mut counter = Counter::new(CountingMode::PaperModel);
    let out = dht_naive_with(v, &mut counter);
    Ok((HartleySpectrum::from_vec(out), counter.count()))
}

/// Real-input DFT through the FHT, tallying the FHT and the Hartley-to-Fourier step.
pub fn counted_dft_via_fht<T: Real>(
    v: &[T],
    mode: CountingMode,
) -> Result<(ComplexSpectrum<T>, OpCount), TransformError> {
    let plan = FhtPlan::new(v.len())?;
    let mut counter = Counter::new(mode);
    let hartley = fht_recursive(v, &plan, &mut counter);
    let out = fourier_from_hartley_with(&hartley, &mut counter);
    Ok((ComplexSpectrum::new(out), counter.count()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{fht, fwht};

    fn ramp(n: usize) -> Vec<f64> {
        (0..n).map(|i| ((i * 7 + 3) % 11) as f64 - 5.0).collect()
    }

    #[test]
    fn fht_paper_counts() {
        let (_, c) = counted_fht(&[1.0, -2.0], CountingMode::PaperModel).unwrap();
        assert_eq!(c.multiplications, 0);
        let (_, c) = counted_fht(&[1.0, 2.0, 3.0, 4.0], CountingMode::PaperModel).unwrap();
        assert_eq!(c.multiplications, 4);
        let (_, c) = counted_fht(&ramp(1024), CountingMode::PaperModel).unwrap();
        assert_eq!(c.multiplications, 9216);
        assert!(c.multiplications <= radix2_multiplication_bound(1024));
        assert_eq!(radix2_multiplication_bound(1024), 20480);
        let (_, c) = counted_fht(&[3.0], CountingMode::PaperModel).unwrap();
        assert_eq!(c, OpCount::default());
    }

    #[test]
    fn fht_additions_follow_recursion() {
        // split N + twiddle N/2 + two half-size subproblems; dht2 costs 2
        fn adds(n: u64) -> u64 {
            match n {
                1 => 0,
                2 => 2,
                _ => n + n / 2 + 2 * adds(n / 2),
            }
        }
        for m in 0..=12 {
            let n = 1usize << m;
            let (_, c) = counted_fht(&ramp(n), CountingMode::PaperModel).unwrap();
            assert_eq!(c.additions, adds(n as u64), "n={n}");
        }
    }

    #[test]
    fn optimized_skips_trivial_factors() {
        let (_, c) = counted_fht(&ramp(4), CountingMode::Optimized).unwrap();
        assert_eq!(c.multiplications, 0);
        for m in 3..=12 {
            let n = 1usize << m;
            let (a, paper) = counted_fht(&ramp(n), CountingMode::PaperModel).unwrap();
            let (b, opt) = counted_fht(&ramp(n), CountingMode::Optimized).unwrap();
            assert!(opt.multiplications < paper.multiplications, "n={n}");
            assert_eq!(opt.additions, paper.additions);
            assert_eq!(a, b);
        }
    }

    #[test]
    fn counting_is_transparent() {
        let v = ramp(256);
        let (s, _) = counted_fht(&v, CountingMode::PaperModel).unwrap();
        assert_eq!(s, fht(&v).unwrap());
        let (h, _) = counted_fwht(&v).unwrap();
        assert_eq!(h, fwht(&v).unwrap());
    }

    #[test]
    fn fwht_counts() {
        let (_, c) = counted_fwht(&ramp(8)).unwrap();
        assert_eq!(c, OpCount { multiplications: 0, additions: 24 });
        let (_, c) = counted_fwht(&[1.0]).unwrap();
        assert_eq!(c, OpCount::default());
        let (_, c) = counted_fwht(&[1.0, 2.0]).unwrap();
        assert_eq!(c, OpCount { multiplications: 0, additions: 2 });
    }

    #[test]
    fn naive_counts() {
        let (_, c) = counted_dht_naive(&ramp(4)).unwrap();
        assert_eq!(c, OpCount { multiplications: 16, additions: 12 });
        let (_, c) = counted_dht_naive(&[1.0]).unwrap();
        assert_eq!(c, OpCount { multiplications: 1, additions: 0 });
        let (_, c) = counted_dht_naive(&ramp(64)).unwrap();
        assert_eq!(c, OpCount { multiplications: 4096, additions: 4032 });
        let (_, c) = counted_dht_naive(&ramp(3)).unwrap();
        assert_eq!(c, OpCount { multiplications: 9, additions: 6 });
    }

    #[test]
    fn dft_count_adds_bridge_cost() {
        let v = ramp(16);
        let (_, f) = counted_fht(&v, CountingMode::PaperModel).unwrap();
        let (_, d) = counted_dft_via_fht(&v, CountingMode::PaperModel).unwrap();
        assert_eq!(d.multiplications, f.multiplications + 2 * 16);
        assert_eq!(d.additions, f.additions + 2 * 16);
    }

    #[test]
    fn counts_reject_bad_lengths() {
        assert_eq!(
            counted_fht(&ramp(12), CountingMode::PaperModel).unwrap_err(),
            TransformError::NotPowerOfTwo(12)
        );
        assert_eq!(counted_fwht(&ramp(6)).unwrap_err(), TransformError::NotPowerOfTwo(6));
    }
}
