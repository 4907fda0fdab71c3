//! Twiddle generation and precomputed per-size plans.

use crate::error::TransformError;
use crate::instrumentation::{Arithmetic, Exact};
use crate::kernel::require_pow2;
use crate::scalar::Real;
use crate::signal::HartleySpectrum;

/// `(cos(2πj/len), sin(2πj/len))`.
///
/// The angle is reduced to the first octant from the integer index before any
/// trigonometry, so multiples of a quarter turn come out as exact `0` and `±1`
/// and symmetric entries agree bit for bit.
pub fn unit_root<T: Real>(j: usize, len: usize) -> (T, T) {
    debug_assert!(len > 0);
    let j = j % len;
    // angle = (quadrant + rem / len) * π/2
    let quarters = 4 * j;
    let quadrant = quarters / len;
    let rem = quarters % len;
    let octant_angle = |r: usize| T::FRAC_PI_2() * T::from_count(r) / T::from_count(len);
    let (c, s) = if rem == 0 {
        (T::one(), T::zero())
    } else if 2 * rem == len {
        (T::FRAC_1_SQRT_2(), T::FRAC_1_SQRT_2())
    } else if 2 * rem < len {
        let (s, c) = octant_angle(rem).sin_cos();
        (c, s)
    } else {
        // cos(π/2 - φ) = sin φ
        let (s, c) = octant_angle(len - rem).sin_cos();
        (s, c)
    };
    match quadrant {
        0 => (c, s),
        1 => (-s, c),
        2 => (-c, -s),
        _ => (s, -c),
    }
}

/// cos/sin table of one stage of length `len`, entries `j = 0 .. len/2`.
#[derive(Debug, Clone, PartialEq)]
pub struct TwiddleTable<T = f64> {
    len: usize,
    cos: Vec<T>,
    sin: Vec<T>,
}

impl<T: Real> TwiddleTable<T> {
    fn new(len: usize) -> Self {
        let (cos, sin) = (0..len / 2).map(|j| unit_root::<T>(j, len)).unzip();
        Self { len, cos, sin }
    }

    pub fn stage_len(&self) -> usize {
        self.len
    }

    pub fn cos(&self) -> &[T] {
        &self.cos
    }

    pub fn sin(&self) -> &[T] {
        &self.sin
    }
}

/// Precomputed tables for repeated transforms of one power-of-two length.
#[derive(Debug, Clone, PartialEq)]
pub struct FhtPlan<T = f64> {
    n: usize,
    log2: u32,
    /// Stage lengths `N, N/2, .., 4`.
    stages: Vec<TwiddleTable<T>>,
}

impl<T: Real> FhtPlan<T> {
    pub fn new(n: usize) -> Result<Self, TransformError> {
        let p = require_pow2(n)?;
        let stages = (2..=p.log2).rev().map(|m| TwiddleTable::new(1 << m)).collect();
        Ok(Self {
            n,
            log2: p.log2,
            stages,
        })
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn stages(&self) -> &[TwiddleTable<T>] {
        &self.stages
    }

    /// Table for stage length `len` (a power of two in `4..=N`).
    pub fn stage(&self, len: usize) -> &TwiddleTable<T> {
        debug_assert!(len.is_power_of_two() && (4..=self.n).contains(&len));
        &self.stages[(self.log2 - len.trailing_zeros()) as usize]
    }

    /// Forward DHT of `v`, equal bit for bit to [`crate::fht`].
    pub fn process(&self, v: &[T]) -> Result<HartleySpectrum<T>, TransformError> {
        let mut buf = v.to_vec();
        self.process_inplace(&mut buf)?;
        Ok(HartleySpectrum::from_vec(buf))
    }

    /// Iterative in-place variant: `log2 N` split-and-twiddle passes, then a
    /// bit-reversal reorder.
    pub fn process_inplace(&self, buf: &mut [T]) -> Result<(), TransformError> {
        if buf.len() != self.n {
            return Err(TransformError::PlanSizeMismatch {
                plan: self.n,
                signal: buf.len(),
            });
        }
        let mut scratch = vec![T::zero(); self.n / 2];
        let mut ar = Exact;
        let mut len = self.n;
        while len >= 2 {
            let half = len / 2;
            for block in buf.chunks_exact_mut(len) {
                let (lo, hi) = block.split_at_mut(half);
                for (a, b) in lo.iter_mut().zip(hi.iter_mut()) {
                    let (x, y) = (*a, *b);
                    *a = ar.add(x, y);
                    *b = ar.sub(x, y);
                }
                if len >= 4 {
                    let odd = &mut scratch[..half];
                    odd.copy_from_slice(hi);
                    apply_twiddle(odd, hi, self.stage(len), &mut ar);
                }
            }
            len = half;
        }
        bit_reverse_permute(buf);
        Ok(())
    }
}

/// `out[j] = odd[j] cos_j + odd[(M - j) mod M] sin_j` from a stage table.
fn apply_twiddle<T: Real, A: Arithmetic<T>>(
    odd: &[T],
    out: &mut [T],
    table: &TwiddleTable<T>,
    ar: &mut A,
) {
    let m = odd.len();
    for (j, w) in out.iter_mut().enumerate() {
        let retro = (m - j) % m;
        let a = ar.scale(odd[j], table.cos[j]);
        let b = ar.scale(odd[retro], table.sin[j]);
        *w = ar.add(a, b);
    }
}

pub(crate) fn bit_reverse_permute<T>(buf: &mut [T]) {
    let n = buf.len();
    if n <= 2 {
        return;
    }
    let shift = usize::BITS - n.trailing_zeros();
    for i in 0..n {
        let r = i.reverse_bits() >> shift;
        if i < r {
            buf.swap(i, r);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quarter_turns_are_exact() {
        for len in [4usize, 8, 16, 1024] {
            assert_eq!(unit_root::<f64>(0, len), (1.0, 0.0));
            assert_eq!(unit_root::<f64>(len / 4, len), (0.0, 1.0));
            assert_eq!(unit_root::<f64>(len / 2, len), (-1.0, 0.0));
            assert_eq!(unit_root::<f64>(3 * len / 4, len), (0.0, -1.0));
        }
    }

    #[test]
    fn unit_root_matches_direct_evaluation() {
        for len in [3usize, 5, 8, 12, 64, 4096, 1 << 16] {
            for j in 0..len.min(5000) {
                let (c, s) = unit_root::<f64>(j, len);
                let angle = 2.0 * std::f64::consts::PI * j as f64 / len as f64;
                // direct evaluation carries the rounding of 2π·j/len, up to a few ulps of π
                assert!((c - angle.cos()).abs() <= 4.0 * f64::EPSILON, "len={len} j={j}");
                assert!((s - angle.sin()).abs() <= 4.0 * f64::EPSILON, "len={len} j={j}");
            }
        }
    }

    #[test]
    fn unit_root_is_symmetric() {
        let len = 256;
        for j in 1..len / 2 {
            let (c, s) = unit_root::<f64>(j, len);
            let (c2, s2) = unit_root::<f64>(len - j, len);
            assert_eq!((c, s), (c2, -s2));
            let (c3, s3) = unit_root::<f64>(len / 2 - j, len);
            assert_eq!((c, s), (-c3, s3));
        }
    }

    #[test]
    fn plan_tables_halve() {
        let plan = FhtPlan::<f64>::new(64).unwrap();
        let lens: Vec<usize> = plan.stages().iter().map(|t| t.stage_len()).collect();
        assert_eq!(lens, vec![64, 32, 16, 8, 4]);
        for t in plan.stages() {
            assert_eq!(t.cos().len(), t.stage_len() / 2);
            assert_eq!(t.sin().len(), t.stage_len() / 2);
        }
        assert_eq!(plan.stage(16).stage_len(), 16);
        assert!(FhtPlan::<f64>::new(2).unwrap().stages().is_empty());
        assert!(FhtPlan::<f64>::new(1).unwrap().stages().is_empty());
        assert_eq!(FhtPlan::<f64>::new(12), Err(TransformError::NotPowerOfTwo(12)));
    }

    #[test]
    fn plan_examples() {
        let plan = FhtPlan::new(4).unwrap();
        assert_eq!(plan.process(&[1.0, 2.0, 3.0, 4.0]).unwrap().as_slice(), &[10.0, -4.0, -2.0, 0.0]);
        assert_eq!(FhtPlan::new(1).unwrap().process(&[-7.5]).unwrap().as_slice(), &[-7.5]);
        assert_eq!(
            FhtPlan::<f64>::new(8).unwrap().process(&[1.0; 4]),
            Err(TransformError::PlanSizeMismatch { plan: 8, signal: 4 })
        );
    }

    #[test]
    fn bit_reversal() {
        let mut v: Vec<usize> = (0..8).collect();
        bit_reverse_permute(&mut v);
        assert_eq!(v, vec![0, 4, 2, 6, 1, 5, 3, 7]);
        let mut twice: Vec<usize> = (0..64).collect();
        bit_reverse_permute(&mut twice);
        bit_reverse_permute(&mut twice);
        assert_eq!(twice, (0..64).collect::<Vec<_>>());
    }
}
