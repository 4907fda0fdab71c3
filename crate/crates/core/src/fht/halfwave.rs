//! Even/odd half-wave decomposition of a length-`N` signal.

use crate::error::TransformError;
use crate::instrumentation::{Arithmetic, Exact};
use crate::scalar::Real;
use crate::signal::Signal;

/// First halves of the even and odd half-wave parts:
/// `even[i] = v[i] + v[i + N/2]`, `odd[i] = v[i] - v[i + N/2]`.
#[derive(Debug, Clone, PartialEq)]
pub struct HalfWaveParts<T = f64> {
    even: Vec<T>,
    odd: Vec<T>,
}

impl<T: Real> HalfWaveParts<T> {
    pub fn new(even: Vec<T>, odd: Vec<T>) -> Result<Self, TransformError> {
        if even.is_empty() {
            return Err(TransformError::EmptySignal);
        }
        if even.len() != odd.len() {
            return Err(TransformError::LengthMismatch {
                expected: even.len(),
                found: odd.len(),
            });
        }
        Ok(Self { even, odd })
    }

    pub fn even(&self) -> &[T] {
        &self.even
    }

    pub fn odd(&self) -> &[T] {
        &self.odd
    }

    pub fn into_parts(self) -> (Vec<T>, Vec<T>) {
        (self.even, self.odd)
    }

    /// Length of the source signal.
    pub fn source_len(&self) -> usize {
        2 * self.even.len()
    }

    /// Full-length even part: `even` repeated, period `N/2`.
    pub fn full_even(&self) -> Vec<T> {
        self.even.iter().chain(&self.even).copied().collect()
    }

    /// Full-length odd part: `odd` followed by its negation (anti-period `N/2`).
    pub fn full_odd(&self) -> Vec<T> {
        self.odd
            .iter()
            .copied()
            .chain(self.odd.iter().map(|&x| -x))
            .collect()
    }
}

pub(crate) fn split_with<T: Real, A: Arithmetic<T>>(v: &[T], ar: &mut A) -> (Vec<T>, Vec<T>) {
    let (lo, hi) = v.split_at(v.len() / 2);
    let even = lo.iter().zip(hi).map(|(&a, &b)| ar.add(a, b)).collect();
    let odd = lo.iter().zip(hi).map(|(&a, &b)| ar.sub(a, b)).collect();
    (even, odd)
}

/// Splits `v` (even length) into its half-wave parts.
pub fn half_wave_split<T: Real>(v: &[T]) -> Result<HalfWaveParts<T>, TransformError> {
    if v.is_empty() {
        return Err(TransformError::EmptySignal);
    }
    if !v.len().is_multiple_of(2) {
        return Err(TransformError::OddLength(v.len()));
    }
    let (even, odd) = split_with(v, &mut Exact);
    Ok(HalfWaveParts { even, odd })
}

/// Inverts [`half_wave_split`] via `v = (v_e + v_o) / 2`.
pub fn reconstruct_from_halfwaves<T: Real>(parts: &HalfWaveParts<T>) -> Signal<T> {
    let half = T::lit(0.5);
    let lo = parts.even.iter().zip(&parts.odd).map(|(&e, &o)| (e + o) * half);
    let hi = parts.even.iter().zip(&parts.odd).map(|(&e, &o)| (e - o) * half);
    let samples: Vec<T> = lo.chain(hi).collect();
    Signal::new(samples).expect("parts are non-empty")
}
