//! The cas kernel, power-of-two validation and spectrum comparison.

use crate::error::TransformError;
use crate::scalar::Real;

/// `cos(x) + sin(x)`, the Hartley kernel.
pub fn cas<T: Real>(x: T) -> T {
    let (s, c) = x.sin_cos();
    c + s
}

/// A length known to be `2^log2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Pow2 {
    pub n: usize,
    pub log2: u32,
}

/// Accepts `n = 2^m`, returning `n` with its exponent.
pub fn require_pow2(n: usize) -> Result<Pow2, TransformError> {
    if n == 0 {
        return Err(TransformError::EmptySignal);
    }
    if !n.is_power_of_two() {
        return Err(TransformError::NotPowerOfTwo(n));
    }
    Ok(Pow2 {
        n,
        log2: n.trailing_zeros(),
    })
}

/// Relative max-norm bound with an absolute floor for near-zero references.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerance<T = f64> {
    rel_linf: T,
    abs_floor: T,
}

impl<T: Real> Tolerance<T> {
    /// Returns `None` unless `rel_linf > 0` and `abs_floor >= 0`.
    pub fn new(rel_linf: T, abs_floor: T) -> Option<Self> {
        (rel_linf > T::zero() && abs_floor >= T::zero()).then_some(Self { rel_linf, abs_floor })
    }

    /// Like [`Tolerance::new`] but admits `rel_linf == 0`, i.e. bitwise-equal comparisons
    /// (up to the sign of zero).
    pub fn exact_or(rel_linf: T, abs_floor: T) -> Option<Self> {
        (rel_linf >= T::zero() && abs_floor >= T::zero()).then_some(Self { rel_linf, abs_floor })
    }

    pub fn rel_linf(&self) -> T {
        self.rel_linf
    }

    pub fn abs_floor(&self) -> T {
        self.abs_floor
    }

    /// Largest admissible `max_k |a_k - b_k|` against reference `b`.
    pub fn bound(&self, reference: &[T]) -> T {
        self.rel_linf * max_abs(reference).max(self.abs_floor)
    }
}

impl<T: Real> Default for Tolerance<T> {
    /// `1e-10` relative (or `1000 ε` if that is looser) with a `1e-300` floor.
    fn default() -> Self {
        let rel = T::lit(1e-10).max(T::epsilon() * T::lit(1e3));
        Self {
            rel_linf: rel,
            abs_floor: T::lit(1e-300).max(T::zero()),
        }
    }
}

pub fn max_abs<T: Real>(v: &[T]) -> T {
    v.iter().fold(T::zero(), |m, x| m.max(x.abs()))
}

/// `max_k |a_k - b_k|`; NaN anywhere yields NaN.
pub fn max_abs_diff<T: Real>(a: &[T], b: &[T]) -> Result<T, TransformError> {
    if a.len() != b.len() {
        return Err(TransformError::LengthMismatch {
            expected: b.len(),
            found: a.len(),
        });
    }
    let mut worst = T::zero();
    for (&x, &y) in a.iter().zip(b) {
        let d = (x - y).abs();
        if d.is_nan() {
            return Ok(d);
        }
        worst = worst.max(d);
    }
    Ok(worst)
}

/// `max_k |a_k - b_k| <= rel_linf * max(max_k |b_k|, abs_floor)`.
pub fn spectra_close<T: Real>(a: &[T], b: &[T], tol: &Tolerance<T>) -> Result<bool, TransformError> {
    let err = max_abs_diff(a, b)?;
    Ok(err <= tol.bound(b))
}
