//! Radix-2 decimation-in-frequency fast Hartley transform.
//!
//! A length-`N` DHT splits into two length-`N/2` DHTs. With `u_e`, `u_o` the
//! half-wave parts of `v`:
//!
//! * `V[2k] = DHT(u_e)[k]`
//! * `V[2k + 1] = DHT(w)[k]`, where
//!   `w[j] = u_o[j] cos(2πj/N) + u_o[(M - j) mod M] sin(2πj/N)`, `M = N/2`.
//!
//! The odd-branch adjustment follows from `cas(a + b) = cas(a) cos b + cas(-a) sin b`
//! applied to `cas(2π(2k+1)i/N)`.

mod halfwave;
mod plan;

pub use halfwave::{half_wave_split, reconstruct_from_halfwaves, HalfWaveParts};
pub use plan::{unit_root, FhtPlan, TwiddleTable};

pub(crate) use halfwave::split_with;

use crate::error::TransformError;
use crate::instrumentation::{Arithmetic, Exact};
use crate::kernel::require_pow2;
use crate::scalar::Real;
use crate::signal::{HartleySpectrum, Signal};

/// The length-2 DHT (and length-2 Hadamard transform): `(a + b, a - b)`.
pub fn dht2<T: Real>(a: T, b: T) -> (T, T) {
    (a + b, a - b)
}

fn twiddle_odd_with<T: Real, A: Arithmetic<T>>(
    odd: &[T],
    factor: impl Fn(usize) -> (T, T),
    ar: &mut A,
) -> Vec<T> {
    let m = odd.len();
    (0..m)
        .map(|j| {
            let (c, s) = factor(j);
            let a = ar.scale(odd[j], c);
            let b = ar.scale(odd[(m - j) % m], s);
            ar.add(a, b)
        })
        .collect()
}

/// Odd-branch adjustment: turns the odd half-wave part of a length-`parent_len`
/// signal into a vector whose length-`parent_len/2` DHT gives the odd-indexed
/// parent components.
pub fn twiddle_odd<T: Real>(odd: &[T], parent_len: usize) -> Result<Vec<T>, TransformError> {
    let parent = require_pow2(parent_len)?;
    if parent.n < 2 {
        return Err(TransformError::OddLength(parent.n));
    }
    if odd.len() * 2 != parent.n {
        return Err(TransformError::LengthMismatch {
            expected: parent.n / 2,
            found: odd.len(),
        });
    }
    Ok(twiddle_odd_with(odd, |j| unit_root(j, parent.n), &mut Exact))
}

/// Canonical out-of-place recursion. Requires `v.len() <= plan.len()`.
pub(crate) fn fht_recursive<T: Real, A: Arithmetic<T>>(v: &[T], plan: &FhtPlan<T>, ar: &mut A) -> Vec<T> {
    let n = v.len();
    match n {
        1 => vec![v[0]],
        2 => vec![ar.add(v[0], v[1]), ar.sub(v[0], v[1])],
        _ => {
            let (even, odd) = split_with(v, ar);
            let table = plan.stage(n);
            let w = twiddle_odd_with(&odd, |j| (table.cos()[j], table.sin()[j]), ar);
            let even_spec = fht_recursive(&even, plan, ar);
            let odd_spec = fht_recursive(&w, plan, ar);
            even_spec
                .into_iter()
                .zip(odd_spec)
                .flat_map(|(e, o)| [e, o])
                .collect()
        }
    }
}

/// Forward DHT of a power-of-two length signal (unnormalized).
///
/// Builds the twiddle tables for this call; use [`FhtPlan`] to amortize them
/// over repeated transforms of one length.
pub fn fht<T: Real>(v: &[T]) -> Result<HartleySpectrum<T>, TransformError> {
    let plan = FhtPlan::new(v.len())?;
    Ok(HartleySpectrum::from_vec(fht_recursive(v, &plan, &mut Exact)))
}

/// Forward DHT using precomputed tables; bit-identical to [`fht`].
pub fn fht_with_plan<T: Real>(plan: &FhtPlan<T>, v: &[T]) -> Result<HartleySpectrum<T>, TransformError> {
    plan.process(v)
}

/// Recursive path reusing a plan's tables.
pub fn fht_recursive_with_plan<T: Real>(
    plan: &FhtPlan<T>,
    v: &[T],
) -> Result<HartleySpectrum<T>, TransformError> {
    if v.len() != plan.len() {
        return Err(TransformError::PlanSizeMismatch {
            plan: plan.len(),
            signal: v.len(),
        });
    }
    Ok(HartleySpectrum::from_vec(fht_recursive(v, plan, &mut Exact)))
}

/// Inverse DHT: the forward transform scaled by `1/N`.
pub fn ifht<T: Real>(spectrum: &[T]) -> Result<Signal<T>, TransformError> {
    let plan = FhtPlan::new(spectrum.len())?;
    let scale = T::from_count(plan.len()).recip();
    let mut out = fht_recursive(spectrum, &plan, &mut Exact);
    out.iter_mut().for_each(|x| *x = *x * scale);
    Signal::new(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::dht_naive;

    fn pseudo(n: usize, salt: u64) -> Vec<f64> {
        let mut s = salt.wrapping_mul(0x9e37_79b9_7f4a_7c15) | 1;
        (0..n)
            .map(|_| {
                s ^= s << 13;
                s ^= s >> 7;
                s ^= s << 17;
                (s >> 11) as f64 / (1u64 << 53) as f64 * 2.0 - 1.0
            })
            .collect()
    }

    #[test]
    fn dht2_examples() {
        assert_eq!(dht2(1.0, 1.0), (2.0, 0.0));
        assert_eq!(dht2(1.0, 0.0), (1.0, 1.0));
        assert_eq!(dht2(3.0, 5.0), (8.0, -2.0));
    }

    #[test]
    fn twiddle_examples() {
        assert_eq!(twiddle_odd(&[-2.0, -2.0], 4).unwrap(), vec![-2.0, -2.0]);
        assert_eq!(twiddle_odd(&[0.0; 8], 16).unwrap(), vec![0.0; 8]);
        let u = pseudo(32, 3);
        assert_eq!(twiddle_odd(&u, 64).unwrap()[0], u[0]);
        assert_eq!(twiddle_odd(&[5.0], 2).unwrap(), vec![5.0]);
    }

    #[test]
    fn twiddle_errors() {
        assert_eq!(
            twiddle_odd(&[1.0, 2.0, 3.0], 8),
            Err(TransformError::LengthMismatch { expected: 4, found: 3 })
        );
        assert_eq!(twiddle_odd(&[1.0; 3], 6), Err(TransformError::NotPowerOfTwo(6)));
        assert_eq!(twiddle_odd::<f64>(&[], 1), Err(TransformError::OddLength(1)));
    }

    #[test]
    fn fht_examples() {
        assert_eq!(fht(&[1.0, 2.0, 3.0, 4.0]).unwrap().as_slice(), &[10.0, -4.0, -2.0, 0.0]);
        for m in 0..=10 {
            let mut v = vec![0.0; 1 << m];
            v[0] = 1.0;
            assert!(fht(&v).unwrap().iter().all(|&x| x == 1.0), "m={m}");
        }
        assert_eq!(fht(&[1.0; 6]), Err(TransformError::NotPowerOfTwo(6)));
        assert_eq!(fht::<f64>(&[]), Err(TransformError::EmptySignal));
    }

    #[test]
    fn fht_matches_naive_at_64() {
        let v = pseudo(64, 11);
        let fast = fht(&v).unwrap();
        let slow = dht_naive(&v).unwrap();
        for (a, b) in fast.iter().zip(slow.iter()) {
            assert!((a - b).abs() < 1e-12);
        }
    }

    #[test]
    fn ifht_examples() {
        assert_eq!(ifht(&[10.0, -4.0, -2.0, 0.0]).unwrap().as_slice(), &[1.0, 2.0, 3.0, 4.0]);
        assert_eq!(ifht(&[4.0, 0.0, 0.0, 0.0]).unwrap().as_slice(), &[1.0; 4]);
        assert_eq!(ifht(&[1.0; 3]), Err(TransformError::NotPowerOfTwo(3)));
    }

    #[test]
    fn plan_paths_agree_bitwise() {
        for m in 0..=11 {
            let n = 1 << m;
            let plan = FhtPlan::new(n).unwrap();
            for salt in 0..4 {
                let v = pseudo(n, salt + 100 * m as u64);
                let reference = fht(&v).unwrap();
                assert_eq!(fht_with_plan(&plan, &v).unwrap(), reference, "n={n}");
                assert_eq!(fht_recursive_with_plan(&plan, &v).unwrap(), reference, "n={n}");
            }
        }
        let plan = FhtPlan::<f64>::new(8).unwrap();
        assert_eq!(
            fht_recursive_with_plan(&plan, &[1.0; 4]),
            Err(TransformError::PlanSizeMismatch { plan: 8, signal: 4 })
        );
    }

    #[test]
    fn single_precision() {
        let v: Vec<f32> = pseudo(256, 5).into_iter().map(|x| x as f32).collect();
        let fast = fht(&v).unwrap();
        let slow = dht_naive(&v).unwrap();
        let scale = slow.iter().fold(0.0f32, |m, x| m.max(x.abs()));
        for (a, b) in fast.iter().zip(slow.iter()) {
            assert!((a - b).abs() <= 1e-4 * scale);
        }
    }
}
