//! Multiplication-free fast Walsh-Hadamard transform, natural (Sylvester) order.
//!
//! Same split as the Hartley recursion, minus the twiddle:
//! `FWHT(v) = FWHT(u_e) ++ FWHT(u_o)`.

use crate::error::TransformError;
use crate::fht::split_with;
use crate::instrumentation::{Arithmetic, Exact};
use crate::kernel::require_pow2;
use crate::scalar::Real;
use crate::signal::{HadamardSpectrum, Signal};

pub(crate) fn fwht_recursive<T: Real, A: Arithmetic<T>>(v: &[T], ar: &mut A) -> Vec<T> {
    if v.len() == 1 {
        return vec![v[0]];
    }
    let (even, odd) = split_with(v, ar);
    let mut out = fwht_recursive(&even, ar);
    out.extend(fwht_recursive(&odd, ar));
    out
}

pub fn fwht<T: Real>(v: &[T]) -> Result<HadamardSpectrum<T>, TransformError> {
    require_pow2(v.len())?;
    Ok(HadamardSpectrum::from_vec(fwht_recursive(v, &mut Exact)))
}

/// In-place butterflies at strides `N/2, N/4, .., 1`; same bits as [`fwht`].
pub fn fwht_inplace<T: Real>(v: &mut [T]) -> Result<(), TransformError> {
    require_pow2(v.len())?;
    let mut half = v.len() / 2;
    while half >= 1 {
        for block in v.chunks_exact_mut(2 * half) {
            let (lo, hi) = block.split_at_mut(half);
            for (a, b) in lo.iter_mut().zip(hi.iter_mut()) {
                let (x, y) = (*a, *b);
                *a = x + y;
                *b = x - y;
            }
        }
        half /= 2;
    }
    Ok(())
}

/// Inverse: the forward transform scaled by `1/N`.
pub fn ifwht<T: Real>(spectrum: &[T]) -> Result<Signal<T>, TransformError> {
    let n = require_pow2(spectrum.len())?.n;
    let scale = T::from_count(n).recip();
    let mut out = spectrum.to_vec();
    fwht_inplace(&mut out)?;
    out.iter_mut().for_each(|x| *x = *x * scale);
    Signal::new(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::fwht_naive;

    #[test]
    fn examples() {
        assert_eq!(fwht(&[1.0, 2.0, 3.0, 4.0]).unwrap().as_slice(), &[10.0, -2.0, -4.0, 0.0]);
        let mut impulse = vec![0.0; 8];
        impulse[0] = 1.0;
        assert_eq!(fwht(&impulse).unwrap().as_slice(), &[1.0; 8]);
        assert_eq!(fwht(&[1.0; 4]).unwrap().as_slice(), &[4.0, 0.0, 0.0, 0.0]);
        assert_eq!(fwht(&[1.0; 12]), Err(TransformError::NotPowerOfTwo(12)));
    }

    #[test]
    fn inplace_examples() {
        let mut v = [1.0, 2.0, 3.0, 4.0];
        fwht_inplace(&mut v).unwrap();
        assert_eq!(v, [10.0, -2.0, -4.0, 0.0]);
        let mut one = [3.25];
        fwht_inplace(&mut one).unwrap();
        assert_eq!(one, [3.25]);
        assert_eq!(fwht_inplace(&mut [1.0; 5]), Err(TransformError::NotPowerOfTwo(5)));
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(ifwht(&[4.0, 0.0, 0.0, 0.0]).unwrap().as_slice(), &[1.0; 4]);
        assert_eq!(ifwht(&[10.0, -2.0, -4.0, 0.0]).unwrap().as_slice(), &[1.0, 2.0, 3.0, 4.0]);
    }

    #[test]
    fn integer_inputs_match_matrix_exactly() {
        for m in 0..=8 {
            let n = 1usize << m;
            let v: Vec<f64> = (0..n).map(|i| ((i * 37 + 11) % 23) as f64 - 11.0).collect();
            assert_eq!(fwht(&v).unwrap(), fwht_naive(&v).unwrap(), "n={n}");
            let back = ifwht(&fwht(&v).unwrap()).unwrap();
            assert_eq!(back.as_slice(), v.as_slice());
        }
    }
}
