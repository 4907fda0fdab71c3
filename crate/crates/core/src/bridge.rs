//! Exact conversions between Hartley and Fourier spectra of real signals.
//!
//! `H_k = Re F_k - Im F_k` and
//! `F_k = ((H_k + H_{N-k}) - j (H_k - H_{N-k})) / 2`, with `N - k` taken mod `N`.

use num_complex::Complex;

use crate::error::TransformError;
use crate::fht::fht;
use crate::instrumentation::{Arithmetic, Exact};
use crate::scalar::Real;
use crate::signal::{nonempty, ComplexSpectrum, HartleySpectrum};

/// `H_k = Re F_k - Im F_k`. Only meaningful for spectra of real signals; the
/// formula itself is total.
pub fn hartley_from_fourier<T: Real>(
    fourier: &[Complex<T>],
) -> Result<HartleySpectrum<T>, TransformError> {
    nonempty(fourier)?;
    Ok(HartleySpectrum::from_vec(
        fourier.iter().map(|c| c.re - c.im).collect(),
    ))
}

pub(crate) fn fourier_from_hartley_with<T: Real, A: Arithmetic<T>>(
    hartley: &[T],
    ar: &mut A,
) -> Vec<Complex<T>> {
    let n = hartley.len();
    let half = T::lit(0.5);
    (0..n)
        .map(|k| {
            let h = hartley[k];
            let mirror = hartley[(n - k) % n];
            let even = ar.add(h, mirror);
            // -(H_k - H_{N-k}) / 2 without producing -0.0
            let odd = ar.sub(mirror, h);
            Complex::new(ar.mul(even, half), ar.mul(odd, half))
        })
        .collect()
}

/// `F_k` from `H_k` and `H_{(N-k) mod N}`.
pub fn fourier_from_hartley<T: Real>(hartley: &[T]) -> Result<ComplexSpectrum<T>, TransformError> {
    nonempty(hartley)?;
    Ok(ComplexSpectrum::new(fourier_from_hartley_with(hartley, &mut Exact)))
}

/// Real-input DFT computed through the fast Hartley transform.
pub fn dft_via_fht<T: Real>(v: &[T]) -> Result<ComplexSpectrum<T>, TransformError> {
    let hartley = fht(v)?;
    Ok(ComplexSpectrum::new(fourier_from_hartley_with(&hartley, &mut Exact)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex<f64> {
        Complex::new(re, im)
    }

    #[test]
    fn hartley_from_fourier_examples() {
        let h = hartley_from_fourier(&[c(4.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)]).unwrap();
        assert_eq!(h.as_slice(), &[4.0, 0.0, 0.0, 0.0]);
        let h = hartley_from_fourier(&[c(10.0, 0.0), c(-2.0, 2.0), c(-2.0, 0.0), c(-2.0, -2.0)]).unwrap();
        assert_eq!(h.as_slice(), &[10.0, -4.0, -2.0, 0.0]);
        assert_eq!(hartley_from_fourier(&[c(0.0, 1.0)]).unwrap().as_slice(), &[-1.0]);
    }

    #[test]
    fn fourier_from_hartley_examples() {
        let f = fourier_from_hartley(&[10.0, -4.0, -2.0, 0.0]).unwrap();
        assert_eq!(f.as_slice(), &[c(10.0, 0.0), c(-2.0, 2.0), c(-2.0, 0.0), c(-2.0, -2.0)]);
        let f = fourier_from_hartley(&[4.0, 0.0, 0.0, 0.0]).unwrap();
        assert!(f.iter().all(|z| z.im == 0.0));
        assert_eq!(f[0], c(4.0, 0.0));
        // even Hartley spectrum -> purely real Fourier spectrum
        let f = fourier_from_hartley(&[3.0, 1.5, -2.0, 7.0, -2.0, 1.5]).unwrap();
        assert!(f.iter().all(|z| z.im == 0.0));
    }

    #[test]
    fn dft_via_fht_examples() {
        let f = dft_via_fht(&[1.0, 2.0, 3.0, 4.0]).unwrap();
        assert_eq!(f.as_slice(), &[c(10.0, 0.0), c(-2.0, 2.0), c(-2.0, 0.0), c(-2.0, -2.0)]);
        let f = dft_via_fht(&[1.0; 16]).unwrap();
        assert_eq!(f[0], c(16.0, 0.0));
        assert!(f[1..].iter().all(|z| z.norm() == 0.0));
        assert_eq!(dft_via_fht(&[1.0; 5]).unwrap_err(), TransformError::NotPowerOfTwo(5));
    }
}
