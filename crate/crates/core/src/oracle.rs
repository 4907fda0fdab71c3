//! Brute-force `O(N^2)` transforms used as ground truth.
//!
//! Every function here evaluates its defining sum directly, ascending index,
//! without compensated summation. None of them share code with the fast paths
//! beyond the [`Arithmetic`] hook that lets the Hartley oracle report its
//! operation count.

use num_complex::Complex;

use crate::error::TransformError;
use crate::instrumentation::{Arithmetic, Exact};
use crate::kernel::{cas, require_pow2};
use crate::scalar::Real;
use crate::signal::{nonempty, ComplexSpectrum, HadamardSpectrum, HartleySpectrum, Signal};

/// Largest Hadamard order the oracle will materialize (`4096 x 4096` entries).
pub const MAX_HADAMARD_ORDER: usize = 1 << 12;

/// `cas(2π r / N)` for `r = 0..N`, evaluated from the angle formula.
fn cas_row<T: Real>(n: usize) -> Vec<T> {
    let len = T::from_count(n);
    (0..n)
        .map(|r| cas(T::TAU() * T::from_count(r) / len))
        .collect()
}

pub(crate) fn dht_naive_with<T: Real, A: Arithmetic<T>>(v: &[T], ar: &mut A) -> Vec<T> {
    let n = v.len();
    let kernel = cas_row::<T>(n);
    (0..n)
        .map(|k| {
            // (k * i) mod N, advanced incrementally
            let mut idx = 0usize;
            let mut acc = ar.mul(v[0], kernel[0]);
            for &x in &v[1..] {
                idx += k;
                if idx >= n {
                    idx -= n;
                }
                let term = ar.mul(x, kernel[idx]);
                acc = ar.add(acc, term);
            }
            acc
        })
        .collect()
}

/// `V_k = Σ_i v_i cas(2πki/N)` for any `N >= 1`.
pub fn dht_naive<T: Real>(v: &[T]) -> Result<HartleySpectrum<T>, TransformError> {
    nonempty(v)?;
    Ok(HartleySpectrum::from_vec(dht_naive_with(v, &mut Exact)))
}

/// `v_i = (1/N) Σ_k V_k cas(2πki/N)`.
pub fn idht_naive<T: Real>(spectrum: &[T]) -> Result<Signal<T>, TransformError> {
    let n = nonempty(spectrum)?;
    let scale = T::from_count(n).recip();
    Signal::new(
        dht_naive_with(spectrum, &mut Exact)
            .into_iter()
            .map(|x| x * scale)
            .collect(),
    )
}

/// `F_k = Σ_i v_i exp(-2πjki/N)` for real input, any `N >= 1`.
pub fn dft_naive<T: Real>(v: &[T]) -> Result<ComplexSpectrum<T>, TransformError> {
    let n = nonempty(v)?;
    let len = T::from_count(n);
    let roots: Vec<(T, T)> = (0..n)
        .map(|r| (T::TAU() * T::from_count(r) / len).sin_cos())
        .collect();
    let out = (0..n)
        .map(|k| {
            let mut idx = 0usize;
            let mut re = T::zero();
            let mut im = T::zero();
            for &x in v {
                let (s, c) = roots[idx];
                re = re + x * c;
                im = im - x * s;
                idx += k;
                if idx >= n {
                    idx -= n;
                }
            }
            Complex::new(re, im)
        })
        .collect();
    Ok(ComplexSpectrum::new(out))
}

/// Natural-order Hadamard matrix from the Sylvester doubling
/// `H_{2L} = [[H_L, H_L], [H_L, -H_L]]`, `H_1 = [1]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HadamardMatrix {
    order: usize,
    entries: Vec<i8>,
}

impl HadamardMatrix {
    pub fn sylvester(order: usize) -> Result<Self, TransformError> {
        require_pow2(order)?;
        if order > MAX_HADAMARD_ORDER {
            return Err(TransformError::OracleTooLarge(order));
        }
        let mut entries = vec![1i8];
        let mut size = 1;
        while size < order {
            let next = size * 2;
            let mut grown = vec![0i8; next * next];
            for r in 0..size {
                for c in 0..size {
                    let h = entries[r * size + c];
                    grown[r * next + c] = h;
                    grown[r * next + c + size] = h;
                    grown[(r + size) * next + c] = h;
                    grown[(r + size) * next + c + size] = -h;
                }
            }
            entries = grown;
            size = next;
        }
        Ok(Self { order, entries })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn entry(&self, row: usize, col: usize) -> i8 {
        self.entries[row * self.order + col]
    }

    pub fn row(&self, row: usize) -> &[i8] {
        &self.entries[row * self.order..(row + 1) * self.order]
    }

    /// Matrix-vector product `H · v`.
    pub fn apply<T: Real>(&self, v: &[T]) -> Result<Vec<T>, TransformError> {
        if v.len() != self.order {
            return Err(TransformError::LengthMismatch {
                expected: self.order,
                found: v.len(),
            });
        }
        Ok((0..self.order)
            .map(|r| {
                self.row(r).iter().zip(v).fold(T::zero(), |acc, (&h, &x)| {
                    if h > 0 {
                        acc + x
                    } else {
                        acc - x
                    }
                })
            })
            .collect())
    }
}

/// `H_N · v` with an explicit Sylvester matrix; `N = 2^m <= 4096`.
pub fn fwht_naive<T: Real>(v: &[T]) -> Result<HadamardSpectrum<T>, TransformError> {
    let matrix = HadamardMatrix::sylvester(nonempty(v)?)?;
    Ok(HadamardSpectrum::from_vec(matrix.apply(v)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn assert_close(a: &[f64], b: &[f64], eps: f64) {
        assert_eq!(a.len(), b.len());
        for (k, (x, y)) in a.iter().zip(b).enumerate() {
            assert!((x - y).abs() <= eps, "index {k}: {x} vs {y}");
        }
    }

    #[test]
    fn dht_worked_examples() {
        assert_close(&dht_naive(&[1.0, 0.0, 0.0, 0.0]).unwrap(), &[1.0; 4], 1e-14);
        assert_close(&dht_naive(&[1.0; 4]).unwrap(), &[4.0, 0.0, 0.0, 0.0], 1e-14);
        assert_close(&dht_naive(&[1.0, 2.0, 3.0, 4.0]).unwrap(), &[10.0, -4.0, -2.0, 0.0], 1e-14);
        assert_close(&dht_naive(&[0.0, 1.0, 0.0, 0.0]).unwrap(), &[1.0, 1.0, -1.0, -1.0], 1e-14);
        assert_eq!(dht_naive::<f64>(&[]), Err(TransformError::EmptySignal));
    }

    #[test]
    fn idht_examples() {
        assert_close(&idht_naive(&[4.0, 0.0, 0.0, 0.0]).unwrap(), &[1.0; 4], 1e-14);
        assert_close(&idht_naive(&[10.0, -4.0, -2.0, 0.0]).unwrap(), &[1.0, 2.0, 3.0, 4.0], 1e-14);
        assert_eq!(idht_naive(&[7.0]).unwrap().as_slice(), &[7.0]);
    }

    #[test]
    fn dft_examples() {
        let f = dft_naive(&[1.0; 4]).unwrap();
        assert!((f[0] - Complex::new(4.0, 0.0)).norm() < 1e-14);
        assert!(f[1..].iter().all(|c| c.norm() < 1e-14));

        let f = dft_naive(&[1.0, 2.0, 3.0, 4.0]).unwrap();
        let want = [
            Complex::new(10.0, 0.0),
            Complex::new(-2.0, 2.0),
            Complex::new(-2.0, 0.0),
            Complex::new(-2.0, -2.0),
        ];
        for (got, want) in f.iter().zip(want) {
            assert!((got - want).norm() < 1e-14, "{got} vs {want}");
        }
        assert!((f[3] - f[1].conj()).norm() < 1e-14);
        assert_eq!(dft_naive(&[2.5]).unwrap().as_slice(), &[Complex::new(2.5, 0.0)]);
    }

    #[test]
    fn sylvester_h4_rows() {
        let h = HadamardMatrix::sylvester(4).unwrap();
        assert_eq!(h.row(0), &[1, 1, 1, 1]);
        assert_eq!(h.row(1), &[1, -1, 1, -1]);
        assert_eq!(h.row(2), &[1, 1, -1, -1]);
        assert_eq!(h.row(3), &[1, -1, -1, 1]);
    }

    #[test]
    fn sylvester_is_orthogonal() {
        for m in 0..=6 {
            let n = 1 << m;
            let h = HadamardMatrix::sylvester(n).unwrap();
            for r in 0..n {
                for c in 0..n {
                    assert!(h.entry(r, c) == 1 || h.entry(r, c) == -1);
                    let dot: i64 = (0..n).map(|k| i64::from(h.entry(r, k)) * i64::from(h.entry(c, k))).sum();
                    assert_eq!(dot, if r == c { n as i64 } else { 0 });
                }
            }
        }
    }

    #[test]
    fn sylvester_limits() {
        assert_eq!(HadamardMatrix::sylvester(12), Err(TransformError::NotPowerOfTwo(12)));
        assert_eq!(
            HadamardMatrix::sylvester(1 << 13),
            Err(TransformError::OracleTooLarge(1 << 13))
        );
    }

    #[test]
    fn fwht_naive_examples() {
        assert_eq!(fwht_naive(&[1.0, 0.0, 0.0, 0.0]).unwrap().as_slice(), &[1.0; 4]);
        assert_eq!(fwht_naive(&[1.0; 8]).unwrap().as_slice(), &[8.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0]);
        assert_eq!(fwht_naive(&[1.0, 2.0, 3.0, 4.0]).unwrap().as_slice(), &[10.0, -2.0, -4.0, 0.0]);
        assert_eq!(fwht_naive(&[1.0, 2.0, 3.0]), Err(TransformError::NotPowerOfTwo(3)));
    }
}
