//! Domain vectors: signals and the three spectrum kinds.

use std::ops::Deref;

use num_complex::Complex;

use crate::error::TransformError;

macro_rules! real_vector {
    ($(#[$meta:meta])* $name:ident, $field:ident) => {
        $(#[$meta])*
        #[derive(Debug, Clone, PartialEq)]
        pub struct $name<T = f64> {
            $field: Vec<T>,
        }

        impl<T> $name<T> {
            pub fn as_slice(&self) -> &[T] {
                &self.$field
            }

            pub fn into_vec(self) -> Vec<T> {
                self.$field
            }
        }

        impl<T> Deref for $name<T> {
            type Target = [T];

            fn deref(&self) -> &[T] {
                &self.$field
            }
        }

        impl<T> AsRef<[T]> for $name<T> {
            fn as_ref(&self) -> &[T] {
                &self.$field
            }
        }

        impl<T> From<$name<T>> for Vec<T> {
            fn from(v: $name<T>) -> Vec<T> {
                v.$field
            }
        }
    };
}

real_vector!(
    /// Real samples `v_0 .. v_{N-1}` with `N >= 1`.
    Signal,
    samples
);

real_vector!(
    /// Hartley components `V_k`, same length as the originating signal.
    HartleySpectrum,
    components
);

real_vector!(
    /// Hadamard coefficients in natural (Sylvester) order.
    HadamardSpectrum,
    components
);

impl<T> Signal<T> {
    pub fn new(samples: Vec<T>) -> Result<Self, TransformError> {
        if samples.is_empty() {
            return Err(TransformError::EmptySignal);
        }
        Ok(Self { samples })
    }
}

impl<T> TryFrom<Vec<T>> for Signal<T> {
    type Error = TransformError;

    fn try_from(samples: Vec<T>) -> Result<Self, TransformError> {
        Self::new(samples)
    }
}

impl<T> HartleySpectrum<T> {
    pub(crate) fn from_vec(components: Vec<T>) -> Self {
        Self { components }
    }
}

impl<T> HadamardSpectrum<T> {
    pub(crate) fn from_vec(components: Vec<T>) -> Self {
        Self { components }
    }
}

/// Fourier components `F_k`.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexSpectrum<T = f64> {
    components: Vec<Complex<T>>,
}

impl<T> ComplexSpectrum<T> {
    pub fn new(components: Vec<Complex<T>>) -> Self {
        Self { components }
    }

    pub fn as_slice(&self) -> &[Complex<T>] {
        &self.components
    }

    pub fn into_vec(self) -> Vec<Complex<T>> {
        self.components
    }

    /// Real parts followed by imaginary parts, for norm-based comparisons.
    pub fn split_parts(&self) -> (Vec<T>, Vec<T>)
    where
        T: Copy,
    {
        self.components.iter().map(|c| (c.re, c.im)).unzip()
    }
}

impl<T> Deref for ComplexSpectrum<T> {
    type Target = [Complex<T>];

    fn deref(&self) -> &[Complex<T>] {
        &self.components
    }
}

impl<T> From<Vec<Complex<T>>> for ComplexSpectrum<T> {
    fn from(components: Vec<Complex<T>>) -> Self {
        Self { components }
    }
}

/// Rejects the empty slice, the one length no transform accepts.
pub(crate) fn nonempty<T>(v: &[T]) -> Result<usize, TransformError> {
    if v.is_empty() {
        Err(TransformError::EmptySignal)
    } else {
        Ok(v.len())
    }
}
