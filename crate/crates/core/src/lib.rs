//! Radix-2 fast Hartley transform by even/odd half-wave decomposition, the
//! multiplication-free fast Walsh-Hadamard transform sharing its split stage,
//! the Hartley/Fourier bridge for real signals, brute-force oracles for all of
//! them, and exact operation counting.
//!
//! All transforms are generic over [`Real`] (`f32` or `f64`); the `*64` and
//! `*32` aliases below name the concrete instantiations.
//!
//! ```
//! let v = [1.0, 2.0, 3.0, 4.0];
//! let spectrum = hforge::fht(&v).unwrap();
//! assert_eq!(spectrum.as_slice(), &[10.0, -4.0, -2.0, 0.0]);
//! assert_eq!(hforge::ifht(&spectrum).unwrap().as_slice(), &v);
//! ```

pub mod bridge;
pub mod error;
pub mod fht;
pub mod fwht;
pub mod instrumentation;
pub mod io;
pub mod kernel;
pub mod oracle;
pub mod scalar;
pub mod signal;

pub use bridge::{dft_via_fht, fourier_from_hartley, hartley_from_fourier};
pub use error::TransformError;
pub use fht::{
    dht2, fht, fht_recursive_with_plan, fht_with_plan, half_wave_split, ifht,
    reconstruct_from_halfwaves, twiddle_odd, FhtPlan, HalfWaveParts,
};
pub use fwht::{fwht, fwht_inplace, ifwht};
pub use instrumentation::{
    counted_dft_via_fht, counted_dht_naive, counted_fht, counted_fwht, CountingMode, OpCount,
};
pub use kernel::{cas, require_pow2, spectra_close, Pow2, Tolerance};
pub use oracle::{dft_naive, dht_naive, fwht_naive, idht_naive, HadamardMatrix};
pub use scalar::Real;
pub use signal::{ComplexSpectrum, HadamardSpectrum, HartleySpectrum, Signal};

pub use num_complex::Complex;

pub type Signal64 = Signal<f64>;
pub type Signal32 = Signal<f32>;
pub type HartleySpectrum64 = HartleySpectrum<f64>;
pub type HartleySpectrum32 = HartleySpectrum<f32>;
pub type HadamardSpectrum64 = HadamardSpectrum<f64>;
pub type HadamardSpectrum32 = HadamardSpectrum<f32>;
pub type ComplexSpectrum64 = ComplexSpectrum<f64>;
pub type ComplexSpectrum32 = ComplexSpectrum<f32>;
pub type FhtPlan64 = FhtPlan<f64>;
pub type FhtPlan32 = FhtPlan<f32>;
pub type Tolerance64 = Tolerance<f64>;
