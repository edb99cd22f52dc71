//! Shared inputs for the criterion benchmarks in `benches/`.

use grover_abszeta_core::abszeta::AbsoluteZetaBundle;
use grover_abszeta_core::OmegaVector;
use num_complex::Complex64;

/// Matrix sizes for the exact characteristic-polynomial benchmarks.
pub const CHAR_POLY_SIZES: [usize; 3] = [8, 16, 32];

/// `(n, w, s)` points where the series and the Mellin quadrature are compared.
pub const SERIES_POINTS: [(usize, f64, f64); 3] = [(2, 3.0, 4.0), (3, 6.0, 5.0), (5, 8.0, 6.0)];

pub fn real(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

/// The period vector `(2, 6)` of the `N = 4` bundle.
pub fn omega_n4() -> OmegaVector {
    OmegaVector::new(&[2.0, 6.0]).expect("positive periods")
}

pub fn bundle(n: usize) -> AbsoluteZetaBundle {
    AbsoluteZetaBundle::for_grover(n).expect("N = 2 or 4")
}
