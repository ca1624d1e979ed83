//! Small complex vector kernels shared by the solver drivers.

use crate::C64;

/// Conjugated inner product <x, y> = sum conj(x_i) * y_i.
pub fn dot(x: &[C64], y: &[C64]) -> C64 {
    debug_assert_eq!(x.len(), y.len());
    x.iter().zip(y).map(|(a, b)| a.conj() * b).sum()
}

/// Euclidean norm.
pub fn norm(x: &[C64]) -> f64 {
    x.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt()
}

/// y += alpha * x.
pub fn axpy(y: &mut [C64], alpha: C64, x: &[C64]) {
    debug_assert_eq!(x.len(), y.len());
    for (yi, xi) in y.iter_mut().zip(x) {
        *yi += alpha * xi;
    }
}

/// x *= alpha.
pub fn scale(x: &mut [C64], alpha: C64) {
    for xi in x.iter_mut() {
        *xi *= alpha;
    }
}
