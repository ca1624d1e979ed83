//! In-place 3D FFT on cubic lattices, built from 1D transforms.

use std::sync::Arc;

use rustfft::{Fft, FftPlanner};

use crate::C64;

/// Planned forward/inverse 3D FFT for a cubic lattice of a fixed edge size.
pub struct Fft3 {
    size: usize,
    forward: Arc<dyn Fft<f64>>,
    inverse: Arc<dyn Fft<f64>>,
}

impl Fft3 {
    pub fn new(size: usize) -> Self {
        let mut planner = FftPlanner::new();
        Fft3 {
            size,
            forward: planner.plan_fft_forward(size),
            inverse: planner.plan_fft_inverse(size),
        }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    /// Number of lattice points `size^3`.
    pub fn len(&self) -> usize {
        self.size * self.size * self.size
    }

    pub fn is_empty(&self) -> bool {
        self.size == 0
    }

    pub fn forward(&self, data: &mut [C64]) {
        self.transform(data, &self.forward, false);
    }

    /// Inverse transform, normalized by `1/size^3`.
    pub fn inverse(&self, data: &mut [C64]) {
        self.transform(data, &self.inverse, true);
    }

    fn transform(&self, data: &mut [C64], fft: &Arc<dyn Fft<f64>>, normalize: bool) {
        let m = self.size;
        assert_eq!(data.len(), m * m * m, "lattice size mismatch");
        let mut scratch = vec![C64::new(0.0, 0.0); fft.get_inplace_scratch_len()];
        let mut line = vec![C64::new(0.0, 0.0); m];

        // Axis x: contiguous lines; rustfft batches consecutive transforms.
        fft.process_with_scratch(data, &mut scratch);

        // Axis y: stride-m lines within each z slab.
        for iz in 0..m {
            let slab = iz * m * m;
            for ix in 0..m {
                for iy in 0..m {
                    line[iy] = data[slab + iy * m + ix];
                }
                fft.process_with_scratch(&mut line, &mut scratch);
                for iy in 0..m {
                    data[slab + iy * m + ix] = line[iy];
                }
            }
        }

        // Axis z: stride-m^2 lines.
        for iy in 0..m {
            for ix in 0..m {
                let base = iy * m + ix;
                for iz in 0..m {
                    line[iz] = data[base + iz * m * m];
                }
                fft.process_with_scratch(&mut line, &mut scratch);
                for iz in 0..m {
                    data[base + iz * m * m] = line[iz];
                }
            }
        }

        if normalize {
            let scale = 1.0 / (m * m * m) as f64;
            for v in data.iter_mut() {
                *v *= scale;
            }
        }
    }
}

/// Sum of prime factors of `n` with multiplicity; the slowly growing factor
/// of the `N LOG(N)` transform cost estimate.
pub fn sum_of_prime_factors(mut n: usize) -> usize {
    let mut total = 0;
    let mut p = 2;
    while p * p <= n {
        while n % p == 0 {
            total += p;
            n /= p;
        }
        p += 1;
    }
    if n > 1 {
        total += n;
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_factor_sums() {
        assert_eq!(sum_of_prime_factors(1_000_000), 42);
        assert_eq!(sum_of_prime_factors(100_000_000), 56);
        assert_eq!(sum_of_prime_factors(64), 12);
        assert_eq!(sum_of_prime_factors(7), 7);
    }

    #[test]
    fn roundtrip_recovers_input() {
        let m = 6;
        let fft = Fft3::new(m);
        let mut data: Vec<C64> = (0..m * m * m)
            .map(|k| C64::new((k % 7) as f64 - 3.0, (k % 5) as f64))
            .collect();
        let original = data.clone();
        fft.forward(&mut data);
        fft.inverse(&mut data);
        for (a, b) in data.iter().zip(&original) {
            assert!((a - b).norm() < 1e-12);
        }
    }

    #[test]
    fn delta_transforms_to_constant() {
        let m = 4;
        let fft = Fft3::new(m);
        let mut data = vec![C64::new(0.0, 0.0); m * m * m];
        data[0] = C64::new(1.0, 0.0);
        fft.forward(&mut data);
        for v in &data {
            assert!((v - C64::new(1.0, 0.0)).norm() < 1e-13);
        }
    }
}
