//! Eigenvalue studies of assembled operators and containment checks against
//! predicted spectrum-localization regions.

use ndarray::{Array1, Array2};
use ndarray_linalg::EigVals;

use crate::error::Error;
use crate::geometry::{convex_hull, SpectrumPolygon, SpectrumRegion};
use crate::vsie::{PermittivityProfile, VsieOperator};
use crate::C64;

/// Outcome of classifying an eigenvalue cloud against a region.
#[derive(Debug, Clone)]
pub struct SpectrumReport {
    pub eigenvalues: Vec<C64>,
    pub region: SpectrumRegion,
    /// Distance tolerance absorbing discretization error.
    pub band: f64,
    /// Fraction of eigenvalues within the banded region.
    pub containment_fraction: f64,
    pub outliers: Vec<C64>,
}

/// All eigenvalues of a dense complex nonsymmetric matrix.
pub fn dense_eigenvalues(matrix: &Array2<C64>) -> Result<Vec<C64>, Error> {
    if matrix.nrows() != matrix.ncols() {
        return Err(Error::NonSquare);
    }
    let eigs: Array1<C64> = matrix
        .eigvals()
        .map_err(|e| Error::ConvergenceFailure(e.to_string()))?;
    Ok(eigs.to_vec())
}

/// Points of the continuous spectrum `lambda = eps(x)` sampled over the
/// body (radial sweep for ball profiles), always including the boundary
/// value 1. Consecutive duplicates are merged.
pub fn continuous_spectrum_locus(profile: &PermittivityProfile, samples: usize) -> Vec<C64> {
    let samples = samples.max(2);
    let half = profile.bounding_side() / 2.0;
    let mut locus: Vec<C64> = Vec::with_capacity(samples + 1);
    for k in 0..samples {
        let r = half * k as f64 / (samples - 1) as f64;
        let value = profile.eval([r, 0.0, 0.0]);
        if locus.last().map_or(true, |&prev| (prev - value).norm() > 0.0) {
            locus.push(value);
        }
    }
    let one = C64::new(1.0, 0.0);
    if locus.iter().all(|&v| (v - one).norm() > 0.0) {
        locus.push(one);
    }
    locus
}

/// Predicted localization of the whole spectrum in the low-frequency limit:
/// the convex envelope of the permittivity values together with the boundary
/// value 1.
pub fn low_frequency_region(profile: &PermittivityProfile) -> Result<SpectrumPolygon, Error> {
    profile.validate()?;
    let mut points = profile.locus_breakpoints();
    points.push(C64::new(1.0, 0.0));
    convex_hull(&points)
}

/// Rectangle bound for an anisotropic medium: given the eigenvalue ranges of
/// the Hermitian parts of the permittivity tensor over the body, the
/// spectrum lies in the axis-aligned rectangle they span.
pub fn anisotropic_rectangle(
    delta1_range: [f64; 2],
    delta2_range: [f64; 2],
) -> Result<SpectrumRegion, Error> {
    for r in [delta1_range, delta2_range] {
        if !(r[0] <= r[1]) || !r[0].is_finite() || !r[1].is_finite() {
            return Err(Error::InvalidRange(format!("bad eigenvalue range {r:?}")));
        }
    }
    Ok(SpectrumRegion::Rectangle {
        re: delta1_range,
        im: delta2_range,
    })
}

/// Hermitian splitting of permittivity tensor samples,
/// `eps = delta1 + i delta2` with `delta1 = (eps + eps*)/2`,
/// `delta2 = (eps - eps*)/(2i)`, and the global eigenvalue ranges of the
/// two Hermitian parts.
pub fn hermitian_parts_eigranges(samples: &[[[C64; 3]; 3]]) -> ([f64; 2], [f64; 2]) {
    let mut r1 = [f64::INFINITY, f64::NEG_INFINITY];
    let mut r2 = [f64::INFINITY, f64::NEG_INFINITY];
    for eps in samples {
        let mut delta1 = [[C64::new(0.0, 0.0); 3]; 3];
        let mut delta2 = [[C64::new(0.0, 0.0); 3]; 3];
        for p in 0..3 {
            for q in 0..3 {
                let adj = eps[q][p].conj();
                delta1[p][q] = (eps[p][q] + adj) / 2.0;
                delta2[p][q] = (eps[p][q] - adj) / C64::new(0.0, 2.0);
            }
        }
        for lambda in hermitian3_eigenvalues(&delta1) {
            r1[0] = r1[0].min(lambda);
            r1[1] = r1[1].max(lambda);
        }
        for lambda in hermitian3_eigenvalues(&delta2) {
            r2[0] = r2[0].min(lambda);
            r2[1] = r2[1].max(lambda);
        }
    }
    (r1, r2)
}

/// Real eigenvalues of a 3x3 Hermitian matrix via the trigonometric solution
/// of the (real-coefficient) characteristic cubic.
pub fn hermitian3_eigenvalues(m: &[[C64; 3]; 3]) -> [f64; 3] {
    // lambda^3 - a lambda^2 + b lambda - c with real coefficients.
    let a = (m[0][0] + m[1][1] + m[2][2]).re;
    let minor = |p: usize, q: usize| -> C64 { m[p][p] * m[q][q] - m[p][q] * m[q][p] };
    let b = (minor(0, 1) + minor(0, 2) + minor(1, 2)).re;
    let c = (m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]))
        .re;

    // Depressed cubic t^3 + p t + q, lambda = t + a/3. For a Hermitian
    // matrix p <= 0, with p ~ 0 only at a near-triple eigenvalue; the
    // threshold is scaled to the rounding noise of forming p.
    let p = b - a * a / 3.0;
    let q = -2.0 * a * a * a / 27.0 + a * b / 3.0 - c;
    let shift = a / 3.0;
    let p_noise = 256.0 * f64::EPSILON * (a * a / 3.0 + b.abs() + 1.0);
    if p.abs() <= p_noise {
        // Near-triple eigenvalue: the admissible spread is O(sqrt(p)), below
        // anything cbrt(q) could resolve from rounding noise.
        return [shift, shift, shift];
    }
    let sq = (-p / 3.0).max(0.0).sqrt();
    let cosarg = (3.0 * q / (2.0 * p) * (-3.0 / p).max(0.0).sqrt()).clamp(-1.0, 1.0);
    let theta = cosarg.acos();
    let mut out = [0.0; 3];
    for (k, slot) in out.iter_mut().enumerate() {
        *slot = 2.0 * sq * ((theta - 2.0 * std::f64::consts::PI * k as f64) / 3.0).cos() + shift;
    }
    out.sort_by(|x, y| x.partial_cmp(y).unwrap());
    out
}

/// Classifies eigenvalues against a region dilated by `band`.
pub fn containment_check(
    eigenvalues: &[C64],
    region: &SpectrumRegion,
    band: f64,
) -> SpectrumReport {
    let band = band.max(0.0);
    let mut outliers = Vec::new();
    for &lambda in eigenvalues {
        if region.distance_to(lambda) > band {
            outliers.push(lambda);
        }
    }
    let fraction = if eigenvalues.is_empty() {
        1.0
    } else {
        1.0 - outliers.len() as f64 / eigenvalues.len() as f64
    };
    SpectrumReport {
        eigenvalues: eigenvalues.to_vec(),
        region: region.clone(),
        band,
        containment_fraction: fraction,
        outliers,
    }
}

/// Symmetric Hausdorff distance between two point clouds.
pub fn hausdorff_distance(a: &[C64], b: &[C64]) -> f64 {
    fn directed(from: &[C64], to: &[C64]) -> f64 {
        from.iter()
            .map(|&x| {
                to.iter()
                    .map(|&y| (x - y).norm())
                    .fold(f64::INFINITY, f64::min)
            })
            .fold(0.0, f64::max)
    }
    directed(a, b).max(directed(b, a))
}

/// Eigenvalue drift of the assembled operator towards its static limit:
/// for each wavenumber in `k0_list` (sorted descending, nonnegative), the
/// Hausdorff distance between the spectra of `A(k0)` and `A(0)` on a fixed
/// grid.
pub fn k0_sweep_spectrum_drift(
    profile: &PermittivityProfile,
    n_cells: usize,
    k0_list: &[f64],
) -> Result<Vec<(f64, f64)>, Error> {
    if k0_list.windows(2).any(|w| w[0] < w[1]) || k0_list.iter().any(|&k| k < 0.0) {
        return Err(Error::InvalidRange(
            "wavenumbers must be sorted descending and nonnegative".into(),
        ));
    }
    let static_eigs = dense_eigenvalues(&VsieOperator::new(profile, n_cells, 0.0)?.dense())?;
    let mut out = Vec::with_capacity(k0_list.len());
    for &k0 in k0_list {
        let drift = if k0 == 0.0 {
            0.0
        } else {
            let eigs = dense_eigenvalues(&VsieOperator::new(profile, n_cells, k0)?.dense())?;
            hausdorff_distance(&eigs, &static_eigs)
        };
        out.push((k0, drift));
    }
    Ok(out)
}

/// CSV rendering of an eigenvalue cloud: header `re,im`, one eigenvalue per
/// line, 17 significant digits.
pub fn eigenvalues_csv(eigenvalues: &[C64]) -> String {
    let mut out = String::from("re,im\n");
    for e in eigenvalues {
        out.push_str(&format!("{:.16e},{:.16e}\n", e.re, e.im));
    }
    out
}
