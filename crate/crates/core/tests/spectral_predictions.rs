//! Spectrum-localization predictions checked on assembled operators:
//! low-frequency containment, its breakdown at resonance size, robustness
//! of the triangle bound to layer geometry, and the static real-axis band.

use std::f64::consts::PI;

use gci_core::geometry::SpectrumRegion;
use gci_core::spectral::{containment_check, dense_eigenvalues};
use gci_core::vsie::{PermittivityProfile, VsieOperator};
use gci_core::C64;

fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

fn layered(radius: f64, d2: f64, d1: f64) -> PermittivityProfile {
    PermittivityProfile::LayeredBall {
        eps_core: c(3.0, 1.0),
        eps_outer: c(2.0, 2.0),
        d2,
        d1,
        radius,
    }
}

fn triangle() -> SpectrumRegion {
    SpectrumRegion::Triangle {
        vertices: [c(1.0, 0.0), c(3.0, 1.0), c(2.0, 2.0)],
    }
}

#[test]
fn low_frequency_layered_ball_confined_to_triangle() {
    let radius = 1.0 / 20.0;
    let profile = layered(radius, radius / 2.0, 2.0 * radius / 3.0);
    let op = VsieOperator::new(&profile, 6, 2.0 * PI).unwrap();
    let eigs = dense_eigenvalues(&op.dense()).unwrap();
    let region = triangle();
    let band = 0.15 * region.diameter();
    let report = containment_check(&eigs, &region, band);
    assert!(
        report.containment_fraction >= 0.99,
        "containment {} below 0.99",
        report.containment_fraction
    );
}

#[test]
fn resonance_size_body_breaks_the_triangle() {
    // At half-wavelength radius the body is far outside the low-frequency
    // regime and the spectrum leaves the static triangle.
    let radius = 0.5;
    let profile = layered(radius, radius / 2.0, 2.0 * radius / 3.0);
    let op = VsieOperator::new(&profile, 6, 2.0 * PI).unwrap();
    let eigs = dense_eigenvalues(&op.dense()).unwrap();
    let region = triangle();
    let band = 0.15 * region.diameter();
    let report = containment_check(&eigs, &region, band);
    assert!(
        !report.outliers.is_empty(),
        "resonance-range spectrum unexpectedly stayed inside the banded triangle"
    );
}

#[test]
fn triangle_bound_is_robust_to_layer_radii() {
    let radius = 1.0 / 30.0;
    let region = triangle();
    let band = 0.15 * region.diameter();
    for (d2_frac, d1_frac) in [(0.25, 0.5), (0.5, 2.0 / 3.0), (0.3, 0.9)] {
        let profile = layered(radius, d2_frac * radius, d1_frac * radius);
        let op = VsieOperator::new(&profile, 5, 2.0 * PI).unwrap();
        let eigs = dense_eigenvalues(&op.dense()).unwrap();
        let report = containment_check(&eigs, &region, band);
        assert!(
            report.outliers.is_empty(),
            "d2/R={d2_frac}, d1/R={d1_frac}: {} outliers",
            report.outliers.len()
        );
    }
}

#[test]
fn static_homogeneous_ball_spectrum_stays_in_real_band() {
    let profile = PermittivityProfile::HomogeneousBall {
        eps: c(8.0, 0.0),
        radius: 1.0,
    };
    let op = VsieOperator::new(&profile, 6, 0.0).unwrap();
    let eigs = dense_eigenvalues(&op.dense()).unwrap();
    let region = SpectrumRegion::Rectangle {
        re: [1.0, 8.0],
        im: [-0.15, 0.15],
    };
    let report = containment_check(&eigs, &region, 0.0);
    assert_eq!(
        report.outliers.len(),
        0,
        "static spectrum left [1, eps] x [-0.15, 0.15]: {:?}",
        report.outliers.iter().take(3).collect::<Vec<_>>()
    );
    // The static operator with real permittivity is similar to a real
    // symmetric matrix; imaginary parts are pure rounding.
    let max_im = eigs.iter().map(|e| e.im.abs()).fold(0.0, f64::max);
    assert!(max_im < 1e-8, "max |Im| = {max_im}");
}
