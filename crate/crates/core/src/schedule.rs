//! Complex iteration-parameter sets for layered stationary iteration.
//!
//! A schedule is one layer of parameters `tau_1..tau_n` (equivalently their
//! reciprocals `mu_m = 1/tau_m`) reused layer after layer. Closed forms exist
//! for a real spectrum segment (Chebyshev roots) and a circle (all parameters
//! equal); segments rotated about the anchor point `1 + 0i` and triangle
//! sides incident to it are covered by the rotation heuristic.

use crate::error::Error;
use crate::geometry::{point_segment_distance, EnclosingCircle, SpectrumRegion};
use crate::C64;

/// Number of boundary samples used for sampled contraction bounds.
const RHO_BOUND_SAMPLES: usize = 10_000;

/// How a schedule was constructed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Provenance {
    Gsi,
    RealSegment,
    RotatedSegment,
    Circle,
    TriangleSides,
    Manual,
}

/// One layer of complex iteration parameters.
#[derive(Debug, Clone, PartialEq)]
pub struct IterationSchedule {
    /// Parameters `tau_m`, all nonzero.
    pub taus: Vec<C64>,
    /// Reciprocals `mu_m = 1 / tau_m`.
    pub mus: Vec<C64>,
    pub provenance: Provenance,
    /// Predicted per-layer contraction factor, when a bound is available.
    pub rho_bound: Option<f64>,
}

impl IterationSchedule {
    /// Builds a schedule from the reciprocal parameters `mu_m`.
    pub fn from_mus(
        mus: Vec<C64>,
        provenance: Provenance,
        rho_bound: Option<f64>,
    ) -> Result<Self, Error> {
        if mus.is_empty() {
            return Err(Error::InvalidPoints("empty parameter set".into()));
        }
        if mus.iter().any(|m| m.norm() == 0.0 || !m.re.is_finite() || !m.im.is_finite()) {
            return Err(Error::ZeroMu);
        }
        let taus = mus.iter().map(|m| C64::new(1.0, 0.0) / m).collect();
        Ok(IterationSchedule {
            taus,
            mus,
            provenance,
            rho_bound,
        })
    }

    /// Builds a schedule directly from the parameters `tau_m`.
    pub fn from_taus(
        taus: Vec<C64>,
        provenance: Provenance,
        rho_bound: Option<f64>,
    ) -> Result<Self, Error> {
        if taus.is_empty() {
            return Err(Error::InvalidPoints("empty parameter set".into()));
        }
        if taus.iter().any(|t| t.norm() == 0.0 || !t.re.is_finite() || !t.im.is_finite()) {
            return Err(Error::ZeroMu);
        }
        let mus = taus.iter().map(|t| C64::new(1.0, 0.0) / t).collect();
        Ok(IterationSchedule {
            taus,
            mus,
            provenance,
            rho_bound,
        })
    }

    /// Layer length.
    pub fn n(&self) -> usize {
        self.taus.len()
    }

    /// `|prod (1 - tau_m z)|` — modulus of the layer polynomial at `z`.
    pub fn layer_polynomial_modulus(&self, z: C64) -> f64 {
        self.taus
            .iter()
            .fold(C64::new(1.0, 0.0), |acc, &t| acc * (C64::new(1.0, 0.0) - t * z))
            .norm()
    }
}

/// One-parameter schedule from an enclosing circle: `tau = 1/center`, with
/// the circle's contraction factor as the predicted per-layer bound.
pub fn gsi_schedule(circle: &EnclosingCircle) -> IterationSchedule {
    IterationSchedule::from_mus(vec![circle.center], Provenance::Gsi, Some(circle.rho0))
        .expect("circle center is nonzero")
}

/// Chebyshev parameters for a real spectrum segment `[a, b]`, `0 < a < b`:
/// `mu_m = (b+a)/2 + (b-a)/2 cos((2m-1) pi / (2n))`, `m = 1..n`.
pub fn chebyshev_real_segment(a: f64, b: f64, n: usize) -> Result<IterationSchedule, Error> {
    if !(a > 0.0) || !(b > a) || !a.is_finite() || !b.is_finite() {
        return Err(Error::InvalidSegment);
    }
    if n == 0 {
        return Err(Error::InvalidSegment);
    }
    let mid = (b + a) / 2.0;
    let half = (b - a) / 2.0;
    let mus: Vec<C64> = (1..=n)
        .map(|m| {
            let angle = (2 * m - 1) as f64 * std::f64::consts::PI / (2 * n) as f64;
            C64::new(mid + half * angle.cos(), 0.0)
        })
        .collect();
    let schedule = IterationSchedule::from_mus(mus, Provenance::RealSegment, None)?;
    let samples = SpectrumRegion::Segment {
        a: C64::new(a, 0.0),
        b: C64::new(b, 0.0),
    }
    .boundary_samples(RHO_BOUND_SAMPLES);
    let rho = minimax_value(&schedule, &samples);
    Ok(IterationSchedule {
        rho_bound: Some(rho),
        ..schedule
    })
}

/// Chebyshev-type parameters for a complex segment from `1 + 0i` to
/// `endpoint`: real parameters for an equally long real segment `[1, 1+l]`
/// are rotated about the anchor by the segment's inclination.
pub fn rotated_segment_schedule(endpoint: C64, n: usize) -> Result<IterationSchedule, Error> {
    let one = C64::new(1.0, 0.0);
    let offset = endpoint - one;
    let len = offset.norm();
    if len == 0.0 || !offset.re.is_finite() || !offset.im.is_finite() {
        return Err(Error::DegenerateSegment);
    }
    if point_segment_distance(C64::new(0.0, 0.0), one, endpoint) <= 1e-12 * len.max(1.0) {
        return Err(Error::OriginOnSegment);
    }
    let rotation = offset / len; // exp(i * arg(endpoint - 1))
    let real = chebyshev_real_segment(1.0, 1.0 + len, n).map_err(|_| Error::DegenerateSegment)?;
    let mus: Vec<C64> = real
        .mus
        .iter()
        .map(|&mu| one + (mu - one) * rotation)
        .collect();
    let schedule = IterationSchedule::from_mus(mus, Provenance::RotatedSegment, None)?;
    let samples =
        SpectrumRegion::Segment { a: one, b: endpoint }.boundary_samples(RHO_BOUND_SAMPLES);
    let rho = minimax_value(&schedule, &samples);
    Ok(IterationSchedule {
        rho_bound: Some(rho),
        ..schedule
    })
}

/// Schedule for a spectrum inside a circle excluding the origin: the minimax
/// problem degenerates and every parameter equals the one-parameter optimum
/// `1/center`, with per-layer contraction `rho0^n`.
pub fn circle_schedule(circle: &EnclosingCircle, n: usize) -> Result<IterationSchedule, Error> {
    if n == 0 {
        return Err(Error::InvalidPoints("layer length must be >= 1".into()));
    }
    IterationSchedule::from_mus(
        vec![circle.center; n],
        Provenance::Circle,
        Some(circle.rho0.powi(n as i32)),
    )
}

/// Heuristic schedule for a spectrum inside the triangle with vertices
/// `1 + 0i`, `v1`, `v2`: rotated-segment parameters are placed on the two
/// sides incident to the anchor, alternating side by slot so that
/// `ceil(n/2)` land on the side to `v1` and `floor(n/2)` on the side to
/// `v2`. Slot `m` takes the `m`-th rotated Chebyshev root of its own side,
/// so coincident sides reproduce the plain rotated-segment schedule.
pub fn triangle_sides_schedule(
    v1: C64,
    v2: C64,
    n: usize,
) -> Result<IterationSchedule, Error> {
    if n < 2 {
        return Err(Error::InvalidTriangle("layer length must be >= 2".into()));
    }
    let one = C64::new(1.0, 0.0);
    if (v1 - one).norm() == 0.0 || (v2 - one).norm() == 0.0 {
        return Err(Error::InvalidTriangle("vertex coincides with (1, 0)".into()));
    }
    crate::geometry::convex_hull(&[one, v1, v2])
        .map_err(|e| Error::InvalidTriangle(e.to_string()))?;

    let side1 = rotated_segment_schedule(v1, n)
        .map_err(|e| Error::InvalidTriangle(e.to_string()))?;
    let side2 = rotated_segment_schedule(v2, n)
        .map_err(|e| Error::InvalidTriangle(e.to_string()))?;
    let mus: Vec<C64> = (0..n)
        .map(|m| if m % 2 == 0 { side1.mus[m] } else { side2.mus[m] })
        .collect();
    let schedule = IterationSchedule::from_mus(mus, Provenance::TriangleSides, None)?;
    let samples = SpectrumRegion::Triangle {
        vertices: [one, v1, v2],
    }
    .boundary_samples(RHO_BOUND_SAMPLES);
    let rho = minimax_value(&schedule, &samples);
    Ok(IterationSchedule {
        rho_bound: Some(rho),
        ..schedule
    })
}

/// Sampled per-layer contraction: `max_z |prod (1 - tau_m z)|` over the
/// given spectrum samples. Returns 0 for an empty sample set.
pub fn minimax_value(schedule: &IterationSchedule, region_samples: &[C64]) -> f64 {
    region_samples
        .iter()
        .map(|&z| schedule.layer_polynomial_modulus(z))
        .fold(0.0, f64::max)
}

/// Schedule constructor keyed on the region shape, as used by the benchmark
/// harness: segments anchored at `1 + 0i` get rotated Chebyshev parameters,
/// circles the degenerate equal-parameter schedule, triangles with a vertex
/// at the anchor the two-side heuristic, and anything else the one-parameter
/// optimum of its enclosing circle repeated `n` times.
pub fn schedule_for_region(region: &SpectrumRegion, n: usize) -> Result<IterationSchedule, Error> {
    if n == 0 {
        return Err(Error::InvalidPoints("layer length must be >= 1".into()));
    }
    let one = C64::new(1.0, 0.0);
    let near_one = |z: C64, scale: f64| (z - one).norm() <= 1e-9 * scale.max(1.0);
    match region {
        SpectrumRegion::Point(p) => {
            circle_schedule(&EnclosingCircle::new(*p, 0.0)?, n)
        }
        SpectrumRegion::Segment { a, b } => {
            let scale = region.diameter();
            if n == 1 {
                Ok(gsi_schedule(&segment_circle(*a, *b)?))
            } else if near_one(*a, scale) {
                rotated_segment_schedule(*b, n)
            } else if near_one(*b, scale) {
                rotated_segment_schedule(*a, n)
            } else {
                Err(Error::InvalidTriangle(
                    "segment schedule requires an endpoint at (1, 0); \
                     pass n = 1 for the one-parameter optimum"
                        .into(),
                ))
            }
        }
        SpectrumRegion::Circle { center, radius } => {
            circle_schedule(&EnclosingCircle::new(*center, *radius)?, n)
        }
        SpectrumRegion::Triangle { vertices } => {
            let scale = region.diameter();
            let anchor = vertices.iter().position(|&v| near_one(v, scale));
            match anchor {
                Some(i) if n >= 2 => {
                    let others: Vec<C64> = (0..3).filter(|&j| j != i).map(|j| vertices[j]).collect();
                    triangle_sides_schedule(others[0], others[1], n)
                }
                _ => {
                    let hull = crate::geometry::convex_hull(vertices)?;
                    circle_schedule(&crate::geometry::optimal_circle(&hull)?, n)
                }
            }
        }
        SpectrumRegion::Rectangle { re, im } => {
            let corners = [
                C64::new(re[0], im[0]),
                C64::new(re[1], im[0]),
                C64::new(re[1], im[1]),
                C64::new(re[0], im[1]),
            ];
            let hull = crate::geometry::convex_hull(&corners)?;
            circle_schedule(&crate::geometry::optimal_circle(&hull)?, n)
        }
        SpectrumRegion::Polygon { vertices } => {
            let hull = crate::geometry::convex_hull(vertices)?;
            circle_schedule(&crate::geometry::optimal_circle(&hull)?, n)
        }
    }
}

fn segment_circle(a: C64, b: C64) -> Result<EnclosingCircle, Error> {
    if (a - b).norm() == 0.0 {
        EnclosingCircle::new(a, 0.0)
    } else {
        crate::geometry::segment_optimal_circle(a, b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    #[test]
    fn chebyshev_midpoint_for_single_parameter() {
        let s = chebyshev_real_segment(1.0, 3.0, 1).unwrap();
        assert_eq!(s.n(), 1);
        assert!((s.mus[0] - c(2.0, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn chebyshev_two_and_three_parameters() {
        let s = chebyshev_real_segment(1.0, 3.0, 2).unwrap();
        let r = std::f64::consts::FRAC_1_SQRT_2;
        assert!((s.mus[0].re - (2.0 + r)).abs() < 1e-14);
        assert!((s.mus[1].re - (2.0 - r)).abs() < 1e-14);

        let s = chebyshev_real_segment(1.0, 3.0, 3).unwrap();
        let half_sqrt3 = (std::f64::consts::PI / 6.0).cos();
        assert!((s.mus[0].re - (2.0 + half_sqrt3)).abs() < 1e-14);
        assert!((s.mus[1].re - 2.0).abs() < 1e-14);
        assert!((s.mus[2].re - (2.0 - half_sqrt3)).abs() < 1e-14);
    }

    #[test]
    fn chebyshev_rejects_bad_segment() {
        assert_eq!(chebyshev_real_segment(0.0, 3.0, 2).unwrap_err(), Error::InvalidSegment);
        assert_eq!(chebyshev_real_segment(3.0, 1.0, 2).unwrap_err(), Error::InvalidSegment);
        assert_eq!(chebyshev_real_segment(-1.0, 3.0, 2).unwrap_err(), Error::InvalidSegment);
    }

    #[test]
    fn chebyshev_symmetry_and_interior() {
        for n in 2..=8 {
            let s = chebyshev_real_segment(1.0, 3.0, n).unwrap();
            for m in 0..n {
                let mirror = s.mus[n - 1 - m];
                assert!((s.mus[m].re + mirror.re - 4.0).abs() < 1e-13, "symmetric about midpoint");
                assert!(s.mus[m].re > 1.0 && s.mus[m].re < 3.0, "strictly inside (a, b)");
            }
        }
    }

    #[test]
    fn mus_are_reciprocal_taus() {
        let s = chebyshev_real_segment(1.0, 3.0, 5).unwrap();
        for (t, m) in s.taus.iter().zip(&s.mus) {
            assert!((t * m - c(1.0, 0.0)).norm() < 1e-14);
        }
    }

    #[test]
    fn gsi_schedule_examples() {
        let s = gsi_schedule(&EnclosingCircle::new(c(2.0, 0.0), 1.0).unwrap());
        assert!((s.taus[0] - c(0.5, 0.0)).norm() < 1e-15);
        assert_eq!(s.rho_bound, Some(0.5));

        let s = gsi_schedule(&EnclosingCircle::new(c(5.0, 0.0), 0.0).unwrap());
        assert!((s.taus[0] - c(0.2, 0.0)).norm() < 1e-15);
        assert_eq!(s.rho_bound, Some(0.0));

        let s = gsi_schedule(&EnclosingCircle::new(c(2.0, 2.0), 1.0).unwrap());
        assert!((s.taus[0] - c(0.25, -0.25)).norm() < 1e-15);
        assert!((s.rho_bound.unwrap() - 1.0 / 8.0f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn rotated_segment_real_case_reduces_to_chebyshev() {
        for n in [1, 3, 5] {
            let rotated = rotated_segment_schedule(c(3.0, 0.0), n).unwrap();
            let real = chebyshev_real_segment(1.0, 3.0, n).unwrap();
            for (a, b) in rotated.mus.iter().zip(&real.mus) {
                assert!((a - b).norm() < 1e-14);
            }
        }
    }

    #[test]
    fn rotated_segment_midpoint_for_single_parameter() {
        let s = rotated_segment_schedule(c(1.0, 2.0), 1).unwrap();
        assert!((s.mus[0] - c(1.0, 1.0)).norm() < 1e-14);
    }

    #[test]
    fn rotated_segment_rotation_covariance() {
        let endpoint = c(15.0, 10.0);
        let n = 5;
        let s = rotated_segment_schedule(endpoint, n).unwrap();
        let len = (endpoint - c(1.0, 0.0)).norm();
        let phi = (endpoint - c(1.0, 0.0)).arg();
        let real = chebyshev_real_segment(1.0, 1.0 + len, n).unwrap();
        for (mu, mu_real) in s.mus.iter().zip(&real.mus) {
            let off = mu - c(1.0, 0.0);
            assert!((off.norm() - (mu_real.re - 1.0)).abs() < 1e-13);
            assert!((off.arg() - phi).abs() < 1e-13);
            assert!(
                point_segment_distance(*mu, c(1.0, 0.0), endpoint) < 1e-12 * len,
                "parameter off the complex segment"
            );
        }
        assert_eq!(
            rotated_segment_schedule(c(1.0, 0.0), 3).unwrap_err(),
            Error::DegenerateSegment
        );
    }

    #[test]
    fn circle_schedule_repeats_center() {
        let circle = EnclosingCircle::new(c(2.0, 0.0), 1.0).unwrap();
        let s = circle_schedule(&circle, 4).unwrap();
        assert_eq!(s.n(), 4);
        for t in &s.taus {
            assert!((t - c(0.5, 0.0)).norm() < 1e-15);
        }
        assert!((s.rho_bound.unwrap() - 0.5f64.powi(4)).abs() < 1e-15);

        let gsi = gsi_schedule(&circle);
        let single = circle_schedule(&circle, 1).unwrap();
        assert_eq!(single.taus, gsi.taus);
        assert_eq!(single.rho_bound, gsi.rho_bound);

        let circle = EnclosingCircle::new(c(3.0, 4.0), 1.0).unwrap();
        let s = circle_schedule(&circle, 2).unwrap();
        for t in &s.taus {
            assert!((t - c(3.0 / 25.0, -4.0 / 25.0)).norm() < 1e-15);
        }
        assert!((s.rho_bound.unwrap() - (1.0 / 25.0)).abs() < 1e-15);
    }

    #[test]
    fn triangle_split_counts_and_membership() {
        let v1 = c(3.0, 1.0);
        let v2 = c(2.0, 2.0);
        for n in [2usize, 3, 10] {
            let s = triangle_sides_schedule(v1, v2, n).unwrap();
            assert_eq!(s.n(), n);
            let one = c(1.0, 0.0);
            let mut on_side1 = 0;
            let mut on_side2 = 0;
            for (m, mu) in s.mus.iter().enumerate() {
                let d1 = point_segment_distance(*mu, one, v1);
                let d2 = point_segment_distance(*mu, one, v2);
                if m % 2 == 0 {
                    assert!(d1 < 1e-12, "even slot off side to v1: {d1}");
                    on_side1 += 1;
                } else {
                    assert!(d2 < 1e-12, "odd slot off side to v2: {d2}");
                    on_side2 += 1;
                }
            }
            assert_eq!(on_side1, n.div_ceil(2));
            assert_eq!(on_side2, n / 2);
        }
    }

    #[test]
    fn triangle_degenerate_sides_reduce_to_rotated_segment() {
        let e = c(2.0, 2.0);
        let n = 6;
        let tri = triangle_sides_schedule(e, e, n).unwrap();
        let seg = rotated_segment_schedule(e, n).unwrap();
        assert_eq!(tri.mus, seg.mus);
    }

    #[test]
    fn triangle_rejects_bad_input() {
        assert!(matches!(
            triangle_sides_schedule(c(1.0, 0.0), c(2.0, 2.0), 4),
            Err(Error::InvalidTriangle(_))
        ));
        assert!(matches!(
            triangle_sides_schedule(c(3.0, 1.0), c(2.0, 2.0), 1),
            Err(Error::InvalidTriangle(_))
        ));
        assert!(matches!(
            triangle_sides_schedule(c(-2.0, 1.0), c(2.0, -3.0), 4),
            Err(Error::InvalidTriangle(_))
        ));
    }

    #[test]
    fn minimax_examples() {
        let gsi = gsi_schedule(&EnclosingCircle::new(c(2.0, 0.0), 1.0).unwrap());
        let seg = SpectrumRegion::Segment {
            a: c(1.0, 0.0),
            b: c(3.0, 0.0),
        };
        let v = minimax_value(&gsi, &seg.boundary_samples(1001));
        assert!((v - 0.5).abs() < 1e-12, "max attained at segment endpoints");

        // Shifted Chebyshev equioscillation level on [1, 3] for n = 2 is
        // 1 / T_2((b+a)/(b-a)) = 1/7.
        let cheb = chebyshev_real_segment(1.0, 3.0, 2).unwrap();
        let v = minimax_value(&cheb, &seg.boundary_samples(100_000));
        assert!((v - 1.0 / 7.0).abs() < 1e-9, "equioscillation level: {v}");
        assert!(v < 0.5, "better than the one-parameter ratio");

        let circle = EnclosingCircle::new(c(2.0, 0.0), 1.0).unwrap();
        let s = circle_schedule(&circle, 3).unwrap();
        let boundary = SpectrumRegion::Circle {
            center: c(2.0, 0.0),
            radius: 1.0,
        }
        .boundary_samples(4096);
        let v = minimax_value(&s, &boundary);
        assert!((v - 0.125).abs() < 1e-10, "(R/x0)^n on the circle: {v}");
    }

    #[test]
    fn chebyshev_beats_one_parameter_contraction() {
        // On a real segment the n-parameter layer contracts strictly better
        // per layer than the one-parameter circle ratio for n >= 2.
        let seg = SpectrumRegion::Segment {
            a: c(1.0, 0.0),
            b: c(9.0, 0.0),
        };
        let samples = seg.boundary_samples(20_000);
        let circle = crate::geometry::segment_optimal_circle(c(1.0, 0.0), c(9.0, 0.0)).unwrap();
        let gsi = minimax_value(&chebyshev_real_segment(1.0, 9.0, 1).unwrap(), &samples);
        assert!((gsi - circle.rho0).abs() < 1e-9);
        for n in 2..=6 {
            let v = minimax_value(&chebyshev_real_segment(1.0, 9.0, n).unwrap(), &samples);
            assert!(v < circle.rho0, "n={n}: {v} not below {}", circle.rho0);
        }
    }

    #[test]
    fn produced_schedules_contract_on_their_regions() {
        // Convergence requires the layer polynomial below 1 on the spectrum
        // region; by the maximum principle boundary samples suffice.
        let cases: Vec<(IterationSchedule, Vec<C64>)> = vec![
            (
                chebyshev_real_segment(1.0, 20.0, 5).unwrap(),
                SpectrumRegion::Segment { a: c(1.0, 0.0), b: c(20.0, 0.0) }.boundary_samples(2000),
            ),
            (
                rotated_segment_schedule(c(12.0, 4.0), 7).unwrap(),
                SpectrumRegion::Segment { a: c(1.0, 0.0), b: c(12.0, 4.0) }.boundary_samples(2000),
            ),
            (
                triangle_sides_schedule(c(3.0, 1.0), c(2.0, 2.0), 10).unwrap(),
                SpectrumRegion::Triangle { vertices: [c(1.0, 0.0), c(3.0, 1.0), c(2.0, 2.0)] }
                    .boundary_samples(3000),
            ),
            (
                circle_schedule(&EnclosingCircle::new(c(2.0, 1.0), 0.8).unwrap(), 4).unwrap(),
                SpectrumRegion::Circle { center: c(2.0, 1.0), radius: 0.8 }.boundary_samples(2000),
            ),
        ];
        for (schedule, samples) in cases {
            let v = minimax_value(&schedule, &samples);
            assert!(v < 1.0, "{:?} does not contract: {v}", schedule.provenance);
            assert!((schedule.rho_bound.unwrap() - v).abs() <= 1e-6 * v.max(1e-12) + 1e-9);
        }
    }

    #[test]
    fn region_dispatch() {
        let seg = SpectrumRegion::Segment {
            a: c(1.0, 0.0),
            b: c(15.0, 0.0),
        };
        let s = schedule_for_region(&seg, 1).unwrap();
        assert!((s.mus[0] - c(8.0, 0.0)).norm() < 1e-12);
        let s = schedule_for_region(&seg, 10).unwrap();
        assert_eq!(s.provenance, Provenance::RotatedSegment);

        let tri = SpectrumRegion::Triangle {
            vertices: [c(1.0, 0.0), c(3.0, 1.0), c(2.0, 2.0)],
        };
        let s = schedule_for_region(&tri, 10).unwrap();
        assert_eq!(s.provenance, Provenance::TriangleSides);

        let poly = SpectrumRegion::Polygon {
            vertices: vec![c(1.0, 0.0), c(3.0, 0.0), c(3.0, 1.0), c(1.0, 1.0)],
        };
        let s = schedule_for_region(&poly, 3).unwrap();
        assert_eq!(s.provenance, Provenance::Circle);
        assert_eq!(s.n(), 3);
    }
}
