//! Spectrum geometry on the complex plane.
//!
//! Given a convex polygon that localizes the spectrum of an operator (with
//! the origin strictly outside), computes the enclosing circle seen from the
//! origin at a minimal viewing angle. Its center is the optimal parameter of
//! one-parameter stationary iteration and `sin(alpha0/2)` the convergence
//! ratio. A grid-search oracle over the same objective is provided for
//! validation.

use crate::error::Error;
use crate::C64;

/// Cross product of two plane vectors, `a x b = re(a) im(b) - im(a) re(b)`.
fn cross(a: C64, b: C64) -> f64 {
    a.re * b.im - a.im * b.re
}

/// Real inner product of two plane vectors.
fn dot2(a: C64, b: C64) -> f64 {
    a.re * b.re + a.im * b.im
}

fn all_finite(points: &[C64]) -> bool {
    points.iter().all(|p| p.re.is_finite() && p.im.is_finite())
}

/// Distance from `z` to the closed segment `[a, b]`.
pub fn point_segment_distance(z: C64, a: C64, b: C64) -> f64 {
    let ab = b - a;
    let len2 = ab.norm_sqr();
    if len2 == 0.0 {
        return (z - a).norm();
    }
    let t = (dot2(z - a, ab) / len2).clamp(0.0, 1.0);
    (z - (a + ab * t)).norm()
}

/// A convex polygon on the complex plane whose interior localizes a spectrum.
///
/// Vertices are counterclockwise with no three consecutive collinear ones,
/// starting from the lexicographically smallest `(re, im)`. Degenerate hulls
/// (a single point, a segment) keep one or two vertices. The origin is
/// guaranteed strictly outside.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectrumPolygon {
    vertices: Vec<C64>,
}

impl SpectrumPolygon {
    pub fn vertices(&self) -> &[C64] {
        &self.vertices
    }

    /// Largest pairwise vertex distance; 0 for a single point.
    pub fn diameter(&self) -> f64 {
        let v = &self.vertices;
        let mut d = 0.0f64;
        for i in 0..v.len() {
            for j in i + 1..v.len() {
                d = d.max((v[i] - v[j]).norm());
            }
        }
        d
    }

    /// Length scale used for relative tolerances: the diameter, falling back
    /// to the vertex magnitude for degenerate polygons.
    pub fn scale(&self) -> f64 {
        let mag = self.vertices.iter().map(|v| v.norm()).fold(0.0, f64::max);
        self.diameter().max(1e-3 * mag).max(f64::MIN_POSITIVE)
    }

    /// Distance from `z` to the polygon (0 when inside or on the boundary).
    pub fn distance_to(&self, z: C64) -> f64 {
        let v = &self.vertices;
        match v.len() {
            1 => (z - v[0]).norm(),
            2 => point_segment_distance(z, v[0], v[1]),
            _ => {
                let inside = (0..v.len())
                    .all(|i| cross(v[(i + 1) % v.len()] - v[i], z - v[i]) >= 0.0);
                if inside {
                    0.0
                } else {
                    (0..v.len())
                        .map(|i| point_segment_distance(z, v[i], v[(i + 1) % v.len()]))
                        .fold(f64::INFINITY, f64::min)
                }
            }
        }
    }
}

/// Convex hull of a finite point set, with the origin required strictly
/// outside the hull.
///
/// Interior points and collinear mid-edge points are dropped. Duplicates are
/// merged. Returns `OriginInsideHull` when the origin lies inside or on the
/// hull, which makes one-parameter stationary iteration inapplicable.
pub fn convex_hull(points: &[C64]) -> Result<SpectrumPolygon, Error> {
    if points.is_empty() {
        return Err(Error::InvalidPoints("empty point set".into()));
    }
    if !all_finite(points) {
        return Err(Error::InvalidPoints("non-finite coordinates".into()));
    }

    let mut sorted: Vec<C64> = points.to_vec();
    sorted.sort_by(|a, b| (a.re, a.im).partial_cmp(&(b.re, b.im)).unwrap());
    sorted.dedup_by(|a, b| a.re == b.re && a.im == b.im);

    let hull = if sorted.len() == 1 {
        sorted
    } else {
        // Andrew's monotone chain; `<= 0` pops drop collinear mid points.
        let mut lower: Vec<C64> = Vec::new();
        for &p in &sorted {
            while lower.len() >= 2
                && cross(lower[lower.len() - 1] - lower[lower.len() - 2], p - lower[lower.len() - 2])
                    <= 0.0
            {
                lower.pop();
            }
            lower.push(p);
        }
        let mut upper: Vec<C64> = Vec::new();
        for &p in sorted.iter().rev() {
            while upper.len() >= 2
                && cross(upper[upper.len() - 1] - upper[upper.len() - 2], p - upper[upper.len() - 2])
                    <= 0.0
            {
                upper.pop();
            }
            upper.push(p);
        }
        lower.pop();
        upper.pop();
        lower.extend(upper);
        lower
    };

    let poly = SpectrumPolygon { vertices: hull };
    let tol = 1e-12 * poly.scale();
    let origin_excluded = match poly.vertices.len() {
        1 => poly.vertices[0].norm() > tol,
        2 => point_segment_distance(C64::new(0.0, 0.0), poly.vertices[0], poly.vertices[1]) > tol,
        _ => {
            let v = &poly.vertices;
            // Strictly outside a CCW polygon: some edge sees the origin on its
            // right by more than the area tolerance.
            (0..v.len()).any(|i| {
                cross(v[(i + 1) % v.len()] - v[i], -v[i]) < -tol * poly.scale()
            })
        }
    };
    if !origin_excluded {
        return Err(Error::OriginInsideHull);
    }
    Ok(poly)
}

/// The circle enclosing a spectrum together with its viewing-angle data.
///
/// `rho0 = radius / |center| = sin(alpha0 / 2)` is the per-iteration
/// contraction ratio of one-parameter stationary iteration with parameter
/// `center`. Requires the origin strictly outside the circle (`rho0 < 1`).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EnclosingCircle {
    pub center: C64,
    pub radius: f64,
    /// Viewing angle of the circle from the origin, radians.
    pub alpha0: f64,
    /// Contraction factor `sin(alpha0/2) = radius / |center|`.
    pub rho0: f64,
}

impl EnclosingCircle {
    pub fn new(center: C64, radius: f64) -> Result<Self, Error> {
        if !center.re.is_finite() || !center.im.is_finite() || !radius.is_finite() || radius < 0.0
        {
            return Err(Error::InvalidPoints("non-finite circle".into()));
        }
        let dist = center.norm();
        if dist <= radius {
            return Err(Error::OriginInsideHull);
        }
        let rho0 = radius / dist;
        Ok(EnclosingCircle {
            center,
            radius,
            alpha0: 2.0 * rho0.min(1.0).asin(),
            rho0,
        })
    }

    pub fn contains(&self, z: C64, tol: f64) -> bool {
        (z - self.center).norm() <= self.radius + tol
    }
}

/// Optimal circle for a spectrum localized on the segment `[p, q]`.
///
/// The center lies on the perpendicular bisector of the segment, at its
/// intersection with the circle through `p`, `q` and the origin; of the two
/// intersections the one whose circle excludes the origin is the optimum.
/// When `p`, `q` and the origin are collinear the center degenerates to the
/// segment midpoint, which recovers the classical `(M + m) / 2` parameter
/// for a real spectrum interval `[m, M]`.
pub fn segment_optimal_circle(p: C64, q: C64) -> Result<EnclosingCircle, Error> {
    if !all_finite(&[p, q]) {
        return Err(Error::InvalidPoints("non-finite endpoints".into()));
    }
    let chord = q - p;
    let half_len = chord.norm() / 2.0;
    if half_len == 0.0 {
        return Err(Error::DegenerateSegment);
    }
    let scale = p.norm().max(q.norm()).max(2.0 * half_len);
    let tol = 1e-12 * scale;

    if cross(chord, -p).abs() <= tol * scale {
        // Segment on a line through the origin: reject if the origin lies on
        // the segment, otherwise the medial point is the optimum.
        if point_segment_distance(C64::new(0.0, 0.0), p, q) <= tol {
            return Err(Error::OriginOnSegment);
        }
        return EnclosingCircle::new((p + q) / 2.0, half_len);
    }

    // Circumcenter of the triangle (0, p, q).
    let d = 2.0 * cross(p, q);
    let c0 = C64::new(
        (q.im * p.norm_sqr() - p.im * q.norm_sqr()) / d,
        (p.re * q.norm_sqr() - q.re * p.norm_sqr()) / d,
    );
    let mid = (p + q) / 2.0;
    let normal = C64::new(0.0, 1.0) * chord / chord.norm();
    let along = dot2(c0 - mid, normal);
    let circum_r = (c0 - p).norm();

    let mut best: Option<EnclosingCircle> = None;
    for t in [along + circum_r, along - circum_r] {
        let center = mid + normal * t;
        let radius = (center - p).norm().max((center - q).norm());
        if let Ok(circle) = EnclosingCircle::new(center, radius) {
            if best.as_ref().map_or(true, |b| circle.rho0 < b.rho0) {
                best = Some(circle);
            }
        }
    }
    best.ok_or(Error::NoValidCircle)
}

/// Circumcircle center of three points, `None` when collinear.
fn circumcenter(a: C64, b: C64, c: C64, tol_area: f64) -> Option<C64> {
    let d = 2.0 * cross(b - a, c - a);
    if d.abs() <= tol_area {
        return None;
    }
    let bs = b - a;
    let cs = c - a;
    let ux = (cs.im * bs.norm_sqr() - bs.im * cs.norm_sqr()) / d;
    let uy = (bs.re * cs.norm_sqr() - cs.re * bs.norm_sqr()) / d;
    Some(a + C64::new(ux, uy))
}

/// Optimal circle for a convex spectrum polygon: the finite two-step search.
///
/// Step A builds each vertex pair's segment-optimal circle and returns the
/// first that contains every vertex. If none does, step B builds the circle
/// through each vertex triple and returns, among those containing all
/// vertices and excluding the origin, the one with minimal contraction
/// factor.
pub fn optimal_circle(poly: &SpectrumPolygon) -> Result<EnclosingCircle, Error> {
    let v = poly.vertices();
    match v.len() {
        1 => EnclosingCircle::new(v[0], 0.0),
        2 => segment_optimal_circle(v[0], v[1]),
        _ => {
            let scale = poly.scale();
            let tol = 1e-12 * scale;

            // Step A: vertex-pair circles.
            for i in 0..v.len() {
                for j in i + 1..v.len() {
                    let Ok(circle) = segment_optimal_circle(v[i], v[j]) else {
                        continue;
                    };
                    if v.iter().all(|&w| circle.contains(w, tol)) {
                        let radius =
                            v.iter().map(|&w| (w - circle.center).norm()).fold(0.0, f64::max);
                        return EnclosingCircle::new(circle.center, radius);
                    }
                }
            }

            // Step B: vertex-triple circumcircles.
            let mut best: Option<EnclosingCircle> = None;
            for i in 0..v.len() {
                for j in i + 1..v.len() {
                    for k in j + 1..v.len() {
                        let Some(center) = circumcenter(v[i], v[j], v[k], tol * scale) else {
                            continue;
                        };
                        let circum_r = (center - v[i]).norm();
                        if !v.iter().all(|&w| (w - center).norm() <= circum_r + tol) {
                            continue;
                        }
                        let radius =
                            v.iter().map(|&w| (w - center).norm()).fold(0.0, f64::max);
                        let Ok(circle) = EnclosingCircle::new(center, radius) else {
                            continue;
                        };
                        match &best {
                            Some(b) if circle.rho0 >= b.rho0 - 1e-12 => {
                                // Equal-quality circles must coincide (the
                                // optimum is unique); keep the first triple.
                                debug_assert!(
                                    circle.rho0 > b.rho0 + 1e-12
                                        || (circle.center - b.center).norm() <= 1e-9 * scale,
                                    "distinct step-B circles with equal contraction"
                                );
                            }
                            _ => best = Some(circle),
                        }
                    }
                }
            }
            best.ok_or(Error::NoValidCircle)
        }
    }
}

/// Viewing-angle objective `max_i |mu - lambda_i| / |mu|` minimized by
/// [`optimal_circle`].
fn objective(mu: C64, points: &[C64]) -> f64 {
    let dist = mu.norm();
    if dist == 0.0 {
        return f64::INFINITY;
    }
    points.iter().map(|&p| (mu - p).norm()).fold(0.0, f64::max) / dist
}

/// Independent grid-search oracle for [`optimal_circle`].
///
/// Coarse search over the hull bounding box inflated threefold, followed by
/// a compass refinement with successive step halving down to machine scale.
/// Intended for validation; cost grows with `grid_resolution^2`.
pub fn brute_force_optimal(
    points: &[C64],
    grid_resolution: usize,
) -> Result<EnclosingCircle, Error> {
    let hull = convex_hull(points)?;
    let v = hull.vertices().to_vec();

    let (mut re_min, mut re_max) = (f64::INFINITY, f64::NEG_INFINITY);
    let (mut im_min, mut im_max) = (f64::INFINITY, f64::NEG_INFINITY);
    for p in &v {
        re_min = re_min.min(p.re);
        re_max = re_max.max(p.re);
        im_min = im_min.min(p.im);
        im_max = im_max.max(p.im);
    }
    let center = C64::new((re_min + re_max) / 2.0, (im_min + im_max) / 2.0);
    let mag = v.iter().map(|p| p.norm()).fold(0.0, f64::max);
    let extent = (re_max - re_min).max(im_max - im_min).max(0.5 * mag).max(1e-6);
    let half = 1.5 * extent;

    let res = grid_resolution.max(4);
    let step = 2.0 * half / (res - 1) as f64;
    let mut best_mu = center;
    let mut best_f = f64::INFINITY;
    for iy in 0..res {
        for ix in 0..res {
            let mu = C64::new(
                center.re - half + step * ix as f64,
                center.im - half + step * iy as f64,
            );
            let f = objective(mu, &v);
            if f < best_f {
                best_f = f;
                best_mu = mu;
            }
        }
    }

    // Successive grid halving: re-grid a box around the incumbent, zooming
    // 2x whenever the best point stays in the inner half (recenter-only
    // rounds let the walk follow a curved valley without losing the
    // optimum).
    let refine_res = 25usize;
    let mut half_box = 4.0 * step;
    let floor = 1e-10 * extent;
    let mut rounds = 0;
    while half_box > floor && rounds < 300 {
        rounds += 1;
        let spacing = 2.0 * half_box / (refine_res - 1) as f64;
        let corner = best_mu - C64::new(half_box, half_box);
        let mut round_best = best_mu;
        for iy in 0..refine_res {
            for ix in 0..refine_res {
                let mu = corner + C64::new(spacing * ix as f64, spacing * iy as f64);
                let f = objective(mu, &v);
                if f < best_f {
                    best_f = f;
                    round_best = mu;
                }
            }
        }
        let moved = (round_best - best_mu).norm();
        best_mu = round_best;
        if moved <= 0.5 * half_box {
            half_box *= 0.5;
        }
    }

    // Line-search polish. Grid walks stall in the kinked valley where two
    // vertices tie for the farthest distance; the valley is the
    // perpendicular bisector of that pair, and the objective is unimodal
    // along any line inside a sublevel set (Apollonius disks are convex),
    // so exact line minimization closes the gap.
    for _ in 0..40 {
        let f_before = best_f;

        // Valley line of the current farthest pair.
        if v.len() >= 2 {
            let mut order: Vec<usize> = (0..v.len()).collect();
            order.sort_by(|&i, &j| {
                (best_mu - v[j])
                    .norm()
                    .partial_cmp(&(best_mu - v[i]).norm())
                    .unwrap()
            });
            let (p, q) = (v[order[0]], v[order[1]]);
            let chord = q - p;
            if chord.norm() > 0.0 {
                let mid = (p + q) / 2.0;
                let dir = C64::new(0.0, 1.0) * chord / chord.norm();
                let span = 10.0 * (extent + best_mu.norm());
                let scan = 512;
                let mut t_best = 0.0;
                let mut f_line = f64::INFINITY;
                for k in 0..=scan {
                    let t = -span + 2.0 * span * k as f64 / scan as f64;
                    let f = objective(mid + dir * t, &v);
                    if f < f_line {
                        f_line = f;
                        t_best = t;
                    }
                }
                let t = golden_line_min(&|t| objective(mid + dir * t, &v), t_best, 1e-9 * extent);
                let f = objective(mid + dir * t, &v);
                if f < best_f {
                    best_f = f;
                    best_mu = mid + dir * t;
                }
            }
        }

        // Fan of exact line minimizations through the incumbent.
        for k in 0..16 {
            let th = std::f64::consts::PI * k as f64 / 16.0;
            let dir = C64::new(th.cos(), th.sin());
            let t = golden_line_min(
                &|t| objective(best_mu + dir * t, &v),
                0.0,
                1e-9 * extent,
            );
            let f = objective(best_mu + dir * t, &v);
            if f < best_f {
                best_f = f;
                best_mu += dir * t;
            }
        }

        if f_before - best_f <= 1e-15 * (1.0 + best_f) {
            break;
        }
    }

    let radius = points.iter().map(|&p| (best_mu - p).norm()).fold(0.0, f64::max);
    EnclosingCircle::new(best_mu, radius)
}

/// 1D minimization along a line: outward doubling from the anchor until the
/// minimum is bracketed, then golden-section. Valid for functions unimodal
/// on the interval reachable from the anchor within its sublevel set.
fn golden_line_min(f: &dyn Fn(f64) -> f64, anchor: f64, step: f64) -> f64 {
    let f0 = f(anchor);
    let mut s = step.max(f64::MIN_POSITIVE);
    // Pick the descending side.
    let (mut dir, mut f1) = {
        let fp = f(anchor + s);
        let fm = f(anchor - s);
        if fp <= fm {
            (1.0, fp)
        } else {
            (-1.0, fm)
        }
    };
    if f1 >= f0 {
        // Try the other side once more at a finer step before giving up.
        s *= 0.25;
        let fp = f(anchor + s);
        let fm = f(anchor - s);
        if fp.min(fm) >= f0 {
            return anchor;
        }
        dir = if fp <= fm { 1.0 } else { -1.0 };
        f1 = fp.min(fm);
    }
    // Double outward until the function rises again.
    let mut t_prev = anchor;
    let mut t_cur = anchor + dir * s;
    let mut f_cur = f1;
    let mut t_next = anchor + dir * 2.0 * s;
    let mut f_next = f(t_next);
    let mut guard = 0;
    while f_next < f_cur && guard < 200 {
        guard += 1;
        t_prev = t_cur;
        t_cur = t_next;
        f_cur = f_next;
        t_next = t_cur + (t_cur - t_prev) * 2.0;
        f_next = f(t_next);
    }
    // Golden-section on [t_prev, t_next] (ordered).
    let (mut lo, mut hi) = if t_prev <= t_next {
        (t_prev, t_next)
    } else {
        (t_next, t_prev)
    };
    let phi = 0.618_033_988_749_894_9;
    let mut m1 = hi - phi * (hi - lo);
    let mut m2 = lo + phi * (hi - lo);
    let mut f_m1 = f(m1);
    let mut f_m2 = f(m2);
    for _ in 0..120 {
        if f_m1 <= f_m2 {
            hi = m2;
            m2 = m1;
            f_m2 = f_m1;
            m1 = hi - phi * (hi - lo);
            f_m1 = f(m1);
        } else {
            lo = m1;
            m1 = m2;
            f_m1 = f_m2;
            m2 = lo + phi * (hi - lo);
            f_m2 = f(m2);
        }
    }
    let mid = (lo + hi) / 2.0;
    if f(mid) <= f0 {
        mid
    } else {
        anchor
    }
}

/// A spectrum-localization region on the complex plane.
#[derive(Debug, Clone, PartialEq)]
pub enum SpectrumRegion {
    Point(C64),
    Segment { a: C64, b: C64 },
    Circle { center: C64, radius: f64 },
    Triangle { vertices: [C64; 3] },
    Rectangle { re: [f64; 2], im: [f64; 2] },
    Polygon { vertices: Vec<C64> },
}

impl SpectrumRegion {
    /// Region matching a convex hull polygon: point, segment, triangle or
    /// general polygon depending on the vertex count.
    pub fn from_polygon(poly: &SpectrumPolygon) -> Self {
        let v = poly.vertices();
        match v.len() {
            1 => SpectrumRegion::Point(v[0]),
            2 => SpectrumRegion::Segment { a: v[0], b: v[1] },
            3 => SpectrumRegion::Triangle {
                vertices: [v[0], v[1], v[2]],
            },
            _ => SpectrumRegion::Polygon {
                vertices: v.to_vec(),
            },
        }
    }

    /// Euclidean distance from `z` to the region (0 inside or on boundary).
    pub fn distance_to(&self, z: C64) -> f64 {
        match self {
            SpectrumRegion::Point(p) => (z - p).norm(),
            SpectrumRegion::Segment { a, b } => point_segment_distance(z, *a, *b),
            SpectrumRegion::Circle { center, radius } => ((z - center).norm() - radius).max(0.0),
            SpectrumRegion::Triangle { vertices } => polygon_distance(&vertices[..], z),
            SpectrumRegion::Rectangle { re, im } => {
                let dx = (re[0] - z.re).max(z.re - re[1]).max(0.0);
                let dy = (im[0] - z.im).max(z.im - im[1]).max(0.0);
                (dx * dx + dy * dy).sqrt()
            }
            SpectrumRegion::Polygon { vertices } => polygon_distance(vertices, z),
        }
    }

    /// Largest distance between two region points.
    pub fn diameter(&self) -> f64 {
        match self {
            SpectrumRegion::Point(_) => 0.0,
            SpectrumRegion::Segment { a, b } => (a - b).norm(),
            SpectrumRegion::Circle { radius, .. } => 2.0 * radius,
            SpectrumRegion::Triangle { vertices } => max_pairwise(&vertices[..]),
            SpectrumRegion::Rectangle { re, im } => {
                ((re[1] - re[0]).powi(2) + (im[1] - im[0]).powi(2)).sqrt()
            }
            SpectrumRegion::Polygon { vertices } => max_pairwise(vertices),
        }
    }

    /// Points on the region boundary for sampling-based maximization. By the
    /// maximum principle a polynomial's modulus over the closed region is
    /// attained on the boundary, so these samples bound layer contractions.
    pub fn boundary_samples(&self, count: usize) -> Vec<C64> {
        let count = count.max(2);
        match self {
            SpectrumRegion::Point(p) => vec![*p],
            SpectrumRegion::Segment { a, b } => sample_segment(*a, *b, count),
            SpectrumRegion::Circle { center, radius } => (0..count)
                .map(|k| {
                    let th = 2.0 * std::f64::consts::PI * k as f64 / count as f64;
                    center + C64::new(radius * th.cos(), radius * th.sin())
                })
                .collect(),
            SpectrumRegion::Triangle { vertices } => sample_closed_polyline(&vertices[..], count),
            SpectrumRegion::Rectangle { re, im } => {
                let corners = [
                    C64::new(re[0], im[0]),
                    C64::new(re[1], im[0]),
                    C64::new(re[1], im[1]),
                    C64::new(re[0], im[1]),
                ];
                sample_closed_polyline(&corners, count)
            }
            SpectrumRegion::Polygon { vertices } => sample_closed_polyline(vertices, count),
        }
    }

    /// Scales the region about the anchor point `1 + 0i` by `factor`,
    /// dilating a predicted localization to absorb discretization spillover.
    pub fn inflate_about_one(&self, factor: f64) -> Self {
        let one = C64::new(1.0, 0.0);
        let map = |z: C64| one + (z - one) * factor;
        match self {
            SpectrumRegion::Point(p) => SpectrumRegion::Point(map(*p)),
            SpectrumRegion::Segment { a, b } => SpectrumRegion::Segment {
                a: map(*a),
                b: map(*b),
            },
            SpectrumRegion::Circle { center, radius } => SpectrumRegion::Circle {
                center: map(*center),
                radius: radius * factor,
            },
            SpectrumRegion::Triangle { vertices } => SpectrumRegion::Triangle {
                vertices: [map(vertices[0]), map(vertices[1]), map(vertices[2])],
            },
            SpectrumRegion::Rectangle { re, im } => SpectrumRegion::Rectangle {
                re: [1.0 + (re[0] - 1.0) * factor, 1.0 + (re[1] - 1.0) * factor],
                im: [im[0] * factor, im[1] * factor],
            },
            SpectrumRegion::Polygon { vertices } => SpectrumRegion::Polygon {
                vertices: vertices.iter().map(|&z| map(z)).collect(),
            },
        }
    }
}

fn max_pairwise(v: &[C64]) -> f64 {
    let mut d = 0.0f64;
    for i in 0..v.len() {
        for j in i + 1..v.len() {
            d = d.max((v[i] - v[j]).norm());
        }
    }
    d
}

fn polygon_distance(v: &[C64], z: C64) -> f64 {
    // Accept either winding; a degenerate (zero-area) polygon falls through
    // to the edge-distance path.
    let area2: f64 = (0..v.len()).map(|i| cross(v[i], v[(i + 1) % v.len()])).sum();
    let sign = if area2 >= 0.0 { 1.0 } else { -1.0 };
    let inside = area2 != 0.0
        && (0..v.len()).all(|i| sign * cross(v[(i + 1) % v.len()] - v[i], z - v[i]) >= 0.0);
    if inside {
        0.0
    } else {
        (0..v.len())
            .map(|i| point_segment_distance(z, v[i], v[(i + 1) % v.len()]))
            .fold(f64::INFINITY, f64::min)
    }
}

fn sample_segment(a: C64, b: C64, count: usize) -> Vec<C64> {
    (0..count)
        .map(|k| a + (b - a) * (k as f64 / (count - 1) as f64))
        .collect()
}

fn sample_closed_polyline(v: &[C64], count: usize) -> Vec<C64> {
    let per_edge = (count / v.len()).max(2);
    let mut out = Vec::with_capacity(per_edge * v.len());
    for i in 0..v.len() {
        let a = v[i];
        let b = v[(i + 1) % v.len()];
        for k in 0..per_edge {
            out.push(a + (b - a) * (k as f64 / per_edge as f64));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    /// Independent hull oracle: an edge (i, j) is a hull edge iff every other
    /// point lies strictly on its left; hull vertices are edge endpoints.
    fn hull_vertices_oracle(points: &[C64]) -> Vec<C64> {
        let mut verts: Vec<C64> = Vec::new();
        let n = points.len();
        for i in 0..n {
            for j in 0..n {
                if i == j {
                    continue;
                }
                let mut left = true;
                for k in 0..n {
                    if k == i || k == j {
                        continue;
                    }
                    if cross(points[j] - points[i], points[k] - points[i]) <= 0.0 {
                        left = false;
                        break;
                    }
                }
                if left {
                    for &p in [points[i], points[j]].iter() {
                        if !verts.iter().any(|&q| (q - p).norm() == 0.0) {
                            verts.push(p);
                        }
                    }
                }
            }
        }
        verts
    }

    #[test]
    fn hull_single_point() {
        let poly = convex_hull(&[c(1.0, 0.0)]).unwrap();
        assert_eq!(poly.vertices(), &[c(1.0, 0.0)]);
    }

    #[test]
    fn hull_drops_interior_point() {
        let poly =
            convex_hull(&[c(1.0, 0.0), c(3.0, 0.0), c(2.0, 1.0), c(2.0, 0.1)]).unwrap();
        let expect = [c(1.0, 0.0), c(3.0, 0.0), c(2.0, 1.0)];
        assert_eq!(poly.vertices().len(), 3);
        for e in expect {
            assert!(poly.vertices().iter().any(|&v| (v - e).norm() == 0.0));
        }
        // Counterclockwise orientation.
        let v = poly.vertices();
        assert!(cross(v[1] - v[0], v[2] - v[0]) > 0.0);

        let oracle = hull_vertices_oracle(&[c(1.0, 0.0), c(3.0, 0.0), c(2.0, 1.0), c(2.0, 0.1)]);
        assert_eq!(oracle.len(), 3);
    }

    #[test]
    fn hull_rejects_origin_inside() {
        let err = convex_hull(&[c(1.0, 0.0), c(-1.0, 0.0), c(0.0, 1.0)]).unwrap_err();
        assert_eq!(err, Error::OriginInsideHull);
    }

    #[test]
    fn hull_rejects_origin_on_degenerate_segment() {
        let err = convex_hull(&[c(-1.0, 0.0), c(2.0, 0.0)]).unwrap_err();
        assert_eq!(err, Error::OriginInsideHull);
    }

    #[test]
    fn hull_collinear_points_collapse_to_segment() {
        let poly = convex_hull(&[c(1.0, 1.0), c(2.0, 2.0), c(3.0, 3.0)]).unwrap();
        assert_eq!(poly.vertices(), &[c(1.0, 1.0), c(3.0, 3.0)]);
    }

    #[test]
    fn segment_circle_classical_real_interval() {
        let circle = segment_optimal_circle(c(1.0, 0.0), c(3.0, 0.0)).unwrap();
        assert!((circle.center - c(2.0, 0.0)).norm() < 1e-14);
        assert!((circle.radius - 1.0).abs() < 1e-14);
        assert!((circle.rho0 - 0.5).abs() < 1e-14);

        // General (m, M): exact midpoint and ratio (M-m)/(M+m).
        for (m, mm) in [(0.5, 7.0), (2.0, 2.5), (1e-3, 10.0)] {
            let circ = segment_optimal_circle(c(m, 0.0), c(mm, 0.0)).unwrap();
            assert!((circ.center.re - (m + mm) / 2.0).abs() < 1e-12 * mm);
            assert!((circ.rho0 - (mm - m) / (mm + m)).abs() < 1e-12);
        }
    }

    #[test]
    fn segment_circle_rejects_degenerate_and_origin() {
        assert_eq!(
            segment_optimal_circle(c(1.0, 1.0), c(1.0, 1.0)).unwrap_err(),
            Error::DegenerateSegment
        );
        assert_eq!(
            segment_optimal_circle(c(-1.0, 0.0), c(3.0, 0.0)).unwrap_err(),
            Error::OriginOnSegment
        );
    }

    #[test]
    fn segment_circle_matches_grid_search() {
        let p = c(1.0, 0.0);
        let q = c(1.0, 2.0);
        let circle = segment_optimal_circle(p, q).unwrap();
        let oracle = brute_force_optimal(&[p, q], 64).unwrap();
        assert!(
            (circle.rho0 - oracle.rho0).abs() < 1e-6,
            "rho {} vs oracle {}",
            circle.rho0,
            oracle.rho0
        );
        assert!((circle.center - oracle.center).norm() < 1e-4);
    }

    #[test]
    fn optimal_circle_degenerate_cases() {
        let point = convex_hull(&[c(3.0, 0.0)]).unwrap();
        let circle = optimal_circle(&point).unwrap();
        assert_eq!(circle.center, c(3.0, 0.0));
        assert_eq!(circle.radius, 0.0);
        assert_eq!(circle.rho0, 0.0);

        let seg = convex_hull(&[c(1.0, 0.0), c(3.0, 0.0)]).unwrap();
        let circle = optimal_circle(&seg).unwrap();
        assert!((circle.center - c(2.0, 0.0)).norm() < 1e-14);
        assert!((circle.radius - 1.0).abs() < 1e-14);
    }

    #[test]
    fn optimal_circle_triangle_matches_oracle() {
        let pts = [c(1.0, 0.0), c(3.0, 1.0), c(2.0, 2.0)];
        let poly = convex_hull(&pts).unwrap();
        let fast = optimal_circle(&poly).unwrap();
        let slow = brute_force_optimal(&pts, 64).unwrap();
        assert!(
            (fast.rho0 - slow.rho0).abs() < 1e-6,
            "rho {} vs oracle {}",
            fast.rho0,
            slow.rho0
        );
        for p in pts {
            assert!((p - fast.center).norm() <= fast.radius * (1.0 + 1e-12));
        }
        assert!(fast.center.norm() > fast.radius);
    }

    #[test]
    fn brute_force_single_point() {
        let circle = brute_force_optimal(&[c(2.0, 0.0)], 32).unwrap();
        assert!((circle.center - c(2.0, 0.0)).norm() < 1e-6);
        assert!(circle.rho0 < 1e-6);
    }

    #[test]
    fn brute_force_classical_segment() {
        let circle = brute_force_optimal(&[c(1.0, 0.0), c(3.0, 0.0)], 64).unwrap();
        assert!((circle.center - c(2.0, 0.0)).norm() < 1e-6);
        assert!((circle.rho0 - 0.5).abs() < 1e-6);
    }

    #[test]
    fn scaling_invariance() {
        let pts = [c(1.0, 0.5), c(3.0, 1.0), c(2.0, 2.0), c(2.5, 0.2)];
        let base = optimal_circle(&convex_hull(&pts).unwrap()).unwrap();
        for s in [c(2.0, 0.0), c(0.0, 1.0), c(-1.5, 2.5)] {
            let scaled: Vec<C64> = pts.iter().map(|&p| p * s).collect();
            let circle = optimal_circle(&convex_hull(&scaled).unwrap()).unwrap();
            assert!(
                (circle.rho0 - base.rho0).abs() < 1e-9,
                "rho changed under scaling by {s}: {} vs {}",
                circle.rho0,
                base.rho0
            );
            assert!((circle.center - base.center * s).norm() < 1e-9 * scaled[0].norm());
        }
    }

    #[test]
    fn monotonicity_under_point_insertion() {
        let small = [c(2.0, 0.0), c(3.0, 1.0), c(2.5, 1.5)];
        let large = [c(2.0, 0.0), c(3.0, 1.0), c(2.5, 1.5), c(4.0, 0.5), c(1.5, 0.2)];
        let rho_small = optimal_circle(&convex_hull(&small).unwrap()).unwrap().rho0;
        let rho_large = optimal_circle(&convex_hull(&large).unwrap()).unwrap().rho0;
        assert!(rho_small <= rho_large + 1e-12);
    }

    #[test]
    fn region_distance_and_samples() {
        let seg = SpectrumRegion::Segment {
            a: c(1.0, 0.0),
            b: c(3.0, 0.0),
        };
        assert_eq!(seg.distance_to(c(2.0, 0.0)), 0.0);
        assert!((seg.distance_to(c(2.0, 1.0)) - 1.0).abs() < 1e-15);
        assert!((seg.diameter() - 2.0).abs() < 1e-15);

        let tri = SpectrumRegion::Triangle {
            vertices: [c(1.0, 0.0), c(3.0, 1.0), c(2.0, 2.0)],
        };
        assert_eq!(tri.distance_to(c(1.0, 0.0)), 0.0, "vertex counts as inside");
        assert_eq!(tri.distance_to(c(2.0, 1.0)), 0.0);
        assert!(tri.distance_to(c(0.0, 0.0)) > 0.9);

        let circle = SpectrumRegion::Circle {
            center: c(2.0, 0.0),
            radius: 1.0,
        };
        for z in circle.boundary_samples(64) {
            assert!(((z - c(2.0, 0.0)).norm() - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn region_inflation_anchored_at_one() {
        let seg = SpectrumRegion::Segment {
            a: c(1.0, 0.0),
            b: c(15.0, 0.0),
        };
        let big = seg.inflate_about_one(1.15);
        match big {
            SpectrumRegion::Segment { a, b } => {
                assert!((a - c(1.0, 0.0)).norm() < 1e-15);
                assert!((b - c(1.0 + 14.0 * 1.15, 0.0)).norm() < 1e-12);
            }
            _ => panic!("segment expected"),
        }
    }
}
