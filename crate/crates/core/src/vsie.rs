//! Discretized volume singular integral equation for electromagnetic
//! scattering by an isotropic dielectric body.
//!
//! The scatterer is voxelized on a uniform grid spanning its bounding cube;
//! collocation at cell centers with piecewise-constant fields turns the
//! integral equation into a dense linear system whose row for cell `i` reads
//!
//! ```text
//! E_i + (1/3) chi_i E_i - sum_{j != i} Kbar(x_i - x_j) chi_j E_j = E0_i
//! ```
//!
//! with `chi = eps - 1` the contrast and `Kbar(r)` the dyadic Helmholtz
//! kernel integrated over the source cell (tensor Gauss quadrature). The
//! cell integration matters: sampling the kernel at the source-cell center
//! instead pushes the lowest eigenvalues of the assembled operator to and
//! below zero at moderate contrast, where stationary iteration provably
//! cannot converge. The principal-value integral over the self cell
//! vanishes by cubic symmetry; the `1/3` depolarization term carries the
//! self-interaction. Because the kernel depends only on the cell offset,
//! the sum is a 3D convolution evaluated with zero-padded FFTs on a
//! `(2n)^3` lattice.
//!
//! Lengths are measured in vacuum wavelengths, so a plane-wave problem uses
//! `k0 = 2 pi` and a ball of radius `lambda/30` has `radius = 1/30`.

use std::f64::consts::PI;
use std::io::Write;

use ndarray::Array2;

use crate::error::Error;
use crate::fft::{sum_of_prime_factors, Fft3};
use crate::solver::LinearOperator;
use crate::C64;

/// Scalar Green's function of the Helmholtz equation,
/// `exp(i k0 R) / (4 pi R)`.
pub fn green(r: f64, k0: f64) -> Result<C64, Error> {
    if !(r > 0.0) {
        return Err(Error::ZeroDistance);
    }
    Ok(C64::new(0.0, k0 * r).exp() / (4.0 * PI * r))
}

/// Dyadic kernel `K_pq(r) = (k0^2 delta_pq + d_p d_q) G(|r|)`:
///
/// ```text
/// K_pq = G(R) [ delta_pq (k0^2 + i k0/R - 1/R^2)
///             + rhat_p rhat_q (-k0^2 - 3 i k0/R + 3/R^2) ]
/// ```
///
/// symmetric in `(p, q)` and even in `r`. The closed form is certified
/// against a finite-difference Hessian of `G` in the test suite.
pub fn dyadic_kernel(r: [f64; 3], k0: f64) -> Result<[[C64; 3]; 3], Error> {
    let dist2 = r[0] * r[0] + r[1] * r[1] + r[2] * r[2];
    if dist2 == 0.0 {
        return Err(Error::ZeroOffset);
    }
    let dist = dist2.sqrt();
    let g = green(dist, k0)?;
    let iso = g * C64::new(k0 * k0 - 1.0 / dist2, k0 / dist);
    let aniso = g * C64::new(-k0 * k0 + 3.0 / dist2, -3.0 * k0 / dist);
    let rhat = [r[0] / dist, r[1] / dist, r[2] / dist];
    let mut k = [[C64::new(0.0, 0.0); 3]; 3];
    for p in 0..3 {
        for q in 0..3 {
            let mut v = aniso * rhat[p] * rhat[q];
            if p == q {
                v += iso;
            }
            k[p][q] = v;
        }
    }
    Ok(k)
}

/// Isotropic permittivity profile of the scatterer. Relative permittivity is
/// 1 outside the body.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum PermittivityProfile {
    /// Ball of constant permittivity.
    HomogeneousBall { eps: C64, radius: f64 },
    /// Ball with a constant core (`eps_core` for `r <= d2`), a linear ramp
    /// to `eps_outer` at `r = d1`, and a linear ramp to 1 at `r = radius`;
    /// continuous, with `radius > d1 > d2 > 0`.
    LayeredBall {
        eps_core: C64,
        eps_outer: C64,
        d2: f64,
        d1: f64,
        radius: f64,
    },
    /// Axis-aligned cube of constant permittivity.
    HomogeneousCube { eps: C64, side: f64 },
}

fn check_passive(eps: C64, what: &str) -> Result<(), Error> {
    if !eps.re.is_finite() || !eps.im.is_finite() {
        return Err(Error::InvalidProfile(format!("{what} is not finite")));
    }
    if eps.norm() == 0.0 {
        return Err(Error::InvalidProfile(format!("{what} vanishes")));
    }
    if eps.im < 0.0 {
        return Err(Error::InvalidProfile(format!(
            "{what} has negative imaginary part (active medium)"
        )));
    }
    Ok(())
}

fn segment_avoids_zero(a: C64, b: C64) -> bool {
    let scale = a.norm().max(b.norm());
    crate::geometry::point_segment_distance(C64::new(0.0, 0.0), a, b) > 1e-12 * scale
}

impl PermittivityProfile {
    pub fn validate(&self) -> Result<(), Error> {
        match *self {
            PermittivityProfile::HomogeneousBall { eps, radius } => {
                check_passive(eps, "permittivity")?;
                if !(radius > 0.0) || !radius.is_finite() {
                    return Err(Error::InvalidProfile("radius must be positive".into()));
                }
                Ok(())
            }
            PermittivityProfile::LayeredBall {
                eps_core,
                eps_outer,
                d2,
                d1,
                radius,
            } => {
                check_passive(eps_core, "core permittivity")?;
                check_passive(eps_outer, "outer permittivity")?;
                if !(radius > d1 && d1 > d2 && d2 > 0.0) {
                    return Err(Error::InvalidProfile(
                        "layer radii must satisfy radius > d1 > d2 > 0".into(),
                    ));
                }
                let one = C64::new(1.0, 0.0);
                if !segment_avoids_zero(eps_core, eps_outer)
                    || !segment_avoids_zero(eps_outer, one)
                {
                    return Err(Error::InvalidProfile(
                        "permittivity ramp passes through zero".into(),
                    ));
                }
                Ok(())
            }
            PermittivityProfile::HomogeneousCube { eps, side } => {
                check_passive(eps, "permittivity")?;
                if !(side > 0.0) || !side.is_finite() {
                    return Err(Error::InvalidProfile("side must be positive".into()));
                }
                Ok(())
            }
        }
    }

    /// Relative permittivity at a point (1 outside the body).
    pub fn eval(&self, x: [f64; 3]) -> C64 {
        let one = C64::new(1.0, 0.0);
        match *self {
            PermittivityProfile::HomogeneousBall { eps, radius } => {
                if norm3(x) <= radius {
                    eps
                } else {
                    one
                }
            }
            PermittivityProfile::LayeredBall {
                eps_core,
                eps_outer,
                d2,
                d1,
                radius,
            } => {
                let r = norm3(x);
                if r <= d2 {
                    eps_core
                } else if r <= d1 {
                    eps_core + (eps_outer - eps_core) * ((r - d2) / (d1 - d2))
                } else if r <= radius {
                    eps_outer + (one - eps_outer) * ((r - d1) / (radius - d1))
                } else {
                    one
                }
            }
            PermittivityProfile::HomogeneousCube { eps, side } => {
                let h = side / 2.0;
                if x[0].abs() <= h && x[1].abs() <= h && x[2].abs() <= h {
                    eps
                } else {
                    one
                }
            }
        }
    }

    pub fn is_inside(&self, x: [f64; 3]) -> bool {
        match *self {
            PermittivityProfile::HomogeneousBall { radius, .. } => norm3(x) <= radius,
            PermittivityProfile::LayeredBall { radius, .. } => norm3(x) <= radius,
            PermittivityProfile::HomogeneousCube { side, .. } => {
                let h = side / 2.0;
                x[0].abs() <= h && x[1].abs() <= h && x[2].abs() <= h
            }
        }
    }

    /// Side of the bounding cube (the body diameter).
    pub fn bounding_side(&self) -> f64 {
        match *self {
            PermittivityProfile::HomogeneousBall { radius, .. } => 2.0 * radius,
            PermittivityProfile::LayeredBall { radius, .. } => 2.0 * radius,
            PermittivityProfile::HomogeneousCube { side, .. } => side,
        }
    }

    /// Extreme permittivity values of the profile, including the boundary
    /// value 1; the profile's full value set lies on segments between them.
    pub fn locus_breakpoints(&self) -> Vec<C64> {
        let one = C64::new(1.0, 0.0);
        match *self {
            PermittivityProfile::HomogeneousBall { eps, .. }
            | PermittivityProfile::HomogeneousCube { eps, .. } => vec![eps, one],
            PermittivityProfile::LayeredBall {
                eps_core, eps_outer, ..
            } => vec![eps_core, eps_outer, one],
        }
    }
}

fn norm3(x: [f64; 3]) -> f64 {
    (x[0] * x[0] + x[1] * x[1] + x[2] * x[2]).sqrt()
}

/// Uniform voxelization of a profile's bounding cube: `n^3` cells of edge
/// `h`, cell-major contrast values (`chi = 0` exactly outside the body).
#[derive(Debug, Clone)]
pub struct VoxelGrid {
    n_cells: usize,
    h: f64,
    half_side: f64,
    chi: Vec<C64>,
}

impl VoxelGrid {
    pub fn build(profile: &PermittivityProfile, n_cells: usize) -> Result<Self, Error> {
        profile.validate()?;
        if n_cells < 2 {
            return Err(Error::BodyOutsideGrid(
                "grid needs at least 2 cells per axis".into(),
            ));
        }
        let side = profile.bounding_side();
        let h = side / n_cells as f64;
        let half_side = side / 2.0;
        let mut chi = vec![C64::new(0.0, 0.0); n_cells * n_cells * n_cells];
        for iz in 0..n_cells {
            for iy in 0..n_cells {
                for ix in 0..n_cells {
                    let x = [
                        -half_side + (ix as f64 + 0.5) * h,
                        -half_side + (iy as f64 + 0.5) * h,
                        -half_side + (iz as f64 + 0.5) * h,
                    ];
                    if profile.is_inside(x) {
                        let idx = ix + n_cells * (iy + n_cells * iz);
                        chi[idx] = profile.eval(x) - C64::new(1.0, 0.0);
                    }
                }
            }
        }
        Ok(VoxelGrid {
            n_cells,
            h,
            half_side,
            chi,
        })
    }

    pub fn n_cells(&self) -> usize {
        self.n_cells
    }

    pub fn h(&self) -> f64 {
        self.h
    }

    pub fn chi(&self) -> &[C64] {
        &self.chi
    }

    pub fn num_cells(&self) -> usize {
        self.chi.len()
    }

    /// Unknowns: three field components per cell.
    pub fn dim(&self) -> usize {
        3 * self.chi.len()
    }

    pub fn cell_index(&self, ix: usize, iy: usize, iz: usize) -> usize {
        ix + self.n_cells * (iy + self.n_cells * iz)
    }

    pub fn center(&self, ix: usize, iy: usize, iz: usize) -> [f64; 3] {
        [
            -self.half_side + (ix as f64 + 0.5) * self.h,
            -self.half_side + (iy as f64 + 0.5) * self.h,
            -self.half_side + (iz as f64 + 0.5) * self.h,
        ]
    }
}

/// Unique components of the symmetric dyadic kernel, in the order
/// xx, xy, xz, yy, yz, zz.
const KERNEL_PAIRS: [(usize, usize); 6] = [(0, 0), (0, 1), (0, 2), (1, 1), (1, 2), (2, 2)];

/// Gauss-Legendre nodes and weights of order 4 on [-1, 1].
const GL4_NODES: [f64; 4] = [
    -0.8611363115940526,
    -0.3399810435848563,
    0.3399810435848563,
    0.8611363115940526,
];
const GL4_WEIGHTS: [f64; 4] = [
    0.3478548451374538,
    0.6521451548625461,
    0.6521451548625461,
    0.3478548451374538,
];

/// Dyadic kernel integrated over the source cell: `int_cell K(r - y) dy`
/// for a cube of edge `h` centered at offset `r` from the observation
/// point, by tensor Gauss-Legendre quadrature.
fn cell_integrated_kernel(r: [f64; 3], h: f64, k0: f64) -> [[C64; 3]; 3] {
    let half = h / 2.0;
    let mut acc = [[C64::new(0.0, 0.0); 3]; 3];
    for (iz, &nz) in GL4_NODES.iter().enumerate() {
        for (iy, &ny) in GL4_NODES.iter().enumerate() {
            for (ix, &nx) in GL4_NODES.iter().enumerate() {
                let y = [r[0] + half * nx, r[1] + half * ny, r[2] + half * nz];
                let w = GL4_WEIGHTS[ix] * GL4_WEIGHTS[iy] * GL4_WEIGHTS[iz] * half * half * half;
                let k = dyadic_kernel(y, k0).expect("quadrature point away from origin");
                for p in 0..3 {
                    for q in 0..3 {
                        acc[p][q] += k[p][q] * w;
                    }
                }
            }
        }
    }
    acc
}

/// The discretized integral operator: identity plus depolarization plus the
/// kernel convolution. Matvecs run through zero-padded FFTs; `dense` builds
/// the full matrix for verification and eigenvalue studies.
///
/// A built operator is immutable; `apply` allocates its own scratch and may
/// be called concurrently.
pub struct VsieOperator {
    grid: VoxelGrid,
    k0: f64,
    fft: Fft3,
    /// Forward transforms of the padded kernel lattices (volume weight and
    /// sign folded in), one per unique component.
    kernel_hat: Vec<Vec<C64>>,
}

impl VsieOperator {
    pub fn new(
        profile: &PermittivityProfile,
        n_cells: usize,
        k0: f64,
    ) -> Result<Self, Error> {
        if !k0.is_finite() || k0 < 0.0 {
            return Err(Error::InvalidProfile("wavenumber must be >= 0".into()));
        }
        let grid = VoxelGrid::build(profile, n_cells)?;
        let n = grid.n_cells();
        let m = 2 * n;
        let mlen = m * m * m;
        let fft = Fft3::new(m);
        let h = grid.h();

        let mut kernel_hat = vec![vec![C64::new(0.0, 0.0); mlen]; 6];
        let offset_range = -(n as isize - 1)..=(n as isize - 1);
        for dz in offset_range.clone() {
            for dy in offset_range.clone() {
                for dx in offset_range.clone() {
                    if dx == 0 && dy == 0 && dz == 0 {
                        continue; // self cell: principal value vanishes
                    }
                    let r = [dx as f64 * h, dy as f64 * h, dz as f64 * h];
                    let k = cell_integrated_kernel(r, h, k0);
                    let t = wrap(dx, m) + m * (wrap(dy, m) + m * wrap(dz, m));
                    for (c, &(p, q)) in KERNEL_PAIRS.iter().enumerate() {
                        kernel_hat[c][t] = -k[p][q];
                    }
                }
            }
        }
        for lattice in kernel_hat.iter_mut() {
            fft.forward(lattice);
        }
        Ok(VsieOperator {
            grid,
            k0,
            fft,
            kernel_hat,
        })
    }

    pub fn grid(&self) -> &VoxelGrid {
        &self.grid
    }

    pub fn k0(&self) -> f64 {
        self.k0
    }

    /// Assembles the dense matrix; quadratic memory, intended for small
    /// grids (verification, eigenvalue studies). Uses the same
    /// cell-integrated kernel as the FFT path.
    pub fn dense(&self) -> Array2<C64> {
        let n = self.grid.n_cells();
        let dim = self.grid.dim();
        let h = self.grid.h();
        let chi = self.grid.chi();

        // Kernel table over cell offsets, indexed (d + n - 1) per axis.
        let span = 2 * n - 1;
        let zero_block = [[C64::new(0.0, 0.0); 3]; 3];
        let mut table = vec![zero_block; span * span * span];
        for dz in -(n as isize - 1)..=(n as isize - 1) {
            for dy in -(n as isize - 1)..=(n as isize - 1) {
                for dx in -(n as isize - 1)..=(n as isize - 1) {
                    if dx == 0 && dy == 0 && dz == 0 {
                        continue;
                    }
                    let idx = (dx + n as isize - 1) as usize
                        + span
                            * ((dy + n as isize - 1) as usize
                                + span * ((dz + n as isize - 1) as usize));
                    let r = [dx as f64 * h, dy as f64 * h, dz as f64 * h];
                    table[idx] = cell_integrated_kernel(r, h, self.k0);
                }
            }
        }

        let mut a = Array2::zeros((dim, dim));
        for jz in 0..n {
            for jy in 0..n {
                for jx in 0..n {
                    let j = self.grid.cell_index(jx, jy, jz);
                    if chi[j].norm() == 0.0 {
                        for p in 0..3 {
                            a[[3 * j + p, 3 * j + p]] = C64::new(1.0, 0.0);
                        }
                        continue;
                    }
                    for iz in 0..n {
                        for iy in 0..n {
                            for ix in 0..n {
                                let i = self.grid.cell_index(ix, iy, iz);
                                if i == j {
                                    let diag = C64::new(1.0, 0.0) + chi[j] / 3.0;
                                    for p in 0..3 {
                                        a[[3 * j + p, 3 * j + p]] = diag;
                                    }
                                    continue;
                                }
                                let idx = (ix + n - 1 - jx)
                                    + span * ((iy + n - 1 - jy) + span * (iz + n - 1 - jz));
                                let k = &table[idx];
                                for p in 0..3 {
                                    for q in 0..3 {
                                        a[[3 * i + p, 3 * j + q]] = -k[p][q] * chi[j];
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
        a
    }
}

fn wrap(d: isize, m: usize) -> usize {
    if d < 0 {
        (d + m as isize) as usize
    } else {
        d as usize
    }
}

impl LinearOperator for VsieOperator {
    fn dim(&self) -> usize {
        self.grid.dim()
    }

    fn apply(&self, x: &[C64], y: &mut [C64]) {
        let dim = self.grid.dim();
        assert_eq!(x.len(), dim, "input length mismatch");
        assert_eq!(y.len(), dim, "output length mismatch");
        let n = self.grid.n_cells();
        let m = self.fft.size();
        let mlen = self.fft.len();
        let chi = self.grid.chi();

        // Scatter chi .* x into the padded component lattices.
        let zero = C64::new(0.0, 0.0);
        let mut inputs = vec![vec![zero; mlen]; 3];
        for iz in 0..n {
            for iy in 0..n {
                for ix in 0..n {
                    let cell = self.grid.cell_index(ix, iy, iz);
                    if chi[cell] == zero {
                        continue;
                    }
                    let t = ix + m * (iy + m * iz);
                    for (comp, grid) in inputs.iter_mut().enumerate() {
                        grid[t] = chi[cell] * x[3 * cell + comp];
                    }
                }
            }
        }
        for grid in inputs.iter_mut() {
            self.fft.forward(grid);
        }

        // Pointwise symmetric 3x3 multiply in the spectral domain.
        let mut outputs = vec![vec![zero; mlen]; 3];
        {
            let kh = &self.kernel_hat;
            let (gx, gy, gz) = (&inputs[0], &inputs[1], &inputs[2]);
            for t in 0..mlen {
                let (xx, xy, xz) = (kh[0][t], kh[1][t], kh[2][t]);
                let (yy, yz, zz) = (kh[3][t], kh[4][t], kh[5][t]);
                outputs[0][t] = xx * gx[t] + xy * gy[t] + xz * gz[t];
                outputs[1][t] = xy * gx[t] + yy * gy[t] + yz * gz[t];
                outputs[2][t] = xz * gx[t] + yz * gy[t] + zz * gz[t];
            }
        }
        for grid in outputs.iter_mut() {
            self.fft.inverse(grid);
        }

        // Gather, adding identity and depolarization terms.
        let third = 1.0 / 3.0;
        for iz in 0..n {
            for iy in 0..n {
                for ix in 0..n {
                    let cell = self.grid.cell_index(ix, iy, iz);
                    let t = ix + m * (iy + m * iz);
                    let diag = C64::new(1.0, 0.0) + chi[cell] * third;
                    for (comp, grid) in outputs.iter().enumerate() {
                        y[3 * cell + comp] = diag * x[3 * cell + comp] + grid[t];
                    }
                }
            }
        }
    }

    fn apply_cost_estimate(&self) -> f64 {
        let mlen = self.fft.len() as f64;
        let log_n = sum_of_prime_factors(self.fft.len()) as f64;
        6.0 * mlen * log_n + 36.0 * mlen
    }
}

/// Plane-wave right-hand side `E0(x_i) = p exp(i k0 d . x_i)`, stacked
/// cell-major. Direction and polarization must be orthogonal unit vectors.
pub fn incident_plane_wave(
    grid: &VoxelGrid,
    k0: f64,
    direction: [f64; 3],
    polarization: [f64; 3],
) -> Result<Vec<C64>, Error> {
    let d_norm = norm3(direction);
    let p_norm = norm3(polarization);
    if (d_norm - 1.0).abs() > 1e-9 || (p_norm - 1.0).abs() > 1e-9 {
        return Err(Error::NonTransverse);
    }
    let dp: f64 = direction
        .iter()
        .zip(&polarization)
        .map(|(a, b)| a * b)
        .sum();
    if dp.abs() > 1e-12 {
        return Err(Error::NonTransverse);
    }
    let n = grid.n_cells();
    let mut field = vec![C64::new(0.0, 0.0); grid.dim()];
    for iz in 0..n {
        for iy in 0..n {
            for ix in 0..n {
                let x = grid.center(ix, iy, iz);
                let phase =
                    C64::new(0.0, k0 * (direction[0] * x[0] + direction[1] * x[1] + direction[2] * x[2]))
                        .exp();
                let cell = grid.cell_index(ix, iy, iz);
                for comp in 0..3 {
                    field[3 * cell + comp] = phase * polarization[comp];
                }
            }
        }
    }
    Ok(field)
}

/// Maximum unknown count accepted by [`write_dense_csv`].
pub const DENSE_DUMP_MAX_UNKNOWNS: usize = 4000;

/// Writes a dense matrix as CSV, row-major, each entry as a `re,im` pair
/// (one matrix row per line).
pub fn write_dense_csv(matrix: &Array2<C64>, out: &mut dyn Write) -> Result<(), Error> {
    let unknowns = matrix.nrows().max(matrix.ncols());
    if unknowns > DENSE_DUMP_MAX_UNKNOWNS {
        return Err(Error::DumpTooLarge {
            unknowns,
            max: DENSE_DUMP_MAX_UNKNOWNS,
        });
    }
    let mut line = String::new();
    for row in matrix.rows() {
        line.clear();
        for (k, v) in row.iter().enumerate() {
            if k > 0 {
                line.push(',');
            }
            line.push_str(&format!("{:.16e},{:.16e}", v.re, v.im));
        }
        line.push('\n');
        out.write_all(line.as_bytes())
            .map_err(|e| Error::Io(e.to_string()))?;
    }
    Ok(())
}
