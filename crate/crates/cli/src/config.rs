//! JSON configuration schema for the CLI, with defaults matching the
//! reference benchmark setup (ball of radius lambda/30, plane-wave source,
//! relative residual 1e-5).

use std::f64::consts::PI;

use gci_core::geometry::SpectrumRegion;
use gci_core::vsie::PermittivityProfile;
use gci_core::C64;
use serde::{Deserialize, Serialize};

use crate::CliError;

pub fn default_k0() -> f64 {
    2.0 * PI
}

fn default_radius() -> f64 {
    1.0 / 30.0
}

fn default_tol() -> f64 {
    1e-5
}

fn default_max_matvecs() -> usize {
    20_000
}

fn default_margin() -> f64 {
    0.15
}

fn default_band_factor() -> f64 {
    0.15
}

fn default_spectrum_cells() -> usize {
    6
}

fn default_solve_cells() -> usize {
    8
}

/// Largest matrix dimension accepted for dense eigensolves.
pub const MAX_EIG_DIM: usize = 6000;

/// Largest layer length accepted for layered Chebyshev-type schedules; long
/// layers in the natural root ordering are numerically fragile.
pub const MAX_GCI_LAYER: usize = 16;

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum ProfileConfig {
    HomogeneousBall { eps: [f64; 2] },
    LayeredBall {
        eps_core: [f64; 2],
        eps_outer: [f64; 2],
        /// Core radius as a fraction of the ball radius.
        d2_frac: f64,
        /// Ramp-knee radius as a fraction of the ball radius.
        d1_frac: f64,
    },
    /// Cube of side equal to the ball diameter `2 * radius_wavelengths`.
    HomogeneousCube { eps: [f64; 2] },
}

impl ProfileConfig {
    pub fn to_profile(&self, radius: f64) -> PermittivityProfile {
        match *self {
            ProfileConfig::HomogeneousBall { eps } => PermittivityProfile::HomogeneousBall {
                eps: C64::new(eps[0], eps[1]),
                radius,
            },
            ProfileConfig::LayeredBall {
                eps_core,
                eps_outer,
                d2_frac,
                d1_frac,
            } => PermittivityProfile::LayeredBall {
                eps_core: C64::new(eps_core[0], eps_core[1]),
                eps_outer: C64::new(eps_outer[0], eps_outer[1]),
                d2: d2_frac * radius,
                d1: d1_frac * radius,
                radius,
            },
            ProfileConfig::HomogeneousCube { eps } => PermittivityProfile::HomogeneousCube {
                eps: C64::new(eps[0], eps[1]),
                side: 2.0 * radius,
            },
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemConfig {
    pub profile: ProfileConfig,
    #[serde(default = "default_radius")]
    pub radius_wavelengths: f64,
    pub n_cells: usize,
    /// Wavenumber; lengths are in vacuum wavelengths, so 2*pi by default.
    #[serde(default = "default_k0")]
    pub k0: f64,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
#[serde(tag = "method", rename_all = "snake_case", deny_unknown_fields)]
pub enum SolverConfig {
    Gsi,
    Gci { n: usize },
    Gmres { n: usize },
}

impl SolverConfig {
    pub fn label(&self) -> String {
        match self {
            SolverConfig::Gsi => "GSI".into(),
            SolverConfig::Gci { n } => format!("GCI n={n}"),
            SolverConfig::Gmres { n } => format!("GMRES n={n}"),
        }
    }

    pub fn n(&self) -> usize {
        match self {
            SolverConfig::Gsi => 1,
            SolverConfig::Gci { n } | SolverConfig::Gmres { n } => *n,
        }
    }

    pub fn validate(&self) -> Result<(), CliError> {
        match self {
            SolverConfig::Gsi => Ok(()),
            SolverConfig::Gci { n } => {
                if *n == 0 || *n > MAX_GCI_LAYER {
                    Err(CliError::Config(format!(
                        "gci layer length must be in 1..={MAX_GCI_LAYER}, got {n}"
                    )))
                } else {
                    Ok(())
                }
            }
            SolverConfig::Gmres { n } => {
                if *n == 0 {
                    Err(CliError::Config("gmres restart must be >= 1".into()))
                } else {
                    Ok(())
                }
            }
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum RegionConfig {
    Segment { points: [[f64; 2]; 2] },
    Circle { center: [f64; 2], radius: f64 },
    Triangle { points: [[f64; 2]; 3] },
    Polygon { points: Vec<[f64; 2]> },
}

impl RegionConfig {
    pub fn to_region(&self) -> SpectrumRegion {
        let c = |p: [f64; 2]| C64::new(p[0], p[1]);
        match self {
            RegionConfig::Segment { points } => SpectrumRegion::Segment {
                a: c(points[0]),
                b: c(points[1]),
            },
            RegionConfig::Circle { center, radius } => SpectrumRegion::Circle {
                center: c(*center),
                radius: *radius,
            },
            RegionConfig::Triangle { points } => SpectrumRegion::Triangle {
                vertices: [c(points[0]), c(points[1]), c(points[2])],
            },
            RegionConfig::Polygon { points } => SpectrumRegion::Polygon {
                vertices: points.iter().map(|&p| c(p)).collect(),
            },
        }
    }

    pub fn from_region(region: &SpectrumRegion) -> Self {
        let p = |z: C64| [z.re, z.im];
        match region {
            SpectrumRegion::Point(z) => RegionConfig::Polygon { points: vec![p(*z)] },
            SpectrumRegion::Segment { a, b } => RegionConfig::Segment {
                points: [p(*a), p(*b)],
            },
            SpectrumRegion::Circle { center, radius } => RegionConfig::Circle {
                center: p(*center),
                radius: *radius,
            },
            SpectrumRegion::Triangle { vertices } => RegionConfig::Triangle {
                points: [p(vertices[0]), p(vertices[1]), p(vertices[2])],
            },
            SpectrumRegion::Rectangle { re, im } => RegionConfig::Polygon {
                points: vec![
                    [re[0], im[0]],
                    [re[1], im[0]],
                    [re[1], im[1]],
                    [re[0], im[1]],
                ],
            },
            SpectrumRegion::Polygon { vertices } => RegionConfig::Polygon {
                points: vertices.iter().map(|&z| p(z)).collect(),
            },
        }
    }
}

/// Configuration of the `solve` command: one problem, several solvers.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SolveExperiment {
    pub problem: ProblemConfig,
    pub solvers: Vec<SolverConfig>,
    /// Explicit spectrum region overriding the profile-derived one.
    #[serde(default)]
    pub region: Option<RegionConfig>,
    /// Dilation factor applied to the auto-derived region about (1, 0).
    #[serde(default = "default_margin")]
    pub region_margin: f64,
    #[serde(default = "default_tol")]
    pub tol: f64,
    #[serde(default = "default_max_matvecs")]
    pub max_matvecs: usize,
    /// Fixes any randomized choice; the reference pipeline is deterministic.
    #[serde(default)]
    pub seed: u64,
}

impl Default for SolveExperiment {
    fn default() -> Self {
        SolveExperiment {
            problem: ProblemConfig {
                profile: ProfileConfig::HomogeneousBall { eps: [2.0, 0.0] },
                radius_wavelengths: default_radius(),
                n_cells: default_solve_cells(),
                k0: default_k0(),
            },
            solvers: vec![
                SolverConfig::Gsi,
                SolverConfig::Gci { n: 5 },
                SolverConfig::Gci { n: 10 },
                SolverConfig::Gmres { n: 10 },
            ],
            region: None,
            region_margin: default_margin(),
            tol: default_tol(),
            max_matvecs: default_max_matvecs(),
            seed: 0,
        }
    }
}

impl SolveExperiment {
    pub fn validate(&self) -> Result<(), CliError> {
        if self.solvers.is_empty() {
            return Err(CliError::Config("at least one solver required".into()));
        }
        for s in &self.solvers {
            s.validate()?;
        }
        if !(self.tol > 0.0) || self.max_matvecs == 0 {
            return Err(CliError::Config(
                "tol must be positive and max_matvecs >= 1".into(),
            ));
        }
        if self.problem.n_cells < 2 {
            return Err(CliError::Config("n_cells must be >= 2".into()));
        }
        Ok(())
    }
}

/// Configuration of the `spectrum` command.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpectrumExperiment {
    pub problem: ProblemConfig,
    #[serde(default)]
    pub region: Option<RegionConfig>,
    /// Absolute containment band; `band_factor * diameter(region)` when
    /// absent.
    #[serde(default)]
    pub band: Option<f64>,
    #[serde(default = "default_band_factor")]
    pub band_factor: f64,
    #[serde(default)]
    pub seed: u64,
}

impl Default for SpectrumExperiment {
    fn default() -> Self {
        SpectrumExperiment {
            problem: ProblemConfig {
                profile: ProfileConfig::HomogeneousBall { eps: [2.0, 0.0] },
                radius_wavelengths: default_radius(),
                n_cells: default_spectrum_cells(),
                k0: default_k0(),
            },
            region: None,
            band: None,
            band_factor: default_band_factor(),
            seed: 0,
        }
    }
}

impl SpectrumExperiment {
    pub fn validate(&self) -> Result<(), CliError> {
        let dim = 3 * self.problem.n_cells.pow(3);
        if dim > MAX_EIG_DIM {
            return Err(CliError::Config(format!(
                "dense eigensolve limited to {MAX_EIG_DIM} unknowns, grid has {dim}"
            )));
        }
        if self.problem.n_cells < 2 {
            return Err(CliError::Config("n_cells must be >= 2".into()));
        }
        Ok(())
    }
}

/// One row of a benchmark matrix: a labeled permittivity profile.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BenchCase {
    pub label: String,
    pub profile: ProfileConfig,
}

/// Configuration of the `bench` command: cases x solvers.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BenchExperiment {
    #[serde(default = "default_radius")]
    pub radius_wavelengths: f64,
    #[serde(default = "default_solve_cells")]
    pub n_cells: usize,
    #[serde(default = "default_k0")]
    pub k0: f64,
    pub cases: Vec<BenchCase>,
    pub solvers: Vec<SolverConfig>,
    #[serde(default = "default_margin")]
    pub region_margin: f64,
    #[serde(default = "default_tol")]
    pub tol: f64,
    #[serde(default = "default_max_matvecs")]
    pub max_matvecs: usize,
    #[serde(default)]
    pub seed: u64,
}

impl Default for BenchExperiment {
    fn default() -> Self {
        // The reference comparison grid: seven permittivity rows by six
        // solver columns at radius lambda/30.
        let cases = vec![
            BenchCase {
                label: "eps=2".into(),
                profile: ProfileConfig::HomogeneousBall { eps: [2.0, 0.0] },
            },
            BenchCase {
                label: "eps=8".into(),
                profile: ProfileConfig::HomogeneousBall { eps: [8.0, 0.0] },
            },
            BenchCase {
                label: "eps=15".into(),
                profile: ProfileConfig::HomogeneousBall { eps: [15.0, 0.0] },
            },
            BenchCase {
                label: "eps=20".into(),
                profile: ProfileConfig::HomogeneousBall { eps: [20.0, 0.0] },
            },
            BenchCase {
                label: "eps=12+4i".into(),
                profile: ProfileConfig::HomogeneousBall { eps: [12.0, 4.0] },
            },
            BenchCase {
                label: "eps=15+10i".into(),
                profile: ProfileConfig::HomogeneousBall { eps: [15.0, 10.0] },
            },
            BenchCase {
                label: "layered eps2=2+2i eps1=3+i".into(),
                profile: ProfileConfig::LayeredBall {
                    eps_core: [2.0, 2.0],
                    eps_outer: [3.0, 1.0],
                    d2_frac: 0.5,
                    d1_frac: 2.0 / 3.0,
                },
            },
        ];
        let solvers = vec![
            SolverConfig::Gsi,
            SolverConfig::Gci { n: 5 },
            SolverConfig::Gci { n: 10 },
            SolverConfig::Gmres { n: 2 },
            SolverConfig::Gmres { n: 5 },
            SolverConfig::Gmres { n: 10 },
        ];
        BenchExperiment {
            radius_wavelengths: default_radius(),
            n_cells: default_solve_cells(),
            k0: default_k0(),
            cases,
            solvers,
            region_margin: default_margin(),
            tol: default_tol(),
            max_matvecs: default_max_matvecs(),
            seed: 0,
        }
    }
}

impl BenchExperiment {
    pub fn validate(&self) -> Result<(), CliError> {
        if self.cases.is_empty() || self.solvers.is_empty() {
            return Err(CliError::Config("cases and solvers must be nonempty".into()));
        }
        for s in &self.solvers {
            s.validate()?;
        }
        if !(self.tol > 0.0) || self.max_matvecs == 0 || self.n_cells < 2 {
            return Err(CliError::Config("invalid tol/max_matvecs/n_cells".into()));
        }
        Ok(())
    }

    pub fn solve_experiment(&self, case: &BenchCase) -> SolveExperiment {
        SolveExperiment {
            problem: ProblemConfig {
                profile: case.profile.clone(),
                radius_wavelengths: self.radius_wavelengths,
                n_cells: self.n_cells,
                k0: self.k0,
            },
            solvers: self.solvers.clone(),
            region: None,
            region_margin: self.region_margin,
            tol: self.tol,
            max_matvecs: self.max_matvecs,
            seed: self.seed,
        }
    }
}

/// Parses `"re,im"` into a complex number.
pub fn parse_complex(text: &str) -> Result<C64, CliError> {
    let parts: Vec<&str> = text.split(',').collect();
    if parts.len() != 2 {
        return Err(CliError::Config(format!(
            "expected 're,im', got '{text}'"
        )));
    }
    let re: f64 = parts[0]
        .trim()
        .parse()
        .map_err(|_| CliError::Config(format!("bad real part in '{text}'")))?;
    let im: f64 = parts[1]
        .trim()
        .parse()
        .map_err(|_| CliError::Config(format!("bad imaginary part in '{text}'")))?;
    Ok(C64::new(re, im))
}

/// Parses a colon-separated point list `"re,im:re,im:..."`.
pub fn parse_points(text: &str, sep: char) -> Result<Vec<C64>, CliError> {
    text.split(sep).map(parse_complex).collect()
}
