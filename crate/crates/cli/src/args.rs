use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "sigma-geom", version, about = "Experiments with world-function geometry")]
pub struct Cli {
    /// Flat `key=value` file; keys are long flag names, flags given on the
    /// command line win.
    #[arg(long, global = true, value_name = "FILE")]
    pub config: Option<PathBuf>,

    /// Output directory (default: $SIGMA_GEOM_OUT, else the working directory).
    #[arg(long, global = true, value_name = "DIR")]
    pub out_dir: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check conditions I–V of the Euclidean characterisation on a random sample.
    #[command(args_override_self = true)]
    VerifyEuclidean(VerifyArgs),
    /// Closed-form and envelope radius of a distorted segment along τ.
    #[command(args_override_self = true)]
    TubeProfile(ProfileArgs),
    /// Grow a stochastic world line in distorted space-time.
    #[command(args_override_self = true)]
    SimulateWorldline(SimulateArgs),
    /// Collinearity, parallelism, degeneracy or metric-axiom queries on a points file.
    #[command(args_override_self = true)]
    Predicates(PredicateArgs),
    /// Sample the zero set of an envelope object inside a box.
    #[command(args_override_self = true)]
    SampleEnvelope(EnvelopeArgs),
}

pub const COMMANDS: [&str; 5] = [
    "verify-euclidean",
    "tube-profile",
    "simulate-worldline",
    "predicates",
    "sample-envelope",
];

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GeometryKind {
    Euclidean,
    Minkowski,
    Distorted,
    /// σ = ½|x − y|⁴, a symmetric non-metric test geometry.
    Quartic,
}

#[derive(Debug, Clone, Args)]
pub struct GeometryArgs {
    #[arg(long, value_enum, default_value_t = GeometryKind::Euclidean)]
    pub geometry: GeometryKind,
    /// Number of chart labels (default: from the points file, else 3 for
    /// Euclidean/quartic and 4 for space-time).
    #[arg(long)]
    pub dim: Option<usize>,
    /// Speed of light.
    #[arg(long, default_value_t = 1.0)]
    pub c: f64,
    /// Distortion d (length²).
    #[arg(long, default_value_t = 0.01)]
    pub d: f64,
    /// Distortion threshold σ0 (length²).
    #[arg(long, default_value_t = 0.001)]
    pub sigma0: f64,
}

/// Which verdict `verify-euclidean` should produce.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expect {
    Pass,
    /// Any failure.
    Fail,
    /// Exactly these conditions fail.
    FailExactly(Vec<&'static str>),
}

const ROMAN: [&str; 5] = ["I", "II", "III", "IV", "V"];

pub fn parse_expect(s: &str) -> Result<Expect, String> {
    match s {
        "pass" => return Ok(Expect::Pass),
        "fail" => return Ok(Expect::Fail),
        _ => {}
    }
    let list = s
        .strip_prefix("fail-")
        .ok_or_else(|| format!("expected pass, fail or fail-<conditions>, got {s:?}"))?;
    let mut out = Vec::new();
    for part in list.split([',', '+']) {
        let name = ROMAN
            .iter()
            .find(|r| r.eq_ignore_ascii_case(part))
            .ok_or_else(|| format!("unknown condition {part:?} (use I, II, III, IV, V)"))?;
        if !out.contains(name) {
            out.push(*name);
        }
    }
    out.sort_by_key(|n| ROMAN.iter().position(|r| r == n));
    Ok(Expect::FailExactly(out))
}

#[derive(Debug, Clone, Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub geometry: GeometryArgs,
    /// Dimension to test for (default: the chart dimension).
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long, default_value_t = 200)]
    pub points: usize,
    /// Sample points are drawn from [−w, w]^dim.
    #[arg(long, default_value_t = 10.0)]
    pub half_width: f64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 1e-9)]
    pub tol: f64,
    #[arg(long, default_value_t = 1e-8)]
    pub dimension_tol: f64,
    #[arg(long, default_value_t = 1e-10)]
    pub positivity_tol: f64,
    #[arg(long, default_value_t = 20)]
    pub skeletons: usize,
    #[arg(long, default_value_t = 3)]
    pub probe_grid: usize,
    /// `pass`, `fail`, or `fail-<list>` (e.g. `fail-IV`, `fail-II,III`) for
    /// exactly that set of failed conditions.
    #[arg(long, value_parser = parse_expect, default_value = "pass")]
    pub expect: Expect,
}

#[derive(Debug, Clone, Args)]
pub struct ProfileArgs {
    #[arg(long, default_value_t = 0.01)]
    pub d: f64,
    #[arg(long, default_value_t = 0.001)]
    pub sigma0: f64,
    /// Distorted length of the segment.
    #[arg(long, default_value_t = 1.0)]
    pub mu_d: f64,
    /// Radial scan nodes of the envelope search.
    #[arg(long, default_value_t = 128)]
    pub grid: usize,
    /// Number of τ values, evenly spaced on [0, 1].
    #[arg(long, default_value_t = 21)]
    pub samples: usize,
    #[arg(long, default_value_t = 1e-12)]
    pub residual_tol: f64,
}

#[derive(Debug, Clone, Args)]
pub struct SimulateArgs {
    #[arg(long, default_value_t = 0.005)]
    pub d: f64,
    #[arg(long, default_value_t = 0.0005)]
    pub sigma0: f64,
    #[arg(long, default_value_t = 1.0)]
    pub mu_d: f64,
    #[arg(long, default_value_t = 1000)]
    pub links: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 0)]
    pub stream: u64,
    #[arg(long, default_value_t = 1.0)]
    pub c: f64,
    #[arg(long, default_value_t = 1e-12)]
    pub residual_tol: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Query {
    /// Rows in threes: P0, Q, R.
    Collinear,
    /// Rows in fours: start and end of v, start and end of w.
    Parallel,
    /// Rows in pairs: P0 and a point Q fixing the direction.
    Degeneracy,
    /// All rows form one sample.
    MetricAxioms,
}

#[derive(Debug, Clone, Args)]
pub struct PredicateArgs {
    #[command(flatten)]
    pub geometry: GeometryArgs,
    #[arg(long, value_enum)]
    pub query: Query,
    /// CSV, one point per row.
    #[arg(long, value_name = "FILE")]
    pub points_file: PathBuf,
    #[arg(long, default_value_t = 1e-9)]
    pub tol: f64,
    /// Radius a of the degeneracy search (default: |P0Q|).
    #[arg(long)]
    pub radius: Option<f64>,
    #[arg(long, default_value_t = 12)]
    pub polar: usize,
    #[arg(long, default_value_t = 24)]
    pub azimuth: usize,
    #[arg(long, default_value_t = 1e3)]
    pub max_radius: f64,
    /// Solutions closer than this times a are one solution.
    #[arg(long, default_value_t = 1e-4)]
    pub distinct: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ObjectKind {
    /// Rows: center, a point on the sphere.
    Sphere,
    /// Rows: the two foci; needs --a.
    Ellipsoid,
    /// Rows: the two end points.
    Segment,
    /// Rows: P0, Q.
    Tube,
    /// Rows: Q, then the skeleton P0..Pn.
    CoordinateTube,
    /// Rows: the chain.
    BrokenTube,
}

#[derive(Debug, Clone, Args)]
pub struct EnvelopeArgs {
    #[command(flatten)]
    pub geometry: GeometryArgs,
    #[arg(long, value_enum)]
    pub object: ObjectKind,
    #[arg(long, value_name = "FILE")]
    pub points_file: PathBuf,
    /// Semi-axis of the ellipsoid.
    #[arg(long)]
    pub a: Option<f64>,
    #[arg(long, default_value_t = 64)]
    pub grid: usize,
    /// Membership tolerance (default: scaled to the object's size).
    #[arg(long)]
    pub tol: Option<f64>,
    /// Lower box corner, comma separated (default: around the defining points).
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub lo: Vec<f64>,
    /// Upper box corner, comma separated.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub hi: Vec<f64>,
}
