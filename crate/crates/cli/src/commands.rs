use std::path::Path;

use serde::Serialize;
use sigma_geom::distorted::{
    segment_profile, simulate_worldline, wobble_statistics, BrokenTube, SimulationConfig, SolverSpec,
};
use sigma_geom::envelopes::{sample_envelope, EnvelopeObject, SampleBox};
use sigma_geom::predicates::{
    check_metric_axioms, degeneracy_classify, is_collinear, is_parallel_same_direction, Axiom, Degeneracy,
    DirectionSearch,
};
use sigma_geom::verify::{verify_euclidean, ConditionResult, SamplingSpec};
use sigma_geom::{squared_length, Distortion, Error, Geometry, Point, Quartic, Skeleton, Vector, WorldFunction};

use crate::args::{
    Cli, Command, EnvelopeArgs, Expect, GeometryArgs, GeometryKind, ObjectKind, PredicateArgs, ProfileArgs, Query,
    SimulateArgs, VerifyArgs,
};
use crate::error::{config, CliError};
use crate::output::{fmt_f64, header, nums, output_root, Artifacts, Num};

pub fn run(cli: Cli) -> Result<(), CliError> {
    let art = Artifacts::new(output_root(cli.out_dir.as_deref()))?;
    match &cli.command {
        Command::VerifyEuclidean(a) => verify(a, &art),
        Command::TubeProfile(a) => tube_profile(a, &art),
        Command::SimulateWorldline(a) => simulate(a, &art),
        Command::Predicates(a) => predicates(a, &art),
        Command::SampleEnvelope(a) => envelope(a, &art),
    }
}

/// Bad inputs are configuration errors; everything else the kernels
/// report is a numerical failure.
fn classify(e: Error) -> CliError {
    match e {
        Error::InvalidParameter(_)
        | Error::InvalidPoint
        | Error::DimensionMismatch { .. }
        | Error::InsufficientSamples { .. } => config(e),
        e => CliError::Numerical(e),
    }
}

fn positive(name: &str, x: f64) -> Result<f64, CliError> {
    if x.is_finite() && x > 0.0 {
        Ok(x)
    } else {
        Err(CliError::Config(format!("{name} must be positive and finite, got {x}")))
    }
}

#[derive(Debug, Serialize)]
struct GeometryInfo {
    kind: &'static str,
    dim: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    c: Option<Num>,
    #[serde(skip_serializing_if = "Option::is_none")]
    d: Option<Num>,
    #[serde(skip_serializing_if = "Option::is_none")]
    sigma0: Option<Num>,
}

fn build_geometry(a: &GeometryArgs, dim_hint: Option<usize>) -> Result<(Box<dyn WorldFunction>, GeometryInfo), CliError> {
    let default_dim = match a.geometry {
        GeometryKind::Euclidean | GeometryKind::Quartic => 3,
        GeometryKind::Minkowski | GeometryKind::Distorted => 4,
    };
    let dim = a.dim.or(dim_hint).unwrap_or(default_dim);
    let mut info = GeometryInfo {
        kind: "",
        dim,
        c: None,
        d: None,
        sigma0: None,
    };
    let g: Box<dyn WorldFunction> = match a.geometry {
        GeometryKind::Euclidean => {
            info.kind = "euclidean";
            Box::new(Geometry::euclidean(dim).map_err(config)?)
        }
        GeometryKind::Minkowski => {
            info.kind = "minkowski";
            info.c = Some(Num(a.c));
            Box::new(Geometry::minkowski(dim, a.c).map_err(config)?)
        }
        GeometryKind::Distorted => {
            info.kind = "distorted";
            info.c = Some(Num(a.c));
            info.d = Some(Num(a.d));
            info.sigma0 = Some(Num(a.sigma0));
            Box::new(Geometry::distorted(dim, a.c, a.d, a.sigma0).map_err(config)?)
        }
        GeometryKind::Quartic => {
            info.kind = "quartic";
            if dim == 0 {
                return Err(CliError::Config("dimension must be positive".into()));
            }
            Box::new(Quartic { dim })
        }
    };
    Ok((g, info))
}

fn read_points(path: &Path) -> Result<Vec<Point>, CliError> {
    let mut rdr = csv::ReaderBuilder::new()
        .has_headers(false)
        .comment(Some(b'#'))
        .trim(csv::Trim::All)
        .from_path(path)
        .map_err(|e| CliError::input(path, e))?;
    let mut out = Vec::new();
    for (i, rec) in rdr.records().enumerate() {
        let rec = rec.map_err(|e| CliError::input(path, e))?;
        let coords = rec
            .iter()
            .map(|f| f.parse::<f64>())
            .collect::<Result<Vec<f64>, _>>()
            .map_err(|e| CliError::input(path, format!("row {}: {e}", i + 1)))?;
        out.push(Point::new(coords).map_err(|e| CliError::input(path, format!("row {}: {e}", i + 1)))?);
    }
    if out.is_empty() {
        return Err(CliError::input(path, "no points"));
    }
    Ok(out)
}

fn coords(p: &Point) -> Vec<Num> {
    nums(p.coords())
}

fn fmt_point(p: &Point) -> String {
    let parts: Vec<String> = p.coords().iter().map(|x| format!("{x}")).collect();
    format!("({})", parts.join(", "))
}

// verify-euclidean

#[derive(Serialize)]
struct ConditionOut {
    name: &'static str,
    passed: bool,
    max_residual: Num,
    witness: Vec<Vec<Num>>,
    values: Vec<Num>,
}

#[derive(Serialize)]
struct SamplingOut {
    points: usize,
    half_width: Num,
    seed: u64,
    tol: Num,
    dimension_tol: Num,
    positivity_tol: Num,
    skeletons: usize,
    probe_grid: usize,
}

#[derive(Serialize)]
struct VerifyOut {
    geometry: GeometryInfo,
    sampling: SamplingOut,
    declared_dimension: usize,
    inferred_dimension: Option<usize>,
    overall: bool,
    failed: Vec<&'static str>,
    conditions: Vec<ConditionOut>,
}

fn condition_out(name: &'static str, c: &ConditionResult) -> ConditionOut {
    ConditionOut {
        name,
        passed: c.passed,
        max_residual: Num(c.max_residual),
        witness: c.witness.iter().map(coords).collect(),
        values: nums(&c.values),
    }
}

fn verify(a: &VerifyArgs, art: &Artifacts) -> Result<(), CliError> {
    let (g, info) = build_geometry(&a.geometry, None)?;
    for (name, x) in [
        ("tol", a.tol),
        ("dimension-tol", a.dimension_tol),
        ("positivity-tol", a.positivity_tol),
    ] {
        positive(name, x)?;
    }
    let n = a.n.unwrap_or(info.dim);
    let spec = SamplingSpec {
        points: a.points,
        half_width: a.half_width,
        seed: a.seed,
        tol: a.tol,
        dimension_tol: a.dimension_tol,
        positivity_tol: a.positivity_tol,
        skeletons: a.skeletons,
        probe_grid: a.probe_grid,
        carrier: None,
    };
    let rep = verify_euclidean(&*g, n, &spec).map_err(classify)?;
    let failed = rep.failed();
    let out = VerifyOut {
        geometry: info,
        sampling: SamplingOut {
            points: a.points,
            half_width: Num(a.half_width),
            seed: a.seed,
            tol: Num(a.tol),
            dimension_tol: Num(a.dimension_tol),
            positivity_tol: Num(a.positivity_tol),
            skeletons: a.skeletons,
            probe_grid: a.probe_grid,
        },
        declared_dimension: n,
        inferred_dimension: rep.inferred_dimension,
        overall: rep.overall,
        failed: failed.clone(),
        conditions: rep.conditions().iter().map(|(name, c)| condition_out(name, c)).collect(),
    };
    let path = art.json("verification.json", &out)?;
    for (name, c) in rep.conditions() {
        let what = if name == "condition_IV" { "min eigenvalue" } else { "max residual" };
        println!(
            "{name}: {} ({what} {})",
            if c.passed { "pass" } else { "fail" },
            fmt_f64(c.max_residual)
        );
    }
    match rep.inferred_dimension {
        Some(k) => println!("inferred dimension: {k}"),
        None => println!("inferred dimension: none"),
    }
    println!("overall: {}", if rep.overall { "pass" } else { "fail" });
    println!("report: {}", path.display());

    let met = match &a.expect {
        Expect::Pass => rep.overall,
        Expect::Fail => !rep.overall,
        Expect::FailExactly(list) => failed == *list,
    };
    if met {
        Ok(())
    } else {
        let got = if failed.is_empty() {
            "all conditions pass".to_string()
        } else {
            format!("failed {}", failed.join(","))
        };
        Err(CliError::Expectation(format!("expected {:?}, {got}", a.expect)))
    }
}

// tube-profile

fn tube_profile(a: &ProfileArgs, art: &Artifacts) -> Result<(), CliError> {
    let map = Distortion::new(a.d, a.sigma0).map_err(config)?;
    positive("mu-d", a.mu_d)?;
    positive("residual-tol", a.residual_tol)?;
    if a.samples < 2 {
        return Err(CliError::Config("samples must be at least 2".into()));
    }
    let spec = SolverSpec {
        residual_tol: a.residual_tol,
        grid: a.grid,
    };
    let taus: Vec<f64> = (0..a.samples).map(|k| k as f64 / (a.samples - 1) as f64).collect();
    let prof = segment_profile(&map, a.mu_d, &taus, &spec).map_err(classify)?;
    let rows = (0..taus.len()).map(|k| {
        vec![
            fmt_f64(prof.tau[k]),
            fmt_f64(prof.r_closed[k]),
            fmt_f64(prof.r_numeric[k]),
        ]
    });
    let path = art.csv("tube_profile.csv", &header(&["tau", "r_closed", "r_numeric"]), rows)?;
    let mid = (0..taus.len())
        .min_by(|&i, &j| (taus[i] - 0.5).abs().total_cmp(&(taus[j] - 0.5).abs()))
        .expect("at least two samples");
    println!(
        "tau {}: r_closed {} r_numeric {} (sqrt(3d/2) = {})",
        taus[mid],
        fmt_f64(prof.r_closed[mid]),
        fmt_f64(prof.r_numeric[mid]),
        fmt_f64((1.5 * a.d).sqrt())
    );
    println!("profile: {}", path.display());
    Ok(())
}

// simulate-worldline

#[derive(Serialize)]
struct SimulationOut {
    d: Num,
    sigma0: Num,
    mu_d: Num,
    c: Num,
    links: usize,
    seed: u64,
    stream: u64,
    n_links: usize,
    mean_cosh: Num,
    min_cosh: Num,
    max_cosh: Num,
    predicted_cosh: Num,
    exact_cosh: Num,
    theta_rms: Num,
    predicted_theta: Num,
    max_residual_parallel: Num,
    max_residual_length: Num,
    final_rapidity: Num,
    endpoint_offset: Num,
}

fn write_chain(art: &Artifacts, tube: &BrokenTube) -> Result<(), CliError> {
    let rows = tube.chain.iter().enumerate().map(|(k, p)| {
        let mut row = vec![k.to_string()];
        row.extend(p.coords().iter().map(|x| fmt_f64(*x)));
        row
    });
    art.csv("worldline.csv", &header(&["k", "t", "x", "y", "z"]), rows)?;
    let rows = tube.joints.iter().enumerate().map(|(k, j)| {
        vec![
            (k + 1).to_string(),
            fmt_f64(j.cosh_theta),
            fmt_f64(j.theta),
            fmt_f64(j.residual_parallel),
            fmt_f64(j.residual_length),
        ]
    });
    art.csv(
        "worldline_joints.csv",
        &header(&["k", "cosh_theta", "theta", "residual_parallel", "residual_length"]),
        rows,
    )?;
    Ok(())
}

fn simulate(a: &SimulateArgs, art: &Artifacts) -> Result<(), CliError> {
    let map = Distortion::new(a.d, a.sigma0).map_err(config)?;
    positive("mu-d", a.mu_d)?;
    positive("c", a.c)?;
    positive("residual-tol", a.residual_tol)?;
    if a.links < 2 {
        return Err(CliError::Config("links must be at least 2".into()));
    }
    let cfg = SimulationConfig {
        mu_d: a.mu_d,
        n_links: a.links,
        seed: a.seed,
        stream: a.stream,
        c: a.c,
        solver: SolverSpec {
            residual_tol: a.residual_tol,
            ..SolverSpec::default()
        },
    };
    let tube = match simulate_worldline(&map, &cfg, None) {
        Ok(t) => t,
        Err(e) => {
            if !e.partial.chain.is_empty() {
                write_chain(art, &e.partial)?;
            }
            return Err(classify(e.error));
        }
    };
    write_chain(art, &tube)?;
    let st = wobble_statistics(&tube, a.d, a.sigma0).map_err(classify)?;
    let out = SimulationOut {
        d: Num(a.d),
        sigma0: Num(a.sigma0),
        mu_d: Num(a.mu_d),
        c: Num(a.c),
        links: a.links,
        seed: a.seed,
        stream: a.stream,
        n_links: st.n_links,
        mean_cosh: Num(st.mean_cosh),
        min_cosh: Num(st.min_cosh),
        max_cosh: Num(st.max_cosh),
        predicted_cosh: Num(st.predicted_cosh),
        exact_cosh: Num(st.exact_cosh),
        theta_rms: Num(st.theta_rms),
        predicted_theta: Num(st.predicted_theta),
        max_residual_parallel: Num(st.max_residual_parallel),
        max_residual_length: Num(st.max_residual_length),
        final_rapidity: Num(st.final_rapidity),
        endpoint_offset: Num(st.endpoint_offset),
    };
    let path = art.json("worldline_stats.json", &out)?;
    println!(
        "{} links: cosh theta {} (small-angle {}), theta rms {} (sqrt(2d)/mu_d = {})",
        st.n_links,
        fmt_f64(st.mean_cosh),
        fmt_f64(st.predicted_cosh),
        fmt_f64(st.theta_rms),
        fmt_f64(st.predicted_theta)
    );
    println!(
        "max residuals: length {} parallel {}",
        fmt_f64(st.max_residual_length),
        fmt_f64(st.max_residual_parallel)
    );
    println!("stats: {}", path.display());
    Ok(())
}

// predicates

#[derive(Serialize)]
struct PredicatesOut<T> {
    query: &'static str,
    geometry: GeometryInfo,
    tol: Num,
    results: Vec<T>,
}

#[derive(Serialize)]
struct RelationOut {
    points: Vec<Vec<Num>>,
    holds: bool,
    residual: Option<Num>,
    #[serde(skip_serializing_if = "Option::is_none")]
    error: Option<String>,
}

#[derive(Serialize)]
struct DegeneracyOut {
    p0: Vec<Num>,
    q: Vec<Num>,
    a: Num,
    solution_count: usize,
    verdict: &'static str,
    witnesses: Vec<Vec<Num>>,
}

#[derive(Serialize)]
struct ViolationOut {
    axiom: &'static str,
    points: Vec<Vec<Num>>,
    residual: Num,
}

#[derive(Serialize)]
struct AxiomsOut {
    verdict: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    negative_sigma: Option<Num>,
    nonnegativity_ok: Option<bool>,
    identity_ok: Option<bool>,
    symmetry_ok: Option<bool>,
    triangle_ok: Option<bool>,
    violation_count: usize,
    violations: Vec<ViolationOut>,
}

fn axiom_name(a: Axiom) -> &'static str {
    match a {
        Axiom::Nonnegativity => "nonnegativity",
        Axiom::Identity => "identity",
        Axiom::Symmetry => "symmetry",
        Axiom::Triangle => "triangle",
    }
}

fn groups(pts: &[Point], k: usize, what: &str) -> Result<(), CliError> {
    if pts.len() % k != 0 {
        return Err(CliError::Config(format!(
            "{what} needs rows in groups of {k}, got {} rows",
            pts.len()
        )));
    }
    Ok(())
}

fn vector(p: &Point, q: &Point) -> Result<Vector, CliError> {
    Vector::new(p.clone(), q.clone()).map_err(config)
}

fn predicates(a: &PredicateArgs, art: &Artifacts) -> Result<(), CliError> {
    let pts = read_points(&a.points_file)?;
    let (g, info) = build_geometry(&a.geometry, Some(pts[0].dim()))?;
    if pts[0].dim() != info.dim {
        return Err(CliError::Config(format!(
            "points have {} labels, geometry has {}",
            pts[0].dim(),
            info.dim
        )));
    }
    positive("tol", a.tol)?;
    let tol = Num(a.tol);
    let path = match a.query {
        Query::Collinear | Query::Parallel => {
            let parallel = a.query == Query::Parallel;
            let (k, name) = if parallel { (4, "parallel") } else { (3, "collinear") };
            groups(&pts, k, name)?;
            let mut results = Vec::new();
            for (i, grp) in pts.chunks(k).enumerate() {
                let rel = if parallel {
                    is_parallel_same_direction(&*g, &vector(&grp[0], &grp[1])?, &vector(&grp[2], &grp[3])?, a.tol)
                } else {
                    is_collinear(&*g, &vector(&grp[0], &grp[1])?, &vector(&grp[0], &grp[2])?, a.tol)
                };
                let out = match rel {
                    Ok(r) => {
                        println!("{name} #{i}: {} (residual {})", r.holds, fmt_f64(r.residual));
                        RelationOut {
                            points: grp.iter().map(coords).collect(),
                            holds: r.holds,
                            residual: Some(Num(r.residual)),
                            error: None,
                        }
                    }
                    Err(e @ Error::SpacelikeVector { .. }) => {
                        println!("{name} #{i}: undefined ({e})");
                        RelationOut {
                            points: grp.iter().map(coords).collect(),
                            holds: false,
                            residual: None,
                            error: Some(e.to_string()),
                        }
                    }
                    Err(e) => return Err(classify(e)),
                };
                results.push(out);
            }
            art.json(
                "predicates.json",
                &PredicatesOut {
                    query: name,
                    geometry: info,
                    tol,
                    results,
                },
            )?
        }
        Query::Degeneracy => {
            groups(&pts, 2, "degeneracy")?;
            let search = DirectionSearch {
                polar: a.polar,
                azimuth: a.azimuth,
                max_radius: a.max_radius,
                distinct: a.distinct,
                tol: a.tol,
            };
            let mut results = Vec::new();
            for (i, grp) in pts.chunks(2).enumerate() {
                let dir = vector(&grp[0], &grp[1])?;
                let radius = match a.radius {
                    Some(r) => positive("radius", r)?,
                    None => {
                        let l2 = squared_length(&*g, &dir).map_err(classify)?;
                        positive("|P0Q|", l2.abs().sqrt())?
                    }
                };
                let v = degeneracy_classify(&*g, &grp[0], &dir, radius, &search).map_err(classify)?;
                let verdict = match v.verdict {
                    Degeneracy::Degenerate => "degenerate",
                    Degeneracy::Nondegenerate => "nondegenerate",
                };
                println!(
                    "degeneracy #{i}: {verdict} ({} solutions at a = {})",
                    v.solution_count,
                    fmt_f64(radius)
                );
                results.push(DegeneracyOut {
                    p0: coords(&grp[0]),
                    q: coords(&grp[1]),
                    a: Num(radius),
                    solution_count: v.solution_count,
                    verdict,
                    witnesses: v.witnesses.iter().map(coords).collect(),
                });
            }
            art.json(
                "predicates.json",
                &PredicatesOut {
                    query: "degeneracy",
                    geometry: info,
                    tol,
                    results,
                },
            )?
        }
        Query::MetricAxioms => {
            let out = match check_metric_axioms(&*g, &pts, a.tol) {
                Ok(rep) => {
                    let verdict = if rep.all_ok() { "metric" } else { "violated" };
                    println!(
                        "metric axioms: {verdict} ({} violations on {} points)",
                        rep.violation_count,
                        pts.len()
                    );
                    for v in rep.violation_witnesses.iter().take(5) {
                        println!(
                            "  {}: {} {} {} residual {}",
                            axiom_name(v.axiom),
                            fmt_point(&v.points[0]),
                            fmt_point(&v.points[1]),
                            fmt_point(&v.points[2]),
                            fmt_f64(v.residual)
                        );
                    }
                    AxiomsOut {
                        verdict,
                        negative_sigma: None,
                        nonnegativity_ok: Some(rep.nonnegativity_ok),
                        identity_ok: Some(rep.identity_ok),
                        symmetry_ok: Some(rep.symmetry_ok),
                        triangle_ok: Some(rep.triangle_ok),
                        violation_count: rep.violation_count,
                        violations: rep
                            .violation_witnesses
                            .iter()
                            .map(|v| ViolationOut {
                                axiom: axiom_name(v.axiom),
                                points: v.points.iter().map(coords).collect(),
                                residual: Num(v.residual),
                            })
                            .collect(),
                    }
                }
                Err(Error::NotMetricCandidate { sigma }) => {
                    println!("metric axioms: not a metric candidate (sigma = {} < 0)", fmt_f64(sigma));
                    AxiomsOut {
                        verdict: "not_metric_candidate",
                        negative_sigma: Some(Num(sigma)),
                        nonnegativity_ok: None,
                        identity_ok: None,
                        symmetry_ok: None,
                        triangle_ok: None,
                        violation_count: 0,
                        violations: Vec::new(),
                    }
                }
                Err(e) => return Err(classify(e)),
            };
            art.json(
                "predicates.json",
                &PredicatesOut {
                    query: "metric-axioms",
                    geometry: info,
                    tol,
                    results: vec![out],
                },
            )?
        }
    };
    println!("report: {}", path.display());
    Ok(())
}

// sample-envelope

fn need_rows(pts: &[Point], n: usize, what: &str) -> Result<(), CliError> {
    if pts.len() != n {
        return Err(CliError::Config(format!("{what} needs exactly {n} points, got {}", pts.len())));
    }
    Ok(())
}

fn envelope_object(a: &EnvelopeArgs, pts: Vec<Point>) -> Result<EnvelopeObject, CliError> {
    let two = |pts: &[Point], what| need_rows(pts, 2, what).map(|_| (pts[0].clone(), pts[1].clone()));
    let obj = match a.object {
        ObjectKind::Sphere => {
            let (c, r) = two(&pts, "sphere")?;
            EnvelopeObject::sphere(c, r)
        }
        ObjectKind::Ellipsoid => {
            let (p, q) = two(&pts, "ellipsoid")?;
            let semi = a.a.ok_or_else(|| CliError::Config("ellipsoid needs --a".into()))?;
            EnvelopeObject::ellipsoid(p, q, semi)
        }
        ObjectKind::Segment => {
            let (p, q) = two(&pts, "segment")?;
            EnvelopeObject::segment(p, q)
        }
        ObjectKind::Tube => {
            let (p, q) = two(&pts, "tube")?;
            EnvelopeObject::tube(p, q)
        }
        ObjectKind::CoordinateTube => {
            if pts.len() < 3 {
                return Err(CliError::Config("coordinate tube needs Q and at least two skeleton points".into()));
            }
            let mut it = pts.into_iter();
            let q = it.next().expect("checked length");
            let sk = Skeleton::new(it.collect()).map_err(config)?;
            EnvelopeObject::coordinate_tube(q, sk)
        }
        ObjectKind::BrokenTube => EnvelopeObject::broken_tube(pts),
    };
    obj.map_err(config)
}

fn envelope(a: &EnvelopeArgs, art: &Artifacts) -> Result<(), CliError> {
    let pts = read_points(&a.points_file)?;
    let (g, info) = build_geometry(&a.geometry, Some(pts[0].dim()))?;
    let obj = envelope_object(a, pts)?;
    if obj.dim() != info.dim {
        return Err(CliError::Config(format!(
            "points have {} labels, geometry has {}",
            obj.dim(),
            info.dim
        )));
    }
    let bounds = match (a.lo.is_empty(), a.hi.is_empty()) {
        (true, true) => {
            let d = if a.geometry.geometry == GeometryKind::Distorted { a.geometry.d } else { 0.0 };
            SampleBox::around(&obj.defining_points(), d).map_err(config)?
        }
        (false, false) => SampleBox::new(a.lo.clone(), a.hi.clone()).map_err(config)?,
        _ => return Err(CliError::Config("give both --lo and --hi, or neither".into())),
    };
    let tol = match a.tol {
        Some(t) => positive("tol", t)?,
        None => obj.default_tol(),
    };
    let cloud = sample_envelope(&*g, &obj, &bounds, a.grid, tol).map_err(classify)?;
    let mut names: Vec<String> = (0..info.dim).map(|i| format!("x{i}")).collect();
    names.push("residual".into());
    let rows = cloud.points.iter().zip(&cloud.residuals).map(|(p, r)| {
        let mut row: Vec<String> = p.coords().iter().map(|x| fmt_f64(*x)).collect();
        row.push(fmt_f64(*r));
        row
    });
    let path = art.csv("envelope.csv", &names, rows)?;
    println!(
        "{} ({} geometry): {} points at grid {} with tol {}",
        obj.kind_name(),
        info.kind,
        cloud.points.len(),
        a.grid,
        fmt_f64(tol)
    );
    println!("samples: {}", path.display());
    Ok(())
}
