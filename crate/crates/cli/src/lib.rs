//! Batch driver for the fraclag verification suites.
//!
//! Every command produces one JSON value. CSV output is the same value
//! flattened to dotted column paths, with numbers printed by the same
//! formatter, so the two formats carry identical content.

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use fraclag_core::dunkl::{dh_hardy_verdict, DunklParams, HHarmonicDecomposition, ModeSpec};
use fraclag_core::hardy::{
    connecting_check, convolution_identity_check, eigen_identity_check, fundamental_h,
    fundamental_series_check, fundamental_solution, hardy_verdict, weak_delta_check, weight,
    weight_function, weight_ratio, HardyOptions, Verdict,
};
use fraclag_core::laguerre::{
    synthesize, LaguerreParams, RadialFunction, Smoothness, SpectralVector, Support,
};
use fraclag_core::semigroup::{
    e_sigma, e_sigma_integral, multiplier, numerical_identity_check, pure_multiplier, FracParams,
};
use fraclag_core::Error;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

pub mod grid;

use grid::Grid;

#[derive(Debug, Parser)]
#[command(name = "fraclag", version, about = "Fractional Laguerre Hardy inequality checks")]
#[command(allow_negative_numbers = true)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,
    /// Quadrature tolerance, overriding the per-suite default
    #[arg(long, global = true)]
    pub tol: Option<f64>,
    /// Write the report here instead of stdout
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Coefficient and integral identities at one (α, σ, δ)
    VerifyIdentities(Point),
    /// Hardy chain for a radial profile
    HardyLaguerre(HardyArgs),
    /// Hardy chain for an h-harmonic decomposition
    HardyDunklHermite(DunklArgs),
    /// Closed-form G against its coefficients, plus the weak delta check
    FundamentalSolution(FundArgs),
    /// Grid over (α, σ, δ), results ordered by parameter tuple
    Sweep(SweepArgs),
}

#[derive(Debug, Args)]
pub struct Point {
    #[arg(long, allow_hyphen_values = true)]
    pub alpha: f64,
    #[arg(long, allow_hyphen_values = true)]
    pub sigma: f64,
    #[arg(long, allow_hyphen_values = true, default_value_t = 1.0)]
    pub delta: f64,
    /// Coefficients compared in the spectral identities
    #[arg(long, default_value_t = 21)]
    pub terms: usize,
}

#[derive(Debug, Args)]
pub struct HardyArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub alpha: f64,
    #[arg(long, allow_hyphen_values = true)]
    pub sigma: f64,
    #[arg(long, allow_hyphen_values = true, default_value_t = 1.0)]
    pub delta: f64,
    /// Profile: bump:a,b | gaussian | schwartz:width,p0,... | laguerre:n | weight:s
    #[arg(long = "f")]
    pub f: String,
    #[command(flatten)]
    pub hardy: HardyFlags,
}

#[derive(Debug, Clone, Args)]
pub struct HardyFlags {
    /// Spectral truncation N
    #[arg(long, default_value_t = 2000)]
    pub terms: usize,
    /// Also evaluate the ground-state double integral (compact profiles)
    #[arg(long)]
    pub double_integral: bool,
    #[arg(long, default_value_t = 1e-4)]
    pub double_tol: f64,
}

#[derive(Debug, Args)]
pub struct DunklArgs {
    #[arg(long)]
    pub d: usize,
    #[arg(long, allow_hyphen_values = true)]
    pub gamma: f64,
    #[arg(long, allow_hyphen_values = true)]
    pub sigma: f64,
    #[arg(long, allow_hyphen_values = true, default_value_t = 1.0)]
    pub delta: f64,
    /// JSON list of {m, j, profile_kind, profile_params}; a path, or inline JSON
    #[arg(long)]
    pub modes: String,
    #[command(flatten)]
    pub hardy: HardyFlags,
}

#[derive(Debug, Args)]
pub struct FundArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub alpha: f64,
    #[arg(long, allow_hyphen_values = true)]
    pub sigma: f64,
    /// Radii for the (r, G, H) table
    #[arg(long, default_value = "0.25:3:12")]
    pub r: String,
    /// Coefficients projected out of G
    #[arg(long, default_value_t = 6)]
    pub terms: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SweepKind {
    Hardy,
    Identities,
    WeightRatio,
    Multiplier,
    Fundamental,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    #[arg(long, value_enum, default_value_t = SweepKind::Hardy)]
    pub kind: SweepKind,
    /// Grid spec: value, comma list, or lo:hi:count
    #[arg(long, allow_hyphen_values = true)]
    pub alpha: String,
    #[arg(long, allow_hyphen_values = true)]
    pub sigma: String,
    #[arg(long, allow_hyphen_values = true, default_value = "1")]
    pub delta: String,
    /// Profile for the hardy sweep
    #[arg(long = "f", default_value = "bump:0.5,2.5")]
    pub f: String,
    /// Abscissae for weight-ratio and fundamental sweeps
    #[arg(long, default_value = "0.25:3:12")]
    pub r: String,
    /// Largest n for the multiplier sweep
    #[arg(long, default_value_t = 20)]
    pub n_max: usize,
    /// Coefficients compared by the identities sweep
    #[arg(long, default_value_t = 21)]
    pub identity_terms: usize,
    #[command(flatten)]
    pub hardy: HardyFlags,
}

/// Outcome severity, ordered so that the worst one wins.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    AccuracyDegraded,
    Fail,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Pass => 0,
            Status::AccuracyDegraded => 2,
            Status::Fail => 1,
        }
    }

    fn of_verdict(v: Verdict) -> Self {
        match v {
            Verdict::Pass => Status::Pass,
            Verdict::AccuracyDegraded => Status::AccuracyDegraded,
            Verdict::Fail => Status::Fail,
        }
    }

    fn of_error(e: &Error) -> Self {
        if e.is_accuracy() {
            Status::AccuracyDegraded
        } else {
            Status::Fail
        }
    }
}

#[derive(Debug)]
pub struct Outcome {
    pub status: Status,
    pub report: Value,
}

/// Rejected before any computation; always exit 1.
#[derive(Debug)]
pub struct ConfigError(pub String);

impl std::fmt::Display for ConfigError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<Error> for ConfigError {
    fn from(e: Error) -> Self {
        ConfigError(e.to_string())
    }
}

pub const THREADS_ENV: &str = "FRACLAG_THREADS";

/// Worker count from FRACLAG_THREADS, if set.
pub fn thread_cap() -> Result<Option<usize>, ConfigError> {
    match std::env::var(THREADS_ENV) {
        Err(_) => Ok(None),
        Ok(s) => match s.trim().parse::<usize>() {
            Ok(n) if n >= 1 => Ok(Some(n)),
            _ => Err(ConfigError(format!(
                "{THREADS_ENV} must be a positive integer (got {s:?})"
            ))),
        },
    }
}

fn check_tol(tol: f64) -> Result<f64, ConfigError> {
    if tol > 0.0 && tol < 1.0 {
        Ok(tol)
    } else {
        Err(ConfigError(format!("invalid parameter: 0 < tol < 1 violated (tol = {tol})")))
    }
}

fn check_terms(n: usize) -> Result<usize, ConfigError> {
    if n >= 1 {
        Ok(n)
    } else {
        Err(ConfigError("invalid parameter: N ≥ 1 violated (terms = 0)".into()))
    }
}

fn triple(alpha: f64, sigma: f64, delta: f64) -> Result<(LaguerreParams<f64>, FracParams<f64>), ConfigError> {
    Ok((LaguerreParams::new(alpha)?, FracParams::new(sigma, delta)?))
}

fn hardy_options(h: &HardyFlags, tol: Option<f64>) -> Result<HardyOptions<f64>, ConfigError> {
    let mut o = HardyOptions {
        terms: check_terms(h.terms)?,
        double_integral: h.double_integral,
        double_tol: check_tol(h.double_tol)?,
        ..HardyOptions::default()
    };
    if let Some(t) = tol {
        o.tol = t;
    }
    Ok(o)
}

/// Parses a radial profile spec at order α and scale δ.
pub fn parse_profile(
    spec: &str,
    params: &LaguerreParams<f64>,
    delta: f64,
) -> Result<RadialFunction<f64>, ConfigError> {
    let (kind, rest) = spec.split_once(':').unwrap_or((spec, ""));
    let nums: Vec<f64> = if rest.is_empty() {
        Vec::new()
    } else {
        rest.split(',')
            .map(|x| {
                x.trim()
                    .parse::<f64>()
                    .map_err(|_| ConfigError(format!("profile {spec:?}: {x:?} is not a number")))
            })
            .collect::<Result<_, _>>()?
    };
    let arity = |n: usize| {
        if nums.len() == n {
            Ok(())
        } else {
            Err(ConfigError(format!("profile {kind} takes {n} parameters, got {}", nums.len())))
        }
    };
    Ok(match kind {
        "bump" => {
            arity(2)?;
            RadialFunction::bump(nums[0], nums[1])?
        }
        "gaussian" => {
            arity(0)?;
            RadialFunction::gaussian()
        }
        "schwartz" => {
            if nums.len() < 2 {
                return Err(ConfigError("profile schwartz takes width,p0,...".into()));
            }
            RadialFunction::schwartz_like(nums[1..].to_vec(), nums[0])?
        }
        "laguerre" => {
            arity(1)?;
            let n = nums[0];
            if !(n >= 0.0 && n.fract() == 0.0 && n < 1e6) {
                return Err(ConfigError(format!("profile laguerre: index {n} is not a count")));
            }
            let n = n as usize;
            let v = SpectralVector::unit(*params, n, n + 1);
            RadialFunction::from_fn(
                format!("laguerre:{n}"),
                Smoothness::SchwartzLike,
                Support::Unbounded,
                move |r| synthesize(&v, r),
            )
        }
        "weight" => {
            arity(1)?;
            weight_function(params, nums[0], delta)?
        }
        _ => {
            return Err(ConfigError(format!(
                "unknown profile {kind:?}; expected bump, gaussian, schwartz, laguerre or weight"
            )))
        }
    })
}

fn read_modes(arg: &str) -> Result<Vec<ModeSpec>, ConfigError> {
    let text = if arg.trim_start().starts_with('[') {
        arg.to_string()
    } else {
        std::fs::read_to_string(arg).map_err(|e| ConfigError(format!("cannot read {arg}: {e}")))?
    };
    serde_json::from_str(&text).map_err(|e| ConfigError(format!("mode list: {e}")))
}

/// Runs one parsed command. Configuration problems come back as `Err`;
/// numerical trouble is folded into the report and its status.
pub fn run(cli: &Cli) -> Result<Outcome, ConfigError> {
    let tol = cli.tol.map(check_tol).transpose()?;
    let pool = {
        let mut b = rayon::ThreadPoolBuilder::new();
        if let Some(n) = thread_cap()? {
            b = b.num_threads(n);
        }
        b.build().map_err(|e| ConfigError(format!("thread pool: {e}")))?
    };
    match &cli.command {
        Command::VerifyIdentities(p) => {
            let (lp, fp) = triple(p.alpha, p.sigma, p.delta)?;
            check_terms(p.terms)?;
            Ok(pool.install(|| identities(&lp, &fp, p.terms, tol)))
        }
        Command::HardyLaguerre(h) => {
            let (lp, fp) = triple(h.alpha, h.sigma, h.delta)?;
            let f = parse_profile(&h.f, &lp, h.delta)?;
            let opts = hardy_options(&h.hardy, tol)?;
            Ok(single(hardy_verdict(&f, &lp, &fp, &opts).map(|r| {
                let s = Status::of_verdict(r.verdict);
                (to_value(&r), s)
            }), params_json(h.alpha, h.sigma, h.delta)))
        }
        Command::HardyDunklHermite(a) => {
            let dk = DunklParams::new(a.d, a.gamma)?;
            let fp = FracParams::new(a.sigma, a.delta)?;
            let specs = read_modes(&a.modes)?;
            if specs.is_empty() {
                return Err(ConfigError("mode list must be nonempty".into()));
            }
            let dec = HHarmonicDecomposition::from_specs(dk, &specs)?;
            let opts = hardy_options(&a.hardy, tol)?;
            let params = json!({"d": a.d, "gamma": a.gamma, "sigma": a.sigma, "delta": a.delta});
            Ok(pool.install(|| {
                single(dh_hardy_verdict(&dec, &fp, &opts).map(|r| {
                    let s = Status::of_verdict(r.report.verdict);
                    (to_value(&r), s)
                }), params)
            }))
        }
        Command::FundamentalSolution(a) => {
            let lp = LaguerreParams::new(a.alpha)?;
            FracParams::new(a.sigma, 1.0)?;
            check_terms(a.terms)?;
            let radii = Grid::parse(&a.r, "r")?.positive("r")?;
            Ok(fundamental(&lp, a.sigma, &radii, a.terms, tol))
        }
        Command::Sweep(a) => {
            let alphas = Grid::parse(&a.alpha, "alpha")?;
            let sigmas = Grid::parse(&a.sigma, "sigma")?;
            let deltas = Grid::parse(&a.delta, "delta")?;
            let mut tuples = Vec::new();
            for &x in alphas.values() {
                for &s in sigmas.values() {
                    for &d in deltas.values() {
                        triple(x, s, d)?;
                        tuples.push((x, s, d));
                    }
                }
            }
            check_terms(a.identity_terms)?;
            let opts = hardy_options(&a.hardy, tol)?;
            let radii = Grid::parse(&a.r, "r")?.positive("r")?;
            if a.kind == SweepKind::Hardy {
                // validated once per order since weight profiles depend on (α, δ)
                for &(x, _, d) in &tuples {
                    parse_profile(&a.f, &LaguerreParams::new(x)?, d)?;
                }
            }
            Ok(pool.install(|| sweep(a, &tuples, &radii, &opts, tol)))
        }
    }
}

fn to_value<S: Serialize>(s: &S) -> Value {
    serde_json::to_value(s).expect("reports serialize")
}

fn params_json(alpha: f64, sigma: f64, delta: f64) -> Value {
    json!({"alpha": alpha, "sigma": sigma, "delta": delta})
}

fn error_record(params: Value, e: &Error) -> Value {
    json!({"params": params, "verdict": Status::of_error(e), "error": e.to_string()})
}

fn single(r: fraclag_core::Result<(Value, Status)>, params: Value) -> Outcome {
    match r {
        Ok((report, status)) => Outcome { status, report },
        Err(e) => Outcome {
            status: Status::of_error(&e),
            report: error_record(params, &e),
        },
    }
}

#[derive(Debug, Clone, Serialize)]
struct Check {
    name: &'static str,
    max_err: Option<f64>,
    tolerance: f64,
    pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    error: Option<String>,
}

fn check(
    name: &'static str,
    tolerance: f64,
    r: fraclag_core::Result<f64>,
    worst: &mut Status,
) -> Check {
    match r {
        Ok(e) => {
            let pass = e <= tolerance;
            if !pass {
                *worst = (*worst).max(Status::Fail);
            }
            Check {
                name,
                max_err: Some(e),
                tolerance,
                pass,
                error: None,
            }
        }
        Err(e) => {
            *worst = (*worst).max(Status::of_error(&e));
            Check {
                name,
                max_err: None,
                tolerance,
                pass: false,
                error: Some(e.to_string()),
            }
        }
    }
}

fn rel(a: f64, b: f64) -> f64 {
    ((a - b) / b).abs()
}

fn identities(lp: &LaguerreParams<f64>, fp: &FracParams<f64>, terms: usize, tol: Option<f64>) -> Outcome {
    let s = fp.sigma();
    let q = tol.unwrap_or(1e-10);
    let jobs: Vec<(&'static str, f64)> = vec![
        ("subordination_identity", 1e-8),
        ("e_sigma_closed_form", 1e-9),
        ("connecting_relation", 1e-9),
        ("eigen_identity", 1e-9),
        ("fundamental_series", 1e-6),
        ("weak_delta", 1e-5),
        ("convolution_identity", 1e-6),
    ];
    let errs: Vec<fraclag_core::Result<f64>> = jobs
        .par_iter()
        .map(|&(name, _)| match name {
            "subordination_identity" => (0..5).try_fold(0.0f64, |m, n| {
                let c = numerical_identity_check(s, lp.eigenvalue(n), q)?;
                Ok(m.max(rel(c.rhs, c.lhs)))
            }),
            "e_sigma_closed_form" => Ok(rel(e_sigma_integral(s, q)?.value, e_sigma(s)?)),
            "connecting_relation" => Ok(connecting_check(lp, fp, terms)?.max_rel_err),
            "eigen_identity" => Ok(eigen_identity_check(lp, fp, terms)?.max_rel_err),
            "fundamental_series" => Ok(fundamental_series_check(lp, s, terms.min(6), q)?.max_rel_err),
            "weak_delta" => {
                let w = weak_delta_check(&RadialFunction::gaussian(), lp, s, 40, q)?;
                Ok(rel(w.pairing, w.f0))
            }
            _ => [0.5, 1.0, 2.0].iter().try_fold(0.0f64, |m, &r| {
                let c = convolution_identity_check(lp, fp, r, q.max(1e-9))?;
                Ok(m.max(rel(c.lhs, c.rhs)))
            }),
        })
        .collect();
    let mut worst = Status::Pass;
    let checks: Vec<Check> = jobs
        .iter()
        .zip(errs)
        .map(|(&(name, t), r)| check(name, t, r, &mut worst))
        .collect();
    Outcome {
        status: worst,
        report: json!({
            "params": params_json(lp.alpha(), s, fp.delta()),
            "terms": terms,
            "quadrature_tol": q,
            "checks": to_value(&checks),
            "verdict": worst,
        }),
    }
}

fn fundamental(lp: &LaguerreParams<f64>, sigma: f64, radii: &[f64], terms: usize, tol: Option<f64>) -> Outcome {
    let q = tol.unwrap_or(1e-10);
    let mut worst = Status::Pass;
    let series = check(
        "fundamental_series",
        1e-6,
        fundamental_series_check(lp, sigma, terms, q).map(|c| c.max_rel_err),
        &mut worst,
    );
    let weak = check(
        "weak_delta",
        1e-5,
        weak_delta_check(&RadialFunction::gaussian(), lp, sigma, 40, q).map(|w| rel(w.pairing, w.f0)),
        &mut worst,
    );
    let mut table = Vec::with_capacity(radii.len());
    for &r in radii {
        match (fundamental_solution(lp, sigma, r), fundamental_h(lp, sigma, r)) {
            (Ok(g), Ok(h)) => table.push(json!({"r": r, "g": g, "h": h})),
            (Err(e), _) | (_, Err(e)) => {
                worst = worst.max(Status::of_error(&e));
                table.push(json!({"r": r, "error": e.to_string()}));
            }
        }
    }
    Outcome {
        status: worst,
        report: json!({
            "params": {"alpha": lp.alpha(), "sigma": sigma},
            "terms": terms,
            "quadrature_tol": q,
            "checks": to_value(&[series, weak]),
            "table": table,
            "verdict": worst,
        }),
    }
}

fn sweep(
    a: &SweepArgs,
    tuples: &[(f64, f64, f64)],
    radii: &[f64],
    opts: &HardyOptions<f64>,
    tol: Option<f64>,
) -> Outcome {
    // indexed parallel collect keeps tuple order regardless of completion order
    let parts: Vec<(Vec<Value>, Status)> = tuples
        .par_iter()
        .map(|&(x, s, d)| {
            let (lp, fp) = triple(x, s, d).expect("validated");
            let params = params_json(x, s, d);
            match a.kind {
                SweepKind::Hardy => {
                    let f = parse_profile(&a.f, &lp, d).expect("validated");
                    let o = single(
                        hardy_verdict(&f, &lp, &fp, opts).map(|r| {
                            let st = Status::of_verdict(r.verdict);
                            (to_value(&r), st)
                        }),
                        params,
                    );
                    (vec![o.report], o.status)
                }
                SweepKind::Identities => {
                    let o = identities(&lp, &fp, a.identity_terms, tol);
                    (vec![o.report], o.status)
                }
                SweepKind::WeightRatio => {
                    let mut st = Status::Pass;
                    let rows = radii
                        .iter()
                        .map(|&r| match (weight_ratio(&lp, &fp, r), weight(&lp, s, d, r)) {
                            (Ok(q), Ok(w)) => json!({"alpha": x, "sigma": s, "delta": d, "r": r, "ratio": q, "weight": w}),
                            (Err(e), _) | (_, Err(e)) => {
                                st = st.max(Status::of_error(&e));
                                json!({"alpha": x, "sigma": s, "delta": d, "r": r, "error": e.to_string()})
                            }
                        })
                        .collect();
                    (rows, st)
                }
                SweepKind::Multiplier => {
                    let rows = (0..=a.n_max)
                        .map(|n| {
                            json!({
                                "alpha": x, "sigma": s, "delta": d, "n": n,
                                "conformal": multiplier(&lp, s, n),
                                "pure": pure_multiplier(&lp, s, n),
                            })
                        })
                        .collect();
                    (rows, Status::Pass)
                }
                SweepKind::Fundamental => {
                    let mut st = Status::Pass;
                    let rows = radii
                        .iter()
                        .map(|&r| match (fundamental_solution(&lp, s, r), fundamental_h(&lp, s, r)) {
                            (Ok(g), Ok(h)) => json!({"alpha": x, "sigma": s, "delta": d, "r": r, "g": g, "h": h}),
                            (Err(e), _) | (_, Err(e)) => {
                                st = st.max(Status::of_error(&e));
                                json!({"alpha": x, "sigma": s, "delta": d, "r": r, "error": e.to_string()})
                            }
                        })
                        .collect();
                    (rows, st)
                }
            }
        })
        .collect();
    let status = parts.iter().map(|p| p.1).max().unwrap_or(Status::Pass);
    Outcome {
        status,
        report: Value::Array(parts.into_iter().flat_map(|p| p.0).collect()),
    }
}

fn flatten_into(prefix: &str, v: &Value, out: &mut Vec<(String, String)>) {
    let key = |k: &str| {
        if prefix.is_empty() {
            k.to_string()
        } else {
            format!("{prefix}.{k}")
        }
    };
    match v {
        Value::Object(m) => {
            for (k, x) in m {
                flatten_into(&key(k), x, out);
            }
        }
        Value::Array(xs) if xs.iter().all(Value::is_string) && !xs.is_empty() => {
            let joined: Vec<&str> = xs.iter().filter_map(Value::as_str).collect();
            out.push((prefix.to_string(), joined.join("; ")));
        }
        Value::Array(xs) => {
            for (i, x) in xs.iter().enumerate() {
                flatten_into(&key(&i.to_string()), x, out);
            }
        }
        Value::String(s) => out.push((prefix.to_string(), s.clone())),
        Value::Null => out.push((prefix.to_string(), String::new())),
        other => out.push((prefix.to_string(), other.to_string())),
    }
}

/// One row per element of a top-level array, otherwise a single row.
/// Columns are the union of dotted paths in first-seen order.
pub fn to_csv(v: &Value) -> String {
    let rows: Vec<Vec<(String, String)>> = match v {
        Value::Array(xs) => xs
            .iter()
            .map(|x| {
                let mut r = Vec::new();
                flatten_into("", x, &mut r);
                r
            })
            .collect(),
        _ => {
            let mut r = Vec::new();
            flatten_into("", v, &mut r);
            vec![r]
        }
    };
    let mut header: Vec<String> = Vec::new();
    let mut index = std::collections::HashMap::new();
    for r in &rows {
        for (k, _) in r {
            if !index.contains_key(k) {
                index.insert(k.clone(), header.len());
                header.push(k.clone());
            }
        }
    }
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(&header).expect("in-memory write");
    for r in &rows {
        let mut cells = vec![String::new(); header.len()];
        for (k, x) in r {
            cells[index[k]] = x.clone();
        }
        w.write_record(&cells).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 cells")
}

pub fn render(v: &Value, format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(v).expect("reports serialize");
            s.push('\n');
            s
        }
        Format::Csv => to_csv(v),
    }
}

/// Full driver used by the binary: parse, run, write. Returns the exit code.
pub fn main_with<I, S>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(stderr, "{e}");
                return 1;
            }
            let _ = write!(stdout, "{e}");
            return 0;
        }
    };
    let out = match run(&cli) {
        Ok(o) => o,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            return 1;
        }
    };
    let text = render(&out.report, cli.format);
    let written = match &cli.output {
        Some(p) => std::fs::write(p, &text).map_err(|e| format!("cannot write {}: {e}", p.display())),
        None => stdout.write_all(text.as_bytes()).map_err(|e| e.to_string()),
    };
    if let Err(e) = written {
        let _ = writeln!(stderr, "error: {e}");
        return 1;
    }
    match out.status {
        Status::Pass => {}
        Status::AccuracyDegraded => {
            let _ = writeln!(stderr, "warning: accuracy degraded");
        }
        Status::Fail => {
            let _ = writeln!(stderr, "error: at least one check failed");
        }
    }
    out.status.exit_code()
}
