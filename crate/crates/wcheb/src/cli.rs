//! Batch front end: parse a JSON problem file, dispatch the computation,
//! and persist result records and sweep tables.
//!
//! A problem file is a single JSON object ([`ProblemSpec`]) naming a
//! command, a set, a weight, a degree, and numeric options. [`run`]
//! executes it and produces a [`ResultRecord`]; with `--out` the record
//! is written as pretty-printed JSON, and `--format csv` additionally
//! writes a flat table next to it (one row per sweep point for sweeps,
//! one row per report otherwise). Floating-point fields serialize in
//! shortest round-trip decimal form, so a record re-reads to exactly the
//! bits that were written.
//!
//! Exit codes: 0 success, 2 malformed or unsupported problem (nothing is
//! written), 3 solver failure or non-convergence (an unconverged solve
//! still writes its best iterate), 4 certificate failure or ambiguity
//! (the record is written without a verdict). All error output is a
//! single JSON object with machine-readable `kind`/`reason` fields.
//!
//! Determinism: records contain no timestamps except `wall_clock_ms`,
//! which `--reproducible` omits; identical spec and options then produce
//! byte-identical output files.

use std::fs;
use std::path::{Path, PathBuf};
use std::time::Instant;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bounds::{self, BoundReport, BoundsError};
use crate::certificate::{
    self, AlternationChain, Certificate, CertificateError, EqualityCase, Improvement,
    RivlinShapiro,
};
use crate::domain::CompactSet;
use crate::poly::{Poly, PolyError};
use crate::potential;
use crate::solver::{
    self, ChebyshevResult, Method, SolveOpts, SolverError, WidomReport,
};
use crate::weight::Weight;
use crate::C64;

pub const EXIT_OK: i32 = 0;
/// Unreadable, unparsable, or invalid problem; no output file is written.
pub const EXIT_SCHEMA: i32 = 2;
/// The solver failed outright, or returned without converging.
pub const EXIT_SOLVER: i32 = 3;
/// The optimality certificate could not be decided.
pub const EXIT_CERTIFICATE: i32 = 4;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("cannot write {path}: {source}")]
    WriteIo {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("spec does not parse: {0}")]
    Parse(#[from] serde_json::Error),
    #[error("invalid {what}: {reason}")]
    Invalid { what: String, reason: String },
    #[error("solver failed: {0}")]
    Solver(#[from] SolverError),
    #[error("certificate failed: {0}")]
    Certificate(String),
}

impl CliError {
    fn invalid(what: &str, reason: impl std::fmt::Display) -> Self {
        CliError::Invalid { what: what.into(), reason: reason.to_string() }
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Io { .. }
            | CliError::WriteIo { .. }
            | CliError::Parse(_)
            | CliError::Invalid { .. } => EXIT_SCHEMA,
            CliError::Solver(e) => classify_solver_error(e),
            CliError::Certificate(_) => EXIT_CERTIFICATE,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Io { .. } => "io",
            CliError::WriteIo { .. } => "write",
            CliError::Parse(_) => "parse",
            CliError::Invalid { .. } => "invalid",
            CliError::Solver(_) => "solver",
            CliError::Certificate(_) => "certificate",
        }
    }

    /// One-object JSON rendering for stderr, so callers can match on
    /// `kind` without parsing prose.
    pub fn to_json(&self) -> String {
        serde_json::json!({
            "error": {
                "kind": self.kind(),
                "exit": self.exit_code(),
                "reason": self.to_string(),
            }
        })
        .to_string()
    }
}

/// Problems the solver cannot even pose (wrong set class, degree cap,
/// weight undefined on the set) are spec errors; failures inside an
/// otherwise well-posed run are solver errors.
fn classify_solver_error(e: &SolverError) -> i32 {
    match e {
        SolverError::Unsupported(_)
        | SolverError::Weight(_)
        | SolverError::Poly(PolyError::DegreeCapExceeded { .. }) => EXIT_SCHEMA,
        _ => EXIT_SOLVER,
    }
}

fn map_bounds_error(e: BoundsError) -> CliError {
    match e {
        BoundsError::Solver(s) => CliError::Solver(s),
        BoundsError::Certificate(c) => CliError::Certificate(c.to_string()),
        BoundsError::Potential(p) => CliError::Solver(SolverError::Potential(p)),
        other => CliError::invalid("problem", other),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
}

/// Command-line options layered over the spec file; flags win where both
/// name the same option.
#[derive(Debug, Clone)]
pub struct Flags {
    pub out: Option<PathBuf>,
    pub format: Format,
    pub tol: Option<f64>,
    pub grid: Option<usize>,
    pub quad: Option<usize>,
    pub max_iter: Option<usize>,
    pub seed: Option<u64>,
    pub reproducible: bool,
}

impl Default for Flags {
    fn default() -> Self {
        Flags {
            out: None,
            format: Format::Json,
            tol: None,
            grid: None,
            quad: None,
            max_iter: None,
            seed: None,
            reproducible: false,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Command {
    Solve,
    Certify,
    Widom,
    Bounds,
    Preimage,
    Sharpness,
    Capacity,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MethodSpec {
    Auto,
    Remez,
    Lawson,
    Transfer,
}

impl From<MethodSpec> for Method {
    fn from(m: MethodSpec) -> Method {
        match m {
            MethodSpec::Auto => Method::Auto,
            MethodSpec::Remez => Method::Remez,
            MethodSpec::Lawson => Method::Lawson,
            MethodSpec::Transfer => Method::Transfer,
        }
    }
}

/// One polynomial coefficient: a bare real or a `[re, im]` pair.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum CoeffSpec {
    Real(f64),
    Complex([f64; 2]),
}

impl CoeffSpec {
    fn to_c64(self) -> C64 {
        match self {
            CoeffSpec::Real(x) => C64::new(x, 0.0),
            CoeffSpec::Complex([re, im]) => C64::new(re, im),
        }
    }
}

/// Ascending monomial coefficients, `c₀ + c₁z + …`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct PolySpec(pub Vec<CoeffSpec>);

impl PolySpec {
    fn to_poly(&self, what: &str) -> Result<Poly, CliError> {
        if self.0.is_empty() {
            return Err(CliError::invalid(what, "empty coefficient list"));
        }
        let coeffs: Vec<C64> = self.0.iter().map(|c| c.to_c64()).collect();
        if coeffs.iter().any(|c| !c.re.is_finite() || !c.im.is_finite()) {
            return Err(CliError::invalid(what, "coefficients must be finite"));
        }
        Ok(Poly::new(coeffs))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum SetSpec {
    Interval { lo: f64, hi: f64 },
    IntervalUnion { intervals: Vec<(f64, f64)> },
    Circle { center: [f64; 2], radius: f64 },
    Points { points: Vec<[f64; 2]> },
    Preimage { map: PolySpec, base: Box<SetSpec> },
}

impl SetSpec {
    pub fn build(&self) -> Result<CompactSet, CliError> {
        match self {
            SetSpec::Interval { lo, hi } => {
                CompactSet::interval(*lo, *hi).map_err(|e| CliError::invalid("set", e))
            }
            SetSpec::IntervalUnion { intervals } => CompactSet::interval_union(intervals.clone())
                .map_err(|e| CliError::invalid("set", e)),
            SetSpec::Circle { center, radius } => {
                CompactSet::circle(C64::new(center[0], center[1]), *radius)
                    .map_err(|e| CliError::invalid("set", e))
            }
            SetSpec::Points { points } => {
                let pts = points.iter().map(|p| C64::new(p[0], p[1])).collect();
                CompactSet::sampled(pts).map_err(|e| CliError::invalid("set", e))
            }
            SetSpec::Preimage { map, base } => {
                let p = map.to_poly("set map")?;
                let b = base.build()?;
                CompactSet::preimage(p, b).map_err(|e| CliError::invalid("set", e))
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FactorSpec {
    pub coeffs: PolySpec,
    pub power: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum WeightSpec {
    Constant { value: f64 },
    /// `Π |pᵢ(z)|^{αᵢ}`.
    AbsPoly { factors: Vec<FactorSpec> },
    /// `|Σ aₖ Tₖ(u(z))|^power` on `[lo, hi]`, evaluated in the Chebyshev
    /// basis.
    ChebSeries { coeffs: Vec<f64>, lo: f64, hi: f64, power: f64 },
    Pullback { map: PolySpec, base: Box<WeightSpec> },
    Tabulated { points: Vec<[f64; 2]>, values: Vec<f64>, tol: f64, strict: bool },
    /// `base` inside the disk, 0 outside.
    Restricted { base: Box<WeightSpec>, center: [f64; 2], radius: f64 },
}

impl WeightSpec {
    pub fn build(&self) -> Result<Weight, CliError> {
        match self {
            WeightSpec::Constant { value } => {
                Weight::constant(*value).map_err(|e| CliError::invalid("weight", e))
            }
            WeightSpec::AbsPoly { factors } => {
                let mut fs = Vec::with_capacity(factors.len());
                for f in factors {
                    fs.push((f.coeffs.to_poly("weight factor")?, f.power));
                }
                Weight::abs_poly(fs).map_err(|e| CliError::invalid("weight", e))
            }
            WeightSpec::ChebSeries { coeffs, lo, hi, power } => {
                Weight::abs_cheb_series(coeffs.clone(), *lo, *hi, *power)
                    .map_err(|e| CliError::invalid("weight", e))
            }
            WeightSpec::Pullback { map, base } => {
                let p = map.to_poly("weight map")?;
                let b = base.build()?;
                Weight::pullback(p, b).map_err(|e| CliError::invalid("weight", e))
            }
            WeightSpec::Tabulated { points, values, tol, strict } => {
                let pts = points.iter().map(|p| C64::new(p[0], p[1])).collect();
                Weight::tabulated(pts, values.clone(), *tol, *strict)
                    .map_err(|e| CliError::invalid("weight", e))
            }
            WeightSpec::Restricted { base, center, radius } => {
                let b = base.build()?;
                if !(*radius > 0.0) || !radius.is_finite() {
                    return Err(CliError::invalid("weight", "restriction radius must be positive"));
                }
                Ok(Weight::restricted(
                    b,
                    crate::weight::Region::Disk {
                        center: C64::new(center[0], center[1]),
                        radius: *radius,
                    },
                ))
            }
        }
    }
}

/// One batch problem. `set`, `weight`, and `n` are required by every
/// command except where noted: `certify` takes them from the stored
/// record named by `result_file`, `capacity` ignores `n`, and a missing
/// `weight` means the constant weight 1.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemSpec {
    pub command: Command,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub set: Option<SetSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weight: Option<WeightSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub method: Option<MethodSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tol: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub grid: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub quad: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_iter: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    /// Sharpness sweep parameters, largest first.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub eps: Option<Vec<f64>>,
    /// Sharpness: also run the fixed-degree polynomial weights.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub use_poly_approx: Option<bool>,
    /// Bounds: number of exterior growth-bound sample points.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub samples: Option<usize>,
    /// Certify: stored result to re-verify, relative to the spec file.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub result_file: Option<String>,
}

impl ProblemSpec {
    fn need_set(&self) -> Result<CompactSet, CliError> {
        match &self.set {
            Some(s) => s.build(),
            None => Err(CliError::invalid("spec", "this command needs a `set`")),
        }
    }

    fn weight_or_one(&self) -> Result<Weight, CliError> {
        match &self.weight {
            Some(w) => w.build(),
            None => Weight::constant(1.0).map_err(|e| CliError::invalid("weight", e)),
        }
    }

    fn need_n(&self) -> Result<usize, CliError> {
        let n = self
            .n
            .ok_or_else(|| CliError::invalid("spec", "this command needs a degree `n`"))?;
        if n < 1 || n > crate::DEGREE_CAP {
            return Err(CliError::invalid(
                "n",
                format!("degree must be in 1..={}", crate::DEGREE_CAP),
            ));
        }
        Ok(n)
    }

    fn solve_opts(&self, flags: &Flags) -> Result<SolveOpts, CliError> {
        let mut o = SolveOpts::default();
        if let Some(m) = self.method {
            o.method = m.into();
        }
        o.grid_density = flags.grid.or(self.grid).unwrap_or(o.grid_density);
        if o.grid_density < 16 {
            return Err(CliError::invalid("grid", "grid density must be at least 16"));
        }
        o.quad.n = flags.quad.or(self.quad).unwrap_or(o.quad.n);
        if o.quad.n < 8 {
            return Err(CliError::invalid("quad", "quadrature size must be at least 8"));
        }
        o.tol = flags.tol.or(self.tol);
        if let Some(t) = o.tol {
            if !(t > 0.0) || !t.is_finite() {
                return Err(CliError::invalid("tol", "tolerance must be positive and finite"));
            }
        }
        o.max_iter = flags.max_iter.or(self.max_iter);
        if o.max_iter == Some(0) {
            return Err(CliError::invalid("max_iter", "iteration budget must be at least 1"));
        }
        o.seed = flags.seed.or(self.seed).unwrap_or(0);
        Ok(o)
    }
}

fn pair(z: C64) -> [f64; 2] {
    [z.re, z.im]
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExtremalPointRecord {
    pub point: [f64; 2],
    pub value: f64,
}

/// Serialized [`ChebyshevResult`]; coefficients are ascending monomial
/// `[re, im]` pairs.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SolveRecord {
    pub degree: usize,
    pub coefficients: Vec<[f64; 2]>,
    pub norm: f64,
    pub extremal_points: Vec<ExtremalPointRecord>,
    pub iterations: usize,
    pub converged: bool,
    pub residual: f64,
}

impl SolveRecord {
    fn from_result(res: &ChebyshevResult) -> Self {
        SolveRecord {
            degree: res.t.degree(),
            coefficients: res.t.coeffs().iter().map(|c| pair(*c)).collect(),
            norm: res.norm,
            extremal_points: res
                .extremal_points
                .iter()
                .map(|(z, v)| ExtremalPointRecord { point: pair(*z), value: *v })
                .collect(),
            iterations: res.iterations,
            converged: res.converged,
            residual: res.residual,
        }
    }

    fn to_result(&self) -> Result<ChebyshevResult, CliError> {
        if self.coefficients.is_empty() {
            return Err(CliError::invalid("result", "stored coefficients are empty"));
        }
        let coeffs: Vec<C64> =
            self.coefficients.iter().map(|p| C64::new(p[0], p[1])).collect();
        Ok(ChebyshevResult {
            t: Poly::new(coeffs),
            norm: self.norm,
            extremal_points: self
                .extremal_points
                .iter()
                .map(|e| (C64::new(e.point[0], e.point[1]), e.value))
                .collect(),
            iterations: self.iterations,
            converged: self.converged,
            residual: self.residual,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WidomRecord {
    pub n: usize,
    pub t_n: f64,
    pub capacity: f64,
    pub w_n: f64,
    pub s_w: f64,
    pub szego_class: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ratio: Option<f64>,
}

impl WidomRecord {
    fn from_report(r: &WidomReport) -> Self {
        WidomRecord {
            n: r.n,
            t_n: r.t_n,
            capacity: r.capacity,
            w_n: r.w_n,
            s_w: r.s_w,
            szego_class: r.szego_class,
            ratio: r.ratio,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RivlinRecord {
    pub points: Vec<[f64; 2]>,
    pub multipliers: Vec<f64>,
    pub residual: f64,
    pub route_gap: f64,
}

impl RivlinRecord {
    fn from_cert(rs: &RivlinShapiro) -> Self {
        RivlinRecord {
            points: rs.points.iter().map(|z| pair(*z)).collect(),
            multipliers: rs.multipliers.clone(),
            residual: rs.residual,
            route_gap: rs.route_gap,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ImprovementRecord {
    pub direction: Vec<[f64; 2]>,
    pub step: f64,
    pub new_norm: f64,
    pub predicted_decrease: f64,
}

impl ImprovementRecord {
    fn from_cert(im: &Improvement) -> Self {
        ImprovementRecord {
            direction: im.direction.coeffs().iter().map(|c| pair(*c)).collect(),
            step: im.step,
            new_norm: im.new_norm,
            predicted_decrease: im.predicted_decrease,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlternationRecord {
    pub points: Vec<f64>,
    pub signs: Vec<i8>,
    pub level: f64,
    pub max_deviation: f64,
}

impl AlternationRecord {
    fn from_chain(ch: &AlternationChain) -> Self {
        AlternationRecord {
            points: ch.points.clone(),
            signs: ch.signs.clone(),
            level: ch.level,
            max_deviation: ch.max_deviation,
        }
    }
}

/// Optimality evidence for the solved polynomial. `verdict` is
/// `"optimal"` or `"improvable"`; the matching detail field is set.
/// `alternation` appears only for real problems where the chain closes.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CertificateRecord {
    pub verdict: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub multipliers: Option<RivlinRecord>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub improvement: Option<ImprovementRecord>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alternation: Option<AlternationRecord>,
    pub extremal_count: usize,
    pub extremal_tol_rel: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EqualityRecord {
    pub equality: bool,
    pub zero_locations_ok: bool,
    pub ae_maximality_ok: bool,
}

impl EqualityRecord {
    fn from_case(c: &EqualityCase) -> Self {
        EqualityRecord {
            equality: c.equality,
            zero_locations_ok: c.zero_locations_ok,
            ae_maximality_ok: c.ae_maximality_ok,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BoundRecord {
    pub name: String,
    pub lhs: f64,
    pub rhs: f64,
    pub margin: f64,
    pub pass: bool,
    pub tolerance: f64,
    pub grid_density: usize,
    pub quad_n: usize,
    pub notes: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub equality: Option<EqualityRecord>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub series: Vec<(f64, f64)>,
}

impl BoundRecord {
    fn from_report(r: &BoundReport) -> Self {
        BoundRecord {
            name: r.name.clone(),
            lhs: r.lhs,
            rhs: r.rhs,
            margin: r.margin,
            pass: r.pass,
            tolerance: r.tolerance,
            grid_density: r.grid_density,
            quad_n: r.quad_n,
            notes: r.notes.clone(),
            equality: r.equality.as_ref().map(EqualityRecord::from_case),
            series: r.series.clone(),
        }
    }
}

/// Base solve, its lift through the map, and the independent direct
/// solve on the preimage, with their agreement measures.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PreimageRecord {
    pub map_degree: usize,
    pub base: SolveRecord,
    pub lifted: SolveRecord,
    pub direct: SolveRecord,
    /// Largest coefficientwise difference between the lifted and direct
    /// minimizers.
    pub coeff_max_diff: f64,
    pub widom_base: WidomRecord,
    pub widom_direct: WidomRecord,
    /// `|W_{nm}(preimage) − W_n(base)|`.
    pub widom_gap: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CapacityRecord {
    pub value: f64,
    /// Whether the value came from a closed form rather than an estimate.
    pub exact: bool,
}

/// Effective numeric options after flag/spec resolution, plus free-form
/// notes (certificate outcomes, skipped stages, error details).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Diagnostics {
    pub method: String,
    pub grid_density: usize,
    pub quad_n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tol: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_iter: Option<usize>,
    pub seed: u64,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl Diagnostics {
    fn from_opts(opts: &SolveOpts) -> Self {
        let method = match opts.method {
            Method::Auto => "auto",
            Method::Remez => "remez",
            Method::Lawson => "lawson",
            Method::Transfer => "transfer",
        };
        Diagnostics {
            method: method.into(),
            grid_density: opts.grid_density,
            quad_n: opts.quad.n,
            tol: opts.tol,
            max_iter: opts.max_iter,
            seed: opts.seed,
            notes: Vec::new(),
        }
    }
}

/// Everything one command run produced. Absent stages serialize as
/// absent fields, so records stay diff-able across commands.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ResultRecord {
    pub spec: ProblemSpec,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub result: Option<SolveRecord>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub widom: Option<WidomRecord>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub certificates: Option<CertificateRecord>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub bounds: Vec<BoundRecord>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub preimage: Option<PreimageRecord>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub capacity: Option<CapacityRecord>,
    pub diagnostics: Diagnostics,
    /// Omitted under `--reproducible`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub wall_clock_ms: Option<f64>,
}

impl ResultRecord {
    fn new(spec: ProblemSpec, diagnostics: Diagnostics) -> Self {
        ResultRecord {
            spec,
            result: None,
            widom: None,
            certificates: None,
            bounds: Vec::new(),
            preimage: None,
            capacity: None,
            diagnostics,
            wall_clock_ms: None,
        }
    }
}

/// A completed run: the record, its serialized forms, and the exit code
/// (0, 3 on an unconverged solve, 4 on an undecided certificate).
#[derive(Debug)]
pub struct RunOutput {
    pub record: ResultRecord,
    pub json: String,
    pub csv: Option<String>,
    pub exit: i32,
}

/// Execute the problem in `spec_path` and write the requested outputs.
/// Schema and validation failures return before anything is written.
pub fn run(spec_path: &Path, flags: &Flags) -> Result<RunOutput, CliError> {
    let raw = fs::read_to_string(spec_path)
        .map_err(|e| CliError::Io { path: spec_path.to_path_buf(), source: e })?;
    let spec: ProblemSpec = serde_json::from_str(&raw)?;
    if flags.format == Format::Csv && flags.out.is_none() {
        return Err(CliError::invalid("flags", "--format csv needs --out to name the table"));
    }
    let spec_dir = spec_path.parent().unwrap_or_else(|| Path::new("."));

    let started = Instant::now();
    let (mut record, exit) = dispatch(&spec, flags, spec_dir)?;
    if !flags.reproducible {
        record.wall_clock_ms = Some(started.elapsed().as_secs_f64() * 1e3);
    }

    let mut json = serde_json::to_string_pretty(&record).map_err(CliError::Parse)?;
    json.push('\n');
    let csv = if flags.format == Format::Csv { Some(render_csv(&record)) } else { None };

    if let Some(out) = &flags.out {
        fs::write(out, &json)
            .map_err(|e| CliError::WriteIo { path: out.clone(), source: e })?;
        if let Some(table) = &csv {
            let csv_path = out.with_extension("csv");
            fs::write(&csv_path, table)
                .map_err(|e| CliError::WriteIo { path: csv_path, source: e })?;
        }
    }

    Ok(RunOutput { record, json, csv, exit })
}

fn dispatch(
    spec: &ProblemSpec,
    flags: &Flags,
    spec_dir: &Path,
) -> Result<(ResultRecord, i32), CliError> {
    match spec.command {
        Command::Solve => solve_command(spec, flags, false),
        Command::Widom => solve_command(spec, flags, true),
        Command::Certify => certify_command(spec, flags, spec_dir),
        Command::Bounds => bounds_command(spec, flags),
        Command::Preimage => preimage_command(spec, flags),
        Command::Sharpness => sharpness_command(spec, flags),
        Command::Capacity => capacity_command(spec, flags),
    }
}

/// Exit-code folding for the record-producing path: solver trouble
/// dominates certificate trouble dominates success.
fn fold_exit(converged: bool, certificate_failed: bool) -> i32 {
    if !converged {
        EXIT_SOLVER
    } else if certificate_failed {
        EXIT_CERTIFICATE
    } else {
        EXIT_OK
    }
}

/// Certify `res` on `(set, w)`: extremal set, multiplier check, and an
/// alternation chain where the problem is real. Returns the record and,
/// on failure, the reason the certificate could not be decided.
fn certify_result(
    set: &CompactSet,
    w: &Weight,
    res: &ChebyshevResult,
    opts: &SolveOpts,
) -> (Option<CertificateRecord>, Vec<String>, Option<String>) {
    let mut notes = Vec::new();
    let grid = match set.sample(opts.grid_density) {
        Ok(g) => g,
        Err(e) => return (None, notes, Some(format!("sampling failed: {e}"))),
    };
    let tol_rel = certificate::suggested_tol_rel(&res.t, &grid, res.norm);
    let extremal = match certificate::extremal_points(&res.t, w, set, &grid, tol_rel) {
        Ok(e) => e,
        Err(e) => return (None, notes, Some(format!("extremal set failed: {e}"))),
    };
    let cert = match certificate::kolmogorov_check(&res.t, w, &grid, &extremal, CERT_TOL) {
        Ok(c) => c,
        Err(e @ CertificateError::Ambiguous { .. }) => {
            return (None, notes, Some(e.to_string()));
        }
        Err(e) => return (None, notes, Some(format!("multiplier check failed: {e}"))),
    };

    let mut rec = CertificateRecord {
        verdict: String::new(),
        multipliers: None,
        improvement: None,
        alternation: None,
        extremal_count: extremal.points.len(),
        extremal_tol_rel: extremal.tol_rel,
    };
    match &cert {
        Certificate::Optimal(rs) => {
            rec.verdict = "optimal".into();
            rec.multipliers = Some(RivlinRecord::from_cert(rs));
        }
        Certificate::Improvable(im) => {
            rec.verdict = "improvable".into();
            rec.improvement = Some(ImprovementRecord::from_cert(im));
            notes.push(
                "certificate: the solved polynomial admits a verified improvement".into(),
            );
        }
    }

    if set.is_interval_like() {
        match certificate::alternation_verify(res, set, w, ALTERNATION_TOL) {
            Ok(ch) => rec.alternation = Some(AlternationRecord::from_chain(&ch)),
            Err(e) => notes.push(format!("alternation: {e}")),
        }
    }

    (Some(rec), notes, None)
}

/// NNLS residual threshold for declaring a multiplier certificate.
const CERT_TOL: f64 = 1e-8;
/// Relative deviation allowed along a verified alternation chain.
const ALTERNATION_TOL: f64 = 1e-6;

fn solve_command(
    spec: &ProblemSpec,
    flags: &Flags,
    with_widom: bool,
) -> Result<(ResultRecord, i32), CliError> {
    let set = spec.need_set()?;
    let w = spec.weight_or_one()?;
    let n = spec.need_n()?;
    let opts = spec.solve_opts(flags)?;
    let mut record = ResultRecord::new(spec.clone(), Diagnostics::from_opts(&opts));

    let res = solver::solve(&set, &w, n, &opts)?;
    record.result = Some(SolveRecord::from_result(&res));

    if with_widom {
        let report = solver::widom_from_result(&set, &w, &res, &opts)?;
        record.widom = Some(WidomRecord::from_report(&report));
    }

    let (cert, notes, cert_err) = certify_result(&set, &w, &res, &opts);
    record.certificates = cert;
    record.diagnostics.notes.extend(notes);
    if let Some(reason) = &cert_err {
        record.diagnostics.notes.push(format!("certificate undecided: {reason}"));
    }

    let exit = fold_exit(res.converged, cert_err.is_some());
    Ok((record, exit))
}

fn certify_command(
    spec: &ProblemSpec,
    flags: &Flags,
    spec_dir: &Path,
) -> Result<(ResultRecord, i32), CliError> {
    let rel = spec
        .result_file
        .as_ref()
        .ok_or_else(|| CliError::invalid("spec", "certify needs `result_file`"))?;
    let mut path = PathBuf::from(rel);
    if path.is_relative() {
        path = spec_dir.join(path);
    }
    let raw = fs::read_to_string(&path)
        .map_err(|e| CliError::Io { path: path.clone(), source: e })?;
    let stored: ResultRecord = serde_json::from_str(&raw)?;
    let sr = stored
        .result
        .ok_or_else(|| CliError::invalid("result_file", "stored record holds no solve result"))?;

    let set = match &stored.spec.set {
        Some(s) => s.build()?,
        None => return Err(CliError::invalid("result_file", "stored record names no set")),
    };
    let w = stored.spec.weight_or_one()?;
    let opts = spec.solve_opts(flags)?;
    let res = sr.to_result()?;

    let mut record = ResultRecord::new(spec.clone(), Diagnostics::from_opts(&opts));
    record.result = Some(sr);
    let (cert, notes, cert_err) = certify_result(&set, &w, &res, &opts);
    record.certificates = cert;
    record.diagnostics.notes.extend(notes);
    if let Some(reason) = &cert_err {
        record.diagnostics.notes.push(format!("certificate undecided: {reason}"));
    }
    Ok((record, fold_exit(true, cert_err.is_some())))
}

fn bounds_command(spec: &ProblemSpec, flags: &Flags) -> Result<(ResultRecord, i32), CliError> {
    let set = spec.need_set()?;
    let w = spec.weight_or_one()?;
    let n = spec.need_n()?;
    let opts = spec.solve_opts(flags)?;
    let samples = spec.samples.unwrap_or(16).max(1);
    let mut record = ResultRecord::new(spec.clone(), Diagnostics::from_opts(&opts));

    let res = solver::solve(&set, &w, n, &opts)?;
    record.result = Some(SolveRecord::from_result(&res));
    let (cert, notes, cert_err) = certify_result(&set, &w, &res, &opts);
    record.certificates = cert;
    record.diagnostics.notes.extend(notes);
    if let Some(reason) = &cert_err {
        record.diagnostics.notes.push(format!("certificate undecided: {reason}"));
    }

    let mut reports = Vec::new();
    reports.push(bounds::szego_lower_bound(&set, &w, n, &opts).map_err(map_bounds_error)?);
    let one = Weight::constant(1.0).map_err(|e| CliError::invalid("weight", e))?;
    reports.push(bounds::compare_weights(&set, &w, &one, n, &opts).map_err(map_bounds_error)?);
    let zs = exterior_samples(&set, samples, opts.seed)?;
    reports.push(
        bounds::bernstein_walsh_check(&set, &w, &res.t, &zs, &opts).map_err(map_bounds_error)?,
    );
    record.bounds = reports.iter().map(BoundRecord::from_report).collect();

    Ok((record, fold_exit(res.converged, cert_err.is_some())))
}

/// Deterministic exterior sample points: radial rays around the set's
/// sampled hull, accepted where the Green function is strictly positive.
fn exterior_samples(set: &CompactSet, count: usize, seed: u64) -> Result<Vec<C64>, CliError> {
    let grid = set
        .sample(256)
        .map_err(|e| CliError::invalid("set", e))?;
    let m = grid.points.len() as f64;
    let center = grid.points.iter().sum::<C64>() / m;
    let radius = grid
        .points
        .iter()
        .map(|z| (z - center).norm())
        .fold(0.0f64, f64::max)
        .max(1e-3);

    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x7765_6368_5f62_7731);
    let mut out = Vec::with_capacity(count);
    for _ in 0..20_000 {
        if out.len() == count {
            break;
        }
        let theta = rng.gen_range(0.0..std::f64::consts::TAU);
        let rad = radius * rng.gen_range(1.2..3.0);
        let z = center + C64::from_polar(rad, theta);
        match potential::green(set, z) {
            Ok(g) if g > 1e-9 => out.push(z),
            _ => {}
        }
    }
    if out.len() < count {
        return Err(CliError::invalid(
            "samples",
            "could not find enough exterior sample points around the set",
        ));
    }
    Ok(out)
}

fn preimage_command(spec: &ProblemSpec, flags: &Flags) -> Result<(ResultRecord, i32), CliError> {
    let Some(SetSpec::Preimage { map, base }) = &spec.set else {
        return Err(CliError::invalid(
            "set",
            "the preimage command needs a set of kind `preimage`",
        ));
    };
    let p = map.to_poly("set map")?;
    let base_set = base.build()?;
    let pre_set = CompactSet::preimage(p.clone(), base_set.clone())
        .map_err(|e| CliError::invalid("set", e))?;
    let w_base = spec.weight_or_one()?;
    let n = spec.need_n()?;
    let m = p.degree();
    if n * m > crate::DEGREE_CAP {
        return Err(CliError::invalid(
            "n",
            format!("lifted degree {} exceeds the cap {}", n * m, crate::DEGREE_CAP),
        ));
    }
    let opts = spec.solve_opts(flags)?;
    let mut record = ResultRecord::new(spec.clone(), Diagnostics::from_opts(&opts));

    let base_res = solver::solve(&base_set, &w_base, n, &opts)?;
    let lifted = solver::preimage_transfer(&base_res, &p, &base_set)?;
    let w_lift = Weight::pullback(p.clone(), w_base.clone())
        .map_err(|e| CliError::invalid("weight", e))?;

    // The direct route must not silently fall back to the transfer it is
    // being checked against, so force an independent solver.
    let mut direct_opts = opts.clone();
    direct_opts.method = Method::Remez;
    let direct = match solver::solve(&pre_set, &w_lift, n * m, &direct_opts) {
        Err(SolverError::Unsupported(_)) => {
            direct_opts.method = Method::Lawson;
            solver::solve(&pre_set, &w_lift, n * m, &direct_opts)?
        }
        other => other?,
    };

    let coeff_max_diff = lifted
        .t
        .coeffs()
        .iter()
        .zip(direct.t.coeffs())
        .map(|(a, b)| (a - b).norm())
        .fold(0.0f64, f64::max);
    let widom_base = solver::widom_from_result(&base_set, &w_base, &base_res, &opts)?;
    let widom_direct = solver::widom_from_result(&pre_set, &w_lift, &direct, &opts)?;
    let widom_gap = (widom_direct.w_n - widom_base.w_n).abs();

    record.result = Some(SolveRecord::from_result(&direct));
    record.widom = Some(WidomRecord::from_report(&widom_direct));
    let (cert, notes, cert_err) = certify_result(&pre_set, &w_lift, &direct, &opts);
    record.certificates = cert;
    record.diagnostics.notes.extend(notes);
    if let Some(reason) = &cert_err {
        record.diagnostics.notes.push(format!("certificate undecided: {reason}"));
    }
    record.preimage = Some(PreimageRecord {
        map_degree: m,
        base: SolveRecord::from_result(&base_res),
        lifted: SolveRecord::from_result(&lifted),
        direct: SolveRecord::from_result(&direct),
        coeff_max_diff,
        widom_base: WidomRecord::from_report(&widom_base),
        widom_direct: WidomRecord::from_report(&widom_direct),
        widom_gap,
    });

    let converged = base_res.converged && direct.converged;
    Ok((record, fold_exit(converged, cert_err.is_some())))
}

fn sharpness_command(spec: &ProblemSpec, flags: &Flags) -> Result<(ResultRecord, i32), CliError> {
    let set = spec.need_set()?;
    let n = spec.need_n()?;
    let eps = spec.eps.clone().unwrap_or_else(|| vec![0.3, 0.1, 0.03, 0.01]);
    if eps.is_empty() || eps.iter().any(|&e| !(e > 0.0) || !e.is_finite()) {
        return Err(CliError::invalid("eps", "sweep values must be positive and finite"));
    }
    let use_poly_approx = spec.use_poly_approx.unwrap_or(false);
    let opts = spec.solve_opts(flags)?;
    let mut record = ResultRecord::new(spec.clone(), Diagnostics::from_opts(&opts));

    let reports = bounds::sharpness_sweep(&set, n, &eps, use_poly_approx, &opts)
        .map_err(map_bounds_error)?;
    record.bounds = reports.iter().map(BoundRecord::from_report).collect();
    Ok((record, EXIT_OK))
}

fn capacity_command(spec: &ProblemSpec, flags: &Flags) -> Result<(ResultRecord, i32), CliError> {
    let set = spec.need_set()?;
    let opts = spec.solve_opts(flags)?;
    let mut record = ResultRecord::new(spec.clone(), Diagnostics::from_opts(&opts));
    let est = potential::capacity(&set)
        .map_err(|e| CliError::Solver(SolverError::Potential(e)))?;
    record.capacity = Some(CapacityRecord { value: est.value, exact: est.exact });
    Ok((record, EXIT_OK))
}

/// Shortest decimal form that parses back to the same value; what both
/// the JSON and CSV writers rely on for lossless round-trips.
fn fmt_f64(x: f64) -> String {
    format!("{x}")
}

fn fmt_opt(x: Option<f64>) -> String {
    x.map(fmt_f64).unwrap_or_default()
}

/// Flat table for the record: one row per sweep point or report where
/// the command produced several, one row otherwise.
fn render_csv(record: &ResultRecord) -> String {
    let mut lines: Vec<String> = Vec::new();
    match record.spec.command {
        Command::Sharpness => {
            lines.push(
                "eps,ratio,lhs,rhs,margin,tolerance,pass,approx_8,approx_16,approx_32,approx_64"
                    .into(),
            );
            for b in &record.bounds {
                let eps = b.series.first().map(|s| s.0);
                let ratio = b.series.first().map(|s| s.1);
                let approx = |deg: f64| {
                    b.series
                        .iter()
                        .skip(1)
                        .find(|s| s.0 == deg)
                        .map(|s| s.1)
                };
                lines.push(format!(
                    "{},{},{},{},{},{},{},{},{},{},{}",
                    fmt_opt(eps),
                    fmt_opt(ratio),
                    fmt_f64(b.lhs),
                    fmt_f64(b.rhs),
                    fmt_f64(b.margin),
                    fmt_f64(b.tolerance),
                    b.pass,
                    fmt_opt(approx(8.0)),
                    fmt_opt(approx(16.0)),
                    fmt_opt(approx(32.0)),
                    fmt_opt(approx(64.0)),
                ));
            }
        }
        Command::Bounds => {
            lines.push("name,lhs,rhs,margin,tolerance,pass".into());
            for b in &record.bounds {
                lines.push(format!(
                    "{},{},{},{},{},{}",
                    b.name,
                    fmt_f64(b.lhs),
                    fmt_f64(b.rhs),
                    fmt_f64(b.margin),
                    fmt_f64(b.tolerance),
                    b.pass,
                ));
            }
        }
        Command::Widom | Command::Solve => {
            lines.push("n,t_n,capacity,w_n,s_w,szego_class,ratio,converged,residual".into());
            let (n, t_n, conv, resid) = match &record.result {
                Some(r) => (
                    Some(r.degree as f64),
                    Some(r.norm),
                    r.converged.to_string(),
                    Some(r.residual),
                ),
                None => (None, None, String::new(), None),
            };
            let (cap, w_n, s_w, sz, ratio) = match &record.widom {
                Some(wn) => (
                    Some(wn.capacity),
                    Some(wn.w_n),
                    Some(wn.s_w),
                    wn.szego_class.to_string(),
                    wn.ratio,
                ),
                None => (None, None, None, String::new(), None),
            };
            lines.push(format!(
                "{},{},{},{},{},{},{},{},{}",
                fmt_opt(n),
                fmt_opt(t_n),
                fmt_opt(cap),
                fmt_opt(w_n),
                fmt_opt(s_w),
                sz,
                fmt_opt(ratio),
                conv,
                fmt_opt(resid),
            ));
        }
        Command::Preimage => {
            lines.push("n,map_degree,lifted_degree,coeff_max_diff,widom_base,widom_direct,widom_gap".into());
            if let Some(p) = &record.preimage {
                lines.push(format!(
                    "{},{},{},{},{},{},{}",
                    p.base.degree,
                    p.map_degree,
                    p.direct.degree,
                    fmt_f64(p.coeff_max_diff),
                    fmt_f64(p.widom_base.w_n),
                    fmt_f64(p.widom_direct.w_n),
                    fmt_f64(p.widom_gap),
                ));
            }
        }
        Command::Capacity => {
            lines.push("value,exact".into());
            if let Some(c) = &record.capacity {
                lines.push(format!("{},{}", fmt_f64(c.value), c.exact));
            }
        }
        Command::Certify => {
            lines.push("verdict,extremal_count,residual,route_gap,new_norm".into());
            if let Some(c) = &record.certificates {
                lines.push(format!(
                    "{},{},{},{},{}",
                    c.verdict,
                    c.extremal_count,
                    fmt_opt(c.multipliers.as_ref().map(|m| m.residual)),
                    fmt_opt(c.multipliers.as_ref().map(|m| m.route_gap)),
                    fmt_opt(c.improvement.as_ref().map(|i| i.new_norm)),
                ));
            }
        }
    }
    let mut s = lines.join("\n");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use tempfile::tempdir;

    fn write_spec(dir: &Path, name: &str, spec: &serde_json::Value) -> PathBuf {
        let path = dir.join(name);
        fs::write(&path, serde_json::to_string_pretty(spec).unwrap()).unwrap();
        path
    }

    #[test]
    fn widom_example_record() {
        let dir = tempdir().unwrap();
        let spec = serde_json::json!({
            "command": "widom",
            "set": {"kind": "interval", "lo": -1.0, "hi": 1.0},
            "weight": {"kind": "constant", "value": 1.0},
            "n": 3
        });
        let path = write_spec(dir.path(), "spec.json", &spec);
        let out = run(&path, &Flags::default()).unwrap();
        assert_eq!(out.exit, EXIT_OK);
        let w = out.record.widom.as_ref().unwrap();
        assert!((w.t_n - 0.25).abs() <= 1e-9, "t_3 = {}", w.t_n);
        assert!((w.w_n - 2.0).abs() <= 1e-8, "W_3 = {}", w.w_n);
        let cert = out.record.certificates.as_ref().unwrap();
        assert_eq!(cert.verdict, "optimal");
        assert!(cert.alternation.is_some());
    }

    #[test]
    fn record_round_trips_bitwise() {
        let dir = tempdir().unwrap();
        let spec = serde_json::json!({
            "command": "solve",
            "set": {"kind": "interval", "lo": -1.0, "hi": 1.0},
            "weight": {"kind": "abs_poly", "factors": [{"coeffs": [0.3, 1.0], "power": 1.0}]},
            "n": 2
        });
        let path = write_spec(dir.path(), "spec.json", &spec);
        let out = run(&path, &Flags::default()).unwrap();
        let parsed: ResultRecord = serde_json::from_str(&out.json).unwrap();
        assert_eq!(parsed, out.record);
        let json2 = format!("{}\n", serde_json::to_string_pretty(&parsed).unwrap());
        assert_eq!(json2, out.json);
    }

    #[test]
    fn overlapping_intervals_are_schema_errors() {
        let dir = tempdir().unwrap();
        let spec = serde_json::json!({
            "command": "solve",
            "set": {"kind": "interval_union", "intervals": [[-1.0, 0.5], [0.0, 1.0]]},
            "n": 2
        });
        let path = write_spec(dir.path(), "spec.json", &spec);
        let out_file = dir.path().join("result.json");
        let flags = Flags { out: Some(out_file.clone()), ..Flags::default() };
        let err = run(&path, &flags).unwrap_err();
        assert_eq!(err.exit_code(), EXIT_SCHEMA);
        assert!(!out_file.exists(), "schema errors must not write output");
    }

    #[test]
    fn unknown_fields_are_schema_errors() {
        let dir = tempdir().unwrap();
        let spec = serde_json::json!({
            "command": "solve",
            "set": {"kind": "interval", "lo": -1.0, "hi": 1.0},
            "n": 2,
            "surprise": true
        });
        let path = write_spec(dir.path(), "spec.json", &spec);
        let err = run(&path, &Flags::default()).unwrap_err();
        assert_eq!(err.exit_code(), EXIT_SCHEMA);
        assert_eq!(err.kind(), "parse");
    }

    #[test]
    fn csv_without_out_is_rejected() {
        let dir = tempdir().unwrap();
        let spec = serde_json::json!({
            "command": "capacity",
            "set": {"kind": "interval", "lo": -1.0, "hi": 1.0}
        });
        let path = write_spec(dir.path(), "spec.json", &spec);
        let flags = Flags { format: Format::Csv, ..Flags::default() };
        let err = run(&path, &flags).unwrap_err();
        assert_eq!(err.exit_code(), EXIT_SCHEMA);
    }

    #[test]
    fn capacity_of_interval() {
        let dir = tempdir().unwrap();
        let spec = serde_json::json!({
            "command": "capacity",
            "set": {"kind": "interval", "lo": -1.0, "hi": 1.0}
        });
        let path = write_spec(dir.path(), "spec.json", &spec);
        let out = run(&path, &Flags::default()).unwrap();
        let cap = out.record.capacity.as_ref().unwrap();
        assert!((cap.value - 0.5).abs() <= 1e-15);
        assert!(cap.exact);
    }

    #[test]
    fn certify_reuses_stored_result() {
        let dir = tempdir().unwrap();
        let solve_spec = serde_json::json!({
            "command": "solve",
            "set": {"kind": "interval", "lo": -1.0, "hi": 1.0},
            "n": 3
        });
        let spec_path = write_spec(dir.path(), "solve.json", &solve_spec);
        let stored = dir.path().join("stored.json");
        let flags = Flags { out: Some(stored.clone()), ..Flags::default() };
        let out = run(&spec_path, &flags).unwrap();
        assert_eq!(out.exit, EXIT_OK);

        let certify_spec = serde_json::json!({
            "command": "certify",
            "result_file": "stored.json"
        });
        let certify_path = write_spec(dir.path(), "certify.json", &certify_spec);
        let out2 = run(&certify_path, &Flags::default()).unwrap();
        assert_eq!(out2.exit, EXIT_OK);
        let cert = out2.record.certificates.as_ref().unwrap();
        assert_eq!(cert.verdict, "optimal");
        assert_eq!(
            out2.record.result.as_ref().unwrap().coefficients,
            out.record.result.as_ref().unwrap().coefficients,
        );
    }

    #[test]
    fn unconverged_solve_exits_three_but_writes() {
        let dir = tempdir().unwrap();
        let spec = serde_json::json!({
            "command": "solve",
            "set": {"kind": "circle", "center": [0.0, 0.0], "radius": 1.0},
            "weight": {"kind": "abs_poly", "factors": [{"coeffs": [-0.3, 1.0], "power": 1.0}]},
            "n": 2,
            "method": "lawson",
            "max_iter": 1,
            "grid": 64
        });
        let path = write_spec(dir.path(), "spec.json", &spec);
        let out_file = dir.path().join("result.json");
        let flags = Flags { out: Some(out_file.clone()), ..Flags::default() };
        let out = run(&path, &flags).unwrap();
        assert_eq!(out.exit, EXIT_SOLVER);
        assert!(out_file.exists(), "an unconverged solve still writes its best iterate");
        assert!(!out.record.result.as_ref().unwrap().converged);
    }

    #[test]
    fn reproducible_runs_are_byte_identical() {
        let dir = tempdir().unwrap();
        let spec = serde_json::json!({
            "command": "widom",
            "set": {"kind": "interval", "lo": -1.0, "hi": 1.0},
            "n": 2,
            "seed": 7
        });
        let path = write_spec(dir.path(), "spec.json", &spec);
        let flags = Flags { reproducible: true, ..Flags::default() };
        let a = run(&path, &flags).unwrap();
        let b = run(&path, &flags).unwrap();
        assert_eq!(a.json, b.json);
        assert!(a.record.wall_clock_ms.is_none());
    }

    #[test]
    fn preimage_command_checks_both_routes() {
        let dir = tempdir().unwrap();
        let spec = serde_json::json!({
            "command": "preimage",
            "set": {
                "kind": "preimage",
                "map": [-2.0, 0.0, 1.0],
                "base": {"kind": "interval", "lo": -1.0, "hi": 1.0}
            },
            "n": 2
        });
        let path = write_spec(dir.path(), "spec.json", &spec);
        let out = run(&path, &Flags::default()).unwrap();
        assert_eq!(out.exit, EXIT_OK);
        let p = out.record.preimage.as_ref().unwrap();
        assert!(p.coeff_max_diff <= 1e-6, "routes differ by {}", p.coeff_max_diff);
        assert!(p.widom_gap <= 1e-6, "Widom gap {}", p.widom_gap);
        assert_eq!(p.direct.degree, 4);
    }

    #[test]
    fn sharpness_csv_has_one_row_per_eps() {
        let dir = tempdir().unwrap();
        let spec = serde_json::json!({
            "command": "sharpness",
            "set": {"kind": "interval", "lo": -1.0, "hi": 1.0},
            "n": 2,
            "eps": [0.3, 0.1]
        });
        let path = write_spec(dir.path(), "spec.json", &spec);
        let out_file = dir.path().join("sweep.json");
        let flags = Flags { out: Some(out_file.clone()), format: Format::Csv, ..Flags::default() };
        let out = run(&path, &flags).unwrap();
        assert_eq!(out.exit, EXIT_OK);
        let table = fs::read_to_string(dir.path().join("sweep.csv")).unwrap();
        let rows: Vec<&str> = table.lines().collect();
        assert_eq!(rows.len(), 3, "header plus one row per eps:\n{table}");
        assert!(rows[0].starts_with("eps,ratio"));
        assert!(rows[1].starts_with("0.3,"));
        assert!(rows[2].starts_with("0.1,"));
    }

    #[test]
    fn bounds_command_reports_pass() {
        let dir = tempdir().unwrap();
        let spec = serde_json::json!({
            "command": "bounds",
            "set": {"kind": "interval", "lo": -1.0, "hi": 1.0},
            "weight": {"kind": "abs_poly", "factors": [{"coeffs": [1.0, 0.0, 1.0], "power": 0.5}]},
            "n": 2,
            "samples": 4
        });
        let path = write_spec(dir.path(), "spec.json", &spec);
        let out = run(&path, &Flags::default()).unwrap();
        assert_eq!(out.exit, EXIT_OK);
        assert_eq!(out.record.bounds.len(), 3);
        for b in &out.record.bounds {
            assert!(b.pass, "{} failed: margin {}", b.name, b.margin);
        }
    }

    #[test]
    fn error_json_is_machine_readable() {
        let err = CliError::invalid("set", "intervals overlap");
        let v: serde_json::Value = serde_json::from_str(&err.to_json()).unwrap();
        assert_eq!(v["error"]["kind"], "invalid");
        assert_eq!(v["error"]["exit"], 2);
        assert!(v["error"]["reason"].as_str().unwrap().contains("intervals overlap"));
    }

    #[test]
    fn ambiguous_certificates_map_to_exit_four() {
        let err = CliError::Certificate(
            CertificateError::Ambiguous { residual: 3e-8, tol: 1e-8 }.to_string(),
        );
        assert_eq!(err.exit_code(), EXIT_CERTIFICATE);
    }

    #[test]
    fn flags_override_spec_options() {
        let spec = ProblemSpec {
            command: Command::Solve,
            set: None,
            weight: None,
            n: Some(2),
            method: None,
            tol: Some(1e-6),
            grid: Some(256),
            quad: None,
            max_iter: None,
            seed: Some(1),
            eps: None,
            use_poly_approx: None,
            samples: None,
            result_file: None,
        };
        let flags = Flags { grid: Some(512), seed: Some(9), ..Flags::default() };
        let opts = spec.solve_opts(&flags).unwrap();
        assert_eq!(opts.grid_density, 512);
        assert_eq!(opts.seed, 9);
        assert_eq!(opts.tol, Some(1e-6));
    }
}
