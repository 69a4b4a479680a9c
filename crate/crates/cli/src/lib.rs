//! Batch front end: file IO, method dispatch, experiment runners, report
//! emission. Every command is a pure function of its files, flags, and
//! seed; rerunning with the same inputs produces byte-identical reports.

use std::fmt;
use std::fs;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use matconj::experiment::experiment_to_csv;
use matconj::io::{matrix_from_csv, matrix_from_json, matrix_to_csv, MatrixFile};
use matconj::{
    abs_matrix, bound_interpolation_diag, bound_spectral, bound_triangular, bound_von_neumann,
    conjugating_polynomial, convergence_study, eigen_structure, evaluate, operator_norm,
    polar_representation, random_experiment, schur_decompose, sign_decomposition, CMatrix,
    ErrorClass, FunctionSpec, Method, QuadratureConfig, Spectrum, StudyMode, WirtingerFunction,
};

#[derive(Debug)]
pub enum CliError {
    Core(matconj::Error),
    File { path: String, message: String },
    Usage(String),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Core(e) => write!(f, "{e}"),
            CliError::File { path, message } => write!(f, "{path}: {message}"),
            CliError::Usage(msg) => write!(f, "{msg}"),
        }
    }
}

impl From<matconj::Error> for CliError {
    fn from(e: matconj::Error) -> Self {
        CliError::Core(e)
    }
}

impl CliError {
    /// 1 file/parse, 2 domain, 3 numerical failure.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::File { .. } | CliError::Usage(_) => 1,
            CliError::Core(e) => match e.class() {
                ErrorClass::Input => 1,
                ErrorClass::Domain => 2,
                ErrorClass::Numerical => 3,
            },
        }
    }
}

#[derive(Parser, Debug)]
#[command(
    name = "matconj",
    version,
    about = "Matrix functional calculus for merely-smooth functions: conjugates, absolute values, polar and sign decompositions, norm bounds, and quadrature studies"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Evaluate phi(A) for a scalar function phi given in a function spec
    Funcval(FuncvalArgs),
    /// Conjugate A^c of the input matrix
    Conjugate(MatrixCmdArgs),
    /// Matrix absolute value abs(A) = (A A^c)^{1/2}
    Abs(MatrixCmdArgs),
    /// Polar representation A = abs(A) V
    Polar(MatrixCmdArgs),
    /// Sign decomposition A = sign(A) N
    Sign(MatrixCmdArgs),
    /// All applicable norm bounds for A^c plus the realized norm
    Bounds(MatrixCmdArgs),
    /// Disc-omission convergence study for the conjugate
    Study(StudyArgs),
    /// Random-matrix statistics of the conjugate norm ratio
    RandomExperiment(ExperimentArgs),
}

#[derive(Args, Debug, Clone)]
pub struct CommonArgs {
    /// Matrix file, JSON ({"rows":n,"cols":n,"data":[[re,im],...]}) or CSV
    /// ("a+bi" entries)
    #[arg(long)]
    pub input: PathBuf,
    /// Evaluation route: hermite, parlett, or integral
    #[arg(long, default_value = "parlett")]
    pub method: String,
    /// Eigenvalue clustering tolerance; default 1e-8 max(1, ||A||)
    #[arg(long)]
    pub cluster_tol: Option<f64>,
    #[arg(long, default_value_t = 256)]
    pub angular_nodes: usize,
    #[arg(long, default_value_t = 64)]
    pub radial_nodes: usize,
    /// Output path; stdout when absent
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// json (full report) or csv (plot-ready data only)
    #[arg(long, default_value = "json")]
    pub format: String,
    /// Cross-check the result against an alternate method
    #[arg(long)]
    pub check: bool,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Args, Debug)]
pub struct FuncvalArgs {
    #[command(flatten)]
    pub common: CommonArgs,
    /// Function spec: a builtin name (tau, abs, arg, sign) or inline JSON
    #[arg(long = "fn", value_name = "SPEC", conflicts_with = "fn_file")]
    pub fn_spec: Option<String>,
    /// Read the function spec JSON from a file
    #[arg(long = "fn-file", value_name = "PATH")]
    pub fn_file: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct MatrixCmdArgs {
    #[command(flatten)]
    pub common: CommonArgs,
}

#[derive(Args, Debug)]
pub struct StudyArgs {
    #[command(flatten)]
    pub common: CommonArgs,
    /// Strictly decreasing omitted-disc radii, comma separated
    #[arg(long = "eps-list", value_delimiter = ',', num_args = 0..)]
    pub eps_list: Vec<f64>,
    /// boundary_only, with_area_centered, or with_area_offcenter
    #[arg(long, default_value = "with_area_centered")]
    pub mode: String,
}

#[derive(Args, Debug)]
pub struct ExperimentArgs {
    /// Matrix sizes, comma separated
    #[arg(long = "n-list", value_delimiter = ',', num_args = 0.., default_values_t = vec![50usize, 100, 200])]
    pub n_list: Vec<usize>,
    #[arg(long, default_value_t = 20)]
    pub trials: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, default_value = "json")]
    pub format: String,
}

// ------------------------------------------------------------------ report

#[derive(Serialize)]
struct ConfigEcho {
    input: Option<String>,
    function: Option<String>,
    method: Option<String>,
    cluster_tol: Option<f64>,
    angular_nodes: Option<usize>,
    radial_nodes: Option<usize>,
    format: String,
    check: bool,
    seed: u64,
    eps_list: Option<Vec<f64>>,
    mode: Option<String>,
    n_list: Option<Vec<usize>>,
    trials: Option<usize>,
}

#[derive(Serialize)]
struct ClusterInfo {
    cluster_tol: f64,
    count: usize,
    representatives: Vec<[f64; 2]>,
    exponent_bounds: Vec<usize>,
    min_separation: Option<f64>,
}

impl ClusterInfo {
    fn from_spectrum(spec: &Spectrum) -> Self {
        ClusterInfo {
            cluster_tol: spec.cluster_tol,
            count: spec.clusters.len(),
            representatives: spec.representatives().iter().map(|z| [z.re, z.im]).collect(),
            exponent_bounds: spec.clusters.iter().map(|c| c.exponent_bound).collect(),
            min_separation: spec.min_separation(),
        }
    }
}

#[derive(Serialize)]
struct CheckInfo {
    alternate_method: String,
    max_abs_diff: f64,
}

#[derive(Serialize)]
struct VonNeumannInfo {
    value: f64,
    radius: f64,
    samples: usize,
}

#[derive(Serialize)]
#[serde(untagged)]
enum InterpolationInfo {
    Value { value: f64 },
    Inapplicable { inapplicable: String },
}

#[derive(Serialize)]
struct BoundsInfo {
    spectral_lower: f64,
    spectral_upper: Option<f64>,
    kappa: Option<f64>,
    triangular: f64,
    von_neumann: VonNeumannInfo,
    interpolation: InterpolationInfo,
    conjugate_norm: f64,
}

#[derive(Serialize)]
struct Report {
    command: String,
    config: ConfigEcho,
    #[serde(skip_serializing_if = "Option::is_none")]
    clusters: Option<ClusterInfo>,
    #[serde(skip_serializing_if = "Option::is_none")]
    result: Option<MatrixFile>,
    #[serde(skip_serializing_if = "Option::is_none")]
    abs: Option<MatrixFile>,
    #[serde(skip_serializing_if = "Option::is_none")]
    v: Option<MatrixFile>,
    #[serde(skip_serializing_if = "Option::is_none")]
    sign: Option<MatrixFile>,
    #[serde(skip_serializing_if = "Option::is_none")]
    n_part: Option<MatrixFile>,
    #[serde(skip_serializing_if = "Option::is_none")]
    bounds: Option<BoundsInfo>,
    #[serde(skip_serializing_if = "Option::is_none")]
    study: Option<matconj::StudyTable>,
    #[serde(skip_serializing_if = "Option::is_none")]
    experiment: Option<Vec<matconj::ExperimentRow>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    check: Option<CheckInfo>,
    notes: Vec<String>,
}

impl Report {
    fn new(command: &str, config: ConfigEcho) -> Self {
        Report {
            command: command.to_string(),
            config,
            clusters: None,
            result: None,
            abs: None,
            v: None,
            sign: None,
            n_part: None,
            bounds: None,
            study: None,
            experiment: None,
            check: None,
            notes: Vec::new(),
        }
    }
}

// -------------------------------------------------------------------- run

fn read_file(path: &PathBuf) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::File {
        path: path.display().to_string(),
        message: e.to_string(),
    })
}

fn load_matrix(path: &PathBuf) -> Result<CMatrix, CliError> {
    let text = read_file(path)?;
    let result = if text.trim_start().starts_with('{') {
        matrix_from_json(&text)
    } else {
        matrix_from_csv(&text)
    };
    result.map_err(CliError::from)
}

fn parse_method(name: &str) -> Result<Method, CliError> {
    name.parse::<Method>().map_err(CliError::from)
}

fn resolve_tol(common: &CommonArgs, a: &CMatrix) -> f64 {
    common.cluster_tol.unwrap_or_else(|| matconj::default_cluster_tol(a))
}

fn quadrature_config(common: &CommonArgs) -> Result<QuadratureConfig, CliError> {
    QuadratureConfig::new(common.angular_nodes, common.radial_nodes).map_err(CliError::from)
}

fn write_output(out: &Option<PathBuf>, payload: &str) -> Result<(), CliError> {
    match out {
        Some(path) => fs::write(path, payload).map_err(|e| CliError::File {
            path: path.display().to_string(),
            message: e.to_string(),
        }),
        None => {
            println!("{payload}");
            Ok(())
        }
    }
}

fn echo_common(command: &CommonArgs, function: Option<String>, tol: Option<f64>) -> ConfigEcho {
    ConfigEcho {
        input: Some(command.input.display().to_string()),
        function,
        method: Some(command.method.clone()),
        cluster_tol: tol,
        angular_nodes: Some(command.angular_nodes),
        radial_nodes: Some(command.radial_nodes),
        format: command.format.clone(),
        check: command.check,
        seed: command.seed,
        eps_list: None,
        mode: None,
        n_list: None,
        trials: None,
    }
}

fn spectrum_of(a: &CMatrix, tol: f64) -> Result<Spectrum, CliError> {
    let s = schur_decompose(a, tol)?;
    Ok(eigen_structure(&s, tol))
}

fn emit(report: &Report, format: &str, out: &Option<PathBuf>, csv: String) -> Result<(), CliError> {
    match format {
        "json" => {
            let payload =
                serde_json::to_string_pretty(report).expect("report serialization cannot fail");
            write_output(out, &payload)
        }
        "csv" => write_output(out, &csv),
        other => Err(CliError::Usage(format!("unknown format '{other}' (expected json or csv)"))),
    }
}

fn max_abs_diff(a: &CMatrix, b: &CMatrix) -> f64 {
    (a - b).max_abs()
}

/// Method dispatch honoring the quadrature node flags for the integral
/// route.
fn evaluate_with_nodes(
    f: &WirtingerFunction,
    a: &CMatrix,
    method: Method,
    tol: f64,
    common: &CommonArgs,
) -> Result<CMatrix, CliError> {
    if method == Method::Integral {
        let spectrum = spectrum_of(a, tol)?;
        let discs = matconj::DiscSet::around_spectrum(&spectrum, operator_norm(a))?;
        let cfg = quadrature_config(common)?;
        Ok(matconj::phi_integral(f, a, &discs, &cfg)?)
    } else {
        Ok(evaluate(f, a, method, tol)?)
    }
}

fn run_funcval(args: &FuncvalArgs) -> Result<(), CliError> {
    let common = &args.common;
    let spec_text = match (&args.fn_spec, &args.fn_file) {
        (Some(inline), None) => inline.clone(),
        (None, Some(path)) => read_file(path)?,
        _ => return Err(CliError::Usage("exactly one of --fn or --fn-file is required".into())),
    };
    let fn_spec = FunctionSpec::parse(&spec_text)?;
    let f = fn_spec.build();
    let a = load_matrix(&common.input)?;
    let method = parse_method(&common.method)?;
    let tol = resolve_tol(common, &a);
    let spectrum = spectrum_of(&a, tol)?;
    let result = evaluate_with_nodes(&f, &a, method, tol, common)?;

    let mut report =
        Report::new("funcval", echo_common(common, Some(spec_text.clone()), Some(tol)));
    report.clusters = Some(ClusterInfo::from_spectrum(&spectrum));
    report.result = Some(MatrixFile::from(&result));
    if common.check {
        let alternate = match method {
            Method::Parlett => Method::Hermite,
            Method::Hermite => Method::Parlett,
            Method::Integral => Method::Parlett,
        };
        let other = evaluate_with_nodes(&f, &a, alternate, tol, common)?;
        report.check = Some(CheckInfo {
            alternate_method: alternate.name().to_string(),
            max_abs_diff: max_abs_diff(&result, &other),
        });
    }
    if matches!(fn_spec, FunctionSpec::Tau) {
        let adjoint_diff = max_abs_diff(&result, &a.adjoint());
        if adjoint_diff <= 1e-8 * (1.0 + a.max_abs()) {
            report
                .notes
                .push("result matches the conjugate transpose: the input is normal".to_string());
        } else {
            report.notes.push(format!(
                "result differs from the conjugate transpose by {adjoint_diff:e}: the input is not normal"
            ));
        }
    }
    emit(&report, &common.format, &common.out, matrix_to_csv(&result))
}

fn run_conjugate(args: &MatrixCmdArgs) -> Result<(), CliError> {
    let common = &args.common;
    let a = load_matrix(&common.input)?;
    let method = parse_method(&common.method)?;
    let tol = resolve_tol(common, &a);
    let spectrum = spectrum_of(&a, tol)?;
    let result = evaluate_with_nodes(&WirtingerFunction::tau(), &a, method, tol, common)?;
    let mut report = Report::new("conjugate", echo_common(common, None, Some(tol)));
    report.clusters = Some(ClusterInfo::from_spectrum(&spectrum));
    report.result = Some(MatrixFile::from(&result));
    if common.check {
        let alternate = if method == Method::Parlett { Method::Hermite } else { Method::Parlett };
        let other = evaluate_with_nodes(&WirtingerFunction::tau(), &a, alternate, tol, common)?;
        report.check = Some(CheckInfo {
            alternate_method: alternate.name().to_string(),
            max_abs_diff: max_abs_diff(&result, &other),
        });
    }
    emit(&report, &common.format, &common.out, matrix_to_csv(&result))
}

fn run_abs(args: &MatrixCmdArgs) -> Result<(), CliError> {
    let common = &args.common;
    let a = load_matrix(&common.input)?;
    let tol = resolve_tol(common, &a);
    let spectrum = spectrum_of(&a, tol)?;
    let result = abs_matrix(&a)?;
    let mut report = Report::new("abs", echo_common(common, None, Some(tol)));
    report.clusters = Some(ClusterInfo::from_spectrum(&spectrum));
    report.result = Some(MatrixFile::from(&result));
    // not idempotent when a nontrivial block sits on a nonzero eigenvalue
    let twice = abs_matrix(&result)?;
    let drift = max_abs_diff(&twice, &result);
    if drift > 1e-6 * (1.0 + result.max_abs()) {
        report.notes.push(format!("abs(abs(A)) differs from abs(A) by {drift:e}"));
    } else {
        report.notes.push("abs(abs(A)) coincides with abs(A) on this input".to_string());
    }
    emit(&report, &common.format, &common.out, matrix_to_csv(&result))
}

fn run_polar(args: &MatrixCmdArgs) -> Result<(), CliError> {
    let common = &args.common;
    let a = load_matrix(&common.input)?;
    let tol = resolve_tol(common, &a);
    let spectrum = spectrum_of(&a, tol)?;
    let parts = polar_representation(&a)?;
    let mut report = Report::new("polar", echo_common(common, None, Some(tol)));
    report.clusters = Some(ClusterInfo::from_spectrum(&spectrum));
    report.abs = Some(MatrixFile::from(&parts.abs_part));
    report.v = Some(MatrixFile::from(&parts.v_part));
    let csv = format!("{}\n{}", matrix_to_csv(&parts.abs_part), matrix_to_csv(&parts.v_part));
    emit(&report, &common.format, &common.out, csv)
}

fn run_sign(args: &MatrixCmdArgs) -> Result<(), CliError> {
    let common = &args.common;
    let a = load_matrix(&common.input)?;
    let tol = resolve_tol(common, &a);
    let spectrum = spectrum_of(&a, tol)?;
    let (sign, n_part) = sign_decomposition(&a)?;
    let mut report = Report::new("sign", echo_common(common, None, Some(tol)));
    report.clusters = Some(ClusterInfo::from_spectrum(&spectrum));
    report.sign = Some(MatrixFile::from(&sign));
    report.n_part = Some(MatrixFile::from(&n_part));
    let csv = format!("{}\n{}", matrix_to_csv(&sign), matrix_to_csv(&n_part));
    emit(&report, &common.format, &common.out, csv)
}

fn run_bounds(args: &MatrixCmdArgs) -> Result<(), CliError> {
    let common = &args.common;
    let a = load_matrix(&common.input)?;
    let tol = resolve_tol(common, &a);
    let spectrum = spectrum_of(&a, tol)?;
    let norm = operator_norm(&a);
    let conj = evaluate(&WirtingerFunction::tau(), &a, Method::Parlett, tol)?;
    let conj_norm = operator_norm(&conj);
    let spectral = bound_spectral(&a)?;
    let triangular = bound_triangular(&a)?;
    let poly = conjugating_polynomial(&spectrum)?;
    let von_neumann = bound_von_neumann(&poly, norm);
    let interpolation = if !spectrum.is_simple() {
        InterpolationInfo::Inapplicable {
            inapplicable: "spectrum is not simple within the cluster tolerance".to_string(),
        }
    } else if norm > 1.0 {
        InterpolationInfo::Inapplicable { inapplicable: format!("operator norm {norm} exceeds 1") }
    } else if spectrum.representatives().iter().any(|z| z.norm() >= 1.0) {
        InterpolationInfo::Inapplicable {
            inapplicable: "spectrum is not strictly inside the unit disc".to_string(),
        }
    } else {
        let values: Vec<f64> = spectrum.representatives().iter().map(|z| z.norm()).collect();
        InterpolationInfo::Value { value: bound_interpolation_diag(&spectrum, &values)? }
    };
    let mut report = Report::new("bounds", echo_common(common, None, Some(tol)));
    report.clusters = Some(ClusterInfo::from_spectrum(&spectrum));
    let bounds = BoundsInfo {
        spectral_lower: spectral.lower,
        spectral_upper: spectral.upper,
        kappa: spectral.kappa,
        triangular,
        von_neumann: VonNeumannInfo {
            value: von_neumann.value,
            radius: norm,
            samples: von_neumann.samples,
        },
        interpolation,
        conjugate_norm: conj_norm,
    };
    let csv = {
        let mut s = String::from("bound,value\n");
        s.push_str(&format!("spectral_lower,{}\n", bounds.spectral_lower));
        if let Some(u) = bounds.spectral_upper {
            s.push_str(&format!("spectral_upper,{u}\n"));
        }
        s.push_str(&format!("triangular,{}\n", bounds.triangular));
        s.push_str(&format!("von_neumann,{}\n", bounds.von_neumann.value));
        if let InterpolationInfo::Value { value } = bounds.interpolation {
            s.push_str(&format!("interpolation,{value}\n"));
        }
        s.push_str(&format!("conjugate_norm,{}\n", bounds.conjugate_norm));
        s
    };
    report.bounds = Some(bounds);
    emit(&report, &common.format, &common.out, csv)
}

fn run_study(args: &StudyArgs) -> Result<(), CliError> {
    let common = &args.common;
    let a = load_matrix(&common.input)?;
    let tol = resolve_tol(common, &a);
    let mode: StudyMode = args.mode.parse()?;
    let cfg = quadrature_config(common)?;
    let table = convergence_study(&a, &args.eps_list, mode, &cfg, tol)?;
    let mut config = echo_common(common, None, Some(tol));
    config.eps_list = Some(args.eps_list.clone());
    config.mode = Some(args.mode.clone());
    let mut report = Report::new("study", config);
    let spectrum = spectrum_of(&a, tol)?;
    report.clusters = Some(ClusterInfo::from_spectrum(&spectrum));
    let csv = table.to_csv();
    report.study = Some(table);
    emit(&report, &common.format, &common.out, csv)
}

fn run_experiment(args: &ExperimentArgs) -> Result<(), CliError> {
    let rows = random_experiment(&args.n_list, args.trials, args.seed)?;
    let config = ConfigEcho {
        input: None,
        function: None,
        method: None,
        cluster_tol: None,
        angular_nodes: None,
        radial_nodes: None,
        format: args.format.clone(),
        check: false,
        seed: args.seed,
        eps_list: None,
        mode: None,
        n_list: Some(args.n_list.clone()),
        trials: Some(args.trials),
    };
    let mut report = Report::new("random-experiment", config);
    let csv = experiment_to_csv(&rows);
    report.experiment = Some(rows);
    emit(&report, &args.format, &args.out, csv)
}

pub fn run(cli: &Cli) -> Result<(), CliError> {
    match &cli.command {
        Command::Funcval(args) => run_funcval(args),
        Command::Conjugate(args) => run_conjugate(args),
        Command::Abs(args) => run_abs(args),
        Command::Polar(args) => run_polar(args),
        Command::Sign(args) => run_sign(args),
        Command::Bounds(args) => run_bounds(args),
        Command::Study(args) => run_study(args),
        Command::RandomExperiment(args) => run_experiment(args),
    }
}
