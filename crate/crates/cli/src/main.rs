//! Command line front end over the classification and verification
//! library.
//!
//! Every subcommand prints one versioned report (JSON by default, CSV on
//! request) to stdout or to `--out`. Exit status: 0 on success, 1 for
//! invalid input or I/O failures, 2 when the inputs are well formed but
//! name no representation, or an equivalence query lands on a chain that
//! terminates on one side.

mod report;

use std::fmt;
use std::fs;
use std::path::PathBuf;
use std::process::exit;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};

use qosc_core::{
    at_classification_boundary, b_star, casimir_values, classify_label, enumerate_classes,
    equivalent, lambda_closed, lambda_recurrence, thresholds, AlgebraParams, DMatrix, Error,
    Family, OperatorQuad, RepClass, RepLabel, Tolerances,
};

use report::{
    CasimirEcho, ClassRow, EquivalenceSection, LabelEcho, LevelValue, LimitRow, LimitsSection,
    MatrixSection, ParamsEcho, Report, ResidualSection, ScanCell, ScanSection, SpectrumSection,
    ThresholdsEcho, TolerancesEcho,
};

#[derive(Parser)]
#[command(
    name = "qosc",
    version,
    about = "Classify and numerically verify the irreducible representations \
             of a q-deformed oscillator algebra with a reflection operator"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the families at (q, nu0, B), resolving a full label when
    /// lambda0 is given.
    Classify {
        #[command(flatten)]
        params: ParamOpts,
        #[command(flatten)]
        label: LabelOpts,
        #[command(flatten)]
        out: OutOpts,
    },
    /// Print the ladder eigenvalues lambda_n over a level window.
    Spectrum {
        #[command(flatten)]
        params: ParamOpts,
        #[command(flatten)]
        label: LabelOpts,
        /// Level window, written lo,hi or as a half-width r meaning -r,r.
        /// Clipped to the levels the resolved family occupies.
        #[arg(
            long,
            value_parser = parse_window,
            default_value = "-8,8",
            allow_hyphen_values = true
        )]
        window: (i64, i64),
        #[command(flatten)]
        out: OutOpts,
    },
    /// Emit the matrix block of a, a+, N, K on the resolved chain.
    Matrix {
        #[command(flatten)]
        params: ParamOpts,
        #[command(flatten)]
        label: LabelOpts,
        /// Basis levels in the block; defaults to the family dimension,
        /// or 8 on infinite chains.
        #[arg(long)]
        dim: Option<usize>,
        #[command(flatten)]
        out: OutOpts,
    },
    /// Build the matrix block and measure every defining relation on it.
    Verify {
        #[command(flatten)]
        params: ParamOpts,
        #[command(flatten)]
        label: LabelOpts,
        /// Basis levels in the block; defaults to the family dimension,
        /// or 8 on infinite chains.
        #[arg(long)]
        dim: Option<usize>,
        #[command(flatten)]
        out: OutOpts,
    },
    /// Tabulate admissible families over a grid of (q, B) cells.
    Scan {
        /// Comma-separated deformation parameters, each positive and not 1.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required = true)]
        q_values: Vec<f64>,
        /// Comma-separated reflection invariants B.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required = true)]
        b_values: Vec<f64>,
        #[command(flatten)]
        out: OutOpts,
    },
    /// Test whether two doubly infinite labels describe the same chain.
    Equiv {
        #[command(flatten)]
        params: ParamOpts,
        /// First label, written nu0,B,lambda0.
        #[arg(long, value_parser = parse_triple, allow_hyphen_values = true)]
        a: (f64, f64, f64),
        /// Second label, written nu0,B,lambda0.
        #[arg(long, value_parser = parse_triple, allow_hyphen_values = true)]
        b: (f64, f64, f64),
        #[command(flatten)]
        out: OutOpts,
    },
    /// Track the catalogue along a parameter path: q walking toward 1 at
    /// fixed B, or B walking at fixed q. A "B -> 0" path doubles as the
    /// vanishing-reflection probe, since spectra depend on the coupling
    /// alpha only through B.
    Limits {
        /// Comma-separated q path, walked at fixed --B.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        q_values: Option<Vec<f64>>,
        /// Reflection invariant held fixed along a q path.
        #[arg(long = "B", allow_hyphen_values = true)]
        b: Option<f64>,
        /// Comma-separated B path, walked at fixed --q.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        b_values: Option<Vec<f64>>,
        /// Deformation parameter held fixed along a B path.
        #[arg(long, allow_hyphen_values = true)]
        q: Option<f64>,
        /// Report only this family, with an exists flag per path point.
        #[arg(long, value_parser = parse_family)]
        family: Option<Family>,
        /// Number-operator eigenvalue on level 0.
        #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
        nu0: f64,
        #[command(flatten)]
        out: OutOpts,
    },
}

#[derive(Args)]
struct ParamOpts {
    /// Deformation parameter q, positive and different from 1.
    #[arg(long, allow_hyphen_values = true)]
    q: f64,
    /// Reflection coupling alpha, nonzero.
    #[arg(long, default_value_t = 1.0, allow_hyphen_values = true)]
    alpha: f64,
}

#[derive(Args)]
struct LabelOpts {
    /// Number-operator eigenvalue on level 0.
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    nu0: f64,
    /// Reflection invariant B.
    #[arg(long = "B", allow_hyphen_values = true)]
    b: f64,
    /// a+a eigenvalue on level 0, nonnegative. When omitted, the first
    /// catalogued family that pins lambda0 supplies it.
    #[arg(long, allow_hyphen_values = true)]
    lambda0: Option<f64>,
}

#[derive(Args)]
struct OutOpts {
    /// Report format.
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    /// Write the report to this file instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Relative tolerance for numeric comparisons.
    #[arg(long, default_value_t = 1e-9, allow_hyphen_values = true)]
    tol: f64,
    /// Half-width for snapping B onto classification boundaries.
    #[arg(long = "boundary-eps", default_value_t = 1e-12, allow_hyphen_values = true)]
    boundary_eps: f64,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

fn parse_window(s: &str) -> Result<(i64, i64), String> {
    if let Some((lo, hi)) = s.split_once(',') {
        let lo: i64 = lo
            .trim()
            .parse()
            .map_err(|_| format!("invalid window bound {lo:?}"))?;
        let hi: i64 = hi
            .trim()
            .parse()
            .map_err(|_| format!("invalid window bound {hi:?}"))?;
        Ok((lo, hi))
    } else {
        let r: i64 = s
            .trim()
            .parse()
            .map_err(|_| format!("window must be lo,hi or a half-width, got {s:?}"))?;
        Ok((-r.abs(), r.abs()))
    }
}

fn parse_triple(s: &str) -> Result<(f64, f64, f64), String> {
    let parts: Vec<&str> = s.split(',').collect();
    let [nu0, b, lambda0] = parts.as_slice() else {
        return Err(format!("label must be nu0,B,lambda0, got {s:?}"));
    };
    let parse =
        |v: &str| -> Result<f64, String> { v.trim().parse().map_err(|_| format!("invalid number {v:?}")) };
    Ok((parse(nu0)?, parse(b)?, parse(lambda0)?))
}

const ALL_FAMILIES: [Family; 6] = [
    Family::OneDimensional,
    Family::TwoDimensionalOdd,
    Family::TwoDimensionalEven,
    Family::Fock,
    Family::AntiFock,
    Family::Unbounded,
];

fn parse_family(s: &str) -> Result<Family, String> {
    ALL_FAMILIES
        .into_iter()
        .find(|f| f.name().eq_ignore_ascii_case(s))
        .ok_or_else(|| {
            let names: Vec<&str> = ALL_FAMILIES.iter().map(|f| f.name()).collect();
            format!("unknown family {s:?}; expected one of {}", names.join(", "))
        })
}

#[derive(Debug)]
enum CliError {
    Core(Error),
    Io(std::io::Error),
    Input(String),
}

impl CliError {
    /// 2 marks a mathematically empty answer, 1 everything else.
    fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(Error::NoRepresentation { .. }) => 2,
            CliError::Core(Error::NotUnbounded(_)) => 2,
            _ => 1,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Core(e) => write!(f, "{e}"),
            CliError::Io(e) => write!(f, "{e}"),
            CliError::Input(msg) => write!(f, "{msg}"),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Core(e)
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e)
    }
}

fn main() {
    // Clap exits with 2 on parse failure by default; this tool reserves 2
    // for well-formed inputs that name no representation.
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let code = match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = err.print();
            exit(code);
        }
    };
    if let Err(err) = run(cli) {
        eprintln!("error: {err}");
        exit(err.exit_code());
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Classify { params, label, out } => classify_cmd(&params, &label, &out),
        Command::Spectrum {
            params,
            label,
            window,
            out,
        } => spectrum_cmd(&params, &label, window, &out),
        Command::Matrix {
            params,
            label,
            dim,
            out,
        } => matrix_cmd(&params, &label, dim, &out),
        Command::Verify {
            params,
            label,
            dim,
            out,
        } => verify_cmd(&params, &label, dim, &out),
        Command::Scan {
            q_values,
            b_values,
            out,
        } => scan_cmd(q_values, b_values, &out),
        Command::Equiv { params, a, b, out } => equiv_cmd(&params, a, b, &out),
        Command::Limits {
            q_values,
            b,
            b_values,
            q,
            family,
            nu0,
            out,
        } => limits_cmd(q_values, b, b_values, q, family, nu0, &out),
    }
}

fn tolerances(out: &OutOpts) -> Tolerances {
    Tolerances {
        rel: out.tol,
        boundary: out.boundary_eps,
        ..Tolerances::default()
    }
}

/// Resolves the label a construction command operates on. An explicit
/// lambda0 must classify; without one, the first catalogued family that
/// pins lambda0 supplies the canonical label.
fn resolve_label(
    params: &AlgebraParams,
    lopts: &LabelOpts,
    tol: &Tolerances,
) -> Result<(RepLabel, RepClass), CliError> {
    if let Some(lambda0) = lopts.lambda0 {
        let label = RepLabel::new(lopts.nu0, lopts.b, lambda0)?;
        let class = classify_label(params, &label, tol)?;
        return Ok((label, class));
    }
    let classes = enumerate_classes(params, lopts.nu0, lopts.b, tol);
    if let Some(class) = classes.iter().find(|c| c.forced_lambda0().is_some()) {
        let forced = class.forced_lambda0().expect("pinned by the filter");
        let label = RepLabel::new(lopts.nu0, lopts.b, forced)?;
        return Ok((label, *class));
    }
    match classes.first() {
        // Only free-lambda0 families live here; the caller must choose.
        Some(class) => Err(CliError::Input(format!(
            "--lambda0 is required: the {} family does not pin it",
            class.family()
        ))),
        None => Err(empty_region_error(params, lopts, tol)),
    }
}

/// Classifies a throwaway label so the rejection diagnostic explains
/// which bound on B the empty region violates.
fn empty_region_error(params: &AlgebraParams, lopts: &LabelOpts, tol: &Tolerances) -> CliError {
    match RepLabel::new(lopts.nu0, lopts.b, 0.0) {
        Ok(probe) => classify_label(params, &probe, tol)
            .expect_err("empty catalogue rejects every label")
            .into(),
        Err(e) => e.into(),
    }
}

fn params_echo(params: &AlgebraParams) -> ParamsEcho {
    ParamsEcho {
        q: params.q(),
        alpha: params.alpha(),
    }
}

fn tol_echo(tol: &Tolerances) -> TolerancesEcho {
    TolerancesEcho {
        rel: tol.rel,
        abs: tol.abs,
        boundary: tol.boundary,
    }
}

fn label_echo(label: &RepLabel) -> LabelEcho {
    LabelEcho {
        nu0: label.nu0(),
        b: label.b(),
        lambda0: Some(label.lambda0()),
    }
}

fn class_row(class: &RepClass, matched: Option<bool>) -> ClassRow {
    ClassRow {
        family: class.family().name().to_string(),
        index_lo: class.index_lo(),
        index_hi: class.index_hi(),
        forced_lambda0: class.forced_lambda0(),
        lambda0_min: class.lambda0_min().map(|m| m.min),
        lambda0_min_strict: class.lambda0_min().map(|m| m.strict),
        matched,
    }
}

fn emit(report: &Report, out: &OutOpts) -> Result<(), CliError> {
    let text = match out.format {
        Format::Json => report.to_json(),
        Format::Csv => report.to_csv(),
    };
    match &out.out {
        Some(path) => fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

fn classify_cmd(popts: &ParamOpts, lopts: &LabelOpts, out: &OutOpts) -> Result<(), CliError> {
    let params = AlgebraParams::new(popts.q, popts.alpha)?;
    let tol = tolerances(out);
    let classes = enumerate_classes(&params, lopts.nu0, lopts.b, &tol);

    // A full label resolves to one family; a bare (nu0, B) query only
    // enumerates, though an empty region still rejects with a diagnostic.
    let matched = match lopts.lambda0 {
        Some(lambda0) => {
            let label = RepLabel::new(lopts.nu0, lopts.b, lambda0)?;
            Some(classify_label(&params, &label, &tol)?)
        }
        None if classes.is_empty() => return Err(empty_region_error(&params, lopts, &tol)),
        None => None,
    };

    // b_star and d± depend on lambda0 in no way; e0 does, so it is only
    // reported when a lambda0 was supplied.
    let probe = RepLabel::new(lopts.nu0, lopts.b, lopts.lambda0.unwrap_or(0.0))?;
    let th = thresholds(&params, &probe);
    let cas = casimir_values(&params, &probe);

    let mut report = Report::new("classify", Some(params_echo(&params)), tol_echo(&tol));
    report.label = Some(LabelEcho {
        nu0: lopts.nu0,
        b: lopts.b,
        lambda0: lopts.lambda0,
    });
    report.thresholds = Some(ThresholdsEcho {
        b_star: th.b_star,
        d_plus: th.d_plus,
        d_minus: th.d_minus,
        e0: lopts.lambda0.map(|_| th.e0),
    });
    report.casimir = Some(CasimirEcho {
        c1: [cas.c1.re, cas.c1.im],
        c2: [cas.c2.re, cas.c2.im],
        c3: [cas.c3.re, cas.c3.im],
    });
    report.classes = Some(
        classes
            .iter()
            .map(|c| {
                let hit = matched.as_ref().map(|m| c.family() == m.family());
                class_row(c, hit)
            })
            .collect(),
    );
    report.matched = matched.map(|m| m.family().name().to_string());
    emit(&report, out)
}

fn spectrum_cmd(
    popts: &ParamOpts,
    lopts: &LabelOpts,
    window: (i64, i64),
    out: &OutOpts,
) -> Result<(), CliError> {
    let params = AlgebraParams::new(popts.q, popts.alpha)?;
    let tol = tolerances(out);
    let (label, class) = resolve_label(&params, lopts, &tol)?;
    // Forced families pin lambda0 exactly; report the canonical chain
    // rather than the user's within-tolerance variant.
    let eff = match class.forced_lambda0() {
        Some(forced) => label.with_lambda0(forced)?,
        None => label,
    };
    let lo = class.index_lo().map_or(window.0, |l| window.0.max(l));
    let hi = class.index_hi().map_or(window.1, |h| window.1.min(h));
    let spectrum = lambda_recurrence(&params, &eff, lo, hi, &tol)?;

    let mut report = Report::new("spectrum", Some(params_echo(&params)), tol_echo(&tol));
    report.label = Some(label_echo(&label));
    report.matched = Some(class.family().name().to_string());
    report.spectrum = Some(SpectrumSection {
        lo: spectrum.lo(),
        hi: spectrum.hi(),
        all_nonnegative: spectrum.all_nonnegative(),
        values: spectrum
            .iter()
            .map(|(n, lambda)| LevelValue { n, lambda })
            .collect(),
    });
    emit(&report, out)
}

fn resolve_dim(class: &RepClass, requested: Option<usize>) -> usize {
    match (class.finite_dim(), requested) {
        (_, Some(d)) => d,
        (Some(fd), None) => fd,
        (None, None) => 8,
    }
}

fn dense(m: &DMatrix<f64>) -> Vec<Vec<f64>> {
    m.row_iter()
        .map(|row| row.iter().copied().collect())
        .collect()
}

fn diagonal(m: &DMatrix<f64>) -> Vec<f64> {
    m.diagonal().iter().copied().collect()
}

fn matrix_cmd(
    popts: &ParamOpts,
    lopts: &LabelOpts,
    dim: Option<usize>,
    out: &OutOpts,
) -> Result<(), CliError> {
    let params = AlgebraParams::new(popts.q, popts.alpha)?;
    let tol = tolerances(out);
    let (label, class) = resolve_label(&params, lopts, &tol)?;
    let quad = OperatorQuad::build(&params, &label, &class, resolve_dim(&class, dim), &tol)?;

    let mut report = Report::new("matrix", Some(params_echo(&params)), tol_echo(&tol));
    report.label = Some(label_echo(&label));
    report.matrices = Some(MatrixSection {
        family: class.family().name().to_string(),
        dim: quad.dim(),
        index_offset: quad.index_offset(),
        a: dense(quad.a()),
        a_dag: dense(quad.a_dag()),
        n_diag: diagonal(quad.n_op()),
        k_diag: diagonal(quad.k_op()),
    });
    emit(&report, out)
}

fn verify_cmd(
    popts: &ParamOpts,
    lopts: &LabelOpts,
    dim: Option<usize>,
    out: &OutOpts,
) -> Result<(), CliError> {
    let params = AlgebraParams::new(popts.q, popts.alpha)?;
    let tol = tolerances(out);
    let (label, class) = resolve_label(&params, lopts, &tol)?;
    let quad = OperatorQuad::build(&params, &label, &class, resolve_dim(&class, dim), &tol)?;
    let residuals = quad.verify();

    let mut report = Report::new("verify", Some(params_echo(&params)), tol_echo(&tol));
    report.label = Some(label_echo(&label));
    report.residuals = Some(ResidualSection {
        family: class.family().name().to_string(),
        dim: quad.dim(),
        interior_dim: residuals.interior_dim,
        scale: residuals.scale,
        rel1: residuals.rel1,
        comm_n_a: residuals.comm_n_a,
        comm_n_adag: residuals.comm_n_adag,
        anti_k_a: residuals.anti_k_a,
        anti_k_adag: residuals.anti_k_adag,
        comm_n_k: residuals.comm_n_k,
        casimir: residuals.casimir,
        max_residual: residuals.max_residual(),
        within_tolerance: residuals.max_residual() <= tol.rel * residuals.scale.max(1.0),
    });
    emit(&report, out)
}

fn scan_cmd(q_values: Vec<f64>, b_values: Vec<f64>, out: &OutOpts) -> Result<(), CliError> {
    let tol = tolerances(out);
    let mut cells = Vec::new();
    for &q in &q_values {
        // Family membership depends only on (q, B); alpha is immaterial.
        let params = AlgebraParams::new(q, 1.0)?;
        for &b in &b_values {
            let families = enumerate_classes(&params, 0.0, b, &tol)
                .iter()
                .map(|c| c.family().name().to_string())
                .collect();
            cells.push(ScanCell {
                q,
                b,
                families,
                boundary: at_classification_boundary(&params, b, &tol),
            });
        }
    }

    let mut report = Report::new("scan", None, tol_echo(&tol));
    report.scan = Some(ScanSection {
        q_values,
        b_values,
        cells,
    });
    emit(&report, out)
}

fn equiv_cmd(
    popts: &ParamOpts,
    a: (f64, f64, f64),
    b: (f64, f64, f64),
    out: &OutOpts,
) -> Result<(), CliError> {
    let params = AlgebraParams::new(popts.q, popts.alpha)?;
    let tol = tolerances(out);
    let label_a = RepLabel::new(a.0, a.1, a.2)?;
    let label_b = RepLabel::new(b.0, b.1, b.2)?;
    let class_a = classify_label(&params, &label_a, &tol)?;
    let class_b = classify_label(&params, &label_b, &tol)?;
    let check = equivalent(&params, &label_a, &label_b, &tol)?;

    let mut report = Report::new("equiv", Some(params_echo(&params)), tol_echo(&tol));
    report.labels = Some(vec![label_echo(&label_a), label_echo(&label_b)]);
    report.equivalence = Some(EquivalenceSection {
        equivalent: check.equivalent,
        shift: check.shift,
        family_a: class_a.family().name().to_string(),
        family_b: class_b.family().name().to_string(),
    });
    emit(&report, out)
}

/// Levels whose ladder eigenvalues a limits row reports: the whole chain
/// for finite families, the three levels nearest the closed end for
/// half-infinite ones, none for doubly infinite chains.
fn head_levels(class: &RepClass) -> Vec<i64> {
    match (class.index_lo(), class.index_hi()) {
        (Some(lo), Some(hi)) => (lo..=hi).collect(),
        (Some(lo), None) => vec![lo, lo + 1, lo + 2],
        (None, Some(hi)) => vec![hi, hi - 1, hi - 2],
        (None, None) => Vec::new(),
    }
}

fn limit_row(
    params: &AlgebraParams,
    q: f64,
    b: f64,
    b_star: f64,
    nu0: f64,
    family: &str,
    class: Option<&RepClass>,
) -> Result<LimitRow, CliError> {
    // Heads are only well defined once lambda0 is pinned; free families
    // (doubly infinite chains) and absent ones report none.
    let heads = match class.and_then(|c| c.forced_lambda0()) {
        Some(forced) => {
            let canonical = RepLabel::new(nu0, b, forced)?;
            head_levels(class.expect("forced value implies a class"))
                .into_iter()
                .map(|n| LevelValue {
                    n,
                    lambda: lambda_closed(params, &canonical, n),
                })
                .collect()
        }
        None => Vec::new(),
    };
    Ok(LimitRow {
        q,
        b,
        b_star,
        family: family.to_string(),
        exists: class.is_some(),
        index_lo: class.and_then(|c| c.index_lo()),
        index_hi: class.and_then(|c| c.index_hi()),
        forced_lambda0: class.and_then(|c| c.forced_lambda0()),
        lambda0_min: class.and_then(|c| c.lambda0_min()).map(|m| m.min),
        heads,
    })
}

#[allow(clippy::too_many_arguments)]
fn limits_cmd(
    q_values: Option<Vec<f64>>,
    b: Option<f64>,
    b_values: Option<Vec<f64>>,
    q: Option<f64>,
    family: Option<Family>,
    nu0: f64,
    out: &OutOpts,
) -> Result<(), CliError> {
    let tol = tolerances(out);
    let (path, points): (&'static str, Vec<(f64, f64)>) = match (q_values, b, q, b_values) {
        (Some(qs), Some(b_fixed), None, None) => {
            ("q", qs.into_iter().map(|qv| (qv, b_fixed)).collect())
        }
        (None, None, Some(q_fixed), Some(bs)) => {
            ("B", bs.into_iter().map(|bv| (q_fixed, bv)).collect())
        }
        _ => {
            return Err(CliError::Input(
                "provide either --q-values with --B, or --b-values with --q".to_string(),
            ))
        }
    };

    let mut rows = Vec::new();
    for &(qv, bv) in &points {
        let params = AlgebraParams::new(qv, 1.0)?;
        let bs = b_star(&params);
        let classes = enumerate_classes(&params, nu0, bv, &tol);
        match family {
            Some(wanted) => {
                let found = classes.iter().find(|c| c.family() == wanted);
                rows.push(limit_row(&params, qv, bv, bs, nu0, wanted.name(), found)?);
            }
            None if classes.is_empty() => {
                rows.push(limit_row(&params, qv, bv, bs, nu0, "none", None)?);
            }
            None => {
                for class in &classes {
                    rows.push(limit_row(
                        &params,
                        qv,
                        bv,
                        bs,
                        nu0,
                        class.family().name(),
                        Some(class),
                    )?);
                }
            }
        }
    }

    let mut report = Report::new("limits", None, tol_echo(&tol));
    report.limits = Some(LimitsSection {
        path,
        family: family.map(|f| f.name().to_string()),
        rows,
    });
    emit(&report, out)
}
