//! Command-line front end: one subcommand per experiment, CSV on stdout or `--out`.
//!
//! Output is byte-identical for identical flags and seed at any `--threads`;
//! wall-clock columns stay empty unless `--timing` is given.

use std::fmt::Write as _;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use zeta_moments::abscissa::{abscissa_table, Conditional, Variant};
use zeta_moments::afe::afe_error_scan;
use zeta_moments::count::{
    count_j, count_m, count_t_with, mc_mean_value, mc_mean_value_monomial, CountMethod, CountReport, CountValue,
};
use zeta_moments::moments::{
    discrete_moment, equidistribution_ratio, resonant_experiment_with_budget, sample_coefficients,
    MomentExperiment, ResonantSpec, DEFAULT_BUDGET,
};
use zeta_moments::weyl::WeylPolynomial;
use zeta_moments::zeta::{EvalPoint, ZetaEvalConfig};

pub mod format;

use format::{g12, int_list, real, real_list, uint_list};

pub const EXIT_INVALID: i32 = 2;
pub const EXIT_FAILURE: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "zeta-moments", version, about = "Discrete moment experiments for the Riemann zeta function")]
pub struct Cli {
    /// Write CSV here instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<std::path::PathBuf>,
    #[arg(long, global = true, default_value_t = 42)]
    pub seed: u64,
    /// Worker threads (default: one per core); output does not depend on this.
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    /// Fill the `seconds` column of `count` (makes output non-reproducible).
    #[arg(long, global = true)]
    pub timing: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Abscissae S(d) and S_mo(d).
    Abscissa(AbscissaArgs),
    /// Error of the truncated Dirichlet sum of length t^mu.
    Afe(AfeArgs),
    /// Solution counts J, M, T.
    Count(CountArgs),
    /// Discrete second moment along a polynomial shift.
    Moment(MomentArgs),
    /// Discrete moment along resonant coefficients 2πm/log(k0/l0).
    Resonant(ResonantArgs),
    /// Normalised Weyl sums |Σ e(P(n))|/N.
    Equi(EquiArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum VariantArg {
    Poly,
    Mono,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ConditionalArg {
    None,
    Lindelof,
}

#[derive(Debug, Args)]
pub struct AbscissaArgs {
    /// Degrees, e.g. `2-8` or `2,4,16`.
    #[arg(long)]
    pub d: String,
    #[arg(long, value_enum, default_value = "poly")]
    pub variant: VariantArg,
    #[arg(long, value_enum, default_value = "none")]
    pub conditional: ConditionalArg,
    #[arg(long, default_value = "1e-4")]
    pub grid: String,
}

#[derive(Debug, Args)]
pub struct AfeArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub sigma: String,
    #[arg(long, allow_hyphen_values = true)]
    pub mu: String,
    /// Heights, comma separated.
    #[arg(long)]
    pub t: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Brute,
    Mitm,
    Mc,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TargetArg {
    #[value(name = "J")]
    J,
    #[value(name = "M")]
    M,
    #[value(name = "T")]
    T,
}

#[derive(Debug, Args)]
pub struct CountArgs {
    #[arg(long)]
    pub h: u32,
    #[arg(long)]
    pub d: u32,
    #[arg(long)]
    pub n: String,
    #[arg(long, value_enum)]
    pub method: MethodArg,
    #[arg(long, default_value_t = 1_000_000)]
    pub samples: u64,
    #[arg(long, value_enum, default_value = "J")]
    pub target: TargetArg,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum EvalArg {
    Em,
    Tail,
}

#[derive(Debug, Args)]
pub struct MomentArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub sigma: String,
    #[arg(long, allow_hyphen_values = true, default_value = "0")]
    pub t: String,
    /// Shift coefficients a_1,...,a_d.
    #[arg(long, conflicts_with = "random_degree", required_unless_present = "random_degree")]
    pub coeffs: Option<String>,
    /// Draw d coefficients uniformly from [0.1, 2] using `--seed`.
    #[arg(long)]
    pub random_degree: Option<usize>,
    #[arg(long)]
    pub schedule: String,
    /// Evaluator; defaults to tail above sigma = 1 and em otherwise.
    #[arg(long, value_enum)]
    pub eval: Option<EvalArg>,
    #[arg(long, default_value = "1e-4")]
    pub tail_tol: String,
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    pub budget: u64,
}

#[derive(Debug, Args)]
pub struct ResonantArgs {
    #[arg(long)]
    pub k0: u64,
    #[arg(long)]
    pub l0: u64,
    #[arg(long, allow_hyphen_values = true)]
    pub m: String,
    #[arg(long, allow_hyphen_values = true)]
    pub sigma: String,
    #[arg(long, allow_hyphen_values = true, default_value = "0")]
    pub t: String,
    #[arg(long)]
    pub n: u64,
    /// Truncation tolerance of the target series.
    #[arg(long, default_value = "1e-10")]
    pub tol: String,
    #[arg(long, default_value = "1e-4")]
    pub tail_tol: String,
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    pub budget: u64,
}

#[derive(Debug, Args)]
pub struct EquiArgs {
    #[arg(long)]
    pub coeffs: String,
    #[arg(long)]
    pub n: String,
}

#[derive(Debug)]
pub enum Failure {
    Invalid(String),
    Compute(zeta_moments::Error),
    Io(std::io::Error),
}

impl Failure {
    pub fn exit_code(&self) -> i32 {
        match self {
            Failure::Invalid(_) => EXIT_INVALID,
            Failure::Compute(e) if e.is_invalid_input() => EXIT_INVALID,
            Failure::Compute(_) | Failure::Io(_) => EXIT_FAILURE,
        }
    }
}

impl std::fmt::Display for Failure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Failure::Invalid(msg) => write!(f, "invalid argument: {msg}"),
            Failure::Compute(e) => write!(f, "{e}"),
            Failure::Io(e) => write!(f, "output: {e}"),
        }
    }
}

impl From<zeta_moments::Error> for Failure {
    fn from(e: zeta_moments::Error) -> Self {
        Failure::Compute(e)
    }
}

fn invalid<T>(r: Result<T, String>) -> Result<T, Failure> {
    r.map_err(Failure::Invalid)
}

/// Parses `args` (program name first), runs the subcommand and returns the exit code.
pub fn main_with<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_INVALID } else { 0 };
        }
    };
    match run(&cli) {
        Ok(()) => 0,
        Err(f) => {
            eprintln!("zeta-moments: {f}");
            f.exit_code()
        }
    }
}

/// Runs a parsed command on its own worker pool and writes its CSV.
pub fn run(cli: &Cli) -> Result<(), Failure> {
    if cli.threads == Some(0) {
        return Err(Failure::Invalid("--threads must be at least 1".into()));
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cli.threads.unwrap_or(0))
        .build()
        .map_err(|e| Failure::Invalid(e.to_string()))?;
    let csv = pool.install(|| render(cli))?;
    match &cli.out {
        Some(path) => std::fs::write(path, csv).map_err(Failure::Io),
        None => std::io::stdout().lock().write_all(csv.as_bytes()).map_err(Failure::Io),
    }
}

/// The full CSV text for a command, header comment included.
pub fn render(cli: &Cli) -> Result<String, Failure> {
    match &cli.command {
        Command::Abscissa(a) => abscissa(a, cli),
        Command::Afe(a) => afe(a, cli),
        Command::Count(a) => count(a, cli),
        Command::Moment(a) => moment(a, cli),
        Command::Resonant(a) => resonant(a, cli),
        Command::Equi(a) => equi(a, cli),
    }
}

fn echo(out: &mut String, command: &str, fields: &[(&str, String)], seed: u64) {
    let _ = write!(out, "# zeta-moments {command}");
    for (k, v) in fields {
        let _ = write!(out, " {k}={v}");
    }
    let _ = writeln!(out, " seed={seed}");
}

fn abscissa(a: &AbscissaArgs, cli: &Cli) -> Result<String, Failure> {
    let d = invalid(uint_list(&a.d))?;
    let grid = invalid(real(&a.grid))?;
    let variant = match a.variant {
        VariantArg::Poly => Variant::Polynomial,
        VariantArg::Mono => Variant::Monomial,
    };
    let conditional = match a.conditional {
        ConditionalArg::None => Conditional::Unconditional,
        ConditionalArg::Lindelof => Conditional::Lindelof,
    };
    let rows = abscissa_table(&d, &[variant], &[conditional], grid)?;
    let mut out = String::new();
    echo(
        &mut out,
        "abscissa",
        &[
            ("d", a.d.clone()),
            ("variant", variant.label().into()),
            ("conditional", conditional.label().into()),
            ("grid", a.grid.clone()),
        ],
        cli.seed,
    );
    out.push_str("d,variant,conditional,mu_star,A_mu,B_mu,S,h_mo,e_mo\n");
    for r in rows {
        let _ = writeln!(
            out,
            "{},{},{},{},{},{},{},{},{}",
            r.d,
            r.variant.label(),
            r.conditional.label(),
            g12(r.mu_star),
            g12(r.a_at_mu),
            g12(r.b_at_mu),
            g12(r.s),
            r.h_mo.map(|h| h.to_string()).unwrap_or_default(),
            r.e_mo.map(g12).unwrap_or_default(),
        );
    }
    Ok(out)
}

fn afe(a: &AfeArgs, cli: &Cli) -> Result<String, Failure> {
    let sigma = invalid(real(&a.sigma))?;
    let mu = invalid(real(&a.mu))?;
    let ts = invalid(real_list(&a.t))?;
    let report = afe_error_scan(sigma, mu, &ts)?;
    let mut out = String::new();
    echo(&mut out, "afe", &[("sigma", a.sigma.clone()), ("mu", a.mu.clone()), ("t", a.t.clone())], cli.seed);
    out.push_str("sigma,mu,t,approx_re,approx_im,ref_re,ref_im,abs_err\n");
    for r in &report.rows {
        let _ = writeln!(
            out,
            "{},{},{},{},{},{},{},{}",
            g12(sigma),
            g12(mu),
            g12(r.t),
            g12(r.approx.re),
            g12(r.approx.im),
            g12(r.reference.re),
            g12(r.reference.im),
            g12(r.abs_error),
        );
    }
    // summary row: the fitted slope sits in the last column
    let _ = writeln!(out, "{},{},fitted_decay,,,,,{}", g12(sigma), g12(mu), g12(report.fitted_decay));
    Ok(out)
}

fn count(a: &CountArgs, cli: &Cli) -> Result<String, Failure> {
    let ns = invalid(uint_list(&a.n))?;
    let method = match a.method {
        MethodArg::Brute => CountMethod::Brute,
        MethodArg::Mitm => CountMethod::Mitm,
        MethodArg::Mc => CountMethod::MonteCarlo,
    };
    let mut fields = vec![
        ("target", format!("{:?}", a.target)),
        ("h", a.h.to_string()),
        ("d", a.d.to_string()),
        ("n", a.n.clone()),
        ("method", format!("{:?}", a.method).to_lowercase()),
    ];
    if method == CountMethod::MonteCarlo {
        fields.push(("samples", a.samples.to_string()));
    }
    let mut out = String::new();
    echo(&mut out, "count", &fields, cli.seed);
    out.push_str("h,d,N,method,count,stderr,seconds\n");
    for n in ns {
        let report: CountReport = match (a.target, method) {
            (TargetArg::J, CountMethod::MonteCarlo) => mc_mean_value(a.h, a.d, n, a.samples, cli.seed)?,
            (TargetArg::M, CountMethod::MonteCarlo) => mc_mean_value_monomial(a.h, a.d, n, a.samples, cli.seed)?,
            (TargetArg::J, m) => count_j(a.h, a.d, n, m)?,
            (TargetArg::M, m) => count_m(a.h, a.d, n, m)?,
            (TargetArg::T, m) => count_t_with(a.h, n, m)?,
        };
        let (value, stderr) = match report.value {
            CountValue::Exact(c) => (c.to_string(), String::new()),
            CountValue::Estimate { mean, stderr } => (g12(mean), g12(stderr)),
        };
        let seconds = if cli.timing { format!("{:.6}", report.elapsed_seconds) } else { String::new() };
        let _ = writeln!(
            out,
            "{},{},{},{},{},{},{}",
            report.h,
            a.d,
            n,
            report.method.label(),
            value,
            stderr,
            seconds
        );
    }
    Ok(out)
}

fn eval_config(choice: Option<EvalArg>, sigma: f64, tail_tol: f64) -> ZetaEvalConfig {
    match choice {
        Some(EvalArg::Em) => ZetaEvalConfig::euler_maclaurin(),
        Some(EvalArg::Tail) => ZetaEvalConfig::tail_bounded(tail_tol),
        None if sigma > 1.0 => ZetaEvalConfig::tail_bounded(tail_tol),
        None => ZetaEvalConfig::euler_maclaurin(),
    }
}

fn moment(a: &MomentArgs, cli: &Cli) -> Result<String, Failure> {
    let sigma = invalid(real(&a.sigma))?;
    let t = invalid(real(&a.t))?;
    let schedule = invalid(uint_list(&a.schedule))?;
    let tail_tol = invalid(real(&a.tail_tol))?;
    let (p, coeff_field) = match (&a.coeffs, a.random_degree) {
        (Some(c), _) => (WeylPolynomial::new(invalid(real_list(c))?)?, ("coeffs", c.clone())),
        (None, Some(d)) => (sample_coefficients(d, cli.seed)?, ("random_degree", d.to_string())),
        (None, None) => return Err(Failure::Invalid("one of --coeffs or --random-degree is required".into())),
    };
    let cfg = eval_config(a.eval, sigma, tail_tol);
    let exp = MomentExperiment {
        s: EvalPoint::new(sigma, t)?,
        p,
        n_schedule: schedule,
        eval_cfg: cfg,
        seed: cli.seed,
        budget: a.budget,
    };
    let rows = discrete_moment(&exp)?;
    let eval = match cfg.method {
        zeta_moments::zeta::ZetaMethod::EulerMaclaurin => "em".to_string(),
        zeta_moments::zeta::ZetaMethod::DirichletTailBounded => format!("tail:{}", a.tail_tol),
    };
    let mut out = String::new();
    echo(
        &mut out,
        "moment",
        &[
            ("sigma", a.sigma.clone()),
            ("t", a.t.clone()),
            coeff_field,
            ("schedule", a.schedule.clone()),
            ("eval", eval),
            ("budget", a.budget.to_string()),
        ],
        cli.seed,
    );
    out.push_str("N,avg,target,abs_dev\n");
    for r in rows {
        let _ = writeln!(out, "{},{},{},{}", r.n, g12(r.average), g12(r.target), g12(r.abs_dev));
    }
    Ok(out)
}

fn resonant(a: &ResonantArgs, cli: &Cli) -> Result<String, Failure> {
    let spec = ResonantSpec {
        k0: a.k0,
        l0: a.l0,
        m: invalid(int_list(&a.m))?,
        sigma: invalid(real(&a.sigma))?,
        t: invalid(real(&a.t))?,
        truncation_tolerance: invalid(real(&a.tol))?,
    };
    let cfg = ZetaEvalConfig::tail_bounded(invalid(real(&a.tail_tol))?);
    let r = resonant_experiment_with_budget(&spec, a.n, &cfg, a.budget)?;
    let mut out = String::new();
    echo(
        &mut out,
        "resonant",
        &[
            ("k0", a.k0.to_string()),
            ("l0", a.l0.to_string()),
            ("m", a.m.clone()),
            ("sigma", a.sigma.clone()),
            ("t", a.t.clone()),
            ("n", a.n.to_string()),
            ("tol", a.tol.clone()),
            ("eval", format!("tail:{}", a.tail_tol)),
            ("budget", a.budget.to_string()),
        ],
        cli.seed,
    );
    out.push_str("N,avg,target,abs_dev,trunc_terms\n");
    let m = r.result;
    let _ = writeln!(out, "{},{},{},{},{}", m.n, g12(m.average), g12(m.target), g12(m.abs_dev), r.trunc_terms);
    Ok(out)
}

fn equi(a: &EquiArgs, cli: &Cli) -> Result<String, Failure> {
    let p = WeylPolynomial::new(invalid(real_list(&a.coeffs))?)?;
    let ns = invalid(uint_list(&a.n))?;
    let mut out = String::new();
    echo(&mut out, "equi", &[("coeffs", a.coeffs.clone()), ("n", a.n.clone())], cli.seed);
    out.push_str("N,ratio\n");
    for n in ns {
        let _ = writeln!(out, "{},{}", n, g12(equidistribution_ratio(&p, n)?));
    }
    Ok(out)
}
