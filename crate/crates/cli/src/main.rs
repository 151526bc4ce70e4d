use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use finespec::clifford::parse_paravector;
use finespec::kernels::{kernel_closed_form, kernel_closed_form_symbolic, kernel_oracle, series_kernel, series_order_for, KernelSpec};
use finespec::opcalc::{functional_calculus, scan, CommutingParavectorOp, ResolventKind, SearchGrid, SliceContour};
use finespec::scalar::{format_rational, parse_rational};
use finespec::special::{bbar0_entries, h_poly, jacobi_coefficients, p_poly};
use finespec::verify::{run_suite, Suite, SuiteConfig};
use finespec::{Error, Multivector, Side};

#[derive(Parser)]
#[command(name = "finespec", version, about = "Fine-structure kernels, axial polynomials and operator calculi")]
struct Cli {
    /// key=value file supplying defaults for the subcommand's long flags; explicit flags win.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Run a verification suite and report one line per check.
    Verify(VerifyArgs),
    /// Emit coefficient or polynomial tables as CSV.
    Table(TableArgs),
    /// Evaluate fine-structure kernels.
    Kernel {
        #[command(subcommand)]
        cmd: KernelCmd,
    },
    /// Contour functional calculus of a commuting paravector operator.
    Calc(CalcArgs),
    /// Grid scan of |det Q_{c,s}(T)| on a slice plane, as CSV `u,v,|det|`.
    Spectrum(SpectrumArgs),
    /// Independent symbolic construction of a kernel as a rational function of x.
    Oracle(OracleArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Human,
    Json,
    Csv,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, default_value = "all")]
    suite: String,
    /// Comma-separated odd dimensions.
    #[arg(long, value_delimiter = ',', default_value = "3,5,7")]
    n: Vec<u32>,
    #[arg(long, default_value_t = 20)]
    k_max: u32,
    #[arg(long, default_value_t = 4)]
    l_max: u32,
    #[arg(long, default_value_t = 5)]
    m_max: u32,
    #[arg(long, default_value_t = 2024)]
    seed: u64,
    #[arg(long, value_enum, default_value = "human")]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
    /// Test mode: perturb one structure constant so the affected checks fail.
    #[arg(long)]
    inject_failure: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum TableKind {
    Coeffs,
    Hpoly,
    Ppoly,
    Jacobi,
    Bbar0,
}

#[derive(Clone, Copy, ValueEnum)]
enum SideArg {
    D,
    Dbar,
}

impl From<SideArg> for Side {
    fn from(s: SideArg) -> Side {
        match s {
            SideArg::D => Side::D,
            SideArg::Dbar => Side::Dbar,
        }
    }
}

#[derive(Args)]
struct TableArgs {
    #[arg(value_enum)]
    what: TableKind,
    #[arg(long, value_enum, default_value = "d")]
    side: SideArg,
    /// Order of `D` for `coeffs`, or the Jacobi parameter `β` as `p/q` for `jacobi`.
    #[arg(long, default_value = "1", allow_hyphen_values = true)]
    beta: String,
    #[arg(long, default_value_t = 0)]
    m: u32,
    #[arg(long, default_value_t = 5)]
    n: u32,
    #[arg(long, default_value_t = 1)]
    l: u32,
    #[arg(long, default_value_t = 1)]
    k: u32,
    #[arg(long, default_value_t = 1)]
    deg: u32,
    /// Jacobi parameter `α` as `p/q`.
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    alpha: String,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum KernelCmd {
    /// Closed form or truncated series of `D^β Δ^m S_L^{-1}(s, x)`.
    Eval(KernelArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Closed,
    Series,
}

#[derive(Args)]
struct KernelArgs {
    #[arg(long)]
    n: u32,
    #[arg(long, value_enum, default_value = "d")]
    side: SideArg,
    #[arg(long, default_value_t = 1)]
    beta: u32,
    #[arg(long, default_value_t = 0)]
    m: u32,
    /// Paravector literal such as `2+e1-1/2e3`.
    #[arg(long, allow_hyphen_values = true)]
    s: String,
    #[arg(long, allow_hyphen_values = true)]
    x: String,
    #[arg(long, value_enum, default_value = "closed")]
    method: Method,
    /// Series truncation order; chosen from `--tol` when absent.
    #[arg(long)]
    order: Option<u32>,
    #[arg(long, default_value_t = 1e-8)]
    tol: f64,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    S,
    K1,
    K2,
    D,
    Dbar,
    F,
}

#[derive(Args)]
struct CalcArgs {
    /// Operator fixture JSON.
    #[arg(long)]
    fixture: PathBuf,
    /// Contour JSON.
    #[arg(long)]
    contour: PathBuf,
    #[arg(long, value_enum, default_value = "d")]
    kind: KindArg,
    #[arg(long, default_value_t = 1)]
    beta: u32,
    #[arg(long, default_value_t = 0)]
    m: u32,
    #[arg(long, default_value_t = 0)]
    nu: u32,
    #[arg(long, default_value_t = 1)]
    ell: u32,
    /// JSON array of multivectors `α_ν` with `f(s) = Σ s^ν α_ν`.
    #[arg(long)]
    fcoeffs: PathBuf,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct SpectrumArgs {
    #[arg(long)]
    fixture: PathBuf,
    /// Slice unit as comma-separated components; defaults to `e_1`.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    unit: Option<Vec<f64>>,
    #[arg(long, default_value_t = -2.0, allow_hyphen_values = true)]
    u_min: f64,
    #[arg(long, default_value_t = 2.0, allow_hyphen_values = true)]
    u_max: f64,
    #[arg(long, default_value_t = 0.0)]
    v_min: f64,
    #[arg(long, default_value_t = 2.0)]
    v_max: f64,
    #[arg(long, default_value_t = 41)]
    steps: usize,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct OracleArgs {
    #[arg(long)]
    n: u32,
    #[arg(long, value_enum, default_value = "d")]
    side: SideArg,
    #[arg(long, default_value_t = 1)]
    beta: u32,
    #[arg(long, default_value_t = 0)]
    m: u32,
    #[arg(long, allow_hyphen_values = true)]
    s: String,
    #[arg(long)]
    out: Option<PathBuf>,
}

/// Failure classes mapped onto exit codes 1 and 2.
enum Failure {
    Usage(String),
    Run(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(_) | Error::OutOfRange(_) | Error::DimensionMismatch(..) => Failure::Usage(e.to_string()),
            other => Failure::Run(other.to_string()),
        }
    }
}

type CmdResult = Result<bool, Failure>;

fn main() -> ExitCode {
    let args = match with_config(std::env::args().collect()) {
        Ok(a) => a,
        Err(msg) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
    };
    let cli = Cli::parse_from(args);
    let outcome = match cli.cmd {
        Cmd::Verify(a) => cmd_verify(a),
        Cmd::Table(a) => cmd_table(a),
        Cmd::Kernel { cmd: KernelCmd::Eval(a) } => cmd_kernel(a),
        Cmd::Calc(a) => cmd_calc(a),
        Cmd::Spectrum(a) => cmd_spectrum(a),
        Cmd::Oracle(a) => cmd_oracle(a),
    };
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Run(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

/// Appends `--key value` for every config entry whose flag is absent from the command line.
fn with_config(mut args: Vec<String>) -> Result<Vec<String>, String> {
    let Some(pos) = args.iter().position(|a| a == "--config" || a.starts_with("--config=")) else { return Ok(args) };
    let path = match args[pos].split_once('=') {
        Some((_, p)) => p.to_string(),
        None => args.get(pos + 1).cloned().ok_or("--config needs a path")?,
    };
    let text = fs::read_to_string(&path).map_err(|e| format!("{path}: {e}"))?;
    let mut extra = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (key, value) = line.split_once('=').ok_or_else(|| format!("{path}:{}: expected key=value", i + 1))?;
        let flag = format!("--{}", key.trim().replace('_', "-"));
        if args.iter().any(|a| *a == flag || a.starts_with(&format!("{flag}="))) {
            continue;
        }
        match value.trim() {
            "true" => extra.push(flag),
            "false" => {}
            v => extra.push(format!("{flag}={v}")),
        }
    }
    args.extend(extra);
    Ok(args)
}

fn emit(out: &Option<PathBuf>, text: &str) -> Result<(), Failure> {
    match out {
        Some(p) => fs::write(p, text).map_err(|e| Failure::Run(format!("{}: {e}", p.display()))),
        None => match std::io::stdout().lock().write_all(text.as_bytes()) {
            Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => Err(Failure::Run(format!("stdout: {e}"))),
            _ => Ok(()),
        },
    }
}

fn read_json(path: &Path) -> Result<Value, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn pretty(v: &Value) -> String {
    format!("{}\n", serde_json::to_string_pretty(v).expect("serializable"))
}

fn cmd_verify(a: VerifyArgs) -> CmdResult {
    let suite: Suite = a.suite.parse()?;
    let cfg = SuiteConfig { suite, n: a.n, k_max: a.k_max, l_max: a.l_max, m_max: a.m_max, seed: a.seed, inject_failure: a.inject_failure };
    let report = run_suite(&cfg)?;
    let text = match a.format {
        Format::Human => report.to_human(),
        Format::Json => pretty(&report.to_json()),
        Format::Csv => report.to_csv(),
    };
    emit(&a.out, &text)?;
    Ok(report.passed())
}

fn rational_arg(name: &str, v: &str) -> Result<finespec::Rational, Failure> {
    parse_rational(v).ok_or_else(|| Failure::Usage(format!("--{name}: expected p/q, got '{v}'")))
}

fn beta_order(v: &str) -> Result<u32, Failure> {
    v.parse().map_err(|_| Failure::Usage(format!("--beta: expected a non-negative integer, got '{v}'")))
}

fn cmd_table(a: TableArgs) -> CmdResult {
    let mut out = String::new();
    match a.what {
        TableKind::Coeffs => {
            out.push_str("side,beta,m,j,a_j,b_j\n");
            for row in KernelSpec::new(a.n, a.side.into(), beta_order(&a.beta)?, a.m)?.family()?.csv_rows() {
                out.push_str(&row);
                out.push('\n');
            }
        }
        TableKind::Hpoly | TableKind::Ppoly => {
            out.push_str("l,k,j,C\n");
            let p = if matches!(a.what, TableKind::Hpoly) { h_poly(a.l, a.k) } else { p_poly(a.l, a.k) };
            for row in p.csv_rows() {
                out.push_str(&row);
                out.push('\n');
            }
        }
        TableKind::Jacobi => {
            let (alpha, beta) = (rational_arg("alpha", &a.alpha)?, rational_arg("beta", &a.beta)?);
            out.push_str("power,coeff\n");
            for (i, c) in jacobi_coefficients(a.deg, &alpha, &beta)?.iter().enumerate() {
                out.push_str(&format!("{i},{}\n", format_rational(c)));
            }
        }
        TableKind::Bbar0 => {
            out.push_str("h,m,k1,bbar0\n");
            for (h, m, k1, v) in bbar0_entries() {
                out.push_str(&format!("{h},{m},{k1},{}\n", format_rational(&v)));
            }
        }
    }
    emit(&a.out, &out)?;
    Ok(true)
}

fn cmd_kernel(a: KernelArgs) -> CmdResult {
    let spec = KernelSpec::new(a.n, a.side.into(), a.beta, a.m)?;
    let s = parse_paravector(&a.s, a.n as usize)?;
    let x = parse_paravector(&a.x, a.n as usize)?;
    let (value, method, tail): (Multivector<finespec::Rational>, &str, Option<f64>) = match a.method {
        Method::Closed => (kernel_closed_form(&spec, &s, &x)?, "closed", None),
        Method::Series => {
            let order = match a.order {
                Some(k) => k,
                None => series_order_for(Some(&spec), 0, &s, &x, a.tol)?,
            };
            let r = series_kernel(&spec, &s, &x, order)?;
            (r.value, "series", Some(r.tail_bound))
        }
    };
    let doc = json!({
        "spec": { "n": a.n, "side": format!("{:?}", spec.side), "beta": a.beta, "m": a.m },
        "s": s.to_json(),
        "x": x.to_json(),
        "value": value.to_json(),
        "method": method,
        "tail_bound": tail,
    });
    emit(&a.out, &pretty(&doc))?;
    Ok(true)
}

fn cmd_calc(a: CalcArgs) -> CmdResult {
    let t = CommutingParavectorOp::<f64>::from_json(&read_json(&a.fixture)?)?;
    let c = SliceContour::from_json(&read_json(&a.contour)?)?;
    let f = match read_json(&a.fcoeffs)? {
        Value::Array(items) => items.iter().map(Multivector::<f64>::from_json).collect::<finespec::Result<Vec<_>>>()?,
        _ => return Err(Failure::Usage("--fcoeffs: expected a JSON array of multivectors".into())),
    };
    if !t.validate_commuting() {
        return Err(Error::NotCommuting.into());
    }
    let kind = match a.kind {
        KindArg::S => ResolventKind::SLeft,
        KindArg::K1 => ResolventKind::K1L { nu: a.nu, ell: a.ell },
        KindArg::K2 => ResolventKind::K2 { nu: a.nu, ell: a.ell },
        KindArg::D => ResolventKind::D { beta: a.beta, m: a.m },
        KindArg::Dbar => ResolventKind::Dbar { beta: a.beta, m: a.m },
        KindArg::F => ResolventKind::F,
    };
    let r = functional_calculus(&kind, &f, &t, &c)?;
    emit(&a.out, &pretty(&r.to_json()))?;
    Ok(true)
}

fn cmd_spectrum(a: SpectrumArgs) -> CmdResult {
    let t = CommutingParavectorOp::<f64>::from_json(&read_json(&a.fixture)?)?;
    let unit = a.unit.unwrap_or_else(|| SliceContour::axis(t.n, 1));
    let grid = SearchGrid { u: (a.u_min, a.u_max), v: (a.v_min, a.v_max), steps: a.steps };
    let mut out = String::from("u,v,abs_det\n");
    for p in scan(&t, &unit, &grid)? {
        out.push_str(&format!("{},{},{:e}\n", p.u, p.v, p.det));
    }
    emit(&a.out, &out)?;
    Ok(true)
}

fn cmd_oracle(a: OracleArgs) -> CmdResult {
    let spec = KernelSpec::new(a.n, a.side.into(), a.beta, a.m)?;
    let s = parse_paravector(&a.s, a.n as usize)?;
    let oracle = kernel_oracle(&spec, &s);
    let agrees = oracle.equal_rational(&kernel_closed_form_symbolic(&spec, &s)?);
    let doc = json!({ "spec": { "n": a.n, "side": format!("{:?}", spec.side), "beta": a.beta, "m": a.m }, "s": s.to_json(), "kernel": oracle.to_json(), "matches_closed_form": agrees });
    emit(&a.out, &pretty(&doc))?;
    Ok(agrees)
}
