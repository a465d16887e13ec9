//! Command-line front end. `run` returns the process exit code:
//! 0 on success, 1 when a verification check fails, 2 on usage, parse or
//! runtime errors.

use std::fmt::Write as _;
use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use serde::Serialize;

use crate::angles::{solve_preparation_angles, PreparationAmplitudes};
use crate::copier::{run_copier, CopyReport, CopyVariant, InputQubit, Pair, AMPLITUDE_NORM_TOL};
use crate::error::{Error, Result};
use crate::gates::{GateNetwork, PureState, MAX_QUBITS};
use crate::linalg::{partial_trace, DensityMatrix, SquareMatrix};
use crate::report::{human, run_sweep, Grid, Metric, Sig17, SweepSpec};
use crate::separability::{ppt_verdict, PptReport};
use crate::verify::{run_verification, VerifyOptions, GROUPS};

/// Raw amplitudes further than this from unit norm are rejected rather
/// than renormalized.
pub const RENORMALIZE_LIMIT: f64 = 1e-6;

#[derive(Parser, Debug)]
#[command(
    name = "qcopier",
    version,
    about = "Simulate and verify quantum copying networks"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Run one copier on one input qubit and print the full analysis.
    Copy(CopyArgs),
    /// Evaluate metrics over a (theta, phi) grid.
    Sweep(SweepArgs),
    /// Run every reproduction check.
    Verify(VerifyArgs),
    /// Run a network loaded from a text file.
    Network(NetworkArgs),
    /// Solve for preparation angles.
    Angles(AnglesArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum TextFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum DataFormat {
    Csv,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum VariantArg {
    #[value(alias = "dup")]
    Duplicator,
    #[value(alias = "tri")]
    Triplicator,
}

impl From<VariantArg> for CopyVariant {
    fn from(v: VariantArg) -> Self {
        match v {
            VariantArg::Duplicator => CopyVariant::Duplicator,
            VariantArg::Triplicator => CopyVariant::Triplicator,
        }
    }
}

/// Input qubit as angles (radians) or as raw amplitudes.
#[derive(Args, Debug, Clone)]
pub struct InputArgs {
    /// Polar angle in radians; alpha = sin(theta) e^{i phi}, beta = cos(theta).
    #[arg(long, allow_negative_numbers = true, conflicts_with_all = ["alpha", "beta"])]
    pub theta: Option<f64>,
    /// Relative phase in radians.
    #[arg(long, allow_negative_numbers = true, conflicts_with_all = ["alpha", "beta"])]
    pub phi: Option<f64>,
    /// Amplitude of |0>, e.g. `0.6` or `0.6+0.1i`.
    #[arg(long, allow_negative_numbers = true, requires = "beta")]
    pub alpha: Option<Complex64>,
    /// Amplitude of |1>.
    #[arg(long, allow_negative_numbers = true, requires = "alpha")]
    pub beta: Option<Complex64>,
}

#[derive(Args, Debug)]
pub struct CopyArgs {
    #[command(flatten)]
    pub input: InputArgs,
    #[arg(long, value_enum, default_value = "duplicator")]
    pub variant: VariantArg,
    #[arg(long, value_enum, default_value = "text")]
    pub format: TextFormat,
}

#[derive(Args, Debug)]
pub struct SweepArgs {
    #[arg(long, value_enum, default_value = "duplicator")]
    pub variant: VariantArg,
    /// `start:stop:count` or a single value, radians.
    #[arg(long, default_value = "0:1.5707963267948966:11")]
    pub theta: Grid,
    #[arg(long, default_value = "0")]
    pub phi: Grid,
    /// Comma-separated subset of d1,d2,d3,s,fidelity,E.
    #[arg(long, value_delimiter = ',')]
    pub metrics: Vec<Metric>,
    /// Output file; stdout when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "csv")]
    pub format: DataFormat,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// Hold every check to this tolerance instead of its own.
    #[arg(long)]
    pub tolerance: Option<f64>,
    /// Run only one group of checks.
    #[arg(long, value_parser = clap::builder::PossibleValuesParser::new(GROUPS))]
    pub only: Option<String>,
    #[arg(long, value_enum, default_value = "text")]
    pub format: TextFormat,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct NetworkArgs {
    /// Network description, one gate per line.
    #[arg(long)]
    pub file: PathBuf,
    /// Register size; defaults to the smallest that fits the network.
    #[arg(long)]
    pub qubits: Option<usize>,
    /// Start from this computational basis state instead of |psi>|0..0>.
    #[arg(long, conflicts_with_all = ["theta", "phi", "alpha", "beta"])]
    pub basis: Option<usize>,
    #[command(flatten)]
    pub input: InputArgs,
    #[arg(long, value_enum, default_value = "text")]
    pub format: TextFormat,
}

#[derive(Args, Debug)]
pub struct AnglesArgs {
    /// Target amplitudes `c1,c2,c3,c4` of |00>,|01>,|10>,|11>; normalized
    /// before solving.
    #[arg(
        long,
        value_delimiter = ',',
        allow_negative_numbers = true,
        conflicts_with = "variant"
    )]
    pub c: Option<Vec<f64>>,
    /// Use the amplitudes of a built-in copier.
    #[arg(long, value_enum)]
    pub variant: Option<VariantArg>,
    #[arg(long, value_enum, default_value = "text")]
    pub format: TextFormat,
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match execute(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

fn execute(command: Command) -> Result<i32> {
    match command {
        Command::Copy(a) => cmd_copy(&a),
        Command::Sweep(a) => cmd_sweep(&a),
        Command::Verify(a) => cmd_verify(&a),
        Command::Network(a) => cmd_network(&a),
        Command::Angles(a) => cmd_angles(&a),
    }
}

fn emit(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(path) => fs::write(path, text)
            .map_err(|e| Error::Precondition(format!("cannot write {}: {e}", path.display()))),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(text.as_bytes())
                .map_err(|e| Error::Precondition(format!("cannot write output: {e}")))
        }
    }
}

/// Resolves the input qubit, renormalizing slightly off amplitudes with a
/// warning on stderr.
pub fn resolve_input(args: &InputArgs) -> Result<InputQubit> {
    match (args.alpha, args.beta) {
        (Some(alpha), Some(beta)) => {
            let norm_sqr = alpha.norm_sqr() + beta.norm_sqr();
            let off = (norm_sqr - 1.0).abs();
            if off <= AMPLITUDE_NORM_TOL {
                InputQubit::from_amplitudes(alpha, beta)
            } else if off <= RENORMALIZE_LIMIT {
                eprintln!("warning: |alpha|^2 + |beta|^2 = {norm_sqr}; renormalizing");
                let n = norm_sqr.sqrt();
                InputQubit::from_amplitudes(alpha / n, beta / n)
            } else {
                Err(Error::NotNormalized(norm_sqr))
            }
        }
        _ => InputQubit::new(args.theta.unwrap_or(0.0), args.phi.unwrap_or(0.0)),
    }
}

fn basis_labels(num_qubits: usize, descending: bool) -> Vec<String> {
    let dim = 1 << num_qubits;
    (0..dim)
        .map(|i| {
            let i = if descending { dim - 1 - i } else { i };
            format!("|{:0width$b}>", i, width = num_qubits)
        })
        .collect()
}

fn complex_text(z: Complex64) -> String {
    if z.im == 0.0 {
        human(z.re)
    } else {
        let sign = if z.im < 0.0 { '-' } else { '+' };
        format!("{}{sign}{}i", human(z.re), human(z.im.abs()))
    }
}

fn matrix_text(m: &SquareMatrix, descending: bool) -> String {
    let m = if descending {
        m.reversed_basis()
    } else {
        m.clone()
    };
    let labels = basis_labels(m.num_qubits(), descending);
    let cells: Vec<Vec<String>> = (0..m.dim())
        .map(|i| (0..m.dim()).map(|j| complex_text(m[(i, j)])).collect())
        .collect();
    let width = cells
        .iter()
        .flatten()
        .map(|c| c.chars().count())
        .max()
        .unwrap_or(1)
        .max(labels[0].len());
    let mut out = String::new();
    let _ = write!(out, "{:w$}", "", w = labels[0].len() + 2);
    for l in &labels {
        let _ = write!(out, "{l:>width$}  ");
    }
    out.push('\n');
    for (l, row) in labels.iter().zip(&cells) {
        let _ = write!(out, "{l}  ");
        for c in row {
            let _ = write!(out, "{c:>width$}  ");
        }
        out.push('\n');
    }
    out
}

fn matrix_pair_text(title: &str, m: &SquareMatrix) -> String {
    format!(
        "{title}\n  ascending basis\n{}  descending basis\n{}",
        indent(&matrix_text(m, false)),
        indent(&matrix_text(m, true))
    )
}

fn indent(s: &str) -> String {
    s.lines().map(|l| format!("    {l}\n")).collect()
}

fn opt_text(v: Option<f64>) -> String {
    v.map_or_else(|| "none".to_string(), human)
}

fn report_text(report: &CopyReport, ppt: &[PptReport; 3]) -> String {
    let mut out = String::new();
    let q = &report.input;
    let _ = writeln!(
        out,
        "input: theta={} phi={}  alpha={} beta={}",
        human(q.theta()),
        human(q.phi()),
        complex_text(q.alpha()),
        complex_text(q.beta())
    );
    let _ = writeln!(
        out,
        "network: {}\n",
        report.variant.map_or("custom", |v| v.name())
    );
    for (i, label) in crate::copier::QUBIT_LABELS.iter().enumerate() {
        out.push_str(&matrix_pair_text(
            &format!("rho_{label}"),
            report.rho[i].matrix(),
        ));
        let f = report.fidelity[i];
        let _ = writeln!(
            out,
            "  d1={}  s={}  fidelity: ideal={} orthogonal={}\n",
            human(report.distances.d1[i]),
            opt_text(report.scaling[i]),
            human(f.ideal),
            human(f.orthogonal)
        );
    }
    for (k, pair) in Pair::ALL.iter().enumerate() {
        out.push_str(&matrix_pair_text(
            &format!("rho_{}", pair.label()),
            report.rho_pair(*pair).matrix(),
        ));
        let p = &ppt[k];
        let spectrum: Vec<String> = p.spectrum.iter().map(|x| human(*x)).collect();
        let _ = writeln!(
            out,
            "  d2={}  partial transpose spectrum [{}]  {}\n",
            human(report.distances.d2[k]),
            spectrum.join(", "),
            p.verdict.as_str()
        );
    }
    let _ = writeln!(out, "d3={}", opt_text(report.distances.d3));
    out
}

#[derive(Serialize)]
struct MatrixJson {
    re: Vec<Vec<Sig17>>,
    im: Vec<Vec<Sig17>>,
}

impl MatrixJson {
    fn new(m: &SquareMatrix) -> Self {
        let part = |f: fn(&Complex64) -> f64| {
            (0..m.dim())
                .map(|i| (0..m.dim()).map(|j| Sig17(f(&m[(i, j)]))).collect())
                .collect()
        };
        Self {
            re: part(|z| z.re),
            im: part(|z| z.im),
        }
    }
}

#[derive(Serialize)]
struct QubitJson {
    label: &'static str,
    rho: MatrixJson,
    d1: Sig17,
    s: Option<Sig17>,
    fidelity_ideal: Sig17,
    fidelity_orthogonal: Sig17,
}

#[derive(Serialize)]
struct PairJson {
    label: &'static str,
    rho: MatrixJson,
    d2: Sig17,
    pt_spectrum: Vec<Sig17>,
    verdict: &'static str,
}

#[derive(Serialize)]
struct CopyJson {
    variant: &'static str,
    theta: Sig17,
    phi: Sig17,
    /// Matrices use the ascending basis, qubit a1 most significant.
    qubits: Vec<QubitJson>,
    pairs: Vec<PairJson>,
    d3: Option<Sig17>,
}

fn report_json(report: &CopyReport, ppt: &[PptReport; 3]) -> Result<String> {
    let doc = CopyJson {
        variant: report.variant.map_or("custom", |v| v.name()),
        theta: Sig17(report.input.theta()),
        phi: Sig17(report.input.phi()),
        qubits: (0..3)
            .map(|i| QubitJson {
                label: crate::copier::QUBIT_LABELS[i],
                rho: MatrixJson::new(report.rho[i].matrix()),
                d1: Sig17(report.distances.d1[i]),
                s: report.scaling[i].map(Sig17),
                fidelity_ideal: Sig17(report.fidelity[i].ideal),
                fidelity_orthogonal: Sig17(report.fidelity[i].orthogonal),
            })
            .collect(),
        pairs: Pair::ALL
            .iter()
            .enumerate()
            .map(|(k, p)| PairJson {
                label: p.label(),
                rho: MatrixJson::new(report.rho_pair(*p).matrix()),
                d2: Sig17(report.distances.d2[k]),
                pt_spectrum: ppt[k].spectrum.iter().copied().map(Sig17).collect(),
                verdict: ppt[k].verdict.as_str(),
            })
            .collect(),
        d3: report.distances.d3.map(Sig17),
    };
    let mut s = serde_json::to_string_pretty(&doc)
        .map_err(|e| Error::Precondition(format!("serialization failed: {e}")))?;
    s.push('\n');
    Ok(s)
}

fn render_report(report: &CopyReport, format: TextFormat) -> Result<String> {
    let ppt = [
        ppt_verdict(report.rho_pair(Pair::ALL[0]))?.with_tag(Pair::ALL[0].label()),
        ppt_verdict(report.rho_pair(Pair::ALL[1]))?.with_tag(Pair::ALL[1].label()),
        ppt_verdict(report.rho_pair(Pair::ALL[2]))?.with_tag(Pair::ALL[2].label()),
    ];
    match format {
        TextFormat::Text => Ok(report_text(report, &ppt)),
        TextFormat::Json => report_json(report, &ppt),
    }
}

fn cmd_copy(args: &CopyArgs) -> Result<i32> {
    let input = resolve_input(&args.input)?;
    let report = run_copier(&input, args.variant.into())?;
    emit(None, &render_report(&report, args.format)?)?;
    Ok(0)
}

fn cmd_sweep(args: &SweepArgs) -> Result<i32> {
    let mut spec = SweepSpec::new(args.variant.into(), args.theta, args.phi);
    if !args.metrics.is_empty() {
        spec = spec.with_metrics(&args.metrics);
    }
    let doc = run_sweep(&spec)?;
    let text = match args.format {
        DataFormat::Csv => doc.to_csv()?,
        DataFormat::Json => doc.to_json()?,
    };
    emit(args.out.as_deref(), &text)?;
    Ok(0)
}

fn cmd_verify(args: &VerifyArgs) -> Result<i32> {
    if let Some(t) = args.tolerance {
        if !(t.is_finite() && t > 0.0) {
            return Err(Error::Precondition(format!(
                "tolerance must be positive, got {t}"
            )));
        }
    }
    let doc = run_verification(&VerifyOptions {
        tolerance: args.tolerance,
        only: args.only.clone(),
    });
    let text = match args.format {
        TextFormat::Json => doc.to_json()?,
        TextFormat::Text => {
            let mut out = String::new();
            if let crate::report::Rows::Checks(checks) = &doc.rows {
                for c in checks {
                    let _ = writeln!(
                        out,
                        "{} {:<30} [{}] {}",
                        if c.passed { "PASS" } else { "FAIL" },
                        c.id,
                        c.group,
                        c.description
                    );
                    let _ = write!(out, "     ");
                    if let Some(e) = c.expected {
                        let _ = write!(out, "expected={} ", crate::report::sig17(e.0));
                    }
                    if let Some(o) = c.observed {
                        let _ = write!(out, "observed={} ", crate::report::sig17(o.0));
                    }
                    let _ = writeln!(
                        out,
                        "residual={} tolerance={}",
                        crate::report::sig17(c.residual.0),
                        crate::report::sig17(c.tolerance.0)
                    );
                    if let Some(n) = &c.note {
                        let _ = writeln!(out, "     note: {n}");
                    }
                }
            }
            let _ = writeln!(
                out,
                "{} passed, {} failed",
                doc.summary.passed.unwrap_or(0),
                doc.summary.failed.unwrap_or(0)
            );
            out
        }
    };
    emit(args.out.as_deref(), &text)?;
    Ok(if doc.all_passed() { 0 } else { 1 })
}

fn cmd_network(args: &NetworkArgs) -> Result<i32> {
    let text = fs::read_to_string(&args.file)
        .map_err(|e| Error::Precondition(format!("cannot read {}: {e}", args.file.display())))?;
    let net: GateNetwork = text.parse()?;
    let num_qubits = args.qubits.unwrap_or_else(|| net.min_qubits().max(1));
    if num_qubits == 0 || num_qubits > MAX_QUBITS {
        return Err(Error::Precondition(format!(
            "register size must be 1..={MAX_QUBITS}, got {num_qubits}"
        )));
    }
    let (start, input) = match args.basis {
        Some(index) => (PureState::basis(num_qubits, index)?, None),
        None => {
            let input = resolve_input(&args.input)?;
            let mut state = input.state();
            if num_qubits > 1 {
                state = state.tensor(&PureState::basis(num_qubits - 1, 0)?)?;
            }
            (state, Some(input))
        }
    };
    let out = net.run(&start)?;
    if let (Some(input), 3) = (input, num_qubits) {
        let report = CopyReport::from_output(input, None, out)?;
        emit(None, &render_report(&report, args.format)?)?;
        return Ok(0);
    }
    let density = out.density();
    let reductions = (0..num_qubits)
        .map(|q| partial_trace(&density, &[q]))
        .collect::<Result<Vec<DensityMatrix>>>()?;
    let text = match args.format {
        TextFormat::Text => {
            let mut s = String::from("final state\n");
            for (label, amp) in basis_labels(num_qubits, false).iter().zip(out.amplitudes()) {
                let _ = writeln!(s, "  {label}  {}", complex_text(*amp));
            }
            s.push('\n');
            for (q, rho) in reductions.iter().enumerate() {
                s.push_str(&matrix_pair_text(&format!("rho_q{q}"), rho.matrix()));
            }
            s
        }
        TextFormat::Json => {
            #[derive(Serialize)]
            struct NetworkJson {
                /// `[re, im]` per basis state, ascending.
                amplitudes: Vec<[Sig17; 2]>,
                reductions: Vec<MatrixJson>,
            }
            let doc = NetworkJson {
                amplitudes: out
                    .amplitudes()
                    .iter()
                    .map(|z| [Sig17(z.re), Sig17(z.im)])
                    .collect(),
                reductions: reductions
                    .iter()
                    .map(|r| MatrixJson::new(r.matrix()))
                    .collect(),
            };
            let mut s = serde_json::to_string_pretty(&doc)
                .map_err(|e| Error::Precondition(format!("serialization failed: {e}")))?;
            s.push('\n');
            s
        }
    };
    emit(None, &text)?;
    Ok(0)
}

fn cmd_angles(args: &AnglesArgs) -> Result<i32> {
    let target = match (&args.c, args.variant) {
        (Some(c), _) => {
            let c: [f64; 4] = c.as_slice().try_into().map_err(|_| {
                Error::Precondition(format!("--c needs 4 amplitudes, got {}", c.len()))
            })?;
            PreparationAmplitudes::normalized(c)?
        }
        (None, Some(v)) => CopyVariant::from(v).preparation_amplitudes(),
        (None, None) => CopyVariant::Duplicator.preparation_amplitudes(),
    };
    let angles = solve_preparation_angles(&target)?;
    let residual = angles.residual(&target);
    let text = match args.format {
        TextFormat::Text => {
            let t = target.values();
            format!(
                "target: {} {} {} {}\ntheta1={}\ntheta2={}\ntheta3={}\nresidual={}\n\nnetwork on qubits 1,2:\n{}",
                human(t[0]),
                human(t[1]),
                human(t[2]),
                human(t[3]),
                crate::report::sig17(angles.theta1),
                crate::report::sig17(angles.theta2),
                crate::report::sig17(angles.theta3),
                crate::report::sig17(residual),
                angles.network_on(1, 2)
            )
        }
        TextFormat::Json => {
            #[derive(Serialize)]
            struct AnglesJson {
                target: Vec<Sig17>,
                theta: Vec<Sig17>,
                residual: Sig17,
            }
            let doc = AnglesJson {
                target: target.values().into_iter().map(Sig17).collect(),
                theta: angles.as_array().into_iter().map(Sig17).collect(),
                residual: Sig17(residual),
            };
            let mut s = serde_json::to_string_pretty(&doc)
                .map_err(|e| Error::Precondition(format!("serialization failed: {e}")))?;
            s.push('\n');
            s
        }
    };
    emit(None, &text)?;
    Ok(0)
}
