//! Command-line front end for `mvlog`.
//!
//! [`run`] parses arguments, evaluates one command and returns the rendered output with
//! the process exit code, so the binary is a thin wrapper and tests can call it directly.

pub mod document;
pub mod parse;
pub mod roundtrip;

use clap::{Args, Parser, Subcommand};

use mvlog::{
    exp, exp_closed_cl03, exp_series, log, log_series, min_sheet, power, BranchParams, Exponent, LogOutcome,
    Multivector, MvError, NamedFunction, PowerSpec, Signature, Tolerance,
};

use document::{format_number, Outcome, ResultDocument};
pub use parse::{parse_mv, print_mv, ParseError};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_NONEXISTENT: i32 = 3;
pub const EXIT_SINGULAR: i32 = 4;
pub const EXIT_VERIFY: i32 = 5;

#[derive(Debug, Parser)]
#[command(name = "mvlog", version, about = "Logarithms, exponentials and powers of 3D multivectors")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct GlobalArgs {
    /// Algebra: cl03, cl30, cl12 or cl21 (default cl30; `roundtrip` runs all four when omitted).
    #[arg(long, global = true, value_parser = parse_signature)]
    pub algebra: Option<Signature>,
    /// Branch constants, e.g. "c1p=0,c1m=0,c2p=0,c2m=0" (`c1`, `c2` alias the plus constants).
    #[arg(long, global = true, value_parser = parse_branch, default_value = "")]
    pub branch: BranchConstants,
    /// Direction of the free unit vector, "x,y,z".
    #[arg(long, global = true, value_parser = parse_triple, allow_hyphen_values = true)]
    pub free_vec: Option<[f64; 3]>,
    /// Direction of the free unit bivector, "x,y,z" over (e12, e13, e23).
    #[arg(long, global = true, value_parser = parse_triple, allow_hyphen_values = true)]
    pub free_biv: Option<[f64; 3]>,
    /// Print the result document as JSON.
    #[arg(long, global = true)]
    pub json: bool,
    /// Relative tolerance of the case analysis (default 1e-12 or $MVLOG_TOL).
    #[arg(long, global = true)]
    pub tol: Option<f64>,
    /// Also report a verification residual.
    #[arg(long, global = true)]
    pub residual: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Logarithm on the sheet selected by --branch.
    Log(Input),
    /// Exponential.
    Exp(Input),
    /// Power exp(r log A).
    Pow {
        /// Exponent, "p/q" or a decimal.
        #[arg(long = "r", value_parser = parse_exponent, allow_hyphen_values = true)]
        r: Exponent,
        #[command(flatten)]
        input: Input,
    },
    /// Elementary function by name (sinh, ..., arccot, sqrt).
    Fn {
        #[arg(long, value_parser = parse_function)]
        name: NamedFunction,
        #[command(flatten)]
        input: Input,
    },
    /// Mercator series logarithm about 1.
    SeriesLog {
        #[arg(long, default_value_t = 2000)]
        max_terms: usize,
        #[command(flatten)]
        input: Input,
    },
    /// Determinant Det(A).
    Det(Input),
    /// Determinant norm |Det(A)|^(1/4).
    Norm(Input),
    /// Random exp(log A) = A check over uniform coefficients in [-10, 10].
    Roundtrip {
        #[arg(long, default_value_t = 1000)]
        count: usize,
        #[arg(long)]
        seed: u64,
    },
    /// Sheet of smallest determinant norm with every constant in [-cmax, cmax].
    MinSheet {
        #[arg(long, default_value_t = 2)]
        cmax: u32,
        #[command(flatten)]
        input: Input,
    },
}

#[derive(Debug, Args)]
pub struct Input {
    /// Multivector expression, e.g. "-2 + e1 + e23 - 3e123".
    #[arg(allow_hyphen_values = true)]
    pub expr: String,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct BranchConstants {
    pub c1p: i64,
    pub c1m: i64,
    pub c2p: i64,
    pub c2m: i64,
}

fn parse_signature(s: &str) -> Result<Signature, String> {
    s.parse().map_err(|e: MvError| e.to_string())
}

fn parse_exponent(s: &str) -> Result<Exponent, String> {
    s.parse().map_err(|e: MvError| e.to_string())
}

fn parse_function(s: &str) -> Result<NamedFunction, String> {
    s.parse().map_err(|e: MvError| e.to_string())
}

fn parse_branch(s: &str) -> Result<BranchConstants, String> {
    let mut out = BranchConstants::default();
    for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let (key, value) = part.split_once('=').ok_or_else(|| format!("expected key=value, got `{part}`"))?;
        let v: i64 = value.trim().parse().map_err(|_| format!("branch constant `{value}` is not an integer"))?;
        match key.trim() {
            "c1p" | "c1" => out.c1p = v,
            "c1m" => out.c1m = v,
            "c2p" | "c2" => out.c2p = v,
            "c2m" => out.c2m = v,
            other => return Err(format!("unknown branch constant `{other}` (expected c1p, c1m, c2p, c2m)")),
        }
    }
    Ok(out)
}

fn parse_triple(s: &str) -> Result<[f64; 3], String> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    let [x, y, z] = parts[..] else { return Err(format!("expected x,y,z, got `{s}`")) };
    let num = |t: &str| t.parse::<f64>().ok().filter(|v| v.is_finite()).ok_or_else(|| format!("`{t}` is not a number"));
    let v = [num(x)?, num(y)?, num(z)?];
    if v == [0.0; 3] {
        return Err("direction must be nonzero".into());
    }
    Ok(v)
}

impl GlobalArgs {
    pub fn branch_params(&self) -> BranchParams {
        let c = self.branch;
        BranchParams {
            c1_plus: c.c1p,
            c1_minus: c.c1m,
            c2_plus: c.c2p,
            c2_minus: c.c2m,
            free_vector: self.free_vec,
            free_bivector: self.free_biv,
        }
    }
}

/// Rendered output of one invocation.
#[derive(Clone, Debug, PartialEq)]
pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Output {
    fn usage(msg: impl Into<String>) -> Self {
        Output { code: EXIT_USAGE, stdout: String::new(), stderr: msg.into() }
    }
}

/// Runs the command line `args` (including the program name).
pub fn run<I, T>(args: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => execute(&cli),
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            if code == EXIT_OK {
                Output { code, stdout: text, stderr: String::new() }
            } else {
                Output::usage(text)
            }
        }
    }
}

pub fn execute(cli: &Cli) -> Output {
    let g = &cli.global;
    if let Some(t) = g.tol {
        if !(t.is_finite() && t > 0.0) {
            return Output::usage(format!("--tol must be positive, got {t}"));
        }
        Tolerance::set_default(t);
    }
    let b = g.branch_params();
    if let Command::Roundtrip { count, seed } = cli.command {
        let sigs = g.algebra.map_or(Signature::ALL.to_vec(), |s| vec![s]);
        let doc = roundtrip::run(&sigs, count, seed, &b);
        let code = if doc.passed() { EXIT_OK } else { EXIT_VERIFY };
        let stdout = if g.json { doc.to_json() + "\n" } else { doc.to_text() };
        return Output { code, stdout, stderr: String::new() };
    }

    let sig = g.algebra.unwrap_or(Signature::Cl30);
    let expr = match &cli.command {
        Command::Log(i) | Command::Exp(i) | Command::Det(i) | Command::Norm(i) => &i.expr,
        Command::Pow { input, .. } | Command::Fn { input, .. } | Command::SeriesLog { input, .. } => &input.expr,
        Command::MinSheet { input, .. } => &input.expr,
        Command::Roundtrip { .. } => unreachable!("handled above"),
    };
    let a = match parse_mv(expr, sig) {
        Ok(a) => a,
        Err(e) => return Output::usage(format!("{e}\n  {expr}\n  {}^\n", " ".repeat(e.pos))),
    };
    let (doc, code, err) = match evaluate(&cli.command, &a, &b, g.residual) {
        Ok((doc, code)) => (doc, code, None),
        Err(e) => {
            let code = error_code(&e);
            let op = op_name(&cli.command);
            let mut doc = ResultDocument::new(op, &a, &b, Outcome::missing());
            if let MvError::NonExistent(r) = &e {
                // Keep the case row that rejected the input.
                if let Ok(l) = log(&a, &b) {
                    doc.outcome.case_row = Some(l.case.to_string());
                }
                doc.notes.push(format!("no logarithm: {r}"));
            }
            (doc, code, Some(e.to_string()))
        }
    };
    let stdout = if g.json { doc.to_json() + "\n" } else { doc.to_text() };
    let stderr = err.map(|e| format!("mvlog: {e}\n")).unwrap_or_default();
    Output { code, stdout, stderr }
}

fn error_code(e: &MvError) -> i32 {
    match e {
        MvError::NonExistent(_) => EXIT_NONEXISTENT,
        MvError::NonRepresentable(_) | MvError::NonInvertible { .. } | MvError::UndefinedArctan => EXIT_SINGULAR,
        MvError::UnsupportedSignature { .. } | MvError::SignatureMismatch { .. } | MvError::Usage(_) => EXIT_USAGE,
    }
}

fn op_name(c: &Command) -> String {
    match c {
        Command::Log(_) => "log".into(),
        Command::Exp(_) => "exp".into(),
        Command::Pow { r, .. } => format!("pow[{r}]"),
        Command::Fn { name, .. } => name.name().into(),
        Command::SeriesLog { .. } => "series-log".into(),
        Command::Det(_) => "det".into(),
        Command::Norm(_) => "norm".into(),
        Command::Roundtrip { .. } => "roundtrip".into(),
        Command::MinSheet { .. } => "min-sheet".into(),
    }
}

fn evaluate(c: &Command, a: &Multivector, b: &BranchParams, want_residual: bool) -> mvlog::Result<(ResultDocument, i32)> {
    let op = op_name(c);
    let sig = a.sig();
    Ok(match c {
        Command::Log(_) => {
            let res = log(a, b)?;
            let case = res.case.to_string();
            match res.outcome {
                LogOutcome::NonExistent(r) => {
                    let mut doc = ResultDocument::new(op, a, b, Outcome::missing());
                    doc.outcome.case_row = Some(case);
                    doc.notes.push(format!("no logarithm: {r}"));
                    (doc, EXIT_NONEXISTENT)
                }
                LogOutcome::Exists { value, family } => {
                    let mut outcome = Outcome::extended(&value);
                    outcome.case_row = Some(case);
                    outcome.free_family = Some(family.to_string());
                    let mut doc = ResultDocument::new(op, a, b, outcome);
                    doc.family = Some(family);
                    let code = if value.has_lambda() { EXIT_SINGULAR } else { EXIT_OK };
                    if want_residual {
                        doc.residual = Some(match value.as_finite() {
                            Some(v) => exp_series(&v).relative_residual(a),
                            // Substitute log(0+) -> log(eps) at a small eps.
                            None => exp_series(&value.substitute(1e-8)).relative_residual(a),
                        });
                    }
                    (doc, code)
                }
            }
        }
        Command::Exp(_) => {
            let v = exp(a);
            let mut doc = ResultDocument::new(op, a, b, Outcome::value(&v));
            if want_residual {
                // Closed form against the series in Cl(0,3), else the series against itself at double order.
                doc.residual = Some(match sig {
                    Signature::Cl03 => exp_closed_cl03(a).expect("signature checked").relative_residual(&exp_series(a)),
                    _ => {
                        let half = exp_series(&a.scale(0.5));
                        (half * half).relative_residual(&v)
                    }
                });
            }
            (doc, EXIT_OK)
        }
        Command::Pow { r, .. } => {
            let spec = PowerSpec { exponent: *r, branch: b.clone() };
            let v = power(a, &spec)?;
            let mut doc = ResultDocument::new(op, a, b, Outcome::value(&v));
            if want_residual {
                if let Exponent::Rational { num, den } = *r {
                    let int_pow = |m: &Multivector, k: i64| power(m, &PowerSpec::principal(Exponent::Rational { num: k, den: 1 }));
                    if let (Ok(lhs), Ok(rhs)) = (int_pow(&v, den), int_pow(a, num)) {
                        doc.residual = Some(lhs.relative_residual(&rhs));
                    }
                }
            }
            (doc, EXIT_OK)
        }
        Command::Fn { name, .. } => {
            let v = name.evaluate(a, b)?;
            let mut doc = ResultDocument::new(op, a, b, Outcome::value(&v));
            if want_residual {
                if let Some(forward) = forward_of(*name) {
                    doc.residual = forward.evaluate(&v, b).ok().map(|f| f.relative_residual(a));
                }
            }
            (doc, EXIT_OK)
        }
        Command::SeriesLog { max_terms, .. } => {
            let s = log_series(a, *max_terms);
            let mut outcome = Outcome::value(&s.value);
            outcome.exists = s.converged;
            let mut doc = ResultDocument::new(op, a, b, outcome);
            doc.notes.push(format!("converged: {} after {} terms", s.converged, s.terms));
            if want_residual {
                doc.residual = log(a, &BranchParams::principal()).ok().and_then(|l| l.finite()).map(|l| s.value.relative_residual(&l));
            }
            (doc, EXIT_OK)
        }
        Command::Det(_) => {
            let d = a.determinant();
            (ResultDocument::new(op, a, b, Outcome::value(&Multivector::scalar(sig, d))), EXIT_OK)
        }
        Command::Norm(_) => {
            let n = a.norm();
            (ResultDocument::new(op, a, b, Outcome::value(&Multivector::scalar(sig, n))), EXIT_OK)
        }
        Command::MinSheet { cmax, .. } => {
            let m = min_sheet(a, *cmax)?;
            let mut doc = ResultDocument::new(op, a, &m.params, Outcome::value(&m.value));
            doc.notes.push(format!("determinant norm: {}", format_number(m.det_norm)));
            if want_residual {
                doc.residual = Some(exp_series(&m.value).relative_residual(a));
            }
            (doc, EXIT_OK)
        }
        Command::Roundtrip { .. } => unreachable!("roundtrip has its own document"),
    })
}

/// Forward function whose value at `f(A)` should give back `A`.
fn forward_of(f: NamedFunction) -> Option<NamedFunction> {
    use mvlog::{HyperbolicFn as H, InverseHyperbolicFn as IH, InverseTrigFn as IT, TrigFn as T};
    Some(match f {
        NamedFunction::InverseHyperbolic(g) => NamedFunction::Hyperbolic(match g {
            IH::Arctanh => H::Tanh,
            IH::Arccoth => H::Coth,
            IH::Arccosh => H::Cosh,
            IH::Arcsinh => H::Sinh,
        }),
        NamedFunction::InverseTrig(g) => NamedFunction::Trig(match g {
            IT::Arcsin => T::Sin,
            IT::Arccos => T::Cos,
            IT::Arctan => T::Tan,
            IT::Arccot => T::Cot,
        }),
        _ => return None,
    })
}
