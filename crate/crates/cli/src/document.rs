//! Result documents and their JSON and text renderings.

use serde::Serialize;

use mvlog::{Blade, BranchParams, ExtendedMultivector, FreeFamily, Multivector, Signature, LAMBDA_TOKEN};

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BranchDoc {
    pub c1p: i64,
    pub c1m: i64,
    pub c2p: i64,
    pub c2m: i64,
    pub free_vec: Option<[f64; 3]>,
    pub free_biv: Option<[f64; 3]>,
}

impl From<&BranchParams> for BranchDoc {
    fn from(b: &BranchParams) -> Self {
        BranchDoc {
            c1p: b.c1_plus,
            c1m: b.c1_minus,
            c2p: b.c2_plus,
            c2m: b.c2_minus,
            free_vec: b.free_vector,
            free_biv: b.free_bivector,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Outcome {
    pub exists: bool,
    /// Finite parts of the coefficients.
    pub coeffs: Option<[f64; 8]>,
    /// Multipliers of `log(0+)` in each coefficient.
    pub lambda_coeffs: Option<[f64; 8]>,
    pub case_row: Option<String>,
    pub free_family: Option<String>,
}

impl Outcome {
    pub fn value(v: &Multivector) -> Self {
        Outcome { exists: true, coeffs: Some(*v.coeffs()), lambda_coeffs: Some([0.0; 8]), case_row: None, free_family: None }
    }

    pub fn extended(v: &ExtendedMultivector) -> Self {
        let pairs = v.pairs();
        Outcome {
            exists: true,
            coeffs: Some(pairs.map(|p| p.0)),
            lambda_coeffs: Some(pairs.map(|p| p.1)),
            case_row: None,
            free_family: None,
        }
    }

    pub fn missing() -> Self {
        Outcome { exists: false, coeffs: None, lambda_coeffs: None, case_row: None, free_family: None }
    }
}

/// Output of every single-input command.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ResultDocument {
    pub algebra: &'static str,
    pub op: String,
    pub input: [f64; 8],
    pub branch: BranchDoc,
    pub outcome: Outcome,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub residual: Option<f64>,
    /// Extra human-readable lines for text mode.
    #[serde(skip)]
    pub notes: Vec<String>,
    #[serde(skip)]
    pub family: Option<FreeFamily>,
}

impl ResultDocument {
    pub fn new(op: impl Into<String>, input: &Multivector, branch: &BranchParams, outcome: Outcome) -> Self {
        ResultDocument {
            algebra: input.sig().name(),
            op: op.into(),
            input: *input.coeffs(),
            branch: branch.into(),
            outcome,
            residual: None,
            notes: Vec::new(),
            family: None,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("documents serialize")
    }

    pub fn to_text(&self) -> String {
        let sig = parse_sig(self.algebra);
        let mut out = String::new();
        let input = Multivector::new(sig, self.input);
        out += &format!("{} {}({})\n", self.algebra, self.op, format_mv(&input));
        let b = &self.branch;
        if (b.c1p, b.c1m, b.c2p, b.c2m) != (0, 0, 0, 0) || b.free_vec.is_some() || b.free_biv.is_some() {
            out += &format!("branch: c1p={} c1m={} c2p={} c2m={}", b.c1p, b.c1m, b.c2p, b.c2m);
            if let Some(v) = b.free_vec {
                out += &format!(" free_vec={}", format_triple(v));
            }
            if let Some(v) = b.free_biv {
                out += &format!(" free_biv={}", format_triple(v));
            }
            out += "\n";
        }
        if let Some(case) = &self.outcome.case_row {
            out += &format!("case: {case}\n");
        }
        match (&self.outcome.coeffs, &self.outcome.lambda_coeffs) {
            (Some(c), Some(l)) if self.outcome.exists => {
                let v = ExtendedMultivector::new(Multivector::new(sig, *c), Multivector::new(sig, *l));
                out += &format!("value: {}\n", format_extended(&v));
            }
            (Some(c), _) => out += &format!("value: {}\n", format_mv(&Multivector::new(sig, *c))),
            _ => out += "value: none\n",
        }
        if let Some(f) = &self.family {
            out += &format!("free family: {}\n", format_family(f));
        }
        for n in &self.notes {
            out += n;
            out += "\n";
        }
        if let Some(r) = self.residual {
            out += &format!("residual: {}\n", format_number(r));
        }
        out
    }
}

fn parse_sig(name: &str) -> Signature {
    name.parse().expect("documents hold valid algebra names")
}

/// Formats `x` with 10 significant digits, trimming trailing zeros.
pub fn format_number(x: f64) -> String {
    if x == 0.0 {
        return "0".into();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let exp = x.abs().log10().floor() as i32;
    if (-5..10).contains(&exp) {
        let decimals = (9 - exp).max(0) as usize;
        let s = format!("{x:.decimals$}");
        let s = if s.contains('.') { s.trim_end_matches('0').trim_end_matches('.').to_string() } else { s };
        if s == "-0" { "0".into() } else { s }
    } else {
        let s = format!("{x:.9e}");
        let (mant, e) = s.split_once('e').expect("scientific format");
        let mant = mant.trim_end_matches('0').trim_end_matches('.');
        format!("{mant}e{e}")
    }
}

fn format_triple(v: [f64; 3]) -> String {
    v.map(format_number).join(",")
}

/// A multivector with 10 significant digits per coefficient.
pub fn format_mv(a: &Multivector) -> String {
    join_terms(Blade::ALL.iter().zip(a.coeffs()).filter(|(_, c)| **c != 0.0).map(|(b, c)| (*b, *c, None)))
}

/// An extended multivector, writing `λ` as `log(0+)`.
pub fn format_extended(a: &ExtendedMultivector) -> String {
    join_terms(
        Blade::ALL
            .iter()
            .zip(a.pairs())
            .filter(|(_, (x, l))| *x != 0.0 || *l != 0.0)
            .map(|(b, (x, l))| (*b, x, (l != 0.0).then_some(l))),
    )
}

fn join_terms(terms: impl Iterator<Item = (Blade, f64, Option<f64>)>) -> String {
    let mut out = String::new();
    for (blade, x, lambda) in terms {
        let (neg, body) = match lambda {
            None => (x < 0.0, format_number(x.abs())),
            Some(l) if x == 0.0 => (l < 0.0, format!("{}*{LAMBDA_TOKEN}", format_number(l.abs()))),
            Some(l) => {
                let sign = if l < 0.0 { '-' } else { '+' };
                (false, format!("({} {sign} {}*{LAMBDA_TOKEN})", format_number(x), format_number(l.abs())))
            }
        };
        let term = if blade == Blade::S { body } else { format!("{body}*{}", blade.symbol()) };
        match (out.is_empty(), neg) {
            (true, true) => out += &format!("-{term}"),
            (true, false) => out += &term,
            (false, true) => out += &format!(" - {term}"),
            (false, false) => out += &format!(" + {term}"),
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn format_family(f: &FreeFamily) -> String {
    if f.is_empty() {
        return "none".into();
    }
    let mut parts = Vec::new();
    for g in &f.discrete {
        parts.push(format!("{}*({})", g.constant.name(g.generator.sig()), format_mv(&g.generator)));
    }
    for s in &f.continuous {
        let dir = match s.kind {
            mvlog::branching::SlotKind::UnitVector => "u",
            mvlog::branching::SlotKind::UnitBivector => "U",
        };
        parts.push(format!("({})*{dir}", format_mv(&s.factor)));
    }
    parts.join(" + ")
}

/// One signature's line of a `roundtrip` report.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RoundtripRow {
    pub algebra: &'static str,
    pub samples: usize,
    pub draws: usize,
    pub rejected: usize,
    pub rejection_rate: f64,
    pub max_residual: f64,
    pub mean_residual: f64,
    pub failures: usize,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RoundtripDocument {
    pub op: &'static str,
    pub seed: u64,
    pub count: usize,
    pub branch: BranchDoc,
    pub threshold: f64,
    pub algebras: Vec<RoundtripRow>,
}

impl RoundtripDocument {
    pub fn passed(&self) -> bool {
        self.algebras.iter().all(|r| r.passed)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("documents serialize")
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("roundtrip seed={} count={} threshold={}\n", self.seed, self.count, format_number(self.threshold));
        for r in &self.algebras {
            out += &format!(
                "{}: {} samples, {} of {} draws rejected ({:.1}%), max residual {}, mean {}, {}\n",
                r.algebra,
                r.samples,
                r.rejected,
                r.draws,
                100.0 * r.rejection_rate,
                format_number(r.max_residual),
                format_number(r.mean_residual),
                if r.passed { "ok".to_string() } else { format!("FAILED ({} samples)", r.failures) },
            );
        }
        out
    }
}
