//! Functions built on the exponential and logarithm: powers and roots, and the forward
//! and inverse trigonometric and hyperbolic functions.
//!
//! Inverse functions take square roots with the principal root `exp(½ log ·)` and apply
//! the caller's branch parameters to the outer logarithms. The other roots can be fed
//! in through the `*_with_root` variants.

use std::f64::consts::FRAC_PI_2;
use std::fmt;
use std::str::FromStr;

use crate::branching::BranchParams;
use crate::error::{MvError, Result};
use crate::exponential::exp;
use crate::ga_core::{Multivector, Signature};
use crate::logarithm::log;

/// Exponent of [`power`]: an exact rational or a real number.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Exponent {
    Rational { num: i64, den: i64 },
    Real(f64),
}

impl Exponent {
    pub fn rational(num: i64, den: i64) -> Result<Self> {
        if den == 0 {
            return Err(MvError::Usage("exponent denominator is zero".into()));
        }
        Ok(Exponent::Rational { num, den })
    }

    pub fn value(self) -> f64 {
        match self {
            Exponent::Rational { num, den } => num as f64 / den as f64,
            Exponent::Real(r) => r,
        }
    }

    /// The exponent as an integer, when it is one.
    pub fn as_integer(self) -> Option<i64> {
        match self {
            Exponent::Rational { num, den } if num % den == 0 => Some(num / den),
            Exponent::Rational { .. } => None,
            Exponent::Real(r) if r.fract() == 0.0 && r.abs() < 9.0e15 => Some(r as i64),
            Exponent::Real(_) => None,
        }
    }
}

impl FromStr for Exponent {
    type Err = MvError;

    /// Parses `p/q` or a decimal.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || MvError::Usage(format!("invalid exponent `{s}`"));
        if let Some((p, q)) = s.split_once('/') {
            let num = p.trim().parse().map_err(|_| bad())?;
            let den = q.trim().parse().map_err(|_| bad())?;
            return Exponent::rational(num, den);
        }
        if let Ok(n) = s.parse::<i64>() {
            return Ok(Exponent::Rational { num: n, den: 1 });
        }
        let r: f64 = s.parse().map_err(|_| bad())?;
        if !r.is_finite() {
            return Err(bad());
        }
        Ok(Exponent::Real(r))
    }
}

impl fmt::Display for Exponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Exponent::Rational { num, den: 1 } => write!(f, "{num}"),
            Exponent::Rational { num, den } => write!(f, "{num}/{den}"),
            Exponent::Real(r) => write!(f, "{r}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct PowerSpec {
    pub exponent: Exponent,
    pub branch: BranchParams,
}

impl PowerSpec {
    pub fn principal(exponent: Exponent) -> Self {
        PowerSpec { exponent, branch: BranchParams::principal() }
    }
}

/// `A^r = exp(r log A)`.
///
/// When the logarithm carries `log(0₊)`, integer exponents fall back to repeated
/// products (negative ones fail as the input is singular) and other exponents are
/// rejected as not representable.
pub fn power(a: &Multivector, spec: &PowerSpec) -> Result<Multivector> {
    let l = log(a, &spec.branch)?.into_value()?;
    if let Some(f) = l.as_finite() {
        return Ok(exp(&f.scale(spec.exponent.value())));
    }
    match spec.exponent.as_integer() {
        Some(n) if n >= 0 => Ok(integer_power(a, n as u64)),
        Some(_) => Err(MvError::NonInvertible { det: a.determinant() }),
        None => Err(MvError::NonRepresentable(format!(
            "A^{} of a multivector whose logarithm contains log(0+)",
            spec.exponent
        ))),
    }
}

/// Principal square root `exp(½ log A)`.
pub fn sqrt(a: &Multivector) -> Result<Multivector> {
    power(a, &PowerSpec::principal(Exponent::Rational { num: 1, den: 2 }))
}

fn integer_power(a: &Multivector, mut n: u64) -> Multivector {
    let mut acc = Multivector::one(a.sig());
    let mut base = *a;
    while n > 0 {
        if n & 1 == 1 {
            acc = acc * base;
        }
        base = base * base;
        n >>= 1;
    }
    acc
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum HyperbolicFn {
    Sinh,
    Cosh,
    Tanh,
    Coth,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TrigFn {
    Sin,
    Cos,
    Tan,
    Cot,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum InverseHyperbolicFn {
    Arctanh,
    Arccoth,
    Arccosh,
    Arcsinh,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum InverseTrigFn {
    Arcsin,
    Arccos,
    Arctan,
    Arccot,
}

/// `sinh`, `cosh`, `tanh` or `coth` through `exp(±A)`.
pub fn forward_hyperbolic(a: &Multivector, which: HyperbolicFn) -> Result<Multivector> {
    let (ep, em) = (exp(a), exp(&-*a));
    let sinh = (ep - em).scale(0.5);
    let cosh = (ep + em).scale(0.5);
    Ok(match which {
        HyperbolicFn::Sinh => sinh,
        HyperbolicFn::Cosh => cosh,
        HyperbolicFn::Tanh => sinh * cosh.inverse()?,
        HyperbolicFn::Coth => cosh * sinh.inverse()?,
    })
}

/// `sin`, `cos`, `tan` or `cot` through `exp(±IA)`. Needs a central `I` with `I² = −1`,
/// so only Cl(3,0) and Cl(1,2) are accepted.
pub fn forward_trigonometric(a: &Multivector, which: TrigFn) -> Result<Multivector> {
    let i = trig_pseudoscalar(a.sig(), "forward_trigonometric")?;
    let ia = i * *a;
    let (ep, em) = (exp(&ia), exp(&-ia));
    // I⁻¹ = −I.
    let sin = (-i * (ep - em)).scale(0.5);
    let cos = (ep + em).scale(0.5);
    Ok(match which {
        TrigFn::Sin => sin,
        TrigFn::Cos => cos,
        TrigFn::Tan => sin * cos.inverse()?,
        TrigFn::Cot => cos * sin.inverse()?,
    })
}

fn trig_pseudoscalar(sig: Signature, op: &'static str) -> Result<Multivector> {
    match sig {
        Signature::Cl30 | Signature::Cl12 => Ok(Multivector::pseudoscalar(sig)),
        _ => Err(MvError::UnsupportedSignature { op, sig }),
    }
}

/// Logarithm that must exist and be finite.
fn log_finite(a: &Multivector, b: &BranchParams) -> Result<Multivector> {
    log(a, b)?.into_value()?.as_finite().ok_or_else(|| {
        MvError::NonRepresentable(format!("log({a}) contains log(0+)"))
    })
}

fn is_zero(a: &Multivector) -> bool {
    a.max_abs() == 0.0
}

/// `arctanh`, `arccoth`, `arccosh` or `arcsinh`.
pub fn inverse_hyperbolic(a: &Multivector, which: InverseHyperbolicFn, b: &BranchParams) -> Result<Multivector> {
    let sig = a.sig();
    match which {
        InverseHyperbolicFn::Arctanh => Ok((log_finite(&(*a + 1.0), b)? - log_finite(&(1.0 - *a), b)?).scale(0.5)),
        InverseHyperbolicFn::Arccoth => {
            if is_zero(a) {
                // coth X = 0 needs cosh X = 0, so X = (π/2)J with J central-like and J² = −1.
                let j = match sig {
                    Signature::Cl30 | Signature::Cl12 => Multivector::pseudoscalar(sig),
                    _ => b.unit_bivector(sig)?,
                };
                return Ok(j.scale(FRAC_PI_2));
            }
            let inv = a.inverse()?;
            Ok((log_finite(&(inv + 1.0), b)? - log_finite(&(1.0 - inv), b)?).scale(0.5))
        }
        InverseHyperbolicFn::Arccosh => arccosh_with_roots(a, &sqrt(&(*a - 1.0))?, &sqrt(&(*a + 1.0))?, b),
        InverseHyperbolicFn::Arcsinh => arcsinh_with_root(a, &sqrt(&(*a * *a + 1.0))?, b),
    }
}

/// `log(A + R₋R₊)` where `R∓` are square roots of `A ∓ 1`.
pub fn arccosh_with_roots(a: &Multivector, root_minus: &Multivector, root_plus: &Multivector, b: &BranchParams) -> Result<Multivector> {
    log_finite(&(*a + *root_minus * *root_plus), b)
}

/// `log(A + R)` where `R` is a square root of `A² + 1`.
pub fn arcsinh_with_root(a: &Multivector, root: &Multivector, b: &BranchParams) -> Result<Multivector> {
    log_finite(&(*a + *root), b)
}

/// `arcsin`, `arccos`, `arctan` or `arccot`; Cl(3,0) and Cl(1,2) only.
pub fn inverse_trigonometric(a: &Multivector, which: InverseTrigFn, b: &BranchParams) -> Result<Multivector> {
    let i = trig_pseudoscalar(a.sig(), "inverse_trigonometric")?;
    match which {
        InverseTrigFn::Arcsin | InverseTrigFn::Arccos => {
            let root = sqrt(&(1.0 - *a * *a))?;
            let l = arcsin_log(a, &root, b)?;
            Ok(match which {
                InverseTrigFn::Arcsin => -i * l,
                _ => i * l + FRAC_PI_2,
            })
        }
        InverseTrigFn::Arctan => {
            let ia = i * *a;
            Ok((i * (log_finite(&(1.0 - ia), b)? - log_finite(&(ia + 1.0), b)?)).scale(0.5))
        }
        InverseTrigFn::Arccot => {
            if is_zero(a) {
                return Ok(Multivector::scalar(a.sig(), FRAC_PI_2));
            }
            let ia = i * a.inverse()?;
            Ok((i * (log_finite(&(1.0 - ia), b)? - log_finite(&(ia + 1.0), b)?)).scale(0.5))
        }
    }
}

/// `−I log(AI + R)` where `R` is a square root of `1 − A²`.
pub fn arcsin_with_root(a: &Multivector, root: &Multivector, b: &BranchParams) -> Result<Multivector> {
    let i = trig_pseudoscalar(a.sig(), "arcsin")?;
    Ok(-i * arcsin_log(a, root, b)?)
}

fn arcsin_log(a: &Multivector, root: &Multivector, b: &BranchParams) -> Result<Multivector> {
    let i = Multivector::pseudoscalar(a.sig());
    log_finite(&(*a * i + *root), b)
}

/// Any of the functions above, addressed by name.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum NamedFunction {
    Hyperbolic(HyperbolicFn),
    Trig(TrigFn),
    InverseHyperbolic(InverseHyperbolicFn),
    InverseTrig(InverseTrigFn),
    Sqrt,
}

impl NamedFunction {
    pub const ALL: [NamedFunction; 17] = [
        NamedFunction::Hyperbolic(HyperbolicFn::Sinh),
        NamedFunction::Hyperbolic(HyperbolicFn::Cosh),
        NamedFunction::Hyperbolic(HyperbolicFn::Tanh),
        NamedFunction::Hyperbolic(HyperbolicFn::Coth),
        NamedFunction::Trig(TrigFn::Sin),
        NamedFunction::Trig(TrigFn::Cos),
        NamedFunction::Trig(TrigFn::Tan),
        NamedFunction::Trig(TrigFn::Cot),
        NamedFunction::InverseHyperbolic(InverseHyperbolicFn::Arctanh),
        NamedFunction::InverseHyperbolic(InverseHyperbolicFn::Arccoth),
        NamedFunction::InverseHyperbolic(InverseHyperbolicFn::Arccosh),
        NamedFunction::InverseHyperbolic(InverseHyperbolicFn::Arcsinh),
        NamedFunction::InverseTrig(InverseTrigFn::Arcsin),
        NamedFunction::InverseTrig(InverseTrigFn::Arccos),
        NamedFunction::InverseTrig(InverseTrigFn::Arctan),
        NamedFunction::InverseTrig(InverseTrigFn::Arccot),
        NamedFunction::Sqrt,
    ];

    pub fn name(self) -> &'static str {
        use NamedFunction::*;
        match self {
            Hyperbolic(HyperbolicFn::Sinh) => "sinh",
            Hyperbolic(HyperbolicFn::Cosh) => "cosh",
            Hyperbolic(HyperbolicFn::Tanh) => "tanh",
            Hyperbolic(HyperbolicFn::Coth) => "coth",
            Trig(TrigFn::Sin) => "sin",
            Trig(TrigFn::Cos) => "cos",
            Trig(TrigFn::Tan) => "tan",
            Trig(TrigFn::Cot) => "cot",
            InverseHyperbolic(InverseHyperbolicFn::Arctanh) => "arctanh",
            InverseHyperbolic(InverseHyperbolicFn::Arccoth) => "arccoth",
            InverseHyperbolic(InverseHyperbolicFn::Arccosh) => "arccosh",
            InverseHyperbolic(InverseHyperbolicFn::Arcsinh) => "arcsinh",
            InverseTrig(InverseTrigFn::Arcsin) => "arcsin",
            InverseTrig(InverseTrigFn::Arccos) => "arccos",
            InverseTrig(InverseTrigFn::Arctan) => "arctan",
            InverseTrig(InverseTrigFn::Arccot) => "arccot",
            Sqrt => "sqrt",
        }
    }

    pub fn evaluate(self, a: &Multivector, b: &BranchParams) -> Result<Multivector> {
        match self {
            NamedFunction::Hyperbolic(f) => forward_hyperbolic(a, f),
            NamedFunction::Trig(f) => forward_trigonometric(a, f),
            NamedFunction::InverseHyperbolic(f) => inverse_hyperbolic(a, f, b),
            NamedFunction::InverseTrig(f) => inverse_trigonometric(a, f, b),
            NamedFunction::Sqrt => power(a, &PowerSpec { exponent: Exponent::Rational { num: 1, den: 2 }, branch: b.clone() }),
        }
    }
}

impl FromStr for NamedFunction {
    type Err = MvError;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().to_ascii_lowercase();
        NamedFunction::ALL.into_iter().find(|f| f.name() == s).ok_or_else(|| {
            let names: Vec<_> = NamedFunction::ALL.iter().map(|f| f.name()).collect();
            MvError::Usage(format!("unknown function `{s}`, expected one of {}", names.join(", ")))
        })
    }
}

impl fmt::Display for NamedFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}
