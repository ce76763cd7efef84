//! Closed-form multivector logarithms.
//!
//! Every result records which row of the case analysis produced it (see [`CaseRow`]),
//! so coverage of the special cases is testable.

mod blades;
mod cl03;
mod cl21;
mod cl30;
mod coordinate;
mod series;
mod sheet;

use std::fmt;

use crate::branching::{BranchParams, FreeFamily};
use crate::error::{MvError, Result};
use crate::extended::ExtendedMultivector;
use crate::ga_core::{Multivector, Signature, Tolerance};

pub use blades::{log_blade_cl03, log_blade_cl30, BladeKindCl03, BladeKindCl30};
pub use cl03::{cl03_intermediates, log_cl03, log_cl03_with, Cl03Intermediates};
pub use cl21::{cl21_intermediates, log_cl21, log_cl21_with, Cl21Intermediates};
pub use cl30::{cl30_intermediates, log_cl30, log_cl30_with, Cl30Intermediates};
pub use coordinate::log_cl03_coordinate;
pub use series::{log_series, SeriesLog};
pub use sheet::{free_multivector, min_sheet, MinSheet};

/// Row fired in one half of the Cl(0,3) split.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Cl03Row {
    /// `a± ≠ 0`.
    Generic,
    /// `a± = 0`, `a0 ± a123 > 0`.
    DegeneratePositive,
    /// `a± = 0`, `a0 ± a123 = 0`: the half contributes `log(0₊)`.
    DegenerateZero,
    /// `a± = 0`, `a0 ± a123 < 0`: a free unit vector appears.
    DegenerateNegative,
}

/// Row fired by the Cl(3,0) / Cl(1,2) logarithm.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Cl30Row {
    Generic,
    /// `k₋k₊ = 0`: the determinant vanishes and `log(0₊)` appears.
    SingularDeterminant,
    /// `k₋k₊ ≠ 0` but both arguments of the pseudoscalar arctangent vanish.
    CoincidentAngle,
    /// `a₊² + a₋² = 0`, `a0² + a123² ≠ 0`, `a + 𝒜 ≠ 0` (nilpotent vector-bivector part).
    CentralNilpotent,
    /// `a₊² + a₋² = 0`, `a0² + a123² ≠ 0`, `a + 𝒜 = 0`: a free unit bivector appears.
    CentralFree,
    /// The zero multivector, whose logarithm is `log(0₊)`.
    ZeroInput,
    /// `a₊² + a₋² = 0`, `a0² + a123² = 0`, input nonzero: no logarithm.
    Empty,
}

/// Row fired in one half of the Cl(2,1) split.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Cl21Row {
    /// `a±⁽²⁾ > 0`.
    Elliptic,
    /// `a±⁽²⁾ < 0`, `a0 ± a123 > 0`, `f± ≠ 0`.
    Hyperbolic,
    /// `a±⁽²⁾ < 0`, `a0 ± a123 > 0`, `f± = 0`: log-difference form with `log(0₊)`.
    HyperbolicBoundary,
    /// `a±⁽²⁾ = 0`, `a0 ± a123 > 0`, half not annihilated.
    ParabolicPositive,
    /// `a±⁽²⁾ = 0`, `a0 ± a123 > 0`, `(1 ± I)(a + 𝒜) = 0`: free unit bivector.
    ParabolicPositiveFree,
    /// `a±⁽²⁾ = 0`, `a0 ± a123 ≤ 0`, `(1 ± I)(a + 𝒜) = 0`.
    ParabolicNonPositive,
    /// `a±⁽²⁾ < 0`, `a0 ± a123 < 0`.
    EmptyHyperbolic,
    /// `a±⁽²⁾ = 0`, `a0 ± a123 ≤ 0`, half not annihilated.
    EmptyParabolic,
}

impl Cl21Row {
    pub fn is_empty(self) -> bool {
        matches!(self, Cl21Row::EmptyHyperbolic | Cl21Row::EmptyParabolic)
    }
}

/// Sign of `a0 ∓ a123` in the Cl(0,3) center formula.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CenterSide {
    Positive,
    Zero,
    Negative,
}

/// Row of the Cl(3,0) rotor formula. A rotor with zero scalar part is a bivector and
/// takes the bivector formula instead.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RotorRow {
    General,
    PositiveScalar,
    NegativeScalar,
}

/// Row fired by a blade shortcut.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BladeRow {
    Cl03Vector,
    Cl03Paravector,
    Cl03Bivector,
    Cl03Parabivector,
    Cl03Center { minus: CenterSide, plus: CenterSide },
    Cl30Vector,
    Cl30Bivector,
    Cl30Rotor(RotorRow),
    Cl30Center,
    Cl30CenterZero,
}

/// Which branch of the case analysis produced a [`LogResult`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CaseRow {
    Cl03 { plus: Cl03Row, minus: Cl03Row },
    Cl30 { row: Cl30Row, wedge_fallback: bool },
    Cl21 { plus: Cl21Row, minus: Cl21Row },
    Cl21NegativeFactor { plus: bool, minus: bool },
    Blade(BladeRow),
}

impl fmt::Display for CaseRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CaseRow::Cl03 { plus, minus } => write!(f, "cl03:plus={plus:?},minus={minus:?}"),
            CaseRow::Cl30 { row, wedge_fallback } => {
                write!(f, "cl30:{row:?}")?;
                if *wedge_fallback {
                    write!(f, ",wedge_fallback")?;
                }
                Ok(())
            }
            CaseRow::Cl21 { plus, minus } => write!(f, "cl21:plus={plus:?},minus={minus:?}"),
            CaseRow::Cl21NegativeFactor { plus, minus } => {
                write!(f, "cl21:negative_factor(plus={plus},minus={minus})")
            }
            CaseRow::Blade(b) => write!(f, "blade:{b:?}"),
        }
    }
}

/// Why a logarithm does not exist.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum NonExistence {
    /// Cl(3,0)/Cl(1,2): nonzero `a + 𝒜` with `Det(a + 𝒜) = 0` and `a0 = a123 = 0`.
    NilpotentVectorBivector,
    /// Cl(2,1): `f₊ < 0` and/or `f₋ < 0`.
    NegativeFactor { plus: bool, minus: bool },
    /// Cl(2,1): an empty row of the case table; `plus` names the half.
    EmptyRow { plus: bool, row: Cl21Row },
}

impl fmt::Display for NonExistence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NonExistence::NilpotentVectorBivector => {
                write!(f, "Det(a+A)=0 with a0=a123=0 and a+A nonzero")
            }
            NonExistence::NegativeFactor { plus, minus } => {
                let which: Vec<&str> =
                    [(*plus, "f+ < 0"), (*minus, "f- < 0")].iter().filter(|p| p.0).map(|p| p.1).collect();
                write!(f, "{}", which.join(" and "))
            }
            NonExistence::EmptyRow { plus, row } => {
                write!(f, "empty case row {row:?} in the {} half", if *plus { "plus" } else { "minus" })
            }
        }
    }
}

/// `Exists` or `NonExistent`.
#[derive(Clone, Debug, PartialEq)]
pub enum LogOutcome {
    Exists { value: ExtendedMultivector, family: FreeFamily },
    NonExistent(NonExistence),
}

/// A logarithm together with the case row that produced it.
#[derive(Clone, Debug, PartialEq)]
pub struct LogResult {
    pub outcome: LogOutcome,
    pub case: CaseRow,
}

impl LogResult {
    pub(crate) fn exists(value: ExtendedMultivector, family: FreeFamily, case: CaseRow) -> Self {
        LogResult { outcome: LogOutcome::Exists { value, family }, case }
    }

    pub(crate) fn none(reason: NonExistence, case: CaseRow) -> Self {
        LogResult { outcome: LogOutcome::NonExistent(reason), case }
    }

    pub fn exists_flag(&self) -> bool {
        matches!(self.outcome, LogOutcome::Exists { .. })
    }

    pub fn value(&self) -> Option<&ExtendedMultivector> {
        match &self.outcome {
            LogOutcome::Exists { value, .. } => Some(value),
            LogOutcome::NonExistent(_) => None,
        }
    }

    pub fn family(&self) -> Option<&FreeFamily> {
        match &self.outcome {
            LogOutcome::Exists { family, .. } => Some(family),
            LogOutcome::NonExistent(_) => None,
        }
    }

    /// The value when it exists and carries no `λ`.
    pub fn finite(&self) -> Option<Multivector> {
        self.value().and_then(|v| v.as_finite())
    }

    /// The value as a `Result`, turning non-existence into [`MvError::NonExistent`].
    pub fn into_value(self) -> Result<ExtendedMultivector> {
        match self.outcome {
            LogOutcome::Exists { value, .. } => Ok(value),
            LogOutcome::NonExistent(r) => Err(MvError::NonExistent(r)),
        }
    }
}

/// Logarithm in any signature with the default tolerance.
pub fn log(a: &Multivector, b: &BranchParams) -> Result<LogResult> {
    log_with(a, b, Tolerance::default())
}

/// Logarithm in any signature.
pub fn log_with(a: &Multivector, b: &BranchParams, tol: Tolerance) -> Result<LogResult> {
    match a.sig() {
        Signature::Cl03 => log_cl03_with(a, b, tol),
        Signature::Cl30 | Signature::Cl12 => log_cl30_with(a, b, tol),
        Signature::Cl21 => log_cl21_with(a, b, tol),
    }
}

/// `½(A0₊ + A0₋ + A12₊ + A12₋ + (A0₊ − A0₋) I)` for the algebras with `I² = +1`.
pub(crate) fn assemble_split(
    a0p: ExtendedMultivector,
    a0m: ExtendedMultivector,
    a12p: ExtendedMultivector,
    a12m: ExtendedMultivector,
) -> ExtendedMultivector {
    let i = Multivector::pseudoscalar(a0p.sig());
    (a0p + a0m + a12p + a12m + (a0p - a0m) * i).scale(0.5)
}

/// `log k`, or `λ` when `k` is zero within `eps`.
pub(crate) fn log_or_lambda(sig: Signature, k: f64, eps: f64) -> ExtendedMultivector {
    if k <= eps {
        ExtendedMultivector::lambda_scalar(sig)
    } else {
        ExtendedMultivector::finite(Multivector::scalar(sig, k.ln()))
    }
}
