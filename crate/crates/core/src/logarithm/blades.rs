//! Shortcut logarithms for blades and simple blade combinations.
//!
//! These agree with the general formulas on their domain up to the choice of sheet,
//! and are cheaper and easier to read.

use std::f64::consts::PI;

use super::{BladeRow, CaseRow, CenterSide, LogResult, RotorRow};
use crate::branching::{angle, is_pure, one_pm_i, BranchConstant, BranchParams, FreeFamily, SlotKind};
use crate::error::{MvError, Result};
use crate::extended::ExtendedMultivector;
use crate::ga_core::{Blade, Multivector, Signature, Tolerance};

const VECTOR: [Blade; 3] = [Blade::E1, Blade::E2, Blade::E3];
const BIVECTOR: [Blade; 3] = [Blade::E12, Blade::E13, Blade::E23];
const PARAVECTOR: [Blade; 4] = [Blade::S, Blade::E1, Blade::E2, Blade::E3];
const PARABIVECTOR: [Blade; 4] = [Blade::S, Blade::E12, Blade::E13, Blade::E23];
const CENTER: [Blade; 2] = [Blade::S, Blade::E123];

/// Shapes with a shortcut formula in Cl(0,3).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BladeKindCl03 {
    Vector,
    Paravector,
    Bivector,
    Parabivector,
    Center,
}

impl BladeKindCl03 {
    /// Recognizes the shape of `a`, treating coefficients below the tolerance as zero.
    pub fn classify(a: &Multivector) -> Option<Self> {
        let eps = Tolerance::default().abs(a.max_abs(), 1);
        if is_pure(a, &CENTER, eps) {
            Some(Self::Center)
        } else if is_pure(a, &VECTOR, eps) {
            Some(Self::Vector)
        } else if is_pure(a, &BIVECTOR, eps) {
            Some(Self::Bivector)
        } else if is_pure(a, &PARAVECTOR, eps) {
            Some(Self::Paravector)
        } else if is_pure(a, &PARABIVECTOR, eps) {
            Some(Self::Parabivector)
        } else {
            None
        }
    }
}

/// Shapes with a shortcut formula in Cl(3,0).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BladeKindCl30 {
    Vector,
    Bivector,
    Rotor,
    Center,
}

impl BladeKindCl30 {
    pub fn classify(a: &Multivector) -> Option<Self> {
        let eps = Tolerance::default().abs(a.max_abs(), 1);
        let scalar_only = is_pure(a, &[Blade::S], eps);
        if (is_pure(a, &CENTER, eps) && !scalar_only) || a.max_abs() == 0.0 {
            Some(Self::Center)
        } else if is_pure(a, &VECTOR, eps) {
            Some(Self::Vector)
        } else if is_pure(a, &BIVECTOR, eps) {
            Some(Self::Bivector)
        } else if is_pure(a, &PARABIVECTOR, eps) {
            Some(Self::Rotor)
        } else {
            None
        }
    }
}

fn norm3(a: &Multivector, blades: &[Blade; 3]) -> f64 {
    a[blades[0]].hypot(a[blades[1]]).hypot(a[blades[2]])
}

fn project(a: &Multivector, blades: &[Blade]) -> Multivector {
    let mut c = [0.0; 8];
    for b in blades {
        c[b.index()] = a[*b];
    }
    Multivector::new(a.sig(), c)
}

fn not_a_blade(sig: Signature) -> MvError {
    MvError::Usage(format!("input is not a blade or blade combination with a shortcut formula in {sig}"))
}

/// Blade shortcut logarithm in Cl(0,3).
///
/// The two integers of the shortcut formulas map onto `c1_plus` (the `1 + I` half) and
/// `c1_minus` (the `1 − I` half); for the center they are `c2_minus` and `c2_plus`.
pub fn log_blade_cl03(a: &Multivector, b: &BranchParams) -> Result<LogResult> {
    let sig = Signature::Cl03;
    if a.sig() != sig {
        return Err(MvError::UnsupportedSignature { op: "log_blade_cl03", sig: a.sig() });
    }
    let kind = BladeKindCl03::classify(a).ok_or_else(|| not_a_blade(sig))?;
    let (p, q) = (one_pm_i(sig, 1.0), one_pm_i(sig, -1.0));
    let mut family = FreeFamily::default();

    if kind == BladeKindCl03::Center {
        let (a0, a123) = (a[Blade::S], a[Blade::E123]);
        let eps = Tolerance::default().abs(a.max_abs(), 1);
        let mut value = ExtendedMultivector::zero(sig);
        let mut sides = [CenterSide::Zero; 2];
        for (idx, (s, proj, k)) in
            [(a0 - a123, q, BranchConstant::C2Minus), (a0 + a123, p, BranchConstant::C2Plus)].into_iter().enumerate()
        {
            let c = b.get(k) as f64;
            let term: ExtendedMultivector = if s > eps {
                sides[idx] = CenterSide::Positive;
                let u = b.unit_bivector(sig)?;
                family.push_discrete(k, u * proj.scale(PI));
                if c != 0.0 {
                    family.push_continuous(SlotKind::UnitBivector, proj.scale(PI * c));
                }
                (Multivector::scalar(sig, 0.5 * s.ln()) + u.scale(PI * c)).into()
            } else if s < -eps {
                sides[idx] = CenterSide::Negative;
                let u = b.unit_vector(sig)?;
                family.push_discrete(k, u * proj.scale(PI));
                family.push_continuous(SlotKind::UnitVector, proj.scale(PI * (c + 0.5)));
                (Multivector::scalar(sig, 0.5 * (-s).ln()) + u.scale(PI * (c + 0.5))).into()
            } else {
                ExtendedMultivector::lambda_scalar(sig).scale(0.5)
            };
            value = value + term * proj;
        }
        let row = BladeRow::Cl03Center { minus: sides[0], plus: sides[1] };
        return Ok(LogResult::exists(value, family, CaseRow::Blade(row)));
    }

    let (c1, c2) = (b.c1_plus as f64, b.c1_minus as f64);
    let (part, row) = match kind {
        BladeKindCl03::Vector | BladeKindCl03::Paravector => (project(a, &VECTOR), kind),
        _ => (project(a, &BIVECTOR), kind),
    };
    let r = norm3(&part, if matches!(row, BladeKindCl03::Vector | BladeKindCl03::Paravector) { &VECTOR } else { &BIVECTOR });
    let unit = part.scale(1.0 / r);
    let a0 = a[Blade::S];
    let free = (p.scale(c1) + q.scale(c2)).scale(PI);
    family.push_discrete(BranchConstant::C1Plus, unit * p.scale(PI));
    family.push_discrete(BranchConstant::C1Minus, unit * q.scale(PI));
    let (value, blade_row) = match row {
        BladeKindCl03::Vector | BladeKindCl03::Bivector => {
            let v = Multivector::scalar(sig, r.ln()) + unit * (free + 0.5 * PI);
            let br = if row == BladeKindCl03::Vector { BladeRow::Cl03Vector } else { BladeRow::Cl03Bivector };
            (v, br)
        }
        _ => {
            let v = Multivector::scalar(sig, a0.hypot(r).ln()) + unit * (free + angle(a0, r));
            let br = if row == BladeKindCl03::Paravector { BladeRow::Cl03Paravector } else { BladeRow::Cl03Parabivector };
            (v, br)
        }
    };
    Ok(LogResult::exists(value.into(), family, CaseRow::Blade(blade_row)))
}

/// Blade shortcut logarithm in Cl(3,0). The integers are `c1` and `c2`.
pub fn log_blade_cl30(a: &Multivector, b: &BranchParams) -> Result<LogResult> {
    let sig = Signature::Cl30;
    if a.sig() != sig {
        return Err(MvError::UnsupportedSignature { op: "log_blade_cl30", sig: a.sig() });
    }
    let kind = BladeKindCl30::classify(a).ok_or_else(|| not_a_blade(sig))?;
    let i = Multivector::pseudoscalar(sig);
    let (c1, c2) = (b.c1() as f64, b.c2() as f64);
    let mut family = FreeFamily::default();
    let a0 = a[Blade::S];

    let (value, row): (ExtendedMultivector, BladeRow) = match kind {
        BladeKindCl30::Vector => {
            let r = norm3(a, &VECTOR);
            let unit = a.scale(1.0 / r);
            family.push_discrete(BranchConstant::C1Plus, i.scale(2.0 * PI));
            family.push_discrete(BranchConstant::C2Plus, (unit * i).scale(-2.0 * PI));
            let v = Multivector::scalar(sig, r.ln()) - (unit * i).scale(PI * (0.5 + 2.0 * c2))
                + i.scale(PI * (0.5 + 2.0 * c1));
            (v.into(), BladeRow::Cl30Vector)
        }
        BladeKindCl30::Bivector => {
            let (v, row) = bivector_cl30(a, c1, c2, &mut family);
            (v.into(), row)
        }
        BladeKindCl30::Rotor => {
            let eps = Tolerance::default().abs(a.max_abs(), 1);
            let part = project(a, &BIVECTOR);
            let r = norm3(&part, &BIVECTOR);
            if r <= eps {
                family.push_discrete(BranchConstant::C1Plus, i.scale(2.0 * PI));
                let (v, rr) = if a0 >= 0.0 {
                    (Multivector::scalar(sig, a0.ln()) + i.scale(2.0 * PI * c1), RotorRow::PositiveScalar)
                } else {
                    (Multivector::scalar(sig, (-a0).ln()) + i.scale(PI + 2.0 * PI * c1), RotorRow::NegativeScalar)
                };
                (v.into(), BladeRow::Cl30Rotor(rr))
            } else {
                let unit = part.scale(1.0 / r);
                family.push_discrete(BranchConstant::C1Plus, i.scale(2.0 * PI));
                family.push_discrete(BranchConstant::C2Plus, unit.scale(2.0 * PI));
                let theta = 2.0 * PI * c2 - 0.5 * angle(a0 * a0 - r * r, -2.0 * a0 * r);
                let v = Multivector::scalar(sig, a0.hypot(r).ln())
                    + i.scale(angle(a0, 0.0) + 2.0 * PI * c1)
                    + unit.scale(theta);
                (v.into(), BladeRow::Cl30Rotor(RotorRow::General))
            }
        }
        BladeKindCl30::Center => {
            let a123 = a[Blade::E123];
            let u = b.unit_bivector(sig)?;
            family.push_discrete(BranchConstant::C2Plus, u.scale(2.0 * PI));
            if c2 != 0.0 {
                family.push_continuous(SlotKind::UnitBivector, Multivector::scalar(sig, 2.0 * PI * c2));
            }
            let free = u.scale(2.0 * PI * c2);
            let mag = a0.hypot(a123);
            if mag == 0.0 {
                (ExtendedMultivector::lambda_scalar(sig) + free, BladeRow::Cl30CenterZero)
            } else {
                family.push_discrete(BranchConstant::C1Plus, i.scale(4.0 * PI));
                let v = Multivector::scalar(sig, mag.ln()) + free + i.scale(angle(a0, a123) + 4.0 * PI * c1);
                (v.into(), BladeRow::Cl30Center)
            }
        }
    };
    Ok(LogResult::exists(value, family, CaseRow::Blade(row)))
}

fn bivector_cl30(a: &Multivector, c1: f64, c2: f64, family: &mut FreeFamily) -> (Multivector, BladeRow) {
    let sig = Signature::Cl30;
    let i = Multivector::pseudoscalar(sig);
    let r = norm3(a, &BIVECTOR);
    let unit = a.scale(1.0 / r);
    family.push_discrete(BranchConstant::C1Plus, i.scale(2.0 * PI));
    family.push_discrete(BranchConstant::C2Plus, unit.scale(-2.0 * PI));
    let v = Multivector::scalar(sig, r.ln()) - unit.scale(PI * (0.5 + 2.0 * c2)) + i.scale(PI * (1.0 + 2.0 * c1));
    (v, BladeRow::Cl30Bivector)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exponential::exp_series;

    fn check(a: Multivector, f: fn(&Multivector, &BranchParams) -> Result<LogResult>, row: BladeRow) {
        for c in [0, 1, -2] {
            let b = BranchParams::uniform(c);
            let l = f(&a, &b).unwrap();
            assert_eq!(l.case, CaseRow::Blade(row), "{a}");
            let v = l.value().unwrap().substitute(1e-300);
            let r = exp_series(&v).relative_residual(&a);
            assert!(r < 1e-12, "{a} c={c}: {r}");
        }
    }

    #[test]
    fn cl03_shapes() {
        let m = |c| Multivector::new(Signature::Cl03, c);
        check(m([0.0, 1.0, -2.0, 0.5, 0.0, 0.0, 0.0, 0.0]), log_blade_cl03, BladeRow::Cl03Vector);
        check(m([0.0, 0.0, 0.0, 0.0, 1.0, -2.0, 0.5, 0.0]), log_blade_cl03, BladeRow::Cl03Bivector);
        check(m([-3.0, 1.0, -2.0, 0.5, 0.0, 0.0, 0.0, 0.0]), log_blade_cl03, BladeRow::Cl03Paravector);
        check(m([2.0, 0.0, 0.0, 0.0, 1.0, -2.0, 0.5, 0.0]), log_blade_cl03, BladeRow::Cl03Parabivector);
        let pos = CenterSide::Positive;
        let neg = CenterSide::Negative;
        check(m([3.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1.0]), log_blade_cl03, BladeRow::Cl03Center { minus: pos, plus: pos });
        check(m([1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, -3.0]), log_blade_cl03, BladeRow::Cl03Center { minus: pos, plus: neg });
        check(m([1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 3.0]), log_blade_cl03, BladeRow::Cl03Center { minus: neg, plus: pos });
        check(m([-3.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1.0]), log_blade_cl03, BladeRow::Cl03Center { minus: neg, plus: neg });
    }

    #[test]
    fn cl30_shapes() {
        let m = |c| Multivector::new(Signature::Cl30, c);
        check(m([0.0, 1.0, -2.0, 0.5, 0.0, 0.0, 0.0, 0.0]), log_blade_cl30, BladeRow::Cl30Vector);
        check(m([0.0, 0.0, 0.0, 0.0, 1.0, -2.0, 0.5, 0.0]), log_blade_cl30, BladeRow::Cl30Bivector);
        check(m([-1.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0]), log_blade_cl30, BladeRow::Cl30Rotor(RotorRow::General));
        check(m([2.0, 0.0, 0.0, 0.0, 1.0, 3.0, 0.0, 0.0]), log_blade_cl30, BladeRow::Cl30Rotor(RotorRow::General));
        check(m([2.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0]), log_blade_cl30, BladeRow::Cl30Rotor(RotorRow::PositiveScalar));
        check(m([-2.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0]), log_blade_cl30, BladeRow::Cl30Rotor(RotorRow::NegativeScalar));
        check(m([1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, -2.0]), log_blade_cl30, BladeRow::Cl30Center);
    }

    #[test]
    fn zero_center_is_lambda() {
        let l = log_blade_cl30(&Multivector::zero(Signature::Cl30), &BranchParams::principal()).unwrap();
        assert_eq!(l.case, CaseRow::Blade(BladeRow::Cl30CenterZero));
        assert!(l.value().unwrap().has_lambda());
    }

    #[test]
    fn rejects_general_input() {
        let a = Multivector::new(Signature::Cl30, [1.0, 1.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0]);
        assert!(log_blade_cl30(&a, &BranchParams::principal()).is_err());
        assert!(log_blade_cl30(&a.with_sig(Signature::Cl12), &BranchParams::principal()).is_err());
    }
}
