//! Logarithm in Cl(0,3), where `I² = +1` splits the algebra into two quaternion halves
//! selected by the idempotents `½(1 ± I)`.

use std::f64::consts::PI;

use super::{assemble_split, CaseRow, Cl03Row, LogResult};
use crate::branching::{angle, one_pm_i, BranchConstant, BranchParams, FreeFamily, SlotKind};
use crate::error::{MvError, Result};
use crate::exponential::cl03_a_pm;
use crate::extended::ExtendedMultivector;
use crate::ga_core::{Multivector, Signature, Tolerance};

/// Scalars and half-projected parts of a Cl(0,3) multivector.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Cl03Intermediates {
    /// `a0 + a123`.
    pub s_plus: f64,
    /// `a0 − a123`.
    pub s_minus: f64,
    pub a_plus: f64,
    pub a_minus: f64,
    /// `(1 + I)(a + 𝒜)`.
    pub n_plus: Multivector,
    /// `(1 − I)(a + 𝒜)`.
    pub n_minus: Multivector,
}

pub fn cl03_intermediates(a: &Multivector) -> Result<Cl03Intermediates> {
    if a.sig() != Signature::Cl03 {
        return Err(MvError::UnsupportedSignature { op: "log_cl03", sig: a.sig() });
    }
    let g = a.grades();
    let pm = cl03_a_pm(a);
    let n = a.vector_bivector();
    Ok(Cl03Intermediates {
        s_plus: g.scalar + g.pseudoscalar,
        s_minus: g.scalar - g.pseudoscalar,
        a_plus: pm.a_plus,
        a_minus: pm.a_minus,
        n_plus: one_pm_i(Signature::Cl03, 1.0) * n,
        n_minus: one_pm_i(Signature::Cl03, -1.0) * n,
    })
}

pub fn log_cl03(a: &Multivector, b: &BranchParams) -> Result<LogResult> {
    log_cl03_with(a, b, Tolerance::default())
}

pub fn log_cl03_with(a: &Multivector, b: &BranchParams, tol: Tolerance) -> Result<LogResult> {
    let it = cl03_intermediates(a)?;
    let eps = tol.abs(a.max_abs(), 1);
    let mut family = FreeFamily::default();
    let plus = Half { sign: 1.0, s: it.s_plus, a: it.a_plus, n: it.n_plus, c1: BranchConstant::C1Plus, c2: BranchConstant::C2Plus };
    let minus = Half { sign: -1.0, s: it.s_minus, a: it.a_minus, n: it.n_minus, c1: BranchConstant::C1Minus, c2: BranchConstant::C2Minus };
    let (rp, a0p, a12p) = plus.eval(b, eps, &mut family)?;
    let (rm, a0m, a12m) = minus.eval(b, eps, &mut family)?;
    let value = assemble_split(a0p, a0m, a12p.into(), a12m.into());
    Ok(LogResult::exists(value, family, CaseRow::Cl03 { plus: rp, minus: rm }))
}

struct Half {
    sign: f64,
    s: f64,
    a: f64,
    n: Multivector,
    c1: BranchConstant,
    c2: BranchConstant,
}

impl Half {
    fn eval(&self, b: &BranchParams, eps: f64, family: &mut FreeFamily) -> Result<(Cl03Row, ExtendedMultivector, Multivector)> {
        let sig = Signature::Cl03;
        let (c1, c2) = (b.get(self.c1) as f64, b.get(self.c2) as f64);
        let proj = one_pm_i(sig, self.sign);
        if self.a > eps {
            let a0 = Multivector::scalar(sig, self.s.hypot(self.a).ln());
            let a12 = self.n.scale((angle(self.s, self.a) + 2.0 * PI * c1) / self.a);
            family.push_discrete(self.c1, self.n.scale(PI / self.a));
            return Ok((Cl03Row::Generic, a0.into(), a12));
        }
        if self.s > eps {
            let u = b.unit_bivector(sig)?;
            let a0 = Multivector::scalar(sig, self.s.ln()) + u.scale(2.0 * PI * c2);
            let a12 = self.n.scale(1.0 / self.s + 2.0 * PI * c1);
            family.push_discrete(self.c2, proj * u.scale(PI));
            if c2 != 0.0 {
                family.push_continuous(SlotKind::UnitBivector, proj.scale(PI * c2));
            }
            return Ok((Cl03Row::DegeneratePositive, a0.into(), a12));
        }
        if self.s < -eps {
            let u = b.unit_vector(sig)?;
            let a0 = Multivector::scalar(sig, (-self.s).ln()) + u.scale(PI + 2.0 * PI * c2);
            let a12 = self.n.scale(PI + 2.0 * PI * c1);
            family.push_discrete(self.c2, proj * u.scale(PI));
            family.push_continuous(SlotKind::UnitVector, proj.scale(0.5 * PI + PI * c2));
            return Ok((Cl03Row::DegenerateNegative, a0.into(), a12));
        }
        Ok((Cl03Row::DegenerateZero, ExtendedMultivector::lambda_scalar(sig), Multivector::zero(sig)))
    }
}
