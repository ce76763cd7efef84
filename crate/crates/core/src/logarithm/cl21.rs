//! Logarithm in Cl(2,1). As in Cl(0,3), `I² = +1` splits the algebra in two halves, but
//! here each half is a split-complex-like algebra, so many inputs have no logarithm.

use std::f64::consts::PI;

use super::{assemble_split, CaseRow, Cl21Row, LogResult, NonExistence};
use crate::branching::{angle, one_pm_i, BranchConstant, BranchParams, FreeFamily, SlotKind};
use crate::error::{MvError, Result};
use crate::extended::ExtendedMultivector;
use crate::ga_core::{dot_wedge_split, Multivector, Signature, Tolerance};

/// Scalars and half-projected parts of a Cl(2,1) multivector.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Cl21Intermediates {
    pub s_plus: f64,
    pub s_minus: f64,
    /// `−(a·a + 𝒜·𝒜) − 2w`.
    pub a2_plus: f64,
    /// `−(a·a + 𝒜·𝒜) + 2w`.
    pub a2_minus: f64,
    /// `(a0 + a123)² + a₊⁽²⁾`.
    pub f_plus: f64,
    /// `(a0 − a123)² + a₋⁽²⁾`.
    pub f_minus: f64,
    pub n_plus: Multivector,
    pub n_minus: Multivector,
}

pub fn cl21_intermediates(a: &Multivector) -> Result<Cl21Intermediates> {
    if a.sig() != Signature::Cl21 {
        return Err(MvError::UnsupportedSignature { op: "log_cl21", sig: a.sig() });
    }
    let g = a.grades();
    let (vv, bb, w) = dot_wedge_split(Signature::Cl21, g.vector, g.bivector);
    let alpha = vv + bb;
    let (s_plus, s_minus) = (g.scalar + g.pseudoscalar, g.scalar - g.pseudoscalar);
    let (a2_plus, a2_minus) = (-alpha - 2.0 * w, -alpha + 2.0 * w);
    let n = a.vector_bivector();
    Ok(Cl21Intermediates {
        s_plus,
        s_minus,
        a2_plus,
        a2_minus,
        f_plus: s_plus * s_plus + a2_plus,
        f_minus: s_minus * s_minus + a2_minus,
        n_plus: one_pm_i(Signature::Cl21, 1.0) * n,
        n_minus: one_pm_i(Signature::Cl21, -1.0) * n,
    })
}

pub fn log_cl21(a: &Multivector, b: &BranchParams) -> Result<LogResult> {
    log_cl21_with(a, b, Tolerance::default())
}

pub fn log_cl21_with(a: &Multivector, b: &BranchParams, tol: Tolerance) -> Result<LogResult> {
    let it = cl21_intermediates(a)?;
    let m = a.max_abs();
    let (eps1, eps2) = (tol.abs(m, 1), tol.abs(m, 2));

    let (neg_p, neg_m) = (it.f_plus < -eps2, it.f_minus < -eps2);
    if neg_p || neg_m {
        let case = CaseRow::Cl21NegativeFactor { plus: neg_p, minus: neg_m };
        return Ok(LogResult::none(NonExistence::NegativeFactor { plus: neg_p, minus: neg_m }, case));
    }

    let halves = [
        Half { sign: 1.0, s: it.s_plus, a2: it.a2_plus, f: it.f_plus, n: it.n_plus, c1: BranchConstant::C1Plus, c2: BranchConstant::C2Plus },
        Half { sign: -1.0, s: it.s_minus, a2: it.a2_minus, f: it.f_minus, n: it.n_minus, c1: BranchConstant::C1Minus, c2: BranchConstant::C2Minus },
    ];
    let rows = halves.each_ref().map(|h| h.row(eps1, eps2));
    let case = CaseRow::Cl21 { plus: rows[0], minus: rows[1] };
    for (plus, row) in [(true, rows[0]), (false, rows[1])] {
        if row.is_empty() {
            return Ok(LogResult::none(NonExistence::EmptyRow { plus, row }, case));
        }
    }

    let mut family = FreeFamily::default();
    let (a0p, a12p) = halves[0].eval(rows[0], b, eps1, &mut family)?;
    let (a0m, a12m) = halves[1].eval(rows[1], b, eps1, &mut family)?;
    let value = assemble_split(a0p, a0m, a12p, a12m);
    Ok(LogResult::exists(value, family, case))
}

struct Half {
    sign: f64,
    s: f64,
    a2: f64,
    f: f64,
    n: Multivector,
    c1: BranchConstant,
    c2: BranchConstant,
}

impl Half {
    fn row(&self, eps1: f64, eps2: f64) -> Cl21Row {
        let annihilated = self.n.is_zero_within(eps1);
        if self.a2 > eps2 {
            Cl21Row::Elliptic
        } else if self.a2 < -eps2 {
            if self.s <= 0.0 {
                Cl21Row::EmptyHyperbolic
            } else if self.f.abs() <= eps2 {
                Cl21Row::HyperbolicBoundary
            } else {
                Cl21Row::Hyperbolic
            }
        } else if self.s > eps1 {
            if annihilated {
                Cl21Row::ParabolicPositiveFree
            } else {
                Cl21Row::ParabolicPositive
            }
        } else if annihilated {
            Cl21Row::ParabolicNonPositive
        } else {
            Cl21Row::EmptyParabolic
        }
    }

    fn eval(
        &self,
        row: Cl21Row,
        b: &BranchParams,
        eps1: f64,
        family: &mut FreeFamily,
    ) -> Result<(ExtendedMultivector, ExtendedMultivector)> {
        let sig = Signature::Cl21;
        let (c1, c2) = (b.get(self.c1) as f64, b.get(self.c2) as f64);
        let proj = one_pm_i(sig, self.sign);
        let scalar = |x: f64| ExtendedMultivector::finite(Multivector::scalar(sig, x));
        Ok(match row {
            Cl21Row::Elliptic => {
                let a = self.a2.sqrt();
                let a12 = self.n.scale((angle(self.s, a) + 2.0 * PI * c1) / a);
                family.push_discrete(self.c1, self.n.scale(PI / a));
                (scalar(self.s.hypot(a).ln()), a12.into())
            }
            Cl21Row::Hyperbolic => {
                let r = (-self.a2).sqrt();
                let a0 = 0.5 * ((self.s + r).ln() + (self.s - r).ln());
                (scalar(a0), self.n.scale((r / self.s).atanh() / r).into())
            }
            Cl21Row::HyperbolicBoundary => {
                let r = (-self.a2).sqrt();
                let lp = (self.s + r).ln();
                let lambda = ExtendedMultivector::lambda_scalar(sig);
                let a0 = (scalar(lp) + lambda).scale(0.5);
                let a12 = (scalar(lp) - lambda).scale(0.5 / r) * self.n;
                (a0, a12)
            }
            Cl21Row::ParabolicPositive => (scalar(self.s.ln()), self.n.scale(1.0 / self.s).into()),
            Cl21Row::ParabolicPositiveFree => {
                let u = b.unit_bivector(sig)?;
                let a0 = Multivector::scalar(sig, self.s.ln()) + u.scale(2.0 * PI * c2);
                family.push_discrete(self.c2, proj * u.scale(PI));
                if c2 != 0.0 {
                    family.push_continuous(SlotKind::UnitBivector, proj.scale(PI * c2));
                }
                (a0.into(), self.n.scale(1.0 / self.s).into())
            }
            Cl21Row::ParabolicNonPositive => {
                let u = b.unit_bivector(sig)?;
                let base = if self.s < -eps1 { scalar((-self.s).ln()) } else { ExtendedMultivector::lambda_scalar(sig) };
                family.push_discrete(self.c2, proj * u.scale(PI));
                family.push_continuous(SlotKind::UnitBivector, proj.scale(0.5 * PI + PI * c2));
                (base + u.scale(PI + 2.0 * PI * c2), ExtendedMultivector::zero(sig))
            }
            Cl21Row::EmptyHyperbolic | Cl21Row::EmptyParabolic => unreachable!("empty rows return early"),
        })
    }
}
