//! Logarithm in Cl(3,0) and Cl(1,2), where `I² = −1` is central.
//!
//! Write `A = s + N` with `s = a0 + a123 I` and `N = a + 𝒜`. Then `N² = α + 2wI` and
//! `μ = a₊ + a₋ I` is its principal square root, so `A = (s + μ)P₊ + (s − μ)P₋` with
//! `P± = ½(1 ± N/μ)`. The four terms of the result are the complex logarithms of
//! `s ± μ` recombined.

use std::f64::consts::{FRAC_PI_2, PI};

use super::{log_or_lambda, CaseRow, Cl30Row, LogResult, NonExistence};
use crate::branching::{angle, BranchConstant, BranchParams, FreeFamily, SlotKind};
use crate::error::{MvError, Result};
use crate::extended::ExtendedMultivector;
use crate::ga_core::{dot_wedge_split, Multivector, Signature, Tolerance};

/// Scalars of the Cl(3,0) / Cl(1,2) case analysis.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Cl30Intermediates {
    /// `a·a + 𝒜·𝒜`.
    pub alpha: f64,
    /// I-coefficient of `a∧𝒜`.
    pub w: f64,
    pub a_plus: f64,
    pub a_minus: f64,
    pub k_plus: f64,
    pub k_minus: f64,
    /// True when `a∧𝒜` was treated as zero.
    pub wedge_fallback: bool,
}

impl Cl30Intermediates {
    /// `a₊² + a₋²`, the modulus of `N²`.
    pub fn mu_sq(&self) -> f64 {
        self.a_plus * self.a_plus + self.a_minus * self.a_minus
    }
}

/// Computes `α`, `w`, `a±` and `k±`.
///
/// `a±` come from a cancellation-free complex square root of `α + 2wI`.
pub fn cl30_intermediates(a: &Multivector) -> Result<Cl30Intermediates> {
    cl30_intermediates_with(a, Tolerance::default())
}

fn cl30_intermediates_with(a: &Multivector, tol: Tolerance) -> Result<Cl30Intermediates> {
    check_sig(a)?;
    let g = a.grades();
    let (vv, bb, w_raw) = dot_wedge_split(a.sig(), g.vector, g.bivector);
    let alpha = vv + bb;
    let wedge_fallback = w_raw.abs() <= tol.rel * (vv.abs() + bb.abs());
    let w = if wedge_fallback { 0.0 } else { w_raw };
    let modulus = alpha.hypot(2.0 * w);
    let (a_plus, a_minus) = if alpha >= 0.0 {
        let p = ((alpha + modulus) / 2.0).sqrt();
        (p, if p == 0.0 { 0.0 } else { w / p })
    } else {
        let m = ((modulus - alpha) / 2.0).sqrt();
        let m = if w < 0.0 { -m } else { m };
        (w / m, m)
    };
    let (a0, a123) = (g.scalar, g.pseudoscalar);
    Ok(Cl30Intermediates {
        alpha,
        w,
        a_plus,
        a_minus,
        k_plus: (a_plus + a0).hypot(a_minus + a123),
        k_minus: (a_plus - a0).hypot(a_minus - a123),
        wedge_fallback,
    })
}

fn check_sig(a: &Multivector) -> Result<()> {
    match a.sig() {
        Signature::Cl30 | Signature::Cl12 => Ok(()),
        sig => Err(MvError::UnsupportedSignature { op: "log_cl30", sig }),
    }
}

/// Logarithm in Cl(3,0) or Cl(1,2) with the default tolerance.
pub fn log_cl30(a: &Multivector, b: &BranchParams) -> Result<LogResult> {
    log_cl30_with(a, b, Tolerance::default())
}

pub fn log_cl30_with(a: &Multivector, b: &BranchParams, tol: Tolerance) -> Result<LogResult> {
    let it = cl30_intermediates_with(a, tol)?;
    let sig = a.sig();
    let m = a.max_abs();
    let g = a.grades();
    let (a0, a123) = (g.scalar, g.pseudoscalar);
    let n = a.vector_bivector();
    let i = Multivector::pseudoscalar(sig);
    let (c1, c2) = (b.c1() as f64, b.c2() as f64);
    let case = |row| CaseRow::Cl30 { row, wedge_fallback: it.wedge_fallback };
    let mut family = FreeFamily::default();

    let mu_sq = it.mu_sq();
    if mu_sq <= tol.abs(m, 2) {
        let s_abs = a0.hypot(a123);
        let n_zero = n.is_zero_within(tol.abs(m, 1));
        if s_abs <= tol.abs(m, 1) {
            if n_zero {
                let value = ExtendedMultivector::lambda_scalar(sig);
                return Ok(LogResult::exists(value, family, case(Cl30Row::ZeroInput)));
            }
            return Ok(LogResult::none(NonExistence::NilpotentVectorBivector, case(Cl30Row::Empty)));
        }
        let a0_term = Multivector::scalar(sig, s_abs.ln());
        let inv_s = Multivector::new(sig, [a0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, -a123]).scale(1.0 / (s_abs * s_abs));
        let mut a12 = inv_s * n;
        let row = if n_zero {
            let u = b.unit_bivector(sig)?;
            a12 = a12 + u.scale(2.0 * PI * c1);
            family.push_discrete(BranchConstant::C1Plus, u.scale(2.0 * PI));
            if c1 != 0.0 {
                family.push_continuous(SlotKind::UnitBivector, Multivector::scalar(sig, 2.0 * PI * c1));
            }
            Cl30Row::CentralFree
        } else {
            Cl30Row::CentralNilpotent
        };
        let a_i = i.scale(angle(a0, a123) + 2.0 * PI * c2);
        family.push_discrete(BranchConstant::C2Plus, i.scale(2.0 * PI));
        let value = ExtendedMultivector::finite(a0_term + a12 + a_i);
        return Ok(LogResult::exists(value, family, case(row)));
    }

    let (ap, am) = (it.a_plus, it.a_minus);
    // N/μ, which squares to +1.
    let n_hat = Multivector::new(sig, [ap, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, -am]).scale(1.0 / mu_sq) * n;
    let eps1 = tol.abs(m, 1);
    let log_kp = log_or_lambda(sig, it.k_plus, eps1);
    let log_km = log_or_lambda(sig, it.k_minus, eps1);
    let a0_term = (log_kp + log_km).scale(0.5);
    let a12_log = (log_kp - log_km).scale(0.5) * n_hat;

    let singular = it.k_plus <= eps1 || it.k_minus <= eps1;
    let x = (ap + a0) * it.k_minus - (ap - a0) * it.k_plus;
    let y = (am + a123) * it.k_minus - (am - a123) * it.k_plus;
    let coincident = x.abs() <= tol.abs(m, 2) && y.abs() <= tol.abs(m, 2);

    // Half the angle between s + μ and s − μ. Where the two are antiparallel the
    // half-angle is −π/2, paired with the bisector arctan(−a₋, a₊) below.
    let half_diff = if singular || coincident {
        -FRAC_PI_2
    } else {
        let big_x = a0 * a0 + a123 * a123 - ap * ap - am * am;
        let y_p = 2.0 * ap * a123 - 2.0 * a0 * am;
        -0.5 * angle(big_x, y_p)
    };
    let i_n_hat = i * n_hat;
    let a12_arctan = i_n_hat.scale(half_diff + 2.0 * PI * c1);
    let bisector = if singular || coincident { angle(-am, ap) } else { angle(x, y) };
    let a_i = i.scale(bisector + 2.0 * PI * c2);

    family.push_discrete(BranchConstant::C1Plus, i_n_hat.scale(2.0 * PI));
    family.push_discrete(BranchConstant::C2Plus, i.scale(2.0 * PI));

    let row = if singular {
        Cl30Row::SingularDeterminant
    } else if coincident {
        Cl30Row::CoincidentAngle
    } else {
        Cl30Row::Generic
    };
    let value = a0_term + a12_log + a12_arctan + a_i;
    Ok(LogResult::exists(value, family, case(row)))
}
