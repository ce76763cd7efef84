//! Free multivectors and the empirical search for the smallest-norm sheet.

use std::cmp::Ordering;
use std::f64::consts::PI;

use super::{cl03_intermediates, cl30_intermediates, log, LogOutcome};
use crate::branching::{BranchConstant, BranchParams};
use crate::error::{MvError, Result};
use crate::ga_core::{Multivector, Signature, Tolerance};

/// The generic free multivector `F` with `exp(F) = 1` that commutes with `a`.
///
/// Cl(0,3): `F = (πc1₊/a₊)(1+I)(a+𝒜) + (πc1₋/a₋)(1−I)(a+𝒜)`.
/// Cl(3,0), Cl(1,2): `F = 2πc1 (a₋ + a₊I)(a+𝒜)/(a₊²+a₋²) + 2πc2 I`.
/// Degenerate inputs have free terms only in the family reported by the logarithm.
pub fn free_multivector(a: &Multivector, b: &BranchParams) -> Result<Multivector> {
    let sig = a.sig();
    let m = a.max_abs();
    let tol = Tolerance::default();
    let degenerate = || {
        MvError::Usage("degenerate input: use the free family reported by the logarithm".to_string())
    };
    let n = a.vector_bivector();
    match sig {
        Signature::Cl03 => {
            let it = cl03_intermediates(a)?;
            if it.a_plus <= tol.abs(m, 1) || it.a_minus <= tol.abs(m, 1) {
                return Err(degenerate());
            }
            Ok(it.n_plus.scale(PI * b.c1_plus as f64 / it.a_plus)
                + it.n_minus.scale(PI * b.c1_minus as f64 / it.a_minus))
        }
        Signature::Cl30 | Signature::Cl12 => {
            let it = cl30_intermediates(a)?;
            let mu_sq = it.mu_sq();
            if mu_sq <= tol.abs(m, 2) {
                return Err(degenerate());
            }
            let i = Multivector::pseudoscalar(sig);
            let k = Multivector::new(sig, [it.a_minus, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, it.a_plus]);
            Ok((k * n).scale(2.0 * PI * b.c1() as f64 / mu_sq) + i.scale(2.0 * PI * b.c2() as f64))
        }
        Signature::Cl21 => Err(MvError::UnsupportedSignature { op: "free_multivector", sig }),
    }
}

/// Outcome of [`min_sheet`].
#[derive(Clone, Debug, PartialEq)]
pub struct MinSheet {
    pub params: BranchParams,
    pub value: Multivector,
    /// `|Det|^(1/4)` of the logarithm on this sheet.
    pub det_norm: f64,
}

/// Searches every branch constant in `[−cmax, cmax]` for the finite logarithm of smallest
/// determinant norm.
///
/// Ties go to the smaller Euclidean coefficient norm, then to the smaller `Σ|c|`. This is
/// an empirical search: the constants all set to zero do not always give the minimum.
pub fn min_sheet(a: &Multivector, cmax: u32) -> Result<MinSheet> {
    let sig = a.sig();
    let constants: &[BranchConstant] = match sig {
        Signature::Cl03 | Signature::Cl21 => {
            &[BranchConstant::C1Plus, BranchConstant::C1Minus, BranchConstant::C2Plus, BranchConstant::C2Minus]
        }
        Signature::Cl30 | Signature::Cl12 => &[BranchConstant::C1Plus, BranchConstant::C2Plus],
    };
    let c = cmax as i64;
    let width = (2 * c + 1) as usize;
    let total = width.pow(constants.len() as u32);
    let mut best: Option<(f64, f64, i64, MinSheet)> = None;
    for idx in 0..total {
        let mut params = BranchParams::principal();
        let mut rest = idx;
        for k in constants {
            params.set(*k, (rest % width) as i64 - c);
            rest /= width;
        }
        let res = log(a, &params)?;
        let value = match res.outcome {
            LogOutcome::Exists { value, .. } => match value.as_finite() {
                Some(v) => v,
                None => return Err(MvError::NonRepresentable("logarithm carries log(0+)".into())),
            },
            LogOutcome::NonExistent(r) => return Err(MvError::NonExistent(r)),
        };
        let det_norm = value.norm();
        let euclid = value.coeffs().iter().map(|x| x * x).sum::<f64>().sqrt();
        let l1: i64 = constants.iter().map(|k| params.get(*k).abs()).sum();
        let better = match &best {
            None => true,
            Some((d, e, s, _)) => {
                let key = fuzzy_cmp(det_norm, *d).then(fuzzy_cmp(euclid, *e)).then(l1.cmp(s));
                key == Ordering::Less
            }
        };
        if better {
            best = Some((det_norm, euclid, l1, MinSheet { params, value, det_norm }));
        }
    }
    Ok(best.expect("at least one sheet").3)
}

fn fuzzy_cmp(x: f64, y: f64) -> Ordering {
    if (x - y).abs() <= 1e-9 * x.abs().max(y.abs()).max(1.0) {
        Ordering::Equal
    } else {
        x.total_cmp(&y)
    }
}
