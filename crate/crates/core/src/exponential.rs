//! Multivector exponential.
//!
//! [`exp_closed_cl03`] is the coordinate formula for Cl(0,3). [`exp_series`] works in
//! every signature and is the oracle all logarithm tests are checked against.

use crate::error::{MvError, Result};
use crate::extended::ExtendedMultivector;
use crate::ga_core::{Multivector, Signature};

/// The scalars `a₊`, `a₋` of a Cl(0,3) multivector.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ExpClosedIntermediates {
    pub a_plus: f64,
    pub a_minus: f64,
}

/// `a₊ = |(a3−a12, a2+a13, a1−a23)|`, `a₋ = |(a3+a12, a2−a13, a1+a23)|`.
pub fn cl03_a_pm(a: &Multivector) -> ExpClosedIntermediates {
    let c = a.coeffs();
    let (a1, a2, a3, a12, a13, a23) = (c[1], c[2], c[3], c[4], c[5], c[6]);
    ExpClosedIntermediates {
        a_plus: hypot3(a3 - a12, a2 + a13, a1 - a23),
        a_minus: hypot3(a3 + a12, a2 - a13, a1 + a23),
    }
}

pub(crate) fn hypot3(x: f64, y: f64, z: f64) -> f64 {
    x.hypot(y).hypot(z)
}

/// `sin(x)/x`, switching to a Taylor expansion near zero.
pub(crate) fn sinc(x: f64) -> f64 {
    if x.abs() < 1e-4 {
        let x2 = x * x;
        1.0 - x2 / 6.0 + x2 * x2 / 120.0
    } else {
        x.sin() / x
    }
}

/// Closed-form exponential in Cl(0,3).
pub fn exp_closed_cl03(a: &Multivector) -> Result<Multivector> {
    if a.sig() != Signature::Cl03 {
        return Err(MvError::UnsupportedSignature { op: "exp_closed_cl03", sig: a.sig() });
    }
    let c = a.coeffs();
    let (a0, a1, a2, a3, a12, a13, a23, a123) = (c[0], c[1], c[2], c[3], c[4], c[5], c[6], c[7]);
    let ExpClosedIntermediates { a_plus, a_minus } = cl03_a_pm(a);
    let ep = 0.5 * (a0 + a123).exp();
    let em = 0.5 * (a0 - a123).exp();
    let (cp, cm) = (ep * a_plus.cos(), em * a_minus.cos());
    let (sp, sm) = (ep * sinc(a_plus), em * sinc(a_minus));
    Ok(Multivector::new(
        Signature::Cl03,
        [
            cp + cm,
            sp * (a1 - a23) + sm * (a1 + a23),
            sp * (a2 + a13) + sm * (a2 - a13),
            sp * (a3 - a12) + sm * (a3 + a12),
            -sp * (a3 - a12) + sm * (a3 + a12),
            sp * (a2 + a13) - sm * (a2 - a13),
            -sp * (a1 - a23) + sm * (a1 + a23),
            cp - cm,
        ],
    ))
}

/// Exponential by scaling and squaring over the Taylor series.
pub fn exp_series(a: &Multivector) -> Multivector {
    let m = a.max_abs();
    let mut s = 0;
    let mut scaled = m;
    while scaled > 0.5 {
        scaled *= 0.5;
        s += 1;
    }
    let x = a.scale(0.5f64.powi(s));
    let mut sum = Multivector::one(a.sig());
    let mut term = sum;
    for k in 1..200 {
        term = (term * x).scale(1.0 / k as f64);
        let next = sum + term;
        if next == sum {
            break;
        }
        sum = next;
    }
    for _ in 0..s {
        sum = sum * sum;
    }
    sum
}

/// Exponential, using the closed form in Cl(0,3) and the series elsewhere.
pub fn exp(a: &Multivector) -> Multivector {
    match a.sig() {
        Signature::Cl03 => exp_closed_cl03(a).expect("signature checked"),
        _ => exp_series(a),
    }
}

/// Exponential of an extended multivector with `λ` replaced by `log(epsilon)`.
pub fn exp_extended(a: &ExtendedMultivector, epsilon: f64) -> Result<Multivector> {
    if !(epsilon > 0.0) {
        return Err(MvError::Usage(format!("epsilon must be positive, got {epsilon}")));
    }
    Ok(exp_series(&a.substitute(epsilon)))
}
