//! Multivectors whose coefficients are affine in the symbol `λ = log(0₊)`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::ga_core::{Blade, Multivector, Signature};

/// `finite + λ·lambda`, where `λ` stands for `log(0₊) = −∞`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ExtendedMultivector {
    pub finite: Multivector,
    pub lambda: Multivector,
}

impl ExtendedMultivector {
    pub fn new(finite: Multivector, lambda: Multivector) -> Self {
        assert_eq!(finite.sig(), lambda.sig(), "signature mismatch in extended multivector");
        ExtendedMultivector { finite, lambda }
    }

    pub fn finite(m: Multivector) -> Self {
        ExtendedMultivector { finite: m, lambda: Multivector::zero(m.sig()) }
    }

    pub fn zero(sig: Signature) -> Self {
        Self::finite(Multivector::zero(sig))
    }

    /// The scalar `λ` itself.
    pub fn lambda_scalar(sig: Signature) -> Self {
        ExtendedMultivector { finite: Multivector::zero(sig), lambda: Multivector::one(sig) }
    }

    pub fn sig(&self) -> Signature {
        self.finite.sig()
    }

    pub fn has_lambda(&self) -> bool {
        self.lambda.coeffs().iter().any(|c| *c != 0.0)
    }

    /// The finite value when no coefficient carries `λ`.
    pub fn as_finite(&self) -> Option<Multivector> {
        (!self.has_lambda()).then_some(self.finite)
    }

    /// Replaces `λ` by `log(epsilon)`.
    pub fn substitute(&self, epsilon: f64) -> Multivector {
        self.finite + self.lambda.scale(epsilon.ln())
    }

    pub fn scale(&self, k: f64) -> Self {
        ExtendedMultivector { finite: self.finite.scale(k), lambda: self.lambda.scale(k) }
    }

    pub fn reverse(&self) -> Self {
        ExtendedMultivector { finite: self.finite.reverse(), lambda: self.lambda.reverse() }
    }

    /// Coefficient pairs `(finite, λ-multiplier)` in storage order.
    pub fn pairs(&self) -> [(f64, f64); 8] {
        let f = self.finite.coeffs();
        let l = self.lambda.coeffs();
        std::array::from_fn(|i| (f[i], l[i]))
    }
}

impl From<Multivector> for ExtendedMultivector {
    fn from(m: Multivector) -> Self {
        Self::finite(m)
    }
}

impl Add for ExtendedMultivector {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        ExtendedMultivector { finite: self.finite + rhs.finite, lambda: self.lambda + rhs.lambda }
    }
}

impl Add<Multivector> for ExtendedMultivector {
    type Output = Self;
    fn add(self, rhs: Multivector) -> Self {
        ExtendedMultivector { finite: self.finite + rhs, lambda: self.lambda }
    }
}

impl Sub for ExtendedMultivector {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Neg for ExtendedMultivector {
    type Output = Self;
    fn neg(self) -> Self {
        self.scale(-1.0)
    }
}

impl Mul<f64> for ExtendedMultivector {
    type Output = Self;
    fn mul(self, k: f64) -> Self {
        self.scale(k)
    }
}

/// Right multiplication by a finite multivector.
impl Mul<Multivector> for ExtendedMultivector {
    type Output = Self;
    fn mul(self, m: Multivector) -> Self {
        ExtendedMultivector { finite: self.finite * m, lambda: self.lambda * m }
    }
}

/// Left multiplication by a finite multivector.
impl Mul<ExtendedMultivector> for Multivector {
    type Output = ExtendedMultivector;
    fn mul(self, e: ExtendedMultivector) -> ExtendedMultivector {
        ExtendedMultivector { finite: self * e.finite, lambda: self * e.lambda }
    }
}

/// Token used for `λ` in text output.
pub const LAMBDA_TOKEN: &str = "log(0+)";

impl fmt::Display for ExtendedMultivector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if !self.has_lambda() {
            return write!(f, "{}", self.finite);
        }
        let mut parts = Vec::new();
        for (blade, (x, l)) in Blade::ALL.iter().zip(self.pairs()) {
            if x == 0.0 && l == 0.0 {
                continue;
            }
            let coeff = match (x == 0.0, l == 0.0) {
                (_, true) => format!("{x}"),
                (true, false) => format!("{l}*{LAMBDA_TOKEN}"),
                (false, false) => format!("({x} + {l}*{LAMBDA_TOKEN})"),
            };
            if *blade == Blade::S {
                parts.push(coeff);
            } else {
                parts.push(format!("{coeff}*{}", blade.symbol()));
            }
        }
        write!(f, "{}", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn substitution_of_lambda() {
        let l = ExtendedMultivector::lambda_scalar(Signature::Cl30);
        let m = l.substitute(1e-8);
        assert!((m[Blade::S] - 1e-8f64.ln()).abs() < 1e-12);
        assert!(l.has_lambda());
        assert_eq!(l.as_finite(), None);
    }

    #[test]
    fn products_act_on_both_parts() {
        let sig = Signature::Cl03;
        let i = Multivector::pseudoscalar(sig);
        let l = ExtendedMultivector::lambda_scalar(sig) * i;
        assert_eq!(l.lambda, i);
        assert_eq!(l.finite, Multivector::zero(sig));
    }
}
