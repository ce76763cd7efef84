//! Mercator series `log(1 + B) = B − B²/2 + B³/3 − …`, evaluated in Horner form.

use crate::ga_core::Multivector;

const STAGNATION: f64 = 1e-12;

/// Result of [`log_series`].
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SeriesLog {
    pub value: Multivector,
    /// True only when `|A − 1| < 1` and the terms fell below `1e-12` relative.
    pub converged: bool,
    /// Number of series terms used.
    pub terms: usize,
}

/// Series logarithm of `a` about 1 with at most `max_terms` terms.
///
/// Divergence is reported through `converged`, not as an error.
pub fn log_series(a: &Multivector, max_terms: usize) -> SeriesLog {
    let b = *a - 1.0;
    let sig = a.sig();
    if b.max_abs() == 0.0 {
        return SeriesLog { value: Multivector::zero(sig), converged: true, terms: 1 };
    }
    let inside = b.norm() < 1.0;

    // Find how many terms are needed: stop once B^k/k is negligible next to B.
    let scale = b.max_abs();
    let mut power = b;
    let mut terms = max_terms.max(1);
    let mut stagnated = false;
    for k in 1..=max_terms.max(1) {
        if k > 1 {
            power = power * b;
        }
        let size = power.max_abs() / k as f64;
        if !size.is_finite() {
            terms = k;
            break;
        }
        if size <= STAGNATION * scale {
            terms = k;
            stagnated = true;
            break;
        }
    }

    // B(1 + B(−1/2 + B(1/3 − …))).
    let mut acc = Multivector::zero(sig);
    for k in (1..=terms).rev() {
        let coeff = if k % 2 == 1 { 1.0 / k as f64 } else { -1.0 / k as f64 };
        acc = b * acc + coeff;
    }
    SeriesLog { value: acc * b, converged: inside && stagnated && acc.is_finite(), terms }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ga_core::{Blade, Signature};

    #[test]
    fn one_is_trivial() {
        let r = log_series(&Multivector::one(Signature::Cl30), 10);
        assert!(r.converged);
        assert_eq!(r.value, Multivector::zero(Signature::Cl30));
    }

    #[test]
    fn scalar_matches_ln() {
        let r = log_series(&Multivector::scalar(Signature::Cl21, 1.3), 500);
        assert!(r.converged);
        assert!((r.value[Blade::S] - 1.3f64.ln()).abs() < 1e-13);
    }

    #[test]
    fn far_from_one_does_not_converge() {
        let r = log_series(&Multivector::scalar(Signature::Cl03, -0.9), 200);
        assert!(!r.converged);
    }
}
