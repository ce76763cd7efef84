//! Explicit coordinate formulas for the generic Cl(0,3) logarithm.
//!
//! Independent of the split-half construction in `cl03`, so the two serve as
//! cross-checks of each other.

use crate::branching::angle;
use crate::error::{MvError, Result};
use crate::exponential::cl03_a_pm;
use crate::ga_core::{Multivector, Signature, Tolerance};

/// Principal logarithm of a generic Cl(0,3) multivector `B`, coefficient by coefficient.
///
/// Requires `b₊ ≠ 0` and `b₋ ≠ 0`; degenerate inputs are a usage error.
pub fn log_cl03_coordinate(b: &Multivector) -> Result<Multivector> {
    if b.sig() != Signature::Cl03 {
        return Err(MvError::UnsupportedSignature { op: "log_cl03_coordinate", sig: b.sig() });
    }
    let pm = cl03_a_pm(b);
    let (bp, bm) = (pm.a_plus, pm.a_minus);
    let eps = Tolerance::default().abs(b.max_abs(), 1);
    if bp <= eps || bm <= eps {
        return Err(MvError::Usage(format!(
            "coordinate form needs b+ and b- nonzero (got b+ = {bp:e}, b- = {bm:e}); use log_cl03"
        )));
    }
    let c = b.coeffs();
    let (b0, b1, b2, b3, b12, b13, b23, b123) = (c[0], c[1], c[2], c[3], c[4], c[5], c[6], c[7]);
    let fm = (b0 - b123).powi(2) + bm * bm;
    let fp = (b0 + b123).powi(2) + bp * bp;
    // tm and tp are the angles a₋, a₊ of the logarithm, divided by b∓.
    let tm = angle(b0 - b123, bm) / bm;
    let tp = angle(b0 + b123, bp) / bp;
    Ok(Multivector::new(
        Signature::Cl03,
        [
            0.25 * (fm.ln() + fp.ln()),
            0.5 * ((b1 + b23) * tm + (b1 - b23) * tp),
            0.5 * ((b2 - b13) * tm + (b2 + b13) * tp),
            0.5 * ((b3 + b12) * tm + (b3 - b12) * tp),
            0.5 * ((b3 + b12) * tm + (b12 - b3) * tp),
            0.5 * ((b13 - b2) * tm + (b2 + b13) * tp),
            0.5 * ((b1 + b23) * tm + (b23 - b1) * tp),
            0.25 * (fp.ln() - fm.ln()),
        ],
    ))
}
