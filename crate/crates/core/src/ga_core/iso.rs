use super::{Multivector, Signature};
use crate::error::{MvError, Result};

/// Algebra isomorphism between Cl(3,0) and Cl(1,2).
///
/// Generators map as `e1 ↦ −e1`, `e2 ↦ −e12`, `e3 ↦ −e13`, which forces
/// `e12 ↦ e2`, `e13 ↦ e3`, `e23 ↦ −e23` and `e123 ↦ e123`. A Cl(1,2) argument is
/// sent back through the inverse map, so applying the function twice is the identity.
pub fn isomorphism_cl30_cl12(a: &Multivector) -> Result<Multivector> {
    let c = a.coeffs();
    match a.sig() {
        Signature::Cl30 => Ok(Multivector::new(
            Signature::Cl12,
            [c[0], -c[1], c[4], c[5], -c[2], -c[3], -c[6], c[7]],
        )),
        Signature::Cl12 => Ok(Multivector::new(
            Signature::Cl30,
            [c[0], -c[1], -c[4], -c[5], c[2], c[3], -c[6], c[7]],
        )),
        sig => Err(MvError::UnsupportedSignature { op: "isomorphism_cl30_cl12", sig }),
    }
}
