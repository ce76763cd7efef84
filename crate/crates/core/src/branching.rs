//! Double-argument arctangent and the branch bookkeeping shared by the logarithms.
//!
//! Argument order is `arctan(x, y)`: the cosine-like component comes first. This is
//! the reverse of `f64::atan2(y, x)`.

use std::f64::consts::PI;
use std::fmt;

use crate::error::{MvError, Result};
use crate::ga_core::{Blade, Multivector, Signature};

/// Angle of the point `(x, y)` in `(−π, π]`. Note the `(x, y)` argument order.
///
/// The negative x-axis maps to `+π`, including `y = −0.0`.
pub fn arctan2(x: f64, y: f64) -> Result<f64> {
    if x == 0.0 && y == 0.0 {
        return Err(MvError::UndefinedArctan);
    }
    Ok(angle(x, y))
}

/// `arctan2(x, y) + 2πc`.
pub fn arctan2_branched(x: f64, y: f64, c: i64) -> Result<f64> {
    Ok(arctan2(x, y)? + 2.0 * PI * c as f64)
}

/// Unchecked variant used once the caller has excluded the origin.
pub(crate) fn angle(x: f64, y: f64) -> f64 {
    if y == 0.0 && x < 0.0 {
        PI
    } else {
        y.atan2(x)
    }
}

/// Integer branch constants and free directions selecting one sheet of a logarithm.
///
/// Cl(3,0) and Cl(1,2) use only `c1` and `c2`, which share storage with
/// `c1_plus` and `c2_plus`.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct BranchParams {
    pub c1_plus: i64,
    pub c1_minus: i64,
    pub c2_plus: i64,
    pub c2_minus: i64,
    /// Direction of the free unit vector `û` (normalized on use).
    pub free_vector: Option<[f64; 3]>,
    /// Direction of the free unit bivector `Û` (normalized on use).
    pub free_bivector: Option<[f64; 3]>,
}

/// Names of the four branch constants.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BranchConstant {
    C1Plus,
    C1Minus,
    C2Plus,
    C2Minus,
}

impl BranchConstant {
    pub fn name(self, sig: Signature) -> &'static str {
        let paired = matches!(sig, Signature::Cl03 | Signature::Cl21);
        match (self, paired) {
            (BranchConstant::C1Plus, true) => "c1p",
            (BranchConstant::C1Minus, _) => "c1m",
            (BranchConstant::C2Plus, true) => "c2p",
            (BranchConstant::C2Minus, _) => "c2m",
            (BranchConstant::C1Plus, false) => "c1",
            (BranchConstant::C2Plus, false) => "c2",
        }
    }
}

impl BranchParams {
    pub fn principal() -> Self {
        Self::default()
    }

    /// All four constants set to the same value.
    pub fn uniform(c: i64) -> Self {
        BranchParams { c1_plus: c, c1_minus: c, c2_plus: c, c2_minus: c, ..Self::default() }
    }

    pub fn c1(&self) -> i64 {
        self.c1_plus
    }

    pub fn c2(&self) -> i64 {
        self.c2_plus
    }

    pub fn with_c1(mut self, c: i64) -> Self {
        self.c1_plus = c;
        self
    }

    pub fn with_c2(mut self, c: i64) -> Self {
        self.c2_plus = c;
        self
    }

    pub fn get(&self, k: BranchConstant) -> i64 {
        match k {
            BranchConstant::C1Plus => self.c1_plus,
            BranchConstant::C1Minus => self.c1_minus,
            BranchConstant::C2Plus => self.c2_plus,
            BranchConstant::C2Minus => self.c2_minus,
        }
    }

    pub fn set(&mut self, k: BranchConstant, v: i64) {
        match k {
            BranchConstant::C1Plus => self.c1_plus = v,
            BranchConstant::C1Minus => self.c1_minus = v,
            BranchConstant::C2Plus => self.c2_plus = v,
            BranchConstant::C2Minus => self.c2_minus = v,
        }
    }

    /// Free unit vector `û` with `û² = −1`; defaults to `e1`.
    ///
    /// Only Cl(0,3) has vectors squaring to −1 in every direction; in other signatures
    /// the requested direction must still square to a negative number.
    pub fn unit_vector(&self, sig: Signature) -> Result<Multivector> {
        let d = self.free_vector.unwrap_or(default_vector(sig));
        let sq = sig.vector_square(1) * d[0] * d[0]
            + sig.vector_square(2) * d[1] * d[1]
            + sig.vector_square(3) * d[2] * d[2];
        if !(sq < 0.0) {
            return Err(MvError::Usage(format!(
                "free vector ({}, {}, {}) does not square to a negative number in {sig}",
                d[0], d[1], d[2]
            )));
        }
        let k = 1.0 / (-sq).sqrt();
        Ok(Multivector::new(sig, [0.0, d[0] * k, d[1] * k, d[2] * k, 0.0, 0.0, 0.0, 0.0]))
    }

    /// Free unit bivector `Û` with `Û² = −1`.
    ///
    /// Defaults: `e12` in Cl(0,3), Cl(3,0) and Cl(2,1); `e23` in Cl(1,2), where `e12² = +1`.
    pub fn unit_bivector(&self, sig: Signature) -> Result<Multivector> {
        let d = self.free_bivector.unwrap_or(default_bivector(sig));
        let sq = sig.bivector_square(1, 2) * d[0] * d[0]
            + sig.bivector_square(1, 3) * d[1] * d[1]
            + sig.bivector_square(2, 3) * d[2] * d[2];
        if !(sq < 0.0) {
            return Err(MvError::Usage(format!(
                "free bivector ({}, {}, {}) does not square to a negative number in {sig}",
                d[0], d[1], d[2]
            )));
        }
        let k = 1.0 / (-sq).sqrt();
        Ok(Multivector::new(sig, [0.0, 0.0, 0.0, 0.0, d[0] * k, d[1] * k, d[2] * k, 0.0]))
    }
}

fn default_vector(sig: Signature) -> [f64; 3] {
    match sig {
        Signature::Cl12 => [0.0, 1.0, 0.0],
        Signature::Cl21 => [0.0, 0.0, 1.0],
        _ => [1.0, 0.0, 0.0],
    }
}

fn default_bivector(sig: Signature) -> [f64; 3] {
    match sig {
        Signature::Cl12 => [0.0, 0.0, 1.0],
        _ => [1.0, 0.0, 0.0],
    }
}

/// One discrete degree of freedom: adding `k * generator` moves the result to sheet `c + k`.
#[derive(Clone, Debug, PartialEq)]
pub struct DiscreteGenerator {
    pub constant: BranchConstant,
    pub generator: Multivector,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SlotKind {
    UnitVector,
    UnitBivector,
}

/// A term `factor * û` (or `factor * Û`) whose direction is arbitrary.
///
/// `factor` is central (scalar plus pseudoscalar), so its side does not matter.
#[derive(Clone, Debug, PartialEq)]
pub struct ContinuousSlot {
    pub kind: SlotKind,
    pub factor: Multivector,
}

/// Description of the free multivector `F` with `exp(F) = 1` that parameterizes a logarithm.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct FreeFamily {
    pub discrete: Vec<DiscreteGenerator>,
    pub continuous: Vec<ContinuousSlot>,
}

impl FreeFamily {
    pub fn push_discrete(&mut self, constant: BranchConstant, generator: Multivector) {
        self.discrete.push(DiscreteGenerator { constant, generator });
    }

    pub fn push_continuous(&mut self, kind: SlotKind, factor: Multivector) {
        self.continuous.push(ContinuousSlot { kind, factor });
    }

    pub fn is_empty(&self) -> bool {
        self.discrete.is_empty() && self.continuous.is_empty()
    }
}

impl fmt::Display for FreeFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "none");
        }
        let mut parts = Vec::new();
        for g in &self.discrete {
            let name = g.constant.name(g.generator.sig());
            parts.push(format!("{name}*({})", g.generator));
        }
        for s in &self.continuous {
            let dir = match s.kind {
                SlotKind::UnitVector => "u",
                SlotKind::UnitBivector => "U",
            };
            parts.push(format!("({})*{dir}", s.factor));
        }
        write!(f, "{}", parts.join(" + "))
    }
}

/// Pseudoscalar-weighted projector factor `1 ± I`.
pub(crate) fn one_pm_i(sig: Signature, sign: f64) -> Multivector {
    Multivector::new(sig, [1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, sign])
}

pub(crate) fn is_pure(a: &Multivector, allowed: &[Blade], eps: f64) -> bool {
    Blade::ALL
        .iter()
        .filter(|b| !allowed.contains(b))
        .all(|b| a[*b].abs() <= eps)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pinned_quadrants() {
        let t = (10.0f64 / 17.0).atan();
        assert!((arctan2(17.0, 10.0).unwrap() - t).abs() < 1e-15);
        assert!((arctan2(-17.0, 10.0).unwrap() - (PI - t)).abs() < 1e-15);
        assert!((arctan2(-17.0, -10.0).unwrap() - (-PI + t)).abs() < 1e-15);
        assert_eq!(arctan2(1.0, 0.0).unwrap(), 0.0);
        assert_eq!(arctan2(-1.0, 0.0).unwrap(), PI);
        assert_eq!(arctan2(-1.0, -0.0).unwrap(), PI);
        assert!(matches!(arctan2(0.0, 0.0), Err(MvError::UndefinedArctan)));
    }

    #[test]
    fn branched_values() {
        assert!((arctan2_branched(1.0, 0.0, 1).unwrap() - 2.0 * PI).abs() < 1e-15);
        assert_eq!(arctan2_branched(-1.0, 0.0, 0).unwrap(), PI);
        assert!((arctan2_branched(0.0, -1.0, -1).unwrap() - (-PI / 2.0 - 2.0 * PI)).abs() < 1e-15);
    }

    #[test]
    fn default_directions_square_to_minus_one() {
        let b = BranchParams::principal();
        for sig in Signature::ALL {
            let u = b.unit_bivector(sig).unwrap();
            assert_eq!(u * u, Multivector::scalar(sig, -1.0), "{sig}");
        }
        let u = b.unit_vector(Signature::Cl03).unwrap();
        assert_eq!(u * u, Multivector::scalar(Signature::Cl03, -1.0));
    }

    #[test]
    fn free_bivector_is_normalized_in_signature() {
        let b = BranchParams { free_bivector: Some([2.0, 1.0, 1.0]), ..BranchParams::default() };
        let u = b.unit_bivector(Signature::Cl21).unwrap();
        let sq = u * u;
        assert!((sq[Blade::S] + 1.0).abs() < 1e-15);
        let bad = BranchParams { free_bivector: Some([0.0, 1.0, 0.0]), ..BranchParams::default() };
        assert!(bad.unit_bivector(Signature::Cl21).is_err());
        let bad = BranchParams { free_vector: Some([1.0, 0.0, 0.0]), ..BranchParams::default() };
        assert!(bad.unit_vector(Signature::Cl30).is_err());
    }

    #[test]
    fn aliases_share_storage() {
        let b = BranchParams::principal().with_c1(3).with_c2(-2);
        assert_eq!((b.c1_plus, b.c2_plus), (3, -2));
        assert_eq!((b.c1(), b.c2()), (3, -2));
    }
}
