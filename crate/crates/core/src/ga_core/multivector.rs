use std::fmt;
use std::ops::{Add, AddAssign, Index, Mul, Neg, Sub};

use super::signature::Signature;
use crate::error::{MvError, Result};

/// Basis blades in storage order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Blade {
    S,
    E1,
    E2,
    E3,
    E12,
    E13,
    E23,
    E123,
}

impl Blade {
    pub const ALL: [Blade; 8] = [
        Blade::S,
        Blade::E1,
        Blade::E2,
        Blade::E3,
        Blade::E12,
        Blade::E13,
        Blade::E23,
        Blade::E123,
    ];

    pub const fn index(self) -> usize {
        self as usize
    }

    pub const fn grade(self) -> usize {
        match self {
            Blade::S => 0,
            Blade::E1 | Blade::E2 | Blade::E3 => 1,
            Blade::E12 | Blade::E13 | Blade::E23 => 2,
            Blade::E123 => 3,
        }
    }

    pub const fn symbol(self) -> &'static str {
        match self {
            Blade::S => "1",
            Blade::E1 => "e1",
            Blade::E2 => "e2",
            Blade::E3 => "e3",
            Blade::E12 => "e12",
            Blade::E13 => "e13",
            Blade::E23 => "e23",
            Blade::E123 => "e123",
        }
    }
}

/// A multivector `a0 + a1 e1 + a2 e2 + a3 e3 + a12 e12 + a13 e13 + a23 e23 + a123 I`.
///
/// Coefficients are stored in the fixed order `[1, e1, e2, e3, e12, e13, e23, e123]`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Multivector {
    coeffs: [f64; 8],
    sig: Signature,
}

/// The grade decomposition `a0 + a + 𝒜 + a123 I`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GradeView {
    pub scalar: f64,
    pub vector: [f64; 3],
    pub bivector: [f64; 3],
    pub pseudoscalar: f64,
}

impl Multivector {
    pub const fn new(sig: Signature, coeffs: [f64; 8]) -> Self {
        Multivector { coeffs, sig }
    }

    /// Like [`Multivector::new`] but rejects non-finite coefficients.
    pub fn try_new(sig: Signature, coeffs: [f64; 8]) -> Result<Self> {
        if let Some(i) = coeffs.iter().position(|c| !c.is_finite()) {
            return Err(MvError::Usage(format!(
                "coefficient of {} is not finite",
                Blade::ALL[i].symbol()
            )));
        }
        Ok(Multivector { coeffs, sig })
    }

    pub const fn zero(sig: Signature) -> Self {
        Multivector { coeffs: [0.0; 8], sig }
    }

    pub const fn scalar(sig: Signature, x: f64) -> Self {
        let mut coeffs = [0.0; 8];
        coeffs[0] = x;
        Multivector { coeffs, sig }
    }

    pub const fn one(sig: Signature) -> Self {
        Self::scalar(sig, 1.0)
    }

    pub fn blade(sig: Signature, blade: Blade, x: f64) -> Self {
        let mut coeffs = [0.0; 8];
        coeffs[blade.index()] = x;
        Multivector { coeffs, sig }
    }

    /// The pseudoscalar `I = e123`.
    pub fn pseudoscalar(sig: Signature) -> Self {
        Self::blade(sig, Blade::E123, 1.0)
    }

    pub fn from_grades(sig: Signature, g: GradeView) -> Self {
        let [v1, v2, v3] = g.vector;
        let [b12, b13, b23] = g.bivector;
        Multivector::new(sig, [g.scalar, v1, v2, v3, b12, b13, b23, g.pseudoscalar])
    }

    pub fn coeffs(&self) -> &[f64; 8] {
        &self.coeffs
    }

    pub fn sig(&self) -> Signature {
        self.sig
    }

    pub fn get(&self, blade: Blade) -> f64 {
        self.coeffs[blade.index()]
    }

    pub fn with_sig(&self, sig: Signature) -> Self {
        Multivector::new(sig, self.coeffs)
    }

    pub fn grades(&self) -> GradeView {
        let c = &self.coeffs;
        GradeView {
            scalar: c[0],
            vector: [c[1], c[2], c[3]],
            bivector: [c[4], c[5], c[6]],
            pseudoscalar: c[7],
        }
    }

    /// Vector plus bivector part `a + 𝒜`.
    pub fn vector_bivector(&self) -> Self {
        let mut c = self.coeffs;
        c[0] = 0.0;
        c[7] = 0.0;
        Multivector::new(self.sig, c)
    }

    /// Scalar plus pseudoscalar part `a0 + a123 I`.
    pub fn center(&self) -> Self {
        let c = &self.coeffs;
        Multivector::new(self.sig, [c[0], 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, c[7]])
    }

    pub fn max_abs(&self) -> f64 {
        self.coeffs.iter().fold(0.0, |m, c| m.max(c.abs()))
    }

    pub fn is_finite(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_finite())
    }

    /// True when every coefficient is within `eps` of zero.
    pub fn is_zero_within(&self, eps: f64) -> bool {
        self.coeffs.iter().all(|c| c.abs() <= eps)
    }

    pub fn map(&self, f: impl Fn(f64) -> f64) -> Self {
        Multivector::new(self.sig, self.coeffs.map(f))
    }

    pub fn scale(&self, k: f64) -> Self {
        self.map(|c| c * k)
    }

    /// Reversion: `a0 + a − 𝒜 − a123 I`.
    pub fn reverse(&self) -> Self {
        self.sign_pattern([1.0, 1.0, 1.0, 1.0, -1.0, -1.0, -1.0, -1.0])
    }

    /// Grade involution: `a0 − a + 𝒜 − a123 I`.
    pub fn grade_inv(&self) -> Self {
        self.sign_pattern([1.0, -1.0, -1.0, -1.0, 1.0, 1.0, 1.0, -1.0])
    }

    /// Clifford conjugation: `a0 − a − 𝒜 + a123 I`.
    pub fn cliff_conj(&self) -> Self {
        self.sign_pattern([1.0, -1.0, -1.0, -1.0, -1.0, -1.0, -1.0, 1.0])
    }

    /// `(reverse, grade_inv, cliff_conj)`.
    pub fn involutions(&self) -> (Self, Self, Self) {
        (self.reverse(), self.grade_inv(), self.cliff_conj())
    }

    fn sign_pattern(&self, s: [f64; 8]) -> Self {
        let mut c = self.coeffs;
        for (x, k) in c.iter_mut().zip(s) {
            *x *= k;
        }
        Multivector::new(self.sig, c)
    }

    /// The product `ã â (ã)^`, which satisfies `a · adj(a) = Det(a)`.
    pub fn adjugate(&self) -> Self {
        let r = self.reverse();
        r * self.grade_inv() * r.grade_inv()
    }

    /// Full four-factor product `a ã â (ã)^` before reduction to the scalar part.
    pub fn determinant_product(&self) -> Self {
        *self * self.adjugate()
    }

    /// `Det(a)`: scalar part of `a ã â (ã)^`.
    pub fn determinant(&self) -> f64 {
        let p = self.determinant_product();
        debug_assert!(
            {
                let rest = p.coeffs[1..].iter().fold(0.0f64, |m, c| m.max(c.abs()));
                rest <= 1e-9 * p.max_abs().max(f64::MIN_POSITIVE)
            },
            "determinant has a non-scalar residue: {p:?}"
        );
        p.coeffs[0]
    }

    /// `|a| = |Det(a)|^(1/4)`.
    pub fn norm(&self) -> f64 {
        self.determinant().abs().powf(0.25)
    }

    /// Inverse via the adjugate divided by the determinant.
    pub fn inverse(&self) -> Result<Self> {
        let det = self.determinant();
        let scale = self.max_abs();
        if det == 0.0 || det.abs() <= 1e-12 * scale.powi(4) || !det.is_finite() {
            return Err(MvError::NonInvertible { det });
        }
        Ok(self.adjugate().scale(1.0 / det))
    }

    /// Commutator `ab − ba`.
    pub fn commutator(&self, other: &Self) -> Self {
        *self * *other - *other * *self
    }

    /// Largest absolute coefficient difference divided by the largest coefficient of `reference`.
    pub fn relative_residual(&self, reference: &Self) -> f64 {
        let diff = (*self - *reference).max_abs();
        let scale = reference.max_abs();
        if scale == 0.0 {
            diff
        } else {
            diff / scale
        }
    }
}

/// Signature-checked geometric product.
pub fn geometric_product(a: &Multivector, b: &Multivector) -> Result<Multivector> {
    if a.sig != b.sig {
        return Err(MvError::SignatureMismatch { left: a.sig, right: b.sig });
    }
    Ok(product_unchecked(a, b))
}

fn product_unchecked(a: &Multivector, b: &Multivector) -> Multivector {
    let table = a.sig.table();
    let mut out = [0.0; 8];
    for (i, &x) in a.coeffs.iter().enumerate() {
        if x == 0.0 {
            continue;
        }
        for (j, &y) in b.coeffs.iter().enumerate() {
            let (k, s) = table[i][j];
            out[k as usize] += f64::from(s) * x * y;
        }
    }
    Multivector::new(a.sig, out)
}

/// `a·a`, `B·B` and the I-coefficient of `a∧B` for a vector `a` and bivector `B`.
pub fn dot_wedge_split(sig: Signature, v: [f64; 3], b: [f64; 3]) -> (f64, f64, f64) {
    let vv = sig.vector_square(1) * v[0] * v[0]
        + sig.vector_square(2) * v[1] * v[1]
        + sig.vector_square(3) * v[2] * v[2];
    let bb = sig.bivector_square(1, 2) * b[0] * b[0]
        + sig.bivector_square(1, 3) * b[1] * b[1]
        + sig.bivector_square(2, 3) * b[2] * b[2];
    let w = v[0] * b[2] - v[1] * b[1] + v[2] * b[0];
    (vv, bb, w)
}

fn assert_same(a: &Multivector, b: &Multivector) {
    assert!(
        a.sig == b.sig,
        "signature mismatch: {} vs {}; use geometric_product for a checked product",
        a.sig,
        b.sig
    );
}

/// Geometric product. Panics on mismatched signatures; [`geometric_product`] is the checked form.
impl Mul for Multivector {
    type Output = Multivector;
    fn mul(self, rhs: Multivector) -> Multivector {
        assert_same(&self, &rhs);
        product_unchecked(&self, &rhs)
    }
}

impl Mul<f64> for Multivector {
    type Output = Multivector;
    fn mul(self, k: f64) -> Multivector {
        self.scale(k)
    }
}

impl Mul<Multivector> for f64 {
    type Output = Multivector;
    fn mul(self, m: Multivector) -> Multivector {
        m.scale(self)
    }
}

impl Add for Multivector {
    type Output = Multivector;
    fn add(self, rhs: Multivector) -> Multivector {
        assert_same(&self, &rhs);
        let mut c = self.coeffs;
        for (x, y) in c.iter_mut().zip(rhs.coeffs) {
            *x += y;
        }
        Multivector::new(self.sig, c)
    }
}

impl AddAssign for Multivector {
    fn add_assign(&mut self, rhs: Multivector) {
        *self = *self + rhs;
    }
}

impl Add<f64> for Multivector {
    type Output = Multivector;
    fn add(self, k: f64) -> Multivector {
        let mut c = self.coeffs;
        c[0] += k;
        Multivector::new(self.sig, c)
    }
}

impl Sub for Multivector {
    type Output = Multivector;
    fn sub(self, rhs: Multivector) -> Multivector {
        self + (-rhs)
    }
}

impl Sub<f64> for Multivector {
    type Output = Multivector;
    fn sub(self, k: f64) -> Multivector {
        self + (-k)
    }
}

impl Sub<Multivector> for f64 {
    type Output = Multivector;
    fn sub(self, rhs: Multivector) -> Multivector {
        -rhs + self
    }
}

impl Neg for Multivector {
    type Output = Multivector;
    fn neg(self) -> Multivector {
        self.scale(-1.0)
    }
}

impl Index<Blade> for Multivector {
    type Output = f64;
    fn index(&self, blade: Blade) -> &f64 {
        &self.coeffs[blade.index()]
    }
}

impl fmt::Display for Multivector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (blade, &c) in Blade::ALL.iter().zip(&self.coeffs) {
            if c == 0.0 {
                continue;
            }
            let (sign, mag) = if c < 0.0 { ("-", -c) } else { ("+", c) };
            match (first, sign) {
                (true, "-") => write!(f, "-")?,
                (true, _) => {}
                (false, s) => write!(f, " {s} ")?,
            }
            if *blade == Blade::S {
                write!(f, "{mag}")?;
            } else {
                write!(f, "{mag}*{}", blade.symbol())?;
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}
