use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::OnceLock;

/// Environment variable that overrides the default relative tolerance.
pub const TOLERANCE_ENV: &str = "MVLOG_TOL";

/// Relative tolerance for the exact-arithmetic zero tests of the case analysis.
///
/// A quantity of degree `d` in the coefficients is treated as zero when its magnitude
/// is at most `rel * scale^d`, where `scale` is the largest input coefficient.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Tolerance {
    pub rel: f64,
}

impl Tolerance {
    pub const DEFAULT_REL: f64 = 1e-12;

    pub const fn new(rel: f64) -> Self {
        Tolerance { rel }
    }

    /// Default tolerance, or the value of `MVLOG_TOL` when it parses as a positive number.
    pub fn from_env() -> Self {
        std::env::var(TOLERANCE_ENV)
            .ok()
            .and_then(|s| s.trim().parse::<f64>().ok())
            .filter(|t| t.is_finite() && *t > 0.0)
            .map(Tolerance::new)
            .unwrap_or(Tolerance::new(Self::DEFAULT_REL))
    }

    /// Replaces the process-wide default returned by [`Tolerance::default`].
    pub fn set_default(rel: f64) {
        assert!(rel.is_finite() && rel > 0.0, "tolerance must be positive, got {rel}");
        OVERRIDE.store(rel.to_bits(), Ordering::Relaxed);
    }

    /// Absolute threshold for a quantity homogeneous of `degree` in coefficients of size `scale`.
    pub fn abs(&self, scale: f64, degree: i32) -> f64 {
        self.rel * scale.powi(degree)
    }
}

// Zero bits mean no override has been set.
static OVERRIDE: AtomicU64 = AtomicU64::new(0);
static FROM_ENV: OnceLock<Tolerance> = OnceLock::new();

/// `1e-12`, unless replaced by [`Tolerance::set_default`] or, failing that, by `MVLOG_TOL`
/// (read once).
impl Default for Tolerance {
    fn default() -> Self {
        match OVERRIDE.load(Ordering::Relaxed) {
            0 => *FROM_ENV.get_or_init(Tolerance::from_env),
            bits => Tolerance::new(f64::from_bits(bits)),
        }
    }
}
