//! Closed-form logarithms, exponentials, powers and inverse trigonometric and hyperbolic
//! functions of multivectors in the four real Clifford algebras of dimension three:
//! Cl(0,3), Cl(3,0), Cl(1,2) and Cl(2,1).
//!
//! ```
//! use mvlog::{exp_series, log, BranchParams, Multivector, Signature};
//!
//! let a = Multivector::new(Signature::Cl30, [-2.0, 1.0, 0.0, 0.0, 0.0, 0.0, 1.0, -3.0]);
//! let l = log(&a, &BranchParams::principal()).unwrap();
//! let back = exp_series(&l.finite().unwrap());
//! assert!(back.relative_residual(&a) < 1e-12);
//! ```

pub mod branching;
pub mod error;
pub mod exponential;
pub mod extended;
pub mod functions;
pub mod ga_core;
pub mod logarithm;

pub use branching::{arctan2, arctan2_branched, BranchConstant, BranchParams, FreeFamily};
pub use error::{MvError, Result};
pub use exponential::{exp, exp_closed_cl03, exp_extended, exp_series};
pub use extended::{ExtendedMultivector, LAMBDA_TOKEN};
pub use functions::*;
pub use ga_core::{isomorphism_cl30_cl12, Blade, Multivector, Signature, Tolerance};
pub use logarithm::{log, log_series, log_with, min_sheet, CaseRow, LogOutcome, LogResult, MinSheet, NonExistence, SeriesLog};
