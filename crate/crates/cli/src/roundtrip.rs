//! Randomized `exp(log A) = A` harness.
//!
//! Sample `i` of a signature draws from its own ChaCha stream, so the report does not depend
//! on how rayon schedules the work.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use mvlog::{exp_series, log, BranchParams, Multivector, Signature};

use crate::document::{BranchDoc, RoundtripDocument, RoundtripRow};

/// Largest relative coefficient error accepted for one sample.
pub const THRESHOLD: f64 = 1e-8;
/// Draws allowed per sample before giving up on finding an input with a logarithm.
pub const MAX_DRAWS: usize = 10_000;

struct Sample {
    draws: usize,
    residual: Option<f64>,
}

fn stream_id(sig: Signature, i: usize) -> u64 {
    let s = Signature::ALL.iter().position(|x| *x == sig).expect("known signature") as u64;
    (s << 48) | i as u64
}

fn sample(sig: Signature, seed: u64, i: usize, b: &BranchParams) -> Sample {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream_id(sig, i));
    for draws in 1..=MAX_DRAWS {
        let a = Multivector::new(sig, std::array::from_fn(|_| rng.gen_range(-10.0..=10.0)));
        let Ok(res) = log(&a, b) else { continue };
        // NonExistent and the measure-zero log(0+) results are both retried.
        let Some(l) = res.finite() else { continue };
        return Sample { draws, residual: Some(exp_series(&l).relative_residual(&a)) };
    }
    Sample { draws: MAX_DRAWS, residual: None }
}

/// Runs `count` samples per signature.
pub fn run(sigs: &[Signature], count: usize, seed: u64, b: &BranchParams) -> RoundtripDocument {
    let algebras = sigs
        .iter()
        .map(|&sig| {
            let samples: Vec<Sample> = (0..count).into_par_iter().map(|i| sample(sig, seed, i, b)).collect();
            let draws: usize = samples.iter().map(|s| s.draws).sum();
            let residuals: Vec<f64> = samples.iter().filter_map(|s| s.residual).collect();
            let failures = samples.iter().filter(|s| !s.residual.is_some_and(|r| r < THRESHOLD)).count();
            let max_residual = residuals.iter().copied().fold(0.0, f64::max);
            let mean_residual = if residuals.is_empty() { 0.0 } else { residuals.iter().sum::<f64>() / residuals.len() as f64 };
            let rejected = draws - residuals.len();
            RoundtripRow {
                algebra: sig.name(),
                samples: count,
                draws,
                rejected,
                rejection_rate: if draws == 0 { 0.0 } else { rejected as f64 / draws as f64 },
                max_residual,
                mean_residual,
                failures,
                passed: failures == 0,
            }
        })
        .collect();
    RoundtripDocument { op: "roundtrip", seed, count, branch: BranchDoc::from(b), threshold: THRESHOLD, algebras }
}
