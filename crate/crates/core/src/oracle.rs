//! Randomized cross-check of the closed form against golden-section search.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::interval::{Catalog, JustInterval};
use crate::optimizer::{numeric_minimize, optimal_unit, Target, TargetSystem};

/// Bracket that contains the minimizer of every system produced by
/// [`random_system`]: units lie between `log2(9/8)/100` and one octave.
pub const RANDOM_SYSTEM_BRACKET: (f64, f64) = (1e-4, 2.0);

/// A random system of 1–6 targets with 1–100 steps each over the ascending
/// built-in intervals.
pub fn random_system<R: Rng + ?Sized>(rng: &mut R) -> TargetSystem {
    let pool: Vec<JustInterval> = Catalog::builtin()
        .iter()
        .filter(|i| i.ratio.is_ascending())
        .cloned()
        .collect();
    let n = rng.gen_range(1..=6);
    let targets: Vec<Target> = (0..n)
        .map(|_| {
            Target::new(
                rng.gen_range(1..=100),
                pool.choose(rng).expect("pool is nonempty").clone(),
            )
        })
        .collect();
    let params = targets.iter().map(|t| t.steps).collect();
    TargetSystem::new("random", params, targets).expect("random targets are valid")
}

#[derive(Clone, Debug, PartialEq)]
pub struct OracleSummary {
    pub systems: usize,
    /// Largest `|closed form − golden section|`, in octaves.
    pub max_discrepancy: f64,
    /// Largest `|Σ k·(k·x − log2 J)|`, in octaves.
    pub max_stationarity: f64,
    /// Systems where the numeric search failed.
    pub failures: usize,
}

/// Runs `count` random systems (seeded) through both minimizers.
pub fn oracle_check(count: usize, seed: u64, tol: f64) -> OracleSummary {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut summary = OracleSummary {
        systems: count,
        max_discrepancy: 0.0,
        max_stationarity: 0.0,
        failures: 0,
    };
    for _ in 0..count {
        let system = random_system(&mut rng);
        let scale = optimal_unit(&system);
        let stationarity: f64 = system
            .targets()
            .iter()
            .zip(scale.residuals_log2())
            .map(|(t, r)| f64::from(t.steps) * r)
            .sum();
        summary.max_stationarity = summary.max_stationarity.max(stationarity.abs());
        match numeric_minimize(&system, RANDOM_SYSTEM_BRACKET, tol) {
            Ok(x) => {
                summary.max_discrepancy = summary.max_discrepancy.max((x - scale.unit_log2).abs())
            }
            Err(_) => summary.failures += 1,
        }
    }
    summary
}
