//! Monte-Carlo channel simulation.
//!
//! Trial `k` draws from ChaCha8 seeded with the master seed and switched to
//! stream `k`, so each trial is reproducible on its own and the result does
//! not depend on scheduling. Errors have exact weight `t`: the support is
//! uniform among `t`-subsets and the values are uniform nonzero.

use std::time::Instant;

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use wbcode::frdecode::{decode, DecoderSetup};
use wbcode::{DecodeFailure, Elem, Error, Field};

use crate::CliError;

pub const GENERATOR: &str = "chacha8";

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct FailureCounts {
    pub tied_vote: usize,
    pub no_candidates: usize,
    /// Decoding finished with a codeword other than the one sent.
    pub wrong_codeword: usize,
}

impl FailureCounts {
    pub fn total(&self) -> usize {
        self.tied_vote + self.no_candidates + self.wrong_codeword
    }

    fn add(&mut self, other: &FailureCounts) {
        self.tied_vote += other.tied_vote;
        self.no_candidates += other.no_candidates;
        self.wrong_codeword += other.wrong_codeword;
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightStats {
    pub weight: usize,
    pub trials: usize,
    pub successes: usize,
    pub failures: FailureCounts,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SimReport {
    pub generator: String,
    pub seed: u64,
    pub n: usize,
    pub dimension: usize,
    pub designed_distance: usize,
    pub radius: Option<usize>,
    pub trials: usize,
    pub successes: usize,
    pub failures: FailureCounts,
    /// Wrong codewords among trials with weight at most the radius.
    pub wrong_within_radius: usize,
    /// One entry per simulated error weight, in increasing order.
    pub by_weight: Vec<WeightStats>,
    pub wall_time_ms: f64,
}

enum Outcome {
    Success,
    Failed(FailureCounts),
}

fn random_elem(f: &Field, rng: &mut ChaCha8Rng, nonzero: bool) -> Elem {
    let lo = u64::from(nonzero);
    f.elem(rng.gen_range(lo..f.order() as u64)).expect("below q")
}

fn trial(setup: &DecoderSetup, t: usize, seed: u64, k: u64) -> Result<Outcome, Error> {
    let f = setup.field();
    let n = setup.len();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(k);
    let message: Vec<Elem> = (0..setup.indices().len()).map(|_| random_elem(f, &mut rng, false)).collect();
    let mut coeffs = vec![f.zero(); n];
    for (&i, &m) in setup.indices().members().iter().zip(&message) {
        coeffs[i - 1] = m;
    }
    let c = setup.g().combine(&coeffs)?;
    let mut r = c.clone();
    for pos in sample(&mut rng, n, t) {
        r[pos] = f.add(r[pos], random_elem(f, &mut rng, true));
    }
    let mut fail = FailureCounts::default();
    match decode(setup, &r) {
        Ok(d) if d.codeword == c => return Ok(Outcome::Success),
        Ok(_) => fail.wrong_codeword = 1,
        Err(Error::Decode(DecodeFailure::TiedVote { .. })) => fail.tied_vote = 1,
        Err(Error::Decode(DecodeFailure::NoCandidates { .. })) => fail.no_candidates = 1,
        Err(e) => return Err(e),
    }
    Ok(Outcome::Failed(fail))
}

/// Runs `trials` trials for every weight in `weights`. Trial numbers run
/// consecutively over the weights in the given order.
pub fn simulate(setup: &DecoderSetup, weights: &[usize], trials: usize, seed: u64) -> Result<SimReport, CliError> {
    let start = Instant::now();
    let by_weight = weights
        .iter()
        .enumerate()
        .map(|(w, &t)| {
            let base = (w * trials) as u64;
            let outcomes = (0..trials as u64)
                .into_par_iter()
                .map(|k| trial(setup, t, seed, base + k))
                .collect::<Result<Vec<_>, Error>>()?;
            let mut stats = WeightStats { weight: t, trials, successes: 0, failures: FailureCounts::default() };
            for o in outcomes {
                match o {
                    Outcome::Success => stats.successes += 1,
                    Outcome::Failed(c) => stats.failures.add(&c),
                }
            }
            Ok(stats)
        })
        .collect::<Result<Vec<_>, Error>>()?;

    let radius = setup.radius();
    let mut failures = FailureCounts::default();
    let mut wrong_within_radius = 0;
    for w in &by_weight {
        failures.add(&w.failures);
        if radius.is_some_and(|r| w.weight <= r) {
            wrong_within_radius += w.failures.wrong_codeword;
        }
    }
    Ok(SimReport {
        generator: GENERATOR.to_string(),
        seed,
        n: setup.len(),
        dimension: setup.indices().len(),
        designed_distance: setup.designed_distance(),
        radius,
        trials: trials * weights.len(),
        successes: by_weight.iter().map(|w| w.successes).sum(),
        failures,
        wrong_within_radius,
        by_weight,
        wall_time_ms: start.elapsed().as_secs_f64() * 1e3,
    })
}
