//! The local-hidden-variable photon-polarization model.
//!
//! Every photon pair carries a definite polarization angle lambda. A filter
//! at orientation `f` projects a state at `lambda` onto cos(2*(f - lambda))
//! for the pass channel and sin(2*(f - lambda)) for the blocked channel; the
//! angle doubling is what reproduces the cos^2 intensity of an 11.25-degree
//! offset (0.924^2 = 0.854). Products of projections give the four signed
//! per-pair quantities, their half-sum combination gives the per-state
//! correlator, and weighted grid means give the population quantities.
//!
//! Normalization convention: the per-state expected value carries a factor
//! 1/2 so its magnitude stays within 1; the population expected value is the
//! grid mean of the undivided combination (equivalently twice the mean
//! per-state value) so that aligned polarizers average to exactly 1. Both
//! conventions are fixed here and surfaced in reports.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::core::{AngleDeg, ChshSetting, JointQuantities, PolarizationGrid};
use crate::error::{Error, Result};

/// Identifier of the seeded PRNG backing [`mc_expected_value`], echoed in
/// report metadata so stochastic runs are reproducible by construction.
pub const RNG_ALGORITHM: &str = "chacha8";

/// Pass-channel projection cos(2*(filter - lambda)), degrees doubled then
/// converted to radians exactly once.
pub fn pass_projection(filter: AngleDeg, lambda: AngleDeg) -> f64 {
    (2.0 * (filter.degrees() - lambda.degrees())).to_radians().cos()
}

/// Blocked-channel counterpart sin(2*(filter - lambda)).
pub fn blocked_projection(filter: AngleDeg, lambda: AngleDeg) -> f64 {
    (2.0 * (filter.degrees() - lambda.degrees())).to_radians().sin()
}

/// The four signed per-pair quantities for a single polarization state.
pub fn joint_quantities(a: AngleDeg, b: AngleDeg, lambda: AngleDeg) -> JointQuantities {
    let (sin_a, cos_a) = (2.0 * (a.degrees() - lambda.degrees())).to_radians().sin_cos();
    let (sin_b, cos_b) = (2.0 * (b.degrees() - lambda.degrees())).to_radians().sin_cos();
    JointQuantities {
        pp: cos_a * cos_b,
        nn: sin_a * sin_b,
        pn: cos_a * sin_b,
        np: sin_a * cos_b,
    }
}

/// Per-state expected value (pp + nn - pn - np) / 2.
pub fn expected_value_single(a: AngleDeg, b: AngleDeg, lambda: AngleDeg) -> f64 {
    let j = joint_quantities(a, b, lambda);
    (j.pp + j.nn - j.pn - j.np) / 2.0
}

/// Joint quantities and expected value for one polarization state.
#[derive(Debug, Clone, Copy)]
pub struct SingleStateResult {
    pub lambda: AngleDeg,
    pub joint: JointQuantities,
    pub expected_value: f64,
}

pub fn evaluate_single(a: AngleDeg, b: AngleDeg, lambda: AngleDeg) -> SingleStateResult {
    let joint = joint_quantities(a, b, lambda);
    SingleStateResult {
        lambda,
        joint,
        expected_value: (joint.pp + joint.nn - joint.pn - joint.np) / 2.0,
    }
}

/// Per-state CHSH combination S = E(a,b) - E(a,b') + E(a',b) + E(a',b').
pub fn chsh_single(setting: &ChshSetting, lambda: AngleDeg) -> f64 {
    expected_value_single(setting.a, setting.b, lambda)
        - expected_value_single(setting.a, setting.b_prime, lambda)
        + expected_value_single(setting.a_prime, setting.b, lambda)
        + expected_value_single(setting.a_prime, setting.b_prime, lambda)
}

/// Weighted mean of the joint quantities over all grid states.
///
/// Summation is in fixed grid order so repeated runs are bit-identical.
pub fn ensemble_joint(
    a: AngleDeg,
    b: AngleDeg,
    grid: &PolarizationGrid,
) -> Result<JointQuantities> {
    if grid.n_states() == 0 {
        return Err(Error::Domain("ensemble average over empty grid".into()));
    }
    let (mut pp, mut nn, mut pn, mut np) = (0.0, 0.0, 0.0, 0.0);
    for (lambda, w) in grid.iter() {
        let j = joint_quantities(a, b, lambda);
        pp += w * j.pp;
        nn += w * j.nn;
        pn += w * j.pn;
        np += w * j.np;
    }
    Ok(JointQuantities { pp, nn, pn, np })
}

/// Population expected value: the grid mean of the undivided combination
/// pp + nn - pn - np. On any uniform grid with 5 or more states the blocked
/// cross terms cancel over whole periods and this equals cos(2*(a-b)).
pub fn expected_value_population(
    a: AngleDeg,
    b: AngleDeg,
    grid: &PolarizationGrid,
) -> Result<f64> {
    let j = ensemble_joint(a, b, grid)?;
    Ok(j.pp + j.nn - j.pn - j.np)
}

/// Ensemble means for one polarizer pair, optionally with the full-setting S.
#[derive(Debug, Clone, Copy)]
pub struct PopulationResult {
    pub joint_mean: JointQuantities,
    pub expected_value: f64,
    /// Present when a full four-orientation setting was evaluated.
    pub s_value: Option<f64>,
}

pub fn evaluate_population(
    a: AngleDeg,
    b: AngleDeg,
    grid: &PolarizationGrid,
) -> Result<PopulationResult> {
    let joint_mean = ensemble_joint(a, b, grid)?;
    Ok(PopulationResult {
        joint_mean,
        expected_value: joint_mean.pp + joint_mean.nn - joint_mean.pn - joint_mean.np,
        s_value: None,
    })
}

/// Population CHSH combination over the grid.
pub fn chsh_population(setting: &ChshSetting, grid: &PolarizationGrid) -> Result<f64> {
    Ok(expected_value_population(setting.a, setting.b, grid)?
        - expected_value_population(setting.a, setting.b_prime, grid)?
        + expected_value_population(setting.a_prime, setting.b, grid)?
        + expected_value_population(setting.a_prime, setting.b_prime, grid)?)
}

/// Evaluates a full setting: the (a, b) ensemble means plus the population S.
pub fn evaluate_population_setting(
    setting: &ChshSetting,
    grid: &PolarizationGrid,
) -> Result<PopulationResult> {
    let mut result = evaluate_population(setting.a, setting.b, grid)?;
    result.s_value = Some(chsh_population(setting, grid)?);
    Ok(result)
}

/// Monte-Carlo estimate of the population expected value with lambda drawn
/// uniformly on [0, 360) instead of from a grid.
#[derive(Debug, Clone, Copy)]
pub struct McEstimate {
    pub estimate: f64,
    pub std_error: f64,
    pub samples: u64,
    pub seed: u64,
}

/// Averages twice the per-state expected value over `samples` uniform draws.
/// Deterministic for a fixed seed. Returns the mean and the standard error
/// of the mean.
pub fn mc_expected_value(
    a: AngleDeg,
    b: AngleDeg,
    samples: u64,
    seed: u64,
) -> Result<McEstimate> {
    if samples < 2 {
        return Err(Error::Domain(format!(
            "monte-carlo estimate needs at least 2 samples, got {samples}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    // Welford accumulation: single pass, fixed order, numerically stable.
    let mut mean = 0.0;
    let mut m2 = 0.0;
    for i in 1..=samples {
        let lambda = AngleDeg::new(rng.gen::<f64>() * 360.0).expect("finite draw");
        let value = 2.0 * expected_value_single(a, b, lambda);
        let delta = value - mean;
        mean += delta / i as f64;
        m2 += delta * (value - mean);
    }
    let variance = m2 / (samples - 1) as f64;
    Ok(McEstimate {
        estimate: mean,
        std_error: (variance / samples as f64).sqrt(),
        samples,
        seed,
    })
}
