//! Shared geometry: angles in degrees, uniform polarization grids, and the
//! four-orientation CHSH polarizer setting.
//!
//! Degrees are the canonical unit everywhere outside a trig call; conversion
//! to radians happens exactly once, inside the evaluation of a projection.

use serde::Serialize;

use crate::error::{Error, Result};

/// Grid resolution used by all defaults: 32 states, 11.25 degrees apart.
pub const DEFAULT_GRID_SIZE: usize = 32;

/// An orientation or polarization angle in degrees, canonicalized to [0, 360).
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Serialize)]
pub struct AngleDeg(f64);

impl AngleDeg {
    /// Canonicalizes `raw` into [0, 360). Rejects non-finite input.
    pub fn new(raw: f64) -> Result<Self> {
        if !raw.is_finite() {
            return Err(Error::Domain(format!("angle must be finite, got {raw}")));
        }
        Ok(Self(normalize_degrees(raw)))
    }

    /// The canonical value in degrees, in [0, 360).
    pub fn degrees(self) -> f64 {
        self.0
    }

    pub fn radians(self) -> f64 {
        self.0.to_radians()
    }

    /// `self - other`, re-canonicalized into [0, 360).
    pub fn diff(self, other: Self) -> Self {
        Self(normalize_degrees(self.0 - other.0))
    }
}

impl std::fmt::Display for AngleDeg {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// `raw mod 360` mapped into [0, 360). Idempotent.
pub fn normalize_angle(raw: f64) -> Result<AngleDeg> {
    AngleDeg::new(raw)
}

fn normalize_degrees(raw: f64) -> f64 {
    let r = raw.rem_euclid(360.0);
    // rem_euclid can return 360.0 for tiny negative inputs after rounding
    if r >= 360.0 {
        r - 360.0
    } else {
        r
    }
}

/// N uniformly spaced polarization states with uniform weights summing to 1.
///
/// The type carries explicit per-state weights so that non-uniform densities
/// stay representable, but only the uniform constructor exists today.
#[derive(Debug, Clone)]
pub struct PolarizationGrid {
    states: Vec<AngleDeg>,
    weights: Vec<f64>,
}

impl PolarizationGrid {
    /// Builds the uniform grid: states k*(360/n) for k = 0..n-1, weights 1/n.
    pub fn uniform(n_states: usize) -> Result<Self> {
        if n_states == 0 {
            return Err(Error::Domain("grid needs at least one state".into()));
        }
        let step = 360.0 / n_states as f64;
        let states = (0..n_states)
            .map(|k| AngleDeg(k as f64 * step))
            .collect();
        let weights = vec![1.0 / n_states as f64; n_states];
        Ok(Self { states, weights })
    }

    pub fn n_states(&self) -> usize {
        self.states.len()
    }

    pub fn states(&self) -> &[AngleDeg] {
        &self.states
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    /// State at 0-based index `k`.
    pub fn state(&self, k: usize) -> Option<AngleDeg> {
        self.states.get(k).copied()
    }

    /// Iterator over (state, weight) pairs in grid order.
    pub fn iter(&self) -> impl Iterator<Item = (AngleDeg, f64)> + '_ {
        self.states
            .iter()
            .copied()
            .zip(self.weights.iter().copied())
    }
}

/// Builds the uniform grid of `n_states` polarization states.
pub fn make_grid(n_states: usize) -> Result<PolarizationGrid> {
    PolarizationGrid::uniform(n_states)
}

/// The four polarizer orientations (a, b, a', b') entering S.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ChshSetting {
    pub a: AngleDeg,
    pub b: AngleDeg,
    pub a_prime: AngleDeg,
    pub b_prime: AngleDeg,
}

impl ChshSetting {
    pub fn new(a: AngleDeg, b: AngleDeg, a_prime: AngleDeg, b_prime: AngleDeg) -> Self {
        Self {
            a,
            b,
            a_prime,
            b_prime,
        }
    }
}

/// The equally-spaced setup theta = (a,b) = (b,a') = (a',b'):
/// returns (0, theta, 2*theta, 3*theta), each canonicalized.
pub fn equal_spacing_setting(theta: AngleDeg) -> ChshSetting {
    let t = theta.degrees();
    // canonical inputs keep 3*t finite, so the unwraps cannot fire
    ChshSetting {
        a: AngleDeg(0.0),
        b: theta,
        a_prime: AngleDeg(normalize_degrees(2.0 * t)),
        b_prime: AngleDeg(normalize_degrees(3.0 * t)),
    }
}

/// The four signed per-pair quantities for pass/pass, block/block,
/// pass/block, block/pass. These are signed correlator contributions,
/// not probabilities: each lies in [-1, 1] and can be negative.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct JointQuantities {
    pub pp: f64,
    pub nn: f64,
    pub pn: f64,
    pub np: f64,
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn normalize_identity_and_wraps() {
        assert_eq!(normalize_angle(0.0).unwrap().degrees(), 0.0);
        assert_eq!(normalize_angle(371.25).unwrap().degrees(), 11.25);
        assert_eq!(normalize_angle(-22.5).unwrap().degrees(), 337.5);
        assert_eq!(normalize_angle(360.0).unwrap().degrees(), 0.0);
    }

    #[test]
    fn normalize_rejects_non_finite() {
        assert!(normalize_angle(f64::NAN).is_err());
        assert!(normalize_angle(f64::INFINITY).is_err());
        assert!(normalize_angle(f64::NEG_INFINITY).is_err());
    }

    #[test]
    fn grid_32_matches_expected_states() {
        let g = make_grid(32).unwrap();
        assert_eq!(g.n_states(), 32);
        assert_eq!(g.state(0).unwrap().degrees(), 0.0);
        assert_eq!(g.state(1).unwrap().degrees(), 11.25);
        assert_eq!(g.state(31).unwrap().degrees(), 348.75);
    }

    #[test]
    fn grid_edge_sizes() {
        let g1 = make_grid(1).unwrap();
        assert_eq!(g1.states().len(), 1);
        assert_eq!(g1.state(0).unwrap().degrees(), 0.0);
        assert_eq!(g1.weights(), &[1.0]);

        let g4 = make_grid(4).unwrap();
        let degs: Vec<f64> = g4.states().iter().map(|s| s.degrees()).collect();
        assert_eq!(degs, vec![0.0, 90.0, 180.0, 270.0]);

        assert!(make_grid(0).is_err());
    }

    #[test]
    fn grid_states_strictly_increasing() {
        for n in [1usize, 2, 3, 5, 32, 100] {
            let g = make_grid(n).unwrap();
            for w in g.states().windows(2) {
                assert!(w[0].degrees() < w[1].degrees());
            }
        }
    }

    #[test]
    fn grid_weights_sum_to_one_up_to_10k() {
        for n in 1..=10_000usize {
            let g = make_grid(n).unwrap();
            let sum: f64 = g.weights().iter().sum();
            assert!(
                (sum - 1.0).abs() < 1e-12,
                "weights of {n}-grid sum to {sum}"
            );
        }
    }

    #[test]
    fn equal_spacing_examples() {
        let s = equal_spacing_setting(AngleDeg::new(22.5).unwrap());
        assert_eq!(s.a.degrees(), 0.0);
        assert_eq!(s.b.degrees(), 22.5);
        assert_eq!(s.a_prime.degrees(), 45.0);
        assert_eq!(s.b_prime.degrees(), 67.5);

        let z = equal_spacing_setting(AngleDeg::new(0.0).unwrap());
        assert_eq!(
            (z.b.degrees(), z.a_prime.degrees(), z.b_prime.degrees()),
            (0.0, 0.0, 0.0)
        );

        let w = equal_spacing_setting(AngleDeg::new(112.5).unwrap());
        assert_eq!(w.b.degrees(), 112.5);
        assert_eq!(w.a_prime.degrees(), 225.0);
        assert_eq!(w.b_prime.degrees(), 337.5);
    }

    #[test]
    fn equal_spacing_hits_grid_indices() {
        // theta = 11.25*m lands on grid indices (0, m, 2m, 3m) mod 32
        let g = make_grid(32).unwrap();
        for m in 1..=10usize {
            let s = equal_spacing_setting(AngleDeg::new(11.25 * m as f64).unwrap());
            assert_eq!(s.a, g.state(0).unwrap());
            assert_eq!(s.b, g.state(m % 32).unwrap());
            assert_eq!(s.a_prime, g.state(2 * m % 32).unwrap());
            assert_eq!(s.b_prime, g.state(3 * m % 32).unwrap());
        }
    }

    proptest! {
        #[test]
        fn normalize_is_idempotent(raw in -1e6f64..1e6) {
            let once = normalize_angle(raw).unwrap();
            let twice = normalize_angle(once.degrees()).unwrap();
            prop_assert_eq!(once.degrees(), twice.degrees());
            prop_assert!(once.degrees() >= 0.0 && once.degrees() < 360.0);
        }

        #[test]
        fn diff_stays_canonical(x in -720.0f64..720.0, y in -720.0f64..720.0) {
            let a = normalize_angle(x).unwrap();
            let b = normalize_angle(y).unwrap();
            let d = a.diff(b).degrees();
            prop_assert!((0.0..360.0).contains(&d));
        }
    }
}
