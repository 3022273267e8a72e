//! Quantum closed forms for the unified two-photon system.
//!
//! Only the pass/pass and block/block quantities have closed forms here:
//! pp = cos^2(a-b)/2 and nn = sin^2(a-b)/2 with the undoubled relative
//! angle. The correlator E = cos(2(a-b)) = 2*(pp - nn) is the standard
//! two-channel completion normalized so E(a, a) = 1.

use serde::Serialize;

use crate::core::{AngleDeg, ChshSetting};

/// Joint pass/pass and block/block quantities; pp + nn = 1/2.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct QmJoint {
    pub pp: f64,
    pub nn: f64,
}

pub fn qm_joint(a: AngleDeg, b: AngleDeg) -> QmJoint {
    let (sin, cos) = (a.degrees() - b.degrees()).to_radians().sin_cos();
    QmJoint {
        pp: 0.5 * cos * cos,
        nn: 0.5 * sin * sin,
    }
}

/// Two-channel correlator cos(2(a-b)) = 2*(pp - nn), so E(a, a) = 1.
pub fn qm_expected_value(a: AngleDeg, b: AngleDeg) -> f64 {
    (2.0 * (a.degrees() - b.degrees())).to_radians().cos()
}

/// S = E(a,b) - E(a,b') + E(a',b) + E(a',b').
pub fn qm_chsh(setting: &ChshSetting) -> f64 {
    qm_expected_value(setting.a, setting.b) - qm_expected_value(setting.a, setting.b_prime)
        + qm_expected_value(setting.a_prime, setting.b)
        + qm_expected_value(setting.a_prime, setting.b_prime)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::core::{equal_spacing_setting, normalize_angle};
    use proptest::prelude::*;

    fn deg(x: f64) -> AngleDeg {
        normalize_angle(x).unwrap()
    }

    #[test]
    fn joint_examples() {
        let j = qm_joint(deg(0.0), deg(0.0));
        assert_eq!(j.pp, 0.5);
        assert_eq!(j.nn, 0.0);

        let j = qm_joint(deg(0.0), deg(90.0));
        assert!(j.pp.abs() < 1e-30);
        assert!((j.nn - 0.5).abs() < 1e-12);

        let j = qm_joint(deg(0.0), deg(22.5));
        assert!((j.pp - 0.42677669529663687).abs() < 1e-12);
    }

    #[test]
    fn expected_value_examples() {
        assert_eq!(qm_expected_value(deg(0.0), deg(0.0)), 1.0);
        assert!((qm_expected_value(deg(0.0), deg(22.5)) - std::f64::consts::FRAC_1_SQRT_2).abs() < 1e-12);
        assert!(qm_expected_value(deg(0.0), deg(45.0)).abs() < 1e-12);
    }

    #[test]
    fn chsh_at_published_setups() {
        // printed to three decimals: 2.389, 2.828, 2.072
        let cases = [
            (11.25, 2.3889551651687704),
            (22.5, 2.82842712474619),
            (33.75, 2.0719298296065563),
        ];
        for (theta, expected) in cases {
            let s = qm_chsh(&equal_spacing_setting(deg(theta)));
            assert!((s - expected).abs() < 1e-12, "theta={theta}: {s}");
        }
        // Tsirelson point
        let s = qm_chsh(&equal_spacing_setting(deg(22.5)));
        assert!((s - 2.0 * std::f64::consts::SQRT_2).abs() < 1e-9);
    }

    #[test]
    fn chsh_continuous_in_equal_spacing_theta() {
        // adjacent samples 0.01 degrees apart never jump by more than the
        // derivative bound |dS/dtheta| <= 12*pi/180 per degree allows
        let step = 0.01;
        let max_jump = 12.0_f64.to_radians() * step * 1.5;
        let mut prev = qm_chsh(&equal_spacing_setting(deg(0.0)));
        let mut t = step;
        while t <= 360.0 {
            let s = qm_chsh(&equal_spacing_setting(deg(t)));
            assert!((s - prev).abs() < max_jump, "jump at theta={t}");
            prev = s;
            t += step;
        }
    }

    #[test]
    fn chsh_bounded_by_tsirelson_over_random_settings() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(9);
        let bound = 2.0 * std::f64::consts::SQRT_2 + 1e-9;
        for _ in 0..100_000 {
            let setting = ChshSetting::new(
                deg(rng.gen::<f64>() * 360.0),
                deg(rng.gen::<f64>() * 360.0),
                deg(rng.gen::<f64>() * 360.0),
                deg(rng.gen::<f64>() * 360.0),
            );
            assert!(qm_chsh(&setting).abs() <= bound);
        }
    }

    proptest! {
        #[test]
        fn joint_normalization(a in 0.0f64..360.0, b in 0.0f64..360.0) {
            let j = qm_joint(deg(a), deg(b));
            prop_assert!((j.pp + j.nn - 0.5).abs() < 1e-12);
            prop_assert!((0.0..=0.5 + 1e-15).contains(&j.pp));
            prop_assert!((0.0..=0.5 + 1e-15).contains(&j.nn));
        }

        #[test]
        fn expected_value_symmetry(a in 0.0f64..360.0, b in 0.0f64..360.0, k in 0i32..4) {
            let e = qm_expected_value(deg(a), deg(b));
            prop_assert!((e - qm_expected_value(deg(b), deg(a))).abs() < 1e-12);
            // depends only on (a - b) mod 180
            let shifted = deg(a + 180.0 * k as f64);
            prop_assert!((e - qm_expected_value(shifted, deg(b))).abs() < 1e-12);
            // consistency with the joint quantities
            let j = qm_joint(deg(a), deg(b));
            prop_assert!((e - 2.0 * (j.pp - j.nn)).abs() < 1e-12);
        }
    }
}
