//! Monte-Carlo convergence of the population correlator: uniform draws of
//! the polarization state converge to cos(2(a-b)) as the grid mean does.
//!
//! Run with: cargo run --example monte_carlo

use chsh_lab::core::AngleDeg;
use chsh_lab::hv::{mc_expected_value, RNG_ALGORITHM};

fn main() -> chsh_lab::Result<()> {
    let a = AngleDeg::new(0.0)?;
    let b = AngleDeg::new(22.5)?;
    let exact = 2.0 * (a.degrees() - b.degrees()).to_radians().cos().powi(2) - 1.0;

    println!("E(0, 22.5) exact = {exact:.6}   (rng: {RNG_ALGORITHM}, seed 42)");
    println!("{:>10}  {:>12}  {:>12}  {:>10}", "samples", "estimate", "std_error", "sigmas");
    for samples in [100u64, 1_000, 10_000, 100_000, 1_000_000] {
        let r = mc_expected_value(a, b, samples, 42)?;
        let sigmas = (r.estimate - exact).abs() / r.std_error;
        println!(
            "{samples:>10}  {:>12.6}  {:>12.6}  {sigmas:>10.2}",
            r.estimate, r.std_error
        );
    }

    // same seed, same answer
    let first = mc_expected_value(a, b, 50_000, 7)?;
    let second = mc_expected_value(a, b, 50_000, 7)?;
    assert_eq!(first.estimate, second.estimate);
    println!("\nrepeat with seed 7: bit-identical estimates ({:.10})", first.estimate);
    Ok(())
}
