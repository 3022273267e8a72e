//! The ten-setup population CHSH suite with deltas against the published
//! values.
//!
//! Run with: cargo run --example population_suite

use chsh_lab::core::make_grid;
use chsh_lab::suite::run_population_suite;

fn main() -> chsh_lab::Result<()> {
    let grid = make_grid(32)?;
    println!("test   theta     computed   published      delta   |S|>2");
    for row in run_population_suite(&grid)? {
        println!(
            "{:>4}  {:>6}   {:>9.4}   {:>9.4}   {:>+8.4}   {}",
            row.test_index,
            row.theta.degrees(),
            row.s_value,
            row.published_s,
            row.delta,
            if row.s_value.abs() > 2.0 + 1e-9 { "yes" } else { "no" },
        );
    }
    Ok(())
}
