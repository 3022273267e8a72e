//! Ensemble-model vs quantum CHSH at the three tabulated setups, with the
//! Aspect et al. experimental value attached where it applies.
//!
//! Run with: cargo run --example compare_models

use chsh_lab::core::{make_grid, AngleDeg};
use chsh_lab::suite::compare_models;

fn main() -> chsh_lab::Result<()> {
    let grid = make_grid(32)?;
    println!("theta     ensemble S   quantum S   flagged   experiment");
    for theta in [11.25, 22.5, 33.75] {
        let row = compare_models(AngleDeg::new(theta)?, &grid)?;
        let experiment = row
            .references
            .first()
            .map(|e| {
                format!(
                    "{} +- {} ({})",
                    e.s,
                    e.s_uncertainty.unwrap_or(0.0),
                    e.citation
                )
            })
            .unwrap_or_default();
        println!(
            "{theta:>6}   {:>10.4}   {:>9.4}   {:>7}   {experiment}",
            row.hv_s,
            row.qm_s,
            if row.hv_violates { "yes" } else { "no" },
        );
    }
    println!();
    println!("On a uniform grid the two models agree to machine precision,");
    println!("so one flagged column flags both.");
    Ok(())
}
