//! Export plottable series as CSV on stdout: the population correlator for
//! both models (with the difference curve) and per-state pass/pass curves.
//!
//! Run with: cargo run --example series_export > series.csv

use chsh_lab::core::make_grid;
use chsh_lab::suite::{emit_series, SeriesParams};

fn main() -> chsh_lab::Result<()> {
    let grid = make_grid(32)?;

    println!("series,x_deg,y");
    for kind in ["fig2", "fig3"] {
        for series in emit_series(kind, &SeriesParams::default(), &grid)? {
            for (x, y) in &series.points {
                println!("{},{x},{y}", series.label);
            }
        }
    }
    Ok(())
}
