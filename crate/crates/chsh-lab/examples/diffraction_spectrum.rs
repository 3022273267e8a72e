//! Diffraction maxima for the tabulated setup: 0.01 mm slit spacing
//! (1000 lines/cm), 2 m screen distance, three visible wavelengths.
//!
//! Run with: cargo run --example diffraction_spectrum

use chsh_lab::diffraction::{spectrum, DiffractionSetup};

fn main() -> chsh_lab::Result<()> {
    let setup = DiffractionSetup::new(
        1.0e-5,
        2.0,
        vec![
            ("blue".into(), 485.0e-9),
            ("green".into(), 565.0e-9),
            ("red".into(), 750.0e-9),
        ],
        2,
    )?;

    println!("J   lambda (nm)   label    theta (deg)    y (cm)");
    for row in spectrum(&setup)? {
        println!(
            "{}   {:>11.0}   {:<6}   {:>11.2}   {:>7.2}",
            row.order,
            row.wavelength_m * 1e9,
            row.label,
            row.theta_deg,
            row.y_cm
        );
    }

    // a 1-micron grating cuts off the second red order entirely
    let tight = DiffractionSetup::new(1.0e-6, 2.0, vec![("red".into(), 750.0e-9)], 2)?;
    let rows = spectrum(&tight)?;
    println!("\nd = 1 um keeps only {} propagating red order(s)", rows.len());
    Ok(())
}
