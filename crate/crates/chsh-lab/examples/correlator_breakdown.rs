//! Correlator-component breakdown at theta = 22.5: the ensemble model
//! produces all four E components, the quantum description only S, and the
//! two embedded experiments report measured components.
//!
//! Run with: cargo run --example correlator_breakdown

use chsh_lab::core::{equal_spacing_setting, make_grid, AngleDeg};
use chsh_lab::suite::correlator_breakdown;

fn fmt(v: Option<f64>) -> String {
    v.map(|x| format!("{x:>7.3}")).unwrap_or_else(|| "      —".into())
}

fn main() -> chsh_lab::Result<()> {
    let grid = make_grid(32)?;
    let setting = equal_spacing_setting(AngleDeg::new(22.5)?);
    let b = correlator_breakdown(&setting, &grid)?;

    println!("{:<26} {:>7} {:>7} {:>7} {:>7} {:>7}", "", "E(a,b)", "E(a,b')", "E(a',b)", "E(a',b')", "S");
    println!(
        "{:<26} {:>7.3} {:>7.3} {:>7.3} {:>7.3} {:>7.3}",
        "ensemble model",
        b.hv_components[0],
        b.hv_components[1],
        b.hv_components[2],
        b.hv_components[3],
        b.hv_s
    );
    println!(
        "{:<26} {} {} {} {} {:>7.3}",
        "quantum (unified system)",
        fmt(None),
        fmt(None),
        fmt(None),
        fmt(None),
        b.qm_s
    );
    for exp in &b.references {
        println!(
            "{:<26} {} {} {} {} {:>7.3}",
            exp.name,
            fmt(exp.e_ab),
            fmt(exp.e_abp),
            fmt(exp.e_apb),
            fmt(exp.e_apbp),
            exp.s
        );
    }
    Ok(())
}
