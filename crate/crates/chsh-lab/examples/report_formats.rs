//! Build one report programmatically and render it in all three formats.
//!
//! Run with: cargo run --example report_formats

use chsh_lab::core::make_grid;
use chsh_lab::report::{Format, Report};
use chsh_lab::suite::{population_suite_table, run_population_suite};

fn main() -> chsh_lab::Result<()> {
    let grid = make_grid(32)?;
    let rows = run_population_suite(&grid)?;
    let mut report = Report::new(grid.n_states());
    report.push(population_suite_table(&rows));

    println!("=== markdown ===\n{}", report.render(Format::Markdown));
    println!("=== csv ===\n{}", report.render(Format::Csv));

    let json = report.render(Format::Json);
    println!("=== json (first lines) ===");
    for line in json.lines().take(12) {
        println!("{line}");
    }
    println!("...");

    assert_eq!(report.render(Format::Json), json, "rendering is deterministic");
    Ok(())
}
