//! Regenerate the five per-state matrices (pp, nn, pn, np, E) for one
//! polarization state and print the upper-left corner of each.
//!
//! Run with: cargo run --example appendix_tables

use chsh_lab::core::make_grid;
use chsh_lab::suite::regenerate_appendix_tables;

fn print_corner(name: &str, matrix: &[Vec<f64>], grid: &chsh_lab::PolarizationGrid) {
    let k = 9.min(matrix.len());
    println!("{name} (rows a1..a{k}, columns b1..b{k}):");
    print!("{:>8}", "");
    for j in 0..k {
        print!("{:>8.2}", grid.states()[j].degrees());
    }
    println!();
    for (i, row) in matrix.iter().take(k).enumerate() {
        print!("{:>8.2}", grid.states()[i].degrees());
        for value in row.iter().take(k) {
            print!("{value:>8.3}");
        }
        println!();
    }
    println!();
}

fn main() -> chsh_lab::Result<()> {
    let grid = make_grid(32)?;
    let tables = regenerate_appendix_tables(1, &grid)?;
    println!(
        "Per-state matrices at lambda_{} = {} degrees\n",
        tables.lambda_index + 1,
        tables.lambda.degrees()
    );
    print_corner("pass/pass", &tables.pp, &grid);
    print_corner("block/block", &tables.nn, &grid);
    print_corner("pass/block", &tables.pn, &grid);
    print_corner("block/pass", &tables.np, &grid);
    print_corner("expected value", &tables.e, &grid);
    Ok(())
}
