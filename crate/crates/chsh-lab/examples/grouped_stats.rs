//! Grouped statistics over a small in-memory CSV, printed next to the
//! embedded completion-time reference rows.
//!
//! Run with: cargo run --example grouped_stats

use chsh_lab::stats::{group_summary, ingest_csv, reference_table, ColumnSchema};

const SAMPLE: &str = "\
age_group,sex,minutes
18-39,M,184.2
18-39,M,201.9
18-39,F,220.4
18-39,F,214.0
40-44,M,199.5
40-44,M,not-a-number
40-44,F,228.1
";

fn main() -> chsh_lab::Result<()> {
    let schema = ColumnSchema {
        group_by: vec!["age_group".into(), "sex".into()],
        value: "minutes".into(),
    };
    let ingest = ingest_csv(SAMPLE.as_bytes(), &schema, false)?;
    println!(
        "ingested {} records, rejected {}:",
        ingest.records.len(),
        ingest.diagnostics.len()
    );
    for d in &ingest.diagnostics {
        println!("  line {}: {}", d.line, d.message);
    }

    println!("\ngroup            n      mean   std_dev    median");
    for s in group_summary(&ingest.records)? {
        println!(
            "{:<12} {:>5}  {:>8.2}  {:>8.2}  {:>8.2}",
            s.keys.join("/"),
            s.n,
            s.mean,
            s.std_dev,
            s.median
        );
    }

    println!("\nembedded reference rows (minutes):");
    println!("age_group  sex      n      mean   std_dev    median");
    for r in reference_table().iter().take(4) {
        println!(
            "{:<9} {:<6} {:>5}  {:>8.2}  {:>8.2}  {:>8.2}",
            r.age_group,
            r.sex.label(),
            r.n,
            r.mean,
            r.std_dev,
            r.median
        );
    }
    println!("... {} rows total", reference_table().len());
    Ok(())
}
