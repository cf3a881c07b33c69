//! Declarative sweeps: a JSON config drives the whole run, and the report is
//! written as one CSV per table.
//!
//! Run with `cargo run --example sweep_from_config`.

use std::path::Path;

use rankforge::report::{emit_report, run_sweep, ReportFormat, SweepConfig};

pub fn run() -> rankforge::Result<()> {
    let config = SweepConfig::from_path(
        Path::new(env!("CARGO_MANIFEST_DIR")).join("data/crypto_sweep.json"),
    )?;
    println!(
        "{} combinations from {}",
        config.combination_count(),
        config.matrix_path.display()
    );

    let report = run_sweep(&config)?;
    let out = std::env::temp_dir().join("rankforge-config-sweep");
    for path in emit_report(&report, ReportFormat::CsvDir, &out)? {
        println!("wrote {}", path.display());
    }
    for d in &report.distribution {
        println!("{:<5} median rank {}", d.alternative, d.summary.median);
    }
    Ok(())
}

fn main() -> rankforge::Result<()> {
    run()
}
