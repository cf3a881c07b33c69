//! Scaling/aggregation sensitivity on nine cryptocurrencies: reciprocal
//! inversion of minimised criteria, three matrix scalers × two aggregators.
//! Prints the rank table and correlation matrix and writes a boxplot and a
//! heatmap SVG.
//!
//! Run with `cargo run --example crypto_case_study [OUT_DIR]`.

use std::path::{Path, PathBuf};

use rankforge::report::{load_matrix_csv, render_svg, sweep_matrix, ChartKind};
use rankforge::{
    default_jobs, Aggregator, CombinatorialSpec, Objective, ScaleTarget::MatrixOnly, Transformer,
};

fn abbreviate(name: &str) -> String {
    name.trim_start_matches("InvertMinimize+")
        .replace("SumScaler", "Sum")
        .replace("VectorScaler", "Vec")
        .replace("MinMaxScaler", "MM")
        .replace('+', " ")
}

pub fn run_into(out_dir: &Path) -> rankforge::Result<()> {
    let data = Path::new(env!("CARGO_MANIFEST_DIR")).join("data/van2021evaluation.csv");
    use Objective::{Max, Min};
    let dm = load_matrix_csv(data, &[Max, Min, Max, Min, Max, Max], None)?;

    let spec = CombinatorialSpec::new(vec![
        Transformer::InvertMinimize.into(),
        vec![
            Transformer::SumScaler(MatrixOnly),
            Transformer::VectorScaler(MatrixOnly),
            Transformer::MinMaxScaler(MatrixOnly),
        ]
        .into(),
        vec![Aggregator::WeightedSum, Aggregator::Topsis].into(),
    ])?;
    let report = sweep_matrix(&spec, &dm, default_jobs())?;

    let short: Vec<String> = report.pipelines.iter().map(|p| abbreviate(p)).collect();
    println!(
        "{:<6}{}",
        "",
        short.iter().map(|s| format!("{s:>11}")).collect::<String>()
    );
    for (alt, row) in report.alternatives.iter().zip(&report.ranks) {
        println!(
            "{alt:<6}{}",
            row.iter().map(|r| format!("{r:>11}")).collect::<String>()
        );
    }

    let corr = &report.metrics.as_ref().expect("six rankings").corr;
    println!("\ncorrelation");
    for (label, row) in short.iter().zip(&corr.cells) {
        println!(
            "{label:<11}{}",
            row.iter().map(|v| format!("{v:>8.3}")).collect::<String>()
        );
    }

    std::fs::create_dir_all(out_dir).map_err(|e| rankforge::Error::Io {
        context: format!("creating {}", out_dir.display()),
        source: e,
    })?;
    for (kind, file) in [
        (ChartKind::Boxplot, "boxplot.svg"),
        (ChartKind::Heatmap, "heatmap.svg"),
    ] {
        let path = out_dir.join(file);
        render_svg(&report, kind, &path)?;
        println!("wrote {}", path.display());
    }
    Ok(())
}

pub fn run() -> rankforge::Result<()> {
    run_into(&std::env::temp_dir().join("rankforge-crypto"))
}

fn main() -> rankforge::Result<()> {
    match std::env::args().nth(1) {
        Some(dir) => run_into(&PathBuf::from(dir)),
        None => run(),
    }
}
