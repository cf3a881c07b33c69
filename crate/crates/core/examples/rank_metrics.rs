//! Comparing rankings directly: correlation, covariance, R², Hamming distance
//! and per-alternative rank distributions.
//!
//! Run with `cargo run --example rank_metrics`.

use rankforge::{MetricMatrix, RankMode, RankResult, RanksComparator};

fn print_matrix(title: &str, m: &MetricMatrix) {
    println!("{title}");
    for (label, row) in m.labels.iter().zip(&m.cells) {
        let cells: Vec<String> = row.iter().map(|v| format!("{v:>7.3}")).collect();
        println!("  {label:<8}{}", cells.join(""));
    }
}

pub fn run() -> rankforge::Result<()> {
    let alternatives: Vec<String> = ["A", "B", "C", "D", "E"].map(String::from).to_vec();
    let judge = |name: &str, scores: &[f64]| {
        RankResult::from_scores(name, alternatives.clone(), scores.to_vec())
    };
    let rc = RanksComparator::from_results(vec![
        judge("panel-1", &[0.9, 0.7, 0.4, 0.4, 0.1])?,
        judge("panel-2", &[0.8, 0.9, 0.3, 0.5, 0.2])?,
        judge("panel-3", &[0.2, 0.4, 0.6, 0.8, 0.9])?,
    ])?;

    print_matrix("correlation (untied ranks)", &rc.corr()?);
    print_matrix("covariance", &rc.cov()?);
    print_matrix("r2 (row = truth)", &rc.r2_score()?);
    print_matrix("hamming distance", &rc.distance()?);
    print_matrix(
        "hamming distance, tied ranks",
        &rc.distance_with(RankMode::Tied)?,
    );

    println!("rank distribution");
    for d in rc.distribution() {
        let s = d.summary;
        println!(
            "  {}: min {} q1 {} median {} q3 {} max {}",
            d.alternative, s.min, s.q1, s.median, s.q3, s.max
        );
    }
    Ok(())
}

fn main() -> rankforge::Result<()> {
    run()
}
