//! Two scalers × two aggregators: four pipelines from one spec.
//!
//! Run with `cargo run --example scaler_sweep`.

use rankforge::{
    Aggregator, CombinatorialSpec, DecisionMatrix, Objective, ScaleTarget::MatrixOnly, Transformer,
};

pub fn run() -> rankforge::Result<()> {
    let dm = DecisionMatrix::new(
        ["north", "south", "east", "west"]
            .map(String::from)
            .to_vec(),
        vec!["capacity".into(), "cost".into(), "risk".into()],
        vec![
            vec![120.0, 40.0, 0.2],
            vec![90.0, 25.0, 0.4],
            vec![150.0, 55.0, 0.1],
            vec![100.0, 30.0, 0.3],
        ],
        vec![Objective::Max, Objective::Min, Objective::Min],
        vec![0.5, 0.3, 0.2],
    )?;

    let spec = CombinatorialSpec::new(vec![
        Transformer::InvertMinimize.into(),
        vec![
            Transformer::SumScaler(MatrixOnly),
            Transformer::VectorScaler(MatrixOnly),
        ]
        .into(),
        vec![Aggregator::WeightedSum, Aggregator::Topsis].into(),
    ])?;
    println!("{} combinations:", spec.combination_count());
    for pipeline in spec.expand() {
        println!("  {}", pipeline.name());
    }

    let rankings = spec.evaluate_all(&dm)?;
    println!();
    for (name, result) in rankings.entries() {
        println!("{name:<40} untied ranks {:?}", result.untied_rank());
    }
    let corr = rankings.corr()?;
    let (i, j, lowest) = corr.min_off_diagonal().expect("four rankings");
    println!(
        "\nweakest agreement: {} vs {} (r = {lowest:.3})",
        corr.labels[i], corr.labels[j]
    );
    Ok(())
}

fn main() -> rankforge::Result<()> {
    run()
}
