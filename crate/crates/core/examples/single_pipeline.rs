//! A single sequential pipeline: orient criteria, filter, scale, aggregate.
//!
//! Run with `cargo run --example single_pipeline`.

use rankforge::{make_pipeline, Aggregator, DecisionMatrix, Objective, ScaleTarget, Transformer};

pub fn run() -> rankforge::Result<()> {
    let dm = DecisionMatrix::new(
        ["laptop-a", "laptop-b", "laptop-c", "laptop-d", "laptop-e"]
            .map(String::from)
            .to_vec(),
        vec!["battery".into(), "price".into(), "weight".into()],
        vec![
            vec![280.0, 1200.0, 1.9],
            vec![340.0, 1500.0, 1.4],
            vec![410.0, 1800.0, 1.6],
            vec![360.0, 1100.0, 2.2],
            vec![330.0, 1600.0, 1.5],
        ],
        vec![Objective::Max, Objective::Min, Objective::Min],
        vec![3.0, 5.0, 2.0],
    )?;

    let pipeline = make_pipeline(vec![
        Transformer::NegateMinimize.into(),
        Transformer::FilterGt(vec![("battery".into(), 300.0)]).into(),
        Transformer::FilterNonDominated.into(),
        Transformer::SumScaler(ScaleTarget::WeightsOnly).into(),
        Transformer::MinMaxScaler(ScaleTarget::MatrixOnly).into(),
        Aggregator::Topsis.into(),
    ])?;

    let result = pipeline.evaluate(&dm)?;
    println!("pipeline: {}", pipeline.name());
    println!("{:<10} {:>10} {:>5}", "option", "closeness", "rank");
    for ((alt, score), rank) in result
        .alternatives
        .iter()
        .zip(&result.scores)
        .zip(&result.ranks)
    {
        println!("{alt:<10} {score:>10.4} {rank:>5}");
    }
    let dropped: Vec<&String> = dm
        .alternatives()
        .iter()
        .filter(|a| !result.alternatives.contains(a))
        .collect();
    println!("filtered out: {dropped:?}");
    Ok(())
}

fn main() -> rankforge::Result<()> {
    run()
}
