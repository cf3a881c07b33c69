//! Every transformer applied to the same small matrix.
//!
//! Run with `cargo run --example transforms_tour`.

use rankforge::{DecisionMatrix, Objective, ScaleTarget, Transformer};

fn show(label: &str, dm: &DecisionMatrix) {
    println!(
        "{label}  objectives {:?}  weights {:?}",
        dm.objectives(),
        dm.weights()
    );
    for (name, row) in dm.alternatives().iter().zip(dm.rows()) {
        let cells: Vec<String> = row.iter().map(|v| format!("{v:>9.4}")).collect();
        println!("  {name:<4}{}", cells.join(""));
    }
}

pub fn run() -> rankforge::Result<()> {
    let dm = DecisionMatrix::new(
        ["p", "q", "r", "s"].map(String::from).to_vec(),
        vec!["yield".into(), "cost".into()],
        vec![
            vec![250.0, 4.0],
            vec![320.0, 5.0],
            vec![410.0, 8.0],
            vec![380.0, 2.0],
        ],
        vec![Objective::Max, Objective::Min],
        vec![2.0, 3.0],
    )?;
    show("input", &dm);

    let steps = [
        Transformer::InvertMinimize,
        Transformer::NegateMinimize,
        Transformer::FilterGt(vec![("yield".into(), 300.0)]),
        Transformer::FilterNonDominated,
        Transformer::SumScaler(ScaleTarget::Both),
        Transformer::VectorScaler(ScaleTarget::MatrixOnly),
        Transformer::MinMaxScaler(ScaleTarget::MatrixOnly),
    ];
    for t in &steps {
        show(&t.name(), &t.apply(&dm)?);
    }

    match Transformer::FilterGt(vec![("yield".into(), 1000.0)]).apply(&dm) {
        Err(e) => println!("FilterGT(yield > 1000): {e}"),
        Ok(_) => unreachable!("no alternative clears 1000"),
    }
    Ok(())
}

fn main() -> rankforge::Result<()> {
    run()
}
