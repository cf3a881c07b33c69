use std::path::PathBuf;

use rankforge::report::{
    emit_report, parse_matrix_csv, run_sweep, sweep_matrix, ReportFormat, SweepConfig, SweepReport,
};
use rankforge::{
    Aggregator, CombinatorialSpec, Error, Objective, ScaleTarget::MatrixOnly, Transformer,
};

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("data")
        .join(name)
}

fn small_matrix() -> rankforge::DecisionMatrix {
    parse_matrix_csv(
        "alternative,a,b\nx,1,4\ny,3,2\nz,2,5\n",
        &[Objective::Max, Objective::Max],
        None,
    )
    .unwrap()
}

fn crypto_report() -> SweepReport {
    run_sweep(&SweepConfig::from_path(data("crypto_sweep.json")).unwrap()).unwrap()
}

#[test]
fn single_pipeline_report_omits_metrics() {
    let spec = CombinatorialSpec::new(vec![
        Transformer::SumScaler(MatrixOnly).into(),
        Aggregator::WeightedSum.into(),
    ])
    .unwrap();
    let report = sweep_matrix(&spec, &small_matrix(), 1).unwrap();
    assert!(report.metrics.is_none());
    assert!(report.notice.as_deref().unwrap().contains("1 ranking"));

    let dir = tempfile::tempdir().unwrap();
    let files = emit_report(&report, ReportFormat::CsvDir, dir.path()).unwrap();
    let names: Vec<_> = files
        .iter()
        .map(|p| p.file_name().unwrap().to_str().unwrap().to_string())
        .collect();
    assert_eq!(names, ["ranks.csv", "scores.csv", "distribution.csv"]);

    let ranks = std::fs::read_to_string(dir.path().join("ranks.csv")).unwrap();
    let mut lines = ranks.lines();
    assert_eq!(lines.next().unwrap(), "alternative,SumScaler+WSM");
    assert!(lines.all(|l| l.split(',').count() == 2));
}

#[test]
fn crypto_config_runs_six_pipelines() {
    let report = crypto_report();
    assert_eq!(report.pipelines.len(), 6);
    assert_eq!(report.run.combinations, 6);
    assert_eq!(report.alternatives.len(), 9);
    assert_eq!(report.pipelines[0], "InvertMinimize+SumScaler+WSM");
    for row in &report.ranks {
        assert_eq!(row.len(), 6);
    }
    // untied ranks are a permutation of 1..=9 in every column
    for j in 0..6 {
        let mut col: Vec<usize> = report.ranks.iter().map(|r| r[j]).collect();
        col.sort_unstable();
        assert_eq!(col, (1..=9).collect::<Vec<_>>());
    }
}

#[test]
fn csv_tables_parse_back() {
    let report = crypto_report();
    let dir = tempfile::tempdir().unwrap();
    emit_report(&report, ReportFormat::CsvDir, dir.path()).unwrap();

    let mut corr = csv::Reader::from_path(dir.path().join("corr.csv")).unwrap();
    assert_eq!(corr.headers().unwrap().len(), 7);
    for (i, rec) in corr.records().enumerate() {
        let rec = rec.unwrap();
        let diag: f64 = rec[i + 1].parse().unwrap();
        assert_eq!(diag, 1.0);
    }

    let mut scores = csv::Reader::from_path(dir.path().join("scores.csv")).unwrap();
    for (i, rec) in scores.records().enumerate() {
        let rec = rec.unwrap();
        for j in 0..6 {
            let v: f64 = rec[j + 1].parse().unwrap();
            assert_eq!(v.to_bits(), report.scores[i][j].to_bits());
        }
    }
}

#[test]
fn json_round_trip_is_exact() {
    let report = crypto_report();
    let dir = tempfile::tempdir().unwrap();
    let files = emit_report(&report, ReportFormat::Json, dir.path()).unwrap();
    assert_eq!(files.len(), 1);
    let back = SweepReport::from_json(&std::fs::read_to_string(&files[0]).unwrap()).unwrap();
    assert_eq!(back, report);
}

#[test]
fn repeated_runs_are_identical() {
    let a = crypto_report().to_deterministic_json().unwrap();
    let b = crypto_report().to_deterministic_json().unwrap();
    assert_eq!(a, b);
}

#[test]
fn unknown_component_kind_is_rejected() {
    let text = r#"{"matrix_path": "m.csv", "objectives": ["max"], "steps": [{"kind": "ahp"}]}"#;
    let err = SweepConfig::from_json(text)
        .and_then(|c| c.to_spec())
        .unwrap_err();
    assert!(
        matches!(err.root(), Error::UnknownKind(k) if k == "ahp"),
        "{err}"
    );
}

#[test]
fn csv_errors_carry_row_and_column() {
    let err =
        parse_matrix_csv("alternative,a\nx,1\ny,oops\n", &[Objective::Max], None).unwrap_err();
    match err {
        Error::Csv { row, column, .. } => assert_eq!((row, column.as_str()), (2, "a")),
        other => panic!("unexpected {other:?}"),
    }
}
