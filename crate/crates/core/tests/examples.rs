// Each example exposes `run()`; these tests keep them compiling and working.

#[allow(dead_code)]
#[path = "../examples/crypto_case_study.rs"]
mod crypto_case_study;
#[allow(dead_code)]
#[path = "../examples/rank_metrics.rs"]
mod rank_metrics;
#[allow(dead_code)]
#[path = "../examples/scaler_sweep.rs"]
mod scaler_sweep;
#[allow(dead_code)]
#[path = "../examples/single_pipeline.rs"]
mod single_pipeline;
#[allow(dead_code)]
#[path = "../examples/sweep_from_config.rs"]
mod sweep_from_config;
#[allow(dead_code)]
#[path = "../examples/transforms_tour.rs"]
mod transforms_tour;

#[test]
fn single_pipeline_runs() {
    single_pipeline::run().unwrap();
}

#[test]
fn scaler_sweep_runs() {
    scaler_sweep::run().unwrap();
}

#[test]
fn rank_metrics_runs() {
    rank_metrics::run().unwrap();
}

#[test]
fn transforms_tour_runs() {
    transforms_tour::run().unwrap();
}

#[test]
fn crypto_case_study_writes_charts() {
    let dir = tempfile::tempdir().unwrap();
    crypto_case_study::run_into(dir.path()).unwrap();
    assert!(dir.path().join("boxplot.svg").is_file());
    assert!(dir.path().join("heatmap.svg").is_file());
}

#[test]
fn sweep_from_config_runs() {
    sweep_from_config::run().unwrap();
}
