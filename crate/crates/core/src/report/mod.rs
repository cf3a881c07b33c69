//! Sweep orchestration and report output (JSON, CSV tables, SVG charts).

mod config;
mod svg;

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::combinatorial::{default_jobs, CombinatorialSpec};
use crate::compare::{Metric, MetricMatrix, RankDistribution, RanksComparator};
use crate::error::{Error, Result};
use crate::matrix::DecisionMatrix;

pub use config::{
    load_matrix_csv, parse_matrix_csv, ComponentDescriptor, StepDescriptor, SweepConfig,
    COMPONENT_KINDS,
};
pub use svg::{render_boxplot, render_heatmap, render_svg, ChartKind};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Metrics {
    pub corr: MetricMatrix,
    pub cov: MetricMatrix,
    pub r2: MetricMatrix,
    pub distance: MetricMatrix,
}

impl Metrics {
    pub fn all(&self) -> [&MetricMatrix; 4] {
        [&self.corr, &self.cov, &self.r2, &self.distance]
    }
}

/// Environment of one run. Not part of the deterministic payload.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunMetadata {
    pub combinations: usize,
    pub jobs: usize,
    pub wall_time_ms: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepReport {
    pub pipelines: Vec<String>,
    pub alternatives: Vec<String>,
    /// Untied ranks, alternatives × pipelines.
    pub ranks: Vec<Vec<usize>>,
    /// Raw aggregator scores, alternatives × pipelines.
    pub scores: Vec<Vec<f64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub metrics: Option<Metrics>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub notice: Option<String>,
    pub distribution: RankDistribution,
    pub run: RunMetadata,
}

impl SweepReport {
    /// Assembles a report from an evaluated comparator.
    pub fn from_comparator(rc: &RanksComparator, run: RunMetadata) -> Result<Self> {
        let (metrics, notice) = if rc.len() >= 2 && rc.alternatives().len() >= 2 {
            let metrics = Metrics {
                corr: rc.corr()?,
                cov: rc.cov()?,
                r2: rc.r2_score()?,
                distance: rc.distance()?,
            };
            (Some(metrics), None)
        } else {
            let notice = format!(
                "metric matrices omitted: {} ranking(s) over {} alternative(s); need at least 2 of each",
                rc.len(),
                rc.alternatives().len()
            );
            (None, Some(notice))
        };
        Ok(SweepReport {
            pipelines: rc.names(),
            alternatives: rc.alternatives().to_vec(),
            ranks: rc.rank_table(),
            scores: rc.score_table(),
            metrics,
            notice,
            distribution: rc.distribution(),
            run,
        })
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    /// JSON with run metadata (wall time, worker count) blanked, for reproducibility checks.
    pub fn to_deterministic_json(&self) -> Result<String> {
        let mut copy = self.clone();
        copy.run.wall_time_ms = 0.0;
        copy.run.jobs = 0;
        copy.to_json()
    }

    pub fn metric(&self, metric: Metric) -> Option<&MetricMatrix> {
        self.metrics.as_ref().map(|m| match metric {
            Metric::Correlation => &m.corr,
            Metric::Covariance => &m.cov,
            Metric::R2 => &m.r2,
            Metric::Distance => &m.distance,
        })
    }
}

/// Expands `spec`, evaluates it over `dm` on `jobs` workers and builds a report.
pub fn sweep_matrix(
    spec: &CombinatorialSpec,
    dm: &DecisionMatrix,
    jobs: usize,
) -> Result<SweepReport> {
    let start = Instant::now();
    let rc = spec.evaluate_all_with_jobs(dm, jobs)?;
    let run = RunMetadata {
        combinations: spec.combination_count(),
        jobs: jobs.max(1),
        wall_time_ms: start.elapsed().as_secs_f64() * 1e3,
    };
    SweepReport::from_comparator(&rc, run)
}

pub fn run_sweep(config: &SweepConfig) -> Result<SweepReport> {
    run_sweep_with_jobs(config, default_jobs())
}

pub fn run_sweep_with_jobs(config: &SweepConfig, jobs: usize) -> Result<SweepReport> {
    let spec = config.to_spec()?;
    let dm = config.load_matrix()?;
    sweep_matrix(&spec, &dm, jobs)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Json,
    CsvDir,
}

/// Writes the report under `dir`: `report.json`, or one CSV per table.
pub fn emit_report(
    report: &SweepReport,
    format: ReportFormat,
    dir: impl AsRef<Path>,
) -> Result<Vec<PathBuf>> {
    let dir = dir.as_ref();
    std::fs::create_dir_all(dir)
        .map_err(|e| Error::io(format!("creating {}", dir.display()), e))?;
    let files: Vec<(&str, String)> = match format {
        ReportFormat::Json => vec![("report.json", report.to_json()?)],
        ReportFormat::CsvDir => csv_tables(report),
    };
    files
        .into_iter()
        .map(|(name, body)| {
            let path = dir.join(name);
            std::fs::write(&path, body)
                .map_err(|e| Error::io(format!("writing {}", path.display()), e))?;
            Ok(path)
        })
        .collect()
}

/// File name and contents of every CSV table in the report.
pub fn csv_tables(report: &SweepReport) -> Vec<(&'static str, String)> {
    let mut tables = vec![
        (
            "ranks.csv",
            labelled_table(
                "alternative",
                &report.pipelines,
                &report.alternatives,
                &report.ranks,
                |r| r.to_string(),
            ),
        ),
        (
            "scores.csv",
            labelled_table(
                "alternative",
                &report.pipelines,
                &report.alternatives,
                &report.scores,
                |s| format_g17(*s),
            ),
        ),
    ];
    if let Some(metrics) = &report.metrics {
        for m in metrics.all() {
            let name = match m.metric {
                Metric::Correlation => "corr.csv",
                Metric::Covariance => "cov.csv",
                Metric::R2 => "r2.csv",
                Metric::Distance => "distance.csv",
            };
            tables.push((
                name,
                labelled_table("method", &m.labels, &m.labels, &m.cells, |v| format_g17(*v)),
            ));
        }
    }
    let mut dist = String::from("alternative,min,q1,median,q3,max\n");
    for d in &report.distribution {
        let s = d.summary;
        let cells = [s.min, s.q1, s.median, s.q3, s.max]
            .map(format_g17)
            .join(",");
        let _ = writeln!(dist, "{},{cells}", csv_field(&d.alternative));
    }
    tables.push(("distribution.csv", dist));
    tables
}

fn labelled_table<T>(
    corner: &str,
    columns: &[String],
    rows: &[String],
    cells: &[Vec<T>],
    fmt: impl Fn(&T) -> String,
) -> String {
    let mut out = String::new();
    let header: Vec<String> = std::iter::once(corner.to_string())
        .chain(columns.iter().map(|c| csv_field(c)))
        .collect();
    let _ = writeln!(out, "{}", header.join(","));
    for (label, row) in rows.iter().zip(cells) {
        let body: Vec<String> = row.iter().map(&fmt).collect();
        let _ = writeln!(out, "{},{}", csv_field(label), body.join(","));
    }
    out
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n', '\r']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// Formats with 17 significant digits (`%.17g`), keeping a `.0` on integral values.
pub fn format_g17(x: f64) -> String {
    if !x.is_finite() {
        return x.to_string();
    }
    if x == 0.0 {
        return if x.is_sign_negative() {
            "-0.0".into()
        } else {
            "0.0".into()
        };
    }
    let sci = format!("{x:.16e}");
    let (mantissa, exp) = sci.split_once('e').expect("exponent in {:e} output");
    let exp: i32 = exp.parse().expect("integer exponent");
    if !(-5..17).contains(&exp) {
        let mantissa = trim_fraction(mantissa);
        return format!("{mantissa}e{exp}");
    }
    let decimals = (16 - exp).max(0) as usize;
    let fixed = format!("{x:.decimals$}");
    let trimmed = trim_fraction(&fixed);
    if trimmed.contains('.') {
        trimmed
    } else {
        format!("{trimmed}.0")
    }
}

fn trim_fraction(s: &str) -> String {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s.to_string()
    }
}
