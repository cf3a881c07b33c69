//! Declarative sweep configuration (JSON) and decision-matrix CSV ingestion.

use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

use crate::aggregate::Aggregator;
use crate::combinatorial::{CombinatorialSpec, Step};
use crate::error::{Error, Result};
use crate::matrix::{DecisionMatrix, Objective};
use crate::pipeline::Component;
use crate::transform::{ScaleTarget, Transformer};

pub const COMPONENT_KINDS: [&str; 9] = [
    "invert_minimize",
    "negate_minimize",
    "filter_gt",
    "filter_non_dominated",
    "sum_scaler",
    "vector_scaler",
    "minmax_scaler",
    "wsm",
    "topsis",
];

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComponentDescriptor {
    pub kind: String,
    #[serde(default, skip_serializing_if = "Map::is_empty")]
    pub params: Map<String, Value>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum StepDescriptor {
    One(ComponentDescriptor),
    Many(Vec<ComponentDescriptor>),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SweepConfig {
    pub matrix_path: PathBuf,
    pub objectives: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weights: Option<Vec<f64>>,
    pub steps: Vec<StepDescriptor>,
}

impl ComponentDescriptor {
    pub fn new(kind: impl Into<String>) -> Self {
        ComponentDescriptor {
            kind: kind.into(),
            params: Map::new(),
        }
    }

    pub fn with_param(mut self, key: impl Into<String>, value: Value) -> Self {
        self.params.insert(key.into(), value);
        self
    }

    pub fn to_component(&self, location: &str) -> Result<Component> {
        let no_params = |component: Component| match self.params.keys().next() {
            Some(key) => Err(Error::config(
                location,
                format!("'{}' takes no parameters (got '{key}')", self.kind),
            )),
            None => Ok(component),
        };
        match self.kind.as_str() {
            "invert_minimize" => no_params(Transformer::InvertMinimize.into()),
            "negate_minimize" => no_params(Transformer::NegateMinimize.into()),
            "filter_non_dominated" => no_params(Transformer::FilterNonDominated.into()),
            "wsm" => no_params(Aggregator::WeightedSum.into()),
            "topsis" => no_params(Aggregator::Topsis.into()),
            "filter_gt" => {
                let thresholds = self
                    .params
                    .iter()
                    .map(|(criterion, bound)| {
                        bound
                            .as_f64()
                            .map(|b| (criterion.clone(), b))
                            .ok_or_else(|| {
                                Error::config(
                                    format!("{location}.params.{criterion}"),
                                    format!("threshold must be a number, got {bound}"),
                                )
                            })
                    })
                    .collect::<Result<Vec<_>>>()?;
                Ok(Transformer::FilterGt(thresholds).into())
            }
            "sum_scaler" => Ok(Transformer::SumScaler(self.target(location)?).into()),
            "vector_scaler" => Ok(Transformer::VectorScaler(self.target(location)?).into()),
            "minmax_scaler" => Ok(Transformer::MinMaxScaler(self.target(location)?).into()),
            other => Err(Error::UnknownKind(other.to_string())),
        }
    }

    fn target(&self, location: &str) -> Result<ScaleTarget> {
        let mut target = ScaleTarget::MatrixOnly;
        for (key, value) in &self.params {
            if key != "target" {
                return Err(Error::config(
                    location,
                    format!("unknown parameter '{key}' for '{}'", self.kind),
                ));
            }
            target = value
                .as_str()
                .ok_or_else(|| {
                    Error::config(format!("{location}.params.target"), "expected a string")
                })?
                .parse()
                .map_err(|msg: String| Error::config(format!("{location}.params.target"), msg))?;
        }
        Ok(target)
    }
}

impl SweepConfig {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| {
            Error::config(
                format!("line {}, column {}", e.line(), e.column()),
                e.to_string(),
            )
        })
    }

    /// Reads a config file; a relative `matrix_path` is resolved against the file's directory.
    pub fn from_path(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::io(format!("reading config {}", path.display()), e))?;
        let mut config = Self::from_json(&text).map_err(|e| match e {
            Error::Config { location, message } => Error::Config {
                location: format!("{}: {location}", path.display()),
                message,
            },
            other => other,
        })?;
        if config.matrix_path.is_relative() {
            if let Some(dir) = path.parent() {
                config.matrix_path = dir.join(&config.matrix_path);
            }
        }
        Ok(config)
    }

    pub fn parsed_objectives(&self) -> Result<Vec<Objective>> {
        self.objectives
            .iter()
            .enumerate()
            .map(|(i, o)| {
                o.parse()
                    .map_err(|msg: String| Error::config(format!("objectives[{i}]"), msg))
            })
            .collect()
    }

    pub fn combination_count(&self) -> usize {
        self.steps
            .iter()
            .map(|s| match s {
                StepDescriptor::One(_) => 1,
                StepDescriptor::Many(alts) => alts.len(),
            })
            .product()
    }

    pub fn to_spec(&self) -> Result<CombinatorialSpec> {
        let steps = self
            .steps
            .iter()
            .enumerate()
            .map(|(i, step)| match step {
                StepDescriptor::One(d) => d.to_component(&format!("steps[{i}]")).map(Step::from),
                StepDescriptor::Many(alts) => alts
                    .iter()
                    .enumerate()
                    .map(|(k, d)| d.to_component(&format!("steps[{i}][{k}]")))
                    .collect::<Result<Vec<_>>>()
                    .map(Step::from),
            })
            .collect::<Result<Vec<_>>>()?;
        CombinatorialSpec::new(steps).map_err(|e| Error::config("steps", e.to_string()))
    }

    pub fn load_matrix(&self) -> Result<DecisionMatrix> {
        load_matrix_csv(
            &self.matrix_path,
            &self.parsed_objectives()?,
            self.weights.as_deref(),
        )
    }
}

/// Reads a decision matrix: header row of criterion names, first column of alternative names.
///
/// Rows in error messages are 1-based data rows (the header is not counted).
/// Missing `weights` default to 1.0 for every criterion.
pub fn load_matrix_csv(
    path: impl AsRef<Path>,
    objectives: &[Objective],
    weights: Option<&[f64]>,
) -> Result<DecisionMatrix> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::io(format!("reading matrix {}", path.display()), e))?;
    parse_matrix_csv(&text, objectives, weights)
}

pub fn parse_matrix_csv(
    text: &str,
    objectives: &[Objective],
    weights: Option<&[f64]>,
) -> Result<DecisionMatrix> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(true)
        .flexible(true)
        .trim(csv::Trim::All)
        .from_reader(text.as_bytes());

    let header = reader.headers()?.clone();
    let criteria: Vec<String> = header.iter().skip(1).map(str::to_string).collect();
    if objectives.len() != criteria.len() {
        return Err(Error::config(
            "objectives",
            format!(
                "{} objectives given but the CSV header has {} criteria",
                objectives.len(),
                criteria.len()
            ),
        ));
    }
    let weights = match weights {
        Some(w) if w.len() != criteria.len() => {
            return Err(Error::config(
                "weights",
                format!(
                    "{} weights given but the CSV header has {} criteria",
                    w.len(),
                    criteria.len()
                ),
            ))
        }
        Some(w) => w.to_vec(),
        None => vec![1.0; criteria.len()],
    };

    let mut alternatives = Vec::new();
    let mut values = Vec::new();
    for (index, record) in reader.records().enumerate() {
        let row = index + 1;
        let record = record?;
        if record.len() != header.len() {
            return Err(Error::Csv {
                row,
                column: String::new(),
                message: format!("expected {} fields, found {}", header.len(), record.len()),
            });
        }
        alternatives.push(record[0].to_string());
        let cells = record
            .iter()
            .skip(1)
            .zip(&criteria)
            .map(|(cell, column)| {
                cell.parse::<f64>().map_err(|_| Error::Csv {
                    row,
                    column: column.clone(),
                    message: format!("non-numeric cell '{cell}'"),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        values.push(cells);
    }
    DecisionMatrix::new(alternatives, criteria, values, objectives.to_vec(), weights)
}
