//! Pre-aggregation components: objective inverters, filters and scalers.
//!
//! Every transformer is a pure `DecisionMatrix -> DecisionMatrix` map. Only the
//! two inverters change objectives; only the filters change the set of rows.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::{DecisionMatrix, Objective};

/// What a scaler acts on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ScaleTarget {
    #[serde(rename = "matrix")]
    MatrixOnly,
    #[serde(rename = "weights")]
    WeightsOnly,
    Both,
}

impl ScaleTarget {
    fn matrix(self) -> bool {
        matches!(self, ScaleTarget::MatrixOnly | ScaleTarget::Both)
    }

    fn weights(self) -> bool {
        matches!(self, ScaleTarget::WeightsOnly | ScaleTarget::Both)
    }
}

impl std::str::FromStr for ScaleTarget {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "matrix" => Ok(ScaleTarget::MatrixOnly),
            "weights" => Ok(ScaleTarget::WeightsOnly),
            "both" => Ok(ScaleTarget::Both),
            other => Err(format!(
                "unknown scale target '{other}' (expected 'matrix', 'weights' or 'both')"
            )),
        }
    }
}

/// A pre-aggregation pipeline step.
#[derive(Debug, Clone, PartialEq)]
pub enum Transformer {
    InvertMinimize,
    NegateMinimize,
    /// Satisficing filter: criterion name -> exclusive lower bound.
    FilterGt(Vec<(String, f64)>),
    FilterNonDominated,
    SumScaler(ScaleTarget),
    VectorScaler(ScaleTarget),
    MinMaxScaler(ScaleTarget),
    /// Several transformers applied left to right as one step.
    Chain(Vec<Transformer>),
}

impl Transformer {
    pub fn name(&self) -> String {
        match self {
            Transformer::InvertMinimize => "InvertMinimize".into(),
            Transformer::NegateMinimize => "NegateMinimize".into(),
            Transformer::FilterGt(_) => "FilterGT".into(),
            Transformer::FilterNonDominated => "FilterNonDominated".into(),
            Transformer::SumScaler(_) => "SumScaler".into(),
            Transformer::VectorScaler(_) => "VectorScaler".into(),
            Transformer::MinMaxScaler(_) => "MinMaxScaler".into(),
            Transformer::Chain(parts) => parts
                .iter()
                .map(Transformer::name)
                .collect::<Vec<_>>()
                .join(">"),
        }
    }

    pub fn apply(&self, dm: &DecisionMatrix) -> Result<DecisionMatrix> {
        match self {
            Transformer::InvertMinimize => invert_minimize(dm),
            Transformer::NegateMinimize => Ok(negate_minimize(dm)),
            Transformer::FilterGt(thresholds) => filter_gt(dm, thresholds),
            Transformer::FilterNonDominated => Ok(filter_non_dominated(dm)),
            Transformer::SumScaler(target) => sum_scaler(dm, *target),
            Transformer::VectorScaler(target) => vector_scaler(dm, *target),
            Transformer::MinMaxScaler(target) => minmax_scaler(dm, *target),
            Transformer::Chain(parts) => {
                let mut current = dm.clone();
                for part in parts {
                    current = part.apply(&current)?;
                }
                Ok(current)
            }
        }
    }
}

impl fmt::Display for Transformer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

/// Replaces every minimised column by its reciprocal and flips it to `Max`.
pub fn invert_minimize(dm: &DecisionMatrix) -> Result<DecisionMatrix> {
    let n = dm.n_criteria();
    let mut values = dm.values().to_vec();
    for (j, objective) in dm.objectives().iter().enumerate() {
        if *objective != Objective::Min {
            continue;
        }
        for i in 0..dm.n_alternatives() {
            let v = values[i * n + j];
            if v <= 0.0 {
                return Err(Error::NonPositive {
                    criterion: dm.criteria()[j].clone(),
                    alternative: dm.alternatives()[i].clone(),
                    value: v,
                });
            }
            let inv = 1.0 / v;
            // 1/x overflows for subnormal x
            if !inv.is_finite() {
                return Err(Error::NonFinite {
                    field: "inverted values",
                    row: i,
                    column: j,
                    value: inv,
                });
            }
            values[i * n + j] = inv;
        }
    }
    Ok(dm.with_columns(values, vec![Objective::Max; n]))
}

/// Replaces every minimised column by its negation and flips it to `Max`.
pub fn negate_minimize(dm: &DecisionMatrix) -> DecisionMatrix {
    let n = dm.n_criteria();
    let mut values = dm.values().to_vec();
    for (j, objective) in dm.objectives().iter().enumerate() {
        if *objective == Objective::Min {
            for i in 0..dm.n_alternatives() {
                values[i * n + j] = -values[i * n + j];
            }
        }
    }
    dm.with_columns(values, vec![Objective::Max; n])
}

/// Keeps alternatives whose raw value is strictly greater than every listed threshold.
pub fn filter_gt(dm: &DecisionMatrix, thresholds: &[(String, f64)]) -> Result<DecisionMatrix> {
    let columns = thresholds
        .iter()
        .map(|(name, bound)| {
            dm.criterion_index(name)
                .map(|j| (j, *bound))
                .ok_or_else(|| Error::UnknownCriterion(name.clone()))
        })
        .collect::<Result<Vec<_>>>()?;
    if columns.is_empty() {
        return Ok(dm.clone());
    }
    let keep: Vec<usize> = (0..dm.n_alternatives())
        .filter(|&i| columns.iter().all(|&(j, bound)| dm.value(i, j) > bound))
        .collect();
    dm.select_rows(&keep)
}

/// `true` when row `b` Pareto-dominates row `a`.
fn dominates(b: &[f64], a: &[f64], objectives: &[Objective]) -> bool {
    let mut strictly = false;
    for ((&bv, &av), &obj) in b.iter().zip(a).zip(objectives) {
        if obj.better(av, bv) {
            return false;
        }
        strictly |= obj.better(bv, av);
    }
    strictly
}

/// Drops every alternative that is strictly Pareto-dominated by another one.
pub fn filter_non_dominated(dm: &DecisionMatrix) -> DecisionMatrix {
    let objectives = dm.objectives();
    let keep: Vec<usize> = (0..dm.n_alternatives())
        .filter(|&a| {
            !(0..dm.n_alternatives()).any(|b| b != a && dominates(dm.row(b), dm.row(a), objectives))
        })
        .collect();
    // dominance is a strict partial order on a finite set, so a maximal row survives
    dm.select_rows(&keep)
        .expect("at least one non-dominated alternative")
}

/// Proportional scaling: `x / Σ|x|`.
pub fn sum_scaler(dm: &DecisionMatrix, target: ScaleTarget) -> Result<DecisionMatrix> {
    scale(dm, target, |xs, label| {
        let total: f64 = xs.iter().map(|x| x.abs()).sum();
        if total == 0.0 {
            return Err(Error::ZeroSum(label.to_string()));
        }
        Ok(xs.iter().map(|x| x / total).collect())
    })
}

/// Euclidean scaling: `x / ‖x‖₂`.
pub fn vector_scaler(dm: &DecisionMatrix, target: ScaleTarget) -> Result<DecisionMatrix> {
    scale(dm, target, |xs, label| {
        let norm = xs.iter().map(|x| x * x).sum::<f64>().sqrt();
        if norm == 0.0 {
            return Err(Error::ZeroNorm(label.to_string()));
        }
        Ok(xs.iter().map(|x| x / norm).collect())
    })
}

/// Range scaling: `(x − min) / (max − min)`; a constant column maps to zeros.
pub fn minmax_scaler(dm: &DecisionMatrix, target: ScaleTarget) -> Result<DecisionMatrix> {
    scale(dm, target, |xs, label| {
        let (lo, hi) = xs
            .iter()
            .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), &x| {
                (lo.min(x), hi.max(x))
            });
        let range = hi - lo;
        if range == 0.0 {
            log::warn!("min-max scaling of constant {label}: mapped to zeros");
            return Ok(vec![0.0; xs.len()]);
        }
        Ok(xs.iter().map(|x| (x - lo) / range).collect())
    })
}

fn scale<F>(dm: &DecisionMatrix, target: ScaleTarget, f: F) -> Result<DecisionMatrix>
where
    F: Fn(&[f64], &str) -> Result<Vec<f64>>,
{
    let mut out = dm.clone();
    if target.matrix() {
        let (m, n) = dm.shape();
        let mut values = vec![0.0; m * n];
        for (j, name) in dm.criteria().iter().enumerate() {
            let column: Vec<f64> = dm.column(j).collect();
            let scaled = f(&column, &format!("criterion '{name}'"))?;
            for (i, v) in scaled.into_iter().enumerate() {
                if !v.is_finite() {
                    return Err(Error::NonFinite {
                        field: "scaled values",
                        row: i,
                        column: j,
                        value: v,
                    });
                }
                values[i * n + j] = v;
            }
        }
        out = out.with_columns(values, dm.objectives().to_vec());
    }
    if target.weights() {
        let weights = f(dm.weights(), "weights")?;
        out = out.replace_weights(weights)?;
    }
    Ok(out)
}
