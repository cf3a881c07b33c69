//! The decision matrix: alternatives (rows) scored against criteria (columns).

use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Optimisation direction of a criterion.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Objective {
    Max,
    Min,
}

impl Objective {
    /// Returns `true` when `a` is strictly better than `b` under this objective.
    pub fn better(self, a: f64, b: f64) -> bool {
        match self {
            Objective::Max => a > b,
            Objective::Min => a < b,
        }
    }
}

impl fmt::Display for Objective {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Objective::Max => "max",
            Objective::Min => "min",
        })
    }
}

impl std::str::FromStr for Objective {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_lowercase().as_str() {
            "max" | "maximize" | "+" => Ok(Objective::Max),
            "min" | "minimize" | "-" => Ok(Objective::Min),
            other => Err(format!(
                "unknown objective '{other}' (expected 'max' or 'min')"
            )),
        }
    }
}

/// A validated alternatives × criteria grid with per-criterion objective and weight.
///
/// Values are immutable once constructed; every transformation returns a new
/// matrix. Row order is significant: it is the tie-break order for untied ranks.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DecisionMatrix {
    alternatives: Vec<String>,
    criteria: Vec<String>,
    /// Row-major, `alternatives.len() * criteria.len()` entries.
    values: Vec<f64>,
    objectives: Vec<Objective>,
    weights: Vec<f64>,
}

impl DecisionMatrix {
    pub fn new(
        alternatives: Vec<String>,
        criteria: Vec<String>,
        values: Vec<Vec<f64>>,
        objectives: Vec<Objective>,
        weights: Vec<f64>,
    ) -> Result<Self> {
        if alternatives.is_empty() {
            return Err(Error::EmptyMatrix("alternatives"));
        }
        if criteria.is_empty() {
            return Err(Error::EmptyMatrix("criteria"));
        }
        check_names("alternative", &alternatives)?;
        check_names("criterion", &criteria)?;

        let (m, n) = (alternatives.len(), criteria.len());
        let flat = flatten(&values, m, n)?;
        check_len("objectives", n, objectives.len())?;
        check_len("weights", n, weights.len())?;
        check_weights(&weights)?;

        Ok(DecisionMatrix {
            alternatives,
            criteria,
            values: flat,
            objectives,
            weights,
        })
    }

    /// Returns a copy of this matrix with a new value grid of identical shape.
    pub fn replace_values(&self, values: Vec<Vec<f64>>) -> Result<Self> {
        let flat = flatten(&values, self.n_alternatives(), self.n_criteria())?;
        Ok(DecisionMatrix {
            values: flat,
            ..self.clone()
        })
    }

    pub fn replace_weights(&self, weights: Vec<f64>) -> Result<Self> {
        check_len("weights", self.n_criteria(), weights.len())?;
        check_weights(&weights)?;
        Ok(DecisionMatrix {
            weights,
            ..self.clone()
        })
    }

    pub(crate) fn with_columns(&self, values: Vec<f64>, objectives: Vec<Objective>) -> Self {
        debug_assert_eq!(values.len(), self.values.len());
        debug_assert!(values.iter().all(|v| v.is_finite()));
        DecisionMatrix {
            values,
            objectives,
            ..self.clone()
        }
    }

    /// Keeps the rows at `keep` (ascending indices), preserving their order.
    pub(crate) fn select_rows(&self, keep: &[usize]) -> Result<Self> {
        if keep.is_empty() {
            return Err(Error::AllFiltered);
        }
        let n = self.n_criteria();
        let mut values = Vec::with_capacity(keep.len() * n);
        for &i in keep {
            values.extend_from_slice(self.row(i));
        }
        Ok(DecisionMatrix {
            alternatives: keep.iter().map(|&i| self.alternatives[i].clone()).collect(),
            values,
            ..self.clone()
        })
    }

    pub fn alternatives(&self) -> &[String] {
        &self.alternatives
    }

    pub fn criteria(&self) -> &[String] {
        &self.criteria
    }

    pub fn objectives(&self) -> &[Objective] {
        &self.objectives
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn n_alternatives(&self) -> usize {
        self.alternatives.len()
    }

    pub fn n_criteria(&self) -> usize {
        self.criteria.len()
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.n_alternatives(), self.n_criteria())
    }

    pub fn value(&self, row: usize, column: usize) -> f64 {
        self.values[row * self.n_criteria() + column]
    }

    pub fn row(&self, row: usize) -> &[f64] {
        let n = self.n_criteria();
        &self.values[row * n..(row + 1) * n]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[f64]> + '_ {
        self.values.chunks_exact(self.n_criteria())
    }

    pub fn column(&self, column: usize) -> impl Iterator<Item = f64> + '_ {
        self.values
            .iter()
            .skip(column)
            .step_by(self.n_criteria())
            .copied()
    }

    /// Row-major flat view of the values.
    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn to_rows(&self) -> Vec<Vec<f64>> {
        self.rows().map(<[f64]>::to_vec).collect()
    }

    pub fn criterion_index(&self, name: &str) -> Option<usize> {
        self.criteria.iter().position(|c| c == name)
    }
}

fn check_names(field: &'static str, names: &[String]) -> Result<()> {
    let mut seen = HashSet::with_capacity(names.len());
    for (index, name) in names.iter().enumerate() {
        if name.trim().is_empty() {
            return Err(Error::EmptyName { field, index });
        }
        if !seen.insert(name.as_str()) {
            return Err(Error::DuplicateName {
                field,
                name: name.clone(),
                index,
            });
        }
    }
    Ok(())
}

fn check_len(field: &str, expected: usize, found: usize) -> Result<()> {
    if expected != found {
        return Err(Error::Dimension {
            field: field.to_string(),
            expected,
            found,
        });
    }
    Ok(())
}

fn check_weights(weights: &[f64]) -> Result<()> {
    for (index, &value) in weights.iter().enumerate() {
        if !value.is_finite() || value < 0.0 {
            return Err(Error::InvalidWeight { index, value });
        }
    }
    if weights.iter().sum::<f64>() <= 0.0 {
        return Err(Error::ZeroWeights);
    }
    Ok(())
}

fn flatten(values: &[Vec<f64>], m: usize, n: usize) -> Result<Vec<f64>> {
    check_len("values (rows)", m, values.len())?;
    let mut flat = Vec::with_capacity(m * n);
    for (row, cells) in values.iter().enumerate() {
        check_len(&format!("values row {row}"), n, cells.len())?;
        for (column, &value) in cells.iter().enumerate() {
            if !value.is_finite() {
                return Err(Error::NonFinite {
                    field: "values",
                    row,
                    column,
                    value,
                });
            }
            flat.push(value);
        }
    }
    Ok(flat)
}
