//! Pairwise comparison of rankings over a common set of alternatives.
//!
//! All metrics default to untied ranks, where every ranking is a permutation of
//! `1..=m`. On permutations, Pearson correlation coincides with Spearman's rho
//! and every ranking has nonzero variance once `m >= 2`.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::aggregate::RankResult;
use crate::error::{Error, Result};

/// Which rank vector metrics are computed over.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RankMode {
    #[default]
    Untied,
    Tied,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Metric {
    Correlation,
    Covariance,
    R2,
    Distance,
}

impl Metric {
    pub fn file_stem(self) -> &'static str {
        match self {
            Metric::Correlation => "corr",
            Metric::Covariance => "cov",
            Metric::R2 => "r2",
            Metric::Distance => "distance",
        }
    }
}

/// k × k matrix of a pairwise metric, rows and columns labelled by ranking name.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MetricMatrix {
    pub metric: Metric,
    pub labels: Vec<String>,
    pub cells: Vec<Vec<f64>>,
}

impl MetricMatrix {
    pub fn get(&self, row: &str, column: &str) -> Option<f64> {
        let i = self.labels.iter().position(|l| l == row)?;
        let j = self.labels.iter().position(|l| l == column)?;
        Some(self.cells[i][j])
    }

    /// Smallest off-diagonal cell with its (row, column) indices.
    pub fn min_off_diagonal(&self) -> Option<(usize, usize, f64)> {
        let k = self.labels.len();
        (0..k)
            .flat_map(|i| (0..k).filter(move |&j| j != i).map(move |j| (i, j)))
            .map(|(i, j)| (i, j, self.cells[i][j]))
            .min_by(|a, b| a.2.total_cmp(&b.2))
    }
}

/// Five-number summary of one alternative's ranks across all rankings.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FiveNumber {
    pub min: f64,
    pub q1: f64,
    pub median: f64,
    pub q3: f64,
    pub max: f64,
}

impl FiveNumber {
    /// Quartiles by linear interpolation between order statistics.
    pub fn from_samples(samples: &[f64]) -> Self {
        assert!(!samples.is_empty(), "five-number summary of nothing");
        let mut sorted = samples.to_vec();
        sorted.sort_by(f64::total_cmp);
        let at = |p: f64| {
            let pos = p * (sorted.len() - 1) as f64;
            let lo = pos.floor() as usize;
            let hi = pos.ceil() as usize;
            sorted[lo] + (sorted[hi] - sorted[lo]) * (pos - lo as f64)
        };
        FiveNumber {
            min: sorted[0],
            q1: at(0.25),
            median: at(0.5),
            q3: at(0.75),
            max: sorted[sorted.len() - 1],
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AlternativeDistribution {
    pub alternative: String,
    #[serde(flatten)]
    pub summary: FiveNumber,
}

pub type RankDistribution = Vec<AlternativeDistribution>;

/// Named rankings over an identical, identically ordered set of alternatives.
#[derive(Debug, Clone, PartialEq)]
pub struct RanksComparator {
    entries: Vec<(String, RankResult)>,
    alternatives: Vec<String>,
}

impl RanksComparator {
    pub fn new(entries: Vec<(String, RankResult)>) -> Result<Self> {
        let Some((first_name, first)) = entries.first() else {
            return Err(Error::TooFew {
                what: "rankings",
                needed: 1,
                found: 0,
            });
        };
        let mut names = HashSet::with_capacity(entries.len());
        for (name, result) in &entries {
            if !names.insert(name.as_str()) {
                return Err(Error::DuplicateRanking(name.clone()));
            }
            if result.alternatives != first.alternatives {
                return Err(Error::IncomparableRankings {
                    first: first_name.clone(),
                    other: name.clone(),
                });
            }
        }
        let alternatives = first.alternatives.clone();
        Ok(RanksComparator {
            entries,
            alternatives,
        })
    }

    /// Uses each result's method label as its name.
    pub fn from_results(results: Vec<RankResult>) -> Result<Self> {
        Self::new(results.into_iter().map(|r| (r.method.clone(), r)).collect())
    }

    pub fn entries(&self) -> &[(String, RankResult)] {
        &self.entries
    }

    pub fn names(&self) -> Vec<String> {
        self.entries.iter().map(|(n, _)| n.clone()).collect()
    }

    pub fn alternatives(&self) -> &[String] {
        &self.alternatives
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, name: &str) -> Option<&RankResult> {
        self.entries.iter().find(|(n, _)| n == name).map(|(_, r)| r)
    }

    fn rank_vectors(&self, mode: RankMode) -> Vec<Vec<f64>> {
        self.entries
            .iter()
            .map(|(_, r)| {
                let ranks = match mode {
                    RankMode::Untied => r.untied_rank(),
                    RankMode::Tied => r.ranks.clone(),
                };
                ranks.into_iter().map(|x| x as f64).collect()
            })
            .collect()
    }

    fn require(&self, min_alternatives: usize) -> Result<()> {
        if self.len() < 2 {
            return Err(Error::TooFew {
                what: "rankings",
                needed: 2,
                found: self.len(),
            });
        }
        if self.alternatives.len() < min_alternatives {
            return Err(Error::TooFew {
                what: "alternatives",
                needed: min_alternatives,
                found: self.alternatives.len(),
            });
        }
        Ok(())
    }

    /// Fills a metric matrix from an upper-triangle pair function (mirrored).
    fn symmetric(
        &self,
        metric: Metric,
        mode: RankMode,
        diagonal: Option<f64>,
        f: impl Fn(&[f64], &[f64]) -> f64,
    ) -> MetricMatrix {
        let vectors = self.rank_vectors(mode);
        let k = vectors.len();
        let mut cells = vec![vec![0.0; k]; k];
        for i in 0..k {
            for j in i..k {
                let v = match (i == j, diagonal) {
                    (true, Some(d)) => d,
                    _ => f(&vectors[i], &vectors[j]),
                };
                cells[i][j] = v;
                cells[j][i] = v;
            }
        }
        MetricMatrix {
            metric,
            labels: self.names(),
            cells,
        }
    }

    pub fn corr(&self) -> Result<MetricMatrix> {
        self.corr_with(RankMode::Untied)
    }

    /// Pearson correlation of rank vectors.
    pub fn corr_with(&self, mode: RankMode) -> Result<MetricMatrix> {
        self.require(2)?;
        Ok(self.symmetric(Metric::Correlation, mode, Some(1.0), pearson))
    }

    pub fn cov(&self) -> Result<MetricMatrix> {
        self.cov_with(RankMode::Untied)
    }

    /// Sample covariance (divisor m − 1) of rank vectors.
    pub fn cov_with(&self, mode: RankMode) -> Result<MetricMatrix> {
        self.require(2)?;
        Ok(self.symmetric(Metric::Covariance, mode, None, sample_covariance))
    }

    pub fn r2_score(&self) -> Result<MetricMatrix> {
        self.r2_score_with(RankMode::Untied)
    }

    /// Cell (i, j): ranking i as ground truth, ranking j as prediction.
    pub fn r2_score_with(&self, mode: RankMode) -> Result<MetricMatrix> {
        self.require(2)?;
        let vectors = self.rank_vectors(mode);
        let cells = vectors
            .iter()
            .enumerate()
            .map(|(i, truth)| {
                vectors
                    .iter()
                    .enumerate()
                    .map(|(j, pred)| if i == j { 1.0 } else { r2(truth, pred) })
                    .collect()
            })
            .collect();
        Ok(MetricMatrix {
            metric: Metric::R2,
            labels: self.names(),
            cells,
        })
    }

    pub fn distance(&self) -> Result<MetricMatrix> {
        self.distance_with(RankMode::Untied)
    }

    /// Normalised Hamming distance: share of alternatives whose rank differs.
    pub fn distance_with(&self, mode: RankMode) -> Result<MetricMatrix> {
        self.require(1)?;
        Ok(self.symmetric(Metric::Distance, mode, Some(0.0), hamming))
    }

    /// Alternatives × rankings table of untied ranks.
    pub fn rank_table(&self) -> Vec<Vec<usize>> {
        let columns: Vec<Vec<usize>> = self.entries.iter().map(|(_, r)| r.untied_rank()).collect();
        (0..self.alternatives.len())
            .map(|i| columns.iter().map(|c| c[i]).collect())
            .collect()
    }

    /// Alternatives × rankings table of scores.
    pub fn score_table(&self) -> Vec<Vec<f64>> {
        (0..self.alternatives.len())
            .map(|i| self.entries.iter().map(|(_, r)| r.scores[i]).collect())
            .collect()
    }

    pub fn distribution(&self) -> RankDistribution {
        self.alternatives
            .iter()
            .zip(self.rank_table())
            .map(|(alternative, row)| {
                let samples: Vec<f64> = row.into_iter().map(|r| r as f64).collect();
                AlternativeDistribution {
                    alternative: alternative.clone(),
                    summary: FiveNumber::from_samples(&samples),
                }
            })
            .collect()
    }
}

fn mean(xs: &[f64]) -> f64 {
    xs.iter().sum::<f64>() / xs.len() as f64
}

/// Sums of centred cross products: (Sxy, Sxx, Syy).
fn centred_sums(x: &[f64], y: &[f64]) -> (f64, f64, f64) {
    let (mx, my) = (mean(x), mean(y));
    x.iter()
        .zip(y)
        .fold((0.0, 0.0, 0.0), |(sxy, sxx, syy), (a, b)| {
            let (da, db) = (a - mx, b - my);
            (sxy + da * db, sxx + da * da, syy + db * db)
        })
}

fn pearson(x: &[f64], y: &[f64]) -> f64 {
    let (sxy, sxx, syy) = centred_sums(x, y);
    // NaN for a constant vector (only reachable in tied mode)
    sxy / (sxx * syy).sqrt()
}

fn sample_covariance(x: &[f64], y: &[f64]) -> f64 {
    let (sxy, _, _) = centred_sums(x, y);
    sxy / (x.len() - 1) as f64
}

fn r2(truth: &[f64], pred: &[f64]) -> f64 {
    let mt = mean(truth);
    let ss_res: f64 = truth.iter().zip(pred).map(|(t, p)| (t - p) * (t - p)).sum();
    let ss_tot: f64 = truth.iter().map(|t| (t - mt) * (t - mt)).sum();
    if ss_tot == 0.0 {
        return if ss_res == 0.0 { 1.0 } else { 0.0 };
    }
    1.0 - ss_res / ss_tot
}

fn hamming(x: &[f64], y: &[f64]) -> f64 {
    let differ = x.iter().zip(y).filter(|(a, b)| a != b).count();
    differ as f64 / x.len() as f64
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rc(rankings: &[&[usize]]) -> RanksComparator {
        let m = rankings[0].len();
        let alternatives: Vec<String> = (0..m).map(|i| format!("a{i}")).collect();
        RanksComparator::new(
            rankings
                .iter()
                .enumerate()
                .map(|(k, ranks)| {
                    (
                        format!("r{k}"),
                        RankResult {
                            method: format!("r{k}"),
                            alternatives: alternatives.clone(),
                            scores: ranks.iter().map(|&r| -(r as f64)).collect(),
                            ranks: ranks.to_vec(),
                            extra: Default::default(),
                        },
                    )
                })
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn corr_examples() {
        assert_eq!(
            rc(&[&[1, 2, 3], &[1, 2, 3]]).corr().unwrap().cells[0][1],
            1.0
        );
        assert_eq!(
            rc(&[&[1, 2, 3], &[3, 2, 1]]).corr().unwrap().cells[0][1],
            -1.0
        );
        assert_eq!(
            rc(&[&[1, 2, 3], &[2, 1, 3]]).corr().unwrap().cells[0][1],
            0.5
        );
    }

    #[test]
    fn cov_examples() {
        let m = rc(&[&[1, 2, 3], &[3, 2, 1]]).cov().unwrap();
        assert_eq!(m.cells[0][0], 1.0);
        assert_eq!(m.cells[1][1], 1.0);
        assert_eq!(m.cells[0][1], -1.0);
        assert_eq!(
            rc(&[&[1, 2, 3], &[1, 2, 3]]).cov().unwrap().cells[0][1],
            1.0
        );
    }

    #[test]
    fn r2_examples() {
        assert_eq!(
            rc(&[&[1, 2, 3], &[1, 2, 3]]).r2_score().unwrap().cells[0][1],
            1.0
        );
        assert_eq!(
            rc(&[&[1, 2, 3], &[3, 2, 1]]).r2_score().unwrap().cells[0][1],
            -3.0
        );
        assert_eq!(
            rc(&[&[1, 2, 3], &[2, 1, 3]]).r2_score().unwrap().cells[0][1],
            0.0
        );
    }

    #[test]
    fn r2_is_directional_on_tied_ranks() {
        let m = rc(&[&[1, 1, 3], &[1, 2, 3]])
            .r2_score_with(RankMode::Tied)
            .unwrap();
        assert_ne!(m.cells[0][1], m.cells[1][0]);
    }

    #[test]
    fn distance_examples() {
        assert_eq!(
            rc(&[&[1, 2, 3], &[1, 2, 3]]).distance().unwrap().cells[0][1],
            0.0
        );
        assert_eq!(
            rc(&[&[1, 2, 3], &[1, 3, 2]]).distance().unwrap().cells[0][1],
            2.0 / 3.0
        );
        assert_eq!(rc(&[&[1, 2], &[2, 1]]).distance().unwrap().cells[0][1], 1.0);
        // a single alternative is enough for Hamming distance
        assert_eq!(rc(&[&[1], &[1]]).distance().unwrap().cells[0][1], 0.0);
    }

    #[test]
    fn metrics_need_two_rankings_and_alternatives() {
        let one = rc(&[&[1, 2]]);
        assert!(matches!(
            one.corr(),
            Err(Error::TooFew {
                what: "rankings",
                ..
            })
        ));
        let tiny = rc(&[&[1], &[1]]);
        assert!(matches!(
            tiny.corr(),
            Err(Error::TooFew {
                what: "alternatives",
                ..
            })
        ));
        assert!(tiny.cov().is_err());
        assert!(tiny.r2_score().is_err());
    }

    #[test]
    fn untied_vs_tied_mode() {
        let c = rc(&[&[1, 1, 3], &[1, 2, 3]]);
        assert_eq!(c.distance().unwrap().cells[0][1], 0.0);
        assert_eq!(
            c.distance_with(RankMode::Tied).unwrap().cells[0][1],
            1.0 / 3.0
        );
    }

    #[test]
    fn tables() {
        let single = rc(&[&[2, 1]]);
        assert_eq!(single.rank_table(), vec![vec![2], vec![1]]);
        let twin = rc(&[&[2, 1, 3], &[2, 1, 3]]);
        assert_eq!(twin.rank_table(), vec![vec![2, 2], vec![1, 1], vec![3, 3]]);
    }

    #[test]
    fn five_number_summaries() {
        let s = FiveNumber::from_samples(&[1.0; 4]);
        assert_eq!(
            (s.min, s.q1, s.median, s.q3, s.max),
            (1.0, 1.0, 1.0, 1.0, 1.0)
        );
        let s = FiveNumber::from_samples(&[3.0, 1.0, 2.0]);
        assert_eq!((s.min, s.median, s.max), (1.0, 2.0, 3.0));
        assert_eq!(FiveNumber::from_samples(&[1.0, 4.0]).median, 2.5);
        let s = FiveNumber::from_samples(&[1.0, 2.0, 3.0, 4.0]);
        assert_eq!((s.q1, s.median, s.q3), (1.75, 2.5, 3.25));
    }

    #[test]
    fn comparator_validation() {
        let a = rc(&[&[1, 2]]).entries()[0].1.clone();
        let mut b = a.clone();
        b.alternatives.reverse();
        assert!(matches!(
            RanksComparator::new(vec![("x".into(), a.clone()), ("y".into(), b)]),
            Err(Error::IncomparableRankings { .. })
        ));
        assert!(matches!(
            RanksComparator::new(vec![("x".into(), a.clone()), ("x".into(), a)]),
            Err(Error::DuplicateRanking(_))
        ));
        assert!(RanksComparator::new(vec![]).is_err());
    }
}
