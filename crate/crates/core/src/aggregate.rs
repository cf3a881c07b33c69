//! Aggregators and the score-to-rank conversion.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::{DecisionMatrix, Objective};

/// Output of a ranking method over an ordered set of alternatives.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RankResult {
    pub method: String,
    pub alternatives: Vec<String>,
    pub scores: Vec<f64>,
    /// Competition ranks, 1 = best.
    pub ranks: Vec<usize>,
    /// Intermediate quantities (e.g. TOPSIS ideal and anti-ideal points).
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub extra: BTreeMap<String, Vec<f64>>,
}

impl RankResult {
    /// Builds a result whose ranks descend by score.
    pub fn from_scores(
        method: impl Into<String>,
        alternatives: Vec<String>,
        scores: Vec<f64>,
    ) -> Result<Self> {
        if alternatives.len() != scores.len() {
            return Err(Error::Dimension {
                field: "scores".into(),
                expected: alternatives.len(),
                found: scores.len(),
            });
        }
        let ranks = rank_from_scores(&scores, true)?;
        Ok(RankResult {
            method: method.into(),
            alternatives,
            scores,
            ranks,
            extra: BTreeMap::new(),
        })
    }

    pub fn len(&self) -> usize {
        self.alternatives.len()
    }

    pub fn is_empty(&self) -> bool {
        self.alternatives.is_empty()
    }

    pub fn has_ties(&self) -> bool {
        let mut seen = vec![false; self.ranks.len() + 1];
        self.ranks
            .iter()
            .any(|&r| std::mem::replace(&mut seen[r], true))
    }

    pub fn untied_rank(&self) -> Vec<usize> {
        untied_rank(&self.ranks)
    }

    pub(crate) fn with_method(mut self, method: impl Into<String>) -> Self {
        self.method = method.into();
        self
    }
}

/// Competition ("1224") ranking: `rank_i = 1 + #{j : score_j beats score_i}`.
pub fn rank_from_scores(scores: &[f64], higher_is_better: bool) -> Result<Vec<usize>> {
    if scores.is_empty() {
        return Err(Error::EmptyScores);
    }
    if let Some((column, &value)) = scores.iter().enumerate().find(|(_, s)| !s.is_finite()) {
        return Err(Error::NonFinite {
            field: "scores",
            row: 0,
            column,
            value,
        });
    }
    let key = |i: usize| {
        if higher_is_better {
            scores[i]
        } else {
            -scores[i]
        }
    };
    let mut order: Vec<usize> = (0..scores.len()).collect();
    order.sort_by(|&a, &b| key(b).total_cmp(&key(a)));

    let mut ranks = vec![0; scores.len()];
    for (pos, &i) in order.iter().enumerate() {
        ranks[i] = match pos {
            // -0.0 == 0.0 here even though total_cmp separates them
            p if p > 0 && key(order[p - 1]) == key(i) => ranks[order[p - 1]],
            p => p + 1,
        };
    }
    Ok(ranks)
}

/// Breaks ties by original position: the result is a permutation of `1..=m`.
pub fn untied_rank(ranks: &[usize]) -> Vec<usize> {
    let mut order: Vec<usize> = (0..ranks.len()).collect();
    // stable sort keeps original order inside each tied block
    order.sort_by_key(|&i| ranks[i]);
    let mut untied = vec![0; ranks.len()];
    for (pos, i) in order.into_iter().enumerate() {
        untied[i] = pos + 1;
    }
    untied
}

/// Final pipeline component collapsing a matrix into a ranking.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Aggregator {
    #[serde(rename = "WSM")]
    WeightedSum,
    #[serde(rename = "TOPSIS")]
    Topsis,
}

impl Aggregator {
    pub fn name(&self) -> &'static str {
        match self {
            Aggregator::WeightedSum => "WSM",
            Aggregator::Topsis => "TOPSIS",
        }
    }

    pub fn evaluate(&self, dm: &DecisionMatrix) -> Result<RankResult> {
        match self {
            Aggregator::WeightedSum => weighted_sum_model(dm),
            Aggregator::Topsis => Ok(topsis(dm)),
        }
    }
}

impl fmt::Display for Aggregator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Weighted sum of the (already scaled) values. Every criterion must be `Max`.
pub fn weighted_sum_model(dm: &DecisionMatrix) -> Result<RankResult> {
    if let Some(j) = dm.objectives().iter().position(|o| *o == Objective::Min) {
        return Err(Error::MinimizedCriterion(dm.criteria()[j].clone()));
    }
    let weights = dm.weights();
    let scores = dm
        .rows()
        .map(|row| row.iter().zip(weights).map(|(v, w)| w * v).sum())
        .collect();
    RankResult::from_scores("WSM", dm.alternatives().to_vec(), scores)
}

/// TOPSIS relative closeness on the weighted matrix, without internal normalisation.
pub fn topsis(dm: &DecisionMatrix) -> RankResult {
    let (m, n) = dm.shape();
    let weights = dm.weights();
    let weighted: Vec<f64> = dm
        .values()
        .iter()
        .enumerate()
        .map(|(k, v)| v * weights[k % n])
        .collect();

    let mut ideal = vec![0.0; n];
    let mut anti_ideal = vec![0.0; n];
    for j in 0..n {
        let column = weighted.iter().skip(j).step_by(n);
        let lo = column.clone().copied().fold(f64::INFINITY, f64::min);
        let hi = column.copied().fold(f64::NEG_INFINITY, f64::max);
        (ideal[j], anti_ideal[j]) = match dm.objectives()[j] {
            Objective::Max => (hi, lo),
            Objective::Min => (lo, hi),
        };
    }

    let distance = |row: &[f64], point: &[f64]| -> f64 {
        row.iter()
            .zip(point)
            .map(|(a, b)| (a - b) * (a - b))
            .sum::<f64>()
            .sqrt()
    };
    let closeness: Vec<f64> = weighted
        .chunks_exact(n)
        .map(|row| {
            let d_best = distance(row, &ideal);
            let d_worst = distance(row, &anti_ideal);
            let total = d_best + d_worst;
            if total == 0.0 {
                0.5
            } else {
                d_worst / total
            }
        })
        .collect();
    debug_assert_eq!(closeness.len(), m);

    let mut result = RankResult::from_scores("TOPSIS", dm.alternatives().to_vec(), closeness)
        .expect("closeness is finite and non-empty");
    result.extra.insert("ideal".into(), ideal);
    result.extra.insert("anti_ideal".into(), anti_ideal);
    result
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn matrix(values: Vec<Vec<f64>>, weights: Vec<f64>) -> DecisionMatrix {
        let n = weights.len();
        DecisionMatrix::new(
            (0..values.len()).map(|i| format!("a{i}")).collect(),
            (0..n).map(|j| format!("c{j}")).collect(),
            values,
            vec![Objective::Max; n],
            weights,
        )
        .unwrap()
    }

    #[test]
    fn competition_ranks() {
        assert_eq!(
            rank_from_scores(&[0.9, 0.1, 0.5], true).unwrap(),
            vec![1, 3, 2]
        );
        assert_eq!(rank_from_scores(&[0.5, 0.5], true).unwrap(), vec![1, 1]);
        assert_eq!(
            rank_from_scores(&[1.0, 2.0, 3.0], false).unwrap(),
            vec![1, 2, 3]
        );
        assert_eq!(
            rank_from_scores(&[3.0, 1.0, 3.0, 2.0], true).unwrap(),
            vec![1, 4, 1, 3]
        );
        assert_eq!(rank_from_scores(&[0.0, -0.0], true).unwrap(), vec![1, 1]);
        assert!(matches!(
            rank_from_scores(&[], true),
            Err(Error::EmptyScores)
        ));
    }

    #[test]
    fn untie_by_original_order() {
        assert_eq!(untied_rank(&[1, 1, 3]), vec![1, 2, 3]);
        assert_eq!(untied_rank(&[2, 1, 2]), vec![2, 1, 3]);
        assert_eq!(untied_rank(&[3, 1, 2]), vec![3, 1, 2]);
    }

    #[test]
    fn wsm_examples() {
        let r = weighted_sum_model(&matrix(
            vec![vec![1.0, 2.0], vec![3.0, 4.0]],
            vec![0.5, 0.5],
        ))
        .unwrap();
        assert_eq!(r.scores, vec![1.5, 3.5]);
        assert_eq!(r.ranks, vec![2, 1]);
        assert_eq!(r.method, "WSM");

        let twins = weighted_sum_model(&matrix(
            vec![vec![1.0, 2.0], vec![1.0, 2.0]],
            vec![1.0, 1.0],
        ))
        .unwrap();
        assert_eq!(twins.ranks, vec![1, 1]);
        assert_eq!(twins.untied_rank(), vec![1, 2]);
        assert!(twins.has_ties());

        let first_only = weighted_sum_model(&matrix(
            vec![vec![1.0, 9.0], vec![2.0, 0.0]],
            vec![1.0, 0.0],
        ))
        .unwrap();
        assert_eq!(first_only.ranks, vec![2, 1]);
    }

    #[test]
    fn wsm_rejects_minimised_criteria() {
        let dm = DecisionMatrix::new(
            vec!["a".into()],
            vec!["cost".into()],
            vec![vec![1.0]],
            vec![Objective::Min],
            vec![1.0],
        )
        .unwrap();
        let err = weighted_sum_model(&dm).unwrap_err();
        assert!(err.to_string().contains("invert or negate"));
    }

    #[test]
    fn topsis_examples() {
        let r = topsis(&matrix(
            vec![vec![1.0, 1.0], vec![0.0, 0.0]],
            vec![0.5, 0.5],
        ));
        assert_eq!(r.scores, vec![1.0, 0.0]);
        assert_eq!(r.ranks, vec![1, 2]);
        assert_eq!(r.extra["ideal"], vec![0.5, 0.5]);

        let r = topsis(&matrix(
            vec![vec![1.0, 0.0], vec![0.0, 1.0]],
            vec![0.5, 0.5],
        ));
        assert_eq!(r.scores, vec![0.5, 0.5]);
        assert_eq!(r.ranks, vec![1, 1]);
        assert_eq!(r.untied_rank(), vec![1, 2]);
    }

    #[test]
    fn topsis_all_identical_rows_tie_at_half() {
        let r = topsis(&matrix(vec![vec![2.0, 3.0]; 3], vec![1.0, 1.0]));
        assert_eq!(r.scores, vec![0.5; 3]);
        assert_eq!(r.ranks, vec![1, 1, 1]);
    }

    #[test]
    fn topsis_handles_min_objectives_directionally() {
        let dm = DecisionMatrix::new(
            vec!["cheap".into(), "pricey".into()],
            vec!["cost".into()],
            vec![vec![1.0], vec![5.0]],
            vec![Objective::Min],
            vec![1.0],
        )
        .unwrap();
        let r = topsis(&dm);
        assert_eq!(r.ranks, vec![1, 2]);
        assert_eq!(r.scores, vec![1.0, 0.0]);
    }

    /// Independent O(m²) oracle for the competition rank formula.
    fn competition_oracle(scores: &[f64]) -> Vec<usize> {
        scores
            .iter()
            .map(|s| 1 + scores.iter().filter(|o| *o > s).count())
            .collect()
    }

    proptest! {
        #[test]
        fn ranks_match_formula(scores in prop::collection::vec(prop::sample::select(vec![0.0, 0.5, 1.0, 2.0, -1.0]), 1..12)) {
            prop_assert_eq!(rank_from_scores(&scores, true).unwrap(), competition_oracle(&scores));
            let negated: Vec<f64> = scores.iter().map(|s| -s).collect();
            prop_assert_eq!(rank_from_scores(&scores, false).unwrap(), competition_oracle(&negated));
        }

        #[test]
        fn untied_is_order_preserving_permutation(ranks in prop::collection::vec(1usize..5, 1..10)) {
            let untied = untied_rank(&ranks);
            let mut sorted = untied.clone();
            sorted.sort_unstable();
            prop_assert_eq!(sorted, (1..=ranks.len()).collect::<Vec<_>>());
            for a in 0..ranks.len() {
                for b in 0..ranks.len() {
                    if ranks[a] < ranks[b] || (ranks[a] == ranks[b] && a < b) {
                        prop_assert!(untied[a] < untied[b]);
                    }
                }
            }
        }

        #[test]
        fn closeness_in_unit_interval(
            values in prop::collection::vec(prop::collection::vec(0.0f64..10.0, 3), 1..8),
            weights in prop::collection::vec(0.01f64..1.0, 3),
        ) {
            let r = topsis(&matrix(values, weights));
            prop_assert!(r.scores.iter().all(|c| (0.0..=1.0).contains(c)));
        }

        #[test]
        fn wsm_weight_scale_invariance(
            values in prop::collection::vec(prop::collection::vec(0.0f64..10.0, 3), 1..8),
            weights in prop::collection::vec(0.01f64..1.0, 3),
            c in prop::sample::select(vec![0.5, 2.0, 4.0, 0.25]),
        ) {
            let base = weighted_sum_model(&matrix(values.clone(), weights.clone())).unwrap();
            let scaled = weighted_sum_model(&matrix(values, weights.iter().map(|w| w * c).collect())).unwrap();
            prop_assert_eq!(base.ranks, scaled.ranks);
        }

        #[test]
        fn aggregators_are_permutation_equivariant(
            values in prop::collection::vec(prop::collection::vec(0.0f64..10.0, 2), 2..7),
            weights in prop::collection::vec(0.01f64..1.0, 2),
            seed in any::<u64>(),
        ) {
            let m = values.len();
            let mut perm: Vec<usize> = (0..m).collect();
            // cheap deterministic shuffle
            let mut s = seed;
            for i in (1..m).rev() {
                s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                perm.swap(i, (s >> 33) as usize % (i + 1));
            }
            let dm = matrix(values.clone(), weights.clone());
            let permuted = DecisionMatrix::new(
                perm.iter().map(|&i| format!("a{i}")).collect(),
                vec!["c0".into(), "c1".into()],
                perm.iter().map(|&i| values[i].clone()).collect(),
                vec![Objective::Max; 2],
                weights,
            ).unwrap();
            for agg in [Aggregator::WeightedSum, Aggregator::Topsis] {
                let base = agg.evaluate(&dm).unwrap();
                let moved = agg.evaluate(&permuted).unwrap();
                for (k, &i) in perm.iter().enumerate() {
                    prop_assert_eq!(moved.scores[k], base.scores[i]);
                    prop_assert_eq!(moved.ranks[k], base.ranks[i]);
                }
                let expected_untied = untied_rank(&moved.ranks);
                prop_assert_eq!(moved.untied_rank(), expected_untied);
            }
        }
    }
}
