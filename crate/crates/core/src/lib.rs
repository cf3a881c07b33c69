//! Combinatorial multi-criteria decision pipelines.
//!
//! Build a [`CombinatorialSpec`] whose steps each hold one or more
//! interchangeable components (inverters, filters, scalers, aggregators),
//! expand it into every concrete [`Pipeline`], evaluate them all over a
//! [`DecisionMatrix`], and compare the resulting rankings through a
//! [`RanksComparator`] (correlation, covariance, R², Hamming distance and
//! per-alternative rank distributions).
//!
//! ```
//! use rankforge::{Aggregator, CombinatorialSpec, DecisionMatrix, Objective, ScaleTarget, Transformer};
//!
//! let dm = DecisionMatrix::new(
//!     vec!["a".into(), "b".into(), "c".into()],
//!     vec!["gain".into(), "cost".into()],
//!     vec![vec![3.0, 2.0], vec![1.0, 1.0], vec![2.0, 4.0]],
//!     vec![Objective::Max, Objective::Min],
//!     vec![1.0, 1.0],
//! )?;
//! let spec = CombinatorialSpec::new(vec![
//!     Transformer::InvertMinimize.into(),
//!     vec![
//!         Transformer::SumScaler(ScaleTarget::MatrixOnly),
//!         Transformer::VectorScaler(ScaleTarget::MatrixOnly),
//!     ]
//!     .into(),
//!     vec![Aggregator::WeightedSum, Aggregator::Topsis].into(),
//! ])?;
//! let rankings = spec.evaluate_all(&dm)?;
//! assert_eq!(rankings.len(), 4);
//! let corr = rankings.corr()?;
//! assert_eq!(corr.cells[0][0], 1.0);
//! # Ok::<(), rankforge::Error>(())
//! ```

pub mod aggregate;
pub mod combinatorial;
pub mod compare;
pub mod error;
pub mod matrix;
pub mod pipeline;
pub mod report;
pub mod transform;

pub use aggregate::{
    rank_from_scores, topsis, untied_rank, weighted_sum_model, Aggregator, RankResult,
};
pub use combinatorial::{default_jobs, CombinatorialSpec, Step};
pub use compare::{
    AlternativeDistribution, FiveNumber, Metric, MetricMatrix, RankDistribution, RankMode,
    RanksComparator,
};
pub use error::{Error, Result};
pub use matrix::{DecisionMatrix, Objective};
pub use pipeline::{make_pipeline, Component, Pipeline};
pub use transform::{ScaleTarget, Transformer};
