//! Cartesian expansion of per-step alternatives into concrete pipelines.
//!
//! A [`CombinatorialSpec`] is an ordered list of steps, each holding one or more
//! interchangeable components. [`CombinatorialSpec::expand`] builds one
//! [`Pipeline`] per element of the Cartesian product, enumerated with the last
//! step varying fastest, and [`CombinatorialSpec::evaluate_all`] runs every
//! pipeline (optionally on a worker pool) and gathers the rankings into a
//! [`RanksComparator`].

use std::collections::HashSet;
use std::num::NonZeroUsize;

use rayon::prelude::*;

use crate::aggregate::{Aggregator, RankResult};
use crate::compare::RanksComparator;
use crate::error::{Error, Result};
use crate::matrix::DecisionMatrix;
use crate::pipeline::{pipeline_name, Component, Pipeline};
use crate::transform::Transformer;

/// One step of a combinatorial spec: a nonempty set of alternative components.
#[derive(Debug, Clone, PartialEq)]
pub struct Step(Vec<Component>);

impl Step {
    pub fn alternatives(&self) -> &[Component] {
        &self.0
    }
}

impl From<Component> for Step {
    fn from(c: Component) -> Self {
        Step(vec![c])
    }
}

impl From<Transformer> for Step {
    fn from(t: Transformer) -> Self {
        Step(vec![t.into()])
    }
}

impl From<Aggregator> for Step {
    fn from(a: Aggregator) -> Self {
        Step(vec![a.into()])
    }
}

impl<C: Into<Component>> From<Vec<C>> for Step {
    fn from(cs: Vec<C>) -> Self {
        Step(cs.into_iter().map(Into::into).collect())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CombinatorialSpec {
    steps: Vec<Step>,
}

impl CombinatorialSpec {
    pub fn new(steps: Vec<Step>) -> Result<Self> {
        let Some(last) = steps.len().checked_sub(1) else {
            return Err(Error::InvalidSpec("no steps".into()));
        };
        for (index, step) in steps.iter().enumerate() {
            if step.0.is_empty() {
                return Err(Error::InvalidSpec(format!(
                    "step {index} has no alternatives"
                )));
            }
            for component in &step.0 {
                match (index == last, component.is_aggregator()) {
                    (true, false) => {
                        return Err(Error::InvalidSpec(format!(
                            "final step must hold only aggregators, found '{component}'"
                        )))
                    }
                    (false, true) => {
                        return Err(Error::InvalidSpec(format!(
                            "aggregator '{component}' in step {index}; aggregators belong in the final step"
                        )))
                    }
                    _ => {}
                }
            }
        }
        Ok(CombinatorialSpec { steps })
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    /// Product of per-step alternative counts.
    pub fn combination_count(&self) -> usize {
        self.steps.iter().map(|s| s.0.len()).product()
    }

    /// All pipelines of the Cartesian product, first step slowest.
    pub fn expand(&self) -> Vec<Pipeline> {
        let total = self.combination_count();
        let mut pipelines = Vec::with_capacity(total);
        let mut taken = HashSet::with_capacity(total);
        let mut choice = vec![0usize; self.steps.len()];

        for _ in 0..total {
            let components: Vec<Component> = choice
                .iter()
                .zip(&self.steps)
                .map(|(&k, step)| step.0[k].clone())
                .collect();
            let names: Vec<String> = components.iter().map(Component::name).collect();
            let base = pipeline_name(names.iter().map(String::as_str));
            let name = unique_name(base, &mut taken);
            let pipeline = Pipeline::new(components)
                .expect("spec validation guarantees a single trailing aggregator")
                .renamed(name);
            pipelines.push(pipeline);

            // odometer increment, last digit fastest
            for (digit, step) in choice.iter_mut().zip(&self.steps).rev() {
                *digit += 1;
                if *digit < step.0.len() {
                    break;
                }
                *digit = 0;
            }
        }
        pipelines
    }

    /// Evaluates every pipeline using all available CPUs.
    pub fn evaluate_all(&self, dm: &DecisionMatrix) -> Result<RanksComparator> {
        self.evaluate_all_with_jobs(dm, default_jobs())
    }

    /// Evaluates every pipeline on `jobs` worker threads.
    ///
    /// Output order is the expansion order regardless of `jobs`. All pipelines
    /// are attempted; failures are reported together.
    pub fn evaluate_all_with_jobs(
        &self,
        dm: &DecisionMatrix,
        jobs: usize,
    ) -> Result<RanksComparator> {
        let pipelines = self.expand();
        let outcomes = run_pipelines(&pipelines, dm, jobs)?;

        let mut results = Vec::with_capacity(outcomes.len());
        let mut failures = Vec::new();
        for (pipeline, outcome) in pipelines.iter().zip(outcomes) {
            match outcome {
                Ok(r) => results.push((pipeline.name().to_string(), r)),
                Err(e) => failures.push((pipeline.name().to_string(), e)),
            }
        }
        if !failures.is_empty() {
            return Err(Error::Pipelines(failures));
        }
        RanksComparator::new(results)
    }
}

pub fn default_jobs() -> usize {
    std::thread::available_parallelism()
        .map(NonZeroUsize::get)
        .unwrap_or(1)
}

fn run_pipelines(
    pipelines: &[Pipeline],
    dm: &DecisionMatrix,
    jobs: usize,
) -> Result<Vec<Result<RankResult>>> {
    if jobs <= 1 {
        return Ok(pipelines.iter().map(|p| p.evaluate(dm)).collect());
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Error::io("building worker pool", std::io::Error::other(e)))?;
    // indexed collect keeps expansion order
    Ok(pool.install(|| pipelines.par_iter().map(|p| p.evaluate(dm)).collect()))
}

fn unique_name(base: String, taken: &mut HashSet<String>) -> String {
    if taken.insert(base.clone()) {
        return base;
    }
    let name = (2..)
        .map(|k| format!("{base}-{k}"))
        .find(|candidate| !taken.contains(candidate))
        .expect("unbounded suffix search");
    taken.insert(name.clone());
    name
}
