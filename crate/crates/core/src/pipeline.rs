//! Sequential pipelines: transformers applied left to right, then one aggregator.

use std::collections::HashMap;
use std::fmt;

use crate::aggregate::{Aggregator, RankResult};
use crate::error::{Error, Result};
use crate::matrix::DecisionMatrix;
use crate::transform::Transformer;

/// Anything that can sit in a pipeline.
#[derive(Debug, Clone, PartialEq)]
pub enum Component {
    Transform(Transformer),
    Aggregate(Aggregator),
}

impl Component {
    pub fn name(&self) -> String {
        match self {
            Component::Transform(t) => t.name(),
            Component::Aggregate(a) => a.name().to_string(),
        }
    }

    pub fn is_aggregator(&self) -> bool {
        matches!(self, Component::Aggregate(_))
    }
}

impl From<Transformer> for Component {
    fn from(t: Transformer) -> Self {
        Component::Transform(t)
    }
}

impl From<Aggregator> for Component {
    fn from(a: Aggregator) -> Self {
        Component::Aggregate(a)
    }
}

impl fmt::Display for Component {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Pipeline {
    name: String,
    steps: Vec<Transformer>,
    aggregator: Aggregator,
}

/// Joins component names with `+`, suffixing repeats (`MinMaxScaler-2`).
pub(crate) fn pipeline_name<'a>(names: impl IntoIterator<Item = &'a str>) -> String {
    let mut seen: HashMap<&str, usize> = HashMap::new();
    names
        .into_iter()
        .map(|name| {
            let count = seen.entry(name).or_insert(0);
            *count += 1;
            match *count {
                1 => name.to_string(),
                k => format!("{name}-{k}"),
            }
        })
        .collect::<Vec<_>>()
        .join("+")
}

impl Pipeline {
    /// Validates the component list and names the pipeline after its parts.
    pub fn new(components: Vec<Component>) -> Result<Self> {
        let names: Vec<String> = components.iter().map(Component::name).collect();
        let name = pipeline_name(names.iter().map(String::as_str));

        let aggregators = components.iter().filter(|c| c.is_aggregator()).count();
        if components.is_empty() {
            return Err(Error::EmptyPipeline);
        }
        if aggregators > 1 {
            return Err(Error::MultipleAggregators(aggregators));
        }
        if let Some(index) = components.iter().position(Component::is_aggregator) {
            if index + 1 != components.len() {
                return Err(Error::AggregatorNotLast {
                    name: names[index].clone(),
                    index,
                });
            }
        }

        let mut steps = Vec::with_capacity(components.len() - 1);
        let mut aggregator = None;
        for component in components {
            match component {
                Component::Transform(t) => steps.push(t),
                Component::Aggregate(a) => aggregator = Some(a),
            }
        }
        let aggregator = aggregator.ok_or(Error::MissingAggregator)?;
        Ok(Pipeline {
            name,
            steps,
            aggregator,
        })
    }

    pub(crate) fn renamed(mut self, name: String) -> Self {
        self.name = name;
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn steps(&self) -> &[Transformer] {
        &self.steps
    }

    pub fn aggregator(&self) -> Aggregator {
        self.aggregator
    }

    /// Runs every step in order and aggregates; the result is labelled with the pipeline name.
    pub fn evaluate(&self, dm: &DecisionMatrix) -> Result<RankResult> {
        let wrap = |index: usize, name: String| {
            move |source: Error| Error::Step {
                index,
                name,
                source: Box::new(source),
            }
        };
        let mut current: Option<DecisionMatrix> = None;
        for (index, step) in self.steps.iter().enumerate() {
            let input = current.as_ref().unwrap_or(dm);
            current = Some(step.apply(input).map_err(wrap(index, step.name()))?);
        }
        let input = current.as_ref().unwrap_or(dm);
        self.aggregator
            .evaluate(input)
            .map(|r| r.with_method(self.name.clone()))
            .map_err(wrap(self.steps.len(), self.aggregator.name().to_string()))
    }
}

impl fmt::Display for Pipeline {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name)
    }
}

/// Shorthand for [`Pipeline::new`].
pub fn make_pipeline(components: Vec<Component>) -> Result<Pipeline> {
    Pipeline::new(components)
}
