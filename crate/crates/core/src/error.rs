use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("decision matrix has no {0}")]
    EmptyMatrix(&'static str),

    #[error("dimension mismatch in {field}: expected {expected}, found {found}")]
    Dimension {
        field: String,
        expected: usize,
        found: usize,
    },

    #[error("duplicate {field} name '{name}' at index {index}")]
    DuplicateName {
        field: &'static str,
        name: String,
        index: usize,
    },

    #[error("empty {field} name at index {index}")]
    EmptyName { field: &'static str, index: usize },

    #[error("non-finite value {value} in {field} at row {row}, column {column}")]
    NonFinite {
        field: &'static str,
        row: usize,
        column: usize,
        value: f64,
    },

    #[error("invalid weight {value} at index {index}: weights must be finite and >= 0")]
    InvalidWeight { index: usize, value: f64 },

    #[error("weights sum to zero")]
    ZeroWeights,

    #[error("criterion '{criterion}' is minimised but alternative '{alternative}' has non-positive value {value}; reciprocal is undefined")]
    NonPositive {
        criterion: String,
        alternative: String,
        value: f64,
    },

    #[error("unknown criterion '{0}'")]
    UnknownCriterion(String),

    #[error("all alternatives filtered")]
    AllFiltered,

    #[error("sum of absolute values is zero for {0}")]
    ZeroSum(String),

    #[error("euclidean norm is zero for {0}")]
    ZeroNorm(String),

    #[error(
        "criterion '{0}' is minimised; invert or negate minimised criteria before the weighted sum"
    )]
    MinimizedCriterion(String),

    #[error("no scores to rank")]
    EmptyScores,

    #[error("pipeline needs at least one component")]
    EmptyPipeline,

    #[error("aggregator must be last (found '{name}' at position {index})")]
    AggregatorNotLast { name: String, index: usize },

    #[error("pipeline has {0} aggregators; exactly one is allowed")]
    MultipleAggregators(usize),

    #[error("pipeline has no aggregator as its last component")]
    MissingAggregator,

    #[error("step {index} ({name}): {source}")]
    Step {
        index: usize,
        name: String,
        #[source]
        source: Box<Error>,
    },

    #[error("invalid combinatorial spec: {0}")]
    InvalidSpec(String),

    #[error("{} pipeline(s) failed: {}", .0.len(), format_failures(.0))]
    Pipelines(Vec<(String, Error)>),

    #[error("incomparable rankings: alternative sets differ ('{first}' vs '{other}')")]
    IncomparableRankings { first: String, other: String },

    #[error("duplicate ranking name '{0}'")]
    DuplicateRanking(String),

    #[error("need at least {needed} {what}, found {found}")]
    TooFew {
        what: &'static str,
        needed: usize,
        found: usize,
    },

    #[error("unknown component kind '{0}'")]
    UnknownKind(String),

    #[error("config error at {location}: {message}")]
    Config { location: String, message: String },

    #[error("csv error at row {row}, column {column}: {message}")]
    Csv {
        row: usize,
        column: String,
        message: String,
    },

    #[error(transparent)]
    CsvRead(#[from] csv::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error("{context}: {source}")]
    Io {
        context: String,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    pub(crate) fn io(context: impl Into<String>, source: std::io::Error) -> Self {
        Error::Io {
            context: context.into(),
            source,
        }
    }

    pub(crate) fn config(location: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Config {
            location: location.into(),
            message: message.into(),
        }
    }

    /// Short stable tag for machine-readable error output.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::EmptyMatrix(_) => "empty_matrix",
            Error::Dimension { .. } => "dimension",
            Error::DuplicateName { .. } => "duplicate_name",
            Error::EmptyName { .. } => "empty_name",
            Error::NonFinite { .. } => "non_finite",
            Error::InvalidWeight { .. } => "invalid_weight",
            Error::ZeroWeights => "zero_weights",
            Error::NonPositive { .. } => "domain",
            Error::UnknownCriterion(_) => "unknown_criterion",
            Error::AllFiltered => "all_filtered",
            Error::ZeroSum(_) => "zero_sum",
            Error::ZeroNorm(_) => "zero_norm",
            Error::MinimizedCriterion(_) => "minimized_criterion",
            Error::EmptyScores => "empty_scores",
            Error::EmptyPipeline => "empty_pipeline",
            Error::AggregatorNotLast { .. } => "aggregator_not_last",
            Error::MultipleAggregators(_) => "multiple_aggregators",
            Error::MissingAggregator => "missing_aggregator",
            Error::Step { .. } => "step",
            Error::InvalidSpec(_) => "invalid_spec",
            Error::Pipelines(_) => "pipelines",
            Error::IncomparableRankings { .. } => "incomparable_rankings",
            Error::DuplicateRanking(_) => "duplicate_ranking",
            Error::TooFew { .. } => "too_few",
            Error::UnknownKind(_) => "unknown_kind",
            Error::Config { .. } => "config",
            Error::Csv { .. } | Error::CsvRead(_) => "csv",
            Error::Json(_) => "json",
            Error::Io { .. } => "io",
        }
    }

    /// Strips [`Error::Step`] wrappers.
    pub fn root(&self) -> &Error {
        match self {
            Error::Step { source, .. } => source.root(),
            other => other,
        }
    }
}

fn format_failures(failures: &[(String, Error)]) -> String {
    failures
        .iter()
        .map(|(name, err)| format!("[{name}] {err}"))
        .collect::<Vec<_>>()
        .join("; ")
}
