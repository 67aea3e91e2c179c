use alloc::string::String;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("vertex index out of range or repeated: ({i}, {j}) on {n} vertices")]
    BadVertex { i: usize, j: usize, n: usize },
    #[error("duplicate pair ({i}, {j})")]
    DuplicateEdge { i: usize, j: usize },
    #[error("invalid label {0}: finite labels start at 2")]
    BadLabel(u64),
    #[error("graph too small: need at least {need} vertices, got {got}")]
    TooSmall { need: usize, got: usize },
    #[error("forbidden label count {k} must be smaller than the alphabet size {m}")]
    BadForbidCount { k: u32, m: u32 },
    #[error("maximal clique budget of {budget} exceeded")]
    CliqueBudgetExceeded { budget: usize },
    #[error("sample space has {count} graphs, more than the budget of {budget}")]
    TooLarge { count: String, budget: u64 },
    #[error("unknown predicate `{0}`")]
    BadPredicate(String),
    #[error("sample count must be at least 1")]
    BadSamples,
    #[error("confidence must lie strictly between 0 and 1, got {0}")]
    BadConfidence(f64),
    #[error("invalid growth spec: {0}")]
    BadGrowth(String),
}
