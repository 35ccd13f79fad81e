use num_bigint::BigUint;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("ground sets differ: {left} vs {right} elements")]
    SizeMismatch { left: usize, right: usize },

    #[error("not a permutation: {0}")]
    NotAPermutation(String),

    #[error("index out of range: {0}")]
    OutOfRange(String),

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("invalid rotation system: {0}")]
    InvalidRotation(String),

    #[error("enumeration needs {required} items but the budget is {budget}")]
    BudgetExceeded { required: BigUint, budget: u64 },

    #[error("scan limit exceeded: n_max = {requested} but the limit is {limit} ({work} {unit} requested)")]
    ScanLimit {
        requested: usize,
        limit: usize,
        work: BigUint,
        unit: &'static str,
    },

    #[error("graph is disconnected ({components} components)")]
    Disconnected { components: usize },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("inexact division while normalizing {0}")]
    InexactDivision(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
