use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("not a partition (parts must be non-increasing): {0:?}")]
    InvalidPartition(Vec<u32>),

    #[error("not a dominant weight (entries must be non-increasing): {0:?}")]
    InvalidWeight(Vec<i64>),

    #[error("invalid flag space: {0}")]
    InvalidSpace(String),

    #[error("malformed bundle: {0}")]
    MalformedBundle(String),

    #[error("weight {weight:?} needs more than {n} rows")]
    RankTooSmall { weight: Vec<i64>, n: usize },

    #[error("weight {0:?} lies outside the range covered by the pushforward rule")]
    OutOfBound(Vec<i64>),

    #[error("negative weight {0:?}; normalize by a determinant twist first")]
    NegativeWeight(Vec<i64>),

    #[error("localization sum is not an integer: {0}")]
    NonIntegralEuler(String),

    #[error("collection has not passed verification")]
    NotVerified,

    #[error("index table has no entry for residue {0}")]
    MissingIndex(u64),

    #[error("invalid algebra: {0}")]
    InvalidAlgebra(String),

    #[error("invalid fiber table: {0}")]
    InvalidFiberTable(String),

    #[error("stage {stage} cannot be modelled: {reason}")]
    UnsupportedStage { stage: usize, reason: String },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("i/o error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
