use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("tuple is not weakly decreasing: {0:?}")]
    NotDominant(Vec<i64>),
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("rank too small: need r + s <= n, got r = {r}, s = {s}, n = {n}")]
    RankTooSmall { r: usize, s: usize, n: usize },
    #[error("shape mismatch: ({0}, {1}) vs ({2}, {3})")]
    ShapeMismatch(usize, usize, usize, usize),
    #[error("bipartition ({0}) is not a label of B_{{{1},{2}}}")]
    NotInLambdaRS(String, usize, usize),
    #[error("arrow diagrams differ in their single/cross/empty pattern")]
    IncompatibleDiagrams,
    #[error("not applicable: {0}")]
    NotApplicable(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidParams(msg.into())
}
