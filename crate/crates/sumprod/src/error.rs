use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("0 has no multiplicative inverse")]
    ZeroInverse,
    #[error("{0} is not an odd prime below 2^31")]
    NotPrime(u64),
    #[error("cross-ratio needs four pairwise distinct points")]
    DegenerateQuadruple,
    #[error("subgroup order {order} does not divide p-1 = {pm1}")]
    BadOrder { order: u32, pm1: u32 },
    #[error("requested size {size} exceeds p = {p}")]
    SizeTooLarge { size: u32, p: u32 },
    #[error("invalid family: {0}")]
    InvalidFamily(String),
    #[error("dilation factor must be nonzero")]
    ZeroDilation,
    #[error("ratio set is empty: divisor set contains only 0")]
    EmptyResult,
    #[error("set too small: need at least {need} elements, got {got}")]
    TooSmall { need: usize, got: usize },
    #[error("operation cost {cost} exceeds budget {budget}")]
    BudgetExceeded { cost: u64, budget: u64 },
    #[error("method unavailable: {0}")]
    MethodUnavailable(String),
    #[error("no points of the set lie in direction index {0}")]
    EmptyDirection(usize),
    #[error("not enough data: {0}")]
    InsufficientData(String),
    #[error("unknown check id: {0}")]
    UnknownCheck(String),
    #[error("unknown quantity: {0}")]
    UnknownQuantity(String),
    #[error("unknown suite: {0}")]
    UnknownSuite(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error("bad JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("parse error: {0}")]
    Parse(String),
}
