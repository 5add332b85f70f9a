use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("group of order {order} exceeds the table-size guard of {limit}")]
    GuardExceeded { order: u64, limit: u64 },

    #[error("malformed group table: {0}")]
    MalformedGroup(String),

    #[error("element {0} is not an involution")]
    NotAnInvolution(usize),

    #[error("element set is not a subgroup: {0}")]
    NotASubgroup(String),

    #[error("group {0} is not simple")]
    NotSimple(String),

    #[error("character table computation failed: {0}")]
    CharacterTable(String),

    #[error("irrep decomposition failed: {0}")]
    Decomposition(String),

    #[error("base-group condition fails: {0}")]
    ConditionFails(String),

    #[error("conditional distribution undefined: projector has rank zero")]
    ZeroRank,

    #[error("corrupted character data: {0}")]
    CorruptedCharacter(String),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}
