use thiserror::Error;

use crate::label::Label;

/// Errors raised by constructions, parsers and validators in this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("degenerate label {{{0}, {0}}}: the two identifiers must differ")]
    DegenerateLabel(u32),
    #[error("identifier {value} out of range [1, {modulus}]")]
    OutOfRange { value: i64, modulus: u32 },
    #[error("points {0:?}, {1:?} and {2:?} are collinear")]
    Collinear((i64, i64), (i64, i64), (i64, i64)),
    #[error("coordinate {0} exceeds the supported magnitude")]
    CoordinateTooLarge(i64),
    #[error("duplicate point {0:?}")]
    DuplicatePoint((i64, i64)),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("illegal flip: {0}")]
    IllegalFlip(String),
    #[error("invalid state: {0}")]
    InvalidState(String),
    #[error("unsupported parameters: {0}")]
    Unsupported(String),
    #[error("parity obstruction: {0}")]
    Parity(String),
    #[error("construction produced an invalid object: {0}")]
    Construction(String),
    #[error("label {0} is not in the label universe")]
    UnknownLabel(Label),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
