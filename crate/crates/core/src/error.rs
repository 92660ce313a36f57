use thiserror::Error;

/// Errors reported by encoders, decoders and parameter constructors.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CodecError {
    /// A word has a length the operation cannot accept.
    #[error("length {actual} not accepted, expected {expected}")]
    Length { expected: String, actual: usize },
    /// A symbol lies outside the alphabet.
    #[error("symbol {symbol} at index {index} is outside an alphabet of size {q}")]
    Symbol { index: usize, symbol: u8, q: u8 },
    /// A parameter set violates a construction constraint.
    #[error("invalid parameters: {0}")]
    Params(String),
    /// The received word is not within one error of any codeword.
    #[error("decode failure: {0}")]
    DecodeFailure(String),
    /// The encoder could not produce a constrained word.
    #[error("encode failure: {0}")]
    EncodeFailure(String),
    /// A value does not fit in the requested number of digits.
    #[error("value {value} does not fit in {width} digits of base {base}")]
    Overflow { value: u64, base: u8, width: usize },
    /// Text could not be parsed into a word.
    #[error("parse error: {0}")]
    Parse(String),
}

impl CodecError {
    pub(crate) fn length(expected: impl ToString, actual: usize) -> Self {
        CodecError::Length {
            expected: expected.to_string(),
            actual,
        }
    }

    pub(crate) fn decode(msg: impl Into<String>) -> Self {
        CodecError::DecodeFailure(msg.into())
    }

    pub(crate) fn params(msg: impl Into<String>) -> Self {
        CodecError::Params(msg.into())
    }
}

/// Result alias used throughout the crate.
pub type Result<T> = std::result::Result<T, CodecError>;
