//! Error-correcting codes for binary words and DNA strands.

pub mod balance;
pub mod binary;
pub mod channel;
pub mod edit;
pub mod error;
pub mod indel;
pub mod words;

pub use error::{CodecError, Result};
