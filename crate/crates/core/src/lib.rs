pub mod arith;
pub mod brauer;
pub mod cli;
pub mod enumerate;
pub mod error;
pub mod fp;
pub mod hilbert;
pub mod padic;
pub mod surface;
pub mod yamamoto;

pub use error::{Error, Result};
