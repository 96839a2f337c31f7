//! Cyclic codes over the chain ring `F2 + uF2` and their use as DNA codes.

pub mod bch;
pub mod code;
pub mod cyclotomic;
pub mod error;
pub mod families;
pub mod gf2;
pub mod packed;
pub mod ring;

pub use error::{CodeError, Result};
pub use gf2::BinPoly;

/// Default enumeration budget, as a log2 word count.
pub const DEFAULT_BUDGET: u32 = 24;
