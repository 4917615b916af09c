//! Exact factorization arithmetic for monoids of ideals.

pub mod config;
pub mod error;
pub mod factorcore;
pub mod idealmonoid;
pub mod polyarith;
pub mod powermonoid;
pub mod zerosum;

pub use config::Caps;
pub use error::{Error, Result};
