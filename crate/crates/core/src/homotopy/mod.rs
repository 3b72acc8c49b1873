//! Truncated Dend∞ and A∞ structures on finite graded spaces.
//!
//! A space is zero outside its degree range, so a family stored on it is an honest structure and every
//! identity is checked on all basis tuples. Maps have degree `k − 2`.

mod family;
mod graded;

pub use family::*;
pub use graded::*;

#[cfg(test)]
mod tests;
