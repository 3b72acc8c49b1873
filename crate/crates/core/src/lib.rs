//! Exact computations with dendriform algebras: identity checkers, cohomology,
//! extensions, deformations, free objects and homotopy structures.

pub mod algebra;
pub mod cli;
pub mod cohomology;
pub mod combinatorics;
pub mod error;
pub mod exactmat;
pub mod extdef;
pub mod fixtures;
pub mod free;
pub mod homotopy;
pub mod io;
pub mod report;

pub use error::{Error, Result};
