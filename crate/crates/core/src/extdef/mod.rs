//! Abelian extensions and truncated deformations of oriented dendriform algebras.

mod deformation;
mod extension;

pub use deformation::*;
pub use extension::*;

#[cfg(test)]
mod tests;
