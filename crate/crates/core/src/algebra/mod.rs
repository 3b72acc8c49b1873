//! Finite-dimensional dendriform-type algebras, their symmetries and representations.

mod bilinear;
mod dendriform;
mod group;
mod rota_baxter;

pub use bilinear::Bilinear;
pub use dendriform::*;
pub use group::*;
pub use rota_baxter::*;
