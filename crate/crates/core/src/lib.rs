//! Barycentric Gegenbauer integration matrices.

pub mod barycentric;
pub mod cli;
pub mod benchmark;
pub mod csv;
pub mod error;
pub mod gauss;
pub mod gim;
pub mod optimal;
pub mod poly;
pub mod reference;
pub mod solvers;

pub use error::{Collision, Error, Result};
pub use poly::GegenbauerParam;
