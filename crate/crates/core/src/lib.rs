//! Exact verification of Hopf-algebraic structures in braided categories.

pub mod bosonization;
pub mod context;
pub mod double;
pub mod error;
pub mod examples;
pub mod functors;
pub mod hopf;
pub mod io;
pub mod multilinear;
pub mod report;
pub mod scalars;
pub mod suite;
pub mod yd;

pub use error::{Error, Result};
