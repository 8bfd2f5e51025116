#![allow(clippy::needless_range_loop, clippy::too_many_arguments)]

pub mod analysis;
pub mod chartab;
pub mod cli;
pub mod codegree;
pub mod corpus;
pub mod cyclo;
pub mod error;
pub mod galois;
pub mod group;
pub mod pcparse;
pub mod quasiperm;

pub use analysis::Analysis;
pub use error::{Error, Result};
