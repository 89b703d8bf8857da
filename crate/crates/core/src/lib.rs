pub mod analytic;
pub mod compliance;
pub mod entropy;
pub mod error;
pub mod exact;
pub mod graph;
pub mod pauli;
pub mod prober;

pub use error::{Error, Result};
