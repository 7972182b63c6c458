pub mod brocard;
pub mod constructions;
pub mod correspondence;
pub mod error;
pub mod explorer;
pub mod kernel;
pub mod perspectivity;
pub mod ratios;

pub use error::{Error, Result};
