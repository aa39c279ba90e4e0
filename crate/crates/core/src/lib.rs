pub mod classifier;
pub mod comitants;
pub mod error;
pub mod lines;
pub mod poly;
pub mod rootstructure;

pub use comitants::{AffineComitants, ComitantTable, CubicSystem};
pub use error::Error;
