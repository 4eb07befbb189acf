pub mod affine;
pub mod catalog;
pub mod cli;
pub mod complex;
pub mod decomposition;
pub mod error;
pub mod io;
pub mod lie;
pub mod linalg;
pub mod obstructions;
pub mod random;

pub use error::{Error, Result};
