pub mod cli;
pub mod error;
pub mod exactalg;
pub mod formulas;
pub mod lattice;
pub mod paths;
pub mod planepartitions;
pub mod regions;
pub mod render;
pub mod schur;
pub mod shapes;
pub mod tilings;
pub mod verify;

pub use error::{Error, Result};
