//! Generalized staircase tableaux, set-parameterized jeu de taquin, and the
//! bijections and generating functions built on them.

pub mod bijections;
pub mod error;
pub mod jdt;
pub mod shapes;
pub mod symfunc;
pub mod tableaux;
pub mod verify;

pub use error::{Error, Result};
