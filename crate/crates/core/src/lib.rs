//! Exact algebra linking rational solutions of the fourth Painlevé equation to
//! rational extensions of the harmonic oscillator and their ladder operators.

pub mod cli;
pub mod diffop;
pub mod error;
pub mod exactpoly;
pub mod numlab;
pub mod painleve4;
pub mod susy;
pub mod verify;

pub use error::{Error, Result};
