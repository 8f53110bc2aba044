//! Exact Chow-ring, Riemann–Roch and Borel–Weil–Bott computations for
//! orbital degeneracy loci.

#![allow(clippy::type_complexity, clippy::too_many_arguments, clippy::needless_range_loop)]

pub mod bott;
pub mod chow;
pub mod cli;
pub mod forms;
pub mod nilpotent;
pub mod rational;
pub mod report;
pub mod sheaves;
pub mod symfun;
pub mod verify;

pub use rational::Rat;
