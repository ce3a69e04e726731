//! Finite stratified simplicial sets, orientals, Street nerves and
//! complicial lifting checks.

pub mod budget;
pub mod category;
pub mod cli;
pub mod error;
pub mod fixtures;
pub mod io;
pub mod lifting;
pub mod nerve;
pub mod omega;
pub mod orientals;
pub mod shapes;
pub mod simplicial;

pub use budget::Budget;
pub use error::{Error, Result};
