pub mod bijections;
pub mod cli;
pub mod error;
pub mod paths;
pub mod perm;
pub mod poly;
pub mod riordan;
pub mod trees;
pub mod verify;
pub mod triangle;

pub use error::{Error, Result};
