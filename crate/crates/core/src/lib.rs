//! Irredundant and Nielsen-irredundant generating tuples of finite groups,
//! and prime-reduction evidence for rational matrix tuples.

pub mod arithmetic;
pub mod cli;
pub mod error;
pub mod field;
pub mod groups;
pub mod nielsen;
pub mod redundancy;

pub use error::{Error, Result};
