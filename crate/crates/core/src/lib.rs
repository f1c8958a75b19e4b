//! Fortuitous flip sequences for the burnt pancake problem.

pub mod canonical;
pub mod classify;
pub mod cli;
pub mod compose;
pub mod error;
pub mod format;
pub mod oracle;
pub mod patterns;
pub mod perm;
pub mod potential;
pub mod search;

pub use error::{Error, Result};
pub use perm::{FlipSequence, SignedPerm};
