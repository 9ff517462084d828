//! Library side of the `ncsym` command-line tool.

pub mod input;
pub mod verify;
