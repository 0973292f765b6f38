//! Library surface of the command-line crate: instance files and the command
//! runners, shared by the `relhopf` binary and the acceptance suite.

pub mod instance;
pub mod runner;
