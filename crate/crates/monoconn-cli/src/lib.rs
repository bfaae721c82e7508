//! Library half of the command-line binary: the colouring file format and
//! the flat report emitter, exposed so integration tests can parse what the
//! binary prints.

pub mod format;
pub mod report;
