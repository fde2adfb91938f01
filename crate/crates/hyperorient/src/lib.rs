//! Text formats, seeded instance generators, the acceptance suites and the
//! command-line front end for `hyperorient-core`.

pub mod cli;
pub mod format;
pub mod generate;
pub mod suite;
