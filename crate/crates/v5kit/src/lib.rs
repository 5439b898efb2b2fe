//! File formats, output rendering and the command-line front end for
//! [`v5kit_core`].

pub mod claims;
pub mod cli;
pub mod format;
pub mod matrices;
