//! Corpus loading, report rendering, the command-line pipeline and the
//! annotation service around `termflux-core`.

pub mod annotations;
mod error;
pub mod html;
pub mod manifest;
pub mod pipeline;
pub mod report;
pub mod service;

pub use error::{Error, Result};
pub use termflux_core as core;
