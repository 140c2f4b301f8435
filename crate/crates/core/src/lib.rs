//! Core algorithms for studying how multiword terms shorten in specialized text.
//!
//! Everything here is pure computation over in-memory data and builds without
//! `std` (an allocator is required). File formats, HTML cleanup, the CLI and the
//! annotation service live in the `termflux` crate.
//!
//! The pipeline, bottom-up:
//!
//! - [`model`]: chunked terms, reduced forms, documents and occurrences.
//! - [`inventory`]: the `|`-separated term inventory format.
//! - [`lattice`]: reduced-form generation, the reduction lattice and shape labels.
//! - [`scan`]: offset-exact, longest-match occurrence scanning.
//! - [`anaphora`]: anaphoric trees, per-document metrics and densities.
//! - [`lowess`]: locally weighted linear smoothing for trend curves.
//! - [`chrono`]: generalized datation, onset means, `xi` and the term census.
//! - [`kde`]: Gaussian kernel density over time values.
//! - [`classify`]: rule-based judgments on reduction couples.

#![cfg_attr(not(any(feature = "std", test)), no_std)]

extern crate alloc;

pub mod anaphora;
pub mod chrono;
pub mod classify;
mod error;
pub mod inventory;
pub mod kde;
pub mod lattice;
pub mod lowess;
pub mod model;
pub mod scan;
pub mod stopwords;
mod util;

pub use error::{Error, Result};
pub use model::{
    Category, Chunk, ChunkSet, ComplexTerm, Corpus, DocId, Document, FormKey, Language, Occurrence, OccurrenceLabel,
    PosHint, ReducedForm, Shape, TermId, YearMonth,
};
