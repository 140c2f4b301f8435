//! Corpus manifests and term inventories on disk.
//!
//! A manifest is one JSON document:
//!
//! ```json
//! {
//!   "id": "veterinaire",
//!   "language": "fr",
//!   "documents": [
//!     {"id": "d1", "path": "d1.html", "date": "2005-05", "category": 1,
//!      "domain": "veterinaire", "domain_fast_evolving": false}
//!   ]
//! }
//! ```
//!
//! Each document gives either a `path` (relative to the manifest) or its
//! `text` inline. `.html`, `.htm` and `.xhtml` files are cleaned with
//! [`strip_html`]; anything else is read as UTF-8 text. `validated`
//! defaults to `true`.

use std::path::{Path, PathBuf};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use termflux_core::inventory::parse_inventory;
use termflux_core::{Category, ComplexTerm, Corpus, DocId, Document, Language, YearMonth};

use crate::html::strip_html;
use crate::{Error, Result};

/// Environment variable naming the directory that relative input paths fall
/// back to.
pub const DATA_DIR_VAR: &str = "TERMFLUX_DATA_DIR";

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Manifest {
    pub id: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub language: Option<Language>,
    pub documents: Vec<ManifestEntry>,
}

fn yes() -> bool {
    true
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ManifestEntry {
    pub id: DocId,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub path: Option<PathBuf>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub text: Option<String>,
    #[serde(default)]
    pub date: Option<YearMonth>,
    #[serde(default)]
    pub category: Category,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub language: Option<Language>,
    #[serde(default)]
    pub domain: String,
    #[serde(default)]
    pub domain_fast_evolving: bool,
    #[serde(default = "yes")]
    pub validated: bool,
}

/// `path` as given when it exists or is absolute, otherwise under
/// `$TERMFLUX_DATA_DIR` when that is set.
pub fn resolve_data_path(path: &Path) -> PathBuf {
    if path.is_absolute() || path.exists() {
        return path.to_path_buf();
    }
    match std::env::var_os(DATA_DIR_VAR) {
        Some(dir) => Path::new(&dir).join(path),
        None => path.to_path_buf(),
    }
}

pub fn read_to_string(path: &Path) -> Result<String> {
    let bytes = std::fs::read(path).map_err(|e| Error::io(path, e))?;
    String::from_utf8(bytes).map_err(|e| Error::Utf8 { path: path.to_path_buf(), offset: e.utf8_error().valid_up_to() })
}

pub fn parse_manifest(text: &str, path: &Path) -> Result<Manifest> {
    serde_json::from_str(text).map_err(|e| Error::Parse { path: path.to_path_buf(), message: e.to_string() })
}

fn is_html(path: &Path) -> bool {
    path.extension()
        .and_then(|e| e.to_str())
        .is_some_and(|e| matches!(e.to_ascii_lowercase().as_str(), "html" | "htm" | "xhtml"))
}

/// Reads one document file, cleaning HTML.
pub fn read_document_text(path: &Path) -> Result<String> {
    if is_html(path) {
        let bytes = std::fs::read(path).map_err(|e| Error::io(path, e))?;
        strip_html(&bytes).map_err(|e| match e {
            Error::InvalidUtf8(offset) => Error::Utf8 { path: path.to_path_buf(), offset },
            other => other,
        })
    } else {
        read_to_string(path)
    }
}

/// Loads the manifest at `path` and every document it lists.
pub fn load_manifest(path: &Path) -> Result<Corpus> {
    let path = resolve_data_path(path);
    let manifest = parse_manifest(&read_to_string(&path)?, &path)?;
    let base = path.parent().unwrap_or(Path::new("")).to_path_buf();
    manifest_to_corpus(manifest, &base)
}

/// Builds the corpus of a parsed manifest; relative document paths are taken
/// from `base`.
pub fn manifest_to_corpus(manifest: Manifest, base: &Path) -> Result<Corpus> {
    let default_language = manifest.language.clone().unwrap_or_default();
    let documents = manifest
        .documents
        .into_par_iter()
        .map(|entry| {
            let text = match (&entry.path, entry.text) {
                (Some(p), None) => read_document_text(&base.join(p))?,
                (None, Some(text)) => text,
                _ => return Err(Error::DocumentSource(entry.id.to_string())),
            };
            let mut doc = Document::new(entry.id, text);
            doc.date = entry.date;
            doc.category = entry.category;
            doc.language = entry.language.unwrap_or_else(|| default_language.clone());
            doc.domain = entry.domain;
            doc.domain_fast_evolving = entry.domain_fast_evolving;
            doc.validated = entry.validated;
            Ok(doc)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Corpus::new(manifest.id, documents)?)
}

/// A self-contained manifest with every text inline; loading it yields the
/// same corpus.
pub fn corpus_to_manifest(corpus: &Corpus) -> Manifest {
    Manifest {
        id: corpus.id.clone(),
        language: None,
        documents: corpus
            .documents()
            .iter()
            .map(|d| ManifestEntry {
                id: d.id.clone(),
                path: None,
                text: Some(d.text().to_owned()),
                date: d.date,
                category: d.category,
                language: Some(d.language.clone()),
                domain: d.domain.clone(),
                domain_fast_evolving: d.domain_fast_evolving,
                validated: d.validated,
            })
            .collect(),
    }
}

/// Parses a term inventory file.
pub fn load_terms(path: &Path, default_language: &Language) -> Result<Vec<ComplexTerm>> {
    let path = resolve_data_path(path);
    let text = read_to_string(&path)?;
    parse_inventory(&text, default_language).map_err(|e| Error::Parse { path, message: e.to_string() })
}
