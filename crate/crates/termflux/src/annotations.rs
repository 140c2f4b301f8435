//! Expert annotations: an append-only JSONL log and the state it replays to.
//!
//! Document records carry `in_domain` and/or `category`; occurrence records
//! carry a `label`. For every target and field the latest record wins.

use std::collections::BTreeMap;
use std::fs::{File, OpenOptions};
use std::io::Write;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use termflux_core::{Category, Corpus, DocId, OccurrenceLabel};

use crate::manifest::read_to_string;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DocumentVerdict {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub in_domain: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub category: Option<Category>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OccurrenceVerdict {
    pub label: OccurrenceLabel,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Verdict {
    Occurrence(OccurrenceVerdict),
    Document(DocumentVerdict),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AnnotationRecord {
    /// A document id or an occurrence id (`doc@pos:term`).
    pub target: String,
    pub verdict: Verdict,
    pub annotator: String,
    /// RFC 3339 timestamp.
    pub timestamp: String,
}

impl AnnotationRecord {
    /// Checks the parts of a record that do not depend on the corpus.
    pub fn validate(&self) -> Result<()> {
        if self.target.is_empty() {
            return Err(Error::Annotation("empty target".into()));
        }
        if self.annotator.trim().is_empty() {
            return Err(Error::Annotation("empty annotator".into()));
        }
        if let Verdict::Document(v) = self.verdict {
            if v.in_domain.is_none() && v.category.is_none() {
                return Err(Error::Annotation("document verdict sets neither in_domain nor category".into()));
            }
            if v.category == Some(Category::Unknown) {
                return Err(Error::Annotation("category must be 1, 2 or 3".into()));
            }
        }
        chrono::DateTime::parse_from_rfc3339(&self.timestamp)
            .map_err(|e| Error::Annotation(format!("timestamp `{}`: {e}", self.timestamp)))?;
        Ok(())
    }
}

/// What annotation targets exist.
pub trait Targets {
    fn has_document(&self, id: &str) -> bool;
    fn has_occurrence(&self, id: &str) -> bool;
}

/// Full check of a record against known targets: malformed records give
/// [`Error::Annotation`], unknown targets [`Error::UnknownTarget`].
pub fn check_record(record: &AnnotationRecord, targets: &impl Targets) -> Result<()> {
    record.validate()?;
    let is_doc = targets.has_document(&record.target);
    let is_occ = targets.has_occurrence(&record.target);
    match record.verdict {
        Verdict::Document(_) if is_doc => Ok(()),
        Verdict::Occurrence(_) if is_occ => Ok(()),
        Verdict::Document(_) if is_occ => Err(Error::Annotation("document verdict on an occurrence".into())),
        Verdict::Occurrence(_) if is_doc => Err(Error::Annotation("occurrence label on a document".into())),
        _ => Err(Error::UnknownTarget(record.target.clone())),
    }
}

/// Latest verdicts per target.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct AnnotationState {
    documents: BTreeMap<String, DocumentVerdict>,
    labels: BTreeMap<String, OccurrenceLabel>,
}

impl AnnotationState {
    pub fn replay<'a>(records: impl IntoIterator<Item = &'a AnnotationRecord>) -> Self {
        let mut state = Self::default();
        for r in records {
            state.apply(r);
        }
        state
    }

    pub fn apply(&mut self, record: &AnnotationRecord) {
        match record.verdict {
            Verdict::Document(v) => {
                let entry = self
                    .documents
                    .entry(record.target.clone())
                    .or_insert(DocumentVerdict { in_domain: None, category: None });
                entry.in_domain = v.in_domain.or(entry.in_domain);
                entry.category = v.category.or(entry.category);
            }
            Verdict::Occurrence(v) => {
                self.labels.insert(record.target.clone(), v.label);
            }
        }
    }

    pub fn document(&self, id: &str) -> Option<DocumentVerdict> {
        self.documents.get(id).copied()
    }

    pub fn label(&self, occurrence_id: &str) -> Option<OccurrenceLabel> {
        self.labels.get(occurrence_id).copied()
    }

    pub fn labels(&self) -> &BTreeMap<String, OccurrenceLabel> {
        &self.labels
    }

    /// The corpus with document verdicts applied.
    pub fn apply_to(&self, corpus: &Corpus) -> Corpus {
        let documents = corpus
            .documents()
            .iter()
            .map(|d| {
                let mut d = d.clone();
                if let Some(v) = self.documents.get(d.id.as_str()) {
                    if let Some(in_domain) = v.in_domain {
                        d.validated = in_domain;
                    }
                    if let Some(category) = v.category {
                        d.category = category;
                    }
                }
                d
            })
            .collect();
        Corpus::new(corpus.id.clone(), documents).expect("document ids are unchanged")
    }
}

/// Parses JSONL annotation records; blank lines are skipped.
pub fn parse_log(text: &str, path: &Path) -> Result<Vec<AnnotationRecord>> {
    let mut out = Vec::new();
    for (n, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let record: AnnotationRecord = serde_json::from_str(line)
            .map_err(|e| Error::Parse { path: path.to_path_buf(), message: format!("line {}: {e}", n + 1) })?;
        record
            .validate()
            .map_err(|e| Error::Parse { path: path.to_path_buf(), message: format!("line {}: {e}", n + 1) })?;
        out.push(record);
    }
    Ok(out)
}

pub fn read_log(path: &Path) -> Result<Vec<AnnotationRecord>> {
    parse_log(&read_to_string(path)?, path)
}

/// Append-only writer over a JSONL log file.
#[derive(Debug)]
pub struct AnnotationLog {
    path: PathBuf,
    file: File,
}

impl AnnotationLog {
    /// Opens (creating if needed) the log and returns it with the records
    /// already in it.
    pub fn open(path: &Path) -> Result<(Self, Vec<AnnotationRecord>)> {
        let file =
            OpenOptions::new().create(true).append(true).read(true).open(path).map_err(|e| Error::io(path, e))?;
        let records = read_log(path)?;
        Ok((Self { path: path.to_path_buf(), file }, records))
    }

    pub fn path(&self) -> &Path {
        &self.path
    }

    pub fn append(&mut self, record: &AnnotationRecord) -> Result<()> {
        let mut line = serde_json::to_string(record)?;
        line.push('\n');
        self.file.write_all(line.as_bytes()).and_then(|()| self.file.sync_data()).map_err(|e| Error::io(&self.path, e))
    }
}

/// Document and occurrence ids of a corpus and its scan.
#[derive(Debug, Clone, Default)]
pub struct TargetIndex {
    pub documents: std::collections::BTreeSet<DocId>,
    pub occurrences: std::collections::BTreeSet<String>,
}

impl Targets for TargetIndex {
    fn has_document(&self, id: &str) -> bool {
        self.documents.contains(&DocId::from(id))
    }

    fn has_occurrence(&self, id: &str) -> bool {
        self.occurrences.contains(id)
    }
}
