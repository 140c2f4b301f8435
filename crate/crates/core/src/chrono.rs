//! Term chronology over a dated corpus.
//!
//! A document dated year `y`, month `m` has datation `T = y + (m - 1)/12`.
//! Generalized datation `T*` extends `T` to every character: it runs linearly
//! from a document's start time to the next document's start time as the
//! character position goes from 0 to the document length, so every
//! occurrence gets a unique time consistent with both the dates and the text
//! order.
//!
//! Two situations are not covered by the pure definition:
//!
//! - The last date has no successor. Its documents end at `T + g`, where `g`
//!   is the median gap between consecutive distinct dates (1/12 year when
//!   there is a single date).
//! - Several documents can share a date. They are ordered by id and split the
//!   interval up to the next date in proportion to their character counts,
//!   which keeps `T*` strictly increasing along the corpus.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::ToString;
use alloc::vec::Vec;

use serde::Serialize;

use crate::anaphora::OccurrenceKind;
use crate::model::{ComplexTerm, DocId, Occurrence, TermId, YearMonth};
use crate::util::median;
use crate::{Error, Result};

/// Default number of leading occurrences in the onset means.
pub const DEFAULT_ONSET_COUNT: usize = 100;

/// End-time gap used when the corpus has a single distinct date.
pub const SINGLE_DATE_GAP: f64 = 1.0 / 12.0;

#[derive(Debug, Clone, PartialEq)]
struct Span {
    start: f64,
    end: f64,
    char_count: usize,
}

/// Time interval of every document of a dated corpus.
#[derive(Debug, Clone, PartialEq)]
pub struct ChronoCorpus {
    order: Vec<DocId>,
    spans: BTreeMap<DocId, Span>,
}

impl ChronoCorpus {
    /// `documents` yields `(id, date, char_count)`; order does not matter.
    pub fn new<I>(documents: I) -> Result<Self>
    where
        I: IntoIterator<Item = (DocId, Option<YearMonth>, usize)>,
    {
        let mut dated = Vec::new();
        for (id, date, chars) in documents {
            let date = date.ok_or_else(|| Error::UndatedDocument(id.to_string()))?;
            dated.push((date, id, chars));
        }
        dated.sort();
        if let Some(w) = dated.windows(2).find(|w| w[0].1 == w[1].1) {
            return Err(Error::DuplicateDocument(w[0].1.to_string()));
        }

        let times: Vec<f64> = {
            let distinct: BTreeSet<YearMonth> = dated.iter().map(|d| d.0).collect();
            distinct.into_iter().map(YearMonth::datation).collect()
        };
        let gaps: Vec<f64> = times.windows(2).map(|w| w[1] - w[0]).collect();
        let last_gap = median(&gaps).unwrap_or(SINGLE_DATE_GAP);

        let mut spans = BTreeMap::new();
        let mut order = Vec::with_capacity(dated.len());
        let mut group_start = 0;
        for (g, &t) in times.iter().enumerate() {
            let next = times.get(g + 1).copied().unwrap_or(t + last_gap);
            let group_end =
                dated[group_start..].iter().position(|d| d.0.datation() != t).map_or(dated.len(), |k| group_start + k);
            let group = &dated[group_start..group_end];
            let total: usize = group.iter().map(|d| d.2).sum();
            let width = next - t;
            let mut cumulative = 0usize;
            for (k, (_, id, chars)) in group.iter().enumerate() {
                let (lo, hi) = if total > 0 {
                    (cumulative as f64 / total as f64, (cumulative + chars) as f64 / total as f64)
                } else {
                    let m = group.len() as f64;
                    (k as f64 / m, (k + 1) as f64 / m)
                };
                cumulative += chars;
                spans.insert(id.clone(), Span { start: t + lo * width, end: t + hi * width, char_count: *chars });
                order.push(id.clone());
            }
            group_start = group_end;
        }
        Ok(Self { order, spans })
    }

    /// Documents in chronological order.
    pub fn order(&self) -> &[DocId] {
        &self.order
    }

    /// `(start, end)` times of a document.
    pub fn interval(&self, doc: &DocId) -> Option<(f64, f64)> {
        self.spans.get(doc).map(|s| (s.start, s.end))
    }

    /// `T*` of the character at `pos` in `doc`.
    pub fn datation_generalized(&self, doc: &DocId, pos: usize) -> Result<f64> {
        let span = self.spans.get(doc).ok_or_else(|| Error::UnknownDocument(doc.to_string()))?;
        if pos > span.char_count {
            return Err(Error::PositionOutOfRange { doc: doc.to_string(), pos, len: span.char_count });
        }
        if span.char_count == 0 {
            return Ok(span.start);
        }
        Ok(span.start + pos as f64 / span.char_count as f64 * (span.end - span.start))
    }

    pub fn occurrence_time(&self, occ: &Occurrence) -> Result<f64> {
        self.datation_generalized(&occ.document, occ.pos)
    }

    /// `T*(b) - T*(a)`.
    pub fn time_distance(&self, a: &Occurrence, b: &Occurrence) -> Result<f64> {
        Ok(self.occurrence_time(b)? - self.occurrence_time(a)?)
    }
}

/// Geometric mean of the first `n` values of `times` (expected in ascending
/// order). `None` for an empty slice.
pub fn onset_mean(times: &[f64], n: usize) -> Result<Option<f64>> {
    let head = &times[..times.len().min(n)];
    if head.is_empty() {
        return Ok(None);
    }
    let mut log_sum = 0.0;
    for &t in head {
        if t <= 0.0 || !t.is_finite() {
            return Err(Error::NonPositiveTime(t));
        }
        log_sum += libm::log(t);
    }
    Ok(Some(libm::exp(log_sum / head.len() as f64)))
}

/// Onset statistics of one term.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ChronoStatsRecord {
    pub term: TermId,
    pub full_occurrences: usize,
    pub reduced_occurrences: usize,
    pub t_bar: Option<f64>,
    pub r_bar: Option<f64>,
    /// `r_bar - t_bar`; positive when full forms come first.
    pub xi: Option<f64>,
}

/// `xi = r_bar - t_bar` from the times of a term's full and reduced forms,
/// in any order.
pub fn xi_from_times(full: &[f64], reduced: &[f64], n: usize) -> Result<(Option<f64>, Option<f64>, Option<f64>)> {
    let sorted = |v: &[f64]| {
        let mut s = v.to_vec();
        s.sort_by(f64::total_cmp);
        s
    };
    let t_bar = onset_mean(&sorted(full), n)?;
    let r_bar = onset_mean(&sorted(reduced), n)?;
    let xi = t_bar.zip(r_bar).map(|(t, r)| r - t);
    Ok((t_bar, r_bar, xi))
}

/// One record per term with at least one occurrence, ordered by term id.
/// Each occurrence comes with its role, see [`onset_kind`].
///
/// [`onset_kind`]: crate::anaphora::onset_kind
pub fn term_records<'a, I>(corpus: &ChronoCorpus, occurrences: I, n: usize) -> Result<Vec<ChronoStatsRecord>>
where
    I: IntoIterator<Item = (&'a Occurrence, OccurrenceKind)>,
{
    let mut times: BTreeMap<&TermId, (Vec<f64>, Vec<f64>)> = BTreeMap::new();
    for (occ, kind) in occurrences {
        let t = corpus.occurrence_time(occ)?;
        let entry = times.entry(&occ.term).or_default();
        match kind {
            OccurrenceKind::Full => entry.0.push(t),
            OccurrenceKind::Reduced => entry.1.push(t),
        }
    }
    times
        .into_iter()
        .map(|(term, (full, reduced))| {
            let (t_bar, r_bar, xi) = xi_from_times(&full, &reduced, n)?;
            Ok(ChronoStatsRecord {
                term: term.clone(),
                full_occurrences: full.len(),
                reduced_occurrences: reduced.len(),
                t_bar,
                r_bar,
                xi,
            })
        })
        .collect()
}

/// Median of the defined `xi` values.
pub fn median_xi(records: &[ChronoStatsRecord]) -> Option<f64> {
    let xs: Vec<f64> = records.iter().filter_map(|r| r.xi).collect();
    median(&xs)
}

/// Counts of terms, attested reduced forms and their occurrences.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct Census {
    /// Distinct terms with at least one full-form occurrence.
    pub terms: usize,
    /// Distinct reduced surfaces with at least one occurrence.
    pub reduced_forms: usize,
    pub full_occurrences: usize,
    pub reduced_occurrences: usize,
}

/// Census restricted to `terms`. Reduced forms are told apart by their
/// rendered surface, so a bare head shared by two terms counts once.
pub fn census<'a, I>(terms: &[ComplexTerm], occurrences: I) -> Census
where
    I: IntoIterator<Item = &'a Occurrence>,
{
    let by_id: BTreeMap<&TermId, &ComplexTerm> = terms.iter().map(|t| (t.id(), t)).collect();
    let mut out = Census::default();
    let mut full_terms = BTreeSet::new();
    let mut reduced = BTreeSet::new();
    for occ in occurrences {
        let Some(term) = by_id.get(&occ.term) else {
            continue;
        };
        if occ.form.is_full() {
            out.full_occurrences += 1;
            full_terms.insert(&occ.term);
        } else {
            out.reduced_occurrences += 1;
            let surface = term.render_form(occ.form).unwrap_or_else(|_| occ.form.to_string());
            reduced.insert(surface);
        }
    }
    out.terms = full_terms.len();
    out.reduced_forms = reduced.len();
    out
}
