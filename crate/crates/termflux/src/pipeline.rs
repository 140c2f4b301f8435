//! The computations behind every CLI subcommand and service endpoint. Both
//! front ends call these functions and render with the same writers, so their
//! outputs agree byte for byte.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;
use termflux_core::anaphora::{
    aggregate, build_tree, onset_kind, presence_rates, tree_kind, Aggregate, DocumentAnalysis, OccurrenceKind,
    TreeOccurrence,
};
use termflux_core::chrono::{census, median_xi, term_records, Census, ChronoCorpus, ChronoStatsRecord};
use termflux_core::classify::{judge_occurrence, ReductionJudgment};
use termflux_core::kde::{density_on_grid, uniform_grid, DensityKind, GaussianKde, GRID_POINTS};
use termflux_core::lattice::{build_lattice_with, is_admissible_3complex};
use termflux_core::lowess::{lowess, LowessParams};
use termflux_core::scan::{scan_all, Family};
use termflux_core::{Category, ComplexTerm, Corpus, DocId, Document, FormKey, Occurrence, OccurrenceLabel, Shape};

use crate::report::{csv_bytes, num, opt, NA};
use crate::Result;

pub type Labels = BTreeMap<String, OccurrenceLabel>;

pub fn families(terms: &[ComplexTerm], include_expansion_only: bool) -> Vec<Family> {
    terms.iter().map(|t| Family::new(t, include_expansion_only)).collect()
}

/// Occurrences of every family in one document, sorted by `(pos, term)`.
pub fn scan_document(doc: &Document, families: &[Family]) -> Vec<Occurrence> {
    scan_all(doc, families)
}

/// Occurrences of every family in every document, in corpus order.
pub fn scan_corpus(corpus: &Corpus, families: &[Family]) -> Vec<Occurrence> {
    corpus
        .documents()
        .par_iter()
        .map(|d| scan_document(d, families))
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect()
}

fn label(labels: &Labels, occ: &Occurrence) -> Option<OccurrenceLabel> {
    labels.get(&occ.id()).copied()
}

/// Occurrences grouped by document, keeping only documents of `corpus`.
fn by_document<'a>(corpus: &Corpus, occurrences: &'a [Occurrence]) -> BTreeMap<&'a DocId, Vec<&'a Occurrence>> {
    let mut map: BTreeMap<&DocId, Vec<&Occurrence>> = BTreeMap::new();
    for o in occurrences {
        if corpus.document(&o.document).is_some() {
            map.entry(&o.document).or_default().push(o);
        }
    }
    map
}

fn validated(corpus: &Corpus) -> Corpus {
    let docs = corpus.documents().iter().filter(|d| d.validated).cloned().collect();
    Corpus::new(corpus.id.clone(), docs).expect("subset of a valid corpus")
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DocumentStats {
    pub id: DocId,
    pub category: Category,
    #[serde(flatten)]
    pub analysis: DocumentAnalysis,
}

/// Per-document analysis of the validated documents, in corpus order.
pub fn analyze_documents(corpus: &Corpus, occurrences: &[Occurrence], labels: &Labels) -> Result<Vec<DocumentStats>> {
    let corpus = validated(corpus);
    let grouped = by_document(&corpus, occurrences);
    corpus
        .documents()
        .iter()
        .map(|doc| {
            let mut per_term: BTreeMap<_, Vec<TreeOccurrence>> = BTreeMap::new();
            for o in grouped.get(&doc.id).into_iter().flatten() {
                if let Some(kind) = tree_kind(o.form, label(labels, o)) {
                    per_term.entry(&o.term).or_default().push(TreeOccurrence { pos: o.pos, kind });
                }
            }
            let trees: Vec<_> = per_term.values().map(|occ| build_tree(occ)).collect();
            Ok(DocumentStats {
                id: doc.id.clone(),
                category: doc.category,
                analysis: DocumentAnalysis::new(doc.id.as_str(), doc.char_count(), &trees)?,
            })
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AnaRow {
    pub corpus: String,
    pub category: String,
    #[serde(flatten)]
    pub aggregate: Aggregate,
}

/// Rows for categories 1, 2 and 3, plus `unknown` when some document has no
/// category.
pub fn ana_rows(corpus_id: &str, docs: &[DocumentStats]) -> Vec<AnaRow> {
    let has_unknown = docs.iter().any(|d| d.category == Category::Unknown);
    Category::ALL
        .into_iter()
        .filter(|&c| c != Category::Unknown || has_unknown)
        .map(|c| AnaRow {
            corpus: corpus_id.to_owned(),
            category: c.label(),
            aggregate: aggregate(docs.iter().filter(|d| d.category == c).map(|d| &d.analysis)),
        })
        .collect()
}

pub const ANA_HEADER: [&str; 12] = [
    "corpus",
    "category",
    "FP",
    "ANA_FP",
    "CATA_FP",
    "delta",
    "Delta",
    "d_m",
    "delta_minus",
    "Delta_minus",
    "d_minus",
    "f",
];

pub fn ana_csv(rows: &[AnaRow]) -> Result<Vec<u8>> {
    csv_bytes(
        &ANA_HEADER,
        rows.iter().map(|r| {
            let a = &r.aggregate;
            vec![
                r.corpus.clone(),
                r.category.clone(),
                opt(a.fp),
                opt(a.ana_fp),
                opt(a.cata_fp),
                opt(a.delta),
                opt(a.delta_max),
                opt(a.d_m),
                opt(a.delta_minus),
                opt(a.delta_max_minus),
                opt(a.d_minus),
                opt(a.f),
            ]
        }),
    )
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AnaReport {
    pub corpus: String,
    pub document_count: usize,
    pub rows: Vec<AnaRow>,
}

pub fn ana_report(
    corpus: &Corpus,
    occurrences: &[Occurrence],
    labels: &Labels,
) -> Result<(AnaReport, Vec<DocumentStats>)> {
    let docs = analyze_documents(corpus, occurrences, labels)?;
    let report = AnaReport { corpus: corpus.id.clone(), document_count: docs.len(), rows: ana_rows(&corpus.id, &docs) };
    Ok((report, docs))
}

/// `corpus,documents,RA,RCA` in percent.
pub fn presence_csv(corpus_id: &str, docs: &[DocumentStats]) -> Result<Vec<u8>> {
    let (ra, rca) = match presence_rates(docs.iter().map(|d| &d.analysis)) {
        Ok((a, c)) => (num(a), num(c)),
        Err(_) => (NA.to_owned(), NA.to_owned()),
    };
    csv_bytes(&["corpus", "documents", "RA", "RCA"], [vec![corpus_id.to_owned(), docs.len().to_string(), ra, rca]])
}

/// Per category: FP density against ANA density with the LOWESS fit.
pub fn lowess_csv(docs: &[DocumentStats], params: LowessParams) -> Result<Vec<u8>> {
    let mut rows = Vec::new();
    for c in Category::ALL {
        let mut pts: Vec<(f64, f64, &DocId)> = docs
            .iter()
            .filter(|d| d.category == c)
            .map(|d| (d.analysis.density.fp, d.analysis.density.ana, &d.id))
            .collect();
        pts.sort_by(|a, b| a.0.total_cmp(&b.0).then_with(|| a.2.cmp(b.2)));
        let x: Vec<f64> = pts.iter().map(|p| p.0).collect();
        let y: Vec<f64> = pts.iter().map(|p| p.1).collect();
        let fitted = lowess(&x, &y, params).ok();
        for (i, (fx, fy, id)) in pts.iter().enumerate() {
            rows.push(vec![c.label(), id.to_string(), num(*fx), num(*fy), opt(fitted.as_ref().map(|f| f[i]))]);
        }
    }
    csv_bytes(&["category", "document", "FP", "ANA", "fitted"], rows)
}

fn chrono_inputs<'a>(
    corpus: &Corpus,
    occurrences: &'a [Occurrence],
    labels: &Labels,
) -> Result<(ChronoCorpus, Vec<(&'a Occurrence, OccurrenceKind)>)> {
    let corpus = validated(corpus);
    corpus.require_dated()?;
    let chrono = ChronoCorpus::new(corpus.documents().iter().map(|d| (d.id.clone(), d.date, d.char_count())))?;
    let kinds = occurrences
        .iter()
        .filter(|o| corpus.document(&o.document).is_some())
        .filter_map(|o| onset_kind(o.form, label(labels, o)).map(|k| (o, k)))
        .collect();
    Ok((chrono, kinds))
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ChronoReport {
    pub corpus: String,
    pub document_count: usize,
    pub median_xi: Option<f64>,
    pub rows: Vec<ChronoStatsRecord>,
}

pub fn chrono_report(corpus: &Corpus, occurrences: &[Occurrence], labels: &Labels, n: usize) -> Result<ChronoReport> {
    let document_count = corpus.documents().iter().filter(|d| d.validated).count();
    if document_count == 0 {
        return Ok(ChronoReport { corpus: corpus.id.clone(), document_count, median_xi: None, rows: Vec::new() });
    }
    let (chrono, kinds) = chrono_inputs(corpus, occurrences, labels)?;
    let rows = term_records(&chrono, kinds, n)?;
    Ok(ChronoReport { corpus: corpus.id.clone(), document_count, median_xi: median_xi(&rows), rows })
}

pub fn chrono_csv(report: &ChronoReport) -> Result<Vec<u8>> {
    csv_bytes(
        &["term", "full_occurrences", "reduced_occurrences", "t_bar", "r_bar", "xi"],
        report.rows.iter().map(|r| {
            vec![
                r.term.to_string(),
                r.full_occurrences.to_string(),
                r.reduced_occurrences.to_string(),
                opt(r.t_bar),
                opt(r.r_bar),
                opt(r.xi),
            ]
        }),
    )
}

/// Full and reduced densities over time on one shared grid covering both
/// estimator supports.
pub fn density_csv(corpus: &Corpus, occurrences: &[Occurrence], labels: &Labels) -> Result<Vec<u8>> {
    let header = ["grid_time", "density_full", "density_reduced"];
    if !corpus.documents().iter().any(|d| d.validated) {
        return csv_bytes(&header, Vec::<Vec<String>>::new());
    }
    let (chrono, kinds) = chrono_inputs(corpus, occurrences, labels)?;
    let mut full = Vec::new();
    let mut reduced = Vec::new();
    for (o, k) in kinds {
        let t = chrono.occurrence_time(o)?;
        match k {
            OccurrenceKind::Full => full.push(t),
            OccurrenceKind::Reduced => reduced.push(t),
        }
    }
    let kde_full = (!full.is_empty()).then(|| GaussianKde::new(&full)).transpose()?;
    let kde_reduced = (!reduced.is_empty()).then(|| GaussianKde::new(&reduced)).transpose()?;
    let supports: Vec<(f64, f64)> =
        [&kde_full, &kde_reduced].iter().filter_map(|k| k.as_ref().map(|k| k.support())).collect();
    if supports.is_empty() {
        return csv_bytes(&header, Vec::<Vec<String>>::new());
    }
    let lo = supports.iter().map(|s| s.0).fold(f64::INFINITY, f64::min);
    let hi = supports.iter().map(|s| s.1).fold(f64::NEG_INFINITY, f64::max);
    let grid = uniform_grid(lo, hi, GRID_POINTS);
    let curve = |k: &Option<GaussianKde>, kind| k.as_ref().map(|k| density_on_grid(k, kind, grid.clone()).density);
    let df = curve(&kde_full, DensityKind::Full);
    let dr = curve(&kde_reduced, DensityKind::Reduced);
    csv_bytes(
        &header,
        grid.iter()
            .enumerate()
            .map(|(i, &t)| vec![num(t), opt(df.as_ref().map(|d| d[i])), opt(dr.as_ref().map(|d| d[i]))]),
    )
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct JudgmentRecord {
    pub occurrence: String,
    pub doc: DocId,
    pub term: String,
    pub form: FormKey,
    pub pos: usize,
    pub text: String,
    #[serde(flatten)]
    pub judgment: ReductionJudgment,
}

/// Judgments for every reduced occurrence of the validated documents.
/// Occurrences labelled `not_a_variant` are left out, both as targets and
/// as full forms that would set the order.
pub fn judgments(corpus: &Corpus, occurrences: &[Occurrence], labels: &Labels) -> Vec<JudgmentRecord> {
    let corpus = validated(corpus);
    let kept: Vec<Occurrence> =
        occurrences.iter().filter(|o| label(labels, o) != Some(OccurrenceLabel::NotAVariant)).cloned().collect();
    let grouped = by_document(&corpus, &kept);
    let mut out = Vec::new();
    for doc in corpus.documents() {
        let Some(occ) = grouped.get(&doc.id) else { continue };
        for o in occ {
            let same_doc = occ.iter().copied();
            if let Some(j) = judge_occurrence(o, same_doc, doc.category, doc.domain_fast_evolving) {
                out.push(JudgmentRecord {
                    occurrence: o.id(),
                    doc: o.document.clone(),
                    term: o.term.to_string(),
                    form: o.form,
                    pos: o.pos,
                    text: o.matched_text.clone(),
                    judgment: j,
                });
            }
        }
    }
    out
}

/// The admissible 3-complex terms of an inventory.
pub fn admissible_terms(terms: &[ComplexTerm]) -> Vec<ComplexTerm> {
    terms.iter().filter(|t| is_admissible_3complex(t)).cloned().collect()
}

/// Census over validated documents.
pub fn census_of(corpus: &Corpus, terms: &[ComplexTerm], occurrences: &[Occurrence]) -> Census {
    let corpus = validated(corpus);
    census(terms, occurrences.iter().filter(|o| corpus.document(&o.document).is_some()))
}

pub fn census_csv(corpus_id: &str, c: &Census) -> Result<Vec<u8>> {
    csv_bytes(
        &["corpus", "terms", "reduced_forms", "full_occurrences", "reduced_occurrences"],
        [vec![
            corpus_id.to_owned(),
            c.terms.to_string(),
            c.reduced_forms.to_string(),
            c.full_occurrences.to_string(),
            c.reduced_occurrences.to_string(),
        ]],
    )
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LatticeNode {
    pub index: usize,
    pub form: FormKey,
    pub surface: String,
    pub shape: Option<Shape>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LatticeReport {
    pub term: String,
    pub surface: String,
    pub admissible_3complex: bool,
    pub nodes: Vec<LatticeNode>,
    pub edges: Vec<(usize, usize)>,
    pub left_border: Vec<usize>,
}

pub fn lattice_reports(terms: &[ComplexTerm], include_expansion_only: bool) -> Result<Vec<LatticeReport>> {
    terms
        .iter()
        .map(|t| {
            let lattice = build_lattice_with(t, include_expansion_only);
            let nodes = lattice
                .nodes()
                .iter()
                .enumerate()
                .map(|(index, &set)| {
                    let form = if set == t.full_set() { FormKey::Full } else { FormKey::Reduced(set) };
                    Ok(LatticeNode { index, form, surface: t.render_form(form)?, shape: form.shape() })
                })
                .collect::<Result<Vec<_>>>()?;
            let left_border = lattice.left_border().iter().filter_map(|&s| lattice.node_index(s)).collect();
            Ok(LatticeReport {
                term: t.id().to_string(),
                surface: t.surface().to_owned(),
                admissible_3complex: is_admissible_3complex(t),
                nodes,
                edges: lattice.edges().to_vec(),
                left_border,
            })
        })
        .collect()
}

/// One row per node (`kind=node`) and per edge (`kind=edge`, from `form`
/// to `target`). `shape` is `full` for the full form.
pub fn lattice_csv(reports: &[LatticeReport]) -> Result<Vec<u8>> {
    let mut rows = Vec::new();
    for r in reports {
        for n in &r.nodes {
            rows.push(vec![
                r.term.clone(),
                "node".to_owned(),
                n.form.to_string(),
                n.surface.clone(),
                n.shape.map_or("full", Shape::as_str).to_owned(),
                r.left_border.contains(&n.index).to_string(),
                String::new(),
            ]);
        }
        for &(from, to) in &r.edges {
            rows.push(vec![
                r.term.clone(),
                "edge".to_owned(),
                r.nodes[from].form.to_string(),
                String::new(),
                String::new(),
                String::new(),
                r.nodes[to].form.to_string(),
            ]);
        }
    }
    csv_bytes(&["term", "kind", "form", "surface", "shape", "left_border", "target"], rows)
}
