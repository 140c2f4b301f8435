//! Anaphoric trees and the reduction statistics derived from them.
//!
//! For one term in one document, the full-form occurrences `t1 < t2 < ...`
//! each collect the reduced occurrences that follow them up to the next full
//! form (or the end of the document). Reduced occurrences before `t1` are
//! cataphoric. Every quantity below is computed from that tree.

use alloc::vec::Vec;

use serde::Serialize;

use crate::model::{FormKey, OccurrenceLabel, Shape};
use crate::util::mean_defined;
use crate::{Error, Result};

/// Characters per density unit ("per 100 ko of text").
pub const DENSITY_UNIT: f64 = 100_000.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum OccurrenceKind {
    Full,
    Reduced,
}

/// Position and kind of one occurrence fed to [`build_tree`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TreeOccurrence {
    pub pos: usize,
    pub kind: OccurrenceKind,
}

impl TreeOccurrence {
    pub fn full(pos: usize) -> Self {
        Self { pos, kind: OccurrenceKind::Full }
    }

    pub fn reduced(pos: usize) -> Self {
        Self { pos, kind: OccurrenceKind::Reduced }
    }
}

/// Role of a scanned occurrence in its anaphoric tree, `None` when it stays
/// out. Without a label only linear-suffix reductions join the tree; other
/// shapes are candidate lexical reductions. A label overrides the form.
pub fn tree_kind(form: FormKey, label: Option<OccurrenceLabel>) -> Option<OccurrenceKind> {
    match label {
        Some(OccurrenceLabel::Full) => Some(OccurrenceKind::Full),
        Some(OccurrenceLabel::AnaphoricReduction | OccurrenceLabel::CataphoricReduction) => {
            Some(OccurrenceKind::Reduced)
        }
        Some(OccurrenceLabel::LexicalReduction | OccurrenceLabel::NotAVariant) => None,
        None => match form.shape() {
            None => Some(OccurrenceKind::Full),
            Some(Shape::LinearSuffix) => Some(OccurrenceKind::Reduced),
            Some(_) => None,
        },
    }
}

/// Full or reduced for the chronology; only `not_a_variant` drops out.
pub fn onset_kind(form: FormKey, label: Option<OccurrenceLabel>) -> Option<OccurrenceKind> {
    match label {
        Some(OccurrenceLabel::Full) => Some(OccurrenceKind::Full),
        Some(OccurrenceLabel::NotAVariant) => None,
        Some(_) => Some(OccurrenceKind::Reduced),
        None if form.is_full() => Some(OccurrenceKind::Full),
        None => Some(OccurrenceKind::Reduced),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FullNode {
    pub pos: usize,
    /// Positions of the reduced forms attached to this full form.
    pub children: Vec<usize>,
}

impl FullNode {
    pub fn degree(&self) -> usize {
        self.children.len()
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct AnaphoricTree {
    /// Positions of reduced forms before the first full form.
    pub cataphoric: Vec<usize>,
    pub full_nodes: Vec<FullNode>,
}

impl AnaphoricTree {
    pub fn full_count(&self) -> usize {
        self.full_nodes.len()
    }

    /// Reduced forms attached to some full form.
    pub fn anaphoric_count(&self) -> usize {
        self.full_nodes.iter().map(FullNode::degree).sum()
    }

    pub fn cataphoric_count(&self) -> usize {
        self.cataphoric.len()
    }
}

/// Buckets occurrences into the anaphoric tree. Input order does not matter;
/// occurrences are ordered by position first.
pub fn build_tree(occurrences: &[TreeOccurrence]) -> AnaphoricTree {
    let mut sorted = occurrences.to_vec();
    sorted.sort();
    let mut tree = AnaphoricTree::default();
    for occ in sorted {
        match (occ.kind, tree.full_nodes.last_mut()) {
            (OccurrenceKind::Full, _) => tree.full_nodes.push(FullNode { pos: occ.pos, children: Vec::new() }),
            (OccurrenceKind::Reduced, Some(node)) => node.children.push(occ.pos),
            (OccurrenceKind::Reduced, None) => tree.cataphoric.push(occ.pos),
        }
    }
    tree
}

/// Per-tree quantities. `None` marks a value that cannot be computed.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct AnaphoraMetrics {
    /// Mean degree of the full-form nodes.
    pub d_m: Option<f64>,
    /// Number of cataphoric reductions.
    pub d_minus: usize,
    /// Mean run length of full forms up to and including a reduction-bearing
    /// one (see [`tree_metrics`]).
    pub f: Option<f64>,
    /// Mean distance from a full form to its first reduction.
    pub delta: Option<f64>,
    /// Mean distance from a full form to its last reduction.
    #[serde(rename = "Delta")]
    pub delta_max: Option<f64>,
    /// Distance from the last cataphoric reduction to the first full form.
    pub delta_minus: Option<f64>,
    /// Distance from the first cataphoric reduction to the first full form.
    #[serde(rename = "Delta_minus")]
    pub delta_max_minus: Option<f64>,
}

/// Computes the tree quantities.
///
/// `f` segments the full-node sequence into maximal runs of zero-degree nodes
/// closed by a node of positive degree; each run's length counts the closing
/// node, and `f` is the mean length. Zero-degree nodes after the last
/// reduction-bearing node close no run and are ignored; a tree without any
/// reduction-bearing node has no `f`.
pub fn tree_metrics(tree: &AnaphoricTree) -> AnaphoraMetrics {
    let nodes = &tree.full_nodes;
    let d_m = if nodes.is_empty() { None } else { Some(tree.anaphoric_count() as f64 / nodes.len() as f64) };

    let mut runs = Vec::new();
    let mut run = 0usize;
    for node in nodes {
        run += 1;
        if node.degree() > 0 {
            runs.push(Some(run as f64));
            run = 0;
        }
    }
    let f = mean_defined(runs);

    let bearing = || nodes.iter().filter(|n| n.degree() > 0);
    let delta = mean_defined(bearing().map(|n| Some((n.children[0] - n.pos) as f64)));
    let delta_max = mean_defined(bearing().map(|n| Some((n.children[n.degree() - 1] - n.pos) as f64)));

    let (delta_minus, delta_max_minus) = match (nodes.first(), tree.cataphoric.first(), tree.cataphoric.last()) {
        (Some(t1), Some(&first), Some(&last)) => (Some((t1.pos - last) as f64), Some((t1.pos - first) as f64)),
        _ => (None, None),
    };

    AnaphoraMetrics { d_m, d_minus: tree.cataphoric_count(), f, delta, delta_max, delta_minus, delta_max_minus }
}

/// Raw occurrence counts of one document over all terms.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct DocumentCounts {
    pub full: usize,
    pub anaphoric: usize,
    pub cataphoric: usize,
}

impl DocumentCounts {
    pub fn from_trees<'a, I: IntoIterator<Item = &'a AnaphoricTree>>(trees: I) -> Self {
        trees.into_iter().fold(Self::default(), |acc, t| Self {
            full: acc.full + t.full_count(),
            anaphoric: acc.anaphoric + t.anaphoric_count(),
            cataphoric: acc.cataphoric + t.cataphoric_count(),
        })
    }
}

/// Occurrence densities per 100,000 characters.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DocumentDensity {
    #[serde(rename = "FP")]
    pub fp: f64,
    #[serde(rename = "ANA")]
    pub ana: f64,
    #[serde(rename = "CATA")]
    pub cata: f64,
    pub ana_fp_ratio: Option<f64>,
    pub cata_fp_ratio: Option<f64>,
}

pub fn document_density(counts: DocumentCounts, char_count: usize, doc: &str) -> Result<DocumentDensity> {
    if char_count == 0 {
        return Err(Error::EmptyDocument(doc.into()));
    }
    let scale = DENSITY_UNIT / char_count as f64;
    let ratio = |n: usize| (counts.full > 0).then(|| n as f64 / counts.full as f64);
    Ok(DocumentDensity {
        fp: counts.full as f64 * scale,
        ana: counts.anaphoric as f64 * scale,
        cata: counts.cataphoric as f64 * scale,
        ana_fp_ratio: ratio(counts.anaphoric),
        cata_fp_ratio: ratio(counts.cataphoric),
    })
}

/// Tree metrics of one document: each quantity averaged over the document's
/// trees where it is defined.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DocumentMetrics {
    pub d_m: Option<f64>,
    pub d_minus: Option<f64>,
    pub f: Option<f64>,
    pub delta: Option<f64>,
    #[serde(rename = "Delta")]
    pub delta_max: Option<f64>,
    pub delta_minus: Option<f64>,
    #[serde(rename = "Delta_minus")]
    pub delta_max_minus: Option<f64>,
}

impl DocumentMetrics {
    pub fn from_metrics(metrics: &[AnaphoraMetrics]) -> Self {
        let field = |g: fn(&AnaphoraMetrics) -> Option<f64>| mean_defined(metrics.iter().map(g));
        Self {
            d_m: field(|m| m.d_m),
            d_minus: field(|m| Some(m.d_minus as f64)),
            f: field(|m| m.f),
            delta: field(|m| m.delta),
            delta_max: field(|m| m.delta_max),
            delta_minus: field(|m| m.delta_minus),
            delta_max_minus: field(|m| m.delta_max_minus),
        }
    }
}

/// Everything the category aggregates need from one document.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DocumentAnalysis {
    pub counts: DocumentCounts,
    pub density: DocumentDensity,
    pub metrics: DocumentMetrics,
}

impl DocumentAnalysis {
    /// `trees` holds one tree per term that occurs in the document.
    pub fn new(doc: &str, char_count: usize, trees: &[AnaphoricTree]) -> Result<Self> {
        let counts = DocumentCounts::from_trees(trees);
        let density = document_density(counts, char_count, doc)?;
        let metrics: Vec<AnaphoraMetrics> = trees.iter().map(tree_metrics).collect();
        Ok(Self { counts, density, metrics: DocumentMetrics::from_metrics(&metrics) })
    }

    pub fn has_anaphoric(&self) -> bool {
        self.counts.anaphoric > 0
    }

    pub fn has_cataphoric(&self) -> bool {
        self.counts.cataphoric > 0
    }
}

/// Document-level means for one group of documents.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Aggregate {
    pub documents: usize,
    #[serde(rename = "FP")]
    pub fp: Option<f64>,
    #[serde(rename = "ANA")]
    pub ana: Option<f64>,
    #[serde(rename = "CATA")]
    pub cata: Option<f64>,
    #[serde(rename = "ANA_FP")]
    pub ana_fp: Option<f64>,
    #[serde(rename = "CATA_FP")]
    pub cata_fp: Option<f64>,
    pub delta: Option<f64>,
    #[serde(rename = "Delta")]
    pub delta_max: Option<f64>,
    pub d_m: Option<f64>,
    pub delta_minus: Option<f64>,
    #[serde(rename = "Delta_minus")]
    pub delta_max_minus: Option<f64>,
    pub d_minus: Option<f64>,
    pub f: Option<f64>,
}

/// Arithmetic means over documents, skipping undefined values. An empty
/// group yields an all-`None` row. The result does not depend on the order
/// of `docs`.
pub fn aggregate<'a, I>(docs: I) -> Aggregate
where
    I: IntoIterator<Item = &'a DocumentAnalysis>,
{
    let docs: Vec<&DocumentAnalysis> = docs.into_iter().collect();
    let mean = |g: &dyn Fn(&DocumentAnalysis) -> Option<f64>| mean_defined(docs.iter().map(|d| g(d)));
    Aggregate {
        documents: docs.len(),
        fp: mean(&|d| Some(d.density.fp)),
        ana: mean(&|d| Some(d.density.ana)),
        cata: mean(&|d| Some(d.density.cata)),
        ana_fp: mean(&|d| d.density.ana_fp_ratio),
        cata_fp: mean(&|d| d.density.cata_fp_ratio),
        delta: mean(&|d| d.metrics.delta),
        delta_max: mean(&|d| d.metrics.delta_max),
        d_m: mean(&|d| d.metrics.d_m),
        delta_minus: mean(&|d| d.metrics.delta_minus),
        delta_max_minus: mean(&|d| d.metrics.delta_max_minus),
        d_minus: mean(&|d| d.metrics.d_minus),
        f: mean(&|d| d.metrics.f),
    }
}

/// Percentages of documents with at least one anaphoric (resp. cataphoric)
/// reduction.
pub fn presence_rates<'a, I>(docs: I) -> Result<(f64, f64)>
where
    I: IntoIterator<Item = &'a DocumentAnalysis>,
{
    let (mut n, mut ra, mut rca) = (0usize, 0usize, 0usize);
    for d in docs {
        n += 1;
        ra += usize::from(d.has_anaphoric());
        rca += usize::from(d.has_cataphoric());
    }
    if n == 0 {
        return Err(Error::EmptyCorpus);
    }
    let pct = |k: usize| 100.0 * k as f64 / n as f64;
    Ok((pct(ra), pct(rca)))
}
