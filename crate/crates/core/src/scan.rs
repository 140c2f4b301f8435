//! Offset-exact occurrence scanning.
//!
//! Text is split into case-folded word tokens (maximal runs of alphanumeric
//! characters). Each token remembers its character and byte span in the
//! original text and the normalized separator in front of it: whitespace runs
//! collapse to one space and typographic apostrophes become `'`. A form
//! matches when its tokens and inner separators equal a run of text tokens,
//! so `mode  de\nproduction` matches `mode de production` but
//! `degrado, ambientale` does not match `degrado ambientale`.
//!
//! Matching is leftmost-longest: at each token the longest form of the family
//! wins and scanning resumes after it, so a full-form match never also yields
//! the reduced forms nested inside it.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;

use crate::lattice::generate_reductions;
use crate::model::{ComplexTerm, DocId, Document, FormKey, Occurrence, TermId};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Token {
    /// Case-folded token text.
    pub text: String,
    /// Character offset of the first character.
    pub start: usize,
    /// Character offset one past the last character.
    pub end: usize,
    byte_start: usize,
    byte_end: usize,
    /// Normalized separator between the previous token and this one.
    pub gap: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct TokenStream {
    tokens: Vec<Token>,
}

impl TokenStream {
    pub fn tokens(&self) -> &[Token] {
        &self.tokens
    }

    pub fn len(&self) -> usize {
        self.tokens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tokens.is_empty()
    }
}

fn push_gap_char(gap: &mut String, c: char) {
    if c.is_whitespace() {
        if !gap.ends_with(' ') {
            gap.push(' ');
        }
    } else if matches!(c, '\u{2019}' | '\u{2018}' | '\u{02BC}') {
        gap.push('\'');
    } else {
        gap.push(c);
    }
}

pub fn normalize_stream(text: &str) -> TokenStream {
    let mut tokens = Vec::new();
    let mut gap = String::new();
    let mut current: Option<Token> = None;
    for (char_index, (byte_index, c)) in text.char_indices().enumerate() {
        if c.is_alphanumeric() {
            let tok = current.get_or_insert_with(|| Token {
                text: String::new(),
                start: char_index,
                end: char_index,
                byte_start: byte_index,
                byte_end: byte_index,
                gap: core::mem::take(&mut gap),
            });
            tok.text.extend(c.to_lowercase());
            tok.end = char_index + 1;
            tok.byte_end = byte_index + c.len_utf8();
        } else {
            if let Some(tok) = current.take() {
                tokens.push(tok);
            }
            push_gap_char(&mut gap, c);
        }
    }
    tokens.extend(current);
    TokenStream { tokens }
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct Pattern {
    tokens: Vec<String>,
    gaps: Vec<String>,
    form: FormKey,
}

impl Pattern {
    fn new(surface: &str, form: FormKey) -> Option<Self> {
        let stream = normalize_stream(surface);
        if stream.is_empty() {
            return None;
        }
        let gaps = stream.tokens[1..].iter().map(|t| t.gap.clone()).collect();
        let tokens = stream.tokens.into_iter().map(|t| t.text).collect();
        Some(Self { tokens, gaps, form })
    }

    fn same_text(&self, other: &Pattern) -> bool {
        self.tokens == other.tokens && self.gaps == other.gaps
    }

    fn matches_at(&self, tokens: &[Token], i: usize) -> bool {
        let Some(window) = tokens.get(i..i + self.tokens.len()) else {
            return false;
        };
        window.iter().zip(&self.tokens).all(|(t, p)| &t.text == p)
            && window[1..].iter().zip(&self.gaps).all(|(t, g)| &t.gap == g)
    }
}

/// A term together with every surface that counts as one of its forms.
#[derive(Debug, Clone)]
pub struct Family {
    term: TermId,
    forms: Vec<(FormKey, String)>,
    patterns: Vec<Pattern>,
    by_first_token: BTreeMap<String, Vec<usize>>,
}

impl Family {
    /// Full form, generated reductions and inventory aliases of `term`.
    pub fn new(term: &ComplexTerm, include_expansion_only: bool) -> Self {
        let mut forms = Vec::new();
        forms.push((FormKey::Full, String::from(term.surface())));
        for r in generate_reductions(term, include_expansion_only) {
            forms.push((r.key(), String::from(r.surface())));
        }
        for (key, surface) in term.aliases() {
            if include_expansion_only || key.shape() != Some(crate::Shape::ExpansionOnly) {
                forms.push((*key, surface.clone()));
            }
        }
        Self::from_forms(term.id().clone(), forms)
    }

    /// Builds a family from explicit `(form, surface)` pairs. When two
    /// surfaces normalize to the same token sequence, the smaller form key
    /// (full first) keeps it; the input order does not matter.
    pub fn from_forms(term: TermId, mut forms: Vec<(FormKey, String)>) -> Self {
        forms.sort();
        forms.dedup();
        let mut patterns: Vec<Pattern> = Vec::new();
        for (key, surface) in &forms {
            if let Some(p) = Pattern::new(surface, *key) {
                if !patterns.iter().any(|q| q.same_text(&p)) {
                    patterns.push(p);
                }
            }
        }
        let mut by_first_token: BTreeMap<String, Vec<usize>> = BTreeMap::new();
        for (i, p) in patterns.iter().enumerate() {
            by_first_token.entry(p.tokens[0].clone()).or_default().push(i);
        }
        for candidates in by_first_token.values_mut() {
            candidates.sort_by(|&a, &b| patterns[b].tokens.len().cmp(&patterns[a].tokens.len()));
        }
        Self { term, forms, patterns, by_first_token }
    }

    pub fn term(&self) -> &TermId {
        &self.term
    }

    /// All `(form, surface)` pairs, sorted.
    pub fn forms(&self) -> &[(FormKey, String)] {
        &self.forms
    }

    /// Scans a pre-tokenized text. `text` must be the string `stream` was
    /// built from.
    pub fn scan_stream(&self, doc: &DocId, text: &str, stream: &TokenStream) -> Vec<Occurrence> {
        let tokens = &stream.tokens;
        let mut out = Vec::new();
        let mut i = 0;
        while i < tokens.len() {
            let hit = self
                .by_first_token
                .get(&tokens[i].text)
                .and_then(|cands| cands.iter().map(|&c| &self.patterns[c]).find(|p| p.matches_at(tokens, i)));
            match hit {
                Some(p) => {
                    let first = &tokens[i];
                    let last = &tokens[i + p.tokens.len() - 1];
                    out.push(Occurrence {
                        document: doc.clone(),
                        term: self.term.clone(),
                        form: p.form,
                        pos: first.start,
                        matched_text: String::from(&text[first.byte_start..last.byte_end]),
                    });
                    i += p.tokens.len();
                }
                None => i += 1,
            }
        }
        out
    }
}

/// Occurrences of one family in `document`, sorted by position.
pub fn scan(document: &Document, family: &Family) -> Vec<Occurrence> {
    let stream = normalize_stream(document.text());
    family.scan_stream(&document.id, document.text(), &stream)
}

/// Occurrences of every family in `document`, sorted by `(pos, term)`.
pub fn scan_all(document: &Document, families: &[Family]) -> Vec<Occurrence> {
    let stream = normalize_stream(document.text());
    let mut out: Vec<Occurrence> =
        families.iter().flat_map(|f| f.scan_stream(&document.id, document.text(), &stream)).collect();
    out.sort_by(|a, b| (a.pos, &a.term).cmp(&(b.pos, &b.term)));
    out
}

/// `(full-form count, reduced-form count)`.
pub fn family_counts(occurrences: &[Occurrence]) -> (usize, usize) {
    let full = occurrences.iter().filter(|o| o.form.is_full()).count();
    (full, occurrences.len() - full)
}
