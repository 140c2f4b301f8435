//! Reduced-form generation and the reduction lattice.
//!
//! For a term `t c1 .. cn` the head-retaining reductions are all proper
//! subsets of the components kept behind the head: `2^n - 1` forms, from
//! `t c1 .. c(n-1)` down to the bare head. Lattice edges drop exactly one
//! chunk. Anaphoric reductions can only run along the left border
//! (drop-last-chunk chain); every other edge is a candidate lexical reduction.

use alloc::string::ToString;
use alloc::vec::Vec;

use crate::model::{ChunkSet, ComplexTerm, PosHint, ReducedForm, Shape};
use crate::{Error, Result};

/// Every head-retaining proper reduction of `term`, plus the expansion-only
/// form (all components, no head) when `include_expansion_only` is set.
///
/// Forms come out largest first, ties broken by chunk set.
pub fn generate_reductions(term: &ComplexTerm, include_expansion_only: bool) -> Vec<ReducedForm> {
    let mut sets = head_retaining_sets(term);
    sets.retain(|&s| s != term.full_set());
    if include_expansion_only {
        let mut tail = term.full_set();
        tail.remove(0);
        sets.push(tail);
    }
    sort_sets(&mut sets);
    sets.into_iter().map(|s| ReducedForm::new(term, s).expect("generated sets are proper reductions")).collect()
}

fn head_retaining_sets(term: &ComplexTerm) -> Vec<ChunkSet> {
    let n = term.components().len();
    (0..1u64 << n).map(|mask| ChunkSet::from_bits((mask << 1) | 1)).collect()
}

fn sort_sets(sets: &mut [ChunkSet]) {
    sets.sort_by(|a, b| b.len().cmp(&a.len()).then(a.cmp(b)));
}

/// Directed graph of forms where each edge drops exactly one chunk.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionLattice {
    nodes: Vec<ChunkSet>,
    edges: Vec<(usize, usize)>,
    full: ChunkSet,
}

impl ReductionLattice {
    /// Node 0 is always the full form.
    pub fn nodes(&self) -> &[ChunkSet] {
        &self.nodes
    }

    /// `(from, to)` pairs of node indices.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn full(&self) -> ChunkSet {
        self.full
    }

    pub fn node_index(&self, set: ChunkSet) -> Option<usize> {
        self.nodes.iter().position(|&n| n == set)
    }

    /// The drop-last-chunk chain from the full form to the bare head.
    pub fn left_border(&self) -> Vec<ChunkSet> {
        let mut chain = Vec::new();
        let mut cur = self.full;
        while !cur.is_empty() {
            chain.push(cur);
            let last = cur.indices().last().expect("non-empty");
            if last == 0 {
                break;
            }
            cur.remove(last);
        }
        chain
    }

    /// Nodes reachable from `from` along edges (including `from`).
    pub fn reachable_from(&self, from: usize) -> Vec<bool> {
        let mut seen = alloc::vec![false; self.nodes.len()];
        let mut stack = alloc::vec![from];
        while let Some(i) = stack.pop() {
            if core::mem::replace(&mut seen[i], true) {
                continue;
            }
            stack.extend(self.edges.iter().filter(|e| e.0 == i).map(|e| e.1));
        }
        seen
    }
}

pub fn build_lattice(term: &ComplexTerm) -> ReductionLattice {
    build_lattice_with(term, false)
}

/// Lattice over the full form and all head-retaining reductions; with
/// `include_expansion_only`, also the head-less tail and its edge from the
/// full form.
pub fn build_lattice_with(term: &ComplexTerm, include_expansion_only: bool) -> ReductionLattice {
    let full = term.full_set();
    let mut nodes = head_retaining_sets(term);
    if include_expansion_only {
        let mut tail = full;
        tail.remove(0);
        nodes.push(tail);
    }
    sort_sets(&mut nodes);
    debug_assert_eq!(nodes[0], full);

    let mut edges = Vec::new();
    for (i, &from) in nodes.iter().enumerate() {
        for (j, &to) in nodes.iter().enumerate() {
            if to.len() + 1 == from.len() && to.is_subset_of(from) {
                edges.push((i, j));
            }
        }
    }
    ReductionLattice { nodes, edges, full }
}

/// Shape of `reduced` relative to `full`.
pub fn classify_shape(full: &ComplexTerm, reduced: &ReducedForm) -> Result<Shape> {
    if reduced.parent() != full.id() {
        return Err(Error::ParentMismatch { expected: full.id().to_string(), found: reduced.parent().to_string() });
    }
    full.check_reduction(reduced.retained())?;
    Ok(reduced.retained().shape())
}

/// Whether `term` qualifies for the lexical-reduction study: at least three
/// strong words and no adverbial component.
pub fn is_admissible_3complex(term: &ComplexTerm) -> bool {
    term.strong_word_count() >= 3 && term.components().iter().all(|c| c.pos_hint() != PosHint::Adverb)
}
