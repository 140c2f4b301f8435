//! Rule-based judgment of reduction couples.
//!
//! | rule | condition                                                    | label              |
//! |------|--------------------------------------------------------------|--------------------|
//! | 1    | linear suffix, full form first, category 1                   | likely anaphoric   |
//! | 2    | linear suffix, and reduced form first or category 3          | unlikely anaphoric |
//! | 3    | non-linear or expansion-only, fast-evolving domain           | possible lexical   |
//!
//! The conditions are pairwise disjoint, so at most one rule fires.

use serde::{Deserialize, Serialize};

use crate::model::{Category, Occurrence, Shape};

/// Where a reduced occurrence sits relative to the full forms of its term in
/// the same document.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Order {
    /// A full form occurs earlier in the document.
    FullFirst,
    /// Full forms occur only later in the document.
    ReducedFirst,
    /// The document has no full form of the term.
    NotApplicable,
}

impl Order {
    pub const ALL: [Order; 3] = [Self::FullFirst, Self::ReducedFirst, Self::NotApplicable];

    pub fn as_str(self) -> &'static str {
        match self {
            Self::FullFirst => "full_first",
            Self::ReducedFirst => "reduced_first",
            Self::NotApplicable => "not_applicable",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ReductionLabel {
    LikelyAnaphoric,
    UnlikelyAnaphoric,
    PossibleLexical,
    Undetermined,
}

impl ReductionLabel {
    pub fn as_str(self) -> &'static str {
        match self {
            Self::LikelyAnaphoric => "likely_anaphoric",
            Self::UnlikelyAnaphoric => "unlikely_anaphoric",
            Self::PossibleLexical => "possible_lexical",
            Self::Undetermined => "undetermined",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(into = "u8", try_from = "u8")]
pub enum Rule {
    One,
    Two,
    Three,
}

impl From<Rule> for u8 {
    fn from(r: Rule) -> u8 {
        match r {
            Rule::One => 1,
            Rule::Two => 2,
            Rule::Three => 3,
        }
    }
}

impl TryFrom<u8> for Rule {
    type Error = crate::Error;

    fn try_from(n: u8) -> crate::Result<Self> {
        match n {
            1 => Ok(Self::One),
            2 => Ok(Self::Two),
            3 => Ok(Self::Three),
            _ => Err(crate::Error::InvalidLabel(alloc::format!("rule {n}"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Evidence {
    pub shape: Shape,
    pub order: Order,
    pub category: Category,
    pub domain_fast_evolving: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ReductionJudgment {
    pub label: ReductionLabel,
    pub rule_fired: Option<Rule>,
    pub evidence: Evidence,
}

pub fn judge(shape: Shape, order: Order, category: Category, domain_fast_evolving: bool) -> ReductionJudgment {
    let linear = shape == Shape::LinearSuffix;
    let (label, rule_fired) = if linear && order == Order::FullFirst && category == Category::Vulgarisation {
        (ReductionLabel::LikelyAnaphoric, Some(Rule::One))
    } else if linear && (order == Order::ReducedFirst || category == Category::Specialise) {
        (ReductionLabel::UnlikelyAnaphoric, Some(Rule::Two))
    } else if !linear && domain_fast_evolving {
        (ReductionLabel::PossibleLexical, Some(Rule::Three))
    } else {
        (ReductionLabel::Undetermined, None)
    };
    ReductionJudgment { label, rule_fired, evidence: Evidence { shape, order, category, domain_fast_evolving } }
}

/// Order of `target` among `others`, which may include `target` itself and
/// occurrences of other documents or terms (both are ignored).
pub fn occurrence_order<'a, I>(target: &Occurrence, others: I) -> Order
where
    I: IntoIterator<Item = &'a Occurrence>,
{
    let mut later = false;
    for o in others {
        if o.document != target.document || o.term != target.term || !o.form.is_full() || o.pos == target.pos {
            continue;
        }
        if o.pos < target.pos {
            return Order::FullFirst;
        }
        later = true;
    }
    if later {
        Order::ReducedFirst
    } else {
        Order::NotApplicable
    }
}

/// Judgment for a reduced occurrence; `None` for full forms.
pub fn judge_occurrence<'a, I>(
    target: &Occurrence,
    document_occurrences: I,
    category: Category,
    domain_fast_evolving: bool,
) -> Option<ReductionJudgment>
where
    I: IntoIterator<Item = &'a Occurrence>,
{
    let shape = target.form.shape()?;
    let order = occurrence_order(target, document_occurrences);
    Some(judge(shape, order, category, domain_fast_evolving))
}
