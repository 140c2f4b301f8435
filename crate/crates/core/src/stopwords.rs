//! Grammatical ("weak") words: prepositions, articles and conjunctions.
//!
//! Weak words inside a term chunk are validated against these lists. Elided
//! forms are stored without their apostrophe (`d'origine` tokenizes as `d`,
//! `origine`).

use alloc::collections::BTreeSet;
use alloc::string::{String, ToString};

use crate::model::Language;

const FRENCH: &[&str] = &[
    "à", "a", "au", "aux", "avec", "chez", "contre", "d", "dans", "de", "des", "du", "en", "entre", "et", "l", "la",
    "le", "les", "ni", "ou", "par", "pour", "sans", "sous", "sur", "un", "une", "vers",
];

const ITALIAN: &[&str] = &[
    "a", "ad", "agli", "ai", "al", "all", "alla", "alle", "allo", "col", "coi", "con", "d", "da", "dagli", "dai",
    "dal", "dall", "dalla", "dalle", "dallo", "degli", "dei", "del", "dell", "della", "delle", "dello", "di", "e",
    "ed", "fra", "gli", "i", "il", "in", "l", "la", "le", "lo", "negli", "nei", "nel", "nell", "nella", "nelle",
    "nello", "o", "per", "sugli", "sui", "sul", "sull", "sulla", "sulle", "sullo", "su", "tra", "un", "una", "uno",
];

/// A set of case-folded grammatical words for one language.
///
/// An empty set means "no list configured": weak words are then accepted as
/// given and only strong words are checked (trivially) against it.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Stopwords {
    words: BTreeSet<String>,
}

impl Stopwords {
    pub fn new<I, S>(words: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        Self { words: words.into_iter().map(|w| fold(w.as_ref())).collect() }
    }

    /// Built-in list for French and Italian, empty otherwise.
    pub fn for_language(language: &Language) -> Self {
        match language {
            Language::Fr => Self::new(FRENCH),
            Language::It => Self::new(ITALIAN),
            Language::Other(_) => Self::default(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn contains(&self, word: &str) -> bool {
        self.words.contains(&fold(word))
    }
}

fn fold(word: &str) -> String {
    word.trim_end_matches(['\'', '\u{2019}']).to_lowercase().to_string()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn elided_forms_match_without_apostrophe() {
        let fr = Stopwords::for_language(&Language::Fr);
        assert!(fr.contains("d'"));
        assert!(fr.contains("De"));
        assert!(!fr.contains("production"));
    }

    #[test]
    fn other_languages_have_no_list() {
        assert!(Stopwords::for_language(&Language::Other("en".into())).is_empty());
    }
}
