//! Term inventory format.
//!
//! One term per line, chunks separated by `|`, head first. Inside a chunk the
//! last word is the strong word and any preceding words are weak words. A
//! strong word may carry a part-of-speech hint after a slash. Lines starting
//! with `#` are comments. Optional `;`-separated settings follow the chunks:
//!
//! ```text
//! # head|component|component ; setting ; ...
//! mode|de production|biologique
//! metodo|di produzione|biologica ; lang=it ; alias 0+2 = metodo biologico
//! dimensione|propriamente/adv|etica ; id=dim-etica
//! ```
//!
//! Settings: `lang=<tag>`, `id=<term id>`, `alias <form> = <surface>` where
//! `<form>` is `full` or a `+`-joined chunk index set (`0` is the head).

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::model::{Chunk, ComplexTerm, FormKey, Language, PosHint, TermId};
use crate::{Error, Result};

pub fn parse_inventory(text: &str, default_language: &Language) -> Result<Vec<ComplexTerm>> {
    let mut terms: Vec<ComplexTerm> = Vec::new();
    for (n, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let term = parse_line(line, default_language).map_err(|e| with_line(e, n + 1))?;
        if terms.iter().any(|t| t.id() == term.id()) {
            return Err(Error::Inventory { line: n + 1, message: format!("duplicate term id `{}`", term.id()) });
        }
        terms.push(term);
    }
    Ok(terms)
}

fn with_line(err: Error, line: usize) -> Error {
    match err {
        Error::Inventory { message, .. } => Error::Inventory { line, message },
        other => Error::Inventory { line, message: format!("{other}") },
    }
}

fn invalid(message: String) -> Error {
    Error::Inventory { line: 0, message }
}

fn parse_line(line: &str, default_language: &Language) -> Result<ComplexTerm> {
    let mut fields = line.split(';').map(str::trim);
    let chunk_field = fields.next().unwrap_or_default();

    let mut language = default_language.clone();
    let mut id = None;
    let mut aliases = Vec::new();
    for setting in fields.filter(|f| !f.is_empty()) {
        if let Some(tag) = setting.strip_prefix("lang=") {
            language = Language::from(String::from(tag.trim()));
        } else if let Some(value) = setting.strip_prefix("id=") {
            id = Some(TermId::new(value.trim()));
        } else if let Some(rest) = setting.strip_prefix("alias ") {
            let (key, surface) =
                rest.split_once('=').ok_or_else(|| invalid(format!("alias without `=`: `{setting}`")))?;
            let key: FormKey = key.trim().parse()?;
            if surface.trim().is_empty() {
                return Err(invalid(format!("empty alias surface in `{setting}`")));
            }
            aliases.push((key, surface.trim()));
        } else {
            return Err(invalid(format!("unknown setting `{setting}`")));
        }
    }

    let mut chunks = chunk_field.split('|').map(parse_chunk);
    let head = chunks.next().ok_or_else(|| invalid("empty term".into()))??;
    let components = chunks.collect::<Result<Vec<_>>>()?;
    let mut term = ComplexTerm::new(language, head, components)?;
    if let Some(id) = id {
        term = term.with_id(id);
    }
    for (key, surface) in aliases {
        term = term.with_alias(key, surface)?;
    }
    Ok(term)
}

fn parse_chunk(text: &str) -> Result<Chunk> {
    let words: Vec<&str> = text.split_whitespace().collect();
    let (last, weak) = words.split_last().ok_or(Error::EmptyStrongWord)?;
    let (strong, hint) = match last.split_once('/') {
        Some((w, h)) => (w, h.parse::<PosHint>()?),
        None => (*last, PosHint::Unknown),
    };
    Chunk::new(weak.iter().copied(), strong, hint)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::ChunkSet;

    #[test]
    fn parses_chunks_and_weak_words() {
        let terms = parse_inventory("mode|de production|biologique\n", &Language::Fr).unwrap();
        assert_eq!(terms.len(), 1);
        let t = &terms[0];
        assert_eq!(t.head().strong_word(), "mode");
        assert_eq!(t.components()[0].weak_words(), ["de"]);
        assert_eq!(t.components()[0].strong_word(), "production");
        assert_eq!(t.surface(), "mode de production biologique");
    }

    #[test]
    fn skips_comments_and_blank_lines() {
        let text = "# terms\n\n  degrado|ambientale\n# done\n";
        let terms = parse_inventory(text, &Language::It).unwrap();
        assert_eq!(terms.len(), 1);
        assert_eq!(terms[0].language(), &Language::It);
    }

    #[test]
    fn reads_settings() {
        let text = "metodo|di produzione|biologica ; lang=it ; id=mpb ; alias 0+2 = metodo biologico";
        let t = &parse_inventory(text, &Language::Fr).unwrap()[0];
        assert_eq!(t.id().as_str(), "mpb");
        assert_eq!(t.language(), &Language::It);
        let key = FormKey::Reduced(ChunkSet::from_indices([0, 2]).unwrap());
        assert_eq!(t.aliases(), [(key, String::from("metodo biologico"))]);
    }

    #[test]
    fn reads_pos_hints() {
        let t = &parse_inventory("dimensione|propriamente/adv|etica", &Language::It).unwrap()[0];
        assert_eq!(t.components()[0].pos_hint(), PosHint::Adverb);
        assert_eq!(t.components()[0].strong_word(), "propriamente");
    }

    #[test]
    fn errors_carry_line_numbers() {
        let err = parse_inventory("degrado|ambientale\nmode\n", &Language::It).unwrap_err();
        assert!(matches!(err, Error::Inventory { line: 2, .. }), "{err:?}");
        let err = parse_inventory("a|b\na|b\n", &Language::Other("x".into())).unwrap_err();
        assert!(matches!(err, Error::Inventory { line: 2, .. }));
        let err = parse_inventory("a|b ; colour=red", &Language::Fr).unwrap_err();
        assert!(matches!(err, Error::Inventory { line: 1, .. }));
    }

    #[test]
    fn alias_must_name_a_proper_reduction() {
        assert!(parse_inventory("tasso|crescita ; alias 0+1 = x", &Language::It).is_err());
        assert!(parse_inventory("tasso|crescita ; alias full = tassi", &Language::It).is_ok());
    }
}
