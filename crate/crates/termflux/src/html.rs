//! Plain-text extraction from HTML.
//!
//! Tags are dropped, `script`, `style` and `noscript` elements are dropped
//! with their content, entities are decoded and block-level elements become
//! line breaks. Whitespace is kept as written so that character offsets stay
//! meaningful to a reader of the cleaned text.

use crate::{Error, Result};

const SKIPPED: &[&str] = &["script", "style", "noscript"];

const BLOCKS: &[&str] = &[
    "address",
    "article",
    "aside",
    "blockquote",
    "dd",
    "div",
    "dl",
    "dt",
    "figcaption",
    "figure",
    "footer",
    "form",
    "h1",
    "h2",
    "h3",
    "h4",
    "h5",
    "h6",
    "header",
    "hr",
    "li",
    "main",
    "nav",
    "ol",
    "p",
    "pre",
    "section",
    "table",
    "tbody",
    "thead",
    "tfoot",
    "title",
    "tr",
    "ul",
];

pub fn strip_html(bytes: &[u8]) -> Result<String> {
    let text = std::str::from_utf8(bytes).map_err(|e| Error::InvalidUtf8(e.valid_up_to()))?;
    Ok(strip_html_str(text))
}

pub fn strip_html_str(html: &str) -> String {
    let mut out = String::with_capacity(html.len());
    let mut rest = html;
    while let Some(lt) = rest.find('<') {
        push_text(&mut out, &rest[..lt]);
        let tail = &rest[lt..];
        match parse_markup(tail) {
            Some(Markup::Comment(len)) => rest = &tail[len..],
            Some(Markup::Tag { name, closing, len }) => {
                rest = &tail[len..];
                if !closing && SKIPPED.contains(&name.as_str()) {
                    rest = skip_element(rest, &name);
                } else if name == "br"
                    || BLOCKS.contains(&name.as_str()) && (closing || !out.is_empty() && !out.ends_with('\n'))
                {
                    out.push('\n');
                }
            }
            None => {
                out.push('<');
                rest = &tail[1..];
            }
        }
    }
    push_text(&mut out, rest);
    out
}

fn push_text(out: &mut String, raw: &str) {
    if raw.contains('&') {
        out.push_str(&html_escape::decode_html_entities(raw));
    } else {
        out.push_str(raw);
    }
}

enum Markup {
    Comment(usize),
    Tag { name: String, closing: bool, len: usize },
}

/// Recognizes the markup starting at `s[0] == '<'`; `None` when the `<` is
/// plain text.
fn parse_markup(s: &str) -> Option<Markup> {
    if let Some(body) = s.strip_prefix("<!--") {
        let end = body.find("-->").map_or(s.len(), |i| 4 + i + 3);
        return Some(Markup::Comment(end));
    }
    let next = s[1..].chars().next()?;
    if next == '!' || next == '?' {
        let end = s.find('>').map_or(s.len(), |i| i + 1);
        return Some(Markup::Comment(end));
    }
    let (closing, name_start) = if next == '/' { (true, 2) } else { (false, 1) };
    let name: String = s[name_start..].chars().take_while(|c| c.is_ascii_alphanumeric()).collect();
    if name.is_empty() || !name.starts_with(|c: char| c.is_ascii_alphabetic()) {
        return None;
    }
    let len = tag_end(s)?;
    Some(Markup::Tag { name: name.to_ascii_lowercase(), closing, len })
}

/// Byte length of the tag at the start of `s`, honouring quoted attribute
/// values.
fn tag_end(s: &str) -> Option<usize> {
    let mut quote = None;
    for (i, c) in s.char_indices().skip(1) {
        match (quote, c) {
            (Some(q), c) if c == q => quote = None,
            (Some(_), _) => {}
            (None, '"' | '\'') => quote = Some(c),
            (None, '>') => return Some(i + 1),
            _ => {}
        }
    }
    None
}

/// Skips past the closing tag of a raw-text element, or to the end.
fn skip_element<'a>(s: &'a str, name: &str) -> &'a str {
    let lower = s.to_ascii_lowercase();
    let needle = format!("</{name}");
    let mut from = 0;
    while let Some(i) = lower[from..].find(&needle) {
        let at = from + i;
        let after = lower[at + needle.len()..].chars().next();
        if after.is_none_or(|c| !c.is_ascii_alphanumeric()) {
            return match s[at..].find('>') {
                Some(j) => &s[at + j + 1..],
                None => "",
            };
        }
        from = at + needle.len();
    }
    ""
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn paragraph_with_inline_markup() {
        assert_eq!(strip_html(b"<p>degrado <b>ambientale</b></p>").unwrap(), "degrado ambientale\n");
    }

    #[test]
    fn plain_text_is_untouched() {
        let s = "mode de production biologique.\n  Deux lignes.";
        assert_eq!(strip_html(s.as_bytes()).unwrap(), s);
    }

    #[test]
    fn scripts_and_styles_vanish() {
        let html = "<div>a<script type=\"x\">if (1 < 2) { document.write('</p>') }</script>b\
                    <STYLE>p { color: red }</STYLE>c<noscript><p>no</p></noscript></div>";
        assert_eq!(strip_html(html.as_bytes()).unwrap(), "abc\n");
    }

    #[test]
    fn entities_and_breaks() {
        let html = "<h1>Caf&eacute; &amp; th&#233;</h1>ligne<br/>suivante &lt;ok&gt;";
        assert_eq!(strip_html(html.as_bytes()).unwrap(), "Café & thé\nligne\nsuivante <ok>");
    }

    #[test]
    fn blocks_do_not_stack_newlines() {
        assert_eq!(strip_html(b"<div><p>a</p><p>b</p></div>").unwrap(), "a\nb\n\n");
        assert_eq!(strip_html(b"x<p>y").unwrap(), "x\ny");
    }

    #[test]
    fn comments_doctype_and_stray_brackets() {
        let html = "<!DOCTYPE html><!-- <p>hidden</p> -->1 < 2 <3";
        assert_eq!(strip_html(html.as_bytes()).unwrap(), "1 < 2 <3");
    }

    #[test]
    fn attributes_with_angle_brackets() {
        assert_eq!(strip_html(b"<a title=\"x > y\">lien</a>").unwrap(), "lien");
    }

    #[test]
    fn invalid_utf8() {
        assert!(matches!(strip_html(b"ok\xff"), Err(Error::InvalidUtf8(2))));
    }
}
