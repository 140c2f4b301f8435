//! Domain types: chunked complex terms, their reduced forms, documents and
//! occurrences.
//!
//! A complex term is binary: a head chunk followed by one or more expansion
//! chunks. Each chunk is a strong (content) word, optionally preceded by weak
//! (grammatical) words that are glued to it, so `mode|de production|biologique`
//! drops `de` together with `production`.

use alloc::borrow::ToOwned;
use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::stopwords::Stopwords;
use crate::{Error, Result};

/// Coarse part-of-speech hint for a chunk's strong word.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PosHint {
    Noun,
    Adjective,
    Adverb,
    Verb,
    #[default]
    Unknown,
}

impl FromStr for PosHint {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "noun" | "n" => Ok(Self::Noun),
            "adj" | "adjective" => Ok(Self::Adjective),
            "adv" | "adverb" => Ok(Self::Adverb),
            "verb" | "v" => Ok(Self::Verb),
            "unknown" => Ok(Self::Unknown),
            other => Err(Error::Inventory { line: 0, message: format!("unknown part-of-speech hint `{other}`") }),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Chunk {
    weak_words: Vec<String>,
    strong_word: String,
    strong_pos_hint: PosHint,
}

impl Chunk {
    pub fn new<W, S>(weak_words: W, strong_word: &str, hint: PosHint) -> Result<Self>
    where
        W: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let strong_word = strong_word.trim();
        if strong_word.is_empty() {
            return Err(Error::EmptyStrongWord);
        }
        Ok(Self {
            weak_words: weak_words.into_iter().map(Into::into).collect(),
            strong_word: strong_word.to_owned(),
            strong_pos_hint: hint,
        })
    }

    /// A chunk made of a single strong word.
    pub fn strong(word: &str) -> Result<Self> {
        Self::new(core::iter::empty::<String>(), word, PosHint::Unknown)
    }

    pub fn weak_words(&self) -> &[String] {
        &self.weak_words
    }

    pub fn strong_word(&self) -> &str {
        &self.strong_word
    }

    pub fn pos_hint(&self) -> PosHint {
        self.strong_pos_hint
    }

    pub fn validate(&self, stopwords: &Stopwords) -> Result<()> {
        if !stopwords.is_empty() {
            if let Some(word) = self.weak_words.iter().find(|w| !stopwords.contains(w)) {
                return Err(Error::UnknownWeakWord { word: word.clone() });
            }
        }
        if stopwords.contains(&self.strong_word) {
            return Err(Error::StrongWordIsStopword { word: self.strong_word.clone() });
        }
        Ok(())
    }

    fn render_into(&self, out: &mut String) {
        for w in &self.weak_words {
            if !out.is_empty() {
                out.push(' ');
            }
            out.push_str(w);
        }
        if !out.is_empty() {
            out.push(' ');
        }
        out.push_str(&self.strong_word);
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "String", from = "String")]
pub enum Language {
    Fr,
    It,
    Other(String),
}

impl From<String> for Language {
    fn from(tag: String) -> Self {
        match tag.to_lowercase().as_str() {
            "fr" => Self::Fr,
            "it" => Self::It,
            _ => Self::Other(tag),
        }
    }
}

impl From<Language> for String {
    fn from(language: Language) -> Self {
        language.to_string()
    }
}

impl Default for Language {
    fn default() -> Self {
        Self::Other("und".into())
    }
}

impl fmt::Display for Language {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Fr => f.write_str("fr"),
            Self::It => f.write_str("it"),
            Self::Other(tag) => f.write_str(tag),
        }
    }
}

macro_rules! string_id {
    ($(#[$meta:meta])* $name:ident) => {
        $(#[$meta])*
        #[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
        #[serde(transparent)]
        pub struct $name(String);

        impl $name {
            pub fn new(id: impl Into<String>) -> Self {
                Self(id.into())
            }

            pub fn as_str(&self) -> &str {
                &self.0
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str(&self.0)
            }
        }

        impl From<&str> for $name {
            fn from(id: &str) -> Self {
                Self(id.into())
            }
        }
    };
}

string_id!(
    /// Stable term identifier; defaults to the rendered full form.
    TermId
);
string_id!(DocId);

/// A set of chunk indices of one term; index 0 is the head, `1..=n` the
/// components.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub struct ChunkSet(u64);

impl ChunkSet {
    pub const MAX_CHUNKS: usize = 64;

    pub fn from_bits(bits: u64) -> Self {
        Self(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    /// All chunks of a term with `chunks` chunks in total.
    pub fn full(chunks: usize) -> Self {
        debug_assert!(chunks <= Self::MAX_CHUNKS);
        if chunks == Self::MAX_CHUNKS {
            Self(u64::MAX)
        } else {
            Self((1u64 << chunks) - 1)
        }
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(indices: I) -> Result<Self> {
        let mut bits = 0u64;
        for i in indices {
            if i >= Self::MAX_CHUNKS {
                return Err(Error::ChunkOutOfRange { index: i, chunks: Self::MAX_CHUNKS });
            }
            bits |= 1 << i;
        }
        Ok(Self(bits))
    }

    pub fn contains(self, index: usize) -> bool {
        index < Self::MAX_CHUNKS && self.0 & (1 << index) != 0
    }

    pub fn insert(&mut self, index: usize) {
        self.0 |= 1 << index;
    }

    pub fn remove(&mut self, index: usize) {
        self.0 &= !(1 << index);
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset_of(self, other: ChunkSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn indices(self) -> impl Iterator<Item = usize> {
        (0..Self::MAX_CHUNKS).filter(move |&i| self.contains(i))
    }

    /// Shape of this set read as a reduction: a head followed by a
    /// contiguous prefix of components is linear, a set without the head is
    /// expansion-only, anything else is non-linear.
    pub fn shape(self) -> Shape {
        if !self.contains(0) {
            Shape::ExpansionOnly
        } else if self.0 & (self.0 + 1) == 0 {
            Shape::LinearSuffix
        } else {
            Shape::NonLinear
        }
    }
}

impl fmt::Display for ChunkSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (n, i) in self.indices().enumerate() {
            if n > 0 {
                f.write_str("+")?;
            }
            write!(f, "{i}")?;
        }
        Ok(())
    }
}

impl From<ChunkSet> for String {
    fn from(set: ChunkSet) -> String {
        set.to_string()
    }
}

impl TryFrom<String> for ChunkSet {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl FromStr for ChunkSet {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidFormKey(s.to_owned());
        if s.is_empty() {
            return Err(bad());
        }
        let mut set = ChunkSet::default();
        for part in s.split('+') {
            let i: usize = part.trim().parse().map_err(|_| bad())?;
            if i >= Self::MAX_CHUNKS || set.contains(i) {
                return Err(bad());
            }
            set.insert(i);
        }
        Ok(set)
    }
}

/// How a reduced form relates to its full form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Shape {
    /// Head plus a (possibly empty) prefix of the components; trailing
    /// components dropped.
    LinearSuffix,
    /// Head kept, but a non-final component dropped.
    NonLinear,
    /// Head dropped.
    ExpansionOnly,
}

impl Shape {
    pub const ALL: [Shape; 3] = [Shape::LinearSuffix, Shape::NonLinear, Shape::ExpansionOnly];

    pub fn as_str(self) -> &'static str {
        match self {
            Self::LinearSuffix => "linear_suffix",
            Self::NonLinear => "non_linear",
            Self::ExpansionOnly => "expansion_only",
        }
    }
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Which form of a term an occurrence matched.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub enum FormKey {
    Full,
    Reduced(ChunkSet),
}

impl FormKey {
    pub fn is_full(self) -> bool {
        matches!(self, Self::Full)
    }

    pub fn shape(self) -> Option<Shape> {
        match self {
            Self::Full => None,
            Self::Reduced(set) => Some(set.shape()),
        }
    }
}

impl fmt::Display for FormKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Full => f.write_str("full"),
            Self::Reduced(set) => set.fmt(f),
        }
    }
}

impl FromStr for FormKey {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s == "full" {
            Ok(Self::Full)
        } else {
            s.parse().map(Self::Reduced)
        }
    }
}

impl From<FormKey> for String {
    fn from(key: FormKey) -> Self {
        key.to_string()
    }
}

impl TryFrom<String> for FormKey {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComplexTerm {
    id: TermId,
    language: Language,
    head: Chunk,
    components: Vec<Chunk>,
    surface: String,
    aliases: Vec<(FormKey, String)>,
}

impl ComplexTerm {
    /// Builds a term, validating its chunks against the built-in grammatical
    /// word list for `language`.
    pub fn new(language: Language, head: Chunk, components: Vec<Chunk>) -> Result<Self> {
        let stopwords = Stopwords::for_language(&language);
        Self::with_stopwords(language, head, components, &stopwords)
    }

    pub fn with_stopwords(
        language: Language,
        head: Chunk,
        components: Vec<Chunk>,
        stopwords: &Stopwords,
    ) -> Result<Self> {
        if !head.weak_words.is_empty() {
            return Err(Error::HeadWithWeakWords);
        }
        if components.is_empty() {
            return Err(Error::NoComponents);
        }
        if components.len() + 1 > ChunkSet::MAX_CHUNKS {
            return Err(Error::TooManyChunks(components.len() + 1));
        }
        head.validate(stopwords)?;
        for c in &components {
            c.validate(stopwords)?;
        }
        let mut term = Self {
            id: TermId::default_placeholder(),
            language,
            head,
            components,
            surface: String::new(),
            aliases: Vec::new(),
        };
        term.surface = term.render_set(ChunkSet::full(term.chunk_count()));
        term.id = TermId::new(term.surface.clone());
        Ok(term)
    }

    pub fn with_id(mut self, id: TermId) -> Self {
        self.id = id;
        self
    }

    /// Registers an extra surface for a form, e.g. an agreement-adjusted
    /// reduction (`metodo biologico` for chunks `0+2` of
    /// `metodo di produzione biologica`).
    pub fn with_alias(mut self, form: FormKey, surface: &str) -> Result<Self> {
        if let FormKey::Reduced(set) = form {
            self.check_reduction(set)?;
        }
        self.aliases.push((form, surface.trim().to_owned()));
        Ok(self)
    }

    pub fn id(&self) -> &TermId {
        &self.id
    }

    pub fn language(&self) -> &Language {
        &self.language
    }

    pub fn head(&self) -> &Chunk {
        &self.head
    }

    pub fn components(&self) -> &[Chunk] {
        &self.components
    }

    pub fn aliases(&self) -> &[(FormKey, String)] {
        &self.aliases
    }

    pub fn surface(&self) -> &str {
        &self.surface
    }

    /// Number of chunks, head included.
    pub fn chunk_count(&self) -> usize {
        self.components.len() + 1
    }

    pub fn chunk(&self, index: usize) -> Option<&Chunk> {
        match index {
            0 => Some(&self.head),
            i => self.components.get(i - 1),
        }
    }

    pub fn chunks(&self) -> impl Iterator<Item = &Chunk> {
        core::iter::once(&self.head).chain(self.components.iter())
    }

    pub fn strong_word_count(&self) -> usize {
        self.chunk_count()
    }

    pub fn full_set(&self) -> ChunkSet {
        ChunkSet::full(self.chunk_count())
    }

    /// Renders the retained chunks of a proper reduction.
    pub fn render_reduction(&self, retained: ChunkSet) -> Result<String> {
        self.check_reduction(retained)?;
        Ok(self.render_set(retained))
    }

    pub fn render_form(&self, form: FormKey) -> Result<String> {
        match form {
            FormKey::Full => Ok(self.surface.clone()),
            FormKey::Reduced(set) => self.render_reduction(set),
        }
    }

    pub(crate) fn check_reduction(&self, retained: ChunkSet) -> Result<()> {
        let full = self.full_set();
        if let Some(index) = retained.indices().find(|&i| i >= self.chunk_count()) {
            return Err(Error::ChunkOutOfRange { index, chunks: self.chunk_count() });
        }
        if retained.is_empty() || retained == full {
            return Err(Error::NotAProperReduction(retained.to_string()));
        }
        Ok(())
    }

    fn render_set(&self, set: ChunkSet) -> String {
        let mut out = String::new();
        for (i, chunk) in self.chunks().enumerate() {
            if set.contains(i) {
                chunk.render_into(&mut out);
            }
        }
        out
    }
}

impl TermId {
    fn default_placeholder() -> Self {
        Self(String::new())
    }
}

/// A proper, non-empty subset of a term's chunks.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct ReducedForm {
    parent: TermId,
    retained: ChunkSet,
    shape: Shape,
    surface: String,
}

impl ReducedForm {
    pub fn new(term: &ComplexTerm, retained: ChunkSet) -> Result<Self> {
        let surface = term.render_reduction(retained)?;
        Ok(Self { parent: term.id.clone(), retained, shape: retained.shape(), surface })
    }

    pub fn parent(&self) -> &TermId {
        &self.parent
    }

    pub fn retained(&self) -> ChunkSet {
        self.retained
    }

    pub fn shape(&self) -> Shape {
        self.shape
    }

    pub fn surface(&self) -> &str {
        &self.surface
    }

    pub fn key(&self) -> FormKey {
        FormKey::Reduced(self.retained)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub struct YearMonth {
    year: i32,
    month: u8,
}

impl YearMonth {
    pub fn new(year: i32, month: u8) -> Result<Self> {
        if !(1..=12).contains(&month) {
            return Err(Error::InvalidDate(format!("{year:04}-{month:02}")));
        }
        Ok(Self { year, month })
    }

    pub fn year(self) -> i32 {
        self.year
    }

    pub fn month(self) -> u8 {
        self.month
    }

    /// Fractional year: `year + (month - 1) / 12`.
    pub fn datation(self) -> f64 {
        f64::from(self.year) + f64::from(self.month - 1) / 12.0
    }
}

impl fmt::Display for YearMonth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:04}-{:02}", self.year, self.month)
    }
}

impl FromStr for YearMonth {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidDate(s.to_owned());
        let (y, m) = s.split_once('-').ok_or_else(bad)?;
        if y.len() != 4 || m.len() != 2 {
            return Err(bad());
        }
        let year = y.parse().map_err(|_| bad())?;
        let month = m.parse().map_err(|_| bad())?;
        Self::new(year, month).map_err(|_| bad())
    }
}

impl From<YearMonth> for String {
    fn from(ym: YearMonth) -> Self {
        ym.to_string()
    }
}

impl TryFrom<String> for YearMonth {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

/// Text category: 1 popularization, 2 pedagogical, 3 specialized.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
#[serde(into = "Option<u8>", try_from = "Option<u8>")]
pub enum Category {
    Vulgarisation,
    Pedagogique,
    Specialise,
    #[default]
    Unknown,
}

impl Category {
    pub const ALL: [Category; 4] =
        [Category::Vulgarisation, Category::Pedagogique, Category::Specialise, Category::Unknown];

    pub fn number(self) -> Option<u8> {
        match self {
            Self::Vulgarisation => Some(1),
            Self::Pedagogique => Some(2),
            Self::Specialise => Some(3),
            Self::Unknown => None,
        }
    }

    pub fn from_number(n: u8) -> Result<Self> {
        match n {
            1 => Ok(Self::Vulgarisation),
            2 => Ok(Self::Pedagogique),
            3 => Ok(Self::Specialise),
            other => Err(Error::InvalidCategory(other.to_string())),
        }
    }

    /// `1`, `2`, `3` or `unknown`.
    pub fn label(self) -> String {
        match self.number() {
            Some(n) => n.to_string(),
            None => "unknown".into(),
        }
    }
}

impl From<Category> for Option<u8> {
    fn from(c: Category) -> Self {
        c.number()
    }
}

impl TryFrom<Option<u8>> for Category {
    type Error = Error;

    fn try_from(n: Option<u8>) -> Result<Self> {
        n.map_or(Ok(Self::Unknown), Self::from_number)
    }
}

/// A cleaned document. Offsets into `text` count Unicode scalar values.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "DocumentRepr")]
pub struct Document {
    pub id: DocId,
    text: String,
    char_count: usize,
    pub date: Option<YearMonth>,
    pub category: Category,
    pub domain: String,
    pub language: Language,
    pub validated: bool,
    pub domain_fast_evolving: bool,
}

#[derive(Deserialize)]
struct DocumentRepr {
    id: DocId,
    text: String,
    char_count: usize,
    date: Option<YearMonth>,
    category: Category,
    domain: String,
    language: Language,
    validated: bool,
    domain_fast_evolving: bool,
}

impl TryFrom<DocumentRepr> for Document {
    type Error = String;

    fn try_from(r: DocumentRepr) -> core::result::Result<Self, String> {
        let mut doc = Document::new(r.id, r.text);
        if doc.char_count != r.char_count {
            return Err(format!(
                "document `{}`: char_count {} does not match text length {}",
                doc.id, r.char_count, doc.char_count
            ));
        }
        doc.date = r.date;
        doc.category = r.category;
        doc.domain = r.domain;
        doc.language = r.language;
        doc.validated = r.validated;
        doc.domain_fast_evolving = r.domain_fast_evolving;
        Ok(doc)
    }
}

impl Document {
    /// An undated, uncategorized, validated document.
    pub fn new(id: DocId, text: String) -> Self {
        let char_count = text.chars().count();
        Self {
            id,
            text,
            char_count,
            date: None,
            category: Category::Unknown,
            domain: String::new(),
            language: Language::default(),
            validated: true,
            domain_fast_evolving: false,
        }
    }

    pub fn text(&self) -> &str {
        &self.text
    }

    pub fn char_count(&self) -> usize {
        self.char_count
    }

    pub fn with_date(mut self, date: YearMonth) -> Self {
        self.date = Some(date);
        self
    }

    pub fn with_category(mut self, category: Category) -> Self {
        self.category = category;
        self
    }
}

/// One match of a term's full or reduced form in a document.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Occurrence {
    #[serde(rename = "doc")]
    pub document: DocId,
    pub term: TermId,
    pub form: FormKey,
    /// Character offset of the first matched character.
    pub pos: usize,
    #[serde(rename = "text")]
    pub matched_text: String,
}

impl Occurrence {
    /// Identifier used as an annotation target: `doc@pos:term`.
    pub fn id(&self) -> String {
        format!("{}@{}:{}", self.document, self.pos, self.term)
    }

    /// Length of the matched span in characters.
    pub fn char_len(&self) -> usize {
        self.matched_text.chars().count()
    }
}

/// Expert verdict on a scanned occurrence.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OccurrenceLabel {
    Full,
    AnaphoricReduction,
    CataphoricReduction,
    LexicalReduction,
    /// Not a form of the term at all, e.g. a bare hyperonym.
    NotAVariant,
}

impl OccurrenceLabel {
    pub const ALL: [OccurrenceLabel; 5] =
        [Self::Full, Self::AnaphoricReduction, Self::CataphoricReduction, Self::LexicalReduction, Self::NotAVariant];

    pub fn as_str(self) -> &'static str {
        match self {
            Self::Full => "full",
            Self::AnaphoricReduction => "anaphoric_reduction",
            Self::CataphoricReduction => "cataphoric_reduction",
            Self::LexicalReduction => "lexical_reduction",
            Self::NotAVariant => "not_a_variant",
        }
    }
}

impl FromStr for OccurrenceLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL.into_iter().find(|l| l.as_str() == s).ok_or_else(|| Error::InvalidLabel(s.to_string()))
    }
}

/// An ordered set of documents.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Corpus {
    pub id: String,
    documents: Vec<Document>,
}

impl Corpus {
    /// Orders documents by `(date, id)` when every document is dated and
    /// keeps the given order otherwise.
    pub fn new(id: impl Into<String>, mut documents: Vec<Document>) -> Result<Self> {
        let mut seen = BTreeSet::new();
        for d in &documents {
            if !seen.insert(d.id.clone()) {
                return Err(Error::DuplicateDocument(d.id.to_string()));
            }
        }
        if documents.iter().all(|d| d.date.is_some()) {
            documents.sort_by(|a, b| (a.date, &a.id).cmp(&(b.date, &b.id)));
        }
        Ok(Self { id: id.into(), documents })
    }

    pub fn documents(&self) -> &[Document] {
        &self.documents
    }

    pub fn document(&self, id: &DocId) -> Option<&Document> {
        self.documents.iter().find(|d| &d.id == id)
    }

    pub fn is_dated(&self) -> bool {
        self.documents.iter().all(|d| d.date.is_some())
    }

    /// Fails with the first undated document, if any.
    pub fn require_dated(&self) -> Result<()> {
        match self.documents.iter().find(|d| d.date.is_none()) {
            Some(d) => Err(Error::UndatedDocument(d.id.to_string())),
            None => Ok(()),
        }
    }

    pub fn into_documents(self) -> Vec<Document> {
        self.documents
    }
}
