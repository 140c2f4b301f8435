use alloc::string::String;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("chunk has an empty strong word")]
    EmptyStrongWord,
    #[error("weak word `{word}` is not a known grammatical word")]
    UnknownWeakWord { word: String },
    #[error("strong word `{word}` is a grammatical word")]
    StrongWordIsStopword { word: String },
    #[error("the head chunk cannot carry weak words")]
    HeadWithWeakWords,
    #[error("a complex term needs at least one component")]
    NoComponents,
    #[error("term has {0} chunks; at most 64 are supported")]
    TooManyChunks(usize),
    #[error("retained chunk set {0} is not a proper reduction")]
    NotAProperReduction(String),
    #[error("chunk index {index} out of range for a term with {chunks} chunks")]
    ChunkOutOfRange { index: usize, chunks: usize },
    #[error("reduced form belongs to `{found}`, not `{expected}`")]
    ParentMismatch { expected: String, found: String },
    #[error("invalid form key `{0}`")]
    InvalidFormKey(String),
    #[error("invalid date `{0}`, expected YYYY-MM")]
    InvalidDate(String),
    #[error("invalid category `{0}`")]
    InvalidCategory(String),
    #[error("invalid occurrence label `{0}`")]
    InvalidLabel(String),
    #[error("line {line}: {message}")]
    Inventory { line: usize, message: String },
    #[error("document `{0}` has no characters")]
    EmptyDocument(String),
    #[error("document `{0}` is undated")]
    UndatedDocument(String),
    #[error("unknown document `{0}`")]
    UnknownDocument(String),
    #[error("position {pos} is beyond the end of document `{doc}` ({len} characters)")]
    PositionOutOfRange { doc: String, pos: usize, len: usize },
    #[error("time values must be positive, got {0}")]
    NonPositiveTime(f64),
    #[error("{0} requires at least {1} values")]
    TooFewValues(&'static str, usize),
    #[error("x and y have different lengths ({0} vs {1})")]
    LengthMismatch(usize, usize),
    #[error("smoothing fraction must be in (0, 1], got {0}")]
    InvalidFraction(f64),
    #[error("non-finite input value")]
    NonFinite,
    #[error("duplicate document id `{0}`")]
    DuplicateDocument(String),
    #[error("empty corpus")]
    EmptyCorpus,
}
