//! JSON API for expert validation, under `/api/v1/`.
//!
//! | method | path                  | notes                                          |
//! |--------|-----------------------|------------------------------------------------|
//! | GET    | `/documents`          | `?status=all\|validated\|unvalidated`          |
//! | GET    | `/documents/{id}`     | text plus occurrence spans                     |
//! | GET    | `/occurrences`        | `?doc=<id>` to restrict to one document        |
//! | GET    | `/terms`              |                                                |
//! | POST   | `/annotations`        | 201, 422 on a malformed record, 409 on an unknown target |
//! | GET    | `/annotations`        | `?target=<id>`; log order                      |
//! | GET    | `/stats/ana`          | `?format=csv` gives the `ana-stats` CSV        |
//! | GET    | `/stats/chrono`       | `?format=csv`, `?N=` as for `chrono-stats`     |
//!
//! The corpus and its scan are fixed at startup. Writes to the annotation log
//! go through one mutex; readers take a snapshot of the replayed state.

use std::path::{Path, PathBuf};
use std::sync::{Arc, Mutex, RwLock};

use axum::body::Bytes;
use axum::extract::{Path as UrlPath, Query, State};
use axum::http::{header, StatusCode};
use axum::response::{IntoResponse, Response};
use axum::routing::get;
use axum::{Json, Router};
use serde::{Deserialize, Serialize};
use termflux_core::chrono::DEFAULT_ONSET_COUNT;
use termflux_core::{
    Category, ComplexTerm, Corpus, DocId, Document, FormKey, Language, Occurrence, OccurrenceLabel, Shape, YearMonth,
};

use crate::annotations::{check_record, AnnotationLog, AnnotationRecord, AnnotationState, TargetIndex};
use crate::pipeline::{ana_csv, ana_report, chrono_csv, chrono_report, families, scan_corpus};
use crate::report::Format;
use crate::{Error, Result};

pub struct AppState {
    corpus: Corpus,
    terms: Vec<ComplexTerm>,
    occurrences: Vec<Occurrence>,
    targets: TargetIndex,
    onset_count: usize,
    log: Mutex<AnnotationLog>,
    annotations: RwLock<Annotations>,
}

#[derive(Default)]
struct Annotations {
    records: Vec<AnnotationRecord>,
    state: AnnotationState,
}

impl AppState {
    /// Scans `corpus` and replays the log at `log_path`, creating it if
    /// missing.
    pub fn new(
        corpus: Corpus,
        terms: Vec<ComplexTerm>,
        include_expansion_only: bool,
        onset_count: usize,
        log_path: &Path,
    ) -> Result<Self> {
        let occurrences = scan_corpus(&corpus, &families(&terms, include_expansion_only));
        let targets = TargetIndex {
            documents: corpus.documents().iter().map(|d| d.id.clone()).collect(),
            occurrences: occurrences.iter().map(Occurrence::id).collect(),
        };
        let (log, records) = AnnotationLog::open(log_path)?;
        let state = AnnotationState::replay(&records);
        Ok(Self {
            corpus,
            terms,
            occurrences,
            targets,
            onset_count,
            log: Mutex::new(log),
            annotations: RwLock::new(Annotations { records, state }),
        })
    }

    fn snapshot(&self) -> (Corpus, AnnotationState) {
        let guard = self.annotations.read().expect("annotation lock poisoned");
        (guard.state.apply_to(&self.corpus), guard.state.clone())
    }

    /// Validates, appends and applies one record.
    pub fn submit(&self, record: AnnotationRecord) -> Result<AnnotationRecord> {
        check_record(&record, &self.targets)?;
        let mut log = self.log.lock().expect("log lock poisoned");
        log.append(&record)?;
        let mut guard = self.annotations.write().expect("annotation lock poisoned");
        guard.state.apply(&record);
        guard.records.push(record.clone());
        Ok(record)
    }
}

pub fn router(state: Arc<AppState>, ui_dir: Option<PathBuf>) -> Router {
    let api = Router::new()
        .route("/documents", get(list_documents))
        .route("/documents/{id}", get(get_document))
        .route("/occurrences", get(list_occurrences))
        .route("/terms", get(list_terms))
        .route("/annotations", get(list_annotations).post(post_annotation))
        .route("/stats/ana", get(ana_stats))
        .route("/stats/chrono", get(chrono_stats))
        .with_state(state);
    let app = Router::new().nest("/api/v1", api);
    match ui_dir {
        Some(dir) => app.fallback_service(tower_http::services::ServeDir::new(dir)),
        None => app,
    }
}

pub async fn serve(state: Arc<AppState>, port: u16, ui_dir: Option<PathBuf>) -> Result<()> {
    let addr = std::net::SocketAddr::from(([127, 0, 0, 1], port));
    let listener = tokio::net::TcpListener::bind(addr).await.map_err(|e| Error::io(format!("bind {addr}"), e))?;
    eprintln!("listening on http://{addr}/api/v1/");
    axum::serve(listener, router(state, ui_dir))
        .with_graceful_shutdown(async {
            let _ = tokio::signal::ctrl_c().await;
        })
        .await
        .map_err(|e| Error::io("serve", e))
}

struct ApiError(StatusCode, String);

impl IntoResponse for ApiError {
    fn into_response(self) -> Response {
        (self.0, Json(serde_json::json!({ "error": self.1 }))).into_response()
    }
}

impl From<Error> for ApiError {
    fn from(e: Error) -> Self {
        let status = match e {
            Error::UnknownTarget(_) => StatusCode::CONFLICT,
            Error::Annotation(_) | Error::Json(_) => StatusCode::UNPROCESSABLE_ENTITY,
            Error::Core(_) => StatusCode::UNPROCESSABLE_ENTITY,
            _ => StatusCode::INTERNAL_SERVER_ERROR,
        };
        Self(status, e.to_string())
    }
}

fn not_found(what: &str, id: &str) -> ApiError {
    ApiError(StatusCode::NOT_FOUND, format!("unknown {what} `{id}`"))
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct DocumentSummary {
    pub id: DocId,
    pub date: Option<YearMonth>,
    pub category: Category,
    pub domain: String,
    pub language: Language,
    pub domain_fast_evolving: bool,
    pub validated: bool,
    pub char_count: usize,
    pub occurrence_count: usize,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct Span {
    pub id: String,
    pub doc: DocId,
    pub term: String,
    pub form: FormKey,
    /// `None` for full forms.
    pub shape: Option<Shape>,
    pub pos: usize,
    /// Character offset one past the match.
    pub end: usize,
    pub text: String,
    pub label: Option<OccurrenceLabel>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct DocumentDetail {
    #[serde(flatten)]
    pub summary: DocumentSummary,
    pub text: String,
    pub spans: Vec<Span>,
}

impl AppState {
    fn spans_of(&self, doc: Option<&DocId>, annotations: &AnnotationState) -> Vec<Span> {
        self.occurrences
            .iter()
            .filter(|o| doc.is_none_or(|d| &o.document == d))
            .map(|o| {
                let id = o.id();
                Span {
                    label: annotations.label(&id),
                    id,
                    doc: o.document.clone(),
                    term: o.term.to_string(),
                    form: o.form,
                    shape: o.form.shape(),
                    pos: o.pos,
                    end: o.pos + o.char_len(),
                    text: o.matched_text.clone(),
                }
            })
            .collect()
    }

    fn summary(&self, d: &Document) -> DocumentSummary {
        DocumentSummary {
            id: d.id.clone(),
            date: d.date,
            category: d.category,
            domain: d.domain.clone(),
            language: d.language.clone(),
            domain_fast_evolving: d.domain_fast_evolving,
            validated: d.validated,
            char_count: d.char_count(),
            occurrence_count: self.occurrences.iter().filter(|o| o.document == d.id).count(),
        }
    }
}

#[derive(Debug, Deserialize)]
struct StatusQuery {
    status: Option<String>,
}

async fn list_documents(
    State(app): State<Arc<AppState>>,
    Query(q): Query<StatusQuery>,
) -> Result<Json<Vec<DocumentSummary>>, ApiError> {
    let keep: fn(&Document) -> bool = match q.status.as_deref() {
        None | Some("all") => |_| true,
        Some("validated") => |d| d.validated,
        Some("unvalidated") => |d| !d.validated,
        Some(other) => {
            return Err(ApiError(
                StatusCode::UNPROCESSABLE_ENTITY,
                format!("status `{other}`: expected all, validated or unvalidated"),
            ))
        }
    };
    let (corpus, _) = app.snapshot();
    Ok(Json(corpus.documents().iter().filter(|d| keep(d)).map(|d| app.summary(d)).collect()))
}

async fn get_document(
    State(app): State<Arc<AppState>>,
    UrlPath(id): UrlPath<String>,
) -> Result<Json<DocumentDetail>, ApiError> {
    let (corpus, annotations) = app.snapshot();
    let doc_id = DocId::new(id.clone());
    let doc = corpus.document(&doc_id).ok_or_else(|| not_found("document", &id))?;
    Ok(Json(DocumentDetail {
        summary: app.summary(doc),
        text: doc.text().to_owned(),
        spans: app.spans_of(Some(&doc_id), &annotations),
    }))
}

#[derive(Debug, Deserialize)]
struct DocQuery {
    doc: Option<String>,
}

async fn list_occurrences(
    State(app): State<Arc<AppState>>,
    Query(q): Query<DocQuery>,
) -> Result<Json<Vec<Span>>, ApiError> {
    let (corpus, annotations) = app.snapshot();
    let doc = q.doc.map(DocId::new);
    if let Some(d) = &doc {
        if corpus.document(d).is_none() {
            return Err(not_found("document", d.as_str()));
        }
    }
    Ok(Json(app.spans_of(doc.as_ref(), &annotations)))
}

#[derive(Debug, Serialize)]
struct TermSummary {
    id: String,
    surface: String,
    language: Language,
}

async fn list_terms(State(app): State<Arc<AppState>>) -> Json<Vec<TermSummary>> {
    Json(
        app.terms
            .iter()
            .map(|t| TermSummary {
                id: t.id().to_string(),
                surface: t.surface().to_owned(),
                language: t.language().clone(),
            })
            .collect(),
    )
}

#[derive(Debug, Deserialize)]
struct TargetQuery {
    target: Option<String>,
}

async fn list_annotations(
    State(app): State<Arc<AppState>>,
    Query(q): Query<TargetQuery>,
) -> Json<Vec<AnnotationRecord>> {
    let guard = app.annotations.read().expect("annotation lock poisoned");
    Json(guard.records.iter().filter(|r| q.target.as_ref().is_none_or(|t| &r.target == t)).cloned().collect())
}

/// Parses a posted record, filling in the current time when `timestamp` is
/// absent.
pub fn parse_submission(body: &[u8]) -> Result<AnnotationRecord> {
    let mut value: serde_json::Value =
        serde_json::from_slice(body).map_err(|e| Error::Annotation(format!("invalid JSON: {e}")))?;
    let obj = value.as_object_mut().ok_or_else(|| Error::Annotation("expected a JSON object".into()))?;
    if !obj.contains_key("timestamp") {
        let now = chrono::Utc::now().to_rfc3339_opts(chrono::SecondsFormat::Millis, true);
        obj.insert("timestamp".into(), now.into());
    }
    serde_json::from_value(value).map_err(|e| Error::Annotation(e.to_string()))
}

async fn post_annotation(State(app): State<Arc<AppState>>, body: Bytes) -> Result<Response, ApiError> {
    let record = parse_submission(&body)?;
    let stored = tokio::task::spawn_blocking(move || app.submit(record))
        .await
        .map_err(|e| ApiError(StatusCode::INTERNAL_SERVER_ERROR, e.to_string()))??;
    Ok((StatusCode::CREATED, Json(stored)).into_response())
}

#[derive(Debug, Deserialize)]
struct StatsQuery {
    format: Option<String>,
    #[serde(rename = "N")]
    n: Option<usize>,
}

fn format_of(q: &StatsQuery) -> Result<Format, ApiError> {
    match q.format.as_deref() {
        None | Some("json") => Ok(Format::Json),
        Some("csv") => Ok(Format::Csv),
        Some(other) => Err(ApiError(StatusCode::UNPROCESSABLE_ENTITY, format!("format `{other}`"))),
    }
}

fn csv_response(bytes: Vec<u8>) -> Response {
    ([(header::CONTENT_TYPE, "text/csv; charset=utf-8")], bytes).into_response()
}

async fn ana_stats(State(app): State<Arc<AppState>>, Query(q): Query<StatsQuery>) -> Result<Response, ApiError> {
    let format = format_of(&q)?;
    let (corpus, annotations) = app.snapshot();
    let (report, _) = ana_report(&corpus, &app.occurrences, annotations.labels())?;
    Ok(match format {
        Format::Csv => csv_response(ana_csv(&report.rows)?),
        Format::Json => Json(report).into_response(),
    })
}

async fn chrono_stats(State(app): State<Arc<AppState>>, Query(q): Query<StatsQuery>) -> Result<Response, ApiError> {
    let format = format_of(&q)?;
    let n = q.n.unwrap_or(app.onset_count);
    if n == 0 {
        return Err(ApiError(StatusCode::UNPROCESSABLE_ENTITY, "N must be positive".into()));
    }
    let (corpus, annotations) = app.snapshot();
    let report = chrono_report(&corpus, &app.occurrences, annotations.labels(), n)?;
    Ok(match format {
        Format::Csv => csv_response(chrono_csv(&report)?),
        Format::Json => Json(report).into_response(),
    })
}

/// Default for `?N=` and `--N`.
pub const DEFAULT_N: usize = DEFAULT_ONSET_COUNT;
