//! JSON-over-HTTP service.
//!
//! | method | path               | input                                   |
//! |--------|--------------------|-----------------------------------------|
//! | GET    | `/analyze`         | `text`, optional `script`               |
//! | GET    | `/translit`        | `text`, `to`                            |
//! | GET    | `/synth`           | `lemma`                                 |
//! | GET    | `/parse`           | `text`                                  |
//! | GET    | `/linearize`       | `tree`                                  |
//! | POST   | `/extract`         | `{corpus, rules?, script?}` or raw text |
//! | GET    | `/candidates`      | `list`, `status?`, `page?`, `per_page?` |
//! | POST   | `/decisions`       | a decision object                       |
//! | GET    | `/lexicon/export`  | `format?` (default `fullform-tsv`)      |
//! | GET    | `/keyboard-layout` |                                         |
//!
//! Errors are `{"error": MESSAGE}` with status 400, 404 or 409.

use std::collections::HashMap;
use std::sync::{Arc, RwLock};

use axum::body::Bytes;
use axum::extract::{Query, State};
use axum::http::{header, HeaderMap, StatusCode};
use axum::response::{IntoResponse, Response};
use axum::routing::{get, post};
use axum::{Json, Router};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use urdu_morph::lexicon::{Analysis, Dictionary};
use urdu_morph::translit::{self, Script};

use crate::commands::{self, CommandError, Target};
use crate::curation::{CurationDecision, CurationError, Status, Store};

pub struct AppState {
    pub dict: Dictionary,
    pub store: RwLock<Store>,
}

pub type Shared = Arc<AppState>;

pub struct ApiError(StatusCode, String);

impl IntoResponse for ApiError {
    fn into_response(self) -> Response {
        (self.0, Json(json!({ "error": self.1 }))).into_response()
    }
}

impl From<CommandError> for ApiError {
    fn from(e: CommandError) -> Self {
        ApiError(StatusCode::BAD_REQUEST, e.to_string())
    }
}

impl From<CurationError> for ApiError {
    fn from(e: CurationError) -> Self {
        let code = match e {
            CurationError::UnknownList(_) | CurationError::UnknownCandidate { .. } => StatusCode::NOT_FOUND,
            CurationError::MissingEditForms => StatusCode::CONFLICT,
            CurationError::Invalid(_) => StatusCode::BAD_REQUEST,
            CurationError::Io(_) => StatusCode::INTERNAL_SERVER_ERROR,
        };
        ApiError(code, e.to_string())
    }
}

type ApiResult<T> = Result<T, ApiError>;
type Params = Query<HashMap<String, String>>;

fn bad(message: impl Into<String>) -> ApiError {
    ApiError(StatusCode::BAD_REQUEST, message.into())
}

fn required<'a>(q: &'a HashMap<String, String>, name: &str) -> ApiResult<&'a str> {
    q.get(name).map(String::as_str).ok_or_else(|| bad(format!("missing parameter {name:?}")))
}

fn optional<T: std::str::FromStr<Err = String>>(q: &HashMap<String, String>, name: &str) -> ApiResult<Option<T>> {
    q.get(name).map(|v| v.parse().map_err(|e: String| bad(e))).transpose()
}

fn script_param(q: &HashMap<String, String>) -> ApiResult<Option<Script>> {
    match q.get("script").map(String::as_str) {
        None | Some("auto") => Ok(None),
        Some(s) => s.parse().map(Some).map_err(bad),
    }
}

fn read_store(s: &AppState) -> std::sync::RwLockReadGuard<'_, Store> {
    s.store.read().unwrap_or_else(|p| p.into_inner())
}

fn write_store(s: &AppState) -> std::sync::RwLockWriteGuard<'_, Store> {
    s.store.write().unwrap_or_else(|p| p.into_inner())
}

#[derive(Serialize)]
struct AnalysisJson {
    lemma: String,
    lemma_id: u32,
    urdu_lemma: String,
    class: String,
    features: String,
    inherent: String,
    line: String,
}

impl From<&Analysis> for AnalysisJson {
    fn from(a: &Analysis) -> Self {
        AnalysisJson {
            lemma: a.lemma.as_str().to_string(),
            lemma_id: a.lemma_id,
            urdu_lemma: a.urdu_lemma.clone(),
            class: a.word_class.to_string(),
            features: a.features.to_string(),
            inherent: a.inherent_string(),
            line: a.to_string(),
        }
    }
}

async fn analyze(State(s): State<Shared>, Query(q): Params) -> ApiResult<Json<Value>> {
    let text = required(&q, "text")?;
    let script = script_param(&q)?;
    let mut tokens = Vec::new();
    for token in text.split_whitespace() {
        let readings = commands::analyze_token(token, script, &s.dict)?;
        let roman = urdu_morph::lexicon::to_roman_word(token, commands::script_of(token, script))
            .map_err(|e| bad(e.to_string()))?;
        let analyses: Vec<AnalysisJson> = readings.iter().map(AnalysisJson::from).collect();
        tokens.push(json!({ "token": token, "roman": roman, "analyses": analyses }));
    }
    Ok(Json(json!({ "tokens": tokens })))
}

async fn translit_handler(Query(q): Params) -> ApiResult<Json<Value>> {
    let text = required(&q, "text")?;
    let to: Target = required(&q, "to")?.parse().map_err(bad)?;
    let result = commands::translit(text, to)?;
    Ok(Json(json!({ "text": text, "to": q["to"], "result": result })))
}

async fn synth(State(s): State<Shared>, Query(q): Params) -> ApiResult<Json<Value>> {
    let lemma = required(&q, "lemma")?;
    let found = urdu_morph::lexicon::synthesize(lemma, &s.dict);
    if found.is_empty() {
        return Err(ApiError(StatusCode::NOT_FOUND, format!("no entry with lemma {lemma:?}")));
    }
    let entries: Vec<Value> = found
        .iter()
        .map(|syn| {
            let e = syn.entry;
            let rows: Vec<Value> = syn
                .rows
                .iter()
                .map(|r| json!({ "features": r.features.to_string(), "roman": r.roman, "urdu": r.urdu }))
                .collect();
            json!({
                "lemma": e.lemma.as_str(),
                "lemma_id": e.lemma_id,
                "urdu": e.lemma.to_urdu(),
                "class": e.word_class.to_string(),
                "paradigm": e.paradigm,
                "rows": rows,
            })
        })
        .collect();
    Ok(Json(json!({ "lemma": lemma, "entries": entries })))
}

async fn parse(State(s): State<Shared>, Query(q): Params) -> ApiResult<Json<Value>> {
    let text = required(&q, "text")?;
    let r = urdu_morph::syntax::parse_str(text, &s.dict);
    let trees: Vec<String> = r.trees.iter().map(ToString::to_string).collect();
    Ok(Json(json!({ "text": text, "trees": trees, "unanalyzed": r.unanalyzed })))
}

async fn linearize(State(s): State<Shared>, Query(q): Params) -> ApiResult<Json<Value>> {
    let tree = required(&q, "tree")?;
    let sentence = commands::linearize_tree(tree, &s.dict)?;
    Ok(Json(json!({ "tree": tree, "sentence": sentence })))
}

#[derive(Deserialize)]
struct ExtractBody {
    corpus: String,
    #[serde(default)]
    rules: Option<String>,
    #[serde(default)]
    script: Option<String>,
}

async fn extract(State(s): State<Shared>, headers: HeaderMap, body: Bytes) -> ApiResult<Json<Value>> {
    let is_json = headers
        .get(header::CONTENT_TYPE)
        .and_then(|v| v.to_str().ok())
        .is_some_and(|v| v.starts_with("application/json"));
    let req = if is_json {
        serde_json::from_slice::<ExtractBody>(&body).map_err(|e| bad(format!("malformed body: {e}")))?
    } else {
        let corpus = String::from_utf8(body.to_vec()).map_err(|_| bad("corpus is not UTF-8"))?;
        ExtractBody {
            corpus,
            rules: None,
            script: None,
        }
    };
    let script = match req.script.as_deref() {
        None | Some("auto") => None,
        Some(v) => Some(v.parse().map_err(bad)?),
    };
    let extracted = commands::extract(req.rules.as_deref().map(str::as_bytes), &req.corpus, script)?;
    let count = extracted.len();
    let list = write_store(&s).add_list(extracted)?;
    Ok(Json(json!({ "list": list, "count": count })))
}

async fn candidates(State(s): State<Shared>, Query(q): Params) -> ApiResult<Json<Value>> {
    let list = required(&q, "list")?;
    let status: Option<Status> = optional(&q, "status")?;
    let number = |name: &str, default: usize| -> ApiResult<usize> {
        q.get(name)
            .map(|v| v.parse::<usize>().map_err(|_| bad(format!("{name} must be a positive integer"))))
            .transpose()
            .map(|v| v.unwrap_or(default))
    };
    let page = number("page", 1)?;
    let per_page = number("per_page", 50)?;
    if page == 0 || per_page == 0 || per_page > 1000 {
        return Err(bad("page must be >= 1 and per_page in 1..=1000"));
    }
    let p = read_store(&s).page(list, status, page, per_page)?;
    Ok(Json(serde_json::to_value(p).expect("page serializes")))
}

async fn decisions(State(s): State<Shared>, body: Bytes) -> ApiResult<Json<CurationDecision>> {
    let d: CurationDecision = serde_json::from_slice(&body).map_err(|e| bad(format!("malformed decision: {e}")))?;
    let stored = write_store(&s).decide(d)?;
    Ok(Json(stored))
}

async fn export(State(s): State<Shared>, Query(q): Params) -> ApiResult<Response> {
    let format = q.get("format").map_or("fullform-tsv", String::as_str);
    let store = read_store(&s);
    if format == "source" {
        let text = store.curated_source();
        return Ok(([(header::CONTENT_TYPE, "text/plain; charset=utf-8")], text).into_response());
    }
    let dict = store.curated_dictionary()?;
    drop(store);
    let bytes = commands::export(&dict, format)?;
    let mime = if format == "json" {
        "application/json"
    } else {
        "text/plain; charset=utf-8"
    };
    Ok(([(header::CONTENT_TYPE, mime)], bytes).into_response())
}

/// Keys of the onscreen keyboard, one row per symbol kind.
pub fn keyboard_layout() -> Value {
    let t = translit::shipped();
    let mut rows: Vec<(&str, Vec<Value>)> = Vec::new();
    for e in t.entries() {
        let key = json!({ "label": e.urdu, "roman": e.roman, "phonetic": e.phonetic });
        match rows.iter_mut().find(|(k, _)| *k == e.kind.as_str()) {
            Some((_, keys)) => keys.push(key),
            None => rows.push((e.kind.as_str(), vec![key])),
        }
    }
    let rows: Vec<Value> = rows.into_iter().map(|(kind, keys)| json!({ "kind": kind, "keys": keys })).collect();
    json!({ "rows": rows })
}

async fn keyboard() -> Json<Value> {
    Json(keyboard_layout())
}

pub fn router(state: Shared) -> Router {
    Router::new()
        .route("/analyze", get(analyze))
        .route("/translit", get(translit_handler))
        .route("/synth", get(synth))
        .route("/parse", get(parse))
        .route("/linearize", get(linearize))
        .route("/extract", post(extract))
        .route("/candidates", get(candidates))
        .route("/decisions", post(decisions))
        .route("/lexicon/export", get(export))
        .route("/keyboard-layout", get(keyboard))
        .with_state(state)
}

/// Opens the state directory and builds the shared state. The analysis
/// dictionary is compiled from the state's `lexicon.txt`.
pub fn open_state(state_dir: &std::path::Path, default_lexicon: &str) -> Result<Shared, CurationError> {
    let store = Store::open(state_dir, default_lexicon)?;
    let dict = urdu_morph::lexicon::compile(store.base()).map_err(|e| CurationError::Invalid(e.to_string()))?;
    Ok(Arc::new(AppState {
        dict,
        store: RwLock::new(store),
    }))
}

/// Serves until the listener fails.
pub async fn serve(listener: tokio::net::TcpListener, state: Shared) -> std::io::Result<()> {
    axum::serve(listener, router(state)).await
}
