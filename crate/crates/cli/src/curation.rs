//! Candidate lists and review decisions, persisted under a state
//! directory:
//!
//! ```text
//! lexicon.txt                 base lexicon source
//! candidates/<id>.txt         emitted candidate lines
//! candidates/<id>.meta.json   per-candidate stem, attestation and frequency
//! decisions.log               one JSON decision per line, append-only
//! ```
//!
//! The live decision for a candidate is the last one logged for its key.

use std::collections::{BTreeMap, BTreeSet};
use std::fs::{self, File, OpenOptions};
use std::io::Write;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;
use urdu_morph::extractor::{emit_candidates, Candidate};
use urdu_morph::lexicon::{compile, parse_lexicon, Dictionary, LexiconSource};
use urdu_morph::morphology::inflect;

use crate::commands::Extracted;

#[derive(Debug, Error)]
pub enum CurationError {
    #[error("unknown candidate list {0:?}")]
    UnknownList(String),
    #[error("list {list:?} has no candidate {paradigm} {stem}")]
    UnknownCandidate {
        list: String,
        paradigm: String,
        stem: String,
    },
    #[error("an edit decision needs edited_forms")]
    MissingEditForms,
    #[error("{0}")]
    Invalid(String),
    #[error("state directory: {0}")]
    Io(String),
}

impl From<std::io::Error> for CurationError {
    fn from(e: std::io::Error) -> Self {
        CurationError::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, CurationError>;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CandidateKey {
    pub paradigm: String,
    pub stem: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Accept,
    Reject,
    Edit,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurationDecision {
    pub list: String,
    pub candidate_key: CandidateKey,
    pub verdict: Verdict,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub edited_forms: Option<Vec<String>>,
    #[serde(default)]
    pub timestamp: String,
    #[serde(default)]
    pub reviewer: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pending,
    Accepted,
    Rejected,
}

impl FromStr for Status {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "pending" => Ok(Status::Pending),
            "accepted" => Ok(Status::Accepted),
            "rejected" => Ok(Status::Rejected),
            other => Err(format!("unknown status {other:?} (expected pending, accepted or rejected)")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StoredCandidate {
    pub paradigm: String,
    pub stem: String,
    pub forms: Vec<String>,
    pub attested: Vec<bool>,
    pub frequency: usize,
}

impl StoredCandidate {
    pub fn key(&self) -> CandidateKey {
        CandidateKey {
            paradigm: self.paradigm.clone(),
            stem: self.stem.clone(),
        }
    }

    fn as_candidate(&self) -> Candidate {
        Candidate {
            paradigm: self.paradigm.clone(),
            stem: self.stem.clone(),
            forms: self.forms.clone(),
            attested: self.attested.clone(),
            rule: 0,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
struct ListMeta {
    id: String,
    candidates: Vec<StoredCandidate>,
}

/// A candidate as the review queue shows it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReviewItem {
    #[serde(flatten)]
    pub candidate: StoredCandidate,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub edited_forms: Option<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Page {
    pub list: String,
    pub page: usize,
    pub per_page: usize,
    pub total: usize,
    pub items: Vec<ReviewItem>,
}

#[derive(Debug)]
pub struct Store {
    dir: PathBuf,
    base: LexiconSource,
    lists: BTreeMap<String, Vec<StoredCandidate>>,
    live: BTreeMap<(String, CandidateKey), CurationDecision>,
    log: File,
    history: usize,
}

fn status_of(d: Option<&CurationDecision>) -> Status {
    match d.map(|d| d.verdict) {
        None => Status::Pending,
        Some(Verdict::Reject) => Status::Rejected,
        Some(Verdict::Accept | Verdict::Edit) => Status::Accepted,
    }
}

impl Store {
    /// Opens `dir`, creating it and seeding `lexicon.txt` with
    /// `default_lexicon` when it has none, then replays the decision log.
    pub fn open(dir: &Path, default_lexicon: &str) -> Result<Store> {
        fs::create_dir_all(dir.join("candidates"))?;
        let lex_path = dir.join("lexicon.txt");
        if !lex_path.exists() {
            fs::write(&lex_path, default_lexicon)?;
        }
        let base = parse_lexicon(&fs::read(&lex_path)?).map_err(|e| CurationError::Invalid(format!("lexicon.txt: {e}")))?;
        compile(&base).map_err(|e| CurationError::Invalid(format!("lexicon.txt: {e}")))?;

        let mut lists = BTreeMap::new();
        for entry in fs::read_dir(dir.join("candidates"))? {
            let path = entry?.path();
            let Some(name) = path.file_name().and_then(|n| n.to_str()) else { continue };
            if let Some(id) = name.strip_suffix(".meta.json") {
                let meta: ListMeta = serde_json::from_slice(&fs::read(&path)?)
                    .map_err(|e| CurationError::Invalid(format!("{name}: {e}")))?;
                lists.insert(id.to_string(), meta.candidates);
            }
        }

        let log_path = dir.join("decisions.log");
        let text = if log_path.exists() { fs::read_to_string(&log_path)? } else { String::new() };
        let log = OpenOptions::new().create(true).append(true).open(&log_path)?;
        let mut store = Store {
            dir: dir.to_path_buf(),
            base,
            lists,
            live: BTreeMap::new(),
            log,
            history: 0,
        };
        for (i, line) in text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty()) {
            let d: CurationDecision = serde_json::from_str(line)
                .map_err(|e| CurationError::Invalid(format!("decisions.log line {}: {e}", i + 1)))?;
            store.check(&d)?;
            store.apply(d);
        }
        Ok(store)
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn base(&self) -> &LexiconSource {
        &self.base
    }

    /// Number of decisions ever logged.
    pub fn history_len(&self) -> usize {
        self.history
    }

    pub fn list_ids(&self) -> impl Iterator<Item = &str> {
        self.lists.keys().map(String::as_str)
    }

    pub fn candidates(&self, list: &str) -> Result<&[StoredCandidate]> {
        self.lists
            .get(list)
            .map(Vec::as_slice)
            .ok_or_else(|| CurationError::UnknownList(list.to_string()))
    }

    /// Stores a new candidate list and returns its id.
    pub fn add_list(&mut self, extracted: Vec<Extracted>) -> Result<String> {
        let id = format!("list-{:04}", self.lists.len() + 1);
        let candidates: Vec<StoredCandidate> = extracted
            .into_iter()
            .map(|e| StoredCandidate {
                paradigm: e.candidate.paradigm,
                stem: e.candidate.stem,
                forms: e.candidate.forms,
                attested: e.candidate.attested,
                frequency: e.frequency,
            })
            .collect();
        let dir = self.dir.join("candidates");
        let plain: Vec<Candidate> = candidates.iter().map(StoredCandidate::as_candidate).collect();
        fs::write(dir.join(format!("{id}.txt")), emit_candidates(&plain))?;
        let meta = ListMeta {
            id: id.clone(),
            candidates,
        };
        let json = serde_json::to_vec_pretty(&meta).map_err(|e| CurationError::Io(e.to_string()))?;
        fs::write(dir.join(format!("{id}.meta.json")), json)?;
        self.lists.insert(id.clone(), meta.candidates);
        Ok(id)
    }

    fn check(&self, d: &CurationDecision) -> Result<()> {
        let cands = self.candidates(&d.list)?;
        let matching: Vec<&StoredCandidate> = cands.iter().filter(|c| c.key() == d.candidate_key).collect();
        if matching.is_empty() {
            return Err(CurationError::UnknownCandidate {
                list: d.list.clone(),
                paradigm: d.candidate_key.paradigm.clone(),
                stem: d.candidate_key.stem.clone(),
            });
        }
        let to_check: Vec<Vec<String>> = match d.verdict {
            Verdict::Reject => Vec::new(),
            Verdict::Accept => matching.iter().map(|c| c.forms.clone()).collect(),
            Verdict::Edit => match &d.edited_forms {
                Some(f) if !f.is_empty() => vec![f.clone()],
                _ => return Err(CurationError::MissingEditForms),
            },
        };
        for forms in to_check {
            let refs: Vec<&str> = forms.iter().map(String::as_str).collect();
            inflect(&d.candidate_key.paradigm, &refs).map_err(|e| CurationError::Invalid(e.to_string()))?;
        }
        Ok(())
    }

    fn apply(&mut self, d: CurationDecision) {
        self.history += 1;
        self.live.insert((d.list.clone(), d.candidate_key.clone()), d);
    }

    /// Validates, logs and applies a decision. A missing timestamp is
    /// filled with the current time.
    pub fn decide(&mut self, mut d: CurationDecision) -> Result<CurationDecision> {
        self.check(&d)?;
        if d.verdict != Verdict::Edit {
            d.edited_forms = None;
        }
        if d.timestamp.is_empty() {
            d.timestamp = chrono::Utc::now().to_rfc3339_opts(chrono::SecondsFormat::Millis, true);
        }
        let mut line = serde_json::to_string(&d).map_err(|e| CurationError::Io(e.to_string()))?;
        line.push('\n');
        self.log.write_all(line.as_bytes())?;
        self.log.sync_data()?;
        self.apply(d.clone());
        Ok(d)
    }

    pub fn live(&self, list: &str, key: &CandidateKey) -> Option<&CurationDecision> {
        self.live.get(&(list.to_string(), key.clone()))
    }

    pub fn status(&self, list: &str, key: &CandidateKey) -> Status {
        status_of(self.live(list, key))
    }

    /// A page of a list in review order: corpus frequency descending, then
    /// stem, then paradigm. `page` counts from 1.
    pub fn page(&self, list: &str, status: Option<Status>, page: usize, per_page: usize) -> Result<Page> {
        let mut items: Vec<ReviewItem> = self
            .candidates(list)?
            .iter()
            .map(|c| {
                let live = self.live(list, &c.key());
                ReviewItem {
                    candidate: c.clone(),
                    status: status_of(live),
                    edited_forms: live.and_then(|d| d.edited_forms.clone()),
                }
            })
            .filter(|i| status.is_none_or(|s| i.status == s))
            .collect();
        items.sort_by(|a, b| {
            let (a, b) = (&a.candidate, &b.candidate);
            b.frequency
                .cmp(&a.frequency)
                .then_with(|| a.stem.cmp(&b.stem))
                .then_with(|| a.paradigm.cmp(&b.paradigm))
                .then_with(|| a.forms.cmp(&b.forms))
        });
        let total = items.len();
        let start = (page.max(1) - 1).saturating_mul(per_page).min(total);
        let end = start.saturating_add(per_page).min(total);
        Ok(Page {
            list: list.to_string(),
            page: page.max(1),
            per_page,
            total,
            items: items.drain(start..end).collect(),
        })
    }

    /// Source lines of every accepted candidate, edits applied, in list and
    /// candidate order.
    pub fn accepted_lines(&self) -> Vec<(String, Vec<String>)> {
        let mut out = Vec::new();
        let mut edited_done = BTreeSet::new();
        for (list, cands) in &self.lists {
            for c in cands {
                let key = c.key();
                let Some(d) = self.live(list, &key) else { continue };
                match d.verdict {
                    Verdict::Reject => {}
                    Verdict::Accept => out.push((c.paradigm.clone(), c.forms.clone())),
                    Verdict::Edit => {
                        if edited_done.insert((list.clone(), key)) {
                            out.push((c.paradigm.clone(), d.edited_forms.clone().unwrap_or_default()));
                        }
                    }
                }
            }
        }
        out
    }

    /// The base lexicon plus the accepted candidates; lines already present
    /// are not repeated.
    pub fn curated_source(&self) -> String {
        let mut seen = BTreeSet::new();
        let mut text = String::new();
        let base = self.base.lines.iter().map(|l| (l.paradigm.clone(), l.form_strs().iter().map(|s| s.to_string()).collect()));
        for (paradigm, forms) in base.chain(self.accepted_lines()) {
            let line = format!("{paradigm} {}", forms.join(" "));
            if seen.insert(line.clone()) {
                text.push_str(&line);
                text.push('\n');
            }
        }
        text
    }

    pub fn curated_dictionary(&self) -> Result<Dictionary> {
        let src = parse_lexicon(self.curated_source().as_bytes()).map_err(|e| CurationError::Invalid(e.to_string()))?;
        compile(&src).map_err(|e| CurationError::Invalid(e.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::commands;

    fn decision(list: &str, paradigm: &str, stem: &str, verdict: Verdict) -> CurationDecision {
        CurationDecision {
            list: list.into(),
            candidate_key: CandidateKey {
                paradigm: paradigm.into(),
                stem: stem.into(),
            },
            verdict,
            edited_forms: None,
            timestamp: String::new(),
            reviewer: "t".into(),
        }
    }

    #[test]
    fn decisions_survive_reopen() {
        let dir = tempfile::tempdir().unwrap();
        let mut s = Store::open(dir.path(), "n6 ktab\n").unwrap();
        let ex = commands::extract(None, "qlm qlmwN qlmwN bat batyN", None).unwrap();
        let id = s.add_list(ex).unwrap();
        assert_eq!(id, "list-0001");
        s.decide(decision(&id, "n2", "qlm", Verdict::Accept)).unwrap();
        s.decide(decision(&id, "n6", "bat", Verdict::Reject)).unwrap();
        let mut edit = decision(&id, "n6", "bat", Verdict::Edit);
        assert!(matches!(s.decide(edit.clone()), Err(CurationError::MissingEditForms)));
        edit.edited_forms = Some(vec!["bat".into()]);
        s.decide(edit).unwrap();
        assert!(matches!(
            s.decide(decision(&id, "n2", "zzz", Verdict::Accept)),
            Err(CurationError::UnknownCandidate { .. })
        ));
        assert!(matches!(
            s.decide(decision("list-9", "n2", "qlm", Verdict::Accept)),
            Err(CurationError::UnknownList(_))
        ));
        let before = s.curated_source();
        assert_eq!(before, "n6 ktab\nn2 qlm\nn6 bat\n");
        drop(s);
        let again = Store::open(dir.path(), "ignored").unwrap();
        assert_eq!(again.curated_source(), before);
        assert_eq!(again.history_len(), 3);
        again.curated_dictionary().unwrap();
    }

    #[test]
    fn review_order() {
        let dir = tempfile::tempdir().unwrap();
        let mut s = Store::open(dir.path(), "").unwrap();
        let ex = commands::extract(None, "bat batyN qlm qlmwN qlm qlm", None).unwrap();
        let id = s.add_list(ex).unwrap();
        let page = s.page(&id, None, 1, 10).unwrap();
        let freqs: Vec<usize> = page.items.iter().map(|i| i.candidate.frequency).collect();
        assert!(freqs.windows(2).all(|w| w[0] >= w[1]), "{freqs:?}");
        assert_eq!(page.items[0].candidate.stem, "qlm");
        assert!(s.page(&id, Some(Status::Accepted), 1, 10).unwrap().items.is_empty());
        assert_eq!(s.page(&id, None, 5, 10).unwrap().items.len(), 0);
    }
}
