//! Reversible Urdu-script <-> roman transliteration.
//!
//! The codec is driven entirely by a [`TranslitTable`]: an ordered list of
//! `(urdu, roman, phonetic)` rows. Roman text is scanned by longest match
//! over the roman tokens, Urdu text by longest match over the Urdu keys.
//! Whitespace, ASCII digits and ASCII punctuation that cannot start a roman
//! token pass through unchanged in both directions.
//!
//! The shipped table lives in `data/translit.tsv` and is available through
//! [`shipped`].

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::sync::OnceLock;

use thiserror::Error;

const SHIPPED_TABLE: &str = include_str!("../data/translit.tsv");

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TranslitError {
    #[error("transliteration table must be non-empty")]
    EmptyTable,
    #[error("line {line}: malformed table row: {reason}")]
    Malformed { line: usize, reason: String },
    #[error("line {line}: duplicate roman token {token:?} (first defined on line {first_line})")]
    DuplicateRoman {
        token: String,
        line: usize,
        first_line: usize,
    },
    #[error("line {line}: duplicate Urdu key {key:?} (first defined on line {first_line})")]
    DuplicateUrdu {
        key: String,
        line: usize,
        first_line: usize,
    },
    #[error("roman tokens {first:?} and {second:?} are ambiguous under longest match")]
    Ambiguous { first: String, second: String },
    #[error("uncovered codepoint U+{:04X} {ch:?} at offset {offset}", u32::from(*ch))]
    UncoveredCodepoint { ch: char, offset: usize },
    #[error("cannot scan roman text at offset {offset}: {rest:?}")]
    Unscannable { offset: usize, rest: String },
}

pub type Result<T> = std::result::Result<T, TranslitError>;

/// The writing system of a piece of text.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Script {
    Urdu,
    Roman,
}

impl Script {
    /// `Urdu` if the text contains any Arabic-script codepoint.
    pub fn detect(text: &str) -> Script {
        if text.chars().any(is_arabic_script) {
            Script::Urdu
        } else {
            Script::Roman
        }
    }
}

impl std::str::FromStr for Script {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "urdu" | "Urdu" => Ok(Script::Urdu),
            "roman" | "Roman" => Ok(Script::Roman),
            other => Err(format!("unknown script {other:?} (expected urdu or roman)")),
        }
    }
}

/// What kind of Urdu symbol a table row describes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SymbolKind {
    Letter,
    Diacritic,
    Punctuation,
    Digit,
}

impl SymbolKind {
    pub fn as_str(self) -> &'static str {
        match self {
            SymbolKind::Letter => "letter",
            SymbolKind::Diacritic => "diacritic",
            SymbolKind::Punctuation => "punctuation",
            SymbolKind::Digit => "digit",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableEntry {
    pub urdu: String,
    pub roman: String,
    pub phonetic: String,
    pub kind: SymbolKind,
}

/// A validated, immutable transliteration table.
#[derive(Debug, Clone)]
pub struct TranslitTable {
    entries: Vec<TableEntry>,
    by_roman: HashMap<String, usize>,
    by_urdu: HashMap<String, usize>,
    token_starts: HashSet<char>,
    max_roman_len: usize,
    max_urdu_chars: usize,
}

/// One unit of scanned text: a table token or a pass-through character.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Segment {
    Token(usize),
    Pass(char),
}

/// The table shipped with the crate, parsed once.
pub fn shipped() -> &'static TranslitTable {
    static TABLE: OnceLock<TranslitTable> = OnceLock::new();
    TABLE.get_or_init(|| {
        TranslitTable::load(SHIPPED_TABLE.as_bytes()).expect("shipped transliteration table is valid")
    })
}

/// Parses and validates a table file.
pub fn load_table(source: &[u8]) -> Result<TranslitTable> {
    TranslitTable::load(source)
}

impl TranslitTable {
    pub fn load(source: &[u8]) -> Result<Self> {
        let text = String::from_utf8_lossy(source);
        let mut rows = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            if raw.trim().is_empty() || raw.starts_with('#') {
                continue;
            }
            let fields: Vec<&str> = raw.split('\t').collect();
            if fields.len() != 3 {
                return Err(TranslitError::Malformed {
                    line,
                    reason: format!("expected 3 tab-separated fields, found {}", fields.len()),
                });
            }
            let (urdu, roman, phonetic) = (fields[0], fields[1], fields[2]);
            check_row(line, urdu, roman)?;
            rows.push((line, urdu.to_string(), roman.to_string(), phonetic.to_string()));
        }
        if rows.is_empty() {
            return Err(TranslitError::EmptyTable);
        }

        let mut by_roman: HashMap<String, usize> = HashMap::new();
        let mut by_urdu: HashMap<String, usize> = HashMap::new();
        let mut lines = Vec::with_capacity(rows.len());
        let mut entries = Vec::with_capacity(rows.len());
        for (line, urdu, roman, phonetic) in rows {
            let idx = entries.len();
            if let Some(&first) = by_roman.get(&roman) {
                return Err(TranslitError::DuplicateRoman {
                    token: roman,
                    line,
                    first_line: lines[first],
                });
            }
            if let Some(&first) = by_urdu.get(&urdu) {
                return Err(TranslitError::DuplicateUrdu {
                    key: urdu,
                    line,
                    first_line: lines[first],
                });
            }
            by_roman.insert(roman.clone(), idx);
            by_urdu.insert(urdu.clone(), idx);
            lines.push(line);
            let kind = classify(&urdu);
            entries.push(TableEntry {
                urdu,
                roman,
                phonetic,
                kind,
            });
        }

        let token_starts = entries
            .iter()
            .filter_map(|e| e.roman.chars().next())
            .collect();
        let max_roman_len = entries.iter().map(|e| e.roman.len()).max().unwrap_or(0);
        let max_urdu_chars = entries
            .iter()
            .map(|e| e.urdu.chars().count())
            .max()
            .unwrap_or(0);
        let table = TranslitTable {
            entries,
            by_roman,
            by_urdu,
            token_starts,
            max_roman_len,
            max_urdu_chars,
        };
        table.verify_decodability()?;
        Ok(table)
    }

    /// Every ordered pair of tokens, and every token followed by a
    /// pass-through character, must rescan to exactly its parts.
    fn verify_decodability(&self) -> Result<()> {
        let ambiguous = |a: &str, b: &str| TranslitError::Ambiguous {
            first: a.to_string(),
            second: b.to_string(),
        };
        for (i, a) in self.entries.iter().enumerate() {
            for (j, b) in self.entries.iter().enumerate() {
                let joined = format!("{}{}", a.roman, b.roman);
                match self.scan_roman(&joined) {
                    Ok(segs) if segs == [Segment::Token(i), Segment::Token(j)] => {}
                    _ => return Err(ambiguous(&a.roman, &b.roman)),
                }
                let joined = format!("{}{}", a.urdu, b.urdu);
                match self.scan_urdu(&joined) {
                    Ok(segs) if segs == [Segment::Token(i), Segment::Token(j)] => {}
                    _ => return Err(ambiguous(&a.roman, &b.roman)),
                }
            }
            for p in (0u8..128).map(char::from).filter(|&c| self.is_passthrough(c)) {
                let joined = format!("{}{}", a.roman, p);
                match self.scan_roman(&joined) {
                    Ok(segs) if segs == [Segment::Token(i), Segment::Pass(p)] => {}
                    _ => return Err(ambiguous(&a.roman, &p.to_string())),
                }
            }
        }
        Ok(())
    }

    pub fn entries(&self) -> &[TableEntry] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entry(&self, idx: usize) -> &TableEntry {
        &self.entries[idx]
    }

    pub fn lookup_roman(&self, token: &str) -> Option<&TableEntry> {
        self.by_roman.get(token).map(|&i| &self.entries[i])
    }

    pub fn count_kind(&self, kind: SymbolKind) -> usize {
        self.entries.iter().filter(|e| e.kind == kind).count()
    }

    /// Characters copied verbatim in both directions.
    pub fn is_passthrough(&self, c: char) -> bool {
        (c.is_whitespace() || c.is_ascii_digit() || c.is_ascii_punctuation())
            && !self.token_starts.contains(&c)
    }

    /// Can `c` begin a roman token?
    pub fn starts_token(&self, c: char) -> bool {
        self.token_starts.contains(&c)
    }

    /// Longest-match scan of roman text.
    pub fn scan_roman(&self, text: &str) -> Result<Vec<Segment>> {
        let mut out = Vec::with_capacity(text.len());
        let mut pos = 0;
        while pos < text.len() {
            let rest = &text[pos..];
            let c = rest.chars().next().expect("non-empty rest");
            if self.token_starts.contains(&c) {
                match self.longest_roman(rest) {
                    Some((idx, len)) => {
                        out.push(Segment::Token(idx));
                        pos += len;
                    }
                    None => return Err(unscannable(text, pos)),
                }
            } else if self.is_passthrough(c) {
                out.push(Segment::Pass(c));
                pos += c.len_utf8();
            } else {
                return Err(unscannable(text, pos));
            }
        }
        Ok(out)
    }

    fn longest_roman(&self, rest: &str) -> Option<(usize, usize)> {
        let upper = self.max_roman_len.min(rest.len());
        (1..=upper).rev().find_map(|len| {
            if !rest.is_char_boundary(len) {
                return None;
            }
            self.by_roman.get(&rest[..len]).map(|&idx| (idx, len))
        })
    }

    /// Longest-match scan of Urdu-script text.
    pub fn scan_urdu(&self, text: &str) -> Result<Vec<Segment>> {
        let chars: Vec<char> = text.chars().collect();
        let mut out = Vec::with_capacity(chars.len());
        let mut pos = 0;
        let mut key = String::new();
        while pos < chars.len() {
            let upper = self.max_urdu_chars.min(chars.len() - pos);
            let mut hit = None;
            for len in (1..=upper).rev() {
                key.clear();
                key.extend(&chars[pos..pos + len]);
                if let Some(&idx) = self.by_urdu.get(&key) {
                    hit = Some((idx, len));
                    break;
                }
            }
            match hit {
                Some((idx, len)) => {
                    out.push(Segment::Token(idx));
                    pos += len;
                }
                None if self.is_passthrough(chars[pos]) => {
                    out.push(Segment::Pass(chars[pos]));
                    pos += 1;
                }
                None => {
                    return Err(TranslitError::UncoveredCodepoint {
                        ch: chars[pos],
                        offset: pos,
                    })
                }
            }
        }
        Ok(out)
    }

    /// Scans a single roman word: tokens only, no pass-through characters.
    pub fn word_tokens<'a>(&'a self, word: &str) -> Result<Vec<&'a str>> {
        let mut out = Vec::new();
        let mut pos = 0;
        while pos < word.len() {
            match self.longest_roman(&word[pos..]) {
                Some((idx, len)) => {
                    out.push(self.entries[idx].roman.as_str());
                    pos += len;
                }
                None => return Err(unscannable(word, pos)),
            }
        }
        Ok(out)
    }

    pub fn to_roman(&self, text: &str) -> Result<String> {
        let mut out = String::with_capacity(text.len());
        for seg in self.scan_urdu(text)? {
            match seg {
                Segment::Token(i) => out.push_str(&self.entries[i].roman),
                Segment::Pass(c) => out.push(c),
            }
        }
        Ok(out)
    }

    pub fn to_urdu(&self, text: &str) -> Result<String> {
        let mut out = String::with_capacity(text.len() * 2);
        for seg in self.scan_roman(text)? {
            match seg {
                Segment::Token(i) => out.push_str(&self.entries[i].urdu),
                Segment::Pass(c) => out.push(c),
            }
        }
        Ok(out)
    }

    pub fn to_phonetic(&self, text: &str) -> Result<String> {
        Ok(self.phonetic_tokens(text)?.concat())
    }

    /// The phonetic rendering split per scanned segment.
    pub fn phonetic_tokens(&self, text: &str) -> Result<Vec<String>> {
        Ok(self
            .scan_roman(text)?
            .into_iter()
            .map(|seg| match seg {
                Segment::Token(i) => self.entries[i].phonetic.clone(),
                Segment::Pass(c) => c.to_string(),
            })
            .collect())
    }

    /// Does the roman word contain at least one diacritic token?
    pub fn has_diacritic(&self, roman: &str) -> bool {
        self.scan_roman(roman)
            .map(|segs| {
                segs.iter().any(|s| {
                    matches!(s, Segment::Token(i) if self.entries[*i].kind == SymbolKind::Diacritic)
                })
            })
            .unwrap_or(false)
    }
}

fn unscannable(text: &str, byte_pos: usize) -> TranslitError {
    let offset = text[..byte_pos].chars().count();
    TranslitError::Unscannable {
        offset,
        rest: text[byte_pos..].chars().take(16).collect(),
    }
}

fn check_row(line: usize, urdu: &str, roman: &str) -> Result<()> {
    let malformed = |reason: &str| {
        Err(TranslitError::Malformed {
            line,
            reason: reason.to_string(),
        })
    };
    if urdu.is_empty() || roman.is_empty() {
        return malformed("empty Urdu or roman field");
    }
    if !roman.is_ascii() {
        return malformed("roman token must be ASCII");
    }
    if roman.chars().any(|c| c.is_whitespace()) {
        return malformed("roman token contains whitespace");
    }
    if roman.starts_with(|c: char| c.is_ascii_digit()) {
        return malformed("roman token must not start with a digit");
    }
    if urdu.chars().any(|c| c.is_whitespace() || c.is_ascii()) {
        return malformed("Urdu key must not contain ASCII or whitespace");
    }
    Ok(())
}

fn classify(urdu: &str) -> SymbolKind {
    let mut chars = urdu.chars();
    match (chars.next(), chars.next()) {
        (Some(c), None) if is_arabic_mark(c) => SymbolKind::Diacritic,
        (Some(c), None) if ('\u{06F0}'..='\u{06F9}').contains(&c) || ('\u{0660}'..='\u{0669}').contains(&c) => {
            SymbolKind::Digit
        }
        (Some(c), None) if is_arabic_punctuation(c) => SymbolKind::Punctuation,
        _ => SymbolKind::Letter,
    }
}

/// Arabic combining marks (harakat, tanwin, shadda, jazm and friends).
pub fn is_arabic_mark(c: char) -> bool {
    ('\u{064B}'..='\u{065F}').contains(&c) || c == '\u{0670}'
}

pub fn is_arabic_punctuation(c: char) -> bool {
    matches!(
        c,
        '\u{060C}' | '\u{060D}' | '\u{061B}' | '\u{061F}' | '\u{066A}' | '\u{066B}' | '\u{066C}' | '\u{06D4}'
    )
}

/// Codepoints in the Arabic-script Unicode blocks.
pub fn is_arabic_script(c: char) -> bool {
    matches!(c,
        '\u{0600}'..='\u{06FF}'
        | '\u{0750}'..='\u{077F}'
        | '\u{08A0}'..='\u{08FF}'
        | '\u{FB50}'..='\u{FDFF}'
        | '\u{FE70}'..='\u{FEFF}')
}

/// Removes Arabic combining marks, leaving the bare letters.
pub fn strip_diacritics(urdu: &str) -> String {
    urdu.chars().filter(|&c| !is_arabic_mark(c)).collect()
}

pub fn to_roman(text: &str, table: &TranslitTable) -> Result<String> {
    table.to_roman(text)
}

pub fn to_urdu(text: &str, table: &TranslitTable) -> Result<String> {
    table.to_urdu(text)
}

pub fn to_phonetic(text: &str, table: &TranslitTable) -> Result<String> {
    table.to_phonetic(text)
}

/// Normalises `text` to roman, transliterating when it is Urdu script.
pub fn romanize(text: &str, table: &TranslitTable) -> Result<String> {
    match Script::detect(text) {
        Script::Urdu => table.to_roman(text),
        Script::Roman => Ok(text.to_string()),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DocFormat {
    Html,
    Plain,
}

impl std::str::FromStr for DocFormat {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "html" => Ok(DocFormat::Html),
            "plain" | "text" => Ok(DocFormat::Plain),
            other => Err(format!("unknown document format {other:?}")),
        }
    }
}

impl fmt::Display for DocFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DocFormat::Html => "html",
            DocFormat::Plain => "plain",
        })
    }
}

/// Keeps only the Arabic-script runs of a document.
///
/// Runs separated purely by whitespace keep that whitespace verbatim; runs
/// separated by removed material are joined by a single space (or newline,
/// when the removed material spanned lines). Anything before the first run
/// or after the last one is dropped.
pub fn extract_urdu_text(document: &[u8], format: DocFormat) -> String {
    let decoded = String::from_utf8_lossy(document);
    let text = match format {
        DocFormat::Html => html_to_text(&decoded),
        DocFormat::Plain => decoded.into_owned(),
    };

    let mut out = String::new();
    let mut gap = String::new();
    let mut gap_is_ws = true;
    let mut seen_run = false;
    for c in text.chars() {
        if is_arabic_script(c) {
            if !gap.is_empty() {
                if !seen_run {
                    // leading material
                } else if gap_is_ws {
                    out.push_str(&gap);
                } else {
                    out.push(if gap.contains('\n') { '\n' } else { ' ' });
                }
                gap.clear();
            }
            gap_is_ws = true;
            seen_run = true;
            out.push(c);
        } else {
            if !c.is_whitespace() {
                gap_is_ws = false;
            }
            gap.push(c);
        }
    }
    out
}

// Tag stripper: drops markup, comments and script/style bodies, decodes the
// common entities. Block-level tags become line breaks.
fn html_to_text(html: &str) -> String {
    let mut out = String::with_capacity(html.len());
    let mut rest = html;
    while let Some(lt) = rest.find(['<', '&']) {
        out.push_str(&rest[..lt]);
        rest = &rest[lt..];
        if rest.starts_with("<!--") {
            rest = rest.find("-->").map_or("", |end| &rest[end + 3..]);
        } else if rest.starts_with('<') {
            let Some(gt) = rest.find('>') else {
                rest = "";
                break;
            };
            let tag = rest[1..gt].trim_start_matches('/').to_ascii_lowercase();
            let name: String = tag.chars().take_while(|c| c.is_ascii_alphanumeric()).collect();
            rest = &rest[gt + 1..];
            if (name == "script" || name == "style") && !rest.is_empty() {
                let close = format!("</{name}");
                let lower = rest.to_ascii_lowercase();
                rest = match lower.find(&close) {
                    Some(at) => {
                        let after = &rest[at..];
                        after.find('>').map_or("", |gt| &after[gt + 1..])
                    }
                    None => "",
                };
            }
            let block = matches!(
                name.as_str(),
                "p" | "br" | "div" | "li" | "tr" | "h1" | "h2" | "h3" | "h4" | "h5" | "h6" | "title"
            );
            out.push(if block { '\n' } else { ' ' });
        } else {
            let (decoded, used) = decode_entity(rest);
            out.push_str(&decoded);
            rest = &rest[used..];
        }
    }
    out.push_str(rest);
    out
}

fn decode_entity(s: &str) -> (String, usize) {
    let Some(semi) = s[..s.len().min(12)].find(';') else {
        return ("&".into(), 1);
    };
    let body = &s[1..semi];
    let decoded = match body {
        "amp" => Some('&'),
        "lt" => Some('<'),
        "gt" => Some('>'),
        "quot" => Some('"'),
        "apos" => Some('\''),
        "nbsp" => Some(' '),
        _ => body
            .strip_prefix("#x")
            .or_else(|| body.strip_prefix("#X"))
            .and_then(|hex| u32::from_str_radix(hex, 16).ok())
            .or_else(|| body.strip_prefix('#').and_then(|dec| dec.parse().ok()))
            .and_then(char::from_u32),
    };
    match decoded {
        Some(c) => (c.to_string(), semi + 1),
        None => ("&".into(), 1),
    }
}
