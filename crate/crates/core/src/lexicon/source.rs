//! Lexicon source files: one `PARADIGM FORM...` command per line.

use crate::morphology::{registry, DictForm};

use super::{LexiconError, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SourceLine {
    pub paradigm: String,
    pub forms: Vec<DictForm>,
    /// 1-based line number in the source file.
    pub line: usize,
}

impl SourceLine {
    pub fn form_strs(&self) -> Vec<&str> {
        self.forms.iter().map(DictForm::as_str).collect()
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct LexiconSource {
    pub lines: Vec<SourceLine>,
}

/// Parses a lexicon source. Blank lines and `#` comments are skipped.
pub fn parse_lexicon(source: &[u8]) -> Result<LexiconSource> {
    let text = std::str::from_utf8(source).map_err(|e| LexiconError::at(0, format!("not UTF-8: {e}")))?;
    let mut lines = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut words = line.split_whitespace();
        let name = words.next().expect("non-empty line");
        let paradigm = registry()
            .get(name)
            .ok_or_else(|| LexiconError::at(line_no, format!("unknown paradigm {name:?}")))?;
        let forms = words
            .map(|w| DictForm::new(w).map_err(|e| LexiconError::at(line_no, e.to_string())))
            .collect::<Result<Vec<_>>>()?;
        if forms.len() != paradigm.arity {
            return Err(LexiconError::at(
                line_no,
                format!("paradigm {name} takes {} form(s), got {}", paradigm.arity, forms.len()),
            ));
        }
        lines.push(SourceLine {
            paradigm: name.to_string(),
            forms,
            line: line_no,
        });
    }
    Ok(LexiconSource { lines })
}

impl LexiconSource {
    /// Renders the source back to lexicon file syntax.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for l in &self.lines {
            out.push_str(&l.paradigm);
            for f in &l.forms {
                out.push(' ');
                out.push_str(f.as_str());
            }
            out.push('\n');
        }
        out
    }
}
