//! The closed-class data file: pronouns, demonstratives, postpositions,
//! particles, numerals and the auxiliary, with explicit full forms.

use std::sync::OnceLock;

use crate::morphology::{tokens, Cell, DictForm, Entry, FeatureBundle, InherentTag, WordClass};

use super::{LexiconError, Result};

const SHIPPED: &str = include_str!("../../data/closed_classes.txt");

fn matches(pattern: &[&str], bundle: &FeatureBundle) -> bool {
    let rendered = bundle.to_string();
    let toks: Vec<&str> = rendered.split_whitespace().collect();
    toks.len() == pattern.len() && pattern.iter().zip(&toks).all(|(p, t)| *p == "*" || p == t)
}

struct Block {
    entry: Entry,
    line: usize,
    cells: usize,
}

fn finish(block: Block) -> Result<Entry> {
    let mut entry = block.entry;
    let forms = entry.word_class.forms();
    if block.cells == 0 && forms.len() == 1 {
        entry.table = vec![Cell::Form(entry.lemma.as_str().to_string())];
    }
    if entry.present_count() == 0 {
        return Err(LexiconError::at(
            block.line,
            format!("entry {} has no forms", entry.lemma),
        ));
    }
    Ok(entry)
}

/// Parses a closed-class file into entries (lemma ids are left at 0).
pub fn parse_closed_classes(source: &str) -> Result<Vec<Entry>> {
    let mut out = Vec::new();
    let mut current: Option<Block> = None;
    for (i, raw) in source.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.trim_end_matches('\r');
        if line.trim().is_empty() || line.starts_with('#') {
            continue;
        }
        let err = |m: String| LexiconError::at(line_no, m);
        if let Some(head) = line.strip_prefix("entry ") {
            if let Some(block) = current.take() {
                out.push(finish(block)?);
            }
            let mut words = head.split_whitespace();
            let class: WordClass = words
                .next()
                .ok_or_else(|| err("missing word class".into()))?
                .parse()
                .map_err(err)?;
            let lemma = DictForm::new(words.next().ok_or_else(|| err("missing lemma".into()))?)
                .map_err(|e| err(e.to_string()))?;
            let inherent = words
                .map(|w| w.parse::<InherentTag>().map_err(err))
                .collect::<Result<Vec<_>>>()?;
            current = Some(Block {
                entry: Entry {
                    forms: vec![lemma.clone()],
                    lemma,
                    lemma_id: 0,
                    word_class: class,
                    paradigm: None,
                    inherent,
                    table: vec![Cell::Absent; class.forms().len()],
                },
                line: line_no,
                cells: 0,
            });
            continue;
        }
        let block = current
            .as_mut()
            .ok_or_else(|| err("cell line before the first entry".into()))?;
        let (feats, surface) = line
            .split_once('\t')
            .ok_or_else(|| err("expected FEATURES<TAB>SURFACE".into()))?;
        let surface = surface.trim();
        tokens(surface).map_err(|e| err(e.to_string()))?;
        let pattern: Vec<&str> = feats.split_whitespace().collect();
        let mut hit = false;
        for (idx, bundle) in block.entry.word_class.forms().iter().enumerate() {
            if matches(&pattern, bundle) {
                block.entry.table[idx] = Cell::Form(surface.to_string());
                hit = true;
            }
        }
        if !hit {
            return Err(err(format!(
                "{feats:?} matches no {} cell",
                block.entry.word_class
            )));
        }
        block.cells += 1;
    }
    if let Some(block) = current.take() {
        out.push(finish(block)?);
    }
    Ok(out)
}

/// The shipped closed-class entries, parsed once.
pub fn shipped_closed_classes() -> &'static [Entry] {
    static ENTRIES: OnceLock<Vec<Entry>> = OnceLock::new();
    ENTRIES.get_or_init(|| parse_closed_classes(SHIPPED).expect("shipped closed-class file is valid"))
}
