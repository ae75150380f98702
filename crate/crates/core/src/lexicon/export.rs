//! Dictionary export: full-form TSV, a grammar lexicon, and JSON (which can
//! be imported back).

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

use crate::morphology::{Cell, DictForm, Entry, InherentTag, WordClass};
use crate::translit;

use super::{join_tags, Dictionary, LexiconError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExportFormat {
    FullformTsv,
    GfLexicon,
    Json,
}

impl FromStr for ExportFormat {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "fullform-tsv" | "tsv" => Ok(ExportFormat::FullformTsv),
            "gf-lexicon" | "gf" => Ok(ExportFormat::GfLexicon),
            "json" => Ok(ExportFormat::Json),
            other => Err(format!("unknown export format {other:?} (expected fullform-tsv, gf-lexicon or json)")),
        }
    }
}

impl fmt::Display for ExportFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ExportFormat::FullformTsv => "fullform-tsv",
            ExportFormat::GfLexicon => "gf-lexicon",
            ExportFormat::Json => "json",
        })
    }
}

pub fn export(dict: &Dictionary, format: ExportFormat) -> Vec<u8> {
    match format {
        ExportFormat::FullformTsv => fullform_tsv(dict),
        ExportFormat::GfLexicon => gf_lexicon(dict),
        ExportFormat::Json => json(dict),
    }
}

fn fullform_tsv(dict: &Dictionary) -> Vec<u8> {
    let mut rows: Vec<(&str, u32, usize, String)> = Vec::with_capacity(dict.form_count());
    for e in dict.entries() {
        let inherent = join_tags(&e.inherent);
        for (cell, (features, c)) in e.cells().enumerate() {
            if let Some(s) = c.form() {
                rows.push((s, e.lemma_id, cell, format!("{}\t{features}\t{inherent}", e.word_class)));
            }
        }
    }
    rows.sort_by(|a, b| (a.0, a.1, a.2).cmp(&(b.0, b.1, b.2)));
    let mut out = String::new();
    for (surface, id, _, rest) in rows {
        out.push_str(&format!("{surface}\t{id}\t{rest}\n"));
    }
    out.into_bytes()
}

/// One declaration per entry, cells in Urdu script:
/// `ktab_42 : N [Fem] { "Sg Nom" = "کتاب" ; ... } ;`
fn gf_lexicon(dict: &Dictionary) -> Vec<u8> {
    let table = translit::shipped();
    let mut out = String::from("-- lemma_id : CLASS [INHERENT] { \"FEATURES\" = \"FORM\" ; ... } ;\n");
    for e in dict.entries() {
        out.push_str(&format!(
            "{}_{} : {} [{}] {{",
            e.lemma,
            e.lemma_id,
            e.word_class,
            join_tags(&e.inherent)
        ));
        for (features, s) in e.present() {
            let urdu = table.to_urdu(s).expect("generated forms scan");
            out.push_str(&format!(" \"{features}\" = \"{urdu}\" ;"));
        }
        out.push_str(" } ;\n");
    }
    out.into_bytes()
}

#[derive(Serialize, Deserialize)]
struct JsonDictionary {
    closed_classes: usize,
    entries: Vec<JsonEntry>,
}

#[derive(Serialize, Deserialize)]
struct JsonEntry {
    lemma_id: u32,
    lemma: DictForm,
    urdu: String,
    class: WordClass,
    paradigm: Option<String>,
    forms: Vec<DictForm>,
    inherent: Vec<String>,
    table: Map<String, Value>,
}

fn json(dict: &Dictionary) -> Vec<u8> {
    let entries = dict
        .entries()
        .iter()
        .map(|e| JsonEntry {
            lemma_id: e.lemma_id,
            lemma: e.lemma.clone(),
            urdu: e.lemma.to_urdu(),
            class: e.word_class,
            paradigm: e.paradigm.clone(),
            forms: e.forms.clone(),
            inherent: e.inherent.iter().map(|t| t.to_string()).collect(),
            table: e
                .cells()
                .map(|(f, c)| {
                    let v = c.form().map_or(Value::Null, |s| Value::String(s.to_string()));
                    (f.to_string(), v)
                })
                .collect(),
        })
        .collect();
    let doc = JsonDictionary {
        closed_classes: dict.closed_count(),
        entries,
    };
    let mut out = serde_json::to_vec_pretty(&doc).expect("dictionary serializes");
    out.push(b'\n');
    out
}

/// Reads a JSON export back into a dictionary.
pub fn import_json(bytes: &[u8]) -> Result<Dictionary> {
    let doc: JsonDictionary =
        serde_json::from_slice(bytes).map_err(|e| LexiconError::at(0, format!("invalid dictionary JSON: {e}")))?;
    let mut entries = Vec::with_capacity(doc.entries.len());
    for (pos, je) in doc.entries.into_iter().enumerate() {
        let err = |m: String| LexiconError::at(0, format!("entry {pos}: {m}"));
        if je.lemma_id as usize != pos {
            return Err(err(format!("lemma_id {} out of sequence", je.lemma_id)));
        }
        let inherent = je
            .inherent
            .iter()
            .map(|t| t.parse::<InherentTag>().map_err(err))
            .collect::<Result<Vec<_>>>()?;
        let forms = je.class.forms();
        if je.table.len() != forms.len() {
            return Err(err(format!("table has {} cells, {} expects {}", je.table.len(), je.class, forms.len())));
        }
        let mut table = vec![Cell::Absent; forms.len()];
        for (key, value) in je.table {
            let bundle = je
                .class
                .parse_form(&key)
                .ok_or_else(|| err(format!("{key:?} is not a {} cell", je.class)))?;
            let idx = forms.iter().position(|f| *f == bundle).expect("parsed form is enumerated");
            table[idx] = match value {
                Value::Null => Cell::Absent,
                Value::String(s) => {
                    crate::morphology::tokens(&s).map_err(|e| err(e.to_string()))?;
                    Cell::Form(s)
                }
                other => return Err(err(format!("cell {key:?} must be a string or null, got {other}"))),
            };
        }
        entries.push(Entry {
            lemma: je.lemma,
            lemma_id: je.lemma_id,
            word_class: je.class,
            paradigm: je.paradigm,
            forms: je.forms,
            inherent,
            table,
        });
    }
    Dictionary::from_entries(entries, doc.closed_classes)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lexicon::{compile, compile_str, LexiconSource};

    #[test]
    fn tsv_rows_for_one_noun() {
        let base = compile(&LexiconSource::default()).unwrap();
        let d = compile_str("n6 ktab\n").unwrap();
        let count = |d: &Dictionary| String::from_utf8(export(d, ExportFormat::FullformTsv)).unwrap().lines().count();
        assert_eq!(count(&d), count(&base) + 6);
        let text = String::from_utf8(export(&d, ExportFormat::FullformTsv)).unwrap();
        let id = d.entries().len() - 1;
        assert!(text.contains(&format!("ktabyN\t{id}\tN\tPl Nom\tFem\n")));
        let surfaces: Vec<&str> = text.lines().map(|l| l.split('\t').next().unwrap()).collect();
        assert!(surfaces.windows(2).all(|w| w[0] <= w[1]));
    }

    #[test]
    fn gf_declaration_shape() {
        let d = compile_str("n6 ktab\n").unwrap();
        let text = String::from_utf8(export(&d, ExportFormat::GfLexicon)).unwrap();
        let id = d.entries().len() - 1;
        let line = text.lines().last().unwrap();
        assert!(line.starts_with(&format!("ktab_{id} : N [Fem] {{ \"Sg Nom\" = \"کتاب\" ;")), "{line}");
        assert!(line.ends_with("\"Pl Voc\" = \"کتابو\" ; } ;"));
    }

    #[test]
    fn json_round_trip() {
        let d = compile_str(crate::lexicon::SAMPLE_LEXICON).unwrap();
        let bytes = export(&d, ExportFormat::Json);
        let back = import_json(&bytes).unwrap();
        assert_eq!(back, d);
        assert_eq!(export(&back, ExportFormat::Json), bytes);
        assert_eq!(back.form_count(), d.form_count());
    }

    #[test]
    fn json_import_rejects_bad_cells() {
        let d = compile_str("n6 ktab\n").unwrap();
        let text = String::from_utf8(export(&d, ExportFormat::Json)).unwrap();
        let broken = text.replacen("\"Sg Nom\": \"ktab\"", "\"Sg Gen\": \"ktab\"", 1);
        assert!(import_json(broken.as_bytes()).is_err());
        assert!(import_json(b"[]").is_err());
    }

    #[test]
    fn formats_parse() {
        assert_eq!("gf-lexicon".parse::<ExportFormat>().unwrap(), ExportFormat::GfLexicon);
        assert!("xml".parse::<ExportFormat>().is_err());
    }
}
