//! The paradigm registry and [`inflect`].

use std::sync::OnceLock;

use super::adj::adj_paradigm;
use super::features::{FeatureBundle, Gender, InherentTag, Param, WordClass};
use super::noun::{noun_paradigms, NounGroup};
use super::verb::{verb_categories, VerbCategory};
use super::{Cell, DictForm, MorphError, Result};

#[derive(Debug, Clone, Copy)]
pub enum ParadigmKind {
    Noun(&'static NounGroup),
    Verb(&'static VerbCategory),
    Adjective,
    Adverb,
    ProperNoun(Gender),
}

#[derive(Debug, Clone)]
pub struct Paradigm {
    pub id: &'static str,
    pub word_class: WordClass,
    pub arity: usize,
    pub summary: &'static str,
    pub kind: ParadigmKind,
}

/// Every paradigm usable in a lexicon source file.
#[derive(Debug)]
pub struct Registry {
    paradigms: Vec<Paradigm>,
}

impl Registry {
    pub fn get(&self, id: &str) -> Option<&Paradigm> {
        self.paradigms.iter().find(|p| p.id == id)
    }

    pub fn iter(&self) -> impl Iterator<Item = &Paradigm> {
        self.paradigms.iter()
    }

    pub fn len(&self) -> usize {
        self.paradigms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.paradigms.is_empty()
    }
}

pub fn registry() -> &'static Registry {
    static REGISTRY: OnceLock<Registry> = OnceLock::new();
    REGISTRY.get_or_init(|| {
        let mut paradigms: Vec<Paradigm> = noun_paradigms()
            .iter()
            .map(|g| Paradigm {
                id: g.id,
                word_class: WordClass::N,
                arity: 1,
                summary: g.membership,
                kind: ParadigmKind::Noun(g),
            })
            .collect();
        paradigms.extend(verb_categories().iter().map(|c| Paradigm {
            id: c.id,
            word_class: WordClass::Verb,
            arity: c.arity,
            summary: c.description,
            kind: ParadigmKind::Verb(c),
        }));
        paradigms.extend([
            Paradigm {
                id: "a1",
                word_class: WordClass::Adj,
                arity: 1,
                summary: "adjective; agrees when ending in a, invariant otherwise",
                kind: ParadigmKind::Adjective,
            },
            Paradigm {
                id: "adv",
                word_class: WordClass::Adv,
                arity: 1,
                summary: "adverb; invariant",
                kind: ParadigmKind::Adverb,
            },
            Paradigm {
                id: "pn_m",
                word_class: WordClass::N,
                arity: 1,
                summary: "masculine proper noun; invariant",
                kind: ParadigmKind::ProperNoun(Gender::Masc),
            },
            Paradigm {
                id: "pn_f",
                word_class: WordClass::N,
                arity: 1,
                summary: "feminine proper noun; invariant",
                kind: ParadigmKind::ProperNoun(Gender::Fem),
            },
        ]);
        Registry { paradigms }
    })
}

/// One lexeme with its complete inflection table.
///
/// `table` is aligned with `word_class.forms()`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Entry {
    pub lemma: DictForm,
    pub lemma_id: u32,
    pub word_class: WordClass,
    /// The paradigm that produced the entry; `None` for closed-class items.
    pub paradigm: Option<String>,
    /// The dictionary forms the entry was built from.
    pub forms: Vec<DictForm>,
    pub inherent: Vec<InherentTag>,
    pub table: Vec<Cell>,
}

impl Entry {
    /// `(cell, form)` pairs in enumeration order, absent cells included.
    pub fn cells(&self) -> impl Iterator<Item = (FeatureBundle, &Cell)> {
        self.word_class.forms().iter().copied().zip(self.table.iter())
    }

    /// Present cells only.
    pub fn present(&self) -> impl Iterator<Item = (FeatureBundle, &str)> {
        self.cells().filter_map(|(f, c)| c.form().map(|s| (f, s)))
    }

    pub fn get(&self, bundle: FeatureBundle) -> Option<&Cell> {
        let idx = match bundle {
            FeatureBundle::Noun(f) => f.index(),
            FeatureBundle::Verb(f) => f.index(),
            FeatureBundle::Adj(f) => f.index(),
            _ => self.word_class.forms().iter().position(|b| *b == bundle)?,
        };
        let forms = self.word_class.forms();
        if forms.get(idx) != Some(&bundle) {
            return None;
        }
        self.table.get(idx)
    }

    /// The surface form of a cell, if the entry has it.
    pub fn form(&self, bundle: FeatureBundle) -> Option<&str> {
        self.get(bundle).and_then(Cell::form)
    }

    pub fn present_count(&self) -> usize {
        self.table.iter().filter(|c| c.is_present()).count()
    }

    pub fn gender(&self) -> Option<Gender> {
        self.inherent.iter().find_map(|t| t.gender())
    }

    pub fn has_tag(&self, tag: InherentTag) -> bool {
        self.inherent.contains(&tag)
    }
}

/// Builds the entry for `forms` under the named paradigm.
pub fn inflect(paradigm: &str, forms: &[&str]) -> Result<Entry> {
    let p = registry()
        .get(paradigm)
        .ok_or_else(|| MorphError::UnknownParadigm(paradigm.to_string()))?;
    if forms.len() != p.arity {
        return Err(MorphError::Arity {
            paradigm: paradigm.to_string(),
            expected: p.arity,
            found: forms.len(),
        });
    }
    let dict_forms = forms.iter().map(|f| DictForm::new(*f)).collect::<Result<Vec<_>>>()?;
    let lemma = forms[0];
    let (table, inherent): (Vec<Cell>, Vec<InherentTag>) = match p.kind {
        ParadigmKind::Noun(g) => {
            let n = g.inflect(lemma)?;
            (n.cells().iter().cloned().map(Cell::Form).collect(), vec![g.gender.into()])
        }
        ParadigmKind::Verb(c) => (c.inflect(forms)?.cells().to_vec(), Vec::new()),
        ParadigmKind::Adjective => {
            let a = adj_paradigm(lemma)?;
            (a.cells().iter().cloned().map(Cell::Form).collect(), Vec::new())
        }
        ParadigmKind::Adverb => (vec![Cell::Form(lemma.to_string())], Vec::new()),
        ParadigmKind::ProperNoun(g) => (
            vec![Cell::Form(lemma.to_string()); 6],
            vec![g.into(), InherentTag::Proper],
        ),
    };
    debug_assert_eq!(table.len(), p.word_class.forms().len());
    Ok(Entry {
        lemma: dict_forms[0].clone(),
        lemma_id: 0,
        word_class: p.word_class,
        paradigm: Some(p.id.to_string()),
        forms: dict_forms,
        inherent,
        table,
    })
}
