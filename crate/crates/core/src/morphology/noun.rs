//! Noun paradigms.
//!
//! Group n1 is written out by hand through [`noun_group1`]. The other
//! fourteen groups are rows of [`GROUPS`]: a membership test on the final
//! tokens, a stem rule and one affix rule per cell.

use std::sync::OnceLock;

use super::features::{Case, Gender, NounForm, Number, Param};
use super::{suffix_drop, suffix_take, tokens, MorphError, Result};

/// A complete noun table, indexed by [`NounForm`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Noun {
    cells: [String; 6],
}

impl Noun {
    pub fn form(&self, nf: NounForm) -> &str {
        &self.cells[nf.index()]
    }

    /// Cells in [`NounForm::values`] order.
    pub fn cells(&self) -> &[String; 6] {
        &self.cells
    }
}

/// Builds a noun table from its six forms. The argument order is the
/// traditional one: singular, singular oblique, plural, plural oblique,
/// singular vocative, plural vocative.
pub fn mk_noun(sg: &str, sg_obl: &str, pl: &str, pl_obl: &str, sg_voc: &str, pl_voc: &str) -> Noun {
    let mut cells: [String; 6] = Default::default();
    for nf in NounForm::values() {
        let s = match (nf.number, nf.case) {
            (Number::Sg, Case::Nom) => sg,
            (Number::Sg, Case::Obl) => sg_obl,
            (Number::Sg, Case::Voc) => sg_voc,
            (Number::Pl, Case::Nom) => pl,
            (Number::Pl, Case::Obl) => pl_obl,
            (Number::Pl, Case::Voc) => pl_voc,
        };
        cells[nf.index()] = s.to_string();
    }
    Noun { cells }
}

/// Masculine nouns ending in alif, chhoti he or ain (`l(a)R'ka`).
///
/// The final letter is replaced by `E` in the singular oblique and
/// vocative and the plural nominative; ain is kept and suffixed instead.
pub fn noun_group1(lemma: &str) -> Result<Noun> {
    let last = suffix_take(1, lemma)?;
    if !matches!(last.as_str(), "a" | "h" | "e") {
        return Err(MorphError::Membership {
            paradigm: "n1".into(),
            lemma: lemma.into(),
            condition: "must end in a, h or e".into(),
        });
    }
    let stem = if last == "e" {
        lemma.to_string()
    } else {
        suffix_drop(1, lemma)?
    };
    let obl = format!("{stem}E");
    let pl_obl = format!("{stem}wN");
    let pl_voc = format!("{stem}w");
    Ok(mk_noun(lemma, &obl, &obl, &pl_obl, &obl, &pl_voc))
}

/// Tokens that end a word in a vowel, glide or nasal and hence do not
/// count as a consonant ending.
const NON_CONSONANT_ENDINGS: &[&str] = &["a", "A", "h", "e", "y", "E", "w", "N"];

#[derive(Debug, Clone, Copy)]
enum Ending {
    /// The final token is one of these.
    Last(&'static [&'static str]),
    /// The word ends in exactly this token sequence.
    Suffix(&'static [&'static str]),
    /// The final token is a consonant letter.
    Consonant,
}

#[derive(Debug, Clone, Copy)]
enum Stem {
    Lemma,
    Drop(usize),
}

#[derive(Debug, Clone, Copy)]
enum Affix {
    Lemma,
    Stem(&'static str),
    Plus(&'static str),
}

#[derive(Debug, Clone, Copy)]
enum Build {
    Group1,
    Table { stem: Stem, cells: [Affix; 6] },
}

/// One of the fifteen noun groups.
#[derive(Debug, Clone, Copy)]
pub struct NounGroup {
    pub id: &'static str,
    pub gender: Gender,
    /// Native, Arabic or Persian.
    pub origin: &'static str,
    /// Human-readable membership condition.
    pub membership: &'static str,
    /// A lemma of the group, used in documentation and tests.
    pub example: &'static str,
    ending: Ending,
    build: Build,
}

use Affix::{Lemma as L, Plus as P, Stem as S};

// Cell order in every row: Sg Nom, Sg Obl, Sg Voc, Pl Nom, Pl Obl, Pl Voc.
const GROUPS: [NounGroup; 15] = [
    NounGroup {
        id: "n1",
        gender: Gender::Masc,
        origin: "native",
        membership: "masculine, ending in a, h or e",
        example: "l(a)R'ka",
        ending: Ending::Last(&["a", "h", "e"]),
        build: Build::Group1,
    },
    NounGroup {
        id: "n2",
        gender: Gender::Masc,
        origin: "native",
        membership: "masculine, ending in a consonant",
        example: "qlm",
        ending: Ending::Consonant,
        build: Build::Table {
            stem: Stem::Lemma,
            cells: [L, L, L, L, P("wN"), P("w")],
        },
    },
    NounGroup {
        id: "n3",
        gender: Gender::Masc,
        origin: "native",
        membership: "masculine, ending in y",
        example: "admy",
        ending: Ending::Last(&["y"]),
        build: Build::Table {
            stem: Stem::Lemma,
            cells: [L, L, L, L, P("wN"), P("w")],
        },
    },
    NounGroup {
        id: "n4",
        gender: Gender::Masc,
        origin: "native",
        membership: "masculine, ending in w",
        example: "alw",
        ending: Ending::Last(&["w"]),
        build: Build::Table {
            stem: Stem::Lemma,
            cells: [L, L, L, L, P("^wN"), P("^w")],
        },
    },
    NounGroup {
        id: "n5",
        gender: Gender::Fem,
        origin: "native",
        membership: "feminine, ending in y",
        example: "l(a)R'ky",
        ending: Ending::Last(&["y"]),
        build: Build::Table {
            stem: Stem::Lemma,
            cells: [L, L, L, P("aN"), P("wN"), P("w")],
        },
    },
    NounGroup {
        id: "n6",
        gender: Gender::Fem,
        origin: "native",
        membership: "feminine, ending in a consonant",
        example: "ktab",
        ending: Ending::Consonant,
        build: Build::Table {
            stem: Stem::Lemma,
            cells: [L, L, L, P("yN"), P("wN"), P("w")],
        },
    },
    NounGroup {
        id: "n7",
        gender: Gender::Fem,
        origin: "native",
        membership: "feminine, ending in a",
        example: "hwa",
        ending: Ending::Last(&["a"]),
        build: Build::Table {
            stem: Stem::Lemma,
            cells: [L, L, L, P("^yyN"), P("^wN"), P("^w")],
        },
    },
    NounGroup {
        id: "n8",
        gender: Gender::Fem,
        origin: "native",
        membership: "feminine, ending in ya",
        example: "c(i)Rya",
        ending: Ending::Suffix(&["y", "a"]),
        build: Build::Table {
            stem: Stem::Drop(1),
            cells: [L, L, L, P("N"), S("wN"), S("w")],
        },
    },
    NounGroup {
        id: "n9",
        gender: Gender::Masc,
        origin: "native",
        membership: "masculine invariant, ending in a",
        example: "raja",
        ending: Ending::Last(&["a"]),
        build: Build::Table {
            stem: Stem::Lemma,
            cells: [L, L, L, L, P("^wN"), P("^w")],
        },
    },
    NounGroup {
        id: "n10",
        gender: Gender::Fem,
        origin: "native",
        membership: "feminine, ending in w",
        example: "xwXbw",
        ending: Ending::Last(&["w"]),
        build: Build::Table {
            stem: Stem::Lemma,
            cells: [L, L, L, P("^yyN"), P("^wN"), P("^w")],
        },
    },
    NounGroup {
        id: "n11",
        gender: Gender::Fem,
        origin: "Arabic",
        membership: "feminine Arabic loan, ending in t, plural in -at",
        example: "Hkwmt",
        ending: Ending::Last(&["t"]),
        build: Build::Table {
            stem: Stem::Drop(1),
            cells: [L, L, L, S("at"), S("at"), S("at")],
        },
    },
    NounGroup {
        id: "n12",
        gender: Gender::Masc,
        origin: "Arabic",
        membership: "masculine Arabic loan, ending in a consonant, plural in -at",
        example: "xyal",
        ending: Ending::Consonant,
        build: Build::Table {
            stem: Stem::Lemma,
            cells: [L, L, L, P("at"), P("at"), P("at")],
        },
    },
    NounGroup {
        id: "n13",
        gender: Gender::Masc,
        origin: "Arabic",
        membership: "masculine Arabic loan, ending in h, plural in -at",
        example: "S(a)fHh",
        ending: Ending::Last(&["h"]),
        build: Build::Table {
            stem: Stem::Drop(1),
            cells: [L, L, L, S("at"), S("at"), S("at")],
        },
    },
    NounGroup {
        id: "n14",
        gender: Gender::Masc,
        origin: "Persian",
        membership: "Persian loan, ending in a consonant, plural in -an",
        example: "drxt",
        ending: Ending::Consonant,
        build: Build::Table {
            stem: Stem::Lemma,
            cells: [L, L, L, P("an"), P("an"), P("an")],
        },
    },
    NounGroup {
        id: "n15",
        gender: Gender::Masc,
        origin: "Persian",
        membership: "Persian loan, ending in h, plural in -gan",
        example: "b(a)ndh",
        ending: Ending::Last(&["h"]),
        build: Build::Table {
            stem: Stem::Drop(1),
            cells: [L, L, L, S("gan"), S("gan"), S("gan")],
        },
    },
];

fn is_consonant(token: &str) -> bool {
    let table = crate::translit::shipped();
    let is_mark = table
        .lookup_roman(token)
        .is_some_and(|e| e.kind != crate::translit::SymbolKind::Letter);
    !is_mark && !NON_CONSONANT_ENDINGS.contains(&token)
}

impl NounGroup {
    pub fn accepts(&self, lemma: &str) -> Result<bool> {
        let toks = tokens(lemma)?;
        let Some(last) = toks.last() else {
            return Ok(false);
        };
        Ok(match self.ending {
            Ending::Last(set) => set.contains(last),
            Ending::Suffix(seq) => toks.len() > seq.len() && toks.ends_with(seq),
            Ending::Consonant => is_consonant(last),
        })
    }

    pub fn inflect(&self, lemma: &str) -> Result<Noun> {
        if let Build::Group1 = self.build {
            return noun_group1(lemma);
        }
        if !self.accepts(lemma)? {
            return Err(MorphError::Membership {
                paradigm: self.id.into(),
                lemma: lemma.into(),
                condition: self.membership.into(),
            });
        }
        let Build::Table { stem, cells } = self.build else {
            unreachable!()
        };
        let stem = match stem {
            Stem::Lemma => lemma.to_string(),
            Stem::Drop(n) => suffix_drop(n, lemma)?,
        };
        let render = |a: Affix| match a {
            Affix::Lemma => lemma.to_string(),
            Affix::Stem(s) => format!("{stem}{s}"),
            Affix::Plus(s) => format!("{lemma}{s}"),
        };
        let [sg, sg_obl, sg_voc, pl, pl_obl, pl_voc] = cells.map(render);
        Ok(mk_noun(&sg, &sg_obl, &pl, &pl_obl, &sg_voc, &pl_voc))
    }
}

/// The registry of noun groups n1..n15.
#[derive(Debug)]
pub struct NounParadigms {
    groups: &'static [NounGroup],
}

impl NounParadigms {
    pub fn len(&self) -> usize {
        self.groups.len()
    }

    pub fn is_empty(&self) -> bool {
        self.groups.is_empty()
    }

    pub fn get(&self, id: &str) -> Option<&'static NounGroup> {
        self.groups.iter().find(|g| g.id == id)
    }

    pub fn iter(&self) -> impl Iterator<Item = &'static NounGroup> {
        self.groups.iter()
    }
}

pub fn noun_paradigms() -> &'static NounParadigms {
    static REGISTRY: OnceLock<NounParadigms> = OnceLock::new();
    REGISTRY.get_or_init(|| NounParadigms { groups: &GROUPS })
}
