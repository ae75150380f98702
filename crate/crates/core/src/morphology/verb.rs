//! Verb conjugation over three causative levels.
//!
//! Finite forms are root + ending, with the endings read from
//! `data/verb_endings.tsv`. Non-finite forms derive from each level's
//! infinitive. A level a verb lacks is filled with [`Cell::Absent`].

use std::collections::HashMap;
use std::sync::OnceLock;

use super::features::{Gender, Number, Param, Person, Tense, VerbForm};
use super::{suffix_drop, suffix_take, tokens, Cell, MorphError, Result};

const SHIPPED_ENDINGS: &str = include_str!("../../data/verb_endings.tsv");

/// The finite ending table, total over tense × person × number × gender.
#[derive(Debug, Clone)]
pub struct VerbEndings {
    cells: HashMap<(Tense, Person, Number, Gender), String>,
}

fn column<P: Param + std::str::FromStr>(field: &str) -> std::result::Result<Vec<P>, String>
where
    P::Err: std::fmt::Display,
{
    if field == "*" {
        Ok(P::values())
    } else {
        field.parse::<P>().map(|p| vec![p]).map_err(|e| e.to_string())
    }
}

impl VerbEndings {
    pub fn parse(source: &str) -> std::result::Result<Self, String> {
        let mut cells = HashMap::new();
        for (i, raw) in source.lines().enumerate() {
            let line = raw.trim_end_matches('\r');
            if line.trim().is_empty() || line.starts_with('#') {
                continue;
            }
            let fields: Vec<&str> = line.split('\t').collect();
            let err = |m: String| format!("line {}: {m}", i + 1);
            let [t, p, n, g, ending] = fields[..] else {
                return Err(err(format!("expected 5 tab-separated fields, got {}", fields.len())));
            };
            tokens(ending).map_err(|e| err(e.to_string()))?;
            for tense in column::<Tense>(t).map_err(err)? {
                for person in column::<Person>(p).map_err(err)? {
                    for number in column::<Number>(n).map_err(err)? {
                        for gender in column::<Gender>(g).map_err(err)? {
                            cells.insert((tense, person, number, gender), ending.to_string());
                        }
                    }
                }
            }
        }
        for tense in Tense::values() {
            for person in Person::values() {
                for number in Number::values() {
                    for gender in Gender::values() {
                        if !cells.contains_key(&(tense, person, number, gender)) {
                            return Err(format!("no ending for {tense} {person} {number} {gender}"));
                        }
                    }
                }
            }
        }
        Ok(VerbEndings { cells })
    }

    pub fn get(&self, tense: Tense, person: Person, number: Number, gender: Gender) -> &str {
        &self.cells[&(tense, person, number, gender)]
    }
}

pub fn verb_endings() -> &'static VerbEndings {
    static ENDINGS: OnceLock<VerbEndings> = OnceLock::new();
    ENDINGS.get_or_init(|| VerbEndings::parse(SHIPPED_ENDINGS).expect("shipped verb endings are valid"))
}

/// Root and masculine infinitive of one causative level.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerbLevel {
    pub root: String,
    pub inf: String,
}

impl VerbLevel {
    /// Derives the root by dropping the infinitive's `na`.
    pub fn from_infinitive(inf: &str) -> Result<Self> {
        check_infinitive(inf)?;
        Ok(VerbLevel {
            root: suffix_drop(2, inf)?,
            inf: inf.to_string(),
        })
    }
}

fn check_infinitive(inf: &str) -> Result<()> {
    let toks = tokens(inf)?;
    if toks.len() < 3 || !toks.ends_with(&["n", "a"]) {
        return Err(MorphError::NotInfinitive(inf.to_string()));
    }
    Ok(())
}

/// A verb table indexed by [`VerbForm`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verb {
    cells: Vec<Cell>,
}

impl Verb {
    pub fn form(&self, vf: VerbForm) -> &Cell {
        &self.cells[vf.index()]
    }

    /// Cells in [`VerbForm::values`] order.
    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn present_count(&self) -> usize {
        self.cells.iter().filter(|c| c.is_present()).count()
    }
}

/// Conjugates a verb from up to three levels; missing levels are absent.
pub fn gen_verb(levels: [Option<VerbLevel>; 3]) -> Result<Verb> {
    for level in levels.iter().flatten() {
        check_infinitive(&level.inf)?;
        tokens(&level.root)?;
    }
    let endings = verb_endings();
    let cells = VerbForm::values()
        .into_iter()
        .map(|vf| {
            let Some(level) = &levels[vf.level().index()] else {
                return Ok(Cell::Absent);
            };
            let s = match vf {
                VerbForm::Finite {
                    tense,
                    person,
                    number,
                    gender,
                    ..
                } => format!("{}{}", level.root, endings.get(tense, person, number, gender)),
                VerbForm::Infinitive(_) => level.inf.clone(),
                VerbForm::InfinitiveFem(_) => format!("{}y", suffix_drop(1, &level.inf)?),
                VerbForm::InfinitiveObl(_) => format!("{}E", suffix_drop(1, &level.inf)?),
                VerbForm::Root(_) => level.root.clone(),
            };
            Ok(Cell::Form(s))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Verb { cells })
}

/// Conjugates a verb with all three levels given explicitly.
pub fn mk_gen_verb(
    root: &str,
    caus1_root: &str,
    caus2_root: &str,
    inf: &str,
    caus1_inf: &str,
    caus2_inf: &str,
) -> Result<Verb> {
    let level = |root: &str, inf: &str| {
        Some(VerbLevel {
            root: root.to_string(),
            inf: inf.to_string(),
        })
    };
    gen_verb([
        level(root, inf),
        level(caus1_root, caus1_inf),
        level(caus2_root, caus2_inf),
    ])
}

/// Irregular verbs: each level's root is its infinitive minus `na`.
pub fn mk_verb_caus12(inf: &str, caus1_inf: &str, caus2_inf: &str) -> Result<Verb> {
    let base = VerbLevel::from_infinitive(inf)?;
    let c1 = VerbLevel::from_infinitive(caus1_inf)?;
    let c2 = VerbLevel::from_infinitive(caus2_inf)?;
    mk_gen_verb(&base.root, &c1.root, &c2.root, &base.inf, &c1.inf, &c2.inf)
}

/// Regular causatives: root + `a` and root + `wa`. A jazm closing the root
/// is dropped before `a`, since the vowel now follows that consonant.
pub fn verb_v2(inf: &str) -> Result<Verb> {
    let base = VerbLevel::from_infinitive(inf)?;
    let open = if suffix_take(1, &base.root)? == "'" {
        suffix_drop(1, &base.root)?
    } else {
        base.root.clone()
    };
    let c1_root = format!("{open}a");
    let c2_root = format!("{}wa", base.root);
    let c1_inf = format!("{c1_root}na");
    let c2_inf = format!("{c2_root}na");
    mk_gen_verb(&base.root, &c1_root, &c2_root, &base.inf, &c1_inf, &c2_inf)
}

/// One of the four verb categories.
#[derive(Debug, Clone, Copy)]
pub struct VerbCategory {
    pub id: &'static str,
    pub arity: usize,
    pub description: &'static str,
}

const CATEGORIES: [VerbCategory; 4] = [
    VerbCategory {
        id: "v1",
        arity: 1,
        description: "basic stem only; no causatives",
    },
    VerbCategory {
        id: "v2",
        arity: 1,
        description: "basic stem with rule-derived direct and indirect causatives",
    },
    VerbCategory {
        id: "v3",
        arity: 2,
        description: "basic stem and direct causative; no indirect causative",
    },
    VerbCategory {
        id: "v4",
        arity: 3,
        description: "basic stem, direct and indirect causative given explicitly",
    },
];

pub fn verb_categories() -> &'static [VerbCategory] {
    &CATEGORIES
}

impl VerbCategory {
    pub fn inflect(&self, forms: &[&str]) -> Result<Verb> {
        if forms.len() != self.arity {
            return Err(MorphError::Arity {
                paradigm: self.id.into(),
                expected: self.arity,
                found: forms.len(),
            });
        }
        match self.id {
            "v1" => gen_verb([Some(VerbLevel::from_infinitive(forms[0])?), None, None]),
            "v2" => verb_v2(forms[0]),
            "v3" => gen_verb([
                Some(VerbLevel::from_infinitive(forms[0])?),
                Some(VerbLevel::from_infinitive(forms[1])?),
                None,
            ]),
            _ => mk_verb_caus12(forms[0], forms[1], forms[2]),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::morphology::features::CausLevel;

    fn get(v: &Verb, vf: VerbForm) -> &str {
        v.form(vf).form().expect("present")
    }

    fn finite(level: CausLevel, tense: Tense, person: Person, number: Number, gender: Gender) -> VerbForm {
        VerbForm::Finite {
            level,
            tense,
            person,
            number,
            gender,
        }
    }

    #[test]
    fn shipped_table_endings() {
        let e = verb_endings();
        assert_eq!(e.get(Tense::Subj, Person::Pers1, Number::Sg, Gender::Fem), "wN");
        assert_eq!(e.get(Tense::Subj, Person::Pers2Familiar, Number::Pl, Gender::Masc), "w");
        assert_eq!(e.get(Tense::Perf, Person::Pers3, Number::Pl, Gender::Fem), "yN");
        assert_eq!(e.get(Tense::Imperf, Person::Pers2Respect, Number::Sg, Gender::Masc), "ta");
    }

    #[test]
    fn ending_table_must_be_total() {
        let err = VerbEndings::parse("Subj\t*\t*\t*\tE\n").unwrap_err();
        assert!(err.contains("no ending for Perf"), "{err}");
        assert!(VerbEndings::parse("Subj\tPers9\t*\t*\tE\n").unwrap_err().starts_with("line 1"));
    }

    #[test]
    fn caus12_roots_from_infinitives() {
        let v = mk_verb_caus12("m(i)l'na", "m(i)lana", "m(i)l'wana").unwrap();
        assert_eq!(get(&v, VerbForm::Root(CausLevel::Base)), "m(i)l'");
        assert_eq!(get(&v, VerbForm::Root(CausLevel::Caus1)), "m(i)la");
        assert_eq!(get(&v, VerbForm::Root(CausLevel::Caus2)), "m(i)l'wa");
        assert_eq!(get(&v, VerbForm::Infinitive(CausLevel::Base)), "m(i)l'na");
        assert_eq!(v.present_count(), 192);
    }

    #[test]
    fn caus12_rejects_non_infinitive() {
        assert!(matches!(mk_verb_caus12("xyz", "m(i)lana", "m(i)l'wana"), Err(MorphError::NotInfinitive(_))));
        assert!(matches!(mk_verb_caus12("na", "m(i)lana", "m(i)l'wana"), Err(MorphError::NotInfinitive(_))));
    }

    #[test]
    fn rule_derived_causatives() {
        let v = verb_v2("b(a)n'na").unwrap();
        let cell = |vf| get(&v, vf).to_string();
        use CausLevel::*;
        assert_eq!(cell(VerbForm::Root(Base)), "b(a)n'");
        assert_eq!(cell(VerbForm::Root(Caus1)), "b(a)na");
        assert_eq!(cell(VerbForm::Root(Caus2)), "b(a)n'wa");
        assert_eq!(cell(VerbForm::Infinitive(Caus1)), "b(a)nana");
        assert_eq!(cell(VerbForm::Infinitive(Caus2)), "b(a)n'wana");
        assert_eq!(cell(VerbForm::InfinitiveObl(Base)), "b(a)n'nE");
        assert_eq!(cell(VerbForm::InfinitiveObl(Caus2)), "b(a)n'wanE");
        assert_eq!(cell(VerbForm::InfinitiveFem(Base)), "b(a)n'ny");
    }

    #[test]
    fn finite_forms() {
        let v = verb_v2("b(a)n'na").unwrap();
        use CausLevel::*;
        assert_eq!(get(&v, finite(Base, Tense::Perf, Person::Pers3, Number::Sg, Gender::Fem)), "b(a)n'y");
        assert_eq!(
            get(&v, finite(Caus1, Tense::Imperf, Person::Pers1, Number::Pl, Gender::Masc)),
            "b(a)natE"
        );
        assert_eq!(
            get(&v, finite(Caus2, Tense::Subj, Person::Pers1, Number::Sg, Gender::Masc)),
            "b(a)n'wawN"
        );
    }

    #[test]
    fn category_cell_counts() {
        let cat = |id: &str| verb_categories().iter().find(|c| c.id == id).unwrap();
        let v1 = cat("v1").inflect(&["lyna"]).unwrap();
        assert_eq!(v1.present_count(), 64);
        assert_eq!(v1.form(VerbForm::Root(CausLevel::Caus1)), &Cell::Absent);
        let v3 = cat("v3").inflect(&["dyk|hna", "d(i)k|hana"]).unwrap();
        assert_eq!(v3.present_count(), 128);
        assert!(v3.cells()[120..180].iter().all(|c| *c == Cell::Absent));
        assert_eq!(cat("v2").inflect(&["b(a)n'na"]).unwrap().present_count(), 192);
        assert!(matches!(cat("v4").inflect(&["m(i)l'na"]), Err(MorphError::Arity { expected: 3, .. })));
    }
}
