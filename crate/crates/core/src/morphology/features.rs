//! Inflectional parameters and the feature bundles that index table cells.
//!
//! Every parameter type enumerates its values in a fixed order through
//! [`Param::values`]. Composite forms enumerate in lexicographic order of
//! their components, so table layouts, exports and tests can rely on a
//! stable iteration order.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

/// A finite inflectional parameter.
pub trait Param: Sized + Copy + Eq {
    fn values() -> Vec<Self>;

    /// Position of `self` in [`Param::values`].
    fn index(self) -> usize {
        Self::values()
            .iter()
            .position(|v| *v == self)
            .expect("value is enumerated")
    }
}

macro_rules! simple_param {
    ($(#[$meta:meta])* $name:ident { $($variant:ident => $text:literal),+ $(,)? }) => {
        $(#[$meta])*
        #[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub enum $name {
            $($variant),+
        }

        impl Param for $name {
            fn values() -> Vec<Self> {
                vec![$($name::$variant),+]
            }
        }

        impl $name {
            pub fn as_str(self) -> &'static str {
                match self {
                    $($name::$variant => $text),+
                }
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str(self.as_str())
            }
        }

        impl FromStr for $name {
            type Err = String;

            fn from_str(s: &str) -> Result<Self, Self::Err> {
                match s {
                    $($text => Ok($name::$variant),)+
                    other => Err(format!(concat!("unknown ", stringify!($name), " {:?}"), other)),
                }
            }
        }
    };
}

simple_param!(Case { Nom => "Nom", Obl => "Obl", Voc => "Voc" });
simple_param!(Number { Sg => "Sg", Pl => "Pl" });
simple_param!(Gender { Masc => "Masc", Fem => "Fem" });
simple_param!(Person {
    Pers1 => "Pers1",
    Pers2Casual => "Pers2_Casual",
    Pers2Familiar => "Pers2_Familiar",
    Pers2Respect => "Pers2_Respect",
    Pers3 => "Pers3",
});
simple_param!(Tense { Subj => "Subj", Perf => "Perf", Imperf => "Imperf" });
simple_param!(
    /// Causative level of a verb stem: basic, direct or indirect causative.
    CausLevel { Base => "Base", Caus1 => "Caus1", Caus2 => "Caus2" }
);
simple_param!(
    /// Tense selector of the auxiliary tables.
    AuxTense { Present => "Present", Past => "Past" }
);
simple_param!(
    /// Pronominal person, with the near/far split of the third person.
    PronPerson {
        Pers1 => "Pers1",
        Pers2Casual => "Pers2_Casual",
        Pers2Familiar => "Pers2_Familiar",
        Pers2Respect => "Pers2_Respect",
        Pers3Near => "Pers3_Near",
        Pers3Far => "Pers3_Far",
    }
);
simple_param!(
    /// Case of demonstratives and pronoun bases: no vocative.
    DirectCase { Nom => "Nom", Obl => "Obl" }
);

impl PronPerson {
    /// The agreement person a pronoun triggers on the verb.
    pub fn agreement(self) -> Person {
        match self {
            PronPerson::Pers1 => Person::Pers1,
            PronPerson::Pers2Casual => Person::Pers2Casual,
            PronPerson::Pers2Familiar => Person::Pers2Familiar,
            PronPerson::Pers2Respect => Person::Pers2Respect,
            PronPerson::Pers3Near | PronPerson::Pers3Far => Person::Pers3,
        }
    }
}

impl From<DirectCase> for Case {
    fn from(c: DirectCase) -> Case {
        match c {
            DirectCase::Nom => Case::Nom,
            DirectCase::Obl => Case::Obl,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NounForm {
    pub number: Number,
    pub case: Case,
}

impl NounForm {
    pub fn new(number: Number, case: Case) -> Self {
        NounForm { number, case }
    }
}

impl Param for NounForm {
    fn values() -> Vec<Self> {
        let mut out = Vec::with_capacity(6);
        for number in Number::values() {
            for case in Case::values() {
                out.push(NounForm { number, case });
            }
        }
        out
    }

    fn index(self) -> usize {
        self.number.index() * 3 + self.case.index()
    }
}

impl fmt::Display for NounForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.number, self.case)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AdjForm {
    pub gender: Gender,
    pub number: Number,
    pub case: Case,
}

impl AdjForm {
    pub fn new(gender: Gender, number: Number, case: Case) -> Self {
        AdjForm { gender, number, case }
    }
}

impl Param for AdjForm {
    fn values() -> Vec<Self> {
        let mut out = Vec::with_capacity(12);
        for gender in Gender::values() {
            for number in Number::values() {
                for case in Case::values() {
                    out.push(AdjForm { gender, number, case });
                }
            }
        }
        out
    }

    fn index(self) -> usize {
        self.gender.index() * 6 + self.number.index() * 3 + self.case.index()
    }
}

impl fmt::Display for AdjForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} {}", self.gender, self.number, self.case)
    }
}

/// One cell of a verb table.
///
/// Enumeration order follows the constructor order: the finite forms of
/// the base, direct causative and indirect causative stems (60 each, by
/// tense, person, number, gender), then the masculine infinitives, the
/// feminine infinitives, the oblique infinitives and the roots (one per
/// level each).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum VerbForm {
    Finite {
        level: CausLevel,
        tense: Tense,
        person: Person,
        number: Number,
        gender: Gender,
    },
    Infinitive(CausLevel),
    InfinitiveFem(CausLevel),
    InfinitiveObl(CausLevel),
    Root(CausLevel),
}

impl VerbForm {
    pub fn level(self) -> CausLevel {
        match self {
            VerbForm::Finite { level, .. }
            | VerbForm::Infinitive(level)
            | VerbForm::InfinitiveFem(level)
            | VerbForm::InfinitiveObl(level)
            | VerbForm::Root(level) => level,
        }
    }
}

impl Param for VerbForm {
    fn values() -> Vec<Self> {
        let mut out = Vec::with_capacity(192);
        for level in CausLevel::values() {
            for tense in Tense::values() {
                for person in Person::values() {
                    for number in Number::values() {
                        for gender in Gender::values() {
                            out.push(VerbForm::Finite {
                                level,
                                tense,
                                person,
                                number,
                                gender,
                            });
                        }
                    }
                }
            }
        }
        let levels = CausLevel::values();
        out.extend(levels.iter().map(|&l| VerbForm::Infinitive(l)));
        out.extend(levels.iter().map(|&l| VerbForm::InfinitiveFem(l)));
        out.extend(levels.iter().map(|&l| VerbForm::InfinitiveObl(l)));
        out.extend(levels.iter().map(|&l| VerbForm::Root(l)));
        out
    }

    fn index(self) -> usize {
        match self {
            VerbForm::Finite {
                level,
                tense,
                person,
                number,
                gender,
            } => level.index() * 60 + tense.index() * 20 + person.index() * 4 + number.index() * 2 + gender.index(),
            VerbForm::Infinitive(l) => 180 + l.index(),
            VerbForm::InfinitiveFem(l) => 183 + l.index(),
            VerbForm::InfinitiveObl(l) => 186 + l.index(),
            VerbForm::Root(l) => 189 + l.index(),
        }
    }
}

fn level_prefix(level: CausLevel) -> &'static str {
    match level {
        CausLevel::Base => "",
        CausLevel::Caus1 => "Caus1_",
        CausLevel::Caus2 => "Caus2_",
    }
}

impl fmt::Display for VerbForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            VerbForm::Finite {
                level,
                tense,
                person,
                number,
                gender,
            } => {
                let head = match level {
                    CausLevel::Base => "VF",
                    CausLevel::Caus1 => "Caus1",
                    CausLevel::Caus2 => "Caus2",
                };
                write!(f, "{head} {tense} {person} {number} {gender}")
            }
            VerbForm::Infinitive(l) => write!(f, "{}Inf", level_prefix(l)),
            VerbForm::InfinitiveFem(l) => write!(f, "{}Inf_Fem", level_prefix(l)),
            VerbForm::InfinitiveObl(l) => write!(f, "{}Inf_Obl", level_prefix(l)),
            VerbForm::Root(l) => write!(f, "{}Root", level_prefix(l)),
        }
    }
}

/// A cell of an auxiliary table: the tense selector plus full agreement.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AuxForm {
    pub tense: AuxTense,
    pub person: Person,
    pub number: Number,
    pub gender: Gender,
}

impl Param for AuxForm {
    fn values() -> Vec<Self> {
        let mut out = Vec::with_capacity(40);
        for tense in AuxTense::values() {
            for person in Person::values() {
                for number in Number::values() {
                    for gender in Gender::values() {
                        out.push(AuxForm {
                            tense,
                            person,
                            number,
                            gender,
                        });
                    }
                }
            }
        }
        out
    }
}

impl fmt::Display for AuxForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} {} {}", self.tense, self.person, self.number, self.gender)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DemForm {
    pub number: Number,
    pub case: DirectCase,
}

impl Param for DemForm {
    fn values() -> Vec<Self> {
        let mut out = Vec::with_capacity(4);
        for number in Number::values() {
            for case in DirectCase::values() {
                out.push(DemForm { number, case });
            }
        }
        out
    }
}

impl fmt::Display for DemForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.number, self.case)
    }
}

/// Case of a personal pronoun; the genitive agrees like a marked adjective
/// with the possessed noun.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PronCase {
    Nom,
    Obl,
    Gen(AdjForm),
}

impl Param for PronCase {
    fn values() -> Vec<Self> {
        let mut out = vec![PronCase::Nom, PronCase::Obl];
        out.extend(AdjForm::values().into_iter().map(PronCase::Gen));
        out
    }
}

impl fmt::Display for PronCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PronCase::Nom => f.write_str("Nom"),
            PronCase::Obl => f.write_str("Obl"),
            PronCase::Gen(a) => write!(f, "Gen {a}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PronForm {
    pub number: Number,
    pub person: PronPerson,
    pub case: PronCase,
}

impl Param for PronForm {
    fn values() -> Vec<Self> {
        let mut out = Vec::with_capacity(168);
        for number in Number::values() {
            for person in PronPerson::values() {
                for case in PronCase::values() {
                    out.push(PronForm { number, person, case });
                }
            }
        }
        out
    }
}

impl fmt::Display for PronForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} {}", self.number, self.person, self.case)
    }
}

/// Word classes of the lexicon.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum WordClass {
    N,
    Verb,
    Adj,
    Adv,
    PersPron,
    DemPron,
    PostP,
    Particle,
    Num,
    #[serde(rename = "Verb_Aux")]
    VerbAux,
}

impl WordClass {
    pub const ALL: [WordClass; 10] = [
        WordClass::N,
        WordClass::Verb,
        WordClass::Adj,
        WordClass::Adv,
        WordClass::PersPron,
        WordClass::DemPron,
        WordClass::PostP,
        WordClass::Particle,
        WordClass::Num,
        WordClass::VerbAux,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            WordClass::N => "N",
            WordClass::Verb => "Verb",
            WordClass::Adj => "Adj",
            WordClass::Adv => "Adv",
            WordClass::PersPron => "PersPron",
            WordClass::DemPron => "DemPron",
            WordClass::PostP => "PostP",
            WordClass::Particle => "Particle",
            WordClass::Num => "Num",
            WordClass::VerbAux => "Verb_Aux",
        }
    }

    /// The cell enumeration of an entry of this class, in frozen order.
    pub fn forms(self) -> &'static [FeatureBundle] {
        &form_tables()[&self].0
    }

    /// Looks up a cell of this class by its rendered feature string.
    pub fn parse_form(self, text: &str) -> Option<FeatureBundle> {
        let key = text.split_whitespace().collect::<Vec<_>>().join(" ");
        form_tables()[&self].1.get(&key).copied()
    }
}

impl fmt::Display for WordClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for WordClass {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        WordClass::ALL
            .into_iter()
            .find(|c| c.as_str() == s || (s == "VerbAux" && *c == WordClass::VerbAux))
            .ok_or_else(|| format!("unknown word class {s:?}"))
    }
}

type FormTable = (Vec<FeatureBundle>, HashMap<String, FeatureBundle>);

fn form_tables() -> &'static HashMap<WordClass, FormTable> {
    static TABLES: OnceLock<HashMap<WordClass, FormTable>> = OnceLock::new();
    TABLES.get_or_init(|| {
        WordClass::ALL
            .into_iter()
            .map(|class| {
                let forms: Vec<FeatureBundle> = match class {
                    WordClass::N => NounForm::values().into_iter().map(FeatureBundle::Noun).collect(),
                    WordClass::Verb => VerbForm::values().into_iter().map(FeatureBundle::Verb).collect(),
                    WordClass::Adj => AdjForm::values().into_iter().map(FeatureBundle::Adj).collect(),
                    WordClass::VerbAux => AuxForm::values().into_iter().map(FeatureBundle::Aux).collect(),
                    WordClass::PersPron => PronForm::values().into_iter().map(FeatureBundle::PersPron).collect(),
                    WordClass::DemPron => DemForm::values().into_iter().map(FeatureBundle::DemPron).collect(),
                    WordClass::Adv | WordClass::PostP | WordClass::Particle | WordClass::Num => {
                        vec![FeatureBundle::Invariant]
                    }
                };
                let by_name = forms.iter().map(|f| (f.to_string(), *f)).collect();
                (class, (forms, by_name))
            })
            .collect()
    })
}

/// Identifies one cell of an inflection table.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FeatureBundle {
    Noun(NounForm),
    Verb(VerbForm),
    Adj(AdjForm),
    Aux(AuxForm),
    PersPron(PronForm),
    DemPron(DemForm),
    /// The single cell of an uninflected word.
    Invariant,
}

impl fmt::Display for FeatureBundle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FeatureBundle::Noun(x) => x.fmt(f),
            FeatureBundle::Verb(x) => x.fmt(f),
            FeatureBundle::Adj(x) => x.fmt(f),
            FeatureBundle::Aux(x) => x.fmt(f),
            FeatureBundle::PersPron(x) => x.fmt(f),
            FeatureBundle::DemPron(x) => x.fmt(f),
            FeatureBundle::Invariant => Ok(()),
        }
    }
}

/// Features a lexeme carries independently of its inflected form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum InherentTag {
    Masc,
    Fem,
    Pers3Near,
    Pers3Far,
    Sg,
    Pl,
    Conj,
    Proper,
}

impl InherentTag {
    pub const ALL: [InherentTag; 8] = [
        InherentTag::Masc,
        InherentTag::Fem,
        InherentTag::Pers3Near,
        InherentTag::Pers3Far,
        InherentTag::Sg,
        InherentTag::Pl,
        InherentTag::Conj,
        InherentTag::Proper,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            InherentTag::Masc => "Masc",
            InherentTag::Fem => "Fem",
            InherentTag::Pers3Near => "Pers3_Near",
            InherentTag::Pers3Far => "Pers3_Far",
            InherentTag::Sg => "Sg",
            InherentTag::Pl => "Pl",
            InherentTag::Conj => "Conj",
            InherentTag::Proper => "Proper",
        }
    }

    pub fn gender(self) -> Option<Gender> {
        match self {
            InherentTag::Masc => Some(Gender::Masc),
            InherentTag::Fem => Some(Gender::Fem),
            _ => None,
        }
    }

    pub fn number(self) -> Option<Number> {
        match self {
            InherentTag::Sg => Some(Number::Sg),
            InherentTag::Pl => Some(Number::Pl),
            _ => None,
        }
    }
}

impl From<Gender> for InherentTag {
    fn from(g: Gender) -> Self {
        match g {
            Gender::Masc => InherentTag::Masc,
            Gender::Fem => InherentTag::Fem,
        }
    }
}

impl fmt::Display for InherentTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for InherentTag {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        InherentTag::ALL
            .into_iter()
            .find(|t| t.as_str() == s)
            .ok_or_else(|| format!("unknown inherent feature {s:?}"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn parameter_cardinalities() {
        assert_eq!(Case::values().len(), 3);
        assert_eq!(Number::values().len(), 2);
        assert_eq!(Gender::values().len(), 2);
        assert_eq!(Person::values().len(), 5);
        assert_eq!(Tense::values().len(), 3);
    }

    #[test]
    fn noun_forms_in_documented_order() {
        use Case::*;
        use Number::*;
        let expected = [(Sg, Nom), (Sg, Obl), (Sg, Voc), (Pl, Nom), (Pl, Obl), (Pl, Voc)];
        let got: Vec<_> = NounForm::values().into_iter().map(|f| (f.number, f.case)).collect();
        assert_eq!(got, expected);
    }

    #[test]
    fn composite_enumerations_are_distinct_and_indexed() {
        fn check<P: Param + std::hash::Hash>(expected: usize) {
            let values = P::values();
            assert_eq!(values.len(), expected);
            let unique: HashSet<_> = values.iter().collect();
            assert_eq!(unique.len(), expected);
            for (i, v) in values.iter().enumerate() {
                assert_eq!(v.index(), i);
            }
        }
        check::<NounForm>(6);
        check::<AdjForm>(12);
        check::<VerbForm>(192);
        check::<AuxForm>(40);
        check::<PronForm>(168);
        check::<DemForm>(4);
    }

    #[test]
    fn verb_form_rendering() {
        assert_eq!(VerbForm::InfinitiveFem(CausLevel::Base).to_string(), "Inf_Fem");
        assert_eq!(VerbForm::Root(CausLevel::Caus2).to_string(), "Caus2_Root");
        let f = VerbForm::Finite {
            level: CausLevel::Caus1,
            tense: Tense::Perf,
            person: Person::Pers2Respect,
            number: Number::Pl,
            gender: Gender::Fem,
        };
        assert_eq!(f.to_string(), "Caus1 Perf Pers2_Respect Pl Fem");
    }

    #[test]
    fn feature_strings_parse_back_per_class() {
        for class in WordClass::ALL {
            for form in class.forms() {
                assert_eq!(class.parse_form(&form.to_string()), Some(*form), "{class} {form}");
            }
        }
        assert_eq!(WordClass::N.parse_form("Pl Obl Voc"), None);
    }

    #[test]
    fn class_names() {
        assert_eq!(WordClass::VerbAux.to_string(), "Verb_Aux");
        assert_eq!("Verb_Aux".parse::<WordClass>().unwrap(), WordClass::VerbAux);
        assert!("Noun".parse::<WordClass>().is_err());
    }
}
