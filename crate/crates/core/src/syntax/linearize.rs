//! Tree to string.

use crate::lexicon::Dictionary;
use crate::morphology::{
    AdjForm, AuxForm, AuxTense, CausLevel, DemForm, DirectCase, Entry, FeatureBundle, Gender, Number, NounForm,
    Person, PronCase, PronForm, VerbForm,
};
use crate::translit;

use super::{Agreement, Cat, Leaf, LeafCat, Result, SyntaxError, Tree};

/// The cells a VP used for one subject: the auxiliary cell and, for
/// `UseVP`, the infinitive.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AgreementUse {
    pub subject: Agreement,
    pub aux: AuxForm,
    pub verb: Option<VerbForm>,
}

/// The infinitive a main verb takes before the auxiliary.
pub(crate) fn infinitive_for(gender: Gender, number: Number) -> VerbForm {
    match (gender, number) {
        (Gender::Masc, Number::Sg) => VerbForm::Infinitive(CausLevel::Base),
        (Gender::Masc, Number::Pl) => VerbForm::InfinitiveObl(CausLevel::Base),
        (Gender::Fem, _) => VerbForm::InfinitiveFem(CausLevel::Base),
    }
}

pub(crate) struct CnLin {
    pub tokens: Vec<String>,
    pub number: Number,
    pub gender: Gender,
}

pub(crate) struct Lin<'d> {
    dict: &'d Dictionary,
    pub trace: Vec<AgreementUse>,
}

impl<'d> Lin<'d> {
    pub fn new(dict: &'d Dictionary) -> Self {
        Lin { dict, trace: Vec::new() }
    }

    fn entry(&self, leaf: &Leaf, expected: LeafCat) -> Result<&'d Entry> {
        let e = self
            .dict
            .entry(leaf.id)
            .ok_or_else(|| SyntaxError::UnknownLeaf(leaf.clone()))?;
        if e.lemma.as_str() != leaf.lemma {
            return Err(SyntaxError::LeafMismatch {
                leaf: leaf.clone(),
                id: leaf.id,
                found: e.lemma.as_str().to_string(),
            });
        }
        let found = LeafCat::of(e);
        if found != expected {
            return Err(SyntaxError::Category {
                leaf: leaf.clone(),
                expected,
                found,
            });
        }
        Ok(e)
    }

    fn cell(&self, leaf: &Leaf, expected: LeafCat, bundle: FeatureBundle) -> Result<String> {
        let e = self.entry(leaf, expected)?;
        e.form(bundle).map(str::to_string).ok_or_else(|| SyntaxError::MissingCell {
            leaf: leaf.clone(),
            cell: bundle.to_string(),
        })
    }

    fn invariant(&self, leaf: &Leaf, expected: LeafCat) -> Result<String> {
        self.cell(leaf, expected, FeatureBundle::Invariant)
    }

    pub fn cn(&mut self, t: &Tree, case: crate::morphology::Case) -> Result<CnLin> {
        match t {
            Tree::UseN { noun, number } => {
                let e = self.entry(noun, LeafCat::N)?;
                let s = self.cell(noun, LeafCat::N, FeatureBundle::Noun(NounForm::new(*number, case)))?;
                Ok(CnLin {
                    tokens: vec![s],
                    number: *number,
                    gender: e.gender().unwrap_or(Gender::Masc),
                })
            }
            Tree::PossCN {
                pron,
                person,
                number,
                cn,
            } => {
                let inner = self.cn(cn, case)?;
                let gen = PronForm {
                    number: *number,
                    person: *person,
                    case: PronCase::Gen(AdjForm::new(inner.gender, inner.number, case)),
                };
                let mut tokens = vec![self.cell(pron, LeafCat::Pron, FeatureBundle::PersPron(gen))?];
                tokens.extend(inner.tokens);
                Ok(CnLin { tokens, ..inner })
            }
            other => Err(wrong(other, Cat::CN)),
        }
    }

    pub fn np(&mut self, t: &Tree, case: DirectCase) -> Result<(Vec<String>, Agreement)> {
        let third = |number, gender| Agreement {
            person: Person::Pers3,
            number,
            gender,
        };
        match t {
            Tree::UsePron {
                pron,
                person,
                number,
                gender,
            } => {
                let pc = match case {
                    DirectCase::Nom => PronCase::Nom,
                    DirectCase::Obl => PronCase::Obl,
                };
                let form = PronForm {
                    number: *number,
                    person: *person,
                    case: pc,
                };
                let s = self.cell(pron, LeafCat::Pron, FeatureBundle::PersPron(form))?;
                let agr = Agreement {
                    person: person.agreement(),
                    number: *number,
                    gender: *gender,
                };
                Ok((vec![s], agr))
            }
            Tree::DemCN { dem, cn } => {
                let inner = self.cn(cn, case.into())?;
                let d = self.dem(dem, inner.number, case)?;
                Ok(([vec![d], inner.tokens].concat(), third(inner.number, inner.gender)))
            }
            Tree::DemNP { dem, num, cn } => {
                let inner = self.cn(cn, case.into())?;
                let n = self.entry(num, LeafCat::Num)?;
                let expected = n.inherent.iter().find_map(|t| t.number()).unwrap_or(Number::Sg);
                if expected != inner.number {
                    return Err(SyntaxError::NumberMismatch {
                        num: num.clone(),
                        expected,
                        found: inner.number,
                    });
                }
                let d = self.dem(dem, inner.number, case)?;
                let n = self.invariant(num, LeafCat::Num)?;
                Ok(([vec![d, n], inner.tokens].concat(), third(inner.number, inner.gender)))
            }
            Tree::DemPN { dem, pn } => {
                let e = self.entry(pn, LeafCat::PN)?;
                let d = self.dem(dem, Number::Sg, case)?;
                let p = self.cell(pn, LeafCat::PN, FeatureBundle::Noun(NounForm::new(Number::Sg, case.into())))?;
                Ok((vec![d, p], third(Number::Sg, e.gender().unwrap_or(Gender::Masc))))
            }
            Tree::UseNP { np, post, cn } => {
                let (mut tokens, _) = self.np(np, DirectCase::Obl)?;
                tokens.push(self.invariant(post, LeafCat::PostP)?);
                let inner = self.cn(cn, crate::morphology::Case::Nom)?;
                tokens.extend(inner.tokens);
                Ok((tokens, third(inner.number, inner.gender)))
            }
            other => Err(wrong(other, Cat::NP)),
        }
    }

    fn dem(&self, dem: &Leaf, number: Number, case: DirectCase) -> Result<String> {
        self.cell(dem, LeafCat::Dem, FeatureBundle::DemPron(DemForm { number, case }))
    }

    pub fn vp(&mut self, t: &Tree, tense: AuxTense, subject: Agreement) -> Result<Vec<String>> {
        let aux_form = AuxForm {
            tense,
            person: subject.person,
            number: subject.number,
            gender: subject.gender,
        };
        let (tokens, verb) = match t {
            Tree::UseVAux { aux } => (vec![self.cell(aux, LeafCat::VAux, FeatureBundle::Aux(aux_form))?], None),
            Tree::UseVP { verb, aux } => {
                let vf = infinitive_for(subject.gender, subject.number);
                let v = self.cell(verb, LeafCat::V, FeatureBundle::Verb(vf))?;
                let a = self.cell(aux, LeafCat::VAux, FeatureBundle::Aux(aux_form))?;
                (vec![v, a], Some(vf))
            }
            other => return Err(wrong(other, Cat::VP)),
        };
        self.trace.push(AgreementUse {
            subject,
            aux: aux_form,
            verb,
        });
        Ok(tokens)
    }

    pub fn s(&mut self, t: &Tree) -> Result<Vec<String>> {
        match t {
            Tree::UsePastS(np, vp) => {
                let (mut tokens, agr) = self.np(np, DirectCase::Nom)?;
                tokens.extend(self.vp(vp, AuxTense::Past, agr)?);
                Ok(tokens)
            }
            Tree::UsePresS(np, vp) => {
                let (mut tokens, agr) = self.np(np, DirectCase::Obl)?;
                tokens.extend(self.vp(vp, AuxTense::Present, agr)?);
                Ok(tokens)
            }
            Tree::CoordS(a, conj, b) => {
                let mut tokens = self.s(a)?;
                tokens.push(self.invariant(conj, LeafCat::Conj)?);
                tokens.extend(self.s(b)?);
                Ok(tokens)
            }
            other => Err(wrong(other, Cat::S)),
        }
    }

    /// Sentences as they are; noun phrases and nouns in the nominative.
    pub fn any(&mut self, t: &Tree) -> Result<Vec<String>> {
        match t.cat() {
            Cat::S => self.s(t),
            Cat::NP => Ok(self.np(t, DirectCase::Nom)?.0),
            Cat::CN => Ok(self.cn(t, crate::morphology::Case::Nom)?.tokens),
            Cat::VP => Err(SyntaxError::NoStandalone(Cat::VP)),
        }
    }
}

fn wrong(t: &Tree, expected: Cat) -> SyntaxError {
    SyntaxError::TreeText {
        offset: 0,
        message: format!("{} is a {}, expected a {expected}", t.name(), t.cat()),
    }
}

/// Roman tokens of a tree.
pub fn linearize_tokens(tree: &Tree, dict: &Dictionary) -> Result<Vec<String>> {
    Lin::new(dict).any(tree)
}

/// Urdu-script rendering of a tree, tokens separated by single spaces.
pub fn linearize(tree: &Tree, dict: &Dictionary) -> Result<String> {
    Ok(linearize_traced(tree, dict)?.0)
}

/// [`linearize`] plus the agreement cells every VP selected.
pub fn linearize_traced(tree: &Tree, dict: &Dictionary) -> Result<(String, Vec<AgreementUse>)> {
    let mut lin = Lin::new(dict);
    let tokens = lin.any(tree)?;
    let table = translit::shipped();
    let urdu: Vec<String> = tokens
        .iter()
        .map(|t| table.to_urdu(t).expect("dictionary forms scan"))
        .collect();
    Ok((urdu.join(" "), lin.trace))
}
