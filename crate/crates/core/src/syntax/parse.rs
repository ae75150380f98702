//! Token sequence to trees: a span chart over the lexical analyses of each
//! token, filled shortest span first.

use std::collections::{BTreeSet, HashMap};

use crate::lexicon::{to_roman_word, Dictionary};
use crate::morphology::{
    AuxForm, AuxTense, Case, DemForm, DirectCase, Entry, FeatureBundle, Gender, Number, NounForm,
    Person, PronCase, PronForm,
};
use crate::translit::Script;

use super::linearize::{infinitive_for, Lin};
use super::{Agreement, Leaf, LeafCat, Tree};

/// Trees covering the whole input plus the tokens nothing in the
/// dictionary analyzes.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ParseResult {
    pub trees: Vec<Tree>,
    pub unanalyzed: Vec<String>,
}

type Reading<'d> = (&'d Entry, FeatureBundle);

/// Constituents found over each `(start, end)` span.
type Cells<T> = HashMap<(usize, usize), Vec<T>>;

struct Chart<'d> {
    words: Vec<Vec<Reading<'d>>>,
    cn: Cells<(Tree, Case, Number, Gender)>,
    np: Cells<(Tree, DirectCase, Agreement)>,
    vp: Cells<(Tree, AuxTense, Agreement)>,
    s: Cells<Tree>,
}

fn leaf(e: &Entry) -> Leaf {
    Leaf::new(e.lemma.as_str(), e.lemma_id)
}

fn third(number: Number, gender: Gender) -> Agreement {
    Agreement {
        person: Person::Pers3,
        number,
        gender,
    }
}

fn dedup<T: Ord>(v: &mut Vec<T>) {
    v.sort();
    v.dedup();
}

impl<'d> Chart<'d> {
    fn at(&self, i: usize, cat: LeafCat) -> impl Iterator<Item = &Reading<'d>> {
        self.words[i].iter().filter(move |(e, _)| LeafCat::of(e) == cat)
    }

    fn cn_items(&self, i: usize, j: usize) -> Vec<(Tree, Case, Number, Gender)> {
        let mut out = Vec::new();
        if j == i + 1 {
            for (e, f) in self.at(i, LeafCat::N) {
                if let FeatureBundle::Noun(NounForm { number, case }) = *f {
                    let noun = Tree::UseN { noun: leaf(e), number };
                    out.push((noun, case, number, e.gender().unwrap_or(Gender::Masc)));
                }
            }
        }
        if j > i + 1 {
            for (e, f) in self.at(i, LeafCat::Pron) {
                let FeatureBundle::PersPron(PronForm {
                    number: pn,
                    person,
                    case: PronCase::Gen(a),
                }) = *f
                else {
                    continue;
                };
                for (cn, case, n, g) in &self.cn[&(i + 1, j)] {
                    if (*case, *n, *g) == (a.case, a.number, a.gender) {
                        let t = Tree::PossCN {
                            pron: leaf(e),
                            person,
                            number: pn,
                            cn: Box::new(cn.clone()),
                        };
                        out.push((t, *case, *n, *g));
                    }
                }
            }
        }
        dedup(&mut out);
        out
    }

    fn dems(&self, i: usize) -> impl Iterator<Item = (&'d Entry, DemForm)> + '_ {
        self.at(i, LeafCat::Dem).filter_map(|(e, f)| match *f {
            FeatureBundle::DemPron(d) => Some((*e, d)),
            _ => None,
        })
    }

    fn np_items(&self, i: usize, j: usize) -> Vec<(Tree, DirectCase, Agreement)> {
        let mut out = Vec::new();
        if j == i + 1 {
            for (e, f) in self.at(i, LeafCat::Pron) {
                let FeatureBundle::PersPron(PronForm { number, person, case }) = *f else {
                    continue;
                };
                let dc = match case {
                    PronCase::Nom => DirectCase::Nom,
                    PronCase::Obl => DirectCase::Obl,
                    PronCase::Gen(_) => continue,
                };
                for gender in [Gender::Masc, Gender::Fem] {
                    let t = Tree::UsePron {
                        pron: leaf(e),
                        person,
                        number,
                        gender,
                    };
                    let agr = Agreement {
                        person: person.agreement(),
                        number,
                        gender,
                    };
                    out.push((t, dc, agr));
                }
            }
        }
        for (d, DemForm { number, case: dc }) in self.dems(i) {
            if j > i + 1 {
                for (cn, case, n, g) in &self.cn[&(i + 1, j)] {
                    if *case == Case::from(dc) && *n == number {
                        let t = Tree::DemCN {
                            dem: leaf(d),
                            cn: Box::new(cn.clone()),
                        };
                        out.push((t, dc, third(*n, *g)));
                    }
                }
            }
            if j > i + 2 {
                for (num, _) in self.at(i + 1, LeafCat::Num) {
                    if num.inherent.iter().find_map(|t| t.number()).unwrap_or(Number::Sg) != number {
                        continue;
                    }
                    for (cn, case, n, g) in &self.cn[&(i + 2, j)] {
                        if *case == Case::from(dc) && *n == number {
                            let t = Tree::DemNP {
                                dem: leaf(d),
                                num: leaf(num),
                                cn: Box::new(cn.clone()),
                            };
                            out.push((t, dc, third(*n, *g)));
                        }
                    }
                }
            }
            if j == i + 2 && number == Number::Sg {
                for (pn, f) in self.at(i + 1, LeafCat::PN) {
                    if *f == FeatureBundle::Noun(NounForm::new(Number::Sg, dc.into())) {
                        let t = Tree::DemPN { dem: leaf(d), pn: leaf(pn) };
                        out.push((t, dc, third(Number::Sg, pn.gender().unwrap_or(Gender::Masc))));
                    }
                }
            }
        }
        for k in i + 1..j.saturating_sub(1) {
            let posts: Vec<_> = self.at(k, LeafCat::PostP).collect();
            if posts.is_empty() {
                continue;
            }
            for (np, dc, _) in &self.np[&(i, k)] {
                if *dc != DirectCase::Obl {
                    continue;
                }
                for (post, _) in &posts {
                    for (cn, case, n, g) in &self.cn[&(k + 1, j)] {
                        if *case != Case::Nom {
                            continue;
                        }
                        let t = Tree::UseNP {
                            np: Box::new(np.clone()),
                            post: leaf(post),
                            cn: Box::new(cn.clone()),
                        };
                        for dc in [DirectCase::Nom, DirectCase::Obl] {
                            out.push((t.clone(), dc, third(*n, *g)));
                        }
                    }
                }
            }
        }
        dedup(&mut out);
        out
    }

    fn auxes(&self, i: usize) -> impl Iterator<Item = (&'d Entry, AuxForm)> + '_ {
        self.at(i, LeafCat::VAux).filter_map(|(e, f)| match *f {
            FeatureBundle::Aux(a) => Some((*e, a)),
            _ => None,
        })
    }

    fn vp_items(&self, i: usize, j: usize) -> Vec<(Tree, AuxTense, Agreement)> {
        let mut out = Vec::new();
        let agr = |a: AuxForm| Agreement {
            person: a.person,
            number: a.number,
            gender: a.gender,
        };
        if j == i + 1 {
            for (aux, a) in self.auxes(i) {
                out.push((Tree::UseVAux { aux: leaf(aux) }, a.tense, agr(a)));
            }
        }
        if j == i + 2 {
            for (aux, a) in self.auxes(i + 1) {
                let wanted = FeatureBundle::Verb(infinitive_for(a.gender, a.number));
                for (v, f) in self.at(i, LeafCat::V) {
                    if *f == wanted {
                        let t = Tree::UseVP {
                            verb: leaf(v),
                            aux: leaf(aux),
                        };
                        out.push((t, a.tense, agr(a)));
                    }
                }
            }
        }
        dedup(&mut out);
        out
    }

    fn s_items(&self, i: usize, j: usize) -> Vec<Tree> {
        let mut out = Vec::new();
        for k in i + 1..j {
            for (np, dc, agr) in &self.np[&(i, k)] {
                for (vp, tense, vagr) in &self.vp[&(k, j)] {
                    if agr != vagr {
                        continue;
                    }
                    let (np, vp) = (Box::new(np.clone()), Box::new(vp.clone()));
                    match (dc, tense) {
                        (DirectCase::Nom, AuxTense::Past) => out.push(Tree::UsePastS(np, vp)),
                        (DirectCase::Obl, AuxTense::Present) => out.push(Tree::UsePresS(np, vp)),
                        _ => {}
                    }
                }
            }
        }
        for k in i + 1..j.saturating_sub(1) {
            for (conj, _) in self.at(k, LeafCat::Conj) {
                for a in &self.s[&(i, k)] {
                    for b in &self.s[&(k + 1, j)] {
                        out.push(Tree::CoordS(Box::new(a.clone()), leaf(conj), Box::new(b.clone())));
                    }
                }
            }
        }
        dedup(&mut out);
        out
    }
}

/// All sentence trees whose linearization is exactly `tokens`. Each token
/// may be roman or Urdu script. Trees come out in [`Tree`]'s `Ord` order.
pub fn parse(tokens: &[&str], dict: &Dictionary) -> ParseResult {
    let mut unanalyzed = Vec::new();
    let mut roman = Vec::with_capacity(tokens.len());
    let mut words = Vec::with_capacity(tokens.len());
    for &tok in tokens {
        let r = to_roman_word(tok, Script::detect(tok)).unwrap_or_default();
        let readings: Vec<Reading> = dict.lookup(&r).collect();
        if readings.is_empty() {
            unanalyzed.push(tok.to_string());
        }
        roman.push(r);
        words.push(readings);
    }
    let n = tokens.len();
    if n == 0 || !unanalyzed.is_empty() {
        return ParseResult {
            trees: Vec::new(),
            unanalyzed,
        };
    }
    let mut chart = Chart {
        words,
        cn: HashMap::new(),
        np: HashMap::new(),
        vp: HashMap::new(),
        s: HashMap::new(),
    };
    for len in 1..=n {
        for i in 0..=n - len {
            let j = i + len;
            let cn = chart.cn_items(i, j);
            chart.cn.insert((i, j), cn);
            let np = chart.np_items(i, j);
            chart.np.insert((i, j), np);
            let vp = chart.vp_items(i, j);
            chart.vp.insert((i, j), vp);
            let s = chart.s_items(i, j);
            chart.s.insert((i, j), s);
        }
    }
    let trees: BTreeSet<Tree> = chart.s.remove(&(0, n)).unwrap_or_default().into_iter().collect();
    let trees = trees
        .into_iter()
        .filter(|t| Lin::new(dict).s(t).is_ok_and(|out| out == roman))
        .collect();
    ParseResult { trees, unanalyzed }
}

/// [`parse`] over whitespace-separated text.
pub fn parse_str(text: &str, dict: &Dictionary) -> ParseResult {
    let tokens: Vec<&str> = text.split_whitespace().collect();
    parse(&tokens, dict)
}
