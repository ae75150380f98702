//! Abstract syntax trees and their bracketed text form.
//!
//! ```text
//! UsePresS (UseNP (UsePron m(a)yN_40 Pers3_Near Sg Masc) kw_1 (UseN ktab_57 Pl)) (UseVP lyna_61 hwna_0)
//! ```
//!
//! The top level has no outer parentheses, leaves are written `lemma_id`
//! and a node's parameters follow its leaf.

use std::fmt;
use std::str::FromStr;

use crate::morphology::{Gender, Number, PronPerson};

use super::SyntaxError;

/// A reference to a dictionary entry.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Leaf {
    pub lemma: String,
    pub id: u32,
}

impl Leaf {
    pub fn new(lemma: impl Into<String>, id: u32) -> Self {
        Leaf {
            lemma: lemma.into(),
            id,
        }
    }
}

impl fmt::Display for Leaf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}_{}", self.lemma, self.id)
    }
}

impl FromStr for Leaf {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (lemma, id) = s.rsplit_once('_').ok_or_else(|| format!("leaf {s:?} has no _id suffix"))?;
        let id = id.parse().map_err(|_| format!("leaf {s:?} has a non-numeric id"))?;
        if lemma.is_empty() {
            return Err(format!("leaf {s:?} has an empty lemma"));
        }
        Ok(Leaf::new(lemma, id))
    }
}

/// Grammatical categories of tree nodes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Cat {
    S,
    NP,
    CN,
    VP,
}

impl fmt::Display for Cat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Cat::S => "S",
            Cat::NP => "NP",
            Cat::CN => "CN",
            Cat::VP => "VP",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Tree {
    /// `NP -> VP -> S`, past auxiliary, nominative subject.
    UsePastS(Box<Tree>, Box<Tree>),
    /// `NP -> VP -> S`, present auxiliary, oblique subject.
    UsePresS(Box<Tree>, Box<Tree>),
    /// `S -> Conj -> S -> S`.
    CoordS(Box<Tree>, Leaf, Box<Tree>),
    /// `Pron -> NP`; a pronoun's person, number and gender are chosen here.
    UsePron {
        pron: Leaf,
        person: PronPerson,
        number: Number,
        gender: Gender,
    },
    /// `Pron -> CN -> CN`, a possessive pronoun agreeing with the noun.
    PossCN {
        pron: Leaf,
        person: PronPerson,
        number: Number,
        cn: Box<Tree>,
    },
    /// `DemPron -> CN -> NP`.
    DemCN { dem: Leaf, cn: Box<Tree> },
    /// `DemPron -> Num -> CN -> NP`.
    DemNP { dem: Leaf, num: Leaf, cn: Box<Tree> },
    /// `DemPron -> PN -> NP`.
    DemPN { dem: Leaf, pn: Leaf },
    /// `NP -> PostP -> CN -> NP`.
    UseNP { np: Box<Tree>, post: Leaf, cn: Box<Tree> },
    /// `N -> CN` at a number.
    UseN { noun: Leaf, number: Number },
    /// `Verb_Aux -> VP`.
    UseVAux { aux: Leaf },
    /// `Verb -> Verb_Aux -> VP`.
    UseVP { verb: Leaf, aux: Leaf },
}

impl Tree {
    pub fn cat(&self) -> Cat {
        match self {
            Tree::UsePastS(..) | Tree::UsePresS(..) | Tree::CoordS(..) => Cat::S,
            Tree::UsePron { .. } | Tree::DemCN { .. } | Tree::DemNP { .. } | Tree::DemPN { .. } | Tree::UseNP { .. } => {
                Cat::NP
            }
            Tree::PossCN { .. } | Tree::UseN { .. } => Cat::CN,
            Tree::UseVAux { .. } | Tree::UseVP { .. } => Cat::VP,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Tree::UsePastS(..) => "UsePastS",
            Tree::UsePresS(..) => "UsePresS",
            Tree::CoordS(..) => "CoordS",
            Tree::UsePron { .. } => "UsePron",
            Tree::PossCN { .. } => "PossCN",
            Tree::DemCN { .. } => "DemCN",
            Tree::DemNP { .. } => "DemNP",
            Tree::DemPN { .. } => "DemPN",
            Tree::UseNP { .. } => "UseNP",
            Tree::UseN { .. } => "UseN",
            Tree::UseVAux { .. } => "UseVAux",
            Tree::UseVP { .. } => "UseVP",
        }
    }

    /// Constructor names with their leaves only, e.g.
    /// `UsePresS(UseNP(UsePron(m(a)yN), kw, UseN(ktab)), UseVP(lyna, hwna))`.
    pub fn shape(&self) -> String {
        let sub = |t: &Tree| t.shape();
        let args: Vec<String> = match self {
            Tree::UsePastS(a, b) | Tree::UsePresS(a, b) => vec![sub(a), sub(b)],
            Tree::CoordS(a, c, b) => vec![sub(a), c.lemma.clone(), sub(b)],
            Tree::UsePron { pron, .. } => vec![pron.lemma.clone()],
            Tree::PossCN { pron, cn, .. } => vec![pron.lemma.clone(), sub(cn)],
            Tree::DemCN { dem, cn } => vec![dem.lemma.clone(), sub(cn)],
            Tree::DemNP { dem, num, cn } => vec![dem.lemma.clone(), num.lemma.clone(), sub(cn)],
            Tree::DemPN { dem, pn } => vec![dem.lemma.clone(), pn.lemma.clone()],
            Tree::UseNP { np, post, cn } => vec![sub(np), post.lemma.clone(), sub(cn)],
            Tree::UseN { noun, .. } => vec![noun.lemma.clone()],
            Tree::UseVAux { aux } => vec![aux.lemma.clone()],
            Tree::UseVP { verb, aux } => vec![verb.lemma.clone(), aux.lemma.clone()],
        };
        format!("{}({})", self.name(), args.join(", "))
    }

    /// All leaves, left to right.
    pub fn leaves(&self) -> Vec<&Leaf> {
        match self {
            Tree::UsePastS(a, b) | Tree::UsePresS(a, b) => [a.leaves(), b.leaves()].concat(),
            Tree::CoordS(a, c, b) => [a.leaves(), vec![c], b.leaves()].concat(),
            Tree::UsePron { pron, .. } => vec![pron],
            Tree::PossCN { pron, cn, .. } => [vec![pron], cn.leaves()].concat(),
            Tree::DemCN { dem, cn } => [vec![dem], cn.leaves()].concat(),
            Tree::DemNP { dem, num, cn } => [vec![dem, num], cn.leaves()].concat(),
            Tree::DemPN { dem, pn } => vec![dem, pn],
            Tree::UseNP { np, post, cn } => [np.leaves(), vec![post], cn.leaves()].concat(),
            Tree::UseN { noun, .. } => vec![noun],
            Tree::UseVAux { aux } => vec![aux],
            Tree::UseVP { verb, aux } => vec![verb, aux],
        }
    }

    fn write(&self, f: &mut fmt::Formatter<'_>, nested: bool) -> fmt::Result {
        if nested {
            f.write_str("(")?;
        }
        f.write_str(self.name())?;
        let sub = |t: &Tree, f: &mut fmt::Formatter<'_>| {
            f.write_str(" ")?;
            t.write(f, true)
        };
        match self {
            Tree::UsePastS(a, b) | Tree::UsePresS(a, b) => {
                sub(a, f)?;
                sub(b, f)?;
            }
            Tree::CoordS(a, c, b) => {
                sub(a, f)?;
                write!(f, " {c}")?;
                sub(b, f)?;
            }
            Tree::UsePron {
                pron,
                person,
                number,
                gender,
            } => write!(f, " {pron} {person} {number} {gender}")?,
            Tree::PossCN {
                pron,
                person,
                number,
                cn,
            } => {
                write!(f, " {pron} {person} {number}")?;
                sub(cn, f)?;
            }
            Tree::DemCN { dem, cn } => {
                write!(f, " {dem}")?;
                sub(cn, f)?;
            }
            Tree::DemNP { dem, num, cn } => {
                write!(f, " {dem} {num}")?;
                sub(cn, f)?;
            }
            Tree::DemPN { dem, pn } => write!(f, " {dem} {pn}")?,
            Tree::UseNP { np, post, cn } => {
                sub(np, f)?;
                write!(f, " {post}")?;
                sub(cn, f)?;
            }
            Tree::UseN { noun, number } => write!(f, " {noun} {number}")?,
            Tree::UseVAux { aux } => write!(f, " {aux}")?,
            Tree::UseVP { verb, aux } => write!(f, " {verb} {aux}")?,
        }
        if nested {
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl fmt::Display for Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write(f, false)
    }
}

struct Reader<'a> {
    src: &'a str,
    pos: usize,
}

impl Reader<'_> {
    fn err(&self, message: impl Into<String>) -> SyntaxError {
        SyntaxError::TreeText {
            offset: self.src[..self.pos].chars().count(),
            message: message.into(),
        }
    }

    fn skip_ws(&mut self) {
        let rest = &self.src[self.pos..];
        self.pos += rest.len() - rest.trim_start().len();
    }

    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn eat(&mut self, c: char) -> Result<(), SyntaxError> {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            Ok(())
        } else {
            Err(self.err(format!("expected '{c}'")))
        }
    }

    /// A whitespace-delimited word. Parentheses inside the word must
    /// balance, so `m(a)yN_40` is one word and the `)` closing a subtree is
    /// not swallowed.
    fn word(&mut self) -> Result<&str, SyntaxError> {
        self.skip_ws();
        let start = self.pos;
        let mut depth = 0usize;
        for (i, c) in self.src[start..].char_indices() {
            match c {
                c if c.is_whitespace() => break,
                '(' => depth += 1,
                ')' if depth == 0 => break,
                ')' => depth -= 1,
                _ => {}
            }
            self.pos = start + i + c.len_utf8();
        }
        if self.pos == start {
            return Err(self.err("expected a word"));
        }
        Ok(&self.src[start..self.pos])
    }

    fn leaf(&mut self) -> Result<Leaf, SyntaxError> {
        let w = self.word()?.to_string();
        w.parse().map_err(|m: String| self.err(m))
    }

    fn param<T: FromStr<Err = String>>(&mut self) -> Result<T, SyntaxError> {
        let w = self.word()?.to_string();
        w.parse().map_err(|m: String| self.err(m))
    }

    fn subtree(&mut self) -> Result<Box<Tree>, SyntaxError> {
        self.eat('(')?;
        let t = self.tree()?;
        self.eat(')')?;
        Ok(Box::new(t))
    }

    fn tree(&mut self) -> Result<Tree, SyntaxError> {
        let name = self.word()?.to_string();
        Ok(match name.as_str() {
            "UsePastS" => Tree::UsePastS(self.subtree()?, self.subtree()?),
            "UsePresS" => Tree::UsePresS(self.subtree()?, self.subtree()?),
            "CoordS" => Tree::CoordS(self.subtree()?, self.leaf()?, self.subtree()?),
            "UsePron" => Tree::UsePron {
                pron: self.leaf()?,
                person: self.param()?,
                number: self.param()?,
                gender: self.param()?,
            },
            "PossCN" => Tree::PossCN {
                pron: self.leaf()?,
                person: self.param()?,
                number: self.param()?,
                cn: self.subtree()?,
            },
            "DemCN" => Tree::DemCN {
                dem: self.leaf()?,
                cn: self.subtree()?,
            },
            "DemNP" => Tree::DemNP {
                dem: self.leaf()?,
                num: self.leaf()?,
                cn: self.subtree()?,
            },
            "DemPN" => Tree::DemPN {
                dem: self.leaf()?,
                pn: self.leaf()?,
            },
            "UseNP" => Tree::UseNP {
                np: self.subtree()?,
                post: self.leaf()?,
                cn: self.subtree()?,
            },
            "UseN" => Tree::UseN {
                noun: self.leaf()?,
                number: self.param()?,
            },
            "UseVAux" => Tree::UseVAux { aux: self.leaf()? },
            "UseVP" => Tree::UseVP {
                verb: self.leaf()?,
                aux: self.leaf()?,
            },
            other => return Err(self.err(format!("unknown constructor {other:?}"))),
        })
    }
}

impl FromStr for Tree {
    type Err = SyntaxError;

    /// Reads the text form; an outer pair of parentheses is accepted.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut r = Reader { src: s, pos: 0 };
        r.skip_ws();
        let tree = if r.peek() == Some('(') {
            *r.subtree()?
        } else {
            r.tree()?
        };
        r.skip_ws();
        if r.pos != s.len() {
            return Err(r.err("trailing input after tree"));
        }
        Ok(tree)
    }
}
