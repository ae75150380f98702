//! The paradigm-rule language.
//!
//! ```text
//! paradigm v4 = x + "na" x + "ana" x + "wana"
//!              { x + "na" & (x + "ana" | x + "wana") } ;
//! ```
//!
//! Patterns are suffixes over a single stem variable. The constraint is a
//! boolean formula over attestation atoms; `&` binds tighter than `|`.

use std::fmt;

use thiserror::Error;

use crate::morphology::registry;

use super::word_units;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RuleError {
    #[error("{line}:{col}: {message}")]
    Syntax { line: usize, col: usize, message: String },
    #[error("{line}:{col}: unknown paradigm {name:?}")]
    UnknownParadigm { line: usize, col: usize, name: String },
    #[error("{line}:{col}: variable {found:?} does not match the rule variable {expected:?}")]
    Variable {
        line: usize,
        col: usize,
        expected: String,
        found: String,
    },
    #[error("{line}:{col}: paradigm {name} takes {expected} form(s) but the rule lists {found}")]
    Arity {
        line: usize,
        col: usize,
        name: String,
        expected: usize,
        found: usize,
    },
}

/// A boolean formula over pattern attestations. Atoms hold the literal
/// suffix of `x + "literal"`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Constraint {
    Atom(String),
    And(Vec<Constraint>),
    Or(Vec<Constraint>),
}

impl Constraint {
    pub fn eval(&self, attested: &mut impl FnMut(&str) -> bool) -> bool {
        match self {
            Constraint::Atom(lit) => attested(lit),
            Constraint::And(cs) => cs.iter().all(|c| c.eval(attested)),
            Constraint::Or(cs) => cs.iter().any(|c| c.eval(attested)),
        }
    }

    /// Every literal mentioned by the formula.
    pub fn atoms(&self) -> Vec<&str> {
        match self {
            Constraint::Atom(l) => vec![l.as_str()],
            Constraint::And(cs) | Constraint::Or(cs) => cs.iter().flat_map(|c| c.atoms()).collect(),
        }
    }

    fn write(&self, var: &str, f: &mut fmt::Formatter<'_>, nested: bool) -> fmt::Result {
        match self {
            Constraint::Atom(l) => write!(f, "{var} + \"{l}\""),
            Constraint::And(cs) => join(cs, " & ", var, f, true),
            Constraint::Or(cs) => {
                if nested {
                    f.write_str("(")?;
                }
                join(cs, " | ", var, f, false)?;
                if nested {
                    f.write_str(")")?;
                }
                Ok(())
            }
        }
    }
}

fn join(cs: &[Constraint], sep: &str, var: &str, f: &mut fmt::Formatter<'_>, nested: bool) -> fmt::Result {
    for (i, c) in cs.iter().enumerate() {
        if i > 0 {
            f.write_str(sep)?;
        }
        c.write(var, f, nested)?;
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParadigmRule {
    pub name: String,
    pub var: String,
    /// Output suffixes, in order; the first one selects the words to try.
    pub patterns: Vec<String>,
    pub constraint: Constraint,
}

impl fmt::Display for ParadigmRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "paradigm {} =", self.name)?;
        for p in &self.patterns {
            write!(f, " {} + \"{p}\"", self.var)?;
        }
        f.write_str(" { ")?;
        self.constraint.write(&self.var, f, false)?;
        f.write_str(" } ;")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Str(String),
    Sym(char),
    Eof,
}

struct Lexer<'a> {
    chars: std::iter::Peekable<std::str::Chars<'a>>,
    line: usize,
    col: usize,
}

impl Lexer<'_> {
    fn bump(&mut self) -> Option<char> {
        let c = self.chars.next()?;
        if c == '\n' {
            self.line += 1;
            self.col = 1;
        } else {
            self.col += 1;
        }
        Some(c)
    }

    fn err(line: usize, col: usize, message: impl Into<String>) -> RuleError {
        RuleError::Syntax {
            line,
            col,
            message: message.into(),
        }
    }

    /// Next token with its starting position.
    fn next(&mut self) -> Result<(Tok, usize, usize), RuleError> {
        loop {
            match self.chars.peek() {
                Some(c) if c.is_whitespace() => {
                    self.bump();
                }
                Some('#') => {
                    while self.chars.peek().is_some_and(|c| *c != '\n') {
                        self.bump();
                    }
                }
                _ => break,
            }
        }
        let (line, col) = (self.line, self.col);
        let Some(c) = self.bump() else {
            return Ok((Tok::Eof, line, col));
        };
        let tok = match c {
            '=' | '+' | '{' | '}' | ';' | '&' | '|' | '(' | ')' => Tok::Sym(c),
            '"' => {
                let mut s = String::new();
                loop {
                    match self.bump() {
                        Some('"') => break,
                        Some('\n') | None => return Err(Self::err(line, col, "unterminated string literal")),
                        Some(ch) => s.push(ch),
                    }
                }
                Tok::Str(s)
            }
            c if c.is_ascii_alphanumeric() || c == '_' => {
                let mut s = c.to_string();
                while let Some(&n) = self.chars.peek() {
                    if n.is_ascii_alphanumeric() || n == '_' {
                        s.push(n);
                        self.bump();
                    } else {
                        break;
                    }
                }
                Tok::Ident(s)
            }
            other => return Err(Self::err(line, col, format!("unexpected character {other:?}"))),
        };
        Ok((tok, line, col))
    }
}

struct Parser<'a> {
    lexer: Lexer<'a>,
    tok: Tok,
    line: usize,
    col: usize,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Result<Self, RuleError> {
        let mut lexer = Lexer {
            chars: src.chars().peekable(),
            line: 1,
            col: 1,
        };
        let (tok, line, col) = lexer.next()?;
        Ok(Parser { lexer, tok, line, col })
    }

    fn advance(&mut self) -> Result<Tok, RuleError> {
        let (tok, line, col) = self.lexer.next()?;
        self.line = line;
        self.col = col;
        Ok(std::mem::replace(&mut self.tok, tok))
    }

    fn error(&self, message: impl Into<String>) -> RuleError {
        Lexer::err(self.line, self.col, message)
    }

    fn describe(&self) -> String {
        match &self.tok {
            Tok::Ident(s) => format!("{s:?}"),
            Tok::Str(s) => format!("string \"{s}\""),
            Tok::Sym(c) => format!("'{c}'"),
            Tok::Eof => "end of input".into(),
        }
    }

    fn expect_sym(&mut self, c: char) -> Result<(), RuleError> {
        if self.tok == Tok::Sym(c) {
            self.advance()?;
            Ok(())
        } else {
            Err(self.error(format!("expected '{c}', found {}", self.describe())))
        }
    }

    fn ident(&mut self, what: &str) -> Result<(String, usize, usize), RuleError> {
        let (line, col) = (self.line, self.col);
        match &self.tok {
            Tok::Ident(_) => {
                let Tok::Ident(s) = self.advance()? else { unreachable!() };
                Ok((s, line, col))
            }
            _ => Err(self.error(format!("expected {what}, found {}", self.describe()))),
        }
    }

    /// `VAR + "LITERAL"`, checking the variable against `var` once set.
    fn pattern(&mut self, var: &mut Option<String>) -> Result<String, RuleError> {
        let (name, line, col) = self.ident("pattern variable")?;
        match var {
            None => *var = Some(name),
            Some(v) if *v == name => {}
            Some(v) => {
                return Err(RuleError::Variable {
                    line,
                    col,
                    expected: v.clone(),
                    found: name,
                })
            }
        }
        self.expect_sym('+')?;
        let (line, col) = (self.line, self.col);
        match self.advance()? {
            Tok::Str(s) => {
                if !s.is_empty() && word_units(&s).is_none() {
                    return Err(Lexer::err(line, col, format!("literal \"{s}\" is not valid roman text")));
                }
                Ok(s)
            }
            _ => Err(Lexer::err(line, col, "expected a string literal after '+'")),
        }
    }

    fn or_expr(&mut self, var: &mut Option<String>) -> Result<Constraint, RuleError> {
        let mut terms = vec![self.and_expr(var)?];
        while self.tok == Tok::Sym('|') {
            self.advance()?;
            terms.push(self.and_expr(var)?);
        }
        Ok(if terms.len() == 1 { terms.pop().unwrap() } else { Constraint::Or(terms) })
    }

    fn and_expr(&mut self, var: &mut Option<String>) -> Result<Constraint, RuleError> {
        let mut factors = vec![self.factor(var)?];
        while self.tok == Tok::Sym('&') {
            self.advance()?;
            factors.push(self.factor(var)?);
        }
        Ok(if factors.len() == 1 {
            factors.pop().unwrap()
        } else {
            Constraint::And(factors)
        })
    }

    fn factor(&mut self, var: &mut Option<String>) -> Result<Constraint, RuleError> {
        if self.tok == Tok::Sym('(') {
            self.advance()?;
            let inner = self.or_expr(var)?;
            self.expect_sym(')')?;
            Ok(inner)
        } else {
            Ok(Constraint::Atom(self.pattern(var)?))
        }
    }

    fn rule(&mut self) -> Result<ParadigmRule, RuleError> {
        let (kw, line, col) = self.ident("'paradigm'")?;
        if kw != "paradigm" {
            return Err(Lexer::err(line, col, format!("expected 'paradigm', found {kw:?}")));
        }
        let (name, name_line, name_col) = self.ident("paradigm name")?;
        self.expect_sym('=')?;
        let mut var = None;
        let mut patterns = Vec::new();
        while matches!(self.tok, Tok::Ident(_)) {
            patterns.push(self.pattern(&mut var)?);
        }
        if patterns.is_empty() {
            return Err(self.error(format!("expected at least one pattern, found {}", self.describe())));
        }
        self.expect_sym('{')?;
        let constraint = self.or_expr(&mut var)?;
        self.expect_sym('}')?;
        self.expect_sym(';')?;
        let paradigm = registry().get(&name).ok_or_else(|| RuleError::UnknownParadigm {
            line: name_line,
            col: name_col,
            name: name.clone(),
        })?;
        if patterns.len() != paradigm.arity {
            return Err(RuleError::Arity {
                line: name_line,
                col: name_col,
                name,
                expected: paradigm.arity,
                found: patterns.len(),
            });
        }
        Ok(ParadigmRule {
            name,
            var: var.expect("at least one pattern"),
            patterns,
            constraint,
        })
    }
}

/// Parses a rule file.
pub fn parse_rules(source: &[u8]) -> Result<Vec<ParadigmRule>, RuleError> {
    let text = std::str::from_utf8(source).map_err(|e| Lexer::err(1, 1, format!("not UTF-8: {e}")))?;
    let mut p = Parser::new(text)?;
    let mut rules = Vec::new();
    while p.tok != Tok::Eof {
        rules.push(p.rule()?);
    }
    Ok(rules)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::morphology::WordClass;

    const V4: &str = "paradigm v4 = x + \"na\" x + \"ana\" x + \"wana\"\n             { x + \"na\" & (x + \"ana\" | x + \"wana\") };";

    #[test]
    fn parses_the_v4_rule() {
        let rules = parse_rules(V4.as_bytes()).unwrap();
        assert_eq!(rules.len(), 1);
        let r = &rules[0];
        assert_eq!(r.patterns, ["na", "ana", "wana"]);
        assert_eq!(
            r.constraint,
            Constraint::And(vec![
                Constraint::Atom("na".into()),
                Constraint::Or(vec![Constraint::Atom("ana".into()), Constraint::Atom("wana".into())]),
            ])
        );
        assert_eq!(parse_rules(r.to_string().as_bytes()).unwrap()[0], *r);
    }

    #[test]
    fn precedence_and_grouping() {
        let r = &parse_rules(b"paradigm n6 = x + \"\" { x + \"a\" | x + \"b\" & x + \"c\" } ;").unwrap()[0];
        let mut set = |s: &str| s == "a";
        assert!(r.constraint.eval(&mut set));
        let mut set = |s: &str| s == "b";
        assert!(!r.constraint.eval(&mut set));
        assert_eq!(r.patterns, [""]);
    }

    #[test]
    fn errors() {
        let e = parse_rules(b"paradigm q = x + \"a\" { x + \"a\" } ;").unwrap_err();
        assert!(matches!(e, RuleError::UnknownParadigm { line: 1, col: 10, .. }), "{e}");
        let e = parse_rules(b"paradigm q = ;").unwrap_err();
        assert!(matches!(e, RuleError::Syntax { col: 14, .. }), "{e}");
        let e = parse_rules(b"paradigm n6 = ;").unwrap_err();
        assert_eq!(
            e,
            RuleError::Syntax {
                line: 1,
                col: 15,
                message: "expected at least one pattern, found ';'".into()
            }
        );
        let e = parse_rules(b"paradigm n6 = x + \"\" { y + \"yN\" } ;").unwrap_err();
        assert!(matches!(e, RuleError::Variable { .. }), "{e}");
        let e = parse_rules(b"paradigm v4 = x + \"na\" { x + \"na\" } ;").unwrap_err();
        assert!(matches!(e, RuleError::Arity { expected: 3, .. }), "{e}");
        let e = parse_rules(b"# c\nparadigm n6 = x + \"\"\n { x + \"yN\" & } ;").unwrap_err();
        assert!(matches!(e, RuleError::Syntax { line: 3, col: 15, .. }), "{e}");
        assert!(parse_rules(b"paradigm n6 = x + \"@\" { x + \"\" } ;").is_err());
        assert!(parse_rules(b"paradigm n6 = x + \"ab { x } ;").is_err());
    }

    #[test]
    fn shipped_rule_file() {
        let rules = parse_rules(super::super::SHIPPED_RULES.as_bytes()).unwrap();
        assert_eq!(rules.len(), 26);
        let class = |r: &ParadigmRule| registry().get(&r.name).unwrap().word_class;
        let count = |c: WordClass| rules.iter().filter(|r| class(r) == c).count();
        assert_eq!((count(WordClass::Verb), count(WordClass::N), count(WordClass::Adj)), (6, 19, 1));
    }
}
