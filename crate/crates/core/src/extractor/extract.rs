//! Constraint-based candidate extraction.

use std::collections::{BTreeSet, HashSet};

use crate::morphology::inflect;

use super::rules::ParadigmRule;
use super::{word_units, Corpus};

/// A lexicon entry proposed by a rule.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Candidate {
    pub paradigm: String,
    pub stem: String,
    /// One form per rule pattern, instantiated at `stem`.
    pub forms: Vec<String>,
    /// Whether each form occurs in the corpus.
    pub attested: Vec<bool>,
    /// Position of the producing rule in the rule list.
    pub rule: usize,
}

impl Candidate {
    /// Identity of a candidate: the paradigm and its forms.
    pub fn key(&self) -> (&str, &[String]) {
        (&self.paradigm, &self.forms)
    }

    /// The lexicon source line for this candidate.
    pub fn line(&self) -> String {
        let mut s = self.paradigm.clone();
        for f in &self.forms {
            s.push(' ');
            s.push_str(f);
        }
        s
    }
}

/// Corpus tokens covered by a candidate: the summed frequency of the
/// distinct surface forms of its inflection table, or of its own forms when
/// the paradigm rejects them.
pub fn candidate_frequency(candidate: &Candidate, corpus: &Corpus) -> usize {
    let forms: Vec<&str> = candidate.forms.iter().map(String::as_str).collect();
    let surfaces: BTreeSet<String> = match inflect(&candidate.paradigm, &forms) {
        Ok(entry) => entry.present().map(|(_, s)| s.to_string()).collect(),
        Err(_) => candidate.forms.iter().cloned().collect(),
    };
    surfaces.iter().map(|f| corpus.frequency(f)).sum()
}

/// Stem of `units` under the suffix `lit`, if it is a non-empty token-level
/// prefix.
fn strip(units: &[&str], lit: &[&str]) -> Option<usize> {
    (units.len() > lit.len() && units.ends_with(lit)).then(|| units.len() - lit.len())
}

/// Applies every rule to every corpus word. Candidates come out in rule
/// order, then stem order; a line (paradigm and forms) is kept only the
/// first time it is produced.
pub fn extract(rules: &[ParadigmRule], corpus: &Corpus) -> Vec<Candidate> {
    let words: Vec<(&str, Vec<&'static str>)> = corpus
        .words()
        .filter_map(|w| word_units(w).map(|u| (w, u)))
        .collect();
    let mut seen: HashSet<(String, Vec<String>)> = HashSet::new();
    let mut out = Vec::new();
    for (rule_idx, rule) in rules.iter().enumerate() {
        let first = word_units(&rule.patterns[0]).unwrap_or_default();
        let mut found = Vec::new();
        for (_, units) in &words {
            let Some(cut) = strip(units, &first) else {
                continue;
            };
            let stem = units[..cut].concat();
            let mut attested = |lit: &str| corpus.contains(&format!("{stem}{lit}"));
            if !rule.constraint.eval(&mut attested) {
                continue;
            }
            let forms: Vec<String> = rule.patterns.iter().map(|p| format!("{stem}{p}")).collect();
            let attested = forms.iter().map(|f| corpus.contains(f)).collect();
            found.push(Candidate {
                paradigm: rule.name.clone(),
                stem,
                forms,
                attested,
                rule: rule_idx,
            });
        }
        found.sort_by(|a, b| a.stem.cmp(&b.stem));
        for c in found {
            if seen.insert((c.paradigm.clone(), c.forms.clone())) {
                out.push(c);
            }
        }
    }
    out
}

/// Renders candidates as lexicon source lines.
pub fn emit_candidates(cands: &[Candidate]) -> Vec<u8> {
    let mut out = String::new();
    for c in cands {
        out.push_str(&c.line());
        out.push('\n');
    }
    out.into_bytes()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::extractor::{parse_rules, tokenize, SHIPPED_RULES};
    use crate::translit::Script;

    const V4: &[u8] = b"paradigm v4 = x + \"na\" x + \"ana\" x + \"wana\" { x + \"na\" & (x + \"ana\" | x + \"wana\") };";

    #[test]
    fn v4_candidate() {
        let rules = parse_rules(V4).unwrap();
        let corpus = tokenize("banna banana banwana", Script::Roman).unwrap();
        let cands = extract(&rules, &corpus);
        assert_eq!(cands.len(), 1);
        assert_eq!(cands[0].stem, "ban");
        assert_eq!(cands[0].attested, [true, true, true]);
        assert_eq!(emit_candidates(&cands), b"v4 banna banana banwana\n");
    }

    #[test]
    fn required_atom_must_be_attested() {
        let rules = parse_rules(V4).unwrap();
        let corpus = tokenize("banana", Script::Roman).unwrap();
        assert!(extract(&rules, &corpus).is_empty());
        assert!(emit_candidates(&[]).is_empty());
    }

    #[test]
    fn suffixes_match_whole_tokens() {
        let rules = parse_rules(b"paradigm a1 = x + \"a\" { x + \"a\" } ;").unwrap();
        let corpus = tokenize("k(a) ka a", Script::Roman).unwrap();
        let cands = extract(&rules, &corpus);
        assert_eq!(cands.iter().map(|c| c.stem.as_str()).collect::<Vec<_>>(), ["k"]);
    }

    #[test]
    fn repeated_lines_are_dropped() {
        let rules = parse_rules(
            b"paradigm n6 = x + \"\" { x + \"yN\" } ;\nparadigm n6 = x + \"\" { x + \"wN\" } ;",
        )
        .unwrap();
        let corpus = tokenize("ktab ktabyN ktabwN qlm qlmwN", Script::Roman).unwrap();
        let cands = extract(&rules, &corpus);
        let got: Vec<(usize, &str)> = cands.iter().map(|c| (c.rule, c.stem.as_str())).collect();
        assert_eq!(got, [(0, "ktab"), (1, "qlm")]);

        let rules = parse_rules(b"paradigm n1 = x + \"a\" { x + \"a\" } ;\nparadigm n1 = x + \"h\" { x + \"h\" } ;").unwrap();
        let corpus = tokenize("ka kh", Script::Roman).unwrap();
        let lines: Vec<String> = extract(&rules, &corpus).iter().map(Candidate::line).collect();
        assert_eq!(lines, ["n1 ka", "n1 kh"]);
    }

    #[test]
    fn shipped_rules_find_sample_words() {
        let rules = parse_rules(SHIPPED_RULES.as_bytes()).unwrap();
        let corpus = tokenize("ktab ktabyN ktabwN l(a)R'ka l(a)R'kE l(a)R'kwN", Script::Roman).unwrap();
        let lines: Vec<String> = extract(&rules, &corpus).iter().map(Candidate::line).collect();
        assert!(lines.contains(&"n6 ktab".to_string()), "{lines:?}");
        assert!(lines.contains(&"n1 l(a)R'ka".to_string()), "{lines:?}");
    }
}
