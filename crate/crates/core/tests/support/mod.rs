//! Seeded generators and brute-force oracles shared by the integration
//! tests and the acceptance suite.
#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet, HashSet};

use rand::seq::SliceRandom;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use urdu_morph::extractor::{Constraint, Corpus, ParadigmRule};
use urdu_morph::lexicon::{compile_str, Dictionary};
use urdu_morph::morphology::{inflect, registry, FeatureBundle, WordClass};
use urdu_morph::translit::{self, SymbolKind};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

const ROMAN_PASS: &[&str] = &[" ", " ", "0", "7", ",", ".", "!", "?", "-"];
const URDU_PASS: &[&str] = &[" ", " ", "3", ",", "!"];

/// A random concatenation of table tokens and pass-through characters.
pub fn roman_string(rng: &mut impl Rng, max_units: usize) -> String {
    let entries = translit::shipped().entries();
    let n = rng.gen_range(0..=max_units);
    let mut s = String::new();
    for _ in 0..n {
        if rng.gen_bool(0.15) {
            s.push_str(ROMAN_PASS.choose(rng).unwrap());
        } else {
            s.push_str(&entries.choose(rng).unwrap().roman);
        }
    }
    s
}

/// A random concatenation of covered Urdu symbols and pass-through
/// characters.
pub fn urdu_string(rng: &mut impl Rng, max_units: usize) -> String {
    let entries = translit::shipped().entries();
    let n = rng.gen_range(0..=max_units);
    let mut s = String::new();
    for _ in 0..n {
        if rng.gen_bool(0.15) {
            s.push_str(URDU_PASS.choose(rng).unwrap());
        } else {
            s.push_str(&entries.choose(rng).unwrap().urdu);
        }
    }
    s
}

/// Roman letters, the raw material of random stems.
pub fn letters() -> Vec<&'static str> {
    translit::shipped()
        .entries()
        .iter()
        .filter(|e| e.kind == SymbolKind::Letter)
        .map(|e| e.roman.as_str())
        .collect()
}

const CONSONANTS: &[&str] = &["b", "p", "t", "T", "j", "c", "d", "D", "r", "z", "s", "X", "f", "q", "k", "g", "l", "m", "n"];
const VOWELS: &[&str] = &["", "", "(a)", "(i)", "(u)", "a", "w", "y"];
const ENDINGS: &[&str] = &["", "a", "y", "w", "h", "t", "ya", "e", "at"];

fn stem(rng: &mut impl Rng) -> String {
    let mut s = String::new();
    for _ in 0..rng.gen_range(1..=3) {
        s.push_str(CONSONANTS.choose(rng).unwrap());
        s.push_str(VOWELS.choose(rng).unwrap());
    }
    s.push_str(CONSONANTS.choose(rng).unwrap());
    s
}

/// A random valid source line `PARADIGM FORM...`.
pub fn source_line(rng: &mut impl Rng) -> String {
    let ids: Vec<&str> = registry().iter().map(|p| p.id).collect();
    loop {
        let id = *ids.choose(rng).unwrap();
        let p = registry().get(id).unwrap();
        let s = stem(rng);
        let forms: Vec<String> = if p.word_class == WordClass::Verb {
            ["na", "ana", "wana"][..p.arity].iter().map(|e| format!("{s}{e}")).collect()
        } else {
            (0..p.arity)
                .map(|_| format!("{s}{}", ENDINGS.choose(rng).unwrap()))
                .collect()
        };
        let refs: Vec<&str> = forms.iter().map(String::as_str).collect();
        if inflect(id, &refs).is_ok() {
            return format!("{id} {}", forms.join(" "));
        }
    }
}

/// Lexicon source text of `n` random entries.
pub fn lexicon_source(rng: &mut impl Rng, n: usize) -> String {
    (0..n).map(|_| source_line(rng) + "\n").collect()
}

pub fn random_dictionary(rng: &mut impl Rng, n: usize) -> Dictionary {
    compile_str(&lexicon_source(rng, n)).expect("generated lines compile")
}

/// Every (lemma id, cell) pair each surface should analyze to, read
/// straight off the entry tables.
pub fn expected_analyses(dict: &Dictionary) -> BTreeMap<String, BTreeSet<(u32, FeatureBundle)>> {
    let mut out: BTreeMap<String, BTreeSet<(u32, FeatureBundle)>> = BTreeMap::new();
    for e in dict.entries() {
        for (bundle, cell) in e.word_class.forms().iter().zip(&e.table) {
            if let Some(s) = cell.form() {
                out.entry(s.to_string()).or_default().insert((e.lemma_id, *bundle));
            }
        }
    }
    out
}

/// A synthetic corpus: a random sample of the forms of `entries` random
/// entries plus noise words, at most `max_tokens` tokens.
pub fn synthetic_corpus(rng: &mut impl Rng, entries: usize, max_tokens: usize) -> Corpus {
    let dict = random_dictionary(rng, entries);
    let mut pool: Vec<String> = Vec::new();
    for e in &dict.entries()[dict.closed_count()..] {
        for (_, s) in e.present() {
            if rng.gen_bool(0.5) {
                pool.push(s.to_string());
            }
        }
    }
    for _ in 0..entries {
        pool.push(format!("{}{}", stem(rng), ENDINGS.choose(rng).unwrap()));
    }
    let n = rng.gen_range(1..=max_tokens);
    let tokens = (0..n).map(|_| pool.choose(rng).unwrap().clone()).collect();
    Corpus::from_tokens(tokens)
}

fn units(word: &str) -> Option<Vec<String>> {
    let table = translit::shipped();
    let segs = table.scan_roman(word).ok()?;
    segs.into_iter()
        .map(|seg| match seg {
            translit::Segment::Token(i) => Some(table.entry(i).roman.clone()),
            translit::Segment::Pass(c) if c.is_ascii_digit() => Some(c.to_string()),
            translit::Segment::Pass(_) => None,
        })
        .collect()
}

fn holds(c: &Constraint, stem: &str, words: &HashSet<&str>) -> bool {
    match c {
        Constraint::Atom(lit) => words.contains(format!("{stem}{lit}").as_str()),
        Constraint::And(cs) => cs.iter().all(|c| holds(c, stem, words)),
        Constraint::Or(cs) => cs.iter().any(|c| holds(c, stem, words)),
    }
}

/// Brute-force extraction: every (rule, word, byte split) triple is tried
/// directly. Returns the emitted candidate lines and their attestation
/// flags in output order.
pub fn oracle_extract(rules: &[ParadigmRule], corpus: &Corpus) -> Vec<(String, Vec<bool>)> {
    let words: HashSet<&str> = corpus.words().collect();
    let mut sorted: Vec<(&str, Vec<String>)> = words
        .iter()
        .filter_map(|w| units(w).map(|u| (*w, u)))
        .collect();
    sorted.sort();
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for rule in rules {
        let mut found: Vec<String> = Vec::new();
        for (word, wu) in &sorted {
            for split in 1..=word.len() {
                if !word.is_char_boundary(split) {
                    continue;
                }
                let (stem, rest) = word.split_at(split);
                if rest != rule.patterns[0] {
                    continue;
                }
                let (Some(su), Some(ru)) = (units(stem), units(rest)) else { continue };
                if [su, ru].concat() != *wu {
                    continue;
                }
                if holds(&rule.constraint, stem, &words) {
                    found.push(stem.to_string());
                }
            }
        }
        found.sort();
        for stem in found {
            let forms: Vec<String> = rule.patterns.iter().map(|p| format!("{stem}{p}")).collect();
            let line = format!("{} {}", rule.name, forms.join(" "));
            if seen.insert(line.clone()) {
                let attested = forms.iter().map(|f| words.contains(f.as_str())).collect();
                out.push((line, attested));
            }
        }
    }
    out
}

/// Oracle output rendered like `emit_candidates`.
pub fn oracle_emit(rules: &[ParadigmRule], corpus: &Corpus) -> Vec<u8> {
    oracle_extract(rules, corpus)
        .into_iter()
        .map(|(line, _)| line + "\n")
        .collect::<String>()
        .into_bytes()
}
