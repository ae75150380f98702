//! Counts of the shipped sample corpus, frozen from `tools/corpus_stats.py`.

use urdu_morph::extractor::{extract, parse_rules, stats, tokenize, SHIPPED_RULES};
use urdu_morph::translit::Script;

const SAMPLE: &str = include_str!("../data/sample_corpus.txt");

#[test]
fn frozen_counts() {
    let c = tokenize(SAMPLE, Script::Urdu).unwrap();
    let s = stats(&c);
    assert_eq!(s.total_tokens, 10_000);
    assert_eq!(s.unique_words, 442);
    assert_eq!(s.diacritic_tokens, 877);
    assert_eq!(s.diacritic_unique, 137);
    assert_eq!(tokenize(SAMPLE, Script::detect(SAMPLE)).unwrap(), c);
}

#[test]
fn extraction_finds_sample_nouns() {
    let c = tokenize(SAMPLE, Script::Urdu).unwrap();
    let rules = parse_rules(SHIPPED_RULES.as_bytes()).unwrap();
    let lines: Vec<String> = extract(&rules, &c).iter().map(|c| c.line()).collect();
    for want in ["n6 ktab", "n2 qlm"] {
        assert!(lines.iter().any(|l| l == want), "{want} missing from {lines:?}");
    }
}
