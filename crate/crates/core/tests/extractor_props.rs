mod support;

use std::collections::HashSet;

use proptest::prelude::*;
use urdu_morph::extractor::{emit_candidates, extract, parse_rules, tokenize, Corpus, SHIPPED_RULES};
use urdu_morph::lexicon::{compile, parse_lexicon};
use urdu_morph::morphology::{inflect, registry, tokens, WordClass};
use urdu_morph::translit::Script;

fn shipped() -> Vec<urdu_morph::extractor::ParadigmRule> {
    parse_rules(SHIPPED_RULES.as_bytes()).unwrap()
}

#[test]
fn shipped_rule_partition() {
    let rules = shipped();
    assert_eq!(rules.len(), 26);
    let class = |r: &urdu_morph::extractor::ParadigmRule| registry().get(&r.name).unwrap().word_class;
    let count = |c: WordClass| rules.iter().filter(|r| class(r) == c).count();
    assert_eq!((count(WordClass::Verb), count(WordClass::N), count(WordClass::Adj)), (6, 19, 1));
}

#[test]
fn matches_the_oracle_on_random_corpora() {
    let rules = shipped();
    let mut rng = support::rng(21);
    for _ in 0..60 {
        let corpus = support::synthetic_corpus(&mut rng, 40, 1000);
        let cands = extract(&rules, &corpus);
        let want = support::oracle_extract(&rules, &corpus);
        let got: Vec<(String, Vec<bool>)> = cands.iter().map(|c| (c.line(), c.attested.clone())).collect();
        assert_eq!(got, want);
        assert_eq!(emit_candidates(&cands), support::oracle_emit(&rules, &corpus));
    }
}

#[test]
fn candidates_are_sound_and_share_stems() {
    let rules = shipped();
    let mut rng = support::rng(22);
    for _ in 0..20 {
        let corpus = support::synthetic_corpus(&mut rng, 40, 800);
        for c in extract(&rules, &corpus) {
            let rule = &rules[c.rule];
            assert!(rule.constraint.eval(&mut |lit| corpus.contains(&format!("{}{lit}", c.stem))));
            let stem = tokens(&c.stem).unwrap();
            for f in &c.forms {
                assert!(tokens(f).unwrap().starts_with(&stem), "{f} / {}", c.stem);
            }
        }
    }
}

#[test]
fn pipeline_closure() {
    let rules = shipped();
    let mut rng = support::rng(23);
    for _ in 0..20 {
        let corpus = support::synthetic_corpus(&mut rng, 40, 800);
        let cands = extract(&rules, &corpus);
        let src = parse_lexicon(&emit_candidates(&cands)).unwrap();
        assert_eq!(src.lines.len(), cands.len());
        let mut members = urdu_morph::lexicon::LexiconSource::default();
        for (line, c) in src.lines.iter().zip(&cands) {
            assert_eq!(line.paradigm, c.paradigm);
            assert_eq!(line.form_strs(), c.forms.iter().map(String::as_str).collect::<Vec<_>>());
            let forms: Vec<&str> = c.forms.iter().map(String::as_str).collect();
            if inflect(&c.paradigm, &forms).is_ok() {
                members.lines.push(line.clone());
            }
        }
        compile(&members).unwrap();
    }
}

fn words_corpus(words: &[String]) -> Corpus {
    Corpus::from_tokens(words.to_vec())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn adding_words_keeps_candidates(seed in 0u64..u64::MAX) {
        let rules = shipped();
        let mut rng = support::rng(seed);
        let base = support::synthetic_corpus(&mut rng, 20, 300);
        let extra = support::synthetic_corpus(&mut rng, 20, 300);
        let mut all: Vec<String> = base.tokens.clone();
        all.extend(extra.tokens.iter().cloned());
        let before: HashSet<String> = extract(&rules, &base).iter().map(|c| c.line()).collect();
        let after: HashSet<String> = extract(&rules, &words_corpus(&all)).iter().map(|c| c.line()).collect();
        prop_assert!(before.is_subset(&after));
    }

    #[test]
    fn scripts_tokenize_alike(seed in 0u64..u64::MAX) {
        let corpus = support::synthetic_corpus(&mut support::rng(seed), 10, 50);
        let roman = corpus.tokens.join(" ");
        let urdu = urdu_morph::translit::shipped().to_urdu(&roman).unwrap();
        prop_assert_eq!(tokenize(&urdu, Script::Urdu).unwrap(), tokenize(&roman, Script::Roman).unwrap());
    }
}
