//! The operations behind each subcommand, as text in and text out. The
//! HTTP handlers call the same functions.

use std::fmt::Write as _;
use std::str::FromStr;

use thiserror::Error;
use urdu_morph::extractor::{self, candidate_frequency, parse_rules, Candidate, Corpus, SHIPPED_RULES};
use urdu_morph::lexicon::{self, analyze, compile_str, synthesize, Analysis, Dictionary, SAMPLE_LEXICON};
use urdu_morph::morphology::inflect;
use urdu_morph::syntax::{self, Tree};
use urdu_morph::translit::{self, Script};

#[derive(Debug, Error)]
pub enum CommandError {
    /// Bad invocation: exit status 1.
    #[error("{0}")]
    Usage(String),
    /// Input that the operation rejects: exit status 2.
    #[error("{0}")]
    Data(String),
}

impl CommandError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CommandError::Usage(_) => 1,
            CommandError::Data(_) => 2,
        }
    }
}

pub type Result<T> = std::result::Result<T, CommandError>;

fn data(e: impl std::fmt::Display) -> CommandError {
    CommandError::Data(e.to_string())
}

/// Target of `translit --to`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Target {
    Urdu,
    Roman,
    Phonetic,
}

impl FromStr for Target {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "urdu" => Ok(Target::Urdu),
            "roman" => Ok(Target::Roman),
            "phonetic" => Ok(Target::Phonetic),
            other => Err(format!("unknown target {other:?} (expected urdu, roman or phonetic)")),
        }
    }
}

/// Script given on the command line, or detected from the text.
pub fn script_of(text: &str, given: Option<Script>) -> Script {
    given.unwrap_or_else(|| Script::detect(text))
}

/// Compiles a lexicon source, or the shipped sample when none is given.
pub fn load_dictionary(source: Option<&str>) -> Result<Dictionary> {
    compile_str(source.unwrap_or(SAMPLE_LEXICON)).map_err(data)
}

pub fn translit(text: &str, to: Target) -> Result<String> {
    let t = translit::shipped();
    match to {
        Target::Urdu => t.to_urdu(text),
        Target::Roman => t.to_roman(text),
        Target::Phonetic => translit::romanize(text, t).and_then(|r| t.to_phonetic(&r)),
    }
    .map_err(data)
}

/// The present cells of one entry: `FEATURES<TAB>ROMAN<TAB>URDU` lines.
pub fn inflect_table(paradigm: &str, forms: &[&str]) -> Result<String> {
    let entry = inflect(paradigm, forms).map_err(data)?;
    let t = translit::shipped();
    let mut out = String::new();
    for (features, s) in entry.present() {
        let urdu = t.to_urdu(s).map_err(data)?;
        let _ = writeln!(out, "{features}\t{s}\t{urdu}");
    }
    Ok(out)
}

pub fn compile_summary(dict: &Dictionary) -> String {
    format!(
        "entries\t{}\nclosed\t{}\nforms\t{}\nsurfaces\t{}\n",
        dict.entries().len(),
        dict.closed_count(),
        dict.form_count(),
        dict.surface_count()
    )
}

/// Analyses of one token; an unknown token yields no analyses.
pub fn analyze_token(token: &str, script: Option<Script>, dict: &Dictionary) -> Result<Vec<Analysis>> {
    analyze(token, script_of(token, script), dict).map_err(data)
}

/// One analysis line per reading of each input line's token, or `TOKEN +?`
/// for a token nothing analyzes.
pub fn analyze_lines(input: &str, script: Option<Script>, dict: &Dictionary) -> Result<String> {
    let mut out = String::new();
    for token in input.lines().map(str::trim).filter(|t| !t.is_empty()) {
        let readings = analyze_token(token, script, dict)?;
        if readings.is_empty() {
            let _ = writeln!(out, "{token} +?");
        }
        for a in readings {
            let _ = writeln!(out, "{a}");
        }
    }
    Ok(out)
}

/// Every entry with the given dictionary form: a header line
/// `lemma_id. URDU +CLASS PARADIGM` and one line per present cell.
pub fn synth(lemma: &str, dict: &Dictionary) -> Result<String> {
    let found = synthesize(lemma, dict);
    if found.is_empty() {
        return Err(CommandError::Data(format!("no entry with lemma {lemma:?}")));
    }
    let mut out = String::new();
    for s in found {
        let e = s.entry;
        let paradigm = e.paradigm.as_deref().unwrap_or("closed");
        let _ = writeln!(out, "{}_{}. {} +{} {paradigm}", e.lemma, e.lemma_id, e.lemma.to_urdu(), e.word_class);
        for row in s.rows {
            let _ = writeln!(out, "{}\t{}\t{}", row.features, row.roman, row.urdu);
        }
    }
    Ok(out)
}

pub fn corpus(text: &str, script: Option<Script>) -> Result<Corpus> {
    extractor::tokenize(text, script_of(text, script)).map_err(data)
}

pub fn tokenize(text: &str, script: Option<Script>) -> Result<String> {
    let c = corpus(text, script)?;
    Ok(c.tokens.iter().map(|t| format!("{t}\n")).collect())
}

pub fn stats(text: &str, script: Option<Script>) -> Result<String> {
    let s = extractor::stats(&corpus(text, script)?);
    Ok(format!(
        "tokens\t{}\nunique\t{}\ndiacritic_tokens\t{}\ndiacritic_unique\t{}\n",
        s.total_tokens, s.unique_words, s.diacritic_tokens, s.diacritic_unique
    ))
}

/// A candidate with its corpus frequency.
#[derive(Debug, Clone)]
pub struct Extracted {
    pub candidate: Candidate,
    pub frequency: usize,
}

/// Runs `rules` (the shipped rule file when `None`) over a corpus text.
pub fn extract(rules: Option<&[u8]>, text: &str, script: Option<Script>) -> Result<Vec<Extracted>> {
    let rules = parse_rules(rules.unwrap_or(SHIPPED_RULES.as_bytes())).map_err(data)?;
    let corpus = corpus(text, script)?;
    Ok(extractor::extract(&rules, &corpus)
        .into_iter()
        .map(|candidate| Extracted {
            frequency: candidate_frequency(&candidate, &corpus),
            candidate,
        })
        .collect())
}

pub fn extract_text(rules: Option<&[u8]>, text: &str, script: Option<Script>) -> Result<Vec<u8>> {
    let cands: Vec<Candidate> = extract(rules, text, script)?.into_iter().map(|e| e.candidate).collect();
    Ok(extractor::emit_candidates(&cands))
}

pub fn export(dict: &Dictionary, format: &str) -> Result<Vec<u8>> {
    let format: lexicon::ExportFormat = format.parse().map_err(CommandError::Usage)?;
    Ok(lexicon::export(dict, format))
}

/// Trees of one sentence.
pub fn parse_sentence(sentence: &str, dict: &Dictionary) -> Result<Vec<Tree>> {
    let r = syntax::parse_str(sentence, dict);
    if !r.unanalyzed.is_empty() {
        return Err(CommandError::Data(format!("no analysis for: {}", r.unanalyzed.join(" "))));
    }
    if r.trees.is_empty() {
        return Err(CommandError::Data(format!("no parse for {sentence:?}")));
    }
    Ok(r.trees)
}

/// One tree per line for each input sentence, sentences separated by a
/// blank line.
pub fn parse_lines(input: &str, dict: &Dictionary) -> Result<String> {
    let mut blocks = Vec::new();
    for sentence in input.lines().map(str::trim).filter(|s| !s.is_empty()) {
        let trees = parse_sentence(sentence, dict)?;
        blocks.push(trees.iter().map(|t| format!("{t}\n")).collect::<String>());
    }
    Ok(blocks.join("\n"))
}

pub fn linearize_tree(text: &str, dict: &Dictionary) -> Result<String> {
    let tree: Tree = text.parse().map_err(data)?;
    syntax::linearize(&tree, dict).map_err(data)
}

/// One Urdu line per input tree line.
pub fn linearize_lines(input: &str, dict: &Dictionary) -> Result<String> {
    let mut out = String::new();
    for line in input.lines().map(str::trim).filter(|s| !s.is_empty()) {
        out.push_str(&linearize_tree(line, dict)?);
        out.push('\n');
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn analysis_output() {
        let d = load_dictionary(None).unwrap();
        let out = analyze_lines("ktabyN\nzzz\n\n", None, &d).unwrap();
        let lines: Vec<&str> = out.lines().collect();
        assert_eq!(lines.len(), 2);
        assert!(lines[0].starts_with("ktab_") && lines[0].ends_with(". کتاب +N - Pl Nom - Fem -"));
        assert_eq!(lines[1], "zzz +?");
    }

    #[test]
    fn translit_targets() {
        assert_eq!(translit("کَوشِش", Target::Roman).unwrap(), "k(a)wX(i)X");
        assert_eq!(translit("k(a)wX(i)X", Target::Phonetic).unwrap(), "koʃɪʃ");
        assert_eq!(translit("کَوشِش", Target::Phonetic).unwrap(), "koʃɪʃ");
        assert!(matches!(translit("ktab ü", Target::Urdu), Err(CommandError::Data(_))));
        assert!("klingon".parse::<Target>().is_err());
    }

    #[test]
    fn error_kinds() {
        let d = load_dictionary(None).unwrap();
        assert_eq!(synth("nothing", &d).unwrap_err().exit_code(), 2);
        assert_eq!(export(&d, "xml").unwrap_err().exit_code(), 1);
        assert_eq!(inflect_table("n1", &["qlm"]).unwrap_err().exit_code(), 2);
        assert!(parse_lines("yh zzz", &d).is_err());
    }

    #[test]
    fn parse_and_linearize_agree() {
        let d = load_dictionary(None).unwrap();
        let trees = parse_lines("yh myra qlm t|ha", &d).unwrap();
        let out = linearize_lines(&trees, &d).unwrap();
        assert!(!out.is_empty());
        assert!(out.lines().all(|l| l == "یہ میرا قلم تھا"));
    }
}
