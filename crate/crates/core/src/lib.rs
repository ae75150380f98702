//! Urdu morphology: transliteration, paradigm inflection, full-form
//! lexicons, corpus-driven lexicon extraction and a small agreement grammar.

pub mod extractor;
pub mod lexicon;
pub mod morphology;
pub mod syntax;
pub mod translit;
