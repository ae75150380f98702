//! Adjectives: marked (ending in `a`) agree in gender, number and case;
//! unmarked ones are invariant.

use super::features::{AdjForm, Case, Gender, Number, Param};
use super::{suffix_drop, suffix_take, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Adjective {
    cells: [String; 12],
}

impl Adjective {
    pub fn form(&self, af: AdjForm) -> &str {
        &self.cells[af.index()]
    }

    /// Cells in [`AdjForm::values`] order.
    pub fn cells(&self) -> &[String; 12] {
        &self.cells
    }
}

pub fn adj_paradigm(lemma: &str) -> Result<Adjective> {
    let marked = suffix_take(1, lemma)? == "a";
    let stem = suffix_drop(1, lemma)?;
    let mut cells: [String; 12] = Default::default();
    for af in AdjForm::values() {
        cells[af.index()] = if !marked {
            lemma.to_string()
        } else {
            match (af.gender, af.number, af.case) {
                (Gender::Masc, Number::Sg, Case::Nom) => lemma.to_string(),
                (Gender::Masc, _, _) => format!("{stem}E"),
                (Gender::Fem, _, _) => format!("{stem}y"),
            }
        };
    }
    Ok(Adjective { cells })
}
