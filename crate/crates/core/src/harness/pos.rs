//! Coarse part-of-speech classes and tagset mappings.

use std::fmt;

use super::ScoreError;

/// Coarse POS inventory used when scoring emoji tags. `Other` is only a
/// prediction bucket, never a gold label.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub enum CoarsePos {
    Noun,
    Adjective,
    Verb,
    Adverb,
    Punctuation,
    Other,
}

impl CoarsePos {
    /// The five gold-eligible classes, in report column order.
    pub const GOLD_CLASSES: [CoarsePos; 5] = [
        CoarsePos::Noun,
        CoarsePos::Adjective,
        CoarsePos::Verb,
        CoarsePos::Adverb,
        CoarsePos::Punctuation,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CoarsePos::Noun => "Noun",
            CoarsePos::Adjective => "Adjective",
            CoarsePos::Verb => "Verb",
            CoarsePos::Adverb => "Adverb",
            CoarsePos::Punctuation => "Punctuation",
            CoarsePos::Other => "Other",
        }
    }

    /// Upper-snake-case spelling used by the POS lexicon file format.
    pub fn from_upper_name(name: &str) -> Option<CoarsePos> {
        Some(match name {
            "NOUN" => CoarsePos::Noun,
            "ADJECTIVE" => CoarsePos::Adjective,
            "VERB" => CoarsePos::Verb,
            "ADVERB" => CoarsePos::Adverb,
            "PUNCTUATION" => CoarsePos::Punctuation,
            _ => return None,
        })
    }

    /// Universal POS tag this class round-trips through.
    pub fn upos_tag(self) -> &'static str {
        match self {
            CoarsePos::Noun => "NOUN",
            CoarsePos::Adjective => "ADJ",
            CoarsePos::Verb => "VERB",
            CoarsePos::Adverb => "ADV",
            CoarsePos::Punctuation => "PUNCT",
            CoarsePos::Other => "X",
        }
    }
}

impl fmt::Display for CoarsePos {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Named tagsets understood by [`map_to_coarse`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub enum Tagset {
    PennTreebank,
    #[serde(rename = "UniversalPOS")]
    UniversalPos,
}

impl Tagset {
    pub fn name(self) -> &'static str {
        match self {
            Tagset::PennTreebank => "PennTreebank",
            Tagset::UniversalPos => "UniversalPOS",
        }
    }
}

impl fmt::Display for Tagset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

const PENN_NOUN: [&str; 4] = ["NN", "NNS", "NNP", "NNPS"];
const PENN_ADJ: [&str; 3] = ["JJ", "JJR", "JJS"];
const PENN_VERB: [&str; 6] = ["VB", "VBD", "VBG", "VBN", "VBP", "VBZ"];
const PENN_ADV: [&str; 3] = ["RB", "RBR", "RBS"];
const PENN_PUNCT: [&str; 9] = [".", ",", ":", "``", "''", "-LRB-", "-RRB-", "HYPH", "NFP"];
const PENN_OTHER: [&str; 26] = [
    "CC", "CD", "DT", "EX", "FW", "IN", "LS", "MD", "PDT", "POS", "PRP", "PRP$", "RP", "SYM",
    "TO", "UH", "WDT", "WP", "WP$", "WRB", "#", "$", "AFX", "ADD", "XX", "GW",
];

const UPOS_ALL: [&str; 17] = [
    "ADJ", "ADP", "ADV", "AUX", "CCONJ", "DET", "INTJ", "NOUN", "NUM", "PART", "PRON", "PROPN",
    "PUNCT", "SCONJ", "SYM", "VERB", "X",
];

/// Maps a tagset-specific tag onto the coarse five-class inventory
/// (plus `Other`). Unknown tags of the named tagset are an error.
pub fn map_to_coarse(tagset: Tagset, tag: &str) -> Result<CoarsePos, ScoreError> {
    let unknown = || ScoreError::UnknownTag {
        tagset,
        tag: tag.to_string(),
    };
    match tagset {
        Tagset::PennTreebank => {
            if PENN_NOUN.contains(&tag) {
                Ok(CoarsePos::Noun)
            } else if PENN_ADJ.contains(&tag) {
                Ok(CoarsePos::Adjective)
            } else if PENN_VERB.contains(&tag) {
                Ok(CoarsePos::Verb)
            } else if PENN_ADV.contains(&tag) {
                Ok(CoarsePos::Adverb)
            } else if PENN_PUNCT.contains(&tag) {
                Ok(CoarsePos::Punctuation)
            } else if PENN_OTHER.contains(&tag) {
                Ok(CoarsePos::Other)
            } else {
                Err(unknown())
            }
        }
        Tagset::UniversalPos => {
            if !UPOS_ALL.contains(&tag) {
                return Err(unknown());
            }
            Ok(match tag {
                "NOUN" | "PROPN" => CoarsePos::Noun,
                "ADJ" => CoarsePos::Adjective,
                "VERB" | "AUX" => CoarsePos::Verb,
                "ADV" => CoarsePos::Adverb,
                "PUNCT" => CoarsePos::Punctuation,
                _ => CoarsePos::Other,
            })
        }
    }
}
