//! Conformance scoring: tokenization, emoji POS tags, and sentiment
//! predictions against gold data, aggregated into per-category reports.
//!
//! Scoring is all-or-nothing per example for tokenization (normalized token
//! sequences must match exactly) and per target for POS. All scoring is
//! deterministic and independent of example order.

pub mod io;
mod pos;
mod report;

use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

pub use pos::{map_to_coarse, CoarsePos, Tagset};
pub use report::{render_support_matrix, CategoryScore, MatrixRow, Report, SupportMatrix};

use crate::registry::Registry;
use crate::sentiment::Polarity;
use crate::tokenizer::{normalize_strings, NormalizeOptions};

/// Emoji-use case a gold tokenization example exercises.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, serde::Serialize, serde::Deserialize)]
pub enum Case {
    Case1,
    Case2,
    Case3,
    Case4,
    Case5,
    Case6,
}

impl Case {
    pub const ALL: [Case; 6] = [
        Case::Case1,
        Case::Case2,
        Case::Case3,
        Case::Case4,
        Case::Case5,
        Case::Case6,
    ];

    pub fn label(self) -> &'static str {
        match self {
            Case::Case1 => "Case 1",
            Case::Case2 => "Case 2",
            Case::Case3 => "Case 3",
            Case::Case4 => "Case 4",
            Case::Case5 => "Case 5",
            Case::Case6 => "Case 6",
        }
    }
}

impl fmt::Display for Case {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// One gold tokenization example.
#[derive(Debug, Clone, PartialEq)]
pub struct GoldTokenExample {
    pub id: String,
    pub text: String,
    pub case: Case,
    pub gold_tokens: Vec<String>,
}

/// One emoji target inside a POS example: the `occurrence`-th appearance of
/// `text` in the tweet, expected to be tagged `gold`.
#[derive(Debug, Clone, PartialEq)]
pub struct PosTarget {
    pub text: String,
    pub occurrence: usize,
    pub gold: CoarsePos,
}

/// One gold POS example with its emoji targets.
#[derive(Debug, Clone, PartialEq)]
pub struct GoldPosExample {
    pub id: String,
    pub text: String,
    pub targets: Vec<PosTarget>,
}

/// A predicted token with its tagset-specific tag.
#[derive(Debug, Clone, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct TaggedToken {
    pub text: String,
    pub tag: String,
}

impl TaggedToken {
    pub fn new(text: impl Into<String>, tag: impl Into<String>) -> TaggedToken {
        TaggedToken {
            text: text.into(),
            tag: tag.into(),
        }
    }
}

/// Condition under which a sentiment example was built: the neutral sentence
/// alone, or with a positive/negative emoji appended.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub enum SentimentCondition {
    #[serde(rename = "NS")]
    NeutralSentence,
    PosEmoji,
    NegEmoji,
}

impl SentimentCondition {
    pub const ALL: [SentimentCondition; 3] = [
        SentimentCondition::NeutralSentence,
        SentimentCondition::PosEmoji,
        SentimentCondition::NegEmoji,
    ];

    pub fn label(self) -> &'static str {
        match self {
            SentimentCondition::NeutralSentence => "NS",
            SentimentCondition::PosEmoji => "+ve",
            SentimentCondition::NegEmoji => "-ve",
        }
    }
}

/// One sentiment example: text, construction condition, expected polarity.
#[derive(Debug, Clone, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct SentimentExample {
    pub id: String,
    pub text: String,
    pub condition: SentimentCondition,
    pub gold: Polarity,
}

/// Scoring failures.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum ScoreError {
    #[error("no prediction for example `{0}`")]
    MissingPrediction(String),
    #[error("unknown {tagset} tag `{tag}`")]
    UnknownTag { tagset: Tagset, tag: String },
    #[error("report for `{tool}` does not share the matrix category structure")]
    CategoryMismatch { tool: String },
}

/// Scores token predictions against gold examples. An example passes iff
/// the normalized prediction equals the normalized gold token sequence.
pub fn score_tokens(
    registry: &Registry,
    golds: &[GoldTokenExample],
    preds: &HashMap<String, Vec<String>>,
    opts: NormalizeOptions,
) -> Result<Report, ScoreError> {
    let mut by_case: HashMap<Case, (usize, usize)> = HashMap::new();
    for gold in golds {
        let pred = preds
            .get(&gold.id)
            .ok_or_else(|| ScoreError::MissingPrediction(gold.id.clone()))?;
        let ok = normalize_strings(registry, pred, opts)
            == normalize_strings(registry, &gold.gold_tokens, opts);
        let slot = by_case.entry(gold.case).or_default();
        slot.0 += ok as usize;
        slot.1 += 1;
    }
    let categories = Case::ALL
        .iter()
        .filter_map(|case| {
            by_case
                .get(case)
                .map(|&(passed, total)| CategoryScore::new(case.label(), passed, total))
        })
        .collect();
    Ok(Report::new(categories, Vec::new()))
}

/// Scores emoji POS predictions. Each gold target is matched to the
/// prediction token containing its `occurrence`-th appearance (a merged
/// token containing the emoji counts as that target's prediction); the
/// target is correct iff the coarse-mapped tag equals the gold class.
pub fn score_pos(
    golds: &[GoldPosExample],
    preds: &HashMap<String, Vec<TaggedToken>>,
    tagset: Tagset,
) -> Result<Report, ScoreError> {
    let mut by_class: HashMap<CoarsePos, (usize, usize)> = HashMap::new();
    let mut notes = Vec::new();

    for gold in golds {
        let tokens = preds
            .get(&gold.id)
            .ok_or_else(|| ScoreError::MissingPrediction(gold.id.clone()))?;
        for target in &gold.targets {
            let slot = by_class.entry(target.gold).or_default();
            slot.1 += 1;
            match containing_token(tokens, &target.text, target.occurrence) {
                Some(token) => {
                    if map_to_coarse(tagset, &token.tag)? == target.gold {
                        slot.0 += 1;
                    }
                }
                None => notes.push(format!(
                    "example `{}`: target `{}` #{} not covered by any prediction token",
                    gold.id, target.text, target.occurrence
                )),
            }
        }
    }

    let categories = CoarsePos::GOLD_CLASSES
        .iter()
        .map(|class| {
            let &(passed, total) = by_class.get(class).unwrap_or(&(0, 0));
            CategoryScore::new(class.name(), passed, total)
        })
        .collect();
    Ok(Report::new(categories, notes))
}

/// The prediction token containing the `occurrence`-th appearance of
/// `target` across the token stream, counting non-overlapping matches.
fn containing_token<'a>(
    tokens: &'a [TaggedToken],
    target: &str,
    occurrence: usize,
) -> Option<&'a TaggedToken> {
    let mut seen = 0usize;
    for token in tokens {
        let count = token.text.matches(target).count();
        if occurrence < seen + count {
            return Some(token);
        }
        seen += count;
    }
    None
}

/// Per-condition accuracy of polarity predictions.
pub fn score_sentiment(
    examples: &[SentimentExample],
    preds: &HashMap<String, Polarity>,
) -> Result<Report, ScoreError> {
    let mut by_condition: HashMap<SentimentCondition, (usize, usize)> = HashMap::new();
    for ex in examples {
        let pred = preds
            .get(&ex.id)
            .ok_or_else(|| ScoreError::MissingPrediction(ex.id.clone()))?;
        let slot = by_condition.entry(ex.condition).or_default();
        slot.0 += (*pred == ex.gold) as usize;
        slot.1 += 1;
    }
    let categories = SentimentCondition::ALL
        .iter()
        .map(|c| {
            let &(passed, total) = by_condition.get(c).unwrap_or(&(0, 0));
            CategoryScore::new(c.label(), passed, total)
        })
        .collect();
    Ok(Report::new(categories, Vec::new()))
}
