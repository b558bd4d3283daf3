//! Lexicon-based emoji polarity and a text+emoji sentiment combiner.
//!
//! Emoji polarity comes from an occurrence-based lexicon of
//! negative/neutral/positive fractions; the score of an emoji is
//! `p_pos - p_neg`. Lexicon keys are tone-stripped, so every skin tone
//! variant of an emoji scores like its base.

use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

use crate::registry::Registry;
use crate::segmenter::{parse_single, strip_skin_tones, EmojiSequence};
use crate::tokenizer::{tokenize, TokenKind};

/// Ternary sentiment polarity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Polarity {
    Negative,
    Neutral,
    Positive,
}

impl Polarity {
    /// Thresholded classification: `score >= threshold` is positive,
    /// `score <= -threshold` negative, anything between neutral. Boundary
    /// values classify as polar.
    pub fn from_score(score: f64, threshold: f64) -> Polarity {
        if score >= threshold {
            Polarity::Positive
        } else if score <= -threshold {
            Polarity::Negative
        } else {
            Polarity::Neutral
        }
    }
}

impl fmt::Display for Polarity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Polarity::Negative => "negative",
            Polarity::Neutral => "neutral",
            Polarity::Positive => "positive",
        })
    }
}

/// Default polarity threshold; configurable per [`AnalyzeOptions`].
pub const DEFAULT_POLARITY_THRESHOLD: f64 = 0.1;

/// One lexicon row: an emoji and its outcome fractions.
#[derive(Debug, Clone, PartialEq)]
pub struct LexiconEntry {
    pub emoji: String,
    pub p_neg: f64,
    pub p_neut: f64,
    pub p_pos: f64,
}

impl LexiconEntry {
    /// `p_pos - p_neg`, in [-1, 1].
    pub fn score(&self) -> f64 {
        self.p_pos - self.p_neg
    }
}

/// Errors raised while loading a sentiment lexicon or valence list.
#[derive(Debug, Error, PartialEq)]
pub enum LexiconError {
    #[error("line {line}: malformed record `{text}`")]
    Malformed { line: usize, text: String },
    #[error("line {line}: `{text}` is not a valid fraction")]
    BadFraction { line: usize, text: String },
    #[error("line {line}: fractions sum to {sum}, expected 1")]
    SumNotOne { line: usize, sum: f64 },
    #[error("line {line}: `{text}` is not a single emoji sequence")]
    InvalidEmoji { line: usize, text: String },
    #[error("line {line}: duplicate emoji `{emoji}`")]
    DuplicateEmoji { line: usize, emoji: String },
    #[error("line {line}: unknown class `{name}`")]
    UnknownClass { line: usize, name: String },
}

/// Emoji sentiment lexicon keyed by tone-stripped code point sequences.
#[derive(Debug, Clone, Default)]
pub struct SentimentLexicon {
    entries: HashMap<String, LexiconEntry>,
}

impl SentimentLexicon {
    /// Parses TSV rows `emoji<TAB>p_neg<TAB>p_neut<TAB>p_pos` with `#`
    /// comment lines. Fractions must each lie in [0, 1] and sum to 1 within
    /// 1e-6; duplicate (tone-stripped) emoji keys are rejected.
    pub fn parse(registry: &Registry, data: &str) -> Result<SentimentLexicon, LexiconError> {
        let mut entries = HashMap::new();
        for (idx, raw) in data.lines().enumerate() {
            let line = idx + 1;
            let trimmed = raw.trim();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            let fields: Vec<&str> = trimmed.split('\t').filter(|f| !f.is_empty()).collect();
            let [emoji, neg, neut, pos] = fields[..] else {
                return Err(LexiconError::Malformed {
                    line,
                    text: trimmed.to_string(),
                });
            };
            let parse = |text: &str| -> Result<f64, LexiconError> {
                let v: f64 = text.parse().map_err(|_| LexiconError::BadFraction {
                    line,
                    text: text.to_string(),
                })?;
                if !(0.0..=1.0).contains(&v) {
                    return Err(LexiconError::BadFraction {
                        line,
                        text: text.to_string(),
                    });
                }
                Ok(v)
            };
            let (p_neg, p_neut, p_pos) = (parse(neg)?, parse(neut)?, parse(pos)?);
            let sum = p_neg + p_neut + p_pos;
            if (sum - 1.0).abs() > 1e-6 {
                return Err(LexiconError::SumNotOne { line, sum });
            }
            let seq = parse_single(registry, emoji).ok_or_else(|| LexiconError::InvalidEmoji {
                line,
                text: emoji.to_string(),
            })?;
            let key = strip_skin_tones(registry, &seq).text();
            let entry = LexiconEntry {
                emoji: emoji.to_string(),
                p_neg,
                p_neut,
                p_pos,
            };
            if entries.insert(key, entry).is_some() {
                return Err(LexiconError::DuplicateEmoji {
                    line,
                    emoji: emoji.to_string(),
                });
            }
        }
        Ok(SentimentLexicon { entries })
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, key: &str) -> Option<&LexiconEntry> {
        self.entries.get(key)
    }
}

/// Score of an emoji sequence: exact lookup on its tone-stripped code
/// points; unknown emojis score 0.
pub fn emoji_polarity(lexicon: &SentimentLexicon, registry: &Registry, seq: &EmojiSequence) -> f64 {
    let key = strip_skin_tones(registry, seq).text();
    lexicon.get(&key).map_or(0.0, |e| e.score())
}

/// Weights and threshold for [`analyze`].
#[derive(Debug, Clone, Copy)]
pub struct AnalyzeOptions {
    pub w_text: f64,
    pub w_emoji: f64,
    pub threshold: f64,
}

impl Default for AnalyzeOptions {
    fn default() -> Self {
        AnalyzeOptions {
            w_text: 1.0,
            w_emoji: 1.0,
            threshold: DEFAULT_POLARITY_THRESHOLD,
        }
    }
}

/// Combined text+emoji sentiment for one input.
#[derive(Debug, Clone, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct SentimentResult {
    pub text_score: f64,
    pub emoji_score: f64,
    pub combined_score: f64,
    pub polarity: Polarity,
    pub emoji_count: usize,
}

/// Scores the non-emoji words of an input, in [-1, 1].
pub trait TextScorer {
    fn score_words(&self, words: &[&str]) -> f64;
}

/// Tiny word-valence list: the mean valence of matched words,
/// case-insensitive, 0 when nothing matches.
#[derive(Debug, Clone, Default)]
pub struct WordValenceScorer {
    valence: HashMap<String, f64>,
}

impl WordValenceScorer {
    /// Parses TSV rows `word<TAB>valence` with `#` comments.
    pub fn parse(data: &str) -> Result<WordValenceScorer, LexiconError> {
        let mut valence = HashMap::new();
        for (idx, raw) in data.lines().enumerate() {
            let line = idx + 1;
            let trimmed = raw.trim();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            let Some((word, value)) = trimmed.split_once('\t') else {
                return Err(LexiconError::Malformed {
                    line,
                    text: trimmed.to_string(),
                });
            };
            let v: f64 = value.trim().parse().map_err(|_| LexiconError::BadFraction {
                line,
                text: value.to_string(),
            })?;
            valence.insert(word.trim().to_lowercase(), v.clamp(-1.0, 1.0));
        }
        Ok(WordValenceScorer { valence })
    }
}

impl TextScorer for WordValenceScorer {
    fn score_words(&self, words: &[&str]) -> f64 {
        let mut sum = 0.0;
        let mut matched = 0usize;
        for w in words {
            if let Some(v) = self.valence.get(&w.to_lowercase()) {
                sum += v;
                matched += 1;
            }
        }
        if matched == 0 {
            0.0
        } else {
            (sum / matched as f64).clamp(-1.0, 1.0)
        }
    }
}

/// Bundled example record pairing a sentence with its expected combined
/// (text+emoji) polarity.
#[derive(Debug, Clone, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct ModerationExample {
    pub id: String,
    pub text: String,
    pub gold: Polarity,
}

/// Combined sentiment of a text: emojis found via the tokenizer, scored
/// through the lexicon and averaged; words scored by `scorer`. The combined
/// score is `clamp(w_text * text + w_emoji * emoji)`.
pub fn analyze(
    registry: &Registry,
    lexicon: &SentimentLexicon,
    text: &str,
    opts: AnalyzeOptions,
    scorer: &dyn TextScorer,
) -> SentimentResult {
    let tokens = tokenize(registry, text);
    let words: Vec<&str> = tokens
        .iter()
        .filter(|t| t.kind == TokenKind::Word)
        .map(|t| t.text.as_str())
        .collect();
    let text_score = scorer.score_words(&words).clamp(-1.0, 1.0);

    let mut emoji_sum = 0.0;
    let mut emoji_count = 0usize;
    for t in &tokens {
        if let Some(seq) = &t.emoji {
            emoji_sum += emoji_polarity(lexicon, registry, seq);
            emoji_count += 1;
        }
    }
    let emoji_score = if emoji_count == 0 {
        0.0
    } else {
        emoji_sum / emoji_count as f64
    };

    let combined_score = (opts.w_text * text_score + opts.w_emoji * emoji_score).clamp(-1.0, 1.0);
    SentimentResult {
        text_score,
        emoji_score,
        combined_score,
        polarity: Polarity::from_score(combined_score, opts.threshold),
        emoji_count,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bundled;

    #[test]
    fn row_score_is_pos_minus_neg() {
        let reg = bundled::registry();
        let lex = SentimentLexicon::parse(reg, "😍\t0.05\t0.15\t0.80").unwrap();
        let entry = lex.get("😍").unwrap();
        assert!((entry.score() - 0.75).abs() < 1e-12);
    }

    #[test]
    fn bad_sum_rejected() {
        let reg = bundled::registry();
        let err = SentimentLexicon::parse(reg, "😍\t0.05\t0.15\t0.70").unwrap_err();
        assert!(matches!(err, LexiconError::SumNotOne { line: 1, .. }));
    }

    #[test]
    fn empty_lexicon_scores_zero() {
        let reg = bundled::registry();
        let lex = SentimentLexicon::parse(reg, "").unwrap();
        assert!(lex.is_empty());
        let seq = parse_single(reg, "😍").unwrap();
        assert_eq!(emoji_polarity(&lex, reg, &seq), 0.0);
    }

    #[test]
    fn duplicate_keys_rejected_after_tone_strip() {
        let reg = bundled::registry();
        let data = "👍\t0.1\t0.3\t0.6\n👍🏻\t0.1\t0.3\t0.6";
        let err = SentimentLexicon::parse(reg, data).unwrap_err();
        assert!(matches!(err, LexiconError::DuplicateEmoji { line: 2, .. }));
    }

    #[test]
    fn malformed_rows_rejected() {
        let reg = bundled::registry();
        assert!(matches!(
            SentimentLexicon::parse(reg, "😍\t0.5\t0.5"),
            Err(LexiconError::Malformed { line: 1, .. })
        ));
        assert!(matches!(
            SentimentLexicon::parse(reg, "😍\tx\t0.5\t0.5"),
            Err(LexiconError::BadFraction { line: 1, .. })
        ));
        assert!(matches!(
            SentimentLexicon::parse(reg, "ab\t0.2\t0.3\t0.5"),
            Err(LexiconError::InvalidEmoji { line: 1, .. })
        ));
    }

    #[test]
    fn toned_and_base_emoji_score_identically() {
        let reg = bundled::registry();
        let lex = bundled::sentiment_lexicon();
        let base = parse_single(reg, "👍").unwrap();
        let toned = parse_single(reg, "👍🏿").unwrap();
        let s1 = emoji_polarity(lex, reg, &base);
        let s2 = emoji_polarity(lex, reg, &toned);
        assert!(s1 > 0.1);
        assert_eq!(s1, s2);
    }

    #[test]
    fn neutral_text_with_positive_emoji_is_positive() {
        let reg = bundled::registry();
        let result = analyze(
            reg,
            bundled::sentiment_lexicon(),
            "I'll explain it later 😍",
            AnalyzeOptions::default(),
            bundled::valence_scorer(),
        );
        assert_eq!(result.text_score, 0.0);
        assert!(result.emoji_score > 0.1);
        assert_eq!(result.polarity, Polarity::Positive);
        assert_eq!(result.emoji_count, 1);
    }

    #[test]
    fn negative_text_with_negative_emoji_stays_negative() {
        let reg = bundled::registry();
        let result = analyze(
            reg,
            bundled::sentiment_lexicon(),
            "My driver license is expired by little over a month 😞",
            AnalyzeOptions::default(),
            bundled::valence_scorer(),
        );
        assert!(result.text_score < -0.1);
        assert_eq!(result.polarity, Polarity::Negative);
    }

    #[test]
    fn zero_emoji_weight_reduces_to_text_polarity() {
        let reg = bundled::registry();
        let opts = AnalyzeOptions {
            w_emoji: 0.0,
            ..AnalyzeOptions::default()
        };
        let result = analyze(
            reg,
            bundled::sentiment_lexicon(),
            "I'll explain it later 😍",
            opts,
            bundled::valence_scorer(),
        );
        assert_eq!(result.polarity, Polarity::Neutral);
        assert_eq!(result.combined_score, 0.0);
    }

    #[test]
    fn no_emoji_means_text_only() {
        let reg = bundled::registry();
        let result = analyze(
            reg,
            bundled::sentiment_lexicon(),
            "this is awesome",
            AnalyzeOptions::default(),
            bundled::valence_scorer(),
        );
        assert_eq!(result.emoji_count, 0);
        assert_eq!(result.emoji_score, 0.0);
        assert_eq!(result.combined_score, result.text_score);
        assert_eq!(result.polarity, Polarity::Positive);
    }

    #[test]
    fn repeated_emojis_average_rather_than_saturate() {
        let reg = bundled::registry();
        let lex = bundled::sentiment_lexicon();
        let once = analyze(reg, lex, "ok 🤩", AnalyzeOptions::default(), bundled::valence_scorer());
        let many = analyze(
            reg,
            lex,
            "ok 🤩🤩🤩🤩",
            AnalyzeOptions::default(),
            bundled::valence_scorer(),
        );
        assert_eq!(once.emoji_score, many.emoji_score);
        assert_eq!(many.emoji_count, 4);
    }

    #[test]
    fn skin_tone_invariance_of_analyze() {
        let reg = bundled::registry();
        let lex = bundled::sentiment_lexicon();
        let a = analyze(reg, lex, "nice work 👏", AnalyzeOptions::default(), bundled::valence_scorer());
        let b = analyze(reg, lex, "nice work 👏🏾", AnalyzeOptions::default(), bundled::valence_scorer());
        assert_eq!(a.combined_score, b.combined_score);
        assert_eq!(a.polarity, b.polarity);
    }

    #[test]
    fn stronger_emoji_never_lowers_the_combined_score() {
        let reg = bundled::registry();
        let lex = bundled::sentiment_lexicon();
        // ascending lexicon scores: 😞 (-0.48) < 🙄 (-0.29) < 🤔 (+0.01) < 😊 (+0.643)
        let ascending = ["😞", "🙄", "🤔", "😊"];
        let mut last = f64::NEG_INFINITY;
        for emoji in ascending {
            let result = analyze(
                reg,
                lex,
                &format!("the package arrived {emoji}"),
                AnalyzeOptions::default(),
                bundled::valence_scorer(),
            );
            assert!(result.combined_score >= last, "{emoji}");
            last = result.combined_score;
        }
    }

    #[test]
    fn thresholds_partition_with_polar_boundaries() {
        let t = DEFAULT_POLARITY_THRESHOLD;
        assert_eq!(Polarity::from_score(t, t), Polarity::Positive);
        assert_eq!(Polarity::from_score(-t, t), Polarity::Negative);
        assert_eq!(Polarity::from_score(t - 1e-9, t), Polarity::Neutral);
        assert_eq!(Polarity::from_score(-t + 1e-9, t), Polarity::Neutral);
    }
}
