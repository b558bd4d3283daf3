//! JSONL record formats for gold data, predictions, and pipeline output.

use std::collections::HashMap;
use std::fmt;

use serde::de::DeserializeOwned;

use super::pos::{CoarsePos, Tagset};
use super::{Case, GoldPosExample, GoldTokenExample, PosTarget, SentimentExample, TaggedToken};
use crate::sentiment::Polarity;

/// A line-addressed loading failure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LoadError {
    pub line: usize,
    pub message: String,
}

impl LoadError {
    fn new(line: usize, message: impl Into<String>) -> LoadError {
        LoadError {
            line,
            message: message.into(),
        }
    }
}

impl fmt::Display for LoadError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}: {}", self.line, self.message)
    }
}

impl std::error::Error for LoadError {}

/// `{"id", "text"}` input line.
#[derive(Debug, Clone, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct TextRecord {
    pub id: String,
    pub text: String,
}

/// `{"id", "tokens": [...]}` token-list line (predictions and baseline input).
#[derive(Debug, Clone, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct TokensRecord {
    pub id: String,
    pub tokens: Vec<String>,
}

/// `{"id", "tagged": [{"text", "tag"}, ...]}` tagged-token line.
#[derive(Debug, Clone, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct TaggedRecord {
    pub id: String,
    pub tagged: Vec<TaggedToken>,
}

/// Header line naming the tagset of a tagged prediction file.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct TagsetHeader {
    pub tagset: Tagset,
}

/// `{"id", "polarity"}` sentiment prediction line; extra fields (scores
/// emitted by the sentiment pipeline) are ignored.
#[derive(Debug, Clone, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct PolarityRecord {
    pub id: String,
    pub polarity: Polarity,
}

fn parse_jsonl<T: DeserializeOwned>(data: &str) -> Result<Vec<(usize, T)>, LoadError> {
    let mut out = Vec::new();
    for (idx, raw) in data.lines().enumerate() {
        let line = idx + 1;
        if raw.trim().is_empty() {
            continue;
        }
        let record: T =
            serde_json::from_str(raw).map_err(|e| LoadError::new(line, e.to_string()))?;
        out.push((line, record));
    }
    Ok(out)
}

fn reject_duplicate_ids<'a, I: Iterator<Item = (usize, &'a str)>>(ids: I) -> Result<(), LoadError> {
    let mut seen: HashMap<&str, usize> = HashMap::new();
    for (line, id) in ids {
        if seen.insert(id, line).is_some() {
            return Err(LoadError::new(line, format!("duplicate id `{id}`")));
        }
    }
    Ok(())
}

/// Gold token suite: `{"id","text","case","gold_tokens":[...]}` per line.
pub fn parse_gold_tokens(data: &str) -> Result<Vec<GoldTokenExample>, LoadError> {
    #[derive(serde::Deserialize)]
    struct Record {
        id: String,
        text: String,
        case: Case,
        gold_tokens: Vec<String>,
    }
    let records = parse_jsonl::<Record>(data)?;
    reject_duplicate_ids(records.iter().map(|(l, r)| (*l, r.id.as_str())))?;
    records
        .into_iter()
        .map(|(line, r)| {
            if r.gold_tokens.is_empty() && !r.text.trim().is_empty() {
                return Err(LoadError::new(
                    line,
                    format!("example `{}` has text but no gold tokens", r.id),
                ));
            }
            Ok(GoldTokenExample {
                id: r.id,
                text: r.text,
                case: r.case,
                gold_tokens: r.gold_tokens,
            })
        })
        .collect()
}

/// Token predictions keyed by example id.
pub fn parse_token_predictions(data: &str) -> Result<HashMap<String, Vec<String>>, LoadError> {
    let records = parse_jsonl::<TokensRecord>(data)?;
    reject_duplicate_ids(records.iter().map(|(l, r)| (*l, r.id.as_str())))?;
    Ok(records.into_iter().map(|(_, r)| (r.id, r.tokens)).collect())
}

/// POS gold suite: `{"id","text","targets":[{"text","occurrence","gold"}]}`.
pub fn parse_pos_gold(data: &str) -> Result<Vec<GoldPosExample>, LoadError> {
    #[derive(serde::Deserialize)]
    struct TargetRecord {
        text: String,
        #[serde(default)]
        occurrence: usize,
        gold: CoarsePos,
    }
    #[derive(serde::Deserialize)]
    struct Record {
        id: String,
        text: String,
        targets: Vec<TargetRecord>,
    }
    let records = parse_jsonl::<Record>(data)?;
    reject_duplicate_ids(records.iter().map(|(l, r)| (*l, r.id.as_str())))?;
    records
        .into_iter()
        .map(|(line, r)| {
            let mut targets = Vec::new();
            for t in r.targets {
                if t.gold == CoarsePos::Other {
                    return Err(LoadError::new(
                        line,
                        format!("example `{}`: Other is not a gold class", r.id),
                    ));
                }
                if t.text.is_empty() {
                    return Err(LoadError::new(
                        line,
                        format!("example `{}`: empty target text", r.id),
                    ));
                }
                targets.push(PosTarget {
                    text: t.text,
                    occurrence: t.occurrence,
                    gold: t.gold,
                });
            }
            Ok(GoldPosExample {
                id: r.id,
                text: r.text,
                targets,
            })
        })
        .collect()
}

/// Tagged predictions: a `{"tagset": ...}` header line, then
/// `{"id","tagged":[...]}` lines.
pub fn parse_tagged_predictions(
    data: &str,
) -> Result<(Tagset, HashMap<String, Vec<TaggedToken>>), LoadError> {
    let mut lines = data.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
    let (idx, header_line) = lines
        .next()
        .ok_or_else(|| LoadError::new(1, "missing tagset header line"))?;
    let header: TagsetHeader = serde_json::from_str(header_line)
        .map_err(|e| LoadError::new(idx + 1, format!("bad tagset header: {e}")))?;

    let mut preds = HashMap::new();
    let mut lines_seen: HashMap<String, usize> = HashMap::new();
    for (idx, raw) in lines {
        let line = idx + 1;
        let record: TaggedRecord =
            serde_json::from_str(raw).map_err(|e| LoadError::new(line, e.to_string()))?;
        if lines_seen.insert(record.id.clone(), line).is_some() {
            return Err(LoadError::new(line, format!("duplicate id `{}`", record.id)));
        }
        preds.insert(record.id, record.tagged);
    }
    Ok((header.tagset, preds))
}

/// Sentiment gold suite: `{"id","text","condition","gold"}` per line.
pub fn parse_sentiment_gold(data: &str) -> Result<Vec<SentimentExample>, LoadError> {
    let records = parse_jsonl::<SentimentExample>(data)?;
    reject_duplicate_ids(records.iter().map(|(l, r)| (*l, r.id.as_str())))?;
    Ok(records.into_iter().map(|(_, r)| r).collect())
}

/// Polarity predictions keyed by example id.
pub fn parse_polarity_predictions(data: &str) -> Result<HashMap<String, Polarity>, LoadError> {
    let records = parse_jsonl::<PolarityRecord>(data)?;
    reject_duplicate_ids(records.iter().map(|(l, r)| (*l, r.id.as_str())))?;
    Ok(records.into_iter().map(|(_, r)| (r.id, r.polarity)).collect())
}
