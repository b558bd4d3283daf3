//! Pre-trained token vectors: loading, cosine nearest neighbors, and the
//! skin-tone consistency measure over emoji neighborhoods.

use std::collections::{BTreeSet, HashMap};

use thiserror::Error;

use crate::registry::{Registry, SkinTone};
use crate::segmenter::parse_single;

/// Errors raised while loading or querying an embedding table.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum EmbeddingError {
    #[error("line {line}: malformed record `{text}`")]
    Malformed { line: usize, text: String },
    #[error("line {line}: expected {expected} components, found {found}")]
    DimensionMismatch {
        line: usize,
        expected: usize,
        found: usize,
    },
    #[error("line {line}: duplicate token `{token}`")]
    DuplicateToken { line: usize, token: String },
    #[error("line {line}: zero-norm vector for `{token}`")]
    ZeroVector { line: usize, token: String },
    #[error("token count mismatch: header says {expected}, file has {found}")]
    CountMismatch { expected: usize, found: usize },
    #[error("unknown token `{0}`")]
    UnknownToken(String),
    #[error("token `{0}` carries no skin tone")]
    NotToned(String),
}

/// Which candidates a neighbor query considers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NeighborFilter {
    All,
    /// Only tokens whose text is a single, non-degenerate emoji sequence.
    EmojiOnly,
}

/// Immutable token-vector table of a fixed dimension.
#[derive(Debug, Clone)]
pub struct EmbeddingTable {
    dimension: usize,
    tokens: Vec<String>,
    vectors: Vec<Vec<f64>>,
    index: HashMap<String, usize>,
}

impl EmbeddingTable {
    /// Parses the text format: a `count dimension` header line, then one
    /// `token v1 v2 ... vd` line per token, space-separated.
    pub fn parse(data: &str) -> Result<EmbeddingTable, EmbeddingError> {
        let mut lines = data.lines().enumerate();
        let (_, header) = lines
            .next()
            .ok_or(EmbeddingError::Malformed {
                line: 1,
                text: String::new(),
            })?;
        let mut parts = header.split_whitespace();
        let (count, dimension) = match (parts.next(), parts.next(), parts.next()) {
            (Some(c), Some(d), None) => {
                let count: usize = c.parse().map_err(|_| EmbeddingError::Malformed {
                    line: 1,
                    text: header.to_string(),
                })?;
                let dim: usize = d.parse().map_err(|_| EmbeddingError::Malformed {
                    line: 1,
                    text: header.to_string(),
                })?;
                (count, dim)
            }
            _ => {
                return Err(EmbeddingError::Malformed {
                    line: 1,
                    text: header.to_string(),
                })
            }
        };

        let mut table = EmbeddingTable {
            dimension,
            tokens: Vec::with_capacity(count),
            vectors: Vec::with_capacity(count),
            index: HashMap::with_capacity(count),
        };

        for (idx, raw) in lines {
            let line = idx + 1;
            if raw.trim().is_empty() {
                continue;
            }
            let mut parts = raw.split_whitespace();
            let token = parts
                .next()
                .ok_or(EmbeddingError::Malformed {
                    line,
                    text: raw.to_string(),
                })?
                .to_string();
            let mut vector = Vec::with_capacity(dimension);
            for p in parts {
                let v: f64 = p.parse().map_err(|_| EmbeddingError::Malformed {
                    line,
                    text: raw.to_string(),
                })?;
                vector.push(v);
            }
            if vector.len() != dimension {
                return Err(EmbeddingError::DimensionMismatch {
                    line,
                    expected: dimension,
                    found: vector.len(),
                });
            }
            if vector.iter().all(|&v| v == 0.0) {
                return Err(EmbeddingError::ZeroVector { line, token });
            }
            if table.index.contains_key(&token) {
                return Err(EmbeddingError::DuplicateToken { line, token });
            }
            table.index.insert(token.clone(), table.tokens.len());
            table.tokens.push(token);
            table.vectors.push(vector);
        }

        if table.tokens.len() != count {
            return Err(EmbeddingError::CountMismatch {
                expected: count,
                found: table.tokens.len(),
            });
        }
        Ok(table)
    }

    pub fn len(&self) -> usize {
        self.tokens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tokens.is_empty()
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn contains(&self, token: &str) -> bool {
        self.index.contains_key(token)
    }

    /// All tokens, in load order.
    pub fn tokens(&self) -> impl Iterator<Item = &str> {
        self.tokens.iter().map(|t| t.as_str())
    }

    /// The vector stored for `token`, if present.
    pub fn vector(&self, token: &str) -> Option<&[f64]> {
        self.index.get(token).map(|&i| self.vectors[i].as_slice())
    }

    /// Top-k neighbors of `token` by cosine similarity, descending, the
    /// query itself excluded. Ties break by lexicographic token order.
    pub fn nearest(
        &self,
        registry: &Registry,
        token: &str,
        k: usize,
        filter: NeighborFilter,
    ) -> Result<Vec<(String, f64)>, EmbeddingError> {
        let &query_idx = self
            .index
            .get(token)
            .ok_or_else(|| EmbeddingError::UnknownToken(token.to_string()))?;
        let query = &self.vectors[query_idx];

        let mut scored: Vec<(usize, f64)> = (0..self.tokens.len())
            .filter(|&i| i != query_idx)
            .filter(|&i| match filter {
                NeighborFilter::All => true,
                NeighborFilter::EmojiOnly => is_emoji_token(registry, &self.tokens[i]),
            })
            .map(|i| (i, cosine(query, &self.vectors[i])))
            .collect();
        scored.sort_by(|a, b| {
            b.1.partial_cmp(&a.1)
                .unwrap_or(std::cmp::Ordering::Equal)
                .then_with(|| self.tokens[a.0].cmp(&self.tokens[b.0]))
        });
        scored.truncate(k);
        Ok(scored
            .into_iter()
            .map(|(i, sim)| (self.tokens[i].clone(), sim))
            .collect())
    }

    /// Fraction of the top-k emoji neighbors of a toned emoji whose skin
    /// tone set equals the query's. The denominator is `k`; fewer available
    /// neighbors count as mismatches.
    pub fn skin_tone_consistency(
        &self,
        registry: &Registry,
        token: &str,
        k: usize,
    ) -> Result<f64, EmbeddingError> {
        if !self.contains(token) {
            return Err(EmbeddingError::UnknownToken(token.to_string()));
        }
        if k == 0 {
            return Ok(0.0);
        }
        let query_tones = tone_set(registry, token)
            .filter(|set| !set.is_empty())
            .ok_or_else(|| EmbeddingError::NotToned(token.to_string()))?;

        let neighbors = self.nearest(registry, token, k, NeighborFilter::EmojiOnly)?;
        let matches = neighbors
            .iter()
            .filter(|(t, _)| tone_set(registry, t).as_ref() == Some(&query_tones))
            .count();
        Ok(matches as f64 / k as f64)
    }
}

fn is_emoji_token(registry: &Registry, token: &str) -> bool {
    parse_single(registry, token).is_some_and(|seq| !seq.is_degenerate())
}

fn tone_set(registry: &Registry, token: &str) -> Option<BTreeSet<SkinTone>> {
    parse_single(registry, token).map(|seq| seq.skin_tones().iter().copied().collect())
}

/// Cosine similarity, in [-1, 1] for nonzero vectors.
pub fn cosine(a: &[f64], b: &[f64]) -> f64 {
    let dot: f64 = a.iter().zip(b).map(|(x, y)| x * y).sum();
    let na: f64 = a.iter().map(|x| x * x).sum::<f64>().sqrt();
    let nb: f64 = b.iter().map(|x| x * x).sum::<f64>().sqrt();
    if na == 0.0 || nb == 0.0 {
        0.0
    } else {
        dot / (na * nb)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bundled;

    #[test]
    fn parse_header_and_rows() {
        let data = "4 3\na 1 0 0\nb 0 1 0\nc 0 0 1\nd 1 1 0\n";
        let table = EmbeddingTable::parse(data).unwrap();
        assert_eq!(table.len(), 4);
        assert_eq!(table.dimension(), 3);
    }

    #[test]
    fn short_row_rejected() {
        let data = "1 3\na 1 0\n";
        assert_eq!(
            EmbeddingTable::parse(data).unwrap_err(),
            EmbeddingError::DimensionMismatch {
                line: 2,
                expected: 3,
                found: 2
            }
        );
    }

    #[test]
    fn duplicate_token_rejected() {
        let data = "2 2\na 1 0\na 0 1\n";
        assert!(matches!(
            EmbeddingTable::parse(data).unwrap_err(),
            EmbeddingError::DuplicateToken { line: 3, .. }
        ));
    }

    #[test]
    fn zero_vector_rejected() {
        let data = "1 2\na 0 0\n";
        assert!(matches!(
            EmbeddingTable::parse(data).unwrap_err(),
            EmbeddingError::ZeroVector { line: 2, .. }
        ));
    }

    #[test]
    fn count_mismatch_rejected() {
        let data = "3 2\na 1 0\nb 0 1\n";
        assert!(matches!(
            EmbeddingTable::parse(data).unwrap_err(),
            EmbeddingError::CountMismatch { expected: 3, found: 2 }
        ));
    }

    #[test]
    fn duplicate_vector_ranks_first_with_cosine_one() {
        let reg = bundled::registry();
        let data = "3 2\nquery 3 4\ntwin 3 4\nother 4 -3\n";
        let table = EmbeddingTable::parse(data).unwrap();
        let out = table.nearest(reg, "query", 2, NeighborFilter::All).unwrap();
        assert_eq!(out[0].0, "twin");
        assert!((out[0].1 - 1.0).abs() < 1e-12);
        assert!((out[1].1 - 0.0).abs() < 1e-12);
    }

    #[test]
    fn nearest_matches_brute_force_on_hand_fixture() {
        let reg = bundled::registry();
        let data = "4 3\nq 1 2 2\na 2 4 4\nb 1 0 0\nc -1 -2 -2\n";
        let table = EmbeddingTable::parse(data).unwrap();
        // brute force by hand: cos(q,a)=1, cos(q,b)=1/3, cos(q,c)=-1
        let out = table.nearest(reg, "q", 3, NeighborFilter::All).unwrap();
        assert_eq!(out.iter().map(|(t, _)| t.as_str()).collect::<Vec<_>>(), ["a", "b", "c"]);
        assert!((out[0].1 - 1.0).abs() < 1e-12);
        assert!((out[1].1 - 1.0 / 3.0).abs() < 1e-12);
        assert!((out[2].1 + 1.0).abs() < 1e-12);
        // non-increasing similarity
        assert!(out.windows(2).all(|w| w[0].1 >= w[1].1));
    }

    #[test]
    fn query_never_in_its_own_results() {
        let reg = bundled::registry();
        let data = "2 2\nq 1 0\nr 0 1\n";
        let table = EmbeddingTable::parse(data).unwrap();
        let out = table.nearest(reg, "q", 10, NeighborFilter::All).unwrap();
        assert!(out.iter().all(|(t, _)| t != "q"));
        assert!(table.nearest(reg, "missing", 1, NeighborFilter::All).is_err());
    }

    #[test]
    fn emoji_only_filter_drops_words_and_multi_sequences() {
        let reg = bundled::registry();
        let data = "5 2\n👍🏻 1 0\nword 1 0.01\n👍 1 0.02\n😊😊 1 0.03\n👨\u{200D}👩\u{200D}👦 1 0.04\n";
        let table = EmbeddingTable::parse(data).unwrap();
        let out = table.nearest(reg, "👍🏻", 10, NeighborFilter::EmojiOnly).unwrap();
        let names: Vec<&str> = out.iter().map(|(t, _)| t.as_str()).collect();
        assert!(names.contains(&"👍"));
        assert!(names.contains(&"👨\u{200D}👩\u{200D}👦"));
        assert!(!names.contains(&"word"));
        assert!(!names.contains(&"😊😊"));
    }

    #[test]
    fn consistency_counts_matching_tone_sets() {
        let reg = bundled::registry();
        // twin shares the tone and the direction; stranger has another tone
        let data = "3 2\n👍🏻 1 0\n👋🏻 1 0.001\n👋🏿 0 1\n";
        let table = EmbeddingTable::parse(data).unwrap();
        assert_eq!(table.skin_tone_consistency(reg, "👍🏻", 1).unwrap(), 1.0);
        assert_eq!(table.skin_tone_consistency(reg, "👋🏿", 1).unwrap(), 0.0);
    }

    #[test]
    fn consistency_requires_a_toned_query() {
        let reg = bundled::registry();
        let data = "2 2\n👍 1 0\n👍🏻 0 1\n";
        let table = EmbeddingTable::parse(data).unwrap();
        assert_eq!(
            table.skin_tone_consistency(reg, "👍", 1).unwrap_err(),
            EmbeddingError::NotToned("👍".into())
        );
        assert!(matches!(
            table.skin_tone_consistency(reg, "nope", 1).unwrap_err(),
            EmbeddingError::UnknownToken(_)
        ));
    }

    #[test]
    fn cosine_basics() {
        assert!((cosine(&[1.0, 2.0], &[1.0, 2.0]) - 1.0).abs() < 1e-12);
        assert_eq!(cosine(&[1.0, 0.0], &[0.0, 1.0]), 0.0);
        assert_eq!(cosine(&[1.0, 0.0], &[2.0, 0.0]), cosine(&[2.0, 0.0], &[1.0, 0.0]));
    }
}
