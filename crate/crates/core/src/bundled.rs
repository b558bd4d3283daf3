//! Bundled data: the emoji-property snapshot, default lexicons, and the
//! conformance fixture suites. Everything here is parsed from files shipped
//! with the crate, validated once, and cached.

use std::collections::HashMap;
use std::sync::OnceLock;

use crate::baseline::PosLexicon;
use crate::embedding::EmbeddingTable;
use crate::harness::io::{
    parse_gold_tokens, parse_pos_gold, parse_sentiment_gold, parse_token_predictions,
};
use crate::harness::{CoarsePos, GoldPosExample, GoldTokenExample, SentimentExample};
use crate::registry::Registry;
use crate::sentiment::{ModerationExample, SentimentLexicon, WordValenceScorer};

/// Raw emoji-property snapshot text (also the CLI's default registry).
pub const REGISTRY_SNAPSHOT: &str = include_str!("../data/emoji_property.tsv");

const SENTIMENT_LEXICON: &str = include_str!("../data/sentiment_lexicon.tsv");
const POS_LEXICON: &str = include_str!("../data/pos_lexicon.tsv");
const WORD_VALENCE: &str = include_str!("../data/word_valence.tsv");
const GOLD_TOKENS: &str = include_str!("../data/gold_tokens.jsonl");
const POS_GOLD: &str = include_str!("../data/pos_gold.jsonl");
const POS_MERGED_LIGHT: &str = include_str!("../data/pos_merged_light.jsonl");
const POS_MERGED_HEAVY: &str = include_str!("../data/pos_merged_heavy.jsonl");
const SENTIMENT_SUITE: &str = include_str!("../data/sentiment_suite.jsonl");
const MODERATION_EXAMPLES: &str = include_str!("../data/moderation_examples.jsonl");
const EMBEDDING_FIXTURE: &str = include_str!("../data/embedding_fixture.txt");

/// The registry loaded from the bundled snapshot.
pub fn registry() -> &'static Registry {
    static REGISTRY: OnceLock<Registry> = OnceLock::new();
    REGISTRY.get_or_init(|| {
        Registry::from_snapshot(REGISTRY_SNAPSHOT).expect("bundled snapshot must load")
    })
}

/// The bundled emoji sentiment lexicon (a curated occurrence-fraction set).
pub fn sentiment_lexicon() -> &'static SentimentLexicon {
    static LEXICON: OnceLock<SentimentLexicon> = OnceLock::new();
    LEXICON.get_or_init(|| {
        SentimentLexicon::parse(registry(), SENTIMENT_LEXICON)
            .expect("bundled sentiment lexicon must load")
    })
}

/// The bundled emoji POS lexicon: punctuation-class emojis, default `Noun`.
pub fn pos_lexicon() -> &'static PosLexicon {
    static LEXICON: OnceLock<PosLexicon> = OnceLock::new();
    LEXICON.get_or_init(|| {
        PosLexicon::parse(registry(), POS_LEXICON, CoarsePos::Noun)
            .expect("bundled pos lexicon must load")
    })
}

/// The bundled word-valence scorer backing the default text scorer.
pub fn valence_scorer() -> &'static WordValenceScorer {
    static SCORER: OnceLock<WordValenceScorer> = OnceLock::new();
    SCORER.get_or_init(|| {
        WordValenceScorer::parse(WORD_VALENCE).expect("bundled valence list must load")
    })
}

/// The 100-example gold tokenization suite (10/10/50/10/10/10 across the
/// six cases).
pub fn gold_token_suite() -> Vec<GoldTokenExample> {
    parse_gold_tokens(GOLD_TOKENS).expect("bundled gold token suite must load")
}

/// The 23-example emoji POS suite (6/5/4/4/4 targets across
/// Noun/Adjective/Verb/Adverb/Punctuation).
pub fn pos_gold_suite() -> Vec<GoldPosExample> {
    parse_pos_gold(POS_GOLD).expect("bundled pos suite must load")
}

/// Deliberately merged token predictions for the POS suite: the light
/// variant merges a few emoji-adjacent tokens, the heavy variant merges
/// every emoji into surrounding material.
pub fn pos_merged_predictions() -> Vec<(&'static str, HashMap<String, Vec<String>>)> {
    vec![
        (
            "merged-light",
            parse_token_predictions(POS_MERGED_LIGHT).expect("bundled merged predictions must load"),
        ),
        (
            "merged-heavy",
            parse_token_predictions(POS_MERGED_HEAVY).expect("bundled merged predictions must load"),
        ),
    ]
}

/// Neutral sentences alone and with polar emojis appended, with the
/// expected combined polarity per condition.
pub fn sentiment_suite() -> Vec<SentimentExample> {
    parse_sentiment_gold(SENTIMENT_SUITE).expect("bundled sentiment suite must load")
}

/// Sentences whose polarity an appended emoji moderates, with the expected
/// text+emoji polarity.
pub fn moderation_suite() -> Vec<ModerationExample> {
    MODERATION_EXAMPLES
        .lines()
        .filter(|l| !l.trim().is_empty())
        .map(|l| serde_json::from_str(l).expect("bundled moderation examples must parse"))
        .collect()
}

/// The hand-crafted embedding fixture behind the neighbor analyses.
pub fn embedding_fixture() -> EmbeddingTable {
    EmbeddingTable::parse(EMBEDDING_FIXTURE).expect("bundled embedding fixture must load")
}
