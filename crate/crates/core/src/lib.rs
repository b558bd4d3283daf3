//! Emoji-aware tweet tokenization and analysis.
//!
//! The crate implements the full emoji-sequence grammar (skin tone modifier
//! sequences, ZWJ sequences, flags, keycaps, tag sequences) over a
//! data-driven code point registry, a tweet tokenizer built on it, and a
//! conformance harness that scores tokenization, emoji POS tagging, and
//! sentiment predictions against gold suites.
//!
//! Modules:
//! - [`registry`]: code point classes, planes, skin tones, snapshot loading
//! - [`segmenter`]: greedy leftmost-longest emoji sequence parsing
//! - [`tokenizer`]: word/emoji/hashtag/mention/URL/number/punct tokens
//! - [`cases`]: emoji-use case labels and corpus statistics
//! - [`harness`]: gold suites, scoring, reports, the support matrix
//! - [`baseline`]: retokenization adapter and heuristic emoji POS baseline
//! - [`sentiment`]: emoji polarity lexicon and text+emoji combination
//! - [`embedding`]: token vectors, nearest neighbors, tone consistency
//! - [`bundled`]: the data snapshots and fixture suites shipped in-crate
//!
//! All types are immutable after construction and safe to share across
//! threads; the library holds no global mutable state.

pub mod baseline;
pub mod bundled;
pub mod cases;
pub mod embedding;
pub mod harness;
pub mod registry;
pub mod segmenter;
pub mod sentiment;
pub mod tokenizer;

pub use registry::{plane_of, CodePointClass, Plane, Registry, RegistryError, SkinTone};
pub use segmenter::{
    apply_skin_tone, parse_single, segment_emoji_run, strip_skin_tones, EmojiSequence,
    SequenceKind, ToneError,
};
pub use tokenizer::{normalize_strings, normalize_tokens, tokenize, NormalizeOptions, Token, TokenKind};
