//! Retokenization adapter and a heuristic emoji POS baseline.
//!
//! `retokenize` splits tokens that mix emoji and non-emoji material, so a
//! unified tokenization can be fed to any tagger. The baseline tagger looks
//! emojis up in a small class lexicon and defaults to `Noun`, the strongest
//! single-class guess for emoji targets.

use std::collections::HashMap;

use crate::harness::{CoarsePos, TaggedToken};
use crate::registry::Registry;
use crate::segmenter::{segment_emoji_run, strip_skin_tones, EmojiSequence, SequenceKind};
use crate::sentiment::LexiconError;
use crate::tokenizer::{emoji_run_end, starts_emoji_run};

/// Emoji-to-class lexicon with a default class for misses. Keys are
/// tone-stripped code point sequences.
#[derive(Debug, Clone)]
pub struct PosLexicon {
    entries: HashMap<String, CoarsePos>,
    default_class: CoarsePos,
}

impl PosLexicon {
    /// An empty lexicon: every emoji gets `default_class`.
    pub fn all_default(default_class: CoarsePos) -> PosLexicon {
        PosLexicon {
            entries: HashMap::new(),
            default_class,
        }
    }

    /// Parses TSV rows `emoji<TAB>CLASS` (`#` comments). Classes are the
    /// five gold-eligible names in upper snake case; `OTHER` is rejected.
    pub fn parse(
        registry: &Registry,
        data: &str,
        default_class: CoarsePos,
    ) -> Result<PosLexicon, LexiconError> {
        let mut entries = HashMap::new();
        for (idx, raw) in data.lines().enumerate() {
            let line = idx + 1;
            let trimmed = raw.trim();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            let Some((emoji, class_name)) = trimmed.split_once('\t') else {
                return Err(LexiconError::Malformed {
                    line,
                    text: trimmed.to_string(),
                });
            };
            let class = CoarsePos::from_upper_name(class_name.trim()).ok_or_else(|| {
                LexiconError::UnknownClass {
                    line,
                    name: class_name.trim().to_string(),
                }
            })?;
            let seq = crate::segmenter::parse_single(registry, emoji.trim()).ok_or_else(|| {
                LexiconError::InvalidEmoji {
                    line,
                    text: emoji.to_string(),
                }
            })?;
            let key = strip_skin_tones(registry, &seq).text();
            if entries.insert(key, class).is_some() {
                return Err(LexiconError::DuplicateEmoji {
                    line,
                    emoji: emoji.to_string(),
                });
            }
        }
        Ok(PosLexicon {
            entries,
            default_class,
        })
    }

    pub fn default_class(&self) -> CoarsePos {
        self.default_class
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

/// Class of an emoji sequence under the lexicon: whole tone-stripped key
/// first; a ZWJ sequence falls back to its first element before the default.
pub fn heuristic_emoji_pos(
    lexicon: &PosLexicon,
    registry: &Registry,
    seq: &EmojiSequence,
) -> CoarsePos {
    let key = strip_skin_tones(registry, seq).text();
    if let Some(&class) = lexicon.entries.get(&key) {
        return class;
    }
    if seq.kind() == SequenceKind::ZwjSequence {
        let first: String = key.chars().take(1).collect();
        if let Some(&class) = lexicon.entries.get(&first) {
            return class;
        }
    }
    lexicon.default_class
}

/// Splits every token mixing emoji and non-emoji material at class
/// boundaries. Emoji runs are segmented into one token per sequence;
/// internal whitespace separates text parts; pure-text tokens pass through
/// unchanged. Idempotent, and the concatenated non-whitespace content of
/// the stream never changes.
pub fn retokenize<S: AsRef<str>>(registry: &Registry, tokens: &[S]) -> Vec<String> {
    let mut out = Vec::new();
    for token in tokens {
        split_token(registry, token.as_ref(), &mut out);
    }
    out
}

fn split_token(registry: &Registry, token: &str, out: &mut Vec<String>) {
    let chars: Vec<(usize, char)> = token.char_indices().collect();
    let n = chars.len();
    let mut text_start: Option<usize> = None;
    let mut i = 0;

    let flush = |from: Option<usize>, to: usize, out: &mut Vec<String>| {
        if let Some(s) = from {
            let end = if to < n { chars[to].0 } else { token.len() };
            out.push(token[chars[s].0..end].to_string());
        }
    };

    while i < n {
        let c = chars[i].1;
        if c.is_whitespace() {
            flush(text_start.take(), i, out);
            i += 1;
        } else if starts_emoji_run(registry, &chars, i) {
            flush(text_start.take(), i, out);
            let j = emoji_run_end(registry, &chars, i);
            let run: Vec<char> = chars[i..j].iter().map(|&(_, c)| c).collect();
            for seq in segment_emoji_run(registry, &run) {
                out.push(seq.text());
            }
            i = j;
        } else {
            text_start.get_or_insert(i);
            i += 1;
        }
    }
    flush(text_start, n, out);
}

/// Tags a token stream for the harness prediction format, in Universal POS
/// tags: a token that is exactly one emoji sequence gets its heuristic
/// class tag; everything else gets `X`.
pub fn tag_tokens<S: AsRef<str>>(
    registry: &Registry,
    lexicon: &PosLexicon,
    tokens: &[S],
) -> Vec<TaggedToken> {
    tokens
        .iter()
        .map(|token| {
            let token = token.as_ref();
            let tag = match crate::segmenter::parse_single(registry, token) {
                Some(seq) => heuristic_emoji_pos(lexicon, registry, &seq).upos_tag(),
                None => "X",
            };
            TaggedToken::new(token, tag)
        })
        .collect()
}
