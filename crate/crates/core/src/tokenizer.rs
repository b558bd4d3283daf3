//! Tweet tokenization: words, emoji, hashtags, mentions, URLs, numbers,
//! and punctuation, each with exact byte spans into the input.
//!
//! The tokenizer is total: any Unicode input produces a token stream whose
//! spans, together with whitespace, cover the input exactly.

use std::ops::Range;

use crate::registry::{CodePointClass, Registry};
use crate::segmenter::{segment_emoji_run, EmojiSequence};

/// Lexical class of a token.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TokenKind {
    Word,
    Emoji,
    Hashtag,
    Mention,
    Url,
    Number,
    Punct,
}

/// A tokenizer output unit. `emoji` is present exactly when `kind` is
/// [`TokenKind::Emoji`].
#[derive(Debug, Clone, PartialEq)]
pub struct Token {
    pub text: String,
    pub kind: TokenKind,
    /// Half-open byte-offset interval into the original text.
    pub span: Range<usize>,
    pub emoji: Option<EmojiSequence>,
}

impl Token {
    fn plain(text: &str, kind: TokenKind, span: Range<usize>) -> Token {
        Token {
            text: text.to_string(),
            kind,
            span,
            emoji: None,
        }
    }
}

/// Options for reducing token streams to comparable string sequences.
#[derive(Debug, Clone, Copy)]
pub struct NormalizeOptions {
    /// Drop punctuation tokens entirely.
    pub drop_punct: bool,
    /// Reduce `#hashtag` to `hashtag` so both spellings compare equal.
    pub hashtag_lenient: bool,
    /// Same leniency for `@mentions`.
    pub mention_lenient: bool,
}

impl Default for NormalizeOptions {
    fn default() -> Self {
        NormalizeOptions {
            drop_punct: true,
            hashtag_lenient: true,
            mention_lenient: true,
        }
    }
}

/// Splits text into tokens, in input order, with non-overlapping spans.
///
/// Emoji runs are segmented via [`segment_emoji_run`]; each resulting
/// sequence becomes one token. Unclassifiable symbols become punctuation,
/// so the function never fails.
pub fn tokenize(registry: &Registry, text: &str) -> Vec<Token> {
    let chars: Vec<(usize, char)> = text.char_indices().collect();
    let n = chars.len();
    let mut tokens = Vec::new();
    let mut i = 0;

    while i < n {
        let (pos, c) = chars[i];

        if c.is_whitespace() {
            i += 1;
            continue;
        }

        if let Some(j) = url_end(text, &chars, i) {
            let span = pos..byte_end(text, &chars, j);
            tokens.push(Token::plain(&text[span.clone()], TokenKind::Url, span));
            i = j;
            continue;
        }

        if starts_emoji_run(registry, &chars, i) {
            let j = emoji_run_end(registry, &chars, i);
            let run: Vec<char> = chars[i..j].iter().map(|&(_, c)| c).collect();
            let mut start = pos;
            for seq in segment_emoji_run(registry, &run) {
                let len: usize = seq.codepoints().iter().map(|c| c.len_utf8()).sum();
                let span = start..start + len;
                tokens.push(Token {
                    text: text[span.clone()].to_string(),
                    kind: TokenKind::Emoji,
                    span,
                    emoji: Some(seq),
                });
                start += len;
            }
            i = j;
            continue;
        }

        if (c == '#' || c == '@') && i + 1 < n && is_word_char(registry, chars[i + 1].1) {
            let mut j = i + 1;
            while j < n && is_tag_body_char(registry, chars[j].1) {
                j += 1;
            }
            let kind = if c == '#' { TokenKind::Hashtag } else { TokenKind::Mention };
            let span = pos..byte_end(text, &chars, j);
            tokens.push(Token::plain(&text[span.clone()], kind, span));
            i = j;
            continue;
        }

        if c.is_ascii_digit() {
            if let Some(j) = number_end(registry, &chars, i) {
                let span = pos..byte_end(text, &chars, j);
                tokens.push(Token::plain(&text[span.clone()], TokenKind::Number, span));
                i = j;
                continue;
            }
        }

        if is_word_char(registry, c) {
            let j = word_end(registry, &chars, i);
            let span = pos..byte_end(text, &chars, j);
            tokens.push(Token::plain(&text[span.clone()], TokenKind::Word, span));
            i = j;
            continue;
        }

        // punctuation; identical repeats merge into one token ("!!!")
        let mut j = i + 1;
        while j < n && chars[j].1 == c {
            j += 1;
        }
        let span = pos..byte_end(text, &chars, j);
        tokens.push(Token::plain(&text[span.clone()], TokenKind::Punct, span));
        i = j;
    }

    tokens
}

/// Token texts with punctuation dropped and hashtag/mention markers
/// stripped, per `opts`.
pub fn normalize_tokens(tokens: &[Token], opts: NormalizeOptions) -> Vec<String> {
    let mut out = Vec::new();
    for t in tokens {
        match t.kind {
            TokenKind::Punct if opts.drop_punct => continue,
            TokenKind::Hashtag if opts.hashtag_lenient => out.push(t.text[1..].to_string()),
            TokenKind::Mention if opts.mention_lenient => out.push(t.text[1..].to_string()),
            _ => out.push(t.text.clone()),
        }
    }
    out
}

/// String-level counterpart of [`normalize_tokens`] for externally produced
/// token lists, where kinds are unknown. A token is treated as punctuation
/// when every code point is neither alphanumeric, a combining mark, nor
/// emoji-related per the registry.
pub fn normalize_strings<S: AsRef<str>>(
    registry: &Registry,
    tokens: &[S],
    opts: NormalizeOptions,
) -> Vec<String> {
    let mut out = Vec::new();
    for t in tokens {
        let t = t.as_ref();
        if opts.drop_punct && is_punct_string(registry, t) {
            continue;
        }
        let stripped = t
            .strip_prefix('#')
            .filter(|_| opts.hashtag_lenient)
            .or_else(|| t.strip_prefix('@').filter(|_| opts.mention_lenient));
        match stripped {
            Some(rest) if !rest.is_empty() && rest.chars().all(|c| is_tag_body_char(registry, c)) => {
                out.push(rest.to_string())
            }
            _ => out.push(t.to_string()),
        }
    }
    out
}

fn is_punct_string(registry: &Registry, s: &str) -> bool {
    !s.is_empty()
        && s.chars().all(|c| {
            !c.is_alphanumeric()
                && !is_combining_mark(c)
                && registry.classify(c) == CodePointClass::NonEmoji
        })
}

fn byte_end(text: &str, chars: &[(usize, char)], j: usize) -> usize {
    chars.get(j).map_or(text.len(), |&(pos, _)| pos)
}

/// Word material: letters, digits, and combining marks that are not
/// emoji-related. Registry classification wins over general categories, so
/// e.g. the combining keycap never extends a word. Keycap bases (digits,
/// `#`, `*`) count as plain text here; actual keycap sequences are caught
/// by the emoji-run lookahead before word scanning.
fn is_word_char(registry: &Registry, c: char) -> bool {
    (c.is_alphanumeric() || is_combining_mark(c))
        && matches!(
            registry.classify(c),
            CodePointClass::NonEmoji | CodePointClass::KeycapBase
        )
}

fn is_tag_body_char(registry: &Registry, c: char) -> bool {
    c == '_' || is_word_char(registry, c)
}

fn is_apostrophe(c: char) -> bool {
    c == '\'' || c == '\u{2019}'
}

/// Combining marks from the common mark blocks. Digits and letters carry the
/// interesting script marks for tweet text; exotic scripts degrade to
/// punctuation, which the normalizer drops anyway.
fn is_combining_mark(c: char) -> bool {
    matches!(c as u32,
        0x0300..=0x036F
            | 0x0483..=0x0489
            | 0x0591..=0x05BD
            | 0x05BF
            | 0x05C1..=0x05C2
            | 0x05C4..=0x05C5
            | 0x05C7
            | 0x0610..=0x061A
            | 0x064B..=0x065F
            | 0x0670
            | 0x06D6..=0x06DC
            | 0x06DF..=0x06E4
            | 0x06E7..=0x06E8
            | 0x06EA..=0x06ED
            | 0x0900..=0x0903
            | 0x093A..=0x094F
            | 0x0951..=0x0957
            | 0x0962..=0x0963
            | 0x0E31
            | 0x0E34..=0x0E3A
            | 0x0E47..=0x0E4E
            | 0x1AB0..=0x1AFF
            | 0x1DC0..=0x1DFF
            | 0xFE20..=0xFE2F)
}

fn url_end(text: &str, chars: &[(usize, char)], i: usize) -> Option<usize> {
    let rest = &text.as_bytes()[chars[i].0..];
    let is_url = ["http://", "https://", "www."]
        .iter()
        .any(|p| rest.len() >= p.len() && rest[..p.len()].eq_ignore_ascii_case(p.as_bytes()));
    if !is_url {
        return None;
    }
    let mut j = i;
    while j < chars.len() && !chars[j].1.is_whitespace() {
        j += 1;
    }
    Some(j)
}

fn number_end(registry: &Registry, chars: &[(usize, char)], i: usize) -> Option<usize> {
    let n = chars.len();
    let mut j = i;
    while j < n && chars[j].1.is_ascii_digit() {
        j += 1;
    }
    if j == i {
        return None;
    }
    // internal . or , between digit groups ("3.5", "10,000")
    while j + 1 < n && matches!(chars[j].1, '.' | ',') && chars[j + 1].1.is_ascii_digit() {
        j += 1;
        while j < n && chars[j].1.is_ascii_digit() {
            j += 1;
        }
    }
    // a trailing word character means this was word material ("7Points")
    if j < n && is_word_char(registry, chars[j].1) {
        return None;
    }
    Some(j)
}

fn word_end(registry: &Registry, chars: &[(usize, char)], i: usize) -> usize {
    let n = chars.len();
    let mut j = i + 1;
    while j < n {
        let c = chars[j].1;
        if is_word_char(registry, c) {
            j += 1;
        } else if is_apostrophe(c) && j + 1 < n && is_word_char(registry, chars[j + 1].1) {
            j += 2; // internal apostrophe plus the letter it joins
        } else {
            break;
        }
    }
    j
}

/// True when an emoji run may begin at `i`. Selectors, joiners, and similar
/// trailing material never open a run; keycap bases only do when a combining
/// keycap actually follows.
pub(crate) fn starts_emoji_run(registry: &Registry, chars: &[(usize, char)], i: usize) -> bool {
    match registry.classify(chars[i].1) {
        CodePointClass::EmojiBase
        | CodePointClass::ToneCapableBase
        | CodePointClass::RegionalIndicator
        | CodePointClass::SkinToneModifier => true,
        CodePointClass::KeycapBase => keycap_ahead(registry, chars, i),
        _ => false,
    }
}

/// Exclusive end index (in `chars`) of the emoji run starting at `i`.
pub(crate) fn emoji_run_end(registry: &Registry, chars: &[(usize, char)], i: usize) -> usize {
    let n = chars.len();
    let mut j = i + 1;
    while j < n {
        match registry.classify(chars[j].1) {
            CodePointClass::NonEmoji => break,
            CodePointClass::KeycapBase => {
                if keycap_ahead(registry, chars, j) {
                    j += 1;
                } else {
                    break;
                }
            }
            _ => j += 1,
        }
    }
    j
}

fn keycap_ahead(registry: &Registry, chars: &[(usize, char)], i: usize) -> bool {
    let mut j = i + 1;
    if j < chars.len() && registry.classify(chars[j].1).is_variation_selector() {
        j += 1;
    }
    j < chars.len() && registry.classify(chars[j].1) == CodePointClass::CombiningKeycap
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bundled;
    use crate::segmenter::SequenceKind;

    fn toks(text: &str) -> Vec<Token> {
        tokenize(bundled::registry(), text)
    }

    fn kinds(text: &str) -> Vec<TokenKind> {
        toks(text).iter().map(|t| t.kind).collect()
    }

    fn texts(text: &str) -> Vec<String> {
        toks(text).iter().map(|t| t.text.clone()).collect()
    }

    #[test]
    fn emoji_without_space_is_split_from_words() {
        assert_eq!(
            texts("Emojis😊are a new way"),
            ["Emojis", "😊", "are", "a", "new", "way"]
        );
        assert_eq!(
            kinds("Emojis😊are a new way")[..2],
            [TokenKind::Word, TokenKind::Emoji]
        );
    }

    #[test]
    fn trailing_emoji_attached_to_word() {
        assert_eq!(texts("love❤️"), ["love", "❤️"]);
        assert_eq!(kinds("love❤️"), [TokenKind::Word, TokenKind::Emoji]);
    }

    #[test]
    fn hashtag_stays_intact() {
        assert_eq!(texts("#emoji"), ["#emoji"]);
        assert_eq!(kinds("#emoji"), [TokenKind::Hashtag]);
    }

    #[test]
    fn elongated_word_keeps_spelling() {
        assert_eq!(texts("Yahoooooo!"), ["Yahoooooo", "!"]);
        assert_eq!(kinds("Yahoooooo!"), [TokenKind::Word, TokenKind::Punct]);
    }

    #[test]
    fn repeated_punctuation_merges() {
        assert_eq!(texts("wow!!! ok?!"), ["wow", "!!!", "ok", "?", "!"]);
    }

    #[test]
    fn emoji_cluster_yields_one_token_each() {
        let ts = toks("😄😄😄😄");
        assert_eq!(ts.len(), 4);
        assert!(ts.iter().all(|t| t.kind == TokenKind::Emoji));
        // spans adjacent and covering
        for pair in ts.windows(2) {
            assert_eq!(pair[0].span.end, pair[1].span.start);
        }
    }

    #[test]
    fn zwj_sequence_is_one_token() {
        let ts = toks("family 👨\u{200D}👩\u{200D}👧\u{200D}👦 here");
        assert_eq!(ts.len(), 3);
        assert_eq!(ts[1].kind, TokenKind::Emoji);
        assert_eq!(
            ts[1].emoji.as_ref().unwrap().kind(),
            SequenceKind::ZwjSequence
        );
    }

    #[test]
    fn toned_emoji_is_one_token() {
        let ts = toks("nice👍🏽ok");
        assert_eq!(ts.len(), 3);
        assert_eq!(ts[1].text, "👍🏽");
        assert_eq!(
            ts[1].emoji.as_ref().unwrap().kind(),
            SequenceKind::ModifierSequence
        );
    }

    #[test]
    fn mentions_urls_numbers() {
        assert_eq!(
            kinds("@user check https://x.co/a?b=1 at 10,000 feet"),
            [
                TokenKind::Mention,
                TokenKind::Word,
                TokenKind::Url,
                TokenKind::Word,
                TokenKind::Number,
                TokenKind::Word
            ]
        );
        assert_eq!(texts("see www.example.com now")[1], "www.example.com");
        // bare markers are punctuation
        assert_eq!(kinds("# @"), [TokenKind::Punct, TokenKind::Punct]);
    }

    #[test]
    fn number_vs_word_disambiguation() {
        assert_eq!(kinds("7 Points"), [TokenKind::Number, TokenKind::Word]);
        assert_eq!(kinds("7Points"), [TokenKind::Word]);
        assert_eq!(texts("3.5 stars"), ["3.5", "stars"]);
        assert_eq!(texts("v3.5")[0], "v3");
    }

    #[test]
    fn contractions_hold_together() {
        assert_eq!(texts("I'll don't O'Hara"), ["I'll", "don't", "O'Hara"]);
        // trailing apostrophe is punctuation
        assert_eq!(texts("dogs'"), ["dogs", "'"]);
    }

    #[test]
    fn keycap_emoji_vs_hashtag_and_digits() {
        assert_eq!(kinds("#️⃣"), [TokenKind::Emoji]);
        assert_eq!(kinds("#tag"), [TokenKind::Hashtag]);
        assert_eq!(kinds("1️⃣23"), [TokenKind::Emoji, TokenKind::Number]);
    }

    #[test]
    fn standalone_swatches_tokenize_individually() {
        let ts = toks("tones \u{1F3FB} \u{1F3FC} end");
        assert_eq!(ts.len(), 4);
        assert_eq!(
            ts[1].emoji.as_ref().unwrap().kind(),
            SequenceKind::StandaloneModifier
        );
    }

    #[test]
    fn bare_selector_degrades_to_punct() {
        // a selector with no emoji before it can't start a run
        assert_eq!(kinds("a\u{FE0F}b"), [TokenKind::Word, TokenKind::Punct, TokenKind::Word]);
        assert_eq!(kinds("x\u{200D}"), [TokenKind::Word, TokenKind::Punct]);
    }

    #[test]
    fn combining_marks_extend_words() {
        // decomposed and precomposed spellings give the same kind sequence
        assert_eq!(kinds("Cafe\u{0301}😊"), kinds("Caf\u{E9}😊"));
        assert_eq!(toks("Cafe\u{0301}😊").len(), 2);
    }

    #[test]
    fn spans_cover_input_exactly() {
        let text = "Emojis😊 are #new @here!! 👍🏽👍🏽 www.x.co 3.5";
        let ts = toks(text);
        let mut covered = vec![false; text.len()];
        for t in &ts {
            assert_eq!(&text[t.span.clone()], t.text);
            for b in t.span.clone() {
                assert!(!covered[b], "overlap at byte {b}");
                covered[b] = true;
            }
        }
        for (idx, c) in text.char_indices() {
            if !c.is_whitespace() {
                assert!(covered[idx], "byte {idx} ({c:?}) uncovered");
            }
        }
    }

    #[test]
    fn empty_input_gives_no_tokens() {
        assert!(toks("").is_empty());
        assert!(toks("   \n\t").is_empty());
    }

    #[test]
    fn unspaced_single_emoji_sentence_enumerates_by_hand() {
        let ts = toks("Emojis😊are a new way of expressing emotions! #emoji");
        let expected = [
            "Emojis", "😊", "are", "a", "new", "way", "of", "expressing", "emotions", "!",
            "#emoji",
        ];
        assert_eq!(ts.len(), expected.len());
        for (t, e) in ts.iter().zip(expected) {
            assert_eq!(t.text, e);
        }
        assert_eq!(ts[1].kind, TokenKind::Emoji);
        assert!(whitespace_free(&ts));
    }

    fn whitespace_free(tokens: &[Token]) -> bool {
        tokens.iter().all(|t| !t.text.contains(char::is_whitespace))
    }

    #[test]
    fn normalize_drops_punct_and_strips_markers() {
        let ts = toks("hi! #emoji @you 😊");
        assert_eq!(
            normalize_tokens(&ts, NormalizeOptions::default()),
            ["hi", "emoji", "you", "😊"]
        );
        let strict = NormalizeOptions {
            drop_punct: false,
            hashtag_lenient: false,
            mention_lenient: false,
        };
        assert_eq!(
            normalize_tokens(&ts, strict),
            ["hi", "!", "#emoji", "@you", "😊"]
        );
        assert!(normalize_tokens(&[], NormalizeOptions::default()).is_empty());
    }

    #[test]
    fn normalize_strings_matches_token_level() {
        let reg = bundled::registry();
        let strings = ["hi".to_string(), "!".into(), "#emoji".into(), "😊".into()];
        assert_eq!(
            normalize_strings(reg, &strings, NormalizeOptions::default()),
            ["hi", "emoji", "😊"]
        );
        // a keycap emoji must not lose its '#'
        let keycap = ["#️⃣".to_string()];
        assert_eq!(
            normalize_strings(reg, &keycap, NormalizeOptions::default()),
            ["#️⃣"]
        );
        // bare joiner tokens are emoji material, not punctuation
        let zwj = ["\u{200D}".to_string()];
        assert_eq!(
            normalize_strings(reg, &zwj, NormalizeOptions::default()),
            ["\u{200D}"]
        );
    }
}
