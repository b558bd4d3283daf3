//! Greedy leftmost-longest parsing of emoji code point runs into sequences.
//!
//! The grammar, longest match winning at each position:
//!
//! ```text
//! sequence := flag | keycap | tag | zwj | unit | lone_modifier
//! zwj      := unit (ZWJ unit)+
//! unit     := base (VariationSelector)? (SkinToneModifier if base is tone-capable)?
//! flag     := RegionalIndicator RegionalIndicator
//! keycap   := KeycapBase (VariationSelector)? CombiningKeycap
//! tag      := base TagChar+ TagTerminator
//! lone_modifier := SkinToneModifier
//! ```
//!
//! Parsing never fails: a code point that fits no production is emitted as a
//! single-code-point sequence flagged degenerate. An unpaired regional
//! indicator becomes a plain `Basic` sequence.

use std::fmt;

use thiserror::Error;

use crate::registry::{plane_of, CodePointClass, Plane, Registry, SkinTone};

/// Structural kind of a parsed emoji sequence.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SequenceKind {
    Basic,
    ModifierSequence,
    ZwjSequence,
    FlagSequence,
    KeycapSequence,
    TagSequence,
    StandaloneModifier,
}

/// A parsed emoji unit: one or more code points forming a single sequence.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EmojiSequence {
    codepoints: Vec<char>,
    kind: SequenceKind,
    skin_tones: Vec<SkinTone>,
    max_plane: Plane,
    degenerate: bool,
}

impl EmojiSequence {
    fn new(codepoints: Vec<char>, kind: SequenceKind, degenerate: bool) -> EmojiSequence {
        debug_assert!(!codepoints.is_empty());
        let skin_tones = codepoints.iter().filter_map(|&c| SkinTone::from_char(c)).collect();
        let max_plane = codepoints.iter().map(|&c| plane_of(c)).max().unwrap();
        EmojiSequence {
            codepoints,
            kind,
            skin_tones,
            max_plane,
            degenerate,
        }
    }

    pub fn codepoints(&self) -> &[char] {
        &self.codepoints
    }

    /// Pure accessor for the structural kind.
    pub fn kind(&self) -> SequenceKind {
        self.kind
    }

    /// Skin tone modifiers present, in sequence order. A modifier sequence
    /// carries exactly one; a ZWJ sequence may carry several.
    pub fn skin_tones(&self) -> &[SkinTone] {
        &self.skin_tones
    }

    /// Highest Unicode plane among the constituent code points.
    pub fn max_plane(&self) -> Plane {
        self.max_plane
    }

    /// True when the sequence was emitted by the degenerate-input fallback
    /// (e.g. a dangling ZWJ) rather than by a grammar production.
    pub fn is_degenerate(&self) -> bool {
        self.degenerate
    }

    pub fn text(&self) -> String {
        self.codepoints.iter().collect()
    }

    /// `U+XXXX`-notation of the code points, space-joined.
    pub fn notation(&self) -> String {
        let parts: Vec<String> = self
            .codepoints
            .iter()
            .map(|&c| format!("U+{:04X}", c as u32))
            .collect();
        parts.join(" ")
    }

    /// Code points of the sequence that act as bases rather than as
    /// joiners, selectors, tones, or tag material.
    pub fn base_codepoints(&self, registry: &Registry) -> Vec<char> {
        self.codepoints
            .iter()
            .copied()
            .filter(|&c| {
                matches!(
                    registry.classify(c),
                    CodePointClass::EmojiBase
                        | CodePointClass::ToneCapableBase
                        | CodePointClass::KeycapBase
                        | CodePointClass::RegionalIndicator
                )
            })
            .collect()
    }
}

impl fmt::Display for EmojiSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.text())
    }
}

/// Errors from [`apply_skin_tone`].
#[derive(Debug, Error, PartialEq, Eq)]
pub enum ToneError {
    #[error("U+{0:04X} is not one of the five skin tone modifiers")]
    InvalidTone(u32),
    #[error("`{0}` does not accept a skin tone modifier")]
    NotToneCapable(String),
}

/// Parses a run of emoji-related code points into complete sequences.
///
/// Greedy leftmost-longest: at each position the longest matching grammar
/// production is consumed. Concatenating the output code points always
/// reproduces the input exactly, and no input makes this function fail.
pub fn segment_emoji_run(registry: &Registry, cps: &[char]) -> Vec<EmojiSequence> {
    let scanner = Scanner { registry, cps };
    let mut out = Vec::new();
    let mut i = 0;
    while i < cps.len() {
        let (len, kind, degenerate) = scanner.longest_match(i);
        out.push(EmojiSequence::new(cps[i..i + len].to_vec(), kind, degenerate));
        i += len;
    }
    out
}

/// Parses `text` as exactly one emoji sequence.
///
/// Returns `None` when any code point classifies as `NonEmoji` or when the
/// text segments into more than one sequence.
pub fn parse_single(registry: &Registry, text: &str) -> Option<EmojiSequence> {
    let cps: Vec<char> = text.chars().collect();
    if cps.is_empty() || cps.iter().any(|&c| registry.classify(c) == CodePointClass::NonEmoji) {
        return None;
    }
    let mut seqs = segment_emoji_run(registry, &cps);
    if seqs.len() == 1 {
        seqs.pop()
    } else {
        None
    }
}

/// Builds a modifier sequence from a basic, tone-capable sequence.
///
/// Any presentation selector on the base is dropped, matching the canonical
/// modifier-sequence form. The input sequence is left untouched.
pub fn apply_skin_tone(
    registry: &Registry,
    seq: &EmojiSequence,
    tone: char,
) -> Result<EmojiSequence, ToneError> {
    if SkinTone::from_char(tone).is_none() {
        return Err(ToneError::InvalidTone(tone as u32));
    }
    if seq.kind != SequenceKind::Basic || seq.degenerate {
        return Err(ToneError::NotToneCapable(seq.text()));
    }
    let base = seq.codepoints[0];
    if registry.classify(base) != CodePointClass::ToneCapableBase {
        return Err(ToneError::NotToneCapable(seq.text()));
    }
    let mut seqs = segment_emoji_run(registry, &[base, tone]);
    debug_assert_eq!(seqs.len(), 1);
    Ok(seqs.pop().unwrap())
}

/// Removes every skin tone modifier and recomputes the sequence kind.
///
/// A standalone modifier has nothing left once its tone is removed, so it is
/// returned unchanged. Sequences without tones come back identical.
pub fn strip_skin_tones(registry: &Registry, seq: &EmojiSequence) -> EmojiSequence {
    if seq.skin_tones.is_empty() || seq.kind == SequenceKind::StandaloneModifier {
        return seq.clone();
    }
    let remaining: Vec<char> = seq
        .codepoints
        .iter()
        .copied()
        .filter(|&c| SkinTone::from_char(c).is_none())
        .collect();
    let mut seqs = segment_emoji_run(registry, &remaining);
    debug_assert_eq!(seqs.len(), 1, "tone removal must preserve sequence unity");
    seqs.pop().unwrap()
}

struct Scanner<'a> {
    registry: &'a Registry,
    cps: &'a [char],
}

impl Scanner<'_> {
    fn class(&self, i: usize) -> CodePointClass {
        self.cps
            .get(i)
            .map_or(CodePointClass::NonEmoji, |&c| self.registry.classify(c))
    }

    /// `base (VariationSelector)? (SkinToneModifier if tone-capable)?`
    /// Returns (length, has_tone).
    fn unit(&self, i: usize) -> Option<(usize, bool)> {
        let base = self.class(i);
        if !base.is_emoji_base() {
            return None;
        }
        let mut len = 1;
        if self.class(i + len).is_variation_selector() {
            len += 1;
        }
        let mut toned = false;
        if base == CodePointClass::ToneCapableBase
            && self.class(i + len) == CodePointClass::SkinToneModifier
        {
            len += 1;
            toned = true;
        }
        Some((len, toned))
    }

    /// `unit (ZWJ unit)*`, greedy. Returns (length, joined, any_tone).
    fn unit_chain(&self, i: usize) -> Option<(usize, bool, bool)> {
        let (first, mut toned) = self.unit(i)?;
        let mut len = first;
        let mut joined = false;
        while self.class(i + len) == CodePointClass::ZeroWidthJoiner {
            match self.unit(i + len + 1) {
                Some((next, t)) => {
                    len += 1 + next;
                    joined = true;
                    toned |= t;
                }
                None => break, // a ZWJ is never last in a sequence
            }
        }
        Some((len, joined, toned))
    }

    fn flag(&self, i: usize) -> Option<usize> {
        if self.class(i) == CodePointClass::RegionalIndicator
            && self.class(i + 1) == CodePointClass::RegionalIndicator
        {
            Some(2)
        } else {
            None
        }
    }

    fn keycap(&self, i: usize) -> Option<usize> {
        if self.class(i) != CodePointClass::KeycapBase {
            return None;
        }
        let mut len = 1;
        if self.class(i + len).is_variation_selector() {
            len += 1;
        }
        if self.class(i + len) == CodePointClass::CombiningKeycap {
            Some(len + 1)
        } else {
            None
        }
    }

    fn tag(&self, i: usize) -> Option<usize> {
        if !self.class(i).is_emoji_base() {
            return None;
        }
        let mut len = 1;
        while self.class(i + len) == CodePointClass::TagChar {
            len += 1;
        }
        if len > 1 && self.class(i + len) == CodePointClass::TagTerminator {
            Some(len + 1)
        } else {
            None
        }
    }

    fn longest_match(&self, i: usize) -> (usize, SequenceKind, bool) {
        let mut best: Option<(usize, SequenceKind)> = None;
        let mut consider = |cand: Option<(usize, SequenceKind)>| {
            if let Some((len, kind)) = cand {
                if best.is_none_or(|(b, _)| len > b) {
                    best = Some((len, kind));
                }
            }
        };

        consider(self.flag(i).map(|l| (l, SequenceKind::FlagSequence)));
        consider(self.keycap(i).map(|l| (l, SequenceKind::KeycapSequence)));
        consider(self.tag(i).map(|l| (l, SequenceKind::TagSequence)));
        consider(self.unit_chain(i).map(|(l, joined, toned)| {
            let kind = if joined {
                SequenceKind::ZwjSequence
            } else if toned {
                SequenceKind::ModifierSequence
            } else {
                SequenceKind::Basic
            };
            (l, kind)
        }));
        if self.class(i) == CodePointClass::SkinToneModifier {
            consider(Some((1, SequenceKind::StandaloneModifier)));
        }

        if let Some((len, kind)) = best {
            return (len, kind, false);
        }
        // Unpaired regional indicator: a displayable letter symbol, not an error.
        if self.class(i) == CodePointClass::RegionalIndicator {
            return (1, SequenceKind::Basic, false);
        }
        // Anything else (dangling ZWJ, bare selector, stray tag char, ...)
        // becomes its own flagged single-code-point sequence.
        (1, SequenceKind::Basic, true)
    }
}
