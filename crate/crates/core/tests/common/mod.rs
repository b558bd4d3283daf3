//! Shared test helpers: an independent reference parser for emoji runs and
//! random input generators.

// not every test target uses every helper
#![allow(dead_code)]

use emojiseg::registry::{CodePointClass, Registry, SkinTone};
use emojiseg::segmenter::SequenceKind;
use rand::prelude::*;

/// Reference parse result, mirroring the segmenter's observable fields.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleSeq {
    pub codepoints: Vec<char>,
    pub kind: SequenceKind,
    pub degenerate: bool,
}

/// Exhaustive longest-match reference parser: at each position it tests
/// every prefix length from longest to shortest against a generate-and-test
/// validity check, taking the first full production it finds. Deliberately
/// brute-force and structured nothing like the production scanner.
pub fn oracle_segment(reg: &Registry, cps: &[char]) -> Vec<OracleSeq> {
    let mut out = Vec::new();
    let mut i = 0;
    while i < cps.len() {
        let rest = &cps[i..];
        let mut taken = None;
        for len in (1..=rest.len()).rev() {
            if let Some(kind) = valid_sequence(reg, &rest[..len]) {
                taken = Some((len, kind, false));
                break;
            }
        }
        let (len, kind, degenerate) = taken.unwrap_or((1, SequenceKind::Basic, true));
        out.push(OracleSeq {
            codepoints: rest[..len].to_vec(),
            kind,
            degenerate,
        });
        i += len;
    }
    out
}

/// Does the entire slice form exactly one grammar production?
pub fn valid_sequence(reg: &Registry, s: &[char]) -> Option<SequenceKind> {
    if is_flag(reg, s) {
        return Some(SequenceKind::FlagSequence);
    }
    if is_keycap(reg, s) {
        return Some(SequenceKind::KeycapSequence);
    }
    if is_tag(reg, s) {
        return Some(SequenceKind::TagSequence);
    }
    if let Some(units) = count_joined_units(reg, s) {
        if units >= 2 {
            return Some(SequenceKind::ZwjSequence);
        }
        let toned = s.iter().any(|&c| SkinTone::from_char(c).is_some());
        return Some(if toned {
            SequenceKind::ModifierSequence
        } else {
            SequenceKind::Basic
        });
    }
    if s.len() == 1 {
        if reg.classify(s[0]) == CodePointClass::SkinToneModifier {
            return Some(SequenceKind::StandaloneModifier);
        }
        // an unpaired regional indicator stands alone as a plain sequence
        if reg.classify(s[0]) == CodePointClass::RegionalIndicator {
            return Some(SequenceKind::Basic);
        }
    }
    None
}

fn is_unit(reg: &Registry, s: &[char]) -> bool {
    let tone_ok = |b: char| reg.classify(b) == CodePointClass::ToneCapableBase;
    let vs = |c: char| reg.classify(c).is_variation_selector();
    let tone = |c: char| reg.classify(c) == CodePointClass::SkinToneModifier;
    match *s {
        [b] => reg.classify(b).is_emoji_base(),
        [b, x] => reg.classify(b).is_emoji_base() && (vs(x) || (tone_ok(b) && tone(x))),
        [b, v, t] => tone_ok(b) && vs(v) && tone(t),
        _ => false,
    }
}

/// Number of units when `s` parses exactly as `unit (ZWJ unit)*`, trying
/// every split; `None` when it does not.
fn count_joined_units(reg: &Registry, s: &[char]) -> Option<usize> {
    for k in 1..=s.len() {
        if !is_unit(reg, &s[..k]) {
            continue;
        }
        if k == s.len() {
            return Some(1);
        }
        if reg.classify(s[k]) == CodePointClass::ZeroWidthJoiner {
            if let Some(n) = count_joined_units(reg, &s[k + 1..]) {
                return Some(n + 1);
            }
        }
    }
    None
}

fn is_flag(reg: &Registry, s: &[char]) -> bool {
    s.len() == 2 && s.iter().all(|&c| reg.classify(c) == CodePointClass::RegionalIndicator)
}

fn is_keycap(reg: &Registry, s: &[char]) -> bool {
    match *s {
        [k, c] => {
            reg.classify(k) == CodePointClass::KeycapBase
                && reg.classify(c) == CodePointClass::CombiningKeycap
        }
        [k, v, c] => {
            reg.classify(k) == CodePointClass::KeycapBase
                && reg.classify(v).is_variation_selector()
                && reg.classify(c) == CodePointClass::CombiningKeycap
        }
        _ => false,
    }
}

fn is_tag(reg: &Registry, s: &[char]) -> bool {
    s.len() >= 3
        && reg.classify(s[0]).is_emoji_base()
        && s[1..s.len() - 1]
            .iter()
            .all(|&c| reg.classify(c) == CodePointClass::TagChar)
        && reg.classify(s[s.len() - 1]) == CodePointClass::TagTerminator
}

/// Pool of emoji-related code points, weighted toward structural variety.
pub fn random_emoji_run<R: Rng>(rng: &mut R, max_len: usize) -> Vec<char> {
    const TONE_CAPABLE: [char; 8] = ['👍', '👋', '👏', '🙌', '👨', '👩', '✌', '\u{261D}'];
    const PLAIN_BASE: [char; 8] = ['😂', '😊', '🌟', '🤖', '❤', '☺', '🏴', '🚗'];
    const TONES: [char; 5] = ['\u{1F3FB}', '\u{1F3FC}', '\u{1F3FD}', '\u{1F3FE}', '\u{1F3FF}'];
    const REGIONAL: [char; 4] = ['\u{1F1FA}', '\u{1F1F8}', '\u{1F1E9}', '\u{1F1EA}'];
    const KEYCAP: [char; 4] = ['#', '*', '0', '7'];
    const TAG: [char; 3] = ['\u{E0067}', '\u{E0062}', '\u{E0073}'];

    let len = rng.random_range(1..=max_len);
    (0..len)
        .map(|_| match rng.random_range(0..100) {
            0..=24 => TONE_CAPABLE[rng.random_range(0..TONE_CAPABLE.len())],
            25..=44 => PLAIN_BASE[rng.random_range(0..PLAIN_BASE.len())],
            45..=59 => TONES[rng.random_range(0..TONES.len())],
            60..=74 => '\u{200D}',
            75..=81 => '\u{FE0F}',
            82..=83 => '\u{FE0E}',
            84..=89 => REGIONAL[rng.random_range(0..REGIONAL.len())],
            90..=93 => KEYCAP[rng.random_range(0..KEYCAP.len())],
            94 => '\u{20E3}',
            95..=97 => TAG[rng.random_range(0..TAG.len())],
            _ => '\u{E007F}',
        })
        .collect()
}

/// Arbitrary Unicode text mixing plain words, emoji material, digits,
/// punctuation, and raw scalar values from several planes.
pub fn random_text<R: Rng>(rng: &mut R, max_len: usize) -> String {
    const EMOJIISH: [char; 12] = [
        '😊', '😄', '👍', '\u{1F3FB}', '\u{200D}', '\u{FE0F}', '❤', '\u{1F1FA}', '#', '@',
        '\u{20E3}', '🏴',
    ];
    let len = rng.random_range(0..=max_len);
    (0..len)
        .map(|_| match rng.random_range(0..100) {
            0..=34 => rng.random_range(b'a'..=b'z') as char,
            35..=44 => ' ',
            45..=49 => rng.random_range(b'0'..=b'9') as char,
            50..=59 => *EMOJIISH.get(rng.random_range(0..EMOJIISH.len())).unwrap(),
            60..=69 => ['!', '?', '.', ',', '\'', '-', '"', '~'][rng.random_range(0..8)],
            70..=74 => '\u{0301}',
            75..=79 => ['\n', '\t', '\u{00A0}'][rng.random_range(0..3)],
            _ => loop {
                let cp = rng.random_range(0u32..=0x10FFFF);
                if let Some(c) = char::from_u32(cp) {
                    break c;
                }
            },
        })
        .collect()
}
