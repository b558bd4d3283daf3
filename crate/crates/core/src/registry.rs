//! Code point classification backed by a versioned emoji-property snapshot.
//!
//! The registry maps code points to emoji-relevant classes via sorted,
//! disjoint ranges loaded from a snapshot file. Everything outside the
//! snapshot classifies as [`CodePointClass::NonEmoji`].

use std::fmt;

use thiserror::Error;

/// Emoji-relevant classification of a single code point.
///
/// Every code point maps to exactly one class. `ToneCapableBase` is also a
/// valid emoji base; use [`CodePointClass::is_emoji_base`] for that check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CodePointClass {
    EmojiBase,
    ToneCapableBase,
    SkinToneModifier,
    ZeroWidthJoiner,
    VariationSelectorEmoji,
    VariationSelectorText,
    RegionalIndicator,
    KeycapBase,
    CombiningKeycap,
    TagChar,
    TagTerminator,
    NonEmoji,
}

impl CodePointClass {
    /// True for classes that can open an emoji unit (plain or tone-capable).
    pub fn is_emoji_base(self) -> bool {
        matches!(self, Self::EmojiBase | Self::ToneCapableBase)
    }

    /// True for either presentation selector.
    pub fn is_variation_selector(self) -> bool {
        matches!(self, Self::VariationSelectorEmoji | Self::VariationSelectorText)
    }

    /// Upper-snake-case spelling used by the snapshot file format.
    pub fn name(self) -> &'static str {
        match self {
            Self::EmojiBase => "EMOJI_BASE",
            Self::ToneCapableBase => "TONE_CAPABLE_BASE",
            Self::SkinToneModifier => "SKIN_TONE_MODIFIER",
            Self::ZeroWidthJoiner => "ZERO_WIDTH_JOINER",
            Self::VariationSelectorEmoji => "VARIATION_SELECTOR_EMOJI",
            Self::VariationSelectorText => "VARIATION_SELECTOR_TEXT",
            Self::RegionalIndicator => "REGIONAL_INDICATOR",
            Self::KeycapBase => "KEYCAP_BASE",
            Self::CombiningKeycap => "COMBINING_KEYCAP",
            Self::TagChar => "TAG_CHAR",
            Self::TagTerminator => "TAG_TERMINATOR",
            Self::NonEmoji => "NON_EMOJI",
        }
    }

    fn from_name(name: &str) -> Option<Self> {
        Some(match name {
            "EMOJI_BASE" => Self::EmojiBase,
            "TONE_CAPABLE_BASE" => Self::ToneCapableBase,
            "SKIN_TONE_MODIFIER" => Self::SkinToneModifier,
            "ZERO_WIDTH_JOINER" => Self::ZeroWidthJoiner,
            "VARIATION_SELECTOR_EMOJI" => Self::VariationSelectorEmoji,
            "VARIATION_SELECTOR_TEXT" => Self::VariationSelectorText,
            "REGIONAL_INDICATOR" => Self::RegionalIndicator,
            "KEYCAP_BASE" => Self::KeycapBase,
            "COMBINING_KEYCAP" => Self::CombiningKeycap,
            "TAG_CHAR" => Self::TagChar,
            "TAG_TERMINATOR" => Self::TagTerminator,
            "NON_EMOJI" => Self::NonEmoji,
            _ => return None,
        })
    }
}

impl fmt::Display for CodePointClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Unicode plane of a code point: code point divided by 0x10000.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Plane(u8);

impl Plane {
    pub fn index(self) -> u8 {
        self.0
    }

    /// Plane 0, the Basic Multilingual Plane.
    pub fn is_basic(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for Plane {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Plane of a code point; plane 0 iff the code point is below 0x10000.
pub fn plane_of(cp: char) -> Plane {
    Plane((cp as u32 / 0x1_0000) as u8)
}

/// One of the five Fitzpatrick skin tone modifier code points.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SkinTone {
    Light,
    MediumLight,
    Medium,
    MediumDark,
    Dark,
}

impl SkinTone {
    pub const ALL: [SkinTone; 5] = [
        SkinTone::Light,
        SkinTone::MediumLight,
        SkinTone::Medium,
        SkinTone::MediumDark,
        SkinTone::Dark,
    ];

    pub fn from_char(c: char) -> Option<SkinTone> {
        Some(match c {
            '\u{1F3FB}' => SkinTone::Light,
            '\u{1F3FC}' => SkinTone::MediumLight,
            '\u{1F3FD}' => SkinTone::Medium,
            '\u{1F3FE}' => SkinTone::MediumDark,
            '\u{1F3FF}' => SkinTone::Dark,
            _ => return None,
        })
    }

    pub fn as_char(self) -> char {
        match self {
            SkinTone::Light => '\u{1F3FB}',
            SkinTone::MediumLight => '\u{1F3FC}',
            SkinTone::Medium => '\u{1F3FD}',
            SkinTone::MediumDark => '\u{1F3FE}',
            SkinTone::Dark => '\u{1F3FF}',
        }
    }

    /// Human-readable label, as used in the stats table rendering.
    pub fn label(self) -> &'static str {
        match self {
            SkinTone::Light => "Light Skin Tone",
            SkinTone::MediumLight => "Medium Light Skin Tone",
            SkinTone::Medium => "Medium Skin Tone",
            SkinTone::MediumDark => "Medium Dark Skin Tone",
            SkinTone::Dark => "Dark Skin Tone",
        }
    }
}

#[derive(Debug, Clone, Copy)]
struct ClassRange {
    start: u32,
    end: u32, // inclusive
    class: CodePointClass,
    line: usize,
}

/// Errors raised while loading an emoji-property snapshot.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum RegistryError {
    #[error("line {line}: malformed record `{text}`")]
    Malformed { line: usize, text: String },
    #[error("line {line}: unknown class name `{name}`")]
    UnknownClass { line: usize, name: String },
    #[error("line {line}: `{text}` is not a valid code point range")]
    BadCodePoint { line: usize, text: String },
    #[error("lines {first} and {second}: overlapping ranges")]
    Overlap { first: usize, second: usize },
}

/// Immutable mapping from code points to [`CodePointClass`], with the version
/// of the snapshot it was loaded from.
#[derive(Debug, Clone)]
pub struct Registry {
    ranges: Vec<ClassRange>,
    version: String,
}

impl Registry {
    /// Parses a snapshot in the `HEX..HEX<TAB>CLASS` line format.
    ///
    /// A comment line `# version: <v>` sets the registry version. Ranges must
    /// be disjoint; overlaps are rejected with both offending line numbers.
    pub fn from_snapshot(data: &str) -> Result<Registry, RegistryError> {
        let mut ranges = Vec::new();
        let mut version = String::from("unversioned");

        for (idx, raw) in data.lines().enumerate() {
            let line = idx + 1;
            let trimmed = raw.trim();
            if trimmed.is_empty() {
                continue;
            }
            if let Some(comment) = trimmed.strip_prefix('#') {
                if let Some(v) = comment.trim().strip_prefix("version:") {
                    version = v.trim().to_string();
                }
                continue;
            }

            let mut fields = trimmed.split('\t').filter(|f| !f.is_empty());
            let (range_text, class_name) = match (fields.next(), fields.next(), fields.next()) {
                (Some(r), Some(c), None) => (r, c),
                _ => {
                    return Err(RegistryError::Malformed {
                        line,
                        text: trimmed.to_string(),
                    })
                }
            };

            let class = CodePointClass::from_name(class_name).ok_or_else(|| {
                RegistryError::UnknownClass {
                    line,
                    name: class_name.to_string(),
                }
            })?;

            let (start, end) = match range_text.split_once("..") {
                Some((lo, hi)) => (parse_cp(lo, line)?, parse_cp(hi, line)?),
                None => {
                    let cp = parse_cp(range_text, line)?;
                    (cp, cp)
                }
            };
            if start > end {
                return Err(RegistryError::BadCodePoint {
                    line,
                    text: range_text.to_string(),
                });
            }

            ranges.push(ClassRange {
                start,
                end,
                class,
                line,
            });
        }

        ranges.sort_by_key(|r| r.start);
        for pair in ranges.windows(2) {
            if pair[1].start <= pair[0].end {
                return Err(RegistryError::Overlap {
                    first: pair[0].line.min(pair[1].line),
                    second: pair[0].line.max(pair[1].line),
                });
            }
        }

        Ok(Registry { ranges, version })
    }

    /// Classifies a code point; anything outside the snapshot is `NonEmoji`.
    pub fn classify(&self, cp: char) -> CodePointClass {
        let cp = cp as u32;
        let idx = self.ranges.partition_point(|r| r.end < cp);
        match self.ranges.get(idx) {
            Some(r) if r.start <= cp => r.class,
            _ => CodePointClass::NonEmoji,
        }
    }

    /// Version string of the snapshot this registry was loaded from.
    pub fn version(&self) -> &str {
        &self.version
    }

    /// All code points carrying the given class, in ascending order.
    pub fn codepoints_of(&self, class: CodePointClass) -> Vec<char> {
        let mut out = Vec::new();
        for r in &self.ranges {
            if r.class == class {
                for cp in r.start..=r.end {
                    if let Some(c) = char::from_u32(cp) {
                        out.push(c);
                    }
                }
            }
        }
        out
    }
}

fn parse_cp(text: &str, line: usize) -> Result<u32, RegistryError> {
    let value = u32::from_str_radix(text.trim(), 16).map_err(|_| RegistryError::BadCodePoint {
        line,
        text: text.to_string(),
    })?;
    if value > 0x10_FFFF {
        return Err(RegistryError::BadCodePoint {
            line,
            text: text.to_string(),
        });
    }
    Ok(value)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bundled;

    #[test]
    fn skin_tone_line_classifies_five_modifiers() {
        let reg = Registry::from_snapshot("1F3FB..1F3FF\tSKIN_TONE_MODIFIER").unwrap();
        for cp in 0x1F3FB..=0x1F3FF {
            let c = char::from_u32(cp).unwrap();
            assert_eq!(reg.classify(c), CodePointClass::SkinToneModifier);
            // cross-check against the bundled snapshot
            assert_eq!(bundled::registry().classify(c), CodePointClass::SkinToneModifier);
        }
        assert_eq!(reg.classify('\u{1F3FA}'), CodePointClass::NonEmoji);
    }

    #[test]
    fn empty_snapshot_is_all_non_emoji() {
        let reg = Registry::from_snapshot("").unwrap();
        for c in ['a', '😊', '\u{200D}', '#'] {
            assert_eq!(reg.classify(c), CodePointClass::NonEmoji);
        }
    }

    #[test]
    fn overlapping_ranges_report_both_lines() {
        let data = "1F600..1F64F\tEMOJI_BASE\n1F610..1F620\tTONE_CAPABLE_BASE";
        match Registry::from_snapshot(data) {
            Err(RegistryError::Overlap { first, second }) => {
                assert_eq!((first, second), (1, 2));
            }
            other => panic!("expected overlap error, got {other:?}"),
        }
    }

    #[test]
    fn malformed_and_unknown_lines_carry_line_numbers() {
        let err = Registry::from_snapshot("# ok\nnot a record").unwrap_err();
        assert!(matches!(err, RegistryError::Malformed { line: 2, .. }));

        let err = Registry::from_snapshot("1F600\tNOT_A_CLASS").unwrap_err();
        assert!(matches!(err, RegistryError::UnknownClass { line: 1, .. }));

        let err = Registry::from_snapshot("ZZZZ\tEMOJI_BASE").unwrap_err();
        assert!(matches!(err, RegistryError::BadCodePoint { line: 1, .. }));
    }

    #[test]
    fn bundled_snapshot_classifies_known_code_points() {
        let reg = bundled::registry();
        assert_eq!(reg.classify('\u{200D}'), CodePointClass::ZeroWidthJoiner);
        assert_eq!(reg.classify('A'), CodePointClass::NonEmoji);
        assert_eq!(reg.classify('\u{1F3FD}'), CodePointClass::SkinToneModifier);
        assert_eq!(reg.classify('👍'), CodePointClass::ToneCapableBase);
        assert_eq!(reg.classify('😂'), CodePointClass::EmojiBase);
        assert_eq!(reg.classify('☺'), CodePointClass::EmojiBase);
        assert_eq!(reg.classify('#'), CodePointClass::KeycapBase);
        assert_eq!(reg.classify('\u{20E3}'), CodePointClass::CombiningKeycap);
        assert_eq!(reg.classify('\u{1F1FA}'), CodePointClass::RegionalIndicator);
        assert_eq!(reg.classify('\u{E0067}'), CodePointClass::TagChar);
        assert_eq!(reg.classify('\u{E007F}'), CodePointClass::TagTerminator);
        assert_eq!(reg.classify('\u{FE0F}'), CodePointClass::VariationSelectorEmoji);
        assert_eq!(reg.classify('\u{FE0E}'), CodePointClass::VariationSelectorText);
    }

    #[test]
    fn bundled_snapshot_has_exactly_five_skin_tones() {
        let tones = bundled::registry().codepoints_of(CodePointClass::SkinToneModifier);
        assert_eq!(tones.len(), 5);
        for c in tones {
            assert!(SkinTone::from_char(c).is_some());
        }
    }

    #[test]
    fn plane_of_divides_by_0x10000() {
        assert_eq!(plane_of('\u{263A}').index(), 0);
        assert!(plane_of('\u{263A}').is_basic());
        assert_eq!(plane_of('\u{1F600}').index(), 1);
        assert_eq!(plane_of('\u{E0062}').index(), 14);
    }

    #[test]
    fn classify_is_deterministic() {
        let reg = bundled::registry();
        for c in ['😊', 'x', '\u{1F3FB}', '\u{10FFFF}'] {
            assert_eq!(reg.classify(c), reg.classify(c));
        }
    }

    #[test]
    fn tone_capable_is_subset_of_emoji_base() {
        assert!(CodePointClass::ToneCapableBase.is_emoji_base());
        assert!(CodePointClass::EmojiBase.is_emoji_base());
        assert!(!CodePointClass::SkinToneModifier.is_emoji_base());
    }
}
