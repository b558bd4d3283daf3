//! Tweet-level emoji-use case labeling and corpus statistics.
//!
//! Labels describe how emojis appear in a tweet: single vs. multiple,
//! spaced vs. attached vs. clustered, skin tones, planes, and ZWJ use.
//! Standalone tone swatches count for skin-tone presence but not as emojis
//! for the single/multiple split.

use std::collections::HashSet;

use crate::registry::{Registry, SkinTone};
use crate::segmenter::SequenceKind;
use crate::tokenizer::{tokenize, Token, TokenKind};

/// Per-tone occurrence counters.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct ToneCounts {
    pub light: usize,
    pub medium_light: usize,
    pub medium: usize,
    pub medium_dark: usize,
    pub dark: usize,
}

impl ToneCounts {
    pub fn get(&self, tone: SkinTone) -> usize {
        match tone {
            SkinTone::Light => self.light,
            SkinTone::MediumLight => self.medium_light,
            SkinTone::Medium => self.medium,
            SkinTone::MediumDark => self.medium_dark,
            SkinTone::Dark => self.dark,
        }
    }

    fn add(&mut self, tone: SkinTone, n: usize) {
        match tone {
            SkinTone::Light => self.light += n,
            SkinTone::MediumLight => self.medium_light += n,
            SkinTone::Medium => self.medium += n,
            SkinTone::MediumDark => self.medium_dark += n,
            SkinTone::Dark => self.dark += n,
        }
    }

    pub fn total(&self) -> usize {
        SkinTone::ALL.iter().map(|&t| self.get(t)).sum()
    }
}

/// Case flags for one tweet. The `single_*` and `multi_*` flags are mutually
/// exclusive; at least one flag is set exactly when the tweet contains an
/// emoji token.
#[derive(Debug, Clone, Default, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct CaseLabels {
    pub single_emoji_spaced: bool,
    pub single_emoji_unspaced: bool,
    pub multi_positions: bool,
    pub multi_spaced: bool,
    pub multi_cluster: bool,
    pub skin_tone_present: bool,
    pub bmp_emoji_present: bool,
    pub non_bmp_emoji_present: bool,
    pub zwj_present: bool,
    pub tone_counts: ToneCounts,
}

impl CaseLabels {
    pub fn any_single(&self) -> bool {
        self.single_emoji_spaced || self.single_emoji_unspaced
    }

    pub fn any_multi(&self) -> bool {
        self.multi_positions || self.multi_spaced || self.multi_cluster
    }

    pub fn any(&self) -> bool {
        self.any_single()
            || self.any_multi()
            || self.skin_tone_present
            || self.bmp_emoji_present
            || self.non_bmp_emoji_present
            || self.zwj_present
    }
}

/// Labels a tweet with the emoji-use case taxonomy.
pub fn classify_cases(registry: &Registry, text: &str) -> CaseLabels {
    let tokens = tokenize(registry, text);
    let mut labels = CaseLabels::default();

    let emoji_idx: Vec<usize> = (0..tokens.len())
        .filter(|&i| tokens[i].kind == TokenKind::Emoji)
        .collect();
    if emoji_idx.is_empty() {
        return labels;
    }

    // "counted" emojis drive the single/multiple split: standalone tone
    // swatches and degenerate leftovers are not emojis in that sense.
    let counted_idx: Vec<usize> = emoji_idx
        .iter()
        .copied()
        .filter(|&i| {
            let seq = tokens[i].emoji.as_ref().unwrap();
            seq.kind() != SequenceKind::StandaloneModifier && !seq.is_degenerate()
        })
        .collect();

    for &i in &emoji_idx {
        let seq = tokens[i].emoji.as_ref().unwrap();
        for &tone in seq.skin_tones() {
            labels.tone_counts.add(tone, 1);
        }
        if !seq.skin_tones().is_empty() {
            labels.skin_tone_present = true;
        }
        if seq.kind() == SequenceKind::ZwjSequence {
            labels.zwj_present = true;
        }
    }

    for &i in &counted_idx {
        let seq = tokens[i].emoji.as_ref().unwrap();
        for base in seq.base_codepoints(registry) {
            if crate::registry::plane_of(base).is_basic() {
                labels.bmp_emoji_present = true;
            } else {
                labels.non_bmp_emoji_present = true;
            }
        }
    }

    let spaced = emoji_idx
        .iter()
        .all(|&i| whitespace_delimited(text, &tokens[i]));
    // a non-emoji token strictly between two counted emojis means the
    // emojis occupy multiple positions in the tweet
    let scattered = counted_idx.windows(2).any(|pair| {
        ((pair[0] + 1)..pair[1]).any(|j| tokens[j].kind != TokenKind::Emoji)
    });
    let adjacent = tokens.windows(2).any(|pair| {
        pair[0].kind == TokenKind::Emoji
            && pair[1].kind == TokenKind::Emoji
            && pair[0].span.end == pair[1].span.start
    });

    match counted_idx.len() {
        0 => {}
        1 => {
            labels.single_emoji_spaced = spaced;
            labels.single_emoji_unspaced = !spaced;
        }
        _ => {
            labels.multi_positions = scattered;
            labels.multi_cluster = adjacent;
            labels.multi_spaced = !scattered && !adjacent;
        }
    }

    labels
}

fn whitespace_delimited(text: &str, token: &Token) -> bool {
    let before = text[..token.span.start].chars().next_back();
    let after = text[token.span.end..].chars().next();
    before.is_none_or(|c| c.is_whitespace()) && after.is_none_or(|c| c.is_whitespace())
}

/// Count with its percentage of the corpus total.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct CountPct {
    pub count: usize,
    pub pct: f64,
}

/// Per-tone tweet count row.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct ToneRow {
    pub tone: SkinTone,
    pub count: usize,
    pub pct: f64,
}

/// Corpus-level distribution of emoji use, in the shape of the statistics
/// table: totals, uniqueness, single/multiple emojis, skin tones (overall
/// and per tone, counting tweets that contain the tone at least once), and
/// ZWJ sequences.
#[derive(Debug, Clone, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct StatsReport {
    pub total: usize,
    pub unique: CountPct,
    pub single: CountPct,
    pub multiple: CountPct,
    pub skin_tone: CountPct,
    pub tones: Vec<ToneRow>,
    pub zwj: CountPct,
}

impl StatsReport {
    /// Aligned plain-text rendering of the distribution table.
    pub fn render_table(&self) -> String {
        let mut rows: Vec<(String, String, String)> = Vec::new();
        let pct = |p: f64| format!("{p:.2}");
        rows.push(("Total".into(), self.total.to_string(), pct(if self.total == 0 { 0.0 } else { 100.0 })));
        rows.push(("Unique".into(), self.unique.count.to_string(), pct(self.unique.pct)));
        rows.push(("Only single emoji".into(), self.single.count.to_string(), pct(self.single.pct)));
        rows.push(("Multiple emojis".into(), self.multiple.count.to_string(), pct(self.multiple.pct)));
        rows.push((
            "Emoji skin tone modifiers".into(),
            self.skin_tone.count.to_string(),
            pct(self.skin_tone.pct),
        ));
        for row in &self.tones {
            rows.push((
                format!("{} emojis", row.tone.label()),
                row.count.to_string(),
                pct(row.pct),
            ));
        }
        rows.push((
            "Zero Width Joiner (ZWJ) emojis".into(),
            self.zwj.count.to_string(),
            pct(self.zwj.pct),
        ));

        let w0 = rows.iter().map(|r| r.0.len()).max().unwrap().max("Tweets".len());
        let w1 = rows.iter().map(|r| r.1.len()).max().unwrap().max("Count".len());
        let mut out = format!("{:<w0$}  {:>w1$}  {:>6}\n", "Tweets", "Count", "%");
        for (label, count, p) in rows {
            out.push_str(&format!("{label:<w0$}  {count:>w1$}  {p:>6}\n"));
        }
        out
    }
}

/// Streaming aggregator behind [`corpus_stats`]. Partitions of a corpus can
/// be accumulated independently and merged; merging is associative and the
/// final report does not depend on input order.
#[derive(Debug, Default, Clone)]
pub struct StatsAccumulator {
    total: usize,
    seen: HashSet<String>,
    single: usize,
    multiple: usize,
    skin_tone: usize,
    tone_tweets: ToneCounts,
    zwj: usize,
}

impl StatsAccumulator {
    pub fn new() -> StatsAccumulator {
        StatsAccumulator::default()
    }

    pub fn add(&mut self, registry: &Registry, text: &str) {
        let labels = classify_cases(registry, text);
        self.total += 1;
        self.seen.insert(text.to_string());
        if labels.any_single() {
            self.single += 1;
        }
        if labels.any_multi() {
            self.multiple += 1;
        }
        if labels.skin_tone_present {
            self.skin_tone += 1;
        }
        for tone in SkinTone::ALL {
            if labels.tone_counts.get(tone) > 0 {
                self.tone_tweets.add(tone, 1);
            }
        }
        if labels.zwj_present {
            self.zwj += 1;
        }
    }

    pub fn merge(mut self, other: StatsAccumulator) -> StatsAccumulator {
        self.total += other.total;
        self.seen.extend(other.seen);
        self.single += other.single;
        self.multiple += other.multiple;
        self.skin_tone += other.skin_tone;
        for tone in SkinTone::ALL {
            self.tone_tweets.add(tone, other.tone_tweets.get(tone));
        }
        self.zwj += other.zwj;
        self
    }

    pub fn finish(self) -> StatsReport {
        let pct = |count: usize| CountPct {
            count,
            pct: if self.total == 0 {
                0.0
            } else {
                100.0 * count as f64 / self.total as f64
            },
        };
        StatsReport {
            total: self.total,
            unique: pct(self.seen.len()),
            single: pct(self.single),
            multiple: pct(self.multiple),
            skin_tone: pct(self.skin_tone),
            tones: SkinTone::ALL
                .iter()
                .map(|&tone| {
                    let c = pct(self.tone_tweets.get(tone));
                    ToneRow {
                        tone,
                        count: c.count,
                        pct: c.pct,
                    }
                })
                .collect(),
            zwj: pct(self.zwj),
        }
    }
}

/// One-pass statistics over a stream of tweets.
pub fn corpus_stats<I, S>(registry: &Registry, texts: I) -> StatsReport
where
    I: IntoIterator<Item = S>,
    S: AsRef<str>,
{
    let mut acc = StatsAccumulator::new();
    for t in texts {
        acc.add(registry, t.as_ref());
    }
    acc.finish()
}
