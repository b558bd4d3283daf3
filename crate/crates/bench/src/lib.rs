//! Synthetic inputs shared by the benchmarks.

/// A mixed synthetic corpus: plain text, attached emoji, clusters, skin
/// tones, ZWJ sequences, hashtags, mentions, and URLs in rotation.
pub fn corpus(n: usize) -> Vec<String> {
    (0..n)
        .map(|i| match i % 8 {
            0 => format!("just a plain tweet number {i} with nothing special"),
            1 => format!("attached😊emoji and words {i}"),
            2 => format!("cluster time 😄😄😄😄 right here {i}"),
            3 => format!("thanks 👍🏽 and 👋🏿 team {i} #grateful"),
            4 => format!("family 👨\u{200D}👩\u{200D}👧\u{200D}👦 outing {i}"),
            5 => format!("@user{i} see https://example.com/{i} for the 3.5 update"),
            6 => format!("flags 🇺🇸 🇩🇪 keycap 1\u{FE0F}\u{20E3} mix {i}"),
            _ => format!("swatches \u{1F3FB} \u{1F3FC} and ‼ wow {i} !!!"),
        })
        .collect()
}

/// Emoji-related code point runs of assorted shapes.
pub fn emoji_runs() -> Vec<Vec<char>> {
    let family: Vec<char> = "👨\u{200D}👩\u{200D}👧\u{200D}👦".chars().collect();
    let toned: Vec<char> = "👍🏽👏🏿🙌🏻".chars().collect();
    let cluster: Vec<char> = "😄😄😄😄😄😄😄😄".chars().collect();
    let flags: Vec<char> = "🇺🇸🇩🇪🇯🇵".chars().collect();
    let degenerate: Vec<char> = vec!['\u{200D}', '😊', '\u{200D}', '\u{1F3FB}', '\u{FE0F}'];
    vec![family, toned, cluster, flags, degenerate]
}
