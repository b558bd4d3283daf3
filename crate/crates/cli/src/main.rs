//! `emojiseg`: emoji-aware tweet tokenization and conformance scoring over
//! JSONL streams.
//!
//! Exit codes: 0 on success, 1 on input or format errors (reported with
//! file and line), 2 on usage errors.

use std::fs;
use std::io::{self, BufRead, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use emojiseg::baseline::{retokenize, tag_tokens, PosLexicon};
use emojiseg::bundled;
use emojiseg::cases::{classify_cases, StatsAccumulator};
use emojiseg::embedding::{EmbeddingTable, NeighborFilter};
use emojiseg::harness::io::{
    parse_gold_tokens, parse_polarity_predictions, parse_pos_gold, parse_sentiment_gold,
    parse_tagged_predictions, parse_token_predictions, TagsetHeader, TaggedRecord, TokensRecord,
};
use emojiseg::harness::{
    render_support_matrix, score_pos, score_sentiment, score_tokens, CoarsePos, Report, Tagset,
};
use emojiseg::registry::Registry;
use emojiseg::sentiment::{analyze, AnalyzeOptions, SentimentLexicon};
use emojiseg::tokenizer::{tokenize, NormalizeOptions, Token};

#[derive(Parser)]
#[command(name = "emojiseg", version, about = "Emoji-aware tweet tokenization and analysis")]
struct Cli {
    /// Emoji-property snapshot to use instead of the bundled one
    /// (the EMOJISEG_REGISTRY environment variable also works).
    #[arg(long, global = true, value_name = "PATH")]
    registry: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct StreamArgs {
    /// Input file; stdin when omitted. Lines are either raw text or
    /// JSONL records {"id","text"}.
    #[arg(long = "in", value_name = "FILE")]
    input: Option<PathBuf>,

    /// Output file; stdout when omitted.
    #[arg(long = "out", value_name = "FILE")]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Subcommand)]
enum Command {
    /// Tokenize text into words, emoji, hashtags, mentions, URLs, numbers,
    /// and punctuation with byte spans.
    Tokenize(StreamArgs),
    /// Show the emoji sequences of each input, with code point notation.
    Segment(StreamArgs),
    /// Label each input with emoji-use case flags.
    Classify(StreamArgs),
    /// Aggregate emoji-use statistics over the whole input.
    Stats {
        #[command(flatten)]
        stream: StreamArgs,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Score token predictions against a gold suite.
    ScoreTokens {
        #[arg(long, value_name = "FILE")]
        gold: PathBuf,
        #[arg(long, value_name = "FILE")]
        pred: PathBuf,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        /// Keep punctuation tokens when comparing.
        #[arg(long)]
        keep_punct: bool,
        /// Require the '#' spelling of hashtags to match exactly.
        #[arg(long)]
        strict_hashtags: bool,
        /// Require the '@' spelling of mentions to match exactly.
        #[arg(long)]
        strict_mentions: bool,
    },
    /// Score emoji POS predictions against a gold suite.
    ScorePos {
        #[arg(long, value_name = "FILE")]
        gold: PathBuf,
        #[arg(long, value_name = "FILE")]
        pred: PathBuf,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Score polarity predictions per condition.
    ScoreSentiment {
        #[arg(long, value_name = "FILE")]
        gold: PathBuf,
        #[arg(long, value_name = "FILE")]
        pred: PathBuf,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Tag tokenized input with the heuristic emoji POS baseline.
    PosBaseline {
        #[command(flatten)]
        stream: StreamArgs,
        /// Emoji class lexicon: 'builtin', 'none', or a TSV path.
        #[arg(long, default_value = "builtin", value_name = "PATH")]
        lexicon: String,
        /// Fallback class for emojis missing from the lexicon.
        #[arg(long, default_value = "NOUN", value_name = "CLASS")]
        default_class: String,
        /// Split tokens mixing emoji and text before tagging.
        #[arg(long)]
        retokenize: bool,
    },
    /// Combined text+emoji sentiment per input.
    Sentiment {
        #[command(flatten)]
        stream: StreamArgs,
        /// Emoji sentiment lexicon TSV; bundled lexicon when omitted.
        #[arg(long, value_name = "PATH")]
        lexicon: Option<PathBuf>,
        #[arg(long, default_value_t = 1.0)]
        w_text: f64,
        #[arg(long, default_value_t = 1.0)]
        w_emoji: f64,
        /// Combined score at or beyond this magnitude classifies as polar.
        #[arg(long, default_value_t = 0.1)]
        polarity_threshold: f64,
    },
    /// Render a support matrix from named report files.
    Matrix {
        /// Repeatable NAME=PATH pairs of report JSON files.
        #[arg(long = "report", value_name = "NAME=PATH", required = true)]
        reports: Vec<String>,
        /// Category percentage needed for a check mark.
        #[arg(long, default_value_t = 50.0)]
        threshold: f64,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Nearest neighbors of a token in an embedding table.
    Neighbors {
        #[arg(long, value_name = "FILE")]
        embeddings: PathBuf,
        #[arg(long)]
        token: String,
        #[arg(long, default_value_t = 5)]
        k: usize,
        /// Restrict candidates to single emoji sequences.
        #[arg(long)]
        emoji_only: bool,
        /// Report the skin-tone consistency fraction instead of the list.
        #[arg(long)]
        consistency: bool,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("emojiseg: {err:#}");
            ExitCode::FAILURE
        }
    }
}

fn run(cli: Cli) -> Result<()> {
    let registry = load_registry(cli.registry.as_deref())?;
    match cli.command {
        Command::Tokenize(stream) => cmd_tokenize(&registry, &stream),
        Command::Segment(stream) => cmd_segment(&registry, &stream),
        Command::Classify(stream) => cmd_classify(&registry, &stream),
        Command::Stats { stream, format } => cmd_stats(&registry, &stream, format),
        Command::ScoreTokens {
            gold,
            pred,
            format,
            keep_punct,
            strict_hashtags,
            strict_mentions,
        } => {
            let opts = NormalizeOptions {
                drop_punct: !keep_punct,
                hashtag_lenient: !strict_hashtags,
                mention_lenient: !strict_mentions,
            };
            let golds = parse_gold_tokens(&read_file(&gold)?)
                .map_err(|e| anyhow!("{}:{e}", gold.display()))?;
            let preds = parse_token_predictions(&read_file(&pred)?)
                .map_err(|e| anyhow!("{}:{e}", pred.display()))?;
            let report = score_tokens(&registry, &golds, &preds, opts)?;
            emit_report(&report, format)
        }
        Command::ScorePos { gold, pred, format } => {
            let golds =
                parse_pos_gold(&read_file(&gold)?).map_err(|e| anyhow!("{}:{e}", gold.display()))?;
            let (tagset, preds) = parse_tagged_predictions(&read_file(&pred)?)
                .map_err(|e| anyhow!("{}:{e}", pred.display()))?;
            let report = score_pos(&golds, &preds, tagset)?;
            emit_report(&report, format)
        }
        Command::ScoreSentiment { gold, pred, format } => {
            let golds = parse_sentiment_gold(&read_file(&gold)?)
                .map_err(|e| anyhow!("{}:{e}", gold.display()))?;
            let preds = parse_polarity_predictions(&read_file(&pred)?)
                .map_err(|e| anyhow!("{}:{e}", pred.display()))?;
            let report = score_sentiment(&golds, &preds)?;
            emit_report(&report, format)
        }
        Command::PosBaseline {
            stream,
            lexicon,
            default_class,
            retokenize: split_first,
        } => cmd_pos_baseline(&registry, &stream, &lexicon, &default_class, split_first),
        Command::Sentiment {
            stream,
            lexicon,
            w_text,
            w_emoji,
            polarity_threshold,
        } => {
            let lexicon = match lexicon {
                Some(path) => SentimentLexicon::parse(&registry, &read_file(&path)?)
                    .map_err(|e| anyhow!("{}:{e}", path.display()))?,
                None => bundled::sentiment_lexicon().clone(),
            };
            let opts = AnalyzeOptions {
                w_text,
                w_emoji,
                threshold: polarity_threshold,
            };
            cmd_sentiment(&registry, &stream, &lexicon, opts)
        }
        Command::Matrix {
            reports,
            threshold,
            format,
        } => cmd_matrix(&reports, threshold, format),
        Command::Neighbors {
            embeddings,
            token,
            k,
            emoji_only,
            consistency,
            format,
        } => {
            let table = EmbeddingTable::parse(&read_file(&embeddings)?)
                .map_err(|e| anyhow!("{}: {e}", embeddings.display()))?;
            cmd_neighbors(&registry, &table, &token, k, emoji_only, consistency, format)
        }
    }
}

fn load_registry(flag: Option<&Path>) -> Result<Registry> {
    let path = flag
        .map(Path::to_path_buf)
        .or_else(|| std::env::var_os("EMOJISEG_REGISTRY").map(PathBuf::from));
    match path {
        Some(path) => {
            let data = read_file(&path)?;
            Registry::from_snapshot(&data).map_err(|e| anyhow!("{}: {e}", path.display()))
        }
        None => Ok(bundled::registry().clone()),
    }
}

fn read_file(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

fn open_input(path: Option<&Path>) -> Result<Box<dyn BufRead>> {
    Ok(match path {
        Some(path) => Box::new(io::BufReader::new(
            fs::File::open(path).with_context(|| format!("cannot read {}", path.display()))?,
        )),
        None => Box::new(io::BufReader::new(io::stdin())),
    })
}

fn open_output(path: Option<&Path>) -> Result<Box<dyn Write>> {
    Ok(match path {
        Some(path) => Box::new(BufWriter::new(
            fs::File::create(path).with_context(|| format!("cannot write {}", path.display()))?,
        )),
        None => Box::new(BufWriter::new(io::stdout())),
    })
}

/// One input line: a JSONL `{"id","text"}` record, or raw text keyed by its
/// (1-based) line number.
fn parse_input_line(line_no: usize, line: &str) -> (String, String) {
    #[derive(serde::Deserialize)]
    struct TextRecord {
        id: String,
        text: String,
    }
    if line.trim_start().starts_with('{') {
        if let Ok(record) = serde_json::from_str::<TextRecord>(line) {
            return (record.id, record.text);
        }
    }
    (line_no.to_string(), line.to_string())
}

fn for_each_input<F>(stream: &StreamArgs, mut f: F) -> Result<()>
where
    F: FnMut(String, String) -> Result<()>,
{
    let input = open_input(stream.input.as_deref())?;
    for (idx, line) in input.lines().enumerate() {
        let line = line.context("reading input")?;
        if line.trim().is_empty() {
            continue;
        }
        let (id, text) = parse_input_line(idx + 1, &line);
        f(id, text)?;
    }
    Ok(())
}

#[derive(serde::Serialize)]
struct TokenJson<'a> {
    text: &'a str,
    kind: emojiseg::TokenKind,
    start: usize,
    end: usize,
}

fn token_json(token: &Token) -> TokenJson<'_> {
    TokenJson {
        text: &token.text,
        kind: token.kind,
        start: token.span.start,
        end: token.span.end,
    }
}

fn cmd_tokenize(registry: &Registry, stream: &StreamArgs) -> Result<()> {
    let mut out = open_output(stream.output.as_deref())?;
    for_each_input(stream, |id, text| {
        #[derive(serde::Serialize)]
        struct Record<'a> {
            id: &'a str,
            tokens: Vec<TokenJson<'a>>,
        }
        let tokens = tokenize(registry, &text);
        let record = Record {
            id: &id,
            tokens: tokens.iter().map(token_json).collect(),
        };
        writeln!(out, "{}", serde_json::to_string(&record)?)?;
        Ok(())
    })?;
    out.flush()?;
    Ok(())
}

fn cmd_segment(registry: &Registry, stream: &StreamArgs) -> Result<()> {
    let mut out = open_output(stream.output.as_deref())?;
    for_each_input(stream, |id, text| {
        #[derive(serde::Serialize)]
        struct SeqJson {
            text: String,
            kind: emojiseg::SequenceKind,
            codepoints: String,
            skin_tones: Vec<emojiseg::SkinTone>,
            max_plane: u8,
            degenerate: bool,
        }
        #[derive(serde::Serialize)]
        struct Record<'a> {
            id: &'a str,
            sequences: Vec<SeqJson>,
        }
        let sequences = tokenize(registry, &text)
            .into_iter()
            .filter_map(|t| t.emoji)
            .map(|seq| SeqJson {
                text: seq.text(),
                kind: seq.kind(),
                codepoints: seq.notation(),
                skin_tones: seq.skin_tones().to_vec(),
                max_plane: seq.max_plane().index(),
                degenerate: seq.is_degenerate(),
            })
            .collect();
        let record = Record {
            id: &id,
            sequences,
        };
        writeln!(out, "{}", serde_json::to_string(&record)?)?;
        Ok(())
    })?;
    out.flush()?;
    Ok(())
}

fn cmd_classify(registry: &Registry, stream: &StreamArgs) -> Result<()> {
    let mut out = open_output(stream.output.as_deref())?;
    for_each_input(stream, |id, text| {
        #[derive(serde::Serialize)]
        struct Record<'a> {
            id: &'a str,
            #[serde(flatten)]
            labels: emojiseg::cases::CaseLabels,
        }
        let record = Record {
            id: &id,
            labels: classify_cases(registry, &text),
        };
        writeln!(out, "{}", serde_json::to_string(&record)?)?;
        Ok(())
    })?;
    out.flush()?;
    Ok(())
}

fn cmd_stats(registry: &Registry, stream: &StreamArgs, format: Format) -> Result<()> {
    let mut acc = StatsAccumulator::new();
    for_each_input(stream, |_, text| {
        acc.add(registry, &text);
        Ok(())
    })?;
    let report = acc.finish();
    let mut out = open_output(stream.output.as_deref())?;
    match format {
        Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(&report)?)?,
        Format::Table => write!(out, "{}", report.render_table())?,
    }
    out.flush()?;
    Ok(())
}

fn emit_report(report: &Report, format: Format) -> Result<()> {
    let mut out = open_output(None)?;
    match format {
        Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(report)?)?,
        Format::Table => write!(out, "{}", report.render_table())?,
    }
    out.flush()?;
    Ok(())
}

fn cmd_pos_baseline(
    registry: &Registry,
    stream: &StreamArgs,
    lexicon_arg: &str,
    default_class: &str,
    split_first: bool,
) -> Result<()> {
    let default_class = CoarsePos::from_upper_name(default_class)
        .ok_or_else(|| anyhow!("unknown class `{default_class}`"))?;
    let lexicon = match lexicon_arg {
        "none" => PosLexicon::all_default(default_class),
        "builtin" => bundled::pos_lexicon().clone(),
        path => {
            let path = Path::new(path);
            PosLexicon::parse(registry, &read_file(path)?, default_class)
                .map_err(|e| anyhow!("{}:{e}", path.display()))?
        }
    };

    let input = open_input(stream.input.as_deref())?;
    let mut out = open_output(stream.output.as_deref())?;
    writeln!(
        out,
        "{}",
        serde_json::to_string(&TagsetHeader {
            tagset: Tagset::UniversalPos
        })?
    )?;
    for (idx, line) in input.lines().enumerate() {
        let line = line.context("reading input")?;
        if line.trim().is_empty() {
            continue;
        }
        let record: TokensRecord = serde_json::from_str(&line)
            .map_err(|e| anyhow!("line {}: {e}", idx + 1))?;
        let tokens = if split_first {
            retokenize(registry, &record.tokens)
        } else {
            record.tokens
        };
        let tagged = TaggedRecord {
            id: record.id,
            tagged: tag_tokens(registry, &lexicon, &tokens),
        };
        writeln!(out, "{}", serde_json::to_string(&tagged)?)?;
    }
    out.flush()?;
    Ok(())
}

fn cmd_sentiment(
    registry: &Registry,
    stream: &StreamArgs,
    lexicon: &SentimentLexicon,
    opts: AnalyzeOptions,
) -> Result<()> {
    if opts.w_text < 0.0 || opts.w_emoji < 0.0 {
        bail!("weights must be non-negative");
    }
    let scorer = bundled::valence_scorer();
    let mut out = open_output(stream.output.as_deref())?;
    for_each_input(stream, |id, text| {
        #[derive(serde::Serialize)]
        struct Record<'a> {
            id: &'a str,
            text_score: f64,
            emoji_score: f64,
            combined_score: f64,
            polarity: emojiseg::sentiment::Polarity,
        }
        let result = analyze(registry, lexicon, &text, opts, scorer);
        let record = Record {
            id: &id,
            text_score: result.text_score,
            emoji_score: result.emoji_score,
            combined_score: result.combined_score,
            polarity: result.polarity,
        };
        writeln!(out, "{}", serde_json::to_string(&record)?)?;
        Ok(())
    })?;
    out.flush()?;
    Ok(())
}

fn cmd_matrix(report_args: &[String], threshold: f64, format: Format) -> Result<()> {
    let mut reports = Vec::new();
    for arg in report_args {
        let (name, path) = arg
            .split_once('=')
            .ok_or_else(|| anyhow!("--report takes NAME=PATH, got `{arg}`"))?;
        let report: Report = serde_json::from_str(&read_file(Path::new(path))?)
            .map_err(|e| anyhow!("{path}: {e}"))?;
        reports.push((name.to_string(), report));
    }
    let matrix = render_support_matrix(&reports, threshold)?;
    let mut out = open_output(None)?;
    match format {
        Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(&matrix)?)?,
        Format::Table => write!(out, "{}", matrix.render_table())?,
    }
    out.flush()?;
    Ok(())
}

fn cmd_neighbors(
    registry: &Registry,
    table: &EmbeddingTable,
    token: &str,
    k: usize,
    emoji_only: bool,
    consistency: bool,
    format: Format,
) -> Result<()> {
    if k == 0 {
        bail!("--k must be at least 1");
    }
    let mut out = open_output(None)?;
    if consistency {
        let value = table.skin_tone_consistency(registry, token, k)?;
        match format {
            Format::Json => writeln!(
                out,
                "{}",
                serde_json::json!({ "token": token, "k": k, "consistency": value })
            )?,
            Format::Table => writeln!(out, "{token}  k={k}  consistency={value:.2}")?,
        }
        out.flush()?;
        return Ok(());
    }

    let filter = if emoji_only {
        NeighborFilter::EmojiOnly
    } else {
        NeighborFilter::All
    };
    let neighbors = table.nearest(registry, token, k, filter)?;
    match format {
        Format::Json => {
            for (neighbor, cosine) in &neighbors {
                writeln!(
                    out,
                    "{}",
                    serde_json::json!({ "token": neighbor, "cosine": cosine })
                )?;
            }
        }
        Format::Table => {
            let width = neighbors.iter().map(|(t, _)| t.chars().count()).max().unwrap_or(8);
            for (neighbor, cosine) in &neighbors {
                let pad = width.saturating_sub(neighbor.chars().count());
                writeln!(out, "{neighbor}{}  {cosine:+.6}", " ".repeat(pad))?;
            }
        }
    }
    out.flush()?;
    Ok(())
}
