//! `jdiff` command line.
//!
//! Exit codes: 0 identical, 1 different, 2 usage/IO/parse/config error,
//! 3 failure during the diff itself.

use std::ffi::OsString;
use std::io::{self, Read, Write};
use std::path::PathBuf;

use clap::Parser;
use serde::Deserialize;
use thiserror::Error;

use crate::array::MatchMode;
use crate::engine::{diff, serialize_result, DiffConfig, DiffConfigBuilder, DiffResult};
use crate::error::{ConfigError, DiffError, ParseError};
use crate::json::{parse_json, JsonValue};
use crate::operators::{
    EditDistanceOperator, IgnoreOperator, L2DistanceOperator, UnorderedOperator,
};

pub const EXIT_IDENTICAL: i32 = 0;
pub const EXIT_DIFFERENT: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "jdiff",
    version,
    about = "Similarity-based structural JSON diff"
)]
struct Args {
    /// Left document, or `-` for standard input
    left: String,
    /// Right document, or `-` for standard input
    right: String,
    /// JSON configuration file
    #[arg(long, value_name = "FILE")]
    config: Option<PathBuf>,
    /// Write the diff result JSON here (`-` for standard output)
    #[arg(long, value_name = "FILE")]
    out: Option<String>,
    /// Default array mode: ordered-exact, ordered-fuzzy, unordered-exact, unordered-fuzzy
    #[arg(long, value_name = "MODE")]
    mode: Option<MatchMode>,
    /// Path regex whose nodes are ignored (repeatable)
    #[arg(long, value_name = "REGEX")]
    ignore: Vec<String>,
    /// Path regex of arrays compared as sets (repeatable)
    #[arg(long, value_name = "REGEX")]
    unordered: Vec<String>,
    /// Minimum similarity for a fuzzy pair
    #[arg(long, value_name = "N")]
    threshold: Option<f64>,
    /// Print the summary (default)
    #[arg(long, overrides_with = "quiet")]
    summary: bool,
    /// Print nothing but diagnostics
    #[arg(long, overrides_with = "summary")]
    quiet: bool,
}

/// Configuration file schema.
#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CliConfigFile {
    pub default_mode: Option<String>,
    pub pair_threshold: Option<f64>,
    #[serde(default)]
    pub ignore: Vec<String>,
    #[serde(default)]
    pub unordered: Vec<UnorderedBinding>,
    #[serde(default)]
    pub operators: Vec<OperatorBinding>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct UnorderedBinding {
    pub path_regex: String,
    pub fuzzy: Option<bool>,
}

/// A built-in operator: `ignore`, `unordered`, `l2distance` or `edit_distance`.
#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OperatorBinding {
    pub name: String,
    pub path_regex: String,
    #[serde(default)]
    pub params: serde_json::Map<String, serde_json::Value>,
}

#[derive(Debug, Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Io { path: String, source: io::Error },
    #[error("{path}: {source}")]
    Parse { path: String, source: ParseError },
    #[error("{path}: {message}")]
    ConfigFile { path: String, message: String },
    #[error(transparent)]
    Config(#[from] ConfigError),
    #[error(transparent)]
    Diff(#[from] DiffError),
}

impl CliError {
    fn exit_code(&self) -> i32 {
        match self {
            CliError::Diff(_) => EXIT_INTERNAL,
            _ => EXIT_USAGE,
        }
    }
}

impl CliConfigFile {
    pub fn parse(text: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }

    /// Apply this file on top of `builder`. `fuzzy_default` decides unordered
    /// bindings that leave `fuzzy` unset.
    fn apply(
        &self,
        mut builder: DiffConfigBuilder,
        fuzzy_default: bool,
    ) -> Result<DiffConfigBuilder, ConfigError> {
        for pattern in &self.ignore {
            builder = builder.ignore(pattern.clone());
        }
        for binding in &self.unordered {
            builder = builder.unordered(
                binding.path_regex.clone(),
                binding.fuzzy.unwrap_or(fuzzy_default),
            );
        }
        for binding in &self.operators {
            builder = binding.register(builder, fuzzy_default)?;
        }
        Ok(builder)
    }
}

impl OperatorBinding {
    fn register(
        &self,
        builder: DiffConfigBuilder,
        fuzzy_default: bool,
    ) -> Result<DiffConfigBuilder, ConfigError> {
        let bad = |reason: String| ConfigError::OperatorParams {
            operator: self.name.clone(),
            reason,
        };
        let allow = |keys: &[&str]| -> Result<(), ConfigError> {
            match self.params.keys().find(|k| !keys.contains(&k.as_str())) {
                Some(k) => Err(bad(format!("unknown parameter `{k}`"))),
                None => Ok(()),
            }
        };
        let pattern = self.path_regex.as_str();
        Ok(match self.name.as_str() {
            "ignore" => {
                allow(&[])?;
                builder.operator(IgnoreOperator::new(pattern)?)
            }
            "unordered" => {
                allow(&["fuzzy"])?;
                let fuzzy = match self.params.get("fuzzy") {
                    None => fuzzy_default,
                    Some(v) => v
                        .as_bool()
                        .ok_or_else(|| bad("`fuzzy` must be a boolean".into()))?,
                };
                builder.operator(UnorderedOperator::new(pattern, fuzzy)?)
            }
            "l2distance" => {
                allow(&["distance_threshold"])?;
                let threshold = self
                    .params
                    .get("distance_threshold")
                    .and_then(serde_json::Value::as_f64)
                    .ok_or_else(|| bad("numeric `distance_threshold` is required".into()))?;
                builder.operator(L2DistanceOperator::new(pattern, threshold)?)
            }
            "edit_distance" => {
                allow(&[])?;
                builder.operator(EditDistanceOperator::new(pattern)?)
            }
            other => return Err(ConfigError::UnknownOperator(other.to_string())),
        })
    }
}

/// Run the CLI against the process streams.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    run_with(
        argv,
        &mut io::stdin().lock(),
        &mut io::stdout().lock(),
        &mut io::stderr().lock(),
    )
}

pub fn run_with<I, T>(
    argv: I,
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args = match Args::try_parse_from(argv) {
        Ok(args) => args,
        Err(err) => {
            use clap::error::ErrorKind;
            if matches!(
                err.kind(),
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion
            ) {
                let _ = write!(stdout, "{err}");
                return EXIT_IDENTICAL;
            }
            let text = err.to_string();
            let line = text.lines().next().unwrap_or("invalid arguments");
            let _ = writeln!(stderr, "jdiff: {}", line.trim_start_matches("error: "));
            return EXIT_USAGE;
        }
    };
    match execute(&args, stdin, stdout, stderr) {
        Ok(result) => {
            if result.identical {
                EXIT_IDENTICAL
            } else {
                EXIT_DIFFERENT
            }
        }
        Err(err) => {
            let _ = writeln!(stderr, "jdiff: {err}");
            err.exit_code()
        }
    }
}

fn execute(
    args: &Args,
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> Result<DiffResult, CliError> {
    if args.left == "-" && args.right == "-" {
        return Err(CliError::Usage(
            "standard input can feed only one side".into(),
        ));
    }
    let config = build_config(args)?;
    let left = load_document(&args.left, stdin)?;
    let right = load_document(&args.right, stdin)?;
    let result = diff(&left, &right, &config)?;
    let text = serialize_result(&result);

    let mut summary_to_stderr = false;
    match args.out.as_deref() {
        Some("-") => {
            writeln!(stdout, "{text}").map_err(|source| io_error("<stdout>", source))?;
            summary_to_stderr = true;
        }
        Some(path) => std::fs::write(path, &text).map_err(|source| io_error(path, source))?,
        None => {}
    }
    if !args.quiet {
        let sink: &mut dyn Write = if summary_to_stderr { stderr } else { stdout };
        write!(sink, "{}", summary(&result)).map_err(|source| io_error("<stdout>", source))?;
    }
    Ok(result)
}

fn io_error(path: &str, source: io::Error) -> CliError {
    CliError::Io {
        path: path.to_string(),
        source,
    }
}

fn build_config(args: &Args) -> Result<DiffConfig, CliError> {
    let file = match &args.config {
        Some(path) => {
            let display = path.display().to_string();
            let text =
                std::fs::read_to_string(path).map_err(|source| io_error(&display, source))?;
            CliConfigFile::parse(&text).map_err(|err| CliError::ConfigFile {
                path: display,
                message: err.to_string(),
            })?
        }
        None => CliConfigFile::default(),
    };

    let mode = match (&args.mode, &file.default_mode) {
        (Some(mode), _) => *mode,
        (None, Some(name)) => name.parse()?,
        (None, None) => MatchMode::default(),
    };
    let mut builder = DiffConfig::builder().mode(mode);
    if let Some(threshold) = args.threshold.or(file.pair_threshold) {
        builder = builder.pair_threshold(threshold);
    }
    builder = file.apply(builder, mode.fuzzy)?;
    for pattern in &args.ignore {
        builder = builder.ignore(pattern.clone());
    }
    for pattern in &args.unordered {
        builder = builder.unordered(pattern.clone(), mode.fuzzy);
    }
    Ok(builder.build()?)
}

fn load_document(source: &str, stdin: &mut dyn Read) -> Result<JsonValue, CliError> {
    let (label, text) = if source == "-" {
        let mut text = String::new();
        stdin
            .read_to_string(&mut text)
            .map_err(|source| io_error("<stdin>", source))?;
        ("<stdin>".to_string(), text)
    } else {
        let text = std::fs::read_to_string(source).map_err(|err| io_error(source, err))?;
        (source.to_string(), text)
    };
    parse_json(&text).map_err(|source| CliError::Parse {
        path: label,
        source,
    })
}

/// Header line plus one `category: count` line per event category.
pub fn summary(result: &DiffResult) -> String {
    let mut out = format!(
        "similarity {:.3}, {} events ({})\n",
        result.similarity,
        result.event_count(),
        if result.identical {
            "identical"
        } else {
            "different"
        }
    );
    for (category, events) in &result.events {
        out.push_str(&format!("  {category}: {}\n", events.len()));
    }
    out
}
