use std::fmt;
use std::fs;
use std::path::Path;

use borsuk_core::geometry::{BodyParseError, BodySpec, ConvexBody};
use serde::Serialize;

#[derive(Debug)]
pub enum CliError {
    Io(String),
    /// Input does not match the expected JSON layout, or bad flags.
    Schema(String),
    /// Input parses but describes an invalid body.
    Invalid(String),
    Verification(String),
    Oracle(String),
}

impl CliError {
    pub fn code(&self) -> u8 {
        match self {
            CliError::Io(_) => 1,
            CliError::Schema(_) => 2,
            CliError::Invalid(_) => 3,
            CliError::Verification(_) => 4,
            CliError::Oracle(_) => 5,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Io(m) => write!(f, "{m}"),
            CliError::Schema(m) => write!(f, "schema violation: {m}"),
            CliError::Invalid(m) => write!(f, "invalid body: {m}"),
            CliError::Verification(m) => write!(f, "verification failed: {m}"),
            CliError::Oracle(m) => write!(f, "oracle: {m}"),
        }
    }
}

impl From<BodyParseError> for CliError {
    fn from(e: BodyParseError) -> Self {
        match e {
            BodyParseError::Schema(e) => CliError::Schema(e.to_string()),
            BodyParseError::Invalid(e) => CliError::Invalid(e.to_string()),
        }
    }
}

pub fn read_text(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}

pub fn read_body(path: &Path) -> Result<ConvexBody, CliError> {
    ConvexBody::from_json(&read_text(path)?).map_err(|e| match CliError::from(e) {
        CliError::Schema(m) => CliError::Schema(format!("{}: {m}", path.display())),
        CliError::Invalid(m) => CliError::Invalid(format!("{}: {m}", path.display())),
        other => other,
    })
}

/// Pieces of a partition file: either a bare partition or the output of the
/// `partition` command. Only `pieces` is required; other fields are ignored.
pub fn read_pieces(path: &Path) -> Result<Vec<ConvexBody>, CliError> {
    #[derive(serde::Deserialize)]
    struct PiecesOnly {
        pieces: Vec<BodySpec>,
    }
    #[derive(serde::Deserialize)]
    #[serde(untagged)]
    enum PartitionFile {
        Bare(PiecesOnly),
        Wrapped { partition: PiecesOnly },
    }
    let text = read_text(path)?;
    let file: PartitionFile = serde_json::from_str(&text).map_err(|_| {
        CliError::Schema(format!("{}: expected an object with a `pieces` array of bodies", path.display()))
    })?;
    let pieces = match file {
        PartitionFile::Bare(p) | PartitionFile::Wrapped { partition: p } => p.pieces,
    };
    pieces
        .into_iter()
        .enumerate()
        .map(|(i, spec)| {
            ConvexBody::try_from(spec).map_err(|e| CliError::Invalid(format!("{} piece {i}: {e}", path.display())))
        })
        .collect()
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports always serialize");
    s.push('\n');
    s
}

pub fn write_text(path: &Path, text: &str) -> Result<(), CliError> {
    fs::write(path, text).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}

/// Writes to `path`, or to stdout when absent.
pub fn emit(path: Option<&Path>, text: &str) -> Result<(), CliError> {
    match path {
        Some(p) => write_text(p, text),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}
