use std::path::Path;
use std::process::ExitCode;

use clap::ValueEnum;
use serde_json::Value;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

/// A finished report: the plain-text rendering, the same content as JSON,
/// and whether it records a failed check.
#[derive(Debug, Clone)]
pub struct Output {
    pub text: String,
    pub json: Value,
    pub failed: bool,
}

impl Output {
    pub fn ok(text: impl Into<String>, json: Value) -> Self {
        Output { text: text.into(), json, failed: false }
    }

    pub fn failed(text: impl Into<String>, json: Value) -> Self {
        Output { text: text.into(), json, failed: true }
    }
}

#[derive(Debug)]
pub enum CliError {
    /// Bad flags or a malformed input file; exit code 2.
    Usage(String),
    /// Input parsed but is not a valid object, or a computation refused; exit code 1.
    Invalid(String),
}

impl From<ybrace::format::FormatError> for CliError {
    fn from(e: ybrace::format::FormatError) -> Self {
        if e.is_syntax() {
            CliError::Usage(e.to_string())
        } else {
            CliError::Invalid(e.to_string())
        }
    }
}

pub fn invalid(e: impl std::fmt::Display) -> CliError {
    CliError::Invalid(e.to_string())
}

pub fn usage(e: impl std::fmt::Display) -> CliError {
    CliError::Usage(e.to_string())
}

fn write(text: &str, path: Option<&Path>) -> Result<(), String> {
    match path {
        Some(p) => std::fs::write(p, text).map_err(|e| format!("{}: {e}", p.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

pub fn emit(result: Result<Output, CliError>, format: Format, path: Option<&Path>) -> ExitCode {
    let out = match result {
        Ok(o) => o,
        Err(CliError::Usage(m)) => {
            eprintln!("error: {m}");
            return ExitCode::from(2);
        }
        Err(CliError::Invalid(m)) => {
            let json = serde_json::json!({ "valid": false, "error": m });
            Output::failed(format!("invalid: {m}\n"), json)
        }
    };
    let mut text = match format {
        Format::Text => out.text,
        Format::Json => serde_json::to_string_pretty(&out.json).expect("report serializes"),
    };
    if !text.ends_with('\n') {
        text.push('\n');
    }
    if let Err(e) = write(&text, path) {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    ExitCode::from(u8::from(out.failed))
}
