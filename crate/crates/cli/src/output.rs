use std::fmt;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::Path;

use dnacodex::CodeError;
use serde::Serialize;
use serde_json::Value;

#[derive(Debug)]
pub enum CliError {
    Code(CodeError),
    Usage(String),
    Io(io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Code(e) if e.is_refusal() => 2,
            CliError::Usage(_) => 2,
            _ => 1,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Code(e) => write!(f, "{e}"),
            CliError::Usage(s) => write!(f, "{s}"),
            CliError::Io(e) => write!(f, "{e}"),
        }
    }
}

impl From<CodeError> for CliError {
    fn from(e: CodeError) -> Self {
        CliError::Code(e)
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e)
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Io(e.into())
    }
}

pub fn sink(path: Option<&Path>) -> io::Result<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(File::create(p)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

#[derive(Serialize)]
struct Tool {
    name: &'static str,
    version: &'static str,
}

#[derive(Serialize)]
struct Envelope<'a, C: Serialize, R: Serialize> {
    tool: Tool,
    config: &'a C,
    report: &'a R,
}

/// The report wrapped with the tool version and the echoed configuration.
/// Field order is fixed by the structs, so equal inputs give equal bytes.
pub fn envelope<C: Serialize, R: Serialize>(config: &C, report: &R) -> serde_json::Result<Value> {
    serde_json::to_value(Envelope {
        tool: Tool { name: "dnacodex", version: env!("CARGO_PKG_VERSION") },
        config,
        report,
    })
}

pub fn write_json(out: &mut dyn Write, v: &Value) -> io::Result<()> {
    serde_json::to_writer_pretty(&mut *out, v)?;
    writeln!(out)
}

/// One `path = value` line per leaf.
pub fn write_table(out: &mut dyn Write, v: &Value) -> io::Result<()> {
    fn walk(out: &mut dyn Write, prefix: &str, v: &Value) -> io::Result<()> {
        match v {
            Value::Object(map) => {
                for (k, x) in map {
                    let p = if prefix.is_empty() { k.clone() } else { format!("{prefix}.{k}") };
                    walk(out, &p, x)?;
                }
                Ok(())
            }
            Value::Array(items) if items.iter().any(|x| x.is_object() || x.is_array()) => {
                for (i, x) in items.iter().enumerate() {
                    walk(out, &format!("{prefix}[{i}]"), x)?;
                }
                Ok(())
            }
            other => writeln!(out, "{prefix} = {other}"),
        }
    }
    walk(out, "", v)
}
