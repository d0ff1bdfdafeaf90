use std::io::{IsTerminal, Write};

use clap::ValueEnum;
use euler_identities::format_float;
use serde::Serialize;

use crate::CliError;

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum OutputFormat {
    Plain,
    Json,
    Csv,
}

pub fn json<T: Serialize + ?Sized>(out: &mut impl Write, value: &T) -> Result<(), CliError> {
    serde_json::to_writer_pretty(&mut *out, value).map_err(std::io::Error::from)?;
    writeln!(out)?;
    Ok(())
}

/// Writes a header row followed by `rows`.
pub fn csv<W: Write>(out: &mut W, header: &[&str], rows: &[Vec<String>]) -> Result<(), CliError> {
    let mut w = csv::Writer::from_writer(out);
    let io = |e: csv::Error| CliError::Io(e.into());
    w.write_record(header).map_err(io)?;
    for row in rows {
        w.write_record(row).map_err(io)?;
    }
    w.flush()?;
    Ok(())
}

/// Optional float rendered in shortest round-trip form, empty when absent.
pub fn opt_float(v: Option<f64>) -> String {
    v.map(format_float).unwrap_or_default()
}

/// ANSI colouring for plain output, off when `NO_COLOR` is set or stdout is
/// not a terminal.
pub struct Palette {
    enabled: bool,
}

impl Palette {
    pub fn detect() -> Self {
        let no_color = std::env::var_os("NO_COLOR").is_some_and(|v| !v.is_empty());
        Palette {
            enabled: !no_color && std::io::stdout().is_terminal(),
        }
    }

    pub fn paint(&self, text: &str, code: &str) -> String {
        if self.enabled {
            format!("\x1b[{code}m{text}\x1b[0m")
        } else {
            text.to_string()
        }
    }
}
