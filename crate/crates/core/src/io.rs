//! Signal and spectrum files: `csv`, `json` and the little-endian `bin` container.
//!
//! * csv: one decimal real per line, `.` separator, no header, optional trailing newline.
//!   Complex spectra use two columns `re,im`.
//! * json: one top-level array of numbers; complex spectra are arrays of `[re, im]` pairs.
//! * bin: ASCII magic `HFORGE01`, `u64` LE sample count, then that many `f64` LE values.
//!   Complex spectra store `2N` interleaved `re, im` values.

use std::fmt;
use std::fs;
use std::path::Path;
use std::str::FromStr;

use num_complex::Complex;
use thiserror::Error;

use crate::signal::Signal;

pub const BIN_MAGIC: &[u8; 8] = b"HFORGE01";
const BIN_HEADER_LEN: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Format {
    Csv,
    Json,
    Bin,
}

impl Format {
    /// Guesses the format from the file extension.
    pub fn from_path(path: &Path) -> Option<Format> {
        path.extension()?.to_str()?.parse().ok()
    }
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "csv" | "txt" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            "bin" => Ok(Format::Bin),
            other => Err(format!("unknown format `{other}` (expected csv, json or bin)")),
        }
    }
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Format::Csv => "csv",
            Format::Json => "json",
            Format::Bin => "bin",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Location {
    Line(usize),
    Offset(u64),
}

impl fmt::Display for Location {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Location::Line(l) => write!(f, "line {l}"),
            Location::Offset(o) => write!(f, "byte offset {o}"),
        }
    }
}

#[derive(Debug, Error)]
pub enum SignalFileError {
    #[error("parse error at {location}: {message}")]
    Parse { location: Location, message: String },
    #[error("file holds no samples")]
    EmptySignal,
    #[error("missing HFORGE01 magic")]
    MagicMismatch,
    #[error("payload truncated: header declares {declared} samples, {available} present")]
    TruncatedPayload { declared: u64, available: u64 },
    #[error("cannot infer the format of {0}; pass it explicitly")]
    UnknownFormat(String),
    #[error("value {0} cannot be written as json")]
    NonFinite(f64),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

fn parse_error(location: Location, message: impl Into<String>) -> SignalFileError {
    SignalFileError::Parse {
        location,
        message: message.into(),
    }
}

/// Decodes a signal from raw file contents.
pub fn decode_signal(bytes: &[u8], format: Format) -> Result<Signal<f64>, SignalFileError> {
    let samples = match format {
        Format::Csv => decode_csv(bytes)?,
        Format::Json => decode_json(bytes)?,
        Format::Bin => decode_bin(bytes)?,
    };
    Signal::new(samples).map_err(|_| SignalFileError::EmptySignal)
}

fn decode_csv(bytes: &[u8]) -> Result<Vec<f64>, SignalFileError> {
    let text = std::str::from_utf8(bytes)
        .map_err(|e| parse_error(Location::Offset(e.valid_up_to() as u64), "invalid utf-8"))?;
    let body = text.strip_suffix('\n').unwrap_or(text);
    if body.is_empty() {
        return Ok(Vec::new());
    }
    body.split('\n')
        .enumerate()
        .map(|(i, line)| {
            let field = line.trim();
            field
                .parse::<f64>()
                .map_err(|_| parse_error(Location::Line(i + 1), format!("not a number: `{field}`")))
        })
        .collect()
}

fn decode_json(bytes: &[u8]) -> Result<Vec<f64>, SignalFileError> {
    serde_json::from_slice::<Vec<f64>>(bytes)
        .map_err(|e| parse_error(Location::Line(e.line()), e.to_string()))
}

fn decode_bin(bytes: &[u8]) -> Result<Vec<f64>, SignalFileError> {
    if bytes.len() < BIN_MAGIC.len() || &bytes[..BIN_MAGIC.len()] != BIN_MAGIC {
        return Err(SignalFileError::MagicMismatch);
    }
    let Some(count_bytes) = bytes.get(8..BIN_HEADER_LEN) else {
        return Err(SignalFileError::TruncatedPayload {
            declared: 0,
            available: 0,
        });
    };
    let declared = u64::from_le_bytes(count_bytes.try_into().expect("8-byte slice"));
    if declared == 0 {
        return Err(SignalFileError::EmptySignal);
    }
    let payload = &bytes[BIN_HEADER_LEN..];
    let available = (payload.len() / 8) as u64;
    if available < declared {
        return Err(SignalFileError::TruncatedPayload { declared, available });
    }
    let used = declared as usize * 8;
    if payload.len() != used {
        return Err(parse_error(
            Location::Offset((BIN_HEADER_LEN + used) as u64),
            "trailing bytes after payload",
        ));
    }
    Ok(payload
        .chunks_exact(8)
        .map(|c| f64::from_le_bytes(c.try_into().expect("8-byte chunk")))
        .collect())
}

fn resolve_format(path: &Path, format: Option<Format>) -> Result<Format, SignalFileError> {
    format
        .or_else(|| Format::from_path(path))
        .ok_or_else(|| SignalFileError::UnknownFormat(path.display().to_string()))
}

/// Reads a signal, inferring the format from the extension when `format` is `None`.
pub fn read_signal(path: &Path, format: Option<Format>) -> Result<Signal<f64>, SignalFileError> {
    let format = resolve_format(path, format)?;
    let bytes = fs::read(path)?;
    decode_signal(&bytes, format)
}

fn check_finite(values: impl IntoIterator<Item = f64>) -> Result<(), SignalFileError> {
    match values.into_iter().find(|x| !x.is_finite()) {
        Some(bad) => Err(SignalFileError::NonFinite(bad)),
        None => Ok(()),
    }
}

fn encode_bin(values: impl ExactSizeIterator<Item = f64>) -> Vec<u8> {
    let mut out = Vec::with_capacity(BIN_HEADER_LEN + values.len() * 8);
    out.extend_from_slice(BIN_MAGIC);
    out.extend_from_slice(&(values.len() as u64).to_le_bytes());
    for x in values {
        out.extend_from_slice(&x.to_le_bytes());
    }
    out
}

/// Serializes a real vector. csv uses the shortest representation that parses back
/// to the same value.
pub fn encode_real(values: &[f64], format: Format) -> Result<Vec<u8>, SignalFileError> {
    Ok(match format {
        Format::Csv => {
            let mut s = String::with_capacity(values.len() * 20);
            for x in values {
                s.push_str(&format!("{x:?}\n"));
            }
            s.into_bytes()
        }
        Format::Json => {
            check_finite(values.iter().copied())?;
            serde_json::to_vec(values).expect("finite floats serialize")
        }
        Format::Bin => encode_bin(values.iter().copied()),
    })
}

pub fn encode_complex(values: &[Complex<f64>], format: Format) -> Result<Vec<u8>, SignalFileError> {
    Ok(match format {
        Format::Csv => {
            let mut s = String::with_capacity(values.len() * 40);
            for c in values {
                s.push_str(&format!("{:?},{:?}\n", c.re, c.im));
            }
            s.into_bytes()
        }
        Format::Json => {
            check_finite(values.iter().flat_map(|c| [c.re, c.im]))?;
            let pairs: Vec<[f64; 2]> = values.iter().map(|c| [c.re, c.im]).collect();
            serde_json::to_vec(&pairs).expect("finite floats serialize")
        }
        Format::Bin => encode_bin(values.iter().flat_map(|c| [c.re, c.im]).collect::<Vec<_>>().into_iter()),
    })
}

pub fn write_spectrum(path: &Path, format: Option<Format>, values: &[f64]) -> Result<(), SignalFileError> {
    let format = resolve_format(path, format)?;
    fs::write(path, encode_real(values, format)?)?;
    Ok(())
}

pub fn write_complex_spectrum(
    path: &Path,
    format: Option<Format>,
    values: &[Complex<f64>],
) -> Result<(), SignalFileError> {
    let format = resolve_format(path, format)?;
    fs::write(path, encode_complex(values, format)?)?;
    Ok(())
}
