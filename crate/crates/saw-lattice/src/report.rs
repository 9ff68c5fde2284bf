//! Machine-readable outputs: CSV and JSON with embedded configuration
//! hashes.
//!
//! Every emitted file carries the hash of its full flag set, so a run can
//! be reproduced exactly; reruns are byte-identical apart from the
//! timestamp header line. CSV uses '.' decimals, no thousands separators
//! and LF line endings.

use std::fmt::Write as _;
use std::path::Path;

use sha2::{Digest, Sha256};

use crate::error::Result;

/// Hash of a canonical key=value flag list; 16 hex chars.
pub fn config_hash(entries: &[(&str, String)]) -> String {
    let mut canon = String::new();
    for (k, v) in entries {
        let _ = write!(canon, "{k}={v};");
    }
    let digest = Sha256::digest(canon.as_bytes());
    let mut out = String::with_capacity(16);
    for byte in &digest[..8] {
        let _ = write!(out, "{byte:02x}");
    }
    out
}

fn unix_now() -> u64 {
    std::time::SystemTime::now()
        .duration_since(std::time::UNIX_EPOCH)
        .map(|d| d.as_secs())
        .unwrap_or(0)
}

/// A CSV document with comment headers. The timestamp line is the only
/// part that varies across identical runs.
pub struct CsvReport {
    lines: Vec<String>,
}

impl CsvReport {
    pub fn new(command: &str, hash: &str, columns: &str) -> Self {
        let lines = vec![
            format!("# command {command}"),
            format!("# config {hash}"),
            format!("# timestamp_unix {}", unix_now()),
            columns.to_string(),
        ];
        CsvReport { lines }
    }

    pub fn push_row(&mut self, row: String) {
        self.lines.push(row);
    }

    pub fn render(&self) -> String {
        let mut out = self.lines.join("\n");
        out.push('\n');
        out
    }
}

/// Wraps a JSON value with command, config hash and timestamp fields and
/// pretty-prints it (the timestamp lands on a line of its own).
pub fn render_json(command: &str, hash: &str, body: serde_json::Value) -> String {
    let doc = serde_json::json!({
        "command": command,
        "config": hash,
        "generated_at_unix": unix_now(),
        "result": body,
    });
    let mut out = serde_json::to_string_pretty(&doc).expect("serializable report");
    out.push('\n');
    out
}

/// Writes to the path, or to stdout when no path is given.
pub fn emit(path: Option<&Path>, content: &str) -> Result<()> {
    match path {
        Some(p) => {
            if let Some(dir) = p.parent() {
                if !dir.as_os_str().is_empty() {
                    std::fs::create_dir_all(dir)?;
                }
            }
            std::fs::write(p, content)?;
        }
        None => print!("{content}"),
    }
    Ok(())
}

/// Formats a float with full round-trip precision and '.' decimals.
pub fn fmt_f64(x: f64) -> String {
    format!("{x:.12e}")
}
