use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::time::Instant;

use chrono::{SecondsFormat, Utc};
use rd_core::fit::LineFit;
use rd_core::{Error, Result};
use serde::Serialize;

/// Provenance of one invocation. `started_at` and `duration_secs` are the
/// only fields that vary between identical runs.
#[derive(Debug, Clone, Serialize)]
pub struct RunManifest {
    pub command_line: Vec<String>,
    pub group: Option<String>,
    pub seeds: Vec<u64>,
    pub cap: usize,
    pub tool_version: &'static str,
    pub started_at: String,
    pub duration_secs: f64,
}

pub struct Run {
    argv: Vec<String>,
    cap: usize,
    started: Instant,
    started_at: String,
}

impl Run {
    pub fn start(argv: Vec<String>, cap: usize) -> Self {
        Run {
            argv,
            cap,
            started: Instant::now(),
            started_at: Utc::now().to_rfc3339_opts(SecondsFormat::Millis, true),
        }
    }

    pub fn manifest(&self, group: Option<String>, seeds: Vec<u64>) -> RunManifest {
        RunManifest {
            command_line: self.argv.clone(),
            group,
            seeds,
            cap: self.cap,
            tool_version: env!("CARGO_PKG_VERSION"),
            started_at: self.started_at.clone(),
            duration_secs: self.started.elapsed().as_secs_f64(),
        }
    }
}

/// Least-squares line in log-log coordinates, as written to sidecars.
#[derive(Debug, Clone, Serialize)]
pub struct FitSummary {
    pub window: [u32; 2],
    pub x: &'static str,
    pub y: &'static str,
    pub slope: f64,
    pub intercept: f64,
    pub r2: f64,
}

impl FitSummary {
    pub fn new(window: (u32, u32), y: &'static str, fit: LineFit) -> Self {
        FitSummary {
            window: [window.0, window.1],
            x: "ln(1+r)",
            y,
            slope: fit.slope,
            intercept: fit.intercept,
            r2: fit.r2,
        }
    }
}

fn io_error(path: &Path, e: io::Error) -> Error {
    Error::Usage(format!("cannot write {}: {e}", path.display()))
}

/// `growth.csv` → `growth.json`.
pub fn sidecar_path(csv: &Path) -> PathBuf {
    csv.with_extension("json")
}

/// Writes to stdout; a closed pipe downstream is not an error.
fn print_stdout(bytes: &[u8]) -> Result<()> {
    let mut out = io::stdout().lock();
    match out.write_all(bytes).and_then(|()| out.flush()) {
        Err(e) if e.kind() != io::ErrorKind::BrokenPipe => Err(io_error(Path::new("<stdout>"), e)),
        _ => Ok(()),
    }
}

fn csv_bytes<R: Serialize>(rows: &[R]) -> Result<Vec<u8>> {
    let mut writer = csv::Writer::from_writer(Vec::new());
    for row in rows {
        writer
            .serialize(row)
            .map_err(|e| Error::Usage(format!("csv encoding failed: {e}")))?;
    }
    writer
        .into_inner()
        .map_err(|e| Error::Usage(format!("csv encoding failed: {e}")))
}

fn json_string<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("report types serialize")
}

/// Tabular result: CSV on stdout, or the CSV at `out` plus a JSON sidecar
/// next to it, whose contents are echoed on stdout.
pub fn emit_table<R: Serialize, S: Serialize>(out: Option<&Path>, rows: &[R], sidecar: &S) -> Result<()> {
    let body = csv_bytes(rows)?;
    match out {
        None => print_stdout(&body),
        Some(path) => {
            fs::write(path, &body).map_err(|e| io_error(path, e))?;
            let side = sidecar_path(path);
            let json = json_string(sidecar);
            let json = format!("{json}\n");
            fs::write(&side, &json).map_err(|e| io_error(&side, e))?;
            print_stdout(json.as_bytes())
        }
    }
}

/// Summary result: JSON on stdout, and at `out` when given.
pub fn emit_summary<S: Serialize>(out: Option<&Path>, summary: &S) -> Result<()> {
    let json = format!("{}\n", json_string(summary));
    if let Some(path) = out {
        fs::write(path, &json).map_err(|e| io_error(path, e))?;
    }
    print_stdout(json.as_bytes())
}
