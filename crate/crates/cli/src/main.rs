//! `rd-workbench`: command-line front end for rd-core.
//!
//! Tabular commands (`growth`, `rd-degree`, `centroid-verify`) print CSV, or
//! with `--out` write the CSV and a JSON sidecar. The other commands print a
//! JSON summary. Failures print a single `error: kind=<kind> reason=<text>`
//! line on stderr and exit with 2 (usage), 3 (capacity) or 4 (failed check).

mod commands;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};
use rd_core::group::DEFAULT_CAP;
use rd_core::spectral::{FamilyTag, DEFAULT_MAX_ITERS, DEFAULT_TOL};
use rd_core::centroid::CentroidStrategy;

#[derive(Debug, Parser)]
#[command(name = "rd-workbench", version, about = "Rapid-decay experiments on finitely generated groups")]
pub struct Cli {
    /// Largest number of group elements any enumeration may hold.
    #[arg(long, global = true, env = "RD_WORKBENCH_CAP", default_value_t = DEFAULT_CAP)]
    pub cap: usize,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Growth function γ(0..=R).
    Growth(GrowthArgs),
    /// Certified bounds for the operator norm of left convolution by f.
    Opnorm(OpnormArgs),
    /// Operator-to-ℓ² ratio profile and its fitted degree.
    RdDegree(RdDegreeArgs),
    /// ‖f‖₁ minus the operator norm, for nonnegative f.
    Kesten(KestenArgs),
    /// Exhaustive median-graph recognition.
    MedianCheck(GraphArgs),
    /// Hyperplanes of a median graph and the poset separating a pair.
    Hyperplanes(HyperplaneArgs),
    /// Maxima of the three centroid condition sets over balls.
    CentroidVerify(CentroidArgs),
    /// Weighted ℓ² sum of matrix coefficients of the regular representation.
    CoeffDecay(CoeffDecayArgs),
}

/// `A:B` with `A ≤ B`.
fn parse_window(s: &str) -> Result<(u32, u32), String> {
    let (a, b) = s.split_once(':').ok_or("expected A:B")?;
    let a: u32 = a.trim().parse().map_err(|_| format!("bad window start {a:?}"))?;
    let b: u32 = b.trim().parse().map_err(|_| format!("bad window end {b:?}"))?;
    if a > b {
        return Err(format!("empty window {a}:{b}"));
    }
    Ok((a, b))
}

fn parse_pair(s: &str) -> Result<(usize, usize), String> {
    let (u, v) = s.split_once(',').ok_or("expected u,v")?;
    let u = u.trim().parse().map_err(|_| format!("bad vertex {u:?}"))?;
    let v = v.trim().parse().map_err(|_| format!("bad vertex {v:?}"))?;
    Ok((u, v))
}

#[derive(Debug, Args)]
pub struct GrowthArgs {
    /// zd:d, free:k, heisenberg, lamplighter or raag:<graph>.
    #[arg(long)]
    pub group: String,
    #[arg(long)]
    pub radius: u32,
    /// Radii used for the log-log fit in the sidecar; defaults to 1:R.
    #[arg(long, value_parser = parse_window)]
    pub window: Option<(u32, u32)>,
    /// CSV path; the sidecar goes next to it with a .json extension.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct OpnormArgs {
    #[arg(long)]
    pub group: String,
    /// ball:R, sphere:R, gen-sum, delta:<word> or random:R,seed.
    #[arg(long = "fn")]
    pub function: String,
    /// Truncation radius.
    #[arg(long)]
    pub radius: u32,
    #[arg(long, default_value_t = DEFAULT_MAX_ITERS)]
    pub iters: usize,
    #[arg(long, default_value_t = DEFAULT_TOL)]
    pub tol: f64,
    /// Seed of the fallback start vector.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct RdDegreeArgs {
    #[arg(long)]
    pub group: String,
    /// balls, spheres or random.
    #[arg(long, default_value = "balls")]
    pub family: FamilyTag,
    #[arg(long)]
    pub rmax: u32,
    /// Fit window; defaults to 1:rmax.
    #[arg(long, value_parser = parse_window)]
    pub window: Option<(u32, u32)>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Compress the operator for f_r to B(r + slack).
    #[arg(long, default_value_t = 0)]
    pub slack: u32,
    #[arg(long, default_value_t = DEFAULT_MAX_ITERS)]
    pub iters: usize,
    #[arg(long, default_value_t = DEFAULT_TOL)]
    pub tol: f64,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct KestenArgs {
    #[arg(long)]
    pub group: String,
    #[arg(long = "fn")]
    pub function: String,
    #[arg(long)]
    pub radius: u32,
    #[arg(long, default_value_t = DEFAULT_MAX_ITERS)]
    pub iters: usize,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct GraphArgs {
    /// Edge-list file (`n m` then one `u v` per line) or a named graph:
    /// grid:WxH, cube:d, cycle:n, path:n, tree:n,seed, k23.
    #[arg(long)]
    pub graph: String,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct HyperplaneArgs {
    #[command(flatten)]
    pub graph: GraphArgs,
    /// Vertex indices u,v.
    #[arg(long, value_parser = parse_pair)]
    pub pair: Option<(usize, usize)>,
}

#[derive(Debug, Args)]
pub struct CentroidArgs {
    #[arg(long)]
    pub group: String,
    /// median or gromov.
    #[arg(long, default_value = "median")]
    pub strategy: CentroidStrategy,
    #[arg(long)]
    pub rmax: u32,
    /// Radius of the ball the second argument h is drawn from.
    #[arg(long)]
    pub hradius: u32,
    /// Number of h sampled without replacement; the whole ball when omitted
    /// or larger than it.
    #[arg(long)]
    pub sample: Option<usize>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct CoeffDecayArgs {
    #[arg(long)]
    pub group: String,
    #[arg(long)]
    pub xi: String,
    #[arg(long)]
    pub eta: String,
    #[arg(long)]
    pub s: f64,
    #[arg(long)]
    pub radius: u32,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

fn report(kind: &str, reason: &str) {
    let reason = reason.split_whitespace().collect::<Vec<_>>().join(" ");
    eprintln!("error: kind={kind} reason={reason}");
}

fn main() -> ExitCode {
    let argv: Vec<String> = std::env::args().collect();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(cli) => cli,
        Err(e) => {
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = e.print();
                return ExitCode::SUCCESS;
            }
            let text = e.to_string();
            let message: Vec<&str> = text
                .lines()
                .take_while(|l| !l.starts_with("Usage:") && !l.starts_with("For more information"))
                .collect();
            report("usage", message.join(" ").trim_start_matches("error: "));
            return ExitCode::from(2);
        }
    };
    match commands::run(&cli, argv) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            report(e.kind(), &e.to_string());
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
