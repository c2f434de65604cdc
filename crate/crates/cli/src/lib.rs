//! Front end for `mhproj`: reads a ring description, runs one analysis, and
//! writes a text report (and optionally JSON).
//!
//! Exit codes: 0 success, 1 analysis error, 2 input error.

pub mod error;
pub mod input;
pub mod report;
pub mod text;

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};

pub use error::CliError;
pub use input::{InputDocument, Options};
pub use report::Report;

#[derive(Debug, Parser)]
#[command(name = "mhproj", version, about = "Multihomogeneous Proj of a Z^r-graded polynomial ring")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Common {
    /// Ring description (JSON).
    pub input: PathBuf,
    /// Also write the report as JSON to this file.
    #[arg(long, value_name = "OUT")]
    pub json: Option<PathBuf>,
    /// Exponent box for enumerations that are not provably finite.
    #[arg(long = "box", value_name = "N", value_parser = clap::value_parser!(u32).range(1..))]
    pub exponent_box: Option<u32>,
    /// Worker threads (default: one per core).
    #[arg(long, value_name = "N", value_parser = clap::value_parser!(u32).range(1..))]
    pub threads: Option<u32>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Chart atlas, point and normality flags, weight cone.
    Analyze(Common),
    /// Global sections of O(d) next to the graded piece A_d.
    Sections {
        #[command(flatten)]
        common: Common,
        /// Twist, comma separated, e.g. 2,-1.
        #[arg(allow_hyphen_values = true)]
        degree: String,
    },
    /// Line-bundle criterion for one twist, or a scan over a box of twists.
    Linebundle {
        #[command(flatten)]
        common: Common,
        /// Twist, comma separated.
        #[arg(allow_hyphen_values = true, required_unless_present = "scan")]
        degree: Option<String>,
        /// Tabulate every twist with entries in [-N, N].
        #[arg(long, value_name = "N", conflicts_with = "degree")]
        scan: Option<u32>,
    },
    /// GIT chambers, orbit cones and semistable supports.
    Gitfan(Common),
    /// Birationality witness and isomorphism criterion.
    Compare(Common),
}

impl Command {
    fn common(&self) -> &Common {
        match self {
            Command::Analyze(c) | Command::Gitfan(c) | Command::Compare(c) => c,
            Command::Sections { common, .. } | Command::Linebundle { common, .. } => common,
        }
    }
}

fn parse_degree(s: &str, rank: usize) -> Result<Vec<i64>, CliError> {
    let d = s
        .split(',')
        .map(|p| p.trim().parse::<i64>())
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| CliError::Input(format!("twist {s:?}: {e}")))?;
    if d.len() != rank {
        return Err(CliError::Input(format!(
            "twist {s:?}: expected {rank} entries, found {}",
            d.len()
        )));
    }
    Ok(d)
}

/// Runs one command and returns the report.
pub fn execute(command: &Command) -> Result<Report, CliError> {
    let common = command.common();
    let doc = InputDocument::read(&common.input)?;
    let ring = doc.ring()?;
    let mut options = doc.options.clone();
    if let Some(b) = common.exponent_box {
        options.exponent_box = b;
    }
    let work = || match command {
        Command::Analyze(_) => report::analyze(&ring),
        Command::Sections { degree, .. } => {
            let d = parse_degree(degree, ring.rank())?;
            report::sections(&ring, &d, options.exponent_box)
        }
        Command::Linebundle { degree, scan, .. } => match (degree, scan) {
            (_, Some(bound)) => report::line_bundle_scan(&ring, *bound),
            (Some(degree), None) => report::line_bundle(&ring, &parse_degree(degree, ring.rank())?),
            (None, None) => Err(CliError::Input("linebundle needs a twist or --scan N".into())),
        },
        Command::Gitfan(_) => report::git_fan(&ring),
        Command::Compare(_) => report::compare(&ring, &options),
    };
    match common.threads {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n as usize)
            .build()
            .map_err(|e| CliError::Input(format!("--threads {n}: {e}")))?
            .install(work),
        None => work(),
    }
}

fn write_json(path: &Path, report: &Report) -> Result<(), CliError> {
    let mut text = serde_json::to_string_pretty(report).expect("reports serialize");
    text.push('\n');
    std::fs::write(path, text).map_err(|e| CliError::Output {
        path: path.display().to_string(),
        message: e.to_string(),
    })
}

/// Parses `args` (program name first), runs, and writes to `out` and `err`.
/// Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            let _ = if code == 0 {
                write!(out, "{rendered}")
            } else {
                write!(err, "{rendered}")
            };
            return code;
        }
    };
    let result = execute(&cli.command).and_then(|report| {
        if let Some(path) = &cli.command.common().json {
            write_json(path, &report)?;
        }
        Ok(report)
    });
    match result {
        Ok(report) => {
            let _ = write!(out, "{}", text::render(&report));
            0
        }
        Err(e) => {
            let _ = writeln!(err, "mhproj: {e}");
            e.exit_code()
        }
    }
}
