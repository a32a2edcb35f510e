//! The `lukas` command line front end.
//!
//! Every command writes JSON or a single text line to standard output and
//! diagnostics to standard error. Exit codes: 0 success, 1 failed
//! verification, 2 usage or parse error.

use clap::{ArgGroup, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::error::Error;
use crate::involution::{lodestar_involution, mirror_involution};
use crate::multiset::DegreeMultiset;
use crate::path::{LukasPath, Profile};
use crate::poly::{c_tilde, c_tilde_profile};
use crate::series::ProfileSeries;
use crate::tree::PlaneTree;
use crate::verify::{self, VerifyConfig};

#[derive(Debug, Parser)]
#[command(name = "lukas", about = "Łukasiewicz paths, plane trees and area/depth polynomials")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Profile, area, depth and matching of a path.
    Stats {
        #[arg(long)]
        path: String,
    },
    /// Apply a bijection or involution to a path or tree.
    #[command(group(ArgGroup::new("input").required(true).args(["path", "tree"])))]
    Map {
        #[arg(long)]
        path: Option<String>,
        #[arg(long)]
        tree: Option<String>,
        #[arg(long, value_enum)]
        apply: MapKind,
    },
    /// Area/depth polynomial of a multiset family or a profile.
    #[command(group(ArgGroup::new("family").required(true).args(["multiset", "profile"])))]
    Poly {
        #[arg(long, allow_hyphen_values = true)]
        multiset: Option<String>,
        #[arg(long, requires = "multiset", conflicts_with = "profile")]
        first: Option<u32>,
        #[arg(long, requires = "multiset", conflicts_with = "profile")]
        last: Option<u32>,
        #[arg(long, allow_hyphen_values = true)]
        profile: Option<String>,
    },
    /// Run every exhaustive check and print the report.
    Verify {
        #[arg(long, default_value_t = 12, value_parser = clap::value_parser!(u64).range(1..))]
        max_steps: u64,
        #[arg(long, default_value_t = 5)]
        series_order: usize,
        #[arg(long, default_value_t = 3)]
        series_degree: u32,
    },
    /// Solve the generating-function recursion to a truncation.
    Series {
        #[arg(long)]
        order: usize,
        #[arg(long)]
        max_degree: u32,
        #[arg(long)]
        check: bool,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MapKind {
    /// path -> tree
    Tau,
    /// tree -> path
    Lambda,
    /// tree -> tree
    Mirror,
    /// tree -> tree
    Swap,
    /// path -> path, mirror involution
    Psi,
    /// path -> path, mirror then lodestar swap
    Phi,
}

/// What a command printed and how it exits.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { stdout, stderr: String::new(), code: 0 }
    }

    fn usage(msg: impl std::fmt::Display) -> Self {
        Outcome { stdout: String::new(), stderr: format!("error: {msg}"), code: 2 }
    }
}

impl From<Error> for Outcome {
    fn from(e: Error) -> Self {
        Outcome::usage(e)
    }
}

/// Parses `args` (program name first) and runs the command.
pub fn run_args<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(cli.command),
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            if code == 0 {
                Outcome::ok(text)
            } else {
                Outcome { stdout: String::new(), stderr: text, code }
            }
        }
    }
}

pub fn run(command: Command) -> Outcome {
    let result = match command {
        Command::Stats { path } => stats(&path),
        Command::Map { path, tree, apply } => map(path.as_deref(), tree.as_deref(), apply),
        Command::Poly { multiset, first, last, profile } => {
            poly(multiset.as_deref(), first, last, profile.as_deref())
        }
        Command::Verify { max_steps, series_order, series_degree } => {
            return verify(VerifyConfig { max_steps: max_steps as usize, series_order, series_degree })
        }
        Command::Series { order, max_degree, check } => return series(order, max_degree, check),
    };
    result.unwrap_or_else(Outcome::from)
}

fn stats(text: &str) -> Result<Outcome, Error> {
    let path = LukasPath::parse(text)?;
    // positions are 1-based in the output
    let matching: Vec<_> = path
        .match_downs()
        .pairs
        .iter()
        .map(|(down, m)| json!({ "down": down + 1, "up": m.up + 1, "rank": m.rank }))
        .collect();
    let out = json!({
        "path": path.to_string(),
        "steps": path,
        "profile": path.profile(),
        "multiset": path.profile_multiset().to_string(),
        "area_vector": path.area_vector(),
        "area": path.area(),
        "depth_vector": path.depth_vector(),
        "depth": path.depth(),
        "matching": matching,
    });
    Ok(Outcome::ok(out.to_string()))
}

fn map(path: Option<&str>, tree: Option<&str>, apply: MapKind) -> Result<Outcome, Error> {
    let text = match (path, tree, apply) {
        (Some(p), None, MapKind::Tau) => PlaneTree::from_path(&LukasPath::parse(p)?).to_string(),
        (Some(p), None, MapKind::Psi) => mirror_involution(&LukasPath::parse(p)?).to_string(),
        (Some(p), None, MapKind::Phi) => lodestar_involution(&LukasPath::parse(p)?).to_string(),
        (None, Some(t), MapKind::Lambda) => PlaneTree::parse(t)?.to_path().to_string(),
        (None, Some(t), MapKind::Mirror) => PlaneTree::parse(t)?.mirror().to_string(),
        (None, Some(t), MapKind::Swap) => PlaneTree::parse(t)?.lodestar_swap().to_string(),
        (Some(_), None, kind) => {
            return Ok(Outcome::usage(format!("--apply {kind:?} takes --tree, not --path")))
        }
        (None, Some(_), kind) => {
            return Ok(Outcome::usage(format!("--apply {kind:?} takes --path, not --tree")))
        }
        _ => return Ok(Outcome::usage("give exactly one of --path or --tree")),
    };
    Ok(Outcome::ok(text))
}

fn poly(
    multiset: Option<&str>,
    first: Option<u32>,
    last: Option<u32>,
    profile: Option<&str>,
) -> Result<Outcome, Error> {
    let poly = match (multiset, profile) {
        (Some(m), None) => c_tilde(&m.parse::<DegreeMultiset>()?, first, last),
        (None, Some(k)) => c_tilde_profile(&k.parse::<Profile>()?),
        _ => return Ok(Outcome::usage("give exactly one of --multiset or --profile")),
    };
    let out = json!({
        "poly": poly,
        "text": poly.to_string(),
        "symmetric": poly.is_symmetric(),
    });
    Ok(Outcome::ok(out.to_string()))
}

fn verify(config: VerifyConfig) -> Outcome {
    let report = verify::run(config);
    let stderr = match report.first_failure() {
        Some(c) => format!(
            "check {} failed: {}",
            c.name,
            c.counterexample.as_deref().unwrap_or("no counterexample recorded")
        ),
        None => String::new(),
    };
    Outcome { stdout: report.to_json(), stderr, code: if report.overall { 0 } else { 1 } }
}

fn series(order: usize, max_degree: u32, check: bool) -> Outcome {
    let series = ProfileSeries::solve(order, max_degree);
    let mut out = Outcome::ok(series.to_json());
    if check {
        let bad = series.mismatches();
        if let Some(first) = bad.first() {
            out.code = 1;
            out.stderr = format!(
                "{} mismatches; first at {{{}}}: series {} vs enumeration {}",
                bad.len(),
                first.multiset,
                first.series,
                first.enumerated
            );
        }
    }
    out
}
