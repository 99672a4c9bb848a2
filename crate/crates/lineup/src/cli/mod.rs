//! Command-line surface: generation, lifting, verification, table
//! reproduction, membership testing, and threshold queries, with JSON, CSV
//! and Markdown output.

mod format;

use std::io::Write;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::combinatorics::{Configuration, GaleIdeal, Params, Statistics};
use crate::engine::{
    check_weights, generate_h_representation, lineup_counts, new_facet_counts, stability_lift,
    GeneratedSystem,
};
use crate::error::{Error, Result};
use crate::oracle::{brute_force_h_rep, compare_h_reps, is_threshold, ThresholdVerdict};
use crate::{Int, Rat};

pub use format::{render_affine, render_csv, render_json, render_markdown, system_from_json};

#[derive(Parser)]
#[command(
    name = "lineup",
    about = "Generalized exclusion principles: exact H-representations of fermionic and bosonic spectral polytopes",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Markdown,
}

#[derive(Args)]
struct ParamArgs {
    /// fermion or boson
    #[arg(long)]
    statistics: String,
    /// Lineup length r (number of non-zero ensemble weights)
    #[arg(long)]
    r: u32,
    /// Particle count N
    #[arg(long)]
    particles: u32,
    /// Orbital count d
    #[arg(long)]
    orbitals: u32,
}

impl ParamArgs {
    fn params(&self) -> Result<Params> {
        Params::new(
            Statistics::from_str(&self.statistics)?,
            self.particles,
            self.orbitals,
            self.r,
        )
    }
}

#[derive(Subcommand)]
enum Command {
    /// Generate the H-representation at the given parameters.
    Generate {
        #[command(flatten)]
        params: ParamArgs,
        /// Strictly decreasing positive rationals "p/q,..." summing to 1
        #[arg(long)]
        weights: Option<String>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        /// Render decimal approximations next to exact values (display only)
        #[arg(long)]
        decimals: Option<u32>,
        /// Write to a file instead of stdout
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Lift a generated base system (JSON) to larger N and d.
    Lift {
        #[arg(long)]
        base_file: PathBuf,
        #[arg(long)]
        particles: u32,
        #[arg(long)]
        orbitals: u32,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[arg(long)]
        weights: Option<String>,
        #[arg(long)]
        decimals: Option<u32>,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Reproduce the lineup/facet count tables.
    Tables {
        /// ferbos (base-case counts for both statistics) or h36 (the
        /// lineup polytope of the hypersimplex H(3,6))
        #[arg(long)]
        which: String,
        #[arg(long)]
        max_r: Option<u32>,
    },
    /// Compare the engine output against the brute-force oracle (exit 0 iff equal).
    Verify {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long)]
        weights: String,
    },
    /// Decide whether a Gale ideal is threshold; print a certificate.
    Threshold {
        #[arg(long)]
        statistics: String,
        #[arg(long)]
        particles: u32,
        #[arg(long)]
        orbitals: u32,
        /// Generator configurations, e.g. --generators 178 239 456
        #[arg(long, num_args = 1..)]
        generators: Vec<String>,
    },
    /// Test a candidate spectrum for membership in the spectral polytope.
    Membership {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long)]
        weights: String,
        /// Comma-separated rationals of length d
        #[arg(long)]
        spectrum: String,
    },
}

pub fn parse_rational(s: &str) -> Result<Rat> {
    let s = s.trim();
    if let Some((num, den)) = s.split_once('/') {
        let n = Int::from_str(num.trim())
            .map_err(|e| Error::BadWeights(format!("bad rational `{s}`: {e}")))?;
        let d = Int::from_str(den.trim())
            .map_err(|e| Error::BadWeights(format!("bad rational `{s}`: {e}")))?;
        if d == Int::from(0) {
            return Err(Error::BadWeights(format!("zero denominator in `{s}`")));
        }
        Ok(Rat::new(n, d))
    } else {
        let n =
            Int::from_str(s).map_err(|e| Error::BadWeights(format!("bad rational `{s}`: {e}")))?;
        Ok(Rat::from(n))
    }
}

pub fn parse_rational_vector(s: &str) -> Result<Vec<Rat>> {
    s.split(',').map(parse_rational).collect()
}

fn configure_threads() {
    if let Ok(v) = std::env::var("LINEUP_THREADS") {
        if let Ok(n) = v.parse::<usize>() {
            let _ = rayon::ThreadPoolBuilder::new()
                .num_threads(n.max(1))
                .build_global();
        }
    }
}

fn emit(text: &str, output: &Option<PathBuf>) -> Result<()> {
    match output {
        Some(path) => {
            let mut f = std::fs::File::create(path)?;
            f.write_all(text.as_bytes())?;
            if !text.ends_with('\n') {
                f.write_all(b"\n")?;
            }
        }
        None => println!("{text}"),
    }
    Ok(())
}

fn render_system(
    system: &GeneratedSystem,
    format: Format,
    weights: &Option<String>,
    decimals: Option<u32>,
) -> Result<String> {
    let w = match weights {
        Some(s) => {
            let w = parse_rational_vector(s)?;
            check_weights(&w, system.params.r as usize)?;
            Some(w)
        }
        None => None,
    };
    Ok(match format {
        Format::Json => render_json(system, w.as_deref(), decimals)?,
        Format::Csv => render_csv(system),
        Format::Markdown => render_markdown(system, w.as_deref(), decimals),
    })
}

/// Run the CLI; the return value is the process exit code
/// (0 success/inside/threshold, 1 outside/disagreement/not-threshold,
/// 2 usage error).
pub fn run() -> i32 {
    configure_threads();
    let cli = Cli::parse();
    match dispatch(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

fn dispatch(command: Command) -> Result<i32> {
    match command {
        Command::Generate {
            params,
            weights,
            format,
            decimals,
            output,
        } => {
            let params = params.params()?;
            let system = generate_h_representation(&params)?;
            let text = render_system(&system, format, &weights, decimals)?;
            emit(&text, &output)?;
            Ok(0)
        }
        Command::Lift {
            base_file,
            particles,
            orbitals,
            format,
            weights,
            decimals,
            output,
        } => {
            let base = system_from_json(&std::fs::read_to_string(&base_file)?)?;
            let lifted = stability_lift(&base, particles, orbitals)?;
            let text = render_system(&lifted, format, &weights, decimals)?;
            emit(&text, &output)?;
            Ok(0)
        }
        Command::Tables { which, max_r } => {
            let text = tables(&which, max_r)?;
            emit(&text, &None)?;
            Ok(0)
        }
        Command::Verify { params, weights } => {
            let params = params.params()?;
            let w = parse_rational_vector(&weights)?;
            let system = generate_h_representation(&params)?;
            let oracle = brute_force_h_rep(&params, &w)?;
            let report = compare_h_reps(&system, &oracle, &w)?;
            println!("{}", report.summary());
            for line in report
                .missing_in_oracle
                .iter()
                .chain(&report.missing_in_engine)
            {
                println!("  {line}");
            }
            Ok(if report.equal { 0 } else { 1 })
        }
        Command::Threshold {
            statistics,
            particles,
            orbitals,
            generators,
        } => {
            let statistics = Statistics::from_str(&statistics)?;
            // Only the poset structure matters here; r is a placeholder.
            let params = Params::new(statistics, particles, orbitals, 1)?;
            let gens: Vec<Configuration> = generators
                .iter()
                .map(|s| Configuration::parse(s, &params))
                .collect::<Result<_>>()?;
            let ideal = GaleIdeal::generated_by(params, &gens)?;
            println!("ideal size: {}", ideal.len());
            match is_threshold(&ideal)? {
                ThresholdVerdict::Threshold { witness } => {
                    let parts: Vec<String> = witness.iter().map(|x| x.to_string()).collect();
                    println!("threshold: yes");
                    println!("witness functional: ({})", parts.join(", "));
                    Ok(0)
                }
                ThresholdVerdict::NotThreshold { common_point } => {
                    let parts: Vec<String> = common_point.iter().map(|x| x.to_string()).collect();
                    println!("threshold: no");
                    println!("common point of both hulls: ({})", parts.join(", "));
                    Ok(1)
                }
            }
        }
        Command::Membership {
            params,
            weights,
            spectrum,
        } => {
            let params = params.params()?;
            let w = parse_rational_vector(&weights)?;
            check_weights(&w, params.r as usize)?;
            let x =
                parse_rational_vector(&spectrum).map_err(|e| Error::BadSpectrum(e.to_string()))?;
            if x.len() != params.d as usize {
                return Err(Error::BadSpectrum(format!(
                    "expected {} entries, got {}",
                    params.d,
                    x.len()
                )));
            }
            let sum: Rat = x.iter().cloned().sum();
            if sum != Rat::from(Int::from(params.n as i64)) {
                return Err(Error::BadSpectrum(format!(
                    "the equation x_1 + ... + x_{} = {} fails (sum is {})",
                    params.d, params.n, sum
                )));
            }
            let system = generate_h_representation(&params)?;
            let violations = membership_violations(&system, &x, &w);
            if violations.is_empty() {
                println!("inside");
                Ok(0)
            } else {
                println!("outside; violated inequalities:");
                for v in violations {
                    println!("  {v}");
                }
                Ok(1)
            }
        }
    }
}

/// Sort the spectrum decreasingly and evaluate every inequality exactly;
/// returns a description of each violated row.
pub fn membership_violations(system: &GeneratedSystem, x: &[Rat], w: &[Rat]) -> Vec<String> {
    let mut sorted = x.to_vec();
    sorted.sort_by(|a, b| b.cmp(a));
    let mut out = Vec::new();
    for ineq in &system.inequalities {
        let lhs_value: Rat = ineq
            .lhs
            .iter()
            .zip(sorted.iter())
            .map(|(&c, v)| Rat::from(Int::from(c)) * v)
            .sum();
        let rhs = ineq.rhs_value(w);
        if lhs_value > rhs {
            out.push(format!(
                "{} . x_dec = {} > {} = {}",
                format::render_vec_i64(&ineq.lhs),
                lhs_value,
                rhs,
                format::render_affine(&ineq.rhs_affine)
            ));
        }
    }
    out
}

fn tables(which: &str, max_r: Option<u32>) -> Result<String> {
    match which {
        "ferbos" => {
            let max_r = max_r.unwrap_or(8);
            let mut out = String::new();
            out.push_str("| r |");
            for r in 1..=max_r {
                out.push_str(&format!(" {r} |"));
            }
            out.push('\n');
            out.push_str("|---|");
            for _ in 1..=max_r {
                out.push_str("---|");
            }
            out.push('\n');
            for statistics in [Statistics::Fermion, Statistics::Boson] {
                let (n, d) = base_case_params(statistics, max_r);
                let params = Params::new(statistics, n, d, max_r)?;
                let counts = lineup_counts(&params)?;
                let system = generate_h_representation(&params)?;
                let news = new_facet_counts(&system);
                out.push_str(&format!("| {statistics} lineups |"));
                for c in &counts {
                    out.push_str(&format!(" {c} |"));
                }
                out.push('\n');
                out.push_str(&format!("| {statistics} new inequalities |"));
                for c in &news {
                    out.push_str(&format!(" {c} |"));
                }
                out.push('\n');
            }
            Ok(out)
        }
        "h36" => {
            let max_r = max_r.unwrap_or(10);
            let params = Params::new(Statistics::Fermion, 3, 6, max_r)?;
            let counts = lineup_counts(&params)?;
            let system = generate_h_representation(&params)?;
            let news = new_facet_counts(&system);
            let mut out = String::new();
            out.push_str("| r |");
            for r in 1..=max_r {
                out.push_str(&format!(" {r} |"));
            }
            out.push_str("\n|---|");
            for _ in 1..=max_r {
                out.push_str("---|");
            }
            out.push('\n');
            out.push_str("| lineups |");
            for c in &counts {
                out.push_str(&format!(" {c} |"));
            }
            out.push_str("\n| new inequalities |");
            for c in &news {
                out.push_str(&format!(" {c} |"));
            }
            out.push('\n');
            Ok(out)
        }
        other => Err(Error::InvalidParams(format!(
            "unknown table `{other}` (expected ferbos or h36)"
        ))),
    }
}

/// Base-case parameters used by the count tables: the stable minimum
/// (r-1, 2r-2) for fermions and (r-1, r) for bosons, bumped at tiny r so the
/// trivial facets stay distinct.
pub fn base_case_params(statistics: Statistics, r: u32) -> (u32, u32) {
    match statistics {
        Statistics::Fermion => {
            let n = (r.saturating_sub(1)).max(2);
            let d = (2 * r).saturating_sub(2).max(n + 2);
            (n, d)
        }
        Statistics::Boson => {
            let n = (r.saturating_sub(1)).max(2);
            let d = r.max(3);
            (n, d)
        }
    }
}
