//! Command-line surface: statistics, bijective maps, enumeration, joint
//! distributions, generating functions, and the verification harness.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or domain error.

use std::process::ExitCode;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use permdrop::algebra;
use permdrop::ballot::{self, BallotSequence};
use permdrop::codes;
use permdrop::enumerate::{self, enumerate, Family, SetSpec};
use permdrop::parse::{parse_permutation, parse_subexcedent};
use permdrop::pattern::PatternSpec;
use permdrop::verify::{self, CheckId, StatName};
use permdrop::Error;

#[derive(Parser)]
#[command(
    name = "permdrop",
    version,
    about = "Statistics and bijections on permutations with bounded drop size"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print all statistics and marker sets of a permutation as JSON.
    Stats { permutation: String },
    /// Apply a bijection or code to the input.
    Map {
        #[arg(long, value_enum)]
        via: MapVia,
        /// Bound parameter for alpha/beta/delta (defaults per map).
        #[arg(long)]
        k: Option<usize>,
        input: String,
    },
    /// Stream the members of a family, one per line.
    Enum {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: Option<usize>,
        /// Pattern to avoid, e.g. 213.
        #[arg(long)]
        avoid: Option<String>,
        /// Underlined adjacencies of the pattern, e.g. 1 or 1,2.
        #[arg(long)]
        adj: Option<String>,
        /// Print only the number of members.
        #[arg(long)]
        count: bool,
    },
    /// Joint distribution of statistics over a family.
    Dist {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        avoid: Option<String>,
        #[arg(long)]
        adj: Option<String>,
        /// Comma-separated statistic names, e.g. inv,lmax.
        #[arg(long)]
        stats: String,
        #[arg(long, value_enum, default_value = "csv")]
        format: DistFormat,
    },
    /// Print a generating function in canonical polynomial form.
    Gf {
        #[arg(long, value_enum)]
        formula: Formula,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        k: Option<u32>,
        /// Truncation order for the G series (defaults to n).
        #[arg(long)]
        order: Option<u32>,
    },
    /// Run a verification check and print its JSON report.
    Verify {
        /// One of the check ids, or "all".
        #[arg(long)]
        check: String,
        #[arg(long, default_value_t = verify::DEFAULT_MAX_N)]
        max_n: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum MapVia {
    Gamma,
    GammaInv,
    Acode,
    Bcode,
    Bdecode,
    Lehmer,
    LehmerInv,
    Alpha,
    AlphaInv,
    Beta,
    BetaInv,
    Delta,
}

#[derive(Clone, Copy, ValueEnum, PartialEq)]
enum FamilyArg {
    All,
    #[value(alias = "A")]
    A,
    #[value(alias = "S")]
    S,
    #[value(alias = "S321")]
    S321,
    Ballot,
}

#[derive(Clone, Copy, ValueEnum)]
enum DistFormat {
    Csv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Formula {
    Theorem1,
    Inv,
    #[value(alias = "G")]
    G,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn family_spec(family: FamilyArg, n: usize, k: Option<usize>) -> Result<SetSpec, Error> {
    let family = match family {
        FamilyArg::All => Family::All,
        FamilyArg::A => Family::BoundedDrop,
        FamilyArg::S => Family::BoundedLift,
        FamilyArg::S321 => Family::EndsIn321,
        FamilyArg::Ballot => Family::Ballot,
    };
    let k = match (family, k) {
        (Family::All, _) => 0,
        (_, Some(k)) => k,
        (_, None) => {
            return Err(Error::Parse("--k is required for this family".into()));
        }
    };
    Ok(SetSpec::new(family, n, k))
}

fn parse_avoid(avoid: &Option<String>, adj: &Option<String>) -> Result<Option<PatternSpec>, Error> {
    let Some(avoid) = avoid else {
        if adj.is_some() {
            return Err(Error::Parse("--adj requires --avoid".into()));
        }
        return Ok(None);
    };
    let letters: Vec<i64> = permdrop::parse::parse_permutation(avoid)?
        .word()
        .iter()
        .map(|&v| v as i64)
        .collect();
    let adjacency: Vec<usize> = match adj {
        None => Vec::new(),
        Some(a) => a
            .split(',')
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad adjacency index {t:?}")))
            })
            .collect::<Result<_, _>>()?,
    };
    Ok(Some(PatternSpec::vincular(&letters, &adjacency)?))
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    match cli.command {
        Command::Stats { permutation } => {
            let p = parse_permutation(&permutation)?;
            let m = p.marker_sets();
            let d = p.cycle_decomposition();
            let vnw = if p.is_empty() { 0 } else { p.vnw()? };
            let out = json!({
                "word": p.to_string(),
                "n": p.n(),
                "inv": p.inv_count(),
                "des": p.des_count(),
                "maxdrop": p.maxdrop(),
                "maxlift": p.maxlift(),
                "lmax": p.lmax(),
                "rmin": p.rmin(),
                "rmax": p.rmax(),
                "cyc": d.cyc(),
                "sor": p.sorting_index(),
                "dis": p.dis(),
                "vnw": vnw,
                "Lmal": m.lmal,
                "Lmap": m.lmap,
                "Rmil": m.rmil,
                "Rmip": m.rmip,
                "Rmal": m.rmal,
                "Cyc": d.cyc_set(),
                "cycles": d.cycles,
            });
            println!("{out}");
        }
        Command::Map { via, k, input } => {
            let line = match via {
                MapVia::Gamma => codes::gamma(&parse_permutation(&input)?).to_string(),
                MapVia::GammaInv => codes::gamma_inverse(&parse_permutation(&input)?).to_string(),
                MapVia::Acode => codes::a_code(&parse_permutation(&input)?).to_string(),
                MapVia::Bcode => codes::b_code(&parse_permutation(&input)?).to_string(),
                MapVia::Bdecode => codes::b_decode(&parse_subexcedent(&input)?).to_string(),
                MapVia::Lehmer => codes::lehmer_code(&parse_permutation(&input)?).to_string(),
                MapVia::LehmerInv => codes::lehmer_decode(&parse_subexcedent(&input)?).to_string(),
                MapVia::Alpha => ballot::alpha(&parse_permutation(&input)?, k)?.to_string(),
                MapVia::AlphaInv => {
                    ballot::alpha_inverse(&BallotSequence::parse(&input)?).to_string()
                }
                MapVia::Beta => ballot::beta(&parse_permutation(&input)?, k)?.to_string(),
                MapVia::BetaInv => {
                    ballot::beta_inverse(&BallotSequence::parse(&input)?).to_string()
                }
                MapVia::Delta => ballot::delta(&parse_permutation(&input)?, k)?.to_string(),
            };
            println!("{line}");
        }
        Command::Enum {
            family,
            n,
            k,
            avoid,
            adj,
            count,
        } => {
            if family == FamilyArg::Ballot {
                if avoid.is_some() {
                    return Err(Error::FamilyMismatch(
                        "pattern avoidance does not apply to ballot sequences".into(),
                    ));
                }
                let k = k.ok_or_else(|| Error::Parse("--k is required for this family".into()))?;
                let members = ballot::enumerate_ballot(n, k)?;
                if count {
                    println!("{}", members.len());
                } else {
                    for a in members {
                        println!("{a}");
                    }
                }
            } else {
                let mut spec = family_spec(family, n, k)?;
                spec.avoid = parse_avoid(&avoid, &adj)?;
                if count {
                    println!("{}", enumerate::count(&spec)?);
                } else {
                    for p in enumerate(&spec)? {
                        println!("{p}");
                    }
                }
            }
        }
        Command::Dist {
            family,
            n,
            k,
            avoid,
            adj,
            stats,
            format,
        } => {
            let mut spec = family_spec(family, n, k)?;
            spec.avoid = parse_avoid(&avoid, &adj)?;
            let stats: Vec<StatName> = stats
                .split(',')
                .filter(|t| !t.is_empty())
                .map(StatName::from_str)
                .collect::<Result<_, _>>()?;
            let dist = verify::distribution(&spec, &stats)?;
            match format {
                DistFormat::Csv => {
                    let header: Vec<String> = dist.keys.iter().map(|s| s.to_string()).collect();
                    println!("{},count", header.join(","));
                    for (key, count) in &dist.table {
                        let row: Vec<String> = key.iter().map(|v| v.to_string()).collect();
                        println!("{},{count}", row.join(","));
                    }
                }
                DistFormat::Json => {
                    let rows: Vec<_> = dist
                        .table
                        .iter()
                        .map(|(key, count)| json!({"key": key, "count": count}))
                        .collect();
                    let out = json!({
                        "stats": dist.keys.iter().map(|s| s.to_string()).collect::<Vec<_>>(),
                        "table": rows,
                        "total": dist.total,
                    });
                    println!("{out}");
                }
            }
        }
        Command::Gf {
            formula,
            n,
            k,
            order,
        } => {
            let line = match formula {
                Formula::Theorem1 => {
                    let k = k.ok_or_else(|| Error::Parse("--k is required for theorem1".into()))?;
                    algebra::joint_gf_product(n, k)?.to_string()
                }
                Formula::Inv => {
                    let k = k.ok_or_else(|| Error::Parse("--k is required for inv".into()))?;
                    algebra::inv_gf(n, k)?.to_string()
                }
                Formula::G => algebra::g_series(order.unwrap_or(n)).to_string(),
            };
            println!("{line}");
        }
        Command::Verify { check, max_n } => {
            let reports = if check == "all" {
                verify::run_all(max_n)?
            } else {
                vec![verify::run_check(CheckId::from_str(&check)?, max_n)?]
            };
            let all_passed = reports.iter().all(|r| r.passed());
            if reports.len() == 1 {
                println!(
                    "{}",
                    serde_json::to_string(&reports[0]).expect("serializable")
                );
            } else {
                println!("{}", serde_json::to_string(&reports).expect("serializable"));
            }
            if !all_passed {
                return Ok(ExitCode::from(1));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}
