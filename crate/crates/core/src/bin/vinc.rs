//! `vinc`: command-line front end.
//!
//! Exit codes: 0 success, 1 counterexample or inequality found,
//! 2 usage or parse error, 3 precondition violated.

use std::fs;
use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use vincular::analysis::{self, Check};
use vincular::report::{self, OutputFormat};
use vincular::{
    bijections, enumeration, AvoidanceClass, Error, Limits, MultiStatistic, PermClass, Permutation, TextStyle,
    VincularPattern,
};

#[derive(Parser)]
#[command(
    name = "vinc",
    version,
    about = "Vincular pattern statistics on pattern-avoiding permutations"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, default_value = "text")]
    format: Format,

    /// Write output to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<std::path::PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
    Tsv,
}

impl From<Format> for OutputFormat {
    fn from(f: Format) -> Self {
        match f {
            Format::Text => OutputFormat::Text,
            Format::Json => OutputFormat::Json,
            Format::Tsv => OutputFormat::Tsv,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Map {
    Phi,
    Psi,
    Mu,
    Inverse,
    Reverse,
    Complement,
}

#[derive(Subcommand)]
enum Command {
    /// Count occurrences of a vincular pattern, e.g. `count 2-13 425163`.
    Count { pattern: String, perm: String },

    /// Apply a map to a permutation.
    Apply {
        #[arg(value_enum)]
        map: Map,
        perm: String,
    },

    /// Exhaustively check a named identity (or `all`).
    Verify {
        name: String,
        /// Largest n to check; defaults to each check's enumeration ceiling
        /// (at most 10).
        #[arg(long)]
        max_n: Option<usize>,
    },

    /// Distribution of a multistatistic over a class.
    Distribution {
        /// Avoided pattern (123, 132, ...) or `all`.
        #[arg(long)]
        avoid: String,
        #[arg(long)]
        n: usize,
        /// Comma-separated statistics: des, rlmax, rlmin, last, or patterns.
        #[arg(long)]
        stats: String,
    },

    /// Compare two multistatistics' distributions for every n up to a bound.
    Equidistributed {
        left: String,
        right: String,
        #[arg(long)]
        avoid: String,
        #[arg(long)]
        max_n: usize,
    },

    /// List a class, one permutation per line.
    Enumerate {
        #[arg(long)]
        avoid: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        count_only: bool,
    },

    /// Search all pairs of proper length-3 vincular patterns for
    /// equidistribution on the six length-3 avoidance classes.
    Search {
        #[arg(long, default_value_t = 9)]
        max_n: usize,
        #[arg(long)]
        modulo_symmetry: bool,
    },

    /// Regenerate the worked-example table used in the README.
    #[command(name = "seed-docs", alias = "--seed-docs", hide = true)]
    SeedDocs,
}

/// A failure together with its exit code.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(e: impl std::fmt::Display) -> Self {
        Failure {
            code: 2,
            message: e.to_string(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::NotAvoiding { .. } | Error::EmptyPermutation => 3,
            Error::Internal(_) => 1,
            _ => 2,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

/// Command output plus the exit code to report after writing it.
struct Output {
    text: String,
    code: u8,
}

impl Output {
    fn ok(text: String) -> Self {
        Output { text, code: 0 }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = OutputFormat::from(cli.format);
    let limits = Limits::from_env();
    match run(cli.command, format, &limits) {
        Ok(out) => {
            let written = match &cli.out {
                Some(path) => fs::write(path, &out.text),
                None => std::io::stdout().write_all(out.text.as_bytes()),
            };
            if let Err(e) = written {
                eprintln!("vinc: cannot write output: {e}");
                return ExitCode::from(2);
            }
            ExitCode::from(out.code)
        }
        Err(f) => {
            eprintln!("vinc: error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(command: Command, format: OutputFormat, limits: &Limits) -> Result<Output, Failure> {
    match command {
        Command::Count { pattern, perm } => {
            let pattern = VincularPattern::parse(&pattern)?;
            let host = Permutation::parse(&perm)?;
            let count = pattern.count(&host);
            Ok(Output::ok(match format {
                OutputFormat::Json => report::to_sorted_json(&serde_json::json!({
                    "pattern": pattern.to_string(),
                    "permutation": host.to_string(),
                    "count": count,
                })),
                _ => format!("{count}\n"),
            }))
        }
        Command::Apply { map, perm } => {
            let style = TextStyle::of_input(&perm);
            let p = Permutation::parse(&perm)?;
            let image = match map {
                Map::Phi => bijections::phi(&p)?,
                Map::Psi => bijections::psi(&p)?,
                Map::Mu => bijections::mu(&p)?,
                Map::Inverse => p.inverse(),
                Map::Reverse => p.reverse(),
                Map::Complement => p.complement(),
            };
            Ok(Output::ok(format!("{}\n", image.to_text(style))))
        }
        Command::Verify { name, max_n } => {
            let checks: Vec<Check> = if name == "all" {
                Check::ALL.to_vec()
            } else {
                vec![name.parse::<Check>()?]
            };
            let mut reports = Vec::new();
            for check in checks {
                let ceiling = check.ceiling(limits);
                let n_max = match max_n {
                    Some(n) if name == "all" => n.min(ceiling),
                    Some(n) => n,
                    None => ceiling.min(10),
                };
                reports.push(analysis::verify_theorem(check, n_max, limits)?);
            }
            let text = report::render_checks(format, &reports);
            let code = if reports.iter().all(|r| r.passed()) { 0 } else { 1 };
            Ok(Output { text, code })
        }
        Command::Distribution { avoid, n, stats } => {
            let class: PermClass = avoid.parse()?;
            let ms = MultiStatistic::parse(&stats)?;
            let dist = analysis::distribution(&ms, class, n, limits)?;
            Ok(Output::ok(report::render_distribution(format, &ms, class, n, &dist)))
        }
        Command::Equidistributed {
            left,
            right,
            avoid,
            max_n,
        } => {
            let class: PermClass = avoid.parse()?;
            let (a, b) = (MultiStatistic::parse(&left)?, MultiStatistic::parse(&right)?);
            let diff = analysis::first_difference(&a, &b, class, max_n, limits)?;
            let code = if diff.is_some() { 1 } else { 0 };
            let text = match format {
                OutputFormat::Json => report::to_sorted_json(&serde_json::json!({
                    "left": a.to_string(),
                    "right": b.to_string(),
                    "class": class.to_string(),
                    "n_max": max_n,
                    "equidistributed": diff.is_none(),
                    "first_difference": diff,
                })),
                _ => match diff {
                    None => format!("{a} and {b} are equidistributed on S_n({class}) for n <= {max_n}\n"),
                    Some(d) => format!("{a} and {b} differ on S_n({class}): {d}\n"),
                },
            };
            Ok(Output { text, code })
        }
        Command::Enumerate { avoid, n, count_only } => {
            let class: PermClass = avoid.parse()?;
            let perms = enumeration::enumerate(class, n, limits)?;
            let text = if count_only {
                format!("{}\n", perms.len())
            } else {
                perms.iter().map(|p| format!("{p}\n")).collect()
            };
            Ok(Output::ok(text))
        }
        Command::Search { max_n, modulo_symmetry } => {
            if max_n > limits.max_avoiders {
                return Err(Failure::usage(format!(
                    "--max-n {max_n} exceeds the avoidance-class ceiling {}",
                    limits.max_avoiders
                )));
            }
            let report = analysis::search_equidistributed(max_n, modulo_symmetry, limits)?;
            Ok(Output::ok(report::render_search(format, &report)))
        }
        Command::SeedDocs => Ok(Output::ok(seed_docs()?)),
    }
}

fn seed_docs() -> Result<String, Failure> {
    let mut out = String::from("| statistic | permutation | value |\n|---|---|---|\n");
    let counts = [
        ("2-13", "425163"),
        ("[2-13", "425163"),
        ("2-3-1", "13452"),
        ("1-2]", "425163"),
        ("2-1]", "425163"),
        ("21", "45312"),
    ];
    for (pattern, host) in counts {
        let pattern = VincularPattern::parse(pattern)?;
        let host = Permutation::parse(host)?;
        out.push_str(&format!("| `{pattern}` | {host} | {} |\n", pattern.count(&host)));
    }
    let des_host = Permutation::parse("45312")?;
    out.push_str(&format!("| des | {des_host} | {} |\n", vincular::des(&des_host)));
    out.push_str("\n| map | input | image |\n|---|---|---|\n");
    type Map = fn(&Permutation) -> vincular::Result<Permutation>;
    let maps: [(&str, Map, &str); 3] = [
        ("phi", bijections::phi, "21"),
        ("psi", bijections::psi, "231"),
        ("mu", bijections::mu, "213"),
    ];
    for (name, f, input) in maps {
        let p = Permutation::parse(input)?;
        out.push_str(&format!("| {name} | {p} | {} |\n", f(&p)?));
    }
    let class = AvoidanceClass::P132;
    out.push_str(&format!(
        "\nS_n({class}) sizes for n = 0..=10: {}\n",
        (0..=10)
            .map(|n| enumeration::catalan(n).to_string())
            .collect::<Vec<_>>()
            .join(", ")
    ));
    Ok(out)
}
