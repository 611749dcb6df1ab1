//! Text, JSON and TSV renderings of analysis results.
//!
//! JSON objects are emitted with sorted keys so output is byte-stable.

use std::fmt::Write as _;

use serde::Serialize;

use crate::analysis::{CheckReport, Distribution, FindingStatus, SearchReport};
use crate::enumeration::PermClass;
use crate::statistics::MultiStatistic;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OutputFormat {
    #[default]
    Text,
    Json,
    Tsv,
}

impl std::str::FromStr for OutputFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "text" => Ok(OutputFormat::Text),
            "json" => Ok(OutputFormat::Json),
            "tsv" => Ok(OutputFormat::Tsv),
            other => Err(format!("unknown format {other:?} (expected text, json or tsv)")),
        }
    }
}

/// Pretty JSON with keys sorted, newline-terminated.
pub fn to_sorted_json<T: Serialize>(value: &T) -> String {
    // serde_json::Map is a BTreeMap here, so converting sorts every object
    let value = serde_json::to_value(value).expect("report types serialize");
    let mut out = serde_json::to_string_pretty(&value).expect("json value serializes");
    out.push('\n');
    out
}

pub fn render_distribution(
    format: OutputFormat,
    stats: &MultiStatistic,
    class: PermClass,
    n: usize,
    dist: &Distribution,
) -> String {
    match format {
        OutputFormat::Text => format!("{dist}\n"),
        OutputFormat::Json => {
            #[derive(Serialize)]
            struct Doc<'a> {
                class: String,
                n: usize,
                statistics: String,
                total: u64,
                entries: &'a Distribution,
            }
            to_sorted_json(&Doc {
                class: class.to_string(),
                n,
                statistics: stats.to_string(),
                total: dist.total(),
                entries: dist,
            })
        }
        OutputFormat::Tsv => {
            let mut out = String::new();
            let header: Vec<String> = stats.0.iter().map(|s| s.to_string()).collect();
            let _ = writeln!(out, "{}\tcount", header.join("\t"));
            for (key, count) in dist.entries() {
                let cells: Vec<String> = key.iter().map(u64::to_string).collect();
                let _ = writeln!(out, "{}\t{count}", cells.join("\t"));
            }
            out
        }
    }
}

pub fn render_checks(format: OutputFormat, reports: &[CheckReport]) -> String {
    match format {
        OutputFormat::Json => {
            #[derive(Serialize)]
            struct Doc<'a> {
                passed: bool,
                checks: &'a [CheckReport],
            }
            to_sorted_json(&Doc {
                passed: reports.iter().all(CheckReport::passed),
                checks: reports,
            })
        }
        OutputFormat::Tsv => {
            let mut out = String::from("check\tn\tclass_size\tpassed\tcounterexample\tnote\n");
            for r in reports {
                for row in &r.rows {
                    let _ = writeln!(
                        out,
                        "{}\t{}\t{}\t{}\t{}\t{}",
                        r.check,
                        row.n,
                        row.class_size,
                        row.passed,
                        row.counterexample.as_deref().unwrap_or(""),
                        row.note.as_deref().unwrap_or("")
                    );
                }
            }
            out
        }
        OutputFormat::Text => {
            let mut out = String::new();
            for r in reports {
                let examined: u64 = r.rows.iter().map(|row| row.class_size).sum();
                let range = match (r.rows.first(), r.rows.last()) {
                    (Some(a), Some(b)) => format!("n = {}..={}", a.n, b.n),
                    _ => "no rows".to_string(),
                };
                let verdict = if r.passed() { "PASS" } else { "FAIL" };
                let _ = writeln!(out, "{verdict} {:<9} {range}, {examined} cases", r.check.name());
                if let Some(row) = r.first_failure() {
                    let _ = writeln!(
                        out,
                        "     counterexample at n = {}: {}",
                        row.n,
                        row.counterexample.as_deref().unwrap_or("?")
                    );
                }
            }
            out
        }
    }
}

pub fn render_search(format: OutputFormat, report: &SearchReport) -> String {
    match format {
        OutputFormat::Json => to_sorted_json(report),
        OutputFormat::Tsv => {
            let mut out = String::from("pattern_a\tpattern_b\tclass\tn_max\tstatus\n");
            for f in &report.findings {
                let _ = writeln!(
                    out,
                    "{}\t{}\t{}\t{}\t{}",
                    f.pattern_a, f.pattern_b, f.class, f.n_max, f.status
                );
            }
            out
        }
        OutputFormat::Text => {
            let mut out = String::new();
            if report.degenerate {
                let _ = writeln!(
                    out,
                    "warning: n_max = {} is below the pattern length; every pair is trivially equidistributed",
                    report.n_max
                );
            }
            let nontrivial = report
                .findings
                .iter()
                .filter(|f| f.status == FindingStatus::Equidistributed)
                .count();
            let _ = writeln!(
                out,
                "{} equidistributed pairs ({} trivial: symmetric or vanishing), n <= {}",
                report.findings.len(),
                report.findings.len() - nontrivial,
                report.n_max
            );
            let _ = writeln!(out, "families:");
            for fam in &report.families {
                let tag = if fam.status.is_trivial() {
                    format!("  ({})", fam.status)
                } else {
                    String::new()
                };
                let _ = writeln!(out, "  S_n({}): {{{}}}{tag}", fam.class, fam.patterns.join(", "));
            }
            if let Some(classes) = &report.symmetry_classes {
                let _ = writeln!(out, "symmetry classes: {}", classes.len());
                for c in classes {
                    let _ = writeln!(out, "  [{} on S_n({})]", c.label.patterns.join(", "), c.label.class);
                    for m in &c.members {
                        let _ = writeln!(out, "    S_n({}): {{{}}}", m.class, m.patterns.join(", "));
                    }
                }
            }
            out
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_keys_are_sorted() {
        #[derive(Serialize)]
        struct Unsorted {
            zeta: u8,
            alpha: u8,
        }
        let s = to_sorted_json(&Unsorted { zeta: 1, alpha: 2 });
        assert!(s.find("alpha").unwrap() < s.find("zeta").unwrap());
    }

    #[test]
    fn format_names() {
        assert_eq!("tsv".parse::<OutputFormat>().unwrap(), OutputFormat::Tsv);
        assert!("xml".parse::<OutputFormat>().is_err());
    }
}
