//! Command-line front end: `dims`, `leading-terms`, `census` and `verify-rr`.
//!
//! Exit codes are shared by every command: 0 when every check passes, 1 on a
//! mathematical mismatch, 2 on usage, configuration or I/O errors.

pub mod args;
pub mod schema;

use std::fs;
use std::io::Write;
use std::process::ExitCode;

use anyhow::{Context, Result};
use rrcensus::census::census_degree;
use rrcensus::leading_terms::{count_leading_terms, LeadingTermSet};
use rrcensus::qseries::identity_report;
use rrcensus::root_system::{q3_dimension_closed_form, weyl_dim, WeightVec};
use rrcensus::Rank;

pub use args::{Cli, Command, Format};
use schema::{CensusDoc, CellDoc, DimsDoc, IdentityDoc, LeadingTermsDoc, PatternDoc, SCHEMA_VERSION};

/// Result of a command that ran to completion.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Mismatch,
}

impl Outcome {
    fn from_pass(pass: bool) -> Self {
        if pass {
            Outcome::Pass
        } else {
            Outcome::Mismatch
        }
    }

    pub fn exit_code(self) -> ExitCode {
        match self {
            Outcome::Pass => ExitCode::SUCCESS,
            Outcome::Mismatch => ExitCode::from(1),
        }
    }
}

pub fn run(cli: &Cli) -> Result<Outcome> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(w) = cli.threads {
        builder = builder.num_threads(w);
    }
    let pool = builder.build().context("cannot start worker threads")?;
    let (text, outcome) = pool.install(|| render(&cli.command))?;
    match cli.command.out() {
        Some(path) => fs::write(path, text).with_context(|| format!("cannot write {}", path.display()))?,
        None => std::io::stdout()
            .write_all(text.as_bytes())
            .context("cannot write to stdout")?,
    }
    Ok(outcome)
}

/// Runs a command and renders its output without writing it anywhere.
pub fn render(command: &Command) -> Result<(String, Outcome)> {
    match command {
        Command::Dims(a) => {
            let doc = dims(a.n);
            let pass = doc.matches;
            Ok((format_dims(&doc, a.format)?, Outcome::from_pass(pass)))
        }
        Command::LeadingTerms(a) => {
            let doc = leading_terms(a.n);
            Ok((format_leading_terms(&doc, a.format)?, Outcome::Pass))
        }
        Command::Census(a) => {
            let reports = a
                .degrees()
                .map(|m| census_degree(a.n, m))
                .collect::<rrcensus::Result<Vec<_>>>()?;
            let doc = CensusDoc {
                schema_version: SCHEMA_VERSION,
                command: "census".into(),
                n: a.n.get(),
                all_match: reports.iter().all(|r| r.matches),
                reports,
            };
            let pass = doc.all_match;
            Ok((format_census(&doc, a.format)?, Outcome::from_pass(pass)))
        }
        Command::VerifyRr(a) => {
            let report = identity_report(a.n, a.max);
            let doc = IdentityDoc {
                schema_version: SCHEMA_VERSION,
                command: "verify-rr".into(),
                report,
            };
            let pass = doc.report.all_equal;
            Ok((format_identity(&doc, a.format)?, Outcome::from_pass(pass)))
        }
    }
}

pub fn dims(rank: Rank) -> DimsDoc {
    let dim = |w: WeightVec| weyl_dim(rank, &w).expect("dominant by construction");
    let dim_2theta = dim(WeightVec::theta_multiple(rank, 2));
    let dim_3theta = dim(WeightVec::theta_multiple(rank, 3));
    let dim_3theta_minus_alpha = dim(WeightVec::three_theta_minus_alpha1(rank));
    let sum = &dim_2theta + &dim_3theta + &dim_3theta_minus_alpha;
    let expected = q3_dimension_closed_form(rank);
    DimsDoc {
        schema_version: SCHEMA_VERSION,
        command: "dims".into(),
        n: rank.get(),
        matches: sum == expected,
        dim_2theta,
        dim_3theta,
        dim_3theta_minus_alpha,
        sum,
        expected,
    }
}

pub fn leading_terms(rank: Rank) -> LeadingTermsDoc {
    let cell = |c: rrcensus::Cell| CellDoc {
        a: c.column(),
        b: c.row(),
        label: c.label(rank),
    };
    let patterns = LeadingTermSet::new(rank)
        .patterns()
        .into_iter()
        .map(|p| PatternDoc {
            kind: p.kind,
            first: cell(p.first),
            second: cell(p.second),
        })
        .collect();
    LeadingTermsDoc {
        schema_version: SCHEMA_VERSION,
        command: "leading-terms".into(),
        n: rank.get(),
        same_degree_count: count_leading_terms(rank, 0).to_string(),
        adjacent_degree_count: count_leading_terms(rank, 1).to_string(),
        patterns,
    }
}

fn json<T: serde::Serialize>(doc: &T) -> Result<String> {
    let mut s = serde_json::to_string_pretty(doc)?;
    s.push('\n');
    Ok(s)
}

fn csv_string(header: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header)?;
    for row in rows {
        w.write_record(&row)?;
    }
    Ok(String::from_utf8(w.into_inner()?)?)
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "match"
    } else {
        "MISMATCH"
    }
}

pub fn format_dims(doc: &DimsDoc, format: Format) -> Result<String> {
    match format {
        Format::Json => json(doc),
        Format::Csv => csv_string(
            &["n", "dim_2theta", "dim_3theta", "dim_3theta_minus_alpha", "sum", "expected", "match"],
            [vec![
                doc.n.to_string(),
                doc.dim_2theta.to_string(),
                doc.dim_3theta.to_string(),
                doc.dim_3theta_minus_alpha.to_string(),
                doc.sum.to_string(),
                doc.expected.to_string(),
                doc.matches.to_string(),
            ]],
        ),
        Format::Text => Ok(format!(
            "n = {}\n\
             dim L(2θ)      = {}\n\
             dim L(3θ)      = {}\n\
             dim L(3θ - α*) = {}\n\
             sum            = {}\n\
             2n C(2n+4, 5)  = {}\n\
             {}\n",
            doc.n,
            doc.dim_2theta,
            doc.dim_3theta,
            doc.dim_3theta_minus_alpha,
            doc.sum,
            doc.expected,
            yes_no(doc.matches)
        )),
    }
}

pub fn format_leading_terms(doc: &LeadingTermsDoc, format: Format) -> Result<String> {
    match format {
        Format::Json => json(doc),
        Format::Csv => csv_string(
            &["type", "first", "second", "first_a", "first_b", "second_a", "second_b"],
            doc.patterns.iter().map(|p| {
                vec![
                    p.kind.as_str().to_string(),
                    p.first.label.clone(),
                    p.second.label.clone(),
                    p.first.a.to_string(),
                    p.first.b.to_string(),
                    p.second.a.to_string(),
                    p.second.b.to_string(),
                ]
            }),
        ),
        Format::Text => {
            let mut s = format!(
                "n = {}: {} same-degree and {} adjacent-degree leading terms per degree\n",
                doc.n, doc.same_degree_count, doc.adjacent_degree_count
            );
            for p in &doc.patterns {
                let line = match p.kind {
                    rrcensus::leading_terms::PatternKind::SameDegree => {
                        format!("{}(-j)*{}(-j)\n", p.first.label, p.second.label)
                    }
                    rrcensus::leading_terms::PatternKind::AdjacentDegree => {
                        format!("{}(-j-1)*{}(-j)\n", p.first.label, p.second.label)
                    }
                };
                s.push_str(&line);
            }
            Ok(s)
        }
    }
}

pub fn format_census(doc: &CensusDoc, format: Format) -> Result<String> {
    use rrcensus::census::{Family, Subcase};
    let family = |r: &rrcensus::census::CensusReport, f: Family| {
        r.per_family.get(&f).map(|v| v.to_string()).unwrap_or_default()
    };
    let subcase = |r: &rrcensus::census::CensusReport, s: Subcase| {
        r.per_subcase
            .as_ref()
            .and_then(|m| m.get(&s))
            .map(|v| v.to_string())
            .unwrap_or_default()
    };
    match format {
        Format::Json => json(doc),
        Format::Csv => csv_string(
            &[
                "n", "m", "total", "expected", "match", "I", "II", "IIIa", "IIIb", "I1", "I2", "I3", "I4", "I5",
            ],
            doc.reports.iter().map(|r| {
                let mut row = vec![
                    r.n.to_string(),
                    r.m.to_string(),
                    r.total.to_string(),
                    r.expected.to_string(),
                    r.matches.to_string(),
                ];
                row.extend([Family::I, Family::II, Family::IIIa, Family::IIIb].map(|f| family(r, f)));
                row.extend(Subcase::ALL.map(|s| subcase(r, s)));
                row
            }),
        ),
        Format::Text => {
            let mut s = String::new();
            for r in &doc.reports {
                let families: Vec<String> = r.per_family.iter().map(|(f, v)| format!("{f}={v}")).collect();
                s.push_str(&format!(
                    "n = {} m = {}: total {} expected {} {} [{}]\n",
                    r.n,
                    r.m,
                    r.total,
                    r.expected,
                    yes_no(r.matches),
                    families.join(" ")
                ));
            }
            Ok(s)
        }
    }
}

pub fn format_identity(doc: &IdentityDoc, format: Format) -> Result<String> {
    let r = &doc.report;
    match format {
        Format::Json => json(doc),
        Format::Csv => csv_string(
            &["N", "product", "congruence", "rr", "equal"],
            r.rows.iter().map(|row| {
                vec![
                    row.n.to_string(),
                    row.product.to_string(),
                    row.congruence.to_string(),
                    row.rr.to_string(),
                    row.equal.to_string(),
                ]
            }),
        ),
        Format::Text => {
            let mut s = format!("n = {}, N <= {}\n", r.n, r.max);
            s.push_str(&format!("{:>4} {:>14} {:>14} {:>14}\n", "N", "product", "congruence", "rr"));
            for row in &r.rows {
                s.push_str(&format!(
                    "{:>4} {:>14} {:>14} {:>14}{}\n",
                    row.n,
                    row.product,
                    row.congruence,
                    row.rr,
                    if row.equal { "" } else { "  MISMATCH" }
                ));
            }
            s.push_str(if r.all_equal { "all equal\n" } else { "MISMATCH\n" });
            Ok(s)
        }
    }
}
