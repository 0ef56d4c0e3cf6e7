//! Argument parsing and dispatch for the `cht` binary.

use std::fmt::Write as _;

use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use cht_core::algebra::RatInterval;
use cht_core::enumerate::{
    render_markdown, reproduce_table1, scan_region, type_a_table, EnumerateError, MinN3, ScanBounds, TableRow,
    DEFAULT_N2_MAX, DEFAULT_N3_CAP,
};
use cht_core::geometry::{oracle_report, GeometryError};
use cht_core::typeclass::{
    classify, critical_interval, Method, Triple, TypeLabel, TypeVerdict, DEFAULT_BITS, DEFAULT_MAX_BITS,
};
use cht_core::verify::{audit, registry, run_canaries, run_lemma_suite, witness_refutes, Budget, ClaimReport, Status};

pub const EXIT_OK: i32 = 0;
pub const EXIT_REFUTED: i32 = 1;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_INDETERMINATE: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "cht", version, about = "Type A / type B classification of complex hyperbolic triangle groups")]
pub struct Cli {
    /// Worker threads for the parallel verbs.
    #[arg(long, global = true, value_parser = clap::value_parser!(u16).range(1..))]
    pub jobs: Option<u16>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Type of a triple from the sign of F.
    Classify {
        n1: String,
        n2: String,
        n3: String,
        #[arg(long)]
        json: bool,
        /// Precision cap, in bits, for the cosine enclosures.
        #[arg(long, default_value_t = DEFAULT_MAX_BITS, value_parser = clap::value_parser!(u32).range(1..))]
        precision_bits: u32,
    },
    /// The interval of T where neither W_A nor W_B is elliptic.
    Interval {
        n1: String,
        n2: String,
        n3: String,
        #[arg(long)]
        json: bool,
        #[arg(long, default_value_t = DEFAULT_BITS, value_parser = clap::value_parser!(u32).range(1..))]
        precision_bits: u32,
    },
    /// Type decided from explicit reflection matrices.
    Oracle {
        n1: String,
        n2: String,
        n3: String,
        #[arg(long, default_value_t = 2000, value_parser = clap::value_parser!(u64).range(1..))]
        steps: u64,
        #[arg(long, default_value_t = 1e-9, value_parser = positive_f64)]
        tol: f64,
        #[arg(long)]
        json: bool,
    },
    /// Classify every ordered triple in a box.
    Enumerate {
        /// Range of n1, as `A..B`.
        #[arg(long, value_parser = parse_range)]
        n1: (u64, u64),
        #[arg(long, default_value_t = 50, value_parser = clap::value_parser!(u64).range(3..))]
        n2_max: u64,
        #[arg(long, default_value_t = 100, value_parser = clap::value_parser!(u64).range(3..))]
        n3_cap: u64,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// The table of sample values of F, or the table of type-A triples.
    Table {
        #[arg(long, value_enum)]
        which: Which,
        /// Range of n1 for the type-A table, as `A..B`.
        #[arg(long, value_parser = parse_range, default_value = "3..13")]
        n1: (u64, u64),
        #[arg(long, default_value_t = DEFAULT_N2_MAX, value_parser = clap::value_parser!(u64).range(3..))]
        n2_max: u64,
        #[arg(long, default_value_t = DEFAULT_N3_CAP, value_parser = clap::value_parser!(u64).range(3..))]
        n3_cap: u64,
        #[arg(long, value_enum, default_value_t = Format::Md)]
        format: Format,
    },
    /// Run the registered claims.
    Verify {
        /// Glob over claim ids, e.g. `L5.1.*`.
        #[arg(long)]
        claim: Option<String>,
        /// Box budget per claim.
        #[arg(long, default_value_t = Budget::default().max_boxes, value_parser = clap::value_parser!(u64).range(1..))]
        budget: u64,
        /// Run the deliberately false claims instead; succeeds when all are refuted.
        #[arg(long)]
        canaries: bool,
        #[arg(long)]
        json: bool,
    },
    /// Re-derive F from the trace discriminant and compare term by term.
    AuditF {
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
    Md,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Which {
    #[value(name = "1")]
    One,
    #[value(name = "typeA")]
    TypeA,
}

fn positive_f64(s: &str) -> Result<f64, String> {
    match s.parse::<f64>() {
        Ok(x) if x > 0.0 && x.is_finite() => Ok(x),
        _ => Err(format!("`{s}` is not a positive number")),
    }
}

/// `A..B` with `3 <= A <= B`.
pub fn parse_range(s: &str) -> Result<(u64, u64), String> {
    let (a, b) = s.split_once("..").ok_or_else(|| format!("`{s}` is not of the form A..B"))?;
    let a: u64 = a.trim().parse().map_err(|_| format!("bad lower bound in `{s}`"))?;
    let b: u64 = b.trim().parse().map_err(|_| format!("bad upper bound in `{s}`"))?;
    if a < 3 || a > b {
        return Err(format!("range `{s}` must satisfy 3 <= A <= B"));
    }
    Ok((a, b))
}

/// Result of running a command.
#[derive(Debug, Default, Clone, PartialEq, Eq)]
pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Output {
    fn ok(code: i32, stdout: String) -> Self {
        Output { code, stdout, stderr: String::new() }
    }

    fn err(code: i32, msg: impl std::fmt::Display) -> Self {
        Output { code, stdout: String::new(), stderr: format!("error: {msg}\n") }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FJson {
    pub lo: String,
    pub hi: String,
    /// Decimal midpoint with enough digits to sit strictly inside the bounds.
    pub approx: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassifyJson {
    pub triple: Triple,
    #[serde(rename = "type")]
    pub label: TypeLabel,
    #[serde(rename = "F", skip_serializing_if = "Option::is_none", default)]
    pub f: Option<FJson>,
    pub precision_bits: u32,
    pub method: Method,
}

impl From<&TypeVerdict> for ClassifyJson {
    fn from(v: &TypeVerdict) -> Self {
        ClassifyJson {
            triple: v.triple,
            label: v.label,
            f: v.f_enclosure.as_ref().map(|e| FJson {
                lo: e.lo().to_string(),
                hi: e.hi().to_string(),
                approx: approx(e),
            }),
            precision_bits: v.precision_bits,
            method: v.method,
        }
    }
}

/// Midpoint in scientific notation, with as many significant digits as the
/// width of the enclosure warrants (6 to 17).
pub fn approx(e: &RatInterval) -> String {
    let mid = e.mid_f64();
    let width = e.hi_f64() - e.lo_f64();
    let digits = if mid == 0.0 || width <= 0.0 {
        17
    } else {
        ((mid.abs() / width).log10().ceil() as i64 + 1).clamp(6, 17) as usize
    };
    format!("{:.*e}", digits - 1, mid)
}

fn parse_triple(n1: &str, n2: &str, n3: &str) -> Result<Triple, Output> {
    Triple::parse_tokens(&[n1, n2, n3]).map_err(|e| Output::err(EXIT_INVALID, e))
}

fn json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable output");
    s.push('\n');
    s
}

fn label_code(l: TypeLabel) -> i32 {
    if l == TypeLabel::Indeterminate {
        EXIT_INDETERMINATE
    } else {
        EXIT_OK
    }
}

fn enumerate_error(e: EnumerateError) -> Output {
    match e {
        EnumerateError::Triple(_) => Output::err(EXIT_INVALID, e),
        _ => Output::err(EXIT_INDETERMINATE, e),
    }
}

pub fn execute(cli: Cli) -> Output {
    match cli.command {
        Command::Classify { n1, n2, n3, json: as_json, precision_bits } => {
            let t = match parse_triple(&n1, &n2, &n3) {
                Ok(t) => t,
                Err(o) => return o,
            };
            let v = classify(&t, precision_bits);
            let out = ClassifyJson::from(&v);
            let text = if as_json {
                json(&out)
            } else {
                match (&out.f, &v.f_enclosure) {
                    (Some(f), Some(e)) => {
                        format!("{} type {:?}  F = {}  in {}\n", t, v.label, f.approx, approx_pair(e))
                    }
                    _ => format!("{} type {:?}\n", t, v.label),
                }
            };
            Output::ok(label_code(v.label), text)
        }
        Command::Interval { n1, n2, n3, json: as_json, precision_bits } => {
            let t = match parse_triple(&n1, &n2, &n3) {
                Ok(t) => t,
                Err(o) => return o,
            };
            match critical_interval(&t, precision_bits) {
                Err(e) => Output::err(EXIT_INDETERMINATE, e),
                Ok(ci) if as_json => Output::ok(EXIT_OK, json(&ci)),
                Ok(ci) => {
                    let mut s = format!("{t}\n  T_A in {}\n", approx_pair(&ci.t_a));
                    let _ = writeln!(
                        s,
                        "  deformation range [{}, {})",
                        approx(&ci.deformation.0),
                        approx(&ci.deformation.1)
                    );
                    if ci.empty {
                        s.push_str("  critical interval: empty\n");
                    } else {
                        let end = |e: &Option<RatInterval>| e.as_ref().map(approx).unwrap_or_else(|| "-".into());
                        let close = if ci.upper_open { ")" } else { "]" };
                        let _ = writeln!(s, "  critical interval [{}, {}{}", end(&ci.lower), end(&ci.upper), close);
                    }
                    Output::ok(EXIT_OK, s)
                }
            }
        }
        Command::Oracle { n1, n2, n3, steps, tol, json: as_json } => {
            let t = match parse_triple(&n1, &n2, &n3) {
                Ok(t) => t,
                Err(o) => return o,
            };
            match oracle_report(&t, steps as usize, tol) {
                Err(e @ GeometryError::EmptyDeformation(_)) => Output::err(EXIT_INVALID, e),
                Err(e) => Output::err(EXIT_INDETERMINATE, e),
                Ok(r) => {
                    let code = label_code(r.label);
                    if as_json {
                        #[derive(Serialize)]
                        struct OracleJson<'a> {
                            triple: Triple,
                            #[serde(flatten)]
                            report: &'a cht_core::geometry::OracleReport,
                        }
                        Output::ok(code, json(&OracleJson { triple: t, report: &r }))
                    } else {
                        let f = |x: Option<f64>| x.map(|v| format!("{v:.12}")).unwrap_or_else(|| "none".into());
                        Output::ok(
                            code,
                            format!(
                                "{} type {:?}  first elliptic t: W_A {}, W_B {}  (t_u = {:.12})\n",
                                t,
                                r.label,
                                f(r.t_star_a),
                                f(r.t_star_b),
                                r.t_upper
                            ),
                        )
                    }
                }
            }
        }
        Command::Enumerate { n1, n2_max, n3_cap, format } => {
            let bounds = ScanBounds { n1, n2: (n1.0, n2_max), n3: (n1.0, n3_cap) };
            let mut verdicts = Vec::new();
            scan_region(&bounds, true, |v| verdicts.push(v.clone()));
            let code = verdicts.iter().map(|v| label_code(v.label)).max().unwrap_or(EXIT_OK);
            Output::ok(code, render_verdicts(&verdicts, format))
        }
        Command::Table { which: Which::One, format, .. } => {
            let rows = reproduce_table1();
            let code = if rows.iter().all(|r| r.matches()) { EXIT_OK } else { EXIT_REFUTED };
            let text = match format {
                Format::Json => json(&rows),
                Format::Csv => {
                    let mut w = csv::Writer::from_writer(Vec::new());
                    w.write_record([
                        "n1",
                        "n2",
                        "n3",
                        "F_lo",
                        "F_hi",
                        "F",
                        "printed_F",
                        "type",
                        "printed_type",
                        "match",
                    ])
                    .unwrap();
                    for r in &rows {
                        let [a, b, c] = r.triple.orders();
                        w.write_record([
                            a.to_string(),
                            b.to_string(),
                            c.to_string(),
                            r.f_lo.to_string(),
                            r.f_hi.to_string(),
                            r.f.to_string(),
                            r.printed_f.to_string(),
                            format!("{:?}", r.label),
                            format!("{:?}", r.printed_type),
                            r.matches().to_string(),
                        ])
                        .unwrap();
                    }
                    String::from_utf8(w.into_inner().unwrap()).unwrap()
                }
                Format::Md => {
                    let mut s = String::from(
                        "| (n1,n2,n3) | F | printed F | type | printed type | match |\n|---|---|---|---|---|---|\n",
                    );
                    for r in &rows {
                        let _ = writeln!(
                            s,
                            "| {} | {:.9e} | {} | {:?} | {:?} | {} |",
                            r.triple,
                            r.f,
                            r.printed_f,
                            r.label,
                            r.printed_type,
                            if r.matches() { "yes" } else { "NO" }
                        );
                    }
                    s
                }
            };
            Output::ok(code, text)
        }
        Command::Table { which: Which::TypeA, n1, n2_max, n3_cap, format } => {
            let rows = match type_a_table(n1.0..=n1.1, n2_max, n3_cap) {
                Ok(r) => r,
                Err(e) => return enumerate_error(e),
            };
            Output::ok(EXIT_OK, render_rows(&rows, n2_max, format))
        }
        Command::Verify { claim, budget, canaries, json: as_json } => {
            let budget = Budget { max_boxes: budget, ..Budget::default() };
            if canaries {
                let runs = run_canaries(budget);
                let caught = |(c, r): &(cht_core::verify::Claim, ClaimReport)| {
                    r.status == Status::Refuted && r.witness.as_ref().is_none_or(|w| witness_refutes(c, w))
                };
                let code = if runs.iter().all(caught) { EXIT_OK } else { EXIT_REFUTED };
                let reports: Vec<ClaimReport> = runs.iter().map(|(_, r)| r.clone()).collect();
                let statements: Vec<&str> = runs.iter().map(|(c, _)| c.statement.as_str()).collect();
                let text = if as_json { json(&reports) } else { render_reports(&reports, &statements) };
                return Output::ok(code, text);
            }
            let reports = match run_lemma_suite(claim.as_deref(), budget) {
                Ok(r) => r,
                Err(e) => return Output::err(EXIT_INVALID, format!("bad claim pattern: {e}")),
            };
            if reports.is_empty() {
                return Output::err(EXIT_INVALID, "no claim matches the pattern");
            }
            let code = suite_code(&reports);
            let statements: Vec<&str> = reports
                .iter()
                .map(|r| registry().iter().find(|c| c.id == r.id).map(|c| c.statement.as_str()).unwrap_or(""))
                .collect();
            let text = if as_json { json(&reports) } else { render_reports(&reports, &statements) };
            Output::ok(code, text)
        }
        Command::AuditF { json: as_json } => {
            let a = audit::audit_f_derivation();
            let code = if a.report.status == Status::Proved { EXIT_OK } else { EXIT_REFUTED };
            if as_json {
                return Output::ok(code, json(&a));
            }
            let mut s = format!(
                "F derivation: {:?}  ({} terms composed, {} terms in F)\n",
                a.report.status, a.terms_composed, a.terms_f
            );
            for d in &a.diff {
                let _ = writeln!(s, "  {}: composed {} expected {}", d.monomial, d.composed, d.expected);
            }
            let p = &a.trace_probe;
            let _ = writeln!(
                s,
                "trace probe: {} samples, tr W_A = tau_A at {}, = tau_A - 1 at {} (realized: {})",
                p.samples,
                p.match_tau,
                p.match_tau_minus_one,
                p.realized()
            );
            let _ = writeln!(s, "classification arbiter: {:?}", a.arbiter);
            Output::ok(code, s)
        }
    }
}

/// 1 if anything was refuted, else 3 if any budget ran out, else 0.
pub fn suite_code(reports: &[ClaimReport]) -> i32 {
    if reports.iter().any(|r| r.status == Status::Refuted) {
        EXIT_REFUTED
    } else if reports.iter().any(|r| r.status == Status::BudgetExhausted) {
        EXIT_INDETERMINATE
    } else {
        EXIT_OK
    }
}

fn approx_pair(e: &RatInterval) -> String {
    format!("[{:.12e}, {:.12e}]", e.lo_f64(), e.hi_f64())
}

fn render_reports(reports: &[ClaimReport], statements: &[&str]) -> String {
    let mut s = String::new();
    for (r, st) in reports.iter().zip(statements) {
        let _ = writeln!(s, "{:<22} {:<16} boxes={:<8} {}", r.id, format!("{:?}", r.status), r.effort.boxes, st);
        if let Some(w) = &r.witness {
            let _ = writeln!(s, "{:<22} witness: {}", "", w.describe());
        }
    }
    let count = |st: Status| reports.iter().filter(|r| r.status == st).count();
    let _ = writeln!(
        s,
        "{} claims: {} proved, {} refuted, {} budget exhausted",
        reports.len(),
        count(Status::Proved),
        count(Status::Refuted),
        count(Status::BudgetExhausted)
    );
    s
}

fn render_verdicts(vs: &[TypeVerdict], format: Format) -> String {
    match format {
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["n1", "n2", "n3", "F_lo", "F_hi", "type"]).unwrap();
            for v in vs {
                let [a, b, c] = v.triple.orders();
                let (lo, hi) = match &v.f_enclosure {
                    Some(e) => (e.lo_f64().to_string(), e.hi_f64().to_string()),
                    None => (String::new(), String::new()),
                };
                w.write_record([a.to_string(), b.to_string(), c.to_string(), lo, hi, format!("{:?}", v.label)])
                    .unwrap();
            }
            String::from_utf8(w.into_inner().unwrap()).unwrap()
        }
        Format::Json => json(&vs.iter().map(ClassifyJson::from).collect::<Vec<_>>()),
        Format::Md => {
            let mut s = String::from("| n1 | n2 | n3 | F | type |\n|---|---|---|---|---|\n");
            for v in vs {
                let [a, b, c] = v.triple.orders();
                let f = v.f_enclosure.as_ref().map(approx).unwrap_or_else(|| "(pruned)".into());
                let _ = writeln!(s, "| {a} | {b} | {c} | {f} | {:?} |", v.label);
            }
            s
        }
    }
}

fn render_rows(rows: &[TableRow], n2_max: u64, format: Format) -> String {
    match format {
        Format::Md => render_markdown(rows, n2_max),
        Format::Json => json(&rows),
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["n1", "n2", "min_n3"]).unwrap();
            for r in rows {
                let m = match r.min_n3 {
                    MinN3::AllFromN2 => "n2".to_string(),
                    MinN3::Finite(m) => m.to_string(),
                    MinN3::None => "none".to_string(),
                };
                w.write_record([r.n1.to_string(), r.n2.to_string(), m]).unwrap();
            }
            String::from_utf8(w.into_inner().unwrap()).unwrap()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges() {
        assert_eq!(parse_range("10..13"), Ok((10, 13)));
        assert!(parse_range("2..5").is_err());
        assert!(parse_range("9..5").is_err());
        assert!(parse_range("7").is_err());
    }

    #[test]
    fn approx_sits_inside() {
        let e = RatInterval::new(cht_core::algebra::rat(-44605, 1_000_000), cht_core::algebra::rat(-44604, 1_000_000))
            .unwrap();
        let a: f64 = approx(&e).parse().unwrap();
        assert!((-0.044605..=-0.044604).contains(&a));
    }
}
