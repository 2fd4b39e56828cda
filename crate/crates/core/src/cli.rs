//! Command-line interface: constant enclosures, series convergence tables,
//! the identity ledger audit, and the rationality probe.
//!
//! Output is byte-deterministic for a given invocation: no timestamps, no
//! machine-dependent formatting, and caches keyed so that thread timing
//! cannot change a digit. Exit codes: 0 success, 1 the audit found a
//! contradiction, 2 usage error, 3 a computation was infeasible or a file
//! could not be written.

use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::audit::{
    self, AuditParams, CheckDetail, ClaimId, ClaimKind, Overall, ProbeOutcome, ProbeResult,
    Report,
};
use crate::constants;
use crate::error::{Error, Result};
use crate::hpnum::{enc_to_string, format_width, Enclosure};
use crate::series::{self, SeriesId};

#[derive(Debug, Parser)]
#[command(
    name = "gamma-audit",
    version,
    about = "Rigorous enclosures for gamma and ln 2, slow-series diagnostics, and a \
             mechanical audit of a claimed irrationality argument"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print decimal enclosures for gamma and ln 2.
    Constants(CommonOpts),
    /// Print a convergence table for one series.
    Series(SeriesOpts),
    /// Audit the thirteen-claim identity ledger and probe gamma for
    /// rationality.
    Audit(AuditOpts),
    /// Probe the gamma enclosure for simple rational values.
    Probe(CommonOpts),
}

#[derive(Debug, Args, Clone)]
pub struct CommonOpts {
    /// Decimal digits of precision.
    #[arg(long, default_value_t = 50, value_parser = clap::value_parser!(u32).range(1..))]
    pub digits: u32,
    /// Term budget for exact scans and series partial sums.
    #[arg(long, default_value_t = 10_000, value_parser = clap::value_parser!(u64).range(1..))]
    pub terms: u64,
    /// Denominator bound for the rationality probe.
    #[arg(long, default_value_t = 1_000_000, value_parser = clap::value_parser!(u64).range(1..))]
    pub qmax: u64,
    /// Output format.
    #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
    pub format: OutputFormat,
    /// Write the report to this file instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
    Markdown,
}

#[derive(Debug, Args)]
pub struct SeriesOpts {
    /// Which series to tabulate.
    #[arg(long, value_enum)]
    pub id: SeriesArg,
    #[command(flatten)]
    pub common: CommonOpts,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SeriesArg {
    Alpha,
    Beta,
    S1,
    S2,
    #[value(name = "sprime")]
    SPrime,
    #[value(name = "gamma_n")]
    GammaN,
}

impl From<SeriesArg> for SeriesId {
    fn from(a: SeriesArg) -> SeriesId {
        match a {
            SeriesArg::Alpha => SeriesId::Alpha,
            SeriesArg::Beta => SeriesId::Beta,
            SeriesArg::S1 => SeriesId::S1,
            SeriesArg::S2 => SeriesId::S2,
            SeriesArg::SPrime => SeriesId::SPrime,
            SeriesArg::GammaN => SeriesId::GammaN,
        }
    }
}

#[derive(Debug, Args)]
pub struct AuditOpts {
    #[command(flatten)]
    pub common: CommonOpts,
    /// Deliberately break one checkable claim, to demonstrate that the
    /// audit reports FAIL instead of absorbing it.
    #[arg(long, hide = true, value_parser = parse_claim_id)]
    pub inject_fault: Option<ClaimId>,
}

fn parse_claim_id(s: &str) -> std::result::Result<ClaimId, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// Execute one parsed invocation; the returned code is the process exit
/// status (0 success, 1 contradiction found).
pub fn run(cli: Cli) -> Result<i32> {
    match cli.command {
        Command::Constants(opts) => {
            let s = render_constants(&opts)?;
            emit(&s, opts.out.as_deref())?;
            Ok(0)
        }
        Command::Series(opts) => {
            let s = render_series(&opts)?;
            emit(&s, opts.common.out.as_deref())?;
            Ok(0)
        }
        Command::Audit(opts) => {
            let report = audit::run_audit_with(AuditParams {
                digits: opts.common.digits,
                terms: opts.common.terms,
                qmax: opts.common.qmax,
                inject_fault: opts.inject_fault,
            })?;
            let s = render_report(&report, opts.common.format);
            emit(&s, opts.common.out.as_deref())?;
            Ok(match report.overall {
                Overall::AllCheckablePass => 0,
                Overall::ContradictionFound => 1,
            })
        }
        Command::Probe(opts) => {
            // The gamma enclosure is recomputed at the requested digits so
            // the probe window is exactly as wide as asked for.
            let e = constants::gamma_em_enclosure(opts.digits)?;
            let pr = audit::rational_probe(&e, opts.qmax)?;
            let s = render_probe(&pr, &opts);
            emit(&s, opts.out.as_deref())?;
            Ok(0)
        }
    }
}

fn emit(s: &str, out: Option<&Path>) -> Result<()> {
    match out {
        Some(path) => std::fs::write(path, s).map_err(Error::from),
        None => {
            print!("{s}");
            Ok(())
        }
    }
}

fn pretty(v: Value) -> String {
    let mut s = serde_json::to_string_pretty(&v).expect("report JSON is well-formed");
    s.push('\n');
    s
}

fn enc_json(e: &Enclosure) -> Value {
    json!({
        "lo": e.lo().to_decimal_string(),
        "hi": e.hi().to_decimal_string(),
        "width": format_width(&e.width()),
    })
}

fn outcome_string(p: &ProbeResult) -> String {
    match &p.outcome {
        ProbeOutcome::Found(q) => format!("{q}"),
        ProbeOutcome::NoneWithin => format!("none with denominator <= {}", p.q_max),
    }
}

fn render_constants(opts: &CommonOpts) -> Result<String> {
    // Gamma first: its parameter screen rejects infeasible digit counts
    // before any long ln 2 summation starts.
    let g = constants::gamma_em_enclosure(opts.digits)?;
    let l = constants::ln2_enclosure(opts.digits);
    Ok(match opts.format {
        OutputFormat::Text => {
            let mut s = String::new();
            s.push_str(&format!("gamma = {}\n", enc_to_string(&g)));
            s.push_str(&format!("        width <= {}\n", format_width(&g.width())));
            s.push_str(&format!("ln2   = {}\n", enc_to_string(&l)));
            s.push_str(&format!("        width <= {}\n", format_width(&l.width())));
            s.push_str(&format!("(digits = {})\n", opts.digits));
            s
        }
        OutputFormat::Json => pretty(json!({
            "gamma": enc_json(&g),
            "ln2": enc_json(&l),
            "params": {"digits": opts.digits},
        })),
        OutputFormat::Markdown => {
            let mut s = String::new();
            s.push_str("# constants\n\n");
            s.push_str(&format!("digits = {}\n\n", opts.digits));
            s.push_str("| constant | enclosure | width |\n");
            s.push_str("|----------|-----------|-------|\n");
            s.push_str(&format!(
                "| gamma | `{}` | {} |\n",
                enc_to_string(&g),
                format_width(&g.width())
            ));
            s.push_str(&format!(
                "| ln2 | `{}` | {} |\n",
                enc_to_string(&l),
                format_width(&l.width())
            ));
            s
        }
    })
}

struct SeriesRow {
    n: u64,
    value: Enclosure,
    /// n²·(limit − partial) for the series with tail sandwiches.
    scaled_gap: Option<Enclosure>,
}

fn series_rows(id: SeriesId, opts: &CommonOpts) -> Result<Vec<SeriesRow>> {
    let min_n = if id == SeriesId::GammaN { 1 } else { 2 };
    if opts.terms < min_n {
        return Err(Error::ParametersInsufficient {
            context: format!("a {} table needs terms >= {min_n}", id.name()),
        });
    }
    let mut ns: Vec<u64> = Vec::new();
    let mut n = min_n;
    while n <= opts.terms {
        ns.push(n);
        n = n.saturating_mul(2);
    }
    if *ns.last().expect("at least one row") != opts.terms {
        ns.push(opts.terms);
    }
    // The reference limit for the gap column, at a modest precision so the
    // table stays fast; 14 digits dwarf every displayed gap.
    let pcap = opts.digits.min(14);
    let limit = matches!(id, SeriesId::Alpha | SeriesId::Beta)
        .then(|| series::limit_enclosure(id, pcap))
        .transpose()?;
    let mut rows = Vec::with_capacity(ns.len());
    for n in ns {
        let ps = series::partial_closed(id, n)?;
        let value = series::evaluate(&ps, opts.digits)?;
        let scaled_gap = match &limit {
            Some(lim) => {
                let part = series::evaluate(&ps, pcap + 2)?;
                let n2 = BigInt::from(n) * BigInt::from(n);
                Some(lim.sub(&part).scale_int(&n2).rescale_outward(6))
            }
            None => None,
        };
        rows.push(SeriesRow {
            n,
            value,
            scaled_gap,
        });
    }
    Ok(rows)
}

fn render_series(opts: &SeriesOpts) -> Result<String> {
    let id = SeriesId::from(opts.id);
    let rows = series_rows(id, &opts.common)?;
    let c = &opts.common;
    Ok(match c.format {
        OutputFormat::Text => {
            let mut s = format!(
                "series {} (digits = {}, terms = {})\n\n",
                id.name(),
                c.digits,
                c.terms
            );
            s.push_str("         n  value / width / n^2*(limit - partial)\n");
            for r in rows {
                let gap = match &r.scaled_gap {
                    Some(g) => enc_to_string(g),
                    None => "-".to_string(),
                };
                s.push_str(&format!(
                    "{:>10}  {}\n            width <= {}   gap {}\n",
                    r.n,
                    enc_to_string(&r.value),
                    format_width(&r.value.width()),
                    gap
                ));
            }
            s
        }
        OutputFormat::Json => {
            let rows_json: Vec<Value> = rows
                .iter()
                .map(|r| {
                    json!({
                        "n": r.n,
                        "value": enc_json(&r.value),
                        "n2_gap": r.scaled_gap.as_ref().map(enc_json),
                    })
                })
                .collect();
            pretty(json!({
                "series": id.name(),
                "rows": rows_json,
                "params": {"digits": c.digits, "terms": c.terms},
            }))
        }
        OutputFormat::Markdown => {
            let mut s = format!("# series {}\n\n", id.name());
            s.push_str(&format!("digits = {}, terms = {}\n\n", c.digits, c.terms));
            s.push_str("| n | value | width | n^2 * (limit - partial) |\n");
            s.push_str("|---|-------|-------|--------------------------|\n");
            for r in rows {
                let gap = match &r.scaled_gap {
                    Some(g) => format!("`{}`", enc_to_string(g)),
                    None => "-".to_string(),
                };
                s.push_str(&format!(
                    "| {} | `{}` | {} | {} |\n",
                    r.n,
                    enc_to_string(&r.value),
                    format_width(&r.value.width()),
                    gap
                ));
            }
            s
        }
    })
}

/// The non-computable dependencies a flagged claim rests on, by name.
fn flag_suffix(report: &Report, id: ClaimId) -> String {
    if !report.flagged.contains(&id) {
        return String::new();
    }
    let names: Vec<&str> = audit::node(id)
        .depends_on
        .iter()
        .filter(|d| audit::node(**d).kind == ClaimKind::NonNumerical)
        .map(|d| d.name())
        .collect();
    format!(" [rests on {}]", names.join(", "))
}

fn claim_width_string(detail: &CheckDetail) -> String {
    match detail {
        CheckDetail::Exact { .. } => "0".to_string(),
        CheckDetail::Numeric { compared_width, .. } => format_width(compared_width),
        CheckDetail::Flagged { .. } => "-".to_string(),
    }
}

fn render_report(report: &Report, format: OutputFormat) -> String {
    match format {
        OutputFormat::Text => render_report_text(report),
        OutputFormat::Json => render_report_json(report),
        OutputFormat::Markdown => render_report_markdown(report),
    }
}

fn verdict_line(report: &Report) -> String {
    match report.overall {
        Overall::AllCheckablePass => {
            let nc = report
                .results
                .iter()
                .filter(|r| matches!(r.detail, CheckDetail::Flagged { .. }))
                .count();
            format!("ALL CHECKABLE CLAIMS PASS; {nc} claims not decidable by computation")
        }
        Overall::ContradictionFound => {
            let failing: Vec<&str> = report
                .results
                .iter()
                .filter(|r| r.status == audit::CheckStatus::Fail)
                .map(|r| r.id.name())
                .collect();
            format!("CONTRADICTION FOUND: {}", failing.join(", "))
        }
    }
}

fn render_report_text(report: &Report) -> String {
    let mut s = format!(
        "identity ledger audit (digits = {}, terms = {}, qmax = {})\n\n",
        report.params.digits, report.params.terms, report.params.qmax
    );
    s.push_str(&format!(
        " {:<4} {:<15} {:<10} {:<60} {}\n",
        "id", "status", "width", "claim", "locus"
    ));
    for r in &report.results {
        let node = audit::node(r.id);
        let statement = format!("{}{}", node.statement, flag_suffix(report, r.id));
        s.push_str(&format!(
            " {:<4} {:<15} {:<10} {:<60} {}\n",
            r.id.name(),
            r.status.token(),
            claim_width_string(&r.detail),
            statement,
            node.locus
        ));
    }
    s.push_str("\nroutes\n");
    for r in &report.results {
        if let CheckDetail::Numeric {
            lhs_route,
            rhs_route,
            ..
        } = &r.detail
        {
            let tags = |route: &audit::Route| {
                route
                    .oracles
                    .iter()
                    .map(|t| t.name())
                    .collect::<Vec<_>>()
                    .join(", ")
            };
            s.push_str(&format!(
                "  {}: {} [{}]  vs  {} [{}]\n",
                r.id.name(),
                lhs_route.label,
                tags(lhs_route),
                rhs_route.label,
                tags(rhs_route)
            ));
        }
    }
    s.push_str(&format!(
        "\nprobe: gamma in {} -> {}\n",
        enc_to_string(&report.probe.enclosure),
        outcome_string(&report.probe)
    ));
    s.push('\n');
    s.push_str(&verdict_line(report));
    s.push('\n');
    s
}

fn render_report_json(report: &Report) -> String {
    let claims: Vec<Value> = report
        .results
        .iter()
        .map(|r| {
            let node = audit::node(r.id);
            let (lo, hi, width) = match &r.detail {
                CheckDetail::Exact { .. } => (Value::Null, Value::Null, json!("0")),
                CheckDetail::Numeric {
                    compared_width,
                    intersection,
                    ..
                } => {
                    let w = json!(format_width(compared_width));
                    match intersection {
                        Some(ix) => (
                            json!(ix.lo().to_decimal_string()),
                            json!(ix.hi().to_decimal_string()),
                            w,
                        ),
                        None => (Value::Null, Value::Null, w),
                    }
                }
                CheckDetail::Flagged { .. } => (Value::Null, Value::Null, Value::Null),
            };
            json!({
                "id": r.id.name(),
                "statement": node.statement,
                "locus": node.locus,
                "status": r.status.token(),
                "lo": lo,
                "hi": hi,
                "width": width,
            })
        })
        .collect();
    pretty(json!({
        "claims": claims,
        "probe": {
            "qmax": report.probe.q_max,
            "outcome": outcome_string(&report.probe),
        },
        "params": {
            "digits": report.params.digits,
            "terms": report.params.terms,
        },
    }))
}

fn render_report_markdown(report: &Report) -> String {
    let mut s = String::from("# identity ledger audit\n\n");
    s.push_str(&format!(
        "digits = {}, terms = {}, qmax = {}\n\n",
        report.params.digits, report.params.terms, report.params.qmax
    ));
    s.push_str("| id | status | width | claim | locus |\n");
    s.push_str("|----|--------|-------|-------|-------|\n");
    for r in &report.results {
        let node = audit::node(r.id);
        s.push_str(&format!(
            "| {} | {} | {} | {}{} | {} |\n",
            r.id.name(),
            r.status.token(),
            claim_width_string(&r.detail),
            node.statement,
            flag_suffix(report, r.id),
            node.locus
        ));
    }
    let probe_status = match &report.probe.outcome {
        ProbeOutcome::Found(_) => "FOUND",
        ProbeOutcome::NoneWithin => "NONE-WITHIN",
    };
    s.push_str(&format!(
        "| probe | {} | {} | gamma window admits: {} | Stern-Brocot descent |\n",
        probe_status,
        format_width(&report.probe.enclosure.width()),
        outcome_string(&report.probe)
    ));
    s.push('\n');
    s.push_str(&verdict_line(report));
    s.push('\n');
    s
}

fn render_probe(pr: &ProbeResult, opts: &CommonOpts) -> String {
    match opts.format {
        OutputFormat::Text => {
            let mut s = format!("gamma in {}\n", enc_to_string(&pr.enclosure));
            s.push_str(&format!(
                "  width <= {}\n",
                format_width(&pr.enclosure.width())
            ));
            s.push_str(&format!("probe: {}\n", outcome_string(pr)));
            s.push_str(&format!(
                "(digits = {}, qmax = {})\n",
                opts.digits, pr.q_max
            ));
            s
        }
        OutputFormat::Json => pretty(json!({
            "enclosure": enc_json(&pr.enclosure),
            "probe": {"qmax": pr.q_max, "outcome": outcome_string(pr)},
            "params": {"digits": opts.digits},
        })),
        OutputFormat::Markdown => {
            let mut s = String::from("# gamma rationality probe\n\n");
            s.push_str(&format!(
                "digits = {}, qmax = {}\n\n",
                opts.digits, pr.q_max
            ));
            s.push_str("| window | width | outcome |\n|--------|-------|---------|\n");
            s.push_str(&format!(
                "| `{}` | {} | {} |\n",
                enc_to_string(&pr.enclosure),
                format_width(&pr.enclosure.width()),
                outcome_string(pr)
            ));
            s
        }
    }
}
