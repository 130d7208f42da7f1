//! One function per subcommand. Each returns the full report text so the
//! binary only prints and exits.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::Path;

use tangle_core::classify::{classify_report, index_polynomial, universal_index, Coarsening, ReportLine, Selector};
use tangle_core::explore::{build_phratry_graph, compare_with_classifier, ExploreBudget};
use tangle_core::moves::{random_walk, MoveTrace, WalkConfig};
use tangle_core::{parse_diagram, serialize, TangleDiagram};

use crate::verify::check_trace;
use crate::{CliError, CliResult, Outcome, Status};

/// Settings shared by the subcommands.
#[derive(Debug, Clone, Default)]
pub struct Options {
    pub coarsening: Option<Coarsening>,
    pub budget: ExploreBudget,
    pub bound: Option<u32>,
    /// One `key=value` record per line instead of the human layout.
    pub machine: bool,
    /// ANSI colour in human output.
    pub color: bool,
}

pub(crate) fn paint(text: &str, code: u8, on: bool) -> String {
    if on {
        format!("\x1b[{code}m{text}\x1b[0m")
    } else {
        text.to_string()
    }
}

pub fn read(path: &Path) -> CliResult<String> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.to_path_buf(), source })
}

pub fn load(path: &Path, opts: &Options) -> CliResult<TangleDiagram> {
    let d = parse_diagram(&read(path)?).map_err(|source| CliError::Input { path: path.to_path_buf(), source })?;
    Ok(match opts.bound {
        Some(b) => d.with_search_bound(b),
        None => d,
    })
}

pub fn validate(paths: &[&Path]) -> Outcome {
    let mut text = String::new();
    let mut status = Status::Ok;
    for path in paths {
        match load(path, &Options::default()) {
            Ok(d) => {
                let kind = if d.is_flat() { "flat" } else { "classical" };
                let _ = writeln!(
                    text,
                    "{}: ok {kind} components={} crossings={}",
                    path.display(),
                    d.components().len(),
                    d.crossing_count()
                );
            }
            Err(e) => {
                let _ = writeln!(text, "{}: invalid", path.display());
                for line in e.to_string().lines() {
                    let _ = writeln!(text, "  {line}");
                }
                status = Status::InputError;
            }
        }
    }
    Outcome { text, status }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn machine_line(r: &ReportLine) -> String {
    let opt = |o: Option<i8>| o.map_or("-".to_string(), |x| format!("{x:+}"));
    format!(
        "crossing id={} tau={},{} order={} sign={} h={} tribe={} phratry={} self_dual={} undecided={}",
        r.id,
        r.component_type.0 + 1,
        r.component_type.1 + 1,
        opt(r.order),
        opt(r.sign),
        r.h,
        r.tribe,
        r.phratry,
        yes_no(r.self_dual),
        yes_no(r.undecided)
    )
}

pub fn classify(d: &TangleDiagram, opts: &Options) -> CliResult<Outcome> {
    let mut text = String::new();
    for r in classify_report(d)? {
        let mut line = if opts.machine { machine_line(&r) } else { r.to_string() };
        if let Some(c) = opts.coarsening {
            let u = universal_index(d, &r.id, c)?;
            let sep = if opts.machine { " universal=" } else { " U[" };
            let _ = write!(line, "{sep}{u}{}", if opts.machine { "" } else { "]" });
        }
        if !opts.machine && r.self_dual {
            line = line.replace("*self-dual", &paint("*self-dual", 33, opts.color));
        }
        let _ = writeln!(text, "{line}");
    }
    Ok(Outcome::ok(text))
}

/// Crossings grouped by a key of the report line, in first-seen order.
fn groups(report: &[ReportLine], key: impl Fn(&ReportLine) -> usize) -> Vec<Vec<&ReportLine>> {
    let mut by: BTreeMap<usize, Vec<&ReportLine>> = BTreeMap::new();
    for r in report {
        by.entry(key(r)).or_default().push(r);
    }
    by.into_values().collect()
}

fn partition(d: &TangleDiagram, opts: &Options, phratries: bool) -> CliResult<Outcome> {
    let report = classify_report(d)?;
    let what = if phratries { "phratry" } else { "tribe" };
    let parts = groups(&report, |r| if phratries { r.phratry } else { r.tribe });
    let mut text = String::new();
    for (i, part) in parts.iter().enumerate() {
        let names: Vec<&str> = part.iter().map(|r| r.id.as_str()).collect();
        let self_dual = part.iter().any(|r| r.self_dual);
        let undecided = part.iter().any(|r| r.undecided);
        if opts.machine {
            let _ = write!(text, "{what} index={} members={} self_dual={}", i + 1, names.join(","), yes_no(self_dual));
            if phratries {
                let _ = write!(text, " tribe={}", part[0].tribe);
            }
            let _ = writeln!(text, " undecided={}", yes_no(undecided));
        } else {
            let _ = write!(text, "{what} {} {{{}}}", i + 1, names.join(","));
            if phratries {
                let _ = write!(text, " in tribe {}", part[0].tribe);
            }
            if self_dual {
                let _ = write!(text, " {}", paint("self-dual", 33, opts.color));
            }
            if undecided {
                text.push_str(" undecided");
            }
            text.push('\n');
        }
    }
    if !opts.machine {
        let _ = writeln!(text, "{what}-count={}", parts.len());
    }
    Ok(Outcome::ok(text))
}

pub fn tribes(d: &TangleDiagram, opts: &Options) -> CliResult<Outcome> {
    partition(d, opts, false)
}

pub fn phratries(d: &TangleDiagram, opts: &Options) -> CliResult<Outcome> {
    partition(d, opts, true)
}

pub fn poly(d: &TangleDiagram, selector: Selector) -> CliResult<Outcome> {
    Ok(Outcome::ok(index_polynomial(d, selector)?.to_string()))
}

fn finish(d: TangleDiagram, check: crate::verify::TraceCheck, mut text: String) -> Outcome {
    text.push_str("final:\n");
    text.push_str(&serialize(&d));
    if !text.ends_with('\n') {
        text.push('\n');
    }
    text.push_str(&check.to_string());
    let status = if check.passed() { Status::Ok } else { Status::VerificationFailed };
    Outcome { text, status }
}

pub fn replay(d: &TangleDiagram, trace_text: &str) -> CliResult<Outcome> {
    let trace = MoveTrace::parse(trace_text)?;
    let (end, check) = check_trace(d, &trace)?;
    Ok(finish(end, check, String::new()))
}

pub fn randomwalk(d: &TangleDiagram, steps: usize, seed: u64) -> CliResult<Outcome> {
    let (_, trace) = random_walk(d, steps, seed, &WalkConfig::default())?;
    let (end, check) = check_trace(d, &trace)?;
    Ok(finish(end, check, trace.to_string()))
}

pub fn explore(d: &TangleDiagram, opts: &Options) -> CliResult<Outcome> {
    let graph = build_phratry_graph(d, &opts.budget);
    let report = compare_with_classifier(d, &graph)?;
    let text = format!("{graph}{report}");
    let status = if report.soundness_violations() == 0 { Status::Ok } else { Status::VerificationFailed };
    Ok(Outcome { text, status })
}
