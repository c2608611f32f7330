use super::runner::Summary;
use super::{Check, CheckResult, Status};
use serde::Serialize;
use std::fmt::Write;

/// The structured form of a batch run.
#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub bound: u32,
    pub qbound: u32,
    pub checks: Vec<CheckResult>,
    pub instances: usize,
    pub failures: usize,
    pub total_ms: u64,
}

impl Report {
    /// With `timings` off every duration is reported as zero, which makes the
    /// output a pure function of the configuration.
    pub fn from_summary(s: &Summary, timings: bool) -> Report {
        let mut checks = s.results.clone();
        if !timings {
            checks.iter_mut().for_each(|c| c.ms = 0);
        }
        Report {
            bound: s.bounds.n,
            qbound: s.bounds.q,
            checks,
            instances: s.instances,
            failures: s.failures,
            total_ms: if timings { s.total_ms } else { 0 },
        }
    }
}

pub fn render_json(s: &Summary, timings: bool) -> String {
    serde_json::to_string_pretty(&Report::from_summary(s, timings)).expect("report serializes")
}

pub fn render_text(s: &Summary, timings: bool) -> String {
    let width = s.results.iter().map(|r| r.name.len()).max().unwrap_or(4).max(5);
    let mut out = String::new();
    let _ = writeln!(out, "{:<width$}  {:>7}  {:>9}  {:>8}", "check", "status", "instances", "ms");
    for r in &s.results {
        let ms = if timings { r.ms.to_string() } else { "-".into() };
        let _ = writeln!(out, "{:<width$}  {:>7}  {:>9}  {:>8}", r.name, r.status, r.instances, ms);
        if let (Status::Fail, Some(c)) = (r.status, &r.counterexample) {
            let _ = writeln!(out, "    at {} [{}]", c.params, c.equation);
            let _ = writeln!(out, "    lhs:  {}", c.lhs);
            let _ = writeln!(out, "    rhs:  {}", c.rhs);
            let _ = writeln!(out, "    diff: {}", c.difference);
        }
    }
    let total = if timings { format!(" in {} ms", s.total_ms) } else { String::new() };
    let _ = writeln!(
        out,
        "{} checks, {} instances, {} failures (N={}, qbound={}){}",
        s.results.len(),
        s.instances,
        s.failures,
        s.bounds.n,
        s.bounds.q,
        total
    );
    out
}

#[derive(Serialize)]
struct ListRow<'a> {
    name: &'a str,
    tag: &'a str,
    #[serde(rename = "ref")]
    statement: &'a str,
    params: &'a str,
}

pub fn render_list_json(checks: &[Check]) -> String {
    let rows: Vec<ListRow> = checks
        .iter()
        .map(|c| ListRow { name: c.name, tag: c.tag, statement: c.statement, params: c.params })
        .collect();
    serde_json::to_string_pretty(&rows).expect("listing serializes")
}

pub fn render_list_text(checks: &[Check]) -> String {
    let width = checks.iter().map(|c| c.name.len()).max().unwrap_or(4);
    let tw = checks.iter().map(|c| c.tag.len()).max().unwrap_or(3);
    let mut out = String::new();
    for c in checks {
        let _ = writeln!(out, "{:<width$}  {:<tw$}  {}  ({})", c.name, c.tag, c.statement, c.params);
    }
    out
}
