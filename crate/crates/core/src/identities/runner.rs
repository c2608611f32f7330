use super::catalog::builtin_catalog;
use super::{Bounds, Check, CheckResult, Counterexample, Instance, Status};
use crate::error::{Error, Result};
use rayon::prelude::*;
use std::time::Instant;

/// Results of a batch run.
#[derive(Clone, Debug, PartialEq)]
pub struct Summary {
    pub bounds: Bounds,
    pub results: Vec<CheckResult>,
    pub instances: usize,
    pub failures: usize,
    pub total_ms: u64,
}

/// Looks a check up by exact name.
pub fn find_check(name: &str) -> Result<Check> {
    let catalog = builtin_catalog();
    if let Some(c) = catalog.iter().find(|c| c.name == name) {
        return Ok(*c);
    }
    let mut scored: Vec<(usize, &str)> = catalog
        .iter()
        .map(|c| (strsim::levenshtein(name, c.name), c.name))
        .filter(|(d, n)| *d <= 3 || n.contains(name) || (name.len() >= 3 && name.contains(*n)))
        .collect();
    scored.sort();
    Err(Error::UnknownCheck {
        name: name.to_string(),
        suggestions: scored.into_iter().take(3).map(|(_, n)| n.to_string()).collect(),
    })
}

/// Checks whose name or tag matches the glob `pattern` (all checks for `None`).
pub fn select(pattern: Option<&str>) -> Result<Vec<Check>> {
    let catalog = builtin_catalog();
    let Some(pattern) = pattern else {
        return Ok(catalog);
    };
    let glob = glob::Pattern::new(pattern).map_err(|e| Error::Parse(format!("bad pattern '{pattern}': {e}")))?;
    Ok(catalog.into_iter().filter(|c| glob.matches(c.name) || glob.matches(c.tag)).collect())
}

fn first_failure(inst: &Instance) -> Option<Counterexample> {
    match inst.evaluate() {
        Ok(cmps) => cmps.into_iter().find(|c| !c.holds()).map(|c| Counterexample {
            params: inst.params.clone(),
            equation: c.label.clone(),
            lhs: c.lhs.to_string(),
            rhs: c.rhs.to_string(),
            difference: c.lhs.difference(&c.rhs),
        }),
        Err(e) => Some(Counterexample {
            params: inst.params.clone(),
            equation: "evaluation".into(),
            lhs: format!("error: {e}"),
            rhs: String::new(),
            difference: format!("error: {e}"),
        }),
    }
}

/// Runs every instance of `check` on the current rayon pool. The reported
/// counterexample is the first failing instance in enumeration order.
pub fn run_check(check: &Check, bounds: &Bounds) -> CheckResult {
    let start = Instant::now();
    let instances = (check.instances)(bounds);
    let failures: Vec<Option<Counterexample>> = instances.par_iter().map(first_failure).collect();
    let counterexample = failures.into_iter().flatten().next();
    CheckResult {
        name: check.name.to_string(),
        statement: check.statement.to_string(),
        instances: instances.len(),
        status: if counterexample.is_some() { Status::Fail } else { Status::Pass },
        counterexample,
        ms: start.elapsed().as_millis() as u64,
    }
}

fn pool(jobs: usize) -> Result<rayon::ThreadPool> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|e| Error::Io(format!("cannot start worker pool: {e}")))
}

/// Runs a single named check with `jobs` workers.
pub fn run_check_named(name: &str, bounds: &Bounds, jobs: usize) -> Result<CheckResult> {
    let check = find_check(name)?;
    Ok(pool(jobs)?.install(|| run_check(&check, bounds)))
}

/// Runs the checks selected by `filter`. With `fail_fast`, checks after the
/// first failure are reported as skipped.
pub fn run_all(bounds: &Bounds, filter: Option<&str>, jobs: usize, fail_fast: bool) -> Result<Summary> {
    let checks = select(filter)?;
    let pool = pool(jobs)?;
    let start = Instant::now();
    let mut results = Vec::with_capacity(checks.len());
    let mut failed = false;
    for check in &checks {
        if failed && fail_fast {
            results.push(CheckResult {
                name: check.name.to_string(),
                statement: check.statement.to_string(),
                instances: 0,
                status: Status::Skipped,
                counterexample: None,
                ms: 0,
            });
            continue;
        }
        let r = pool.install(|| run_check(check, bounds));
        failed |= r.status == Status::Fail;
        results.push(r);
    }
    Ok(Summary {
        bounds: *bounds,
        instances: results.iter().map(|r| r.instances).sum(),
        failures: results.iter().filter(|r| r.status == Status::Fail).count(),
        results,
        total_ms: start.elapsed().as_millis() as u64,
    })
}
