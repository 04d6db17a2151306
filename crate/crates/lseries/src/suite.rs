//! Suite files, the bundled default suite and the JSON report.

use crate::check::{run_check, CheckReport, Status};
use crate::error::{Error, Result};
use crate::spec::SuiteConfig;
use lseries_core::EvalConfig;
use rayon::prelude::*;
use serde::Serialize;
use std::path::{Path, PathBuf};

/// The suite run by `verify` when no `--config` is given.
pub const DEFAULT_SUITE: &str = include_str!("../suites/default.json");

pub fn parse_suite(text: &str, origin: &Path) -> Result<SuiteConfig> {
    let suite: SuiteConfig = serde_json::from_str(text).map_err(|e| Error::Config {
        path: origin.to_path_buf(),
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    for spec in &suite.checks {
        spec.validate()?;
    }
    let mut seen = std::collections::HashSet::new();
    for spec in &suite.checks {
        if !seen.insert(spec.id.as_str()) {
            return Err(Error::Usage(format!("duplicate check id `{}`", spec.id)));
        }
    }
    Ok(suite)
}

pub fn load_suite(path: &Path) -> Result<SuiteConfig> {
    let text = std::fs::read_to_string(path).map_err(|source| Error::Io { path: path.to_path_buf(), source })?;
    parse_suite(&text, path)
}

pub fn default_suite() -> SuiteConfig {
    parse_suite(DEFAULT_SUITE, &PathBuf::from("<bundled default suite>")).expect("bundled suite is valid")
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub summary: Summary,
    pub checks: Vec<CheckReport>,
}

impl SuiteReport {
    pub fn success(&self) -> bool {
        self.summary.fail == 0
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }
}

/// Runs the checks whose id matches `filter` in parallel; the report keeps
/// the suite's order.
pub fn run_suite(
    suite: &SuiteConfig,
    filter: Option<&glob::Pattern>,
    default_tolerance: f64,
    cfg: &EvalConfig,
) -> SuiteReport {
    let selected: Vec<_> = suite.checks.iter().filter(|c| filter.is_none_or(|p| p.matches(&c.id))).collect();
    let checks: Vec<CheckReport> = selected.par_iter().map(|c| run_check(c, default_tolerance, cfg)).collect();
    let mut summary = Summary::default();
    for c in &checks {
        match c.status {
            Status::Pass => summary.pass += 1,
            Status::Fail => summary.fail += 1,
            Status::Skipped => summary.skipped += 1,
        }
    }
    SuiteReport { summary, checks }
}
