//! Grid runner over the identity catalog and its JSON report.

pub mod grid;

use std::path::Path;
use std::time::{SystemTime, UNIX_EPOCH};

use rayon::prelude::*;
use serde::ser::{SerializeStruct, Serializer};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::identities::{Catalog, CheckResult, Correction, IdentityDescriptor, Outcome, CATALOG_VERSION};
use crate::sequences::SeqEngine;
use grid::{parse_grid, GridError, ParamGrid, DEFAULT_POINT_CAP};

/// Failures kept per identity in the report; the count is always complete.
pub const DEFAULT_FAILURE_SAMPLE: usize = 20;
const SKIP_SAMPLE: usize = 5;

#[derive(Debug, Error)]
pub enum SuiteError {
    #[error("no catalog entry matches {0}")]
    NoMatch(String),
    #[error("invalid id pattern {pattern}: {message}")]
    BadPattern { pattern: String, message: String },
    #[error(transparent)]
    Grid(#[from] GridError),
    #[error("grid for {id}: {source}")]
    IdentityGrid { id: String, source: GridError },
    #[error("config: {0}")]
    Config(String),
    #[error("worker pool: {0}")]
    Pool(String),
}

/// Optional configuration file contents.
#[derive(Clone, Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SuiteConfig {
    pub point_cap: Option<u64>,
    /// Id pattern to grid text; applied in key order, later entries winning.
    #[serde(default)]
    pub grids: serde_json::Map<String, serde_json::Value>,
    pub jobs: Option<usize>,
}

impl SuiteConfig {
    pub fn from_json(text: &str) -> Result<Self, SuiteError> {
        let cfg: SuiteConfig = serde_json::from_str(text).map_err(|e| SuiteError::Config(e.to_string()))?;
        for (pattern, value) in &cfg.grids {
            if !value.is_string() {
                return Err(SuiteError::Config(format!("grid for {pattern} must be a string")));
            }
        }
        Ok(cfg)
    }

    pub fn load(path: &Path) -> Result<Self, SuiteError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| SuiteError::Config(format!("{}: {e}", path.display())))?;
        Self::from_json(&text)
    }

    fn compiled_grids(&self) -> Result<Vec<(glob::Pattern, ParamGrid)>, SuiteError> {
        self.grids
            .iter()
            .map(|(pattern, value)| {
                let text = value.as_str().unwrap_or_default();
                let pat = compile(pattern)?;
                let grid = parse_grid(text).map_err(|e| SuiteError::Config(format!("grid for {pattern}: {e}")))?;
                Ok((pat, grid))
            })
            .collect()
    }
}

#[derive(Clone, Debug)]
pub struct SuiteOptions {
    pub filter: String,
    /// Axes replacing the default ones of every matched identity declaring them.
    pub overrides: ParamGrid,
    pub jobs: usize,
    pub point_cap: u64,
    pub config: SuiteConfig,
    pub failure_sample: usize,
    pub timestamp: bool,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions {
            filter: "*".into(),
            overrides: ParamGrid::default(),
            jobs: 1,
            point_cap: DEFAULT_POINT_CAP,
            config: SuiteConfig::default(),
            failure_sample: DEFAULT_FAILURE_SAMPLE,
            timestamp: false,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkipRecord {
    pub params: Vec<(String, i64)>,
    pub reason: String,
}

impl Serialize for SkipRecord {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("SkipRecord", 2)?;
        st.serialize_field("params", &crate::identities::OrderedParams(&self.params))?;
        st.serialize_field("reason", &self.reason)?;
        st.end()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityReport {
    pub id: String,
    pub errata_watch: bool,
    pub grid: String,
    pub points_tested: u64,
    pub passes: u64,
    pub failure_count: u64,
    /// The first failures in grid order.
    pub failures: Vec<CheckResult>,
    pub skipped: u64,
    pub skipped_sample: Vec<SkipRecord>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CorrectionFinding {
    pub label: String,
    pub edits: usize,
    pub points_passed: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ErrataFinding {
    pub id: String,
    /// `"confirmed"` when the printed form holds on the whole grid, else `"counterexample"`.
    pub status: &'static str,
    pub points_tested: u64,
    pub failure_count: u64,
    pub first_counterexample: Option<CheckResult>,
    /// Smallest listed correction passing on the whole grid, if any.
    pub correction: Option<CorrectionFinding>,
    pub corrections_tried: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub identities: usize,
    pub points_tested: u64,
    pub passes: u64,
    /// Failures outside errata-watch entries.
    pub failures: u64,
    pub errata_failures: u64,
    pub skipped: u64,
    pub all_pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub version: &'static str,
    pub catalog_version: &'static str,
    /// Seconds since the Unix epoch; absent for reproducible output.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub generated_at: Option<u64>,
    pub results: Vec<IdentityReport>,
    pub errata_findings: Vec<ErrataFinding>,
    pub summary: Summary,
}

impl Report {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// Process exit status: 0 when every non-watch entry passed, else 1.
    pub fn exit_code(&self) -> i32 {
        if self.summary.all_pass {
            0
        } else {
            1
        }
    }
}

fn compile(pattern: &str) -> Result<glob::Pattern, SuiteError> {
    glob::Pattern::new(pattern).map_err(|e| SuiteError::BadPattern {
        pattern: pattern.to_string(),
        message: e.to_string(),
    })
}

/// Catalog entries whose id matches `filter`, in catalog order.
pub fn matching(filter: &str) -> Result<Vec<&'static IdentityDescriptor>, SuiteError> {
    let pat = compile(filter)?;
    let found: Vec<_> = Catalog::global().entries().iter().filter(|d| pat.matches(&d.id)).collect();
    if found.is_empty() {
        return Err(SuiteError::NoMatch(filter.to_string()));
    }
    Ok(found)
}

/// Runs the suite on default grids with `overrides` applied.
pub fn run_suite(filter: &str, overrides: &ParamGrid, jobs: usize) -> Result<Report, SuiteError> {
    run_suite_with(&SuiteOptions {
        filter: filter.to_string(),
        overrides: overrides.clone(),
        jobs,
        ..SuiteOptions::default()
    })
}

/// The grid each matched identity runs on.
pub fn resolve_grids(
    opts: &SuiteOptions,
) -> Result<Vec<(&'static IdentityDescriptor, ParamGrid)>, SuiteError> {
    let ids = matching(&opts.filter)?;
    for name in opts.overrides.names() {
        if !ids.iter().any(|d| d.params.iter().any(|p| p.name == name)) {
            return Err(GridError::UnknownParameter {
                name: name.to_string(),
                target: opts.filter.clone(),
            }
            .into());
        }
    }
    let config_grids = opts.config.compiled_grids()?;
    let cap = opts.config.point_cap.unwrap_or(opts.point_cap);
    ids.into_iter()
        .map(|d| {
            let names = d.param_names();
            let mut g = d.default_grid.clone();
            for (pat, over) in &config_grids {
                if pat.matches(&d.id) {
                    g = g.overlay(over, &names);
                }
            }
            let g = g.overlay(&opts.overrides, &names);
            g.check_cap(cap).map_err(|source| SuiteError::IdentityGrid {
                id: d.id.clone(),
                source,
            })?;
            Ok((d, g))
        })
        .collect()
}

fn pool(jobs: usize) -> Result<rayon::ThreadPool, SuiteError> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|e| SuiteError::Pool(e.to_string()))
}

pub fn run_suite_with(opts: &SuiteOptions) -> Result<Report, SuiteError> {
    let plan = resolve_grids(opts)?;
    let pool = pool(opts.jobs)?;
    let eng = SeqEngine::global();

    let points: Vec<Vec<Vec<i64>>> = plan.iter().map(|(_, g)| g.points()).collect();
    let work: Vec<(usize, &[i64])> = points
        .iter()
        .enumerate()
        .flat_map(|(i, pts)| pts.iter().map(move |p| (i, p.as_slice())))
        .collect();
    let outcomes: Vec<Outcome> =
        pool.install(|| work.par_iter().map(|&(i, p)| plan[i].0.outcome(eng, p)).collect());

    let mut results = Vec::with_capacity(plan.len());
    let mut findings = Vec::new();
    let mut offset = 0usize;
    for (i, (desc, grid)) in plan.iter().enumerate() {
        let pts = &points[i];
        let slice = &outcomes[offset..offset + pts.len()];
        offset += pts.len();
        let report = tally(desc, grid, pts, slice, opts.failure_sample);
        if desc.errata_watch {
            findings.push(pool.install(|| errata_finding(desc, eng, pts, &report)));
        }
        results.push(report);
    }

    let sum = |f: fn(&IdentityReport) -> u64| results.iter().map(f).sum::<u64>();
    let failures: u64 = results.iter().filter(|r| !r.errata_watch).map(|r| r.failure_count).sum();
    let summary = Summary {
        identities: results.len(),
        points_tested: sum(|r| r.points_tested),
        passes: sum(|r| r.passes),
        failures,
        errata_failures: results.iter().filter(|r| r.errata_watch).map(|r| r.failure_count).sum(),
        skipped: sum(|r| r.skipped),
        all_pass: failures == 0,
    };
    let generated_at = opts
        .timestamp
        .then(|| SystemTime::now().duration_since(UNIX_EPOCH).map_or(0, |d| d.as_secs()));
    Ok(Report {
        version: env!("CARGO_PKG_VERSION"),
        catalog_version: CATALOG_VERSION,
        generated_at,
        results,
        errata_findings: findings,
        summary,
    })
}

fn tally(
    desc: &IdentityDescriptor,
    grid: &ParamGrid,
    points: &[Vec<i64>],
    outcomes: &[Outcome],
    sample: usize,
) -> IdentityReport {
    let mut r = IdentityReport {
        id: desc.id.clone(),
        errata_watch: desc.errata_watch,
        grid: grid.to_string(),
        points_tested: points.len() as u64,
        passes: 0,
        failure_count: 0,
        failures: Vec::new(),
        skipped: 0,
        skipped_sample: Vec::new(),
    };
    for (p, o) in points.iter().zip(outcomes) {
        match o {
            Outcome::Pass => r.passes += 1,
            Outcome::Fail { lhs, rhs } => {
                r.failure_count += 1;
                if r.failures.len() < sample {
                    r.failures.push(CheckResult {
                        id: desc.id.clone(),
                        params: desc.assignment(p),
                        lhs: lhs.clone(),
                        rhs: rhs.clone(),
                        pass: false,
                    });
                }
            }
            Outcome::Skip(reason) => {
                r.skipped += 1;
                if r.skipped_sample.len() < SKIP_SAMPLE {
                    r.skipped_sample.push(SkipRecord {
                        params: desc.assignment(p),
                        reason: reason.clone(),
                    });
                }
            }
        }
    }
    r
}

/// Whether `correction` passes at every admissible point, and how many passed.
fn correction_holds(desc: &IdentityDescriptor, eng: &SeqEngine, points: &[Vec<i64>], c: &Correction) -> Option<u64> {
    let failed = points
        .par_iter()
        .any(|p| matches!(desc.outcome_with(eng, p, Some(c)), Outcome::Fail { .. }));
    if failed {
        return None;
    }
    let passed = points
        .par_iter()
        .filter(|p| matches!(desc.outcome_with(eng, p, Some(c)), Outcome::Pass))
        .count() as u64;
    (passed > 0).then_some(passed)
}

fn errata_finding(desc: &IdentityDescriptor, eng: &SeqEngine, points: &[Vec<i64>], r: &IdentityReport) -> ErrataFinding {
    let first = r.failures.first().cloned();
    let mut finding = ErrataFinding {
        id: desc.id.clone(),
        status: if first.is_none() { "confirmed" } else { "counterexample" },
        points_tested: r.points_tested,
        failure_count: r.failure_count,
        first_counterexample: first,
        correction: None,
        corrections_tried: 0,
    };
    if r.failure_count == 0 {
        return finding;
    }
    for c in &desc.corrections {
        finding.corrections_tried += 1;
        if let Some(points_passed) = correction_holds(desc, eng, points, c) {
            finding.correction = Some(CorrectionFinding {
                label: c.label.clone(),
                edits: c.edits,
                points_passed,
            });
            break;
        }
    }
    finding
}
