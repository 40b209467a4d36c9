//! A closed catalog of checkable identities: each entry evaluates two sides
//! at sampled parameters and reports the discrepancy.

mod bessel;
mod catalog;
mod integrals;
mod manifest;
mod sides;
#[cfg(test)]
mod tests;

pub use bessel::{bessel_i, bessel_k};
pub use manifest::{manifest, ManifestEntry, Resolution};

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::time::Instant;

use crate::error::{Error, Result};
use crate::numerics::{EvalResult, ZERO};
use crate::quad::QuadConfig;

/// Margin that sampled parameters keep from every strict inequality.
pub const SAMPLING_MARGIN: f64 = 0.05;
/// Below this |rhs| the absolute difference decides pass/fail.
pub const SMALL_RHS: f64 = 1e-6;
const MAX_REJECTIONS: usize = 10_000;
pub const REPORT_HEADER: &str = "# legfrac-report v1";

/// Named complex parameters of one check.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Params(pub BTreeMap<String, Complex64>);

impl Params {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with(mut self, name: &str, value: impl Into<Complex64>) -> Self {
        self.0.insert(name.to_string(), value.into());
        self
    }

    pub fn get(&self, name: &str) -> Complex64 {
        self.0.get(name).copied().unwrap_or(ZERO)
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.0.keys().map(String::as_str)
    }
}

impl FromIterator<(&'static str, f64)> for Params {
    fn from_iter<T: IntoIterator<Item = (&'static str, f64)>>(iter: T) -> Self {
        Self(iter.into_iter().map(|(k, v)| (k.to_string(), Complex64::new(v, 0.0))).collect())
    }
}

/// Sampling box of one parameter.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ParamRange {
    pub name: &'static str,
    pub re: (f64, f64),
    pub im: (f64, f64),
}

impl ParamRange {
    pub const fn real(name: &'static str, lo: f64, hi: f64) -> Self {
        Self { name, re: (lo, hi), im: (0.0, 0.0) }
    }

    pub const fn complex(name: &'static str, re: (f64, f64), im: (f64, f64)) -> Self {
        Self { name, re, im }
    }

    fn sample(&self, rng: &mut ChaCha8Rng) -> Complex64 {
        let draw = |rng: &mut ChaCha8Rng, (lo, hi): (f64, f64)| if hi > lo { rng.gen_range(lo..hi) } else { lo };
        Complex64::new(draw(rng, self.re), draw(rng, self.im))
    }
}

/// A machine-checkable inequality: satisfied when `margin(params) > 0`.
#[derive(Clone, Copy)]
pub struct Constraint {
    pub label: &'static str,
    pub margin: fn(&Params) -> f64,
}

pub type Side = fn(&Params, &QuadConfig) -> Result<EvalResult>;

#[derive(Clone)]
pub struct Identity {
    pub id: &'static str,
    pub description: &'static str,
    /// Where the relation sits among the source's results, in plain words.
    pub anchor: &'static str,
    pub tags: &'static [&'static str],
    pub params: Vec<ParamRange>,
    pub constraints: Vec<Constraint>,
    /// Point used by the fixed-point checks; also fills parameters missing from a request.
    pub reference: Vec<(&'static str, f64)>,
    pub lhs: Side,
    pub rhs: Side,
    pub default_tolerance: f64,
    /// For alternative readings of a printed formula: the entry they shadow.
    pub variant_of: Option<&'static str>,
}

impl Identity {
    pub fn has_tag(&self, tag: &str) -> bool {
        self.tags.contains(&tag)
    }

    pub fn is_variant(&self) -> bool {
        self.variant_of.is_some()
    }

    pub fn reference_params(&self) -> Params {
        self.reference.iter().copied().collect()
    }

    pub fn summary(&self) -> IdentitySummary {
        IdentitySummary {
            id: self.id.to_string(),
            description: self.description.to_string(),
            anchor: self.anchor.to_string(),
            tags: self.tags.iter().map(|t| t.to_string()).collect(),
            params: self.params.iter().map(|r| r.name.to_string()).collect(),
            constraints: self.constraints.iter().map(|c| c.label.to_string()).collect(),
            default_tolerance: self.default_tolerance,
            variant_of: self.variant_of.map(str::to_string),
        }
    }

    fn domain_violation(&self, p: &Params, margin: f64) -> Option<String> {
        for name in p.names() {
            let boxed = self.params.iter().any(|r| r.name == name);
            if !boxed && !self.reference.iter().any(|(n, _)| *n == name) {
                return Some(format!("unknown parameter `{name}`"));
            }
        }
        if let Some((name, v)) = p.0.iter().find(|(_, v)| !(v.re.is_finite() && v.im.is_finite())) {
            return Some(format!("parameter `{name}` = {v} is not finite"));
        }
        self.constraints
            .iter()
            .find(|c| !((c.margin)(p) > margin))
            .map(|c| format!("constraint `{}` violated", c.label))
    }

    fn with_defaults(&self, p: &Params) -> Params {
        let mut full = self.reference_params();
        full.0.extend(p.0.iter().map(|(k, v)| (k.clone(), *v)));
        full
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IdentitySummary {
    pub id: String,
    pub description: String,
    pub anchor: String,
    pub tags: Vec<String>,
    pub params: Vec<String>,
    pub constraints: Vec<String>,
    pub default_tolerance: f64,
    pub variant_of: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckReport {
    pub id: String,
    /// Draw index within a suite run; 0 for single checks.
    pub draw: usize,
    pub params: Params,
    pub lhs: Complex64,
    pub rhs: Complex64,
    pub abs_diff: f64,
    pub rel_diff: f64,
    pub tolerance: f64,
    pub passed: bool,
    pub wall_time: f64,
    /// Evaluation error when a side could not be computed.
    pub error: Option<String>,
}

impl CheckReport {
    fn failed(id: &str, draw: usize, params: Params, tolerance: f64, wall_time: f64, error: &Error) -> Self {
        let nan = Complex64::new(f64::NAN, f64::NAN);
        Self {
            id: id.to_string(),
            draw,
            params,
            lhs: nan,
            rhs: nan,
            abs_diff: f64::NAN,
            rel_diff: f64::NAN,
            tolerance,
            passed: false,
            wall_time,
            error: Some(error.to_string()),
        }
    }
}

/// passed ⇔ rel ≤ tol, or abs ≤ tol when |rhs| is below [`SMALL_RHS`].
pub fn passes(lhs: Complex64, rhs: Complex64, tolerance: f64) -> (f64, f64, bool) {
    let abs = (lhs - rhs).norm();
    let rel = abs / rhs.norm();
    let ok = if rhs.norm() < SMALL_RHS { abs <= tolerance } else { rel <= tolerance };
    (abs, rel, ok && abs.is_finite())
}

pub fn catalog() -> &'static [Identity] {
    catalog::entries()
}

pub fn find_identity(id: &str) -> Result<&'static Identity> {
    catalog().iter().find(|e| e.id == id).ok_or_else(|| Error::UnknownIdentity(id.to_string()))
}

/// An entry matches a filter when the filter is one of its tags or its id.
fn matches(e: &Identity, filter: Option<&str>) -> bool {
    filter.is_none_or(|f| e.id == f || e.has_tag(f))
}

/// Catalog summaries in id order.
pub fn list_identities(filter: Option<&str>) -> Vec<IdentitySummary> {
    let mut out: Vec<_> = catalog().iter().filter(|e| matches(e, filter)).map(Identity::summary).collect();
    out.sort_by(|a, b| a.id.cmp(&b.id));
    out
}

fn evaluate(e: &Identity, p: &Params, tolerance: f64, cfg: &QuadConfig, draw: usize) -> Result<CheckReport> {
    let start = Instant::now();
    let wrap = |source: Error| Error::UpstreamFailure { id: e.id.to_string(), source: Box::new(source) };
    let lhs = (e.lhs)(p, cfg).map_err(wrap)?.value;
    let rhs = (e.rhs)(p, cfg).map_err(wrap)?.value;
    let (abs_diff, rel_diff, passed) = passes(lhs, rhs, tolerance);
    Ok(CheckReport {
        id: e.id.to_string(),
        draw,
        params: p.clone(),
        lhs,
        rhs,
        abs_diff,
        rel_diff,
        tolerance,
        passed,
        wall_time: start.elapsed().as_secs_f64(),
        error: None,
    })
}

/// Evaluates both sides of `id` at `params` (missing parameters taken from
/// the entry's reference point). `tolerance` defaults to the entry's own.
pub fn check_identity(id: &str, params: &Params, tolerance: Option<f64>, cfg: &QuadConfig) -> Result<CheckReport> {
    let e = find_identity(id)?;
    let tolerance = tolerance.unwrap_or(e.default_tolerance);
    if !(tolerance > 0.0) {
        return Err(Error::InvalidInput(format!("tolerance must be positive, got {tolerance}")));
    }
    let p = e.with_defaults(params);
    if let Some(reason) = e.domain_violation(&p, 0.0) {
        return Err(Error::DomainRejected { id: id.to_string(), reason });
    }
    evaluate(e, &p, tolerance, cfg, 0)
}

/// Checks an entry at its reference point.
pub fn check_reference(id: &str, cfg: &QuadConfig) -> Result<CheckReport> {
    check_identity(id, &Params::new(), None, cfg)
}

fn fnv1a(s: &str) -> u64 {
    s.bytes().fold(0xcbf2_9ce4_8422_2325, |h, b| (h ^ b as u64).wrapping_mul(0x0100_0000_01b3))
}

/// Rejection-samples one parameter set from the entry's boxes.
pub fn sample_params(e: &Identity, rng: &mut ChaCha8Rng) -> Option<Params> {
    let reference = e.reference_params();
    for _ in 0..MAX_REJECTIONS {
        let mut p = Params::new();
        for r in &e.params {
            p.0.insert(r.name.to_string(), r.sample(rng));
        }
        // parameters without a box stay at the reference point
        for (k, v) in &reference.0 {
            p.0.entry(k.clone()).or_insert(*v);
        }
        if e.domain_violation(&p, SAMPLING_MARGIN).is_none() {
            return Some(p);
        }
    }
    None
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct SuiteSummary {
    pub total: usize,
    pub passed: usize,
    /// Failed checks of non-variant entries.
    pub failed: usize,
    /// Entries whose domain could not be sampled.
    pub rejected: usize,
    pub variants_passed: Vec<String>,
    pub variants_failed: Vec<String>,
}

impl SuiteSummary {
    pub fn all_passed(&self) -> bool {
        self.failed == 0 && self.rejected == 0
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SuiteResult {
    pub reports: Vec<CheckReport>,
    pub summary: SuiteSummary,
}

/// Runs `draws` random checks of every entry matching `filter`, in parallel,
/// deterministically for a given seed. Failures are reported, not raised.
pub fn run_suite(filter: Option<&str>, seed: u64, draws: usize, cfg: &QuadConfig) -> SuiteResult {
    let entries: Vec<&Identity> = catalog().iter().filter(|e| matches(e, filter)).collect();
    let per_entry: Vec<(Vec<CheckReport>, bool)> = entries
        .par_iter()
        .map(|e| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed ^ fnv1a(e.id));
            let mut reports = Vec::with_capacity(draws);
            for draw in 0..draws {
                let Some(p) = sample_params(e, &mut rng) else {
                    return (reports, true);
                };
                let start = Instant::now();
                let r = evaluate(e, &p, e.default_tolerance, cfg, draw)
                    .unwrap_or_else(|err| CheckReport::failed(e.id, draw, p, e.default_tolerance, start.elapsed().as_secs_f64(), &err));
                reports.push(r);
            }
            (reports, false)
        })
        .collect();

    let mut summary = SuiteSummary::default();
    let mut reports = Vec::new();
    for (e, (rs, rejected)) in entries.iter().zip(per_entry) {
        if rejected {
            summary.rejected += 1;
        }
        let all_ok = !rs.is_empty() && rs.iter().all(|r| r.passed);
        for r in &rs {
            summary.total += 1;
            if r.passed {
                summary.passed += 1;
            } else if !e.is_variant() {
                summary.failed += 1;
            }
        }
        if e.is_variant() && !rs.is_empty() {
            let list = if all_ok { &mut summary.variants_passed } else { &mut summary.variants_failed };
            list.push(e.id.to_string());
        }
        reports.extend(rs);
    }
    reports.sort_by(|a, b| a.id.cmp(&b.id).then(a.draw.cmp(&b.draw)));
    summary.variants_passed.sort();
    summary.variants_failed.sort();
    SuiteResult { reports, summary }
}

/// Line-delimited report: a version header, then one JSON object per check
/// with fields in a fixed order.
pub fn format_report(reports: &[CheckReport]) -> String {
    let mut out = String::from(REPORT_HEADER);
    out.push('\n');
    for r in reports {
        let line = serde_json::json!({
            "id": r.id,
            "draw": r.draw,
            "params": r.params.0.iter().map(|(k, v)| (k.clone(), [v.re, v.im])).collect::<BTreeMap<_, _>>(),
            "lhs": [r.lhs.re, r.lhs.im],
            "rhs": [r.rhs.re, r.rhs.im],
            "rel_diff": r.rel_diff,
            "passed": r.passed,
            "wall_time": r.wall_time,
        });
        let _ = writeln!(out, "{}", ordered_line(&line));
    }
    out
}

const REPORT_FIELDS: [&str; 8] = ["id", "draw", "params", "lhs", "rhs", "rel_diff", "passed", "wall_time"];

fn ordered_line(v: &serde_json::Value) -> String {
    let fields: Vec<String> = REPORT_FIELDS
        .iter()
        .map(|k| format!("{}:{}", serde_json::Value::from(*k), v.get(*k).cloned().unwrap_or(serde_json::Value::Null)))
        .collect();
    format!("{{{}}}", fields.join(","))
}
