//! Implementations of the single-shot commands, shared between the binary
//! and the test suites. Each returns its stdout payload; check failures and
//! consistency violations are reported through [`CommandError`] so that the
//! binary can map them onto exit codes.

use std::fmt;
use std::path::Path;

use pbwdeg::cartan::{cartan_profile, kernel_from_profiles, KernelReport};
use pbwdeg::demazure::{classical_filtration_profile, demazure_dim};
use pbwdeg::fflv::minkowski_count;
use pbwdeg::plucker::{verify_q, QReport};
use pbwdeg::profile::GradedProfile;
use pbwdeg::weyl::{DominantWeight, Permutation};
use pbwdeg::Error as CoreError;
use serde_json::{json, Map, Value};

use crate::cache::{self, CacheKey};
use crate::report;

/// How a command run can go wrong, ordered by exit code.
#[derive(Debug)]
pub enum CommandError {
    /// Malformed or inconsistent user input: exit code 2.
    Usage(String),
    /// A verification check failed: exit code 1.
    CheckFailed(String),
    /// Two internal computations of the same quantity disagree: exit 3.
    Consistency(String),
    /// Filesystem trouble (cache or checkpoint): exit code 2.
    Io(String),
}

impl fmt::Display for CommandError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CommandError::Usage(m) => write!(f, "usage error: {m}"),
            CommandError::CheckFailed(m) => write!(f, "check failed: {m}"),
            CommandError::Consistency(m) => write!(f, "internal consistency violation: {m}"),
            CommandError::Io(m) => write!(f, "io error: {m}"),
        }
    }
}

impl std::error::Error for CommandError {}

impl CommandError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CommandError::CheckFailed(_) => 1,
            CommandError::Usage(_) | CommandError::Io(_) => 2,
            CommandError::Consistency(_) => 3,
        }
    }
}

fn core_err(e: CoreError) -> CommandError {
    match e {
        CoreError::Consistency(msg) => CommandError::Consistency(msg),
        other => CommandError::Usage(other.to_string()),
    }
}

/// Parses and cross-validates the common `(n, w, lambda)` triple.
pub fn parse_inputs(
    n: Option<u8>,
    w: Option<&str>,
    lambda: Option<&str>,
) -> Result<(u8, Option<Permutation>, Option<DominantWeight>), CommandError> {
    let w = w.map(Permutation::parse).transpose().map_err(core_err)?;
    let lambda = lambda
        .map(DominantWeight::parse)
        .transpose()
        .map_err(core_err)?;
    let mut size = n;
    if let Some(w) = &w {
        match size {
            Some(s) if s != w.n() => {
                return Err(CommandError::Usage(format!(
                    "--n {} disagrees with the length of --w {}",
                    s,
                    w.n()
                )));
            }
            _ => size = Some(w.n()),
        }
    }
    if let Some(lam) = &lambda {
        match size {
            Some(s) if s != lam.n() => {
                return Err(CommandError::Usage(format!(
                    "--lambda has {} coordinates but n = {}",
                    lam.n() - 1,
                    size.unwrap()
                )));
            }
            _ => size = Some(lam.n()),
        }
    }
    let size = size.ok_or_else(|| CommandError::Usage("no rank given".into()))?;
    Ok((size, w, lambda))
}

pub fn cmd_inversions(w: &Permutation) -> Value {
    report::inversions_json(&w.inversions())
}

pub fn cmd_demazure_dim(w: &Permutation, lam: &DominantWeight) -> Value {
    json!({"dim": demazure_dim(w, lam)})
}

/// Cartan component profile, cached when a directory is given.
pub fn cartan_profile_cached(
    w: &Permutation,
    lam: &DominantWeight,
    cache_dir: Option<&Path>,
) -> GradedProfile {
    profile_cached("cartan-profile", w, lam, cache_dir, || {
        cartan_profile(w, lam)
    })
}

/// Classical filtration profile, cached when a directory is given.
pub fn classical_profile_cached(
    w: &Permutation,
    lam: &DominantWeight,
    cache_dir: Option<&Path>,
) -> GradedProfile {
    profile_cached("classical-profile", w, lam, cache_dir, || {
        classical_filtration_profile(w, lam)
    })
}

fn profile_cached<F: FnOnce() -> GradedProfile>(
    kind: &str,
    w: &Permutation,
    lam: &DominantWeight,
    cache_dir: Option<&Path>,
    compute: F,
) -> GradedProfile {
    let key = CacheKey {
        kind,
        n: w.n(),
        w: w.to_string(),
        lambda: lam.to_string(),
    };
    if let Some(dir) = cache_dir {
        if let Some(cached) = cache::load(dir, &key) {
            if let Some(profile) = report::profile_from_json(&cached) {
                return profile;
            }
        }
    }
    let profile = compute();
    if let Some(dir) = cache_dir {
        // a failed write only costs the cache, not the result
        let _ = cache::store(dir, &key, &report::profile_json(&profile));
    }
    profile
}

pub fn cmd_cartan(w: &Permutation, lam: &DominantWeight, cache_dir: Option<&Path>) -> Value {
    report::profile_json(&cartan_profile_cached(w, lam, cache_dir))
}

pub fn kernel_report(
    w: &Permutation,
    lam: &DominantWeight,
    cache_dir: Option<&Path>,
) -> Result<KernelReport, CommandError> {
    let d = classical_profile_cached(w, lam, cache_dir);
    let e = cartan_profile_cached(w, lam, cache_dir);
    kernel_from_profiles(w, lam, &d, &e).map_err(core_err)
}

pub fn cmd_kernel(
    w: &Permutation,
    lam: &DominantWeight,
    cache_dir: Option<&Path>,
) -> Result<Value, CommandError> {
    Ok(report::kernel_json(&kernel_report(w, lam, cache_dir)?))
}

pub fn cmd_fflv_count(w: &Permutation, lam: &DominantWeight, with_set: bool) -> Value {
    let (set, count) = minkowski_count(w, lam);
    let mut out = Map::new();
    out.insert("count".into(), json!(count));
    if with_set {
        out.insert("set".into(), report::lattice_set_json(&set));
    }
    Value::Object(out)
}

pub fn cmd_verify_q(w: &Permutation) -> Result<(Value, QReport), CommandError> {
    let report = verify_q(w).map_err(core_err)?;
    Ok((report::q_report_json(&report), report))
}

/// One line of the verification table.
pub struct CheckLine {
    pub name: &'static str,
    pub expected: String,
    pub actual: String,
    pub pass: bool,
}

/// The hardwired verification run: every numeric claim about the
/// counterexample pair, each checked against its published value.
pub struct CounterexampleReport {
    pub lines: Vec<CheckLine>,
}

impl CounterexampleReport {
    pub fn all_pass(&self) -> bool {
        self.lines.iter().all(|l| l.pass)
    }

    pub fn to_json(&self) -> Value {
        let checks: Vec<Value> = self
            .lines
            .iter()
            .map(|l| {
                json!({
                    "name": l.name,
                    "expected": l.expected,
                    "actual": l.actual,
                    "pass": l.pass,
                })
            })
            .collect();
        let mut out = Map::new();
        out.insert("pass".into(), json!(self.all_pass()));
        out.insert("checks".into(), Value::Array(checks));
        Value::Object(out)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for l in &self.lines {
            out.push_str(&format!(
                "{} {:<38} expected {:<12} got {}\n",
                if l.pass { "PASS" } else { "FAIL" },
                l.name,
                l.expected,
                l.actual
            ));
        }
        out.push_str(&format!(
            "overall: {}\n",
            if self.all_pass() { "PASS" } else { "FAIL" }
        ));
        out
    }
}

/// Which side of the weight pair to verify.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SideSelection {
    pub lambda: bool,
    pub mu: bool,
}

pub const WITNESS_W: &str = "6,4,2,5,3,1";
pub const WITNESS_LAMBDA: &str = "1,1,0,1,1";
pub const WITNESS_MU: &str = "2,1,0,1,1";

fn check_u64(name: &'static str, expected: u64, actual: u64) -> CheckLine {
    CheckLine {
        name,
        expected: expected.to_string(),
        actual: actual.to_string(),
        pass: expected == actual,
    }
}

fn kernel_lines(
    report: &KernelReport,
    expected_total: u64,
    expected_grade: u32,
    name_total: &'static str,
    name_shape: &'static str,
) -> Vec<CheckLine> {
    let mut lines = vec![check_u64(name_total, expected_total, report.kernel_total)];
    let shape_ok = report
        .kernel_cells
        .iter()
        .all(|(&(grade, _), &dim)| grade == expected_grade && dim == 1)
        && report.kernel_cells.len() as u64 == expected_total;
    lines.push(CheckLine {
        name: name_shape,
        expected: format!("{expected_total} cells of dim 1 at grade {expected_grade}"),
        actual: {
            let cells: Vec<String> = report
                .kernel_cells
                .iter()
                .map(|(&(grade, ref wt), &dim)| format!("grade {grade} wt {wt} dim {dim}"))
                .collect();
            if cells.is_empty() {
                "none".to_string()
            } else {
                cells.join("; ")
            }
        },
        pass: shape_ok,
    });
    lines
}

/// Runs the hardwired verification, optionally restricted to one side.
pub fn cmd_verify_counterexample(
    sides: SideSelection,
    cache_dir: Option<&Path>,
) -> Result<CounterexampleReport, CommandError> {
    let w = Permutation::parse(WITNESS_W).expect("hardwired permutation");
    let lam = DominantWeight::parse(WITNESS_LAMBDA).expect("hardwired weight");
    let mu = DominantWeight::parse(WITNESS_MU).expect("hardwired weight");
    let mut lines = Vec::new();

    if sides.lambda {
        lines.push(check_u64(
            "demazure-dim(lambda), character",
            2942,
            demazure_dim(&w, &lam),
        ));
        let d = classical_profile_cached(&w, &lam, cache_dir);
        lines.push(check_u64("demazure-dim(lambda), closure", 2942, d.total()));
        let e = cartan_profile_cached(&w, &lam, cache_dir);
        lines.push(check_u64("cartan-dim(lambda)", 2941, e.total()));
        let kernel = kernel_from_profiles(&w, &lam, &d, &e).map_err(core_err)?;
        lines.extend(kernel_lines(
            &kernel,
            1,
            7,
            "kernel-total(lambda)",
            "kernel-shape(lambda)",
        ));
        let (_, gamma) = minkowski_count(&w, &lam);
        lines.push(check_u64("lattice-count(lambda)", 2941, gamma));
        let q = verify_q(&w).map_err(core_err)?;
        lines.push(CheckLine {
            name: "witness-certificate",
            expected: "all four checks pass".to_string(),
            actual: format!(
                "restricted_zero={} full_nonzero={} enumerations_empty={} divisibility={}",
                q.restricted_is_zero,
                q.full_is_nonzero,
                q.enumerations_empty,
                q.first_product_divisible
                    && q.factor_divisions.iter().all(|(_, d)| !d)
                    && !q.second_product_divisible
            ),
            pass: q.all_pass(),
        });
    }

    if sides.mu {
        lines.push(check_u64(
            "demazure-dim(mu), character",
            8226,
            demazure_dim(&w, &mu),
        ));
        let d = classical_profile_cached(&w, &mu, cache_dir);
        lines.push(check_u64("demazure-dim(mu), closure", 8226, d.total()));
        let e = cartan_profile_cached(&w, &mu, cache_dir);
        lines.push(check_u64("cartan-dim(mu)", 8221, e.total()));
        let kernel = kernel_from_profiles(&w, &mu, &d, &e).map_err(core_err)?;
        lines.extend(kernel_lines(
            &kernel,
            5,
            8,
            "kernel-total(mu)",
            "kernel-shape(mu)",
        ));
        let (_, gamma) = minkowski_count(&w, &mu);
        lines.push(check_u64("lattice-count(mu)", 8221, gamma));
    }

    Ok(CounterexampleReport { lines })
}
