//! Parameter sweep over `(w, λ)` pairs with a worker pool, checkpointing,
//! and canonical output ordering.
//!
//! Tasks are enumerated in a fixed order (permutations lexicographic in
//! one-line notation, weights lexicographic in coordinates), distributed
//! over a thread pool, and emitted sorted by that same order regardless of
//! completion order, so record content does not depend on the worker count.

use std::collections::BTreeMap;
use std::fs::OpenOptions;
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};
use std::sync::Mutex;
use std::time::Instant;

use pbwdeg::cartan::cartan_profile;
use pbwdeg::demazure::demazure_dim;
use pbwdeg::fflv::minkowski_count;
use pbwdeg::weyl::{DominantWeight, Permutation};
use rayon::prelude::*;
use serde_json::{json, Map, Value};

use crate::commands::CommandError;

/// One sweep result row.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepRecord {
    pub n: u8,
    pub w: String,
    pub lambda: String,
    pub d_dim: u64,
    pub e_dim: u64,
    pub kernel_total: u64,
    pub gamma_count: u64,
    pub is_triangular: bool,
    /// Wall-clock milliseconds; the only field exempt from the
    /// reproducibility guarantees.
    pub elapsed: u64,
}

impl SweepRecord {
    pub fn to_json(&self) -> Value {
        let mut out = Map::new();
        out.insert("n".into(), json!(self.n));
        out.insert("w".into(), json!(self.w));
        out.insert("lambda".into(), json!(self.lambda));
        out.insert("d_dim".into(), json!(self.d_dim));
        out.insert("e_dim".into(), json!(self.e_dim));
        out.insert("kernel_total".into(), json!(self.kernel_total));
        out.insert("gamma_count".into(), json!(self.gamma_count));
        out.insert("is_triangular".into(), json!(self.is_triangular));
        out.insert("elapsed".into(), json!(self.elapsed));
        Value::Object(out)
    }

    pub fn from_json(value: &Value) -> Option<SweepRecord> {
        Some(SweepRecord {
            n: value.get("n")?.as_u64()? as u8,
            w: value.get("w")?.as_str()?.to_string(),
            lambda: value.get("lambda")?.as_str()?.to_string(),
            d_dim: value.get("d_dim")?.as_u64()?,
            e_dim: value.get("e_dim")?.as_u64()?,
            kernel_total: value.get("kernel_total")?.as_u64()?,
            gamma_count: value.get("gamma_count")?.as_u64()?,
            is_triangular: value.get("is_triangular")?.as_bool()?,
            elapsed: value.get("elapsed")?.as_u64()?,
        })
    }
}

/// Which permutations a sweep visits.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PermutationFilter {
    All,
    Triangular,
}

#[derive(Clone, Debug)]
pub struct SweepConfig {
    pub n: u8,
    pub max_coord: u32,
    pub filter: PermutationFilter,
    pub jobs: usize,
    pub checkpoint: Option<PathBuf>,
}

/// All nonzero weights with coordinates bounded by `max_coord`, in
/// lexicographic coordinate order.
pub fn weight_range(n: u8, max_coord: u32) -> Vec<DominantWeight> {
    let len = (n - 1) as usize;
    let mut out = Vec::new();
    let mut coords = vec![0u32; len];
    loop {
        let lam = DominantWeight::new(coords.clone()).expect("valid coordinates");
        if !lam.is_zero() {
            out.push(lam);
        }
        // odometer increment, most significant coordinate first
        let mut pos = len;
        loop {
            if pos == 0 {
                return out;
            }
            pos -= 1;
            if coords[pos] < max_coord {
                coords[pos] += 1;
                coords[pos + 1..].fill(0);
                break;
            }
        }
    }
}

fn run_task(w: &Permutation, lam: &DominantWeight) -> Result<SweepRecord, String> {
    let started = Instant::now();
    let d_dim = demazure_dim(w, lam);
    let e_dim = cartan_profile(w, lam).total();
    if e_dim > d_dim {
        return Err(format!(
            "Cartan dimension {e_dim} exceeds Demazure dimension {d_dim}"
        ));
    }
    let (_, gamma_count) = minkowski_count(w, lam);
    Ok(SweepRecord {
        n: w.n(),
        w: w.to_string(),
        lambda: lam.to_string(),
        d_dim,
        e_dim,
        kernel_total: d_dim - e_dim,
        gamma_count,
        is_triangular: w.is_triangular(),
        elapsed: started.elapsed().as_millis() as u64,
    })
}

/// The outcome of a sweep: completed records in canonical order, plus any
/// per-task failures (the sweep never aborts on one bad record).
pub struct SweepOutcome {
    pub records: Vec<SweepRecord>,
    pub failures: Vec<(String, String, String)>,
}

fn checkpoint_line(w: &str, lambda: &str, result: &Result<SweepRecord, String>) -> String {
    let value = match result {
        Ok(record) => json!({"w": w, "lambda": lambda, "record": record.to_json()}),
        Err(msg) => json!({"w": w, "lambda": lambda, "error": msg}),
    };
    let mut line = serde_json::to_string(&value).expect("JSON rendering cannot fail");
    line.push('\n');
    line
}

fn load_checkpoint(path: &Path) -> Result<BTreeMap<(String, String), SweepRecord>, CommandError> {
    let mut done = BTreeMap::new();
    let file = match std::fs::File::open(path) {
        Ok(f) => f,
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(done),
        Err(e) => return Err(CommandError::Io(format!("{}: {e}", path.display()))),
    };
    for line in BufReader::new(file).lines() {
        let line = line.map_err(|e| CommandError::Io(e.to_string()))?;
        if line.trim().is_empty() {
            continue;
        }
        let Ok(value) = serde_json::from_str::<Value>(&line) else {
            continue; // tolerate a torn trailing line from an interrupted run
        };
        let (Some(w), Some(lambda)) = (
            value.get("w").and_then(|v| v.as_str()),
            value.get("lambda").and_then(|v| v.as_str()),
        ) else {
            continue;
        };
        if let Some(record) = value.get("record").and_then(SweepRecord::from_json) {
            done.insert((w.to_string(), lambda.to_string()), record);
        }
        // error lines are not treated as done: those tasks are retried
    }
    Ok(done)
}

pub fn run_sweep(config: &SweepConfig) -> Result<SweepOutcome, CommandError> {
    let mut permutations = Permutation::all(config.n);
    if config.filter == PermutationFilter::Triangular {
        permutations.retain(|w| w.is_triangular());
    }
    let weights = weight_range(config.n, config.max_coord);

    let done = match &config.checkpoint {
        Some(path) => load_checkpoint(path)?,
        None => BTreeMap::new(),
    };

    let mut tasks: Vec<(Permutation, DominantWeight)> = Vec::new();
    for w in &permutations {
        for lam in &weights {
            if !done.contains_key(&(w.to_string(), lam.to_string())) {
                tasks.push((w.clone(), lam.clone()));
            }
        }
    }

    let sink: Option<Mutex<std::fs::File>> = match &config.checkpoint {
        Some(path) => Some(Mutex::new(
            OpenOptions::new()
                .create(true)
                .append(true)
                .open(path)
                .map_err(|e| CommandError::Io(format!("{}: {e}", path.display())))?,
        )),
        None => None,
    };

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.jobs.max(1))
        .build()
        .map_err(|e| CommandError::Io(e.to_string()))?;
    let results: Vec<((String, String), Result<SweepRecord, String>)> = pool.install(|| {
        tasks
            .par_iter()
            .map(|(w, lam)| {
                let result = run_task(w, lam);
                if let Some(sink) = &sink {
                    let line = checkpoint_line(&w.to_string(), &lam.to_string(), &result);
                    let mut file = sink.lock().expect("checkpoint mutex");
                    // checkpointing is best effort; the record set is
                    // reconstructed from scratch when a write is lost
                    let _ = file.write_all(line.as_bytes());
                    let _ = file.flush();
                }
                ((w.to_string(), lam.to_string()), result)
            })
            .collect()
    });

    let mut by_key: BTreeMap<(String, String), SweepRecord> = done;
    let mut failures = Vec::new();
    for ((w, lam), result) in results {
        match result {
            Ok(record) => {
                by_key.insert((w, lam), record);
            }
            Err(msg) => failures.push((w, lam, msg)),
        }
    }

    // canonical order: permutations lexicographically, then weights
    let mut records = Vec::new();
    for w in &permutations {
        for lam in &weights {
            if let Some(record) = by_key.get(&(w.to_string(), lam.to_string())) {
                records.push(record.clone());
            }
        }
    }
    Ok(SweepOutcome { records, failures })
}

pub fn records_json(records: &[SweepRecord]) -> Value {
    Value::Array(records.iter().map(|r| r.to_json()).collect())
}

/// CSV with exactly the record fields, in declared order.
pub fn records_csv(records: &[SweepRecord]) -> Result<String, CommandError> {
    let mut writer = csv::Writer::from_writer(Vec::new());
    writer
        .write_record([
            "n",
            "w",
            "lambda",
            "d_dim",
            "e_dim",
            "kernel_total",
            "gamma_count",
            "is_triangular",
            "elapsed",
        ])
        .map_err(|e| CommandError::Io(e.to_string()))?;
    for r in records {
        writer
            .write_record([
                r.n.to_string(),
                r.w.clone(),
                r.lambda.clone(),
                r.d_dim.to_string(),
                r.e_dim.to_string(),
                r.kernel_total.to_string(),
                r.gamma_count.to_string(),
                r.is_triangular.to_string(),
                r.elapsed.to_string(),
            ])
            .map_err(|e| CommandError::Io(e.to_string()))?;
    }
    let bytes = writer
        .into_inner()
        .map_err(|e| CommandError::Io(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| CommandError::Io(e.to_string()))
}

pub fn records_text(records: &[SweepRecord]) -> String {
    let mut out = String::new();
    out.push_str(&format!(
        "{:<4} {:<16} {:<12} {:>8} {:>8} {:>7} {:>9} {:>11} {:>9}\n",
        "n", "w", "lambda", "d_dim", "e_dim", "kernel", "gamma", "triangular", "elapsed"
    ));
    for r in records {
        out.push_str(&format!(
            "{:<4} {:<16} {:<12} {:>8} {:>8} {:>7} {:>9} {:>11} {:>9}\n",
            r.n,
            r.w,
            r.lambda,
            r.d_dim,
            r.e_dim,
            r.kernel_total,
            r.gamma_count,
            r.is_triangular,
            r.elapsed
        ));
    }
    out
}
