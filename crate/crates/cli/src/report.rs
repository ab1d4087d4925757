//! JSON and text renderings of the library's result types.
//!
//! Every JSON emitter here is deterministic: object keys are inserted in a
//! fixed order and all maps iterate sorted containers, so re-running a
//! command with the same inputs yields byte-identical output.

use pbwdeg::cartan::KernelReport;
use pbwdeg::fflv::LatticeSet;
use pbwdeg::plucker::QReport;
use pbwdeg::profile::GradedProfile;
use pbwdeg::weyl::{RootIndex, WeightVector};
use serde_json::{json, Map, Value};

pub fn weight_vector_json(wt: &WeightVector) -> Value {
    Value::Array(wt.coords().iter().map(|&e| json!(e)).collect())
}

/// `{"total": N, "by_grade": {m: dim}, "by_grade_weight": [[m, [e...], dim], ...]}`
pub fn profile_json(profile: &GradedProfile) -> Value {
    let mut by_grade = Map::new();
    for (grade, dim) in profile.by_grade() {
        by_grade.insert(grade.to_string(), json!(dim));
    }
    let cells: Vec<Value> = profile
        .cells()
        .map(|(&(grade, ref wt), &dim)| json!([grade, weight_vector_json(wt), dim]))
        .collect();
    let mut out = Map::new();
    out.insert("total".into(), json!(profile.total()));
    out.insert("by_grade".into(), Value::Object(by_grade));
    out.insert("by_grade_weight".into(), Value::Array(cells));
    Value::Object(out)
}

/// Rebuilds a profile from its JSON rendering; used by the cache.
pub fn profile_from_json(value: &Value) -> Option<GradedProfile> {
    let cells = value.get("by_grade_weight")?.as_array()?;
    let mut parsed = Vec::new();
    for cell in cells {
        let triple = cell.as_array()?;
        let grade = triple.first()?.as_u64()? as u32;
        let coords: Vec<i32> = triple
            .get(1)?
            .as_array()?
            .iter()
            .map(|e| e.as_i64().map(|v| v as i32))
            .collect::<Option<_>>()?;
        let dim = triple.get(2)?.as_u64()?;
        parsed.push(((grade, WeightVector::new(coords)), dim));
    }
    let profile = GradedProfile::from_cells(parsed);
    if profile.total() != value.get("total")?.as_u64()? {
        return None;
    }
    Some(profile)
}

/// `{"d_dim":, "e_dim":, "kernel_total":, "kernel_cells":[[m,[e...],dim],...]}`
pub fn kernel_json(report: &KernelReport) -> Value {
    let cells: Vec<Value> = report
        .kernel_cells
        .iter()
        .map(|(&(grade, ref wt), &dim)| json!([grade, weight_vector_json(wt), dim]))
        .collect();
    let mut out = Map::new();
    out.insert("d_dim".into(), json!(report.d_dim));
    out.insert("e_dim".into(), json!(report.e_dim));
    out.insert("kernel_total".into(), json!(report.kernel_total));
    out.insert("kernel_cells".into(), Value::Array(cells));
    Value::Object(out)
}

pub fn inversions_json(roots: &[RootIndex]) -> Value {
    Value::Array(roots.iter().map(|r| json!([r.i, r.j])).collect())
}

/// Array of exponent-vector renderings: each point becomes a list of
/// `{"root":[i,j],"exp":e}` entries over its positive exponents.
pub fn lattice_set_json(set: &LatticeSet) -> Value {
    let order = set.order().clone();
    Value::Array(
        set.points()
            .map(|point| {
                Value::Array(
                    point
                        .support(&order)
                        .map(|(root, exp)| json!({"root": [root.i, root.j], "exp": exp}))
                        .collect(),
                )
            })
            .collect(),
    )
}

pub fn q_report_json(report: &QReport) -> Value {
    let mut enumerations = Map::new();
    for (name, count) in &report.enumerations {
        enumerations.insert(name.clone(), json!(count));
    }
    let mut factor_divisible = Map::new();
    for (name, divisible) in &report.factor_divisions {
        factor_divisible.insert(name.clone(), json!(divisible));
    }
    let mut pw = Map::new();
    for (name, text) in &report.pw_values {
        pw.insert(name.clone(), json!(text));
    }
    let mut checks = Map::new();
    checks.insert(
        "restricted_evaluation_zero".into(),
        json!({"pass": report.restricted_is_zero, "value": report.restricted_text}),
    );
    checks.insert(
        "full_evaluation_nonzero".into(),
        json!({"pass": report.full_is_nonzero, "value": report.full_text}),
    );
    checks.insert(
        "excluded_symbol_enumerations_empty".into(),
        json!({"pass": report.enumerations_empty, "counts": Value::Object(enumerations)}),
    );
    let divisibility_pass = report.first_product_divisible
        && report.factor_divisions.iter().all(|(_, d)| !d)
        && !report.second_product_divisible;
    checks.insert(
        "divisibility".into(),
        json!({
            "pass": divisibility_pass,
            "first_product_divisible": report.first_product_divisible,
            "factor_divisible": Value::Object(factor_divisible),
            "second_product_divisible": report.second_product_divisible,
        }),
    );
    let mut out = Map::new();
    out.insert("all_pass".into(), json!(report.all_pass()));
    out.insert("checks".into(), Value::Object(checks));
    out.insert("pw_values".into(), Value::Object(pw));
    Value::Object(out)
}

/// Compact one-line rendering used for all stdout JSON.
pub fn to_stdout_string(value: &Value) -> String {
    let mut s = serde_json::to_string(value).expect("JSON rendering cannot fail");
    s.push('\n');
    s
}
