//! JSON encodings of reports, suite results and example tables.

use oportho::hilbert::BJWitness;
use oportho::ortho::{Confidence, OrthReport};
use oportho::verify::{ExampleRow, Failure, Instance, SuiteConfig, SuiteResult};
use oportho::C64;
use serde_json::{json, Map, Value};

use crate::matrix_file::{FileError, MatrixFile};

pub fn complex(z: C64) -> Value {
    json!([z.re, z.im])
}

pub fn vector(v: &[C64]) -> Value {
    Value::Array(v.iter().copied().map(complex).collect())
}

pub fn confidence(c: Confidence) -> Value {
    match c {
        Confidence::Exact => json!({ "kind": "exact" }),
        Confidence::Grid { points } => json!({ "kind": "grid", "points": points }),
        Confidence::Depth { depth } => json!({ "kind": "depth", "depth": depth }),
    }
}

pub fn orth_report(r: &OrthReport) -> Value {
    let quantities: Map<String, Value> = r.evidence.quantities.iter().map(|(k, v)| ((*k).to_string(), json!(v))).collect();
    json!({
        "relation": r.relation.name(),
        "decision": r.decision.name(),
        "margin": r.margin,
        "band": r.band,
        "evidence": {
            "lambda": r.evidence.lambda.map(complex),
            "value": r.evidence.value,
            "witness": r.evidence.witness.as_deref().map(vector),
            "roots": r.evidence.roots,
            "quantities": quantities,
        },
        "confidence": confidence(r.confidence),
        "trivial": r.trivial,
        "notes": r.notes,
    })
}

pub fn witness(w: &BJWitness) -> Value {
    json!({
        "vector": vector(&w.vector),
        "attainment_residual": w.attainment_residual,
        "pairing_residual": w.pairing_residual,
    })
}

pub fn instance(inst: &Instance) -> Value {
    json!({
        "construction": inst.construction,
        "seed": inst.seed,
        "inputs": inst.elements.iter().map(|e| serde_json::to_value(MatrixFile::from_element(e)).expect("serializable")).collect::<Vec<_>>(),
    })
}

pub fn failure(f: &Failure) -> Value {
    json!({ "offset": f.offset, "instance": instance(&f.instance), "detail": f.detail })
}

pub fn suite_result(cfg: &SuiteConfig, r: &SuiteResult) -> Value {
    json!({
        "suite": r.suite.name(),
        "config": {
            "trials": cfg.trials,
            "dims": cfg.dims,
            "field": cfg.field.name(),
            "seed": cfg.seed,
            "eq_tol": cfg.tolerances.eq_tol,
        },
        "trials": r.trials,
        "passed": r.passed,
        "failed": r.failed,
        "inconclusive": r.inconclusive,
        "failures": r.failures.iter().map(failure).collect::<Vec<_>>(),
    })
}

pub fn example_rows(rows: &[ExampleRow]) -> Value {
    Value::Array(
        rows.iter()
            .map(|r| {
                json!({
                    "id": r.id,
                    "quantity": r.quantity,
                    "expected": r.expected,
                    "computed": r.computed,
                    "delta": r.delta,
                    "ok": r.ok(),
                })
            })
            .collect(),
    )
}

/// Reads an instance back from its `instance` encoding.
pub fn parse_instance(v: &Value) -> Result<(String, u64, Vec<oportho::NormedElement>), FileError> {
    let construction = v["construction"].as_str().ok_or_else(|| FileError::Parse("missing construction".into()))?;
    let seed = v["seed"].as_u64().ok_or_else(|| FileError::Parse("missing seed".into()))?;
    let inputs = v["inputs"].as_array().ok_or_else(|| FileError::Parse("missing inputs".into()))?;
    let elements = inputs
        .iter()
        .map(|x| {
            let file: MatrixFile =
                serde_json::from_value(x.clone()).map_err(|e| FileError::Parse(e.to_string()))?;
            file.to_element(None)
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok((construction.to_string(), seed, elements))
}

pub fn render(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("json values render")
}
