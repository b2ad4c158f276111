//! Structured-text serialization of analysis reports.
//!
//! JSON output uses sorted object keys and prints exponent vectors as
//! arrays of exact `"p/q"` strings, so identical input and configuration
//! produce byte-identical documents.

use crate::charseq::{ExponentVector, VectorStrictness};
use crate::criterion::{FailureKind, PolygonRecord, Report, Verdict};
use crate::gnp::Straightness;
use serde_json::{json, Value};
use std::fmt::Write as _;

pub fn vector_json(v: &ExponentVector) -> Value {
    Value::Array(v.components().iter().map(|c| Value::String(c.to_string())).collect())
}

pub fn vectors_json(vs: &[ExponentVector]) -> Value {
    Value::Array(vs.iter().map(vector_json).collect())
}

fn strings<T: ToString>(items: impl IntoIterator<Item = T>) -> Value {
    Value::Array(items.into_iter().map(|x| Value::String(x.to_string())).collect())
}

pub fn verdict_code(v: Verdict) -> &'static str {
    match v {
        Verdict::IrreducibleQuasiOrdinary => "irreducible_quasi_ordinary",
        Verdict::NotIrreducibleQuasiOrdinary => "not_irreducible_quasi_ordinary",
    }
}

pub fn strictness_code(s: VectorStrictness) -> &'static str {
    match s {
        VectorStrictness::WeakStrict => "weak",
        VectorStrictness::StrongStrict => "strong",
    }
}

fn straightness_code(s: Straightness) -> &'static str {
    match s {
        Straightness::NotStraight => "not_straight",
        Straightness::Straight => "straight",
        Straightness::StrictlyStraight => "strictly_straight",
    }
}

fn failure_json(report: &Report) -> Value {
    let Some(failure) = &report.failure else {
        return Value::Null;
    };
    let witness = match &failure.kind {
        FailureKind::TrivialFactorY | FailureKind::BaseDividesF => json!({}),
        FailureKind::LatticeViolation { big_d } => json!({ "D": big_d.to_string() }),
        FailureKind::LatticeStagnation { d } => json!({ "d": d.to_string() }),
        FailureKind::OrderingViolation { left, right } => json!({
            "left": vector_json(left),
            "right": vector_json(right),
        }),
        FailureKind::StraightnessViolation { witness } => match witness {
            Some((k, a_order, required)) => json!({
                "k": k,
                "a_order": vector_json(a_order),
                "required": vector_json(required),
            }),
            None => json!({ "endpoint": "fO(a_d) != d*fO(g)" }),
        },
        FailureKind::AmbiguousInitialMonomial { theta_a, theta_b } => json!({
            "theta_a": strings(theta_a.iter()),
            "theta_b": strings(theta_b.iter()),
        }),
    };
    json!({
        "kind": failure.kind.code(),
        "step": failure.step,
        "witness": witness,
    })
}

fn polygon_json(record: &PolygonRecord) -> Value {
    let points: Vec<Value> = record
        .polygon
        .points
        .iter()
        .map(|p| {
            json!({
                "k": p.index,
                "a_order": vector_json(&p.a_order),
                "g_order_scaled": vector_json(&p.g_order_scaled),
            })
        })
        .collect();
    json!({
        "step": record.step,
        "target": record.target,
        "base": record.base,
        "d": record.polygon.d,
        "g_order": vector_json(&record.polygon.g_order),
        "points": points,
        "straightness": record.straightness.map(straightness_code),
    })
}

/// The analysis report as a JSON document.
pub fn report_json(report: &Report, input: &str) -> Value {
    let char_block = report.char_data.as_ref().map(|cd| {
        json!({
            "e_sequence": strings(cd.e_seq.iter()),
            "m_sequence": vectors_json(&cd.m_seq),
        })
    });
    json!({
        "command": "analyze",
        "config": { "strict_order": strictness_code(report.config.strictness) },
        "input": input,
        "n": report.n,
        "vars": report.e,
        "verdict": verdict_code(report.verdict),
        "reason": failure_json(report),
        "normalization_shift": report.normalization_shift.to_string(),
        "D_sequence": strings(report.big_d_seq.iter()),
        "d_sequence": strings(report.d_seq.iter()),
        "e_sequence": char_block.as_ref().map(|c| c["e_sequence"].clone()),
        "r_sequence": vectors_json(&report.r_seq),
        "m_sequence": char_block.as_ref().map(|c| c["m_sequence"].clone()),
        "semigroup_generators": vectors_json(&report.semigroup_generators),
        "approximate_roots": strings(report.approximate_roots.iter()),
        "polygons": Value::Array(report.polygons.iter().map(polygon_json).collect()),
        "notes": strings(report.notes.iter()),
    })
}

/// The analysis report as human-readable text.
pub fn report_text(report: &Report, input: &str) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "input: {input}");
    let _ = writeln!(out, "variables: {}   degree: {}", report.e, report.n);
    let _ = writeln!(out, "verdict: {}", verdict_code(report.verdict));
    if let Some(failure) = &report.failure {
        let _ = writeln!(out, "reason: {} at step {}", failure.kind.code(), failure.step);
        if let FailureKind::StraightnessViolation { witness: Some((k, a, req)) } = &failure.kind {
            let _ = writeln!(out, "  witness: k={k}, fO(a_k)={a}, required >= {req}");
        }
        if let FailureKind::OrderingViolation { left, right } = &failure.kind {
            let _ = writeln!(out, "  witness: {left} !< {right}");
        }
    }
    if !report.normalization_shift.is_zero() {
        let _ = writeln!(out, "normalization shift: {}", report.normalization_shift);
    }
    let _ = writeln!(
        out,
        "D-sequence: [{}]",
        report.big_d_seq.iter().map(|d| d.to_string()).collect::<Vec<_>>().join(", ")
    );
    let _ = writeln!(
        out,
        "d-sequence: [{}]",
        report.d_seq.iter().map(|d| d.to_string()).collect::<Vec<_>>().join(", ")
    );
    let _ = writeln!(
        out,
        "r-sequence: [{}]",
        report.r_seq.iter().map(|r| r.to_string()).collect::<Vec<_>>().join(", ")
    );
    if let Some(cd) = &report.char_data {
        let _ = writeln!(
            out,
            "e-sequence: [{}]",
            cd.e_seq.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(", ")
        );
        let _ = writeln!(
            out,
            "m-sequence: [{}]",
            cd.m_seq.iter().map(|m| m.to_string()).collect::<Vec<_>>().join(", ")
        );
    }
    if !report.semigroup_generators.is_empty() {
        let _ = writeln!(
            out,
            "semigroup generators: [{}]",
            report
                .semigroup_generators
                .iter()
                .map(|g| g.to_string())
                .collect::<Vec<_>>()
                .join(", ")
        );
    }
    for (i, root) in report.approximate_roots.iter().enumerate() {
        let _ = writeln!(out, "g_{} = {}", i + 1, root);
    }
    for record in &report.polygons {
        let pts = record
            .polygon
            .points
            .iter()
            .map(|p| format!("({}, {})", p.a_order, p.g_order_scaled))
            .collect::<Vec<_>>()
            .join(", ");
        let class = record.straightness.map_or("-", straightness_code);
        let _ = writeln!(
            out,
            "GNP({} | {}): {{{pts}}}  [{class}]",
            record.target, record.base
        );
    }
    for note in &report.notes {
        let _ = writeln!(out, "note: {note}");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::criterion::{analyze, Config};

    #[test]
    fn json_is_deterministic_and_sorted() {
        let f = crate::testutil::example1();
        let report = analyze(&f, Config::default()).unwrap();
        let a = serde_json::to_string_pretty(&report_json(&report, "f")).unwrap();
        let b = serde_json::to_string_pretty(&report_json(&report, "f")).unwrap();
        assert_eq!(a, b);
        // keys of the top-level object come out sorted
        let Value::Object(map) = report_json(&report, "f") else { panic!() };
        let keys: Vec<_> = map.keys().cloned().collect();
        let mut sorted = keys.clone();
        sorted.sort();
        assert_eq!(keys, sorted);
    }

    #[test]
    fn example1_fields() {
        let f = crate::testutil::example1();
        let report = analyze(&f, Config::default()).unwrap();
        let doc = report_json(&report, "f");
        assert_eq!(doc["verdict"], "irreducible_quasi_ordinary");
        assert_eq!(doc["d_sequence"], json!(["8", "2", "1"]));
        assert_eq!(doc["r_sequence"], json!([["2", "2"], ["12", "8"]]));
        assert_eq!(doc["approximate_roots"], json!(["y", "y^4 - x1*x2"]));
    }

    #[test]
    fn example3_failure_fields() {
        let f = crate::testutil::example3();
        let report = analyze(&f, Config::default()).unwrap();
        let doc = report_json(&report, "f");
        assert_eq!(doc["verdict"], "not_irreducible_quasi_ordinary");
        assert_eq!(doc["reason"]["kind"], "straightness_violation");
        assert_eq!(doc["reason"]["witness"]["k"], 3);
    }
}
