//! DOT and JSON output. Both are deterministic: JSON objects keep keys
//! sorted and DOT nodes are numbered in walk order.

use std::fmt::Write;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde_json::{json, Value as Json};

use crate::exactnum::CfExpansion;
use crate::resolution::{ChartState, Classification, ProperTransform, ResolutionTrace};
use crate::valring::RingPresentation;
use crate::valtree::{PathStatus, PositivePath, TreeVertex};

fn big(n: &BigInt) -> Json {
    match n.to_i64() {
        Some(v) => json!(v),
        None => json!(n.to_string()),
    }
}

fn vertex_json(v: &TreeVertex) -> Json {
    json!({ "f": v.f.to_string(), "g": v.g.to_string() })
}

pub fn path_json(path: &PositivePath) -> Json {
    let mut obj = json!({
        "vertices": path.vertices.iter().map(vertex_json).collect::<Vec<_>>(),
        "status": match path.status {
            PathStatus::Complete => "complete",
            PathStatus::Truncated { .. } => "truncated",
        },
    });
    if let PathStatus::Truncated { at } = path.status {
        obj["truncated_at"] = json!(at);
    }
    obj
}

pub fn chart_json(c: &ChartState) -> Json {
    let proper = match c.proper {
        ProperTransform::ThroughOrigin { s, t } => json!({ "kind": "through_origin", "s": s, "t": t }),
        ProperTransform::MissesOrigin { k, l } => json!({ "kind": "misses_origin", "k": k, "l": l }),
    };
    json!({
        "f": c.basis.f.to_string(),
        "g": c.basis.g.to_string(),
        "exceptional": [c.exc_a, c.exc_b],
        "proper": proper,
        "sign": c.sign,
        "formula": c.to_string(),
    })
}

fn classified(c: &ChartState, k: Classification) -> Json {
    json!({ "chart": chart_json(c), "classification": k.as_str() })
}

pub fn trace_json(trace: &ResolutionTrace) -> Json {
    let steps: Vec<Json> = trace
        .steps
        .iter()
        .map(|s| {
            json!({
                "chart": chart_json(&s.chart),
                "classification": s.classification.as_str(),
                "children": s.children.iter().map(|(c, k)| classified(c, *k)).collect::<Vec<_>>(),
            })
        })
        .collect();
    json!({
        "a": trace.a,
        "b": trace.b,
        "blow_ups": steps,
        "count": trace.blow_up_count(),
    })
}

pub fn cf_json(cf: &CfExpansion) -> Json {
    json!({ "digits": cf.digits().iter().map(big).collect::<Vec<_>>() })
}

pub fn ringgens_json(r: &RingPresentation) -> Json {
    json!({
        "u": r.u.to_string(),
        "v": r.v.to_string(),
        "p": r.p,
        "q": r.q,
    })
}

pub fn emit_json(value: &Json) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// The path as a bold chain; a truncated path ends in a dashed marker.
pub fn path_dot(path: &PositivePath) -> String {
    let mut out = String::from("digraph positive_path {\n  node [shape=box];\n");
    for (i, v) in path.vertices.iter().enumerate() {
        writeln!(out, "  n{i} [label={}, style=bold];", quote(&v.to_string())).unwrap();
        if i > 0 {
            writeln!(out, "  n{} -> n{i} [style=bold];", i - 1).unwrap();
        }
    }
    if let PathStatus::Truncated { at } = path.status {
        writeln!(
            out,
            "  truncated [label={}, shape=plaintext];",
            quote(&format!("truncated after {at}"))
        )
        .unwrap();
        if let Some(last) = path.vertices.len().checked_sub(1) {
            writeln!(out, "  n{last} -> truncated [style=dashed];").unwrap();
        }
    }
    out.push_str("}\n");
    out
}

/// Blown-up charts are bold; resolved children hang off them.
pub fn trace_dot(trace: &ResolutionTrace) -> String {
    let mut out = String::from("digraph resolution {\n  node [shape=box];\n");
    let label = |c: &ChartState| quote(&TreeVertex::from(c.basis).to_string());
    for (i, step) in trace.steps.iter().enumerate() {
        writeln!(out, "  s{i} [label={}, style=bold];", label(&step.chart)).unwrap();
    }
    for (i, step) in trace.steps.iter().enumerate() {
        for (j, (c, k)) in step.children.iter().enumerate() {
            if !k.is_resolved() && i + 1 < trace.steps.len() {
                writeln!(out, "  s{i} -> s{} [style=bold];", i + 1).unwrap();
            } else {
                writeln!(out, "  c{i}_{j} [label={}];", label(c)).unwrap();
                writeln!(out, "  s{i} -> c{i}_{j};").unwrap();
            }
        }
    }
    out.push_str("}\n");
    out
}
