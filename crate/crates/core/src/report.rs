//! JSON, DOT and plain-text renderings of orbit sets and traces.

use std::fmt::Write as _;

use serde_json::{json, Value};

use crate::exact::Subspace;
use crate::flags::Flag;
use crate::orbits::{OrbitPoset, OrbitSet};
use crate::stabilization::{InjectivityCertificate, LevelTrace, LimitVerdict};

pub const SCHEMA: u32 = 1;

fn subspace_json(s: &Subspace) -> Value {
    Value::Array(s.vectors().iter().map(|v| Value::Array(v.iter().map(|x| Value::String(x.to_string())).collect())).collect())
}

/// Members of the flag, each as a list of basis vectors of exact scalars.
pub fn flag_json(f: &Flag) -> Value {
    Value::Array(f.spaces().iter().map(subspace_json).collect())
}

/// `upper_covers[i]` lists the orbits covering orbit `i`.
pub fn poset_json(p: &OrbitPoset) -> Value {
    let mut up = vec![Vec::new(); p.len()];
    for &(lo, hi) in p.covers() {
        up[lo].push(hi);
    }
    json!({ "upper_covers": up, "minimal": p.minimal(), "maximal": p.maximal() })
}

fn records_json(set: &OrbitSet, witnesses: bool) -> Value {
    Value::Array(
        set.records
            .iter()
            .enumerate()
            .map(|(i, r)| {
                let mut v = json!({
                    "index": i,
                    "invariant": r.invariant,
                    "is_open": r.is_open,
                    "is_closed": r.is_closed,
                    "real_dim": r.real_dim,
                });
                if witnesses {
                    v["witness"] = flag_json(&r.witness);
                }
                v
            })
            .collect(),
    )
}

fn set_summary(set: &OrbitSet) -> Value {
    json!({
        "form": set.form.spec(),
        "flag_type": set.flag_type,
        "complex_dim": set.flag_type.complex_dim(),
        "count": set.len(),
        "open_count": set.open_count(),
        "closed_index": set.closed_index(),
    })
}

pub fn orbit_report(set: &OrbitSet, poset: &OrbitPoset) -> Value {
    let mut v = set_summary(set);
    v["schema"] = json!(SCHEMA);
    v["report"] = json!("orbits");
    v["records"] = records_json(set, true);
    v["poset"] = poset_json(poset);
    v
}

pub fn trace_report(trace: &LevelTrace, cert: &InjectivityCertificate, verdict: &LimitVerdict) -> Value {
    let levels: Vec<Value> = trace
        .levels
        .iter()
        .map(|l| {
            let mut v = set_summary(&l.orbits);
            v["n"] = json!(l.n);
            v["records"] = records_json(&l.orbits, false);
            v["poset"] = poset_json(&l.poset);
            v
        })
        .collect();
    json!({
        "schema": SCHEMA,
        "report": "trace",
        "family": trace.exhaustion.family.to_string(),
        "descriptor": trace.descriptor.to_string(),
        "counts": trace.counts(),
        "levels": levels,
        "transitions": trace.transitions,
        "injectivity": cert,
        "verdict": verdict,
    })
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// Covering relation as a DOT digraph, edges pointing down to the closed orbit.
pub fn poset_dot(name: &str, set: &OrbitSet, p: &OrbitPoset) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "digraph {name} {{");
    let _ = writeln!(out, "  label=\"{}\";", escape(&set.context()));
    let _ = writeln!(out, "  node [shape=ellipse];");
    for (i, r) in set.records.iter().enumerate() {
        let mut attrs = vec![format!("label=\"{}\"", escape(&r.invariant.label()))];
        if r.is_closed {
            attrs.push("shape=doublecircle".into());
        }
        if r.is_open {
            attrs.push("style=bold".into());
        }
        let _ = writeln!(out, "  o{i} [{}];", attrs.join(", "));
    }
    for &(lo, hi) in p.covers() {
        let _ = writeln!(out, "  o{hi} -> o{lo};");
    }
    out.push_str("}\n");
    out
}

pub fn trace_dot(trace: &LevelTrace) -> String {
    trace.levels.iter().map(|l| poset_dot(&format!("level_{}", l.n), &l.orbits, &l.poset)).collect()
}

pub fn orbit_table(set: &OrbitSet) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{}: {} orbits, {} open", set.context(), set.len(), set.open_count());
    let _ = writeln!(out, "{:>4}  {:<5} {:<6} {:>8}  invariant", "#", "open", "closed", "real_dim");
    for (i, r) in set.records.iter().enumerate() {
        let dim = r.real_dim.map_or("-".to_string(), |d| d.to_string());
        let _ = writeln!(out, "{i:>4}  {:<5} {:<6} {dim:>8}  {}", r.is_open, r.is_closed, r.invariant.label());
    }
    out
}

pub fn trace_table(trace: &LevelTrace, cert: &InjectivityCertificate, verdict: &LimitVerdict) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{} with descriptor {}", trace.exhaustion.family, trace.descriptor);
    let _ = writeln!(out, "{:>4} {:>8} {:>6}", "n", "orbits", "open");
    for l in &trace.levels {
        let _ = writeln!(out, "{:>4} {:>8} {:>6}", l.n, l.orbits.len(), l.orbits.open_count());
    }
    let _ = writeln!(out, "injective: {} ({} transitions)", cert.injective, cert.transitions_checked);
    let show = |b: Option<bool>| b.map_or("undetermined".to_string(), |x| x.to_string());
    let _ = writeln!(
        out,
        "finiteness: {:?}; stabilization level: {}; open: {}; closed: {}",
        verdict.finiteness,
        verdict.stabilization_level.map_or("none".to_string(), |n| n.to_string()),
        show(verdict.has_open),
        show(verdict.has_closed)
    );
    out
}
