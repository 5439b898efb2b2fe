//! JSON encodings of core values and the aligned-table renderer.
//!
//! JSON objects use `serde_json`'s default sorted map, so key order is fixed.
//! The table view is a flattening of the same JSON value, one leaf per row,
//! which keeps the two output modes in lockstep by construction.

use std::fmt::Write as _;

use clap::ValueEnum;
use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use serde_json::{json, Map, Value};
use v5kit_core::bwb::CohomologyTable;
use v5kit_core::chow::{BundleClassV5, HilbertPolynomialV5};
use v5kit_core::koszul::{KoszulPage, RestrictionResult, RestrictionStatus, UlrichVerdict};
use v5kit_core::lie::{ChainOutcome, ReflectionChain, Weight};
use v5kit_core::quiver::field::Field;
use v5kit_core::quiver::{QuiverRep, SampledStability, StabilityStatus, StabilityVerdict, Subrepresentation};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Table,
}

pub fn render(value: &Value, format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = value.to_string();
            s.push('\n');
            s
        }
        Format::Table => table(value),
    }
}

/// Numbers stay numbers while they fit in 64 bits; larger ones become strings.
pub fn biguint(n: &BigUint) -> Value {
    u64::try_from(n).map_or_else(|_| Value::String(n.to_string()), Value::from)
}

pub fn bigint(n: &BigInt) -> Value {
    i64::try_from(n).map_or_else(|_| Value::String(n.to_string()), Value::from)
}

/// Integral rationals print as numbers, others as `"p/q"`.
pub fn rational(x: &BigRational) -> Value {
    if x.is_integer() {
        bigint(x.numer())
    } else {
        Value::String(x.to_string())
    }
}

fn weight(w: &Weight) -> Value {
    Value::String(w.to_string())
}

fn degree_map<'a>(items: impl Iterator<Item = (usize, &'a BigUint)>) -> Value {
    let mut map = Map::new();
    for (deg, dim) in items {
        map.insert(deg.to_string(), biguint(dim));
    }
    Value::Object(map)
}

/// `{"h": {degree: dim}, "highest_weight": ...}` for an ambient table.
pub fn cohomology(table: &CohomologyTable) -> Value {
    let hw = table.entries().values().find_map(|e| e.highest_weight.as_ref()).map_or(Value::Null, weight);
    json!({
        "h": degree_map(table.entries().iter().map(|(d, e)| (*d, &e.dim))),
        "highest_weight": hw,
    })
}

pub fn chain(chain: &ReflectionChain) -> Value {
    let steps: Vec<Value> =
        chain.steps.iter().map(|s| json!({"reflection": s.reflection, "weight": s.result.coeffs()})).collect();
    let outcome = match chain.outcome {
        ChainOutcome::Singular => "singular",
        ChainOutcome::StrictlyDominant => "strictly_dominant",
    };
    json!({
        "start": chain.start.coeffs(),
        "steps": steps,
        "outcome": outcome,
        "end": chain.end().coeffs(),
    })
}

pub fn page(page: &KoszulPage) -> Value {
    let terms: Vec<Value> =
        page.terms().iter().map(|(&(p, q), dim)| json!({"p": p, "q": q, "dim": biguint(dim)})).collect();
    json!({"codim": page.codim(), "terms": terms})
}

pub fn status(s: RestrictionStatus) -> &'static str {
    match s {
        RestrictionStatus::Exact => "Exact",
        RestrictionStatus::GenericAssumed => "GenericAssumed",
        RestrictionStatus::NeedsMaps => "NeedsMaps",
    }
}

pub fn restriction(res: &RestrictionResult) -> Value {
    let table = res.table.as_ref().map_or(Value::Null, |t| degree_map(t.entries().iter().map(|(d, e)| (*d, &e.dim))));
    json!({
        "status": status(res.status),
        "h": table,
        "page": page(&res.page),
    })
}

pub fn ulrich(v: &UlrichVerdict) -> Value {
    match v {
        UlrichVerdict::Ulrich => json!({"verdict": "Ulrich"}),
        UlrichVerdict::NotUlrich { twist, degree } => {
            json!({"verdict": "NotUlrich", "witness": {"j": twist, "i": degree}})
        }
        UlrichVerdict::Indeterminate { twist } => json!({"verdict": "Indeterminate", "j": twist}),
    }
}

pub fn class(c: &BundleClassV5) -> Value {
    json!({"rank": c.rank, "c1": c.c1, "c2": c.c2, "c3": c.c3})
}

/// Coefficients of `t^0 .. t^3`.
pub fn hilbert(p: &HilbertPolynomialV5) -> Value {
    Value::Array(p.coeffs().iter().map(rational).collect())
}

pub fn stability_status(s: StabilityStatus) -> &'static str {
    match s {
        StabilityStatus::Stable => "Stable",
        StabilityStatus::StrictlySemistable => "StrictlySemistable",
        StabilityStatus::Unstable => "Unstable",
    }
}

fn subrep<E>(w: &Subrepresentation<E>, entry: impl Fn(&E) -> Value) -> Value {
    let basis = |b: &[Vec<E>]| -> Value {
        Value::Array(b.iter().map(|v| Value::Array(v.iter().map(&entry).collect())).collect())
    };
    json!({
        "d": [w.source_basis.len(), w.target_basis.len()],
        "W1": basis(&w.source_basis),
        "W2": basis(&w.target_basis),
        "theta": w.theta,
    })
}

pub fn verdict(v: &StabilityVerdict) -> Value {
    json!({
        "status": stability_status(v.status),
        "exhaustive": true,
        "witness": v.witness.as_ref().map_or(Value::Null, |w| subrep(w, |x| Value::from(*x))),
    })
}

pub fn sampled(v: &SampledStability) -> Value {
    json!({
        "status": stability_status(v.status),
        "exhaustive": v.exhaustive,
        "subspaces_tried": v.subspaces_tried,
        "witness": v.witness.as_ref().map_or(Value::Null, |w| subrep(w, rational)),
    })
}

/// `{"q": ..., "d": [d1, d2], "A": ..., "B": ..., "C": ...}`.
pub fn rep<F: Field>(rep: &QuiverRep<F>, q: Value, entry: impl Fn(&F::Elem) -> Value) -> Value {
    let mut map = Map::new();
    map.insert("q".into(), q);
    let d = rep.dims();
    map.insert("d".into(), json!([d.source, d.target]));
    for (name, m) in ["A", "B", "C"].iter().zip(rep.arrows()) {
        let rows: Vec<Value> = m.to_rows().iter().map(|r| Value::Array(r.iter().map(&entry).collect())).collect();
        map.insert((*name).into(), Value::Array(rows));
    }
    Value::Object(map)
}

fn leaf(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn flatten(prefix: &str, v: &Value, out: &mut Vec<(String, String)>) {
    let key = |k: &str| {
        if prefix.is_empty() {
            k.to_string()
        } else {
            format!("{prefix}.{k}")
        }
    };
    match v {
        Value::Object(map) if !map.is_empty() => {
            for (k, child) in map {
                flatten(&key(k), child, out);
            }
        }
        // arrays of scalars stay on one row
        Value::Array(items) if items.iter().any(|x| x.is_object() || x.is_array()) => {
            for (i, child) in items.iter().enumerate() {
                flatten(&key(&i.to_string()), child, out);
            }
        }
        other => out.push((prefix.to_string(), leaf(other))),
    }
}

/// Two aligned columns, `path  value`; a bare scalar prints alone.
pub fn table(value: &Value) -> String {
    let mut rows = Vec::new();
    flatten("", value, &mut rows);
    let width = rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
    let mut out = String::new();
    for (k, v) in rows {
        if k.is_empty() {
            let _ = writeln!(out, "{v}");
        } else {
            let _ = writeln!(out, "{k:<width$}  {v}");
        }
    }
    out
}

/// Leaf rows of a value, as used by the table view.
pub fn leaves(value: &Value) -> Vec<(String, String)> {
    let mut rows = Vec::new();
    flatten("", value, &mut rows);
    rows
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_flattens_nested_objects() {
        let v = json!({"h": {"0": 5}, "highest_weight": "w1"});
        assert_eq!(table(&v), "h.0             5\nhighest_weight  w1\n");
        assert_eq!(table(&json!(5)), "5\n");
    }

    #[test]
    fn empty_containers_are_leaves() {
        let v = json!({"h": {}, "steps": []});
        assert_eq!(leaves(&v), vec![("h".into(), "{}".into()), ("steps".into(), "[]".into())]);
    }

    #[test]
    fn large_numbers_become_strings() {
        let big = BigUint::from(u64::MAX) + 1u32;
        assert_eq!(biguint(&big), Value::String("18446744073709551616".into()));
        assert_eq!(rational(&BigRational::new(5.into(), 6.into())), Value::String("5/6".into()));
    }
}
