//! Rendering for command output: exact values as plain text, plus a
//! JSON form whose parse/print round trip is byte-identical.

use num_bigint::BigInt;
use num_rational::BigRational;
use serde_json::{json, Map, Value};

use crate::anorm::LowerBounds;
use crate::complex::{Cochain, TwoComplex};
use crate::covers::CoverComparison;
use crate::norm::{Certificate, NormResult, Sandwich};
use crate::presentation::format_rational;
use crate::twisted::TwistedH1;

/// Rationals travel as strings so nothing is ever rounded.
pub fn rat(q: &BigRational) -> Value {
    Value::String(format_rational(q))
}

pub fn int(n: &BigInt) -> Value {
    Value::String(n.to_string())
}

pub fn certificate_name(c: &Certificate) -> &'static str {
    match c {
        Certificate::LpIntegral => "lp-integral",
        Certificate::BruteForce => "brute-force",
    }
}

pub fn cochain_json(x: &TwoComplex, k: &Cochain) -> Value {
    let mut m = Map::new();
    for (e, v) in x.edges.iter().zip(k) {
        m.insert(e.label.clone(), rat(v));
    }
    Value::Object(m)
}

pub fn norm_json(x: &TwoComplex, r: &NormResult) -> Value {
    json!({
        "value": rat(&r.value),
        "certificate": certificate_name(&r.certificate),
        "lp_fallback": r.lp_fallback,
        "optimal_cochain": cochain_json(x, &r.optimal_cochain),
    })
}

pub fn bounds_json(b: &LowerBounds) -> Value {
    json!({
        "a_bound": b.a_bound.as_ref().map(|v| rat(v)),
        "a_degenerate": b.a_degenerate,
        "deg_bound": b.deg_bound.as_ref().map(|v| rat(v)),
        "betti": b.betti,
        "divisibility": b.divisibility.as_ref().map(|v| int(v)),
    })
}

pub fn sandwich_json(s: &Sandwich) -> Value {
    json!({
        "interval": [rat(&s.lower), rat(&s.upper)],
        "value": if s.certified { rat(&s.lower) } else { Value::Null },
        "certified": s.certified,
        "certificate": if s.certified { "sandwich-closed" } else { "interval" },
        "lower_bounds": s.bounds.iter().map(bounds_json).collect::<Vec<_>>(),
        "uppers": s.uppers.iter().map(rat).collect::<Vec<_>>(),
    })
}

pub fn cover_json(c: &CoverComparison) -> Value {
    json!({
        "degree": c.degree,
        "base_value": rat(&c.base_value),
        "cover_value": rat(&c.cover_value),
        "bound": rat(&(&c.base_value * BigRational::from(BigInt::from(c.degree as i64)))),
        "holds": c.holds,
    })
}

pub fn homology_json(h: &TwistedH1) -> Value {
    json!({
        "free_rank": h.free_rank,
        "torsion": h.torsion.iter().map(|f| f.to_string()).collect::<Vec<_>>(),
        "min_generators": h.min_generators,
        "summands": homology_text(h),
    })
}

/// `H1 = Q[t±]^r ⊕ Q[t±]/(f1) ⊕ …`
pub fn homology_text(h: &TwistedH1) -> String {
    let mut parts = Vec::new();
    match h.free_rank {
        0 => {}
        1 => parts.push("Q[t±]".to_string()),
        r => parts.push(format!("Q[t±]^{r}")),
    }
    for f in &h.torsion {
        parts.push(format!("Q[t±]/({f})"));
    }
    if parts.is_empty() {
        "H1 = 0".into()
    } else {
        format!("H1 = {}", parts.join(" ⊕ "))
    }
}

/// Variable names for Alexander polynomials: `t` alone, `s, u, v` for
/// the small multivariable cases, indexed names beyond.
pub fn var_names(rank: usize) -> Vec<String> {
    match rank {
        1 => vec!["t".into()],
        2 => vec!["s".into(), "u".into()],
        3 => vec!["s".into(), "u".into(), "v".into()],
        _ => (1..=rank).map(|i| format!("t{i}")).collect(),
    }
}

/// Two-column layout for the human-readable reports.
pub fn render_table(rows: &[(&str, String)]) -> String {
    let w = rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
    rows.iter()
        .map(|(k, v)| format!("{k:<w$}  {v}"))
        .collect::<Vec<_>>()
        .join("\n")
}

pub fn to_json_string(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("serializable")
}
