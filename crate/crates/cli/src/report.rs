//! Report bodies. Exact values are `"p/q"` strings; floating point appears
//! only for angles, which are advisory.

use std::fmt::Write as _;
use std::str::FromStr;

use serde_json::{json, Map, Value};

use kstab::algebra::rational::{to_f64, to_string};
use kstab::algebra::{GradedRing, Rational};
use kstab::filtration::{Filtration, ReesPresentation, WeightData};
use kstab::invariants::{PolyFit, QuasiFit};

/// A finished command: the deterministic body plus whether every claimed
/// value certified.
#[derive(Debug, Clone)]
pub struct Output {
    pub body: Value,
    pub certified: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Text,
}

pub fn q(r: &Rational) -> Value {
    Value::String(to_string(r))
}

pub fn opt_q(r: Option<&Rational>) -> Value {
    r.map_or(Value::Null, q)
}

pub fn qs(v: &[Rational]) -> Value {
    Value::Array(v.iter().map(q).collect())
}

pub fn ints(v: &[i64]) -> Value {
    Value::Array(v.iter().map(|x| Value::String(x.to_string())).collect())
}

fn poly_fit(f: &PolyFit) -> Value {
    json!({ "start": f.start, "end": f.end, "coefficients": qs(&f.coefficients) })
}

pub fn quasi_fit(f: &QuasiFit) -> Value {
    json!({
        "period": f.period,
        "threshold": f.threshold(),
        "classes": f.classes.iter().map(poly_fit).collect::<Vec<_>>(),
    })
}

pub fn ring(r: &GradedRing) -> Value {
    json!({
        "variables": r.variables(),
        "relations": r.relations().iter().map(|p| r.display(p)).collect::<Vec<_>>(),
        "dimension": r.dimension(),
    })
}

pub fn presentation(p: &ReesPresentation) -> Value {
    let r = p.ring();
    json!({
        "label": p.label(),
        "generators": p
            .generators()
            .iter()
            .map(|g| json!({ "t": g.t, "element": r.display(&g.element) }))
            .collect::<Vec<_>>(),
    })
}

pub fn weights(wd: &WeightData) -> Value {
    json!({
        "h": ints(&wd.h),
        "w": ints(&wd.w),
        "d": ints(&wd.d),
        "window": wd.window,
        "fits": wd.fits.as_ref().map(|f| json!({
            "h": quasi_fit(&f.h),
            "w": quasi_fit(&f.w),
            "d": quasi_fit(&f.d),
        })),
        "fit_error": wd.fit_error.as_ref().map(|e| e.to_string()),
    })
}

/// `{"body": …, "timing": {"seconds": …}}`.
pub fn envelope(out: &Output, seconds: f64) -> Value {
    json!({ "body": out.body, "timing": { "seconds": seconds } })
}

pub fn render(out: &Output, seconds: f64, format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&envelope(out, seconds)).expect("reports serialise");
            s.push('\n');
            s
        }
        Format::Text => {
            let mut s = String::new();
            text(&out.body, 0, &mut s);
            let _ = writeln!(s, "timing: {seconds:.3} s");
            s
        }
    }
}

fn is_scalar(v: &Value) -> bool {
    !matches!(v, Value::Array(_) | Value::Object(_))
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "-".into(),
        other => other.to_string(),
    }
}

/// Appends a decimal approximation to exact non-integer fractions.
fn with_decimal(v: &Value) -> String {
    let s = scalar(v);
    match Rational::from_str(&s) {
        Ok(r) if s.contains('/') => format!("{s} (≈ {:.6})", to_f64(&r)),
        _ => s,
    }
}

fn text(v: &Value, indent: usize, out: &mut String) {
    let pad = "  ".repeat(indent);
    match v {
        Value::Object(map) => object(map, indent, out),
        Value::Array(items) if items.iter().all(is_scalar) => {
            let _ = writeln!(out, "{pad}[{}]", items.iter().map(scalar).collect::<Vec<_>>().join(", "));
        }
        Value::Array(items) => {
            for item in items {
                let _ = writeln!(out, "{pad}-");
                text(item, indent + 1, out);
            }
        }
        other => {
            let _ = writeln!(out, "{pad}{}", with_decimal(other));
        }
    }
}

fn object(map: &Map<String, Value>, indent: usize, out: &mut String) {
    let pad = "  ".repeat(indent);
    for (k, v) in map {
        match v {
            Value::Array(items) if items.iter().all(is_scalar) => {
                let _ = writeln!(out, "{pad}{k}: [{}]", items.iter().map(scalar).collect::<Vec<_>>().join(", "));
            }
            Value::Array(items) if items.is_empty() => {
                let _ = writeln!(out, "{pad}{k}: []");
            }
            Value::Object(_) | Value::Array(_) => {
                let _ = writeln!(out, "{pad}{k}:");
                text(v, indent + 1, out);
            }
            other => {
                let _ = writeln!(out, "{pad}{k}: {}", with_decimal(other));
            }
        }
    }
}
