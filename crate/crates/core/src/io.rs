//! Text formats: quivers, weights, polynomial files and JSON-lines records.
//!
//! Polynomial files hold one term per line, `coeff e_1 .. e_m [a b c]`, where `e` are the slot
//! exponents (vertex-major) and `a b c` the optional exponents of `q, q1, q2`. Blank lines and
//! lines starting with `#` are ignored.

use std::path::Path;

use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::quiver::{DimVec, Quiver};
use crate::rational::{parse_q, parse_qvec, Q};
use crate::shuffle::poly::LaurentPoly;
use crate::shuffle::product::PARAMS;
use crate::shuffle::{Kernel, ShuffleElement};

/// Builds a named quiver: `loops:M`, `jordan`, `two-cycle`, `an:N`, optionally wrapped as
/// `tripled(..)`.
pub fn named_quiver(name: &str) -> Result<Quiver> {
    let name = name.trim();
    if let Some(inner) = name.strip_prefix("tripled(").and_then(|s| s.strip_suffix(')')) {
        return Ok(named_quiver(inner)?.tripled());
    }
    let bad = || Error::Malformed(format!("unknown quiver name {name:?}"));
    let arg = |s: &str| s.parse::<usize>().map_err(|_| bad());
    match name.split_once(':') {
        Some(("loops", m)) => Ok(Quiver::loops(arg(m)?)),
        Some(("an", n)) if arg(n)? >= 1 => Ok(Quiver::a_n(arg(n)?)),
        None if name == "jordan" => Ok(Quiver::jordan()),
        None if name == "two-cycle" => Ok(Quiver::two_cycle()),
        _ => Err(bad()),
    }
}

/// A quiver from a JSON file, or from a name understood by [`named_quiver`].
pub fn load_quiver(spec: &str) -> Result<Quiver> {
    let p = Path::new(spec);
    if p.is_file() {
        let text = std::fs::read_to_string(p).map_err(|e| Error::Malformed(format!("{spec}: {e}")))?;
        return Quiver::from_json(&text);
    }
    named_quiver(spec)
}

/// `"2"` or `"2,1"`.
pub fn parse_dims(s: &str) -> Result<DimVec> {
    s.trim()
        .trim_start_matches('[')
        .trim_end_matches(']')
        .split(',')
        .map(|t| t.trim().parse::<u32>().map_err(|_| Error::Malformed(format!("bad dimension vector {s:?}"))))
        .collect()
}

pub fn parse_weight(s: &str) -> Result<Vec<Q>> {
    parse_qvec(s)
}

/// `"1:1; 1:-1"` or `"1,0:2; 0,1:-1"`.
pub fn parse_pairs(s: &str) -> Result<Vec<(DimVec, i64)>> {
    s.split(';')
        .filter(|t| !t.trim().is_empty())
        .map(|t| {
            let (d, w) = t.split_once(':').ok_or_else(|| Error::Malformed(format!("bad pair {t:?}, expected d:w")))?;
            let w = w.trim().parse::<i64>().map_err(|_| Error::Malformed(format!("bad weight in {t:?}")))?;
            Ok((parse_dims(d)?, w))
        })
        .collect()
}

/// Kernel names: `plain`, `edge` (both from the quiver), `jordan`, `fo`, `an:N`, `sh:N`.
pub fn parse_kernel(name: &str, quiver: Option<&Quiver>) -> Result<Kernel> {
    let need = || quiver.ok_or_else(|| Error::Malformed(format!("kernel {name:?} needs --quiver")));
    let arg = |n: &str| n.parse::<usize>().map_err(|_| Error::Malformed(format!("bad kernel {name:?}")));
    match name.split_once(':') {
        None if name == "plain" => Kernel::plain(need()?),
        None if name == "edge" => Kernel::edge_weighted(need()?),
        None if name == "jordan" => Ok(Kernel::jordan()),
        None if name == "fo" => Ok(Kernel::feigin_odeskii()),
        Some(("an", n)) => Kernel::tripled_an(arg(n)?),
        Some(("sh", n)) => Kernel::quantum_loop(arg(n)?),
        _ => Err(Error::Malformed(format!("unknown kernel {name:?}"))),
    }
}

pub fn parse_element(text: &str, dims: &[u32]) -> Result<ShuffleElement> {
    let m = dims.iter().sum::<u32>() as usize;
    let mut terms = Vec::new();
    for (k, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        let bad = |why: &str| Error::Malformed(format!("line {}: {why}", k + 1));
        if fields.len() != 1 + m && fields.len() != 1 + m + PARAMS {
            return Err(bad(&format!("expected {} or {} exponents, found {}", m, m + PARAMS, fields.len() - 1)));
        }
        let c = parse_q(fields[0]).map_err(|_| bad("bad coefficient"))?;
        let mut e = fields[1..]
            .iter()
            .map(|x| x.parse::<i32>().map_err(|_| bad("bad exponent")))
            .collect::<Result<Vec<i32>>>()?;
        if e.iter().any(|x| x.abs() > 1000) {
            return Err(bad("exponent out of range"));
        }
        e.resize(m + PARAMS, 0);
        terms.push((e, c));
    }
    ShuffleElement::new(dims.to_vec(), LaurentPoly::from_terms(m + PARAMS, terms))
}

pub fn read_element(path: &str, dims: &[u32]) -> Result<ShuffleElement> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Malformed(format!("{path}: {e}")))?;
    parse_element(&text, dims)
}

/// One line per term, all `m + 3` exponents, in increasing exponent order.
pub fn format_element(f: &ShuffleElement) -> String {
    let mut out = String::new();
    for (e, c) in f.num().terms() {
        let es: Vec<String> = e.iter().map(|x| x.to_string()).collect();
        out.push_str(&format!("{} {}\n", c, es.join(" ")));
    }
    out
}

/// Human-readable polynomial in `z`, `q`, `q1`, `q2`, slot names `z{v}_{j}`.
pub fn pretty_element(f: &ShuffleElement) -> String {
    let names: Vec<String> = f
        .dims()
        .iter()
        .enumerate()
        .flat_map(|(v, &k)| (0..k).map(move |j| if f.dims().len() == 1 { format!("z{j}") } else { format!("z{v}_{j}") }))
        .chain(["q", "q1", "q2"].map(String::from))
        .collect();
    let mut parts = Vec::new();
    for (e, c) in f.num().terms() {
        let mono: Vec<String> = e
            .iter()
            .zip(&names)
            .filter(|(&x, _)| x != 0)
            .map(|(&x, n)| if x == 1 { n.clone() } else { format!("{n}^{x}") })
            .collect();
        let one = Q::from_integer(1.into());
        let term = match (mono.is_empty(), c == one, c == -one.clone()) {
            (true, _, _) => c.to_string(),
            (false, true, _) => mono.join("*"),
            (false, _, true) => format!("-{}", mono.join("*")),
            _ => format!("{}*{}", c, mono.join("*")),
        };
        parts.push(term);
    }
    if parts.is_empty() {
        return "0".into();
    }
    parts.join(" + ").replace("+ -", "- ")
}

pub fn q_json(x: &Q) -> Value {
    Value::String(x.to_string())
}

pub fn qvec_json(xs: &[Q]) -> Value {
    Value::Array(xs.iter().map(q_json).collect())
}

/// A JSON-lines record: `{"record": kind, ...fields}`.
pub fn record(kind: &str, fields: Value) -> String {
    let mut m = Map::new();
    m.insert("record".into(), json!(kind));
    if let Value::Object(f) = fields {
        m.extend(f);
    }
    Value::Object(m).to_string()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    #[test]
    fn names() {
        assert_eq!(named_quiver("loops:3").unwrap(), Quiver::loops(3));
        assert_eq!(named_quiver("tripled(jordan)").unwrap(), Quiver::jordan().tripled());
        assert!(named_quiver("loops:x").is_err());
        assert_eq!(parse_dims("2, 1").unwrap(), vec![2, 1]);
        assert_eq!(parse_pairs("1:1; 1:-1").unwrap(), vec![(vec![1], 1), (vec![1], -1)]);
    }

    #[test]
    fn element_round_trip() {
        let text = "# f\n2 1 0\n-1/2 0 1 1 0 0\n";
        let f = parse_element(text, &[2]).unwrap();
        assert_eq!(f.num().len(), 2);
        let back = parse_element(&format_element(&f), &[2]).unwrap();
        assert_eq!(back, f);
        assert!(parse_element("1 2", &[2]).is_err());
    }

    #[test]
    fn pretty() {
        let f = ShuffleElement::constant(vec![2], q(1));
        let g = f.scale_params([1, 0, 0]).add(&f).unwrap();
        assert_eq!(pretty_element(&g), "1 + q");
    }

    #[test]
    fn records() {
        assert_eq!(record("r", json!({"r": q_json(&q(2))})), r#"{"r":"2","record":"r"}"#);
    }
}
