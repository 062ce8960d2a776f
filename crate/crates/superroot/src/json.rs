//! JSON formats for root data, weights and characters.
//!
//! Integers up to `2^53` in absolute value are JSON numbers; larger ones are
//! decimal strings. Both forms are accepted on input.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive};
use serde_json::{json, Map, Value};
use superroot_core::rootdata::{EvenRoot, OddRoot};
use superroot_core::steinberg::CharacterElement;
use superroot_core::{Coweight, Error, LieFamily, SuperRootDatum, Weight};

/// Largest magnitude emitted as a JSON number.
pub const MAX_SAFE: u64 = 1 << 53;

fn invalid(path: &str, message: impl Into<String>) -> Error {
    Error::InvalidDatum { path: path.to_string(), message: message.into() }
}

pub fn int(x: &BigInt) -> Value {
    match x.to_i64() {
        Some(v) if v.unsigned_abs() <= MAX_SAFE => Value::from(v),
        _ => Value::String(x.to_string()),
    }
}

pub fn uint(x: &BigUint) -> Value {
    int(&BigInt::from(x.clone()))
}

pub fn u64_value(x: u64) -> Value {
    int(&BigInt::from(x))
}

pub fn rational(x: &BigRational) -> Value {
    if x.denom().is_one() {
        int(x.numer())
    } else {
        Value::String(x.to_string())
    }
}

pub fn weight(w: &Weight) -> Value {
    Value::Array(w.coords().iter().map(int).collect())
}

pub fn coweight(c: &Coweight) -> Value {
    Value::Array(c.coords().iter().map(int).collect())
}

pub fn weights(ws: &[Weight]) -> Value {
    Value::Array(ws.iter().map(weight).collect())
}

pub fn datum(d: &SuperRootDatum) -> Value {
    let even: Vec<Value> =
        d.even_roots().iter().map(|e| json!({"root": weight(&e.root), "coroot": coweight(&e.coroot)})).collect();
    let odd: Vec<Value> =
        d.odd_roots().iter().map(|o| json!({"root": weight(&o.root), "mult": u64_value(o.mult)})).collect();
    json!({
        "rank": d.rank(),
        "label": d.label(),
        "even_roots": even,
        "odd_roots": odd,
        "h_odd_dim": u64_value(d.h_odd_dim()),
    })
}

/// Terms sorted lexicographically by weight.
pub fn character(c: &CharacterElement) -> Value {
    let terms: Vec<Value> = c.terms().map(|(w, m)| json!({"weight": weight(w), "mult": int(m)})).collect();
    json!({ "terms": terms })
}

pub fn parse_int(v: &Value, path: &str) -> Result<BigInt, Error> {
    match v {
        Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                Ok(BigInt::from(i))
            } else if let Some(u) = n.as_u64() {
                Ok(BigInt::from(u))
            } else {
                Err(invalid(path, "expected an integer"))
            }
        }
        Value::String(s) => s.trim().parse().map_err(|_| invalid(path, format!("expected an integer, got {s:?}"))),
        _ => Err(invalid(path, "expected an integer")),
    }
}

fn parse_u64(v: &Value, path: &str) -> Result<u64, Error> {
    let x = parse_int(v, path)?;
    if x.is_negative() {
        return Err(invalid(path, "expected a nonnegative integer"));
    }
    x.to_u64().ok_or_else(|| invalid(path, "integer out of range"))
}

fn parse_vector(v: &Value, path: &str) -> Result<Vec<BigInt>, Error> {
    let items = v.as_array().ok_or_else(|| invalid(path, "expected an array of integers"))?;
    items.iter().enumerate().map(|(i, x)| parse_int(x, &format!("{path}[{i}]"))).collect()
}

pub fn parse_weight(v: &Value, path: &str) -> Result<Weight, Error> {
    parse_vector(v, path).map(Weight::new)
}

fn object<'a>(v: &'a Value, path: &str, allowed: &[&str]) -> Result<&'a Map<String, Value>, Error> {
    let obj = v.as_object().ok_or_else(|| invalid(path, "expected an object"))?;
    if let Some(k) = obj.keys().find(|k| !allowed.contains(&k.as_str())) {
        return Err(invalid(&join(path, k), "unknown field"));
    }
    Ok(obj)
}

fn field<'a>(obj: &'a Map<String, Value>, path: &str, key: &str) -> Result<&'a Value, Error> {
    obj.get(key).ok_or_else(|| invalid(&join(path, key), "missing field"))
}

fn join(path: &str, key: &str) -> String {
    if path.is_empty() {
        key.to_string()
    } else {
        format!("{path}.{key}")
    }
}

fn array<'a>(v: &'a Value, path: &str) -> Result<&'a Vec<Value>, Error> {
    v.as_array().ok_or_else(|| invalid(path, "expected an array"))
}

/// Reads a datum. A document whose top level carries a `datum` field (as the
/// `describe` verb emits) is unwrapped first. When the label names a built-in
/// family the datum must agree with it, and the Lie superalgebra is attached.
pub fn parse_datum(v: &Value) -> Result<SuperRootDatum, Error> {
    if let Some(inner) = v.as_object().and_then(|o| o.get("datum")) {
        return parse_datum(inner);
    }
    let obj = object(v, "", &["rank", "label", "even_roots", "odd_roots", "h_odd_dim"])?;
    let rank = parse_u64(field(obj, "", "rank")?, "rank")?;
    let rank = usize::try_from(rank).map_err(|_| invalid("rank", "integer out of range"))?;
    let label = field(obj, "", "label")?.as_str().ok_or_else(|| invalid("label", "expected a string"))?;

    let mut even = Vec::new();
    for (i, e) in array(field(obj, "", "even_roots")?, "even_roots")?.iter().enumerate() {
        let path = format!("even_roots[{i}]");
        let o = object(e, &path, &["root", "coroot"])?;
        let root = parse_weight(field(o, &path, "root")?, &join(&path, "root"))?;
        let coroot = Coweight::new(parse_vector(field(o, &path, "coroot")?, &join(&path, "coroot"))?);
        even.push(EvenRoot { root, coroot });
    }
    let mut odd = Vec::new();
    for (i, e) in array(field(obj, "", "odd_roots")?, "odd_roots")?.iter().enumerate() {
        let path = format!("odd_roots[{i}]");
        let o = object(e, &path, &["root", "mult"])?;
        let root = parse_weight(field(o, &path, "root")?, &join(&path, "root"))?;
        let mult = parse_u64(field(o, &path, "mult")?, &join(&path, "mult"))?;
        odd.push(OddRoot { root, mult });
    }
    let h_odd_dim = parse_u64(field(obj, "", "h_odd_dim")?, "h_odd_dim")?;

    let d = SuperRootDatum::new(rank, label, even, odd, h_odd_dim)?;
    match LieFamily::parse_label(label) {
        Some(family) => d.with_lie_handle(family),
        None => Ok(d),
    }
}

/// Reads `{"terms": [{"weight": [..], "mult": n}]}`. An empty character needs
/// an explicit `rank` field.
pub fn parse_character(v: &Value) -> Result<CharacterElement, Error> {
    let obj = object(v, "", &["terms", "rank"])?;
    let mut terms = Vec::new();
    for (i, t) in array(field(obj, "", "terms")?, "terms")?.iter().enumerate() {
        let path = format!("terms[{i}]");
        let o = object(t, &path, &["weight", "mult"])?;
        let w = parse_weight(field(o, &path, "weight")?, &join(&path, "weight"))?;
        let m = parse_int(field(o, &path, "mult")?, &join(&path, "mult"))?;
        terms.push((w, m));
    }
    let rank = match obj.get("rank") {
        Some(r) => {
            let r = parse_u64(r, "rank")?;
            usize::try_from(r).map_err(|_| invalid("rank", "integer out of range"))?
        }
        None => match terms.first() {
            Some((w, _)) => w.rank(),
            None => return Err(invalid("terms", "an empty character needs an explicit rank")),
        },
    };
    for (i, (w, _)) in terms.iter().enumerate() {
        if w.rank() != rank {
            return Err(invalid(&format!("terms[{i}].weight"), format!("expected {rank} coordinates")));
        }
    }
    CharacterElement::from_terms(rank, terms)
}
