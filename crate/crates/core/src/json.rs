//! JSON encodings.
//!
//! A rational function is
//! `{"scalar": "p/q", "numerator": [[exponents, "p/q"], ...], "denominator": [[coeffs, multiplicity], ...]}`
//! and a mould is `{"depth": N, "components": [rf_0, ..., rf_N]}`.
//! Parse errors carry a JSON path such as `$.components[2].numerator[0][1]`.

use serde_json::{json, Value};

use crate::algebra::{format_rational, parse_rational, LinearForm, Monomial, Polynomial, Rational, RationalFunction};
use crate::error::{Error, Result};
use crate::mould::Mould;
use crate::symmetry::Witness;

fn err(path: &str, message: impl Into<String>) -> Error {
    Error::Parse {
        location: path.to_string(),
        message: message.into(),
    }
}

pub fn rf_to_json(f: &RationalFunction) -> Value {
    if f.is_zero() {
        return json!({"scalar": "0", "numerator": [], "denominator": []});
    }
    let numerator: Vec<Value> = f
        .numerator()
        .terms()
        .map(|(m, c)| json!([m.exponents(), format_rational(c)]))
        .collect();
    let denominator: Vec<Value> = f
        .denominator()
        .iter()
        .map(|(l, k)| json!([l.coeffs(), k]))
        .collect();
    json!({
        "scalar": format_rational(f.scalar()),
        "numerator": numerator,
        "denominator": denominator,
    })
}

pub fn mould_to_json(m: &Mould) -> Value {
    json!({
        "depth": m.depth(),
        "components": m.components().iter().map(rf_to_json).collect::<Vec<_>>(),
    })
}

pub fn witness_to_json(w: &Witness) -> Value {
    json!({"p": w.p, "q": w.q, "residual": rf_to_json(&w.residual)})
}

fn field<'a>(v: &'a Value, key: &str, path: &str) -> Result<&'a Value> {
    v.as_object()
        .ok_or_else(|| err(path, "expected an object"))?
        .get(key)
        .ok_or_else(|| err(path, format!("missing field `{}`", key)))
}

fn array<'a>(v: &'a Value, path: &str) -> Result<&'a Vec<Value>> {
    v.as_array().ok_or_else(|| err(path, "expected an array"))
}

fn rational(v: &Value, path: &str) -> Result<Rational> {
    match v {
        Value::String(s) => parse_rational(s).map_err(|_| err(path, format!("bad rational `{}`", s))),
        Value::Number(n) if n.is_i64() => Ok(Rational::from_integer(n.as_i64().unwrap().into())),
        _ => Err(err(path, "expected a rational string \"p/q\"")),
    }
}

fn int_vec<T: TryFrom<i64>>(v: &Value, path: &str) -> Result<Vec<T>> {
    array(v, path)?
        .iter()
        .enumerate()
        .map(|(i, x)| {
            x.as_i64()
                .and_then(|n| T::try_from(n).ok())
                .ok_or_else(|| err(&format!("{}[{}]", path, i), "expected an integer in range"))
        })
        .collect()
}

fn pair<'a>(v: &'a Value, path: &str) -> Result<(&'a Value, &'a Value)> {
    match array(v, path)?.as_slice() {
        [a, b] => Ok((a, b)),
        _ => Err(err(path, "expected a pair")),
    }
}

pub fn rf_from_json_at(v: &Value, path: &str) -> Result<RationalFunction> {
    let scalar = rational(field(v, "scalar", path)?, &format!("{}.scalar", path))?;
    let np = format!("{}.numerator", path);
    let mut numerator = Polynomial::zero();
    for (i, t) in array(field(v, "numerator", path)?, &np)?.iter().enumerate() {
        let tp = format!("{}[{}]", np, i);
        let (e, c) = pair(t, &tp)?;
        let exps: Vec<u32> = int_vec(e, &format!("{}[0]", tp))?;
        let c = rational(c, &format!("{}[1]", tp))?;
        numerator = numerator.add(&Polynomial::monomial(Monomial::from_exponents(exps), c));
    }
    let dp = format!("{}.denominator", path);
    let mut factors = Vec::new();
    for (i, t) in array(field(v, "denominator", path)?, &dp)?.iter().enumerate() {
        let tp = format!("{}[{}]", dp, i);
        let (l, k) = pair(t, &tp)?;
        let l = LinearForm::from_coeffs(int_vec(l, &format!("{}[0]", tp))?);
        if l.is_zero() {
            return Err(err(&format!("{}[0]", tp), "zero linear form in denominator"));
        }
        let k = k
            .as_u64()
            .and_then(|k| u32::try_from(k).ok())
            .ok_or_else(|| err(&format!("{}[1]", tp), "expected a multiplicity"))?;
        factors.push((l, k));
    }
    Ok(RationalFunction::new(numerator.scale(&scalar), factors))
}

pub fn rf_from_json(v: &Value) -> Result<RationalFunction> {
    rf_from_json_at(v, "$")
}

pub fn mould_from_json(v: &Value) -> Result<Mould> {
    let depth = field(v, "depth", "$")?
        .as_u64()
        .ok_or_else(|| err("$.depth", "expected a nonnegative integer"))? as usize;
    let comps = array(field(v, "components", "$")?, "$.components")?;
    if comps.len() != depth + 1 {
        return Err(err(
            "$.components",
            format!("expected {} components, found {}", depth + 1, comps.len()),
        ));
    }
    let components = comps
        .iter()
        .enumerate()
        .map(|(i, c)| {
            let path = format!("$.components[{}]", i);
            let f = rf_from_json_at(c, &path)?;
            if f.max_var() > i {
                return Err(err(&path, format!("component {} uses variable x{}", i, f.max_var())));
            }
            Ok(f)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Mould::from_components(components))
}

/// Parse mould JSON text; syntax errors report line and column.
pub fn parse_mould(text: &str) -> Result<Mould> {
    let v: Value = serde_json::from_str(text).map_err(|e| {
        err(&format!("line {}, column {}", e.line(), e.column()), e.to_string())
    })?;
    mould_from_json(&v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::special::pal;

    #[test]
    fn round_trip() {
        let p = pal(3).unwrap();
        let v = mould_to_json(&p);
        assert_eq!(mould_from_json(&v).unwrap(), p);
        let text = serde_json::to_string(&v).unwrap();
        assert_eq!(parse_mould(&text).unwrap(), p);
    }

    #[test]
    fn encoding_shape() {
        let f = RationalFunction::inverse_linear(&LinearForm::from_coeffs(vec![2, -2])).unwrap();
        assert_eq!(
            rf_to_json(&f),
            json!({"scalar": "1/2", "numerator": [[[], "1"]], "denominator": [[[1, -1], 1]]})
        );
    }

    #[test]
    fn errors_have_locations() {
        let bad = json!({"depth": 1, "components": [
            {"scalar": "1", "numerator": [[[], "1"]], "denominator": []},
            {"scalar": "1", "numerator": [[[1], "x"]], "denominator": []}
        ]});
        match mould_from_json(&bad) {
            Err(Error::Parse { location, .. }) => assert_eq!(location, "$.components[1].numerator[0][1]"),
            other => panic!("{:?}", other),
        }
        match parse_mould("{\"depth\": 1,\n \"components\": [}") {
            Err(Error::Parse { location, .. }) => assert!(location.starts_with("line 2")),
            other => panic!("{:?}", other),
        }
    }
}
