//! JSON forms of quivers, decorated objects and Laurent polynomials.

use std::path::Path;

use anyhow::{anyhow, bail, Context, Result};
use clusterforge::ccmap::DecoratedObject;
use clusterforge::linalg::RationalMatrix;
use clusterforge::rep::Representation;
use clusterforge::{LaurentPolynomial, Quiver};
use num_rational::BigRational;
use serde_json::{json, Map, Value};

/// Inline JSON when the argument starts with `{`, otherwise a file path.
pub fn load_json(arg: &str) -> Result<Value> {
    let text = if arg.trim_start().starts_with('{') {
        arg.to_string()
    } else {
        std::fs::read_to_string(Path::new(arg)).with_context(|| format!("cannot read {arg}"))?
    };
    serde_json::from_str(&text).context("malformed JSON")
}

fn as_u32(v: &Value) -> Result<u32> {
    v.as_u64()
        .and_then(|x| u32::try_from(x).ok())
        .ok_or_else(|| anyhow!("expected a vertex label, got {v}"))
}

pub fn quiver_from_json(v: &Value) -> Result<Quiver> {
    let vertices = v
        .get("vertices")
        .and_then(Value::as_array)
        .ok_or_else(|| anyhow!("quiver needs a \"vertices\" array"))?;
    let labels = vertices.iter().map(as_u32).collect::<Result<Vec<_>>>()?;
    let mut arrows = Vec::new();
    for a in v.get("arrows").and_then(Value::as_array).into_iter().flatten() {
        match a.as_array().map(Vec::as_slice) {
            Some([s, t]) => arrows.push((as_u32(s)?, as_u32(t)?)),
            _ => bail!("an arrow must be a pair [source, target], got {a}"),
        }
    }
    Ok(Quiver::new(labels, &arrows)?)
}

pub fn quiver_to_json(q: &Quiver) -> Value {
    let arrows: Vec<Value> = q.arrow_labels().iter().map(|(s, t)| json!([s, t])).collect();
    json!({ "vertices": q.labels(), "arrows": arrows })
}

fn rational(v: &Value) -> Result<BigRational> {
    match v {
        Value::Number(n) => n
            .as_i64()
            .map(|x| BigRational::from_integer(x.into()))
            .ok_or_else(|| anyhow!("matrix entries must be integers or \"a/b\" strings, got {n}")),
        Value::String(s) => s.trim().parse().map_err(|_| anyhow!("bad rational {s:?}")),
        _ => bail!("bad matrix entry {v}"),
    }
}

fn usize_list(v: &Value, what: &str) -> Result<Vec<usize>> {
    v.as_array()
        .ok_or_else(|| anyhow!("\"{what}\" must be an array"))?
        .iter()
        .map(|x| {
            x.as_u64()
                .map(|x| x as usize)
                .ok_or_else(|| anyhow!("\"{what}\" entries must be nonnegative integers"))
        })
        .collect()
}

/// A decorated object. The quiver is read from the object itself, or taken
/// from `fallback` when the object has none. Missing maps are zero.
pub fn object_from_json(v: &Value, fallback: Option<&Quiver>) -> Result<DecoratedObject> {
    let quiver = match v.get("quiver") {
        Some(q) => quiver_from_json(q)?,
        None => fallback.cloned().ok_or_else(|| anyhow!("no quiver given for the representation"))?,
    };
    let n = quiver.n();
    let dims = match v.get("dims") {
        Some(d) => usize_list(d, "dims")?,
        None => vec![0; n],
    };
    if dims.len() != n {
        bail!("{} dimensions for {n} vertices", dims.len());
    }
    let mut maps: Vec<RationalMatrix> = quiver
        .arrows()
        .iter()
        .map(|&(s, t)| RationalMatrix::zeros(dims[t], dims[s]))
        .collect();
    if let Some(given) = v.get("maps") {
        let given = given.as_object().ok_or_else(|| anyhow!("\"maps\" must be an object"))?;
        for (key, matrix) in given {
            let a: usize = key.parse().map_err(|_| anyhow!("map key {key:?} is not an arrow index"))?;
            let &(s, t) = quiver
                .arrows()
                .get(a)
                .ok_or_else(|| anyhow!("arrow index {a} out of range"))?;
            let rows = matrix.as_array().ok_or_else(|| anyhow!("map {a} must be a list of rows"))?;
            let mut entries = Vec::new();
            for row in rows {
                let row = row.as_array().ok_or_else(|| anyhow!("map {a}: rows must be lists"))?;
                entries.push(row.iter().map(rational).collect::<Result<Vec<_>>>()?);
            }
            if entries.len() != dims[t] || entries.iter().any(|r| r.len() != dims[s]) {
                bail!("map {a} must be a {}x{} matrix", dims[t], dims[s]);
            }
            maps[a] = RationalMatrix::from_rows(dims[t], dims[s], entries);
        }
    }
    let module = Representation::new(quiver, dims, maps)?;
    let shifts = match v.get("shifts") {
        Some(s) => usize_list(s, "shifts")?,
        None => vec![0; n],
    };
    Ok(DecoratedObject::new(module, shifts)?)
}

pub fn object_to_json(obj: &DecoratedObject) -> Value {
    let m = obj.module();
    let mut maps = Map::new();
    for (a, map) in m.maps().iter().enumerate() {
        if map.rows() == 0 || map.cols() == 0 || map.is_zero() {
            continue;
        }
        let rows: Vec<Value> = (0..map.rows())
            .map(|r| Value::Array(map.row(r).iter().map(|x| Value::String(x.to_string())).collect()))
            .collect();
        maps.insert(a.to_string(), Value::Array(rows));
    }
    json!({
        "quiver": quiver_to_json(m.quiver()),
        "dims": m.dims(),
        "maps": maps,
        "shifts": obj.shifts(),
    })
}

pub fn laurent_to_json(p: &LaurentPolynomial) -> Value {
    let terms: Vec<Value> = p
        .terms()
        .iter()
        .map(|(e, c)| {
            let coeff = i64::try_from(c).map(Value::from).unwrap_or_else(|_| Value::String(c.to_string()));
            json!({ "exponents": e, "coefficient": coeff })
        })
        .collect();
    json!({ "vars": p.vars(), "terms": terms, "string": p.to_canonical_string() })
}

pub fn parse_ints(s: &str) -> Result<Vec<i64>> {
    s.split(',')
        .filter(|x| !x.trim().is_empty())
        .map(|x| x.trim().parse().map_err(|_| anyhow!("bad integer {x:?}")))
        .collect()
}

pub fn fmt_vector<T: std::fmt::Display>(v: &[T]) -> String {
    let parts: Vec<String> = v.iter().map(ToString::to_string).collect();
    format!("({})", parts.join(","))
}
