//! JSON export and import. Every number is an exact string; key order is
//! fixed, so export -> import -> export reproduces the same bytes.

use num_traits::Zero;
use serde_json::{json, Map, Value};

use crate::algebra::expr::parse_poly;
use crate::algebra::generator::{Generator, ALL, DIM};
use crate::algebra::poly::{ParamPoly, Var};
use crate::algebra::scalar::GaussRational;
use crate::algebra::structure::{Family, StructureConstants};
use crate::error::{Error, Result};
use crate::linalg::CMatrix;
use crate::matrix_reps::{Provenance, Representation};
use crate::spinor::{IntertwinerReport, MatrixWeylOperator};
use crate::weyl::{Exps, WeylElement};

/// Largest matrix dimension accepted on import.
pub const MAX_IMPORT_DIM: usize = 64;

fn conventions() -> Value {
    json!({
        "metric": "diag(1,-1,-1,-1)",
        "levi_civita": "eps_0123=+1",
        "lambda": "1/L^2",
        "mu": "1/M^2",
        "eta": "1/H",
        "x_I_bracket": "[x_i,I] = i*f*(eta*x_i - mu*p_i)",
    })
}

pub fn to_pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values always serialize");
    s.push('\n');
    s
}

fn parse_json(text: &str) -> Result<Value> {
    serde_json::from_str(text).map_err(|e| Error::Document(e.to_string()))
}

fn doc(msg: impl Into<String>) -> Error {
    Error::Document(msg.into())
}

fn field<'a>(obj: &'a Map<String, Value>, key: &str) -> Result<&'a Value> {
    obj.get(key).ok_or_else(|| doc(format!("missing `{key}`")))
}

fn as_object<'a>(v: &'a Value, what: &str) -> Result<&'a Map<String, Value>> {
    v.as_object()
        .ok_or_else(|| doc(format!("{what} must be an object")))
}

fn as_array<'a>(v: &'a Value, what: &str) -> Result<&'a Vec<Value>> {
    v.as_array()
        .ok_or_else(|| doc(format!("{what} must be an array")))
}

fn as_str<'a>(v: &'a Value, what: &str) -> Result<&'a str> {
    v.as_str()
        .ok_or_else(|| doc(format!("{what} must be a string")))
}

fn as_dim(v: &Value) -> Result<usize> {
    let n = v
        .as_u64()
        .ok_or_else(|| doc("`dim` must be a non-negative integer"))?;
    if n == 0 || n as usize > MAX_IMPORT_DIM {
        return Err(doc(format!("`dim` must be in 1..={MAX_IMPORT_DIM}")));
    }
    Ok(n as usize)
}

fn generator(s: &str) -> Result<Generator> {
    Generator::from_name(s).ok_or_else(|| doc(format!("unknown generator `{s}`")))
}

pub fn export_algebra_value(sc: &StructureConstants) -> Value {
    let parameters: Map<String, Value> = sc
        .bindings
        .iter()
        .map(|(v, p)| (v.name(), Value::String(p.to_string())))
        .collect();
    let brackets: Vec<Value> = sc
        .entries()
        .map(|(a, b, v)| {
            let coeffs: Map<String, Value> = ALL
                .iter()
                .zip(v)
                .filter(|(_, c)| !c.is_zero())
                .map(|(g, c)| (g.name().to_string(), Value::String(c.to_string())))
                .collect();
            json!({"a": a.name(), "b": b.name(), "coeffs": coeffs})
        })
        .collect();
    json!({
        "family": sc.family.map(|f| f.name()),
        "parameters": parameters,
        "conventions": conventions(),
        "brackets": brackets,
    })
}

pub fn export_algebra(sc: &StructureConstants) -> String {
    to_pretty(&export_algebra_value(sc))
}

pub fn import_algebra(text: &str) -> Result<StructureConstants> {
    let root = parse_json(text)?;
    let obj = as_object(&root, "document")?;
    let family = match field(obj, "family")? {
        Value::Null => None,
        v => Some(Family::parse(as_str(v, "`family`")?)?),
    };
    let mut sc = StructureConstants::empty(family);
    for (name, p) in as_object(field(obj, "parameters")?, "`parameters`")? {
        let var = Var::from_name(name).ok_or_else(|| doc(format!("unknown parameter `{name}`")))?;
        sc.bindings
            .insert(var, parse_poly(as_str(p, "parameter value")?)?);
    }
    let mut seen = std::collections::BTreeSet::new();
    for entry in as_array(field(obj, "brackets")?, "`brackets`")? {
        let e = as_object(entry, "bracket")?;
        let a = generator(as_str(field(e, "a")?, "`a`")?)?;
        let b = generator(as_str(field(e, "b")?, "`b`")?)?;
        if a >= b {
            return Err(doc(format!("bracket [{a}, {b}] must have a before b")));
        }
        if !seen.insert((a, b)) {
            return Err(doc(format!("bracket [{a}, {b}] listed twice")));
        }
        let mut v = vec![ParamPoly::zero(); DIM];
        for (g, c) in as_object(field(e, "coeffs")?, "`coeffs`")? {
            v[generator(g)?.index()] = parse_poly(as_str(c, "coefficient")?)?;
        }
        sc.insert(a, b, v);
    }
    Ok(sc)
}

fn matrix_strings(m: &CMatrix) -> Vec<Value> {
    m.entries()
        .iter()
        .map(|c| Value::String(c.to_string()))
        .collect()
}

fn parse_entries(v: &Value, n: usize, what: &str) -> Result<CMatrix> {
    let list = as_array(v, what)?;
    if list.len() != n * n {
        return Err(Error::Dimension {
            expected: n * n,
            found: list.len(),
        });
    }
    let vals = list
        .iter()
        .map(|c| GaussRational::parse(as_str(c, "matrix entry")?))
        .collect::<Result<Vec<_>>>()?;
    Ok(CMatrix::from_fn(n, n, |r, c| vals[r * n + c].clone()))
}

pub fn export_representation_value(rep: &Representation) -> Value {
    let images: Map<String, Value> = ALL
        .iter()
        .map(|g| {
            (
                g.name().to_string(),
                Value::Array(matrix_strings(rep.image(*g))),
            )
        })
        .collect();
    json!({
        "dim": rep.dim,
        "provenance": rep.provenance.to_string(),
        "layout": "row-major",
        "images": images,
    })
}

pub fn export_representation(rep: &Representation) -> String {
    to_pretty(&export_representation_value(rep))
}

/// The parameter point and embedding are not part of the document; the
/// images alone are checked against an algebra with `verify_images`.
pub fn import_representation(text: &str) -> Result<Representation> {
    let root = parse_json(text)?;
    let obj = as_object(&root, "document")?;
    let dim = as_dim(field(obj, "dim")?)?;
    let provenance = match as_str(field(obj, "provenance")?, "`provenance`")? {
        "clifford8" => Provenance::Clifford8,
        "real6" => Provenance::Real6,
        "reference" => Provenance::Reference,
        other => return Err(doc(format!("unknown provenance `{other}`"))),
    };
    if as_str(field(obj, "layout")?, "`layout`")? != "row-major" {
        return Err(doc("only row-major layout is supported"));
    }
    let images_obj = as_object(field(obj, "images")?, "`images`")?;
    if images_obj.len() != DIM {
        return Err(doc(format!(
            "expected {DIM} images, found {}",
            images_obj.len()
        )));
    }
    let images = ALL
        .iter()
        .map(|g| {
            let v = field(images_obj, g.name())?;
            parse_entries(v, dim, g.name())
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Representation {
        dim,
        images,
        point: None,
        embedding: None,
        provenance,
    })
}

pub fn export_weyl_value(w: &WeylElement) -> Value {
    Value::Array(
        w.terms()
            .map(|(a, b, c)| json!({"xi": a.to_vec(), "d": b.to_vec(), "c": c.to_string()}))
            .collect(),
    )
}

fn exps(v: &Value, what: &str) -> Result<Exps> {
    let list = as_array(v, what)?;
    if list.len() != 4 {
        return Err(doc(format!("{what} needs four exponents")));
    }
    let mut e = [0u16; 4];
    for (slot, x) in e.iter_mut().zip(list) {
        *slot = x
            .as_u64()
            .and_then(|n| u16::try_from(n).ok())
            .ok_or_else(|| doc(format!("{what} exponents must be integers in 0..=65535")))?;
    }
    Ok(e)
}

pub fn import_weyl_value(v: &Value) -> Result<WeylElement> {
    let mut out = WeylElement::zero();
    let mut seen = std::collections::BTreeSet::new();
    for t in as_array(v, "Weyl element")? {
        let t = as_object(t, "Weyl term")?;
        let a = exps(field(t, "xi")?, "`xi`")?;
        let b = exps(field(t, "d")?, "`d`")?;
        if !seen.insert((a, b)) {
            return Err(doc("repeated Weyl monomial"));
        }
        let c = GaussRational::parse(as_str(field(t, "c")?, "`c`")?)?;
        out = out + &WeylElement::term(a, b, c);
    }
    Ok(out)
}

pub fn export_operator_value(op: &MatrixWeylOperator) -> Value {
    let n = op.dim;
    let rows: Vec<Value> = (0..n)
        .map(|r| Value::Array((0..n).map(|c| export_weyl_value(op.get(r, c))).collect()))
        .collect();
    json!({"dim": n, "entries": rows})
}

pub fn export_operator(op: &MatrixWeylOperator) -> String {
    to_pretty(&export_operator_value(op))
}

pub fn import_operator(text: &str) -> Result<MatrixWeylOperator> {
    let root = parse_json(text)?;
    let obj = as_object(&root, "document")?;
    let n = as_dim(field(obj, "dim")?)?;
    let rows = as_array(field(obj, "entries")?, "`entries`")?;
    if rows.len() != n {
        return Err(Error::Dimension {
            expected: n,
            found: rows.len(),
        });
    }
    let mut entries = Vec::with_capacity(n * n);
    for row in rows {
        let row = as_array(row, "operator row")?;
        if row.len() != n {
            return Err(Error::Dimension {
                expected: n,
                found: row.len(),
            });
        }
        for e in row {
            entries.push(import_weyl_value(e)?);
        }
    }
    MatrixWeylOperator::from_entries(n, entries)
}

pub fn export_intertwiner_value(rep: &IntertwinerReport) -> Value {
    let s = match &rep.found {
        Some(m) => Value::Array(
            (0..m.rows())
                .map(|r| {
                    Value::Array(
                        m.row(r)
                            .iter()
                            .map(|c| Value::String(c.to_string()))
                            .collect(),
                    )
                })
                .collect(),
        ),
        None => Value::Null,
    };
    json!({
        "dim": rep.dim,
        "found": rep.found.is_some(),
        "S": s,
        "solution_dim": rep.solution_dim,
        "exact": rep.exact,
        "residual": rep.residual.to_string(),
    })
}
