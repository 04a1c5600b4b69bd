//! JSON file formats for algebras, representations, operators, forms and series.
//!
//! Scalars are strings `"p/q"` (integers are also accepted on input).
//! Matrices are lists of rows in column convention: column `j` is the image
//! of the `j`-th basis vector.

use serde_json::{json, Map, Value};

use crate::algebra::{BilinearMap, HomAlgebra};
use crate::deformation::{FormalMapSeries, FormalProductSeries};
use crate::error::{Error, Result};
use crate::exactlin::{Matrix, Scalar};
use crate::representation::Representation;
use crate::rotabaxter::RBOperator;

fn perr(context: impl Into<String>) -> Error {
    Error::Parse {
        context: context.into(),
    }
}

fn parse_json(text: &str) -> Result<Value> {
    serde_json::from_str(text).map_err(|e| perr(format!("line {}, column {}: {e}", e.line(), e.column())))
}

fn field<'a>(obj: &'a Value, key: &str, ctx: &str) -> Result<&'a Value> {
    obj.get(key).ok_or_else(|| perr(format!("{ctx}: missing field \"{key}\"")))
}

fn as_object<'a>(v: &'a Value, ctx: &str) -> Result<&'a Map<String, Value>> {
    v.as_object().ok_or_else(|| perr(format!("{ctx}: expected an object")))
}

fn as_array<'a>(v: &'a Value, ctx: &str) -> Result<&'a Vec<Value>> {
    v.as_array().ok_or_else(|| perr(format!("{ctx}: expected an array")))
}

fn scalar(v: &Value, ctx: &str) -> Result<Scalar> {
    match v {
        Value::String(s) => s.trim().parse().map_err(|_| perr(format!("{ctx}: invalid scalar \"{s}\""))),
        Value::Number(n) if n.is_i64() => Ok(Scalar::from_int(n.as_i64().unwrap_or_default())),
        _ => Err(perr(format!("{ctx}: expected a scalar string"))),
    }
}

fn matrix(v: &Value, rows: usize, cols: usize, ctx: &str) -> Result<Matrix> {
    let m = matrix_any(v, ctx)?;
    if m.rows() != rows || m.cols() != cols {
        return Err(perr(format!(
            "{ctx}: expected a {rows}x{cols} matrix, found {}x{}",
            m.rows(),
            m.cols()
        )));
    }
    Ok(m)
}

fn matrix_any(v: &Value, ctx: &str) -> Result<Matrix> {
    let rows = as_array(v, ctx)?;
    let mut out = Vec::with_capacity(rows.len());
    let mut width = None;
    for (i, r) in rows.iter().enumerate() {
        let rctx = format!("{ctx}[{i}]");
        let entries = as_array(r, &rctx)?
            .iter()
            .enumerate()
            .map(|(j, x)| scalar(x, &format!("{rctx}[{j}]")))
            .collect::<Result<Vec<_>>>()?;
        match width {
            None => width = Some(entries.len()),
            Some(w) if w != entries.len() => return Err(perr(format!("{rctx}: ragged matrix row"))),
            _ => {}
        }
        out.push(entries);
    }
    Ok(Matrix::from_rows(out, width.unwrap_or(0)))
}

fn matrix_json(m: &Matrix) -> Value {
    Value::Array(
        m.to_rows()
            .iter()
            .map(|r| Value::Array(r.iter().map(|x| Value::String(x.to_string())).collect()))
            .collect(),
    )
}

fn index(labels: &[String], name: &str, ctx: &str) -> Result<usize> {
    labels
        .iter()
        .position(|l| l == name.trim())
        .ok_or_else(|| perr(format!("{ctx}: unknown basis label \"{name}\"")))
}

/// `{"e2":"1"}` as a coordinate vector.
fn sparse_vector(v: &Value, labels: &[String], ctx: &str) -> Result<Vec<Scalar>> {
    let mut out = vec![Scalar::zero(); labels.len()];
    for (k, x) in as_object(v, ctx)? {
        let i = index(labels, k, ctx)?;
        out[i] += scalar(x, &format!("{ctx}.{k}"))?;
    }
    Ok(out)
}

fn sparse_vector_json(v: &[Scalar], labels: &[String]) -> Value {
    let mut m = Map::new();
    for (x, l) in v.iter().zip(labels) {
        if !x.is_zero() {
            m.insert(l.clone(), Value::String(x.to_string()));
        }
    }
    Value::Object(m)
}

/// Records `value` at `(i, j)` and `(j, i)`, rejecting a different earlier value.
fn set_symmetric(
    slots: &mut [Option<Vec<Scalar>>],
    n: usize,
    labels: &[String],
    (i, j): (usize, usize),
    value: Vec<Scalar>,
) -> Result<()> {
    for idx in [i * n + j, j * n + i] {
        match &slots[idx] {
            Some(old) if *old != value => {
                return Err(Error::ConflictingProduct {
                    left: labels[i].clone(),
                    right: labels[j].clone(),
                })
            }
            _ => slots[idx] = Some(value.clone()),
        }
    }
    Ok(())
}

fn fill_bilinear(slots: Vec<Option<Vec<Scalar>>>, n: usize, out_dim: usize) -> BilinearMap {
    BilinearMap::from_fn(n, out_dim, |i, j| {
        slots[i * n + j].clone().unwrap_or_else(|| vec![Scalar::zero(); out_dim])
    })
}

fn pair_key(key: &str, labels: &[String], ctx: &str) -> Result<(usize, usize)> {
    let Some((l, r)) = key.split_once(',') else {
        return Err(perr(format!("{ctx}: key \"{key}\" is not of the form \"a,b\"")));
    };
    Ok((index(labels, l, ctx)?, index(labels, r, ctx)?))
}

/// A symmetric bilinear map in the sparse form `{"e1,e1":{"e2":"1"}}`.
fn bilinear_sparse(v: &Value, labels: &[String], ctx: &str) -> Result<BilinearMap> {
    let n = labels.len();
    let mut slots = vec![None; n * n];
    for (k, x) in as_object(v, ctx)? {
        let pair = pair_key(k, labels, ctx)?;
        let value = sparse_vector(x, labels, &format!("{ctx}.\"{k}\""))?;
        set_symmetric(&mut slots, n, labels, pair, value)?;
    }
    Ok(fill_bilinear(slots, n, n))
}

fn bilinear_sparse_json(b: &BilinearMap, labels: &[String]) -> Value {
    let mut m = Map::new();
    let n = labels.len();
    for i in 0..n {
        for j in i..n {
            let v = b.value(i, j);
            if v.iter().any(|x| !x.is_zero()) {
                m.insert(format!("{},{}", labels[i], labels[j]), sparse_vector_json(v, labels));
            }
        }
    }
    Value::Object(m)
}

/// Reads an algebra: `{"basis":[…],"alpha":[[…]],"products":[{"left","right","value"}]}`.
///
/// Products are symmetrized; listing both orders of a pair is allowed when the
/// values agree.
pub fn parse_algebra(text: &str) -> Result<HomAlgebra> {
    let v = parse_json(text)?;
    let basis = as_array(field(&v, "basis", "algebra")?, "basis")?;
    let labels: Vec<String> = basis
        .iter()
        .enumerate()
        .map(|(i, b)| {
            b.as_str()
                .map(|s| s.trim().to_string())
                .ok_or_else(|| perr(format!("basis[{i}]: expected a string")))
        })
        .collect::<Result<_>>()?;
    for (i, l) in labels.iter().enumerate() {
        if labels[..i].contains(l) {
            return Err(perr(format!("basis[{i}]: duplicate label \"{l}\"")));
        }
    }
    let n = labels.len();
    let alpha = matrix(field(&v, "alpha", "algebra")?, n, n, "alpha")?;
    let mut slots = vec![None; n * n];
    let products = match v.get("products") {
        Some(p) => as_array(p, "products")?.clone(),
        None => Vec::new(),
    };
    for (k, p) in products.iter().enumerate() {
        let ctx = format!("products[{k}]");
        let name = |key: &str| -> Result<usize> {
            let s = field(p, key, &ctx)?
                .as_str()
                .ok_or_else(|| perr(format!("{ctx}.{key}: expected a string")))?;
            index(&labels, s, &ctx)
        };
        let (i, j) = (name("left")?, name("right")?);
        let value = sparse_vector(field(p, "value", &ctx)?, &labels, &format!("{ctx}.value"))?;
        set_symmetric(&mut slots, n, &labels, (i, j), value)?;
    }
    HomAlgebra::new(labels, fill_bilinear(slots, n, n), alpha)
}

/// Canonical JSON of an algebra: products for `i ≤ j` with nonzero value, in basis order.
pub fn algebra_to_json(a: &HomAlgebra) -> Value {
    let labels = a.labels();
    let n = a.dim();
    let mut products = Vec::new();
    for i in 0..n {
        for j in i..n {
            let v = a.mul_basis(i, j);
            if v.iter().any(|x| !x.is_zero()) {
                products.push(json!({
                    "left": labels[i],
                    "right": labels[j],
                    "value": sparse_vector_json(v, labels),
                }));
            }
        }
    }
    json!({
        "basis": labels,
        "alpha": matrix_json(a.alpha()),
        "products": products,
    })
}

pub fn to_pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values always serialize");
    s.push('\n');
    s
}

/// Reads `{"dim":m,"phi":[[…]],"rho":{"e1":[[…]],…}}`; missing actions are zero.
pub fn parse_representation(text: &str, a: &HomAlgebra) -> Result<Representation> {
    let v = parse_json(text)?;
    let dim = field(&v, "dim", "representation")?
        .as_u64()
        .ok_or_else(|| perr("dim: expected a non-negative integer"))? as usize;
    let phi = matrix(field(&v, "phi", "representation")?, dim, dim, "phi")?;
    let mut rho = vec![Matrix::zeros(dim, dim); a.dim()];
    if let Some(r) = v.get("rho") {
        for (k, m) in as_object(r, "rho")? {
            let i = index(a.labels(), k, "rho")?;
            rho[i] = matrix(m, dim, dim, &format!("rho.{k}"))?;
        }
    }
    Representation::new(a.clone(), rho, phi)
}

pub fn representation_to_json(r: &Representation) -> Value {
    let mut rho = Map::new();
    for (l, m) in r.algebra().labels().iter().zip(r.rho_all()) {
        rho.insert(l.clone(), matrix_json(m));
    }
    json!({
        "dim": r.dim(),
        "phi": matrix_json(r.phi()),
        "rho": rho,
    })
}

/// Reads `{"matrix":[[…]]}` of shape `rows × cols`.
pub fn parse_linear_map(text: &str, rows: usize, cols: usize) -> Result<Matrix> {
    let v = parse_json(text)?;
    matrix(field(&v, "matrix", "map")?, rows, cols, "matrix")
}

pub fn linear_map_to_json(m: &Matrix) -> Value {
    json!({ "matrix": matrix_json(m) })
}

/// Reads an operator `V → A` for the given representation.
pub fn parse_operator(text: &str, rep: &Representation) -> Result<RBOperator> {
    let t = parse_linear_map(text, rep.algebra().dim(), rep.dim())?;
    RBOperator::new(rep.clone(), t)
}

/// Reads a symmetric form `{"e1,e2":"1"}` into a bilinear map with 1-dimensional values.
pub fn parse_theta(text: &str, a: &HomAlgebra) -> Result<BilinearMap> {
    let v = parse_json(text)?;
    let labels = a.labels();
    let n = labels.len();
    let mut slots = vec![None; n * n];
    for (k, x) in as_object(&v, "theta")? {
        let pair = pair_key(k, labels, "theta")?;
        let value = vec![scalar(x, &format!("theta.\"{k}\""))?];
        set_symmetric(&mut slots, n, labels, pair, value)?;
    }
    Ok(fill_bilinear(slots, n, 1))
}

pub fn theta_to_json(theta: &BilinearMap, labels: &[String]) -> Value {
    let mut m = Map::new();
    let n = labels.len();
    for i in 0..n {
        for j in i..n {
            let x = theta.get(i, j, 0);
            if !x.is_zero() {
                m.insert(format!("{},{}", labels[i], labels[j]), Value::String(x.to_string()));
            }
        }
    }
    Value::Object(m)
}

fn series_coeffs(v: &Value) -> Result<(usize, &Vec<Value>)> {
    let order = field(v, "order", "series")?
        .as_u64()
        .ok_or_else(|| perr("order: expected a non-negative integer"))? as usize;
    let coeffs = as_array(field(v, "coeffs", "series")?, "coeffs")?;
    Ok((order, coeffs))
}

/// Reads `{"order":k,"coeffs":[…]}` with sparse bilinear maps.
///
/// `coeffs` lists either `μ_0, …, μ_k` or only `μ_1, …, μ_k`; in the latter
/// case `μ_0` is the algebra's product.
pub fn parse_product_series(text: &str, a: &HomAlgebra) -> Result<FormalProductSeries> {
    let v = parse_json(text)?;
    let (order, coeffs) = series_coeffs(&v)?;
    let maps = coeffs
        .iter()
        .enumerate()
        .map(|(i, c)| bilinear_sparse(c, a.labels(), &format!("coeffs[{i}]")))
        .collect::<Result<Vec<_>>>()?;
    if maps.len() == order + 1 {
        FormalProductSeries::new(a.clone(), maps)
    } else if maps.len() == order {
        FormalProductSeries::with_higher(a.clone(), maps)
    } else {
        Err(perr(format!(
            "coeffs: order {order} needs {} or {} coefficients, found {}",
            order,
            order + 1,
            maps.len()
        )))
    }
}

/// Canonical JSON of a product series, listing `μ_0, …, μ_k`.
pub fn product_series_to_json(s: &FormalProductSeries) -> Value {
    let labels = s.algebra().labels();
    json!({
        "order": s.order(),
        "coeffs": s.coeffs().iter().map(|m| bilinear_sparse_json(m, labels)).collect::<Vec<_>>(),
    })
}

/// Reads `{"order":k,"coeffs":[M_0, …, M_k]}` with matrices of shape `rows × cols`.
pub fn parse_map_series(text: &str, rows: usize, cols: usize) -> Result<FormalMapSeries> {
    let v = parse_json(text)?;
    let (order, coeffs) = series_coeffs(&v)?;
    if coeffs.len() != order + 1 {
        return Err(perr(format!(
            "coeffs: order {order} needs {} coefficients, found {}",
            order + 1,
            coeffs.len()
        )));
    }
    let maps = coeffs
        .iter()
        .enumerate()
        .map(|(i, c)| matrix(c, rows, cols, &format!("coeffs[{i}]")))
        .collect::<Result<Vec<_>>>()?;
    FormalMapSeries::new(maps)
}

pub fn map_series_to_json(s: &FormalMapSeries) -> Value {
    json!({
        "order": s.order(),
        "coeffs": s.coeffs().iter().map(matrix_json).collect::<Vec<_>>(),
    })
}
