//! JSON documents for algebras, representations, operators, deformations and
//! cochains.
//!
//! Rationals are JSON integers or strings `"p/q"`. Matrices are arrays of rows.
//! A product tensor is nested as `c[i][j][k]`. Action tensors `L`, `R`, `rho`
//! list one matrix per basis element of the algebra.
//!
//! Missing `alpha`, `beta`, `phi` or `psi` default to the identity.

use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};

use num_traits::ToPrimitive;
use serde_json::{json, Map, Value};

use crate::algebra::{subadjacent, BiHomLieAlgebra, BiHomPreLieAlgebra, BilinearProduct, TwistPair};
use crate::cohomology::Cochain;
use crate::error::Error;
use crate::linalg::{format_rational, parse_rational, Matrix, Rational};
use crate::report::AxiomReport;
use crate::representation::{LieRep, PreLieRep};

/// Why a document could not be loaded, with enough location to fix it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DocError {
    pub file: Option<String>,
    pub location: String,
    pub message: String,
}

impl DocError {
    fn field(path: &str, message: impl Into<String>) -> Self {
        Self { file: None, location: format!("field `{path}`"), message: message.into() }
    }

    fn in_file(mut self, file: &Path) -> Self {
        if self.file.is_none() {
            self.file = Some(file.display().to_string());
        }
        self
    }
}

impl fmt::Display for DocError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(file) = &self.file {
            write!(f, "{file}: ")?;
        }
        if self.location.is_empty() {
            write!(f, "{}", self.message)
        } else {
            write!(f, "{}: {}", self.location, self.message)
        }
    }
}

impl std::error::Error for DocError {}

type DocResult<T> = Result<T, DocError>;

fn semantic(path: &str, e: Error) -> DocError {
    DocError::field(path, e.to_string())
}

pub fn parse_str(text: &str) -> DocResult<Value> {
    serde_json::from_str(text).map_err(|e| DocError {
        file: None,
        location: format!("line {}, column {}", e.line(), e.column()),
        message: e.to_string(),
    })
}

pub fn read_file(path: &Path) -> DocResult<Value> {
    let text = fs::read_to_string(path).map_err(|e| DocError {
        file: Some(path.display().to_string()),
        location: String::new(),
        message: e.to_string(),
    })?;
    parse_str(&text).map_err(|e| e.in_file(path))
}

pub fn rational(v: &Value, path: &str) -> DocResult<Rational> {
    match v {
        Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                Ok(Rational::from_integer(i.into()))
            } else if let Some(u) = n.as_u64() {
                Ok(Rational::from_integer(u.into()))
            } else {
                Err(DocError::field(path, format!("{n} is not an integer; write fractions as \"p/q\"")))
            }
        }
        Value::String(s) => parse_rational(s).map_err(|e| DocError::field(path, e.to_string())),
        other => Err(DocError::field(path, format!("expected a rational, found {}", kind(other)))),
    }
}

fn kind(v: &Value) -> &'static str {
    match v {
        Value::Null => "null",
        Value::Bool(_) => "a boolean",
        Value::Number(_) => "a number",
        Value::String(_) => "a string",
        Value::Array(_) => "an array",
        Value::Object(_) => "an object",
    }
}

fn array<'a>(v: &'a Value, path: &str, len: Option<usize>) -> DocResult<&'a Vec<Value>> {
    let Value::Array(items) = v else {
        return Err(DocError::field(path, format!("expected an array, found {}", kind(v))));
    };
    if let Some(n) = len {
        if items.len() != n {
            return Err(DocError::field(path, format!("expected {n} entries, found {}", items.len())));
        }
    }
    Ok(items)
}

fn vector(v: &Value, path: &str, len: Option<usize>) -> DocResult<Vec<Rational>> {
    array(v, path, len)?
        .iter()
        .enumerate()
        .map(|(i, x)| rational(x, &format!("{path}[{i}]")))
        .collect()
}

/// A matrix given as rows; `shape` pins the expected size.
pub fn matrix(v: &Value, path: &str, shape: Option<(usize, usize)>) -> DocResult<Matrix> {
    let rows = array(v, path, shape.map(|s| s.0))?;
    let mut cols = shape.map(|s| s.1);
    let mut data = Vec::new();
    for (i, row) in rows.iter().enumerate() {
        let r = vector(row, &format!("{path}[{i}]"), cols)?;
        cols.get_or_insert(r.len());
        data.extend(r);
    }
    Matrix::new(rows.len(), cols.unwrap_or(0), data).map_err(|e| DocError::field(path, e.to_string()))
}

fn object<'a>(v: &'a Value, path: &str) -> DocResult<&'a Map<String, Value>> {
    v.as_object().ok_or_else(|| DocError::field(path, format!("expected an object, found {}", kind(v))))
}

fn required<'a>(obj: &'a Map<String, Value>, key: &str) -> DocResult<&'a Value> {
    obj.get(key).ok_or_else(|| DocError::field(key, "missing"))
}

fn count(obj: &Map<String, Value>, key: &str) -> DocResult<usize> {
    let v = required(obj, key)?;
    v.as_u64()
        .map(|n| n as usize)
        .ok_or_else(|| DocError::field(key, format!("expected a non-negative integer, found {}", kind(v))))
}

fn square_or_identity(obj: &Map<String, Value>, key: &str, n: usize) -> DocResult<Matrix> {
    match obj.get(key) {
        Some(v) => matrix(v, key, Some((n, n))),
        None => Ok(Matrix::identity(n)),
    }
}

fn tensor(v: &Value, path: &str, n: usize) -> DocResult<BilinearProduct> {
    let mut c = Vec::with_capacity(n * n * n);
    for (i, plane) in array(v, path, Some(n))?.iter().enumerate() {
        for (j, row) in array(plane, &format!("{path}[{i}]"), Some(n))?.iter().enumerate() {
            c.extend(vector(row, &format!("{path}[{i}][{j}]"), Some(n))?);
        }
    }
    BilinearProduct::new(n, c).map_err(|e| semantic(path, e))
}

fn matrices(v: &Value, path: &str, count: usize, m: usize) -> DocResult<Vec<Matrix>> {
    array(v, path, Some(count))?
        .iter()
        .enumerate()
        .map(|(i, x)| matrix(x, &format!("{path}[{i}]"), Some((m, m))))
        .collect()
}

fn twists(obj: &Map<String, Value>, n: usize) -> DocResult<TwistPair> {
    let alpha = square_or_identity(obj, "alpha", n)?;
    let beta = square_or_identity(obj, "beta", n)?;
    TwistPair::new(alpha, beta).map_err(|e| semantic("alpha/beta", e))
}

/// `{"dim", "product", "alpha", "beta"}`
pub fn parse_prelie(v: &Value) -> DocResult<BiHomPreLieAlgebra> {
    let obj = object(v, "$")?;
    let n = count(obj, "dim")?;
    let product = tensor(required(obj, "product")?, "product", n)?;
    BiHomPreLieAlgebra::new(product, twists(obj, n)?).map_err(|e| semantic("product", e))
}

/// `{"dim", "bracket", "alpha", "beta"}`
pub fn parse_lie(v: &Value) -> DocResult<BiHomLieAlgebra> {
    let obj = object(v, "$")?;
    let n = count(obj, "dim")?;
    let bracket = tensor(required(obj, "bracket")?, "bracket", n)?;
    BiHomLieAlgebra::new(bracket, twists(obj, n)?).map_err(|e| semantic("bracket", e))
}

/// Resolves the `"algebra"` entry of a representation: an inline document or
/// a path relative to `base`.
fn embedded(obj: &Map<String, Value>, base: &Path) -> DocResult<(Value, PathBuf)> {
    match required(obj, "algebra")? {
        Value::String(p) => {
            let path = base.join(p);
            let v = read_file(&path)?;
            let dir = path.parent().map(Path::to_path_buf).unwrap_or_default();
            Ok((v, dir))
        }
        v @ Value::Object(_) => Ok((v.clone(), base.to_path_buf())),
        other => Err(DocError::field("algebra", format!("expected an object or a path, found {}", kind(other)))),
    }
}

/// `{"algebra", "vdim", "L", "R", "phi", "psi"}`
pub fn parse_prelie_rep(v: &Value, base: &Path) -> DocResult<PreLieRep> {
    let obj = object(v, "$")?;
    let (doc, dir) = embedded(obj, base)?;
    let algebra = parse_prelie(&doc).map_err(|e| nest("algebra", e, &dir, base))?;
    let (n, m) = (algebra.dim(), count(obj, "vdim")?);
    let left = matrices(required(obj, "L")?, "L", n, m)?;
    let right = matrices(required(obj, "R")?, "R", n, m)?;
    let phi = square_or_identity(obj, "phi", m)?;
    let psi = square_or_identity(obj, "psi", m)?;
    PreLieRep::new(algebra, left, right, phi, psi).map_err(|e| semantic("phi/psi", e))
}

/// `{"algebra", "vdim", "rho", "phi", "psi"}`. The algebra may be a BiHom-Lie
/// document or a BiHom-pre-Lie document, which stands for its sub-adjacent
/// algebra.
pub fn parse_lie_rep(v: &Value, base: &Path) -> DocResult<LieRep> {
    let obj = object(v, "$")?;
    let (doc, dir) = embedded(obj, base)?;
    let algebra = parse_lie_or_subadjacent(&doc).map_err(|e| nest("algebra", e, &dir, base))?;
    let (n, m) = (algebra.dim(), count(obj, "vdim")?);
    let rho = matrices(required(obj, "rho")?, "rho", n, m)?;
    let phi = square_or_identity(obj, "phi", m)?;
    let psi = square_or_identity(obj, "psi", m)?;
    LieRep::new(algebra, rho, phi, psi).map_err(|e| semantic("phi/psi", e))
}

pub fn parse_lie_or_subadjacent(v: &Value) -> DocResult<BiHomLieAlgebra> {
    if v.get("product").is_some() {
        Ok(subadjacent(&parse_prelie(v)?))
    } else {
        parse_lie(v)
    }
}

fn nest(key: &str, mut e: DocError, dir: &Path, base: &Path) -> DocError {
    if e.file.is_none() && dir == base {
        e.location = e.location.replacen("field `", &format!("field `{key}."), 1);
    }
    e
}

/// The matrix of an operator document: `{"matrix"}` or `{"N"}`.
pub fn parse_operator(v: &Value) -> DocResult<Matrix> {
    let obj = object(v, "$")?;
    for key in ["matrix", "N"] {
        if let Some(m) = obj.get(key) {
            return matrix(m, key, None);
        }
    }
    Err(DocError::field("matrix", "missing (expected \"matrix\" or \"N\")"))
}

/// `{"pi"}` for an algebra of dimension `n`.
pub fn parse_deformation(v: &Value, n: usize) -> DocResult<BilinearProduct> {
    tensor(required(object(v, "$")?, "pi")?, "pi", n)
}

/// Twist maps for a Yau-twisted representation: `{"alpha","beta","phi","psi"}`.
pub struct TwistDoc {
    pub alpha: Matrix,
    pub beta: Matrix,
    pub phi: Matrix,
    pub psi: Matrix,
}

pub fn parse_twist_doc(v: &Value, n: usize, m: usize) -> DocResult<TwistDoc> {
    let obj = object(v, "$")?;
    Ok(TwistDoc {
        alpha: square_or_identity(obj, "alpha", n)?,
        beta: square_or_identity(obj, "beta", n)?,
        phi: square_or_identity(obj, "phi", m)?,
        psi: square_or_identity(obj, "psi", m)?,
    })
}

/// `{"degree", "tensor"}` with `tensor` nested `n` levels deep over the
/// algebra basis and then over the carrier basis.
pub fn parse_cochain(v: &Value, adim: usize, vdim: usize) -> DocResult<Cochain> {
    let obj = object(v, "$")?;
    let degree = count(obj, "degree")?;
    let mut data = Vec::new();
    flatten(required(obj, "tensor")?, "tensor", degree, adim, vdim, &mut data)?;
    Cochain::new(degree, adim, vdim, data).map_err(|e| semantic("tensor", e))
}

fn flatten(v: &Value, path: &str, depth: usize, adim: usize, vdim: usize, out: &mut Vec<Rational>) -> DocResult<()> {
    if depth == 0 {
        out.extend(vector(v, path, Some(vdim))?);
        return Ok(());
    }
    for (i, x) in array(v, path, Some(adim))?.iter().enumerate() {
        flatten(x, &format!("{path}[{i}]"), depth - 1, adim, vdim, out)?;
    }
    Ok(())
}

/// Pretty JSON with arrays of scalars kept on one line, so matrices read as
/// rows.
pub fn to_pretty(v: &Value) -> String {
    let mut out = String::new();
    write_pretty(v, 0, &mut out);
    out
}

fn is_flat(v: &Value) -> bool {
    match v {
        Value::Array(items) => items.iter().all(|x| !x.is_array() && !x.is_object()),
        Value::Object(_) => false,
        _ => true,
    }
}

fn write_pretty(v: &Value, indent: usize, out: &mut String) {
    let pad = |n: usize| "  ".repeat(n);
    match v {
        Value::Array(items) if is_flat(v) => {
            let parts: Vec<String> = items.iter().map(Value::to_string).collect();
            out.push('[');
            out.push_str(&parts.join(", "));
            out.push(']');
        }
        Value::Array(items) => {
            out.push_str("[\n");
            for (i, x) in items.iter().enumerate() {
                out.push_str(&pad(indent + 1));
                write_pretty(x, indent + 1, out);
                out.push_str(if i + 1 < items.len() { ",\n" } else { "\n" });
            }
            out.push_str(&pad(indent));
            out.push(']');
        }
        Value::Object(map) if map.is_empty() => out.push_str("{}"),
        Value::Object(map) => {
            out.push_str("{\n");
            for (i, (k, x)) in map.iter().enumerate() {
                out.push_str(&pad(indent + 1));
                out.push_str(&Value::String(k.clone()).to_string());
                out.push_str(": ");
                write_pretty(x, indent + 1, out);
                out.push_str(if i + 1 < map.len() { ",\n" } else { "\n" });
            }
            out.push_str(&pad(indent));
            out.push('}');
        }
        other => out.push_str(&other.to_string()),
    }
}

pub fn rational_to_json(r: &Rational) -> Value {
    match (r.is_integer(), r.numer().to_i64()) {
        (true, Some(i)) => json!(i),
        _ => json!(format_rational(r)),
    }
}

pub fn vector_to_json(v: &[Rational]) -> Value {
    Value::Array(v.iter().map(rational_to_json).collect())
}

pub fn matrix_to_json(m: &Matrix) -> Value {
    Value::Array((0..m.rows()).map(|i| vector_to_json(m.row(i))).collect())
}

fn tensor_to_json(p: &BilinearProduct) -> Value {
    let n = p.dim();
    Value::Array(
        (0..n)
            .map(|i| Value::Array((0..n).map(|j| vector_to_json(p.basis_product(i, j))).collect()))
            .collect(),
    )
}

fn matrices_to_json(ms: &[Matrix]) -> Value {
    Value::Array(ms.iter().map(matrix_to_json).collect())
}

pub fn prelie_to_json(a: &BiHomPreLieAlgebra) -> Value {
    json!({
        "dim": a.dim(),
        "product": tensor_to_json(a.product()),
        "alpha": matrix_to_json(a.alpha()),
        "beta": matrix_to_json(a.beta()),
    })
}

pub fn lie_to_json(g: &BiHomLieAlgebra) -> Value {
    json!({
        "dim": g.dim(),
        "bracket": tensor_to_json(g.bracket()),
        "alpha": matrix_to_json(g.alpha()),
        "beta": matrix_to_json(g.beta()),
    })
}

pub fn prelie_rep_to_json(r: &PreLieRep) -> Value {
    json!({
        "algebra": prelie_to_json(r.algebra()),
        "vdim": r.vdim(),
        "L": matrices_to_json(r.left()),
        "R": matrices_to_json(r.right()),
        "phi": matrix_to_json(r.phi()),
        "psi": matrix_to_json(r.psi()),
    })
}

pub fn lie_rep_to_json(r: &LieRep) -> Value {
    json!({
        "algebra": lie_to_json(r.algebra()),
        "vdim": r.vdim(),
        "rho": matrices_to_json(r.rho()),
        "phi": matrix_to_json(r.phi()),
        "psi": matrix_to_json(r.psi()),
    })
}

pub fn deformation_to_json(pi: &BilinearProduct) -> Value {
    json!({ "pi": tensor_to_json(pi) })
}

pub fn operator_to_json(m: &Matrix) -> Value {
    json!({ "matrix": matrix_to_json(m) })
}

pub fn cochain_to_json(f: &Cochain) -> Value {
    fn nest(f: &Cochain, prefix: &mut Vec<usize>) -> Value {
        if prefix.len() == f.degree() {
            return vector_to_json(f.at(prefix));
        }
        let items = (0..f.adim())
            .map(|i| {
                prefix.push(i);
                let v = nest(f, prefix);
                prefix.pop();
                v
            })
            .collect();
        Value::Array(items)
    }
    json!({ "degree": f.degree(), "tensor": nest(f, &mut Vec::new()) })
}

pub fn report_to_json(report: &AxiomReport) -> Value {
    Value::Array(
        report
            .violations
            .iter()
            .map(|v| {
                json!({
                    "axiom": v.axiom.name(),
                    "indices": v.indices,
                    "residual": vector_to_json(&v.residual),
                })
            })
            .collect(),
    )
}
