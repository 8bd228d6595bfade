//! JSON encoding of every public structure.
//!
//! Exact slots hold rationals as strings `"p"` or `"p/q"`; plain JSON
//! integers are accepted on input, fractional or exponent numbers are
//! rejected. Matrices are arrays of rows. A tensor with argument dimensions
//! `[d1, .., dk]` and output dimension `n` is nested `k + 1` deep:
//! `t[i1]..[ik]` is the output vector on the basis tuple `(e_i1, .., e_ik)`.
//! Schema violations report a JSON path such as `$.l2_00[1][0]`.

use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::exactlin::{parse_rational, FloatMatrix, Matrix, Rational, Tensor, Vector};
use crate::gradedend::TwoTermComplex;
use crate::group2::{K0Element, K1Element};
use crate::lie2::{CrossedModuleAlg, Lie2Algebra, Lie2Morphism, LieAlgebra};
use crate::rephomotopy::RepUpToHomotopy;

fn err(path: &str, message: impl Into<String>) -> Error {
    Error::Schema { path: path.to_string(), message: message.into() }
}

/// Types with a JSON form.
pub trait JsonCodec: Sized {
    fn to_json(&self) -> Value;
    fn from_json(v: &Value) -> Result<Self>;
}

pub fn load<T: JsonCodec>(text: &str) -> Result<T> {
    let v: Value = serde_json::from_str(text).map_err(|e| err("$", format!("invalid JSON: {e}")))?;
    T::from_json(&v)
}

pub fn save<T: JsonCodec>(t: &T) -> String {
    serde_json::to_string_pretty(&t.to_json()).expect("values serialize")
}

pub fn rational_to_json(r: &Rational) -> Value {
    Value::String(r.to_string())
}

pub fn rational_from_json(v: &Value, path: &str) -> Result<Rational> {
    match v {
        Value::String(s) => parse_rational(s).map_err(|m| err(path, m)),
        Value::Number(n) if n.is_i64() || n.is_u64() => {
            parse_rational(&n.to_string()).map_err(|m| err(path, m))
        }
        Value::Number(n) => Err(err(path, format!("float {n} in an exact slot; write it as a \"p/q\" string"))),
        other => Err(err(path, format!("expected a rational, got {other}"))),
    }
}

fn array<'a>(v: &'a Value, path: &str, len: Option<usize>) -> Result<&'a Vec<Value>> {
    let a = v.as_array().ok_or_else(|| err(path, format!("expected an array, got {v}")))?;
    match len {
        Some(n) if a.len() != n => Err(err(path, format!("expected {n} entries, got {}", a.len()))),
        _ => Ok(a),
    }
}

pub fn vector_to_json(v: &[Rational]) -> Value {
    Value::Array(v.iter().map(rational_to_json).collect())
}

pub fn vector_from_json(v: &Value, path: &str, len: Option<usize>) -> Result<Vector> {
    array(v, path, len)?.iter().enumerate().map(|(i, x)| rational_from_json(x, &format!("{path}[{i}]"))).collect()
}

pub fn matrix_to_json(m: &Matrix) -> Value {
    Value::Array((0..m.rows()).map(|i| vector_to_json(&m.row(i))).collect())
}

/// Rows and columns must match `rows x cols`.
pub fn matrix_from_json(v: &Value, path: &str, rows: usize, cols: usize) -> Result<Matrix> {
    let rs = array(v, path, Some(rows))?;
    let data = rs
        .iter()
        .enumerate()
        .map(|(i, r)| vector_from_json(r, &format!("{path}[{i}]"), Some(cols)))
        .collect::<Result<Vec<_>>>()?;
    Ok(Matrix::from_rows(data, cols).expect("row lengths checked"))
}

/// A matrix whose shape is read from the data; needs at least one row.
pub fn matrix_from_json_any(v: &Value, path: &str) -> Result<Matrix> {
    let rs = array(v, path, None)?;
    let cols = rs.first().map(|r| array(r, &format!("{path}[0]"), None).map(Vec::len)).transpose()?.unwrap_or(0);
    matrix_from_json(v, path, rs.len(), cols)
}

pub fn float_matrix_to_json(m: &FloatMatrix) -> Value {
    Value::Array((0..m.rows()).map(|i| Value::Array((0..m.cols()).map(|j| json!(m.get(i, j))).collect())).collect())
}

pub fn float_matrix_from_json(v: &Value, path: &str) -> Result<FloatMatrix> {
    let rs = array(v, path, None)?;
    let cols = rs.first().and_then(Value::as_array).map(Vec::len).unwrap_or(0);
    let mut data = Vec::new();
    for (i, r) in rs.iter().enumerate() {
        for (j, x) in array(r, &format!("{path}[{i}]"), Some(cols))?.iter().enumerate() {
            let f = x.as_f64().filter(|f| f.is_finite()).ok_or_else(|| err(&format!("{path}[{i}][{j}]"), "expected a finite number"))?;
            data.push(f);
        }
    }
    Ok(FloatMatrix::from_flat(rs.len(), cols, data))
}

pub fn tensor_to_json(t: &Tensor) -> Value {
    fn go(t: &Tensor, prefix: &mut Vec<usize>) -> Value {
        if prefix.len() == t.arity() {
            return vector_to_json(t.at(prefix));
        }
        let n = t.dims()[prefix.len()];
        Value::Array(
            (0..n)
                .map(|i| {
                    prefix.push(i);
                    let v = go(t, prefix);
                    prefix.pop();
                    v
                })
                .collect(),
        )
    }
    go(t, &mut Vec::new())
}

pub fn tensor_from_json(v: &Value, path: &str, dims: &[usize], out: usize) -> Result<Tensor> {
    fn go(v: &Value, path: &str, dims: &[usize], out: usize, t: &mut Tensor, prefix: &mut Vec<usize>) -> Result<()> {
        if prefix.len() == dims.len() {
            let x = vector_from_json(v, path, Some(out))?;
            t.set(prefix, &x);
            return Ok(());
        }
        for (i, w) in array(v, path, Some(dims[prefix.len()]))?.iter().enumerate() {
            prefix.push(i);
            go(w, &format!("{path}[{i}]"), dims, out, t, prefix)?;
            prefix.pop();
        }
        Ok(())
    }
    let mut t = Tensor::zeros(dims, out);
    go(v, path, dims, out, &mut t, &mut Vec::new())?;
    Ok(t)
}

fn object<'a>(v: &'a Value, path: &str) -> Result<&'a Map<String, Value>> {
    v.as_object().ok_or_else(|| err(path, format!("expected an object, got {v}")))
}

fn field<'a>(o: &'a Map<String, Value>, key: &str, path: &str) -> Result<&'a Value> {
    o.get(key).ok_or_else(|| err(path, format!("missing field {key:?}")))
}

fn dim(o: &Map<String, Value>, key: &str, path: &str) -> Result<usize> {
    let v = field(o, key, path)?;
    v.as_u64().map(|n| n as usize).ok_or_else(|| err(&format!("{path}.{key}"), format!("expected a dimension, got {v}")))
}

fn sub(path: &str, key: &str) -> String {
    format!("{path}.{key}")
}

fn complex_at(v: &Value, path: &str) -> Result<TwoTermComplex> {
    let o = object(v, path)?;
    let (n1, n0) = (dim(o, "dimV1", path)?, dim(o, "dimV0", path)?);
    let d = matrix_from_json(field(o, "d", path)?, &sub(path, "d"), n0, n1)?;
    Ok(TwoTermComplex::new(d))
}

impl JsonCodec for TwoTermComplex {
    fn to_json(&self) -> Value {
        json!({"dimV1": self.dim_v1(), "dimV0": self.dim_v0(), "d": matrix_to_json(self.d())})
    }

    fn from_json(v: &Value) -> Result<Self> {
        complex_at(v, "$")
    }
}

fn lie_at(v: &Value, path: &str) -> Result<LieAlgebra> {
    LieAlgebra::new(bracket_at(v, path)?.1)
}

/// `{"dim": n, "bracket": [n][n][n]}`, with no Jacobi requirement.
pub fn bracket_at(v: &Value, path: &str) -> Result<(usize, Tensor)> {
    let o = object(v, path)?;
    let n = dim(o, "dim", path)?;
    Ok((n, tensor_from_json(field(o, "bracket", path)?, &sub(path, "bracket"), &[n, n], n)?))
}

pub fn bracket_to_json(t: &Tensor) -> Value {
    json!({"dim": t.out_dim(), "bracket": tensor_to_json(t)})
}

impl JsonCodec for LieAlgebra {
    fn to_json(&self) -> Value {
        bracket_to_json(self.tensor())
    }

    fn from_json(v: &Value) -> Result<Self> {
        lie_at(v, "$")
    }
}

impl JsonCodec for Lie2Algebra {
    fn to_json(&self) -> Value {
        json!({
            "complex": self.complex().to_json(),
            "l2_00": tensor_to_json(self.l2_00()),
            "l2_01": tensor_to_json(self.l2_01()),
            "l3": tensor_to_json(self.l3()),
        })
    }

    fn from_json(v: &Value) -> Result<Self> {
        let o = object(v, "$")?;
        let c = complex_at(field(o, "complex", "$")?, "$.complex")?;
        let (n0, n1) = (c.dim_v0(), c.dim_v1());
        let l2_00 = tensor_from_json(field(o, "l2_00", "$")?, "$.l2_00", &[n0, n0], n0)?;
        let l2_01 = tensor_from_json(field(o, "l2_01", "$")?, "$.l2_01", &[n0, n1], n1)?;
        let l3 = match o.get("l3") {
            Some(t) => tensor_from_json(t, "$.l3", &[n0, n0, n0], n1)?,
            None => Tensor::zeros(&[n0, n0, n0], n1),
        };
        Lie2Algebra::new(c, l2_00, l2_01, l3)
    }
}

impl JsonCodec for CrossedModuleAlg {
    fn to_json(&self) -> Value {
        json!({
            "dimH1": self.dim_h1(),
            "dimH0": self.dim_h0(),
            "bracket_h1": tensor_to_json(self.bracket_h1_tensor()),
            "bracket_h0": tensor_to_json(self.bracket_h0_tensor()),
            "dt": matrix_to_json(self.dt()),
            "phi": tensor_to_json(self.phi_tensor()),
        })
    }

    fn from_json(v: &Value) -> Result<Self> {
        let o = object(v, "$")?;
        let (h1, h0) = (dim(o, "dimH1", "$")?, dim(o, "dimH0", "$")?);
        CrossedModuleAlg::new(
            tensor_from_json(field(o, "bracket_h1", "$")?, "$.bracket_h1", &[h1, h1], h1)?,
            tensor_from_json(field(o, "bracket_h0", "$")?, "$.bracket_h0", &[h0, h0], h0)?,
            matrix_from_json(field(o, "dt", "$")?, "$.dt", h0, h1)?,
            tensor_from_json(field(o, "phi", "$")?, "$.phi", &[h0, h1], h1)?,
        )
    }
}

impl JsonCodec for RepUpToHomotopy {
    fn to_json(&self) -> Value {
        json!({
            "g": self.g().to_json(),
            "complex": self.complex().to_json(),
            "mu0": tensor_to_json(self.mu0_tensor()),
            "mu1": tensor_to_json(self.mu1_tensor()),
            "nu": tensor_to_json(self.nu_tensor()),
        })
    }

    fn from_json(v: &Value) -> Result<Self> {
        let o = object(v, "$")?;
        let g = lie_at(field(o, "g", "$")?, "$.g")?;
        let c = complex_at(field(o, "complex", "$")?, "$.complex")?;
        let (k, n0, n1) = (g.dim(), c.dim_v0(), c.dim_v1());
        let mu0 = tensor_from_json(field(o, "mu0", "$")?, "$.mu0", &[k, n0], n0)?;
        let mu1 = tensor_from_json(field(o, "mu1", "$")?, "$.mu1", &[k, n1], n1)?;
        let nu = match o.get("nu") {
            Some(t) => tensor_from_json(t, "$.nu", &[k, k, n0], n1)?,
            None => Tensor::zeros(&[k, k, n0], n1),
        };
        RepUpToHomotopy::new(g, c, mu0, mu1, nu)
    }
}

impl JsonCodec for Lie2Morphism {
    fn to_json(&self) -> Value {
        json!({
            "srcDim0": self.f0().cols(),
            "srcDim1": self.f1().cols(),
            "dstDim0": self.f0().rows(),
            "dstDim1": self.f1().rows(),
            "f0": matrix_to_json(self.f0()),
            "f1": matrix_to_json(self.f1()),
            "f2": tensor_to_json(self.f2()),
        })
    }

    fn from_json(v: &Value) -> Result<Self> {
        let o = object(v, "$")?;
        let (s0, s1) = (dim(o, "srcDim0", "$")?, dim(o, "srcDim1", "$")?);
        let (t0, t1) = (dim(o, "dstDim0", "$")?, dim(o, "dstDim1", "$")?);
        let f0 = matrix_from_json(field(o, "f0", "$")?, "$.f0", t0, s0)?;
        let f1 = matrix_from_json(field(o, "f1", "$")?, "$.f1", t1, s1)?;
        let f2 = match o.get("f2") {
            Some(t) => tensor_from_json(t, "$.f2", &[s0, s0], t1)?,
            None => Tensor::zeros(&[s0, s0], t1),
        };
        Lie2Morphism::new(f0, f1, f2)
    }
}

/// `{"complex": .., "M": matrix}`.
pub fn k1_to_json(c: &TwoTermComplex, m: &K1Element) -> Value {
    json!({"complex": c.to_json(), "M": matrix_to_json(m.matrix())})
}

pub fn k1_from_json(v: &Value) -> Result<(TwoTermComplex, K1Element)> {
    let o = object(v, "$")?;
    let c = complex_at(field(o, "complex", "$")?, "$.complex")?;
    let m = matrix_from_json(field(o, "M", "$")?, "$.M", c.dim_v1(), c.dim_v0())?;
    let k = K1Element::new(&c, m)?;
    Ok((c, k))
}

/// `{"complex": .., "B0": matrix, "B1": matrix}`.
pub fn k0_to_json(c: &TwoTermComplex, k: &K0Element) -> Value {
    json!({"complex": c.to_json(), "B0": matrix_to_json(k.b0()), "B1": matrix_to_json(k.b1())})
}

pub fn k0_from_json(v: &Value) -> Result<(TwoTermComplex, K0Element)> {
    let o = object(v, "$")?;
    let c = complex_at(field(o, "complex", "$")?, "$.complex")?;
    let b0 = matrix_from_json(field(o, "B0", "$")?, "$.B0", c.dim_v0(), c.dim_v0())?;
    let b1 = matrix_from_json(field(o, "B1", "$")?, "$.B1", c.dim_v1(), c.dim_v1())?;
    let k = K0Element::new(&c, b0, b1)?;
    Ok((c, k))
}

/// `{"dim": n, "basis": [[..], ..]}`: spanning vectors of a subspace of
/// `Q^n`, returned as the columns of a matrix.
pub fn subspace_from_json(v: &Value) -> Result<Matrix> {
    let o = object(v, "$")?;
    let n = dim(o, "dim", "$")?;
    let cols = array(field(o, "basis", "$")?, "$.basis", None)?
        .iter()
        .enumerate()
        .map(|(i, c)| vector_from_json(c, &format!("$.basis[{i}]"), Some(n)))
        .collect::<Result<Vec<_>>>()?;
    Ok(Matrix::from_columns(&cols, n))
}

pub fn subspace_to_json(m: &Matrix) -> Value {
    json!({"dim": m.rows(), "basis": m.columns().iter().map(|c| vector_to_json(c)).collect::<Vec<_>>()})
}
