//! JSON interchange. Every decoder reports failures with a JSON-pointer
//! path into the document.
//!
//! Scalars are written as lowest-terms strings (`"-3/4"`, `"2"`); integers
//! are accepted on input as well.

use std::fmt;
use std::fs;
use std::path::Path;

use serde_json::{json, Map, Value};

use crate::algebra::Algebra;
use crate::cells::{FactOneCell, MonadMorphCell, WdlOneCell};
use crate::error::{Error, Result};
use crate::factorization::{wdl_of_fact, BilinFact};
use crate::gallery::bialgebra::{ModuleAlgebra, WeakBialgebra};
use crate::gallery::frobenius::FrobeniusStructure;
use crate::linalg::{format_scalar, parse_scalar, Mat, Scalar};
use crate::ore::{OrePoly, PQQuasiDerivation};
use crate::wdl::{Wdl, WreathProduct};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SchemaError {
    pub pointer: String,
    pub message: String,
}

impl fmt::Display for SchemaError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let at = if self.pointer.is_empty() { "/" } else { &self.pointer };
        write!(f, "schema error at {at}: {}", self.message)
    }
}

impl std::error::Error for SchemaError {}

pub type SchemaResult<T> = std::result::Result<T, SchemaError>;

pub fn schema_err(pointer: &str, message: impl Into<String>) -> SchemaError {
    SchemaError {
        pointer: pointer.to_string(),
        message: message.into(),
    }
}

/// Extends a JSON pointer by one reference token, escaping `~` and `/`.
pub fn child(pointer: &str, token: impl fmt::Display) -> String {
    let t = token.to_string().replace('~', "~0").replace('/', "~1");
    format!("{pointer}/{t}")
}

/// Values that can be stored as a JSON bundle.
pub trait Bundle: Sized {
    fn from_json_at(v: &Value, pointer: &str) -> SchemaResult<Self>;
    fn to_json(&self) -> Value;

    fn from_json(v: &Value) -> SchemaResult<Self> {
        Self::from_json_at(v, "")
    }
}

pub fn parse_bundle<T: Bundle>(text: &str) -> Result<T> {
    let v: Value = serde_json::from_str(text).map_err(|e| schema_err("", format!("invalid JSON: {e}")))?;
    Ok(T::from_json(&v)?)
}

pub fn load_bundle<T: Bundle>(path: impl AsRef<Path>) -> Result<T> {
    let text = read_text(path.as_ref())?;
    parse_bundle(&text)
}

pub fn save_bundle<T: Bundle>(value: &T, path: impl AsRef<Path>) -> Result<()> {
    write_json(&value.to_json(), path)
}

pub fn read_text(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::Io {
        path: path.display().to_string(),
        source: e,
    })
}

pub fn write_json(v: &Value, path: impl AsRef<Path>) -> Result<()> {
    let path = path.as_ref();
    let mut text = serde_json::to_string_pretty(v).expect("JSON values always serialize");
    text.push('\n');
    fs::write(path, text).map_err(|e| Error::Io {
        path: path.display().to_string(),
        source: e,
    })
}

// ---- primitive readers -------------------------------------------------

pub fn as_object<'a>(v: &'a Value, pointer: &str) -> SchemaResult<&'a Map<String, Value>> {
    v.as_object().ok_or_else(|| schema_err(pointer, "expected an object"))
}

pub fn as_array<'a>(v: &'a Value, pointer: &str) -> SchemaResult<&'a Vec<Value>> {
    v.as_array().ok_or_else(|| schema_err(pointer, "expected an array"))
}

pub fn field<'a>(v: &'a Value, key: &str, pointer: &str) -> SchemaResult<(&'a Value, String)> {
    let obj = as_object(v, pointer)?;
    let p = child(pointer, key);
    obj.get(key)
        .map(|x| (x, p.clone()))
        .ok_or_else(|| schema_err(&p, "missing field"))
}

pub fn opt_field<'a>(v: &'a Value, key: &str, pointer: &str) -> SchemaResult<Option<(&'a Value, String)>> {
    let obj = as_object(v, pointer)?;
    Ok(obj.get(key).filter(|x| !x.is_null()).map(|x| (x, child(pointer, key))))
}

pub fn as_count(v: &Value, pointer: &str) -> SchemaResult<usize> {
    v.as_u64()
        .map(|n| n as usize)
        .ok_or_else(|| schema_err(pointer, "expected a non-negative integer"))
}

pub fn scalar_from_json(v: &Value, pointer: &str) -> SchemaResult<Scalar> {
    let parsed = match v {
        Value::String(s) => parse_scalar(s),
        Value::Number(n) => n.as_i64().map(|i| Scalar::from_integer(i.into())),
        _ => None,
    };
    parsed.ok_or_else(|| schema_err(pointer, format!("expected a rational \"p/q\" or an integer, got {v}")))
}

pub fn scalar_to_json(x: &Scalar) -> Value {
    Value::String(format_scalar(x))
}

pub fn vector_from_json(v: &Value, pointer: &str, len: Option<usize>) -> SchemaResult<Vec<Scalar>> {
    let arr = as_array(v, pointer)?;
    if let Some(n) = len {
        if arr.len() != n {
            return Err(schema_err(pointer, format!("expected {n} entries, got {}", arr.len())));
        }
    }
    arr.iter()
        .enumerate()
        .map(|(i, x)| scalar_from_json(x, &child(pointer, i)))
        .collect()
}

pub fn vector_to_json(v: &[Scalar]) -> Value {
    Value::Array(v.iter().map(scalar_to_json).collect())
}

// ---- matrices ----------------------------------------------------------

pub fn mat_from_json(v: &Value, pointer: &str) -> SchemaResult<Mat> {
    let (r, rp) = field(v, "rows", pointer)?;
    let rows = as_count(r, &rp)?;
    let (c, cp) = field(v, "cols", pointer)?;
    let cols = as_count(c, &cp)?;
    let (e, ep) = field(v, "entries", pointer)?;
    let arr = as_array(e, &ep)?;
    if arr.len() != rows {
        return Err(schema_err(&ep, format!("expected {rows} rows, got {}", arr.len())));
    }
    let mut m = Mat::zeros(rows, cols);
    for (i, row) in arr.iter().enumerate() {
        let vals = vector_from_json(row, &child(&ep, i), Some(cols))?;
        for (j, x) in vals.into_iter().enumerate() {
            m.set(i, j, x);
        }
    }
    Ok(m)
}

/// Like [`mat_from_json`] but also checks the shape.
pub fn mat_from_json_shaped(v: &Value, pointer: &str, shape: (usize, usize)) -> SchemaResult<Mat> {
    let m = mat_from_json(v, pointer)?;
    if m.shape() != shape {
        return Err(schema_err(
            pointer,
            format!(
                "expected a {}x{} matrix, got {}x{}",
                shape.0,
                shape.1,
                m.rows(),
                m.cols()
            ),
        ));
    }
    Ok(m)
}

pub fn mat_to_json(m: &Mat) -> Value {
    let entries: Vec<Value> = (0..m.rows()).map(|i| vector_to_json(&m.row_vec(i))).collect();
    json!({"rows": m.rows(), "cols": m.cols(), "entries": entries})
}

impl Bundle for Mat {
    fn from_json_at(v: &Value, pointer: &str) -> SchemaResult<Self> {
        mat_from_json(v, pointer)
    }

    fn to_json(&self) -> Value {
        mat_to_json(self)
    }
}

// ---- algebras ----------------------------------------------------------

impl Bundle for Algebra {
    fn from_json_at(v: &Value, pointer: &str) -> SchemaResult<Self> {
        let (d, dp) = field(v, "dim", pointer)?;
        let dim = as_count(d, &dp)?;
        let basis = match opt_field(v, "basis", pointer)? {
            None => (0..dim).map(|i| format!("e{i}")).collect(),
            Some((b, bp)) => {
                let arr = as_array(b, &bp)?;
                if arr.len() != dim {
                    return Err(schema_err(&bp, format!("expected {dim} names, got {}", arr.len())));
                }
                arr.iter()
                    .enumerate()
                    .map(|(i, x)| {
                        x.as_str()
                            .map(str::to_string)
                            .ok_or_else(|| schema_err(&child(&bp, i), "expected a string"))
                    })
                    .collect::<SchemaResult<Vec<_>>>()?
            }
        };
        let (u, up) = field(v, "unit", pointer)?;
        let unit = vector_from_json(u, &up, Some(dim))?;
        let (m, mp) = field(v, "mult", pointer)?;
        let mut mult = Mat::zeros(dim, dim * dim);
        for (t, entry) in as_array(m, &mp)?.iter().enumerate() {
            let ep = child(&mp, t);
            let parts = as_array(entry, &ep)?;
            if parts.len() != 4 {
                return Err(schema_err(&ep, "expected [i, j, k, coefficient]"));
            }
            let mut idx = [0usize; 3];
            for (s, slot) in idx.iter_mut().enumerate() {
                let p = child(&ep, s);
                *slot = as_count(&parts[s], &p)?;
                if *slot >= dim {
                    return Err(schema_err(&p, format!("index {} out of range for dim {dim}", *slot)));
                }
            }
            let c = scalar_from_json(&parts[3], &child(&ep, 3))?;
            let col = idx[0] * dim + idx[1];
            let cur = mult.get(idx[2], col) + c;
            mult.set(idx[2], col, cur);
        }
        Algebra::new(basis, mult, Mat::column(&unit)).map_err(|e| schema_err(pointer, e.to_string()))
    }

    fn to_json(&self) -> Value {
        let n = self.dim();
        let mut mult = Vec::new();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let c = self.mult().get(k, i * n + j);
                    if !num_traits::Zero::is_zero(c) {
                        mult.push(json!([i, j, k, format_scalar(c)]));
                    }
                }
            }
        }
        json!({
            "dim": n,
            "basis": self.basis(),
            "unit": vector_to_json(&self.one()),
            "mult": mult,
        })
    }
}

pub fn algebra_field(v: &Value, key: &str, pointer: &str) -> SchemaResult<Algebra> {
    let (a, ap) = field(v, key, pointer)?;
    Algebra::from_json_at(a, &ap)
}

pub fn mat_field(v: &Value, key: &str, pointer: &str, shape: (usize, usize)) -> SchemaResult<Mat> {
    let (m, mp) = field(v, key, pointer)?;
    mat_from_json_shaped(m, &mp, shape)
}

pub fn vector_field(v: &Value, key: &str, pointer: &str, len: usize) -> SchemaResult<Vec<Scalar>> {
    let (x, xp) = field(v, key, pointer)?;
    vector_from_json(x, &xp, Some(len))
}

// ---- weak distributive laws ---------------------------------------------

impl Bundle for Wdl {
    fn from_json_at(v: &Value, pointer: &str) -> SchemaResult<Self> {
        let a = algebra_field(v, "A", pointer)?;
        let b = algebra_field(v, "B", pointer)?;
        let n = a.dim() * b.dim();
        let psi = mat_field(v, "psi", pointer, (n, n))?;
        Ok(Wdl { a, b, psi })
    }

    fn to_json(&self) -> Value {
        json!({"A": self.a.to_json(), "B": self.b.to_json(), "psi": mat_to_json(&self.psi)})
    }
}

// ---- factorizations -----------------------------------------------------

impl Bundle for BilinFact {
    fn from_json_at(v: &Value, pointer: &str) -> SchemaResult<Self> {
        let a = algebra_field(v, "A", pointer)?;
        let b = algebra_field(v, "B", pointer)?;
        let r = algebra_field(v, "R", pointer)?;
        let (da, db, dr) = (a.dim(), b.dim(), r.dim());
        let alpha = mat_field(v, "alpha", pointer, (dr, da))?;
        let beta = mat_field(v, "beta", pointer, (dr, db))?;
        let iota = mat_field(v, "iota", pointer, (db * da, dr))?;
        Ok(BilinFact {
            a,
            b,
            r,
            alpha,
            beta,
            iota,
        })
    }

    fn to_json(&self) -> Value {
        json!({
            "A": self.a.to_json(),
            "B": self.b.to_json(),
            "R": self.r.to_json(),
            "alpha": mat_to_json(&self.alpha),
            "beta": mat_to_json(&self.beta),
            "iota": mat_to_json(&self.iota),
        })
    }
}

/// The weak wreath product with its splitting and the maps `α`, `β`.
pub fn wreath_to_json(w: &WreathProduct) -> Value {
    json!({
        "law": w.wdl.to_json(),
        "psibar": mat_to_json(&w.psibar),
        "product": w.product.to_json(),
        "proj": mat_to_json(w.proj()),
        "incl": mat_to_json(w.incl()),
        "alpha": mat_to_json(&w.alpha.map),
        "beta": mat_to_json(&w.beta.map),
    })
}

// ---- 1-cells -------------------------------------------------------------

/// A 0-cell: a weak distributive law or a bilinear factorization.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Object {
    Wdl(Wdl),
    Fact(BilinFact),
}

impl Object {
    /// The law itself, or the law induced by the factorization.
    pub fn law(&self) -> Result<Wdl> {
        match self {
            Object::Wdl(w) => Ok(w.clone()),
            Object::Fact(f) => wdl_of_fact(f),
        }
    }

    fn factors(&self) -> (&Algebra, &Algebra) {
        match self {
            Object::Wdl(w) => (&w.a, &w.b),
            Object::Fact(f) => (&f.a, &f.b),
        }
    }
}

impl Bundle for Object {
    fn from_json_at(v: &Value, pointer: &str) -> SchemaResult<Self> {
        let obj = as_object(v, pointer)?;
        if obj.contains_key("psi") {
            Wdl::from_json_at(v, pointer).map(Object::Wdl)
        } else if obj.contains_key("iota") {
            BilinFact::from_json_at(v, pointer).map(Object::Fact)
        } else {
            Err(schema_err(
                pointer,
                "expected a law (\"psi\") or a factorization (\"iota\")",
            ))
        }
    }

    fn to_json(&self) -> Value {
        match self {
            Object::Wdl(w) => w.to_json(),
            Object::Fact(f) => f.to_json(),
        }
    }
}

/// A 1-cell `(V, ξ, ζ[, ρ])` together with its endpoints.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CellBundle {
    pub src: Object,
    pub dst: Object,
    pub v: usize,
    pub xi: Mat,
    pub zeta: Mat,
    pub rho: Option<Mat>,
}

impl CellBundle {
    pub fn from_wdl_cell(c: &WdlOneCell) -> Self {
        CellBundle {
            src: Object::Wdl(c.src.clone()),
            dst: Object::Wdl(c.dst.clone()),
            v: c.xi.v,
            xi: c.xi.xi.clone(),
            zeta: c.zeta.xi.clone(),
            rho: None,
        }
    }

    pub fn from_fact_cell(c: &FactOneCell) -> Self {
        CellBundle {
            src: Object::Fact(c.src.clone()),
            dst: Object::Fact(c.dst.clone()),
            v: c.xi.v,
            xi: c.xi.xi.clone(),
            zeta: c.zeta.xi.clone(),
            rho: Some(c.rho.xi.clone()),
        }
    }

    /// The cell between the endpoint laws.
    pub fn wdl_cell(&self) -> Result<WdlOneCell> {
        let (src, dst) = (self.src.law()?, self.dst.law()?);
        Ok(WdlOneCell {
            xi: MonadMorphCell::new(src.a.clone(), dst.a.clone(), self.v, self.xi.clone())?,
            zeta: MonadMorphCell::new(src.b.clone(), dst.b.clone(), self.v, self.zeta.clone())?,
            src,
            dst,
        })
    }

    /// The cell between factorizations; needs factorization endpoints and `ρ`.
    pub fn fact_cell(&self) -> Result<FactOneCell> {
        let (Object::Fact(src), Object::Fact(dst)) = (&self.src, &self.dst) else {
            return Err(Error::Shape("both endpoints must be factorizations".into()));
        };
        let rho = self
            .rho
            .clone()
            .ok_or_else(|| Error::Shape("a 1-cell of factorizations needs \"rho\"".into()))?;
        Ok(FactOneCell {
            xi: MonadMorphCell::new(src.a.clone(), dst.a.clone(), self.v, self.xi.clone())?,
            zeta: MonadMorphCell::new(src.b.clone(), dst.b.clone(), self.v, self.zeta.clone())?,
            rho: MonadMorphCell::new(src.r.clone(), dst.r.clone(), self.v, rho)?,
            src: src.clone(),
            dst: dst.clone(),
        })
    }

    /// Reads a cell whose `"src"`/`"dst"` are inline objects or paths,
    /// resolved relative to `base`.
    pub fn from_json_in(v: &Value, base: Option<&Path>) -> Result<Self> {
        let end = |key: &str| -> Result<Object> {
            let (x, xp) = field(v, key, "")?;
            match x {
                Value::String(rel) => {
                    let path = base.map_or_else(|| Path::new(rel).to_path_buf(), |b| b.join(rel));
                    load_bundle(path)
                }
                _ => Ok(Object::from_json_at(x, &xp)?),
            }
        };
        let src = end("src")?;
        let dst = end("dst")?;
        let (n, np) = field(v, "V", "")?;
        let dim = as_count(n, &np)?;
        let ((a1, b1), (a, b)) = (src.factors(), dst.factors());
        let xi = mat_field(v, "xi", "", (dim * a.dim(), a1.dim() * dim))?;
        let zeta = mat_field(v, "zeta", "", (dim * b.dim(), b1.dim() * dim))?;
        let rho = match opt_field(v, "rho", "")? {
            None => None,
            Some((r, rp)) => {
                let (Object::Fact(f1), Object::Fact(f)) = (&src, &dst) else {
                    return Err(schema_err(&rp, "\"rho\" needs factorization endpoints").into());
                };
                Some(mat_from_json_shaped(r, &rp, (dim * f.r.dim(), f1.r.dim() * dim))?)
            }
        };
        Ok(CellBundle {
            src,
            dst,
            v: dim,
            xi,
            zeta,
            rho,
        })
    }

    pub fn to_json(&self) -> Value {
        let mut out = json!({
            "src": self.src.to_json(),
            "dst": self.dst.to_json(),
            "V": self.v,
            "xi": mat_to_json(&self.xi),
            "zeta": mat_to_json(&self.zeta),
        });
        if let Some(r) = &self.rho {
            out["rho"] = mat_to_json(r);
        }
        out
    }
}

pub fn load_cell(path: impl AsRef<Path>) -> Result<CellBundle> {
    let path = path.as_ref();
    let v: Value = serde_json::from_str(&read_text(path)?).map_err(|e| schema_err("", format!("invalid JSON: {e}")))?;
    CellBundle::from_json_in(&v, path.parent())
}

// ---- gallery structures --------------------------------------------------

/// `{..Algebra, "comult": Mat, "counit": vector}`.
impl Bundle for WeakBialgebra {
    fn from_json_at(v: &Value, pointer: &str) -> SchemaResult<Self> {
        let h = Algebra::from_json_at(v, pointer)?;
        let n = h.dim();
        let comult = mat_field(v, "comult", pointer, (n * n, n))?;
        let counit = Mat::row(&vector_field(v, "counit", pointer, n)?);
        Ok(WeakBialgebra { h, comult, counit })
    }

    fn to_json(&self) -> Value {
        let mut out = self.h.to_json();
        out["comult"] = mat_to_json(&self.comult);
        out["counit"] = vector_to_json(&self.counit.row_vec(0));
        out
    }
}

/// `{..Algebra, "frobenius_functional": vector, "frobenius_pairs": [[e, f], ..]}`.
impl Bundle for FrobeniusStructure {
    fn from_json_at(v: &Value, pointer: &str) -> SchemaResult<Self> {
        let r = Algebra::from_json_at(v, pointer)?;
        let n = r.dim();
        let functional = Mat::row(&vector_field(v, "frobenius_functional", pointer, n)?);
        let (ps, pp) = field(v, "frobenius_pairs", pointer)?;
        let pairs = as_array(ps, &pp)?
            .iter()
            .enumerate()
            .map(|(i, pair)| {
                let ip = child(&pp, i);
                match as_array(pair, &ip)?.as_slice() {
                    [e, f] => Ok((
                        vector_from_json(e, &child(&ip, 0), Some(n))?,
                        vector_from_json(f, &child(&ip, 1), Some(n))?,
                    )),
                    _ => Err(schema_err(&ip, "expected a pair [e, f]")),
                }
            })
            .collect::<SchemaResult<Vec<_>>>()?;
        Ok(FrobeniusStructure::from_pairs(r, functional, &pairs))
    }

    fn to_json(&self) -> Value {
        let n = self.r.dim();
        let pairs: Vec<Value> = (0..n)
            .filter_map(|i| {
                let f: Vec<Scalar> = self.element[i * n..(i + 1) * n].to_vec();
                (!f.iter().all(num_traits::Zero::is_zero))
                    .then(|| json!([vector_to_json(&self.r.basis_elem(i)), vector_to_json(&f)]))
            })
            .collect();
        let mut out = self.r.to_json();
        out["frobenius_functional"] = vector_to_json(&self.functional.row_vec(0));
        out["frobenius_pairs"] = Value::Array(pairs);
        out
    }
}

/// `{"A": Algebra, "action": Mat}` with `action: A⊗H → A`.
impl Bundle for ModuleAlgebra {
    fn from_json_at(v: &Value, pointer: &str) -> SchemaResult<Self> {
        let a = algebra_field(v, "A", pointer)?;
        let (m, mp) = field(v, "action", pointer)?;
        let action = mat_from_json(m, &mp)?;
        if action.rows() != a.dim() || a.dim() == 0 || action.cols() % a.dim() != 0 {
            return Err(schema_err(
                &mp,
                format!("expected a {} x ({}·dim H) matrix", a.dim(), a.dim()),
            ));
        }
        Ok(ModuleAlgebra { a, action })
    }

    fn to_json(&self) -> Value {
        json!({"A": self.a.to_json(), "action": mat_to_json(&self.action)})
    }
}

// ---- Ore extensions ------------------------------------------------------

impl Bundle for PQQuasiDerivation {
    fn from_json_at(v: &Value, pointer: &str) -> SchemaResult<Self> {
        let b = algebra_field(v, "B", pointer)?;
        let n = b.dim();
        Ok(PQQuasiDerivation {
            p: vector_field(v, "p", pointer, n)?,
            q: vector_field(v, "q", pointer, n)?,
            sigma: mat_field(v, "sigma", pointer, (n, n))?,
            delta: mat_field(v, "delta", pointer, (n, n))?,
            b,
        })
    }

    fn to_json(&self) -> Value {
        json!({
            "B": self.b.to_json(),
            "p": vector_to_json(&self.p),
            "q": vector_to_json(&self.q),
            "sigma": mat_to_json(&self.sigma),
            "delta": mat_to_json(&self.delta),
        })
    }
}

/// A polynomial `Σ bₙ⊗Xⁿ` as the list of coefficient vectors `[b₀, b₁, ..]`.
pub fn orepoly_from_json(v: &Value, pointer: &str, dim: usize) -> SchemaResult<OrePoly> {
    let coeffs = as_array(v, pointer)?
        .iter()
        .enumerate()
        .map(|(i, c)| vector_from_json(c, &child(pointer, i), Some(dim)))
        .collect::<SchemaResult<Vec<_>>>()?;
    OrePoly::from_coeffs(dim, coeffs).map_err(|e| schema_err(pointer, e.to_string()))
}

pub fn orepoly_to_json(f: &OrePoly) -> Value {
    Value::Array(f.coeffs().iter().map(|c| vector_to_json(c)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rat;

    #[test]
    fn matrix_roundtrip_and_integers() {
        let v = json!({"rows": 1, "cols": 2, "entries": [[1, "-3/6"]]});
        let m = mat_from_json(&v, "").unwrap();
        assert_eq!(m.get(0, 1), &rat(-1, 2));
        assert_eq!(mat_to_json(&m)["entries"][0][1], json!("-1/2"));
        assert_eq!(mat_from_json(&mat_to_json(&m), "").unwrap(), m);
    }

    #[test]
    fn bad_scalar_reports_pointer() {
        let v = json!({"dim": 1, "unit": ["1"], "mult": [[0, 0, 0, "x/2"]]});
        let err = Algebra::from_json(&v).unwrap_err();
        assert_eq!(err.pointer, "/mult/0/3");
        let v = json!({"rows": 1, "cols": 1, "entries": [["1/0"]]});
        assert_eq!(mat_from_json(&v, "/psi").unwrap_err().pointer, "/psi/entries/0/0");
    }

    #[test]
    fn algebra_roundtrip() {
        let a = Algebra::upper_triangular();
        assert_eq!(Algebra::from_json(&a.to_json()).unwrap(), a);
    }

    #[test]
    fn pqqd_roundtrip() {
        let d = PQQuasiDerivation::upper_triangular_example();
        assert_eq!(PQQuasiDerivation::from_json(&d.to_json()).unwrap(), d);
    }

    #[test]
    fn frobenius_and_bialgebra_roundtrip() {
        let s = FrobeniusStructure::diagonal(2);
        assert_eq!(FrobeniusStructure::from_json(&s.to_json()).unwrap(), s);
        let w = WeakBialgebra::pair_groupoid(2);
        assert_eq!(WeakBialgebra::from_json(&w.to_json()).unwrap(), w);
        let m = ModuleAlgebra::pair_objects(2);
        assert_eq!(ModuleAlgebra::from_json(&m.to_json()).unwrap(), m);
    }

    #[test]
    fn cell_with_inline_objects() {
        let w = Wdl::flip(&Algebra::group_z2(), &Algebra::ground());
        let c = crate::cells::WdlOneCell::identity(&w);
        let b = CellBundle::from_wdl_cell(&c);
        let back = CellBundle::from_json_in(&b.to_json(), None).unwrap();
        assert_eq!(back.wdl_cell().unwrap(), c);
        assert!(back.fact_cell().is_err());
    }

    #[test]
    fn orepoly_shape_is_checked() {
        let v = json!([["1", 0, 0], [0, 1]]);
        assert_eq!(orepoly_from_json(&v, "/f", 3).unwrap_err().pointer, "/f/1");
    }

    #[test]
    fn pointer_escaping() {
        assert_eq!(child("/a", "x/y~z"), "/a/x~1y~0z");
    }
}
