//! JSON file formats.
//!
//! Scalars inside files are either JSON numbers (reals) or strings holding a
//! literal from [`crate::text`].
//!
//! | kind   | layout |
//! |--------|--------|
//! | vector | `["1+i2", "[1|0]e", 3]` |
//! | matrix | `{"rows": m, "cols": n, "entries": [[bicomplex, ..], ..]}` or `{"minus": [[complex, ..], ..], "plus": [[..]]}` |
//! | map    | `{"n": n, "m": m, "t1": [[complex, ..], ..], "t2": [[..]]}` (`t1`, `t2` are `m × n`) |
//! | basis  | `{"dim": n, "vectors": [[complex, ..], ..]}` |
//!
//! Matrices are always written in split form, with `rows` and `cols` included.

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::bicomplex::BiComplex;
use crate::complex::{self, Complex};
use crate::error::{Error, Result};
use crate::linalg::{Basis, CMatrix};
use crate::linmap::LinMap;
use crate::matrix::BCMatrix;
use crate::text::{self, Style};
use crate::vector::BCVector;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Literal {
    Number(f64),
    Text(String),
}

impl Literal {
    pub fn to_bicomplex(&self) -> Result<BiComplex> {
        match self {
            Literal::Number(x) => Ok(BiComplex::from_real(*x)),
            Literal::Text(s) => text::parse_bicomplex(s),
        }
    }

    pub fn to_complex(&self) -> Result<Complex> {
        match self {
            Literal::Number(x) => complex::checked(*x, 0.0),
            Literal::Text(s) => text::parse_complex(s),
        }
    }
}

fn invalid(msg: impl Into<String>) -> Error {
    Error::parse(0, msg)
}

fn from_json<'a, T: Deserialize<'a>>(src: &'a str) -> Result<T> {
    serde_json::from_str(src).map_err(|e| {
        Error::parse(
            e.column(),
            format!(
                "invalid JSON at line {}, column {}: {e}",
                e.line(),
                e.column()
            ),
        )
    })
}

fn complex_rows(rows: &[Vec<Literal>], what: &str) -> Result<Vec<Vec<Complex>>> {
    rows.iter()
        .map(|row| {
            row.iter()
                .map(Literal::to_complex)
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()
        .map_err(|e| invalid(format!("{what}: {e}")))
}

fn complex_matrix(rows: usize, cols: usize, data: &[Vec<Literal>], what: &str) -> Result<CMatrix> {
    if data.len() != rows || data.iter().any(|r| r.len() != cols) {
        return Err(invalid(format!("{what} is not {rows}x{cols}")));
    }
    let rows_c = complex_rows(data, what)?;
    CMatrix::from_vec(rows, cols, rows_c.into_iter().flatten().collect())
}

fn shape_of(data: &[Vec<Literal>]) -> (usize, usize) {
    (data.len(), data.first().map_or(0, Vec::len))
}

fn complex_json(m: &CMatrix) -> Value {
    Value::Array(
        (0..m.rows())
            .map(|i| {
                Value::Array(
                    m.row(i)
                        .iter()
                        .map(|&z| Value::String(text::format_complex(z)))
                        .collect(),
                )
            })
            .collect(),
    )
}

fn to_pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("JSON values always serialize")
}

pub fn parse_vector(src: &str) -> Result<BCVector> {
    let items: Vec<Literal> = from_json(src)?;
    items
        .iter()
        .map(Literal::to_bicomplex)
        .collect::<Result<BCVector>>()
}

pub fn vector_json(v: &BCVector, style: Style) -> Value {
    Value::Array(v.iter().map(|x| Value::String(style.format(x))).collect())
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawMatrix {
    rows: Option<usize>,
    cols: Option<usize>,
    entries: Option<Vec<Vec<Literal>>>,
    minus: Option<Vec<Vec<Literal>>>,
    plus: Option<Vec<Vec<Literal>>>,
}

pub fn parse_matrix(src: &str) -> Result<BCMatrix> {
    let raw: RawMatrix = from_json(src)?;
    let shape = |data: &[Vec<Literal>]| {
        let (r, c) = shape_of(data);
        (raw.rows.unwrap_or(r), raw.cols.unwrap_or(c))
    };
    match (&raw.entries, &raw.minus, &raw.plus) {
        (Some(entries), None, None) => {
            let (rows, cols) = shape(entries);
            if entries.len() != rows || entries.iter().any(|r| r.len() != cols) {
                return Err(invalid(format!("entries are not {rows}x{cols}")));
            }
            let values = entries
                .iter()
                .map(|row| {
                    row.iter()
                        .map(Literal::to_bicomplex)
                        .collect::<Result<Vec<_>>>()
                })
                .collect::<Result<Vec<_>>>()?;
            BCMatrix::from_entries(rows, cols, &values)
        }
        (None, Some(minus), Some(plus)) => {
            let (rows, cols) = shape(minus);
            BCMatrix::join(
                complex_matrix(rows, cols, minus, "minus")?,
                complex_matrix(rows, cols, plus, "plus")?,
            )
        }
        _ => Err(invalid(
            "matrix needs either \"entries\" or both \"minus\" and \"plus\"",
        )),
    }
}

/// Split form with explicit shape.
pub fn matrix_json(m: &BCMatrix) -> Value {
    json!({
        "rows": m.rows(),
        "cols": m.cols(),
        "minus": complex_json(m.minus()),
        "plus": complex_json(m.plus()),
    })
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawMap {
    n: usize,
    m: usize,
    t1: Vec<Vec<Literal>>,
    t2: Vec<Vec<Literal>>,
}

pub fn parse_map(src: &str) -> Result<LinMap> {
    let raw: RawMap = from_json(src)?;
    LinMap::new(
        complex_matrix(raw.m, raw.n, &raw.t1, "t1")?,
        complex_matrix(raw.m, raw.n, &raw.t2, "t2")?,
    )
}

pub fn map_json(t: &LinMap) -> Value {
    json!({
        "n": t.n(),
        "m": t.m(),
        "t1": complex_json(t.t1()),
        "t2": complex_json(t.t2()),
    })
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawBasis {
    dim: usize,
    vectors: Vec<Vec<Literal>>,
}

/// Parses and validates a basis; linear dependence is reported as [`Error::InvalidBasis`].
pub fn parse_basis(src: &str, pivot_tol: f64) -> Result<Basis> {
    let raw: RawBasis = from_json(src)?;
    let vectors = complex_matrix(raw.dim, raw.dim, &raw.vectors, "vectors")?;
    Basis::new(vectors.to_rows(), pivot_tol)
}

pub fn basis_json(b: &Basis) -> Value {
    let rows = CMatrix::from_rows(b.vectors()).expect("basis vectors share a length");
    json!({ "dim": b.dim(), "vectors": complex_json(&rows) })
}

pub fn to_string(v: &Value) -> String {
    to_pretty(v)
}
