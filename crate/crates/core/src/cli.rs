use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use bcx::io;
use bcx::text::{self, Style};
use bcx::{BCMatrix, BCVector, BasisPair, BiComplex, Class, Error, LinMap, Tolerances};

#[derive(Debug, Parser)]
#[command(
    name = "bcx",
    version,
    about = "Bicomplex linear algebra in idempotent form"
)]
pub struct Cli {
    /// Print bicomplex values in cartesian form a+bi1+ci2+di1i2
    #[arg(long, global = true)]
    pub cartesian: bool,

    /// Emit JSON instead of text
    #[arg(long, global = true)]
    pub json: bool,

    /// Relative pivot threshold for rank decisions
    #[arg(
        long,
        global = true,
        env = "BCX_TOL_PIVOT",
        value_name = "TOL",
        allow_negative_numbers = true
    )]
    pub tol_pivot: Option<f64>,

    /// Absolute modulus below which an idempotent component is zero
    #[arg(long, global = true, value_name = "TOL", allow_negative_numbers = true)]
    pub tol_zero: Option<f64>,

    /// Absolute residual bound
    #[arg(long, global = true, value_name = "TOL", allow_negative_numbers = true)]
    pub tol_resid: Option<f64>,

    #[command(subcommand)]
    pub command: Command,
}

/// Inputs shared by all verbs. Which combinations are legal depends on the verb.
#[derive(Debug, Args, Clone, Default)]
pub struct Operands {
    /// Inline literals; put `--` before any that start with `-i` or `-[`
    #[arg(allow_negative_numbers = true)]
    pub literals: Vec<String>,

    /// Bicomplex matrix file (repeatable)
    #[arg(long = "matrix", value_name = "FILE")]
    pub matrices: Vec<PathBuf>,

    /// Linear map file (repeatable)
    #[arg(long = "map", value_name = "FILE")]
    pub maps: Vec<PathBuf>,

    /// Bicomplex vector file
    #[arg(long = "vector", value_name = "FILE")]
    pub vectors: Vec<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Idempotent components of a scalar, vector or matrix
    Split(Operands),
    /// Bicomplex number from two complex components: join MINUS PLUS
    Join(Operands),
    /// Product of two scalars or two matrices
    Mul(Operands),
    /// Sum of two scalars, matrices or maps
    Add(Operands),
    /// Inverse of a scalar, matrix or map
    Inv(Operands),
    /// Determinant of a square matrix
    Det(Operands),
    /// Rank of a matrix or map
    Rank(Operands),
    /// Kernel basis of a map or matrix
    Kernel(Operands),
    /// Image basis of a map or matrix
    Image(Operands),
    /// Solve T(x) = rhs for a map or matrix
    Solve {
        #[command(flatten)]
        operands: Operands,
        /// Right-hand side vector file
        #[arg(long, value_name = "FILE")]
        rhs: PathBuf,
    },
    /// Matrix representation of a map relative to complex bases
    Repr {
        #[command(flatten)]
        operands: Operands,
        /// Domain basis file
        #[arg(long, value_name = "FILE")]
        b1: PathBuf,
        /// Codomain basis file (defaults to the domain basis)
        #[arg(long, value_name = "FILE")]
        b2: Option<PathBuf>,
    },
    /// Composition S∘T of two maps: compose --map S --map T
    Compose(Operands),
    /// Zero, zero divisor or invertible
    Classify(Operands),
}

#[derive(Debug)]
pub struct CliError {
    pub code: u8,
    pub kind: &'static str,
    pub message: String,
}

impl CliError {
    fn usage(message: impl Into<String>) -> Self {
        CliError {
            code: 2,
            kind: "usage",
            message: message.into(),
        }
    }

    fn io(path: &Path, err: std::io::Error) -> Self {
        CliError {
            code: 2,
            kind: "io",
            message: format!("{}: {err}", path.display()),
        }
    }

    pub fn to_json(&self) -> String {
        json!({ "error": self.kind, "message": self.message }).to_string()
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse { .. } | Error::InvalidArgument(_) => 2,
            _ => 1,
        };
        CliError {
            code,
            kind: e.kind(),
            message: e.to_string(),
        }
    }
}

type CliResult<T> = Result<T, CliError>;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Shape {
    Literals(usize),
    Matrices(usize),
    Maps(usize),
    Vectors(usize),
}

impl Operands {
    fn shape(&self) -> CliResult<Shape> {
        let counts = [
            (self.literals.len(), Shape::Literals(self.literals.len())),
            (self.matrices.len(), Shape::Matrices(self.matrices.len())),
            (self.maps.len(), Shape::Maps(self.maps.len())),
            (self.vectors.len(), Shape::Vectors(self.vectors.len())),
        ];
        let mut present = counts.iter().filter(|(n, _)| *n > 0);
        match (present.next(), present.next()) {
            (Some((_, s)), None) => Ok(*s),
            (None, _) => Err(CliError::usage("no operands given")),
            _ => Err(CliError::usage("operands must all be of one kind")),
        }
    }
}

fn read(path: &Path) -> CliResult<String> {
    fs::read_to_string(path).map_err(|e| CliError::io(path, e))
}

fn load_matrix(path: &Path) -> CliResult<BCMatrix> {
    Ok(io::parse_matrix(&read(path)?)?)
}

fn load_map(path: &Path) -> CliResult<LinMap> {
    Ok(io::parse_map(&read(path)?)?)
}

fn load_vector(path: &Path) -> CliResult<BCVector> {
    Ok(io::parse_vector(&read(path)?)?)
}

fn scalar(lit: &str) -> CliResult<BiComplex> {
    Ok(text::parse_bicomplex(lit)?)
}

struct Printer {
    style: Style,
    json: bool,
}

impl Printer {
    fn scalar(&self, x: &BiComplex) -> String {
        if self.json {
            json!({ "value": self.style.format(x) }).to_string()
        } else {
            self.style.format(x)
        }
    }

    fn matrix(&self, m: &BCMatrix) -> String {
        if self.json {
            io::to_string(&io::matrix_json(m))
        } else {
            text::format_rows(&m.to_entries(), self.style)
        }
    }

    fn vector(&self, v: &BCVector) -> String {
        if self.json {
            io::to_string(&io::vector_json(v, self.style))
        } else {
            text::format_row(v, self.style)
        }
    }

    fn vectors(&self, vs: &[BCVector]) -> String {
        if self.json {
            io::to_string(&Value::Array(
                vs.iter().map(|v| io::vector_json(v, self.style)).collect(),
            ))
        } else {
            let rows: Vec<Vec<BiComplex>> = vs.iter().map(|v| v.entries().to_vec()).collect();
            text::format_rows(&rows, self.style)
        }
    }

    fn map(&self, t: &LinMap) -> String {
        io::to_string(&io::map_json(t))
    }
}

fn check_positive(name: &str, value: f64, allow_zero: bool) -> CliResult<f64> {
    if value.is_finite() && (value > 0.0 || (allow_zero && value == 0.0)) {
        Ok(value)
    } else {
        Err(CliError::usage(format!(
            "{name} must be a finite positive number, got {value}"
        )))
    }
}

pub fn tolerances(cli: &Cli) -> CliResult<Tolerances> {
    let mut tol = Tolerances::default();
    if let Some(p) = cli.tol_pivot {
        tol = tol.with_pivot(check_positive("--tol-pivot", p, false)?);
    }
    if let Some(z) = cli.tol_zero {
        tol = tol.with_zero(check_positive("--tol-zero", z, true)?);
    }
    if let Some(r) = cli.tol_resid {
        tol = tol.with_resid(check_positive("--tol-resid", r, true)?);
    }
    Ok(tol)
}

fn class_name(c: Class) -> &'static str {
    match c {
        Class::Zero => "zero",
        Class::ZeroDivisor => "zero-divisor",
        Class::Invertible => "invertible",
    }
}

fn arity_error(verb: &str, expected: &str) -> CliError {
    CliError::usage(format!("{verb} expects {expected}"))
}

/// Runs one command and returns what goes to standard output.
pub fn run(cli: &Cli) -> CliResult<String> {
    let tol = tolerances(cli)?;
    let out = Printer {
        style: if cli.cartesian {
            Style::Cartesian
        } else {
            Style::Idempotent
        },
        json: cli.json,
    };

    match &cli.command {
        Command::Split(ops) => match ops.shape()? {
            Shape::Literals(1) => {
                let (minus, plus) = scalar(&ops.literals[0])?.split();
                let (minus, plus) = (text::format_complex(minus), text::format_complex(plus));
                Ok(if out.json {
                    json!({ "minus": minus, "plus": plus }).to_string()
                } else {
                    format!("minus = {minus}\nplus = {plus}")
                })
            }
            Shape::Vectors(1) => {
                let (minus, plus) = load_vector(&ops.vectors[0])?.split();
                let fmt = |v: Vec<bcx::Complex>| -> Vec<String> {
                    v.into_iter().map(text::format_complex).collect()
                };
                Ok(io::to_string(
                    &json!({ "minus": fmt(minus), "plus": fmt(plus) }),
                ))
            }
            Shape::Matrices(1) => Ok(io::to_string(&io::matrix_json(&load_matrix(
                &ops.matrices[0],
            )?))),
            _ => Err(arity_error("split", "one literal, --vector or --matrix")),
        },
        Command::Join(ops) => match ops.shape()? {
            Shape::Literals(2) => {
                let minus = text::parse_complex(&ops.literals[0])?;
                let plus = text::parse_complex(&ops.literals[1])?;
                Ok(out.scalar(&BiComplex::try_join(minus, plus)?))
            }
            _ => Err(arity_error("join", "two complex literals MINUS PLUS")),
        },
        Command::Mul(ops) => match ops.shape()? {
            Shape::Literals(2) => {
                Ok(out.scalar(&(scalar(&ops.literals[0])? * scalar(&ops.literals[1])?)))
            }
            Shape::Matrices(2) => {
                let a = load_matrix(&ops.matrices[0])?;
                let b = load_matrix(&ops.matrices[1])?;
                Ok(out.matrix(&a.try_mul(&b)?))
            }
            _ => Err(arity_error("mul", "two literals or two --matrix files")),
        },
        Command::Add(ops) => match ops.shape()? {
            Shape::Literals(2) => {
                Ok(out.scalar(&(scalar(&ops.literals[0])? + scalar(&ops.literals[1])?)))
            }
            Shape::Matrices(2) => {
                let a = load_matrix(&ops.matrices[0])?;
                let b = load_matrix(&ops.matrices[1])?;
                Ok(out.matrix(&a.try_add(&b)?))
            }
            Shape::Maps(2) => {
                let a = load_map(&ops.maps[0])?;
                let b = load_map(&ops.maps[1])?;
                Ok(out.map(&a.try_add(&b)?))
            }
            _ => Err(arity_error(
                "add",
                "two literals, two --matrix or two --map files",
            )),
        },
        Command::Inv(ops) => match ops.shape()? {
            Shape::Literals(1) => Ok(out.scalar(&scalar(&ops.literals[0])?.inverse(tol.zero)?)),
            Shape::Matrices(1) => Ok(out.matrix(&load_matrix(&ops.matrices[0])?.inverse(&tol)?)),
            Shape::Maps(1) => Ok(out.map(&load_map(&ops.maps[0])?.inverse(&tol)?)),
            _ => Err(arity_error("inv", "one literal, --matrix or --map")),
        },
        Command::Det(ops) => match ops.shape()? {
            Shape::Matrices(1) => Ok(out.scalar(&load_matrix(&ops.matrices[0])?.det()?)),
            _ => Err(arity_error("det", "one --matrix file")),
        },
        Command::Rank(ops) => {
            let (rank, nullity) = match ops.shape()? {
                Shape::Matrices(1) => {
                    let m = load_matrix(&ops.matrices[0])?;
                    let rank = m.rank(&tol);
                    (rank, 2 * m.cols() - rank)
                }
                Shape::Maps(1) => {
                    let t = load_map(&ops.maps[0])?;
                    (t.rank(&tol), t.nullity(&tol))
                }
                _ => return Err(arity_error("rank", "one --matrix or --map file")),
            };
            Ok(if out.json {
                json!({ "rank": rank, "nullity": nullity }).to_string()
            } else {
                rank.to_string()
            })
        }
        Command::Kernel(ops) => {
            let t = single_map(ops, "kernel")?;
            Ok(out.vectors(&t.kernel_basis(&tol)))
        }
        Command::Image(ops) => {
            let t = single_map(ops, "image")?;
            let image = t.image_basis(&tol);
            if out.json {
                let list = |vs: &[BCVector]| {
                    Value::Array(vs.iter().map(|v| io::vector_json(v, out.style)).collect())
                };
                Ok(io::to_string(&json!({
                    "basis": list(&image.vectors),
                    "preimages": list(&image.preimages),
                })))
            } else {
                Ok(out.vectors(&image.vectors))
            }
        }
        Command::Solve { operands, rhs } => {
            let t = single_map(operands, "solve")?;
            let rhs = load_vector(rhs)?;
            Ok(out.vector(&t.solve(&rhs, &tol)?))
        }
        Command::Repr { operands, b1, b2 } => {
            let t = match operands.shape()? {
                Shape::Maps(1) => load_map(&operands.maps[0])?,
                _ => return Err(arity_error("repr", "one --map file")),
            };
            let domain = io::parse_basis(&read(b1)?, tol.pivot)?;
            let codomain = match b2 {
                Some(p) => io::parse_basis(&read(p)?, tol.pivot)?,
                None => domain.clone(),
            };
            Ok(out.matrix(&t.matrix_rep(&BasisPair::new(domain, codomain))?))
        }
        Command::Compose(ops) => match ops.shape()? {
            Shape::Maps(2) => {
                let s = load_map(&ops.maps[0])?;
                let t = load_map(&ops.maps[1])?;
                Ok(out.map(&s.compose(&t)?))
            }
            _ => Err(arity_error("compose", "two --map files S and T")),
        },
        Command::Classify(ops) => match ops.shape()? {
            Shape::Literals(1) => {
                let class = class_name(scalar(&ops.literals[0])?.classify(tol.zero));
                Ok(if out.json {
                    json!({ "class": class }).to_string()
                } else {
                    class.to_owned()
                })
            }
            _ => Err(arity_error("classify", "one literal")),
        },
    }
}

/// A `--map` file, or a `--matrix` file read as the map `e1 M1 + e2 M2`.
fn single_map(ops: &Operands, verb: &str) -> CliResult<LinMap> {
    match ops.shape()? {
        Shape::Maps(1) => load_map(&ops.maps[0]),
        Shape::Matrices(1) => Ok(load_matrix(&ops.matrices[0])?.to_linmap()),
        _ => Err(arity_error(verb, "one --map or --matrix file")),
    }
}
