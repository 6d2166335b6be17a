//! JSON matrix files.

use std::fmt;
use std::fs;
use std::path::Path;

use oportho::{Field, Matrix, NormDescriptor, NormedElement, C64};
use serde::{Deserialize, Serialize};

#[derive(Debug)]
pub enum FileError {
    Io { path: String, message: String },
    Parse(String),
    Arity { row: usize, col: usize, field: &'static str },
    Dimensions { declared: (usize, usize), found: (usize, usize) },
    Norm(String),
}

impl fmt::Display for FileError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FileError::Io { path, message } => write!(f, "{path}: {message}"),
            FileError::Parse(m) => write!(f, "malformed matrix file: {m}"),
            FileError::Arity { row, col, field } => {
                write!(f, "entry ({row}, {col}) does not match field {field}")
            }
            FileError::Dimensions { declared, found } => write!(
                f,
                "declared {}x{} but entries are {}x{}",
                declared.0, declared.1, found.0, found.1
            ),
            FileError::Norm(m) => write!(f, "bad norm: {m}"),
        }
    }
}

impl std::error::Error for FileError {}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Entry {
    Real(f64),
    Complex([f64; 2]),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NormSpec {
    pub kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p: Option<f64>,
}

impl NormSpec {
    pub fn of(d: NormDescriptor) -> NormSpec {
        match d {
            NormDescriptor::OperatorTwo => NormSpec { kind: "operator".into(), p: None },
            NormDescriptor::SchattenP(p) => NormSpec { kind: "schatten".into(), p: Some(p) },
            NormDescriptor::VectorP(p) => NormSpec { kind: "vector-p".into(), p: Some(p) },
        }
    }

    pub fn descriptor(&self) -> Result<NormDescriptor, FileError> {
        parse_norm(&self.kind, self.p)
    }
}

/// `kind` is one of operator, schatten, vector-p; p defaults to 2.
pub fn parse_norm(kind: &str, p: Option<f64>) -> Result<NormDescriptor, FileError> {
    let p = p.unwrap_or(2.0);
    let d = match kind {
        "operator" => return Ok(NormDescriptor::OperatorTwo),
        "schatten" => NormDescriptor::schatten(p),
        "vector-p" | "vector" => NormDescriptor::vector(p),
        other => return Err(FileError::Norm(format!("unknown kind {other:?}"))),
    };
    d.map_err(|e| FileError::Norm(e.to_string()))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MatrixFile {
    pub field: String,
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<Vec<Entry>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub norm: Option<NormSpec>,
}

impl MatrixFile {
    pub fn from_matrix(m: &Matrix, norm: Option<NormDescriptor>) -> MatrixFile {
        let entries = (0..m.rows())
            .map(|i| {
                (0..m.cols())
                    .map(|j| {
                        let z = m.get(i, j);
                        match m.field() {
                            Field::Real => Entry::Real(z.re),
                            Field::Complex => Entry::Complex([z.re, z.im]),
                        }
                    })
                    .collect()
            })
            .collect();
        MatrixFile {
            field: field_name(m.field()).into(),
            rows: m.rows(),
            cols: m.cols(),
            entries,
            norm: norm.map(NormSpec::of),
        }
    }

    pub fn from_element(e: &NormedElement) -> MatrixFile {
        MatrixFile::from_matrix(e.value(), Some(e.descriptor()))
    }

    pub fn to_matrix(&self) -> Result<Matrix, FileError> {
        let field = match self.field.as_str() {
            "real" => Field::Real,
            "complex" => Field::Complex,
            other => return Err(FileError::Parse(format!("unknown field {other:?}"))),
        };
        let found_cols = self.entries.first().map_or(0, Vec::len);
        if self.entries.len() != self.rows || self.entries.iter().any(|r| r.len() != self.cols) {
            return Err(FileError::Dimensions {
                declared: (self.rows, self.cols),
                found: (self.entries.len(), found_cols),
            });
        }
        let mut data = Vec::with_capacity(self.rows * self.cols);
        for (i, row) in self.entries.iter().enumerate() {
            for (j, e) in row.iter().enumerate() {
                data.push(match (field, e) {
                    (Field::Real, Entry::Real(x)) => C64::new(*x, 0.0),
                    (Field::Complex, Entry::Complex([re, im])) => C64::new(*re, *im),
                    _ => return Err(FileError::Arity { row: i, col: j, field: field_name(field) }),
                });
            }
        }
        Matrix::from_entries(self.rows, self.cols, field, data).map_err(|e| FileError::Parse(e.to_string()))
    }

    /// Norm from the file, else operator for matrices and 2-norm for columns.
    pub fn default_norm(&self) -> Result<NormDescriptor, FileError> {
        match &self.norm {
            Some(spec) => spec.descriptor(),
            None if self.cols == 1 && self.rows > 1 => Ok(NormDescriptor::VectorP(2.0)),
            None => Ok(NormDescriptor::OperatorTwo),
        }
    }

    pub fn to_element(&self, norm: Option<NormDescriptor>) -> Result<NormedElement, FileError> {
        let norm = match norm {
            Some(n) => n,
            None => self.default_norm()?,
        };
        NormedElement::new(self.to_matrix()?, norm).map_err(|e| FileError::Norm(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("matrix files serialize")
    }

    pub fn parse(text: &str) -> Result<MatrixFile, FileError> {
        serde_json::from_str(text).map_err(|e| FileError::Parse(e.to_string()))
    }
}

pub fn field_name(f: Field) -> &'static str {
    match f {
        Field::Real => "real",
        Field::Complex => "complex",
    }
}

pub fn read_matrix_file(path: &Path) -> Result<MatrixFile, FileError> {
    let text = fs::read_to_string(path)
        .map_err(|e| FileError::Io { path: path.display().to_string(), message: e.to_string() })?;
    MatrixFile::parse(&text)
}

pub fn write_matrix_file(path: &Path, file: &MatrixFile) -> Result<(), FileError> {
    fs::write(path, file.to_json() + "\n")
        .map_err(|e| FileError::Io { path: path.display().to_string(), message: e.to_string() })
}
