//! Group specification files.
//!
//! ```json
//! {"field": {"kind": "finite", "p": 3, "modulus": [1, 0, 1]},
//!  "dim": 2,
//!  "generators": [[1, 1, 0, 1], ["a", 0, 0, "a^2"]],
//!  "cap": 10000}
//! ```
//!
//! Generators are row-major (a flat list of n² scalars or a list of rows).
//! Scalars are integers or strings: fractions "a/b", `z` for ζ_N in ℚ(ζ_N),
//! `a` for the fixed generator of a finite field, and sums and products of
//! those.

use serde::Deserialize;

use crate::error::{Error, Result};
use crate::exactnum::{Field, Scalar};
use crate::matgroup::{enumerate_group, FiniteMatrixGroup, Matrix, DEFAULT_CAP};
use crate::polyalg::parse_scalar;

/// Which subgroup plays the role of W in the analysis.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SubgroupChoice {
    /// W̃ in positive characteristic, W otherwise.
    #[default]
    Auto,
    W,
    Wtilde,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
enum FieldEntry {
    Rational,
    Cyclotomic { n: u64 },
    Finite { p: u64, modulus: Option<Vec<u64>> },
}

#[derive(Clone, Debug, Deserialize)]
#[serde(untagged)]
enum ScalarEntry {
    Int(i64),
    Text(String),
}

#[derive(Clone, Debug, Deserialize)]
#[serde(untagged)]
enum MatrixEntry {
    Flat(Vec<ScalarEntry>),
    Rows(Vec<Vec<ScalarEntry>>),
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct SpecFile {
    field: FieldEntry,
    dim: usize,
    generators: Vec<MatrixEntry>,
    cap: Option<usize>,
    max_degree: Option<u32>,
    #[serde(default)]
    subgroup: SubgroupChoice,
    #[serde(default)]
    assert_polynomial: bool,
}

/// Knobs of one analysis; file values can be overridden from the command line.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AnalysisOptions {
    pub max_degree: Option<u32>,
    pub subgroup: SubgroupChoice,
    pub assert_polynomial: bool,
}

#[derive(Clone, Debug)]
pub struct GroupSpec {
    pub field: Field,
    pub dim: usize,
    pub generators: Vec<Matrix>,
    pub cap: usize,
    pub options: AnalysisOptions,
}

fn field_of(e: &FieldEntry) -> Result<Field> {
    match e {
        FieldEntry::Rational => Ok(Field::rational()),
        FieldEntry::Cyclotomic { n } => Field::cyclotomic(*n),
        FieldEntry::Finite { p, modulus: None } => Field::prime(*p),
        FieldEntry::Finite { p, modulus: Some(m) } => Field::finite(*p, m.clone()),
    }
}

fn scalar_of(field: &Field, e: &ScalarEntry) -> Result<Scalar> {
    match e {
        ScalarEntry::Int(v) => Ok(field.from_int(*v)),
        ScalarEntry::Text(s) => parse_scalar(field, s),
    }
}

fn matrix_of(field: &Field, n: usize, e: &MatrixEntry) -> Result<Matrix> {
    let flat: Vec<&ScalarEntry> = match e {
        MatrixEntry::Flat(v) => v.iter().collect(),
        MatrixEntry::Rows(rows) => {
            if rows.len() != n || rows.iter().any(|r| r.len() != n) {
                return Err(Error::Parse(format!("generator is not {n}×{n}")));
            }
            rows.iter().flatten().collect()
        }
    };
    if flat.len() != n * n {
        return Err(Error::Parse(format!("generator has {} entries, expected {}", flat.len(), n * n)));
    }
    let data = flat.into_iter().map(|s| scalar_of(field, s)).collect::<Result<Vec<_>>>()?;
    Matrix::from_entries(field, n, data)
}

impl GroupSpec {
    pub fn from_json(text: &str) -> Result<GroupSpec> {
        let file: SpecFile = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        if file.dim == 0 {
            return Err(Error::Parse("dimension must be positive".into()));
        }
        if file.generators.is_empty() {
            return Err(Error::EmptyInput);
        }
        let field = field_of(&file.field)?;
        let generators =
            file.generators.iter().map(|g| matrix_of(&field, file.dim, g)).collect::<Result<Vec<_>>>()?;
        Ok(GroupSpec {
            field,
            dim: file.dim,
            generators,
            cap: file.cap.unwrap_or(DEFAULT_CAP),
            options: AnalysisOptions {
                max_degree: file.max_degree,
                subgroup: file.subgroup,
                assert_polynomial: file.assert_polynomial,
            },
        })
    }

    pub fn from_matrices(generators: Vec<Matrix>) -> Result<GroupSpec> {
        let first = generators.first().ok_or(Error::EmptyInput)?;
        Ok(GroupSpec {
            field: first.field().clone(),
            dim: first.dim(),
            cap: DEFAULT_CAP,
            options: AnalysisOptions::default(),
            generators,
        })
    }

    pub fn enumerate(&self) -> Result<FiniteMatrixGroup> {
        enumerate_group(&self.field, self.dim, &self.generators, self.cap)
    }
}
