//! JSON problem files.
//!
//! Scalar entries are strings (`"2"`, `"-3/4"`) or `{"re", "im"}` pairs so
//! nothing ever passes through floating point. The schema is versioned
//! via a top-level `"schema": 1` field.

use std::path::Path;

use serde::Deserialize;

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::scalar::{Field, Scalar, ScalarLiteral};
use crate::structure::StructureSpec;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemFile {
    #[serde(default = "default_schema")]
    pub schema: u32,
    pub field: Field,
    pub basis: Vec<String>,
    pub gram: Vec<Vec<ScalarLiteral>>,
    pub operator: Vec<Vec<ScalarLiteral>>,
    #[serde(default)]
    pub new_basis: Option<NewBasis>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct NewBasis {
    pub labels: Vec<String>,
    /// Column c = coordinates of new basis vector c in the old basis.
    pub transition: Vec<Vec<ScalarLiteral>>,
}

fn default_schema() -> u32 {
    SCHEMA_VERSION
}

/// A requested change of basis, parsed but not yet applied.
#[derive(Clone, Debug)]
pub struct BasisChangeRequest {
    pub labels: Vec<String>,
    pub transition: Matrix,
}

pub fn parse_problem_str(text: &str) -> Result<(StructureSpec, Option<BasisChangeRequest>)> {
    let file: ProblemFile = serde_json::from_str(text)?;
    problem_to_spec(&file)
}

pub fn parse_problem(path: &Path) -> Result<(StructureSpec, Option<BasisChangeRequest>)> {
    let text = std::fs::read_to_string(path)?;
    parse_problem_str(&text)
}

pub fn problem_to_spec(file: &ProblemFile) -> Result<(StructureSpec, Option<BasisChangeRequest>)> {
    if file.schema != SCHEMA_VERSION {
        return Err(Error::Schema {
            path: "schema".into(),
            msg: format!("unsupported schema version {}", file.schema),
        });
    }
    let n = file.basis.len();
    let gram = parse_matrix(&file.gram, n, file.field, "gram")?;
    let operator = parse_matrix(&file.operator, n, file.field, "operator")?;
    let spec = StructureSpec::new(file.basis.clone(), gram, operator)?;
    let change = match &file.new_basis {
        None => None,
        Some(nb) => {
            if nb.labels.len() != n {
                return Err(Error::Schema {
                    path: "new_basis.labels".into(),
                    msg: format!("expected {n} labels, got {}", nb.labels.len()),
                });
            }
            let transition = parse_matrix(&nb.transition, n, file.field, "new_basis.transition")?;
            Some(BasisChangeRequest {
                labels: nb.labels.clone(),
                transition,
            })
        }
    };
    Ok((spec, change))
}

fn parse_matrix(
    rows: &[Vec<ScalarLiteral>],
    n: usize,
    field: Field,
    path: &str,
) -> Result<Matrix> {
    if rows.len() != n {
        return Err(Error::Schema {
            path: path.into(),
            msg: format!("expected {n} rows to match the basis, got {}", rows.len()),
        });
    }
    let mut entries = Vec::with_capacity(n * n);
    for (r, row) in rows.iter().enumerate() {
        if row.len() != n {
            return Err(Error::Schema {
                path: format!("{path}[{r}]"),
                msg: format!("expected {n} entries, got {}", row.len()),
            });
        }
        for (c, lit) in row.iter().enumerate() {
            let s = Scalar::parse(lit, field).map_err(|e| Error::Schema {
                path: format!("{path}[{r}][{c}]"),
                msg: e.to_string(),
            })?;
            entries.push(s);
        }
    }
    Matrix::new(n, n, field, entries)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures_test::{five_dim_complex, five_dim_indecomposable};

    #[test]
    fn parses_the_five_dim_fixture() {
        let text = r#"{
            "schema": 1,
            "field": "rational",
            "basis": ["e1", "e2", "e3", "e4", "e5"],
            "gram": [
                ["0","0","0","0","0"],
                ["0","0","0","0","7"],
                ["0","0","0","0","0"],
                ["0","0","0","0","0"],
                ["0","0","0","0","0"]
            ],
            "operator": [
                ["1","0","1","0","1"],
                ["0","0","0","0","0"],
                ["2","0","2","0","2"],
                ["0","-1","0","-1","0"],
                ["1","0","1","0","1"]
            ]
        }"#;
        let (spec, change) = parse_problem_str(text).unwrap();
        assert!(change.is_none());
        assert_eq!(spec, five_dim_indecomposable());
    }

    #[test]
    fn parses_gaussian_entries() {
        let text = r#"{
            "field": "gaussian_rational",
            "basis": ["e1", "e2", "e3", "e4", "e5"],
            "gram": [
                ["0","0",{"re":"0","im":"4"},"0","0"],
                ["0","0","0","0","0"],
                ["0","0","0","0","0"],
                ["0","0","0","0",{"re":"2","im":"-11"}],
                ["0","0","0","0","0"]
            ],
            "operator": [
                ["2","0","0","0","0"],
                ["-1","0","0","0","0"],
                ["0","1","0","0","0"],
                ["0","0","0","0","0"],
                ["0","0","0","0","0"]
            ]
        }"#;
        let (spec, _) = parse_problem_str(text).unwrap();
        assert_eq!(spec, five_dim_complex());
    }

    #[test]
    fn shape_error_names_the_field() {
        let text = r#"{
            "field": "rational",
            "basis": ["a", "b", "c"],
            "gram": [["0","0"],["0","0"]],
            "operator": [["0","0","0"],["0","0","0"],["0","0","0"]]
        }"#;
        match parse_problem_str(text) {
            Err(Error::Schema { path, .. }) => assert_eq!(path, "gram"),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn scalar_error_carries_the_entry_path() {
        let text = r#"{
            "field": "rational",
            "basis": ["a"],
            "gram": [["1/0"]],
            "operator": [["0"]]
        }"#;
        match parse_problem_str(text) {
            Err(Error::Schema { path, .. }) => assert_eq!(path, "gram[0][0]"),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn unsupported_schema_version_is_rejected() {
        let text = r#"{
            "schema": 2,
            "field": "rational",
            "basis": ["a"],
            "gram": [["0"]],
            "operator": [["0"]]
        }"#;
        assert!(matches!(
            parse_problem_str(text),
            Err(Error::Schema { .. })
        ));
    }
}
