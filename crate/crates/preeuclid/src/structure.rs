//! The core model: a finite-dimensional space with a bilinear form and a
//! linear operator, both expressed on a fixed basis.
//!
//! Conventions, used everywhere:
//! - `gram[i][j]` is the form evaluated at (basis i, basis j);
//! - operator and transition matrices are column-based: column `c` holds the
//!   coordinates of the image (resp. new basis vector) number `c`.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::scalar::{Field, Scalar};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct StructureSpec {
    labels: Vec<String>,
    gram: Matrix,
    op: Matrix,
}

impl StructureSpec {
    pub fn new(labels: Vec<String>, gram: Matrix, op: Matrix) -> Result<StructureSpec> {
        let n = labels.len();
        if n == 0 {
            return Err(Error::Shape("basis must be nonempty".into()));
        }
        let mut seen = HashSet::new();
        for label in &labels {
            if !seen.insert(label.as_str()) {
                return Err(Error::Schema {
                    path: "basis".into(),
                    msg: format!("duplicate basis label {label:?}"),
                });
            }
        }
        for (name, m) in [("gram", &gram), ("operator", &op)] {
            if m.rows() != n || m.cols() != n {
                return Err(Error::Shape(format!(
                    "{name} must be {n}x{n} to match the basis, got {}x{}",
                    m.rows(),
                    m.cols()
                )));
            }
        }
        if gram.field() != op.field() {
            return Err(Error::Shape(
                "gram and operator matrices use different fields".into(),
            ));
        }
        Ok(StructureSpec { labels, gram, op })
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn field(&self) -> Field {
        self.gram.field()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn gram(&self) -> &Matrix {
        &self.gram
    }

    pub fn op(&self) -> &Matrix {
        &self.op
    }

    /// Coordinate vector of the i-th basis vector.
    pub fn basis_vector(&self, i: usize) -> Vec<Scalar> {
        let mut v = vec![Scalar::zero(self.field()); self.dim()];
        v[i] = Scalar::one(self.field());
        v
    }

    /// The form evaluated on coordinate vectors: x^T G y.
    pub fn bilinear_eval(&self, x: &[Scalar], y: &[Scalar]) -> Result<Scalar> {
        let n = self.dim();
        if x.len() != n || y.len() != n {
            return Err(Error::Shape(format!(
                "coordinate vectors must have length {n}, got {} and {}",
                x.len(),
                y.len()
            )));
        }
        let gy = self.gram.mul_vec(y)?;
        let mut acc = Scalar::zero(self.field());
        for (xi, gyi) in x.iter().zip(&gy) {
            acc = &acc + &(xi * gyi);
        }
        Ok(acc)
    }

    /// The operator applied to a coordinate vector: F x.
    pub fn apply_operator(&self, x: &[Scalar]) -> Result<Vec<Scalar>> {
        self.op.mul_vec(x)
    }

    /// Re-express the structure on a new basis. Column `c` of `transition`
    /// holds the coordinates of new basis vector `c` in the old basis.
    ///
    /// gram' = T^T G T and op' = T^-1 F T.
    pub fn change_basis(
        &self,
        transition: &Matrix,
        new_labels: Vec<String>,
    ) -> Result<StructureSpec> {
        let n = self.dim();
        if transition.rows() != n || transition.cols() != n {
            return Err(Error::Shape(format!(
                "transition matrix must be {n}x{n}, got {}x{}",
                transition.rows(),
                transition.cols()
            )));
        }
        if new_labels.len() != n {
            return Err(Error::Shape(format!(
                "expected {n} new labels, got {}",
                new_labels.len()
            )));
        }
        let t_inv = transition.inverse()?;
        let gram = transition.transpose().mul(&self.gram)?.mul(transition)?;
        let op = t_inv.mul(&self.op)?.mul(transition)?;
        StructureSpec::new(new_labels, gram, op)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures_test::{basis_change_to_w, five_dim_indecomposable};

    #[test]
    fn rejects_duplicate_labels() {
        let g = Matrix::zero(2, 2, Field::Rational);
        let f = Matrix::zero(2, 2, Field::Rational);
        let err = StructureSpec::new(vec!["a".into(), "a".into()], g, f);
        assert!(matches!(err, Err(Error::Schema { .. })));
    }

    #[test]
    fn rejects_mismatched_shapes() {
        let g = Matrix::zero(4, 4, Field::Rational);
        let f = Matrix::zero(5, 5, Field::Rational);
        let labels = (1..=5).map(|i| format!("e{i}")).collect();
        assert!(matches!(
            StructureSpec::new(labels, g, f),
            Err(Error::Shape(_))
        ));
    }

    #[test]
    fn one_dimensional_space_is_valid() {
        let g = Matrix::zero(1, 1, Field::Rational);
        let f = Matrix::zero(1, 1, Field::Rational);
        assert!(StructureSpec::new(vec!["e1".into()], g, f).is_ok());
    }

    #[test]
    fn bilinear_eval_on_basis_vectors_reads_gram() {
        let spec = five_dim_indecomposable();
        let v = spec
            .bilinear_eval(&spec.basis_vector(1), &spec.basis_vector(4))
            .unwrap();
        assert_eq!(v, Scalar::from_int(7, Field::Rational));
        let zero = vec![Scalar::zero(Field::Rational); 5];
        let z = spec.bilinear_eval(&zero, &spec.basis_vector(0)).unwrap();
        assert!(z.is_zero());
    }

    #[test]
    fn apply_operator_reads_columns() {
        let spec = five_dim_indecomposable();
        let img = spec.apply_operator(&spec.basis_vector(1)).unwrap();
        let mut expected = vec![Scalar::zero(Field::Rational); 5];
        expected[3] = Scalar::from_int(-1, Field::Rational);
        assert_eq!(img, expected);
    }

    #[test]
    fn change_basis_round_trips() {
        let (spec, t, labels) = basis_change_to_w();
        let moved = spec.change_basis(&t, labels).unwrap();
        let back = moved
            .change_basis(&t.inverse().unwrap(), spec.labels().to_vec())
            .unwrap();
        assert_eq!(back, spec);
    }

    #[test]
    fn identity_transition_is_noop() {
        let spec = five_dim_indecomposable();
        let t = Matrix::identity(5, Field::Rational);
        let moved = spec.change_basis(&t, spec.labels().to_vec()).unwrap();
        assert_eq!(moved, spec);
    }
}
