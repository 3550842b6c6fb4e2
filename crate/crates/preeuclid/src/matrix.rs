//! Dense matrices over an exact scalar field.

use crate::error::{Error, Result};
use crate::scalar::{Field, Scalar};

/// A dense row-major matrix with entries in a single field.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    field: Field,
    entries: Vec<Scalar>,
}

impl Matrix {
    pub fn new(rows: usize, cols: usize, field: Field, entries: Vec<Scalar>) -> Result<Matrix> {
        if entries.len() != rows * cols {
            return Err(Error::Shape(format!(
                "expected {} entries for a {rows}x{cols} matrix, got {}",
                rows * cols,
                entries.len()
            )));
        }
        if entries.iter().any(|s| s.field() != field) {
            return Err(Error::Shape("mixed field tags in matrix entries".into()));
        }
        Ok(Matrix {
            rows,
            cols,
            field,
            entries,
        })
    }

    pub fn zero(rows: usize, cols: usize, field: Field) -> Matrix {
        Matrix {
            rows,
            cols,
            field,
            entries: vec![Scalar::zero(field); rows * cols],
        }
    }

    pub fn identity(n: usize, field: Field) -> Matrix {
        let mut m = Matrix::zero(n, n, field);
        for i in 0..n {
            m.set(i, i, Scalar::one(field));
        }
        m
    }

    /// Build from a closure giving entry (r, c).
    pub fn from_fn(
        rows: usize,
        cols: usize,
        field: Field,
        mut f: impl FnMut(usize, usize) -> Scalar,
    ) -> Matrix {
        let mut entries = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                entries.push(f(r, c));
            }
        }
        Matrix {
            rows,
            cols,
            field,
            entries,
        }
    }

    /// Convenience for tests and examples: integer entries.
    pub fn from_ints(field: Field, rows: &[&[i64]]) -> Matrix {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.len());
        Matrix::from_fn(nrows, ncols, field, |r, c| {
            Scalar::from_int(rows[r][c], field)
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: Scalar) {
        self.entries[r * self.cols + c] = value;
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, self.field, |r, c| {
            self.get(c, r).clone()
        })
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::Shape(format!(
                "cannot add {}x{} and {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(Matrix::from_fn(self.rows, self.cols, self.field, |r, c| {
            self.get(r, c) + other.get(r, c)
        }))
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let field = self.field;
        Ok(Matrix::from_fn(self.rows, other.cols, field, |r, c| {
            let mut acc = Scalar::zero(field);
            for k in 0..self.cols {
                acc = &acc + &(self.get(r, k) * other.get(k, c));
            }
            acc
        }))
    }

    pub fn mul_vec(&self, x: &[Scalar]) -> Result<Vec<Scalar>> {
        if x.len() != self.cols {
            return Err(Error::Shape(format!(
                "vector length {} does not match {} columns",
                x.len(),
                self.cols
            )));
        }
        let mut out = Vec::with_capacity(self.rows);
        for r in 0..self.rows {
            let mut acc = Scalar::zero(self.field);
            for c in 0..self.cols {
                acc = &acc + &(self.get(r, c) * &x[c]);
            }
            out.push(acc);
        }
        Ok(out)
    }

    /// Exact inverse by Gauss-Jordan elimination with partial pivoting.
    pub fn inverse(&self) -> Result<Matrix> {
        if !self.is_square() {
            return Err(Error::Shape(format!(
                "cannot invert non-square {}x{} matrix",
                self.rows, self.cols
            )));
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = Matrix::identity(n, self.field);
        let mut rank = 0;
        for col in 0..n {
            let pivot = (rank..n).find(|&r| !a.get(r, col).is_zero());
            let Some(pivot) = pivot else { continue };
            a.swap_rows(rank, pivot);
            inv.swap_rows(rank, pivot);
            let inv_pivot = a.get(rank, col).inverse().expect("nonzero pivot");
            a.scale_row(rank, &inv_pivot);
            inv.scale_row(rank, &inv_pivot);
            for r in 0..n {
                if r != rank && !a.get(r, col).is_zero() {
                    let factor = a.get(r, col).clone();
                    a.sub_scaled_row(r, rank, &factor);
                    inv.sub_scaled_row(r, rank, &factor);
                }
            }
            rank += 1;
        }
        if rank < n {
            return Err(Error::Singular { rank });
        }
        Ok(inv)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Scalar::is_zero)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.entries.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    fn scale_row(&mut self, r: usize, factor: &Scalar) {
        for c in 0..self.cols {
            let v = self.get(r, c) * factor;
            self.set(r, c, v);
        }
    }

    /// row[r] -= factor * row[src]
    fn sub_scaled_row(&mut self, r: usize, src: usize, factor: &Scalar) {
        for c in 0..self.cols {
            let v = self.get(r, c) - &(factor * self.get(src, c));
            self.set(r, c, v);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_is_neutral() {
        let x = Matrix::from_ints(Field::Rational, &[&[1, 2, 3], &[4, 5, 6], &[7, 8, 9]]);
        let i = Matrix::identity(3, Field::Rational);
        assert_eq!(i.mul(&x).unwrap(), x);
        assert_eq!(x.mul(&i).unwrap(), x);
    }

    #[test]
    fn swap_matrix_is_involution() {
        let s = Matrix::from_ints(Field::Rational, &[&[0, 1], &[1, 0]]);
        assert_eq!(s.mul(&s).unwrap(), Matrix::identity(2, Field::Rational));
    }

    #[test]
    fn inverse_of_hadamard_like_matrix() {
        let a = Matrix::from_ints(Field::Rational, &[&[1, 1], &[1, -1]]);
        let inv = a.inverse().unwrap();
        let half = Scalar::from_ratio(1, 2, Field::Rational);
        assert_eq!(inv.get(0, 0), &half);
        assert_eq!(inv.get(1, 1), &(-&half));
        assert_eq!(a.mul(&inv).unwrap(), Matrix::identity(2, Field::Rational));
        assert_eq!(inv.mul(&a).unwrap(), Matrix::identity(2, Field::Rational));
    }

    #[test]
    fn singular_matrix_reports_rank() {
        let a = Matrix::from_ints(Field::Rational, &[&[1, 2], &[2, 4]]);
        match a.inverse() {
            Err(Error::Singular { rank }) => assert_eq!(rank, 1),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn shape_mismatch_rejected() {
        let a = Matrix::zero(2, 3, Field::Rational);
        let b = Matrix::zero(2, 3, Field::Rational);
        assert!(matches!(a.mul(&b), Err(Error::Shape(_))));
    }
}
