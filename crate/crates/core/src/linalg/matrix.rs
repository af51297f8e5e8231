use serde::{Serialize, Serializer};

use super::{Entry, NormTag, Rational, Vector};

/// Dense row-major matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct Matrix<T> {
    rows: Vec<Vec<T>>,
    ncols: usize,
}

pub type ExactMatrix = Matrix<Rational>;
pub type FloatMatrix = Matrix<f64>;

impl<T: Entry> Matrix<T> {
    /// Panics when rows have unequal lengths.
    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let ncols = rows.first().map_or(0, Vec::len);
        assert!(
            rows.iter().all(|r| r.len() == ncols),
            "matrix rows must have equal length"
        );
        Matrix { rows, ncols }
    }

    /// An empty matrix with `ncols` columns (no rows).
    pub fn empty(ncols: usize) -> Self {
        Matrix {
            rows: Vec::new(),
            ncols,
        }
    }

    pub fn from_vectors<'a>(vectors: impl IntoIterator<Item = &'a Vector<T>>) -> Self {
        Matrix::from_rows(vectors.into_iter().map(|v| v.coords().to_vec()).collect())
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(columns: &[Vector<T>]) -> Self {
        Matrix::from_vectors(columns).transpose()
    }

    pub fn identity(n: usize) -> Self {
        let rows = (0..n)
            .map(|i| (0..n).map(|j| if i == j { T::one() } else { T::zero() }).collect())
            .collect();
        Matrix { rows, ncols: n }
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn get(&self, r: usize, c: usize) -> &T {
        &self.rows[r][c]
    }

    pub fn row(&self, r: usize) -> &[T] {
        &self.rows[r]
    }

    pub fn rows(&self) -> &[Vec<T>] {
        &self.rows
    }

    pub fn row_vector(&self, r: usize, tag: NormTag) -> Vector<T> {
        Vector::new(self.rows[r].clone(), tag)
    }

    pub fn column(&self, c: usize) -> Vec<T> {
        self.rows.iter().map(|r| r[c].clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        let rows = (0..self.ncols).map(|c| self.column(c)).collect();
        Matrix {
            rows,
            ncols: self.rows.len(),
        }
    }

    /// `M · v`.
    pub fn apply(&self, v: &[T]) -> Vec<T> {
        assert_eq!(v.len(), self.ncols, "dimension mismatch in matrix-vector product");
        self.rows
            .iter()
            .map(|r| r.iter().zip(v).fold(T::zero(), |acc, (a, b)| acc.plus(&a.times(b))))
            .collect()
    }

    pub fn select_rows(&self, indices: &[usize]) -> Self {
        Matrix {
            rows: indices.iter().map(|&i| self.rows[i].clone()).collect(),
            ncols: self.ncols,
        }
    }
}

impl<T: Serialize> Serialize for Matrix<T> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.rows.serialize(serializer)
    }
}
