//! Dense square matrices over rationals and over rational polynomials.

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::arith::{RatPoly, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix<T> {
    dim: usize,
    data: Vec<T>,
}

pub type RatMatrix = Matrix<Rational>;
pub type PolyMatrix = Matrix<RatPoly>;

impl<T: Clone> Matrix<T> {
    /// Builds a `dim x dim` matrix from a function of **1-based** indices.
    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(dim * dim);
        for i in 1..=dim {
            for j in 1..=dim {
                data.push(f(i, j));
            }
        }
        Matrix { dim, data }
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let dim = rows.len();
        assert!(rows.iter().all(|r| r.len() == dim), "matrix must be square");
        Matrix { dim, data: rows.into_iter().flatten().collect() }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Entry at 0-based `(i, j)`.
    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.dim + j]
    }

    /// Entry at 1-based `(i, j)`, matching the formulas the builders use.
    pub fn at(&self, i: usize, j: usize) -> &T {
        self.get(i - 1, j - 1)
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.dim..(i + 1) * self.dim]
    }

    pub fn map<U: Clone>(&self, f: impl FnMut(&T) -> U) -> Matrix<U> {
        Matrix { dim: self.dim, data: self.data.iter().map(f).collect() }
    }

    pub fn rows(&self) -> Vec<Vec<T>> {
        (0..self.dim).map(|i| self.row(i).to_vec()).collect()
    }

    /// `P X P^T` for the permutation sending new index `k` to old index
    /// `order[k]` (0-based).
    pub fn permute(&self, order: &[usize]) -> Self {
        assert_eq!(order.len(), self.dim);
        Matrix::from_fn(self.dim, |i, j| self.get(order[i - 1], order[j - 1]).clone())
    }

    /// Contiguous principal submatrix starting at 0-based `start`.
    pub fn principal_block(&self, start: usize, len: usize) -> Self {
        Matrix::from_fn(len, |i, j| self.get(start + i - 1, start + j - 1).clone())
    }
}

impl<T: Clone + PartialEq> Matrix<T> {
    pub fn is_symmetric(&self) -> bool {
        (0..self.dim).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }
}

impl PolyMatrix {
    pub fn eval(&self, x: &Rational) -> RatMatrix {
        self.map(|p| p.eval(x))
    }

    /// Largest entry degree, 0 for constant (or empty) matrices.
    pub fn max_degree(&self) -> usize {
        self.data.iter().filter_map(RatPoly::degree).max().unwrap_or(0)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        self.map(|p| p.scale(c))
    }

    /// Matrix-vector product with polynomial entries on both sides.
    pub fn mul_vec(&self, v: &[RatPoly]) -> Vec<RatPoly> {
        assert_eq!(v.len(), self.dim);
        (0..self.dim).map(|i| self.row(i).iter().zip(v).fold(RatPoly::zero(), |acc, (a, b)| &acc + &(a * b))).collect()
    }
}

trait EntryJson {
    fn to_json(&self) -> serde_json::Value;
}

impl EntryJson for Rational {
    fn to_json(&self) -> serde_json::Value {
        serde_json::Value::String(self.to_string())
    }
}

impl EntryJson for RatPoly {
    fn to_json(&self) -> serde_json::Value {
        serde_json::Value::from(self.coeff_strings())
    }
}

/// `{"dim": d, "entries": [...]}`, row-major; rational entries are `"p/q"`
/// strings and polynomial entries are coefficient-string arrays.
#[allow(private_bounds)]
impl<T: EntryJson> Serialize for Matrix<T> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("Matrix", 2)?;
        st.serialize_field("dim", &self.dim)?;
        let entries: Vec<serde_json::Value> = self.data.iter().map(EntryJson::to_json).collect();
        st.serialize_field("entries", &entries)?;
        st.end()
    }
}
