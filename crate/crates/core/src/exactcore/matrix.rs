//! Dense row-major matrices over [`Scalar`].

use std::fmt;
use std::ops::{Index, IndexMut};

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::scalar::{self, Scalar};
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    entries: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, entries: vec![Scalar::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Scalar::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        Matrix { rows, cols, entries }
    }

    /// Builds a matrix from equal-length rows.
    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != ncols) {
            return Err(Error::ShapeMismatch("ragged rows".into()));
        }
        Ok(Matrix { rows: nrows, cols: ncols, entries: rows.into_iter().flatten().collect() })
    }

    /// Integer entries, for literals in tests and examples.
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let r: Vec<Vec<Scalar>> =
            rows.iter().map(|row| row.iter().map(|&x| scalar::int(x)).collect()).collect();
        Matrix::from_rows(r).expect("rectangular literal")
    }

    pub fn column(v: Vec<Scalar>) -> Self {
        Matrix { rows: v.len(), cols: 1, entries: v }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.entries
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column_vec(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        Matrix { rows: self.rows, cols: self.cols, entries: self.entries.iter().map(|x| x * c).collect() }
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix> {
        self.check_same_shape(other, "add")?;
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| a + b).collect();
        Ok(Matrix { rows: self.rows, cols: self.cols, entries })
    }

    pub fn sub(&self, other: &Matrix) -> Result<Matrix> {
        self.check_same_shape(other, "sub")?;
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| a - b).collect();
        Ok(Matrix { rows: self.rows, cols: self.cols, entries })
    }

    fn check_same_shape(&self, other: &Matrix, op: &str) -> Result<()> {
        if self.shape() != other.shape() {
            return Err(Error::ShapeMismatch(format!(
                "{op}: {:?} vs {:?}",
                self.shape(),
                other.shape()
            )));
        }
        Ok(())
    }

    /// Exact matrix product `self * other`.
    pub fn mat_mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::ShapeMismatch(format!(
                "mat_mul: {:?} x {:?}",
                self.shape(),
                other.shape()
            )));
        }
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    /// `self * v` for a column vector given as a slice.
    pub fn apply(&self, v: &[Scalar]) -> Result<Vec<Scalar>> {
        if v.len() != self.cols {
            return Err(Error::ShapeMismatch(format!("apply: {:?} x {}", self.shape(), v.len())));
        }
        Ok((0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(Scalar::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect())
    }

    /// Kronecker product: `(A ⊗ B)[i·rB + k, j·cB + l] = A[i,j]·B[k,l]`.
    pub fn kron(&self, other: &Matrix) -> Matrix {
        let (r2, c2) = other.shape();
        let mut out = Matrix::zeros(self.rows * r2, self.cols * c2);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = &self[(i, j)];
                if a.is_zero() {
                    continue;
                }
                for k in 0..r2 {
                    for l in 0..c2 {
                        let b = &other[(k, l)];
                        if !b.is_zero() {
                            out[(i * r2 + k, j * c2 + l)] = a * b;
                        }
                    }
                }
            }
        }
        out
    }

    /// Solves `self · x = b` exactly.
    ///
    /// Square and consistent overdetermined systems are accepted. Elimination
    /// pivots on the first nonzero entry of each column; the rows left over
    /// after a full-rank square block must reduce to zero.
    pub fn solve_exact(&self, b: &Matrix) -> Result<Matrix> {
        if self.rows != b.rows {
            return Err(Error::ShapeMismatch(format!(
                "solve_exact: {:?} vs rhs {:?}",
                self.shape(),
                b.shape()
            )));
        }
        if self.rows < self.cols {
            return Err(Error::Singular);
        }
        let n = self.cols;
        let w = n + b.cols;
        let mut aug: Vec<Vec<Scalar>> = (0..self.rows)
            .map(|i| self.row(i).iter().chain(b.row(i)).cloned().collect())
            .collect();
        for col in 0..n {
            let pivot = (col..aug.len()).find(|&r| !aug[r][col].is_zero()).ok_or(Error::Singular)?;
            aug.swap(col, pivot);
            let inv = aug[col][col].recip();
            for x in aug[col][col..w].iter_mut() {
                *x *= &inv;
            }
            let pivot_row = aug[col].clone();
            for (r, row) in aug.iter_mut().enumerate() {
                if r == col || row[col].is_zero() {
                    continue;
                }
                let f = row[col].clone();
                for (x, p) in row[col..w].iter_mut().zip(&pivot_row[col..w]) {
                    if !p.is_zero() {
                        *x -= &f * p;
                    }
                }
            }
        }
        if aug[n..].iter().any(|row| row[n..].iter().any(|x| !x.is_zero())) {
            return Err(Error::Inconsistent);
        }
        Ok(Matrix::from_fn(n, b.cols, |i, j| aug[i][n + j].clone()))
    }

    pub fn determinant(&self) -> Result<Scalar> {
        if !self.is_square() {
            return Err(Error::ShapeMismatch(format!("determinant of {:?}", self.shape())));
        }
        let n = self.rows;
        let mut a: Vec<Vec<Scalar>> = (0..n).map(|i| self.row(i).to_vec()).collect();
        let mut det = Scalar::one();
        for col in 0..n {
            let Some(pivot) = (col..n).find(|&r| !a[r][col].is_zero()) else {
                return Ok(Scalar::zero());
            };
            if pivot != col {
                a.swap(col, pivot);
                det = -det;
            }
            det *= &a[col][col];
            let inv = a[col][col].recip();
            let pivot_row = a[col].clone();
            for row in a.iter_mut().skip(col + 1) {
                if row[col].is_zero() {
                    continue;
                }
                let f = &row[col] * &inv;
                for (x, p) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                    *x -= &f * p;
                }
            }
        }
        Ok(det)
    }

    /// Submatrix of the given row and column index lists.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Matrix {
        Matrix::from_fn(rows.len(), cols.len(), |i, j| self[(rows[i], cols[j])].clone())
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = Scalar;
    fn index(&self, (i, j): (usize, usize)) -> &Scalar {
        assert!(i < self.rows && j < self.cols, "index ({i},{j}) out of {:?}", self.shape());
        &self.entries[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Scalar {
        assert!(i < self.rows && j < self.cols, "index ({i},{j}) out of {:?}", self.shape());
        &mut self.entries[i * self.cols + j]
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.entries.iter().map(scalar::format).collect();
        let width = cells.iter().map(String::len).max().unwrap_or(1);
        for i in 0..self.rows {
            let line: Vec<String> =
                (0..self.cols).map(|j| format!("{:>width$}", cells[i * self.cols + j])).collect();
            writeln!(f, "[{}]", line.join(" "))?;
        }
        Ok(())
    }
}

/// JSON form: `{"rows": r, "cols": c, "entries": [["p/q", ...], ...]}`.
#[derive(Serialize, Deserialize, Debug, Clone, PartialEq)]
pub struct MatrixJson {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<Vec<String>>,
}

impl From<&Matrix> for MatrixJson {
    fn from(m: &Matrix) -> Self {
        MatrixJson {
            rows: m.rows,
            cols: m.cols,
            entries: (0..m.rows).map(|i| m.row(i).iter().map(scalar::format).collect()).collect(),
        }
    }
}

impl TryFrom<MatrixJson> for Matrix {
    type Error = Error;
    fn try_from(j: MatrixJson) -> Result<Matrix> {
        let rows: Vec<Vec<Scalar>> = j
            .entries
            .iter()
            .map(|r| r.iter().map(|s| scalar::parse(s)).collect::<Result<_>>())
            .collect::<Result<_>>()?;
        let m = Matrix::from_rows(rows)?;
        if m.shape() != (j.rows, j.cols) && !(j.rows == 0 || j.cols == 0) {
            return Err(Error::ShapeMismatch("declared shape disagrees with entries".into()));
        }
        Ok(m)
    }
}

impl Serialize for Matrix {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        MatrixJson::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for Matrix {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = MatrixJson::deserialize(d)?;
        Matrix::try_from(j).map_err(serde::de::Error::custom)
    }
}

pub fn mat_mul(a: &Matrix, b: &Matrix) -> Result<Matrix> {
    a.mat_mul(b)
}

pub fn kron(a: &Matrix, b: &Matrix) -> Matrix {
    a.kron(b)
}

pub fn solve_exact(a: &Matrix, b: &Matrix) -> Result<Matrix> {
    a.solve_exact(b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactcore::scalar::{int, q};

    #[test]
    fn identity_product() {
        let i2 = Matrix::identity(2);
        assert_eq!(mat_mul(&i2, &i2).unwrap(), i2);
    }

    #[test]
    fn permutation_swaps_columns() {
        let a = Matrix::from_i64(&[&[1, 2], &[3, 4]]);
        let p = Matrix::from_i64(&[&[0, 1], &[1, 0]]);
        assert_eq!(mat_mul(&a, &p).unwrap(), Matrix::from_i64(&[&[2, 1], &[4, 3]]));
    }

    #[test]
    fn product_shape_mismatch() {
        let a = Matrix::zeros(2, 3);
        assert!(matches!(mat_mul(&a, &a), Err(Error::ShapeMismatch(_))));
    }

    #[test]
    fn kron_units() {
        assert_eq!(kron(&Matrix::identity(2), &Matrix::identity(2)), Matrix::identity(4));
        let a = Matrix::from_i64(&[&[1, -2, 3], &[0, 5, 7]]);
        assert_eq!(kron(&a, &Matrix::identity(1)), a);
    }

    #[test]
    fn solve_trivial_and_diagonal() {
        let b = Matrix::column(vec![int(4), int(9)]);
        assert_eq!(solve_exact(&Matrix::identity(2), &b).unwrap(), b);
        let d = Matrix::from_i64(&[&[2, 0], &[0, 3]]);
        assert_eq!(solve_exact(&d, &b).unwrap(), Matrix::column(vec![int(2), int(3)]));
    }

    #[test]
    fn solve_errors() {
        let a = Matrix::from_i64(&[&[1, 2], &[2, 4]]);
        let b = Matrix::column(vec![int(1), int(2)]);
        assert_eq!(solve_exact(&a, &b), Err(Error::Singular));
        let over = Matrix::from_i64(&[&[1, 0], &[0, 1], &[1, 1]]);
        let good = Matrix::column(vec![int(1), int(2), int(3)]);
        let bad = Matrix::column(vec![int(1), int(2), int(4)]);
        assert_eq!(solve_exact(&over, &good).unwrap(), Matrix::column(vec![int(1), int(2)]));
        assert_eq!(solve_exact(&over, &bad), Err(Error::Inconsistent));
    }

    #[test]
    fn determinant_small() {
        let a = Matrix::from_i64(&[&[0, 2, 1], &[1, 1, 0], &[3, 0, 1]]);
        // 0(1) - 2(1) + 1(-3)
        assert_eq!(a.determinant().unwrap(), int(-5));
        let h = Matrix::from_fn(3, 3, |i, j| q(1, (i + j + 1) as i64));
        assert_eq!(h.determinant().unwrap(), q(1, 2160));
    }

    #[test]
    fn json_round_trip() {
        let a = Matrix::from_fn(2, 3, |i, j| q(i as i64 - 2 * j as i64, 3));
        let text = serde_json::to_string(&a).unwrap();
        assert!(text.contains("\"-4/3\""));
        let back: Matrix = serde_json::from_str(&text).unwrap();
        assert_eq!(back, a);
    }
}
