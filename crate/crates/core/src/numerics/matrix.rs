use std::fmt;
use std::ops::Neg;

use crate::error::{Error, Result};
use crate::numerics::{Mode, Scalar, Vector};

/// Dense row-major real matrix.
#[derive(Clone, PartialEq)]
pub struct Matrix<S> {
    rows: usize,
    cols: usize,
    entries: Vec<S>,
}

impl<S: Scalar> Matrix<S> {
    pub fn new(rows: usize, cols: usize, entries: Vec<S>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::Degenerate("empty matrix"));
        }
        if entries.len() != rows * cols {
            return Err(Error::ShapeMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        Ok(Self { rows, cols, entries })
    }

    pub fn from_rows(rows: Vec<Vec<S>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::ShapeMismatch("ragged rows".into()));
        }
        Self::new(r, c, rows.into_iter().flatten().collect())
    }

    pub fn from_int_rows(rows: &[&[i64]]) -> Result<Self> {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&v| S::from_int(v)).collect()).collect())
    }

    pub fn identity(n: usize) -> Result<Self> {
        Self::diag(vec![S::one(); n])
    }

    pub fn diag(values: Vec<S>) -> Result<Self> {
        let n = values.len();
        let mut entries = vec![S::zero(); n * n];
        for (i, v) in values.into_iter().enumerate() {
            entries[i * n + i] = v;
        }
        Self::new(n, n, entries)
    }

    /// Outer-product matrix `2·ᵗy·y − I`, the linear map `x ↦ 2⟨x,y⟩y − x`.
    pub fn line_reflection(y: &Vector<S>) -> Self {
        let n = y.dim();
        let two = S::two();
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let mut v = two.clone() * y[i].clone() * y[j].clone();
                if i == j {
                    v = v - S::one();
                }
                entries.push(v);
            }
        }
        Self { rows: n, cols: n, entries }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[S] {
        &self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> &S {
        &self.entries[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> Vector<S> {
        Vector::new(self.entries[i * self.cols..(i + 1) * self.cols].to_vec())
            .expect("matrix rows are nonempty")
    }

    pub fn column(&self, j: usize) -> Vector<S> {
        Vector::new((0..self.rows).map(|i| self.get(i, j).clone()).collect())
            .expect("matrix columns are nonempty")
    }

    /// Builds a matrix from its columns.
    pub fn from_columns(columns: &[Vector<S>]) -> Result<Self> {
        let cols = columns.len();
        let rows = columns.first().map_or(0, Vector::dim);
        if columns.iter().any(|c| c.dim() != rows) {
            return Err(Error::ShapeMismatch("columns of differing length".into()));
        }
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for c in columns {
                entries.push(c[i].clone());
            }
        }
        Self::new(rows, cols, entries)
    }

    pub fn transpose(&self) -> Self {
        let mut entries = Vec::with_capacity(self.entries.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                entries.push(self.get(i, j).clone());
            }
        }
        Self { rows: self.cols, cols: self.rows, entries }
    }

    pub fn mat_mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::ShapeMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut entries = Vec::with_capacity(self.rows * other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = S::zero();
                for k in 0..self.cols {
                    acc = acc + self.get(i, k).clone() * other.get(k, j).clone();
                }
                entries.push(acc);
            }
        }
        Ok(Self { rows: self.rows, cols: other.cols, entries })
    }

    /// Row vector times matrix, `x·M`.
    pub fn row_mul(&self, x: &Vector<S>) -> Result<Vector<S>> {
        if x.dim() != self.rows {
            return Err(Error::DimensionMismatch { expected: self.rows, found: x.dim() });
        }
        Vector::new(
            (0..self.cols)
                .map(|j| {
                    (0..self.rows).fold(S::zero(), |acc, i| acc + x[i].clone() * self.get(i, j).clone())
                })
                .collect(),
        )
    }

    /// Matrix times column vector, `M·x`.
    pub fn apply(&self, x: &Vector<S>) -> Result<Vector<S>> {
        if x.dim() != self.cols {
            return Err(Error::DimensionMismatch { expected: self.cols, found: x.dim() });
        }
        Vector::new((0..self.rows).map(|i| self.row(i).inner_product(x).expect("same dim")).collect())
    }

    pub fn scale(&self, k: &S) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|e| e.clone() * k.clone()).collect(),
        }
    }

    /// Entrywise max-abs difference; matrices of different shape are
    /// infinitely far apart.
    pub fn distance(&self, other: &Self) -> f64 {
        if self.rows != other.rows || self.cols != other.cols {
            return f64::INFINITY;
        }
        self.entries.iter().zip(&other.entries).map(|(a, b)| a.residual(b)).fold(0.0, f64::max)
    }

    /// See [`weighted_key`](crate::numerics::weighted_key).
    pub fn sort_key(&self) -> f64 {
        crate::numerics::weighted_key(self.entries.iter().enumerate(), self.entries.len())
    }

    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        self.rows == other.rows
            && self.cols == other.cols
            && self.entries.iter().zip(&other.entries).all(|(a, b)| a.approx_eq(b, tol))
    }

    /// `ᵗm·m = I` within the mode tolerance. Non-square matrices are never
    /// orthogonal.
    pub fn is_orthogonal(&self, tol: f64) -> bool {
        if !self.is_square() {
            return false;
        }
        let gram = self.transpose().mat_mul(self).expect("square");
        gram.approx_eq(&Self::identity(self.rows).expect("nonempty"), tol)
    }

    /// Determinant: fraction-free (Bareiss) elimination in exact mode,
    /// partially pivoted LU in float mode.
    pub fn det(&self) -> Result<S> {
        if !self.is_square() {
            return Err(Error::ShapeMismatch(format!(
                "determinant of a {}x{} matrix",
                self.rows, self.cols
            )));
        }
        Ok(match S::MODE {
            Mode::Exact => self.det_bareiss(),
            Mode::Float => self.det_lu(),
        })
    }

    fn det_bareiss(&self) -> S {
        let n = self.rows;
        let mut a: Vec<Vec<S>> = (0..n).map(|i| self.row(i).into_coords()).collect();
        let mut sign = S::one();
        let mut prev = S::one();
        for k in 0..n {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                    Some(r) => {
                        a.swap(k, r);
                        sign = -sign;
                    }
                    None => return S::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = a[i][j].clone() * a[k][k].clone() - a[i][k].clone() * a[k][j].clone();
                    a[i][j] = v / prev.clone();
                }
            }
            prev = a[k][k].clone();
        }
        sign * a[n - 1][n - 1].clone()
    }

    fn det_lu(&self) -> S {
        let n = self.rows;
        let mut a: Vec<Vec<S>> = (0..n).map(|i| self.row(i).into_coords()).collect();
        let mut det = S::one();
        for k in 0..n {
            let pivot = (k..n)
                .max_by(|&r, &s| a[r][k].abs().partial_cmp(&a[s][k].abs()).unwrap_or(std::cmp::Ordering::Equal))
                .expect("nonempty range");
            if a[pivot][k].is_zero() {
                return S::zero();
            }
            if pivot != k {
                a.swap(k, pivot);
                det = -det;
            }
            let p = a[k][k].clone();
            det = det * p.clone();
            for i in k + 1..n {
                let factor = a[i][k].clone() / p.clone();
                for j in k..n {
                    let v = a[i][j].clone() - factor.clone() * a[k][j].clone();
                    a[i][j] = v;
                }
            }
        }
        det
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> Matrix<T> {
        Matrix { rows: self.rows, cols: self.cols, entries: self.entries.iter().map(f).collect() }
    }
}

impl<S: Scalar> Neg for &Matrix<S> {
    type Output = Matrix<S>;

    fn neg(self) -> Matrix<S> {
        Matrix { rows: self.rows, cols: self.cols, entries: self.entries.iter().map(|e| -e.clone()).collect() }
    }
}

/// `hₙ = diag(1, −1, …, −1)` of size `n + 1`.
pub fn h_matrix<S: Scalar>(n: usize) -> Matrix<S> {
    let mut d = vec![-S::one(); n + 1];
    d[0] = S::one();
    Matrix::diag(d).expect("n + 1 >= 1")
}

/// `J = diag(1, −1)`.
pub fn j_matrix<S: Scalar>() -> Matrix<S> {
    h_matrix(1)
}

/// Rotation `[[c, −s], [s, c]]` for a point `(c, s)` on the unit circle.
pub fn rotation_from_point<S: Scalar>(c: &S, s: &S) -> Matrix<S> {
    Matrix::from_rows(vec![vec![c.clone(), -s.clone()], vec![s.clone(), c.clone()]]).expect("2x2")
}

pub fn rotation(theta: f64) -> Matrix<f64> {
    rotation_from_point(&theta.cos(), &theta.sin())
}

impl<S: fmt::Display> fmt::Display for Matrix<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for i in 0..self.rows {
            if i > 0 {
                f.write_str("; ")?;
            }
            for j in 0..self.cols {
                if j > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{}", self.entries[i * self.cols + j])?;
            }
        }
        f.write_str("]")
    }
}

impl<S: fmt::Display> fmt::Debug for Matrix<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use std::f64::consts::PI;

    use super::*;
    use crate::Rational;

    #[test]
    fn products() {
        let i3 = Matrix::<Rational>::identity(3).unwrap();
        assert_eq!(i3.mat_mul(&i3).unwrap(), i3);
        let h1 = h_matrix::<Rational>(1);
        assert_eq!(h1.mat_mul(&h1).unwrap(), Matrix::identity(2).unwrap());
        let r = rotation(PI / 3.0).mat_mul(&rotation(-PI / 3.0)).unwrap();
        assert!(r.approx_eq(&Matrix::identity(2).unwrap(), 1e-12));
    }

    #[test]
    fn shape_mismatch() {
        let a = Matrix::<f64>::identity(2).unwrap();
        let b = Matrix::<f64>::identity(3).unwrap();
        assert!(matches!(a.mat_mul(&b), Err(Error::ShapeMismatch(_))));
        assert!(Matrix::<f64>::new(2, 2, vec![1.0]).is_err());
        assert!(Matrix::<f64>::new(0, 0, vec![]).is_err());
    }

    #[test]
    fn orthogonality() {
        assert!(h_matrix::<Rational>(2).is_orthogonal(0.0));
        assert!(!Matrix::<Rational>::diag(vec![Rational::from_int(2), Rational::from_int(1)])
            .unwrap()
            .is_orthogonal(0.0));
        assert!(!Matrix::<f64>::new(1, 2, vec![1.0, 0.0]).unwrap().is_orthogonal(1e-9));
    }

    #[test]
    fn determinants() {
        assert_eq!(h_matrix::<Rational>(3).det().unwrap(), Rational::from_int(-1));
        assert_eq!(h_matrix::<Rational>(2).det().unwrap(), Rational::from_int(1));
        assert!((h_matrix::<f64>(3).det().unwrap() + 1.0).abs() < 1e-12);
        let m = Matrix::<Rational>::from_int_rows(&[&[0, 2, 1], &[1, 0, 0], &[3, 1, 4]]).unwrap();
        // cofactor expansion along the second row: -1 * (2*4 - 1*1)
        assert_eq!(m.det().unwrap(), Rational::from_int(-7));
        assert!((m.map(|v| Scalar::to_f64(v)).det().unwrap() + 7.0).abs() < 1e-12);
        let singular = Matrix::<Rational>::from_int_rows(&[&[1, 2], &[2, 4]]).unwrap();
        assert_eq!(singular.det().unwrap(), Rational::from_int(0));
    }

    #[test]
    fn line_reflection_matches_formula() {
        let y = Vector::<Rational>::from_ratios(&[(3, 5), (4, 5)]).unwrap();
        let x = Vector::<Rational>::from_ints(&[1, 0]).unwrap();
        let m = Matrix::line_reflection(&y);
        let expected = y.scale(&(Rational::two() * x.inner_product(&y).unwrap())).sub(&x).unwrap();
        assert_eq!(m.row_mul(&x).unwrap(), expected);
    }
}
