use std::fmt;
use std::ops::{Index, Neg};

use crate::error::{Error, Result};
use crate::numerics::Scalar;

/// Coordinate vector in ℝᵈ, `d >= 1`.
#[derive(Clone, PartialEq)]
pub struct Vector<S> {
    coords: Vec<S>,
}

impl<S: Scalar> Vector<S> {
    pub fn new(coords: Vec<S>) -> Result<Self> {
        if coords.is_empty() {
            return Err(Error::Degenerate("zero-dimensional vector"));
        }
        Ok(Self { coords })
    }

    pub fn from_ints(coords: &[i64]) -> Result<Self> {
        Self::new(coords.iter().map(|&c| S::from_int(c)).collect())
    }

    pub fn from_ratios(coords: &[(i64, i64)]) -> Result<Self> {
        Self::new(coords.iter().map(|&(n, d)| S::from_ratio(n, d)).collect())
    }

    pub fn zeros(dim: usize) -> Result<Self> {
        Self::new(vec![S::zero(); dim])
    }

    /// The standard basis vector `e_{index+1}`.
    pub fn basis(dim: usize, index: usize) -> Result<Self> {
        let mut v = Self::zeros(dim)?;
        if index >= dim {
            return Err(Error::DimensionMismatch { expected: dim, found: index + 1 });
        }
        v.coords[index] = S::one();
        Ok(v)
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[S] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<S> {
        self.coords
    }

    fn check_dim(&self, other: &Self) -> Result<()> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), found: other.dim() });
        }
        Ok(())
    }

    pub fn inner_product(&self, other: &Self) -> Result<S> {
        self.check_dim(other)?;
        Ok(self
            .coords
            .iter()
            .zip(&other.coords)
            .fold(S::zero(), |acc, (a, b)| acc + a.clone() * b.clone()))
    }

    pub fn norm_sq(&self) -> S {
        self.coords.iter().fold(S::zero(), |acc, a| acc + a.clone() * a.clone())
    }

    pub fn is_unit(&self, tol: f64) -> bool {
        self.norm_sq().approx_eq(&S::one(), tol)
    }

    pub fn scale(&self, k: &S) -> Self {
        Self { coords: self.coords.iter().map(|c| c.clone() * k.clone()).collect() }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        Ok(Self {
            coords: self.coords.iter().zip(&other.coords).map(|(a, b)| a.clone() + b.clone()).collect(),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        Ok(Self {
            coords: self.coords.iter().zip(&other.coords).map(|(a, b)| a.clone() - b.clone()).collect(),
        })
    }

    /// Max-abs coordinate difference. Vectors of different dimension are
    /// infinitely far apart.
    pub fn distance(&self, other: &Self) -> f64 {
        if self.dim() != other.dim() {
            return f64::INFINITY;
        }
        self.coords.iter().zip(&other.coords).map(|(a, b)| a.residual(b)).fold(0.0, f64::max)
    }

    /// See [`weighted_key`](crate::numerics::weighted_key).
    pub fn sort_key(&self) -> f64 {
        crate::numerics::weighted_key(self.coords.iter().enumerate(), self.coords.len())
    }

    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        self.dim() == other.dim()
            && self.coords.iter().zip(&other.coords).all(|(a, b)| a.approx_eq(b, tol))
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> Vector<T> {
        Vector { coords: self.coords.iter().map(f).collect() }
    }
}

impl<S: Scalar> Neg for &Vector<S> {
    type Output = Vector<S>;

    fn neg(self) -> Vector<S> {
        Vector { coords: self.coords.iter().map(|c| -c.clone()).collect() }
    }
}

impl<S: Scalar> Neg for Vector<S> {
    type Output = Vector<S>;

    fn neg(self) -> Vector<S> {
        -&self
    }
}

impl<S> Index<usize> for Vector<S> {
    type Output = S;

    fn index(&self, i: usize) -> &S {
        &self.coords[i]
    }
}

impl<S: fmt::Display> fmt::Display for Vector<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

impl<S: fmt::Display> fmt::Debug for Vector<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
