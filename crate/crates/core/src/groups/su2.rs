use std::fmt;
use std::marker::PhantomData;

use num_traits::{One, Zero};
use rand::Rng;

use crate::error::{Error, Result};
use crate::groups::Group;
use crate::numerics::{ComplexScalar, Mode, SampleUnit, Scalar, Vector};

/// A 2×2 complex matrix, used for elements of SU(2).
#[derive(Clone, PartialEq)]
pub struct Su2Matrix<S> {
    pub entries: [[ComplexScalar<S>; 2]; 2],
}

impl<S: Scalar> Su2Matrix<S> {
    pub fn identity() -> Self {
        let (o, z) = (ComplexScalar::one(), ComplexScalar::zero());
        Self { entries: [[o.clone(), z.clone()], [z, o]] }
    }

    /// `(x₁+x₂i, x₃+x₄i; −x₃+x₄i, x₁−x₂i)` for a unit `(x₁,x₂,x₃,x₄)`.
    pub fn from_point(x: &Vector<S>, tol: f64) -> Result<Self> {
        if x.dim() != 4 {
            return Err(Error::DimensionMismatch { expected: 4, found: x.dim() });
        }
        if !x.is_unit(tol) {
            return Err(Error::NotUnit { norm_sq: x.norm_sq().to_string() });
        }
        Ok(Self::from_coords_unchecked(x.coords()))
    }

    pub(crate) fn from_coords_unchecked(x: &[S]) -> Self {
        let c = |re: &S, im: &S| ComplexScalar::new(re.clone(), im.clone());
        Self {
            entries: [
                [c(&x[0], &x[1]), c(&x[2], &x[3])],
                [c(&-x[2].clone(), &x[3]), c(&x[0], &-x[1].clone())],
            ],
        }
    }

    /// The point `(x₁,x₂,x₃,x₄)` read off the first row.
    pub fn to_point(&self) -> Vector<S> {
        let [a, b] = &self.entries[0];
        Vector::new(vec![a.re.clone(), a.im.clone(), b.re.clone(), b.im.clone()]).expect("dim 4")
    }

    pub fn mul(&self, other: &Self) -> Self {
        let m = |i: usize, j: usize| {
            self.entries[i][0].clone() * other.entries[0][j].clone()
                + self.entries[i][1].clone() * other.entries[1][j].clone()
        };
        Self { entries: [[m(0, 0), m(0, 1)], [m(1, 0), m(1, 1)]] }
    }

    /// Conjugate transpose, the inverse on SU(2).
    pub fn adjoint(&self) -> Self {
        let e = &self.entries;
        Self { entries: [[e[0][0].conj(), e[1][0].conj()], [e[0][1].conj(), e[1][1].conj()]] }
    }

    pub fn neg(&self) -> Self {
        let e = &self.entries;
        Self { entries: [[-e[0][0].clone(), -e[0][1].clone()], [-e[1][0].clone(), -e[1][1].clone()]] }
    }

    pub fn distance(&self, other: &Self) -> f64 {
        self.entries
            .iter()
            .flatten()
            .zip(other.entries.iter().flatten())
            .map(|(a, b)| a.re.residual(&b.re).max(a.im.residual(&b.im)))
            .fold(0.0, f64::max)
    }

    /// See [`weighted_key`](crate::numerics::weighted_key).
    pub fn sort_key(&self) -> f64 {
        let parts = self.entries.iter().flatten().flat_map(|c| [&c.re, &c.im]);
        crate::numerics::weighted_key(parts.enumerate(), 8)
    }

    /// Unitary with determinant one.
    pub fn is_special_unitary(&self, tol: f64) -> bool {
        let e = &self.entries;
        let det = e[0][0].clone() * e[1][1].clone() - e[0][1].clone() * e[1][0].clone();
        self.mul(&self.adjoint()).distance(&Self::identity()) <= tol
            && det.re.approx_eq(&S::one(), tol)
            && det.im.is_negligible(tol)
    }
}

impl<S: fmt::Display> fmt::Debug for Su2Matrix<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let e = &self.entries;
        write!(
            f,
            "[{}+{}i, {}+{}i; {}+{}i, {}+{}i]",
            e[0][0].re, e[0][0].im, e[0][1].re, e[0][1].im, e[1][0].re, e[1][0].im, e[1][1].re, e[1][1].im
        )
    }
}

/// The group SU(2).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Su2<S>(PhantomData<S>);

impl<S> Su2<S> {
    pub fn new() -> Self {
        Self(PhantomData)
    }
}

impl<S> Default for Su2<S> {
    fn default() -> Self {
        Self::new()
    }
}

impl<S: SampleUnit> Group for Su2<S> {
    type Elem = Su2Matrix<S>;

    fn name(&self) -> String {
        "SU(2)".into()
    }

    fn mode(&self) -> Mode {
        S::MODE
    }

    fn identity(&self) -> Su2Matrix<S> {
        Su2Matrix::identity()
    }

    fn mul(&self, a: &Su2Matrix<S>, b: &Su2Matrix<S>) -> Su2Matrix<S> {
        a.mul(b)
    }

    fn inv(&self, a: &Su2Matrix<S>) -> Su2Matrix<S> {
        a.adjoint()
    }

    fn sort_key(&self, a: &Su2Matrix<S>) -> f64 {
        a.sort_key()
    }

    fn distance(&self, a: &Su2Matrix<S>, b: &Su2Matrix<S>) -> f64 {
        a.distance(b)
    }

    fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> Su2Matrix<S> {
        Su2Matrix::from_coords_unchecked(S::sample_unit(4, rng).coords())
    }
}
