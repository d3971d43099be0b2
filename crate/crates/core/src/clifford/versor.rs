use std::fmt;
use std::marker::PhantomData;

use rand::Rng;

use crate::clifford::{CliffordElement, Parity};
use crate::error::{Error, Result};
use crate::groups::Group;
use crate::numerics::{h_matrix, Matrix, Mode, SampleUnit, Scalar, Vector};

/// Product of unit vectors in Cl(n): an element of Pin⁺(n), and of Spin(n)
/// when even.
///
/// Equality compares the algebra element only; `factor_count` is
/// bookkeeping and differs between equal versors.
#[derive(Clone)]
pub struct Versor<S> {
    element: CliffordElement<S>,
    parity: Parity,
    factor_count: usize,
}

impl<S: PartialEq> PartialEq for Versor<S> {
    fn eq(&self, other: &Self) -> bool {
        self.element == other.element
    }
}

impl<S: Scalar> Versor<S> {
    pub fn identity(dim: usize) -> Result<Self> {
        Ok(Self { element: CliffordElement::one(dim)?, parity: Parity::Even, factor_count: 0 })
    }

    /// Geometric product of the embedded unit vectors, in order.
    pub fn from_unit_vectors(dim: usize, vectors: &[Vector<S>], tol: f64) -> Result<Self> {
        let mut element = CliffordElement::one(dim)?;
        for v in vectors {
            if v.dim() != dim {
                return Err(Error::DimensionMismatch { expected: dim, found: v.dim() });
            }
            if !v.is_unit(tol) {
                return Err(Error::NotUnit { norm_sq: v.norm_sq().to_string() });
            }
            element = element.geometric_product(&CliffordElement::from_vector(v)?)?;
        }
        Ok(Self { element, parity: Parity::of(vectors.len()), factor_count: vectors.len() })
    }

    /// The fixed lift `h̃ₙ = e₂e₃⋯e_{n+1}` in Cl(n+1).
    pub fn h_tilde(n: usize) -> Result<Self> {
        let dim = n + 1;
        let basis = (1..dim).map(|i| Vector::basis(dim, i)).collect::<Result<Vec<_>>>()?;
        Self::from_unit_vectors(dim, &basis, 0.0)
    }

    pub fn element(&self) -> &CliffordElement<S> {
        &self.element
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }

    pub fn factor_count(&self) -> usize {
        self.factor_count
    }

    pub fn dim(&self) -> usize {
        self.element.dim()
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        Ok(Self {
            element: self.element.geometric_product(&other.element)?,
            parity: self.parity.combine(other.parity),
            factor_count: self.factor_count + other.factor_count,
        })
    }

    /// `u⁻¹ = reverse(u)` for unit versors with this metric.
    pub fn inverse(&self) -> Self {
        Self { element: self.element.reverse(), ..self.clone() }
    }

    /// `−u`; negating the first factor keeps it a product of unit vectors.
    pub fn neg(&self) -> Self {
        Self { element: -&self.element, ..self.clone() }
    }

    /// `u·reverse(u) = 1`.
    pub fn is_unit(&self, tol: f64) -> bool {
        let prod = self.element.geometric_product(&self.element.reverse()).expect("same dim");
        prod.distance(&CliffordElement::one(self.dim()).expect("dim >= 1")) <= tol
            && (S::MODE == Mode::Float || prod == CliffordElement::one(self.dim()).expect("dim >= 1"))
    }

    /// The twisted adjoint `x ↦ α(u)·x·u⁻¹`, the pointwise action of the
    /// double cover Pin⁺(n) → O(n).
    pub fn twisted_adjoint(&self, x: &Vector<S>, tol: f64) -> Result<Vector<S>> {
        if x.dim() != self.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), found: x.dim() });
        }
        let xe = CliffordElement::from_vector(x)?;
        self.element
            .grade_involution()
            .geometric_product(&xe)?
            .geometric_product(&self.element.reverse())?
            .vector_part(tol)
    }

    /// Matrix of the covering image: column `j` is the twisted adjoint of
    /// `e_{j+1}`. With this convention the cover is multiplicative.
    pub fn covering_matrix(&self, tol: f64) -> Result<Matrix<S>> {
        let dim = self.dim();
        let columns = (0..dim)
            .map(|j| self.twisted_adjoint(&Vector::basis(dim, j)?, tol))
            .collect::<Result<Vec<_>>>()?;
        Matrix::from_columns(&columns)
    }

    pub fn distance(&self, other: &Self) -> f64 {
        self.element.distance(&other.element)
    }
}

/// `hₙ`, convenience re-export next to its lift.
pub fn h_n<S: Scalar>(n: usize) -> Matrix<S> {
    h_matrix(n)
}

impl<S: fmt::Display> fmt::Display for Versor<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.element)
    }
}

impl<S: fmt::Display> fmt::Debug for Versor<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Pin⁺(n) realized by versors of Cl(n); with `even_only` the sampler stays
/// in Spin(n).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PinGroup<S> {
    pub dim: usize,
    pub even_only: bool,
    _scalar: PhantomData<S>,
}

impl<S> PinGroup<S> {
    pub fn pin(dim: usize) -> Self {
        Self { dim, even_only: false, _scalar: PhantomData }
    }

    pub fn spin(dim: usize) -> Self {
        Self { dim, even_only: true, _scalar: PhantomData }
    }
}

/// Random versor with `0..=dim+1` unit-vector factors.
pub fn sample_versor<S: SampleUnit, R: Rng + ?Sized>(dim: usize, even_only: bool, rng: &mut R) -> Versor<S> {
    let mut count = rng.random_range(0..=dim + 1);
    if even_only && count % 2 == 1 {
        count += 1;
    }
    let vs: Vec<Vector<S>> = (0..count).map(|_| S::sample_unit(dim, rng)).collect();
    Versor::from_unit_vectors(dim, &vs, 1e-9).expect("sampled vectors are unit")
}

impl<S: SampleUnit> Group for PinGroup<S> {
    type Elem = Versor<S>;

    fn name(&self) -> String {
        if self.even_only {
            format!("Spin({})", self.dim)
        } else {
            format!("Pin+({})", self.dim)
        }
    }

    fn mode(&self) -> Mode {
        S::MODE
    }

    fn identity(&self) -> Versor<S> {
        Versor::identity(self.dim).expect("valid dimension")
    }

    fn mul(&self, a: &Versor<S>, b: &Versor<S>) -> Versor<S> {
        a.mul(b).expect("same dimension")
    }

    fn inv(&self, a: &Versor<S>) -> Versor<S> {
        a.inverse()
    }

    fn sort_key(&self, a: &Versor<S>) -> f64 {
        a.element().sort_key()
    }

    fn distance(&self, a: &Versor<S>, b: &Versor<S>) -> f64 {
        a.distance(b)
    }

    fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> Versor<S> {
        sample_versor(self.dim, self.even_only, rng)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    type V = Versor<Rational>;

    fn basis(dim: usize, i: usize) -> Vector<Rational> {
        Vector::basis(dim, i).unwrap()
    }

    #[test]
    fn construction() {
        let id = V::from_unit_vectors(3, &[], 0.0).unwrap();
        assert_eq!(id, V::identity(3).unwrap());
        assert_eq!(id.parity(), Parity::Even);
        let e2 = V::from_unit_vectors(3, &[basis(3, 1)], 0.0).unwrap();
        assert_eq!(e2.parity(), Parity::Odd);
        assert_eq!(*e2.element(), CliffordElement::generator(3, 1).unwrap());
        let not_unit = Vector::<Rational>::from_ints(&[1, 1, 0]).unwrap();
        assert!(matches!(V::from_unit_vectors(3, &[not_unit], 0.0), Err(Error::NotUnit { .. })));
    }

    #[test]
    fn h_tilde_is_e2_to_en() {
        let h3 = V::h_tilde(3).unwrap();
        assert_eq!(*h3.element(), CliffordElement::generator_product(4, &[1, 2, 3]).unwrap());
        assert_eq!(h3.inverse().mul(&h3).unwrap(), V::identity(4).unwrap());
    }

    #[test]
    fn twisted_adjoint_examples() {
        let e1 = V::from_unit_vectors(2, &[basis(2, 0)], 0.0).unwrap();
        assert_eq!(e1.twisted_adjoint(&basis(2, 0), 0.0).unwrap(), -basis(2, 0));
        assert_eq!(e1.twisted_adjoint(&basis(2, 1), 0.0).unwrap(), basis(2, 1));
        let h2 = V::h_tilde(2).unwrap();
        assert_eq!(h2.twisted_adjoint(&basis(3, 1), 0.0).unwrap(), -basis(3, 1));
    }

    #[test]
    fn non_versor_is_rejected() {
        let bogus = Versor {
            element: CliffordElement::<Rational>::one(2).unwrap().add(&CliffordElement::generator(2, 0).unwrap()).unwrap(),
            parity: Parity::Even,
            factor_count: 0,
        };
        assert_eq!(bogus.twisted_adjoint(&basis(2, 1), 0.0), Err(Error::NotGradeOne));
    }

    #[test]
    fn covering_of_lifts() {
        assert_eq!(V::identity(3).unwrap().covering_matrix(0.0).unwrap(), Matrix::identity(3).unwrap());
        for n in 1..=7 {
            let h = V::h_tilde(n).unwrap();
            assert_eq!(h.covering_matrix(0.0).unwrap(), h_n::<Rational>(n), "n = {n}");
            assert_eq!(h.neg().covering_matrix(0.0).unwrap(), h_n::<Rational>(n));
            assert_ne!(h, h.neg());
        }
    }
}
