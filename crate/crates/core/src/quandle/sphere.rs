use std::fmt;
use std::marker::PhantomData;

use rand::Rng;

use crate::error::{Error, Result};
use crate::numerics::{Mode, SampleUnit, Scalar, Vector};
use crate::quandle::Quandle;

/// A point of Sⁿ ⊂ ℝⁿ⁺¹.
#[derive(Clone, PartialEq)]
pub struct SpherePoint<S>(Vector<S>);

impl<S: Scalar> SpherePoint<S> {
    pub fn new(v: Vector<S>, tol: f64) -> Result<Self> {
        if !v.is_unit(tol) {
            return Err(Error::NotUnit { norm_sq: v.norm_sq().to_string() });
        }
        Ok(Self(v))
    }

    pub fn from_ratios(coords: &[(i64, i64)]) -> Result<Self> {
        Self::new(Vector::from_ratios(coords)?, 0.0)
    }

    /// The base point `e₁` of Sⁿ.
    pub fn base_point(n: usize) -> Self {
        Self(Vector::basis(n + 1, 0).expect("n + 1 >= 1"))
    }

    pub fn vector(&self) -> &Vector<S> {
        &self.0
    }

    pub fn into_vector(self) -> Vector<S> {
        self.0
    }

    /// Sphere dimension `n` (the ambient dimension is `n + 1`).
    pub fn sphere_dim(&self) -> usize {
        self.0.dim() - 1
    }

    pub fn antipode(&self) -> Self {
        Self(-&self.0)
    }

    pub fn distance(&self, other: &Self) -> f64 {
        self.0.distance(&other.0)
    }
}

impl<S: fmt::Display> fmt::Debug for SpherePoint<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// `x ▷ y = 2⟨x,y⟩y − x`.
pub fn sphere_op<S: Scalar>(x: &SpherePoint<S>, y: &SpherePoint<S>) -> Result<SpherePoint<S>> {
    let ip = x.0.inner_product(&y.0)?;
    Ok(SpherePoint(y.0.scale(&(S::two() * ip)).sub(&x.0)?))
}

/// The spherical quandle Sⁿ_ℝ.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SphereQuandle<S> {
    pub n: usize,
    _scalar: PhantomData<S>,
}

impl<S> SphereQuandle<S> {
    pub fn new(n: usize) -> Self {
        Self { n, _scalar: PhantomData }
    }
}

impl<S: SampleUnit> Quandle for SphereQuandle<S> {
    type Elem = SpherePoint<S>;

    fn name(&self) -> String {
        format!("S^{}", self.n)
    }

    fn mode(&self) -> Mode {
        S::MODE
    }

    fn op(&self, x: &SpherePoint<S>, y: &SpherePoint<S>) -> SpherePoint<S> {
        sphere_op(x, y).expect("points of the same sphere")
    }

    /// The spherical quandle is involutory.
    fn op_inv(&self, x: &SpherePoint<S>, y: &SpherePoint<S>) -> SpherePoint<S> {
        self.op(x, y)
    }

    fn sort_key(&self, x: &SpherePoint<S>) -> f64 {
        x.vector().sort_key()
    }

    fn distance(&self, a: &SpherePoint<S>, b: &SpherePoint<S>) -> f64 {
        a.distance(b)
    }

    fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> SpherePoint<S> {
        SpherePoint(S::sample_unit(self.n + 1, rng))
    }

    fn companions(&self, x: &SpherePoint<S>) -> Vec<SpherePoint<S>> {
        vec![x.antipode()]
    }
}

/// A point of ℝPⁿ, stored as the representative whose first non-negligible
/// coordinate is positive.
#[derive(Clone, PartialEq)]
pub struct ProjectivePoint<S> {
    rep: SpherePoint<S>,
}

impl<S: Scalar> ProjectivePoint<S> {
    /// The class `π(x)`. In float mode coordinates with `|c| <= tol` are
    /// skipped when choosing the sign.
    pub fn from_sphere(x: &SpherePoint<S>, tol: f64) -> Self {
        let lead = x.0.coords().iter().find(|c| !c.is_negligible(tol));
        let flip = lead.is_some_and(|c| c.is_negative());
        Self { rep: if flip { x.antipode() } else { x.clone() } }
    }

    pub fn representative(&self) -> &SpherePoint<S> {
        &self.rep
    }

    /// `min(|x − y|, |x + y|)`, independent of the chosen representatives.
    pub fn distance(&self, other: &Self) -> f64 {
        self.rep.distance(&other.rep).min(self.rep.distance(&other.rep.antipode()))
    }
}

impl<S: fmt::Display> fmt::Debug for ProjectivePoint<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{:?}]", self.rep)
    }
}

/// `[x] ▷ [y] = [x ▷ y]`, well defined because `±x ▷ ±y = ±(x ▷ y)`.
pub fn projective_op<S: Scalar>(x: &ProjectivePoint<S>, y: &ProjectivePoint<S>, tol: f64) -> Result<ProjectivePoint<S>> {
    Ok(ProjectivePoint::from_sphere(&sphere_op(&x.rep, &y.rep)?, tol))
}

/// The projective quandle Pⁿ_ℝ.
#[derive(Debug, Clone, PartialEq)]
pub struct ProjectiveQuandle<S> {
    pub n: usize,
    pub tol: f64,
    _scalar: PhantomData<S>,
}

impl<S> ProjectiveQuandle<S> {
    pub fn new(n: usize, tol: f64) -> Self {
        Self { n, tol, _scalar: PhantomData }
    }
}

impl<S: SampleUnit> Quandle for ProjectiveQuandle<S> {
    type Elem = ProjectivePoint<S>;

    fn name(&self) -> String {
        format!("P^{}", self.n)
    }

    fn mode(&self) -> Mode {
        S::MODE
    }

    fn op(&self, x: &ProjectivePoint<S>, y: &ProjectivePoint<S>) -> ProjectivePoint<S> {
        projective_op(x, y, self.tol).expect("points of the same projective space")
    }

    fn op_inv(&self, x: &ProjectivePoint<S>, y: &ProjectivePoint<S>) -> ProjectivePoint<S> {
        self.op(x, y)
    }

    /// Weighted sum of `|xᵢ|`, which ignores the choice of representative.
    fn sort_key(&self, x: &ProjectivePoint<S>) -> f64 {
        let coords = x.representative().vector().coords();
        let abs: Vec<S> = coords.iter().map(|c| if c.is_negative() { -c.clone() } else { c.clone() }).collect();
        crate::numerics::weighted_key(abs.iter().enumerate(), abs.len())
    }

    fn distance(&self, a: &ProjectivePoint<S>, b: &ProjectivePoint<S>) -> f64 {
        a.distance(b)
    }

    fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> ProjectivePoint<S> {
        ProjectivePoint::from_sphere(&SpherePoint(S::sample_unit(self.n + 1, rng)), self.tol)
    }
}

#[cfg(test)]
mod tests {
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    use super::*;
    use crate::numerics::Matrix;
    use crate::Rational;

    fn pt(c: &[(i64, i64)]) -> SpherePoint<Rational> {
        SpherePoint::from_ratios(c).unwrap()
    }

    #[test]
    fn sphere_op_examples() {
        assert_eq!(sphere_op(&pt(&[(1, 1), (0, 1)]), &pt(&[(0, 1), (1, 1)])).unwrap(), pt(&[(-1, 1), (0, 1)]));
        let p = pt(&[(3, 5), (4, 5)]);
        assert_eq!(sphere_op(&p, &p).unwrap(), p);
        assert_eq!(sphere_op(&p, &pt(&[(1, 1), (0, 1)])).unwrap(), pt(&[(3, 5), (-4, 5)]));
        assert!(sphere_op(&p, &SpherePoint::base_point(2)).is_err());
        assert!(SpherePoint::<Rational>::from_ratios(&[(1, 1), (1, 1)]).is_err());
    }

    #[test]
    fn involutory_and_matrix_form() {
        let q = SphereQuandle::<Rational>::new(3);
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        for _ in 0..100 {
            let (x, y) = (q.sample(&mut rng), q.sample(&mut rng));
            assert_eq!(q.op(&q.op(&x, &y), &y), x);
            // S_y is realized by 2ᵗyy − I, orthogonal with det (−1)ⁿ
            let m = Matrix::line_reflection(y.vector());
            assert_eq!(m.row_mul(x.vector()).unwrap(), *q.op(&x, &y).vector());
            assert!(m.is_orthogonal(0.0));
            assert_eq!(m.det().unwrap(), Rational::from_int(-1));
        }
    }

    #[test]
    fn projective_examples() {
        let x = ProjectivePoint::from_sphere(&pt(&[(1, 1), (0, 1)]), 0.0);
        let y = ProjectivePoint::from_sphere(&pt(&[(0, 1), (1, 1)]), 0.0);
        assert_eq!(projective_op(&x, &x, 0.0).unwrap(), x);
        assert_eq!(projective_op(&x, &y, 0.0).unwrap(), x);
        let neg = ProjectivePoint::from_sphere(&pt(&[(0, 1), (-3, 5), (4, 5)]), 0.0);
        assert_eq!(*neg.representative(), pt(&[(0, 1), (3, 5), (-4, 5)]));
    }

    #[test]
    fn projective_op_is_well_defined() {
        let q = SphereQuandle::<Rational>::new(4);
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..100 {
            let (x, y) = (q.sample(&mut rng), q.sample(&mut rng));
            let expected = ProjectivePoint::from_sphere(&q.op(&x, &y), 0.0);
            for (a, b) in [(x.clone(), y.antipode()), (x.antipode(), y.clone()), (x.antipode(), y.antipode())] {
                assert_eq!(ProjectivePoint::from_sphere(&q.op(&a, &b), 0.0), expected);
            }
        }
    }

    #[test]
    fn float_canonicalization_skips_tiny_coordinates() {
        let x = SpherePoint::new(Vector::new(vec![-1e-12, -1.0]).unwrap(), 1e-9).unwrap();
        let p = ProjectivePoint::from_sphere(&x, 1e-9);
        assert!(p.representative().vector()[1] > 0.0);
    }
}
