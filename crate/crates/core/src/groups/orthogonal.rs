use std::marker::PhantomData;

use rand::Rng;

use crate::groups::Group;
use crate::numerics::{Matrix, Mode, SampleUnit};

/// O(n), or SO(n) when `special`, as real `n × n` matrices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrthogonalGroup<S> {
    pub n: usize,
    pub special: bool,
    _scalar: PhantomData<S>,
}

impl<S> OrthogonalGroup<S> {
    pub fn orthogonal(n: usize) -> Self {
        Self { n, special: false, _scalar: PhantomData }
    }

    pub fn special(n: usize) -> Self {
        Self { n, special: true, _scalar: PhantomData }
    }
}

impl<S: SampleUnit> Group for OrthogonalGroup<S> {
    type Elem = Matrix<S>;

    fn name(&self) -> String {
        if self.special {
            format!("SO({})", self.n)
        } else {
            format!("O({})", self.n)
        }
    }

    fn mode(&self) -> Mode {
        S::MODE
    }

    fn identity(&self) -> Matrix<S> {
        Matrix::identity(self.n).expect("n >= 1")
    }

    fn mul(&self, a: &Matrix<S>, b: &Matrix<S>) -> Matrix<S> {
        a.mat_mul(b).expect("same size")
    }

    fn inv(&self, a: &Matrix<S>) -> Matrix<S> {
        a.transpose()
    }

    fn sort_key(&self, a: &Matrix<S>) -> f64 {
        a.sort_key()
    }

    fn distance(&self, a: &Matrix<S>, b: &Matrix<S>) -> f64 {
        a.distance(b)
    }

    /// Product of random hyperplane reflections `I − 2·ᵗv·v` (an even number
    /// of them for SO(n)), so rational samples stay exactly orthogonal.
    fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> Matrix<S> {
        let mut count = rng.random_range(0..=self.n + 1);
        if self.special && count % 2 == 1 {
            count += 1;
        }
        (0..count).fold(self.identity(), |acc, _| {
            let v = S::sample_unit(self.n, rng);
            let reflection = -&Matrix::line_reflection(&v);
            acc.mat_mul(&reflection).expect("same size")
        })
    }
}

#[cfg(test)]
mod tests {
    use num_traits::One;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    use super::*;
    use crate::Rational;

    #[test]
    fn samples_are_members() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for n in 1..=4 {
            for special in [false, true] {
                let g = OrthogonalGroup::<Rational> { n, special, _scalar: PhantomData };
                for _ in 0..20 {
                    let m = g.sample(&mut rng);
                    assert!(m.is_orthogonal(0.0));
                    if special {
                        assert!(m.det().unwrap().is_one());
                    }
                }
            }
        }
    }

    #[test]
    fn orthogonal_implies_unit_determinant() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        let g = OrthogonalGroup::<f64>::orthogonal(5);
        for _ in 0..50 {
            let m = g.sample(&mut rng);
            assert!(m.is_orthogonal(1e-9));
            assert!((m.det().unwrap().abs() - 1.0).abs() < 1e-9);
        }
    }
}
