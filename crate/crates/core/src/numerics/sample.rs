use rand::Rng;
use rand_distr::StandardNormal;

use crate::error::Result;
use crate::numerics::{Scalar, Vector};
use crate::Rational;

/// Scalars that know how to draw points on the unit sphere `S^{dim-1}`.
///
/// Floats use normalized standard Gaussians; rationals use inverse
/// stereographic images of small integer lattice points, which land exactly
/// on the sphere.
pub trait SampleUnit: Scalar {
    fn sample_unit<R: Rng + ?Sized>(dim: usize, rng: &mut R) -> Vector<Self>;
}

impl SampleUnit for f64 {
    fn sample_unit<R: Rng + ?Sized>(dim: usize, rng: &mut R) -> Vector<f64> {
        loop {
            let g: Vec<f64> = (0..dim).map(|_| rng.sample(StandardNormal)).collect();
            let norm = g.iter().map(|v| v * v).sum::<f64>().sqrt();
            if norm > 1e-6 {
                return Vector::new(g.into_iter().map(|v| v / norm).collect()).expect("dim >= 1");
            }
        }
    }
}

impl SampleUnit for Rational {
    fn sample_unit<R: Rng + ?Sized>(dim: usize, rng: &mut R) -> Vector<Rational> {
        let lattice: Vec<i64> = (0..dim - 1).map(|_| rng.random_range(-6..=6)).collect();
        let scale = rng.random_range(1..=6);
        let mut v = inverse_stereographic(&lattice, scale).expect("scale is nonzero");
        // spread the distinguished pole over every coordinate
        let shift = rng.random_range(0..dim);
        let mut coords = v.into_coords();
        coords.rotate_right(shift);
        for c in coords.iter_mut() {
            if rng.random_bool(0.5) {
                *c = -c.clone();
            }
        }
        v = Vector::new(coords).expect("dim >= 1");
        v
    }
}

/// Exact unit vector in ℚ^{k+1} from the lattice point `q ∈ ℤᵏ` and scale
/// `d ≠ 0`: `(2dq₁, …, 2dqₖ, |q|² − d²) / (|q|² + d²)`.
pub fn inverse_stereographic(q: &[i64], d: i64) -> Result<Vector<Rational>> {
    if d == 0 {
        return Err(crate::Error::Degenerate("zero stereographic scale"));
    }
    let norm_sq: i64 = q.iter().map(|v| v * v).sum();
    let denom = norm_sq + d * d;
    let mut coords: Vec<Rational> = q.iter().map(|&v| Rational::from_ratio(2 * d * v, denom)).collect();
    coords.push(Rational::from_ratio(norm_sq - d * d, denom));
    Vector::new(coords)
}

#[cfg(test)]
mod tests {
    use num_traits::One;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    use super::*;

    #[test]
    fn rational_samples_are_exactly_unit() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for dim in 1..=9 {
            for _ in 0..50 {
                let v = Rational::sample_unit(dim, &mut rng);
                assert_eq!(v.dim(), dim);
                assert!(v.norm_sq().is_one());
            }
        }
    }

    #[test]
    fn float_samples_are_unit() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for dim in 1..=9 {
            let v = f64::sample_unit(dim, &mut rng);
            assert!(v.is_unit(1e-12));
        }
    }

    #[test]
    fn pythagorean_point() {
        let v = inverse_stereographic(&[2], 1).unwrap();
        assert_eq!(v, Vector::from_ratios(&[(4, 5), (3, 5)]).unwrap());
    }
}
