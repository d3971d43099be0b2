use crate::error::{Error, Result};
use crate::groups::{Group, SwElement, Z2Element, ZElement};
use crate::numerics::{j_matrix, Matrix, Scalar};

/// `ξ(n) = (−1)ⁿ`, the surjection ℤ → ℤ^×.
pub fn xi(n: i64) -> i8 {
    if n.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// `ι_G(g, m + 2ℤ) = (g, g⁻¹, ξ(m))`, an injective homomorphism
/// `G ⋊_Inv ℤ/2ℤ → (G×G) ⋊_Sw ℤ^×` for abelian `G`.
pub fn iota_g<G: Group>(group: &G, x: &Z2Element<G::Elem>) -> SwElement<G::Elem> {
    SwElement::new(x.g.clone(), group.inv(&x.g), xi(x.m.into()))
}

/// `id × proj: G ⋊_ψ ℤ → G ⋊_ψ ℤ/2ℤ`.
pub fn reduce_mod2<E: Clone>(x: &ZElement<E>) -> Z2Element<E> {
    Z2Element::new(x.g.clone(), x.m)
}

/// `γ: O(2) → SO(2) ⋊_Inv ℤ/2ℤ`, with `a = (1 − det g)/2`:
/// `γ(g) = (Inv^a(g·Jᵃ), a + 2ℤ)`.
pub fn gamma<S: Scalar>(g: &Matrix<S>, tol: f64) -> Result<Z2Element<Matrix<S>>> {
    if g.rows() != 2 || !g.is_orthogonal(tol) {
        return Err(Error::NotOrthogonal);
    }
    let det = g.det()?;
    if det.approx_eq(&S::one(), tol) {
        Ok(Z2Element { g: g.clone(), m: 0 })
    } else {
        // inverse in SO(2) is the transpose
        let gj = g.mat_mul(&j_matrix())?;
        Ok(Z2Element { g: gj.transpose(), m: 1 })
    }
}

/// `δ(g, a + 2ℤ) = Jᵃ·g`, the inverse of [`gamma`].
pub fn delta<S: Scalar>(x: &Z2Element<Matrix<S>>) -> Matrix<S> {
    if x.m == 0 {
        x.g.clone()
    } else {
        j_matrix().mat_mul(&x.g).expect("2x2")
    }
}

#[cfg(test)]
mod tests {
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    use super::*;
    use crate::groups::{Automorphism, FiniteGroup, OrthogonalGroup, SwProduct, Z2Product};
    use crate::numerics::{rotation, rotation_from_point, SampleUnit};
    use crate::Rational;

    #[test]
    fn xi_values() {
        assert_eq!(xi(0), 1);
        assert_eq!(xi(1), -1);
        assert_eq!(xi(7), -1);
        assert_eq!(xi(-2), 1);
    }

    #[test]
    fn iota_g_examples_and_homomorphism() {
        let g = FiniteGroup::cyclic(6);
        assert_eq!(iota_g(&g, &Z2Element { g: 0, m: 0 }), SwElement::new(0, 0, 1));
        assert_eq!(iota_g(&g, &Z2Element { g: 2, m: 1 }), SwElement::new(2, 4, -1));
        let z2 = Z2Product::new(g.clone(), Automorphism::inversion(&g), 0.0).unwrap();
        let sw = SwProduct::new(g.clone());
        let all = z2.elements().unwrap();
        let images: Vec<_> = all.iter().map(|x| iota_g(&g, x)).collect();
        for (i, a) in all.iter().enumerate() {
            for b in &all {
                assert_eq!(iota_g(&g, &z2.mul(a, b)), sw.mul(&iota_g(&g, a), &iota_g(&g, b)));
            }
            for (j, other) in images.iter().enumerate() {
                assert_eq!(i == j, &images[i] == other);
            }
        }
    }

    #[test]
    fn gamma_examples() {
        let r = rotation(0.4);
        let out = gamma(&r, 1e-9).unwrap();
        assert_eq!(out.m, 0);
        assert!(out.g.approx_eq(&r, 1e-12));

        let j = j_matrix::<Rational>();
        let out = gamma(&j, 0.0).unwrap();
        assert_eq!(out, Z2Element { g: Matrix::identity(2).unwrap(), m: 1 });

        assert!(matches!(gamma(&Matrix::<f64>::identity(3).unwrap(), 1e-9), Err(Error::NotOrthogonal)));
        let scaled = Matrix::<f64>::identity(2).unwrap().scale(&2.0);
        assert!(gamma(&scaled, 1e-9).is_err());
    }

    #[test]
    fn gamma_is_a_homomorphism_in_all_four_cases() {
        let o2 = OrthogonalGroup::<Rational>::orthogonal(2);
        let so2 = OrthogonalGroup::<Rational>::special(2);
        let target = Z2Product::new(so2.clone(), Automorphism::inversion(&so2), 0.0).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let h1 = j_matrix::<Rational>();
        let mut seen = [[false; 2]; 2];
        for _ in 0..200 {
            let p = Rational::sample_unit(2, &mut rng);
            let q = Rational::sample_unit(2, &mut rng);
            let mut g = rotation_from_point(&p[0], &p[1]);
            let mut h = rotation_from_point(&q[0], &q[1]);
            let (dg, dh) = (rng.random_bool(0.5), rng.random_bool(0.5));
            if dg {
                g = h1.mat_mul(&g).unwrap();
            }
            if dh {
                h = h1.mat_mul(&h).unwrap();
            }
            seen[dg as usize][dh as usize] = true;
            let lhs = gamma(&o2.mul(&g, &h), 0.0).unwrap();
            let rhs = target.mul(&gamma(&g, 0.0).unwrap(), &gamma(&h, 0.0).unwrap());
            assert_eq!(lhs, rhs);
            assert_eq!(delta(&gamma(&g, 0.0).unwrap()), g);
        }
        assert!(seen.iter().flatten().all(|&s| s));
    }
}
