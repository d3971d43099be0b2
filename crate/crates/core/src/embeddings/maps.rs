use crate::clifford::{volume_element, PinGroup, Versor};
use crate::error::{Error, Result};
use crate::groups::{
    gamma, iota_g, Automorphism, Group, OrthogonalGroup, Su2, Su2Matrix, SwElement, SwProduct, Z2Element, Z2Product,
    ZElement, ZProduct,
};
use crate::numerics::{h_matrix, rotation_from_point, Matrix, SampleUnit, Scalar, Vector};
use crate::quandle::{
    ConjQuandle, CoreQuandle, ProjectivePoint, ProjectiveQuandle, SpherePoint, SphereQuandle, TwistedConjQuandle,
};

use super::EmbeddingMap;

fn circle_coords<S: Scalar>(p: &SpherePoint<S>) -> Result<(&S, &S)> {
    match p.vector().coords() {
        [c, s] => Ok((c, s)),
        other => Err(Error::DimensionMismatch { expected: 2, found: other.len() }),
    }
}

/// `ι₁(c, s) = [[c, −s], [−s, −c]]`.
pub fn iota_1<S: Scalar>(p: &SpherePoint<S>) -> Result<Matrix<S>> {
    let (c, s) = circle_coords(p)?;
    Matrix::from_rows(vec![vec![c.clone(), -s.clone()], vec![-s.clone(), -c.clone()]])
}

/// `inn(x) = 2ᵗxx − I`, the matrix fixing `x` and negating `x^⊥`.
pub fn inn_map<S: Scalar>(x: &SpherePoint<S>) -> Matrix<S> {
    Matrix::line_reflection(x.vector())
}

/// `iₙ([x]) = inn(x)`, independent of the representative.
pub fn i_n<S: Scalar>(c: &ProjectivePoint<S>) -> Matrix<S> {
    inn_map(c.representative())
}

/// `ιₙ(x) = (−1)ⁿ · e₁⋯e_{n+1} · x` in Pin⁺(n+1).
pub fn iota_n<S: Scalar>(x: &SpherePoint<S>, tol: f64) -> Result<Versor<S>> {
    let dim = x.vector().dim();
    let mut factors: Vec<Vector<S>> = (0..dim).map(|i| Vector::basis(dim, i)).collect::<Result<_>>()?;
    factors.push(x.vector().clone());
    let v = Versor::from_unit_vectors(dim, &factors, tol)?;
    Ok(if x.sphere_dim() % 2 == 1 { v.neg() } else { v })
}

/// The closed form of `ιₙ` written out as a Clifford element, for
/// cross-checking the versor construction.
pub fn iota_n_element<S: Scalar>(x: &SpherePoint<S>) -> Result<crate::clifford::CliffordElement<S>> {
    let dim = x.vector().dim();
    let prod = volume_element::<S>(dim)?.geometric_product(&crate::clifford::CliffordElement::from_vector(x.vector())?)?;
    Ok(if x.sphere_dim() % 2 == 1 { -&prod } else { prod })
}

/// `π_h(u) = p(u)`, the covering matrix.
pub fn pi_h<S: Scalar>(u: &Versor<S>, tol: f64) -> Result<Matrix<S>> {
    u.covering_matrix(tol)
}

/// Bergman's embedding `f_B(g) = (g, g⁻¹, −1)`.
pub fn f_b<G: Group>(group: &G, g: &G::Elem) -> SwElement<G::Elem> {
    SwElement::new(g.clone(), group.inv(g), -1)
}

/// Akita's embedding `f_A(g) = (g, 1)` into `G ⋊_ψ ℤ`.
pub fn f_a<E: Clone>(g: &E) -> ZElement<E> {
    ZElement { g: g.clone(), m: 1 }
}

/// `f_A` followed by reduction mod 2, landing in `G ⋊_ψ ℤ/2`.
pub fn f_a_reduced<E: Clone>(g: &E) -> Z2Element<E> {
    Z2Element::new(g.clone(), 1)
}

/// `𝓘₁(cos θ, sin θ) = rot(θ)`.
pub fn script_i1<S: Scalar>(p: &SpherePoint<S>) -> Result<Matrix<S>> {
    let (c, s) = circle_coords(p)?;
    Ok(rotation_from_point(c, s))
}

/// `𝓘₂(x₁,x₂,x₃,x₄) = (x₁+x₂i, x₃+x₄i; −x₃+x₄i, x₁−x₂i)`.
pub fn script_i2<S: Scalar>(p: &SpherePoint<S>, tol: f64) -> Result<Su2Matrix<S>> {
    Su2Matrix::from_point(p.vector(), tol)
}

/// The double cover `Spin(4) = SU(2)×SU(2) → SO(4)`.
pub fn p4<S: Scalar>(g: &Su2Matrix<S>, h: &Su2Matrix<S>) -> Matrix<S> {
    let x = g.to_point().into_coords();
    let y = h.to_point().into_coords();
    // b(i, j) = x_i y_j with 1-based indices
    let b = |i: usize, j: usize| x[i - 1].clone() * y[j - 1].clone();
    let rows = vec![
        vec![
            b(1, 1) + b(2, 2) + b(3, 3) + b(4, 4),
            b(1, 2) - b(2, 1) - b(3, 4) + b(4, 3),
            b(1, 3) + b(2, 4) - b(3, 1) - b(4, 2),
            b(1, 4) - b(2, 3) + b(3, 2) - b(4, 1),
        ],
        vec![
            -b(1, 2) + b(2, 1) - b(3, 4) + b(4, 3),
            b(1, 1) + b(2, 2) - b(3, 3) - b(4, 4),
            -b(1, 4) + b(2, 3) + b(3, 2) - b(4, 1),
            b(1, 3) + b(2, 4) + b(3, 1) + b(4, 2),
        ],
        vec![
            -b(1, 3) + b(2, 4) + b(3, 1) - b(4, 2),
            b(1, 4) + b(2, 3) + b(3, 2) + b(4, 1),
            b(1, 1) - b(2, 2) + b(3, 3) - b(4, 4),
            -b(1, 2) - b(2, 1) + b(3, 4) + b(4, 3),
        ],
        vec![
            -b(1, 4) - b(2, 3) + b(3, 2) + b(4, 1),
            -b(1, 3) + b(2, 4) - b(3, 1) + b(4, 2),
            b(1, 2) + b(2, 1) + b(3, 4) + b(4, 3),
            b(1, 1) - b(2, 2) - b(3, 3) + b(4, 4),
        ],
    ];
    Matrix::from_rows(rows).expect("4x4")
}

/// The cover `Pin⁺(4) = (SU(2)×SU(2)) ⋊_Sw ℤ^× → O(4)`:
/// `(g, h, 1) ↦ p₄(g,h)` and `(g, h, −1) ↦ h₃·p₄(g,h)`.
///
/// With the product `(g₁,h₁,a)(g₂,h₂,b) = (Sw_b(g₁,h₁)·(g₂,h₂), ab)` and
/// `h₃ p₄(g,h) h₃ = p₄(h,g)`, the factor `h₃` must sit on the left for this
/// to be a homomorphism.
pub fn pin4_cover<S: Scalar>(x: &SwElement<Su2Matrix<S>>) -> Matrix<S> {
    let m = p4(&x.g, &x.h);
    if x.sign < 0 {
        h_matrix::<S>(3).mat_mul(&m).expect("4x4")
    } else {
        m
    }
}

/// `H̃₃ = (I₂, I₂, −1)`.
pub fn h_tilde_3<S: Scalar>() -> SwElement<Su2Matrix<S>> {
    SwElement::new(Su2Matrix::identity(), Su2Matrix::identity(), -1)
}

/// The sphere point `e₁·p₄(g,h)`.
pub fn sphere_point_of_pair<S: Scalar>(g: &Su2Matrix<S>, h: &Su2Matrix<S>) -> SpherePoint<S> {
    SpherePoint::new(p4(g, h).row(0), f64::INFINITY).expect("any norm accepted")
}

/// `ι₃(e₁·p₄(g,h)) = (h⁻¹g, g⁻¹h, −1)`.
pub fn iota_3_pair<S: Scalar>(g: &Su2Matrix<S>, h: &Su2Matrix<S>) -> SwElement<Su2Matrix<S>> {
    SwElement::new(h.adjoint().mul(g), g.adjoint().mul(h), -1)
}

/// `ι₃(x)` for a raw point, presented as `x = e₁·p₄(I₂, 𝓘₂(x))`.
pub fn iota_3<S: Scalar>(x: &SpherePoint<S>, tol: f64) -> Result<SwElement<Su2Matrix<S>>> {
    Ok(iota_3_pair(&Su2Matrix::identity(), &script_i2(x, tol)?))
}

/// `Inv` on an abelian matrix group, `g ↦ gᵀ`.
fn transpose_inversion<S: Scalar>() -> Automorphism<Matrix<S>> {
    Automorphism::involution("Inv", Matrix::transpose)
}

pub type ConjO<S> = ConjQuandle<OrthogonalGroup<S>>;
pub type CoreSo2<S> = CoreQuandle<OrthogonalGroup<S>>;
pub type ConjPin4<S> = ConjQuandle<SwProduct<Su2<S>>>;
pub type So2Twisted<S> = TwistedConjQuandle<OrthogonalGroup<S>>;
pub type So2Reduced<S> = ConjQuandle<Z2Product<OrthogonalGroup<S>>>;

pub fn iota_1_map<S: SampleUnit>() -> EmbeddingMap<SphereQuandle<S>, ConjO<S>> {
    EmbeddingMap::new("iota1", SphereQuandle::new(1), ConjQuandle { group: OrthogonalGroup::orthogonal(2) }, iota_1)
}

pub fn inn_embedding<S: SampleUnit>(n: usize) -> EmbeddingMap<SphereQuandle<S>, ConjO<S>> {
    EmbeddingMap::new("inn", SphereQuandle::new(n), ConjQuandle { group: OrthogonalGroup::orthogonal(n + 1) }, |x| {
        Ok(inn_map(x))
    })
}

pub fn i_n_map<S: SampleUnit>(n: usize, tol: f64) -> EmbeddingMap<ProjectiveQuandle<S>, ConjO<S>> {
    EmbeddingMap::new("i_n", ProjectiveQuandle::new(n, tol), ConjQuandle { group: OrthogonalGroup::orthogonal(n + 1) }, |c| {
        Ok(i_n(c))
    })
}

pub fn iota_n_map<S: SampleUnit>(n: usize, tol: f64) -> EmbeddingMap<SphereQuandle<S>, ConjQuandle<PinGroup<S>>> {
    EmbeddingMap::new("iota_n", SphereQuandle::new(n), ConjQuandle { group: PinGroup::pin(n + 1) }, move |x| {
        iota_n(x, tol)
    })
}

pub fn f_b_map<G: Group + Clone + 'static>(group: G) -> EmbeddingMap<CoreQuandle<G>, ConjQuandle<SwProduct<G>>> {
    let g2 = group.clone();
    EmbeddingMap::new("fB", CoreQuandle { group: group.clone() }, ConjQuandle { group: SwProduct::new(group) }, move |g| {
        Ok(f_b(&g2, g))
    })
}

pub fn f_a_map<G: Group + Clone + 'static>(
    group: G,
    psi: Automorphism<G::Elem>,
) -> EmbeddingMap<TwistedConjQuandle<G>, ConjQuandle<ZProduct<G>>> {
    EmbeddingMap::new(
        "fA",
        TwistedConjQuandle { group: group.clone(), psi: psi.clone() },
        ConjQuandle { group: ZProduct::new(group, psi) },
        |g| Ok(f_a(g)),
    )
}

/// `f_A` composed with the reduction `G ⋊_ψ ℤ → G ⋊_ψ ℤ/2`; requires an
/// involutive `ψ`.
pub fn f_a_reduced_map<G: Group + Clone + 'static>(
    group: G,
    psi: Automorphism<G::Elem>,
    tol: f64,
) -> Result<EmbeddingMap<TwistedConjQuandle<G>, ConjQuandle<Z2Product<G>>>> {
    let target = Z2Product::new(group.clone(), psi.clone(), tol)?;
    Ok(EmbeddingMap::new(
        "fA mod 2",
        TwistedConjQuandle { group, psi },
        ConjQuandle { group: target },
        |g| Ok(f_a_reduced(g)),
    ))
}

pub fn script_i1_map<S: SampleUnit>() -> EmbeddingMap<SphereQuandle<S>, CoreSo2<S>> {
    EmbeddingMap::new("I1", SphereQuandle::new(1), CoreQuandle { group: OrthogonalGroup::special(2) }, script_i1)
}

pub fn script_i2_map<S: SampleUnit>(tol: f64) -> EmbeddingMap<SphereQuandle<S>, CoreQuandle<Su2<S>>> {
    EmbeddingMap::new("I2", SphereQuandle::new(3), CoreQuandle { group: Su2::new() }, move |x| script_i2(x, tol))
}

pub fn iota_3_map<S: SampleUnit>(tol: f64) -> EmbeddingMap<SphereQuandle<S>, ConjPin4<S>> {
    EmbeddingMap::new("iota3", SphereQuandle::new(3), ConjQuandle { group: SwProduct::new(Su2::new()) }, move |x| {
        iota_3(x, tol)
    })
}

/// SO(2) with inversion, the base of the `n = 1` comparison.
pub fn so2_with_inversion<S: SampleUnit>() -> (OrthogonalGroup<S>, Automorphism<Matrix<S>>) {
    (OrthogonalGroup::special(2), transpose_inversion())
}

/// `γ : Conj(O(2)) → Conj(SO(2) ⋊_Inv ℤ/2)`.
pub fn gamma_map<S: SampleUnit>(tol: f64) -> Result<EmbeddingMap<ConjO<S>, So2Reduced<S>>> {
    let (so2, inv) = so2_with_inversion::<S>();
    let target = Z2Product::new(so2, inv, tol)?;
    Ok(EmbeddingMap::new(
        "gamma",
        ConjQuandle { group: OrthogonalGroup::orthogonal(2) },
        ConjQuandle { group: target },
        move |g| gamma(g, tol),
    ))
}

/// `ι_G : Conj(G ⋊_Inv ℤ/2) → Conj((G×G) ⋊_Sw ℤ^×)`.
pub fn iota_g_map<G: Group + Clone + 'static>(
    group: G,
    tol: f64,
) -> Result<EmbeddingMap<ConjQuandle<Z2Product<G>>, ConjQuandle<SwProduct<G>>>> {
    let inv = Automorphism::inversion(&group);
    let source = Z2Product::new(group.clone(), inv, tol)?;
    let g2 = group.clone();
    Ok(EmbeddingMap::new(
        "iota_G",
        ConjQuandle { group: source },
        ConjQuandle { group: SwProduct::new(group) },
        move |x| Ok(iota_g(&g2, x)),
    ))
}

#[cfg(test)]
mod tests {
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    use super::*;
    use crate::clifford::{h_n, Parity};
    use crate::groups::Su2;
    use crate::numerics::DEFAULT_TOLERANCE;
    use crate::quandle::{sphere_op, Quandle};
    use crate::Rational;

    fn pt(c: &[(i64, i64)]) -> SpherePoint<Rational> {
        SpherePoint::from_ratios(c).unwrap()
    }

    #[test]
    fn iota_1_examples() {
        assert_eq!(iota_1(&pt(&[(1, 1), (0, 1)])).unwrap(), h_matrix(1));
        assert_eq!(iota_1(&pt(&[(0, 1), (1, 1)])).unwrap(), Matrix::from_int_rows(&[&[0, -1], &[-1, 0]]).unwrap());
        assert!(iota_1(&pt(&[(1, 1), (0, 1), (0, 1)])).is_err());
    }

    #[test]
    fn inn_examples() {
        let q = SphereQuandle::<Rational>::new(3);
        assert_eq!(inn_map(&SpherePoint::<Rational>::base_point(3)), h_matrix(3));
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let o = OrthogonalGroup::<Rational>::orthogonal(4);
        for _ in 0..50 {
            let x = q.sample(&mut rng);
            assert_eq!(inn_map(&x), inn_map(&x.antipode()));
            // g⁻¹hₙg for g with e₁g = x, g = the reflection swapping e₁ and x
            let g = o.sample(&mut rng);
            let y = SpherePoint::new(g.row(0), 0.0).unwrap();
            assert_eq!(inn_map(&y), o.conjugate(&h_matrix(3), &g));
        }
    }

    #[test]
    fn iota_n_base_point_and_closed_form() {
        for n in 1..=7 {
            let e1 = SpherePoint::<Rational>::base_point(n);
            let v = iota_n(&e1, 0.0).unwrap();
            assert_eq!(v, Versor::h_tilde(n).unwrap(), "n={n}");
            assert_eq!(v.parity(), if n % 2 == 0 { Parity::Even } else { Parity::Odd });
        }
        let q = SphereQuandle::<Rational>::new(4);
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        for _ in 0..20 {
            let x = q.sample(&mut rng);
            assert_eq!(*iota_n(&x, 0.0).unwrap().element(), iota_n_element(&x).unwrap());
        }
    }

    #[test]
    fn iota_n_covers_inn() {
        for n in 2..=5 {
            let q = SphereQuandle::<Rational>::new(n);
            let mut rng = ChaCha8Rng::seed_from_u64(n as u64);
            for _ in 0..20 {
                let x = q.sample(&mut rng);
                assert_eq!(pi_h(&iota_n(&x, 0.0).unwrap(), 0.0).unwrap(), inn_map(&x));
            }
        }
        let h = Versor::<Rational>::h_tilde(4).unwrap();
        assert_eq!(pi_h(&h.neg(), 0.0).unwrap(), h_n(4));
    }

    #[test]
    fn script_i2_core_formula() {
        let x = pt(&[(0, 1), (1, 1), (0, 1), (0, 1)]);
        let y = pt(&[(1, 1), (0, 1), (0, 1), (0, 1)]);
        assert_eq!(sphere_op(&x, &y).unwrap(), x.antipode());
        let su2 = Su2::<Rational>::new();
        let (gx, gy) = (script_i2(&x, 0.0).unwrap(), script_i2(&y, 0.0).unwrap());
        let core = crate::quandle::core_op(&su2, &gx, &gy);
        assert_eq!(core, script_i2(&x.antipode(), 0.0).unwrap());
        assert_eq!(gy, Su2Matrix::identity());
    }

    #[test]
    fn p4_kernel_and_base_point() {
        let id = Su2Matrix::<Rational>::identity();
        let four = Matrix::<Rational>::identity(4).unwrap();
        assert_eq!(p4(&id, &id), four);
        assert_eq!(p4(&id.neg(), &id.neg()), four);
        assert_ne!(p4(&id.neg(), &id), four);
        assert_eq!(pin4_cover(&h_tilde_3::<Rational>()), h_matrix(3));
        assert_eq!(pin4_cover(&SwElement::new(id.clone(), id, 1)), four);
    }

    #[test]
    fn p4_first_row_is_quotient() {
        let su2 = Su2::<Rational>::new();
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        for _ in 0..50 {
            let (g, h) = (su2.sample(&mut rng), su2.sample(&mut rng));
            let x = sphere_point_of_pair(&g, &h);
            assert_eq!(script_i2(&x, 0.0).unwrap(), g.adjoint().mul(&h));
        }
    }

    #[test]
    fn p4_is_a_homomorphism() {
        let su2 = Su2::<f64>::new();
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for _ in 0..200 {
            let (g1, h1, g2, h2) = (su2.sample(&mut rng), su2.sample(&mut rng), su2.sample(&mut rng), su2.sample(&mut rng));
            let lhs = p4(&g1.mul(&g2), &h1.mul(&h2));
            let rhs = p4(&g1, &h1).mat_mul(&p4(&g2, &h2)).unwrap();
            assert!(lhs.approx_eq(&rhs, DEFAULT_TOLERANCE));
        }
    }

    #[test]
    fn pin4_cover_is_a_homomorphism_and_covers_inn() {
        let pin4 = SwProduct::new(Su2::<Rational>::new());
        let sphere = SphereQuandle::<Rational>::new(3);
        let mut rng = ChaCha8Rng::seed_from_u64(10);
        for _ in 0..50 {
            let (a, b) = (pin4.sample(&mut rng), pin4.sample(&mut rng));
            let lhs = pin4_cover(&pin4.mul(&a, &b));
            let rhs = pin4_cover(&a).mat_mul(&pin4_cover(&b)).unwrap();
            assert_eq!(lhs, rhs);
            let x = sphere.sample(&mut rng);
            assert_eq!(pin4_cover(&iota_3(&x, 0.0).unwrap()), inn_map(&x));
        }
    }

    #[test]
    fn iota_3_examples() {
        let id = Su2Matrix::<Rational>::identity();
        assert_eq!(iota_3_pair(&id, &id), h_tilde_3());
        assert_eq!(iota_3(&SpherePoint::<Rational>::base_point(3), 0.0).unwrap(), h_tilde_3());
        let su2 = Su2::<Rational>::new();
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..20 {
            let (g, h) = (su2.sample(&mut rng), su2.sample(&mut rng));
            assert_eq!(iota_3_pair(&g, &h), iota_3_pair(&g.neg(), &h.neg()));
            let x = sphere_point_of_pair(&g, &h);
            assert_eq!(iota_3_pair(&g, &h), iota_3(&x, 0.0).unwrap());
        }
    }

    #[test]
    fn gamma_of_iota_1_is_f_a_of_script_i1() {
        let q = SphereQuandle::<Rational>::new(1);
        let mut rng = ChaCha8Rng::seed_from_u64(12);
        for _ in 0..50 {
            let x = q.sample(&mut rng);
            let lhs = gamma(&iota_1(&x).unwrap(), 0.0).unwrap();
            assert_eq!(lhs, f_a_reduced(&script_i1(&x).unwrap()));
        }
    }
}
