use rand::Rng;

use crate::groups::{Automorphism, Group};
use crate::numerics::Mode;
use crate::quandle::Quandle;

/// `g ▷ h = h⁻¹gh`.
pub fn conj_op<G: Group>(group: &G, g: &G::Elem, h: &G::Elem) -> G::Elem {
    group.conjugate(g, h)
}

/// `g ▷ h = h g⁻¹ h`.
pub fn core_op<G: Group>(group: &G, g: &G::Elem, h: &G::Elem) -> G::Elem {
    group.mul(&group.mul(h, &group.inv(g)), h)
}

/// `g ▷ h = ψ(h⁻¹g) h`.
pub fn twisted_conj_op<G: Group>(group: &G, g: &G::Elem, h: &G::Elem, psi: &Automorphism<G::Elem>) -> G::Elem {
    group.mul(&psi.apply(&group.mul(&group.inv(h), g)), h)
}

/// `g ▷ h = ψ(g h⁻¹) h`.
pub fn alexander_op<G: Group>(group: &G, g: &G::Elem, h: &G::Elem, psi: &Automorphism<G::Elem>) -> G::Elem {
    group.mul(&psi.apply(&group.mul(g, &group.inv(h))), h)
}

macro_rules! group_quandle_common {
    () => {
        fn mode(&self) -> Mode {
            self.group.mode()
        }

        fn sort_key(&self, a: &G::Elem) -> f64 {
            self.group.sort_key(a)
        }

        fn distance(&self, a: &G::Elem, b: &G::Elem) -> f64 {
            self.group.distance(a, b)
        }

        fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> G::Elem {
            self.group.sample(rng)
        }

        fn elements(&self) -> Option<Vec<G::Elem>> {
            self.group.elements()
        }
    };
}

/// Conj(G).
#[derive(Debug, Clone)]
pub struct ConjQuandle<G> {
    pub group: G,
}

impl<G: Group> Quandle for ConjQuandle<G> {
    type Elem = G::Elem;

    fn name(&self) -> String {
        format!("Conj({})", self.group.name())
    }

    fn op(&self, x: &G::Elem, y: &G::Elem) -> G::Elem {
        conj_op(&self.group, x, y)
    }

    fn op_inv(&self, x: &G::Elem, y: &G::Elem) -> G::Elem {
        self.group.mul(&self.group.mul(y, x), &self.group.inv(y))
    }

    group_quandle_common!();
}

/// Core(G).
#[derive(Debug, Clone)]
pub struct CoreQuandle<G> {
    pub group: G,
}

impl<G: Group> Quandle for CoreQuandle<G> {
    type Elem = G::Elem;

    fn name(&self) -> String {
        format!("Core({})", self.group.name())
    }

    fn op(&self, x: &G::Elem, y: &G::Elem) -> G::Elem {
        core_op(&self.group, x, y)
    }

    /// Core quandles are involutory.
    fn op_inv(&self, x: &G::Elem, y: &G::Elem) -> G::Elem {
        self.op(x, y)
    }

    group_quandle_common!();
}

/// The twisted conjugation quandle (G, ψ).
#[derive(Debug, Clone)]
pub struct TwistedConjQuandle<G: Group> {
    pub group: G,
    pub psi: Automorphism<G::Elem>,
}

impl<G: Group> Quandle for TwistedConjQuandle<G> {
    type Elem = G::Elem;

    fn name(&self) -> String {
        format!("TwistedConj({}, {})", self.group.name(), self.psi.name())
    }

    fn op(&self, x: &G::Elem, y: &G::Elem) -> G::Elem {
        twisted_conj_op(&self.group, x, y, &self.psi)
    }

    /// `x = y ψ⁻¹(z y⁻¹)`.
    fn op_inv(&self, z: &G::Elem, y: &G::Elem) -> G::Elem {
        let g = &self.group;
        g.mul(y, &self.psi.apply_inverse(&g.mul(z, &g.inv(y))))
    }

    group_quandle_common!();
}

/// The generalized Alexander quandle (G, ψ).
#[derive(Debug, Clone)]
pub struct AlexanderQuandle<G: Group> {
    pub group: G,
    pub psi: Automorphism<G::Elem>,
}

impl<G: Group> Quandle for AlexanderQuandle<G> {
    type Elem = G::Elem;

    fn name(&self) -> String {
        format!("Alexander({}, {})", self.group.name(), self.psi.name())
    }

    fn op(&self, x: &G::Elem, y: &G::Elem) -> G::Elem {
        alexander_op(&self.group, x, y, &self.psi)
    }

    /// `x = ψ⁻¹(z y⁻¹) y`.
    fn op_inv(&self, z: &G::Elem, y: &G::Elem) -> G::Elem {
        let g = &self.group;
        g.mul(&self.psi.apply_inverse(&g.mul(z, &g.inv(y))), y)
    }

    group_quandle_common!();
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{FiniteGroup, OrthogonalGroup};
    use crate::numerics::{h_matrix, rotation, rotation_from_point, Matrix};
    use crate::Rational;

    #[test]
    fn conj_in_o2() {
        let o2 = OrthogonalGroup::<Rational>::orthogonal(2);
        let r = rotation_from_point(&Rational::from_integer(0.into()), &Rational::from_integer(1.into()));
        let got = conj_op(&o2, &h_matrix(1), &r);
        assert_eq!(got, Matrix::from_int_rows(&[&[-1, 0], &[0, 1]]).unwrap());
    }

    #[test]
    fn core_of_z3() {
        let z3 = FiniteGroup::cyclic(3);
        assert_eq!(core_op(&z3, &0, &1), 2);
        for g in 0..3 {
            assert_eq!(core_op(&z3, &g, &g), g);
        }
    }

    #[test]
    fn twisted_so2_inversion() {
        let so2 = OrthogonalGroup::<f64>::special(2);
        let inv = Automorphism::involution("Inv", |g: &Matrix<f64>| g.transpose());
        let (a, b) = (0.7, -1.3);
        let got = twisted_conj_op(&so2, &rotation(a), &rotation(b), &inv);
        assert!(got.approx_eq(&rotation(2.0 * b - a), 1e-12));
        let id = Automorphism::identity();
        let c = twisted_conj_op(&so2, &rotation(a), &rotation(b), &id);
        assert!(c.approx_eq(&conj_op(&so2, &rotation(a), &rotation(b)), 1e-12));
        assert!(alexander_op(&so2, &rotation(a), &rotation(b), &id).approx_eq(&rotation(a), 1e-12));
    }

    #[test]
    fn inverse_translations() {
        let g = FiniteGroup::symmetric(3);
        let psi = Automorphism::inner(&g, 1);
        let tw = TwistedConjQuandle { group: g.clone(), psi: psi.clone() };
        let al = AlexanderQuandle { group: g.clone(), psi };
        let cj = ConjQuandle { group: g.clone() };
        for x in 0..6 {
            for y in 0..6 {
                assert_eq!(tw.op_inv(&tw.op(&x, &y), &y), x);
                assert_eq!(al.op_inv(&al.op(&x, &y), &y), x);
                assert_eq!(cj.op_inv(&cj.op(&x, &y), &y), x);
            }
        }
    }
}
