//! Concrete groups: orthogonal and unitary matrix groups, finite groups from
//! Cayley tables, the three semidirect products, and the structural maps
//! between them.

mod automorphism;
mod finite;
mod maps;
mod orthogonal;
mod semidirect;
mod su2;

use std::fmt::Debug;

use rand::Rng;

use crate::numerics::Mode;

pub use automorphism::Automorphism;
pub use finite::FiniteGroup;
pub use maps::{delta, gamma, iota_g, reduce_mod2, xi};
pub use orthogonal::OrthogonalGroup;
pub use semidirect::{SemidirectElement, SwElement, SwProduct, Z2Element, Z2Product, ZElement, ZProduct};
pub use su2::{Su2, Su2Matrix};

/// Base-group interface shared by every construction in the crate.
pub trait Group: Send + Sync {
    type Elem: Clone + Debug + Send + Sync;

    fn name(&self) -> String;

    fn mode(&self) -> Mode;

    fn identity(&self) -> Self::Elem;

    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;

    fn inv(&self, a: &Self::Elem) -> Self::Elem;

    /// Residual between two elements; `0.0` iff equal in exact mode.
    fn distance(&self, a: &Self::Elem, b: &Self::Elem) -> f64;

    fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> Self::Elem;

    /// A real number with `|key(a) − key(b)| <= distance(a, b)` whenever the
    /// distance is below 1, used to find near-collisions by sorting. The
    /// constant default is valid but makes such searches quadratic.
    fn sort_key(&self, _a: &Self::Elem) -> f64 {
        0.0
    }

    /// Every element, when the group is finite.
    fn elements(&self) -> Option<Vec<Self::Elem>> {
        None
    }

    /// `h⁻¹·g·h`.
    fn conjugate(&self, g: &Self::Elem, h: &Self::Elem) -> Self::Elem {
        self.mul(&self.mul(&self.inv(h), g), h)
    }
}
