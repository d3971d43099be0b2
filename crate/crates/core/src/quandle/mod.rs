//! Quandles: the abstraction, concrete families (spherical, projective,
//! conjugation, core, twisted conjugation, generalized Alexander, finite
//! tables) and axiom/structure checkers.

mod axioms;
mod finite;
mod group_quandles;
mod sphere;

use std::fmt::Debug;

use rand::Rng;

use crate::numerics::Mode;

pub use axioms::check_axioms;
pub use finite::{alexander_table, core_table, twisted_conj_table, FiniteQuandle, Permutation};
pub use group_quandles::{
    alexander_op, conj_op, core_op, twisted_conj_op, AlexanderQuandle, ConjQuandle, CoreQuandle,
    TwistedConjQuandle,
};
pub use sphere::{projective_op, sphere_op, ProjectivePoint, ProjectiveQuandle, SpherePoint, SphereQuandle};

/// A set with a binary operation `x ▷ y` satisfying Q1–Q3, together with the
/// inverse right translation `x ▷⁻¹ y`, a residual metric and a seeded
/// sampler.
pub trait Quandle: Send + Sync {
    type Elem: Clone + Debug + Send + Sync;

    fn name(&self) -> String;

    fn mode(&self) -> Mode;

    fn op(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem;

    fn op_inv(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem;

    fn distance(&self, a: &Self::Elem, b: &Self::Elem) -> f64;

    fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> Self::Elem;

    /// See [`Group::sort_key`](crate::groups::Group::sort_key).
    fn sort_key(&self, _x: &Self::Elem) -> f64 {
        0.0
    }

    /// The whole carrier, when finite.
    fn elements(&self) -> Option<Vec<Self::Elem>> {
        None
    }

    /// Extra points worth probing next to a sample (e.g. its antipode).
    fn companions(&self, _x: &Self::Elem) -> Vec<Self::Elem> {
        Vec::new()
    }
}
