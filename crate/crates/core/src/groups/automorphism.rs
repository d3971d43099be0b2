use std::fmt;
use std::sync::Arc;

use crate::groups::Group;

type MapFn<E> = Arc<dyn Fn(&E) -> E + Send + Sync>;

/// A group automorphism carried as a value: forward map, inverse map, a
/// name and an involutive flag.
pub struct Automorphism<E> {
    name: String,
    forward: MapFn<E>,
    backward: MapFn<E>,
    involutive: bool,
}

impl<E> Clone for Automorphism<E> {
    fn clone(&self) -> Self {
        Self {
            name: self.name.clone(),
            forward: Arc::clone(&self.forward),
            backward: Arc::clone(&self.backward),
            involutive: self.involutive,
        }
    }
}

impl<E> fmt::Debug for Automorphism<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Automorphism")
            .field("name", &self.name)
            .field("involutive", &self.involutive)
            .finish()
    }
}

impl<E: Clone + 'static> Automorphism<E> {
    pub fn new(
        name: impl Into<String>,
        forward: impl Fn(&E) -> E + Send + Sync + 'static,
        backward: impl Fn(&E) -> E + Send + Sync + 'static,
    ) -> Self {
        Self { name: name.into(), forward: Arc::new(forward), backward: Arc::new(backward), involutive: false }
    }

    /// An automorphism with `ψ² = id`.
    pub fn involution(name: impl Into<String>, map: impl Fn(&E) -> E + Send + Sync + 'static) -> Self {
        let map: MapFn<E> = Arc::new(map);
        Self { name: name.into(), forward: Arc::clone(&map), backward: map, involutive: true }
    }

    pub fn identity() -> Self {
        Self::involution("id", E::clone)
    }

    /// `g ↦ g⁻¹`; an automorphism exactly when the group is abelian.
    pub fn inversion<G>(group: &G) -> Self
    where
        G: Group<Elem = E> + Clone + 'static,
    {
        let group = group.clone();
        Self::involution("Inv", move |g| group.inv(g))
    }

    /// Inner automorphism `g ↦ c⁻¹gc`.
    pub fn inner<G>(group: &G, c: E) -> Self
    where
        G: Group<Elem = E> + Clone + 'static,
        E: fmt::Debug + Send + Sync,
    {
        let (g1, g2) = (group.clone(), group.clone());
        let c_inv = group.inv(&c);
        let c2 = c.clone();
        Self::new(format!("conj by {c:?}"), move |g| g1.conjugate(g, &c2), move |g| g2.conjugate(g, &c_inv))
    }
}

impl<E: Clone> Automorphism<E> {
    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn is_involutive(&self) -> bool {
        self.involutive
    }

    pub fn apply(&self, g: &E) -> E {
        (self.forward)(g)
    }

    pub fn apply_inverse(&self, g: &E) -> E {
        (self.backward)(g)
    }

    /// `ψⁿ(g)` for any integer `n`.
    pub fn power(&self, n: i64, g: &E) -> E {
        if self.involutive {
            return if n.rem_euclid(2) == 0 { g.clone() } else { self.apply(g) };
        }
        let mut out = g.clone();
        for _ in 0..n.unsigned_abs() {
            out = if n > 0 { self.apply(&out) } else { self.apply_inverse(&out) };
        }
        out
    }
}
