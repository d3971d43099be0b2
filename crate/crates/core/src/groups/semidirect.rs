use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::groups::{Automorphism, Group};
use crate::numerics::Mode;

/// Element `(g, h, a)` of `(G×G) ⋊_Sw ℤ^×`, with `a ∈ {+1, −1}`.
#[derive(Debug, Clone, PartialEq)]
pub struct SwElement<E> {
    pub g: E,
    pub h: E,
    pub sign: i8,
}

/// Element `(g, m)` of `G ⋊_ψ ℤ`.
#[derive(Debug, Clone, PartialEq)]
pub struct ZElement<E> {
    pub g: E,
    pub m: i64,
}

/// Element `(g, m + 2ℤ)` of `G ⋊_ψ ℤ/2ℤ`, with `m ∈ {0, 1}`.
#[derive(Debug, Clone, PartialEq)]
pub struct Z2Element<E> {
    pub g: E,
    pub m: u8,
}

impl<E> SwElement<E> {
    pub fn new(g: E, h: E, sign: i8) -> Self {
        debug_assert!(sign == 1 || sign == -1);
        Self { g, h, sign }
    }
}

impl<E> Z2Element<E> {
    pub fn new(g: E, m: i64) -> Self {
        Self { g, m: m.rem_euclid(2) as u8 }
    }
}

/// Any of the three semidirect-product elements.
#[derive(Debug, Clone, PartialEq)]
pub enum SemidirectElement<E> {
    Sw(SwElement<E>),
    Z(ZElement<E>),
    Z2(Z2Element<E>),
}

impl<E> From<SwElement<E>> for SemidirectElement<E> {
    fn from(x: SwElement<E>) -> Self {
        Self::Sw(x)
    }
}

impl<E> From<ZElement<E>> for SemidirectElement<E> {
    fn from(x: ZElement<E>) -> Self {
        Self::Z(x)
    }
}

impl<E> From<Z2Element<E>> for SemidirectElement<E> {
    fn from(x: Z2Element<E>) -> Self {
        Self::Z2(x)
    }
}

/// `(G×G) ⋊_Sw ℤ^×` where `Sw_{−1}` swaps the two factors.
#[derive(Debug, Clone)]
pub struct SwProduct<G> {
    pub base: G,
}

impl<G: Group> SwProduct<G> {
    pub fn new(base: G) -> Self {
        Self { base }
    }

    fn swap_if(sign: i8, g: &G::Elem, h: &G::Elem) -> (G::Elem, G::Elem) {
        if sign < 0 {
            (h.clone(), g.clone())
        } else {
            (g.clone(), h.clone())
        }
    }
}

impl<G: Group> Group for SwProduct<G> {
    type Elem = SwElement<G::Elem>;

    fn name(&self) -> String {
        format!("({0}x{0}) x|_Sw Z^x", self.base.name())
    }

    fn mode(&self) -> Mode {
        self.base.mode()
    }

    fn identity(&self) -> Self::Elem {
        SwElement::new(self.base.identity(), self.base.identity(), 1)
    }

    /// `(g₁,h₁,a)·(g₂,h₂,b) = (Sw_b(g₁,h₁)·(g₂,h₂), ab)`.
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let (g1, h1) = Self::swap_if(b.sign, &a.g, &a.h);
        SwElement::new(self.base.mul(&g1, &b.g), self.base.mul(&h1, &b.h), a.sign * b.sign)
    }

    fn inv(&self, a: &Self::Elem) -> Self::Elem {
        let (g, h) = Self::swap_if(a.sign, &a.g, &a.h);
        SwElement::new(self.base.inv(&g), self.base.inv(&h), a.sign)
    }

    fn sort_key(&self, a: &Self::Elem) -> f64 {
        0.5 * (self.base.sort_key(&a.g) + self.base.sort_key(&a.h))
    }

    fn distance(&self, a: &Self::Elem, b: &Self::Elem) -> f64 {
        if a.sign != b.sign {
            return f64::INFINITY;
        }
        self.base.distance(&a.g, &b.g).max(self.base.distance(&a.h, &b.h))
    }

    fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> Self::Elem {
        let g = self.base.sample(rng);
        let h = self.base.sample(rng);
        SwElement::new(g, h, if rng.random_bool(0.5) { 1 } else { -1 })
    }

    fn elements(&self) -> Option<Vec<Self::Elem>> {
        let base = self.base.elements()?;
        let mut out = Vec::with_capacity(2 * base.len() * base.len());
        for sign in [1, -1] {
            for g in &base {
                for h in &base {
                    out.push(SwElement::new(g.clone(), h.clone(), sign));
                }
            }
        }
        Some(out)
    }
}

/// `G ⋊_ψ ℤ` with `(g,m)·(h,n) = (ψⁿ(g)·h, m+n)`.
#[derive(Debug, Clone)]
pub struct ZProduct<G: Group> {
    pub base: G,
    pub psi: Automorphism<G::Elem>,
}

impl<G: Group> ZProduct<G>
where
    G::Elem: 'static,
{
    pub fn new(base: G, psi: Automorphism<G::Elem>) -> Self {
        Self { base, psi }
    }
}

impl<G: Group> Group for ZProduct<G>
where
    G::Elem: 'static,
{
    type Elem = ZElement<G::Elem>;

    fn name(&self) -> String {
        format!("{} x|_{} Z", self.base.name(), self.psi.name())
    }

    fn mode(&self) -> Mode {
        self.base.mode()
    }

    fn identity(&self) -> Self::Elem {
        ZElement { g: self.base.identity(), m: 0 }
    }

    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        ZElement { g: self.base.mul(&self.psi.power(b.m, &a.g), &b.g), m: a.m + b.m }
    }

    /// `(g,m)⁻¹ = (ψ^{−m}(g⁻¹), −m)`.
    fn inv(&self, a: &Self::Elem) -> Self::Elem {
        ZElement { g: self.psi.power(-a.m, &self.base.inv(&a.g)), m: -a.m }
    }

    fn sort_key(&self, a: &Self::Elem) -> f64 {
        self.base.sort_key(&a.g)
    }

    fn distance(&self, a: &Self::Elem, b: &Self::Elem) -> f64 {
        if a.m != b.m {
            return f64::INFINITY;
        }
        self.base.distance(&a.g, &b.g)
    }

    fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> Self::Elem {
        ZElement { g: self.base.sample(rng), m: rng.random_range(-3..=3) }
    }
}

/// `G ⋊_ψ ℤ/2ℤ` for an involutive `ψ`.
#[derive(Debug, Clone)]
pub struct Z2Product<G: Group> {
    pub base: G,
    pub psi: Automorphism<G::Elem>,
}

impl<G: Group> Z2Product<G>
where
    G::Elem: 'static,
{
    /// Fails unless `ψ` is flagged involutive and `ψ² = id` on sampled
    /// (or all, for finite groups) elements.
    pub fn new(base: G, psi: Automorphism<G::Elem>, tol: f64) -> Result<Self> {
        if !psi.is_involutive() {
            return Err(Error::NonInvolutive(psi.name().to_owned()));
        }
        let probes = base.elements().unwrap_or_else(|| {
            let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
            (0..32).map(|_| base.sample(&mut rng)).collect()
        });
        for g in &probes {
            let back = psi.apply(&psi.apply(g));
            if !crate::numerics::residual_passes(base.mode(), base.distance(&back, g), tol) {
                return Err(Error::NonInvolutive(psi.name().to_owned()));
            }
        }
        Ok(Self { base, psi })
    }
}

impl<G: Group> Group for Z2Product<G>
where
    G::Elem: 'static,
{
    type Elem = Z2Element<G::Elem>;

    fn name(&self) -> String {
        format!("{} x|_{} Z/2", self.base.name(), self.psi.name())
    }

    fn mode(&self) -> Mode {
        self.base.mode()
    }

    fn identity(&self) -> Self::Elem {
        Z2Element { g: self.base.identity(), m: 0 }
    }

    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        Z2Element { g: self.base.mul(&self.psi.power(b.m.into(), &a.g), &b.g), m: (a.m + b.m) % 2 }
    }

    fn inv(&self, a: &Self::Elem) -> Self::Elem {
        Z2Element { g: self.psi.power(a.m.into(), &self.base.inv(&a.g)), m: a.m }
    }

    fn sort_key(&self, a: &Self::Elem) -> f64 {
        self.base.sort_key(&a.g)
    }

    fn distance(&self, a: &Self::Elem, b: &Self::Elem) -> f64 {
        if a.m != b.m {
            return f64::INFINITY;
        }
        self.base.distance(&a.g, &b.g)
    }

    fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> Self::Elem {
        Z2Element { g: self.base.sample(rng), m: rng.random_range(0..2) }
    }

    fn elements(&self) -> Option<Vec<Self::Elem>> {
        let base = self.base.elements()?;
        Some((0..2).flat_map(|m| base.iter().map(move |g| Z2Element { g: g.clone(), m })).collect())
    }
}
