//! The embedding and isomorphism maps between quandles: ι₁, inn, iₙ, ιₙ,
//! π_h, f_B, f_A, 𝓘₁, 𝓘₂, p₄, the Pin⁺(4) cover and ι₃.

mod maps;

use std::fmt;
use std::sync::Arc;

use crate::error::Result;
use crate::quandle::Quandle;

pub use maps::*;

type Evaluator<D, C> = Arc<dyn Fn(&<D as Quandle>::Elem) -> Result<<C as Quandle>::Elem> + Send + Sync>;

/// A named map between two quandles, carried as a value so the verifiers
/// can treat every embedding (and deliberately broken ones) uniformly.
pub struct EmbeddingMap<D: Quandle, C: Quandle> {
    name: String,
    domain: D,
    codomain: C,
    eval: Evaluator<D, C>,
}

impl<D: Quandle, C: Quandle> Clone for EmbeddingMap<D, C>
where
    D: Clone,
    C: Clone,
{
    fn clone(&self) -> Self {
        Self {
            name: self.name.clone(),
            domain: self.domain.clone(),
            codomain: self.codomain.clone(),
            eval: Arc::clone(&self.eval),
        }
    }
}

impl<D: Quandle, C: Quandle> fmt::Debug for EmbeddingMap<D, C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {} -> {}", self.name, self.domain.name(), self.codomain.name())
    }
}

impl<D: Quandle, C: Quandle> EmbeddingMap<D, C> {
    pub fn new(
        name: impl Into<String>,
        domain: D,
        codomain: C,
        eval: impl Fn(&D::Elem) -> Result<C::Elem> + Send + Sync + 'static,
    ) -> Self {
        Self { name: name.into(), domain, codomain, eval: Arc::new(eval) }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn domain(&self) -> &D {
        &self.domain
    }

    pub fn codomain(&self) -> &C {
        &self.codomain
    }

    pub fn apply(&self, x: &D::Elem) -> Result<C::Elem> {
        (self.eval)(x)
    }

    /// Same domain and codomain, different evaluator.
    pub fn with_evaluator(
        &self,
        name: impl Into<String>,
        eval: impl Fn(&D::Elem) -> Result<C::Elem> + Send + Sync + 'static,
    ) -> Self
    where
        D: Clone,
        C: Clone,
    {
        Self::new(name, self.domain.clone(), self.codomain.clone(), eval)
    }
}
