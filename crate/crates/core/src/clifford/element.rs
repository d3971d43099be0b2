use std::collections::BTreeMap;
use std::fmt;
use std::ops::Neg;

use crate::error::{Error, Result};
use crate::numerics::{Scalar, Vector};

/// Largest supported number of generators (4096 blades).
pub const MAX_DIMENSION: usize = 12;

/// Blade bitmask: bit `i` set iff generator `e_{i+1}` is present.
pub type Blade = u32;

pub fn grade(blade: Blade) -> u32 {
    blade.count_ones()
}

/// Sign of `e_A · e_B` relative to `e_{A xor B}` with every `eᵢ² = +1`.
///
/// Counts the transpositions needed to sort the concatenated generator
/// list: each generator of `a` must pass every lower-indexed generator of
/// `b`.
pub fn reorder_sign(a: Blade, b: Blade) -> i8 {
    let mut a = a >> 1;
    let mut swaps = 0;
    while a != 0 {
        swaps += (a & b).count_ones();
        a >>= 1;
    }
    if swaps % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Element of the Clifford algebra Cl(n) with positive-definite metric.
///
/// Stored as a sparse blade → coefficient map. Exact zeros are never stored;
/// small float coefficients stay until [`CliffordElement::prune`] is called.
#[derive(Clone, PartialEq)]
pub struct CliffordElement<S> {
    dim: usize,
    terms: BTreeMap<Blade, S>,
}

impl<S: Scalar> CliffordElement<S> {
    pub fn zero(dim: usize) -> Result<Self> {
        if dim == 0 {
            return Err(Error::Degenerate("Clifford algebra with no generators"));
        }
        if dim > MAX_DIMENSION {
            return Err(Error::DimensionTooLarge(dim));
        }
        Ok(Self { dim, terms: BTreeMap::new() })
    }

    pub fn scalar(dim: usize, value: S) -> Result<Self> {
        Self::blade(dim, 0, value)
    }

    pub fn one(dim: usize) -> Result<Self> {
        Self::scalar(dim, S::one())
    }

    pub fn blade(dim: usize, blade: Blade, coeff: S) -> Result<Self> {
        let mut e = Self::zero(dim)?;
        if blade >> dim != 0 {
            return Err(Error::DimensionMismatch { expected: dim, found: (32 - blade.leading_zeros()) as usize });
        }
        e.add_term(blade, coeff);
        Ok(e)
    }

    /// The generator `e_{index+1}`.
    pub fn generator(dim: usize, index: usize) -> Result<Self> {
        if index >= dim {
            return Err(Error::DimensionMismatch { expected: dim, found: index + 1 });
        }
        Self::blade(dim, 1 << index, S::one())
    }

    /// Product of generators with the given zero-based indices, in order.
    pub fn generator_product(dim: usize, indices: &[usize]) -> Result<Self> {
        indices.iter().try_fold(Self::one(dim)?, |acc, &i| acc.geometric_product(&Self::generator(dim, i)?))
    }

    /// Embeds `x` as the grade-1 element `Σ xᵢ eᵢ`.
    pub fn from_vector(x: &Vector<S>) -> Result<Self> {
        let mut e = Self::zero(x.dim())?;
        for (i, c) in x.coords().iter().enumerate() {
            e.add_term(1 << i, c.clone());
        }
        Ok(e)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn terms(&self) -> impl Iterator<Item = (Blade, &S)> {
        self.terms.iter().map(|(b, c)| (*b, c))
    }

    pub fn coefficient(&self, blade: Blade) -> S {
        self.terms.get(&blade).cloned().unwrap_or_else(S::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, blade: Blade, coeff: S) {
        let sum = match self.terms.remove(&blade) {
            Some(c) => c + coeff,
            None => coeff,
        };
        if !sum.is_zero() {
            self.terms.insert(blade, sum);
        }
    }

    fn check_dim(&self, other: &Self) -> Result<()> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, found: other.dim });
        }
        Ok(())
    }

    pub fn geometric_product(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        let mut out = Self { dim: self.dim, terms: BTreeMap::new() };
        for (&a, ca) in &self.terms {
            for (&b, cb) in &other.terms {
                let c = ca.clone() * cb.clone();
                let c = if reorder_sign(a, b) < 0 { -c } else { c };
                out.add_term(a ^ b, c);
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        let mut out = self.clone();
        for (&b, c) in &other.terms {
            out.add_term(b, c.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, k: &S) -> Self {
        let mut out = Self { dim: self.dim, terms: BTreeMap::new() };
        for (&b, c) in &self.terms {
            out.add_term(b, c.clone() * k.clone());
        }
        out
    }

    fn map_by_grade(&self, sign: impl Fn(u32) -> bool) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(&b, c)| (b, if sign(grade(b)) { -c.clone() } else { c.clone() }))
            .collect();
        Self { dim: self.dim, terms }
    }

    /// Grade involution α: grade-k terms scaled by (−1)ᵏ.
    pub fn grade_involution(&self) -> Self {
        self.map_by_grade(|k| k % 2 == 1)
    }

    /// Reversion: grade-k terms scaled by (−1)^{k(k−1)/2}.
    pub fn reverse(&self) -> Self {
        self.map_by_grade(|k| (k * k.saturating_sub(1) / 2) % 2 == 1)
    }

    /// Parity shared by every stored term, if any.
    pub fn homogeneous_parity(&self) -> Option<Parity> {
        let mut parities = self.terms.keys().map(|&b| Parity::of(grade(b) as usize));
        let first = parities.next().unwrap_or(Parity::Even);
        parities.all(|p| p == first).then_some(first)
    }

    /// Grade-1 part as a vector, failing if any other grade survives.
    pub fn vector_part(&self, tol: f64) -> Result<Vector<S>> {
        let mut coords = vec![S::zero(); self.dim];
        for (&b, c) in &self.terms {
            if grade(b) == 1 {
                coords[b.trailing_zeros() as usize] = c.clone();
            } else if !c.is_negligible(tol) {
                return Err(Error::NotGradeOne);
            }
        }
        Vector::new(coords)
    }

    /// Drops coefficients with `|c| <= tol` (float mode only has an effect).
    pub fn prune(&mut self, tol: f64) {
        self.terms.retain(|_, c| !c.is_negligible(tol));
    }

    /// See [`weighted_key`](crate::numerics::weighted_key).
    pub fn sort_key(&self) -> f64 {
        crate::numerics::weighted_key(self.terms.iter().map(|(b, c)| (*b as usize, c)), 1 << self.dim)
    }

    /// Max-abs coefficient difference over the union of blades.
    pub fn distance(&self, other: &Self) -> f64 {
        if self.dim != other.dim {
            return f64::INFINITY;
        }
        let zero = S::zero();
        self.terms
            .keys()
            .chain(other.terms.keys())
            .map(|b| {
                let a = self.terms.get(b).unwrap_or(&zero);
                let c = other.terms.get(b).unwrap_or(&zero);
                a.residual(c)
            })
            .fold(0.0, f64::max)
    }
}

impl<S: Scalar> Neg for &CliffordElement<S> {
    type Output = CliffordElement<S>;

    fn neg(self) -> CliffordElement<S> {
        self.scale(&-S::one())
    }
}

/// The top blade `ω = e₁e₂⋯eₙ`.
pub fn volume_element<S: Scalar>(n: usize) -> Result<CliffordElement<S>> {
    if n == 0 {
        return Err(Error::Degenerate("volume element of Cl(0)"));
    }
    if n > MAX_DIMENSION {
        return Err(Error::DimensionTooLarge(n));
    }
    CliffordElement::blade(n, (1 << n) - 1, S::one())
}

/// Even/odd grade.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn of(count: usize) -> Self {
        if count % 2 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn combine(self, other: Self) -> Self {
        if self == other {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

impl<S: fmt::Display> fmt::Display for CliffordElement<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (&b, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{c}")?;
            if b != 0 {
                f.write_str("·e")?;
                for k in 0..32 {
                    if b & (1 << k) != 0 {
                        write!(f, "{}", k + 1)?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl<S: fmt::Display> fmt::Debug for CliffordElement<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
