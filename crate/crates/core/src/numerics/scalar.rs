use std::fmt::{Debug, Display};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{FromPrimitive, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

/// Default absolute tolerance for floating-point comparisons.
pub const DEFAULT_TOLERANCE: f64 = 1e-9;

/// Arithmetic mode of a computation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Exact,
    Float,
}

impl Display for Mode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Mode::Exact => f.write_str("exact"),
            Mode::Float => f.write_str("float"),
        }
    }
}

/// Field of real scalars the whole library is generic over.
///
/// Two implementations exist: [`f64`], compared with an absolute tolerance,
/// and [`BigRational`], compared exactly. A single computation never mixes
/// them; the type parameter enforces that.
pub trait Scalar:
    Clone + Debug + Display + PartialOrd + Signed + FromPrimitive + Send + Sync + 'static
{
    const MODE: Mode;

    fn from_ratio(num: i64, den: i64) -> Self;

    fn to_f64(&self) -> f64;

    /// Zero test: exact equality for rationals, `|x| <= tol` for floats.
    fn is_negligible(&self, tol: f64) -> bool;

    /// Absolute difference as an `f64` residual.
    ///
    /// In exact mode a nonzero difference never rounds to `0.0`.
    fn residual(&self, other: &Self) -> f64;

    fn from_int(v: i64) -> Self {
        Self::from_ratio(v, 1)
    }

    fn two() -> Self {
        Self::from_int(2)
    }

    fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        (self.clone() - other.clone()).is_negligible(tol)
    }
}

impl Scalar for f64 {
    const MODE: Mode = Mode::Float;

    fn from_ratio(num: i64, den: i64) -> Self {
        num as f64 / den as f64
    }

    fn to_f64(&self) -> f64 {
        *self
    }

    fn is_negligible(&self, tol: f64) -> bool {
        self.abs() <= tol
    }

    fn residual(&self, other: &Self) -> f64 {
        (self - other).abs()
    }
}

impl Scalar for BigRational {
    const MODE: Mode = Mode::Exact;

    fn from_ratio(num: i64, den: i64) -> Self {
        BigRational::new(BigInt::from(num), BigInt::from(den))
    }

    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }

    fn is_negligible(&self, _tol: f64) -> bool {
        self.is_zero()
    }

    fn residual(&self, other: &Self) -> f64 {
        let d = (self - other).abs();
        if d.is_zero() {
            0.0
        } else {
            Scalar::to_f64(&d).max(f64::MIN_POSITIVE)
        }
    }
}

/// `Σ wᵢ·cᵢ` over `(index, coefficient)` pairs with fixed weights in
/// `(0, 1/count]`. The result moves by at most the max-abs change of the
/// coefficients, so it can bucket candidates for near-equality sweeps.
pub fn weighted_key<'a, S: Scalar + 'a>(coeffs: impl IntoIterator<Item = (usize, &'a S)>, count: usize) -> f64 {
    let count = count.max(1) as f64;
    coeffs
        .into_iter()
        .map(|(i, c)| {
            let w = 0.5 + 0.5 * ((i as f64 + 1.0) * 0.618_033_988_749_895).fract();
            w / count * c.to_f64()
        })
        .sum()
}

/// Whether a residual passes in the given mode.
pub fn residual_passes(mode: Mode, residual: f64, tol: f64) -> bool {
    match mode {
        Mode::Exact => residual == 0.0,
        Mode::Float => residual <= tol,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_is_reduced() {
        let r = BigRational::from_ratio(6, -8);
        assert_eq!(*r.numer(), BigInt::from(-3));
        assert_eq!(*r.denom(), BigInt::from(4));
    }

    #[test]
    fn exact_residual_never_rounds_to_zero() {
        let a = BigRational::from_ratio(1, 1);
        let b = BigRational::new(BigInt::from(10).pow(400) + 1u32, BigInt::from(10).pow(400));
        assert!(a.residual(&b) > 0.0);
        assert_eq!(a.residual(&a), 0.0);
    }

    #[test]
    fn float_tolerance() {
        assert!(1e-10f64.is_negligible(DEFAULT_TOLERANCE));
        assert!(!1e-8f64.is_negligible(DEFAULT_TOLERANCE));
        assert!(residual_passes(Mode::Float, 5e-10, DEFAULT_TOLERANCE));
        assert!(!residual_passes(Mode::Exact, 5e-10, DEFAULT_TOLERANCE));
    }
}
