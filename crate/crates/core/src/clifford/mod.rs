//! Clifford algebra Cl(n) with `eᵢ² = +1` and its versor groups Pin⁺(n) ⊃ Spin(n).

mod element;
mod versor;

pub use element::{grade, reorder_sign, volume_element, Blade, CliffordElement, Parity, MAX_DIMENSION};
pub use versor::{h_n, sample_versor, PinGroup, Versor};
