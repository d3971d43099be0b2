//! Finite search for quandle isomorphisms `Core G ≅ Conj(H, ψ)` over a
//! catalog of small groups.

mod automorphisms;
mod catalog;
mod core_vs_twisted;
mod isomorphism;

pub use crate::groups::FiniteGroup;
pub use crate::quandle::{core_table, twisted_conj_table};
pub use automorphisms::{automorphisms, FiniteAutomorphism};
pub use catalog::{generating_set, group_catalog, groups_isomorphic, MAX_CATALOG_ORDER};
pub use core_vs_twisted::{check_abelian_coincidence, search_core_vs_twisted, Finding, GroupVerdict, SearchReport};
pub use isomorphism::{is_isomorphism, quandle_isomorphic, IsoWitness};
