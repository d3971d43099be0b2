use serde::{Deserialize, Serialize};

use crate::groups::{Automorphism, FiniteGroup};
use crate::search::catalog::{extend_hom, generating_set};

/// An automorphism of a [`FiniteGroup`] as a permutation of element indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FiniteAutomorphism {
    pub perm: Vec<usize>,
    pub involutive: bool,
}

impl FiniteAutomorphism {
    pub fn new(perm: Vec<usize>) -> Self {
        let involutive = perm.iter().enumerate().all(|(x, &y)| perm[y] == x);
        Self { perm, involutive }
    }

    pub fn is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// Whether this is `g ↦ g⁻¹`.
    pub fn is_inversion(&self, g: &FiniteGroup) -> bool {
        self.perm.iter().enumerate().all(|(x, &y)| y == g.inverse_of(x))
    }

    pub fn to_automorphism(&self, name: impl Into<String>) -> Automorphism<usize> {
        let forward = self.perm.clone();
        let mut backward = vec![0; forward.len()];
        for (x, &y) in forward.iter().enumerate() {
            backward[y] = x;
        }
        if self.involutive {
            Automorphism::involution(name, move |x: &usize| forward[*x])
        } else {
            Automorphism::new(name, move |x: &usize| forward[*x], move |x: &usize| backward[*x])
        }
    }
}

/// All automorphisms, found by assigning images to a generating set and
/// validating each extension. Sorted by permutation, so the identity comes
/// first.
pub fn automorphisms(g: &FiniteGroup) -> Vec<FiniteAutomorphism> {
    let gens = generating_set(g);
    let options: Vec<Vec<usize>> = gens
        .iter()
        .map(|&s| (0..g.order()).filter(|&t| g.element_order(t) == g.element_order(s)).collect())
        .collect();
    let mut out = Vec::new();
    let mut images = vec![0; gens.len()];
    fn rec(g: &FiniteGroup, gens: &[usize], options: &[Vec<usize>], images: &mut Vec<usize>, i: usize, out: &mut Vec<FiniteAutomorphism>) {
        if i == gens.len() {
            if let Some(map) = extend_hom(g, g, gens, images) {
                let mut seen = vec![false; map.len()];
                if map.iter().all(|&v| !std::mem::replace(&mut seen[v], true)) {
                    out.push(FiniteAutomorphism::new(map));
                }
            }
            return;
        }
        for &t in &options[i] {
            images[i] = t;
            rec(g, gens, options, images, i + 1, out);
        }
    }
    rec(g, &gens, &options, &mut images, 0, &mut out);
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn is_hom(g: &FiniteGroup, a: &FiniteAutomorphism) -> bool {
        (0..g.order()).all(|x| (0..g.order()).all(|y| a.perm[g.mul_idx(x, y)] == g.mul_idx(a.perm[x], a.perm[y])))
    }

    #[test]
    fn counts() {
        assert_eq!(automorphisms(&FiniteGroup::cyclic(5)).len(), 4);
        let v4 = FiniteGroup::direct_product(&FiniteGroup::cyclic(2), &FiniteGroup::cyclic(2));
        assert_eq!(automorphisms(&v4).len(), 6);
        assert_eq!(automorphisms(&FiniteGroup::symmetric(3)).len(), 6);
        assert_eq!(automorphisms(&FiniteGroup::quaternion()).len(), 24);
        assert_eq!(automorphisms(&FiniteGroup::dihedral(4)).len(), 8);
        assert_eq!(automorphisms(&FiniteGroup::cyclic(1)).len(), 1);
    }

    #[test]
    fn all_valid_and_inversion_iff_abelian() {
        for g in [FiniteGroup::cyclic(6), FiniteGroup::symmetric(3), FiniteGroup::quaternion(), FiniteGroup::dihedral(4)] {
            let auts = automorphisms(&g);
            assert!(auts[0].is_identity());
            assert!(auts.iter().all(|a| is_hom(&g, a) && a.perm[g.identity_index()] == g.identity_index()));
            let inv = auts.iter().find(|a| a.is_inversion(&g));
            assert_eq!(inv.is_some(), g.is_abelian(), "{}", g.name());
            if let Some(inv) = inv {
                assert!(inv.involutive);
            }
        }
    }
}
