use serde::{Deserialize, Serialize};

use crate::quandle::FiniteQuandle;

/// Outcome of an isomorphism search between two finite quandles.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum IsoWitness {
    /// `bijection[x]` is the image of `x`; re-validated exhaustively.
    Isomorphic { bijection: Vec<usize> },
    /// The whole search tree was explored without success; `nodes` is the
    /// number of candidate assignments tried.
    Exhausted { nodes: u64 },
}

impl IsoWitness {
    pub fn is_isomorphic(&self) -> bool {
        matches!(self, Self::Isomorphic { .. })
    }
}

/// Per-element invariants: cycle type of `S_y`, size of the Inn-orbit of
/// `y`, and the number of `x` with `x ▷ y = x`.
type Invariant = (Vec<usize>, usize, usize);

fn invariants(q: &FiniteQuandle) -> Option<Vec<Invariant>> {
    let gens = q.inner_group_generators().ok()?;
    let orbits = q.orbits().ok()?;
    let mut orbit_size = vec![0; q.size()];
    for o in &orbits {
        for &x in o {
            orbit_size[x] = o.len();
        }
    }
    Some(
        gens.iter()
            .enumerate()
            .map(|(y, s)| (s.cycle_type(), orbit_size[y], (0..q.size()).filter(|&x| s.apply(x) == x).count()))
            .collect(),
    )
}

/// Whether `phi` is a bijective quandle homomorphism `q1 → q2`.
pub fn is_isomorphism(q1: &FiniteQuandle, q2: &FiniteQuandle, phi: &[usize]) -> bool {
    let k = q1.size();
    if q2.size() != k || phi.len() != k {
        return false;
    }
    let mut seen = vec![false; k];
    if !phi.iter().all(|&v| v < k && !std::mem::replace(&mut seen[v], true)) {
        return false;
    }
    (0..k).all(|x| (0..k).all(|y| phi[q1.get(x, y)] == q2.get(phi[x], phi[y])))
}

struct Search<'a> {
    q1: &'a FiniteQuandle,
    q2: &'a FiniteQuandle,
    inv: Option<(Vec<Invariant>, Vec<Invariant>)>,
    phi: Vec<usize>,
    used: Vec<bool>,
    trail: Vec<usize>,
    nodes: u64,
}

impl Search<'_> {
    fn compatible(&self, x: usize, a: usize) -> bool {
        !self.used[a] && self.inv.as_ref().is_none_or(|(i1, i2)| i1[x] == i2[a])
    }

    /// Assigns `x ↦ a` and everything it forces; `false` on contradiction.
    fn assign(&mut self, x: usize, a: usize) -> bool {
        if !self.compatible(x, a) {
            return false;
        }
        self.phi[x] = a;
        self.used[a] = true;
        self.trail.push(x);
        let mut next = self.trail.len() - 1;
        while next < self.trail.len() {
            let x = self.trail[next];
            next += 1;
            for i in 0..self.trail.len() {
                let y = self.trail[i];
                for (u, v) in [(x, y), (y, x)] {
                    let z = self.q1.get(u, v);
                    let w = self.q2.get(self.phi[u], self.phi[v]);
                    if self.phi[z] == usize::MAX {
                        if !self.compatible(z, w) {
                            return false;
                        }
                        self.phi[z] = w;
                        self.used[w] = true;
                        self.trail.push(z);
                    } else if self.phi[z] != w {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn undo(&mut self, len: usize) {
        while self.trail.len() > len {
            let x = self.trail.pop().expect("non-empty trail");
            self.used[self.phi[x]] = false;
            self.phi[x] = usize::MAX;
        }
    }

    fn run(&mut self) -> bool {
        let Some(x) = self.phi.iter().position(|&v| v == usize::MAX) else {
            return true;
        };
        for a in 0..self.q2.size() {
            if !self.compatible(x, a) {
                continue;
            }
            self.nodes += 1;
            let len = self.trail.len();
            if self.assign(x, a) && self.run() {
                return true;
            }
            self.undo(len);
        }
        false
    }
}

/// Backtracking search for a quandle isomorphism `q1 → q2`. Each choice is
/// propagated through `φ(x ▷ y) = φ(x) ▷ φ(y)`. With `pruning`, candidate
/// images must also agree on the per-element invariants (cycle type of
/// `S_y`, Inn-orbit size, fixed-point count); the verdict does not depend
/// on it.
pub fn quandle_isomorphic(q1: &FiniteQuandle, q2: &FiniteQuandle, pruning: bool) -> IsoWitness {
    let k = q1.size();
    if q2.size() != k {
        return IsoWitness::Exhausted { nodes: 0 };
    }
    let inv = if pruning {
        match (invariants(q1), invariants(q2)) {
            (Some(a), Some(b)) => {
                let (mut sa, mut sb) = (a.clone(), b.clone());
                sa.sort();
                sb.sort();
                if sa != sb {
                    return IsoWitness::Exhausted { nodes: 0 };
                }
                Some((a, b))
            }
            _ => None,
        }
    } else {
        None
    };
    let mut search = Search { q1, q2, inv, phi: vec![usize::MAX; k], used: vec![false; k], trail: Vec::new(), nodes: 0 };
    if search.run() {
        let bijection = search.phi;
        assert!(is_isomorphism(q1, q2, &bijection), "search produced an invalid witness");
        IsoWitness::Isomorphic { bijection }
    } else {
        IsoWitness::Exhausted { nodes: search.nodes }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::FiniteGroup;
    use crate::quandle::core_table;

    fn dihedral_quandle(k: usize) -> FiniteQuandle {
        FiniteQuandle::new((0..k).map(|x| (0..k).map(|y| (2 * y + k - x) % k).collect()).collect()).unwrap()
    }

    #[test]
    fn examples() {
        let c5 = core_table(&FiniteGroup::cyclic(5));
        for pruning in [true, false] {
            assert!(quandle_isomorphic(&c5, &c5, pruning).is_isomorphic());
            let c4 = core_table(&FiniteGroup::cyclic(4));
            let v4 = core_table(&FiniteGroup::direct_product(&FiniteGroup::cyclic(2), &FiniteGroup::cyclic(2)));
            assert!(!quandle_isomorphic(&c4, &v4, pruning).is_isomorphic());
            assert!(!quandle_isomorphic(&v4, &c4, pruning).is_isomorphic());
            let r3 = dihedral_quandle(3);
            let w = quandle_isomorphic(&core_table(&FiniteGroup::cyclic(3)), &r3, pruning);
            assert!(w.is_isomorphic());
        }
    }

    #[test]
    fn relabelled_copy_is_found() {
        let q = core_table(&FiniteGroup::cyclic(7));
        let sigma = [3, 0, 6, 1, 5, 2, 4];
        let mut inv = [0; 7];
        for (i, &s) in sigma.iter().enumerate() {
            inv[s] = i;
        }
        let rows = (0..7).map(|a| (0..7).map(|b| sigma[q.get(inv[a], inv[b])]).collect()).collect();
        let relabelled = FiniteQuandle::new(rows).unwrap();
        match quandle_isomorphic(&q, &relabelled, false) {
            IsoWitness::Isomorphic { bijection } => assert!(is_isomorphism(&q, &relabelled, &bijection)),
            other => panic!("{other:?}"),
        }
    }
}
