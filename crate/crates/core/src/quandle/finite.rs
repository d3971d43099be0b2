use std::collections::{BTreeSet, HashSet};
use std::fmt;

use rand::Rng;

use crate::error::{Error, Result};
use crate::groups::{Automorphism, FiniteGroup};
use crate::numerics::Mode;
use crate::quandle::{AlexanderQuandle, CoreQuandle, Quandle, TwistedConjQuandle};

/// A permutation of `{0..k-1}` in one-line notation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(pub Vec<usize>);

impl Permutation {
    pub fn identity(k: usize) -> Self {
        Self((0..k).collect())
    }

    pub fn apply(&self, x: usize) -> usize {
        self.0[x]
    }

    /// `(self ∘ other)(x) = self(other(x))`.
    pub fn compose(&self, other: &Self) -> Self {
        Self(other.0.iter().map(|&x| self.0[x]).collect())
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// Sorted cycle lengths.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut seen = vec![false; self.0.len()];
        let mut lengths = Vec::new();
        for start in 0..self.0.len() {
            let mut len = 0;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.0[x];
                len += 1;
            }
            if len > 0 {
                lengths.push(len);
            }
        }
        lengths.sort_unstable();
        lengths
    }
}

/// A quandle on `{0..k-1}` given by its operation table,
/// `table[x][y] = x ▷ y`.
///
/// Construction only checks the shape and entry range, so corrupted tables
/// can be built and handed to [`check_axioms`](crate::quandle::check_axioms).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FiniteQuandle {
    size: usize,
    table: Vec<usize>,
    name: String,
}

impl FiniteQuandle {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        let size = rows.len();
        if size == 0 {
            return Err(Error::InvalidTable("empty table".into()));
        }
        let mut table = Vec::with_capacity(size * size);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != size {
                return Err(Error::InvalidTable(format!("row {i} has {} entries, expected {size}", row.len())));
            }
            if let Some(&bad) = row.iter().find(|&&v| v >= size) {
                return Err(Error::InvalidTable(format!("entry {bad} in row {i} out of range")));
            }
            table.extend(row);
        }
        Ok(Self { size, table, name: format!("table[{size}]") })
    }

    /// Tabulates a quandle with a finite carrier, indexing elements in the
    /// order returned by [`Quandle::elements`].
    pub fn from_quandle<Q: Quandle>(q: &Q) -> Result<Self> {
        let elems = q.elements().ok_or(Error::Degenerate("quandle carrier is not finite"))?;
        let index = |e: &Q::Elem| {
            elems
                .iter()
                .position(|c| q.distance(c, e) == 0.0)
                .ok_or_else(|| Error::InvalidTable(format!("{e:?} is not in the carrier")))
        };
        let rows = elems
            .iter()
            .map(|x| elems.iter().map(|y| index(&q.op(x, y))).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::new(rows)?.with_name(q.name()))
    }

    /// The trivial quandle `x ▷ y = x` on `k` points.
    pub fn trivial(k: usize) -> Self {
        let rows = (0..k).map(|x| vec![x; k]).collect();
        Self::new(rows).expect("valid shape").with_name(format!("T{k}"))
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn get(&self, x: usize, y: usize) -> usize {
        self.table[x * self.size + y]
    }

    pub fn set(&mut self, x: usize, y: usize, value: usize) -> Result<()> {
        if x >= self.size || y >= self.size || value >= self.size {
            return Err(Error::InvalidTable(format!("({x}, {y}) <- {value} out of range")));
        }
        self.table[x * self.size + y] = value;
        Ok(())
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.table.chunks(self.size).map(<[usize]>::to_vec).collect()
    }

    /// Parses `k` followed by `k*k` whitespace-separated entries.
    pub fn parse(text: &str) -> Result<Self> {
        let mut tokens = text.split_whitespace().map(|t| {
            t.parse::<usize>().map_err(|e| Error::Parse(format!("{t:?}: {e}")))
        });
        let k = tokens.next().ok_or_else(|| Error::Parse("missing size".into()))??;
        let entries = tokens.collect::<Result<Vec<_>>>()?;
        if entries.len() != k * k {
            return Err(Error::Parse(format!("expected {} entries, found {}", k * k, entries.len())));
        }
        Self::new(entries.chunks(k.max(1)).map(<[usize]>::to_vec).collect())
    }

    /// Right translation `S_y : x ↦ x ▷ y`, or an error if column `y` is not a
    /// permutation.
    pub fn right_translation(&self, y: usize) -> Result<Permutation> {
        let column: Vec<usize> = (0..self.size).map(|x| self.get(x, y)).collect();
        let distinct: HashSet<_> = column.iter().collect();
        if distinct.len() != self.size {
            return Err(Error::InvalidTable(format!("column {y} is not a permutation")));
        }
        Ok(Permutation(column))
    }

    /// The generators `S_y` of Inn X, one per element.
    pub fn inner_group_generators(&self) -> Result<Vec<Permutation>> {
        (0..self.size).map(|y| self.right_translation(y)).collect()
    }

    /// Order of Inn X by closure of its generators.
    pub fn inner_group_order(&self) -> Result<usize> {
        let gens = self.inner_group_generators()?;
        let mut seen: BTreeSet<Permutation> = BTreeSet::new();
        let mut frontier = vec![Permutation::identity(self.size)];
        seen.insert(frontier[0].clone());
        while let Some(p) = frontier.pop() {
            for g in &gens {
                let q = g.compose(&p);
                if seen.insert(q.clone()) {
                    frontier.push(q);
                }
            }
        }
        Ok(seen.len())
    }

    /// Orbits of Inn X, each sorted, ordered by least element.
    pub fn orbits(&self) -> Result<Vec<Vec<usize>>> {
        let gens = self.inner_group_generators()?;
        let mut label = vec![usize::MAX; self.size];
        let mut orbits = Vec::new();
        for start in 0..self.size {
            if label[start] != usize::MAX {
                continue;
            }
            let mut orbit = vec![start];
            label[start] = orbits.len();
            let mut i = 0;
            while i < orbit.len() {
                let x = orbit[i];
                for g in &gens {
                    let y = g.apply(x);
                    if label[y] == usize::MAX {
                        label[y] = orbits.len();
                        orbit.push(y);
                    }
                }
                i += 1;
            }
            orbit.sort_unstable();
            orbits.push(orbit);
        }
        Ok(orbits)
    }

    /// True iff Inn X acts transitively.
    pub fn is_algebraically_connected(&self) -> bool {
        self.orbits().is_ok_and(|o| o.len() == 1)
    }

    /// True iff `y ↦ S_y` is injective.
    pub fn is_faithful(&self) -> bool {
        match self.inner_group_generators() {
            Ok(gens) => gens.iter().collect::<HashSet<_>>().len() == self.size,
            Err(_) => false,
        }
    }
}

impl fmt::Display for FiniteQuandle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.size)?;
        for row in self.table.chunks(self.size) {
            let line: Vec<String> = row.iter().map(usize::to_string).collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

impl Quandle for FiniteQuandle {
    type Elem = usize;

    fn name(&self) -> String {
        self.name.clone()
    }

    fn mode(&self) -> Mode {
        Mode::Exact
    }

    fn op(&self, x: &usize, y: &usize) -> usize {
        self.get(*x, *y)
    }

    /// First preimage of `x` under `S_y`; when there is none, `x` itself is
    /// returned so the Q2 round-trip check reports the failure.
    fn op_inv(&self, x: &usize, y: &usize) -> usize {
        (0..self.size).find(|&z| self.get(z, *y) == *x).unwrap_or(*x)
    }

    fn sort_key(&self, a: &usize) -> f64 {
        *a as f64
    }

    fn distance(&self, a: &usize, b: &usize) -> f64 {
        if a == b {
            0.0
        } else {
            1.0
        }
    }

    fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> usize {
        rng.random_range(0..self.size)
    }

    fn elements(&self) -> Option<Vec<usize>> {
        Some((0..self.size).collect())
    }
}

/// Table of Core(G).
pub fn core_table(group: &FiniteGroup) -> FiniteQuandle {
    FiniteQuandle::from_quandle(&CoreQuandle { group: group.clone() }).expect("closed operation")
}

/// Table of the twisted conjugation quandle (G, ψ).
pub fn twisted_conj_table(group: &FiniteGroup, psi: &Automorphism<usize>) -> FiniteQuandle {
    FiniteQuandle::from_quandle(&TwistedConjQuandle { group: group.clone(), psi: psi.clone() }).expect("closed operation")
}

/// Table of the generalized Alexander quandle (G, ψ).
pub fn alexander_table(group: &FiniteGroup, psi: &Automorphism<usize>) -> FiniteQuandle {
    FiniteQuandle::from_quandle(&AlexanderQuandle { group: group.clone(), psi: psi.clone() }).expect("closed operation")
}
