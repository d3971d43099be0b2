use std::collections::HashMap;
use std::hash::Hash;

use rand::Rng;

use crate::error::{Error, Result};
use crate::groups::Group;
use crate::numerics::Mode;

/// A finite group given by its Cayley table on `{0, …, k−1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    name: String,
    order: usize,
    table: Vec<usize>,
    identity: usize,
    inverse: Vec<usize>,
}

impl FiniteGroup {
    /// Validates the table exhaustively: Latin square, two-sided identity,
    /// inverses and associativity.
    pub fn new(name: impl Into<String>, table: Vec<Vec<usize>>) -> Result<Self> {
        let k = table.len();
        if k == 0 {
            return Err(Error::InvalidTable("empty group".into()));
        }
        if table.iter().any(|r| r.len() != k || r.iter().any(|&v| v >= k)) {
            return Err(Error::InvalidTable("table is not k x k over 0..k".into()));
        }
        for x in 0..k {
            let mut row_seen = vec![false; k];
            let mut col_seen = vec![false; k];
            for y in 0..k {
                row_seen[table[x][y]] = true;
                col_seen[table[y][x]] = true;
            }
            if row_seen.contains(&false) || col_seen.contains(&false) {
                return Err(Error::InvalidTable(format!("row/column {x} is not a permutation")));
            }
        }
        let identity = (0..k)
            .find(|&e| (0..k).all(|x| table[e][x] == x && table[x][e] == x))
            .ok_or_else(|| Error::InvalidTable("no identity element".into()))?;
        for a in 0..k {
            for b in 0..k {
                for c in 0..k {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(Error::InvalidTable(format!("not associative at ({a}, {b}, {c})")));
                    }
                }
            }
        }
        let inverse = (0..k)
            .map(|x| (0..k).find(|&y| table[x][y] == identity).expect("Latin square has inverses"))
            .collect();
        Ok(Self { name: name.into(), order: k, table: table.into_iter().flatten().collect(), identity, inverse })
    }

    /// Tabulates the closure of `generators` under `mul`, in breadth-first
    /// order starting from `identity`.
    pub fn from_generators<T, F>(name: impl Into<String>, identity: T, generators: &[T], mul: F) -> Result<Self>
    where
        T: Clone + Eq + Hash,
        F: Fn(&T, &T) -> T,
    {
        let mut elems = vec![identity.clone()];
        let mut index: HashMap<T, usize> = HashMap::from([(identity, 0)]);
        let mut frontier = 0;
        while frontier < elems.len() {
            let x = elems[frontier].clone();
            for g in generators {
                let y = mul(&x, g);
                if !index.contains_key(&y) {
                    index.insert(y.clone(), elems.len());
                    elems.push(y);
                }
            }
            frontier += 1;
        }
        let table = elems.iter().map(|a| elems.iter().map(|b| index[&mul(a, b)]).collect()).collect();
        Self::new(name, table)
    }

    /// ℤ/k.
    pub fn cyclic(k: usize) -> Self {
        let table = (0..k).map(|a| (0..k).map(|b| (a + b) % k).collect()).collect();
        Self::new(format!("Z{k}"), table).expect("cyclic table is a group")
    }

    /// Dihedral group of order `2k`, the symmetries of a regular k-gon.
    pub fn dihedral(k: usize) -> Self {
        let k = k as i64;
        let mul = |a: &(i64, u8), b: &(i64, u8)| {
            let r = if a.1 == 0 { a.0 + b.0 } else { a.0 - b.0 };
            (r.rem_euclid(k), a.1 ^ b.1)
        };
        Self::from_generators(format!("D{k}"), (0, 0), &[(1 % k, 0), (0, 1)], mul).expect("dihedral group")
    }

    /// Quaternion group Q₈ = {±1, ±i, ±j, ±k}.
    pub fn quaternion() -> Self {
        let mul = |x: &[i8; 4], y: &[i8; 4]| {
            [
                x[0] * y[0] - x[1] * y[1] - x[2] * y[2] - x[3] * y[3],
                x[0] * y[1] + x[1] * y[0] + x[2] * y[3] - x[3] * y[2],
                x[0] * y[2] - x[1] * y[3] + x[2] * y[0] + x[3] * y[1],
                x[0] * y[3] + x[1] * y[2] - x[2] * y[1] + x[3] * y[0],
            ]
        };
        Self::from_generators("Q8", [1, 0, 0, 0], &[[0, 1, 0, 0], [0, 0, 1, 0]], mul).expect("Q8")
    }

    fn permutation_group(name: String, n: usize, generators: Vec<Vec<u8>>) -> Self {
        let identity: Vec<u8> = (0..n as u8).collect();
        // apply a first, then b
        let mul = |a: &Vec<u8>, b: &Vec<u8>| a.iter().map(|&i| b[i as usize]).collect::<Vec<u8>>();
        Self::from_generators(name, identity, &generators, mul).expect("permutation group")
    }

    /// Symmetric group Sₙ.
    pub fn symmetric(n: usize) -> Self {
        let mut gens = Vec::new();
        if n >= 2 {
            let mut t: Vec<u8> = (0..n as u8).collect();
            t.swap(0, 1);
            gens.push(t);
            gens.push((0..n as u8).map(|i| (i + 1) % n as u8).collect());
        }
        Self::permutation_group(format!("S{n}"), n.max(1), gens)
    }

    /// Alternating group Aₙ, `n >= 3`.
    pub fn alternating(n: usize) -> Self {
        let gens = (0..n.saturating_sub(2))
            .map(|s| {
                let mut p: Vec<u8> = (0..n as u8).collect();
                p[s] = s as u8 + 1;
                p[s + 1] = s as u8 + 2;
                p[s + 2] = s as u8;
                p
            })
            .collect();
        Self::permutation_group(format!("A{n}"), n.max(1), gens)
    }

    pub fn direct_product(a: &Self, b: &Self) -> Self {
        let (ka, kb) = (a.order, b.order);
        let table = (0..ka * kb)
            .map(|x| (0..ka * kb).map(|y| a.mul_idx(x / kb, y / kb) * kb + b.mul_idx(x % kb, y % kb)).collect())
            .collect();
        Self::new(format!("{}x{}", a.name, b.name), table).expect("direct product of groups")
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity_index(&self) -> usize {
        self.identity
    }

    pub fn mul_idx(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b]
    }

    pub fn inverse_of(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn table_rows(&self) -> Vec<Vec<usize>> {
        self.table.chunks(self.order).map(<[usize]>::to_vec).collect()
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (0..self.order).all(|b| self.mul_idx(a, b) == self.mul_idx(b, a)))
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut n = 1;
        while x != self.identity {
            x = self.mul_idx(x, a);
            n += 1;
        }
        n
    }
}

impl Group for FiniteGroup {
    type Elem = usize;

    fn name(&self) -> String {
        self.name.clone()
    }

    fn mode(&self) -> Mode {
        Mode::Exact
    }

    fn identity(&self) -> usize {
        self.identity
    }

    fn mul(&self, a: &usize, b: &usize) -> usize {
        self.mul_idx(*a, *b)
    }

    fn inv(&self, a: &usize) -> usize {
        self.inverse[*a]
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
        rng.random_range(0..self.order)
    }

    fn elements(&self) -> Option<Vec<usize>> {
        Some((0..self.order).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders() {
        assert_eq!(FiniteGroup::cyclic(7).order(), 7);
        assert_eq!(FiniteGroup::dihedral(4).order(), 8);
        assert_eq!(FiniteGroup::quaternion().order(), 8);
        assert_eq!(FiniteGroup::symmetric(3).order(), 6);
        assert_eq!(FiniteGroup::symmetric(4).order(), 24);
        assert_eq!(FiniteGroup::alternating(4).order(), 12);
        let v4 = FiniteGroup::direct_product(&FiniteGroup::cyclic(2), &FiniteGroup::cyclic(2));
        assert_eq!(v4.order(), 4);
        assert!(v4.is_abelian());
        assert!((0..4).all(|x| v4.element_order(x) <= 2));
    }

    #[test]
    fn quaternion_structure() {
        let q = FiniteGroup::quaternion();
        assert!(!q.is_abelian());
        // one element of order 1, one of order 2, six of order 4
        let mut orders: Vec<usize> = (0..8).map(|x| q.element_order(x)).collect();
        orders.sort();
        assert_eq!(orders, vec![1, 2, 4, 4, 4, 4, 4, 4]);
    }

    #[test]
    fn rejects_bad_tables() {
        assert!(FiniteGroup::new("x", vec![]).is_err());
        assert!(FiniteGroup::new("x", vec![vec![0, 1], vec![0, 1]]).is_err());
        // Latin square with identity 0 that is not associative
        let t = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        assert!(matches!(FiniteGroup::new("x", t), Err(Error::InvalidTable(_))));
    }
}
