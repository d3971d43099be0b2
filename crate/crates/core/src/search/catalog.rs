use crate::error::{Error, Result};
use crate::groups::FiniteGroup;

/// Largest order the catalog (and the search) accepts.
pub const MAX_CATALOG_ORDER: usize = 16;

/// The subgroup generated by `gens`, as a membership mask.
fn span(g: &FiniteGroup, gens: &[usize]) -> Vec<bool> {
    let mut seen = vec![false; g.order()];
    let mut stack = vec![g.identity_index()];
    seen[g.identity_index()] = true;
    while let Some(x) = stack.pop() {
        for &s in gens {
            let y = g.mul_idx(x, s);
            if !seen[y] {
                seen[y] = true;
                stack.push(y);
            }
        }
    }
    seen
}

/// A small generating set, chosen greedily from elements of largest order.
pub fn generating_set(g: &FiniteGroup) -> Vec<usize> {
    let mut candidates: Vec<usize> = (0..g.order()).collect();
    candidates.sort_by_key(|&x| (std::cmp::Reverse(g.element_order(x)), x));
    let mut gens = Vec::new();
    let mut covered = span(g, &gens);
    for x in candidates {
        if !covered[x] {
            gens.push(x);
            covered = span(g, &gens);
        }
    }
    gens
}

/// Extends `gens[i] ↦ images[i]` to a homomorphism `g → h`, or `None` if
/// the assignment is inconsistent. `gens` must generate `g`.
pub(crate) fn extend_hom(g: &FiniteGroup, h: &FiniteGroup, gens: &[usize], images: &[usize]) -> Option<Vec<usize>> {
    let mut map = vec![usize::MAX; g.order()];
    map[g.identity_index()] = h.identity_index();
    let mut queue = vec![g.identity_index()];
    let mut head = 0;
    while head < queue.len() {
        let x = queue[head];
        head += 1;
        for (&s, &t) in gens.iter().zip(images) {
            let y = g.mul_idx(x, s);
            let v = h.mul_idx(map[x], t);
            if map[y] == usize::MAX {
                map[y] = v;
                queue.push(y);
            } else if map[y] != v {
                return None;
            }
        }
    }
    Some(map)
}

fn order_profile(g: &FiniteGroup) -> Vec<usize> {
    let mut p: Vec<usize> = (0..g.order()).map(|x| g.element_order(x)).collect();
    p.sort_unstable();
    p
}

fn is_bijection(map: &[usize]) -> bool {
    let mut seen = vec![false; map.len()];
    map.iter().all(|&v| v < seen.len() && !std::mem::replace(&mut seen[v], true))
}

/// Group isomorphism by trying every order-preserving assignment of a
/// generating set.
pub fn groups_isomorphic(a: &FiniteGroup, b: &FiniteGroup) -> bool {
    if a.order() != b.order() || a.is_abelian() != b.is_abelian() || order_profile(a) != order_profile(b) {
        return false;
    }
    let gens = generating_set(a);
    let options: Vec<Vec<usize>> = gens
        .iter()
        .map(|&s| (0..b.order()).filter(|&t| b.element_order(t) == a.element_order(s)).collect())
        .collect();
    let mut images = vec![0; gens.len()];
    fn rec(a: &FiniteGroup, b: &FiniteGroup, gens: &[usize], options: &[Vec<usize>], images: &mut Vec<usize>, i: usize) -> bool {
        if i == gens.len() {
            return extend_hom(a, b, gens, images).is_some_and(|m| is_bijection(&m));
        }
        for &t in &options[i] {
            images[i] = t;
            if rec(a, b, gens, options, images, i + 1) {
                return true;
            }
        }
        false
    }
    rec(a, b, &gens, &options, &mut images, 0)
}

/// Cyclic groups, S₃, A₄, Q₈ and dihedral groups up to `max_order`, then
/// direct products of catalog members, with each isomorphism class kept
/// once under the first name it was built with.
pub fn group_catalog(max_order: usize) -> Result<Vec<FiniteGroup>> {
    if max_order > MAX_CATALOG_ORDER {
        return Err(Error::BoundExceeded { requested: max_order, max: MAX_CATALOG_ORDER });
    }
    let mut catalog: Vec<FiniteGroup> = Vec::new();
    let add = |g: FiniteGroup, catalog: &mut Vec<FiniteGroup>| {
        if g.order() <= max_order && !catalog.iter().any(|c| groups_isomorphic(c, &g)) {
            catalog.push(g);
        }
    };
    for k in 1..=max_order {
        add(FiniteGroup::cyclic(k), &mut catalog);
    }
    for n in 3..=4 {
        if (1..=n).product::<usize>() <= max_order {
            add(FiniteGroup::symmetric(n), &mut catalog);
        }
    }
    if max_order >= 12 {
        add(FiniteGroup::alternating(4), &mut catalog);
    }
    if max_order >= 8 {
        add(FiniteGroup::quaternion(), &mut catalog);
    }
    for k in 3..=max_order / 2 {
        add(FiniteGroup::dihedral(k), &mut catalog);
    }
    loop {
        let before = catalog.len();
        let snapshot = catalog.clone();
        for (i, a) in snapshot.iter().enumerate() {
            for b in &snapshot[i..] {
                if a.order() > 1 && b.order() > 1 && a.order() * b.order() <= max_order {
                    add(FiniteGroup::direct_product(a, b), &mut catalog);
                }
            }
        }
        if catalog.len() == before {
            break;
        }
    }
    Ok(catalog)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names(c: &[FiniteGroup]) -> Vec<&str> {
        c.iter().map(FiniteGroup::name).collect()
    }

    #[test]
    fn small_catalog() {
        let c = group_catalog(4).unwrap();
        assert_eq!(names(&c), ["Z1", "Z2", "Z3", "Z4", "Z2xZ2"]);
        assert!(group_catalog(17).is_err());
    }

    #[test]
    fn order_eight_classification() {
        let c = group_catalog(8).unwrap();
        let eight: Vec<&str> = c.iter().filter(|g| g.order() == 8).map(FiniteGroup::name).collect();
        assert_eq!(eight, ["Z8", "Q8", "D4", "Z2xZ4", "Z2xZ2xZ2"]);
        let six: Vec<&str> = c.iter().filter(|g| g.order() == 6).map(FiniteGroup::name).collect();
        assert_eq!(six, ["Z6", "S3"]);
        // closure under direct products at order <= 8
        for a in &c {
            for b in &c {
                if a.order() * b.order() <= 8 {
                    let p = FiniteGroup::direct_product(a, b);
                    assert!(c.iter().any(|g| groups_isomorphic(g, &p)), "{}", p.name());
                }
            }
        }
    }

    #[test]
    fn isomorphism_tests() {
        let z6 = FiniteGroup::cyclic(6);
        let z2z3 = FiniteGroup::direct_product(&FiniteGroup::cyclic(2), &FiniteGroup::cyclic(3));
        assert!(groups_isomorphic(&z6, &z2z3));
        assert!(groups_isomorphic(&FiniteGroup::dihedral(3), &FiniteGroup::symmetric(3)));
        assert!(!groups_isomorphic(&FiniteGroup::dihedral(4), &FiniteGroup::quaternion()));
        assert!(!groups_isomorphic(&z6, &FiniteGroup::symmetric(3)));
    }

    #[test]
    fn generating_sets_generate() {
        for g in group_catalog(12).unwrap() {
            let gens = generating_set(&g);
            assert!(span(&g, &gens).iter().all(|&b| b), "{}", g.name());
        }
    }
}
