use std::collections::BTreeSet;

use super::FinSemigroup;

const MAX_ISO_SIZE: usize = 40;

pub fn is_homomorphism(s: &FinSemigroup, t: &FinSemigroup, map: &[usize]) -> bool {
    map.len() == s.size()
        && (0..s.size()).all(|a| (0..s.size()).all(|b| map[s.mul(a, b)] == t.mul(map[a], map[b])))
}

fn invariant(s: &FinSemigroup, a: usize) -> (bool, usize, usize, usize, usize) {
    let right: BTreeSet<usize> = (0..s.size()).map(|x| s.mul(a, x)).collect();
    let left: BTreeSet<usize> = (0..s.size()).map(|x| s.mul(x, a)).collect();
    let mut powers = vec![a];
    let (index, period) = loop {
        let next = s.mul(*powers.last().unwrap(), a);
        if let Some(i) = powers.iter().position(|&p| p == next) {
            break (i, powers.len() - i);
        }
        powers.push(next);
    };
    (s.is_idempotent(a), right.len(), left.len(), index, period)
}

fn closure(s: &FinSemigroup, gens: &[usize]) -> BTreeSet<usize> {
    let mut set: BTreeSet<usize> = gens.iter().copied().collect();
    loop {
        let cur: Vec<usize> = set.iter().copied().collect();
        let before = set.len();
        for &a in &cur {
            for &b in &cur {
                set.insert(s.mul(a, b));
            }
        }
        if set.len() == before {
            return set;
        }
    }
}

/// Extends a generator assignment over the generated subsemigroup, if consistent.
fn extend(s: &FinSemigroup, t: &FinSemigroup, gens: &[usize], images: &[usize]) -> Option<Vec<Option<usize>>> {
    let mut map: Vec<Option<usize>> = vec![None; s.size()];
    let mut known: Vec<usize> = Vec::new();
    for (&g, &img) in gens.iter().zip(images) {
        match map[g] {
            Some(prev) if prev != img => return None,
            Some(_) => {}
            None => {
                map[g] = Some(img);
                known.push(g);
            }
        }
    }
    let mut i = 0;
    while i < known.len() {
        let a = known[i];
        for j in 0..=i {
            let b = known[j];
            for (x, y) in [(a, b), (b, a)] {
                let xy = s.mul(x, y);
                let img = t.mul(map[x].unwrap(), map[y].unwrap());
                match map[xy] {
                    Some(prev) if prev != img => return None,
                    Some(_) => {}
                    None => {
                        map[xy] = Some(img);
                        known.push(xy);
                    }
                }
            }
        }
        i += 1;
    }
    Some(map)
}

/// An isomorphism `S → T` as an index map, found by backtracking over
/// images of a generating set. Only attempted for `|S| ≤ 40`.
pub fn find_isomorphism(s: &FinSemigroup, t: &FinSemigroup) -> Option<Vec<usize>> {
    if s.size() != t.size() || s.size() > MAX_ISO_SIZE {
        return None;
    }
    let inv_s: Vec<_> = (0..s.size()).map(|a| invariant(s, a)).collect();
    let inv_t: Vec<_> = (0..t.size()).map(|a| invariant(t, a)).collect();
    let mut sorted_s = inv_s.clone();
    let mut sorted_t = inv_t.clone();
    sorted_s.sort();
    sorted_t.sort();
    if sorted_s != sorted_t {
        return None;
    }
    let mut gens = Vec::new();
    let mut span = BTreeSet::new();
    for a in 0..s.size() {
        if !span.contains(&a) {
            gens.push(a);
            span = closure(s, &gens);
        }
    }
    let candidates: Vec<Vec<usize>> =
        gens.iter().map(|&g| (0..t.size()).filter(|&x| inv_t[x] == inv_s[g]).collect()).collect();
    let mut images = Vec::with_capacity(gens.len());
    search(s, t, &gens, &candidates, &mut images)
}

fn search(
    s: &FinSemigroup,
    t: &FinSemigroup,
    gens: &[usize],
    candidates: &[Vec<usize>],
    images: &mut Vec<usize>,
) -> Option<Vec<usize>> {
    let k = images.len();
    if k > 0 && extend(s, t, &gens[..k], images).is_none() {
        return None;
    }
    if k == gens.len() {
        let map: Vec<usize> = extend(s, t, gens, images)?.into_iter().collect::<Option<_>>()?;
        let distinct: BTreeSet<usize> = map.iter().copied().collect();
        return (distinct.len() == map.len() && is_homomorphism(s, t, &map)).then_some(map);
    }
    for &c in &candidates[k] {
        images.push(c);
        if let Some(m) = search(s, t, gens, candidates, images) {
            return Some(m);
        }
        images.pop();
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::FinGroup;
    use crate::semigroup::{exel_semigroup, symmetric_inverse_monoid};

    #[test]
    fn relabelled_copy_is_isomorphic() {
        let (s, _) = symmetric_inverse_monoid(3).unwrap();
        let n = s.size();
        let perm: Vec<usize> = (0..n).map(|i| (i * 7 + 3) % n).collect();
        let mut inv = vec![0; n];
        for (i, &p) in perm.iter().enumerate() {
            inv[p] = i;
        }
        let table = (0..n).map(|p| (0..n).map(|q| perm[s.mul(inv[p], inv[q])]).collect()).collect();
        let labels = (0..n).map(|i| format!("e{i}")).collect();
        let t = FinSemigroup::new(labels, table).unwrap();
        let iso = find_isomorphism(&s, &t).unwrap();
        assert!(is_homomorphism(&s, &t, &iso));
    }

    #[test]
    fn non_isomorphic_same_size() {
        let a = exel_semigroup(&FinGroup::parse("Z2xZ2").unwrap()).unwrap();
        let b = exel_semigroup(&FinGroup::cyclic(4)).unwrap();
        assert_eq!(a.size(), b.size());
        assert!(find_isomorphism(&a, &b).is_none());
    }
}
