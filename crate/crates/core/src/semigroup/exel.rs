use std::collections::HashMap;

use super::FinSemigroup;
use crate::group::FinGroup;
use crate::{Error, Result};

/// Elements `(A, g)` of S(G) with `{1, g} ⊆ A`, as (bitmask of A, g),
/// ordered by `g` then by mask. The unit `({1}, 1)` comes first.
pub fn exel_elements(g: &FinGroup) -> Vec<(u64, usize)> {
    let n = g.order();
    let e = g.unit();
    let mut out = Vec::new();
    for h in 0..n {
        let required = (1u64 << e) | (1u64 << h);
        for mask in 0..(1u64 << n) {
            if mask & required == required {
                out.push((mask, h));
            }
        }
    }
    out.sort_by_key(|&(m, h)| (h != e, h, m));
    out
}

/// `({a,b,…},g)` with subset elements in group order.
pub fn exel_label(g: &FinGroup, mask: u64, h: usize) -> String {
    let members: Vec<&str> = (0..g.order()).filter(|&k| mask >> k & 1 == 1).map(|k| g.label(k)).collect();
    format!("({{{}}},{})", members.join(","), g.label(h))
}

pub(crate) fn translate(g: &FinGroup, h: usize, mask: u64) -> u64 {
    (0..g.order()).filter(|&k| mask >> k & 1 == 1).fold(0, |acc, k| acc | 1u64 << g.mul(h, k))
}

/// Exel's inverse monoid S(G): `(A,g)(B,h) = (A ∪ gB, gh)`.
pub fn exel_semigroup(g: &FinGroup) -> Result<FinSemigroup> {
    if g.order() > 5 {
        return Err(Error::SizeBound { what: format!("Exel semigroup of a group of order {}", g.order()), limit: 5 });
    }
    let elems = exel_elements(g);
    let index: HashMap<(u64, usize), usize> = elems.iter().enumerate().map(|(i, &p)| (p, i)).collect();
    let table = elems
        .iter()
        .map(|&(a, x)| elems.iter().map(|&(b, y)| index[&(a | translate(g, x, b), g.mul(x, y))]).collect())
        .collect();
    let labels = elems.iter().map(|&(m, h)| exel_label(g, m, h)).collect();
    FinSemigroup::new(labels, table)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semigroup::{is_inverse, Inverseness};

    #[test]
    fn sizes() {
        for (name, size) in [("trivial", 1), ("Z2", 3), ("Z3", 8), ("Z2xZ2", 20), ("Z4", 20)] {
            let g = FinGroup::parse(name).unwrap();
            let n = g.order() as u32;
            assert_eq!(size, 2usize.pow(n - 1) + if n > 1 { (n as usize - 1) * 2usize.pow(n - 2) } else { 0 });
            assert_eq!(exel_semigroup(&g).unwrap().size(), size, "{name}");
        }
    }

    #[test]
    fn star_formula() {
        let g = FinGroup::cyclic(3);
        let s = exel_semigroup(&g).unwrap();
        let Inverseness::Inverse { star } = is_inverse(&s) else { panic!() };
        let elems = exel_elements(&g);
        for (i, &(a, h)) in elems.iter().enumerate() {
            let hi = g.inv(h);
            assert_eq!(elems[star[i]], (translate(&g, hi, a), hi));
        }
        assert_eq!(s.unit(), Some(0));
        assert_eq!(s.label(0), "({0},0)");
    }
}
