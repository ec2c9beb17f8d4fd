use std::fmt;

use super::FinSemigroup;
use crate::{Error, Result};

/// Bijection between subsets of `{1..n}`, stored as pairs sorted by argument.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PartialBijection {
    n: usize,
    pairs: Vec<(usize, usize)>,
}

impl PartialBijection {
    pub fn new(n: usize, mut pairs: Vec<(usize, usize)>) -> Result<Self> {
        pairs.sort_unstable();
        for w in pairs.windows(2) {
            if w[0].0 == w[1].0 {
                return Err(Error::Invalid(format!("point {} assigned twice", w[0].0)));
            }
        }
        let mut images: Vec<usize> = pairs.iter().map(|p| p.1).collect();
        images.sort_unstable();
        if images.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::Invalid("assignment not injective".into()));
        }
        if pairs.iter().any(|&(x, y)| x == 0 || y == 0 || x > n || y > n) {
            return Err(Error::Invalid(format!("point outside 1..={n}")));
        }
        Ok(PartialBijection { n, pairs })
    }

    pub fn identity(n: usize) -> Self {
        PartialBijection { n, pairs: (1..=n).map(|x| (x, x)).collect() }
    }

    pub fn empty(n: usize) -> Self {
        PartialBijection { n, pairs: Vec::new() }
    }

    pub fn ground(&self) -> usize {
        self.n
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn apply(&self, x: usize) -> Option<usize> {
        self.pairs.binary_search_by_key(&x, |p| p.0).ok().map(|i| self.pairs[i].1)
    }

    pub fn domain(&self) -> Vec<usize> {
        self.pairs.iter().map(|p| p.0).collect()
    }

    pub fn image(&self) -> Vec<usize> {
        let mut im: Vec<usize> = self.pairs.iter().map(|p| p.1).collect();
        im.sort_unstable();
        im
    }

    /// `self ∘ g` on `g⁻¹(Dom(self) ∩ Im(g))`.
    pub fn compose(&self, g: &PartialBijection) -> PartialBijection {
        let pairs = g.pairs.iter().filter_map(|&(x, y)| self.apply(y).map(|z| (x, z))).collect();
        PartialBijection { n: self.n.max(g.n), pairs }
    }

    pub fn inverse(&self) -> PartialBijection {
        let mut pairs: Vec<_> = self.pairs.iter().map(|&(x, y)| (y, x)).collect();
        pairs.sort_unstable();
        PartialBijection { n: self.n, pairs }
    }

    /// All partial bijections of `{1..n}`, ordered by domain size, then pairs.
    pub fn all(n: usize) -> Vec<PartialBijection> {
        let mut out = Vec::new();
        fn extend(n: usize, x: usize, used: &mut Vec<bool>, cur: &mut Vec<(usize, usize)>, out: &mut Vec<PartialBijection>) {
            if x > n {
                out.push(PartialBijection { n, pairs: cur.clone() });
                return;
            }
            extend(n, x + 1, used, cur, out);
            for y in 1..=n {
                if !used[y] {
                    used[y] = true;
                    cur.push((x, y));
                    extend(n, x + 1, used, cur, out);
                    cur.pop();
                    used[y] = false;
                }
            }
        }
        extend(n, 1, &mut vec![false; n + 1], &mut Vec::new(), &mut out);
        out.sort_by(|a, b| a.pairs.len().cmp(&b.pairs.len()).then_with(|| a.pairs.cmp(&b.pairs)));
        out
    }
}

impl fmt::Display for PartialBijection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, (x, y)) in self.pairs.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "({x},{y})")?;
        }
        f.write_str("]")
    }
}

impl fmt::Debug for PartialBijection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// ℐ({1..n}) with product `fg = f∘g`; element `i` decodes to `maps[i]`.
pub fn symmetric_inverse_monoid(n: usize) -> Result<(FinSemigroup, Vec<PartialBijection>)> {
    if !(1..=4).contains(&n) {
        return Err(Error::SizeBound { what: format!("symmetric inverse monoid on {n} points"), limit: 4 });
    }
    let maps = PartialBijection::all(n);
    let index: std::collections::HashMap<&PartialBijection, usize> =
        maps.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let table = maps.iter().map(|f| maps.iter().map(|g| index[&f.compose(g)]).collect()).collect();
    let labels = maps.iter().map(|m| m.to_string()).collect();
    Ok((FinSemigroup::new(labels, table)?, maps))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semigroup::{is_inverse, Inverseness};

    fn rook(n: u64) -> u64 {
        let choose = |n: u64, k: u64| (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1));
        let fact = |k: u64| (1..=k).product::<u64>();
        (0..=n).map(|k| choose(n, k).pow(2) * fact(k)).sum()
    }

    #[test]
    fn sizes_follow_rook_count() {
        for n in 1..=4 {
            let (s, _) = symmetric_inverse_monoid(n).unwrap();
            assert_eq!(s.size() as u64, rook(n as u64));
        }
        assert_eq!(rook(3), 34);
    }

    #[test]
    fn inverse_is_star() {
        let (s, maps) = symmetric_inverse_monoid(3).unwrap();
        let Inverseness::Inverse { star } = is_inverse(&s) else { panic!("not inverse") };
        for (i, m) in maps.iter().enumerate() {
            assert_eq!(maps[star[i]], m.inverse());
        }
        assert_eq!(s.label(s.unit().unwrap()), "[(1,1),(2,2),(3,3)]");
        assert_eq!(s.label(s.zero().unwrap()), "[]");
    }

    #[test]
    fn composition_domain() {
        let f = PartialBijection::new(3, vec![(2, 3)]).unwrap();
        let g = PartialBijection::new(3, vec![(1, 2), (3, 1)]).unwrap();
        assert_eq!(f.compose(&g).to_string(), "[(1,3)]");
        assert!(PartialBijection::new(3, vec![(1, 2), (2, 2)]).is_err());
    }
}
