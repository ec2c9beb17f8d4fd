//! Finite semigroups by multiplication table.

mod exel;
mod iso;
mod partial;

pub use exel::{exel_elements, exel_label, exel_semigroup};
pub use iso::{find_isomorphism, is_homomorphism};
pub use partial::{symmetric_inverse_monoid, PartialBijection};

use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinSemigroup {
    elements: Vec<String>,
    table: Vec<Vec<usize>>,
    unit: Option<usize>,
    zero: Option<usize>,
}

/// Outcome of [`is_inverse`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Inverseness {
    /// Every element has exactly one pseudo-inverse; `star[s] = s*`.
    Inverse { star: Vec<usize> },
    /// Regular, but two idempotents fail to commute.
    RegularOnly { witness: (usize, usize) },
    /// `witness.0` has no pseudo-inverse (`witness.1` repeats it).
    NotRegular { witness: (usize, usize) },
}

impl Inverseness {
    pub fn star(&self) -> Option<&[usize]> {
        match self {
            Inverseness::Inverse { star } => Some(star),
            _ => None,
        }
    }
}

impl FinSemigroup {
    /// Checks that the table is square, in range and associative; detects
    /// a two-sided unit and a zero.
    pub fn new(elements: Vec<String>, table: Vec<Vec<usize>>) -> Result<Self> {
        let n = elements.len();
        if n == 0 {
            return Err(Error::Invalid("empty semigroup".into()));
        }
        let mut seen = std::collections::HashSet::new();
        for e in &elements {
            if !seen.insert(e) {
                return Err(Error::Invalid(format!("duplicate element {e}")));
            }
        }
        if table.len() != n {
            return Err(Error::DimensionMismatch { expected: n, found: table.len() });
        }
        for row in &table {
            if row.len() != n {
                return Err(Error::DimensionMismatch { expected: n, found: row.len() });
            }
            if let Some(&bad) = row.iter().find(|&&v| v >= n) {
                return Err(Error::Invalid(format!("table entry {bad} out of range")));
            }
        }
        for a in 0..n {
            for b in 0..n {
                let ab = table[a][b];
                for c in 0..n {
                    if table[ab][c] != table[a][table[b][c]] {
                        return Err(Error::Invalid(format!(
                            "not associative at ({}, {}, {})",
                            elements[a], elements[b], elements[c]
                        )));
                    }
                }
            }
        }
        let unit = (0..n).find(|&u| (0..n).all(|x| table[u][x] == x && table[x][u] == x));
        let zero = (0..n).find(|&z| (0..n).all(|x| table[z][x] == z && table[x][z] == z));
        Ok(FinSemigroup { elements, table, unit, zero })
    }

    /// As [`FinSemigroup::new`], additionally checking a declared unit.
    pub fn with_unit(elements: Vec<String>, table: Vec<Vec<usize>>, unit: Option<usize>) -> Result<Self> {
        let s = Self::new(elements, table)?;
        if let Some(u) = unit {
            if s.unit != Some(u) {
                return Err(Error::Invalid(format!("declared unit {u} is not two-sided")));
            }
        }
        Ok(s)
    }

    /// `xy = x`.
    pub fn left_zero(n: usize) -> Self {
        let labels = (0..n).map(|i| ["x", "y", "z", "w"].get(i).map_or(format!("x{i}"), |s| s.to_string())).collect();
        let table = (0..n).map(|a| vec![a; n]).collect();
        Self::new(labels, table).expect("left-zero semigroup")
    }

    pub fn size(&self) -> usize {
        self.elements.len()
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn label(&self, a: usize) -> &str {
        &self.elements[a]
    }

    pub fn labels(&self) -> &[String] {
        &self.elements
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    pub fn unit(&self) -> Option<usize> {
        self.unit
    }

    pub fn zero(&self) -> Option<usize> {
        self.zero
    }

    pub fn position(&self, label: &str) -> Option<usize> {
        self.elements.iter().position(|e| e == label)
    }

    pub fn is_idempotent(&self, a: usize) -> bool {
        self.table[a][a] == a
    }

    pub fn idempotents(&self) -> Vec<usize> {
        (0..self.size()).filter(|&a| self.is_idempotent(a)).collect()
    }

    pub fn is_commutative(&self) -> bool {
        let n = self.size();
        (0..n).all(|a| (a..n).all(|b| self.table[a][b] == self.table[b][a]))
    }

    /// All `t` with `sts = s` and `tst = t`.
    pub fn pseudo_inverses(&self, s: usize) -> Vec<usize> {
        (0..self.size())
            .filter(|&t| self.mul(self.mul(s, t), s) == s && self.mul(self.mul(t, s), t) == t)
            .collect()
    }

    /// First pair of non-commuting idempotents, if any.
    pub fn noncommuting_idempotents(&self) -> Option<(usize, usize)> {
        let e = self.idempotents();
        for (i, &a) in e.iter().enumerate() {
            for &b in &e[i + 1..] {
                if self.mul(a, b) != self.mul(b, a) {
                    return Some((a, b));
                }
            }
        }
        None
    }
}

/// Classifies `s` as inverse, merely regular, or not regular.
pub fn is_inverse(s: &FinSemigroup) -> Inverseness {
    let mut star = Vec::with_capacity(s.size());
    let mut ambiguous = None;
    for a in 0..s.size() {
        let inv = s.pseudo_inverses(a);
        match inv.len() {
            0 => return Inverseness::NotRegular { witness: (a, a) },
            1 => star.push(inv[0]),
            _ => {
                ambiguous.get_or_insert((inv[0], inv[1]));
                star.push(inv[0]);
            }
        }
    }
    match ambiguous {
        None => Inverseness::Inverse { star },
        Some(pair) => Inverseness::RegularOnly { witness: s.noncommuting_idempotents().unwrap_or(pair) },
    }
}

/// `θ_s(x) = s·x` on `s*s·S`, over the ground set `{1..|S|}` (element `i`
/// is point `i + 1`). The embedding is verified exhaustively.
pub fn wagner_preston(s: &FinSemigroup) -> Result<Vec<PartialBijection>> {
    let star = match is_inverse(s) {
        Inverseness::Inverse { star } => star,
        _ => return Err(Error::Precondition("Wagner–Preston needs an inverse semigroup".into())),
    };
    let n = s.size();
    let mut thetas = Vec::with_capacity(n);
    for a in 0..n {
        let e = s.mul(star[a], a);
        let mut dom: Vec<usize> = (0..n).map(|y| s.mul(e, y)).collect();
        dom.sort_unstable();
        dom.dedup();
        let pairs = dom.iter().map(|&x| (x + 1, s.mul(a, x) + 1)).collect();
        thetas.push(PartialBijection::new(n, pairs)?);
    }
    for a in 0..n {
        for b in 0..n {
            if thetas[a].compose(&thetas[b]) != thetas[s.mul(a, b)] {
                return Err(Error::Invalid(format!("θ not multiplicative at ({}, {})", s.label(a), s.label(b))));
            }
        }
        for b in a + 1..n {
            if thetas[a] == thetas[b] {
                return Err(Error::Invalid(format!("θ not injective: {} and {}", s.label(a), s.label(b))));
            }
        }
    }
    Ok(thetas)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::FinGroup;

    #[test]
    fn left_zero_is_regular_only() {
        let l2 = FinSemigroup::left_zero(2);
        assert_eq!(l2.unit(), None);
        assert_eq!(is_inverse(&l2), Inverseness::RegularOnly { witness: (0, 1) });
    }

    #[test]
    fn nilpotent_is_not_regular() {
        // {a, 0} with a² = 0
        let s = FinSemigroup::new(vec!["a".into(), "0".into()], vec![vec![1, 1], vec![1, 1]]).unwrap();
        assert_eq!(is_inverse(&s), Inverseness::NotRegular { witness: (0, 0) });
    }

    #[test]
    fn groups_are_inverse() {
        let g = FinGroup::cyclic(3);
        let star = is_inverse(&g.to_semigroup()).star().unwrap().to_vec();
        assert_eq!(star, vec![0, 2, 1]);
    }

    #[test]
    fn associativity_checked() {
        // xy = y, yx = x but xx = y breaks associativity.
        let bad = FinSemigroup::new(vec!["x".into(), "y".into()], vec![vec![1, 1], vec![0, 1]]);
        assert!(bad.is_err());
    }

    #[test]
    fn wagner_preston_of_semilattice_is_partial_identities() {
        // e, f, ef = 0 under intersection of {1}, {2}, ∅
        let s = FinSemigroup::new(
            vec!["e".into(), "f".into(), "ef".into()],
            vec![vec![0, 2, 2], vec![2, 1, 2], vec![2, 2, 2]],
        )
        .unwrap();
        for theta in wagner_preston(&s).unwrap() {
            assert!(theta.pairs().iter().all(|(x, y)| x == y));
        }
        assert!(wagner_preston(&FinSemigroup::left_zero(2)).is_err());
    }
}
