//! Finite groups by Cayley table.

use crate::semigroup::FinSemigroup;
use crate::{Error, Result};

const MAX_PARSED_ORDER: usize = 64;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinGroup {
    labels: Vec<String>,
    table: Vec<Vec<usize>>,
    unit: usize,
    inverse: Vec<usize>,
}

impl FinGroup {
    /// Validates associativity, identity and inverses.
    pub fn new(labels: Vec<String>, table: Vec<Vec<usize>>) -> Result<Self> {
        let s = FinSemigroup::new(labels.clone(), table.clone())?;
        let unit = s.unit().ok_or_else(|| Error::Invalid("group has no identity".into()))?;
        let n = labels.len();
        let mut inverse = Vec::with_capacity(n);
        for g in 0..n {
            let inv = (0..n)
                .find(|&h| table[g][h] == unit && table[h][g] == unit)
                .ok_or_else(|| Error::Invalid(format!("{} has no inverse", labels[g])))?;
            inverse.push(inv);
        }
        Ok(FinGroup { labels, table, unit, inverse })
    }

    /// ℤ_n with elements `0..n` written additively.
    pub fn cyclic(n: usize) -> Self {
        assert!(n >= 1, "cyclic group of order 0");
        let labels = (0..n).map(|k| k.to_string()).collect();
        let table = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        Self::new(labels, table).expect("cyclic group")
    }

    pub fn trivial() -> Self {
        Self::cyclic(1)
    }

    pub fn direct_product(a: &FinGroup, b: &FinGroup) -> Self {
        let (n, m) = (a.order(), b.order());
        let mut labels = Vec::with_capacity(n * m);
        for x in &a.labels {
            for y in &b.labels {
                labels.push(format!("({x},{y})"));
            }
        }
        let table = (0..n * m)
            .map(|p| (0..n * m).map(|q| a.mul(p / m, q / m) * m + b.mul(p % m, q % m)).collect())
            .collect();
        Self::new(labels, table).expect("product of groups")
    }

    /// Accepts `trivial`, `Zn`, and `x`-separated products such as `Z2xZ2`.
    pub fn parse(name: &str) -> Result<Self> {
        let name = name.trim();
        if name.eq_ignore_ascii_case("trivial") {
            return Ok(Self::trivial());
        }
        let mut out: Option<FinGroup> = None;
        for part in name.split(['x', '×']) {
            let n: usize = part
                .trim()
                .strip_prefix('Z')
                .and_then(|d| d.parse().ok())
                .filter(|&n| (1..=12).contains(&n))
                .ok_or_else(|| Error::Invalid(format!("unknown group {name:?}")))?;
            if out.as_ref().map_or(1, |g| g.order()) * n > MAX_PARSED_ORDER {
                return Err(Error::SizeBound { what: format!("order of {name:?}"), limit: MAX_PARSED_ORDER });
            }
            let c = Self::cyclic(n);
            out = Some(match out {
                None => c,
                Some(g) => Self::direct_product(&g, &c),
            });
        }
        out.ok_or_else(|| Error::Invalid(format!("unknown group {name:?}")))
    }

    pub fn order(&self) -> usize {
        self.labels.len()
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn unit(&self) -> usize {
        self.unit
    }

    pub fn label(&self, a: usize) -> &str {
        &self.labels[a]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order()).all(|a| (0..self.order()).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn to_semigroup(&self) -> FinSemigroup {
        FinSemigroup::new(self.labels.clone(), self.table.clone()).expect("groups are semigroups")
    }
}
