use std::collections::BTreeMap;
use std::sync::OnceLock;

use num_traits::{One, Zero};

use super::comb::{Comb, Vector};
use super::map::LinMap;
use super::scalar::Scalar;
use super::space::BasedSpace;
use crate::{Error, Result};

/// Reduced row echelon form, pivot = smallest key of each row.
#[derive(Clone, Debug)]
pub struct Echelon<T: Ord + Clone> {
    rows: BTreeMap<T, Comb<T>>,
}

impl<T: Ord + Clone> Default for Echelon<T> {
    fn default() -> Self {
        Echelon { rows: BTreeMap::new() }
    }
}

impl<T: Ord + Clone> Echelon<T> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_vectors<'a>(vs: impl IntoIterator<Item = &'a Comb<T>>) -> Self
    where
        T: 'a,
    {
        let mut e = Self::new();
        for v in vs {
            e.insert(v);
        }
        e
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn row(&self, pivot: &T) -> Option<&Comb<T>> {
        self.rows.get(pivot)
    }

    pub fn pivots(&self) -> impl Iterator<Item = &T> {
        self.rows.keys()
    }

    /// Remainder of `v` after eliminating every pivot coordinate.
    pub fn reduce(&self, v: &Comb<T>) -> Comb<T> {
        let hits: Vec<T> = v.keys().filter(|k| self.rows.contains_key(k)).cloned().collect();
        let mut out = v.clone();
        for p in hits {
            let c = out.coeff(&p);
            if !c.is_zero() {
                out.axpy(&-c, &self.rows[&p]);
            }
        }
        out
    }

    pub fn contains(&self, v: &Comb<T>) -> bool {
        self.reduce(v).is_zero()
    }

    /// Adds `v` to the span; returns whether the rank grew.
    pub fn insert(&mut self, v: &Comb<T>) -> bool {
        let r = self.reduce(v);
        let Some(p) = r.first_key().cloned() else {
            return false;
        };
        let lead = r.coeff(&p);
        let r = r.scaled(&(Scalar::one() / lead));
        for row in self.rows.values_mut() {
            let c = row.coeff(&p);
            if !c.is_zero() {
                row.axpy(&-c, &r);
            }
        }
        self.rows.insert(p, r);
        true
    }
}

/// Subspace of a based space, spanned by generators. The echelon form is
/// computed once on first use.
#[derive(Debug)]
pub struct Subspace {
    ambient: BasedSpace,
    generators: Vec<Vector>,
    echelon: OnceLock<Echelon<usize>>,
}

impl Clone for Subspace {
    fn clone(&self) -> Self {
        Subspace { ambient: self.ambient.clone(), generators: self.generators.clone(), echelon: self.echelon.clone() }
    }
}

impl Subspace {
    pub fn new(ambient: &BasedSpace, generators: Vec<Vector>) -> Result<Self> {
        for g in &generators {
            if let Some(&k) = g.keys().next_back() {
                if k >= ambient.dim() {
                    return Err(Error::DimensionMismatch { expected: ambient.dim(), found: k + 1 });
                }
            }
        }
        Ok(Subspace { ambient: ambient.clone(), generators, echelon: OnceLock::new() })
    }

    pub fn zero(ambient: &BasedSpace) -> Self {
        Subspace { ambient: ambient.clone(), generators: Vec::new(), echelon: OnceLock::new() }
    }

    pub fn ambient(&self) -> &BasedSpace {
        &self.ambient
    }

    pub fn generators(&self) -> &[Vector] {
        &self.generators
    }

    pub fn echelon(&self) -> &Echelon<usize> {
        self.echelon.get_or_init(|| Echelon::from_vectors(&self.generators))
    }

    pub fn rank(&self) -> usize {
        self.echelon().rank()
    }

    pub fn contains(&self, v: &Vector) -> bool {
        self.echelon().contains(v)
    }
}

/// Some `x` with `Σ x_j columns[j] = rhs` (free variables set to zero).
pub fn solve(columns: &[Vector], rhs: &Vector) -> Option<Vector> {
    let m = columns.len();
    let mut rows: BTreeMap<usize, Vector> = BTreeMap::new();
    for (j, col) in columns.iter().enumerate() {
        for (&k, c) in col.terms() {
            rows.entry(k).or_default().add_term(j, c.clone());
        }
    }
    for (&k, c) in rhs.terms() {
        rows.entry(k).or_default().add_term(m, -c.clone());
    }
    let ech = Echelon::from_vectors(rows.values());
    if ech.row(&m).is_some() {
        return None;
    }
    let mut x = Vector::zero();
    for p in ech.pivots() {
        x.add_term(*p, -ech.row(p).expect("pivot").coeff(&m));
    }
    Some(x)
}

/// `ambient / sub`, with basis the non-pivot labels in order, and the
/// canonical projection.
pub fn quotient(ambient: &BasedSpace, sub: &Subspace) -> Result<(BasedSpace, LinMap)> {
    if sub.ambient().dim() != ambient.dim() {
        return Err(Error::DimensionMismatch { expected: ambient.dim(), found: sub.ambient().dim() });
    }
    let ech = sub.echelon();
    let mut new_index = vec![None; ambient.dim()];
    let mut labels = Vec::new();
    for (j, slot) in new_index.iter_mut().enumerate() {
        if ech.row(&j).is_none() {
            *slot = Some(labels.len());
            labels.push(ambient.label(j).clone());
        }
    }
    let space = BasedSpace::new(labels)?;
    let proj = LinMap::from_fn(ambient, &space, |j| match new_index[j] {
        Some(k) => Vector::basis(k),
        None => {
            let row = ech.row(&j).expect("pivot row");
            let mut v = Vector::zero();
            for (&k, c) in row.terms() {
                if k != j {
                    v.add_term(new_index[k].expect("non-pivot entry"), -c.clone());
                }
            }
            v
        }
    });
    Ok((space, proj))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linear::{int, ratio};

    #[test]
    fn rref_is_canonical() {
        let a = Comb::from_terms([(0usize, int(2)), (1, int(4))]);
        let b = Comb::from_terms([(1usize, int(1)), (2, int(1))]);
        let e1 = Echelon::from_vectors([&a, &b]);
        let e2 = Echelon::from_vectors([&b, &(&a + &b)]);
        assert_eq!(e1.rank(), 2);
        assert_eq!(e1.row(&0), e2.row(&0));
        assert_eq!(e1.row(&0).unwrap().coeff(&2), int(-2));
        assert!(e1.contains(&Comb::from_terms([(0, ratio(1, 2)), (1, int(1))])));
    }

    #[test]
    fn quotient_extremes() {
        let s = BasedSpace::from_strings(["a", "b", "c"]).unwrap();
        let (q, p) = quotient(&s, &Subspace::zero(&s)).unwrap();
        assert_eq!(q.dim(), 3);
        assert_eq!(p, LinMap::identity(&s));
        let full = Subspace::new(&s, (0..3).map(Vector::basis).collect()).unwrap();
        assert_eq!(quotient(&s, &full).unwrap().0.dim(), 0);
        assert!(Subspace::new(&s, vec![Vector::basis(5)]).is_err());
    }
}
