use std::fmt;

use num_traits::Zero;

use super::comb::Vector;
use super::echelon::Echelon;
use super::scalar::Scalar;
use super::space::{tensor, BasedSpace};
use crate::{Error, Result};

/// Linear map between based spaces, stored column-sparse: column `j`
/// is the image of the `j`-th domain basis vector.
#[derive(Clone, PartialEq)]
pub struct LinMap {
    domain: BasedSpace,
    codomain: BasedSpace,
    cols: Vec<Vector>,
}

impl LinMap {
    pub fn from_columns(domain: BasedSpace, codomain: BasedSpace, cols: Vec<Vector>) -> Result<Self> {
        if cols.len() != domain.dim() {
            return Err(Error::DimensionMismatch { expected: domain.dim(), found: cols.len() });
        }
        for c in &cols {
            if let Some(&k) = c.keys().next_back() {
                if k >= codomain.dim() {
                    return Err(Error::DimensionMismatch { expected: codomain.dim(), found: k + 1 });
                }
            }
        }
        Ok(LinMap { domain, codomain, cols })
    }

    /// Builds column by column. Panics if `f` returns an out-of-range index.
    pub fn from_fn(domain: &BasedSpace, codomain: &BasedSpace, f: impl FnMut(usize) -> Vector) -> Self {
        let cols = (0..domain.dim()).map(f).collect();
        Self::from_columns(domain.clone(), codomain.clone(), cols).expect("column index in range")
    }

    pub fn identity(space: &BasedSpace) -> Self {
        Self::from_fn(space, space, Vector::basis)
    }

    pub fn zero(domain: &BasedSpace, codomain: &BasedSpace) -> Self {
        Self::from_fn(domain, codomain, |_| Vector::zero())
    }

    pub fn domain(&self) -> &BasedSpace {
        &self.domain
    }

    pub fn codomain(&self) -> &BasedSpace {
        &self.codomain
    }

    pub fn column(&self, j: usize) -> &Vector {
        &self.cols[j]
    }

    pub fn columns(&self) -> &[Vector] {
        &self.cols
    }

    pub fn entry(&self, i: usize, j: usize) -> Scalar {
        self.cols[j].coeff(&i)
    }

    pub fn apply(&self, v: &Vector) -> Vector {
        v.map_basis(|&j| self.cols[j].clone())
    }

    /// `self ∘ g`.
    pub fn compose(&self, g: &LinMap) -> Result<LinMap> {
        if g.codomain != self.domain {
            return Err(Error::Shape(format!(
                "cannot compose: codomain dim {} vs domain dim {}",
                g.codomain.dim(),
                self.domain.dim()
            )));
        }
        let cols = g.cols.iter().map(|c| self.apply(c)).collect();
        Ok(LinMap { domain: g.domain.clone(), codomain: self.codomain.clone(), cols })
    }

    pub fn equal(&self, other: &LinMap) -> Result<bool> {
        if self.domain.dim() != other.domain.dim() || self.codomain.dim() != other.codomain.dim() {
            return Err(Error::Shape("maps of different shapes".into()));
        }
        Ok(self.cols == other.cols)
    }

    /// First domain index where the two maps differ.
    pub fn first_difference(&self, other: &LinMap) -> Option<usize> {
        (0..self.cols.len()).find(|&j| self.cols[j] != other.cols[j])
    }

    pub fn add(&self, other: &LinMap) -> Result<LinMap> {
        self.equal(other)?;
        let cols = self.cols.iter().zip(&other.cols).map(|(a, b)| a + b).collect();
        Ok(LinMap { domain: self.domain.clone(), codomain: self.codomain.clone(), cols })
    }

    pub fn scaled(&self, c: &Scalar) -> LinMap {
        let cols = self.cols.iter().map(|v| v.scaled(c)).collect();
        LinMap { domain: self.domain.clone(), codomain: self.codomain.clone(), cols }
    }

    /// Replaces one column; used to build deliberately broken structures.
    pub fn with_column(&self, j: usize, v: Vector) -> LinMap {
        let mut out = self.clone();
        out.cols[j] = v;
        out
    }

    pub fn rank(&self) -> usize {
        let mut e = Echelon::new();
        for c in &self.cols {
            e.insert(c);
        }
        e.rank()
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(Vector::is_zero)
    }

    /// Dense row-major matrix, for display and small oracles.
    pub fn to_dense(&self) -> Vec<Vec<Scalar>> {
        let mut m = vec![vec![Scalar::zero(); self.domain.dim()]; self.codomain.dim()];
        for (j, c) in self.cols.iter().enumerate() {
            for (&i, v) in c.terms() {
                m[i][j] = v.clone();
            }
        }
        m
    }
}

/// Kronecker product `f ⊗ g`.
pub fn tensor_map(f: &LinMap, g: &LinMap) -> LinMap {
    let domain = tensor(&f.domain, &g.domain);
    let codomain = tensor(&f.codomain, &g.codomain);
    let m = g.codomain.dim();
    let mut cols = Vec::with_capacity(domain.dim());
    for a in &f.cols {
        for b in &g.cols {
            cols.push(a.bilinear(b, |&i, &k| Vector::basis(i * m + k)));
        }
    }
    LinMap { domain, codomain, cols }
}

impl LinMap {
    pub fn tensor(&self, g: &LinMap) -> LinMap {
        tensor_map(self, g)
    }
}

impl fmt::Debug for LinMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "LinMap {} -> {}", self.domain.dim(), self.codomain.dim())?;
        for (j, c) in self.cols.iter().enumerate() {
            writeln!(
                f,
                "  {} ↦ {}",
                self.domain.label(j),
                c.render(|&i| self.codomain.label(i).to_string())
            )?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linear::int;

    fn perm(space: &BasedSpace, p: &[usize]) -> LinMap {
        LinMap::from_fn(space, space, |j| Vector::basis(p[j]))
    }

    #[test]
    fn permutation_composition_matches_brute_force() {
        let s = BasedSpace::from_strings(["1", "2", "3"]).unwrap();
        let perms = [[0, 1, 2], [1, 0, 2], [0, 2, 1], [2, 1, 0], [1, 2, 0], [2, 0, 1]];
        for p in &perms {
            for q in &perms {
                let composite: Vec<usize> = (0..3).map(|j| p[q[j]]).collect();
                let lhs = perm(&s, p).compose(&perm(&s, q)).unwrap();
                assert_eq!(lhs, perm(&s, &composite));
            }
        }
    }

    #[test]
    fn identity_tensor_identity() {
        let u = BasedSpace::from_strings(["a", "b"]).unwrap();
        let v = BasedSpace::from_strings(["x", "y", "z"]).unwrap();
        let t = tensor_map(&LinMap::identity(&u), &LinMap::identity(&v));
        assert_eq!(t, LinMap::identity(&tensor(&u, &v)));
    }

    #[test]
    fn shape_errors() {
        let u = BasedSpace::from_strings(["a", "b"]).unwrap();
        let v = BasedSpace::from_strings(["x"]).unwrap();
        let f = LinMap::zero(&u, &v);
        assert!(f.compose(&f).is_err());
        assert!(LinMap::from_columns(u.clone(), v.clone(), vec![Vector::basis(3), Vector::zero()]).is_err());
        assert_eq!(f.scaled(&int(2)).rank(), 0);
    }
}
