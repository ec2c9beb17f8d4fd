//! Finite-dimensional algebras and coalgebras by structure constants.

mod characters;

pub use characters::{enumerate_characters, CharacterReport};

use num_traits::{One, Zero};

use crate::groupoid::FinGroupoid;
use crate::linear::{solve, tensor, BasedSpace, Label, LinMap, Scalar, Vector};
use crate::report::Witness;
use crate::semigroup::FinSemigroup;
use crate::{Error, Result};

/// Associative algebra; `mult` maps `space ⊗ space → space`.
#[derive(Clone, Debug)]
pub struct FinAlgebra {
    space: BasedSpace,
    mult: LinMap,
    unit: Option<Vector>,
    local_units: Option<Vec<Vector>>,
}

impl FinAlgebra {
    /// Validates associativity and, if given, the unit.
    pub fn new(space: BasedSpace, mult: LinMap, unit: Option<Vector>) -> Result<Self> {
        let a = Self::unchecked(space, mult, unit)?;
        if let Some(w) = a.associativity_failure() {
            return Err(Error::Invalid(format!("not associative {w}")));
        }
        if let Some(w) = a.unit_failure() {
            return Err(Error::Invalid(format!("unit law fails {w}")));
        }
        Ok(a)
    }

    /// Shape checks only.
    pub fn unchecked(space: BasedSpace, mult: LinMap, unit: Option<Vector>) -> Result<Self> {
        let sq = tensor(&space, &space);
        if mult.domain().dim() != sq.dim() || mult.codomain().dim() != space.dim() {
            return Err(Error::Shape("multiplication must map V⊗V → V".into()));
        }
        if let Some(u) = &unit {
            if u.keys().any(|&k| k >= space.dim()) {
                return Err(Error::DimensionMismatch { expected: space.dim(), found: u.len() });
            }
        }
        Ok(FinAlgebra { space, mult, unit, local_units: None })
    }

    /// Builds from basis products `b_i b_j = f(i, j)`.
    pub fn from_products(space: BasedSpace, mut f: impl FnMut(usize, usize) -> Vector, unit: Option<Vector>) -> Result<Self> {
        let n = space.dim();
        let sq = tensor(&space, &space);
        let mult = LinMap::from_fn(&sq, &space, |p| f(p / n, p % n));
        Self::new(space, mult, unit)
    }

    /// Attaches mutually orthogonal idempotents.
    pub fn with_local_units(mut self, units: Vec<Vector>) -> Result<Self> {
        for (i, e) in units.iter().enumerate() {
            for (j, f) in units.iter().enumerate() {
                let ef = self.mul(e, f);
                let expected = if i == j { e.clone() } else { Vector::zero() };
                if ef != expected {
                    return Err(Error::Invalid(format!("local units {i},{j} not orthogonal idempotents")));
                }
            }
        }
        self.local_units = Some(units);
        Ok(self)
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn space(&self) -> &BasedSpace {
        &self.space
    }

    pub fn mult(&self) -> &LinMap {
        &self.mult
    }

    pub fn unit(&self) -> Option<&Vector> {
        self.unit.as_ref()
    }

    pub fn local_units(&self) -> Option<&[Vector]> {
        self.local_units.as_deref()
    }

    pub fn label(&self, i: usize) -> &Label {
        self.space.label(i)
    }

    pub fn render(&self, v: &Vector) -> String {
        v.render(|&i| self.space.label(i).to_string())
    }

    /// `b_i b_j`.
    pub fn product(&self, i: usize, j: usize) -> &Vector {
        self.mult.column(i * self.dim() + j)
    }

    pub fn mul(&self, x: &Vector, y: &Vector) -> Vector {
        x.bilinear(y, |&i, &j| self.product(i, j).clone())
    }

    /// Product in `H⊗H` with componentwise multiplication.
    pub fn tensor_mul(&self, x: &Vector, y: &Vector) -> Vector {
        let n = self.dim();
        x.bilinear(y, |&p, &q| {
            let l = self.product(p / n, q / n);
            let r = self.product(p % n, q % n);
            l.bilinear(r, |&a, &b| Vector::basis(a * n + b))
        })
    }

    pub fn associativity_failure(&self) -> Option<Witness> {
        let n = self.dim();
        for i in 0..n {
            for j in 0..n {
                let ij = self.product(i, j);
                for k in 0..n {
                    let lhs = self.mul(ij, &Vector::basis(k));
                    let rhs = self.mul(&Vector::basis(i), self.product(j, k));
                    if lhs != rhs {
                        return Some(Witness {
                            at: format!("({}, {}, {})", self.label(i), self.label(j), self.label(k)),
                            lhs: self.render(&lhs),
                            rhs: self.render(&rhs),
                        });
                    }
                }
            }
        }
        None
    }

    pub fn unit_failure(&self) -> Option<Witness> {
        let u = self.unit.as_ref()?;
        for j in 0..self.dim() {
            let b = Vector::basis(j);
            for v in [self.mul(u, &b), self.mul(&b, u)] {
                if v != b {
                    return Some(Witness { at: format!("unit·{}", self.label(j)), lhs: self.render(&v), rhs: self.render(&b) });
                }
            }
        }
        None
    }

    pub fn is_commutative(&self) -> bool {
        let n = self.dim();
        (0..n).all(|i| (i + 1..n).all(|j| self.product(i, j) == self.product(j, i)))
    }

    /// Solves the unit equations `u b_j = b_j = b_j u`.
    pub fn find_unit(&self) -> Option<Vector> {
        let n = self.dim();
        let mut cols = vec![Vector::zero(); n];
        let mut rhs = Vector::zero();
        for j in 0..n {
            for side in 0..2 {
                let row_base = (2 * j + side) * n;
                for (i, col) in cols.iter_mut().enumerate() {
                    let p = if side == 0 { self.product(i, j) } else { self.product(j, i) };
                    for (&k, c) in p.terms() {
                        col.add_term(row_base + k, c.clone());
                    }
                }
                rhs.add_term(row_base + j, Scalar::one());
            }
        }
        solve(&cols, &rhs)
    }

    /// If every basis product is zero or a single basis element with
    /// coefficient 1, the table of those products.
    pub fn semigroup_like(&self) -> Option<Vec<Vec<Option<usize>>>> {
        let n = self.dim();
        let mut table = vec![vec![None; n]; n];
        for (i, row) in table.iter_mut().enumerate() {
            for (j, slot) in row.iter_mut().enumerate() {
                let p = self.product(i, j);
                match p.len() {
                    0 => {}
                    1 => {
                        let (&k, c) = p.terms().next().expect("one term");
                        if !c.is_one() {
                            return None;
                        }
                        *slot = Some(k);
                    }
                    _ => return None,
                }
            }
        }
        Some(table)
    }
}

/// Coalgebra; `counit` maps to the one-dimensional space.
#[derive(Clone, Debug)]
pub struct FinCoalgebra {
    space: BasedSpace,
    comult: LinMap,
    counit: Option<LinMap>,
}

impl FinCoalgebra {
    pub fn new(space: BasedSpace, comult: LinMap, counit: Option<LinMap>) -> Result<Self> {
        let c = Self::unchecked(space, comult, counit)?;
        if let Some(w) = c.coassociativity_failure() {
            return Err(Error::Invalid(format!("not coassociative {w}")));
        }
        if let Some(w) = c.counit_failure() {
            return Err(Error::Invalid(format!("counit law fails {w}")));
        }
        Ok(c)
    }

    pub fn unchecked(space: BasedSpace, comult: LinMap, counit: Option<LinMap>) -> Result<Self> {
        let n = space.dim();
        if comult.domain().dim() != n || comult.codomain().dim() != n * n {
            return Err(Error::Shape("comultiplication must map V → V⊗V".into()));
        }
        if let Some(e) = &counit {
            if e.domain().dim() != n || e.codomain().dim() != 1 {
                return Err(Error::Shape("counit must map V → 𝕜".into()));
            }
        }
        Ok(FinCoalgebra { space, comult, counit })
    }

    pub fn space(&self) -> &BasedSpace {
        &self.space
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn comult(&self) -> &LinMap {
        &self.comult
    }

    pub fn counit(&self) -> Option<&LinMap> {
        self.counit.as_ref()
    }

    pub fn coproduct(&self, j: usize) -> &Vector {
        self.comult.column(j)
    }

    /// `(Δ⊗id)Δ(b_j)` and `(id⊗Δ)Δ(b_j)` in `V⊗V⊗V`.
    pub fn double_coproducts(&self, j: usize) -> (Vector, Vector) {
        let n = self.dim();
        let d = self.coproduct(j);
        let left = d.map_basis(|&p| {
            let (a, b) = (p / n, p % n);
            self.coproduct(a).relabel(|&q| q * n + b)
        });
        let right = d.map_basis(|&p| {
            let (a, b) = (p / n, p % n);
            self.coproduct(b).relabel(|&q| a * n * n + q)
        });
        (left, right)
    }

    pub fn coassociativity_failure(&self) -> Option<Witness> {
        (0..self.dim()).find_map(|j| {
            let (l, r) = self.double_coproducts(j);
            (l != r).then(|| Witness { at: self.space.label(j).to_string(), lhs: format!("{l:?}"), rhs: format!("{r:?}") })
        })
    }

    pub fn counit_failure(&self) -> Option<Witness> {
        let e = self.counit.as_ref()?;
        let n = self.dim();
        for j in 0..n {
            let d = self.coproduct(j);
            let left = d.map_basis(|&p| Vector::basis(p % n).scaled(&e.column(p / n).coeff(&0)));
            let right = d.map_basis(|&p| Vector::basis(p / n).scaled(&e.column(p % n).coeff(&0)));
            let b = Vector::basis(j);
            if left != b || right != b {
                return Some(Witness {
                    at: self.space.label(j).to_string(),
                    lhs: format!("{left:?} / {right:?}"),
                    rhs: format!("{b:?}"),
                });
            }
        }
        None
    }
}

/// `f ∗ g = mult_A ∘ (f⊗g) ∘ Δ_C`.
pub fn convolve_maps(f: &LinMap, g: &LinMap, c: &FinCoalgebra, a: &FinAlgebra) -> Result<LinMap> {
    for h in [f, g] {
        if h.domain().dim() != c.dim() || h.codomain().dim() != a.dim() {
            return Err(Error::Shape("convolution operands must map C → A".into()));
        }
    }
    let n = c.dim();
    Ok(LinMap::from_fn(c.space(), a.space(), |j| {
        c.coproduct(j).map_basis(|&p| a.mul(f.column(p / n), g.column(p % n)))
    }))
}

/// `η∘ε`, the convolution unit when both exist.
pub fn unit_counit(c: &FinCoalgebra, a: &FinAlgebra) -> Option<LinMap> {
    let e = c.counit()?;
    let u = a.unit()?;
    Some(LinMap::from_fn(c.space(), a.space(), |j| u.scaled(&e.column(j).coeff(&0))))
}

/// Fun(X, 𝕜) with its point idempotents `χ_x`.
#[derive(Clone, Debug)]
pub struct CommSplitAlgebra {
    algebra: FinAlgebra,
}

impl CommSplitAlgebra {
    /// Accepts an algebra whose basis is a complete set of orthogonal idempotents.
    pub fn from_algebra(algebra: FinAlgebra) -> Result<Self> {
        let n = algebra.dim();
        for i in 0..n {
            for j in 0..n {
                let expected = if i == j { Vector::basis(i) } else { Vector::zero() };
                if *algebra.product(i, j) != expected {
                    return Err(Error::Invalid("basis is not a set of orthogonal idempotents".into()));
                }
            }
        }
        let one: Vector = (0..n).map(|i| (i, Scalar::one())).collect();
        if algebra.unit() != Some(&one) {
            return Err(Error::Invalid("point idempotents do not sum to the unit".into()));
        }
        Ok(CommSplitAlgebra { algebra })
    }

    pub fn algebra(&self) -> &FinAlgebra {
        &self.algebra
    }

    pub fn points(&self) -> usize {
        self.algebra.dim()
    }

    pub fn one(&self) -> Vector {
        (0..self.points()).map(|i| (i, Scalar::one())).collect()
    }

    /// Characteristic function of a subset given as a bitmask.
    pub fn indicator(&self, mask: u64) -> Vector {
        (0..self.points()).filter(|&i| mask >> i & 1 == 1).map(|i| (i, Scalar::one())).collect()
    }

    /// All `2^|X|` idempotents, by increasing bitmask.
    pub fn idempotents(&self) -> Vec<Vector> {
        (0..1u64 << self.points()).map(|m| self.indicator(m)).collect()
    }

    pub fn is_idempotent(&self, v: &Vector) -> bool {
        self.algebra.mul(v, v) == *v
    }

    pub fn mul(&self, x: &Vector, y: &Vector) -> Vector {
        x.filtered(|k| y.get(k).is_some()).map_basis(|k| Vector::term(*k, y.coeff(k)))
    }
}

pub fn fun_algebra(points: &[String]) -> CommSplitAlgebra {
    let n = points.len();
    let space = BasedSpace::new(points.iter().map(|p| Label::Atom(format!("χ{p}"))).collect()).expect("distinct points");
    let one = (0..n).map(|i| (i, Scalar::one())).collect();
    let alg = FinAlgebra::from_products(space, |i, j| if i == j { Vector::basis(i) } else { Vector::zero() }, Some(one))
        .expect("function algebra");
    CommSplitAlgebra { algebra: alg }
}

/// `δ_s δ_t = δ_{st}`; with `contract`, the zero element is identified with 0.
pub fn semigroup_algebra(s: &FinSemigroup, contract: bool) -> Result<FinAlgebra> {
    if s.size() > 100 {
        return Err(Error::SizeBound { what: "semigroup algebra".into(), limit: 100 });
    }
    let zero = if contract { s.zero() } else { None };
    let keep: Vec<usize> = (0..s.size()).filter(|&a| Some(a) != zero).collect();
    let mut pos = vec![None; s.size()];
    for (i, &a) in keep.iter().enumerate() {
        pos[a] = Some(i);
    }
    let space = BasedSpace::from_strings(keep.iter().map(|&a| s.label(a).to_string()))?;
    let unit = s.unit().and_then(|u| pos[u]).map(Vector::basis);
    FinAlgebra::from_products(
        space,
        |i, j| pos[s.mul(keep[i], keep[j])].map_or_else(Vector::zero, Vector::basis),
        unit,
    )
}

/// `δ_g δ_h = δ_{gh}` when composable, else 0; `1 = Σ δ_{1_x}`.
pub fn groupoid_algebra(g: &FinGroupoid) -> FinAlgebra {
    let space = BasedSpace::from_strings(g.arrows.iter().cloned()).expect("distinct arrows");
    let unit = g.units.iter().map(|&u| (u, Scalar::one())).collect();
    FinAlgebra::from_products(space, |a, b| g.compose(a, b).map_or_else(Vector::zero, Vector::basis), Some(unit))
        .expect("groupoid algebra")
}

/// `n×n` matrices with basis `E_ij` (row-major).
pub fn matrix_algebra(n: usize) -> FinAlgebra {
    let labels = (1..=n).flat_map(|i| (1..=n).map(move |j| format!("E{i}{j}")));
    let space = BasedSpace::from_strings(labels).expect("distinct");
    let unit = (0..n).map(|i| (i * n + i, Scalar::one())).collect();
    FinAlgebra::from_products(
        space,
        |p, q| if p % n == q / n { Vector::basis((p / n) * n + q % n) } else { Vector::zero() },
        Some(unit),
    )
    .expect("matrix algebra")
}

/// Linear functional `H → 𝕜` from its values on the basis.
pub fn functional(space: &BasedSpace, values: &[Scalar]) -> LinMap {
    LinMap::from_fn(space, &BasedSpace::field(), |j| {
        if values[j].is_zero() {
            Vector::zero()
        } else {
            Vector::term(0, values[j].clone())
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::FinGroup;
    use crate::groupoid::pair_groupoid;
    use crate::linear::int;

    #[test]
    fn left_zero_algebra_has_no_unit() {
        let a = semigroup_algebra(&FinSemigroup::left_zero(2), false).unwrap();
        assert!(a.unit().is_none());
        assert!(a.find_unit().is_none());
        let z2 = semigroup_algebra(&FinGroup::cyclic(2).to_semigroup(), false).unwrap();
        assert_eq!(z2.find_unit(), Some(Vector::basis(0)));
    }

    #[test]
    fn pair_groupoid_algebra_is_matrices() {
        for n in 1..=3 {
            let g = pair_groupoid(n);
            let a = groupoid_algebra(&g);
            let m = matrix_algebra(n);
            // δ_(i,j) ↦ E_ij is index-preserving.
            for p in 0..n * n {
                for q in 0..n * n {
                    assert_eq!(a.product(p, q), m.product(p, q));
                }
            }
        }
    }

    #[test]
    fn idempotent_counts() {
        let pts: Vec<String> = (1..=3).map(|i| i.to_string()).collect();
        let a = fun_algebra(&pts);
        let idem = a.idempotents();
        assert_eq!(idem.len(), 8);
        assert!(idem.iter().all(|e| a.is_idempotent(e)));
        assert!(!a.is_idempotent(&Vector::term(0, int(2))));
    }

    #[test]
    fn z2_convolution_is_counit() {
        let g = FinGroup::cyclic(2);
        let h = semigroup_algebra(&g.to_semigroup(), false).unwrap();
        let sq = tensor(h.space(), h.space());
        let delta = LinMap::from_fn(h.space(), &sq, |j| Vector::basis(j * 2 + j));
        let eps = functional(h.space(), &[int(1), int(1)]);
        let c = FinCoalgebra::new(h.space().clone(), delta, Some(eps)).unwrap();
        let s = LinMap::from_fn(h.space(), h.space(), |j| Vector::basis(g.inv(j)));
        let id = LinMap::identity(h.space());
        let conv = convolve_maps(&id, &s, &c, &h).unwrap();
        assert_eq!(conv, unit_counit(&c, &h).unwrap());
        assert_eq!(convolve_maps(&id, &conv, &c, &h).unwrap(), id);
    }
}
