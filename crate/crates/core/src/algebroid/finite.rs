use num_traits::One;

use super::{Algebroid, Balancer, Mode, Pair, Side};
use crate::algebra::{fun_algebra, groupoid_algebra, CommSplitAlgebra, FinAlgebra};
use crate::group::FinGroup;
use crate::groupoid::{points, product_groupoid, FinGroupoid};
use crate::linear::{tensor, BasedSpace, LinMap, Scalar, Subspace, Vector};
use crate::{Error, Result};

const MAX_DIM: usize = 200;

/// Finite-dimensional Hopf algebroid with every structure map stored as a matrix.
/// `H ⊗ H` uses the index `i·dim H + j`.
#[derive(Clone, Debug)]
pub struct FinAlgebroid {
    pub name: String,
    pub mode: Mode,
    pub h: FinAlgebra,
    pub base: CommSplitAlgebra,
    pub s: LinMap,
    pub t: LinMap,
    pub delta_l: LinMap,
    pub delta_r: LinMap,
    pub eps_l: LinMap,
    pub eps_r: LinMap,
    pub antipode: LinMap,
}

impl FinAlgebroid {
    /// Shape checks only.
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        name: &str,
        mode: Mode,
        h: FinAlgebra,
        base: CommSplitAlgebra,
        s: LinMap,
        t: LinMap,
        delta: (LinMap, LinMap),
        eps: (LinMap, LinMap),
        antipode: LinMap,
    ) -> Result<Self> {
        let hs = h.space();
        let hh = tensor(hs, hs);
        let a = base.algebra().space();
        if h.unit().is_none() {
            return Err(Error::Invalid("total algebra needs a unit".into()));
        }
        let shapes = [
            (&s, a, hs, "s"),
            (&t, a, hs, "t"),
            (&delta.0, hs, &hh, "Δ_l"),
            (&delta.1, hs, &hh, "Δ_r"),
            (&eps.0, hs, a, "ε_l"),
            (&eps.1, hs, a, "ε_r"),
            (&antipode, hs, hs, "S"),
        ];
        for (f, dom, cod, what) in shapes {
            if f.domain().dim() != dom.dim() || f.codomain().dim() != cod.dim() {
                return Err(Error::Shape(format!("{what} has the wrong shape")));
            }
        }
        Ok(FinAlgebroid {
            name: name.to_string(),
            mode,
            h,
            base,
            s,
            t,
            delta_l: delta.0,
            delta_r: delta.1,
            eps_l: eps.0,
            eps_r: eps.1,
            antipode,
        })
    }

    pub fn dim(&self) -> usize {
        self.h.dim()
    }

    pub fn space(&self) -> &BasedSpace {
        self.h.space()
    }

    pub fn tensor_space(&self) -> BasedSpace {
        tensor(self.space(), self.space())
    }

    /// The balancing subspace of `H ⊗ H` for one side.
    pub fn balancing(&self, side: Side) -> Result<Subspace> {
        let n = self.dim();
        let gens = Balancer::new(self).generators(side).iter().map(|g| g.relabel(|&(i, j)| i * n + j)).collect();
        Subspace::new(&self.tensor_space(), gens)
    }

    /// `dim H ⊗_A H`.
    pub fn balanced_dim(&self, side: Side) -> usize {
        self.dim() * self.dim() - Balancer::new(self).rank(side)
    }

    /// Copy with one structure map replaced; used for negative controls.
    pub fn with_antipode(&self, antipode: LinMap) -> Self {
        FinAlgebroid { antipode, ..self.clone() }
    }
}

impl Algebroid for FinAlgebroid {
    type Key = usize;
    type Base = usize;

    fn name(&self) -> String {
        self.name.clone()
    }

    fn mode(&self) -> Mode {
        self.mode
    }

    fn basis(&self) -> Vec<usize> {
        (0..self.dim()).collect()
    }

    fn base_basis(&self) -> Vec<usize> {
        (0..self.base.points()).collect()
    }

    fn key_label(&self, k: &usize) -> String {
        self.h.label(*k).to_string()
    }

    fn base_label(&self, b: &usize) -> String {
        self.base.algebra().label(*b).to_string()
    }

    fn mul(&self, x: &usize, y: &usize) -> Vector {
        self.h.product(*x, *y).clone()
    }

    fn one(&self) -> Vector {
        self.h.unit().cloned().unwrap_or_default()
    }

    fn base_mul(&self, a: &usize, b: &usize) -> Vector {
        if a == b {
            Vector::basis(*a)
        } else {
            Vector::zero()
        }
    }

    fn base_one(&self) -> Vector {
        self.base.one()
    }

    fn source(&self, a: &usize) -> Vector {
        self.s.column(*a).clone()
    }

    fn target(&self, a: &usize) -> Vector {
        self.t.column(*a).clone()
    }

    fn delta_l(&self, h: &usize) -> Pair<usize> {
        let n = self.dim();
        self.delta_l.column(*h).relabel(|&p| (p / n, p % n))
    }

    fn delta_r(&self, h: &usize) -> Pair<usize> {
        let n = self.dim();
        self.delta_r.column(*h).relabel(|&p| (p / n, p % n))
    }

    fn eps_l(&self, h: &usize) -> Vector {
        self.eps_l.column(*h).clone()
    }

    fn eps_r(&self, h: &usize) -> Vector {
        self.eps_r.column(*h).clone()
    }

    fn antipode(&self, h: &usize) -> Vector {
        self.antipode.column(*h).clone()
    }
}

fn ones(keys: impl IntoIterator<Item = usize>) -> Vector {
    keys.into_iter().map(|k| (k, Scalar::one())).collect()
}

/// `A ⊗ A` with `s(a) = 1⊗a`, `t(a) = a⊗1`, `Δ(a⊗b) = (a⊗1)⊗_A(1⊗b)`,
/// `ε(a⊗b) = ab`, `S(a⊗b) = b⊗a`.
pub fn pair_algebroid(a: &CommSplitAlgebra) -> FinAlgebroid {
    let m = a.points();
    let al = a.algebra();
    let labels = (0..m * m).map(|p| format!("{}⊗{}", al.label(p / m), al.label(p % m)));
    let hs = BasedSpace::from_strings(labels).expect("distinct labels");
    let n = m * m;
    let h = FinAlgebra::from_products(hs.clone(), |p, q| if p == q { Vector::basis(p) } else { Vector::zero() }, Some(ones(0..n)))
        .expect("pointwise algebra");
    let s = LinMap::from_fn(al.space(), &hs, |z| ones((0..m).map(|x| x * m + z)));
    let t = LinMap::from_fn(al.space(), &hs, |z| ones((0..m).map(|y| z * m + y)));
    let hh = tensor(&hs, &hs);
    let delta = LinMap::from_fn(&hs, &hh, |p| {
        let (x, y) = (p / m, p % m);
        ones((0..m).flat_map(|u| (0..m).map(move |v| (x * m + u) * n + v * m + y)))
    });
    let eps = LinMap::from_fn(&hs, al.space(), |p| if p / m == p % m { Vector::basis(p / m) } else { Vector::zero() });
    let antipode = LinMap::from_fn(&hs, &hs, |p| Vector::basis((p % m) * m + p / m));
    FinAlgebroid::new(
        &format!("pair(|X|={m})"),
        Mode::Commutative,
        h,
        a.clone(),
        s,
        t,
        (delta.clone(), delta),
        (eps.clone(), eps),
        antipode,
    )
    .expect("pair algebroid shapes")
}

/// `A ⊗ Fun(G) ⊗ A` over `A = Fun(X)`, basis `χ_x⊗p_g⊗χ_y`, with
/// `Δp_h = Σ_{ab=h} p_a⊗p_b`, `ε(a⊗f⊗b) = ab·f(1)` and
/// `S(a⊗f⊗b)(x,g,y) = a(y)b(x)f(g⁻¹)`.
pub fn repfun_transitive_algebroid(xs: &[String], g: &FinGroup) -> Result<FinAlgebroid> {
    let (m, k) = (xs.len(), g.order());
    let n = m * m * k;
    if n > MAX_DIM {
        return Err(Error::SizeBound { what: "representative-function algebroid".into(), limit: MAX_DIM });
    }
    let a = fun_algebra(xs);
    let al = a.algebra();
    let idx = |x: usize, h: usize, y: usize| (x * k + h) * m + y;
    let dec = |p: usize| (p / (k * m), (p / m) % k, p % m);
    let labels = (0..n).map(|p| {
        let (x, h, y) = dec(p);
        format!("{}⊗p{}⊗{}", al.label(x), g.label(h), al.label(y))
    });
    let hs = BasedSpace::from_strings(labels)?;
    let h = FinAlgebra::from_products(hs.clone(), |p, q| if p == q { Vector::basis(p) } else { Vector::zero() }, Some(ones(0..n)))?;
    let s = LinMap::from_fn(al.space(), &hs, |z| ones((0..m).flat_map(|x| (0..k).map(move |h| idx(x, h, z)))));
    let t = LinMap::from_fn(al.space(), &hs, |z| ones((0..k).flat_map(|h| (0..m).map(move |y| idx(z, h, y)))));
    let hh = tensor(&hs, &hs);
    let delta = LinMap::from_fn(&hs, &hh, |p| {
        let (x, h, y) = dec(p);
        let mut v = Vector::zero();
        for a1 in 0..k {
            for b1 in 0..k {
                if g.mul(a1, b1) != h {
                    continue;
                }
                for u in 0..m {
                    for w in 0..m {
                        v.add_term(idx(x, a1, u) * n + idx(w, b1, y), Scalar::one());
                    }
                }
            }
        }
        v
    });
    let eps = LinMap::from_fn(&hs, al.space(), |p| {
        let (x, h, y) = dec(p);
        if x == y && h == g.unit() {
            Vector::basis(x)
        } else {
            Vector::zero()
        }
    });
    let antipode = LinMap::from_fn(&hs, &hs, |p| {
        let (x, h, y) = dec(p);
        Vector::basis(idx(y, g.inv(h), x))
    });
    FinAlgebroid::new(
        &format!("repfun(|X|={m}, |G|={k})"),
        Mode::Commutative,
        h,
        a,
        s,
        t,
        (delta.clone(), delta),
        (eps.clone(), eps),
        antipode,
    )
}

/// `𝕜𝒢` over `A = span{δ_{1_x}}` with `s = t` the inclusion, `Δ(δ_g) = δ_g⊗δ_g`,
/// `ε_l(δ_g) = δ_{1_{t(g)}}`, `ε_r(δ_g) = δ_{1_{s(g)}}`, `S(δ_g) = δ_{g⁻¹}`.
pub fn weakhopf_algebroid(g: &FinGroupoid) -> FinAlgebroid {
    let h = groupoid_algebra(g);
    let a = fun_algebra(&g.objects);
    let hs = h.space().clone();
    let al = a.algebra().space().clone();
    let n = h.dim();
    let inc = LinMap::from_fn(&al, &hs, |x| Vector::basis(g.units[x]));
    let delta = LinMap::from_fn(&hs, &tensor(&hs, &hs), |p| Vector::basis(p * n + p));
    let eps_l = LinMap::from_fn(&hs, &al, |p| Vector::basis(g.tgt[p]));
    let eps_r = LinMap::from_fn(&hs, &al, |p| Vector::basis(g.src[p]));
    let antipode = LinMap::from_fn(&hs, &hs, |p| Vector::basis(g.inverse[p]));
    FinAlgebroid::new(
        &format!("weakhopf({} arrows)", n),
        Mode::Restricted,
        h,
        a,
        inc.clone(),
        inc,
        (delta.clone(), delta),
        (eps_l, eps_r),
        antipode,
    )
    .expect("groupoid algebroid shapes")
}

/// One structure map altered on purpose.
#[derive(Clone, Debug)]
pub struct Mutation {
    pub name: &'static str,
    pub model: FinAlgebroid,
}

/// Six single-map perturbations of correct models.
pub fn mutations() -> Vec<Mutation> {
    let pair = pair_algebroid(&fun_algebra(&points(2)));
    let repfun = repfun_transitive_algebroid(&points(2), &FinGroup::cyclic(2)).expect("small");
    let wh = weakhopf_algebroid(&product_groupoid(&points(2), &FinGroup::cyclic(2)));
    let mut out = Vec::new();

    out.push(Mutation { name: "pair: S = id", model: pair.with_antipode(LinMap::identity(pair.space())) });

    let mut m = pair.clone();
    let (c0, c1) = (m.eps_l.column(0).clone(), m.eps_l.column(1).clone());
    m.eps_l = m.eps_l.with_column(0, c1).with_column(1, c0);
    m.eps_r = m.eps_l.clone();
    out.push(Mutation { name: "pair: ε swapped on χ1⊗χ1, χ1⊗χ2", model: m });

    let mut m = pair.clone();
    let mut d0 = m.delta_l.column(0).clone();
    d0.add_term(0, Scalar::one());
    m.delta_l = m.delta_l.with_column(0, d0);
    m.delta_r = m.delta_l.clone();
    out.push(Mutation { name: "pair: Δ(χ1⊗χ1) perturbed by one entry", model: m });

    let mut m = repfun.clone();
    std::mem::swap(&mut m.s, &mut m.t);
    out.push(Mutation { name: "repfun: s and t exchanged", model: m });

    out.push(Mutation { name: "weakhopf: S = id", model: wh.with_antipode(LinMap::identity(wh.space())) });

    let mut m = wh.clone();
    m.eps_r = m.eps_l.clone();
    out.push(Mutation { name: "weakhopf: ε_r replaced by ε_l", model: m });
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebroid::{check_hopf_algebroid, AlgebroidExt};
    use crate::groupoid::pair_groupoid;

    #[test]
    fn pair_two_passes() {
        let x = pair_algebroid(&fun_algebra(&points(2)));
        let r = check_hopf_algebroid(&x);
        assert!(r.all_pass(), "{r}");
        assert_eq!(x.dim(), 4);
        assert_eq!(x.balanced_dim(Side::Right), 8);
    }

    #[test]
    fn pair_counit_and_antipode_values() {
        let x = pair_algebroid(&fun_algebra(&points(2)));
        // χ1⊗χ2 ↦ 0, χ2⊗χ2 ↦ χ2
        assert!(x.eps_l(&1).is_zero());
        assert_eq!(x.eps_l(&3), Vector::basis(1));
        let s2 = x.antipode.compose(&x.antipode).unwrap();
        assert_eq!(s2, LinMap::identity(x.space()));
    }

    #[test]
    fn identity_antipode_fails_antipode_law() {
        let x = pair_algebroid(&fun_algebra(&points(2)));
        let y = x.with_antipode(LinMap::identity(x.space()));
        let r = check_hopf_algebroid(&y);
        let law = r.get("h₍₁₎S(h₍₂₎) = t(ε(h))").unwrap();
        let w = law.witness().expect("fails");
        assert_eq!(w.at, "χ1⊗χ1");
        assert_eq!(w.lhs, "χ1⊗χ1");
        assert_eq!(w.rhs, "χ1⊗χ1 + χ1⊗χ2");
    }

    #[test]
    fn repfun_z2_passes() {
        let x = repfun_transitive_algebroid(&points(2), &FinGroup::cyclic(2)).unwrap();
        assert_eq!(x.dim(), 8);
        let r = check_hopf_algebroid(&x);
        assert!(r.all_pass(), "{r}");
    }

    #[test]
    fn repfun_trivial_group_is_pair() {
        let x = repfun_transitive_algebroid(&points(3), &FinGroup::trivial()).unwrap();
        let y = pair_algebroid(&fun_algebra(&points(3)));
        assert_eq!(x.h.mult().columns(), y.h.mult().columns());
        for (f, g) in [(&x.s, &y.s), (&x.t, &y.t), (&x.delta_l, &y.delta_l), (&x.eps_l, &y.eps_l), (&x.antipode, &y.antipode)] {
            assert_eq!(f.columns(), g.columns());
        }
    }

    #[test]
    fn weakhopf_pair_groupoid_is_matrices() {
        let x = weakhopf_algebroid(&pair_groupoid(2));
        assert_eq!(x.dim(), 4);
        assert!(!x.h.is_commutative());
        let r = check_hopf_algebroid(&x);
        assert!(r.all_pass(), "{r}");
    }

    #[test]
    fn weakhopf_product_groupoid() {
        let x = weakhopf_algebroid(&product_groupoid(&points(2), &FinGroup::cyclic(2)));
        assert_eq!((x.dim(), x.base.points()), (8, 2));
        let r = check_hopf_algebroid(&x);
        assert!(r.all_pass(), "{r}");
        for h in 0..8 {
            assert_eq!(x.eps_l_c(&x.antipode(&h)), x.eps_r(&h));
        }
    }

    #[test]
    fn one_object_groupoid_is_hopf_algebra() {
        let g = FinGroupoid::from_group(&FinGroup::cyclic(3));
        let x = weakhopf_algebroid(&g);
        assert_eq!(x.base.points(), 1);
        assert!(check_hopf_algebroid(&x).all_pass());
    }

    #[test]
    fn every_mutation_is_caught() {
        for m in mutations() {
            let r = check_hopf_algebroid(&m.model);
            assert!(!r.all_pass(), "{} slipped through", m.name);
            assert!(r.laws.iter().filter_map(|l| l.witness()).count() > 0);
        }
    }

    #[test]
    fn balancing_subspace_dimension() {
        let x = pair_algebroid(&fun_algebra(&points(2)));
        let b = x.balancing(Side::Right).unwrap();
        assert_eq!(16 - b.rank(), 8);
    }
}
