//! Quantum inverse semigroups: the axiom checker and the standard examples.

mod hadamard;
mod hopf_category;
mod partial;
mod weak_hopf;

pub use hadamard::{hadamard_qisg, hadamard_relations_hold, HadamardExtras};
pub use hopf_category::{hopf_category_alg, trivial_hopf_category, check_hopf_category, FinHopfCategory};
pub use partial::{canonical_partial_rep, check_partial_rep, group_hopf_algebra, partial_group_qisg, trivial_partial_rep};
pub use weak_hopf::{check_hopf_algebra, check_weak_hopf, groupoid_weak_hopf, matrix_weak_hopf, qisg_from_weak_hopf, WeakHopf};

use num_traits::One;

use crate::algebra::{convolve_maps, functional, semigroup_algebra, FinAlgebra, FinCoalgebra};
use crate::linear::{tensor, BasedSpace, LinMap, Scalar, Vector};
use crate::report::{LawReport, Witness};
use crate::semigroup::{is_inverse, FinSemigroup, Inverseness};
use crate::{Error, Result};

/// `(H, Δ, 𝒮)`, with a counit when one is known.
#[derive(Clone, Debug)]
pub struct Qisg {
    algebra: FinAlgebra,
    coalgebra: FinCoalgebra,
    antipode: LinMap,
}

/// Outcome of [`check_qisg`]. Anticomultiplicativity is informational.
#[derive(Clone, Debug)]
pub struct QisgReport {
    pub laws: LawReport,
    pub anticomultiplicative: Option<Witness>,
}

impl QisgReport {
    pub fn all_pass(&self) -> bool {
        self.laws.all_pass()
    }
}

impl Qisg {
    /// Shape checks only; see [`check_qisg`] for the axioms.
    pub fn new(algebra: FinAlgebra, comult: LinMap, counit: Option<LinMap>, antipode: LinMap) -> Result<Self> {
        let coalgebra = FinCoalgebra::unchecked(algebra.space().clone(), comult, counit)?;
        let n = algebra.dim();
        if antipode.domain().dim() != n || antipode.codomain().dim() != n {
            return Err(Error::Shape("pseudo-antipode must map H → H".into()));
        }
        Ok(Qisg { algebra, coalgebra, antipode })
    }

    pub fn algebra(&self) -> &FinAlgebra {
        &self.algebra
    }

    pub fn coalgebra(&self) -> &FinCoalgebra {
        &self.coalgebra
    }

    pub fn comult(&self) -> &LinMap {
        self.coalgebra.comult()
    }

    pub fn counit(&self) -> Option<&LinMap> {
        self.coalgebra.counit()
    }

    pub fn antipode(&self) -> &LinMap {
        &self.antipode
    }

    pub fn space(&self) -> &BasedSpace {
        self.algebra.space()
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn convolve(&self, f: &LinMap, g: &LinMap) -> LinMap {
        convolve_maps(f, g, &self.coalgebra, &self.algebra).expect("endomorphisms of H")
    }

    /// `I ∗ 𝒮`
    pub fn i_star_s(&self) -> LinMap {
        self.convolve(&LinMap::identity(self.space()), &self.antipode)
    }

    /// `𝒮 ∗ I`
    pub fn s_star_i(&self) -> LinMap {
        self.convolve(&self.antipode, &LinMap::identity(self.space()))
    }
}

fn label_pair(q: &Qisg, i: usize, j: usize) -> String {
    format!("({}, {})", q.algebra.label(i), q.algebra.label(j))
}

fn map_failure(q: &Qisg, what: &str, lhs: &LinMap, rhs: &LinMap) -> Option<Witness> {
    let j = lhs.first_difference(rhs)?;
    Some(Witness {
        at: format!("{what} at {}", q.algebra.label(j)),
        lhs: q.algebra.render(lhs.column(j)),
        rhs: q.algebra.render(rhs.column(j)),
    })
}

/// Δ(b_i b_j) against Δ(b_i)Δ(b_j), lowest pair first.
pub fn comult_multiplicative_failure(a: &FinAlgebra, delta: &LinMap) -> Option<Witness> {
    let n = a.dim();
    for i in 0..n {
        for j in 0..n {
            let lhs = delta.apply(a.product(i, j));
            let rhs = a.tensor_mul(delta.column(i), delta.column(j));
            if lhs != rhs {
                return Some(Witness {
                    at: format!("Δ multiplicative at ({}, {})", a.label(i), a.label(j)),
                    lhs: format!("{lhs:?}"),
                    rhs: format!("{rhs:?}"),
                });
            }
        }
    }
    None
}

/// `(𝒮⊗𝒮)∘τ∘Δ` against `Δ∘𝒮`.
pub fn anticomultiplicative_failure(space: &BasedSpace, delta: &LinMap, s: &LinMap) -> Option<Witness> {
    let n = space.dim();
    (0..n).find_map(|j| {
        let lhs = delta.apply(s.column(j));
        let rhs = delta.column(j).map_basis(|&p| {
            let (a, b) = (p / n, p % n);
            s.column(b).bilinear(s.column(a), |&x, &y| Vector::basis(x * n + y))
        });
        (lhs != rhs).then(|| Witness {
            at: format!("Δ∘𝒮 at {}", space.label(j)),
            lhs: format!("{lhs:?}"),
            rhs: format!("{rhs:?}"),
        })
    })
}

/// Every clause of the definition, as exact identities on basis elements.
///
/// Laws: `qisg1`, `qisg2`, `qisg3.i` (𝒮 antimultiplicative), `qisg3.ii`
/// (`I∗𝒮∗I = I`, `𝒮∗I∗𝒮 = 𝒮`), `qisg4`, `unital`, `counital`.
pub fn check_qisg(q: &Qisg) -> QisgReport {
    let a = &q.algebra;
    let n = q.dim();
    let mut laws = LawReport::new();
    laws.record("qisg1", a.associativity_failure());

    let qisg2 = comult_multiplicative_failure(a, q.comult()).or_else(|| {
        q.coalgebra.coassociativity_failure().map(|mut w| {
            w.at = format!("coassociativity at {}", w.at);
            w
        })
    });
    laws.record("qisg2", qisg2);

    let s = &q.antipode;
    let mut anti = None;
    'outer: for i in 0..n {
        for j in 0..n {
            let lhs = s.apply(a.product(i, j));
            let rhs = a.mul(s.column(j), s.column(i));
            if lhs != rhs {
                anti = Some(Witness { at: format!("𝒮(hk) at {}", label_pair(q, i, j)), lhs: a.render(&lhs), rhs: a.render(&rhs) });
                break 'outer;
            }
        }
    }
    laws.record("qisg3.i", anti);

    let id = LinMap::identity(q.space());
    let is = q.i_star_s();
    let si = q.s_star_i();
    let isi = q.convolve(&is, &id);
    let sis = q.convolve(&si, s);
    let conv = map_failure(q, "I∗𝒮∗I", &isi, &id).or_else(|| map_failure(q, "𝒮∗I∗𝒮", &sis, s));
    laws.record("qisg3.ii", conv);

    let mut q4 = None;
    'q4: for h in 0..n {
        for k in 0..n {
            let lhs = a.mul(is.column(h), si.column(k));
            let rhs = a.mul(si.column(k), is.column(h));
            if lhs != rhs {
                q4 = Some(Witness { at: label_pair(q, h, k), lhs: a.render(&lhs), rhs: a.render(&rhs) });
                break 'q4;
            }
        }
    }
    laws.record("qisg4", q4);

    match a.unit() {
        Some(u) => {
            let su = s.apply(u);
            laws.record(
                "unital",
                (su != *u).then(|| Witness { at: "𝒮(1)".into(), lhs: a.render(&su), rhs: a.render(u) }),
            );
        }
        None => laws.skip("unital", "no unit"),
    }
    match q.counit() {
        Some(e) => {
            let es = e.compose(s).expect("shapes");
            let w = q.coalgebra.counit_failure().or_else(|| {
                es.first_difference(e).map(|j| Witness {
                    at: format!("ε∘𝒮 at {}", a.label(j)),
                    lhs: format!("{:?}", es.column(j)),
                    rhs: format!("{:?}", e.column(j)),
                })
            });
            laws.record("counital", w);
        }
        None => laws.skip("counital", "no counit"),
    }
    QisgReport { laws, anticomultiplicative: anticomultiplicative_failure(q.space(), q.comult(), s) }
}

/// `Δ(b) = b⊗b`, `ε(b) = 1` on every basis element.
pub fn grouplike_coalgebra(space: &BasedSpace) -> (LinMap, LinMap) {
    let n = space.dim();
    let sq = tensor(space, space);
    let delta = LinMap::from_fn(space, &sq, |j| Vector::basis(j * n + j));
    let eps = functional(space, &vec![Scalar::one(); n]);
    (delta, eps)
}

/// 𝕜S with grouplike basis and `𝒮(δ_s) = δ_{s*}`.
pub fn qisg_from_inverse_semigroup(s: &FinSemigroup) -> Result<Qisg> {
    let star = match is_inverse(s) {
        Inverseness::Inverse { star } => star,
        _ => return Err(Error::Precondition("semigroup is not inverse".into())),
    };
    let alg = semigroup_algebra(s, false)?;
    let (delta, eps) = grouplike_coalgebra(alg.space());
    let anti = LinMap::from_fn(alg.space(), alg.space(), |j| Vector::basis(star[j]));
    Qisg::new(alg, delta, Some(eps), anti)
}

/// 𝕜S with grouplike basis and an arbitrary basis permutation as 𝒮,
/// without checking that `S` is inverse.
pub fn grouplike_qisg(s: &FinSemigroup, antipode: &[usize]) -> Result<Qisg> {
    let alg = semigroup_algebra(s, false)?;
    if antipode.len() != alg.dim() || antipode.iter().any(|&k| k >= alg.dim()) {
        return Err(Error::DimensionMismatch { expected: alg.dim(), found: antipode.len() });
    }
    let (delta, eps) = grouplike_coalgebra(alg.space());
    let anti = LinMap::from_fn(alg.space(), alg.space(), |j| Vector::basis(antipode[j]));
    Qisg::new(alg, delta, Some(eps), anti)
}

/// Same structure constants, counit and antipode, basis matched by label.
pub fn same_structure(p: &Qisg, q: &Qisg) -> Option<Witness> {
    if p.dim() != q.dim() {
        return Some(Witness { at: "dimension".into(), lhs: p.dim().to_string(), rhs: q.dim().to_string() });
    }
    let n = p.dim();
    let mut to_q = Vec::with_capacity(n);
    for i in 0..n {
        match q.space().position(p.algebra.label(i)) {
            Some(k) => to_q.push(k),
            None => {
                return Some(Witness { at: "basis".into(), lhs: p.algebra.label(i).to_string(), rhs: "missing".into() })
            }
        }
    }
    let carry = |v: &Vector| v.relabel(|&k| to_q[k]);
    let carry2 = |v: &Vector| v.relabel(|&k| to_q[k / n] * n + to_q[k % n]);
    for i in 0..n {
        for j in 0..n {
            let l = carry(p.algebra.product(i, j));
            let r = q.algebra.product(to_q[i], to_q[j]);
            if l != *r {
                return Some(Witness { at: format!("product {}", label_pair(p, i, j)), lhs: format!("{l:?}"), rhs: format!("{r:?}") });
            }
        }
        let checks = [
            ("Δ", carry2(p.comult().column(i)), q.comult().column(to_q[i]).clone()),
            ("𝒮", carry(p.antipode.column(i)), q.antipode.column(to_q[i]).clone()),
        ];
        for (what, l, r) in checks {
            if l != r {
                return Some(Witness { at: format!("{what} at {}", p.algebra.label(i)), lhs: format!("{l:?}"), rhs: format!("{r:?}") });
            }
        }
        let ep = p.counit().map(|e| e.column(i).clone());
        let eq = q.counit().map(|e| e.column(to_q[i]).clone());
        if ep != eq {
            return Some(Witness { at: format!("ε at {}", p.algebra.label(i)), lhs: format!("{ep:?}"), rhs: format!("{eq:?}") });
        }
    }
    let (up, uq) = (p.algebra.unit().map(carry), q.algebra.unit().cloned());
    (up != uq).then(|| Witness { at: "unit".into(), lhs: format!("{up:?}"), rhs: format!("{uq:?}") })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::FinGroup;
    use crate::semigroup::symmetric_inverse_monoid;

    #[test]
    fn rook_monoid_two() {
        let (s, _) = symmetric_inverse_monoid(2).unwrap();
        let r = check_qisg(&qisg_from_inverse_semigroup(&s).unwrap());
        assert!(r.all_pass(), "{}", r.laws);
        assert!(r.anticomultiplicative.is_none());
    }

    #[test]
    fn left_zero_with_identity_antipode() {
        let s = FinSemigroup::left_zero(2);
        let q = grouplike_qisg(&s, &[0, 1]).unwrap();
        let r = check_qisg(&q);
        assert!(r.laws.passed("qisg3.ii"));
        let w = r.laws.get("qisg4").unwrap().witness().unwrap();
        assert_eq!(w.at, "(x, y)");
        assert_eq!((w.lhs.as_str(), w.rhs.as_str()), ("x", "y"));
        assert!(!r.laws.passed("qisg3.i"));
        assert!(qisg_from_inverse_semigroup(&s).is_err());
    }

    #[test]
    fn z2_is_hopf() {
        let g = FinGroup::cyclic(2);
        let q = qisg_from_inverse_semigroup(&g.to_semigroup()).unwrap();
        assert!(check_qisg(&q).all_pass());
        let is = q.i_star_s();
        for j in 0..2 {
            assert_eq!(is.column(j), &Vector::basis(0));
        }
    }
}
