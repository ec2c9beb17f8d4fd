use num_traits::{One, Zero};

use super::{check_qisg, comult_multiplicative_failure, Qisg};
use crate::algebra::{functional, groupoid_algebra, matrix_algebra, unit_counit, FinAlgebra, FinCoalgebra};
use crate::groupoid::FinGroupoid;
use crate::linear::{tensor, LinMap, Scalar, Vector};
use crate::report::{LawReport, Witness};
use crate::{Error, Result};

/// Weak Hopf algebra: unital algebra, counital coalgebra, antipode.
#[derive(Clone, Debug)]
pub struct WeakHopf {
    pub algebra: FinAlgebra,
    pub coalgebra: FinCoalgebra,
    pub antipode: LinMap,
}

/// Product in `H^{⊗k}`, factors encoded base `n`.
pub(crate) fn power_mul(a: &FinAlgebra, k: usize, x: &Vector, y: &Vector) -> Vector {
    let n = a.dim();
    x.bilinear(y, |&p, &q| {
        let mut out = Vector::basis(0);
        let (mut p, mut q) = (p, q);
        let mut digits = Vec::with_capacity(k);
        for _ in 0..k {
            digits.push((p % n, q % n));
            p /= n;
            q /= n;
        }
        for &(i, j) in digits.iter().rev() {
            let f = a.product(i, j);
            out = out.bilinear(f, |&acc, &b| Vector::basis(acc * n + b));
        }
        out
    })
}

fn counit_value(e: &LinMap, v: &Vector) -> Scalar {
    e.apply(v).coeff(&0)
}

impl WeakHopf {
    pub fn new(algebra: FinAlgebra, comult: LinMap, counit: LinMap, antipode: LinMap) -> Result<Self> {
        if algebra.unit().is_none() {
            return Err(Error::Precondition("weak Hopf algebras are unital".into()));
        }
        let coalgebra = FinCoalgebra::unchecked(algebra.space().clone(), comult, Some(counit))?;
        Ok(WeakHopf { algebra, coalgebra, antipode })
    }

    pub fn unit(&self) -> &Vector {
        self.algebra.unit().expect("unital")
    }

    pub fn counit(&self) -> &LinMap {
        self.coalgebra.counit().expect("counital")
    }

    pub fn delta_one(&self) -> Vector {
        self.coalgebra.comult().apply(self.unit())
    }

    /// `ε_t(h) = ε(1₍₁₎h)1₍₂₎`
    pub fn eps_t(&self, h: &Vector) -> Vector {
        let n = self.algebra.dim();
        self.delta_one().map_basis(|&p| {
            let c = counit_value(self.counit(), &self.algebra.mul(&Vector::basis(p / n), h));
            Vector::basis(p % n).scaled(&c)
        })
    }

    /// `ε_s(h) = 1₍₁₎ε(h1₍₂₎)`
    pub fn eps_s(&self, h: &Vector) -> Vector {
        let n = self.algebra.dim();
        self.delta_one().map_basis(|&p| {
            let c = counit_value(self.counit(), &self.algebra.mul(h, &Vector::basis(p % n)));
            Vector::basis(p / n).scaled(&c)
        })
    }
}

/// The weak bialgebra and antipode axioms, on basis elements.
pub fn check_weak_hopf(w: &WeakHopf) -> LawReport {
    let a = &w.algebra;
    let c = &w.coalgebra;
    let s = &w.antipode;
    let n = a.dim();
    let mut r = LawReport::new();
    r.record("algebra", a.associativity_failure().or_else(|| a.unit_failure()));
    r.record("coalgebra", c.coassociativity_failure().or_else(|| c.counit_failure()));
    r.record("Δ multiplicative", comult_multiplicative_failure(a, c.comult()));

    let d1 = w.delta_one();
    let one = w.unit();
    let d1_one = d1.tensor(one).map_basis(|&(p, u)| Vector::basis(p * n + u));
    let one_d1 = one.tensor(&d1).map_basis(|&(u, p)| Vector::basis(u * n * n + p));
    let lhs = power_mul(a, 3, &d1_one, &one_d1);
    let mid = power_mul(a, 3, &one_d1, &d1_one);
    let rhs = d1.map_basis(|&p| c.coproduct(p / n).relabel(|&q| q * n + p % n));
    r.record(
        "weak unit",
        (lhs != rhs || mid != rhs).then(|| Witness {
            at: "Δ(1)".into(),
            lhs: format!("{lhs:?} / {mid:?}"),
            rhs: format!("{rhs:?}"),
        }),
    );

    let eps = w.counit();
    let mut weak_counit = None;
    'wc: for h in 0..n {
        for k in 0..n {
            let hk = a.product(h, k);
            for l in 0..n {
                let lhs = counit_value(eps, &a.mul(hk, &Vector::basis(l)));
                let mut m1 = Scalar::zero();
                let mut m2 = Scalar::zero();
                for (&p, coef) in c.coproduct(k).terms() {
                    let (k1, k2) = (p / n, p % n);
                    let e = |x: usize, y: usize| counit_value(eps, a.product(x, y));
                    m1 += coef * e(h, k1) * e(k2, l);
                    m2 += coef * e(h, k2) * e(k1, l);
                }
                if lhs != m1 || lhs != m2 {
                    weak_counit = Some(Witness {
                        at: format!("({}, {}, {})", a.label(h), a.label(k), a.label(l)),
                        lhs: lhs.to_string(),
                        rhs: format!("{m1} / {m2}"),
                    });
                    break 'wc;
                }
            }
        }
    }
    r.record("weak counit", weak_counit);

    let id = LinMap::identity(a.space());
    let conv = |f: &LinMap, g: &LinMap| crate::algebra::convolve_maps(f, g, c, a).expect("shapes");
    let is = conv(&id, s);
    let si = conv(s, &id);
    let sis = conv(&si, s);
    let mut check = |name: &str, f: &dyn Fn(usize) -> (Vector, Vector)| {
        let w = (0..n).find_map(|j| {
            let (l, rr) = f(j);
            (l != rr).then(|| Witness { at: a.label(j).to_string(), lhs: a.render(&l), rhs: a.render(&rr) })
        });
        r.record(name, w);
    };
    check("h₍₁₎S(h₍₂₎) = ε_t(h)", &|j| (is.column(j).clone(), w.eps_t(&Vector::basis(j))));
    check("S(h₍₁₎)h₍₂₎ = ε_s(h)", &|j| (si.column(j).clone(), w.eps_s(&Vector::basis(j))));
    check("S(h₍₁₎)h₍₂₎S(h₍₃₎) = S(h)", &|j| (sis.column(j).clone(), s.column(j).clone()));
    r
}

/// The stronger laws of a Hopf algebra: `Δ(1) = 1⊗1`, ε multiplicative,
/// and `I∗S = S∗I = ηε`.
pub fn check_hopf_algebra(w: &WeakHopf) -> LawReport {
    let a = &w.algebra;
    let n = a.dim();
    let mut r = LawReport::new();
    let one = w.unit();
    let d1 = w.delta_one();
    let oo = one.tensor(one).map_basis(|&(x, y)| Vector::basis(x * n + y));
    r.record("Δ(1) = 1⊗1", (d1 != oo).then(|| Witness { at: "Δ(1)".into(), lhs: format!("{d1:?}"), rhs: format!("{oo:?}") }));
    let eps = w.counit();
    let mut em = None;
    'em: for i in 0..n {
        for j in 0..n {
            let l = counit_value(eps, a.product(i, j));
            let rr = eps.entry(0, i) * eps.entry(0, j);
            if l != rr {
                em = Some(Witness { at: format!("({}, {})", a.label(i), a.label(j)), lhs: l.to_string(), rhs: rr.to_string() });
                break 'em;
            }
        }
    }
    r.record("ε multiplicative", em);
    let ue = unit_counit(&w.coalgebra, a).expect("unital and counital");
    let is = crate::algebra::convolve_maps(&LinMap::identity(a.space()), &w.antipode, &w.coalgebra, a).expect("shapes");
    r.record(
        "I∗S = ηε",
        is.first_difference(&ue).map(|j| Witness {
            at: a.label(j).to_string(),
            lhs: a.render(is.column(j)),
            rhs: a.render(ue.column(j)),
        }),
    );
    r
}

/// Validates the weak Hopf axioms, then reuses Δ, ε and S.
pub fn qisg_from_weak_hopf(w: &WeakHopf) -> Result<Qisg> {
    let report = check_weak_hopf(w);
    if let Some(law) = report.laws.iter().find(|l| !l.passed()) {
        return Err(Error::Invalid(format!("weak Hopf axiom {} fails {}", law.name, law.witness().expect("failed"))));
    }
    let q = Qisg::new(w.algebra.clone(), w.coalgebra.comult().clone(), Some(w.counit().clone()), w.antipode.clone())?;
    debug_assert!(check_qisg(&q).all_pass());
    Ok(q)
}

fn grouplike_weak_hopf(algebra: FinAlgebra, antipode: impl Fn(usize) -> usize) -> WeakHopf {
    let n = algebra.dim();
    let sq = tensor(algebra.space(), algebra.space());
    let delta = LinMap::from_fn(algebra.space(), &sq, |j| Vector::basis(j * n + j));
    let eps = functional(algebra.space(), &vec![Scalar::one(); n]);
    let s = LinMap::from_fn(algebra.space(), algebra.space(), |j| Vector::basis(antipode(j)));
    WeakHopf::new(algebra, delta, eps, s).expect("unital")
}

/// `M_n` with `Δ(E_ij) = E_ij⊗E_ij`, `ε(E_ij) = 1`, `S(E_ij) = E_ji`.
pub fn matrix_weak_hopf(n: usize) -> WeakHopf {
    grouplike_weak_hopf(matrix_algebra(n), |p| (p % n) * n + p / n)
}

/// 𝕜𝒢 with grouplike arrows and `S(δ_g) = δ_{g⁻¹}`.
pub fn groupoid_weak_hopf(g: &FinGroupoid) -> WeakHopf {
    grouplike_weak_hopf(groupoid_algebra(g), |a| g.inverse[a])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groupoid::pair_groupoid;

    #[test]
    fn m2_is_weak_not_hopf() {
        let w = matrix_weak_hopf(2);
        assert!(check_weak_hopf(&w).all_pass(), "{}", check_weak_hopf(&w));
        let h = check_hopf_algebra(&w);
        assert!(!h.passed("Δ(1) = 1⊗1"));
        let q = qisg_from_weak_hopf(&w).unwrap();
        // I∗S(E_12) = E_11
        assert_eq!(q.i_star_s().column(1), &Vector::basis(0));
    }

    #[test]
    fn pair_groupoid_weak_hopf() {
        let w = groupoid_weak_hopf(&pair_groupoid(2));
        assert!(check_weak_hopf(&w).all_pass());
        // ε_t(δ_g) = δ_{1_{t(g)}}
        let g = pair_groupoid(2);
        for a in 0..4 {
            assert_eq!(w.eps_t(&Vector::basis(a)), Vector::basis(g.units[g.tgt[a]]));
        }
    }
}
