use std::collections::{BTreeMap, VecDeque};

use num_traits::One;

use super::{grouplike_coalgebra, Qisg};
use crate::algebra::{semigroup_algebra, FinAlgebra};
use crate::group::FinGroup;
use crate::linear::{BasedSpace, LinMap, Scalar, Vector};
use crate::report::{LawReport, Witness};
use crate::semigroup::exel_label;
use crate::{Error, Result};

/// 𝕜G with `Δδ_g = δ_g⊗δ_g`, `S(δ_g) = δ_{g⁻¹}`.
pub fn group_hopf_algebra(g: &FinGroup) -> Result<Qisg> {
    let alg = semigroup_algebra(&g.to_semigroup(), false)?;
    let (delta, eps) = grouplike_coalgebra(alg.space());
    let s = LinMap::from_fn(alg.space(), alg.space(), |j| Vector::basis(g.inv(j)));
    Qisg::new(alg, delta, Some(eps), s)
}

/// Normal form `ε_A[g]` of a word `[g₁]⋯[g_n]`: `A` holds the prefix
/// products, `g` the full product.
fn normal_form(g: &FinGroup, word: &[usize]) -> (u64, usize) {
    let mut acc = g.unit();
    let mut mask = 1u64 << acc;
    for &x in word {
        acc = g.mul(acc, x);
        mask |= 1 << acc;
    }
    (mask, acc)
}

/// H_par(𝕜G) on the normal-form basis, with grouplike Δ and
/// `𝒮([g₁]⋯[g_n]) = [g_n⁻¹]⋯[g₁⁻¹]`.
pub fn partial_group_qisg(g: &FinGroup) -> Result<Qisg> {
    if g.order() > 4 {
        return Err(Error::SizeBound { what: format!("partial group algebra of order {}", g.order()), limit: 4 });
    }
    let mut words: BTreeMap<(u64, usize), Vec<usize>> = BTreeMap::new();
    let mut queue = VecDeque::from([Vec::new()]);
    while let Some(w) = queue.pop_front() {
        let nf = normal_form(g, &w);
        if words.contains_key(&nf) {
            continue;
        }
        words.insert(nf, w.clone());
        for x in 0..g.order() {
            let mut next = w.clone();
            next.push(x);
            queue.push_back(next);
        }
    }
    let e = g.unit();
    let mut basis: Vec<((u64, usize), Vec<usize>)> = words.into_iter().collect();
    basis.sort_by_key(|&((m, h), _)| (h != e, h, m));
    let index: BTreeMap<(u64, usize), usize> = basis.iter().enumerate().map(|(i, (nf, _))| (*nf, i)).collect();
    let space = BasedSpace::from_strings(basis.iter().map(|((m, h), _)| exel_label(g, *m, *h)))?;
    let alg = FinAlgebra::from_products(
        space.clone(),
        |i, j| {
            let w: Vec<usize> = basis[i].1.iter().chain(&basis[j].1).copied().collect();
            Vector::basis(index[&normal_form(g, &w)])
        },
        Some(Vector::basis(index[&normal_form(g, &[])])),
    )?;
    let (delta, eps) = grouplike_coalgebra(&space);
    let s = LinMap::from_fn(&space, &space, |j| {
        let w: Vec<usize> = basis[j].1.iter().rev().map(|&x| g.inv(x)).collect();
        Vector::basis(index[&normal_form(g, &w)])
    });
    Qisg::new(alg, delta, Some(eps), s)
}

/// `δ_g ↦ [g]` into [`partial_group_qisg`].
pub fn canonical_partial_rep(g: &FinGroup, hpar: &Qisg) -> LinMap {
    let kg = BasedSpace::from_strings(g.labels().iter().cloned()).expect("distinct");
    LinMap::from_fn(&kg, hpar.space(), |x| {
        let (m, h) = normal_form(g, &[x]);
        Vector::basis(hpar.space().position_str(&exel_label(g, m, h)).expect("generator present"))
    })
}

/// PR1–PR5 for `π: 𝕜G → B` on all basis pairs, where `k₍₁₎⊗k₍₂₎ = k⊗k`
/// and `S(k) = k⁻¹`.
pub fn check_partial_rep(pi: &LinMap, g: &FinGroup, b: &FinAlgebra) -> Result<LawReport> {
    let n = g.order();
    if pi.domain().dim() != n || pi.codomain().dim() != b.dim() {
        return Err(Error::Shape("π must map 𝕜G → B".into()));
    }
    let p = |x: usize| pi.column(x);
    let m = |x: &Vector, y: &Vector| b.mul(x, y);
    let mut r = LawReport::new();
    let pr1 = match b.unit() {
        Some(u) => (p(g.unit()) != u).then(|| Witness { at: "π(1)".into(), lhs: b.render(p(g.unit())), rhs: b.render(u) }),
        None => Some(Witness { at: "π(1)".into(), lhs: b.render(p(g.unit())), rhs: "no unit in B".into() }),
    };
    r.record("PR1", pr1);
    type Side<'a> = Box<dyn Fn(usize, usize) -> (Vector, Vector) + 'a>;
    let laws: [(&str, Side); 4] = [
        ("PR2", Box::new(|h, k| {
            let ki = g.inv(k);
            (m(&m(p(h), p(k)), p(ki)), m(p(g.mul(h, k)), p(ki)))
        })),
        ("PR3", Box::new(|h, k| {
            let hi = g.inv(h);
            (m(&m(p(h), p(hi)), p(k)), m(p(h), p(g.mul(hi, k))))
        })),
        ("PR4", Box::new(|h, k| {
            let ki = g.inv(k);
            (m(&m(p(h), p(ki)), p(k)), m(p(g.mul(h, ki)), p(k)))
        })),
        ("PR5", Box::new(|h, k| {
            let hi = g.inv(h);
            (m(&m(p(hi), p(h)), p(k)), m(p(hi), p(g.mul(h, k))))
        })),
    ];
    for (name, f) in laws.iter() {
        let w = (0..n).flat_map(|h| (0..n).map(move |k| (h, k))).find_map(|(h, k)| {
            let (l, rr) = f(h, k);
            (l != rr).then(|| Witness { at: format!("({}, {})", g.label(h), g.label(k)), lhs: b.render(&l), rhs: b.render(&rr) })
        });
        r.record(name, w);
    }
    Ok(r)
}

/// `ε(·)1_B`
pub fn trivial_partial_rep(g: &FinGroup, b: &FinAlgebra) -> Result<LinMap> {
    let one = b.unit().ok_or_else(|| Error::Precondition("B must be unital".into()))?;
    let kg = BasedSpace::from_strings(g.labels().iter().cloned())?;
    Ok(LinMap::from_fn(&kg, b.space(), |_| one.scaled(&Scalar::one())))
}
