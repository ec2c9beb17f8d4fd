use std::collections::BTreeMap;

use num_traits::One;

use super::{enumerate_biretractions, validate_biretraction, Biretraction, BrtSemigroup, Rejection};
use crate::algebroid::{Algebroid, FinAlgebroid};
use crate::groupoid::{bisection_star, enumerate_bisections, Bisection, FinGroupoid};
use crate::linear::{int, Scalar, Vector};
use crate::report::{LawReport, Witness};
use crate::{Error, Result};

fn check_shape(x: &FinAlgebroid, g: &FinGroupoid) -> Result<()> {
    let mismatch = || Error::Precondition("algebroid and groupoid do not match".into());
    if x.dim() != g.num_arrows() || x.base.points() != g.num_objects() {
        return Err(mismatch());
    }
    for z in 0..g.num_objects() {
        let s: Vector = (0..g.num_arrows()).filter(|&p| g.src[p] == z).map(|p| (p, Scalar::one())).collect();
        let t: Vector = (0..g.num_arrows()).filter(|&p| g.tgt[p] == z).map(|p| (p, Scalar::one())).collect();
        if x.source(&z) != s || x.target(&z) != t {
            return Err(mismatch());
        }
    }
    Ok(())
}

/// `α_{(u,X)}(δ_p)_x = ⟦x ∈ X⟧⟦p = u(x)⟧`: evaluation at `u(x)`.
pub fn from_bisection(x: &FinAlgebroid, g: &FinGroupoid, u: &Bisection) -> Result<Biretraction<usize>> {
    check_shape(x, g)?;
    let values = (0..g.num_arrows())
        .map(|p| {
            let y = g.src[p];
            (p, if u.value(y) == Some(p) { Vector::basis(y) } else { Vector::zero() })
        })
        .collect();
    Ok(validate_biretraction(x, values)?)
}

/// Domain from the support of `α(1)`, target point from `α∘t`, arrow from the basis.
pub fn reconstruct_bisection(x: &FinAlgebroid, g: &FinGroupoid, alpha: &Biretraction<usize>) -> Result<Bisection> {
    check_shape(x, g)?;
    let one = alpha.apply(&x.one());
    let mut assignment = Vec::new();
    for &y in one.keys() {
        let lam: Vec<usize> = (0..g.num_objects()).filter(|z| alpha.apply(&x.target(z)).get(&y).is_some()).collect();
        let [l] = lam.as_slice() else {
            return Err(Error::Invalid(format!("α∘t does not single out a target at {}", g.objects[y])));
        };
        let arrows: Vec<usize> = (0..g.num_arrows())
            .filter(|&p| g.src[p] == y && g.tgt[p] == *l && alpha.at(&p).get(&y).is_some())
            .collect();
        let [p] = arrows.as_slice() else {
            return Err(Error::Invalid(format!("no unique arrow at {}", g.objects[y])));
        };
        assignment.push((y, *p));
    }
    Bisection::new(g, assignment)
}

#[derive(Clone, Debug)]
pub struct RepfunClassification {
    pub bisections: Vec<Bisection>,
    pub brt: BrtSemigroup<usize>,
    /// `to_brt[i]` is the biretraction of bisection `i`.
    pub to_brt: Vec<usize>,
    pub report: LawReport,
}

/// Bisections against enumerated biretractions, with the bijection certified.
pub fn classify_repfun(x: &FinAlgebroid, g: &FinGroupoid) -> Result<RepfunClassification> {
    let (bis, sg) = enumerate_bisections(g)?;
    let brt = enumerate_biretractions(x)?;
    let mut to_brt = Vec::with_capacity(bis.len());
    for u in &bis {
        let a = from_bisection(x, g, u)?;
        let i = brt.position(&a).ok_or_else(|| Error::Invalid(format!("{} has no enumerated image", u.label(g))))?;
        to_brt.push(i);
    }
    let mut r = LawReport::new();
    let n = bis.len();
    let mut seen: Vec<Option<usize>> = vec![None; brt.size()];
    let mut clash = None;
    for (i, &j) in to_brt.iter().enumerate() {
        if let Some(k) = seen[j] {
            clash.get_or_insert(Witness { at: brt.labels[j].clone(), lhs: bis[k].label(g), rhs: bis[i].label(g) });
        }
        seen[j] = Some(i);
    }
    r.record("injective", clash);
    let missing = seen.iter().position(Option::is_none);
    r.record(
        "onto",
        missing.map(|j| Witness { at: brt.labels[j].clone(), lhs: "no bisection".into(), rhs: "preimage".into() }),
    );
    let mut back = None;
    for j in 0..brt.size() {
        let u = reconstruct_bisection(x, g, &brt.elements[j])?;
        let ok = bis.iter().position(|v| *v == u).is_some_and(|i| to_brt[i] == j);
        if !ok {
            back = Some(Witness { at: brt.labels[j].clone(), lhs: u.label(g), rhs: "round trip".into() });
            break;
        }
    }
    r.record("reconstruction inverts", back);
    let mut prod = None;
    'p: for i in 0..n {
        for j in 0..n {
            let (lhs, rhs) = (brt.table[to_brt[i]][to_brt[j]], to_brt[sg.mul(i, j)]);
            if lhs != rhs {
                prod = Some(Witness {
                    at: format!("{}, {}", bis[i].label(g), bis[j].label(g)),
                    lhs: brt.labels[lhs].clone(),
                    rhs: brt.labels[rhs].clone(),
                });
                break 'p;
            }
        }
    }
    r.record("products to convolutions", prod);
    let id = bis.iter().position(|u| *u == Bisection::identity(g)).expect("identity bisection");
    r.record(
        "unit to ε",
        (Some(to_brt[id]) != brt.unit).then(|| Witness {
            at: "identity".into(),
            lhs: brt.labels[to_brt[id]].clone(),
            rhs: brt.unit.map_or("none".into(), |u| brt.labels[u].clone()),
        }),
    );
    let star_fail = (0..n).find_map(|i| {
        let s = bis.iter().position(|v| *v == bisection_star(g, &bis[i])).expect("closed under star");
        (brt.star[to_brt[i]] != to_brt[s]).then(|| Witness {
            at: bis[i].label(g),
            lhs: brt.labels[brt.star[to_brt[i]]].clone(),
            rhs: brt.labels[to_brt[s]].clone(),
        })
    });
    r.record("star to star", star_fail);
    Ok(RepfunClassification { bisections: bis, brt, to_brt, report: r })
}

/// Rational characters of each isotropy group (values `±1`), or zero, per object.
pub fn f_elements(g: &FinGroupoid) -> Vec<Vec<Option<BTreeMap<usize, Scalar>>>> {
    let per_object: Vec<Vec<Option<BTreeMap<usize, Scalar>>>> = (0..g.num_objects())
        .map(|x| {
            let loops: Vec<usize> = (0..g.num_arrows()).filter(|&a| g.src[a] == x && g.tgt[a] == x).collect();
            let mut out = vec![None];
            for mask in 0..1u64 << loops.len() {
                let chi: BTreeMap<usize, Scalar> =
                    loops.iter().enumerate().map(|(i, &a)| (a, int(if mask >> i & 1 == 1 { -1 } else { 1 }))).collect();
                let hom = loops.iter().all(|&a| {
                    loops.iter().all(|&b| {
                        let c = g.compose(a, b).expect("loops compose");
                        chi[&c] == &chi[&a] * &chi[&b]
                    })
                });
                if hom {
                    out.push(Some(chi));
                }
            }
            out
        })
        .collect();
    let mut tuples: Vec<Vec<Option<BTreeMap<usize, Scalar>>>> = vec![Vec::new()];
    for choices in &per_object {
        tuples = tuples
            .into_iter()
            .flat_map(|t| {
                choices.iter().map(move |c| {
                    let mut t = t.clone();
                    t.push(c.clone());
                    t
                })
            })
            .collect();
    }
    tuples
}

/// `α_φ(δ_g) = φ_i(g)δ_{1_{x_i}}` for loops at `x_i`, zero on non-loops.
pub fn f_map(g: &FinGroupoid, phi: &[Option<BTreeMap<usize, Scalar>>]) -> BTreeMap<usize, Vector> {
    (0..g.num_arrows())
        .map(|a| {
            let (s, t) = (g.src[a], g.tgt[a]);
            let v = match (&phi[s], s == t) {
                (Some(chi), true) => Vector::term(s, chi[&a].clone()),
                _ => Vector::zero(),
            };
            (a, v)
        })
        .collect()
}

#[derive(Clone, Debug)]
pub struct GroupoidClassification {
    pub f_size: usize,
    pub brt: BrtSemigroup<usize>,
    /// First `𝓕` tuple whose map is not a biretraction.
    pub f_rejection: Option<Rejection>,
    pub report: LawReport,
}

/// Compares the enumerated `Brt(𝕜𝒢, A)` with the character tuples `𝓕`.
pub fn classify_groupoid_algebra(x: &FinAlgebroid, g: &FinGroupoid) -> Result<GroupoidClassification> {
    let fs = f_elements(g);
    let brt = enumerate_biretractions(x)?;
    let mut r = LawReport::new();
    let mut f_rejection = None;
    let mut images = Vec::new();
    for phi in &fs {
        match validate_biretraction(x, f_map(g, phi)) {
            Ok(b) => images.push(brt.position(&b)),
            Err(e) => {
                f_rejection.get_or_insert(e);
                images.push(None);
            }
        }
    }
    r.record("𝓕-maps are biretractions", f_rejection.as_ref().map(|e| e.witness.clone()));
    r.record(
        "|Brt| = |𝓕|",
        (brt.size() != fs.len()).then(|| Witness { at: "size".into(), lhs: brt.size().to_string(), rhs: fs.len().to_string() }),
    );
    let mut sorted: Vec<usize> = images.iter().flatten().copied().collect();
    sorted.sort_unstable();
    sorted.dedup();
    r.record(
        "𝓕 → Brt bijective",
        (sorted.len() != fs.len() || sorted.len() != brt.size()).then(|| Witness {
            at: "image".into(),
            lhs: sorted.len().to_string(),
            rhs: fs.len().to_string(),
        }),
    );
    r.record(
        "Brt commutative",
        (!brt.is_commutative()).then(|| Witness { at: "table".into(), lhs: "α∗β".into(), rhs: "β∗α".into() }),
    );
    r.record(
        "idempotents commute",
        brt.noncommuting_idempotents().map(|(a, b)| Witness {
            at: format!("{}, {}", brt.labels[a], brt.labels[b]),
            lhs: brt.labels[brt.table[a][b]].clone(),
            rhs: brt.labels[brt.table[b][a]].clone(),
        }),
    );
    let globals = brt.globals(x);
    let group_fail = globals.iter().find_map(|&a| {
        let closed = globals.iter().all(|&b| globals.contains(&brt.table[a][b]));
        let inv = brt.unit.is_some_and(|u| brt.table[a][brt.star[a]] == u);
        (!(closed && inv)).then(|| Witness { at: brt.labels[a].clone(), lhs: "not invertible".into(), rhs: "group".into() })
    });
    r.record("global elements form an abelian group", if brt.unit.is_none() && !globals.is_empty() {
        Some(Witness { at: "unit".into(), lhs: "none".into(), rhs: "𝟏".into() })
    } else {
        group_fail
    });
    Ok(GroupoidClassification { f_size: fs.len(), brt, f_rejection, report: r })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebroid::{repfun_transitive_algebroid, weakhopf_algebroid};
    use crate::group::FinGroup;
    use crate::groupoid::{disjoint_union, points, product_groupoid};

    #[test]
    fn repfun_bridge_is_iso() {
        let g = product_groupoid(&points(2), &FinGroup::cyclic(2));
        let x = repfun_transitive_algebroid(&points(2), &FinGroup::cyclic(2)).unwrap();
        let c = classify_repfun(&x, &g).unwrap();
        assert_eq!(c.bisections.len(), 17);
        assert_eq!(c.brt.size(), 17);
        assert!(c.report.all_pass(), "{}", c.report);
    }

    #[test]
    fn identity_bisection_is_counit() {
        let g = product_groupoid(&points(2), &FinGroup::cyclic(2));
        let x = repfun_transitive_algebroid(&points(2), &FinGroup::cyclic(2)).unwrap();
        let a = from_bisection(&x, &g, &Bisection::identity(&g)).unwrap();
        assert_eq!(Some(a), crate::biretraction::counit_biretraction(&x));
    }

    #[test]
    fn mismatched_groupoid_rejected() {
        let g = product_groupoid(&points(3), &FinGroup::cyclic(2));
        let x = repfun_transitive_algebroid(&points(2), &FinGroup::cyclic(2)).unwrap();
        assert!(from_bisection(&x, &g, &Bisection::identity(&g)).is_err());
    }

    #[test]
    fn f_map_fails_off_the_bundle() {
        let g = product_groupoid(&points(2), &FinGroup::cyclic(2));
        let x = weakhopf_algebroid(&g);
        let c = classify_groupoid_algebra(&x, &g).unwrap();
        assert_eq!(c.f_size, 9);
        assert_eq!(c.brt.size(), 1);
        let rej = c.f_rejection.expect("non-loop arrows break multiplicativity");
        assert_eq!(rej.law, "multiplicative");
        assert!(!c.report.all_pass());
    }

    #[test]
    fn bundle_matches_f() {
        let z2 = FinGroupoid::from_group(&FinGroup::cyclic(2));
        let g = disjoint_union(&z2, &z2);
        let x = weakhopf_algebroid(&g);
        let c = classify_groupoid_algebra(&x, &g).unwrap();
        assert_eq!(c.f_size, 9);
        assert!(c.report.all_pass(), "{}", c.report);
    }
}
