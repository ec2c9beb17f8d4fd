use num_traits::One;

use super::{anticomultiplicative_failure, check_qisg, comult_multiplicative_failure, Qisg};
use crate::algebra::{convolve_maps, functional, FinAlgebra, FinCoalgebra};
use crate::linear::{tensor, BasedSpace, Label, LinMap, Scalar, Vector};
use crate::report::{LawReport, Witness};
use crate::{Error, Result};

/// Hopf 𝕜-category over a finite object set. Components are indexed
/// `x·n + y`, multiplications `(x·n + y)·n + z`.
#[derive(Clone, Debug)]
pub struct FinHopfCategory {
    pub objects: Vec<String>,
    /// `H_{x,y}`
    pub components: Vec<FinCoalgebra>,
    /// `μ_{x,y,z}: H_{x,y} ⊗ H_{y,z} → H_{x,z}`
    pub mult: Vec<LinMap>,
    /// `η_x(1) ∈ H_{x,x}`
    pub units: Vec<Vector>,
    /// `S_{x,y}: H_{x,y} → H_{y,x}`
    pub antipodes: Vec<LinMap>,
}

/// Every `H_{x,y} = 𝕜` with the trivial coalgebra, field multiplication,
/// and identity antipodes.
pub fn trivial_hopf_category(n: usize) -> FinHopfCategory {
    let k = BasedSpace::from_strings(["1"]).expect("one label");
    let kk = tensor(&k, &k);
    let comp = FinCoalgebra::new(k.clone(), LinMap::from_fn(&k, &kk, |_| Vector::basis(0)), Some(functional(&k, &[Scalar::one()])))
        .expect("trivial coalgebra");
    FinHopfCategory {
        objects: (1..=n).map(|i| i.to_string()).collect(),
        components: vec![comp; n * n],
        mult: vec![LinMap::from_fn(&kk, &k, |_| Vector::basis(0)); n * n * n],
        units: vec![Vector::basis(0); n],
        antipodes: vec![LinMap::identity(&k); n * n],
    }
}

struct Assembled {
    algebra: FinAlgebra,
    comult: LinMap,
    counit: LinMap,
    antipode: LinMap,
    /// `η_x(1)` in the direct sum.
    local_units: Vec<Vector>,
    /// component `(x, y)` of each basis element
    owner: Vec<(usize, usize)>,
}

fn assemble(c: &FinHopfCategory) -> Result<Assembled> {
    let n = c.objects.len();
    if n == 0 {
        return Err(Error::Invalid("no objects".into()));
    }
    if c.components.len() != n * n || c.mult.len() != n * n * n || c.units.len() != n || c.antipodes.len() != n * n {
        return Err(Error::Shape("component counts must be n², n³, n, n²".into()));
    }
    let dims: Vec<usize> = c.components.iter().map(FinCoalgebra::dim).collect();
    let mut offset = vec![0; n * n + 1];
    for i in 0..n * n {
        offset[i + 1] = offset[i] + dims[i];
    }
    let total = offset[n * n];
    let mut labels = Vec::with_capacity(total);
    let mut owner = Vec::with_capacity(total);
    for x in 0..n {
        for y in 0..n {
            for l in c.components[x * n + y].space().labels() {
                labels.push(Label::Atom(format!("{l}[{},{}]", c.objects[x], c.objects[y])));
                owner.push((x, y));
            }
        }
    }
    let space = BasedSpace::new(labels)?;
    let local = |comp: usize, j: usize| j - offset[comp];
    let sq = tensor(&space, &space);
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let m = &c.mult[(x * n + y) * n + z];
                if m.domain().dim() != dims[x * n + y] * dims[y * n + z] || m.codomain().dim() != dims[x * n + z] {
                    return Err(Error::Shape(format!("μ_{{{x},{y},{z}}} has the wrong shape")));
                }
            }
            let s = &c.antipodes[x * n + y];
            if s.domain().dim() != dims[x * n + y] || s.codomain().dim() != dims[y * n + x] {
                return Err(Error::Shape(format!("S_{{{x},{y}}} has the wrong shape")));
            }
        }
    }
    let mult = LinMap::from_fn(&sq, &space, |p| {
        let (i, j) = (p / total, p % total);
        let ((x, y), (w, z)) = (owner[i], owner[j]);
        if y != w {
            return Vector::zero();
        }
        let (ci, cj) = (x * n + y, y * n + z);
        let col = local(ci, i) * dims[cj] + local(cj, j);
        c.mult[(x * n + y) * n + z].column(col).relabel(|&k| offset[x * n + z] + k)
    });
    let local_units: Vec<Vector> = (0..n).map(|x| c.units[x].relabel(|&k| offset[x * n + x] + k)).collect();
    let unit = local_units.iter().fold(Vector::zero(), |acc, u| &acc + u);
    let algebra = FinAlgebra::unchecked(space.clone(), mult, Some(unit))?;
    let comult = LinMap::from_fn(&space, &sq, |j| {
        let ci = owner[j].0 * n + owner[j].1;
        let d = dims[ci];
        c.components[ci].coproduct(local(ci, j)).relabel(|&p| (offset[ci] + p / d) * total + offset[ci] + p % d)
    });
    let counit = LinMap::from_fn(&space, &BasedSpace::field(), |j| {
        let ci = owner[j].0 * n + owner[j].1;
        c.components[ci].counit().map_or_else(Vector::zero, |e| e.column(local(ci, j)).clone())
    });
    let antipode = LinMap::from_fn(&space, &space, |j| {
        let (x, y) = owner[j];
        c.antipodes[x * n + y].column(local(x * n + y, j)).relabel(|&k| offset[y * n + x] + k)
    });
    Ok(Assembled { algebra, comult, counit, antipode, local_units, owner })
}

/// Enriched-category, compatibility and antipode laws, checked on the
/// direct sum.
///
/// The antipode laws used are `h₍₁₎S(h₍₂₎) = ε(h)η_x(1)` and
/// `S(h₍₁₎)h₍₂₎ = ε(h)η_y(1)` for `h ∈ H_{x,y}`.
pub fn check_hopf_category(c: &FinHopfCategory) -> Result<LawReport> {
    let a = assemble(c)?;
    let alg = &a.algebra;
    let n = alg.dim();
    let mut r = LawReport::new();
    r.record("associativity", alg.associativity_failure());
    r.record("identity", alg.unit_failure());
    let coalg = FinCoalgebra::unchecked(alg.space().clone(), a.comult.clone(), Some(a.counit.clone()))?;
    r.record("coalgebras", coalg.coassociativity_failure().or_else(|| coalg.counit_failure()));
    r.record("Δ multiplicative", comult_multiplicative_failure(alg, &a.comult));
    let eps = |v: &Vector| a.counit.apply(v).coeff(&0);
    r.record(
        "Δ unital",
        a.local_units.iter().enumerate().find_map(|(x, u)| {
            let l = a.comult.apply(u);
            let rr = u.tensor(u).map_basis(|&(i, j)| Vector::basis(i * n + j));
            (l != rr).then(|| Witness { at: format!("η_{}", c.objects[x]), lhs: format!("{l:?}"), rhs: format!("{rr:?}") })
        }),
    );
    let mut em = None;
    'em: for i in 0..n {
        for j in 0..n {
            let l = eps(alg.product(i, j));
            let rr = if a.owner[i].1 == a.owner[j].0 { eps(&Vector::basis(i)) * eps(&Vector::basis(j)) } else { l.clone() };
            if l != rr {
                em = Some(Witness { at: format!("({}, {})", alg.label(i), alg.label(j)), lhs: l.to_string(), rhs: rr.to_string() });
                break 'em;
            }
        }
    }
    r.record("ε multiplicative", em);
    r.record(
        "ε unital",
        a.local_units.iter().enumerate().find_map(|(x, u)| {
            let v = eps(u);
            (!v.is_one()).then(|| Witness { at: format!("η_{}", c.objects[x]), lhs: v.to_string(), rhs: "1".into() })
        }),
    );
    let id = LinMap::identity(alg.space());
    let is = convolve_maps(&id, &a.antipode, &coalg, alg)?;
    let si = convolve_maps(&a.antipode, &id, &coalg, alg)?;
    for (name, map, side) in [("antipode left", &is, 0), ("antipode right", &si, 1)] {
        let w = (0..n).find_map(|j| {
            let (x, y) = a.owner[j];
            let unit = &a.local_units[if side == 0 { x } else { y }];
            let expected = unit.scaled(&eps(&Vector::basis(j)));
            (map.column(j) != &expected).then(|| Witness {
                at: alg.label(j).to_string(),
                lhs: alg.render(map.column(j)),
                rhs: alg.render(&expected),
            })
        });
        r.record(name, w);
    }
    let mut anti = None;
    'anti: for i in 0..n {
        for j in 0..n {
            let l = a.antipode.apply(alg.product(i, j));
            let rr = alg.mul(a.antipode.column(j), a.antipode.column(i));
            if l != rr {
                anti = Some(Witness { at: format!("({}, {})", alg.label(i), alg.label(j)), lhs: alg.render(&l), rhs: alg.render(&rr) });
                break 'anti;
            }
        }
    }
    r.record("S antimultiplicative", anti);
    r.record("S anticomultiplicative", anticomultiplicative_failure(alg.space(), &a.comult, &a.antipode));
    Ok(r)
}

/// `alg(H) = ⊕ H_{x,y}` with local units `η_x(1)`.
pub fn hopf_category_alg(c: &FinHopfCategory) -> Result<Qisg> {
    let report = check_hopf_category(c)?;
    if let Some(law) = report.laws.iter().find(|l| !l.passed()) {
        return Err(Error::Invalid(format!("Hopf category law {} fails {}", law.name, law.witness().expect("failed"))));
    }
    let a = assemble(c)?;
    let algebra = a.algebra.with_local_units(a.local_units)?;
    let q = Qisg::new(algebra, a.comult, Some(a.counit), a.antipode)?;
    debug_assert!(check_qisg(&q).all_pass());
    Ok(q)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qisg::{matrix_weak_hopf, qisg_from_weak_hopf};

    #[test]
    fn trivial_category_is_matrices() {
        for n in 2..=3 {
            let q = hopf_category_alg(&trivial_hopf_category(n)).unwrap();
            assert_eq!(q.dim(), n * n);
            assert_eq!(q.algebra().local_units().unwrap().len(), n);
            let m = qisg_from_weak_hopf(&matrix_weak_hopf(n)).unwrap();
            for i in 0..n * n {
                for j in 0..n * n {
                    assert_eq!(q.algebra().product(i, j), m.algebra().product(i, j));
                }
                assert_eq!(q.comult().column(i), m.comult().column(i));
                assert_eq!(q.antipode().column(i), m.antipode().column(i));
            }
        }
    }

    #[test]
    fn broken_antipode_is_caught() {
        let mut c = trivial_hopf_category(2);
        c.antipodes[1] = c.antipodes[1].scaled(&crate::linear::int(2));
        let r = check_hopf_category(&c).unwrap();
        assert!(!r.passed("antipode left"));
        assert!(hopf_category_alg(&c).is_err());
    }
}
