use std::collections::HashMap;

use num_traits::{One, Zero};

use super::Qisg;
use crate::algebra::{functional, FinAlgebra};
use crate::linear::{tensor, BasedSpace, LinMap, Scalar, Vector};
use crate::report::{LawReport, Witness};
use crate::{Error, Result};

/// A monomial `u_{i₁j₁}⋯u_{i_Nj_N}`: cells with distinct rows and
/// distinct columns, sorted.
type Monomial = Vec<(usize, usize)>;

fn monomials(n: usize) -> Vec<Monomial> {
    let mut out = vec![Vec::new()];
    fn grow(n: usize, row: usize, cur: &mut Monomial, used: u32, out: &mut Vec<Monomial>) {
        for i in row..n {
            for j in 0..n {
                if used >> j & 1 == 0 {
                    cur.push((i, j));
                    out.push(cur.clone());
                    grow(n, i + 1, cur, used | 1 << j, out);
                    cur.pop();
                }
            }
        }
    }
    grow(n, 0, &mut Vec::new(), 0, &mut out);
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    out
}

fn label(m: &Monomial) -> String {
    if m.is_empty() {
        return "1".into();
    }
    m.iter().map(|(i, j)| format!("u{}{}", i + 1, j + 1)).collect()
}

/// Normal form of a product: `None` when two factors share a row or a
/// column but differ.
fn multiply(a: &Monomial, b: &Monomial) -> Option<Monomial> {
    let mut cells = a.clone();
    for &c in b {
        if cells.contains(&c) {
            continue;
        }
        if cells.iter().any(|&(i, j)| i == c.0 || j == c.1) {
            return None;
        }
        cells.push(c);
    }
    cells.sort();
    Some(cells)
}

/// Facts the example states besides the axioms.
#[derive(Clone, Debug)]
pub struct HadamardExtras {
    pub report: LawReport,
}

/// `𝕜[u_ij]` modulo `u_ij u_ik − δ_jk u_ij` and `u_ij u_kj − δ_ik u_ij`,
/// with `Δ(u_ij) = Σ_k u_ik ⊗ u_kj`, `S(u_ij) = u_ji`, `ε(u_ij) = δ_ij`.
pub fn hadamard_qisg(n: usize) -> Result<Qisg> {
    if !(1..=3).contains(&n) {
        return Err(Error::SizeBound { what: format!("Hadamard QISG of size {n}"), limit: 3 });
    }
    let basis = monomials(n);
    let index: HashMap<Monomial, usize> = basis.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
    let space = BasedSpace::from_strings(basis.iter().map(label))?;
    let algebra = FinAlgebra::from_products(
        space.clone(),
        |i, j| multiply(&basis[i], &basis[j]).map_or_else(Vector::zero, |m| Vector::basis(index[&m])),
        Some(Vector::basis(index[&Vec::new()])),
    )?;
    let d = basis.len();
    let generator = |i: usize, j: usize| -> Vector {
        (0..n).map(|k| (index[&vec![(i, k)]] * d + index[&vec![(k, j)]], Scalar::one())).collect()
    };
    let one = index[&Vec::new()];
    let sq = tensor(&space, &space);
    let comult = LinMap::from_fn(&space, &sq, |m| {
        basis[m].iter().fold(Vector::basis(one * d + one), |acc, &(i, j)| algebra.tensor_mul(&acc, &generator(i, j)))
    });
    let counit = functional(
        &space,
        &basis.iter().map(|m| if m.iter().all(|(i, j)| i == j) { Scalar::one() } else { Scalar::zero() }).collect::<Vec<_>>(),
    );
    let antipode = LinMap::from_fn(&space, &space, |m| {
        let mut t: Monomial = basis[m].iter().map(|&(i, j)| (j, i)).collect();
        t.sort();
        Vector::basis(index[&t])
    });
    Qisg::new(algebra, comult, Some(counit), antipode)
}

/// The defining relations on generators, `Δ(1) = 1⊗1`, and the failure
/// of the Hopf law `I∗S(u_ij) = ε(u_ij)1` at some generator.
pub fn hadamard_relations_hold(q: &Qisg, n: usize) -> HadamardExtras {
    let a = q.algebra();
    let sp = q.space();
    let gen = |i: usize, j: usize| sp.position_str(&format!("u{}{}", i + 1, j + 1)).expect("generator");
    let mut report = LawReport::new();
    let mut rel = None;
    'rel: for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let checks = [
                    (a.product(gen(i, j), gen(i, k)).clone(), if j == k { Vector::basis(gen(i, j)) } else { Vector::zero() }),
                    (a.product(gen(i, j), gen(k, j)).clone(), if i == k { Vector::basis(gen(i, j)) } else { Vector::zero() }),
                ];
                for (l, r) in checks {
                    if l != r {
                        rel = Some(Witness { at: format!("u{}{}·({},{})", i + 1, j + 1, j + 1, k + 1), lhs: a.render(&l), rhs: a.render(&r) });
                        break 'rel;
                    }
                }
            }
        }
    }
    report.record("relations", rel);
    let one = a.unit().expect("unital");
    let d = a.dim();
    let d1 = q.comult().apply(one);
    let oo = one.tensor(one).map_basis(|&(x, y)| Vector::basis(x * d + y));
    report.record("Δ(1) = 1⊗1", (d1 != oo).then(|| Witness { at: "Δ(1)".into(), lhs: format!("{d1:?}"), rhs: format!("{oo:?}") }));
    let is = q.i_star_s();
    let eps = q.counit().expect("counital");
    let not_hopf = (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).any(|(i, j)| {
        let g = gen(i, j);
        *is.column(g) != one.scaled(&eps.entry(0, g))
    });
    report.record(
        "I∗S ≠ ηε on generators",
        (!not_hopf).then(|| Witness { at: "every u_ij".into(), lhs: "I∗S(u_ij)".into(), rhs: "ε(u_ij)1".into() }),
    );
    HadamardExtras { report }
}
