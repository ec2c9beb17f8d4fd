//! Seeded spot checks on random rational combinations. These complement the
//! exhaustive basis checks: they exercise the bilinear extensions.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use qisg_core::algebroid::{Algebroid, AlgebroidExt};
use qisg_core::linear::{ratio, Comb, Vector};
use qisg_core::qisg::Qisg;
use qisg_core::report::Witness;
use qisg_core::semigroup::FinSemigroup;

fn combination<K: Ord + Clone>(rng: &mut ChaCha8Rng, basis: &[K]) -> Comb<K> {
    let mut v = Comb::zero();
    for _ in 0..3 {
        let k = basis[rng.gen_range(0..basis.len())].clone();
        v.add_term(k, ratio(rng.gen_range(-4..=4), rng.gen_range(1..=3)));
    }
    v
}

/// `Δ(xy) = Δ(x)Δ(y)` and `𝒮(xy) = 𝒮(y)𝒮(x)` on random pairs.
pub fn qisg(q: &Qisg, seed: u64, samples: usize) -> Vec<(&'static str, Option<Witness>)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let a = q.algebra();
    let basis: Vec<usize> = (0..q.dim()).collect();
    let (mut delta, mut anti) = (None, None);
    for i in 0..samples {
        let (x, y): (Vector, Vector) = (combination(&mut rng, &basis), combination(&mut rng, &basis));
        let xy = a.mul(&x, &y);
        if delta.is_none() {
            let lhs = q.comult().apply(&xy);
            let rhs = a.tensor_mul(&q.comult().apply(&x), &q.comult().apply(&y));
            if lhs != rhs {
                delta = Some(Witness { at: format!("sample {i}"), lhs: format!("{lhs:?}"), rhs: format!("{rhs:?}") });
            }
        }
        if anti.is_none() {
            let s = q.antipode();
            let lhs = s.apply(&xy);
            let rhs = a.mul(&s.apply(&y), &s.apply(&x));
            if lhs != rhs {
                anti = Some(Witness {
                    at: format!("sample {i}: x = {}, y = {}", a.render(&x), a.render(&y)),
                    lhs: a.render(&lhs),
                    rhs: a.render(&rhs),
                });
            }
        }
    }
    vec![("sampled Δ(xy) = Δ(x)Δ(y)", delta), ("sampled 𝒮(xy) = 𝒮(y)𝒮(x)", anti)]
}

pub fn semigroup(s: &FinSemigroup, seed: u64, samples: usize) -> Option<Witness> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = s.size();
    (0..samples).find_map(|_| {
        let (a, b, c) = (rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n));
        let (l, r) = (s.mul(s.mul(a, b), c), s.mul(a, s.mul(b, c)));
        (l != r).then(|| Witness {
            at: format!("({}, {}, {})", s.label(a), s.label(b), s.label(c)),
            lhs: s.label(l).to_string(),
            rhs: s.label(r).to_string(),
        })
    })
}

/// `(xy)z = x(yz)` in the total algebra, on combinations of window keys.
pub fn algebroid<M: Algebroid>(m: &M, seed: u64, samples: usize) -> Option<Witness> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let basis = m.basis();
    if basis.is_empty() {
        return None;
    }
    (0..samples).find_map(|i| {
        let (x, y, z) = (combination(&mut rng, &basis), combination(&mut rng, &basis), combination(&mut rng, &basis));
        let l = m.mul_c(&m.mul_c(&x, &y), &z);
        let r = m.mul_c(&x, &m.mul_c(&y, &z));
        (l != r).then(|| Witness { at: format!("sample {i}"), lhs: m.render(&l), rhs: m.render(&r) })
    })
}
