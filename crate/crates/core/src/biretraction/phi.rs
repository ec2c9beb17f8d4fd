use std::collections::BTreeMap;

use num_traits::{One, Zero};

use super::{validate_biretraction, Biretraction};
use crate::algebra::CommSplitAlgebra;
use crate::algebroid::{Algebroid, FinAlgebroid, LaurentAlgebroid};
use crate::linear::{solve, Echelon, LinMap, Scalar, Vector};
use crate::semigroup::PartialBijection;
use crate::{Error, Result};

/// `[φ, e]`: an idempotent `e` and a multiplicative `φ` with `φ|_{Ae}` bijective
/// onto `Aφ(e)`. Only `φ|_{Ae}` matters, so `φ` is stored as zero off `Ae`.
#[derive(Clone, Debug, PartialEq)]
pub struct PhiData {
    pub phi: LinMap,
    pub e: Vector,
}

impl PhiData {
    pub fn new(a: &CommSplitAlgebra, phi: LinMap, e: Vector) -> Result<Self> {
        let n = a.points();
        if phi.domain().dim() != n || phi.codomain().dim() != n {
            return Err(Error::DimensionMismatch { expected: n, found: phi.domain().dim() });
        }
        if !a.is_idempotent(&e) {
            return Err(Error::Precondition(format!("{} is not idempotent", a.algebra().render(&e))));
        }
        let dom: Vec<usize> = e.keys().copied().collect();
        for &x in &dom {
            for &y in &dom {
                let lhs = if x == y { phi.column(x).clone() } else { Vector::zero() };
                if lhs != a.mul(phi.column(x), phi.column(y)) {
                    return Err(Error::Precondition("φ is not multiplicative on Ae".into()));
                }
            }
        }
        let cols: Vec<&Vector> = dom.iter().map(|&x| phi.column(x)).collect();
        let image = phi.apply(&e);
        let rank = Echelon::from_vectors(cols.iter().copied()).rank();
        if rank != dom.len() || rank != image.len() || !a.is_idempotent(&image) {
            return Err(Error::Precondition("φ|_{Ae} is not a bijection onto Aφ(e)".into()));
        }
        let kept = LinMap::from_fn(phi.domain(), phi.codomain(), |x| {
            if e.get(&x).is_some() {
                phi.column(x).clone()
            } else {
                Vector::zero()
            }
        });
        Ok(PhiData { phi: kept, e })
    }

    /// `φ(χ_x) = χ_{σ(x)}` on the domain of `σ`, `e = χ_{dom σ}`.
    pub fn from_partial(a: &CommSplitAlgebra, sigma: &PartialBijection) -> Result<Self> {
        let sp = a.algebra().space();
        let phi = LinMap::from_fn(sp, sp, |x| sigma.apply(x + 1).map_or_else(Vector::zero, |y| Vector::basis(y - 1)));
        let e = sigma.domain().into_iter().map(|x| (x - 1, Scalar::one())).collect();
        PhiData::new(a, phi, e)
    }

    pub fn image(&self) -> Vector {
        self.phi.apply(&self.e)
    }

    /// `(φ|_{Ae})⁻¹(y)` for `y ∈ Aφ(e)`.
    pub fn inverse_apply(&self, y: &Vector) -> Option<Vector> {
        let dom: Vec<usize> = self.e.keys().copied().collect();
        let cols: Vec<Vector> = dom.iter().map(|&x| self.phi.column(x).clone()).collect();
        solve(&cols, y).map(|c| c.relabel(|&j| dom[j]))
    }

    /// `[φ, e][ψ, f] = [φ∘ψ, ψ⁻¹(eψ(f))]`.
    pub fn product(&self, other: &PhiData, a: &CommSplitAlgebra) -> Result<PhiData> {
        let phi = self.phi.compose(&other.phi)?;
        let y = a.mul(&self.e, &other.image());
        let e = other.inverse_apply(&y).ok_or_else(|| Error::Invalid("ψ⁻¹ undefined".into()))?;
        PhiData::new(a, phi, e)
    }

    /// `[φ⁻¹, φ(e)]`.
    pub fn star(&self, a: &CommSplitAlgebra) -> Result<PhiData> {
        let image = self.image();
        let sp = a.algebra().space();
        let inv = LinMap::from_fn(sp, sp, |z| {
            if image.get(&z).is_some() {
                self.inverse_apply(&Vector::basis(z)).unwrap_or_default()
            } else {
                Vector::zero()
            }
        });
        PhiData::new(a, inv, image)
    }

    pub fn render(&self, a: &CommSplitAlgebra) -> String {
        let al = a.algebra();
        let parts: Vec<String> = self
            .e
            .keys()
            .map(|&x| format!("{}↦{}", al.label(x), al.render(self.phi.column(x))))
            .collect();
        format!("[{{{}}}, {}]", parts.join(", "), if self.e.is_zero() { "0".into() } else { al.render(&self.e) })
    }
}

/// `α_{[φ,e]}(a⊗b) = φ(ae)b` on the pair algebroid.
pub fn from_phi_data(pair: &FinAlgebroid, d: &PhiData) -> Result<Biretraction<usize>> {
    let m = pair.base.points();
    if pair.dim() != m * m || d.phi.domain().dim() != m {
        return Err(Error::Shape("φ-data does not match the pair algebroid".into()));
    }
    let values = (0..m * m)
        .map(|p| {
            let (u, v) = (p / m, p % m);
            let phi_ae = if d.e.get(&u).is_some() { d.phi.column(u).clone() } else { Vector::zero() };
            (p, pair.base.mul(&phi_ae, &Vector::basis(v)))
        })
        .collect();
    Ok(validate_biretraction(pair, values)?)
}

/// `α((a⊗b)xⁿ) = φ(ae)b·pⁿ`, where negative powers use `p′` with `pp′ = φ(e)`.
/// Returns `α` and `p′`.
pub fn laurent_from_phi_data(
    l: &LaurentAlgebroid,
    d: &PhiData,
    p: &Vector,
) -> Result<(Biretraction<(i64, usize)>, Vector)> {
    let a = &l.pair.base;
    let m = a.points();
    let image = d.image();
    let mut p_inv = Vector::zero();
    for &z in image.keys() {
        let c = p.coeff(&z);
        if c.is_zero() {
            return Err(Error::Precondition("no p′ with pp′ = φ(e)".into()));
        }
        p_inv.add_term(z, c.recip());
    }
    let power = |n: i64| {
        let (base, k) = if n >= 0 { (p, n) } else { (&p_inv, -n) };
        (0..k).fold(a.one(), |acc, _| a.mul(&acc, base))
    };
    let mut values = BTreeMap::new();
    for key @ (n, q) in l.basis() {
        let (u, v) = (q / m, q % m);
        let phi_ae = if d.e.get(&u).is_some() { d.phi.column(u).clone() } else { Vector::zero() };
        values.insert(key, a.mul(&a.mul(&phi_ae, &Vector::basis(v)), &power(n)));
    }
    Ok((validate_biretraction(l, values)?, p_inv))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::fun_algebra;
    use crate::algebroid::{laurent_algebroid, pair_algebroid};
    use crate::biretraction::{convolve, counit_biretraction, star};
    use crate::groupoid::points;
    use crate::linear::{int, ratio};

    fn swap() -> PartialBijection {
        PartialBijection::new(2, vec![(1, 2), (2, 1)]).unwrap()
    }

    #[test]
    fn identity_data_is_counit() {
        let a = fun_algebra(&points(2));
        let x = pair_algebroid(&a);
        let d = PhiData::from_partial(&a, &PartialBijection::identity(2)).unwrap();
        assert_eq!(from_phi_data(&x, &d).unwrap(), counit_biretraction(&x).unwrap());
    }

    #[test]
    fn swap_squared_is_counit() {
        let a = fun_algebra(&points(2));
        let x = pair_algebroid(&a);
        let s = from_phi_data(&x, &PhiData::from_partial(&a, &swap()).unwrap()).unwrap();
        assert_eq!(s.e, a.one());
        assert_eq!(convolve(&x, &s, &s).unwrap(), counit_biretraction(&x).unwrap());
    }

    #[test]
    fn disjoint_idempotents_convolve_to_zero() {
        let a = fun_algebra(&points(2));
        let x = pair_algebroid(&a);
        let one = PartialBijection::new(2, vec![(1, 1)]).unwrap();
        let two = PartialBijection::new(2, vec![(2, 2)]).unwrap();
        let f = from_phi_data(&x, &PhiData::from_partial(&a, &one).unwrap()).unwrap();
        let g = from_phi_data(&x, &PhiData::from_partial(&a, &two).unwrap()).unwrap();
        let h = convolve(&x, &f, &g).unwrap();
        assert!(h.is_zero());
        assert!(h.e.is_zero());
    }

    #[test]
    fn rejects_non_bijective_phi() {
        let a = fun_algebra(&points(2));
        let sp = a.algebra().space();
        let phi = LinMap::from_fn(sp, sp, |_| Vector::basis(0));
        assert!(PhiData::new(&a, phi, a.one()).is_err());
    }

    #[test]
    fn laurent_scaled_idempotent() {
        let a = fun_algebra(&points(2));
        let l = laurent_algebroid(&a, 2);
        let d = PhiData::from_partial(&a, &PartialBijection::new(2, vec![(1, 1)]).unwrap()).unwrap();
        let p = Vector::term(0, int(2));
        let (alpha, p_inv) = laurent_from_phi_data(&l, &d, &p).unwrap();
        assert_eq!(p_inv, Vector::term(0, ratio(1, 2)));
        // (χ1⊗χ1)x ↦ 2χ1, (χ2⊗χ2)x ↦ 0
        assert_eq!(alpha.at(&(1, 0)), Vector::term(0, int(2)));
        assert!(alpha.at(&(1, 3)).is_zero());
        assert_eq!(alpha.at(&(-2, 0)), Vector::term(0, ratio(1, 4)));
    }

    #[test]
    fn laurent_swap_degree_one() {
        let a = fun_algebra(&points(2));
        let l = laurent_algebroid(&a, 2);
        let d = PhiData::from_partial(&a, &swap()).unwrap();
        let (alpha, _) = laurent_from_phi_data(&l, &d, &a.one()).unwrap();
        // (χ1⊗χ2)x ↦ swap(χ1)χ2 = χ2
        assert_eq!(alpha.at(&(1, 1)), Vector::basis(1));
        assert!(alpha.at(&(1, 0)).is_zero());
    }

    #[test]
    fn laurent_star_formula() {
        let a = fun_algebra(&points(2));
        let l = laurent_algebroid(&a, 2);
        let sigma = PartialBijection::new(2, vec![(1, 2)]).unwrap();
        let d = PhiData::from_partial(&a, &sigma).unwrap();
        let p = Vector::term(1, int(3));
        let (alpha, p_inv) = laurent_from_phi_data(&l, &d, &p).unwrap();
        let ds = d.star(&a).unwrap();
        let p_star = ds.phi.apply(&a.mul(&p_inv, &d.image()));
        let (want, _) = laurent_from_phi_data(&l, &ds, &p_star).unwrap();
        assert_eq!(star(&l, &alpha).unwrap(), want);
    }
}
