use num_traits::{One, Zero};

use super::{pair_algebroid, Algebroid, FinAlgebroid, Mode, Pair, Side};
use crate::algebra::CommSplitAlgebra;
use crate::linear::{format_scalar, pow, Comb, Scalar, Vector};
use crate::{Error, Result};

pub const DEFAULT_WINDOW: i64 = 3;

/// `(A⊗A)[x, x⁻¹]`; keys are `(n, p)` for `p·xⁿ` with `p` a basis element of `A⊗A`.
#[derive(Clone, Debug)]
pub struct LaurentAlgebroid {
    pub pair: FinAlgebroid,
    pub window: i64,
}

pub fn laurent_algebroid(a: &CommSplitAlgebra, window: i64) -> LaurentAlgebroid {
    LaurentAlgebroid { pair: pair_algebroid(a), window: window.max(0) }
}

fn shift(v: &Vector, n: i64) -> Comb<(i64, usize)> {
    v.relabel(|&p| (n, p))
}

impl Algebroid for LaurentAlgebroid {
    type Key = (i64, usize);
    type Base = usize;

    fn name(&self) -> String {
        format!("laurent(|X|={}, |n| ≤ {})", self.pair.base.points(), self.window)
    }

    fn mode(&self) -> Mode {
        Mode::Commutative
    }

    fn basis(&self) -> Vec<(i64, usize)> {
        (-self.window..=self.window).flat_map(|n| (0..self.pair.dim()).map(move |p| (n, p))).collect()
    }

    fn base_basis(&self) -> Vec<usize> {
        self.pair.base_basis()
    }

    fn in_window(&self, k: &(i64, usize)) -> bool {
        k.0.abs() <= self.window
    }

    fn key_label(&self, &(n, p): &(i64, usize)) -> String {
        let l = self.pair.key_label(&p);
        match n {
            0 => l,
            1 => format!("({l})x"),
            _ => format!("({l})x^{n}"),
        }
    }

    fn base_label(&self, b: &usize) -> String {
        self.pair.base_label(b)
    }

    fn mul(&self, x: &(i64, usize), y: &(i64, usize)) -> Comb<(i64, usize)> {
        shift(&self.pair.mul(&x.1, &y.1), x.0 + y.0)
    }

    fn one(&self) -> Comb<(i64, usize)> {
        shift(&self.pair.one(), 0)
    }

    fn base_mul(&self, a: &usize, b: &usize) -> Vector {
        self.pair.base_mul(a, b)
    }

    fn base_one(&self) -> Vector {
        self.pair.base_one()
    }

    fn source(&self, a: &usize) -> Comb<(i64, usize)> {
        shift(&self.pair.source(a), 0)
    }

    fn target(&self, a: &usize) -> Comb<(i64, usize)> {
        shift(&self.pair.target(a), 0)
    }

    fn delta_l(&self, h: &(i64, usize)) -> Pair<(i64, usize)> {
        let n = h.0;
        self.pair.delta_l(&h.1).relabel(|&(u, v)| ((n, u), (n, v)))
    }

    fn eps_l(&self, h: &(i64, usize)) -> Vector {
        self.pair.eps_l(&h.1)
    }

    fn antipode(&self, h: &(i64, usize)) -> Comb<(i64, usize)> {
        shift(&self.pair.antipode(&h.1), -h.0)
    }
}

/// `T_q`: invertible `U, V` with `UV = qVU`, keys `(n, m)` for `UⁿVᵐ`,
/// over `A = 𝕜[U, U⁻¹]` embedded by `s = t`.
#[derive(Clone, Debug)]
pub struct QuantumTorus {
    pub q: Scalar,
    pub window: i64,
}

pub fn quantum_torus(q: Scalar, window: i64) -> Result<QuantumTorus> {
    if q.is_zero() {
        return Err(Error::Precondition("q must be nonzero".into()));
    }
    Ok(QuantumTorus { q, window: window.max(0) })
}

fn power(letter: &str, k: i64) -> String {
    match k {
        0 => String::new(),
        1 => letter.to_string(),
        _ => format!("{letter}^{k}"),
    }
}

pub(crate) fn monomial(n: i64, m: i64) -> String {
    let s = format!("{}{}", power("U", n), power("V", m));
    if s.is_empty() {
        "1".into()
    } else {
        s
    }
}

impl QuantumTorus {
    /// `q^k`.
    pub fn qp(&self, k: i64) -> Scalar {
        pow(&self.q, k)
    }

    fn term(&self, k: i64, key: (i64, i64)) -> Comb<(i64, i64)> {
        Comb::term(key, self.qp(k))
    }
}

impl Algebroid for QuantumTorus {
    type Key = (i64, i64);
    type Base = i64;

    fn name(&self) -> String {
        format!("torus(q={}, window {})", format_scalar(&self.q), self.window)
    }

    fn mode(&self) -> Mode {
        Mode::Restricted
    }

    fn basis(&self) -> Vec<(i64, i64)> {
        let w = self.window;
        (-w..=w).flat_map(|n| (-w..=w).map(move |m| (n, m))).collect()
    }

    fn base_basis(&self) -> Vec<i64> {
        (-self.window..=self.window).collect()
    }

    fn in_window(&self, k: &(i64, i64)) -> bool {
        k.0.abs() <= self.window && k.1.abs() <= self.window
    }

    fn key_label(&self, &(n, m): &(i64, i64)) -> String {
        monomial(n, m)
    }

    fn base_label(&self, j: &i64) -> String {
        monomial(*j, 0)
    }

    /// `UⁿVᵐ·Uⁿ'Vᵐ' = q^{−mn'} U^{n+n'}V^{m+m'}`.
    fn mul(&self, x: &(i64, i64), y: &(i64, i64)) -> Comb<(i64, i64)> {
        self.term(-x.1 * y.0, (x.0 + y.0, x.1 + y.1))
    }

    fn one(&self) -> Comb<(i64, i64)> {
        Comb::basis((0, 0))
    }

    fn base_mul(&self, a: &i64, b: &i64) -> Comb<i64> {
        Comb::basis(a + b)
    }

    fn base_one(&self) -> Comb<i64> {
        Comb::basis(0)
    }

    fn source(&self, a: &i64) -> Comb<(i64, i64)> {
        Comb::basis((*a, 0))
    }

    fn target(&self, a: &i64) -> Comb<(i64, i64)> {
        Comb::basis((*a, 0))
    }

    fn delta_l(&self, &(n, m): &(i64, i64)) -> Pair<(i64, i64)> {
        Comb::basis(((n, m), (0, m)))
    }

    fn eps_l(&self, h: &(i64, i64)) -> Comb<i64> {
        Comb::basis(h.0)
    }

    /// `ε_r(VᵐUⁿ) = Uⁿ`, so `ε_r(UⁿVᵐ) = q^{mn}Uⁿ`.
    fn eps_r(&self, &(n, m): &(i64, i64)) -> Comb<i64> {
        Comb::term(n, self.qp(m * n))
    }

    /// `S(UⁿVᵐ) = V⁻ᵐUⁿ = q^{mn}UⁿV⁻ᵐ`.
    fn antipode(&self, &(n, m): &(i64, i64)) -> Comb<(i64, i64)> {
        self.term(m * n, (n, -m))
    }

    /// Left: every `U` moves into the second factor. Right: every `U` moves into the first.
    fn balanced_normal_form(&self, side: Side, x: &Pair<(i64, i64)>) -> Option<Pair<(i64, i64)>> {
        let mut out = Comb::zero();
        for (&((n, m), (n2, m2)), c) in x.terms() {
            let (key, k) = match side {
                Side::Left => (((0, m), (n + n2, m2)), 0),
                Side::Right => (((n + n2, m), (0, m2)), n2 * (m2 - m)),
            };
            out.add_term(key, c * self.qp(k));
        }
        Some(out)
    }
}

impl QuantumTorus {
    pub fn is_commutative(&self) -> bool {
        self.q.is_one()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::fun_algebra;
    use crate::algebroid::{check_hopf_algebroid, AlgebroidExt};
    use crate::groupoid::points;
    use crate::linear::{int, ratio};

    #[test]
    fn laurent_passes_and_degree_zero_is_pair() {
        let x = laurent_algebroid(&fun_algebra(&points(2)), 2);
        let r = check_hopf_algebroid(&x);
        assert!(r.all_pass(), "{r}");
        for p in 0..4 {
            assert_eq!(x.delta_l(&(0, p)).relabel(|&((_, u), (_, v))| (u, v)), x.pair.delta_l(&p));
        }
    }

    #[test]
    fn laurent_counit_ignores_degree() {
        let x = laurent_algebroid(&fun_algebra(&points(2)), 3);
        for n in -3..=3 {
            assert_eq!(x.eps_l(&(n, 3)), Vector::basis(1));
            assert!(x.eps_l(&(n, 2)).is_zero());
        }
    }

    #[test]
    fn laurent_antipode_law_degree_two() {
        // h = (χ1⊗χ2)x²: h₍₁₎S(h₍₂₎) = Σ (χ1⊗χu)x²·(χ2⊗χv)x⁻² = 0 = t(ε(h))
        let x = laurent_algebroid(&fun_algebra(&points(2)), 3);
        let h = (2, 1);
        let lhs = x.delta_l(&h).map_basis(|(p, q)| x.mul_c(&Comb::basis(*p), &x.antipode(q)));
        assert!(lhs.is_zero());
        let h = (2, 0);
        let lhs = x.delta_l(&h).map_basis(|(p, q)| x.mul_c(&Comb::basis(*p), &x.antipode(q)));
        assert_eq!(lhs, x.t_c(&x.eps_l(&h)));
    }

    #[test]
    fn torus_relation() {
        let t = quantum_torus(int(2), 2).unwrap();
        let uv = t.mul(&(1, 0), &(0, 1));
        let vu = t.mul(&(0, 1), &(1, 0));
        assert_eq!(uv, vu.scaled(&int(2)));
        let c = quantum_torus(int(1), 2).unwrap();
        assert_eq!(c.mul(&(1, 0), &(0, 1)), c.mul(&(0, 1), &(1, 0)));
    }

    #[test]
    fn torus_antipode_formula() {
        for q in [int(1), int(2), ratio(3, 2), int(-1)] {
            let t = quantum_torus(q, 3).unwrap();
            let vinv_u = t.mul(&(0, -1), &(1, 0));
            assert_eq!(t.antipode(&(1, 1)), vinv_u);
            let v3_u2 = t.mul(&(0, -3), &(2, 0));
            assert_eq!(t.antipode(&(2, 3)), v3_u2);
        }
    }

    #[test]
    fn torus_axioms() {
        for q in [int(1), int(2), ratio(3, 2), int(-1)] {
            let t = quantum_torus(q, 2).unwrap();
            let r = check_hopf_algebroid(&t);
            assert!(r.all_pass(), "{r}");
        }
    }

    #[test]
    fn torus_right_normal_form_kills_generators() {
        let t = quantum_torus(ratio(3, 2), 2).unwrap();
        let b = crate::algebroid::Balancer::new(&t);
        for h in t.basis() {
            for k in t.basis() {
                for a in -2..=2 {
                    for side in [Side::Left, Side::Right] {
                        let g = b.generator(side, &h, &k, &a);
                        assert!(t.balanced_normal_form(side, &g).unwrap().is_zero());
                    }
                }
            }
        }
    }
}
