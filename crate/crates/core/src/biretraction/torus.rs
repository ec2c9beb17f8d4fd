use num_traits::{One, Zero};

use super::{integrand_failure, Rejection};
use crate::algebroid::{quantum_torus, Algebroid, AlgebroidExt, QuantumTorus};
use crate::linear::{format_scalar, pow, Comb, Scalar};
use crate::report::{LawReport, Witness};
use crate::{Error, Result};

type Key = (i64, i64);

/// `α(UⁿVᵐ) = q_α^m U^{n + t_α m}` on the commutative torus.
#[derive(Clone, Debug)]
pub struct TorusBiretraction {
    pub torus: QuantumTorus,
    pub q_alpha: Scalar,
    pub t_alpha: i64,
}

/// Why no global biretraction exists when `q ≠ 1`.
#[derive(Clone, Debug)]
pub struct TorusCertificate {
    pub q: Scalar,
    /// `UV − qVU`, computed in `T_q`; zero.
    pub relation: Comb<Key>,
    /// `α(U)α(V) − qα(V)α(U)` for the requested `α(V)`; nonzero.
    pub residual: Comb<i64>,
    pub steps: Vec<String>,
}

impl TorusCertificate {
    pub fn holds(&self) -> bool {
        self.relation.is_zero() && !self.residual.is_zero() && !self.q.is_one()
    }
}

#[derive(Clone, Debug)]
pub enum TorusOutcome {
    Exists(TorusBiretraction),
    Impossible(TorusCertificate),
}

impl TorusBiretraction {
    pub fn eval(&self, &(n, m): &Key) -> Comb<i64> {
        Comb::term(n + self.t_alpha * m, pow(&self.q_alpha, m))
    }

    pub fn apply(&self, h: &Comb<Key>) -> Comb<i64> {
        h.map_basis(|k| self.eval(k))
    }

    /// Closed form of `α∗β`: parameters multiply and add.
    pub fn then(&self, other: &TorusBiretraction) -> TorusBiretraction {
        TorusBiretraction {
            torus: self.torus.clone(),
            q_alpha: &self.q_alpha * &other.q_alpha,
            t_alpha: self.t_alpha + other.t_alpha,
        }
    }

    /// Multiplicativity on the window, BRT1, `α∘t = id` (so `e^α = 1`), and the
    /// convolution integrand on the balancing generators.
    pub fn check(&self) -> LawReport {
        let t = &self.torus;
        let mut r = LawReport::new();
        let basis = t.basis();
        let mut mult = None;
        'm: for x in &basis {
            for y in &basis {
                let p = t.mul(x, y);
                if !t.window_support(&p) {
                    continue;
                }
                let lhs = self.apply(&p);
                let rhs = t.base_mul_c(&self.eval(x), &self.eval(y));
                if lhs != rhs {
                    mult = Some(Witness {
                        at: format!("{}·{}", t.key_label(x), t.key_label(y)),
                        lhs: t.render_base(&lhs),
                        rhs: t.render_base(&rhs),
                    });
                    break 'm;
                }
            }
        }
        r.record("multiplicative", mult);
        let one = self.apply(&t.one());
        r.record(
            "α(1) = 1",
            (one != t.base_one()).then(|| Witness { at: "1".into(), lhs: t.render_base(&one), rhs: "1".into() }),
        );
        let brt1 = t.base_basis().into_iter().find_map(|a| {
            let lhs = self.apply(&t.source(&a));
            let rhs = t.base_mul_c(&Comb::basis(a), &one);
            (lhs != rhs).then(|| Witness { at: format!("s({})", t.base_label(&a)), lhs: t.render_base(&lhs), rhs: t.render_base(&rhs) })
        });
        r.record("BRT1", brt1);
        let brt2 = t.base_basis().into_iter().find_map(|a| {
            let lhs = self.apply(&t.target(&a));
            (lhs != Comb::basis(a)).then(|| Witness { at: format!("t({})", t.base_label(&a)), lhs: t.render_base(&lhs), rhs: t.base_label(&a) })
        });
        r.record("α∘t = id", brt2);
        let wd = integrand_failure(t, |p, q| self.apply(&t.mul_c(&t.t_c(&self.eval(p)), &Comb::basis(*q))));
        r.record("integrand vanishes on balancing", wd);
        r
    }
}

/// `(f∗g)(h) = Σ g(t(f(h₍₁₎))h₍₂₎)` evaluated pointwise.
pub fn convolve_at<F, G>(t: &QuantumTorus, f: F, g: G, h: &Key) -> Comb<i64>
where
    F: Fn(&Key) -> Comb<i64>,
    G: Fn(&Key) -> Comb<i64>,
{
    let mut out = Comb::zero();
    for ((p, q), c) in t.delta_l(h).terms() {
        let lifted = t.mul_c(&t.t_c(&f(p)), &Comb::basis(*q));
        out.axpy(c, &lifted.map_basis(&g));
    }
    out
}

/// `α^{∗k}` evaluated by repeated convolution, not by the closed form.
pub fn convolution_power_at(alpha: &TorusBiretraction, k: u32, h: &Key) -> Comb<i64> {
    fn go(alpha: &TorusBiretraction, k: u32, h: &Key) -> Comb<i64> {
        if k == 1 {
            return alpha.eval(h);
        }
        convolve_at(&alpha.torus, |p| go(alpha, k - 1, p), |p| alpha.eval(p), h)
    }
    if k == 0 {
        return alpha.torus.eps_l(h);
    }
    go(alpha, k, h)
}

/// `α^k(V) = q_α^k U^{k t_α}` for `k = 1..=up_to`, by repeated convolution.
pub fn power_law_failure(alpha: &TorusBiretraction, up_to: u32) -> Option<Witness> {
    (1..=up_to).find_map(|k| {
        let got = convolution_power_at(alpha, k, &(0, 1));
        let want = Comb::term(alpha.t_alpha * k as i64, pow(&alpha.q_alpha, k as i64));
        (got != want).then(|| Witness {
            at: format!("k = {k}"),
            lhs: alpha.torus.render_base(&got),
            rhs: alpha.torus.render_base(&want),
        })
    })
}

/// For `q = 1`, the biretraction with `α(V) = q_α U^{t_α}`, checked on the window.
/// For `q ≠ 1`, a certificate that no global one exists.
pub fn torus_biretraction(q: Scalar, q_alpha: Scalar, t_alpha: i64, window: i64) -> Result<TorusOutcome> {
    if q_alpha.is_zero() {
        return Err(Error::Precondition("q_α must be nonzero".into()));
    }
    let torus = quantum_torus(q.clone(), window)?;
    if q.is_one() {
        let alpha = TorusBiretraction { torus, q_alpha, t_alpha };
        let r = alpha.check();
        if let Some(l) = r.laws.iter().find(|l| !l.passed()) {
            let witness = l.witness().cloned().expect("failed law has a witness");
            return Err(Rejection { law: "torus biretraction", witness }.into());
        }
        return Ok(TorusOutcome::Exists(alpha));
    }
    let uv = torus.mul(&(1, 0), &(0, 1));
    let mut relation = uv;
    relation.axpy(&-q.clone(), &torus.mul(&(0, 1), &(1, 0)));
    let av = Comb::term(t_alpha, q_alpha.clone());
    let au = Comb::basis(1i64);
    let mut residual = torus.base_mul_c(&au, &av);
    residual.axpy(&-q.clone(), &torus.base_mul_c(&av, &au));
    let qs = format_scalar(&q);
    let steps = vec![
        format!("UV = {qs}·VU in T_q"),
        "α(1) is an idempotent of 𝕜[U, U⁻¹], hence 0 or 1; α(1) = 0 forces α = 0".into(),
        "α(U) = α(s(U)) = U·α(1) = U".into(),
        "α(V)α(V⁻¹) = α(1) = 1, so α(V) is a unit".into(),
        format!("Uα(V) = α(UV) = {qs}·α(VU) = {qs}·Uα(V)"),
        format!("(1 − {qs})·Uα(V) = 0 with Uα(V) a unit, so q = 1, contradicting q = {qs}"),
        format!(
            "for α(V) = {}: α(U)α(V) − q·α(V)α(U) = {}",
            torus.render_base(&av),
            torus.render_base(&residual)
        ),
    ];
    Ok(TorusOutcome::Impossible(TorusCertificate { q, relation, residual, steps }))
}
