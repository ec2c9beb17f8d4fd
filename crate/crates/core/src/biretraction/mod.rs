//! Biretractions `α: H → A` and their convolution monoid.
//!
//! Everything here assumes a split base: the base basis is a complete set of
//! orthogonal idempotents `χ_x`, so ideals of `A` are subsets of points.

mod bisection;
mod enumerate;
mod phi;
mod torus;

pub use bisection::{
    classify_groupoid_algebra, classify_repfun, f_elements, f_map, from_bisection, reconstruct_bisection,
    GroupoidClassification, RepfunClassification,
};
pub use enumerate::enumerate_biretractions;
pub use phi::{from_phi_data, laurent_from_phi_data, PhiData};
pub use torus::{convolution_power_at, convolve_at, power_law_failure, torus_biretraction, TorusBiretraction, TorusCertificate, TorusOutcome};

use std::collections::BTreeMap;
use std::fmt;

use num_traits::One;

use crate::algebroid::{Algebroid, AlgebroidExt, Balancer, Mode, Side};
use crate::linear::{solve, Comb, Echelon, Scalar, Vector};
use crate::qisg::{grouplike_qisg, Qisg};
use crate::report::{LawReport, Witness};
use crate::semigroup::FinSemigroup;
use crate::{Error, Result};

const MAX_POINTS: usize = 16;

/// `α` on every basis key of the model, and the witness idempotent `e^α`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Biretraction<K: Ord> {
    pub values: BTreeMap<K, Vector>,
    pub e: Vector,
}

impl<K: Ord + Clone> Biretraction<K> {
    pub fn at(&self, k: &K) -> Vector {
        self.values.get(k).cloned().unwrap_or_default()
    }

    pub fn apply(&self, h: &Comb<K>) -> Vector {
        h.map_basis(|k| self.at(k))
    }

    pub fn is_zero(&self) -> bool {
        self.values.values().all(Comb::is_zero)
    }
}

/// Why a map is not a biretraction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rejection {
    pub law: &'static str,
    pub witness: Witness,
}

impl fmt::Display for Rejection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.law, self.witness)
    }
}

impl From<Rejection> for Error {
    fn from(r: Rejection) -> Self {
        Error::NotBiretraction(r.to_string())
    }
}

fn reject<T>(law: &'static str, at: String, lhs: String, rhs: String) -> std::result::Result<T, Rejection> {
    Err(Rejection { law, witness: Witness { at, lhs, rhs } })
}

fn indicator(points: &[usize], mask: u64) -> Vector {
    points.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &x)| (x, Scalar::one())).collect()
}

fn base_points<M: Algebroid<Base = usize>>(m: &M) -> std::result::Result<Vec<usize>, Rejection> {
    let pts = m.base_basis();
    if pts.len() > MAX_POINTS {
        return reject("split base", m.name(), format!("{} points", pts.len()), format!("at most {MAX_POINTS}"));
    }
    Ok(pts)
}

/// Checks multiplicativity (on pairs whose product stays in the window),
/// BRT1 and BRT2, and finds the unique `e^α`.
pub fn validate_biretraction<M>(
    m: &M,
    values: BTreeMap<M::Key, Vector>,
) -> std::result::Result<Biretraction<M::Key>, Rejection>
where
    M: Algebroid<Base = usize>,
{
    let basis = m.basis();
    let at = |k: &M::Key| values.get(k).cloned().unwrap_or_default();
    let alpha = |c: &Comb<M::Key>| c.map_basis(at);
    for x in &basis {
        for y in &basis {
            let p = m.mul(x, y);
            if !m.window_support(&p) {
                continue;
            }
            let lhs = alpha(&p);
            let rhs = m.base_mul_c(&at(x), &at(y));
            if lhs != rhs {
                let here = format!("{}·{}", m.key_label(x), m.key_label(y));
                return reject("multiplicative", here, m.render_base(&lhs), m.render_base(&rhs));
            }
        }
    }
    let one = alpha(&m.one());
    if m.base_mul_c(&one, &one) != one {
        return reject("α(1) idempotent", "1".into(), m.render_base(&m.base_mul_c(&one, &one)), m.render_base(&one));
    }
    for a in m.base_basis() {
        let lhs = alpha(&m.source(&a));
        let rhs = m.base_mul_c(&Comb::basis(a), &one);
        if lhs != rhs {
            return reject("BRT1", format!("s({})", m.base_label(&a)), m.render_base(&lhs), m.render_base(&rhs));
        }
    }
    let pts = base_points(m)?;
    let cols: Vec<Vector> = pts.iter().map(|a| alpha(&m.target(a))).collect();
    let mut found = Vec::new();
    for mask in 0..1u64 << pts.len() {
        let e = indicator(&pts, mask);
        if alpha(&m.t_c(&e)) != one {
            continue;
        }
        let chosen: Vec<&Vector> = (0..pts.len()).filter(|i| mask >> i & 1 == 1).map(|i| &cols[i]).collect();
        let inside = chosen.iter().all(|c| c.keys().all(|k| one.get(k).is_some()));
        let rank = Echelon::from_vectors(chosen.iter().copied()).rank();
        if inside && rank == chosen.len() && rank == one.len() {
            found.push(e);
        }
    }
    match found.len() {
        1 => Ok(Biretraction { values, e: found.pop().expect("one") }),
        0 => reject("BRT2", "α∘t on A·e".into(), "no idempotent e works".into(), m.render_base(&one)),
        _ => reject(
            "e^α unique",
            "α∘t on A·e".into(),
            m.render_base(&found[0]),
            m.render_base(&found[1]),
        ),
    }
}

/// `(α∘t)⁻¹(y)` inside `A·e^α`, by an exact solve on the ideal basis.
pub fn t_inverse<M>(m: &M, alpha: &Biretraction<M::Key>, y: &Vector) -> Option<Vector>
where
    M: Algebroid<Base = usize>,
{
    let pts: Vec<usize> = alpha.e.keys().copied().collect();
    let cols: Vec<Vector> = pts.iter().map(|a| alpha.apply(&m.target(a))).collect();
    solve(&cols, y).map(|c| c.relabel(|&j| pts[j]))
}

/// `(h, k) ↦ β(t(α(h))k)`, the integrand of `α∗β` on `H ⊗ H`.
pub fn integrand<M>(m: &M, alpha: &Biretraction<M::Key>, beta: &Biretraction<M::Key>, h: &M::Key, k: &M::Key) -> Vector
where
    M: Algebroid<Base = usize>,
{
    beta.apply(&m.mul_c(&m.t_c(&alpha.at(h)), &Comb::basis(k.clone())))
}

/// `(α∗β)(h) = Σ β(t(α(h₍₁₎))h₍₂₎)` over `Δ_l`. The result is revalidated, and
/// both `e^{α∗β} = (α∘t)⁻¹(e^β α(1))` and `(α∗β)∘t = β∘t∘α∘t` are checked.
pub fn convolve<M>(
    m: &M,
    alpha: &Biretraction<M::Key>,
    beta: &Biretraction<M::Key>,
) -> std::result::Result<Biretraction<M::Key>, Rejection>
where
    M: Algebroid<Base = usize>,
{
    let mut values = BTreeMap::new();
    for h in m.basis() {
        let mut v = Vector::zero();
        for ((p, q), c) in m.delta_l(&h).terms() {
            v.axpy(c, &integrand(m, alpha, beta, p, q));
        }
        values.insert(h, v);
    }
    let out = validate_biretraction(m, values)?;
    if let Some(w) = witness_formula_failure(m, alpha, beta, &out) {
        return Err(Rejection { law: "e^{α∗β} = (α∘t)⁻¹(e^β α(1))", witness: w });
    }
    if let Some(w) = precomposition_failure(m, alpha, beta, &out) {
        return Err(Rejection { law: "(α∗β)∘t = β∘t∘α∘t", witness: w });
    }
    Ok(out)
}

fn witness_formula_failure<M>(
    m: &M,
    alpha: &Biretraction<M::Key>,
    beta: &Biretraction<M::Key>,
    ab: &Biretraction<M::Key>,
) -> Option<Witness>
where
    M: Algebroid<Base = usize>,
{
    let y = m.base_mul_c(&beta.e, &alpha.apply(&m.one()));
    let predicted = t_inverse(m, alpha, &y);
    match predicted {
        Some(e) if e == ab.e => None,
        Some(e) => Some(Witness { at: "e^{α∗β}".into(), lhs: m.render_base(&ab.e), rhs: m.render_base(&e) }),
        None => Some(Witness { at: "e^{α∗β}".into(), lhs: m.render_base(&ab.e), rhs: "unsolvable".into() }),
    }
}

fn precomposition_failure<M>(
    m: &M,
    alpha: &Biretraction<M::Key>,
    beta: &Biretraction<M::Key>,
    ab: &Biretraction<M::Key>,
) -> Option<Witness>
where
    M: Algebroid<Base = usize>,
{
    m.base_basis().into_iter().find_map(|a| {
        let lhs = ab.apply(&m.target(&a));
        let rhs = beta.apply(&m.t_c(&alpha.apply(&m.target(&a))));
        (lhs != rhs).then(|| Witness { at: format!("t({})", m.base_label(&a)), lhs: m.render_base(&lhs), rhs: m.render_base(&rhs) })
    })
}

/// Commutative: `α* = (α∘t)⁻¹∘α∘S`. Restricted: `α*(h) = (α∘t)⁻¹(ε_l(h⁽¹⁾)α(S h⁽²⁾))` over `Δ_r`.
pub fn star<M>(m: &M, alpha: &Biretraction<M::Key>) -> std::result::Result<Biretraction<M::Key>, Rejection>
where
    M: Algebroid<Base = usize>,
{
    let mut values = BTreeMap::new();
    for h in m.basis() {
        let y = match m.mode() {
            Mode::Commutative => alpha.apply(&m.antipode(&h)),
            Mode::Restricted => {
                let mut y = Vector::zero();
                for ((p, q), c) in m.delta_r(&h).terms() {
                    y.axpy(c, &m.base_mul_c(&m.eps_l(p), &alpha.apply(&m.antipode(q))));
                }
                y
            }
        };
        match t_inverse(m, alpha, &y) {
            Some(v) => values.insert(h, v),
            None => return reject("(α∘t)⁻¹ defined", m.key_label(&h), m.render_base(&y), "outside A·α(1)".into()),
        };
    }
    let out = validate_biretraction(m, values)?;
    let one = alpha.apply(&m.one());
    if out.e != one {
        return reject("e^{α*} = α(1)", "e^{α*}".into(), m.render_base(&out.e), m.render_base(&one));
    }
    Ok(out)
}

/// `ε_l` as a biretraction, when it is multiplicative.
pub fn counit_biretraction<M>(m: &M) -> Option<Biretraction<M::Key>>
where
    M: Algebroid<Base = usize>,
{
    let values = m.basis().into_iter().map(|h| (h.clone(), m.eps_l(&h))).collect();
    validate_biretraction(m, values).ok()
}

/// `a·ε_l`.
pub fn scaled_counit<M>(m: &M, a: &Vector) -> Biretraction<M::Key>
where
    M: Algebroid<Base = usize>,
{
    let values = m.basis().into_iter().map(|h| (h.clone(), m.base_mul_c(a, &m.eps_l(&h)))).collect();
    Biretraction { values, e: a.clone() }
}

/// The side on which `Δ_l` is balanced.
pub fn convolution_side(mode: Mode) -> Side {
    match mode {
        Mode::Commutative => Side::Right,
        Mode::Restricted => Side::Left,
    }
}

/// First balancing generator on which `f`, extended bilinearly, is nonzero.
pub fn integrand_failure<M, F>(m: &M, f: F) -> Option<Witness>
where
    M: Algebroid,
    F: Fn(&M::Key, &M::Key) -> Comb<M::Base>,
{
    let side = convolution_side(m.mode());
    Balancer::new(m).generators(side).into_iter().find_map(|g| {
        let mut v = Comb::zero();
        for ((p, q), c) in g.terms() {
            v.axpy(c, &f(p, q));
        }
        (!v.is_zero()).then(|| Witness { at: m.render_pair(&g), lhs: m.render_base(&v), rhs: "0".into() })
    })
}

/// Compact rendering: nonzero values only.
pub fn describe<M>(m: &M, alpha: &Biretraction<M::Key>) -> String
where
    M: Algebroid<Base = usize>,
{
    let parts: Vec<String> = alpha
        .values
        .iter()
        .filter(|(_, v)| !v.is_zero())
        .map(|(k, v)| format!("{} ↦ {}", m.key_label(k), m.render_base(v)))
        .collect();
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(", ")
    }
}

/// Biretractions closed under `∗` and `*`, with the convolution table.
#[derive(Clone, Debug)]
pub struct BrtSemigroup<K: Ord> {
    pub elements: Vec<Biretraction<K>>,
    pub labels: Vec<String>,
    pub table: Vec<Vec<usize>>,
    pub star: Vec<usize>,
    pub unit: Option<usize>,
    /// False when the enumeration could have missed irrational characters.
    pub complete: bool,
    pub caveat: Option<String>,
}

impl<K: Ord + Clone> BrtSemigroup<K> {
    pub fn size(&self) -> usize {
        self.elements.len()
    }

    pub fn position(&self, alpha: &Biretraction<K>) -> Option<usize> {
        self.elements.iter().position(|b| b.values == alpha.values)
    }

    pub fn semigroup(&self) -> Result<FinSemigroup> {
        FinSemigroup::with_unit(self.labels.clone(), self.table.clone(), self.unit)
    }

    pub fn idempotents(&self) -> Vec<usize> {
        (0..self.size()).filter(|&i| self.table[i][i] == i).collect()
    }

    /// Reported, not assumed: the theory does not force idempotents to commute.
    pub fn noncommuting_idempotents(&self) -> Option<(usize, usize)> {
        let idem = self.idempotents();
        for &a in &idem {
            for &b in &idem {
                if self.table[a][b] != self.table[b][a] {
                    return Some((a, b));
                }
            }
        }
        None
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.size()).all(|i| (0..self.size()).all(|j| self.table[i][j] == self.table[j][i]))
    }
}

impl<K: Ord + Clone> BrtSemigroup<K> {
    /// `α(1) = 1` and `e^α = 1`.
    pub fn globals<M: Algebroid<Key = K, Base = usize>>(&self, m: &M) -> Vec<usize> {
        let one = m.base_one();
        (0..self.size()).filter(|&i| self.elements[i].e == one && self.elements[i].apply(&m.one()) == one).collect()
    }
}

/// Tabulates `∗` and `*` over a list that must be closed under both.
pub fn brt_semigroup<M>(
    m: &M,
    elements: Vec<Biretraction<M::Key>>,
    labels: Vec<String>,
    complete: bool,
    caveat: Option<String>,
) -> Result<BrtSemigroup<M::Key>>
where
    M: Algebroid<Base = usize>,
{
    let find = |b: &Biretraction<M::Key>, what: &str| {
        elements
            .iter()
            .position(|x| x.values == b.values)
            .ok_or_else(|| Error::Invalid(format!("{what} leaves the list: {}", describe(m, b))))
    };
    let mut table = Vec::with_capacity(elements.len());
    for a in &elements {
        let mut row = Vec::with_capacity(elements.len());
        for b in &elements {
            row.push(find(&convolve(m, a, b)?, "convolution")?);
        }
        table.push(row);
    }
    let mut stars = Vec::with_capacity(elements.len());
    for a in &elements {
        stars.push(find(&star(m, a)?, "star")?);
    }
    let n = elements.len();
    let unit = (0..n).find(|&u| (0..n).all(|i| table[u][i] == i && table[i][u] == i));
    Ok(BrtSemigroup { elements, labels, table, star: stars, unit, complete, caveat })
}

fn pair_at(b: &BrtSemigroup<impl Ord + Clone>, i: usize, j: usize) -> String {
    format!("α={}, β={}", b.labels[i], b.labels[j])
}

/// The regular-monoid laws, on every element or pair of the list.
pub fn regular_monoid_report<M>(m: &M, b: &BrtSemigroup<M::Key>) -> LawReport
where
    M: Algebroid<Base = usize>,
{
    let n = b.size();
    let t = &b.table;
    let mut r = LawReport::new();
    let lab = |i: usize| b.labels[i].clone();
    r.record("α∗α*∗α = α", (0..n).find(|&i| t[t[i][b.star[i]]][i] != i).map(|i| Witness {
        at: lab(i),
        lhs: lab(t[t[i][b.star[i]]][i]),
        rhs: lab(i),
    }));
    r.record("α*∗α∗α* = α*", (0..n).find(|&i| t[t[b.star[i]][i]][b.star[i]] != b.star[i]).map(|i| Witness {
        at: lab(i),
        lhs: lab(t[t[b.star[i]][i]][b.star[i]]),
        rhs: lab(b.star[i]),
    }));
    match counit_biretraction(m) {
        Some(eps) => {
            let w = match b.position(&eps) {
                None => Some(Witness { at: "ε".into(), lhs: describe(m, &eps), rhs: "not enumerated".into() }),
                Some(u) => (0..n).find(|&i| t[u][i] != i || t[i][u] != i).map(|i| Witness {
                    at: lab(i),
                    lhs: format!("{} / {}", lab(t[u][i]), lab(t[i][u])),
                    rhs: lab(i),
                }),
            };
            r.record("ε∗α = α∗ε = α", w);
        }
        None if m.mode() == Mode::Commutative => {
            r.record("ε∗α = α∗ε = α", Some(Witness { at: "ε".into(), lhs: "not a biretraction".into(), rhs: "unit".into() }))
        }
        None => r.skip("ε∗α = α∗ε = α", "ε_l is not multiplicative"),
    }
    let mut formula = None;
    let mut precomp = None;
    let mut inverse = None;
    'outer: for i in 0..n {
        for j in 0..n {
            let (a, c, ac) = (&b.elements[i], &b.elements[j], &b.elements[t[i][j]]);
            if formula.is_none() {
                formula = witness_formula_failure(m, a, c, ac).map(|w| Witness { at: pair_at(b, i, j), ..w });
            }
            if precomp.is_none() {
                precomp = precomposition_failure(m, a, c, ac).map(|w| Witness { at: pair_at(b, i, j), ..w });
            }
            if inverse.is_none() {
                for z in ac.apply(&m.one()).keys() {
                    let y = Vector::basis(*z);
                    let lhs = t_inverse(m, ac, &y);
                    let rhs = t_inverse(m, c, &y).and_then(|v| t_inverse(m, a, &v));
                    if lhs != rhs {
                        let show = |v: Option<Vector>| v.map_or("undefined".into(), |v| m.render_base(&v));
                        inverse = Some(Witness { at: format!("{} at {}", pair_at(b, i, j), m.base_label(z)), lhs: show(lhs), rhs: show(rhs) });
                        break;
                    }
                }
            }
            if formula.is_some() && precomp.is_some() && inverse.is_some() {
                break 'outer;
            }
        }
    }
    r.record("e^{α∗β} = (α∘t)⁻¹(e^β α(1))", formula);
    r.record("(α∗β)∘t = β∘t∘α∘t", precomp);
    r.record("((α∗β)∘t)⁻¹ = (α∘t)⁻¹∘(β∘t)⁻¹", inverse);
    let mut left = None;
    let mut right = None;
    let mut e_star = None;
    for i in 0..n {
        let a = &b.elements[i];
        let s = &b.elements[b.star[i]];
        let one = a.apply(&m.one());
        if left.is_none() {
            let want = scaled_counit(m, &a.e);
            let got = &b.elements[t[i][b.star[i]]];
            if got.values != want.values {
                left = Some(Witness { at: lab(i), lhs: describe(m, got), rhs: describe(m, &want) });
            }
        }
        if right.is_none() {
            let want = scaled_counit(m, &one);
            let got = &b.elements[t[b.star[i]][i]];
            if got.values != want.values {
                right = Some(Witness { at: lab(i), lhs: describe(m, got), rhs: describe(m, &want) });
            }
        }
        if e_star.is_none() && s.e != one {
            e_star = Some(Witness { at: lab(i), lhs: m.render_base(&s.e), rhs: m.render_base(&one) });
        }
    }
    r.record("α∗α* = e^α ε_l", left);
    r.record("α*∗α = α(1) ε_l", right);
    r.record("e^{α*} = α(1)", e_star);
    let mut wd = None;
    'wd: for i in 0..n {
        for j in 0..n {
            let (a, c) = (&b.elements[i], &b.elements[j]);
            if let Some(w) = integrand_failure(m, |p, q| integrand(m, a, c, p, q)) {
                wd = Some(Witness { at: format!("{}: {}", pair_at(b, i, j), w.at), ..w });
                break 'wd;
            }
        }
    }
    r.record("integrand vanishes on balancing", wd);
    r
}

/// `((α∗α*)∗(β*∗β))(h) = ε_l(h)e^α β(1)` for all pairs and basis `h`.
pub fn span_identity_failure<M>(m: &M, b: &BrtSemigroup<M::Key>) -> Option<Witness>
where
    M: Algebroid<Base = usize>,
{
    let t = &b.table;
    for i in 0..b.size() {
        for j in 0..b.size() {
            let lhs = &b.elements[t[t[i][b.star[i]]][t[b.star[j]][j]]];
            let factor = m.base_mul_c(&b.elements[i].e, &b.elements[j].apply(&m.one()));
            for h in m.basis() {
                let want = m.base_mul_c(&m.eps_l(&h), &factor);
                let got = lhs.at(&h);
                if got != want {
                    return Some(Witness {
                        at: format!("{} at {}", pair_at(b, i, j), m.key_label(&h)),
                        lhs: m.render_base(&got),
                        rhs: m.render_base(&want),
                    });
                }
            }
        }
    }
    None
}

/// Free space on the biretractions: convolution product, grouplike `Δ`, `𝒮 = *`.
pub fn qisg_span<K: Ord + Clone>(b: &BrtSemigroup<K>) -> Result<Qisg> {
    grouplike_qisg(&b.semigroup()?, &b.star)
}
