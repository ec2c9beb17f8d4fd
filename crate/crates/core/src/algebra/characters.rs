use num_traits::{One, Zero};

use super::{functional, FinAlgebra};
use crate::linear::{int, LinMap, Scalar};
use crate::{Error, Result};

/// Rational characters of an algebra. `complete` is false when some
/// character could take irrational values the search cannot see.
#[derive(Clone, Debug)]
pub struct CharacterReport {
    /// Values on the basis, one vector per character; the zero map first.
    pub values: Vec<Vec<Scalar>>,
    pub complete: bool,
    pub obstruction: Option<String>,
}

impl CharacterReport {
    pub fn maps(&self, h: &FinAlgebra) -> Vec<LinMap> {
        self.values.iter().map(|v| functional(h.space(), v)).collect()
    }

    pub fn nonzero(&self) -> usize {
        self.values.iter().filter(|v| v.iter().any(|x| !x.is_zero())).count()
    }
}

/// All multiplicative functionals with rational values.
///
/// A semigroup-like basis forces `χ(b) ∈ {0, 1, −1}` over ℚ; otherwise
/// `candidates[i]` must list the admissible values of `χ(b_i)`.
pub fn enumerate_characters(h: &FinAlgebra, candidates: Option<&[Vec<Scalar>]>) -> Result<CharacterReport> {
    let n = h.dim();
    match (h.semigroup_like(), candidates) {
        (Some(table), None) => {
            let mut out = Vec::new();
            let mut vals = vec![None; n];
            propagate_search(&table, 0, &mut vals, &mut out);
            let obstruction = period_obstruction(&table);
            Ok(CharacterReport { values: out, complete: obstruction.is_none(), obstruction })
        }
        (_, Some(cands)) => {
            if cands.len() != n {
                return Err(Error::DimensionMismatch { expected: n, found: cands.len() });
            }
            let mut out = Vec::new();
            brute_force(h, cands, &mut Vec::with_capacity(n), &mut out);
            Ok(CharacterReport {
                values: out,
                complete: false,
                obstruction: Some("complete only relative to the supplied candidate values".into()),
            })
        }
        (None, None) => Err(Error::NeedsCandidates("basis is not multiplicatively closed".into())),
    }
}

fn assign(table: &[Vec<Option<usize>>], vals: &mut [Option<Scalar>], i: usize, v: Scalar) -> bool {
    match &vals[i] {
        Some(old) => return *old == v,
        None => vals[i] = Some(v),
    }
    let n = vals.len();
    for j in 0..n {
        let Some(vj) = vals[j].clone() else { continue };
        let vi = vals[i].clone().expect("just assigned");
        for (a, b, prod) in [(i, j, &vi * &vj), (j, i, &vj * &vi)] {
            let ok = match table[a][b] {
                Some(k) => assign(table, vals, k, prod),
                None => prod.is_zero(),
            };
            if !ok {
                return false;
            }
        }
    }
    true
}

fn propagate_search(
    table: &[Vec<Option<usize>>],
    from: usize,
    vals: &mut Vec<Option<Scalar>>,
    out: &mut Vec<Vec<Scalar>>,
) {
    let Some(i) = (from..vals.len()).find(|&i| vals[i].is_none()) else {
        out.push(vals.iter().map(|v| v.clone().expect("all assigned")).collect());
        return;
    };
    for v in [Scalar::zero(), Scalar::one(), int(-1)] {
        let mut trial = vals.clone();
        if assign(table, &mut trial, i, v) {
            propagate_search(table, i + 1, &mut trial, out);
        }
    }
}

fn brute_force(h: &FinAlgebra, cands: &[Vec<Scalar>], cur: &mut Vec<Scalar>, out: &mut Vec<Vec<Scalar>>) {
    let k = cur.len();
    let eval = |cur: &[Scalar], v: &crate::linear::Vector| -> Option<Scalar> {
        let mut s = Scalar::zero();
        for (&i, c) in v.terms() {
            s += c * cur.get(i)?;
        }
        Some(s)
    };
    for i in 0..k {
        for j in 0..k {
            if let Some(p) = eval(cur, h.product(i, j)) {
                if p != &cur[i] * &cur[j] {
                    return;
                }
            }
        }
    }
    if k == cands.len() {
        let ok = (0..k).all(|i| (0..k).all(|j| eval(cur, h.product(i, j)) == Some(&cur[i] * &cur[j])));
        if ok {
            out.push(cur.clone());
        }
        return;
    }
    for v in &cands[k] {
        cur.push(v.clone());
        brute_force(h, cands, cur, out);
        cur.pop();
    }
}

/// Basis elements whose powers cycle with a period that admits
/// non-rational roots of unity.
fn period_obstruction(table: &[Vec<Option<usize>>]) -> Option<String> {
    let mut bad = Vec::new();
    for b in 0..table.len() {
        let mut powers = vec![b];
        loop {
            let Some(next) = table[*powers.last().unwrap()][b] else { break };
            if let Some(i) = powers.iter().position(|&p| p == next) {
                let period = powers.len() - i;
                if period > 2 {
                    bad.push(format!("basis element {b} has period {period}"));
                }
                break;
            }
            powers.push(next);
        }
    }
    (!bad.is_empty()).then(|| format!("characters with irrational values are invisible: {}", bad.join("; ")))
}
