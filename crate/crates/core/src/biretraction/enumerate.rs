use std::collections::BTreeMap;

use num_traits::Zero;

use super::{brt_semigroup, validate_biretraction, BrtSemigroup};
use crate::algebra::enumerate_characters;
use crate::algebroid::{Algebroid, FinAlgebroid};
use crate::linear::{format_scalar, Scalar, Vector};
use crate::{Error, Result};

const MAX_TUPLES: usize = 1 << 16;

fn eval(chi: &[Scalar], v: &Vector) -> Scalar {
    v.terms().map(|(&k, c)| c * &chi[k]).sum()
}

/// `χ(s(χ_z)) = [z = x]·χ(1)`, the BRT1 condition read at the point `x`.
fn brt1_at(m: &FinAlgebroid, x: usize, chi: &[Scalar]) -> bool {
    let one = eval(chi, &m.one());
    (0..m.base.points()).all(|z| {
        let want = if z == x { one.clone() } else { Scalar::zero() };
        eval(chi, &m.source(&z)) == want
    })
}

fn char_label(m: &FinAlgebroid, chi: &[Scalar]) -> String {
    let nz: Vec<usize> = (0..chi.len()).filter(|&k| !chi[k].is_zero()).collect();
    match nz.as_slice() {
        [] => "0".into(),
        [k] if chi[*k] == Scalar::from_integer(1.into()) => m.key_label(k),
        _ => format!("[{}]", chi.iter().map(format_scalar).collect::<Vec<_>>().join(",")),
    }
}

/// Every biretraction of a finite model, as a tuple of per-point characters
/// (`α(h)_x = χ_x(h)`) filtered by the biretraction axioms. Tuples run in
/// lexicographic order with the zero character first.
pub fn enumerate_biretractions(m: &FinAlgebroid) -> Result<BrtSemigroup<usize>> {
    let chars = enumerate_characters(&m.h, None)?;
    let pts = m.base.points();
    let per_point: Vec<Vec<usize>> = (0..pts)
        .map(|x| (0..chars.values.len()).filter(|&i| brt1_at(m, x, &chars.values[i])).collect())
        .collect();
    let total = per_point.iter().try_fold(1usize, |acc, c| acc.checked_mul(c.len()).filter(|&n| n <= MAX_TUPLES));
    if total.is_none() {
        return Err(Error::SizeBound { what: "character tuples".into(), limit: MAX_TUPLES });
    }
    let mut elements = Vec::new();
    let mut labels = Vec::new();
    let mut digits = vec![0usize; pts];
    'tuples: loop {
        let pick: Vec<&[Scalar]> = (0..pts).map(|x| chars.values[per_point[x][digits[x]]].as_slice()).collect();
        let values: BTreeMap<usize, Vector> = (0..m.dim())
            .map(|h| (h, (0..pts).filter(|&x| !pick[x][h].is_zero()).map(|x| (x, pick[x][h].clone())).collect()))
            .collect();
        if let Ok(b) = validate_biretraction(m, values) {
            let parts: Vec<String> = pick.iter().map(|c| char_label(m, c)).collect();
            labels.push(format!("({})", parts.join(", ")));
            elements.push(b);
        }
        for x in (0..pts).rev() {
            digits[x] += 1;
            if digits[x] < per_point[x].len() {
                continue 'tuples;
            }
            digits[x] = 0;
        }
        break;
    }
    brt_semigroup(m, elements, labels, chars.complete, chars.obstruction)
}
