//! Built-in models, addressed by name plus a few size parameters.

use qisg_core::algebra::fun_algebra;
use qisg_core::algebroid::{
    laurent_algebroid, mutations, pair_algebroid, quantum_torus, repfun_transitive_algebroid, weakhopf_algebroid,
    FinAlgebroid, LaurentAlgebroid, QuantumTorus,
};
use qisg_core::group::FinGroup;
use qisg_core::groupoid::{disjoint_union, pair_groupoid, points, product_groupoid, FinGroupoid};
use qisg_core::linear::parse_scalar;
use qisg_core::qisg::{
    grouplike_qisg, group_hopf_algebra, hadamard_qisg, hopf_category_alg, matrix_weak_hopf, partial_group_qisg,
    qisg_from_inverse_semigroup, qisg_from_weak_hopf, trivial_hopf_category, Qisg,
};
use qisg_core::semigroup::{exel_semigroup, symmetric_inverse_monoid, FinSemigroup};

use crate::structure::AlgebroidRef;

pub const QISG_MODELS: &[&str] =
    &["rook", "exel", "matrix", "hadamard", "partial", "group", "hopf-category", "left-zero"];
pub const SEMIGROUP_MODELS: &[&str] = &["rook", "exel", "group", "left-zero"];
pub const GROUPOID_MODELS: &[&str] = &["pair", "product", "bundle", "group"];
pub const ALGEBROID_MODELS: &[&str] = &["pair", "repfun", "weakhopf", "laurent", "torus", "mutation"];

/// Size parameters shared by every model.
#[derive(Clone, Debug)]
pub struct Params {
    pub n: usize,
    pub points: usize,
    pub group: String,
    pub groupoid: String,
    pub q: String,
    pub window: i64,
    pub index: usize,
}

impl Default for Params {
    fn default() -> Self {
        Params {
            n: 2,
            points: 2,
            group: "Z2".into(),
            groupoid: "product".into(),
            q: "1".into(),
            window: qisg_core::algebroid::DEFAULT_WINDOW,
            index: 0,
        }
    }
}

impl Params {
    pub fn algebroid_ref(&self, model: &str) -> AlgebroidRef {
        AlgebroidRef {
            model: model.to_string(),
            points: self.points,
            group: self.group.clone(),
            groupoid: self.groupoid.clone(),
            q: self.q.clone(),
            window: self.window,
            index: self.index,
        }
    }
}

fn unknown(kind: &str, name: &str, known: &[&str]) -> String {
    format!("unknown {kind} model {name:?}; expected one of {}", known.join(", "))
}

const MAX_GROUP: usize = 6;

pub fn group(name: &str) -> Result<FinGroup, String> {
    let g = FinGroup::parse(name).map_err(|e| e.to_string())?;
    if g.order() > MAX_GROUP {
        return Err(format!("group {name:?} has order {}; models accept order ≤ {MAX_GROUP}", g.order()));
    }
    Ok(g)
}

fn small(what: &str, n: usize, max: usize) -> Result<usize, String> {
    if n == 0 || n > max {
        return Err(format!("{what} must be between 1 and {max}, got {n}"));
    }
    Ok(n)
}

pub fn qisg(name: &str, p: &Params) -> Result<Qisg, String> {
    let e = |e: qisg_core::Error| e.to_string();
    match name {
        "rook" => qisg_from_inverse_semigroup(&symmetric_inverse_monoid(small("--n", p.n, 4)?).map_err(e)?.0).map_err(e),
        "exel" => qisg_from_inverse_semigroup(&exel_semigroup(&group(&p.group)?).map_err(e)?).map_err(e),
        "matrix" => qisg_from_weak_hopf(&matrix_weak_hopf(small("--n", p.n, 4)?)).map_err(e),
        "hadamard" => hadamard_qisg(small("--n", p.n, 3)?).map_err(e),
        "partial" => partial_group_qisg(&group(&p.group)?).map_err(e),
        "group" => group_hopf_algebra(&group(&p.group)?).map_err(e),
        "hopf-category" => hopf_category_alg(&trivial_hopf_category(small("--n", p.n, 4)?)).map_err(e),
        "left-zero" => {
            let s = FinSemigroup::left_zero(small("--n", p.n, 4)?);
            let id: Vec<usize> = (0..s.size()).collect();
            grouplike_qisg(&s, &id).map_err(e)
        }
        _ => Err(unknown("qisg", name, QISG_MODELS)),
    }
}

pub fn semigroup(name: &str, p: &Params) -> Result<FinSemigroup, String> {
    let e = |e: qisg_core::Error| e.to_string();
    match name {
        "rook" => Ok(symmetric_inverse_monoid(small("--n", p.n, 4)?).map_err(e)?.0),
        "exel" => exel_semigroup(&group(&p.group)?).map_err(e),
        "group" => Ok(group(&p.group)?.to_semigroup()),
        "left-zero" => Ok(FinSemigroup::left_zero(small("--n", p.n, 4)?)),
        _ => Err(unknown("semigroup", name, SEMIGROUP_MODELS)),
    }
}

pub fn groupoid(name: &str, p: &Params) -> Result<FinGroupoid, String> {
    let m = small("--points", p.points, 4)?;
    match name {
        "pair" => Ok(pair_groupoid(m)),
        "product" => Ok(product_groupoid(&points(m), &group(&p.group)?)),
        "group" => Ok(FinGroupoid::from_group(&group(&p.group)?)),
        "bundle" => {
            let one = FinGroupoid::from_group(&group(&p.group)?);
            Ok((1..m).fold(one.clone(), |acc, _| disjoint_union(&acc, &one)))
        }
        _ => Err(unknown("groupoid", name, GROUPOID_MODELS)),
    }
}

pub enum AnyAlgebroid {
    Finite(FinAlgebroid),
    Laurent(LaurentAlgebroid),
    Torus(QuantumTorus),
}

pub fn algebroid(r: &AlgebroidRef) -> Result<AnyAlgebroid, String> {
    let e = |e: qisg_core::Error| e.to_string();
    let window = if (0..=8).contains(&r.window) { r.window } else { return Err("--max-degree must be in 0..=8".into()) };
    let params = Params { points: r.points, group: r.group.clone(), ..Params::default() };
    match r.model.as_str() {
        "pair" => Ok(AnyAlgebroid::Finite(pair_algebroid(&fun_algebra(&points(small("--points", r.points, 4)?))))),
        "repfun" => repfun_transitive_algebroid(&points(small("--points", r.points, 4)?), &group(&r.group)?)
            .map(AnyAlgebroid::Finite)
            .map_err(e),
        "weakhopf" => Ok(AnyAlgebroid::Finite(weakhopf_algebroid(&groupoid(&r.groupoid, &params)?))),
        "laurent" => {
            Ok(AnyAlgebroid::Laurent(laurent_algebroid(&fun_algebra(&points(small("--points", r.points, 3)?)), window)))
        }
        "torus" => {
            let q = parse_scalar(&r.q).map_err(e)?;
            quantum_torus(q, window).map(AnyAlgebroid::Torus).map_err(e)
        }
        "mutation" => {
            let mut all = mutations();
            if r.index >= all.len() {
                return Err(format!("--index must be below {}", all.len()));
            }
            Ok(AnyAlgebroid::Finite(all.swap_remove(r.index).model))
        }
        _ => Err(unknown("algebroid", &r.model, ALGEBROID_MODELS)),
    }
}
