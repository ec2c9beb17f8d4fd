//! `verify <id>`: one theorem, checked at the requested scale.

use qisg_core::algebroid::{repfun_transitive_algebroid, weakhopf_algebroid, Mode};
use qisg_core::biretraction::{
    classify_groupoid_algebra, classify_repfun, enumerate_biretractions, power_law_failure, qisg_span,
    regular_monoid_report, span_identity_failure, torus_biretraction, TorusOutcome,
};
use qisg_core::groupoid::{points, product_groupoid};
use qisg_core::linear::{format_scalar, parse_scalar};
use qisg_core::qisg::*;
use qisg_core::semigroup::{exel_semigroup, symmetric_inverse_monoid};

use crate::commands::{self, TorusParams};
use crate::models::{self, AnyAlgebroid, Params};
use crate::report::Report;

pub const THEOREMS: &[&str] = &[
    "qisg-axioms",
    "weakhopf-qisg",
    "hadamard",
    "hpar",
    "hopf-category",
    "bisection-semigroup",
    "brt-regular",
    "qisg-span",
    "bisection-iso",
    "kG-classification",
    "torus-q1",
    "noncomm-regular",
];

fn e(x: qisg_core::Error) -> String {
    x.to_string()
}

fn finite_model(model: &str, p: &Params) -> Result<qisg_core::algebroid::FinAlgebroid, String> {
    let r = p.algebroid_ref(model);
    match models::algebroid(&r)? {
        AnyAlgebroid::Finite(x) => Ok(x),
        _ => Err(format!("{model:?} is not a finite model")),
    }
}

pub fn verify(r: &mut Report, id: &str, model: Option<&str>, p: &Params, tp: &TorusParams) -> Result<(), String> {
    match id {
        "qisg-axioms" => {
            let g = models::group(&p.group)?;
            let list: Vec<(String, Qisg)> = vec![
                (format!("𝕜I_{}", p.n), models::qisg("rook", p)?),
                (format!("𝕜S({})", p.group), qisg_from_inverse_semigroup(&exel_semigroup(&g).map_err(e)?).map_err(e)?),
                (format!("M_{}", p.n), models::qisg("matrix", p)?),
                (format!("hadamard {}", p.n), models::qisg("hadamard", p)?),
                (format!("H_par({})", p.group), partial_group_qisg(&g).map_err(e)?),
                (format!("hopf category {}", p.n), models::qisg("hopf-category", p)?),
            ];
            for (name, q) in &list {
                r.laws(&format!("{name}: "), &check_qisg(q).laws);
            }
            r.count("models", list.len());
        }
        "weakhopf-qisg" => {
            let w = matrix_weak_hopf(p.n);
            r.laws(&format!("M_{} weak Hopf: ", p.n), &check_weak_hopf(&w));
            r.laws(&format!("M_{} QISG: ", p.n), &check_qisg(&qisg_from_weak_hopf(&w).map_err(e)?).laws);
            let g = models::groupoid(&p.groupoid, p)?;
            let gw = groupoid_weak_hopf(&g);
            r.laws("𝕜𝒢 weak Hopf: ", &check_weak_hopf(&gw));
            r.laws("𝕜𝒢 QISG: ", &check_qisg(&qisg_from_weak_hopf(&gw).map_err(e)?).laws);
        }
        "hadamard" => {
            let q = models::qisg("hadamard", p)?;
            commands::qisg_check(r, &q);
            r.laws("relations: ", &hadamard_relations_hold(&q, p.n).report);
        }
        "hpar" => {
            let g = models::group(&p.group)?;
            let q = partial_group_qisg(&g).map_err(e)?;
            commands::qisg_check(r, &q);
            let exel = qisg_from_inverse_semigroup(&exel_semigroup(&g).map_err(e)?).map_err(e)?;
            r.law("structure constants equal 𝕜S(G)", same_structure(&q, &exel));
        }
        "hopf-category" => {
            let c = trivial_hopf_category(p.n);
            r.laws("category: ", &check_hopf_category(&c).map_err(e)?);
            commands::qisg_check(r, &hopf_category_alg(&c).map_err(e)?);
        }
        "bisection-semigroup" => {
            let g = models::groupoid(model.unwrap_or("pair"), p)?;
            commands::groupoid_bisections(r, &g, true)?;
            if model.unwrap_or("pair") == "pair" {
                let (ix, _) = symmetric_inverse_monoid(p.points).map_err(e)?;
                let (_, sg) = qisg_core::groupoid::enumerate_bisections(&g).map_err(e)?;
                let iso = qisg_core::semigroup::find_isomorphism(&sg, &ix).is_some();
                r.claim(format!("≅ I({})", p.points), iso, "");
            }
        }
        "brt-regular" | "noncomm-regular" => {
            let default = if id == "brt-regular" { "pair" } else { "weakhopf" };
            let x = finite_model(model.unwrap_or(default), p)?;
            if id == "noncomm-regular" && x.mode == Mode::Commutative {
                return Err("noncomm-regular needs a restricted-mode model (weakhopf)".into());
            }
            r.count("model", qisg_core::algebroid::Algebroid::name(&x));
            let b = enumerate_biretractions(&x).map_err(e)?;
            r.count("biretractions", b.size());
            r.laws("", &regular_monoid_report(&x, &b));
            match b.noncommuting_idempotents() {
                None => r.detail("idempotents commute: yes"),
                Some((i, j)) => r.detail(format!("idempotents commute: no, {} and {}", b.labels[i], b.labels[j])),
            }
        }
        "qisg-span" => {
            let x = finite_model(model.unwrap_or("pair"), p)?;
            let b = enumerate_biretractions(&x).map_err(e)?;
            r.count("biretractions", b.size());
            let q = qisg_span(&b).map_err(e)?;
            r.count("dim", q.dim());
            r.laws("", &check_qisg(&q).laws);
            r.law("(α∗α*)∗(β*∗β)(h) = ε(h)e^α β(1)", span_identity_failure(&x, &b));
        }
        "bisection-iso" => {
            let g = product_groupoid(&points(p.points), &models::group(&p.group)?);
            let x = repfun_transitive_algebroid(&points(p.points), &models::group(&p.group)?).map_err(e)?;
            let c = classify_repfun(&x, &g).map_err(e)?;
            r.count("bisections", c.bisections.len());
            r.count("biretractions", c.brt.size());
            r.detail(format!("{} = {}", c.bisections.len(), c.brt.size()));
            r.laws("", &c.report);
        }
        "kG-classification" => {
            let g = models::groupoid(model.unwrap_or("product"), p)?;
            let x = weakhopf_algebroid(&g);
            let c = classify_groupoid_algebra(&x, &g).map_err(e)?;
            r.count("|𝓕|", c.f_size);
            r.count("|Brt|", c.brt.size());
            r.count("global", c.brt.globals(&x).len());
            if let Some(rej) = &c.f_rejection {
                r.detail(format!("first 𝓕-map rejected: {rej}"));
            }
            r.laws("", &c.report);
        }
        "torus-q1" => {
            let q = parse_scalar(&p.q).map_err(e)?;
            match torus_biretraction(q.clone(), tp.q_alpha.clone(), tp.t_alpha, p.window).map_err(e)? {
                TorusOutcome::Impossible(c) => {
                    r.count("q", format_scalar(&q));
                    r.count("biretractions", "none");
                    r.claim("nonexistence certificate", c.holds(), "");
                    for s in &c.steps {
                        r.detail(s.clone());
                    }
                }
                TorusOutcome::Exists(a) => {
                    r.count("q", "1");
                    r.count("α", format!("{}:{}", format_scalar(&a.q_alpha), a.t_alpha));
                    r.laws("", &a.check());
                    r.law("α^k(V) = q_α^k U^{k t_α}, k ≤ 5", power_law_failure(&a, 5));
                }
            }
        }
        _ => return Err(format!("unknown theorem id {id:?}; expected one of {}", THEOREMS.join(", "))),
    }
    Ok(())
}
