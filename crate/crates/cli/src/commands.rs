use qisg_core::algebroid::{check_hopf_algebroid, Algebroid, AlgebroidExt, FinAlgebroid, LaurentAlgebroid, Mode, QuantumTorus};
use qisg_core::biretraction::{
    brt_semigroup, convolve, convolve_at, describe, enumerate_biretractions, laurent_from_phi_data, regular_monoid_report,
    torus_biretraction, BrtSemigroup, PhiData, TorusBiretraction, TorusOutcome,
};
use qisg_core::groupoid::{bisection_compose, bisection_star, enumerate_bisections, validate_groupoid, Bisection, FinGroupoid};
use qisg_core::linear::{format_scalar, parse_scalar, Scalar};
use qisg_core::qisg::{check_qisg, Qisg};
use qisg_core::semigroup::{is_inverse, wagner_preston, FinSemigroup, Inverseness, PartialBijection};

use crate::models::AnyAlgebroid;
use crate::report::Report;

pub fn qisg_check(r: &mut Report, q: &Qisg) {
    r.count("dim", q.dim());
    let c = check_qisg(q);
    r.laws("", &c.laws);
    match c.anticomultiplicative {
        None => r.detail("anticomultiplicative: yes"),
        Some(w) => r.detail(format!("anticomultiplicative: no, {w}")),
    }
}

pub fn semigroup_check(r: &mut Report, s: &FinSemigroup) {
    r.count("size", s.size());
    r.count("idempotents", s.idempotents().len());
    r.count("unit", s.unit().map_or("none".to_string(), |u| s.label(u).to_string()));
    r.count("zero", s.zero().map_or("none".to_string(), |z| s.label(z).to_string()));
    r.claim("associative", true, "");
    let irregular = (0..s.size()).find(|&a| s.pseudo_inverses(a).is_empty());
    r.claim("regular", irregular.is_none(), irregular.map_or(String::new(), |a| format!("{} has no pseudo-inverse", s.label(a))));
    let nc = s.noncommuting_idempotents();
    r.claim(
        "idempotents commute",
        nc.is_none(),
        nc.map_or(String::new(), |(e, f)| format!("{}·{} ≠ {}·{}", s.label(e), s.label(f), s.label(f), s.label(e))),
    );
    match is_inverse(s) {
        Inverseness::Inverse { .. } => {
            r.claim("inverse", true, "");
            match wagner_preston(s) {
                Ok(_) => r.claim("Wagner–Preston embedding", true, format!("into I({})", s.size())),
                Err(e) => r.claim("Wagner–Preston embedding", false, e.to_string()),
            }
        }
        _ => r.claim("inverse", false, ""),
    }
}

pub fn groupoid_bisections(r: &mut Report, g: &FinGroupoid, check_inverse: bool) -> Result<(), String> {
    r.count("objects", g.num_objects());
    r.count("arrows", g.num_arrows());
    if let Err(v) = validate_groupoid(g) {
        r.claim("groupoid axioms", false, v.to_string());
        return Ok(());
    }
    r.claim("groupoid axioms", true, "");
    let (bis, sg) = enumerate_bisections(g).map_err(|e| e.to_string())?;
    r.count("bisections", bis.len());
    let idem = sg.idempotents();
    let forms: Vec<usize> = (0..bis.len()).filter(|&i| bis[i].is_idempotent_form(g)).collect();
    r.count("idempotents", idem.len());
    r.claim("idempotents are the (i, X)", idem == forms, "");
    let globals: Vec<&Bisection> = bis.iter().filter(|u| u.is_global(g)).collect();
    r.count("global bisections", globals.len());
    let id = Bisection::identity(g);
    let group = globals.iter().all(|u| {
        let us = bisection_star(g, u);
        globals.iter().all(|v| bisection_compose(g, u, v).is_global(g))
            && bisection_compose(g, u, &us) == id
            && bisection_compose(g, &us, u) == id
    });
    r.claim("global bisections form a group", group, "");
    if check_inverse {
        let inv = matches!(is_inverse(&sg), Inverseness::Inverse { .. });
        r.count("inverse", if inv { "yes" } else { "no" });
        r.claim("inverse semigroup", inv, "");
    }
    Ok(())
}

fn describe_model<M: Algebroid>(r: &mut Report, m: &M) {
    r.count("model", m.name());
    r.count("mode", if m.mode() == Mode::Commutative { "commutative" } else { "restricted" });
    r.count("basis in window", m.basis().len());
}

pub fn algebroid_check(r: &mut Report, m: &AnyAlgebroid) {
    match m {
        AnyAlgebroid::Finite(x) => {
            describe_model(r, x);
            r.laws("", &check_hopf_algebroid(x));
        }
        AnyAlgebroid::Laurent(x) => {
            describe_model(r, x);
            r.laws("", &check_hopf_algebroid(x));
        }
        AnyAlgebroid::Torus(x) => {
            describe_model(r, x);
            r.laws("", &check_hopf_algebroid(x));
        }
    }
}

/// `[φ, e]` data of every partial bijection, with weight `p = 1`.
pub fn laurent_family(l: &LaurentAlgebroid) -> Result<BrtSemigroup<(i64, usize)>, String> {
    let a = &l.pair.base;
    let mut elements = Vec::new();
    let mut labels = Vec::new();
    for s in PartialBijection::all(a.points()) {
        let d = PhiData::from_partial(a, &s).map_err(|e| e.to_string())?;
        let (alpha, _) = laurent_from_phi_data(l, &d, &a.one()).map_err(|e| e.to_string())?;
        labels.push(d.render(a));
        elements.push(alpha);
    }
    brt_semigroup(l, elements, labels, false, Some("[φ, e] family with p = 1".into())).map_err(|e| e.to_string())
}

fn monoid_report<M: Algebroid<Base = usize>>(r: &mut Report, m: &M, b: &BrtSemigroup<M::Key>, table: bool) {
    r.count("biretractions", b.size());
    r.count("idempotents", b.idempotents().len());
    r.count("global", b.globals(m).len());
    r.count("commutative", b.is_commutative());
    r.count("complete", b.complete);
    if let Some(c) = &b.caveat {
        r.detail(format!("caveat: {c}"));
    }
    match b.noncommuting_idempotents() {
        None => r.detail("idempotents commute: yes"),
        Some((i, j)) => r.detail(format!("idempotents commute: no, {} and {}", b.labels[i], b.labels[j])),
    }
    r.laws("", &regular_monoid_report(m, b));
    for (i, a) in b.elements.iter().enumerate() {
        r.detail(format!("[{i}] {}: {}", b.labels[i], describe(m, a)));
    }
    if table {
        for (i, row) in b.table.iter().enumerate() {
            let cells: Vec<String> = row.iter().map(|j| j.to_string()).collect();
            r.detail(format!("[{i}] ∗ : {}", cells.join(" ")));
        }
    }
}

pub struct TorusParams {
    pub q_alpha: Scalar,
    pub t_alpha: i64,
}

fn torus_report(r: &mut Report, t: &QuantumTorus, tp: &TorusParams) -> Result<(), String> {
    describe_model(r, t);
    match torus_biretraction(t.q.clone(), tp.q_alpha.clone(), tp.t_alpha, t.window).map_err(|e| e.to_string())? {
        TorusOutcome::Impossible(c) => {
            r.count("biretractions", "none");
            r.claim("nonexistence certificate", c.holds(), "");
            for s in &c.steps {
                r.detail(s.clone());
            }
        }
        TorusOutcome::Exists(a) => {
            r.count("family", "α(V) = q_α U^{t_α}, q_α ≠ 0");
            r.count("α(V)", t.render_base(&a.eval(&(0, 1))));
            r.laws("", &a.check());
        }
    }
    Ok(())
}

pub fn algebroid_biretractions(r: &mut Report, m: &AnyAlgebroid, table: bool, tp: &TorusParams) -> Result<(), String> {
    match m {
        AnyAlgebroid::Finite(x) => {
            describe_model(r, x);
            let b = enumerate_biretractions(x).map_err(|e| e.to_string())?;
            monoid_report(r, x, &b, table);
        }
        AnyAlgebroid::Laurent(l) => {
            describe_model(r, l);
            let b = laurent_family(l)?;
            monoid_report(r, l, &b, table);
        }
        AnyAlgebroid::Torus(t) => torus_report(r, t, tp)?,
    }
    Ok(())
}

fn resolve<K: Ord + Clone>(b: &BrtSemigroup<K>, s: &str) -> Result<usize, String> {
    if let Ok(i) = s.parse::<usize>() {
        return if i < b.size() { Ok(i) } else { Err(format!("index {i} out of range (size {})", b.size())) };
    }
    b.labels.iter().position(|l| l == s).ok_or_else(|| format!("no biretraction labeled {s:?}"))
}

fn convolve_listed<M: Algebroid<Base = usize>>(
    r: &mut Report,
    m: &M,
    b: &BrtSemigroup<M::Key>,
    left: &str,
    right: &str,
) -> Result<(), String> {
    let (i, j) = (resolve(b, left)?, resolve(b, right)?);
    r.count("α", b.labels[i].clone());
    r.count("β", b.labels[j].clone());
    match convolve(m, &b.elements[i], &b.elements[j]) {
        Ok(c) => {
            r.law("α∗β is a biretraction", None);
            let k = b.position(&c);
            r.count("α∗β", k.map_or("(outside the list)".to_string(), |k| b.labels[k].clone()));
            r.claim("α∗β is listed", k.is_some(), "");
            r.detail(format!("α = {}", describe(m, &b.elements[i])));
            r.detail(format!("β = {}", describe(m, &b.elements[j])));
            r.detail(format!("α∗β = {}", describe(m, &c)));
            r.detail(format!("e^(α∗β) = {}", m.render_base(&c.e)));
        }
        Err(rej) => r.law(format!("α∗β is a biretraction ({})", rej.law), Some(rej.witness)),
    }
    Ok(())
}

/// `q_α:t_α`, e.g. `5:3` or `-1/2:-1`.
pub fn parse_torus_param(s: &str) -> Result<TorusParams, String> {
    let (q, t) = s.split_once(':').ok_or_else(|| format!("expected q_α:t_α, got {s:?}"))?;
    let q_alpha = parse_scalar(q).map_err(|e| e.to_string())?;
    let t_alpha = t.trim().parse().map_err(|_| format!("bad exponent {t:?}"))?;
    Ok(TorusParams { q_alpha, t_alpha })
}

fn torus_element(t: &QuantumTorus, s: &str) -> Result<TorusBiretraction, String> {
    let p = parse_torus_param(s)?;
    match torus_biretraction(t.q.clone(), p.q_alpha, p.t_alpha, t.window).map_err(|e| e.to_string())? {
        TorusOutcome::Exists(a) => Ok(a),
        TorusOutcome::Impossible(_) => Err(format!("no biretraction exists for q = {}", format_scalar(&t.q))),
    }
}

pub fn brt_convolve(r: &mut Report, m: &AnyAlgebroid, left: &str, right: &str) -> Result<(), String> {
    match m {
        AnyAlgebroid::Finite(x) => {
            describe_model(r, x);
            let b = enumerate_biretractions(x).map_err(|e| e.to_string())?;
            convolve_listed(r, x, &b, left, right)
        }
        AnyAlgebroid::Laurent(l) => {
            describe_model(r, l);
            let b = laurent_family(l)?;
            convolve_listed(r, l, &b, left, right)
        }
        AnyAlgebroid::Torus(t) => {
            describe_model(r, t);
            let (a, b) = (torus_element(t, left)?, torus_element(t, right)?);
            let ab = a.then(&b);
            let w = t.basis().into_iter().find_map(|h| {
                let got = convolve_at(t, |p| a.eval(p), |p| b.eval(p), &h);
                let want = ab.eval(&h);
                (got != want).then(|| qisg_core::report::Witness {
                    at: t.key_label(&h),
                    lhs: t.render_base(&got),
                    rhs: t.render_base(&want),
                })
            });
            r.law("α∗β = (q_α q_β, t_α + t_β) on the window", w);
            r.count("α∗β", format!("{}:{}", format_scalar(&ab.q_alpha), ab.t_alpha));
            r.count("(α∗β)(V)", t.render_base(&ab.eval(&(0, 1))));
            Ok(())
        }
    }
}

pub fn finite(m: &AnyAlgebroid) -> Option<&FinAlgebroid> {
    match m {
        AnyAlgebroid::Finite(x) => Some(x),
        _ => None,
    }
}
