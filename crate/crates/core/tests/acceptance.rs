//! One line per acceptance criterion. Exits nonzero when a criterion fails
//! for a reason other than the recorded, re-checked analysis.

use std::process::ExitCode;
use std::time::Instant;

use qisg_core::algebra::fun_algebra;
use qisg_core::algebroid::{
    check_hopf_algebroid, laurent_algebroid, mutations, pair_algebroid, quantum_torus, repfun_transitive_algebroid,
    weakhopf_algebroid, AlgebroidExt, FinAlgebroid,
};
use qisg_core::biretraction::*;
use qisg_core::group::FinGroup;
use qisg_core::groupoid::{
    bisection_compose, bisection_star, disjoint_union, enumerate_bisections, pair_groupoid, points, product_groupoid,
    Bisection, FinGroupoid,
};
use qisg_core::linear::{int, ratio, Comb, Vector};
use qisg_core::qisg::*;
use qisg_core::semigroup::{exel_semigroup, is_homomorphism, symmetric_inverse_monoid, FinSemigroup, PartialBijection};

enum Verdict {
    Pass(String),
    /// Red, with the analysis that was re-verified on this run.
    Explained(String),
    Fail(String),
}

use Verdict::*;

fn check(ok: bool, what: &str, out: &mut Vec<String>) {
    if !ok {
        out.push(what.to_string());
    }
}

fn verdict(problems: Vec<String>, summary: String) -> Verdict {
    if problems.is_empty() {
        Pass(summary)
    } else {
        Fail(problems.join("; "))
    }
}

fn rook(n: u64) -> usize {
    let binom = |n: u64, k: u64| (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1));
    let fact = |k: u64| (1..=k).product::<u64>();
    (0..=n).map(|k| binom(n, k) * binom(n, k) * fact(k)).sum::<u64>() as usize
}

/// `|{(A, g) : {1, g} ⊆ A ⊆ G}| = 2^{n−1} + (n−1)·2^{n−2}`.
fn exel_count(n: u32) -> usize {
    (1usize << (n - 1)) + (n as usize - 1) * (1usize << (n - 2))
}

fn pair(n: usize) -> FinAlgebroid {
    pair_algebroid(&fun_algebra(&points(n)))
}

fn z2() -> FinGroup {
    FinGroup::cyclic(2)
}

fn bundle() -> FinGroupoid {
    let one = FinGroupoid::from_group(&z2());
    disjoint_union(&one, &one)
}

fn c1() -> Verdict {
    let mut models: Vec<(String, Qisg)> = Vec::new();
    for n in 1..=2 {
        let (s, _) = symmetric_inverse_monoid(n).unwrap();
        models.push((format!("𝕜I_{n}"), qisg_from_inverse_semigroup(&s).unwrap()));
    }
    for k in [2, 3] {
        let s = exel_semigroup(&FinGroup::cyclic(k)).unwrap();
        models.push((format!("𝕜S(ℤ{k})"), qisg_from_inverse_semigroup(&s).unwrap()));
    }
    for n in [2, 3] {
        models.push((format!("M_{n}"), qisg_from_weak_hopf(&matrix_weak_hopf(n)).unwrap()));
    }
    for n in 1..=3 {
        models.push((format!("hadamard {n}"), hadamard_qisg(n).unwrap()));
    }
    for g in ["Z2", "Z3", "Z2xZ2"] {
        models.push((format!("H_par({g})"), partial_group_qisg(&FinGroup::parse(g).unwrap()).unwrap()));
    }
    for n in [2, 3] {
        models.push((format!("hopf category {n}"), hopf_category_alg(&trivial_hopf_category(n)).unwrap()));
    }
    let mut problems = Vec::new();
    for (name, q) in &models {
        let r = check_qisg(q);
        check(r.all_pass(), &format!("{name} fails {:?}", r.laws.failing()), &mut problems);
    }
    if !problems.is_empty() {
        return Fail(problems.join("; "));
    }

    let l2 = FinSemigroup::left_zero(2);
    let r = check_qisg(&grouplike_qisg(&l2, &[0, 1]).unwrap()).laws;
    let failing = r.failing();
    let q4 = r.get("qisg4").and_then(|l| l.witness()).map(|w| w.at.clone());
    let anti = r.get("qisg3.i").and_then(|l| l.witness()).cloned();
    if failing == ["qisg4"] && q4.as_deref() == Some("(x, y)") {
        return Pass(format!("{} models pass; L₂ with 𝒮 = id fails only qisg4 at (x, y)", models.len()));
    }
    // Left-zero products force 𝒮(xy) = 𝒮(x) = x while 𝒮(y)𝒮(x) = y.
    let explained = failing == ["qisg3.i", "qisg4"]
        && q4.as_deref() == Some("(x, y)")
        && anti.as_ref().is_some_and(|w| w.lhs == "x" && w.rhs == "y")
        && r.passed("qisg3.ii");
    let msg = format!(
        "{} models pass; L₂ with 𝒮 = id fails qisg4 at (x, y) but also qisg3.i ({}), \
         since 𝒮 = id is not antimultiplicative on a left-zero semigroup; \
         only the glossary's axiom list (no antimultiplicativity) gives exactly qisg4",
        models.len(),
        anti.map_or("no witness".into(), |w| w.to_string()),
    );
    if explained {
        Explained(msg)
    } else {
        Fail(format!("control failed {failing:?}"))
    }
}

fn c2() -> Verdict {
    let mut problems = Vec::new();
    let mut dims = Vec::new();
    for (n, want) in [(1, 2), (2, 7), (3, 34)] {
        let d = hadamard_qisg(n).unwrap().dim();
        check(d == want && d == rook(n as u64), &format!("hadamard {n}: {d}"), &mut problems);
        dims.push(d);
    }
    for (g, order, want) in [("Z2", 2, 3), ("Z3", 3, 8), ("Z2xZ2", 4, 20)] {
        let d = partial_group_qisg(&FinGroup::parse(g).unwrap()).unwrap().dim();
        check(d == want && d == exel_count(order), &format!("H_par({g}): {d}"), &mut problems);
        dims.push(d);
    }
    verdict(problems, format!("dims {dims:?}"))
}

fn c3() -> Verdict {
    let mut problems = Vec::new();
    let mut sizes = Vec::new();
    for n in [2, 3] {
        let g = pair_groupoid(n);
        let (bis, sg) = enumerate_bisections(&g).unwrap();
        sizes.push(bis.len());
        let (ix, pbs) = symmetric_inverse_monoid(n).unwrap();
        check(bis.len() == rook(n as u64) && bis.len() == ix.size(), &format!("|X| = {n}: {} bisections", bis.len()), &mut problems);
        let map: Vec<usize> = bis
            .iter()
            .map(|u| {
                let pairs = u.target_map(&g).into_iter().map(|(x, y)| (x + 1, y + 1)).collect();
                let p = PartialBijection::new(n, pairs).unwrap();
                pbs.iter().position(|q| *q == p).unwrap()
            })
            .collect();
        let mut sorted = map.clone();
        sorted.sort_unstable();
        sorted.dedup();
        check(sorted.len() == bis.len(), &format!("|X| = {n}: u ↦ t∘u not injective"), &mut problems);
        check(is_homomorphism(&sg, &ix, &map), &format!("|X| = {n}: u ↦ t∘u not multiplicative"), &mut problems);
    }
    let g = product_groupoid(&points(2), &z2());
    let (bis, sg) = enumerate_bisections(&g).unwrap();
    sizes.push(bis.len());
    check(bis.len() == 17, "product groupoid count", &mut problems);
    let idem: Vec<usize> = sg.idempotents();
    let forms: Vec<usize> = (0..bis.len()).filter(|&i| bis[i].is_idempotent_form(&g)).collect();
    check(idem == forms && idem.len() == 4, "idempotents are not the (i, X)", &mut problems);
    check(sg.noncommuting_idempotents().is_none(), "idempotents do not commute", &mut problems);
    let globals: Vec<&Bisection> = bis.iter().filter(|u| u.is_global(&g)).collect();
    let id = Bisection::identity(&g);
    let group = globals.iter().all(|u| {
        globals.iter().all(|v| bisection_compose(&g, u, v).is_global(&g))
            && bisection_compose(&g, u, &bisection_star(&g, u)) == id
            && bisection_compose(&g, &bisection_star(&g, u), u) == id
    });
    // |S_n|·|G|ⁿ
    check(group && globals.len() == 2 * 2 * 2, "global bisections are not a group of order 8", &mut problems);
    verdict(problems, format!("sizes {sizes:?}, u ↦ t∘u ≅ I(X), 4 idempotents commute, 8 globals form a group"))
}

fn finite_models() -> Vec<(&'static str, FinAlgebroid)> {
    vec![
        ("pair 2", pair(2)),
        ("pair 3", pair(3)),
        ("repfun ℤ₂", repfun_transitive_algebroid(&points(2), &z2()).unwrap()),
        ("weakhopf pair 2", weakhopf_algebroid(&pair_groupoid(2))),
        ("weakhopf X×ℤ₂×X", weakhopf_algebroid(&product_groupoid(&points(2), &z2()))),
        ("weakhopf ℤ₂⊔ℤ₂", weakhopf_algebroid(&bundle())),
    ]
}

const REGULAR: [&str; 5] = [
    "α∗α*∗α = α",
    "α*∗α∗α* = α*",
    "ε∗α = α∗ε = α",
    "e^{α∗β} = (α∘t)⁻¹(e^β α(1))",
    "(α∗β)∘t = β∘t∘α∘t",
];

fn c4(enumerated: &[(&'static str, FinAlgebroid, BrtSemigroup<usize>)]) -> Verdict {
    let mut problems = Vec::new();
    let mut sizes = Vec::new();
    for (name, m, b) in enumerated {
        let r = regular_monoid_report(m, b);
        for law in REGULAR {
            check(r.get(law).is_some() && r.passed(law), &format!("{name}: {law}"), &mut problems);
        }
        check(b.complete, &format!("{name}: enumeration incomplete"), &mut problems);
        sizes.push(format!("{name} {}", b.size()));
    }
    verdict(problems, format!("|Brt|: {}", sizes.join(", ")))
}

fn c5() -> Verdict {
    let g = product_groupoid(&points(2), &z2());
    let x = repfun_transitive_algebroid(&points(2), &z2()).unwrap();
    let c = classify_repfun(&x, &g).unwrap();
    let mut problems = Vec::new();
    check(c.report.all_pass(), &format!("failing {:?}", c.report.failing()), &mut problems);
    check(c.bisections.len() == 17 && c.brt.size() == 17, "sizes", &mut problems);
    let (_, sg) = enumerate_bisections(&g).unwrap();
    let table = (0..17).all(|i| (0..17).all(|j| c.to_brt[sg.mul(i, j)] == c.brt.table[c.to_brt[i]][c.to_brt[j]]));
    check(table, "tables differ under the bijection", &mut problems);
    let unit = sg.unit().map(|u| c.to_brt[u]);
    check(unit.is_some() && unit == c.brt.unit, "unit not sent to ε", &mut problems);
    verdict(problems, "17 = 17, full table equality, unit ↦ ε, star ↦ star".into())
}

fn c6() -> Verdict {
    let a = fun_algebra(&points(2));
    let x = pair_algebroid(&a);
    let brt = enumerate_biretractions(&x).unwrap();
    let data: Vec<PhiData> = PartialBijection::all(2).iter().map(|s| PhiData::from_partial(&a, s).unwrap()).collect();
    let alphas: Vec<Biretraction<usize>> = data.iter().map(|d| from_phi_data(&x, d).unwrap()).collect();
    let mut problems = Vec::new();
    let mut pos: Vec<usize> = alphas.iter().filter_map(|al| brt.position(al)).collect();
    pos.sort_unstable();
    pos.dedup();
    check(brt.size() == 7 && data.len() == 7 && pos.len() == 7, "[φ, e] ↦ α not a bijection onto 7", &mut problems);
    for (i, d) in data.iter().enumerate() {
        for (j, f) in data.iter().enumerate() {
            let prod = f.product(d, &a).unwrap();
            let lhs = convolve(&x, &alphas[i], &alphas[j]).unwrap();
            let rhs = from_phi_data(&x, &prod).unwrap();
            check(lhs == rhs, &format!("α_{} ∗ α_{}", d.render(&a), f.render(&a)), &mut problems);
        }
    }
    verdict(problems, "7 elements; α_{[φ,e]} ∗ α_{[ψ,f]} = α_{[ψ,f][φ,e]} on all 49 pairs".into())
}

fn c7() -> Verdict {
    let g = product_groupoid(&points(2), &z2());
    let x = weakhopf_algebroid(&g);
    let c = classify_groupoid_algebra(&x, &g).unwrap();
    if c.report.all_pass() && c.brt.size() == 9 && c.brt.globals(&x).len() == 4 {
        return Pass("X×ℤ₂×X: 9 elements, commutative, 4 globals".into());
    }
    let bg = bundle();
    let bx = weakhopf_algebroid(&bg);
    let bc = classify_groupoid_algebra(&bx, &bg).unwrap();
    let rejected = c.f_rejection.as_ref().map(|r| r.to_string()).unwrap_or_default();
    let explained = c.f_size == 9
        && c.brt.complete
        && c.brt.size() == 1
        && c.brt.elements[0].is_zero()
        && c.f_rejection.is_some()
        && bc.report.all_pass()
        && bc.brt.size() == 9
        && bc.brt.globals(&bx).len() == 4;
    let msg = format!(
        "X×ℤ₂×X has |𝓕| = {} but Brt = {{0}} (complete enumeration); the 𝓕-maps are not multiplicative \
         across arrows between distinct objects ({rejected}); the stated classification holds for the \
         bundle ℤ₂⊔ℤ₂: |Brt| = {}, commutative inverse monoid ≅ 𝓕, {} globals",
        c.f_size,
        bc.brt.size(),
        bc.brt.globals(&bx).len(),
    );
    if explained {
        Explained(msg)
    } else {
        Fail(format!("unexpected: |Brt| = {}, failing {:?}", c.brt.size(), c.report.failing()))
    }
}

fn c8() -> Verdict {
    let mut problems = Vec::new();
    for q in [int(2), int(-1), ratio(3, 2)] {
        match torus_biretraction(q.clone(), int(1), 0, 2).unwrap() {
            TorusOutcome::Impossible(c) => check(c.holds(), &format!("q = {q}: certificate does not hold"), &mut problems),
            TorusOutcome::Exists(_) => problems.push(format!("q = {q}: biretraction produced")),
        }
    }
    for (qa, ta) in [(int(5), 3), (int(1), 0), (int(-2), 1)] {
        match torus_biretraction(int(1), qa.clone(), ta, 2).unwrap() {
            TorusOutcome::Exists(a) => {
                if let Some(w) = power_law_failure(&a, 5) {
                    problems.push(format!("({qa}, {ta}): {w}"));
                }
            }
            TorusOutcome::Impossible(_) => problems.push(format!("({qa}, {ta}) rejected at q = 1")),
        }
    }
    verdict(problems, "certificates for q = 2, −1, 3/2; α^k(V) = q_α^k U^{k t_α}, k ≤ 5".into())
}

fn c9() -> Verdict {
    let mut problems = Vec::new();
    let reports = [
        ("pair", check_hopf_algebroid(&pair(2))),
        ("repfun", check_hopf_algebroid(&repfun_transitive_algebroid(&points(2), &z2()).unwrap())),
        ("weakhopf", check_hopf_algebroid(&weakhopf_algebroid(&product_groupoid(&points(2), &z2())))),
        ("laurent", check_hopf_algebroid(&laurent_algebroid(&fun_algebra(&points(2)), 2))),
        ("torus q = 1", check_hopf_algebroid(&quantum_torus(int(1), 2).unwrap())),
        ("torus q = 2", check_hopf_algebroid(&quantum_torus(int(2), 2).unwrap())),
    ];
    for (name, r) in &reports {
        check(r.all_pass(), &format!("{name} fails {:?}", r.failing()), &mut problems);
    }
    let muts = mutations();
    check(muts.len() == 6, "mutation count", &mut problems);
    for m in &muts {
        let r = check_hopf_algebroid(&m.model);
        let caught = r.laws.iter().any(|l| l.witness().is_some());
        check(caught, &format!("{} not caught", m.name), &mut problems);
    }
    verdict(problems, format!("{} builder suites pass; {} mutations caught with witnesses", reports.len(), muts.len()))
}

fn c10(enumerated: &[(&'static str, FinAlgebroid, BrtSemigroup<usize>)]) -> Verdict {
    let mut problems = Vec::new();
    for want in ["pair 2", "weakhopf ℤ₂⊔ℤ₂"] {
        let (_, m, b) = enumerated.iter().find(|e| e.0 == want).unwrap();
        let r = check_qisg(&qisg_span(b).unwrap());
        check(r.all_pass(), &format!("{want}: span fails {:?}", r.laws.failing()), &mut problems);
        if let Some(w) = span_identity_failure(m, b) {
            problems.push(format!("{want}: {w}"));
        }
    }
    verdict(
        problems,
        "spans of the 7-element (pair) and 9-element (ℤ₂⊔ℤ₂, see criterion 7) monoids pass, span identity holds".into(),
    )
}

fn c11(enumerated: &[(&'static str, FinAlgebroid, BrtSemigroup<usize>)]) -> Verdict {
    let mut problems = Vec::new();
    let law = "integrand vanishes on balancing";
    for (name, m, b) in enumerated {
        let r = regular_monoid_report(m, b);
        check(r.get(law).is_some() && r.passed(law), &format!("{name}"), &mut problems);
    }

    let a = fun_algebra(&points(2));
    let l = laurent_algebroid(&a, 2);
    let mut alphas = Vec::new();
    for s in PartialBijection::all(2) {
        let d = PhiData::from_partial(&a, &s).unwrap();
        for p in [a.one(), [(0, int(2)), (1, int(3))].into_iter().collect::<Vector>()] {
            alphas.push(laurent_from_phi_data(&l, &d, &p).unwrap().0);
        }
    }
    for al in &alphas {
        for be in &alphas {
            if let Some(w) = integrand_failure(&l, |h, k| integrand(&l, al, be, h, k)) {
                problems.push(format!("laurent: {w}"));
            }
        }
    }

    let tori: Vec<TorusBiretraction> = [(int(5), 3), (int(1), 0), (int(-2), 1)]
        .into_iter()
        .map(|(qa, ta)| match torus_biretraction(int(1), qa, ta, 2).unwrap() {
            TorusOutcome::Exists(x) => x,
            TorusOutcome::Impossible(_) => unreachable!("q = 1"),
        })
        .collect();
    let t = quantum_torus(int(1), 2).unwrap();
    for al in &tori {
        for be in &tori {
            let f = |p: &(i64, i64), q: &(i64, i64)| be.apply(&t.mul_c(&t.t_c(&al.eval(p)), &Comb::basis(*q)));
            if let Some(w) = integrand_failure(&t, f) {
                problems.push(format!("torus: {w}"));
            }
        }
    }
    verdict(
        problems,
        format!(
            "{} finite models, {} Laurent pairs, {} torus pairs",
            enumerated.len(),
            alphas.len() * alphas.len(),
            tori.len() * tori.len()
        ),
    )
}

fn c12() -> Verdict {
    let mut problems = Vec::new();
    for k in [2, 3] {
        let g = FinGroup::cyclic(k);
        let p = partial_group_qisg(&g).unwrap();
        let q = qisg_from_inverse_semigroup(&exel_semigroup(&g).unwrap()).unwrap();
        if let Some(w) = same_structure(&p, &q) {
            problems.push(format!("ℤ{k}: {w}"));
        }
    }
    verdict(problems, "H_par(G) = 𝕜S(G) for ℤ₂, ℤ₃".into())
}

fn main() -> ExitCode {
    let start = Instant::now();
    let enumerated: Vec<_> = finite_models()
        .into_iter()
        .map(|(name, m)| {
            let b = enumerate_biretractions(&m).unwrap();
            (name, m, b)
        })
        .collect();
    let criteria: Vec<(&str, Box<dyn Fn() -> Verdict + '_>)> = vec![
        ("QISG axioms", Box::new(c1)),
        ("dimensions", Box::new(c2)),
        ("bisection semigroups", Box::new(c3)),
        ("regular monoid", Box::new(|| c4(&enumerated))),
        ("bisections ≅ biretractions", Box::new(c5)),
        ("[φ, e] classification", Box::new(c6)),
        ("groupoid-algebra classification", Box::new(c7)),
        ("quantum torus", Box::new(c8)),
        ("Hopf algebroid suites", Box::new(c9)),
        ("QISG span", Box::new(|| c10(&enumerated))),
        ("well-definedness", Box::new(|| c11(&enumerated))),
        ("cross-construction", Box::new(c12)),
    ];
    let (mut passed, mut unexplained) = (0, 0);
    for (i, (name, run)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let v = run();
        let ms = t.elapsed().as_millis();
        let (tag, detail) = match &v {
            Pass(d) => {
                passed += 1;
                ("PASS", d)
            }
            Explained(d) => ("FAIL", d),
            Fail(d) => {
                unexplained += 1;
                ("FAIL", d)
            }
        };
        println!("criterion {:>2} {tag} {name} ({ms} ms): {detail}", i + 1);
    }
    println!("acceptance: {passed}/{} pass, {unexplained} unexplained, {:.1} s", criteria.len(), start.elapsed().as_secs_f64());
    if unexplained == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
