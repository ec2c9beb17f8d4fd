use std::cell::{OnceCell, RefCell};
use std::collections::BTreeMap;

use super::{Algebroid, AlgebroidExt, Mode, Pair, Side};
use crate::linear::Echelon;
use crate::linear::Comb;
use crate::report::{first_failure, LawReport, Witness};

type Triple<K> = Comb<(K, K, K)>;

/// Balancing spans of a model, built lazily over its window.
pub struct Balancer<'a, M: Algebroid> {
    m: &'a M,
    pairs: [OnceCell<Echelon<(M::Key, M::Key)>>; 2],
    triples: RefCell<BTreeMap<(u8, u8), Echelon<(M::Key, M::Key, M::Key)>>>,
}

fn idx(side: Side) -> usize {
    match side {
        Side::Left => 0,
        Side::Right => 1,
    }
}

impl<'a, M: Algebroid> Balancer<'a, M> {
    pub fn new(m: &'a M) -> Self {
        Balancer { m, pairs: [OnceCell::new(), OnceCell::new()], triples: RefCell::new(BTreeMap::new()) }
    }

    /// `s(a)h ⊗ k − h ⊗ t(a)k` (left) or `h s(a) ⊗ k − h ⊗ k t(a)` (right).
    pub fn generator(&self, side: Side, h: &M::Key, k: &M::Key, a: &M::Base) -> Pair<M::Key> {
        let m = self.m;
        let (h, k) = (Comb::basis(h.clone()), Comb::basis(k.clone()));
        let (sa, ta) = (m.source(a), m.target(a));
        match side {
            Side::Left => &m.mul_c(&sa, &h).tensor(&k) - &h.tensor(&m.mul_c(&ta, &k)),
            Side::Right => &m.mul_c(&h, &sa).tensor(&k) - &h.tensor(&m.mul_c(&k, &ta)),
        }
    }

    /// Every generator whose terms stay inside the window.
    pub fn generators(&self, side: Side) -> Vec<Pair<M::Key>> {
        let m = self.m;
        let basis = m.basis();
        let base = m.base_basis();
        let mut out = Vec::new();
        for h in &basis {
            for k in &basis {
                for a in &base {
                    let g = self.generator(side, h, k, a);
                    if !g.is_zero() && g.keys().all(|(x, y)| m.in_window(x) && m.in_window(y)) {
                        out.push(g);
                    }
                }
            }
        }
        out
    }

    fn echelon(&self, side: Side) -> &Echelon<(M::Key, M::Key)> {
        self.pairs[idx(side)].get_or_init(|| Echelon::from_vectors(self.generators(side).iter()))
    }

    /// Rank of the balancing span over the window.
    pub fn rank(&self, side: Side) -> usize {
        self.echelon(side).rank()
    }

    /// Canonical representative of the class of `x` in `H ⊗_A H`.
    pub fn reduce(&self, side: Side, x: &Pair<M::Key>) -> Pair<M::Key> {
        match self.m.balanced_normal_form(side, x) {
            Some(nf) => nf,
            None => self.echelon(side).reduce(x),
        }
    }

    pub fn equivalent(&self, side: Side, x: &Pair<M::Key>, y: &Pair<M::Key>) -> bool {
        x == y || self.reduce(side, &(x - y)).is_zero()
    }

    /// Equality in `H ⊗_A H ⊗_A H`, balancing slots 1–2 by `s12` and 2–3 by `s23`.
    pub fn equivalent3(&self, s12: Side, s23: Side, x: &Triple<M::Key>, y: &Triple<M::Key>) -> bool {
        if x == y {
            return true;
        }
        let key = (idx(s12) as u8, idx(s23) as u8);
        let mut cache = self.triples.borrow_mut();
        let ech = cache.entry(key).or_insert_with(|| {
            let basis = self.m.basis();
            let base = self.m.base_basis();
            let mut e = Echelon::new();
            for h in &basis {
                for k in &basis {
                    for l in &basis {
                        for a in &base {
                            let g12 = self.generator(s12, h, k, a).relabel(|(u, v)| (u.clone(), v.clone(), l.clone()));
                            let g23 = self.generator(s23, k, l, a).relabel(|(u, v)| (h.clone(), u.clone(), v.clone()));
                            for g in [g12, g23] {
                                if !g.is_zero() && g.keys().all(|(u, v, w)| self.m.in_window(u) && self.m.in_window(v) && self.m.in_window(w)) {
                                    e.insert(&g);
                                }
                            }
                        }
                    }
                }
            }
            e
        });
        ech.reduce(&(x - y)).is_zero()
    }
}

fn wit(at: String, lhs: String, rhs: String) -> Option<Witness> {
    Some(Witness { at, lhs, rhs })
}

/// Axioms of a Hopf algebroid, basis-elementwise over the model's window.
pub fn check_hopf_algebroid<M: Algebroid>(m: &M) -> LawReport {
    let bal = Balancer::new(m);
    let basis = m.basis();
    let base = m.base_basis();
    let e = |k: &M::Key| Comb::basis(k.clone());
    let lbl = |k: &M::Key| m.key_label(k);
    let pairs: Vec<(M::Key, M::Key)> = basis
        .iter()
        .flat_map(|h| basis.iter().map(move |k| (h.clone(), k.clone())))
        .filter(|(h, k)| m.window_support(&m.mul(h, k)))
        .collect();
    let mut r = LawReport::new();

    // total algebra
    r.record(
        "associative",
        first_failure(basis.iter(), |x| {
            pairs.iter().find_map(|(y, z)| {
                let xy = m.mul(x, y);
                if !m.window_support(&xy) {
                    return None;
                }
                let lhs = m.mul_c(&xy, &e(z));
                let rhs = m.mul_c(&e(x), &m.mul(y, z));
                (lhs != rhs).then(|| Witness { at: format!("({}, {}, {})", lbl(x), lbl(y), lbl(z)), lhs: m.render(&lhs), rhs: m.render(&rhs) })
            })
        }),
    );
    let one = m.one();
    r.record(
        "unital",
        first_failure(basis.iter(), |h| {
            let (l, rr) = (m.mul_c(&one, &e(h)), m.mul_c(&e(h), &one));
            (l != e(h) || rr != e(h)).then(|| Witness { at: lbl(h), lhs: m.render(&l), rhs: m.render(&rr) })
        }),
    );

    // source and target
    let a1 = m.base_one();
    r.record(
        "s, t unital",
        if m.s_c(&a1) != one || m.t_c(&a1) != one {
            wit("1_A".into(), m.render(&m.s_c(&a1)), m.render(&m.t_c(&a1)))
        } else {
            None
        },
    );
    let base_pairs: Vec<(M::Base, M::Base)> = base.iter().flat_map(|a| base.iter().map(move |b| (a.clone(), b.clone()))).collect();
    r.record(
        "s multiplicative",
        first_failure(base_pairs.iter(), |(a, b)| {
            let lhs = m.s_c(&m.base_mul(a, b));
            let rhs = m.mul_c(&m.source(a), &m.source(b));
            (lhs != rhs).then(|| Witness { at: format!("({}, {})", m.base_label(a), m.base_label(b)), lhs: m.render(&lhs), rhs: m.render(&rhs) })
        }),
    );
    r.record(
        "t multiplicative and antimultiplicative",
        first_failure(base_pairs.iter(), |(a, b)| {
            let lhs = m.t_c(&m.base_mul(a, b));
            let ab = m.mul_c(&m.target(a), &m.target(b));
            let ba = m.mul_c(&m.target(b), &m.target(a));
            (lhs != ab || lhs != ba).then(|| Witness {
                at: format!("({}, {})", m.base_label(a), m.base_label(b)),
                lhs: m.render(&lhs),
                rhs: format!("{} | {}", m.render(&ab), m.render(&ba)),
            })
        }),
    );
    r.record(
        "s(a)t(b) = t(b)s(a)",
        first_failure(base_pairs.iter(), |(a, b)| {
            let lhs = m.mul_c(&m.source(a), &m.target(b));
            let rhs = m.mul_c(&m.target(b), &m.source(a));
            (lhs != rhs).then(|| Witness { at: format!("({}, {})", m.base_label(a), m.base_label(b)), lhs: m.render(&lhs), rhs: m.render(&rhs) })
        }),
    );

    let sides: &[(Side, &str)] = match m.mode() {
        Mode::Commutative => &[(Side::Right, "")],
        Mode::Restricted => &[(Side::Left, "_l"), (Side::Right, "_r")],
    };
    for &(side, sub) in sides {
        let delta = |h: &Comb<M::Key>| m.delta_c(side, h);
        let eps = |h: &Comb<M::Key>| match side {
            Side::Left => m.eps_l_c(h),
            Side::Right => m.eps_r_c(h),
        };
        let on_left = |c: &Comb<M::Key>, x: &Pair<M::Key>| -> Pair<M::Key> {
            x.map_basis(|(p, q)| m.mul_c(c, &e(p)).tensor(&e(q)))
        };
        let on_right = |x: &Pair<M::Key>, c: &Comb<M::Key>| -> Pair<M::Key> {
            x.map_basis(|(p, q)| e(p).tensor(&m.mul_c(&e(q), c)))
        };
        let first_times = |x: &Pair<M::Key>, c: &Comb<M::Key>| -> Pair<M::Key> {
            x.map_basis(|(p, q)| m.mul_c(&e(p), c).tensor(&e(q)))
        };
        let second_left = |c: &Comb<M::Key>, x: &Pair<M::Key>| -> Pair<M::Key> {
            x.map_basis(|(p, q)| e(p).tensor(&m.mul_c(c, &e(q))))
        };

        // Δ lands in the Takeuchi product
        r.record(
            &format!("Δ{sub} Takeuchi"),
            first_failure(basis.iter(), |h| {
                base.iter().find_map(|a| {
                    let d = delta(&e(h));
                    let (lhs, rhs) = match side {
                        Side::Left => (first_times(&d, &m.source(a)), on_right(&d, &m.target(a))),
                        Side::Right => (on_left(&m.source(a), &d), second_left(&m.target(a), &d)),
                    };
                    (!bal.equivalent(side, &lhs, &rhs)).then(|| Witness {
                        at: format!("({}, {})", lbl(h), m.base_label(a)),
                        lhs: m.render_pair(&lhs),
                        rhs: m.render_pair(&rhs),
                    })
                })
            }),
        );

        r.record(
            &format!("Δ{sub} A-bilinear"),
            first_failure(basis.iter(), |h| {
                base.iter().find_map(|a| {
                    let (sa, ta) = (m.source(a), m.target(a));
                    let d = delta(&e(h));
                    let cases = match side {
                        Side::Left => [(m.mul_c(&ta, &e(h)), on_left(&ta, &d)), (m.mul_c(&sa, &e(h)), second_left(&sa, &d))],
                        Side::Right => [(m.mul_c(&e(h), &ta), first_times(&d, &ta)), (m.mul_c(&e(h), &sa), on_right(&d, &sa))],
                    };
                    cases.into_iter().find_map(|(x, rhs)| {
                        if !m.window_support(&x) {
                            return None;
                        }
                        let lhs = delta(&x);
                        (!bal.equivalent(side, &lhs, &rhs)).then(|| Witness {
                            at: format!("({}, {})", lbl(h), m.base_label(a)),
                            lhs: m.render_pair(&lhs),
                            rhs: m.render_pair(&rhs),
                        })
                    })
                })
            }),
        );

        r.record(
            &format!("Δ{sub} coassociative"),
            first_failure(basis.iter(), |h| {
                let d = delta(&e(h));
                let lhs: Triple<M::Key> = d.map_basis(|(p, q)| delta(&e(p)).relabel(|(u, v)| (u.clone(), v.clone(), q.clone())));
                let rhs: Triple<M::Key> = d.map_basis(|(p, q)| delta(&e(q)).relabel(|(u, v)| (p.clone(), u.clone(), v.clone())));
                (!bal.equivalent3(side, side, &lhs, &rhs)).then(|| Witness {
                    at: lbl(h),
                    lhs: lhs.render(|(a, b, c)| format!("{}⊗{}⊗{}", lbl(a), lbl(b), lbl(c))),
                    rhs: rhs.render(|(a, b, c)| format!("{}⊗{}⊗{}", lbl(a), lbl(b), lbl(c))),
                })
            }),
        );

        r.record(
            &format!("Δ{sub} multiplicative"),
            first_failure(pairs.iter(), |(h, k)| {
                let lhs = delta(&m.mul(h, k));
                let rhs = m.pair_mul(&delta(&e(h)), &delta(&e(k)));
                (!bal.equivalent(side, &lhs, &rhs)).then(|| Witness {
                    at: format!("({}, {})", lbl(h), lbl(k)),
                    lhs: m.render_pair(&lhs),
                    rhs: m.render_pair(&rhs),
                })
            }),
        );

        let d1 = delta(&one);
        let oo = one.tensor(&one);
        r.record(
            &format!("Δ{sub}(1) = 1⊗1"),
            (!bal.equivalent(side, &d1, &oo)).then(|| Witness { at: "1".into(), lhs: m.render_pair(&d1), rhs: m.render_pair(&oo) }),
        );

        r.record(
            &format!("ε{sub} counit"),
            first_failure(basis.iter(), |h| {
                let d = delta(&e(h));
                let (x, y) = match side {
                    Side::Left => (
                        d.map_basis(|(p, q)| m.mul_c(&m.t_c(&eps(&e(p))), &e(q))),
                        d.map_basis(|(p, q)| m.mul_c(&m.s_c(&eps(&e(q))), &e(p))),
                    ),
                    Side::Right => (
                        d.map_basis(|(p, q)| m.mul_c(&e(p), &m.s_c(&eps(&e(q))))),
                        d.map_basis(|(p, q)| m.mul_c(&e(q), &m.t_c(&eps(&e(p))))),
                    ),
                };
                (x != e(h) || y != e(h)).then(|| Witness { at: lbl(h), lhs: m.render(&x), rhs: m.render(&y) })
            }),
        );

        r.record(
            &format!("ε{sub} A-bilinear"),
            first_failure(basis.iter(), |h| {
                base.iter().find_map(|a| {
                    let (sa, ta) = (m.source(a), m.target(a));
                    let ea = Comb::basis(a.clone());
                    let eh = eps(&e(h));
                    let cases = match side {
                        Side::Left => [(m.mul_c(&ta, &e(h)), m.base_mul_c(&ea, &eh)), (m.mul_c(&sa, &e(h)), m.base_mul_c(&eh, &ea))],
                        Side::Right => [(m.mul_c(&e(h), &ta), m.base_mul_c(&ea, &eh)), (m.mul_c(&e(h), &sa), m.base_mul_c(&eh, &ea))],
                    };
                    cases.into_iter().find_map(|(x, rhs)| {
                        let lhs = eps(&x);
                        (lhs != rhs).then(|| Witness {
                            at: format!("({}, {})", lbl(h), m.base_label(a)),
                            lhs: m.render_base(&lhs),
                            rhs: m.render_base(&rhs),
                        })
                    })
                })
            }),
        );

        let e1 = eps(&one);
        r.record(
            &format!("ε{sub}(1) = 1"),
            (e1 != a1).then(|| Witness { at: "1".into(), lhs: m.render_base(&e1), rhs: m.render_base(&a1) }),
        );

        r.record(
            &format!("ε{sub}(hk) via source and target"),
            first_failure(pairs.iter(), |(h, k)| {
                let lhs = eps(&m.mul(h, k));
                let (x, y) = match side {
                    Side::Left => {
                        let ek = eps(&e(k));
                        (eps(&m.mul_c(&e(h), &m.t_c(&ek))), eps(&m.mul_c(&e(h), &m.s_c(&ek))))
                    }
                    Side::Right => {
                        let eh = eps(&e(h));
                        (eps(&m.mul_c(&m.s_c(&eh), &e(k))), eps(&m.mul_c(&m.t_c(&eh), &e(k))))
                    }
                };
                (lhs != x || lhs != y).then(|| Witness {
                    at: format!("({}, {})", lbl(h), lbl(k)),
                    lhs: m.render_base(&lhs),
                    rhs: format!("{} | {}", m.render_base(&x), m.render_base(&y)),
                })
            }),
        );
    }

    // compatibility of the two sides
    r.record(
        "ε∘s, ε∘t retract",
        first_failure(base.iter(), |a| {
            let (sa, ta) = (m.source(a), m.target(a));
            let checks = [
                (m.t_c(&m.eps_l_c(&ta)), ta.clone()),
                (m.s_c(&m.eps_l_c(&sa)), sa.clone()),
                (m.s_c(&m.eps_r_c(&sa)), sa.clone()),
                (m.t_c(&m.eps_r_c(&ta)), ta.clone()),
            ];
            checks.into_iter().find_map(|(lhs, rhs)| (lhs != rhs).then(|| Witness { at: m.base_label(a), lhs: m.render(&lhs), rhs: m.render(&rhs) }))
        }),
    );
    if m.mode() == Mode::Restricted {
        let mixed = |outer: Side, inner: Side, h: &M::Key| -> Option<Witness> {
            // (Δ_inner ⊗ H)∘Δ_outer against (H ⊗ Δ_outer)∘Δ_inner
            let lhs: Triple<M::Key> = m
                .delta_c(outer, &e(h))
                .map_basis(|(p, q)| m.delta_c(inner, &e(p)).relabel(|(u, v)| (u.clone(), v.clone(), q.clone())));
            let rhs: Triple<M::Key> = m
                .delta_c(inner, &e(h))
                .map_basis(|(p, q)| m.delta_c(outer, &e(q)).relabel(|(u, v)| (p.clone(), u.clone(), v.clone())));
            (!bal.equivalent3(inner, outer, &lhs, &rhs)).then(|| Witness {
                at: lbl(h),
                lhs: lhs.render(|(a, b, c)| format!("{}⊗{}⊗{}", lbl(a), lbl(b), lbl(c))),
                rhs: rhs.render(|(a, b, c)| format!("{}⊗{}⊗{}", lbl(a), lbl(b), lbl(c))),
            })
        };
        r.record("(Δ_l⊗H)Δ_r = (H⊗Δ_r)Δ_l", first_failure(basis.iter(), |h| mixed(Side::Right, Side::Left, h)));
        r.record("(Δ_r⊗H)Δ_l = (H⊗Δ_l)Δ_r", first_failure(basis.iter(), |h| mixed(Side::Left, Side::Right, h)));
    }

    // antipode
    r.record(
        "S antimultiplicative",
        first_failure(pairs.iter(), |(h, k)| {
            let lhs = m.antipode_c(&m.mul(h, k));
            let rhs = m.mul_c(&m.antipode(k), &m.antipode(h));
            (lhs != rhs).then(|| Witness { at: format!("({}, {})", lbl(h), lbl(k)), lhs: m.render(&lhs), rhs: m.render(&rhs) })
        }),
    );
    r.record(
        "S∘s = t, S∘t = s",
        first_failure(base.iter(), |a| {
            let (ss, st) = (m.antipode_c(&m.source(a)), m.antipode_c(&m.target(a)));
            (ss != m.target(a) || st != m.source(a)).then(|| Witness {
                at: m.base_label(a),
                lhs: format!("{} | {}", m.render(&ss), m.render(&st)),
                rhs: format!("{} | {}", m.render(&m.target(a)), m.render(&m.source(a))),
            })
        }),
    );
    r.record(
        "S(s(a)h t(b)) = s(b)S(h)t(a)",
        first_failure(basis.iter(), |h| {
            base.iter().find_map(|a| {
                let (sa, ta) = (m.source(a), m.target(a));
                let cases = [
                    (m.mul_c(&sa, &e(h)), m.mul_c(&m.antipode(h), &ta)),
                    (m.mul_c(&e(h), &ta), m.mul_c(&sa, &m.antipode(h))),
                ];
                cases.into_iter().find_map(|(x, rhs)| {
                    let lhs = m.antipode_c(&x);
                    (lhs != rhs).then(|| Witness { at: format!("({}, {})", lbl(h), m.base_label(a)), lhs: m.render(&lhs), rhs: m.render(&rhs) })
                })
            })
        }),
    );
    let (name_sl, name_sr) = match m.mode() {
        Mode::Commutative => ("S(h₍₁₎)h₍₂₎ = s(ε(h))", "h₍₁₎S(h₍₂₎) = t(ε(h))"),
        Mode::Restricted => ("S(h₍₁₎)h₍₂₎ = s(ε_r(h))", "h⁽¹⁾S(h⁽²⁾) = t(ε_l(h))"),
    };
    r.record(
        name_sl,
        first_failure(basis.iter(), |h| {
            let lhs = m.delta_c(Side::Left, &e(h)).map_basis(|(p, q)| m.mul_c(&m.antipode(p), &e(q)));
            let rhs = m.s_c(&m.eps_r(h));
            (lhs != rhs).then(|| Witness { at: lbl(h), lhs: m.render(&lhs), rhs: m.render(&rhs) })
        }),
    );
    r.record(
        name_sr,
        first_failure(basis.iter(), |h| {
            let lhs = m.delta_c(Side::Right, &e(h)).map_basis(|(p, q)| m.mul_c(&e(p), &m.antipode(q)));
            let rhs = m.t_c(&m.eps_l(h));
            (lhs != rhs).then(|| Witness { at: lbl(h), lhs: m.render(&lhs), rhs: m.render(&rhs) })
        }),
    );

    match m.mode() {
        Mode::Restricted => {
            r.record(
                "ε_l∘S = ε_r, ε_r∘S = ε_l",
                first_failure(basis.iter(), |h| {
                    let sh = m.antipode(h);
                    let (x, y) = (m.eps_l_c(&sh), m.eps_r_c(&sh));
                    (x != m.eps_r(h) || y != m.eps_l(h)).then(|| Witness {
                        at: lbl(h),
                        lhs: format!("{} | {}", m.render_base(&x), m.render_base(&y)),
                        rhs: format!("{} | {}", m.render_base(&m.eps_r(h)), m.render_base(&m.eps_l(h))),
                    })
                }),
            );
        }
        Mode::Commutative => {
            r.record(
                "H commutative",
                first_failure(pairs.iter(), |(h, k)| {
                    let (x, y) = (m.mul(h, k), m.mul(k, h));
                    (x != y).then(|| Witness { at: format!("({}, {})", lbl(h), lbl(k)), lhs: m.render(&x), rhs: m.render(&y) })
                }),
            );
            r.record(
                "ε multiplicative",
                first_failure(pairs.iter(), |(h, k)| {
                    let lhs = m.eps_l_c(&m.mul(h, k));
                    let rhs = m.base_mul_c(&m.eps_l(h), &m.eps_l(k));
                    (lhs != rhs).then(|| Witness { at: format!("({}, {})", lbl(h), lbl(k)), lhs: m.render_base(&lhs), rhs: m.render_base(&rhs) })
                }),
            );
            let twice = |h: &M::Key| -> Triple<M::Key> {
                m.delta_l(h).map_basis(|(p, q)| m.delta_l(p).relabel(|(u, v)| (u.clone(), v.clone(), q.clone())))
            };
            r.record(
                "h₍₁₎S(h₍₂₎)h₍₃₎ = h",
                first_failure(basis.iter(), |h| {
                    let lhs = twice(h).map_basis(|(a, b, c)| m.mul_c(&m.mul_c(&e(a), &m.antipode(b)), &e(c)));
                    (lhs != e(h)).then(|| Witness { at: lbl(h), lhs: m.render(&lhs), rhs: lbl(h) })
                }),
            );
            r.record(
                "S(h₍₁₎)h₍₂₎S(h₍₃₎) = S(h)",
                first_failure(basis.iter(), |h| {
                    let lhs = twice(h).map_basis(|(a, b, c)| m.mul_c(&m.mul_c(&m.antipode(a), &e(b)), &m.antipode(c)));
                    let rhs = m.antipode(h);
                    (lhs != rhs).then(|| Witness { at: lbl(h), lhs: m.render(&lhs), rhs: m.render(&rhs) })
                }),
            );
        }
    }
    r
}
