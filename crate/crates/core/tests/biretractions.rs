use qisg_core::algebra::fun_algebra;
use qisg_core::algebroid::{laurent_algebroid, pair_algebroid, weakhopf_algebroid};
use qisg_core::biretraction::*;
use qisg_core::group::FinGroup;
use qisg_core::groupoid::{disjoint_union, points, product_groupoid, FinGroupoid};
use qisg_core::linear::{int, ratio, Vector};
use qisg_core::semigroup::{find_isomorphism, is_inverse, symmetric_inverse_monoid, Inverseness, PartialBijection};

#[test]
fn pair_monoids_are_rook_monoids() {
    // Brt of the pair algebroid is anti-isomorphic to I(X); I(X) is isomorphic
    // to its opposite via inversion, so an isomorphism must exist.
    for n in [2, 3] {
        let x = pair_algebroid(&fun_algebra(&points(n)));
        let b = enumerate_biretractions(&x).unwrap();
        let (ix, _) = symmetric_inverse_monoid(n).unwrap();
        let s = b.semigroup().unwrap();
        assert_eq!(s.size(), ix.size());
        assert!(find_isomorphism(&s, &ix).is_some(), "|X| = {n}");
        assert!(matches!(is_inverse(&s), Inverseness::Inverse { .. }));
    }
}

#[test]
fn bundle_globals_are_klein_four() {
    let z2 = FinGroupoid::from_group(&FinGroup::cyclic(2));
    let x = weakhopf_algebroid(&disjoint_union(&z2, &z2));
    let b = enumerate_biretractions(&x).unwrap();
    let globals = b.globals(&x);
    assert_eq!(globals.len(), 4);
    let unit = b.unit.unwrap();
    for &g in &globals {
        assert_eq!(b.table[g][g], unit);
        for &h in &globals {
            assert!(globals.contains(&b.table[g][h]));
        }
    }
}

#[test]
fn product_groupoid_f_maps_break_multiplicativity() {
    let g = product_groupoid(&points(2), &FinGroup::cyclic(2));
    let x = weakhopf_algebroid(&g);
    let c = classify_groupoid_algebra(&x, &g).unwrap();
    assert_eq!(c.f_size, 9);
    assert_eq!(c.brt.size(), 1);
    let r = c.f_rejection.unwrap();
    assert_eq!(r.law, "multiplicative");
    assert_eq!(r.witness.at, "(2,0,1)·(1,0,2)");
}

#[test]
fn laurent_convolution_multiplies_weights() {
    let a = fun_algebra(&points(2));
    let l = laurent_algebroid(&a, 2);
    let id = PhiData::from_partial(&a, &PartialBijection::identity(2)).unwrap();
    let p: Vector = [(0, int(2)), (1, int(3))].into_iter().collect();
    let q: Vector = [(0, int(5)), (1, ratio(-1, 2))].into_iter().collect();
    let (alpha, _) = laurent_from_phi_data(&l, &id, &p).unwrap();
    let (beta, _) = laurent_from_phi_data(&l, &id, &q).unwrap();
    let pq: Vector = [(0, int(10)), (1, ratio(-3, 2))].into_iter().collect();
    let (want, _) = laurent_from_phi_data(&l, &id, &pq).unwrap();
    assert_eq!(convolve(&l, &alpha, &beta).unwrap(), want);
}

#[test]
fn torus_certificate_steps_name_q() {
    let TorusOutcome::Impossible(c) = torus_biretraction(ratio(3, 2), int(1), 0, 2).unwrap() else {
        panic!("q = 3/2 admits no biretraction");
    };
    assert!(c.holds());
    assert_eq!(c.steps[0], "UV = 3/2·VU in T_q");
    // α(V) = 1: residual is (1 − 3/2)U
    assert_eq!(c.residual, qisg_core::linear::Comb::term(1, ratio(-1, 2)));
}
