use proptest::prelude::*;

use qisg_core::algebra::fun_algebra;
use qisg_core::algebroid::pair_algebroid;
use qisg_core::biretraction::{convolve_at, enumerate_biretractions, torus_biretraction, TorusOutcome};
use qisg_core::group::FinGroup;
use qisg_core::groupoid::{bisection_compose, bisection_star, enumerate_bisections, points, product_groupoid};
use qisg_core::linear::{format_scalar, int, parse_scalar, ratio, solve, Comb, Vector};
use qisg_core::semigroup::PartialBijection;

fn rook3() -> Vec<PartialBijection> {
    PartialBijection::all(3)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn scalar_round_trip(n in -10_000i64..10_000, d in 1i64..500) {
        let q = ratio(n, d);
        prop_assert_eq!(parse_scalar(&format_scalar(&q)).unwrap(), q);
    }

    #[test]
    fn decimal_matches_fraction(whole in 0u32..1000, frac in 0u32..1000) {
        let text = format!("{whole}.{frac:03}");
        prop_assert_eq!(parse_scalar(&text).unwrap(), ratio(whole as i64 * 1000 + frac as i64, 1000));
        let neg = parse_scalar(&format!("-{text}")).unwrap();
        prop_assert_eq!(neg, -ratio(whole as i64 * 1000 + frac as i64, 1000));
    }

    #[test]
    fn parse_scalar_never_panics(s in "\\PC{0,24}") {
        let _ = parse_scalar(&s);
    }

    #[test]
    fn solve_recovers_a_combination(cols in prop::collection::vec(prop::collection::vec(-5i64..6, 4), 1..4),
                                    coeffs in prop::collection::vec(-5i64..6, 3)) {
        let columns: Vec<Vector> = cols
            .iter()
            .map(|c| c.iter().enumerate().map(|(i, &v)| (i, int(v))).collect())
            .collect();
        let mut rhs = Vector::zero();
        for (c, k) in columns.iter().zip(&coeffs) {
            rhs.axpy(&int(*k), c);
        }
        let x = solve(&columns, &rhs).expect("rhs is in the span");
        let mut back = Vector::zero();
        for (j, c) in columns.iter().enumerate() {
            back.axpy(&x.coeff(&j), c);
        }
        prop_assert_eq!(back, rhs);
    }

    #[test]
    fn rook_monoid_laws(i in 0usize..34, j in 0usize..34, k in 0usize..34) {
        let all = rook3();
        let (a, b, c) = (&all[i], &all[j], &all[k]);
        prop_assert_eq!(a.compose(&b.compose(c)), a.compose(b).compose(c));
        prop_assert_eq!(a.compose(&a.inverse()).compose(a), a.clone());
    }

    #[test]
    fn bisections_form_an_inverse_semigroup(i in 0usize..17, j in 0usize..17, k in 0usize..17) {
        let g = product_groupoid(&points(2), &FinGroup::cyclic(2));
        let (bis, _) = enumerate_bisections(&g).unwrap();
        let (u, v, w) = (&bis[i], &bis[j], &bis[k]);
        prop_assert_eq!(
            bisection_compose(&g, u, &bisection_compose(&g, v, w)),
            bisection_compose(&g, &bisection_compose(&g, u, v), w)
        );
        let us = bisection_star(&g, u);
        prop_assert_eq!(bisection_compose(&g, &bisection_compose(&g, u, &us), u), u.clone());
        prop_assert_eq!(bisection_star(&g, &us), u.clone());
    }

    #[test]
    fn torus_convolution_matches_closed_form(qa in -4i64..5, ta in -2i64..3, qb in -4i64..5, tb in -2i64..3,
                                             n in -2i64..3, m in -2i64..3) {
        prop_assume!(qa != 0 && qb != 0);
        let get = |q, t| match torus_biretraction(int(1), int(q), t, 2).unwrap() {
            TorusOutcome::Exists(a) => a,
            TorusOutcome::Impossible(_) => unreachable!(),
        };
        let (a, b) = (get(qa, ta), get(qb, tb));
        let got = convolve_at(&a.torus, |p| a.eval(p), |p| b.eval(p), &(n, m));
        prop_assert_eq!(got, a.then(&b).eval(&(n, m)));
        prop_assert_eq!(a.eval(&(n, m)), Comb::term(n + ta * m, qisg_core::linear::pow(&int(qa), m)));
    }
}

#[test]
fn pair_three_biretraction_table_is_associative_with_involution() {
    let x = pair_algebroid(&fun_algebra(&points(3)));
    let b = enumerate_biretractions(&x).unwrap();
    let n = b.size();
    for i in 0..n {
        assert_eq!(b.star[b.star[i]], i);
        assert_eq!(b.table[b.table[i][b.star[i]]][i], i);
        for j in 0..n {
            assert_eq!(b.star[b.table[i][j]], b.table[b.star[j]][b.star[i]]);
            for k in 0..n {
                assert_eq!(b.table[b.table[i][j]][k], b.table[i][b.table[j][k]]);
            }
        }
    }
}
