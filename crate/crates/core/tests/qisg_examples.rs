use qisg_core::group::FinGroup;
use qisg_core::qisg::*;
use qisg_core::semigroup::symmetric_inverse_monoid;

#[test]
fn hadamard_three() {
    let q = hadamard_qisg(3).unwrap();
    assert_eq!(q.dim(), 34);
    let r = check_qisg(&q);
    assert!(r.all_pass(), "{}", r.laws);
    assert!(hadamard_relations_hold(&q, 3).report.all_pass());
}

#[test]
fn rook_monoids() {
    for n in 1..=2 {
        let (s, _) = symmetric_inverse_monoid(n).unwrap();
        assert!(check_qisg(&qisg_from_inverse_semigroup(&s).unwrap()).all_pass());
    }
}

#[test]
fn weak_hopf_three() {
    let w = matrix_weak_hopf(3);
    assert!(check_weak_hopf(&w).all_pass());
    assert!(check_qisg(&qisg_from_weak_hopf(&w).unwrap()).all_pass());
    assert!(check_qisg(&hopf_category_alg(&trivial_hopf_category(3)).unwrap()).all_pass());
}

#[test]
fn z2xz2_partial() {
    let g = FinGroup::parse("Z2xZ2").unwrap();
    assert!(check_qisg(&partial_group_qisg(&g).unwrap()).all_pass());
}
