use proptest::prelude::*;
use wreathlab::linalg::{int, rat, split_idempotent};
use wreathlab::wdl::{check_wdl, check_wdl_alt, check_wdl_multiplicative, psibar, weak_wreath};
use wreathlab::{Algebra, Mat, Scalar};

fn small_mat(rows: usize, cols: usize) -> impl Strategy<Value = Mat> {
    prop::collection::vec(-3i64..=3, rows * cols)
        .prop_map(move |v| Mat::from_fn(rows, cols, |i, j| int(v[i * cols + j])))
}

fn unit_triangular(n: usize, upper: bool) -> impl Strategy<Value = Mat> {
    prop::collection::vec(-2i64..=2, n * n).prop_map(move |v| {
        Mat::from_fn(n, n, |i, j| match (i == j, (i < j) == upper) {
            (true, _) => int(1),
            (false, true) => int(v[i * n + j]),
            (false, false) => int(0),
        })
    })
}

/// Idempotent multiplicative endomorphisms of small algebras.
fn pool() -> Vec<(Algebra, Vec<Mat>)> {
    let h = rat(1, 2);
    let kk = Algebra::diagonal(2);
    let kk_maps = vec![
        Mat::identity(2),
        Mat::zeros(2, 2),
        Mat::from_ints(&[&[1, 0], &[1, 0]]),
        Mat::from_ints(&[&[0, 1], &[0, 1]]),
        Mat::from_ints(&[&[1, 0], &[0, 0]]),
        Mat::from_ints(&[&[0, 0], &[0, 1]]),
    ];
    let z2 = Algebra::group_z2();
    let z2_maps = vec![
        Mat::identity(2),
        Mat::zeros(2, 2),
        Mat::from_ints(&[&[1, 1], &[0, 0]]),
        Mat::from_ints(&[&[1, -1], &[0, 0]]),
        Mat::from_rows(vec![vec![h.clone(), h.clone()], vec![h.clone(), h]]).unwrap(),
    ];
    let k = Algebra::ground();
    let k_maps = vec![Mat::identity(1), Mat::zeros(1, 1)];
    vec![(kk, kk_maps), (z2, z2_maps), (k, k_maps)]
}

fn law_choice() -> impl Strategy<Value = (usize, usize, usize, usize)> {
    (0usize..3, 0usize..3, 0usize..6, 0usize..6)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn kron_is_functorial(
        a in small_mat(2, 3), c in small_mat(3, 2),
        b in small_mat(2, 2), d in small_mat(2, 1),
    ) {
        let lhs = a.kron(&b).compose(&c.kron(&d)).unwrap();
        let rhs = a.compose(&c).unwrap().kron(&b.compose(&d).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn flip_is_an_involution_and_natural(m in 1usize..4, n in 1usize..4, x in small_mat(2, 2), y in small_mat(3, 3)) {
        let f = Mat::flip(m, n);
        prop_assert!(Mat::flip(n, m).compose(&f).unwrap().is_identity());
        let natural_l = Mat::flip(2, 3).compose(&x.kron(&y)).unwrap();
        let natural_r = y.kron(&x).compose(&Mat::flip(2, 3)).unwrap();
        prop_assert_eq!(natural_l, natural_r);
    }

    #[test]
    fn splitting_contracts(l in unit_triangular(4, false), u in unit_triangular(4, true), r in 0usize..=4) {
        let s = l.compose(&u).unwrap();
        let s_inv = s.solve(&Mat::identity(4)).unwrap();
        let d = Mat::from_fn(4, 4, |i, j| int(i64::from(i == j && i < r)));
        let e = Mat::chain(&[&s_inv, &d, &s]).unwrap();
        let sp = split_idempotent(&e).unwrap();
        prop_assert_eq!(sp.rank(), r);
        prop_assert!(sp.proj.compose(&sp.incl).unwrap().is_identity());
        prop_assert_eq!(sp.incl.compose(&sp.proj).unwrap(), e);
    }

    #[test]
    fn weak_unit_matches_split_form((ia, ib, fa, fb) in law_choice()) {
        let p = pool();
        let (a, amaps) = &p[ia];
        let (b, bmaps) = &p[ib];
        let alpha = &amaps[fa % amaps.len()];
        let beta = &bmaps[fb % bmaps.len()];
        let psi = beta.kron(alpha).compose(&Mat::flip(a.dim(), b.dim())).unwrap();
        prop_assert!(check_wdl_multiplicative(a, b, &psi).passed());
        let d3 = check_wdl(a, b, &psi).get("weak unit").unwrap().passed;
        prop_assert_eq!(d3, check_wdl_alt(a, b, &psi).passed());
    }

    #[test]
    fn valid_laws_split_into_wreath_products((ia, ib, fa, fb) in law_choice()) {
        let p = pool();
        let (a, amaps) = &p[ia];
        let (b, bmaps) = &p[ib];
        let psi = bmaps[fb % bmaps.len()]
            .kron(&amaps[fa % amaps.len()])
            .compose(&Mat::flip(a.dim(), b.dim()))
            .unwrap();
        let w = wreathlab::Wdl::new(a.clone(), b.clone(), psi).unwrap();
        prop_assume!(check_wdl(a, b, &w.psi).passed());
        let pb = psibar(&w).unwrap();
        prop_assert_eq!(pb.compose(&pb).unwrap(), pb.clone());
        let wr = weak_wreath(&w).unwrap();
        prop_assert_eq!(wr.product.dim(), pb.rank());
        prop_assert!(wr.product.validate().passed());
    }

    #[test]
    fn scalar_text_roundtrip(n in -50i64..50, d in 1i64..50) {
        let x: Scalar = rat(n, d);
        let s = wreathlab::linalg::format_scalar(&x);
        prop_assert_eq!(wreathlab::linalg::parse_scalar(&s), Some(x));
    }
}

#[test]
fn law_pool_exercises_both_outcomes() {
    let p = pool();
    let mut seen = (false, false);
    for (a, amaps) in &p {
        for (b, bmaps) in &p {
            for alpha in amaps {
                for beta in bmaps {
                    let psi = beta.kron(alpha).compose(&Mat::flip(a.dim(), b.dim())).unwrap();
                    let d3 = check_wdl(a, b, &psi).get("weak unit").unwrap().passed;
                    assert_eq!(d3, check_wdl_alt(a, b, &psi).passed());
                    if d3 {
                        seen.0 = true
                    } else {
                        seen.1 = true
                    }
                }
            }
        }
    }
    assert_eq!(seen, (true, true));
}
