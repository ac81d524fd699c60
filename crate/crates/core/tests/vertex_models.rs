use fusion_sos::elevenvertex::{psi_const, r11v, shift_one, similarity_fused};
use fusion_sos::exactcore::scalar::{int, q};
use fusion_sos::fusion::{fuse_n1, fuse_nm, symmetrizer};
use fusion_sos::polyrep::{gamma_poly, intertwiner_poly, star_triangle_check};
use fusion_sos::vertex::{check_degeneracy, check_ybe_triple, permutation_op, r7v};
use fusion_sos::{Matrix, ModelParams, Poly, Scalar};
use proptest::prelude::*;

fn rat() -> impl Strategy<Value = Scalar> {
    (-40i64..=40, 1i64..=11).prop_map(|(p, d)| q(p, d))
}

fn alpha() -> impl Strategy<Value = Scalar> {
    rat().prop_filter("nonzero", |a| *a != int(0))
}

fn p1() -> ModelParams {
    ModelParams::new(int(1), q(1, 2), q(1, 2)).unwrap()
}

#[test]
fn seven_vertex_at_special_points() {
    let p = p1();
    assert_eq!(r7v(&int(0), &p), Matrix::from_i64(&[&[1, 0, 0, 0], &[0, 0, 1, 0], &[0, 1, 0, 0], &[0, 0, 0, 1]]));
    assert_eq!(
        r7v(&int(-1), &p),
        Matrix::from_i64(&[&[0, 0, 0, 0], &[0, -1, 1, 0], &[0, 1, -1, 0], &[0, 0, 0, 0]])
    );
    // corner α²u(u+1) at u = 2
    assert_eq!(r7v(&int(2), &p), Matrix::from_i64(&[&[3, 0, 0, 0], &[0, 2, 1, 0], &[0, 1, 2, 0], &[6, 0, 0, 3]]));
    for a in [int(1), q(5, 3), q(-2, 7)] {
        assert_eq!(check_degeneracy(&ModelParams::new(a, int(0), int(0)).unwrap()).unwrap(), int(-1));
    }
}

#[test]
fn permutation_and_symmetrizer() {
    assert_eq!(permutation_op(1), Matrix::identity(1));
    let p = permutation_op(2);
    assert_eq!(p.mat_mul(&p).unwrap(), Matrix::identity(4));
    assert_eq!(p[(1, 2)], int(1));
    let s = symmetrizer(2);
    assert_eq!(s.select(&[1, 2], &[1, 2]), Matrix::from_fn(2, 2, |_, _| q(1, 2)));
    assert_eq!(s.mat_mul(&s).unwrap(), s);
    assert_eq!(symmetrizer(1), Matrix::identity(2));
}

#[test]
fn ybe_examples() {
    let p = p1();
    let (u, v) = (int(2), q(1, 2));
    assert!(check_ybe_triple(&r7v(&v, &p), &r7v(&u, &p), &r7v(&(&u - &v), &p), (2, 2, 2)).unwrap());
    let id = Matrix::identity(4);
    assert!(check_ybe_triple(&id, &id, &id, (2, 2, 2)).unwrap());
    let mut bad = r7v(&v, &p).add(&Matrix::from_fn(4, 4, |i, j| if (i, j) == (0, 3) { int(1) } else { int(0) })).unwrap();
    assert!(!check_ybe_triple(&bad, &r7v(&u, &p), &r7v(&(&u - &v), &p), (2, 2, 2)).unwrap());
    bad = bad.transpose();
    assert!(!check_ybe_triple(&bad, &r7v(&u, &p), &r7v(&(&u - &v), &p), (2, 2, 2)).unwrap());
}

#[test]
fn trivial_fusions() {
    let p = ModelParams::new(q(3, 2), q(1, 5), q(2, 3)).unwrap();
    let u = q(7, 4);
    assert_eq!(fuse_n1(1, &u, &p), r7v(&u, &p));
    assert_eq!(fuse_nm(1, 1, &u, &p), r7v(&u, &p));
    assert_eq!(fuse_nm(2, 3, &u, &p).shape(), (12, 12));
}

#[test]
fn polynomial_realization_examples() {
    let p = ModelParams::new(q(2, 3), q(1, 4), q(-1, 5)).unwrap();
    let shift = q(5, 2);
    assert_eq!(gamma_poly(0, &shift, &p).poly, Poly::one());
    assert_eq!(gamma_poly(1, &shift, &p).poly, Poly::linear(&shift));
    assert_eq!(
        gamma_poly(2, &shift, &p).poly,
        Poly::from_roots([&shift + &p.alpha, &shift - &p.alpha].iter())
    );
    assert!(star_triangle_check(0, 0, &shift, 4, &p));
    assert!(star_triangle_check(1, 0, &shift, 6, &p));
    assert!(star_triangle_check(2, 3, &shift, 8, &p));

    let (u, l) = (q(3, 2), 2i64);
    let x = |root: Scalar| Poly::linear(&root).scale(&int(-1));
    assert_eq!(intertwiner_poly(1, &u, l, l + 1, &p), x(&p.alpha * (&u - int(l) - &p.t)));
    assert_eq!(intertwiner_poly(1, &u, l, l - 1, &p), x(&p.alpha * (&u + int(l) + &p.s)));
    assert!(intertwiner_poly(2, &u, 0, 3, &p).is_zero());
    assert_eq!(psi_const(1, 0, 1, &p), x(-(&p.alpha * &p.t)));
}

#[test]
fn eleven_vertex_examples() {
    let p = p1();
    assert_eq!(shift_one(&int(1), &p), Matrix::from_i64(&[&[1, 0], &[-1, 1]]));
    let zero = r11v(&int(0), &ModelParams::new(q(7, 3), q(1, 3), int(0)).unwrap());
    assert_eq!(zero, Matrix::from_i64(&[&[1, 0, 0, 0], &[0, 0, 1, 0], &[0, 1, 0, 0], &[0, 0, 0, 1]]));
    let (u, v) = (q(5, 3), q(-1, 4));
    assert_eq!(similarity_fused(1, 1, &u, &v, &p), r11v(&(&u - &v), &p));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn seven_vertex_ybe(a in alpha(), u in rat(), v in rat()) {
        let p = ModelParams::new(a, int(0), int(0)).unwrap();
        prop_assert!(check_ybe_triple(&r7v(&v, &p), &r7v(&u, &p), &r7v(&(&u - &v), &p), (2, 2, 2)).unwrap());
    }

    #[test]
    fn eleven_vertex_ybe(a in alpha(), u in rat(), v in rat()) {
        let p = ModelParams::new(a, int(0), int(0)).unwrap();
        prop_assert!(check_ybe_triple(&r11v(&v, &p), &r11v(&u, &p), &r11v(&(&u - &v), &p), (2, 2, 2)).unwrap());
    }

    #[test]
    fn fused_ybe_small(a in alpha(), s in rat(), u in rat(), v in rat(), which in 0usize..3) {
        let (k, n, l) = [(2, 1, 1), (1, 2, 1), (1, 1, 2)][which];
        let p = ModelParams::new(a, s, q(1, 3)).unwrap();
        prop_assert!(check_ybe_triple(
            &fuse_nm(k, n, &v, &p),
            &fuse_nm(k, l, &u, &p),
            &fuse_nm(n, l, &(&u - &v), &p),
            (k + 1, n + 1, l + 1)
        ).unwrap());
    }

    #[test]
    fn fused_is_polynomial_in_u(a in alpha(), u in rat()) {
        // entries of fuse_nm(2,1) have degree ≤ 3 in u: four samples fix them
        let p = ModelParams::new(a, q(1, 2), q(1, 6)).unwrap();
        let xs: Vec<Scalar> = (0..4).map(|i| q(i, 1)).collect();
        let samples: Vec<Matrix> = xs.iter().map(|x| fuse_nm(2, 1, x, &p)).collect();
        let target = fuse_nm(2, 1, &u, &p);
        for i in 0..6 { for j in 0..6 {
            let ys: Vec<Scalar> = samples.iter().map(|m| m[(i, j)].clone()).collect();
            prop_assert_eq!(Poly::interpolate(&xs, &ys).unwrap().eval(&u), target[(i, j)].clone());
        }}
    }
}
