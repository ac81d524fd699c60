use fusion_sos::exactcore::scalar::{self, int, q};
use fusion_sos::{Error, Matrix, Poly, Scalar};
use proptest::prelude::*;

fn rat() -> impl Strategy<Value = Scalar> {
    (-30i64..=30, 1i64..=12).prop_map(|(p, d)| q(p, d))
}

fn mat(r: usize, c: usize) -> impl Strategy<Value = Matrix> {
    prop::collection::vec(rat(), r * c).prop_map(move |v| Matrix::from_fn(r, c, |i, j| v[i * c + j].clone()))
}

fn poly(max_deg: usize) -> impl Strategy<Value = Poly> {
    prop::collection::vec(rat(), 1..=max_deg + 1).prop_map(Poly::new)
}

/// Schoolbook triple loop over plain vectors, independent of `Matrix`.
fn schoolbook(a: &Matrix, b: &Matrix) -> Vec<Vec<Scalar>> {
    let mut out = vec![vec![int(0); b.cols()]; a.rows()];
    for (i, row) in out.iter_mut().enumerate() {
        for (j, cell) in row.iter_mut().enumerate() {
            for k in 0..a.cols() {
                *cell += &a[(i, k)] * &b[(k, j)];
            }
        }
    }
    out
}

#[test]
fn small_products() {
    let a = Matrix::from_i64(&[&[1, 2], &[3, 4]]);
    let swap = Matrix::from_i64(&[&[0, 1], &[1, 0]]);
    assert_eq!(a.mat_mul(&swap).unwrap(), Matrix::from_i64(&[&[2, 1], &[4, 3]]));
    assert_eq!(Matrix::identity(2).kron(&Matrix::identity(2)), Matrix::identity(4));
    assert_eq!(a.kron(&Matrix::identity(1)), a);
    assert!(matches!(a.mat_mul(&Matrix::identity(3)), Err(Error::ShapeMismatch(_))));
}

#[test]
fn diagonal_solve_and_errors() {
    let a = Matrix::from_i64(&[&[2, 0], &[0, 3]]);
    let x = a.solve_exact(&Matrix::column(vec![int(4), int(9)])).unwrap();
    assert_eq!(x.column_vec(0), vec![int(2), int(3)]);
    let sing = Matrix::from_i64(&[&[1, 2], &[2, 4]]);
    assert_eq!(sing.solve_exact(&Matrix::column(vec![int(1), int(1)])), Err(Error::Singular));
    let over = Matrix::from_i64(&[&[1], &[1]]);
    assert_eq!(over.solve_exact(&Matrix::column(vec![int(1), int(2)])), Err(Error::Inconsistent));
}

#[test]
fn rational_text_round_trip() {
    for s in ["0", "-7", "3/4", "-22/7"] {
        assert_eq!(scalar::format(&scalar::parse(s).unwrap()), s);
    }
    assert_eq!(scalar::parse("6/8").unwrap(), q(3, 4));
    assert!(scalar::parse("1/0").is_err());
    assert!(scalar::parse("x").is_err());
    let m = Matrix::from_fn(2, 3, |i, j| q(i as i64 - 2 * j as i64, 3));
    let text = serde_json::to_string(&m).unwrap();
    assert!(text.contains("\"-4/3\""));
    assert_eq!(serde_json::from_str::<Matrix>(&text).unwrap(), m);
}

#[test]
fn shift_examples() {
    let z = Poly::monomial(1);
    assert_eq!(z.shift(&int(5)), Poly::from_i64(&[5, 1]));
    assert_eq!(Poly::monomial(2).shift(&int(1)), Poly::from_i64(&[1, 2, 1]));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn field_axioms(a in rat(), b in rat(), c in rat()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * (&b + &c), &a * &b + &a * &c);
        prop_assert_eq!((&a * &b) * &c, &a * (&b * &c));
        if a != int(0) {
            prop_assert_eq!(&a * (int(1) / &a), int(1));
        }
    }

    #[test]
    fn product_matches_schoolbook(a in mat(3, 4), b in mat(4, 2)) {
        let p = a.mat_mul(&b).unwrap();
        let s = schoolbook(&a, &b);
        for (i, row) in s.iter().enumerate() {
            prop_assert_eq!(p.row(i), row.as_slice());
        }
    }

    #[test]
    fn kron_entries(a in mat(2, 3), b in mat(3, 2)) {
        // (A ⊗ B)[(i,k),(j,l)] = A[i,j] B[k,l]
        let k = a.kron(&b);
        for i in 0..2 { for j in 0..3 { for r in 0..3 { for s in 0..2 {
            prop_assert_eq!(&k[(i * 3 + r, j * 2 + s)], &(&a[(i, j)] * &b[(r, s)]));
        }}}}
    }

    #[test]
    fn kron_mixed_product(a in mat(2, 2), b in mat(2, 2), c in mat(2, 2), d in mat(2, 2)) {
        let lhs = a.kron(&b).mat_mul(&c.kron(&d)).unwrap();
        let rhs = a.mat_mul(&c).unwrap().kron(&b.mat_mul(&d).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn solve_round_trip(a in mat(4, 4), x in mat(4, 1)) {
        let b = a.mat_mul(&x).unwrap();
        match a.solve_exact(&b) {
            Ok(y) => { prop_assert_eq!(y, x); prop_assert_ne!(a.determinant().unwrap(), int(0)); }
            Err(Error::Singular) => prop_assert_eq!(a.determinant().unwrap(), int(0)),
            Err(e) => prop_assert!(false, "unexpected {e}"),
        }
    }

    #[test]
    fn determinant_multiplicative(a in mat(3, 3), b in mat(3, 3)) {
        let ab = a.mat_mul(&b).unwrap();
        prop_assert_eq!(ab.determinant().unwrap(), a.determinant().unwrap() * b.determinant().unwrap());
    }

    #[test]
    fn shift_is_a_group_action(p in poly(6), h in rat(), k in rat()) {
        prop_assert_eq!(p.shift(&h).shift(&-&h), p.clone());
        prop_assert_eq!(p.shift(&h).shift(&k), p.shift(&(&h + &k)));
        let z = q(3, 7);
        prop_assert_eq!(p.shift(&h).eval(&z), p.eval(&(&z + &h)));
    }

    #[test]
    fn evaluation_is_a_ring_map(p in poly(4), r in poly(4), z in rat()) {
        prop_assert_eq!(p.mul(&r).eval(&z), p.eval(&z) * r.eval(&z));
        prop_assert_eq!(p.add(&r).eval(&z), p.eval(&z) + r.eval(&z));
    }

    #[test]
    fn division_with_remainder(p in poly(6), d in poly(3)) {
        prop_assume!(!d.is_zero());
        let (quo, rem) = p.div_rem(&d).unwrap();
        prop_assert_eq!(quo.mul(&d).add(&rem), p);
        prop_assert!(rem.degree().unwrap_or(0) < d.degree().unwrap().max(1));
    }

    #[test]
    fn interpolation_recovers(p in poly(5)) {
        let xs: Vec<Scalar> = (0..6).map(|i| q(2 * i - 5, 3)).collect();
        let ys: Vec<Scalar> = xs.iter().map(|x| p.eval(x)).collect();
        prop_assert_eq!(Poly::interpolate(&xs, &ys).unwrap(), p);
    }
}
