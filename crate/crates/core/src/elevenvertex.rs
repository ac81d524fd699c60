//! The eleven-vertex family: the seven-vertex operators conjugated by
//! spectral-parameter-dependent shifts, and the constant intertwiners.

use num_traits::One;

use crate::error::Result;
use crate::exactcore::scalar::{self, Scalar};
use crate::exactcore::{Matrix, Poly};
use crate::fusion::{fuse_nm, SymBasis};
use crate::polyrep::intertwiner_poly;
use crate::sos::adjacent;
use crate::vertex::ModelParams;

/// `A^(n)(u)` on `S^n C²`. In the polynomial realization it is
/// `f(z) ↦ f(z + αu)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShiftOp {
    pub n: usize,
    pub u: Scalar,
    pub matrix: Matrix,
}

/// `A^(1)(u) = [[1, 0], [-αu, 1]]`.
pub fn shift_one(u: &Scalar, params: &ModelParams) -> Matrix {
    let mut a = Matrix::identity(2);
    a[(1, 0)] = -(&params.alpha * u);
    a
}

/// `[A^(1)(u)]^⊗n` restricted to the symmetric subspace.
pub fn shift_op(n: usize, u: &Scalar, params: &ModelParams) -> ShiftOp {
    let a1 = shift_one(u, params);
    let full = (0..n).fold(Matrix::identity(1), |acc, _| acc.kron(&a1));
    let basis = SymBasis::new(n);
    let matrix = basis.project.mat_mul(&full).and_then(|x| x.mat_mul(&basis.embed)).expect("conforming");
    ShiftOp { n, u: u.clone(), matrix }
}

/// The eleven-vertex R-matrix at difference `d`.
pub fn r11v(d: &Scalar, params: &ModelParams) -> Matrix {
    let one = Scalar::one();
    let al = &params.alpha;
    let ad = al * d;
    let mut r = Matrix::zeros(4, 4);
    r[(0, 0)] = d + &one;
    r[(1, 0)] = ad.clone();
    r[(1, 1)] = d.clone();
    r[(1, 2)] = one.clone();
    r[(2, 0)] = -ad.clone();
    r[(2, 1)] = one.clone();
    r[(2, 2)] = d.clone();
    r[(3, 0)] = al * &ad;
    r[(3, 1)] = ad.clone();
    r[(3, 2)] = -ad;
    r[(3, 3)] = d + &one;
    r
}

/// `[A^(n)(u) ⊗ A^(m)(v)] R^(n,m)(u-v) [A^(n)(-u) ⊗ A^(m)(-v)]`.
pub fn similarity_fused(n: usize, m: usize, u: &Scalar, v: &Scalar, params: &ModelParams) -> Matrix {
    let left = shift_op(n, u, params).matrix.kron(&shift_op(m, v, params).matrix);
    let right = shift_op(n, &-u, params).matrix.kron(&shift_op(m, &-v, params).matrix);
    left.mat_mul(&fuse_nm(n, m, &(u - v), params))
        .and_then(|x| x.mat_mul(&right))
        .expect("conforming")
}

/// `Ψ^(n)_a_b = (-1)^n ∏_{p=1}^{n₊}[z - α(n-a-2p+1-t)] ∏_{q=1}^{n₋}[z - α(n+a-2q+1+s)]`,
/// the intertwiner with the spectral parameter removed.
pub fn psi_const(n: usize, a: i64, b: i64, params: &ModelParams) -> Poly {
    if !adjacent(b - a, n) {
        return Poly::zero(n);
    }
    intertwiner_poly(n, &scalar::zero(), a, b, params)
}

/// `ψ^(n)(u)` shifted by `A^(n)(u)`, in the polynomial realization.
pub fn shifted_intertwiner(n: usize, u: &Scalar, a: i64, b: i64, params: &ModelParams) -> Poly {
    intertwiner_poly(n, u, a, b, params).shift(&(&params.alpha * u))
}

/// `A^(n)(u)` acting on coordinate vectors.
pub fn apply_shift(op: &ShiftOp, coords: &[Scalar]) -> Result<Vec<Scalar>> {
    op.matrix.apply(coords)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactcore::scalar::{int, q};
    use crate::fusion::symmetrizer;
    use crate::polyrep::dehomogenization;
    use crate::vertex::r7v;

    fn params() -> ModelParams {
        ModelParams::new(q(2, 3), q(1, 4), q(3, 4)).unwrap()
    }

    #[test]
    fn shift_one_example() {
        let p = ModelParams::new(int(1), int(0), q(1, 2)).unwrap();
        assert_eq!(shift_op(1, &int(1), &p).matrix, Matrix::from_i64(&[&[1, 0], &[-1, 1]]));
    }

    #[test]
    fn group_law_and_symmetrizer() {
        let p = params();
        let u = q(5, 3);
        for n in 1..=3 {
            let a = shift_op(n, &u, &p).matrix;
            let b = shift_op(n, &-&u, &p).matrix;
            assert_eq!(a.mat_mul(&b).unwrap(), Matrix::identity(n + 1));
            let a1 = shift_one(&u, &p);
            let full = (0..n).fold(Matrix::identity(1), |acc, _| acc.kron(&a1));
            let s = symmetrizer(n);
            assert_eq!(full.mat_mul(&s).unwrap(), s.mat_mul(&full).unwrap());
        }
    }

    #[test]
    fn shift_is_argument_shift() {
        let p = params();
        let u = q(-4, 7);
        for n in 1..=3 {
            let d = dehomogenization(n);
            let in_poly = d.mat_mul(&shift_op(n, &u, &p).matrix).unwrap().mat_mul(&d.transpose()).unwrap();
            for k in 0..=n {
                let shifted = Poly::monomial(k).shift(&(&p.alpha * &u)).to_vec(n).unwrap();
                assert_eq!(in_poly.column_vec(k), shifted);
            }
        }
    }

    #[test]
    fn r11v_is_conjugated_r7v() {
        let p = params();
        assert_eq!(
            r11v(&int(0), &p),
            Matrix::from_i64(&[&[1, 0, 0, 0], &[0, 0, 1, 0], &[0, 1, 0, 0], &[0, 0, 0, 1]])
        );
        let (u, v) = (q(3, 2), q(-1, 3));
        assert_eq!(similarity_fused(1, 1, &u, &v, &p), r11v(&(&u - &v), &p));
        let direct = shift_one(&u, &p)
            .kron(&shift_one(&v, &p))
            .mat_mul(&r7v(&(&u - &v), &p))
            .unwrap()
            .mat_mul(&shift_one(&-&u, &p).kron(&shift_one(&-&v, &p)))
            .unwrap();
        assert_eq!(direct, r11v(&(&u - &v), &p));
    }

    #[test]
    fn constant_intertwiners() {
        let p = params();
        for u in [q(1, 2), int(3), q(-7, 5)] {
            assert_eq!(shifted_intertwiner(2, &u, 1, 1, &p), psi_const(2, 1, 1, &p));
        }
        let t = &p.t;
        assert_eq!(psi_const(1, 0, 1, &p), Poly::linear(&-(&p.alpha * t)).scale(&int(-1)));
    }
}
