//! The rational seven-vertex R-matrix and the vertex Yang–Baxter check.
//!
//! Basis order on `C² ⊗ C²` is `e¹⊗e¹, e¹⊗e², e²⊗e¹, e²⊗e²`, with `e¹` the
//! `+1` state. Matrices act on column vectors.

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactcore::scalar::{self, Scalar};
use crate::exactcore::Matrix;

/// The free constants of the model family.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModelParams {
    #[serde(with = "scalar::serde_str")]
    pub alpha: Scalar,
    #[serde(with = "scalar::serde_str")]
    pub s: Scalar,
    #[serde(with = "scalar::serde_str")]
    pub t: Scalar,
}

impl ModelParams {
    pub fn new(alpha: Scalar, s: Scalar, t: Scalar) -> Result<Self> {
        if alpha.is_zero() {
            return Err(Error::InvalidParameter("alpha must be nonzero".into()));
        }
        Ok(ModelParams { alpha, s, t })
    }

    /// Parameters with the given `w`, taking `s = 2w`, `t = 0`.
    pub fn with_w(alpha: Scalar, w: Scalar) -> Result<Self> {
        ModelParams::new(alpha, w * scalar::int(2), Scalar::zero())
    }

    /// `w = (s + t) / 2`.
    pub fn w(&self) -> Scalar {
        (&self.s + &self.t) / scalar::int(2)
    }

    /// Fails when `w` is an integer, where the SOS weights have poles.
    pub fn require_generic_w(&self) -> Result<()> {
        if self.w().is_integer() {
            return Err(Error::InvalidParameter(format!(
                "w = {} is an integer",
                scalar::format(&self.w())
            )));
        }
        Ok(())
    }
}

impl Default for ModelParams {
    /// `alpha = 1`, `s = t = 1/2`.
    fn default() -> Self {
        ModelParams { alpha: Scalar::one(), s: scalar::q(1, 2), t: scalar::q(1, 2) }
    }
}

/// The seven-vertex R-matrix.
pub fn r7v(u: &Scalar, params: &ModelParams) -> Matrix {
    let one = Scalar::one();
    let mut r = Matrix::zeros(4, 4);
    r[(0, 0)] = u + &one;
    r[(1, 1)] = u.clone();
    r[(1, 2)] = one.clone();
    r[(2, 1)] = one.clone();
    r[(2, 2)] = u.clone();
    r[(3, 0)] = &params.alpha * &params.alpha * u * (u + &one);
    r[(3, 3)] = u + &one;
    r
}

/// `P (v ⊗ w) = w ⊗ v` on `C^d ⊗ C^d`.
pub fn permutation_op(d: usize) -> Matrix {
    let mut p = Matrix::zeros(d * d, d * d);
    for i in 0..d {
        for j in 0..d {
            p[(j * d + i, i * d + j)] = Scalar::one();
        }
    }
    p
}

/// The constant `c` with `r7v(-1) = c (I - P)`.
pub fn check_degeneracy(params: &ModelParams) -> Result<Scalar> {
    let r = r7v(&scalar::int(-1), params);
    let ip = Matrix::identity(4).sub(&permutation_op(2))?;
    // I - P has a 1 at (1,1); read c there and confirm everywhere.
    let c = r[(1, 1)].clone();
    if r != ip.scale(&c) {
        return Err(Error::InvalidParameter("R(-1) is not proportional to I - P".into()));
    }
    Ok(c)
}

/// Mixed-radix digits of `index` for factor dimensions `dims`, most
/// significant first.
pub(crate) fn digits(mut index: usize, dims: &[usize]) -> Vec<usize> {
    let mut out = vec![0; dims.len()];
    for (slot, &d) in out.iter_mut().zip(dims).rev() {
        *slot = index % d;
        index /= d;
    }
    out
}

pub(crate) fn undigits(ds: &[usize], dims: &[usize]) -> usize {
    ds.iter().zip(dims).fold(0, |acc, (&x, &d)| acc * d + x)
}

/// Embeds an operator on factors `i` and `j` (in that order, `op` indexed as
/// `x_i · dims[j] + x_j`) into the full tensor product with factor
/// dimensions `dims`, acting as the identity elsewhere.
pub fn embed_pair(op: &Matrix, dims: &[usize], i: usize, j: usize) -> Result<Matrix> {
    if i == j || i >= dims.len() || j >= dims.len() {
        return Err(Error::ShapeMismatch(format!("bad factor pair ({i},{j})")));
    }
    let local = dims[i] * dims[j];
    if op.shape() != (local, local) {
        return Err(Error::ShapeMismatch(format!(
            "operator {:?} on factors of dims {} x {}",
            op.shape(),
            dims[i],
            dims[j]
        )));
    }
    let total: usize = dims.iter().product();
    let mut out = Matrix::zeros(total, total);
    for col in 0..total {
        let ds = digits(col, dims);
        let lin = ds[i] * dims[j] + ds[j];
        for lout in 0..local {
            let v = &op[(lout, lin)];
            if v.is_zero() {
                continue;
            }
            let mut nd = ds.clone();
            nd[i] = lout / dims[j];
            nd[j] = lout % dims[j];
            out[(undigits(&nd, dims), col)] += v;
        }
    }
    Ok(out)
}

/// `R12 R13 R23 == R23 R13 R12` for operators already embedded in the
/// `d1·d2·d3`-dimensional space.
pub fn check_ybe_vertex(
    r12: &Matrix,
    r13: &Matrix,
    r23: &Matrix,
    dims: (usize, usize, usize),
) -> Result<bool> {
    let n = dims.0 * dims.1 * dims.2;
    for r in [r12, r13, r23] {
        if r.shape() != (n, n) {
            return Err(Error::ShapeMismatch(format!("expected {n}x{n}, got {:?}", r.shape())));
        }
    }
    let lhs = r12.mat_mul(r13)?.mat_mul(r23)?;
    let rhs = r23.mat_mul(r13)?.mat_mul(r12)?;
    Ok(lhs == rhs)
}

/// Embeds the three pair operators of a triple and runs [`check_ybe_vertex`].
/// `r12` acts on factors (1,2), `r13` on (1,3), `r23` on (2,3).
pub fn check_ybe_triple(
    r12: &Matrix,
    r13: &Matrix,
    r23: &Matrix,
    dims: (usize, usize, usize),
) -> Result<bool> {
    let d = [dims.0, dims.1, dims.2];
    check_ybe_vertex(
        &embed_pair(r12, &d, 0, 1)?,
        &embed_pair(r13, &d, 0, 2)?,
        &embed_pair(r23, &d, 1, 2)?,
        dims,
    )
}
