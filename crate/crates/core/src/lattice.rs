//! Periodic lattices: row transfer matrices and brute-force state sums.

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactcore::scalar::{self, Scalar};
use crate::exactcore::Matrix;
use crate::fusion::fuse_nm;
use crate::sos::{w_nm_sum, WeightQuery};
use crate::vertex::{digits, ModelParams};

/// `cols × rows` periodic lattice. For vertex models `n` is the spin of the
/// vertical edges and `m` that of the horizontal ones; for SOS models they
/// are the horizontal and vertical step sizes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeSpec {
    pub cols: usize,
    pub rows: usize,
    pub n: usize,
    pub m: usize,
    #[serde(with = "scalar::serde_str")]
    pub u: Scalar,
}

impl LatticeSpec {
    fn check(&self) -> Result<()> {
        if self.cols == 0 || self.rows == 0 {
            return Err(Error::InvalidParameter("lattice needs at least one row and column".into()));
        }
        Ok(())
    }
}

/// `T[out, in] = Σ_h ∏_i R[(out_i, h_{i+1}), (in_i, h_i)]`, periodic in `h`.
pub fn transfer_matrix_vertex(spec: &LatticeSpec, params: &ModelParams) -> Result<Matrix> {
    spec.check()?;
    let r = fuse_nm(spec.n, spec.m, &spec.u, params);
    let (dv, dh, cols) = (spec.n + 1, spec.m + 1, spec.cols);
    let dim = dv.pow(cols as u32);
    let vdims = vec![dv; cols];
    let hdims = vec![dh; cols];
    let nh = dh.pow(cols as u32);
    let mut t = Matrix::zeros(dim, dim);
    for out in 0..dim {
        let o = digits(out, &vdims);
        for inp in 0..dim {
            let i_ = digits(inp, &vdims);
            let mut total = Scalar::zero();
            for hs in 0..nh {
                let h = digits(hs, &hdims);
                let mut prod = Scalar::one();
                for c in 0..cols {
                    let h_out = h[(c + 1) % cols];
                    let e = &r[(o[c] * dh + h_out, i_[c] * dh + h[c])];
                    if e.is_zero() {
                        prod = Scalar::zero();
                        break;
                    }
                    prod *= e;
                }
                total += prod;
            }
            t[(out, inp)] = total;
        }
    }
    Ok(t)
}

pub fn trace(m: &Matrix) -> Scalar {
    (0..m.rows().min(m.cols())).fold(Scalar::zero(), |acc, i| acc + &m[(i, i)])
}

/// `Z = Tr T^rows`.
pub fn partition_vertex_transfer(spec: &LatticeSpec, params: &ModelParams) -> Result<Scalar> {
    let t = transfer_matrix_vertex(spec, params)?;
    let mut p = t.clone();
    for _ in 1..spec.rows {
        p = p.mat_mul(&t)?;
    }
    Ok(trace(&p))
}

/// `Z` as the sum over every edge configuration of the product of vertex
/// weights, with branches cut as soon as a completed vertex has weight 0.
pub fn partition_vertex_bruteforce(spec: &LatticeSpec, params: &ModelParams) -> Result<Scalar> {
    spec.check()?;
    let r = fuse_nm(spec.n, spec.m, &spec.u, params);
    let (cols, rows) = (spec.cols, spec.rows);
    let (dv, dh) = (spec.n + 1, spec.m + 1);
    // edges: vertical (i, j) at index j*cols + i, horizontal after them
    let nv = cols * rows;
    let vert = |i: usize, j: usize| (j % rows) * cols + (i % cols);
    let hor = |i: usize, j: usize| nv + (j % rows) * cols + (i % cols);
    let n_edges = 2 * nv;
    let radix: Vec<usize> = (0..n_edges).map(|e| if e < nv { dv } else { dh }).collect();
    // vertex (i, j): in-edges vert(i,j), hor(i,j); out-edges vert(i,j+1), hor(i+1,j)
    let vertices: Vec<[usize; 4]> = (0..rows)
        .flat_map(|j| (0..cols).map(move |i| (i, j)))
        .map(|(i, j)| [vert(i, j + 1), hor(i + 1, j), vert(i, j), hor(i, j)])
        .collect();
    let mut completes: Vec<Vec<usize>> = vec![Vec::new(); n_edges];
    for (k, v) in vertices.iter().enumerate() {
        completes[*v.iter().max().expect("four edges")].push(k);
    }

    struct Ctx<'a> {
        r: &'a Matrix,
        dh: usize,
        radix: Vec<usize>,
        vertices: Vec<[usize; 4]>,
        completes: Vec<Vec<usize>>,
        state: Vec<usize>,
    }
    fn go(ctx: &mut Ctx, edge: usize, acc: Scalar) -> Scalar {
        if edge == ctx.radix.len() {
            return acc;
        }
        let mut total = Scalar::zero();
        for s in 0..ctx.radix[edge] {
            ctx.state[edge] = s;
            let mut w = acc.clone();
            for &k in &ctx.completes[edge] {
                let [vo, ho, vi, hi] = ctx.vertices[k];
                let st = &ctx.state;
                let e = &ctx.r[(st[vo] * ctx.dh + st[ho], st[vi] * ctx.dh + st[hi])];
                if e.is_zero() {
                    w = Scalar::zero();
                    break;
                }
                w *= e;
            }
            if !w.is_zero() {
                total += go(ctx, edge + 1, w);
            }
        }
        total
    }
    let mut ctx = Ctx { r: &r, dh, radix, vertices, completes, state: vec![0; n_edges] };
    Ok(go(&mut ctx, 0, Scalar::one()))
}

/// `[T(u), T(v)]`.
pub fn transfer_commutator(spec: &LatticeSpec, v: &Scalar, params: &ModelParams) -> Result<Matrix> {
    let tu = transfer_matrix_vertex(spec, params)?;
    let tv = transfer_matrix_vertex(&LatticeSpec { u: v.clone(), ..spec.clone() }, params)?;
    tu.mat_mul(&tv)?.sub(&tv.mat_mul(&tu)?)
}

/// Sum over periodic height assignments with every height in `lo..=hi` of
/// the product of face weights
/// `W(h[i][j+1], h[i+1][j+1]; h[i][j], h[i+1][j] | u)`. The value depends on
/// the window.
pub fn partition_sos(spec: &LatticeSpec, lo: i64, hi: i64, params: &ModelParams) -> Result<Scalar> {
    spec.check()?;
    if lo > hi {
        return Ok(Scalar::zero());
    }
    let (cols, rows) = (spec.cols, spec.rows);
    let site = |i: usize, j: usize| (j % rows) * cols + (i % cols);
    let faces: Vec<[usize; 4]> = (0..rows)
        .flat_map(|j| (0..cols).map(move |i| (i, j)))
        .map(|(i, j)| [site(i, j + 1), site(i + 1, j + 1), site(i, j), site(i + 1, j)])
        .collect();
    let mut completes: Vec<Vec<usize>> = vec![Vec::new(); cols * rows];
    for (k, f) in faces.iter().enumerate() {
        completes[*f.iter().max().expect("four corners")].push(k);
    }
    let mut heights = vec![lo; cols * rows];
    let mut memo = std::collections::HashMap::new();
    let mut weight = |l: [i64; 4]| -> Result<Scalar> {
        if let Some(w) = memo.get(&l) {
            return Ok(Scalar::clone(w));
        }
        let w = w_nm_sum(&WeightQuery::new(spec.n, spec.m, l, spec.u.clone()), params)?;
        memo.insert(l, w.clone());
        Ok(w)
    };
    #[allow(clippy::too_many_arguments)]
    fn go(
        k: usize,
        acc: Scalar,
        lo: i64,
        hi: i64,
        heights: &mut Vec<i64>,
        faces: &[[usize; 4]],
        completes: &[Vec<usize>],
        weight: &mut dyn FnMut([i64; 4]) -> Result<Scalar>,
    ) -> Result<Scalar> {
        if k == heights.len() {
            return Ok(acc);
        }
        let mut total = Scalar::zero();
        for h in lo..=hi {
            heights[k] = h;
            let mut w = acc.clone();
            for &f in &completes[k] {
                let l = faces[f].map(|s| heights[s]);
                let x = weight(l)?;
                if x.is_zero() {
                    w = Scalar::zero();
                    break;
                }
                w *= x;
            }
            if !w.is_zero() {
                total += go(k + 1, w, lo, hi, heights, faces, completes, weight)?;
            }
        }
        Ok(total)
    }
    go(0, Scalar::one(), lo, hi, &mut heights, &faces, &completes, &mut weight)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactcore::scalar::{int, q};
    use crate::vertex::r7v;

    fn params() -> ModelParams {
        ModelParams::new(q(3, 2), q(1, 4), q(1, 4)).unwrap()
    }

    fn spec(cols: usize, rows: usize, u: Scalar) -> LatticeSpec {
        LatticeSpec { cols, rows, n: 1, m: 1, u }
    }

    #[test]
    fn single_column_is_partial_trace() {
        let p = params();
        let u = q(2, 5);
        let r = r7v(&u, &p);
        let t = transfer_matrix_vertex(&spec(1, 1, u), &p).unwrap();
        for o in 0..2 {
            for i in 0..2 {
                assert_eq!(t[(o, i)], &r[(o * 2, i * 2)] + &r[(o * 2 + 1, i * 2 + 1)]);
            }
        }
    }

    #[test]
    fn transfer_agrees_with_enumeration() {
        let p = params();
        let s = spec(2, 2, q(-3, 7));
        assert_eq!(partition_vertex_transfer(&s, &p).unwrap(), partition_vertex_bruteforce(&s, &p).unwrap());
    }

    #[test]
    fn transfer_matrices_commute() {
        let p = params();
        assert!(transfer_commutator(&spec(3, 1, q(1, 3)), &q(-5, 2), &p).unwrap().is_zero());
    }

    #[test]
    fn sos_single_face() {
        let p = ModelParams::with_w(int(1), q(1, 2)).unwrap();
        // one column and one row: the face is W(h,h;h,h), which needs a zero step
        assert_eq!(partition_sos(&spec(1, 1, q(7, 3)), -2, 2, &p).unwrap(), int(0));
        let s = LatticeSpec { cols: 1, rows: 1, n: 2, m: 2, u: q(7, 3) };
        let mut direct = Scalar::zero();
        for h in -2..=2 {
            direct += w_nm_sum(&WeightQuery::new(2, 2, [h, h, h, h], q(7, 3)), &p).unwrap();
        }
        assert_eq!(partition_sos(&s, -2, 2, &p).unwrap(), direct);
        assert_eq!(partition_sos(&s, 3, 2, &p).unwrap(), int(0));
    }
}
