//! Vertex–SOS correspondence: fused intertwining vectors, their
//! independence, the weight oracle, and the matrix-level identity
//!
//! ```text
//! R^(n,m)(u-v) ψ^(n)(u)^a_b ⊗ ψ^(m)(v)^b_c
//!     = ρ(n,m,u-v) Σ_b′ ψ^(n)(u)^b′_c ⊗ ψ^(m)(v)^a_b′ W^(n,m)(a,b;b′,c|u-v)
//! ```
//!
//! where `ρ` is [`fusion_normalization`], the scalar carried by the
//! unnormalized fused product.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactcore::scalar::{self, Scalar};
use crate::exactcore::{Matrix, Poly};
use crate::fusion::{fuse_nm, fusion_normalization, symmetrizer, SymBasis};
use crate::polyrep::{intertwiner_poly, o_m_apply};
use crate::sos::adjacent;
use crate::vertex::ModelParams;

/// `ψ^(1)(u)^l_{l±1}`: `(1, α(u-l-t))` up, `(1, α(u+l+s))` down.
pub fn intertwiner_one(u: &Scalar, a: i64, b: i64, params: &ModelParams) -> Result<[Scalar; 2]> {
    let second = match b - a {
        1 => &params.alpha * (u - scalar::int(a) - &params.t),
        -1 => &params.alpha * (u + scalar::int(a) + &params.s),
        _ => return Err(Error::InvalidPath(format!("{a} -> {b} is not a unit step"))),
    };
    Ok([Scalar::one(), second])
}

/// Canonical step sequence from `a` to `b` in `n` unit steps: all `+1` first.
pub fn canonical_path(n: usize, a: i64, b: i64) -> Result<Vec<i64>> {
    if !adjacent(b - a, n) {
        return Err(Error::InvalidPath(format!("{a} -> {b} in {n} unit steps")));
    }
    let up = (n as i64 + b - a) / 2;
    Ok((0..n as i64).map(|i| if i < up { 1 } else { -1 }).collect())
}

/// `Π_{1..n} ⊗_{i=0}^{n-1} ψ^(1)(u+n-1-i)^{c_i}_{c_{i+1}}` in `(C²)^⊗n`, along
/// the given steps (or the canonical path).
pub fn fused_intertwiner_tensor(
    n: usize,
    u: &Scalar,
    a: i64,
    b: i64,
    steps: Option<&[i64]>,
    params: &ModelParams,
) -> Result<Vec<Scalar>> {
    let steps = match steps {
        Some(s) => s.to_vec(),
        None => canonical_path(n, a, b)?,
    };
    if steps.len() != n || steps.iter().any(|s| s.abs() != 1) || steps.iter().sum::<i64>() != b - a {
        return Err(Error::InvalidPath(format!("{steps:?} does not lead from {a} to {b}")));
    }
    let mut v = vec![Scalar::one()];
    let mut height = a;
    for (i, s) in steps.iter().enumerate() {
        let arg = u + scalar::int((n - 1 - i) as i64);
        let f = intertwiner_one(&arg, height, height + s, params)?;
        v = v.iter().flat_map(|x| f.iter().map(move |y| x * y)).collect();
        height += s;
    }
    if n == 0 {
        return Ok(v);
    }
    symmetrizer(n).apply(&v)
}

/// Symmetric-power coordinates of `ψ^(n)(u)^a_b`; zero if `b-a` is not an
/// `n`-step.
pub fn intertwiner_coords(n: usize, u: &Scalar, a: i64, b: i64, params: &ModelParams) -> Vec<Scalar> {
    if !adjacent(b - a, n) {
        return vec![Scalar::zero(); n + 1];
    }
    let t = fused_intertwiner_tensor(n, u, a, b, None, params).expect("canonical path");
    SymBasis::new(n).coords(&t).expect("dimension 2^n")
}

/// Which end of the intertwiners is held fixed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Anchor {
    /// `{ψ^a_b}_b` for fixed `a`.
    Outgoing,
    /// `{ψ^b_c}_b` for fixed `c`.
    Incoming,
}

#[derive(Clone, Debug, PartialEq)]
pub struct IntertwinerSet {
    pub n: usize,
    pub u: Scalar,
    pub anchor: i64,
    pub side: Anchor,
    /// The free label of each vector, `anchor + n, anchor + n - 2, …`.
    pub labels: Vec<i64>,
    /// Coordinate vectors in the symmetric basis.
    pub vectors: Vec<Vec<Scalar>>,
}

impl IntertwinerSet {
    pub fn new(n: usize, u: &Scalar, anchor: i64, side: Anchor, params: &ModelParams) -> Self {
        let labels: Vec<i64> = (0..=n as i64).map(|j| anchor + n as i64 - 2 * j).collect();
        let vectors = labels
            .iter()
            .map(|&x| match side {
                Anchor::Outgoing => intertwiner_coords(n, u, anchor, x, params),
                Anchor::Incoming => intertwiner_coords(n, u, x, anchor, params),
            })
            .collect();
        IntertwinerSet { n, u: u.clone(), anchor, side, labels, vectors }
    }

    /// Columns are the coordinate vectors.
    pub fn matrix(&self) -> Matrix {
        Matrix::from_fn(self.n + 1, self.n + 1, |i, j| self.vectors[j][i].clone())
    }
}

pub fn independence_determinant(set: &IntertwinerSet) -> Scalar {
    set.matrix().determinant().expect("square")
}

/// The linear system behind the weight oracle: apply `O_m(u; b, c)` to
/// `ψ^(n)(z|0)^a_b` and expand in `{ψ^(n)(z|0)^b′_c}` for the given `b′`.
fn solve_in_basis(
    n: usize,
    m: usize,
    [a, b, c]: [i64; 3],
    u: &Scalar,
    bprimes: &[i64],
    params: &ModelParams,
) -> Result<Vec<Scalar>> {
    if !adjacent(a - b, n) || !adjacent(c - b, m) {
        return Err(Error::InvalidAdjacency(format!(
            "(a,b,c) = ({a},{b},{c}) for sizes ({n},{m})"
        )));
    }
    params.require_generic_w()?;
    let zero = Scalar::zero();
    let image = o_m_apply(m, u, b, c, &intertwiner_poly(n, &zero, a, b, params), params)?;
    let rhs = image.to_vec(n).map_err(|_| Error::Inconsistent)?;
    let basis: Vec<Poly> = bprimes.iter().map(|&bp| intertwiner_poly(n, &zero, bp, c, params)).collect();
    let a_mat = Matrix::from_fn(n + 1, bprimes.len(), |i, j| basis[j].coeff(i));
    let x = a_mat.solve_exact(&Matrix::column(rhs))?;
    Ok(x.column_vec(0))
}

/// All weights `W^(n,m)(a,b;b′,c|u)` for the admissible `b′`, computed from
/// the defining relation in the polynomial realization. Unknowns are only
/// the admissible `b′`; when there are fewer of them than coefficient
/// equations, the extra equations are checked exactly.
pub fn solve_weights_from_relation(
    n: usize,
    m: usize,
    a: i64,
    b: i64,
    c: i64,
    u: &Scalar,
    params: &ModelParams,
) -> Result<BTreeMap<i64, Scalar>> {
    let bprimes: Vec<i64> = (0..=n as i64)
        .map(|j| c - n as i64 + 2 * j)
        .filter(|&bp| adjacent(a - bp, m))
        .collect();
    let x = solve_in_basis(n, m, [a, b, c], u, &bprimes, params)?;
    Ok(bprimes.into_iter().zip(x).collect())
}

/// The same expansion over every `b′` with `b′ - c` an `n`-step, admissible
/// for `a` or not.
pub fn solve_weights_all_labels(
    n: usize,
    m: usize,
    a: i64,
    b: i64,
    c: i64,
    u: &Scalar,
    params: &ModelParams,
) -> Result<BTreeMap<i64, Scalar>> {
    let bprimes: Vec<i64> = (0..=n as i64).map(|j| c - n as i64 + 2 * j).collect();
    let x = solve_in_basis(n, m, [a, b, c], u, &bprimes, params)?;
    Ok(bprimes.into_iter().zip(x).collect())
}

fn kron_vec(x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
    x.iter().flat_map(|p| y.iter().map(move |q| p * q)).collect()
}

/// Both sides of the correspondence with the supplied weight table `b′ ↦ W`.
#[allow(clippy::too_many_arguments)]
pub fn correspondence_sides(
    op: &Matrix,
    n: usize,
    m: usize,
    [a, b, c]: [i64; 3],
    psi_n: &dyn Fn(i64, i64) -> Vec<Scalar>,
    psi_m: &dyn Fn(i64, i64) -> Vec<Scalar>,
    rho: &Scalar,
    weights: &BTreeMap<i64, Scalar>,
) -> Result<(Vec<Scalar>, Vec<Scalar>)> {
    let lhs = op.apply(&kron_vec(&psi_n(a, b), &psi_m(b, c)))?;
    let mut rhs = vec![Scalar::zero(); (n + 1) * (m + 1)];
    for (&bp, w) in weights {
        let t = kron_vec(&psi_n(bp, c), &psi_m(a, bp));
        for (r, x) in rhs.iter_mut().zip(t) {
            *r += x * w * rho;
        }
    }
    Ok((lhs, rhs))
}

/// Matrix-level correspondence for `fuse_nm(n, m, u-v)` with oracle weights.
#[allow(clippy::too_many_arguments)]
pub fn check_vertex_sos_matrix(
    n: usize,
    m: usize,
    a: i64,
    b: i64,
    c: i64,
    u: &Scalar,
    v: &Scalar,
    params: &ModelParams,
) -> Result<bool> {
    let d = u - v;
    let weights = solve_weights_from_relation(n, m, a, b, c, &d, params)?;
    check_vertex_sos_with(n, m, [a, b, c], u, v, params, &weights)
}

/// As [`check_vertex_sos_matrix`], with an explicit weight table.
pub fn check_vertex_sos_with(
    n: usize,
    m: usize,
    abc: [i64; 3],
    u: &Scalar,
    v: &Scalar,
    params: &ModelParams,
    weights: &BTreeMap<i64, Scalar>,
) -> Result<bool> {
    let d = u - v;
    let op = fuse_nm(n, m, &d, params);
    let psi_n = |x: i64, y: i64| intertwiner_coords(n, u, x, y, params);
    let psi_m = |x: i64, y: i64| intertwiner_coords(m, v, x, y, params);
    let rho = fusion_normalization(n, m, &d);
    let (lhs, rhs) = correspondence_sides(&op, n, m, abc, &psi_n, &psi_m, &rho, weights)?;
    Ok(lhs == rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactcore::scalar::{int, q};
    use crate::polyrep::coords_to_poly;
    use crate::sos::{w11, WeightQuery};

    fn params() -> ModelParams {
        ModelParams::new(q(4, 3), q(1, 3), q(1, 6)).unwrap()
    }

    #[test]
    fn single_step_vectors() {
        let p = params();
        let u = q(5, 2);
        let v = fused_intertwiner_tensor(1, &u, 3, 4, None, &p).unwrap();
        assert_eq!(v, vec![int(1), &p.alpha * (&u - int(3) - &p.t)]);
    }

    #[test]
    fn two_paths_agree() {
        let p = params();
        let u = q(-1, 3);
        let x = fused_intertwiner_tensor(2, &u, 1, 1, Some(&[1, -1]), &p).unwrap();
        let y = fused_intertwiner_tensor(2, &u, 1, 1, Some(&[-1, 1]), &p).unwrap();
        assert_eq!(x, y);
        assert!(fused_intertwiner_tensor(2, &u, 1, 1, Some(&[1, 1]), &p).is_err());
    }

    #[test]
    fn coords_dehomogenize_to_polynomial() {
        let p = params();
        let u = q(2, 9);
        for n in 1..=4usize {
            for step in (-(n as i64)..=n as i64).step_by(2) {
                let c = intertwiner_coords(n, &u, 1, 1 + step, &p);
                assert_eq!(coords_to_poly(&c), intertwiner_poly(n, &u, 1, 1 + step, &p), "n={n}");
            }
        }
    }

    #[test]
    fn determinant_n1() {
        let p = params();
        let (u, a) = (q(7, 5), 2);
        let set = IntertwinerSet::new(1, &u, a, Anchor::Outgoing, &p);
        assert_eq!(independence_determinant(&set), &p.alpha * int(2) * (int(a) + p.w()));
        let degenerate = ModelParams::new(int(1), int(-2), int(-2)).unwrap();
        let set = IntertwinerSet::new(1, &u, 2, Anchor::Outgoing, &degenerate);
        assert_eq!(independence_determinant(&set), int(0));
    }

    #[test]
    fn oracle_matches_w11() {
        let p = params();
        let u = q(3, 11);
        for (a, b, c) in [(2, 1, 0), (0, 1, 0), (0, -1, 0), (-2, -1, 0), (3, 2, 3)] {
            let ws = solve_weights_from_relation(1, 1, a, b, c, &u, &p).unwrap();
            for (bp, w) in ws {
                let qy = WeightQuery::new(1, 1, [a, b, bp, c], u.clone());
                assert_eq!(w, w11(&qy, &p).unwrap());
            }
        }
    }

    #[test]
    fn small_correspondences() {
        let p = params();
        assert!(check_vertex_sos_matrix(1, 1, 0, 1, 0, &q(3, 4), &q(1, 5), &p).unwrap());
        assert!(check_vertex_sos_matrix(2, 1, 0, 2, 1, &q(3, 4), &q(-1, 5), &p).unwrap());
        assert!(check_vertex_sos_matrix(2, 2, 1, 1, 1, &int(2), &int(0), &p).unwrap());
    }

    #[test]
    fn perturbed_table_fails() {
        let p = params();
        let (u, v) = (q(3, 4), q(1, 5));
        let mut ws = solve_weights_from_relation(1, 1, 0, 1, 0, &(&u - &v), &p).unwrap();
        *ws.values_mut().next().unwrap() += int(1);
        assert!(!check_vertex_sos_with(1, 1, [0, 1, 0], &u, &v, &p, &ws).unwrap());
    }
}
