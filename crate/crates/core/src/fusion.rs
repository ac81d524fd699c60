//! Symmetrizers and the fused operators `R^(n,1)`, `R^(n,m)`.
//!
//! A space of `N` spin-½ sites has basis index bits with site 0 most
//! significant; bit value 0 is `e¹`, 1 is `e²`. The symmetric power `S^n C²`
//! has basis `k = 0..=n` (number of `e²` factors), which corresponds to the
//! monomial `λ₁^(n-k) λ₂^k`.

use num_traits::{One, Zero};

use crate::error::Result;
use crate::exactcore::scalar::{self, Scalar};
use crate::exactcore::Matrix;
use crate::vertex::{embed_pair, r7v, ModelParams};

fn bit(x: usize, site: usize, n_sites: usize) -> usize {
    (x >> (n_sites - 1 - site)) & 1
}

fn with_bit(x: usize, site: usize, n_sites: usize, value: usize) -> usize {
    let mask = 1 << (n_sites - 1 - site);
    if value == 0 {
        x & !mask
    } else {
        x | mask
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for slot in 0..n {
            let mut q = p.clone();
            q.insert(slot, n - 1);
            out.push(q);
        }
    }
    out
}

/// The projector `Π` on `(C²)^⊗n`, the average of all `n!` factor
/// permutations.
pub fn symmetrizer(n: usize) -> Matrix {
    let dim = 1 << n;
    let perms = permutations(n);
    let weight = scalar::q(1, perms.len() as i64);
    let mut out = Matrix::zeros(dim, dim);
    for col in 0..dim {
        for p in &perms {
            let row = (0..n).fold(0, |acc, i| with_bit(acc, i, n, bit(col, p[i], n)));
            out[(row, col)] += &weight;
        }
    }
    out
}

/// Symmetrizer on a subset of the sites, dense. Averaging over permutations
/// of the chosen sites sends a basis vector uniformly onto all vectors that
/// agree outside the subset and have the same number of `e²`s inside it.
pub fn symmetrizer_on(sites: &[usize], n_sites: usize) -> Matrix {
    apply_sym_left(sites, n_sites, &Matrix::identity(1 << n_sites))
}

fn popcount_on(x: usize, sites: &[usize], n_sites: usize) -> usize {
    sites.iter().map(|&s| bit(x, s, n_sites)).sum()
}

/// `Π_sites · x` without forming `Π_sites`.
fn apply_sym_left(sites: &[usize], n_sites: usize, x: &Matrix) -> Matrix {
    let dim = 1 << n_sites;
    let mask: usize = sites.iter().map(|&s| 1 << (n_sites - 1 - s)).sum();
    // Group rows by (bits outside the subset, popcount inside).
    let mut classes: std::collections::BTreeMap<(usize, usize), Vec<usize>> = Default::default();
    for r in 0..dim {
        classes.entry((r & !mask, popcount_on(r, sites, n_sites))).or_default().push(r);
    }
    let mut out = Matrix::zeros(dim, x.cols());
    for members in classes.values() {
        let inv = scalar::q(1, members.len() as i64);
        for c in 0..x.cols() {
            let sum = members.iter().fold(Scalar::zero(), |acc, &r| acc + &x[(r, c)]);
            if sum.is_zero() {
                continue;
            }
            let avg = sum * &inv;
            for &r in members {
                out[(r, c)] = avg.clone();
            }
        }
    }
    out
}

/// `R_{p q} · x` for a 4×4 two-site operator, without embedding it.
fn apply_pair_left(r: &Matrix, p: usize, q: usize, n_sites: usize, x: &Matrix) -> Matrix {
    let mut out = Matrix::zeros(x.rows(), x.cols());
    for row in 0..x.rows() {
        let lin = bit(row, p, n_sites) * 2 + bit(row, q, n_sites);
        for lout in 0..4 {
            let v = &r[(lout, lin)];
            if v.is_zero() {
                continue;
            }
            let target = with_bit(with_bit(row, p, n_sites, lout >> 1), q, n_sites, lout & 1);
            for c in 0..x.cols() {
                let e = &x[(row, c)];
                if !e.is_zero() {
                    out[(target, c)] += v * e;
                }
            }
        }
    }
    out
}

/// Embedding and projection between `S^n C²` and `(C²)^⊗n`.
#[derive(Clone, Debug, PartialEq)]
pub struct SymBasis {
    pub n: usize,
    /// `2^n × (n+1)`: column `k` is the symmetrized tensor with `k` factors
    /// `e²`, each basis tensor weighted `1/C(n,k)`.
    pub embed: Matrix,
    /// `(n+1) × 2^n`: row `k` sums the coordinates of the tensors with `k`
    /// factors `e²`, i.e. reads off the monomial coefficients.
    pub project: Matrix,
}

impl SymBasis {
    pub fn new(n: usize) -> Self {
        let dim = 1 << n;
        let mut embed = Matrix::zeros(dim, n + 1);
        let mut project = Matrix::zeros(n + 1, dim);
        for x in 0..dim {
            let k = x.count_ones() as usize;
            embed[(x, k)] = scalar::binomial(n as i64, k as i64).recip();
            project[(k, x)] = Scalar::one();
        }
        SymBasis { n, embed, project }
    }

    /// Symmetric-power coordinates of a tensor.
    pub fn coords(&self, tensor: &[Scalar]) -> Result<Vec<Scalar>> {
        self.project.apply(tensor)
    }
}

/// `R^(n,1)(u)`: `Π_{1..n} R_{1,0̄}(u+n-1) ⋯ R_{n,0̄}(u)` on `(C²)^⊗n ⊗ C²`,
/// restricted to `S^n C² ⊗ C²`. Index `k·2 + i`.
///
/// Built from dense embedded operators, independently of [`fuse_nm`].
pub fn fuse_n1(n: usize, u: &Scalar, params: &ModelParams) -> Matrix {
    let n_sites = n + 1;
    let dims = vec![2; n_sites];
    let first: Vec<usize> = (0..n).collect();
    let mut full = symmetrizer_on(&first, n_sites);
    for i in 0..n {
        let arg = u + scalar::int((n - 1 - i) as i64);
        let op = embed_pair(&r7v(&arg, params), &dims, i, n).expect("site pair in range");
        full = full.mat_mul(&op).expect("conforming");
    }
    restrict(&full, n, 1)
}

fn restrict(full: &Matrix, n: usize, m: usize) -> Matrix {
    let (bn, bm) = (SymBasis::new(n), SymBasis::new(m));
    let p = bn.project.kron(&bm.project);
    let e = bn.embed.kron(&bm.embed);
    p.mat_mul(full).and_then(|x| x.mat_mul(&e)).expect("conforming")
}

/// Applies the full fused product on `(C²)^⊗n ⊗ (C²)^⊗m` to `x` from the left.
fn fused_product_apply(n: usize, m: usize, u: &Scalar, params: &ModelParams, x: Matrix) -> Matrix {
    let n_sites = n + m;
    let first: Vec<usize> = (0..n).collect();
    let bar: Vec<usize> = (n..n_sites).collect();
    let mut x = x;
    // Rightmost factor R^(n,1)_{1..n, 1̄}(u-m+1) acts first.
    for j in 1..=m {
        let uj = u - scalar::int((m - j) as i64);
        let site = n + j - 1;
        for i in (0..n).rev() {
            let arg = &uj + scalar::int((n - 1 - i) as i64);
            x = apply_pair_left(&r7v(&arg, params), i, site, n_sites, &x);
        }
        x = apply_sym_left(&first, n_sites, &x);
    }
    apply_sym_left(&bar, n_sites, &x)
}

/// The fused product before restriction, a `2^(n+m)`-dimensional matrix.
pub fn fuse_nm_unrestricted(n: usize, m: usize, u: &Scalar, params: &ModelParams) -> Matrix {
    fused_product_apply(n, m, u, params, Matrix::identity(1 << (n + m)))
}

/// `R^(n,m)(u) = Π_{1̄..m̄} R^(n,1)_{·,m̄}(u) R^(n,1)_{·,m̄-1}(u-1) ⋯ R^(n,1)_{·,1̄}(u-m+1)`
/// restricted to `S^n C² ⊗ S^m C²`. Index `k·(m+1) + l`.
pub fn fuse_nm(n: usize, m: usize, u: &Scalar, params: &ModelParams) -> Matrix {
    let (bn, bm) = (SymBasis::new(n), SymBasis::new(m));
    let image = fused_product_apply(n, m, u, params, bn.embed.kron(&bm.embed));
    bn.project.kron(&bm.project).mat_mul(&image).expect("conforming")
}

/// The scalar by which the fused product differs from the operator whose
/// matrix elements are the normalized difference-operator form:
/// `ρ(n,m,u) = ∏_{j=0}^{m-1} ∏_{k=1}^{n-1} (u - j + k)`.
pub fn fusion_normalization(n: usize, m: usize, u: &Scalar) -> Scalar {
    let mut rho = Scalar::one();
    for j in 0..m as i64 {
        for k in 1..n as i64 {
            rho *= u - scalar::int(j) + scalar::int(k);
        }
    }
    rho
}

/// `(I - Π_first ⊗ Π_bar) · full`; zero when the image is symmetric.
pub fn symmetric_residual(full: &Matrix, n: usize, m: usize) -> Matrix {
    let n_sites = n + m;
    let first: Vec<usize> = (0..n).collect();
    let bar: Vec<usize> = (n..n_sites).collect();
    let projected = apply_sym_left(&bar, n_sites, &apply_sym_left(&first, n_sites, full));
    full.sub(&projected).expect("same shape")
}
