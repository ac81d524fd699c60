//! Polynomial realization: the symmetric power `S^n C²` as polynomials of
//! degree `≤ n` in `z` (dehomogenized by `λ₁ = -z`, `λ₂ = 1`), difference
//! operators `Δ±`, the `γ` factors, `R^(n,1)` as a matrix of difference
//! operators, and the operator `O_m` that defines the SOS weights.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactcore::scalar::{self, Scalar};
use crate::exactcore::{Matrix, Poly};
use crate::sos::adjacent;
use crate::vertex::ModelParams;

/// A linear map from polynomials of degree `≤ in_bound` to degree
/// `≤ out_bound`, as a matrix on coefficient vectors (lowest power first).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiffOp {
    pub matrix: Matrix,
    pub in_bound: usize,
    pub out_bound: usize,
}

impl DiffOp {
    /// Tabulates `f` on the monomials `1, z, …, z^in_bound`.
    pub fn from_fn(
        in_bound: usize,
        out_bound: usize,
        mut f: impl FnMut(&Poly) -> Result<Poly>,
    ) -> Result<DiffOp> {
        let mut matrix = Matrix::zeros(out_bound + 1, in_bound + 1);
        for k in 0..=in_bound {
            let image = f(&Poly::monomial(k))?.to_vec(out_bound)?;
            for (i, c) in image.into_iter().enumerate() {
                matrix[(i, k)] = c;
            }
        }
        Ok(DiffOp { matrix, in_bound, out_bound })
    }

    pub fn identity(d: usize) -> DiffOp {
        DiffOp { matrix: Matrix::identity(d + 1), in_bound: d, out_bound: d }
    }

    /// Multiplication by `z`, degree `d` into degree `d + 1`.
    pub fn mul_z(d: usize) -> DiffOp {
        DiffOp::mul_poly(&Poly::monomial(1), d)
    }

    pub fn mul_poly(p: &Poly, d: usize) -> DiffOp {
        let out = d + p.degree().unwrap_or(0);
        DiffOp::from_fn(d, out, |x| Ok(x.mul(p))).expect("product fits")
    }

    pub fn apply(&self, p: &Poly) -> Result<Poly> {
        let v = p.to_vec(self.in_bound)?;
        Ok(Poly::new(self.matrix.apply(&v)?))
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &DiffOp) -> Result<DiffOp> {
        if inner.out_bound != self.in_bound {
            return Err(Error::ShapeMismatch(format!(
                "compose: inner maps into degree {}, outer expects {}",
                inner.out_bound, self.in_bound
            )));
        }
        Ok(DiffOp {
            matrix: self.matrix.mat_mul(&inner.matrix)?,
            in_bound: inner.in_bound,
            out_bound: self.out_bound,
        })
    }

    pub fn add(&self, other: &DiffOp) -> Result<DiffOp> {
        Ok(DiffOp { matrix: self.matrix.add(&other.matrix)?, ..self.clone() })
    }

    pub fn sub(&self, other: &DiffOp) -> Result<DiffOp> {
        Ok(DiffOp { matrix: self.matrix.sub(&other.matrix)?, ..self.clone() })
    }

    pub fn scale(&self, c: &Scalar) -> DiffOp {
        DiffOp { matrix: self.matrix.scale(c), ..self.clone() }
    }

    /// Lowers the output bound; fails unless the dropped rows are all zero.
    pub fn truncate(&self, out_bound: usize) -> Result<DiffOp> {
        if out_bound > self.out_bound {
            let rows: Vec<Vec<Scalar>> = (0..=out_bound)
                .map(|i| {
                    if i <= self.out_bound {
                        self.matrix.row(i).to_vec()
                    } else {
                        vec![Scalar::zero(); self.in_bound + 1]
                    }
                })
                .collect();
            return Ok(DiffOp { matrix: Matrix::from_rows(rows)?, out_bound, ..self.clone() });
        }
        for i in out_bound + 1..=self.out_bound {
            if self.matrix.row(i).iter().any(|x| !x.is_zero()) {
                return Err(Error::DegreeOverflow(out_bound));
            }
        }
        let rows: Vec<usize> = (0..=out_bound).collect();
        let cols: Vec<usize> = (0..=self.in_bound).collect();
        Ok(DiffOp { matrix: self.matrix.select(&rows, &cols), out_bound, ..self.clone() })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

/// `½(f(z+α) ± f(z-α))`.
pub fn delta(sign: Sign, f: &Poly, alpha: &Scalar) -> Poly {
    let up = f.shift(alpha);
    let down = f.shift(&-alpha);
    let half = scalar::q(1, 2);
    match sign {
        Sign::Plus => up.add(&down).scale(&half),
        Sign::Minus => up.sub(&down).scale(&half),
    }
}

pub fn delta_op(sign: Sign, degree_bound: usize, params: &ModelParams) -> DiffOp {
    DiffOp::from_fn(degree_bound, degree_bound, |f| Ok(delta(sign, f, &params.alpha)))
        .expect("Δ± preserves degree")
}

/// `γ(z - shift, p)`. For `p ≥ 0` this is the polynomial
/// `∏_{j<p} (z - shift + α(2j+1-p))`; for `p < 0` it is the reciprocal of
/// the `|p|` polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GammaFactor {
    pub p: i64,
    pub shift: Scalar,
    /// The product for `|p|`.
    pub poly: Poly,
}

impl GammaFactor {
    pub fn is_reciprocal(&self) -> bool {
        self.p < 0
    }

    /// Multiplication by the factor as an operator, degree `d` into `d + p`.
    pub fn as_op(&self, d: usize) -> Result<DiffOp> {
        if self.is_reciprocal() {
            return Err(Error::UnsupportedEvaluationPoint(format!(
                "γ with negative exponent {} is not a polynomial",
                self.p
            )));
        }
        Ok(DiffOp::mul_poly(&self.poly, d))
    }
}

pub fn gamma_poly(p: i64, shift: &Scalar, params: &ModelParams) -> GammaFactor {
    let k = p.abs();
    let roots: Vec<Scalar> =
        (0..k).map(|j| shift - &params.alpha * scalar::int(2 * j + 1 - k)).collect();
    GammaFactor { p, shift: shift.clone(), poly: Poly::from_roots(&roots) }
}

fn delta_pow(f: &Poly, times: usize, alpha: &Scalar) -> Poly {
    (0..times).fold(f.clone(), |acc, _| delta(Sign::Minus, &acc, alpha))
}

/// `γ(k) Δ₋^(k+l) γ(l) = Δ₋^l γ(k+l) Δ₋^k` on polynomials of degree
/// `≤ degree_bound`, with every `γ` taken at `z - shift`.
pub fn star_triangle_check(
    k: usize,
    l: usize,
    shift: &Scalar,
    degree_bound: usize,
    params: &ModelParams,
) -> bool {
    let a = &params.alpha;
    let g = |p: usize| gamma_poly(p as i64, shift, params).poly;
    let (gk, gl, gkl) = (g(k), g(l), g(k + l));
    (0..=degree_bound).all(|d| {
        let f = Poly::monomial(d);
        let lhs = gk.mul(&delta_pow(&gl.mul(&f), k + l, a));
        let rhs = delta_pow(&gkl.mul(&delta_pow(&f, k, a)), l, a);
        lhs == rhs
    })
}

/// The two commutation identities
/// `Δ₋ γ(p) = γ(p-1) [z Δ₋ + pα Δ₊]` and `γ(p) Δ₋ = [Δ₋ z - pα Δ₊] γ(p-1)`,
/// compared as operator matrices from degree `≤ degree_bound` into degree
/// `≤ degree_bound + p - 1`.
pub fn commutation_identities_hold(p: usize, degree_bound: usize, params: &ModelParams) -> Result<bool> {
    if p == 0 {
        return Err(Error::InvalidParameter("p must be at least 1".into()));
    }
    let a = &params.alpha;
    let zero = Scalar::zero();
    let gp = gamma_poly(p as i64, &zero, params).poly;
    let gp1 = gamma_poly(p as i64 - 1, &zero, params).poly;
    let pa = a * scalar::int(p as i64);
    let (d, out) = (degree_bound, degree_bound + p - 1);
    let dm = |f: &Poly| delta(Sign::Minus, f, a);
    let dp = |f: &Poly| delta(Sign::Plus, f, a);

    let lhs1 = DiffOp::from_fn(d, out, |f| Ok(dm(&gp.mul(f))))?;
    let rhs1 = DiffOp::from_fn(d, out, |f| Ok(gp1.mul(&dm(f).mul_z().add(&dp(f).scale(&pa)))))?;
    let lhs2 = DiffOp::from_fn(d, out, |f| Ok(gp.mul(&dm(f))))?;
    let rhs2 = DiffOp::from_fn(d, out, |f| {
        let g = gp1.mul(f);
        Ok(dm(&g.mul_z()).sub(&dp(&g).scale(&pa)))
    })?;
    Ok(lhs1 == rhs1 && lhs2 == rhs2)
}

/// The difference-operator matrix of `R^(n,1)(u)`, entries acting on degree
/// `≤ n`:
///
/// ```text
/// [ uΔ₊ + zα⁻¹Δ₋                    -α⁻¹Δ₋             ]
/// [ z²α⁻¹Δ₋ - nzΔ₊ - αu(u+n)Δ₋      (u+n)Δ₊ - zα⁻¹Δ₋   ]
/// ```
///
/// Products with `z` are formed with a working bound of `n + 2` and then
/// truncated back to `n`, which fails loudly if an entry leaves the space.
pub fn r_n1_matrix(n: usize, u: &Scalar, params: &ModelParams) -> Result<[[DiffOp; 2]; 2]> {
    let alpha = &params.alpha;
    let ainv = alpha.recip();
    let dp = delta_op(Sign::Plus, n, params);
    let dm = delta_op(Sign::Minus, n, params);
    let z = DiffOp::mul_z(n);
    let z2 = DiffOp::mul_z(n + 1).compose(&z)?;
    let lift = |op: &DiffOp, to: usize| op.truncate(to);
    let w = n + 2;

    let zdm = lift(&z.compose(&dm)?, w)?;
    let zdp = lift(&z.compose(&dp)?, w)?;
    let z2dm = z2.compose(&dm)?;
    let dm_w = lift(&dm, w)?;
    let dp_w = lift(&dp, w)?;
    let un = u + scalar::int(n as i64);

    let a = dp_w.scale(u).add(&zdm.scale(&ainv))?;
    let b = dm_w.scale(&-&ainv);
    let c = z2dm
        .scale(&ainv)
        .sub(&zdp.scale(&scalar::int(n as i64)))?
        .sub(&dm_w.scale(&(alpha * u * &un)))?;
    let d = dp_w.scale(&un).sub(&zdm.scale(&ainv))?;
    Ok([[a.truncate(n)?, b.truncate(n)?], [c.truncate(n)?, d.truncate(n)?]])
}

/// The signed permutation taking symmetric-power coordinates to polynomial
/// coefficients: `poly[j] = (-1)^j coords[n-j]`. Orthogonal.
pub fn dehomogenization(n: usize) -> Matrix {
    let mut d = Matrix::zeros(n + 1, n + 1);
    for j in 0..=n {
        d[(j, n - j)] = if j % 2 == 0 { Scalar::one() } else { -Scalar::one() };
    }
    d
}

pub fn coords_to_poly(coords: &[Scalar]) -> Poly {
    let n = coords.len() - 1;
    Poly::new(
        (0..=n).map(|j| if j % 2 == 0 { coords[n - j].clone() } else { -coords[n - j].clone() }).collect(),
    )
}

pub fn poly_to_coords(p: &Poly, n: usize) -> Result<Vec<Scalar>> {
    let c = p.to_vec(n)?;
    Ok((0..=n).map(|k| if (n - k).is_multiple_of(2) { c[n - k].clone() } else { -c[n - k].clone() }).collect())
}

/// Splits an `R^(n,1)` matrix (index `k·2 + i`) into its four auxiliary
/// blocks and moves each into the polynomial basis. Block `[i][j]` is the
/// operator for auxiliary output `i`, input `j`.
pub fn n1_blocks_in_poly_basis(fused: &Matrix, n: usize) -> Result<[[Matrix; 2]; 2]> {
    if fused.shape() != (2 * (n + 1), 2 * (n + 1)) {
        return Err(Error::ShapeMismatch(format!("R^({n},1) has shape {:?}", fused.shape())));
    }
    let d = dehomogenization(n);
    let dt = d.transpose();
    let block = |i: usize, j: usize| -> Result<Matrix> {
        let b = Matrix::from_fn(n + 1, n + 1, |k, l| fused[(k * 2 + i, l * 2 + j)].clone());
        d.mat_mul(&b)?.mat_mul(&dt)
    };
    Ok([[block(0, 0)?, block(0, 1)?], [block(1, 0)?, block(1, 1)?]])
}

/// The dehomogenized fused intertwiner
/// `(-1)^n ∏_{p=1}^{n₊} [z - α(u+n-a-2p+1-t)] ∏_{q=1}^{n₋} [z - α(u+n+a-2q+1+s)]`
/// with `n± = (n ± (b-a))/2`; zero when `b - a` is not a step of size `n`.
pub fn intertwiner_poly(n: usize, u: &Scalar, a: i64, b: i64, params: &ModelParams) -> Poly {
    if !adjacent(b - a, n) {
        return Poly::zero(n);
    }
    let ni = n as i64;
    let (np, nm) = ((ni + b - a) / 2, (ni - b + a) / 2);
    let al = &params.alpha;
    let mut roots = Vec::with_capacity(n);
    for p in 1..=np {
        roots.push(al * (u + scalar::int(ni - a - 2 * p + 1) - &params.t));
    }
    for q in 1..=nm {
        roots.push(al * (u + scalar::int(ni + a - 2 * q + 1) + &params.s));
    }
    let sign = if n.is_multiple_of(2) { Scalar::one() } else { -Scalar::one() };
    Poly::from_roots(&roots).scale(&sign).with_bound(n).expect("degree n")
}

/// `([k0 - z] Δ₋ - coef Δ₊) f`.
fn first_order(k0: &Scalar, coef: &Scalar, f: &Poly, alpha: &Scalar) -> Poly {
    let d = delta(Sign::Minus, f, alpha);
    d.scale(k0).sub(&d.mul_z()).sub(&delta(Sign::Plus, f, alpha).scale(coef))
}

fn check_step(m: usize, b: i64, c: i64) -> Result<(i64, i64)> {
    if !adjacent(c - b, m) {
        return Err(Error::InvalidAdjacency(format!("c - b = {} is not a step of size {m}", c - b)));
    }
    let mi = m as i64;
    Ok(((mi + c - b) / 2, (mi - c + b) / 2))
}

/// Applies the ordered product form of `O_m(u; b, c)` to `f`:
/// `(-α)^(-m) P₁ P₂ f`, where `P₂` applies the `m₋` factors
/// `[α(-u+(m+b+c)/2+s) - z]Δ₋ - α(u-m₊-l′)Δ₊` for `l′ = 0, 1, …` and then `P₁`
/// the `m₊` factors `[α(-u+(m-b-c)/2-t) - z]Δ₋ - α(u-l)Δ₊`.
pub fn o_m_apply(m: usize, u: &Scalar, b: i64, c: i64, f: &Poly, params: &ModelParams) -> Result<Poly> {
    let (mp, mm) = check_step(m, b, c)?;
    let al = &params.alpha;
    let half = |x: i64| scalar::q(x, 2);
    let mut f = f.clone();
    let k2 = al * (-u + half(m as i64 + b + c) + &params.s);
    for lp in 0..mm {
        f = first_order(&k2, &(al * (u - scalar::int(mp + lp))), &f, al);
    }
    let k1 = al * (-u + half(m as i64 - b - c) - &params.t);
    for l in 0..mp {
        f = first_order(&k1, &(al * (u - scalar::int(l))), &f, al);
    }
    Ok(f.scale(&scalar::powi(&-al.clone(), -(m as i64))))
}

pub fn o_m_product_form(
    m: usize,
    u: &Scalar,
    b: i64,
    c: i64,
    params: &ModelParams,
    degree_bound: usize,
) -> Result<DiffOp> {
    check_step(m, b, c)?;
    DiffOp::from_fn(degree_bound, degree_bound, |f| o_m_apply(m, u, b, c, f, params))
}

/// A ratio of polynomials, kept reduced.
#[derive(Clone, Debug)]
struct RatFn {
    num: Poly,
    den: Poly,
}

fn poly_gcd(a: &Poly, b: &Poly) -> Poly {
    let (mut a, mut b) = (a.clone(), b.clone());
    while !b.is_zero() {
        let (_, r) = a.div_rem(&b).expect("nonzero divisor");
        a = b;
        b = r;
    }
    match a.degree() {
        None => Poly::one(),
        Some(d) => a.scale(&a.coeff(d).recip()).trimmed(),
    }
}

impl RatFn {
    fn poly(p: Poly) -> Self {
        RatFn { num: p, den: Poly::one() }
    }

    fn reduced(num: Poly, den: Poly) -> Self {
        let g = poly_gcd(&num, &den);
        let num = num.div_exact(&g).expect("gcd divides");
        let den = den.div_exact(&g).expect("gcd divides");
        let lead = den.coeff(den.degree().unwrap_or(0)).recip();
        RatFn { num: num.scale(&lead).trimmed(), den: den.scale(&lead).trimmed() }
    }

    fn times_gamma(&self, g: &GammaFactor) -> Self {
        if g.is_reciprocal() {
            RatFn::reduced(self.num.clone(), self.den.mul(&g.poly))
        } else {
            RatFn::reduced(self.num.mul(&g.poly), self.den.clone())
        }
    }

    fn delta_minus(&self, alpha: &Scalar) -> Self {
        let (pu, pd) = (self.num.shift(alpha), self.num.shift(&-alpha));
        let (qu, qd) = (self.den.shift(alpha), self.den.shift(&-alpha));
        let num = pu.mul(&qd).sub(&pd.mul(&qu));
        let den = qu.mul(&qd).scale(&scalar::int(2));
        RatFn::reduced(num, den)
    }
}

/// `α^(-m) γ(z-u₁, m₊-u) Δ₋^{m₊} γ(z-u₁, u) γ(z-u₂, m-u) Δ₋^{m₋} γ(z-u₂, u-m₊)`
/// with `u₁ = α(-u+(m-b-c)/2-t)`, `u₂ = α(-u+(m+b+c)/2+s)`.
///
/// Only defined for integer `u`, where every exponent is an integer. The
/// negative-exponent factors are applied as genuine divisions; the result is
/// required to be a polynomial of degree `≤ degree_bound`.
pub fn o_m_gamma_form(
    m: usize,
    u: &Scalar,
    b: i64,
    c: i64,
    params: &ModelParams,
    degree_bound: usize,
) -> Result<DiffOp> {
    let (mp, mm) = check_step(m, b, c)?;
    let ui = scalar::as_integer(u).ok_or_else(|| {
        Error::UnsupportedEvaluationPoint(format!("u = {} is not an integer", scalar::format(u)))
    })?;
    let al = &params.alpha;
    let mi = m as i64;
    let u1 = al * (-u + scalar::q(mi - b - c, 2) - &params.t);
    let u2 = al * (-u + scalar::q(mi + b + c, 2) + &params.s);
    let g = |p: i64, sh: &Scalar| gamma_poly(p, sh, params);
    let scale = scalar::powi(al, -mi);
    DiffOp::from_fn(degree_bound, degree_bound, |f| {
        let mut r = RatFn::poly(f.clone()).times_gamma(&g(ui - mp, &u2));
        for _ in 0..mm {
            r = r.delta_minus(al);
        }
        r = r.times_gamma(&g(mi - ui, &u2)).times_gamma(&g(ui, &u1));
        for _ in 0..mp {
            r = r.delta_minus(al);
        }
        r = r.times_gamma(&g(mp - ui, &u1));
        if r.den.degree() != Some(0) {
            return Err(Error::UnsupportedEvaluationPoint(format!(
                "u = {ui}: γ-factorized form is not polynomial"
            )));
        }
        Ok(r.num.scale(&(&scale / r.den.coeff(0))))
    })
}

/// Certifies that every matrix entry of the product form of `O_m` is a
/// polynomial of degree `≤ m` in `u`: interpolate through `m + 2` sample
/// points, require the top coefficient to vanish, then check the degree-`m`
/// interpolant at the given extra points.
pub fn o_m_degree_certificate(
    m: usize,
    b: i64,
    c: i64,
    params: &ModelParams,
    degree_bound: usize,
    samples: &[Scalar],
    extra: &[Scalar],
) -> Result<bool> {
    if samples.len() < m + 2 {
        return Err(Error::InvalidParameter(format!("need {} samples", m + 2)));
    }
    let ops: Vec<DiffOp> = samples
        .iter()
        .map(|u| o_m_product_form(m, u, b, c, params, degree_bound))
        .collect::<Result<_>>()?;
    let checks: Vec<DiffOp> = extra
        .iter()
        .map(|u| o_m_product_form(m, u, b, c, params, degree_bound))
        .collect::<Result<_>>()?;
    for i in 0..=degree_bound {
        for j in 0..=degree_bound {
            let ys: Vec<Scalar> = ops.iter().map(|o| o.matrix[(i, j)].clone()).collect();
            let p = Poly::interpolate(samples, &ys)?;
            if p.degree().is_some_and(|d| d > m) {
                return Ok(false);
            }
            for (u, op) in extra.iter().zip(&checks) {
                if p.eval(u) != op.matrix[(i, j)] {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactcore::scalar::{int, q};
    use crate::fusion::{fuse_n1, fusion_normalization};
    use crate::vertex::r7v;

    fn params() -> ModelParams {
        ModelParams::new(q(3, 2), q(1, 3), q(1, 5)).unwrap()
    }

    #[test]
    fn delta_examples() {
        let p = params();
        let a = &p.alpha;
        let z = Poly::monomial(1);
        let z2 = Poly::monomial(2);
        assert_eq!(delta(Sign::Minus, &z, a), Poly::constant(a.clone()));
        assert_eq!(delta(Sign::Minus, &z2, a), z.scale(&(a * int(2))));
        assert_eq!(delta(Sign::Plus, &z2, a), z2.add(&Poly::constant(a * a)));
        assert_eq!(delta_op(Sign::Plus, 0, &p), DiffOp::identity(0));
        let d = delta_op(Sign::Minus, 4, &p);
        let mut acc = DiffOp::identity(4);
        for _ in 0..5 {
            acc = d.compose(&acc).unwrap();
        }
        assert!(acc.matrix.is_zero());
    }

    #[test]
    fn gamma_examples() {
        let p = params();
        let sh = q(2, 5);
        assert_eq!(gamma_poly(0, &sh, &p).poly, Poly::one());
        assert_eq!(gamma_poly(1, &sh, &p).poly, Poly::linear(&sh));
        let expect = Poly::linear(&(&sh + &p.alpha)).mul(&Poly::linear(&(&sh - &p.alpha)));
        assert_eq!(gamma_poly(2, &sh, &p).poly, expect);
        assert!(gamma_poly(-2, &sh, &p).is_reciprocal());
    }

    #[test]
    fn star_triangle_small() {
        let p = params();
        assert!(star_triangle_check(0, 0, &int(0), 3, &p));
        assert!(star_triangle_check(1, 0, &q(1, 3), 6, &p));
        assert!(star_triangle_check(2, 3, &q(-2, 3), 8, &p));
    }

    #[test]
    fn commutation() {
        for k in 1..=4 {
            assert!(commutation_identities_hold(k, 4, &params()).unwrap(), "p={k}");
        }
    }

    #[test]
    fn intertwiner_examples() {
        let p = params();
        let u = q(7, 4);
        let l = 2;
        let up = intertwiner_poly(1, &u, l, l + 1, &p);
        assert_eq!(up, Poly::linear(&(&p.alpha * (&u - int(l) - &p.t))).scale(&int(-1)));
        let down = intertwiner_poly(1, &u, l, l - 1, &p);
        assert_eq!(down, Poly::linear(&(&p.alpha * (&u + int(l) + &p.s))).scale(&int(-1)));
        assert!(intertwiner_poly(2, &u, 0, 3, &p).is_zero());
    }

    #[test]
    fn n1_matrix_matches_fusion() {
        let p = params();
        for n in 1..=3 {
            let u = q(5, 7);
            let ops = r_n1_matrix(n, &u, &p).unwrap();
            let blocks = n1_blocks_in_poly_basis(&fuse_n1(n, &u, &p), n).unwrap();
            let rho = fusion_normalization(n, 1, &u);
            for i in 0..2 {
                for j in 0..2 {
                    assert_eq!(blocks[i][j], ops[i][j].matrix.scale(&rho), "n={n} block ({i},{j})");
                }
            }
        }
        // n = 1 is r7v itself
        let blocks = n1_blocks_in_poly_basis(&r7v(&q(2, 3), &p), 1).unwrap();
        let ops = r_n1_matrix(1, &q(2, 3), &p).unwrap();
        assert_eq!(blocks[1][0], ops[1][0].matrix);
    }

    #[test]
    fn om_single_factor() {
        let p = params();
        let (u, c) = (q(3, 4), 2);
        let b = c + 1;
        let op = o_m_product_form(1, &u, b, c, &p, 3).unwrap();
        let al = &p.alpha;
        let k0 = al * (-&u + int(c + 1) + &p.s);
        let expect = DiffOp::from_fn(3, 3, |f| Ok(first_order(&k0, &(al * &u), f, al).scale(&-al.recip())))
            .unwrap();
        assert_eq!(op, expect);
        assert_eq!(o_m_product_form(0, &u, 1, 1, &p, 3).unwrap(), DiffOp::identity(3));
    }

    #[test]
    fn om_forms_agree() {
        let p = params();
        for (m, b, c) in [(1, 0, 1), (2, 0, 0), (2, 1, 1), (2, 3, 1), (3, 0, 1)] {
            for u in 0..=m as i64 {
                let prod = o_m_product_form(m, &int(u), b, c, &p, 4).unwrap();
                let gam = o_m_gamma_form(m, &int(u), b, c, &p, 4).unwrap();
                assert_eq!(prod, gam, "m={m} b={b} c={c} u={u}");
            }
        }
        assert!(matches!(
            o_m_gamma_form(2, &q(3, 2), 0, 0, &p, 4),
            Err(Error::UnsupportedEvaluationPoint(_))
        ));
    }

    #[test]
    fn om_polynomial_in_u() {
        let p = params();
        let samples: Vec<Scalar> = (0..4).map(|i| q(2 * i + 1, 3)).collect();
        let extra = [q(-5, 7), q(13, 4)];
        assert!(o_m_degree_certificate(2, 1, 1, &p, 3, &samples, &extra).unwrap());
    }

    #[test]
    fn coordinate_conversion_round_trip() {
        let c = vec![q(1, 2), int(-3), int(5), q(2, 9)];
        let poly = coords_to_poly(&c);
        assert_eq!(poly_to_coords(&poly, 3).unwrap(), c);
        assert_eq!(dehomogenization(3).apply(&c).unwrap(), poly.to_vec(3).unwrap());
    }
}
