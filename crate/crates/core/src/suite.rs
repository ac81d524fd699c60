//! Parametrized identity checks. Each check runs over a family of
//! parameter tuples and reports the tuples that failed; the CLI `verify`
//! command and the acceptance target are thin layers over these.

use std::collections::BTreeMap;
use std::fmt;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::correspondence::{
    check_vertex_sos_with, correspondence_sides, fused_intertwiner_tensor, independence_determinant, solve_weights_from_relation,
    Anchor, IntertwinerSet,
};
use crate::elevenvertex::{psi_const, r11v, shift_one, shifted_intertwiner, similarity_fused};
use crate::error::Result;
use crate::exactcore::scalar::{self, int, q, Scalar};
use crate::exactcore::Matrix;
use crate::fusion::{fuse_n1, fuse_nm, fusion_normalization};
use crate::lattice::{partition_vertex_bruteforce, partition_vertex_transfer, transfer_commutator, LatticeSpec};
use crate::polyrep::{
    n1_blocks_in_poly_basis, o_m_degree_certificate, o_m_gamma_form, o_m_product_form, poly_to_coords,
    r_n1_matrix, star_triangle_check,
};
use crate::sos::{
    adjacent, check_ybe_sos, gauge_weights, gauge_ybe_residual, path_function_bruteforce, path_function_closed,
    w0_weight, w_nm_hypergeometric, w_nm_sum, Boundary, GaugeMode, PathFunctionArgs, WeightQuery,
};
use crate::vertex::{check_degeneracy, check_ybe_triple, permutation_op, r7v, ModelParams};

/// Result of one check family.
#[derive(Clone, Debug, Default, Serialize)]
pub struct Outcome {
    pub name: String,
    pub cases: usize,
    pub failures: Vec<String>,
    /// Free-form measurements (e.g. float residuals).
    pub notes: Vec<String>,
    /// Every parameter tuple with its verdict, in check order.
    pub tuples: Vec<(String, bool)>,
}

impl Outcome {
    pub fn new(name: &str) -> Self {
        Outcome { name: name.to_string(), ..Default::default() }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty() && self.cases > 0
    }

    fn record(&mut self, ok: Result<bool>, what: impl FnOnce() -> String) {
        self.cases += 1;
        let what = what();
        self.tuples.push((what.clone(), matches!(ok, Ok(true))));
        match ok {
            Ok(true) => {}
            Ok(false) => self.failures.push(what),
            Err(e) => self.failures.push(format!("{what} ({e})")),
        }
    }

    fn merge(mut self, results: Vec<(Result<bool>, String)>) -> Self {
        for (ok, what) in results {
            self.record(ok, || what);
        }
        self
    }
}

impl Outcome {
    /// Indented notes and the first few failures, one per line.
    pub fn details(&self) -> Vec<String> {
        let mut v: Vec<String> = self.notes.iter().map(|n| format!("    {n}")).collect();
        v.extend(self.failures.iter().take(10).map(|x| format!("    failed: {x}")));
        if self.failures.len() > 10 {
            v.push(format!("    … {} more", self.failures.len() - 10));
        }
        v
    }
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        write!(f, "{status} {} ({} cases", self.name, self.cases)?;
        if !self.failures.is_empty() {
            write!(f, ", {} failed", self.failures.len())?;
        }
        write!(f, ")")
    }
}

/// A random rational `p/q` with `|p| ≤ num`, `1 ≤ q ≤ den`.
pub fn random_rational(rng: &mut impl Rng, num: i64, den: i64) -> Scalar {
    q(rng.gen_range(-num..=num), rng.gen_range(1..=den))
}

/// A non-integer random rational.
pub fn random_generic(rng: &mut impl Rng) -> Scalar {
    loop {
        let x = random_rational(rng, 40, 13);
        if !x.is_integer() {
            return x;
        }
    }
}

fn fmt_s(x: &Scalar) -> String {
    scalar::format(x)
}

fn params_alpha(alpha: &Scalar) -> ModelParams {
    ModelParams::new(alpha.clone(), q(1, 3), q(1, 6)).expect("nonzero alpha")
}

pub fn seven_vertex_ybe(alphas: &[Scalar], pairs: usize, seed: u64) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let cases: Vec<(Scalar, Scalar, Scalar)> = alphas
        .iter()
        .flat_map(|a| (0..pairs).map(|_| (a.clone(), random_generic(&mut rng), random_generic(&mut rng))).collect::<Vec<_>>())
        .collect();
    let results = cases
        .par_iter()
        .map(|(a, u, v)| {
            let p = params_alpha(a);
            let ok = check_ybe_triple(&r7v(v, &p), &r7v(u, &p), &r7v(&(u - v), &p), (2, 2, 2));
            (ok, format!("alpha={} u={} v={}", fmt_s(a), fmt_s(u), fmt_s(v)))
        })
        .collect();
    Outcome::new("seven-vertex Yang-Baxter").merge(results)
}

pub fn degeneracy(alphas: &[Scalar]) -> Outcome {
    let mut out = Outcome::new("R(-1) = -(I - P)");
    for a in alphas {
        let p = params_alpha(a);
        let expect = Matrix::identity(4).sub(&permutation_op(2)).expect("4x4").scale(&int(-1));
        let ok = check_degeneracy(&p).map(|c| c == int(-1) && r7v(&int(-1), &p) == expect);
        out.record(ok, || format!("alpha={}", fmt_s(a)));
    }
    out
}

/// All `(k, n, l)` with positive entries and `k + n + l ≤ max_sum`.
pub fn triples(max_sum: usize) -> Vec<(usize, usize, usize)> {
    let mut t = Vec::new();
    for k in 1..max_sum {
        for n in 1..max_sum {
            for l in 1..max_sum {
                if k + n + l <= max_sum {
                    t.push((k, n, l));
                }
            }
        }
    }
    t
}

/// `R^(k,n)(v) R^(k,l)(u) R^(n,l)(u-v) = R^(n,l)(u-v) R^(k,l)(u) R^(k,n)(v)`.
pub fn fused_ybe(max_sum: usize, pairs: usize, seed: u64) -> Outcome {
    let p = ModelParams::new(q(5, 3), q(1, 3), q(1, 6)).expect("alpha");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut cases = Vec::new();
    for t in triples(max_sum) {
        for _ in 0..pairs {
            cases.push((t, random_generic(&mut rng), random_generic(&mut rng)));
        }
    }
    let results = cases
        .par_iter()
        .map(|&((k, n, l), ref u, ref v)| {
            let ok = check_ybe_triple(
                &fuse_nm(k, n, v, &p),
                &fuse_nm(k, l, u, &p),
                &fuse_nm(n, l, &(u - v), &p),
                (k + 1, n + 1, l + 1),
            );
            (ok, format!("(k,n,l)=({k},{n},{l}) u={} v={}", fmt_s(u), fmt_s(v)))
        })
        .collect();
    Outcome::new("fused Yang-Baxter").merge(results)
}

/// `fuse_n1` in the polynomial basis equals `ρ(n,1,u)` times the
/// difference-operator matrix.
pub fn representation_agreement(max_n: usize, us: &[Scalar]) -> Outcome {
    let p = ModelParams::new(q(-2, 7), q(2, 5), q(1, 3)).expect("alpha");
    let cases: Vec<(usize, Scalar)> =
        (1..=max_n).flat_map(|n| us.iter().map(move |u| (n, u.clone()))).collect();
    let results = cases
        .par_iter()
        .map(|(n, u)| {
            let ok = (|| {
                let ops = r_n1_matrix(*n, u, &p)?;
                let blocks = n1_blocks_in_poly_basis(&fuse_n1(*n, u, &p), *n)?;
                let rho = fusion_normalization(*n, 1, u);
                Ok((0..2).all(|i| (0..2).all(|j| blocks[i][j] == ops[i][j].matrix.scale(&rho))))
            })();
            (ok, format!("n={n} u={}", fmt_s(u)))
        })
        .collect();
    Outcome::new("R^(n,1) difference-operator form").merge(results)
}

pub fn star_triangle(max_kl: usize, degree: usize, alphas: &[Scalar], shifts: &[Scalar]) -> Outcome {
    let mut cases = Vec::new();
    for a in alphas {
        for s in shifts {
            for k in 0..=max_kl {
                for l in 0..=max_kl {
                    cases.push((a.clone(), s.clone(), k, l));
                }
            }
        }
    }
    let results = cases
        .par_iter()
        .map(|(a, s, k, l)| {
            let ok = Ok(star_triangle_check(*k, *l, s, degree, &params_alpha(a)));
            (ok, format!("k={k} l={l} alpha={} shift={}", fmt_s(a), fmt_s(s)))
        })
        .collect();
    Outcome::new("star-triangle relation").merge(results)
}

/// Product form of `O_m` equals the γ-factorized form at every integer
/// `u ∈ {0..m}`, and the product form is of degree `≤ m` in `u`.
pub fn o_m_identity(max_m: usize, degree: usize) -> Outcome {
    let p = ModelParams::new(q(3, 4), q(2, 7), q(-1, 5)).expect("alpha");
    let mut cases = Vec::new();
    for m in 0..=max_m {
        for b in [-1i64, 0, 2] {
            for j in 0..=m as i64 {
                cases.push((m, b, b - m as i64 + 2 * j));
            }
        }
    }
    let samples: Vec<Scalar> = (0..6).map(|i| q(3 * i - 4, 7)).collect();
    let extra = [q(11, 5), q(-9, 4), q(17, 3)];
    let results = cases
        .par_iter()
        .flat_map(|&(m, b, c)| {
            let mut v: Vec<(Result<bool>, String)> = (0..=m as i64)
                .map(|u| {
                    let ok = (|| {
                        Ok(o_m_product_form(m, &int(u), b, c, &p, degree)?
                            == o_m_gamma_form(m, &int(u), b, c, &p, degree)?)
                    })();
                    (ok, format!("m={m} b={b} c={c} u={u}"))
                })
                .collect();
            let cert = o_m_degree_certificate(m, b, c, &p, degree, &samples[..m + 2], &extra);
            v.push((cert, format!("degree certificate m={m} b={b} c={c}")));
            v
        })
        .collect();
    Outcome::new("O_m factorization").merge(results)
}

/// Valid `(a, b, b′, c)` with `|a|, |c| ≤ bound`.
pub fn label_grid(n: usize, m: usize, bound: i64) -> Vec<[i64; 4]> {
    let (ni, mi) = (n as i64, m as i64);
    let mut out = Vec::new();
    for a in -bound..=bound {
        for c in -bound..=bound {
            for b in c - mi..=c + mi {
                for bp in c - ni..=c + ni {
                    let q = WeightQuery::new(n, m, [a, b, bp, c], int(0));
                    if q.is_valid() {
                        out.push([a, b, bp, c]);
                    }
                }
            }
        }
    }
    out
}

/// Sum formula, `₉F₈` form and linear-solve oracle agree exactly.
pub fn three_way(sizes: &[(usize, usize)], us: &[Scalar], ws: &[Scalar], bound: i64) -> Outcome {
    let mut cases = Vec::new();
    for &(n, m) in sizes {
        for u in us {
            for w in ws {
                // group by (a, b, c): one oracle solve serves every b′
                let mut groups: BTreeMap<[i64; 3], Vec<i64>> = BTreeMap::new();
                for [a, b, bp, c] in label_grid(n, m, bound) {
                    groups.entry([a, b, c]).or_default().push(bp);
                }
                for (abc, bps) in groups {
                    cases.push((n, m, u.clone(), w.clone(), abc, bps));
                }
            }
        }
    }
    let results: Vec<Vec<(Result<bool>, String)>> = cases
        .par_iter()
        .map(|(n, m, u, w, [a, b, c], bps)| {
            let p = ModelParams::with_w(q(7, 5), w.clone()).expect("alpha");
            let tag = |bp: i64| {
                format!("(n,m)=({n},{m}) (a,b,b',c)=({a},{b},{bp},{c}) u={} w={}", fmt_s(u), fmt_s(w))
            };
            let oracle = match solve_weights_from_relation(*n, *m, *a, *b, *c, u, &p) {
                Ok(o) => o,
                Err(e) => return bps.iter().map(|&bp| (Err(e.clone()), tag(bp))).collect(),
            };
            bps.iter()
                .map(|&bp| {
                    let qy = WeightQuery::new(*n, *m, [*a, *b, bp, *c], u.clone());
                    let ok = (|| {
                        let s = w_nm_sum(&qy, &p)?;
                        let h = w_nm_hypergeometric(&qy, &p)?;
                        let o = oracle.get(&bp).cloned().unwrap_or_default();
                        Ok(s == h && h == o)
                    })();
                    (ok, tag(bp))
                })
                .collect()
        })
        .collect();
    Outcome::new("weights: sum = 9F8 = oracle").merge(results.into_iter().flatten().collect())
}

/// Closed form against brute-force path sums, and the recurrence.
pub fn path_function(max_total: usize, xs: &[Scalar]) -> Outcome {
    let mut out = Outcome::new("path function f(k+,k-|x)");
    for x in xs {
        for kp in 0..=max_total {
            for km in 0..=max_total - kp {
                let args = |a, b| PathFunctionArgs { kappa_plus: a, kappa_minus: b, x: x.clone() };
                let ok = (|| Ok(path_function_closed(&args(kp, km))? == path_function_bruteforce(&args(kp, km))?))();
                out.record(ok, || format!("closed vs paths k+={kp} k-={km} x={}", fmt_s(x)));
                if kp + km == 0 {
                    continue;
                }
                let ok = (|| {
                    let prev = |a: usize, b: usize, da: usize, db: usize| -> Result<Scalar> {
                        if a < da || b < db {
                            Ok(int(0))
                        } else {
                            path_function_closed(&args(a - da, b - db))
                        }
                    };
                    let rhs = (prev(kp, km, 1, 0)? + prev(kp, km, 0, 1)?) / (x + int(kp as i64 - km as i64));
                    Ok(path_function_closed(&args(kp, km))? == rhs)
                })();
                out.record(ok, || format!("recurrence k+={kp} k-={km} x={}", fmt_s(x)));
            }
        }
    }
    out
}

fn random_step(rng: &mut impl Rng, n: usize) -> i64 {
    n as i64 - 2 * rng.gen_range(0..=n as i64)
}

/// A random admissible boundary for sizes `(k, n, l)`, first height in
/// `lo..=hi`.
pub fn random_boundary(rng: &mut impl Rng, (k, n, l): (usize, usize, usize), lo: i64, hi: i64) -> Boundary {
    loop {
        let a = rng.gen_range(lo..=hi);
        let b = a - random_step(rng, k);
        let f = a - random_step(rng, l);
        let c = b - random_step(rng, n);
        let e = f - random_step(rng, n);
        let d = c - random_step(rng, l);
        if adjacent(e - d, k) {
            return Boundary { a, b, c, d, e, f };
        }
    }
}

pub fn sos_ybe(max_sum: usize, boundaries: usize, spectral: usize, seed: u64) -> Outcome {
    let p = ModelParams::with_w(int(1), q(1, 2)).expect("alpha");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut cases = Vec::new();
    for t in triples(max_sum) {
        for _ in 0..boundaries {
            let bd = random_boundary(&mut rng, t, -3, 3);
            for _ in 0..spectral {
                let uvx = (random_generic(&mut rng), random_generic(&mut rng), random_generic(&mut rng));
                cases.push((t, bd, uvx));
            }
        }
    }
    let results = cases
        .par_iter()
        .map(|&((k, n, l), bd, (ref u, ref v, ref x))| {
            let ok = check_ybe_sos(k, n, l, u, v, x, &bd, &p);
            (ok, format!("(k,n,l)=({k},{n},{l}) {bd:?} u={} v={} x={}", fmt_s(u), fmt_s(v), fmt_s(x)))
        })
        .collect();
    Outcome::new("SOS Yang-Baxter").merge(results)
}

/// `b′ ↦ W^(n,m)(a,b;b′,c|u)` from the sum formula, admissible `b′` only.
pub fn weight_table(n: usize, m: usize, [a, b, c]: [i64; 3], u: &Scalar, params: &ModelParams) -> Result<BTreeMap<i64, Scalar>> {
    (0..=n as i64)
        .map(|j| c - n as i64 + 2 * j)
        .filter(|&bp| adjacent(a - bp, m))
        .map(|bp| Ok((bp, w_nm_sum(&WeightQuery::new(n, m, [a, b, bp, c], u.clone()), params)?)))
        .collect()
}

fn random_labels(rng: &mut impl Rng, n: usize, m: usize) -> [i64; 3] {
    let a = rng.gen_range(-3..=3);
    let b = a - random_step(rng, n);
    let c = b + random_step(rng, m);
    [a, b, c]
}

/// Matrix-level vertex–SOS correspondence with oracle weights.
pub fn correspondence(sizes: &[(usize, usize)], cases_each: usize, seed: u64) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut cases = Vec::new();
    for &(n, m) in sizes {
        for _ in 0..cases_each {
            let w = random_generic(&mut rng);
            let (u, v) = (random_generic(&mut rng), random_generic(&mut rng));
            cases.push((n, m, random_labels(&mut rng, n, m), u, v, w));
        }
    }
    let results = cases
        .par_iter()
        .map(|(n, m, [a, b, c], u, v, w)| {
            let p = ModelParams::with_w(q(4, 3), w.clone()).expect("alpha");
            // the matrix identity must hold with the oracle weights and with
            // the closed-form table alike
            let ok = (|| {
                let table = weight_table(*n, *m, [*a, *b, *c], &(u - v), &p)?;
                Ok(crate::correspondence::check_vertex_sos_matrix(*n, *m, *a, *b, *c, u, v, &p)?
                    && check_vertex_sos_with(*n, *m, [*a, *b, *c], u, v, &p, &table)?)
            })();
            (
                ok,
                format!("(n,m)=({n},{m}) (a,b,c)=({a},{b},{c}) u={} v={} w={}", fmt_s(u), fmt_s(v), fmt_s(w)),
            )
        })
        .collect();
    Outcome::new("vertex-SOS correspondence").merge(results)
}

fn orderings(up: usize, down: usize) -> Vec<Vec<i64>> {
    if up == 0 && down == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    if up > 0 {
        for mut rest in orderings(up - 1, down) {
            rest.insert(0, 1);
            out.push(rest);
        }
    }
    if down > 0 {
        for mut rest in orderings(up, down - 1) {
            rest.insert(0, -1);
            out.push(rest);
        }
    }
    out
}

/// Fused vectors do not depend on the path; intertwiner sets are
/// independent for non-integer `w` and dependent at a constructed integer
/// point.
pub fn path_and_linear_independence(max_n: usize, ws: &[Scalar], us: &[Scalar], bound: i64) -> Outcome {
    let mut out = Outcome::new("path independence and linear independence");
    let p = ModelParams::new(q(2, 3), q(1, 3), q(1, 6)).expect("alpha");
    for n in 1..=max_n {
        for a in [-2i64, 0, 3] {
            for j in 0..=n {
                let up = n - j;
                let b = a + up as i64 - j as i64;
                let paths = orderings(up, j);
                for u in us {
                    let ok = (|| {
                        let first = fused_intertwiner_tensor(n, u, a, b, Some(&paths[0]), &p)?;
                        for path in &paths[1..] {
                            if fused_intertwiner_tensor(n, u, a, b, Some(path), &p)? != first {
                                return Ok(false);
                            }
                        }
                        Ok(true)
                    })();
                    out.record(ok, || format!("paths n={n} a={a} b={b} u={}", fmt_s(u)));
                }
            }
        }
    }
    for n in 1..=max_n {
        for w in ws {
            let pw = ModelParams::with_w(q(2, 3), w.clone()).expect("alpha");
            for anchor in -bound..=bound {
                for u in us {
                    for side in [Anchor::Outgoing, Anchor::Incoming] {
                        let det = independence_determinant(&IntertwinerSet::new(n, u, anchor, side, &pw));
                        out.record(Ok(det != int(0)), || {
                            format!("det n={n} w={} anchor={anchor} u={} {side:?}", fmt_s(w), fmt_s(u))
                        });
                    }
                }
            }
        }
    }
    // a + w = 0 with integer w: the n = 1 pair collapses
    for (a, w) in [(2i64, -2i64), (-1, 1), (0, 0)] {
        let pw = ModelParams::with_w(q(2, 3), int(w)).expect("alpha");
        for u in us {
            let det = independence_determinant(&IntertwinerSet::new(1, u, a, Anchor::Outgoing, &pw));
            out.record(Ok(det == int(0)), || format!("degenerate det a={a} w={w} u={}", fmt_s(u)));
        }
    }
    out
}

/// Eleven-vertex family: conjugation, difference-only dependence, and the
/// correspondence with constant intertwiners and unchanged weights.
pub fn eleven_vertex(seed: u64) -> Outcome {
    let mut out = Outcome::new("eleven-vertex family");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let p = ModelParams::new(q(3, 5), q(1, 3), q(1, 6)).expect("alpha");
    for _ in 0..5 {
        let (u, v) = (random_generic(&mut rng), random_generic(&mut rng));
        let conj = (|| {
            shift_one(&u, &p)
                .kron(&shift_one(&v, &p))
                .mat_mul(&r7v(&(&u - &v), &p))?
                .mat_mul(&shift_one(&-&u, &p).kron(&shift_one(&-&v, &p)))
        })();
        out.record(conj.map(|c| c == r11v(&(&u - &v), &p)), || {
            format!("r11v conjugation u={} v={}", fmt_s(&u), fmt_s(&v))
        });
    }
    let sizes = [(1, 1), (1, 2), (2, 1), (2, 2)];
    for &(n, m) in &sizes {
        for delta in [int(1), q(-2, 3)] {
            let (u, v) = (random_generic(&mut rng), random_generic(&mut rng));
            let base = similarity_fused(n, m, &u, &v, &p);
            let moved = similarity_fused(n, m, &(&u + &delta), &(&v + &delta), &p);
            out.record(Ok(base == moved), || {
                format!("difference-only (n,m)=({n},{m}) delta={} u={} v={}", fmt_s(&delta), fmt_s(&u), fmt_s(&v))
            });
        }
    }
    for n in 1..=3usize {
        for (a, b) in (0..=n as i64).flat_map(|j| [(0i64, n as i64 - 2 * j), (-1, n as i64 - 1 - 2 * j)]) {
            let c0 = psi_const(n, a, b, &p);
            let ok = [q(1, 2), int(3), q(-7, 5)].iter().all(|u| shifted_intertwiner(n, u, a, b, &p) == c0);
            out.record(Ok(ok), || format!("constant intertwiner n={n} a={a} b={b}"));
        }
    }
    for &(n, m) in &sizes {
        for _ in 0..5 {
            let [a, b, c] = random_labels(&mut rng, n, m);
            let (u, v) = (random_generic(&mut rng), random_generic(&mut rng));
            let ok = (|| {
                let d = &u - &v;
                let weights = weight_table(n, m, [a, b, c], &d, &p)?;
                let op = similarity_fused(n, m, &u, &v, &p);
                let pn = |x: i64, y: i64| poly_to_coords(&psi_const(n, x, y, &p), n).expect("degree n");
                let pm = |x: i64, y: i64| poly_to_coords(&psi_const(m, x, y, &p), m).expect("degree m");
                let rho = fusion_normalization(n, m, &d);
                let (l, r) = correspondence_sides(&op, n, m, [a, b, c], &pn, &pm, &rho, &weights)?;
                Ok(l == r)
            })();
            out.record(ok, || {
                format!("constant correspondence (n,m)=({n},{m}) (a,b,c)=({a},{b},{c}) u={} v={}", fmt_s(&u), fmt_s(&v))
            });
        }
    }
    out
}

/// Float checks of the gauge-transformed weights.
pub fn gauge(seed: u64) -> Outcome {
    let mut out = Outcome::new("gauge model (float)");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut worst = 0.0f64;
    for _ in 0..40 {
        // w ∈ (3/2, 7/2) and heights ≥ 1 keep every radicand positive
        let w = q(rng.gen_range(31..=69), 20);
        let p = ModelParams::with_w(int(1), w.clone()).expect("alpha");
        let bd = random_boundary(&mut rng, (1, 1, 1), 4, 7);
        let (u, v, x) = (random_generic(&mut rng), random_generic(&mut rng), random_generic(&mut rng));
        let r = gauge_ybe_residual(&u, &v, &x, &bd, &p, false);
        if let Ok(r) = r {
            worst = worst.max(r);
        }
        out.record(r.map(|r| r < 1e-9), || format!("generic w={} {bd:?}", fmt_s(&w)));
    }
    out.notes.push(format!("max generic-w residual {worst:.3e}"));

    let configs = [
        Boundary { a: 1, b: 0, c: 1, d: 0, e: 1, f: 0 },
        Boundary { a: 0, b: 1, c: 0, d: 1, e: 0, f: 1 },
    ];
    let (u, v, x) = (q(1, 5), q(1, 10), q(-1, 10));
    let eps = q(1, 1_000_000);
    for bd in configs {
        for w in [int(1) + &eps, int(1) - &eps] {
            let p = ModelParams::with_w(int(1), w.clone()).expect("alpha");
            let r = gauge_ybe_residual(&u, &v, &x, &bd, &p, true);
            if let Ok(r) = r {
                out.notes.push(format!("w={} {bd:?}: truncated residual {r:.3e}", scalar::to_f64(&w)));
            }
            out.record(r.map(|r| r < 1e-6), || format!("degeneration w={} {bd:?}", fmt_s(&w)));
        }
        // at larger spectral values the truncated residual is O(|w-1|) with a
        // bigger constant; check the linear approach to zero instead
        let (u2, v2, x2) = (int(2), q(1, 3), q(-3, 2));
        let far = (|| {
            let at = |e: &Scalar| {
                let p = ModelParams::with_w(int(1), int(1) + e).expect("alpha");
                gauge_ybe_residual(&u2, &v2, &x2, &bd, &p, true)
            };
            let (coarse, fine) = (at(&q(1, 1000))?, at(&eps)?);
            Ok(fine < coarse / 500.0)
        })();
        out.record(far, || format!("linear convergence at (u,v,x)=(2,1/3,-3/2) {bd:?}"));
        // above w = 1 the full equation is still real and must hold
        let p = ModelParams::with_w(int(1), int(1) + &eps).expect("alpha");
        let r = gauge_ybe_residual(&u, &v, &x, &bd, &p, false);
        out.record(r.map(|r| r < 1e-9), || format!("full equation at w=1+1e-6 {bd:?}"));
    }

    let p = ModelParams::with_w(int(1), int(1)).expect("alpha");
    for l in 1..6 {
        for u in [q(2, 7), q(-5, 3)] {
            let qy = WeightQuery::new(1, 1, [l, l + 1, l - 1, l], u.clone());
            let ok = gauge_weights(&qy, &p, GaugeMode::Float)
                .map(|g| (g.as_f64() - w0_weight(l, scalar::to_f64(&u))).abs() < 1e-12);
            out.record(ok, || format!("W0 l={l} u={}", fmt_s(&u)));
        }
    }
    out
}

/// Transfer-matrix and enumeration partition functions, and commuting
/// transfer matrices.
pub fn lattice(max_size: usize, seed: u64) -> Outcome {
    let mut out = Outcome::new("lattice partition functions");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let p = ModelParams::new(q(5, 4), q(1, 3), q(1, 6)).expect("alpha");
    let mut cases = Vec::new();
    for cols in 1..=max_size {
        for rows in 1..=max_size {
            cases.push(LatticeSpec { cols, rows, n: 1, m: 1, u: random_generic(&mut rng) });
        }
    }
    let results: Vec<(Result<bool>, String)> = cases
        .par_iter()
        .map(|s| {
            let ok = (|| Ok(partition_vertex_transfer(s, &p)? == partition_vertex_bruteforce(s, &p)?))();
            (ok, format!("Z {}x{} u={}", s.cols, s.rows, fmt_s(&s.u)))
        })
        .collect();
    out = out.merge(results);
    for cols in 1..=max_size {
        let s = LatticeSpec { cols, rows: 1, n: 1, m: 1, u: random_generic(&mut rng) };
        let v = random_generic(&mut rng);
        let ok = transfer_commutator(&s, &v, &p).map(|c| c.is_zero());
        out.record(ok, || format!("[T(u),T(v)] cols={cols} u={} v={}", fmt_s(&s.u), fmt_s(&v)));
    }
    out
}

/// Picks `count` elements without replacement, for sub-sampling grids.
pub fn sample<T: Clone>(items: &[T], count: usize, seed: u64) -> Vec<T> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut v = items.to_vec();
    v.shuffle(&mut rng);
    v.truncate(count);
    v
}

/// Correspondence at fixed `(u, v, w)` for every label triple with
/// `|a| ≤ bound`.
pub fn correspondence_at(n: usize, m: usize, u: &Scalar, v: &Scalar, params: &ModelParams, bound: i64) -> Outcome {
    let mut cases = Vec::new();
    for a in -bound..=bound {
        for j in 0..=n as i64 {
            let b = a - n as i64 + 2 * j;
            for k in 0..=m as i64 {
                cases.push([a, b, b - m as i64 + 2 * k]);
            }
        }
    }
    let results = cases
        .par_iter()
        .map(|&[a, b, c]| {
            let ok = (|| {
                let table = weight_table(n, m, [a, b, c], &(u - v), params)?;
                Ok(crate::correspondence::check_vertex_sos_matrix(n, m, a, b, c, u, v, params)?
                    && check_vertex_sos_with(n, m, [a, b, c], u, v, params, &table)?)
            })();
            (ok, format!("(n,m)=({n},{m}) (a,b,c)=({a},{b},{c})"))
        })
        .collect();
    Outcome::new("vertex-SOS correspondence").merge(results)
}

/// One entry of the standard battery.
pub struct StandardCheck {
    pub id: usize,
    pub run: fn() -> Outcome,
}

fn std_alphas() -> Vec<Scalar> {
    vec![int(1), q(5, 3), q(-2, 7)]
}

/// The full identity battery with its default parameter families.
pub fn standard() -> Vec<StandardCheck> {
    vec![
        StandardCheck { id: 1, run: || seven_vertex_ybe(&std_alphas(), 25, 1) },
        StandardCheck { id: 2, run: || degeneracy(&std_alphas()) },
        StandardCheck { id: 3, run: || fused_ybe(6, 10, 3) },
        StandardCheck {
            id: 4,
            run: || representation_agreement(4, &[q(1, 2), q(-7, 3), q(11, 5), q(3, 8), q(-13, 6)]),
        },
        StandardCheck { id: 5, run: || star_triangle(3, 8, &std_alphas(), &[q(1, 3), q(-5, 2), q(7, 4)]) },
        StandardCheck { id: 6, run: || o_m_identity(3, 8) },
        StandardCheck {
            id: 7,
            run: || {
                three_way(
                    &[(1, 1), (2, 1), (1, 2), (2, 2), (3, 2)],
                    &[q(7, 3), q(-5, 7), q(13, 4)],
                    &[q(1, 2), q(-3, 5)],
                    4,
                )
            },
        },
        StandardCheck { id: 8, run: || path_function(6, &[q(1, 2), q(-7, 3), q(5, 4), q(19, 7), q(-1, 9)]) },
        StandardCheck { id: 9, run: || sos_ybe(6, 50, 5, 9) },
        StandardCheck { id: 10, run: || correspondence(&[(1, 1), (2, 1), (1, 2), (2, 2)], 10, 10) },
        StandardCheck {
            id: 11,
            run: || path_and_linear_independence(4, &[q(1, 2), q(-3, 5), q(7, 3)], &[q(2, 5), q(-9, 4)], 3),
        },
        StandardCheck { id: 12, run: || eleven_vertex(12) },
        StandardCheck { id: 13, run: || gauge(13) },
        StandardCheck { id: 14, run: || lattice(3, 14) },
    ]
}
