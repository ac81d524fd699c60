//! `W^(n,m)` as a prefactor times a terminating, very-well-poised `₉F₈`.
//!
//! Three entries of the published parameter tables are corrected here (each
//! confirmed against the linear-solve weights):
//! * the prefactor ratio `Γ(u+n₋-m₊+1)/…` carries `+n₋` in both regimes;
//! * in the regime `b+b′ ≥ a+c` the fourth lower parameter is `1+h` rather
//!   than `1`, with `h = (b+b′-a-c)/2`;
//! * in the same regime the factor `(-(n-ν)/2)_h` needs a sign `(-1)^h`,
//!   with `ν = a-b`.

use num_traits::{One, Zero};

use super::WeightQuery;
use crate::error::{Error, Result};
use crate::exactcore::scalar::{self, Scalar};
use crate::vertex::ModelParams;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Regime {
    /// `b + b′ ≤ a + c`.
    Low,
    /// `b + b′ ≥ a + c`.
    High,
}

/// `(y)_k` for any integer `k`; negative `k` gives `1/(y+k)_{-k}`.
fn rising(y: &Scalar, k: i64) -> Result<Scalar> {
    let mut acc = Scalar::one();
    for j in 0..k.abs() {
        acc *= y + scalar::int(if k >= 0 { j } else { k + j });
    }
    if k >= 0 {
        Ok(acc)
    } else if acc.is_zero() {
        Err(Error::Pole(format!("reciprocal Pochhammer at {}", scalar::format(y))))
    } else {
        Ok(acc.recip())
    }
}

/// `Γ(p)/Γ(q)` for `p - q ∈ ℤ`.
fn gamma_ratio(p: &Scalar, q: &Scalar) -> Result<Scalar> {
    let d = p - q;
    let k = scalar::as_integer(&d)
        .ok_or_else(|| Error::InvalidParameter("Γ ratio with non-integer offset".into()))?;
    rising(q, k)
}

/// `Σ_k ∏(α_i)_k / (k! ∏(β_j)_k)`, summed up to the first index where an
/// upper parameter `α_i ∈ {0, -1, …}` kills every later term.
pub fn hypergeometric_terminating(upper: &[Scalar], lower: &[Scalar]) -> Result<Scalar> {
    let kmax = upper
        .iter()
        .filter(|a| scalar::is_nonpositive_integer(a))
        .filter_map(|a| scalar::as_integer(&-a))
        .min()
        .ok_or_else(|| Error::DegenerateParameterPoint("series does not terminate".into()))?;
    let mut total = Scalar::one();
    let mut term = Scalar::one();
    for k in 1..=kmax {
        let km1 = scalar::int(k - 1);
        let mut den = scalar::int(k);
        for b in lower {
            let f = b + &km1;
            if f.is_zero() {
                return Err(Error::DegenerateParameterPoint(format!(
                    "lower parameter {} reaches zero at k = {k}",
                    scalar::format(b)
                )));
            }
            den *= f;
        }
        let num = upper.iter().fold(Scalar::one(), |acc, a| acc * (a + &km1));
        term = term * num / den;
        total += &term;
    }
    Ok(total)
}

struct Labels {
    n: i64,
    m: i64,
    a: Scalar,
    b: Scalar,
    bp: Scalar,
    c: Scalar,
    u: Scalar,
    w: Scalar,
    np: Scalar,
    nm: Scalar,
    mp: Scalar,
    mm: Scalar,
    mpp: Scalar,
    mpm: Scalar,
    h: Scalar,
    /// Integer copies of the counts used as Pochhammer lengths.
    h_i: i64,
    mp_i: i64,
    mm_i: i64,
    mpp_i: i64,
    mpm_i: i64,
}

impl Labels {
    fn new(q: &WeightQuery, params: &ModelParams) -> Labels {
        let (n, m) = (q.n as i64, q.m as i64);
        let (a, b, bp, c) = (q.a, q.b, q.bprime, q.c);
        let half = |x: i64| scalar::q(x, 2);
        Labels {
            n,
            m,
            a: scalar::int(a),
            b: scalar::int(b),
            bp: scalar::int(bp),
            c: scalar::int(c),
            u: q.u.clone(),
            w: params.w(),
            np: half(n + b - a),
            nm: half(n - b + a),
            mp: half(m + c - b),
            mm: half(m - c + b),
            mpp: half(m + bp - a),
            mpm: half(m - bp + a),
            h: half(b + bp - a - c),
            h_i: (b + bp - a - c) / 2,
            mp_i: (m + c - b) / 2,
            mm_i: (m - c + b) / 2,
            mpp_i: (m + bp - a) / 2,
            mpm_i: (m - bp + a) / 2,
        }
    }
}

fn low_regime(l: &Labels) -> Result<Scalar> {
    let Labels { a, b, bp, c, u, w, np, nm, mp, mm, mpp, mpm, h, .. } = l;
    let one = Scalar::one();
    let two = scalar::int(2);
    let m = scalar::int(l.m);
    let abc = (bp - b + a + c) / &two;
    let upper = [
        -mm.clone(),
        -np.clone(),
        -mpp.clone(),
        a - mm + w,
        -u + c - np + mm + w,
        (a - mm + w + &two) / &two,
        a - mpm + w,
        nm + &one,
        u + c - mp + nm + w + &one,
    ];
    let lower = [
        a + w + &one,
        u - &m + nm + &one,
        c + nm - mp + &one + w,
        &one - h,
        &abc + w + &one,
        (a - mm + w) / &two,
        -u - np,
        c - mp - np + w,
    ];
    let pre = (bp + w)
        * scalar::binomial(l.mp_i, l.mpp_i)
        * gamma_ratio(&(a - mpm + w), &(a + w + &one))?
        * rising(&(nm + h + &one), -l.h_i)?
        * gamma_ratio(&(b + nm + &one + w), &(c + nm - mp + &one + w))?
        * gamma_ratio(&(a - mm + w + &one), &(&abc + w + &one))?
        * gamma_ratio(&(u + c - mp + nm + w + &one), &(u + b + nm - mpm + w + &one))?
        * gamma_ratio(&(u + np + &one), &(u + np - mpp + &one))?
        * gamma_ratio(&((b + bp + c - a) / &two - np + w), &(c - mp - np + w))?
        * gamma_ratio(&(u + nm - mp + &one), &(u - &m + nm + &one))?;
    Ok(pre * hypergeometric_terminating(&upper, &lower)?)
}

fn high_regime(l: &Labels) -> Result<Scalar> {
    let Labels { a, b, bp, c, u, w, np, nm, mp, mpp, mpm, h, mm, .. } = l;
    let one = Scalar::one();
    let two = scalar::int(2);
    let nu = a - b;
    let s1 = (b + bp + a - c) / &two;
    let upper = [
        -mpm.clone(),
        -np + h,
        -mp.clone(),
        a - mpm + w,
        -u + b - np + mpp + w,
        (bp - mp + w + &two) / &two,
        bp - mp + w,
        nm + &one + h,
        u + b - mpm + nm + w + &one,
    ];
    let lower = [
        &s1 + w + &one,
        u - mp - mpm + nm + &one,
        b + nm - mpm + &one + w,
        &one + h,
        bp + w + &one,
        (bp - mp + w) / &two,
        -u - np + h,
        b - mpm - np + w,
    ];
    let sign = if l.h_i % 2 == 0 { one.clone() } else { -one.clone() };
    let pre = scalar::binomial(l.mm_i, l.mpm_i)
        * gamma_ratio(&(a - mpm + w), &(&s1 + w + &one))?
        * sign
        * rising(&(-(scalar::int(l.n) - &nu) / &two), l.h_i)?
        * gamma_ratio(&(-u + b - np + mpp + w), &(-u + c - np + mm + w))?
        * gamma_ratio(&(u + nm - mp + &one), &(u - mp - mpm + nm + &one))?
        * gamma_ratio(&(b + nm + &one + w), &(b + nm - mpm + &one + w))?
        * gamma_ratio(&(bp - mp + w + &one), &(bp + w))?
        * gamma_ratio(&(u + np - h + &one), &(u + np - mpp + &one))?
        * gamma_ratio(&((b + bp - a + c) / &two - np + w), &(b - mpm - np + w))?;
    Ok(pre * hypergeometric_terminating(&upper, &lower)?)
}

/// `W^(n,m)` from the `₉F₈` representation. On the overlap `b+b′ = a+c`
/// both tables are evaluated and must agree.
pub fn w_nm_hypergeometric(q: &WeightQuery, params: &ModelParams) -> Result<Scalar> {
    if !q.is_valid() {
        return Ok(Scalar::zero());
    }
    let l = Labels::new(q, params);
    match l.h_i.signum() {
        -1 => low_regime(&l),
        1 => high_regime(&l),
        _ => {
            let (lo, hi) = (low_regime(&l)?, high_regime(&l)?);
            if lo != hi {
                return Err(Error::DegenerateParameterPoint(format!(
                    "regime tables disagree on the overlap: {} vs {}",
                    scalar::format(&lo),
                    scalar::format(&hi)
                )));
            }
            Ok(lo)
        }
    }
}

/// Evaluates one regime table regardless of the sign of `h`.
pub fn w_nm_hypergeometric_in(q: &WeightQuery, params: &ModelParams, regime: Regime) -> Result<Scalar> {
    if !q.is_valid() {
        return Ok(Scalar::zero());
    }
    let l = Labels::new(q, params);
    match regime {
        Regime::Low => low_regime(&l),
        Regime::High => high_regime(&l),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactcore::scalar::{int, q};
    use crate::sos::{w11, w_nm_sum};

    fn params() -> ModelParams {
        ModelParams::with_w(int(1), q(1, 2)).unwrap()
    }

    #[test]
    fn rising_factorials() {
        assert_eq!(rising(&int(3), 2).unwrap(), int(12));
        assert_eq!(rising(&int(3), -2).unwrap(), q(1, 2));
        assert!(rising(&int(1), -2).is_err());
        assert_eq!(gamma_ratio(&q(7, 2), &q(3, 2)).unwrap(), q(15, 4));
    }

    #[test]
    fn series_termination() {
        // 2F1(-2, 1; 1 | 1) = (1 - 1)^2 = 0
        assert_eq!(hypergeometric_terminating(&[int(-2), int(1)], &[int(1)]).unwrap(), int(0));
        assert_eq!(hypergeometric_terminating(&[int(0), q(1, 3)], &[int(5)]).unwrap(), int(1));
        assert!(matches!(
            hypergeometric_terminating(&[q(1, 2)], &[int(1)]),
            Err(Error::DegenerateParameterPoint(_))
        ));
        assert!(matches!(
            hypergeometric_terminating(&[int(-3)], &[int(-1)]),
            Err(Error::DegenerateParameterPoint(_))
        ));
    }

    #[test]
    fn matches_w11() {
        let p = params();
        let u = q(7, 3);
        for l in [[2, 1, 1, 0], [0, 1, 1, 0], [0, -1, -1, 0], [0, 1, -1, 0], [0, -1, 1, 0], [-1, 0, 0, 1]] {
            let qy = WeightQuery::new(1, 1, l, u.clone());
            assert_eq!(w_nm_hypergeometric(&qy, &p).unwrap(), w11(&qy, &p).unwrap(), "{l:?}");
        }
    }

    #[test]
    fn matches_sum_on_small_grid() {
        let p = params();
        let u = q(-5, 7);
        for (n, m) in [(2, 1), (2, 2), (3, 2)] {
            for a in -3i64..=3 {
                for c in -3i64..=3 {
                    for b in c - m as i64..=c + m as i64 {
                        for bp in c - n as i64..=c + n as i64 {
                            let qy = WeightQuery::new(n, m, [a, b, bp, c], u.clone());
                            if !qy.is_valid() {
                                continue;
                            }
                            assert_eq!(
                                w_nm_hypergeometric(&qy, &p).unwrap(),
                                w_nm_sum(&qy, &p).unwrap(),
                                "{qy:?}"
                            );
                        }
                    }
                }
            }
        }
    }
}
