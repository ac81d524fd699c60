use num_traits::{One, Zero};

use super::WeightQuery;
use crate::error::{Error, Result};
use crate::exactcore::scalar::{self, Scalar};
use crate::polyrep::Sign;
use crate::vertex::ModelParams;

fn divide(num: Scalar, den: Scalar, what: &str) -> Result<Scalar> {
    if den.is_zero() {
        return Err(Error::Pole(what.to_string()));
    }
    Ok(num / den)
}

fn require_shape(q: &WeightQuery, n: Option<usize>, m: usize) -> Result<()> {
    if n.is_some_and(|n| n != q.n) || q.m != m {
        return Err(Error::InvalidParameter(format!(
            "formula needs m = {m}{}, got (n,m) = ({},{})",
            n.map(|n| format!(", n = {n}")).unwrap_or_default(),
            q.n,
            q.m
        )));
    }
    Ok(())
}

/// `W^(1,1)`: `u+1` when `a-c = ±2`; `(∓u+l+w)/(l+w)` when `a = c = l`,
/// `b = b′ = l±1`; `u(l±1+w)/(l+w)` when `b = l±1`, `b′ = l∓1`.
pub fn w11(q: &WeightQuery, params: &ModelParams) -> Result<Scalar> {
    require_shape(q, Some(1), 1)?;
    if !q.is_valid() {
        return Ok(Scalar::zero());
    }
    let u = &q.u;
    if (q.a - q.c).abs() == 2 {
        return Ok(u + Scalar::one());
    }
    let l = scalar::int(q.c);
    let w = params.w();
    let den = &l + &w;
    let sign = if q.b == q.c + 1 { Scalar::one() } else { -Scalar::one() };
    if q.b == q.bprime {
        divide(-sign * u + &l + &w, den, "l + w = 0")
    } else {
        divide(u * (&l + sign + &w), den, "l + w = 0")
    }
}

/// `W^(n,1)` in the `(c, k)` parametrization, `n±(k) = (n±k)/2`.
pub fn w_n1(q: &WeightQuery, params: &ModelParams) -> Result<Scalar> {
    require_shape(q, None, 1)?;
    if !q.is_valid() {
        return Ok(Scalar::zero());
    }
    w_n1_formula(q, params)
}

/// The `W^(n,1)` expressions evaluated without the adjacency check; only the
/// relation between `b` and `c` selects the family.
pub(crate) fn w_n1_formula(q: &WeightQuery, params: &ModelParams) -> Result<Scalar> {
    let (u, w) = (&q.u, params.w());
    let n = q.n as i64;
    let c = scalar::int(q.c);
    let one = Scalar::one();
    if q.b == q.c + 1 {
        let k = q.a - q.c - 1;
        let (npk, nmk) = (scalar::q(n + k, 2), scalar::q(n - k, 2));
        let den = &c + scalar::int(k + 1) + &w;
        if q.bprime == q.a + 1 {
            divide(&nmk * (&c + &one - &nmk + &w - u), den, "c + k + 1 + w = 0")
        } else {
            divide((u + &npk) * (&c + &one + &npk + &w), den, "c + k + 1 + w = 0")
        }
    } else {
        let k = q.a - q.c + 1;
        let (npk, nmk) = (scalar::q(n + k, 2), scalar::q(n - k, 2));
        let den = &c + scalar::int(k - 1) + &w;
        if q.bprime == q.a - 1 {
            divide(&npk * (&c - &one + &npk + &w + u), den, "c + k - 1 + w = 0")
        } else {
            divide((u + &nmk) * (&c - &one - &nmk + &w), den, "c + k - 1 + w = 0")
        }
    }
}

/// `(y)^σ_k = ∏_{j<k} (y + σj)`.
pub fn signed_pochhammer(y: &Scalar, k: usize, sign: Sign) -> Scalar {
    let mut acc = Scalar::one();
    for j in 0..k as i64 {
        let step = scalar::int(if sign == Sign::Plus { j } else { -j });
        acc *= y + step;
    }
    acc
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathFunctionArgs {
    pub kappa_plus: usize,
    pub kappa_minus: usize,
    pub x: Scalar,
}

/// `f(κ₊, κ₋ | x)`: the sum over ±1 step paths `0 = c′₀, …, c′_{κ₊+κ₋} = κ₊-κ₋`
/// of `∏_{i≥1} 1/(x + c′_i)`.
pub fn path_function_bruteforce(args: &PathFunctionArgs) -> Result<Scalar> {
    let len = args.kappa_plus + args.kappa_minus;
    let target = args.kappa_plus as i64 - args.kappa_minus as i64;
    let mut total = Scalar::zero();
    for steps in 0u64..(1u64 << len) {
        let mut pos = 0i64;
        let mut term = Scalar::one();
        for i in 0..len {
            pos += if steps >> i & 1 == 1 { 1 } else { -1 };
            let d = &args.x + scalar::int(pos);
            term = divide(term, d, "x + c′ = 0")?;
        }
        if pos == target {
            total += term;
        }
    }
    Ok(total)
}

/// `C(κ₊+κ₋, κ₊) / (∏_{i=1}^{κ₊}(x+i) ∏_{j=1}^{κ₋}(x-j))`.
pub fn path_function_closed(args: &PathFunctionArgs) -> Result<Scalar> {
    let (kp, km) = (args.kappa_plus as i64, args.kappa_minus as i64);
    let mut den = Scalar::one();
    for i in 1..=kp {
        den *= &args.x + scalar::int(i);
    }
    for j in 1..=km {
        den *= &args.x - scalar::int(j);
    }
    divide(scalar::binomial(kp + km, kp), den, "x + j = 0")
}

/// The single-sum formula for `W^(n,m)` with `μ = b-c`, `ν = a-b`, `μ′ = b′-a`.
pub fn w_nm_sum(q: &WeightQuery, params: &ModelParams) -> Result<Scalar> {
    if !q.is_valid() {
        return Ok(Scalar::zero());
    }
    let (n, m) = (q.n as i64, q.m as i64);
    let (u, w) = (&q.u, params.w());
    let (mu, nu, mup) = (q.b - q.c, q.a - q.b, q.bprime - q.a);
    let (mp, mm) = ((m - mu) / 2, (m + mu) / 2);
    let c = scalar::int(q.c);
    let i = scalar::int;
    let h = |x: i64| scalar::q(x, 2);
    let th1 = h(n - nu);
    let th2 = -u + &c + i(mm) - h(n - nu) + &w;
    let th3 = u - i(mp) + h(n + nu);
    let th4 = &c + i(mu) + h(n + nu) + &w;
    let x = &c + i(mu + nu) + &w;
    let poch = |y: &Scalar, k: i64, s: Sign| signed_pochhammer(y, k as usize, s);
    use Sign::{Minus, Plus};

    let mut total = Scalar::zero();
    for sigma in (-mm..=mm).step_by(2) {
        let (kp, km) = ((mm + sigma) / 2, (mm - sigma) / 2);
        let t = mup - sigma;
        if t.abs() > mp || (mp - t).rem_euclid(2) != 0 {
            continue;
        }
        let (rp, rm) = ((mp + t) / 2, (mp - t) / 2);
        let th5 = u + h(n - nu - sigma - mm);
        let th6 = &c + i(mu) - h(n - nu - sigma + mm) + &w;
        let th7 = h(n + nu + sigma + mm);
        let th8 = u + &c + i(mu) + h(n + nu + sigma - mm) + &w;
        let num = (&x + i(mup))
            * scalar::binomial(mm, kp)
            * scalar::binomial(mp, rp)
            * poch(&th1, kp, Minus)
            * poch(&th2, kp, Plus)
            * poch(&th3, km, Minus)
            * poch(&th4, km, Minus)
            * poch(&th5, rp, Minus)
            * poch(&th6, rp, Plus)
            * poch(&th7, rm, Minus)
            * poch(&th8, rm, Minus);
        let den = &x
            * poch(&(&x + i(1)), kp, Plus)
            * poch(&(&x - i(1)), km, Minus)
            * poch(&(&x + i(sigma + 1)), rp, Plus)
            * poch(&(&x + i(sigma - 1)), rm, Minus);
        total += divide(num, den, "x + j = 0")?;
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactcore::scalar::{int, q};

    fn params() -> ModelParams {
        ModelParams::with_w(int(1), q(1, 2)).unwrap()
    }

    fn wq(n: usize, m: usize, l: [i64; 4], u: Scalar) -> WeightQuery {
        WeightQuery::new(n, m, l, u)
    }

    #[test]
    fn w11_examples() {
        let p = params();
        for l in -2..3 {
            let v = w11(&wq(1, 1, [l + 2, l + 1, l + 1, l], q(5, 7)), &p).unwrap();
            assert_eq!(v, q(12, 7));
        }
        assert_eq!(w11(&wq(1, 1, [1, 2, 0, 1], int(2)), &p).unwrap(), q(10, 3));
        assert_eq!(w11(&wq(1, 1, [4, 1, 1, 0], int(2)), &p).unwrap(), int(0));
    }

    #[test]
    fn w_n1_vanishing_edges() {
        let p = params();
        // At k = ±n the face leaves the adjacency set; the raw expressions
        // must already vanish there.
        let (n, c) = (3, 1);
        let k = n as i64;
        let qy = wq(n, 1, [c + k + 1, c + 1, c + k + 2, c], q(2, 9));
        assert_eq!(w_n1_formula(&qy, &p).unwrap(), int(0));
        assert_eq!(w_n1(&qy, &p).unwrap(), int(0));
        let k = -(n as i64);
        let qy = wq(n, 1, [c + k - 1, c - 1, c + k - 2, c], q(2, 9));
        assert_eq!(w_n1_formula(&qy, &p).unwrap(), int(0));
    }

    #[test]
    fn pochhammers() {
        assert_eq!(signed_pochhammer(&q(3, 7), 0, Sign::Plus), int(1));
        assert_eq!(signed_pochhammer(&q(3, 7), 1, Sign::Minus), q(3, 7));
        assert_eq!(signed_pochhammer(&int(3), 3, Sign::Minus), int(6));
        assert_eq!(signed_pochhammer(&int(3), 3, Sign::Plus), int(60));
    }

    #[test]
    fn path_function_examples() {
        let x = q(7, 3);
        let f = |kp, km| PathFunctionArgs { kappa_plus: kp, kappa_minus: km, x: x.clone() };
        let one = int(1);
        assert_eq!(path_function_closed(&f(1, 0)).unwrap(), &one / (&x + int(1)));
        assert_eq!(path_function_closed(&f(0, 1)).unwrap(), &one / (&x - int(1)));
        assert_eq!(path_function_bruteforce(&f(1, 1)).unwrap(), int(2) / (&x * &x - int(1)));
        assert_eq!(
            path_function_closed(&f(2, 1)).unwrap(),
            int(3) / ((&x + int(1)) * (&x + int(2)) * (&x - int(1)))
        );
        assert_eq!(path_function_bruteforce(&f(2, 1)).unwrap(), path_function_closed(&f(2, 1)).unwrap());
    }

    #[test]
    fn sum_reduces_to_w11() {
        let p = params();
        for l in [[2, 1, 1, 0], [0, 1, 1, 0], [0, -1, -1, 0], [0, 1, -1, 0], [0, -1, 1, 0], [-2, -1, -1, 0]] {
            let qy = wq(1, 1, l, q(7, 3));
            assert_eq!(w_nm_sum(&qy, &p).unwrap(), w11(&qy, &p).unwrap(), "{l:?}");
        }
    }
}
