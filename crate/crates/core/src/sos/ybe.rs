use num_traits::Zero;

use super::{w_nm_sum, WeightQuery};
use crate::error::Result;
use crate::exactcore::Scalar;
use crate::vertex::ModelParams;

/// The six outer heights of an SOS Yang–Baxter configuration.
///
/// With steps `b = a-δk`, `f = a-δl`, `c = b-δn`, `e = f-δn`, `d = c-δl`
/// (each `δ` a step of the indicated size) and `e - d` a step of size `k`,
/// both sides have at least one admissible inner height.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Boundary {
    pub a: i64,
    pub b: i64,
    pub c: i64,
    pub d: i64,
    pub e: i64,
    pub f: i64,
}

/// Both sides of the SOS Yang–Baxter equation for sizes `(k, n, l)`:
///
/// ```text
/// Σ_g W^(k,n)(f,g;e,d|v-x) W^(k,l)(a,b;f,g|u-x) W^(n,l)(b,c;g,d|u-v)
///   = Σ_g W^(n,l)(a,g;f,e|u-v) W^(k,l)(g,c;e,d|u-x) W^(k,n)(a,b;g,c|v-x)
/// ```
///
/// `weight` supplies the faces; any value type with ring operations works.
#[allow(clippy::too_many_arguments)]
pub fn ybe_sos_sides<T, F>(
    (k, n, l): (usize, usize, usize),
    u: &Scalar,
    v: &Scalar,
    x: &Scalar,
    bd: &Boundary,
    zero: T,
    mut weight: F,
) -> Result<(T, T)>
where
    T: Clone + std::ops::Add<Output = T> + std::ops::Mul<Output = T>,
    F: FnMut(&WeightQuery) -> Result<T>,
{
    let Boundary { a, b, c, d, e, f } = *bd;
    let (uv, ux, vx) = (u - v, u - x, v - x);
    let face = |n1, m1, l4: [i64; 4], s: &Scalar| WeightQuery::new(n1, m1, l4, s.clone());
    let mut lhs = zero.clone();
    for g in f - k as i64..=f + k as i64 {
        let t = weight(&face(k, n, [f, g, e, d], &vx))?
            * weight(&face(k, l, [a, b, f, g], &ux))?
            * weight(&face(n, l, [b, c, g, d], &uv))?;
        lhs = lhs + t;
    }
    let mut rhs = zero;
    for g in a - n as i64..=a + n as i64 {
        let t = weight(&face(n, l, [a, g, f, e], &uv))?
            * weight(&face(k, l, [g, c, e, d], &ux))?
            * weight(&face(k, n, [a, b, g, c], &vx))?;
        rhs = rhs + t;
    }
    Ok((lhs, rhs))
}

/// Exact SOS Yang–Baxter check with the single-sum weights.
#[allow(clippy::too_many_arguments)]
pub fn check_ybe_sos(
    k: usize,
    n: usize,
    l: usize,
    u: &Scalar,
    v: &Scalar,
    x: &Scalar,
    bd: &Boundary,
    params: &ModelParams,
) -> Result<bool> {
    let (lhs, rhs) = ybe_sos_sides((k, n, l), u, v, x, bd, Scalar::zero(), |q| w_nm_sum(q, params))?;
    Ok(lhs == rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactcore::scalar::{int, q};
    use crate::sos::w11;

    #[test]
    fn one_one_one() {
        let p = ModelParams::with_w(int(1), q(1, 2)).unwrap();
        // a=0, b=1 (δk=-1), f=-1, c=2, e=0, d=1
        let bd = Boundary { a: 0, b: 1, c: 2, d: 1, e: 0, f: -1 };
        assert!(check_ybe_sos(1, 1, 1, &q(3, 7), &q(-2, 5), &q(1, 9), &bd, &p).unwrap());
        let bd = Boundary { a: 0, b: 1, c: 0, d: 1, e: 0, f: -1 };
        assert!(check_ybe_sos(1, 1, 1, &q(3, 7), &q(-2, 5), &q(1, 9), &bd, &p).unwrap());
    }

    #[test]
    fn perturbation_is_detected() {
        let p = ModelParams::with_w(int(1), q(1, 2)).unwrap();
        let bd = Boundary { a: 0, b: 1, c: 0, d: 1, e: 0, f: -1 };
        let (u, v, x) = (q(3, 7), q(-2, 5), q(1, 9));
        let (lhs, rhs) = ybe_sos_sides((1, 1, 1), &u, &v, &x, &bd, Scalar::zero(), |qy| {
            let w = w11(qy, &p)?;
            // bump one diagonal face that appears on the left
            Ok(if qy.labels() == [0, 1, -1, 0] { w + int(1) } else { w })
        })
        .unwrap();
        assert_ne!(lhs, rhs);
    }
}
