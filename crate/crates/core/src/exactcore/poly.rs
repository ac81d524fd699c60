//! Univariate polynomials over [`Scalar`] with a tracked degree bound.

use std::fmt;

use num_traits::{One, Zero};

use super::scalar::{self, Scalar};
use crate::error::{Error, Result};

/// Coefficients lowest power first. `coeffs.len() == degree_bound + 1`, and
/// everything past the actual degree is zero.
#[derive(Clone, Debug, Eq)]
pub struct Poly {
    coeffs: Vec<Scalar>,
}

impl PartialEq for Poly {
    /// Equality of the polynomials, ignoring the degree bound.
    fn eq(&self, other: &Self) -> bool {
        let n = self.coeffs.len().max(other.coeffs.len());
        (0..n).all(|i| self.coeff(i) == other.coeff(i))
    }
}

impl Poly {
    pub fn new(coeffs: Vec<Scalar>) -> Self {
        if coeffs.is_empty() {
            return Poly::zero(0);
        }
        Poly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Poly::new(coeffs.iter().map(|&c| scalar::int(c)).collect())
    }

    pub fn zero(degree_bound: usize) -> Self {
        Poly { coeffs: vec![Scalar::zero(); degree_bound + 1] }
    }

    pub fn constant(c: Scalar) -> Self {
        Poly { coeffs: vec![c] }
    }

    pub fn one() -> Self {
        Poly::constant(Scalar::one())
    }

    /// `z^k`.
    pub fn monomial(k: usize) -> Self {
        let mut p = Poly::zero(k);
        p.coeffs[k] = Scalar::one();
        p
    }

    /// `z - root`.
    pub fn linear(root: &Scalar) -> Self {
        Poly { coeffs: vec![-root.clone(), Scalar::one()] }
    }

    /// `∏ (z - r)` over the given roots.
    pub fn from_roots<'a>(roots: impl IntoIterator<Item = &'a Scalar>) -> Self {
        roots.into_iter().fold(Poly::one(), |acc, r| acc.mul(&Poly::linear(r)))
    }

    pub fn degree_bound(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Actual degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.iter().rposition(|c| !c.is_zero())
    }

    pub fn is_zero(&self) -> bool {
        self.degree().is_none()
    }

    pub fn coeff(&self, i: usize) -> Scalar {
        self.coeffs.get(i).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    /// Coefficient vector padded to `degree_bound + 1` entries. Fails if the
    /// polynomial does not fit.
    pub fn to_vec(&self, degree_bound: usize) -> Result<Vec<Scalar>> {
        Ok(self.with_bound(degree_bound)?.coeffs)
    }

    pub fn with_bound(&self, degree_bound: usize) -> Result<Poly> {
        if self.degree().is_some_and(|d| d > degree_bound) {
            return Err(Error::DegreeOverflow(degree_bound));
        }
        let coeffs = (0..=degree_bound).map(|i| self.coeff(i)).collect();
        Ok(Poly { coeffs })
    }

    /// Drops the degree bound down to the actual degree.
    pub fn trimmed(&self) -> Poly {
        let d = self.degree().unwrap_or(0);
        Poly { coeffs: self.coeffs[..=d].to_vec() }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        Poly { coeffs: (0..n).map(|i| self.coeff(i) + other.coeff(i)).collect() }
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        Poly { coeffs: (0..n).map(|i| self.coeff(i) - other.coeff(i)).collect() }
    }

    pub fn scale(&self, c: &Scalar) -> Poly {
        Poly { coeffs: self.coeffs.iter().map(|x| x * c).collect() }
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        let mut out = vec![Scalar::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (j, b) in other.coeffs.iter().enumerate().filter(|(_, b)| !b.is_zero()) {
                out[i + j] += a * b;
            }
        }
        Poly { coeffs: out }
    }

    /// `z · p(z)`.
    pub fn mul_z(&self) -> Poly {
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(Scalar::zero());
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { coeffs }
    }

    /// `p(z + h)`, expanded binomially. Same degree bound.
    pub fn shift(&self, h: &Scalar) -> Poly {
        let n = self.coeffs.len();
        let mut out = vec![Scalar::zero(); n];
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            // c (z+h)^k = Σ_j C(k,j) h^(k-j) z^j
            let mut hp = Scalar::one();
            for j in (0..=k).rev() {
                out[j] += c * scalar::binomial(k as i64, j as i64) * &hp;
                hp *= h;
            }
        }
        Poly { coeffs: out }
    }

    pub fn eval(&self, z: &Scalar) -> Scalar {
        self.coeffs.iter().rev().fold(Scalar::zero(), |acc, c| acc * z + c)
    }

    /// Quotient and remainder of long division. Fails on a zero divisor.
    pub fn div_rem(&self, divisor: &Poly) -> Result<(Poly, Poly)> {
        let dd = divisor.degree().ok_or_else(|| Error::Pole("division by the zero polynomial".into()))?;
        let lead = divisor.coeffs[dd].recip();
        let mut rem = self.coeffs.clone();
        let Some(nd) = self.degree() else {
            return Ok((Poly::zero(0), Poly::zero(0)));
        };
        if nd < dd {
            return Ok((Poly::zero(0), self.clone()));
        }
        let mut quot = vec![Scalar::zero(); nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            let c = &rem[k + dd] * &lead;
            if c.is_zero() {
                continue;
            }
            for (j, d) in divisor.coeffs[..=dd].iter().enumerate() {
                rem[k + j] -= &c * d;
            }
            quot[k] = c;
        }
        Ok((Poly::new(quot), Poly::new(rem)))
    }

    /// Exact quotient; fails if the division leaves a remainder.
    pub fn div_exact(&self, divisor: &Poly) -> Result<Poly> {
        let (q, r) = self.div_rem(divisor)?;
        if !r.is_zero() {
            return Err(Error::Pole("polynomial division is not exact".into()));
        }
        Ok(q)
    }

    /// The unique polynomial of degree `< xs.len()` through the given points
    /// (Newton divided differences).
    pub fn interpolate(xs: &[Scalar], ys: &[Scalar]) -> Result<Poly> {
        if xs.len() != ys.len() || xs.is_empty() {
            return Err(Error::ShapeMismatch("interpolate: need equal, nonempty samples".into()));
        }
        let n = xs.len();
        let mut dd = ys.to_vec();
        for level in 1..n {
            for i in (level..n).rev() {
                let den = &xs[i] - &xs[i - level];
                if den.is_zero() {
                    return Err(Error::Singular);
                }
                dd[i] = (&dd[i] - &dd[i - 1]) / den;
            }
        }
        let mut p = Poly::constant(dd[n - 1].clone());
        for i in (0..n - 1).rev() {
            p = p.mul(&Poly::linear(&xs[i])).add(&Poly::constant(dd[i].clone()));
        }
        p.with_bound(n - 1)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| match k {
                0 => scalar::format(c),
                1 => format!("({})z", scalar::format(c)),
                _ => format!("({})z^{k}", scalar::format(c)),
            })
            .collect();
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}

pub fn poly_shift(p: &Poly, h: &Scalar) -> Poly {
    p.shift(h)
}
