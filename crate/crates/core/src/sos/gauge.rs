//! The gauge-transformed `W̃^(1,1)` family, whose two off-diagonal faces
//! share the symmetric weight `u √((l-1+w)(l+1+w)) / (l+w)`. At `w = 1` this
//! is the model `W₀`.

use num_traits::{Signed, Zero};

use super::{w11, ybe_sos_sides, Boundary, WeightQuery};
use crate::error::{Error, Result};
use crate::exactcore::scalar::{self, Scalar};
use crate::vertex::ModelParams;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GaugeMode {
    /// The square of each weight, exactly.
    ExactSquared,
    /// Double precision; refuses negative radicands.
    Float,
}

#[derive(Clone, Debug, PartialEq)]
pub enum GaugeValue {
    Squared(Scalar),
    Float(f64),
}

impl GaugeValue {
    pub fn as_f64(&self) -> f64 {
        match self {
            GaugeValue::Squared(x) => scalar::to_f64(x),
            GaugeValue::Float(x) => *x,
        }
    }
}

fn off_diagonal(q: &WeightQuery) -> bool {
    q.a == q.c && q.b != q.bprime
}

pub fn gauge_weights(q: &WeightQuery, params: &ModelParams, mode: GaugeMode) -> Result<GaugeValue> {
    if !off_diagonal(q) || !q.is_valid() {
        let w = w11(q, params)?;
        return Ok(match mode {
            GaugeMode::ExactSquared => GaugeValue::Squared(&w * &w),
            GaugeMode::Float => GaugeValue::Float(scalar::to_f64(&w)),
        });
    }
    let w = params.w();
    let l = scalar::int(q.c);
    let one = scalar::int(1);
    let den = &l + &w;
    if den.is_zero() {
        return Err(Error::Pole("l + w = 0".into()));
    }
    let radicand = (&l - &one + &w) * (&l + &one + &w);
    match mode {
        GaugeMode::ExactSquared => Ok(GaugeValue::Squared(&q.u * &q.u * radicand / (&den * &den))),
        GaugeMode::Float => {
            if radicand.is_negative() {
                return Err(Error::UnsupportedParameterRegion(format!(
                    "negative radicand at l = {}, w = {}",
                    q.c,
                    scalar::format(&w)
                )));
            }
            let r = scalar::to_f64(&radicand).sqrt();
            Ok(GaugeValue::Float(scalar::to_f64(&q.u) * r / scalar::to_f64(&den)))
        }
    }
}

/// The `W₀` off-diagonal weight `u √(l(l+2)) / (l+1)`.
pub fn w0_weight(l: i64, u: f64) -> f64 {
    let l = l as f64;
    u * (l * (l + 2.0)).sqrt() / (l + 1.0)
}

/// `|LHS - RHS|` of the `(1,1,1)` SOS Yang–Baxter equation with float gauge
/// weights. With `drop_negative`, every term that passes through a negative
/// height is discarded, which is the truncation that survives at `w = 1`.
pub fn gauge_ybe_residual(
    u: &Scalar,
    v: &Scalar,
    x: &Scalar,
    bd: &Boundary,
    params: &ModelParams,
    drop_negative: bool,
) -> Result<f64> {
    let (lhs, rhs) = ybe_sos_sides((1, 1, 1), u, v, x, bd, 0.0f64, |q| {
        if drop_negative && q.labels().iter().any(|&h| h < 0) {
            return Ok(0.0);
        }
        Ok(gauge_weights(q, params, GaugeMode::Float)?.as_f64())
    })?;
    Ok((lhs - rhs).abs())
}
