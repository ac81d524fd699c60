//! SOS face weights.
//!
//! A face `W(a, b; b′, c)` has `a` top-left, `b` top-right, `b′`
//! bottom-left and `c` bottom-right. Horizontal edges (`a-b`, `b′-c`) are
//! steps of size `n`, vertical edges (`a-b′`, `b-c`) steps of size `m`.

mod formulas;
mod gauge;
mod hypergeometric;
mod ybe;

use serde::{Deserialize, Serialize};

use crate::exactcore::scalar::{self, Scalar};

pub use formulas::{
    path_function_bruteforce, path_function_closed, signed_pochhammer, w11, w_n1, w_nm_sum,
    PathFunctionArgs,
};
pub use gauge::{gauge_weights, gauge_ybe_residual, w0_weight, GaugeMode, GaugeValue};
pub use hypergeometric::{
    hypergeometric_terminating, w_nm_hypergeometric, w_nm_hypergeometric_in, Regime,
};
pub use ybe::{check_ybe_sos, ybe_sos_sides, Boundary};

/// `diff ∈ {-n, -n+2, …, n}`.
pub fn adjacent(diff: i64, n: usize) -> bool {
    let n = n as i64;
    diff.abs() <= n && (diff - n).rem_euclid(2) == 0
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightQuery {
    pub n: usize,
    pub m: usize,
    pub a: i64,
    pub b: i64,
    pub bprime: i64,
    pub c: i64,
    #[serde(with = "scalar::serde_str")]
    pub u: Scalar,
}

impl WeightQuery {
    pub fn new(n: usize, m: usize, [a, b, bprime, c]: [i64; 4], u: Scalar) -> Self {
        WeightQuery { n, m, a, b, bprime, c, u }
    }

    pub fn is_valid(&self) -> bool {
        adjacent(self.a - self.b, self.n)
            && adjacent(self.bprime - self.c, self.n)
            && adjacent(self.a - self.bprime, self.m)
            && adjacent(self.b - self.c, self.m)
    }

    pub fn labels(&self) -> [i64; 4] {
        [self.a, self.b, self.bprime, self.c]
    }
}
