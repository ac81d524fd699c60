//! Exact rational seven-vertex model and its fusion hierarchy.
//!
//! * [`vertex`] — the seven-vertex R-matrix and the vertex Yang–Baxter check
//! * [`fusion`] — symmetrizers and the fused operators `R^(n,m)`
//! * [`polyrep`] — the same operators as difference operators on polynomials
//! * [`sos`] — SOS face weights by sum formula, `₉F₈` series, gauge model
//! * [`correspondence`] — intertwining vectors and the weight oracle
//! * [`elevenvertex`] — the shift-conjugated eleven-vertex family
//! * [`lattice`] — transfer matrices and small partition sums
//! * [`suite`] — parametrized identity checks used by the CLI
//!
//! All arithmetic is over [`Scalar`], an arbitrary-precision rational.

pub mod cli;
pub mod correspondence;
pub mod elevenvertex;
pub mod error;
pub mod exactcore;
pub mod fusion;
pub mod lattice;
pub mod polyrep;
pub mod sos;
pub mod suite;
pub mod vertex;

pub use error::{Error, Result};
pub use exactcore::{Matrix, Poly, Scalar};
pub use vertex::ModelParams;
