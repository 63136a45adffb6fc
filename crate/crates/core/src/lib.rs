//! Pathway densities, fractional integral operators and the generalized
//! gamma Bessel family.
//!
//! The crate is `no_std` and only needs `alloc`. It is organised bottom-up:
//!
//! * [`numerics`]: adaptive Gauss–Kronrod quadrature, a Nelder–Mead simplex
//!   minimizer and a seedable counter-based random stream.
//! * [`specfun`]: log-gamma, incomplete gamma, `0F1`, `K_ν`, the `G^{2,0}_{0,2}`
//!   Meijer function and the Krätzel integral.
//! * [`pathway`]: the pathway density family, Riemann–Liouville and pathway
//!   fractional integrals, and the sum/difference/pathway convolution densities.
//! * [`distributions`]: the gamma Bessel model, its q-analogues, the
//!   superstatistics density and the generalized Laplacian difference model.
//! * [`inference`]: datasets, Kolmogorov–Smirnov statistics, histograms and
//!   maximum-likelihood fitting.
#![no_std]
#![allow(clippy::neg_cmp_op_on_partial_ord)]
// Modules import `num_traits::Float` for libm-backed float methods; when std
// is present in the build graph the inherent methods shadow it, hence the
// `allow(unused_imports)` on those imports.

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod distributions;
mod error;
pub mod inference;
pub mod numerics;
pub mod pathway;
pub mod specfun;

pub use error::{Error, Result};
