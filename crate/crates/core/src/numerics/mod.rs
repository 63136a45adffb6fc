//! Generic numerical kernels shared by every other module.

mod quad;
mod rng;
mod simplex;

pub use quad::{integrate_adaptive, IntegralResult, Quadrature};
pub use rng::{uniform_stream, RandomStream};
pub use simplex::{minimize_simplex, MinResult, Simplex};
