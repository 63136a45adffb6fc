//! The pathway density family, classical and pathway fractional integrals,
//! and the convolution densities that give those integrals a statistical
//! reading.

mod convolution;
mod density;
mod operators;

pub use convolution::{conv_diff_density, conv_pathway_density, conv_sum_density};
pub use density::{pathway_pdf, Branch, PathwayDensity, PathwayParams};
pub use operators::{pathway_integral, rl_left, rl_right, FractionalOrder};
