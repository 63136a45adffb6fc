//! Special functions behind the densities: log-gamma, the regularized
//! incomplete gamma function, Pochhammer symbols, the confluent limit
//! function `0F1`, the modified Bessel function `K_ν`, the Meijer
//! `G^{2,0}_{0,2}` case and the Krätzel integral.
//!
//! Everything here is a deterministic pure function.

mod bessel;
mod gamma;
mod hyp;

pub use bessel::{
    bessel_k, kratzel_i11, ln_bessel_k, ln_kratzel_i11, ln_meijer_g_2002, meijer_g_2002,
};
pub use gamma::{
    ln_beta, ln_gamma, pochhammer, reg_lower_inc_gamma, reg_upper_inc_gamma,
};
pub use hyp::{hyp0f1, ln_hyp0f1, SeriesControl};

pub(crate) use bessel::ln_kratzel_i11_scaled;
pub(crate) use gamma::{inc_gamma_pq, lgamma, lgamma_diff};
pub(crate) use hyp::ln_hyp0f1_scaled;
