//! Probability models built on the gamma Bessel kernel
//! `t^{β−1} e^{−bt} 0F1(;β;δt)`: the base family, its pathway q-analogues,
//! the superstatistics mixture and the difference (generalized Laplace) model.

mod gamma_bessel;
mod laplace;
mod qgamma;
mod scan;
mod superstat;

pub use gamma_bessel::{
    gb_cdf, gb_mgf, gb_pdf, gb_sample, gb_validate, GammaBessel, GammaBesselParams, ValidityReport,
};
pub use laplace::{glap_mgf, glap_pdf, glap_sample, GenLaplace, GenLaplaceParams};
pub use qgamma::{qgb_pdf, QGammaBessel, QGammaBesselParams};
pub use superstat::{superstat_pdf, superstat_pdf_series, Superstat, SuperstatParams};
