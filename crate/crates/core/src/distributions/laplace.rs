use alloc::vec::Vec;

use super::gamma_bessel::{GammaBessel, GammaBesselParams};
use crate::numerics::{Quadrature, RandomStream};
use crate::pathway::conv_diff_density;
use crate::{Error, Result};

/// `z = x − y` with independent gamma Bessel `x ~ right`, `y ~ left`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GenLaplaceParams {
    pub left: GammaBesselParams,
    pub right: GammaBesselParams,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GenLaplace {
    left: GammaBessel,
    right: GammaBessel,
}

impl GenLaplace {
    pub fn new(p: GenLaplaceParams) -> Result<Self> {
        Ok(GenLaplace {
            left: GammaBessel::new(p.left)?,
            right: GammaBessel::new(p.right)?,
        })
    }

    pub fn params(&self) -> GenLaplaceParams {
        GenLaplaceParams {
            left: *self.left.params(),
            right: *self.right.params(),
        }
    }

    /// `M_x(t) M_y(−t)` on `−b_left < t < b_right`.
    pub fn mgf(&self, t: f64) -> Result<f64> {
        let (bl, br) = (self.left.params().b, self.right.params().b);
        if !(t > -bl && t < br) {
            return Err(Error::domain(alloc::format!("mgf needs {} < t < {br}, got {t}", -bl)));
        }
        Ok(self.right.mgf(t)? * self.left.mgf(-t)?)
    }

    pub fn mean(&self) -> f64 {
        self.right.params().mean() - self.left.params().mean()
    }

    pub fn pdf(&self, z: f64) -> Result<f64> {
        Ok(conv_diff_density(|t| self.right.pdf(t), |y| self.left.pdf(y), z)?.value)
    }

    /// `P(x − y ≤ z)`; integrates the smaller of the two tails.
    pub fn cdf(&self, z: f64) -> Result<f64> {
        if z.is_nan() {
            return Err(Error::domain("cdf argument is NaN"));
        }
        let quad = Quadrature::new(1e-11, 1e-15);
        if z <= 0.0 {
            // ∫_{y>−z} f_y(y) F_x(z+y) dy
            let r = quad.integrate(
                |y| {
                    let fy = self.left.pdf(y);
                    if fy == 0.0 { 0.0 } else { fy * self.right.cdf(z + y).unwrap_or(f64::NAN) }
                },
                -z,
                f64::INFINITY,
            )?;
            Ok(r.value.clamp(0.0, 1.0))
        } else {
            let r = quad.integrate(
                |y| {
                    let fy = self.left.pdf(y);
                    if fy == 0.0 { 0.0 } else { fy * self.right.sf(z + y).unwrap_or(f64::NAN) }
                },
                0.0,
                f64::INFINITY,
            )?;
            Ok((1.0 - r.value).clamp(0.0, 1.0))
        }
    }

    pub fn sample(&self, n: usize, rng: &mut RandomStream) -> Result<Vec<f64>> {
        let x = self.right.sample(n, rng)?;
        let y = self.left.sample(n, rng)?;
        Ok(x.into_iter().zip(y).map(|(a, b)| a - b).collect())
    }
}

pub fn glap_mgf(p: &GenLaplaceParams, t: f64) -> Result<f64> {
    GenLaplace::new(*p)?.mgf(t)
}

pub fn glap_pdf(p: &GenLaplaceParams, z: f64) -> Result<f64> {
    GenLaplace::new(*p)?.pdf(z)
}

pub fn glap_sample(p: &GenLaplaceParams, n: usize, rng: &mut RandomStream) -> Result<Vec<f64>> {
    GenLaplace::new(*p)?.sample(n, rng)
}
