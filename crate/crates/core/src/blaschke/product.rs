use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// `c · Π (z - a)/(1 - conj(a) z)` with `|c| = 1` and every `|a| < 1`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FiniteBlaschkeProduct {
    unimodular_constant: Complex64,
    zeros: Vec<Complex64>,
}

impl FiniteBlaschkeProduct {
    pub fn new(unimodular_constant: Complex64, zeros: Vec<Complex64>) -> Result<Self> {
        if (unimodular_constant.norm() - 1.0).abs() > 1e-14 {
            return Err(Error::domain(format!(
                "constant {unimodular_constant} is not unimodular"
            )));
        }
        if let Some(a) = zeros.iter().find(|a| a.norm() >= 1.0) {
            return Err(Error::domain(format!(
                "zero {a} lies outside the open disk"
            )));
        }
        Ok(FiniteBlaschkeProduct {
            unimodular_constant,
            zeros,
        })
    }

    pub fn degree(&self) -> usize {
        self.zeros.len()
    }

    pub fn zeros(&self) -> &[Complex64] {
        &self.zeros
    }

    pub fn unimodular_constant(&self) -> Complex64 {
        self.unimodular_constant
    }

    pub fn eval(&self, z: Complex64) -> Result<Complex64> {
        let mut acc = self.unimodular_constant;
        for a in &self.zeros {
            let den = Complex64::new(1.0, 0.0) - a.conj() * z;
            if den.norm() < 1e-14 {
                return Err(Error::Pole(format!(
                    "Blaschke factor at {a} has a pole at {z}"
                )));
            }
            acc *= (z - a) / den;
        }
        Ok(acc)
    }
}
