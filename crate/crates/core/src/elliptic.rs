//! Jacobi elliptic functions as theta quotients, together with
//! `ω₁(τ) = ϑ₃²(0,τ)`, `k(τ) = ϑ₂²(0,τ)/ϑ₃²(0,τ)` and `√k(τ) = ϑ₂(0,τ)/ϑ₃(0,τ)`.
//!
//! The functions take the argument `u` directly; the theta argument is
//! `u / ω₁(τ)`.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::theta::{theta, SeriesConfig, ThetaKind, UpperHalfPoint};

const NULL_FLOOR: f64 = 1e-300;
const POLE_RATIO: f64 = 1e-12;

/// Theta nulls at a fixed τ, computed once.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EllipticContext {
    tau: UpperHalfPoint,
    cfg: SeriesConfig,
    theta0: Complex64,
    theta2: Complex64,
    theta3: Complex64,
}

impl EllipticContext {
    pub fn new(tau: UpperHalfPoint, cfg: SeriesConfig) -> Result<Self> {
        let zero = Complex64::new(0.0, 0.0);
        let theta0 = theta(ThetaKind::Zero, zero, &tau, &cfg)?;
        let theta2 = theta(ThetaKind::Two, zero, &tau, &cfg)?;
        let theta3 = theta(ThetaKind::Three, zero, &tau, &cfg)?;
        for (name, v) in [("ϑ₀", theta0), ("ϑ₂", theta2), ("ϑ₃", theta3)] {
            if v.norm() < NULL_FLOOR {
                return Err(Error::Precision {
                    message: format!("{name}(0, τ) underflowed at τ = {}", tau.value()),
                    degraded: tau.degraded(),
                });
            }
        }
        Ok(EllipticContext {
            tau,
            cfg,
            theta0,
            theta2,
            theta3,
        })
    }

    pub fn with_defaults(tau: UpperHalfPoint) -> Result<Self> {
        Self::new(tau, SeriesConfig::default())
    }

    pub fn tau(&self) -> UpperHalfPoint {
        self.tau
    }

    pub fn config(&self) -> SeriesConfig {
        self.cfg
    }

    /// `(ϑ₀(0,τ), ϑ₂(0,τ), ϑ₃(0,τ))`
    pub fn nulls(&self) -> (Complex64, Complex64, Complex64) {
        (self.theta0, self.theta2, self.theta3)
    }

    pub fn omega1(&self) -> Complex64 {
        self.theta3 * self.theta3
    }

    pub fn k_modulus(&self) -> Complex64 {
        let s = self.sqrt_k();
        s * s
    }

    pub fn sqrt_k(&self) -> Complex64 {
        self.theta2 / self.theta3
    }

    fn reduced(&self, u: Complex64) -> Complex64 {
        u / self.omega1()
    }

    fn th(&self, kind: ThetaKind, x: Complex64) -> Result<Complex64> {
        theta(kind, x, &self.tau, &self.cfg)
    }

    pub fn sn(&self, u: Complex64) -> Result<Complex64> {
        let x = self.reduced(u);
        let num = self.th(ThetaKind::One, x)?;
        let den = self.th(ThetaKind::Zero, x)?;
        quotient(self.theta3 / self.theta2, num, den, "sn")
    }

    pub fn cn(&self, u: Complex64) -> Result<Complex64> {
        let x = self.reduced(u);
        let num = self.th(ThetaKind::Two, x)?;
        let den = self.th(ThetaKind::Zero, x)?;
        quotient(self.theta0 / self.theta2, num, den, "cn")
    }

    pub fn dn(&self, u: Complex64) -> Result<Complex64> {
        let x = self.reduced(u);
        let num = self.th(ThetaKind::Three, x)?;
        let den = self.th(ThetaKind::Zero, x)?;
        quotient(self.theta0 / self.theta3, num, den, "dn")
    }

    /// `cn/dn`, evaluated as `(ϑ₃(0)/ϑ₂(0))·ϑ₂(x)/ϑ₃(x)` since the ϑ₀(x)
    /// factors cancel.
    pub fn cd(&self, u: Complex64) -> Result<Complex64> {
        let x = self.reduced(u);
        let num = self.th(ThetaKind::Two, x)?;
        let den = self.th(ThetaKind::Three, x)?;
        quotient(self.theta3 / self.theta2, num, den, "cd")
    }
}

fn quotient(prefactor: Complex64, num: Complex64, den: Complex64, name: &str) -> Result<Complex64> {
    let scale = num.norm().max(1.0);
    if den.norm() < POLE_RATIO * scale {
        return Err(Error::Pole(format!(
            "{name}: denominator theta {:e} is below {POLE_RATIO:e} × {scale:e}",
            den.norm()
        )));
    }
    Ok(prefactor * num / den)
}
