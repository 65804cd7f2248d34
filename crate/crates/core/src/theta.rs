//! Jacobi theta functions with nome `q = e^{2πiτ}`.
//!
//! ```text
//! ϑ₁(v,τ) = Σ i^{2n-1} q^{(n+1/2)²} e^{(2n+1)iv}
//! ϑ₂(v,τ) = Σ q^{(n+1/2)²} e^{(2n+1)iv}
//! ϑ₃(v,τ) = Σ q^{n²} e^{2niv}
//! ϑ₀(v,τ) = Σ (-1)ⁿ q^{n²} e^{2niv}
//! ```
//!
//! Every `q^w` is evaluated as `exp(2πiτ·w)` with a real weight `w`, so no
//! fractional power of a stored nome (and hence no branch choice) is ever
//! taken.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::dd::Dd;
use crate::error::{Error, Result};

/// Below this imaginary part evaluations are flagged as degraded.
pub const DEFAULT_TAU_FLOOR: f64 = 0.05;

/// A point τ of the open upper half-plane.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct UpperHalfPoint {
    value: Complex64,
    floor: f64,
}

impl UpperHalfPoint {
    pub fn new(value: Complex64) -> Result<Self> {
        Self::with_floor(value, DEFAULT_TAU_FLOOR)
    }

    pub fn with_floor(value: Complex64, floor: f64) -> Result<Self> {
        if !(value.re.is_finite() && value.im.is_finite()) {
            return Err(Error::domain(format!("τ = {value} is not finite")));
        }
        if value.im <= 0.0 {
            return Err(Error::domain(format!(
                "τ = {value} is not in the upper half-plane"
            )));
        }
        Ok(UpperHalfPoint { value, floor })
    }

    /// τ = i·y.
    pub fn imaginary(y: f64) -> Result<Self> {
        Self::new(Complex64::new(0.0, y))
    }

    pub fn value(&self) -> Complex64 {
        self.value
    }

    pub fn re(&self) -> f64 {
        self.value.re
    }

    pub fn im(&self) -> f64 {
        self.value.im
    }

    pub fn is_imaginary(&self) -> bool {
        self.value.re == 0.0
    }

    /// True when Im τ is below the full-accuracy floor.
    pub fn degraded(&self) -> bool {
        self.value.im < self.floor
    }

    /// `m·τ` for a positive integer `m`.
    pub fn scaled(&self, m: usize) -> Self {
        UpperHalfPoint {
            value: self.value * m as f64,
            floor: self.floor,
        }
    }

    /// Apply an arbitrary map, re-checking the half-plane condition.
    pub fn map(&self, f: impl FnOnce(Complex64) -> Complex64) -> Result<Self> {
        Self::with_floor(f(self.value), self.floor)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct SeriesConfig {
    pub rel_tol: f64,
    pub max_index: usize,
}

impl Default for SeriesConfig {
    fn default() -> Self {
        SeriesConfig {
            rel_tol: 1e-15,
            max_index: 64,
        }
    }
}

impl SeriesConfig {
    pub fn new(rel_tol: f64, max_index: usize) -> Result<Self> {
        if !(rel_tol > 0.0) {
            return Err(Error::domain("rel_tol must be positive"));
        }
        if max_index < 8 {
            return Err(Error::domain("max_index must be at least 8"));
        }
        Ok(SeriesConfig { rel_tol, max_index })
    }
}

/// Which of the four classical theta functions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ThetaKind {
    Zero,
    One,
    Two,
    Three,
}

impl ThetaKind {
    pub fn from_index(j: u8) -> Result<Self> {
        match j {
            0 => Ok(ThetaKind::Zero),
            1 => Ok(ThetaKind::One),
            2 => Ok(ThetaKind::Two),
            3 => Ok(ThetaKind::Three),
            _ => Err(Error::domain(format!("theta index {j} not in 0..=3"))),
        }
    }

    pub fn index(self) -> u8 {
        match self {
            ThetaKind::Zero => 0,
            ThetaKind::One => 1,
            ThetaKind::Two => 2,
            ThetaKind::Three => 3,
        }
    }

    fn half_integer(self) -> bool {
        matches!(self, ThetaKind::One | ThetaKind::Two)
    }
}

/// A theta value together with how it was obtained.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ThetaValue {
    pub value: Complex64,
    /// Largest |n| used in the symmetric partial sum.
    pub terms: usize,
    pub degraded: bool,
}

pub fn nome(tau: &UpperHalfPoint) -> Complex64 {
    q_power(tau.value(), 1.0)
}

/// `exp(2πiτ·w)`.
#[inline]
fn q_power(tau: Complex64, w: f64) -> Complex64 {
    (Complex64::i() * (2.0 * PI * w) * tau).exp()
}

fn term(kind: ThetaKind, n: i64, v: Complex64, tau: Complex64) -> Complex64 {
    let i = Complex64::i();
    if kind.half_integer() {
        let h = n as f64 + 0.5;
        let base = q_power(tau, h * h) * (i * (2 * n + 1) as f64 * v).exp();
        if kind == ThetaKind::One {
            // i^{2n-1} = -i·(-1)^n
            let sign = if n.rem_euclid(2) == 0 { 1.0 } else { -1.0 };
            base * (-i * sign)
        } else {
            base
        }
    } else {
        let base = q_power(tau, (n * n) as f64) * (i * (2 * n) as f64 * v).exp();
        if kind == ThetaKind::Zero && n.rem_euclid(2) == 1 {
            -base
        } else {
            base
        }
    }
}

/// Evaluate a theta function and report the truncation used.
pub fn theta_eval(
    kind: ThetaKind,
    v: Complex64,
    tau: &UpperHalfPoint,
    cfg: &SeriesConfig,
) -> Result<ThetaValue> {
    let t = tau.value();
    // Terms are kept and summed smallest first once the tail is negligible.
    let mut terms = Vec::with_capacity(16);
    let mut scale = 0.0;

    // Integer-index series start with the lone n = 0 term; half-integer
    // series pair n with -n-1 from the start.
    let first = if kind.half_integer() {
        0
    } else {
        let t0 = term(kind, 0, v, t);
        terms.push(t0);
        scale += t0.norm();
        1
    };

    for n in first..=cfg.max_index as i64 {
        let partner = if kind.half_integer() { -n - 1 } else { -n };
        let a = term(kind, n, v, t);
        let b = term(kind, partner, v, t);
        terms.push(a + b);
        let pair = a.norm() + b.norm();
        scale += pair;
        if !scale.is_finite() {
            return Err(Error::Precision {
                message: format!("theta series overflowed at index {n}"),
                degraded: tau.degraded(),
            });
        }
        if pair < cfg.rel_tol * scale || scale == 0.0 {
            return Ok(ThetaValue {
                value: terms.iter().rev().sum(),
                terms: n as usize,
                degraded: tau.degraded(),
            });
        }
    }
    Err(Error::Precision {
        message: format!(
            "theta_{} did not reach rel_tol {:e} within {} terms",
            kind.index(),
            cfg.rel_tol,
            cfg.max_index
        ),
        degraded: tau.degraded(),
    })
}

pub fn theta(
    kind: ThetaKind,
    v: Complex64,
    tau: &UpperHalfPoint,
    cfg: &SeriesConfig,
) -> Result<Complex64> {
    theta_eval(kind, v, tau, cfg).map(|t| t.value)
}

/// Index-based entry point, `j ∈ {0, 1, 2, 3}`.
pub fn theta_j(j: u8, v: Complex64, tau: &UpperHalfPoint, cfg: &SeriesConfig) -> Result<Complex64> {
    theta(ThetaKind::from_index(j)?, v, tau, cfg)
}

/// `ϑ₂(0, iy)` and `ϑ₃(0, iy)` in double-double precision.
pub fn theta_nulls_imaginary_dd(y: f64) -> Result<(Dd, Dd)> {
    if !(y > 0.0) || !y.is_finite() {
        return Err(Error::domain(format!("Im τ = {y} must be positive")));
    }
    let two_pi_y = Dd::PI * (2.0 * y);
    let weight = |w: f64| (-(two_pi_y * w)).exp();

    let mut th2 = Dd::ZERO;
    let mut th3 = Dd::ONE;
    let mut done2 = false;
    let mut done3 = false;
    for n in 0..10_000u32 {
        if !done2 {
            let h = n as f64 + 0.5;
            let t = weight(h * h) * 2.0;
            th2 += t;
            done2 = t.hi() <= 1e-34 * th2.hi();
        }
        if !done3 && n > 0 {
            let t = weight((n * n) as f64) * 2.0;
            th3 += t;
            done3 = t.hi() <= 1e-34 * th3.hi();
        }
        if done2 && done3 {
            return Ok((th2, th3));
        }
    }
    Err(Error::Precision {
        message: format!("double-double theta nulls did not converge at Im τ = {y}"),
        degraded: y < DEFAULT_TAU_FLOOR,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tau(y: f64) -> UpperHalfPoint {
        UpperHalfPoint::imaginary(y).unwrap()
    }

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    #[test]
    fn rejects_lower_half_plane() {
        assert!(matches!(
            UpperHalfPoint::new(Complex64::new(0.3, 0.0)),
            Err(Error::Domain(_))
        ));
        assert!(UpperHalfPoint::new(Complex64::new(0.3, -1.0)).is_err());
    }

    #[test]
    fn degraded_flag_below_floor() {
        let t = tau(0.01);
        assert!(t.degraded());
        let v = theta_eval(ThetaKind::Three, c(0.0), &t, &SeriesConfig::default()).unwrap();
        assert!(v.degraded);
        assert!(!tau(0.05).degraded());
    }

    #[test]
    fn nome_values() {
        let q = nome(&tau(1.0));
        assert!((q.re - 1.867_442_731_707_988_8e-3).abs() < 1e-15 && q.im.abs() < 1e-18);
        let q = nome(&tau(0.5));
        assert!((q.re - 4.321_391_826_377_224_5e-2).abs() < 1e-15);
        let shifted = nome(&UpperHalfPoint::new(Complex64::new(1.0, 1.0)).unwrap());
        assert!((shifted - nome(&tau(1.0))).norm() < 1e-17);
    }

    #[test]
    fn theta3_null_far_up_is_one() {
        let v = theta(
            ThetaKind::Three,
            c(0.0),
            &tau(50.0),
            &SeriesConfig::default(),
        )
        .unwrap();
        assert_eq!(v, c(1.0));
    }

    #[test]
    fn theta3_null_half_i() {
        // 1 + 2 Σ e^{-πn²}, summed in mpmath at 40 digits
        let v = theta(
            ThetaKind::Three,
            c(0.0),
            &tau(0.5),
            &SeriesConfig::default(),
        )
        .unwrap();
        assert!((v.re - 1.086_434_811_213_308).abs() < 1e-15);
        assert!(v.im.abs() < 1e-16);
    }

    #[test]
    fn odd_and_cancelling_zeros() {
        let cfg = SeriesConfig::default();
        for t in [
            tau(0.3),
            tau(1.0),
            UpperHalfPoint::new(Complex64::new(0.25, 0.75)).unwrap(),
        ] {
            let z1 = theta(ThetaKind::One, c(0.0), &t, &cfg).unwrap();
            assert!(z1.norm() < 1e-16);
            let z2 = theta(ThetaKind::Two, c(PI / 2.0), &t, &cfg).unwrap();
            assert!(z2.norm() < 1e-15, "{z2}");
        }
    }

    #[test]
    fn precision_error_when_terms_exhausted() {
        let cfg = SeriesConfig::new(1e-15, 8).unwrap();
        let err = theta(ThetaKind::Three, c(0.0), &tau(0.01), &cfg).unwrap_err();
        assert_eq!(
            err,
            Error::Precision {
                message: "theta_3 did not reach rel_tol 1e-15 within 8 terms".into(),
                degraded: true
            }
        );
    }

    #[test]
    fn config_validation() {
        assert!(SeriesConfig::new(0.0, 64).is_err());
        assert!(SeriesConfig::new(1e-15, 7).is_err());
        assert!(ThetaKind::from_index(4).is_err());
    }

    #[test]
    fn dd_nulls_agree_with_f64() {
        let cfg = SeriesConfig::default();
        for y in [0.3, 0.5, 1.0, 2.0, 8.0] {
            let (t2, t3) = theta_nulls_imaginary_dd(y).unwrap();
            let f2 = theta(ThetaKind::Two, c(0.0), &tau(y), &cfg).unwrap().re;
            let f3 = theta(ThetaKind::Three, c(0.0), &tau(y), &cfg).unwrap().re;
            assert!(
                (t2.to_f64() - f2).abs() <= 1e-15 * f2,
                "y={y} {} {f2}",
                t2.to_f64()
            );
            assert!((t3.to_f64() - f3).abs() <= 1e-15 * f3);
        }
    }

    #[test]
    fn dd_null_theta2_reference() {
        // ϑ₂(0, i) from mpmath at 40 digits
        let (t2, _) = theta_nulls_imaginary_dd(1.0).unwrap();
        let err = (t2.to_f64() - 0.415_760_602_596_027_03).abs();
        assert!(err < 1e-16, "{err}");
    }

    #[test]
    fn evaluation_is_deterministic() {
        let t = UpperHalfPoint::new(Complex64::new(0.25, 0.75)).unwrap();
        let v = Complex64::new(0.3, 0.2);
        let a = theta(ThetaKind::Zero, v, &t, &SeriesConfig::default()).unwrap();
        let b = theta(ThetaKind::Zero, v, &t, &SeriesConfig::default()).unwrap();
        assert_eq!(a.re.to_bits(), b.re.to_bits());
        assert_eq!(a.im.to_bits(), b.im.to_bits());
    }
}
