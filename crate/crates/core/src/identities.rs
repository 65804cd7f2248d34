//! Landen-type identities between the squared zeros of `f_{n,τ}` and theta
//! nulls at `nτ`, and their trigonometric limits as `τ → +i∞`.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use serde::{Serialize, Serializer};

use crate::blaschke::ChebyshevBlaschke;
use crate::elliptic::EllipticContext;
use crate::error::{Error, Result};
use crate::theta::{theta, SeriesConfig, ThetaKind, UpperHalfPoint};

pub const IDENTITY_TOL: f64 = 1e-10;
pub const LIMIT_TOL: f64 = 1e-6;
pub const LIMIT_HEIGHT: f64 = 30.0;
/// Displayed denominators smaller than this times their numerator scale are
/// reported rather than divided by.
pub const DENOMINATOR_FLOOR: f64 = 1e-12;

/// The six heights of the standard grid, `τ = iy`.
pub const TAU_GRID: [f64; 6] = [0.4, 0.5, 0.75, 1.0, 1.5, 2.0];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum LandenId {
    N2,
    N3,
    N4Sum,
    N4Prod,
    N5Sum,
    N5Prod,
    N6E1,
    N6E2,
    N6E3,
}

impl LandenId {
    pub const ALL: [LandenId; 9] = [
        LandenId::N2,
        LandenId::N3,
        LandenId::N4Sum,
        LandenId::N4Prod,
        LandenId::N5Sum,
        LandenId::N5Prod,
        LandenId::N6E1,
        LandenId::N6E2,
        LandenId::N6E3,
    ];

    pub fn label(self) -> &'static str {
        match self {
            LandenId::N2 => "n2",
            LandenId::N3 => "n3",
            LandenId::N4Sum => "n4_sum",
            LandenId::N4Prod => "n4_prod",
            LandenId::N5Sum => "n5_sum",
            LandenId::N5Prod => "n5_prod",
            LandenId::N6E1 => "n6_e1",
            LandenId::N6E2 => "n6_e2",
            LandenId::N6E3 => "n6_e3",
        }
    }

    /// `(n, j)`: the identity is about `e_j(b_1, …, b_{⌊n/2⌋})`.
    pub fn degree_and_index(self) -> (usize, usize) {
        match self {
            LandenId::N2 => (2, 1),
            LandenId::N3 => (3, 1),
            LandenId::N4Sum => (4, 1),
            LandenId::N4Prod => (4, 2),
            LandenId::N5Sum => (5, 1),
            LandenId::N5Prod => (5, 2),
            LandenId::N6E1 => (6, 1),
            LandenId::N6E2 => (6, 2),
            LandenId::N6E3 => (6, 3),
        }
    }

    /// `lim e_j / k(τ)^j`, a symmetric function of `cos²((2i-1)π/2n)`.
    pub fn trig_target(self) -> f64 {
        match self {
            LandenId::N2 => 0.5,
            LandenId::N3 => 0.75,
            LandenId::N4Sum => 1.0,
            LandenId::N4Prod => 0.125,
            LandenId::N5Sum => 1.25,
            LandenId::N5Prod => 0.3125,
            LandenId::N6E1 => 1.5,
            LandenId::N6E2 => 0.5625,
            LandenId::N6E3 => 0.031_25,
        }
    }
}

impl fmt::Display for LandenId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for LandenId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        LandenId::ALL
            .into_iter()
            .find(|id| id.label() == s)
            .ok_or_else(|| Error::parse(0, format!("unknown identity {s:?}")))
    }
}

fn serialize_tau<S: Serializer>(
    tau: &UpperHalfPoint,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    tau.value().serialize(s)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct IdentityReport {
    pub identity_id: String,
    #[serde(serialize_with = "serialize_tau")]
    pub tau: UpperHalfPoint,
    pub lhs: Complex64,
    pub rhs: Complex64,
    pub residual: f64,
    pub tolerance: f64,
    pub pass: bool,
}

impl IdentityReport {
    fn new(
        identity_id: String,
        tau: UpperHalfPoint,
        lhs: Complex64,
        rhs: Complex64,
        tolerance: f64,
    ) -> Self {
        let residual = (lhs - rhs).norm() / rhs.norm().max(1.0);
        IdentityReport {
            identity_id,
            tau,
            lhs,
            rhs,
            residual,
            tolerance,
            pass: residual <= tolerance,
        }
    }
}

/// `ϑ₂(0, ·)` and `ϑ₃(0, ·)`.
fn nulls(tau: &UpperHalfPoint, cfg: &SeriesConfig) -> Result<(Complex64, Complex64)> {
    let zero = Complex64::new(0.0, 0.0);
    Ok((
        theta(ThetaKind::Two, zero, tau, cfg)?,
        theta(ThetaKind::Three, zero, tau, cfg)?,
    ))
}

fn quotient(num: Complex64, den: Complex64, what: &str) -> Result<Complex64> {
    if den.norm() < DENOMINATOR_FLOOR * num.norm().max(f64::MIN_POSITIVE) {
        return Err(Error::DenominatorNearZero(format!(
            "{what}: |denominator| = {:e}",
            den.norm()
        )));
    }
    Ok(num / den)
}

/// `∏ b_i` against `ϑ₂(0,nτ)/ϑ₃(0,nτ)` for even `n` and
/// `nϑ₂(0,nτ)ϑ₃(0,nτ)/(ϑ₂(0,τ)ϑ₃(0,τ))` for odd `n`.
pub fn landen_general(n: usize, tau: UpperHalfPoint, cfg: SeriesConfig) -> Result<IdentityReport> {
    if n < 2 {
        return Err(Error::domain("the identity needs n ≥ 2"));
    }
    let cb = ChebyshevBlaschke::build_relaxed(n, tau, cfg)?;
    let lhs = *cb.coefficients().last().expect("n ≥ 2 has a zero");
    let (a2, a3) = nulls(&tau.scaled(n), &cfg)?;
    let rhs = if n.is_multiple_of(2) {
        quotient(a2, a3, "ϑ₃(0, nτ)")?
    } else {
        let (t2, t3) = nulls(&tau, &cfg)?;
        quotient(a2 * a3 * n as f64, t2 * t3, "ϑ₂(0, τ)ϑ₃(0, τ)")?
    };
    Ok(IdentityReport::new(
        format!("general_n{n}"),
        tau,
        lhs,
        rhs,
        IDENTITY_TOL,
    ))
}

/// The displayed right-hand side of an identity.
pub fn catalog_rhs(id: LandenId, tau: UpperHalfPoint, cfg: SeriesConfig) -> Result<Complex64> {
    let (n, _) = id.degree_and_index();
    let (t2, t3) = nulls(&tau, &cfg)?;
    let (a2, a3) = nulls(&tau.scaled(n), &cfg)?;
    let p = t2 * t2 * t3 * t3;
    let (s2, s3) = (a2 * a2, a3 * a3);
    match id {
        LandenId::N2 | LandenId::N4Prod | LandenId::N6E3 => quotient(a2, a3, "ϑ₃(0, nτ)"),
        LandenId::N3 | LandenId::N5Prod => {
            quotient(a2 * a3 * n as f64, t2 * t3, "ϑ₂(0, τ)ϑ₃(0, τ)")
        }
        LandenId::N4Sum => {
            let lead = quotient(a2 * 8.0, p, "ϑ₂²(0, τ)ϑ₃²(0, τ)")?;
            Ok(lead * quotient(s3 * s3 - s2 * s2, a3 - a2, "ϑ₃(0, 4τ) - ϑ₂(0, 4τ)")?)
        }
        LandenId::N5Sum => {
            let lead = quotient(a2 * a3 * 5.0, p * 6.0, "ϑ₂²(0, τ)ϑ₃²(0, τ)")?;
            let num = t3.powi(4) + t2.powi(4) - (s3 * s3 + s2 * s2) * 25.0;
            Ok(lead
                * quotient(
                    num,
                    a2 * a3 * 5.0 - t2 * t3,
                    "5ϑ₂(0,5τ)ϑ₃(0,5τ) - ϑ₂(0,τ)ϑ₃(0,τ)",
                )?)
        }
        LandenId::N6E1 | LandenId::N6E2 => {
            let lead = quotient(a2 * (s2 + s3) * 6.0, p, "ϑ₂²(0, τ)ϑ₃²(0, τ)")?;
            let den = p - a2 * a3 * (s2 + s3) * 18.0;
            let quartic = t2.powi(4) + t3.powi(4);
            let num = if id == LandenId::N6E1 {
                p * a2 * 3.0 - a3 * (quartic + s2 * s2 * 45.0 - s3 * s3 * 9.0)
            } else {
                p * a3 * 3.0 - a2 * (quartic - s2 * s2 * 9.0 + s3 * s3 * 45.0)
            };
            Ok(lead * quotient(num, den, "n = 6 denominator")?)
        }
    }
}

pub fn landen_catalog(
    id: LandenId,
    tau: UpperHalfPoint,
    cfg: SeriesConfig,
) -> Result<IdentityReport> {
    let (n, j) = id.degree_and_index();
    let cb = ChebyshevBlaschke::build_relaxed(n, tau, cfg)?;
    let lhs = cb.coefficients()[j - 1];
    let rhs = catalog_rhs(id, tau, cfg)?;
    Ok(IdentityReport::new(
        id.label().into(),
        tau,
        lhs,
        rhs,
        IDENTITY_TOL,
    ))
}

/// `e_j / k(τ)^j` at `τ = iy` against its limit as `y → ∞`.
pub fn trig_limit(id: LandenId, y: f64, cfg: SeriesConfig) -> Result<IdentityReport> {
    let tau = UpperHalfPoint::imaginary(y)?;
    let (n, j) = id.degree_and_index();
    let cb = ChebyshevBlaschke::build(n, tau, cfg)?;
    let k = EllipticContext::new(tau, cfg)?.k_modulus();
    let lhs = cb.coefficients()[j - 1] / k.powi(j as i32);
    let rhs = Complex64::new(id.trig_target(), 0.0);
    Ok(IdentityReport::new(
        format!("{}_limit", id.label()),
        tau,
        lhs,
        rhs,
        LIMIT_TOL,
    ))
}

/// Every catalog identity on every height of [`TAU_GRID`], ordered by
/// identity and then height.
pub fn catalog_grid(cfg: SeriesConfig) -> Result<Vec<IdentityReport>> {
    let mut out = Vec::with_capacity(LandenId::ALL.len() * TAU_GRID.len());
    for id in LandenId::ALL {
        for y in TAU_GRID {
            out.push(landen_catalog(id, UpperHalfPoint::imaginary(y)?, cfg)?);
        }
    }
    Ok(out)
}
