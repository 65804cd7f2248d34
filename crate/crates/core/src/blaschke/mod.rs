//! Chebyshev-Blaschke products
//!
//! ```text
//! f_{n,τ}(z) = z^p Π_{i=1}^{⌊n/2⌋} (z² - b_i)/(1 - b_i z²),   p = n mod 2,
//! b_i = ϑ₂²((2i-1)π/2n, τ) / ϑ₃²((2i-1)π/2n, τ),
//! ```
//!
//! the disk analogues of the Chebyshev polynomials, parametrized by
//! `τ ∈ iℝ_{>0}`. Expanded, the numerator and denominator are
//! `z^p (z^{2m} + Σ(-1)ʲ S_j z^{2m-2j})` and `1 + Σ(-1)ʲ S_j z^{2j}` with
//! `S_j = e_j(b_1, …, b_m)`.

mod coefficients;
mod critical;
mod derivatives;
mod product;

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly;
use crate::theta::{theta, SeriesConfig, ThetaKind, UpperHalfPoint};

pub use coefficients::{
    coefficients_from_derivatives, coefficients_from_series, coefficients_from_taylor,
    elementary_symmetric, solve, taylor_coefficients, PIVOT_FLOOR,
};
pub use critical::{polynomial_roots, CriticalValues, CRITICAL_VALUE_TOL};
pub use derivatives::{
    derivative_at_zero_closed, derivative_at_zero_recurrence, derivatives_at_zero, FieldGenerators,
};
pub use product::FiniteBlaschkeProduct;

const DISK_SLACK: f64 = 1e-12;
const POLE_FLOOR: f64 = 1e-14;

#[derive(Clone, Debug, PartialEq)]
pub struct ChebyshevBlaschke {
    n: usize,
    tau: UpperHalfPoint,
    cfg: SeriesConfig,
    b: Vec<Complex64>,
    parity: u8,
    s: Vec<Complex64>,
    generators: FieldGenerators<Complex64>,
    relaxed: bool,
}

/// Lossless text record of a product on the imaginary axis.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ChebyshevBlaschkeRecord {
    pub n: usize,
    pub tau_im: f64,
    pub b: Vec<f64>,
    pub s: Vec<f64>,
    pub parity: u8,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct ModulusLambda {
    /// `nπ·Im τ/4`
    pub lambda: f64,
    /// `n·Im τ/4`, the modulus under the `(1/2π) log(1/r)` convention.
    pub normalized: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ComposeReport {
    pub m: usize,
    pub n: usize,
    pub points: usize,
    pub max_deviation: f64,
}

fn squared_zero(n: usize, i: usize, tau: &UpperHalfPoint, cfg: &SeriesConfig) -> Result<Complex64> {
    let v = Complex64::new((2 * i - 1) as f64 * PI / (2 * n) as f64, 0.0);
    let t2 = theta(ThetaKind::Two, v, tau, cfg)?;
    let t3 = theta(ThetaKind::Three, v, tau, cfg)?;
    if t3.norm() < 1e-300 {
        return Err(Error::Pole(format!("ϑ₃ vanishes at v = {}", v.re)));
    }
    let q = t2 / t3;
    Ok(q * q)
}

impl ChebyshevBlaschke {
    /// `f_{n,τ}` for `τ ∈ iℝ_{>0}`.
    pub fn build(n: usize, tau: UpperHalfPoint, cfg: SeriesConfig) -> Result<Self> {
        if !tau.is_imaginary() {
            return Err(Error::domain(format!(
                "τ = {} is not purely imaginary; use build_relaxed",
                tau.value()
            )));
        }
        Self::build_inner(n, tau, cfg, false)
    }

    /// Allow any τ in the upper half-plane. The `b_i` are then complex and
    /// the result need not map the disk to itself.
    pub fn build_relaxed(n: usize, tau: UpperHalfPoint, cfg: SeriesConfig) -> Result<Self> {
        Self::build_inner(n, tau, cfg, !tau.is_imaginary())
    }

    fn build_inner(
        n: usize,
        tau: UpperHalfPoint,
        cfg: SeriesConfig,
        relaxed: bool,
    ) -> Result<Self> {
        if n == 0 {
            return Err(Error::domain("degree must be positive"));
        }
        let m = n / 2;
        let mut b = Vec::with_capacity(m);
        for i in 1..=m {
            let mut v = squared_zero(n, i, &tau, &cfg)?;
            if !relaxed {
                // conjugate pairs of terms cancel; drop the rounding residue
                v.im = 0.0;
                if !(v.re > 0.0 && v.re < 1.0) {
                    return Err(Error::Precision {
                        message: format!("b_{i} = {} is outside (0, 1)", v.re),
                        degraded: tau.degraded(),
                    });
                }
            }
            b.push(v);
        }
        let s = elementary_symmetric(&b);
        let generators = FieldGenerators::from_tau(n, &tau, &cfg)?;
        Ok(ChebyshevBlaschke {
            n,
            tau,
            cfg,
            b,
            parity: (n % 2) as u8,
            s,
            generators,
            relaxed,
        })
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn tau(&self) -> UpperHalfPoint {
        self.tau
    }

    pub fn config(&self) -> SeriesConfig {
        self.cfg
    }

    pub fn parity(&self) -> u8 {
        self.parity
    }

    /// Squared zeros `b_1, …, b_{⌊n/2⌋}`.
    pub fn squared_zeros(&self) -> &[Complex64] {
        &self.b
    }

    /// `S_{n,1}, …, S_{n,⌊n/2⌋}`.
    pub fn coefficients(&self) -> &[Complex64] {
        &self.s
    }

    pub fn generators(&self) -> &FieldGenerators<Complex64> {
        &self.generators
    }

    pub fn is_relaxed(&self) -> bool {
        self.relaxed
    }

    fn check_disk(&self, z: Complex64) -> Result<()> {
        if !(z.norm() <= 1.0 + DISK_SLACK) {
            return Err(Error::domain(format!("|z| = {} exceeds 1", z.norm())));
        }
        Ok(())
    }

    /// Product form.
    pub fn eval_product(&self, z: Complex64) -> Result<Complex64> {
        self.check_disk(z)?;
        let z2 = z * z;
        let mut acc = if self.parity == 1 {
            z
        } else {
            Complex64::new(1.0, 0.0)
        };
        for b in &self.b {
            let den = Complex64::new(1.0, 0.0) - b * z2;
            if den.norm() < POLE_FLOOR {
                return Err(Error::Pole(format!("1 - b z² vanishes at z = {z}")));
            }
            acc *= (z2 - b) / den;
        }
        Ok(acc)
    }

    /// Expanded rational form in the `S_{n,j}`.
    pub fn eval_expanded(&self, z: Complex64) -> Result<Complex64> {
        self.check_disk(z)?;
        let (num, den) = self.expanded_polynomials();
        let d = poly::eval(&den, z);
        if d.norm() < POLE_FLOOR {
            return Err(Error::Pole(format!("denominator vanishes at z = {z}")));
        }
        Ok(poly::eval(&num, z) / d)
    }

    /// Numerator and denominator of the expanded form, built from `S`.
    pub(crate) fn expanded_polynomials(&self) -> (Vec<Complex64>, Vec<Complex64>) {
        let m = self.b.len();
        let p = self.parity as usize;
        let zero = Complex64::new(0.0, 0.0);
        let mut num = vec![zero; 2 * m + p + 1];
        let mut den = vec![zero; 2 * m + 1];
        num[2 * m + p] = Complex64::new(1.0, 0.0);
        den[0] = Complex64::new(1.0, 0.0);
        for (j, s) in self.s.iter().enumerate().map(|(j, s)| (j + 1, *s)) {
            let signed = if j % 2 == 0 { s } else { -s };
            num[2 * m - 2 * j + p] = signed;
            den[2 * j] = signed;
        }
        (num, den)
    }

    /// Numerator and denominator multiplied out factor by factor from the
    /// `b_i`, independent of `S`.
    pub(crate) fn product_polynomials(&self) -> (Vec<Complex64>, Vec<Complex64>) {
        let one = Complex64::new(1.0, 0.0);
        let zero = Complex64::new(0.0, 0.0);
        let mut num = if self.parity == 1 {
            vec![zero, one]
        } else {
            vec![one]
        };
        let mut den = vec![one];
        for &b in &self.b {
            num = poly::mul(&num, &[-b, zero, one]);
            den = poly::mul(&den, &[one, zero, -b]);
        }
        (num, den)
    }

    /// The same map as a finite Blaschke product with zeros `±√b_i` (and 0
    /// for odd `n`).
    pub fn to_finite_blaschke(&self) -> Result<FiniteBlaschkeProduct> {
        if self.relaxed {
            return Err(Error::domain(
                "products off the imaginary axis are not Blaschke products",
            ));
        }
        let mut zeros = Vec::with_capacity(self.n);
        if self.parity == 1 {
            zeros.push(Complex64::new(0.0, 0.0));
        }
        for b in &self.b {
            let r = b.re.sqrt();
            zeros.push(Complex64::new(r, 0.0));
            zeros.push(Complex64::new(-r, 0.0));
        }
        FiniteBlaschkeProduct::new(Complex64::new(1.0, 0.0), zeros)
    }

    /// `𝒯_{n,τ}(z) = f_{n,τ}(√k(τ) z) / √k(nτ)`.
    pub fn elliptic_rational(&self, z: Complex64) -> Result<Complex64> {
        let g = &self.generators;
        Ok(self.eval_product(g.sqrt_k * z)? / g.sqrt_k_n)
    }

    pub fn modulus_lambda(&self) -> Result<ModulusLambda> {
        if !self.tau.is_imaginary() {
            return Err(Error::domain("λ is defined for τ on the imaginary axis"));
        }
        let normalized = self.n as f64 * self.tau.im() / 4.0;
        Ok(ModulusLambda {
            lambda: PI * normalized,
            normalized,
        })
    }

    pub fn to_record(&self) -> Result<ChebyshevBlaschkeRecord> {
        if !self.tau.is_imaginary() {
            return Err(Error::domain(
                "only products with τ ∈ iℝ have a record form",
            ));
        }
        Ok(ChebyshevBlaschkeRecord {
            n: self.n,
            tau_im: self.tau.im(),
            b: self.b.iter().map(|b| b.re).collect(),
            s: self.s.iter().map(|s| s.re).collect(),
            parity: self.parity,
        })
    }

    /// Rebuild from a record, keeping its `b` and `S` bit for bit.
    pub fn from_record(rec: &ChebyshevBlaschkeRecord, cfg: SeriesConfig) -> Result<Self> {
        if rec.n == 0 {
            return Err(Error::domain("degree must be positive"));
        }
        let m = rec.n / 2;
        if rec.parity as usize != rec.n % 2 {
            return Err(Error::domain(format!(
                "parity {} does not match n = {}",
                rec.parity, rec.n
            )));
        }
        if rec.b.len() != m || rec.s.len() != m {
            return Err(Error::domain(format!(
                "expected {m} entries in b and s, got {} and {}",
                rec.b.len(),
                rec.s.len()
            )));
        }
        if let Some(b) = rec.b.iter().find(|b| !(**b > 0.0 && **b < 1.0)) {
            return Err(Error::domain(format!("b = {b} is outside (0, 1)")));
        }
        let tau = UpperHalfPoint::imaginary(rec.tau_im)?;
        Ok(ChebyshevBlaschke {
            n: rec.n,
            tau,
            cfg,
            b: rec.b.iter().map(|&x| Complex64::new(x, 0.0)).collect(),
            parity: rec.parity,
            s: rec.s.iter().map(|&x| Complex64::new(x, 0.0)).collect(),
            generators: FieldGenerators::from_tau(rec.n, &tau, &cfg)?,
            relaxed: false,
        })
    }

    pub fn to_record_string(&self) -> Result<String> {
        serde_json::to_string(&self.to_record()?)
            .map_err(|e| Error::domain(format!("serialization failed: {e}")))
    }

    pub fn from_record_str(text: &str, cfg: SeriesConfig) -> Result<Self> {
        let rec: ChebyshevBlaschkeRecord =
            serde_json::from_str(text).map_err(|e| Error::parse(e.column(), e.to_string()))?;
        Self::from_record(&rec, cfg)
    }
}

/// `T_n(x)` by the three-term recurrence.
pub fn chebyshev_poly(n: usize, x: Complex64) -> Complex64 {
    let mut prev = Complex64::new(1.0, 0.0);
    if n == 0 {
        return prev;
    }
    let mut cur = x;
    for _ in 1..n {
        let next = x * cur * 2.0 - prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// `𝒯_{n,τ}(z)` for τ on the imaginary axis.
pub fn elliptic_rational(
    n: usize,
    tau: UpperHalfPoint,
    z: Complex64,
    cfg: SeriesConfig,
) -> Result<Complex64> {
    ChebyshevBlaschke::build(n, tau, cfg)?.elliptic_rational(z)
}

/// Fifty interior sample points: five radii by ten angles, offset so no
/// point lies on a coordinate axis.
pub fn interior_grid() -> Vec<Complex64> {
    let radii = [0.15, 0.35, 0.55, 0.75, 0.92];
    let mut pts = Vec::with_capacity(50);
    for (ri, r) in radii.iter().enumerate() {
        for a in 0..10 {
            let angle = 2.0 * PI * (a as f64 + 0.1 * ri as f64 + 0.05) / 10.0;
            pts.push(Complex64::from_polar(*r, angle));
        }
    }
    pts
}

/// Largest deviation of `f_{m,nτ} ∘ f_{n,τ}` from `f_{mn,τ}` on
/// [`interior_grid`].
pub fn compose_check(
    m: usize,
    n: usize,
    tau: UpperHalfPoint,
    cfg: SeriesConfig,
) -> Result<ComposeReport> {
    if m == 0 || n == 0 {
        return Err(Error::domain("degrees must be positive"));
    }
    if m * n > 12 {
        return Err(Error::domain(format!("m·n = {} exceeds 12", m * n)));
    }
    let inner = ChebyshevBlaschke::build(n, tau, cfg)?;
    let outer = ChebyshevBlaschke::build(m, tau.scaled(n), cfg)?;
    let whole = ChebyshevBlaschke::build(m * n, tau, cfg)?;
    let grid = interior_grid();
    let mut max_deviation: f64 = 0.0;
    for &z in &grid {
        let lhs = outer.eval_product(inner.eval_product(z)?)?;
        let rhs = whole.eval_product(z)?;
        max_deviation = max_deviation.max((lhs - rhs).norm());
    }
    Ok(ComposeReport {
        m,
        n,
        points: grid.len(),
        max_deviation,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tau(y: f64) -> UpperHalfPoint {
        UpperHalfPoint::imaginary(y).unwrap()
    }

    fn cb(n: usize, y: f64) -> ChebyshevBlaschke {
        ChebyshevBlaschke::build(n, tau(y), SeriesConfig::default()).unwrap()
    }

    fn r(x: f64) -> Complex64 {
        Complex64::new(x, 0.0)
    }

    #[test]
    fn degree_one_is_identity() {
        let f = cb(1, 0.5);
        assert_eq!(f.parity(), 1);
        assert!(f.squared_zeros().is_empty());
        let z = Complex64::new(0.3, -0.4);
        assert_eq!(f.eval_product(z).unwrap(), z);
        assert_eq!(f.eval_expanded(z).unwrap(), z);
    }

    #[test]
    fn degree_two_zero_is_sqrt_k() {
        let f = cb(2, 0.5);
        assert!((f.squared_zeros()[0].re - 0.414_213_562_373_095_05).abs() < 1e-15);
        assert!((f.eval_product(r(0.0)).unwrap().re + 0.414_213_562_373_095_05).abs() < 1e-15);
    }

    #[test]
    fn degree_four_product_of_zeros() {
        // ϑ₂(0,4i)/ϑ₃(0,4i) from the theta-series oracle
        let f = cb(4, 1.0);
        let b = f.squared_zeros();
        assert!(((b[0] * b[1]).re / 0.003_734_885_463_325_133_6 - 1.0).abs() < 1e-13);
        assert_eq!(f.coefficients()[1], b[0] * b[1]);
    }

    #[test]
    fn rejects_off_axis_without_flag() {
        let t = UpperHalfPoint::new(Complex64::new(0.2, 1.0)).unwrap();
        assert!(matches!(
            ChebyshevBlaschke::build(3, t, SeriesConfig::default()),
            Err(Error::Domain(_))
        ));
        let f = ChebyshevBlaschke::build_relaxed(3, t, SeriesConfig::default()).unwrap();
        assert!(f.is_relaxed());
        assert!(f.to_finite_blaschke().is_err());
        assert!(f.to_record().is_err());
        assert!(ChebyshevBlaschke::build(0, tau(1.0), SeriesConfig::default()).is_err());
    }

    #[test]
    fn value_one_at_one() {
        for n in 1..=8 {
            for y in [0.5, 1.0, 2.0] {
                let f = cb(n, y);
                assert!((f.eval_product(r(1.0)).unwrap() - r(1.0)).norm() < 1e-14);
                assert!((f.eval_expanded(r(1.0)).unwrap() - r(1.0)).norm() < 1e-14);
                assert!((f.elliptic_rational(r(1.0)).unwrap() - r(1.0)).norm() < 1e-9);
            }
        }
    }

    #[test]
    fn odd_degree_is_odd() {
        let f = cb(3, 0.7);
        for z in interior_grid().into_iter().take(20) {
            assert!((f.eval_product(-z).unwrap() + f.eval_product(z).unwrap()).norm() < 1e-15);
        }
    }

    #[test]
    fn expanded_agrees_with_product() {
        let f = cb(2, 0.5);
        let a = f.eval_product(r(0.5)).unwrap();
        let b = f.eval_expanded(r(0.5)).unwrap();
        assert!((a - b).norm() < 1e-12);
    }

    #[test]
    fn outside_disk_is_rejected() {
        assert!(matches!(
            cb(3, 1.0).eval_product(r(1.5)),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn finite_blaschke_matches() {
        let f = cb(5, 0.8);
        let fb = f.to_finite_blaschke().unwrap();
        assert_eq!(fb.degree(), 5);
        for z in interior_grid() {
            assert!((fb.eval(z).unwrap() - f.eval_product(z).unwrap()).norm() < 1e-13);
        }
    }

    #[test]
    fn chebyshev_values() {
        assert!((chebyshev_poly(2, r(0.3)) - r(-0.82)).norm() < 1e-15);
        assert_eq!(chebyshev_poly(5, r(1.0)), r(1.0));
        assert!((chebyshev_poly(3, r(0.4f64.cos())).re - 1.2f64.cos()).abs() < 1e-14);
        assert_eq!(chebyshev_poly(0, r(0.7)), r(1.0));
    }

    #[test]
    fn elliptic_rational_degenerates() {
        let cfg = SeriesConfig::default();
        let v = elliptic_rational(4, tau(10.0), r(0.5), cfg).unwrap();
        assert!((v - r(-0.5)).norm() < 1e-8);
        let v = elliptic_rational(2, tau(20.0), r(0.0), cfg).unwrap();
        assert!((v - r(-1.0)).norm() < 1e-10);
    }

    #[test]
    fn lambda_values() {
        let l = cb(2, 1.0).modulus_lambda().unwrap();
        assert!((l.lambda - PI / 2.0).abs() < 1e-15);
        assert!((l.normalized - 0.5).abs() < 1e-15);
        assert!((cb(1, 1.0).modulus_lambda().unwrap().lambda - PI / 4.0).abs() < 1e-15);
        assert!((cb(4, 0.5).modulus_lambda().unwrap().lambda - PI / 2.0).abs() < 1e-15);
    }

    #[test]
    fn compose_examples() {
        let cfg = SeriesConfig::default();
        assert!(compose_check(2, 2, tau(0.5), cfg).unwrap().max_deviation <= 1e-9);
        assert!(compose_check(1, 5, tau(1.0), cfg).unwrap().max_deviation <= 1e-12);
        assert!(compose_check(3, 2, tau(1.0), cfg).unwrap().max_deviation <= 1e-9);
        assert!(compose_check(4, 4, tau(1.0), cfg).is_err());
    }

    #[test]
    fn record_validation() {
        let mut rec = cb(4, 1.0).to_record().unwrap();
        rec.parity = 1;
        assert!(ChebyshevBlaschke::from_record(&rec, SeriesConfig::default()).is_err());
        rec.parity = 0;
        rec.b.pop();
        assert!(ChebyshevBlaschke::from_record(&rec, SeriesConfig::default()).is_err());
        assert!(matches!(
            ChebyshevBlaschke::from_record_str("{not json", SeriesConfig::default()),
            Err(Error::Parse { .. })
        ));
    }
}
