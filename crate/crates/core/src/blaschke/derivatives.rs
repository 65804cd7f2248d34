//! Derivatives of `f_{n,τ}` at the origin.
//!
//! Orders 0 through 5 have closed forms in the three generators
//! `√k(τ)`, `√k(nτ)` and `ω₁(nτ)/ω₁(τ)`. Higher orders follow from the
//! nonlinear second-order ODE satisfied by `f_{n,τ}`: for `i ≥ 4` with
//! `i ≡ n (mod 2)`,
//!
//! ```text
//! f⁽ⁱ⁺²⁾ = -[n²r²(1 + (3(-1)ⁿ⁻¹ - 2)k_n²)/k - i²(1/k + k)] f⁽ⁱ⁾
//!          - i(i-1)²(i-2) f⁽ⁱ⁻²⁾
//!          + (12 n² r² k_n / k) Σ_{j=1}^{i-1} Σ_{l=0}^{j-1} C(i-1,j) C(j-1,l) f⁽ˡ⁾ f⁽ʲ⁻ˡ⁾ f⁽ⁱ⁻ʲ⁾
//! ```
//!
//! with `k = k(τ)`, `k_n = k(nτ)`, `r = ω₁(nτ)/ω₁(τ)` and all derivatives
//! taken at 0.

use num_complex::Complex64;

use crate::dd::Dd;
use crate::elliptic::EllipticContext;
use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::theta::{theta_nulls_imaginary_dd, SeriesConfig, UpperHalfPoint};

/// The three quantities every Taylor coefficient of `f_{n,τ}` is a rational
/// function of.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FieldGenerators<T> {
    pub n: usize,
    /// `√k(τ)`
    pub sqrt_k: T,
    /// `√k(nτ)`
    pub sqrt_k_n: T,
    /// `ω₁(nτ)/ω₁(τ)`
    pub omega_ratio: T,
}

impl FieldGenerators<Complex64> {
    pub fn from_tau(n: usize, tau: &UpperHalfPoint, cfg: &SeriesConfig) -> Result<Self> {
        if n == 0 {
            return Err(Error::domain("degree must be positive"));
        }
        let base = EllipticContext::new(*tau, *cfg)?;
        let scaled = EllipticContext::new(tau.scaled(n), *cfg)?;
        Ok(FieldGenerators {
            n,
            sqrt_k: base.sqrt_k(),
            sqrt_k_n: scaled.sqrt_k(),
            omega_ratio: scaled.omega1() / base.omega1(),
        })
    }
}

impl FieldGenerators<Dd> {
    /// Generators at `τ = iy` in double-double precision.
    pub fn imaginary_dd(n: usize, y: f64) -> Result<Self> {
        if n == 0 {
            return Err(Error::domain("degree must be positive"));
        }
        let (t2, t3) = theta_nulls_imaginary_dd(y)?;
        let (t2n, t3n) = theta_nulls_imaginary_dd(y * n as f64)?;
        if t2n.hi() < 1e-150 {
            return Err(Error::Precision {
                message: format!("√k({n}τ) underflows at Im τ = {y}"),
                degraded: false,
            });
        }
        let r = t3n / t3;
        Ok(FieldGenerators {
            n,
            sqrt_k: t2 / t3,
            sqrt_k_n: t2n / t3n,
            omega_ratio: r * r,
        })
    }
}

fn sign<T: Scalar>(exponent: usize) -> T {
    if exponent.is_multiple_of(2) {
        T::one()
    } else {
        -T::one()
    }
}

fn binomial(n: usize, k: usize) -> f64 {
    if k > n {
        return 0.0;
    }
    let k = k.min(n - k);
    let mut acc = 1.0;
    for i in 0..k {
        acc = acc * (n - i) as f64 / (i + 1) as f64;
    }
    acc.round()
}

impl<T: Scalar> FieldGenerators<T> {
    pub fn k(&self) -> T {
        self.sqrt_k * self.sqrt_k
    }

    pub fn k_n(&self) -> T {
        self.sqrt_k_n * self.sqrt_k_n
    }

    fn even(&self) -> bool {
        self.n.is_multiple_of(2)
    }

    /// `f⁽ⁱ⁾(0)` for `i ≤ 5`.
    pub fn closed_form(&self, i: usize) -> Result<T> {
        if i > 5 {
            return Err(Error::domain(format!(
                "closed forms exist only up to order 5, got {i}"
            )));
        }
        let n = self.n;
        if n == 1 {
            return Ok(if i == 1 { T::one() } else { T::zero() });
        }
        if i.is_multiple_of(2) != self.even() {
            return Ok(T::zero());
        }
        let c = |x: f64| T::from_f64(x);
        let nf = n as f64;
        let (sk, skn, r) = (self.sqrt_k, self.sqrt_k_n, self.omega_ratio);
        let (k, kn) = (self.k(), self.k_n());
        let one = T::one();
        let n2r2 = c(nf * nf) * r * r;

        let value = match i {
            0 => sign::<T>(n / 2) * skn,
            1 => sign::<T>((n - 1) / 2) * c(nf) * r * skn / sk,
            2 => sign::<T>(n / 2) * n2r2 * skn / k * (kn * kn - one),
            3 => {
                sign::<T>(n.div_ceil(2)) * c(nf) * r * skn / (sk * sk * sk)
                    * (n2r2 * (one + kn * kn) - (one + k * k))
            }
            4 => {
                sign::<T>(n / 2) * n2r2 * skn / (k * k)
                    * (one - kn * kn)
                    * (n2r2 * (one - c(5.0) * kn * kn) - c(4.0) * (one + k * k))
            }
            5 => {
                let sk5 = sk * sk * sk * sk * sk;
                sign::<T>((n - 1) / 2) * c(nf) * r * skn / sk5
                    * (n2r2 * n2r2 * (kn * kn * kn * kn + c(14.0) * kn * kn + one)
                        - c(10.0) * n2r2 * (one + k * k) * (one + kn * kn)
                        + c(3.0) * (c(3.0) * k * k * k * k + c(2.0) * k * k + c(3.0)))
            }
            _ => unreachable!(),
        };
        Ok(value)
    }

    /// `f⁽ⁱ⁺²⁾(0)` from `f⁽⁰⁾(0) … f⁽ⁱ⁾(0)` via the ODE recurrence.
    pub fn recurrence_step(&self, i: usize, lower: &[T]) -> Result<T> {
        let n = self.n;
        if i < 4 {
            return Err(Error::domain(format!("recurrence needs i ≥ 4, got {i}")));
        }
        if !(i + n).is_multiple_of(2) {
            return Err(Error::domain(format!(
                "order {i} and degree {n} have opposite parity"
            )));
        }
        if lower.len() <= i {
            return Err(Error::domain(format!(
                "need derivatives of order 0..={i}, got {}",
                lower.len()
            )));
        }
        if n == 1 {
            return Ok(T::zero());
        }
        let c = |x: f64| T::from_f64(x);
        let nf = n as f64;
        let (k, kn, r) = (self.k(), self.k_n(), self.omega_ratio);
        let n2r2 = c(nf * nf) * r * r;
        let alt = if n.is_multiple_of(2) { -5.0 } else { 1.0 };
        let bracket =
            n2r2 * (T::one() + c(alt) * kn * kn) / k - c((i * i) as f64) * (T::one() / k + k);
        let cubic_coef = c(12.0) * n2r2 * kn / k;

        // Terms of the wrong parity vanish identically; skip them rather than
        // multiplying by zero.
        let d = |m: usize| -> T {
            if (m + n).is_multiple_of(2) {
                lower[m]
            } else {
                T::zero()
            }
        };
        let mut cubic = T::zero();
        for j in 1..i {
            let outer = binomial(i - 1, j);
            let tail = d(i - j);
            if tail == T::zero() {
                continue;
            }
            for l in 0..j {
                let a = d(l);
                let b = d(j - l);
                if a == T::zero() || b == T::zero() {
                    continue;
                }
                cubic = cubic + c(outer * binomial(j - 1, l)) * a * b * tail;
            }
        }
        let im = i as f64;
        Ok(
            -bracket * d(i) - c(im * (im - 1.0) * (im - 1.0) * (im - 2.0)) * d(i - 2)
                + cubic_coef * cubic,
        )
    }

    /// `f⁽⁰⁾(0) … f⁽ᵐᵃˣ⁾(0)`.
    pub fn derivatives(&self, max_order: usize) -> Result<Vec<T>> {
        let mut out = Vec::with_capacity(max_order + 1);
        for i in 0..=max_order.min(5) {
            out.push(self.closed_form(i)?);
        }
        while out.len() <= max_order {
            let next = out.len();
            let value = if (next + self.n).is_multiple_of(2) {
                self.recurrence_step(next - 2, &out)?
            } else {
                T::zero()
            };
            out.push(value);
        }
        Ok(out)
    }

    /// Taylor coefficients `f⁽ⁱ⁾(0)/i!`.
    pub fn taylor(&self, max_order: usize) -> Result<Vec<T>> {
        let d = self.derivatives(max_order)?;
        let mut fact = T::one();
        Ok(d.into_iter()
            .enumerate()
            .map(|(i, v)| {
                if i > 1 {
                    fact = fact * T::from_f64(i as f64);
                }
                v / fact
            })
            .collect())
    }
}

/// `f⁽ⁱ⁾_{n,τ}(0)` for `0 ≤ i ≤ 5` from the closed forms.
pub fn derivative_at_zero_closed(
    n: usize,
    tau: &UpperHalfPoint,
    i: usize,
    cfg: &SeriesConfig,
) -> Result<Complex64> {
    FieldGenerators::from_tau(n, tau, cfg)?.closed_form(i)
}

/// `f⁽ⁱ⁺²⁾_{n,τ}(0)` from the supplied lower-order derivatives.
pub fn derivative_at_zero_recurrence(
    n: usize,
    tau: &UpperHalfPoint,
    i: usize,
    lower: &[Complex64],
    cfg: &SeriesConfig,
) -> Result<Complex64> {
    FieldGenerators::from_tau(n, tau, cfg)?.recurrence_step(i, lower)
}

/// All derivatives at 0 up to `max_order`, closed forms then recurrence.
pub fn derivatives_at_zero(
    n: usize,
    tau: &UpperHalfPoint,
    max_order: usize,
    cfg: &SeriesConfig,
) -> Result<Vec<Complex64>> {
    FieldGenerators::from_tau(n, tau, cfg)?.derivatives(max_order)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gens(n: usize, y: f64) -> FieldGenerators<Complex64> {
        FieldGenerators::from_tau(
            n,
            &UpperHalfPoint::imaginary(y).unwrap(),
            &SeriesConfig::default(),
        )
        .unwrap()
    }

    fn rel(a: Complex64, b: f64) -> f64 {
        (a.re - b).abs() / b.abs()
    }

    #[test]
    fn parity_zeros() {
        assert_eq!(
            gens(2, 0.5).closed_form(1).unwrap(),
            Complex64::new(0.0, 0.0)
        );
        assert_eq!(
            gens(3, 1.0).closed_form(0).unwrap(),
            Complex64::new(0.0, 0.0)
        );
        assert_eq!(
            gens(4, 1.0).closed_form(5).unwrap(),
            Complex64::new(0.0, 0.0)
        );
    }

    // Expected values: i!·(Taylor coefficient) from power-series division of
    // the expanded rational form, evaluated in mpmath at 40 digits.
    #[test]
    fn closed_forms_match_series_oracle() {
        let g = gens(2, 0.5);
        assert!(rel(g.closed_form(0).unwrap(), -0.414_213_562_373_095_05) < 1e-14);
        assert!(rel(g.closed_form(2).unwrap(), 1.656_854_249_492_380_2) < 1e-9);
        assert!(rel(g.closed_form(4).unwrap(), 8.235_498_012_182_875) < 1e-9);
    }

    #[test]
    fn recurrence_matches_series_oracle() {
        let d = gens(2, 0.5).derivatives(6).unwrap();
        assert!(rel(d[6], 102.337_649_086_284_35) < 1e-8, "{}", d[6]);
        let d = gens(3, 1.0).derivatives(7).unwrap();
        assert!(rel(d[7], 82.674_820_696_660_19) < 1e-8, "{}", d[7]);
    }

    #[test]
    fn recurrence_rejects_parity_mismatch() {
        let g = gens(2, 0.5);
        let lower = g.derivatives(5).unwrap();
        assert!(matches!(
            g.recurrence_step(5, &lower),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            g.recurrence_step(2, &lower),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            g.recurrence_step(4, &lower[..3]),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn degree_one_is_identity() {
        let d = gens(1, 0.7).derivatives(9).unwrap();
        assert_eq!(d[1], Complex64::new(1.0, 0.0));
        assert!(d.iter().enumerate().all(|(i, v)| i == 1 || v.norm() == 0.0));
    }

    #[test]
    fn double_double_generators_agree_with_f64() {
        for (n, y) in [(2, 0.5), (5, 1.0), (7, 2.0)] {
            let a = gens(n, y);
            let b = FieldGenerators::imaginary_dd(n, y).unwrap();
            assert!(rel(a.sqrt_k, b.sqrt_k.to_f64()) < 1e-15);
            assert!(rel(a.sqrt_k_n, b.sqrt_k_n.to_f64()) < 1e-14);
            assert!(rel(a.omega_ratio, b.omega_ratio.to_f64()) < 1e-15);
        }
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), 10.0);
        assert_eq!(binomial(19, 9), 92378.0);
        assert_eq!(binomial(3, 4), 0.0);
    }
}
