//! Critical points and critical values of `f_{n,τ}` inside the unit disk.

use nalgebra::{DMatrix, Schur};
use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::poly;

use super::ChebyshevBlaschke;

const INTERIOR_MARGIN: f64 = 1e-10;
const DEDUP_TOL: f64 = 1e-8;
const SCHUR_MAX_ITER: usize = 10_000;
pub const CRITICAL_VALUE_TOL: f64 = 1e-7;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CriticalValues {
    /// Critical points in the open disk, one per distinct critical value.
    pub points: Vec<Complex64>,
    pub values: Vec<Complex64>,
    /// `√k(nτ)`, the expected modulus of every value.
    pub expected: Complex64,
}

/// Roots of a polynomial (lowest degree first) as companion-matrix
/// eigenvalues, each polished by a few Newton steps.
pub fn polynomial_roots(coeffs: &[Complex64]) -> Result<Vec<Complex64>> {
    let norm: f64 = coeffs.iter().map(|c| c.norm()).sum();
    if norm == 0.0 {
        return Err(Error::RootFinding("zero polynomial".into()));
    }
    let mut c: Vec<Complex64> = coeffs.to_vec();
    while let Some(last) = c.last() {
        if last.norm() <= 64.0 * f64::EPSILON * norm {
            c.pop();
        } else {
            break;
        }
    }
    let mut zeros = 0;
    while c.first().is_some_and(|x| x.norm() == 0.0) {
        c.remove(0);
        zeros += 1;
    }
    let deg = c.len() - 1;
    let mut roots = vec![Complex64::new(0.0, 0.0); zeros];
    if deg == 0 {
        return Ok(roots);
    }
    let lead = c[deg];
    let companion = DMatrix::from_fn(deg, deg, |r, col| {
        if col == deg - 1 {
            -c[r] / lead
        } else if r == col + 1 {
            Complex64::new(1.0, 0.0)
        } else {
            Complex64::new(0.0, 0.0)
        }
    });
    let eig = Schur::try_new(companion, f64::EPSILON, SCHUR_MAX_ITER)
        .and_then(|s| s.eigenvalues())
        .ok_or_else(|| Error::RootFinding("Schur iteration did not converge".into()))?;

    let dc = poly::derivative(&c);
    for mut z in eig.iter().copied() {
        for _ in 0..8 {
            let p = poly::eval(&c, z);
            let dp = poly::eval(&dc, z);
            if dp.norm() == 0.0 {
                break;
            }
            let step = p / dp;
            z -= step;
            if step.norm() <= 1e-16 * z.norm().max(1.0) {
                break;
            }
        }
        roots.push(z);
    }
    Ok(roots)
}

/// Roots of an even or odd polynomial, found through `w = z²`. Shifted QR
/// stalls on the `±z` pairs otherwise.
fn symmetric_roots(coeffs: &[Complex64]) -> Result<Vec<Complex64>> {
    let norm: f64 = coeffs.iter().map(|c| c.norm()).sum();
    let odd = coeffs
        .iter()
        .step_by(2)
        .all(|c| c.norm() <= 64.0 * f64::EPSILON * norm);
    let start = usize::from(odd);
    let w: Vec<Complex64> = coeffs.iter().skip(start).step_by(2).copied().collect();
    let mut roots = Vec::new();
    if odd {
        roots.push(Complex64::new(0.0, 0.0));
    }
    for r in polynomial_roots(&w)? {
        let s = r.sqrt();
        roots.push(s);
        roots.push(-s);
    }
    Ok(roots)
}

impl ChebyshevBlaschke {
    /// Numerator of `f'` after clearing denominators: `P'Q - PQ'`.
    fn derivative_numerator(&self) -> Vec<Complex64> {
        let (p, q) = self.product_polynomials();
        poly::sub(
            &poly::mul(&poly::derivative(&p), &q),
            &poly::mul(&p, &poly::derivative(&q)),
        )
    }

    /// Distinct critical values of `f` in the open disk.
    ///
    /// For `n ≥ 3` there are two, `±√k(nτ)`. For `n = 2` the only critical
    /// point in the disk is 0 and the single value is `-√k(2τ)`.
    pub fn critical_values(&self) -> Result<CriticalValues> {
        let n = self.degree();
        if n == 1 {
            return Err(Error::NoCriticalValues);
        }
        let roots = symmetric_roots(&self.derivative_numerator())?;
        let mut points = Vec::new();
        let mut values: Vec<Complex64> = Vec::new();
        for z in roots
            .into_iter()
            .filter(|z| z.norm() < 1.0 - INTERIOR_MARGIN)
        {
            let w = self.eval_product(z)?;
            if values.iter().all(|v| (v - w).norm() > DEDUP_TOL) {
                values.push(w);
                points.push(z);
            }
        }
        let expected_count = if n == 2 { 1 } else { 2 };
        if values.len() != expected_count {
            return Err(Error::RootFinding(format!(
                "expected {expected_count} distinct critical values for n = {n}, found {}",
                values.len()
            )));
        }
        let expected = self.generators().sqrt_k_n;
        for v in &values {
            let dev = (v - expected).norm().min((v + expected).norm());
            if dev > CRITICAL_VALUE_TOL {
                return Err(Error::Postcondition(format!(
                    "critical value {v} is {dev:e} away from ±√k(nτ) = ±{expected}"
                )));
            }
        }
        // Deterministic order: by real part.
        let mut pairs: Vec<_> = points.into_iter().zip(values).collect();
        pairs.sort_by(|a, b| a.1.re.total_cmp(&b.1.re));
        let (points, values) = pairs.into_iter().unzip();
        Ok(CriticalValues {
            points,
            values,
            expected,
        })
    }
}
