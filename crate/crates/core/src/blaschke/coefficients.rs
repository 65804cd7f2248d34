//! The coefficients `S_{n,j}` of the expanded rational form, three ways:
//! elementary symmetric polynomials of the squared zeros, a linear system
//! fed with derivatives at 0, and the same system fed with Taylor
//! coefficients from power-series division.

use num_complex::Complex64;

use crate::dd::Dd;
use crate::error::{Error, Result};
use crate::poly;
use crate::scalar::Scalar;
use crate::theta::{SeriesConfig, UpperHalfPoint};

use super::derivatives::FieldGenerators;
use super::ChebyshevBlaschke;

/// Pivots below this (after row equilibration) mean the system is singular.
pub const PIVOT_FLOOR: f64 = 1e-12;

/// `e_1, …, e_m` of the given values.
pub fn elementary_symmetric<T: Scalar>(values: &[T]) -> Vec<T> {
    let m = values.len();
    let mut e = vec![T::zero(); m + 1];
    e[0] = T::one();
    for &v in values {
        for j in (1..=m).rev() {
            e[j] = e[j] + e[j - 1] * v;
        }
    }
    e.split_off(1)
}

/// Solve `a·x = rhs` by Gaussian elimination with row equilibration and
/// partial pivoting.
pub fn solve<T: Scalar>(mut a: Vec<Vec<T>>, mut rhs: Vec<T>) -> Result<Vec<T>> {
    let m = rhs.len();
    for (row, b) in a.iter_mut().zip(rhs.iter_mut()) {
        let scale = row.iter().map(|x| x.magnitude()).fold(0.0, f64::max);
        if scale == 0.0 {
            return Err(Error::SingularSystem {
                pivot: 0.0,
                threshold: PIVOT_FLOOR,
            });
        }
        let s = T::from_f64(1.0 / scale);
        for x in row.iter_mut() {
            *x = *x * s;
        }
        *b = *b * s;
    }
    for col in 0..m {
        let (best, mag) = (col..m)
            .map(|r| (r, a[r][col].magnitude()))
            .fold((col, -1.0), |acc, x| if x.1 > acc.1 { x } else { acc });
        if mag < PIVOT_FLOOR {
            return Err(Error::SingularSystem {
                pivot: mag,
                threshold: PIVOT_FLOOR,
            });
        }
        a.swap(col, best);
        rhs.swap(col, best);
        for r in col + 1..m {
            let factor = a[r][col] / a[col][col];
            let (top, rest) = a.split_at_mut(r);
            for (x, &p) in rest[0][col..].iter_mut().zip(&top[col][col..]) {
                *x = *x - factor * p;
            }
            let t = rhs[col];
            rhs[r] = rhs[r] - factor * t;
        }
    }
    let mut x = vec![T::zero(); m];
    for r in (0..m).rev() {
        let mut acc = rhs[r];
        for c in r + 1..m {
            acc = acc - a[r][c] * x[c];
        }
        x[r] = acc / a[r][r];
    }
    Ok(x)
}

/// Recover `S_{n,1..⌊n/2⌋}` from Taylor coefficients `c_0 … c_{n+2⌊n/2⌋}` of
/// `f_{n,τ}`.
///
/// Multiplying through by the denominator `1 + Σ(-1)ʲ S_j z^{2j}` leaves a
/// polynomial of degree `n`, so for every degree `d > n`
/// `Σ_{j=1}^{m} (-1)ʲ S_j c_{d-2j} = -c_d`. Degrees `n+2, n+4, …, n+2m`
/// give exactly `m` equations.
pub fn coefficients_from_taylor<T: Scalar>(n: usize, taylor: &[T]) -> Result<Vec<T>> {
    let m = n / 2;
    if m == 0 {
        return Ok(Vec::new());
    }
    let top = n + 2 * m;
    if taylor.len() <= top {
        return Err(Error::domain(format!(
            "need Taylor coefficients up to degree {top}, got {}",
            taylor.len().saturating_sub(1)
        )));
    }
    let mut a = Vec::with_capacity(m);
    let mut rhs = Vec::with_capacity(m);
    for row in 0..m {
        let d = n + 2 + 2 * row;
        a.push(
            (1..=m)
                .map(|j| {
                    let c = taylor[d - 2 * j];
                    if j % 2 == 0 {
                        c
                    } else {
                        -c
                    }
                })
                .collect(),
        );
        rhs.push(-taylor[d]);
    }
    solve(a, rhs)
}

/// `S_{n,j}` from derivatives at 0 (closed forms plus the ODE recurrence).
///
/// On the imaginary axis the whole route runs in double-double: the Taylor
/// coefficients above degree `n` arise from heavy cancellation in the
/// recurrence, roughly a factor `1/k(τ)` per step.
pub fn coefficients_from_derivatives(
    n: usize,
    tau: &UpperHalfPoint,
    cfg: &SeriesConfig,
) -> Result<Vec<Complex64>> {
    if n == 0 {
        return Err(Error::domain("degree must be positive"));
    }
    if n == 1 {
        return Ok(Vec::new());
    }
    let top = n + 2 * (n / 2);
    if tau.is_imaginary() {
        let g = FieldGenerators::<Dd>::imaginary_dd(n, tau.im())?;
        let taylor = g.taylor(top)?;
        let s = coefficients_from_taylor(n, &taylor)?;
        Ok(s.into_iter().map(|x| x.to_complex()).collect())
    } else {
        let g = FieldGenerators::from_tau(n, tau, cfg)?;
        coefficients_from_taylor(n, &g.taylor(top)?)
    }
}

/// Taylor coefficients of `f_{n,τ}` at 0 up to `order`, by power-series
/// division of the expanded rational form.
pub fn taylor_coefficients(cb: &ChebyshevBlaschke, order: usize) -> Vec<Complex64> {
    let (num, den) = cb.expanded_polynomials();
    poly::series_quotient(&num, &den, order)
}

/// `S_{n,j}` recovered from the series-division Taylor coefficients.
pub fn coefficients_from_series(cb: &ChebyshevBlaschke) -> Result<Vec<Complex64>> {
    let n = cb.degree();
    if n == 1 {
        return Ok(Vec::new());
    }
    let taylor = taylor_coefficients(cb, n + 2 * (n / 2));
    coefficients_from_taylor(n, &taylor)
}
