//! Dense polynomials stored lowest degree first.

use crate::scalar::Scalar;

pub fn mul<T: Scalar>(a: &[T], b: &[T]) -> Vec<T> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![T::zero(); a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = out[i + j] + x * y;
        }
    }
    out
}

pub fn sub<T: Scalar>(a: &[T], b: &[T]) -> Vec<T> {
    let len = a.len().max(b.len());
    (0..len)
        .map(|i| {
            let x = a.get(i).copied().unwrap_or_else(T::zero);
            let y = b.get(i).copied().unwrap_or_else(T::zero);
            x - y
        })
        .collect()
}

pub fn derivative<T: Scalar>(a: &[T]) -> Vec<T> {
    a.iter()
        .enumerate()
        .skip(1)
        .map(|(i, &c)| c * T::from_f64(i as f64))
        .collect()
}

pub fn eval<T: Scalar>(a: &[T], x: T) -> T {
    a.iter().rev().fold(T::zero(), |acc, &c| acc * x + c)
}

/// Power-series coefficients of `num / den` up to and including `order`.
/// Requires `den[0] != 0`.
pub fn series_quotient<T: Scalar>(num: &[T], den: &[T], order: usize) -> Vec<T> {
    let d0 = den[0];
    let mut out: Vec<T> = Vec::with_capacity(order + 1);
    for d in 0..=order {
        let mut acc = num.get(d).copied().unwrap_or_else(T::zero);
        for j in 1..den.len().min(d + 1) {
            acc = acc - den[j] * out[d - j];
        }
        out.push(acc / d0);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex64;

    fn c(v: &[f64]) -> Vec<Complex64> {
        v.iter().map(|&x| Complex64::new(x, 0.0)).collect()
    }

    #[test]
    fn geometric_series() {
        // 1/(1-z) = 1 + z + z² + …
        let s = series_quotient(&c(&[1.0]), &c(&[1.0, -1.0]), 5);
        assert_eq!(s, c(&[1.0; 6]));
    }

    #[test]
    fn product_rule() {
        let p = c(&[1.0, 2.0, 3.0]);
        let q = c(&[0.5, -1.0]);
        let lhs = derivative(&mul(&p, &q));
        let rhs = sub(
            &mul(&derivative(&p), &q),
            &mul(&p, &derivative(&q))
                .iter()
                .map(|&x| -x)
                .collect::<Vec<_>>(),
        );
        assert_eq!(lhs, rhs);
        assert_eq!(
            eval(&p, Complex64::new(2.0, 0.0)),
            Complex64::new(17.0, 0.0)
        );
    }
}
