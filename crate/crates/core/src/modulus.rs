//! Poincaré geodesics and the conformal moduli of annuli, Grötzsch rings and
//! the disk slit along a geodesic.
//!
//! Moduli use the convention `M(A_r) = (1/2π) log(1/r)` for `r < |z| < 1`.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::Serialize;

use crate::blaschke::ChebyshevBlaschke;
use crate::error::{Error, Result};

/// Allowed gap between [`dessin_size`] and `Im τ / 4`.
pub const DESSIN_SIZE_TOL: f64 = 1e-8;

const AGM_TOL: f64 = 1e-15;

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct GeodesicSegment {
    a: Complex64,
    b: Complex64,
}

impl GeodesicSegment {
    pub fn new(a: Complex64, b: Complex64) -> Result<Self> {
        check_disk(a)?;
        check_disk(b)?;
        if a == b {
            return Err(Error::domain("geodesic endpoints coincide"));
        }
        Ok(GeodesicSegment { a, b })
    }

    pub fn a(&self) -> Complex64 {
        self.a
    }

    pub fn b(&self) -> Complex64 {
        self.b
    }

    /// Pseudo-hyperbolic distance `|(b - a)/(1 - ā b)|`.
    pub fn delta(&self) -> f64 {
        pseudo_hyperbolic(self.a, self.b)
    }

    pub fn length(&self) -> f64 {
        let d = self.delta();
        ((1.0 + d) / (1.0 - d)).ln()
    }
}

fn check_disk(z: Complex64) -> Result<()> {
    if !(z.norm() < 1.0) {
        return Err(Error::domain(format!("{z} is not in the open unit disk")));
    }
    Ok(())
}

fn pseudo_hyperbolic(a: Complex64, b: Complex64) -> f64 {
    ((b - a) / (Complex64::new(1.0, 0.0) - a.conj() * b)).norm()
}

/// Hyperbolic distance for the curvature -1 metric.
pub fn poincare_distance(a: Complex64, b: Complex64) -> Result<f64> {
    check_disk(a)?;
    check_disk(b)?;
    let d = pseudo_hyperbolic(a, b);
    Ok(((1.0 + d) / (1.0 - d)).ln())
}

/// Disk automorphism `e^{iθ}(z - a)/(1 - ā z)`.
pub fn disk_automorphism(a: Complex64, theta: f64, z: Complex64) -> Result<Complex64> {
    check_disk(a)?;
    let den = Complex64::new(1.0, 0.0) - a.conj() * z;
    if den.norm() == 0.0 {
        return Err(Error::Pole(format!(
            "automorphism with a = {a} has a pole at {z}"
        )));
    }
    Ok(Complex64::from_polar(1.0, theta) * (z - a) / den)
}

/// `(1/2π) log(1/r)`.
pub fn annulus_modulus(r: f64) -> Result<f64> {
    if !(r > 0.0 && r < 1.0) {
        return Err(Error::domain(format!(
            "annulus radius {r} is not in (0, 1)"
        )));
    }
    Ok(-r.ln() / (2.0 * PI))
}

/// Arithmetic-geometric mean of two positive reals.
pub fn agm(a: f64, b: f64) -> Result<f64> {
    if !(a > 0.0 && b > 0.0) || !a.is_finite() || !b.is_finite() {
        return Err(Error::domain(format!(
            "agm needs positive finite arguments, got {a}, {b}"
        )));
    }
    let (mut a, mut b) = (a, b);
    for _ in 0..64 {
        if (a - b).abs() <= AGM_TOL * a {
            return Ok(0.5 * (a + b));
        }
        let next = 0.5 * (a + b);
        b = (a * b).sqrt();
        a = next;
    }
    Ok(a)
}

/// Complete elliptic integral of the first kind, `K(k) = π / (2·agm(1, k'))`.
pub fn elliptic_k(k: f64) -> Result<f64> {
    if !(0.0..1.0).contains(&k) {
        return Err(Error::domain(format!(
            "elliptic modulus {k} is not in [0, 1)"
        )));
    }
    Ok(PI / (2.0 * agm(1.0, complement(k))?))
}

fn complement(k: f64) -> f64 {
    ((1.0 - k) * (1.0 + k)).sqrt()
}

/// Modulus of the disk slit along `[0, t]`, `K(√(1 - t²)) / (4K(t))`.
///
/// Written as `agm(1, t') / (4·agm(1, t))` so neither integral is formed
/// near its logarithmic singularity.
pub fn grotzsch_modulus(t: f64) -> Result<f64> {
    if !(t > 0.0 && t < 1.0) {
        return Err(Error::domain(format!("slit length {t} is not in (0, 1)")));
    }
    Ok(agm(1.0, complement(t))? / (4.0 * agm(1.0, t)?))
}

/// A disk automorphism moves `a` to 0 and the geodesic onto the slit
/// `[0, δ]`.
pub fn disk_minus_geodesic_modulus(seg: &GeodesicSegment) -> Result<f64> {
    grotzsch_modulus(seg.delta())
}

/// Modulus of the `n`-fold cyclic cover of a ring of modulus `m`.
pub fn covering_modulus(m: f64, n: usize) -> Result<f64> {
    if !(m > 0.0) || !m.is_finite() {
        return Err(Error::domain(format!("modulus {m} must be positive")));
    }
    if n == 0 {
        return Err(Error::domain("covering degree must be positive"));
    }
    Ok(m / n as f64)
}

/// The geodesic between the critical values `±√k(nτ)`.
pub fn critical_segment(cb: &ChebyshevBlaschke) -> Result<GeodesicSegment> {
    let s = cb.generators().sqrt_k_n;
    GeodesicSegment::new(-s, s)
}

/// Modulus of `𝔻 - f⁻¹(l)` for the geodesic `l` between the critical
/// values, that is `M(𝔻 - l)/n`. Fails unless it equals `Im τ / 4`.
pub fn dessin_size(cb: &ChebyshevBlaschke) -> Result<f64> {
    let n = cb.degree();
    if n < 2 {
        return Err(Error::domain("dessin size needs degree at least 2"));
    }
    let tau = cb.tau();
    if !tau.is_imaginary() {
        return Err(Error::domain("dessin size needs τ on the imaginary axis"));
    }
    let m = disk_minus_geodesic_modulus(&critical_segment(cb)?)?;
    let size = covering_modulus(m, n)?;
    let expected = tau.im() / 4.0;
    if (size - expected).abs() > DESSIN_SIZE_TOL {
        return Err(Error::Postcondition(format!(
            "dessin size {size} differs from Im τ/4 = {expected}"
        )));
    }
    Ok(size)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::theta::{SeriesConfig, UpperHalfPoint};

    fn r(x: f64) -> Complex64 {
        Complex64::new(x, 0.0)
    }

    #[test]
    fn distances() {
        assert_eq!(poincare_distance(r(0.0), r(0.0)), Ok(0.0));
        assert!(
            (poincare_distance(r(0.0), r(0.5)).unwrap() - 1.098_612_288_668_109_7).abs() < 1e-15
        );
        assert_eq!(poincare_distance(r(0.3), r(0.3)), Ok(0.0));
        assert!(poincare_distance(r(1.0), r(0.0)).is_err());
    }

    #[test]
    fn annulus() {
        assert!((annulus_modulus((-2.0 * PI).exp()).unwrap() - 1.0).abs() < 1e-15);
        assert!((annulus_modulus((-PI).exp()).unwrap() - 0.5).abs() < 1e-15);
        let near = annulus_modulus(1.0 - 1e-9).unwrap();
        assert!(near > 0.0 && near < 1e-9);
        assert!(annulus_modulus(0.0).is_err() && annulus_modulus(1.0).is_err());
    }

    #[test]
    fn grotzsch_anchors() {
        assert!((grotzsch_modulus(0.5f64.sqrt()).unwrap() - 0.25).abs() < 1e-15);
        assert!((grotzsch_modulus(3.0 - 2.0 * 2f64.sqrt()).unwrap() - 0.5).abs() < 1e-14);
        // AGM oracle at 40 digits
        assert!((grotzsch_modulus(0.3).unwrap() - 0.408_534_496_332_252_6).abs() < 1e-15);
    }

    #[test]
    fn grotzsch_strictly_decreasing() {
        let vals: Vec<f64> = (1..=100)
            .map(|i| grotzsch_modulus(i as f64 / 101.0).unwrap())
            .collect();
        assert!(vals.windows(2).all(|w| w[1] < w[0]));
    }

    #[test]
    fn elliptic_k_values() {
        assert!((elliptic_k(0.0).unwrap() - PI / 2.0).abs() < 1e-15);
        // K(1/√2) = Γ(1/4)²/(4√π)
        assert!((elliptic_k(0.5f64.sqrt()).unwrap() - 1.854_074_677_301_372).abs() < 1e-14);
    }

    #[test]
    fn geodesic_moduli() {
        let a = 0.414_213_562_4;
        let seg = GeodesicSegment::new(r(-a), r(a)).unwrap();
        assert!((disk_minus_geodesic_modulus(&seg).unwrap() - 0.25).abs() < 1e-9);
        let seg = GeodesicSegment::new(r(0.0), r(0.3)).unwrap();
        assert_eq!(disk_minus_geodesic_modulus(&seg), grotzsch_modulus(0.3));
        let a = 0.086_427_233_725_889_79;
        let seg = GeodesicSegment::new(r(-a), r(a)).unwrap();
        assert!((disk_minus_geodesic_modulus(&seg).unwrap() - 0.5).abs() < 1e-8);
        assert!(GeodesicSegment::new(r(0.2), r(0.2)).is_err());
    }

    #[test]
    fn coverings() {
        assert_eq!(covering_modulus(1.0, 4), Ok(0.25));
        let m = annulus_modulus((-2.0 * PI).exp()).unwrap();
        assert!((covering_modulus(m, 2).unwrap() - 0.5).abs() < 1e-15);
        assert_eq!(covering_modulus(0.7, 1), Ok(0.7));
        assert!(covering_modulus(0.7, 0).is_err());
    }

    #[test]
    fn dessin_sizes() {
        let cfg = SeriesConfig::default();
        let cb =
            |n, y| ChebyshevBlaschke::build(n, UpperHalfPoint::imaginary(y).unwrap(), cfg).unwrap();
        assert!((dessin_size(&cb(2, 1.0)).unwrap() - 0.25).abs() < 1e-8);
        assert!((dessin_size(&cb(2, 0.5)).unwrap() - 0.125).abs() < 1e-8);
        assert!(dessin_size(&cb(1, 1.0)).is_err());
    }

    #[test]
    fn automorphism_moves_point_to_origin() {
        let a = Complex64::new(0.3, -0.2);
        assert!(disk_automorphism(a, 0.4, a).unwrap().norm() < 1e-16);
        let z = Complex64::from_polar(1.0, 1.1);
        assert!((disk_automorphism(a, 0.4, z).unwrap().norm() - 1.0).abs() < 1e-15);
    }
}
