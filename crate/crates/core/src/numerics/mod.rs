//! Complex-arithmetic foundation: gamma functions and the Gauss
//! hypergeometric function with analytic continuation.

mod gamma;
mod hyp2f1;

pub use gamma::{gamma, gamma_complex, gamma_ratio, ln_gamma, pochhammer, rgamma};
pub use hyp2f1::{hyp2f1, hyp2f1_derivs, hyp2f1_reg};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

/// Complex scalar used for every argument, parameter and result.
pub type ComplexValue = Complex64;

pub(crate) const I: Complex64 = Complex64 { re: 0.0, im: 1.0 };
pub(crate) const ONE: Complex64 = Complex64 { re: 1.0, im: 0.0 };
pub(crate) const ZERO: Complex64 = Complex64 { re: 0.0, im: 0.0 };

/// A computed value with an absolute error estimate and a work counter
/// (series terms or quadrature nodes).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EvalResult {
    pub value: Complex64,
    pub abs_error_est: f64,
    pub terms_used: usize,
}

impl EvalResult {
    pub fn new(value: Complex64, abs_error_est: f64, terms_used: usize) -> Self {
        Self {
            value,
            abs_error_est: abs_error_est.abs(),
            terms_used,
        }
    }

    pub fn exact(value: Complex64) -> Self {
        Self::new(value, 0.0, 0)
    }

    /// Multiply by a constant, scaling the error estimate with it.
    pub fn scale(self, k: Complex64) -> Self {
        Self::new(self.value * k, self.abs_error_est * k.norm(), self.terms_used)
    }

    pub fn is_finite(&self) -> bool {
        self.value.re.is_finite() && self.value.im.is_finite()
    }
}

/// Returns `Some(n)` when `w` lies within `tol` of the nonpositive integer `-n`.
pub fn nonpositive_integer(w: Complex64, tol: f64) -> Option<u64> {
    if w.im.abs() > tol || w.re > tol {
        return None;
    }
    let r = w.re.round();
    if (w.re - r).abs() <= tol && r <= 0.0 {
        Some((-r) as u64)
    } else {
        None
    }
}

/// Distance of `w` from the nearest integer (complex distance).
pub fn integer_distance(w: Complex64) -> f64 {
    Complex64::new(w.re - w.re.round(), w.im).norm()
}

pub(crate) fn c(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

pub(crate) fn finite(z: Complex64) -> bool {
    z.re.is_finite() && z.im.is_finite()
}

/// `exp(p * ln(base))` with the principal logarithm.
pub(crate) fn cpow(base: Complex64, p: Complex64) -> Complex64 {
    if base == ZERO {
        return if p.re > 0.0 { ZERO } else { Complex64::new(f64::INFINITY, 0.0) };
    }
    (p * base.ln()).exp()
}

/// `sin(pi z)` with exact zeros at integers.
pub fn sin_pi(z: Complex64) -> Complex64 {
    let n = z.re.round();
    let x = z.re - n;
    let s = Complex64::new(x, z.im) * std::f64::consts::PI;
    let v = s.sin();
    if (n as i64).rem_euclid(2) == 1 {
        -v
    } else {
        v
    }
}

/// `cos(pi z)` with exact zeros at half-integers.
pub fn cos_pi(z: Complex64) -> Complex64 {
    sin_pi(z + c(0.5))
}

/// `exp(i pi z)`.
pub fn exp_i_pi(z: Complex64) -> Complex64 {
    (I * std::f64::consts::PI * z).exp()
}
