use num_complex::Complex64;
use std::f64::consts::PI;

use super::{c, finite, nonpositive_integer, sin_pi, EvalResult, ONE, ZERO};
use crate::error::{Error, Result};

// Lanczos approximation, g = 7, nine coefficients.
const LANCZOS_G: f64 = 7.0;
const LANCZOS: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

const POLE_TOL: f64 = 1e-12;
const LN_SQRT_2PI: f64 = 0.918_938_533_204_672_8;

fn lanczos_sum(zm1: Complex64) -> Complex64 {
    let mut a = c(LANCZOS[0]);
    for (k, &p) in LANCZOS.iter().enumerate().skip(1) {
        a += c(p) / (zm1 + c(k as f64));
    }
    a
}

/// ln Γ(w) for Re w >= 1/2 (principal logarithm of the Lanczos form).
fn ln_gamma_right(w: Complex64) -> Complex64 {
    let zm1 = w - ONE;
    let t = zm1 + c(LANCZOS_G + 0.5);
    c(LN_SQRT_2PI) + (zm1 + c(0.5)) * t.ln() - t + lanczos_sum(zm1).ln()
}

fn gamma_right(w: Complex64) -> Complex64 {
    // (n-1)! is exact in double precision up to n = 23
    if w.im == 0.0 && w.re.fract() == 0.0 && (1.0..=23.0).contains(&w.re) {
        return c((2..w.re as u32).map(f64::from).product());
    }
    if w.im == 0.0 && w.re < 30.0 {
        // real argument: direct form keeps the last bits
        let zm1 = w.re - 1.0;
        let t = zm1 + LANCZOS_G + 0.5;
        let a = lanczos_sum(c(zm1)).re;
        return c((2.0 * PI).sqrt() * t.powf(zm1 + 0.5) * (-t).exp() * a);
    }
    ln_gamma_right(w).exp()
}

/// Γ(w) for complex `w`. Poles at nonpositive integers are reported as errors.
pub fn gamma(w: Complex64) -> Result<Complex64> {
    if nonpositive_integer(w, POLE_TOL).is_some() {
        return Err(Error::PoleAtNonpositiveInteger(w));
    }
    if w.re < 0.5 {
        // reflection
        let s = sin_pi(w);
        Ok(c(PI) / (s * gamma_right(ONE - w)))
    } else {
        Ok(gamma_right(w))
    }
}

/// Γ(w) with an error estimate.
pub fn gamma_complex(w: Complex64) -> Result<EvalResult> {
    let v = gamma(w)?;
    // relative accuracy of the Lanczos form degrades with the size of the exponent
    let rel = 2e-15 * (1.0 + w.norm().max(1.0).ln());
    Ok(EvalResult::new(v, rel * v.norm(), LANCZOS.len()))
}

/// 1/Γ(w): entire, exactly zero at nonpositive integers.
pub fn rgamma(w: Complex64) -> Complex64 {
    if nonpositive_integer(w, POLE_TOL).is_some() {
        return ZERO;
    }
    if w.re < 0.5 {
        sin_pi(w) * gamma_right(ONE - w) / c(PI)
    } else {
        ONE / gamma_right(w)
    }
}

/// A logarithm of Γ(w) (not necessarily the principal branch of ln Γ;
/// only `exp` of sums and differences is meaningful).
pub fn ln_gamma(w: Complex64) -> Result<Complex64> {
    if nonpositive_integer(w, POLE_TOL).is_some() {
        return Err(Error::PoleAtNonpositiveInteger(w));
    }
    if w.re < 0.5 {
        Ok(c(PI.ln()) - sin_pi(w).ln() - ln_gamma_right(ONE - w))
    } else {
        Ok(ln_gamma_right(w))
    }
}

/// Π Γ(num) / Π Γ(den). A pole in a denominator gives zero; a pole in a
/// numerator (with no cancelling denominator pole) is an error.
pub fn gamma_ratio(num: &[Complex64], den: &[Complex64]) -> Result<Complex64> {
    if let Some(w) = num.iter().find(|w| nonpositive_integer(**w, POLE_TOL).is_some()) {
        return Err(Error::PoleAtNonpositiveInteger(*w));
    }
    if den.iter().any(|w| nonpositive_integer(*w, POLE_TOL).is_some()) {
        return Ok(ZERO);
    }
    let small = num.iter().chain(den).all(|w| w.norm() < 30.0);
    if small {
        let mut v = ONE;
        for w in num {
            v *= gamma(*w)?;
        }
        for w in den {
            v *= rgamma(*w);
        }
        if finite(v) && v.norm() > 1e-280 {
            return Ok(v);
        }
    }
    let mut s = ZERO;
    for w in num {
        s += ln_gamma(*w)?;
    }
    for w in den {
        s -= ln_gamma(*w)?;
    }
    Ok(s.exp())
}

/// Rising factorial (a)_n.
pub fn pochhammer(a: Complex64, n: usize) -> Complex64 {
    (0..n).fold(ONE, |acc, k| acc * (a + c(k as f64)))
}
