//! Modified Bessel functions from their integral representations, used as an
//! independent reference for the confluent limits.

use num_complex::Complex64;
use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::numerics::{c, sin_pi, EvalResult, ZERO};
use crate::quad::{tanh_sinh, QuadConfig};

/// Exponent below which the integrands are treated as zero.
const LOG_CUTOFF: f64 = 745.0;

fn accurate(cfg: &QuadConfig) -> QuadConfig {
    QuadConfig { tol: cfg.tol.min(1e-13), nodes_per_unit: cfg.nodes_per_unit.max(64) }
}

/// ln cosh(x), finite for large real parts.
pub(crate) fn ln_cosh(x: Complex64) -> Complex64 {
    if x.re.abs() > 20.0 {
        let y = if x.re > 0.0 { x } else { -x };
        y - c(2f64.ln()) + (c(1.0) + (-2.0 * y).exp()).ln()
    } else {
        x.cosh().ln()
    }
}

/// Upper end S of [0, S] where Re(w) cosh S exceeds the cut-off by the growth of cosh(μs).
fn truncation(w: Complex64, mu: Complex64) -> Result<f64> {
    if w.re <= 0.0 {
        return Err(Error::DomainError(format!("Bessel K integral needs Re w > 0, got {w}")));
    }
    let mut s = 1.0f64;
    while w.re * s.cosh() - mu.re.abs() * s < LOG_CUTOFF + 40.0 {
        s += 0.5;
    }
    Ok(s)
}

/// K_μ(w) = ∫₀^∞ exp(-w cosh s) cosh(μs) ds, Re w > 0.
pub fn bessel_k(mu: Complex64, w: Complex64, cfg: &QuadConfig) -> Result<EvalResult> {
    let upper = truncation(w, mu)?;
    let f = |s: f64, _: f64, _: f64| -> Result<Complex64> {
        let e = -w * s.cosh() + ln_cosh(mu * s);
        Ok(if e.re < -LOG_CUTOFF { ZERO } else { e.exp() })
    };
    tanh_sinh(f, 0.0, upper, &accurate(cfg))
}

/// I_μ(x) = (1/π)∫₀^π e^{x cos s} cos(μs) ds - (sin πμ/π)∫₀^∞ e^{-x cosh s - μs} ds, x > 0.
pub fn bessel_i(mu: Complex64, x: f64, cfg: &QuadConfig) -> Result<EvalResult> {
    let cfg = accurate(cfg);
    let w = c(x);
    let arc = tanh_sinh(|s, _, _| Ok((mu * s).cos() * (x * s.cos()).exp()), 0.0, PI, &cfg)?;
    let upper = truncation(w, mu)?;
    let tail = tanh_sinh(
        |s, _, _| {
            let e = -w * s.cosh() - mu * s;
            Ok(if e.re < -LOG_CUTOFF { ZERO } else { e.exp() })
        },
        0.0,
        upper,
        &cfg,
    )?;
    let k = sin_pi(mu) / PI;
    Ok(EvalResult::new(
        arc.value / PI - k * tail.value,
        arc.abs_error_est / PI + k.norm() * tail.abs_error_est,
        arc.terms_used + tail.terms_used,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: Complex64, b: Complex64, rel: f64) -> bool {
        (a - b).norm() <= rel * b.norm()
    }

    #[test]
    fn half_order_closed_forms() {
        let cfg = QuadConfig::default();
        for x in [0.3, 1.0, 4.5] {
            let k = bessel_k(c(0.5), c(x), &cfg).unwrap().value;
            let i = bessel_i(c(0.5), x, &cfg).unwrap().value;
            assert!(close(k, c((PI / (2.0 * x)).sqrt() * (-x).exp()), 1e-13), "K at {x}: {k}");
            assert!(close(i, c((2.0 / (PI * x)).sqrt() * x.sinh()), 1e-13), "I at {x}: {i}");
        }
    }

    #[test]
    fn reference_values() {
        // 30-digit values of K_0.4(1), I_0.4(1), K_0.9(1), K_0.3(1+0.5i), I_{-0.7}(2.5), K_0.25(30)
        let cfg = QuadConfig::default();
        let k = |m: f64, w: Complex64| bessel_k(c(m), w, &cfg).unwrap().value;
        assert!(close(k(0.4, c(1.0)), c(0.446285939834668182186372660244), 1e-13));
        assert!(close(k(0.9, c(1.0)), c(0.563061183246158279407799581554), 1e-13));
        let kc = k(0.3, Complex64::new(1.0, 0.5));
        assert!(close(kc, Complex64::new(0.313743301619078306238186115083, -0.271102438291314536625542877386), 1e-13), "{kc}");
        assert!(close(k(0.25, c(30.0)), c(2.13466418330903548380233982663e-14), 1e-13));
        let i = |m: f64, x: f64| bessel_i(c(m), x, &cfg).unwrap().value;
        assert!(close(i(0.4, 1.0), c(1.01482092463989727208103663088), 1e-13));
        assert!(close(i(-0.7, 2.5), c(2.89862579865068103403882767614), 1e-13));
    }
}
