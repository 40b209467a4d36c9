//! Loop-contour quadrature for fractional operators.
//!
//! A loop starts on a ray leaving the branch point `center` with phase
//! `start_phase`, circles the branch point counter-clockwise and returns on
//! the same ray with the phase raised by 2π. For a loop integrand
//! (ζ - c)^{-λ-1} h(ζ) the two rays combine into one line integral.

mod rules;

pub use rules::{exp_sinh, tanh_sinh, QuadConfig, QUAD_NODES_ENV};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::numerics::{exp_i_pi, gamma, integer_distance, nonpositive_integer, rgamma, EvalResult, I, ONE};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum LoopKind {
    /// Rays run from the branch point to infinity.
    WeylLoop,
    /// Rays end at the finite point `endpoint`.
    RiemannLoop { endpoint: Complex64 },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ContourSpec {
    pub kind: LoopKind,
    /// Branch point encircled by the loop.
    pub center: Complex64,
    /// Phase of ζ - c on the incoming ray; the outgoing ray carries
    /// `start_phase + 2π`.
    pub start_phase: f64,
    /// Radius of the circle around the branch point; `None` picks half the
    /// distance to the nearest entry of `singularities` (and at most half
    /// the ray length).
    pub circle_radius: Option<f64>,
    /// Other singular points of the integrand, used for the automatic radius.
    pub singularities: Vec<Complex64>,
    /// Replace the loop by one line integral from the branch point
    /// (requires Re λ < 0).
    pub collapse: bool,
    pub config: QuadConfig,
}

impl ContourSpec {
    pub fn weyl(center: Complex64, start_phase: f64) -> Self {
        Self {
            kind: LoopKind::WeylLoop,
            center,
            start_phase,
            circle_radius: None,
            singularities: Vec::new(),
            collapse: false,
            config: QuadConfig::default(),
        }
    }

    pub fn riemann(center: Complex64, endpoint: Complex64, start_phase: f64) -> Self {
        Self { kind: LoopKind::RiemannLoop { endpoint }, ..Self::weyl(center, start_phase) }
    }

    pub fn with_singularities(mut self, s: impl IntoIterator<Item = Complex64>) -> Self {
        self.singularities.extend(s);
        self
    }

    pub fn with_collapse(mut self, collapse: bool) -> Self {
        self.collapse = collapse;
        self
    }

    pub fn with_radius(mut self, r: f64) -> Self {
        self.circle_radius = Some(r);
        self
    }

    pub fn with_config(mut self, cfg: QuadConfig) -> Self {
        self.config = cfg;
        self
    }

    fn ray_length(&self) -> Result<f64> {
        match self.kind {
            LoopKind::WeylLoop => Ok(f64::INFINITY),
            LoopKind::RiemannLoop { endpoint } => {
                let d = endpoint - self.center;
                let r = d.norm();
                let dir = Complex64::from_polar(1.0, self.start_phase);
                if r == 0.0 || (d / r - dir).norm() > 1e-8 {
                    return Err(Error::InvalidInput(format!(
                        "Riemann endpoint {endpoint} is not on the ray of phase {} from {}",
                        self.start_phase, self.center
                    )));
                }
                Ok(r)
            }
        }
    }

    fn radius(&self, ray: f64) -> Result<f64> {
        let nearest = self
            .singularities
            .iter()
            .map(|s| (s - self.center).norm())
            .fold(f64::INFINITY, f64::min);
        let auto = (0.5 * nearest).min(0.5 * ray).min(1.0);
        let r = self.circle_radius.unwrap_or(auto);
        if !(r > 0.0 && r.is_finite()) {
            return Err(Error::InvalidInput(format!("circle radius {r} is not positive")));
        }
        if r >= ray || r >= nearest {
            return Err(Error::InvalidInput(format!(
                "circle radius {r} must be below the ray length {ray} and the nearest singularity {nearest}"
            )));
        }
        Ok(r)
    }
}

/// (1/2πi) e^{iπλ} Γ(λ+1), the normalisation of the loop operators.
pub fn weyl_prefactor(lambda: Complex64) -> Result<Complex64> {
    Ok(exp_i_pi(lambda) * gamma(lambda + ONE)? / (I * 2.0 * PI))
}

/// A node of the loop: the offset ζ - c and, for Riemann loops, the
/// distance `to_end` = endpoint - ζ without cancellation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LoopPoint {
    pub offset: Complex64,
    pub to_end: Option<Complex64>,
}

/// Line integral ∫ ρ^{-λ-1} h(c + ρ e^{iα}) dρ from `from` to the ray end.
fn ray_integral<F>(h: &F, spec: &ContourSpec, lambda: Complex64, from: f64, to: f64) -> Result<EvalResult>
where
    F: Fn(LoopPoint) -> Result<Complex64>,
{
    let dir = Complex64::from_polar(1.0, spec.start_phase);
    let p = lambda + ONE;
    if to.is_infinite() {
        let g = |d: f64| -> Result<Complex64> {
            let rho = from + d;
            Ok((-p * rho.ln()).exp() * h(LoopPoint { offset: dir * rho, to_end: None })?)
        };
        exp_sinh(g, &spec.config)
    } else {
        let g = |da: f64, db: f64| -> Result<Complex64> {
            let rho = if da <= db { from + da } else { to - db };
            let pt = LoopPoint { offset: dir * rho, to_end: Some(dir * db) };
            Ok((-p * rho.ln()).exp() * h(pt)?)
        };
        tanh_sinh(|_, da, db| g(da, db), from, to, &spec.config)
    }
}

/// Loop integral with the operator normalisation:
/// (1/2πi) e^{iπλ} Γ(λ+1) ∮ (ζ - c)^{-λ-1} h(ζ) dζ.
/// `h` receives the offset ζ - c.
pub fn loop_integral<F>(h: F, spec: &ContourSpec, lambda: Complex64) -> Result<EvalResult>
where
    F: Fn(Complex64) -> Result<Complex64>,
{
    loop_integral_at(|pt: LoopPoint| h(pt.offset), spec, lambda)
}

/// As [`loop_integral`], with the integrand seeing the full [`LoopPoint`].
pub fn loop_integral_at<F>(h: F, spec: &ContourSpec, lambda: Complex64) -> Result<EvalResult>
where
    F: Fn(LoopPoint) -> Result<Complex64>,
{
    let ray = spec.ray_length()?;
    let alpha = spec.start_phase;
    // W(λ)(e^{-2πiλ} - 1) e^{-iλα} = e^{-iλα}/Γ(-λ)
    let ray_factor = (-I * lambda * alpha).exp() * rgamma(-lambda);
    let neg_integer = nonpositive_integer(lambda, 1e-14).is_some() && lambda.norm() > 0.5;
    if spec.collapse || neg_integer {
        if lambda.re >= 0.0 {
            return Err(Error::CollapseInvalid(format!("collapse needs Re λ < 0, got λ = {lambda}")));
        }
        let line = ray_integral(&h, spec, lambda, 0.0, ray)?;
        return Ok(line.scale(ray_factor));
    }
    let eps = spec.radius(ray)?;
    let p = lambda + ONE;
    // circle: i ε^{1-p} ∫_α^{α+2π} e^{-iλφ} h(c + ε e^{iφ}) dφ
    let end = match spec.kind {
        LoopKind::WeylLoop => None,
        LoopKind::RiemannLoop { endpoint } => Some(endpoint - spec.center),
    };
    let circle_fn = |phi: f64| -> Result<Complex64> {
        let off = Complex64::from_polar(eps, phi);
        Ok((-I * lambda * phi).exp() * h(LoopPoint { offset: off, to_end: end.map(|e| e - off) })?)
    };
    let circ = tanh_sinh(|phi, _, _| circle_fn(phi), alpha, alpha + 2.0 * PI, &spec.config)?;
    let circ_k = I * (-(p - ONE) * eps.ln()).exp() * weyl_prefactor(lambda)?;
    let mut total = circ.scale(circ_k);
    let on_integer = integer_distance(lambda) < 1e-14;
    if !on_integer {
        let line = ray_integral(&h, spec, lambda, eps, ray)?.scale(ray_factor);
        total = EvalResult::new(
            total.value + line.value,
            total.abs_error_est + line.abs_error_est,
            total.terms_used + line.terms_used,
        );
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::{c, ZERO};

    #[test]
    fn exponential_eigenfunction_gives_one() {
        for lam in [c(0.3), c(-0.4), Complex64::new(0.7, 0.5), c(1.6)] {
            let spec = ContourSpec::weyl(ZERO, 0.0);
            let r = loop_integral(|u| Ok((-u).exp()), &spec, lam).unwrap();
            assert!((r.value - ONE).norm() < 1e-10, "λ = {lam}: {}", r.value);
        }
    }

    #[test]
    fn integer_order_is_a_taylor_coefficient() {
        // λ = 2: (1/2πi) Γ(3) ∮ h/u³ = h''(0), for h = e^{3u} → 9
        let spec = ContourSpec::weyl(ZERO, 0.0).with_radius(0.5);
        let r = loop_integral(|u| Ok((u * 3.0).exp()), &spec, c(2.0)).unwrap();
        assert!((r.value - c(9.0)).norm() < 1e-11, "{}", r.value);
    }

    #[test]
    fn keyhole_and_collapsed_agree() {
        let lam = c(-0.3);
        let key = ContourSpec::weyl(ZERO, 0.0);
        let col = key.clone().with_collapse(true);
        let a = loop_integral(|u| Ok((-u).exp()), &key, lam).unwrap().value;
        let b = loop_integral(|u| Ok((-u).exp()), &col, lam).unwrap().value;
        assert!((a - b).norm() < 1e-9, "{a} vs {b}");
        assert!((a - ONE).norm() < 1e-10);
        assert!(matches!(loop_integral(|u| Ok((-u).exp()), &col, c(0.3)), Err(Error::CollapseInvalid(_))));
    }

    #[test]
    fn riemann_loop_matches_beta_integral() {
        // centre 1, endpoint 0, h(ζ) = ζ²: the loop equals
        // e^{-iπλ} Γ(3)/Γ(3-λ) for every λ (collapsed form is a beta integral)
        let spec = ContourSpec::riemann(ONE, ZERO, PI).with_singularities([ZERO]);
        for lam in [c(0.4), c(-0.3), Complex64::new(1.3, -0.4)] {
            let r = loop_integral(|o| Ok((o + ONE) * (o + ONE)), &spec, lam).unwrap().value;
            let expect = exp_i_pi(-lam) * 2.0 * rgamma(c(3.0) - lam);
            assert!((r - expect).norm() < 1e-10, "λ = {lam}: {r} vs {expect}");
        }
        let col = spec.clone().with_collapse(true);
        let r = loop_integral(|o| Ok((o + ONE) * (o + ONE)), &col, c(-0.3)).unwrap().value;
        assert!((r - exp_i_pi(c(0.3)) * 2.0 * rgamma(c(3.3))).norm() < 1e-10);
    }
}
