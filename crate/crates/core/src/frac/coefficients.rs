use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::legendre::DegreeOrder;
use crate::numerics::{exp_i_pi, gamma_ratio, ONE};

/// A proportionality coefficient, or a marker for a pole of its Γ-ratio.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum Coefficient {
    Finite(Complex64),
    Pole,
}

impl Coefficient {
    pub fn value(self) -> Option<Complex64> {
        match self {
            Coefficient::Finite(v) => Some(v),
            Coefficient::Pole => None,
        }
    }

    pub fn is_pole(self) -> bool {
        matches!(self, Coefficient::Pole)
    }

    fn from_ratio(prefix: Complex64, num: &[Complex64], den: &[Complex64]) -> Self {
        match gamma_ratio(num, den) {
            Ok(r) => Coefficient::Finite(prefix * r),
            Err(_) => Coefficient::Pole,
        }
    }
}

/// The five operator coefficients at one (ν, μ, λ).
///
/// * `nplus`: M₊^λ t^μ F^μ = N₊ t^{μ+λ} F^{μ+λ}
/// * `nminus`: M₋^λ on Q, contour above the singular points
/// * `nminus_tilde`: M₋^λ on P
/// * `nprime_plus`: K₃^λ, raising the degree
/// * `nprime_minus`: P₃^λ on P, lowering the degree
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CoefficientSet {
    pub degree_order: DegreeOrder,
    pub lambda: Complex64,
    pub nplus: Coefficient,
    pub nminus: Coefficient,
    pub nminus_tilde: Coefficient,
    pub nprime_plus: Coefficient,
    pub nprime_minus: Coefficient,
}

pub fn coefficients(d: DegreeOrder, lambda: Complex64) -> CoefficientSet {
    let (nu, mu, lam) = (d.nu, d.mu, lambda);
    let phase = exp_i_pi(-lam);
    CoefficientSet {
        degree_order: d,
        lambda,
        nplus: Coefficient::Finite(phase),
        nminus: Coefficient::from_ratio(
            phase,
            &[nu + mu + ONE, nu - mu + lam + ONE],
            &[nu + mu - lam + ONE, nu - mu + ONE],
        ),
        nminus_tilde: Coefficient::from_ratio(ONE, &[-nu - mu + lam, nu - mu + lam + ONE], &[-nu - mu, nu - mu + ONE]),
        nprime_plus: Coefficient::from_ratio(phase, &[nu + lam - mu + ONE], &[nu - mu + ONE]),
        nprime_minus: Coefficient::from_ratio(phase, &[-nu + lam - mu], &[-nu - mu]),
    }
}
