//! Fractional powers of the stepping operators, evaluated as loop integrals
//! over the group parameter u.
//!
//! M₊^λ and M₋^λ shift the order μ, K₃^λ raises and P₃^λ lowers the degree ν.
//! Every operator has the normalisation (1/2πi) e^{iπλ} Γ(λ+1) ∮ du u^{-λ-1}.

mod coefficients;
mod degree;
mod order;
#[cfg(test)]
mod tests;

pub use coefficients::{coefficients, Coefficient, CoefficientSet};
pub use degree::{degree_lower_decomposition, frac_degree_shift};
pub use order::{apply_order_operator, frac_order_shift, mminus_phase_routes, order_raise_decomposition};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::legendre::{Domain, FunctionKind, LegendreArgument};
use crate::numerics::{gamma_ratio, nonpositive_integer};
use crate::quad::{ContourSpec, QuadConfig};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FracOperator {
    Mplus,
    Mminus,
    K3,
    P3,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Representation {
    /// Loop from infinity around u = 0 and back.
    Weyl,
    /// Loop from the finite point where the shifted argument reaches 1.
    Riemann,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FracOpSpec {
    pub operator: FracOperator,
    pub lambda: Complex64,
    pub representation: Representation,
    /// Replace the loop by a line integral from u = 0 (Re λ < 0 only).
    pub collapse: bool,
    /// Circle radius around u = 0; `None` lets the contour pick it.
    pub circle_radius: Option<f64>,
    pub config: QuadConfig,
}

impl FracOpSpec {
    /// Rejects the operator/representation pairs that have no integral form.
    pub fn new(operator: FracOperator, lambda: Complex64, representation: Representation) -> Result<Self> {
        let spec = Self { operator, lambda, representation, collapse: false, circle_radius: None, config: QuadConfig::from_env() };
        spec.check_representation()?;
        Ok(spec)
    }

    pub fn weyl(operator: FracOperator, lambda: Complex64) -> Self {
        Self { operator, lambda, representation: Representation::Weyl, collapse: false, circle_radius: None, config: QuadConfig::from_env() }
    }

    pub fn with_collapse(mut self, collapse: bool) -> Self {
        self.collapse = collapse;
        self
    }

    pub fn with_config(mut self, config: QuadConfig) -> Self {
        self.config = config;
        self
    }

    pub fn with_radius(mut self, r: f64) -> Self {
        self.circle_radius = Some(r);
        self
    }

    /// Applies the loop settings of this operator to a contour.
    fn contour(&self, base: ContourSpec) -> ContourSpec {
        let c = base.with_collapse(self.collapse).with_config(self.config);
        match self.circle_radius {
            Some(r) => c.with_radius(r),
            None => c,
        }
    }

    fn check_representation(&self) -> Result<()> {
        match (self.operator, self.representation) {
            (FracOperator::Mminus, Representation::Riemann) => Err(Error::NoRiemannRepresentation(
                "the finite loop for M₋^λ yields an inhomogeneous equation".into(),
            )),
            (FracOperator::K3, Representation::Riemann) => Err(Error::NoRiemannRepresentation(
                "the endpoint condition for K₃^λ fails for both P and Q".into(),
            )),
            _ => Ok(()),
        }
    }
}

/// Coefficients of a two-term result, value = `p_coef`·P + `q_coef`·Q̂,
/// where Q̂ is the phase-normalised Q named by the producing helper.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TwoTermDecomposition {
    pub p_coef: Complex64,
    pub q_coef: Complex64,
}

const POLE_TOL: f64 = 1e-12;

/// Inputs shared by all operators: an off-cut function in the right half plane.
fn check_input(kind: FunctionKind, arg: &LegendreArgument) -> Result<()> {
    if kind.is_on_cut() || arg.domain() != Domain::OffCut {
        return Err(Error::DomainError("fractional operators act on off-cut functions".into()));
    }
    if arg.z().re <= 0.0 {
        return Err(Error::DomainError(format!("loop contours need Re z > 0, got z = {}", arg.z())));
    }
    Ok(())
}

fn require_positive(x: Complex64, condition: &str) -> Result<()> {
    if x.re > 0.0 {
        Ok(())
    } else {
        Err(Error::ConvergenceConditionViolated(format!("{condition} (value {})", x.re)))
    }
}

/// Γ-ratio of a printed prefactor; a pole in the numerator means the
/// operator coefficient vanishes and the shift cannot be inverted.
fn prefactor_ratio(num: &[Complex64], den: &[Complex64]) -> Result<Complex64> {
    for a in num {
        if nonpositive_integer(*a, POLE_TOL).is_some() {
            return Err(Error::CoefficientVanishes(format!("Γ({a}) in the printed prefactor is infinite")));
        }
    }
    gamma_ratio(num, den)
}

/// Point of the cut (-∞, 1] closest to z.
fn nearest_cut_point(z: Complex64) -> Complex64 {
    Complex64::new(z.re.min(1.0), 0.0)
}
