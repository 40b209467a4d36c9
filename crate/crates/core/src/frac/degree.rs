use num_complex::Complex64;
use std::f64::consts::PI;

use super::{check_input, nearest_cut_point, prefactor_ratio, require_positive, FracOpSpec, FracOperator, Representation, TwoTermDecomposition};
use crate::error::{Error, Result};
use crate::legendre::{eval_legendre, DegreeOrder, FunctionKind, LegendreArgument};
use crate::numerics::{c, cos_pi, exp_i_pi, sin_pi, EvalResult, ONE, ZERO};
use crate::quad::{loop_integral, loop_integral_at, ContourSpec, LoopPoint};

/// Below this distance to the endpoint the Riemann integrand of P₃^λ is
/// dropped; it behaves like (u₀ - u)^{ν+1/2} there.
const ENDPOINT_CUTOFF: f64 = 1e-250;

/// X - 1 for X = w/√D with w² - D = z² - 1, free of cancellation.
fn shifted_zm1(z2m1: Complex64, w: Complex64, sqrt_d: Complex64) -> Complex64 {
    z2m1 / (sqrt_d * (w + sqrt_d))
}

/// Weyl loop for the degree operators in the z-variable:
/// (1/2πi) e^{iπλ} Γ(λ+1) ∮ du u^{-λ-1} D^{power} f(X),
/// D = u² + 2zu + 1, X = (z+u)/√D.
fn degree_weyl<F>(f: F, power: Complex64, lambda: Complex64, arg: &LegendreArgument, spec: &FracOpSpec) -> Result<EvalResult>
where
    F: Fn(&LegendreArgument) -> Result<Complex64>,
{
    let z = arg.z();
    let z2m1 = arg.z2m1();
    let s = arg.sqrt_z2m1();
    let h = |u: Complex64| -> Result<Complex64> {
        let ln_d = (ONE + u * (z * 2.0 + u)).ln();
        let sqrt_d = (ln_d * 0.5).exp();
        let at = LegendreArgument::interior(shifted_zm1(z2m1, z + u, sqrt_d))?;
        Ok((power * ln_d).exp() * f(&at)?)
    };
    // zeros of D, and the first-order image of the nearest cut point (X ≈ z - u(z²-1))
    let singular = [-z + s, -z - s, (z - nearest_cut_point(z)) / z2m1];
    let contour = spec.contour(ContourSpec::weyl(ZERO, 0.0).with_singularities(singular.into_iter().filter(|p| p.norm() > 0.0)));
    loop_integral(h, &contour, lambda)
}

/// P₃^λ e^{-iπμ} Q_ν^μ (normalised integral) = q_coef e^{-iπμ} Q_{ν-λ}^μ + p_coef P_{ν-λ}^μ,
/// obtained by writing Q through P^{±μ} and lowering each term.
pub fn degree_lower_decomposition(d: DegreeOrder, lambda: Complex64) -> Result<TwoTermDecomposition> {
    let (nu, mu) = (d.nu, d.mu);
    let plus = sin_pi(nu - lambda + mu);
    let minus = sin_pi(nu - mu - lambda);
    if plus.norm() < 1e-12 || minus.norm() < 1e-12 {
        return Err(Error::DegenerateCombination(format!("sin π(ν-λ±μ) vanishes at ν-λ = {}, μ = {mu}", nu - lambda)));
    }
    Ok(TwoTermDecomposition {
        p_coef: -cos_pi(mu) * sin_pi(lambda) * PI / (plus * minus),
        q_coef: sin_pi(nu - mu) / minus,
    })
}

/// Degree shift by K₃^λ or P₃^λ.
///
/// Returns F_{ν+λ}^μ (K₃ on P or Q), P_{ν-λ}^μ (P₃ on P), Q_{ν-λ}^μ
/// (Riemann P₃ on Q), and for the Weyl P₃ on Q the normalised integral,
/// whose split is given by [`degree_lower_decomposition`].
pub fn frac_degree_shift(kind: FunctionKind, d: DegreeOrder, arg: &LegendreArgument, spec: &FracOpSpec) -> Result<EvalResult> {
    check_input(kind, arg)?;
    spec.check_representation()?;
    let (nu, mu, lam) = (d.nu, d.mu, spec.lambda);
    let plain = |a: &LegendreArgument| Ok(eval_legendre(kind, d, a)?.value);
    match (spec.operator, spec.representation, kind) {
        (FracOperator::K3, Representation::Weyl, _) => {
            require_positive(nu + lam - mu + ONE, "Re(ν+λ-μ+1) > 0")?;
            if kind == FunctionKind::QOffCut {
                require_positive(nu + lam + mu + ONE, "Re(ν+λ+μ+1) > 0")?;
            }
            let k = prefactor_ratio(&[nu - mu + ONE], &[nu + lam - mu + ONE])?;
            Ok(degree_weyl(plain, -(nu + ONE) * 0.5, lam, arg, spec)?.scale(k))
        }
        (FracOperator::P3, Representation::Weyl, FunctionKind::POffCut) => {
            require_positive(lam - nu - mu, "Re(λ-ν-μ) > 0")?;
            let k = prefactor_ratio(&[-nu - mu], &[-nu + lam - mu])?;
            Ok(degree_weyl(plain, nu * 0.5, lam, arg, spec)?.scale(k))
        }
        (FracOperator::P3, Representation::Weyl, FunctionKind::QOffCut) => {
            require_positive(lam - nu + mu, "Re(λ-ν+μ) > 0")?;
            require_positive(lam - nu - mu, "Re(λ-ν-μ) > 0")?;
            let k = prefactor_ratio(&[nu - lam + mu + ONE], &[nu + mu + ONE])?;
            let phase = exp_i_pi(-mu);
            let f = |a: &LegendreArgument| Ok(phase * eval_legendre(kind, d, a)?.value);
            Ok(degree_weyl(f, nu * 0.5, lam, arg, spec)?.scale(k))
        }
        (FracOperator::P3, Representation::Riemann, FunctionKind::QOffCut) => p3_riemann_q(d, arg, spec),
        (FracOperator::P3, Representation::Riemann, _) => Err(Error::NoRiemannRepresentation(
            "the endpoint condition for P₃^λ fails for P".into(),
        )),
        (FracOperator::Mplus | FracOperator::Mminus, _, _) => {
            Err(Error::InvalidInput("M₊ and M₋ change the order; use frac_order_shift".into()))
        }
        _ => Err(Error::DomainError("fractional operators act on off-cut functions".into())),
    }
}

/// Q_{ν-λ}^μ(z) from the finite loop (u₀, 0+, u₀), u₀ = z - √(z²-1), with
/// D = u² - 2zu + 1 = (1 - u/u₀)(1 - u/u₁) and X = (z-u)/√D → ∞ at u₀.
fn p3_riemann_q(d: DegreeOrder, arg: &LegendreArgument, spec: &FracOpSpec) -> Result<EvalResult> {
    let (nu, mu, lam) = (d.nu, d.mu, spec.lambda);
    require_positive(nu + c(1.5), "Re(ν+3/2) > 0")?;
    let k = prefactor_ratio(&[nu - lam + mu + ONE], &[nu + mu + ONE])?;
    let z = arg.z();
    let z2m1 = arg.z2m1();
    let s = arg.sqrt_z2m1();
    let (u0, u1) = (z - s, z + s);
    let h = |pt: LoopPoint| -> Result<Complex64> {
        let u = pt.offset;
        let to_end = pt.to_end.unwrap_or(u0 - u);
        if to_end.norm() < ENDPOINT_CUTOFF * u0.norm() {
            return Ok(ZERO);
        }
        let ln_d = (to_end / u0).ln() + (ONE - u / u1).ln();
        let sqrt_d = (ln_d * 0.5).exp();
        let at = LegendreArgument::interior(shifted_zm1(z2m1, z - u, sqrt_d))?;
        Ok((nu * 0.5 * ln_d).exp() * eval_legendre(FunctionKind::QOffCut, d, &at)?.value)
    };
    // X ≈ z + u(z²-1) near u = 0
    let singular = [u1, (nearest_cut_point(z) - z) / z2m1];
    let contour = spec.contour(ContourSpec::riemann(ZERO, u0, u0.arg()).with_singularities(singular.into_iter().filter(|p| p.norm() > 0.0)));
    Ok(loop_integral_at(h, &contour, lam)?.scale(k))
}
