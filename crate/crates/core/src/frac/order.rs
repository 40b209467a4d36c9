use num_complex::Complex64;
use std::f64::consts::PI;

use super::{
    check_input, nearest_cut_point, prefactor_ratio, require_positive, FracOpSpec, FracOperator, Representation,
    TwoTermDecomposition,
};
use crate::error::{Error, Result};
use crate::legendre::{eval_legendre, DegreeOrder, Direction, FunctionKind, LegendreArgument};
use crate::numerics::{c, exp_i_pi, hyp2f1_reg, sin_pi, EvalResult, ONE, ZERO};
use crate::quad::{loop_integral, loop_integral_at, ContourSpec, LoopPoint};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Route {
    /// Rays along u > 0 with Z = z + u√(z²-1).
    Standard,
    /// Rays along arg u = -π with Z = z - u√(z²-1): the contour first drawn
    /// below the singular points and turned clockwise.
    Below,
}

fn order_loop<F>(f: F, mu: Complex64, lambda: Complex64, arg: &LegendreArgument, dir: Direction, route: Route, spec: &FracOpSpec) -> Result<EvalResult>
where
    F: Fn(&LegendreArgument) -> Result<Complex64>,
{
    let zm1 = arg.zm1();
    let s = arg.sqrt_z2m1();
    let ln_base = zm1.ln() + (zm1 + c(2.0)).ln();
    let power = match dir {
        Direction::Raise => mu * 0.5,
        Direction::Lower => -mu * 0.5,
    };
    let (step, phase) = match route {
        Route::Standard => (s, 0.0),
        Route::Below => (-s, -PI),
    };
    let singular = [-zm1 / step, -(zm1 + c(2.0)) / step, (nearest_cut_point(arg.z()) - arg.z()) / step];
    let h = |u: Complex64| -> Result<Complex64> {
        let big_zm1 = zm1 + u * step;
        let at = LegendreArgument::interior(big_zm1)?;
        let log_ratio = ln_base - big_zm1.ln() - (big_zm1 + c(2.0)).ln();
        Ok((power * log_ratio).exp() * f(&at)?)
    };
    let contour = spec.contour(ContourSpec::weyl(ZERO, phase).with_singularities(singular.into_iter().filter(|p| p.norm() > 0.0)));
    loop_integral(h, &contour, lambda)
}

/// Weyl action of M₊^λ (`Raise`) or of the rotated M₋^λ (`Lower`) on an
/// arbitrary function `f` of order μ:
/// (1/2πi) e^{iπλ} Γ(λ+1) ∮ du u^{-λ-1} ((z²-1)/(Z²-1))^{±μ/2} f(Z),
/// Z = z + u√(z²-1), on the loop around u = 0 along the positive axis.
pub fn apply_order_operator<F>(f: F, mu: Complex64, lambda: Complex64, arg: &LegendreArgument, dir: Direction, spec: &FracOpSpec) -> Result<EvalResult>
where
    F: Fn(&LegendreArgument) -> Result<Complex64>,
{
    check_input(FunctionKind::POffCut, arg)?;
    order_loop(f, mu, lambda, arg, dir, Route::Standard, spec)
}

fn legendre_fn(kind: FunctionKind, d: DegreeOrder, phase: Complex64) -> impl Fn(&LegendreArgument) -> Result<Complex64> {
    move |a| Ok(phase * eval_legendre(kind, d, a)?.value)
}

/// M₊^λ P^μ = p_coef P^{μ+λ} + q_coef e^{-iπ(μ+λ)} Q^{μ+λ}.
pub fn order_raise_decomposition(d: DegreeOrder, lambda: Complex64) -> Result<TwoTermDecomposition> {
    let den = sin_pi(d.nu - d.mu - lambda);
    if den.norm() < 1e-12 {
        return Err(Error::DegenerateCombination(format!("sin π(ν-μ-λ) vanishes at ν-μ-λ = {}", d.nu - d.mu - lambda)));
    }
    Ok(TwoTermDecomposition {
        p_coef: sin_pi(d.nu - d.mu) / den,
        q_coef: -sin_pi(d.nu) * sin_pi(lambda) * (2.0 / PI) / den,
    })
}

fn mminus_q_ratio(d: DegreeOrder, lambda: Complex64) -> Result<Complex64> {
    let (nu, mu) = (d.nu, d.mu);
    prefactor_ratio(&[nu + mu - lambda + ONE, nu - mu + ONE], &[nu + mu + ONE, nu - mu + lambda + ONE])
}

/// Order shift by the fractional operator in `spec`.
///
/// Returns Q_ν^{μ+λ} (M₊ on Q), Q_ν^{μ-λ} (M₋ on Q), P_ν^{μ-λ} (M₋ on P),
/// P_ν^{μ+λ} (Riemann M₊ on P), and for the Weyl M₊ on P the integral
/// itself, whose split is given by [`order_raise_decomposition`].
pub fn frac_order_shift(kind: FunctionKind, d: DegreeOrder, arg: &LegendreArgument, spec: &FracOpSpec) -> Result<EvalResult> {
    check_input(kind, arg)?;
    spec.check_representation()?;
    let (nu, mu, lam) = (d.nu, d.mu, spec.lambda);
    let half = c(0.5);
    match (spec.operator, spec.representation, kind) {
        (FracOperator::Mplus, Representation::Weyl, FunctionKind::QOffCut) => {
            require_positive(nu + mu + lam + ONE, "Re(ν+μ+λ+1) > 0")?;
            let f = legendre_fn(kind, d, exp_i_pi(-mu));
            let r = order_loop(f, mu, lam, arg, Direction::Raise, Route::Standard, spec)?;
            Ok(r.scale(exp_i_pi(mu + lam)))
        }
        (FracOperator::Mplus, Representation::Weyl, FunctionKind::POffCut) => {
            require_positive(nu + half + mu + lam + half, "Re(ν+μ+λ+1) > 0")?;
            require_positive(-nu - half + mu + lam + half, "Re(-ν+μ+λ) > 0")?;
            order_loop(legendre_fn(kind, d, ONE), mu, lam, arg, Direction::Raise, Route::Standard, spec)
        }
        (FracOperator::Mplus, Representation::Riemann, FunctionKind::POffCut) => riemann_p_raise(d, arg, spec),
        (FracOperator::Mplus, Representation::Riemann, _) => Err(Error::NoRiemannRepresentation(
            "the finite loop applied to Q yields an inhomogeneous equation".into(),
        )),
        (FracOperator::Mminus, Representation::Weyl, FunctionKind::QOffCut) => {
            require_positive(nu - mu + lam + ONE, "Re(ν-μ+λ+1) > 0")?;
            let k = mminus_q_ratio(d, lam)?;
            let f = legendre_fn(kind, d, exp_i_pi(-mu));
            let r = order_loop(f, mu, lam, arg, Direction::Lower, Route::Standard, spec)?;
            Ok(r.scale(k * exp_i_pi(mu - lam)))
        }
        (FracOperator::Mminus, Representation::Weyl, FunctionKind::POffCut) => {
            require_positive(nu + half - mu + lam + half, "Re(ν-μ+λ+1) > 0")?;
            require_positive(-nu - half - mu + lam + half, "Re(-ν-μ+λ) > 0")?;
            let k = prefactor_ratio(&[-nu - mu, nu - mu + ONE], &[-nu - mu + lam, nu - mu + lam + ONE])?;
            let r = order_loop(legendre_fn(kind, d, ONE), mu, lam, arg, Direction::Lower, Route::Standard, spec)?;
            Ok(r.scale(k))
        }
        (FracOperator::K3 | FracOperator::P3, _, _) => {
            Err(Error::InvalidInput("K₃ and P₃ change the degree; use frac_degree_shift".into()))
        }
        _ => Err(Error::DomainError("fractional operators act on off-cut functions".into())),
    }
}

/// P_ν^{μ+λ}(z) from the finite loop (u'₀, 0+, u'₀), u'₀ = √((z-1)/(z+1)),
/// with Z' = z - u√(z²-1). Near u'₀ the integrand is written through
/// Z' - 1 = (u'₀ - u)√(z²-1), which the quadrature supplies exactly.
fn riemann_p_raise(d: DegreeOrder, arg: &LegendreArgument, spec: &FracOpSpec) -> Result<EvalResult> {
    let (nu, mu, lam) = (d.nu, d.mu, spec.lambda);
    require_positive(ONE - mu, "Re μ < 1")?;
    let zm1 = arg.zm1();
    let s = arg.sqrt_z2m1();
    let end = zm1 / s;
    let scale = (mu * 0.5 * (zm1.ln() + (zm1 + c(2.0)).ln())).exp();
    let h = |pt: LoopPoint| -> Result<Complex64> {
        let to_end = pt.to_end.unwrap_or(end - pt.offset);
        let big_zm1 = to_end * s;
        if big_zm1 == ZERO {
            return Ok(ZERO);
        }
        // ((z²-1)/(Z'²-1))^{μ/2} P^μ(Z') = (z²-1)^{μ/2} (Z'-1)^{-μ} F̃(-ν, ν+1; 1-μ; (1-Z')/2)
        let f = hyp2f1_reg(-nu, nu + ONE, ONE - mu, -big_zm1 * 0.5)?;
        Ok(scale * (-mu * big_zm1.ln()).exp() * f.value)
    };
    let singular = [(zm1 + c(2.0)) / s, (arg.z() - nearest_cut_point(arg.z())) / s];
    let contour = spec.contour(ContourSpec::riemann(ZERO, end, end.arg()).with_singularities(singular.into_iter().filter(|p| p.norm() > 0.0)));
    loop_integral_at(h, &contour, lam)
}

/// Q_ν^{μ-λ}(z) from M₋^λ along the two documented contour choices:
/// the printed loop (coefficient N₋) and the loop drawn below the singular
/// points (coefficient e^{2iπλ} N₋). Both must agree.
pub fn mminus_phase_routes(d: DegreeOrder, arg: &LegendreArgument, lambda: Complex64, spec: &FracOpSpec) -> Result<(EvalResult, EvalResult)> {
    check_input(FunctionKind::QOffCut, arg)?;
    let (nu, mu) = (d.nu, d.mu);
    require_positive(nu - mu + lambda + ONE, "Re(ν-μ+λ+1) > 0")?;
    let k = mminus_q_ratio(d, lambda)?;
    let f = legendre_fn(FunctionKind::QOffCut, d, exp_i_pi(-mu));
    let a = order_loop(&f, mu, lambda, arg, Direction::Lower, Route::Standard, spec)?;
    let b = order_loop(&f, mu, lambda, arg, Direction::Lower, Route::Below, spec)?;
    let out = exp_i_pi(mu - lambda);
    // F' = I_below / (e^{2iπλ} N₋) with N₋ = e^{-iπλ}/k
    Ok((a.scale(k * out), b.scale(k * exp_i_pi(-lambda) * out)))
}
