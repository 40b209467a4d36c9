//! Both sides of the integral representations: loop integrals in the
//! argument variable, in the group parameter, and in hyperbolic angles.

use num_complex::Complex64;
use std::f64::consts::{FRAC_PI_2, PI};

use super::bessel::{bessel_i, bessel_k, ln_cosh};
use super::Params;
use crate::error::Result;
use crate::legendre::{eval_legendre, DegreeOrder, FunctionKind, LegendreArgument};
use crate::numerics::{c, cos_pi, exp_i_pi, gamma, rgamma, sin_pi, EvalResult, ONE, ZERO};
use crate::quad::{exp_sinh, loop_integral, loop_integral_at, ContourSpec, LoopPoint, QuadConfig};

/// Inner loops closer than this to their endpoint are replaced by the
/// endpoint limit of the inner integral.
const INNER_ENDPOINT: f64 = 1e-60;

/// Angles beyond which the exponentially decaying angle integrands are dropped.
const ANGLE_CUTOFF: f64 = 200.0;

/// (1/2πi) ∮ (ζ - c)^{-a} h(ζ) dζ on the loop described by `spec`.
fn plain_loop<F>(h: F, spec: &ContourSpec, a: Complex64) -> Result<EvalResult>
where
    F: Fn(LoopPoint) -> Result<Complex64>,
{
    let lambda = a - ONE;
    let norm = exp_i_pi(-lambda) * rgamma(a);
    if norm == ZERO {
        // Γ(a) infinite: (ζ - c)^{-a} is a polynomial and the loop integral vanishes
        return Ok(EvalResult::exact(ZERO));
    }
    Ok(loop_integral_at(h, spec, lambda)?.scale(norm))
}

fn weyl(center: Complex64, singular: &[Complex64], cfg: &QuadConfig) -> ContourSpec {
    ContourSpec::weyl(center, 0.0).with_singularities(singular.iter().copied()).with_config(*cfg)
}

fn riemann(center: Complex64, endpoint: Complex64, phase: f64, singular: &[Complex64], cfg: &QuadConfig) -> ContourSpec {
    ContourSpec::riemann(center, endpoint, phase).with_singularities(singular.iter().copied()).with_config(*cfg)
}

/// ln sinh(x) without overflow for large real parts (any branch; callers
/// only exponentiate it or use it near the positive axis).
fn ln_sinh(x: Complex64) -> Complex64 {
    if x.re > 20.0 {
        x - c(2f64.ln()) + (ONE - (-2.0 * x).exp()).ln()
    } else if x.re < -20.0 {
        ln_sinh(-x) + Complex64::new(0.0, PI)
    } else {
        x.sinh().ln()
    }
}

/// ln(sinh(x)/x), principal near the positive axis.
fn ln_sinhc(x: Complex64) -> Complex64 {
    if x.norm() < 1e-3 {
        let x2 = x * x;
        (ONE + x2 / 6.0 + x2 * x2 / 120.0).ln()
    } else {
        ln_sinh(x) - x.ln()
    }
}

/// ln[(cosh θ' - cosh θ)/(θ' - θ)] with θ' = θ + d.
fn ln_cosh_ratio(theta: Complex64, d: Complex64) -> Complex64 {
    ln_sinh(theta + d * 0.5) + ln_sinhc(d * 0.5)
}

/// Loop in a hyperbolic angle around θ' = θ:
/// (1/2πi) ∮ dθ' (cosh θ' - cosh θ)^{-a} exp(ln_rest(θ')).
/// Weyl loops run to +∞, Riemann loops to θ' = 0 with phases in [-π, π].
fn hyperbolic_loop<G>(theta: f64, a: Complex64, ln_rest: G, to_zero: bool, extra: &[Complex64], cfg: &QuadConfig) -> Result<EvalResult>
where
    G: Fn(Complex64) -> Result<Complex64>,
{
    hyperbolic_loop_at(c(theta), a, ln_rest, to_zero, extra, cfg)
}

/// As [`hyperbolic_loop`] around a complex centre (Weyl loops only stay
/// on the principal branches while |Im θ| < π/2).
fn hyperbolic_loop_at<G>(theta: Complex64, a: Complex64, ln_rest: G, to_zero: bool, extra: &[Complex64], cfg: &QuadConfig) -> Result<EvalResult>
where
    G: Fn(Complex64) -> Result<Complex64>,
{
    let two_pi = Complex64::new(0.0, 2.0 * PI);
    let mut singular = vec![-theta, theta + two_pi, theta - two_pi, -theta + two_pi, -theta - two_pi];
    singular.extend_from_slice(extra);
    let h = |pt: LoopPoint| -> Result<Complex64> {
        let at = match pt.to_end {
            Some(e) if to_zero => -e,
            _ => theta + pt.offset,
        };
        Ok((-a * ln_cosh_ratio(theta, pt.offset) + ln_rest(at)?).exp())
    };
    let spec = if to_zero {
        riemann(theta, ZERO, -PI, &singular, cfg)
    } else {
        weyl(theta, &singular, cfg)
    };
    plain_loop(h, &spec, a)
}

fn get(p: &Params) -> (Complex64, Complex64, f64) {
    (p.get("nu"), p.get("mu"), p.get("z").re)
}

fn legendre(kind: FunctionKind, nu: Complex64, mu: Complex64, z: f64) -> Result<EvalResult> {
    eval_legendre(kind, DegreeOrder::new(nu, mu), &LegendreArgument::off_cut(c(z))?)
}

fn sinh_theta(z: f64) -> f64 {
    (z * z - 1.0).sqrt()
}

/// θ with z = cosh θ.
fn theta_of(z: f64) -> f64 {
    z.acosh()
}

/// φ with z = coth φ.
fn phi_of(z: f64) -> f64 {
    0.5 * ((z + 1.0) / (z - 1.0)).ln()
}

/// ln(Z - 1) + ln(Z + 1).
fn ln_z2m1(zm1: Complex64) -> Complex64 {
    zm1.ln() + (zm1 + c(2.0)).ln()
}

/// ln(Z + √(Z²-1)).
fn ln_z_plus_root(zm1: Complex64) -> Complex64 {
    (zm1 + ONE + zm1.sqrt() * (zm1 + c(2.0)).sqrt()).ln()
}

fn pw(x: f64, p: Complex64) -> Complex64 {
    (p * x.ln()).exp()
}

// ---------------------------------------------------------------- left sides

pub(super) fn lhs_q_scaled(p: &Params, _: &QuadConfig) -> Result<EvalResult> {
    let (nu, mu, z) = get(p);
    Ok(legendre(FunctionKind::QOffCut, nu, mu, z)?.scale(exp_i_pi(-mu) * pw(z * z - 1.0, -mu * 0.5)))
}

pub(super) fn lhs_q_phase(p: &Params, _: &QuadConfig) -> Result<EvalResult> {
    let (nu, mu, z) = get(p);
    Ok(legendre(FunctionKind::QOffCut, nu, mu, z)?.scale(exp_i_pi(-mu)))
}

pub(super) fn lhs_q(p: &Params, _: &QuadConfig) -> Result<EvalResult> {
    let (nu, mu, z) = get(p);
    legendre(FunctionKind::QOffCut, nu, mu, z)
}

pub(super) fn lhs_p(p: &Params, _: &QuadConfig) -> Result<EvalResult> {
    let (nu, mu, z) = get(p);
    legendre(FunctionKind::POffCut, nu, mu, z)
}

pub(super) fn lhs_p_negative_order(p: &Params, _: &QuadConfig) -> Result<EvalResult> {
    let (nu, mu, z) = get(p);
    legendre(FunctionKind::POffCut, nu, -mu, z)
}

/// e^{-iπ(ν+λ+1)} Q_ν^{ν+λ+1}(z).
pub(super) fn lhs_q_top_order(p: &Params, _: &QuadConfig) -> Result<EvalResult> {
    let (nu, _, z) = get(p);
    let lam = p.get("lambda");
    let order = nu + lam + ONE;
    Ok(legendre(FunctionKind::QOffCut, nu, order, z)?.scale(exp_i_pi(-order)))
}

pub(super) fn lhs_p_lowered_degree(p: &Params, _: &QuadConfig) -> Result<EvalResult> {
    let (_, mu, z) = get(p);
    legendre(FunctionKind::POffCut, -p.get("lambda"), mu, z)
}

pub(super) fn lhs_q_lowered_degree(p: &Params, _: &QuadConfig) -> Result<EvalResult> {
    let (_, mu, z) = get(p);
    legendre(FunctionKind::QOffCut, -p.get("lambda"), mu, z)
}

pub(super) fn lhs_q_lowered_degree_phase(p: &Params, _: &QuadConfig) -> Result<EvalResult> {
    let (_, mu, z) = get(p);
    Ok(legendre(FunctionKind::QOffCut, -p.get("lambda"), mu, z)?.scale(exp_i_pi(-mu)))
}

// ------------------------------------------- order-shift representations

/// Weyl loop in Z around z for Q from the order-1/2 closed form.
pub(super) fn q_half_argument_loop(p: &Params, cfg: &QuadConfig) -> Result<EvalResult> {
    let (nu, mu, z) = get(p);
    let h = |pt: LoopPoint| {
        let zm1 = c(z - 1.0) + pt.offset;
        Ok((-0.5 * ln_z2m1(zm1) - (nu + 0.5) * ln_z_plus_root(zm1)).exp())
    };
    let k = exp_i_pi(mu - 0.5) * gamma(mu + 0.5)? * FRAC_PI_2.sqrt();
    Ok(plain_loop(h, &weyl(c(z), &[ONE, -ONE], cfg), mu + 0.5)?.scale(k))
}

/// The same in the hyperbolic angle.
pub(super) fn q_half_angle_loop(p: &Params, cfg: &QuadConfig) -> Result<EvalResult> {
    let (nu, mu, z) = get(p);
    let k = exp_i_pi(mu - 0.5) * gamma(mu + 0.5)? * FRAC_PI_2.sqrt() * pw(sinh_theta(z), mu);
    Ok(hyperbolic_loop(theta_of(z), mu + 0.5, |t| Ok(-(nu + 0.5) * t), false, &[], cfg)?.scale(k))
}

/// Finite loop in the hyperbolic angle for P from P_ν^{1/2}.
pub(super) fn p_half_angle_finite_loop(p: &Params, cfg: &QuadConfig) -> Result<EvalResult> {
    let (nu, mu, z) = get(p);
    let k = gamma(mu + 0.5)? * (2.0 / PI).sqrt() * pw(sinh_theta(z), mu);
    Ok(hyperbolic_loop(theta_of(z), mu + 0.5, |t| Ok(ln_cosh((nu + 0.5) * t)), true, &[], cfg)?.scale(k))
}

fn top_order_u_integral(nu: Complex64, z: f64, a: Complex64, cfg: &QuadConfig) -> Result<EvalResult> {
    let s = sinh_theta(z);
    let h = |pt: LoopPoint| Ok((-(nu + 1.0) * ln_z2m1(c(z - 1.0) + pt.offset * s)).exp());
    let singular = [c(-(z - 1.0) / s), c(-(z + 1.0) / s)];
    plain_loop(h, &weyl(ZERO, &singular, cfg), a)
}

/// Weyl loop in u acting on Q_ν^{ν+1}, general λ.
pub(super) fn q_top_order_u_loop(p: &Params, cfg: &QuadConfig) -> Result<EvalResult> {
    let (nu, _, z) = get(p);
    let lam = p.get("lambda");
    let k = exp_i_pi(lam) * pw(2.0, nu) * gamma(nu + 1.0)? * gamma(lam + 1.0)? * pw(z * z - 1.0, (nu + 1.0) * 0.5);
    Ok(top_order_u_integral(nu, z, lam + 1.0, cfg)?.scale(k))
}

/// The same at λ = μ - ν - 1 with the prefactor (z²-1)^{(ν+1)/2} inherited from the general-λ form.
pub(super) fn q_top_order_u_loop_at_mu(p: &Params, cfg: &QuadConfig) -> Result<EvalResult> {
    let (nu, mu, z) = get(p);
    let k = exp_i_pi(mu - nu - 1.0) * pw(2.0, nu) * gamma(nu + 1.0)? * gamma(mu - nu)? * pw(z * z - 1.0, (nu + 1.0) * 0.5);
    Ok(top_order_u_integral(nu, z, mu - nu, cfg)?.scale(k))
}

/// As printed: (z²-1)^{μ/2} in front of the u-integral.
pub(super) fn q_top_order_u_loop_at_mu_printed(p: &Params, cfg: &QuadConfig) -> Result<EvalResult> {
    let (nu, mu, z) = get(p);
    let k = exp_i_pi(mu - nu - 1.0) * pw(2.0, nu) * gamma(nu + 1.0)? * gamma(mu - nu)? * pw(z * z - 1.0, mu * 0.5);
    Ok(top_order_u_integral(nu, z, mu - nu, cfg)?.scale(k))
}

fn top_order_constant(nu: Complex64, mu: Complex64) -> Result<Complex64> {
    Ok(exp_i_pi(mu - nu - 1.0) * pw(2.0, nu) * gamma(nu + 1.0)? * gamma(mu - nu)?)
}

/// Weyl loop in Z around z with the Q_ν^{ν+1} input.
pub(super) fn q_top_order_argument_loop(p: &Params, cfg: &QuadConfig) -> Result<EvalResult> {
    let (nu, mu, z) = get(p);
    let h = |pt: LoopPoint| Ok((-(nu + 1.0) * ln_z2m1(c(z - 1.0) + pt.offset)).exp());
    let k = top_order_constant(nu, mu)? * pw(z * z - 1.0, mu * 0.5);
    Ok(plain_loop(h, &weyl(c(z), &[ONE, -ONE], cfg), mu - nu)?.scale(k))
}

/// The same in the hyperbolic angle.
pub(super) fn q_top_order_angle_loop(p: &Params, cfg: &QuadConfig) -> Result<EvalResult> {
    let (nu, mu, z) = get(p);
    let k = top_order_constant(nu, mu)? * pw(sinh_theta(z), mu);
    let extra = [ZERO, Complex64::new(0.0, PI), Complex64::new(0.0, -PI)];
    Ok(hyperbolic_loop(theta_of(z), mu - nu, |t| Ok(-(2.0 * nu + 1.0) * ln_sinh(t)), false, &extra, cfg)?.scale(k))
}

/// Finite loop (1, z+, 1) for P from P_ν^{-ν}.
pub(super) fn p_bottom_order_argument_loop(p: &Params, cfg: &QuadConfig) -> Result<EvalResult> {
    let (nu, mu, z) = get(p);
    let h = |pt: LoopPoint| {
        let zm1 = -pt.to_end.unwrap_or(c(1.0 - z) - pt.offset);
        Ok((nu * ln_z2m1(zm1)).exp())
    };
    let k = pw(2.0, -nu) * gamma(nu + mu + 1.0)? * rgamma(nu + 1.0) * pw(z * z - 1.0, mu * 0.5);
    Ok(plain_loop(h, &riemann(c(z), ONE, -PI, &[-ONE], cfg), nu + mu + 1.0)?.scale(k))
}

/// The same in the hyperbolic angle.
pub(super) fn p_bottom_order_angle_loop(p: &Params, cfg: &QuadConfig) -> Result<EvalResult> {
    let (nu, mu, z) = get(p);
    let k = pw(2.0, -nu) * gamma(nu + mu + 1.0)? * rgamma(nu + 1.0) * pw(sinh_theta(z), mu);
    let extra = [Complex64::new(0.0, PI), Complex64::new(0.0, -PI)];
    Ok(hyperbolic_loop(theta_of(z), nu + mu + 1.0, |t| Ok((2.0 * nu + 1.0) * ln_sinh(t)), true, &extra, cfg)?.scale(k))
}

fn lowered_q_constant(nu: Complex64, mu: Complex64) -> Result<Complex64> {
    Ok(gamma(nu + mu + 1.0)? * rgamma(nu - mu + 1.0) * FRAC_PI_2.sqrt())
}

fn lowered_q_argument_integral(nu: Complex64, mu: Complex64, z: f64, cfg: &QuadConfig) -> Result<EvalResult> {
    let h = |pt: LoopPoint| Ok((-(nu + 0.5) * ln_z_plus_root(c(z - 1.0) + pt.offset)).exp());
    plain_loop(h, &weyl(c(z), &[ONE, -ONE], cfg), 1.5 - mu)
}

/// M₋ Weyl loop in Z from Q^{1/2}, with Γ(3/2-μ) from the loop normalisation.
pub(super) fn q_lowered_argument_loop(p: &Params, cfg: &QuadConfig) -> Result<EvalResult> {
    let (nu, mu, z) = get(p);
    let k = exp_i_pi(0.5 - mu) * gamma(1.5 - mu)? / (nu + 0.5) * lowered_q_constant(nu, mu)? * pw(z * z - 1.0, -mu * 0.5);
    Ok(lowered_q_argument_integral(nu, mu, z, cfg)?.scale(k))
}

/// As printed, with Γ(1/2-μ) in place of Γ(3/2-μ).
pub(super) fn q_lowered_argument_loop_printed(p: &Params, cfg: &QuadConfig) -> Result<EvalResult> {
    let (nu, mu, z) = get(p);
    let k = exp_i_pi(0.5 - mu) * gamma(0.5 - mu)? / (nu + 0.5) * lowered_q_constant(nu, mu)? * pw(z * z - 1.0, -mu * 0.5);
    Ok(lowered_q_argument_integral(nu, mu, z, cfg)?.scale(k))
}

/// Hyperbolic-angle loop after the integration by parts.
pub(super) fn q_lowered_angle_loop(p: &Params, cfg: &QuadConfig) -> Result<EvalResult> {
    let (nu, mu, z) = get(p);
    let k = exp_i_pi(-mu - 0.5) * gamma(0.5 - mu)? * lowered_q_constant(nu, mu)? * pw(sinh_theta(z), -mu);
    Ok(hyperbolic_loop(theta_of(z), 0.5 - mu, |t| Ok(-(nu + 0.5) * t), false, &[], cfg)?.scale(k))
}

/// The collapsed form: a line integral over (θ, ∞).
pub(super) fn q_lowered_angle_line(p: &Params, cfg: &QuadConfig) -> Result<EvalResult> {
    let (nu, mu, z) = get(p);
    let theta = theta_of(z);
    let f = |d: f64| -> Result<Complex64> {
        let ln_diff = ln_sinh(c(theta + 0.5 * d)) + ln_sinh(c(0.5 * d)) + c(2f64.ln());
        Ok(((mu - 0.5) * ln_diff - (nu + 0.5) * (theta + d)).exp())
    };
    let k = lowered_q_constant(nu, mu)? * rgamma(mu + 0.5) * pw(sinh_theta(z), -mu);
    Ok(exp_sinh(f, cfg)?.scale(k))
}

/// M₋ Weyl loop in the hyperbolic angle for P^{-μ} from P_ν^{1/2}.
pub(super) fn p_negative_order_angle_loop(p: &Params, cfg: &QuadConfig) -> Result<EvalResult> {
    let (nu, mu, z) = get(p);
    let k = exp_i_pi(mu - 0.5) * (2.0 * PI).sqrt() / cos_pi(nu) * gamma(mu + 0.5)? * rgamma(mu - nu) * rgamma(nu + mu + 1.0)
        * pw(sinh_theta(z), mu);
    Ok(hyperbolic_loop(theta_of(z), mu + 0.5, |t| Ok(ln_sinh((nu + 0.5) * t)), false, &[], cfg)?.scale(k))
}

// ------------------------------------------ degree-shift representations

fn k3_constant(nu: Complex64, mu: Complex64) -> Result<Complex64> {
    Ok(exp_i_pi(nu) * gamma(nu + 1.0)? * rgamma(nu - mu + 1.0))
}

/// K₃ Weyl loop in Y around y = z/√(z²-1), from P_0^μ.
pub(super) fn p_from_p0_y_loop(p: &Params, cfg: &QuadConfig) -> Result<EvalResult> {
    let (nu, mu, z) = get(p);
    let y = z / sinh_theta(z);
    let h = |pt: LoopPoint| {
        let ym1 = c(y - 1.0) + pt.offset;
        Ok((-0.5 * ln_z2m1(ym1) + mu * ln_z_plus_root(ym1)).exp())
    };
    let k = k3_constant(nu, mu)? * pw(y * y - 1.0, (nu + 1.0) * 0.5);
    Ok(plain_loop(h, &weyl(c(y), &[ONE, -ONE], cfg), nu + 1.0)?.scale(k))
}

/// The same in the angle φ with z = coth φ.
pub(super) fn p_from_p0_angle_loop(p: &Params, cfg: &QuadConfig) -> Result<EvalResult> {
    let (nu, mu, z) = get(p);
    let phi = phi_of(z);
    let k = k3_constant(nu, mu)? * pw(phi.sinh(), nu + 1.0);
    Ok(hyperbolic_loop(phi, nu + 1.0, |t| Ok(mu * t), false, &[], cfg)?.scale(k))
}

/// ln(u² + 2zu + 1) continued from u = 0 through its two root factors.
fn ln_quadratic(z: Complex64, u: Complex64) -> Complex64 {
    let big = z + (z - ONE).sqrt() * (z + ONE).sqrt();
    (ONE + u * big).ln() + (ONE + u / big).ln()
}

/// Roots of u² + 2zu + 1, the small one without cancellation.
fn quadratic_roots(z: Complex64) -> [Complex64; 2] {
    let big = z + (z - ONE).sqrt() * (z + ONE).sqrt();
    [-ONE / big, -big]
}

/// K₃ Weyl loop in u from P_0^μ.
pub(super) fn p_from_p0_u_loop(p: &Params, cfg: &QuadConfig) -> Result<EvalResult> {
    let (nu, mu, z) = get(p);
    let zc = c(z);
    let h = |pt: LoopPoint| {
        let ln_d = ln_quadratic(zc, pt.offset);
        Ok((-0.5 * ln_d + mu * (zc + pt.offset + (0.5 * ln_d).exp()).ln()).exp())
    };
    let k = k3_constant(nu, mu)? * pw(z * z - 1.0, -mu * 0.5);
    Ok(plain_loop(h, &weyl(ZERO, &quadratic_roots(zc), cfg), nu + 1.0)?.scale(k))
}

/// (1/2πi) e^{iπν} ∮ du u^{-ν-1} (u² + 2zu + 1)^{-1/2}: P_ν(z) from P_0^0 = 1.
fn degree_from_unity(nu: Complex64, z: Complex64, cfg: &QuadConfig) -> Result<EvalResult> {
    let h = |pt: LoopPoint| Ok((-0.5 * ln_quadratic(z, pt.offset)).exp());
    Ok(plain_loop(h, &weyl(ZERO, &quadratic_roots(z), cfg), nu + 1.0)?.scale(exp_i_pi(nu)))
}

pub(super) fn p_from_unity_u_loop(p: &Params, cfg: &QuadConfig) -> Result<EvalResult> {
    let (nu, _, z) = get(p);
    degree_from_unity(nu, c(z), cfg)
}

/// K₃ Weyl loop in φ from Q_0^μ, as printed (no e^{-iπμ} on the left).
pub(super) fn q_from_q0_angle_loop(p: &Params, cfg: &QuadConfig) -> Result<EvalResult> {
    let (nu, mu, z) = get(p);
    let phi = phi_of(z);
    let k = k3_constant(nu, mu)? * PI / sin_pi(mu) * pw(phi.sinh(), nu + 1.0);
    Ok(hyperbolic_loop(phi, nu + 1.0, |t| Ok(ln_sinh(mu * t)), false, &[], cfg)?.scale(k))
}

/// P₃ Weyl loop in φ from P_0^μ, giving P_{-λ}^μ.
pub(super) fn p_lowered_degree_angle_loop(p: &Params, cfg: &QuadConfig) -> Result<EvalResult> {
    let (_, mu, z) = get(p);
    let lam = p.get("lambda");
    let phi = phi_of(z);
    let k = exp_i_pi(lam - 1.0) * gamma(lam)? * rgamma(lam - mu) * pw(phi.sinh(), lam);
    Ok(hyperbolic_loop(phi, lam, |t| Ok(mu * t), false, &[], cfg)?.scale(k))
}

/// P₃ finite loop (0, φ+, 0) from Q_0^μ, giving e^{-iπμ}Q_{-λ}^μ; the
/// partial integration leaves cosh μφ' and no 1/Γ(μ).
pub(super) fn q_lowered_degree_finite_loop(p: &Params, cfg: &QuadConfig) -> Result<EvalResult> {
    let (_, mu, z) = get(p);
    let lam = p.get("lambda");
    let phi = phi_of(z);
    let k = gamma(lam)? * gamma(mu - lam + 1.0)? * pw(phi.sinh(), lam);
    Ok(hyperbolic_loop(phi, lam, |t| Ok(ln_cosh(mu * t)), true, &[], cfg)?.scale(k))
}

/// The same loop with sinh μφ' and 1/Γ(μ), as printed, for Q_{-λ}^μ.
pub(super) fn q_lowered_degree_finite_loop_printed(p: &Params, cfg: &QuadConfig) -> Result<EvalResult> {
    let (_, mu, z) = get(p);
    let lam = p.get("lambda");
    let phi = phi_of(z);
    let k = gamma(lam)? * gamma(mu - lam + 1.0)? * rgamma(mu) * pw(phi.sinh(), lam);
    Ok(hyperbolic_loop(phi, lam, |t| Ok(ln_sinh(mu * t)), true, &[], cfg)?.scale(k))
}

// ------------------------------------------------------- double integrals

/// Phase of the ray from `center` to the endpoint 1, taken in (-2π, 0] so
/// it continues -π from real centres above 1.
fn phase_towards_one(to_end: Complex64) -> f64 {
    let a = to_end.arg();
    if a > 0.0 {
        a - 2.0 * PI
    } else {
        a
    }
}

/// P_ν^μ from M₊^μ K₃^ν acting on P_0^0 = 1.
pub(super) fn double_p_from_unity(p: &Params, cfg: &QuadConfig) -> Result<EvalResult> {
    let (nu, mu, z) = get(p);
    let h = |pt: LoopPoint| -> Result<Complex64> {
        let zm1 = -pt.to_end.unwrap_or(c(1.0 - z) - pt.offset);
        if zm1.norm() < INNER_ENDPOINT {
            // P_ν(1) = 1
            return Ok(ONE);
        }
        Ok(degree_from_unity(nu, zm1 + ONE, cfg)?.value)
    };
    let outer = plain_loop(h, &riemann(c(z), ONE, -PI, &[-ONE], cfg), mu + 1.0)?;
    Ok(outer.scale(exp_i_pi(nu) * gamma(mu + 1.0)? * pw(z * z - 1.0, mu * 0.5) * exp_i_pi(-nu)))
}

/// Q_ν^μ from M₊^μ K₃^ν acting on Q_0^0.
pub(super) fn double_q_from_q00(p: &Params, cfg: &QuadConfig) -> Result<EvalResult> {
    let (nu, mu, z) = get(p);
    let inner = |big_z: Complex64| -> Result<Complex64> {
        let root = (big_z - ONE).sqrt() * (big_z + ONE).sqrt();
        let h = |pt: LoopPoint| {
            let u = pt.offset;
            let ln_d = ln_quadratic(big_z, u);
            let log_term = ((u + big_z + (0.5 * ln_d).exp()) / root).ln();
            Ok((-0.5 * ln_d).exp() * log_term)
        };
        Ok(plain_loop(h, &weyl(ZERO, &quadratic_roots(big_z), cfg), nu + 1.0)?.value)
    };
    // the inner loop loses about (2ν+1)t/ln 10 digits to cancellation at Z = cosh t,
    // while the outer integrand decays like e^{-(ν+μ+1)t}; stop where they meet
    let cutoff = (37.0 / (2.0 * nu.re + 1.0)).min(ANGLE_CUTOFF);
    let outer = outer_angle_loop(theta_of(z), mu + 1.0, cutoff, inner, cfg)?;
    Ok(outer.scale(exp_i_pi(nu + mu) * gamma(mu + 1.0)? * pw(z * z - 1.0, mu * 0.5)))
}

/// Outer Weyl loop (1/2πi)∮ (Z - z)^{-a} g(Z) dZ written in Z = cosh t, so the
/// algebraic decay of g becomes exponential.
fn outer_angle_loop<G>(theta: f64, a: Complex64, cutoff: f64, g: G, cfg: &QuadConfig) -> Result<EvalResult>
where
    G: Fn(Complex64) -> Result<Complex64>,
{
    let rest = |t: Complex64| -> Result<Complex64> {
        if t.re > cutoff {
            return Ok(c(f64::NEG_INFINITY));
        }
        Ok(ln_sinh(t) + g(t.cosh())?.ln())
    };
    hyperbolic_loop(theta, a, rest, false, &[ZERO, Complex64::new(0.0, PI), Complex64::new(0.0, -PI)], cfg)
}

/// P_ν^μ from M₊^μ M₊^ν acting on P_ν^{-ν}.
pub(super) fn double_p_two_raises(p: &Params, cfg: &QuadConfig) -> Result<EvalResult> {
    let (nu, mu, z) = get(p);
    let inner = |end: Complex64| -> Result<Complex64> {
        // loop around Z' with ray to 1; `end` = 1 - Z' exactly
        if end.norm() < INNER_ENDPOINT {
            return Ok(ONE);
        }
        let h = |pt: LoopPoint| {
            let zm1 = -pt.to_end.unwrap_or(end - pt.offset);
            Ok((nu * ln_z2m1(zm1)).exp())
        };
        let spec = riemann(ZERO, end, phase_towards_one(end), &[end - c(2.0)], cfg);
        Ok(plain_loop(h, &spec, nu + 1.0)?.value * pw(2.0, -nu))
    };
    let h = |pt: LoopPoint| inner(pt.to_end.unwrap_or(c(1.0 - z) - pt.offset));
    let outer = plain_loop(h, &riemann(c(z), ONE, -PI, &[-ONE], cfg), mu + 1.0)?;
    Ok(outer.scale(gamma(mu + 1.0)? * pw(z * z - 1.0, mu * 0.5)))
}

/// e^{-iπμ} Q_ν^μ from M₊^μ M₊^{-ν-1} acting on Q_ν^{ν+1}, both loops in
/// the hyperbolic angle.
pub(super) fn double_q_two_raises(p: &Params, cfg: &QuadConfig) -> Result<EvalResult> {
    let (nu, mu, z) = get(p);
    let poles = [ZERO, Complex64::new(0.0, PI), Complex64::new(0.0, -PI)];
    let inner = |t: Complex64| -> Result<Complex64> {
        let rest = |s: Complex64| -> Result<Complex64> {
            if s.re > ANGLE_CUTOFF {
                return Ok(c(f64::NEG_INFINITY));
            }
            Ok((-2.0 * nu - 1.0) * ln_sinh(s))
        };
        Ok(hyperbolic_loop_at(t, -nu, rest, false, &poles, cfg)?.value)
    };
    let rest = |t: Complex64| -> Result<Complex64> {
        if t.re > ANGLE_CUTOFF {
            return Ok(c(f64::NEG_INFINITY));
        }
        Ok(ln_sinh(t) + inner(t)?.ln())
    };
    let outer = hyperbolic_loop(theta_of(z), mu + 1.0, rest, false, &poles, cfg)?;
    let k = exp_i_pi(mu - nu) * pw(2.0, nu) * PI / sin_pi(nu) * gamma(mu + 1.0)? * pw(z * z - 1.0, mu * 0.5);
    Ok(outer.scale(k))
}

/// The two loops of the K₃^ν P₃^{μ-1} chain on Q_{μ-1}^μ, in the scaled
/// variables t (Weyl loop around 1) and u (finite loop from 0 around 1),
/// for the argument z = y/√(y²-1).
fn degree_pair_loops(nu: Complex64, mu: Complex64, y: f64, cfg: &QuadConfig) -> Result<EvalResult> {
    let b = (y - 1.0) * 0.5;
    let inner = |t: Complex64| -> Result<Complex64> {
        let h = |pt: LoopPoint| {
            let u = -pt.to_end.unwrap_or(-ONE - pt.offset);
            Ok(((mu - 0.5) * (u.ln() + (ONE + u * t * b).ln())).exp())
        };
        let pole = -ONE / (t * b);
        Ok(plain_loop(h, &riemann(ONE, ZERO, -PI, &[pole], cfg), mu)?.value)
    };
    let h = |pt: LoopPoint| {
        let t = ONE + pt.offset;
        Ok((-0.5 * (ONE + t * b).ln()).exp() * inner(t)?)
    };
    plain_loop(h, &weyl(ONE, &[c(-1.0 / b)], cfg), nu + 1.0)
}

fn degree_pair_gammas(nu: Complex64, mu: Complex64) -> Result<Complex64> {
    Ok(exp_i_pi(nu) * PI.sqrt() * gamma(nu + 1.0)? * gamma(mu + 1.0)? * rgamma(nu - mu + 1.0) * rgamma(mu + 0.5))
}

/// e^{-iπμ} Q_ν^μ(z) from the degree-pair chain, prefactor rederived from
/// the two single-loop relations: π/sin πμ and ½(y-1)^{(1-ν)/2}(y+1)^{(ν+1)/2}.
pub(super) fn double_q_degree_pair(p: &Params, cfg: &QuadConfig) -> Result<EvalResult> {
    let (nu, mu, z) = get(p);
    let y = z / sinh_theta(z);
    let k = degree_pair_gammas(nu, mu)? * PI / sin_pi(mu) * 0.5 * pw(y - 1.0, (ONE - nu) * 0.5) * pw(y + 1.0, (nu + 1.0) * 0.5);
    Ok(degree_pair_loops(nu, mu, y, cfg)?.scale(k))
}

/// As above with the printed prefactor π/sin πν · 2^{-ν-1}(2/(y-1))^{-ν}.
pub(super) fn double_q_degree_pair_printed(p: &Params, cfg: &QuadConfig) -> Result<EvalResult> {
    let (nu, mu, z) = get(p);
    let y = z / sinh_theta(z);
    let k = degree_pair_gammas(nu, mu)? * PI / sin_pi(nu) * pw(2.0, -nu - 1.0) * pw(2.0 / (y - 1.0), -nu);
    Ok(degree_pair_loops(nu, mu, y, cfg)?.scale(k))
}

// ------------------------------------------------------- confluent limits

/// ν^{-μ} e^{-iπμ} Q_ν^μ(cosh(ϑ/ν)).
pub(super) fn confluent_q(p: &Params, _: &QuadConfig) -> Result<EvalResult> {
    let (nu, mu) = (p.get("nu"), p.get("mu"));
    let x = p.get("vartheta").re / nu.re;
    let arg = LegendreArgument::from_zm1(c(2.0 * (0.5 * x).sinh().powi(2)))?;
    Ok(eval_legendre(FunctionKind::QOffCut, DegreeOrder::new(nu, mu), &arg)?.scale(exp_i_pi(-mu) * (-mu * nu.ln()).exp()))
}

/// ν^μ P_ν^{-μ}(cosh(ϑ/ν)).
pub(super) fn confluent_p(p: &Params, _: &QuadConfig) -> Result<EvalResult> {
    let (nu, mu) = (p.get("nu"), p.get("mu"));
    let x = p.get("vartheta").re / nu.re;
    let arg = LegendreArgument::from_zm1(c(2.0 * (0.5 * x).sinh().powi(2)))?;
    Ok(eval_legendre(FunctionKind::POffCut, DegreeOrder::new(nu, -mu), &arg)?.scale((mu * nu.ln()).exp()))
}

pub(super) fn bessel_k_side(p: &Params, cfg: &QuadConfig) -> Result<EvalResult> {
    bessel_k(p.get("mu"), p.get("vartheta"), cfg)
}

pub(super) fn bessel_i_side(p: &Params, cfg: &QuadConfig) -> Result<EvalResult> {
    bessel_i(p.get("mu"), p.get("vartheta").re, cfg)
}

pub(super) fn bessel_k_shifted(p: &Params, cfg: &QuadConfig) -> Result<EvalResult> {
    bessel_k(p.get("mu") + p.get("lambda"), p.get("vartheta"), cfg)
}

/// Weyl loop in u acting on K_μ(√(ϑ² + 2uϑ)).
pub(super) fn bessel_k_order_loop(p: &Params, cfg: &QuadConfig) -> Result<EvalResult> {
    let (mu, lam, x) = (p.get("mu"), p.get("lambda"), p.get("vartheta"));
    let h = |u: Complex64| -> Result<Complex64> {
        let ln_ratio = x.ln() - (x + u * 2.0).ln();
        let w = x * ((u * 2.0 / x + ONE).sqrt());
        Ok((mu * 0.5 * ln_ratio).exp() * bessel_k(mu, w, cfg)?.value)
    };
    let spec = weyl(ZERO, &[-x * 0.5], cfg);
    loop_integral(h, &spec, lam)
}
