//! Sides of the structural, generating-function and operator-consistency entries.

use num_complex::Complex64;
use std::f64::consts::PI;

use super::Params;
use crate::error::Result;
use crate::frac::{
    apply_order_operator, coefficients, degree_lower_decomposition, frac_degree_shift, frac_order_shift, mminus_phase_routes,
    order_raise_decomposition, FracOpSpec, FracOperator, Representation,
};
use crate::genfun::{genfun_closed, genfun_series, GenFunFamily, GenFunSpec, QLogReading, MAX_TERMS};
use crate::legendre::{
    closed_form, eval_legendre, eval_with_derivatives, q_on_cut_with_reading, q_symmetries, step_degree, step_order, whipple,
    ClosedForm, DegreeOrder, Direction, FunctionKind, LegendreArgument, OnCutReading, SymmetryRelation,
};
use crate::numerics::{c, exp_i_pi, gamma_ratio, sin_pi, EvalResult, ONE, ZERO};
use crate::quad::QuadConfig;

use FunctionKind::{POffCut as P, QOffCut as Q};

fn d(p: &Params) -> DegreeOrder {
    DegreeOrder::new(p.get("nu"), p.get("mu"))
}

fn arg(p: &Params) -> Result<LegendreArgument> {
    LegendreArgument::off_cut(p.get("z"))
}

fn f(kind: FunctionKind, nu: Complex64, mu: Complex64, p: &Params) -> Result<EvalResult> {
    eval_legendre(kind, DegreeOrder::new(nu, mu), &arg(p)?)
}

fn exact(v: Complex64) -> Result<EvalResult> {
    Ok(EvalResult::exact(v))
}

// ------------------------------------------------------------ structural

pub(super) fn q_scaled(p: &Params, _: &QuadConfig) -> Result<EvalResult> {
    Ok(f(Q, p.get("nu"), p.get("mu"), p)?.scale(exp_i_pi(-p.get("mu"))))
}

pub(super) fn q_reflected_order(p: &Params, _: &QuadConfig) -> Result<EvalResult> {
    let (nu, mu) = (p.get("nu"), p.get("mu"));
    let k = gamma_ratio(&[nu + mu + ONE], &[nu - mu + ONE])? * exp_i_pi(mu);
    Ok(f(Q, nu, -mu, p)?.scale(k))
}

pub(super) fn p_plain(p: &Params, _: &QuadConfig) -> Result<EvalResult> {
    f(P, p.get("nu"), p.get("mu"), p)
}

pub(super) fn q_plain(p: &Params, _: &QuadConfig) -> Result<EvalResult> {
    f(Q, p.get("nu"), p.get("mu"), p)
}

pub(super) fn p_reflected_degree(p: &Params, _: &QuadConfig) -> Result<EvalResult> {
    f(P, -p.get("nu") - ONE, p.get("mu"), p)
}

/// e^{-iπμ}Q_ν^μ(z) through the degree/order exchange evaluated at y = z/√(z²-1).
pub(super) fn q_by_whipple(p: &Params, _: &QuadConfig) -> Result<EvalResult> {
    let a = arg(p)?;
    whipple(Q, d(p), a.z() / a.sqrt_z2m1())
}

pub(super) fn p_by_q(p: &Params, _: &QuadConfig) -> Result<EvalResult> {
    q_symmetries(SymmetryRelation::PViaQ, d(p), &arg(p)?)
}

pub(super) fn q_by_p(p: &Params, _: &QuadConfig) -> Result<EvalResult> {
    q_symmetries(SymmetryRelation::QViaP, d(p), &arg(p)?)
}

fn on_cut_real_part(v: EvalResult) -> Result<EvalResult> {
    exact(c(v.value.re))
}

pub(super) fn q_cut_symmetric(p: &Params, _: &QuadConfig) -> Result<EvalResult> {
    q_on_cut_with_reading(d(p), p.get("x").re, OnCutReading::Symmetric)
}

pub(super) fn q_cut_symmetric_re(p: &Params, cfg: &QuadConfig) -> Result<EvalResult> {
    on_cut_real_part(q_cut_symmetric(p, cfg)?)
}

pub(super) fn q_cut_printed(p: &Params, _: &QuadConfig) -> Result<EvalResult> {
    q_on_cut_with_reading(d(p), p.get("x").re, OnCutReading::Printed)
}

pub(super) fn q_cut_printed_re(p: &Params, cfg: &QuadConfig) -> Result<EvalResult> {
    on_cut_real_part(q_cut_printed(p, cfg)?)
}

pub(super) fn p_cut(p: &Params, _: &QuadConfig) -> Result<EvalResult> {
    eval_legendre(FunctionKind::PCut, d(p), &LegendreArgument::on_cut(p.get("x").re)?)
}

pub(super) fn p_cut_re(p: &Params, cfg: &QuadConfig) -> Result<EvalResult> {
    on_cut_real_part(p_cut(p, cfg)?)
}

/// Derivative part of the Legendre operator, (1-z²)F'' - 2zF'.
fn ode_derivative_part(kind: FunctionKind, p: &Params) -> Result<EvalResult> {
    let a = arg(p)?;
    let [_, d1, d2] = eval_with_derivatives(kind, d(p), &a)?;
    let z = a.z();
    let v = (ONE - z * z) * d2.value - z * 2.0 * d1.value;
    exact(v)
}

/// Minus the non-derivative part, [μ²/(1-z²) - ν(ν+1)]F.
fn ode_potential_part(kind: FunctionKind, p: &Params) -> Result<EvalResult> {
    let a = arg(p)?;
    let (nu, mu) = (p.get("nu"), p.get("mu"));
    let z = a.z();
    let v = eval_legendre(kind, d(p), &a)?.value;
    exact((mu * mu / (ONE - z * z) - nu * (nu + ONE)) * v)
}

pub(super) fn ode_p_derivatives(p: &Params, _: &QuadConfig) -> Result<EvalResult> {
    ode_derivative_part(P, p)
}

pub(super) fn ode_p_potential(p: &Params, _: &QuadConfig) -> Result<EvalResult> {
    ode_potential_part(P, p)
}

pub(super) fn ode_q_derivatives(p: &Params, _: &QuadConfig) -> Result<EvalResult> {
    ode_derivative_part(Q, p)
}

pub(super) fn ode_q_potential(p: &Params, _: &QuadConfig) -> Result<EvalResult> {
    ode_potential_part(Q, p)
}

/// Recurrence entries act on P or Q according to the parameter `q` (0 or 1).
fn kind_of(p: &Params) -> FunctionKind {
    if p.get("q").re > 0.5 {
        Q
    } else {
        P
    }
}

pub(super) fn order_raise_bracket(p: &Params, _: &QuadConfig) -> Result<EvalResult> {
    step_order(kind_of(p), d(p), &arg(p)?, Direction::Raise)
}

pub(super) fn order_raised(p: &Params, _: &QuadConfig) -> Result<EvalResult> {
    Ok(f(kind_of(p), p.get("nu"), p.get("mu") + ONE, p)?.scale(-ONE))
}

pub(super) fn order_lower_bracket(p: &Params, _: &QuadConfig) -> Result<EvalResult> {
    step_order(kind_of(p), d(p), &arg(p)?, Direction::Lower)
}

pub(super) fn order_lowered(p: &Params, _: &QuadConfig) -> Result<EvalResult> {
    let (nu, mu) = (p.get("nu"), p.get("mu"));
    Ok(f(kind_of(p), nu, mu - ONE, p)?.scale((nu + mu) * (nu - mu + ONE)))
}

pub(super) fn degree_raise_bracket(p: &Params, _: &QuadConfig) -> Result<EvalResult> {
    step_degree(kind_of(p), d(p), &arg(p)?, Direction::Raise)
}

pub(super) fn degree_raised(p: &Params, _: &QuadConfig) -> Result<EvalResult> {
    let (nu, mu) = (p.get("nu"), p.get("mu"));
    Ok(f(kind_of(p), nu + ONE, mu, p)?.scale(-(nu - mu + ONE)))
}

pub(super) fn degree_lower_bracket(p: &Params, _: &QuadConfig) -> Result<EvalResult> {
    step_degree(kind_of(p), d(p), &arg(p)?, Direction::Lower)
}

pub(super) fn degree_lowered(p: &Params, _: &QuadConfig) -> Result<EvalResult> {
    let (nu, mu) = (p.get("nu"), p.get("mu"));
    Ok(f(kind_of(p), nu - ONE, mu, p)?.scale(nu + mu))
}

fn closed(which: ClosedForm, dd: DegreeOrder, p: &Params) -> Result<EvalResult> {
    closed_form(which, dd, &arg(p)?)
}

pub(super) fn closed_p0mu(p: &Params, _: &QuadConfig) -> Result<EvalResult> {
    closed(ClosedForm::P0mu, DegreeOrder::new(ZERO, p.get("mu")), p)
}

pub(super) fn direct_p0mu(p: &Params, _: &QuadConfig) -> Result<EvalResult> {
    f(P, ZERO, p.get("mu"), p)
}

pub(super) fn closed_q0mu(p: &Params, _: &QuadConfig) -> Result<EvalResult> {
    closed(ClosedForm::Q0mu, DegreeOrder::new(ZERO, p.get("mu")), p)
}

pub(super) fn direct_q0mu(p: &Params, _: &QuadConfig) -> Result<EvalResult> {
    f(Q, ZERO, p.get("mu"), p)
}

pub(super) fn closed_q_half(p: &Params, _: &QuadConfig) -> Result<EvalResult> {
    closed(ClosedForm::Qhalf, DegreeOrder::new(p.get("nu"), c(0.5)), p)
}

pub(super) fn direct_q_half(p: &Params, _: &QuadConfig) -> Result<EvalResult> {
    Ok(f(Q, p.get("nu"), c(0.5), p)?.scale(exp_i_pi(c(-0.5))))
}

pub(super) fn closed_p_half(p: &Params, _: &QuadConfig) -> Result<EvalResult> {
    closed(ClosedForm::Phalf, DegreeOrder::new(p.get("nu"), c(0.5)), p)
}

pub(super) fn direct_p_half(p: &Params, _: &QuadConfig) -> Result<EvalResult> {
    f(P, p.get("nu"), c(0.5), p)
}

pub(super) fn closed_q_top(p: &Params, _: &QuadConfig) -> Result<EvalResult> {
    let nu = p.get("nu");
    closed(ClosedForm::QnuNuPlus1, DegreeOrder::new(nu, nu + ONE), p)
}

pub(super) fn direct_q_top(p: &Params, _: &QuadConfig) -> Result<EvalResult> {
    let nu = p.get("nu");
    Ok(f(Q, nu, nu + ONE, p)?.scale(exp_i_pi(-(nu + ONE))))
}

pub(super) fn closed_p_bottom(p: &Params, _: &QuadConfig) -> Result<EvalResult> {
    let nu = p.get("nu");
    closed(ClosedForm::PnuMinusNu, DegreeOrder::new(nu, -nu), p)
}

pub(super) fn direct_p_bottom(p: &Params, _: &QuadConfig) -> Result<EvalResult> {
    let nu = p.get("nu");
    f(P, nu, -nu, p)
}

/// The two orderings of K₃^ν P₃^{ν+1} on the ν = 0 function carry equal coefficients.
pub(super) fn commutator_first(p: &Params, _: &QuadConfig) -> Result<EvalResult> {
    let (nu, mu) = (p.get("nu"), p.get("mu"));
    let a = coefficients(DegreeOrder::new(-nu - ONE, mu), nu).nprime_plus;
    let b = coefficients(DegreeOrder::new(ZERO, mu), nu + ONE).nprime_minus;
    coefficient_product(a.value(), b.value())
}

pub(super) fn commutator_second(p: &Params, _: &QuadConfig) -> Result<EvalResult> {
    let (nu, mu) = (p.get("nu"), p.get("mu"));
    let a = coefficients(DegreeOrder::new(nu, mu), nu + ONE).nprime_minus;
    let b = coefficients(DegreeOrder::new(ZERO, mu), nu).nprime_plus;
    coefficient_product(a.value(), b.value())
}

fn coefficient_product(a: Option<Complex64>, b: Option<Complex64>) -> Result<EvalResult> {
    match (a, b) {
        (Some(a), Some(b)) => exact(a * b),
        _ => Err(crate::error::Error::PrefactorPole("coefficient pole in the commutator product".into())),
    }
}

// ----------------------------------------------------- generating functions

/// Geometric tail ratio q → number of terms for a 1e-14 tail.
fn terms_for(q: f64) -> usize {
    ((1e-14f64.ln() / q.ln()).ceil() as usize + 5).min(MAX_TERMS)
}

fn genfun_spec(family: GenFunFamily, kind: FunctionKind, p: &Params) -> Result<GenFunSpec> {
    let a = arg(p)?;
    let dd = match family {
        GenFunFamily::DoubleSeriesPK | GenFunFamily::LegendrePClassic | GenFunFamily::LegendreQClassic => DegreeOrder::real(0.0, 0.0),
        GenFunFamily::PnmuClassic => DegreeOrder::new(ZERO, p.get("mu")),
        _ => d(p),
    };
    let frac = p.get("frac").re;
    let mut spec = GenFunSpec::new(family, kind, dd, a, ZERO);
    if family == GenFunFamily::DoubleSeriesPK {
        let order_radius = GenFunSpec::new(GenFunFamily::OrderRaiseMplus, kind, dd, a, ZERO).radius()?;
        spec = spec.with_inner_step(c(0.3 * frac * order_radius));
    }
    let u = Complex64::from_polar(frac * spec.radius()?, p.get("angle").re);
    Ok(spec.with_step(u).with_terms(terms_for(frac)))
}

macro_rules! genfun_sides {
    ($closed:ident, $series:ident, $family:expr, $kind:expr, $reading:expr) => {
        pub(super) fn $closed(p: &Params, _: &QuadConfig) -> Result<EvalResult> {
            genfun_closed(&genfun_spec($family, $kind, p)?.with_q_log($reading))
        }

        pub(super) fn $series(p: &Params, _: &QuadConfig) -> Result<EvalResult> {
            genfun_series(&genfun_spec($family, $kind, p)?)
        }
    };
}

use GenFunFamily as G;
use QLogReading::{Corrected, Printed};

genfun_sides!(gf_raise_p_closed, gf_raise_p_series, G::OrderRaiseMplus, P, Corrected);
genfun_sides!(gf_raise_q_closed, gf_raise_q_series, G::OrderRaiseMplus, Q, Corrected);
genfun_sides!(gf_lower_p_closed, gf_lower_p_series, G::OrderLowerMminus, P, Corrected);
genfun_sides!(gf_lower_q_closed, gf_lower_q_series, G::OrderLowerMminus, Q, Corrected);
genfun_sides!(gf_p3_p_closed, gf_p3_p_series, G::DegreeLowerP3, P, Corrected);
genfun_sides!(gf_p3_q_closed, gf_p3_q_series, G::DegreeLowerP3, Q, Corrected);
genfun_sides!(gf_k3_p_closed, gf_k3_p_series, G::DegreeRaiseK3, P, Corrected);
genfun_sides!(gf_k3_q_closed, gf_k3_q_series, G::DegreeRaiseK3, Q, Corrected);
genfun_sides!(gf_pn_closed, gf_pn_series, G::LegendrePClassic, P, Corrected);
genfun_sides!(gf_qn_closed, gf_qn_series, G::LegendreQClassic, Q, Corrected);
genfun_sides!(gf_qn_printed_closed, gf_qn_printed_series, G::LegendreQClassic, Q, Printed);
genfun_sides!(gf_pnmu_closed, gf_pnmu_series, G::PnmuClassic, P, Corrected);
genfun_sides!(gf_double_p_closed, gf_double_p_series, G::DoubleSeriesPK, P, Corrected);
genfun_sides!(gf_double_q_closed, gf_double_q_series, G::DoubleSeriesPK, Q, Corrected);

// ------------------------------------------------- operator consistency

fn weyl(op: FracOperator, lambda: Complex64, cfg: &QuadConfig) -> FracOpSpec {
    FracOpSpec::weyl(op, lambda).with_config(*cfg)
}

fn riemann(op: FracOperator, lambda: Complex64, cfg: &QuadConfig) -> Result<FracOpSpec> {
    Ok(FracOpSpec::new(op, lambda, Representation::Riemann)?.with_config(*cfg))
}

fn lam(p: &Params) -> Complex64 {
    p.get("lambda")
}

pub(super) fn frac_q_raise(p: &Params, cfg: &QuadConfig) -> Result<EvalResult> {
    frac_order_shift(Q, d(p), &arg(p)?, &weyl(FracOperator::Mplus, lam(p), cfg))
}

pub(super) fn q_order_plus_lambda(p: &Params, _: &QuadConfig) -> Result<EvalResult> {
    f(Q, p.get("nu"), p.get("mu") + lam(p), p)
}

pub(super) fn p_order_plus_lambda(p: &Params, _: &QuadConfig) -> Result<EvalResult> {
    f(P, p.get("nu"), p.get("mu") + lam(p), p)
}

pub(super) fn q_order_minus_lambda(p: &Params, _: &QuadConfig) -> Result<EvalResult> {
    f(Q, p.get("nu"), p.get("mu") - lam(p), p)
}

pub(super) fn p_order_minus_lambda(p: &Params, _: &QuadConfig) -> Result<EvalResult> {
    f(P, p.get("nu"), p.get("mu") - lam(p), p)
}

pub(super) fn p_degree_plus_lambda(p: &Params, _: &QuadConfig) -> Result<EvalResult> {
    f(P, p.get("nu") + lam(p), p.get("mu"), p)
}

pub(super) fn q_degree_plus_lambda(p: &Params, _: &QuadConfig) -> Result<EvalResult> {
    f(Q, p.get("nu") + lam(p), p.get("mu"), p)
}

pub(super) fn p_degree_minus_lambda(p: &Params, _: &QuadConfig) -> Result<EvalResult> {
    f(P, p.get("nu") - lam(p), p.get("mu"), p)
}

pub(super) fn q_degree_minus_lambda(p: &Params, _: &QuadConfig) -> Result<EvalResult> {
    f(Q, p.get("nu") - lam(p), p.get("mu"), p)
}

/// The integer-λ raise against the order recurrence, F^{μ+n} = -bracket(F^{μ+n-1}).
pub(super) fn q_raised_by_recurrence(p: &Params, _: &QuadConfig) -> Result<EvalResult> {
    let n = lam(p).re.round();
    let dd = DegreeOrder::new(p.get("nu"), p.get("mu") + (n - 1.0));
    Ok(step_order(Q, dd, &arg(p)?, Direction::Raise)?.scale(-ONE))
}

pub(super) fn frac_p_raise_riemann(p: &Params, cfg: &QuadConfig) -> Result<EvalResult> {
    frac_order_shift(P, d(p), &arg(p)?, &riemann(FracOperator::Mplus, lam(p), cfg)?)
}

pub(super) fn frac_p_raise_weyl(p: &Params, cfg: &QuadConfig) -> Result<EvalResult> {
    frac_order_shift(P, d(p), &arg(p)?, &weyl(FracOperator::Mplus, lam(p), cfg))
}

fn two_term(p_coef: Complex64, q_coef: Complex64, p_val: Complex64, q_val: Complex64) -> Result<EvalResult> {
    exact(p_coef * p_val + q_coef * q_val)
}

/// P^{μ+λ} and e^{-iπ(μ+λ)}Q^{μ+λ}.
fn raised_pair(p: &Params) -> Result<(Complex64, Complex64)> {
    let m = p.get("mu") + lam(p);
    Ok((f(P, p.get("nu"), m, p)?.value, f(Q, p.get("nu"), m, p)?.value * exp_i_pi(-m)))
}

pub(super) fn p_raise_two_term(p: &Params, _: &QuadConfig) -> Result<EvalResult> {
    let t = order_raise_decomposition(d(p), lam(p))?;
    let (pv, qv) = raised_pair(p)?;
    two_term(t.p_coef, t.q_coef, pv, qv)
}

/// With the Q coefficient as printed, -(2/π) sin πν sin πλ.
pub(super) fn p_raise_two_term_printed(p: &Params, _: &QuadConfig) -> Result<EvalResult> {
    let t = order_raise_decomposition(d(p), lam(p))?;
    let (pv, qv) = raised_pair(p)?;
    let q_coef = -sin_pi(p.get("nu")) * sin_pi(lam(p)) * (2.0 / PI);
    two_term(t.p_coef, q_coef, pv, qv)
}

pub(super) fn frac_q_lower(p: &Params, cfg: &QuadConfig) -> Result<EvalResult> {
    frac_order_shift(Q, d(p), &arg(p)?, &weyl(FracOperator::Mminus, lam(p), cfg))
}

pub(super) fn frac_p_lower(p: &Params, cfg: &QuadConfig) -> Result<EvalResult> {
    frac_order_shift(P, d(p), &arg(p)?, &weyl(FracOperator::Mminus, lam(p), cfg))
}

pub(super) fn frac_k3_p(p: &Params, cfg: &QuadConfig) -> Result<EvalResult> {
    frac_degree_shift(P, d(p), &arg(p)?, &weyl(FracOperator::K3, lam(p), cfg))
}

pub(super) fn frac_k3_q(p: &Params, cfg: &QuadConfig) -> Result<EvalResult> {
    frac_degree_shift(Q, d(p), &arg(p)?, &weyl(FracOperator::K3, lam(p), cfg))
}

pub(super) fn frac_p3_p(p: &Params, cfg: &QuadConfig) -> Result<EvalResult> {
    frac_degree_shift(P, d(p), &arg(p)?, &weyl(FracOperator::P3, lam(p), cfg))
}

pub(super) fn frac_p3_q_weyl(p: &Params, cfg: &QuadConfig) -> Result<EvalResult> {
    frac_degree_shift(Q, d(p), &arg(p)?, &weyl(FracOperator::P3, lam(p), cfg))
}

pub(super) fn frac_p3_q_riemann(p: &Params, cfg: &QuadConfig) -> Result<EvalResult> {
    frac_degree_shift(Q, d(p), &arg(p)?, &riemann(FracOperator::P3, lam(p), cfg)?)
}

/// P_{ν-λ}^μ and e^{-iπμ}Q_{ν-λ}^μ.
fn lowered_pair(p: &Params) -> Result<(Complex64, Complex64)> {
    let (nu, mu) = (p.get("nu") - lam(p), p.get("mu"));
    Ok((f(P, nu, mu, p)?.value, f(Q, nu, mu, p)?.value * exp_i_pi(-mu)))
}

pub(super) fn p3_q_two_term(p: &Params, _: &QuadConfig) -> Result<EvalResult> {
    let t = degree_lower_decomposition(d(p), lam(p))?;
    let (pv, qv) = lowered_pair(p)?;
    two_term(t.p_coef, t.q_coef, pv, qv)
}

/// As printed: unit coefficient on Q and -π cos πμ sin πλ / sin π(ν-λ+μ) on P.
pub(super) fn p3_q_two_term_printed(p: &Params, _: &QuadConfig) -> Result<EvalResult> {
    let (nu, mu, l) = (p.get("nu"), p.get("mu"), lam(p));
    let (pv, qv) = lowered_pair(p)?;
    let p_coef = -crate::numerics::cos_pi(mu) * sin_pi(l) * PI / sin_pi(nu - l + mu);
    two_term(p_coef, ONE, pv, qv)
}

/// M₊^{λ₂} applied to the quadrature result of M₊^{λ₁} on e^{-iπμ}Q^μ.
pub(super) fn frac_semigroup_composed(p: &Params, cfg: &QuadConfig) -> Result<EvalResult> {
    let (dd, l1, l2) = (d(p), p.get("lambda1"), p.get("lambda2"));
    let first = weyl(FracOperator::Mplus, l1, cfg);
    let inner = |a: &LegendreArgument| -> Result<Complex64> {
        // frac_order_shift returns Q^{μ+λ₁}; the operator acts on e^{-iπ(μ+λ₁)}Q^{μ+λ₁}
        Ok(frac_order_shift(Q, dd, a, &first)?.value * exp_i_pi(-(dd.mu + l1)))
    };
    let r = apply_order_operator(inner, dd.mu + l1, l2, &arg(p)?, Direction::Raise, &weyl(FracOperator::Mplus, l2, cfg))?;
    Ok(r.scale(exp_i_pi(dd.mu + l1 + l2)))
}

pub(super) fn frac_semigroup_direct(p: &Params, cfg: &QuadConfig) -> Result<EvalResult> {
    let l = p.get("lambda1") + p.get("lambda2");
    frac_order_shift(Q, d(p), &arg(p)?, &weyl(FracOperator::Mplus, l, cfg))
}

pub(super) fn mminus_route_printed(p: &Params, cfg: &QuadConfig) -> Result<EvalResult> {
    Ok(mminus_phase_routes(d(p), &arg(p)?, lam(p), &weyl(FracOperator::Mminus, lam(p), cfg))?.0)
}

pub(super) fn mminus_route_below(p: &Params, cfg: &QuadConfig) -> Result<EvalResult> {
    Ok(mminus_phase_routes(d(p), &arg(p)?, lam(p), &weyl(FracOperator::Mminus, lam(p), cfg))?.1)
}

/// Raise by λ, then apply the raising operator with -λ: back to e^{-iπμ}Q^μ.
pub(super) fn frac_raise_then_inverse(p: &Params, cfg: &QuadConfig) -> Result<EvalResult> {
    let (dd, l) = (d(p), lam(p));
    let up = weyl(FracOperator::Mplus, l, cfg);
    let inner = |a: &LegendreArgument| -> Result<Complex64> { Ok(frac_order_shift(Q, dd, a, &up)?.value * exp_i_pi(-(dd.mu + l))) };
    apply_order_operator(inner, dd.mu + l, -l, &arg(p)?, Direction::Raise, &weyl(FracOperator::Mplus, -l, cfg))
}

pub(super) fn q_scaled_plain(p: &Params, cfg: &QuadConfig) -> Result<EvalResult> {
    q_scaled(p, cfg)
}

pub(super) fn frac_q_raise_keyhole(p: &Params, cfg: &QuadConfig) -> Result<EvalResult> {
    frac_q_raise(p, cfg)
}

pub(super) fn frac_q_raise_collapsed(p: &Params, cfg: &QuadConfig) -> Result<EvalResult> {
    frac_order_shift(Q, d(p), &arg(p)?, &weyl(FracOperator::Mplus, lam(p), cfg).with_collapse(true))
}
