use super::*;
use crate::legendre::{eval_legendre, step_degree, step_order, DegreeOrder, Direction, FunctionKind, LegendreArgument};
use crate::numerics::{c, exp_i_pi, ONE};
use num_complex::Complex64;

const P: FunctionKind = FunctionKind::POffCut;
const Q: FunctionKind = FunctionKind::QOffCut;

fn arg(z: f64) -> LegendreArgument {
    LegendreArgument::off_cut(c(z)).unwrap()
}

fn val(kind: FunctionKind, nu: f64, mu: f64, z: f64) -> Complex64 {
    eval_legendre(kind, DegreeOrder::real(nu, mu), &arg(z)).unwrap().value
}

fn rel(a: Complex64, b: Complex64) -> f64 {
    (a - b).norm() / b.norm().max(1e-300)
}

fn weyl(op: FracOperator, lam: f64) -> FracOpSpec {
    FracOpSpec::weyl(op, c(lam))
}

#[test]
fn coefficient_values() {
    let d = DegreeOrder::real(0.4, 0.25);
    let set = coefficients(d, c(0.6));
    assert!((set.nplus.value().unwrap() - exp_i_pi(c(-0.6))).norm() < 1e-15);
    let nm = Complex64::new(-0.281441245192834627949620355942, -0.866187087012091266242997820969);
    assert!(rel(set.nminus.value().unwrap(), nm) < 1e-13);
    let npp = Complex64::new(-0.304387439200960610745569471329, -0.936808210551730063054391220858);
    assert!(rel(set.nprime_plus.value().unwrap(), npp) < 1e-13);
    let npm = Complex64::new(-1.62739067608790241178871796999, -5.0085934923482437597432880138);
    assert!(rel(set.nprime_minus.value().unwrap(), npm) < 1e-13);
    assert!((coefficients(d, c(0.0)).nminus.value().unwrap() - ONE).norm() < 1e-14);

    // Γ(-ν-μ+λ) = Γ(0) at (0.3, 0.1, 0.4); a nearby λ is finite
    let d = DegreeOrder::real(0.3, 0.1);
    assert!(coefficients(d, c(0.4)).nminus_tilde.is_pole());
    let t = coefficients(d, c(0.45)).nminus_tilde.value().unwrap();
    assert!(rel(t, c(-5.12688351658842664817846825811)) < 1e-13, "{t}");
}

#[test]
fn weyl_raise_of_q_matches_recurrence_and_direct_value() {
    let (nu, mu, z) = (0.6, 0.2, 2.0);
    let d = DegreeOrder::real(nu, mu);
    let r1 = frac_order_shift(Q, d, &arg(z), &weyl(FracOperator::Mplus, 1.0)).unwrap().value;
    let step = step_order(Q, d, &arg(z), Direction::Raise).unwrap().value;
    assert!(rel(r1, -step) < 1e-9, "{r1} vs {}", -step);
    let r2 = frac_order_shift(Q, d, &arg(z), &weyl(FracOperator::Mplus, 2.0)).unwrap().value;
    assert!(rel(r2, val(Q, nu, mu + 2.0, z)) < 1e-9);
    let frac = frac_order_shift(Q, d, &arg(z), &weyl(FracOperator::Mplus, 0.7)).unwrap().value;
    assert!(rel(frac, val(Q, nu, 0.9, z)) < 1e-8, "{frac} vs {}", val(Q, nu, 0.9, z));
}

#[test]
fn riemann_raise_of_p() {
    let spec = FracOpSpec::new(FracOperator::Mplus, c(0.5), Representation::Riemann).unwrap();
    let r = frac_order_shift(P, DegreeOrder::real(0.7, 0.2), &arg(1.5), &spec).unwrap().value;
    assert!(rel(r, val(P, 0.7, 0.7, 1.5)) < 1e-8, "{r} vs {}", val(P, 0.7, 0.7, 1.5));
    let spec = FracOpSpec::new(FracOperator::Mplus, c(-0.4), Representation::Riemann).unwrap();
    let r = frac_order_shift(P, DegreeOrder::real(0.3, 0.6), &arg(1.2), &spec).unwrap().value;
    assert!(rel(r, val(P, 0.3, 0.2, 1.2)) < 1e-8);
    let bad = frac_order_shift(P, DegreeOrder::real(0.3, 1.2), &arg(1.2), &spec);
    assert!(matches!(bad, Err(Error::ConvergenceConditionViolated(_))));
}

#[test]
fn weyl_raise_of_p_is_a_two_term_combination() {
    let (nu, mu, lam, z) = (0.3, 0.4, 0.5, 1.7);
    let d = DegreeOrder::real(nu, mu);
    let r = frac_order_shift(P, d, &arg(z), &weyl(FracOperator::Mplus, lam)).unwrap().value;
    let split = order_raise_decomposition(d, c(lam)).unwrap();
    let expect = split.p_coef * val(P, nu, mu + lam, z) + split.q_coef * exp_i_pi(c(-mu - lam)) * val(Q, nu, mu + lam, z);
    assert!(rel(r, expect) < 1e-8, "{r} vs {expect}");
    // at integer λ the Q term drops out and M₊ P^μ = -P^{μ+1}
    let r = frac_order_shift(P, d, &arg(z), &weyl(FracOperator::Mplus, 1.0)).unwrap().value;
    assert!(rel(r, -val(P, nu, mu + 1.0, z)) < 1e-9);
}

#[test]
fn weyl_lowering() {
    let (nu, mu, z) = (0.5, 0.3, 1.8);
    let d = DegreeOrder::real(nu, mu);
    let r = frac_order_shift(Q, d, &arg(z), &weyl(FracOperator::Mminus, 1.0)).unwrap().value;
    let step = step_order(Q, d, &arg(z), Direction::Lower).unwrap().value / ((nu + mu) * (nu - mu + 1.0));
    assert!(rel(r, step) < 1e-9);
    let r = frac_order_shift(Q, d, &arg(z), &weyl(FracOperator::Mminus, 0.45)).unwrap().value;
    assert!(rel(r, val(Q, nu, mu - 0.45, z)) < 1e-8, "{r} vs {}", val(Q, nu, mu - 0.45, z));
    // on P: needs Re(-ν-μ+λ) > 0
    let d = DegreeOrder::real(-0.3, 0.1);
    let r = frac_order_shift(P, d, &arg(z), &weyl(FracOperator::Mminus, 0.6)).unwrap().value;
    assert!(rel(r, val(P, -0.3, -0.5, z)) < 1e-8, "{r} vs {}", val(P, -0.3, -0.5, z));
}

#[test]
fn lowering_from_q_nu_nu_plus_one_has_an_infinite_coefficient() {
    let d = DegreeOrder::real(0.4, 1.4);
    let r = frac_order_shift(Q, d, &arg(2.0), &weyl(FracOperator::Mminus, 0.5));
    assert!(matches!(r, Err(Error::CoefficientVanishes(_))), "{r:?}");
}

#[test]
fn lowering_phase_routes_agree() {
    let d = DegreeOrder::real(0.5, 0.3);
    let spec = weyl(FracOperator::Mminus, 0.45);
    let (a, b) = mminus_phase_routes(d, &arg(1.8), c(0.45), &spec).unwrap();
    assert!(rel(a.value, b.value) < 1e-8, "{} vs {}", a.value, b.value);
}

#[test]
fn degree_raise() {
    let (nu, mu, z) = (0.3, 0.2, 1.6);
    let d = DegreeOrder::real(nu, mu);
    for kind in [P, Q] {
        let r = frac_degree_shift(kind, d, &arg(z), &weyl(FracOperator::K3, 1.0)).unwrap().value;
        let step = step_degree(kind, d, &arg(z), Direction::Raise).unwrap().value / -(nu - mu + 1.0);
        assert!(rel(r, step) < 1e-9, "{kind:?}: {r} vs {step}");
        let r = frac_degree_shift(kind, d, &arg(z), &weyl(FracOperator::K3, 0.55)).unwrap().value;
        assert!(rel(r, val(kind, nu + 0.55, mu, z)) < 1e-8, "{kind:?}: {r} vs {}", val(kind, nu + 0.55, mu, z));
    }
    // from P_0^0 = 1 with λ = ν
    let r = frac_degree_shift(P, DegreeOrder::real(0.0, 0.0), &arg(z), &weyl(FracOperator::K3, 0.65)).unwrap().value;
    assert!(rel(r, val(P, 0.65, 0.0, z)) < 1e-8);
}

#[test]
fn degree_lowering_of_p() {
    // from P_0^μ, λ generic: P_{-λ}^μ = P_{λ-1}^μ
    let (mu, lam, z) = (-0.3, 0.7, 1.9);
    let r = frac_degree_shift(P, DegreeOrder::real(0.0, mu), &arg(z), &weyl(FracOperator::P3, lam)).unwrap().value;
    assert!(rel(r, val(P, -lam, mu, z)) < 1e-8, "{r} vs {}", val(P, -lam, mu, z));
    assert!(rel(r, val(P, lam - 1.0, mu, z)) < 1e-8);
    let d = DegreeOrder::real(-0.6, 0.2);
    let r = frac_degree_shift(P, d, &arg(z), &weyl(FracOperator::P3, 1.0)).unwrap().value;
    let step = step_degree(P, d, &arg(z), Direction::Lower).unwrap().value / (-0.6 + 0.2);
    assert!(rel(r, step) < 1e-9);
}

#[test]
fn degree_lowering_of_q() {
    let (nu, mu, lam, z) = (0.2, 0.3, 0.85, 1.7);
    let d = DegreeOrder::real(nu, mu);
    let r = frac_degree_shift(Q, d, &arg(z), &weyl(FracOperator::P3, lam)).unwrap().value;
    let split = degree_lower_decomposition(d, c(lam)).unwrap();
    let expect = split.q_coef * exp_i_pi(c(-mu)) * val(Q, nu - lam, mu, z) + split.p_coef * val(P, nu - lam, mu, z);
    assert!(rel(r, expect) < 1e-8, "{r} vs {expect}");

    let spec = FracOpSpec::new(FracOperator::P3, c(0.35), Representation::Riemann).unwrap();
    let r = frac_degree_shift(Q, d, &arg(z), &spec).unwrap().value;
    assert!(rel(r, val(Q, nu - 0.35, mu, z)) < 1e-8, "{r} vs {}", val(Q, nu - 0.35, mu, z));
}

#[test]
fn keyhole_and_collapsed_loops_agree() {
    let d = DegreeOrder::real(0.6, 0.4);
    let key = weyl(FracOperator::Mplus, -0.3);
    let a = frac_order_shift(Q, d, &arg(2.2), &key).unwrap().value;
    let b = frac_order_shift(Q, d, &arg(2.2), &key.clone().with_collapse(true)).unwrap().value;
    assert!(rel(a, b) < 1e-9, "{a} vs {b}");
    assert!(rel(a, val(Q, 0.6, 0.1, 2.2)) < 1e-9);
    let bad = frac_order_shift(Q, d, &arg(2.2), &weyl(FracOperator::Mplus, 0.3).with_collapse(true));
    assert!(matches!(bad, Err(Error::CollapseInvalid(_))));
}

#[test]
fn raise_then_lower_by_the_same_amount_is_the_identity() {
    let (nu, mu, lam, z) = (0.6, 0.2, 0.35, 2.0);
    let spec = weyl(FracOperator::Mplus, lam);
    let up = |a: &LegendreArgument| {
        let q = frac_order_shift(Q, DegreeOrder::real(nu, mu), a, &spec)?.value;
        Ok(exp_i_pi(c(-mu - lam)) * q)
    };
    let back = apply_order_operator(up, c(mu + lam), c(-lam), &arg(z), Direction::Raise, &weyl(FracOperator::Mplus, -lam)).unwrap();
    let expect = exp_i_pi(c(-mu)) * val(Q, nu, mu, z);
    assert!(rel(back.value, expect) < 1e-7, "{} vs {expect}", back.value);
}

#[test]
fn rejected_combinations() {
    for (op, kind) in [(FracOperator::Mminus, Q), (FracOperator::K3, P)] {
        assert!(matches!(FracOpSpec::new(op, c(0.5), Representation::Riemann), Err(Error::NoRiemannRepresentation(_))));
        let mut spec = weyl(op, 0.5);
        spec.representation = Representation::Riemann;
        let r = if op == FracOperator::K3 {
            frac_degree_shift(kind, DegreeOrder::real(0.3, 0.2), &arg(2.0), &spec)
        } else {
            frac_order_shift(kind, DegreeOrder::real(0.3, 0.2), &arg(2.0), &spec)
        };
        assert!(matches!(r, Err(Error::NoRiemannRepresentation(_))));
    }
    let spec = FracOpSpec::new(FracOperator::P3, c(0.5), Representation::Riemann).unwrap();
    assert!(matches!(
        frac_degree_shift(P, DegreeOrder::real(0.3, 0.2), &arg(2.0), &spec),
        Err(Error::NoRiemannRepresentation(_))
    ));
    let spec = FracOpSpec::new(FracOperator::Mplus, c(0.5), Representation::Riemann).unwrap();
    assert!(matches!(
        frac_order_shift(Q, DegreeOrder::real(0.3, 0.2), &arg(2.0), &spec),
        Err(Error::NoRiemannRepresentation(_))
    ));
    let r = frac_order_shift(Q, DegreeOrder::real(-0.6, -0.5), &arg(2.0), &weyl(FracOperator::Mplus, 0.05));
    assert!(matches!(r, Err(Error::ConvergenceConditionViolated(_))));
}
