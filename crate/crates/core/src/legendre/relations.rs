use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

use super::{eval_legendre, jet, DegreeOrder, FunctionKind, LegendreArgument};
use crate::error::{Error, Result};
use crate::numerics::{c, cos_pi, exp_i_pi, gamma, gamma_ratio, nonpositive_integer, sin_pi, EvalResult, ONE};

const COEF_TOL: f64 = 1e-12;
const TRIG_TOL: f64 = 1e-10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Direction {
    Raise,
    Lower,
}

impl Direction {
    pub fn from_sign(s: i32) -> Result<Self> {
        match s {
            1 => Ok(Direction::Raise),
            -1 => Ok(Direction::Lower),
            _ => Err(Error::InvalidInput(format!("direction must be +1 or -1, got {s}"))),
        }
    }
}

fn off_cut_kind(kind: FunctionKind) -> Result<FunctionKind> {
    match kind {
        FunctionKind::POffCut | FunctionKind::QOffCut => Ok(kind),
        _ => Err(Error::DomainError("stepping relations act on off-cut functions".into())),
    }
}

fn combine(a: Complex64, b: Complex64, j: &super::Jet) -> EvalResult {
    let v = a * j.v[0] + b * j.v[1];
    let err = a.norm() * j.err[0] + b.norm() * j.err[1] + 1e-15 * (a * j.v[0]).norm().max((b * j.v[1]).norm());
    EvalResult::new(v, err, j.terms)
}

/// Order recurrence brackets:
/// raise: -√(z²-1) F' + μz/√(z²-1) F = -F^{μ+1};
/// lower: √(z²-1) F' + μz/√(z²-1) F = (ν+μ)(ν-μ+1) F^{μ-1}.
pub fn step_order(kind: FunctionKind, d: DegreeOrder, arg: &LegendreArgument, dir: Direction) -> Result<EvalResult> {
    let kind = off_cut_kind(kind)?;
    if dir == Direction::Lower {
        let coef = (d.nu + d.mu) * (d.nu - d.mu + ONE);
        if coef.norm() <= COEF_TOL {
            return Err(Error::CoefficientVanishes(format!("(ν+μ)(ν-μ+1) = 0 at ν = {}, μ = {}", d.nu, d.mu)));
        }
    }
    let j = jet(kind, d, arg, 1)?;
    let sq = arg.sqrt_z2m1();
    let b = match dir {
        Direction::Raise => -sq,
        Direction::Lower => sq,
    };
    Ok(combine(d.mu * arg.z() / sq, b, &j))
}

/// Degree recurrence brackets:
/// lower: -(z²-1) F' + νz F = (ν+μ) F_{ν-1};
/// raise: -(z²-1) F' - (ν+1)z F = -(ν-μ+1) F_{ν+1}.
pub fn step_degree(kind: FunctionKind, d: DegreeOrder, arg: &LegendreArgument, dir: Direction) -> Result<EvalResult> {
    let kind = off_cut_kind(kind)?;
    let coef = match dir {
        Direction::Lower => d.nu + d.mu,
        Direction::Raise => -(d.nu - d.mu + ONE),
    };
    if coef.norm() <= COEF_TOL {
        return Err(Error::CoefficientVanishes(format!("degree-step prefactor vanishes at ν = {}, μ = {}", d.nu, d.mu)));
    }
    let j = jet(kind, d, arg, 1)?;
    let a = match dir {
        Direction::Lower => d.nu * arg.z(),
        Direction::Raise => -(d.nu + ONE) * arg.z(),
    };
    Ok(combine(a, -arg.z2m1(), &j))
}

fn whipple_prefactor(nu: Complex64, mu: Complex64, y_arg: &LegendreArgument) -> Result<Complex64> {
    if nonpositive_integer(nu + mu + ONE, COEF_TOL).is_some() {
        return Err(Error::PrefactorPole(format!("Γ(ν+μ+1) at ν+μ = {}", nu + mu)));
    }
    let quarter = ((y_arg.zm1() + c(2.0)).ln() + y_arg.zm1().ln()) * 0.25;
    Ok(c((PI / 2.0).sqrt()) * gamma(nu + mu + ONE)? * quarter.exp())
}

fn whipple_partner(y: Complex64) -> Result<(LegendreArgument, LegendreArgument)> {
    if y.re <= 0.0 {
        return Err(Error::DomainError(format!("Whipple map needs Re y > 0, got {y}")));
    }
    let y_arg = LegendreArgument::off_cut(y)?;
    let z = y / y_arg.sqrt_z2m1();
    Ok((y_arg, LegendreArgument::off_cut(z)?))
}

/// Degree/order exchange.
///
/// For `QOffCut` with (ν, μ) this returns √(π/2) Γ(ν+μ+1) (y²-1)^{1/4}
/// P_{-μ-1/2}^{-ν-1/2}(y), which equals e^{-iπμ} Q_ν^μ(y/√(y²-1)).
///
/// For `POffCut` with (ν', μ') it returns P_{ν'}^{μ'}(y) computed the other
/// way round, from e^{-iπμ} Q_ν^μ(y/√(y²-1)) with ν = -μ'-1/2, μ = -ν'-1/2.
pub fn whipple(kind: FunctionKind, d: DegreeOrder, y: Complex64) -> Result<EvalResult> {
    let (y_arg, z_arg) = whipple_partner(y)?;
    let half = c(0.5);
    match kind {
        FunctionKind::QOffCut => {
            let k = whipple_prefactor(d.nu, d.mu, &y_arg)?;
            let p = eval_legendre(FunctionKind::POffCut, DegreeOrder::new(-d.mu - half, -d.nu - half), &y_arg)?;
            Ok(p.scale(k))
        }
        FunctionKind::POffCut => {
            let (nu, mu) = (-d.mu - half, -d.nu - half);
            let k = whipple_prefactor(nu, mu, &y_arg)?;
            let q = eval_legendre(FunctionKind::QOffCut, DegreeOrder::new(nu, mu), &z_arg)?;
            Ok(q.scale(exp_i_pi(-mu) / k))
        }
        _ => Err(Error::DomainError("the Whipple map is applied off the cut".into())),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SymmetryRelation {
    /// e^{-iπμ}Q^μ - Γ(ν+μ+1)/Γ(ν-μ+1) e^{iπμ}Q^{-μ}; vanishes identically.
    QNegativeOrder,
    /// P_ν^μ from Q_ν^μ and Q_{-ν-1}^μ.
    PViaQ,
    /// Q_ν^μ from P_ν^{±μ}.
    QViaP,
}

/// Evaluates one of the P/Q connection relations.
pub fn q_symmetries(rel: SymmetryRelation, d: DegreeOrder, arg: &LegendreArgument) -> Result<EvalResult> {
    let (nu, mu) = (d.nu, d.mu);
    match rel {
        SymmetryRelation::QNegativeOrder => {
            let q_pos = eval_legendre(FunctionKind::QOffCut, d, arg)?;
            let q_neg = eval_legendre(FunctionKind::QOffCut, DegreeOrder::new(nu, -mu), arg)?;
            let ratio = gamma_ratio(&[nu + mu + ONE], &[nu - mu + ONE])?;
            let a = q_pos.scale(exp_i_pi(-mu));
            let b = q_neg.scale(ratio * exp_i_pi(mu));
            Ok(EvalResult::new(a.value - b.value, a.abs_error_est + b.abs_error_est, a.terms_used + b.terms_used))
        }
        SymmetryRelation::PViaQ => {
            let cp = cos_pi(nu);
            if cp.norm() < TRIG_TOL {
                return Err(Error::DegenerateCombination(format!("cos πν vanishes at ν = {nu}")));
            }
            let q1 = eval_legendre(FunctionKind::QOffCut, d, arg)?;
            let q2 = eval_legendre(FunctionKind::QOffCut, DegreeOrder::new(-nu - ONE, mu), arg)?;
            let k = exp_i_pi(-mu) / (cp * PI);
            let a = q1.scale(k * sin_pi(nu + mu));
            let b = q2.scale(k * sin_pi(nu - mu));
            Ok(EvalResult::new(a.value - b.value, a.abs_error_est + b.abs_error_est, a.terms_used + b.terms_used))
        }
        SymmetryRelation::QViaP => {
            let s = sin_pi(mu);
            if s.norm() < TRIG_TOL {
                return Err(Error::DegenerateCombination(format!("sin πμ vanishes at μ = {mu}")));
            }
            if nonpositive_integer(nu + mu + ONE, COEF_TOL).is_some() {
                return Err(Error::PrefactorPole(format!("Γ(ν+μ+1) at ν+μ = {}", nu + mu)));
            }
            let p1 = eval_legendre(FunctionKind::POffCut, d, arg)?;
            let p2 = eval_legendre(FunctionKind::POffCut, DegreeOrder::new(nu, -mu), arg)?;
            let ratio = gamma_ratio(&[nu + mu + ONE], &[nu - mu + ONE])?;
            let k = exp_i_pi(mu) * PI / (s * 2.0);
            let a = p1.scale(k);
            let b = p2.scale(k * ratio);
            Ok(EvalResult::new(a.value - b.value, a.abs_error_est + b.abs_error_est, a.terms_used + b.terms_used))
        }
    }
}
