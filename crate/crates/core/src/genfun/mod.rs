//! Generating functions: the closed form of a finite group element acting on
//! a Legendre function, and the matching Taylor series in the group parameter.

#[cfg(test)]
mod tests;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::legendre::{eval_legendre, DegreeOrder, Domain, FunctionKind, LegendreArgument};
use crate::numerics::{c, cpow, rgamma, EvalResult, ONE, ZERO};

/// Largest number of series terms accepted.
pub const MAX_TERMS: usize = 500;

/// Shifted arguments closer than this to [-1, 1] are rejected.
const CUT_DISTANCE: f64 = 1e-8;

/// Relative size below which the non-terminating inner sum of the Q double
/// series is cut off.
const INNER_CUTOFF: f64 = 1e-16;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum GenFunFamily {
    /// e^{-uM₊} acting on t^μ F_ν^μ: series in F_ν^{μ+n}.
    OrderRaiseMplus,
    /// e^{-uM₋} acting on t^μ F_ν^μ: series in F_ν^{μ-n}.
    OrderLowerMminus,
    /// e^{-uP₃} acting on x^ν F_ν^μ: series in F_{ν-n}^μ.
    DegreeLowerP3,
    /// e^{-uK₃} acting on x^ν F_ν^μ: series in F_{ν+n}^μ.
    DegreeRaiseK3,
    /// (1 - 2zh + h²)^{-1/2} = Σ hⁿ P_n(z).
    LegendrePClassic,
    /// The logarithmic generating function of Q_n(z).
    LegendreQClassic,
    /// Generating function of P_n^μ(z) built on P_0^μ.
    PnmuClassic,
    /// e^{-vM₊} e^{-uK₃} acting on P_0^0 = 1 (or on Q_0^0 for `QOffCut`).
    DoubleSeriesPK,
}

impl GenFunFamily {
    pub const ALL: [GenFunFamily; 8] = [
        GenFunFamily::OrderRaiseMplus,
        GenFunFamily::OrderLowerMminus,
        GenFunFamily::DegreeLowerP3,
        GenFunFamily::DegreeRaiseK3,
        GenFunFamily::LegendrePClassic,
        GenFunFamily::LegendreQClassic,
        GenFunFamily::PnmuClassic,
        GenFunFamily::DoubleSeriesPK,
    ];
}

/// Argument of the logarithm in the closed Q_n generating function.
///
/// `Corrected`: ln[(z - h + √D)/√(z²-1)], i.e. D^{-1/2} Q_0 of the shifted
/// argument. `Printed`: ln[(z - h√D)/√(z²-1)].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum QLogReading {
    Corrected,
    Printed,
}

/// One generating-function evaluation.
///
/// `phase` is t for the order families and x for the degree families
/// (h = u/x for P₃, h = ux for K₃ and the classic series). In the double
/// series `phase` multiplies `inner_step` (the M₊ parameter v) and the K₃
/// parameter is used with x = 1.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GenFunSpec {
    pub family: GenFunFamily,
    /// P or Q (off the cut); ignored by the classic P and P_n^μ families.
    pub kind: FunctionKind,
    pub degree_order: DegreeOrder,
    pub arg: LegendreArgument,
    pub phase: Complex64,
    pub step: Complex64,
    pub inner_step: Complex64,
    pub terms: usize,
    pub q_log: QLogReading,
}

impl GenFunSpec {
    pub fn new(family: GenFunFamily, kind: FunctionKind, degree_order: DegreeOrder, arg: LegendreArgument, step: Complex64) -> Self {
        Self {
            family,
            kind,
            degree_order,
            arg,
            phase: ONE,
            step,
            inner_step: ZERO,
            terms: 60,
            q_log: QLogReading::Corrected,
        }
    }

    pub fn with_phase(mut self, phase: Complex64) -> Self {
        self.phase = phase;
        self
    }

    pub fn with_step(mut self, u: Complex64) -> Self {
        self.step = u;
        self
    }

    pub fn with_inner_step(mut self, v: Complex64) -> Self {
        self.inner_step = v;
        self
    }

    pub fn with_terms(mut self, terms: usize) -> Self {
        self.terms = terms;
        self
    }

    pub fn with_q_log(mut self, reading: QLogReading) -> Self {
        self.q_log = reading;
        self
    }

    /// Convergence radius of the series in |u| (for the double series, in
    /// the outer parameter u at the shifted point).
    pub fn radius(&self) -> Result<f64> {
        let z = self.arg.z();
        let t = self.phase.norm();
        Ok(match self.family {
            GenFunFamily::OrderRaiseMplus => order_radius(&self.arg) / t,
            GenFunFamily::OrderLowerMminus => order_radius(&self.arg) * t,
            GenFunFamily::DegreeLowerP3 => degree_radius(z) * t,
            GenFunFamily::DegreeRaiseK3 | GenFunFamily::LegendrePClassic | GenFunFamily::LegendreQClassic | GenFunFamily::PnmuClassic => {
                degree_radius(z) / t
            }
            GenFunFamily::DoubleSeriesPK => degree_radius(self.double_shift()?.z()),
        })
    }

    /// The point z + vt√(z²-1) reached by the M₊ factor of the double series.
    fn double_shift(&self) -> Result<LegendreArgument> {
        shifted_argument(self.arg.zm1() + self.inner_step * self.phase * self.arg.sqrt_z2m1())
    }

    fn check_inputs(&self) -> Result<()> {
        if self.arg.domain() != Domain::OffCut {
            return Err(Error::DomainError("generating functions are evaluated off the cut".into()));
        }
        if self.phase.norm() == 0.0 || !self.phase.re.is_finite() || !self.phase.im.is_finite() {
            return Err(Error::InvalidInput(format!("phase variable must be finite and nonzero, got {}", self.phase)));
        }
        let uses_kind = matches!(
            self.family,
            GenFunFamily::OrderRaiseMplus
                | GenFunFamily::OrderLowerMminus
                | GenFunFamily::DegreeLowerP3
                | GenFunFamily::DegreeRaiseK3
                | GenFunFamily::DoubleSeriesPK
        );
        if uses_kind && self.kind.is_on_cut() {
            return Err(Error::DomainError("generating functions use the off-cut P or Q".into()));
        }
        Ok(())
    }
}

/// min |√((z±1)/(z∓1))|.
fn order_radius(arg: &LegendreArgument) -> f64 {
    let q = ((arg.zm1() + c(2.0)) / arg.zm1()).sqrt().norm();
    q.min(1.0 / q)
}

/// min |z ± √(z²-1)|.
fn degree_radius(z: Complex64) -> f64 {
    let s = (z - ONE).sqrt() * (z + ONE).sqrt();
    (z - s).norm().min((z + s).norm())
}

fn shifted_argument(zm1: Complex64) -> Result<LegendreArgument> {
    let z = zm1 + ONE;
    let dist = if z.re >= -1.0 && z.re <= 1.0 { z.im.abs() } else { zm1.norm().min((z + ONE).norm()) };
    if dist < CUT_DISTANCE || !(z.re.is_finite() && z.im.is_finite()) {
        return Err(Error::ShiftedArgumentOnCut(z));
    }
    LegendreArgument::from_zm1(zm1).map_err(|_| Error::ShiftedArgumentOnCut(z))
}

/// ln(z - 1) + ln(z + 1).
fn ln_z2m1(arg: &LegendreArgument) -> Complex64 {
    arg.zm1().ln() + (arg.zm1() + c(2.0)).ln()
}

/// Pieces of the degree shift at h: ln D with D = 1 - 2zh + h², and the
/// shifted argument X = (z-h)/√D (X - 1 formed without cancellation).
struct DegreeShift {
    ln_d: Complex64,
    sqrt_d: Complex64,
    arg: LegendreArgument,
}

fn degree_shift(arg: &LegendreArgument, h: Complex64) -> Result<DegreeShift> {
    let z = arg.z();
    let s = arg.sqrt_z2m1();
    // D = (1 - h/(z-s))(1 - h/(z+s)); each factor stays in the right half
    // plane inside the radius, so the principal logs continue ln D from h = 0
    let ln_d = (ONE - h / (z - s)).ln() + (ONE - h / (z + s)).ln();
    let sqrt_d = (ln_d * 0.5).exp();
    let w = z - h;
    let xm1 = arg.z2m1() / (sqrt_d * (w + sqrt_d));
    Ok(DegreeShift { ln_d, sqrt_d, arg: shifted_argument(xm1)? })
}

/// ln Q-generating argument for the chosen reading at the point `arg`.
fn q_log(arg: &LegendreArgument, h: Complex64, shift: &DegreeShift, reading: QLogReading) -> Complex64 {
    let z = arg.z();
    let num = match reading {
        QLogReading::Corrected => z - h + shift.sqrt_d,
        QLogReading::Printed => z - h * shift.sqrt_d,
    };
    (num / arg.sqrt_z2m1()).ln()
}

fn eval_at(kind: FunctionKind, nu: Complex64, mu: Complex64, arg: &LegendreArgument) -> Result<EvalResult> {
    eval_legendre(kind, DegreeOrder::new(nu, mu), arg)
}

/// Closed (group-element) side of the generating function.
pub fn genfun_closed(spec: &GenFunSpec) -> Result<EvalResult> {
    spec.check_inputs()?;
    let (nu, mu) = (spec.degree_order.nu, spec.degree_order.mu);
    let arg = &spec.arg;
    let (t, u) = (spec.phase, spec.step);
    let s = arg.sqrt_z2m1();
    match spec.family {
        GenFunFamily::OrderRaiseMplus | GenFunFamily::OrderLowerMminus => {
            let raise = spec.family == GenFunFamily::OrderRaiseMplus;
            let shift = if raise { u * t * s } else { -(u / t) * s };
            let at = shifted_argument(arg.zm1() + shift)?;
            let sign = if raise { 1.0 } else { -1.0 };
            let k = cpow(t, mu) * (mu * 0.5 * sign * (ln_z2m1(arg) - ln_z2m1(&at))).exp();
            Ok(eval_at(spec.kind, nu, mu, &at)?.scale(k))
        }
        GenFunFamily::DegreeLowerP3 => {
            let sh = degree_shift(arg, u / t)?;
            let k = cpow(t, nu) * (nu * 0.5 * sh.ln_d).exp();
            Ok(eval_at(spec.kind, nu, mu, &sh.arg)?.scale(k))
        }
        GenFunFamily::DegreeRaiseK3 => {
            let sh = degree_shift(arg, u * t)?;
            let k = cpow(t, nu) * (-(nu + ONE) * 0.5 * sh.ln_d).exp();
            Ok(eval_at(spec.kind, nu, mu, &sh.arg)?.scale(k))
        }
        GenFunFamily::LegendrePClassic => {
            let sh = degree_shift(arg, u * t)?;
            Ok(EvalResult::exact((-0.5 * sh.ln_d).exp()))
        }
        GenFunFamily::LegendreQClassic => {
            let h = u * t;
            let sh = degree_shift(arg, h)?;
            Ok(EvalResult::exact(q_log(arg, h, &sh, spec.q_log) / sh.sqrt_d))
        }
        GenFunFamily::PnmuClassic => {
            let h = u * t;
            let sh = degree_shift(arg, h)?;
            let ratio = (arg.z() - h + sh.sqrt_d) / s;
            Ok(EvalResult::exact(rgamma(ONE - mu) * cpow(ratio, mu) / sh.sqrt_d))
        }
        GenFunFamily::DoubleSeriesPK => {
            let shifted = spec.double_shift()?;
            let sh = degree_shift(&shifted, u)?;
            match spec.kind {
                FunctionKind::POffCut => Ok(EvalResult::exact((-0.5 * sh.ln_d).exp())),
                _ => Ok(EvalResult::exact(q_log(&shifted, u, &sh, spec.q_log) / sh.sqrt_d)),
            }
        }
    }
}

/// Running partial sum with the error model |last term| × 2.
struct PartialSum {
    sum: Complex64,
    eval_err: f64,
    last: f64,
}

impl PartialSum {
    fn new() -> Self {
        Self { sum: ZERO, eval_err: 0.0, last: 0.0 }
    }

    fn add(&mut self, coef: Complex64, f: EvalResult) {
        let term = coef * f.value;
        self.sum += term;
        self.eval_err += coef.norm() * f.abs_error_est;
        self.last = term.norm();
    }

    fn finish(self, terms: usize) -> EvalResult {
        EvalResult::new(self.sum, 2.0 * self.last + self.eval_err, terms)
    }
}

/// Maps a Q normalisation pole at term n to a coefficient pole of the series.
fn term_value(kind: FunctionKind, nu: Complex64, mu: Complex64, arg: &LegendreArgument, n: usize) -> Result<EvalResult> {
    eval_at(kind, nu, mu, arg).map_err(|e| match e {
        Error::PrefactorPole(_) => Error::CoefficientPole(n),
        other => other,
    })
}

/// Partial sum of the first `terms` terms of the series side.
pub fn genfun_series(spec: &GenFunSpec) -> Result<EvalResult> {
    spec.check_inputs()?;
    if spec.terms == 0 || spec.terms > MAX_TERMS {
        return Err(Error::InvalidInput(format!("terms must be in 1..={MAX_TERMS}, got {}", spec.terms)));
    }
    let radius = spec.radius()?;
    if spec.family == GenFunFamily::DoubleSeriesPK {
        let inner = order_radius(&spec.arg);
        let v_abs = (spec.inner_step * spec.phase).norm();
        if !(v_abs < inner) {
            return Err(Error::RadiusViolation { u_abs: v_abs, radius: inner });
        }
    }
    if !(spec.step.norm() < radius) {
        return Err(Error::RadiusViolation { u_abs: spec.step.norm(), radius });
    }
    let (nu, mu) = (spec.degree_order.nu, spec.degree_order.mu);
    let arg = &spec.arg;
    let (t, u) = (spec.phase, spec.step);
    let kind = spec.kind;
    let n_terms = spec.terms;
    let mut acc = PartialSum::new();
    match spec.family {
        GenFunFamily::OrderRaiseMplus => {
            // uⁿ/n! t^{μ+n} F_ν^{μ+n}
            let mut coef = cpow(t, mu);
            for n in 0..n_terms {
                acc.add(coef, term_value(kind, nu, mu + n as f64, arg, n)?);
                coef *= u * t / (n + 1) as f64;
            }
        }
        GenFunFamily::OrderLowerMminus => {
            // (-u)ⁿ/n! t^{μ-n} Γ(μ+ν+1)Γ(ν-μ+n+1)/(Γ(μ+ν-n+1)Γ(ν-μ+1)) F_ν^{μ-n}
            let mut coef = cpow(t, mu);
            for n in 0..n_terms {
                acc.add(coef, term_value(kind, nu, mu - n as f64, arg, n)?);
                let k = n as f64;
                coef *= -(u / t) * (mu + nu - k) * (nu - mu + k + 1.0) / (k + 1.0);
            }
        }
        GenFunFamily::DegreeLowerP3 => {
            // x^ν (-u/x)ⁿ/n! Γ(ν+μ+1)/Γ(ν+μ-n+1) F_{ν-n}^μ
            let mut coef = cpow(t, nu);
            for n in 0..n_terms {
                acc.add(coef, term_value(kind, nu - n as f64, mu, arg, n)?);
                let k = n as f64;
                coef *= -(u / t) * (nu + mu - k) / (k + 1.0);
            }
        }
        GenFunFamily::DegreeRaiseK3 => {
            // x^ν (ux)ⁿ/n! Γ(ν-μ+n+1)/Γ(ν-μ+1) F_{ν+n}^μ
            let mut coef = cpow(t, nu);
            for n in 0..n_terms {
                acc.add(coef, term_value(kind, nu + n as f64, mu, arg, n)?);
                let k = n as f64;
                coef *= u * t * (nu - mu + k + 1.0) / (k + 1.0);
            }
        }
        GenFunFamily::LegendrePClassic => {
            let z = arg.z();
            let h = u * t;
            let (mut p_prev, mut p) = (ZERO, ONE);
            let mut coef = ONE;
            for n in 0..n_terms {
                acc.add(coef, EvalResult::exact(p));
                let k = n as f64;
                let next = (z * p * (2.0 * k + 1.0) - p_prev * k) / (k + 1.0);
                p_prev = p;
                p = next;
                coef *= h;
            }
        }
        GenFunFamily::LegendreQClassic => {
            let h = u * t;
            let mut coef = ONE;
            for n in 0..n_terms {
                acc.add(coef, term_value(FunctionKind::QOffCut, c(n as f64), ZERO, arg, n)?);
                coef *= h;
            }
        }
        GenFunFamily::PnmuClassic => {
            // (ux)ⁿ/n! Γ(n+1-μ)/Γ(1-μ) P_n^μ
            let h = u * t;
            let mut coef = ONE;
            for n in 0..n_terms {
                acc.add(coef, term_value(FunctionKind::POffCut, c(n as f64), mu, arg, n)?);
                let k = n as f64;
                coef *= h * (k + 1.0 - mu) / (k + 1.0);
            }
        }
        GenFunFamily::DoubleSeriesPK => {
            let vt = spec.inner_step * t;
            let mut outer = ONE;
            let mut inner_err = 0.0;
            for n in 0..n_terms {
                let mut inner = PartialSum::new();
                let mut coef = ONE;
                let last_m = if kind == FunctionKind::POffCut { n } else { MAX_TERMS };
                for m in 0..=last_m {
                    let f = term_value(kind, c(n as f64), c(m as f64), arg, n)?;
                    inner.add(coef, f);
                    if kind != FunctionKind::POffCut && m > n && inner.last <= INNER_CUTOFF * inner.sum.norm() {
                        break;
                    }
                    coef *= vt / (m + 1) as f64;
                }
                // the P sum terminates at m = n; only the Q sum is truncated
                let truncation = if kind == FunctionKind::POffCut { 0.0 } else { 2.0 * inner.last };
                inner_err += outer.norm() * (inner.eval_err + truncation);
                acc.add(outer, EvalResult::exact(inner.sum));
                outer *= u;
            }
            acc.eval_err += inner_err;
        }
    }
    Ok(acc.finish(n_terms))
}
