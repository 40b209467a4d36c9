//! Associated Legendre functions P_ν^μ(z), Q_ν^μ(z) of complex degree and
//! order, off the cut (principal branches, cut along (-∞, 1]) and on the cut
//! -1 < x < 1 (Ferrers functions built from the boundary values z = x ± i0).

mod closed;
mod relations;

pub use closed::{closed_form, ClosedForm};
pub use relations::{q_symmetries, step_degree, step_order, whipple, Direction, SymmetryRelation};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::numerics::{
    c, cpow, exp_i_pi, finite, gamma, gamma_ratio, hyp2f1_derivs, integer_distance, nonpositive_integer,
    sin_pi, EvalResult, ONE, ZERO,
};

const ARG_TOL: f64 = 1e-12;
const ENDPOINT_TOL: f64 = 1e-10;
const POLE_TOL: f64 = 1e-12;

/// Below this distance from z = 1, Q is evaluated by recombining P^{±μ}.
const Q_NEAR_ONE: f64 = 0.3;
/// Degree magnitude beyond which Γ(ν+3/2) leaves the floating-point range.
const Q_LARGE_DEGREE: f64 = 150.0;
/// Orders closer than this to an integer use the perturbed recombination.
const NEAR_INTEGER_ORDER: f64 = 0.001;
const ORDER_STEP: f64 = 0.002;

/// Degree ν and order μ.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DegreeOrder {
    pub nu: Complex64,
    pub mu: Complex64,
}

impl DegreeOrder {
    pub fn new(nu: Complex64, mu: Complex64) -> Self {
        Self { nu, mu }
    }

    pub fn real(nu: f64, mu: f64) -> Self {
        Self::new(c(nu), c(mu))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FunctionKind {
    POffCut,
    QOffCut,
    PCut,
    QCut,
}

impl FunctionKind {
    pub fn is_on_cut(self) -> bool {
        matches!(self, FunctionKind::PCut | FunctionKind::QCut)
    }

    pub fn is_p(self) -> bool {
        matches!(self, FunctionKind::POffCut | FunctionKind::PCut)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Domain {
    OffCut,
    OnCut,
}

/// Evaluation point. `zm1` carries z - 1 separately so arguments very close
/// to 1 keep full relative precision.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LegendreArgument {
    z: Complex64,
    zm1: Complex64,
    domain: Domain,
}

impl LegendreArgument {
    /// Off-cut argument: z must not lie on the real segment [-1, 1].
    pub fn off_cut(z: Complex64) -> Result<Self> {
        match Self::from_zm1(z - ONE) {
            Ok(mut a) => {
                a.z = z;
                Ok(a)
            }
            // report the caller's z, not the rounded (z - 1) + 1
            Err(Error::DomainError(msg)) if msg.contains("lies on the cut") => Err(Error::DomainError(format!("z = {z} lies on the cut [-1, 1]"))),
            Err(e) => Err(e),
        }
    }

    /// Off-cut argument given by z - 1.
    pub fn from_zm1(zm1: Complex64) -> Result<Self> {
        let z = zm1 + ONE;
        if !finite(zm1) {
            return Err(Error::DomainError(format!("non-finite argument {z}")));
        }
        if z.im.abs() <= ARG_TOL && z.re >= -1.0 - ARG_TOL && z.re <= 1.0 + ARG_TOL && zm1.re <= ARG_TOL {
            if zm1.norm() >= ENDPOINT_TOL && (z + ONE).norm() >= ENDPOINT_TOL {
                return Err(Error::DomainError(format!("z = {z} lies on the cut [-1, 1]")));
            }
        }
        if zm1.norm() < ENDPOINT_TOL || (zm1 + c(2.0)).norm() < ENDPOINT_TOL {
            return Err(Error::DomainError(format!("z = {z} is a singular endpoint")));
        }
        Ok(Self { z, zm1, domain: Domain::OffCut })
    }

    /// Off-cut point used inside integrands, where z - 1 is known exactly and
    /// may be arbitrarily small; only exact endpoints are rejected.
    pub(crate) fn interior(zm1: Complex64) -> Result<Self> {
        let z = zm1 + ONE;
        if !finite(zm1) || zm1 == ZERO || zm1 + c(2.0) == ZERO {
            return Err(Error::DomainError(format!("integrand argument {z} is singular")));
        }
        if zm1.im == 0.0 && zm1.re < 0.0 && zm1.re > -2.0 {
            return Err(Error::DomainError(format!("integrand argument {z} lies on the cut")));
        }
        Ok(Self { z, zm1, domain: Domain::OffCut })
    }

    /// On-cut argument x with -1 < x < 1.
    pub fn on_cut(x: f64) -> Result<Self> {
        if !(x > -1.0 && x < 1.0) || (1.0 - x) < ENDPOINT_TOL || (1.0 + x) < ENDPOINT_TOL {
            return Err(Error::DomainError(format!("x = {x} is not inside (-1, 1)")));
        }
        Ok(Self { z: c(x), zm1: c(x - 1.0), domain: Domain::OnCut })
    }

    /// Classifies `z` automatically: real points of (-1, 1) are on the cut.
    pub fn new(z: Complex64) -> Result<Self> {
        if z.im.abs() <= ARG_TOL && z.re > -1.0 && z.re < 1.0 {
            Self::on_cut(z.re)
        } else {
            Self::off_cut(z)
        }
    }

    pub fn z(&self) -> Complex64 {
        self.z
    }

    pub fn zm1(&self) -> Complex64 {
        self.zm1
    }

    pub fn domain(&self) -> Domain {
        self.domain
    }

    /// z² - 1 computed from z - 1.
    pub fn z2m1(&self) -> Complex64 {
        self.zm1 * (self.zm1 + c(2.0))
    }

    /// √(z²-1) = (z-1)^{1/2}(z+1)^{1/2}, analytic off (-∞, 1].
    pub fn sqrt_z2m1(&self) -> Complex64 {
        self.zm1.sqrt() * (self.zm1 + c(2.0)).sqrt()
    }
}

/// Reading of the phases in the on-cut Q combination. `Symmetric` uses
/// e^{-iπμ/2} on the upper and e^{+iπμ/2} on the lower boundary value;
/// `Printed` uses e^{-iπμ/2} on both.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum OnCutReading {
    Symmetric,
    Printed,
}

/// Value and first two z-derivatives with error estimates.
#[derive(Debug, Clone, Copy)]
pub(crate) struct Jet {
    pub v: [Complex64; 3],
    pub err: [f64; 3],
    pub terms: usize,
}

impl Jet {
    fn zero() -> Self {
        Self { v: [ZERO; 3], err: [0.0; 3], terms: 0 }
    }

    fn axpy(mut self, k: Complex64, o: &Jet) -> Self {
        for i in 0..3 {
            self.v[i] += k * o.v[i];
            self.err[i] += k.norm() * o.err[i];
        }
        self.terms += o.terms;
        self
    }

    fn scale(mut self, k: Complex64) -> Self {
        for i in 0..3 {
            self.v[i] *= k;
            self.err[i] *= k.norm();
        }
        self
    }

    pub(crate) fn result(&self, k: usize) -> EvalResult {
        EvalResult::new(self.v[k], self.err[k] + 1e-15 * self.v[k].norm(), self.terms)
    }
}

/// Logarithms fixing the branch at one evaluation point (off-cut point or
/// one side x ± i0 of the cut).
#[derive(Debug, Clone, Copy)]
struct Point {
    z: Complex64,
    zm1: Complex64,
    ln_zm1: Complex64,
    ln_zp1: Complex64,
    ln_z: Complex64,
}

impl Point {
    fn off_cut(arg: &LegendreArgument) -> Self {
        Self {
            z: arg.z,
            zm1: arg.zm1,
            ln_zm1: arg.zm1.ln(),
            ln_zp1: (arg.zm1 + c(2.0)).ln(),
            ln_z: arg.z.ln(),
        }
    }

    /// x + i0 for side = +1, x - i0 for side = -1.
    fn boundary(x: f64, side: f64) -> Self {
        let ln_z = if x < 0.0 { Complex64::new((-x).ln(), side * PI) } else { c(x.ln()) };
        Self {
            z: c(x),
            zm1: c(x - 1.0),
            ln_zm1: Complex64::new((1.0 - x).ln(), side * PI),
            ln_zp1: c((1.0 + x).ln()),
            ln_z,
        }
    }

    fn z2m1(&self) -> Complex64 {
        self.zm1 * (self.zm1 + c(2.0))
    }
}

fn p_jet_at(nu: Complex64, mu: Complex64, pt: &Point, order: usize) -> Result<Jet> {
    let w = -pt.zm1 * 0.5;
    let ratio = (mu * 0.5 * (pt.ln_zp1 - pt.ln_zm1)).exp();
    let g = hyp2f1_derivs(-nu, nu + ONE, ONE - mu, w, order)?;
    let mut jet = Jet::zero();
    jet.terms = g.iter().map(|r| r.terms_used).sum();
    let gv = [g[0].value, if order >= 1 { -g[1].value * 0.5 } else { ZERO }, if order >= 2 { g[2].value * 0.25 } else { ZERO }];
    let ge = [g[0].abs_error_est, if order >= 1 { g[1].abs_error_est * 0.5 } else { 0.0 }, if order >= 2 { g[2].abs_error_est * 0.25 } else { 0.0 }];
    let s = pt.z2m1();
    let r0 = ratio;
    let r1 = -mu * ratio / s;
    let r2 = ratio * mu * (mu + pt.z * 2.0) / (s * s);
    jet.v[0] = r0 * gv[0];
    jet.err[0] = r0.norm() * ge[0];
    if order >= 1 {
        jet.v[1] = r1 * gv[0] + r0 * gv[1];
        jet.err[1] = r1.norm() * ge[0] + r0.norm() * ge[1];
    }
    if order >= 2 {
        jet.v[2] = r2 * gv[0] + r1 * gv[1] * 2.0 + r0 * gv[2];
        jet.err[2] = r2.norm() * ge[0] + 2.0 * r1.norm() * ge[1] + r0.norm() * ge[2];
    }
    Ok(jet)
}

fn check_q_prefactor(nu: Complex64, mu: Complex64) -> Result<()> {
    if nonpositive_integer(nu + mu + ONE, POLE_TOL).is_some() {
        return Err(Error::PrefactorPole(format!("Γ(ν+μ+1) at ν+μ = {}", nu + mu)));
    }
    Ok(())
}

/// Q from the 1/z² hypergeometric series.
fn q_series_jet(nu: Complex64, mu: Complex64, pt: &Point, order: usize) -> Result<Jet> {
    let s_nm = nu + mu;
    let a = ONE + s_nm * 0.5;
    let b = c(0.5) + s_nm * 0.5;
    let cc = nu + c(1.5);
    let z = pt.z;
    let v = ONE / (z * z);
    let h = hyp2f1_derivs(a, b, cc, v, order)?;
    let k = exp_i_pi(mu) * cpow(c(2.0), -nu - ONE) * c(PI.sqrt()) * gamma(nu + mu + ONE)?;
    let sfac = (-(s_nm + ONE) * pt.ln_z + mu * 0.5 * (pt.ln_zm1 + pt.ln_zp1)).exp();
    let ks = k * sfac;
    let z2m1 = pt.z2m1();
    let l1 = -(s_nm + ONE) / z + mu * z / z2m1;
    let l1p = (s_nm + ONE) / (z * z) - mu * (z * z + ONE) / (z2m1 * z2m1);
    let dv = -c(2.0) / (z * z * z);
    let d2v = c(6.0) / (z * z * z * z);
    let mut jet = Jet::zero();
    jet.terms = h.iter().map(|r| r.terms_used).sum();
    let hv = h[0].value;
    let he = h[0].abs_error_est;
    jet.v[0] = ks * hv;
    jet.err[0] = ks.norm() * he;
    if order >= 1 {
        let hz = h[1].value * dv;
        let hze = h[1].abs_error_est * dv.norm();
        jet.v[1] = ks * (l1 * hv + hz);
        jet.err[1] = ks.norm() * (l1.norm() * he + hze);
        if order >= 2 {
            let hzz = h[2].value * dv * dv + h[1].value * d2v;
            let hzze = h[2].abs_error_est * dv.norm_sqr() + h[1].abs_error_est * d2v.norm();
            jet.v[2] = ks * ((l1 * l1 + l1p) * hv + l1 * hz * 2.0 + hzz);
            jet.err[2] = ks.norm() * ((l1 * l1 + l1p).norm() * he + 2.0 * l1.norm() * hze + hzze);
        }
    }
    Ok(jet)
}

/// Q = e^{iπμ} π/(2 sin πμ) [P^μ - Γ(ν+μ+1)/Γ(ν-μ+1) P^{-μ}] for non-integer μ.
fn q_recombine_raw(nu: Complex64, mu: Complex64, pt: &Point, order: usize) -> Result<Jet> {
    let s = sin_pi(mu);
    if s.norm() < 1e-10 {
        return Err(Error::DegenerateCombination(format!("sin πμ vanishes at μ = {mu}")));
    }
    let ratio = gamma_ratio(&[nu + mu + ONE], &[nu - mu + ONE])
        .map_err(|_| Error::PrefactorPole(format!("Γ(ν+μ+1) at ν+μ = {}", nu + mu)))?;
    let pp = p_jet_at(nu, mu, pt, order)?;
    let pm = p_jet_at(nu, -mu, pt, order)?;
    let k = exp_i_pi(mu) * c(PI) / (s * 2.0);
    Ok(pp.axpy(-ratio, &pm).scale(k))
}

/// Recombination with Richardson extrapolation in μ when μ is close to an
/// integer: symmetric means at offsets δ, 2δ, 3δ cancel the δ² and δ⁴ terms.
fn q_recombine(nu: Complex64, mu: Complex64, pt: &Point, order: usize) -> Result<Jet> {
    if integer_distance(mu) >= NEAR_INTEGER_ORDER {
        return q_recombine_raw(nu, mu, pt, order);
    }
    let weights = [1.5, -0.6, 0.1];
    let mut acc = Jet::zero();
    let mut spread = [0.0f64; 3];
    let mut first: Option<Jet> = None;
    for (k, wgt) in weights.iter().enumerate() {
        let d = c(ORDER_STEP * (k as f64 + 1.0));
        let hi = q_recombine_raw(nu, mu + d, pt, order)?;
        let lo = q_recombine_raw(nu, mu - d, pt, order)?;
        let mean = hi.scale(c(0.5)).axpy(c(0.5), &lo);
        acc = acc.axpy(c(*wgt), &mean);
        if let Some(f) = &first {
            for i in 0..3 {
                spread[i] = spread[i].max((mean.v[i] - f.v[i]).norm());
            }
        } else {
            first = Some(mean);
        }
    }
    // truncation of the extrapolation: the δ⁶ term is far below the spread
    for (e, s) in acc.err.iter_mut().zip(spread) {
        *e += 1e-6 * s;
    }
    Ok(acc)
}

fn q_jet_off_cut(nu: Complex64, mu: Complex64, arg: &LegendreArgument, order: usize) -> Result<Jet> {
    check_q_prefactor(nu, mu)?;
    let pt = Point::off_cut(arg);
    if arg.zm1.norm() < Q_NEAR_ONE || nu.norm() > Q_LARGE_DEGREE {
        q_recombine(nu, mu, &pt, order)
    } else {
        q_series_jet(nu, mu, &pt, order)
    }
}

pub(crate) fn jet(kind: FunctionKind, d: DegreeOrder, arg: &LegendreArgument, order: usize) -> Result<Jet> {
    match kind {
        FunctionKind::POffCut => {
            require_domain(arg, Domain::OffCut)?;
            p_jet_at(d.nu, d.mu, &Point::off_cut(arg), order)
        }
        FunctionKind::QOffCut => {
            require_domain(arg, Domain::OffCut)?;
            q_jet_off_cut(d.nu, d.mu, arg, order)
        }
        _ => Err(Error::DomainError("derivatives are available off the cut only".into())),
    }
}

fn require_domain(arg: &LegendreArgument, want: Domain) -> Result<()> {
    if arg.domain != want {
        return Err(Error::DomainError(format!("argument {} has domain {:?}, expected {:?}", arg.z, arg.domain, want)));
    }
    Ok(())
}

/// Boundary value F(x ± i0) of the off-cut function (side = ±1).
pub fn boundary_value(kind: FunctionKind, d: DegreeOrder, x: f64, side: f64) -> Result<EvalResult> {
    let arg = LegendreArgument::on_cut(x)?;
    let pt = Point::boundary(arg.z.re, side.signum());
    let jet = if kind.is_p() {
        p_jet_at(d.nu, d.mu, &pt, 0)?
    } else {
        check_q_prefactor(d.nu, d.mu)?;
        q_recombine(d.nu, d.mu, &pt, 0)?
    };
    Ok(jet.result(0))
}

/// On-cut Q with the chosen phase reading.
pub fn q_on_cut_with_reading(d: DegreeOrder, x: f64, reading: OnCutReading) -> Result<EvalResult> {
    let up = boundary_value(FunctionKind::QOffCut, d, x, 1.0)?;
    let down = boundary_value(FunctionKind::QOffCut, d, x, -1.0)?;
    let half = exp_i_pi(d.mu * 0.5);
    let lower_phase = match reading {
        OnCutReading::Symmetric => half,
        OnCutReading::Printed => ONE / half,
    };
    let k = exp_i_pi(-d.mu) * 0.5;
    let v = k * (up.value / half + down.value * lower_phase);
    let err = k.norm() * (up.abs_error_est / half.norm() + down.abs_error_est * lower_phase.norm());
    Ok(EvalResult::new(v, err, up.terms_used + down.terms_used))
}

fn p_on_cut(d: DegreeOrder, x: f64) -> Result<EvalResult> {
    let up = boundary_value(FunctionKind::POffCut, d, x, 1.0)?;
    let down = boundary_value(FunctionKind::POffCut, d, x, -1.0)?;
    let half = exp_i_pi(d.mu * 0.5);
    let v = (up.value * half + down.value / half) * 0.5;
    let err = 0.5 * (up.abs_error_est * half.norm() + down.abs_error_est / half.norm());
    Ok(EvalResult::new(v, err, up.terms_used + down.terms_used))
}

/// Evaluates the Legendre function of the given kind.
pub fn eval_legendre(kind: FunctionKind, d: DegreeOrder, arg: &LegendreArgument) -> Result<EvalResult> {
    match kind {
        FunctionKind::POffCut | FunctionKind::QOffCut => Ok(jet(kind, d, arg, 0)?.result(0)),
        FunctionKind::PCut => {
            require_domain(arg, Domain::OnCut)?;
            p_on_cut(d, arg.z.re)
        }
        FunctionKind::QCut => {
            require_domain(arg, Domain::OnCut)?;
            q_on_cut_with_reading(d, arg.z.re, OnCutReading::Symmetric)
        }
    }
}

/// F, dF/dz and d²F/dz² off the cut, from hypergeometric derivatives.
pub fn eval_with_derivatives(kind: FunctionKind, d: DegreeOrder, arg: &LegendreArgument) -> Result<[EvalResult; 3]> {
    let j = jet(kind, d, arg, 2)?;
    Ok([j.result(0), j.result(1), j.result(2)])
}

/// Residual of the associated Legendre equation,
/// (1-z²)F'' - 2zF' - μ²F/(1-z²) + ν(ν+1)F.
pub fn ode_residual(d: DegreeOrder, z: Complex64, f: [Complex64; 3]) -> Complex64 {
    let one_m = ONE - z * z;
    one_m * f[2] - z * f[1] * 2.0 - d.mu * d.mu / one_m * f[0] + d.nu * (d.nu + ONE) * f[0]
}

/// Off-cut P_ν^μ(z).
pub fn legendre_p(nu: Complex64, mu: Complex64, z: Complex64) -> Result<Complex64> {
    let arg = LegendreArgument::off_cut(z)?;
    Ok(eval_legendre(FunctionKind::POffCut, DegreeOrder::new(nu, mu), &arg)?.value)
}

/// Off-cut Q_ν^μ(z).
pub fn legendre_q(nu: Complex64, mu: Complex64, z: Complex64) -> Result<Complex64> {
    let arg = LegendreArgument::off_cut(z)?;
    Ok(eval_legendre(FunctionKind::QOffCut, DegreeOrder::new(nu, mu), &arg)?.value)
}
