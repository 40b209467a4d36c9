use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

use super::{DegreeOrder, Domain, LegendreArgument};
use crate::error::{Error, Result};
use crate::numerics::{c, cpow, exp_i_pi, gamma, nonpositive_integer, rgamma, EvalResult, ONE};

const TEMPLATE_TOL: f64 = 1e-12;

/// Elementary special cases. Values are returned in the normalisation
/// they are usually quoted in:
///
/// * `P0mu`: P_0^μ(z)
/// * `Q0mu`: Q_0^μ(z)
/// * `Qhalf`: e^{-iπ/2} Q_ν^{1/2}(z)
/// * `Phalf`: P_ν^{1/2}(z)
/// * `QnuNuPlus1`: e^{-iπ(ν+1)} Q_ν^{ν+1}(z)
/// * `PnuMinusNu`: P_ν^{-ν}(z)
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ClosedForm {
    P0mu,
    Q0mu,
    Qhalf,
    Phalf,
    QnuNuPlus1,
    PnuMinusNu,
}

fn template(ok: bool, which: ClosedForm, d: DegreeOrder) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::TemplateMismatch(format!("{which:?} at ν = {}, μ = {}", d.nu, d.mu)))
    }
}

/// sinh(x)/x, accurate near 0.
fn sinhc(x: Complex64) -> Complex64 {
    if x.norm() < 1e-4 {
        ONE + x * x / 6.0
    } else {
        x.sinh() / x
    }
}

pub fn closed_form(which: ClosedForm, d: DegreeOrder, arg: &LegendreArgument) -> Result<EvalResult> {
    if arg.domain() != Domain::OffCut {
        return Err(Error::DomainError("closed forms are evaluated off the cut".into()));
    }
    let (nu, mu) = (d.nu, d.mu);
    let zm1 = arg.zm1();
    let zp1 = zm1 + c(2.0);
    // ln((z+1)/(z-1)) and ln(z²-1) with the principal pieces
    let l_ratio = zp1.ln() - zm1.ln();
    let l_z2m1 = zp1.ln() + zm1.ln();
    let sq = arg.sqrt_z2m1();
    let v = match which {
        ClosedForm::P0mu => {
            template(nu.norm() <= TEMPLATE_TOL, which, d)?;
            rgamma(ONE - mu) * (mu * 0.5 * l_ratio).exp()
        }
        ClosedForm::Q0mu => {
            template(nu.norm() <= TEMPLATE_TOL, which, d)?;
            if nonpositive_integer(mu + ONE, TEMPLATE_TOL).is_some() {
                return Err(Error::PrefactorPole(format!("Γ(μ) at μ = {mu}")));
            }
            // ½ e^{iπμ} Γ(μ) 2 sinh(μL/2) = ½ e^{iπμ} Γ(1+μ) L sinhc(μL/2)
            let half = mu * 0.5 * l_ratio;
            exp_i_pi(mu) * 0.5 * gamma(ONE + mu)? * l_ratio * sinhc(half)
        }
        ClosedForm::Qhalf => {
            template((mu - c(0.5)).norm() <= TEMPLATE_TOL, which, d)?;
            c((PI / 2.0).sqrt()) * (-0.25 * l_z2m1).exp() * cpow(arg.z() + sq, -nu - c(0.5))
        }
        ClosedForm::Phalf => {
            template((mu - c(0.5)).norm() <= TEMPLATE_TOL, which, d)?;
            let theta = (arg.z() + sq).ln();
            c((2.0 / PI).sqrt()) * (-0.25 * l_z2m1).exp() * ((nu + c(0.5)) * theta).cosh()
        }
        ClosedForm::QnuNuPlus1 => {
            template((mu - nu - ONE).norm() <= TEMPLATE_TOL, which, d)?;
            if nonpositive_integer(nu + ONE, TEMPLATE_TOL).is_some() {
                return Err(Error::PrefactorPole(format!("Γ(ν+1) at ν = {nu}")));
            }
            cpow(c(2.0), nu) * gamma(nu + ONE)? * (-(nu + ONE) * 0.5 * l_z2m1).exp()
        }
        ClosedForm::PnuMinusNu => {
            template((mu + nu).norm() <= TEMPLATE_TOL, which, d)?;
            cpow(c(2.0), -nu) * rgamma(nu + ONE) * (nu * 0.5 * l_z2m1).exp()
        }
    };
    Ok(EvalResult::new(v, 4e-16 * v.norm() * (1.0 + (nu.norm() + mu.norm())), 1))
}
