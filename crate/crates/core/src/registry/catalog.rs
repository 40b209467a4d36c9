//! The identity table.

use num_complex::Complex64;
use std::sync::OnceLock;

use super::integrals as int;
use super::sides as s;
use super::{Constraint, Identity, ParamRange, Params, Side};
use crate::numerics::{integer_distance, sin_pi, ONE};

const STRUCTURAL: &[&str] = &["structural"];
const GENFUN: &[&str] = &["genfun"];
const FRAC: &[&str] = &["frac-consistency"];
const SINGLE: &[&str] = &["single-integral"];
const DOUBLE: &[&str] = &["double-integral"];
const CONFLUENT: &[&str] = &["confluent"];
const VARIANT: &[&str] = &["variant"];

const TOL_STRUCTURAL: f64 = 1e-9;
const TOL_GENFUN: f64 = 1e-9;
const TOL_FRAC: f64 = 1e-7;
const TOL_SINGLE: f64 = 1e-6;
const TOL_DOUBLE: f64 = 1e-4;
const TOL_CONFLUENT: f64 = 5e-3;
const TOL_BESSEL_SHIFT: f64 = 1e-5;

/// Smallest algebraic decay rate of a Weyl ray integrand that the
/// half-infinite rule resolves to the catalog tolerances.
const TAIL_DECAY: f64 = 0.25;

const NU_C: ParamRange = ParamRange::complex("nu", (0.1, 1.5), (-0.5, 0.5));
const MU_C: ParamRange = ParamRange::complex("mu", (-0.9, 0.9), (-0.3, 0.3));
const NU: ParamRange = ParamRange::real("nu", 0.1, 1.5);
const Z: ParamRange = ParamRange::real("z", 1.3, 3.0);
const X: ParamRange = ParamRange::real("x", -0.9, 0.9);
const KIND: ParamRange = ParamRange::real("q", 0.0, 1.0);

fn mu(lo: f64, hi: f64) -> ParamRange {
    ParamRange::real("mu", lo, hi)
}

fn lambda(lo: f64, hi: f64) -> ParamRange {
    ParamRange::real("lambda", lo, hi)
}

/// Distance of `w` from the poles of Γ (positive when clear of them).
fn pole_free(w: Complex64) -> f64 {
    if w.re > 0.5 {
        1.0
    } else {
        integer_distance(w)
    }
}

fn nu(p: &Params) -> Complex64 {
    p.get("nu")
}

fn mu_of(p: &Params) -> Complex64 {
    p.get("mu")
}

fn lam(p: &Params) -> Complex64 {
    p.get("lambda")
}

fn integer_lambda(p: &Params) -> Params {
    p.clone().with("lambda", lam(p).re.round())
}

struct Builder(Identity);

fn entry(id: &'static str, description: &'static str, anchor: &'static str, tags: &'static [&'static str], lhs: Side, rhs: Side, tol: f64) -> Builder {
    Builder(Identity {
        id,
        description,
        anchor,
        tags,
        params: Vec::new(),
        constraints: Vec::new(),
        reference: Vec::new(),
        lhs,
        rhs,
        default_tolerance: tol,
        variant_of: None,
    })
}

impl Builder {
    fn params(mut self, p: &[ParamRange]) -> Self {
        self.0.params.extend_from_slice(p);
        self
    }

    fn require(mut self, label: &'static str, margin: fn(&Params) -> f64) -> Self {
        self.0.constraints.push(Constraint { label, margin });
        self
    }

    fn at(mut self, r: &[(&'static str, f64)]) -> Self {
        self.0.reference = r.to_vec();
        self
    }

    fn variant_of(mut self, id: &'static str) -> Self {
        self.0.variant_of = Some(id);
        self.0.tags = VARIANT;
        self
    }

    fn done(self) -> Identity {
        let mut e = self.0;
        if e.params.iter().any(|r| r.name == "z") {
            e.constraints.insert(0, Constraint { label: "z > 1", margin: |p| p.get("z").re - 1.0 });
        }
        e
    }
}

pub(super) fn entries() -> &'static [Identity] {
    static CATALOG: OnceLock<Vec<Identity>> = OnceLock::new();
    CATALOG.get_or_init(|| {
        let mut v = Vec::new();
        v.extend(structural());
        v.extend(generating_functions());
        v.extend(operator_consistency());
        v.extend(single_integrals());
        v.extend(double_integrals());
        v.extend(confluent());
        v.sort_by(|a, b| a.id.cmp(b.id));
        v
    })
}

fn structural() -> Vec<Identity> {
    let generic = [NU_C, MU_C, Z];
    let at = [("nu", 0.6), ("mu", 0.25), ("z", 2.0)];
    vec![
        entry(
            "q-symmetry",
            "e^{-iπμ}Q_ν^μ against Γ(ν+μ+1)/Γ(ν-μ+1) e^{iπμ}Q_ν^{-μ}",
            "order reflection of Q read off from two loop representations with the same integral",
            STRUCTURAL,
            s::q_scaled,
            s::q_reflected_order,
            1e-10,
        )
        .params(&generic)
        .require("ν-μ+1 clear of Γ poles", |p| pole_free(nu(p) - mu_of(p) + ONE))
        .require("ν+μ+1 clear of Γ poles", |p| pole_free(nu(p) + mu_of(p) + ONE))
        .at(&at)
        .done(),
        entry(
            "p-degree-symmetry",
            "P_ν^μ against P_{-ν-1}^μ",
            "degree reflection of P, recovered from the P₃ loop at λ = ν+1",
            STRUCTURAL,
            s::p_plain,
            s::p_reflected_degree,
            TOL_STRUCTURAL,
        )
        .params(&generic)
        .at(&[("nu", 0.8), ("mu", 0.3), ("z", 1.9)])
        .done(),
        entry(
            "whipple",
            "e^{-iπμ}Q_ν^μ(z) against the degree/order exchange evaluated at z/√(z²-1)",
            "the exchange of degree and order quoted with the K₃ relations",
            STRUCTURAL,
            s::q_scaled,
            s::q_by_whipple,
            TOL_STRUCTURAL,
        )
        .params(&generic)
        .require("ν+μ+1 clear of Γ poles", |p| pole_free(nu(p) + mu_of(p) + ONE))
        .at(&at)
        .done(),
        entry(
            "p-via-q",
            "P_ν^μ against its expression through Q_ν^μ and Q_{-ν-1}^μ",
            "the P-from-Q connection used to split the Weyl M₊ result on P",
            STRUCTURAL,
            s::p_plain,
            s::p_by_q,
            TOL_STRUCTURAL,
        )
        .params(&generic)
        .require("cos πν away from zero", |p| crate::numerics::cos_pi(nu(p)).norm() - 0.05)
        .at(&at)
        .done(),
        entry(
            "q-via-p",
            "Q_ν^μ against its expression through P_ν^{±μ}",
            "the Q-from-P connection used for the K₃ results on Q",
            STRUCTURAL,
            s::q_plain,
            s::q_by_p,
            TOL_STRUCTURAL,
        )
        .params(&generic)
        .require("sin πμ away from zero", |p| sin_pi(mu_of(p)).norm() - 0.05)
        .require("ν+μ+1 clear of Γ poles", |p| pole_free(nu(p) + mu_of(p) + ONE))
        .at(&at)
        .done(),
        entry(
            "oncut-q-realness",
            "on-cut Q for real ν, μ against its real part, opposite phases on the two boundary values",
            "definition of Q on the cut from its boundary values",
            STRUCTURAL,
            s::q_cut_symmetric,
            s::q_cut_symmetric_re,
            TOL_STRUCTURAL,
        )
        .params(&[NU, mu(-0.9, 0.9), X])
        .require("ν+μ+1 clear of Γ poles", |p| pole_free(nu(p) + mu_of(p) + ONE))
        .require("|Re Q| not small", |p| s::q_cut_symmetric(p, &Default::default()).map_or(0.0, |v| v.value.re.abs() - 1e-3))
        .at(&[("nu", 0.6), ("mu", 0.3), ("x", 0.4)])
        .done(),
        entry(
            "oncut-q-realness-printed",
            "on-cut Q with the same phase on both boundary values, against its real part",
            "definition of Q on the cut, phases as printed",
            STRUCTURAL,
            s::q_cut_printed,
            s::q_cut_printed_re,
            TOL_STRUCTURAL,
        )
        .params(&[NU, mu(-0.9, 0.9), X])
        .require("ν+μ+1 clear of Γ poles", |p| pole_free(nu(p) + mu_of(p) + ONE))
        .require("sin πμ away from zero", |p| sin_pi(mu_of(p)).norm() - 0.05)
        .at(&[("nu", 0.6), ("mu", 0.3), ("x", 0.4)])
        .variant_of("oncut-q-realness")
        .done(),
        entry(
            "oncut-p-realness",
            "on-cut P for real ν, μ against its real part",
            "definition of P on the cut from its boundary values",
            STRUCTURAL,
            s::p_cut,
            s::p_cut_re,
            TOL_STRUCTURAL,
        )
        .params(&[NU, mu(-0.9, 0.9), X])
        .require("|x| < 1", |p| 1.0 - p.get("x").re.abs())
        .at(&[("nu", 0.6), ("mu", 0.3), ("x", 0.4)])
        .done(),
        entry(
            "ode-residual-p",
            "(1-z²)P'' - 2zP' against [μ²/(1-z²) - ν(ν+1)]P",
            "the associated Legendre equation",
            STRUCTURAL,
            s::ode_p_derivatives,
            s::ode_p_potential,
            TOL_STRUCTURAL,
        )
        .params(&generic)
        .require("ν(ν+1) - μ² not small", |p| (nu(p) * (nu(p) + ONE) - mu_of(p) * mu_of(p)).norm() - 0.05)
        .at(&at)
        .done(),
        entry(
            "ode-residual-q",
            "(1-z²)Q'' - 2zQ' against [μ²/(1-z²) - ν(ν+1)]Q",
            "the associated Legendre equation",
            STRUCTURAL,
            s::ode_q_derivatives,
            s::ode_q_potential,
            TOL_STRUCTURAL,
        )
        .params(&generic)
        .require("ν+μ+1 clear of Γ poles", |p| pole_free(nu(p) + mu_of(p) + ONE))
        .require("ν(ν+1) - μ² not small", |p| (nu(p) * (nu(p) + ONE) - mu_of(p) * mu_of(p)).norm() - 0.05)
        .at(&at)
        .done(),
        entry(
            "order-raise-recurrence",
            "-√(z²-1)F' + μz/√(z²-1)F against -F^{μ+1} (P for q < 1/2, Q otherwise)",
            "action of M₊ on the order",
            STRUCTURAL,
            s::order_raise_bracket,
            s::order_raised,
            TOL_STRUCTURAL,
        )
        .params(&[NU_C, MU_C, Z, KIND])
        .require("ν+μ+2 clear of Γ poles", |p| pole_free(nu(p) + mu_of(p) + 2.0))
        .at(&[("nu", 0.6), ("mu", 0.25), ("z", 2.0), ("q", 1.0)])
        .done(),
        entry(
            "order-lower-recurrence",
            "√(z²-1)F' + μz/√(z²-1)F against (ν+μ)(ν-μ+1)F^{μ-1}",
            "action of M₋ on the order",
            STRUCTURAL,
            s::order_lower_bracket,
            s::order_lowered,
            TOL_STRUCTURAL,
        )
        .params(&[NU_C, MU_C, Z, KIND])
        .require("(ν+μ)(ν-μ+1) not small", |p| ((nu(p) + mu_of(p)) * (nu(p) - mu_of(p) + ONE)).norm() - 0.05)
        .require("ν+μ clear of Γ poles", |p| pole_free(nu(p) + mu_of(p)))
        .at(&[("nu", 0.6), ("mu", 0.25), ("z", 2.0), ("q", 0.0)])
        .done(),
        entry(
            "degree-raise-recurrence",
            "-(z²-1)F' - (ν+1)zF against -(ν-μ+1)F_{ν+1}",
            "action of K₃ on the degree",
            STRUCTURAL,
            s::degree_raise_bracket,
            s::degree_raised,
            TOL_STRUCTURAL,
        )
        .params(&[NU_C, MU_C, Z, KIND])
        .require("ν+μ+1 clear of Γ poles", |p| pole_free(nu(p) + mu_of(p) + ONE))
        .at(&[("nu", 0.6), ("mu", 0.25), ("z", 2.0), ("q", 1.0)])
        .done(),
        entry(
            "degree-lower-recurrence",
            "-(z²-1)F' + νzF against (ν+μ)F_{ν-1}",
            "action of P₃ on the degree",
            STRUCTURAL,
            s::degree_lower_bracket,
            s::degree_lowered,
            TOL_STRUCTURAL,
        )
        .params(&[NU_C, MU_C, Z, KIND])
        .require("ν+μ not small", |p| (nu(p) + mu_of(p)).norm() - 0.05)
        .require("ν+μ clear of Γ poles", |p| pole_free(nu(p) + mu_of(p)))
        .at(&[("nu", 0.6), ("mu", 0.25), ("z", 2.0), ("q", 0.0)])
        .done(),
        entry("closed-p0mu", "closed form of P_0^μ against the general evaluation", "the ν = 0 input function for K₃", STRUCTURAL, s::closed_p0mu, s::direct_p0mu, TOL_STRUCTURAL)
            .params(&[MU_C, Z])
            .at(&[("mu", 0.3), ("z", 1.7)])
            .done(),
        entry("closed-q0mu", "closed form of Q_0^μ against the general evaluation", "the ν = 0 input function for K₃ and P₃ on Q", STRUCTURAL, s::closed_q0mu, s::direct_q0mu, TOL_STRUCTURAL)
            .params(&[MU_C, Z])
            .require("sin πμ away from zero", |p| sin_pi(mu_of(p)).norm() - 0.05)
            .require("μ+1 clear of Γ poles", |p| pole_free(mu_of(p) + ONE))
            .at(&[("mu", 0.3), ("z", 1.7)])
            .done(),
        entry("closed-q-half", "closed form of e^{-iπ/2}Q_ν^{1/2}", "the order-1/2 input for the M₊ loops", STRUCTURAL, s::closed_q_half, s::direct_q_half, TOL_STRUCTURAL)
            .params(&[NU_C, Z])
            .at(&[("nu", 0.6), ("z", 2.0)])
            .done(),
        entry("closed-p-half", "closed form of P_ν^{1/2}", "the order-1/2 input for the P loops", STRUCTURAL, s::closed_p_half, s::direct_p_half, TOL_STRUCTURAL)
            .params(&[NU_C, Z])
            .at(&[("nu", 0.6), ("z", 2.0)])
            .done(),
        entry("closed-q-top-order", "closed form of e^{-iπ(ν+1)}Q_ν^{ν+1}", "the top-order input for the M₊ loops on Q", STRUCTURAL, s::closed_q_top, s::direct_q_top, TOL_STRUCTURAL)
            .params(&[NU_C, Z])
            .at(&[("nu", 0.6), ("z", 2.0)])
            .done(),
        entry("closed-p-bottom-order", "closed form of P_ν^{-ν}", "the bottom-order input for the finite loops on P", STRUCTURAL, s::closed_p_bottom, s::direct_p_bottom, TOL_STRUCTURAL)
            .params(&[NU_C, Z])
            .at(&[("nu", 0.6), ("z", 2.0)])
            .done(),
        entry(
            "p3k3-commutator",
            "N'₊(-ν-1,μ,ν)N'₋(0,μ,ν+1) against N'₋(ν,μ,ν+1)N'₊(0,μ,ν)",
            "vanishing commutator of K₃^ν and P₃^{ν+1} on the ν = 0 function",
            STRUCTURAL,
            s::commutator_first,
            s::commutator_second,
            TOL_STRUCTURAL,
        )
        .params(&[NU_C, MU_C])
        .require("ν-μ+1 clear of Γ poles", |p| pole_free(nu(p) - mu_of(p) + ONE))
        .require("μ clear of integers", |p| integer_distance(mu_of(p)))
        .require("ν+μ+1 clear of Γ poles", |p| pole_free(nu(p) + mu_of(p) + ONE))
        .at(&[("nu", 0.6), ("mu", 0.25)])
        .done(),
    ]
}

fn generating_functions() -> Vec<Identity> {
    let boxes = [NU, mu(-0.9, 0.9), Z, ParamRange::real("frac", 0.05, 0.6), ParamRange::real("angle", -0.5, 0.5)];
    let at = [("nu", 0.6), ("mu", 0.3), ("z", 2.0), ("frac", 0.4), ("angle", 0.0)];
    let g = |id, description, anchor, closed: Side, series: Side| {
        entry(id, description, anchor, GENFUN, closed, series, TOL_GENFUN).params(&boxes).at(&at)
    };
    let q_ok = |b: Builder| b.require("ν+μ+1 clear of Γ poles", |p| pole_free(nu(p) + mu_of(p) + ONE));
    vec![
        g("genfun-order-raise-p", "exp(uM₊) closed form against the order series, P", "generating function of the order-raising group", s::gf_raise_p_closed, s::gf_raise_p_series).done(),
        q_ok(g("genfun-order-raise-q", "exp(uM₊) closed form against the order series, Q", "generating function of the order-raising group", s::gf_raise_q_closed, s::gf_raise_q_series)).done(),
        g("genfun-order-lower-p", "exp(uM₋) closed form against the lowering series, P", "generating function of the order-lowering group", s::gf_lower_p_closed, s::gf_lower_p_series)
            .require("ν-μ+1 clear of Γ poles", |p| pole_free(nu(p) - mu_of(p) + ONE))
            .done(),
        q_ok(g("genfun-order-lower-q", "exp(uM₋) closed form against the lowering series, Q", "generating function of the order-lowering group", s::gf_lower_q_closed, s::gf_lower_q_series))
            .done(),
        g("genfun-degree-lower-p", "exp(xP₃) closed form against the degree series, P", "generating function of the degree-lowering group", s::gf_p3_p_closed, s::gf_p3_p_series).done(),
        q_ok(g("genfun-degree-lower-q", "exp(xP₃) closed form against the degree series, Q", "generating function of the degree-lowering group", s::gf_p3_q_closed, s::gf_p3_q_series)).done(),
        g("genfun-degree-raise-p", "exp(xK₃) closed form against the degree series, P", "generating function of the degree-raising group", s::gf_k3_p_closed, s::gf_k3_p_series).done(),
        q_ok(g("genfun-degree-raise-q", "exp(xK₃) closed form against the degree series, Q", "generating function of the degree-raising group", s::gf_k3_q_closed, s::gf_k3_q_series)).done(),
        g("genfun-legendre-p", "(1-2hz+h²)^{-1/2} against Σ hⁿP_n(z)", "the classical Legendre generating function", s::gf_pn_closed, s::gf_pn_series).done(),
        g("genfun-legendre-q", "closed form of Σ hⁿQ_n(z), logarithm argument z - h + √D", "the generating function of the Q_n", s::gf_qn_closed, s::gf_qn_series).done(),
        g("genfun-legendre-q-printed", "closed form of Σ hⁿQ_n(z), logarithm argument as printed", "the generating function of the Q_n", s::gf_qn_printed_closed, s::gf_qn_printed_series)
            .variant_of("genfun-legendre-q")
            .done(),
        g("genfun-pnmu", "closed form against Σ hⁿ P_n^μ-type series", "generating function for integer degree and general order", s::gf_pnmu_closed, s::gf_pnmu_series)
            .require("μ clear of positive integers", |p| integer_distance(mu_of(p)).max(if mu_of(p).re < 0.5 { 1.0 } else { 0.0 }))
            .done(),
        g("genfun-double-series-p", "double series in the degree and order parameters, P", "the combined degree-order series started from P_0^0", s::gf_double_p_closed, s::gf_double_p_series).done(),
        g("genfun-double-series-q", "double series in the degree and order parameters, Q", "the combined degree-order series started from Q_0^0", s::gf_double_q_closed, s::gf_double_q_series).done(),
    ]
}

fn operator_consistency() -> Vec<Identity> {
    let at = [("nu", 0.6), ("mu", 0.2), ("lambda", 0.7), ("z", 2.0)];
    vec![
        entry(
            "frac-q-raise-integer",
            "Weyl M₊^n on e^{-iπμ}Q^μ at n = round(λ) ∈ {1, 2} against the order recurrence",
            "integer powers of the fractional raising operator",
            FRAC,
            |p, cfg| s::frac_q_raise(&integer_lambda(p), cfg),
            |p, cfg| s::q_raised_by_recurrence(&integer_lambda(p), cfg),
            TOL_FRAC,
        )
        .params(&[NU, mu(-0.5, 0.9), Z, ParamRange::real("lambda", 0.5, 2.49)])
        .require("λ rounds to 1 or 2", |p| (lam(p).re - 0.5).min(2.5 - lam(p).re))
        .require("ν+μ+1 clear of Γ poles", |p| pole_free(nu(p) + mu_of(p) + ONE))
        .at(&[("nu", 0.6), ("mu", 0.2), ("lambda", 1.0), ("z", 2.0)])
        .done(),
        entry("frac-q-raise", "Weyl M₊^λ on e^{-iπμ}Q^μ against Q^{μ+λ}", "Weyl raising of the order of Q, after scaling out the group variable", FRAC, s::frac_q_raise, s::q_order_plus_lambda, TOL_FRAC)
            .params(&[NU, mu(-0.5, 0.9), Z, lambda(-0.4, 1.5)])
            .require("Re(ν+μ+λ+1) > 0", |p| (nu(p) + mu_of(p) + lam(p) + ONE).re)
            .require("λ+1 clear of Γ poles", |p| pole_free(lam(p) + ONE))
            .require("ν+μ+1 clear of Γ poles", |p| pole_free(nu(p) + mu_of(p) + ONE))
            .at(&at)
            .done(),
        entry("frac-p-raise-riemann", "finite-loop M₊^λ on P^μ against P^{μ+λ}", "Riemann raising of the order of P in the shifted variable", FRAC, s::frac_p_raise_riemann, s::p_order_plus_lambda, TOL_FRAC)
            .params(&[NU, mu(-0.9, 0.7), Z, lambda(-0.4, 1.5)])
            .require("Re μ < 1", |p| 1.0 - mu_of(p).re)
            .require("λ+1 clear of Γ poles", |p| pole_free(lam(p) + ONE))
            .at(&[("nu", 0.7), ("mu", 0.2), ("lambda", 0.5), ("z", 1.5)])
            .done(),
        entry("frac-p-raise-weyl", "Weyl M₊^λ on P^μ against its P/Q split", "the two-term Weyl raising of P", FRAC, s::frac_p_raise_weyl, s::p_raise_two_term, TOL_FRAC)
            .params(&[NU, mu(0.0, 0.9), Z, lambda(0.2, 1.5)])
            .require("Re(-ν+μ+λ) > 0", |p| (mu_of(p) + lam(p) - nu(p)).re)
            .require("algebraic tail decays fast enough for the Weyl ray", |p| (mu_of(p) + lam(p) - nu(p)).re - TAIL_DECAY)
            .require("sin π(ν-μ-λ) away from zero", |p| sin_pi(nu(p) - mu_of(p) - lam(p)).norm() - 0.05)
            .at(&[("nu", 0.3), ("mu", 0.4), ("lambda", 0.5), ("z", 1.7)])
            .done(),
        entry("frac-p-raise-weyl-printed", "Weyl M₊^λ on P^μ against the split with the printed Q coefficient", "the two-term Weyl raising of P, coefficient as printed", FRAC, s::frac_p_raise_weyl, s::p_raise_two_term_printed, TOL_FRAC)
            .params(&[NU, mu(0.0, 0.9), Z, lambda(0.2, 1.5)])
            .require("Re(-ν+μ+λ) > 0", |p| (mu_of(p) + lam(p) - nu(p)).re)
            .require("algebraic tail decays fast enough for the Weyl ray", |p| (mu_of(p) + lam(p) - nu(p)).re - TAIL_DECAY)
            .require("sin π(ν-μ-λ) away from zero", |p| sin_pi(nu(p) - mu_of(p) - lam(p)).norm() - 0.05)
            .at(&[("nu", 0.3), ("mu", 0.4), ("lambda", 0.5), ("z", 1.7)])
            .variant_of("frac-p-raise-weyl")
            .done(),
        entry("frac-q-lower", "Weyl M₋^λ on e^{-iπμ}Q^μ against Q^{μ-λ}", "Weyl lowering of the order of Q", FRAC, s::frac_q_lower, s::q_order_minus_lambda, TOL_FRAC)
            .params(&[NU, mu(-0.5, 0.9), Z, lambda(0.1, 1.5)])
            .require("Re(ν-μ+λ+1) > 0", |p| (nu(p) - mu_of(p) + lam(p) + ONE).re)
            .require("ν+μ+1 clear of Γ poles", |p| pole_free(nu(p) + mu_of(p) + ONE))
            .require("ν+μ-λ+1 clear of Γ poles", |p| pole_free(nu(p) + mu_of(p) - lam(p) + ONE))
            .require("λ+1 clear of Γ poles", |p| pole_free(lam(p) + ONE))
            .at(&[("nu", 0.6), ("mu", 0.2), ("lambda", 0.45), ("z", 2.0)])
            .done(),
        entry("frac-p-lower", "Weyl M₋^λ on P^μ against P^{μ-λ}", "Weyl lowering of the order of P", FRAC, s::frac_p_lower, s::p_order_minus_lambda, TOL_FRAC)
            .params(&[NU, mu(-0.9, 0.0), Z, lambda(0.5, 2.5)])
            .require("Re(-ν-μ+λ) > 0", |p| (lam(p) - nu(p) - mu_of(p)).re)
            .require("algebraic tail decays fast enough for the Weyl ray", |p| (lam(p) - nu(p) - mu_of(p)).re - TAIL_DECAY)
            .require("-ν-μ+λ clear of Γ poles", |p| pole_free(lam(p) - nu(p) - mu_of(p)))
            .require("-ν-μ clear of Γ poles", |p| pole_free(-nu(p) - mu_of(p)))
            .at(&[("nu", 0.3), ("mu", -0.2), ("lambda", 0.6), ("z", 1.8)])
            .done(),
        entry("frac-k3-p", "Weyl K₃^λ on P_ν against P_{ν+λ}", "fractional degree raising of P", FRAC, s::frac_k3_p, s::p_degree_plus_lambda, TOL_FRAC)
            .params(&[NU, mu(-0.9, 0.9), Z, lambda(-0.4, 1.5)])
            .require("Re(ν+λ-μ+1) > 0", |p| (nu(p) + lam(p) - mu_of(p) + ONE).re)
            .require("λ+1 clear of Γ poles", |p| pole_free(lam(p) + ONE))
            .require("ν-μ+1 clear of Γ poles", |p| pole_free(nu(p) - mu_of(p) + ONE))
            .at(&[("nu", 0.4), ("mu", 0.2), ("lambda", 0.6), ("z", 1.8)])
            .done(),
        entry("frac-k3-q", "Weyl K₃^λ on Q_ν against Q_{ν+λ}", "fractional degree raising of Q", FRAC, s::frac_k3_q, s::q_degree_plus_lambda, TOL_FRAC)
            .params(&[NU, mu(-0.9, 0.9), Z, lambda(-0.4, 1.5)])
            .require("Re(ν+λ-μ+1) > 0", |p| (nu(p) + lam(p) - mu_of(p) + ONE).re)
            .require("Re(ν+λ+μ+1) > 0", |p| (nu(p) + lam(p) + mu_of(p) + ONE).re)
            .require("λ+1 clear of Γ poles", |p| pole_free(lam(p) + ONE))
            .require("ν-μ+1 clear of Γ poles", |p| pole_free(nu(p) - mu_of(p) + ONE))
            .require("ν+μ+1 clear of Γ poles", |p| pole_free(nu(p) + mu_of(p) + ONE))
            .at(&[("nu", 0.4), ("mu", 0.2), ("lambda", 0.6), ("z", 1.8)])
            .done(),
        entry("frac-p3-p", "Weyl P₃^λ on P_ν against P_{ν-λ}", "fractional degree lowering of P", FRAC, s::frac_p3_p, s::p_degree_minus_lambda, TOL_FRAC)
            .params(&[NU, mu(-0.9, 0.9), Z, lambda(0.5, 3.0)])
            .require("Re(λ-ν-μ) > 0", |p| (lam(p) - nu(p) - mu_of(p)).re)
            .require("algebraic tail decays fast enough for the Weyl ray", |p| (lam(p) - nu(p) - mu_of(p)).re - TAIL_DECAY)
            .require("-ν-μ clear of Γ poles", |p| pole_free(-nu(p) - mu_of(p)))
            .require("λ+1 clear of Γ poles", |p| pole_free(lam(p) + ONE))
            .at(&[("nu", 0.3), ("mu", 0.2), ("lambda", 1.2), ("z", 1.8)])
            .done(),
        entry("frac-p3-q-weyl", "Weyl P₃^λ on e^{-iπμ}Q_ν against its P/Q split", "the two-term Weyl lowering of the degree of Q", FRAC, s::frac_p3_q_weyl, s::p3_q_two_term, TOL_FRAC)
            .params(&[NU, mu(-0.9, 0.9), Z, lambda(0.5, 3.0)])
            .require("Re(λ-ν+μ) > 0", |p| (lam(p) - nu(p) + mu_of(p)).re)
            .require("algebraic tail decays fast enough for the Weyl ray", |p| (lam(p) - nu(p) + mu_of(p)).re - TAIL_DECAY)
            .require("Re(λ-ν-μ) > 0", |p| (lam(p) - nu(p) - mu_of(p)).re)
            .require("algebraic tail decays fast enough for the Weyl ray", |p| (lam(p) - nu(p) - mu_of(p)).re - TAIL_DECAY)
            .require("sin π(ν-λ±μ) away from zero", |p| {
                sin_pi(nu(p) - lam(p) + mu_of(p)).norm().min(sin_pi(nu(p) - lam(p) - mu_of(p)).norm()) - 0.05
            })
            .require("ν+μ+1 clear of Γ poles", |p| pole_free(nu(p) + mu_of(p) + ONE))
            .at(&[("nu", 0.2), ("mu", 0.3), ("lambda", 0.85), ("z", 1.7)])
            .done(),
        entry("frac-p3-q-weyl-printed", "Weyl P₃^λ on e^{-iπμ}Q_ν against the split as printed", "the two-term Weyl lowering of the degree of Q, coefficients as printed", FRAC, s::frac_p3_q_weyl, s::p3_q_two_term_printed, TOL_FRAC)
            .params(&[NU, mu(-0.9, 0.9), Z, lambda(0.5, 3.0)])
            .require("Re(λ-ν+μ) > 0", |p| (lam(p) - nu(p) + mu_of(p)).re)
            .require("algebraic tail decays fast enough for the Weyl ray", |p| (lam(p) - nu(p) + mu_of(p)).re - TAIL_DECAY)
            .require("Re(λ-ν-μ) > 0", |p| (lam(p) - nu(p) - mu_of(p)).re)
            .require("algebraic tail decays fast enough for the Weyl ray", |p| (lam(p) - nu(p) - mu_of(p)).re - TAIL_DECAY)
            .require("sin π(ν-λ±μ) away from zero", |p| {
                sin_pi(nu(p) - lam(p) + mu_of(p)).norm().min(sin_pi(nu(p) - lam(p) - mu_of(p)).norm()) - 0.05
            })
            .require("ν+μ+1 clear of Γ poles", |p| pole_free(nu(p) + mu_of(p) + ONE))
            .at(&[("nu", 0.2), ("mu", 0.3), ("lambda", 0.85), ("z", 1.7)])
            .variant_of("frac-p3-q-weyl")
            .done(),
        entry("frac-p3-q-riemann", "finite-loop P₃^λ on Q_ν against Q_{ν-λ}", "Riemann lowering of the degree of Q", FRAC, s::frac_p3_q_riemann, s::q_degree_minus_lambda, TOL_FRAC)
            .params(&[NU, mu(-0.9, 0.9), Z, lambda(-0.4, 1.5)])
            .require("λ+1 clear of Γ poles", |p| pole_free(lam(p) + ONE))
            .require("ν+μ+1 clear of Γ poles", |p| pole_free(nu(p) + mu_of(p) + ONE))
            .require("ν-λ+μ+1 clear of Γ poles", |p| pole_free(nu(p) - lam(p) + mu_of(p) + ONE))
            .at(&[("nu", 0.6), ("mu", 0.2), ("lambda", 0.4), ("z", 1.8)])
            .done(),
        entry("frac-semigroup", "M₊^{λ₂}M₊^{λ₁} against M₊^{λ₁+λ₂} on e^{-iπμ}Q^μ", "product law of the fractional operators", FRAC, s::frac_semigroup_composed, s::frac_semigroup_direct, TOL_FRAC)
            .params(&[NU, mu(-0.5, 0.9), Z, ParamRange::real("lambda1", 0.1, 0.9), ParamRange::real("lambda2", 0.1, 0.9)])
            .require("ν+μ+1 clear of Γ poles", |p| pole_free(nu(p) + mu_of(p) + ONE))
            .at(&[("nu", 0.6), ("mu", 0.2), ("lambda1", 0.3), ("lambda2", 0.4), ("z", 2.0)])
            .done(),
        entry("frac-phase-routes", "M₋^λ on Q along the loop above and below the singular points", "the phase choice of the lowering contour", FRAC, s::mminus_route_printed, s::mminus_route_below, TOL_FRAC)
            .params(&[NU, mu(-0.5, 0.9), Z, lambda(0.1, 1.5)])
            .require("Re(ν-μ+λ+1) > 0", |p| (nu(p) - mu_of(p) + lam(p) + ONE).re)
            .require("ν+μ+1 clear of Γ poles", |p| pole_free(nu(p) + mu_of(p) + ONE))
            .require("ν+μ-λ+1 clear of Γ poles", |p| pole_free(nu(p) + mu_of(p) - lam(p) + ONE))
            .require("λ+1 clear of Γ poles", |p| pole_free(lam(p) + ONE))
            .at(&[("nu", 0.6), ("mu", 0.2), ("lambda", 0.45), ("z", 2.0)])
            .done(),
        entry("frac-inverse", "M₊^{-λ}M₊^λ on e^{-iπμ}Q^μ against the input", "inverse of the fractional raising operator", FRAC, s::frac_raise_then_inverse, s::q_scaled_plain, TOL_FRAC)
            .params(&[NU, mu(-0.5, 0.9), Z, lambda(0.1, 0.9)])
            .require("ν+μ+1 clear of Γ poles", |p| pole_free(nu(p) + mu_of(p) + ONE))
            .require("λ clear of integers", |p| integer_distance(lam(p)))
            .at(&[("nu", 0.6), ("mu", 0.2), ("lambda", 0.35), ("z", 2.0)])
            .done(),
        entry("frac-collapse", "collapsed line integral against the keyhole loop, M₊^λ on Q with Re λ < 0", "collapse of the loop for negative λ", FRAC, s::frac_q_raise_collapsed, s::frac_q_raise_keyhole, TOL_FRAC)
            .params(&[NU, mu(-0.5, 0.9), Z, lambda(-0.9, -0.1)])
            .require("Re λ < 0", |p| -lam(p).re)
            .require("Re(ν+μ+λ+1) > 0", |p| (nu(p) + mu_of(p) + lam(p) + ONE).re)
            .require("λ+1 clear of Γ poles", |p| pole_free(lam(p) + ONE))
            .require("ν+μ+1 clear of Γ poles", |p| pole_free(nu(p) + mu_of(p) + ONE))
            .at(&[("nu", 0.5), ("mu", 0.3), ("lambda", -0.3), ("z", 2.2)])
            .done(),
    ]
}

fn single_integrals() -> Vec<Identity> {
    let i = |id, description, anchor, lhs: Side, rhs: Side| entry(id, description, anchor, SINGLE, lhs, rhs, TOL_SINGLE);
    let nu_mu_1 = |b: Builder| b.require("Re(ν+μ+1) > 0", |p| (nu(p) + mu_of(p) + ONE).re);
    let nu_minus_mu_1 = |b: Builder| b.require("Re(ν-μ+1) > 0", |p| (nu(p) - mu_of(p) + ONE).re);
    vec![
        nu_mu_1(i("int-q-half-argument", "(z²-1)^{-μ/2}e^{-iπμ}Q_ν^μ as a Weyl loop in Z from the order-1/2 Q", "Weyl M₊ loop with the order-1/2 Q as input, argument variable", int::lhs_q_scaled, int::q_half_argument_loop))
            .params(&[NU, mu(-0.4, 1.6), Z])
            .require("μ+1/2 clear of Γ poles", |p| pole_free(mu_of(p) + 0.5))
            .at(&[("nu", 0.6), ("mu", 0.3), ("z", 2.0)])
            .done(),
        nu_mu_1(i("int-q-half-angle", "e^{-iπμ}Q_ν^μ(cosh θ) as a Weyl loop in θ'", "Weyl M₊ loop with the order-1/2 Q as input, hyperbolic angle; collapses to the classical line integral", int::lhs_q_phase, int::q_half_angle_loop))
            .params(&[NU, mu(-0.4, 1.6), Z])
            .require("μ+1/2 clear of Γ poles", |p| pole_free(mu_of(p) + 0.5))
            .at(&[("nu", 0.6), ("mu", 0.3), ("z", 2.0)])
            .done(),
        i("int-p-half-angle", "P_ν^μ(cosh θ) as a finite loop from θ' = 0 around θ", "Riemann M₊ loop with the order-1/2 P as input, hyperbolic angle", int::lhs_p, int::p_half_angle_finite_loop)
            .params(&[NU, mu(-0.4, 1.6), Z])
            .require("μ+1/2 clear of Γ poles", |p| pole_free(mu_of(p) + 0.5))
            .at(&[("nu", 0.6), ("mu", 0.3), ("z", 2.0)])
            .done(),
        i("int-q-top-order-u", "e^{-iπ(ν+λ+1)}Q_ν^{ν+λ+1} as a Weyl loop in u from Q_ν^{ν+1}", "Weyl M₊ loop with the top-order Q as input, group variable", int::lhs_q_top_order, int::q_top_order_u_loop)
            .params(&[NU, Z, lambda(-0.9, 1.5)])
            .require("Re(2ν+λ+2) > 0", |p| (nu(p) * 2.0 + lam(p) + 2.0).re)
            .require("λ+1 clear of Γ poles", |p| pole_free(lam(p) + ONE))
            .at(&[("nu", 0.6), ("lambda", 0.4), ("z", 2.0)])
            .done(),
        nu_mu_1(i("int-q-top-order-u-mu", "e^{-iπμ}Q_ν^μ from the u-loop at λ = μ-ν-1, prefactor (z²-1)^{(ν+1)/2}", "Weyl M₊ loop with the top-order Q as input at λ = μ-ν-1", int::lhs_q_phase, int::q_top_order_u_loop_at_mu))
            .params(&[NU, mu(-0.5, 2.0), Z])
            .require("μ-ν clear of Γ poles", |p| pole_free(mu_of(p) - nu(p)))
            .at(&[("nu", 0.6), ("mu", 0.3), ("z", 2.0)])
            .done(),
        nu_mu_1(i("int-q-top-order-u-mu-printed", "e^{-iπμ}Q_ν^μ from the u-loop at λ = μ-ν-1, prefactor (z²-1)^{μ/2} as printed", "Weyl M₊ loop with the top-order Q as input at λ = μ-ν-1, prefactor as printed", int::lhs_q_phase, int::q_top_order_u_loop_at_mu_printed))
            .params(&[NU, mu(-0.5, 2.0), Z])
            .require("μ-ν clear of Γ poles", |p| pole_free(mu_of(p) - nu(p)))
            .at(&[("nu", 0.6), ("mu", 0.3), ("z", 2.0)])
            .variant_of("int-q-top-order-u-mu")
            .done(),
        nu_mu_1(i("int-q-top-order-argument", "e^{-iπμ}Q_ν^μ as a Weyl loop in Z around z from Q_ν^{ν+1}", "the same loop written in the argument variable", int::lhs_q_phase, int::q_top_order_argument_loop))
            .params(&[NU, mu(-0.5, 2.0), Z])
            .require("μ-ν clear of Γ poles", |p| pole_free(mu_of(p) - nu(p)))
            .at(&[("nu", 0.6), ("mu", 0.3), ("z", 2.0)])
            .done(),
        nu_mu_1(i("int-q-top-order-angle", "e^{-iπμ}Q_ν^μ(cosh θ) as a Weyl loop in θ' from Q_ν^{ν+1}", "the same loop in the hyperbolic angle, differing from the order-1/2 form", int::lhs_q_phase, int::q_top_order_angle_loop))
            .params(&[NU, mu(-0.5, 2.0), Z])
            .require("μ-ν clear of Γ poles", |p| pole_free(mu_of(p) - nu(p)))
            .at(&[("nu", 0.6), ("mu", 0.3), ("z", 2.0)])
            .done(),
        i("int-p-bottom-order-argument", "P_ν^μ as a finite loop in Z from 1 around z, from P_ν^{-ν}", "Riemann M₊ loop with the bottom-order P as input, argument variable", int::lhs_p, int::p_bottom_order_argument_loop)
            .params(&[NU, mu(-0.9, 1.5), Z])
            .require("Re(ν+1) > 0", |p| (nu(p) + ONE).re)
            .require("ν+μ+1 clear of Γ poles", |p| pole_free(nu(p) + mu_of(p) + ONE))
            .at(&[("nu", 0.6), ("mu", 0.3), ("z", 2.0)])
            .done(),
        i("int-p-bottom-order-angle", "P_ν^μ(cosh θ) as a finite loop in θ' from 0, from P_ν^{-ν}", "Riemann M₊ loop with the bottom-order P as input, hyperbolic angle", int::lhs_p, int::p_bottom_order_angle_loop)
            .params(&[NU, mu(-0.9, 1.5), Z])
            .require("Re(ν+1) > 0", |p| (nu(p) + ONE).re)
            .require("ν+μ+1 clear of Γ poles", |p| pole_free(nu(p) + mu_of(p) + ONE))
            .at(&[("nu", 0.6), ("mu", 0.3), ("z", 2.0)])
            .done(),
        nu_minus_mu_1(i("int-q-lowered-argument", "e^{-iπμ}Q_ν^μ from the Weyl M₋ loop on the order-1/2 Q, Γ(3/2-μ) in front", "Weyl M₋ loop with the order-1/2 Q as input, argument variable", int::lhs_q_phase, int::q_lowered_argument_loop))
            .params(&[NU, mu(-0.9, 1.2), Z])
            .require("3/2-μ clear of Γ poles", |p| pole_free(1.5 - mu_of(p)))
            .require("ν+μ+1 clear of Γ poles", |p| pole_free(nu(p) + mu_of(p) + ONE))
            .at(&[("nu", 0.6), ("mu", 0.3), ("z", 2.0)])
            .done(),
        nu_minus_mu_1(i("int-q-lowered-argument-printed", "e^{-iπμ}Q_ν^μ from the Weyl M₋ loop on the order-1/2 Q, Γ(1/2-μ) in front as printed", "Weyl M₋ loop with the order-1/2 Q as input, prefactor as printed", int::lhs_q_phase, int::q_lowered_argument_loop_printed))
            .params(&[NU, mu(-0.9, 1.2), Z])
            .require("1/2-μ clear of Γ poles", |p| pole_free(0.5 - mu_of(p)))
            .require("ν+μ+1 clear of Γ poles", |p| pole_free(nu(p) + mu_of(p) + ONE))
            .at(&[("nu", 0.6), ("mu", 0.3), ("z", 2.0)])
            .variant_of("int-q-lowered-argument")
            .done(),
        nu_minus_mu_1(i("int-q-lowered-angle", "e^{-iπμ}Q_ν^μ(cosh θ) as a Weyl loop of (cosh θ' - cosh θ)^{μ-1/2}", "the lowered Q loop after one integration by parts", int::lhs_q_phase, int::q_lowered_angle_loop))
            .params(&[NU, mu(-0.9, 1.2), Z])
            .require("1/2-μ clear of Γ poles", |p| pole_free(0.5 - mu_of(p)))
            .require("ν+μ+1 clear of Γ poles", |p| pole_free(nu(p) + mu_of(p) + ONE))
            .at(&[("nu", 0.6), ("mu", 0.3), ("z", 2.0)])
            .done(),
        nu_minus_mu_1(i("int-q-lowered-line", "e^{-iπμ}Q_ν^μ(cosh θ) as a line integral over (θ, ∞)", "the collapsed form of the lowered Q loop", int::lhs_q_phase, int::q_lowered_angle_line))
            .params(&[NU, mu(-0.45, 1.2), Z])
            .require("Re μ > -1/2", |p| mu_of(p).re + 0.5)
            .require("ν+μ+1 clear of Γ poles", |p| pole_free(nu(p) + mu_of(p) + ONE))
            .at(&[("nu", 0.6), ("mu", 0.3), ("z", 2.0)])
            .done(),
        i("int-p-negative-order-angle", "P_ν^{-μ}(cosh θ) as a Weyl loop with sinh((ν+1/2)θ')", "Weyl M₋ loop with the order-1/2 P as input", int::lhs_p_negative_order, int::p_negative_order_angle_loop)
            .params(&[NU, mu(0.0, 2.5), Z])
            .require("Re(μ+ν+1) > 0", |p| (mu_of(p) + nu(p) + ONE).re)
            .require("Re(μ-ν) > 0", |p| (mu_of(p) - nu(p)).re)
            .require("cos πν away from zero", |p| crate::numerics::cos_pi(nu(p)).norm() - 0.05)
            .at(&[("nu", 0.3), ("mu", 0.8), ("z", 2.0)])
            .done(),
        nu_minus_mu_1(i("int-k3-p-y", "P_ν^μ(y/√(y²-1)) as a Weyl loop in Y from P_0^μ", "K₃ loop with P_0^μ as input, variable y", int::lhs_p, int::p_from_p0_y_loop))
            .params(&[NU, mu(-0.9, 0.9), Z])
            .at(&[("nu", 0.6), ("mu", 0.3), ("z", 2.0)])
            .done(),
        nu_minus_mu_1(i("int-k3-p-angle", "P_ν^μ(coth φ) as a Weyl loop of e^{μφ'}", "K₃ loop with P_0^μ as input, hyperbolic angle", int::lhs_p, int::p_from_p0_angle_loop))
            .params(&[NU, mu(-0.9, 0.9), Z])
            .at(&[("nu", 0.6), ("mu", 0.3), ("z", 2.0)])
            .done(),
        nu_minus_mu_1(i("int-k3-p-u", "P_ν^μ(z) as a Weyl loop in u of (z+u+√(u²+2zu+1))^μ", "K₃ loop with P_0^μ as input, group variable", int::lhs_p, int::p_from_p0_u_loop))
            .params(&[NU, mu(-0.9, 0.9), Z])
            .at(&[("nu", 0.6), ("mu", 0.3), ("z", 2.0)])
            .done(),
        i("int-k3-p-unity", "P_ν(z) as a Weyl loop in u of (u²+2zu+1)^{-1/2}", "the μ = 0 case of the K₃ loop", int::lhs_p, int::p_from_unity_u_loop)
            .params(&[NU, Z])
            .at(&[("nu", 0.6), ("z", 2.0)])
            .done(),
        i("int-k3-q-angle", "e^{-iπμ}Q_ν^μ(coth φ) as a Weyl loop of sinh μφ'", "K₃ loop with Q_0^μ as input, hyperbolic angle, with the order phase on the left", int::lhs_q_phase, int::q_from_q0_angle_loop)
            .params(&[NU, mu(-0.9, 0.9), Z])
            .require("Re(ν-μ+1) > 0", |p| (nu(p) - mu_of(p) + ONE).re)
            .require("Re(ν+μ+1) > 0", |p| (nu(p) + mu_of(p) + ONE).re)
            .require("sin πμ away from zero", |p| sin_pi(mu_of(p)).norm() - 0.05)
            .at(&[("nu", 0.6), ("mu", 0.3), ("z", 2.0)])
            .done(),
        i("int-k3-q-angle-printed", "Q_ν^μ(coth φ) against the same loop, left side as printed", "K₃ loop with Q_0^μ as input, hyperbolic angle, left side without the order phase", int::lhs_q, int::q_from_q0_angle_loop)
            .params(&[NU, mu(-0.9, 0.9), Z])
            .require("Re(ν-μ+1) > 0", |p| (nu(p) - mu_of(p) + ONE).re)
            .require("Re(ν+μ+1) > 0", |p| (nu(p) + mu_of(p) + ONE).re)
            .require("sin πμ away from zero", |p| sin_pi(mu_of(p)).norm() - 0.05)
            .at(&[("nu", 0.6), ("mu", 0.3), ("z", 2.0)])
            .variant_of("int-k3-q-angle")
            .done(),
        i("int-p3-p-angle", "P_{-λ}^μ(coth φ) as a Weyl loop of e^{μφ'}", "P₃ loop with P_0^μ as input, hyperbolic angle", int::lhs_p_lowered_degree, int::p_lowered_degree_angle_loop)
            .params(&[mu(-0.9, 0.9), Z, lambda(0.2, 2.5)])
            .require("Re(λ-μ) > 0", |p| (lam(p) - mu_of(p)).re)
            .at(&[("mu", 0.3), ("lambda", 1.4), ("z", 2.0)])
            .done(),
        i("int-p3-q-finite", "e^{-iπμ}Q_{-λ}^μ(coth φ) as a finite loop of cosh μφ' from 0", "Riemann P₃ loop with Q_0^μ as input, after the partial integration", int::lhs_q_lowered_degree_phase, int::q_lowered_degree_finite_loop)
            .params(&[mu(0.1, 1.5), Z, lambda(0.2, 2.0)])
            .require("μ-λ+1 clear of Γ poles", |p| pole_free(mu_of(p) - lam(p) + ONE))
            .at(&[("mu", 0.3), ("lambda", 0.7), ("z", 2.0)])
            .done(),
        i("int-p3-q-finite-printed", "Q_{-λ}^μ(coth φ) as a finite loop of sinh μφ' with 1/Γ(μ), as printed", "Riemann P₃ loop with Q_0^μ as input, integrand as printed", int::lhs_q_lowered_degree, int::q_lowered_degree_finite_loop_printed)
            .params(&[mu(0.1, 1.5), Z, lambda(0.2, 2.0)])
            .require("μ-λ+1 clear of Γ poles", |p| pole_free(mu_of(p) - lam(p) + ONE))
            .require("μ clear of integers", |p| integer_distance(mu_of(p)))
            .at(&[("mu", 0.3), ("lambda", 0.7), ("z", 2.0)])
            .variant_of("int-p3-q-finite")
            .done(),
    ]
}

fn double_integrals() -> Vec<Identity> {
    let at = [("nu", 0.6), ("mu", 0.3), ("z", 2.0)];
    let d = |id, description, anchor, lhs: Side, rhs: Side| entry(id, description, anchor, DOUBLE, lhs, rhs, TOL_DOUBLE).params(&[NU, mu(-0.4, 1.2), Z]).at(&at);
    vec![
        d("dbl-p-from-unity", "P_ν^μ from M₊^μ K₃^ν acting on P_0^0 = 1", "double loop for P built from the constant function", int::lhs_p, int::double_p_from_unity)
            .require("Re(ν+1) > 0", |p| (nu(p) + ONE).re)
            .require("μ+1 clear of Γ poles", |p| pole_free(mu_of(p) + ONE))
            .done(),
        d("dbl-q-from-q00", "e^{-iπμ}Q_ν^μ from M₊^μ K₃^ν acting on Q_0^0", "double loop for Q built from Q_0^0, with the order phase on the left", int::lhs_q_phase, int::double_q_from_q00)
            .require("Re(ν+1) > 0", |p| (nu(p) + ONE).re)
            .require("Re(ν+μ+1) > 0", |p| (nu(p) + mu_of(p) + ONE).re)
            .require("μ+1 clear of Γ poles", |p| pole_free(mu_of(p) + ONE))
            .done(),
        d("dbl-q-from-q00-printed", "Q_ν^μ against the same double loop, left side as printed", "double loop for Q built from Q_0^0, left side without the order phase", int::lhs_q, int::double_q_from_q00)
            .require("Re(ν+1) > 0", |p| (nu(p) + ONE).re)
            .require("Re(ν+μ+1) > 0", |p| (nu(p) + mu_of(p) + ONE).re)
            .require("μ+1 clear of Γ poles", |p| pole_free(mu_of(p) + ONE))
            .variant_of("dbl-q-from-q00")
            .done(),
        d("dbl-p-two-raises", "P_ν^μ from M₊^μ M₊^ν acting on P_ν^{-ν}", "double finite loop for P from two order raises", int::lhs_p, int::double_p_two_raises)
            .require("Re(ν+1) > 0", |p| (nu(p) + ONE).re)
            .require("μ+1 clear of Γ poles", |p| pole_free(mu_of(p) + ONE))
            .done(),
        d("dbl-q-two-raises", "e^{-iπμ}Q_ν^μ from M₊^μ M₊^{-ν-1} acting on Q_ν^{ν+1}", "double Weyl loop for Q from two order raises", int::lhs_q_phase, int::double_q_two_raises)
            .require("Re(ν+μ+1) > 0", |p| (nu(p) + mu_of(p) + ONE).re)
            .require("ν at least 0.1 from integers", |p| integer_distance(nu(p)) - 0.05)
            .require("μ+1 clear of Γ poles", |p| pole_free(mu_of(p) + ONE))
            .done(),
        d("dbl-q-degree-pair", "e^{-iπμ}Q_ν^μ(y/√(y²-1)) from K₃^ν P₃^{μ-1} acting on Q_{μ-1}^μ", "double loop for Q from a degree lowering followed by a raising, prefactor rederived", int::lhs_q_phase, int::double_q_degree_pair)
            .require("Re μ > -1/2", |p| mu_of(p).re + 0.5)
            .require("Re(ν±μ+1) > 0", |p| (nu(p) - mu_of(p) + ONE).re.min((nu(p) + mu_of(p) + ONE).re))
            .require("sin πμ away from zero", |p| sin_pi(mu_of(p)).norm() - 0.05)
            .done(),
        d("dbl-q-degree-pair-printed", "the degree-pair double loop with the printed prefactor", "double loop for Q from a degree lowering followed by a raising, prefactor as printed", int::lhs_q_phase, int::double_q_degree_pair_printed)
            .require("Re μ > -1/2", |p| mu_of(p).re + 0.5)
            .require("Re(ν-μ+1) > 0", |p| (nu(p) - mu_of(p) + ONE).re)
            .require("ν at least 0.1 from integers", |p| integer_distance(nu(p)) - 0.05)
            .variant_of("dbl-q-degree-pair")
            .done(),
    ]
}

fn confluent() -> Vec<Identity> {
    let boxes = [mu(-0.9, 0.9), ParamRange::real("vartheta", 0.5, 2.0)];
    vec![
        entry("confluent-K", "ν^{-μ}e^{-iπμ}Q_ν^μ(cosh(ϑ/ν)) at large ν against K_μ(ϑ)", "Bessel K as the confluent limit of Q", CONFLUENT, int::confluent_q, int::bessel_k_side, TOL_CONFLUENT)
            .params(&boxes)
            .require("ν large", |p| p.get("nu").re - 50.0)
            .require("ϑ > 0", |p| p.get("vartheta").re)
            .at(&[("nu", 1e4), ("mu", 0.4), ("vartheta", 1.0)])
            .done(),
        entry("confluent-I", "ν^μ P_ν^{-μ}(cosh(ϑ/ν)) at large ν against I_μ(ϑ)", "Bessel I as the confluent limit of P", CONFLUENT, int::confluent_p, int::bessel_i_side, TOL_CONFLUENT)
            .params(&boxes)
            .require("ν large", |p| p.get("nu").re - 50.0)
            .require("ϑ > 0", |p| p.get("vartheta").re)
            .at(&[("nu", 1e4), ("mu", 0.4), ("vartheta", 1.0)])
            .done(),
        entry("k-order-shift", "K_{μ+λ}(ϑ) as a Weyl loop in u of K_μ(√(ϑ²+2uϑ))", "the fractional order shift of K inherited from the Q raise in the contraction limit", CONFLUENT, int::bessel_k_shifted, int::bessel_k_order_loop, TOL_BESSEL_SHIFT)
            .params(&[mu(-0.9, 0.9), lambda(-0.9, 1.5), ParamRange::real("vartheta", 0.5, 2.0)])
            .require("λ+1 clear of Γ poles", |p| pole_free(lam(p) + ONE))
            .require("ϑ > 0", |p| p.get("vartheta").re)
            .at(&[("mu", 0.3), ("lambda", 0.6), ("vartheta", 1.0)])
            .done(),
    ]
}
