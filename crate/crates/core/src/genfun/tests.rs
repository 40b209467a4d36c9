use super::*;
use proptest::prelude::*;

fn arg(z: f64) -> LegendreArgument {
    LegendreArgument::off_cut(c(z)).unwrap()
}

fn agree(spec: &GenFunSpec) -> (Complex64, Complex64, f64) {
    let closed = genfun_closed(spec).unwrap();
    let series = genfun_series(spec).unwrap();
    let tol = 1e-9f64.max(3.0 * series.abs_error_est);
    (closed.value, series.value, tol)
}

/// Enough terms for the geometric tail (ratio q) to drop below 1e-14.
fn terms_for(q: f64) -> usize {
    ((1e-14f64.ln() / q.ln()).ceil() as usize + 5).min(MAX_TERMS)
}

#[test]
fn classic_p_closed_value() {
    let spec = GenFunSpec::new(GenFunFamily::LegendrePClassic, FunctionKind::POffCut, DegreeOrder::real(0.0, 0.0), arg(1.5), c(0.3));
    let v = genfun_closed(&spec).unwrap().value;
    assert!((v - c(0.19f64.powf(-0.5))).norm() < 1e-14);
    // |h|/radius = 0.785, so 60 terms leave a tail of ~1e-6; 140 terms reach 1e-13
    let s60 = genfun_series(&spec.clone().with_terms(60)).unwrap();
    assert!((s60.value - v).norm() <= 3.0 * s60.abs_error_est);
    let s = genfun_series(&spec.with_terms(140)).unwrap();
    assert!((s.value - v).norm() <= 1e-10, "{} vs {v}", s.value);
}

#[test]
fn identity_group_element() {
    for kind in [FunctionKind::POffCut, FunctionKind::QOffCut] {
        let d = DegreeOrder::real(0.45, 0.0);
        let spec = GenFunSpec::new(GenFunFamily::OrderRaiseMplus, kind, d, arg(1.7), ZERO);
        let direct = eval_legendre(kind, d, &arg(1.7)).unwrap().value;
        assert!((genfun_closed(&spec).unwrap().value - direct).norm() < 1e-14 * direct.norm());
    }
}

#[test]
fn single_term_is_the_starting_function() {
    let d = DegreeOrder::real(0.3, 0.4);
    let t = Complex64::from_polar(1.0, 0.3);
    let spec = GenFunSpec::new(GenFunFamily::OrderRaiseMplus, FunctionKind::POffCut, d, arg(2.0), c(0.1)).with_phase(t).with_terms(1);
    let s = genfun_series(&spec).unwrap();
    let expect = cpow(t, d.mu) * eval_legendre(FunctionKind::POffCut, d, &arg(2.0)).unwrap().value;
    assert!((s.value - expect).norm() < 1e-15);
}

#[test]
fn q_classic_reading() {
    let base = GenFunSpec::new(GenFunFamily::LegendreQClassic, FunctionKind::QOffCut, DegreeOrder::real(0.0, 0.0), arg(2.0), c(0.2))
        .with_terms(80);
    let (closed, series, tol) = agree(&base);
    assert!((closed - series).norm() <= tol, "{closed} vs {series}");
    let printed = genfun_closed(&base.with_q_log(QLogReading::Printed)).unwrap().value;
    assert!((printed - series).norm() > 1e-2);
}

#[test]
fn double_series_p() {
    let spec = GenFunSpec::new(GenFunFamily::DoubleSeriesPK, FunctionKind::POffCut, DegreeOrder::real(0.0, 0.0), arg(1.3), c(0.2))
        .with_inner_step(c(0.1))
        .with_terms(45);
    let z = 1.3;
    let zs = z + 0.1 * (z * z - 1.0f64).sqrt();
    let expect = (1.0 - 0.4 * zs + 0.04f64).powf(-0.5);
    let s = genfun_series(&spec).unwrap();
    assert!((genfun_closed(&spec).unwrap().value - c(expect)).norm() < 1e-14);
    assert!((s.value - c(expect)).norm() < 1e-12, "{} vs {expect}", s.value);
}

#[test]
fn double_series_q() {
    let spec = GenFunSpec::new(GenFunFamily::DoubleSeriesPK, FunctionKind::QOffCut, DegreeOrder::real(0.0, 0.0), arg(1.8), c(0.15))
        .with_inner_step(c(0.1))
        .with_terms(40);
    let (closed, series, tol) = agree(&spec);
    assert!((closed - series).norm() <= tol, "{closed} vs {series}");
}

#[test]
fn order_lower_matches_closed_form() {
    for kind in [FunctionKind::POffCut, FunctionKind::QOffCut] {
        let spec = GenFunSpec::new(GenFunFamily::OrderLowerMminus, kind, DegreeOrder::real(0.6, 0.25), arg(2.2), c(0.3))
            .with_phase(Complex64::from_polar(1.0, -0.4))
            .with_terms(70);
        let (closed, series, tol) = agree(&spec);
        assert!((closed - series).norm() <= tol, "{kind:?}: {closed} vs {series}");
    }
}

#[test]
fn pnmu_classic() {
    let spec = GenFunSpec::new(GenFunFamily::PnmuClassic, FunctionKind::POffCut, DegreeOrder::real(0.0, 0.35), arg(2.5), c(0.1))
        .with_terms(40);
    let (closed, series, tol) = agree(&spec);
    assert!((closed - series).norm() <= tol, "{closed} vs {series}");
}

#[test]
fn radius_and_cut_errors() {
    let d = DegreeOrder::real(0.5, 0.2);
    let z = arg(1.5);
    let r = GenFunSpec::new(GenFunFamily::OrderRaiseMplus, FunctionKind::POffCut, d, z, ZERO).radius().unwrap();
    assert!((r - (0.5f64 / 2.5).sqrt()).abs() < 1e-15);
    let out = GenFunSpec::new(GenFunFamily::OrderRaiseMplus, FunctionKind::POffCut, d, z, c(1.01 * r));
    assert!(matches!(genfun_series(&out), Err(Error::RadiusViolation { .. })));
    // u = -1/√5 drives z + u√(z²-1) to 1
    let onto_one = GenFunSpec::new(GenFunFamily::OrderRaiseMplus, FunctionKind::POffCut, d, z, c(-0.5 / 1.25f64.sqrt()));
    assert!(matches!(genfun_closed(&onto_one), Err(Error::ShiftedArgumentOnCut(_))));
    let many = GenFunSpec::new(GenFunFamily::LegendrePClassic, FunctionKind::POffCut, d, z, c(0.1)).with_terms(MAX_TERMS + 1);
    assert!(matches!(genfun_series(&many), Err(Error::InvalidInput(_))));
}

#[test]
fn q_normalisation_pole_is_a_coefficient_pole() {
    // Q_ν^{μ-n} with ν + μ - n = -1 at n = 2
    let spec = GenFunSpec::new(GenFunFamily::OrderLowerMminus, FunctionKind::QOffCut, DegreeOrder::real(0.4, 0.6), arg(2.0), c(0.1))
        .with_terms(5);
    assert!(matches!(genfun_series(&spec), Err(Error::CoefficientPole(2))));
}

#[test]
fn term_ratio_tracks_the_radius() {
    let d = DegreeOrder::real(0.35, 0.15);
    let z = arg(1.9);
    let r = GenFunSpec::new(GenFunFamily::OrderRaiseMplus, FunctionKind::POffCut, d, z, ZERO).radius().unwrap();
    let term = |n: usize, u: f64| {
        let f = eval_legendre(FunctionKind::POffCut, DegreeOrder::new(d.nu, d.mu + n as f64), &z).unwrap().value;
        (f * u.powi(n as i32) / (1..=n).map(|k| k as f64).product::<f64>()).norm()
    };
    let ratio = |u: f64| term(61, u) / term(60, u);
    assert!(ratio(0.8 * r) < 1.0);
    assert!((ratio(0.8 * r) - 0.8).abs() < 0.05, "{}", ratio(0.8 * r));
    assert!(ratio(1.2 * r) >= 1.0);
}

#[test]
fn degree_raise_reduces_to_the_classic_series() {
    // Taylor coefficients in u of the K₃ closed form started from P_0^0 = 1,
    // taken by the trapezoidal rule on a circle inside the radius
    let z = arg(1.6);
    let radius = 0.5 * degree_radius(z.z());
    let nodes = 64;
    let samples: Vec<Complex64> = (0..nodes)
        .map(|k| {
            let u = Complex64::from_polar(radius, 2.0 * std::f64::consts::PI * k as f64 / nodes as f64);
            let spec = GenFunSpec::new(GenFunFamily::DegreeRaiseK3, FunctionKind::POffCut, DegreeOrder::real(0.0, 0.0), z, u);
            genfun_closed(&spec).unwrap().value
        })
        .collect();
    let mut p = [1.0, 1.6, 0.0];
    for n in 0..10 {
        let coef: Complex64 = samples
            .iter()
            .enumerate()
            .map(|(k, f)| f * Complex64::from_polar(1.0, -2.0 * std::f64::consts::PI * (n * k) as f64 / nodes as f64))
            .sum::<Complex64>()
            / (nodes as f64 * radius.powi(n as i32));
        let pn = if n == 0 { 1.0 } else { p[1] };
        assert!((coef - c(pn)).norm() <= 1e-12 * pn.abs().max(1.0), "n = {n}: {coef} vs {pn}");
        if n > 0 {
            let k = n as f64;
            p[2] = ((2.0 * k + 1.0) * 1.6 * p[1] - k * p[0]) / (k + 1.0);
            p[0] = p[1];
            p[1] = p[2];
        }
    }
}

fn family_strategy() -> impl Strategy<Value = GenFunFamily> {
    prop::sample::select(GenFunFamily::ALL.to_vec())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn series_matches_closed_form(
        family in family_strategy(),
        q_kind in any::<bool>(),
        nu in 0.1f64..1.5,
        mu in -0.9f64..0.9,
        z in 1.3f64..3.0,
        frac in 0.05f64..0.6,
        angle in -0.5f64..0.5,
        complex_u in prop::bool::weighted(0.1),
    ) {
        let kind = if q_kind { FunctionKind::QOffCut } else { FunctionKind::POffCut };
        let d = match family {
            GenFunFamily::DoubleSeriesPK | GenFunFamily::LegendrePClassic | GenFunFamily::LegendreQClassic => DegreeOrder::real(0.0, 0.0),
            GenFunFamily::PnmuClassic => DegreeOrder::real(0.0, mu),
            _ => DegreeOrder::real(nu, mu),
        };
        let mut spec = GenFunSpec::new(family, kind, d, arg(z), ZERO);
        if family == GenFunFamily::DoubleSeriesPK {
            let v = c(0.3 * frac * order_radius(&spec.arg));
            spec = spec.with_inner_step(v);
        }
        let phase = if complex_u { Complex64::from_polar(1.0, angle) } else { ONE };
        let u = phase * frac * spec.radius().unwrap();
        let spec = spec.with_step(u).with_terms(terms_for(frac));
        let (closed, series, tol) = agree(&spec);
        prop_assert!((closed - series).norm() <= tol, "{family:?} {kind:?}: {closed} vs {series} (tol {tol})");
    }
}
