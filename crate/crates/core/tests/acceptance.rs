//! Acceptance suite. Each criterion is one test; each prints a single
//! PASS/FAIL line with its wall time, written straight to stdout so it shows
//! up without `--nocapture`. Criteria run one at a time so the timings do
//! not include contention with each other.

use std::io::Write;
use std::sync::Mutex;
use std::time::{Duration, Instant};

use legfrac_core::frac::{apply_order_operator, frac_degree_shift, frac_order_shift, FracOpSpec, FracOperator, Representation};
use legfrac_core::legendre::{eval_legendre, eval_with_derivatives, ode_residual, step_degree, step_order, DegreeOrder, Direction, FunctionKind, LegendreArgument};
use legfrac_core::numerics::exp_i_pi;
use legfrac_core::quad::QuadConfig;
use legfrac_core::registry::{catalog, check_identity, check_reference, find_identity, manifest, passes, run_suite, CheckReport, Params, Resolution, SMALL_RHS};
use legfrac_core::Result;
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const P: FunctionKind = FunctionKind::POffCut;
const Q: FunctionKind = FunctionKind::QOffCut;

static SERIAL: Mutex<()> = Mutex::new(());

fn cx(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn rel(a: Complex64, b: Complex64) -> f64 {
    (a - b).norm() / b.norm()
}

fn off_cut(z: Complex64) -> LegendreArgument {
    LegendreArgument::off_cut(z).unwrap()
}

fn cfg() -> QuadConfig {
    QuadConfig::from_env()
}

/// Runs one criterion, prints its line, then asserts the outcome and the
/// runtime bound.
fn criterion(number: u32, title: &str, limit: Duration, body: impl FnOnce() -> std::result::Result<String, String>) {
    let _guard = SERIAL.lock().unwrap_or_else(|e| e.into_inner());
    let start = Instant::now();
    let outcome = body();
    let elapsed = start.elapsed();
    let (ok, detail) = match &outcome {
        Ok(d) if elapsed <= limit => (true, d.clone()),
        Ok(d) => (false, format!("{d}; over the {:.0} s limit", limit.as_secs_f64())),
        Err(d) => (false, d.clone()),
    };
    let line = format!(
        "acceptance {number:>2} {:<4} {title} [{:.2} s] {detail}\n",
        if ok { "PASS" } else { "FAIL" },
        elapsed.as_secs_f64()
    );
    let mut out = std::io::stdout().lock();
    let _ = out.write_all(line.as_bytes());
    let _ = out.flush();
    drop(out);
    assert!(ok, "{}", line.trim_end());
}

/// Collects failures as text; the criterion passes if there are none.
#[derive(Default)]
struct Tally {
    checks: usize,
    worst: f64,
    failures: Vec<String>,
}

impl Tally {
    fn record(&mut self, what: impl FnOnce() -> String, value: Result<f64>, bound: f64) {
        self.checks += 1;
        match value {
            Ok(r) if r <= bound => self.worst = self.worst.max(r),
            Ok(r) => {
                self.worst = self.worst.max(r);
                self.failures.push(format!("{}: {r:.3e} > {bound:.0e}", what()));
            }
            Err(e) => self.failures.push(format!("{}: {e}", what())),
        }
    }

    /// Registry comparison: relative, or absolute when the reference value is tiny.
    fn record_report(&mut self, r: &CheckReport, bound: f64) {
        self.checks += 1;
        if let Some(e) = &r.error {
            self.failures.push(format!("{} draw {}: {e}", r.id, r.draw));
            return;
        }
        let (abs, rel, ok) = passes(r.lhs, r.rhs, bound);
        let measure = if r.rhs.norm() < SMALL_RHS { abs } else { rel };
        self.worst = self.worst.max(measure);
        if !ok {
            self.failures.push(format!("{} draw {}: {measure:.3e} > {bound:.0e}", r.id, r.draw));
        }
    }

    fn finish(self) -> std::result::Result<String, String> {
        let head = format!("{} checks, worst {:.2e}", self.checks, self.worst);
        if self.failures.is_empty() {
            Ok(head)
        } else {
            let shown: Vec<_> = self.failures.iter().take(5).cloned().collect();
            Err(format!("{head}; {} failed: {}", self.failures.len(), shown.join(" | ")))
        }
    }
}

/// Degree/order/argument box shared by the random criteria.
struct Draw {
    nu: Complex64,
    mu: Complex64,
    z: Complex64,
}

fn draw_generic(rng: &mut ChaCha8Rng) -> Draw {
    Draw {
        nu: cx(rng.gen_range(0.1..1.5), rng.gen_range(-0.5..0.5)),
        mu: cx(rng.gen_range(-0.9..0.9), rng.gen_range(-0.5..0.5)),
        z: cx(rng.gen_range(1.3..3.0), rng.gen_range(-0.5..0.5)),
    }
}

#[test]
fn criterion_01_ode_residuals() {
    criterion(1, "Legendre equation residual, 200 draws, P and Q, rel <= 1e-7", Duration::from_secs(30), || {
        let mut rng = ChaCha8Rng::seed_from_u64(101);
        let mut tally = Tally::default();
        for i in 0..200 {
            let Draw { nu, mu, z } = draw_generic(&mut rng);
            let d = DegreeOrder::new(nu, mu);
            for kind in [P, Q] {
                let residual = eval_with_derivatives(kind, d, &off_cut(z)).map(|f| {
                    let v = [f[0].value, f[1].value, f[2].value];
                    let one_m = Complex64::new(1.0, 0.0) - z * z;
                    // scale of the individual terms of the equation
                    let scale = (one_m * v[2]).norm()
                        + (z * v[1] * 2.0).norm()
                        + (mu * mu / one_m * v[0]).norm()
                        + (nu * (nu + 1.0) * v[0]).norm();
                    ode_residual(d, z, v).norm() / scale
                });
                tally.record(|| format!("draw {i} {kind:?} ν={nu} μ={mu} z={z}"), residual, 1e-7);
            }
        }
        tally.finish()
    });
}

/// One fractional shift at integer λ against the chained recurrence.
struct IntegerCase {
    name: &'static str,
    kind: FunctionKind,
    operator: FracOperator,
    loop_kind: Representation,
}

const ORDER_CASES: [IntegerCase; 4] = [
    IntegerCase { name: "M+ Weyl Q", kind: Q, operator: FracOperator::Mplus, loop_kind: Representation::Weyl },
    IntegerCase { name: "M+ Riemann P", kind: P, operator: FracOperator::Mplus, loop_kind: Representation::Riemann },
    IntegerCase { name: "M- Weyl Q", kind: Q, operator: FracOperator::Mminus, loop_kind: Representation::Weyl },
    IntegerCase { name: "M- Weyl P", kind: P, operator: FracOperator::Mminus, loop_kind: Representation::Weyl },
];

const DEGREE_CASES: [IntegerCase; 4] = [
    IntegerCase { name: "K3 Weyl P", kind: P, operator: FracOperator::K3, loop_kind: Representation::Weyl },
    IntegerCase { name: "K3 Weyl Q", kind: Q, operator: FracOperator::K3, loop_kind: Representation::Weyl },
    IntegerCase { name: "P3 Weyl P", kind: P, operator: FracOperator::P3, loop_kind: Representation::Weyl },
    IntegerCase { name: "P3 Riemann Q", kind: Q, operator: FracOperator::P3, loop_kind: Representation::Riemann },
];

/// F after n steps of the differential recurrence in the operator's direction.
fn by_recurrence(case: &IntegerCase, d: DegreeOrder, arg: &LegendreArgument, n: u32) -> Result<Complex64> {
    let one = Complex64::new(1.0, 0.0);
    let mut d = d;
    let mut value = Complex64::new(0.0, 0.0);
    for _ in 0..n {
        value = match case.operator {
            // -bracket = F^{μ+1}
            FracOperator::Mplus => -step_order(case.kind, d, arg, Direction::Raise)?.value,
            // bracket = (ν+μ)(ν-μ+1) F^{μ-1}
            FracOperator::Mminus => step_order(case.kind, d, arg, Direction::Lower)?.value / ((d.nu + d.mu) * (d.nu - d.mu + one)),
            // bracket = -(ν-μ+1) F_{ν+1}
            FracOperator::K3 => step_degree(case.kind, d, arg, Direction::Raise)?.value / -(d.nu - d.mu + one),
            // bracket = (ν+μ) F_{ν-1}
            FracOperator::P3 => step_degree(case.kind, d, arg, Direction::Lower)?.value / (d.nu + d.mu),
        };
        d = match case.operator {
            FracOperator::Mplus => DegreeOrder::new(d.nu, d.mu + one),
            FracOperator::Mminus => DegreeOrder::new(d.nu, d.mu - one),
            FracOperator::K3 => DegreeOrder::new(d.nu + one, d.mu),
            FracOperator::P3 => DegreeOrder::new(d.nu - one, d.mu),
        };
    }
    Ok(value)
}

fn by_operator(case: &IntegerCase, d: DegreeOrder, arg: &LegendreArgument, n: u32) -> Result<Complex64> {
    let spec = FracOpSpec::new(case.operator, Complex64::new(n as f64, 0.0), case.loop_kind)?.with_config(cfg());
    let r = match case.operator {
        FracOperator::Mplus | FracOperator::Mminus => frac_order_shift(case.kind, d, arg, &spec)?,
        FracOperator::K3 | FracOperator::P3 => frac_degree_shift(case.kind, d, arg, &spec)?,
    };
    Ok(r.value)
}

/// ν with |Im ν| ≥ 0.1 keeps ν±μ+k off the integers, so no recurrence
/// coefficient or Γ prefactor vanishes; Re(ν+μ) ≤ 0.7 keeps the Weyl
/// conditions of the P lowering operators at λ = 1 clear by 0.3.
fn draw_integer_case(rng: &mut ChaCha8Rng) -> Draw {
    loop {
        let sign = if rng.gen_bool(0.5) { 1.0 } else { -1.0 };
        let nu = cx(rng.gen_range(0.1..0.9), sign * rng.gen_range(0.1..0.4));
        let mu = cx(rng.gen_range(-0.8..0.4), 0.0);
        if nu.re + mu.re <= 0.7 {
            return Draw { nu, mu, z: cx(rng.gen_range(1.3..3.0), 0.0) };
        }
    }
}

fn integer_suite(cases: &[IntegerCase], seed: u64) -> std::result::Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut tally = Tally::default();
    for i in 0..50 {
        let Draw { nu, mu, z } = draw_integer_case(&mut rng);
        let d = DegreeOrder::new(nu, mu);
        let arg = off_cut(z);
        for case in cases {
            for n in [1, 2] {
                let r = by_operator(case, d, &arg, n).and_then(|a| Ok(rel(a, by_recurrence(case, d, &arg, n)?)));
                tally.record(|| format!("draw {i} {} λ={n} ν={nu} μ={mu} z={z}", case.name), r, 1e-7);
            }
        }
    }
    tally.finish()
}

#[test]
fn criterion_02a_order_shift_at_integer_lambda() {
    criterion(2, "frac_order_shift at λ = 1, 2 against the order recurrences, 50 draws", Duration::from_secs(150), || {
        integer_suite(&ORDER_CASES, 202)
    });
}

#[test]
fn criterion_02b_degree_shift_at_integer_lambda() {
    criterion(2, "frac_degree_shift at λ = 1, 2 against the degree recurrences, 50 draws", Duration::from_secs(150), || {
        integer_suite(&DEGREE_CASES, 203)
    });
}

#[test]
fn criterion_03_weyl_q_raise() {
    criterion(3, "Weyl M+ on Q at (0.6, 0.2, 0.7, 2.0) against Q_0.6^0.9(2)", Duration::from_secs(10), || {
        let spec = FracOpSpec::weyl(FracOperator::Mplus, cx(0.7, 0.0)).with_config(cfg());
        let arg = off_cut(cx(2.0, 0.0));
        let quad = frac_order_shift(Q, DegreeOrder::real(0.6, 0.2), &arg, &spec).map_err(|e| e.to_string())?.value;
        let exact = eval_legendre(Q, DegreeOrder::real(0.6, 0.9), &arg).map_err(|e| e.to_string())?.value;
        let r = rel(quad, exact);
        if r <= 1e-6 {
            Ok(format!("rel {r:.2e}"))
        } else {
            Err(format!("rel {r:.3e} > 1e-6"))
        }
    });
}

#[test]
fn criterion_04_riemann_p_raise() {
    criterion(4, "Riemann M+ on P at (0.7, 0.2, 0.5, 1.5) against P_0.7^0.7(1.5)", Duration::from_secs(10), || {
        let spec = FracOpSpec::new(FracOperator::Mplus, cx(0.5, 0.0), Representation::Riemann).map_err(|e| e.to_string())?.with_config(cfg());
        let arg = off_cut(cx(1.5, 0.0));
        let quad = frac_order_shift(P, DegreeOrder::real(0.7, 0.2), &arg, &spec).map_err(|e| e.to_string())?.value;
        let exact = eval_legendre(P, DegreeOrder::real(0.7, 0.7), &arg).map_err(|e| e.to_string())?.value;
        let r = rel(quad, exact);
        if r <= 1e-6 {
            Ok(format!("rel {r:.2e}"))
        } else {
            Err(format!("rel {r:.3e} > 1e-6"))
        }
    });
}

#[test]
fn criterion_05_semigroup() {
    criterion(5, "M+^0.4 M+^0.3 against M+^0.7 on e^{-iπμ}Q^μ", Duration::from_secs(30), || {
        let d = DegreeOrder::real(0.6, 0.2);
        let arg = off_cut(cx(2.0, 0.0));
        let (l1, l2) = (cx(0.3, 0.0), cx(0.4, 0.0));
        let weyl = |l: Complex64| FracOpSpec::weyl(FracOperator::Mplus, l).with_config(cfg());
        let first = weyl(l1);
        // the second operator acts on e^{-iπ(μ+λ₁)} Q^{μ+λ₁}
        let inner = |a: &LegendreArgument| Ok(frac_order_shift(Q, d, a, &first)?.value * exp_i_pi(-(d.mu + l1)));
        let composed = apply_order_operator(inner, d.mu + l1, l2, &arg, Direction::Raise, &weyl(l2)).map_err(|e| e.to_string())?.value;
        let direct = frac_order_shift(Q, d, &arg, &weyl(l1 + l2)).map_err(|e| e.to_string())?.value * exp_i_pi(-(d.mu + l1 + l2));
        let r = rel(composed, direct);
        if r <= 1e-6 {
            Ok(format!("rel {r:.2e}"))
        } else {
            Err(format!("rel {r:.3e} > 1e-6"))
        }
    });
}

/// Runs the registry's own draws of one entry and judges them at `bound`.
fn registry_draws(tally: &mut Tally, id: &str, seed: u64, draws: usize, bound: f64) {
    let suite = run_suite(Some(id), seed, draws, &cfg());
    if suite.summary.rejected > 0 || suite.reports.len() < draws {
        tally.failures.push(format!("{id}: only {} of {draws} draws admissible", suite.reports.len()));
    }
    for r in &suite.reports {
        tally.record_report(r, bound);
    }
}

#[test]
fn criterion_06_symmetries() {
    criterion(6, "Q order symmetry (1e-10) and P degree symmetry (1e-9), 100 draws each", Duration::from_secs(20), || {
        let mut tally = Tally::default();
        registry_draws(&mut tally, "q-symmetry", 601, 100, 1e-10);
        registry_draws(&mut tally, "p-degree-symmetry", 602, 100, 1e-9);
        tally.finish()
    });
}

#[test]
fn criterion_07_generating_functions() {
    criterion(7, "generating functions, all families, >= 200 draws inside the radii", Duration::from_secs(60), || {
        let ids: Vec<&str> = catalog().iter().filter(|e| e.has_tag("genfun") && !e.is_variant()).map(|e| e.id).collect();
        let per_entry = 200usize.div_ceil(ids.len());
        let mut tally = Tally::default();
        for (k, id) in ids.iter().enumerate() {
            registry_draws(&mut tally, id, 700 + k as u64, per_entry, 1e-9);
        }
        tally.finish().map(|s| format!("{} families, {s}", ids.len()))
    });
}

#[test]
fn criterion_08_single_integrals() {
    criterion(8, "single integrals: reference point 1e-6, 3 draws 1e-5", Duration::from_secs(600), || {
        let ids: Vec<&str> = catalog().iter().filter(|e| e.has_tag("single-integral") && !e.is_variant()).map(|e| e.id).collect();
        let mut tally = Tally::default();
        for id in &ids {
            let r = check_reference(id, &cfg()).map(|r| r.rel_diff);
            tally.record(|| format!("{id} reference"), r, 1e-6);
        }
        for (k, id) in ids.iter().enumerate() {
            registry_draws(&mut tally, id, 800 + k as u64, 3, 1e-5);
        }
        tally.finish().map(|s| format!("{} entries, {s}", ids.len()))
    });
}

#[test]
fn criterion_09_double_integrals() {
    criterion(9, "double integrals at their reference points, rel <= 1e-4, < 120 s each", Duration::from_secs(600), || {
        let ids: Vec<&str> = catalog().iter().filter(|e| e.has_tag("double-integral") && !e.is_variant()).map(|e| e.id).collect();
        if ids.len() != 5 {
            return Err(format!("expected 5 double-integral entries, found {}", ids.len()));
        }
        let mut tally = Tally::default();
        let mut times = Vec::new();
        for id in &ids {
            let start = Instant::now();
            let r = check_reference(id, &cfg()).map(|r| r.rel_diff);
            let t = start.elapsed();
            times.push(format!("{id} {:.2} s", t.as_secs_f64()));
            if t > Duration::from_secs(120) {
                tally.failures.push(format!("{id} took {:.1} s", t.as_secs_f64()));
            }
            tally.record(|| id.to_string(), r, 1e-4);
        }
        tally.finish().map(|s| format!("{s}; {}", times.join(", ")))
    });
}

#[test]
fn criterion_10_confluent_limits() {
    criterion(10, "Bessel limits at ν = 1e2, 1e3, 1e4 decay like 1/ν; K order shift 1e-5", Duration::from_secs(120), || {
        let sweep = [1e2, 1e3, 1e4];
        let mut notes = Vec::new();
        let mut failures = Vec::new();
        for id in ["confluent-K", "confluent-I"] {
            let mut rels = Vec::new();
            for nu in sweep {
                let p = Params::new().with("nu", nu).with("mu", 0.4).with("vartheta", 1.0);
                match check_identity(id, &p, None, &cfg()) {
                    Ok(r) => rels.push(r.rel_diff),
                    Err(e) => {
                        failures.push(format!("{id} ν={nu}: {e}"));
                        rels.push(f64::NAN);
                    }
                }
            }
            for (w, nus) in rels.windows(2).zip(sweep.windows(2)) {
                // ∝ 1/ν within a factor 3
                let ratio = (w[0] / w[1]) / (nus[1] / nus[0]);
                if !(1.0 / 3.0..=3.0).contains(&ratio) {
                    failures.push(format!("{id}: decay ratio {:.3} between ν={} and ν={}", w[0] / w[1], nus[0], nus[1]));
                }
            }
            if !(rels[2] <= 5e-3) {
                failures.push(format!("{id}: rel {:.3e} at ν=1e4", rels[2]));
            }
            notes.push(format!("{id} rel {:.2e} {:.2e} {:.2e}", rels[0], rels[1], rels[2]));
        }
        let p = Params::new().with("mu", 0.3).with("lambda", 0.6).with("vartheta", 1.0);
        match check_identity("k-order-shift", &p, Some(1e-5), &cfg()) {
            Ok(r) if r.rel_diff <= 1e-5 => notes.push(format!("k-order-shift rel {:.2e}", r.rel_diff)),
            Ok(r) => failures.push(format!("k-order-shift rel {:.3e} > 1e-5", r.rel_diff)),
            Err(e) => failures.push(format!("k-order-shift: {e}")),
        }
        if failures.is_empty() {
            Ok(notes.join("; "))
        } else {
            Err(failures.join(" | "))
        }
    });
}

#[test]
fn criterion_11_manifest_completeness() {
    criterion(11, "every in-scope manifest key resolves to a catalog identity", Duration::from_secs(5), || {
        let mut failures = Vec::new();
        let mut in_scope = 0;
        for m in manifest() {
            if let Resolution::Identity(id) = m.resolution {
                in_scope += 1;
                match find_identity(id) {
                    Ok(e) if e.is_variant() => failures.push(format!("{} resolves to variant {id}", m.key)),
                    Ok(_) => {}
                    Err(e) => failures.push(format!("{}: {e}", m.key)),
                }
            }
        }
        for e in catalog().iter().filter(|e| !e.is_variant()) {
            let covered = manifest().iter().any(|m| m.resolution == Resolution::Identity(e.id));
            if !covered {
                failures.push(format!("{} is not reachable from the manifest", e.id));
            }
        }
        if failures.is_empty() {
            Ok(format!("{in_scope} in-scope keys, {} out of scope", manifest().len() - in_scope))
        } else {
            Err(failures.join(" | "))
        }
    });
}
