use std::io::Write;

use legfrac_core::frac::{frac_degree_shift, frac_order_shift, FracOpSpec, FracOperator, Representation};
use legfrac_core::genfun::{genfun_closed, genfun_series, GenFunFamily, GenFunSpec};
use legfrac_core::legendre::{eval_legendre, DegreeOrder, FunctionKind, LegendreArgument};
use legfrac_core::quad::QuadConfig;
use legfrac_core::registry::{check_identity, find_identity, format_report, list_identities, passes, run_suite, CheckReport, Params};
use legfrac_core::{Error, EvalResult};
use num_complex::Complex64;

use crate::args::{BesselKind, Family, FunctionArgs, GenfunArgs, Kind, Loop, Operator, VerifyArgs};
use crate::output::{complex_text, number, Cell, Emitter, Format};
use crate::Failure;

fn function_kind(k: Kind) -> FunctionKind {
    match k {
        Kind::P => FunctionKind::POffCut,
        Kind::Q => FunctionKind::QOffCut,
        Kind::PCut => FunctionKind::PCut,
        Kind::QCut => FunctionKind::QCut,
    }
}

fn argument(kind: Kind, z: Complex64) -> Result<LegendreArgument, Error> {
    match kind {
        Kind::PCut | Kind::QCut if z.im != 0.0 => Err(Error::DomainError(format!("on-cut kinds need a real z, got {}", complex_text(z)))),
        Kind::PCut | Kind::QCut => LegendreArgument::on_cut(z.re),
        Kind::P | Kind::Q => LegendreArgument::off_cut(z),
    }
}

fn frac_spec(f: &FunctionArgs, cfg: QuadConfig) -> Result<Option<FracOpSpec>, Error> {
    let (Some(op), Some(lambda)) = (f.op, f.lambda) else {
        return Ok(None);
    };
    let operator = match op {
        Operator::Mplus => FracOperator::Mplus,
        Operator::Mminus => FracOperator::Mminus,
        Operator::K3 => FracOperator::K3,
        Operator::P3 => FracOperator::P3,
    };
    let representation = match f.contour {
        Loop::Weyl => Representation::Weyl,
        Loop::Riemann => Representation::Riemann,
    };
    let mut spec = FracOpSpec::new(operator, lambda, representation)?.with_config(cfg);
    if let Some(r) = f.circle_radius {
        spec = spec.with_radius(r);
    }
    Ok(Some(spec))
}

/// One function value: the plain Legendre function or its fractional shift.
pub fn point_value(f: &FunctionArgs, z: Complex64, cfg: QuadConfig) -> Result<EvalResult, Error> {
    let kind = function_kind(f.kind);
    let arg = argument(f.kind, z)?;
    let d = DegreeOrder::new(f.nu, f.mu);
    match frac_spec(f, cfg)? {
        None => eval_legendre(kind, d, &arg),
        Some(spec) => match spec.operator {
            FracOperator::Mplus | FracOperator::Mminus => frac_order_shift(kind, d, &arg, &spec),
            FracOperator::K3 | FracOperator::P3 => frac_degree_shift(kind, d, &arg, &spec),
        },
    }
}

fn function_columns(f: &FunctionArgs) -> Vec<&'static str> {
    let mut cols = vec!["kind", "nu_re", "nu_im", "mu_re", "mu_im"];
    if f.op.is_some() {
        cols.extend(["op", "lambda_re", "lambda_im", "loop"]);
    }
    cols.extend(["z_re", "z_im", "value_re", "value_im", "abs_error_est", "terms_used", "error"]);
    cols
}

fn function_row(f: &FunctionArgs, z: Complex64, r: &Result<EvalResult, Error>) -> Vec<Cell> {
    let mut row = vec![Cell::Text(f.kind.name().into()), Cell::Num(f.nu.re), Cell::Num(f.nu.im), Cell::Num(f.mu.re), Cell::Num(f.mu.im)];
    if let (Some(op), Some(lam)) = (f.op, f.lambda) {
        let op = match op {
            Operator::Mplus => "mplus",
            Operator::Mminus => "mminus",
            Operator::K3 => "k3",
            Operator::P3 => "p3",
        };
        let contour = match f.contour {
            Loop::Weyl => "weyl",
            Loop::Riemann => "riemann",
        };
        row.extend([Cell::Text(op.into()), Cell::Num(lam.re), Cell::Num(lam.im), Cell::Text(contour.into())]);
    }
    row.extend([Cell::Num(z.re), Cell::Num(z.im)]);
    match r {
        Ok(v) => row.extend([
            Cell::Num(v.value.re),
            Cell::Num(v.value.im),
            Cell::Num(v.abs_error_est),
            Cell::Int(v.terms_used as u64),
            Cell::Null,
        ]),
        Err(e) => row.extend([Cell::Null, Cell::Null, Cell::Null, Cell::Null, Cell::Text(e.to_string())]),
    }
    row
}

/// Evaluates along the path and streams the rows. Input errors abort
/// before any output; numerical failures are recorded per row.
pub fn table(f: &FunctionArgs, points: &[Complex64], format: Format, cfg: QuadConfig) -> Result<(), Failure> {
    // argument and operator problems are usage errors and should not produce partial output
    for &z in points {
        argument(f.kind, z).map_err(Failure::from_core)?;
    }
    frac_spec(f, cfg).map_err(Failure::from_core)?;

    let stdout = std::io::stdout();
    let mut out = Emitter::new(stdout.lock(), format, function_columns(f))?;
    let mut first_error = None;
    for &z in points {
        let r = point_value(f, z, cfg);
        out.row(&function_row(f, z, &r))?;
        if let Err(e) = r {
            first_error.get_or_insert(e);
        }
    }
    out.finish()?;
    match first_error {
        Some(e) if points.len() == 1 => Err(Failure::from_core(e)),
        Some(e) => Err(Failure::Numerical(format!("some points failed, first: {e}"))),
        None => Ok(()),
    }
}

/// `count` evenly spaced points from `start` to `stop` inclusive.
pub fn path(start: Complex64, stop: Complex64, count: u64) -> Vec<Complex64> {
    if count == 1 {
        return vec![start];
    }
    let n = (count - 1) as f64;
    (0..count).map(|k| if k + 1 == count { stop } else { start + (stop - start) * (k as f64 / n) }).collect()
}

pub fn genfun(g: &GenfunArgs, format: Format) -> Result<(), Failure> {
    let family = match g.family {
        Family::OrderRaise => GenFunFamily::OrderRaiseMplus,
        Family::OrderLower => GenFunFamily::OrderLowerMminus,
        Family::DegreeLower => GenFunFamily::DegreeLowerP3,
        Family::DegreeRaise => GenFunFamily::DegreeRaiseK3,
        Family::LegendreP => GenFunFamily::LegendrePClassic,
        Family::LegendreQ => GenFunFamily::LegendreQClassic,
        Family::Pnmu => GenFunFamily::PnmuClassic,
        Family::Double => GenFunFamily::DoubleSeriesPK,
    };
    let kind = match g.kind {
        Kind::P => FunctionKind::POffCut,
        Kind::Q => FunctionKind::QOffCut,
        other => return Err(Failure::Usage(format!("generating functions use P or Q, not {}", other.name()))),
    };
    let arg = LegendreArgument::off_cut(g.z).map_err(Failure::from_core)?;
    let base = GenFunSpec::new(family, kind, DegreeOrder::new(g.nu, g.mu), arg, g.u).with_phase(g.t).with_inner_step(g.v);
    let radius = base.radius().map_err(Failure::from_core)?;
    let closed = genfun_closed(&base).map_err(Failure::from_core)?;

    let sums = g
        .terms
        .iter()
        .map(|&n| genfun_series(&base.clone().with_terms(n)).map(|s| (n, s)))
        .collect::<Result<Vec<_>, _>>()
        .map_err(Failure::from_core)?;

    let columns = vec!["terms", "series_re", "series_im", "closed_re", "closed_im", "rel_diff", "u_abs", "radius"];
    let stdout = std::io::stdout();
    let mut out = Emitter::new(stdout.lock(), format, columns)?;
    for (n, series) in sums {
        let rel = (series.value - closed.value).norm() / closed.value.norm();
        out.row(&[
            Cell::Int(n as u64),
            Cell::Num(series.value.re),
            Cell::Num(series.value.im),
            Cell::Num(closed.value.re),
            Cell::Num(closed.value.im),
            Cell::Num(rel),
            Cell::Num(g.u.norm()),
            Cell::Num(radius),
        ])?;
    }
    out.finish()?;
    Ok(())
}

fn params_text(p: &Params) -> String {
    p.0.iter().map(|(k, v)| format!("{k}={}", complex_text(*v))).collect::<Vec<_>>().join(";")
}

/// Re-applies a tolerance override to a finished report.
fn retolerance(r: &mut CheckReport, tolerance: f64) {
    r.tolerance = tolerance;
    if r.error.is_none() {
        r.passed = passes(r.lhs, r.rhs, tolerance).2;
    }
}

pub fn verify(v: &VerifyArgs, format: Format, cfg: QuadConfig) -> Result<(), Failure> {
    let selected = list_identities(v.filter.as_deref());
    if selected.is_empty() {
        return Err(Failure::Usage(format!("no identity matches filter `{}`", v.filter.as_deref().unwrap_or(""))));
    }
    let stdout = std::io::stdout();
    if v.list {
        let columns = vec!["id", "tags", "params", "tolerance", "variant_of", "description"];
        let mut out = Emitter::new(stdout.lock(), format, columns)?;
        for s in &selected {
            out.row(&[
                Cell::Text(s.id.clone()),
                Cell::Text(s.tags.join(" ")),
                Cell::Text(s.params.join(" ")),
                Cell::Num(s.default_tolerance),
                s.variant_of.clone().map_or(Cell::Null, Cell::Text),
                Cell::Text(s.description.clone()),
            ])?;
        }
        out.finish()?;
        return Ok(());
    }

    let (mut reports, rejected) = if v.reference {
        let mut reports = Vec::new();
        let mut rejected = Vec::new();
        for s in &selected {
            match check_identity(&s.id, &Params::new(), None, &cfg) {
                Ok(r) => reports.push(r),
                Err(e @ Error::DomainRejected { .. }) => rejected.push(format!("{}: {e}", s.id)),
                Err(e) => reports.push(failed_report(&s.id, find_identity(&s.id).map(|i| i.default_tolerance).unwrap_or(f64::NAN), &e)),
            }
        }
        (reports, rejected)
    } else {
        let suite = run_suite(v.filter.as_deref(), v.seed, v.draws, &cfg);
        let sampled: std::collections::BTreeSet<&str> = suite.reports.iter().map(|r| r.id.as_str()).collect();
        let rejected = if v.draws == 0 {
            Vec::new()
        } else {
            selected.iter().filter(|s| !sampled.contains(s.id.as_str())).map(|s| format!("{}: no admissible draw", s.id)).collect()
        };
        (suite.reports, rejected)
    };
    if let Some(t) = v.tolerance {
        reports.iter_mut().for_each(|r| retolerance(r, t));
    }

    let is_variant = |id: &str| find_identity(id).map(|e| e.is_variant()).unwrap_or(false);
    let failed: Vec<&CheckReport> = reports.iter().filter(|r| !r.passed && !is_variant(&r.id)).collect();
    let mut variants_failed: Vec<&str> = reports.iter().filter(|r| !r.passed && is_variant(&r.id)).map(|r| r.id.as_str()).collect();
    variants_failed.dedup();

    if let Some(path) = &v.report {
        std::fs::write(path, format_report(&reports)).map_err(|e| Failure::Usage(format!("cannot write report {}: {e}", path.display())))?;
    }

    match format {
        Format::Text => {
            let mut out = stdout.lock();
            for s in &selected {
                let rs: Vec<&CheckReport> = reports.iter().filter(|r| r.id == s.id).collect();
                if rs.is_empty() {
                    continue;
                }
                let worst = rs.iter().map(|r| r.rel_diff).fold(0.0, |a: f64, b| if b.is_nan() || a.is_nan() { f64::NAN } else { a.max(b) });
                let ok = rs.iter().all(|r| r.passed);
                let status = match (ok, s.variant_of.is_some()) {
                    (true, _) => "ok",
                    (false, false) => "FAIL",
                    (false, true) => "differs",
                };
                writeln!(out, "{status:<8} {:<36} checks={:<3} max_rel={:<24} tol={}", s.id, rs.len(), number(worst), number(rs[0].tolerance))?;
                for r in rs.iter().filter(|r| !r.passed) {
                    let detail = r.error.clone().unwrap_or_else(|| format!("rel_diff={}", number(r.rel_diff)));
                    writeln!(out, "         draw {} at {}: {detail}", r.draw, params_text(&r.params))?;
                }
            }
            writeln!(out, "{}", summary_line(reports.len(), failed.len(), &rejected, &variants_failed))?;
        }
        _ => {
            let columns = vec![
                "id", "draw", "variant_of", "params", "lhs_re", "lhs_im", "rhs_re", "rhs_im", "rel_diff", "tolerance", "passed", "wall_time", "error",
            ];
            let mut out = Emitter::new(stdout.lock(), format, columns)?;
            for r in &reports {
                let variant = find_identity(&r.id).ok().and_then(|e| e.variant_of);
                out.row(&[
                    Cell::Text(r.id.clone()),
                    Cell::Int(r.draw as u64),
                    variant.map_or(Cell::Null, |b| Cell::Text(b.into())),
                    Cell::Text(params_text(&r.params)),
                    Cell::Num(r.lhs.re),
                    Cell::Num(r.lhs.im),
                    Cell::Num(r.rhs.re),
                    Cell::Num(r.rhs.im),
                    Cell::Num(r.rel_diff),
                    Cell::Num(r.tolerance),
                    Cell::Bool(r.passed),
                    Cell::Num(r.wall_time),
                    r.error.clone().map_or(Cell::Null, Cell::Text),
                ])?;
            }
            out.finish()?;
            eprintln!("{}", summary_line(reports.len(), failed.len(), &rejected, &variants_failed));
        }
    }
    for r in &rejected {
        eprintln!("legfrac: rejected {r}");
    }
    if failed.is_empty() && rejected.is_empty() {
        Ok(())
    } else {
        Err(Failure::Check)
    }
}

fn failed_report(id: &str, tolerance: f64, e: &Error) -> CheckReport {
    let nan = Complex64::new(f64::NAN, f64::NAN);
    CheckReport {
        id: id.to_string(),
        draw: 0,
        params: find_identity(id).map(|i| i.reference_params()).unwrap_or_default(),
        lhs: nan,
        rhs: nan,
        abs_diff: f64::NAN,
        rel_diff: f64::NAN,
        tolerance,
        passed: false,
        wall_time: 0.0,
        error: Some(e.to_string()),
    }
}

fn summary_line(total: usize, failed: usize, rejected: &[String], variants_failed: &[&str]) -> String {
    let mut s = if failed == 0 && rejected.is_empty() {
        format!("all passed ({total} checks)")
    } else {
        format!("{failed} of {total} checks failed, {} identities could not be sampled", rejected.len())
    };
    if !variants_failed.is_empty() {
        s.push_str(&format!("; printed variants differing: {}", variants_failed.join(", ")));
    }
    s
}

pub fn limits(mu: f64, theta: f64, sweep: &[f64], bessel: BesselKind, format: Format, cfg: QuadConfig) -> Result<(), Failure> {
    let id = match bessel {
        BesselKind::K => "confluent-K",
        BesselKind::I => "confluent-I",
    };
    let reports = sweep
        .iter()
        .map(|&nu| {
            let p = Params::new().with("nu", nu).with("mu", mu).with("vartheta", theta);
            check_identity(id, &p, None, &cfg)
        })
        .collect::<Result<Vec<_>, _>>()
        .map_err(Failure::from_core)?;

    let columns = vec!["nu", "legendre_re", "legendre_im", "bessel_re", "bessel_im", "rel_diff", "decay_ratio"];
    let stdout = std::io::stdout();
    let mut out = Emitter::new(stdout.lock(), format, columns)?;
    let mut previous: Option<f64> = None;
    for (nu, r) in sweep.iter().zip(&reports) {
        out.row(&[
            Cell::Num(*nu),
            Cell::Num(r.lhs.re),
            Cell::Num(r.lhs.im),
            Cell::Num(r.rhs.re),
            Cell::Num(r.rhs.im),
            Cell::Num(r.rel_diff),
            Cell::opt(previous.map(|p| p / r.rel_diff)),
        ])?;
        previous = Some(r.rel_diff);
    }
    out.finish()?;
    Ok(())
}
