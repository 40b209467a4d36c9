//! Inputs shared by the benchmarks, chosen to hit the distinct evaluation
//! paths of the core crate.

use legfrac_core::legendre::{DegreeOrder, LegendreArgument};
use num_complex::Complex64;

pub fn cx(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// Degree and order away from integers, complex degree.
pub fn generic_degree_order() -> DegreeOrder {
    DegreeOrder::new(cx(0.7, 0.3), cx(0.35, 0.0))
}

/// Points served by the 1/z² series, by the near-one recombination and by
/// a complex argument.
pub fn arguments() -> [(&'static str, LegendreArgument); 3] {
    [
        ("far", LegendreArgument::off_cut(cx(2.5, 0.0)).expect("off the cut")),
        ("near-one", LegendreArgument::off_cut(cx(1.1, 0.0)).expect("off the cut")),
        ("complex", LegendreArgument::off_cut(cx(1.4, 0.9)).expect("off the cut")),
    ]
}

/// 2F1 arguments for the direct series, the Pfaff and the 1-w routes.
pub fn hyp_arguments() -> [(&'static str, Complex64); 3] {
    [("direct", cx(0.3, 0.1)), ("pfaff", cx(-2.0, 0.5)), ("one-minus", cx(0.9, 0.05))]
}

#[cfg(test)]
mod tests {
    use super::*;
    use legfrac_core::legendre::{eval_legendre, FunctionKind};

    #[test]
    fn fixtures_evaluate() {
        for (_, arg) in arguments() {
            for kind in [FunctionKind::POffCut, FunctionKind::QOffCut] {
                assert!(eval_legendre(kind, generic_degree_order(), &arg).unwrap().is_finite());
            }
        }
    }
}
