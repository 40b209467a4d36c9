use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;

use crate::output::Format;

const LITERAL_HELP: &str = "Complex arguments are written without spaces as a real part, an imaginary \
part ending in `i`, or both: 1.5, -2i, 0.3+0.4i, 1e-3-2.5e1i.";

#[derive(Debug, Parser)]
#[command(name = "legfrac", version, about = "Legendre functions, fractional operators and identity checks", after_help = LITERAL_HELP)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,

    /// Quadrature nodes per unit of the transformed variable (overrides LEGFRAC_QUAD_NODES)
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    pub nodes: Option<u64>,

    /// Relative tolerance of the quadrature convergence test
    #[arg(long, global = true, value_parser = positive)]
    pub quad_tol: Option<f64>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate a Legendre function, optionally after a fractional shift, at one point
    Eval {
        #[command(flatten)]
        func: FunctionArgs,
        /// Argument z (real in (-1, 1) for the on-cut kinds)
        #[arg(long, value_parser = complex, allow_hyphen_values = true)]
        z: Complex64,
    },
    /// Tabulate a Legendre function along a straight path in the z plane
    Table {
        #[command(flatten)]
        func: FunctionArgs,
        /// First point of the path
        #[arg(long, value_parser = complex, allow_hyphen_values = true)]
        start: Complex64,
        /// Last point of the path
        #[arg(long, value_parser = complex, allow_hyphen_values = true)]
        stop: Complex64,
        /// Number of points, including both ends
        #[arg(long, default_value_t = 11, value_parser = clap::value_parser!(u64).range(1..))]
        count: u64,
    },
    /// Compare a generating function with its partial sums
    Genfun(GenfunArgs),
    /// Check catalog identities on random parameter draws
    Verify(VerifyArgs),
    /// Approach Bessel functions through Legendre functions of large degree
    Limits {
        /// Order μ
        #[arg(long, allow_hyphen_values = true)]
        mu: f64,
        /// Bessel argument ϑ (> 0)
        #[arg(long, value_parser = positive)]
        theta: f64,
        /// Comma-separated degrees ν
        #[arg(long, value_delimiter = ',', required = true)]
        nu_sweep: Vec<f64>,
        /// Which contraction to follow
        #[arg(long, value_enum, default_value_t = BesselKind::K)]
        bessel: BesselKind,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    #[value(name = "P", alias = "p")]
    P,
    #[value(name = "Q", alias = "q")]
    Q,
    #[value(name = "P-cut", alias = "p-cut")]
    PCut,
    #[value(name = "Q-cut", alias = "q-cut")]
    QCut,
}

impl Kind {
    pub fn name(self) -> &'static str {
        match self {
            Kind::P => "P",
            Kind::Q => "Q",
            Kind::PCut => "P-cut",
            Kind::QCut => "Q-cut",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Operator {
    /// Fractional order raise M₊^λ
    Mplus,
    /// Fractional order lower M₋^λ
    Mminus,
    /// Fractional degree raise K₃^λ
    K3,
    /// Fractional degree lower P₃^λ
    P3,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Loop {
    /// Loop from infinity
    Weyl,
    /// Loop from the finite endpoint
    Riemann,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BesselKind {
    K,
    I,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    OrderRaise,
    OrderLower,
    DegreeLower,
    DegreeRaise,
    LegendreP,
    LegendreQ,
    Pnmu,
    Double,
}

#[derive(Debug, Clone, Args)]
pub struct FunctionArgs {
    /// Function kind
    #[arg(long, value_enum, ignore_case = true)]
    pub kind: Kind,
    /// Degree ν
    #[arg(long, value_parser = complex, allow_hyphen_values = true)]
    pub nu: Complex64,
    /// Order μ
    #[arg(long, value_parser = complex, allow_hyphen_values = true)]
    pub mu: Complex64,
    /// Fractional operator applied before evaluation
    #[arg(long, value_enum, requires = "lambda")]
    pub op: Option<Operator>,
    /// Power λ of the fractional operator
    #[arg(long, value_parser = complex, allow_hyphen_values = true, requires = "op")]
    pub lambda: Option<Complex64>,
    /// Contour used for the fractional operator
    #[arg(long = "loop", value_enum, default_value_t = Loop::Weyl)]
    pub contour: Loop,
    /// Radius of the circle around u = 0 (default: chosen from the singularities)
    #[arg(long, value_parser = positive)]
    pub circle_radius: Option<f64>,
}

#[derive(Debug, Clone, Args)]
pub struct GenfunArgs {
    #[arg(long, value_enum)]
    pub family: Family,
    /// P or Q (the classic families ignore it)
    #[arg(long, value_enum, ignore_case = true, default_value = "P")]
    pub kind: Kind,
    #[arg(long, value_parser = complex, allow_hyphen_values = true, default_value = "0")]
    pub nu: Complex64,
    #[arg(long, value_parser = complex, allow_hyphen_values = true, default_value = "0")]
    pub mu: Complex64,
    #[arg(long, value_parser = complex, allow_hyphen_values = true)]
    pub z: Complex64,
    /// Group parameter u
    #[arg(long, value_parser = complex, allow_hyphen_values = true)]
    pub u: Complex64,
    /// Phase variable t (order families) or x (degree families)
    #[arg(long, value_parser = complex, allow_hyphen_values = true, default_value = "1")]
    pub t: Complex64,
    /// Inner M₊ parameter of the double series
    #[arg(long, value_parser = complex, allow_hyphen_values = true, default_value = "0")]
    pub v: Complex64,
    /// Comma-separated partial-sum lengths
    #[arg(long, value_delimiter = ',', default_value = "5,10,20,40")]
    pub terms: Vec<usize>,
}

#[derive(Debug, Clone, Args)]
pub struct VerifyArgs {
    /// Tag or identity id to select (default: whole catalog)
    #[arg(long)]
    pub filter: Option<String>,
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    /// Random draws per identity
    #[arg(long, default_value_t = 3)]
    pub draws: usize,
    /// Check only the reference point of each identity
    #[arg(long, conflicts_with = "draws")]
    pub reference: bool,
    /// Override every identity's tolerance
    #[arg(long, value_parser = positive)]
    pub tolerance: Option<f64>,
    /// List the selected identities instead of checking them
    #[arg(long)]
    pub list: bool,
    /// Also write the line-delimited report to this file
    #[arg(long)]
    pub report: Option<std::path::PathBuf>,
}

/// Parses the complex literal grammar; non-finite parts are rejected.
pub fn complex(s: &str) -> Result<Complex64, String> {
    let s = s.trim();
    if s.contains(char::is_whitespace) {
        return Err(format!("`{s}` contains spaces; write complex literals as e.g. 0.3+0.4i"));
    }
    let w: Complex64 = s.parse().map_err(|_| format!("`{s}` is not a complex literal (e.g. 1.5, -2i, 0.3+0.4i)"))?;
    if w.re.is_finite() && w.im.is_finite() {
        Ok(w)
    } else {
        Err(format!("`{s}` is not finite"))
    }
}

fn positive(s: &str) -> Result<f64, String> {
    match s.trim().parse::<f64>() {
        Ok(x) if x > 0.0 && x.is_finite() => Ok(x),
        _ => Err(format!("`{s}` is not a positive number")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use clap::CommandFactory;

    #[test]
    fn literals() {
        assert_eq!(complex("1.5").unwrap(), Complex64::new(1.5, 0.0));
        assert_eq!(complex("0.3+0.4i").unwrap(), Complex64::new(0.3, 0.4));
        assert_eq!(complex("-2i").unwrap(), Complex64::new(0.0, -2.0));
        assert_eq!(complex("1e-3-2.5e1i").unwrap(), Complex64::new(1e-3, -25.0));
        assert_eq!(complex("-0.5").unwrap(), Complex64::new(-0.5, 0.0));
        for bad in ["", "abc", "1+", "inf", "1 + 2i"] {
            assert!(complex(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn literal_round_trip() {
        let w = Complex64::new(0.1 + 0.2, -1.0 / 3.0);
        assert_eq!(complex(&crate::output::complex_text(w)).unwrap(), w);
        let w = Complex64::new(-1e-300, 2.5e17);
        assert_eq!(complex(&crate::output::complex_text(w)).unwrap(), w);
    }

    #[test]
    fn command_is_consistent() {
        Cli::command().debug_assert();
    }
}
