use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::config::{BinomialSetting, Overrides};

#[derive(Debug, Parser)]
#[command(
    name = "grover-abszeta",
    version,
    about = "Exact and numeric analysis of the Grover matrix U_N and its absolute zeta function"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Emit a versioned JSON report instead of text
    #[arg(long, global = true)]
    pub json: bool,

    /// Significant digits in text output
    #[arg(long, global = true, value_name = "P")]
    pub precision: Option<usize>,

    /// Truncation of the ℓ-sum (series and truncated product)
    #[arg(long, global = true, value_name = "K")]
    pub lmax: Option<usize>,

    /// Truncation of the R-sum (series and truncated product)
    #[arg(long, global = true, value_name = "K")]
    pub rmax: Option<usize>,

    /// key = value settings file; flags override it
    #[arg(long, global = true, value_name = "PATH")]
    pub config: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Matrices, characteristic polynomials, spectrum and period of U_N
    Analyze {
        n: usize,
        /// Brute-force scan cutoff
        #[arg(long)]
        cutoff: Option<u64>,
    },
    /// Period of U_N
    Period {
        n: usize,
        #[arg(long, value_enum, default_value_t = PeriodMethodArg::All)]
        method: PeriodMethodArg,
        /// Brute-force scan cutoff
        #[arg(long)]
        cutoff: Option<u64>,
    },
    /// The matrix zeta det(I - uU_N)^{-1}
    Zeta {
        n: usize,
        /// Evaluate at u (a rational p/q is evaluated exactly)
        #[arg(long, allow_hyphen_values = true)]
        at: Option<String>,
    },
    /// Absolute zeta: closed forms (N = 2, 4), functional equation, series
    Abszeta(AbszetaArgs),
    /// General-N series for Z(w, s), or the truncated product with --product
    Series(SeriesArgs),
    /// Run the acceptance suite and print a pass/fail table
    Reproduce {
        /// Multiply every numeric tolerance by this factor
        #[arg(long)]
        tolerance_scale: Option<f64>,
        /// Run only these criteria (1-10)
        #[arg(long, value_delimiter = ',')]
        only: Vec<usize>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PeriodMethodArg {
    Cyclotomic,
    Fast,
    Bruteforce,
    All,
}

#[derive(Debug, Args)]
pub struct AbszetaArgs {
    pub n: usize,
    /// Value at the central point D/2
    #[arg(long)]
    pub central: bool,
    /// Sweep the functional-equation residual over --grid
    #[arg(long)]
    pub check_fe: bool,
    /// Grid "start:end:step" (inclusive)
    #[arg(long, allow_hyphen_values = true)]
    pub grid: Option<String>,
    /// Emit grid rows as CSV (s, lhs, rhs, residual)
    #[arg(long)]
    pub csv: bool,
    /// Use the general-N series with a Mellin cross-check (needs --w, --s)
    #[arg(long)]
    pub series: bool,
    #[arg(long, allow_negative_numbers = true)]
    pub w: Option<f64>,
    /// Imaginary part of w
    #[arg(long, allow_negative_numbers = true, default_value_t = 0.0)]
    pub w_im: f64,
    #[arg(long, allow_negative_numbers = true)]
    pub s: Option<f64>,
}

#[derive(Debug, Args)]
pub struct SeriesArgs {
    pub n: usize,
    #[arg(long, allow_negative_numbers = true)]
    pub w: Option<f64>,
    /// Imaginary part of w
    #[arg(long, allow_negative_numbers = true, default_value_t = 0.0)]
    pub w_im: f64,
    #[arg(long, allow_negative_numbers = true)]
    pub s: f64,
    /// Weight of the m-sum
    #[arg(long, value_enum)]
    pub binomial: Option<BinomialSetting>,
    /// Also evaluate the Mellin integral
    #[arg(long)]
    pub mellin: bool,
    /// Truncated formal product for the absolute zeta at s instead of Z(w, s)
    #[arg(long)]
    pub product: bool,
}

impl Cli {
    pub fn overrides(&self) -> Overrides {
        let mut o = Overrides {
            precision: self.precision,
            lmax: self.lmax,
            rmax: self.rmax,
            ..Overrides::default()
        };
        match &self.command {
            Command::Analyze { cutoff, .. } | Command::Period { cutoff, .. } => o.cutoff = *cutoff,
            Command::Series(a) => o.binomial = a.binomial,
            Command::Reproduce {
                tolerance_scale, ..
            } => o.tolerance_scale = *tolerance_scale,
            _ => {}
        }
        o
    }

    pub fn command_name(&self) -> &'static str {
        match self.command {
            Command::Analyze { .. } => "analyze",
            Command::Period { .. } => "period",
            Command::Zeta { .. } => "zeta",
            Command::Abszeta(_) => "abszeta",
            Command::Series(_) => "series",
            Command::Reproduce { .. } => "reproduce",
        }
    }

    pub fn n(&self) -> Option<usize> {
        match &self.command {
            Command::Analyze { n, .. } | Command::Period { n, .. } | Command::Zeta { n, .. } => {
                Some(*n)
            }
            Command::Abszeta(a) => Some(a.n),
            Command::Series(a) => Some(a.n),
            Command::Reproduce { .. } => None,
        }
    }
}

/// Parses `"start:end:step"` into the inclusive list of points, sorted.
pub fn parse_grid(spec: &str) -> Result<Vec<f64>, String> {
    let parts: Vec<&str> = spec.split(':').collect();
    let [a, b, step] = parts.as_slice() else {
        return Err(format!("grid must be start:end:step, got {spec:?}"));
    };
    let parse = |t: &str| {
        t.trim()
            .parse::<f64>()
            .map_err(|_| format!("bad number {t:?} in grid"))
    };
    let (a, b, step) = (parse(a)?, parse(b)?, parse(step)?);
    if !(step > 0.0 && a.is_finite() && b.is_finite()) || b < a {
        return Err(format!("grid needs start ≤ end and step > 0, got {spec:?}"));
    }
    let count = ((b - a) / step + 1e-9).floor() as usize + 1;
    if count > 100_000 {
        return Err(format!("grid has {count} points; limit is 100000"));
    }
    // Round to a step-sized decimal grid so 0.1 + 0.2 prints as 0.3.
    Ok((0..count)
        .map(|k| {
            let x = a + k as f64 * step;
            (x * 1e12).round() / 1e12
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grids() {
        assert_eq!(parse_grid("-1.5:2.5:0.5").unwrap().len(), 9);
        assert_eq!(parse_grid("0:0.3:0.1").unwrap(), vec![0.0, 0.1, 0.2, 0.3]);
        assert!(parse_grid("1:0:0.5").is_err());
        assert!(parse_grid("1:2").is_err());
        assert!(parse_grid("0:1:0").is_err());
    }

    #[test]
    fn clap_definition_is_consistent() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }

    #[test]
    fn negative_arguments_parse() {
        let cli = Cli::try_parse_from([
            "grover-abszeta",
            "abszeta",
            "2",
            "--check-fe",
            "--grid",
            "-1.5:2.5:0.5",
            "--s",
            "-1",
        ])
        .unwrap();
        let Command::Abszeta(a) = cli.command else {
            panic!()
        };
        assert_eq!((a.grid.as_deref(), a.s), (Some("-1.5:2.5:0.5"), Some(-1.0)));
    }
}
