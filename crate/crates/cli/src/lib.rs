//! The `qsh` command line: argument definitions, an expression parser and
//! one handler per subcommand. [`run`] returns the exit code together with
//! everything destined for stdout, so the binary stays a thin wrapper.

pub mod commands;
pub mod config;
pub mod output;
pub mod parse;

use anyhow::Result;
use clap::{Parser, Subcommand, ValueEnum};

pub use config::{AlphabetKind, CliScalar, Config, Format, Ring};
pub use parse::{parse_expr, parse_scalar, print_expr, Expr, ParseError};

#[derive(Parser, Debug)]
#[command(name = "qsh", version, about = "Quasi-shuffle algebra calculator")]
pub struct Cli {
    /// z, q, euler:<r> or zero.
    #[arg(long, global = true, default_value = "z")]
    pub alphabet: String,
    /// rational, poly:<v1,v2,...> or qseries:<M>.
    #[arg(long, global = true)]
    pub coeff: Option<String>,
    /// Truncation order for λ-series and series maps.
    #[arg(long, global = true, default_value_t = 4)]
    pub trunc: usize,
    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Text)]
    pub format: FormatArg,
    /// Seed for randomized suites.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum FormatArg {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Multiplies the operands left to right.
    Prod {
        /// qsh (`*`, also `star`), qsh-star (`⋆`), shuffle, diamond or concat.
        #[arg(long, default_value = "qsh")]
        op: String,
        #[arg(required = true, num_args = 2..)]
        operands: Vec<String>,
    },
    /// Applies series maps in the order given.
    Map {
        /// t, -t, T, sigma, sigma_inv, sigma^<c>, exp, log, H[<c>],
        /// series[c1,c2,...], R, or a written series such as t/(1-t).
        #[arg(long = "series", required = true, allow_hyphen_values = true)]
        series: Vec<String>,
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Deconcatenation coproduct.
    Coproduct {
        /// Drop the terms `1 ⊗ w` and `w ⊗ 1`.
        #[arg(long)]
        reduced: bool,
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Antipode for `*`, `⋆` or the infinitesimal `⋄` structure.
    Antipode {
        /// qsh, qsh-star or diamond.
        #[arg(long, default_value = "qsh")]
        kind: String,
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// The derivation D, or `e^{cD}` with `--exp c`.
    Derivation {
        #[arg(long, allow_hyphen_values = true)]
        exp: Option<String>,
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Checks a generating-function identity through λ^trunc.
    Gf {
        #[arg(long)]
        identity: String,
        /// Letter combination; `u0; u1; ...` gives z = u0 + λu1 + ...
        #[arg(long, allow_hyphen_values = true)]
        z: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        y: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        p: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        s: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        r: Option<String>,
        /// The series f, as accepted by `map --series`.
        #[arg(long, allow_hyphen_values = true)]
        series: Option<String>,
        /// Product for expsum.
        #[arg(long)]
        mode: Option<String>,
    },
    /// Evaluates an expression to a number or q-series.
    Eval {
        /// harmonic:n=<n>, qzeta:order=<M>, mzv:cutoff=<M>, t:cutoff=<M>
        /// or polylog:r=<r>,cutoff=<M>.
        #[arg(long)]
        evaluator: String,
        /// Use the star version (apply Σ first).
        #[arg(long)]
        star: bool,
        /// Apply Σ^r first, e.g. `--interp r=1/2`.
        #[arg(long)]
        interp: Option<String>,
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Runs an invariant suite; exits 1 with a counterexample on failure.
    Check {
        /// algebra, psi, maps, hopf, lambda, harmonic, qzeta or all.
        suite: String,
        #[arg(long, default_value_t = 5)]
        maxlen: usize,
        #[arg(long, default_value_t = 60)]
        samples: usize,
        #[arg(long, default_value_t = 3)]
        max_index: u32,
    },
}

/// Exit code and stdout of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { code: 0, stdout }
    }
}

/// Validates the configuration, then dispatches on the coefficient ring.
pub fn run(cli: &Cli) -> Result<Outcome> {
    let format = match cli.format {
        FormatArg::Text => Format::Text,
        FormatArg::Json => Format::Json,
    };
    let ring = cli.coeff.as_deref().map(str::parse::<Ring>).transpose()?;
    let cfg = Config::new(cli.alphabet.parse()?, ring, cli.trunc, format, cli.seed)?;
    if let Command::Eval { evaluator, star, interp, expr } = &cli.command {
        return commands::eval(&cfg, evaluator, *star, interp.as_deref(), expr);
    }
    match cfg.ring {
        Ring::Rational => commands::dispatch::<quasishuffle::Rational>(&cfg, &cli.command),
        Ring::Poly(_) => commands::dispatch::<quasishuffle::PolyScalar>(&cfg, &cli.command),
        Ring::QSeries(_) => commands::dispatch::<quasishuffle::QSeries>(&cfg, &cli.command),
    }
}
