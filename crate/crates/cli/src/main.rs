mod commands;
mod report;

use clap::{Args, Parser, Subcommand};
use report::Format;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "weierstrass", version, about = "Weierstrass semigroups and Feng-Rao distances of plane curves")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value = "text", global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Curve-level computations.
    #[command(subcommand)]
    Curve(CurveCommand),
    /// Full pipeline: S_P, triangulation against an integral basis, Γ_P.
    Weierstrass(WeierstrassArgs),
    /// Numerical semigroup computations.
    Semigroup(SemigroupArgs),
    /// Basis of L(mP).
    Lbasis(LbasisArgs),
    /// One-point codes C(m).
    #[command(subcommand)]
    Code(CodeCommand),
    /// Seeded oracle-equivalence suites.
    Selftest(SelftestArgs),
}

#[derive(Subcommand)]
enum CurveCommand {
    /// Degree normalization, approximate roots, one-branch verdict, S_P.
    Analyze(CurveArgs),
}

#[derive(Args, Clone)]
pub struct CurveArgs {
    /// Base field, e.g. `GF(2)` or `GF(3^2)`.
    #[arg(long)]
    pub field: String,
    /// Curve equation, e.g. `Y^8+Y^2+X^3`.
    #[arg(long, required_unless_present = "curve_file", conflicts_with = "curve_file")]
    pub curve: Option<String>,
    /// File holding the curve equation.
    #[arg(long)]
    pub curve_file: Option<PathBuf>,
}

#[derive(Args, Clone)]
pub struct PipelineArgs {
    #[command(flatten)]
    pub curve: CurveArgs,
    /// Integral basis file, one `numerator / denominator` per line, in the
    /// coordinates of the normalized model. Omit for a smooth affine model.
    #[arg(long)]
    pub integral_basis: Option<PathBuf>,
    /// Triangulation strategy.
    #[arg(long, value_enum, default_value = "fast")]
    pub mode: commands::Mode,
    /// Initial series precision of the branch expansion.
    #[arg(long, default_value_t = 16)]
    pub precision: usize,
}

#[derive(Args)]
struct WeierstrassArgs {
    #[command(flatten)]
    pipeline: PipelineArgs,
}

#[derive(Args)]
pub struct SemigroupArgs {
    #[arg(value_enum)]
    pub action: commands::SemigroupAction,
    /// Comma-separated generators, e.g. `9,3,8`.
    #[arg(long)]
    pub gens: String,
    /// Apéry pivot (defaults to the smallest generator).
    #[arg(long)]
    pub pivot: Option<u64>,
    /// Single value of m.
    #[arg(long, conflicts_with_all = ["from", "to"])]
    pub m: Option<u64>,
    /// Start of the m range.
    #[arg(long)]
    pub from: Option<u64>,
    /// End of the m range (inclusive).
    #[arg(long)]
    pub to: Option<u64>,
}

#[derive(Args)]
pub struct LbasisArgs {
    #[command(flatten)]
    pub pipeline: PipelineArgs,
    #[arg(long)]
    pub m: u64,
}

#[derive(Args)]
pub struct CodeArgs {
    #[command(flatten)]
    pub pipeline: PipelineArgs,
    /// Evaluation points are taken over GF(p^ext).
    #[arg(long, default_value_t = 1)]
    pub ext: u32,
    /// Keep only rows with values in S_P.
    #[arg(long)]
    pub improved: bool,
}

#[derive(Subcommand)]
enum CodeCommand {
    /// Parity-check matrix and parameters of C(m).
    Build {
        #[command(flatten)]
        code: CodeArgs,
        #[arg(long)]
        m: u64,
    },
    /// k, d*, δ_FR and correctable errors over a range of m.
    Bounds {
        #[command(flatten)]
        code: CodeArgs,
        #[arg(long, default_value_t = 0)]
        from: u64,
        /// Defaults to n + 2g.
        #[arg(long)]
        to: Option<u64>,
    },
    /// Known syndromes of a received word.
    Syndrome {
        #[command(flatten)]
        code: CodeArgs,
        #[arg(long)]
        m: u64,
        /// Comma-separated field elements.
        #[arg(long)]
        word: String,
        /// Also print s_{a,b} for the word.
        #[arg(long)]
        bidimensional: bool,
    },
}

#[derive(Args)]
pub struct SelftestArgs {
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Number of random semigroups.
    #[arg(long, default_value_t = 50)]
    pub count: usize,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    let result = match cli.command {
        Command::Curve(CurveCommand::Analyze(args)) => commands::curve_analyze(&args),
        Command::Weierstrass(args) => commands::weierstrass(&args.pipeline),
        Command::Semigroup(args) => commands::semigroup(&args),
        Command::Lbasis(args) => commands::lbasis(&args),
        Command::Code(CodeCommand::Build { code, m }) => commands::code_build(&code, m),
        Command::Code(CodeCommand::Bounds { code, from, to }) => commands::code_bounds(&code, from, to),
        Command::Code(CodeCommand::Syndrome { code, m, word, bidimensional }) => {
            commands::code_syndrome(&code, m, &word, bidimensional)
        }
        Command::Selftest(args) => commands::selftest(&args),
    };
    match result {
        Ok(report) => {
            let mut out = std::io::stdout().lock();
            if let Err(e) = report.write(cli.format, &mut out) {
                eprintln!("error: {e}");
                return ExitCode::from(1);
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            if let commands::CliError::Violations(report, _) = &e {
                let _ = report.write(cli.format, &mut std::io::stdout().lock());
            }
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
