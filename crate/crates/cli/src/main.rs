use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use gradual_cli::{run, Command, Format, RunConfig, Twist};

#[derive(Parser)]
#[command(name = "gradual", version, about = "Exact computations for graded Lie and L-infinity algebras")]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Check axioms of an algebra, module or L-infinity structure.
    Validate(Common),
    /// Chevalley-Eilenberg cohomology dimensions.
    Cohomology(Common),
    /// Dualizing character against the supertrace of the adjoint action.
    Character(Common),
    /// Twisted homology against cohomology with dual coefficients.
    Hazewinkel(Common),
    /// Divergence of the differential.
    Divergence(Common),
    /// Truncated cohomology of an L-infinity structure.
    Linfty(Common),
    /// Untwisted against divergence-twisted cohomology in complementary degrees.
    Conjecture(Common),
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Json,
    Table,
}

#[derive(Args)]
struct Common {
    #[arg(short, long)]
    input: PathBuf,
    #[arg(short, long = "module")]
    module: Vec<PathBuf>,
    #[arg(long)]
    truncation: Option<usize>,
    #[arg(long, allow_hyphen_values = true)]
    min_degree: Option<i64>,
    #[arg(long, allow_hyphen_values = true)]
    max_degree: Option<i64>,
    #[arg(long)]
    twist: Option<Twist>,
    #[arg(long, value_enum, default_value = "table")]
    format: FormatArg,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (command, c) = match cli.command {
        Cmd::Validate(c) => (Command::Validate, c),
        Cmd::Cohomology(c) => (Command::Cohomology, c),
        Cmd::Character(c) => (Command::Character, c),
        Cmd::Hazewinkel(c) => (Command::Hazewinkel, c),
        Cmd::Divergence(c) => (Command::Divergence, c),
        Cmd::Linfty(c) => (Command::Linfty, c),
        Cmd::Conjecture(c) => (Command::Conjecture, c),
    };
    let cfg = RunConfig {
        command,
        input: c.input,
        modules: c.module,
        truncation: c.truncation,
        min_degree: c.min_degree,
        max_degree: c.max_degree,
        twist: c.twist,
        format: match c.format {
            FormatArg::Json => Format::Json,
            FormatArg::Table => Format::Table,
        },
    };
    match run(&cfg) {
        Ok(outcome) => {
            let text = outcome.render(cfg.format);
            match &c.output {
                Some(p) => {
                    if let Err(e) = std::fs::write(p, text) {
                        eprintln!("error: {}: {e}", p.display());
                        return ExitCode::from(1);
                    }
                }
                None => print!("{text}"),
            }
            ExitCode::from(outcome.code as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
