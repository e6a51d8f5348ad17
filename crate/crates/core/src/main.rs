use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use boxplus::cli::{self, CliError};
use boxplus::laws::{LawConfig, Mutation};

/// Exact block-matrix calculus for semiadditive matrix categories.
#[derive(Parser)]
#[command(name = "boxplus", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate an expression over the morphisms declared in a document.
    Compose {
        /// Input document
        input: PathBuf,
        /// Expression over the declared names, e.g. "h .h f"
        #[arg(long)]
        expr: String,
        /// Write the result document here instead of only printing it
        #[arg(long)]
        output: Option<PathBuf>,
        /// Delete dimension-0 components from the result
        #[arg(long)]
        normalize: bool,
    },
    /// Run the equational law suite and print its report.
    CheckLaws {
        #[command(flatten)]
        bounds: BoundArgs,
        /// Optional TOML config with the same keys; flags override it
        #[arg(long)]
        config: Option<PathBuf>,
        /// Enable a deliberate corruption fixture (e.g. kron-flip)
        #[arg(long, value_name = "FIXTURE")]
        mutate: Option<String>,
        /// Also write the report to this file
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Build, verify and print the worked three-object example.
    DemoExample,
    /// Time the biproduct-partitioned multiplication against the direct one.
    DncMatmul {
        /// Square sizes to run (defaults to 64, 128, 256)
        #[arg(long)]
        size: Vec<usize>,
        #[arg(long, default_value_t = 8)]
        threshold: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
    },
}

#[derive(Args)]
struct BoundArgs {
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    cases: Option<usize>,
    #[arg(long)]
    max_object: Option<usize>,
    #[arg(long)]
    max_components: Option<usize>,
    #[arg(long)]
    max_dim: Option<usize>,
    #[arg(long)]
    scalar_bound: Option<i64>,
}

impl BoundArgs {
    fn apply(&self, mut cfg: LawConfig) -> LawConfig {
        if let Some(v) = self.seed {
            cfg.seed = v;
        }
        if let Some(v) = self.cases {
            cfg.cases_per_law = v;
        }
        if let Some(v) = self.max_object {
            cfg.max_object = v;
        }
        if let Some(v) = self.max_components {
            cfg.max_components = v;
        }
        if let Some(v) = self.max_dim {
            cfg.max_dim = v;
        }
        if let Some(v) = self.scalar_bound {
            cfg.scalar_bound = v;
        }
        cfg
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Compose {
            input,
            expr,
            output,
            normalize,
        } => {
            let rendered = cli::cmd_compose(&input, &expr, output.as_deref(), normalize)?;
            print!("{rendered}");
            Ok(())
        }
        Command::CheckLaws {
            bounds,
            config,
            mutate,
            output,
        } => {
            let base = match config {
                Some(path) => cli::load_config(&path)?,
                None => LawConfig::default(),
            };
            let cfg = bounds.apply(base);
            let mutation = match mutate.as_deref() {
                None => Mutation::None,
                Some(name) => name.parse::<Mutation>().map_err(CliError::Internal)?,
            };
            let (report, rendered) = cli::cmd_check_laws(&cfg, mutation, output.as_deref())?;
            print!("{rendered}");
            match report.total_failures() {
                0 => Ok(()),
                n => Err(CliError::LawFailures(n)),
            }
        }
        Command::DemoExample => {
            let rendered = cli::cmd_demo_example()?;
            print!("{rendered}");
            Ok(())
        }
        Command::DncMatmul {
            size,
            threshold,
            seed,
        } => {
            let sizes = if size.is_empty() {
                vec![64, 128, 256]
            } else {
                size
            };
            let rendered = cli::cmd_dnc_matmul(&sizes, threshold, seed)?;
            print!("{rendered}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(err.exit_code().clamp(0, 255) as u8)
        }
    }
}
