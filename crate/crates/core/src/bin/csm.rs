use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use csm_exact::cli::{self, Cache, CommandOutput, Exit, OutputFormat};
use csm_exact::{Branch, Coupling, Error};

#[derive(Parser)]
#[command(name = "csm", version, about = "Exact spectrum and Jack eigenstates of the anti-periodic Calogero-Sutherland model")]
struct Args {
    /// Coupling A: "symbolic" or an exact rational such as 2 or 1/2
    #[arg(long, global = true, allow_hyphen_values = true)]
    coupling: Option<String>,
    /// Derive A from the interaction strength lambda instead of --coupling
    #[arg(long, global = true, allow_hyphen_values = true)]
    lambda: Option<f64>,
    /// Sign of the square root in A(lambda) and beta(lambda)
    #[arg(long, global = true, value_enum, default_value = "plus")]
    branch: BranchArg,
    /// Number of particles (variables)
    #[arg(long, global = true)]
    n_particles: Option<usize>,
    #[arg(long, global = true, value_enum, default_value = "json")]
    output: OutputArg,
    /// Directory for cached Jack polynomials
    #[arg(long, global = true)]
    cache_dir: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum BranchArg {
    Plus,
    Minus,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutputArg {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Mother/daughter graph of a root state, e.g. 6,4,3,1
    Family {
        #[arg(allow_hyphen_values = true)]
        state: String,
        /// Print the association and transition/weight tables
        #[arg(long)]
        table: bool,
    },
    /// Energies and eigenvectors of a root state's family
    Spectrum {
        #[arg(allow_hyphen_values = true)]
        state: String,
    },
    /// Jack polynomial of a partition, with norm and hook-product norm
    Jack { label: String },
    /// Jack properties, norms, eigenvector agreement and torus orthogonality at one weight
    Verify {
        #[arg(long)]
        weight: usize,
        /// Also check torus orthogonality in this many variables (integer A only)
        #[arg(long)]
        torus: Option<usize>,
    },
    /// Pseudo-momenta of a state and the energy offset
    Pseudomomenta {
        #[arg(allow_hyphen_values = true)]
        state: String,
    },
    /// Gauge prefactor at comma-separated positions in [0, L)
    Prefactor {
        positions: String,
        /// Ring length L
        #[arg(long, default_value_t = 1.0)]
        length: f64,
    },
    /// Young diagram of a partition and its conjugate
    Young { label: String },
}

fn run(args: &Args) -> Result<CommandOutput, Error> {
    let branch = match args.branch {
        BranchArg::Plus => Branch::Plus,
        BranchArg::Minus => Branch::Minus,
    };
    let coupling = |default: Coupling| {
        cli::resolve_coupling(args.coupling.as_deref(), args.lambda, branch, default).map(|(c, _)| c)
    };
    let fixed_coupling = || match coupling(Coupling::Symbolic)? {
        Coupling::Fixed(a) => Ok(a),
        Coupling::Symbolic => Err(Error::Parse("this command needs a rational --coupling or --lambda".into())),
    };
    Ok(match &args.command {
        Command::Family { state, table } => cli::cmd_family(&cli::parse_state(state)?, *table),
        Command::Spectrum { state } => cli::cmd_spectrum(&cli::parse_state(state)?, &coupling(Coupling::Symbolic)?),
        Command::Jack { label } => {
            let cache = args.cache_dir.as_ref().map(Cache::new);
            cli::cmd_jack(
                &cli::parse_partition(label)?,
                &coupling(Coupling::Symbolic)?,
                args.n_particles,
                cache.as_ref(),
            )
        }
        Command::Verify { weight, torus } => cli::cmd_verify(*weight, &coupling(Coupling::Symbolic)?, *torus),
        Command::Pseudomomenta { state } => cli::cmd_pseudomomenta(&cli::parse_state(state)?, &fixed_coupling()?),
        Command::Prefactor { positions, length } => {
            let x = positions
                .split(',')
                .map(|t| t.trim().parse::<f64>().map_err(|_| Error::Parse(format!("bad position: {t}"))))
                .collect::<Result<Vec<_>, _>>()?;
            let lambda = args
                .lambda
                .ok_or_else(|| Error::Parse("prefactor needs --lambda".into()))?;
            cli::cmd_prefactor(&x, lambda, branch, *length)
        }
        Command::Young { label } => cli::cmd_young(&cli::parse_partition(label)?),
    })
}

fn main() -> ExitCode {
    let args = match Args::try_parse() {
        Ok(a) => a,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { Exit::Usage.code() as u8 } else { 0 });
        }
    };
    let format = match args.output {
        OutputArg::Json => OutputFormat::Json,
        OutputArg::Text => OutputFormat::Text,
    };
    let out = run(&args).unwrap_or_else(|e| CommandOutput::from_error(&e));
    let rendered = out.render(format);
    if out.exit == Exit::Success || out.exit == Exit::Verification {
        print!("{rendered}");
    } else {
        eprint!("{rendered}");
    }
    ExitCode::from(out.exit.code() as u8)
}
