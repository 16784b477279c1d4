use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use reembed::{Execution, Surface};
use reembed_cli::{self as cli, CliError, CliResult, Format};

/// Strong re-embeddings of 3-connected cubic planar graphs.
#[derive(Parser)]
#[command(name = "reembed", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Input {
    /// Inline graph6 string.
    #[arg(long, short = 'g')]
    graph: Option<String>,
    /// graph6 file, one graph per line; `-` reads stdin.
    #[arg(long, short = 'i')]
    input: Option<String>,
}

#[derive(Args)]
struct Common {
    #[arg(long, short = 'f', default_value = "text")]
    format: Format,
    /// Worker threads; 1 runs sequentially.
    #[arg(long, short = 'j')]
    jobs: Option<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// Facial walks and surface of the embedding with the given twisted edges.
    Faces {
        #[command(flatten)]
        input: Input,
        /// Twisted edges as 1-based `u-v` pairs, comma separated.
        #[arg(long, short = 't')]
        twist: Vec<String>,
        #[command(flatten)]
        common: Common,
    },
    /// All re-embeddings on a surface, one per twisted subgraph of the dual.
    Enumerate {
        #[command(flatten)]
        input: Input,
        /// projective, torus or klein.
        #[arg(long, short = 's')]
        surface: Surface,
        /// Only strong re-embeddings.
        #[arg(long)]
        strong: bool,
        /// Keep one re-embedding per automorphism orbit.
        #[arg(long)]
        fold_automorphisms: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Rotation system and faces of the spherical embedding.
    Embed {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        common: Common,
    },
    /// Counts of graphs with strong re-embeddings, per order.
    Census {
        #[arg(long, default_value_t = 12)]
        max_n: usize,
        /// Required for orders above 14.
        #[arg(long)]
        allow_large: bool,
        /// Tabulate these graphs instead of the generated census.
        #[arg(long, short = 'i')]
        input: Option<String>,
        #[command(flatten)]
        common: Common,
    },
    /// Compares an exhaustive twist-set sweep with the predicted families.
    Verify {
        #[arg(long, default_value_t = 12)]
        max_n: usize,
        /// Required for orders above 12 or sweeps above 18 edges.
        #[arg(long)]
        allow_large: bool,
        /// Largest edge count to sweep.
        #[arg(long)]
        cap: Option<usize>,
        /// Verify these graphs instead of the generated census.
        #[arg(long, short = 'i')]
        input: Option<String>,
        #[command(flatten)]
        common: Common,
    },
}

const CENSUS_LIMIT: usize = 14;
const VERIFY_LIMIT: usize = 12;
const DEFAULT_CAP: usize = 18;
const LARGE_CAP: usize = 30;

fn execution(jobs: Option<usize>) -> Execution {
    match jobs {
        Some(1) => Execution::Sequential,
        _ => Execution::Parallel,
    }
}

fn with_jobs<T: Send>(jobs: Option<usize>, f: impl FnOnce(Execution) -> T + Send) -> CliResult<T> {
    if jobs == Some(0) {
        return Err(CliError::input("--jobs must be at least 1"));
    }
    #[cfg(feature = "parallel")]
    if let Some(n) = jobs.filter(|&n| n > 1) {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map_err(|e| CliError::input(e.to_string()))?;
        return Ok(pool.install(|| f(Execution::Parallel)));
    }
    Ok(f(execution(jobs)))
}

fn run(cmd: Command) -> CliResult<(String, bool)> {
    match cmd {
        Command::Faces { input, twist, common } => {
            let g = cli::load_graph(input.graph.as_deref(), input.input.as_deref())?;
            let t = cli::parse_twists(&g, &twist)?;
            let r = cli::faces(&g, &t)?;
            Ok((cli::render_faces(&r, common.format), true))
        }
        Command::Enumerate { input, surface, strong, fold_automorphisms, common } => {
            let graphs = cli::load_graphs(input.graph.as_deref(), input.input.as_deref())?;
            let records = with_jobs(common.jobs, |exec| -> CliResult<Vec<_>> {
                let mut out = Vec::new();
                for g in &graphs {
                    out.extend(cli::enumerate(g, surface, strong, fold_automorphisms, exec)?);
                }
                Ok(out)
            })??;
            Ok((cli::render_records(&records, common.format), true))
        }
        Command::Embed { input, common } => {
            let g = cli::load_graph(input.graph.as_deref(), input.input.as_deref())?;
            Ok((cli::render_embedding(&cli::embedding(&g)?, common.format), true))
        }
        Command::Census { max_n, allow_large, input, common } => {
            if max_n > CENSUS_LIMIT && !allow_large {
                return Err(CliError::input(format!("--max-n above {CENSUS_LIMIT} needs --allow-large")));
            }
            let graphs = input.as_deref().map(|p| cli::load_graphs(None, Some(p))).transpose()?;
            let rows = with_jobs(common.jobs, |exec| cli::census(max_n, graphs.as_deref(), exec))??;
            Ok((cli::render_census(&rows, common.format), true))
        }
        Command::Verify { max_n, allow_large, cap, input, common } => {
            if max_n > VERIFY_LIMIT && !allow_large {
                return Err(CliError::input(format!("--max-n above {VERIFY_LIMIT} needs --allow-large")));
            }
            let cap = cap.unwrap_or(if allow_large { LARGE_CAP } else { DEFAULT_CAP });
            if cap > DEFAULT_CAP && !allow_large {
                return Err(CliError::input(format!("--cap above {DEFAULT_CAP} needs --allow-large")));
            }
            let (graphs, vs) = with_jobs(common.jobs, |exec| -> CliResult<_> {
                let graphs = match input.as_deref() {
                    Some(p) => cli::load_graphs(None, Some(p))?,
                    None => cli::census_graphs(max_n, exec),
                };
                let vs = cli::verify(&graphs, cap, exec)?;
                Ok((graphs, vs))
            })??;
            let ok = vs.iter().all(|v| v.passed());
            Ok((cli::render_verification(&vs, &graphs, common.format), ok))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok((out, ok)) => {
            print!("{out}");
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(cli::EXIT_VERIFY as u8)
            }
        }
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code as u8)
        }
    }
}
