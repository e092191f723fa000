use std::fs::File;
use std::io::{self, BufRead, BufReader, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use hamspec::{decode_graph6, Family, Perturbation};
use hamspec_cli::certify::{
    all_resolved, certify_stream, describe, encode_edge_list, encode_family, read_records,
};
use hamspec_cli::config::{DEFAULT_BUDGET, DEFAULT_TOL};
use hamspec_cli::report::{all_pass, render_text, write_csv};
use hamspec_cli::sweep::{sweep, write_sweep_csv};
use hamspec_cli::{
    parse_k_list, proofs, prop, suite, CliError, CliResult, ExperimentConfig, ReportRow,
};

#[derive(Parser)]
#[command(
    name = "hamspec",
    version,
    about = "Spectral Hamiltonicity certificates and checks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct GridArgs {
    /// k values: `2`, `1,2` or `1..3`
    #[arg(long, default_value = "1,2")]
    k: String,
    #[arg(long, default_value_t = 3)]
    n_min: usize,
    #[arg(long, default_value_t = 16)]
    n_max: usize,
    #[arg(long, default_value_t = DEFAULT_TOL)]
    tol: f64,
    /// Write the CSV report here; the text report still goes to stdout
    #[arg(long)]
    out: Option<PathBuf>,
    /// Print CSV to stdout instead of the aligned text report
    #[arg(long)]
    csv: bool,
}

impl GridArgs {
    fn config(&self, name: &str) -> CliResult<ExperimentConfig> {
        let mut cfg = ExperimentConfig::new(name).with_range(self.n_min, self.n_max);
        cfg.ks = parse_k_list(&self.k)?;
        cfg.tol = self.tol;
        cfg.out = self.out.clone();
        Ok(cfg)
    }
}

#[derive(Subcommand)]
enum Command {
    /// Certify graph6 records from a file or stdin, one per line
    Certify {
        input: Option<PathBuf>,
        /// Treat each graph as balanced bipartite with the first half as one side
        #[arg(long)]
        bipartite: bool,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Single-edge deletions of N^k_n and L^k_n stay below n-k-1
    VerifyProp11 {
        #[command(flatten)]
        grid: GridArgs,
        /// Check every edge instead of one per pair of vertex classes
        #[arg(long)]
        all: bool,
        /// Also run orders below the threshold
        #[arg(long)]
        force: bool,
    },
    /// The order threshold is tight at n = k^3/2 + k + 2 (even k)
    VerifySharpness {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        csv: bool,
    },
    /// Replay the eigenvector inequalities on L^k_n - uv and B^k_n - uv
    VerifyProofs {
        #[command(flatten)]
        grid: GridArgs,
    },
    /// CSV grid of family spectral radii and thresholds
    Sweep {
        #[arg(long, default_value = "1..3")]
        k: String,
        #[arg(long, default_value_t = 3)]
        n_min: usize,
        #[arg(long, default_value_t = 30)]
        n_max: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Seeded random graphs against the bounds and the certifier
    RandomSuite {
        #[command(flatten)]
        grid: GridArgs,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        #[arg(long, default_value_t = 500)]
        bipartite_samples: usize,
        /// Largest part size for bipartite samples
        #[arg(long, default_value_t = 10)]
        half_max: usize,
        /// Near-complete bipartite samples above sqrt(n(n-1)) per part size in [7, 10]
        #[arg(long, default_value_t = 0)]
        backbone_samples: usize,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
    /// graph6 for a family member, or for an edge list read from a file or stdin
    Encode {
        #[arg(long, requires_all = ["n", "k"])]
        family: Option<Family>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
        /// none, Z-Z, X-Y or Y-Z
        #[arg(long, default_value = "none")]
        perturbation: String,
        input: Option<PathBuf>,
    },
    /// Print order, size and edges of graph6 records
    Decode { input: Option<PathBuf> },
}

fn open_input(path: &Option<PathBuf>) -> CliResult<Box<dyn BufRead>> {
    Ok(match path {
        Some(p) => Box::new(BufReader::new(File::open(p)?)),
        None => Box::new(BufReader::new(io::stdin())),
    })
}

fn parse_perturbation(s: &str) -> CliResult<Perturbation> {
    [
        Perturbation::Intact,
        Perturbation::DropZZ,
        Perturbation::DropXY,
        Perturbation::DropYZ,
    ]
    .into_iter()
    .find(|p| p.name().eq_ignore_ascii_case(s))
    .ok_or_else(|| {
        CliError::Usage(format!(
            "unknown perturbation {s:?}; use none, Z-Z, X-Y or Y-Z"
        ))
    })
}

fn emit(rows: &[ReportRow], out: &Option<PathBuf>, csv: bool) -> CliResult<bool> {
    if let Some(path) = out {
        write_csv(rows, File::create(path)?)?;
    }
    let stdout = io::stdout();
    if csv {
        write_csv(rows, stdout.lock())?;
    } else {
        stdout.lock().write_all(render_text(rows).as_bytes())?;
    }
    Ok(all_pass(rows))
}

fn run(cli: Cli) -> CliResult<bool> {
    match cli.command {
        Command::Certify {
            input,
            bipartite,
            budget,
        } => {
            let certs = certify_stream(open_input(&input)?, bipartite, budget)?;
            let mut out = io::stdout().lock();
            for (line, c) in &certs {
                writeln!(out, "line={line} {c}")?;
            }
            Ok(all_resolved(&certs))
        }
        Command::VerifyProp11 { grid, all, force } => {
            let mut cfg = grid.config("verify-prop11")?;
            cfg.all_edges = all;
            cfg.force = force;
            emit(&prop::verify_prop11(&cfg)?, &cfg.out, grid.csv)
        }
        Command::VerifySharpness { k, out, csv } => emit(&prop::verify_sharpness(k)?, &out, csv),
        Command::VerifyProofs { grid } => {
            let cfg = grid.config("verify-proofs")?;
            emit(&proofs::verify_proofs(&cfg)?, &cfg.out, grid.csv)
        }
        Command::Sweep {
            k,
            n_min,
            n_max,
            out,
        } => {
            let mut cfg = ExperimentConfig::new("sweep").with_range(n_min, n_max);
            cfg.ks = parse_k_list(&k)?;
            let rows = sweep(&cfg)?;
            match out {
                Some(path) => write_sweep_csv(&rows, File::create(path)?)?,
                None => write_sweep_csv(&rows, io::stdout().lock())?,
            }
            Ok(true)
        }
        Command::RandomSuite {
            grid,
            seed,
            samples,
            bipartite_samples,
            half_max,
            backbone_samples,
            budget,
        } => {
            let mut cfg = grid.config("random-suite")?;
            cfg.seed = seed;
            cfg.samples = samples;
            cfg.bipartite_samples = bipartite_samples;
            cfg.half_max = half_max;
            cfg.budget = budget;
            let mut rows = suite::random_suite(&cfg)?;
            if backbone_samples > 0 {
                let mut bb = cfg.clone().with_range(7, 10);
                bb.backbone_samples = backbone_samples;
                rows.extend(suite::bipartite_backbone(&bb)?);
            }
            emit(&rows, &cfg.out, grid.csv)
        }
        Command::Encode {
            family,
            n,
            k,
            perturbation,
            input,
        } => {
            let s = match (family, n, k) {
                (Some(f), Some(n), Some(k)) => {
                    encode_family(f, n, k, parse_perturbation(&perturbation)?)?
                }
                _ => encode_edge_list(open_input(&input)?)?,
            };
            println!("{s}");
            Ok(true)
        }
        Command::Decode { input } => {
            let mut out = io::stdout().lock();
            for (line, rec) in read_records(open_input(&input)?)? {
                let g = decode_graph6(rec.as_bytes())
                    .map_err(|source| CliError::Parse { line, source })?;
                writeln!(out, "line={line} {}", describe(&g))?;
            }
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
