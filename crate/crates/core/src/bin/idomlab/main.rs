mod cmd;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use idomlab::bounds::BoundId;
use idomlab::families::FamilySpec;
use idomlab::io::GraphFormat;
use idomlab::{Invariant, SolveOptions};

#[derive(Parser)]
#[command(name = "idomlab", version, about = "Exact independent domination in direct products of graphs")]
struct Cli {
    #[command(flatten)]
    common: Common,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
pub struct Common {
    /// Largest vertex count handed to an exact solver [default: 40, or 120 for verify]
    #[arg(long, global = true, env = "IDOMLAB_CAP", value_parser = positive)]
    pub cap: Option<usize>,
    /// Worker threads for the exact solvers
    #[arg(long, global = true, default_value_t = 1, value_parser = positive)]
    pub workers: usize,
    /// Wall-clock budget in seconds
    #[arg(long, global = true, value_parser = positive_secs)]
    pub budget_secs: Option<f64>,
    /// Output style
    #[arg(long, global = true, value_enum, default_value_t = Out::Human)]
    pub out: Out,
}

impl Common {
    pub fn options(&self, default_cap: usize) -> SolveOptions {
        SolveOptions::default()
            .with_cap(self.cap.unwrap_or(default_cap))
            .with_workers(self.workers)
            .with_budget(self.budget_secs.map(Duration::from_secs_f64))
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Out {
    Json,
    Csv,
    Human,
}

/// A graph given as a family spec, or read from a file (`-` for stdin).
#[derive(Args, Clone)]
pub struct Input {
    /// Family spec such as path:7, cycle:16, kbip:3,3, X:3, Gn:3
    #[arg(long, value_parser = family, conflicts_with = "graph_file")]
    pub graph: Option<FamilySpec>,
    /// Graph file, edge-list or graph6 (`-` for stdin); graph6 files may hold one graph per line
    #[arg(long)]
    pub graph_file: Option<PathBuf>,
    /// Format of --graph-file; inferred from the extension when omitted
    #[arg(long)]
    pub format: Option<GraphFormat>,
}

#[derive(Subcommand)]
enum Command {
    /// Exact invariants of a graph or of a direct product
    Compute {
        #[command(flatten)]
        input: Input,
        /// Second factor of a direct product
        #[arg(long, value_parser = family, conflicts_with = "n")]
        product: Option<FamilySpec>,
        /// Shorthand for --product complete:N
        #[arg(long)]
        n: Option<usize>,
        /// Comma-separated list of i, alpha, gamma, gamma_t, rho
        #[arg(long, value_delimiter = ',', default_value = "i")]
        invariant: Vec<Invariant>,
        /// Answer the decision question "is the value at most K?"
        #[arg(long)]
        k: Option<usize>,
    },
    /// Write the direct product of two graphs
    Product {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_parser = family)]
        product: FamilySpec,
        /// Output format
        #[arg(long, default_value = "edge-list")]
        to: GraphFormat,
        /// Output file; the JSON sidecar goes next to it
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Re-check every certificate in a JSON file (`-` for stdin)
    Verify { file: PathBuf },
    /// Recompute a published table or result and compare
    Reproduce {
        #[arg(value_parser = ["table1", "prop34", "thm32", "bounds4", "conj-refutation", "thm12"])]
        target: String,
        /// Parameter of the thm12 families
        #[arg(long, default_value_t = 11)]
        n: usize,
    },
    /// Scan pairs of graphs for violations of a bound
    Search {
        #[command(flatten)]
        input: Input,
        /// Scan all connected graphs with at most this many vertices
        #[arg(long, conflicts_with_all = ["graph", "graph_file"])]
        connected: Option<usize>,
        /// Bound id, e.g. claw_free, bipartite, product_of_factors, min_of_factors
        #[arg(long, required_unless_present = "manifest")]
        bound: Option<BoundId>,
        /// Evaluate every bound on the pairs listed in a manifest (two family specs per line) and write CSV
        #[arg(long, conflicts_with_all = ["graph", "graph_file", "connected", "bound"])]
        manifest: Option<PathBuf>,
    },
    /// Write a family graph, or a certificate bundle
    Export {
        #[command(flatten)]
        input: Input,
        /// Certificate bundle to write instead of a graph
        #[arg(long, value_parser = ["thm12", "conj-refutation"], conflicts_with_all = ["graph", "graph_file"])]
        certificates: Option<String>,
        /// Parameter of the thm12 families
        #[arg(long, default_value_t = 11)]
        n: usize,
        /// Output format for graphs
        #[arg(long, default_value = "edge-list")]
        to: GraphFormat,
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

fn positive(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(0) => Err("must be positive".into()),
        Ok(v) => Ok(v),
        Err(e) => Err(e.to_string()),
    }
}

fn positive_secs(s: &str) -> Result<f64, String> {
    match s.parse::<f64>() {
        Ok(v) if v > 0.0 && v.is_finite() => Ok(v),
        Ok(_) => Err("must be a positive number of seconds".into()),
        Err(e) => Err(e.to_string()),
    }
}

/// Parses and builds the family so bad parameters fail at parse time.
fn family(s: &str) -> Result<FamilySpec, String> {
    let spec: FamilySpec = s.parse().map_err(|e| format!("{e}"))?;
    spec.build().map_err(|e| e.to_string())?;
    Ok(spec)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let c = &cli.common;
    let result = match cli.command {
        Command::Compute {
            input,
            product,
            n,
            invariant,
            k,
        } => cmd::compute(c, &input, product, n, &invariant, k),
        Command::Product {
            input,
            product,
            to,
            output,
        } => cmd::product(c, &input, &product, to, output.as_deref()),
        Command::Verify { file } => cmd::verify(c, &file),
        Command::Reproduce { target, n } => cmd::reproduce(c, &target, n),
        Command::Search {
            input,
            connected,
            bound,
            manifest,
        } => match (manifest, bound) {
            (Some(path), _) => cmd::batch(c, &path),
            (None, Some(bound)) => cmd::search(c, &input, connected, bound),
            (None, None) => unreachable!("clap requires --bound without --manifest"),
        },
        Command::Export {
            input,
            certificates,
            n,
            to,
            output,
        } => cmd::export(c, &input, certificates.as_deref(), n, to, output.as_deref()),
    };
    match result {
        Ok(status) => ExitCode::from(status as u8),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(cmd::Status::Usage as u8)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use clap::CommandFactory;
    use idomlab::DEFAULT_CAP;

    #[test]
    fn cli_is_well_formed() {
        Cli::command().debug_assert();
    }

    #[test]
    fn bad_family_is_rejected_at_parse_time() {
        assert!(Cli::try_parse_from(["idomlab", "compute", "--graph", "wheel:5"]).is_err());
        assert!(Cli::try_parse_from(["idomlab", "compute", "--graph", "X:1"]).is_err());
        assert!(Cli::try_parse_from(["idomlab", "compute", "--graph", "X:3"]).is_ok());
    }

    #[test]
    fn zero_cap_is_rejected() {
        assert!(Cli::try_parse_from(["idomlab", "--cap", "0", "verify", "x.json"]).is_err());
    }

    #[test]
    fn default_cap() {
        let cli = Cli::try_parse_from(["idomlab", "verify", "x.json"]).unwrap();
        if std::env::var_os("IDOMLAB_CAP").is_none() {
            assert_eq!(cli.common.options(DEFAULT_CAP).cap, DEFAULT_CAP);
        }
    }
}
