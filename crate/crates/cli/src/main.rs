//! `htcol`: build, check and search for harmonious total colourings.
//!
//! Exit codes: 0 success, 1 verification failed, 2 UNSAT, 3 INCONCLUSIVE,
//! 64 usage error, 65 bad input data, 74 I/O error.

mod sweep;

use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use harmonious::io::{
    certificate_to_json, colouring_from_json, colouring_to_json, graph_from_json, levi_to_json,
    to_csv, to_dot,
};
use harmonious::solver::{search, Outcome, SearchConfig, Symmetry, DEFAULT_NODE_LIMIT};
use harmonious::{
    complete_multigraph, construct_multigraph, counting_lower_bound, expected_ht, levi_graph,
    verify, Mode, TotalColouring,
};

const EXIT_USAGE: u8 = 64;
const EXIT_DATA: u8 = 65;
const EXIT_IO: u8 = 74;

#[derive(Parser)]
#[command(name = "htcol", version, about = "Harmonious total colourings of complete multigraphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Dot,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum ExportFormat {
    Dot,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Build an optimal colouring of λK_n.
    Construct {
        #[arg(value_parser = clap::value_parser!(u32).range(1..))]
        n: u32,
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
        lambda: u32,
        #[arg(long, short)]
        output: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Check a colouring file ("-" for stdin). Exits 0 iff harmonious.
    Verify {
        input: String,
        /// Graph the colouring must cover; by default the coloured edges.
        #[arg(long)]
        graph: Option<PathBuf>,
        /// List every violation instead of the first.
        #[arg(long)]
        exhaustive: bool,
    },
    /// Exhaustive search on λK_n with a colour budget.
    Solve {
        #[arg(value_parser = clap::value_parser!(u32).range(1..))]
        n: u32,
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
        lambda: u32,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        budget: u32,
        /// Disable both symmetry reductions.
        #[arg(long)]
        no_symmetry: bool,
        #[arg(long, default_value_t = DEFAULT_NODE_LIMIT)]
        node_limit: u64,
        #[arg(long, default_value_t = 1)]
        threads: usize,
    },
    /// Counting lower bound and closed form for λK_n.
    Bounds {
        #[arg(value_parser = clap::value_parser!(u64).range(2..))]
        n: u64,
        #[arg(value_parser = clap::value_parser!(u64).range(1..))]
        lambda: u64,
    },
    /// Incidence graph of a graph file, as graph JSON with a node map.
    Levi { input: String },
    /// Construct and verify every λK_n in a range.
    Sweep {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        max_n: u32,
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
        max_lambda: u32,
        /// Random sub-multigraphs checked per case via restriction.
        #[arg(long, default_value_t = 0)]
        samples: u32,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        threads: usize,
    },
    /// Convert a colouring file to DOT or CSV.
    Export {
        input: String,
        #[arg(long, value_enum)]
        format: ExportFormat,
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
}

/// Why a command stopped, mapped onto an exit code.
enum Failure {
    Data(String),
    Io(String),
}

impl From<harmonious::Error> for Failure {
    fn from(e: harmonious::Error) -> Self {
        Failure::Data(e.to_string())
    }
}

fn read_input(path: &str) -> Result<String, Failure> {
    if path == "-" {
        let mut s = String::new();
        io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Failure::Io(format!("stdin: {e}")))?;
        Ok(s)
    } else {
        fs::read_to_string(path).map_err(|e| Failure::Io(format!("{path}: {e}")))
    }
}

fn write_output(path: Option<&PathBuf>, text: &str) -> Result<(), Failure> {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| Failure::Io(format!("{}: {e}", p.display()))),
        None => io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| Failure::Io(format!("stdout: {e}"))),
    }
}

fn pretty(v: &serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values always serialize");
    s.push('\n');
    s
}

fn render(c: &TotalColouring, format: Format) -> Result<String, Failure> {
    Ok(match format {
        Format::Json => pretty(&colouring_to_json(c)),
        Format::Dot => to_dot(&c.underlying_graph()?, Some(c)),
        Format::Csv => to_csv(c),
    })
}

fn run(command: Command) -> Result<u8, Failure> {
    match command {
        Command::Construct {
            n,
            lambda,
            output,
            format,
        } => {
            let c = construct_multigraph(n as usize, lambda)?;
            let g = complete_multigraph(n as usize, lambda)?;
            let report = verify(&g, &c, Mode::FirstViolation)?;
            write_output(output.as_ref(), &render(&c, format)?)?;
            eprintln!(
                "n={n} λ={lambda} colours={} harmonious={}",
                c.palette.len(),
                report.harmonious
            );
            Ok(if report.harmonious { 0 } else { 1 })
        }
        Command::Verify {
            input,
            graph,
            exhaustive,
        } => {
            let c = colouring_from_json(&read_input(&input)?)?;
            let g = match graph {
                Some(p) => graph_from_json(&read_input(&p.to_string_lossy())?)?,
                None => c.underlying_graph()?,
            };
            let mode = if exhaustive { Mode::Exhaustive } else { Mode::FirstViolation };
            let report = verify(&g, &c, mode)?;
            let doc = serde_json::to_value(&report).expect("report serializes");
            write_output(None, &pretty(&doc))?;
            eprintln!(
                "harmonious={} colours={}",
                report.harmonious,
                c.colours_used()
            );
            Ok(if report.harmonious { 0 } else { 1 })
        }
        Command::Solve {
            n,
            lambda,
            budget,
            no_symmetry,
            node_limit,
            threads,
        } => {
            let g = complete_multigraph(n as usize, lambda)?;
            let cfg = SearchConfig {
                colour_budget: budget,
                symmetry: if no_symmetry { Symmetry::None } else { Symmetry::CompleteGraph },
                interchangeable_colours: !no_symmetry,
                node_limit: Some(node_limit),
                parallel_width: threads.max(1),
            };
            let cert = search(&g, &cfg)?;
            write_output(None, &pretty(&certificate_to_json(&cert)))?;
            eprintln!(
                "n={n} λ={lambda} budget={budget} {} nodes={}",
                cert.outcome.name().to_uppercase(),
                cert.nodes_explored
            );
            Ok(match cert.outcome {
                Outcome::Sat(_) => 0,
                Outcome::Unsat => 2,
                Outcome::Inconclusive => 3,
            })
        }
        Command::Bounds { n, lambda } => {
            let r = counting_lower_bound(n, lambda)?;
            let rows = [
                ("n", r.n.to_string()),
                ("lambda", r.lambda.to_string()),
                ("lower_bound", r.lower_bound.to_string()),
                ("expected", r.expected.to_string()),
                ("closed_form", r.closed_form.to_string()),
                ("vertex_coloured_edges", r.vertex_coloured_edges.to_string()),
                ("max_class", r.max_class.to_string()),
                ("closed_form_agrees", r.closed_form_agrees().to_string()),
                ("bound_tight", (r.lower_bound == expected_ht(n, lambda)).to_string()),
            ];
            let text: String = rows.iter().map(|(k, v)| format!("{k:<22}{v}\n")).collect();
            write_output(None, &text)?;
            Ok(0)
        }
        Command::Levi { input } => {
            let g = graph_from_json(&read_input(&input)?)?;
            write_output(None, &pretty(&levi_to_json(&levi_graph(&g))))?;
            Ok(0)
        }
        Command::Sweep {
            max_n,
            max_lambda,
            samples,
            seed,
            threads,
        } => {
            let cfg = sweep::Config {
                max_n: max_n as usize,
                max_lambda,
                samples,
                seed,
                threads: threads.max(1),
            };
            let mut failed = false;
            let mut out = io::stdout().lock();
            for line in sweep::run(&cfg) {
                failed |= !line.ok;
                writeln!(out, "{line}").map_err(|e| Failure::Io(format!("stdout: {e}")))?;
            }
            Ok(if failed { 1 } else { 0 })
        }
        Command::Export {
            input,
            format,
            output,
        } => {
            let c = colouring_from_json(&read_input(&input)?)?;
            let text = match format {
                ExportFormat::Dot => render(&c, Format::Dot)?,
                ExportFormat::Csv => render(&c, Format::Csv)?,
            };
            write_output(output.as_ref(), &text)?;
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { 0 });
        }
    };
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(Failure::Data(msg)) => {
            eprintln!("htcol: {msg}");
            ExitCode::from(EXIT_DATA)
        }
        Err(Failure::Io(msg)) => {
            eprintln!("htcol: {msg}");
            ExitCode::from(EXIT_IO)
        }
    }
}
