//! The `srm` command line.
//!
//! Graphs are read from a file argument or stdin, as graph6 or as an edge
//! list (text whose first token is `n`, or that starts with a `#` comment).
//! Exit status: 0 on success, 1 on bad input or flags, 2 when `verify` finds
//! a counterexample.

use std::io::{Read, Write};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::error::{Error, Result};
use crate::graph::{construct_extremal, edgelist, graph6, ExtremalParams, Graph};
use crate::matching::{find_rainbow, max_matching, GraphFamily};
use crate::shifting::{fully_shift, shift_xy};
use crate::spectral::{spectral_radius, DEFAULT_TOL};
use crate::verify::{check_extremal_rigidity, check_t11, check_t12, check_t13, Mode, SweepPlan, DEFAULT_BUDGET, DEFAULT_MARGIN};

#[derive(Parser, Debug)]
#[command(name = "srm", version, about = "Spectral conditions for rainbow matchings")]
pub struct Cli {
    /// Power-iteration tolerance.
    #[arg(long, global = true, env = "SRM_TOL", default_value_t = DEFAULT_TOL)]
    tol: f64,
    /// Output format for single-graph commands.
    #[arg(long, global = true, value_enum, default_value_t = Output::Text)]
    output: Output,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Output {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print A^i_{n,m} in graph6.
    Construct {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        i: usize,
    },
    /// Spectral radius of the input graph.
    Rho { input: Option<String> },
    /// Apply S_xy, or shift fully, and print the result in graph6.
    Shift {
        input: Option<String>,
        #[arg(long, requires = "y", conflicts_with = "full")]
        x: Option<usize>,
        #[arg(long, requires = "x")]
        y: Option<usize>,
        #[arg(long, required_unless_present = "x")]
        full: bool,
        /// Print each non-identity shift as a JSON line first.
        #[arg(long)]
        trace: bool,
    },
    /// Matching number of the input graph.
    Nu { input: Option<String> },
    /// Rainbow matching of a family; prints `index: u v` lines or NONE.
    Rainbow {
        /// Member files (`-` for stdin). A file of graph6 lines gives one member per line.
        #[arg(long, num_args = 1.., required = true)]
        family: Vec<String>,
    },
    /// Verification sweeps with JSON-lines certificates.
    Verify {
        #[arg(value_enum)]
        check: Check,
        #[command(flatten)]
        sweep: SweepArgs,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Check {
    T11,
    T12,
    T13,
    Rigidity,
}

#[derive(Args, Debug)]
struct SweepArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    m: usize,
    #[arg(long, group = "mode")]
    exhaustive: bool,
    #[arg(long, group = "mode")]
    filtered: bool,
    /// Number of sampled instances.
    #[arg(long, group = "mode", requires = "seed")]
    sample: Option<u64>,
    #[arg(long)]
    seed: Option<u64>,
    /// Cap on enumerated instances, or on draws per sampled member.
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
    #[arg(long, default_value_t = DEFAULT_MARGIN)]
    margin: f64,
}

/// Runs the CLI on `args` (program name first) and returns the exit code.
pub fn run<I, S>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { stdout.write_all(text.as_bytes()) } else { stderr.write_all(text.as_bytes()) };
            return code;
        }
    };
    match dispatch(&cli, stdin, stdout) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            1
        }
    }
}

/// Entry point for the binary.
pub fn main() -> i32 {
    let (stdin, stdout, stderr) = (std::io::stdin(), std::io::stdout(), std::io::stderr());
    run(std::env::args_os(), &mut stdin.lock(), &mut stdout.lock(), &mut stderr.lock())
}

fn read_source(path: Option<&str>, stdin: &mut dyn Read) -> Result<String> {
    let mut text = String::new();
    match path {
        None | Some("-") => {
            stdin.read_to_string(&mut text)?;
        }
        Some(p) => text = std::fs::read_to_string(p).map_err(|e| Error::Io(format!("{p}: {e}")))?,
    }
    Ok(text)
}

fn is_edge_list(text: &str) -> bool {
    let t = text.trim_start();
    t.starts_with('#') || (t.starts_with('n') && t[1..].starts_with(char::is_whitespace))
}

/// Graphs in `text`: one for an edge list, one per non-empty line for graph6.
pub fn parse_graphs(text: &str) -> Result<Vec<Graph>> {
    if is_edge_list(text) {
        return Ok(vec![edgelist::parse(text)?]);
    }
    let graphs = text.lines().map(str::trim).filter(|l| !l.is_empty()).map(graph6::decode).collect::<Result<Vec<_>>>()?;
    if graphs.is_empty() {
        return Err(Error::Graph6("no graph in input".into()));
    }
    Ok(graphs)
}

fn read_graph(path: Option<&str>, stdin: &mut dyn Read) -> Result<Graph> {
    let mut graphs = parse_graphs(&read_source(path, stdin)?)?;
    if graphs.len() != 1 {
        return Err(Error::Usage(format!("expected one graph, found {}", graphs.len())));
    }
    Ok(graphs.remove(0))
}

fn dispatch(cli: &Cli, stdin: &mut dyn Read, out: &mut dyn Write) -> Result<i32> {
    let json = cli.output == Output::Json;
    match &cli.command {
        Command::Construct { n, m, i } => {
            let g = construct_extremal(ExtremalParams::new(*n, *m, *i)?);
            writeln!(out, "{}", graph6::encode(&g))?;
        }
        Command::Rho { input } => {
            let g = read_graph(input.as_deref(), stdin)?;
            let r = spectral_radius(&g, cli.tol)?;
            if json {
                let v = json!({"rho": r.rho, "residual": r.residual, "iterations": r.iterations, "vector": r.vector});
                writeln!(out, "{v}")?;
            } else {
                writeln!(out, "{:?}", r.rho)?;
            }
        }
        Command::Shift { input, x, y, full: _, trace } => {
            let g = read_graph(input.as_deref(), stdin)?;
            let result = match (x, y) {
                (Some(x), Some(y)) => {
                    let shifted = shift_xy(&g, *x, *y)?;
                    if *trace {
                        let moved = shifted.edges().filter(|&e| !g.has_edge(e.0, e.1)).count();
                        if moved > 0 {
                            writeln!(out, "{}", json!({"x": x, "y": y, "edges_moved": moved}))?;
                        }
                    }
                    shifted
                }
                _ => {
                    let t = fully_shift(&g);
                    if *trace {
                        for s in &t.steps {
                            writeln!(out, "{}", serde_json::to_string(s).expect("steps serialize"))?;
                        }
                    }
                    t.result
                }
            };
            writeln!(out, "{}", graph6::encode(&result))?;
        }
        Command::Nu { input } => {
            let g = read_graph(input.as_deref(), stdin)?;
            let mm = max_matching(&g);
            if json {
                writeln!(out, "{}", json!({"nu": mm.size, "matching": mm.edges}))?;
            } else {
                writeln!(out, "{}", mm.size)?;
            }
        }
        Command::Rainbow { family } => {
            let mut members = Vec::new();
            let mut stdin_used = false;
            for path in family {
                if path == "-" {
                    if stdin_used {
                        return Err(Error::Usage("stdin given twice".into()));
                    }
                    stdin_used = true;
                }
                members.extend(parse_graphs(&read_source(Some(path), stdin)?)?);
            }
            let f = GraphFamily::new(members)?;
            match find_rainbow(&f) {
                Some(r) if json => writeln!(out, "{}", serde_json::to_string(&r).expect("matchings serialize"))?,
                Some(r) => write!(out, "{}", r.to_lines())?,
                None if json => writeln!(out, "null")?,
                None => writeln!(out, "NONE")?,
            }
        }
        Command::Verify { check, sweep } => {
            let mode = match (sweep.exhaustive, sweep.filtered, sweep.sample) {
                (_, true, _) => Mode::FilteredExhaustive,
                (_, _, Some(count)) => Mode::Sampled { count, seed: sweep.seed.expect("clap requires --seed") },
                _ => Mode::Exhaustive,
            };
            let plan = SweepPlan::new(sweep.n, sweep.m, mode)
                .with_budget(sweep.budget)
                .with_margin(sweep.margin)
                .with_tol(cli.tol);
            let result = match check {
                Check::T11 => check_t11(&plan),
                Check::T12 => check_t12(&plan),
                Check::T13 => check_t13(&plan),
                Check::Rigidity => check_extremal_rigidity(&plan),
            }?;
            out.write_all(result.to_json_lines().as_bytes())?;
            return Ok(if result.has_counterexample() { 2 } else { 0 });
        }
    }
    Ok(0)
}
