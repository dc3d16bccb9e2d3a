//! `deduct`: command-line front end for the deduction game toolkit.
//!
//! Exit status is 0 when a result was produced, 1 when the requested object
//! does not exist (a terminal layout or orbit of an unsuccessful layout) and
//! 2 for bad input or usage.

use std::fmt::Display;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use deduct_core::dynamics::{default_max_iter, is_reversible, orbit, survey_orbits_with};
use deduct_core::engine::{simulate, terminal_layout, EngineError};
use deduct_core::families::family_answer;
use deduct_core::graph::{
    cartesian_product, generate, metrics, parse_edge_list, write_edge_list, FamilySpec, Graph,
};
use deduct_core::layout::Layout;
use deduct_core::pruning::prune;
use deduct_core::report::{
    counterexample_kind_name, BoundsJson, FamilyJson, OrbitJson, PruneJson, SolveJson, SurveyJson,
    TraceJson,
};
use deduct_core::solver::{bounds, Solver};

#[derive(Parser)]
#[command(
    name = "deduct",
    version,
    about = "Exact tools for the deduction game on graphs"
)]
struct Cli {
    /// Emit a single JSON document instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Worker threads for solve and survey; 1 runs sequentially.
    #[arg(long, global = true, env = "DEDUCT_THREADS", value_name = "N")]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the deduction number and the lexicographically least witness.
    Solve { graph: PathBuf },
    /// Play the game from a layout and report every stage.
    Simulate {
        graph: PathBuf,
        #[arg(long)]
        layout: String,
    },
    /// Run the pruning algorithm on a forest.
    Prune { graph: PathBuf },
    /// Report the lower and upper bounds without searching.
    Bounds { graph: PathBuf },
    /// Closed-form deduction number and witness for a named family.
    Family(FamilyArgs),
    /// Write the Cartesian product of two edge-list files.
    Product {
        left: PathBuf,
        right: PathBuf,
        #[arg(short = 'o', long = "output")]
        output: Option<PathBuf>,
    },
    /// Final searcher positions after a successful game.
    Terminal {
        graph: PathBuf,
        #[arg(long)]
        layout: String,
    },
    /// Iterate the terminal-layout map until it repeats.
    Orbit {
        graph: PathBuf,
        #[arg(long)]
        layout: String,
        #[arg(long)]
        max_iter: Option<usize>,
    },
    /// Orbits of every successful standard layout with k searchers.
    Survey {
        graph: PathBuf,
        /// Defaults to the deduction number.
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        max_iter: Option<usize>,
    },
    /// Write a family graph as an edge list.
    Gen {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(short = 'o', long = "output")]
        output: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyKind {
    Path,
    Cycle,
    Wheel,
    Complete,
    Star,
    Multipartite,
    Hypercube,
    RandomTree,
}

#[derive(Args)]
struct FamilyArgs {
    #[arg(long, value_enum)]
    family: FamilyKind,
    /// Number of vertices.
    #[arg(long)]
    n: Option<usize>,
    /// Part sizes of a complete multipartite graph, e.g. 2,3.
    #[arg(long, value_delimiter = ',')]
    parts: Vec<usize>,
    /// Hypercube dimension.
    #[arg(long)]
    k: Option<u32>,
    /// Random tree seed.
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

impl FamilyArgs {
    fn spec(&self) -> Result<FamilySpec, CliError> {
        let n = || {
            self.n
                .ok_or_else(|| CliError::usage("--n is required for this family"))
        };
        let spec = match self.family {
            FamilyKind::Path => FamilySpec::Path(n()?),
            FamilyKind::Cycle => FamilySpec::Cycle(n()?),
            FamilyKind::Wheel => FamilySpec::Wheel(n()?),
            FamilyKind::Complete => FamilySpec::Complete(n()?),
            FamilyKind::Star => FamilySpec::Star(n()?),
            FamilyKind::Multipartite => {
                if self.parts.is_empty() {
                    return Err(CliError::usage("--parts is required for multipartite"));
                }
                FamilySpec::Multipartite(self.parts.clone())
            }
            FamilyKind::Hypercube => FamilySpec::Hypercube(
                self.k
                    .ok_or_else(|| CliError::usage("--k is required for hypercube"))?,
            ),
            FamilyKind::RandomTree => FamilySpec::RandomTree {
                n: n()?,
                seed: self.seed,
            },
        };
        spec.validate().map_err(CliError::input)?;
        Ok(spec)
    }
}

struct CliError {
    code: u8,
    message: String,
}

impl CliError {
    fn usage(message: impl Display) -> Self {
        Self {
            code: 2,
            message: message.to_string(),
        }
    }

    fn input(message: impl Display) -> Self {
        Self::usage(message)
    }

    fn unreachable(message: impl Display) -> Self {
        Self {
            code: 1,
            message: message.to_string(),
        }
    }
}

fn engine_error(e: EngineError) -> CliError {
    match e {
        EngineError::Unsuccessful => CliError::unreachable(e),
        other => CliError::input(other),
    }
}

fn read_graph(path: &Path) -> Result<Graph, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::input(format!("cannot read {}: {e}", path.display())))?;
    parse_edge_list(&text).map_err(|e| CliError::input(format!("{}: {e}", path.display())))
}

fn parse_layout(text: &str) -> Result<Layout, CliError> {
    text.parse()
        .map_err(|e| CliError::input(format!("bad layout {text:?}: {e}")))
}

fn join<T: Display>(items: impl IntoIterator<Item = T>) -> String {
    items
        .into_iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

fn opt<T: Display>(x: Option<T>) -> String {
    x.map_or_else(|| "none".to_owned(), |x| x.to_string())
}

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("report types always serialize")
}

fn write_output(output: Option<&Path>, text: &str) -> Result<String, CliError> {
    match output {
        Some(path) => {
            fs::write(path, text)
                .map_err(|e| CliError::input(format!("cannot write {}: {e}", path.display())))?;
            Ok(String::new())
        }
        None => Ok(text.trim_end().to_owned()),
    }
}

fn run(cli: Cli) -> Result<String, CliError> {
    let solver = || Solver::new(cli.threads).map_err(CliError::input);
    let json = cli.json;
    match &cli.command {
        Command::Solve { graph } => {
            let g = read_graph(graph)?;
            let r = solver()?.solve(&g);
            Ok(if json {
                to_json(&SolveJson::from(&r))
            } else {
                format!("d = {}\nwitness = {}", r.d, r.witness)
            })
        }
        Command::Simulate { graph, layout } => {
            let g = read_graph(graph)?;
            let t = simulate(&g, &parse_layout(layout)?).map_err(engine_error)?;
            if json {
                return Ok(to_json(&TraceJson::from(&t)));
            }
            let mut lines = Vec::new();
            for s in &t.stages {
                let moves = join(s.moves.iter().map(|m| format!("{}->{}", m.from, m.to)));
                let mut line = format!(
                    "stage {}: {}",
                    s.index,
                    if moves.is_empty() { "-".into() } else { moves }
                );
                if !s.flummoxed.is_empty() {
                    line.push_str(&format!("  (flummoxed {})", join(&s.flummoxed)));
                }
                lines.push(line);
            }
            lines.push(format!("success: {}", t.success));
            lines.push(format!("terminal = {}", t.terminal));
            if !t.motionless.is_empty() {
                lines.push(format!("motionless = {}", join(&t.motionless)));
            }
            Ok(lines.join("\n"))
        }
        Command::Prune { graph } => {
            let g = read_graph(graph)?;
            let r = prune(&g).map_err(CliError::input)?;
            Ok(if json {
                to_json(&PruneJson::from(&r))
            } else {
                format!(
                    "p = {}\nlayout = {}\niterations = {}",
                    r.p, r.layout, r.iterations
                )
            })
        }
        Command::Bounds { graph } => {
            let g = read_graph(graph)?;
            let b = bounds(&g);
            if json {
                return Ok(to_json(&BoundsJson::from(&b)));
            }
            let m = metrics(&g);
            Ok([
                format!("n = {}, m = {}", g.order(), g.size()),
                format!("half_ceil = {}", b.half_ceil),
                format!("min_degree = {}", b.min_degree),
                format!("leaf_bound = {}", opt(b.leaf_bound)),
                format!("clique_bound = {}", b.clique_bound),
                format!("edge_cover_bound = {}", b.edge_cover_bound),
                format!("lower = {}", b.lower),
                format!("upper = {}", b.upper),
                format!("cut_vertices = {}", join(&m.cut_vertices)),
            ]
            .join("\n"))
        }
        Command::Family(args) => {
            let spec = args.spec()?;
            let answer = match spec {
                FamilySpec::RandomTree { .. } => {
                    // No closed form: the pruning algorithm is exact on trees.
                    let g = generate(&spec).map_err(CliError::input)?;
                    let r = prune(&g).map_err(CliError::input)?;
                    FamilyJson {
                        family: spec.to_string(),
                        n: g.order(),
                        d: r.p,
                        witness: r.layout.occupied().collect(),
                    }
                }
                _ => FamilyJson::from(&family_answer(&spec).map_err(CliError::input)?),
            };
            Ok(if json {
                to_json(&answer)
            } else {
                format!(
                    "{} (n = {})\nd = {}\nwitness = {}",
                    answer.family,
                    answer.n,
                    answer.d,
                    join(&answer.witness)
                )
            })
        }
        Command::Product {
            left,
            right,
            output,
        } => {
            let g = cartesian_product(&read_graph(left)?, &read_graph(right)?);
            write_output(output.as_deref(), &write_edge_list(&g))
        }
        Command::Terminal { graph, layout } => {
            let g = read_graph(graph)?;
            let t = terminal_layout(&g, &parse_layout(layout)?).map_err(engine_error)?;
            Ok(if json {
                to_json(&t.as_map())
            } else {
                t.to_string()
            })
        }
        Command::Orbit {
            graph,
            layout,
            max_iter,
        } => {
            let g = read_graph(graph)?;
            let start = parse_layout(layout)?;
            let cap = max_iter.unwrap_or_else(|| default_max_iter(g.order()));
            let r = orbit(&g, &start, cap).map_err(engine_error)?;
            if json {
                return Ok(to_json(&OrbitJson::from(&r)));
            }
            let rev = is_reversible(&g, &start).map_err(engine_error)?;
            Ok([
                r.sequence
                    .iter()
                    .map(|l| format!("{{{l}}}"))
                    .collect::<Vec<_>>()
                    .join(" -> "),
                format!("pre_period = {}", opt(r.pre_period)),
                format!("period = {}", opt(r.period)),
                format!("all_successful = {}", r.all_successful),
                format!("failure_index = {}", opt(r.failure_index)),
                format!("reversible = {}", rev.reversible),
            ]
            .join("\n"))
        }
        Command::Survey { graph, k, max_iter } => {
            let g = read_graph(graph)?;
            let solver = solver()?;
            let k = match k {
                Some(k) => *k,
                None => solver.solve(&g).d,
            };
            let cap = max_iter.unwrap_or_else(|| default_max_iter(g.order()));
            let s = survey_orbits_with(&g, k, cap, &solver);
            if json {
                return Ok(to_json(&SurveyJson::from(&s)));
            }
            let mut lines = vec![
                format!("n = {}, k = {}, max_iter = {}", s.n, s.k, s.max_iter),
                format!("layouts examined = {}", s.layouts_examined),
                format!("successful layouts = {}", s.successful_layout_count),
                format!("reversible = {}", s.reversible_count),
                format!("max pre-period = {}", s.max_pre_period),
                format!(
                    "periods = {}",
                    join(s.periods_observed.iter().map(|(p, c)| format!("{p}:{c}")))
                ),
                format!("counterexamples = {}", s.counterexamples.len()),
            ];
            for c in &s.counterexamples {
                lines.push(format!(
                    "  {} {}",
                    counterexample_kind_name(c.kind),
                    c.layout
                ));
            }
            Ok(lines.join("\n"))
        }
        Command::Gen { family, output } => {
            let g = generate(&family.spec()?).map_err(CliError::input)?;
            write_output(output.as_deref(), &write_edge_list(&g))
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if e.use_stderr() => {
            let first = e.to_string();
            let first = first.lines().next().unwrap_or("usage error");
            eprintln!("deduct: {}", first.trim_start_matches("error: "));
            return ExitCode::from(2);
        }
        Err(e) => {
            // --help and --version
            print!("{e}");
            return ExitCode::SUCCESS;
        }
    };
    match run(cli) {
        Ok(text) => {
            if !text.is_empty() {
                let _ = writeln!(std::io::stdout().lock(), "{text}");
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("deduct: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}
