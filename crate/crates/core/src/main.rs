use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use graphbench::bench::{BenchConfig, DEFAULT_NUM_ROOTS, DEFAULT_TIMED_REPS};
use graphbench::bfs::{bfs_parallel, bfs_sequential};
use graphbench::edge_io::{read_edge_file, write_edge_file, DEFAULT_EDGE_FILE};
use graphbench::error::Error;
use graphbench::kronecker::{degree_histogram, generate, GenParams, GRAPH500_INITIATOR};
use graphbench::result_io::{read_result, write_result, SavedResult};
use graphbench::sssp::{sssp_dijkstra, sssp_dijkstra_linear};
use graphbench::validate::{validate_bfs, validate_sssp};
use graphbench::{Graph, Repr};

const EXIT_FILE: u8 = 3;
const EXIT_VALIDATION: u8 = 4;
const EXIT_DOMAIN: u8 = 5;
const EXIT_INTERNAL: u8 = 6;

#[derive(Parser)]
#[command(
    name = "graphbench",
    about = "Graph500-style benchmark: Kronecker generation, graph construction, BFS, SSSP",
    after_help = "Exit status: 0 success; 2 usage error; 3 file/parse error; \
                  4 validation failure; 5 bad parameter (bounds, domain, capacity); \
                  6 internal/benchmark integrity error."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct GraphArgs {
    /// Edge file to load.
    #[arg(long = "in", value_name = "PATH", default_value = DEFAULT_EDGE_FILE)]
    input: PathBuf,
    /// Graph representation.
    #[arg(long, default_value = "adjmap")]
    repr: Repr,
    /// Worker count for parallel phases.
    #[arg(long, env = "GRAPHBENCH_WORKERS", default_value_t = 1)]
    workers: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a Kronecker edge list and write it to a file.
    Generate {
        #[arg(long)]
        scale: u32,
        #[arg(long)]
        edgefactor: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Initiator probabilities a,b,c,d (must sum to 1).
        #[arg(long, value_delimiter = ',', num_args = 4)]
        initiator: Option<Vec<f64>>,
        #[arg(long, default_value = DEFAULT_EDGE_FILE)]
        out: PathBuf,
    },
    /// Kernel 1: construct the graph and report build time and stats.
    Build {
        #[command(flatten)]
        graph: GraphArgs,
    },
    /// Kernel 2: BFS from a root vertex.
    Bfs {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long, allow_hyphen_values = true)]
        root: i64,
        /// Use the level-synchronized parallel kernel.
        #[arg(long)]
        parallel: bool,
        /// Save the level/parent arrays for later `validate`.
        #[arg(long)]
        save: Option<PathBuf>,
    },
    /// Kernel 3: single-source shortest paths (Dijkstra).
    Sssp {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long, allow_hyphen_values = true)]
        source: i64,
        /// Use linear min-extraction instead of the binary heap.
        #[arg(long)]
        linear: bool,
        /// Save the dist/prev arrays for later `validate`.
        #[arg(long)]
        save: Option<PathBuf>,
    },
    /// Time the kernels over a worker-count sweep and write a CSV report.
    Bench {
        /// Edge file to load.
        #[arg(long = "in", value_name = "PATH", default_value = DEFAULT_EDGE_FILE)]
        input: PathBuf,
        /// Graph representation.
        #[arg(long, default_value = "adjmap")]
        repr: Repr,
        /// Comma-separated worker counts to sweep.
        #[arg(long = "workers", env = "GRAPHBENCH_WORKERS", value_delimiter = ',', default_value = "1,2,4,8")]
        worker_list: Vec<usize>,
        #[arg(long, default_value_t = DEFAULT_NUM_ROOTS)]
        roots: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = DEFAULT_TIMED_REPS)]
        reps: usize,
        #[arg(long)]
        skip_sssp: bool,
        #[arg(long, default_value = "report.csv")]
        out: PathBuf,
    },
    /// Re-validate a saved BFS or SSSP result against an edge file.
    Validate {
        /// Edge file the result was computed from.
        #[arg(long = "in", value_name = "PATH", default_value = DEFAULT_EDGE_FILE)]
        input: PathBuf,
        /// Saved result file (from `bfs --save` or `sssp --save`).
        #[arg(long)]
        result: PathBuf,
    },
}

fn checked_vertex(value: i64, what: &str) -> Result<usize, Error> {
    usize::try_from(value).map_err(|_| Error::Domain(format!("{what} {value} is negative")))
}

fn run(cli: Cli) -> Result<(), Error> {
    match cli.command {
        Command::Generate {
            scale,
            edgefactor,
            seed,
            initiator,
            out,
        } => {
            let initiator = match initiator {
                Some(v) => [v[0], v[1], v[2], v[3]],
                None => GRAPH500_INITIATOR,
            };
            let params = GenParams::with_initiator(scale, edgefactor, seed, initiator)?;
            let edges = generate(&params)?;
            write_edge_file(&out, &edges)?;
            let hist = degree_histogram(&edges);
            let max_degree = hist.keys().last().copied().unwrap_or(0);
            println!(
                "wrote {} edges over {} vertices to {} (max degree {max_degree})",
                edges.len(),
                edges.num_vertices,
                out.display()
            );
        }
        Command::Build { graph } => {
            let edges = read_edge_file(&graph.input)?;
            let start = std::time::Instant::now();
            let g = Graph::build(&edges, graph.repr, graph.workers)?;
            let elapsed = start.elapsed().as_secs_f64();
            println!(
                "built {:?} graph: {} vertices, {} input edges, {} adjacency entries in {elapsed:.6}s",
                graph.repr,
                g.num_vertices(),
                g.num_edges_input(),
                g.num_adjacency_entries()
            );
        }
        Command::Bfs {
            graph,
            root,
            parallel,
            save,
        } => {
            let edges = read_edge_file(&graph.input)?;
            let root = checked_vertex(root, "root")?;
            let g = Graph::build(&edges, graph.repr, graph.workers)?;
            let start = std::time::Instant::now();
            let result = if parallel {
                bfs_parallel(&g, root, graph.workers)?
            } else {
                bfs_sequential(&g, root)?
            };
            let elapsed = start.elapsed().as_secs_f64();
            let max_level = result.level.iter().copied().max().unwrap_or(0);
            println!(
                "bfs from {root}: reached {}/{} vertices, max level {max_level}, {elapsed:.6}s",
                result.num_reached(),
                g.num_vertices()
            );
            let report = validate_bfs(&edges, &result)?;
            print!("{}", report.render_text());
            if let Some(path) = save {
                write_result(&path, &SavedResult::Bfs(result))?;
                println!("saved result to {}", path.display());
            }
            if !report.passed() {
                return Err(Error::Validation("BFS result failed validation".into()));
            }
        }
        Command::Sssp {
            graph,
            source,
            linear,
            save,
        } => {
            let edges = read_edge_file(&graph.input)?;
            let source = checked_vertex(source, "source")?;
            let g = Graph::build(&edges, graph.repr, graph.workers)?;
            let start = std::time::Instant::now();
            let result = if linear {
                sssp_dijkstra_linear(&g, source)?
            } else {
                sssp_dijkstra(&g, source)?
            };
            let elapsed = start.elapsed().as_secs_f64();
            let reached = result.dist.iter().filter(|d| d.is_finite()).count();
            let max_dist = result
                .dist
                .iter()
                .filter(|d| d.is_finite())
                .fold(0.0f64, |a, &b| a.max(b));
            println!(
                "sssp from {source}: reached {reached}/{} vertices, max dist {max_dist:.6}, {elapsed:.6}s",
                g.num_vertices()
            );
            let report = validate_sssp(&edges, &result)?;
            print!("{}", report.render_text());
            if let Some(path) = save {
                write_result(&path, &SavedResult::Sssp(result))?;
                println!("saved result to {}", path.display());
            }
            if !report.passed() {
                return Err(Error::Validation("SSSP result failed validation".into()));
            }
        }
        Command::Bench {
            input,
            repr,
            worker_list,
            roots,
            seed,
            reps,
            skip_sssp,
            out,
        } => {
            let edges = read_edge_file(&input)?;
            let mut config = BenchConfig::new(repr, worker_list);
            config.num_roots = roots;
            config.root_seed = seed;
            config.timed_reps = reps;
            config.skip_sssp = skip_sssp;
            let report = graphbench::bench::run_bench(&edges, &config)?;
            std::fs::write(&out, report.to_csv()).map_err(|e| Error::File {
                path: out.clone(),
                source: e,
            })?;
            print!("{}", report.render_summary());
            println!("report written to {}", out.display());
        }
        Command::Validate { input, result } => {
            let edges = read_edge_file(&input)?;
            let report = match read_result(&result)? {
                SavedResult::Bfs(r) => validate_bfs(&edges, &r)?,
                SavedResult::Sssp(r) => validate_sssp(&edges, &r)?,
            };
            print!("{}", report.render_text());
            if !report.passed() {
                return Err(Error::Validation("saved result failed validation".into()));
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err}");
            let code = match err {
                Error::File { .. } | Error::Parse { .. } => EXIT_FILE,
                Error::Validation(_) => EXIT_VALIDATION,
                Error::Bounds { .. }
                | Error::Domain(_)
                | Error::Capacity { .. }
                | Error::InvalidParams(_) => EXIT_DOMAIN,
                Error::Consistency(_) | Error::BenchIntegrity(_) => EXIT_INTERNAL,
            };
            ExitCode::from(code)
        }
    }
}
