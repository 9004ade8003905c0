use std::fs;
use std::io::{self, Write};
use std::path::{Path as FsPath, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context};
use bitpath::{
    parse_edge_list, read_hierarchy, run_bench, run_verify, write_hierarchy, BenchParams, BenchReport, EdgeList,
};
use bitpath_core::{
    build_hierarchy, enumerate_paths, format_path, hierarchical_shortest_path, hierarchical_weighted_path, meet_layers,
    shortest_paths, shortest_weighted_path, Hierarchy, Path, RationalWeight, SearchOptions, DEFAULT_BUDGET,
};
use clap::{Args, Parser, Subcommand, ValueEnum};

/// Shortest paths on directed graphs stored as bit rows.
#[derive(Parser)]
#[command(name = "bitpath", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a hierarchy from an edge list and save it.
    Build {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        out: PathBuf,
        /// Stop coarsening once a level has at most this many vertices.
        #[arg(long, default_value_t = 1)]
        min_order: usize,
        #[arg(long)]
        one_based: bool,
    },
    /// Shortest paths between two vertices.
    Query {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        from: usize,
        #[arg(long)]
        to: usize,
        /// Print up to N paths instead of one, followed by the total count.
        #[arg(long, value_name = "N")]
        all_paths: Option<usize>,
        /// Search the input graph directly instead of the hierarchy.
        #[arg(long)]
        flat: bool,
        #[arg(long)]
        one_based: bool,
        /// Candidate paths tolerated before the hierarchical search gives up
        /// and searches the input graph directly.
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: usize,
    },
    /// All walks with exactly the given number of edges.
    Enumerate {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        from: usize,
        #[arg(long)]
        to: usize,
        #[arg(long)]
        length: usize,
        #[arg(long, default_value_t = 1024)]
        max: usize,
        #[arg(long)]
        one_based: bool,
    },
    /// Time random queries on generated graphs.
    Bench {
        #[arg(long, value_enum, default_value_t = Generator::Modmul)]
        gen: Generator,
        /// Vertex counts, comma separated.
        #[arg(long, value_delimiter = ',', required = true)]
        n: Vec<usize>,
        #[arg(long, default_value_t = 3)]
        k: usize,
        #[arg(long, default_value_t = 100)]
        queries: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Check the first N queries of each size against the oracle.
        #[arg(long, value_name = "N", default_value_t = 0)]
        verify: usize,
        /// Per-query CSV on stdout; the summary moves to stderr.
        #[arg(long)]
        csv: bool,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: usize,
    },
    /// Compare every search against the oracle on random graphs.
    Verify {
        #[arg(long, value_name = "R")]
        random: usize,
        #[arg(long, value_name = "V")]
        max_v: usize,
        #[arg(long)]
        weighted: bool,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct Source {
    /// Edge-list file.
    #[arg(long)]
    graph: Option<PathBuf>,
    /// Hierarchy file written by `build`.
    #[arg(long)]
    hierarchy: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Generator {
    Modmul,
}

enum Failure {
    NoPath(String),
    Mismatch(String),
    Usage(anyhow::Error),
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Usage(e)
    }
}

type Outcome = Result<(), Failure>;

fn read_graph(path: &FsPath, one_based: bool) -> anyhow::Result<EdgeList> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse_edge_list(&text, one_based).with_context(|| format!("parsing {}", path.display()))
}

/// Loads or builds a hierarchy, returning it with the weight scale.
fn load(source: &Source, one_based: bool) -> anyhow::Result<(Hierarchy, u64)> {
    match (&source.graph, &source.hierarchy) {
        (Some(g), _) => {
            let doc = read_graph(g, one_based)?;
            Ok((build_hierarchy(doc.graph, 1)?, doc.scale))
        }
        (_, Some(h)) => {
            let text = fs::read_to_string(h).with_context(|| format!("reading {}", h.display()))?;
            read_hierarchy(&text).with_context(|| format!("parsing {}", h.display()))
        }
        _ => bail!("one of --graph or --hierarchy is required"),
    }
}

/// Converts a displayed id to an internal one, checking the range.
fn vertex(id: usize, order: usize, one_based: bool) -> anyhow::Result<usize> {
    let v = if one_based {
        id.checked_sub(1).context("vertex ids start at 1 with --one-based")?
    } else {
        id
    };
    if v >= order {
        bail!("vertex {id} is out of range for a graph with {order} vertices");
    }
    Ok(v)
}

fn print_paths(out: &mut impl Write, paths: &[Path], one_based: bool) -> io::Result<()> {
    for p in paths {
        writeln!(out, "{}", format_path(p, one_based).expect("paths are non-empty"))?;
    }
    Ok(())
}

fn no_path(from: usize, to: usize) -> Failure {
    Failure::NoPath(format!("there is no path between {from} and {to}"))
}

#[allow(clippy::too_many_arguments)]
fn query(
    source: &Source,
    from: usize,
    to: usize,
    all_paths: Option<usize>,
    flat: bool,
    one_based: bool,
    budget: usize,
) -> Outcome {
    let (h, scale) = load(source, one_based)?;
    let order = h.base().order();
    let (v1, v2) = (vertex(from, order, one_based)?, vertex(to, order, one_based)?);
    let opts = SearchOptions {
        max_paths: all_paths.unwrap_or(1),
        budget,
        ..SearchOptions::default()
    };
    let mut out = io::stdout().lock();
    if h.base().is_weighted() {
        let r = if flat {
            shortest_weighted_path(h.base(), v1, v2, opts.max_paths)
        } else {
            hierarchical_weighted_path(&h, v1, v2, &opts)
        }
        .context("weighted query")?;
        let (Some(cost), Some(hops)) = (r.cost, r.hop_length) else {
            return Err(no_path(from, to));
        };
        print_paths(&mut out, &r.paths, one_based).context("writing output")?;
        writeln!(out, "length {hops}").context("writing output")?;
        if all_paths.is_some() {
            writeln!(out, "count {}", r.path_count).context("writing output")?;
        }
        let real = RationalWeight::new(cost as i64, scale).context("cost overflow")?;
        writeln!(out, "cost {cost} scale {scale} ({real})").context("writing output")?;
        if r.fallback {
            eprintln!("note: answered by the flat search after the candidate budget ran out");
        }
    } else {
        let r = if flat {
            shortest_paths(h.base(), v1, v2, opts.max_paths)
        } else {
            hierarchical_shortest_path(&h, v1, v2, &opts)
        }
        .context("query")?;
        let Some(hops) = r.hop_length else {
            return Err(no_path(from, to));
        };
        print_paths(&mut out, &r.paths, one_based).context("writing output")?;
        writeln!(out, "length {hops}").context("writing output")?;
        if all_paths.is_some() {
            writeln!(out, "count {}", r.path_count).context("writing output")?;
        }
        if r.fallback {
            eprintln!("note: answered by the flat search after the candidate budget ran out");
        }
    }
    Ok(())
}

fn enumerate(source: &Source, from: usize, to: usize, length: usize, max: usize, one_based: bool) -> Outcome {
    let (h, _) = load(source, one_based)?;
    let g = h.base();
    let (v1, v2) = (vertex(from, g.order(), one_based)?, vertex(to, g.order(), one_based)?);
    let meet = meet_layers(g, v1, v2, length).context("layer meet")?;
    if !meet.is_feasible() {
        return Err(Failure::NoPath(format!(
            "there is no path of length {length} between {from} and {to}"
        )));
    }
    let paths = enumerate_paths(g, &meet, max).context("enumeration")?;
    print_paths(&mut io::stdout().lock(), &paths, one_based).context("writing output")?;
    Ok(())
}

fn build(graph: &FsPath, out: &FsPath, min_order: usize, one_based: bool) -> Outcome {
    let doc = read_graph(graph, one_based)?;
    let h = build_hierarchy(doc.graph, min_order).context("building hierarchy")?;
    fs::write(out, write_hierarchy(&h, doc.scale)).with_context(|| format!("writing {}", out.display()))?;
    let orders: Vec<String> = h.levels().iter().map(|l| l.graph().order().to_string()).collect();
    eprintln!("{} levels, orders {}", h.depth(), orders.join(" "));
    Ok(())
}

fn bench(sizes: &[usize], params: BenchParams, csv: bool) -> Outcome {
    if sizes.iter().any(|&n| n < 2) || params.k == 0 {
        return Err(Failure::Usage(anyhow::anyhow!(
            "bench needs every --n >= 2 and --k >= 1"
        )));
    }
    let mut out = io::stdout().lock();
    if csv {
        writeln!(out, "{}", BenchReport::CSV_HEADER).context("writing output")?;
    }
    let mut mismatches = 0;
    for &n in sizes {
        let report = run_bench(&BenchParams { n, ..params.clone() });
        mismatches += report.mismatches();
        if csv {
            write!(out, "{}", report.csv_rows()).context("writing output")?;
            eprint!("{}", report.summary());
        } else {
            write!(out, "{}", report.summary()).context("writing output")?;
        }
    }
    if mismatches > 0 {
        return Err(Failure::Mismatch(format!(
            "{mismatches} queries disagree with the oracle"
        )));
    }
    Ok(())
}

fn verify(random: usize, max_v: usize, weighted: bool, seed: u64) -> Outcome {
    let reports = run_verify(random, max_v, weighted, seed);
    let bad: Vec<_> = reports.iter().filter(|r| !r.matches()).collect();
    let mut out = io::stdout().lock();
    for r in &bad {
        writeln!(out, "{r}").context("writing output")?;
    }
    writeln!(out, "{} checks, {} mismatches", reports.len(), bad.len()).context("writing output")?;
    if !bad.is_empty() {
        return Err(Failure::Mismatch(format!(
            "{} checks disagree with the oracle",
            bad.len()
        )));
    }
    Ok(())
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Build {
            graph,
            out,
            min_order,
            one_based,
        } => build(&graph, &out, min_order, one_based),
        Command::Query {
            source,
            from,
            to,
            all_paths,
            flat,
            one_based,
            budget,
        } => query(&source, from, to, all_paths, flat, one_based, budget),
        Command::Enumerate {
            source,
            from,
            to,
            length,
            max,
            one_based,
        } => enumerate(&source, from, to, length, max, one_based),
        Command::Bench {
            gen: Generator::Modmul,
            n,
            k,
            queries,
            seed,
            verify,
            csv,
            budget,
        } => {
            let mut params = BenchParams::new(2, k, queries);
            params.seed = seed;
            params.verify = verify;
            params.options.budget = budget;
            bench(&n, params, csv)
        }
        Command::Verify {
            random,
            max_v,
            weighted,
            seed,
        } => verify(random, max_v, weighted, seed),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::NoPath(msg)) => {
            eprintln!("{msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
        Err(Failure::Mismatch(msg)) => {
            eprintln!("{msg}");
            ExitCode::from(3)
        }
    }
}
