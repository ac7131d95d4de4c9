use std::fs::File;
use std::io::{self, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::time::{Duration, Instant};

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use hcmin::baselines::Budget;
use hcmin::harness::{
    alg1_adversarial, brute_force_opt, greedy_adversarial, kunion, run_experiment, select_targets,
    write_results_csv, Algorithm, BruteForceOptions, ExperimentConfig, Gadget, KUnionInstance,
    DEFAULT_MIN_INDEGREE, DEFAULT_TARGET_COUNT,
};
use hcmin::relaxation::{solve_relaxation, BicriteriaConfig};
use hcmin::{EdgeSubset, Instance, ParsedGraph};

#[derive(Parser)]
#[command(name = "hcmin", version, about = "Minimize a vertex's harmonic centrality by cutting its incoming edges")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run one algorithm on one target and print the removed edges.
    Solve(SolveArgs),
    /// Run a batch of algorithms over targets and budgets, writing CSV.
    Bench(BenchArgs),
    /// Write a constructed instance as an edge list.
    Gadget(GadgetArgs),
    /// Exhaustive optimum for small in-degrees.
    Oracle(OracleArgs),
    /// Log the subgradient method's progress on the relaxation.
    Trace(TraceArgs),
    /// Write a random graph as an edge list.
    Generate(GenerateArgs),
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct BudgetArgs {
    /// Number of edges to remove.
    #[arg(long)]
    budget: Option<usize>,
    /// Budget as a fraction of the target's in-degree (rounded down).
    #[arg(long)]
    budget_frac: Option<f64>,
}

impl BudgetArgs {
    fn budget(&self) -> Result<Budget> {
        match (self.budget, self.budget_frac) {
            (Some(b), _) => Ok(Budget::Absolute(b)),
            (None, Some(f)) => Ok(Budget::fraction(f)?),
            (None, None) => bail!("one of --budget or --budget-frac is required"),
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum AlgoName {
    Empty,
    Random,
    Degree,
    Greedy,
    Topb,
    Bicriteria,
}

#[derive(Args)]
struct SolveArgs {
    #[arg(long)]
    graph: PathBuf,
    /// Target vertex, by its id in the file.
    #[arg(long)]
    target: u64,
    #[command(flatten)]
    budget: BudgetArgs,
    #[arg(long, value_enum)]
    algo: AlgoName,
    /// Rounding parameter of the bicriteria algorithm.
    #[arg(long, default_value_t = 0.5)]
    alpha: f64,
    /// Subgradient iterations of the bicriteria algorithm.
    #[arg(long, default_value_t = hcmin::relaxation::DEFAULT_MAX_ITERS)]
    iters: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Args)]
struct BenchArgs {
    #[arg(long)]
    graph: PathBuf,
    /// `auto`, or a comma-separated list of vertex ids.
    #[arg(long, default_value = "auto")]
    targets: String,
    #[arg(long, value_delimiter = ',', default_value = "0.25,0.5,0.75")]
    budget_fracs: Vec<f64>,
    /// Comma-separated algorithm names; `bicriteria:A` sets alpha.
    #[arg(long, value_delimiter = ',', default_value = "empty,random,degree,greedy,topb")]
    algos: Vec<String>,
    #[arg(long)]
    out: PathBuf,
    #[arg(long, default_value_t = 3600)]
    time_limit_secs: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Minimum in-degree for automatic target selection.
    #[arg(long, default_value_t = DEFAULT_MIN_INDEGREE)]
    min_indegree: usize,
    /// Number of automatically selected targets.
    #[arg(long, default_value_t = DEFAULT_TARGET_COUNT)]
    target_count: usize,
    /// Name written in the `graph` column; defaults to the file stem.
    #[arg(long)]
    name: Option<String>,
}

#[derive(Clone, Copy, ValueEnum)]
enum GadgetKind {
    Kunion,
    GreedyAdv,
    Alg1Adv,
}

#[derive(Args)]
struct GadgetArgs {
    #[arg(value_enum)]
    kind: GadgetKind,
    #[arg(long)]
    k: usize,
    /// Output path; the edge list goes to stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Number of sets for `kunion` (default `2k`).
    #[arg(long)]
    sets: Option<usize>,
    /// Ground set size for `kunion` (default `2k`).
    #[arg(long)]
    elements: Option<usize>,
    /// Seed of the random set system for `kunion`.
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Args)]
struct OracleArgs {
    #[arg(long)]
    graph: PathBuf,
    #[arg(long)]
    target: u64,
    #[arg(long)]
    budget: usize,
    /// Refuse when `#subsets · (|V| + |A|)` exceeds this.
    #[arg(long, default_value_t = hcmin::harness::oracle::DEFAULT_WORK_CAP)]
    work_cap: f64,
}

#[derive(Args)]
struct TraceArgs {
    #[arg(long)]
    graph: PathBuf,
    #[arg(long)]
    target: u64,
    #[arg(long)]
    budget: usize,
    #[arg(long, default_value_t = hcmin::relaxation::DEFAULT_MAX_ITERS)]
    iters: usize,
    #[arg(long)]
    out: PathBuf,
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphModel {
    /// Preferential attachment.
    Pa,
    /// Erdős–Rényi `G(n, p)`.
    Er,
}

#[derive(Args)]
struct GenerateArgs {
    #[arg(value_enum)]
    model: GraphModel,
    #[arg(long)]
    n: usize,
    /// Out-degree of each new vertex (`pa`).
    #[arg(long, default_value_t = 5)]
    out_degree: usize,
    /// Edge probability (`er`).
    #[arg(long, default_value_t = 0.01)]
    p: f64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    out: PathBuf,
}

fn load_graph(path: &Path) -> Result<ParsedGraph> {
    let file = File::open(path).with_context(|| format!("opening {}", path.display()))?;
    let parsed = hcmin::digraph::parse_edge_list(BufReader::new(file))
        .with_context(|| format!("reading {}", path.display()))?;
    log::info!(
        "{}: {} vertices, {} edges ({} self-loops and {} duplicates dropped)",
        path.display(),
        parsed.graph.vertex_count(),
        parsed.graph.edge_count(),
        parsed.stats.self_loops,
        parsed.stats.duplicates,
    );
    Ok(parsed)
}

fn print_subset(out: &mut impl Write, parsed: &ParsedGraph, subset: &EdgeSubset) -> io::Result<()> {
    let v = parsed.original_id(subset.target());
    for w in subset.predecessors(&parsed.graph) {
        writeln!(out, "{} {}", parsed.original_id(w), v)?;
    }
    Ok(())
}

fn solve(args: SolveArgs) -> Result<()> {
    let parsed = load_graph(&args.graph)?;
    let v = parsed.resolve(args.target)?;
    let inst = Instance::new(&parsed.graph, v)?;
    let b = args.budget.budget()?.resolve(inst.in_degree());
    let algorithm = match args.algo {
        AlgoName::Empty => Algorithm::Empty,
        AlgoName::Random => Algorithm::Random,
        AlgoName::Degree => Algorithm::Degree,
        AlgoName::Greedy => Algorithm::Greedy,
        AlgoName::Topb => Algorithm::TopB,
        AlgoName::Bicriteria => Algorithm::Bicriteria { alpha: args.alpha },
    };

    let start = Instant::now();
    let subset = match algorithm {
        Algorithm::Empty => hcmin::baselines::empty_baseline(&inst, b),
        Algorithm::Random => hcmin::baselines::random_baseline(&inst, b, args.seed),
        Algorithm::Degree => hcmin::baselines::degree_baseline(&inst, b),
        Algorithm::Greedy => hcmin::baselines::greedy::<f64>(&inst, b),
        Algorithm::TopB => hcmin::scalable::top_b_cut::<f64>(&inst, b),
        Algorithm::Bicriteria { alpha } => {
            let cfg = BicriteriaConfig::new(alpha)
                .with_max_iters(args.iters)
                .with_seed(args.seed);
            hcmin::relaxation::bicriteria_solve(&inst, b, &cfg)?.subset
        }
    };
    let elapsed = start.elapsed();
    let objective: f64 = inst.objective(&subset)?;

    let stdout = io::stdout();
    let mut out = stdout.lock();
    writeln!(out, "# target={} in_degree={} budget={b} algorithm={algorithm}", args.target, inst.in_degree())?;
    print_subset(&mut out, &parsed, &subset)?;
    writeln!(out, "# removed={} objective={objective} initial={}", subset.len(), inst.initial_value::<f64>())?;
    log::info!("{algorithm} took {:.3} ms", elapsed.as_secs_f64() * 1e3);
    Ok(())
}

fn bench(args: BenchArgs) -> Result<()> {
    let parsed = load_graph(&args.graph)?;
    let targets = if args.targets.trim() == "auto" {
        select_targets(&parsed.graph, args.min_indegree, args.target_count, args.seed)
    } else {
        args.targets
            .split(',')
            .map(|t| {
                let id: u64 = t.trim().parse().with_context(|| format!("bad target id {t:?}"))?;
                Ok(parsed.resolve(id)?)
            })
            .collect::<Result<Vec<_>>>()?
    };
    if targets.is_empty() {
        bail!("no targets with in-degree >= {}", args.min_indegree);
    }
    let algorithms = args
        .algos
        .iter()
        .map(|a| a.parse::<Algorithm>())
        .collect::<Result<Vec<_>, _>>()?;
    for &f in &args.budget_fracs {
        Budget::fraction(f)?;
    }
    let name = args.name.clone().unwrap_or_else(|| {
        args.graph
            .file_stem()
            .map_or_else(|| "graph".to_owned(), |s| s.to_string_lossy().into_owned())
    });
    let mut cfg = ExperimentConfig::new(name);
    cfg.budget_fracs = args.budget_fracs;
    cfg.algorithms = algorithms;
    cfg.seed = args.seed;
    cfg.time_limit = Some(Duration::from_secs(args.time_limit_secs));

    let records = run_experiment(&parsed.graph, Some(&parsed.original_ids), &targets, &cfg);
    let failed = records.iter().filter(|r| r.error.is_some()).count();
    let file = File::create(&args.out).with_context(|| format!("creating {}", args.out.display()))?;
    write_results_csv(&records, BufWriter::new(file))?;
    log::info!("wrote {} rows to {} ({failed} failed)", records.len(), args.out.display());
    Ok(())
}

/// A random set system over `n` elements in which every element lies in at
/// least one of the `m` sets.
fn random_cover(n: usize, m: usize, k: usize, seed: u64) -> Result<KUnionInstance> {
    if m == 0 || n == 0 {
        bail!("kunion needs at least one set and one element");
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut sets = vec![Vec::new(); m];
    for e in 0..n {
        sets[rng.gen_range(0..m)].push(e);
        for s in sets.iter_mut() {
            if rng.gen_bool(0.3) {
                s.push(e);
            }
        }
    }
    Ok(KUnionInstance::new(n, sets, k)?)
}

fn gadget(args: GadgetArgs) -> Result<()> {
    let g: Gadget = match args.kind {
        GadgetKind::GreedyAdv => greedy_adversarial(args.k)?,
        GadgetKind::Alg1Adv => alg1_adversarial(args.k)?,
        GadgetKind::Kunion => {
            let m = args.sets.unwrap_or(2 * args.k);
            let n = args.elements.unwrap_or(2 * args.k);
            kunion(&random_cover(n, m, args.k, args.seed)?)
        }
    };
    let sidecar = format!("target={} budget={}", g.target, g.budget);
    match args.out {
        Some(path) => {
            let file = File::create(&path).with_context(|| format!("creating {}", path.display()))?;
            let mut w = BufWriter::new(file);
            g.graph.write_edge_list(&mut w, None)?;
            w.flush()?;
            let mut meta = path.clone().into_os_string();
            meta.push(".meta");
            std::fs::write(&meta, format!("{sidecar}\n"))?;
            println!("{sidecar}");
        }
        None => {
            let stdout = io::stdout();
            let mut out = stdout.lock();
            writeln!(out, "# {sidecar}")?;
            g.graph.write_edge_list(&mut out, None)?;
        }
    }
    Ok(())
}

fn oracle(args: OracleArgs) -> Result<()> {
    let parsed = load_graph(&args.graph)?;
    let inst = Instance::new(&parsed.graph, parsed.resolve(args.target)?)?;
    let opts = BruteForceOptions {
        work_cap: args.work_cap,
        ..BruteForceOptions::default()
    };
    let best = brute_force_opt(&inst, args.budget, opts)?;
    let stdout = io::stdout();
    let mut out = stdout.lock();
    print_subset(&mut out, &parsed, &best.subset)?;
    writeln!(out, "# removed={} objective={} evaluated={}", best.subset.len(), best.value, best.evaluated)?;
    Ok(())
}

fn trace(args: TraceArgs) -> Result<()> {
    let parsed = load_graph(&args.graph)?;
    let inst = Instance::new(&parsed.graph, parsed.resolve(args.target)?)?;
    let cfg = BicriteriaConfig::new(0.5).with_max_iters(args.iters).with_trace(true);
    let run = solve_relaxation::<f64>(&inst, args.budget, &cfg)?;
    let file = File::create(&args.out).with_context(|| format!("creating {}", args.out.display()))?;
    run.write_csv(BufWriter::new(file))?;
    println!("best={} at t={} of {}", run.best_value, run.best_iteration, run.iterations);
    Ok(())
}

fn generate(args: GenerateArgs) -> Result<()> {
    let g = match args.model {
        GraphModel::Pa => hcmin::harness::preferential_attachment(args.n, args.out_degree, args.seed),
        GraphModel::Er => {
            if !(0.0..=1.0).contains(&args.p) {
                bail!("--p must lie in [0, 1]");
            }
            hcmin::harness::erdos_renyi(args.n, args.p, args.seed)
        }
    };
    let file = File::create(&args.out).with_context(|| format!("creating {}", args.out.display()))?;
    let mut w = BufWriter::new(file);
    g.write_edge_list(&mut w, None)?;
    w.flush()?;
    println!("{} vertices, {} edges", g.vertex_count(), g.edge_count());
    Ok(())
}

fn main() -> Result<()> {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    match Cli::parse().command {
        Command::Solve(a) => solve(a),
        Command::Bench(a) => bench(a),
        Command::Gadget(a) => gadget(a),
        Command::Oracle(a) => oracle(a),
        Command::Trace(a) => trace(a),
        Command::Generate(a) => generate(a),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn random_cover_is_valid() {
        for seed in 0..20 {
            let inst = random_cover(6, 5, 2, seed).unwrap();
            assert_eq!(inst.sets().len(), 5);
            assert_eq!(inst.union_size(&[0, 1, 2, 3, 4]), 6);
        }
        assert!(random_cover(0, 3, 1, 0).is_err());
    }

    #[test]
    fn cli_definition() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }
}
