//! Subcommand implementations.

use std::fs;
use std::fs::File;
use std::io::BufReader;
use std::path::{Path, PathBuf};
use std::time::Instant;

use mvm::io::files::{read_matching_file, write_matching_file, write_weight_file, FileFormatError};
use mvm::io::{
    generate_random_bipartite, generate_weights, graph_stats, read_matrix_market,
    write_matrix_market, GenError, MmError, WeightSpec,
};
use mvm::matching::matching_weight;
use mvm::oracle::{brute_force_mvm, verify_no_augmenting, verify_no_increasing, OracleError};
use mvm::{
    exact_mvm, greedy_half_mvm, two_thirds_mvm, validate_matching, BipartiteGraph, Matching,
    VertexWeights,
};

use crate::report::{render_csv, BenchRow};
use crate::{Algo, BenchArgs, CheckArgs, CliError, GenArgs, RunArgs, StatsArgs};

fn load_graph(path: &Path) -> Result<BipartiteGraph, CliError> {
    read_matrix_market(path).map_err(|e| match e {
        MmError::Io(io) => CliError::Io(format!("cannot read {}: {io}", path.display())),
        MmError::Parse { .. } => CliError::Io(format!("{}: {e}", path.display())),
    })
}

fn load_weights(g: &BipartiteGraph, spec_text: &str) -> Result<VertexWeights, CliError> {
    let spec: WeightSpec = spec_text.parse().map_err(CliError::Usage)?;
    generate_weights(g, &spec).map_err(|e| match e {
        GenError::InvalidRange { .. } => CliError::Usage(e.to_string()),
        GenError::InfeasibleEdgeCount { .. } => CliError::Usage(e.to_string()),
        GenError::WeightFile(FileFormatError::Io(io)) => {
            CliError::Io(format!("cannot read weight file: {io}"))
        }
        GenError::WeightFile(inner) => CliError::Io(format!("weight file: {inner}")),
    })
}

fn graph_label(path: &Path) -> String {
    path.file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| path.display().to_string())
}

fn solve(algo: Algo, g: &BipartiteGraph, w: &VertexWeights) -> Matching {
    match algo {
        Algo::Exact => exact_mvm(g, w),
        Algo::TwoThirds => two_thirds_mvm(g, w),
        Algo::Half => greedy_half_mvm(g, w),
    }
}

/// Runs the solver `reps` times and reports the median wall time of the
/// solve call only. The matching is identical across repetitions.
fn solve_timed(algo: Algo, g: &BipartiteGraph, w: &VertexWeights, reps: usize) -> (Matching, f64) {
    let reps = reps.max(1);
    let mut times = Vec::with_capacity(reps);
    let mut result = None;
    for _ in 0..reps {
        let start = Instant::now();
        let m = solve(algo, g, w);
        times.push(start.elapsed().as_secs_f64());
        result = Some(m);
    }
    times.sort_by(|a, b| a.partial_cmp(b).unwrap());
    (result.unwrap(), times[(times.len() - 1) / 2])
}

fn weight_of(m: &Matching, w: &VertexWeights) -> Result<u64, CliError> {
    matching_weight(m, w).map_err(|e| CliError::Verification(e.to_string()))
}

pub fn run(args: RunArgs) -> Result<(), CliError> {
    let g = load_graph(&args.graph)?;
    let w = load_weights(&g, &args.weights)?;
    let (m, time_s) = solve_timed(args.algo, &g, &w, args.reps);
    let weight = weight_of(&m, &w)?;
    let label = graph_label(&args.graph);

    let summary = format!(
        "graph={label} algo={} n_s={} n_t={} m={} weight={weight} cardinality={} time_s={time_s:.6}",
        args.algo.name(),
        g.n_s(),
        g.n_t(),
        g.edge_count(),
        m.cardinality(),
    );

    match &args.out {
        Some(path) => {
            let mut file = File::create(path)
                .map_err(|e| CliError::Io(format!("cannot create {}: {e}", path.display())))?;
            write_matching_file(&m, &w, &mut file)
                .map_err(|e| CliError::Io(format!("cannot write {}: {e}", path.display())))?;
            println!("{summary}");
        }
        None => {
            let mut out = Vec::new();
            write_matching_file(&m, &w, &mut out).map_err(|e| CliError::Io(e.to_string()))?;
            print!("{}", String::from_utf8_lossy(&out));
            println!("# {summary}");
        }
    }

    if args.check {
        if !validate_matching(&g, &m) {
            return Err(CliError::Verification(
                "solver output failed matching validation".into(),
            ));
        }
        println!("check: matching_valid=true");
        if args.algo == Algo::Exact {
            let no_aug = verify_no_augmenting(&g, &m, None, None);
            let no_inc = verify_no_increasing(&g, &m, &w, None);
            println!("check: no_augmenting={no_aug} no_increasing={no_inc}");
            if !(no_aug && no_inc) {
                return Err(CliError::Verification(
                    "exact solver output failed a path verifier".into(),
                ));
            }
        }
    }
    Ok(())
}

pub fn bench(args: BenchArgs) -> Result<(), CliError> {
    let mut paths: Vec<PathBuf> = args.graphs.clone();
    if let Some(list) = &args.graph_list {
        let text = fs::read_to_string(list)
            .map_err(|e| CliError::Io(format!("cannot read {}: {e}", list.display())))?;
        for line in text.lines() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            paths.push(PathBuf::from(line));
        }
    }
    if paths.is_empty() {
        return Err(CliError::Usage(
            "no graphs given; use --graph or --graphs".into(),
        ));
    }

    let mut rows: Vec<BenchRow> = Vec::new();
    for path in &paths {
        let g = load_graph(path)?;
        let w = load_weights(&g, &args.weights)?;
        let label = graph_label(path);

        let oracle_weight = if args.oracle {
            match brute_force_mvm(&g, &w) {
                Ok(r) => Some(r.best_weight),
                Err(e @ OracleError::TooManyEdges { .. }) => {
                    return Err(CliError::Usage(format!("{label}: {e}")))
                }
                Err(e) => return Err(CliError::Verification(format!("{label}: {e}"))),
            }
        } else {
            None
        };

        // The exact solver is the baseline for every ratio column; it
        // runs even when not among the requested algorithms.
        let (exact_matching, exact_time) = solve_timed(Algo::Exact, &g, &w, args.reps);
        let exact_weight = weight_of(&exact_matching, &w)?;
        let exact_card = exact_matching.cardinality();

        for &algo in &args.algos {
            let (m, time_s) = if algo == Algo::Exact {
                (exact_matching.clone(), exact_time)
            } else {
                solve_timed(algo, &g, &w, args.reps)
            };
            let weight = weight_of(&m, &w)?;
            let ratio = |num: f64, den: f64| if den == 0.0 { 1.0 } else { num / den };
            rows.push(BenchRow {
                graph: label.clone(),
                algorithm: algo.name().to_string(),
                n_s: g.n_s(),
                n_t: g.n_t(),
                m: g.edge_count(),
                weight,
                cardinality: m.cardinality(),
                time_s,
                weight_ratio: ratio(weight as f64, exact_weight as f64),
                card_ratio: ratio(m.cardinality() as f64, exact_card as f64),
                rel_perf: exact_time / time_s.max(1e-12),
                oracle_weight,
            });
        }
    }

    let csv = render_csv(&rows, args.oracle);
    match &args.out {
        Some(path) => fs::write(path, csv)
            .map_err(|e| CliError::Io(format!("cannot write {}: {e}", path.display())))?,
        None => print!("{csv}"),
    }
    Ok(())
}

pub fn gen(args: GenArgs) -> Result<(), CliError> {
    let g =
        generate_random_bipartite(args.n_s, args.n_t, args.m, args.seed).map_err(|e| match e {
            GenError::InfeasibleEdgeCount { .. } => CliError::Usage(e.to_string()),
            other => CliError::Usage(other.to_string()),
        })?;
    let mut file = File::create(&args.out)
        .map_err(|e| CliError::Io(format!("cannot create {}: {e}", args.out.display())))?;
    write_matrix_market(&g, &mut file)
        .map_err(|e| CliError::Io(format!("cannot write {}: {e}", args.out.display())))?;
    println!(
        "wrote {} n_s={} n_t={} m={}",
        args.out.display(),
        g.n_s(),
        g.n_t(),
        g.edge_count()
    );

    if let (Some(spec_text), Some(weights_out)) = (&args.weights, &args.weights_out) {
        let w = load_weights(&g, spec_text)?;
        let mut file = File::create(weights_out)
            .map_err(|e| CliError::Io(format!("cannot create {}: {e}", weights_out.display())))?;
        write_weight_file(&w, &mut file)
            .map_err(|e| CliError::Io(format!("cannot write {}: {e}", weights_out.display())))?;
        println!("wrote {}", weights_out.display());
    }
    Ok(())
}

pub fn check(args: CheckArgs) -> Result<(), CliError> {
    let g = load_graph(&args.graph)?;
    let w = load_weights(&g, &args.weights)?;
    let file = File::open(&args.matching)
        .map_err(|e| CliError::Io(format!("cannot read {}: {e}", args.matching.display())))?;
    let pairs = read_matching_file(BufReader::new(file))
        .map_err(|e| CliError::Io(format!("{}: {e}", args.matching.display())))?;

    for &(s, t) in &pairs {
        if !g.has_edge(s, t) {
            return Err(CliError::Verification(format!(
                "pair ({s}, {t}) is not an edge of the graph"
            )));
        }
    }
    let m = Matching::from_pairs(g.n_s(), g.n_t(), &pairs)
        .map_err(|e| CliError::Verification(e.to_string()))?;
    if !validate_matching(&g, &m) {
        return Err(CliError::Verification(
            "matching file is not a valid matching of the graph".into(),
        ));
    }
    let weight = weight_of(&m, &w)?;
    println!(
        "matching=valid weight={weight} cardinality={}",
        m.cardinality()
    );

    if args.full {
        let no_aug = verify_no_augmenting(&g, &m, None, None);
        let no_inc = verify_no_increasing(&g, &m, &w, None);
        println!("no_augmenting={no_aug} no_increasing={no_inc}");
        if !(no_aug && no_inc) {
            return Err(CliError::Verification(
                "matching admits an augmenting or increasing path".into(),
            ));
        }
    }

    if args.oracle {
        let result = brute_force_mvm(&g, &w).map_err(|e| match e {
            OracleError::TooManyEdges { .. } => CliError::Usage(e.to_string()),
            other => CliError::Verification(other.to_string()),
        })?;
        let optimal = weight == result.best_weight;
        println!(
            "oracle_weight={} matching_optimal={optimal}",
            result.best_weight
        );
        if !optimal {
            return Err(CliError::Verification(format!(
                "matching weight {weight} is below the optimum {}",
                result.best_weight
            )));
        }
    }
    Ok(())
}

pub fn stats(args: StatsArgs) -> Result<(), CliError> {
    let g = load_graph(&args.graph)?;
    println!("graph={} {}", graph_label(&args.graph), graph_stats(&g));
    Ok(())
}
