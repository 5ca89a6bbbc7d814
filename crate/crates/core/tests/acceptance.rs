//! Acceptance suite. Each criterion prints one PASS/FAIL line; the binary
//! exits non-zero if any criterion fails.
//!
//! Run with `cargo test -p altsign --test acceptance`.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use altsign::bench::{run_bench, BenchConfig, BenchFamily};
use altsign::graph::{gen_gnp, gen_named, is_connected, Family, Graph};
use altsign::oracle::{
    count_spanning_trees, enumerate_connected_graphs, exhaustive_check, spanning_tree_edge_sets,
    DEFAULT_TREE_CAP,
};
use altsign::report::SolveReportDocument;
use altsign::{
    delta_potential, potential, solve, verify_alternating, Edge, NormalizationLog, RootedTree, Sign, SwapMove,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn connected_gnp(n: usize, p: f64, seed: &mut u64) -> Graph {
    loop {
        let g = gen_gnp(n, p, *seed);
        *seed += 1;
        if is_connected(&g) {
            return g;
        }
    }
}

fn corpus() -> Result<Vec<Graph>, String> {
    let mut all = Vec::new();
    let mut counts = Vec::new();
    for n in 2..=5 {
        let graphs = enumerate_connected_graphs(n).map_err(|e| e.to_string())?;
        counts.push(graphs.len());
        all.extend(graphs);
    }
    check(counts == [1, 4, 38, 728], || format!("corpus sizes {counts:?}, expected [1, 4, 38, 728]"))?;
    Ok(all)
}

// 1. Every connected graph with n <= 5, every root: solve verifies.
fn exhaustive_alternation() -> Outcome {
    let start = Instant::now();
    let graphs = corpus()?;
    let mut instances = 0;
    for g in &graphs {
        for root in 0..g.n() {
            let sol = solve(g, Some(root)).map_err(|e| format!("{} root {root}: {e}", g.id()))?;
            let report = verify_alternating(g, &sol.tree, &sol.signs).map_err(|e| e.to_string())?;
            check(report.ok, || format!("{} root {root}: {:?}", g.id(), report.failures))?;
            instances += 1;
        }
    }
    let elapsed = start.elapsed();
    check(elapsed < Duration::from_secs(60), || format!("took {elapsed:?} (limit 60s)"))?;
    Ok(format!("{} graphs, {instances} (graph, root) instances verified in {elapsed:.2?}", graphs.len()))
}

// 2. Same corpus, root 0: the Ψ-maximal tree and every swap-local maximum
// have only monotone fundamental paths.
fn exhaustive_monotone() -> Outcome {
    let start = Instant::now();
    let graphs = corpus()?;
    let mut local_maxima = 0;
    for g in &graphs {
        let report = exhaustive_check(g, 0, DEFAULT_TREE_CAP).map_err(|e| e.to_string())?;
        check(report.global_max_conforms && report.all_local_maxima_conform, || {
            format!("witness: {}", serde_json::to_string(&report).unwrap_or_else(|e| e.to_string()))
        })?;
        local_maxima += report.local_max_count;
    }
    let elapsed = start.elapsed();
    check(elapsed < Duration::from_secs(600), || format!("took {elapsed:?} (limit 600s)"))?;
    Ok(format!("{} graphs, {local_maxima} swap-local maxima, all conform, {elapsed:.2?}", graphs.len()))
}

// 3. 200 connected G(8, 0.4): enumerated tree count equals the determinant.
fn kirchhoff_agreement() -> Outcome {
    let mut seed = 0;
    let mut total: u128 = 0;
    for _ in 0..200 {
        let g = connected_gnp(8, 0.4, &mut seed);
        let listed = spanning_tree_edge_sets(&g, DEFAULT_TREE_CAP).map_err(|e| e.to_string())?.len() as u128;
        let det = count_spanning_trees(&g).map_err(|e| e.to_string())?;
        check(listed == det, || format!("{}: enumerated {listed}, determinant {det}", g.id()))?;
        total += listed;
    }
    Ok(format!("200 instances, {total} trees in total, exact agreement"))
}

// 4. 1,000 connected G(n, p), n in {20, 50}: strictly increasing Ψ, move
// count within (n-1)^2 - initial Ψ, no falsification errors.
fn strict_ascent() -> Outcome {
    let mut seed = 1000;
    let mut max_moves = 0;
    for (n, p) in [(20, 0.3), (50, 0.15)] {
        for _ in 0..500 {
            let g = connected_gnp(n, p, &mut seed);
            let sol = solve(&g, None).map_err(|e| format!("{}: {e}", g.id()))?;
            let trace = &sol.trace;
            let mut psi = trace.initial_psi as i64;
            for mv in &trace.moves {
                check(mv.delta_psi >= 1, || format!("{}: non-increasing move {mv:?}", g.id()))?;
                psi += mv.delta_psi;
            }
            check(psi == trace.final_psi as i64, || format!("{}: trace does not add up", g.id()))?;
            check(trace.final_psi == potential(&sol.tree), || {
                format!("{}: final potential mismatch", g.id())
            })?;
            let bound = ((n - 1) * (n - 1)) as u64 - trace.initial_psi;
            check(trace.moves.len() as u64 <= bound, || {
                format!("{}: {} moves exceeds bound {bound}", g.id(), trace.moves.len())
            })?;
            max_moves = max_moves.max(trace.moves.len());
        }
    }
    Ok(format!("1000 instances, at most {max_moves} moves, no falsification"))
}

// 5. Paths P_n, n = 2..50: no moves and alternating signs along the path.
fn hamilton_paths() -> Outcome {
    for n in 2..=50 {
        let g = gen_named(Family::Path, &[n]).map_err(|e| e.to_string())?;
        let sol = solve(&g, None).map_err(|e| e.to_string())?;
        check(sol.trace.moves.is_empty(), || format!("P{n}: {} moves", sol.trace.moves.len()))?;
        let signs: Vec<Sign> = g.edges().iter().map(|&e| sol.signs.get(e).unwrap()).collect();
        check(signs.windows(2).all(|w| w[0] != w[1]), || format!("P{n}: signs {signs:?}"))?;
    }
    Ok("P2..P50: 0 moves, alternating signs".into())
}

// 6. 10,000 random valid moves: incremental ΔΨ equals full recomputation.
fn delta_consistency() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut samples = 0;
    let mut nonzero = 0;
    let mut graph_seed = 60_000;
    while samples < 10_000 {
        let n = rng.gen_range(4..=30);
        let p = rng.gen_range(0.15..0.6);
        let g = connected_gnp(n, p, &mut graph_seed);
        if g.m() + 1 == g.n() {
            continue;
        }
        let root = rng.gen_range(0..n);
        let mut tree = altsign::bfs_tree(&g, root).map_err(|e| e.to_string())?;
        for _ in 0..50 {
            let cotree: Vec<Edge> = g.edges().iter().copied().filter(|&e| !tree.contains_edge(e)).collect();
            let add = cotree[rng.gen_range(0..cotree.len())];
            let path = tree.path(add.u(), add.v());
            let i = rng.gen_range(0..path.len() - 1);
            let remove = Edge::new(path[i], path[i + 1]).unwrap();

            let delta = delta_potential(&g, &tree, add, remove).map_err(|e| e.to_string())?;
            let rebuilt_edges = tree.tree_edges().iter().copied().filter(|&e| e != remove).chain([add]);
            let rebuilt = RootedTree::from_edges(&g, root, rebuilt_edges).map_err(|e| e.to_string())?;
            let full = potential(&rebuilt) as i64 - potential(&tree) as i64;
            check(delta == full, || {
                format!("{}: add {add} remove {remove}: incremental {delta}, full {full}", g.id())
            })?;
            samples += 1;
            nonzero += (delta != 0) as usize;
            // Walk through tree space so later samples see varied shapes.
            if rng.gen_bool(0.5) {
                tree.swap_in_place(&g, &SwapMove { added: add, removed: remove, delta_psi: delta })
                    .map_err(|e| e.to_string())?;
                check(tree == rebuilt, || format!("{}: in-place swap diverged", g.id()))?;
            }
            if samples == 10_000 {
                break;
            }
        }
    }
    Ok(format!("{samples} moves sampled ({nonzero} with nonzero ΔΨ), all exact"))
}

// 7. Solving the same input twice yields byte-identical canonical JSON.
fn determinism() -> Outcome {
    let mut seed = 7;
    let graphs = vec![
        gen_named(Family::Complete, &[3]).unwrap(),
        gen_named(Family::Grid, &[6, 7]).unwrap(),
        gen_named(Family::CompleteBipartite, &[5, 6]).unwrap(),
        connected_gnp(60, 0.1, &mut seed),
    ];
    for g in &graphs {
        let render = || -> Result<String, String> {
            let sol = solve(g, Some(g.n() / 2)).map_err(|e| e.to_string())?;
            let ver = verify_alternating(g, &sol.tree, &sol.signs).map_err(|e| e.to_string())?;
            let start = Instant::now();
            let doc = SolveReportDocument::new(
                g,
                &NormalizationLog::default(),
                &sol,
                ver,
                start.elapsed().as_millis() as u64,
            );
            doc.to_canonical_json_untimed().map_err(|e| e.to_string())
        };
        let (a, b) = (render()?, render()?);
        check(a == b, || format!("{}: reports differ", g.id()))?;
    }
    Ok(format!("{} inputs, byte-identical reports", graphs.len()))
}

// 8. G(500, 0.05) solves and verifies in under 10 s; bench on K_n up to
// n = 200 finishes in under 60 s.
fn performance() -> Outcome {
    let mut seed = 500;
    let g = connected_gnp(500, 0.05, &mut seed);
    let start = Instant::now();
    let sol = solve(&g, None).map_err(|e| e.to_string())?;
    let report = verify_alternating(&g, &sol.tree, &sol.signs).map_err(|e| e.to_string())?;
    let solve_time = start.elapsed();
    check(report.ok, || "G(500, 0.05) solution failed verification".into())?;
    check(solve_time < Duration::from_secs(10), || format!("G(500, 0.05) took {solve_time:?}"))?;

    let config = BenchConfig {
        family: BenchFamily::Named(Family::Complete),
        sizes: (1..=8).map(|k| 25 * k).collect(),
        seeds: 1,
    };
    let start = Instant::now();
    let outcome = run_bench(&config).map_err(|e| e.to_string())?;
    let bench_time = start.elapsed();
    check(outcome.rows.len() == 8, || "missing bench rows".into())?;
    check(bench_time < Duration::from_secs(60), || format!("bench took {bench_time:?}"))?;
    Ok(format!(
        "G(500, 0.05) m={} in {solve_time:.2?} ({} moves); bench K25..K200 in {bench_time:.2?}",
        g.m(),
        sol.trace.moves.len()
    ))
}

// 9. Flipping one sign on any tree edge that shares a fundamental path of
// length >= 2 with another edge makes verification fail.
fn mutation_sensitivity() -> Outcome {
    let graphs = corpus()?;
    let mut mutants = 0;
    for g in &graphs {
        for root in 0..g.n() {
            let sol = solve(g, Some(root)).map_err(|e| e.to_string())?;
            let mut targets: Vec<Edge> = Vec::new();
            for &c in g.edges().iter().filter(|&&e| !sol.tree.contains_edge(e)) {
                let path = sol.tree.path(c.u(), c.v());
                if path.len() >= 3 {
                    targets.extend(path.windows(2).map(|w| Edge::new(w[0], w[1]).unwrap()));
                }
            }
            targets.sort();
            targets.dedup();
            for e in targets {
                let mut signs = sol.signs.clone();
                signs.flip(e);
                let report = verify_alternating(g, &sol.tree, &signs).map_err(|e| e.to_string())?;
                check(!report.ok, || format!("{} root {root}: flipping {e} went undetected", g.id()))?;
                mutants += 1;
            }
        }
    }
    check(mutants > 0, || "no mutants generated".into())?;
    Ok(format!("{mutants} single-sign mutants, all rejected"))
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("1 exhaustive alternating-sign check (n <= 5, all roots)", exhaustive_alternation),
        ("2 exhaustive monotone-tree check (global and local maxima)", exhaustive_monotone),
        ("3 enumerator/determinant agreement on G(8, 0.4)", kirchhoff_agreement),
        ("4 strict-ascent termination on G(20|50, p)", strict_ascent),
        ("5 Hamilton path special case", hamilton_paths),
        ("6 incremental potential change matches recomputation", delta_consistency),
        ("7 deterministic canonical JSON", determinism),
        ("8 desk-scale performance", performance),
        ("9 mutation sensitivity of the verifier", mutation_sensitivity),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        match run() {
            Ok(detail) => println!("PASS  criterion {name}: {detail}"),
            Err(detail) => {
                failed += 1;
                println!("FAIL  criterion {name}: {detail}");
            }
        }
    }
    println!("{} of 9 criteria passed", 9 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
