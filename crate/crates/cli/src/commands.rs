//! Subcommand implementations and the exit-code contract.
//!
//! | code | meaning                                              |
//! |------|------------------------------------------------------|
//! | 0    | success                                              |
//! | 1    | `verify`: the labeling is not alternating            |
//! | 2    | unreadable or malformed input, invalid parameters    |
//! | 3    | disconnected graph                                   |
//! | 4    | a produced solution failed verification              |
//! | 5    | falsification: no improving swap, or oracle witness  |

use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::time::Instant;

use altsign::bench::{run_bench, write_csv, BenchConfig, BenchFamily};
use altsign::graph::{emit_edge_list, gen_gnp, gen_named, parse_dimacs, parse_edge_list, to_dot};
use altsign::oracle::{enumerate_connected_graphs, exhaustive_check, OracleReport, DEFAULT_TREE_CAP};
use altsign::{
    solve as solve_graph, verify_alternating, Error, Family, Graph, NormalizationLog, SolveReportDocument,
};
use rayon::prelude::*;

use crate::InputFormat;

pub const EXIT_REJECTED: u8 = 1;
pub const EXIT_INPUT: u8 = 2;
pub const EXIT_DISCONNECTED: u8 = 3;
pub const EXIT_UNVERIFIED: u8 = 4;
pub const EXIT_FALSIFIED: u8 = 5;

#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl Failure {
    fn input(message: impl Into<String>) -> Failure {
        Failure { code: EXIT_INPUT, message: message.into() }
    }
}

impl From<Error> for Failure {
    fn from(err: Error) -> Failure {
        let code = match err {
            Error::Disconnected { .. } => EXIT_DISCONNECTED,
            Error::NoImprovingSwap(_) => EXIT_FALSIFIED,
            _ => EXIT_INPUT,
        };
        Failure { code, message: err.to_string() }
    }
}

type CmdResult = Result<u8, Failure>;

fn read_source(path: &str) -> Result<String, Failure> {
    let mut text = String::new();
    if path == "-" {
        io::stdin().read_to_string(&mut text).map_err(|e| Failure::input(format!("reading stdin: {e}")))?;
    } else {
        text = fs::read_to_string(path).map_err(|e| Failure::input(format!("reading {path}: {e}")))?;
    }
    Ok(text)
}

fn read_graph(path: &str, format: InputFormat) -> Result<(Graph, NormalizationLog), Failure> {
    let text = read_source(path)?;
    let parsed = match format {
        InputFormat::Edgelist => parse_edge_list(&text),
        InputFormat::Dimacs => parse_dimacs(&text),
    };
    let (g, log) = parsed.map_err(|e| Failure::input(format!("{path}: {e}")))?;
    for w in &log.warnings {
        eprintln!("warning: {path}: {w}");
    }
    Ok((g, log))
}

fn write_output(path: Option<&Path>, text: &str) -> Result<(), Failure> {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| Failure::input(format!("writing {}: {e}", p.display()))),
        None => io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| Failure::input(format!("writing stdout: {e}"))),
    }
}

pub fn solve(
    input: &str,
    root: usize,
    format: InputFormat,
    dot: Option<&Path>,
    json: Option<&Path>,
) -> CmdResult {
    let (g, log) = read_graph(input, format)?;
    g.check_vertex(root)?;
    let start = Instant::now();
    let solution = solve_graph(&g, Some(root))?;
    let elapsed = start.elapsed().as_millis() as u64;
    let verification = verify_alternating(&g, &solution.tree, &solution.signs)?;
    let ok = verification.ok;

    let doc = SolveReportDocument::new(&g, &log, &solution, verification, elapsed);
    write_output(json, &doc.to_canonical_json()?)?;
    if let Some(path) = dot {
        let text = to_dot(&g, Some(&solution.tree), Some(&solution.signs))?;
        write_output(Some(path), &text)?;
    }
    if !ok {
        return Err(Failure {
            code: EXIT_UNVERIFIED,
            message: "the constructed labeling failed verification".into(),
        });
    }
    eprintln!(
        "solved n={} m={}: {} moves, potential {} -> {}",
        g.n(),
        g.m(),
        solution.trace.moves.len(),
        solution.trace.initial_psi,
        solution.trace.final_psi
    );
    Ok(0)
}

pub fn verify(graph: &str, solution: &Path, format: InputFormat) -> CmdResult {
    let (g, _) = read_graph(graph, format)?;
    let text = fs::read_to_string(solution)
        .map_err(|e| Failure::input(format!("reading {}: {e}", solution.display())))?;
    let doc = SolveReportDocument::from_json(&text)
        .map_err(|e| Failure::input(format!("{}: {e}", solution.display())))?;
    let signs = doc.sign_labeling()?;
    let tree = doc.rooted_tree(&g)?;
    let report = verify_alternating(&g, &tree, &signs)?;

    let json = serde_json::to_value(&report)
        .and_then(|v| serde_json::to_string_pretty(&v))
        .map_err(|e| Failure::input(e.to_string()))?;
    write_output(None, &(json + "\n"))?;
    if report.ok {
        eprintln!("ok: every fundamental path alternates");
        return Ok(0);
    }
    for f in &report.failures {
        eprintln!(
            "cotree edge {}-{}: path {:?} repeats a sign at position {}",
            f.cotree_edge.u(),
            f.cotree_edge.v(),
            f.path,
            f.index
        );
    }
    eprintln!("{} failure(s)", report.failures.len());
    Ok(EXIT_REJECTED)
}

pub fn oracle(
    n: Option<usize>,
    input: Option<&str>,
    root: usize,
    format: InputFormat,
    jsonl: Option<&Path>,
) -> CmdResult {
    let graphs = match (n, input) {
        (Some(n), _) => enumerate_connected_graphs(n)?,
        (None, Some(path)) => vec![read_graph(path, format)?.0],
        (None, None) => return Err(Failure::input("one of --n or --input is required")),
    };
    for g in &graphs {
        g.check_vertex(root)?;
    }
    let reports: Vec<OracleReport> =
        graphs.par_iter().map(|g| exhaustive_check(g, root, DEFAULT_TREE_CAP)).collect::<Result<_, _>>()?;

    let mut lines = String::new();
    for r in &reports {
        lines.push_str(&serde_json::to_string(r).map_err(|e| Failure::input(e.to_string()))?);
        lines.push('\n');
    }
    write_output(jsonl, &lines)?;

    let failed: Vec<&OracleReport> = reports.iter().filter(|r| !r.passed()).collect();
    if failed.is_empty() {
        eprintln!("{} graph(s), all checks passed", reports.len());
        return Ok(0);
    }
    let dump = witness_path(jsonl);
    let text = serde_json::to_string_pretty(&failed).map_err(|e| Failure::input(e.to_string()))?;
    fs::write(&dump, text).map_err(|e| Failure::input(format!("writing {}: {e}", dump.display())))?;
    Err(Failure {
        code: EXIT_FALSIFIED,
        message: format!("{} graph(s) failed; witnesses written to {}", failed.len(), dump.display()),
    })
}

fn witness_path(jsonl: Option<&Path>) -> PathBuf {
    match jsonl {
        Some(p) => {
            let mut name = p.as_os_str().to_owned();
            name.push(".witness.json");
            PathBuf::from(name)
        }
        None => PathBuf::from("altsign-witness.json"),
    }
}

pub fn gen(family: Option<&str>, params: &[usize], gnp: Option<&[String]>, out: Option<&Path>) -> CmdResult {
    let g = match (family, gnp) {
        (_, Some([n, p, seed])) => {
            let n: usize = n.parse().map_err(|_| Failure::input(format!("bad vertex count {n:?}")))?;
            let p: f64 = p.parse().map_err(|_| Failure::input(format!("bad probability {p:?}")))?;
            let seed: u64 = seed.parse().map_err(|_| Failure::input(format!("bad seed {seed:?}")))?;
            if n == 0 || !(0.0..=1.0).contains(&p) {
                return Err(Failure::input("--gnp needs N >= 1 and 0 <= P <= 1"));
            }
            gen_gnp(n, p, seed)
        }
        (Some(name), None) => gen_named(name.parse::<Family>()?, params)?,
        _ => return Err(Failure::input("give a family name or --gnp N P SEED")),
    };
    write_output(out, &emit_edge_list(&g))?;
    Ok(0)
}

/// Parses `"10,20,30"`, `"10..100"` (inclusive) and `"10..100:10"`.
pub fn parse_sizes(spec: &str) -> Result<Vec<usize>, String> {
    let mut sizes = Vec::new();
    for part in spec.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let bad = || format!("bad size {part:?}");
        match part.split_once("..") {
            Some((lo, rest)) => {
                let (hi, step) = match rest.split_once(':') {
                    Some((hi, step)) => (hi, step.parse::<usize>().map_err(|_| bad())?),
                    None => (rest, 1),
                };
                let lo: usize = lo.parse().map_err(|_| bad())?;
                let hi: usize = hi.parse().map_err(|_| bad())?;
                if step == 0 || lo > hi {
                    return Err(bad());
                }
                sizes.extend((lo..=hi).step_by(step));
            }
            None => sizes.push(part.parse().map_err(|_| bad())?),
        }
    }
    if sizes.is_empty() {
        return Err("no sizes given".into());
    }
    Ok(sizes)
}

pub fn bench(family: &str, sizes: &str, seeds: u64, p: f64, csv: Option<&Path>) -> CmdResult {
    let family = match family {
        "gnp" => BenchFamily::Gnp { p },
        name => BenchFamily::Named(name.parse::<Family>()?),
    };
    let sizes = parse_sizes(sizes).map_err(Failure::input)?;
    let config = BenchConfig { family, sizes, seeds };
    config.validate()?;
    let outcome = run_bench(&config).map_err(|e| match e {
        Error::InvalidTree(msg) => Failure { code: EXIT_UNVERIFIED, message: msg },
        other => other.into(),
    })?;
    if outcome.resampled > 0 {
        eprintln!("resampled {} disconnected draw(s)", outcome.resampled);
    }
    let mut buf = Vec::new();
    write_csv(&outcome.rows, &mut buf)?;
    write_output(csv, &String::from_utf8_lossy(&buf))?;
    eprintln!("{} row(s), all verified", outcome.rows.len());
    Ok(0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn size_lists() {
        assert_eq!(parse_sizes("3,5").unwrap(), vec![3, 5]);
        assert_eq!(parse_sizes("10..13").unwrap(), vec![10, 11, 12, 13]);
        assert_eq!(parse_sizes("10..100:30, 7").unwrap(), vec![10, 40, 70, 100, 7]);
        assert!(parse_sizes("").is_err());
        assert!(parse_sizes("5..2").is_err());
        assert!(parse_sizes("1..4:0").is_err());
        assert!(parse_sizes("x").is_err());
    }

    #[test]
    fn error_codes() {
        assert_eq!(Failure::from(Error::Disconnected { components: 2 }).code, EXIT_DISCONNECTED);
        assert_eq!(Failure::from(Error::NoImprovingSwap(String::new())).code, EXIT_FALSIFIED);
        assert_eq!(Failure::from(Error::EmptyInput).code, EXIT_INPUT);
    }

    #[test]
    fn witness_file_name() {
        assert_eq!(
            witness_path(Some(Path::new("out/run.jsonl"))),
            PathBuf::from("out/run.jsonl.witness.json")
        );
        assert_eq!(witness_path(None), PathBuf::from("altsign-witness.json"));
    }
}
