//! Solver benchmarks over graph families, emitted as CSV.

use std::io::Write;
use std::time::Instant;

use serde::Serialize;

use crate::altsign::{solve, verify_alternating};
use crate::error::{Error, Result};
use crate::graph::{gen_gnp, gen_named, is_connected, Family, Graph};

/// Spacing between successive reseeds of a disconnected G(n, p) draw.
const RESEED_STRIDE: u64 = 0x9E37_79B9_7F4A_7C15;
const MAX_RESEEDS: u64 = 1000;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum BenchFamily {
    /// Sized by one parameter: `path n`, `cycle n`, `complete n`,
    /// `complete_bipartite ⌊n/2⌋ ⌈n/2⌉`, `grid n n`, `hypercube n`.
    Named(Family),
    Gnp {
        p: f64,
    },
}

impl BenchFamily {
    pub fn name(&self) -> String {
        match self {
            BenchFamily::Named(f) => f.name().to_string(),
            BenchFamily::Gnp { .. } => "gnp".to_string(),
        }
    }

    fn graph(&self, size: usize, seed: u64) -> Result<Graph> {
        match *self {
            BenchFamily::Named(f) => {
                let params = match f {
                    Family::CompleteBipartite => vec![size / 2, size - size / 2],
                    Family::Grid => vec![size, size],
                    _ => vec![size],
                };
                gen_named(f, &params)
            }
            BenchFamily::Gnp { p } => Ok(gen_gnp(size, p, seed)),
        }
    }
}

#[derive(Debug, Clone)]
pub struct BenchConfig {
    pub family: BenchFamily,
    pub sizes: Vec<usize>,
    /// Number of seeds per size. Deterministic families run once with seed 0.
    pub seeds: u64,
}

impl BenchConfig {
    pub fn validate(&self) -> Result<()> {
        if self.sizes.is_empty() {
            return Err(Error::InvalidParams("no sizes given".into()));
        }
        if self.seeds == 0 {
            return Err(Error::InvalidParams("seeds must be positive".into()));
        }
        if let BenchFamily::Gnp { p } = self.family {
            if !(0.0..=1.0).contains(&p) {
                return Err(Error::InvalidParams(format!("p = {p} outside [0, 1]")));
            }
            if self.sizes.contains(&0) {
                return Err(Error::InvalidParams("gnp sizes must be positive".into()));
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BenchRow {
    pub family: String,
    pub n: usize,
    pub m: usize,
    pub seed: u64,
    pub moves: usize,
    pub initial_psi: u64,
    pub final_psi: u64,
    pub ms: u64,
}

#[derive(Debug, Clone, Default)]
pub struct BenchOutcome {
    pub rows: Vec<BenchRow>,
    /// Disconnected G(n, p) draws that were replaced by a reseeded draw.
    pub resampled: u64,
}

/// Solves every configured instance and checks each solution with the
/// verifier. Any verification failure is an error.
pub fn run_bench(config: &BenchConfig) -> Result<BenchOutcome> {
    config.validate()?;
    let mut out = BenchOutcome::default();
    let seeds = match config.family {
        BenchFamily::Named(_) => 1,
        BenchFamily::Gnp { .. } => config.seeds,
    };
    for &size in &config.sizes {
        for seed in 0..seeds {
            let (g, used_seed, retries) = connected_instance(&config.family, size, seed)?;
            out.resampled += retries;
            let start = Instant::now();
            let sol = solve(&g, None)?;
            let ms = start.elapsed().as_millis() as u64;
            let report = verify_alternating(&g, &sol.tree, &sol.signs)?;
            if !report.ok {
                return Err(Error::InvalidTree(format!(
                    "solution for {} n={size} seed={used_seed} failed verification",
                    config.family.name()
                )));
            }
            out.rows.push(BenchRow {
                family: config.family.name(),
                n: g.n(),
                m: g.m(),
                seed: used_seed,
                moves: sol.trace.moves.len(),
                initial_psi: sol.trace.initial_psi,
                final_psi: sol.trace.final_psi,
                ms,
            });
        }
    }
    Ok(out)
}

/// Draws instances until one is connected. Returns the graph, the seed that
/// produced it and the number of rejected draws.
fn connected_instance(family: &BenchFamily, size: usize, seed: u64) -> Result<(Graph, u64, u64)> {
    for attempt in 0..MAX_RESEEDS {
        let s = seed.wrapping_add(attempt.wrapping_mul(RESEED_STRIDE));
        let g = family.graph(size, s)?;
        if is_connected(&g) {
            return Ok((g, s, attempt));
        }
        if let BenchFamily::Named(_) = family {
            break;
        }
    }
    Err(Error::InvalidParams(format!(
        "no connected {} instance of size {size} for seed {seed}",
        family.name()
    )))
}

/// Writes rows with the header `family,n,m,seed,moves,initial_psi,final_psi,ms`.
pub fn write_csv<W: Write>(rows: &[BenchRow], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    if rows.is_empty() {
        w.write_record(["family", "n", "m", "seed", "moves", "initial_psi", "final_psi", "ms"])?;
    }
    for row in rows {
        w.serialize(row)?;
    }
    w.flush()?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_family_needs_no_moves() {
        let config = BenchConfig {
            family: BenchFamily::Named(Family::Path),
            sizes: (1..=10).map(|k| 10 * k).collect(),
            seeds: 3,
        };
        let out = run_bench(&config).unwrap();
        assert_eq!(out.rows.len(), 10);
        assert!(out.rows.iter().all(|r| r.moves == 0 && r.seed == 0));
    }

    #[test]
    fn csv_header_and_rows() {
        let config = BenchConfig { family: BenchFamily::Named(Family::Complete), sizes: vec![3], seeds: 1 };
        let out = run_bench(&config).unwrap();
        let mut buf = Vec::new();
        write_csv(&out.rows, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let mut lines = text.lines();
        assert_eq!(lines.next(), Some("family,n,m,seed,moves,initial_psi,final_psi,ms"));
        assert!(lines.next().unwrap().starts_with("complete,3,3,0,1,2,3,"));

        let mut buf = Vec::new();
        write_csv(&[], &mut buf).unwrap();
        assert_eq!(String::from_utf8(buf).unwrap(), "family,n,m,seed,moves,initial_psi,final_psi,ms\n");
    }

    #[test]
    fn gnp_resamples_disconnected_draws() {
        let config = BenchConfig { family: BenchFamily::Gnp { p: 0.08 }, sizes: vec![20], seeds: 10 };
        let out = run_bench(&config).unwrap();
        assert_eq!(out.rows.len(), 10);
        for row in &out.rows {
            assert!(is_connected(&gen_gnp(20, 0.08, row.seed)));
        }
    }

    #[test]
    fn invalid_configs() {
        let bad = BenchConfig { family: BenchFamily::Gnp { p: 1.5 }, sizes: vec![5], seeds: 1 };
        assert!(run_bench(&bad).is_err());
        let bad = BenchConfig { family: BenchFamily::Named(Family::Cycle), sizes: vec![2], seeds: 1 };
        assert!(run_bench(&bad).is_err());
        let bad = BenchConfig { family: BenchFamily::Named(Family::Path), sizes: vec![], seeds: 1 };
        assert!(run_bench(&bad).is_err());
    }
}
