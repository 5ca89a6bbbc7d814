//! Standard graph families and seeded Erdős–Rényi graphs.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{Graph, VertexId};
use crate::error::{Error, Result};

const MAX_VERTICES: usize = 1 << 20;
const MAX_EDGES: usize = 1 << 26;

/// Named graph families.
///
/// Labelings:
/// - `path n`: `0-1-...-(n-1)`.
/// - `cycle n`: the path plus `0-(n-1)`; requires `n >= 3`.
/// - `complete n`: all pairs.
/// - `complete_bipartite a b`: parts `0..a` and `a..a+b`.
/// - `grid a b`: `a` rows by `b` columns, vertex `r*b + c`.
/// - `hypercube d`: vertices are `d`-bit words, adjacent when they differ in one bit.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Path,
    Cycle,
    Complete,
    CompleteBipartite,
    Grid,
    Hypercube,
}

impl Family {
    pub const ALL: [Family; 6] = [
        Family::Path,
        Family::Cycle,
        Family::Complete,
        Family::CompleteBipartite,
        Family::Grid,
        Family::Hypercube,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Path => "path",
            Family::Cycle => "cycle",
            Family::Complete => "complete",
            Family::CompleteBipartite => "complete_bipartite",
            Family::Grid => "grid",
            Family::Hypercube => "hypercube",
        }
    }

    pub fn arity(self) -> usize {
        match self {
            Family::CompleteBipartite | Family::Grid => 2,
            _ => 1,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Family> {
        Family::ALL.into_iter().find(|f| f.name() == s).ok_or_else(|| Error::UnknownFamily(s.to_string()))
    }
}

/// Builds the standard labeled member of `family` for `params`.
pub fn gen_named(family: Family, params: &[usize]) -> Result<Graph> {
    if params.len() != family.arity() {
        return Err(Error::InvalidParams(format!(
            "{family} takes {} parameter(s), got {}",
            family.arity(),
            params.len()
        )));
    }
    let invalid = |msg: &str| Err(Error::InvalidParams(format!("{family}: {msg}")));

    let (n, m) = match family {
        Family::Path => (params[0], params[0].saturating_sub(1)),
        Family::Cycle => (params[0], params[0]),
        Family::Complete => (params[0], params[0].saturating_mul(params[0].saturating_sub(1)) / 2),
        Family::CompleteBipartite => {
            (params[0].saturating_add(params[1]), params[0].saturating_mul(params[1]))
        }
        Family::Grid => {
            let (a, b) = (params[0], params[1]);
            (
                a.saturating_mul(b),
                a.saturating_mul(b.saturating_sub(1)) + b.saturating_mul(a.saturating_sub(1)),
            )
        }
        Family::Hypercube => {
            if params[0] > 20 {
                return invalid("dimension must be at most 20");
            }
            let d = params[0];
            (1 << d, if d == 0 { 0 } else { d << (d - 1) })
        }
    };
    match family {
        Family::Cycle if n < 3 => return invalid("needs at least 3 vertices"),
        Family::CompleteBipartite | Family::Grid if params.contains(&0) => {
            return invalid("parameters must be positive")
        }
        _ if n == 0 => return invalid("needs at least 1 vertex"),
        _ => {}
    }
    if n > MAX_VERTICES || m > MAX_EDGES {
        return Err(Error::TooLarge(format!("{family} with {n} vertices and {m} edges")));
    }

    let mut pairs: Vec<(VertexId, VertexId)> = Vec::with_capacity(m);
    match family {
        Family::Path => pairs.extend((1..n).map(|v| (v - 1, v))),
        Family::Cycle => {
            pairs.extend((1..n).map(|v| (v - 1, v)));
            pairs.push((0, n - 1));
        }
        Family::Complete => {
            for u in 0..n {
                pairs.extend((u + 1..n).map(|v| (u, v)));
            }
        }
        Family::CompleteBipartite => {
            let a = params[0];
            for u in 0..a {
                pairs.extend((a..n).map(|v| (u, v)));
            }
        }
        Family::Grid => {
            let (rows, cols) = (params[0], params[1]);
            for r in 0..rows {
                for c in 0..cols {
                    let v = r * cols + c;
                    if c + 1 < cols {
                        pairs.push((v, v + 1));
                    }
                    if r + 1 < rows {
                        pairs.push((v, v + cols));
                    }
                }
            }
        }
        Family::Hypercube => {
            let d = params[0];
            for u in 0..n {
                pairs.extend((0..d).map(|b| u ^ (1 << b)).filter(|&v| v > u).map(|v| (u, v)));
            }
        }
    }
    debug_assert_eq!(pairs.len(), m);
    Graph::from_edges(n, &pairs)
}

/// G(n, p): every unordered pair `{u, v}`, visited in lexicographic order,
/// is kept when the next draw of a ChaCha8 stream seeded with `seed` (via
/// `seed_from_u64`) falls below `p`. The same `(n, p, seed)` always yields
/// the same graph.
///
/// Panics if `p` is not in `[0, 1]`.
pub fn gen_gnp(n: usize, p: f64, seed: u64) -> Graph {
    assert!((0.0..=1.0).contains(&p), "edge probability {p} outside [0, 1]");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pairs = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen::<f64>() < p {
                pairs.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &pairs).expect("generated pairs are simple and in range")
}
