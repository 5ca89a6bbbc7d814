//! Canonical JSON documents for solve results.
//!
//! Serialization goes through [`serde_json::Value`], whose object maps keep
//! keys sorted, so identical inputs produce byte-identical output.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::altsign::{Sign, SignLabeling, Solution, VerificationReport};
use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, NormalizationLog, VertexId};
use crate::spantree::RootedTree;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InputSummary {
    pub n: usize,
    pub m: usize,
    pub root: VertexId,
    pub normalization: NormalizationLog,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MoveRecord {
    pub add: Edge,
    pub remove: Edge,
    pub delta: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceRecord {
    pub initial_psi: u64,
    pub final_psi: u64,
    pub cotree_scan_passes: usize,
    pub moves: Vec<MoveRecord>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolveReportDocument {
    pub schema_version: u32,
    pub input: InputSummary,
    pub tree_edges: Vec<Edge>,
    pub depths: Vec<usize>,
    /// `"u-v"` (with `u < v`) to `"+"` or `"-"`.
    pub signs: BTreeMap<String, Sign>,
    pub trace: TraceRecord,
    pub verification: VerificationReport,
    pub timing_ms: u64,
}

impl SolveReportDocument {
    pub fn new(
        g: &Graph,
        log: &NormalizationLog,
        solution: &Solution,
        verification: VerificationReport,
        timing_ms: u64,
    ) -> SolveReportDocument {
        let trace = &solution.trace;
        SolveReportDocument {
            schema_version: SCHEMA_VERSION,
            input: InputSummary {
                n: g.n(),
                m: g.m(),
                root: solution.tree.root(),
                normalization: log.clone(),
            },
            tree_edges: solution.tree.edge_list(),
            depths: solution.tree.depths().to_vec(),
            signs: signs_to_keyed(&solution.signs),
            trace: TraceRecord {
                initial_psi: trace.initial_psi,
                final_psi: trace.final_psi,
                cotree_scan_passes: trace.cotree_scan_passes,
                moves: trace
                    .moves
                    .iter()
                    .map(|m| MoveRecord { add: m.added, remove: m.removed, delta: m.delta_psi })
                    .collect(),
            },
            verification,
            timing_ms,
        }
    }

    /// Canonical pretty-printed JSON with sorted keys and a trailing newline.
    pub fn to_canonical_json(&self) -> Result<String> {
        let value = serde_json::to_value(self)?;
        let mut s = serde_json::to_string_pretty(&value)?;
        s.push('\n');
        Ok(s)
    }

    /// As [`to_canonical_json`](Self::to_canonical_json) with the timing
    /// field zeroed, for comparisons across runs.
    pub fn to_canonical_json_untimed(&self) -> Result<String> {
        SolveReportDocument { timing_ms: 0, ..self.clone() }.to_canonical_json()
    }

    pub fn from_json(text: &str) -> Result<SolveReportDocument> {
        let doc: SolveReportDocument = serde_json::from_str(text)?;
        if doc.schema_version != SCHEMA_VERSION {
            return Err(Error::InvalidParams(format!("unsupported schema_version {}", doc.schema_version)));
        }
        Ok(doc)
    }

    pub fn sign_labeling(&self) -> Result<SignLabeling> {
        signs_from_keyed(&self.signs)
    }

    /// Rebuilds the tree from `tree_edges` (depths are recomputed, not read).
    pub fn rooted_tree(&self, g: &Graph) -> Result<RootedTree> {
        RootedTree::from_edges(g, self.input.root, self.tree_edges.iter().copied())
    }
}

pub fn signs_to_keyed(signs: &SignLabeling) -> BTreeMap<String, Sign> {
    signs.iter().map(|(e, s)| (e.key(), s)).collect()
}

/// Parses `"u-v"` keys back into edges. Keys are accepted in either
/// orientation but must name a proper edge.
pub fn signs_from_keyed(keyed: &BTreeMap<String, Sign>) -> Result<SignLabeling> {
    let mut out = SignLabeling::new();
    for (key, &sign) in keyed {
        let bad = || Error::InvalidParams(format!("bad edge key {key:?}"));
        let (a, b) = key.split_once('-').ok_or_else(bad)?;
        let a: usize = a.trim().parse().map_err(|_| bad())?;
        let b: usize = b.trim().parse().map_err(|_| bad())?;
        let e = Edge::new(a, b).ok_or_else(bad)?;
        if out.get(e).is_some() {
            return Err(Error::InvalidParams(format!("edge {key:?} labeled twice")));
        }
        out.set(e, sign);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::altsign::{solve, verify_alternating};
    use crate::graph::{gen_named, Family};

    fn k3_doc() -> SolveReportDocument {
        let k3 = gen_named(Family::Complete, &[3]).unwrap();
        let sol = solve(&k3, None).unwrap();
        let ver = verify_alternating(&k3, &sol.tree, &sol.signs).unwrap();
        SolveReportDocument::new(&k3, &NormalizationLog::default(), &sol, ver, 3)
    }

    #[test]
    fn triangle_document() {
        let doc = k3_doc();
        let json = doc.to_canonical_json_untimed().unwrap();
        let expected = r#"{
  "depths": [
    0,
    2,
    1
  ],
  "input": {
    "m": 3,
    "n": 3,
    "normalization": {
      "dropped_loops": 0,
      "merged_duplicates": 0
    },
    "root": 0
  },
  "schema_version": 1,
  "signs": {
    "0-2": "-",
    "1-2": "+"
  },
  "timing_ms": 0,
  "trace": {
    "cotree_scan_passes": 2,
    "final_psi": 3,
    "initial_psi": 2,
    "moves": [
      {
        "add": [
          1,
          2
        ],
        "delta": 1,
        "remove": [
          0,
          1
        ]
      }
    ]
  },
  "tree_edges": [
    [
      0,
      2
    ],
    [
      1,
      2
    ]
  ],
  "verification": {
    "failures": [],
    "ok": true
  }
}
"#;
        assert_eq!(json, expected);
    }

    #[test]
    fn document_round_trips() {
        let doc = k3_doc();
        let back = SolveReportDocument::from_json(&doc.to_canonical_json().unwrap()).unwrap();
        assert_eq!(back, doc);
        let k3 = gen_named(Family::Complete, &[3]).unwrap();
        let tree = back.rooted_tree(&k3).unwrap();
        assert!(verify_alternating(&k3, &tree, &back.sign_labeling().unwrap()).unwrap().ok);
    }

    #[test]
    fn rejects_bad_keys_and_versions() {
        let mut keyed = BTreeMap::new();
        keyed.insert("1_2".to_string(), Sign::Plus);
        assert!(signs_from_keyed(&keyed).is_err());
        let mut keyed = BTreeMap::new();
        keyed.insert("2-2".to_string(), Sign::Plus);
        assert!(signs_from_keyed(&keyed).is_err());
        let mut keyed = BTreeMap::new();
        keyed.insert("2-1".to_string(), Sign::Plus);
        keyed.insert("1-2".to_string(), Sign::Minus);
        assert!(signs_from_keyed(&keyed).is_err());

        let json =
            k3_doc().to_canonical_json().unwrap().replace("\"schema_version\": 1", "\"schema_version\": 9");
        assert!(SolveReportDocument::from_json(&json).is_err());
    }
}
