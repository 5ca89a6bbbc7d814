use std::fmt::Write as _;

use super::Graph;
use crate::altsign::SignLabeling;
use crate::error::{Error, Result};
use crate::spantree::RootedTree;

/// Renders `g` as an undirected DOT graph. With a tree, tree edges are solid
/// (labeled with their sign when `signs` is given), cotree edges dashed, and
/// vertices annotated with their depth.
pub fn to_dot(g: &Graph, tree: Option<&RootedTree>, signs: Option<&SignLabeling>) -> Result<String> {
    if let Some(signs) = signs {
        for (e, _) in signs.iter() {
            if !tree.is_some_and(|t| t.contains_edge(e)) {
                return Err(Error::LabelingNotOnTree(e));
            }
        }
    }

    let mut out = String::from("graph G {\n");
    for v in 0..g.n() {
        match tree {
            Some(t) => {
                let _ = writeln!(out, "  {v} [label=\"{v} (d={})\"];", t.depth(v));
            }
            None => {
                let _ = writeln!(out, "  {v};");
            }
        }
    }
    for &e in g.edges() {
        let (u, v) = e.endpoints();
        match tree {
            Some(t) if t.contains_edge(e) => match signs.and_then(|s| s.get(e)) {
                Some(sign) => {
                    let _ = writeln!(out, "  {u} -- {v} [label=\"{sign}\", style=solid];");
                }
                None => {
                    let _ = writeln!(out, "  {u} -- {v} [style=solid];");
                }
            },
            Some(_) => {
                let _ = writeln!(out, "  {u} -- {v} [style=dashed];");
            }
            None => {
                let _ = writeln!(out, "  {u} -- {v};");
            }
        }
    }
    out.push_str("}\n");
    Ok(out)
}
