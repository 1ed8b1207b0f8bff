//! Graphviz export of Hasse diagrams.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write;

use crate::cone::FacePoset;
use crate::monoid::IdempotentPoset;

/// A finite poset of index sets graded by dimension.
pub trait HasseDiagram {
    /// `(index set, dimension)` per element.
    fn nodes(&self) -> Vec<(BTreeSet<usize>, usize)>;
    /// Covering pairs `(lower, upper)`.
    fn edges(&self) -> Vec<(usize, usize)>;
}

impl HasseDiagram for IdempotentPoset {
    fn nodes(&self) -> Vec<(BTreeSet<usize>, usize)> {
        self.elements
            .iter()
            .map(|e| (e.index_set.clone(), e.face_dim))
            .collect()
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.hasse_edges.clone()
    }
}

impl HasseDiagram for FacePoset {
    fn nodes(&self) -> Vec<(BTreeSet<usize>, usize)> {
        self.faces
            .iter()
            .map(|f| (f.generator_indices.clone(), f.dim))
            .collect()
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.covers()
    }
}

/// `{1,3}` with generators numbered from one; `∅` for the empty set.
pub fn index_set_label(set: &BTreeSet<usize>) -> String {
    if set.is_empty() {
        return "∅".into();
    }
    let items: Vec<String> = set.iter().map(|i| (i + 1).to_string()).collect();
    format!("{{{}}}", items.join(","))
}

/// A `digraph` with one node per element, edges from smaller to larger
/// along covering pairs, and one `rank = same` group per dimension.
pub fn export_dot(p: &impl HasseDiagram) -> String {
    let nodes = p.nodes();
    let mut edges = p.edges();
    edges.sort_unstable();

    let mut by_dim: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (i, &(_, dim)) in nodes.iter().enumerate() {
        by_dim.entry(dim).or_default().push(i);
    }

    let mut out = String::from("digraph idempotents {\n  rankdir = BT;\n  node [shape = box];\n");
    for (i, (set, dim)) in nodes.iter().enumerate() {
        let _ = writeln!(
            out,
            "  n{i} [label = \"{} dim {dim}\"];",
            index_set_label(set)
        );
    }
    for (dim, members) in &by_dim {
        let ids: Vec<String> = members.iter().map(|i| format!("n{i};")).collect();
        let _ = writeln!(
            out,
            "  subgraph dim_{dim} {{ rank = same; {} }}",
            ids.join(" ")
        );
    }
    for (a, b) in edges {
        let _ = writeln!(out, "  n{a} -> n{b};");
    }
    out.push_str("}\n");
    out
}
