//! Graphviz export. Output depends only on the input structures, so it is
//! byte-identical across runs and thread counts.

use crate::chamber_lattice::ChamberPoset;
use crate::fan::Fan;
use crate::shard_intersections::ShardIntersectionLattice;
use std::fmt::Write;

/// The Hasse quiver of the chamber poset. Nodes are sorted ray tuples; edges
/// point from the larger chamber to the smaller.
pub fn export_poset_dot(fan: &Fan, poset: &ChamberPoset) -> String {
    let mut out = String::from("digraph chambers {\n  rankdir=TB;\n");
    for c in fan.chamber_ids() {
        writeln!(out, "  \"{}\";", fan.chamber_label(c)).unwrap();
    }
    for a in poset.arrows() {
        writeln!(
            out,
            "  \"{}\" -> \"{}\";",
            fan.chamber_label(a.upper),
            fan.chamber_label(a.lower)
        )
        .unwrap();
    }
    out.push_str("}\n");
    out
}

/// The containment Hasse diagram of the shard intersection lattice. Nodes
/// are sorted generating shard ids, `()` being the whole space; edges point
/// from the larger set to the smaller.
pub fn export_shard_intersection_dot(si: &ShardIntersectionLattice) -> String {
    let mut out = String::from("digraph shard_intersections {\n  rankdir=TB;\n");
    let mut nodes: Vec<String> = si.elements().iter().map(|e| e.label()).collect();
    nodes.sort();
    for n in &nodes {
        writeln!(out, "  \"{n}\";").unwrap();
    }
    let mut edges: Vec<(String, String)> = si
        .hasse()
        .iter()
        .map(|&(big, small)| (si.element(big).label(), si.element(small).label()))
        .collect();
    edges.sort();
    for (a, b) in edges {
        writeln!(out, "  \"{a}\" -> \"{b}\";").unwrap();
    }
    out.push_str("}\n");
    out
}
