//! DOT (graphviz) export of Hasse diagrams, normal stars, and trajectory
//! models. Plain node/edge statements only; nodes of equal grade share a
//! rank cluster; output is byte-deterministic for identical inputs.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::cells::StarComplex;
use crate::poset::FinitePoset;
use crate::tmodel::{LinkComplex, TrajectoryComplex};

fn render(name: &str, labels: &[String], grades: &[i64], edges: &[(usize, usize)]) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "digraph {name} {{");
    let _ = writeln!(out, "  rankdir=TB;");
    let _ = writeln!(out, "  node [shape=box];");
    for (i, label) in labels.iter().enumerate() {
        let _ = writeln!(out, "  n{i} [label=\"{label}\"];");
    }
    let mut by_grade: BTreeMap<i64, Vec<usize>> = BTreeMap::new();
    for (i, &g) in grades.iter().enumerate() {
        by_grade.entry(g).or_default().push(i);
    }
    for nodes in by_grade.values() {
        let mut line = String::from("  { rank=same;");
        for i in nodes {
            let _ = write!(line, " n{i};");
        }
        line.push_str(" }");
        let _ = writeln!(out, "{line}");
    }
    for &(a, b) in edges {
        let _ = writeln!(out, "  n{a} -> n{b};");
    }
    out.push_str("}\n");
    out
}

/// Hasse diagram with ranks by reduced norm (generic elements on top);
/// edges point from the bigger element to the element it covers.
pub fn poset_dot(poset: &FinitePoset) -> String {
    let labels: Vec<String> = poset.elements.iter().map(|w| w.to_string()).collect();
    let grades: Vec<i64> = poset
        .elements
        .iter()
        .map(|w| w.reduced_norm() as i64)
        .collect();
    render("divisor_poset", &labels, &grades, &poset.covers)
}

/// Normal star with ranks by cell dimension, top-dimensional cells on top.
pub fn star_dot(star: &StarComplex) -> String {
    let labels: Vec<String> = star.cells.iter().map(|c| c.label.to_string()).collect();
    let grades: Vec<i64> = star.cells.iter().map(|c| -(c.dim as i64)).collect();
    render("normal_star", &labels, &grades, &star.covers)
}

/// Trajectory model with ranks by cell dimension; node labels carry the
/// zone-wise label and the marker.
pub fn tmodel_dot(model: &TrajectoryComplex) -> String {
    let labels: Vec<String> = model
        .cells
        .iter()
        .map(|c| format!("{}; k={}", c.label, c.marker))
        .collect();
    let grades: Vec<i64> = model.cells.iter().map(|c| -(c.dim as i64)).collect();
    render("trajectory_model", &labels, &grades, &model.covers)
}

/// Link of the trajectory model's apex, same conventions.
pub fn link_dot(link: &LinkComplex) -> String {
    let labels: Vec<String> = link
        .cells
        .iter()
        .map(|c| format!("{}; k={}", c.label, c.marker))
        .collect();
    let grades: Vec<i64> = link.cells.iter().map(|c| -(c.dim as i64)).collect();
    render("trajectory_link", &labels, &grades, &link.covers)
}
