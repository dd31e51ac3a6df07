//! The grid of small finite cardinals.
//!
//! A finite number grows in two ways: add a unit to one of its three
//! coordinates (an axis step), or move a unit from the inconsistent or
//! incomplete coordinate into the classical one (a diagonal step). The
//! graph's edges are exactly these steps, and reachability along them
//! coincides with assertable `≤`.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt::Write as _;

use thiserror::Error;

use super::Cardinal;

/// Largest coordinate bound accepted by [`finite_lattice`].
pub const MAX_LATTICE_BOUND: u64 = 6;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LatticeError {
    #[error("lattice bound {0} exceeds the limit of {MAX_LATTICE_BOUND}")]
    BoundTooLarge(u64),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum StepKind {
    /// One more unit along a coordinate.
    Axis,
    /// One unit moved from `b` or `n` into `t`.
    Diagonal,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Step {
    pub from: Cardinal,
    pub to: Cardinal,
    pub kind: StepKind,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticeGraph {
    nodes: Vec<Cardinal>,
    edges: Vec<Step>,
}

fn coords(k: Cardinal) -> (u64, u64, u64) {
    use super::ClassicalCard::Fin;
    match (k.t, k.b, k.n) {
        (Fin(t), Fin(b), Fin(n)) => (t, b, n),
        _ => unreachable!("lattice nodes are finite"),
    }
}

/// All finite cardinals with coordinates within `bounds` (t, b, n), joined by
/// axis and diagonal steps.
pub fn finite_lattice(bounds: (u64, u64, u64)) -> Result<LatticeGraph, LatticeError> {
    let (bt, bb, bn) = bounds;
    if let Some(&too_big) = [bt, bb, bn].iter().find(|&&x| x > MAX_LATTICE_BOUND) {
        return Err(LatticeError::BoundTooLarge(too_big));
    }
    let mut nodes = Vec::new();
    for t in 0..=bt {
        for b in 0..=bb {
            for n in 0..=bn {
                nodes.push(Cardinal::finite(t, b, n));
            }
        }
    }
    nodes.sort_by_key(|&k| {
        let (t, b, n) = coords(k);
        (t + b + n, t, b, n)
    });

    let mut edges = Vec::new();
    for &from in &nodes {
        let (t, b, n) = coords(from);
        let mut push = |to: (u64, u64, u64), kind| {
            if to.0 <= bt && to.1 <= bb && to.2 <= bn {
                edges.push(Step {
                    from,
                    to: Cardinal::finite(to.0, to.1, to.2),
                    kind,
                });
            }
        };
        push((t + 1, b, n), StepKind::Axis);
        push((t, b + 1, n), StepKind::Axis);
        push((t, b, n + 1), StepKind::Axis);
        if b > 0 {
            push((t + 1, b - 1, n), StepKind::Diagonal);
        }
        if n > 0 {
            push((t + 1, b, n - 1), StepKind::Diagonal);
        }
    }
    Ok(LatticeGraph { nodes, edges })
}

impl LatticeGraph {
    pub fn nodes(&self) -> &[Cardinal] {
        &self.nodes
    }

    pub fn edges(&self) -> &[Step] {
        &self.edges
    }

    pub fn has_edge(&self, from: Cardinal, to: Cardinal) -> bool {
        self.edges.iter().any(|e| e.from == from && e.to == to)
    }

    /// Nodes reachable from `start` by zero or more steps.
    pub fn reachable_from(&self, start: Cardinal) -> BTreeSet<Cardinal> {
        let mut adjacency: BTreeMap<Cardinal, Vec<Cardinal>> = BTreeMap::new();
        for e in &self.edges {
            adjacency.entry(e.from).or_default().push(e.to);
        }
        let mut seen = BTreeSet::from([start]);
        let mut queue = VecDeque::from([start]);
        while let Some(k) = queue.pop_front() {
            for &next in adjacency.get(&k).map(Vec::as_slice).unwrap_or_default() {
                if seen.insert(next) {
                    queue.push_back(next);
                }
            }
        }
        seen
    }

    /// Graphviz rendering; node names are cardinal literals.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph cardinals {\n");
        for k in &self.nodes {
            let _ = writeln!(out, "  \"{k}\";");
        }
        for e in &self.edges {
            let _ = writeln!(out, "  \"{}\" -> \"{}\";", e.from, e.to);
        }
        out.push_str("}\n");
        out
    }
}
