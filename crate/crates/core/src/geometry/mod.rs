//! Point-line geometries of Pauli graphs and their duals.
//!
//! Points are the non-identity operators of a system, lines its maximum
//! commuting sets. The dual graph has one vertex per line, with two lines
//! adjacent when they meet; the edge weight is the number of shared points.

mod labels;
mod search;

pub use labels::{paper_labels, PaperLabeling, ReferenceDiff};
pub use search::{
    find_grids, find_ovoids, grid_sharing_report, mub_line_sets, perp_set, Grid, GridLineKind,
    GridQuery, TripleSharing,
};

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::graphs::{maximal_cliques, Graph};
use crate::pauli::{commutes, enumerate_operators, PauliOperator, SystemSpec};

/// Largest total dimension accepted by [`build_geometry`].
pub const DEFAULT_MAX_DIM: usize = 32;

/// Line sizes of the qubit-qutrit, two-qutrit and three-qubit systems.
pub fn known_line_size(spec: &SystemSpec) -> Option<usize> {
    match spec.factor_dims() {
        [2, 3] | [3, 2] => Some(5),
        [3, 3] => Some(8),
        [2, 2, 2] => Some(7),
        [2, 2] => Some(3),
        _ => None,
    }
}

/// Commutation graph on the non-identity operators, vertex `i` being the
/// `i`-th operator of [`enumerate_operators`].
pub fn pauli_graph(spec: &SystemSpec) -> Result<(Vec<PauliOperator>, Graph)> {
    let dim = spec.total_dim();
    if dim > DEFAULT_MAX_DIM {
        return Err(Error::DimensionCap {
            dim,
            cap: DEFAULT_MAX_DIM,
        });
    }
    let ops = enumerate_operators(spec);
    let mut g = Graph::empty(ops.len());
    for i in 0..ops.len() {
        for j in i + 1..ops.len() {
            if commutes(&ops[i], &ops[j], spec)? {
                g.add_edge(i, j)?;
            }
        }
    }
    Ok((ops, g))
}

#[derive(Debug, Clone)]
pub struct IncidenceGeometry {
    spec: SystemSpec,
    points: Vec<PauliOperator>,
    lines: Vec<Vec<usize>>,
    pauli_graph: Graph,
}

/// Points are all non-identity operators; lines are the maximal cliques of
/// the Pauli graph of maximum size.
pub fn build_geometry(spec: &SystemSpec) -> Result<IncidenceGeometry> {
    let (points, graph) = pauli_graph(spec)?;
    let cliques = maximal_cliques(&graph, 1);
    let top = cliques.iter().map(Vec::len).max().unwrap_or(0);
    let lines = cliques.into_iter().filter(|c| c.len() == top).collect();
    Ok(IncidenceGeometry {
        spec: spec.clone(),
        points,
        lines,
        pauli_graph: graph,
    })
}

impl IncidenceGeometry {
    pub fn spec(&self) -> &SystemSpec {
        &self.spec
    }

    pub fn points(&self) -> &[PauliOperator] {
        &self.points
    }

    /// Lines as sorted point-index lists, in lexicographic order.
    pub fn lines(&self) -> &[Vec<usize>] {
        &self.lines
    }

    pub fn pauli_graph(&self) -> &Graph {
        &self.pauli_graph
    }

    pub fn line_size(&self) -> usize {
        self.lines.first().map_or(0, Vec::len)
    }

    pub fn lines_through(&self, point: usize) -> Vec<usize> {
        (0..self.lines.len())
            .filter(|&l| self.lines[l].binary_search(&point).is_ok())
            .collect()
    }

    pub fn on_line(&self, point: usize, line: usize) -> bool {
        self.lines[line].binary_search(&point).is_ok()
    }

    /// Points shared by two lines, sorted.
    pub fn intersection(&self, a: usize, b: usize) -> Vec<usize> {
        let other = &self.lines[b];
        self.lines[a]
            .iter()
            .copied()
            .filter(|p| other.binary_search(p).is_ok())
            .collect()
    }

    /// Sum of line sizes, i.e. the number of point-line incidences.
    pub fn incidence_count(&self) -> usize {
        self.lines.iter().map(Vec::len).sum()
    }

    /// Sorted union of the points of the given lines.
    pub fn union_of(&self, lines: &[usize]) -> Vec<usize> {
        let set: BTreeSet<usize> = lines
            .iter()
            .flat_map(|&l| self.lines[l].iter().copied())
            .collect();
        set.into_iter().collect()
    }
}

/// Lines through a common point, recorded once per distinct line set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Pencil {
    pub lines: Vec<usize>,
    /// Every point whose lines are exactly `lines`.
    pub points: Vec<usize>,
}

#[derive(Debug, Clone)]
pub struct DualGeometry {
    lines: Vec<Vec<usize>>,
    graph: Graph,
    pencils: Vec<Pencil>,
}

impl DualGeometry {
    /// Dual points: the lines of the parent geometry.
    pub fn dual_points(&self) -> &[Vec<usize>] {
        &self.lines
    }

    /// Weighted collinearity graph on dual points.
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn pencils(&self) -> &[Pencil] {
        &self.pencils
    }
}

pub fn dual_graph(geo: &IncidenceGeometry) -> DualGeometry {
    let n = geo.lines.len();
    let mut graph = Graph::empty_weighted(n);
    for a in 0..n {
        for b in a + 1..n {
            let shared = geo.intersection(a, b).len();
            if shared > 0 {
                graph
                    .add_weighted_edge(a, b, shared as u32)
                    .expect("distinct in-range vertices, positive weight");
            }
        }
    }
    let mut groups: BTreeMap<Vec<usize>, Vec<usize>> = BTreeMap::new();
    for p in 0..geo.points.len() {
        let through = geo.lines_through(p);
        if through.len() >= 2 {
            groups.entry(through).or_default().push(p);
        }
    }
    let pencils = groups
        .into_iter()
        .map(|(lines, points)| Pencil { lines, points })
        .collect();
    DualGeometry {
        lines: geo.lines.clone(),
        graph,
        pencils,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiLinePair {
    pub first: usize,
    pub second: usize,
    pub shared: Vec<usize>,
}

/// Unordered pairs of lines sharing two or more points.
pub fn multi_line_pairs(geo: &IncidenceGeometry) -> Vec<MultiLinePair> {
    let n = geo.lines.len();
    let mut out = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            let shared = geo.intersection(a, b);
            if shared.len() >= 2 {
                out.push(MultiLinePair {
                    first: a,
                    second: b,
                    shared,
                });
            }
        }
    }
    out
}

/// All lines through a fixed set of at least two points, any two of which
/// meet in exactly that set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiLineFamily {
    pub shared: Vec<usize>,
    pub lines: Vec<usize>,
}

pub fn multi_line_families(geo: &IncidenceGeometry) -> Vec<MultiLineFamily> {
    let cores: BTreeSet<Vec<usize>> = multi_line_pairs(geo)
        .into_iter()
        .map(|p| p.shared)
        .collect();
    cores
        .into_iter()
        .filter_map(|shared| {
            let lines: Vec<usize> = (0..geo.lines.len())
                .filter(|&l| shared.iter().all(|&p| geo.on_line(p, l)))
                .collect();
            let exact = lines.iter().enumerate().all(|(i, &a)| {
                lines[i + 1..]
                    .iter()
                    .all(|&b| geo.intersection(a, b) == shared)
            });
            exact.then_some(MultiLineFamily { shared, lines })
        })
        .collect()
}

/// Whether every line holding two or more points of `subset` lies wholly
/// inside it.
pub fn is_hyperplane(geo: &IncidenceGeometry, subset: &[usize]) -> bool {
    let members: BTreeSet<usize> = subset.iter().copied().collect();
    geo.lines.iter().all(|line| {
        let inside = line.iter().filter(|p| members.contains(p)).count();
        inside < 2 || inside == line.len()
    })
}

/// Multi-line families whose point union is closed in the sense of
/// [`is_hyperplane`].
pub fn multi_line_hyperplanes(geo: &IncidenceGeometry) -> Vec<MultiLineFamily> {
    multi_line_families(geo)
        .into_iter()
        .filter(|f| is_hyperplane(geo, &geo.union_of(&f.lines)))
        .collect()
}

/// For each anti-flag `(point, line)` (point not on line), the number of
/// lines through the point that meet the line.
pub fn anti_flag_connection_numbers(geo: &IncidenceGeometry) -> BTreeMap<(usize, usize), usize> {
    let through: Vec<Vec<usize>> = (0..geo.points.len())
        .map(|p| geo.lines_through(p))
        .collect();
    let mut out = BTreeMap::new();
    for (p, lines_at_p) in through.iter().enumerate() {
        for l in 0..geo.lines.len() {
            if geo.on_line(p, l) {
                continue;
            }
            let meeting = lines_at_p
                .iter()
                .filter(|&&m| !geo.intersection(m, l).is_empty())
                .count();
            out.insert((p, l), meeting);
        }
    }
    out
}
