//! Finite simple graphs with optional integer edge weights.

mod cliques;
mod isomorphism;
mod spectrum;

pub use cliques::{maximal_cliques, maximum_cliques, maximum_independent_sets};
pub use isomorphism::{is_isomorphic, verify_isomorphism};
pub use spectrum::{characteristic_polynomial, spectrum_exact, Spectrum, DEFAULT_SPECTRUM_CAP};

use std::collections::BTreeMap;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};

/// Undirected graph without self-loops on vertices `0..order`.
///
/// Weighted graphs carry a weight `>= 1` on every edge; unweighted graphs
/// report weight 1 for each edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    order: usize,
    adjacency: Vec<FixedBitSet>,
    weights: Option<BTreeMap<(usize, usize), u32>>,
}

fn ordered(u: usize, v: usize) -> (usize, usize) {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

impl Graph {
    pub fn empty(order: usize) -> Self {
        Self {
            order,
            adjacency: vec![FixedBitSet::with_capacity(order); order],
            weights: None,
        }
    }

    pub fn empty_weighted(order: usize) -> Self {
        Self {
            weights: Some(BTreeMap::new()),
            ..Self::empty(order)
        }
    }

    pub fn complete(order: usize) -> Self {
        let mut g = Self::empty(order);
        for u in 0..order {
            for v in u + 1..order {
                g.link(u, v);
            }
        }
        g
    }

    pub fn from_edges<I>(order: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Self::empty(order);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn from_weighted_edges<I>(order: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, u32)>,
    {
        let mut g = Self::empty_weighted(order);
        for (u, v, w) in edges {
            g.add_weighted_edge(u, v, w)?;
        }
        Ok(g)
    }

    fn check_pair(&self, u: usize, v: usize) -> Result<()> {
        for x in [u, v] {
            if x >= self.order {
                return Err(Error::VertexOutOfRange {
                    vertex: x,
                    order: self.order,
                });
            }
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        Ok(())
    }

    fn link(&mut self, u: usize, v: usize) {
        self.adjacency[u].insert(v);
        self.adjacency[v].insert(u);
    }

    /// Adds an edge; on a weighted graph the new edge gets weight 1.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_pair(u, v)?;
        self.link(u, v);
        if let Some(w) = self.weights.as_mut() {
            w.entry(ordered(u, v)).or_insert(1);
        }
        Ok(())
    }

    /// Adds or re-weights an edge, turning the graph into a weighted one.
    pub fn add_weighted_edge(&mut self, u: usize, v: usize, weight: u32) -> Result<()> {
        self.check_pair(u, v)?;
        if weight == 0 {
            return Err(Error::ZeroWeight);
        }
        if self.weights.is_none() {
            self.weights = Some(self.edges().into_iter().map(|e| (e, 1)).collect());
        }
        self.link(u, v);
        if let Some(w) = self.weights.as_mut() {
            w.insert(ordered(u, v), weight);
        }
        Ok(())
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn is_weighted(&self) -> bool {
        self.weights.is_some()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order && v < self.order && self.adjacency[u].contains(v)
    }

    /// Weight of the edge `{u, v}`, or `None` if there is no such edge.
    pub fn weight(&self, u: usize, v: usize) -> Option<u32> {
        if !self.has_edge(u, v) {
            return None;
        }
        match &self.weights {
            Some(w) => w.get(&ordered(u, v)).copied(),
            None => Some(1),
        }
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adjacency[v].ones()
    }

    pub(crate) fn adjacency_row(&self, v: usize) -> &FixedBitSet {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].count_ones(..)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.order).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn edge_count(&self) -> usize {
        (0..self.order).map(|v| self.degree(v)).sum::<usize>() / 2
    }

    /// Edges as `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.order)
            .flat_map(|u| {
                self.neighbors(u)
                    .filter(move |&v| v > u)
                    .map(move |v| (u, v))
            })
            .collect()
    }

    /// Edges with weights, sorted.
    pub fn weighted_edges(&self) -> Vec<(usize, usize, u32)> {
        self.edges()
            .into_iter()
            .map(|(u, v)| (u, v, self.weight(u, v).unwrap_or(1)))
            .collect()
    }

    /// Same edge set with weights dropped.
    pub fn unweighted(&self) -> Self {
        Self {
            weights: None,
            ..self.clone()
        }
    }

    pub fn complement(&self) -> Self {
        let mut g = Self::empty(self.order);
        for u in 0..self.order {
            for v in u + 1..self.order {
                if !self.has_edge(u, v) {
                    g.link(u, v);
                }
            }
        }
        g
    }

    /// Subgraph induced on `vertices`, relabelled `0..vertices.len()` in the
    /// given order.
    pub fn induced(&self, vertices: &[usize]) -> Self {
        let mut g = if self.is_weighted() {
            Self::empty_weighted(vertices.len())
        } else {
            Self::empty(vertices.len())
        };
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate().skip(i + 1) {
                if let Some(w) = self.weight(u, v) {
                    g.link(i, j);
                    if let Some(ws) = g.weights.as_mut() {
                        ws.insert((i, j), w);
                    }
                }
            }
        }
        g
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        (0..self.order).map(|v| self.degree(v)).collect()
    }

    /// The common degree if every vertex has the same degree.
    pub fn regular_degree(&self) -> Option<usize> {
        let degrees = self.degree_sequence();
        match degrees.split_first() {
            None => Some(0),
            Some((&first, rest)) => rest.iter().all(|&d| d == first).then_some(first),
        }
    }

    pub fn common_neighbors(&self, u: usize, v: usize) -> usize {
        self.adjacency[u].intersection_count(&self.adjacency[v])
    }

    /// `(n, k, lambda, mu)` when the graph is strongly regular. A parameter
    /// with no pairs to witness it (mu of a complete graph, lambda of an
    /// edgeless one) is reported as 0.
    pub fn strongly_regular_parameters(&self) -> Option<SrgParameters> {
        let k = self.regular_degree()?;
        let mut lambda = None;
        let mut mu = None;
        for u in 0..self.order {
            for v in u + 1..self.order {
                let c = self.common_neighbors(u, v);
                let slot = if self.has_edge(u, v) {
                    &mut lambda
                } else {
                    &mut mu
                };
                match slot {
                    None => *slot = Some(c),
                    Some(x) if *x != c => return None,
                    Some(_) => {}
                }
            }
        }
        Some(SrgParameters {
            n: self.order,
            k,
            lambda: lambda.unwrap_or(0),
            mu: mu.unwrap_or(0),
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SrgParameters {
    pub n: usize,
    pub k: usize,
    pub lambda: usize,
    pub mu: usize,
}

/// `K(m, n)`: left part `0..m`, right part `m..m+n`.
pub fn complete_bipartite(m: usize, n: usize) -> Graph {
    let mut g = Graph::empty(m + n);
    for u in 0..m {
        for v in m..m + n {
            g.link(u, v);
        }
    }
    g
}

/// Vertices are the edges of `g` in sorted order; two are adjacent when the
/// edges share an endpoint.
pub fn line_graph(g: &Graph) -> Graph {
    let edges = g.edges();
    let mut out = Graph::empty(edges.len());
    for (i, &(a, b)) in edges.iter().enumerate() {
        for (j, &(c, d)) in edges.iter().enumerate().skip(i + 1) {
            if a == c || a == d || b == c || b == d {
                out.link(i, j);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_loops_and_bad_vertices() {
        let mut g = Graph::empty(3);
        assert_eq!(g.add_edge(1, 1), Err(Error::SelfLoop(1)));
        assert_eq!(
            g.add_edge(0, 3),
            Err(Error::VertexOutOfRange {
                vertex: 3,
                order: 3
            })
        );
        assert_eq!(g.add_weighted_edge(0, 1, 0), Err(Error::ZeroWeight));
    }

    #[test]
    fn weights_default_to_one() {
        let mut g = Graph::from_edges(3, [(0, 1)]).unwrap();
        assert!(!g.is_weighted());
        assert_eq!(g.weight(0, 1), Some(1));
        g.add_weighted_edge(1, 2, 3).unwrap();
        assert!(g.is_weighted());
        assert_eq!(g.weighted_edges(), vec![(0, 1, 1), (1, 2, 3)]);
        assert_eq!(g.weight(0, 2), None);
    }

    #[test]
    fn complete_graph_is_strongly_regular() {
        let k5 = Graph::complete(5);
        assert_eq!(
            k5.strongly_regular_parameters(),
            Some(SrgParameters {
                n: 5,
                k: 4,
                lambda: 3,
                mu: 0
            })
        );
    }

    #[test]
    fn petersen_parameters() {
        let outer = (0..5).map(|i| (i, (i + 1) % 5));
        let spokes = (0..5).map(|i| (i, i + 5));
        let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
        let g = Graph::from_edges(10, outer.chain(spokes).chain(inner)).unwrap();
        assert_eq!(
            g.strongly_regular_parameters(),
            Some(SrgParameters {
                n: 10,
                k: 3,
                lambda: 0,
                mu: 1
            })
        );
    }

    #[test]
    fn path_is_not_regular() {
        let g = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(g.degree_sequence(), vec![1, 2, 1]);
        assert_eq!(g.regular_degree(), None);
        assert_eq!(g.strongly_regular_parameters(), None);
    }

    #[test]
    fn bipartite_and_line_graph() {
        let k43 = complete_bipartite(4, 3);
        assert_eq!(k43.edge_count(), 12);
        let l = line_graph(&k43);
        assert_eq!(l.order(), 12);
        assert_eq!(l.regular_degree(), Some(5));
        let tri = Graph::complete(3);
        assert_eq!(line_graph(&tri), tri);
    }

    #[test]
    fn line_graph_of_bipartite_degree() {
        for m in 1..5 {
            for n in 1..5 {
                let l = line_graph(&complete_bipartite(m, n));
                assert_eq!(l.order(), m * n);
                assert_eq!(l.regular_degree(), Some(m + n - 2));
            }
        }
    }

    #[test]
    fn complement_and_induced() {
        let g = Graph::from_weighted_edges(4, [(0, 1, 2), (1, 2, 1)]).unwrap();
        let c = g.complement();
        assert_eq!(c.edges(), vec![(0, 2), (0, 3), (1, 3), (2, 3)]);
        let sub = g.induced(&[2, 1, 0]);
        assert_eq!(sub.weighted_edges(), vec![(0, 1, 1), (1, 2, 2)]);
    }
}
