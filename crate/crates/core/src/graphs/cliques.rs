use fixedbitset::FixedBitSet;

use super::Graph;

/// All inclusion-maximal cliques with at least `min_size` vertices.
///
/// Each clique is sorted ascending and the list is sorted lexicographically.
pub fn maximal_cliques(g: &Graph, min_size: usize) -> Vec<Vec<usize>> {
    let n = g.order();
    let mut p = FixedBitSet::with_capacity(n);
    p.insert_range(..);
    let x = FixedBitSet::with_capacity(n);
    let mut out = Vec::new();
    bron_kerbosch(g, &mut Vec::new(), p, x, min_size, &mut out);
    for c in &mut out {
        c.sort_unstable();
    }
    out.sort();
    out
}

fn bron_kerbosch(
    g: &Graph,
    r: &mut Vec<usize>,
    mut p: FixedBitSet,
    mut x: FixedBitSet,
    min_size: usize,
    out: &mut Vec<Vec<usize>>,
) {
    let p_count = p.count_ones(..);
    if p_count == 0 {
        if x.is_clear() && r.len() >= min_size {
            out.push(r.clone());
        }
        return;
    }
    if r.len() + p_count < min_size {
        return;
    }
    // pivot with the most neighbours in P
    let pivot = p
        .ones()
        .chain(x.ones())
        .max_by_key(|&u| {
            (
                p.intersection_count(g.adjacency_row(u)),
                std::cmp::Reverse(u),
            )
        })
        .expect("P is non-empty");
    let mut todo = p.clone();
    todo.difference_with(g.adjacency_row(pivot));
    for v in todo.ones() {
        let row = g.adjacency_row(v);
        let mut next_p = p.clone();
        next_p.intersect_with(row);
        let mut next_x = x.clone();
        next_x.intersect_with(row);
        r.push(v);
        bron_kerbosch(g, r, next_p, next_x, min_size, out);
        r.pop();
        p.set(v, false);
        x.insert(v);
    }
}

/// Every clique of maximum size, sorted as in [`maximal_cliques`].
///
/// Branch and bound with a greedy colouring bound; vertices are tried in
/// order of degree, then index.
pub fn maximum_cliques(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.order();
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (g.degree(v), v));
    let mut search = MaxCliqueSearch {
        g,
        order,
        best: 0,
        found: Vec::new(),
    };
    let mut p = FixedBitSet::with_capacity(n);
    p.insert_range(..);
    search.expand(&mut Vec::new(), p);
    let mut found = search.found;
    for c in &mut found {
        c.sort_unstable();
    }
    found.sort();
    found
}

/// Every independent set of maximum size.
pub fn maximum_independent_sets(g: &Graph) -> Vec<Vec<usize>> {
    maximum_cliques(&g.complement())
}

struct MaxCliqueSearch<'a> {
    g: &'a Graph,
    order: Vec<usize>,
    best: usize,
    found: Vec<Vec<usize>>,
}

impl MaxCliqueSearch<'_> {
    /// Greedy sequential colouring of `p`; returns vertices in colour order
    /// with the colour number (1-based) of each.
    fn colour(&self, p: &FixedBitSet) -> Vec<(usize, usize)> {
        let mut uncoloured = p.clone();
        let mut out = Vec::with_capacity(p.count_ones(..));
        let mut colour = 0;
        while !uncoloured.is_clear() {
            colour += 1;
            let mut available = uncoloured.clone();
            for &v in &self.order {
                if !available.contains(v) {
                    continue;
                }
                out.push((v, colour));
                uncoloured.set(v, false);
                available.set(v, false);
                available.difference_with(self.g.adjacency_row(v));
            }
        }
        out
    }

    fn expand(&mut self, r: &mut Vec<usize>, mut p: FixedBitSet) {
        if p.is_clear() {
            if r.len() > self.best {
                self.best = r.len();
                self.found.clear();
            }
            if r.len() == self.best {
                self.found.push(r.clone());
            }
            return;
        }
        let coloured = self.colour(&p);
        for &(v, colour) in coloured.iter().rev() {
            // keep ties: only prune when strictly worse
            if r.len() + colour < self.best {
                return;
            }
            let mut next = p.clone();
            next.intersect_with(self.g.adjacency_row(v));
            r.push(v);
            self.expand(r, next);
            r.pop();
            p.set(v, false);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::{complete_bipartite, line_graph};

    fn is_clique(g: &Graph, c: &[usize]) -> bool {
        c.iter()
            .enumerate()
            .all(|(i, &u)| c[i + 1..].iter().all(|&v| g.has_edge(u, v)))
    }

    /// All maximal cliques by subset enumeration; tiny graphs only.
    fn brute_maximal(g: &Graph) -> Vec<Vec<usize>> {
        let n = g.order();
        let mut out = Vec::new();
        for mask in 1u32..(1 << n) {
            let c: Vec<usize> = (0..n).filter(|&i| mask & (1 << i) != 0).collect();
            if !is_clique(g, &c) {
                continue;
            }
            let maximal = (0..n)
                .filter(|v| mask & (1 << v) == 0)
                .all(|v| !c.iter().all(|&u| g.has_edge(u, v)));
            if maximal {
                out.push(c);
            }
        }
        out.sort();
        out
    }

    fn sample_graphs() -> Vec<Graph> {
        vec![
            Graph::empty(3),
            Graph::complete(4),
            line_graph(&complete_bipartite(3, 3)),
            Graph::from_edges(
                7,
                [
                    (0, 1),
                    (1, 2),
                    (2, 0),
                    (2, 3),
                    (3, 4),
                    (4, 2),
                    (5, 6),
                    (0, 3),
                ],
            )
            .unwrap(),
            Graph::from_edges(8, (0..8).flat_map(|i| [(i, (i + 1) % 8), (i, (i + 3) % 8)]))
                .unwrap(),
        ]
    }

    #[test]
    fn bron_kerbosch_matches_brute_force() {
        for g in sample_graphs() {
            assert_eq!(maximal_cliques(&g, 0), brute_maximal(&g));
        }
    }

    #[test]
    fn min_size_filters() {
        let g = &sample_graphs()[3];
        let all = maximal_cliques(g, 0);
        let big = maximal_cliques(g, 3);
        assert_eq!(
            big,
            all.into_iter().filter(|c| c.len() >= 3).collect::<Vec<_>>()
        );
    }

    #[test]
    fn maximum_cliques_match_brute_force() {
        for g in sample_graphs() {
            let all = brute_maximal(&g);
            let top = all.iter().map(Vec::len).max().unwrap();
            let expect: Vec<_> = all.into_iter().filter(|c| c.len() == top).collect();
            assert_eq!(maximum_cliques(&g), expect);
        }
    }

    #[test]
    fn independent_sets_of_rook_graph() {
        // 4x3 rook graph: maximum independent sets are partial permutations
        let g = line_graph(&complete_bipartite(4, 3));
        let sets = maximum_independent_sets(&g);
        assert_eq!(sets.len(), 24);
        assert!(sets.iter().all(|s| s.len() == 3));
    }

    #[test]
    fn complete_graph_independent_sets_are_singletons() {
        let sets = maximum_independent_sets(&Graph::complete(4));
        assert_eq!(sets, vec![vec![0], vec![1], vec![2], vec![3]]);
    }
}
