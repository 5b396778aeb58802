//! Exhaustive searches on dual graphs: perp-sets, ovoids, grids and sets
//! of mutually disjoint lines.

use fixedbitset::FixedBitSet;

use super::{dual_graph, DualGeometry, IncidenceGeometry};
use crate::error::{Error, Result};
use crate::graphs::{maximum_independent_sets, Graph};

/// `v` together with every dual point collinear with it, sorted.
pub fn perp_set(dual: &DualGeometry, v: usize) -> Vec<usize> {
    let mut out: Vec<usize> = dual.graph().neighbors(v).collect();
    out.push(v);
    out.sort_unstable();
    out
}

/// All maximum sets of pairwise non-collinear dual points.
pub fn find_ovoids(dual: &DualGeometry) -> Vec<Vec<usize>> {
    maximum_independent_sets(&dual.graph().unweighted())
}

/// All maximum sets of pairwise disjoint lines.
pub fn mub_line_sets(geo: &IncidenceGeometry) -> Vec<Vec<usize>> {
    find_ovoids(&dual_graph(geo))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GridQuery {
    pub rows: usize,
    pub cols: usize,
    /// Required weight on every row and column edge.
    pub weight: Option<u32>,
    /// Stop after this many grids.
    pub limit: Option<usize>,
}

impl GridQuery {
    pub fn new(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            weight: None,
            limit: None,
        }
    }

    pub fn with_weight(mut self, weight: u32) -> Self {
        self.weight = Some(weight);
        self
    }

    pub fn with_limit(mut self, limit: usize) -> Self {
        self.limit = Some(limit);
        self
    }
}

/// `rows x cols` distinct dual points; each row and each column is a set of
/// pairwise collinear points, and row `i` meets column `j` only in cell
/// `(i, j)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Grid {
    cells: Vec<Vec<usize>>,
}

impl Grid {
    pub fn rows(&self) -> &[Vec<usize>] {
        &self.cells
    }

    pub fn columns(&self) -> Vec<Vec<usize>> {
        let cols = self.cells.first().map_or(0, Vec::len);
        (0..cols)
            .map(|j| self.cells.iter().map(|row| row[j]).collect())
            .collect()
    }

    pub fn cell(&self, row: usize, col: usize) -> usize {
        self.cells[row][col]
    }

    /// All cells, sorted.
    pub fn points(&self) -> Vec<usize> {
        let mut pts: Vec<usize> = self.cells.iter().flatten().copied().collect();
        pts.sort_unstable();
        pts
    }

    /// Row and column edges as `(u, v)` pairs.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for line in self.cells.iter().cloned().chain(self.columns()) {
            for (i, &u) in line.iter().enumerate() {
                for &v in &line[i + 1..] {
                    out.push((u, v));
                }
            }
        }
        out
    }
}

/// Every grid of the requested shape, each reported once.
///
/// A grid is reported in the labelling where cell `(0, 0)` is its smallest
/// point, the first row and first column increase, and for square grids
/// `(0, 1) < (1, 0)`.
pub fn find_grids(dual: &DualGeometry, query: GridQuery) -> Result<Vec<Grid>> {
    if query.rows < 2 || query.cols < 2 {
        return Err(Error::GridShape {
            rows: query.rows,
            cols: query.cols,
        });
    }
    let g = dual.graph();
    let mut search = GridSearch {
        g,
        query,
        cells: Vec::with_capacity(query.rows * query.cols),
        used: FixedBitSet::with_capacity(g.order()),
        found: Vec::new(),
    };
    search.fill();
    Ok(search.found)
}

struct GridSearch<'a> {
    g: &'a Graph,
    query: GridQuery,
    cells: Vec<usize>,
    used: FixedBitSet,
    found: Vec<Grid>,
}

impl GridSearch<'_> {
    fn done(&self) -> bool {
        self.query.limit.is_some_and(|l| self.found.len() >= l)
    }

    fn joined(&self, u: usize, v: usize) -> bool {
        match (self.g.weight(u, v), self.query.weight) {
            (None, _) => false,
            (Some(w), Some(want)) => w == want,
            (Some(_), None) => true,
        }
    }

    fn at(&self, row: usize, col: usize) -> usize {
        self.cells[row * self.query.cols + col]
    }

    fn fill(&mut self) {
        let (rows, cols) = (self.query.rows, self.query.cols);
        let k = self.cells.len();
        if k == rows * cols {
            let cells = self.cells.chunks(cols).map(<[usize]>::to_vec).collect();
            self.found.push(Grid { cells });
            return;
        }
        let (i, j) = (k / cols, k % cols);

        let mut lower = 0;
        if k > 0 {
            lower = self.at(0, 0) + 1;
        }
        if i == 0 && j > 0 {
            lower = lower.max(self.at(0, j - 1) + 1);
        }
        if j == 0 && i > 0 {
            lower = lower.max(self.at(i - 1, 0) + 1);
        }
        if rows == cols && i == 1 && j == 0 {
            lower = lower.max(self.at(0, 1) + 1);
        }

        let mut candidates = FixedBitSet::with_capacity(self.g.order());
        candidates.insert_range(lower..);
        if j > 0 {
            candidates.intersect_with(self.g.adjacency_row(self.at(i, j - 1)));
        }
        if i > 0 {
            candidates.intersect_with(self.g.adjacency_row(self.at(i - 1, j)));
        }
        candidates.difference_with(&self.used);

        for v in candidates.ones() {
            let fits = (0..j).all(|c| self.joined(self.at(i, c), v))
                && (0..i).all(|r| self.joined(self.at(r, j), v));
            if !fits {
                continue;
            }
            self.cells.push(v);
            self.used.insert(v);
            self.fill();
            self.used.set(v, false);
            self.cells.pop();
            if self.done() {
                return;
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GridLineKind {
    Row,
    Column,
}

/// How much a row or column of a grid shares, counted on the parent
/// geometry's points.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TripleSharing {
    pub kind: GridLineKind,
    pub index: usize,
    pub lines: Vec<usize>,
    /// Sizes of the pairwise intersections, in pair order.
    pub pairwise: Vec<usize>,
    /// Points common to all lines of the row or column.
    pub common: usize,
    /// Points lying on at least two lines of the row or column.
    pub union_of_pairwise: usize,
}

pub fn grid_sharing_report(dual: &DualGeometry, grid: &Grid) -> Vec<TripleSharing> {
    let lines = dual.dual_points();
    let shared = |a: usize, b: usize| -> Vec<usize> {
        lines[a]
            .iter()
            .copied()
            .filter(|p| lines[b].binary_search(p).is_ok())
            .collect()
    };
    let describe = |kind, index, members: &[usize]| {
        let mut pairwise = Vec::new();
        let mut union: Vec<usize> = Vec::new();
        for (i, &a) in members.iter().enumerate() {
            for &b in &members[i + 1..] {
                let s = shared(a, b);
                pairwise.push(s.len());
                union.extend(s);
            }
        }
        union.sort_unstable();
        union.dedup();
        let common = lines[members[0]]
            .iter()
            .filter(|p| members.iter().all(|&m| lines[m].binary_search(p).is_ok()))
            .count();
        TripleSharing {
            kind,
            index,
            lines: members.to_vec(),
            pairwise,
            common,
            union_of_pairwise: union.len(),
        }
    };
    let mut out: Vec<TripleSharing> = grid
        .rows()
        .iter()
        .enumerate()
        .map(|(i, r)| describe(GridLineKind::Row, i, r))
        .collect();
    out.extend(
        grid.columns()
            .iter()
            .enumerate()
            .map(|(j, c)| describe(GridLineKind::Column, j, c)),
    );
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::build_geometry;
    use crate::pauli::SystemSpec;

    fn dual(d: &[u32]) -> DualGeometry {
        dual_graph(&build_geometry(&SystemSpec::new(d.to_vec()).unwrap()).unwrap())
    }

    fn is_grid(dual: &DualGeometry, grid: &Grid) -> bool {
        let g = dual.graph();
        let mut pts = grid.points();
        pts.dedup();
        pts.len() == grid.rows().len() * grid.columns().len()
            && grid.edges().into_iter().all(|(u, v)| g.has_edge(u, v))
    }

    #[test]
    fn shape_is_validated() {
        let d = dual(&[2, 3]);
        assert_eq!(
            find_grids(&d, GridQuery::new(1, 4)),
            Err(Error::GridShape { rows: 1, cols: 4 })
        );
    }

    #[test]
    fn qubit_qutrit_dual_is_one_grid() {
        let d = dual(&[2, 3]);
        let grids = find_grids(&d, GridQuery::new(3, 4)).unwrap();
        assert_eq!(grids.len(), 1);
        assert!(is_grid(&d, &grids[0]));
        assert_eq!(grids[0].points(), (0..12).collect::<Vec<_>>());
    }

    #[test]
    fn grids_are_valid_and_limited() {
        let d = dual(&[3, 3]);
        let grids = find_grids(&d, GridQuery::new(4, 4)).unwrap();
        assert_eq!(grids.len(), 45);
        assert!(grids.iter().all(|g| is_grid(&d, g)));
        let first = find_grids(&d, GridQuery::new(4, 4).with_limit(3)).unwrap();
        assert_eq!(first, grids[..3].to_vec());
    }

    #[test]
    fn perp_sets() {
        let d = dual(&[2, 3]);
        assert!((0..12).all(|v| perp_set(&d, v).len() == 6));
        let d9 = dual(&[3, 3]);
        assert!((0..40).all(|v| perp_set(&d9, v).len() == 13));
    }

    #[test]
    fn isolated_vertex_perp_is_singleton() {
        let d = DualGeometry {
            lines: vec![vec![0], vec![1]],
            graph: Graph::empty_weighted(2),
            pencils: Vec::new(),
        };
        assert_eq!(perp_set(&d, 1), vec![1]);
        assert_eq!(find_ovoids(&d), vec![vec![0, 1]]);
    }

    #[test]
    fn complete_dual_gives_singleton_ovoids() {
        let d = DualGeometry {
            lines: vec![vec![0, 1], vec![0, 2], vec![0, 3]],
            graph: Graph::from_weighted_edges(3, [(0, 1, 1), (0, 2, 1), (1, 2, 1)]).unwrap(),
            pencils: Vec::new(),
        };
        assert_eq!(find_ovoids(&d), vec![vec![0], vec![1], vec![2]]);
    }

    #[test]
    fn sharing_report_counts() {
        let d = dual(&[2, 3]);
        let grid = &find_grids(&d, GridQuery::new(3, 4)).unwrap()[0];
        let report = grid_sharing_report(&d, grid);
        assert_eq!(report.len(), 7);
        for r in &report {
            match r.kind {
                // rows meet in one letter point, columns in a digit pair
                GridLineKind::Row => {
                    assert_eq!((r.common, r.union_of_pairwise), (1, 1));
                    assert_eq!(r.pairwise, vec![1; 6]);
                }
                GridLineKind::Column => {
                    assert_eq!((r.common, r.union_of_pairwise), (2, 2));
                    assert_eq!(r.pairwise, vec![2; 3]);
                }
            }
        }
    }
}
