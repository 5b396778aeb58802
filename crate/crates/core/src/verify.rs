//! Reproduction checks over the reference systems, collected into a
//! deterministic text report.

use std::collections::BTreeMap;
use std::fmt::{self, Write as _};

use crate::error::Result;
use crate::geometry::{
    anti_flag_connection_numbers, build_geometry, dual_graph, find_grids, grid_sharing_report,
    is_hyperplane, mub_line_sets, multi_line_families, multi_line_pairs, paper_labels, perp_set,
    DualGeometry, GridLineKind, GridQuery, IncidenceGeometry,
};
use crate::graphs::{
    complete_bipartite, is_isomorphic, line_graph, spectrum_exact, verify_isomorphism, Spectrum,
};
use crate::pauli::{commutes, enumerate_operators, matrix_commutes, OracleConfig, SystemSpec};
use crate::rings::{
    classify_elements, is_admissible, neighbor_graph, projective_line, ring_tables, PointKind,
    ProductRing,
};

/// Systems covered by the full run.
pub const REFERENCE_SYSTEMS: [&[u32]; 4] = [&[2, 3], &[3, 3], &[2, 2, 2], &[2, 2]];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub criterion: u8,
    pub name: String,
    /// System the check is about.
    pub dims: Vec<u32>,
    pub passed: bool,
    pub details: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Report {
    checks: Vec<Check>,
}

impl Report {
    pub fn checks(&self) -> &[Check] {
        &self.checks
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> Vec<&Check> {
        self.checks.iter().filter(|c| !c.passed).collect()
    }

    /// Pass/fail per criterion number; a criterion passes when all of its
    /// checks do.
    pub fn by_criterion(&self) -> BTreeMap<u8, bool> {
        let mut out = BTreeMap::new();
        for c in &self.checks {
            *out.entry(c.criterion).or_insert(true) &= c.passed;
        }
        out
    }

    /// Text report; `verbose` adds the detail lines.
    pub fn render(&self, verbose: bool) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let dims: Vec<String> = c.dims.iter().map(u32::to_string).collect();
            let _ = writeln!(
                out,
                "[{}] {:>2} [{}] {}",
                if c.passed { "PASS" } else { "FAIL" },
                c.criterion,
                dims.join(","),
                c.name
            );
            if verbose {
                for d in &c.details {
                    let _ = writeln!(out, "       {d}");
                }
            }
        }
        let failed = self.failures().len();
        let _ = writeln!(out, "{} checks, {} failed", self.checks.len(), failed);
        out
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(true))
    }
}

struct System {
    dims: Vec<u32>,
    geo: IncidenceGeometry,
    dual: DualGeometry,
}

impl System {
    fn new(dims: &[u32]) -> Result<Self> {
        let geo = build_geometry(&SystemSpec::new(dims.to_vec())?)?;
        let dual = dual_graph(&geo);
        Ok(Self {
            dims: dims.to_vec(),
            geo,
            dual,
        })
    }
}

struct Builder {
    checks: Vec<Check>,
}

impl Builder {
    fn push(
        &mut self,
        criterion: u8,
        dims: &[u32],
        name: &str,
        passed: bool,
        details: Vec<String>,
    ) {
        self.checks.push(Check {
            criterion,
            name: name.to_string(),
            dims: dims.to_vec(),
            passed,
            details,
        });
    }
}

/// Runs every check, or only those about the systems in `only`.
pub fn verify(only: Option<&[u32]>) -> Result<Report> {
    let selected: Vec<&[u32]> = REFERENCE_SYSTEMS
        .iter()
        .copied()
        .filter(|d| only.is_none_or(|o| o == *d))
        .collect();
    let mut b = Builder { checks: Vec::new() };
    for dims in selected {
        let sys = System::new(dims)?;
        match dims {
            [2, 3] => qubit_qutrit(&mut b, &sys)?,
            [3, 3] => two_qutrits(&mut b, &sys)?,
            [2, 2, 2] => three_qubits(&mut b, &sys)?,
            _ => two_qubits(&mut b, &sys)?,
        }
    }
    b.checks.sort_by_key(|c| c.criterion);
    Ok(Report { checks: b.checks })
}

fn operator_count(b: &mut Builder, sys: &System, expect: usize) {
    let n = enumerate_operators(sys.geo.spec()).len();
    b.push(
        1,
        &sys.dims,
        "operator count",
        n == expect,
        vec![format!("operators {n}, expected {expect}")],
    );
}

fn oracle_agreement(b: &mut Builder, sys: &System, expect_pairs: usize) -> Result<()> {
    let spec = sys.geo.spec();
    let ops = sys.geo.points();
    let config = OracleConfig::default();
    let (mut pairs, mut disagreements) = (0, 0);
    for i in 0..ops.len() {
        for j in i + 1..ops.len() {
            pairs += 1;
            if commutes(&ops[i], &ops[j], spec)?
                != matrix_commutes(&ops[i], &ops[j], spec, &config)?
            {
                disagreements += 1;
            }
        }
    }
    b.push(
        2,
        &sys.dims,
        "symplectic commutation agrees with matrices",
        pairs == expect_pairs && disagreements == 0,
        vec![format!("pairs {pairs}, disagreements {disagreements}")],
    );
    Ok(())
}

fn line_census(b: &mut Builder, sys: &System, count: usize, size: usize) {
    let lines = sys.geo.lines();
    let uniform = lines.iter().all(|l| l.len() == size);
    b.push(
        if sys.dims == [2, 2] { 13 } else { 3 },
        &sys.dims,
        "line census",
        lines.len() == count && uniform,
        vec![format!(
            "lines {}, size {}, expected {count} of size {size}",
            lines.len(),
            sys.geo.line_size()
        )],
    );
}

fn spectrum_check(
    b: &mut Builder,
    crit: u8,
    dims: &[u32],
    name: &str,
    got: &Spectrum,
    want: &[(i64, usize)],
) {
    let want = Spectrum::from_pairs(want);
    b.push(
        crit,
        dims,
        name,
        *got == want,
        vec![format!("spectrum {got}, expected {want}")],
    );
}

fn mub_maximum(b: &mut Builder, sys: &System, expect: usize) -> Vec<Vec<usize>> {
    let sets = mub_line_sets(&sys.geo);
    let size = sets.first().map_or(0, Vec::len);
    b.push(
        8,
        &sys.dims,
        "maximum set of disjoint lines",
        size == expect,
        vec![format!(
            "size {size} ({} witnesses), expected {expect}",
            sets.len()
        )],
    );
    sets
}

fn qubit_qutrit(b: &mut Builder, sys: &System) -> Result<()> {
    let d = &sys.dims;
    operator_count(b, sys, 35);
    oracle_agreement(b, sys, 595)?;
    line_census(b, sys, 12, 5);
    let w6 = sys.dual.graph();
    spectrum_check(
        b,
        4,
        d,
        "dual spectrum",
        &spectrum_exact(w6)?,
        &[(-2, 6), (1, 3), (2, 2), (5, 1)],
    );

    let rook = line_graph(&complete_bipartite(4, 3));
    let map = is_isomorphic(&w6.unweighted(), &rook);
    let certified = map
        .as_ref()
        .is_some_and(|m| verify_isomorphism(&w6.unweighted(), &rook, m));
    b.push(
        6,
        d,
        "dual graph is the 4x3 rook graph",
        certified,
        vec![format!("bijection {map:?}")],
    );

    ring_line(b, sys)?;
    mub_maximum(b, sys, 3);

    let numbers = anti_flag_connection_numbers(&sys.geo);
    let mut tally: BTreeMap<usize, usize> = BTreeMap::new();
    for &k in numbers.values() {
        *tally.entry(k).or_insert(0) += 1;
    }
    b.push(
        9,
        d,
        "anti-flag connection numbers in {0,1}",
        tally.keys().all(|&k| k <= 1),
        vec![format!("anti-flags {}, by number {tally:?}", numbers.len())],
    );

    let labels = paper_labels(&sys.geo);
    let families = multi_line_families(&sys.geo);
    let closed = families
        .iter()
        .filter(|f| f.lines.len() == 3 && is_hyperplane(&sys.geo, &sys.geo.union_of(&f.lines)))
        .count();
    let details = families
        .iter()
        .map(|f| {
            let names: Vec<String> = f.lines.iter().map(|&l| labels.line_name(l)).collect();
            let core: Vec<&str> = f.shared.iter().map(|&p| labels.label(p)).collect();
            format!("{{{}}} share {{{}}}", names.join(","), core.join(","))
        })
        .collect();
    b.push(
        10,
        d,
        "four triples of lines sharing two points, each a hyperplane",
        families.len() == 4 && closed == 4,
        details,
    );
    Ok(())
}

fn ring_line(b: &mut Builder, sys: &System) -> Result<()> {
    let ring = ProductRing::new(vec![2, 3])?;
    let g = neighbor_graph(&ring);
    let w6 = sys.dual.graph().unweighted();
    let map = is_isomorphic(&w6, &g);
    let certified = map.as_ref().is_some_and(|m| verify_isomorphism(&w6, &g, m));
    b.push(
        7,
        &sys.dims,
        "dual graph is the neighbour graph of the ring line",
        certified,
        vec![format!("bijection {map:?}")],
    );

    let line = projective_line(&ring);
    let count = |k| line.iter().filter(|p| p.kind == k).count();
    let kinds = (
        count(PointKind::UnitAndZeroDivisor),
        count(PointKind::BothUnits),
        count(PointKind::BothZeroDivisors),
    );
    // pairs as listed for this ring, one per point
    let listed = [
        (4, 0),
        (4, 1),
        (4, 2),
        (4, 3),
        (0, 4),
        (1, 4),
        (2, 4),
        (3, 4),
        (4, 4),
        (4, 5),
        (1, 3),
        (3, 1),
    ];
    let mut hit: Vec<usize> = listed
        .iter()
        .filter_map(|pair| line.iter().position(|p| p.class.contains(pair)))
        .collect();
    hit.sort_unstable();
    hit.dedup();
    let admissible = listed
        .iter()
        .all(|&(a, x)| is_admissible(&ring, a, x).unwrap_or(false));
    b.push(
        7,
        &sys.dims,
        "ring line has 12 points split 8/2/2",
        line.len() == 12 && kinds == (8, 2, 2) && hit.len() == 12 && admissible,
        vec![format!(
            "points {}, kinds {kinds:?}, listed pairs hit {} points",
            line.len(),
            hit.len()
        )],
    );

    let (units, zero_divisors) = classify_elements(&ring);
    b.push(
        7,
        &sys.dims,
        "units and zero divisors",
        units == [4, 5] && zero_divisors == [0, 1, 2, 3],
        vec![format!("units {units:?}, zero divisors {zero_divisors:?}")],
    );

    const ADD: [[usize; 6]; 6] = [
        [0, 1, 2, 3, 4, 5],
        [1, 2, 0, 4, 5, 3],
        [2, 0, 1, 5, 3, 4],
        [3, 4, 5, 0, 1, 2],
        [4, 5, 3, 1, 2, 0],
        [5, 3, 4, 2, 0, 1],
    ];
    const MUL: [[usize; 6]; 6] = [
        [0, 0, 0, 0, 0, 0],
        [0, 1, 2, 0, 1, 2],
        [0, 2, 1, 0, 2, 1],
        [0, 0, 0, 3, 3, 3],
        [0, 1, 2, 3, 4, 5],
        [0, 2, 1, 3, 5, 4],
    ];
    let (add, mul) = ring_tables(&ring);
    let mismatches = (0..6)
        .flat_map(|i| (0..6).map(move |j| (i, j)))
        .filter(|&(i, j)| add[i][j] != ADD[i][j] || mul[i][j] != MUL[i][j])
        .count();
    b.push(
        7,
        &sys.dims,
        "addition and multiplication tables",
        mismatches == 0,
        vec![format!("mismatched entries {mismatches}")],
    );
    Ok(())
}

fn two_qutrits(b: &mut Builder, sys: &System) -> Result<()> {
    let d = &sys.dims;
    operator_count(b, sys, 80);
    oracle_agreement(b, sys, 3160)?;
    line_census(b, sys, 40, 8);
    let w9 = sys.dual.graph();
    spectrum_check(
        b,
        4,
        d,
        "dual spectrum",
        &spectrum_exact(w9)?,
        &[(-4, 15), (2, 24), (12, 1)],
    );

    let p9 = sys.geo.pauli_graph();
    spectrum_check(
        b,
        5,
        d,
        "operator graph spectrum",
        &spectrum_exact(p9)?,
        &[(-7, 15), (-1, 40), (5, 24), (25, 1)],
    );
    let degree = p9.regular_degree();
    b.push(
        5,
        d,
        "operator graph is regular of degree 25",
        degree == Some(25),
        vec![format!("degree {degree:?}")],
    );

    let sets = mub_maximum(b, sys, 10);
    let points = sys.geo.points().len();
    let partitions = sets.iter().all(|s| {
        let mut pts: Vec<usize> = s
            .iter()
            .flat_map(|&l| sys.geo.lines()[l].iter().copied())
            .collect();
        let total = pts.len();
        pts.sort_unstable();
        pts.dedup();
        total == points && pts.len() == points
    });
    b.push(
        8,
        d,
        "every maximum disjoint set partitions the points",
        !sets.is_empty() && partitions,
        vec![format!("witnesses {}, points {points}", sets.len())],
    );

    let families = multi_line_families(&sys.geo);
    let of_four = families.iter().filter(|f| f.lines.len() == 4).count();
    let closed = families
        .iter()
        .filter(|f| is_hyperplane(&sys.geo, &sys.geo.union_of(&f.lines)))
        .count();
    let mut details = vec![format!(
        "families {}, of four lines {of_four}, closed under lines {closed}",
        families.len()
    )];
    let labels = paper_labels(&sys.geo);
    for i in 1..=4 {
        let names: Vec<String> = ["L", "M", "N", "P"]
            .iter()
            .map(|x| format!("{x}{i}"))
            .collect();
        let Some(mut lines) = names
            .iter()
            .map(|n| labels.line_by_name(n))
            .collect::<Option<Vec<_>>>()
        else {
            continue;
        };
        lines.sort_unstable();
        let family = families.iter().any(|f| f.lines == lines);
        let union = sys.geo.union_of(&lines);
        details.push(format!(
            "{{{}}}: family {family}, union {} points, closed {}",
            names.join(","),
            union.len(),
            is_hyperplane(&sys.geo, &union)
        ));
    }
    b.push(
        10,
        d,
        "exactly four families of four lines",
        of_four == 4,
        details,
    );

    let grids = find_grids(&sys.dual, GridQuery::new(4, 4))?;
    let weight_two = grids
        .iter()
        .all(|g| g.edges().iter().all(|&(u, v)| w9.weight(u, v) == Some(2)));
    b.push(
        10,
        d,
        "grid lines share exactly two points",
        !grids.is_empty() && weight_two,
        vec![format!("4x4 grids {}", grids.len())],
    );

    let sizes: Vec<usize> = (0..w9.order())
        .map(|v| perp_set(&sys.dual, v).len())
        .collect();
    b.push(
        11,
        d,
        "perp-set size 13",
        sizes.iter().all(|&s| s == 13),
        vec![format!("sizes {:?}", {
            let mut s = sizes.clone();
            s.dedup();
            s
        })],
    );
    Ok(())
}

fn three_qubits(b: &mut Builder, sys: &System) -> Result<()> {
    let d = &sys.dims;
    operator_count(b, sys, 63);
    oracle_agreement(b, sys, 1953)?;
    line_census(b, sys, 135, 7);

    let p8 = sys.geo.pauli_graph();
    spectrum_check(
        b,
        5,
        d,
        "operator graph spectrum",
        &spectrum_exact(p8)?,
        &[(-5, 27), (3, 35), (30, 1)],
    );
    let degree = p8.regular_degree();
    let srg = p8.strongly_regular_parameters();
    b.push(
        5,
        d,
        "operator graph strongly regular of degree 30",
        degree == Some(30) && srg.is_some(),
        vec![format!("degree {degree:?}, parameters {srg:?}")],
    );

    let grids = find_grids(&sys.dual, GridQuery::new(3, 3).with_weight(3).with_limit(1))?;
    let mut details = Vec::new();
    if let Some(grid) = grids.first() {
        details.push(format!("grid {:?}", grid.rows()));
        for t in grid_sharing_report(&sys.dual, grid) {
            let kind = match t.kind {
                GridLineKind::Row => "row",
                GridLineKind::Column => "column",
            };
            details.push(format!(
                "{kind} {}: pairwise {:?}, common {}, on two or more {}",
                t.index, t.pairwise, t.common, t.union_of_pairwise
            ));
        }
    }
    b.push(
        12,
        d,
        "3x3 grid with weight-3 rows and columns",
        !grids.is_empty(),
        details,
    );
    Ok(())
}

fn two_qubits(b: &mut Builder, sys: &System) -> Result<()> {
    let d = &sys.dims;
    let n = enumerate_operators(sys.geo.spec()).len();
    b.push(
        13,
        d,
        "operator count",
        n == 15,
        vec![format!("operators {n}")],
    );
    line_census(b, sys, 15, 3);
    let pairs = multi_line_pairs(&sys.geo).len();
    b.push(
        13,
        d,
        "no two lines share more than one point",
        pairs == 0,
        vec![format!("pairs {pairs}")],
    );
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn qubit_qutrit_checks_pass() {
        let report = verify(Some(&[2, 3])).unwrap();
        assert!(report.passed(), "{report}");
        assert!(report.checks().iter().all(|c| c.dims == [2, 3]));
        let crits: Vec<u8> = report.by_criterion().keys().copied().collect();
        assert_eq!(crits, vec![1, 2, 3, 4, 6, 7, 8, 9, 10]);
    }

    #[test]
    fn two_qubit_checks_pass() {
        let report = verify(Some(&[2, 2])).unwrap();
        assert!(report.passed(), "{report}");
        assert!(report.render(false).ends_with("3 checks, 0 failed\n"));
    }

    #[test]
    fn unknown_filter_is_empty() {
        assert!(verify(Some(&[5])).unwrap().checks().is_empty());
    }
}
