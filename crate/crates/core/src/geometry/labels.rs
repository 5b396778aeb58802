//! Human-readable point labels and named reference lines for the
//! qubit-qutrit and two-qutrit systems.
//!
//! Single-factor operators are indexed `1..=9` for a qutrit as
//! `I, Z, X, XZ, XZ^2, Z^2, X^2, (XZ)^2, (XZ^2)^2` and `1..=4` for a qubit
//! as `I, X, XZ, Z` (up to phase). Points acting only on the last factor
//! get the digits `1..=8`; points acting only on the first factor get the
//! letters `a, b, ...`; a point `A (x) B` with both parts non-trivial gets
//! `8 * (letter index + 1) + digit`.

use std::collections::BTreeMap;

use super::IncidenceGeometry;
use crate::pauli::PauliOperator;

const QUTRIT: [(u32, u32); 9] = [
    (0, 0),
    (0, 1),
    (1, 0),
    (1, 1),
    (1, 2),
    (0, 2),
    (2, 0),
    (2, 2),
    (2, 1),
];

/// Qubit factors in letter order `a, b, c`: Z, X, XZ.
const QUBIT_LETTERS: [(u32, u32); 3] = [(0, 1), (1, 0), (1, 1)];

const QUBIT_QUTRIT_LINES: [(&str, &str); 12] = [
    ("L1", "1 5 a 9 13"),
    ("L2", "2 6 a 10 14"),
    ("L3", "3 7 a 11 15"),
    ("L4", "4 8 a 12 16"),
    ("M1", "1 5 b 17 21"),
    ("M2", "2 6 b 18 22"),
    ("M3", "3 7 b 19 23"),
    ("M4", "4 8 b 19 24"),
    ("N1", "1 5 c 25 29"),
    ("N2", "2 6 c 26 30"),
    ("N3", "3 7 c 27 31"),
    ("N4", "4 8 c 28 32"),
];

const TWO_QUTRIT_LINES: [(&str, &str); 40] = [
    ("L1", "1 5 a 9 13 e 41 45"),
    ("L2", "2 6 a 10 14 e 42 46"),
    ("L3", "3 7 a 11 15 e 43 47"),
    ("L4", "4 8 a 12 16 e 44 48"),
    ("M1", "1 5 b 17 21 f 49 53"),
    ("M2", "2 6 b 18 22 f 50 54"),
    ("M3", "3 7 b 19 23 f 51 55"),
    ("M4", "4 8 b 20 24 f 52 56"),
    ("N1", "1 5 c 25 29 g 57 61"),
    ("N2", "2 6 c 26 30 g 58 62"),
    ("N3", "3 7 c 27 31 g 59 63"),
    ("N4", "4 8 c 28 32 g 60 64"),
    ("P1", "1 5 d 33 37 h 65 69"),
    ("P2", "2 6 d 34 38 h 66 70"),
    ("P3", "3 7 d 35 39 h 67 71"),
    ("P4", "4 8 d 36 40 h 68 72"),
    ("X1", "9 22 32 39 45 50 60 67"),
    ("X2", "10 17 27 40 46 53 63 68"),
    ("X3", "11 20 30 33 47 56 58 69"),
    ("X4", "12 23 25 34 48 51 61 70"),
    ("X5", "13 18 28 35 41 54 64 71"),
    ("X6", "14 21 31 36 42 49 59 72"),
    ("X7", "15 24 26 37 43 52 62 65"),
    ("X8", "16 19 29 38 44 55 57 66"),
    ("Y1", "9 23 30 40 45 51 58 68"),
    ("Y2", "10 19 32 33 46 55 60 69"),
    ("Y3", "11 22 25 36 47 50 61 72"),
    ("Y4", "12 17 26 39 48 53 62 67"),
    ("Y5", "13 20 27 34 41 56 63 70"),
    ("Y6", "14 23 28 37 42 51 64 65"),
    ("Y7", "15 18 29 40 43 54 57 68"),
    ("Y8", "16 21 30 35 44 49 58 71"),
    ("Z1", "9 24 31 38 45 52 59 66"),
    ("Z2", "10 24 25 35 46 52 61 71"),
    ("Z3", "11 17 28 38 47 53 64 66"),
    ("Z4", "12 18 31 33 48 54 59 69"),
    ("Z5", "13 19 26 36 41 55 62 72"),
    ("Z6", "14 20 29 39 42 56 57 67"),
    ("Z7", "15 21 32 34 43 49 60 70"),
    ("Z8", "16 22 27 37 44 50 63 65"),
];

/// A reference line that matches its closest computed line only up to a few
/// points.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReferenceDiff {
    pub name: String,
    pub line: usize,
    pub listed_only: Vec<String>,
    pub computed_only: Vec<String>,
}

#[derive(Debug, Clone)]
pub struct PaperLabeling {
    point_labels: Vec<String>,
    index: BTreeMap<String, usize>,
    line_names: Vec<Option<String>>,
    diffs: Vec<ReferenceDiff>,
    reference: bool,
}

impl PaperLabeling {
    pub fn label(&self, point: usize) -> &str {
        &self.point_labels[point]
    }

    pub fn labels(&self) -> &[String] {
        &self.point_labels
    }

    pub fn point(&self, label: &str) -> Option<usize> {
        self.index.get(label).copied()
    }

    /// Points for a list of labels; `None` if any label is unknown.
    pub fn points(&self, labels: &[&str]) -> Option<Vec<usize>> {
        let mut pts = labels
            .iter()
            .map(|l| self.point(l))
            .collect::<Option<Vec<_>>>()?;
        pts.sort_unstable();
        Some(pts)
    }

    /// Reference name of a line, or `#<index>`.
    pub fn line_name(&self, line: usize) -> String {
        self.line_names[line]
            .clone()
            .unwrap_or_else(|| format!("#{line}"))
    }

    pub fn line_by_name(&self, name: &str) -> Option<usize> {
        self.line_names
            .iter()
            .position(|n| n.as_deref() == Some(name))
    }

    /// Reference lines that differ from the computed line they were matched to.
    pub fn diffs(&self) -> &[ReferenceDiff] {
        &self.diffs
    }

    /// True for the digit/letter scheme, false for canonical operator strings.
    pub fn is_reference(&self) -> bool {
        self.reference
    }
}

fn reference_label(op: &PauliOperator, letters: &[(u32, u32)]) -> Option<String> {
    let (left, right) = match op.exponents() {
        &[l, r] => (l, r),
        _ => return None,
    };
    let digit = QUTRIT[1..].iter().position(|&x| x == right);
    let letter = letters.iter().position(|&x| x == left);
    Some(match (left == (0, 0), right == (0, 0)) {
        (true, false) => (digit? + 1).to_string(),
        (false, true) => char::from(b'a' + letter? as u8).to_string(),
        (false, false) => (8 * (letter? + 1) + digit? + 1).to_string(),
        (true, true) => return None,
    })
}

type Reference = (
    &'static [(u32, u32)],
    &'static [(&'static str, &'static str)],
);

/// Digit/letter labels for `[2, 3]` and `[3, 3]`, with lines named after the
/// reference tables; canonical operator strings for every other system.
pub fn paper_labels(geo: &IncidenceGeometry) -> PaperLabeling {
    let (letters, table): Reference = match geo.spec().factor_dims() {
        [2, 3] => (&QUBIT_LETTERS, &QUBIT_QUTRIT_LINES),
        [3, 3] => (&QUTRIT[1..], &TWO_QUTRIT_LINES),
        _ => return canonical(geo),
    };
    let point_labels: Vec<String> = geo
        .points()
        .iter()
        .map(|op| reference_label(op, letters).expect("non-identity two-factor operator"))
        .collect();
    let index: BTreeMap<String, usize> = point_labels
        .iter()
        .enumerate()
        .map(|(i, l)| (l.clone(), i))
        .collect();

    let mut line_names = vec![None; geo.lines().len()];
    let mut diffs = Vec::new();
    for &(name, members) in table {
        let listed: Vec<usize> = members
            .split_whitespace()
            .filter_map(|l| index.get(l).copied())
            .collect();
        let overlap = |l: usize| listed.iter().filter(|&&p| geo.on_line(p, l)).count();
        let Some(best) = (0..geo.lines().len())
            .filter(|&l| line_names[l].is_none())
            .max_by_key(|&l| (overlap(l), std::cmp::Reverse(l)))
        else {
            continue;
        };
        // a reference line is attached when at most one point is off
        if overlap(best) + 1 < geo.lines()[best].len() {
            continue;
        }
        line_names[best] = Some(name.to_string());
        let listed_only: Vec<String> = listed
            .iter()
            .filter(|&&p| !geo.on_line(p, best))
            .map(|&p| point_labels[p].clone())
            .collect();
        let computed_only: Vec<String> = geo.lines()[best]
            .iter()
            .filter(|p| !listed.contains(p))
            .map(|&p| point_labels[p].clone())
            .collect();
        if !listed_only.is_empty() || !computed_only.is_empty() {
            diffs.push(ReferenceDiff {
                name: name.to_string(),
                line: best,
                listed_only,
                computed_only,
            });
        }
    }
    PaperLabeling {
        point_labels,
        index,
        line_names,
        diffs,
        reference: true,
    }
}

fn canonical(geo: &IncidenceGeometry) -> PaperLabeling {
    let point_labels: Vec<String> = geo.points().iter().map(ToString::to_string).collect();
    let index = point_labels
        .iter()
        .enumerate()
        .map(|(i, l)| (l.clone(), i))
        .collect();
    PaperLabeling {
        point_labels,
        index,
        line_names: vec![None; geo.lines().len()],
        diffs: Vec::new(),
        reference: false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::build_geometry;
    use crate::pauli::SystemSpec;

    fn geo(d: &[u32]) -> IncidenceGeometry {
        build_geometry(&SystemSpec::new(d.to_vec()).unwrap()).unwrap()
    }

    #[test]
    fn qubit_qutrit_labels_are_bijective() {
        let g = geo(&[2, 3]);
        let lab = paper_labels(&g);
        assert!(lab.is_reference());
        let mut all: Vec<&String> = lab.labels().iter().collect();
        all.sort();
        all.dedup();
        assert_eq!(all.len(), 35);
        let a = lab.point("a").unwrap();
        assert_eq!(g.points()[a].exponents(), &[(0, 1), (0, 0)]);
        let b = lab.point("b").unwrap();
        assert_eq!(g.points()[b].exponents(), &[(1, 0), (0, 0)]);
        assert_eq!(
            lab.point("32").map(|p| g.points()[p].exponents().to_vec()),
            Some(vec![(1, 1), (2, 1)])
        );
    }

    #[test]
    fn two_qutrit_labels_cover_alphabet() {
        let g = geo(&[3, 3]);
        let lab = paper_labels(&g);
        for l in (1..=72)
            .map(|i| i.to_string())
            .chain("abcdefgh".chars().map(String::from))
        {
            assert!(lab.point(&l).is_some(), "{l}");
        }
        assert_eq!(lab.labels().len(), 80);
    }

    #[test]
    fn reference_lines_exist() {
        let g = geo(&[2, 3]);
        let lab = paper_labels(&g);
        let l1 = lab.points(&["1", "5", "a", "9", "13"]).unwrap();
        assert!(g.lines().contains(&l1));
        assert_eq!(
            lab.line_by_name("L1").map(|l| g.lines()[l].clone()),
            Some(l1)
        );

        let g = geo(&[3, 3]);
        let lab = paper_labels(&g);
        let l1 = lab
            .points(&["1", "5", "a", "9", "13", "e", "41", "45"])
            .unwrap();
        assert!(g.lines().contains(&l1));
    }

    #[test]
    fn every_line_gets_a_name() {
        for d in [[2, 3], [3, 3]] {
            let g = geo(&d);
            let lab = paper_labels(&g);
            assert!((0..g.lines().len()).all(|l| !lab.line_name(l).starts_with('#')));
        }
    }

    #[test]
    fn table_discrepancies() {
        let lab = paper_labels(&geo(&[2, 3]));
        assert_eq!(
            lab.diffs(),
            &[ReferenceDiff {
                name: "M4".to_string(),
                line: lab.line_by_name("M4").unwrap(),
                listed_only: vec!["19".to_string()],
                computed_only: vec!["20".to_string()],
            }]
        );
        assert!(paper_labels(&geo(&[3, 3])).diffs().is_empty());
    }

    #[test]
    fn other_systems_fall_back() {
        let g = geo(&[2, 2]);
        let lab = paper_labels(&g);
        assert!(!lab.is_reference());
        assert_eq!(lab.label(0), "I.Z");
        assert_eq!(lab.line_name(0), "#0");
    }
}
