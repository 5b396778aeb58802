//! Finite products of residue rings and their projective lines.
//!
//! Elements of `Z_{m_1} x ... x Z_{m_k}` are indexed in mixed radix with the
//! first component most significant, so for `Z_2 x Z_3` the indices
//! `0..6` are `(0,0), (0,1), (0,2), (1,0), (1,1), (1,2)`.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graphs::Graph;

/// Largest ring order for which the projective line is enumerated.
pub const MAX_RING_ORDER: usize = 64;

pub type Element = usize;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProductRing {
    moduli: Vec<u32>,
    order: usize,
    add: Vec<Element>,
    mul: Vec<Element>,
}

impl ProductRing {
    pub fn new(moduli: Vec<u32>) -> Result<Self> {
        if moduli.is_empty() {
            return Err(Error::InvalidModulus(0));
        }
        if let Some(&m) = moduli.iter().find(|&&m| m < 2) {
            return Err(Error::InvalidModulus(m));
        }
        let order: usize = moduli.iter().map(|&m| m as usize).product();
        if order > MAX_RING_ORDER {
            return Err(Error::DimensionCap {
                dim: order,
                cap: MAX_RING_ORDER,
            });
        }
        let mut ring = Self {
            moduli,
            order,
            add: Vec::new(),
            mul: Vec::new(),
        };
        let op = |ring: &Self, f: fn(u32, u32, u32) -> u32| -> Vec<Element> {
            let mut table = Vec::with_capacity(order * order);
            for a in 0..order {
                let ra = ring.residues(a);
                for b in 0..order {
                    let rb = ring.residues(b);
                    let rc: Vec<u32> = ra
                        .iter()
                        .zip(&rb)
                        .zip(&ring.moduli)
                        .map(|((&x, &y), &m)| f(x, y, m))
                        .collect();
                    table.push(ring.index_of(&rc));
                }
            }
            table
        };
        ring.add = op(&ring, |x, y, m| (x + y) % m);
        ring.mul = op(&ring, |x, y, m| (x * y) % m);
        Ok(ring)
    }

    pub fn moduli(&self) -> &[u32] {
        &self.moduli
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn residues(&self, e: Element) -> Vec<u32> {
        let mut out = vec![0; self.moduli.len()];
        let mut rest = e;
        for (slot, &m) in out.iter_mut().zip(&self.moduli).rev() {
            *slot = (rest % m as usize) as u32;
            rest /= m as usize;
        }
        out
    }

    pub fn index_of(&self, residues: &[u32]) -> Element {
        residues
            .iter()
            .zip(&self.moduli)
            .fold(0, |acc, (&r, &m)| acc * m as usize + (r % m) as usize)
    }

    pub fn zero(&self) -> Element {
        0
    }

    pub fn one(&self) -> Element {
        self.index_of(&vec![1; self.moduli.len()])
    }

    fn check(&self, e: Element) -> Result<()> {
        if e >= self.order {
            return Err(Error::ElementOutOfRange {
                element: e,
                order: self.order,
            });
        }
        Ok(())
    }

    pub fn add(&self, a: Element, b: Element) -> Element {
        self.add[a * self.order + b]
    }

    pub fn mul(&self, a: Element, b: Element) -> Element {
        self.mul[a * self.order + b]
    }

    pub fn neg(&self, a: Element) -> Element {
        let r: Vec<u32> = self
            .residues(a)
            .iter()
            .zip(&self.moduli)
            .map(|(&x, &m)| (m - x) % m)
            .collect();
        self.index_of(&r)
    }

    pub fn is_unit(&self, a: Element) -> bool {
        let one = self.one();
        (0..self.order).any(|b| self.mul(a, b) == one)
    }

    /// `a d - b c`
    pub fn det(&self, a: Element, b: Element, c: Element, d: Element) -> Element {
        self.add(self.mul(a, d), self.neg(self.mul(b, c)))
    }

    /// Primed index for `Z_2 x Z_3` (`4'`), residue tuple otherwise (`(1,1)`).
    pub fn element_label(&self, e: Element) -> String {
        if self.moduli == [2, 3] {
            format!("{e}'")
        } else {
            let parts: Vec<String> = self.residues(e).iter().map(u32::to_string).collect();
            format!("({})", parts.join(","))
        }
    }
}

/// Units and non-units. Zero is counted among the zero divisors.
pub fn classify_elements(ring: &ProductRing) -> (Vec<Element>, Vec<Element>) {
    (0..ring.order()).partition(|&e| ring.is_unit(e))
}

/// Addition and multiplication tables, `table[a][b]`.
pub fn ring_tables(ring: &ProductRing) -> (Vec<Vec<Element>>, Vec<Vec<Element>>) {
    let n = ring.order();
    let build = |f: &dyn Fn(Element, Element) -> Element| -> Vec<Vec<Element>> {
        (0..n).map(|a| (0..n).map(|b| f(a, b)).collect()).collect()
    };
    (build(&|a, b| ring.add(a, b)), build(&|a, b| ring.mul(a, b)))
}

/// Whether `(a, b)` is the first row of some invertible 2x2 matrix,
/// by searching all completions `(c, d)`.
pub fn is_admissible(ring: &ProductRing, a: Element, b: Element) -> Result<bool> {
    ring.check(a)?;
    ring.check(b)?;
    let n = ring.order();
    Ok((0..n).any(|c| (0..n).any(|d| ring.is_unit(ring.det(a, b, c, d)))))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum PointKind {
    /// One coordinate a unit, the other not.
    UnitAndZeroDivisor,
    BothUnits,
    BothZeroDivisors,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProjectivePoint {
    /// Lexicographically least member of the class.
    pub representative: (Element, Element),
    /// All unit multiples of the representative, sorted.
    pub class: Vec<(Element, Element)>,
    pub kind: PointKind,
}

/// Unit-rescaling classes of admissible pairs, ordered by representative.
pub fn projective_line(ring: &ProductRing) -> Vec<ProjectivePoint> {
    let n = ring.order();
    let (units, _) = classify_elements(ring);
    let mut seen = BTreeSet::new();
    let mut points = Vec::new();
    for a in 0..n {
        for b in 0..n {
            if seen.contains(&(a, b)) || !is_admissible(ring, a, b).expect("in range") {
                continue;
            }
            let class: BTreeSet<(Element, Element)> = units
                .iter()
                .map(|&u| (ring.mul(u, a), ring.mul(u, b)))
                .collect();
            seen.extend(class.iter().copied());
            let kind = match (ring.is_unit(a), ring.is_unit(b)) {
                (true, true) => PointKind::BothUnits,
                (false, false) => PointKind::BothZeroDivisors,
                _ => PointKind::UnitAndZeroDivisor,
            };
            points.push(ProjectivePoint {
                representative: (a, b),
                class: class.into_iter().collect(),
                kind,
            });
        }
    }
    points
}

/// Two distinct points are neighbours when the matrix of their
/// representatives is not invertible.
pub fn neighbor(ring: &ProductRing, x: &ProjectivePoint, y: &ProjectivePoint) -> Result<bool> {
    if x.representative == y.representative {
        return Err(Error::SamePoint);
    }
    let (a, b) = x.representative;
    let (c, d) = y.representative;
    for e in [a, b, c, d] {
        ring.check(e)?;
    }
    Ok(!ring.is_unit(ring.det(a, b, c, d)))
}

/// Graph on [`projective_line`] joining neighbouring points.
pub fn neighbor_graph(ring: &ProductRing) -> Graph {
    let points = projective_line(ring);
    let mut g = Graph::empty(points.len());
    for i in 0..points.len() {
        for j in i + 1..points.len() {
            if neighbor(ring, &points[i], &points[j]).expect("distinct points") {
                g.add_edge(i, j).expect("distinct in-range vertices");
            }
        }
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::{complete_bipartite, is_isomorphic, line_graph, spectrum_exact, Spectrum};

    fn z2z3() -> ProductRing {
        ProductRing::new(vec![2, 3]).unwrap()
    }

    #[test]
    fn rejects_bad_moduli() {
        assert_eq!(ProductRing::new(vec![]), Err(Error::InvalidModulus(0)));
        assert_eq!(ProductRing::new(vec![2, 1]), Err(Error::InvalidModulus(1)));
        assert!(matches!(
            ProductRing::new(vec![5, 5, 5]),
            Err(Error::DimensionCap { .. })
        ));
    }

    #[test]
    fn element_encoding() {
        let r = z2z3();
        assert_eq!(r.residues(4), vec![1, 1]);
        assert_eq!(r.index_of(&[1, 2]), 5);
        assert_eq!(r.one(), 4);
        assert_eq!(r.element_label(3), "3'");
        let s = ProductRing::new(vec![3, 3]).unwrap();
        assert_eq!(s.element_label(5), "(1,2)");
    }

    #[test]
    fn table_entries() {
        let r = z2z3();
        let (add, mul) = ring_tables(&r);
        assert_eq!(add[3][4], 1);
        assert_eq!(mul[5][5], 4);
        assert!((0..6).all(|x| add[0][x] == x));
    }

    #[test]
    fn unit_classification() {
        assert_eq!(classify_elements(&z2z3()), (vec![4, 5], vec![0, 1, 2, 3]));
        assert_eq!(
            classify_elements(&ProductRing::new(vec![2]).unwrap()),
            (vec![1], vec![0])
        );
        let (u, z) = classify_elements(&ProductRing::new(vec![3, 3]).unwrap());
        assert_eq!((u.len(), z.len()), (4, 5));
    }

    #[test]
    fn admissibility() {
        let r = z2z3();
        assert!(is_admissible(&r, 4, 0).unwrap());
        assert!(is_admissible(&r, 1, 3).unwrap());
        assert!(!is_admissible(&r, 0, 0).unwrap());
        assert!(!is_admissible(&r, 1, 2).unwrap());
        assert!(is_admissible(&r, 6, 0).is_err());
    }

    #[test]
    fn qubit_qutrit_line() {
        let r = z2z3();
        let line = projective_line(&r);
        assert_eq!(line.len(), 12);
        let reps: Vec<(usize, usize)> = line.iter().map(|p| p.representative).collect();
        let expect = [
            (0, 4),
            (1, 3),
            (1, 4),
            (1, 5),
            (3, 1),
            (3, 4),
            (4, 0),
            (4, 1),
            (4, 2),
            (4, 3),
            (4, 4),
            (4, 5),
        ];
        assert_eq!(reps, expect);
        let count = |k| line.iter().filter(|p| p.kind == k).count();
        assert_eq!(count(PointKind::UnitAndZeroDivisor), 8);
        assert_eq!(count(PointKind::BothUnits), 2);
        assert_eq!(count(PointKind::BothZeroDivisors), 2);
    }

    #[test]
    fn small_lines() {
        let z2 = ProductRing::new(vec![2]).unwrap();
        let reps: Vec<_> = projective_line(&z2)
            .iter()
            .map(|p| p.representative)
            .collect();
        assert_eq!(reps, vec![(0, 1), (1, 0), (1, 1)]);
        assert_eq!(
            projective_line(&ProductRing::new(vec![2, 2]).unwrap()).len(),
            9
        );
    }

    #[test]
    fn neighbour_examples() {
        let r = z2z3();
        let line = projective_line(&r);
        let find = |rep| line.iter().find(|p| p.representative == rep).unwrap();
        assert!(neighbor(&r, find((4, 4)), find((4, 5))).unwrap());
        assert_eq!(
            neighbor(&r, find((4, 4)), find((4, 4))),
            Err(Error::SamePoint)
        );
        let z3 = ProductRing::new(vec![3]).unwrap();
        let pts = projective_line(&z3);
        for i in 0..pts.len() {
            for j in i + 1..pts.len() {
                assert!(!neighbor(&z3, &pts[i], &pts[j]).unwrap());
            }
        }
    }

    #[test]
    fn neighbour_relation_is_class_invariant() {
        for moduli in [vec![2, 3], vec![2, 2], vec![3, 3], vec![6], vec![4]] {
            let r = ProductRing::new(moduli).unwrap();
            let line = projective_line(&r);
            for i in 0..line.len() {
                for j in 0..line.len() {
                    if i == j {
                        continue;
                    }
                    let expect = neighbor(&r, &line[i], &line[j]).unwrap();
                    assert_eq!(expect, neighbor(&r, &line[j], &line[i]).unwrap());
                    for &(a, b) in &line[i].class {
                        for &(c, d) in &line[j].class {
                            assert_eq!(!r.is_unit(r.det(a, b, c, d)), expect);
                        }
                    }
                }
            }
        }
    }

    fn squarefree_prime_factors(m: u32) -> Option<Vec<u32>> {
        let mut out = Vec::new();
        let mut rest = m;
        let mut p = 2;
        while rest > 1 {
            if rest.is_multiple_of(p) {
                rest /= p;
                if rest.is_multiple_of(p) {
                    return None;
                }
                out.push(p);
            }
            p += 1;
        }
        Some(out)
    }

    #[test]
    fn point_count_for_squarefree_moduli() {
        // every product of square-free moduli with at most 36 elements
        fn lists(max: u32, prefix: Vec<u32>, out: &mut Vec<Vec<u32>>) {
            for m in 2..=max {
                let mut next = prefix.clone();
                next.push(m);
                out.push(next.clone());
                lists(max / m, next, out);
            }
        }
        let mut all = Vec::new();
        lists(36, Vec::new(), &mut all);
        let mut checked = 0;
        for moduli in all {
            let Some(primes) = moduli
                .iter()
                .map(|&m| squarefree_prime_factors(m))
                .collect::<Option<Vec<_>>>()
            else {
                continue;
            };
            let expect: usize = primes.iter().flatten().map(|&p| p as usize + 1).product();
            let ring = ProductRing::new(moduli.clone()).unwrap();
            assert_eq!(projective_line(&ring).len(), expect, "{moduli:?}");
            checked += 1;
        }
        assert!(checked > 30);
    }

    #[test]
    fn field_lines_have_no_neighbours() {
        for p in [2, 3, 5, 7] {
            let g = neighbor_graph(&ProductRing::new(vec![p]).unwrap());
            assert_eq!(g.order(), p as usize + 1);
            assert_eq!(g.edge_count(), 0);
        }
    }

    #[test]
    fn neighbour_graphs() {
        let g = neighbor_graph(&z2z3());
        assert_eq!(
            spectrum_exact(&g).unwrap(),
            Spectrum::from_pairs(&[(-2, 6), (1, 3), (2, 2), (5, 1)])
        );
        let grid = neighbor_graph(&ProductRing::new(vec![2, 2]).unwrap());
        assert!(is_isomorphic(&grid, &line_graph(&complete_bipartite(3, 3))).is_some());
    }
}
