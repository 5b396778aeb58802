use std::collections::BTreeMap;

use super::Graph;

fn use_weights(g: &Graph, h: &Graph) -> bool {
    g.is_weighted() && h.is_weighted()
}

/// Checks that `map` (vertex of `g` -> vertex of `h`) is a bijection that
/// carries the edge set of `g` exactly onto that of `h`, with equal weights
/// when both graphs are weighted.
pub fn verify_isomorphism(g: &Graph, h: &Graph, map: &[usize]) -> bool {
    let n = g.order();
    if h.order() != n || map.len() != n || g.edge_count() != h.edge_count() {
        return false;
    }
    let mut seen = vec![false; n];
    for &t in map {
        if t >= n || std::mem::replace(&mut seen[t], true) {
            return false;
        }
    }
    let weighted = use_weights(g, h);
    g.edges().into_iter().all(|(u, v)| {
        if weighted {
            g.weight(u, v) == h.weight(map[u], map[v])
        } else {
            h.has_edge(map[u], map[v])
        }
    })
}

/// Stable colouring of both graphs with a shared palette.
fn refine(g: &Graph, h: &Graph, weighted: bool) -> (Vec<usize>, Vec<usize>) {
    let incident = |x: &Graph, v: usize| -> Vec<u32> {
        let mut ws: Vec<u32> = if weighted {
            x.neighbors(v)
                .map(|u| x.weight(v, u).unwrap_or(1))
                .collect()
        } else {
            Vec::new()
        };
        ws.sort_unstable();
        ws
    };
    let mut palette = BTreeMap::new();
    let mut initial = |x: &Graph| -> Vec<usize> {
        (0..x.order())
            .map(|v| {
                let key = (x.degree(v), incident(x, v));
                let next = palette.len();
                *palette.entry(key).or_insert(next)
            })
            .collect()
    };
    let mut cg = initial(g);
    let mut ch = initial(h);
    let mut classes = palette.len();
    loop {
        let mut palette = BTreeMap::new();
        let mut step = |x: &Graph, colours: &[usize]| -> Vec<usize> {
            (0..x.order())
                .map(|v| {
                    let mut sig: Vec<(usize, u32)> = x
                        .neighbors(v)
                        .map(|u| {
                            (
                                colours[u],
                                if weighted {
                                    x.weight(v, u).unwrap_or(1)
                                } else {
                                    1
                                },
                            )
                        })
                        .collect();
                    sig.sort_unstable();
                    let next = palette.len();
                    *palette.entry((colours[v], sig)).or_insert(next)
                })
                .collect()
        };
        let ng = step(g, &cg);
        let nh = step(h, &ch);
        let refined = palette.len();
        cg = ng;
        ch = nh;
        if refined == classes {
            return (cg, ch);
        }
        classes = refined;
    }
}

fn histogram(colours: &[usize]) -> BTreeMap<usize, usize> {
    let mut hist = BTreeMap::new();
    for &c in colours {
        *hist.entry(c).or_insert(0) += 1;
    }
    hist
}

/// A vertex bijection `g -> h` preserving adjacency (and weights when both
/// graphs are weighted), or `None`. A returned map has been re-checked
/// edge by edge.
pub fn is_isomorphic(g: &Graph, h: &Graph) -> Option<Vec<usize>> {
    let n = g.order();
    if h.order() != n || g.edge_count() != h.edge_count() {
        return None;
    }
    let weighted = use_weights(g, h);
    let (cg, ch) = refine(g, h, weighted);
    let hist = histogram(&cg);
    if hist != histogram(&ch) {
        return None;
    }

    // match small colour classes first, then stay connected to placed vertices
    let mut order = Vec::with_capacity(n);
    let mut placed = vec![false; n];
    let mut links = vec![0usize; n];
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !placed[v])
            .min_by_key(|&v| (std::cmp::Reverse(links[v]), hist[&cg[v]], v))
            .expect("unplaced vertex remains");
        placed[v] = true;
        order.push(v);
        for u in g.neighbors(v) {
            links[u] += 1;
        }
    }

    let mut matcher = Matcher {
        g,
        h,
        weighted,
        cg: &cg,
        ch: &ch,
        order: &order,
        map: vec![usize::MAX; n],
        used: vec![false; n],
    };
    if !matcher.extend(0) {
        return None;
    }
    let map = matcher.map;
    verify_isomorphism(g, h, &map).then_some(map)
}

struct Matcher<'a> {
    g: &'a Graph,
    h: &'a Graph,
    weighted: bool,
    cg: &'a [usize],
    ch: &'a [usize],
    order: &'a [usize],
    map: Vec<usize>,
    used: Vec<bool>,
}

impl Matcher<'_> {
    fn consistent(&self, depth: usize, v: usize, t: usize) -> bool {
        self.order[..depth].iter().all(|&u| {
            let mu = self.map[u];
            if self.weighted {
                self.g.weight(v, u) == self.h.weight(t, mu)
            } else {
                self.g.has_edge(v, u) == self.h.has_edge(t, mu)
            }
        })
    }

    fn extend(&mut self, depth: usize) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let v = self.order[depth];
        for t in 0..self.h.order() {
            if self.used[t] || self.ch[t] != self.cg[v] || !self.consistent(depth, v, t) {
                continue;
            }
            self.map[v] = t;
            self.used[t] = true;
            if self.extend(depth + 1) {
                return true;
            }
            self.used[t] = false;
        }
        self.map[v] = usize::MAX;
        false
    }
}
