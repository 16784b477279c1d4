//! Pattern subgraphs of the dual whose edge sets, used as twist sets,
//! give re-embeddings on the projective plane, torus and Klein bottle.
//!
//! Patterns are matched as edge sets, not induced subgraphs: extra edges
//! among the chosen vertices are allowed. Results are deduplicated by
//! edge set and returned in [`EdgeSet`] order.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::graph::{EdgeSet, Graph};
use crate::scheme::Surface;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum PatternKind {
    K2,
    K4,
    /// An edge `xy` plus `m` common neighbors of `x` and `y`.
    K11m { m: usize },
    /// `K_{2,m}`; the flag holds when every part of size two is an
    /// independent pair in the host graph.
    K2m { m: usize, size2_parts_nonadjacent: bool },
    K222,
    /// Two vertex-disjoint edges.
    A1,
    /// An edge and a vertex-disjoint `K4`.
    A2,
    /// Two vertex-disjoint `K4`s.
    A3,
    /// A `K4` with a pendant edge.
    A4,
    /// Two `K4`s sharing one vertex.
    A5,
    /// `c` and `d` both joined to `a, b, e, f`, plus edges `ab` and `ef`.
    A6,
}

impl fmt::Display for PatternKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PatternKind::K2 => f.write_str("K2"),
            PatternKind::K4 => f.write_str("K4"),
            PatternKind::K11m { m } => write!(f, "K_{{1,1,{m}}}"),
            PatternKind::K2m { m, .. } => write!(f, "K_{{2,{m}}}"),
            PatternKind::K222 => f.write_str("K_{2,2,2}"),
            PatternKind::A1 => f.write_str("A1"),
            PatternKind::A2 => f.write_str("A2"),
            PatternKind::A3 => f.write_str("A3"),
            PatternKind::A4 => f.write_str("A4"),
            PatternKind::A5 => f.write_str("A5"),
            PatternKind::A6 => f.write_str("A6"),
        }
    }
}

/// One of the six `A` patterns.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum APattern {
    A1,
    A2,
    A3,
    A4,
    A5,
    A6,
}

impl APattern {
    pub const ALL: [APattern; 6] = [APattern::A1, APattern::A2, APattern::A3, APattern::A4, APattern::A5, APattern::A6];

    fn kind(self) -> PatternKind {
        match self {
            APattern::A1 => PatternKind::A1,
            APattern::A2 => PatternKind::A2,
            APattern::A3 => PatternKind::A3,
            APattern::A4 => PatternKind::A4,
            APattern::A5 => PatternKind::A5,
            APattern::A6 => PatternKind::A6,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
    Any,
}

impl Parity {
    fn accepts(self, m: usize) -> bool {
        match self {
            Parity::Even => m.is_multiple_of(2),
            Parity::Odd => !m.is_multiple_of(2),
            Parity::Any => true,
        }
    }
}

/// A pattern occurrence in the dual: vertex set, edge set and kind.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TwistedSubgraph {
    pub vertices: Vec<usize>,
    pub edges: EdgeSet,
    pub kind: PatternKind,
}

impl TwistedSubgraph {
    fn from_pairs(g: &Graph, pairs: &[(usize, usize)], kind: PatternKind) -> Self {
        let edges = EdgeSet::from_indices(
            g.edge_count(),
            pairs.iter().map(|&(a, b)| g.edge_index(a, b).expect("pattern edge present in host")),
        );
        let mut vertices: Vec<usize> = pairs.iter().flat_map(|&(a, b)| [a, b]).collect();
        vertices.sort_unstable();
        vertices.dedup();
        TwistedSubgraph { vertices, edges, kind }
    }
}

/// Collects subgraphs keyed by edge set, keeping the first kind seen.
#[derive(Default)]
struct Collector(BTreeMap<EdgeSet, TwistedSubgraph>);

impl Collector {
    fn add(&mut self, h: TwistedSubgraph) {
        self.0.entry(h.edges.clone()).or_insert(h);
    }

    fn finish(self) -> Vec<TwistedSubgraph> {
        self.0.into_values().collect()
    }
}

fn common_neighbors(g: &Graph, u: usize, v: usize) -> Vec<usize> {
    g.neighbors(u).filter(|&w| g.has_edge(v, w)).collect()
}

/// All `k`-subsets of `items`, in lexicographic order of positions.
fn subsets<T: Copy>(items: &[T], k: usize, out: &mut Vec<Vec<T>>) {
    fn rec<T: Copy>(items: &[T], k: usize, start: usize, cur: &mut Vec<T>, out: &mut Vec<Vec<T>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..items.len() {
            if items.len() - i < k - cur.len() {
                break;
            }
            cur.push(items[i]);
            rec(items, k, i + 1, cur, out);
            cur.pop();
        }
    }
    rec(items, k, 0, &mut Vec::new(), out);
}

/// Every single edge.
pub fn find_k2(g: &Graph) -> Vec<TwistedSubgraph> {
    g.edges().iter().map(|&p| TwistedSubgraph::from_pairs(g, &[p], PatternKind::K2)).collect()
}

/// Vertex sets of all 4-cliques, each sorted.
fn k4_vertex_sets(g: &Graph) -> Vec<[usize; 4]> {
    let mut out = Vec::new();
    for &(a, b) in g.edges() {
        let common = common_neighbors(g, a, b);
        for (i, &c) in common.iter().enumerate() {
            if c < b {
                continue;
            }
            for &d in &common[i + 1..] {
                if g.has_edge(c, d) {
                    out.push([a, b, c, d]);
                }
            }
        }
    }
    out.sort_unstable();
    out
}

fn k4_pairs(q: &[usize; 4]) -> Vec<(usize, usize)> {
    let mut p = Vec::with_capacity(6);
    for i in 0..4 {
        for j in i + 1..4 {
            p.push((q[i], q[j]));
        }
    }
    p
}

pub fn find_k4(g: &Graph) -> Vec<TwistedSubgraph> {
    let mut c = Collector::default();
    for q in k4_vertex_sets(g) {
        c.add(TwistedSubgraph::from_pairs(g, &k4_pairs(&q), PatternKind::K4));
    }
    c.finish()
}

fn k2m_with(g: &Graph, accept: impl Fn(usize) -> bool) -> Vec<TwistedSubgraph> {
    let n = g.vertex_count();
    let mut c = Collector::default();
    let mut chosen = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            let common = common_neighbors(g, u, v);
            for m in 1..=common.len() {
                if !accept(m) {
                    continue;
                }
                chosen.clear();
                subsets(&common, m, &mut chosen);
                for w in &chosen {
                    let pairs: Vec<(usize, usize)> = w.iter().flat_map(|&x| [(u, x), (v, x)]).collect();
                    let nonadjacent = !g.has_edge(u, v) && (m != 2 || !g.has_edge(w[0], w[1]));
                    c.add(TwistedSubgraph::from_pairs(
                        g,
                        &pairs,
                        PatternKind::K2m { m, size2_parts_nonadjacent: nonadjacent },
                    ));
                }
            }
        }
    }
    c.finish()
}

/// All `K_{2,m}` with `m >= 2` of the given parity.
pub fn find_k2m(g: &Graph, parity: Parity) -> Vec<TwistedSubgraph> {
    k2m_with(g, |m| m >= 2 && parity.accepts(m))
}

/// All paths with two edges, i.e. `K_{2,1}`.
pub fn find_k21(g: &Graph) -> Vec<TwistedSubgraph> {
    k2m_with(g, |m| m == 1)
}

/// All `K_{1,1,m}` (`m >= 1`) of the given parity.
pub fn find_k11m(g: &Graph, parity: Parity) -> Vec<TwistedSubgraph> {
    let mut c = Collector::default();
    let mut chosen = Vec::new();
    for &(x, y) in g.edges() {
        let common = common_neighbors(g, x, y);
        for m in 1..=common.len() {
            if !parity.accepts(m) {
                continue;
            }
            chosen.clear();
            subsets(&common, m, &mut chosen);
            for w in &chosen {
                let mut pairs = vec![(x, y)];
                pairs.extend(w.iter().flat_map(|&z| [(x, z), (y, z)]));
                c.add(TwistedSubgraph::from_pairs(g, &pairs, PatternKind::K11m { m }));
            }
        }
    }
    c.finish()
}

/// All octahedral subgraphs.
pub fn find_k222(g: &Graph) -> Vec<TwistedSubgraph> {
    let n = g.vertex_count();
    let mut c = Collector::default();
    let mut quads = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            let common = common_neighbors(g, a, b);
            quads.clear();
            subsets(&common, 4, &mut quads);
            for q in &quads {
                // the three ways to split q into two opposite pairs
                for [p, r, s, t] in [[q[0], q[1], q[2], q[3]], [q[0], q[2], q[1], q[3]], [q[0], q[3], q[1], q[2]]] {
                    // opposite pairs {p, r} and {s, t}: need the 4-cycle p-s-r-t
                    if g.has_edge(p, s) && g.has_edge(s, r) && g.has_edge(r, t) && g.has_edge(t, p) {
                        let mut pairs: Vec<(usize, usize)> = [p, r, s, t].iter().flat_map(|&x| [(a, x), (b, x)]).collect();
                        pairs.extend([(p, s), (s, r), (r, t), (t, p)]);
                        c.add(TwistedSubgraph::from_pairs(g, &pairs, PatternKind::K222));
                    }
                }
            }
        }
    }
    c.finish()
}

fn disjoint(a: &[usize], b: &[usize]) -> bool {
    a.iter().all(|x| !b.contains(x))
}

fn shared(a: &[usize], b: &[usize]) -> usize {
    a.iter().filter(|x| b.contains(x)).count()
}

/// All occurrences of one `A` pattern.
pub fn find_a(g: &Graph, which: APattern) -> Vec<TwistedSubgraph> {
    let kind = which.kind();
    let mut c = Collector::default();
    let edges = g.edges();
    let k4s = || k4_vertex_sets(g);
    match which {
        APattern::A1 => {
            for (i, &(a, b)) in edges.iter().enumerate() {
                for &(x, y) in &edges[i + 1..] {
                    if disjoint(&[a, b], &[x, y]) {
                        c.add(TwistedSubgraph::from_pairs(g, &[(a, b), (x, y)], kind));
                    }
                }
            }
        }
        APattern::A2 | APattern::A4 => {
            let want = if which == APattern::A2 { 0 } else { 1 };
            for q in k4s() {
                for &(x, y) in edges {
                    if shared(&q, &[x, y]) == want {
                        let mut pairs = k4_pairs(&q);
                        pairs.push((x, y));
                        c.add(TwistedSubgraph::from_pairs(g, &pairs, kind));
                    }
                }
            }
        }
        APattern::A3 | APattern::A5 => {
            let want = if which == APattern::A3 { 0 } else { 1 };
            let qs = k4s();
            for (i, p) in qs.iter().enumerate() {
                for q in &qs[i + 1..] {
                    if shared(p, q) == want {
                        let mut pairs = k4_pairs(p);
                        pairs.extend(k4_pairs(q));
                        c.add(TwistedSubgraph::from_pairs(g, &pairs, kind));
                    }
                }
            }
        }
        APattern::A6 => {
            let n = g.vertex_count();
            for cv in 0..n {
                for dv in cv + 1..n {
                    let common = common_neighbors(g, cv, dv);
                    let inner: Vec<(usize, usize)> = common
                        .iter()
                        .enumerate()
                        .flat_map(|(i, &x)| common[i + 1..].iter().map(move |&y| (x, y)))
                        .filter(|&(x, y)| g.has_edge(x, y))
                        .collect();
                    for (i, &(a, b)) in inner.iter().enumerate() {
                        for &(e, f) in &inner[i + 1..] {
                            if !disjoint(&[a, b], &[e, f]) {
                                continue;
                            }
                            let mut pairs: Vec<(usize, usize)> =
                                [a, b, e, f].iter().flat_map(|&x| [(cv, x), (dv, x)]).collect();
                            pairs.extend([(a, b), (e, f)]);
                            c.add(TwistedSubgraph::from_pairs(g, &pairs, kind));
                        }
                    }
                }
            }
        }
    }
    c.finish()
}

/// The pattern subgraphs whose twist sets give re-embeddings on `surface`
/// (all of them, or only the strong ones).
///
/// Panics if `surface` is not one of [`Surface::TARGETS`].
pub fn enumerate_twisted_subgraphs(g: &Graph, surface: Surface, strong_only: bool) -> Vec<TwistedSubgraph> {
    let mut out: Vec<TwistedSubgraph> = Vec::new();
    let nonadjacent = |h: &TwistedSubgraph| {
        matches!(h.kind, PatternKind::K2m { size2_parts_nonadjacent: true, .. })
    };
    match (surface, strong_only) {
        (Surface::ProjectivePlane, true) => out.extend(find_k4(g)),
        (Surface::ProjectivePlane, false) => {
            out.extend(find_k2(g));
            out.extend(find_k4(g));
        }
        (Surface::Torus, true) => {
            out.extend(find_k222(g));
            out.extend(k2m_with(g, |m| m % 2 == 0).into_iter().filter(nonadjacent));
        }
        (Surface::Torus, false) => {
            out.extend(find_k222(g));
            out.extend(k2m_with(g, |m| m % 2 == 0));
            out.extend(find_k11m(g, Parity::Odd));
        }
        (Surface::KleinBottle, true) => {
            for a in [APattern::A3, APattern::A5, APattern::A6] {
                out.extend(find_a(g, a));
            }
            out.extend(find_k2m(g, Parity::Odd).into_iter().filter(nonadjacent));
        }
        (Surface::KleinBottle, false) => {
            for a in APattern::ALL {
                out.extend(find_a(g, a));
            }
            out.extend(k2m_with(g, |m| m % 2 == 1));
            out.extend(find_k11m(g, Parity::Even));
        }
        (s, _) => panic!("no pattern families for {s}"),
    }
    out.sort_by(|a, b| a.edges.cmp(&b.edges));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::canonical_form;
    use crate::families;

    fn bipyramid() -> Graph {
        // equator 0-1-2, apexes 3 and 4
        Graph::new(5, [(0, 1), (1, 2), (0, 2), (0, 3), (1, 3), (2, 3), (0, 4), (1, 4), (2, 4)]).unwrap()
    }

    /// Reference graph of a pattern kind, built independently of the finders.
    fn reference(kind: PatternKind) -> Graph {
        let k4 = |o: usize| (0..4).flat_map(move |i| (i + 1..4).map(move |j| (o + i, o + j)));
        match kind {
            PatternKind::K2 => Graph::new(2, [(0, 1)]).unwrap(),
            PatternKind::K4 => families::k4(),
            PatternKind::K11m { m } => {
                Graph::new(m + 2, std::iter::once((0, 1)).chain((2..m + 2).flat_map(|z| [(0, z), (1, z)]))).unwrap()
            }
            PatternKind::K2m { m, .. } => families::complete_bipartite(2, m),
            PatternKind::K222 => families::octahedron(),
            PatternKind::A1 => Graph::new(4, [(0, 1), (2, 3)]).unwrap(),
            PatternKind::A2 => Graph::new(6, k4(0).chain([(4, 5)])).unwrap(),
            PatternKind::A3 => Graph::new(8, k4(0).chain(k4(4))).unwrap(),
            PatternKind::A4 => Graph::new(5, k4(0).chain([(3, 4)])).unwrap(),
            PatternKind::A5 => Graph::new(7, k4(0).chain(k4(3))).unwrap(),
            PatternKind::A6 => Graph::new(
                6,
                [(0, 1), (4, 5)].into_iter().chain([0, 1, 4, 5].iter().flat_map(|&x| [(2, x), (3, x)])),
            )
            .unwrap(),
        }
    }

    fn check_all(g: &Graph, found: &[TwistedSubgraph]) {
        let mut sets = std::collections::BTreeSet::new();
        for h in found {
            let (sub, vmap, _) = g.edge_subgraph(&h.edges);
            assert_eq!(vmap, h.vertices);
            assert_eq!(canonical_form(&sub), canonical_form(&reference(h.kind)), "{:?}", h.kind);
            assert!(sets.insert(h.edges.clone()), "duplicate edge set");
        }
    }

    #[test]
    fn k4_counts() {
        assert_eq!(find_k4(&families::k4()).len(), 1);
        assert_eq!(find_k4(&bipyramid()).len(), 2);
        assert_eq!(find_k4(&families::icosahedron()).len(), 0);
    }

    #[test]
    fn k2m_on_bipyramid() {
        let g = bipyramid();
        let odd = find_k2m(&g, Parity::Odd);
        // apex pair plus the three equator pairs
        assert_eq!(odd.len(), 4);
        let strong: Vec<_> = odd.iter().filter(|h| h.kind == PatternKind::K2m { m: 3, size2_parts_nonadjacent: true }).collect();
        assert_eq!(strong.len(), 1);
        assert_eq!(strong[0].vertices, vec![0, 1, 2, 3, 4]);
        assert!(g.edge_subgraph(&strong[0].edges).0.degree(3) == 3);
        let even = find_k2m(&g, Parity::Even);
        assert!(!even.is_empty());
        assert!(even.iter().all(|h| matches!(h.kind, PatternKind::K2m { m: 2, size2_parts_nonadjacent: false })));
        check_all(&g, &odd);
        check_all(&g, &even);
    }

    #[test]
    fn k2n_in_complete_bipartite() {
        for n in 2..=6usize {
            let g = families::complete_bipartite(2, 2 * n);
            let count = find_k2m(&g, Parity::Any)
                .iter()
                .filter(|h| matches!(h.kind, PatternKind::K2m { m, .. } if m == n))
                .filter(|h| h.vertices.contains(&0) && h.vertices.contains(&1))
                .count();
            let binom = (1..=n).fold(1usize, |acc, i| acc * (n + i) / i);
            assert_eq!(count, binom);
        }
    }

    #[test]
    fn k222_counts() {
        assert_eq!(find_k222(&families::octahedron()).len(), 1);
        assert_eq!(find_k222(&bipyramid()).len(), 0);
        assert_eq!(find_k222(&families::icosahedron()).len(), 0);
    }

    #[test]
    fn k11m_counts() {
        let k4 = families::k4();
        assert_eq!(find_k11m(&k4, Parity::Odd).len(), 4);
        assert_eq!(find_k11m(&k4, Parity::Even).len(), 6);
        let g = bipyramid();
        let max_m = find_k11m(&g, Parity::Any)
            .iter()
            .filter_map(|h| match h.kind {
                PatternKind::K11m { m } => Some(m),
                _ => None,
            })
            .max();
        assert_eq!(max_m, Some(3));
    }

    #[test]
    fn a_patterns() {
        let ico = families::icosahedron();
        for a in [APattern::A3, APattern::A5, APattern::A6] {
            assert!(find_a(&ico, a).is_empty());
        }
        assert!(find_a(&families::k4(), APattern::A5).is_empty());
        assert_eq!(find_a(&families::k4(), APattern::A1).len(), 3);
        // two disjoint K4s joined by one edge
        let two = Graph::new(8, (0..4).flat_map(|i| (i + 1..4).flat_map(move |j| [(i, j), (4 + i, 4 + j)])).chain([(3, 4)]))
            .unwrap();
        assert_eq!(find_a(&two, APattern::A3).len(), 1);
        assert_eq!(find_a(&two, APattern::A4).len(), 2);
        for a in APattern::ALL {
            check_all(&two, &find_a(&two, a));
        }
        let oct = families::octahedron();
        for a in APattern::ALL {
            check_all(&oct, &find_a(&oct, a));
        }
        assert!(!find_a(&oct, APattern::A6).is_empty());
    }

    #[test]
    fn surface_families_on_small_duals() {
        let k4 = families::k4();
        assert_eq!(enumerate_twisted_subgraphs(&k4, Surface::ProjectivePlane, true).len(), 1);
        assert_eq!(enumerate_twisted_subgraphs(&k4, Surface::ProjectivePlane, false).len(), 7);
        assert_eq!(enumerate_twisted_subgraphs(&k4, Surface::Torus, true).len(), 0);
        let b = bipyramid();
        assert_eq!(enumerate_twisted_subgraphs(&b, Surface::Torus, true).len(), 0);
        assert_eq!(enumerate_twisted_subgraphs(&b, Surface::KleinBottle, true).len(), 1);
        assert!(enumerate_twisted_subgraphs(&families::icosahedron(), Surface::KleinBottle, true).is_empty());
        for s in Surface::TARGETS {
            for strong in [false, true] {
                check_all(&b, &enumerate_twisted_subgraphs(&b, s, strong));
                check_all(&families::octahedron(), &enumerate_twisted_subgraphs(&families::octahedron(), s, strong));
            }
        }
    }
}
