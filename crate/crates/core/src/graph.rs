//! Simple undirected graphs with stable edge indices.
//!
//! Every other module refers to edges by their index into [`Graph::edges`],
//! never by endpoint pairs, so twist sets and dual maps are plain bitsets.

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A simple, undirected, finite graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    /// Per vertex: `(neighbor, edge index)` sorted by neighbor.
    adj: Vec<Vec<(usize, usize)>>,
}

impl Graph {
    /// Builds a graph keeping the given edge order as the edge indexing.
    ///
    /// Endpoints are normalized so that `u < v`.
    pub fn new<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adj = vec![Vec::new(); n];
        let mut list = Vec::new();
        for (i, (a, b)) in edges.into_iter().enumerate() {
            if a >= n || b >= n {
                return Err(Error::InvalidGraph(format!(
                    "edge {i} ({a},{b}) out of range for {n} vertices"
                )));
            }
            if a == b {
                return Err(Error::InvalidGraph(format!("loop at vertex {a}")));
            }
            let (u, v) = if a < b { (a, b) } else { (b, a) };
            adj[u].push((v, i));
            adj[v].push((u, i));
            list.push((u, v));
        }
        for (v, row) in adj.iter_mut().enumerate() {
            row.sort_unstable();
            if let Some(w) = row.windows(2).find(|w| w[0].0 == w[1].0) {
                return Err(Error::InvalidGraph(format!(
                    "parallel edges between {v} and {}",
                    w[0].0
                )));
            }
        }
        Ok(Graph { n, edges: list, adj })
    }

    /// Builds a graph whose edges are indexed in lexicographic `(u, v)` order.
    pub fn from_edges_sorted<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut list: Vec<(usize, usize)> = edges
            .into_iter()
            .map(|(a, b)| if a < b { (a, b) } else { (b, a) })
            .collect();
        list.sort_unstable();
        Graph::new(n, list)
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge(&self, e: usize) -> (usize, usize) {
        self.edges[e]
    }

    /// `(neighbor, edge)` pairs of `v`, sorted by neighbor.
    pub fn adjacency(&self, v: usize) -> &[(usize, usize)] {
        &self.adj[v]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].iter().map(|&(w, _)| w)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        if u >= self.n || v >= self.n {
            return None;
        }
        self.adj[u]
            .binary_search_by_key(&v, |&(w, _)| w)
            .ok()
            .map(|i| self.adj[u][i].1)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edge_index(u, v).is_some()
    }

    /// The endpoint of `e` that is not `v`.
    pub fn other_end(&self, e: usize, v: usize) -> usize {
        let (a, b) = self.edges[e];
        if a == v {
            b
        } else {
            debug_assert_eq!(b, v);
            a
        }
    }

    pub fn is_cubic(&self) -> bool {
        (0..self.n).all(|v| self.degree(v) == 3)
    }

    /// Relabels vertices by `perm[old] = new`, keeping edge order.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        Graph::new(self.n, self.edges.iter().map(|&(u, v)| (perm[u], perm[v])))
            .expect("relabeling preserves simplicity")
    }

    pub fn is_connected(&self) -> bool {
        self.is_connected_without(&[], None)
    }

    /// Connectivity after deleting the vertices in `removed` and optionally
    /// the edges flagged in `removed_edges`.
    fn is_connected_without(&self, removed: &[usize], removed_edges: Option<&EdgeSet>) -> bool {
        let alive = |v: usize| !removed.contains(&v);
        let Some(start) = (0..self.n).find(|&v| alive(v)) else {
            return true;
        };
        let mut seen = vec![false; self.n];
        seen[start] = true;
        let mut stack = vec![start];
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &(w, e) in &self.adj[v] {
                if seen[w] || !alive(w) || removed_edges.is_some_and(|r| r.contains(e)) {
                    continue;
                }
                seen[w] = true;
                count += 1;
                stack.push(w);
            }
        }
        count == self.n - removed.len()
    }

    /// True iff the graph has more than `k` vertices and no vertex cut of
    /// size less than `k`. Decided by exhaustive cut search, so `k <= 3`.
    pub fn is_k_connected(&self, k: usize) -> bool {
        assert!((1..=3).contains(&k), "k must be 1, 2 or 3");
        if self.n <= k {
            return false;
        }
        if !self.is_connected() {
            return false;
        }
        if k >= 2 && (0..self.n).any(|v| !self.is_connected_without(&[v], None)) {
            return false;
        }
        if k >= 3 {
            for a in 0..self.n {
                for b in a + 1..self.n {
                    if !self.is_connected_without(&[a, b], None) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Two-colorability by BFS parity. Disconnected graphs are handled per component.
    pub fn is_bipartite(&self) -> bool {
        let mut color = vec![u8::MAX; self.n];
        for s in 0..self.n {
            if color[s] != u8::MAX {
                continue;
            }
            color[s] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                for &(w, _) in &self.adj[v] {
                    if color[w] == u8::MAX {
                        color[w] = color[v] ^ 1;
                        queue.push_back(w);
                    } else if color[w] == color[v] {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Cyclic `k`-edge-connectivity by brute force over edge subsets of size
    /// at most `k - 1`: false iff some such subset leaves two components
    /// that each contain a cycle. Graphs without two disjoint cycles are
    /// cyclically `k`-edge-connected for every `k`.
    pub fn cyclically_k_edge_connected(&self, k: usize) -> bool {
        assert!((2..=5).contains(&k), "k must be in 2..=5");
        let m = self.edges.len();
        let mut chosen = Vec::with_capacity(k);
        let mut removed = EdgeSet::new(m);
        for size in 0..k {
            if self.find_cyclic_cut(size, 0, &mut chosen, &mut removed) {
                return false;
            }
        }
        true
    }

    fn find_cyclic_cut(
        &self,
        size: usize,
        from: usize,
        chosen: &mut Vec<usize>,
        removed: &mut EdgeSet,
    ) -> bool {
        if chosen.len() == size {
            return self.cyclic_components_without(removed) >= 2;
        }
        for e in from..self.edges.len() {
            chosen.push(e);
            removed.insert(e);
            let hit = self.find_cyclic_cut(size, e + 1, chosen, removed);
            removed.remove(e);
            chosen.pop();
            if hit {
                return true;
            }
        }
        false
    }

    /// Number of components of `G - removed` that contain a cycle.
    fn cyclic_components_without(&self, removed: &EdgeSet) -> usize {
        let mut comp = vec![usize::MAX; self.n];
        let mut cyclic = 0;
        for s in 0..self.n {
            if comp[s] != usize::MAX {
                continue;
            }
            comp[s] = s;
            let mut stack = vec![s];
            let (mut verts, mut degree_sum) = (0usize, 0usize);
            while let Some(v) = stack.pop() {
                verts += 1;
                for &(w, e) in &self.adj[v] {
                    if removed.contains(e) {
                        continue;
                    }
                    degree_sum += 1;
                    if comp[w] == usize::MAX {
                        comp[w] = s;
                        stack.push(w);
                    }
                }
            }
            if degree_sum / 2 >= verts {
                cyclic += 1;
            }
        }
        cyclic
    }

    /// Indices of the bridges, found with a lowpoint DFS.
    pub fn bridges(&self) -> Vec<usize> {
        let mut disc = vec![usize::MAX; self.n];
        let mut low = vec![0; self.n];
        let mut out = Vec::new();
        let mut time = 0;
        for root in 0..self.n {
            if disc[root] != usize::MAX {
                continue;
            }
            // (vertex, parent edge, next adjacency position)
            let mut stack = vec![(root, usize::MAX, 0usize)];
            disc[root] = time;
            low[root] = time;
            time += 1;
            while let Some(&mut (v, pe, ref mut pos)) = stack.last_mut() {
                if *pos < self.adj[v].len() {
                    let (w, e) = self.adj[v][*pos];
                    *pos += 1;
                    if e == pe {
                        continue;
                    }
                    if disc[w] == usize::MAX {
                        disc[w] = time;
                        low[w] = time;
                        time += 1;
                        stack.push((w, e, 0));
                    } else {
                        low[v] = low[v].min(disc[w]);
                    }
                } else {
                    stack.pop();
                    if let Some(&(p, _, _)) = stack.last() {
                        low[p] = low[p].min(low[v]);
                        if low[v] > disc[p] {
                            out.push(pe);
                        }
                    }
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// The subgraph formed by the edges in `set` and their endpoints.
    ///
    /// Returns the subgraph (vertices renumbered `0..k` in increasing host
    /// order, edges in increasing host order) with the vertex and edge maps
    /// back into the host.
    pub fn edge_subgraph(&self, set: &EdgeSet) -> (Graph, Vec<usize>, Vec<usize>) {
        let edge_map: Vec<usize> = set.iter().collect();
        let mut vertex_map: Vec<usize> = edge_map
            .iter()
            .flat_map(|&e| [self.edges[e].0, self.edges[e].1])
            .collect();
        vertex_map.sort_unstable();
        vertex_map.dedup();
        let local = |v: usize| vertex_map.binary_search(&v).unwrap();
        let sub = Graph::new(
            vertex_map.len(),
            edge_map.iter().map(|&e| (local(self.edges[e].0), local(self.edges[e].1))),
        )
        .expect("edge subgraph of a simple graph is simple");
        (sub, vertex_map, edge_map)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges)
    }
}

/// A set of edge indices of some host graph, stored as a bitset.
///
/// Ordering compares the sets as binary numbers (edge 0 is the least
/// significant bit), which gives a stable sort order for twist sets.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "EdgeSetRepr", try_from = "EdgeSetRepr")]
pub struct EdgeSet {
    universe: usize,
    words: Vec<u64>,
}

#[derive(Serialize, Deserialize)]
struct EdgeSetRepr {
    universe: usize,
    edges: Vec<usize>,
}

impl TryFrom<EdgeSetRepr> for EdgeSet {
    type Error = String;

    fn try_from(r: EdgeSetRepr) -> std::result::Result<Self, String> {
        if let Some(&e) = r.edges.iter().find(|&&e| e >= r.universe) {
            return Err(format!("edge {e} outside universe {}", r.universe));
        }
        Ok(EdgeSet::from_indices(r.universe, r.edges))
    }
}

impl From<EdgeSet> for EdgeSetRepr {
    fn from(s: EdgeSet) -> EdgeSetRepr {
        EdgeSetRepr { universe: s.universe, edges: s.iter().collect() }
    }
}

impl EdgeSet {
    pub fn new(universe: usize) -> Self {
        EdgeSet { universe, words: vec![0; universe.div_ceil(64)] }
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(universe: usize, items: I) -> Self {
        let mut s = EdgeSet::new(universe);
        for e in items {
            s.insert(e);
        }
        s
    }

    /// Low `universe` bits of `mask`; requires `universe <= 64`.
    pub fn from_mask(universe: usize, mask: u64) -> Self {
        assert!(universe <= 64);
        let mut s = EdgeSet::new(universe);
        if universe > 0 {
            s.words[0] = if universe == 64 { mask } else { mask & ((1u64 << universe) - 1) };
        }
        s
    }

    /// The set as a `u64` mask, if it fits.
    pub fn to_mask(&self) -> Option<u64> {
        match self.words.len() {
            0 => Some(0),
            _ if self.words[1..].iter().all(|&w| w == 0) => Some(self.words[0]),
            _ => None,
        }
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn insert(&mut self, e: usize) {
        assert!(e < self.universe, "edge {e} outside universe {}", self.universe);
        self.words[e / 64] |= 1 << (e % 64);
    }

    pub fn remove(&mut self, e: usize) {
        if e < self.universe {
            self.words[e / 64] &= !(1 << (e % 64));
        }
    }

    pub fn contains(&self, e: usize) -> bool {
        e < self.universe && self.words[e / 64] >> (e % 64) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(i * 64 + b)
            })
        })
    }
}

impl PartialOrd for EdgeSet {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for EdgeSet {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        let len = self.words.len().max(other.words.len());
        let word = |s: &EdgeSet, i: usize| s.words.get(i).copied().unwrap_or(0);
        (0..len)
            .rev()
            .map(|i| word(self, i).cmp(&word(other, i)))
            .find(|o| o.is_ne())
            .unwrap_or(std::cmp::Ordering::Equal)
    }
}

impl fmt::Debug for EdgeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    fn path3() -> Graph {
        Graph::new(3, [(0, 1), (1, 2)]).unwrap()
    }

    #[test]
    fn rejects_loops_and_parallel_edges() {
        assert!(Graph::new(2, [(0, 0)]).is_err());
        assert!(Graph::new(2, [(0, 1), (1, 0)]).is_err());
        assert!(Graph::new(2, [(0, 2)]).is_err());
    }

    #[test]
    fn adjacency_is_symmetric_and_sorted() {
        let g = families::prism();
        let degree_sum: usize = (0..g.vertex_count()).map(|v| g.degree(v)).sum();
        assert_eq!(degree_sum, 2 * g.edge_count());
        for (e, &(u, v)) in g.edges().iter().enumerate() {
            assert_eq!(g.edge_index(u, v), Some(e));
            assert_eq!(g.edge_index(v, u), Some(e));
        }
    }

    #[test]
    fn connectivity() {
        assert!(families::k4().is_k_connected(3));
        assert!(!path3().is_k_connected(2));
        assert!(path3().is_k_connected(1));
        assert!(families::prism().is_k_connected(3));
        // K4 has only 4 vertices, so it is not 4-connected in any sense; 3 is the max.
        let two_triangles = Graph::new(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]).unwrap();
        assert!(!two_triangles.is_k_connected(2));
    }

    #[test]
    fn bipartiteness() {
        assert!(!families::k4().is_bipartite());
        assert!(families::cube().is_bipartite());
        assert!(!families::prism().is_bipartite());
    }

    #[test]
    fn cyclic_edge_connectivity() {
        assert!(!families::prism().cyclically_k_edge_connected(4));
        assert!(families::prism().cyclically_k_edge_connected(3));
        assert!(families::k4().cyclically_k_edge_connected(5));
        assert!(families::cube().cyclically_k_edge_connected(4));
        assert!(!families::cube().cyclically_k_edge_connected(5));
    }

    #[test]
    fn dodecahedron_is_cyclically_5_edge_connected() {
        assert!(families::dodecahedron().cyclically_k_edge_connected(5));
    }

    #[test]
    fn bridges_found() {
        assert_eq!(path3().bridges(), vec![0, 1]);
        assert!(families::k4().bridges().is_empty());
        let g = Graph::new(6, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (4, 5), (3, 5)]).unwrap();
        assert_eq!(g.bridges(), vec![3]);
    }

    #[test]
    fn edge_set_ordering_and_masks() {
        let a = EdgeSet::from_indices(70, [1, 65]);
        let b = EdgeSet::from_indices(70, [2, 3, 4]);
        assert!(b < a);
        assert_eq!(a.iter().collect::<Vec<_>>(), vec![1, 65]);
        assert_eq!(a.to_mask(), None);
        assert_eq!(b.to_mask(), Some(0b11100));
        assert_eq!(EdgeSet::from_mask(5, 0b11100), b.clone().resized(5));
        assert_eq!(b.len(), 3);
    }

    impl EdgeSet {
        fn resized(self, universe: usize) -> EdgeSet {
            EdgeSet::from_indices(universe, self.iter().collect::<Vec<_>>())
        }
    }

    #[test]
    fn edge_subgraph_maps_back() {
        let g = families::k4();
        let set = EdgeSet::from_indices(6, [0, 5]);
        let (h, vmap, emap) = g.edge_subgraph(&set);
        assert_eq!(h.vertex_count(), 4);
        assert_eq!(emap, vec![0, 5]);
        for (le, &(a, b)) in h.edges().iter().enumerate() {
            let (u, v) = g.edge(emap[le]);
            assert_eq!((vmap[a], vmap[b]), (u, v));
        }
    }
}
