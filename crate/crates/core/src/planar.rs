//! Rotation systems, spherical embeddings and facial cycles.
//!
//! [`planar_embed`] splits the graph into biconnected blocks, embeds each
//! block with the Demoucron-Malgrange-Pertuiset path-addition method and
//! concatenates the block rotations at cut vertices.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Cyclic order of incident edges around every vertex.
///
/// `succ(v, e)` is the clockwise successor of `e` at `v`, `pred` the
/// anticlockwise one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RotationSystem {
    order: Vec<Vec<usize>>,
    ends: Vec<(usize, usize)>,
    /// `slot[e] = [position at ends[e].0, position at ends[e].1]`
    slot: Vec<[usize; 2]>,
}

impl RotationSystem {
    /// `order[v]` must list every edge incident to `v` exactly once.
    pub fn new(g: &Graph, order: Vec<Vec<usize>>) -> Result<Self> {
        if order.len() != g.vertex_count() {
            return Err(Error::InvalidGraph(format!(
                "rotation covers {} of {} vertices",
                order.len(),
                g.vertex_count()
            )));
        }
        let ends = g.edges().to_vec();
        let mut slot = vec![[usize::MAX; 2]; ends.len()];
        for (v, row) in order.iter().enumerate() {
            if row.len() != g.degree(v) {
                return Err(Error::InvalidGraph(format!("rotation at {v} has wrong length")));
            }
            for (i, &e) in row.iter().enumerate() {
                let side = match ends.get(e) {
                    Some(&(a, _)) if a == v => 0,
                    Some(&(_, b)) if b == v => 1,
                    _ => return Err(Error::InvalidGraph(format!("edge {e} not incident to {v}"))),
                };
                if slot[e][side] != usize::MAX {
                    return Err(Error::InvalidGraph(format!("edge {e} repeated at {v}")));
                }
                slot[e][side] = i;
            }
        }
        Ok(RotationSystem { order, ends, slot })
    }

    /// Rotation given as cyclic neighbor sequences instead of edges.
    pub fn from_neighbor_orders(g: &Graph, neighbors: &[Vec<usize>]) -> Result<Self> {
        let order = neighbors
            .iter()
            .enumerate()
            .map(|(v, row)| {
                row.iter()
                    .map(|&w| g.edge_index(v, w).ok_or(Error::UnknownEdge(v, w)))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        RotationSystem::new(g, order)
    }

    pub fn vertex_count(&self) -> usize {
        self.order.len()
    }

    pub fn edge_count(&self) -> usize {
        self.ends.len()
    }

    /// Endpoints of every edge, as in the host graph.
    pub fn ends(&self) -> &[(usize, usize)] {
        &self.ends
    }

    pub fn other_end(&self, e: usize, v: usize) -> usize {
        other(self.ends[e], v)
    }

    pub fn order(&self, v: usize) -> &[usize] {
        &self.order[v]
    }

    fn position(&self, v: usize, e: usize) -> usize {
        let side = if self.ends[e].0 == v { 0 } else { 1 };
        self.slot[e][side]
    }

    /// `rho_v(e)`: clockwise successor of `e` around `v`.
    pub fn succ(&self, v: usize, e: usize) -> usize {
        let row = &self.order[v];
        row[(self.position(v, e) + 1) % row.len()]
    }

    /// `rho_v^{-1}(e)`: anticlockwise successor of `e` around `v`.
    pub fn pred(&self, v: usize, e: usize) -> usize {
        let row = &self.order[v];
        row[(self.position(v, e) + row.len() - 1) % row.len()]
    }

    /// The mirror rotation system.
    pub fn reversed(&self) -> Self {
        let mut r = self.clone();
        for v in 0..r.order.len() {
            r.reverse_at(v);
        }
        r
    }

    /// Replaces `rho_v` by its inverse.
    pub fn reverse_at(&mut self, v: usize) {
        self.order[v].reverse();
        for (i, &e) in self.order[v].iter().enumerate() {
            let side = if self.ends[e].0 == v { 0 } else { 1 };
            self.slot[e][side] = i;
        }
    }

    /// Neighbor sequence per vertex, each started at its smallest neighbor.
    pub fn encoding(&self) -> Vec<Vec<usize>> {
        self.order
            .iter()
            .enumerate()
            .map(|(v, row)| {
                let nbrs: Vec<usize> = row.iter().map(|&e| other(self.ends[e], v)).collect();
                let start = (0..nbrs.len()).min_by_key(|&i| nbrs[i]).unwrap_or(0);
                nbrs[start..].iter().chain(&nbrs[..start]).copied().collect()
            })
            .collect()
    }

    /// Orbits of the untwisted face-tracing map: dart `v -> w` along `e`
    /// is followed by the dart leaving `w` along `rho_w(e)`.
    pub fn face_orbits(&self) -> Vec<Face> {
        let m = self.ends.len();
        let mut seen = vec![false; 2 * m];
        let mut faces = Vec::new();
        for start in 0..2 * m {
            if seen[start] {
                continue;
            }
            let mut face = Face::default();
            let mut dart = start;
            while !seen[dart] {
                seen[dart] = true;
                let e = dart / 2;
                let (from, to) = if dart % 2 == 0 { self.ends[e] } else { (self.ends[e].1, self.ends[e].0) };
                face.vertices.push(from);
                face.edges.push(e);
                let next = self.succ(to, e);
                dart = 2 * next + usize::from(self.ends[next].0 != to);
            }
            faces.push(face);
        }
        faces
    }
}

fn other((a, b): (usize, usize), v: usize) -> usize {
    if a == v {
        b
    } else {
        a
    }
}

/// A facial cycle: `edges[i]` joins `vertices[i]` and `vertices[i + 1]` (cyclically).
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Face {
    pub vertices: Vec<usize>,
    pub edges: Vec<usize>,
}

impl Face {
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// Lexicographically smallest rotation of the vertex cycle or its reversal.
    pub fn canonical_cycle(&self) -> Vec<usize> {
        canonical_cycle(&self.vertices)
    }

    /// Same face, rotated to its smallest rotation in its own orientation.
    fn rotated_to_min(&self) -> Face {
        let k = self.vertices.len();
        let start = (0..k)
            .min_by(|&a, &b| {
                let ra = self.vertices[a..].iter().chain(&self.vertices[..a]);
                let rb = self.vertices[b..].iter().chain(&self.vertices[..b]);
                ra.cmp(rb)
            })
            .unwrap_or(0);
        Face {
            vertices: self.vertices[start..].iter().chain(&self.vertices[..start]).copied().collect(),
            edges: self.edges[start..].iter().chain(&self.edges[..start]).copied().collect(),
        }
    }
}

/// Smallest rotation of `seq` or of its reversal.
pub fn canonical_cycle(seq: &[usize]) -> Vec<usize> {
    let k = seq.len();
    let mut best: Option<Vec<usize>> = None;
    let rev: Vec<usize> = seq.iter().rev().copied().collect();
    for s in [seq, &rev[..]] {
        for start in 0..k {
            let cand: Vec<usize> = s[start..].iter().chain(&s[..start]).copied().collect();
            if best.as_ref().is_none_or(|b| cand < *b) {
                best = Some(cand);
            }
        }
    }
    best.unwrap_or_default()
}

/// The spherical embedding of a connected planar graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlanarEmbedding {
    pub rotation: RotationSystem,
    /// Oriented facial cycles sorted by [`Face::canonical_cycle`].
    pub faces: Vec<Face>,
    /// Per edge `e = (u, v)`, `u < v`: `[face traversing u->v, face traversing v->u]`.
    pub edge_faces: Vec<[usize; 2]>,
}

impl PlanarEmbedding {
    /// Wraps a rotation system of `g`, checking that it is spherical.
    ///
    /// Of the rotation and its mirror, the one with the smaller
    /// [`RotationSystem::encoding`] is kept.
    pub fn from_rotation(g: &Graph, rotation: RotationSystem) -> Result<Self> {
        let mirror = rotation.reversed();
        let rotation = if mirror.encoding() < rotation.encoding() { mirror } else { rotation };
        let mut faces: Vec<Face> = rotation.face_orbits().iter().map(Face::rotated_to_min).collect();
        let chi = g.vertex_count() as i64 - g.edge_count() as i64 + faces.len() as i64;
        if chi != 2 {
            return Err(Error::NotPlanar);
        }
        faces.sort_by_cached_key(|f| f.canonical_cycle());
        let mut edge_faces = vec![[usize::MAX; 2]; g.edge_count()];
        for (fi, f) in faces.iter().enumerate() {
            for (i, &e) in f.edges.iter().enumerate() {
                let side = usize::from(g.edge(e).0 != f.vertices[i]);
                edge_faces[e][side] = fi;
            }
        }
        Ok(PlanarEmbedding { rotation, faces, edge_faces })
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    /// Face length -> number of faces.
    pub fn face_length_histogram(&self) -> BTreeMap<usize, usize> {
        let mut h = BTreeMap::new();
        for f in &self.faces {
            *h.entry(f.len()).or_insert(0) += 1;
        }
        h
    }

    /// An isomorphism invariant of the embedded graph: the smallest
    /// breadth-first map code over all starting darts and both
    /// orientations. For 3-connected planar graphs the embedding is unique
    /// up to mirroring, so equal codes mean isomorphic graphs.
    pub fn map_code(&self, g: &Graph) -> Vec<u32> {
        let mut best: Option<Vec<u32>> = None;
        for e in 0..g.edge_count() {
            let (a, b) = g.edge(e);
            for start in [a, b] {
                for clockwise in [true, false] {
                    let code = self.bfs_code(g, start, e, clockwise, best.as_deref());
                    if let Some(code) = code {
                        best = Some(code);
                    }
                }
            }
        }
        best.unwrap_or_default()
    }

    /// Code from one starting dart; `None` as soon as it exceeds `bound`.
    fn bfs_code(
        &self,
        g: &Graph,
        start: usize,
        first_edge: usize,
        clockwise: bool,
        bound: Option<&[u32]>,
    ) -> Option<Vec<u32>> {
        let n = g.vertex_count();
        let mut label = vec![0u32; n];
        let mut entry = vec![usize::MAX; n];
        let mut queue = Vec::with_capacity(n);
        label[start] = 1;
        entry[start] = first_edge;
        queue.push(start);
        let mut next_label = 2;
        let mut code: Vec<u32> = Vec::with_capacity(2 * g.edge_count() + n);
        let mut smaller = false;
        let mut head = 0;
        while head < queue.len() {
            let v = queue[head];
            head += 1;
            let mut e = entry[v];
            for step in 0..g.degree(v) {
                if step > 0 {
                    e = if clockwise { self.rotation.succ(v, e) } else { self.rotation.pred(v, e) };
                }
                let w = g.other_end(e, v);
                if label[w] == 0 {
                    label[w] = next_label;
                    next_label += 1;
                    entry[w] = e;
                    queue.push(w);
                }
                if !push_bounded(&mut code, label[w], bound, &mut smaller) {
                    return None;
                }
            }
            if !push_bounded(&mut code, 0, bound, &mut smaller) {
                return None;
            }
        }
        match bound {
            Some(b) if !smaller && code.as_slice() >= b => None,
            _ => Some(code),
        }
    }
}

fn push_bounded(code: &mut Vec<u32>, x: u32, bound: Option<&[u32]>, smaller: &mut bool) -> bool {
    if let (Some(b), false) = (bound, *smaller) {
        match b.get(code.len()) {
            Some(&y) if x > y => return false,
            Some(&y) if x < y => *smaller = true,
            _ => {}
        }
    }
    code.push(x);
    true
}

/// Embeds a connected graph on the sphere, or reports [`Error::NotPlanar`].
pub fn planar_embed(g: &Graph) -> Result<PlanarEmbedding> {
    let n = g.vertex_count();
    if g.edge_count() == 0 {
        return Err(Error::InvalidGraph("graph has no edges".into()));
    }
    if !g.is_connected() {
        return Err(Error::NotConnected);
    }
    if n >= 3 && g.edge_count() > 3 * n - 6 {
        return Err(Error::NotPlanar);
    }
    let mut order: Vec<Vec<usize>> = vec![Vec::new(); n];
    for block in biconnected_blocks(g) {
        if block.len() == 1 {
            let e = block[0];
            let (u, v) = g.edge(e);
            order[u].push(e);
            order[v].push(e);
            continue;
        }
        let faces = embed_block(g, &block)?;
        for (v, cyc) in block_rotation(g, &block, &faces) {
            order[v].extend(cyc);
        }
    }
    let rotation = RotationSystem::new(g, order)?;
    PlanarEmbedding::from_rotation(g, rotation)
}

/// Edge sets of the biconnected components (bridges form singleton blocks).
fn biconnected_blocks(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.vertex_count();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut time = 0;
    let mut edge_stack: Vec<usize> = Vec::new();
    let mut blocks = Vec::new();
    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        disc[root] = time;
        low[root] = time;
        time += 1;
        let mut stack = vec![(root, usize::MAX, 0usize)];
        while let Some(&mut (v, pe, ref mut pos)) = stack.last_mut() {
            if *pos < g.degree(v) {
                let (w, e) = g.adjacency(v)[*pos];
                *pos += 1;
                if e == pe {
                    continue;
                }
                if disc[w] == usize::MAX {
                    edge_stack.push(e);
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    stack.push((w, e, 0));
                } else if disc[w] < disc[v] {
                    edge_stack.push(e);
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if let Some(&(p, _, _)) = stack.last() {
                    low[p] = low[p].min(low[v]);
                    if low[v] >= disc[p] {
                        let mut block = Vec::new();
                        while let Some(e) = edge_stack.pop() {
                            block.push(e);
                            if e == pe {
                                break;
                            }
                        }
                        block.sort_unstable();
                        blocks.push(block);
                    }
                }
            }
        }
    }
    blocks
}

enum Fragment {
    Edge(usize),
    Component(Vec<usize>),
}

/// Path-addition embedding of one biconnected block; returns its faces as
/// consistently oriented vertex cycles.
fn embed_block(g: &Graph, block: &[usize]) -> Result<Vec<Vec<usize>>> {
    let n = g.vertex_count();
    let m = g.edge_count();
    let mut in_block = vec![false; m];
    for &e in block {
        in_block[e] = true;
    }
    let block_adj = |v: usize| g.adjacency(v).iter().copied().filter(|&(_, e)| in_block[e]);

    let mut emb_v = vec![false; n];
    let mut emb_e = vec![false; m];
    let cycle = find_cycle(g, block, &in_block);
    for i in 0..cycle.len() {
        let (a, b) = (cycle[i], cycle[(i + 1) % cycle.len()]);
        emb_v[a] = true;
        emb_e[g.edge_index(a, b).unwrap()] = true;
    }
    let mut faces: Vec<Vec<usize>> = vec![cycle.clone(), cycle.iter().rev().copied().collect()];
    let mut remaining = block.len() - cycle.len();

    while remaining > 0 {
        // fragments relative to the embedded subgraph
        let mut fragments: Vec<(Fragment, Vec<usize>)> = Vec::new();
        for &e in block {
            let (u, v) = g.edge(e);
            if !emb_e[e] && emb_v[u] && emb_v[v] {
                fragments.push((Fragment::Edge(e), vec![u.min(v), u.max(v)]));
            }
        }
        let mut comp = vec![false; n];
        for &e in block {
            let (u, _) = g.edge(e);
            for s in [u, g.edge(e).1] {
                if emb_v[s] || comp[s] {
                    continue;
                }
                comp[s] = true;
                let mut verts = vec![s];
                let mut attach = Vec::new();
                let mut i = 0;
                while i < verts.len() {
                    let x = verts[i];
                    i += 1;
                    for (y, _) in block_adj(x) {
                        if emb_v[y] {
                            attach.push(y);
                        } else if !comp[y] {
                            comp[y] = true;
                            verts.push(y);
                        }
                    }
                }
                attach.sort_unstable();
                attach.dedup();
                fragments.push((Fragment::Component(verts), attach));
            }
        }

        let admissible = |attach: &[usize]| -> Vec<usize> {
            (0..faces.len()).filter(|&f| attach.iter().all(|a| faces[f].contains(a))).collect()
        };
        let mut choice: Option<(usize, usize)> = None;
        for (i, (_, attach)) in fragments.iter().enumerate() {
            let adm = admissible(attach);
            match adm.len() {
                0 => return Err(Error::NotPlanar),
                1 => {
                    choice = Some((i, adm[0]));
                    break;
                }
                _ => {
                    if choice.is_none() {
                        choice = Some((i, adm[0]));
                    }
                }
            }
        }
        let (fi, face_idx) = choice.expect("at least one fragment remains");
        let path = match &fragments[fi].0 {
            Fragment::Edge(e) => {
                let (u, v) = g.edge(*e);
                vec![u, v]
            }
            Fragment::Component(verts) => fragment_path(g, verts, &emb_v, &in_block),
        };

        for w in path.windows(2) {
            emb_e[g.edge_index(w[0], w[1]).unwrap()] = true;
            remaining -= 1;
        }
        for &v in &path {
            emb_v[v] = true;
        }
        let face = faces.swap_remove(face_idx);
        let (f1, f2) = split_face(&face, &path);
        faces.push(f1);
        faces.push(f2);
    }
    Ok(faces)
}

/// Any cycle of the block, as a vertex sequence.
fn find_cycle(g: &Graph, block: &[usize], in_block: &[bool]) -> Vec<usize> {
    let n = g.vertex_count();
    let start = g.edge(block[0]).0;
    let mut parent = vec![usize::MAX; n];
    let mut parent_edge = vec![usize::MAX; n];
    let mut depth = vec![usize::MAX; n];
    depth[start] = 0;
    let mut stack = vec![start];
    while let Some(v) = stack.pop() {
        for &(w, e) in g.adjacency(v) {
            if !in_block[e] || e == parent_edge[v] {
                continue;
            }
            if depth[w] == usize::MAX {
                depth[w] = depth[v] + 1;
                parent[w] = v;
                parent_edge[w] = e;
                stack.push(w);
            } else {
                // non-tree edge closes a cycle through the lowest common ancestor
                let (mut a, mut b) = (v, w);
                let (mut left, mut right) = (vec![a], vec![b]);
                while a != b {
                    if depth[a] >= depth[b] {
                        a = parent[a];
                        left.push(a);
                    } else {
                        b = parent[b];
                        right.push(b);
                    }
                }
                right.pop();
                left.extend(right.into_iter().rev());
                return left;
            }
        }
    }
    unreachable!("a block with two or more edges contains a cycle")
}

/// A path through an unembedded component joining two distinct attachments.
fn fragment_path(g: &Graph, verts: &[usize], emb_v: &[bool], in_block: &[bool]) -> Vec<usize> {
    let n = g.vertex_count();
    let mut in_comp = vec![false; n];
    for &v in verts {
        in_comp[v] = true;
    }
    let (x, a) = verts
        .iter()
        .find_map(|&x| {
            g.adjacency(x).iter().find(|&&(y, e)| in_block[e] && emb_v[y]).map(|&(y, _)| (x, y))
        })
        .expect("fragment has an attachment");
    let mut parent = vec![usize::MAX; n];
    parent[x] = x;
    let mut queue = vec![x];
    let mut i = 0;
    while i < queue.len() {
        let y = queue[i];
        i += 1;
        if let Some(&(b, _)) =
            g.adjacency(y).iter().find(|&&(b, e)| in_block[e] && emb_v[b] && b != a)
        {
            let mut path = vec![b, y];
            let mut z = y;
            while z != x {
                z = parent[z];
                path.push(z);
            }
            path.push(a);
            path.reverse();
            return path;
        }
        for &(z, e) in g.adjacency(y) {
            if in_block[e] && in_comp[z] && parent[z] == usize::MAX {
                parent[z] = y;
                queue.push(z);
            }
        }
    }
    unreachable!("fragments of a biconnected block have two attachments")
}

/// Splits an oriented face cycle along a path whose ends lie on it.
fn split_face(face: &[usize], path: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let k = face.len();
    let a = path[0];
    let b = *path.last().unwrap();
    let i = face.iter().position(|&v| v == a).unwrap();
    let j = face.iter().position(|&v| v == b).unwrap();
    let interior = &path[1..path.len() - 1];
    let walk = |from: usize, to: usize| {
        let mut out = vec![face[from]];
        let mut p = from;
        while p != to {
            p = (p + 1) % k;
            out.push(face[p]);
        }
        out
    };
    let mut f1 = walk(i, j);
    f1.extend(interior.iter().rev());
    let mut f2 = walk(j, i);
    f2.extend(interior.iter());
    (f1, f2)
}

/// Per-vertex cyclic edge order of an embedded block, read off its faces:
/// for consecutive `u -> v -> w` on a face, `rho_v(uv) = vw`.
fn block_rotation(g: &Graph, block: &[usize], faces: &[Vec<usize>]) -> Vec<(usize, Vec<usize>)> {
    let mut next: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for f in faces {
        let k = f.len();
        for i in 0..k {
            let (u, v, w) = (f[i], f[(i + 1) % k], f[(i + 2) % k]);
            next.insert((v, g.edge_index(u, v).unwrap()), g.edge_index(v, w).unwrap());
        }
    }
    let mut verts: Vec<usize> = block.iter().flat_map(|&e| [g.edge(e).0, g.edge(e).1]).collect();
    verts.sort_unstable();
    verts.dedup();
    verts
        .into_iter()
        .map(|v| {
            let first = g.adjacency(v).iter().map(|&(_, e)| e).find(|e| block.binary_search(e).is_ok()).unwrap();
            let mut cyc = vec![first];
            let mut e = next[&(v, first)];
            while e != first {
                cyc.push(e);
                e = next[&(v, e)];
            }
            (v, cyc)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;
    use crate::graph::Graph;
    use rand::seq::SliceRandom;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn cycles(pe: &PlanarEmbedding) -> Vec<Vec<usize>> {
        let mut c: Vec<Vec<usize>> = pe.faces.iter().map(|f| f.canonical_cycle()).collect();
        c.sort();
        c
    }

    #[test]
    fn k4_faces() {
        let pe = planar_embed(&families::k4()).unwrap();
        assert_eq!(cycles(&pe), vec![vec![0, 1, 2], vec![0, 1, 3], vec![0, 2, 3], vec![1, 2, 3]]);
        assert_eq!(pe.face_length_histogram(), BTreeMap::from([(3, 4)]));
    }

    #[test]
    fn example_six_vertex_graph_faces() {
        // 1-based: 12,13,16,23,25,34,45,46,56
        let g = Graph::from_edges_sorted(
            6,
            [(1, 2), (1, 3), (1, 6), (2, 3), (2, 5), (3, 4), (4, 5), (4, 6), (5, 6)].map(|(a, b)| (a - 1, b - 1)),
        )
        .unwrap();
        let pe = planar_embed(&g).unwrap();
        let want: Vec<Vec<usize>> = [vec![2, 3, 4, 5], vec![1, 2, 5, 6], vec![1, 2, 3], vec![1, 3, 4, 6], vec![4, 5, 6]]
            .into_iter()
            .map(|f| canonical_cycle(&f.iter().map(|v| v - 1).collect::<Vec<_>>()))
            .collect();
        let mut want = want;
        want.sort();
        assert_eq!(cycles(&pe), want);
    }

    #[test]
    fn nonplanar_graphs_rejected() {
        assert_eq!(planar_embed(&families::k33()), Err(Error::NotPlanar));
        assert_eq!(planar_embed(&families::complete(5)), Err(Error::NotPlanar));
        // Petersen graph
        let petersen = Graph::from_edges_sorted(
            10,
            (0..5).flat_map(|i| [(i, (i + 1) % 5), (i, i + 5), (5 + i, 5 + (i + 2) % 5)]),
        )
        .unwrap();
        assert_eq!(planar_embed(&petersen), Err(Error::NotPlanar));
    }

    #[test]
    fn histograms() {
        let prism = planar_embed(&families::prism()).unwrap();
        assert_eq!(prism.face_length_histogram(), BTreeMap::from([(3, 2), (4, 3)]));
        let cube = planar_embed(&families::cube()).unwrap();
        assert_eq!(cube.face_length_histogram(), BTreeMap::from([(4, 6)]));
        let dodec = planar_embed(&families::dodecahedron()).unwrap();
        assert_eq!(dodec.face_length_histogram(), BTreeMap::from([(5, 12)]));
    }

    #[test]
    fn every_edge_on_two_faces_and_faces_share_at_most_one_edge() {
        for g in [families::k4(), families::prism(), families::cube(), families::dodecahedron()] {
            let pe = planar_embed(&g).unwrap();
            let total: usize = pe.faces.iter().map(Face::len).sum();
            assert_eq!(total, 2 * g.edge_count());
            for ef in &pe.edge_faces {
                assert!(ef[0] != usize::MAX && ef[1] != usize::MAX && ef[0] != ef[1]);
            }
            for i in 0..pe.faces.len() {
                for j in i + 1..pe.faces.len() {
                    let shared = pe.faces[i].edges.iter().filter(|e| pe.faces[j].edges.contains(e)).count();
                    assert!(shared <= 1);
                }
            }
        }
    }

    #[test]
    fn non_biconnected_graphs_embed() {
        // two triangles joined by a bridge, plus a pendant vertex
        let g = Graph::new(7, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (4, 5), (3, 5), (5, 6)]).unwrap();
        let pe = planar_embed(&g).unwrap();
        assert_eq!(pe.face_count(), 3);
        // bowtie (cut vertex without bridge)
        let bowtie = Graph::new(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]).unwrap();
        assert_eq!(planar_embed(&bowtie).unwrap().face_count(), 3);
    }

    #[test]
    fn relabeling_preserves_face_structure() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for g in [families::prism(), families::dodecahedron(), families::icosahedron()] {
            let pe = planar_embed(&g).unwrap();
            for _ in 0..20 {
                let mut perm: Vec<usize> = (0..g.vertex_count()).collect();
                perm.shuffle(&mut rng);
                let h = g.relabel(&perm);
                let ph = planar_embed(&h).unwrap();
                let mut mapped: Vec<Vec<usize>> = pe
                    .faces
                    .iter()
                    .map(|f| canonical_cycle(&f.vertices.iter().map(|&v| perm[v]).collect::<Vec<_>>()))
                    .collect();
                mapped.sort();
                assert_eq!(cycles(&ph), mapped);
                assert_eq!(ph.map_code(&h), pe.map_code(&g));
            }
        }
    }

    #[test]
    fn map_code_separates_graphs() {
        let a = families::prism_cycle(5);
        let b = families::dodecahedron();
        let pa = planar_embed(&a).unwrap();
        let pb = planar_embed(&b).unwrap();
        assert_ne!(pa.map_code(&a), pb.map_code(&b));
    }

    #[test]
    fn rotation_validation() {
        let g = families::k4();
        assert!(RotationSystem::new(&g, vec![vec![0, 1, 2]; 4]).is_err());
        assert!(RotationSystem::from_neighbor_orders(&g, &[vec![1, 2, 3], vec![0, 2, 3], vec![0, 1, 3], vec![0, 1, 2]]).is_ok());
    }
}
