//! Canonical forms by partition refinement and individualization.
//!
//! The search tree individualizes a vertex of the first non-singleton cell
//! and refines to an equitable partition; every discrete leaf gives a
//! relabeling, and the smallest relabeled adjacency string wins. Leaves
//! that tie with the current best yield automorphisms, which prune sibling
//! branches lying in the same orbit of the path stabilizer.

use crate::graph::Graph;

type Cells = Vec<Vec<usize>>;

struct Search<'g> {
    g: &'g Graph,
    best: Option<(Vec<u8>, Vec<usize>)>,
    automorphisms: Vec<Vec<usize>>,
}

/// Canonical byte string: two graphs are isomorphic iff their forms agree.
pub fn canonical_form(g: &Graph) -> Vec<u8> {
    canonical_pair(g).0
}

/// A canonical relabeling `perm[old] = new`.
pub fn canonical_labeling(g: &Graph) -> Vec<usize> {
    canonical_pair(g).1
}

/// Canonical form of a vertex-colored graph: the search starts from the
/// color classes (in increasing color order) instead of a single cell.
pub fn canonical_form_colored(g: &Graph, colors: &[usize]) -> Vec<u8> {
    assert_eq!(colors.len(), g.vertex_count());
    let mut palette: Vec<usize> = colors.to_vec();
    palette.sort_unstable();
    palette.dedup();
    let cells: Cells = palette
        .iter()
        .map(|&c| (0..g.vertex_count()).filter(|&v| colors[v] == c).collect())
        .collect();
    let mut form = run(g, cells).0;
    // class sizes disambiguate colorings that happen to produce equal strings
    for &c in &palette {
        form.extend((colors.iter().filter(|&&x| x == c).count() as u32).to_le_bytes());
        form.extend((c as u64).to_le_bytes());
    }
    form
}

fn canonical_pair(g: &Graph) -> (Vec<u8>, Vec<usize>) {
    let n = g.vertex_count();
    let cells: Cells = if n == 0 { Vec::new() } else { vec![(0..n).collect()] };
    run(g, cells)
}

fn run(g: &Graph, cells: Cells) -> (Vec<u8>, Vec<usize>) {
    let mut search = Search { g, best: None, automorphisms: Vec::new() };
    search.explore(cells, &mut Vec::new());
    let (cert, labels) = search.best.unwrap_or_default();
    let mut form = (g.vertex_count() as u32).to_le_bytes().to_vec();
    form.extend(cert);
    (form, labels)
}

impl Search<'_> {
    fn explore(&mut self, cells: Cells, path: &mut Vec<usize>) {
        let cells = refine(self.g, cells);
        let Some(target) = cells.iter().position(|c| c.len() > 1) else {
            self.leaf(&cells);
            return;
        };
        let mut explored: Vec<usize> = Vec::new();
        for &v in &cells[target] {
            if !explored.is_empty() && self.same_orbit(path, &explored, v) {
                continue;
            }
            explored.push(v);
            let mut child = cells.clone();
            let rest: Vec<usize> = child[target].iter().copied().filter(|&w| w != v).collect();
            child[target] = vec![v];
            child.insert(target + 1, rest);
            path.push(v);
            self.explore(child, path);
            path.pop();
        }
    }

    /// True if `v` is in the orbit of an explored sibling under the group
    /// generated by known automorphisms that fix `path` pointwise.
    fn same_orbit(&self, path: &[usize], explored: &[usize], v: usize) -> bool {
        let n = self.g.vertex_count();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        let mut any = false;
        for gamma in &self.automorphisms {
            if path.iter().all(|&p| gamma[p] == p) {
                any = true;
                for (x, &y) in gamma.iter().enumerate().take(n) {
                    let (a, b) = (find(&mut parent, x), find(&mut parent, y));
                    parent[a] = b;
                }
            }
        }
        if !any {
            return false;
        }
        let rv = find(&mut parent, v);
        explored.iter().any(|&u| find(&mut parent, u) == rv)
    }

    fn leaf(&mut self, cells: &Cells) {
        let n = self.g.vertex_count();
        let mut labels = vec![0; n];
        for (i, c) in cells.iter().enumerate() {
            labels[c[0]] = i;
        }
        let cert = certificate(self.g, &labels);
        match &self.best {
            None => self.best = Some((cert, labels)),
            Some((best, best_labels)) => match cert.cmp(best) {
                std::cmp::Ordering::Less => self.best = Some((cert, labels)),
                std::cmp::Ordering::Equal => {
                    // gamma(v) = the vertex the best labeling puts where this one puts v
                    let mut inv = vec![0; n];
                    for (v, &l) in best_labels.iter().enumerate() {
                        inv[l] = v;
                    }
                    let gamma: Vec<usize> = labels.iter().map(|&l| inv[l]).collect();
                    if gamma.iter().enumerate().any(|(v, &w)| v != w) {
                        self.automorphisms.push(gamma);
                    }
                }
                std::cmp::Ordering::Greater => {}
            },
        }
    }
}

/// Upper-triangle adjacency bits of the relabeled graph, column by column.
fn certificate(g: &Graph, labels: &[usize]) -> Vec<u8> {
    let n = g.vertex_count();
    let bits = n * n.saturating_sub(1) / 2;
    let mut out = vec![0u8; bits.div_ceil(8)];
    for &(a, b) in g.edges() {
        let (u, v) = {
            let (x, y) = (labels[a], labels[b]);
            if x < y { (x, y) } else { (y, x) }
        };
        let k = v * (v - 1) / 2 + u;
        out[k / 8] |= 0x80 >> (k % 8);
    }
    out
}

/// Coarsest equitable refinement, splitting cells by neighbor counts into
/// each splitter cell; sub-cells are ordered by increasing count.
fn refine(g: &Graph, mut cells: Cells) -> Cells {
    let n = g.vertex_count();
    let mut count = vec![0usize; n];
    'outer: loop {
        for s in 0..cells.len() {
            count.iter_mut().for_each(|c| *c = 0);
            for &x in &cells[s] {
                for y in g.neighbors(x) {
                    count[y] += 1;
                }
            }
            for i in 0..cells.len() {
                if cells[i].len() < 2 {
                    continue;
                }
                let first = count[cells[i][0]];
                if cells[i].iter().all(|&v| count[v] == first) {
                    continue;
                }
                let mut keys: Vec<usize> = cells[i].iter().map(|&v| count[v]).collect();
                keys.sort_unstable();
                keys.dedup();
                let parts: Vec<Vec<usize>> = keys
                    .iter()
                    .map(|&k| cells[i].iter().copied().filter(|&v| count[v] == k).collect())
                    .collect();
                cells.splice(i..=i, parts);
                continue 'outer;
            }
        }
        return cells;
    }
}
