//! Census of 3-connected cubic planar graphs, the exhaustive twist-set
//! oracle, and the tables built from them.
//!
//! Graphs on `n + 2` vertices are produced from those on `n` vertices by
//! joining two distinct edges of a common face through two new vertices,
//! starting from `K4`. Duplicates are removed by a planar map code, which
//! is complete for 3-connected graphs because their embedding is unique
//! up to mirror image.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::dual::dual;
use crate::engine::{check_preconditions, enumerate_reembeddings, reembed, twisted_set};
use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::families;
use crate::graph::{EdgeSet, Graph};
use crate::pattern::enumerate_twisted_subgraphs;
use crate::planar::{PlanarEmbedding, RotationSystem};
use crate::scheme::Surface;

/// Largest edge count swept exhaustively unless the caller raises the cap.
pub const DEFAULT_SWEEP_CAP: usize = 15;

/// Graphs on `n + 2` vertices obtained from one embedded graph by a single
/// face insertion, keyed by map code.
fn children(g: &Graph, pe: &PlanarEmbedding) -> Vec<(Vec<u32>, Graph)> {
    let n = g.vertex_count();
    let (x, y) = (n, n + 1);
    let faces: Vec<Vec<usize>> = pe.faces.iter().map(|f| f.vertices.clone()).collect();
    let mut out = Vec::new();
    for (fi, f) in faces.iter().enumerate() {
        let k = f.len();
        for i in 0..k {
            for j in i + 1..k {
                let (p, q) = (f[i], f[(i + 1) % k]);
                let (r, s) = (f[j], f[(j + 1) % k]);
                let mut f1 = vec![x, y];
                let mut t = (j + 1) % k;
                loop {
                    f1.push(f[t]);
                    if t == i {
                        break;
                    }
                    t = (t + 1) % k;
                }
                let mut f2 = vec![x];
                let mut t = (i + 1) % k;
                loop {
                    f2.push(f[t]);
                    if t == j {
                        break;
                    }
                    t = (t + 1) % k;
                }
                f2.push(y);
                let mut new_faces: Vec<Vec<usize>> = Vec::with_capacity(faces.len() + 1);
                for (hi, h) in faces.iter().enumerate() {
                    if hi != fi {
                        new_faces.push(subdivide(&subdivide(h, q, p, x), s, r, y));
                    }
                }
                new_faces.push(f1);
                new_faces.push(f2);
                if let Some(child) = graph_from_faces(n + 2, &new_faces) {
                    out.push(child);
                }
            }
        }
    }
    out
}

/// Inserts `mid` between consecutive `a -> b` on an oriented face cycle.
fn subdivide(face: &[usize], a: usize, b: usize, mid: usize) -> Vec<usize> {
    let k = face.len();
    let mut out = Vec::with_capacity(k + 1);
    for i in 0..k {
        out.push(face[i]);
        if face[i] == a && face[(i + 1) % k] == b {
            out.push(mid);
        }
    }
    out
}

/// Rebuilds graph and rotation from oriented face cycles.
fn graph_from_faces(n: usize, faces: &[Vec<usize>]) -> Option<(Vec<u32>, Graph)> {
    let mut edges: Vec<(usize, usize)> = faces
        .iter()
        .flat_map(|f| (0..f.len()).map(move |i| (f[i].min(f[(i + 1) % f.len()]), f[i].max(f[(i + 1) % f.len()]))))
        .collect();
    edges.sort_unstable();
    edges.dedup();
    let g = Graph::from_edges_sorted(n, edges).ok()?;
    let mut next: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for f in faces {
        let k = f.len();
        for i in 0..k {
            let (u, v, w) = (f[i], f[(i + 1) % k], f[(i + 2) % k]);
            next.insert((v, g.edge_index(u, v)?), g.edge_index(v, w)?);
        }
    }
    let order: Vec<Vec<usize>> = (0..n)
        .map(|v| {
            let first = g.adjacency(v)[0].1;
            let mut cyc = vec![first];
            let mut e = next[&(v, first)];
            while e != first && cyc.len() <= g.degree(v) {
                cyc.push(e);
                e = next[&(v, e)];
            }
            cyc
        })
        .collect();
    let rotation = RotationSystem::new(&g, order).ok()?;
    let pe = PlanarEmbedding::from_rotation(&g, rotation).ok()?;
    Some((pe.map_code(&g), g))
}

/// The census for every even `n` in `4..=n_max`, one level per entry.
/// Each level is sorted by map code.
pub fn census_levels(n_max: usize, exec: Execution) -> Vec<Vec<Graph>> {
    let mut levels: Vec<Vec<Graph>> = Vec::new();
    if n_max < 4 {
        return levels;
    }
    levels.push(vec![families::k4()]);
    while 4 + 2 * levels.len() <= n_max {
        let prev = levels.last().unwrap();
        let batches = exec.map(prev, |g| {
            let pe = crate::planar::planar_embed(g).expect("census graphs are planar");
            children(g, &pe)
        });
        let mut seen: BTreeMap<Vec<u32>, Graph> = BTreeMap::new();
        for (code, child) in batches.into_iter().flatten() {
            seen.entry(code).or_insert(child);
        }
        let candidates: Vec<Graph> = seen.into_values().collect();
        let keep = exec.map(&candidates, |g| g.is_k_connected(3));
        levels.push(candidates.into_iter().zip(keep).filter_map(|(g, k)| k.then_some(g)).collect());
    }
    levels
}

/// All 3-connected cubic planar graphs on `n` vertices, up to isomorphism.
pub fn generate_census(n: usize, exec: Execution) -> Vec<Graph> {
    if n < 4 || n % 2 == 1 {
        return Vec::new();
    }
    census_levels(n, exec).pop().unwrap_or_default()
}

/// Outcome of one twist set in an exhaustive sweep.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleRow {
    pub twists: EdgeSet,
    pub surface: Surface,
    pub strong: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleCount {
    pub surface: Surface,
    pub strong: bool,
    pub count: usize,
}

/// Surface class and strongness of every twist set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleReport {
    pub edge_count: usize,
    /// Indexed by the twist-set mask.
    pub rows: Vec<OracleRow>,
    pub counts: Vec<OracleCount>,
}

impl OracleReport {
    /// Twist sets classified on `surface` (strong ones only if asked).
    pub fn twist_sets(&self, surface: Surface, strong_only: bool) -> BTreeSet<EdgeSet> {
        self.rows
            .iter()
            .filter(|r| r.surface == surface && (r.strong || !strong_only))
            .map(|r| r.twists.clone())
            .collect()
    }

    pub fn count(&self, surface: Surface, strong: Option<bool>) -> usize {
        self.counts
            .iter()
            .filter(|c| c.surface == surface && strong.is_none_or(|s| c.strong == s))
            .map(|c| c.count)
            .sum()
    }
}

/// Classifies all `2^|E|` twist sets directly by face tracing.
pub fn oracle_sweep(g: &Graph, pe: &PlanarEmbedding, cap: usize, exec: Execution) -> Result<OracleReport> {
    let m = g.edge_count();
    if m > cap || m > 40 {
        return Err(Error::SweepTooLarge { edges: m, cap: cap.min(40) });
    }
    let rows = exec
        .map_range(1u64 << m, |mask| {
            let twists = EdgeSet::from_mask(m, mask);
            reembed(pe, &twists).map(|r| OracleRow { twists, surface: r.surface.surface, strong: r.strong })
        })
        .into_iter()
        .collect::<Result<Vec<_>>>()?;
    let mut tally: BTreeMap<(Surface, bool), usize> = BTreeMap::new();
    for r in &rows {
        *tally.entry((r.surface, r.strong)).or_insert(0) += 1;
    }
    let counts = tally.into_iter().map(|((surface, strong), count)| OracleCount { surface, strong, count }).collect();
    Ok(OracleReport { edge_count: m, rows, counts })
}

/// Comparison of the oracle with the pattern families for one surface.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurfaceCheck {
    pub surface: Surface,
    pub strong_only: bool,
    pub oracle: usize,
    pub predicted: usize,
    /// Smallest twist set on which the two disagree.
    pub first_mismatch: Option<EdgeSet>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphVerification {
    pub graph6: String,
    pub checks: Vec<SurfaceCheck>,
}

impl GraphVerification {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.first_mismatch.is_none())
    }
}

/// Sweeps every twist set of `g` and compares each surface class (all
/// re-embeddings and strong ones) with the predicted pattern families.
pub fn verify_graph(g: &Graph, cap: usize, exec: Execution) -> Result<GraphVerification> {
    let pe = check_preconditions(g)?;
    let d = dual(g, &pe)?;
    let report = oracle_sweep(g, &pe, cap, exec)?;
    let mut checks = Vec::new();
    for surface in Surface::TARGETS {
        for strong_only in [false, true] {
            let oracle = report.twist_sets(surface, strong_only);
            let predicted: BTreeSet<EdgeSet> = enumerate_twisted_subgraphs(&d.graph, surface, strong_only)
                .iter()
                .map(|h| twisted_set(h, &d))
                .collect();
            let first_mismatch = oracle.symmetric_difference(&predicted).next().cloned();
            checks.push(SurfaceCheck {
                surface,
                strong_only,
                oracle: oracle.len(),
                predicted: predicted.len(),
                first_mismatch,
            });
        }
    }
    Ok(GraphVerification { graph6: crate::graph6::emit_graph6(g), checks })
}

/// Number of census graphs on `n` vertices, and how many of them have a
/// strong re-embedding on the projective plane, torus and Klein bottle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusRow {
    pub n: usize,
    pub g_count: usize,
    pub p_count: usize,
    pub r_count: usize,
    pub k_count: usize,
}

/// Whether `g` has at least one strong re-embedding on each target surface.
pub fn strong_existence(g: &Graph) -> Result<[bool; 3]> {
    let mut out = [false; 3];
    for (i, s) in Surface::TARGETS.into_iter().enumerate() {
        out[i] = enumerate_reembeddings(g, s, true, Execution::Sequential)?.iter().any(|r| r.strong);
    }
    Ok(out)
}

/// One row per even `n` in `4..=n_max`.
pub fn build_tables(n_max: usize, exec: Execution) -> Result<Vec<CensusRow>> {
    let levels = census_levels(n_max, exec);
    levels
        .iter()
        .enumerate()
        .map(|(i, level)| table_row(4 + 2 * i, level, exec))
        .collect()
}

/// Table row for an arbitrary list of graphs on `n` vertices.
pub fn table_row(n: usize, graphs: &[Graph], exec: Execution) -> Result<CensusRow> {
    let flags = exec.map(graphs, strong_existence).into_iter().collect::<Result<Vec<_>>>()?;
    let count = |i: usize| flags.iter().filter(|f| f[i]).count();
    Ok(CensusRow { n, g_count: graphs.len(), p_count: count(0), r_count: count(1), k_count: count(2) })
}

/// Sufficient conditions read off bipartiteness and cyclic edge
/// connectivity. All flags are false below five vertices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExistencePredicates {
    pub no_strong_projective_guaranteed: bool,
    pub no_strong_torus_guaranteed: bool,
    pub strong_torus_guaranteed: bool,
    pub no_strong_klein_guaranteed: bool,
}

pub fn existence_predicates(g: &Graph) -> ExistencePredicates {
    if g.vertex_count() < 5 {
        return ExistencePredicates {
            no_strong_projective_guaranteed: false,
            no_strong_torus_guaranteed: false,
            strong_torus_guaranteed: false,
            no_strong_klein_guaranteed: false,
        };
    }
    let c4 = g.cyclically_k_edge_connected(4);
    let c5 = c4 && g.cyclically_k_edge_connected(5);
    ExistencePredicates {
        no_strong_projective_guaranteed: g.is_bipartite() || c4,
        no_strong_torus_guaranteed: c5,
        strong_torus_guaranteed: c4 && !c5,
        no_strong_klein_guaranteed: c5,
    }
}

/// `C_{2n} x K_2`: two cycles of length `2n` joined by a perfect matching.
/// Its dual is the bipyramid over a `2n`-gon, whose apexes span `K_{2,2n}`.
pub fn prism_family(n: usize) -> Graph {
    assert!(n >= 2);
    families::prism_cycle(2 * n)
}
