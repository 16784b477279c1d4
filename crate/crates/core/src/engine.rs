//! Re-embeddings of a planar graph obtained by twisting an edge set, and
//! the dual-side strongness test.
//!
//! Twisting the primal edges dual to a subgraph `H` of the dual gives the
//! re-embedding. It is strong when every facial walk is a cycle; the
//! direct route traces all walks, the dual route walks `H` only.

use serde::{Deserialize, Serialize};

use crate::canon::canonical_form_colored;
use crate::dual::{dual, DualGraph};
use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::graph::{EdgeSet, Graph};
use crate::pattern::{enumerate_twisted_subgraphs, PatternKind, TwistedSubgraph};
use crate::planar::{planar_embed, PlanarEmbedding, RotationSystem};
use crate::scheme::{EmbeddingScheme, FacialWalk, Surface, SurfaceClass};

/// The embedding obtained from the spherical one by twisting `twist_set`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReEmbedding {
    pub twist_set: EdgeSet,
    /// Facial walks sorted by canonical form.
    pub walks: Vec<FacialWalk>,
    pub surface: SurfaceClass,
    /// Every facial walk is a cycle.
    pub strong: bool,
    pub source: Option<TwistedSubgraph>,
}

impl ReEmbedding {
    pub fn pattern(&self) -> Option<PatternKind> {
        self.source.as_ref().map(|h| h.kind)
    }
}

/// Primal twist set of a dual subgraph.
pub fn twisted_set(h: &TwistedSubgraph, d: &DualGraph) -> EdgeSet {
    EdgeSet::from_indices(d.dual_to_primal.len(), h.edges.iter().map(|e| d.dual_to_primal[e]))
}

/// Traces every facial walk of the re-embedding given by `twists`.
pub fn reembed(pe: &PlanarEmbedding, twists: &EdgeSet) -> Result<ReEmbedding> {
    let scheme = EmbeddingScheme::with_twists(pe.rotation.clone(), twists.clone());
    let mut walks = scheme.all_facial_walks();
    walks.sort_by_cached_key(FacialWalk::canonical);
    let chi = scheme.vertex_count() as i64 - scheme.edge_count() as i64 + walks.len() as i64;
    let surface = SurfaceClass::new(chi, scheme.is_orientable())?;
    let strong = walks.iter().all(FacialWalk::is_cycle);
    Ok(ReEmbedding { twist_set: twists.clone(), walks, surface, strong, source: None })
}

/// Surface class and strongness only, without keeping the walks.
pub fn classify_twists(pe: &PlanarEmbedding, twists: &EdgeSet) -> Result<(SurfaceClass, bool)> {
    let r = reembed(pe, twists)?;
    Ok((r.surface, r.strong))
}

/// True if some face carries exactly two twisted edges and they are
/// adjacent; such a re-embedding is never strong.
pub fn adjacent_twist_filter(g: &Graph, pe: &PlanarEmbedding, twists: &EdgeSet) -> bool {
    pe.faces.iter().any(|f| {
        let t: Vec<usize> = f.edges.iter().copied().filter(|&e| twists.contains(e)).collect();
        if t.len() != 2 {
            return false;
        }
        let (a, b) = (g.edge(t[0]), g.edge(t[1]));
        a.0 == b.0 || a.0 == b.1 || a.1 == b.0 || a.1 == b.1
    })
}

/// True if the twisted subgraph has a bridge, a vertex of degree one, or
/// is a `K_{1,1,m}`; the re-embedding is then never strong.
pub fn never_strong_shape(host: &Graph, edges: &EdgeSet) -> bool {
    let (h, _, _) = host.edge_subgraph(edges);
    let n = h.vertex_count();
    if (0..n).any(|v| h.degree(v) == 1) || !h.bridges().is_empty() {
        return true;
    }
    is_k11m(&h)
}

fn is_k11m(h: &Graph) -> bool {
    let n = h.vertex_count();
    if n < 3 || h.edge_count() != 2 * (n - 2) + 1 {
        return false;
    }
    let hubs: Vec<usize> = (0..n).filter(|&v| h.degree(v) == n - 1).collect();
    hubs.iter().enumerate().any(|(i, &x)| {
        hubs[i + 1..].iter().any(|&y| {
            (0..n).filter(|&z| z != x && z != y).all(|z| h.degree(z) == 2 && h.has_edge(x, z) && h.has_edge(y, z))
        })
    })
}

/// One position of a dual facial walk: the dual vertex, the untwisted dual
/// edges passed at it before leaving along the next twisted edge, and their
/// far endpoints.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DualWalkEntry {
    pub vertex: usize,
    pub visited_vertices: Vec<usize>,
    pub visited_edges: Vec<usize>,
    /// Twisted dual edge leaving this position.
    pub twisted_edge: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DualFacialWalk {
    pub entries: Vec<DualWalkEntry>,
}

impl DualFacialWalk {
    /// Primal edges of the corresponding facial walk of the re-embedding,
    /// in walk order.
    pub fn primal_edges(&self, d: &DualGraph) -> Vec<usize> {
        self.entries
            .iter()
            .flat_map(|en| en.visited_edges.iter().chain(std::iter::once(&en.twisted_edge)))
            .map(|&e| d.dual_to_primal[e])
            .collect()
    }

    /// Vertex sequence of the corresponding primal facial walk.
    pub fn primal_walk(&self, g: &Graph, d: &DualGraph) -> Vec<usize> {
        let edges = self.primal_edges(d);
        let k = edges.len();
        (0..k)
            .map(|j| {
                let (a, b) = g.edge(edges[(j + k - 1) % k]);
                let (c, e) = g.edge(edges[j]);
                if a == c || a == e {
                    a
                } else {
                    debug_assert!(b == c || b == e);
                    b
                }
            })
            .collect()
    }
}

/// The walks of the twisted subgraph repeat this dual edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NotEdgeSimple {
    pub dual_edge: usize,
}

/// Facial walks of the twisted subgraph with every edge twisted and the
/// rotation inherited from the dual, annotated with visited edges.
pub fn dual_facial_walks(d: &DualGraph, edges: &EdgeSet) -> std::result::Result<Vec<DualFacialWalk>, NotEdgeSimple> {
    let (h, vmap, emap) = d.graph.edge_subgraph(edges);
    let local_edge = |e: usize| emap.binary_search(&e).ok();
    let order: Vec<Vec<usize>> =
        vmap.iter().map(|&v| d.rotation.order(v).iter().filter_map(|&e| local_edge(e)).collect()).collect();
    let rotation = RotationSystem::new(&h, order).expect("restricted rotation is valid");
    let scheme = EmbeddingScheme::with_twists(rotation, EdgeSet::from_indices(h.edge_count(), 0..h.edge_count()));
    let walks = scheme.all_facial_walks();
    for w in &walks {
        let mut seen = EdgeSet::new(h.edge_count());
        for s in &w.steps {
            if seen.contains(s.edge) {
                return Err(NotEdgeSimple { dual_edge: emap[s.edge] });
            }
            seen.insert(s.edge);
        }
    }
    Ok(walks
        .iter()
        .map(|w| {
            let k = w.steps.len();
            let entries = (0..k)
                .map(|i| {
                    let s = w.steps[i];
                    let vertex = vmap[s.vertex];
                    let e_in = emap[w.steps[(i + k - 1) % k].edge];
                    let e_out = emap[s.edge];
                    let mut visited_edges = Vec::new();
                    let mut e = e_in;
                    loop {
                        e = if s.kappa > 0 { d.rotation.succ(vertex, e) } else { d.rotation.pred(vertex, e) };
                        if e == e_out {
                            break;
                        }
                        visited_edges.push(e);
                    }
                    let visited_vertices = visited_edges.iter().map(|&e| d.graph.other_end(e, vertex)).collect();
                    DualWalkEntry { vertex, visited_vertices, visited_edges, twisted_edge: e_out }
                })
                .collect();
            DualFacialWalk { entries }
        })
        .collect())
}

/// Not strong iff some walk has positions `l != m` with `w_l` visited at
/// `m` and `w_m` visited at `l`.
pub fn strong_by_dual_criterion(walks: &[DualFacialWalk]) -> bool {
    !walks.iter().any(|w| {
        let en = &w.entries;
        (0..en.len()).any(|l| {
            (l + 1..en.len()).any(|m| {
                en[l].vertex != en[m].vertex
                    && en[m].visited_vertices.contains(&en[l].vertex)
                    && en[l].visited_vertices.contains(&en[m].vertex)
            })
        })
    })
}

/// Strongness decided on the dual side only.
pub fn strong_via_dual(d: &DualGraph, edges: &EdgeSet) -> bool {
    match dual_facial_walks(d, edges) {
        Ok(walks) => strong_by_dual_criterion(&walks),
        Err(_) => false,
    }
}

/// Checks that `g` is connected, cubic, 3-connected and planar, and
/// returns its spherical embedding.
pub fn check_preconditions(g: &Graph) -> Result<PlanarEmbedding> {
    if !g.is_connected() {
        return Err(Error::NotConnected);
    }
    if let Some(v) = (0..g.vertex_count()).find(|&v| g.degree(v) != 3) {
        return Err(Error::NotCubic { vertex: v, degree: g.degree(v) });
    }
    if !g.is_k_connected(3) {
        return Err(Error::NotThreeConnected);
    }
    planar_embed(g)
}

/// All inequivalent re-embeddings on `surface` (strong ones only if
/// requested), one per pattern subgraph of the dual, sorted by twist set.
pub fn enumerate_reembeddings(g: &Graph, surface: Surface, strong_only: bool, exec: Execution) -> Result<Vec<ReEmbedding>> {
    if !Surface::TARGETS.contains(&surface) {
        return Err(Error::InvalidGraph(format!("no re-embedding families for {surface}")));
    }
    let pe = check_preconditions(g)?;
    let d = dual(g, &pe)?;
    let hs = enumerate_twisted_subgraphs(&d.graph, surface, strong_only);
    let results = exec.map(&hs, |h| {
        let mut r = reembed(&pe, &twisted_set(h, &d))?;
        r.source = Some(h.clone());
        Ok(r)
    });
    let mut out = results.into_iter().collect::<Result<Vec<_>>>()?;
    out.sort_by(|a, b| a.twist_set.cmp(&b.twist_set));
    Ok(out)
}

/// Keeps one re-embedding per orbit of the automorphism group of `g`
/// acting on twist sets.
pub fn fold_automorphisms(g: &Graph, results: Vec<ReEmbedding>) -> Vec<ReEmbedding> {
    let mut seen = std::collections::HashSet::new();
    results.into_iter().filter(|r| seen.insert(twist_orbit_key(g, &r.twist_set))).collect()
}

/// Canonical form of `g` with every twisted edge subdivided by a marked vertex.
fn twist_orbit_key(g: &Graph, twists: &EdgeSet) -> Vec<u8> {
    let n = g.vertex_count();
    let mut edges = Vec::new();
    let mut colors = vec![0; n];
    for (e, &(a, b)) in g.edges().iter().enumerate() {
        if twists.contains(e) {
            let mid = colors.len();
            colors.push(1);
            edges.extend([(a, mid), (mid, b)]);
        } else {
            edges.push((a, b));
        }
    }
    let sub = Graph::new(colors.len(), edges).expect("subdivision is simple");
    canonical_form_colored(&sub, &colors)
}
