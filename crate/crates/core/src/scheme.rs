//! Signed embedding schemes and the face traversal procedure.
//!
//! A traversal state is a directed edge together with the current
//! orientation `kappa`. Crossing a twisted edge flips `kappa`; on arrival
//! at `w` the walk continues along `rho_w(e)` when `kappa = +1` and along
//! `rho_w^{-1}(e)` otherwise. The successor map is a permutation of the
//! `4|E|` states, so its orbits are the facial walks, each appearing twice
//! (once per direction).

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::EdgeSet;
use crate::planar::{canonical_cycle, RotationSystem};

/// Twist flags: `lambda(e) = -1` exactly for the edges in the set.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Signature {
    twisted: EdgeSet,
}

impl Signature {
    pub fn untwisted(edge_count: usize) -> Self {
        Signature { twisted: EdgeSet::new(edge_count) }
    }

    pub fn from_twists(twisted: EdgeSet) -> Self {
        Signature { twisted }
    }

    pub fn lambda(&self, e: usize) -> i8 {
        if self.twisted.contains(e) {
            -1
        } else {
            1
        }
    }

    pub fn is_twisted(&self, e: usize) -> bool {
        self.twisted.contains(e)
    }

    pub fn flip(&mut self, e: usize) {
        if self.twisted.contains(e) {
            self.twisted.remove(e);
        } else {
            self.twisted.insert(e);
        }
    }

    pub fn twists(&self) -> &EdgeSet {
        &self.twisted
    }
}

/// A rotation system together with a signature.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EmbeddingScheme {
    pub rotation: RotationSystem,
    pub signature: Signature,
}

/// One step of a facial walk: standing at `vertex` with orientation
/// `kappa`, the walk leaves along `edge`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct WalkStep {
    pub vertex: usize,
    pub edge: usize,
    pub kappa: i8,
}

/// A closed facial walk.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FacialWalk {
    pub steps: Vec<WalkStep>,
}

impl FacialWalk {
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn vertices(&self) -> Vec<usize> {
        self.steps.iter().map(|s| s.vertex).collect()
    }

    pub fn edges(&self) -> Vec<usize> {
        self.steps.iter().map(|s| s.edge).collect()
    }

    /// Smallest rotation of the vertex sequence or of its reversal.
    pub fn canonical(&self) -> Vec<usize> {
        canonical_cycle(&self.vertices())
    }

    pub fn is_edge_simple(&self) -> bool {
        all_distinct(self.steps.iter().map(|s| s.edge))
    }

    /// No repeated vertex (hence no repeated edge).
    pub fn is_cycle(&self) -> bool {
        all_distinct(self.steps.iter().map(|s| s.vertex))
    }
}

fn all_distinct(items: impl Iterator<Item = usize>) -> bool {
    let mut v: Vec<usize> = items.collect();
    let n = v.len();
    v.sort_unstable();
    v.dedup();
    v.len() == n
}

impl EmbeddingScheme {
    pub fn new(rotation: RotationSystem, signature: Signature) -> Self {
        EmbeddingScheme { rotation, signature }
    }

    /// The scheme with rotation `rotation` and exactly `twists` twisted.
    pub fn with_twists(rotation: RotationSystem, twists: EdgeSet) -> Self {
        EmbeddingScheme { rotation, signature: Signature::from_twists(twists) }
    }

    pub fn vertex_count(&self) -> usize {
        self.rotation.vertex_count()
    }

    pub fn edge_count(&self) -> usize {
        self.rotation.edge_count()
    }

    fn encode(&self, s: WalkStep) -> usize {
        let side = usize::from(self.rotation.ends()[s.edge].0 != s.vertex);
        (2 * s.edge + side) * 2 + usize::from(s.kappa < 0)
    }

    fn decode(&self, id: usize) -> WalkStep {
        let kappa = if id % 2 == 1 { -1 } else { 1 };
        let dart = id / 2;
        let (e, side) = (dart / 2, dart % 2);
        let (a, b) = self.rotation.ends()[e];
        WalkStep { vertex: if side == 0 { a } else { b }, edge: e, kappa }
    }

    /// Successor state of the face traversal.
    pub fn next_step(&self, s: WalkStep) -> WalkStep {
        let w = self.rotation.other_end(s.edge, s.vertex);
        let kappa = s.kappa * self.signature.lambda(s.edge);
        let edge = if kappa > 0 { self.rotation.succ(w, s.edge) } else { self.rotation.pred(w, s.edge) };
        WalkStep { vertex: w, edge, kappa }
    }

    /// The same walk traversed backwards.
    fn mirror(&self, s: WalkStep) -> WalkStep {
        let w = self.rotation.other_end(s.edge, s.vertex);
        WalkStep { vertex: w, edge: s.edge, kappa: -s.kappa * self.signature.lambda(s.edge) }
    }

    /// Runs the traversal from `start_vertex` along `start_edge` with
    /// orientation `kappa0` until the starting state recurs.
    pub fn face_traversal(&self, start_vertex: usize, start_edge: usize, kappa0: i8) -> FacialWalk {
        let (a, b) = self.rotation.ends()[start_edge];
        assert!(start_vertex == a || start_vertex == b, "start edge not incident to start vertex");
        let start = WalkStep { vertex: start_vertex, edge: start_edge, kappa: kappa0.signum() };
        let mut steps = vec![start];
        let mut s = self.next_step(start);
        while s != start {
            steps.push(s);
            s = self.next_step(s);
        }
        FacialWalk { steps }
    }

    /// Every facial walk once: orbits of the traversal, one per mirror pair.
    pub fn all_facial_walks(&self) -> Vec<FacialWalk> {
        let total = 4 * self.edge_count();
        let mut seen = vec![false; total];
        let mut walks = Vec::new();
        for id in 0..total {
            if seen[id] {
                continue;
            }
            let walk = self.face_traversal_from(self.decode(id));
            for s in &walk.steps {
                seen[self.encode(*s)] = true;
                seen[self.encode(self.mirror(*s))] = true;
            }
            walks.push(walk);
        }
        walks
    }

    fn face_traversal_from(&self, s: WalkStep) -> FacialWalk {
        self.face_traversal(s.vertex, s.edge, s.kappa)
    }

    /// Reverses `rho_v` and flips the twist of every edge at `v`; the
    /// embedding described is unchanged.
    pub fn local_change(&self, v: usize) -> EmbeddingScheme {
        let mut out = self.clone();
        out.rotation.reverse_at(v);
        for &e in self.rotation.order(v) {
            out.signature.flip(e);
        }
        out
    }

    /// False iff some cycle carries an odd number of twisted edges.
    pub fn is_orientable(&self) -> bool {
        let n = self.vertex_count();
        let mut parity: Vec<Option<u8>> = vec![None; n];
        for root in 0..n {
            if parity[root].is_some() {
                continue;
            }
            parity[root] = Some(0);
            let mut stack = vec![root];
            while let Some(v) = stack.pop() {
                let pv = parity[v].unwrap();
                for &e in self.rotation.order(v) {
                    let w = self.rotation.other_end(e, v);
                    let want = pv ^ u8::from(self.signature.is_twisted(e));
                    match parity[w] {
                        None => {
                            parity[w] = Some(want);
                            stack.push(w);
                        }
                        Some(p) if p != want => return false,
                        Some(_) => {}
                    }
                }
            }
        }
        true
    }

    /// Euler characteristic from the facial walks, plus orientability.
    pub fn classify_surface(&self) -> Result<SurfaceClass> {
        let faces = self.all_facial_walks().len();
        SurfaceClass::new(
            self.vertex_count() as i64 - self.edge_count() as i64 + faces as i64,
            self.is_orientable(),
        )
    }
}

/// The surfaces of non-negative Euler characteristic, plus a catch-all.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Surface {
    Sphere,
    ProjectivePlane,
    Torus,
    KleinBottle,
    Other { chi: i64, orientable: bool },
}

impl Surface {
    /// The three surfaces re-embeddings are searched on.
    pub const TARGETS: [Surface; 3] = [Surface::ProjectivePlane, Surface::Torus, Surface::KleinBottle];

    pub fn euler_characteristic(self) -> i64 {
        match self {
            Surface::Sphere => 2,
            Surface::ProjectivePlane => 1,
            Surface::Torus | Surface::KleinBottle => 0,
            Surface::Other { chi, .. } => chi,
        }
    }

    pub fn is_orientable(self) -> bool {
        match self {
            Surface::Sphere | Surface::Torus => true,
            Surface::ProjectivePlane | Surface::KleinBottle => false,
            Surface::Other { orientable, .. } => orientable,
        }
    }
}

impl fmt::Display for Surface {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Surface::Sphere => f.write_str("sphere"),
            Surface::ProjectivePlane => f.write_str("projective-plane"),
            Surface::Torus => f.write_str("torus"),
            Surface::KleinBottle => f.write_str("klein-bottle"),
            Surface::Other { chi, orientable: true } => write!(f, "other({chi},orientable)"),
            Surface::Other { chi, orientable: false } => write!(f, "other({chi},non-orientable)"),
        }
    }
}

impl FromStr for Surface {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "sphere" => Ok(Surface::Sphere),
            "projective" | "projective-plane" => Ok(Surface::ProjectivePlane),
            "torus" => Ok(Surface::Torus),
            "klein" | "klein-bottle" => Ok(Surface::KleinBottle),
            _ => {
                let inner = s
                    .strip_prefix("other(")
                    .and_then(|r| r.strip_suffix(')'))
                    .ok_or_else(|| format!("unknown surface '{s}'"))?;
                let (chi, kind) = inner.split_once(',').ok_or_else(|| format!("unknown surface '{s}'"))?;
                let chi: i64 = chi.parse().map_err(|_| format!("bad euler characteristic in '{s}'"))?;
                let orientable = match kind {
                    "orientable" => true,
                    "non-orientable" => false,
                    _ => return Err(format!("unknown surface '{s}'")),
                };
                Ok(Surface::Other { chi, orientable })
            }
        }
    }
}

impl Serialize for Surface {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Surface {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Euler characteristic, orientability and the resulting surface name.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SurfaceClass {
    pub euler_characteristic: i64,
    pub orientable: bool,
    pub surface: Surface,
}

impl SurfaceClass {
    pub fn new(chi: i64, orientable: bool) -> Result<Self> {
        if orientable && chi % 2 != 0 {
            return Err(Error::InconsistentSurface { chi, orientable });
        }
        let surface = match (chi, orientable) {
            (2, true) => Surface::Sphere,
            (1, false) => Surface::ProjectivePlane,
            (0, true) => Surface::Torus,
            (0, false) => Surface::KleinBottle,
            _ => Surface::Other { chi, orientable },
        };
        Ok(SurfaceClass { euler_characteristic: chi, orientable, surface })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;
    use crate::graph::Graph;
    use crate::planar::planar_embed;

    /// K4 with the rotation 1:(2,4,3), 2:(1,3,4), 3:(2,1,4), 4:(1,2,3).
    fn k4_scheme(twists: &[(usize, usize)]) -> EmbeddingScheme {
        let g = families::k4();
        let rot = RotationSystem::from_neighbor_orders(
            &g,
            &[vec![1, 3, 2], vec![0, 2, 3], vec![1, 0, 3], vec![0, 1, 2]],
        )
        .unwrap();
        let t = EdgeSet::from_indices(6, twists.iter().map(|&(a, b)| g.edge_index(a - 1, b - 1).unwrap()));
        EmbeddingScheme::with_twists(rot, t)
    }

    fn one_based(w: &[usize]) -> Vec<usize> {
        w.iter().map(|v| v + 1).collect()
    }

    fn canonical_set(s: &EmbeddingScheme) -> Vec<Vec<usize>> {
        let mut c: Vec<Vec<usize>> = s.all_facial_walks().iter().map(|w| one_based(&w.canonical())).collect();
        c.sort();
        c
    }

    #[test]
    fn single_twist_on_k4() {
        let s = k4_scheme(&[(1, 2)]);
        let g = families::k4();
        let walk = s.face_traversal(0, g.edge_index(0, 1).unwrap(), 1);
        assert_eq!(one_based(&walk.vertices()), vec![1, 2, 4, 1, 2, 3]);
        assert_eq!(canonical_set(&s), vec![vec![1, 2, 3, 1, 2, 4], vec![1, 3, 4], vec![2, 3, 4]]);
        let class = s.classify_surface().unwrap();
        assert_eq!(class.surface, Surface::ProjectivePlane);
        assert_eq!(class.euler_characteristic, 1);
        assert!(!s.is_orientable());
    }

    #[test]
    fn untwisted_traversal_gives_planar_faces() {
        for g in [families::k4(), families::prism(), families::cube(), families::dodecahedron()] {
            let pe = planar_embed(&g).unwrap();
            let s = EmbeddingScheme::with_twists(pe.rotation.clone(), EdgeSet::new(g.edge_count()));
            let mut walks: Vec<Vec<usize>> = s.all_facial_walks().iter().map(FacialWalk::canonical).collect();
            walks.sort();
            let mut faces: Vec<Vec<usize>> = pe.faces.iter().map(|f| f.canonical_cycle()).collect();
            faces.sort();
            assert_eq!(walks, faces);
            assert_eq!(s.classify_surface().unwrap().surface, Surface::Sphere);
        }
    }

    #[test]
    fn all_edges_twisted_on_k4() {
        let s = k4_scheme(&[(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]);
        let walks = s.all_facial_walks();
        assert_eq!(walks.len(), 3);
        assert!(walks.iter().all(FacialWalk::is_edge_simple));
        assert_eq!(s.classify_surface().unwrap().surface, Surface::ProjectivePlane);
    }

    #[test]
    fn local_change_keeps_walks() {
        let s = k4_scheme(&[(1, 2)]);
        let t = s.local_change(2);
        assert_eq!(canonical_set(&s), canonical_set(&t));
        assert_eq!(t.local_change(2), s);
        let mut all = s.clone();
        for v in 0..4 {
            all = all.local_change(v);
        }
        assert_eq!(all.signature, s.signature);
        assert_eq!(all.rotation, s.rotation.reversed());
    }

    /// Brute force: non-orientable iff some cycle has odd twist parity.
    fn orientable_by_cycles(g: &Graph, twists: &EdgeSet) -> bool {
        let m = g.edge_count();
        for mask in 1u64..1 << m {
            let set = EdgeSet::from_mask(m, mask);
            let (h, _, emap) = g.edge_subgraph(&set);
            if h.is_connected() && (0..h.vertex_count()).all(|v| h.degree(v) == 2) {
                let odd = emap.iter().filter(|&&e| twists.contains(e)).count() % 2 == 1;
                if odd {
                    return false;
                }
            }
        }
        true
    }

    #[test]
    fn orientability_matches_cycle_definition() {
        for g in [families::k4(), families::prism()] {
            let pe = planar_embed(&g).unwrap();
            let m = g.edge_count();
            for mask in 0u64..1 << m {
                let t = EdgeSet::from_mask(m, mask);
                let s = EmbeddingScheme::with_twists(pe.rotation.clone(), t.clone());
                assert_eq!(s.is_orientable(), orientable_by_cycles(&g, &t), "mask {mask:b}");
            }
        }
    }

    #[test]
    fn surface_names_roundtrip() {
        for s in [
            Surface::Sphere,
            Surface::ProjectivePlane,
            Surface::Torus,
            Surface::KleinBottle,
            Surface::Other { chi: -2, orientable: true },
            Surface::Other { chi: -1, orientable: false },
        ] {
            assert_eq!(s.to_string().parse::<Surface>().unwrap(), s);
        }
        assert_eq!("klein".parse::<Surface>().unwrap(), Surface::KleinBottle);
        assert!("moebius".parse::<Surface>().is_err());
    }

    #[test]
    fn odd_orientable_is_rejected() {
        assert_eq!(SurfaceClass::new(1, true), Err(Error::InconsistentSurface { chi: 1, orientable: true }));
        assert_eq!(SurfaceClass::new(-1, false).unwrap().surface, Surface::Other { chi: -1, orientable: false });
    }
}
