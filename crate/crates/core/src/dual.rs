//! Dual graph of a spherical embedding.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::planar::{PlanarEmbedding, RotationSystem};

/// Dual of a planar embedding. Dual vertex `f` is face `f` of the
/// embedding; dual edge `i` crosses primal edge `i`.
#[derive(Clone, Debug)]
pub struct DualGraph {
    pub graph: Graph,
    /// `primal_to_dual[e]` is the dual edge crossing primal edge `e`.
    pub primal_to_dual: Vec<usize>,
    pub dual_to_primal: Vec<usize>,
    /// Around face `f`, the dual edges in the order of its boundary walk.
    pub rotation: RotationSystem,
}

impl DualGraph {
    pub fn edge_count(&self) -> usize {
        self.graph.edge_count()
    }
}

/// Builds the dual of `pe`; fails if two faces share two edges or an edge
/// lies on only one face.
pub fn dual(g: &Graph, pe: &PlanarEmbedding) -> Result<DualGraph> {
    let m = g.edge_count();
    let mut seen = std::collections::HashMap::new();
    let mut pairs = Vec::with_capacity(m);
    for e in 0..m {
        let [a, b] = pe.edge_faces[e];
        if a == b {
            return Err(Error::DualNotSimple { first: e, second: e });
        }
        let key = (a.min(b), a.max(b));
        if let Some(&first) = seen.get(&key) {
            return Err(Error::DualNotSimple { first, second: e });
        }
        seen.insert(key, e);
        pairs.push(key);
    }
    let graph = Graph::new(pe.faces.len(), pairs)?;
    let order: Vec<Vec<usize>> = pe.faces.iter().map(|f| f.edges.clone()).collect();
    let rotation = RotationSystem::new(&graph, order)?;
    Ok(DualGraph { graph, primal_to_dual: (0..m).collect(), dual_to_primal: (0..m).collect(), rotation })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::canonical_form;
    use crate::families;
    use crate::planar::planar_embed;

    fn dual_of(g: &Graph) -> DualGraph {
        dual(g, &planar_embed(g).unwrap()).unwrap()
    }

    #[test]
    fn k4_is_self_dual() {
        let d = dual_of(&families::k4());
        assert_eq!(canonical_form(&d.graph), canonical_form(&families::k4()));
    }

    #[test]
    fn prism_dual_is_bipyramid() {
        let d = dual_of(&families::prism());
        let mut degrees: Vec<usize> = (0..5).map(|v| d.graph.degree(v)).collect();
        degrees.sort_unstable();
        assert_eq!(degrees, vec![3, 3, 4, 4, 4]);
        let bipyramid = Graph::new(5, [(0, 1), (1, 2), (0, 2), (0, 3), (1, 3), (2, 3), (0, 4), (1, 4), (2, 4)]).unwrap();
        assert_eq!(canonical_form(&d.graph), canonical_form(&bipyramid));
    }

    #[test]
    fn dodecahedron_dual_is_icosahedron() {
        let d = dual_of(&families::dodecahedron());
        assert_eq!(canonical_form(&d.graph), canonical_form(&families::icosahedron()));
    }

    #[test]
    fn double_dual_is_isomorphic_to_primal() {
        for g in [families::k4(), families::prism(), families::cube(), families::prism_cycle(5), families::dodecahedron()] {
            let d = dual_of(&g);
            let dd = dual_of(&d.graph);
            assert_eq!(canonical_form(&dd.graph), canonical_form(&g));
        }
    }

    #[test]
    fn dual_rotation_is_planar() {
        let g = families::cube();
        let d = dual_of(&g);
        let pe = crate::planar::PlanarEmbedding::from_rotation(&d.graph, d.rotation.clone()).unwrap();
        assert_eq!(pe.face_count(), g.vertex_count());
    }

    #[test]
    fn non_simple_dual_rejected() {
        // a 4-cycle: its two faces share all four edges
        let c4 = Graph::new(4, [(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
        let pe = planar_embed(&c4).unwrap();
        assert!(matches!(dual(&c4, &pe), Err(Error::DualNotSimple { .. })));
        let path = Graph::new(3, [(0, 1), (1, 2)]).unwrap();
        let pe = planar_embed(&path).unwrap();
        assert_eq!(dual(&path, &pe).unwrap_err(), Error::DualNotSimple { first: 0, second: 0 });
    }
}
