//! Small named graphs used throughout the tests, benches and CLI.

use crate::graph::Graph;

pub fn complete(n: usize) -> Graph {
    Graph::from_edges_sorted(n, (0..n).flat_map(|v| (0..v).map(move |u| (u, v)))).unwrap()
}

pub fn k4() -> Graph {
    complete(4)
}

pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    Graph::from_edges_sorted(a + b, (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v)))).unwrap()
}

pub fn k33() -> Graph {
    complete_bipartite(3, 3)
}

/// `C_m x K_2`: outer cycle `0..m`, inner cycle `m..2m`, rungs `i - (m+i)`.
pub fn prism_cycle(m: usize) -> Graph {
    assert!(m >= 3);
    let mut edges = Vec::new();
    for i in 0..m {
        edges.push((i, (i + 1) % m));
        edges.push((m + i, m + (i + 1) % m));
        edges.push((i, m + i));
    }
    Graph::from_edges_sorted(2 * m, edges).unwrap()
}

/// Triangular prism: triangles `0-1-2`, `3-4-5`, rungs `0-3`, `1-4`, `2-5`.
pub fn prism() -> Graph {
    prism_cycle(3)
}

pub fn cube() -> Graph {
    prism_cycle(4)
}

/// Cubic graph from LCF notation: Hamiltonian cycle plus the listed chords.
pub fn lcf(n: usize, jumps: &[isize]) -> Graph {
    let mut edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    for i in 0..n {
        let j = (i as isize + jumps[i % jumps.len()]).rem_euclid(n as isize) as usize;
        if i < j {
            edges.push((i, j));
        }
    }
    Graph::from_edges_sorted(n, edges).unwrap()
}

pub fn dodecahedron() -> Graph {
    lcf(20, &[10, 7, 4, -4, -7, 10, -4, 7, -7, 4])
}

pub fn octahedron() -> Graph {
    Graph::from_edges_sorted(
        6,
        (0..6).flat_map(|v| (0..v).filter(move |&u| u / 2 != v / 2).map(move |u| (u, v))),
    )
    .unwrap()
}

/// Icosahedron: two poles `0`, `11`, upper ring `1..=5`, lower ring `6..=10`.
pub fn icosahedron() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        let up = 1 + i;
        let up_next = 1 + (i + 1) % 5;
        let low = 6 + i;
        let low_next = 6 + (i + 1) % 5;
        edges.extend([(0, up), (up, up_next), (up, low), (up, low_next), (low, low_next), (low, 11)]);
    }
    Graph::from_edges_sorted(12, edges).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn named_graphs_have_expected_shape() {
        assert_eq!(k4().edge_count(), 6);
        assert!(prism().is_cubic());
        assert!(cube().is_cubic() && cube().edge_count() == 12);
        let d = dodecahedron();
        assert!(d.is_cubic() && d.edge_count() == 30);
        assert!(d.is_k_connected(3));
        let ico = icosahedron();
        assert_eq!(ico.edge_count(), 30);
        assert!((0..12).all(|v| ico.degree(v) == 5));
        assert!((0..6).all(|v| octahedron().degree(v) == 4));
    }
}
