//! The dual triangulation of a fullerene graph.

use crate::error::Result;
use crate::fullerene::FullereneGraph;
use crate::graph::{EdgeId, FaceId, PlanarGraph, Vertex};

/// Plane triangulation dual to a fullerene graph: 12 vertices of degree 5,
/// all others of degree 6.
///
/// The construction preserves ids: dual vertex `f` corresponds to primal face
/// `f`, and dual edge `e` crosses primal edge `e`. The accessors below spell
/// that bijection out.
#[derive(Debug, Clone)]
pub struct DualTriangulation {
    graph: PlanarGraph,
    degree5: Vec<Vertex>,
}

impl DualTriangulation {
    pub fn graph(&self) -> &PlanarGraph {
        &self.graph
    }
    /// The set U of 12 degree-5 vertices.
    pub fn degree5(&self) -> &[Vertex] {
        &self.degree5
    }
    /// Primal face corresponding to a dual vertex.
    pub fn primal_face(&self, v: Vertex) -> FaceId {
        v
    }
    /// Dual vertex corresponding to a primal face.
    pub fn dual_vertex(&self, f: FaceId) -> Vertex {
        f
    }
    /// Primal edge crossed by a dual edge.
    pub fn primal_edge(&self, e: EdgeId) -> EdgeId {
        e
    }
}

/// Builds the dual triangulation of a fullerene graph.
pub fn dual(g: &FullereneGraph) -> Result<DualTriangulation> {
    let graph = g.graph().dual_graph()?;
    let degree5: Vec<Vertex> =
        (0..graph.vertex_count()).filter(|&v| graph.degree(v) == 5).collect();
    debug_assert_eq!(degree5.len(), 12);
    debug_assert!((0..graph.face_count()).all(|f| graph.face_size(f) == 3));
    Ok(DualTriangulation { graph, degree5 })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fullerene::{dodecahedron, leapfrog};

    #[test]
    fn dual_of_c20_is_the_icosahedron() {
        let d = dual(&dodecahedron()).unwrap();
        assert_eq!(d.graph().vertex_count(), 12);
        assert_eq!(d.graph().edge_count(), 30);
        assert_eq!(d.graph().face_count(), 20);
        assert_eq!(d.degree5().len(), 12);
        for f in 0..d.graph().face_count() {
            assert_eq!(d.graph().face_size(f), 3);
        }
    }

    #[test]
    fn dual_of_c60_degree_multiset() {
        let d = dual(&leapfrog(&dodecahedron())).unwrap();
        assert_eq!(d.graph().vertex_count(), 32);
        assert_eq!(d.degree5().len(), 12);
        let deg6 = (0..32).filter(|&v| d.graph().degree(v) == 6).count();
        assert_eq!(deg6, 20);
    }

    #[test]
    fn dual_involution_on_fixtures() {
        for g in [dodecahedron(), leapfrog(&dodecahedron())] {
            let d = g.graph().dual_graph().unwrap();
            let dd = d.dual_graph().unwrap();
            assert_eq!(dd.vertex_count(), g.graph().vertex_count());
            let mut map = vec![usize::MAX; dd.vertex_count()];
            for h in 0..g.graph().half_edge_count() {
                let from = dd.origin(h);
                if map[from] == usize::MAX {
                    map[from] = g.graph().origin(h);
                } else {
                    assert_eq!(map[from], g.graph().origin(h));
                }
            }
            let mut seen = vec![false; map.len()];
            for &t in &map {
                assert!(!seen[t]);
                seen[t] = true;
            }
            for u in 0..dd.vertex_count() {
                for v in dd.rotation_neighbors(u) {
                    assert!(g.graph().are_adjacent(map[u], map[v]));
                }
            }
        }
    }

    #[test]
    fn icosahedron_antipodal_distance() {
        let d = dual(&dodecahedron()).unwrap();
        // All sources: every distance zero.
        let all: Vec<usize> = (0..12).collect();
        assert!(d.graph().bfs_distance(&all).unwrap().iter().all(|&x| x == 0));
        // Single source: the icosahedron has diameter 3 with a unique
        // antipodal vertex.
        let dist = d.graph().bfs_distance(&[0]).unwrap();
        assert_eq!(*dist.iter().max().unwrap(), 3);
        assert_eq!(dist.iter().filter(|&&x| x == 3).count(), 1);
    }
}
