//! Fullerene graphs: validation, the dodecahedron fixture, and the leapfrog
//! construction.

use crate::error::{Error, Result};
use crate::graph::{FaceId, PlanarGraph};

/// A validated fullerene graph: cubic, planar, simple, 3-connected, with all
/// faces pentagons or hexagons (exactly 12 pentagons by Euler's formula).
#[derive(Debug, Clone)]
pub struct FullereneGraph {
    graph: PlanarGraph,
    pentagons: Vec<FaceId>,
    hexagons: Vec<FaceId>,
}

impl FullereneGraph {
    pub fn graph(&self) -> &PlanarGraph {
        &self.graph
    }
    pub fn pentagon_faces(&self) -> &[FaceId] {
        &self.pentagons
    }
    pub fn hexagon_faces(&self) -> &[FaceId] {
        &self.hexagons
    }
    /// Vertex count p.
    pub fn p(&self) -> usize {
        self.graph.vertex_count()
    }
    pub fn face_count(&self) -> usize {
        self.graph.face_count()
    }
}

/// Checks the fullerene property and splits faces into pentagons/hexagons.
pub fn validate_fullerene(graph: PlanarGraph) -> Result<FullereneGraph> {
    for v in 0..graph.vertex_count() {
        let d = graph.degree(v);
        if d != 3 {
            return Err(Error::NotCubic { vertex: v, degree: d });
        }
    }
    if !graph.is_simple() {
        let v = (0..graph.vertex_count())
            .find(|&v| {
                let mut nbrs = graph.rotation_neighbors(v);
                nbrs.sort_unstable();
                nbrs.windows(2).any(|w| w[0] == w[1])
            })
            .unwrap_or(0);
        return Err(Error::NotSimple(v));
    }
    let mut pentagons = Vec::new();
    let mut hexagons = Vec::new();
    for f in 0..graph.face_count() {
        match graph.face_size(f) {
            5 => pentagons.push(f),
            6 => hexagons.push(f),
            size => return Err(Error::BadFaceSize { face: f, size }),
        }
    }
    if pentagons.len() != 12 {
        return Err(Error::PentagonCount(pentagons.len()));
    }
    graph.check_three_connected()?;
    debug_assert_eq!(graph.face_count(), graph.vertex_count() / 2 + 2);
    Ok(FullereneGraph { graph, pentagons, hexagons })
}

/// Clockwise rotation system of the dodecahedron (C20), derived from the
/// standard coordinates and frozen for deterministic labeling.
const DODECAHEDRON_ROTATION: [[usize; 3]; 20] = [
    [9, 10, 8],
    [11, 13, 9],
    [12, 14, 10],
    [17, 12, 13],
    [16, 15, 8],
    [19, 11, 15],
    [18, 16, 14],
    [17, 19, 18],
    [14, 4, 0],
    [1, 0, 15],
    [13, 2, 0],
    [17, 1, 5],
    [3, 18, 2],
    [3, 10, 1],
    [2, 6, 8],
    [5, 9, 4],
    [6, 19, 4],
    [7, 3, 11],
    [12, 7, 6],
    [7, 5, 16],
];

/// The smallest fullerene, C20.
pub fn dodecahedron() -> FullereneGraph {
    let adjacency: Vec<Vec<usize>> =
        DODECAHEDRON_ROTATION.iter().map(|r| r.to_vec()).collect();
    let graph = PlanarGraph::build_from_rotation(&adjacency)
        .expect("dodecahedron rotation table is planar");
    validate_fullerene(graph).expect("dodecahedron is a fullerene")
}

/// Leapfrog transformation: truncation of the dual triangulation.
///
/// Triples the vertex count and keeps exactly 12 pentagons, one per degree-5
/// vertex of the dual. Vertex `h` of the result corresponds to half-edge `h`
/// of the dual triangulation, which makes the labeling deterministic.
pub fn leapfrog(g: &FullereneGraph) -> FullereneGraph {
    let t = g.graph().dual_graph().expect("dual of a fullerene is planar");
    let m = t.half_edge_count();
    let mut adjacency = Vec::with_capacity(m);
    for h in 0..m {
        let u = t.origin(h);
        let rot = t.rotation(u);
        let pos = rot.iter().position(|&x| x == h).unwrap();
        let next = rot[(pos + 1) % rot.len()];
        let prev = rot[(pos + rot.len() - 1) % rot.len()];
        adjacency.push(vec![t.twin(h), next, prev]);
    }
    let graph = PlanarGraph::build_from_rotation(&adjacency)
        .expect("truncation of a triangulation is planar");
    validate_fullerene(graph).expect("leapfrog of a fullerene is a fullerene")
}
