//! Embedded planar graphs as rotation systems (combinatorial maps).
//!
//! A graph is stored as half-edges: every edge splits into two directed
//! half-edges that are twins of each other. Each vertex carries its incident
//! half-edges in clockwise order; faces are the orbits of the face-tracing
//! permutation `h -> rotation-successor of twin(h)`.

use std::collections::HashMap;

use crate::error::{Error, Result};

pub type Vertex = usize;
pub type HalfEdgeId = usize;
pub type EdgeId = usize;
pub type FaceId = usize;

#[derive(Debug, Clone)]
pub struct PlanarGraph {
    /// Per-vertex half-edge ids in clockwise rotation order.
    rotation: Vec<Vec<HalfEdgeId>>,
    origin: Vec<Vertex>,
    target: Vec<Vertex>,
    twin: Vec<HalfEdgeId>,
    /// Edge id shared by a half-edge and its twin.
    edge_of: Vec<EdgeId>,
    /// One representative half-edge per edge (the smaller id of the pair).
    edge_half: Vec<HalfEdgeId>,
    face_of: Vec<FaceId>,
    /// Per-face half-edge ids in trace order.
    faces: Vec<Vec<HalfEdgeId>>,
}

impl PlanarGraph {
    /// Builds a graph from per-vertex clockwise neighbor lists.
    ///
    /// The lists must be symmetric with multiplicity: `u` lists `v` exactly as
    /// often as `v` lists `u`. Parallel edges are paired in order of
    /// appearance; the Euler check below rejects pairings that do not close up
    /// into a spherical embedding.
    pub fn build_from_rotation(adjacency: &[Vec<Vertex>]) -> Result<PlanarGraph> {
        let n = adjacency.len();
        let mut origin = Vec::new();
        let mut target = Vec::new();
        let mut rotation = vec![Vec::new(); n];
        for (u, nbrs) in adjacency.iter().enumerate() {
            for &v in nbrs {
                if v >= n {
                    return Err(Error::AsymmetricAdjacency { u, v });
                }
                if v == u {
                    return Err(Error::LoopEdge(u));
                }
                let h = origin.len();
                origin.push(u);
                target.push(v);
                rotation[u].push(h);
            }
        }
        let m = origin.len();
        // Twin resolution: i-th occurrence of u->v pairs with i-th of v->u.
        let mut by_pair: HashMap<(Vertex, Vertex), Vec<HalfEdgeId>> = HashMap::new();
        for h in 0..m {
            by_pair.entry((origin[h], target[h])).or_default().push(h);
        }
        let mut twin = vec![usize::MAX; m];
        for (&(u, v), fwd) in &by_pair {
            if u > v {
                continue;
            }
            let empty = Vec::new();
            let back = by_pair.get(&(v, u)).unwrap_or(&empty);
            if fwd.len() != back.len() {
                return Err(Error::AsymmetricAdjacency { u, v });
            }
            for (&a, &b) in fwd.iter().zip(back.iter()) {
                twin[a] = b;
                twin[b] = a;
            }
        }
        Self::finish(rotation, origin, target, twin)
    }

    /// Assembles a graph from prebuilt half-edge arrays, tracing faces and
    /// checking the spherical Euler relation.
    fn finish(
        rotation: Vec<Vec<HalfEdgeId>>,
        origin: Vec<Vertex>,
        target: Vec<Vertex>,
        twin: Vec<HalfEdgeId>,
    ) -> Result<PlanarGraph> {
        let n = rotation.len();
        let m = origin.len();
        debug_assert!(twin.iter().all(|&t| t < m));
        debug_assert!((0..m).all(|h| twin[twin[h]] == h));
        let mut rot_pos = vec![0usize; m];
        for rot in &rotation {
            for (i, &h) in rot.iter().enumerate() {
                rot_pos[h] = i;
            }
        }
        let mut edge_of = vec![usize::MAX; m];
        let mut edge_half = Vec::new();
        for h in 0..m {
            if h < twin[h] {
                edge_of[h] = edge_half.len();
                edge_of[twin[h]] = edge_half.len();
                edge_half.push(h);
            }
        }
        // Face tracing: next(h) = successor of twin(h) in the rotation at target(h).
        let mut face_of = vec![usize::MAX; m];
        let mut faces = Vec::new();
        for start in 0..m {
            if face_of[start] != usize::MAX {
                continue;
            }
            let fid = faces.len();
            let mut cycle = Vec::new();
            let mut h = start;
            loop {
                face_of[h] = fid;
                cycle.push(h);
                let t = twin[h];
                let rot = &rotation[origin[t]];
                h = rot[(rot_pos[t] + 1) % rot.len()];
                if h == start {
                    break;
                }
            }
            faces.push(cycle);
        }
        let e = edge_half.len();
        let components = count_components(n, &origin, &target);
        let euler = n as i64 - e as i64 + faces.len() as i64;
        if n > 0 && euler != 1 + components as i64 {
            return Err(Error::NonPlanarEmbedding { euler, components });
        }
        Ok(PlanarGraph {
            rotation,
            origin,
            target,
            twin,
            edge_of,
            edge_half,
            face_of,
            faces,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.rotation.len()
    }
    pub fn edge_count(&self) -> usize {
        self.edge_half.len()
    }
    pub fn face_count(&self) -> usize {
        self.faces.len()
    }
    pub fn half_edge_count(&self) -> usize {
        self.origin.len()
    }
    pub fn degree(&self, v: Vertex) -> usize {
        self.rotation[v].len()
    }
    pub fn origin(&self, h: HalfEdgeId) -> Vertex {
        self.origin[h]
    }
    pub fn target(&self, h: HalfEdgeId) -> Vertex {
        self.target[h]
    }
    pub fn twin(&self, h: HalfEdgeId) -> HalfEdgeId {
        self.twin[h]
    }
    pub fn edge_of(&self, h: HalfEdgeId) -> EdgeId {
        self.edge_of[h]
    }
    pub fn face_of(&self, h: HalfEdgeId) -> FaceId {
        self.face_of[h]
    }
    /// The representative half-edge of an edge (the smaller of the pair).
    pub fn edge_half(&self, e: EdgeId) -> HalfEdgeId {
        self.edge_half[e]
    }
    pub fn edge_endpoints(&self, e: EdgeId) -> (Vertex, Vertex) {
        let h = self.edge_half[e];
        (self.origin[h], self.target[h])
    }
    pub fn rotation(&self, v: Vertex) -> &[HalfEdgeId] {
        &self.rotation[v]
    }
    /// Clockwise neighbor vertex ids around `v`.
    pub fn rotation_neighbors(&self, v: Vertex) -> Vec<Vertex> {
        self.rotation[v].iter().map(|&h| self.target[h]).collect()
    }
    pub fn face(&self, f: FaceId) -> &[HalfEdgeId] {
        &self.faces[f]
    }
    pub fn face_size(&self, f: FaceId) -> usize {
        self.faces[f].len()
    }
    /// Vertices along a face boundary in trace order.
    pub fn face_vertices(&self, f: FaceId) -> Vec<Vertex> {
        self.faces[f].iter().map(|&h| self.origin[h]).collect()
    }
    /// Edge ids on a face boundary.
    pub fn face_edges(&self, f: FaceId) -> Vec<EdgeId> {
        self.faces[f].iter().map(|&h| self.edge_of[h]).collect()
    }

    pub fn is_simple(&self) -> bool {
        for v in 0..self.vertex_count() {
            let mut nbrs: Vec<Vertex> = self.rotation_neighbors(v);
            nbrs.sort_unstable();
            if nbrs.windows(2).any(|w| w[0] == w[1]) || nbrs.contains(&v) {
                return false;
            }
        }
        true
    }

    pub fn are_adjacent(&self, u: Vertex, v: Vertex) -> bool {
        self.rotation[u].iter().any(|&h| self.target[h] == v)
    }

    /// Unweighted hop distances from a set of sources; unreachable vertices
    /// stay at `usize::MAX`.
    pub fn bfs_distance(&self, sources: &[Vertex]) -> Result<Vec<usize>> {
        if sources.is_empty() {
            return Err(Error::EmptySourceSet);
        }
        let mut dist = vec![usize::MAX; self.vertex_count()];
        let mut queue = std::collections::VecDeque::new();
        for &s in sources {
            if dist[s] == usize::MAX {
                dist[s] = 0;
                queue.push_back(s);
            }
        }
        while let Some(u) = queue.pop_front() {
            for &h in &self.rotation[u] {
                let v = self.target[h];
                if dist[v] == usize::MAX {
                    dist[v] = dist[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        Ok(dist)
    }

    /// Checks 3-connectivity by exhaustive removal of vertex pairs.
    pub fn check_three_connected(&self) -> Result<()> {
        let n = self.vertex_count();
        if n < 4 {
            return Err(Error::NotThreeConnected(0, 0));
        }
        let pair_ok = |a: usize, b: usize| -> bool {
            let mut seen = vec![false; n];
            seen[a] = true;
            seen[b] = true;
            let start = (0..n).find(|&v| v != a && v != b).unwrap();
            let mut stack = vec![start];
            seen[start] = true;
            let mut reached = 1;
            while let Some(u) = stack.pop() {
                for &h in &self.rotation[u] {
                    let v = self.target[h];
                    if !seen[v] {
                        seen[v] = true;
                        reached += 1;
                        stack.push(v);
                    }
                }
            }
            reached == n - 2
        };
        let pairs: Vec<(usize, usize)> =
            (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
        #[cfg(feature = "parallel")]
        let bad = {
            use rayon::prelude::*;
            pairs.par_iter().find_first(|&&(a, b)| !pair_ok(a, b)).copied()
        };
        #[cfg(not(feature = "parallel"))]
        let bad = pairs.iter().find(|&&(a, b)| !pair_ok(a, b)).copied();
        match bad {
            Some((a, b)) => Err(Error::NotThreeConnected(a, b)),
            None => Ok(()),
        }
    }

    /// The dual map: one vertex per face, one edge crossing each primal edge.
    ///
    /// Half-edge and edge ids are preserved: dual half-edge `h` runs from
    /// `face_of(h)` to `face_of(twin(h))`, so the dual edge with id `e`
    /// crosses the primal edge with id `e`.
    pub fn dual_graph(&self) -> Result<PlanarGraph> {
        let origin: Vec<Vertex> = (0..self.half_edge_count()).map(|h| self.face_of[h]).collect();
        let target: Vec<Vertex> =
            (0..self.half_edge_count()).map(|h| self.face_of[self.twin[h]]).collect();
        let rotation = self.faces.clone();
        Self::finish(rotation, origin, target, self.twin.clone())
    }

    /// Deletes a vertex set, preserving the remaining rotation order.
    ///
    /// Returns the subgraph and the old-vertex -> new-vertex map. Only valid
    /// for simple graphs (twin pairing is re-derived from neighbor lists).
    pub fn delete_vertices(&self, delete: &[bool]) -> Result<(PlanarGraph, Vec<Option<Vertex>>)> {
        let n = self.vertex_count();
        let mut map = vec![None; n];
        let mut next = 0;
        for v in 0..n {
            if !delete[v] {
                map[v] = Some(next);
                next += 1;
            }
        }
        let mut adjacency = Vec::with_capacity(next);
        for v in 0..n {
            if delete[v] {
                continue;
            }
            let nbrs: Vec<Vertex> = self
                .rotation_neighbors(v)
                .into_iter()
                .filter_map(|u| map[u])
                .collect();
            adjacency.push(nbrs);
        }
        Ok((Self::build_from_rotation(&adjacency)?, map))
    }
}

fn count_components(n: usize, origin: &[Vertex], target: &[Vertex]) -> usize {
    if n == 0 {
        return 0;
    }
    let mut adj = vec![Vec::new(); n];
    for (&u, &v) in origin.iter().zip(target.iter()) {
        adj[u].push(v);
    }
    let mut seen = vec![false; n];
    let mut components = 0;
    for s in 0..n {
        if seen[s] {
            continue;
        }
        components += 1;
        let mut stack = vec![s];
        seen[s] = true;
        while let Some(u) = stack.pop() {
            for &v in &adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    stack.push(v);
                }
            }
        }
    }
    components
}
