//! Perfect matchings: color classes, resonant hexagons, switch enumeration,
//! and the brute-force enumeration oracle.

use num_bigint::BigUint;

use crate::coloring::{EdgeColor, TaitColoring};
use crate::error::{Error, Result};
use crate::fullerene::FullereneGraph;
use crate::graph::{EdgeId, FaceId, PlanarGraph};
use crate::witness::WitnessSet;

/// Where a matching came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MatchingSource {
    ColorClass(EdgeColor),
    Switched,
    Enumerated,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PerfectMatching {
    /// Sorted primal edge ids.
    pub edges: Vec<EdgeId>,
    pub source: MatchingSource,
}

impl PerfectMatching {
    /// Checks exact vertex cover and size p/2.
    pub fn validate(&self, g: &PlanarGraph) -> bool {
        if self.edges.len() != g.vertex_count() / 2 {
            return false;
        }
        let mut covered = vec![false; g.vertex_count()];
        for &e in &self.edges {
            let (u, v) = g.edge_endpoints(e);
            if covered[u] || covered[v] {
                return false;
            }
            covered[u] = true;
            covered[v] = true;
        }
        covered.iter().all(|&c| c)
    }
}

/// Hexagonal faces incident with exactly three matching edges.
#[derive(Debug, Clone)]
pub struct ResonantSet {
    pub faces: Vec<FaceId>,
    /// True iff no two faces share a vertex.
    pub disjoint: bool,
}

/// The three color classes of a Tait coloring as matchings.
pub fn class_matchings(g: &FullereneGraph, t: &TaitColoring) -> [PerfectMatching; 3] {
    EdgeColor::ALL.map(|color| {
        let edges: Vec<EdgeId> = (0..g.graph().edge_count())
            .filter(|&e| t.edge_colors[e] == color)
            .collect();
        let m = PerfectMatching { edges, source: MatchingSource::ColorClass(color) };
        debug_assert!(m.validate(g.graph()));
        m
    })
}

/// Resonant hexagons of a matching, optionally restricted to a face set.
pub fn resonant_faces(
    g: &FullereneGraph,
    m: &PerfectMatching,
    restrict: Option<&[FaceId]>,
) -> ResonantSet {
    let in_matching = edge_membership(g.graph(), m);
    let candidates: Vec<FaceId> = match restrict {
        Some(faces) => faces.to_vec(),
        None => g.hexagon_faces().to_vec(),
    };
    let faces: Vec<FaceId> = candidates
        .into_iter()
        .filter(|&f| {
            g.graph().face_size(f) == 6
                && g.graph().face_edges(f).iter().filter(|&&e| in_matching[e]).count() == 3
        })
        .collect();
    let disjoint = faces_vertex_disjoint(g.graph(), &faces);
    ResonantSet { faces, disjoint }
}

fn edge_membership(g: &PlanarGraph, m: &PerfectMatching) -> Vec<bool> {
    let mut in_matching = vec![false; g.edge_count()];
    for &e in &m.edges {
        in_matching[e] = true;
    }
    in_matching
}

fn faces_vertex_disjoint(g: &PlanarGraph, faces: &[FaceId]) -> bool {
    let mut used = vec![false; g.vertex_count()];
    for &f in faces {
        for v in g.face_vertices(f) {
            if used[v] {
                return false;
            }
            used[v] = true;
        }
    }
    true
}

/// Primal faces corresponding to the inner-ring dual vertices of every
/// witness: the 6|W| hexagons the resonance tally runs over.
pub fn witness_adjacent_faces(w: &WitnessSet) -> Vec<FaceId> {
    // Dual vertex ids equal primal face ids.
    w.patches.iter().flat_map(|p| p.inner_ring.iter().copied()).collect()
}

/// The canonical class of each witness-adjacent face: a face whose dual
/// vertex `x` neighbors witness `v` has three non-adjacent boundary edges of
/// class `pair_class(color(x), c(v))`, so it is resonant there. A face can
/// accidentally be resonant in a second class too (the other three boundary
/// edges may also be monochromatic), but the canonical assignment is what the
/// pigeonhole and disjointness arguments run over.
pub fn canonical_classes(
    w: &WitnessSet,
    dc: &crate::coloring::DualColoring,
) -> Vec<(FaceId, EdgeColor)> {
    let mut out = Vec::new();
    for (wi, patch) in w.patches.iter().enumerate() {
        let cv = dc.witness_colors[wi];
        for &x in &patch.inner_ring {
            out.push((x, crate::coloring::pair_class(dc.colors[x], cv)));
        }
    }
    out
}

/// Picks the color class with the most canonically resonant witness-adjacent
/// hexagons and certifies the pigeonhole guarantee (>= 2|W|) and pairwise
/// disjointness.
pub fn best_class(
    g: &FullereneGraph,
    t: &TaitColoring,
    w: &WitnessSet,
    dc: &crate::coloring::DualColoring,
) -> Result<(PerfectMatching, ResonantSet)> {
    let canonical = canonical_classes(w, dc);
    let classes = class_matchings(g, t);
    // Every face must indeed be resonant in its canonical class.
    for &(f, class) in &canonical {
        let m = &classes[class.index()];
        let r = resonant_faces(g, m, Some(&[f]));
        if r.faces.is_empty() {
            return Err(Error::NotResonant(f));
        }
    }
    let counts = canonical_counts(&canonical);
    let best = (0..3).max_by_key(|&i| counts[i]).unwrap();
    let faces: Vec<FaceId> = canonical
        .iter()
        .filter(|&&(_, class)| class.index() == best)
        .map(|&(f, _)| f)
        .collect();
    let [a, b, c] = classes;
    let matching = match best {
        0 => a,
        1 => b,
        _ => c,
    };
    if faces.len() < 2 * w.len() {
        return Err(Error::PigeonholeViolated { count: faces.len(), expected: 2 * w.len() });
    }
    let disjoint = faces_vertex_disjoint(g.graph(), &faces);
    if !disjoint {
        return Err(Error::NotDisjoint);
    }
    Ok((matching, ResonantSet { faces, disjoint }))
}

/// Per-class tallies of the canonical assignment; they sum to 6|W|.
pub fn canonical_counts(canonical: &[(FaceId, EdgeColor)]) -> [usize; 3] {
    let mut counts = [0usize; 3];
    for &(_, class) in canonical {
        counts[class.index()] += 1;
    }
    counts
}

/// Result of switching every subset of a disjoint resonant set.
pub struct SwitchEnumeration {
    /// 2^|S| as an exact integer.
    pub count: BigUint,
    /// Materialized matchings, capped; empty beyond the cap.
    pub matchings: Vec<PerfectMatching>,
}

/// Complements the boundary edges of every subset of `s` in `m`.
///
/// All results are valid perfect matchings and pairwise distinct; they are
/// materialized only up to `cap`, the count is exact regardless.
pub fn switch_enumerate(
    g: &FullereneGraph,
    m: &PerfectMatching,
    s: &ResonantSet,
    cap: u64,
) -> Result<SwitchEnumeration> {
    if !s.disjoint || !faces_vertex_disjoint(g.graph(), &s.faces) {
        return Err(Error::NotDisjoint);
    }
    let in_matching = edge_membership(g.graph(), m);
    for &f in &s.faces {
        let hit = g.graph().face_edges(f).iter().filter(|&&e| in_matching[e]).count();
        if g.graph().face_size(f) != 6 || hit != 3 {
            return Err(Error::NotResonant(f));
        }
    }
    let k = s.faces.len();
    let count = BigUint::from(1u32) << k;
    let materialize = k < 64 && (1u64 << k) <= cap;
    let mut matchings = Vec::new();
    if materialize {
        let face_edges: Vec<Vec<EdgeId>> =
            s.faces.iter().map(|&f| g.graph().face_edges(f)).collect();
        for mask in 0..1u64 << k {
            let mut flags = in_matching.clone();
            for (i, edges) in face_edges.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    for &e in edges {
                        flags[e] = !flags[e];
                    }
                }
            }
            let edges: Vec<EdgeId> = (0..flags.len()).filter(|&e| flags[e]).collect();
            let switched = PerfectMatching { edges, source: MatchingSource::Switched };
            if !switched.validate(g.graph()) {
                return Err(Error::NotResonant(s.faces[0]));
            }
            matchings.push(switched);
        }
    }
    Ok(SwitchEnumeration { count, matchings })
}

/// All perfect matchings by branching on the lowest uncovered vertex, in
/// deterministic order.
pub fn brute_enumerate(g: &PlanarGraph, cap: u64) -> Result<Vec<PerfectMatching>> {
    let n = g.vertex_count();
    let mut out = Vec::new();
    if n % 2 != 0 {
        return Ok(out);
    }
    let mut covered = vec![false; n];
    let mut chosen: Vec<EdgeId> = Vec::new();
    fn go(
        g: &PlanarGraph,
        covered: &mut [bool],
        chosen: &mut Vec<EdgeId>,
        out: &mut Vec<PerfectMatching>,
        cap: u64,
    ) -> Result<()> {
        let Some(u) = covered.iter().position(|&c| !c) else {
            if out.len() as u64 >= cap {
                return Err(Error::CapExceeded(cap));
            }
            let mut edges = chosen.clone();
            edges.sort_unstable();
            out.push(PerfectMatching { edges, source: MatchingSource::Enumerated });
            return Ok(());
        };
        covered[u] = true;
        for &h in g.rotation(u) {
            let v = g.target(h);
            if covered[v] {
                continue;
            }
            covered[v] = true;
            chosen.push(g.edge_of(h));
            go(g, covered, chosen, out, cap)?;
            chosen.pop();
            covered[v] = false;
        }
        covered[u] = false;
        Ok(())
    }
    go(g, &mut covered, &mut chosen, &mut out, cap)?;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::{build_reduced, extend_coloring, four_color, tait_edge_coloring};
    use crate::dual::dual;
    use crate::fullerene::{dodecahedron, leapfrog};
    use crate::witness::select_witnesses;

    fn tait(g: &FullereneGraph) -> TaitColoring {
        let d = dual(g).unwrap();
        let w = select_witnesses(&d).unwrap();
        let r = build_reduced(&d, &w).unwrap();
        let hc = four_color(&r.h, None, 0).unwrap();
        let dc = extend_coloring(&d, &w, &r, &hc).unwrap();
        tait_edge_coloring(&d, &dc, g)
    }

    #[test]
    fn classes_partition_the_edges() {
        let g = leapfrog(&dodecahedron());
        let t = tait(&g);
        let classes = class_matchings(&g, &t);
        let mut all: Vec<EdgeId> = Vec::new();
        for m in &classes {
            assert_eq!(m.edges.len(), 30);
            assert!(m.validate(g.graph()));
            all.extend(&m.edges);
        }
        all.sort_unstable();
        assert_eq!(all, (0..90).collect::<Vec<_>>());
    }

    #[test]
    fn pentagons_are_never_resonant() {
        let g = dodecahedron();
        let t = tait(&g);
        for m in class_matchings(&g, &t) {
            let all_faces: Vec<FaceId> = (0..g.face_count()).collect();
            let r = resonant_faces(&g, &m, Some(&all_faces));
            assert!(r.faces.is_empty());
        }
    }

    #[test]
    fn six_cycle_brute_enumeration() {
        let g = PlanarGraph::build_from_rotation(&[
            vec![1, 5],
            vec![2, 0],
            vec![3, 1],
            vec![4, 2],
            vec![5, 3],
            vec![0, 4],
        ])
        .unwrap();
        let ms = brute_enumerate(&g, 1 << 20).unwrap();
        assert_eq!(ms.len(), 2);
        assert!(ms.iter().all(|m| m.validate(&g)));
        assert_ne!(ms[0].edges, ms[1].edges);
    }

    #[test]
    fn k4_has_three_matchings() {
        let g = PlanarGraph::build_from_rotation(&[
            vec![1, 2, 3],
            vec![0, 3, 2],
            vec![0, 1, 3],
            vec![0, 2, 1],
        ])
        .unwrap();
        assert_eq!(brute_enumerate(&g, 100).unwrap().len(), 3);
    }

    #[test]
    fn cap_is_enforced() {
        let g = dodecahedron();
        assert!(matches!(brute_enumerate(g.graph(), 10), Err(Error::CapExceeded(10))));
    }

    #[test]
    fn switch_on_a_single_hexagon() {
        let g = leapfrog(&dodecahedron());
        let t = tait(&g);
        let classes = class_matchings(&g, &t);
        // Find any resonant hexagon of class a and flip it.
        let r = resonant_faces(&g, &classes[0], None);
        assert!(!r.faces.is_empty());
        let single = ResonantSet { faces: vec![r.faces[0]], disjoint: true };
        let sw = switch_enumerate(&g, &classes[0], &single, 1 << 20).unwrap();
        assert_eq!(sw.count, BigUint::from(2u32));
        assert_eq!(sw.matchings.len(), 2);
        let differ: Vec<EdgeId> = sw.matchings[0]
            .edges
            .iter()
            .filter(|e| !sw.matchings[1].edges.contains(e))
            .copied()
            .collect();
        assert_eq!(differ.len(), 3);
    }

    #[test]
    fn switching_every_single_resonant_hexagon_is_sound() {
        let g = leapfrog(&dodecahedron());
        let t = tait(&g);
        for m in class_matchings(&g, &t) {
            let r = resonant_faces(&g, &m, None);
            for &f in &r.faces {
                let single = ResonantSet { faces: vec![f], disjoint: true };
                let sw = switch_enumerate(&g, &m, &single, 4).unwrap();
                assert!(sw.matchings.iter().all(|x| x.validate(g.graph())));
            }
        }
    }

    #[test]
    fn switch_rejects_non_resonant_and_overlapping() {
        let g = leapfrog(&dodecahedron());
        let t = tait(&g);
        let classes = class_matchings(&g, &t);
        let r = resonant_faces(&g, &classes[0], None);
        let not_resonant: Vec<FaceId> = (0..g.face_count())
            .filter(|f| g.graph().face_size(*f) == 6 && !r.faces.contains(f))
            .take(1)
            .collect();
        let bad = ResonantSet { faces: not_resonant, disjoint: true };
        assert!(matches!(
            switch_enumerate(&g, &classes[0], &bad, 4),
            Err(Error::NotResonant(_))
        ));
        let overlapping = ResonantSet { faces: vec![r.faces[0], r.faces[0]], disjoint: false };
        assert!(matches!(
            switch_enumerate(&g, &classes[0], &overlapping, 4),
            Err(Error::NotDisjoint)
        ));
    }

    #[test]
    fn empty_switch_set_returns_the_matching_itself() {
        let g = dodecahedron();
        let t = tait(&g);
        let classes = class_matchings(&g, &t);
        let empty = ResonantSet { faces: vec![], disjoint: true };
        let sw = switch_enumerate(&g, &classes[0], &empty, 1 << 20).unwrap();
        assert_eq!(sw.count, BigUint::from(1u32));
        assert_eq!(sw.matchings.len(), 1);
        assert_eq!(sw.matchings[0].edges, classes[0].edges);
    }

    #[test]
    fn c540_witness_adjacent_resonance_tally() {
        let g = leapfrog(&leapfrog(&leapfrog(&dodecahedron())));
        let d = dual(&g).unwrap();
        let w = select_witnesses(&d).unwrap();
        let r = build_reduced(&d, &w).unwrap();
        let hc = four_color(&r.h, None, 0).unwrap();
        let dc = extend_coloring(&d, &w, &r, &hc).unwrap();
        let t = tait_edge_coloring(&d, &dc, &g);
        let faces = witness_adjacent_faces(&w);
        assert_eq!(faces.len(), 6 * w.len());
        let classes = class_matchings(&g, &t);
        // Each witness-adjacent face is resonant in at least one class, and
        // in its canonical class in particular.
        let mut per_face = vec![0usize; faces.len()];
        for m in &classes {
            let res = resonant_faces(&g, m, Some(&faces));
            for &f in &res.faces {
                per_face[faces.iter().position(|&x| x == f).unwrap()] += 1;
            }
        }
        assert!(per_face.iter().all(|&c| c >= 1));
        let canonical = canonical_classes(&w, &dc);
        assert_eq!(canonical.len(), 6 * w.len());
        let counts = canonical_counts(&canonical);
        assert_eq!(counts.iter().sum::<usize>(), 6 * w.len());
        let (_, best) = best_class(&g, &t, &w, &dc).unwrap();
        assert!(best.faces.len() >= 2 * w.len());
        assert!(best.disjoint);
    }
}
