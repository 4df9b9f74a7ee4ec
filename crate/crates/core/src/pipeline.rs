//! End-to-end analysis: witness selection, surgery, coloring, matchings,
//! switch counting, optional exact counting, and bound evaluation.

use num_bigint::BigUint;

use crate::bounds::{lower_bounds, LowerBounds};
use crate::coloring::{build_reduced, extend_coloring, four_color, tait_edge_coloring};
use crate::count::count_perfect_matchings;
use crate::error::{Error, Result};
use crate::fullerene::FullereneGraph;
use crate::matching::{best_class, canonical_classes, canonical_counts, switch_enumerate};
use crate::witness::{extract_patch, select_witnesses, verify_witnesses, WitnessSet};

#[derive(Debug, Clone)]
pub struct AnalyzeOptions {
    /// Run the exact Pfaffian count (cubic in p; off by default).
    pub exact_count: bool,
    /// Materialization cap for switch enumeration.
    pub switch_cap: u64,
    /// Tie-breaking seed for the 4-coloring search.
    pub seed: u64,
    /// Node budget for the 4-coloring search.
    pub color_budget: Option<u64>,
}

impl Default for AnalyzeOptions {
    fn default() -> Self {
        AnalyzeOptions { exact_count: false, switch_cap: 1 << 20, seed: 0, color_budget: None }
    }
}

/// Everything the pipeline certifies about one fullerene.
#[derive(Debug, Clone)]
pub struct MatchingReport {
    pub p: usize,
    pub faces: usize,
    pub witness_count: usize,
    /// Canonical resonance tallies per class a, b, c; they sum to
    /// 6 * witness_count.
    pub class_resonant_counts: [usize; 3],
    /// Letter of the winning class.
    pub best_class: char,
    /// |S|: disjoint resonant hexagons certified for switching.
    pub disjoint_resonant_count: usize,
    /// 2^|S|.
    pub switch_count: BigUint,
    pub exact_count: Option<BigUint>,
    pub bounds: LowerBounds,
    /// False iff a degenerate patch was dropped.
    pub certified: bool,
    pub warnings: Vec<String>,
}

/// An error annotated with the pipeline stage that raised it.
#[derive(Debug, Clone, thiserror::Error)]
#[error("stage {stage}: {source}")]
pub struct StageError {
    pub stage: &'static str,
    #[source]
    pub source: Error,
}

fn at(stage: &'static str) -> impl Fn(Error) -> StageError {
    move |source| StageError { stage, source }
}

/// Runs the full pipeline on a validated fullerene.
pub fn analyze(
    g: &FullereneGraph,
    opts: &AnalyzeOptions,
) -> std::result::Result<MatchingReport, StageError> {
    let mut warnings = Vec::new();
    let mut certified = true;

    let d = crate::dual::dual(g).map_err(at("dual"))?;
    let w = select_or_reduce_witnesses(&d, &mut warnings, &mut certified)
        .map_err(at("witness_selection"))?;
    verify_witnesses(&d, &w).map_err(at("witness_verification"))?;

    let reduced = build_reduced(&d, &w).map_err(at("surgery"))?;
    let h_colors =
        four_color(&reduced.h, opts.color_budget, opts.seed).map_err(at("four_color"))?;
    let dc = extend_coloring(&d, &w, &reduced, &h_colors).map_err(at("extend_coloring"))?;
    let t = tait_edge_coloring(&d, &dc, g);

    let canonical = canonical_classes(&w, &dc);
    let class_resonant_counts = canonical_counts(&canonical);
    let (matching, resonant) = best_class(g, &t, &w, &dc).map_err(at("best_class"))?;
    let best_letter = match &matching.source {
        crate::matching::MatchingSource::ColorClass(c) => c.letter(),
        _ => unreachable!(),
    };
    let sw = switch_enumerate(g, &matching, &resonant, opts.switch_cap)
        .map_err(at("switch_enumerate"))?;

    let exact_count = if opts.exact_count {
        Some(count_perfect_matchings(g.graph()).map_err(at("exact_count"))?)
    } else {
        None
    };
    let bounds = lower_bounds(g.p()).map_err(at("bounds"))?;

    // Monotone chain: exact count >= 2^|S| >= 2^(2|W|) when certified.
    if certified {
        assert!(resonant.faces.len() >= 2 * w.len());
    }
    if let Some(exact) = &exact_count {
        assert!(exact >= &sw.count, "exact count below switch count");
    }
    Ok(MatchingReport {
        p: g.p(),
        faces: g.face_count(),
        witness_count: w.len(),
        class_resonant_counts,
        best_class: best_letter,
        disjoint_resonant_count: resonant.faces.len(),
        switch_count: sw.count,
        exact_count,
        bounds,
        certified,
        warnings,
    })
}

/// Greedy selection with degenerate-patch fallback: a witness whose patch
/// fails its geometry checks is dropped with a warning and the report loses
/// its certification.
fn select_or_reduce_witnesses(
    d: &crate::dual::DualTriangulation,
    warnings: &mut Vec<String>,
    certified: &mut bool,
) -> Result<WitnessSet> {
    match select_witnesses(d) {
        Ok(w) => Ok(w),
        Err(Error::PatchDegenerate { .. }) => {
            // Re-run keeping only witnesses with valid patches.
            let mut w = select_witnesses_ignoring_patches(d)?;
            let mut keep = Vec::new();
            let mut patches = Vec::new();
            for &v in &w.witnesses {
                match extract_patch(d, v) {
                    Ok(p) => {
                        keep.push(v);
                        patches.push(p);
                    }
                    Err(e) => {
                        warnings.push(format!("dropped witness {v}: {e}"));
                        *certified = false;
                    }
                }
            }
            w.witnesses = keep;
            w.patches = patches;
            Ok(w)
        }
        Err(e) => Err(e),
    }
}

fn select_witnesses_ignoring_patches(d: &crate::dual::DualTriangulation) -> Result<WitnessSet> {
    let g = d.graph();
    let n = g.vertex_count();
    let from_u = g.bfs_distance(d.degree5())?;
    let mut white: Vec<bool> = from_u.iter().map(|&x| x <= 2).collect();
    let initial_white_count = white.iter().filter(|&&x| x).count();
    let mut witnesses = Vec::new();
    let mut whitened_counts = Vec::new();
    loop {
        let Some(v) = (0..n).find(|&v| !white[v]) else { break };
        let ball = g.bfs_distance(&[v])?;
        let mut newly = 0;
        for (x, &dist) in ball.iter().enumerate() {
            if dist <= 4 && !white[x] {
                white[x] = true;
                newly += 1;
            }
        }
        witnesses.push(v);
        whitened_counts.push(newly);
    }
    Ok(WitnessSet { witnesses, patches: Vec::new(), initial_white_count, whitened_counts })
}

/// Analyzes a batch of graphs, in parallel when the `parallel` feature is on.
/// Reports come back in input order.
pub fn analyze_batch(
    graphs: &[FullereneGraph],
    opts: &AnalyzeOptions,
) -> Vec<std::result::Result<MatchingReport, StageError>> {
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        graphs.par_iter().map(|g| analyze(g, opts)).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        analyze_batch_seq(graphs, opts)
    }
}

/// Sequential batch driver; the baseline the benches compare against.
pub fn analyze_batch_seq(
    graphs: &[FullereneGraph],
    opts: &AnalyzeOptions,
) -> Vec<std::result::Result<MatchingReport, StageError>> {
    graphs.iter().map(|g| analyze(g, opts)).collect()
}
