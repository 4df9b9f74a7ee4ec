//! Perfect matchings in fullerene graphs.
//!
//! Pipeline: dual triangulation -> greedy witness set -> patch surgery ->
//! 4-coloring -> Tait 3-edge-coloring -> resonant hexagons -> switch
//! enumeration, cross-checked by exact Pfaffian-orientation matching counts.

pub mod bounds;
pub mod coloring;
pub mod count;
pub mod dual;
pub mod error;
pub mod fullerene;
pub mod graph;
pub mod matching;
pub mod pipeline;
pub mod witness;

pub use bounds::{lower_bounds, Exp2Bound, LowerBounds};
pub use dual::{dual, DualTriangulation};
pub use error::{Error, Result};
pub use fullerene::{dodecahedron, leapfrog, validate_fullerene, FullereneGraph};
pub use graph::PlanarGraph;
pub use pipeline::{analyze, analyze_batch, analyze_batch_seq, AnalyzeOptions, MatchingReport};
