//! Parity factor kit.
//!
//! Tools for deciding and constructing parity factors — spanning subgraphs
//! whose per-vertex degrees sit in prescribed bounds with a prescribed
//! parity — on undirected multigraphs, together with the edge-connectivity
//! machinery and batch campaigns used to verify the sufficiency bounds
//! those factors satisfy.
//!
//! - [`graph`]: the multigraph value type, vertex sets, components, and
//!   the shared text format.
//! - [`connectivity`]: edge connectivity with cut certificates, bridges.
//! - [`criteria`]: the deficiency criteria (`eta` over disjoint pairs,
//!   `delta` over subsets) with maximizing certificates.
//! - [`matching`]: exact maximum matching on general graphs.
//! - [`factor`]: factor construction by reduction to perfect matching,
//!   verification, and the exhaustive oracle.
//! - [`generators`]: named graphs, the tight hub family, seeded random
//!   k-edge-connected instances, exhaustive small-graph streams.
//! - [`harness`]: theorem checks, proof-step inequality scans, campaigns.
//! - [`cli`]: the `pfk` command-line surface.
//!
//! The runnable examples under `examples/` walk through each capability;
//! start with `check_existence` and `find_factor`.

#![forbid(unsafe_code)]

pub mod cli;
pub mod connectivity;
pub mod criteria;
pub mod factor;
pub mod generators;
pub mod graph;
pub mod harness;
pub mod matching;
