//! Parity factor construction by reduction to perfect matching.
//!
//! Each vertex v of degree d becomes a gadget with d edge-vertices, d - f(v)
//! core-vertices adjacent to every edge-vertex, and (f(v) - g(v)) / 2 slack
//! pairs whose members are adjacent to each other and to every edge-vertex.
//! Each original edge turns into one external edge between the edge-vertices
//! of its two endpoints. The gadget has a perfect matching iff the original
//! graph has a (g,f)-parity factor: cores eat d - f(v) edge-vertices, each
//! slack pair absorbs 0 or 2 more, so the externally matched count at v is
//! f(v), f(v)-2, ..., down to g(v).

use thiserror::Error;

use crate::criteria::{validate_spec, DegreeSpec, SpecViolation};
use crate::graph::Graph;
use crate::matching::{max_matching, Matching};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FactorError {
    #[error("invalid degree spec ({} violations)", .0.len())]
    InvalidSpec(Vec<SpecViolation>),
    #[error("gadget needs f(v) <= d_G(v); vertex {vertex} has f = {f}, degree = {degree}")]
    FAboveDegree {
        vertex: usize,
        f: usize,
        degree: usize,
    },
    #[error(
        "edge ({u},{v}) appears {found} times in the factor but {available} times in the graph"
    )]
    EdgeNotInGraph {
        u: usize,
        v: usize,
        found: usize,
        available: usize,
    },
    #[error("factor violates degree bounds at {} vertices", .0.len())]
    DegreeViolations(Vec<DegreeViolation>),
    #[error("brute-force factor search capped at {cap} edges, got {edges}")]
    TooManyEdges { edges: usize, cap: usize },
}

/// Per-vertex degree violation found by [`verify_factor`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeViolation {
    pub vertex: usize,
    pub degree: usize,
    pub g: usize,
    pub f: usize,
    pub parity_ok: bool,
}

/// An edge subset of the host graph meeting the degree bounds and parity
/// at every vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParityFactor {
    edges: Vec<(usize, usize)>, // normalized, sorted
    degrees: Vec<usize>,
}

impl ParityFactor {
    fn from_edges(n: usize, mut edges: Vec<(usize, usize)>) -> Self {
        edges.sort_unstable();
        let mut degrees = vec![0usize; n];
        for &(u, v) in &edges {
            degrees[u] += 1;
            degrees[v] += 1;
        }
        ParityFactor { edges, degrees }
    }

    /// Sorted edge list (parallel edges repeated).
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }
}

/// Largest f with f(v) <= d_G(v) and f(v) = g(v) (mod 2); `None` when some
/// vertex cannot even reach g(v). Capping at the degree preserves
/// existence: a factor never uses more than d_G(v) edges at v.
pub fn cap_f(graph: &Graph, g: &[usize]) -> Option<DegreeSpec> {
    assert_eq!(g.len(), graph.vertex_count());
    let mut f = Vec::with_capacity(g.len());
    for (v, &gv) in g.iter().enumerate() {
        let d = graph.degree(v);
        if d < gv {
            return None;
        }
        f.push(d - (d - gv) % 2);
    }
    Some(DegreeSpec::new(g.to_vec(), f))
}

/// Where one vertex's gadget lives inside the auxiliary graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GadgetSlots {
    /// Edge-vertices, parallel to `Graph::incident(v)` order.
    pub edge_vertices: Vec<usize>,
    pub core_vertices: Vec<usize>,
    pub slack_pairs: Vec<(usize, usize)>,
}

/// The matching host plus the bookkeeping to pull factors back.
#[derive(Debug, Clone)]
pub struct GadgetGraph {
    pub host: Graph,
    /// For original edge i, the external edge's two endpoints in the host.
    pub external: Vec<(usize, usize)>,
    pub slots: Vec<GadgetSlots>,
}

pub fn build_gadget(graph: &Graph, spec: &DegreeSpec) -> Result<GadgetGraph, FactorError> {
    validate_spec(graph, spec).map_err(FactorError::InvalidSpec)?;
    let n = graph.vertex_count();
    for v in 0..n {
        if spec.f_at(v) > graph.degree(v) {
            return Err(FactorError::FAboveDegree {
                vertex: v,
                f: spec.f_at(v),
                degree: graph.degree(v),
            });
        }
    }

    let mut next = 0usize;
    let mut take = |count: usize| {
        let ids: Vec<usize> = (next..next + count).collect();
        next += count;
        ids
    };
    let mut slots = Vec::with_capacity(n);
    let mut host_edges = Vec::new();
    for v in 0..n {
        let d = graph.degree(v);
        let edge_vertices = take(d);
        let core_vertices = take(d - spec.f_at(v));
        let slack_ids = take(spec.f_at(v) - spec.g_at(v));
        let slack_pairs: Vec<(usize, usize)> =
            slack_ids.chunks_exact(2).map(|p| (p[0], p[1])).collect();
        for &c in &core_vertices {
            for &e in &edge_vertices {
                host_edges.push((c, e));
            }
        }
        for &(a, b) in &slack_pairs {
            host_edges.push((a, b));
            for &e in &edge_vertices {
                host_edges.push((a, e));
                host_edges.push((b, e));
            }
        }
        slots.push(GadgetSlots {
            edge_vertices,
            core_vertices,
            slack_pairs,
        });
    }

    // externals: each original edge joins the matching edge-vertex slot of
    // its two endpoints; slot order mirrors Graph::incident.
    let mut external = vec![(0usize, 0usize); graph.edge_count()];
    let mut seen = vec![false; graph.edge_count()];
    for (v, gadget_slots) in slots.iter().enumerate() {
        for (slot, &(_, edge_id)) in graph.incident(v).iter().enumerate() {
            let ev = gadget_slots.edge_vertices[slot];
            if seen[edge_id] {
                external[edge_id].1 = ev;
            } else {
                external[edge_id].0 = ev;
                seen[edge_id] = true;
            }
        }
    }
    for &(a, b) in &external {
        host_edges.push((a, b));
    }

    let host = Graph::new(next, &host_edges).expect("gadget construction is well-formed");
    debug_assert_eq!(
        next,
        4 * graph.edge_count() - spec.g().iter().sum::<usize>(),
        "gadget size must be 4|E| - g(V)"
    );
    Ok(GadgetGraph {
        host,
        external,
        slots,
    })
}

/// Constructs a (g,f)-parity factor, or `None` when no factor exists.
///
/// f entries above the vertex degree are first capped to the degree with
/// f's parity (existence-equivalent); if capping pushes f below g at some
/// vertex, no factor exists.
pub fn find_parity_factor(
    graph: &Graph,
    spec: &DegreeSpec,
) -> Result<Option<ParityFactor>, FactorError> {
    validate_spec(graph, spec).map_err(FactorError::InvalidSpec)?;
    let n = graph.vertex_count();
    let mut f = Vec::with_capacity(n);
    for v in 0..n {
        let d = graph.degree(v);
        let fv = spec.f_at(v);
        let capped = match fv > d {
            false => fv,
            true if d == 0 && fv % 2 == 1 => return Ok(None),
            true => d - (d + fv) % 2,
        };
        if capped < spec.g_at(v) {
            return Ok(None); // degree cannot reach g with f's parity
        }
        f.push(capped);
    }
    let spec = DegreeSpec::new(spec.g().to_vec(), f);
    let gadget = build_gadget(graph, &spec)?;
    let matching = max_matching(&gadget.host);
    if !matching.is_perfect() {
        return Ok(None);
    }
    let factor = pull_back(graph, &gadget, &matching);
    debug_assert!(verify_factor(graph, factor.edges(), &spec).is_ok());
    Ok(Some(factor))
}

/// Original edges whose external gadget edge is matched.
pub fn pull_back(graph: &Graph, gadget: &GadgetGraph, matching: &Matching) -> ParityFactor {
    let edges: Vec<(usize, usize)> = gadget
        .external
        .iter()
        .enumerate()
        .filter(|&(_, &(a, b))| matching.mate(a) == Some(b))
        .map(|(edge_id, _)| graph.edges()[edge_id])
        .collect();
    ParityFactor::from_edges(graph.vertex_count(), edges)
}

/// Checks that `edges` is a sub-multiset of the graph's edges and meets the
/// degree bounds and parity at every vertex, listing all violations.
pub fn verify_factor(
    graph: &Graph,
    edges: &[(usize, usize)],
    spec: &DegreeSpec,
) -> Result<(), FactorError> {
    validate_spec(graph, spec).map_err(FactorError::InvalidSpec)?;
    let mut multiplicity = std::collections::HashMap::new();
    for &(u, v) in graph.edges() {
        *multiplicity.entry((u.min(v), u.max(v))).or_insert(0usize) += 1;
    }
    let mut used = std::collections::HashMap::new();
    for &(u, v) in edges {
        let key = (u.min(v), u.max(v));
        let found = used.entry(key).or_insert(0usize);
        *found += 1;
        let available = multiplicity.get(&key).copied().unwrap_or(0);
        if *found > available {
            return Err(FactorError::EdgeNotInGraph {
                u: key.0,
                v: key.1,
                found: *found,
                available,
            });
        }
    }
    let mut degrees = vec![0usize; graph.vertex_count()];
    for &(u, v) in edges {
        degrees[u] += 1;
        degrees[v] += 1;
    }
    let violations: Vec<DegreeViolation> = (0..graph.vertex_count())
        .filter_map(|v| {
            let d = degrees[v];
            let (g, f) = (spec.g_at(v), spec.f_at(v));
            let parity_ok = d % 2 == f % 2;
            (d < g || d > f || !parity_ok).then_some(DegreeViolation {
                vertex: v,
                degree: d,
                g,
                f,
                parity_ok,
            })
        })
        .collect();
    if violations.is_empty() {
        Ok(())
    } else {
        Err(FactorError::DegreeViolations(violations))
    }
}

pub const BRUTE_FORCE_EDGE_CAP: usize = 22;

/// Exhaustive factor search over edge subsets, in increasing popcount then
/// ascending index order, so the returned factor is deterministic.
pub fn brute_force_factor(
    graph: &Graph,
    spec: &DegreeSpec,
) -> Result<Option<ParityFactor>, FactorError> {
    validate_spec(graph, spec).map_err(FactorError::InvalidSpec)?;
    let m = graph.edge_count();
    if m > BRUTE_FORCE_EDGE_CAP {
        return Err(FactorError::TooManyEdges {
            edges: m,
            cap: BRUTE_FORCE_EDGE_CAP,
        });
    }
    let n = graph.vertex_count();
    for size in 0..=m {
        let mut found: Option<u64> = None;
        let mut mask: u64 = if size == 0 { 0 } else { (1 << size) - 1 };
        loop {
            let mut degrees = vec![0usize; n];
            for (i, &(u, v)) in graph.edges().iter().enumerate() {
                if mask >> i & 1 == 1 {
                    degrees[u] += 1;
                    degrees[v] += 1;
                }
            }
            let ok = (0..n).all(|v| {
                degrees[v] >= spec.g_at(v)
                    && degrees[v] <= spec.f_at(v)
                    && degrees[v] % 2 == spec.f_at(v) % 2
            });
            if ok {
                found = Some(mask);
                break;
            }
            if size == 0 {
                break;
            }
            // next mask of equal popcount (Gosper)
            let c = mask & mask.wrapping_neg();
            let r = mask + c;
            mask = (((r ^ mask) >> 2) / c) | r;
            if mask >= 1 << m {
                break;
            }
        }
        if let Some(mask) = found {
            let edges: Vec<(usize, usize)> = graph
                .edges()
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            return Ok(Some(ParityFactor::from_edges(n, edges)));
        }
    }
    Ok(None)
}
