//! Graph sources: named fixtures, the tight hub family, seeded random
//! k-edge-connected instances, and exhaustive small-graph streams.

use std::str::FromStr;

use rand::prelude::*;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::connectivity::is_k_edge_connected;
use crate::graph::{Graph, VertexSet};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GenError {
    #[error("hub family needs even m >= 2, got {m}")]
    BadFamilyParameter { m: usize },
    #[error("random k-edge-connected graph needs n >= k+1 and k >= 1 (n = {n}, k = {k})")]
    InfeasibleRandom { n: usize, k: usize },
    #[error("exhaustive enumeration capped at n <= {cap}, got {n}")]
    EnumerationTooLarge { n: usize, cap: usize },
    #[error("unknown named graph: {0}")]
    UnknownName(String),
    #[error("bad parameter for named graph: {0}")]
    BadNamedParameter(String),
}

/// The tight family for the even-factor bound: m+1 copies of K_{2m}, one
/// chosen vertex per copy joined to all of m+1 hub vertices.
///
/// Vertex layout is fixed so tests can address the hubs positionally:
/// copy c occupies `c*2m .. (c+1)*2m` with its chosen vertex first, and the
/// hubs are the last m+1 ids.
#[derive(Debug, Clone)]
pub struct Remark1Instance {
    pub graph: Graph,
    pub hubs: VertexSet,
    pub m: usize,
    pub chosen: Vec<usize>,
}

pub fn remark1_family(m: usize) -> Result<Remark1Instance, GenError> {
    if m < 2 || !m.is_multiple_of(2) {
        return Err(GenError::BadFamilyParameter { m });
    }
    Ok(hub_family(m))
}

/// The same construction without the evenness requirement; the harness
/// probes odd m through this.
pub fn hub_family(m: usize) -> Remark1Instance {
    let copies = m + 1;
    let per_copy = 2 * m;
    let n = copies * per_copy + (m + 1);
    let hub_ids: Vec<usize> = (copies * per_copy..n).collect();
    let mut edges = Vec::new();
    let mut chosen = Vec::new();
    for c in 0..copies {
        let base = c * per_copy;
        for i in 0..per_copy {
            for j in i + 1..per_copy {
                edges.push((base + i, base + j));
            }
        }
        chosen.push(base);
        for &h in &hub_ids {
            edges.push((base, h));
        }
    }
    let graph = Graph::new(n, &edges).expect("construction is well-formed");
    Remark1Instance {
        graph,
        hubs: VertexSet::from_indices(n, hub_ids),
        m,
        chosen,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NamedGraph {
    Complete(usize),
    Cycle(usize),
    Path(usize),
    Petersen,
    Star(usize),
}

impl FromStr for NamedGraph {
    type Err = GenError;

    /// Accepts `petersen`, `complete(4)`, `cycle(5)`, `path(3)`, `star(3)`.
    fn from_str(s: &str) -> Result<Self, GenError> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("petersen") {
            return Ok(NamedGraph::Petersen);
        }
        let (name, rest) = s
            .split_once('(')
            .ok_or_else(|| GenError::UnknownName(s.to_string()))?;
        let arg = rest
            .strip_suffix(')')
            .and_then(|a| a.trim().parse::<usize>().ok())
            .ok_or_else(|| GenError::BadNamedParameter(s.to_string()))?;
        match name.trim().to_ascii_lowercase().as_str() {
            "complete" => Ok(NamedGraph::Complete(arg)),
            "cycle" => Ok(NamedGraph::Cycle(arg)),
            "path" => Ok(NamedGraph::Path(arg)),
            "star" => Ok(NamedGraph::Star(arg)),
            other => Err(GenError::UnknownName(other.to_string())),
        }
    }
}

pub fn named_graph(name: NamedGraph) -> Result<Graph, GenError> {
    let bad = |what: &str| GenError::BadNamedParameter(what.to_string());
    let graph = match name {
        NamedGraph::Complete(n) => {
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    edges.push((u, v));
                }
            }
            Graph::new(n, &edges).map_err(|_| bad("complete"))?
        }
        NamedGraph::Cycle(n) => {
            if n < 3 {
                return Err(bad("cycle needs n >= 3"));
            }
            let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
            Graph::new(n, &edges).map_err(|_| bad("cycle"))?
        }
        NamedGraph::Path(n) => {
            if n < 1 {
                return Err(bad("path needs n >= 1"));
            }
            let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
            Graph::new(n, &edges).map_err(|_| bad("path"))?
        }
        NamedGraph::Petersen => {
            let mut edges = Vec::new();
            for i in 0..5 {
                edges.push((i, (i + 1) % 5)); // outer cycle
                edges.push((5 + i, 5 + (i + 2) % 5)); // inner pentagram
                edges.push((i, 5 + i)); // spokes
            }
            Graph::new(10, &edges).expect("fixed construction")
        }
        NamedGraph::Star(k) => {
            if k < 1 {
                return Err(bad("star needs k >= 1"));
            }
            let edges: Vec<_> = (1..=k).map(|i| (0, i)).collect();
            Graph::new(k + 1, &edges).map_err(|_| bad("star"))?
        }
    };
    Ok(graph)
}

/// Seeded simple graph with lambda >= k: a circulant backbone on offsets
/// `1..=ceil(k/2)` plus a random sprinkling of extra edges. The result is
/// post-verified, and identical seeds give identical graphs.
pub fn random_k_edge_connected(n: usize, k: usize, seed: u64) -> Result<Graph, GenError> {
    if k == 0 || n < k + 1 {
        return Err(GenError::InfeasibleRandom { n, k });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut present = vec![false; n * n];
    let mut edges = Vec::new();
    let add = |edges: &mut Vec<(usize, usize)>, present: &mut Vec<bool>, u: usize, v: usize| {
        let (a, b) = (u.min(v), u.max(v));
        if a != b && !present[a * n + b] {
            present[a * n + b] = true;
            edges.push((a, b));
        }
    };
    for offset in 1..=k.div_ceil(2) {
        for i in 0..n {
            add(&mut edges, &mut present, i, (i + offset) % n);
        }
    }
    let extras = rng.gen_range(0..=n);
    for _ in 0..extras {
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        add(&mut edges, &mut present, u, v);
    }
    let graph = Graph::new(n, &edges).expect("indices in range, no loops");
    debug_assert!(is_k_edge_connected(&graph, k).unwrap());
    Ok(graph)
}

/// The `i`-th unordered pair under the fixed edge-slot order
/// (0,1), (0,2), ..., (0,n-1), (1,2), ...
pub fn edge_slots(n: usize) -> Vec<(usize, usize)> {
    let mut slots = Vec::with_capacity(n * (n - 1) / 2);
    for u in 0..n {
        for v in u + 1..n {
            slots.push((u, v));
        }
    }
    slots
}

pub const ENUMERATION_CAP: usize = 7;

/// All 2^(n choose 2) labeled simple graphs on n vertices, in ascending
/// bitmask order over [`edge_slots`].
pub fn enumerate_small_graphs(n: usize) -> Result<impl Iterator<Item = Graph>, GenError> {
    if n > ENUMERATION_CAP {
        return Err(GenError::EnumerationTooLarge {
            n,
            cap: ENUMERATION_CAP,
        });
    }
    let slots = edge_slots(n);
    let total: u64 = 1 << slots.len();
    Ok((0..total).map(move |mask| {
        let edges: Vec<_> = slots
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        Graph::new(n, &edges).expect("slots are valid")
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::connectivity::edge_connectivity;

    #[test]
    fn remark1_m2_shape() {
        let inst = remark1_family(2).unwrap();
        assert_eq!(inst.graph.vertex_count(), 15);
        assert_eq!(inst.graph.edge_count(), 27);
        assert_eq!(inst.hubs.to_vec(), vec![12, 13, 14]);
        assert_eq!(inst.chosen, vec![0, 4, 8]);
        // one chosen vertex per copy wired to all hubs
        let copy0 = VertexSet::from_indices(15, 0..4);
        assert_eq!(inst.graph.edges_between(&copy0, &inst.hubs), 3);
    }

    #[test]
    fn remark1_rejects_odd_or_small_m() {
        assert!(remark1_family(3).is_err());
        assert!(remark1_family(0).is_err());
    }

    #[test]
    fn remark1_degree_profile_and_connectivity() {
        for m in [2usize, 4] {
            let inst = remark1_family(m).unwrap();
            let g = &inst.graph;
            for h in inst.hubs.iter() {
                assert_eq!(g.degree(h), m + 1);
            }
            for &c in &inst.chosen {
                assert_eq!(g.degree(c), 3 * m);
            }
            for v in 0..g.vertex_count() {
                if !inst.hubs.contains(v) && !inst.chosen.contains(&v) {
                    assert_eq!(g.degree(v), 2 * m - 1);
                }
            }
            assert_eq!(g.min_degree(), m + 1);
            assert_eq!(edge_connectivity(g).unwrap().0, m + 1);
        }
    }

    #[test]
    fn named_graphs() {
        assert_eq!(
            named_graph(NamedGraph::Complete(4)).unwrap().edge_count(),
            6
        );
        let p = named_graph(NamedGraph::Petersen).unwrap();
        assert_eq!(p.vertex_count(), 10);
        assert_eq!(p.edge_count(), 15);
        assert!((0..10).all(|v| p.degree(v) == 3));
        let s = named_graph(NamedGraph::Star(3)).unwrap();
        assert_eq!(s.vertex_count(), 4);
        assert_eq!(s.degree(0), 3);
    }

    #[test]
    fn named_graph_parsing() {
        assert_eq!(
            "petersen".parse::<NamedGraph>().unwrap(),
            NamedGraph::Petersen
        );
        assert_eq!(
            "complete(4)".parse::<NamedGraph>().unwrap(),
            NamedGraph::Complete(4)
        );
        assert_eq!(
            "star(3)".parse::<NamedGraph>().unwrap(),
            NamedGraph::Star(3)
        );
        assert!("blorp".parse::<NamedGraph>().is_err());
        assert!("cycle(x)".parse::<NamedGraph>().is_err());
    }

    #[test]
    fn random_generator_meets_connectivity_and_is_reproducible() {
        for seed in 0..20 {
            let g = random_k_edge_connected(6, 2, seed).unwrap();
            assert!(is_k_edge_connected(&g, 2).unwrap());
            assert_eq!(g, random_k_edge_connected(6, 2, seed).unwrap());
        }
        for seed in 0..10 {
            let g = random_k_edge_connected(8, 4, seed).unwrap();
            assert!(is_k_edge_connected(&g, 4).unwrap());
            assert!(g.min_degree() >= 4);
        }
        assert_eq!(
            random_k_edge_connected(3, 3, 1),
            Err(GenError::InfeasibleRandom { n: 3, k: 3 })
        );
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_small_graphs(2).unwrap().count(), 2);
        assert_eq!(enumerate_small_graphs(3).unwrap().count(), 8);
        assert_eq!(enumerate_small_graphs(4).unwrap().count(), 64);
        assert!(enumerate_small_graphs(8).is_err());
    }
}
