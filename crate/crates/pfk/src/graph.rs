//! Immutable undirected multigraph with the degree, cut and component
//! queries every criterion is built on.
//!
//! Vertices are dense ids `0..n`. Parallel edges are allowed and counted
//! with multiplicity everywhere; self-loops are rejected at build time.

use std::cmp::Ordering;
use std::fmt;

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("edge {index}: endpoint {vertex} out of range (n = {n})")]
    EndpointOutOfRange {
        index: usize,
        vertex: usize,
        n: usize,
    },
    #[error("edge {index}: self-loop at vertex {vertex}")]
    SelfLoop { index: usize, vertex: usize },
}

/// Errors from the shared graph text format (`n m` header, then `u v` lines).
#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {line}: {msg}")]
    Malformed { line: usize, msg: String },
    #[error("line {line}: {source}")]
    BadEdge {
        line: usize,
        #[source]
        source: GraphError,
    },
    #[error("expected {expected} edge lines, found {found}")]
    EdgeCountMismatch { expected: usize, found: usize },
}

/// Undirected multigraph, immutable after construction.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<(usize, usize)>>, // (neighbor, edge index)
    degrees: Vec<usize>,
}

impl Graph {
    /// Builds a graph from an explicit edge multiset. Duplicate pairs are
    /// kept as parallel edges.
    pub fn new(n: usize, edge_list: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut edges = Vec::with_capacity(edge_list.len());
        let mut adj = vec![Vec::new(); n];
        let mut degrees = vec![0usize; n];
        for (index, &(u, v)) in edge_list.iter().enumerate() {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::EndpointOutOfRange {
                        index,
                        vertex: w,
                        n,
                    });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop { index, vertex: u });
            }
            let e = (u.min(v), u.max(v));
            adj[u].push((v, index));
            adj[v].push((u, index));
            degrees[u] += 1;
            degrees[v] += 1;
            edges.push(e);
        }
        Ok(Graph {
            n,
            edges,
            adj,
            degrees,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edge multiset with endpoints normalized `u <= v`, in build order.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn vertices(&self) -> impl Iterator<Item = usize> {
        0..self.n
    }

    /// Neighbors of `v` with multiplicity, paired with the edge index.
    pub fn incident(&self, v: usize) -> &[(usize, usize)] {
        assert!(v < self.n, "vertex {v} out of range (n = {})", self.n);
        &self.adj[v]
    }

    /// Degree of `v`; parallel edges count with multiplicity.
    pub fn degree(&self, v: usize) -> usize {
        assert!(v < self.n, "vertex {v} out of range (n = {})", self.n);
        self.degrees[v]
    }

    pub fn min_degree(&self) -> usize {
        self.degrees.iter().copied().min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        self.degrees.iter().copied().max().unwrap_or(0)
    }

    /// Number of edges joining `a` to `b`, counted with multiplicity.
    /// The sets must be disjoint.
    pub fn edges_between(&self, a: &VertexSet, b: &VertexSet) -> usize {
        assert!(a.is_disjoint(b), "edges_between requires disjoint sets");
        self.edges
            .iter()
            .filter(|&&(u, v)| (a.contains(u) && b.contains(v)) || (a.contains(v) && b.contains(u)))
            .count()
    }

    /// Edges from a single vertex into a set (`v` must not be in the set).
    pub fn edges_to_set(&self, v: usize, set: &VertexSet) -> usize {
        assert!(!set.contains(v), "edges_to_set requires v outside the set");
        self.adj[v]
            .iter()
            .filter(|&&(u, _)| set.contains(u))
            .count()
    }

    /// Degree of `v` in the graph with the vertex set `removed` deleted.
    pub fn degree_avoiding(&self, v: usize, removed: &VertexSet) -> usize {
        assert!(!removed.contains(v), "degree_avoiding: v is removed");
        self.adj[v]
            .iter()
            .filter(|&&(u, _)| !removed.contains(u))
            .count()
    }

    /// Connected components of the induced graph on `V - removed`, ordered
    /// by smallest contained vertex.
    pub fn components_after_removal(&self, removed: &VertexSet) -> Vec<Component> {
        let mut seen = removed.clone();
        let mut components = Vec::new();
        let mut stack = Vec::new();
        for start in 0..self.n {
            if seen.contains(start) {
                continue;
            }
            let mut vertices = Vec::new();
            stack.push(start);
            seen.insert(start);
            while let Some(v) = stack.pop() {
                vertices.push(v);
                for &(u, _) in &self.adj[v] {
                    if !seen.contains(u) {
                        seen.insert(u);
                        stack.push(u);
                    }
                }
            }
            vertices.sort_unstable();
            components.push(Component { vertices });
        }
        components
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.components_after_removal(&VertexSet::new(self.n)).len() == 1
    }

    /// Parses the shared text format: `#` lines are comments, blank lines
    /// are skipped, the first data line is `n m`, followed by exactly `m`
    /// lines `u v`. Repeated `u v` lines denote parallel edges.
    pub fn from_text(text: &str) -> Result<Self, ParseError> {
        let mut header: Option<(usize, usize)> = None;
        let mut edges = Vec::new();
        let mut edge_lines = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line_no = i + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            if fields.len() != 2 {
                return Err(ParseError::Malformed {
                    line: line_no,
                    msg: format!("expected two integers, found {:?}", line),
                });
            }
            let parse = |s: &str| -> Result<usize, ParseError> {
                s.parse().map_err(|_| ParseError::Malformed {
                    line: line_no,
                    msg: format!("not a non-negative integer: {:?}", s),
                })
            };
            let a = parse(fields[0])?;
            let b = parse(fields[1])?;
            match header {
                None => header = Some((a, b)),
                Some((_, m)) => {
                    if edges.len() == m {
                        return Err(ParseError::Malformed {
                            line: line_no,
                            msg: format!("unexpected extra edge line (header declared {m})"),
                        });
                    }
                    edges.push((a, b));
                    edge_lines.push(line_no);
                }
            }
        }
        let (n, m) = header.ok_or(ParseError::Malformed {
            line: text.lines().count().max(1),
            msg: "missing `n m` header line".into(),
        })?;
        if edges.len() != m {
            return Err(ParseError::EdgeCountMismatch {
                expected: m,
                found: edges.len(),
            });
        }
        Graph::new(n, &edges).map_err(|e| {
            let index = match e {
                GraphError::EndpointOutOfRange { index, .. } => index,
                GraphError::SelfLoop { index, .. } => index,
            };
            ParseError::BadEdge {
                line: edge_lines[index],
                source: e,
            }
        })
    }

    /// Writes the text format parsed by [`Graph::from_text`].
    pub fn to_text(&self) -> String {
        let mut out = format!("{} {}\n", self.n, self.edges.len());
        for &(u, v) in &self.edges {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges)
    }
}

/// A set of vertex ids out of `0..n`, canonical and order-free.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    n: usize,
    blocks: Vec<u64>,
}

impl VertexSet {
    pub fn new(n: usize) -> Self {
        VertexSet {
            n,
            blocks: vec![0; n.div_ceil(64)],
        }
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(n: usize, indices: I) -> Self {
        let mut set = VertexSet::new(n);
        for v in indices {
            set.insert(v);
        }
        set
    }

    /// Set encoded by the low `n` bits of a mask (bit `v` = vertex `v`).
    pub fn from_mask(n: usize, mask: u64) -> Self {
        assert!(n <= 64 && (n == 64 || mask >> n == 0), "mask out of range");
        let mut set = VertexSet::new(n);
        if !set.blocks.is_empty() {
            set.blocks[0] = mask;
        } else {
            assert_eq!(mask, 0);
        }
        set
    }

    pub fn universe(&self) -> usize {
        self.n
    }

    pub fn insert(&mut self, v: usize) {
        assert!(v < self.n, "vertex {v} out of range (n = {})", self.n);
        self.blocks[v / 64] |= 1 << (v % 64);
    }

    pub fn remove(&mut self, v: usize) {
        assert!(v < self.n, "vertex {v} out of range (n = {})", self.n);
        self.blocks[v / 64] &= !(1 << (v % 64));
    }

    pub fn contains(&self, v: usize) -> bool {
        v < self.n && self.blocks[v / 64] >> (v % 64) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.blocks.iter().map(|b| b.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.iter().all(|&b| b == 0)
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.blocks
            .iter()
            .zip(&other.blocks)
            .all(|(a, b)| a & b == 0)
    }

    pub fn is_subset_of(&self, other: &VertexSet) -> bool {
        self.blocks
            .iter()
            .zip(&other.blocks)
            .all(|(a, b)| a & !b == 0)
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        assert_eq!(self.n, other.n);
        let blocks = self
            .blocks
            .iter()
            .zip(&other.blocks)
            .map(|(a, b)| a | b)
            .collect();
        VertexSet { n: self.n, blocks }
    }

    pub fn complement(&self) -> VertexSet {
        let mut out = VertexSet::new(self.n);
        for (i, b) in self.blocks.iter().enumerate() {
            out.blocks[i] = !b;
        }
        let spare = self.blocks.len() * 64 - self.n;
        if spare > 0 {
            let last = out.blocks.len() - 1;
            out.blocks[last] &= u64::MAX >> spare;
        }
        out
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(move |&v| self.contains(v))
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Lexicographic order on the membership bit string `b_0 b_1 ... b_{n-1}`:
    /// at the smallest vertex where the sets differ, the set missing that
    /// vertex is smaller. Certificate tie-breaking uses this order.
    pub fn lex_cmp(&self, other: &VertexSet) -> Ordering {
        debug_assert_eq!(self.n, other.n);
        for (a, b) in self.blocks.iter().zip(&other.blocks) {
            if a != b {
                let low = (a ^ b) & (a ^ b).wrapping_neg();
                return if a & low == 0 {
                    Ordering::Less
                } else {
                    Ordering::Greater
                };
            }
        }
        Ordering::Equal
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "(empty)");
        }
        let mut first = true;
        for v in self.iter() {
            if !first {
                write!(f, " ")?;
            }
            write!(f, "{v}")?;
            first = false;
        }
        Ok(())
    }
}

/// A maximal connected set of vertices in some vertex-deleted subgraph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Component {
    vertices: Vec<usize>, // sorted ascending
}

impl Component {
    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn min_vertex(&self) -> usize {
        self.vertices[0]
    }

    pub fn to_set(&self, n: usize) -> VertexSet {
        VertexSet::from_indices(n, self.vertices.iter().copied())
    }
}
