//! Exact maximum matching on general graphs (Edmonds blossom, contraction
//! variant) plus an exhaustive oracle for cross-validation.
//!
//! Parallel edges are collapsed before matching: at most one copy of a
//! parallel bundle can ever be matched.

use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum MatchingError {
    #[error("brute-force matching capped at {cap} edges, got {edges}")]
    TooManyEdges { edges: usize, cap: usize },
}

/// A matching of a host graph: pairwise vertex-disjoint edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matching {
    mate: Vec<Option<usize>>,
    edges: Vec<(usize, usize)>, // normalized, sorted
}

impl Matching {
    fn from_mate(mate: Vec<Option<usize>>) -> Self {
        let mut edges: Vec<(usize, usize)> = mate
            .iter()
            .enumerate()
            .filter_map(|(v, &m)| m.filter(|&u| v < u).map(|u| (v, u)))
            .collect();
        edges.sort_unstable();
        Matching { mate, edges }
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn mate(&self, v: usize) -> Option<usize> {
        self.mate[v]
    }

    pub fn is_perfect(&self) -> bool {
        self.mate.iter().all(|m| m.is_some())
    }
}

/// Deduplicated sorted adjacency; vertex scan order is ascending so the
/// returned matching is reproducible.
fn simple_adjacency(graph: &Graph) -> Vec<Vec<usize>> {
    let n = graph.vertex_count();
    let mut adj = Vec::with_capacity(n);
    for v in 0..n {
        let mut nbrs: Vec<usize> = graph.incident(v).iter().map(|&(u, _)| u).collect();
        nbrs.sort_unstable();
        nbrs.dedup();
        adj.push(nbrs);
    }
    adj
}

/// Maximum-cardinality matching. The cardinality is unique; the edge set is
/// the deterministic one produced by ascending-id search order.
pub fn max_matching(graph: &Graph) -> Matching {
    let n = graph.vertex_count();
    let adj = simple_adjacency(graph);
    let mut mate: Vec<Option<usize>> = vec![None; n];

    // greedy seed keeps the augmenting phase short
    for v in 0..n {
        if mate[v].is_none() {
            if let Some(&u) = adj[v].iter().find(|&&u| mate[u].is_none()) {
                mate[v] = Some(u);
                mate[u] = Some(v);
            }
        }
    }

    let mut searcher = BlossomSearch::new(n);
    for start in 0..n {
        if mate[start].is_none() {
            if let Some(finish) = searcher.find_augmenting_path(&adj, &mate, start) {
                augment(&searcher.parent, &mut mate, start, finish);
            }
        }
    }
    Matching::from_mate(mate)
}

pub fn has_perfect_matching(graph: &Graph) -> bool {
    let n = graph.vertex_count();
    n.is_multiple_of(2) && max_matching(graph).len() * 2 == n
}

struct BlossomSearch {
    parent: Vec<usize>, // usize::MAX = unset
    base: Vec<usize>,
    in_queue: Vec<bool>,
    in_blossom: Vec<bool>,
    lca_mark: Vec<bool>,
}

const UNSET: usize = usize::MAX;

impl BlossomSearch {
    fn new(n: usize) -> Self {
        BlossomSearch {
            parent: vec![UNSET; n],
            base: (0..n).collect(),
            in_queue: vec![false; n],
            in_blossom: vec![false; n],
            lca_mark: vec![false; n],
        }
    }

    /// BFS for an augmenting path from unmatched `start`; odd cycles met on
    /// the way are contracted by redirecting `base`.
    fn find_augmenting_path(
        &mut self,
        adj: &[Vec<usize>],
        mate: &[Option<usize>],
        start: usize,
    ) -> Option<usize> {
        let n = adj.len();
        self.parent.fill(UNSET);
        self.in_queue.fill(false);
        for (v, b) in self.base.iter_mut().enumerate() {
            *b = v;
        }

        let mut queue = std::collections::VecDeque::from([start]);
        self.in_queue[start] = true;
        while let Some(v) = queue.pop_front() {
            for &to in &adj[v] {
                if self.base[v] == self.base[to] || mate[v] == Some(to) {
                    continue;
                }
                let to_is_outer = to == start || mate[to].is_some_and(|m| self.parent[m] != UNSET);
                if to_is_outer {
                    // two outer vertices meet: contract the blossom
                    let cur_base = self.lowest_common_base(mate, v, to);
                    self.in_blossom.fill(false);
                    self.mark_path(mate, v, cur_base, to);
                    self.mark_path(mate, to, cur_base, v);
                    for i in 0..n {
                        if self.in_blossom[self.base[i]] {
                            self.base[i] = cur_base;
                            if !self.in_queue[i] {
                                self.in_queue[i] = true;
                                queue.push_back(i);
                            }
                        }
                    }
                } else if self.parent[to] == UNSET {
                    self.parent[to] = v;
                    match mate[to] {
                        None => return Some(to),
                        Some(m) => {
                            if !self.in_queue[m] {
                                self.in_queue[m] = true;
                                queue.push_back(m);
                            }
                        }
                    }
                }
            }
        }
        None
    }

    fn lowest_common_base(&mut self, mate: &[Option<usize>], a: usize, b: usize) -> usize {
        self.lca_mark.fill(false);
        let mut v = a;
        loop {
            v = self.base[v];
            self.lca_mark[v] = true;
            match mate[v] {
                None => break, // reached the search root
                Some(m) => v = self.parent[m],
            }
        }
        let mut w = b;
        loop {
            w = self.base[w];
            if self.lca_mark[w] {
                return w;
            }
            w = self.parent[mate[w].expect("inner vertices of the tree are matched")];
        }
    }

    fn mark_path(
        &mut self,
        mate: &[Option<usize>],
        mut v: usize,
        cur_base: usize,
        mut child: usize,
    ) {
        while self.base[v] != cur_base {
            let m = mate[v].expect("blossom path alternates through matched vertices");
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[m]] = true;
            self.parent[v] = child;
            child = m;
            v = self.parent[m];
        }
    }
}

fn augment(parent: &[usize], mate: &mut [Option<usize>], start: usize, finish: usize) {
    let mut v = finish;
    loop {
        let pv = parent[v];
        let next = mate[pv];
        mate[v] = Some(pv);
        mate[pv] = Some(v);
        match next {
            Some(x) if pv != start => v = x,
            _ => break,
        }
    }
}

pub const BRUTE_FORCE_EDGE_CAP: usize = 24;

/// Maximum matching size by exhaustive search over the deduplicated edges.
pub fn brute_force_matching(graph: &Graph) -> Result<usize, MatchingError> {
    let mut edges: Vec<(usize, usize)> = graph.edges().to_vec();
    edges.sort_unstable();
    edges.dedup();
    if edges.len() > BRUTE_FORCE_EDGE_CAP {
        return Err(MatchingError::TooManyEdges {
            edges: edges.len(),
            cap: BRUTE_FORCE_EDGE_CAP,
        });
    }
    fn search(edges: &[(usize, usize)], used: &mut [bool], taken: usize, best: &mut usize) {
        *best = (*best).max(taken);
        if taken + edges.len() <= *best {
            return; // even taking every remaining edge cannot improve
        }
        if let Some((&(u, v), rest)) = edges.split_first() {
            if !used[u] && !used[v] {
                used[u] = true;
                used[v] = true;
                search(rest, used, taken + 1, best);
                used[u] = false;
                used[v] = false;
            }
            search(rest, used, taken, best);
        }
    }
    let mut best = 0;
    let mut used = vec![false; graph.vertex_count()];
    search(&edges, &mut used, 0, &mut best);
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{enumerate_small_graphs, named_graph, NamedGraph};
    use crate::graph::Graph;

    fn assert_valid(graph: &Graph, matching: &Matching) {
        let mut used = vec![false; graph.vertex_count()];
        for &(u, v) in matching.edges() {
            assert!(
                graph.edges().contains(&(u, v)),
                "edge ({u},{v}) not in host"
            );
            assert!(!used[u] && !used[v], "vertex reused");
            used[u] = true;
            used[v] = true;
        }
    }

    /// Exhaustive alternating-path search: true iff an augmenting path
    /// exists for `matching`. Exponential, test-only.
    fn augmenting_path_exists(graph: &Graph, matching: &Matching) -> bool {
        let n = graph.vertex_count();
        let adj = simple_adjacency(graph);
        fn dfs(
            adj: &[Vec<usize>],
            matching: &Matching,
            v: usize,
            need_matched: bool,
            visited: &mut Vec<bool>,
        ) -> bool {
            for &u in &adj[v] {
                if visited[u] {
                    continue;
                }
                let edge_is_matched = matching.mate(v) == Some(u);
                if edge_is_matched != need_matched {
                    continue;
                }
                if !need_matched && matching.mate(u).is_none() {
                    return true;
                }
                visited[u] = true;
                if dfs(adj, matching, u, !need_matched, visited) {
                    return true;
                }
                visited[u] = false;
            }
            false
        }
        (0..n).filter(|&v| matching.mate(v).is_none()).any(|v| {
            let mut visited = vec![false; n];
            visited[v] = true;
            dfs(&adj, matching, v, false, &mut visited)
        })
    }

    #[test]
    fn k4_matches_two() {
        let g = named_graph(NamedGraph::Complete(4)).unwrap();
        assert_eq!(max_matching(&g).len(), 2);
    }

    #[test]
    fn odd_cycle_matches_two() {
        let g = named_graph(NamedGraph::Cycle(5)).unwrap();
        let m = max_matching(&g);
        assert_eq!(m.len(), 2);
        assert_valid(&g, &m);
    }

    #[test]
    fn petersen_has_perfect_matching() {
        let g = named_graph(NamedGraph::Petersen).unwrap();
        let m = max_matching(&g);
        assert_eq!(m.len(), 5);
        assert!(m.is_perfect());
        assert!(has_perfect_matching(&g));
        assert_eq!(brute_force_matching(&g).unwrap(), 5);
    }

    #[test]
    fn perfect_matching_examples() {
        assert!(has_perfect_matching(&Graph::new(2, &[(0, 1)]).unwrap()));
        assert!(!has_perfect_matching(
            &named_graph(NamedGraph::Star(3)).unwrap()
        ));
    }

    #[test]
    fn brute_force_examples() {
        assert_eq!(
            brute_force_matching(&named_graph(NamedGraph::Cycle(6)).unwrap()).unwrap(),
            3
        );
        assert_eq!(
            brute_force_matching(&named_graph(NamedGraph::Cycle(5)).unwrap()).unwrap(),
            2
        );
        let k4_minus_edge = Graph::new(4, &[(0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(brute_force_matching(&k4_minus_edge).unwrap(), 2);
        let big = named_graph(NamedGraph::Complete(8)).unwrap();
        assert!(brute_force_matching(&big).is_err());
    }

    #[test]
    fn classic_blossom_trap() {
        // 5-cycle with a chord plus a pendant forcing a blossom expansion
        let g = Graph::new(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (1, 3), (2, 5)]).unwrap();
        let m = max_matching(&g);
        assert_eq!(m.len(), 3);
        assert_valid(&g, &m);
    }

    #[test]
    fn parallel_edges_collapse() {
        let g = Graph::new(2, &[(0, 1), (0, 1), (0, 1)]).unwrap();
        let m = max_matching(&g);
        assert_eq!(m.len(), 1);
    }

    #[test]
    fn deterministic_output() {
        let g = named_graph(NamedGraph::Petersen).unwrap();
        assert_eq!(max_matching(&g).edges(), max_matching(&g).edges());
    }

    #[test]
    fn agrees_with_brute_force_exhaustively_to_n5() {
        for n in 1..=5 {
            for g in enumerate_small_graphs(n).unwrap() {
                let m = max_matching(&g);
                assert_valid(&g, &m);
                assert_eq!(m.len(), brute_force_matching(&g).unwrap(), "{g:?}");
                assert!(!augmenting_path_exists(&g, &m), "{g:?}");
            }
        }
    }

    #[test]
    fn agrees_with_brute_force_on_random_graphs() {
        use rand::prelude::*;
        use rand_chacha::ChaCha8Rng;
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        for _ in 0..150 {
            let n = rng.gen_range(2..=10);
            let m = rng.gen_range(0..=20.min(n * (n - 1) / 2));
            let mut edges = Vec::new();
            while edges.len() < m {
                let u = rng.gen_range(0..n);
                let v = rng.gen_range(0..n);
                if u != v && !edges.contains(&(u.min(v), u.max(v))) {
                    edges.push((u.min(v), u.max(v)));
                }
            }
            let g = Graph::new(n, &edges).unwrap();
            let matching = max_matching(&g);
            assert_valid(&g, &matching);
            assert_eq!(matching.len(), brute_force_matching(&g).unwrap(), "{g:?}");
            assert!(!augmenting_path_exists(&g, &matching), "{g:?}");
        }
    }
}
