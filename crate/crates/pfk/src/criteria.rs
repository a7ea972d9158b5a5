//! Parity-factor existence criteria with proof-grade certificates.
//!
//! Two deciders are exposed. `lovasz_exists` evaluates
//! `eta(S,T) = g(T) - sum_{x in T} d_{G-S}(x) - f(S) + tau(S,T)` over every
//! disjoint pair (S,T): a (g,f)-parity factor exists iff eta never exceeds
//! zero. `min_parity_exists` evaluates the one-set specialization
//! `delta(T) = g(T) - sum_{x in T} d_G(x) + tau(T)` over every subset: a
//! factor with `d_F(v) >= g(v)` and `d_F(v) = g(v) (mod 2)` exists iff delta
//! never exceeds zero. Both report the maximizing set(s) as a certificate on
//! non-existence, breaking ties toward the lexicographically smallest
//! membership bit string.
//!
//! Since eta(empty,empty) = tau(empty,empty) >= 0, the maxima are never
//! negative: existence holds exactly when the maximum is zero.

use rayon::prelude::*;
use thiserror::Error;

use crate::graph::{Graph, VertexSet};

/// Per-vertex degree bounds with the parity coupling g = f (mod 2).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeSpec {
    g: Vec<usize>,
    f: Vec<usize>,
}

impl DegreeSpec {
    pub fn new(g: Vec<usize>, f: Vec<usize>) -> Self {
        DegreeSpec { g, f }
    }

    pub fn uniform(n: usize, g: usize, f: usize) -> Self {
        DegreeSpec {
            g: vec![g; n],
            f: vec![f; n],
        }
    }

    pub fn len(&self) -> usize {
        self.g.len()
    }

    pub fn is_empty(&self) -> bool {
        self.g.is_empty()
    }

    pub fn g(&self) -> &[usize] {
        &self.g
    }

    pub fn f(&self) -> &[usize] {
        &self.f
    }

    pub fn g_at(&self, v: usize) -> usize {
        self.g[v]
    }

    pub fn f_at(&self, v: usize) -> usize {
        self.f[v]
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SpecViolation {
    SizeMismatch { expected: usize, found: usize },
    OrderViolation { vertex: usize, g: usize, f: usize },
    ParityViolation { vertex: usize, g: usize, f: usize },
}

impl std::fmt::Display for SpecViolation {
    fn fmt(&self, out: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SpecViolation::SizeMismatch { expected, found } => {
                write!(out, "spec sized for {found} vertices, graph has {expected}")
            }
            SpecViolation::OrderViolation { vertex, g, f } => {
                write!(out, "vertex {vertex}: g = {g} exceeds f = {f}")
            }
            SpecViolation::ParityViolation { vertex, g, f } => {
                write!(out, "vertex {vertex}: g = {g} and f = {f} differ in parity")
            }
        }
    }
}

/// Confirms both spec invariants, listing every violating vertex otherwise.
pub fn validate_spec(graph: &Graph, spec: &DegreeSpec) -> Result<(), Vec<SpecViolation>> {
    let mut violations = Vec::new();
    if spec.len() != graph.vertex_count() {
        violations.push(SpecViolation::SizeMismatch {
            expected: graph.vertex_count(),
            found: spec.len(),
        });
        return Err(violations);
    }
    for v in 0..spec.len() {
        let (g, f) = (spec.g[v], spec.f[v]);
        if g > f {
            violations.push(SpecViolation::OrderViolation { vertex: v, g, f });
        } else if g % 2 != f % 2 {
            violations.push(SpecViolation::ParityViolation { vertex: v, g, f });
        }
    }
    if violations.is_empty() {
        Ok(())
    } else {
        Err(violations)
    }
}

/// Which degree function supplies the component weight in the odd-component
/// count. The two rules agree whenever g = f (mod 2) holds vertexwise.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParityRule {
    FBased,
    GBased,
}

/// Number of components C of G-(S u T) with `e_G(V(C),T) + x(V(C))` odd,
/// where x is f or g according to `rule`.
pub fn tau(
    graph: &Graph,
    s: &VertexSet,
    t: &VertexSet,
    spec: &DegreeSpec,
    rule: ParityRule,
) -> usize {
    let weights = match rule {
        ParityRule::FBased => &spec.f,
        ParityRule::GBased => &spec.g,
    };
    tau_weighted(graph, s, t, weights)
}

fn tau_weighted(graph: &Graph, s: &VertexSet, t: &VertexSet, weights: &[usize]) -> usize {
    assert!(s.is_disjoint(t), "tau requires disjoint S and T");
    assert_eq!(weights.len(), graph.vertex_count());
    graph
        .components_after_removal(&s.union(t))
        .iter()
        .filter(|c| component_is_odd(graph, c.vertices(), t, weights))
        .count()
}

fn component_is_odd(graph: &Graph, vertices: &[usize], t: &VertexSet, weights: &[usize]) -> bool {
    let boundary: usize = vertices.iter().map(|&v| graph.edges_to_set(v, t)).sum();
    let weight: usize = vertices.iter().map(|&v| weights[v]).sum();
    (boundary + weight) % 2 == 1
}

/// Exact value of eta(S,T); `d_{G-S}` is the degree after deleting S.
pub fn eta(graph: &Graph, s: &VertexSet, t: &VertexSet, spec: &DegreeSpec) -> i64 {
    assert!(s.is_disjoint(t), "eta requires disjoint S and T");
    assert_eq!(spec.len(), graph.vertex_count());
    let g_t: i64 = t.iter().map(|v| spec.g[v] as i64).sum();
    let deg_t: i64 = t.iter().map(|v| graph.degree_avoiding(v, s) as i64).sum();
    let f_s: i64 = s.iter().map(|v| spec.f[v] as i64).sum();
    g_t - deg_t - f_s + tau_weighted(graph, s, t, &spec.f) as i64
}

/// Value of delta(T) = g(T) - sum_{x in T} d_G(x) + tau(T), with the g-based
/// odd-component rule.
pub fn theorem4_delta(graph: &Graph, t: &VertexSet, g: &[usize]) -> i64 {
    assert_eq!(g.len(), graph.vertex_count());
    let g_t: i64 = t.iter().map(|v| g[v] as i64).sum();
    let deg_t: i64 = t.iter().map(|v| graph.degree(v) as i64).sum();
    g_t - deg_t + tau_weighted(graph, &VertexSet::new(graph.vertex_count()), t, g) as i64
}

/// Enumeration budgets. Exceeding a cap is an error, never silent
/// truncation; masks bound every enumeration at 63 vertices regardless.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumerationCaps {
    /// Cap for the 3^n disjoint-pair enumeration.
    pub pair_max_n: usize,
    /// Cap for the 2^n subset enumeration.
    pub subset_max_n: usize,
}

impl Default for EnumerationCaps {
    fn default() -> Self {
        EnumerationCaps {
            pair_max_n: 16,
            subset_max_n: 20,
        }
    }
}

impl EnumerationCaps {
    pub fn uniform(max_n: usize) -> Self {
        EnumerationCaps {
            pair_max_n: max_n,
            subset_max_n: max_n,
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CriteriaError {
    #[error("{what} enumeration capped at n <= {cap}, got n = {n}")]
    CapExceeded {
        what: &'static str,
        n: usize,
        cap: usize,
    },
    #[error("invalid degree spec: {}", summarize(.0))]
    InvalidSpec(Vec<SpecViolation>),
    #[error("mode/parity mismatch: {mode} mode requires {mode} m, got m = {m}")]
    ModeParityMismatch { mode: FactorMode, m: usize },
}

fn summarize(violations: &[SpecViolation]) -> String {
    violations
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join("; ")
}

/// One g-odd component recorded in a certificate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OddComponent {
    pub vertices: Vec<usize>,
    pub edges_to_t: usize,
}

/// A witnessing pair (S,T) — S empty for one-set certificates — together
/// with its criterion value and the odd components counted by tau.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeficiencyCertificate {
    pub s: VertexSet,
    pub t: VertexSet,
    pub value: i64,
    pub odd_components: Vec<OddComponent>,
}

impl DeficiencyCertificate {
    fn build(graph: &Graph, s: VertexSet, t: VertexSet, value: i64, weights: &[usize]) -> Self {
        let odd_components = graph
            .components_after_removal(&s.union(&t))
            .iter()
            .filter(|c| component_is_odd(graph, c.vertices(), &t, weights))
            .map(|c| OddComponent {
                vertices: c.vertices().to_vec(),
                edges_to_t: c
                    .vertices()
                    .iter()
                    .map(|&v| graph.edges_to_set(v, &t))
                    .sum(),
            })
            .collect();
        DeficiencyCertificate {
            s,
            t,
            value,
            odd_components,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExistenceVerdict {
    pub exists: bool,
    /// Present exactly when `exists` is false; its value is then positive.
    pub certificate: Option<DeficiencyCertificate>,
}

/// Lexicographic order on membership bit strings, vertex 0 first: at the
/// lowest differing bit the mask without it is smaller.
fn mask_lex_less(a: u64, b: u64) -> bool {
    if a == b {
        return false;
    }
    let low = (a ^ b) & (a ^ b).wrapping_neg();
    a & low == 0
}

/// (value, s, t) preferring larger value, then lex-smaller S, then lex-smaller T.
fn better_pair(a: (i64, u64, u64), b: (i64, u64, u64)) -> (i64, u64, u64) {
    if a.0 != b.0 {
        return if a.0 > b.0 { a } else { b };
    }
    if a.1 != b.1 {
        return if mask_lex_less(a.1, b.1) { a } else { b };
    }
    if mask_lex_less(a.2, b.2) {
        a
    } else {
        b
    }
}

/// Adjacency as bit masks (multiplicity dropped; only reachability needs it).
fn adjacency_masks(graph: &Graph) -> Vec<u64> {
    let n = graph.vertex_count();
    let mut masks = vec![0u64; n];
    for &(u, v) in graph.edges() {
        masks[u] |= 1 << v;
        masks[v] |= 1 << u;
    }
    masks
}

/// Connected components of the graph restricted to `alive`, as masks.
fn components_mask(adj: &[u64], mut alive: u64) -> Vec<u64> {
    let mut comps = Vec::new();
    while alive != 0 {
        let start = alive & alive.wrapping_neg();
        let mut comp = start;
        loop {
            let mut grown = comp;
            let mut scan = comp;
            while scan != 0 {
                let v = scan.trailing_zeros() as usize;
                scan &= scan - 1;
                grown |= adj[v] & alive;
            }
            if grown == comp {
                break;
            }
            comp = grown;
        }
        comps.push(comp);
        alive &= !comp;
    }
    comps
}

/// eta evaluated on mask-encoded sets; used only inside the enumerations.
fn eta_masks(graph: &Graph, adj: &[u64], smask: u64, tmask: u64, g: &[usize], f: &[usize]) -> i64 {
    let n = graph.vertex_count();
    let mut value = 0i64;
    let mut scan = tmask;
    while scan != 0 {
        let x = scan.trailing_zeros() as usize;
        scan &= scan - 1;
        value += g[x] as i64 - graph.degree(x) as i64;
        // edges from x back into S are not part of d_{G-S}(x)
        value += graph
            .incident(x)
            .iter()
            .filter(|&&(u, _)| smask >> u & 1 == 1)
            .count() as i64;
    }
    let mut scan = smask;
    while scan != 0 {
        let x = scan.trailing_zeros() as usize;
        scan &= scan - 1;
        value -= f[x] as i64;
    }
    let alive = !(smask | tmask) & mask_of(n);
    for comp in components_mask(adj, alive) {
        let mut weight = 0usize;
        let mut boundary = 0usize;
        let mut scan = comp;
        while scan != 0 {
            let v = scan.trailing_zeros() as usize;
            scan &= scan - 1;
            weight += f[v];
            boundary += graph
                .incident(v)
                .iter()
                .filter(|&&(u, _)| tmask >> u & 1 == 1)
                .count();
        }
        if (weight + boundary) % 2 == 1 {
            value += 1;
        }
    }
    value
}

fn mask_of(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Maximum of eta over every disjoint (S,T) with the lexicographically
/// smallest maximizing pair (S compared first). Never negative:
/// eta(empty,empty) >= 0.
pub fn max_eta(
    graph: &Graph,
    spec: &DegreeSpec,
    caps: &EnumerationCaps,
) -> Result<(i64, VertexSet, VertexSet), CriteriaError> {
    validate_spec(graph, spec).map_err(CriteriaError::InvalidSpec)?;
    let n = graph.vertex_count();
    let cap = caps.pair_max_n.min(63);
    if n > cap {
        return Err(CriteriaError::CapExceeded {
            what: "disjoint-pair",
            n,
            cap,
        });
    }
    let adj = adjacency_masks(graph);
    let full = mask_of(n);
    let best = (0u64..=full)
        .into_par_iter()
        .map(|smask| {
            let free = full & !smask;
            let mut local = (i64::MIN, 0u64, 0u64);
            let mut tmask = free;
            loop {
                let value = eta_masks(graph, &adj, smask, tmask, &spec.g, &spec.f);
                let entry = (value, smask, tmask);
                local = if local.0 == i64::MIN {
                    entry
                } else {
                    better_pair(local, entry)
                };
                if tmask == 0 {
                    break;
                }
                tmask = (tmask - 1) & free;
            }
            local
        })
        .reduce_with(better_pair)
        .unwrap_or((0, 0, 0));
    let (value, smask, tmask) = best;
    let s = VertexSet::from_mask(n, smask);
    let t = VertexSet::from_mask(n, tmask);
    debug_assert_eq!(eta(graph, &s, &t, spec), value);
    Ok((value, s, t))
}

/// Full Lovasz criterion over every disjoint (S,T): existence iff the
/// maximum of eta is zero. On non-existence the certificate is the
/// maximizing pair, ties broken lexicographically (S first, then T).
pub fn lovasz_exists(
    graph: &Graph,
    spec: &DegreeSpec,
    caps: &EnumerationCaps,
) -> Result<ExistenceVerdict, CriteriaError> {
    let (value, s, t) = max_eta(graph, spec, caps)?;
    if value <= 0 {
        return Ok(ExistenceVerdict {
            exists: true,
            certificate: None,
        });
    }
    let certificate = DeficiencyCertificate::build(graph, s, t, value, &spec.f);
    Ok(ExistenceVerdict {
        exists: false,
        certificate: Some(certificate),
    })
}

/// Maximum of delta over every subset T with the lexicographically
/// smallest maximizer. Never negative: delta(empty) >= 0.
pub fn max_delta(
    graph: &Graph,
    g: &[usize],
    caps: &EnumerationCaps,
) -> Result<(i64, VertexSet), CriteriaError> {
    assert_eq!(g.len(), graph.vertex_count());
    let n = graph.vertex_count();
    let cap = caps.subset_max_n.min(63);
    if n > cap {
        return Err(CriteriaError::CapExceeded {
            what: "subset",
            n,
            cap,
        });
    }
    let adj = adjacency_masks(graph);
    let full = mask_of(n);
    let best = (0u64..=full)
        .into_par_iter()
        .map(|tmask| (eta_masks(graph, &adj, 0, tmask, g, g), 0u64, tmask))
        .reduce_with(better_pair)
        .unwrap_or((0, 0, 0));
    let (value, _, tmask) = best;
    let t = VertexSet::from_mask(n, tmask);
    debug_assert_eq!(theorem4_delta(graph, &t, g), value);
    Ok((value, t))
}

/// One-set criterion over every T: a factor with `d_F >= g` and matching
/// parity exists iff delta(T) <= 0 for all T. On non-existence the
/// certificate is the maximizing T (lex-smallest among maximizers).
pub fn min_parity_exists(
    graph: &Graph,
    g: &[usize],
    caps: &EnumerationCaps,
) -> Result<ExistenceVerdict, CriteriaError> {
    let (value, t) = max_delta(graph, g, caps)?;
    if value <= 0 {
        return Ok(ExistenceVerdict {
            exists: true,
            certificate: None,
        });
    }
    let certificate =
        DeficiencyCertificate::build(graph, VertexSet::new(graph.vertex_count()), t, value, g);
    Ok(ExistenceVerdict {
        exists: false,
        certificate: Some(certificate),
    })
}

/// Maximum of delta(T) over subsets T of `candidates` only, with the
/// lex-smallest maximizer. This is the restricted certificate search the
/// CLI falls back to when the full subset enumeration is out of reach.
pub fn max_delta_restricted(
    graph: &Graph,
    g: &[usize],
    candidates: &VertexSet,
    caps: &EnumerationCaps,
) -> Result<(i64, VertexSet), CriteriaError> {
    assert_eq!(g.len(), graph.vertex_count());
    let n = graph.vertex_count();
    let ids = candidates.to_vec();
    let cap = caps.subset_max_n.min(63);
    if ids.len() > cap {
        return Err(CriteriaError::CapExceeded {
            what: "restricted subset",
            n: ids.len(),
            cap,
        });
    }
    let mut best: Option<(i64, VertexSet)> = None;
    for mask in 0u64..(1 << ids.len()) {
        let t = VertexSet::from_indices(
            n,
            ids.iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &v)| v),
        );
        let value = theorem4_delta(graph, &t, g);
        let replace = match &best {
            None => true,
            Some((bv, bt)) => {
                value > *bv || (value == *bv && t.lex_cmp(bt) == std::cmp::Ordering::Less)
            }
        };
        if replace {
            best = Some((value, t));
        }
    }
    Ok(best.expect("at least the empty subset is enumerated"))
}

/// Certificate for a caller-chosen T under the one-set criterion.
pub fn subset_certificate(graph: &Graph, t: &VertexSet, g: &[usize]) -> DeficiencyCertificate {
    let value = theorem4_delta(graph, t, g);
    DeficiencyCertificate::build(
        graph,
        VertexSet::new(graph.vertex_count()),
        t.clone(),
        value,
        g,
    )
}

/// Certificate for a caller-chosen disjoint pair under the full criterion.
pub fn pair_certificate(
    graph: &Graph,
    s: &VertexSet,
    t: &VertexSet,
    spec: &DegreeSpec,
) -> DeficiencyCertificate {
    let value = eta(graph, s, t, spec);
    DeficiencyCertificate::build(graph, s.clone(), t.clone(), value, spec.f())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FactorMode {
    Even,
    Odd,
}

impl std::fmt::Display for FactorMode {
    fn fmt(&self, out: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            FactorMode::Even => write!(out, "even"),
            FactorMode::Odd => write!(out, "odd"),
        }
    }
}

/// Even/odd factor existence with minimum degree m: the one-set criterion
/// with constant g = m. The odd-component rule specializes to
/// `e_G(V(C),T)` odd for even m and `e_G(V(C),T) + |V(C)|` odd for odd m.
pub fn corollary_mode(
    graph: &Graph,
    m: usize,
    mode: FactorMode,
    caps: &EnumerationCaps,
) -> Result<ExistenceVerdict, CriteriaError> {
    let wanted_even = matches!(mode, FactorMode::Even);
    if m == 0 || m.is_multiple_of(2) != wanted_even {
        return Err(CriteriaError::ModeParityMismatch { mode, m });
    }
    min_parity_exists(graph, &vec![m; graph.vertex_count()], caps)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{enumerate_small_graphs, named_graph, remark1_family, NamedGraph};
    use crate::graph::Graph;

    fn vs(n: usize, ids: &[usize]) -> VertexSet {
        VertexSet::from_indices(n, ids.iter().copied())
    }

    #[test]
    fn validate_spec_examples() {
        let k4 = named_graph(NamedGraph::Complete(4)).unwrap();
        assert!(validate_spec(&k4, &DegreeSpec::uniform(4, 2, 2)).is_ok());
        let err = validate_spec(&k4, &DegreeSpec::uniform(4, 1, 2)).unwrap_err();
        assert_eq!(err.len(), 4);
        assert!(matches!(err[0], SpecViolation::ParityViolation { .. }));
        let err = validate_spec(&k4, &DegreeSpec::uniform(4, 3, 1)).unwrap_err();
        assert!(matches!(err[0], SpecViolation::OrderViolation { .. }));
        let err = validate_spec(&k4, &DegreeSpec::uniform(3, 1, 1)).unwrap_err();
        assert!(matches!(err[0], SpecViolation::SizeMismatch { .. }));
    }

    #[test]
    fn tau_examples() {
        let k1 = Graph::new(1, &[]).unwrap();
        let spec = DegreeSpec::uniform(1, 1, 1);
        assert_eq!(
            tau(&k1, &vs(1, &[]), &vs(1, &[]), &spec, ParityRule::FBased),
            1
        );

        let inst = remark1_family(2).unwrap();
        let spec = DegreeSpec::uniform(15, 4, 4);
        assert_eq!(
            tau(
                &inst.graph,
                &VertexSet::new(15),
                &inst.hubs,
                &spec,
                ParityRule::GBased
            ),
            3
        );

        let star = named_graph(NamedGraph::Star(3)).unwrap();
        let spec = DegreeSpec::uniform(4, 1, 1);
        assert_eq!(
            tau(&star, &vs(4, &[]), &vs(4, &[0]), &spec, ParityRule::FBased),
            0
        );
    }

    #[test]
    fn eta_examples() {
        let k2 = Graph::new(2, &[(0, 1)]).unwrap();
        assert_eq!(
            eta(&k2, &vs(2, &[]), &vs(2, &[]), &DegreeSpec::uniform(2, 1, 1)),
            0
        );

        let k1 = Graph::new(1, &[]).unwrap();
        assert_eq!(
            eta(&k1, &vs(1, &[]), &vs(1, &[]), &DegreeSpec::uniform(1, 1, 1)),
            1
        );

        let triangle = named_graph(NamedGraph::Cycle(3)).unwrap();
        assert_eq!(
            eta(
                &triangle,
                &vs(3, &[]),
                &vs(3, &[0]),
                &DegreeSpec::uniform(3, 2, 2)
            ),
            0
        );
    }

    #[test]
    fn lovasz_examples() {
        let caps = EnumerationCaps::default();
        let k4 = named_graph(NamedGraph::Complete(4)).unwrap();
        assert!(
            lovasz_exists(&k4, &DegreeSpec::uniform(4, 1, 1), &caps)
                .unwrap()
                .exists
        );

        let k1 = Graph::new(1, &[]).unwrap();
        let verdict = lovasz_exists(&k1, &DegreeSpec::uniform(1, 1, 1), &caps).unwrap();
        assert!(!verdict.exists);
        let cert = verdict.certificate.unwrap();
        assert!(cert.s.is_empty());
        assert!(cert.t.is_empty());
        assert_eq!(cert.value, 1);
        assert_eq!(cert.odd_components.len(), 1);

        let petersen = named_graph(NamedGraph::Petersen).unwrap();
        assert!(
            lovasz_exists(&petersen, &DegreeSpec::uniform(10, 2, 2), &caps)
                .unwrap()
                .exists
        );
    }

    #[test]
    fn lovasz_cap_is_an_error() {
        let g = named_graph(NamedGraph::Cycle(5)).unwrap();
        let caps = EnumerationCaps::uniform(4);
        assert_eq!(
            lovasz_exists(&g, &DegreeSpec::uniform(5, 1, 1), &caps),
            Err(CriteriaError::CapExceeded {
                what: "disjoint-pair",
                n: 5,
                cap: 4
            })
        );
    }

    #[test]
    fn theorem4_delta_examples() {
        let inst = remark1_family(2).unwrap();
        let g4 = vec![4usize; 15];
        assert_eq!(theorem4_delta(&inst.graph, &inst.hubs, &g4), 6);

        // T = empty counts components with odd g-weight
        let c5 = named_graph(NamedGraph::Cycle(5)).unwrap();
        assert_eq!(theorem4_delta(&c5, &VertexSet::new(5), &[1; 5]), 1);
        assert_eq!(theorem4_delta(&c5, &VertexSet::new(5), &[2; 5]), 0);

        let star = named_graph(NamedGraph::Star(3)).unwrap();
        assert_eq!(theorem4_delta(&star, &vs(4, &[0]), &[1; 4]), -2);
    }

    #[test]
    fn min_parity_examples() {
        let caps = EnumerationCaps::default();
        let k4 = named_graph(NamedGraph::Complete(4)).unwrap();
        assert!(min_parity_exists(&k4, &[1; 4], &caps).unwrap().exists);

        let petersen = named_graph(NamedGraph::Petersen).unwrap();
        assert!(
            min_parity_exists(&petersen, &[2; 10], &caps)
                .unwrap()
                .exists
        );
    }

    // For m = 2 the hub family is degenerate: the non-chosen copy vertices
    // share the hubs' degree m+1, so they are deficient for g = m+2 as well.
    // The maximizer keeps all hubs plus two non-chosen vertices per copy.
    #[test]
    fn tight_family_m2_maximizer() {
        let inst = remark1_family(2).unwrap();
        let verdict =
            min_parity_exists(&inst.graph, &[4; 15], &EnumerationCaps::default()).unwrap();
        assert!(!verdict.exists);
        let cert = verdict.certificate.unwrap();
        assert_eq!(cert.value, 12);
        assert_eq!(cert.t.to_vec(), vec![2, 3, 6, 7, 10, 11, 12, 13, 14]);
        assert_eq!(cert.odd_components.len(), 3);
        for comp in &cert.odd_components {
            assert_eq!(comp.edges_to_t, 7);
        }
        // independent recomputation reproduces the stated value
        assert_eq!(theorem4_delta(&inst.graph, &cert.t, &[4; 15]), cert.value);
    }

    #[test]
    fn restricted_search_on_hub_candidates() {
        let inst = remark1_family(2).unwrap();
        let (value, t) = max_delta_restricted(
            &inst.graph,
            &[4; 15],
            &inst.hubs,
            &EnumerationCaps::default(),
        )
        .unwrap();
        assert_eq!(value, 6);
        assert_eq!(t.to_vec(), vec![12, 13, 14]);
    }

    #[test]
    fn corollary_examples() {
        let caps = EnumerationCaps::default();
        let petersen = named_graph(NamedGraph::Petersen).unwrap();
        assert!(
            corollary_mode(&petersen, 2, FactorMode::Even, &caps)
                .unwrap()
                .exists
        );

        let k2 = Graph::new(2, &[(0, 1)]).unwrap();
        assert!(
            corollary_mode(&k2, 1, FactorMode::Odd, &caps)
                .unwrap()
                .exists
        );

        let inst = remark1_family(2).unwrap();
        assert!(
            !corollary_mode(&inst.graph, 4, FactorMode::Even, &caps)
                .unwrap()
                .exists
        );

        assert_eq!(
            corollary_mode(&k2, 1, FactorMode::Even, &caps),
            Err(CriteriaError::ModeParityMismatch {
                mode: FactorMode::Even,
                m: 1
            })
        );
        assert_eq!(
            corollary_mode(&k2, 2, FactorMode::Odd, &caps),
            Err(CriteriaError::ModeParityMismatch {
                mode: FactorMode::Odd,
                m: 2
            })
        );
    }

    #[test]
    fn parity_rules_agree_under_valid_specs() {
        use rand::prelude::*;
        use rand_chacha::ChaCha8Rng;
        let mut rng = ChaCha8Rng::seed_from_u64(31);
        for g in enumerate_small_graphs(4).unwrap() {
            let n = g.vertex_count();
            let gs: Vec<usize> = (0..n).map(|_| rng.gen_range(0..3)).collect();
            let fs: Vec<usize> = gs.iter().map(|&x| x + 2 * rng.gen_range(0..2)).collect();
            let spec = DegreeSpec::new(gs, fs);
            for smask in 0u64..16 {
                for tmask in 0u64..16 {
                    if smask & tmask != 0 {
                        continue;
                    }
                    let s = VertexSet::from_mask(n, smask);
                    let t = VertexSet::from_mask(n, tmask);
                    assert_eq!(
                        tau(&g, &s, &t, &spec, ParityRule::FBased),
                        tau(&g, &s, &t, &spec, ParityRule::GBased)
                    );
                }
            }
        }
    }

    #[test]
    fn tau_bounded_by_component_count() {
        for g in enumerate_small_graphs(4).unwrap() {
            let spec = DegreeSpec::uniform(4, 1, 3);
            for tmask in 0u64..16 {
                let t = VertexSet::from_mask(4, tmask);
                let comps = g.components_after_removal(&t).len();
                assert!(tau(&g, &VertexSet::new(4), &t, &spec, ParityRule::GBased) <= comps);
            }
        }
    }

    #[test]
    fn certificate_tie_break_is_lexicographic() {
        // K_1 with g = f = 1: both (empty,empty) and (empty,{0}) attain
        // eta = 1; the empty pair must win.
        let k1 = Graph::new(1, &[]).unwrap();
        let spec = DegreeSpec::uniform(1, 1, 1);
        assert_eq!(eta(&k1, &vs(1, &[]), &vs(1, &[0]), &spec), 1);
        let cert = lovasz_exists(&k1, &spec, &EnumerationCaps::default())
            .unwrap()
            .certificate
            .unwrap();
        assert!(cert.s.is_empty() && cert.t.is_empty());
    }

    #[test]
    fn deciders_agree_on_small_graphs_with_capped_f() {
        // min-degree-parity mode must match the full criterion when f is
        // capped at the degree with g's parity.
        for g in enumerate_small_graphs(4).unwrap() {
            let caps = EnumerationCaps::default();
            for gv in 0..3usize {
                let gs = vec![gv; 4];
                let feasible = (0..4).all(|v| g.degree(v) >= gv);
                let min_verdict = min_parity_exists(&g, &gs, &caps).unwrap().exists;
                if !feasible {
                    assert!(!min_verdict);
                    continue;
                }
                let fs: Vec<usize> = (0..4)
                    .map(|v| g.degree(v) - (g.degree(v) - gv) % 2)
                    .collect();
                let spec = DegreeSpec::new(gs, fs);
                let full_verdict = lovasz_exists(&g, &spec, &caps).unwrap().exists;
                assert_eq!(min_verdict, full_verdict, "{g:?} g={gv}");
            }
        }
    }
}
