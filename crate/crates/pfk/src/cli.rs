//! Command-line surface: `check`, `find`, `deficiency`, `lambda`, `gen`,
//! `verify`, `selftest` over the shared text formats.
//!
//! Exit codes are part of the interface so pipelines can branch without
//! parsing output: 0 = exists / success, 2 = usage error, 3 = I/O or
//! enumeration-cap error, 4 = does not exist / defects found.
//!
//! Existence itself is always decided through the matching reduction, which
//! has no size cap. Certificates come from the subset enumeration; when the
//! graph is too large for it, the search is restricted to the vertices
//! whose degree already falls short of g (each of those alone is a
//! certificate, and the best subset of them is usually the informative one).

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use crate::connectivity::edge_connectivity;
use crate::criteria::{
    max_delta, max_delta_restricted, max_eta, pair_certificate, subset_certificate, validate_spec,
    CriteriaError, DeficiencyCertificate, DegreeSpec, EnumerationCaps,
};
use crate::factor::{
    brute_force_factor, build_gadget, cap_f, find_parity_factor, verify_factor, ParityFactor,
};
use crate::generators::{
    enumerate_small_graphs, named_graph, random_k_edge_connected, remark1_family, NamedGraph,
};
use crate::graph::{Graph, VertexSet};
use crate::harness::{run_campaign, CampaignConfig, CampaignMode, CampaignSummary};
use crate::matching::{brute_force_matching, has_perfect_matching, max_matching};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_IO_OR_CAP: i32 = 3;
pub const EXIT_NOT_EXISTS: i32 = 4;

pub const MAX_N_ENV: &str = "PFK_MAX_N";

#[derive(Parser, Debug)]
#[command(
    name = "pfk",
    version,
    about = "Parity factor toolkit: existence criteria with certificates, factor construction, edge connectivity, generators and verification campaigns"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decide whether a factor meeting the degree spec exists; on
    /// non-existence print a deficiency certificate
    Check {
        /// Graph file (`n m` header, then `u v` lines; `#` comments)
        graph: PathBuf,
        #[command(flatten)]
        spec: SpecSource,
        #[arg(long)]
        json: bool,
        /// Override the enumeration caps (also: PFK_MAX_N)
        #[arg(long)]
        max_n: Option<usize>,
    },
    /// Construct a factor and print its edges (verified before printing)
    Find {
        graph: PathBuf,
        #[command(flatten)]
        spec: SpecSource,
        #[arg(long)]
        json: bool,
    },
    /// Maximize the deficiency over all T (or all disjoint pairs)
    Deficiency {
        graph: PathBuf,
        #[command(flatten)]
        spec: SpecSource,
        /// Enumerate disjoint (S,T) pairs instead of subsets only
        #[arg(long)]
        full_lovasz: bool,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        max_n: Option<usize>,
    },
    /// Edge connectivity with one shore of a minimum cut
    Lambda {
        graph: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Emit a graph in the shared text format
    Gen {
        #[command(subcommand)]
        what: GenCommand,
    },
    /// Run a verification campaign; exit 0 iff no defects
    Verify {
        /// Campaign config file (`key=value` lines)
        #[arg(long)]
        config: Option<PathBuf>,
        #[arg(long)]
        mode: Option<String>,
        /// Comma-separated m values
        #[arg(long)]
        m: Option<String>,
        /// Comma-separated instance counts (one, or one per m)
        #[arg(long)]
        instances: Option<String>,
        #[arg(long)]
        n_min: Option<usize>,
        #[arg(long)]
        n_max: Option<usize>,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        t_samples: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Small-n oracle equivalence suite
    Selftest,
}

#[derive(Subcommand, Debug)]
enum GenCommand {
    /// Hub family: m+1 copies of K_{2m} plus m+1 hubs (m even)
    Remark1 {
        #[arg(long)]
        m: usize,
    },
    /// Seeded random simple graph with edge connectivity >= k
    Random {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 0xfac704)]
        seed: u64,
    },
    /// complete(n) | cycle(n) | path(n) | petersen | star(k)
    Named { name: String },
}

/// Exactly one degree-spec source per invocation.
#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct SpecSource {
    /// Even factor with minimum degree M (M even)
    #[arg(long, value_name = "M")]
    even: Option<usize>,
    /// Odd factor with minimum degree M (M odd)
    #[arg(long, value_name = "M")]
    odd: Option<usize>,
    /// Minimum degree M with M's parity, no upper bound
    #[arg(long, value_name = "M")]
    g_const: Option<usize>,
    /// Per-vertex minimums: lines `v g`, no upper bound
    #[arg(long, value_name = "FILE")]
    g_file: Option<PathBuf>,
    /// Per-vertex bounds: lines `v g f`
    #[arg(long, value_name = "FILE")]
    gf_file: Option<PathBuf>,
}

enum Failure {
    Usage(String),
    IoOrCap(String),
}

impl Failure {
    fn code(&self) -> i32 {
        match self {
            Failure::Usage(_) => EXIT_USAGE,
            Failure::IoOrCap(_) => EXIT_IO_OR_CAP,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::IoOrCap(m) => m,
        }
    }
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

fn io_or_cap(msg: impl Into<String>) -> Failure {
    Failure::IoOrCap(msg.into())
}

/// Resolved degree constraints: either minimums only (upper bound implied
/// by the vertex degree) or explicit (g,f) bounds.
enum ResolvedSpec {
    Unbounded(Vec<usize>),
    Bounded(DegreeSpec),
}

impl SpecSource {
    fn resolve(&self, graph: &Graph) -> Result<ResolvedSpec, Failure> {
        let n = graph.vertex_count();
        if let Some(m) = self.even {
            if m == 0 || m % 2 != 0 {
                return Err(usage(format!("--even needs a positive even M, got {m}")));
            }
            return Ok(ResolvedSpec::Unbounded(vec![m; n]));
        }
        if let Some(m) = self.odd {
            if m % 2 != 1 {
                return Err(usage(format!("--odd needs an odd M, got {m}")));
            }
            return Ok(ResolvedSpec::Unbounded(vec![m; n]));
        }
        if let Some(m) = self.g_const {
            return Ok(ResolvedSpec::Unbounded(vec![m; n]));
        }
        if let Some(path) = &self.g_file {
            let rows = read_spec_file(path, n, 1)?;
            return Ok(ResolvedSpec::Unbounded(
                rows.into_iter().map(|(g, _)| g).collect(),
            ));
        }
        if let Some(path) = &self.gf_file {
            let rows = read_spec_file(path, n, 2)?;
            let (g, f) = rows.into_iter().unzip();
            let spec = DegreeSpec::new(g, f);
            validate_spec(graph, &spec)
                .map_err(|v| io_or_cap(format!("invalid spec in {}: {}", path.display(), v[0])))?;
            return Ok(ResolvedSpec::Bounded(spec));
        }
        Err(usage(
            "one of --even, --odd, --g-const, --g-file, --gf-file is required",
        ))
    }
}

/// Spec file: lines `v g` (values = 1) or `v g f` (values = 2), `#`
/// comments, every vertex exactly once.
fn read_spec_file(path: &Path, n: usize, values: usize) -> Result<Vec<(usize, usize)>, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| io_or_cap(format!("cannot read {}: {e}", path.display())))?;
    let mut rows: Vec<Option<(usize, usize)>> = vec![None; n];
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        let fail = |msg: String| io_or_cap(format!("{}: line {}: {msg}", path.display(), i + 1));
        if fields.len() != values + 1 {
            return Err(fail(format!("expected {} integers", values + 1)));
        }
        let mut parsed = fields.iter().map(|x| x.parse::<usize>());
        let mut next = || {
            parsed
                .next()
                .unwrap()
                .map_err(|_| fail("not a non-negative integer".into()))
        };
        let v = next()?;
        let g = next()?;
        let f = if values == 2 { next()? } else { g };
        if v >= n {
            return Err(fail(format!("vertex {v} out of range (n = {n})")));
        }
        if rows[v].is_some() {
            return Err(fail(format!("vertex {v} listed twice")));
        }
        rows[v] = Some((g, f));
    }
    rows.into_iter()
        .enumerate()
        .map(|(v, row)| {
            row.ok_or_else(|| io_or_cap(format!("{}: vertex {v} missing", path.display())))
        })
        .collect()
}

fn load_graph(path: &Path) -> Result<Graph, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| io_or_cap(format!("cannot read {}: {e}", path.display())))?;
    Graph::from_text(&text).map_err(|e| io_or_cap(format!("{}: {e}", path.display())))
}

fn resolve_caps(max_n: Option<usize>) -> Result<EnumerationCaps, Failure> {
    if let Some(n) = max_n {
        return Ok(EnumerationCaps::uniform(n));
    }
    match std::env::var(MAX_N_ENV) {
        Ok(value) => value
            .trim()
            .parse()
            .map(EnumerationCaps::uniform)
            .map_err(|_| usage(format!("{MAX_N_ENV} must be an integer, got {value:?}"))),
        Err(_) => Ok(EnumerationCaps::default()),
    }
}

fn cap_failure(err: CriteriaError) -> Failure {
    io_or_cap(err.to_string())
}

#[derive(Serialize)]
struct CertificateJson {
    s: Vec<usize>,
    t: Vec<usize>,
    value: i64,
    odd_components: Vec<OddComponentJson>,
}

#[derive(Serialize)]
struct OddComponentJson {
    vertices: Vec<usize>,
    edges_to_t: usize,
}

impl CertificateJson {
    fn from(cert: &DeficiencyCertificate) -> Self {
        CertificateJson {
            s: cert.s.to_vec(),
            t: cert.t.to_vec(),
            value: cert.value,
            odd_components: cert
                .odd_components
                .iter()
                .map(|c| OddComponentJson {
                    vertices: c.vertices.clone(),
                    edges_to_t: c.edges_to_t,
                })
                .collect(),
        }
    }
}

#[derive(Serialize)]
struct CheckJson {
    exists: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    certificate: Option<CertificateJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    note: Option<String>,
}

fn print_certificate(out: &mut dyn Write, cert: &DeficiencyCertificate) -> std::io::Result<()> {
    writeln!(out, "deficiency: {}", cert.value)?;
    if !cert.s.is_empty() {
        writeln!(out, "S: {}", cert.s)?;
    }
    writeln!(out, "T: {}", cert.t)?;
    writeln!(out, "odd components: {}", cert.odd_components.len())?;
    for comp in &cert.odd_components {
        let ids: Vec<String> = comp.vertices.iter().map(|v| v.to_string()).collect();
        writeln!(
            out,
            "  {{{}}} edges to T: {}",
            ids.join(" "),
            comp.edges_to_t
        )?;
    }
    Ok(())
}

/// Decision via the matching reduction (uncapped), certificate via
/// enumeration (capped, with the deficient-core fallback).
fn cmd_check(
    out: &mut dyn Write,
    graph: &Graph,
    spec: &ResolvedSpec,
    caps: &EnumerationCaps,
    json: bool,
) -> Result<i32, Failure> {
    let (exists, certificate, note) = match spec {
        ResolvedSpec::Unbounded(g) => {
            let exists = match cap_f(graph, g) {
                None => false,
                Some(capped) => find_parity_factor(graph, &capped)
                    .expect("cap_f output is valid")
                    .is_some(),
            };
            if exists {
                (true, None, None)
            } else {
                subset_certificate_with_fallback(graph, g, caps)?
            }
        }
        ResolvedSpec::Bounded(spec) => {
            let exists = find_parity_factor(graph, spec)
                .expect("spec validated at resolve time")
                .is_some();
            if exists {
                (true, None, None)
            } else {
                let (value, s, t) = max_eta(graph, spec, caps).map_err(cap_failure)?;
                debug_assert!(value > 0);
                (false, Some(pair_certificate(graph, &s, &t, spec)), None)
            }
        }
    };

    if json {
        let payload = CheckJson {
            exists,
            certificate: certificate.as_ref().map(CertificateJson::from),
            note,
        };
        writeln!(out, "{}", serde_json::to_string_pretty(&payload).unwrap()).ok();
    } else {
        writeln!(out, "exists: {}", if exists { "yes" } else { "no" }).ok();
        if let Some(cert) = &certificate {
            print_certificate(out, cert).ok();
        }
        if let Some(note) = &note {
            writeln!(out, "note: {note}").ok();
        }
    }
    Ok(if exists { EXIT_OK } else { EXIT_NOT_EXISTS })
}

type CheckOutcome = (bool, Option<DeficiencyCertificate>, Option<String>);

fn subset_certificate_with_fallback(
    graph: &Graph,
    g: &[usize],
    caps: &EnumerationCaps,
) -> Result<CheckOutcome, Failure> {
    match max_delta(graph, g, caps) {
        Ok((value, t)) => {
            debug_assert!(value > 0, "matching reduction said no factor");
            Ok((false, Some(subset_certificate(graph, &t, g)), None))
        }
        Err(CriteriaError::CapExceeded { .. }) => {
            let core = VertexSet::from_indices(
                graph.vertex_count(),
                (0..graph.vertex_count()).filter(|&v| graph.degree(v) < g[v]),
            );
            if core.is_empty() {
                return Err(io_or_cap(format!(
                    "no factor exists, but n = {} exceeds the certificate enumeration cap \
                     and no vertex is individually deficient; raise --max-n or {MAX_N_ENV}",
                    graph.vertex_count()
                )));
            }
            let (value, t) = max_delta_restricted(graph, g, &core, caps).map_err(cap_failure)?;
            debug_assert!(value > 0, "a deficient vertex alone is a certificate");
            let note = format!(
                "certificate search restricted to the {} vertices with degree below g",
                core.len()
            );
            Ok((false, Some(subset_certificate(graph, &t, g)), Some(note)))
        }
        Err(other) => Err(cap_failure(other)),
    }
}

#[derive(Serialize)]
struct FindJson {
    exists: bool,
    edges: Vec<(usize, usize)>,
    degrees: Vec<usize>,
}

fn cmd_find(
    out: &mut dyn Write,
    graph: &Graph,
    spec: &ResolvedSpec,
    json: bool,
) -> Result<i32, Failure> {
    let bounded;
    let factor: Option<ParityFactor> = match spec {
        ResolvedSpec::Unbounded(g) => match cap_f(graph, g) {
            None => None,
            Some(capped) => {
                bounded = capped;
                find_parity_factor(graph, &bounded)
                    .expect("cap_f output is valid")
                    .inspect(|f| {
                        verify_factor(graph, f.edges(), &bounded).expect("factor verifies");
                    })
            }
        },
        ResolvedSpec::Bounded(spec) => find_parity_factor(graph, spec)
            .expect("spec validated at resolve time")
            .inspect(|f| {
                // re-verification happens against the degree-capped bounds
                let capped = cap_f(graph, spec.g()).expect("factor exists");
                verify_factor(graph, f.edges(), &capped).expect("factor verifies");
            }),
    };

    if json {
        let payload = FindJson {
            exists: factor.is_some(),
            edges: factor
                .as_ref()
                .map(|f| f.edges().to_vec())
                .unwrap_or_default(),
            degrees: factor
                .as_ref()
                .map(|f| f.degrees().to_vec())
                .unwrap_or_default(),
        };
        writeln!(out, "{}", serde_json::to_string_pretty(&payload).unwrap()).ok();
    } else {
        match &factor {
            None => {
                writeln!(out, "not exists").ok();
            }
            Some(f) => {
                for &(u, v) in f.edges() {
                    writeln!(out, "{u} {v}").ok();
                }
            }
        }
    }
    Ok(if factor.is_some() {
        EXIT_OK
    } else {
        EXIT_NOT_EXISTS
    })
}

#[derive(Serialize)]
struct DeficiencyJson {
    kind: &'static str,
    value: i64,
    s: Vec<usize>,
    t: Vec<usize>,
    odd_components: Vec<OddComponentJson>,
}

fn cmd_deficiency(
    out: &mut dyn Write,
    graph: &Graph,
    spec: &ResolvedSpec,
    full_lovasz: bool,
    caps: &EnumerationCaps,
    json: bool,
) -> Result<i32, Failure> {
    let (kind, cert) = match (spec, full_lovasz) {
        (ResolvedSpec::Unbounded(g), false) => {
            let (_, t) = max_delta(graph, g, caps).map_err(cap_failure)?;
            ("subset", subset_certificate(graph, &t, g))
        }
        (ResolvedSpec::Unbounded(g), true) => {
            let spec = cap_f(graph, g).ok_or_else(|| {
                io_or_cap(
                    "full pair enumeration needs f; some vertex has degree below g".to_string(),
                )
            })?;
            let (_, s, t) = max_eta(graph, &spec, caps).map_err(cap_failure)?;
            ("pair", pair_certificate(graph, &s, &t, &spec))
        }
        (ResolvedSpec::Bounded(spec), _) => {
            let (_, s, t) = max_eta(graph, spec, caps).map_err(cap_failure)?;
            ("pair", pair_certificate(graph, &s, &t, spec))
        }
    };

    if json {
        let payload = DeficiencyJson {
            kind,
            value: cert.value,
            s: cert.s.to_vec(),
            t: cert.t.to_vec(),
            odd_components: CertificateJson::from(&cert).odd_components,
        };
        writeln!(out, "{}", serde_json::to_string_pretty(&payload).unwrap()).ok();
    } else {
        writeln!(
            out,
            "max {}: {}",
            if kind == "subset" { "delta" } else { "eta" },
            cert.value
        )
        .ok();
        if kind == "pair" {
            writeln!(out, "S: {}", cert.s).ok();
        }
        writeln!(out, "T: {}", cert.t).ok();
        writeln!(out, "odd components: {}", cert.odd_components.len()).ok();
        for comp in &cert.odd_components {
            let ids: Vec<String> = comp.vertices.iter().map(|v| v.to_string()).collect();
            writeln!(
                out,
                "  {{{}}} edges to T: {}",
                ids.join(" "),
                comp.edges_to_t
            )
            .ok();
        }
    }
    Ok(EXIT_OK)
}

#[derive(Serialize)]
struct LambdaJson {
    lambda: usize,
    shore: Vec<usize>,
}

fn cmd_lambda(out: &mut dyn Write, graph: &Graph, json: bool) -> Result<i32, Failure> {
    let (lambda, cert) = edge_connectivity(graph).map_err(|e| io_or_cap(e.to_string()))?;
    if json {
        let payload = LambdaJson {
            lambda,
            shore: cert.side.to_vec(),
        };
        writeln!(out, "{}", serde_json::to_string_pretty(&payload).unwrap()).ok();
    } else {
        writeln!(out, "lambda: {lambda}").ok();
        writeln!(out, "shore: {}", cert.side).ok();
    }
    Ok(EXIT_OK)
}

fn cmd_gen(out: &mut dyn Write, what: &GenCommand) -> Result<i32, Failure> {
    let (header, graph) = match what {
        GenCommand::Remark1 { m } => {
            let inst = remark1_family(*m).map_err(|e| usage(e.to_string()))?;
            let hubs: Vec<String> = inst.hubs.iter().map(|v| v.to_string()).collect();
            (
                format!("# hub family m={m}; hubs: {}", hubs.join(" ")),
                inst.graph,
            )
        }
        GenCommand::Random { n, k, seed } => {
            let graph = random_k_edge_connected(*n, *k, *seed).map_err(|e| usage(e.to_string()))?;
            (
                format!("# random graph n={n} lambda>={k} seed={seed}"),
                graph,
            )
        }
        GenCommand::Named { name } => {
            let parsed: NamedGraph = name
                .parse()
                .map_err(|e: crate::generators::GenError| usage(e.to_string()))?;
            let graph = named_graph(parsed).map_err(|e| usage(e.to_string()))?;
            (format!("# {name}"), graph)
        }
    };
    writeln!(out, "{header}").ok();
    write!(out, "{}", graph.to_text()).ok();
    Ok(EXIT_OK)
}

#[allow(clippy::too_many_arguments)]
fn cmd_verify(
    out: &mut dyn Write,
    config_path: Option<&Path>,
    mode: Option<&str>,
    m: Option<&str>,
    instances: Option<&str>,
    n_min: Option<usize>,
    n_max: Option<usize>,
    seed: Option<u64>,
    t_samples: Option<usize>,
    json: bool,
) -> Result<i32, Failure> {
    let mut config = match config_path {
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| io_or_cap(format!("cannot read {}: {e}", path.display())))?;
            CampaignConfig::from_text(&text).map_err(|e| usage(e.to_string()))?
        }
        None => CampaignConfig::default(),
    };
    let parse_list = |value: &str| -> Result<Vec<usize>, Failure> {
        value
            .split(',')
            .map(|x| {
                x.trim()
                    .parse()
                    .map_err(|_| usage(format!("bad number {x:?}")))
            })
            .collect()
    };
    if let Some(mode) = mode {
        config.mode = mode
            .parse()
            .map_err(|e: crate::harness::HarnessError| usage(e.to_string()))?;
    }
    if let Some(m) = m {
        config.m_values = parse_list(m)?;
    }
    if let Some(instances) = instances {
        config.instances = parse_list(instances)?;
    }
    if let Some(n_min) = n_min {
        config.n_min = n_min;
    }
    if let Some(n_max) = n_max {
        config.n_max = n_max;
    }
    if let Some(seed) = seed {
        config.seed = seed;
    }
    if let Some(t_samples) = t_samples {
        config.t_samples = t_samples;
    }
    config.validate().map_err(|e| usage(e.to_string()))?;

    let summary = run_campaign(&config).map_err(|e| usage(e.to_string()))?;
    if json {
        writeln!(out, "{}", serde_json::to_string_pretty(&summary).unwrap()).ok();
    } else {
        print_summary(out, &summary).ok();
    }
    Ok(if summary.is_clean() {
        EXIT_OK
    } else {
        EXIT_NOT_EXISTS
    })
}

fn print_summary(out: &mut dyn Write, summary: &CampaignSummary) -> std::io::Result<()> {
    writeln!(
        out,
        "campaign: mode={} m={:?} seed={}",
        summary.config.mode, summary.config.m_values, summary.config.seed
    )?;
    if summary.config.mode == CampaignMode::Tightness {
        for report in &summary.tightness {
            writeln!(
                out,
                "  m={} n={} lambda={} min_degree={} delta_at_hubs={} \
                 factor_at_m={} factor_above={}{}",
                report.m,
                report.n,
                report.lambda,
                report.min_degree,
                report.delta_at_hubs,
                report.exists_at_m,
                report.exists_above,
                if report.probe { " (probe)" } else { "" },
            )?;
        }
    } else {
        writeln!(
            out,
            "  instances={} passes={} hypothesis_misses={} defects={} proof_step_violations={}",
            summary.reports.len(),
            summary.passes,
            summary.hypothesis_misses,
            summary.defects,
            summary.proof_step_violations.len(),
        )?;
        if let Some(repro) = &summary.repro {
            writeln!(
                out,
                "  DEFECT repro (mode={} m={} seed={}):",
                repro.mode, repro.m, repro.seed
            )?;
            for line in repro.graph_text.lines() {
                writeln!(out, "    {line}")?;
            }
        }
    }
    writeln!(
        out,
        "result: {}",
        if summary.is_clean() {
            "clean"
        } else {
            "DEFECTS FOUND"
        }
    )?;
    Ok(())
}

fn cmd_selftest(out: &mut dyn Write) -> Result<i32, Failure> {
    use rand::prelude::*;
    use rand_chacha::ChaCha8Rng;

    let caps = EnumerationCaps::default();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5e1f);
    let mut failures = 0usize;
    let mut section = |out: &mut dyn Write, name: &str, ok: bool, detail: String| {
        writeln!(out, "{}: {name}{detail}", if ok { "ok" } else { "FAIL" }).ok();
        if !ok {
            failures += 1;
        }
    };

    // criteria vs exhaustive search vs matching reduction
    let mut checked = 0usize;
    let mut agree = true;
    for n in 1..=4 {
        for graph in enumerate_small_graphs(n).unwrap() {
            for _ in 0..4 {
                let f: Vec<usize> = (0..n).map(|v| rng.gen_range(0..=graph.degree(v))).collect();
                let g: Vec<usize> = f
                    .iter()
                    .map(|&fv| fv - 2 * rng.gen_range(0..=fv / 2))
                    .collect();
                let spec = DegreeSpec::new(g, f);
                let a = crate::criteria::lovasz_exists(&graph, &spec, &caps)
                    .unwrap()
                    .exists;
                let b = brute_force_factor(&graph, &spec).unwrap().is_some();
                let c = has_perfect_matching(&build_gadget(&graph, &spec).unwrap().host);
                agree &= a == b && b == c;
                checked += 1;
            }
        }
    }
    section(
        out,
        "criterion = exhaustive search = matching reduction",
        agree,
        format!(" ({checked} cases)"),
    );

    // unbounded mode vs capped construction
    let mut checked = 0usize;
    let mut agree = true;
    for n in 1..=4 {
        for graph in enumerate_small_graphs(n).unwrap() {
            for _ in 0..2 {
                let g: Vec<usize> = (0..n).map(|_| rng.gen_range(0..4)).collect();
                let a = crate::criteria::min_parity_exists(&graph, &g, &caps)
                    .unwrap()
                    .exists;
                let b = match cap_f(&graph, &g) {
                    None => false,
                    Some(spec) => find_parity_factor(&graph, &spec).unwrap().is_some(),
                };
                agree &= a == b;
                checked += 1;
            }
        }
    }
    section(
        out,
        "one-set criterion = degree-capped construction",
        agree,
        format!(" ({checked} cases)"),
    );

    // matching engine vs exhaustive count
    let mut checked = 0usize;
    let mut agree = true;
    for n in 1..=5 {
        for graph in enumerate_small_graphs(n).unwrap() {
            agree &= max_matching(&graph).len() == brute_force_matching(&graph).unwrap();
            checked += 1;
        }
    }
    section(
        out,
        "matching engine = exhaustive matching",
        agree,
        format!(" ({checked} graphs)"),
    );

    // lambda vs exhaustive shores
    let mut checked = 0usize;
    let mut agree = true;
    for n in 2..=4 {
        for graph in enumerate_small_graphs(n).unwrap() {
            let (lambda, cert) = edge_connectivity(&graph).unwrap();
            let mut brute = usize::MAX;
            for mask in 0u64..(1 << (n - 1)) {
                let side = VertexSet::from_mask(n, mask << 1 | 1);
                if side.len() < n {
                    brute = brute.min(graph.edges_between(&side, &side.complement()));
                }
            }
            agree &= lambda == brute
                && graph.edges_between(&cert.side, &cert.side.complement()) == lambda;
            checked += 1;
        }
    }
    section(
        out,
        "edge connectivity = exhaustive shores",
        agree,
        format!(" ({checked} graphs)"),
    );

    writeln!(
        out,
        "selftest: {}",
        if failures == 0 {
            "all clean"
        } else {
            "FAILURES"
        }
    )
    .ok();
    Ok(if failures == 0 {
        EXIT_OK
    } else {
        EXIT_NOT_EXISTS
    })
}

fn dispatch(out: &mut dyn Write, cli: Cli) -> Result<i32, Failure> {
    match cli.command {
        Command::Check {
            graph,
            spec,
            json,
            max_n,
        } => {
            let caps = resolve_caps(max_n)?;
            let graph = load_graph(&graph)?;
            let resolved = spec.resolve(&graph)?;
            cmd_check(out, &graph, &resolved, &caps, json)
        }
        Command::Find { graph, spec, json } => {
            let graph = load_graph(&graph)?;
            let resolved = spec.resolve(&graph)?;
            cmd_find(out, &graph, &resolved, json)
        }
        Command::Deficiency {
            graph,
            spec,
            full_lovasz,
            json,
            max_n,
        } => {
            let caps = resolve_caps(max_n)?;
            let graph = load_graph(&graph)?;
            let resolved = spec.resolve(&graph)?;
            cmd_deficiency(out, &graph, &resolved, full_lovasz, &caps, json)
        }
        Command::Lambda { graph, json } => {
            let graph = load_graph(&graph)?;
            cmd_lambda(out, &graph, json)
        }
        Command::Gen { what } => cmd_gen(out, &what),
        Command::Verify {
            config,
            mode,
            m,
            instances,
            n_min,
            n_max,
            seed,
            t_samples,
            json,
        } => cmd_verify(
            out,
            config.as_deref(),
            mode.as_deref(),
            m.as_deref(),
            instances.as_deref(),
            n_min,
            n_max,
            seed,
            t_samples,
            json,
        ),
        Command::Selftest => cmd_selftest(out),
    }
}

/// Entry point for the binary: parses real args, writes to stdout/stderr,
/// returns the process exit code.
pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_USAGE,
            };
            let _ = e.print();
            return code;
        }
    };
    let mut stdout = std::io::stdout().lock();
    match dispatch(&mut stdout, cli) {
        Ok(code) => code,
        Err(failure) => {
            eprintln!("error: {}", failure.message());
            failure.code()
        }
    }
}

/// Test-friendly entry point: `args` excludes the binary name; returns the
/// exit code and captured stdout.
pub fn run_with_args(args: &[&str]) -> (i32, String) {
    let mut buffer = Vec::new();
    let full: Vec<&str> = std::iter::once("pfk").chain(args.iter().copied()).collect();
    let code = match Cli::try_parse_from(full) {
        Ok(cli) => match dispatch(&mut buffer, cli) {
            Ok(code) => code,
            Err(failure) => {
                buffer.extend_from_slice(format!("error: {}\n", failure.message()).as_bytes());
                failure.code()
            }
        },
        Err(e) => match e.kind() {
            ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                buffer.extend_from_slice(e.to_string().as_bytes());
                EXIT_OK
            }
            _ => {
                buffer.extend_from_slice(e.to_string().as_bytes());
                EXIT_USAGE
            }
        },
    };
    (code, String::from_utf8_lossy(&buffer).into_owned())
}
