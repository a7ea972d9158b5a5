//! Command-line behavior: exit codes, file formats, JSON round-trips.

use std::path::PathBuf;

use pfk::cli::{run_with_args, EXIT_IO_OR_CAP, EXIT_NOT_EXISTS, EXIT_OK, EXIT_USAGE};
use pfk::criteria::{theorem4_delta, DegreeSpec};
use pfk::factor::verify_factor;
use pfk::generators::{named_graph, remark1_family, NamedGraph};
use pfk::graph::{Graph, VertexSet};

struct Fixtures {
    _dir: tempfile::TempDir,
    petersen: PathBuf,
    k4: PathBuf,
    k1: PathBuf,
    p3: PathBuf,
    c5: PathBuf,
    hub_m2: PathBuf,
    disconnected: PathBuf,
}

fn fixtures() -> Fixtures {
    let dir = tempfile::tempdir().unwrap();
    let write = |name: &str, graph: &Graph| {
        let path = dir.path().join(name);
        std::fs::write(&path, graph.to_text()).unwrap();
        path
    };

    Fixtures {
        petersen: write("petersen.g", &named_graph(NamedGraph::Petersen).unwrap()),
        k4: write("k4.g", &named_graph(NamedGraph::Complete(4)).unwrap()),
        k1: write("k1.g", &Graph::new(1, &[]).unwrap()),
        p3: write("p3.g", &named_graph(NamedGraph::Path(3)).unwrap()),
        c5: write("c5.g", &named_graph(NamedGraph::Cycle(5)).unwrap()),
        hub_m2: write("hub_m2.g", &remark1_family(2).unwrap().graph),
        disconnected: write("disc.g", &Graph::new(4, &[(0, 1), (2, 3)]).unwrap()),
        _dir: dir,
    }
}

fn arg(path: &std::path::Path) -> &str {
    path.to_str().unwrap()
}

#[test]
fn check_exit_codes() {
    let fx = fixtures();
    let (code, out) = run_with_args(&["check", arg(&fx.petersen), "--even", "2"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("exists: yes"));

    let (code, out) = run_with_args(&["check", arg(&fx.hub_m2), "--even", "4"]);
    assert_eq!(code, EXIT_NOT_EXISTS);
    assert!(out.contains("exists: no"));
    assert!(out.contains("deficiency: 12"));
    assert!(out.contains("odd components: 3"));

    let (code, _) = run_with_args(&["check", arg(&fx.k1), "--odd", "1"]);
    assert_eq!(code, EXIT_NOT_EXISTS);
}

#[test]
fn malformed_graph_file_reports_line_and_exits_3() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.g");
    std::fs::write(&path, "3 2\n0 1\n1 x\n").unwrap();
    let (code, out) = run_with_args(&["check", path.to_str().unwrap(), "--even", "2"]);
    assert_eq!(code, EXIT_IO_OR_CAP);
    assert!(out.contains("line 3"), "{out}");

    let (code, _) = run_with_args(&["lambda", "/no/such/file.g"]);
    assert_eq!(code, EXIT_IO_OR_CAP);
}

#[test]
fn usage_errors_exit_2() {
    let fx = fixtures();
    // parity mismatch between mode and m
    let (code, _) = run_with_args(&["check", arg(&fx.k4), "--even", "3"]);
    assert_eq!(code, EXIT_USAGE);
    let (code, _) = run_with_args(&["check", arg(&fx.k4), "--odd", "2"]);
    assert_eq!(code, EXIT_USAGE);
    // no spec source
    let (code, _) = run_with_args(&["check", arg(&fx.k4)]);
    assert_eq!(code, EXIT_USAGE);
    // two spec sources
    let (code, _) = run_with_args(&["check", arg(&fx.k4), "--even", "2", "--odd", "1"]);
    assert_eq!(code, EXIT_USAGE);
    // unknown named graph
    let (code, _) = run_with_args(&["gen", "named", "blorp"]);
    assert_eq!(code, EXIT_USAGE);
    // hub family needs even m
    let (code, _) = run_with_args(&["gen", "remark1", "--m", "3"]);
    assert_eq!(code, EXIT_USAGE);
    // verify with mismatched mode/m parity
    let (code, _) = run_with_args(&["verify", "--mode", "even", "--m", "3"]);
    assert_eq!(code, EXIT_USAGE);
}

#[test]
fn find_prints_sorted_verified_edges() {
    let fx = fixtures();
    let (code, out) = run_with_args(&["find", arg(&fx.k4), "--odd", "1"]);
    assert_eq!(code, EXIT_OK);
    let edges: Vec<&str> = out.lines().collect();
    let mut sorted = edges.clone();
    sorted.sort();
    assert_eq!(edges, sorted);

    let (code, out) = run_with_args(&["find", arg(&fx.petersen), "--even", "2"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out.lines().count(), 10);

    let (code, out) = run_with_args(&["find", arg(&fx.k1), "--odd", "1"]);
    assert_eq!(code, EXIT_NOT_EXISTS);
    assert!(out.contains("not exists"));
}

#[test]
fn check_and_find_agree_on_existence() {
    let fx = fixtures();
    for (path, mode, m) in [
        (&fx.petersen, "--even", "2"),
        (&fx.k4, "--odd", "1"),
        (&fx.k4, "--odd", "3"),
        (&fx.c5, "--odd", "1"),
        (&fx.hub_m2, "--even", "2"),
        (&fx.hub_m2, "--even", "4"),
        (&fx.disconnected, "--odd", "1"),
    ] {
        let (check_code, _) = run_with_args(&["check", arg(path), mode, m]);
        let (find_code, _) = run_with_args(&["find", arg(path), mode, m]);
        assert_eq!(check_code, find_code, "{path:?} {mode} {m}");
    }
}

#[test]
fn check_json_round_trips() {
    let fx = fixtures();
    let (code, out) = run_with_args(&["check", arg(&fx.hub_m2), "--even", "4", "--json"]);
    assert_eq!(code, EXIT_NOT_EXISTS);
    let payload: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(payload["exists"], serde_json::Value::Bool(false));
    let cert = &payload["certificate"];
    let t: Vec<usize> = cert["t"]
        .as_array()
        .unwrap()
        .iter()
        .map(|x| x.as_u64().unwrap() as usize)
        .collect();
    let value = cert["value"].as_i64().unwrap();
    // re-evaluating the printed certificate reproduces the printed value
    let graph = remark1_family(2).unwrap().graph;
    let t_set = VertexSet::from_indices(15, t.iter().copied());
    assert_eq!(theorem4_delta(&graph, &t_set, &[4; 15]), value);
    assert_eq!(cert["odd_components"].as_array().unwrap().len(), 3,);
}

#[test]
fn find_json_round_trips() {
    let fx = fixtures();
    let (code, out) = run_with_args(&["find", arg(&fx.petersen), "--even", "2", "--json"]);
    assert_eq!(code, EXIT_OK);
    let payload: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(payload["exists"], serde_json::Value::Bool(true));
    let edges: Vec<(usize, usize)> = payload["edges"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| {
            (
                e[0].as_u64().unwrap() as usize,
                e[1].as_u64().unwrap() as usize,
            )
        })
        .collect();
    let degrees: Vec<usize> = payload["degrees"]
        .as_array()
        .unwrap()
        .iter()
        .map(|d| d.as_u64().unwrap() as usize)
        .collect();
    let petersen = named_graph(NamedGraph::Petersen).unwrap();
    assert!(verify_factor(&petersen, &edges, &DegreeSpec::uniform(10, 2, 2)).is_ok());
    assert_eq!(degrees, vec![2; 10]);
}

#[test]
fn lambda_outputs() {
    let fx = fixtures();
    let (code, out) = run_with_args(&["lambda", arg(&fx.petersen)]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("lambda: 3"));

    let (_, out) = run_with_args(&["lambda", arg(&fx.p3)]);
    assert!(out.contains("lambda: 1"));

    let (code, out) = run_with_args(&["lambda", arg(&fx.disconnected), "--json"]);
    assert_eq!(code, EXIT_OK);
    let payload: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(payload["lambda"], 0);
    // the shore is one side of a worst cut: re-counting reproduces lambda
    let shore: Vec<usize> = payload["shore"]
        .as_array()
        .unwrap()
        .iter()
        .map(|x| x.as_u64().unwrap() as usize)
        .collect();
    let graph = Graph::new(4, &[(0, 1), (2, 3)]).unwrap();
    let side = VertexSet::from_indices(4, shore);
    assert_eq!(graph.edges_between(&side, &side.complement()), 0);

    let (code, _) = run_with_args(&["lambda", arg(&fx.k1)]);
    assert_eq!(code, EXIT_IO_OR_CAP);
}

#[test]
fn deficiency_outputs() {
    let fx = fixtures();
    let (code, out) = run_with_args(&["deficiency", arg(&fx.k1), "--g-const", "1"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("max delta: 1"));
    assert!(out.contains("T: (empty)"));

    let (code, out) = run_with_args(&["deficiency", arg(&fx.hub_m2), "--g-const", "4"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("max delta: 12"));

    // explicit (g,f) file drives the pair enumeration
    let dir = tempfile::tempdir().unwrap();
    let spec_path = dir.path().join("k4.spec");
    let mut spec_text = String::new();
    for v in 0..4 {
        spec_text.push_str(&format!("{v} 1 1\n"));
    }
    std::fs::write(&spec_path, spec_text).unwrap();
    let (code, out) = run_with_args(&[
        "deficiency",
        arg(&fx.k4),
        "--gf-file",
        spec_path.to_str().unwrap(),
    ]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("max eta: 0"), "{out}");
    assert!(out.contains("S: (empty)"));
}

#[test]
fn spec_file_sources() {
    let fx = fixtures();
    let dir = tempfile::tempdir().unwrap();

    let g_path = dir.path().join("pet.g-spec");
    let mut text = String::from("# per-vertex minimums\n");
    for v in 0..10 {
        text.push_str(&format!("{v} 2\n"));
    }
    std::fs::write(&g_path, text).unwrap();
    let (code, _) = run_with_args(&[
        "check",
        arg(&fx.petersen),
        "--g-file",
        g_path.to_str().unwrap(),
    ]);
    assert_eq!(code, EXIT_OK);

    // missing vertex
    let partial = dir.path().join("partial.spec");
    std::fs::write(&partial, "0 2\n").unwrap();
    let (code, out) = run_with_args(&[
        "check",
        arg(&fx.petersen),
        "--g-file",
        partial.to_str().unwrap(),
    ]);
    assert_eq!(code, EXIT_IO_OR_CAP);
    assert!(out.contains("vertex 1 missing"), "{out}");

    // duplicate vertex
    let dup = dir.path().join("dup.spec");
    std::fs::write(&dup, "0 2\n0 2\n1 2\n2 2\n3 2\n").unwrap();
    let (code, out) = run_with_args(&["check", arg(&fx.k4), "--g-file", dup.to_str().unwrap()]);
    assert_eq!(code, EXIT_IO_OR_CAP);
    assert!(out.contains("listed twice"), "{out}");

    // invalid g > f in a gf file
    let bad = dir.path().join("bad.spec");
    std::fs::write(&bad, "0 3 1\n1 1 1\n2 1 1\n3 1 1\n").unwrap();
    let (code, out) = run_with_args(&["check", arg(&fx.k4), "--gf-file", bad.to_str().unwrap()]);
    assert_eq!(code, EXIT_IO_OR_CAP);
    assert!(out.contains("exceeds"), "{out}");
}

#[test]
fn gen_round_trips_through_check() {
    let dir = tempfile::tempdir().unwrap();
    let (code, text) = run_with_args(&["gen", "remark1", "--m", "2"]);
    assert_eq!(code, EXIT_OK);
    assert!(text.starts_with("# hub family m=2; hubs: 12 13 14"));
    let path = dir.path().join("gen.g");
    std::fs::write(&path, &text).unwrap();
    let (code, _) = run_with_args(&["check", path.to_str().unwrap(), "--even", "2"]);
    assert_eq!(code, EXIT_OK);

    let (code, a) = run_with_args(&["gen", "random", "--n", "8", "--k", "3", "--seed", "5"]);
    assert_eq!(code, EXIT_OK);
    let (_, b) = run_with_args(&["gen", "random", "--n", "8", "--k", "3", "--seed", "5"]);
    assert_eq!(a, b);
    let path = dir.path().join("rand.g");
    std::fs::write(&path, &a).unwrap();
    let (code, out) = run_with_args(&["lambda", path.to_str().unwrap()]);
    assert_eq!(code, EXIT_OK);
    let lambda: usize = out
        .lines()
        .next()
        .unwrap()
        .trim_start_matches("lambda: ")
        .parse()
        .unwrap();
    assert!(lambda >= 3);
}

#[test]
fn verify_campaigns() {
    // bundled tightness campaign confirms the bound is sharp
    let config = format!("{}/campaigns/tightness.conf", env!("CARGO_MANIFEST_DIR"));
    let (code, out) = run_with_args(&["verify", "--config", &config]);
    assert_eq!(code, EXIT_OK, "{out}");
    assert!(out.contains("delta_at_hubs=6"));
    assert!(out.contains("delta_at_hubs=10"));
    assert!(out.contains("result: clean"));

    // quick flag-driven campaigns
    let (code, out) = run_with_args(&[
        "verify",
        "--mode",
        "even",
        "--m",
        "2",
        "--instances",
        "5",
        "--n-min",
        "6",
        "--n-max",
        "9",
        "--seed",
        "11",
        "--t-samples",
        "20",
    ]);
    assert_eq!(code, EXIT_OK, "{out}");
    assert!(out.contains("defects=0"));

    let (code, out) = run_with_args(&[
        "verify",
        "--mode",
        "odd",
        "--m",
        "1",
        "--instances",
        "5",
        "--n-min",
        "6",
        "--n-max",
        "9",
        "--seed",
        "12",
        "--t-samples",
        "20",
        "--json",
    ]);
    assert_eq!(code, EXIT_OK);
    let payload: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(payload["defects"], 0);
    assert_eq!(payload["passes"], 5);
}

#[test]
fn selftest_passes() {
    let (code, out) = run_with_args(&["selftest"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("all clean"));
}

#[test]
fn only_specified_exit_codes_are_used() {
    let fx = fixtures();
    let invocations: Vec<Vec<&str>> = vec![
        vec!["check", arg(&fx.petersen), "--even", "2"],
        vec!["check", arg(&fx.hub_m2), "--even", "4"],
        vec!["check", arg(&fx.k4), "--even", "3"],
        vec!["check", "/no/such/file", "--even", "2"],
        vec!["find", arg(&fx.k1), "--odd", "1"],
        vec!["lambda", arg(&fx.k1)],
        vec!["gen", "named", "nope"],
        vec!["selftest"],
    ];
    for args in invocations {
        let (code, _) = run_with_args(&args);
        assert!(
            [EXIT_OK, EXIT_USAGE, EXIT_IO_OR_CAP, EXIT_NOT_EXISTS].contains(&code),
            "unexpected exit code {code} for {args:?}"
        );
    }
}

/// PFK_MAX_N reaches the enumeration caps; exercised through the real
/// binary so the environment stays test-local.
#[test]
fn max_n_env_var_caps_enumeration() {
    let binary = env!("CARGO_BIN_EXE_pfk");
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("c5.g");
    std::fs::write(&path, named_graph(NamedGraph::Cycle(5)).unwrap().to_text()).unwrap();

    let output = std::process::Command::new(binary)
        .args(["deficiency", path.to_str().unwrap(), "--g-const", "1"])
        .env("PFK_MAX_N", "4")
        .output()
        .unwrap();
    assert_eq!(output.status.code(), Some(EXIT_IO_OR_CAP));
    let stderr = String::from_utf8_lossy(&output.stderr);
    assert!(stderr.contains("capped"), "{stderr}");

    // flag overrides the environment
    let output = std::process::Command::new(binary)
        .args([
            "deficiency",
            path.to_str().unwrap(),
            "--g-const",
            "1",
            "--max-n",
            "10",
        ])
        .env("PFK_MAX_N", "4")
        .output()
        .unwrap();
    assert_eq!(output.status.code(), Some(EXIT_OK));

    // odd-order cycle has no all-odd factor; with the cap too small and no
    // individually deficient vertex the certificate search must fail loudly
    let output = std::process::Command::new(binary)
        .args(["check", path.to_str().unwrap(), "--odd", "1"])
        .env("PFK_MAX_N", "4")
        .output()
        .unwrap();
    assert_eq!(output.status.code(), Some(EXIT_IO_OR_CAP));
}
