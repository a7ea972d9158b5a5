//! Edge connectivity with cut certificates, bridges, and seeded generation
//! of k-edge-connected instances.
//!
//! ```bash
//! cargo run --example edge_connectivity
//! ```

use pfk::connectivity::{edge_connectivity, has_bridge, is_k_edge_connected};
use pfk::generators::{named_graph, random_k_edge_connected, NamedGraph};
use pfk::graph::Graph;

fn main() {
    let petersen = named_graph(NamedGraph::Petersen).unwrap();
    let (lambda, cert) = edge_connectivity(&petersen).unwrap();
    println!(
        "Petersen: lambda = {lambda}, one shore of a minimum cut: {}",
        cert.side
    );

    let two_triangles =
        Graph::new(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3)]).unwrap();
    let (lambda, cert) = edge_connectivity(&two_triangles).unwrap();
    println!(
        "two triangles + bridge: lambda = {lambda}, shore {}",
        cert.side
    );
    println!("  has_bridge = {}", has_bridge(&two_triangles));

    // seeded generation: same seed, same graph, verified connectivity
    for seed in [1u64, 2, 3] {
        let graph = random_k_edge_connected(10, 4, seed).unwrap();
        let (lambda, _) = edge_connectivity(&graph).unwrap();
        assert!(is_k_edge_connected(&graph, 4).unwrap());
        println!(
            "random n=10 k=4 seed={seed}: |E| = {}, lambda = {lambda}",
            graph.edge_count()
        );
    }
}
