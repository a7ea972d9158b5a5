//! Construct parity factors through the matching reduction and verify them.
//!
//! ```bash
//! cargo run --example find_factor
//! ```

use pfk::criteria::DegreeSpec;
use pfk::factor::{build_gadget, cap_f, find_parity_factor, verify_factor};
use pfk::generators::{named_graph, NamedGraph};

fn main() {
    let petersen = named_graph(NamedGraph::Petersen).unwrap();

    // a 2-factor: every vertex gets degree exactly 2
    let spec = DegreeSpec::uniform(10, 2, 2);
    let gadget = build_gadget(&petersen, &spec).unwrap();
    println!(
        "gadget for the 2-factor: {} vertices, {} edges",
        gadget.host.vertex_count(),
        gadget.host.edge_count()
    );
    let factor = find_parity_factor(&petersen, &spec)
        .unwrap()
        .expect("bridgeless cubic");
    println!("2-factor of the Petersen graph ({} edges):", factor.len());
    for &(u, v) in factor.edges() {
        print!("({u},{v}) ");
    }
    println!();
    assert!(verify_factor(&petersen, factor.edges(), &spec).is_ok());

    // odd factor with minimum degree 1: f is capped at the degree with g's parity
    let spec = cap_f(&petersen, &[1; 10]).expect("degrees reach 1");
    println!("capped bounds for g = 1: f = {:?}", spec.f());
    let factor = find_parity_factor(&petersen, &spec)
        .unwrap()
        .expect("perfect matching exists");
    println!(
        "odd factor: {} edges, degrees {:?}",
        factor.len(),
        factor.degrees()
    );
}
