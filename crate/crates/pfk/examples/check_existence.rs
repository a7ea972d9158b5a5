//! Decide even/odd factor existence and inspect the certificate when the
//! answer is no.
//!
//! ```bash
//! cargo run --example check_existence
//! ```

use pfk::criteria::{corollary_mode, EnumerationCaps, FactorMode};
use pfk::generators::{named_graph, NamedGraph};

fn main() {
    let caps = EnumerationCaps::default();

    for (label, graph, m, mode) in [
        (
            "Petersen, even factor with min degree 2",
            named_graph(NamedGraph::Petersen).unwrap(),
            2,
            FactorMode::Even,
        ),
        (
            "K_4, odd factor with min degree 1",
            named_graph(NamedGraph::Complete(4)).unwrap(),
            1,
            FactorMode::Odd,
        ),
        (
            "C_5, odd factor with min degree 1",
            named_graph(NamedGraph::Cycle(5)).unwrap(),
            1,
            FactorMode::Odd,
        ),
        (
            "star K_{1,3}, odd factor with min degree 1",
            named_graph(NamedGraph::Star(3)).unwrap(),
            1,
            FactorMode::Odd,
        ),
    ] {
        let verdict = corollary_mode(&graph, m, mode, &caps).unwrap();
        print!("{label}: ");
        match verdict.certificate {
            None => println!("exists"),
            Some(cert) => {
                // the certificate is the subset T maximizing
                // g(T) - sum of degrees over T + (odd component count)
                println!(
                    "does not exist; deficiency {} at T = {}",
                    cert.value, cert.t
                );
                for comp in &cert.odd_components {
                    println!(
                        "    odd component {:?} with {} edges to T",
                        comp.vertices, comp.edges_to_t
                    );
                }
            }
        }
    }
}
