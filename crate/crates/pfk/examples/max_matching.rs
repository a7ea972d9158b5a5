//! General-graph maximum matching, cross-checked against exhaustive search.
//!
//! ```bash
//! cargo run --example max_matching
//! ```

use pfk::generators::{named_graph, NamedGraph};
use pfk::graph::Graph;
use pfk::matching::{brute_force_matching, has_perfect_matching, max_matching};

fn main() {
    // odd cycles force blossom handling
    let c9 = named_graph(NamedGraph::Cycle(9)).unwrap();
    let matching = max_matching(&c9);
    println!(
        "C_9: matched {} pairs (exhaustive says {})",
        matching.len(),
        brute_force_matching(&c9).unwrap()
    );

    let petersen = named_graph(NamedGraph::Petersen).unwrap();
    let matching = max_matching(&petersen);
    println!(
        "Petersen: perfect = {}, edges = {:?}",
        matching.is_perfect(),
        matching.edges()
    );

    // the classic trap: a 5-cycle with a chord and a pendant path
    let trap = Graph::new(
        8,
        &[
            (0, 1),
            (1, 2),
            (2, 3),
            (3, 4),
            (4, 0), // cycle
            (1, 3), // chord
            (2, 5),
            (5, 6),
            (6, 7), // pendant path
        ],
    )
    .unwrap();
    let matching = max_matching(&trap);
    println!(
        "blossom trap: {} pairs, perfect = {}",
        matching.len(),
        matching.is_perfect()
    );
    assert_eq!(matching.len(), brute_force_matching(&trap).unwrap());

    println!(
        "K_{{1,3}} has a perfect matching: {}",
        has_perfect_matching(&named_graph(NamedGraph::Star(3)).unwrap())
    );
}
