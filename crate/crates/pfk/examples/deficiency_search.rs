//! Maximize the deficiency over subsets (and over disjoint pairs) and read
//! the witnessing sets.
//!
//! ```bash
//! cargo run --example deficiency_search
//! ```

use pfk::criteria::{eta, max_delta, max_eta, theorem4_delta, DegreeSpec, EnumerationCaps};
use pfk::generators::{named_graph, NamedGraph};
use pfk::graph::{Graph, VertexSet};

fn main() {
    let caps = EnumerationCaps::default();

    // delta(T) = g(T) - sum_{x in T} d(x) + tau(T); existence of a factor
    // with d_F >= g and matching parity means the maximum stays at zero
    let star = named_graph(NamedGraph::Star(3)).unwrap();
    let g = [1usize; 4];
    let center = VertexSet::from_indices(4, [0]);
    println!("star K_{{1,3}}, g = 1:");
    println!(
        "  delta({{center}}) = {}",
        theorem4_delta(&star, &center, &g)
    );
    let (max, witness) = max_delta(&star, &g, &caps).unwrap();
    println!("  max delta = {max} at T = {witness}");

    // a single vertex cannot host an odd-degree factor
    let k1 = Graph::new(1, &[]).unwrap();
    let (max, witness) = max_delta(&k1, &[1], &caps).unwrap();
    println!("K_1, g = 1: max delta = {max} at T = {witness}");

    // the two-set form: eta(S,T) = g(T) - sum_{x in T} d_{G-S}(x) - f(S) + tau(S,T)
    let k4 = named_graph(NamedGraph::Complete(4)).unwrap();
    let spec = DegreeSpec::uniform(4, 1, 1);
    let empty = VertexSet::new(4);
    println!("K_4, g = f = 1:");
    println!("  eta(empty, empty) = {}", eta(&k4, &empty, &empty, &spec));
    let (max, s, t) = max_eta(&k4, &spec, &caps).unwrap();
    println!("  max eta = {max} at S = {s}, T = {t} (zero: a perfect matching exists)");
}
