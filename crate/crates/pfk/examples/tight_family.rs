//! The hub family shows the even-factor bound is sharp: the graph is
//! (m+1)-edge-connected with minimum degree m+1, carries an even factor
//! with minimum degree m, and none with minimum degree m+2.
//!
//! ```bash
//! cargo run --example tight_family
//! ```

use pfk::connectivity::edge_connectivity;
use pfk::criteria::theorem4_delta;
use pfk::factor::{cap_f, find_parity_factor};
use pfk::generators::remark1_family;

fn main() {
    for m in [2usize, 4] {
        let inst = remark1_family(m).unwrap();
        let graph = &inst.graph;
        let n = graph.vertex_count();
        let (lambda, _) = edge_connectivity(graph).unwrap();
        println!(
            "m = {m}: {} copies of K_{{{}}} plus {} hubs -> n = {n}, |E| = {}",
            m + 1,
            2 * m,
            m + 1,
            graph.edge_count()
        );
        println!("  lambda = {lambda}, min degree = {}", graph.min_degree());

        // the hub set witnesses non-existence at minimum degree m+2:
        // delta(hubs) = (m+2)(m+1) - (m+1)^2 + (m+1) = 2(m+1) > 0
        let hubs_delta = theorem4_delta(graph, &inst.hubs, &vec![m + 2; n]);
        println!("  delta at the hub set for g = {} is {hubs_delta}", m + 2);

        let above = cap_f(graph, &vec![m + 2; n])
            .and_then(|spec| find_parity_factor(graph, &spec).unwrap());
        println!(
            "  even factor with min degree {}: {}",
            m + 2,
            above.is_some()
        );

        let at_bound = cap_f(graph, &vec![m; n])
            .and_then(|spec| find_parity_factor(graph, &spec).unwrap())
            .expect("the bound itself is attainable");
        println!(
            "  even factor with min degree {m}: true ({} edges, degrees {}..={})",
            at_bound.len(),
            at_bound.degrees().iter().min().unwrap(),
            at_bound.degrees().iter().max().unwrap()
        );
    }
}
