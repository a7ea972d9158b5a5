//! Build graphs, query degrees, boundaries and components.
//!
//! ```bash
//! cargo run --example inspect_graph
//! ```

use pfk::graph::{Graph, VertexSet};

fn main() {
    // the shared text format: `n m` header, then one `u v` line per edge
    let text = "\
# two triangles joined by a single edge
6 7
0 1
1 2
2 0
3 4
4 5
5 3
0 3
";
    let graph = Graph::from_text(text).expect("well-formed text");
    println!("n = {}, |E| = {}", graph.vertex_count(), graph.edge_count());
    for v in graph.vertices() {
        print!("d({v}) = {}  ", graph.degree(v));
    }
    println!();

    let left = VertexSet::from_indices(6, [0, 1, 2]);
    let right = left.complement();
    println!(
        "edges between the triangles: {}",
        graph.edges_between(&left, &right)
    );

    // deleting the joining vertices splits the graph
    let removed = VertexSet::from_indices(6, [0, 3]);
    for comp in graph.components_after_removal(&removed) {
        println!("component after removing {{0, 3}}: {:?}", comp.vertices());
    }

    // parallel edges count with multiplicity
    let multi = Graph::new(3, &[(0, 1), (0, 1), (1, 2)]).unwrap();
    println!(
        "multigraph degrees: d(0)={} d(1)={} d(2)={}",
        multi.degree(0),
        multi.degree(1),
        multi.degree(2)
    );
}
