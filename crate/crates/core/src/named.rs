//! A few named graphs used throughout tests and examples.

use crate::graph::Graph;

/// The Petersen graph: outer 5-cycle `0..5`, inner pentagram `5..10`, spokes `i -- i+5`.
pub fn petersen() -> Graph {
    let mut edges = Vec::with_capacity(15);
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
        edges.push((i, i + 5));
    }
    Graph::from_edges(10, edges).expect("static edge list")
}

/// The pentagonal prism `C_5 x K_2`, a 3-regular graph on 10 vertices.
pub fn pentagonal_prism() -> Graph {
    let mut edges = Vec::with_capacity(15);
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((5 + i, 5 + (i + 1) % 5));
        edges.push((i, i + 5));
    }
    Graph::from_edges(10, edges).expect("static edge list")
}

/// Two triangles sharing vertex 0.
pub fn bowtie() -> Graph {
    Graph::from_edges(5, [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)]).expect("static edge list")
}

/// Three triangles in a row: `{0,1,2}`, `{2,3,4}`, `{4,5,6}`.
pub fn triangle_chain() -> Graph {
    Graph::from_edges(7, [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4), (4, 5), (4, 6), (5, 6)])
        .expect("static edge list")
}
