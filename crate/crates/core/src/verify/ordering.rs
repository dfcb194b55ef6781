//! Degeneracy and back-degree orderings.

use crate::graph::Graph;

/// Repeatedly removes a minimum-degree vertex, smallest index first.
/// Returns the removal order and the degree of each vertex at removal.
fn peel(g: &Graph) -> (Vec<usize>, Vec<usize>) {
    let mut alive = g.vertices();
    let mut order = Vec::with_capacity(g.order());
    let mut degrees = Vec::with_capacity(g.order());
    while let Some(first) = alive.first() {
        let deg = |v: usize| g.neighbors(v).intersection(alive).len();
        let mut best = (deg(first), first);
        for v in alive.iter().skip(1) {
            let d = deg(v);
            if d < best.0 {
                best = (d, v);
            }
        }
        alive.remove(best.1);
        order.push(best.1);
        degrees.push(best.0);
    }
    (order, degrees)
}

/// Largest `d` such that some subgraph has minimum degree `d`.
pub fn degeneracy(g: &Graph) -> usize {
    peel(g).1.into_iter().max().unwrap_or(0)
}

/// An ordering `v_1, ..., v_n` in which every vertex has at most `k` neighbours
/// among its predecessors, or `None` when `g` is not `k`-degenerate.
pub fn back_degree_ordering(g: &Graph, k: usize) -> Option<Vec<usize>> {
    let (mut order, degrees) = peel(g);
    if degrees.iter().any(|&d| d > k) {
        return None;
    }
    order.reverse();
    Some(order)
}
