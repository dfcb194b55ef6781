//! Exhaustive generation of graphs up to isomorphism for small orders.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::iso::canonical;

/// Largest order served by [`enumerate_graphs`].
pub const ENUMERATION_LIMIT: usize = 7;

/// One canonical representative per isomorphism class of graphs on `n` vertices,
/// ordered by edge count and then canonical code.
///
/// Classes on `n` vertices are grown from the classes on `n - 1` by adding a
/// vertex with every possible neighbourhood and deduplicating canonical forms.
pub fn enumerate_graphs(n: usize, connected_only: bool) -> Result<Vec<Graph>> {
    if n > ENUMERATION_LIMIT {
        return Err(Error::OrderTooLarge { order: n, limit: ENUMERATION_LIMIT });
    }
    let mut level = vec![Graph::empty(0)?];
    for m in 1..=n {
        let mut classes: BTreeMap<(usize, u128), Graph> = BTreeMap::new();
        for g in &level {
            let base = g.disjoint_union(&Graph::empty(1)?)?;
            for nbrs in 0u64..(1 << (m - 1)) {
                let h = crate::graph::VertexSet(nbrs).iter().try_fold(base.clone(), |acc, w| acc.with_edge(m - 1, w))?;
                let c = canonical(&h)?;
                classes.entry((h.size(), c.code)).or_insert_with(|| h.permuted(&c.labelling).expect("valid labelling"));
            }
        }
        level = classes.into_values().collect();
    }
    if connected_only {
        level.retain(Graph::is_connected);
    }
    Ok(level)
}
