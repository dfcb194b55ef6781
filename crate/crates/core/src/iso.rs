//! Isomorphism testing and canonical labelling for small graphs.
//!
//! Both routines start from colour refinement (1-dimensional Weisfeiler-Leman)
//! and then backtrack. Neither prunes with automorphisms, so the cost on highly
//! symmetric inputs grows factorially; callers are held to [`ISO_GUARD`].

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Largest order accepted by [`isomorphic`] and [`canonical_form`].
pub const ISO_GUARD: usize = 16;

fn guard(g: &Graph) -> Result<()> {
    if g.order() > ISO_GUARD {
        return Err(Error::OrderTooLarge { order: g.order(), limit: ISO_GUARD });
    }
    Ok(())
}

/// Refines `colours` to the coarsest stable colouring below it.
///
/// New colours are ranks of `(old colour, sorted neighbour colours)`, so the
/// result depends only on the isomorphism type of the coloured graph.
pub(crate) fn refine(g: &Graph, colours: &mut [u32]) {
    let n = g.order();
    let mut classes = count_classes(colours);
    loop {
        let sigs: Vec<(u32, Vec<u32>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<u32> = g.neighbors(v).iter().map(|w| colours[w]).collect();
                nb.sort_unstable();
                (colours[v], nb)
            })
            .collect();
        let mut ranks: BTreeMap<&(u32, Vec<u32>), u32> = sigs.iter().map(|s| (s, 0)).collect();
        for (i, r) in ranks.values_mut().enumerate() {
            *r = i as u32;
        }
        for v in 0..n {
            colours[v] = ranks[&sigs[v]];
        }
        let now = ranks.len();
        if now == classes {
            return;
        }
        classes = now;
    }
}

fn count_classes(colours: &[u32]) -> usize {
    let mut c: Vec<u32> = colours.to_vec();
    c.sort_unstable();
    c.dedup();
    c.len()
}

/// Upper-triangle adjacency bits of `g` relabelled by `pos` (vertex -> position).
fn code_under(g: &Graph, pos: &[usize]) -> u128 {
    let n = g.order();
    let mut at = vec![0usize; n];
    for (v, &p) in pos.iter().enumerate() {
        at[p] = v;
    }
    let mut code = 0u128;
    for j in 1..n {
        for i in 0..j {
            code = code << 1 | g.has_edge(at[i], at[j]) as u128;
        }
    }
    code
}

/// A canonical form: the adjacency code and the relabelling achieving it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Canonical {
    pub code: u128,
    /// `labelling[v]` is the canonical position of vertex `v`.
    pub labelling: Vec<usize>,
}

/// Canonical labelling by individualisation-refinement: the maximum adjacency
/// code over all leaves of the search tree. Two graphs of equal order are
/// isomorphic iff their codes are equal.
pub fn canonical(g: &Graph) -> Result<Canonical> {
    guard(g)?;
    let mut best: Option<Canonical> = None;
    canon_search(g, vec![0; g.order()], &mut best);
    Ok(best.unwrap_or(Canonical { code: 0, labelling: Vec::new() }))
}

fn canon_search(g: &Graph, mut colours: Vec<u32>, best: &mut Option<Canonical>) {
    refine(g, &mut colours);
    let n = g.order();
    let mut sizes: BTreeMap<u32, usize> = BTreeMap::new();
    for &c in &colours {
        *sizes.entry(c).or_default() += 1;
    }
    let Some((&target, _)) = sizes.iter().find(|(_, &s)| s > 1) else {
        let pos: Vec<usize> = colours.iter().map(|&c| c as usize).collect();
        let code = code_under(g, &pos);
        if best.as_ref().is_none_or(|b| code > b.code) {
            *best = Some(Canonical { code, labelling: pos });
        }
        return;
    };
    for v in (0..n).filter(|&v| colours[v] == target) {
        let next = (0..n)
            .map(|w| {
                let base = 2 * colours[w];
                if colours[w] == target && w != v {
                    base + 1
                } else {
                    base
                }
            })
            .collect();
        canon_search(g, next, best);
    }
}

/// The canonically relabelled copy of `g`.
pub fn canonical_form(g: &Graph) -> Result<Graph> {
    let c = canonical(g)?;
    g.permuted(&c.labelling)
}

/// Exact isomorphism test for graphs of order at most [`ISO_GUARD`].
pub fn isomorphic(g: &Graph, h: &Graph) -> Result<bool> {
    Ok(find_isomorphism(g, h)?.is_some())
}

/// An isomorphism `g -> h` as a vertex map, if one exists.
pub fn find_isomorphism(g: &Graph, h: &Graph) -> Result<Option<Vec<usize>>> {
    guard(g)?;
    guard(h)?;
    let n = g.order();
    if n != h.order() || g.size() != h.size() || g.degree_sequence() != h.degree_sequence() {
        return Ok(None);
    }
    if n == 0 {
        return Ok(Some(Vec::new()));
    }

    // Refine the disjoint union so colours are comparable across the two graphs.
    let both = g.disjoint_union(h)?;
    let mut colours = vec![0u32; 2 * n];
    refine(&both, &mut colours);
    let (cg, ch) = colours.split_at(n);
    let mut hist_g = cg.to_vec();
    let mut hist_h = ch.to_vec();
    hist_g.sort_unstable();
    hist_h.sort_unstable();
    if hist_g != hist_h {
        return Ok(None);
    }

    let class_size = |c: u32| cg.iter().filter(|&&x| x == c).count();
    // Map vertices with many already-placed neighbours first; break ties by rarest colour.
    let mut order = Vec::with_capacity(n);
    let mut placed = VertexSet::EMPTY;
    while order.len() < n {
        let v = (0..n)
            .filter(|&v| !placed.contains(v))
            .min_by_key(|&v| (std::cmp::Reverse(g.neighbors(v).intersection(placed).len()), class_size(cg[v]), v))
            .expect("unplaced vertex exists");
        order.push(v);
        placed.insert(v);
    }

    let mut map = vec![usize::MAX; n];
    let mut used = VertexSet::EMPTY;
    if extend_map(g, h, cg, ch, &order, 0, &mut map, &mut used) {
        Ok(Some(map))
    } else {
        Ok(None)
    }
}

#[allow(clippy::too_many_arguments)]
fn extend_map(
    g: &Graph,
    h: &Graph,
    cg: &[u32],
    ch: &[u32],
    order: &[usize],
    depth: usize,
    map: &mut [usize],
    used: &mut VertexSet,
) -> bool {
    let Some(&v) = order.get(depth) else {
        return true;
    };
    let mapped = &order[..depth];
    let want: VertexSet = mapped.iter().filter(|&&x| g.has_edge(v, x)).map(|&x| map[x]).collect();
    let image: VertexSet = mapped.iter().map(|&x| map[x]).collect();
    for w in h.vertices().difference(*used).iter() {
        if ch[w] != cg[v] || h.neighbors(w).intersection(image) != want {
            continue;
        }
        map[v] = w;
        used.insert(w);
        if extend_map(g, h, cg, ch, order, depth + 1, map, used) {
            return true;
        }
        used.remove(w);
    }
    map[v] = usize::MAX;
    false
}
