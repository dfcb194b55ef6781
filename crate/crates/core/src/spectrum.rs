//! Exact cycle-length spectra, admissible progressions, and consecutive even lengths.
//!
//! Lengths are searched one at a time. Every cycle lives inside a single block,
//! so each search is confined to blocks large enough to hold it, and anchored at
//! the cycle's minimum vertex. The backtracking prunes a branch when the vertices
//! still reachable from the path end cannot supply the missing length or cannot
//! close back to the anchor, and it memoises dead `(visited, end)` states.

use std::collections::{BTreeMap, HashSet};

use serde::Serialize;

use crate::blocks::block_decomposition;
use crate::error::{domain, Result};
use crate::graph::{Graph, VertexSet};

/// Dead-state memo entries kept per search before it stops growing.
const MEMO_LIMIT: usize = 1 << 22;

/// The set of cycle lengths of a graph, with one witness cycle per length.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CycleSpectrum {
    pub order: usize,
    pub lengths: Vec<usize>,
    pub witnesses: BTreeMap<usize, Vec<usize>>,
}

impl CycleSpectrum {
    pub fn contains(&self, len: usize) -> bool {
        self.witnesses.contains_key(&len)
    }

    pub fn girth(&self) -> Option<usize> {
        self.lengths.first().copied()
    }

    /// Length of a longest cycle.
    pub fn circumference(&self) -> Option<usize> {
        self.lengths.last().copied()
    }

    pub fn is_empty(&self) -> bool {
        self.lengths.is_empty()
    }

    /// True iff every length in `lo..=hi` is present.
    pub fn contains_range(&self, lo: usize, hi: usize) -> bool {
        (lo..=hi).all(|l| self.contains(l))
    }

    pub fn even_lengths(&self) -> impl Iterator<Item = usize> + '_ {
        self.lengths.iter().copied().filter(|l| l % 2 == 0)
    }
}

/// `count` lengths in arithmetic progression with common difference 1 or 2.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AdmissibleWitness {
    pub start: usize,
    pub difference: usize,
    pub count: usize,
    pub witness_lengths: Vec<usize>,
}

/// True iff `cycle` is a cycle of `g`: at least 3 distinct vertices, consecutive
/// ones adjacent, last adjacent to first.
pub fn is_cycle(g: &Graph, cycle: &[usize]) -> bool {
    if cycle.len() < 3 || cycle.iter().any(|&v| v >= g.order()) {
        return false;
    }
    let distinct: VertexSet = cycle.iter().copied().collect();
    distinct.len() == cycle.len() && (0..cycle.len()).all(|i| g.has_edge(cycle[i], cycle[(i + 1) % cycle.len()]))
}

/// A region of the graph that can hold cycles: a block's vertex set plus facts
/// that bound its cycle lengths.
#[derive(Debug, Clone, Copy)]
struct Region {
    vertices: VertexSet,
    /// Longest cycle length the region could hold.
    max_len: usize,
    bipartite: bool,
}

fn cyclic_regions(g: &Graph) -> Vec<Region> {
    block_decomposition(g)
        .blocks
        .into_iter()
        .filter(|b| b.graph.order() >= 3)
        .map(|b| {
            let sides = b.graph.is_bipartite();
            let max_len = match sides {
                Some(p) => 2 * p.side_a.len().min(p.side_b.len()),
                None => b.graph.order(),
            };
            Region { vertices: b.vertices, max_len, bipartite: sides.is_some() }
        })
        .collect()
}

impl Region {
    fn admits(&self, len: usize) -> bool {
        len <= self.max_len && !(self.bipartite && len % 2 == 1)
    }
}

struct Search<'a> {
    g: &'a Graph,
    target: usize,
    anchor: usize,
    allowed: VertexSet,
    path: Vec<usize>,
    visited: VertexSet,
    dead: HashSet<(u64, u8)>,
}

impl Search<'_> {
    fn extend(&mut self, end: usize) -> bool {
        let depth = self.path.len();
        if depth == self.target {
            return self.g.has_edge(end, self.anchor);
        }
        let key = (self.visited.0, end as u8);
        if self.dead.contains(&key) {
            return false;
        }
        let open = self.allowed.difference(self.visited);
        let reach = self.g.reach(end, open).difference(VertexSet::singleton(end));
        let need = self.target - depth;
        if reach.len() < need || reach.intersection(self.g.neighbors(self.anchor)).is_empty() {
            self.remember(key);
            return false;
        }
        for next in self.g.neighbors(end).intersection(open).iter() {
            self.path.push(next);
            self.visited.insert(next);
            if self.extend(next) {
                return true;
            }
            self.visited.remove(next);
            self.path.pop();
        }
        self.remember(key);
        false
    }

    fn remember(&mut self, key: (u64, u8)) {
        if self.dead.len() < MEMO_LIMIT {
            self.dead.insert(key);
        }
    }
}

/// Lexicographically least cycle of length `len` whose minimum vertex is `anchor`,
/// using only vertices of `region`.
fn anchored_cycle(g: &Graph, region: VertexSet, anchor: usize, len: usize) -> Option<Vec<usize>> {
    let allowed = region.at_least(anchor);
    if allowed.len() < len {
        return None;
    }
    let mut s = Search {
        g,
        target: len,
        anchor,
        allowed,
        path: vec![anchor],
        visited: VertexSet::singleton(anchor),
        dead: HashSet::new(),
    };
    s.extend(anchor).then_some(s.path)
}

fn search_length(g: &Graph, regions: &[Region], len: usize) -> Option<Vec<usize>> {
    let usable: Vec<&Region> = regions.iter().filter(|r| r.admits(len)).collect();
    for anchor in 0..g.order() {
        // Blocks through one anchor share only that vertex, so compare their best candidates.
        let best = usable
            .iter()
            .filter(|r| r.vertices.contains(anchor))
            .filter_map(|r| anchored_cycle(g, r.vertices, anchor, len))
            .min();
        if best.is_some() {
            return best;
        }
    }
    None
}

/// A cycle with exactly `len` vertices, if one exists.
pub fn has_cycle_of_length(g: &Graph, len: usize) -> Result<Option<Vec<usize>>> {
    if len < 3 || len > g.order() {
        return domain(format!("cycle length {len} outside 3..={}", g.order()));
    }
    Ok(search_length(g, &cyclic_regions(g), len))
}

/// All cycle lengths of `g` with witnesses.
pub fn cycle_spectrum(g: &Graph) -> CycleSpectrum {
    let regions = cyclic_regions(g);
    let longest = regions.iter().map(|r| r.max_len).max().unwrap_or(0);
    let mut witnesses = BTreeMap::new();
    for len in 3..=longest {
        if let Some(c) = search_length(g, &regions, len) {
            witnesses.insert(len, c);
        }
    }
    CycleSpectrum { order: g.order(), lengths: witnesses.keys().copied().collect(), witnesses }
}

/// The least `(start, difference)` progression of `k` lengths with difference 1 or 2
/// inside the spectrum. For `k = 1` the least length is returned with difference 1.
pub fn find_admissible(spec: &CycleSpectrum, k: usize) -> Result<Option<AdmissibleWitness>> {
    if k < 1 {
        return domain("progression length k must be at least 1");
    }
    for &start in &spec.lengths {
        for difference in [1, 2] {
            let witness_lengths: Vec<usize> = (0..k).map(|i| start + i * difference).collect();
            if witness_lengths.iter().all(|&l| spec.contains(l)) {
                return Ok(Some(AdmissibleWitness { start, difference, count: k, witness_lengths }));
            }
            if k == 1 {
                break;
            }
        }
    }
    Ok(None)
}

/// Number of distinct `(start, difference)` progressions of `k` lengths.
pub fn count_admissible(spec: &CycleSpectrum, k: usize) -> usize {
    let mut count = 0;
    for &start in &spec.lengths {
        for difference in [1, 2] {
            if (0..k).all(|i| spec.contains(start + i * difference)) {
                count += 1;
            }
            if k <= 1 {
                break;
            }
        }
    }
    count
}

/// Least even `m >= 4` with `m, m+2, ..., m+2(k-1)` all in the spectrum.
pub fn find_consecutive_even(spec: &CycleSpectrum, k: usize) -> Result<Option<usize>> {
    if k < 1 {
        return domain("run length k must be at least 1");
    }
    Ok(consecutive_even_starts(spec, k).next())
}

/// All even starts of runs of `k` consecutive even lengths, ascending.
pub fn consecutive_even_starts(spec: &CycleSpectrum, k: usize) -> impl Iterator<Item = usize> + '_ {
    spec.even_lengths().filter(move |&m| m >= 4 && (0..k).all(|i| spec.contains(m + 2 * i)))
}
