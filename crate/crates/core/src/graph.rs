//! Simple undirected graphs on at most 64 vertices.
//!
//! Every vertex keeps its neighborhood as a `u64` bitset, so edge queries are a
//! single mask test and neighborhood intersections are one `&`.

use std::collections::VecDeque;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// A set of vertices of a graph with at most 64 vertices.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(pub u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    /// All vertices `0..n`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= 64);
        if n == 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet(1u64 << v)
    }

    #[inline]
    pub fn contains(self, v: usize) -> bool {
        v < 64 && self.0 >> v & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        self.0 |= 1u64 << v;
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1u64 << v);
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// Smallest member, if any.
    #[inline]
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    /// Members `>= v`.
    pub fn at_least(self, v: usize) -> Self {
        if v >= 64 {
            VertexSet::EMPTY
        } else {
            VertexSet(self.0 & (u64::MAX << v))
        }
    }

    /// Ascending iteration over members.
    pub fn iter(self) -> VertexIter {
        VertexIter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.iter())
    }
}

pub struct VertexIter(u64);

impl Iterator for VertexIter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for VertexIter {}

/// A two-colouring of a graph. Vertices of edgeless components are on `side_a`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Bipartition {
    pub side_a: VertexSet,
    pub side_b: VertexSet,
}

/// An immutable simple undirected graph with vertices `0..n`, `n <= 64`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
    edges: usize,
}

impl Graph {
    /// Largest supported order.
    pub const MAX_ORDER: usize = 64;

    fn check_order(n: usize) -> Result<()> {
        if n > Self::MAX_ORDER {
            return Err(Error::OrderTooLarge { order: n, limit: Self::MAX_ORDER });
        }
        Ok(())
    }

    /// Builds a graph from an edge list. Duplicate pairs collapse to one edge.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        Self::check_order(n)?;
        let mut adj = vec![0u64; n];
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, order: n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        Ok(Self::from_adjacency_unchecked(n, adj))
    }

    /// Builds a graph from neighbourhood bitsets, validating symmetry and range.
    pub fn from_adjacency(adj: Vec<u64>) -> Result<Self> {
        let n = adj.len();
        Self::check_order(n)?;
        let full = VertexSet::full(n).0;
        for (v, &row) in adj.iter().enumerate() {
            if row & !full != 0 {
                let bad = (row & !full).trailing_zeros() as usize;
                return Err(Error::VertexOutOfRange { vertex: bad, order: n });
            }
            if row >> v & 1 == 1 {
                return Err(Error::SelfLoop(v));
            }
            for w in VertexSet(row).iter() {
                if adj[w] >> v & 1 == 0 {
                    return Err(Error::Domain(format!("asymmetric adjacency between {v} and {w}")));
                }
            }
        }
        Ok(Self::from_adjacency_unchecked(n, adj))
    }

    pub(crate) fn from_adjacency_unchecked(n: usize, adj: Vec<u64>) -> Self {
        let degree_sum: u32 = adj.iter().map(|r| r.count_ones()).sum();
        Graph { n, adj, edges: degree_sum as usize / 2 }
    }

    /// The edgeless graph `nK_1`.
    pub fn empty(n: usize) -> Result<Self> {
        Self::check_order(n)?;
        Ok(Graph { n, adj: vec![0; n], edges: 0 })
    }

    /// The complete graph `K_n`.
    pub fn complete(n: usize) -> Result<Self> {
        Self::check_order(n)?;
        let full = VertexSet::full(n).0;
        let adj = (0..n).map(|v| full & !(1 << v)).collect();
        Ok(Self::from_adjacency_unchecked(n, adj))
    }

    /// The complete bipartite graph `K_{a,b}`: parts `0..a` and `a..a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Result<Self> {
        Self::empty(a)?.join(&Self::empty(b)?)
    }

    /// The cycle `C_n` on `0, 1, ..., n-1`.
    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::Domain(format!("a cycle needs at least 3 vertices, got {n}")));
        }
        Self::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
    }

    /// The path `P_n` on `0, 1, ..., n-1`.
    pub fn path(n: usize) -> Result<Self> {
        Self::from_edges(n, (1..n).map(|i| (i - 1, i)))
    }

    /// `t` disjoint copies of `self`.
    pub fn copies(&self, t: usize) -> Result<Self> {
        let mut out = Graph::empty(0)?;
        for _ in 0..t {
            out = out.disjoint_union(self)?;
        }
        Ok(out)
    }

    /// Number of vertices.
    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    /// Number of edges.
    #[inline]
    pub fn size(&self) -> usize {
        self.edges
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] >> v & 1 == 1
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| VertexSet(self.adj[u]).at_least(u + 1).iter().map(move |v| (u, v)))
    }

    /// Degrees sorted in non-increasing order.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    /// `self ∨ other`: disjoint union plus every edge between the two sides.
    pub fn join(&self, other: &Graph) -> Result<Self> {
        let mut g = self.disjoint_union(other)?;
        let left = VertexSet::full(self.n).0;
        let right = VertexSet::full(g.n).0 & !left;
        for v in 0..self.n {
            g.adj[v] |= right;
        }
        for v in self.n..g.n {
            g.adj[v] |= left;
        }
        g.edges += self.n * other.n;
        Ok(g)
    }

    /// `self ∪ other`; vertices of `other` are shifted by `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Self> {
        let n = self.n + other.n;
        Self::check_order(n)?;
        let mut adj = self.adj.clone();
        adj.extend(other.adj.iter().map(|&r| r << self.n));
        Ok(Graph { n, adj, edges: self.edges + other.edges })
    }

    /// The induced subgraph on `keep`, reindexed to `0..|keep|` in ascending order.
    pub fn induced(&self, keep: VertexSet) -> Graph {
        let keep = keep.intersection(self.vertices());
        let order: Vec<usize> = keep.to_vec();
        let adj = order.iter().map(|&v| compress(self.adj[v] & keep.0, keep.0)).collect();
        Self::from_adjacency_unchecked(order.len(), adj)
    }

    /// `G - S`, keeping the remaining vertices in their original relative order.
    pub fn delete_vertices(&self, s: &[usize]) -> Result<Self> {
        let mut gone = VertexSet::EMPTY;
        for &v in s {
            if v >= self.n {
                return Err(Error::VertexOutOfRange { vertex: v, order: self.n });
            }
            gone.insert(v);
        }
        Ok(self.induced(self.vertices().difference(gone)))
    }

    /// A copy with the edge `uv` added.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Self> {
        if u >= self.n || v >= self.n {
            return Err(Error::VertexOutOfRange { vertex: u.max(v), order: self.n });
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        let mut adj = self.adj.clone();
        adj[u] |= 1 << v;
        adj[v] |= 1 << u;
        Ok(Self::from_adjacency_unchecked(self.n, adj))
    }

    /// A copy with the edge `uv` removed (no-op if absent).
    pub fn without_edge(&self, u: usize, v: usize) -> Result<Self> {
        if u >= self.n || v >= self.n {
            return Err(Error::VertexOutOfRange { vertex: u.max(v), order: self.n });
        }
        let mut adj = self.adj.clone();
        adj[u] &= !(1 << v);
        adj[v] &= !(1 << u);
        Ok(Self::from_adjacency_unchecked(self.n, adj))
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Result<Self> {
        if perm.len() != self.n || perm.iter().copied().collect::<VertexSet>() != self.vertices() {
            return Err(Error::Domain("permutation does not match graph order".into()));
        }
        let mut adj = vec![0u64; self.n];
        for (u, v) in self.edges() {
            adj[perm[u]] |= 1 << perm[v];
            adj[perm[v]] |= 1 << perm[u];
        }
        Ok(Graph { n: self.n, adj, edges: self.edges })
    }

    /// Vertices reachable from `start` using only vertices of `within`.
    pub fn reach(&self, start: usize, within: VertexSet) -> VertexSet {
        let mut seen = 1u64 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0u64;
            for v in VertexSet(frontier).iter() {
                next |= self.adj[v];
            }
            next &= within.0 & !seen;
            seen |= next;
            frontier = next;
        }
        VertexSet(seen)
    }

    /// Vertex sets of the connected components, ordered by minimum vertex.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut left = self.vertices();
        let mut out = Vec::new();
        while let Some(v) = left.first() {
            let c = self.reach(v, left);
            left = left.difference(c);
            out.push(c);
        }
        out
    }

    /// True iff the graph has exactly one component (the order-0 graph counts as connected).
    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.reach(0, self.vertices()) == self.vertices()
    }

    /// A proper 2-colouring, or `None` when an odd cycle exists.
    ///
    /// BFS from the minimum vertex of each component; that vertex goes to `side_a`.
    pub fn is_bipartite(&self) -> Option<Bipartition> {
        let mut colour = vec![u8::MAX; self.n];
        let mut queue = VecDeque::new();
        for root in 0..self.n {
            if colour[root] != u8::MAX {
                continue;
            }
            colour[root] = 0;
            queue.push_back(root);
            while let Some(v) = queue.pop_front() {
                for w in self.neighbors(v).iter() {
                    if colour[w] == u8::MAX {
                        colour[w] = colour[v] ^ 1;
                        queue.push_back(w);
                    } else if colour[w] == colour[v] {
                        return None;
                    }
                }
            }
        }
        let side_a: VertexSet = (0..self.n).filter(|&v| colour[v] == 0).collect();
        Some(Bipartition { side_a, side_b: self.vertices().difference(side_a) })
    }

    /// True iff the graph has no cycle.
    pub fn is_forest(&self) -> bool {
        self.edges + self.components().len() == self.n
    }

    /// Connected and acyclic.
    pub fn is_tree(&self) -> bool {
        self.n >= 1 && self.is_connected() && self.edges + 1 == self.n
    }
}

/// Packs the bits of `row` selected by `mask` into the low bits.
fn compress(row: u64, mask: u64) -> u64 {
    let mut out = 0u64;
    for (i, v) in VertexSet(mask).iter().enumerate() {
        if row >> v & 1 == 1 {
            out |= 1 << i;
        }
    }
    out
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n)?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        write!(f, "])")
    }
}
