//! Cut vertices, blocks, the block-cut forest, and the block leaf transformation.

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// A maximal 2-connected subgraph or a bridge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Block {
    pub vertices: VertexSet,
    /// Induced subgraph on `vertices`, reindexed in ascending vertex order.
    pub graph: Graph,
}

/// Blocks of a graph and their incidences with cut vertices.
///
/// Isolated vertices belong to no block. For a disconnected graph the
/// incidences form a forest with one tree per non-trivial component.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockDecomposition {
    pub cut_vertices: VertexSet,
    /// Ordered by minimum vertex, then size, then vertex set.
    pub blocks: Vec<Block>,
    /// `(block index, cut vertex)` incidences.
    pub tree_edges: Vec<(usize, usize)>,
}

impl BlockDecomposition {
    /// Number of cut vertices contained in block `i`.
    pub fn cut_count(&self, i: usize) -> usize {
        self.blocks[i].vertices.intersection(self.cut_vertices).len()
    }
}

struct Lowpoint<'a> {
    g: &'a Graph,
    disc: Vec<usize>,
    low: Vec<usize>,
    timer: usize,
    stack: Vec<(usize, usize)>,
    found: Vec<VertexSet>,
}

const UNSEEN: usize = usize::MAX;

impl Lowpoint<'_> {
    fn dfs(&mut self, u: usize, parent: usize) {
        self.disc[u] = self.timer;
        self.low[u] = self.timer;
        self.timer += 1;
        for w in self.g.neighbors(u).iter() {
            if self.disc[w] == UNSEEN {
                self.stack.push((u, w));
                self.dfs(w, u);
                self.low[u] = self.low[u].min(self.low[w]);
                if self.low[w] >= self.disc[u] {
                    let mut block = VertexSet::EMPTY;
                    while let Some((a, b)) = self.stack.pop() {
                        block.insert(a);
                        block.insert(b);
                        if (a, b) == (u, w) {
                            break;
                        }
                    }
                    self.found.push(block);
                }
            } else if w != parent && self.disc[w] < self.disc[u] {
                self.stack.push((u, w));
                self.low[u] = self.low[u].min(self.disc[w]);
            }
        }
    }
}

/// Decomposes `g` into blocks with the lowpoint DFS and an explicit edge stack.
pub fn block_decomposition(g: &Graph) -> BlockDecomposition {
    let n = g.order();
    let mut lp = Lowpoint {
        g,
        disc: vec![UNSEEN; n],
        low: vec![0; n],
        timer: 0,
        stack: Vec::new(),
        found: Vec::new(),
    };
    for v in 0..n {
        if lp.disc[v] == UNSEEN {
            lp.dfs(v, UNSEEN);
        }
    }
    let mut sets = lp.found;
    sets.sort_by_key(|s| (s.first(), s.len(), s.0));

    let mut seen_once = VertexSet::EMPTY;
    let mut cut_vertices = VertexSet::EMPTY;
    for s in &sets {
        cut_vertices = cut_vertices.union(seen_once.intersection(*s));
        seen_once = seen_once.union(*s);
    }
    let blocks: Vec<Block> = sets.into_iter().map(|vertices| Block { vertices, graph: g.induced(vertices) }).collect();
    let tree_edges = blocks
        .iter()
        .enumerate()
        .flat_map(|(i, b)| b.vertices.intersection(cut_vertices).iter().map(move |c| (i, c)))
        .collect();
    BlockDecomposition { cut_vertices, blocks, tree_edges }
}

/// Indices of blocks containing at most one cut vertex.
pub fn end_blocks(d: &BlockDecomposition) -> Vec<usize> {
    (0..d.blocks.len()).filter(|&i| d.cut_count(i) <= 1).collect()
}

/// Rebuilds `g` so that block `block_index` becomes an end-block while keeping
/// the same blocks, order, size and cycles.
///
/// A graph with a single block is returned unchanged. Otherwise the chosen
/// block keeps its labels and every other block is re-attached by its minimum
/// vertex to the minimum vertex of the chosen block; the remaining vertices of
/// those blocks take the free labels in ascending order, block by block.
pub fn block_leaf_transform(g: &Graph, block_index: usize) -> Result<Graph> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let d = block_decomposition(g);
    if block_index >= d.blocks.len() {
        return Err(Error::BlockIndex { index: block_index, count: d.blocks.len() });
    }
    if d.blocks.len() == 1 {
        return Ok(g.clone());
    }

    let keep = d.blocks[block_index].vertices;
    let hub = keep.first().expect("blocks are non-empty");
    let mut free = g.vertices().difference(keep).iter();
    let mut edges: Vec<(usize, usize)> = g.induced(keep).edges().map(|(a, b)| (nth(keep, a), nth(keep, b))).collect();

    for (i, block) in d.blocks.iter().enumerate() {
        if i == block_index {
            continue;
        }
        let members = block.vertices.to_vec();
        let relabel: Vec<usize> = members
            .iter()
            .enumerate()
            .map(|(j, _)| if j == 0 { hub } else { free.next().expect("label budget matches block count") })
            .collect();
        edges.extend(block.graph.edges().map(|(a, b)| (relabel[a], relabel[b])));
    }
    debug_assert!(free.next().is_none());
    Graph::from_edges(g.order(), edges)
}

/// The `i`-th smallest member of `s`.
fn nth(s: VertexSet, i: usize) -> usize {
    s.iter().nth(i).expect("index within set")
}
