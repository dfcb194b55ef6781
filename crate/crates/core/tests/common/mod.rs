//! Brute-force references shared by the integration suites.
#![allow(dead_code)]

use std::collections::BTreeSet;

use cyclespec::Graph;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

/// Cycle lengths by Hamiltonicity of every vertex subset: `hit[mask][v]` says a
/// path starts at the lowest vertex of `mask`, visits all of `mask`, and ends at `v`.
pub fn brute_spectrum(g: &Graph) -> Vec<usize> {
    let n = g.order();
    let adj: Vec<u64> = (0..n).map(|v| g.neighbors(v).0).collect();
    let mut hit = vec![0u64; 1 << n];
    let mut lengths = BTreeSet::new();
    for s in 0..n {
        hit[1 << s] = 1 << s;
    }
    for mask in 1usize..(1 << n) {
        let start = mask.trailing_zeros() as usize;
        let ends = hit[mask];
        if ends == 0 {
            continue;
        }
        for v in 0..n {
            if ends >> v & 1 == 0 {
                continue;
            }
            if mask.count_ones() >= 3 && adj[v] >> start & 1 == 1 {
                lengths.insert(mask.count_ones() as usize);
            }
            for w in (start + 1)..n {
                if mask >> w & 1 == 0 && adj[v] >> w & 1 == 1 {
                    hit[mask | 1 << w] |= 1 << w;
                }
            }
        }
    }
    lengths.into_iter().collect()
}

/// Largest minimum degree over all non-empty induced subgraphs.
pub fn brute_degeneracy(g: &Graph) -> usize {
    let n = g.order();
    let mut best = 0;
    for mask in 1u64..(1 << n) {
        let min_deg = (0..n)
            .filter(|&v| mask >> v & 1 == 1)
            .map(|v| (g.neighbors(v).0 & mask).count_ones() as usize)
            .min()
            .unwrap_or(0);
        best = best.max(min_deg);
    }
    best
}

/// Upper-triangle adjacency bits of `g` relabelled by `perm`.
fn code(g: &Graph, perm: &[usize]) -> u64 {
    let n = g.order();
    let mut c = 0u64;
    let mut bit = 0;
    for j in 1..n {
        for i in 0..j {
            if g.has_edge(perm[i], perm[j]) {
                c |= 1 << bit;
            }
            bit += 1;
        }
    }
    c
}

/// All permutations of `0..n` (Heap's algorithm).
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut p: Vec<usize> = (0..n).collect();
    let mut out = vec![p.clone()];
    let mut c = vec![0; n];
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                p.swap(0, i);
            } else {
                p.swap(c[i], i);
            }
            out.push(p.clone());
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    out
}

/// Least adjacency code over all relabellings.
pub fn brute_canonical(g: &Graph, perms: &[Vec<usize>]) -> u64 {
    perms.iter().map(|p| code(g, p)).min().unwrap_or(0)
}

/// Every labelled graph on `n` vertices.
pub fn labelled_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    (0u64..1 << pairs.len()).map(move |bits| {
        Graph::from_edges(n, pairs.iter().enumerate().filter(|(b, _)| bits >> b & 1 == 1).map(|(_, &e)| e)).unwrap()
    })
}

/// Number of isomorphism classes of graphs on `n` vertices by counting orbits
/// of the symmetric group on edge subsets.
pub fn burnside_count(n: usize) -> u64 {
    let perms = permutations(n);
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    let index = |a: usize, b: usize| pairs.iter().position(|&p| p == (a.min(b), a.max(b))).unwrap();
    let mut total: u64 = 0;
    for p in &perms {
        let image: Vec<usize> = pairs.iter().map(|&(a, b)| index(p[a], p[b])).collect();
        let mut seen = vec![false; pairs.len()];
        let mut cycles = 0;
        for s in 0..pairs.len() {
            if !seen[s] {
                cycles += 1;
                let mut t = s;
                while !seen[t] {
                    seen[t] = true;
                    t = image[t];
                }
            }
        }
        total += 1u64 << cycles;
    }
    total / perms.len() as u64
}

/// Uniform random graph on `n` vertices with edge probability `p`.
pub fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let edges: Vec<(usize, usize)> = (0..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    let keep: Vec<(usize, usize)> = edges.into_iter().filter(|_| rng.gen_bool(p)).collect();
    Graph::from_edges(n, keep).unwrap()
}

/// Random connected graph: a random tree plus independent extra edges.
pub fn random_connected(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for v in 1..n {
        edges.push((rng.gen_range(0..v), v));
    }
    for j in 0..n {
        for i in 0..j {
            if rng.gen_bool(p) {
                edges.push((i, j));
            }
        }
    }
    let perm = {
        let mut p: Vec<usize> = (0..n).collect();
        for i in (1..n).rev() {
            p.swap(i, rng.gen_range(0..=i));
        }
        p
    };
    Graph::from_edges(n, edges).unwrap().permuted(&perm).unwrap()
}
