//! Edge thresholds, the graphs `H(n,c,a) = K_a ∨ (K_{c-2a} ∪ (n-c+a)K_1)`, and
//! the extremal families for admissible cycles.

use std::fmt;

use serde::Serialize;

use crate::error::{domain, Result};
use crate::graph::Graph;
use crate::iso::isomorphic;

/// `C(m, 2)`.
pub fn choose2(m: usize) -> usize {
    m * m.saturating_sub(1) / 2
}

/// Which construction a family member comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum FamilyLabel {
    /// `K_1 ∨ (K_k ∪ K_{n-k-1})`.
    K1JoinTwoCliques,
    /// `K_{k,n-k}`.
    CompleteBipartite,
    /// `K_{(k+1)/2} ∨ bK_1`, `k` odd.
    HalfCliqueJoinEmpty,
    /// Any tree (only for `k = 1`).
    Tree,
    /// `H(n,c,a)`.
    KopylovH,
    /// Member of the exception list for "all lengths `3..=k+2`".
    #[serde(rename = "LEMMA4_EXC")]
    ShortCycleException,
    /// Member of the exception list for "all lengths `3..=n/2+2`".
    #[serde(rename = "T2_EXC")]
    MantelException,
    /// `K_1 ∨ qK_{c-2}`, the cliques-at-a-vertex graph for long cycles.
    CliquesAtVertex,
    /// Connected with every block `K_{2k+1}`.
    CliqueBlocks,
}

impl FamilyLabel {
    pub fn as_str(self) -> &'static str {
        match self {
            FamilyLabel::K1JoinTwoCliques => "K1_JOIN_TWO_CLIQUES",
            FamilyLabel::CompleteBipartite => "COMPLETE_BIPARTITE",
            FamilyLabel::HalfCliqueJoinEmpty => "HALF_CLIQUE_JOIN_EMPTY",
            FamilyLabel::Tree => "TREE",
            FamilyLabel::KopylovH => "KOPYLOV_H",
            FamilyLabel::ShortCycleException => "LEMMA4_EXC",
            FamilyLabel::MantelException => "T2_EXC",
            FamilyLabel::CliquesAtVertex => "CLIQUES_AT_VERTEX",
            FamilyLabel::CliqueBlocks => "CLIQUE_BLOCKS",
        }
    }
}

impl fmt::Display for FamilyLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Integers instantiating a construction.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct FamilyParams {
    pub n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub c: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub a: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub b: Option<usize>,
}

/// A labelled extremal construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyMember {
    pub label: FamilyLabel,
    pub params: FamilyParams,
    pub graph: Graph,
}

/// `H(n,c,a)` together with its parameters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KopylovGraph {
    pub n: usize,
    pub c: usize,
    pub a: usize,
    pub graph: Graph,
}

/// Edge threshold forcing `k` admissible cycles on `n` vertices:
/// `C(k+1,2) + C(n-k,2)` for `k+2 <= n <= 2k+1`, and `k(n-k)` for `n >= 2k+2`.
pub fn f_threshold(n: usize, k: usize) -> Result<usize> {
    if k < 1 || n < k + 2 {
        return domain(format!("threshold needs k >= 1 and n >= k+2, got n={n}, k={k}"));
    }
    Ok(if n <= 2 * k + 1 { choose2(k + 1) + choose2(n - k) } else { k * (n - k) })
}

/// `C(k+1,2) + C(n-k,2)` without the range restriction on `n`.
pub fn two_clique_threshold(n: usize, k: usize) -> usize {
    choose2(k + 1) + choose2(n.saturating_sub(k))
}

fn check_kopylov(n: usize, c: usize, a: usize) -> Result<()> {
    if !(c >= 4 && n >= c && a >= 1 && 2 * a < c) {
        return domain(format!("H(n,c,a) needs n >= c >= 4 and 1 <= a < c/2, got n={n}, c={c}, a={a}"));
    }
    Ok(())
}

/// `e(H(n,c,a)) = C(c-a,2) + (n-c+a)a`.
pub fn g_value(n: usize, c: usize, a: usize) -> Result<usize> {
    check_kopylov(n, c, a)?;
    Ok(choose2(c - a) + (n - c + a) * a)
}

/// Builds `H(n,c,a) = K_a ∨ (K_{c-2a} ∪ (n-c+a)K_1)`.
pub fn construct_h(n: usize, c: usize, a: usize) -> Result<KopylovGraph> {
    check_kopylov(n, c, a)?;
    let rest = Graph::complete(c - 2 * a)?.disjoint_union(&Graph::empty(n - c + a)?)?;
    let graph = Graph::complete(a)?.join(&rest)?;
    Ok(KopylovGraph { n, c, a, graph })
}

/// `K_1 ∨ (K_p ∪ K_q)`.
pub fn k1_join_two_cliques(p: usize, q: usize) -> Result<Graph> {
    Graph::complete(1)?.join(&Graph::complete(p)?.disjoint_union(&Graph::complete(q)?)?)
}

/// `K_1 ∨ qK_m`.
pub fn cliques_at_vertex(q: usize, m: usize) -> Result<Graph> {
    Graph::complete(1)?.join(&Graph::complete(m)?.copies(q)?)
}

/// Whether `g` is `K_1 ∨ qK_m` for some `q`, decided from its structure so
/// that no order limit applies.
pub fn is_cliques_at_vertex(g: &Graph, m: usize) -> bool {
    let n = g.order();
    if m == 0 || n == 0 || !(n - 1).is_multiple_of(m) {
        return false;
    }
    (0..n).filter(|&v| g.degree(v) == n - 1).any(|v| {
        let rest = g.delete_vertices(&[v]).expect("vertex in range");
        rest.components().iter().all(|c| c.len() == m && c.iter().all(|u| rest.degree(u) == m - 1))
    })
}

/// `K_a ∨ bK_1`.
pub fn clique_join_empty(a: usize, b: usize) -> Result<Graph> {
    Graph::complete(a)?.join(&Graph::empty(b)?)
}

fn check_family_domain(n: usize, k: usize) -> Result<()> {
    if k < 1 || n < k + 2 {
        return domain(format!("family needs k >= 1 and n >= k+2, got n={n}, k={k}"));
    }
    Ok(())
}

/// Every construction of the extremal family at `(n, k)`, before deduplication.
fn family_constructions(n: usize, k: usize) -> Result<Vec<FamilyMember>> {
    check_family_domain(n, k)?;
    let base = FamilyParams { n, k: Some(k), ..Default::default() };
    let mut out = Vec::new();
    if k == 1 {
        out.push(FamilyMember { label: FamilyLabel::Tree, params: base, graph: Graph::path(n)? });
        return Ok(out);
    }
    if n <= 2 * k + 1 {
        out.push(FamilyMember {
            label: FamilyLabel::K1JoinTwoCliques,
            params: base,
            graph: k1_join_two_cliques(k, n - k - 1)?,
        });
    }
    if k >= 3 && k % 2 == 1 {
        let a = k.div_ceil(2);
        for b in [k, k + 1] {
            if a + b == n {
                out.push(FamilyMember {
                    label: FamilyLabel::HalfCliqueJoinEmpty,
                    params: FamilyParams { a: Some(a), b: Some(b), ..base },
                    graph: clique_join_empty(a, b)?,
                });
            }
        }
    }
    if n >= 2 * k {
        out.push(FamilyMember {
            label: FamilyLabel::CompleteBipartite,
            params: FamilyParams { a: Some(k), b: Some(n - k), ..base },
            graph: Graph::complete_bipartite(k, n - k)?,
        });
    }
    Ok(out)
}

/// Members of the extremal family at `(n, k)`, deduplicated up to isomorphism.
/// For `k = 1` the single entry is a path standing in for all trees.
pub fn family_members(n: usize, k: usize) -> Result<Vec<FamilyMember>> {
    dedup_members(family_constructions(n, k)?)
}

fn dedup_members(all: Vec<FamilyMember>) -> Result<Vec<FamilyMember>> {
    let mut out: Vec<FamilyMember> = Vec::with_capacity(all.len());
    for m in all {
        let mut dup = false;
        for kept in &out {
            if same_graph(&kept.graph, &m.graph)? {
                dup = true;
                break;
            }
        }
        if !dup {
            out.push(m);
        }
    }
    Ok(out)
}

/// Isomorphism with a shortcut for labelled equality, so large identical
/// constructions do not trip the isomorphism guard.
fn same_graph(a: &Graph, b: &Graph) -> Result<bool> {
    if a == b {
        return Ok(true);
    }
    if a.order() != b.order() || a.size() != b.size() || a.degree_sequence() != b.degree_sequence() {
        return Ok(false);
    }
    isomorphic(a, b)
}

/// Labels of every family construction at `(|g|, k)` isomorphic to `g`.
/// For `k = 1` the tree label applies to every tree.
pub fn is_extremal_member(g: &Graph, k: usize) -> Result<Vec<FamilyLabel>> {
    let n = g.order();
    check_family_domain(n, k)?;
    if k == 1 {
        return Ok(if g.is_tree() { vec![FamilyLabel::Tree] } else { Vec::new() });
    }
    let mut labels = Vec::new();
    for m in family_constructions(n, k)? {
        if isomorphic(g, &m.graph)? && !labels.contains(&m.label) {
            labels.push(m.label);
        }
    }
    Ok(labels)
}

/// Exceptions to "at least `C(k+1,2)+C(n-k,2)` edges on `k+2 <= n <= 2k+1`
/// vertices force every cycle length `3..=k+2`".
pub fn lemma4_exceptions(n: usize, k: usize) -> Result<Vec<FamilyMember>> {
    if !(k >= 1 && n >= k + 2 && n <= 2 * k + 1) {
        return domain(format!("exception list needs 3 <= k+2 <= n <= 2k+1, got n={n}, k={k}"));
    }
    let base = FamilyParams { n, k: Some(k), ..Default::default() };
    let mut out = vec![FamilyMember {
        label: FamilyLabel::K1JoinTwoCliques,
        params: base,
        graph: k1_join_two_cliques(k, n - k - 1)?,
    }];
    if n == 2 * k || n == 2 * k + 1 {
        out.push(FamilyMember {
            label: FamilyLabel::CompleteBipartite,
            params: FamilyParams { a: Some(k), b: Some(n - k), ..base },
            graph: Graph::complete_bipartite(k, n - k)?,
        });
    }
    if k >= 3 && k % 2 == 1 && (2 * n == 3 * k + 1 || 2 * n == 3 * k + 3) {
        let (c, a) = (k + 2, k.div_ceil(2));
        out.push(FamilyMember {
            label: FamilyLabel::KopylovH,
            params: FamilyParams { c: Some(c), a: Some(a), ..base },
            graph: construct_h(n, c, a)?.graph,
        });
    }
    dedup_members(out)
}

/// Exceptions to "at least `⌊n²/4⌋` edges force every cycle length `3..=⌊n/2⌋+2`".
pub fn t2_exceptions(n: usize) -> Result<Vec<Graph>> {
    if n < 3 {
        return domain(format!("exception list needs n >= 3, got {n}"));
    }
    let mut out = vec![
        Graph::complete_bipartite(n.div_ceil(2), n / 2)?,
        k1_join_two_cliques((n - 1).div_ceil(2), (n - 1) / 2)?,
    ];
    if n == 6 {
        out.push(clique_join_empty(2, 4)?);
    }
    let mut unique: Vec<Graph> = Vec::with_capacity(out.len());
    for g in out {
        let mut dup = false;
        for u in &unique {
            dup |= same_graph(u, &g)?;
        }
        if !dup {
            unique.push(g);
        }
    }
    Ok(unique)
}

/// `⌊n²/4⌋`.
pub fn mantel_bound(n: usize) -> usize {
    n * n / 4
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::blocks::block_decomposition;
    use crate::spectrum::{cycle_spectrum, find_admissible};

    #[test]
    fn thresholds() {
        assert_eq!(f_threshold(5, 2).unwrap(), 6);
        assert_eq!(f_threshold(8, 1).unwrap(), 7);
        assert_eq!(f_threshold(6, 3).unwrap(), 9);
        assert_eq!(f_threshold(7, 3).unwrap(), 12);
        assert_eq!(f_threshold(10, 3).unwrap(), 21);
        assert!(f_threshold(4, 3).is_err());
        assert!(f_threshold(4, 0).is_err());
        for k in 1..12 {
            if k >= 2 {
                assert_eq!(f_threshold(2 * k, k).unwrap(), mantel_bound(2 * k));
            }
            assert_eq!(f_threshold(2 * k + 1, k).unwrap(), mantel_bound(2 * k + 1));
        }
        for n in 3..40 {
            assert_eq!(f_threshold(n, 1).unwrap(), n - 1);
        }
        assert_eq!(mantel_bound(4), 4);
        assert_eq!(mantel_bound(7), 12);
    }

    #[test]
    fn cliques_at_vertex_recognition() {
        for m in 1..6 {
            for q in 1..5 {
                let g = cliques_at_vertex(q, m).unwrap();
                assert!(is_cliques_at_vertex(&g, m));
                let shuffled: Vec<usize> = (0..g.order()).rev().collect();
                assert!(is_cliques_at_vertex(&g.permuted(&shuffled).unwrap(), m));
                if m > 1 {
                    assert!(!is_cliques_at_vertex(&g.without_edge(1, 2).unwrap(), m));
                }
            }
        }
        assert!(!is_cliques_at_vertex(&Graph::cycle(5).unwrap(), 2));
        assert!(!is_cliques_at_vertex(&Graph::path(5).unwrap(), 1));
    }

    #[test]
    fn kopylov_values() {
        assert_eq!(g_value(6, 5, 2).unwrap(), 9);
        assert_eq!(construct_h(6, 5, 2).unwrap().graph.size(), 9);
        assert_eq!(g_value(7, 5, 2).unwrap(), choose2(3) + 2 * (7 - 3));
        assert_eq!(g_value(7, 5, 2).unwrap(), 11);
        assert_eq!(g_value(5, 5, 1).unwrap(), 7);
        assert!(g_value(5, 6, 2).is_err());
        assert!(g_value(6, 6, 3).is_err());
        assert!(g_value(6, 3, 1).is_err());
        assert!(g_value(6, 5, 0).is_err());
    }

    #[test]
    fn kopylov_constructions() {
        let h = construct_h(6, 5, 2).unwrap().graph;
        assert!(isomorphic(&h, &clique_join_empty(2, 4).unwrap()).unwrap());
        let h = construct_h(8, 7, 3).unwrap().graph;
        assert!(isomorphic(&h, &clique_join_empty(3, 5).unwrap()).unwrap());
        let h = construct_h(9, 6, 2).unwrap().graph;
        assert_eq!(cycle_spectrum(&h).circumference(), Some(5));
        assert_eq!(block_decomposition(&h).blocks.len(), 1);
    }

    fn labels(ms: &[FamilyMember]) -> Vec<FamilyLabel> {
        ms.iter().map(|m| m.label).collect()
    }

    #[test]
    fn members_at_fixed_parameters() {
        use FamilyLabel::*;
        let m = family_members(10, 3).unwrap();
        assert_eq!(labels(&m), vec![CompleteBipartite]);
        assert_eq!(m[0].graph, Graph::complete_bipartite(3, 7).unwrap());

        let m = family_members(6, 3).unwrap();
        assert_eq!(labels(&m), vec![K1JoinTwoCliques, HalfCliqueJoinEmpty, CompleteBipartite]);
        assert!(isomorphic(&m[1].graph, &clique_join_empty(2, 4).unwrap()).unwrap());

        // b = k gives K_2 ∨ 3K_1 at n = 5 as well.
        let m = family_members(5, 3).unwrap();
        assert_eq!(labels(&m), vec![K1JoinTwoCliques, HalfCliqueJoinEmpty]);
        assert_eq!(m[0].graph, k1_join_two_cliques(3, 1).unwrap());

        let m = family_members(7, 1).unwrap();
        assert_eq!(labels(&m), vec![Tree]);
    }

    #[test]
    fn membership_recognition() {
        use FamilyLabel::*;
        let k33 = Graph::complete_bipartite(3, 3).unwrap();
        assert_eq!(is_extremal_member(&k33, 3).unwrap(), vec![CompleteBipartite]);
        assert_eq!(is_extremal_member(&Graph::path(7).unwrap(), 1).unwrap(), vec![Tree]);
        let star = Graph::complete_bipartite(1, 6).unwrap();
        assert_eq!(is_extremal_member(&star, 1).unwrap(), vec![Tree]);
        assert!(is_extremal_member(&Graph::complete(5).unwrap(), 3).unwrap().is_empty());
        assert!(is_extremal_member(&Graph::empty(17).unwrap(), 3).is_err());
    }

    #[test]
    fn exception_lists() {
        use FamilyLabel::*;
        let e = lemma4_exceptions(6, 4).unwrap();
        assert_eq!(labels(&e), vec![K1JoinTwoCliques]);
        assert_eq!(e[0].graph, k1_join_two_cliques(4, 1).unwrap());
        let e = lemma4_exceptions(8, 5).unwrap();
        assert_eq!(labels(&e), vec![K1JoinTwoCliques, KopylovH]);
        assert_eq!(e[1].graph, construct_h(8, 7, 3).unwrap().graph);
        let e = lemma4_exceptions(7, 3).unwrap();
        assert_eq!(labels(&e), vec![K1JoinTwoCliques, CompleteBipartite]);
        assert!(lemma4_exceptions(9, 3).is_err());

        let t = t2_exceptions(6).unwrap();
        assert_eq!(t.len(), 3);
        assert!(isomorphic(&t[2], &clique_join_empty(2, 4).unwrap()).unwrap());
        assert_eq!(t2_exceptions(7).unwrap(), vec![Graph::complete_bipartite(4, 3).unwrap(), k1_join_two_cliques(3, 3).unwrap()]);
        assert_eq!(t2_exceptions(4).unwrap(), vec![Graph::complete_bipartite(2, 2).unwrap(), k1_join_two_cliques(2, 1).unwrap()]);
        assert_eq!(t2_exceptions(3).unwrap().len(), 1);
    }

    #[test]
    fn exceptions_sit_on_threshold_and_miss_a_length() {
        for k in 1..=6 {
            for n in k + 2..=2 * k + 1 {
                for m in lemma4_exceptions(n, k).unwrap() {
                    assert_eq!(m.graph.size(), two_clique_threshold(n, k));
                    let s = cycle_spectrum(&m.graph);
                    assert!(!s.contains_range(3, k + 2), "{:?} at n={n} k={k}", m.label);
                }
            }
        }
    }

    #[test]
    fn members_lack_k_admissible_cycles() {
        for k in 1..=5 {
            for n in k + 2..=14 {
                for m in family_members(n, k).unwrap() {
                    assert_eq!(m.graph.size(), f_threshold(n, k).unwrap());
                    let s = cycle_spectrum(&m.graph);
                    assert_eq!(find_admissible(&s, k).unwrap(), None);
                }
            }
        }
    }
}
